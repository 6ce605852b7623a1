#include "qseries.hpp"

#include <numeric>

#include "ff.hpp"

namespace scholl {

namespace {

// Generalized pentagonal numbers below n with the sign of their term in
// prod (1 - q^k), excluding the constant term.
std::vector<std::pair<long long, int>> pentagonal_terms(long long n) {
    std::vector<std::pair<long long, int>> t;
    for (long long k = 1;; ++k) {
        long long a = k * (3 * k - 1) / 2, b = k * (3 * k + 1) / 2;
        if (a >= n) break;
        int s = k % 2 ? -1 : 1;
        t.push_back({a, s});
        if (b < n) t.push_back({b, s});
    }
    return t;
}

// c <- c * prod(1 - q^{m k})^{e}, in place, integer coefficients.
void apply_euler(std::vector<mpz_class>& c, int m, int e) {
    long long n = (long long)c.size();
    auto pt = pentagonal_terms((n + m - 1) / m);
    for (int rep = 0; rep < std::abs(e); ++rep) {
        if (e > 0) {
            for (long long j = n - 1; j > 0; --j)
                for (auto [g, s] : pt) {
                    long long d = g * m;
                    if (d > j) break;
                    if (s > 0) c[j] += c[j - d];
                    else c[j] -= c[j - d];
                }
        } else {
            for (long long j = 1; j < n; ++j)
                for (auto [g, s] : pt) {
                    long long d = g * m;
                    if (d > j) break;
                    if (s > 0) c[j] -= c[j - d];
                    else c[j] += c[j - d];
                }
        }
    }
}

void apply_euler_mod(std::vector<uint64_t>& c, int m, int e, uint64_t M) {
    long long n = (long long)c.size();
    auto pt = pentagonal_terms((n + m - 1) / m);
    auto addm = [M](uint64_t a, uint64_t b) { uint64_t r = a + b; return r >= M ? r - M : r; };
    auto subm = [M](uint64_t a, uint64_t b) { return a >= b ? a - b : a + M - b; };
    for (int rep = 0; rep < std::abs(e); ++rep) {
        if (e > 0) {
            for (long long j = n - 1; j > 0; --j)
                for (auto [g, s] : pt) {
                    long long d = g * m;
                    if (d > j) break;
                    c[j] = s > 0 ? addm(c[j], c[j - d]) : subm(c[j], c[j - d]);
                }
        } else {
            for (long long j = 1; j < n; ++j)
                for (auto [g, s] : pt) {
                    long long d = g * m;
                    if (d > j) break;
                    c[j] = s > 0 ? subm(c[j], c[j - d]) : addm(c[j], c[j - d]);
                }
        }
    }
}

// Cube root of 1 + O(q) mod M via r^3 = r * r^2, dividing only by 3.
std::vector<uint64_t> cube_root_mod(const std::vector<uint64_t>& s, uint64_t M) {
    size_t n = s.size();
    std::vector<uint64_t> r(n, 0), u(n, 0);
    if (!n) return r;
    r[0] = u[0] = 1;
    uint64_t inv3 = (uint64_t)mod_inverse(3, (int64_t)M);
    using u128 = unsigned __int128;
    const bool lazy = M < (1ull << 48);
    for (size_t k = 1; k < n; ++k) {
        u128 A = 0, B = 0;
        for (size_t j = 1; j < k; ++j) {
            A += (u128)r[j] * r[k - j];
            B += (u128)r[j] * u[k - j];
            if (!lazy) { A %= M; B %= M; }
        }
        uint64_t a = (uint64_t)(A % M), b = (uint64_t)(B % M);
        uint64_t t = (s[k] + 2 * M - a - b) % M;
        r[k] = (uint64_t)((u128)t * inv3 % M);
        u[k] = (uint64_t)((2 * (u128)r[k] + a) % M);
    }
    return r;
}

}  // namespace

bool FracSeries::is_zero() const {
    for (auto& x : c)
        if (x != 0) return false;
    return true;
}

mpq_class FracSeries::at(long long num) const {
    if (num < start) return 0;
    if (num >= end()) throw Error(Error::Capacity, "coefficient of q^(" + std::to_string(num) + "/" + std::to_string(N) + ") is beyond the known precision");
    return c[num - start];
}

bool FracSeries::is_integral() const {
    for (auto& x : c)
        if (x.get_den() != 1) return false;
    return true;
}

bool FracSeries::three_integral() const {
    for (auto& x : c) {
        mpz_class d = x.get_den();
        while (d % 3 == 0) d /= 3;
        if (d != 1) return false;
    }
    return true;
}

FracSeries series_from_ints(const std::vector<long long>& c, int N, long long start) {
    FracSeries s;
    s.N = N;
    s.start = start;
    for (auto v : c) s.c.push_back(mpq_class((long)v));
    return s;
}

FracSeries normalize(const FracSeries& s) {
    size_t lead = 0;
    while (lead < s.c.size() && s.c[lead] == 0) ++lead;
    if (lead == s.c.size()) return s;
    FracSeries t;
    long long start = s.start + (long long)lead;
    long long g = std::gcd((long long)s.N, std::llabs(start));
    for (size_t k = lead; k < s.c.size() && g > 1; ++k)
        if (s.c[k] != 0) g = std::gcd(g, (long long)(k - lead));
    if (g == 0) g = s.N;
    size_t len = s.c.size() - lead;
    t.N = s.N / (int)g;
    t.start = start / g;
    t.c.resize((len + g - 1) / g);
    for (size_t k = 0; k < t.c.size(); ++k) t.c[k] = s.c[lead + k * g];
    return t;
}

FracSeries refine(const FracSeries& s, int M) {
    if (M % s.N) throw Error(Error::Domain, "refine: new denominator must be a multiple");
    int t = M / s.N;
    if (t == 1) return s;
    FracSeries r;
    r.N = M;
    r.start = s.start * t;
    r.c.assign(s.c.size() * t, 0);
    for (size_t k = 0; k < s.c.size(); ++k) r.c[k * t] = s.c[k];
    return r;
}

namespace {

FracSeries add_signed(const FracSeries& a0, const FracSeries& b0, int sign) {
    int M = std::lcm(a0.N, b0.N);
    FracSeries a = refine(a0, M), b = refine(b0, M);
    FracSeries r;
    r.N = M;
    r.start = std::min(a.start, b.start);
    long long end = std::min(a.end(), b.end());
    if (end < r.start) end = r.start;
    r.c.assign(end - r.start, 0);
    for (long long e = r.start; e < end; ++e) {
        mpq_class v = 0;
        if (e >= a.start) v += a.c[e - a.start];
        if (e >= b.start) v += sign * b.c[e - b.start];
        r.c[e - r.start] = v;
    }
    return r;
}

}  // namespace

FracSeries operator+(const FracSeries& a, const FracSeries& b) { return add_signed(a, b, 1); }
FracSeries operator-(const FracSeries& a, const FracSeries& b) { return add_signed(a, b, -1); }

FracSeries operator*(const FracSeries& a0, const FracSeries& b0) {
    int M = std::lcm(a0.N, b0.N);
    FracSeries a = refine(a0, M), b = refine(b0, M);
    FracSeries r;
    r.N = M;
    r.start = a.start + b.start;
    size_t len = std::min(a.c.size(), b.c.size());
    r.c.assign(len, 0);
    for (size_t i = 0; i < len; ++i) {
        if (a.c[i] == 0) continue;
        for (size_t j = 0; i + j < len; ++j)
            if (b.c[j] != 0) r.c[i + j] += a.c[i] * b.c[j];
    }
    return r;
}

FracSeries operator*(const FracSeries& a, const mpq_class& s) {
    FracSeries r = a;
    for (auto& x : r.c) x *= s;
    return r;
}

FracSeries inverse(const FracSeries& a0) {
    FracSeries a = normalize(a0);
    if (a.c.empty() || a.c[0] == 0) throw Error(Error::Domain, "series is zero to known precision");
    FracSeries r;
    r.N = a.N;
    r.start = -a.start;
    r.c.assign(a.c.size(), 0);
    mpq_class i0 = 1 / a.c[0];
    r.c[0] = i0;
    for (size_t k = 1; k < a.c.size(); ++k) {
        mpq_class s = 0;
        for (size_t j = 1; j <= k; ++j)
            if (a.c[j] != 0) s += a.c[j] * r.c[k - j];
        r.c[k] = -s * i0;
    }
    return r;
}

FracSeries power(const FracSeries& a, int e) {
    if (e < 0) return power(inverse(a), -e);
    FracSeries r;
    r.N = a.N;
    r.start = 0;
    r.c.assign(a.c.size(), 0);
    if (!r.c.empty()) r.c[0] = 1;
    FracSeries b = a;
    while (e) {
        if (e & 1) r = r * b;
        e >>= 1;
        if (e) b = b * b;
    }
    return r;
}

FracSeries rescale(const FracSeries& s, int m) {
    if (m < 1) throw Error(Error::Domain, "rescale factor must be positive");
    FracSeries r;
    r.N = s.N;
    r.start = s.start * m;
    r.c.assign(s.c.size() * m, 0);
    for (size_t k = 0; k < s.c.size(); ++k) r.c[k * m] = s.c[k];
    return r;
}

FracSeries series_nth_root(const FracSeries& s0, int k) {
    if (k < 2) throw Error(Error::Domain, "root index must be at least 2");
    FracSeries s = normalize(s0);
    if (s.c.empty() || s.c[0] != 1) throw Error(Error::Domain, "leading coefficient must be 1");
    size_t n = s.c.size();
    std::vector<mpq_class> r(n, 0);
    r[0] = 1;
    mpq_class alpha(1, k);
    for (size_t j = 1; j < n; ++j) {
        mpq_class acc = 0;
        for (size_t i = 1; i <= j; ++i)
            if (s.c[i] != 0) acc += ((alpha + 1) * (long)i - (long)j) * s.c[i] * r[j - i];
        r[j] = acc / (long)j;
    }
    FracSeries t;
    t.N = s.N * k;
    t.start = s.start;
    t.c.assign(n * k, 0);
    for (size_t j = 0; j < n; ++j) t.c[j * k] = r[j];
    return normalize(t);
}

FracSeries eta_quotient(const std::vector<std::pair<int, int>>& spec, int prec) {
    if (prec < 1) throw Error(Error::Domain, "prec must be positive");
    std::vector<mpz_class> c(prec, 0);
    c[0] = 1;
    long long lead = 0;
    for (auto [m, e] : spec) {
        if (m < 1) throw Error(Error::Domain, "eta argument must be positive");
        apply_euler(c, m, e);
        lead += (long long)m * e;
    }
    FracSeries s;
    s.N = 24;
    s.start = lead;
    s.c.assign((size_t)prec * 24, 0);
    for (int k = 0; k < prec; ++k) s.c[(size_t)k * 24] = mpq_class(c[k]);
    return normalize(s);
}

FracSeries e2_series(int prec) {
    FracSeries s;
    s.N = 1;
    s.start = 0;
    s.c.assign(prec, 0);
    if (prec > 0) s.c[0] = 1;
    for (int n = 1; n < prec; ++n) {
        long sig = 0;
        for (int d = 1; d * d <= n; ++d)
            if (n % d == 0) sig += d + (d * d != n ? n / d : 0);
        s.c[n] = -24 * sig;
    }
    return s;
}

std::pair<FracSeries, FracSeries> weight4_basis(int prec) {
    auto s1 = eta_quotient({{2, 48}, {1, -8}, {4, -16}}, prec);
    auto s2 = eta_quotient({{2, 48}, {1, -16}, {4, -8}}, prec);
    return {series_nth_root(s1, 3), series_nth_root(s2, 3)};
}

std::pair<FracSeries, FracSeries> eigenforms_g(int prec) {
    if (prec < 1) throw Error(Error::Domain, "prec must be positive");
    int pq = prec / 6 + 3;
    auto e2 = e2_series(pq);
    auto h = rescale(e2, 3) * mpq_class(3) - e2;  // constant term 2
    auto g1 = eta_quotient({{1, 4}}, pq) * h * mpq_class(1, 2);
    auto g5 = eta_quotient({{1, 2}, {3, 6}}, pq);
    auto g1_3 = rescale(g1, 3), g5_3 = rescale(g5, 3);
    auto build = [&](int sgn) {
        mpq_class k(18 * sgn);
        auto g = g1 + g5 * k + (g1_3 + g5_3 * k) * mpq_class(3);
        auto r = normalize(rescale(g, 6));
        if (r.N != 1) throw Error(Error::Consistency, "g(6z) has non-integral exponents");
        if ((long long)r.c.size() + r.start > prec) r.c.resize(std::max<long long>(0, prec - r.start));
        return r;
    };
    return {build(1), build(-1)};
}

uint64_t ModCoeffs::at(uint64_t m) const {
    if (m > limit) throw Error(Error::Capacity, "coefficient index " + std::to_string(m) + " is beyond the expansion (max " + std::to_string(limit) + ")");
    if (m < 1 || m % 3 != (uint64_t)res) return 0;
    return r[(m - res) / 3];
}

std::pair<ModCoeffs, ModCoeffs> weight4_mod(uint64_t M, uint64_t max_index) {
    if (M < 2 || M % 2 == 0 || M % 3 == 0 || M >= (1ull << 62))
        throw Error(Error::Domain, "modulus must be odd, prime to 3 and below 2^62");
    size_t n = max_index >= 1 ? (size_t)((max_index - 1) / 3 + 1) : 1;
    auto body = [&](int e1, int e4) {
        std::vector<uint64_t> c(n, 0);
        c[0] = 1 % M;
        apply_euler_mod(c, 2, 48, M);
        apply_euler_mod(c, 1, e1, M);
        apply_euler_mod(c, 4, e4, M);
        return cube_root_mod(c, M);
    };
    ModCoeffs a1, a2;
    a1.M = a2.M = M;
    a1.limit = a2.limit = max_index;
    a1.res = 1;
    a2.res = 2;
    a1.r = body(-8, -16);
    a2.r = body(-16, -8);
    size_t n2 = max_index >= 2 ? (size_t)((max_index - 2) / 3 + 1) : 0;
    a2.r.resize(std::min(n2, a2.r.size()));
    return {a1, a2};
}

}  // namespace scholl
