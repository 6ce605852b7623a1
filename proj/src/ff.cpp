#include "ff.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <numeric>
#include <random>

namespace scholl {

uint64_t mulmod_u64(uint64_t a, uint64_t b, uint64_t m) {
    return (uint64_t)((unsigned __int128)a * b % m);
}

uint64_t powmod_u64(uint64_t b, uint64_t e, uint64_t m) {
    uint64_t r = 1 % m;
    b %= m;
    while (e) {
        if (e & 1) r = mulmod_u64(r, b, m);
        b = mulmod_u64(b, b, m);
        e >>= 1;
    }
    return r;
}

bool is_prime(uint64_t n) {
    if (n < 2) return false;
    for (uint64_t sp : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
        if (n % sp == 0) return n == sp;
    }
    uint64_t d = n - 1;
    int s = 0;
    while ((d & 1) == 0) { d >>= 1; ++s; }
    for (uint64_t a : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
        uint64_t x = powmod_u64(a, d, n);
        if (x == 1 || x == n - 1) continue;
        bool comp = true;
        for (int r = 1; r < s; ++r) {
            x = mulmod_u64(x, x, n);
            if (x == n - 1) { comp = false; break; }
        }
        if (comp) return false;
    }
    return true;
}

std::vector<uint64_t> prime_factors(uint64_t n) {
    std::vector<uint64_t> out;
    for (uint64_t d = 2; d * d <= n; ++d) {
        if (n % d == 0) {
            out.push_back(d);
            while (n % d == 0) n /= d;
        }
    }
    if (n > 1) out.push_back(n);
    return out;
}

int64_t mod_inverse(int64_t a, int64_t m) {
    int64_t g = m, x = 0, x1 = 1, a1 = ((a % m) + m) % m;
    while (a1) {
        int64_t t = g / a1;
        g -= t * a1; std::swap(g, a1);
        x -= t * x1; std::swap(x, x1);
    }
    if (g != 1) throw Error(Error::Domain, "value not invertible modulo " + std::to_string(m));
    return ((x % m) + m) % m;
}

int multiplicative_order(uint64_t a, uint64_t n) {
    if (n == 1) return 1;
    if (std::gcd(a % n, n) != 1) throw Error(Error::Domain, "order undefined: gcd != 1");
    uint64_t x = a % n;
    int k = 1;
    while (x != 1) { x = mulmod_u64(x, a, n); ++k; }
    return k;
}

// ---------------------------------------------------------------------------
namespace poly {

void trim(Poly& a) {
    while (!a.empty() && a.back() == 0) a.pop_back();
}

int deg(const Poly& a) { return (int)a.size() - 1; }

Poly add(const Poly& a, const Poly& b, uint64_t p) {
    Poly r(std::max(a.size(), b.size()), 0);
    for (size_t i = 0; i < r.size(); ++i) {
        uint64_t x = i < a.size() ? a[i] : 0, y = i < b.size() ? b[i] : 0;
        r[i] = (x + y) % p;
    }
    trim(r);
    return r;
}

Poly sub(const Poly& a, const Poly& b, uint64_t p) {
    Poly r(std::max(a.size(), b.size()), 0);
    for (size_t i = 0; i < r.size(); ++i) {
        uint64_t x = i < a.size() ? a[i] : 0, y = i < b.size() ? b[i] : 0;
        r[i] = (x + p - y) % p;
    }
    trim(r);
    return r;
}

Poly mul(const Poly& a, const Poly& b, uint64_t p) {
    if (a.empty() || b.empty()) return {};
    Poly r(a.size() + b.size() - 1, 0);
    for (size_t i = 0; i < a.size(); ++i) {
        if (!a[i]) continue;
        for (size_t j = 0; j < b.size(); ++j) r[i + j] = (r[i + j] + mulmod_u64(a[i], b[j], p)) % p;
    }
    trim(r);
    return r;
}

Poly scale(const Poly& a, uint64_t c, uint64_t p) {
    Poly r(a.size());
    for (size_t i = 0; i < a.size(); ++i) r[i] = mulmod_u64(a[i], c % p, p);
    trim(r);
    return r;
}

void divmod(const Poly& a, const Poly& b, uint64_t p, Poly& quo, Poly& rem) {
    if (b.empty()) throw Error(Error::Domain, "polynomial division by zero");
    rem = a;
    trim(rem);
    int db = deg(b);
    uint64_t lead_inv = (uint64_t)mod_inverse((int64_t)b.back(), (int64_t)p);
    if (deg(rem) < db) { quo.clear(); return; }
    quo.assign(rem.size() - b.size() + 1, 0);
    for (int i = deg(rem); i >= db; --i) {
        uint64_t c = mulmod_u64(rem[i], lead_inv, p);
        quo[i - db] = c;
        if (!c) continue;
        for (int j = 0; j <= db; ++j) rem[i - db + j] = (rem[i - db + j] + p - mulmod_u64(c, b[j], p)) % p;
    }
    trim(rem);
    trim(quo);
}

Poly mod(const Poly& a, const Poly& b, uint64_t p) {
    Poly q, r;
    divmod(a, b, p, q, r);
    return r;
}

Poly monic(const Poly& a, uint64_t p) {
    if (a.empty()) return a;
    return scale(a, (uint64_t)mod_inverse((int64_t)a.back(), (int64_t)p), p);
}

Poly gcd(Poly a, Poly b, uint64_t p) {
    trim(a);
    trim(b);
    while (!b.empty()) {
        Poly r = mod(a, b, p);
        a = std::move(b);
        b = std::move(r);
    }
    return monic(a, p);
}

Poly powmod(const Poly& base, const mpz_class& e, const Poly& m, uint64_t p) {
    Poly r{1};
    r = mod(r, m, p);
    Poly b = mod(base, m, p);
    size_t bits = mpz_sizeinbase(e.get_mpz_t(), 2);
    for (size_t i = bits; i-- > 0;) {
        r = mod(mul(r, r, p), m, p);
        if (mpz_tstbit(e.get_mpz_t(), i)) r = mod(mul(r, b, p), m, p);
    }
    return r;
}

Poly derivative(const Poly& a, uint64_t p) {
    Poly r;
    for (size_t i = 1; i < a.size(); ++i) r.push_back(mulmod_u64(a[i], i % p, p));
    trim(r);
    return r;
}

Poly x_power(unsigned k) {
    Poly r(k + 1, 0);
    r[k] = 1;
    return r;
}

uint64_t eval(const Poly& a, uint64_t x, uint64_t p) {
    uint64_t r = 0;
    for (size_t i = a.size(); i-- > 0;) r = (mulmod_u64(r, x, p) + a[i]) % p;
    return r;
}

namespace {

// Random polynomial of degree < d.
Poly random_poly(int d, uint64_t p, std::mt19937_64& rng) {
    Poly r(d);
    for (auto& c : r) c = rng() % p;
    trim(r);
    return r;
}

// Splits a squarefree product of distinct irreducibles of degree k.
void equal_degree_split(const Poly& m, int k, uint64_t p, std::mt19937_64& rng, std::vector<Poly>& out) {
    int d = deg(m);
    if (d == k) { out.push_back(monic(m, p)); return; }
    mpz_class pk;
    mpz_ui_pow_ui(pk.get_mpz_t(), p, k);
    for (;;) {
        Poly a = random_poly(d, p, rng);
        if (deg(a) < 1) continue;
        Poly b;
        if (p == 2) {
            Poly t = a, acc = a;
            for (int i = 1; i < k; ++i) {
                t = mod(mul(t, t, p), m, p);
                acc = add(acc, t, p);
            }
            b = acc;
        } else {
            mpz_class e = (pk - 1) / 2;
            b = sub(powmod(a, e, m, p), Poly{1}, p);
        }
        Poly g = gcd(b, m, p);
        if (deg(g) > 0 && deg(g) < d) {
            Poly q, r;
            divmod(m, g, p, q, r);
            equal_degree_split(g, k, p, rng, out);
            equal_degree_split(q, k, p, rng, out);
            return;
        }
    }
}

}  // namespace

std::vector<Poly> equal_degree_factor(const Poly& m, int k, uint64_t p, uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::vector<Poly> out;
    equal_degree_split(monic(m, p), k, p, rng, out);
    return out;
}

Poly find_factor(const Poly& m_in, uint64_t p) {
    Poly m = monic(m_in, p);
    int d = deg(m);
    if (d <= 1) return {};
    Poly dm = derivative(m, p);
    if (dm.empty()) {
        // m = h(X)^p over F_p
        Poly h;
        for (size_t i = 0; i < m.size(); i += p) h.push_back(m[i]);
        return monic(h, p);
    }
    Poly s = gcd(m, dm, p);
    if (deg(s) > 0) return s;
    Poly x{0, 1}, h = x;
    std::mt19937_64 rng(0x5c011ull);
    for (int k = 1; 2 * k <= d; ++k) {
        h = powmod(h, mpz_class((unsigned long)p), m, p);
        Poly g = gcd(sub(h, x, p), m, p);
        if (deg(g) <= 0) continue;
        if (deg(g) < d) return g;
        std::vector<Poly> parts;
        equal_degree_split(m, k, p, rng, parts);
        return parts.front();
    }
    return {};
}

Poly first_irreducible(uint64_t p, int d) {
    if (d < 1) throw Error(Error::Domain, "degree must be >= 1");
    if (d == 1) return Poly{0, 1};
    Poly c(d + 1, 0);
    c[d] = 1;
    for (;;) {
        // increment lower coefficients as a base-p counter
        int i = 0;
        while (i < d) {
            if (++c[i] < p) break;
            c[i] = 0;
            ++i;
        }
        if (i == d) throw Error(Error::Domain, "no irreducible polynomial found");
        if (c[0] == 0) continue;
        if (find_factor(c, p).empty()) return c;
    }
}

}  // namespace poly

// ---------------------------------------------------------------------------

std::vector<long long> cyclotomic_poly(int n) {
    static std::mutex mu;
    static std::map<int, std::vector<long long>> memo;
    if (n < 1) throw Error(Error::Domain, "cyclotomic index must be >= 1");
    {
        std::lock_guard<std::mutex> lk(mu);
        auto it = memo.find(n);
        if (it != memo.end()) return it->second;
    }
    std::vector<long long> num(n + 1, 0);
    num[0] = -1;
    num[n] = 1;
    for (int d = 1; d < n; ++d) {
        if (n % d) continue;
        auto den = cyclotomic_poly(d);
        // exact division by a monic integer polynomial
        int dn = (int)num.size() - 1, dd = (int)den.size() - 1;
        std::vector<long long> q(dn - dd + 1, 0);
        for (int i = dn; i >= dd; --i) {
            long long c = num[i];
            q[i - dd] = c;
            for (int j = 0; j <= dd; ++j) num[i - dd + j] -= c * den[j];
        }
        num = q;
    }
    std::lock_guard<std::mutex> lk(mu);
    memo[n] = num;
    return num;
}

std::vector<Poly> factor_cyclotomic(int n, uint64_t p) {
    if (n < 1) throw Error(Error::Domain, "n must be >= 1");
    if (!is_prime(p)) throw Error(Error::Domain, std::to_string(p) + " is not prime");
    if (n % p == 0) throw Error(Error::Domain, "p divides n");
    auto phi = cyclotomic_poly(n);
    Poly m(phi.size());
    for (size_t i = 0; i < phi.size(); ++i) m[i] = (uint64_t)(((phi[i] % (long long)p) + (long long)p) % (long long)p);
    poly::trim(m);
    int f = multiplicative_order(p, n);
    std::vector<Poly> out;
    if (poly::deg(m) == f) out.push_back(m);
    else out = poly::equal_degree_factor(m, f, p, 0xc1c10ull + 1000003ull * n + p);
    std::sort(out.begin(), out.end());
    return out;
}

// ---------------------------------------------------------------------------

std::shared_ptr<const FieldCtx> FieldCtx::prime_field(uint64_t p, bool tables) {
    if (!is_prime(p)) throw Error(Error::Domain, std::to_string(p) + " is not prime");
    auto c = std::make_shared<FieldCtx>();
    c->p = p;
    c->f = 1;
    c->modulus = Poly{0, 1};
    c->init(tables);
    return c;
}

std::shared_ptr<const FieldCtx> FieldCtx::extension(uint64_t p, const Poly& modulus, bool tables) {
    if (!is_prime(p)) throw Error(Error::Domain, std::to_string(p) + " is not prime");
    Poly m = modulus;
    for (auto& c : m) c %= p;
    poly::trim(m);
    if (poly::deg(m) < 1) throw Error(Error::Domain, "modulus must have degree >= 1");
    if (m.back() != 1) throw Error(Error::Domain, "modulus must be monic");
    if (poly::deg(m) == 1) {
        auto c = std::make_shared<FieldCtx>();
        c->p = p;
        c->f = 1;
        c->modulus = Poly{0, 1};
        c->init(tables);
        return c;
    }
    Poly fac = poly::find_factor(m, p);
    if (!fac.empty()) {
        std::string s = "modulus is reducible; factor [";
        for (size_t i = 0; i < fac.size(); ++i) s += (i ? "," : "") + std::to_string(fac[i]);
        throw Error(Error::Domain, s + "]");
    }
    auto c = std::make_shared<FieldCtx>();
    c->p = p;
    c->f = poly::deg(m);
    c->modulus = m;
    c->init(tables);
    return c;
}

std::shared_ptr<const FieldCtx> FieldCtx::galois_field(uint64_t p, int k, bool tables) {
    if (k == 1) return prime_field(p, tables);
    return extension(p, poly::first_irreducible(p, k), tables);
}

void FieldCtx::init(bool tables) {
    unsigned __int128 qq = 1;
    pw_.clear();
    for (int i = 0; i < f; ++i) {
        pw_.push_back((uint64_t)qq);
        qq *= p;
        if (qq > ((unsigned __int128)1 << 32)) throw Error(Error::Capacity, "field size exceeds 2^32");
    }
    q = (uint64_t)qq;
    // trace of the power basis
    tr_basis_.assign(f, 0);
    for (int j = 0; j < f; ++j) {
        Elem xj = from_poly(poly::x_power(j));
        Elem t = 0, y = xj;
        for (int k = 0; k < f; ++k) {
            t = add(t, y);
            y = pow(y, p);
        }
        tr_basis_[j] = t;  // lies in F_p, so its code is < p
    }
    // generator
    uint64_t m = q - 1;
    auto primes = prime_factors(m);
    auto is_gen = [&](Elem a) {
        if (a == 0) return false;
        for (auto r : primes)
            if (pow(a, m / r) == 1) return false;
        return true;
    };
    if (q == 2) {
        g = 1;
    } else if (f == 1) {
        for (Elem a = 2; a < q; ++a)
            if (is_gen(a)) { g = a; break; }
    } else {
        std::mt19937_64 rng(0x9e3779b97f4a7c15ull ^ (p * 131 + f));
        for (;;) {
            Elem a = rng() % q;
            if (is_gen(a)) { g = a; break; }
        }
    }
    if (tables && q <= kTableCap) {
        exp_.assign(m, 0);
        log_.assign(q, 0);
        if (f == 1) {
            Elem x = 1;
            for (uint64_t k = 0; k < m; ++k) {
                exp_[k] = (uint32_t)x;
                log_[x] = (uint32_t)k;
                x = mulmod_u64(x, g, p);
            }
        } else {
            // columns of the multiplication-by-g matrix
            std::vector<std::vector<uint64_t>> col(f, std::vector<uint64_t>(f, 0));
            for (int j = 0; j < f; ++j) {
                Poly c = poly::mod(poly::mul(poly::x_power(j), to_poly(g), p), modulus, p);
                for (size_t i = 0; i < c.size(); ++i) col[j][i] = c[i];
            }
            std::vector<uint64_t> x(f, 0), y(f);
            x[0] = 1;
            for (uint64_t k = 0; k < m; ++k) {
                Elem code = 0;
                for (int i = 0; i < f; ++i) code += x[i] * pw_[i];
                exp_[k] = (uint32_t)code;
                log_[code] = (uint32_t)k;
                std::fill(y.begin(), y.end(), 0);
                for (int j = 0; j < f; ++j) {
                    if (!x[j]) continue;
                    for (int i = 0; i < f; ++i) y[i] += x[j] * col[j][i];
                }
                for (int i = 0; i < f; ++i) x[i] = y[i] % p;
            }
        }
    }
}

Elem FieldCtx::from_int(long long v) const {
    long long r = v % (long long)p;
    if (r < 0) r += p;
    return (Elem)r;
}

Elem FieldCtx::from_poly(const Poly& a) const {
    if (f == 1) return a.empty() ? 0 : a[0] % p;
    Poly r = poly::mod(a, modulus, p);
    Elem code = 0;
    for (size_t i = 0; i < r.size(); ++i) code += (r[i] % p) * pw_[i];
    return code;
}

Poly FieldCtx::to_poly(Elem a) const {
    Poly r(f);
    for (int i = 0; i < f; ++i) { r[i] = a % p; a /= p; }
    poly::trim(r);
    return r;
}

Elem FieldCtx::add(Elem a, Elem b) const {
    if (f == 1) return (a + b) % p;
    Elem r = 0;
    for (int i = 0; i < f; ++i) {
        r += ((a % p + b % p) % p) * pw_[i];
        a /= p;
        b /= p;
    }
    return r;
}

Elem FieldCtx::neg(Elem a) const {
    if (f == 1) return (p - a) % p;
    Elem r = 0;
    for (int i = 0; i < f; ++i) {
        r += ((p - a % p) % p) * pw_[i];
        a /= p;
    }
    return r;
}

Elem FieldCtx::sub(Elem a, Elem b) const { return add(a, neg(b)); }

Elem FieldCtx::mul_slow(Elem a, Elem b) const {
    if (f == 1) return mulmod_u64(a, b, p);
    return from_poly(poly::mul(to_poly(a), to_poly(b), p));
}

Elem FieldCtx::mul(Elem a, Elem b) const {
    if (a == 0 || b == 0) return 0;
    if (!log_.empty()) {
        uint64_t k = (uint64_t)log_[a] + log_[b];
        if (k >= q - 1) k -= q - 1;
        return exp_[k];
    }
    return mul_slow(a, b);
}

Elem FieldCtx::pow(Elem a, uint64_t e) const {
    if (e == 0) return 1;
    if (a == 0) return 0;
    if (!log_.empty()) return exp_[mulmod_u64(log_[a], e % (q - 1), q - 1)];
    e %= (q - 1);
    if (e == 0) e = q - 1;
    Elem r = 1, b = a;
    while (e) {
        if (e & 1) r = mul_slow(r, b);
        b = mul_slow(b, b);
        e >>= 1;
    }
    return r;
}

Elem FieldCtx::pow(Elem a, const mpz_class& e) const {
    if (a == 0) return e == 0 ? 1 : 0;
    mpz_class r = e % mpz_class((unsigned long)(q - 1));
    if (r < 0) r += (unsigned long)(q - 1);
    return pow(a, (uint64_t)r.get_ui());
}

Elem FieldCtx::inv(Elem a) const {
    if (a == 0) throw Error(Error::Domain, "inverse of zero");
    if (!log_.empty()) return exp_[(q - 1 - log_[a]) % (q - 1)];
    return pow(a, q - 2);
}

uint64_t FieldCtx::trace(Elem a) const {
    uint64_t t = 0;
    for (int i = 0; i < f; ++i) {
        t = (t + mulmod_u64(a % p, tr_basis_[i], p)) % p;
        a /= p;
    }
    return t;
}

uint64_t FieldCtx::dlog(Elem a) const {
    if (a == 0) throw Error(Error::Domain, "dlog of zero");
    if (log_.empty()) throw Error(Error::Capacity, "dlog table not available above 2^24");
    return log_[a];
}

Elem FieldCtx::exp(uint64_t k) const {
    k %= (q - 1);
    if (!exp_.empty()) return exp_[k];
    return pow(g, k);
}

uint64_t FieldCtx::order(Elem a) const {
    if (a == 0) throw Error(Error::Domain, "order of zero");
    uint64_t m = q - 1, ord = m;
    for (auto r : prime_factors(m)) {
        while (ord % r == 0 && pow(a, ord / r) == 1) ord /= r;
    }
    return ord;
}

}  // namespace scholl
