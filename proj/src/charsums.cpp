#include "charsums.hpp"

#include <chrono>
#include <cmath>
#include <mutex>
#include <numeric>

#include <fftw3.h>

namespace scholl {

namespace {

double elapsed_ms(std::chrono::steady_clock::time_point t0) {
    return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
}

const FieldCtx& require_tables(const SymbolField& sf) {
    if (!sf.ctx->has_tables())
        throw Error(Error::Capacity, "field of size " + std::to_string(sf.ctx->q) + " exceeds the table cap 2^24");
    return *sf.ctx;
}

std::mutex fftw_mu;  // the FFTW planner is not thread safe

}  // namespace

CycInt SymbolHistogram::sum(int i) const {
    std::vector<mpz_class> raw(n);
    for (int k = 0; k < n; ++k) {
        mpz_class c;
        mpz_set_si(c.get_mpz_t(), H[k]);
        raw[(int)(((long long)i * k % n + n) % n)] += c;
    }
    return CycInt::reduce(n, raw);
}

Elem eval_fn(const FieldCtx& F, int n, Elem x, Elem y) {
    Elem xy = F.mul(x, y);
    Elem v = F.mul(F.pow(xy, (uint64_t)(n - 1)), F.mul(F.sub(1, x), F.sub(1, y)));
    return F.mul(v, F.pow(F.sub(1, xy), (uint64_t)(n - 1)));
}

SymbolHistogram histogram_brute(const SymbolField& sf, int chunks) {
    auto t0 = std::chrono::steady_clock::now();
    const FieldCtx& F = require_tables(sf);
    const int n = sf.n;
    const uint64_t m = F.q - 1;
    const auto& ex = F.exp_table();
    const auto& lg = F.log_table();
    // alpha[a] = (Z(a) - a) mod n, beta[s] = Z(s) mod n with Z(a) = log(1 - g^a)
    std::vector<uint16_t> alpha(m, 0), beta(m, 0);
    for (uint64_t a = 1; a < m; ++a) {
        uint64_t z = lg[F.sub(1, ex[a])];
        beta[a] = (uint16_t)(z % n);
        alpha[a] = (uint16_t)(((z % n) + n - a % n) % n);
    }
    if (chunks < 1) chunks = 1;
    std::vector<int64_t> total(n, 0);
    uint64_t per = (m - 1 + chunks - 1) / chunks;
    for (int c = 0; c < chunks; ++c) {
        uint64_t lo = 1 + c * per, hi = std::min<uint64_t>(m, lo + per);
        std::vector<int64_t> cnt(3 * n, 0);
        for (uint64_t a = lo; a < hi; ++a) {
            const int aa = alpha[a] + n;
            // s = a + b < m
            for (uint64_t b = 1; b < m - a; ++b) ++cnt[aa + alpha[b] - beta[a + b]];
            // s = a + b - m > 0
            for (uint64_t b = m - a + 1; b < m; ++b) ++cnt[aa + alpha[b] - beta[a + b - m]];
        }
        for (int k = 0; k < 3 * n; ++k) total[k % n] += cnt[k];
    }
    SymbolHistogram h;
    h.n = n;
    h.q = F.q;
    h.H.assign(n, 0);
    for (int k = 0; k < n; ++k) h.H[(int)((long long)sf.u * k % n)] += total[k];
    h.method = "brute";
    h.ms = elapsed_ms(t0);
    return h;
}

std::vector<std::complex<double>> gauss_sums(const FieldCtx& F, bool naive_dft) {
    const uint64_t m = F.q - 1;
    const double tau = 2.0 * M_PI;
    std::vector<std::complex<double>> psi(m);
    Elem x = 1;
    for (uint64_t k = 0; k < m; ++k) {
        Elem gk = F.has_tables() ? F.exp(k) : x;
        double ang = tau * (double)F.trace(gk) / (double)F.p;
        psi[k] = {std::cos(ang), std::sin(ang)};
        if (!F.has_tables()) x = F.mul(x, F.g);
    }
    std::vector<std::complex<double>> G(m);
    if (naive_dft) {
        const long double t = 2.0L * acosl(-1.0L);
        for (uint64_t c = 0; c < m; ++c) {
            long double re = 0, im = 0;
            for (uint64_t k = 0; k < m; ++k) {
                long double ang = t * (long double)((c * k) % m) / m;
                re += psi[k].real() * cosl(ang) - psi[k].imag() * sinl(ang);
                im += psi[k].real() * sinl(ang) + psi[k].imag() * cosl(ang);
            }
            G[c] = {(double)re, (double)im};
        }
        return G;
    }
    fftw_plan plan;
    {
        std::lock_guard<std::mutex> lk(fftw_mu);
        plan = fftw_plan_dft_1d((int)m, reinterpret_cast<fftw_complex*>(psi.data()),
                                reinterpret_cast<fftw_complex*>(G.data()), FFTW_BACKWARD, FFTW_ESTIMATE);
    }
    fftw_execute(plan);
    {
        std::lock_guard<std::mutex> lk(fftw_mu);
        fftw_destroy_plan(plan);
    }
    return G;
}

std::complex<double> jacobi_from_gauss(const std::vector<std::complex<double>>& G, uint64_t q, uint64_t a, uint64_t b) {
    const uint64_t m = q - 1;
    a %= m;
    b %= m;
    if (a == 0 && b == 0) return (double)(q - 2);
    if (a == 0 || b == 0) return -1.0;
    uint64_t s = (a + b) % m;
    if (s == 0) return (q % 2 == 1 && (a & 1)) ? 1.0 : -1.0;  // -chi^a(-1)
    return G[a] * G[b] * std::conj(G[s]) / (double)q;
}

SymbolHistogram histogram_greene(const SymbolField& sf, bool naive_dft) {
    auto t0 = std::chrono::steady_clock::now();
    const FieldCtx& F = *sf.ctx;
    if (F.q > kTableCap) throw Error(Error::Capacity, "Gauss-sum table capacity exceeded");
    const int n = sf.n;
    const uint64_t q = F.q, m = q - 1;
    auto G = gauss_sums(F, naive_dft);
    const double invq = 1.0 / (double)q;
    auto J = [&](uint64_t a, uint64_t b) -> std::complex<double> {
        if (a == 0 || b == 0 || a + b == m) return jacobi_from_gauss(G, q, a, b);
        uint64_t s = a + b;
        if (s >= m) s -= m;
        return G[a] * G[b] * std::conj(G[s]) * invq;
    };
    std::vector<std::complex<long double>> V(n);
    V[0] = (long double)(q - 2) * (long double)(q - 3);
    for (int i = 1; 2 * i <= n; ++i) {
        uint64_t c = (uint64_t)(((unsigned __int128)i * (unsigned)sf.u % n) * (m / n) % m);
        uint64_t mc = (m - c) % m;
        long double re = 0, im = 0;
        for (uint64_t b = 0; b < m; ++b) {
            uint64_t mb = b ? m - b : 0;
            uint64_t bc = b >= c ? b - c : b + m - c;
            std::complex<double> j1 = J(mb, mc), j2 = J(bc, c);
            std::complex<double> t = j1 * j2 * j2;
            re += t.real();
            im += t.imag();
        }
        V[i] = std::complex<long double>(re, im) / (long double)m;
        V[n - i] = std::conj(V[i]);
    }
    // invert the length-n transform and round
    SymbolHistogram h;
    h.n = n;
    h.q = q;
    h.H.assign(n, 0);
    h.margin = 0;
    const long double t = 2.0L * acosl(-1.0L);
    for (int k = 0; k < n; ++k) {
        std::complex<long double> s = 0;
        for (int i = 0; i < n; ++i) s += V[i] * std::polar(1.0L, -t * (long double)((long long)i * k % n) / n);
        s /= (long double)n;
        long double r = roundl(s.real());
        h.margin = std::max(h.margin, (double)std::max(fabsl(s.real() - r), fabsl(s.imag())));
        h.H[k] = (int64_t)r;
    }
    h.method = "greene";
    h.ms = elapsed_ms(t0);
    if (h.margin >= 1e-4)
        throw Error(Error::Precision, "rounding margin " + std::to_string(h.margin) + " >= 1e-4");
    return h;
}

SymbolHistogram histogram(const SymbolField& sf, Method m) {
    if (m == Method::Brute) return histogram_brute(sf);
    if (m == Method::Greene) return histogram_greene(sf);
    return sf.ctx->q <= kBruteThreshold ? histogram_brute(sf) : histogram_greene(sf);
}

namespace {

void check_index(int n, int i) {
    if (n < 2) throw Error(Error::Domain, "n must be >= 2");
    if (i < 1 || i > n - 1) throw Error(Error::Domain, "i must satisfy 1 <= i <= n-1");
}

CharSumResult make_result(int n, int i, const Place& pl, const SymbolHistogram& h) {
    CharSumResult r;
    r.n = n;
    r.i = i;
    r.place = pl;
    r.value = h.sum(i);
    r.method = h.method;
    r.ms = h.ms;
    return r;
}

}  // namespace

CharSumResult trace_sum(int n, int i, const Place& pl) {
    check_index(n, i);
    return make_result(n, i, pl, histogram_brute(pl.sf()));
}

CharSumResult trace_sum_greene(int n, int i, const Place& pl) {
    check_index(n, i);
    return make_result(n, i, pl, histogram_greene(pl.sf()));
}

TwistReport twist_check(int n, int i, const Place& pl, Method m) {
    check_index(n, i);
    auto h = histogram(pl.sf(), m);
    TwistReport r;
    r.symbol = minus_one_symbol(pl);
    r.lhs = h.sum(i);
    r.rhs = r.symbol.pow((unsigned)i) * h.sum(n - i);
    r.ok = r.lhs == r.rhs;
    return r;
}

WeilReport weil_check(const CycInt& value, const mpz_class& Np, double tol) {
    WeilReport r;
    r.max_abs = (double)value.max_abs_embedding();
    r.bound = 2.0 * Np.get_d();
    r.ok = r.max_abs <= r.bound + tol;
    return r;
}

WeilReport weil_check(const CharSumResult& res) { return weil_check(res.value, res.place.Np); }

GcdReport gcd_reduction_check(int n, int i, const Place& pl_n, const Place& pl_nd, Method m) {
    check_index(n, i);
    if (pl_nd.p != pl_n.p || pl_nd.n < 1 || n % pl_nd.n) throw Error(Error::Domain, "incompatible places");
    int d = n / pl_nd.n;
    if (i % d) throw Error(Error::Domain, "d must divide gcd(i, n)");
    const auto& sf = pl_n.sf();
    // pl_nd must lie below pl_n: its factor vanishes at omega^d
    Elem e = sf.ctx->pow(sf.omega, (uint64_t)d), acc = 0;
    for (size_t k = pl_nd.factor.size(); k-- > 0;)
        acc = sf.ctx->add(sf.ctx->mul(acc, e), sf.ctx->from_int((long long)pl_nd.factor[k]));
    if (acc != 0) throw Error(Error::Domain, "place of Q(zeta_{n/d}) is not below the given place");
    GcdReport r;
    r.d = d;
    r.value_n = histogram(sf, m).sum(i);
    // sum over the same residue field: extend k_{pl_nd} to degree f/f'
    SymbolField big = pl_nd.extension(pl_n.f / pl_nd.f);
    r.value_nd = histogram(big, m).sum(i / d);
    r.ok = r.value_n == r.value_nd.lift(d);
    return r;
}

CycInt new_part_trace(int n, const Place& pl, Method m) {
    auto h = histogram(pl.sf(), m);
    CycInt s(n);
    for (int i : units_mod(n)) s += h.sum(i);
    if (!s.is_rational()) throw Error(Error::Consistency, "new-part trace is not a rational integer");
    return s;
}

CountReport solution_count_identity(int n, const Place& pl) {
    const auto& sf = pl.sf();
    const FieldCtx& F = *sf.ctx;
    if (F.q > 400) throw Error(Error::Capacity, "direct triple count limited to q <= 400");
    std::vector<Elem> nth(F.q);  // s^n for every s
    for (Elem s = 0; s < F.q; ++s) nth[s] = F.pow(s, (uint64_t)n);
    CountReport r;
    uint64_t lhs = 0, nonzero = 0;
    for (Elem x = 0; x < F.q; ++x)
        for (Elem y = 0; y < F.q; ++y) {
            Elem v = eval_fn(F, n, x, y);
            if (v) ++nonzero;
            for (Elem s = 1; s < F.q; ++s)
                if (nth[s] == v) ++lhs;
        }
    r.lhs = (unsigned long)lhs;
    auto h = histogram_brute(sf);
    CycInt rhs(n, mpz_class((unsigned long)nonzero));  // i = n: trivial character extended by 0
    for (int i = 1; i < n; ++i) rhs += h.sum(i);
    if (!rhs.is_rational()) throw Error(Error::Consistency, "character-sum count is not rational");
    r.rhs = rhs.rational_value();
    r.ok = r.lhs == r.rhs;
    return r;
}

}  // namespace scholl
