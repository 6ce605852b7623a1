#include "asd.hpp"

#include <cmath>
#include <fstream>

#include <json.hpp>

#include "ff.hpp"

namespace scholl {

namespace {

mpz_class ipow(uint64_t p, unsigned e) {
    mpz_class r;
    mpz_ui_pow_ui(r.get_mpz_t(), p, e);
    return r;
}

// Largest K with p^K below 2^62.
int max_precision(uint64_t p) {
    int K = 0;
    unsigned __int128 v = 1;
    while (v * p < ((unsigned __int128)1 << 62)) { v *= p; ++K; }
    return K;
}

uint64_t pow_u64(uint64_t p, int e) {
    uint64_t r = 1;
    while (e-- > 0) r *= p;
    return r;
}

uint64_t mod_of(const mpz_class& a, uint64_t M) {
    mpz_class r = a % mpz_class((unsigned long)M);
    if (r < 0) r += (unsigned long)M;
    return r.get_ui();
}

// Five-term combination at r, mod M (A's already reduced mod M).
uint64_t combination(const ModCoeffs& a, uint64_t p, int r, const uint64_t A[4], uint64_t M) {
    using u128 = unsigned __int128;
    auto term = [&](int e) -> uint64_t { return e < 0 ? 0 : a.at(pow_u64(p, e)); };
    u128 v = term(r + 2);
    v += (u128)A[0] * term(r + 1) % M;
    v += (u128)A[1] * term(r) % M;
    v += (u128)A[2] * term(r - 1) % M;
    v += (u128)A[3] * term(r - 2) % M;
    return (uint64_t)(v % M);
}

}  // namespace

bool ASDQuartic::self_dual() const {
    mpz_class p3 = ipow(p, 3);
    return A0 == p3 * p3 && A1 == p3 * A3;
}

ASDQuartic self_dual_quartic(uint64_t p, const mpz_class& A3, const mpz_class& A2) {
    mpz_class p3 = ipow(p, 3);
    return {p, A3, A2, p3 * A3, p3 * p3};
}

QuarticPurity quartic_purity(const ASDQuartic& q, double tol) {
    QuarticPurity r;
    mpz_class p3 = ipow(q.p, 3);
    if (q.self_dual()) {
        // x^4 + A3 x^3 + A2 x^2 + p^3 A3 x + p^6 = x^2 (w^2 + A3 w + A2 - 2p^3), w = x + p^3/x.
        // Roots are pure iff both w are real with |w| <= 2 p^{3/2}.
        mpz_class c = q.A2 - 2 * p3;
        mpz_class disc = q.A3 * q.A3 - 4 * c;
        mpz_class edge = 4 * p3 + c;
        r.exact = disc >= 0 && q.A3 * q.A3 <= 16 * p3 && edge >= 0 && edge * edge >= 4 * q.A3 * q.A3 * p3;
    }
    std::vector<std::complex<long double>> cf;
    for (auto& x : q.coeffs()) cf.push_back((long double)x.get_d());
    long double target = std::pow((long double)q.p, 1.5L);
    for (auto z : poly_roots(cf))
        r.max_root_dev = std::max(r.max_root_dev, (double)(std::fabs(std::abs(z) - target) / target));
    r.ok = r.exact && r.max_root_dev < tol;
    return r;
}

AsdVerifyReport asd_verify(const ModCoeffs& a, int form, const ASDQuartic& q, int r_min, int r_max) {
    const uint64_t p = q.p;
    if (r_min < -1 || r_max < r_min) throw Error(Error::Domain, "need -1 <= r_min <= r_max");
    int K = 0;
    for (uint64_t M = a.M; M % p == 0; M /= p) ++K;
    if (pow_u64(p, K) != a.M) throw Error(Error::Domain, "coefficients must be reduced mod a power of p");
    if (K < 3 + r_max) throw Error(Error::Capacity, "coefficients known only mod p^" + std::to_string(K));
    uint64_t need = pow_u64(p, r_max + 2);
    if (need > a.max_index()) throw Error(Error::Capacity, "asd_verify needs the coefficient of index " + std::to_string(need));
    uint64_t A[4] = {mod_of(q.A3, a.M), mod_of(q.A2, a.M), mod_of(q.A1, a.M), mod_of(q.A0, a.M)};
    AsdVerifyReport rep;
    rep.p = p;
    rep.form = form;
    rep.precision = K;
    rep.ok = true;
    for (int r = r_min; r <= r_max; ++r) {
        AsdRow row;
        row.r = r;
        row.modulus = ipow(p, 3 + r);
        uint64_t v = combination(a, p, r, A, a.M);
        row.residue = mpz_class((unsigned long)v) % row.modulus;
        if (v == 0) {
            row.valuation = K;
            row.capped = true;
        } else {
            while (v % p == 0) { v /= p; ++row.valuation; }
        }
        row.ok = row.residue == 0;
        rep.ok = rep.ok && row.ok;
        rep.rows.push_back(row);
    }
    return rep;
}

AsdVerifyReport asd_verify(int form, const ASDQuartic& q, int r_min, int r_max) {
    if (form != 1 && form != 2) throw Error(Error::Domain, "form must be 1 or 2");
    if (q.p < 5 || !is_prime(q.p)) throw Error(Error::Domain, "p must be a prime >= 5");
    int cap = max_precision(q.p);
    if (3 + r_max > cap) throw Error(Error::Capacity, "p^(3+r_max) exceeds the residue arithmetic");
    int K = std::min(cap, std::max(3 + r_max, 3 * (r_max + 1)));
    auto [f1, f2] = weight4_mod(pow_u64(q.p, K), pow_u64(q.p, r_max + 2));
    return asd_verify(form == 1 ? f1 : f2, form, q, r_min, r_max);
}

std::optional<std::pair<QuadraticFactor, QuadraticFactor>> zeta3_conjugate_split(const ASDQuartic& q) {
    const long p = (long)q.p;
    if (q.p % 3 != 1) return std::nullopt;
    // p = N(pi) with pi = a + b zeta_3, N = a^2 - ab + b^2
    CycInt pi;
    for (long a = 0; a * a <= 4 * p && pi.n() == 0; ++a)
        for (long b = -a; b <= a; ++b)
            if (a * a - a * b + b * b == p) { pi = CycInt(3, {mpz_class(a), mpz_class(b)}); break; }
    if (pi.n() == 0) throw Error(Error::Consistency, "no element of norm p in Z[zeta_3]");
    CycInt pib = pi.galois_conjugate(2);
    for (int k = 0; k <= 6; ++k)
        for (int u = 0; u < 6; ++u) {
            CycInt unit = CycInt::zeta_pow(3, u % 3) * mpz_class(u < 3 ? 1 : -1);
            CycInt D = unit * pi.pow(k) * pib.pow(6 - k);
            CycInt Db = D.galois_conjugate(2);
            mpz_class c = q.A2 - (D + Db).rational_value();
            mpz_class disc = q.A3 * q.A3 - 4 * c;  // (T - T')^2 = -3 s^2
            if (disc > 0 || disc % 3 != 0) continue;
            mpz_class s2 = -disc / 3, s = sqrt(s2);
            if (s * s != s2 || (q.A3 - s) % 2 != 0) continue;
            for (int sg : {1, -1}) {
                // T = (-A3 + sg s sqrt(-3))/2 with sqrt(-3) = 1 + 2 zeta_3
                mpz_class ss = sg * s;
                CycInt T(3, {mpz_class((-q.A3 + ss) / 2), ss});
                CycInt Tb = T.galois_conjugate(2);
                CycInt lin = T * Db + Tb * D;
                if (lin.is_rational() && lin.rational_value() == -q.A1) {
                    QuadraticFactor f{T, D}, g{Tb, Db};
                    if (induce_to_integers({f, g}) == q.coeffs()) return std::make_pair(f, g);
                }
            }
        }
    return std::nullopt;
}

AsdSolveReport asd_solve(uint64_t p, int r_limit) {
    if (p < 5 || !is_prime(p)) throw Error(Error::Domain, "p must be a prime >= 5");
    const mpz_class p3 = ipow(p, 3);
    const long box3 = (long)std::floor(4 * std::pow((double)p, 1.5));
    const mpz_class box2 = 6 * p3;
    AsdSolveReport rep;
    std::vector<ASDQuartic> strong;
    for (int R = 0; R <= r_limit; ++R) {
        int K = 3 * (R + 1);
        uint64_t need = pow_u64(p, R + 2);
        if (K > max_precision(p) || need / 3 + 1 > kAsdTermBudget) {
            if (R == 0) throw Error(Error::Capacity, "p is too large for the residue arithmetic");
            break;
        }
        const uint64_t M = pow_u64(p, K);
        auto [f1, f2] = weight4_mod(M, need);
        strong.clear();
        size_t weak = 0;
        for (long A3 = -box3; A3 <= box3; ++A3) {
            // r = 0 for f1 (a1(1) = 1) fixes A2 mod p^3.
            mpz_class t = -(mpz_class((unsigned long)f1.at(p * p)) + A3 * mpz_class((unsigned long)f1.at(p)));
            mpz_class base = t % p3;
            if (base < 0) base += p3;
            mpz_class A2 = base - ((box2 + base) / p3) * p3;
            for (; A2 <= box2; A2 += p3) {
                if (abs(A2) > box2) continue;
                ASDQuartic q = self_dual_quartic(p, mpz_class(A3), A2);
                if (!quartic_purity(q).exact) continue;
                uint64_t A[4] = {mod_of(q.A3, M), mod_of(q.A2, M), mod_of(q.A1, M), mod_of(q.A0, M)};
                bool s_ok = true, w_ok = true;
                for (const ModCoeffs* a : {&f1, &f2})
                    for (int r = 0; r <= R; ++r) {
                        uint64_t v = combination(*a, p, r, A, M);
                        if (v % pow_u64(p, 3 * (r + 1))) s_ok = false;
                        if (v % pow_u64(p, 3 + r)) w_ok = false;
                    }
                if (w_ok) ++weak;
                if (s_ok) strong.push_back(q);
            }
        }
        rep.survivors.push_back(strong.size());
        rep.weak_survivors = weak;
        rep.r_used = R;
        if (strong.empty()) throw Error(Error::Consistency, "no quartic in the Weil box satisfies the congruences at p=" + std::to_string(p));
        if (strong.size() == 1) {
            rep.quartic = strong[0];
            return rep;
        }
    }
    if (p % 3 == 1) {
        std::vector<ASDQuartic> split;
        for (auto& q : strong)
            if (zeta3_conjugate_split(q)) split.push_back(q);
        rep.used_split = true;
        rep.split_survivors = split.size();
        if (split.size() == 1) {
            rep.quartic = split[0];
            return rep;
        }
    }
    throw Error(Error::Consistency, "ambiguous: " + std::to_string(strong.size()) + " quartics survive r <= " + std::to_string(rep.r_used) + " at p=" + std::to_string(p));
}

FactorCheck factor_check(const ASDQuartic& q, const QuadraticFactor& a, const QuadraticFactor& b) {
    FactorCheck r;
    try {
        r.product = induce_to_integers({a, b});
    } catch (const Error& e) {
        if (e.kind != Error::Consistency) throw;
        return r;  // a pair that is not conjugate cannot give an integer quartic
    }
    r.ok = r.product == q.coeffs();
    return r;
}

std::vector<TableRow> load_weight4_table(const std::string& path0) {
    std::string path = path0.empty() ? std::string(SCHOLL_DATA_DIR) + "/weight4_table.json" : path0;
    std::ifstream in(path);
    if (!in) throw Error(Error::Io, "cannot open " + path);
    nlohmann::json j;
    try {
        in >> j;
    } catch (const std::exception& e) {
        throw Error(Error::Io, path + ": " + e.what());
    }
    auto cyc = [](const nlohmann::json& v) {
        std::vector<mpz_class> c;
        for (auto& x : v) c.push_back(mpz_class(x.get<long>()));
        return CycInt(3, c);
    };
    std::vector<TableRow> rows;
    for (auto& r : j.at("rows")) {
        TableRow t;
        t.quartic.p = r.at("p").get<uint64_t>();
        auto A = r.at("A");
        t.quartic.A3 = A.at(0).get<long>();
        t.quartic.A2 = A.at(1).get<long>();
        t.quartic.A1 = A.at(2).get<long>();
        t.quartic.A0 = A.at(3).get<long>();
        t.first = {cyc(r.at("factors").at(0).at("T")), cyc(r.at("factors").at(0).at("D"))};
        t.second = {cyc(r.at("factors").at(1).at("T")), cyc(r.at("factors").at(1).at("D"))};
        t.quartic_text = r.at("quartic").get<std::string>();
        t.factor_text = r.at("factorization").get<std::string>();
        rows.push_back(t);
    }
    return rows;
}

}  // namespace scholl
