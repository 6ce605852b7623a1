#include "curves.hpp"

#include <cmath>
#include <functional>

#include "charsums.hpp"

namespace scholl {

uint64_t prime_power_base(uint64_t q, int* k) {
    if (q < 2) return 0;
    for (uint64_t p = 2; p * p <= q; ++p) {
        if (q % p) continue;
        int e = 0;
        uint64_t r = q;
        while (r % p == 0) { r /= p; ++e; }
        if (r != 1) return 0;
        if (k) *k = e;
        return p;
    }
    if (k) *k = 1;
    return q;
}

namespace {

FieldPtr field_of_size(uint64_t q) {
    int k = 0;
    uint64_t p = prime_power_base(q, &k);
    if (!p) throw Error(Error::Domain, std::to_string(q) + " is not a prime power");
    return FieldCtx::galois_field(p, k);
}

Elem horner(const FieldCtx& F, const std::vector<Elem>& f, Elem x) {
    Elem r = 0;
    for (size_t i = f.size(); i-- > 0;) r = F.add(F.mul(r, x), f[i]);
    return r;
}

bool squarefree_mod_p(const std::vector<long long>& f, uint64_t p) {
    Poly a;
    for (auto c : f) a.push_back((uint64_t)(((c % (long long)p) + (long long)p) % (long long)p));
    poly::trim(a);
    if (poly::deg(a) != (int)f.size() - 1) return false;
    return poly::deg(poly::gcd(a, poly::derivative(a, p), p)) == 0;
}

// Affine count of y^2 = f(x) over F.
uint64_t hyperelliptic_affine(const FieldCtx& F, const std::vector<long long>& f) {
    std::vector<Elem> fc;
    for (auto c : f) fc.push_back(F.from_int(c));
    uint64_t cnt = 0;
    for (Elem x = 0; x < F.q; ++x) {
        Elem v = horner(F, fc, x);
        if (v == 0) cnt += 1;
        else if (F.dlog(v) % 2 == 0) cnt += 2;
    }
    return cnt;
}

// Points (x, y, s) of E_n over F with s != 0; calls visit for each.
void for_each_en_point(const FieldCtx& F, int n, const std::function<void(Elem, Elem, Elem)>& visit) {
    Elem zn = F.exp((F.q - 1) / n);
    for (Elem x = 0; x < F.q; ++x)
        for (Elem y = 0; y < F.q; ++y) {
            Elem v = eval_fn(F, n, x, y);
            if (v == 0) continue;
            uint64_t e = F.dlog(v);
            if (e % n) continue;
            Elem s = F.exp(e / n);
            for (int j = 0; j < n; ++j) {
                visit(x, y, s);
                s = F.mul(s, zn);
            }
        }
}

struct Pt { Elem x, y, s; bool operator==(const Pt& o) const { return x == o.x && y == o.y && s == o.s; } };

Pt map_A(const FieldCtx& F, Elem w, const Pt& P) {
    Elem xy = F.mul(P.x, P.y);
    Elem one_xy = F.sub(1, xy);
    Elem num = F.mul(F.mul(w, F.mul(F.sub(1, P.x), F.sub(1, P.y))), F.mul(F.mul(P.x, P.x), P.y));
    Elem den = F.mul(P.s, one_xy);
    return {F.sub(1, P.x), F.inv(one_xy), F.div(num, den)};
}

// zeta^e (x, y, s) = (x, y, omega^{-e} s)
Pt map_zeta(const FieldCtx& F, Elem omega, long long e, int n, const Pt& P) {
    long long ee = ((-e) % n + n) % n;
    return {P.x, P.y, F.mul(P.s, F.pow(omega, (uint64_t)ee))};
}

bool on_en(const FieldCtx& F, int n, const Pt& P) {
    return P.s != 0 && F.pow(P.s, (uint64_t)n) == eval_fn(F, n, P.x, P.y);
}

}  // namespace

SuperellipticCount superelliptic_count(int N, const std::vector<Elem>& f, const FieldCtx& F) {
    if (N < 1 || (F.q - 1) % N) throw Error(Error::Domain, "N must divide q - 1");
    bool nonconst = false;
    for (size_t i = 1; i < f.size(); ++i)
        if (f[i]) nonconst = true;
    if (!nonconst) throw Error(Error::Domain, "f must be nonconstant");
    SuperellipticCount r;
    std::vector<uint64_t> ypow(F.q);
    for (Elem y = 0; y < F.q; ++y) ypow[y] = F.pow(y, (uint64_t)N);
    std::vector<int64_t> hist(N, 0);
    for (Elem x = 0; x < F.q; ++x) {
        Elem v = horner(F, f, x);
        for (Elem y = 0; y < F.q; ++y)
            if (ypow[y] == v) ++r.affine_count;
        if (v == 0) ++r.zero_count;
        else ++hist[F.dlog(v) % N];
    }
    CycInt total(N, mpz_class((unsigned long)r.zero_count));
    for (int i = 1; i <= N; ++i) {
        std::vector<mpz_class> raw(N);
        for (int k = 0; k < N; ++k) raw[(long long)i * k % N] += (long)hist[k];
        r.char_decomposition.push_back(CycInt::reduce(N, raw));
        total += r.char_decomposition.back();
    }
    r.ok = total.is_rational() && total.rational_value() == (unsigned long)r.affine_count;
    return r;
}

GenusTwoL genus2_lpoly(const std::vector<long long>& f, uint64_t p) {
    if (p == 2 || !is_prime(p)) throw Error(Error::Domain, "p must be an odd prime");
    if (f.size() != 7 || f[6] != 1) throw Error(Error::Domain, "expected a monic sextic");
    if (!squarefree_mod_p(f, p)) throw Error(Error::Domain, "sextic has zero discriminant mod p (bad reduction)");
    GenusTwoL L;
    L.p = p;
    L.N1 = hyperelliptic_affine(*FieldCtx::prime_field(p), f) + 2;
    L.N2 = hyperelliptic_affine(*FieldCtx::galois_field(p, 2), f) + 2;
    long long P = (long long)p;
    long long s1 = P + 1 - (long long)L.N1;
    long long s2 = P * P + 1 - (long long)L.N2;
    if ((s1 * s1 - s2) % 2) throw Error(Error::Consistency, "power sums have the wrong parity");
    L.a1 = -s1;
    L.a2 = (s1 * s1 - s2) / 2;
    std::vector<std::complex<long double>> c = {(long double)(P * P), (long double)(P * L.a1), (long double)L.a2,
                                                (long double)L.a1, 1.0L};
    double sp = std::sqrt((double)p);
    for (auto z : poly_roots(c)) L.max_root_dev = std::max(L.max_root_dev, std::fabs((double)std::abs(z) - sp) / sp);
    L.pure = L.max_root_dev < 1e-6 && std::fabs((double)L.a1) <= 4 * sp + 1e-9;
    return L;
}

CbReport cb_structure_check(long long b, uint64_t p) {
    if (p % 3 == 0) throw Error(Error::Domain, "p must not divide 3");
    CbReport r;
    r.b = b;
    r.p = p;
    r.L = genus2_lpoly({1, 0, 0, b, 0, 0, 1}, p);
    long long P = (long long)p;
    if (p % 3 == 2) {
        r.kind = "trace-zero";
        long long sq = 2 * P - r.L.a2;
        long long c = sq >= 0 ? (long long)std::llround(std::sqrt((double)sq)) : -1;
        r.c = c;
        r.ok = r.L.a1 == 0 && c >= 0 && c * c == sq;
    } else {
        r.kind = "square";
        r.c = r.L.a1 / 2;
        r.ok = r.L.a1 % 2 == 0 && r.L.a2 == r.c * r.c + 2 * P;
    }
    r.ok = r.ok && r.L.pure;
    return r;
}

MapReport involution_check(long long a, uint64_t q) {
    int k = 0;
    uint64_t p = prime_power_base(q, &k);
    if (!p || p == 2) throw Error(Error::Domain, "q must be an odd prime power");
    std::vector<long long> fi = {1, 0, a, 0, a, 0, 1};
    if (!squarefree_mod_p(fi, p)) throw Error(Error::Domain, "curve is singular over F_q");
    auto F = field_of_size(q);
    std::vector<Elem> fc;
    for (auto c : fi) fc.push_back(F->from_int(c));
    auto on = [&](Elem x, Elem y) { return F->mul(y, y) == horner(*F, fc, x); };
    auto t1 = [&](std::pair<Elem, Elem> P) { return std::make_pair(F->neg(P.first), P.second); };
    auto t2 = [&](std::pair<Elem, Elem> P) {
        Elem ix = F->inv(P.first);
        return std::make_pair(ix, F->mul(P.second, F->pow(ix, (uint64_t)3)));
    };
    MapReport r;
    for (Elem x = 1; x < F->q; ++x)
        for (Elem y = 0; y < F->q; ++y) {
            if (!on(x, y)) continue;
            ++r.points;
            std::pair<Elem, Elem> P{x, y};
            auto A = t1(P), B = t2(P);
            auto C = t1(t2(t1(t2(P))));
            bool good = on(A.first, A.second) && on(B.first, B.second) && t1(A) == P && t2(B) == P &&
                        C == std::make_pair(x, F->neg(y));
            if (!good) ++r.failures;
        }
    r.ok = r.failures == 0;
    return r;
}

MapReport en_symmetry_check(int n, uint64_t q) {
    if (n < 2 || (q - 1) % (2 * n)) throw Error(Error::Domain, "q must be 1 mod 2n");
    auto F = field_of_size(q);
    Elem w0 = F->exp((F->q - 1) / (2 * n));
    MapReport r;
    int roots = 0;
    for (Elem w : {w0, F->neg(w0)}) {
        if (F->pow(w, (uint64_t)n) != F->neg(1)) continue;  // not a primitive 2n-th root
        ++roots;
        Elem omega = F->mul(w, w);
        for_each_en_point(*F, n, [&](Elem x, Elem y, Elem s) {
            Pt P{x, y, s};
            ++r.points;
            Pt AP = map_A(*F, w, P);
            Pt lhs = map_zeta(*F, omega, 1, n, map_A(*F, w, map_zeta(*F, omega, 1, n, P)));
            if (!on_en(*F, n, AP) || !(lhs == AP)) ++r.failures;
        });
    }
    r.ok = r.failures == 0 && roots > 0;
    r.detail = std::to_string(roots) + " choice(s) of zeta_2n";
    return r;
}

MapReport frobenius_commutation_check(int n, uint64_t p, int k) {
    if (p == 2 || !is_prime(p)) throw Error(Error::Domain, "p must be an odd prime");
    if (p % n != 1 && p % n != (uint64_t)(n - 1)) throw Error(Error::Domain, "p must be +-1 mod n");
    auto F = FieldCtx::galois_field(p, k);
    if ((F->q - 1) % (2 * n)) throw Error(Error::Domain, "no primitive 2n-th root of unity in F_{p^k}");
    Elem w = F->exp((F->q - 1) / (2 * n));
    Elem omega = F->mul(w, w);
    long long e = (1 - (long long)p) / 2;
    auto frob = [&](const Pt& P) { return Pt{F->frob(P.x), F->frob(P.y), F->frob(P.s)}; };
    MapReport r;
    for_each_en_point(*F, n, [&](Elem x, Elem y, Elem s) {
        Pt P{x, y, s};
        ++r.points;
        bool a = frob(map_A(*F, w, P)) == map_zeta(*F, omega, e, n, map_A(*F, w, frob(P)));
        bool b = frob(map_zeta(*F, omega, 1, n, P)) == map_zeta(*F, omega, (long long)p, n, frob(P));
        if (!a || !b) ++r.failures;
    });
    r.ok = r.failures == 0;
    return r;
}

}  // namespace scholl
