#include <doctest.h>

#include "curves.hpp"

using namespace scholl;

namespace {

// #C(F_q) for y^2 = f(x), f a monic sextic: two points at infinity.
long long direct_genus2_count(const std::vector<long long>& f, const FieldCtx& F) {
    std::vector<Elem> fe;
    for (long long c : f) fe.push_back(F.from_int(c));
    long long n = 2;
    for (Elem x = 0; x < F.q; ++x) {
        Elem v = 0;
        for (size_t k = fe.size(); k-- > 0;) v = F.add(F.mul(v, x), fe[k]);
        if (v == 0) n += 1;
        else n += F.pow(v, (F.q - 1) / 2) == 1 ? 2 : 0;
    }
    return n;
}

}  // namespace

TEST_CASE("L-polynomial from N1, N2 predicts the count over F_{p^3}") {
    std::vector<std::vector<long long>> sextics = {{1, 0, 0, 3, 0, 0, 1}, {3, 1, 4, 1, 5, 9, 1}, {2, -1, 0, 0, 7, 0, 1}};
    for (auto& f : sextics) {
        for (uint64_t p : {5ull, 7ull, 11ull, 13ull, 17ull}) {
            GenusTwoL L;
            try {
                L = genus2_lpoly(f, p);
            } catch (const Error&) {
                continue;  // bad reduction
            }
            long long P = (long long)p;
            long long e1 = -L.a1, e2 = L.a2, e3 = -P * L.a1;
            long long s1 = e1, s2 = e1 * s1 - 2 * e2, s3 = e1 * s2 - e2 * s1 + 3 * e3;
            auto F3 = FieldCtx::galois_field(p, 3);
            CHECK(direct_genus2_count(f, *F3) == P * P * P + 1 - s3);
            CHECK(direct_genus2_count(f, *FieldCtx::prime_field(p)) == (long long)L.N1);
            CHECK(L.pure);
        }
    }
}

TEST_CASE("x^6 + b x^3 + 1 splits according to p mod 3") {
    for (long long b : {3LL, 5LL, -7LL})
        for (uint64_t p : {5ull, 7ull, 11ull, 13ull, 19ull, 23ull, 31ull}) {
            CbReport r;
            try {
                r = cb_structure_check(b, p);
            } catch (const Error&) {
                continue;
            }
            CHECK(r.ok);
            CHECK(r.kind == (p % 3 == 2 ? "trace-zero" : "square"));
        }
}

TEST_CASE("superelliptic character decomposition") {
    auto F = FieldCtx::prime_field(13);
    auto r = superelliptic_count(3, {5, 0, 2, 1}, *F);
    CHECK(r.ok);
    CHECK(r.char_decomposition.size() == 3);
    CHECK_THROWS_AS(superelliptic_count(5, {1, 1}, *F), Error);
}

TEST_CASE("automorphisms preserve the surfaces") {
    size_t tested = 0;
    for (long a = 2; a < 13; ++a) {
        MapReport r;
        try {
            r = involution_check(a, 13);
        } catch (const Error&) {
            continue;  // singular member of the family
        }
        CHECK(r.ok);
        ++tested;
    }
    CHECK(tested > 5);
    CHECK(en_symmetry_check(3, 13).ok);
    CHECK(en_symmetry_check(4, 17).ok);
    CHECK(frobenius_commutation_check(3, 5, 2).ok);
}

TEST_CASE("prime powers") {
    int k = 0;
    CHECK(prime_power_base(343, &k) == 7);
    CHECK(k == 3);
    CHECK(prime_power_base(12) == 0);
}
