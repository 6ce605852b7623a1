#include <doctest.h>

#include "ff.hpp"

using namespace scholl;

namespace {

bool trial_prime(uint64_t n) {
    if (n < 2) return false;
    for (uint64_t d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

}  // namespace

TEST_CASE("primality agrees with trial division") {
    for (uint64_t n = 0; n < 5000; ++n) CHECK(is_prime(n) == trial_prime(n));
    CHECK(is_prime(1000000007));
    CHECK_FALSE(is_prime(1000000007ull * 998244353ull));
}

TEST_CASE("cyclotomic polynomials") {
    CHECK(cyclotomic_poly(1) == std::vector<long long>{-1, 1});
    CHECK(cyclotomic_poly(12) == std::vector<long long>{1, 0, -1, 0, 1});
    CHECK(cyclotomic_poly(9) == std::vector<long long>{1, 0, 0, 1, 0, 0, 1});
}

TEST_CASE("factoring Phi_n mod p gives phi(n)/f factors of degree ord_n(p)") {
    for (int n : {5, 7, 8, 9, 12, 13}) {
        for (uint64_t p : {2ull, 3ull, 5ull, 11ull, 29ull}) {
            if (n % p == 0) continue;
            auto fs = factor_cyclotomic(n, p);
            int f = multiplicative_order(p, n);
            Poly prod{1};
            for (auto& g : fs) {
                CHECK(poly::deg(g) == f);
                prod = poly::mul(prod, g, p);
            }
            auto phi = cyclotomic_poly(n);
            Poly want;
            for (long long c : phi) want.push_back((uint64_t)(((c % (long long)p) + (long long)p) % (long long)p));
            CHECK(prod == want);
        }
    }
}

TEST_CASE("field axioms in GF(3^4) and GF(2^6)") {
    for (auto [p, k] : {std::pair<uint64_t, int>{3, 4}, {2, 6}}) {
        auto F = FieldCtx::galois_field(p, k);
        const uint64_t q = F->q;
        for (Elem a = 1; a < q; ++a) {
            CHECK(F->mul(a, F->inv(a)) == 1);
            CHECK(F->pow(a, q - 1) == 1);
            CHECK(F->exp(F->dlog(a)) == a);
        }
        // additive Frobenius and the trace map onto F_p
        for (Elem a = 0; a < q; a += 7) {
            Elem t = a, s = 0;
            for (int i = 0; i < k; ++i) { s = F->add(s, t); t = F->frob(t); }
            CHECK(t == a);
            CHECK(s == F->trace(a));
        }
        CHECK(F->order(F->g) == q - 1);
    }
}
