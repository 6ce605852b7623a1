#include <doctest.h>

#include "ff.hpp"
#include "qseries.hpp"

using namespace scholl;

namespace {

// prod_{k >= 1} (1 - q^{m k})^e truncated below q^len, integer coefficients.
std::vector<long> euler_power(int m, int e, size_t len) {
    std::vector<long> c(len, 0);
    c[0] = 1;
    for (size_t k = 1; (size_t)m * k < len; ++k) {
        const size_t s = (size_t)m * k;
        for (int j = 0; j < e; ++j)
            for (size_t t = len; t-- > s;) c[t] -= c[t - s];
    }
    return c;
}

std::vector<long> mul(const std::vector<long>& a, const std::vector<long>& b) {
    std::vector<long> r(a.size(), 0);
    for (size_t i = 0; i < a.size(); ++i)
        for (size_t j = 0; i + j < a.size(); ++j) r[i + j] += a[i] * b[j];
    return r;
}

mpq_class coeff(const FracSeries& s, long num, long den) {
    REQUIRE((num * s.N) % den == 0);
    return s.at(num * s.N / den);
}

uint64_t mod_of(const mpq_class& v, uint64_t M) {
    mpz_class n = v.get_num() % (long)M, d = v.get_den();
    if (n < 0) n += M;
    mpz_class inv;
    mpz_invert(inv.get_mpz_t(), d.get_mpz_t(), mpz_class((unsigned long)M).get_mpz_t());
    mpz_class r = n * inv % (unsigned long)M;
    return r.get_ui();
}

}  // namespace

TEST_CASE("eta(4z)^6 against naive product expansion") {
    const size_t len = 200;
    auto want = euler_power(4, 6, len);  // times q
    auto s = eta_quotient({{4, 6}}, 60);
    for (long m = 1; m < s.end() / s.N && (size_t)m < len; ++m) CHECK(coeff(s, m, 1) == want[m - 1]);
    CHECK(coeff(s, 1, 1) == 1);
    CHECK(coeff(s, 5, 1) == -6);
    CHECK(coeff(s, 9, 1) == 9);
    CHECK(coeff(s, 13, 1) == 10);
    CHECK(coeff(s, 17, 1) == -30);
}

TEST_CASE("nth root") {
    auto s = eta_quotient({{2, 48}, {1, -8}, {4, -16}}, 20);
    auto r = series_nth_root(s, 3);
    auto back = normalize(power(r, 3));
    auto ns = normalize(s);
    for (long k = ns.start; k < std::min(back.end(), ns.end()); ++k) CHECK(back.at(k) == ns.at(k));
    auto sq = series_from_ints({1, 6, 9, 0, 0});  // (1 + 3q)^2
    auto rt = series_nth_root(sq, 2);
    CHECK(rt.at(0) == 1);
    CHECK(rt.at(rt.N) == 3);
    CHECK(rt.at(2 * rt.N) == 0);
}

TEST_CASE("f1 and f2 leading coefficients") {
    auto [f1, f2] = weight4_basis(8);
    CHECK(coeff(f1, 1, 3) == 1);
    CHECK(coeff(f1, 4, 3) == mpq_class(8, 3));
    CHECK(coeff(f1, 7, 3) == mpq_class(-76, 9));
    CHECK(coeff(f1, 10, 3) == mpq_class(-2048, 81));
    CHECK(coeff(f1, 2, 3) == 0);
    CHECK(coeff(f2, 2, 3) == 1);
    CHECK(coeff(f2, 5, 3) == mpq_class(16, 3));
    CHECK_FALSE(f1.is_integral());
    CHECK(f1.three_integral());
}

TEST_CASE("modular expansion agrees with the exact one") {
    auto [f1, f2] = weight4_basis(40);
    for (uint64_t M : {7ull * 7 * 7 * 7, 1000003ull, (1ull << 61) - 1}) {
        auto [m1, m2] = weight4_mod(M, 100);
        for (uint64_t m = 1; m <= 100; ++m) {
            if (m % 3 == 1) CHECK(m1.at(m) == mod_of(coeff(f1, (long)m, 3), M));
            if (m % 3 == 2) CHECK(m2.at(m) == mod_of(coeff(f2, (long)m, 3), M));
            if (m % 3 != 1) CHECK(m1.at(m) == 0);
        }
        CHECK_THROWS_AS(m1.at(101), Error);
    }
    CHECK_THROWS_AS(weight4_mod(9, 10), Error);
}

TEST_CASE("g+ and g- are Hecke eigenforms differing by the chi_{-3} twist") {
    auto [gp, gm] = eigenforms_g(200);
    CHECK(gp.at(1) == 1);
    CHECK(gp.at(5) == 18);
    CHECK(gp.at(25) == 199);
    CHECK(gp.at(7) == 8);
    CHECK(gp.at(49) == -279);
    for (auto* g : {&gp, &gm}) {
        // a(p^2) = a(p)^2 - p^3 and multiplicativity
        for (long p : {5, 7, 11, 13}) CHECK(g->at(p * p) == g->at(p) * g->at(p) - p * p * p);
        CHECK(g->at(35) == g->at(5) * g->at(7));
        CHECK(g->at(65) == g->at(5) * g->at(13));
    }
    for (long p : {5, 7, 11, 13, 17, 19, 23, 29, 31}) {
        int chi = p % 3 == 1 ? 1 : -1;
        CHECK(gm.at(p) == gp.at(p) * chi);
    }
    // g+ - g- = 36 (h(6z) + 3 h(18z)) with h = eta(z)^2 eta(3z)^6, by naive products
    const size_t len = 200;
    std::vector<long> h6(len, 0), h18(len, 0);
    auto a = mul(euler_power(6, 2, len), euler_power(18, 6, len));
    for (size_t k = 0; k + 5 < len; ++k) h6[k + 5] = a[k];
    auto b = mul(euler_power(18, 2, len), euler_power(54, 6, len));
    for (size_t k = 0; k + 15 < len; ++k) h18[k + 15] = b[k];
    for (long m = 1; m < std::min<long>(gp.end(), (long)len); ++m)
        CHECK(gp.at(m) - gm.at(m) == 36 * (h6[m] + 3 * h18[m]));
}

TEST_CASE("reading past the precision is a capacity error") {
    auto s = eta_quotient({{1, 1}}, 5);
    CHECK_THROWS_AS(s.at(s.end() * 10), Error);
}
