#include <doctest.h>

#include "asd.hpp"

using namespace scholl;

namespace {

mpz_class pw(unsigned long p, unsigned long e) {
    mpz_class r;
    mpz_ui_pow_ui(r.get_mpz_t(), p, e);
    return r;
}

}  // namespace

TEST_CASE("published table loads and every row is self-dual and pure") {
    auto rows = load_weight4_table();
    REQUIRE(rows.size() == 7);
    std::vector<uint64_t> ps;
    for (auto& r : rows) {
        ps.push_back(r.quartic.p);
        CHECK(r.quartic.self_dual());
        CHECK(r.quartic.A0 == pw(r.quartic.p, 6));
        auto pur = quartic_purity(r.quartic);
        CHECK(pur.exact);
        CHECK(pur.ok);
        CHECK(factor_check(r.quartic, r.first, r.second).ok);
    }
    CHECK(ps == std::vector<uint64_t>{5, 7, 11, 13, 17, 23, 31});
    CHECK(rows[1].quartic.A3 == 8);
    CHECK(rows[1].quartic.A2 == -279);
    CHECK(rows[3].quartic.A3 == -10);
    CHECK(rows[3].quartic.A2 == -2097);
}

TEST_CASE("sign-flipped factor is rejected") {
    auto row = load_weight4_table().at(1);
    auto bad = row.first;
    bad.T = -bad.T;
    CHECK_FALSE(factor_check(row.quartic, bad, row.second).ok);
}

TEST_CASE("congruences for r >= 0 hold on the table and fail on perturbations") {
    auto rows = load_weight4_table();
    for (size_t k : {0u, 1u, 4u}) {
        const auto& q = rows[k].quartic;
        for (int f : {1, 2}) CHECK(asd_verify(f, q, 0, 1).ok);
        auto bad = self_dual_quartic(q.p, q.A3 + 1, q.A2);
        bool any_fail = !asd_verify(1, bad, 0, 1).ok || !asd_verify(2, bad, 0, 1).ok;
        CHECK(any_fail);
        auto bad2 = self_dual_quartic(q.p, q.A3, q.A2 + (long)q.p);
        CHECK_FALSE((asd_verify(1, bad2, 0, 1).ok && asd_verify(2, bad2, 0, 1).ok));
    }
}

TEST_CASE("solve recovers small rows") {
    auto rows = load_weight4_table();
    for (size_t k : {0u, 1u, 2u}) {
        auto s = asd_solve(rows[k].quartic.p);
        CHECK(s.quartic == rows[k].quartic);
        CHECK_FALSE(s.used_split);
        CHECK(s.survivors.back() == 1);
    }
}

TEST_CASE("conjugate split over Z[zeta_3]") {
    auto rows = load_weight4_table();
    auto sp = zeta3_conjugate_split(rows[1].quartic);  // p = 7
    REQUIRE(sp.has_value());
    CHECK(factor_check(rows[1].quartic, sp->first, sp->second).ok);
    // a quartic that is not a norm from Z[zeta_3] has no split
    auto bad = self_dual_quartic(7, 9, -279);
    CHECK_FALSE(zeta3_conjugate_split(bad).has_value());
}

TEST_CASE("purity rejects a quartic with large middle coefficient") {
    auto q = self_dual_quartic(5, 0, pw(5, 3) * 3);
    CHECK_FALSE(quartic_purity(q).ok);
    CHECK_FALSE(quartic_purity(q).exact);
}
