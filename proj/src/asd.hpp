#pragma once
// Atkin-Swinnerton-Dyer congruences for the weight-4 forms f1, f2 and the
// degree-4 Frobenius polynomials they determine.

#include <optional>
#include <string>

#include "cyclotomic.hpp"
#include "qseries.hpp"

namespace scholl {

// T^4 + A3 T^3 + A2 T^2 + A1 T + A0
struct ASDQuartic {
    uint64_t p = 0;
    mpz_class A3, A2, A1, A0;

    std::vector<mpz_class> coeffs() const { return {A0, A1, A2, A3, mpz_class(1)}; }  // constant first
    bool self_dual() const;  // A0 = p^6 and A1 = p^3 A3
    bool operator==(const ASDQuartic& o) const {
        return p == o.p && A3 == o.A3 && A2 == o.A2 && A1 == o.A1 && A0 == o.A0;
    }
};

ASDQuartic self_dual_quartic(uint64_t p, const mpz_class& A3, const mpz_class& A2);

struct QuarticPurity {
    bool exact = false;  // via w = x + p^3/x, integer inequalities only
    double max_root_dev = 0;
    bool ok = false;
};
QuarticPurity quartic_purity(const ASDQuartic& q, double tol = 1e-6);

// Residues of a(p^{r+2}) + A3 a(p^{r+1}) + A2 a(p^r) + A1 a(p^{r-1}) + A0 a(p^{r-2}).
struct AsdRow {
    int r = 0;
    mpz_class modulus;  // p^{3+r}
    mpz_class residue;  // in [0, modulus)
    int valuation = 0;  // of the combination, capped at the working precision
    bool capped = false;
    bool ok = false;
};

struct AsdVerifyReport {
    uint64_t p = 0;
    int form = 0;  // 1 or 2
    int precision = 0;  // coefficients known mod p^precision
    std::vector<AsdRow> rows;
    bool ok = false;  // every row is zero
};

AsdVerifyReport asd_verify(const ModCoeffs& a, int form, const ASDQuartic& q, int r_min, int r_max);
// Expands f_form itself with enough precision for r_max.
AsdVerifyReport asd_verify(int form, const ASDQuartic& q, int r_min, int r_max);

// For p = 1 mod 3: the quartic as (X^2 - T X + D)(X^2 - T' X + D') with
// the second factor the complex conjugate of the first, T, D in Z[zeta_3].
std::optional<std::pair<QuadraticFactor, QuadraticFactor>> zeta3_conjugate_split(const ASDQuartic& q);

struct AsdSolveReport {
    ASDQuartic quartic;
    int r_used = 0;                      // congruences r = 0..r_used were imposed
    std::vector<size_t> survivors;       // per escalation step
    size_t weak_survivors = 0;           // same box under the mod p^{3+r} congruences alone
    bool used_split = false;             // the conjugate-pair condition decided
    size_t split_survivors = 0;
};

// Imposes A0 = p^6, A1 = p^3 A3 and the congruences mod p^{3(r+1)} for
// r = 0..R, both forms; escalates R until a single pure candidate remains.
// When escalation runs out of budget with several survivors and p = 1 mod 3,
// the conjugate-pair factorization over Z[zeta_3] is imposed.
AsdSolveReport asd_solve(uint64_t p, int r_limit = 3);

// Largest expansion length (terms of each f_i) asd_solve will compute.
inline constexpr uint64_t kAsdTermBudget = 40000;

struct FactorCheck {
    std::vector<mpz_class> product;  // constant first; empty when not integral
    bool ok = false;
};
FactorCheck factor_check(const ASDQuartic& q, const QuadraticFactor& a, const QuadraticFactor& b);

struct TableRow {
    ASDQuartic quartic;
    QuadraticFactor first, second;
    std::string quartic_text, factor_text;
};
std::vector<TableRow> load_weight4_table(const std::string& path = "");

}  // namespace scholl
