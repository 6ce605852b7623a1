#pragma once
// Exact arithmetic in Z[zeta_n] in the power basis mod Phi_n.

#include <complex>
#include <string>
#include <vector>

#include <gmpxx.h>

namespace scholl {

int euler_phi(int n);

class CycInt {
public:
    CycInt() = default;
    explicit CycInt(int n);                 // zero
    CycInt(int n, const mpz_class& c);      // rational integer
    CycInt(int n, std::vector<mpz_class> coeffs);  // already reduced, length phi(n)

    static CycInt reduce(int n, const std::vector<mpz_class>& raw);  // raw[k] is the coefficient of zeta^k
    static CycInt zeta_pow(int n, long long k);

    int n() const { return n_; }
    const std::vector<mpz_class>& coeffs() const { return c_; }

    CycInt operator+(const CycInt& o) const;
    CycInt operator-(const CycInt& o) const;
    CycInt operator-() const;
    CycInt operator*(const CycInt& o) const;
    CycInt operator*(const mpz_class& s) const;
    CycInt& operator+=(const CycInt& o) { return *this = *this + o; }
    CycInt& operator-=(const CycInt& o) { return *this = *this - o; }
    CycInt& operator*=(const CycInt& o) { return *this = *this * o; }
    bool operator==(const CycInt& o) const { return n_ == o.n_ && c_ == o.c_; }
    bool operator!=(const CycInt& o) const { return !(*this == o); }
    CycInt pow(unsigned e) const;

    bool is_zero() const;
    bool is_rational() const;  // all non-constant coefficients vanish
    mpz_class rational_value() const;  // constant coefficient; caller checks is_rational

    // Exact division by a rational integer; throws when not exact.
    CycInt div_exact(const mpz_class& d) const;
    bool divisible_by(const mpz_class& d) const;

    CycInt galois_conjugate(long long j) const;
    std::complex<long double> embed(long long j) const;
    long double max_abs_embedding() const;  // over j coprime to n

    // Natural inclusion Z[zeta_n] -> Z[zeta_{n*m}], zeta_n -> zeta_{nm}^m.
    CycInt lift(int m) const;

    std::string to_string() const;

private:
    int n_ = 0;
    std::vector<mpz_class> c_;
};

// X^2 - T X + D over Z[zeta_n].
struct QuadraticFactor {
    CycInt T, D;
};

// The factors at j in (Z/n)^x, in increasing j.
std::vector<QuadraticFactor> conjugate_orbit(const QuadraticFactor& f);

// Product of X^2 - T_j X + D_j over the given factors; every coefficient
// must be a rational integer. Constant term first.
std::vector<mpz_class> induce_to_integers(const std::vector<QuadraticFactor>& factors);

// Product of linear/quadratic polynomials with CycInt coefficients.
std::vector<CycInt> cyc_poly_mul(const std::vector<CycInt>& a, const std::vector<CycInt>& b);

std::vector<int> units_mod(int n);  // 1 <= j < n, gcd(j,n) = 1 (for n = 1, 2: {1})

// Roots of a complex polynomial (constant term first) by Durand-Kerner.
std::vector<std::complex<long double>> poly_roots(const std::vector<std::complex<long double>>& coeffs);

}  // namespace scholl
