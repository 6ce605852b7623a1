#pragma once
// Exact q-expansions in q^{1/N}: eta quotients, roots, E2 and the weight-4
// forms. A parallel residue path works mod M for the long ASD expansions.

#include <cstdint>
#include <utility>
#include <vector>

#include <gmpxx.h>

namespace scholl {

// sum_k c[k] q^{(start+k)/N}; coefficients are known for k < c.size().
struct FracSeries {
    int N = 1;
    long long start = 0;
    std::vector<mpq_class> c;

    size_t prec() const { return c.size(); }
    long long end() const { return start + (long long)c.size(); }  // first unknown numerator
    bool is_zero() const;
    // Coefficient of q^{num/N}; zero below start, throws past precision.
    mpq_class at(long long num) const;
    bool is_integral() const;
    // Every denominator is a power of 3.
    bool three_integral() const;
};

FracSeries series_from_ints(const std::vector<long long>& c, int N = 1, long long start = 0);

// Smallest N that represents s exactly, dropping leading zeros.
FracSeries normalize(const FracSeries& s);
// Same series over the denominator M (a multiple of s.N).
FracSeries refine(const FracSeries& s, int M);

FracSeries operator+(const FracSeries& a, const FracSeries& b);
FracSeries operator-(const FracSeries& a, const FracSeries& b);
FracSeries operator*(const FracSeries& a, const FracSeries& b);
FracSeries operator*(const FracSeries& a, const mpq_class& s);
FracSeries inverse(const FracSeries& a);
FracSeries power(const FracSeries& a, int e);
// s(z) -> s(mz)
FracSeries rescale(const FracSeries& s, int m);

// The root with leading coefficient 1; the denominator grows when the
// leading exponent is not divisible by k.
FracSeries series_nth_root(const FracSeries& s, int k);

// prod_m eta(m z)^{e_m} with the Euler part known to prec terms in q.
FracSeries eta_quotient(const std::vector<std::pair<int, int>>& spec, int prec);
// 1 - 24 sum sigma_1(n) q^n
FracSeries e2_series(int prec);
// f1 = cube root of eta(2z)^48 / (eta(z)^8 eta(4z)^16), f2 likewise with
// eta(z)^16 eta(4z)^8. Both in q^{1/3}; prec is the q-precision before the root.
std::pair<FracSeries, FracSeries> weight4_basis(int prec);
// g_+ and g_- evaluated at 6z, so exponents are integers and the leading
// term is q. prec counts terms in that variable.
std::pair<FracSeries, FracSeries> eigenforms_g(int prec);

// Coefficients a_i(m) of f_i reduced mod M, for m = res + 3k, k < r.size().
struct ModCoeffs {
    uint64_t M = 0;
    int res = 0;
    uint64_t limit = 0;  // every index up to limit is known
    std::vector<uint64_t> r;

    uint64_t max_index() const { return limit; }
    // a(m) mod M; zero when m < 1 or m != res mod 3; throws past precision.
    uint64_t at(uint64_t m) const;
};

// f1, f2 mod M with every index up to max_index present. M must be prime
// to 6 and below 2^62.
std::pair<ModCoeffs, ModCoeffs> weight4_mod(uint64_t M, uint64_t max_index);

}  // namespace scholl
