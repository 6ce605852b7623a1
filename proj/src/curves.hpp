#pragma once
// Point counts for the weight-2 curve examples and pointwise checks of the
// symmetry maps on E_n.

#include "places.hpp"

namespace scholl {

// q = p^k for a prime p, or 0 when q is not a prime power.
uint64_t prime_power_base(uint64_t q, int* k = nullptr);

struct SuperellipticCount {
    uint64_t affine_count = 0;
    uint64_t zero_count = 0;             // x with f(x) = 0 (one point each)
    std::vector<CycInt> char_decomposition;  // index i-1 holds sum_x chi^i(f(x)), i = 1..N
    bool ok = false;                      // zero_count + sum_i decomposition == affine_count
};

// f has coefficients in F (constant first); chi(g^e) = zeta_N^e.
SuperellipticCount superelliptic_count(int N, const std::vector<Elem>& f, const FieldCtx& F);

struct GenusTwoL {
    uint64_t p = 0;
    long long a1 = 0, a2 = 0;
    uint64_t N1 = 0, N2 = 0;
    bool pure = false;
    double max_root_dev = 0;
};

// Sextic with integer coefficients (constant first, leading 1).
GenusTwoL genus2_lpoly(const std::vector<long long>& f, uint64_t p);

struct CbReport {
    long long b = 0;
    uint64_t p = 0;
    GenusTwoL L;
    std::string kind;  // "trace-zero" (p = 2 mod 3) or "square" (p = 1 mod 3)
    long long c = 0;   // the paired/squared quadratic is 1 + cT + pT^2
    bool ok = false;
};
CbReport cb_structure_check(long long b, uint64_t p);

struct MapReport {
    uint64_t points = 0;
    uint64_t failures = 0;
    bool ok = false;
    std::string detail;
};

MapReport involution_check(long long a, uint64_t q);
// Checks every square root w of omega with w^n = -1 (a primitive 2n-th root).
MapReport en_symmetry_check(int n, uint64_t q);
MapReport frobenius_commutation_check(int n, uint64_t p, int k);

}  // namespace scholl
