#pragma once
// Degree-2 Frobenius data of the pieces sigma_{n,i}: trace, extension
// trace, determinant, and induction to integer polynomials.

#include "charsums.hpp"

namespace scholl {

struct FrobeniusDatum {
    int n = 0, i = 0;
    Place place;
    CycInt T, S2, D;
};

FrobeniusDatum frobenius_datum(int n, int i, const Place& pl, Method m = Method::Auto);
// Every i coprime to n from one pair of histograms, increasing i.
std::vector<FrobeniusDatum> frobenius_data(int n, const Place& pl, Method m = Method::Auto);

struct NewtonReport { CycInt expected, observed; bool ok = false; };
NewtonReport newton_cubic_check(const FrobeniusDatum& d, Method m = Method::Auto);
// h3 is the histogram over the cubic extension of the residue field.
NewtonReport newton_cubic_check(const FrobeniusDatum& d, const SymbolHistogram& h3);

struct PurityReport { double max_trace = 0, min_det = 0, max_det = 0, max_root_dev = 0; bool ok = false; };
PurityReport weight3_weil_verify(const FrobeniusDatum& d, double tol = 1e-6);

struct InducedCharpoly {
    int n = 0;
    uint64_t p = 0;
    std::vector<std::vector<mpz_class>> per_place;  // constant term first
    std::vector<mpz_class> product;
    bool places_agree = false;
};

// Product over i coprime to n of X^2 - T_i X + D_i; data as from frobenius_data.
std::vector<mpz_class> induce_place(const std::vector<FrobeniusDatum>& data);

InducedCharpoly induce_charpoly(int n, uint64_t p, Method m = Method::Auto);

std::vector<mpz_class> int_poly_mul(const std::vector<mpz_class>& a, const std::vector<mpz_class>& b);

}  // namespace scholl
