#pragma once
// Character sums S(n,i,p) = sum_{x,y} xi^i(f_n(x,y)).

#include <complex>
#include <string>

#include "places.hpp"

namespace scholl {

// Distribution of the symbol over the grid: H[k] counts pairs (x,y)
// with xi(f_n(x,y)) = zeta_n^k. Every S(n,i) is sum_k H[k] zeta^{ik}.
struct SymbolHistogram {
    int n = 0;
    uint64_t q = 0;
    std::vector<int64_t> H;
    std::string method;
    double margin = 0;  // greene only: worst distance to the integer lattice
    double ms = 0;

    CycInt sum(int i) const;
};

enum class Method { Brute, Greene, Auto };

// Above this field size Auto switches from brute force to Gauss sums.
inline constexpr uint64_t kBruteThreshold = 4096;

// Brute force over the log grid. The a-range is split into `chunks`
// independent partial histograms which are summed at the end.
SymbolHistogram histogram_brute(const SymbolField& sf, int chunks = 1);
SymbolHistogram histogram_greene(const SymbolField& sf, bool naive_dft = false);
SymbolHistogram histogram(const SymbolField& sf, Method m);

// Gauss sums G[c] = sum_{x != 0} chi^c(x) psi(Tr x) with chi(g) = e^{2 pi i/(q-1)}.
std::vector<std::complex<double>> gauss_sums(const FieldCtx& F, bool naive_dft = false);
// Jacobi sum J(chi^a, chi^b) from a Gauss-sum table (characters extended by 0).
std::complex<double> jacobi_from_gauss(const std::vector<std::complex<double>>& G, uint64_t q, uint64_t a, uint64_t b);

// f_n(x,y) = (xy)^{n-1}(1-x)(1-y)(1-xy)^{n-1}
Elem eval_fn(const FieldCtx& F, int n, Elem x, Elem y);

struct CharSumResult {
    int n = 0, i = 0;
    Place place;
    CycInt value;
    std::string method;
    double ms = 0;
};

CharSumResult trace_sum(int n, int i, const Place& pl);
CharSumResult trace_sum_greene(int n, int i, const Place& pl);

struct TwistReport { CycInt lhs, rhs, symbol; bool ok = false; };
TwistReport twist_check(int n, int i, const Place& pl, Method m = Method::Auto);

struct WeilReport { double max_abs = 0, bound = 0; bool ok = false; };
WeilReport weil_check(const CycInt& value, const mpz_class& Np, double tol = 1e-6);
WeilReport weil_check(const CharSumResult& r);

struct GcdReport { CycInt value_n, value_nd; int d = 0; bool ok = false; };
GcdReport gcd_reduction_check(int n, int i, const Place& pl_n, const Place& pl_nd, Method m = Method::Auto);

CycInt new_part_trace(int n, const Place& pl, Method m = Method::Auto);

struct CountReport { mpz_class lhs, rhs; bool ok = false; };
CountReport solution_count_identity(int n, const Place& pl);

}  // namespace scholl
