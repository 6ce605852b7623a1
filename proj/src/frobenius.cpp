#include "frobenius.hpp"

#include <cmath>
#include <numeric>

namespace scholl {

namespace {

void check_purity(const CycInt& D, const mpz_class& Np, double tol) {
    double target = Np.get_d() * Np.get_d();
    for (int j : units_mod(D.n())) {
        double a = (double)std::abs(D.embed(j));
        if (std::fabs(a - target) > tol * target)
            throw Error(Error::Consistency, "determinant embedding " + std::to_string(a) + " differs from Np^2");
    }
}

FrobeniusDatum datum_from(int n, int i, const Place& pl, const SymbolHistogram& h1, const SymbolHistogram& h2) {
    FrobeniusDatum d;
    d.n = n;
    d.i = i;
    d.place = pl;
    d.T = h1.sum(i);
    d.S2 = h2.sum(i);
    CycInt t2 = d.T * d.T - d.S2;
    if (!t2.divisible_by(2)) throw Error(Error::Consistency, "T^2 - S2 is not divisible by 2");
    d.D = t2.div_exact(2);
    check_purity(d.D, pl.Np, 1e-6);
    return d;
}

}  // namespace

std::vector<mpz_class> int_poly_mul(const std::vector<mpz_class>& a, const std::vector<mpz_class>& b) {
    if (a.empty() || b.empty()) return {};
    std::vector<mpz_class> r(a.size() + b.size() - 1);
    for (size_t i = 0; i < a.size(); ++i)
        for (size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
    return r;
}

FrobeniusDatum frobenius_datum(int n, int i, const Place& pl, Method m) {
    if (i < 1 || i >= n || std::gcd(i, n) != 1) throw Error(Error::Domain, "i must be coprime to n");
    auto h1 = histogram(pl.sf(), m);
    auto h2 = histogram(pl.extension(2), m);
    return datum_from(n, i, pl, h1, h2);
}

std::vector<FrobeniusDatum> frobenius_data(int n, const Place& pl, Method m) {
    auto h1 = histogram(pl.sf(), m);
    auto h2 = histogram(pl.extension(2), m);
    std::vector<FrobeniusDatum> out;
    for (int i : units_mod(n)) out.push_back(datum_from(n, i, pl, h1, h2));
    return out;
}

NewtonReport newton_cubic_check(const FrobeniusDatum& d, const SymbolHistogram& h3) {
    NewtonReport r;
    r.expected = d.T * d.T * d.T - d.T * d.D * mpz_class(3);
    r.observed = h3.sum(d.i);
    r.ok = r.expected == r.observed;
    return r;
}

NewtonReport newton_cubic_check(const FrobeniusDatum& d, Method m) {
    return newton_cubic_check(d, histogram(d.place.extension(3), m));
}

PurityReport weight3_weil_verify(const FrobeniusDatum& d, double tol) {
    PurityReport r;
    const double Np = d.place.Np.get_d();
    r.min_det = INFINITY;
    bool ok = true;
    for (int j : units_mod(d.n)) {
        auto T = d.T.embed(j), D = d.D.embed(j);
        double at = (double)std::abs(T), ad = (double)std::abs(D);
        r.max_trace = std::max(r.max_trace, at);
        r.min_det = std::min(r.min_det, ad);
        r.max_det = std::max(r.max_det, ad);
        if (at > 2 * Np * (1 + tol)) ok = false;
        if (std::fabs(ad - Np * Np) > tol * Np * Np) ok = false;
        auto disc = std::sqrt(T * T - 4.0L * D);
        for (auto root : {(T + disc) / 2.0L, (T - disc) / 2.0L}) {
            double dev = std::fabs((double)std::abs(root) - Np) / Np;
            r.max_root_dev = std::max(r.max_root_dev, dev);
            if (dev > tol) ok = false;
        }
    }
    r.ok = ok;
    return r;
}

std::vector<mpz_class> induce_place(const std::vector<FrobeniusDatum>& data) {
    std::vector<QuadraticFactor> factors;
    for (auto& d : data) {
        const auto& first = data.front();
        if (d.T != first.T.galois_conjugate(d.i) || d.D != first.D.galois_conjugate(d.i))
            throw Error(Error::Consistency, "Frobenius data for i=" + std::to_string(d.i) + " is not conjugate to i=1");
        factors.push_back({d.T, d.D});
    }
    return induce_to_integers(factors);
}

InducedCharpoly induce_charpoly(int n, uint64_t p, Method m) {
    InducedCharpoly out;
    out.n = n;
    out.p = p;
    out.product = {mpz_class(1)};
    auto places = enumerate_places(n, p);
    for (auto& pl : places) {
        auto poly = induce_place(frobenius_data(n, pl, m));
        out.per_place.push_back(poly);
        out.product = int_poly_mul(out.product, poly);
    }
    out.places_agree = true;
    for (auto& pp : out.per_place)
        if (pp != out.per_place.front()) out.places_agree = false;
    return out;
}

}  // namespace scholl
