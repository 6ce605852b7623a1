#include "cyclotomic.hpp"

#include <cmath>
#include <numeric>

#include "ff.hpp"

namespace scholl {

int euler_phi(int n) {
    int r = n, m = n;
    for (int d = 2; d * d <= m; ++d) {
        if (m % d == 0) {
            while (m % d == 0) m /= d;
            r -= r / d;
        }
    }
    if (m > 1) r -= r / m;
    return r;
}

std::vector<int> units_mod(int n) {
    std::vector<int> out;
    if (n <= 2) return {1};
    for (int j = 1; j < n; ++j)
        if (std::gcd(j, n) == 1) out.push_back(j);
    return out;
}

CycInt::CycInt(int n) : n_(n), c_(euler_phi(n)) {}

CycInt::CycInt(int n, const mpz_class& c) : n_(n), c_(euler_phi(n)) { c_[0] = c; }

CycInt::CycInt(int n, std::vector<mpz_class> coeffs) : n_(n), c_(std::move(coeffs)) {
    if ((int)c_.size() != euler_phi(n)) throw Error(Error::Domain, "coefficient vector must have length phi(n)");
}

CycInt CycInt::reduce(int n, const std::vector<mpz_class>& raw) {
    auto phi = cyclotomic_poly(n);
    int d = (int)phi.size() - 1;
    std::vector<mpz_class> r = raw;
    if ((int)r.size() < d) r.resize(d);
    for (int i = (int)r.size() - 1; i >= d; --i) {
        if (r[i] == 0) continue;
        mpz_class c = r[i];
        for (int j = 0; j <= d; ++j) r[i - d + j] -= c * (long)phi[j];
    }
    r.resize(d);
    return CycInt(n, std::move(r));
}

CycInt CycInt::zeta_pow(int n, long long k) {
    k %= n;
    if (k < 0) k += n;
    std::vector<mpz_class> raw(n);
    raw[k] = 1;
    return reduce(n, raw);
}

CycInt CycInt::operator+(const CycInt& o) const {
    CycInt r = *this;
    for (size_t i = 0; i < c_.size(); ++i) r.c_[i] += o.c_[i];
    return r;
}

CycInt CycInt::operator-(const CycInt& o) const {
    CycInt r = *this;
    for (size_t i = 0; i < c_.size(); ++i) r.c_[i] -= o.c_[i];
    return r;
}

CycInt CycInt::operator-() const {
    CycInt r = *this;
    for (auto& c : r.c_) c = -c;
    return r;
}

CycInt CycInt::operator*(const CycInt& o) const {
    if (n_ != o.n_) throw Error(Error::Domain, "mixed cyclotomic conductors");
    std::vector<mpz_class> raw(2 * c_.size() + 1);
    for (size_t i = 0; i < c_.size(); ++i) {
        if (c_[i] == 0) continue;
        for (size_t j = 0; j < o.c_.size(); ++j) raw[i + j] += c_[i] * o.c_[j];
    }
    return reduce(n_, raw);
}

CycInt CycInt::operator*(const mpz_class& s) const {
    CycInt r = *this;
    for (auto& c : r.c_) c *= s;
    return r;
}

CycInt CycInt::pow(unsigned e) const {
    CycInt r(n_, mpz_class(1)), b = *this;
    while (e) {
        if (e & 1) r = r * b;
        b = b * b;
        e >>= 1;
    }
    return r;
}

bool CycInt::is_zero() const {
    for (auto& c : c_)
        if (c != 0) return false;
    return true;
}

bool CycInt::is_rational() const {
    for (size_t i = 1; i < c_.size(); ++i)
        if (c_[i] != 0) return false;
    return true;
}

mpz_class CycInt::rational_value() const { return c_.empty() ? mpz_class(0) : c_[0]; }

bool CycInt::divisible_by(const mpz_class& d) const {
    for (auto& c : c_)
        if (!mpz_divisible_p(c.get_mpz_t(), d.get_mpz_t())) return false;
    return true;
}

CycInt CycInt::div_exact(const mpz_class& d) const {
    if (!divisible_by(d)) throw Error(Error::Consistency, "inexact division by " + d.get_str());
    CycInt r = *this;
    for (auto& c : r.c_) mpz_divexact(c.get_mpz_t(), c.get_mpz_t(), d.get_mpz_t());
    return r;
}

CycInt CycInt::galois_conjugate(long long j) const {
    if (std::gcd((long long)n_, ((j % n_) + n_) % n_) != 1 && n_ > 1)
        throw Error(Error::Domain, "conjugation exponent not coprime to n");
    long long jj = ((j % n_) + n_) % n_;
    std::vector<mpz_class> raw(n_);
    for (size_t k = 0; k < c_.size(); ++k) raw[(k * jj) % n_] += c_[k];
    return reduce(n_, raw);
}

std::complex<long double> CycInt::embed(long long j) const {
    const long double tau = 2.0L * acosl(-1.0L);
    std::complex<long double> s = 0;
    for (size_t k = 0; k < c_.size(); ++k) {
        if (c_[k] == 0) continue;
        long long e = (long long)((k * (unsigned long long)(((j % n_) + n_) % n_)) % n_);
        long double ang = tau * (long double)e / n_;
        s += (long double)c_[k].get_d() * std::complex<long double>(cosl(ang), sinl(ang));
    }
    return s;
}

long double CycInt::max_abs_embedding() const {
    long double m = 0;
    for (int j : units_mod(n_)) m = std::max(m, std::abs(embed(j)));
    return m;
}

CycInt CycInt::lift(int m) const {
    std::vector<mpz_class> raw(n_ * m);
    for (size_t k = 0; k < c_.size(); ++k) raw[k * m] = c_[k];
    return reduce(n_ * m, raw);
}

std::string CycInt::to_string() const {
    std::string s;
    for (size_t k = 0; k < c_.size(); ++k) {
        if (c_[k] == 0) continue;
        std::string coef = c_[k].get_str();
        if (!s.empty()) {
            if (coef[0] == '-') { s += " - "; coef = coef.substr(1); }
            else s += " + ";
        }
        if (k == 0) s += coef;
        else {
            if (coef == "1") coef = "";
            else if (coef == "-1") coef = "-";
            s += coef + "z" + (k > 1 ? "^" + std::to_string(k) : "");
        }
    }
    return s.empty() ? "0" : s;
}

std::vector<QuadraticFactor> conjugate_orbit(const QuadraticFactor& f) {
    std::vector<QuadraticFactor> out;
    for (int j : units_mod(f.T.n())) out.push_back({f.T.galois_conjugate(j), f.D.galois_conjugate(j)});
    return out;
}

std::vector<CycInt> cyc_poly_mul(const std::vector<CycInt>& a, const std::vector<CycInt>& b) {
    if (a.empty() || b.empty()) return {};
    int n = a[0].n();
    std::vector<CycInt> r(a.size() + b.size() - 1, CycInt(n));
    for (size_t i = 0; i < a.size(); ++i)
        for (size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
    return r;
}

std::vector<mpz_class> induce_to_integers(const std::vector<QuadraticFactor>& factors) {
    if (factors.empty()) return {mpz_class(1)};
    int n = factors[0].T.n();
    std::vector<CycInt> acc{CycInt(n, mpz_class(1))};
    for (auto& f : factors) {
        if (f.T.n() != n || f.D.n() != n) throw Error(Error::Domain, "mixed conductors in induction");
        acc = cyc_poly_mul(acc, {f.D, -f.T, CycInt(n, mpz_class(1))});
    }
    std::vector<mpz_class> out;
    for (auto& c : acc) {
        if (!c.is_rational())
            throw Error(Error::Consistency, "induced polynomial is not integral (input not Galois stable)");
        out.push_back(c.rational_value());
    }
    return out;
}

std::vector<std::complex<long double>> poly_roots(const std::vector<std::complex<long double>>& coeffs) {
    using C = std::complex<long double>;
    int d = (int)coeffs.size() - 1;
    while (d > 0 && std::abs(coeffs[d]) == 0) --d;
    if (d < 1) return {};
    std::vector<C> a(d + 1);
    for (int i = 0; i <= d; ++i) a[i] = coeffs[i] / coeffs[d];
    long double radius = 0;
    for (int i = 0; i < d; ++i) radius = std::max(radius, std::pow(std::abs(a[i]), 1.0L / (d - i)));
    radius = std::max(radius, 1.0L);
    std::vector<C> z(d);
    for (int i = 0; i < d; ++i) z[i] = radius * std::polar(1.0L, 0.4L + 2.0L * acosl(-1.0L) * i / d);
    auto ev = [&](C x) {
        C r = 1;
        for (int i = d - 1; i >= 0; --i) r = r * x + a[i];
        return r;
    };
    for (int it = 0; it < 2000; ++it) {
        long double moved = 0;
        for (int i = 0; i < d; ++i) {
            C den = 1;
            for (int j = 0; j < d; ++j)
                if (j != i) den *= (z[i] - z[j]);
            if (std::abs(den) == 0) den = 1e-30L;
            C step = ev(z[i]) / den;
            z[i] -= step;
            moved = std::max(moved, std::abs(step) / std::max(1.0L, std::abs(z[i])));
        }
        if (moved < 1e-18L) break;
    }
    return z;
}

}  // namespace scholl
