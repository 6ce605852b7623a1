#pragma once
// Finite fields F_p and F_{p^f}, polynomials over F_p, and cyclotomic
// factorization mod p.

#include <cstdint>
#include <memory>
#include <stdexcept>
#include <string>
#include <vector>

#include <gmpxx.h>

namespace scholl {

class Error : public std::runtime_error {
public:
    enum Kind { Domain, Capacity, Consistency, Precision, Usage, Io };
    Error(Kind k, const std::string& msg) : std::runtime_error(msg), kind(k) {}
    Kind kind;
};

// Tables are built only for fields with q <= kTableCap.
inline constexpr uint64_t kTableCap = 1ull << 24;

bool is_prime(uint64_t n);
std::vector<uint64_t> prime_factors(uint64_t n);  // distinct, ascending
uint64_t powmod_u64(uint64_t b, uint64_t e, uint64_t m);
uint64_t mulmod_u64(uint64_t a, uint64_t b, uint64_t m);
int64_t mod_inverse(int64_t a, int64_t m);  // throws when not invertible
int multiplicative_order(uint64_t a, uint64_t n);  // order of a mod n, gcd(a,n)=1

// Dense polynomial over F_p, constant term first, no trailing zeros.
// The zero polynomial is the empty vector.
using Poly = std::vector<uint64_t>;

namespace poly {
void trim(Poly& a);
int deg(const Poly& a);  // -1 for zero
Poly add(const Poly& a, const Poly& b, uint64_t p);
Poly sub(const Poly& a, const Poly& b, uint64_t p);
Poly mul(const Poly& a, const Poly& b, uint64_t p);
Poly scale(const Poly& a, uint64_t c, uint64_t p);
void divmod(const Poly& a, const Poly& b, uint64_t p, Poly& quo, Poly& rem);
Poly mod(const Poly& a, const Poly& b, uint64_t p);
Poly monic(const Poly& a, uint64_t p);
Poly gcd(Poly a, Poly b, uint64_t p);  // monic
Poly powmod(const Poly& base, const mpz_class& e, const Poly& m, uint64_t p);
Poly derivative(const Poly& a, uint64_t p);
Poly x_power(unsigned k);
uint64_t eval(const Poly& a, uint64_t x, uint64_t p);
// Splits a squarefree product of distinct monic irreducibles of degree k.
std::vector<Poly> equal_degree_factor(const Poly& m, int k, uint64_t p, uint64_t seed);
// Returns an empty Poly when m is irreducible, otherwise a nontrivial
// monic factor of m.
Poly find_factor(const Poly& m, uint64_t p);
// First monic irreducible polynomial of degree d over F_p in a fixed
// enumeration order (used for auxiliary fields).
Poly first_irreducible(uint64_t p, int d);
}  // namespace poly

// Integer cyclotomic polynomial, constant term first.
std::vector<long long> cyclotomic_poly(int n);

// Monic irreducible factors of Phi_n mod p, sorted lexicographically by
// coefficient vector (constant term first).
std::vector<Poly> factor_cyclotomic(int n, uint64_t p);

// Elements of F_{p^f} are encoded as integers sum c_j p^j (0 <= code < q).
using Elem = uint64_t;

class FieldCtx {
public:
    uint64_t p = 0;
    int f = 1;
    Poly modulus;  // monic, degree f; for f = 1 it is X
    uint64_t q = 0;
    Elem g = 0;  // generator of F_q^*

    static std::shared_ptr<const FieldCtx> prime_field(uint64_t p, bool tables = true);
    static std::shared_ptr<const FieldCtx> extension(uint64_t p, const Poly& modulus, bool tables = true);
    // F_{p^k} with the first irreducible modulus of degree k.
    static std::shared_ptr<const FieldCtx> galois_field(uint64_t p, int k, bool tables = true);

    bool has_tables() const { return !log_.empty(); }

    Elem zero() const { return 0; }
    Elem one() const { return 1; }
    Elem from_int(long long v) const;
    Elem from_poly(const Poly& a) const;  // reduced mod modulus
    Poly to_poly(Elem a) const;

    Elem add(Elem a, Elem b) const;
    Elem sub(Elem a, Elem b) const;
    Elem neg(Elem a) const;
    Elem mul(Elem a, Elem b) const;
    Elem inv(Elem a) const;
    Elem div(Elem a, Elem b) const { return mul(a, inv(b)); }
    Elem pow(Elem a, const mpz_class& e) const;
    Elem pow(Elem a, uint64_t e) const;
    Elem frob(Elem a) const { return pow(a, p); }  // a -> a^p
    uint64_t trace(Elem a) const;  // absolute trace to F_p

    // Discrete log base g; requires tables.
    uint64_t dlog(Elem a) const;
    Elem exp(uint64_t k) const;  // g^k
    const std::vector<uint32_t>& exp_table() const { return exp_; }
    const std::vector<uint32_t>& log_table() const { return log_; }

    uint64_t order(Elem a) const;  // multiplicative order, a != 0

private:
    void init(bool tables);
    Elem mul_slow(Elem a, Elem b) const;
    std::vector<uint32_t> exp_, log_;  // exp_[k] = g^k, log_[a] = k (log_[0] unused)
    std::vector<uint64_t> tr_basis_;    // Tr(X^j)
    std::vector<uint64_t> pw_;          // p^j
};

using FieldPtr = std::shared_ptr<const FieldCtx>;

}  // namespace scholl
