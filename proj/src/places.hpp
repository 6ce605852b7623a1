#pragma once
// Primes of Q(zeta_n) above p and n-th power residue symbols.

#include <optional>

#include "cyclotomic.hpp"
#include "ff.hpp"

namespace scholl {

// A residue field with a distinguished primitive n-th root of unity omega
// (the image of zeta_n). The symbol of a = g^e is zeta_n^{u e mod n}.
struct SymbolField {
    int n = 0;
    FieldPtr ctx;
    Elem omega = 0;
    int u = 0;  // with h = g^{(q-1)/n}: h = omega^u

    // Exponent k with a^{(q-1)/n} = omega^k, or -1 when a = 0.
    int symbol_exp(Elem a) const;
    CycInt symbol(Elem a) const;
};

SymbolField make_symbol_field(int n, FieldPtr ctx, Elem omega);

struct Place {
    int n = 0;
    uint64_t p = 0;
    Poly factor;
    int f = 0;
    int index = 0;
    mpz_class Np;
    std::optional<SymbolField> field;  // absent above the table capacity

    bool in_capacity() const { return field.has_value(); }
    const SymbolField& sf() const;
    // Degree-k extension of the residue field with omega carried along:
    // the big field is F_{p^{kf}} and omega is a root of the same factor.
    SymbolField extension(int k) const;
};

std::vector<Place> enumerate_places(int n, uint64_t p);

CycInt residue_symbol(const Place& pl, Elem a);
CycInt minus_one_symbol(const Place& pl);

// The place of Q(zeta_{n/d}) below pl, i.e. the factor of Phi_{n/d} mod p
// vanishing at omega^d.
Place place_below(const Place& pl, int d);

// Residue field of pl viewed as a symbol field for n/d: same field,
// omega replaced by omega^d.
SymbolField restrict_symbol(const SymbolField& sf, int d);

}  // namespace scholl
