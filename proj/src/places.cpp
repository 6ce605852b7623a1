#include "places.hpp"

namespace scholl {

namespace {

Elem eval_in(const FieldCtx& F, const Poly& m, Elem x) {
    Elem r = 0;
    for (size_t i = m.size(); i-- > 0;) r = F.add(F.mul(r, x), F.from_int((long long)m[i]));
    return r;
}

}  // namespace

SymbolField make_symbol_field(int n, FieldPtr ctx, Elem omega) {
    uint64_t m = ctx->q - 1;
    if (n < 1 || m % n) throw Error(Error::Domain, "n does not divide q - 1");
    if (omega == 0 || ctx->order(omega) != (uint64_t)n)
        throw Error(Error::Domain, "omega is not a primitive n-th root of unity");
    SymbolField sf;
    sf.n = n;
    sf.ctx = ctx;
    sf.omega = omega;
    Elem h = ctx->pow(ctx->g, m / n);
    Elem w = 1;
    for (int k = 0; k < n; ++k) {
        if (w == h) { sf.u = k; return sf; }
        w = ctx->mul(w, omega);
    }
    throw Error(Error::Consistency, "g^{(q-1)/n} not in <omega>");
}

int SymbolField::symbol_exp(Elem a) const {
    if (a == 0) return -1;
    if (ctx->has_tables()) return (int)((unsigned __int128)ctx->dlog(a) * (unsigned)u % (unsigned)n);
    Elem b = ctx->pow(a, (ctx->q - 1) / n), w = 1;
    for (int k = 0; k < n; ++k) {
        if (w == b) return k;
        w = ctx->mul(w, omega);
    }
    throw Error(Error::Consistency, "power residue not an n-th root of unity");
}

CycInt SymbolField::symbol(Elem a) const {
    int k = symbol_exp(a);
    if (k < 0) return CycInt(n);
    return CycInt::zeta_pow(n, k);
}

const SymbolField& Place::sf() const {
    if (!field) throw Error(Error::Capacity, "residue field of size " + Np.get_str() + " exceeds 2^32");
    return *field;
}

SymbolField Place::extension(int k) const {
    if (k == 1) return sf();
    mpz_class Q;
    mpz_ui_pow_ui(Q.get_mpz_t(), p, (unsigned long)(k * f));
    if (Q > mpz_class((unsigned long)kTableCap))
        throw Error(Error::Capacity, "extension field of size " + Q.get_str() + " exceeds the table cap 2^24");
    auto big = FieldCtx::galois_field(p, k * f);
    Elem h = big->pow(big->g, (big->q - 1) / n);
    for (int j : units_mod(n)) {
        Elem w = big->pow(h, (uint64_t)j);
        if (eval_in(*big, factor, w) == 0) return make_symbol_field(n, big, w);
    }
    throw Error(Error::Consistency, "factor has no root in the extension field");
}

std::vector<Place> enumerate_places(int n, uint64_t p) {
    if (n < 2) throw Error(Error::Domain, "n must be >= 2");
    auto factors = factor_cyclotomic(n, p);
    std::vector<Place> out;
    int idx = 0;
    for (auto& fac : factors) {
        Place pl;
        pl.n = n;
        pl.p = p;
        pl.factor = fac;
        pl.f = poly::deg(fac);
        pl.index = idx++;
        mpz_ui_pow_ui(pl.Np.get_mpz_t(), p, (unsigned long)pl.f);
        if (pl.Np <= mpz_class((unsigned long)(1ull << 32))) {
            bool tables = pl.Np <= mpz_class((unsigned long)kTableCap);
            FieldPtr ctx = pl.f == 1 ? FieldCtx::prime_field(p, tables) : FieldCtx::extension(p, fac, tables);
            Elem omega = pl.f == 1 ? (p - fac[0]) % p : ctx->from_poly(Poly{0, 1});
            pl.field = make_symbol_field(n, ctx, omega);
        }
        out.push_back(std::move(pl));
    }
    return out;
}

CycInt residue_symbol(const Place& pl, Elem a) { return pl.sf().symbol(a); }

CycInt minus_one_symbol(const Place& pl) {
    const auto& s = pl.sf();
    return s.symbol(s.ctx->neg(1));
}

SymbolField restrict_symbol(const SymbolField& sf, int d) {
    if (d < 1 || sf.n % d) throw Error(Error::Domain, "d must divide n");
    return make_symbol_field(sf.n / d, sf.ctx, sf.ctx->pow(sf.omega, (uint64_t)d));
}

Place place_below(const Place& pl, int d) {
    if (d < 1 || pl.n % d) throw Error(Error::Domain, "d must divide n");
    const auto& s = pl.sf();
    Elem e = s.ctx->pow(s.omega, (uint64_t)d);
    for (auto& cand : enumerate_places(pl.n / d, pl.p)) {
        if (eval_in(*s.ctx, cand.factor, e) == 0) return cand;
    }
    throw Error(Error::Consistency, "no place below");
}

}  // namespace scholl
