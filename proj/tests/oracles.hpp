#pragma once
// Slow reference computations shared by the unit tests.

#include "places.hpp"

namespace oracle {

using namespace scholl;

// chi^i(f_n(x, y)) summed over the whole residue field, each value located by
// raising to (q-1)/n and comparing with powers of omega. No logarithm tables.
inline CycInt direct_sum(const SymbolField& sf, int i) {
    const FieldCtx& F = *sf.ctx;
    const int n = sf.n;
    const uint64_t e = (F.q - 1) / n;
    std::vector<Elem> opow(n);
    opow[0] = 1;
    for (int k = 1; k < n; ++k) opow[k] = F.mul(opow[k - 1], sf.omega);
    std::vector<mpz_class> raw(n);
    for (Elem x = 0; x < F.q; ++x)
        for (Elem y = 0; y < F.q; ++y) {
            Elem xy = F.mul(x, y);
            Elem v = F.mul(F.mul(F.pow(xy, (uint64_t)(n - 1)), F.sub(1, x)), F.mul(F.sub(1, y), F.pow(F.sub(1, xy), (uint64_t)(n - 1))));
            if (v == 0) continue;
            Elem r = F.pow(v, e);
            int k = 0;
            while (opow[k] != r) ++k;
            raw[(size_t)((long long)i * k % n)] += 1;
        }
    return CycInt::reduce(n, raw);
}

}  // namespace oracle
