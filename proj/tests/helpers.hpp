#pragma once

#include "fss/report.hpp"

#include <string>

namespace fss::testing {

inline ModelDocument loadModel(const std::string& name) {
    return loadModelFile(std::string(FSS_MODELS_DIR) + "/" + name + ".json");
}

inline GaussianRational gr(long re) { return GaussianRational(re); }
inline GaussianRational gr(long num, long den) { return GaussianRational(mpq_class(num, den)); }
inline GaussianRational gi(long im) { return GaussianRational(mpq_class(0), mpq_class(im)); }

inline Vec unit(std::size_t dim, std::size_t idx) {
    Vec v(dim);
    v[idx] = gr(1);
    return v;
}

/// slot basis vector of a labeled generator; fails the test if absent
inline Vec genVec(const DoubleComplex& k, int p, int q, const Generator& g) {
    auto idx = k.generatorIndex(g);
    if (!idx) throw std::runtime_error("generator not in model: " + generatorLabel(g, k.style()));
    return unit(k.dim(p, q), *idx);
}

/// independent oracle: direct structure-constant bracket of two polyvectors
/// on a Lie-algebra model, contracted into u:
///   [abar (x) th_i, bbar (x) th_j] .| u = abar ^ bbar ^ ([th_i,th_j] .| u)
inline Vec directBracketU(const DoubleComplex& k, const LieAlgebraSpec& g, const PolyVectorSpace& pv,
                          const Vec& t1, const Vec& t2) {
    int n = k.n();
    Vec out(k.dim(n - 1, 2));
    const Generator& u = k.generators(n, 0)[0];
    for (std::size_t x = 0; x < pv.dim(); ++x) {
        if (t1[x].isZero()) continue;
        const auto& e1 = pv.element(x);
        for (std::size_t y = 0; y < pv.dim(); ++y) {
            if (t2[y].isZero()) continue;
            const auto& e2 = pv.element(y);
            auto bars = wedgeMerge({e1.barIdx}, {e2.barIdx});
            if (!bars) continue;
            for (int kk = 1; kk <= n; ++kk) {
                GaussianRational c = g.c(e1.vecIdx, e2.vecIdx, kk);
                if (c.isZero()) continue;
                auto rm = wedgeRemove(u.I, kk);
                if (!rm) continue;
                Generator dst{Weight{0, 0}, rm->second, bars->second};
                auto idx = k.generatorIndex(dst);
                if (!idx) throw std::runtime_error("directBracketU: target outside model");
                // (0,2)-part crosses the (n-1)-form: sign (-1)^{2(n-1)} = +1
                out[*idx] += t1[x] * t2[y] * c * gr(bars->first * rm->first);
            }
        }
    }
    return out;
}

inline LieAlgebraSpec iwasawa3Spec() {
    LieAlgebraSpec g(3);
    Vec c(3);
    c[2] = gr(1);
    g.setBracket(1, 2, c);
    return g;
}

inline LieAlgebraSpec iwasawa5Spec() {
    LieAlgebraSpec g(5);
    Vec c3(5), c4(5), c5(5);
    c3[2] = gr(-1);
    c4[3] = gr(-1);
    c5[4] = gr(-1);
    g.setBracket(1, 2, c3);
    g.setBracket(1, 3, c4);
    g.setBracket(2, 3, c5);
    return g;
}

inline LieAlgebraSpec abelianSpec(int n) { return LieAlgebraSpec(n); }

} // namespace fss::testing
