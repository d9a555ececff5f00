#include "fss/polyvector.hpp"

#include <algorithm>
#include <stdexcept>

namespace fss {

namespace {

/// (0,1)-monomial wedge (p,q)-monomial, weights added:
/// (w1, {}, {j}) ^ (w2, I, J) = sign (w1+w2, I, J u {j})
std::optional<std::pair<int, Generator>> wedgeBarInto(const Weight& w, int j, const Generator& g) {
    auto ins = wedgeInsert(g.J, j);
    if (!ins) return std::nullopt;
    int crossSign = (g.I.size() % 2 == 0) ? 1 : -1; // dzbar_j past dz_I
    return std::make_pair(crossSign * ins->first, Generator{w + g.w, g.I, ins->second});
}

} // namespace

PolyVectorSpace::PolyVectorSpace(const DoubleComplex& k) : k_(k) {
    if (!k.hasMonomials())
        throw std::invalid_argument("PolyVectorSpace: model has no monomial/contraction structure");
    int n = k.n();
    // volume form: the unique generator with I = {1..n}, J = {}
    const auto& top = k.generators(n, 0);
    if (top.size() != 1)
        throw std::invalid_argument("PolyVectorSpace: A^{n,0} must be one-dimensional for a CY model");
    volume_ = Vec(1);
    volume_[0] = GaussianRational(1);
    const Generator& u = top[0];
    if (!(u.w == Weight{0, 0}))
        throw std::invalid_argument("PolyVectorSpace: the volume generator must carry weight 0");

    // basis aligned with the (n-1,1) slot through contraction against u
    const auto& slot = k.generators(n - 1, 1);
    for (const auto& g : slot) {
        if (g.J.size() != 1) throw std::logic_error("PolyVectorSpace: bad (n-1,1) generator");
        int missing = 0;
        for (int i = 1; i <= n; ++i)
            if (!std::binary_search(g.I.begin(), g.I.end(), i)) missing = i;
        BasisElement e{g.w, g.J[0], missing};
        // contractU(e) = s * g with s from dzbar_j ^ (theta_i .| u)
        auto rm = wedgeRemove(u.I, missing);
        if (!rm) throw std::logic_error("PolyVectorSpace: volume misses an index");
        Generator contracted{Weight{0, 0}, rm->second, {}};
        auto wedged = wedgeBarInto(e.w, e.barIdx, contracted);
        if (!wedged || !(wedged->second == g))
            throw std::logic_error("PolyVectorSpace: basis alignment failure");
        basis_.push_back(e);
        signs_.push_back(rm->first * wedged->first);
    }
}

std::string PolyVectorSpace::elementLabel(std::size_t idx) const {
    const BasisElement& e = basis_[idx];
    Generator form{e.w, {}, {e.barIdx}};
    std::string fl = generatorLabel(form, k_.style());
    std::string vl = k_.style() == LabelStyle::Phi
                         ? "θ_" + std::to_string(e.vecIdx)
                         : "∂/∂z_" + std::to_string(e.vecIdx);
    return fl + " ⊗ " + vl;
}

Vec PolyVectorSpace::contractU(const Vec& theta) const {
    if (theta.size() != dim()) throw std::invalid_argument("contractU: coordinate size mismatch");
    Vec out(k_.dim(k_.n() - 1, 1));
    for (std::size_t idx = 0; idx < dim(); ++idx)
        if (!theta[idx].isZero()) out[idx] += theta[idx] * GaussianRational(signs_[idx]);
    return out;
}

Vec PolyVectorSpace::contractUInverse(const Vec& form) const {
    if (form.size() != k_.dim(k_.n() - 1, 1))
        throw std::invalid_argument("contractUInverse: coordinate size mismatch");
    Vec out(dim());
    for (std::size_t idx = 0; idx < dim(); ++idx)
        out[idx] = form[idx] * GaussianRational(signs_[idx]); // signs are units
    return out;
}

Vec PolyVectorSpace::contractForm(const Vec& theta, int p, int q, const Vec& eta) const {
    if (p < 1) throw std::invalid_argument("contractForm: requires p >= 1");
    const auto& srcGens = k_.generators(p, q);
    if (theta.size() != dim() || eta.size() != srcGens.size())
        throw std::invalid_argument("contractForm: coordinate size mismatch");
    Vec out(k_.dim(p - 1, q + 1));
    for (std::size_t t = 0; t < dim(); ++t) {
        if (theta[t].isZero()) continue;
        const BasisElement& e = basis_[t];
        for (std::size_t s = 0; s < srcGens.size(); ++s) {
            if (eta[s].isZero()) continue;
            const Generator& g = srcGens[s];
            auto rm = wedgeRemove(g.I, e.vecIdx);
            if (!rm) continue; // interior product vanishes
            auto wedged = wedgeBarInto(e.w, e.barIdx, Generator{g.w, rm->second, g.J});
            if (!wedged) continue; // repeated dzbar index
            auto idx = k_.generatorIndex(wedged->second);
            if (!idx)
                throw std::domain_error("contractForm: contraction leaves the model at " +
                                        generatorLabel(wedged->second, k_.style()));
            out[*idx] += theta[t] * eta[s] * GaussianRational(rm->first * wedged->first);
        }
    }
    return out;
}

Vec PolyVectorSpace::basisVector(int barIdx, int vecIdx, const Weight& w) const {
    for (std::size_t idx = 0; idx < dim(); ++idx) {
        const auto& e = basis_[idx];
        if (e.barIdx == barIdx && e.vecIdx == vecIdx && e.w == w) {
            Vec v(dim());
            v[idx] = GaussianRational(1);
            return v;
        }
    }
    throw std::invalid_argument("PolyVectorSpace: no such basis element");
}

} // namespace fss
