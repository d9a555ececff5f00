#pragma once

#include "fss/double_complex.hpp"

#include <optional>

namespace fss {

/// Contraction calculus of the invariant model of C^inf_{0,1}(X, T^{1,0}X).
/// A PolyVector is a combination of basis elements
///     e^{w} (0,1)-generator (x) coordinate (1,0)-vector field,
/// in canonical bijection with the (n-1,1) slot through contraction against
/// the holomorphic volume form u (the model's Calabi-Yau isomorphism).
class PolyVectorSpace {
public:
    struct BasisElement {
        Weight w;   // weight carried by the (0,1)-form factor
        int barIdx; // dzbar_j / phibar_j index
        int vecIdx; // coordinate field index i
    };

    explicit PolyVectorSpace(const DoubleComplex& k);

    const DoubleComplex& complex() const { return k_; }
    std::size_t dim() const { return basis_.size(); }
    const BasisElement& element(std::size_t idx) const { return basis_[idx]; }
    std::string elementLabel(std::size_t idx) const;

    /// coordinates of the volume form u inside A^{n,0} (a single generator)
    const Vec& volume() const { return volume_; }

    /// theta -> theta .| u, an isomorphism onto A^{n-1,1}
    Vec contractU(const Vec& theta) const;
    Vec contractUInverse(const Vec& form) const;

    /// theta .| eta for eta in A^{p,q}: interior product by the vector part,
    /// then left exterior multiplication by the weighted (0,1) part.
    /// Throws if a nonzero term leaves the model's generator set.
    Vec contractForm(const Vec& theta, int p, int q, const Vec& eta) const;

    /// single basis polyvector phibar_lambda (x) theta_i (unweighted models)
    Vec basisVector(int barIdx, int vecIdx, const Weight& w = {}) const;

private:
    const DoubleComplex& k_;
    std::vector<BasisElement> basis_;
    std::vector<int> signs_; // contractU(e_k) = signs_[k] * (slot basis vector k)
    Vec volume_;
};

} // namespace fss
