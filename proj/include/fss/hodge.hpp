#pragma once

#include "fss/spectral.hpp"

#include <map>
#include <memory>
#include <mutex>

namespace fss {

/// Signals the failure of a solvability guarantee that the page-1-ddbar
/// property would provide (the obstruction surface of the metric layer).
struct SolvabilityError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct LiftResult {
    Vec inputClass;   // E_2 class coordinates
    Vec harmonicRep;  // the tilde-Laplacian harmonic representative
    Vec correction;   // xi, minimal-norm solution of del dbar xi = -del(harmonicRep)
    Vec liftedRep;    // harmonicRep + dbar xi, d-closed
    Vec liftedClass;  // E_1 class coordinates of liftedRep
};

/// Metric-dependent layer: adjoints, Laplacians, harmonic spaces, the
/// omega-lift of the canonical surjection E_1_0 ->> E_2. Per-slot grams
/// default to the complex's own; overrides are validated on construction.
class HodgeContext {
public:
    HodgeContext(SpectralCache& spec,
                 std::map<std::pair<int, int>, Matrix> gramOverrides = {});

    const DoubleComplex& complex() const { return k_; }
    SpectralCache& spectral() { return spec_; }

    const Matrix& gram(int p, int q);
    const Matrix& gramInverse(int p, int q);

    /// adjoint of op w.r.t. the slot grams: <op x, y>_cod = <x, op* y>_dom
    Matrix adjoint(const Matrix& op, const Matrix& gramDom, const Matrix& gramCod);

    /// adjoint of del(p,q) as a matrix A^{p+1,q} -> A^{p,q}
    const Matrix& delAdj(int p, int q);
    const Matrix& dbarAdj(int p, int q);

    const Matrix& laplacianDbar(int p, int q);
    const Matrix& laplacianTilde(int p, int q);
    const Matrix& bcLaplacian(int p, int q);

    const Subspace& harmonic1(int p, int q); // ker Delta''
    const Subspace& harmonic2(int p, int q); // ker Delta~

    /// minimal-norm solution u in A^{p-1,q-1} of del dbar u = v, v in A^{p,q};
    /// nullopt when v is not del-dbar-exact.
    std::optional<Vec> minNormDdbarSolve(int p, int q, const Vec& v);
    /// same solution through the Bott-Chern Green operator (cross-check path)
    std::optional<Vec> greenDdbarSolve(int p, int q, const Vec& v);

    /// E_1 classes representable by E_2-closed forms, as a subspace of the
    /// E_1 coordinate space (equals ker d_1)
    Subspace e1Zero(int p, int q);
    /// canonical surjection P on the e1Zero basis, with values in E_2 coords
    Matrix pMap(int p, int q);

    LiftResult dClosedRep(int p, int q, const Vec& e2Class);
    /// omega-lift J: E_2^{p,q} -> E_1^{p,q} coordinates, one column per
    /// canonical E_2 basis class; P o J = Id
    Matrix omegaLift(int p, int q);
    Subspace essentialSpace(int p, int q);

private:
    SpectralCache& spec_;
    const DoubleComplex& k_;
    std::mutex mu_;
    std::map<std::pair<int, int>, Matrix> gramOv_, gramInv_, delAdj_, dbarAdj_, lapDbar_, lapTilde_,
        lapBc_, projH1_;
    std::map<std::pair<int, int>, Subspace> h1_, h2_;
    std::map<std::pair<int, int>, std::shared_ptr<MinNormSolver>> ddbarSolvers_, bcGreen_;

    const Matrix& projHarmonic1(int p, int q);
};

} // namespace fss
