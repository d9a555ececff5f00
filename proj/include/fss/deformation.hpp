#pragma once

#include "fss/builders.hpp"
#include "fss/polyvector.hpp"
#include "fss/spectral.hpp"

namespace fss {

/// Violated hypothesis del(theta .| u) = 0 of the bracket identity.
struct BracketPreconditionError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Bracket and hypothesis machinery on the invariant model: everything is
/// reduced to contractions and del through the identity
/// [theta1, theta2] .| u = -del(theta1 .| (theta2 .| u)).
class DeformationCalculus {
public:
    explicit DeformationCalculus(SpectralCache& spec);

    const PolyVectorSpace& pv() const { return pv_; }
    SpectralCache& spectral() { return spec_; }

    bool delClosedContraction(const Vec& theta) const;

    /// theta1 .| (theta2 .| u) in A^{n-2,2}
    Vec doubleContraction(const Vec& theta1, const Vec& theta2) const;

    /// [theta1,theta2] .| u = -del(theta1 .| (theta2 .| u)) in A^{n-1,2};
    /// requires del(theta_i .| u) = 0 for both arguments.
    Vec ttBracketU(const Vec& theta1, const Vec& theta2) const;

    /// membership of theta1 .| (theta2 .| u) in Z_2^{n-2,2}
    bool condition11(const Vec& theta1, const Vec& theta2);

    struct SuiteCell {
        std::size_t left, right; // indices into the spanning list
        bool ok;
        Vec dObstruction; // the bracket image when the test fails (else empty)
    };
    struct SuiteResult {
        // spanning vectors of {theta : theta.|u in ker d} then {theta : theta.|u in Im del},
        // as polyvector coordinates with printable labels
        std::vector<Vec> thetas;
        std::vector<std::string> labels;
        std::size_t kerCount = 0;
        std::vector<SuiteCell> cells;
        bool allOk() const {
            for (const auto& c : cells)
                if (!c.ok) return false;
            return true;
        }
    };
    SuiteResult condition11Suite();

private:
    SpectralCache& spec_;
    const DoubleComplex& k_;
    PolyVectorSpace pv_;
};

/// centre of the Lie algebra as a subspace of coefficient space
Subspace centre(const LieAlgebraSpec& g);

struct HParData {
    std::size_t h01Dim = 0, centreDim = 0;
    std::vector<Vec> basis; // polyvector coordinates
    std::size_t dim() const { return basis.size(); }
};
/// H^{0,1}(invariant) tensor Z(g), the infinitesimally complex parallelisable directions
HParData hPar(const DoubleComplex& k, const LieAlgebraSpec& g, const PolyVectorSpace& pv);

/// [X, mu(Ybar)] = 0 for all basis X, Ybar
bool parallelisableDirection(const LieAlgebraSpec& g, const PolyVectorSpace& pv, const Vec& mu);

struct AlphaCheckReport {
    bool isomorphism = false;
    std::string failureWitness; // nonempty when a basis pair violates morphism
};
/// alpha = (Id+mu) on g^{0,1}, (Id+mubar) on g^{1,0}: check it is a Lie algebra morphism
AlphaCheckReport alphaIsomorphismCheck(const LieAlgebraSpec& g, const PolyVectorSpace& pv, const Vec& mu);

} // namespace fss
