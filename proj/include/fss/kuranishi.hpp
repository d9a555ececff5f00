#pragma once

#include "fss/deformation.hpp"
#include "fss/hodge.hpp"

#include <map>

namespace fss {

/// Exponent vector of a monomial in the deformation parameters, ordered by
/// degree then lexicographically (so reports are deterministic).
struct Monomial {
    std::vector<unsigned> e;
    unsigned degree() const {
        unsigned d = 0;
        for (auto x : e) d += x;
        return d;
    }
    friend bool operator==(const Monomial&, const Monomial&) = default;
    friend bool operator<(const Monomial& a, const Monomial& b) {
        if (a.degree() != b.degree()) return a.degree() < b.degree();
        return a.e < b.e;
    }
    std::string str() const; // e.g. "t1^2·t3"
};

enum class KuranishiMode { Full, Essential };
enum class SolveStatus { SchemeSolved, DbarSolvedOnly, Obstructed, Inadmissible };

const char* solveStatusName(SolveStatus s);

struct DirectionInfo {
    std::string label;  // printable expansion of the polyvector
    bool admissible;    // a d-closed contraction representative exists
    Vec rep;            // chosen representative in A^{n-1,1}
    Vec theta;          // polyvector coordinates (zero when inadmissible)
};

struct ObstructionReport {
    int order = 0;
    Monomial monomial;
    Vec rhs;      // the non-dbar-exact right-hand side in A^{n-1,2}
    Vec e1Class;  // its class coordinates in E_1^{n-1,2}
    KuranishiMode mode = KuranishiMode::Full;
};

struct MonomialStatus {
    Monomial m;
    SolveStatus status;
};

struct KuranishiResult {
    KuranishiMode mode = KuranishiMode::Full;
    int order = 0;
    std::vector<DirectionInfo> directions;
    std::map<Monomial, Vec> psi; // polyvector coordinates per solved monomial
    std::vector<MonomialStatus> statuses; // degree >= 2, in report order
    std::optional<ObstructionReport> obstruction;

    bool obstructed() const { return obstruction.has_value(); }
    bool allSchemeSolved() const;
};

/// Order-by-order construction of the integrability power series: per
/// monomial, solve dbar(psi_nu .| u) = (1/2) sum [psi_mu, psi_{nu-mu}] .| u
/// through the minimal-norm del-dbar potential, falling back to a plain
/// dbar-solve, reporting a true obstruction when the right side is not
/// dbar-exact.
class KuranishiIterator {
public:
    KuranishiIterator(HodgeContext& hodge, DeformationCalculus& defc);

    KuranishiResult run(KuranishiMode mode, int order,
                        const std::vector<int>& directionSubset = {});

    /// exact replay of the integrability equations on a finished series:
    /// checks dbar(psi_m .| u) equals the bracket convolution for every
    /// monomial of degree <= order (and = 0 in degree 1)
    bool verifyReplay(const KuranishiResult& res) const;

private:
    std::vector<DirectionInfo> fullDirections();
    std::vector<DirectionInfo> essentialDirections();
    Vec bracketRhs(const KuranishiResult& res, const Monomial& m) const;

    HodgeContext& hodge_;
    DeformationCalculus& defc_;
    const DoubleComplex& k_;
};

} // namespace fss
