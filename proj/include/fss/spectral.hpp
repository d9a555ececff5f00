#pragma once

#include "fss/double_complex.hpp"
#include "fss/solver.hpp"
#include "fss/subspace.hpp"

#include <map>
#include <memory>
#include <mutex>
#include <vector>

namespace fss {

/// Canonical data of one spectral-sequence page in one bidegree:
/// representatives span a complement of the exact space inside the closed one.
struct PageData {
    std::size_t dim = 0;
    std::vector<Vec> reps;          // canonical representatives in A^{p,q}
    Subspace closed{0}, exact{0};   // Z_r, C_r
    std::shared_ptr<LinearSolver> coordSolver; // factorized [reps | exactBasis]
    /// class coordinates of an E_r-closed vector
    Vec classOf(const Vec& v) const;
};

struct PageDdbarReport {
    int r = 1;                 // property decided: page-(r-1)-ddbar
    bool holds = false;        // condition (6), the deciding test
    bool mapInjective = false; // condition (5), cross-check
    bool degeneratesByR = false;
    std::vector<std::size_t> bcDims, aDims; // per total degree k
    bool internalConsistent = true;
};

struct HodgeSymmetryReport {
    int r = 1;
    bool dimsSymmetric = false;
    bool dClosedReps = false; // only meaningful when the page property holds
    bool checkedReps = false;
};

/// All page/cohomology computations on one immutable complex, memoized.
/// Thread-safe: the memo table uses insert-if-absent under a mutex.
class SpectralCache {
public:
    explicit SpectralCache(const DoubleComplex& k) : k_(k) {}

    const DoubleComplex& complex() const { return k_; }

    /// E_r-closed forms: the alpha-projection of the tower solution space
    Subspace Z(int r, int p, int q);
    /// E_r-exact forms
    Subspace C(int r, int p, int q);

    const PageData& page(int r, int p, int q);

    /// matrix of d_r on page representatives: E_r^{p,q} -> E_r^{p+r,q-r+1}
    Matrix dr(int r, int p, int q);

    /// page dims recomputed from page r=1 by iterated ker/im of d_r
    /// (independent route used as the dual-path oracle)
    std::vector<std::vector<std::size_t>> pageDimsViaDifferentials(int r);

    struct DeRham {
        std::vector<std::size_t> betti;
        std::vector<Subspace> closed, exact; // per degree k in the total complex
    };
    const DeRham& deRham();
    int degenerationPage();

    Subspace ererClosed(int r, int p, int q);
    Subspace ererExact(int r, int p, int q);

    /// ker del ∩ ker dbar  /  ErEr-exact
    const PageData& bc(int r, int p, int q);
    /// ErEr-closed  /  (Im del + Im dbar)
    const PageData& aeppli(int r, int p, int q);

    PageDdbarReport pageDdbar(int r);
    HodgeSymmetryReport hodgeSymmetry(int r);

    /// factorized dbar/del solvers per slot (shared with the hodge layer)
    std::shared_ptr<LinearSolver> dbarSolver(int p, int q);
    std::shared_ptr<LinearSolver> delSolver(int p, int q);

private:
    PageData makeQuotient(const Subspace& closed, const Subspace& exact, int p, int q);

    const DoubleComplex& k_;
    std::mutex mu_;
    std::map<std::tuple<int, int, int, int>, Subspace> spaceMemo_;
    std::map<std::tuple<int, int, int, int>, std::shared_ptr<PageData>> pageMemo_;
    std::map<std::pair<int, int>, std::shared_ptr<LinearSolver>> dbarSolvers_, delSolvers_;
    std::shared_ptr<DeRham> deRham_;
    int degenPage_ = -1;
};

} // namespace fss
