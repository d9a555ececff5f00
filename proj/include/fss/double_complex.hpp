#pragma once

#include "fss/generators.hpp"
#include "fss/matrix.hpp"

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace fss {

struct Violation {
    std::string identity; // which axiom failed
    int p = 0, q = 0;     // source bidegree
    std::string detail;
};

struct ValidationReport {
    std::vector<Violation> violations;
    bool ok() const { return violations.empty(); }
};

/// Finite bigraded complex over Q(i) with anticommuting differentials del
/// (bidegree (1,0)) and dbar (bidegree (0,1)), optional conjugation and
/// per-slot Hermitian metrics. Immutable once built.
class DoubleComplex {
public:
    DoubleComplex(int n, std::string name, LabelStyle style);

    int n() const { return n_; }
    const std::string& name() const { return name_; }
    LabelStyle style() const { return style_; }

    bool validSlot(int p, int q) const { return p >= 0 && p <= n_ && q >= 0 && q <= n_; }
    std::size_t dim(int p, int q) const;
    std::size_t totalDim() const;

    /// matrix of del: A^{p,q} -> A^{p+1,q}; zero-row matrix off the grid
    const Matrix& del(int p, int q) const;
    const Matrix& dbar(int p, int q) const;
    bool hasConj() const { return hasConj_; }
    /// sigma(v) = conjMat(p,q) * vbar in A^{q,p}
    const Matrix& conjMat(int p, int q) const;
    const Matrix& gram(int p, int q) const;

    const std::vector<std::string>& labels(int p, int q) const;

    bool hasMonomials() const { return hasMonomials_; }
    const std::vector<Generator>& generators(int p, int q) const;
    /// index of a generator inside its slot, or nullopt if not part of the model
    std::optional<std::size_t> generatorIndex(const Generator& g) const;

    ValidationReport validate() const;

    Vec applyConj(int p, int q, const Vec& v) const;

    struct Total {
        std::vector<std::size_t> dims; // degree k = 0..2n
        std::vector<Matrix> d;         // d[k]: degree k -> k+1
        // slot offsets: offset[(k,p)] of A^{p,k-p} inside degree k, p ascending
        std::vector<std::vector<std::size_t>> offsets;
        std::vector<std::vector<int>> ps; // the p values present per degree
    };
    /// single-graded complex with d = del + dbar
    Total totalComplex() const;

    // mutation is limited to the builder layer
    struct Builder;

private:
    std::size_t slot(int p, int q) const { return static_cast<std::size_t>(p) * (n_ + 1) + q; }

    int n_;
    std::string name_;
    LabelStyle style_;
    bool hasMonomials_ = false;
    bool hasConj_ = false;
    std::vector<std::vector<Generator>> gens_;
    std::map<Generator, std::pair<int, int>> genSlot_; // generator -> (p,q)
    std::map<Generator, std::size_t> genIndex_;
    std::vector<std::vector<std::string>> labels_;
    std::vector<Matrix> del_, dbar_, conj_, gram_;
    Matrix empty_;

    friend struct Builder;
};

} // namespace fss
