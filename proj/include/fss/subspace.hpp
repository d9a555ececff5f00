#pragma once

#include "fss/matrix.hpp"

#include <optional>

namespace fss {

/// Linear subspace of Q(i)^n held as the unique reduced column-echelon basis,
/// so equal subspaces compare equal structurally.
class Subspace {
public:
    explicit Subspace(std::size_t ambientDim) : ambient_(ambientDim), basis_(ambientDim, 0) {}

    /// Canonicalizes an arbitrary spanning set.
    static Subspace span(std::size_t ambientDim, const std::vector<Vec>& vectors);
    static Subspace full(std::size_t ambientDim);
    static Subspace columnSpace(const Matrix& m);

    std::size_t ambientDim() const { return ambient_; }
    std::size_t dim() const { return basis_.cols(); }
    const Matrix& basis() const { return basis_; }
    Vec basisVec(std::size_t j) const { return basis_.colVec(j); }

    bool contains(const Vec& v) const;
    bool containsSubspace(const Subspace& o) const;

    Subspace sum(const Subspace& o) const;
    Subspace intersect(const Subspace& o) const;
    /// {x : m x in *this}; m maps Q(i)^cols -> Q(i)^ambient.
    Subspace preimage(const Matrix& m) const;
    /// dim(*this / o); requires o to be contained in *this.
    std::size_t quotientDim(const Subspace& o) const;

    /// Coordinates of v in the echelon basis, if v lies in the subspace.
    std::optional<Vec> coordinates(const Vec& v) const;

    friend bool operator==(const Subspace& a, const Subspace& b) {
        return a.ambient_ == b.ambient_ && a.basis_ == b.basis_;
    }
    friend bool operator!=(const Subspace& a, const Subspace& b) { return !(a == b); }

private:
    std::size_t ambient_;
    Matrix basis_; // ambient_ x dim, reduced column echelon
};

Subspace kernel(const Matrix& m);
Subspace image(const Matrix& m);

/// Columns of `candidates` that enlarge `base`, reduced to a canonical
/// complement basis of `base` inside base+span(candidates).
std::vector<Vec> complementInto(const Subspace& base, const std::vector<Vec>& candidates);

} // namespace fss
