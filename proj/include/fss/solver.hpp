#pragma once

#include "fss/matrix.hpp"
#include "fss/subspace.hpp"

#include <optional>

namespace fss {

/// One-time RREF factorization of a linear map, reusable for many
/// right-hand sides.
class LinearSolver {
public:
    explicit LinearSolver(Matrix a);

    /// A particular solution of A x = b (free variables zero), or nullopt
    /// when b is outside the image.
    std::optional<Vec> solve(const Vec& b) const;
    bool solvable(const Vec& b) const;

    const std::vector<Vec>& kernel() const { return kernel_; }
    std::size_t rank() const { return pivots_.size(); }
    std::size_t domainDim() const { return cols_; }

private:
    std::size_t rows_, cols_;
    Matrix red_;                      // RREF([A | I])
    std::vector<std::size_t> pivots_; // pivot columns of A
    std::vector<Vec> kernel_;
};

/// Solves A x = b picking the unique solution gram-orthogonal to ker A.
/// Throws std::invalid_argument if gram is not Hermitian positive-definite.
class MinNormSolver {
public:
    MinNormSolver(Matrix a, Matrix gram);

    /// nullopt when b is not in the image of A (the obstruction signal).
    std::optional<Vec> solve(const Vec& b) const;

private:
    LinearSolver ls_;
    Matrix gram_;
    Matrix kernelMat_;            // columns span ker A
    Matrix kernelGram_;           // K^H G
    std::optional<LinearSolver> corr_; // factorized K^H G K
};

} // namespace fss
