#include "fss/solver.hpp"

#include <stdexcept>

namespace fss {

LinearSolver::LinearSolver(Matrix a) : rows_(a.rows()), cols_(a.cols()) {
    kernel_ = a.kernelBasis();
    Matrix aug = Matrix::hstack(a, Matrix::identity(rows_));
    // eliminate on the A-columns only; the identity block records the transform
    Matrix work = std::move(aug);
    std::size_t row = 0;
    for (std::size_t col = 0; col < cols_ && row < rows_; ++col) {
        std::size_t piv = rows_;
        for (std::size_t i = row; i < rows_; ++i) {
            if (work.at(i, col).isZero()) continue;
            if (piv == rows_) piv = i;
            if (work.at(i, col).isUnit()) { piv = i; break; }
        }
        if (piv == rows_) continue;
        if (piv != row)
            for (std::size_t j = 0; j < work.cols(); ++j) std::swap(work.at(row, j), work.at(piv, j));
        GaussianRational inv = work.at(row, col).inverse();
        for (std::size_t j = 0; j < work.cols(); ++j)
            if (!work.at(row, j).isZero()) work.at(row, j) *= inv;
        for (std::size_t i = 0; i < rows_; ++i) {
            if (i == row || work.at(i, col).isZero()) continue;
            GaussianRational f = work.at(i, col);
            for (std::size_t j = 0; j < work.cols(); ++j)
                if (!work.at(row, j).isZero()) work.at(i, j) -= f * work.at(row, j);
        }
        pivots_.push_back(col);
        ++row;
    }
    red_ = std::move(work);
}

std::optional<Vec> LinearSolver::solve(const Vec& b) const {
    if (b.size() != rows_) throw std::invalid_argument("LinearSolver: rhs size mismatch");
    // c = E b, using the recorded transform in the augmented block
    Vec c(rows_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < rows_; ++j) {
            const GaussianRational& e = red_.at(i, cols_ + j);
            if (!e.isZero() && !b[j].isZero()) c[i] += e * b[j];
        }
    for (std::size_t i = pivots_.size(); i < rows_; ++i)
        if (!c[i].isZero()) return std::nullopt;
    Vec x(cols_);
    for (std::size_t k = 0; k < pivots_.size(); ++k) x[pivots_[k]] = c[k];
    return x;
}

bool LinearSolver::solvable(const Vec& b) const { return solve(b).has_value(); }

MinNormSolver::MinNormSolver(Matrix a, Matrix gram) : ls_(a), gram_(std::move(gram)) {
    if (gram_.rows() != a.cols() || !gram_.isHermitian() || !gram_.isPositiveDefinite())
        throw std::invalid_argument("MinNormSolver: gram must be Hermitian positive-definite");
    kernelMat_ = Matrix::fromCols(a.cols(), ls_.kernel());
    if (kernelMat_.cols() > 0) {
        kernelGram_ = kernelMat_.hermitian() * gram_;
        corr_.emplace(kernelGram_ * kernelMat_);
    }
}

std::optional<Vec> MinNormSolver::solve(const Vec& b) const {
    auto x0 = ls_.solve(b);
    if (!x0) return std::nullopt;
    if (kernelMat_.cols() == 0) return x0;
    // impose <x0 + K c, k>_G = 0 for all kernel basis vectors k
    Vec rhs = kernelGram_.apply(*x0);
    for (auto& v : rhs) v = -v;
    auto c = corr_->solve(rhs);
    if (!c) throw std::logic_error("MinNormSolver: kernel gram system must be solvable");
    return addVec(*x0, kernelMat_.apply(*c));
}

} // namespace fss
