#pragma once

#include "fss/gaussian.hpp"

#include <vector>
#include <cstddef>

namespace fss {

using Vec = std::vector<GaussianRational>;

/// Dense matrix over Q(i), row-major. All operations are pure; zero-sized
/// matrices (0 rows and/or 0 columns) are valid throughout.
class Matrix {
public:
    Matrix() : rows_(0), cols_(0) {}
    Matrix(std::size_t rows, std::size_t cols)
        : rows_(rows), cols_(cols), e_(rows * cols) {}

    static Matrix identity(std::size_t n);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    GaussianRational& at(std::size_t i, std::size_t j) { return e_[i * cols_ + j]; }
    const GaussianRational& at(std::size_t i, std::size_t j) const { return e_[i * cols_ + j]; }

    bool isZero() const;
    friend bool operator==(const Matrix& a, const Matrix& b) {
        return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.e_ == b.e_;
    }

    Matrix operator*(const Matrix& o) const;
    Vec apply(const Vec& v) const;
    Matrix operator+(const Matrix& o) const;
    Matrix operator-(const Matrix& o) const;
    Matrix scaled(const GaussianRational& c) const;

    /// Conjugate transpose.
    Matrix hermitian() const;
    Matrix transpose() const;
    Matrix conjugated() const;

    bool isHermitian() const;
    /// Exact Sylvester test via LDL^H elimination; requires a Hermitian input.
    bool isPositiveDefinite() const;

    Matrix col(std::size_t j) const;
    Vec colVec(std::size_t j) const;
    void setCol(std::size_t j, const Vec& v);

    /// [A | B] side by side; rows must match.
    static Matrix hstack(const Matrix& a, const Matrix& b);
    /// A over B; columns must match.
    static Matrix vstack(const Matrix& a, const Matrix& b);
    static Matrix fromCols(std::size_t dim, const std::vector<Vec>& cols);

    /// Reduce in place to the unique reduced row-echelon form;
    /// returns the pivot column indices in increasing order.
    std::vector<std::size_t> rrefInPlace();

    std::size_t rank() const;

    /// Basis of the null space {x : Ax = 0}, one column per free variable,
    /// in the canonical free-variable order of the RREF.
    std::vector<Vec> kernelBasis() const;

private:
    std::size_t rows_, cols_;
    std::vector<GaussianRational> e_;
};

std::pair<Matrix, std::vector<std::size_t>> rref(const Matrix& m);

// small vector helpers
Vec zeroVec(std::size_t n);
bool isZeroVec(const Vec& v);
Vec addVec(const Vec& a, const Vec& b);
Vec subVec(const Vec& a, const Vec& b);
Vec scaleVec(const GaussianRational& c, const Vec& v);
/// <x, y>_G = y^H G x (linear in x, antilinear in y)
GaussianRational innerProduct(const Vec& x, const Vec& y, const Matrix& gram);

/// "c1·L1 + c2·L2 + ..." rendering of a coordinate vector over labeled basis
std::string linearComboLabel(const Vec& v, const std::vector<std::string>& labels);

} // namespace fss
