#include "fss/matrix.hpp"

#include <stdexcept>

namespace fss {

Matrix Matrix::identity(std::size_t n) {
    Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m.at(i, i) = GaussianRational(1);
    return m;
}

bool Matrix::isZero() const {
    for (const auto& x : e_)
        if (!x.isZero()) return false;
    return true;
}

Matrix Matrix::operator*(const Matrix& o) const {
    if (cols_ != o.rows_) throw std::invalid_argument("Matrix::mul: shape mismatch");
    Matrix r(rows_, o.cols_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t k = 0; k < cols_; ++k) {
            const GaussianRational& a = at(i, k);
            if (a.isZero()) continue;
            for (std::size_t j = 0; j < o.cols_; ++j) {
                const GaussianRational& b = o.at(k, j);
                if (!b.isZero()) r.at(i, j) += a * b;
            }
        }
    return r;
}

Vec Matrix::apply(const Vec& v) const {
    if (v.size() != cols_) throw std::invalid_argument("Matrix::apply: size mismatch");
    Vec r(rows_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j) {
            const GaussianRational& a = at(i, j);
            if (!a.isZero() && !v[j].isZero()) r[i] += a * v[j];
        }
    return r;
}

Matrix Matrix::operator+(const Matrix& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_) throw std::invalid_argument("Matrix::add: shape mismatch");
    Matrix r = *this;
    for (std::size_t k = 0; k < e_.size(); ++k) r.e_[k] += o.e_[k];
    return r;
}

Matrix Matrix::operator-(const Matrix& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_) throw std::invalid_argument("Matrix::sub: shape mismatch");
    Matrix r = *this;
    for (std::size_t k = 0; k < e_.size(); ++k) r.e_[k] -= o.e_[k];
    return r;
}

Matrix Matrix::scaled(const GaussianRational& c) const {
    Matrix r = *this;
    for (auto& x : r.e_) x *= c;
    return r;
}

Matrix Matrix::hermitian() const {
    Matrix r(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j) r.at(j, i) = at(i, j).conj();
    return r;
}

Matrix Matrix::transpose() const {
    Matrix r(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j) r.at(j, i) = at(i, j);
    return r;
}

Matrix Matrix::conjugated() const {
    Matrix r = *this;
    for (auto& x : r.e_) x = x.conj();
    return r;
}

bool Matrix::isHermitian() const {
    if (rows_ != cols_) return false;
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = i; j < cols_; ++j)
            if (at(i, j) != at(j, i).conj()) return false;
    return true;
}

bool Matrix::isPositiveDefinite() const {
    if (!isHermitian()) return false;
    // LDL^H elimination: every pivot d_k must be a positive rational.
    Matrix a = *this;
    std::size_t n = rows_;
    for (std::size_t k = 0; k < n; ++k) {
        const GaussianRational& d = a.at(k, k);
        if (!d.isReal() || d.re() <= 0) return false;
        for (std::size_t i = k + 1; i < n; ++i) {
            if (a.at(i, k).isZero()) continue;
            GaussianRational f = a.at(i, k) / d;
            for (std::size_t j = k; j < n; ++j)
                a.at(i, j) -= f * a.at(k, j);
        }
    }
    return true;
}

Matrix Matrix::col(std::size_t j) const {
    Matrix r(rows_, 1);
    for (std::size_t i = 0; i < rows_; ++i) r.at(i, 0) = at(i, j);
    return r;
}

Vec Matrix::colVec(std::size_t j) const {
    Vec v(rows_);
    for (std::size_t i = 0; i < rows_; ++i) v[i] = at(i, j);
    return v;
}

void Matrix::setCol(std::size_t j, const Vec& v) {
    if (v.size() != rows_) throw std::invalid_argument("Matrix::setCol: size mismatch");
    for (std::size_t i = 0; i < rows_; ++i) at(i, j) = v[i];
}

Matrix Matrix::hstack(const Matrix& a, const Matrix& b) {
    if (a.rows() != b.rows()) throw std::invalid_argument("hstack: row mismatch");
    Matrix r(a.rows(), a.cols() + b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i) {
        for (std::size_t j = 0; j < a.cols(); ++j) r.at(i, j) = a.at(i, j);
        for (std::size_t j = 0; j < b.cols(); ++j) r.at(i, a.cols() + j) = b.at(i, j);
    }
    return r;
}

Matrix Matrix::vstack(const Matrix& a, const Matrix& b) {
    if (a.cols() != b.cols()) throw std::invalid_argument("vstack: col mismatch");
    Matrix r(a.rows() + b.rows(), a.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j) r.at(i, j) = a.at(i, j);
    for (std::size_t i = 0; i < b.rows(); ++i)
        for (std::size_t j = 0; j < b.cols(); ++j) r.at(a.rows() + i, j) = b.at(i, j);
    return r;
}

Matrix Matrix::fromCols(std::size_t dim, const std::vector<Vec>& cols) {
    Matrix r(dim, cols.size());
    for (std::size_t j = 0; j < cols.size(); ++j) {
        if (cols[j].size() != dim) throw std::invalid_argument("fromCols: size mismatch");
        for (std::size_t i = 0; i < dim; ++i) r.at(i, j) = cols[j][i];
    }
    return r;
}

std::vector<std::size_t> Matrix::rrefInPlace() {
    std::vector<std::size_t> pivots;
    std::size_t row = 0;
    for (std::size_t col = 0; col < cols_ && row < rows_; ++col) {
        // prefer a unit pivot, otherwise the first nonzero
        std::size_t piv = rows_;
        for (std::size_t i = row; i < rows_; ++i) {
            if (at(i, col).isZero()) continue;
            if (piv == rows_) piv = i;
            if (at(i, col).isUnit()) { piv = i; break; }
        }
        if (piv == rows_) continue;
        if (piv != row)
            for (std::size_t j = 0; j < cols_; ++j) std::swap(at(row, j), at(piv, j));
        GaussianRational inv = at(row, col).inverse();
        for (std::size_t j = col; j < cols_; ++j)
            if (!at(row, j).isZero()) at(row, j) *= inv;
        for (std::size_t i = 0; i < rows_; ++i) {
            if (i == row || at(i, col).isZero()) continue;
            GaussianRational f = at(i, col);
            for (std::size_t j = col; j < cols_; ++j)
                if (!at(row, j).isZero()) at(i, j) -= f * at(row, j);
        }
        pivots.push_back(col);
        ++row;
    }
    return pivots;
}

std::size_t Matrix::rank() const {
    Matrix m = *this;
    return m.rrefInPlace().size();
}

std::vector<Vec> Matrix::kernelBasis() const {
    Matrix r = *this;
    auto pivots = r.rrefInPlace();
    std::vector<bool> isPivot(cols_, false);
    for (auto p : pivots) isPivot[p] = true;
    std::vector<Vec> basis;
    for (std::size_t free = 0; free < cols_; ++free) {
        if (isPivot[free]) continue;
        Vec v(cols_);
        v[free] = GaussianRational(1);
        for (std::size_t k = 0; k < pivots.size(); ++k)
            v[pivots[k]] = -r.at(k, free);
        basis.push_back(std::move(v));
    }
    return basis;
}

std::pair<Matrix, std::vector<std::size_t>> rref(const Matrix& m) {
    Matrix r = m;
    auto piv = r.rrefInPlace();
    return {std::move(r), std::move(piv)};
}

Vec zeroVec(std::size_t n) { return Vec(n); }

bool isZeroVec(const Vec& v) {
    for (const auto& x : v)
        if (!x.isZero()) return false;
    return true;
}

Vec addVec(const Vec& a, const Vec& b) {
    if (a.size() != b.size()) throw std::invalid_argument("addVec: size mismatch");
    Vec r = a;
    for (std::size_t i = 0; i < r.size(); ++i) r[i] += b[i];
    return r;
}

Vec subVec(const Vec& a, const Vec& b) {
    if (a.size() != b.size()) throw std::invalid_argument("subVec: size mismatch");
    Vec r = a;
    for (std::size_t i = 0; i < r.size(); ++i) r[i] -= b[i];
    return r;
}

Vec scaleVec(const GaussianRational& c, const Vec& v) {
    Vec r = v;
    for (auto& x : r) x *= c;
    return r;
}

GaussianRational innerProduct(const Vec& x, const Vec& y, const Matrix& gram) {
    Vec gx = gram.apply(x);
    GaussianRational s;
    for (std::size_t i = 0; i < gx.size(); ++i) s += y[i].conj() * gx[i];
    return s;
}

std::string linearComboLabel(const Vec& v, const std::vector<std::string>& labels) {
    std::string out;
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (v[i].isZero()) continue;
        std::string c = v[i].str();
        if (!out.empty()) {
            if (!c.empty() && c[0] == '-') {
                out += " - ";
                c = c.substr(1);
            } else {
                out += " + ";
            }
        }
        if (c == "1") out += labels[i];
        else if (c == "-1") out += "-" + labels[i];
        else if (v[i].isReal() || v[i].re() == 0) out += c + "·" + labels[i];
        else out += "(" + c + ")·" + labels[i];
    }
    return out.empty() ? "0" : out;
}

} // namespace fss
