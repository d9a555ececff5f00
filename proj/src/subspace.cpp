#include "fss/subspace.hpp"

#include <stdexcept>

namespace fss {

Subspace Subspace::span(std::size_t ambientDim, const std::vector<Vec>& vectors) {
    // reduced column echelon = transposed RREF of the transposed column matrix
    Matrix t(vectors.size(), ambientDim);
    for (std::size_t i = 0; i < vectors.size(); ++i) {
        if (vectors[i].size() != ambientDim)
            throw std::invalid_argument("Subspace::span: ambient dimension mismatch");
        for (std::size_t j = 0; j < ambientDim; ++j) t.at(i, j) = vectors[i][j];
    }
    auto piv = t.rrefInPlace();
    Subspace s(ambientDim);
    s.basis_ = Matrix(ambientDim, piv.size());
    for (std::size_t k = 0; k < piv.size(); ++k)
        for (std::size_t j = 0; j < ambientDim; ++j) s.basis_.at(j, k) = t.at(k, j);
    return s;
}

Subspace Subspace::full(std::size_t ambientDim) {
    Subspace s(ambientDim);
    s.basis_ = Matrix::identity(ambientDim);
    return s;
}

Subspace Subspace::columnSpace(const Matrix& m) {
    std::vector<Vec> cols;
    cols.reserve(m.cols());
    for (std::size_t j = 0; j < m.cols(); ++j) cols.push_back(m.colVec(j));
    return span(m.rows(), cols);
}

std::optional<Vec> Subspace::coordinates(const Vec& v) const {
    if (v.size() != ambient_) throw std::invalid_argument("Subspace: ambient dimension mismatch");
    // each echelon basis column has a pivot row with entry 1 that all other
    // columns vanish on, so coordinates read off by row then residual check
    Vec rest = v;
    Vec coords(dim());
    for (std::size_t k = 0; k < dim(); ++k) {
        std::size_t pr = 0;
        while (pr < ambient_ && basis_.at(pr, k).isZero()) ++pr;
        coords[k] = rest[pr];
        if (!coords[k].isZero())
            for (std::size_t j = 0; j < ambient_; ++j) rest[j] -= coords[k] * basis_.at(j, k);
    }
    if (!isZeroVec(rest)) return std::nullopt;
    return coords;
}

bool Subspace::contains(const Vec& v) const { return coordinates(v).has_value(); }

bool Subspace::containsSubspace(const Subspace& o) const {
    if (o.ambient_ != ambient_) throw std::invalid_argument("Subspace: ambient dimension mismatch");
    for (std::size_t j = 0; j < o.dim(); ++j)
        if (!contains(o.basis_.colVec(j))) return false;
    return true;
}

Subspace Subspace::sum(const Subspace& o) const {
    if (o.ambient_ != ambient_) throw std::invalid_argument("Subspace::sum: ambient mismatch");
    std::vector<Vec> vs;
    vs.reserve(dim() + o.dim());
    for (std::size_t j = 0; j < dim(); ++j) vs.push_back(basis_.colVec(j));
    for (std::size_t j = 0; j < o.dim(); ++j) vs.push_back(o.basis_.colVec(j));
    return span(ambient_, vs);
}

Subspace Subspace::intersect(const Subspace& o) const {
    if (o.ambient_ != ambient_) throw std::invalid_argument("Subspace::intersect: ambient mismatch");
    if (dim() == 0 || o.dim() == 0) return Subspace(ambient_);
    // solve A x = B y: kernel of [A | -B], intersection vectors are A x
    Matrix sys = Matrix::hstack(basis_, o.basis_.scaled(GaussianRational(-1)));
    auto ker = sys.kernelBasis();
    std::vector<Vec> vs;
    for (const auto& k : ker) {
        Vec x(k.begin(), k.begin() + dim());
        vs.push_back(basis_.apply(x));
    }
    return span(ambient_, vs);
}

Subspace Subspace::preimage(const Matrix& m) const {
    if (m.rows() != ambient_) throw std::invalid_argument("Subspace::preimage: ambient mismatch");
    if (dim() == 0) return kernel(m);
    Matrix sys = Matrix::hstack(m, basis_.scaled(GaussianRational(-1)));
    auto ker = sys.kernelBasis();
    std::vector<Vec> vs;
    for (const auto& k : ker) vs.emplace_back(k.begin(), k.begin() + m.cols());
    return span(m.cols(), vs);
}

std::size_t Subspace::quotientDim(const Subspace& o) const {
    if (!containsSubspace(o))
        throw std::invalid_argument("Subspace::quotientDim: not a subspace of the ambient space");
    return dim() - o.dim();
}

Subspace kernel(const Matrix& m) { return Subspace::span(m.cols(), m.kernelBasis()); }

Subspace image(const Matrix& m) { return Subspace::columnSpace(m); }

std::vector<Vec> complementInto(const Subspace& base, const std::vector<Vec>& candidates) {
    Subspace acc = base;
    std::vector<Vec> out;
    for (const auto& v : candidates) {
        if (acc.contains(v)) continue;
        out.push_back(v);
        acc = acc.sum(Subspace::span(acc.ambientDim(), {v}));
    }
    return out;
}

} // namespace fss
