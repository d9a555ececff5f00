#include "fss/double_complex.hpp"

#include <stdexcept>

namespace fss {

DoubleComplex::DoubleComplex(int n, std::string name, LabelStyle style)
    : n_(n), name_(std::move(name)), style_(style) {
    std::size_t slots = static_cast<std::size_t>(n + 1) * (n + 1);
    gens_.resize(slots);
    labels_.resize(slots);
    del_.resize(slots);
    dbar_.resize(slots);
    conj_.resize(slots);
    gram_.resize(slots);
}

std::size_t DoubleComplex::dim(int p, int q) const {
    if (!validSlot(p, q)) return 0;
    return labels_[slot(p, q)].size();
}

std::size_t DoubleComplex::totalDim() const {
    std::size_t t = 0;
    for (int p = 0; p <= n_; ++p)
        for (int q = 0; q <= n_; ++q) t += dim(p, q);
    return t;
}

const Matrix& DoubleComplex::del(int p, int q) const {
    if (!validSlot(p, q)) return empty_;
    return del_[slot(p, q)];
}

const Matrix& DoubleComplex::dbar(int p, int q) const {
    if (!validSlot(p, q)) return empty_;
    return dbar_[slot(p, q)];
}

const Matrix& DoubleComplex::conjMat(int p, int q) const {
    if (!hasConj_) throw std::logic_error("DoubleComplex: no conjugation data");
    if (!validSlot(p, q)) return empty_;
    return conj_[slot(p, q)];
}

const Matrix& DoubleComplex::gram(int p, int q) const {
    if (!validSlot(p, q)) return empty_;
    return gram_[slot(p, q)];
}

const std::vector<std::string>& DoubleComplex::labels(int p, int q) const {
    static const std::vector<std::string> none;
    if (!validSlot(p, q)) return none;
    return labels_[slot(p, q)];
}

const std::vector<Generator>& DoubleComplex::generators(int p, int q) const {
    static const std::vector<Generator> none;
    if (!validSlot(p, q)) return none;
    return gens_[slot(p, q)];
}

std::optional<std::size_t> DoubleComplex::generatorIndex(const Generator& g) const {
    auto it = genIndex_.find(g);
    if (it == genIndex_.end()) return std::nullopt;
    return it->second;
}

Vec DoubleComplex::applyConj(int p, int q, const Vec& v) const {
    Vec c = v;
    for (auto& x : c) x = x.conj();
    return conjMat(p, q).apply(c);
}

ValidationReport DoubleComplex::validate() const {
    ValidationReport rep;
    auto addIf = [&](bool bad, const char* id, int p, int q, const std::string& detail = "") {
        if (bad) rep.violations.push_back({id, p, q, detail});
    };
    for (int p = 0; p <= n_; ++p)
        for (int q = 0; q <= n_; ++q) {
            if (dim(p, q) == 0) continue;
            if (p + 1 <= n_) addIf(!(del(p + 1, q) * del(p, q)).isZero(), "del∘del", p, q);
            if (q + 1 <= n_) addIf(!(dbar(p, q + 1) * dbar(p, q)).isZero(), "dbar∘dbar", p, q);
            if (p + 1 <= n_ && q + 1 <= n_) {
                Matrix anti = del(p, q + 1) * dbar(p, q) + dbar(p + 1, q) * del(p, q);
                addIf(!anti.isZero(), "del∘dbar+dbar∘del", p, q);
            }
            if (hasConj_) {
                Matrix invol = conjMat(q, p) * conjMat(p, q).conjugated();
                addIf(!(invol == Matrix::identity(dim(p, q))), "conj∘conj=id", p, q);
                if (q + 1 <= n_) {
                    // sigma del sigma = dbar as antilinear maps
                    Matrix lhs = conjMat(q + 1, p) * (del(q, p) * conjMat(p, q)).conjugated();
                    addIf(!(lhs == dbar(p, q)), "conj intertwines del/dbar", p, q);
                }
            }
            const Matrix& g = gram(p, q);
            addIf(!g.isHermitian(), "gram Hermitian", p, q);
            if (g.isHermitian()) addIf(!g.isPositiveDefinite(), "gram positive-definite", p, q);
        }
    return rep;
}

DoubleComplex::Total DoubleComplex::totalComplex() const {
    Total t;
    t.dims.assign(2 * n_ + 1, 0);
    t.offsets.assign(2 * n_ + 1, {});
    t.ps.assign(2 * n_ + 1, {});
    for (int k = 0; k <= 2 * n_; ++k) {
        std::size_t off = 0;
        for (int p = 0; p <= n_; ++p) {
            int q = k - p;
            if (q < 0 || q > n_ || dim(p, q) == 0) continue;
            t.ps[k].push_back(p);
            t.offsets[k].push_back(off);
            off += dim(p, q);
        }
        t.dims[k] = off;
    }
    t.d.resize(2 * n_);
    for (int k = 0; k < 2 * n_; ++k) {
        Matrix d(t.dims[k + 1], t.dims[k]);
        for (std::size_t bi = 0; bi < t.ps[k].size(); ++bi) {
            int p = t.ps[k][bi], q = k - p;
            std::size_t srcOff = t.offsets[k][bi];
            auto place = [&](const Matrix& block, int tp) {
                for (std::size_t ti = 0; ti < t.ps[k + 1].size(); ++ti) {
                    if (t.ps[k + 1][ti] != tp) continue;
                    std::size_t dstOff = t.offsets[k + 1][ti];
                    for (std::size_t i = 0; i < block.rows(); ++i)
                        for (std::size_t j = 0; j < block.cols(); ++j)
                            d.at(dstOff + i, srcOff + j) = block.at(i, j);
                }
            };
            place(del(p, q), p + 1);
            place(dbar(p, q), p);
        }
        t.d[k] = std::move(d);
    }
    return t;
}

} // namespace fss
