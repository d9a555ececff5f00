#include "fss/builders.hpp"

#include <algorithm>
#include <stdexcept>

namespace fss {

struct DoubleComplex::Builder {
    DoubleComplex k;

    Builder(int n, std::string name, LabelStyle style) : k(n, std::move(name), style) {}

    /// install per-slot generator lists (already sorted), derive labels,
    /// zero differentials and identity grams of the right shapes
    void setGenerators(std::vector<std::vector<Generator>> gens) {
        k.hasMonomials_ = true;
        k.gens_ = std::move(gens);
        for (int p = 0; p <= k.n_; ++p)
            for (int q = 0; q <= k.n_; ++q) {
                auto s = k.slot(p, q);
                auto& list = k.gens_[s];
                std::sort(list.begin(), list.end());
                k.labels_[s].clear();
                for (std::size_t i = 0; i < list.size(); ++i) {
                    k.genSlot_[list[i]] = {p, q};
                    k.genIndex_[list[i]] = i;
                    k.labels_[s].push_back(generatorLabel(list[i], k.style_));
                }
            }
        shapeOperators();
    }

    void setExplicitDims(const std::vector<std::vector<std::size_t>>& dims,
                         const std::map<std::pair<int, int>, std::vector<std::string>>& labels) {
        for (int p = 0; p <= k.n_; ++p)
            for (int q = 0; q <= k.n_; ++q) {
                auto s = k.slot(p, q);
                std::size_t d = dims[p][q];
                auto it = labels.find({p, q});
                if (it != labels.end()) {
                    if (it->second.size() != d)
                        throw std::invalid_argument("explicit model: label count mismatch");
                    k.labels_[s] = it->second;
                } else {
                    for (std::size_t i = 0; i < d; ++i)
                        k.labels_[s].push_back("e_{" + std::to_string(p) + "," + std::to_string(q) +
                                               "," + std::to_string(i) + "}");
                }
            }
        shapeOperators();
    }

    void shapeOperators() {
        for (int p = 0; p <= k.n_; ++p)
            for (int q = 0; q <= k.n_; ++q) {
                auto s = k.slot(p, q);
                std::size_t d = k.labels_[s].size();
                k.del_[s] = Matrix(k.dim(p + 1, q), d);
                k.dbar_[s] = Matrix(k.dim(p, q + 1), d);
                k.gram_[s] = Matrix::identity(d);
            }
    }

    Matrix& del(int p, int q) { return k.del_[k.slot(p, q)]; }
    Matrix& dbar(int p, int q) { return k.dbar_[k.slot(p, q)]; }
    Matrix& gram(int p, int q) { return k.gram_[k.slot(p, q)]; }

    void enableConj() {
        k.hasConj_ = true;
        for (int p = 0; p <= k.n_; ++p)
            for (int q = 0; q <= k.n_; ++q)
                k.conj_[k.slot(p, q)] = Matrix(k.dim(q, p), k.dim(p, q));
    }
    Matrix& conj(int p, int q) { return k.conj_[k.slot(p, q)]; }

    std::size_t indexOf(const Generator& g) const {
        auto it = k.genIndex_.find(g);
        if (it == k.genIndex_.end())
            throw std::invalid_argument("differential escapes the generator set at " +
                                        generatorLabel(g, k.style_));
        return it->second;
    }

    DoubleComplex take() { return std::move(k); }
};

void LieAlgebraSpec::setBracket(int i, int j, const Vec& coeffs) {
    if (i == j || i < 1 || j < 1 || i > dim_ || j > dim_)
        throw std::invalid_argument("LieAlgebraSpec: bad bracket indices");
    if (static_cast<int>(coeffs.size()) != dim_)
        throw std::invalid_argument("LieAlgebraSpec: coefficient vector size");
    if (i < j)
        brackets_[{i, j}] = coeffs;
    else {
        Vec neg = coeffs;
        for (auto& c : neg) c = -c;
        brackets_[{j, i}] = neg;
    }
}

GaussianRational LieAlgebraSpec::c(int i, int j, int k) const {
    if (i == j) return GaussianRational(0);
    bool flip = i > j;
    auto it = brackets_.find(flip ? std::make_pair(j, i) : std::make_pair(i, j));
    if (it == brackets_.end()) return GaussianRational(0);
    GaussianRational v = it->second[k - 1];
    return flip ? -v : v;
}

void LieAlgebraSpec::checkJacobi() const {
    for (int i = 1; i <= dim_; ++i)
        for (int j = i + 1; j <= dim_; ++j)
            for (int l = j + 1; l <= dim_; ++l)
                for (int k = 1; k <= dim_; ++k) {
                    GaussianRational s;
                    for (int m = 1; m <= dim_; ++m)
                        s += c(i, j, m) * c(m, l, k) + c(j, l, m) * c(m, i, k) + c(l, i, m) * c(m, j, k);
                    if (!s.isZero())
                        throw std::invalid_argument("LieAlgebraSpec: Jacobi identity fails on (" +
                                                    std::to_string(i) + "," + std::to_string(j) + "," +
                                                    std::to_string(l) + ")");
                }
}

DoubleComplex buildCeComplex(const LieAlgebraSpec& g, const std::string& name) {
    g.checkJacobi();
    int n = g.dim();
    DoubleComplex::Builder b(n, name, LabelStyle::Phi);

    std::vector<std::vector<Generator>> gens(static_cast<std::size_t>(n + 1) * (n + 1));
    for (int p = 0; p <= n; ++p)
        for (int q = 0; q <= n; ++q) {
            auto& list = gens[static_cast<std::size_t>(p) * (n + 1) + q];
            for (const auto& I : subsetsOfSize(n, p))
                for (const auto& J : subsetsOfSize(n, q)) list.push_back({Weight{0, 0}, I, J});
        }
    b.setGenerators(std::move(gens));

    // d phi_k = -sum_{i<j} c(i,j,k) phi_i wedge phi_j, extended as an
    // anti-derivation; dbar is the conjugate rule on the phibar's
    for (int p = 0; p <= n; ++p)
        for (int q = 0; q <= n; ++q) {
            const auto& list = b.k.generators(p, q);
            for (std::size_t col = 0; col < list.size(); ++col) {
                const Generator& src = list[col];
                for (std::size_t l = 0; l < src.I.size(); ++l) {
                    int kk = src.I[l];
                    int s1 = (l % 2 == 0) ? 1 : -1;
                    IdxSet rest = src.I;
                    rest.erase(rest.begin() + l);
                    for (int i = 1; i <= n; ++i)
                        for (int j = i + 1; j <= n; ++j) {
                            GaussianRational cv = g.c(i, j, kk);
                            if (cv.isZero()) continue;
                            auto merged = wedgeMerge({i, j}, rest);
                            if (!merged) continue;
                            Generator dst{Weight{0, 0}, merged->second, src.J};
                            auto row = b.indexOf(dst);
                            b.del(p, q).at(row, col) +=
                                GaussianRational(s1 * merged->first) * (-cv);
                        }
                }
                int sp = (src.I.size() % 2 == 0) ? 1 : -1;
                for (std::size_t m = 0; m < src.J.size(); ++m) {
                    int kk = src.J[m];
                    int s1 = sp * ((m % 2 == 0) ? 1 : -1);
                    IdxSet rest = src.J;
                    rest.erase(rest.begin() + m);
                    for (int i = 1; i <= n; ++i)
                        for (int j = i + 1; j <= n; ++j) {
                            GaussianRational cv = g.c(i, j, kk).conj();
                            if (cv.isZero()) continue;
                            auto merged = wedgeMerge({i, j}, rest);
                            if (!merged) continue;
                            Generator dst{Weight{0, 0}, src.I, merged->second};
                            auto row = b.indexOf(dst);
                            b.dbar(p, q).at(row, col) +=
                                GaussianRational(s1 * merged->first) * (-cv);
                        }
                }
            }
        }

    b.enableConj();
    for (int p = 0; p <= n; ++p)
        for (int q = 0; q <= n; ++q) {
            const auto& list = b.k.generators(p, q);
            int sgn = (p * q % 2 == 0) ? 1 : -1;
            for (std::size_t col = 0; col < list.size(); ++col) {
                Generator dst{Weight{0, 0}, list[col].J, list[col].I};
                b.conj(p, q).at(b.indexOf(dst), col) = GaussianRational(sgn);
            }
        }
    return b.take();
}

DoubleComplex buildWeightedComplex(const WeightedModelSpec& spec) {
    int n = spec.n;
    DoubleComplex::Builder b(n, spec.name, LabelStyle::Dz);

    std::vector<std::vector<Generator>> gens(static_cast<std::size_t>(n + 1) * (n + 1));
    for (const auto& g : spec.generators) {
        int p = static_cast<int>(g.I.size()), q = static_cast<int>(g.J.size());
        if (p > n || q > n) throw std::invalid_argument("weighted model: index set too large");
        gens[static_cast<std::size_t>(p) * (n + 1) + q].push_back(g);
    }
    b.setGenerators(std::move(gens));

    for (int p = 0; p <= n; ++p)
        for (int q = 0; q <= n; ++q) {
            const auto& list = b.k.generators(p, q);
            for (std::size_t col = 0; col < list.size(); ++col) {
                const Generator& src = list[col];
                if (src.w.a != 0 && p + 1 <= n) {
                    auto ins = wedgeInsert(src.I, 1);
                    if (ins) {
                        Generator dst{src.w, ins->second, src.J};
                        b.del(p, q).at(b.indexOf(dst), col) +=
                            GaussianRational(src.w.a * ins->first);
                    }
                }
                if (src.w.b != 0 && q + 1 <= n) {
                    auto ins = wedgeInsert(src.J, 1);
                    if (ins) {
                        int sp = (src.I.size() % 2 == 0) ? 1 : -1;
                        Generator dst{src.w, src.I, ins->second};
                        b.dbar(p, q).at(b.indexOf(dst), col) +=
                            GaussianRational(src.w.b * sp * ins->first);
                    }
                }
            }
        }
    for (const auto& rule : spec.extraRules) {
        auto srcSlot = b.k.generatorIndex(rule.src);
        if (!srcSlot) throw std::invalid_argument("weighted model: extra rule on unknown generator");
        int p = static_cast<int>(rule.src.I.size()), q = static_cast<int>(rule.src.J.size());
        Matrix& op = rule.onDel ? b.del(p, q) : b.dbar(p, q);
        op.at(b.indexOf(rule.dst), *srcSlot) += rule.coeff;
    }

    if (!spec.conjWeight.empty()) {
        b.enableConj();
        for (int p = 0; p <= n; ++p)
            for (int q = 0; q <= n; ++q) {
                const auto& list = b.k.generators(p, q);
                int sgn = (p * q % 2 == 0) ? 1 : -1;
                for (std::size_t col = 0; col < list.size(); ++col) {
                    auto it = spec.conjWeight.find(list[col].w);
                    if (it == spec.conjWeight.end())
                        throw std::invalid_argument("weighted model: conjugation table misses a weight");
                    Generator dst{it->second, list[col].J, list[col].I};
                    b.conj(p, q).at(b.indexOf(dst), col) = GaussianRational(sgn);
                }
            }
    }
    return b.take();
}

DoubleComplex buildExplicitComplex(const ExplicitSpec& spec) {
    DoubleComplex::Builder b(spec.n, spec.name, LabelStyle::Dz);
    b.setExplicitDims(spec.dims, spec.labels);
    auto fill = [&](const std::map<std::pair<int, int>, Matrix>& src, bool onDel) {
        for (const auto& [pq, m] : src) {
            auto [p, q] = pq;
            Matrix& dst = onDel ? b.del(p, q) : b.dbar(p, q);
            if (m.rows() != dst.rows() || m.cols() != dst.cols())
                throw std::invalid_argument("explicit model: operator shape mismatch at (" +
                                            std::to_string(p) + "," + std::to_string(q) + ")");
            dst = m;
        }
    };
    fill(spec.del, true);
    fill(spec.dbar, false);
    if (spec.hasConj) {
        b.enableConj();
        for (const auto& [pq, m] : spec.conj) {
            auto [p, q] = pq;
            if (m.rows() != b.k.dim(q, p) || m.cols() != b.k.dim(p, q))
                throw std::invalid_argument("explicit model: conj shape mismatch");
            b.conj(p, q) = m;
        }
    }
    for (const auto& [pq, m] : spec.gram) {
        auto [p, q] = pq;
        if (m.rows() != b.k.dim(p, q) || m.cols() != b.k.dim(p, q))
            throw std::invalid_argument("explicit model: gram shape mismatch");
        b.gram(p, q) = m;
    }
    return b.take();
}

} // namespace fss
