#include "fss/spectral.hpp"

#include <stdexcept>

namespace fss {

namespace {

/// Sparse block linear system: named variable blocks, equations built from
/// (matrix, sign) terms per block. Used for the E_r towers.
class BlockSystem {
public:
    struct Term {
        std::size_t var;
        const Matrix* m;
        int sign;
    };

    std::size_t addVar(std::size_t dim) {
        offsets_.push_back(total_);
        dims_.push_back(dim);
        total_ += dim;
        return dims_.size() - 1;
    }

    void addEq(std::size_t rows, std::vector<Term> terms) {
        eqs_.push_back({rows, std::move(terms)});
        rows_ += rows;
    }

    /// kernel of the assembled system, projected onto one variable block
    Subspace kernelProjection(std::size_t var) const {
        Matrix sys(rows_, total_);
        std::size_t r0 = 0;
        for (const auto& eq : eqs_) {
            for (const auto& t : eq.terms) {
                const Matrix& m = *t.m;
                if (m.rows() != eq.rows || m.cols() != dims_[t.var])
                    throw std::logic_error("BlockSystem: term shape mismatch");
                for (std::size_t i = 0; i < m.rows(); ++i)
                    for (std::size_t j = 0; j < m.cols(); ++j) {
                        const auto& v = m.at(i, j);
                        if (!v.isZero())
                            sys.at(r0 + i, offsets_[t.var] + j) +=
                                t.sign > 0 ? v : -v;
                    }
            }
            r0 += eq.rows;
        }
        auto ker = sys.kernelBasis();
        std::vector<Vec> proj;
        proj.reserve(ker.size());
        for (const auto& v : ker)
            proj.emplace_back(v.begin() + offsets_[var], v.begin() + offsets_[var] + dims_[var]);
        return Subspace::span(dims_[var], proj);
    }

private:
    struct Eq {
        std::size_t rows;
        std::vector<Term> terms;
    };
    std::vector<std::size_t> dims_, offsets_;
    std::size_t total_ = 0, rows_ = 0;
    std::vector<Eq> eqs_;
};

} // namespace

Vec PageData::classOf(const Vec& v) const {
    if (dim == 0) {
        if (!closed.contains(v)) throw std::invalid_argument("PageData: vector is not closed");
        return Vec{};
    }
    auto sol = coordSolver->solve(v);
    if (!sol) throw std::invalid_argument("PageData: vector does not represent a class on this page");
    return Vec(sol->begin(), sol->begin() + dim);
}

Subspace SpectralCache::Z(int r, int p, int q) {
    if (!k_.validSlot(p, q)) return Subspace(0);
    auto key = std::make_tuple(0, r, p, q);
    {
        std::lock_guard<std::mutex> lock(mu_);
        auto it = spaceMemo_.find(key);
        if (it != spaceMemo_.end()) return it->second;
    }
    Subspace result(0);
    std::size_t d = k_.dim(p, q);
    if (r <= 0) {
        result = Subspace::full(d);
    } else if (r == 1) {
        result = kernel(k_.dbar(p, q));
    } else {
        BlockSystem sys;
        auto alpha = sys.addVar(d);
        std::vector<std::size_t> u(r); // u[1..r-1]
        for (int l = 1; l <= r - 1; ++l) u[l] = sys.addVar(k_.dim(p + l, q - l));
        sys.addEq(k_.dim(p, q + 1), {{alpha, &k_.dbar(p, q), +1}});
        sys.addEq(k_.dim(p + 1, q),
                  {{alpha, &k_.del(p, q), +1}, {u[1], &k_.dbar(p + 1, q - 1), -1}});
        for (int l = 1; l <= r - 2; ++l)
            sys.addEq(k_.dim(p + l + 1, q - l), {{u[l], &k_.del(p + l, q - l), +1},
                                                 {u[l + 1], &k_.dbar(p + l + 1, q - l - 1), -1}});
        result = sys.kernelProjection(alpha);
    }
    std::lock_guard<std::mutex> lock(mu_);
    return spaceMemo_.emplace(key, std::move(result)).first->second;
}

namespace {

/// zeta-side admissible space in A^{p0,q0}: dbar(zeta) reaches 0 in at most
/// (r-1) steps through the del-direction (the exactness tower) — r >= 2.
Subspace descendingTowerDbar(const DoubleComplex& k, int r, int p0, int q0) {
    if (p0 < 0 || q0 < 0 || k.dim(p0, q0) == 0) return Subspace(k.dim(std::max(p0, 0), std::max(q0, 0)));
    BlockSystem sys;
    auto zeta = sys.addVar(k.dim(p0, q0));
    std::vector<std::size_t> v(std::max(0, r - 1));
    for (int s = 1; s <= r - 2; ++s) v[s] = sys.addVar(k.dim(p0 - s, q0 + s));
    if (r == 2) {
        sys.addEq(k.dim(p0, q0 + 1), {{zeta, &k.dbar(p0, q0), +1}});
    } else {
        sys.addEq(k.dim(p0, q0 + 1),
                  {{zeta, &k.dbar(p0, q0), +1}, {v[1], &k.del(p0 - 1, q0 + 1), -1}});
        for (int s = 1; s <= r - 3; ++s)
            sys.addEq(k.dim(p0 - s, q0 + s + 1),
                      {{v[s], &k.dbar(p0 - s, q0 + s), +1},
                       {v[s + 1], &k.del(p0 - s - 1, q0 + s + 1), -1}});
        sys.addEq(k.dim(p0 - (r - 2), q0 + r - 1), {{v[r - 2], &k.dbar(p0 - (r - 2), q0 + r - 2), +1}});
    }
    return sys.kernelProjection(zeta);
}

/// eta-side admissible space in A^{p0,q0}: del(eta) reaches 0 in at most
/// (r-1) steps through the dbar-direction — the conjugate tower.
Subspace descendingTowerDel(const DoubleComplex& k, int r, int p0, int q0) {
    if (p0 < 0 || q0 < 0 || k.dim(p0, q0) == 0) return Subspace(k.dim(std::max(p0, 0), std::max(q0, 0)));
    BlockSystem sys;
    auto eta = sys.addVar(k.dim(p0, q0));
    std::vector<std::size_t> u(std::max(0, r - 1));
    for (int s = 1; s <= r - 2; ++s) u[s] = sys.addVar(k.dim(p0 + s, q0 - s));
    if (r == 2) {
        sys.addEq(k.dim(p0 + 1, q0), {{eta, &k.del(p0, q0), +1}});
    } else {
        sys.addEq(k.dim(p0 + 1, q0),
                  {{eta, &k.del(p0, q0), +1}, {u[1], &k.dbar(p0 + 1, q0 - 1), -1}});
        for (int s = 1; s <= r - 3; ++s)
            sys.addEq(k.dim(p0 + s + 1, q0 - s),
                      {{u[s], &k.del(p0 + s, q0 - s), +1},
                       {u[s + 1], &k.dbar(p0 + s + 1, q0 - s - 1), -1}});
        sys.addEq(k.dim(p0 + r - 1, q0 - (r - 2)), {{u[r - 2], &k.del(p0 + r - 2, q0 - (r - 2)), +1}});
    }
    return sys.kernelProjection(eta);
}

std::vector<Vec> mapBasis(const Matrix& op, const Subspace& s) {
    std::vector<Vec> out;
    out.reserve(s.dim());
    for (std::size_t j = 0; j < s.dim(); ++j) out.push_back(op.apply(s.basisVec(j)));
    return out;
}

} // namespace

Subspace SpectralCache::C(int r, int p, int q) {
    if (!k_.validSlot(p, q)) return Subspace(0);
    auto key = std::make_tuple(1, r, p, q);
    {
        std::lock_guard<std::mutex> lock(mu_);
        auto it = spaceMemo_.find(key);
        if (it != spaceMemo_.end()) return it->second;
    }
    std::size_t d = k_.dim(p, q);
    Subspace result(d);
    if (r >= 1) {
        std::vector<Vec> span;
        if (q - 1 >= 0) {
            for (std::size_t j = 0; j < k_.dim(p, q - 1); ++j) {
                Vec e(k_.dim(p, q - 1));
                e[j] = GaussianRational(1);
                span.push_back(k_.dbar(p, q - 1).apply(e));
            }
        }
        if (r >= 2 && p - 1 >= 0) {
            Subspace zeta = descendingTowerDbar(k_, r, p - 1, q);
            auto delZeta = mapBasis(k_.del(p - 1, q), zeta);
            span.insert(span.end(), delZeta.begin(), delZeta.end());
        }
        result = Subspace::span(d, span);
    }
    std::lock_guard<std::mutex> lock(mu_);
    return spaceMemo_.emplace(key, std::move(result)).first->second;
}

Subspace SpectralCache::ererClosed(int r, int p, int q) {
    if (!k_.validSlot(p, q)) return Subspace(0);
    auto key = std::make_tuple(2, r, p, q);
    {
        std::lock_guard<std::mutex> lock(mu_);
        auto it = spaceMemo_.find(key);
        if (it != spaceMemo_.end()) return it->second;
    }
    std::size_t d = k_.dim(p, q);
    Subspace result(d);
    if (r == 1) {
        result = kernel(k_.del(p, q + 1) * k_.dbar(p, q));
    } else {
        BlockSystem sys;
        auto alpha = sys.addVar(d);
        std::vector<std::size_t> eta(r), rho(r);
        for (int l = 1; l <= r - 1; ++l) {
            eta[l] = sys.addVar(k_.dim(p + l, q - l));
            rho[l] = sys.addVar(k_.dim(p - l, q + l));
        }
        sys.addEq(k_.dim(p + 1, q),
                  {{alpha, &k_.del(p, q), +1}, {eta[1], &k_.dbar(p + 1, q - 1), -1}});
        for (int l = 1; l <= r - 2; ++l)
            sys.addEq(k_.dim(p + l + 1, q - l),
                      {{eta[l], &k_.del(p + l, q - l), +1},
                       {eta[l + 1], &k_.dbar(p + l + 1, q - l - 1), -1}});
        sys.addEq(k_.dim(p, q + 1),
                  {{alpha, &k_.dbar(p, q), +1}, {rho[1], &k_.del(p - 1, q + 1), -1}});
        for (int l = 1; l <= r - 2; ++l)
            sys.addEq(k_.dim(p - l, q + l + 1),
                      {{rho[l], &k_.dbar(p - l, q + l), +1},
                       {rho[l + 1], &k_.del(p - l - 1, q + l + 1), -1}});
        result = sys.kernelProjection(alpha);
    }
    std::lock_guard<std::mutex> lock(mu_);
    return spaceMemo_.emplace(key, std::move(result)).first->second;
}

Subspace SpectralCache::ererExact(int r, int p, int q) {
    if (!k_.validSlot(p, q)) return Subspace(0);
    auto key = std::make_tuple(3, r, p, q);
    {
        std::lock_guard<std::mutex> lock(mu_);
        auto it = spaceMemo_.find(key);
        if (it != spaceMemo_.end()) return it->second;
    }
    std::size_t d = k_.dim(p, q);
    std::vector<Vec> span;
    // del dbar xi with xi arbitrary
    if (p - 1 >= 0 && q - 1 >= 0 && k_.dim(p - 1, q - 1) > 0) {
        Matrix op = k_.del(p - 1, q) * k_.dbar(p - 1, q - 1);
        for (std::size_t j = 0; j < op.cols(); ++j) span.push_back(op.colVec(j));
    }
    if (r == 1) {
        // plain del-dbar-exactness: nothing else
    } else {
        if (p - 1 >= 0 && k_.dim(p - 1, q) > 0) {
            Subspace zeta = descendingTowerDbar(k_, r, p - 1, q);
            auto vs = mapBasis(k_.del(p - 1, q), zeta);
            span.insert(span.end(), vs.begin(), vs.end());
        }
        if (q - 1 >= 0 && k_.dim(p, q - 1) > 0) {
            Subspace eta = descendingTowerDel(k_, r, p, q - 1);
            auto vs = mapBasis(k_.dbar(p, q - 1), eta);
            span.insert(span.end(), vs.begin(), vs.end());
        }
    }
    Subspace result = Subspace::span(d, span);
    std::lock_guard<std::mutex> lock(mu_);
    return spaceMemo_.emplace(key, std::move(result)).first->second;
}

PageData SpectralCache::makeQuotient(const Subspace& closed, const Subspace& exact, int, int) {
    PageData pd;
    pd.closed = closed;
    pd.exact = closed.intersect(exact);
    std::vector<Vec> closedBasis;
    for (std::size_t j = 0; j < closed.dim(); ++j) closedBasis.push_back(closed.basisVec(j));
    pd.reps = complementInto(pd.exact, closedBasis);
    pd.dim = pd.reps.size();
    if (pd.dim > 0 || pd.exact.dim() > 0) {
        Matrix solveMat = Matrix::hstack(Matrix::fromCols(closed.ambientDim(), pd.reps), pd.exact.basis());
        pd.coordSolver = std::make_shared<LinearSolver>(solveMat);
    }
    return pd;
}

const PageData& SpectralCache::page(int r, int p, int q) {
    auto key = std::make_tuple(0, r, p, q);
    {
        std::lock_guard<std::mutex> lock(mu_);
        auto it = pageMemo_.find(key);
        if (it != pageMemo_.end()) return *it->second;
    }
    auto pd = std::make_shared<PageData>(makeQuotient(Z(r, p, q), C(r, p, q), p, q));
    std::lock_guard<std::mutex> lock(mu_);
    return *pageMemo_.emplace(key, std::move(pd)).first->second;
}

const PageData& SpectralCache::bc(int r, int p, int q) {
    auto key = std::make_tuple(1, r, p, q);
    {
        std::lock_guard<std::mutex> lock(mu_);
        auto it = pageMemo_.find(key);
        if (it != pageMemo_.end()) return *it->second;
    }
    Subspace closed = kernel(k_.del(p, q)).intersect(kernel(k_.dbar(p, q)));
    auto pd = std::make_shared<PageData>(makeQuotient(closed, ererExact(r, p, q), p, q));
    std::lock_guard<std::mutex> lock(mu_);
    return *pageMemo_.emplace(key, std::move(pd)).first->second;
}

const PageData& SpectralCache::aeppli(int r, int p, int q) {
    auto key = std::make_tuple(2, r, p, q);
    {
        std::lock_guard<std::mutex> lock(mu_);
        auto it = pageMemo_.find(key);
        if (it != pageMemo_.end()) return *it->second;
    }
    std::size_t d = k_.dim(p, q);
    std::vector<Vec> span;
    if (p - 1 >= 0)
        for (std::size_t j = 0; j < k_.dim(p - 1, q); ++j) span.push_back(k_.del(p - 1, q).colVec(j));
    if (q - 1 >= 0)
        for (std::size_t j = 0; j < k_.dim(p, q - 1); ++j) span.push_back(k_.dbar(p, q - 1).colVec(j));
    Subspace exact = Subspace::span(d, span);
    auto pd = std::make_shared<PageData>(makeQuotient(ererClosed(r, p, q), exact, p, q));
    std::lock_guard<std::mutex> lock(mu_);
    return *pageMemo_.emplace(key, std::move(pd)).first->second;
}

std::shared_ptr<LinearSolver> SpectralCache::dbarSolver(int p, int q) {
    std::lock_guard<std::mutex> lock(mu_);
    auto it = dbarSolvers_.find({p, q});
    if (it != dbarSolvers_.end()) return it->second;
    auto s = std::make_shared<LinearSolver>(k_.dbar(p, q));
    dbarSolvers_[{p, q}] = s;
    return s;
}

std::shared_ptr<LinearSolver> SpectralCache::delSolver(int p, int q) {
    std::lock_guard<std::mutex> lock(mu_);
    auto it = delSolvers_.find({p, q});
    if (it != delSolvers_.end()) return it->second;
    auto s = std::make_shared<LinearSolver>(k_.del(p, q));
    delSolvers_[{p, q}] = s;
    return s;
}

Matrix SpectralCache::dr(int r, int p, int q) {
    const PageData& src = page(r, p, q);
    int tp = p + r, tq = q - r + 1;
    if (!k_.validSlot(tp, tq) || k_.dim(tp, tq) == 0) return Matrix(0, src.dim);
    const PageData& dst = page(r, tp, tq);
    Matrix out(dst.dim, src.dim);
    for (std::size_t j = 0; j < src.dim; ++j) {
        Vec cur = src.reps[j];
        Vec img;
        if (r == 1) {
            img = k_.del(p, q).apply(cur);
        } else {
            // lift the tower: del(alpha) = dbar(u1), del(u_l) = dbar(u_{l+1})
            Vec b = k_.del(p, q).apply(cur);
            Vec ul;
            for (int l = 1; l <= r - 1; ++l) {
                int up = p + l, uq = q - l;
                if (!k_.validSlot(up, uq) || k_.dim(up, uq) == 0) {
                    if (!isZeroVec(b))
                        throw std::logic_error("dr: tower leaves the grid with nonzero rhs");
                    ul = Vec(k_.dim(up, uq));
                } else {
                    auto sol = dbarSolver(up, uq)->solve(b);
                    if (!sol) throw std::logic_error("dr: representative is not E_r-closed");
                    ul = *sol;
                }
                b = k_.del(up, uq).apply(ul);
            }
            img = b; // del(u_{r-1})
        }
        Vec cls = dst.classOf(img);
        for (std::size_t i = 0; i < dst.dim; ++i) out.at(i, j) = cls[i];
    }
    return out;
}

std::vector<std::vector<std::size_t>> SpectralCache::pageDimsViaDifferentials(int r) {
    int n = k_.n();
    std::vector<std::vector<std::size_t>> dims(n + 1, std::vector<std::size_t>(n + 1, 0));
    std::vector<std::vector<std::size_t>> kerdim(n + 1, std::vector<std::size_t>(n + 1, 0));
    std::vector<std::vector<std::size_t>> imdim(n + 1, std::vector<std::size_t>(n + 1, 0));
    for (int p = 0; p <= n; ++p)
        for (int q = 0; q <= n; ++q) dims[p][q] = page(1, p, q).dim;
    for (int rr = 1; rr < r; ++rr) {
        for (auto& row : kerdim) std::fill(row.begin(), row.end(), 0);
        for (auto& row : imdim) std::fill(row.begin(), row.end(), 0);
        for (int p = 0; p <= n; ++p)
            for (int q = 0; q <= n; ++q) {
                if (dims[p][q] == 0) continue;
                Matrix d = dr(rr, p, q);
                std::size_t rank = d.rank();
                kerdim[p][q] = dims[p][q] - rank;
                int tp = p + rr, tq = q - rr + 1;
                if (tp <= n && tq >= 0 && tq <= n) imdim[tp][tq] = rank;
            }
        for (int p = 0; p <= n; ++p)
            for (int q = 0; q <= n; ++q) dims[p][q] = kerdim[p][q] - imdim[p][q];
    }
    return dims;
}

const SpectralCache::DeRham& SpectralCache::deRham() {
    {
        std::lock_guard<std::mutex> lock(mu_);
        if (deRham_) return *deRham_;
    }
    auto total = k_.totalComplex();
    auto dr = std::make_shared<DeRham>();
    int top = 2 * k_.n();
    for (int kdeg = 0; kdeg <= top; ++kdeg) {
        Subspace closed = kdeg < top ? kernel(total.d[kdeg]) : Subspace::full(total.dims[kdeg]);
        Subspace exact = kdeg > 0 ? image(total.d[kdeg - 1]) : Subspace(total.dims[kdeg]);
        dr->betti.push_back(closed.dim() - closed.intersect(exact).dim());
        dr->closed.push_back(std::move(closed));
        dr->exact.push_back(std::move(exact));
    }
    std::lock_guard<std::mutex> lock(mu_);
    if (!deRham_) deRham_ = std::move(dr);
    return *deRham_;
}

int SpectralCache::degenerationPage() {
    {
        std::lock_guard<std::mutex> lock(mu_);
        if (degenPage_ >= 0) return degenPage_;
    }
    const auto& betti = deRham().betti;
    int n = k_.n();
    int found = -1;
    for (int r = 1; r <= n + 1 && found < 0; ++r) {
        bool match = true;
        for (int kdeg = 0; kdeg <= 2 * n && match; ++kdeg) {
            std::size_t sum = 0;
            for (int p = std::max(0, kdeg - n); p <= std::min(n, kdeg); ++p)
                sum += page(r, p, kdeg - p).dim;
            match = (sum == betti[kdeg]);
        }
        if (match) found = r;
    }
    if (found < 0) throw std::logic_error("degenerationPage: no stabilization by page n+1");
    std::lock_guard<std::mutex> lock(mu_);
    degenPage_ = found;
    return found;
}

PageDdbarReport SpectralCache::pageDdbar(int r) {
    PageDdbarReport rep;
    rep.r = r;
    int n = k_.n();
    rep.bcDims.assign(2 * n + 1, 0);
    rep.aDims.assign(2 * n + 1, 0);
    for (int p = 0; p <= n; ++p)
        for (int q = 0; q <= n; ++q) {
            rep.bcDims[p + q] += bc(r, p, q).dim;
            rep.aDims[p + q] += aeppli(r, p, q).dim;
        }
    rep.holds = rep.bcDims == rep.aDims;

    rep.mapInjective = true;
    for (int p = 0; p <= n && rep.mapInjective; ++p)
        for (int q = 0; q <= n && rep.mapInjective; ++q) {
            if (k_.dim(p, q) == 0) continue;
            const PageData& bcpq = bc(r, p, q);
            const PageData& apq = aeppli(r, p, q);
            // kernel of BC -> A: d-closed forms that are (Im del + Im dbar)
            // modulo ErEr-exact; injective iff the intersection is ErEr-exact
            Subspace inter = bcpq.closed.intersect(apq.exact);
            if (!ererExact(r, p, q).containsSubspace(inter)) rep.mapInjective = false;
        }
    rep.degeneratesByR = degenerationPage() <= r;
    rep.internalConsistent = (rep.holds == rep.mapInjective) && (!rep.holds || rep.degeneratesByR);
    return rep;
}

HodgeSymmetryReport SpectralCache::hodgeSymmetry(int r) {
    HodgeSymmetryReport rep;
    rep.r = r;
    int n = k_.n();
    rep.dimsSymmetric = true;
    for (int p = 0; p <= n; ++p)
        for (int q = 0; q <= n; ++q)
            if (page(r, p, q).dim != page(r, q, p).dim) rep.dimsSymmetric = false;
    if (pageDdbar(r).holds) {
        rep.checkedReps = true;
        rep.dClosedReps = true;
        for (int p = 0; p <= n; ++p)
            for (int q = 0; q <= n; ++q) {
                if (k_.dim(p, q) == 0) continue;
                Subspace zr = Z(r, p, q);
                Subspace dClosed = kernel(k_.del(p, q)).intersect(kernel(k_.dbar(p, q)));
                if (zr.intersect(dClosed).sum(C(r, p, q)).dim() != zr.dim()) rep.dClosedReps = false;
            }
    }
    return rep;
}

} // namespace fss
