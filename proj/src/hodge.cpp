#include "fss/hodge.hpp"

#include <stdexcept>

namespace fss {

namespace {

Matrix invertHermitianPd(const Matrix& g) {
    // RREF of [G | I]; G invertible by positive-definiteness
    std::size_t n = g.rows();
    Matrix aug = Matrix::hstack(g, Matrix::identity(n));
    aug.rrefInPlace();
    Matrix inv(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) inv.at(i, j) = aug.at(i, n + j);
    return inv;
}

} // namespace

HodgeContext::HodgeContext(SpectralCache& spec, std::map<std::pair<int, int>, Matrix> gramOverrides)
    : spec_(spec), k_(spec.complex()), gramOv_(std::move(gramOverrides)) {
    for (const auto& [pq, g] : gramOv_) {
        if (g.rows() != k_.dim(pq.first, pq.second) || !g.isHermitian() || !g.isPositiveDefinite())
            throw std::invalid_argument("HodgeContext: gram override must be Hermitian positive-definite");
    }
}

const Matrix& HodgeContext::gram(int p, int q) {
    auto it = gramOv_.find({p, q});
    if (it != gramOv_.end()) return it->second;
    return k_.gram(p, q);
}

const Matrix& HodgeContext::gramInverse(int p, int q) {
    std::lock_guard<std::mutex> lock(mu_);
    auto it = gramInv_.find({p, q});
    if (it != gramInv_.end()) return it->second;
    return gramInv_.emplace(std::make_pair(p, q), invertHermitianPd(gram(p, q))).first->second;
}

Matrix HodgeContext::adjoint(const Matrix& op, const Matrix& gramDom, const Matrix& gramCod) {
    return invertHermitianPd(gramDom) * op.hermitian() * gramCod;
}

const Matrix& HodgeContext::delAdj(int p, int q) {
    {
        std::lock_guard<std::mutex> lock(mu_);
        auto it = delAdj_.find({p, q});
        if (it != delAdj_.end()) return it->second;
    }
    Matrix a = gramInverse(p, q) * k_.del(p, q).hermitian() * gram(p + 1, q);
    std::lock_guard<std::mutex> lock(mu_);
    return delAdj_.emplace(std::make_pair(p, q), std::move(a)).first->second;
}

const Matrix& HodgeContext::dbarAdj(int p, int q) {
    {
        std::lock_guard<std::mutex> lock(mu_);
        auto it = dbarAdj_.find({p, q});
        if (it != dbarAdj_.end()) return it->second;
    }
    Matrix a = gramInverse(p, q) * k_.dbar(p, q).hermitian() * gram(p, q + 1);
    std::lock_guard<std::mutex> lock(mu_);
    return dbarAdj_.emplace(std::make_pair(p, q), std::move(a)).first->second;
}

const Matrix& HodgeContext::laplacianDbar(int p, int q) {
    {
        std::lock_guard<std::mutex> lock(mu_);
        auto it = lapDbar_.find({p, q});
        if (it != lapDbar_.end()) return it->second;
    }
    std::size_t d = k_.dim(p, q);
    Matrix lap(d, d);
    if (d > 0) {
        lap = dbarAdj(p, q) * k_.dbar(p, q);
        if (q - 1 >= 0 && k_.dim(p, q - 1) > 0) lap = lap + k_.dbar(p, q - 1) * dbarAdj(p, q - 1);
    }
    std::lock_guard<std::mutex> lock(mu_);
    return lapDbar_.emplace(std::make_pair(p, q), std::move(lap)).first->second;
}

const Subspace& HodgeContext::harmonic1(int p, int q) {
    {
        std::lock_guard<std::mutex> lock(mu_);
        auto it = h1_.find({p, q});
        if (it != h1_.end()) return it->second;
    }
    Subspace h = kernel(laplacianDbar(p, q));
    std::lock_guard<std::mutex> lock(mu_);
    return h1_.emplace(std::make_pair(p, q), std::move(h)).first->second;
}

const Matrix& HodgeContext::projHarmonic1(int p, int q) {
    {
        std::lock_guard<std::mutex> lock(mu_);
        auto it = projH1_.find({p, q});
        if (it != projH1_.end()) return it->second;
    }
    const Subspace& h = harmonic1(p, q);
    std::size_t d = k_.dim(p, q);
    Matrix proj(d, d);
    if (h.dim() > 0) {
        const Matrix& hb = h.basis();
        Matrix hg = hb.hermitian() * gram(p, q);
        Matrix inner = hg * hb; // Hermitian positive-definite on the harmonic space
        proj = hb * invertHermitianPd(inner) * hg;
    }
    std::lock_guard<std::mutex> lock(mu_);
    return projH1_.emplace(std::make_pair(p, q), std::move(proj)).first->second;
}

const Matrix& HodgeContext::laplacianTilde(int p, int q) {
    {
        std::lock_guard<std::mutex> lock(mu_);
        auto it = lapTilde_.find({p, q});
        if (it != lapTilde_.end()) return it->second;
    }
    Matrix lap = laplacianDbar(p, q);
    if (p - 1 >= 0 && k_.dim(p - 1, q) > 0)
        lap = lap + k_.del(p - 1, q) * projHarmonic1(p - 1, q) * delAdj(p - 1, q);
    if (p + 1 <= k_.n() && k_.dim(p + 1, q) > 0)
        lap = lap + delAdj(p, q) * projHarmonic1(p + 1, q) * k_.del(p, q);
    std::lock_guard<std::mutex> lock(mu_);
    return lapTilde_.emplace(std::make_pair(p, q), std::move(lap)).first->second;
}

const Subspace& HodgeContext::harmonic2(int p, int q) {
    {
        std::lock_guard<std::mutex> lock(mu_);
        auto it = h2_.find({p, q});
        if (it != h2_.end()) return it->second;
    }
    Subspace h = kernel(laplacianTilde(p, q));
    std::lock_guard<std::mutex> lock(mu_);
    return h2_.emplace(std::make_pair(p, q), std::move(h)).first->second;
}

const Matrix& HodgeContext::bcLaplacian(int p, int q) {
    {
        std::lock_guard<std::mutex> lock(mu_);
        auto it = lapBc_.find({p, q});
        if (it != lapBc_.end()) return it->second;
    }
    std::size_t d = k_.dim(p, q);
    Matrix lap(d, d);
    // (del dbar)(del dbar)* + (del dbar)*(del dbar)
    if (p - 1 >= 0 && q - 1 >= 0 && k_.dim(p - 1, q - 1) > 0) {
        Matrix s = k_.del(p - 1, q) * k_.dbar(p - 1, q - 1);
        Matrix sadj = adjoint(s, gram(p - 1, q - 1), gram(p, q));
        lap = lap + s * sadj;
    }
    if (p + 1 <= k_.n() && q + 1 <= k_.n()) {
        Matrix t = k_.del(p, q + 1) * k_.dbar(p, q);
        Matrix tadj = adjoint(t, gram(p, q), gram(p + 1, q + 1));
        lap = lap + tadj * t;
    }
    // (dbar* del)*(dbar* del), the instance starting at (p,q)
    if (p + 1 <= k_.n() && q - 1 >= 0 && k_.dim(p + 1, q - 1) > 0) {
        Matrix b = dbarAdj(p + 1, q - 1) * k_.del(p, q);
        Matrix badj = adjoint(b, gram(p, q), gram(p + 1, q - 1));
        lap = lap + badj * b;
    }
    // (dbar* del)(dbar* del)*, the instance ending at (p,q)
    if (q + 1 <= k_.n() && p - 1 >= 0 && k_.dim(p - 1, q + 1) > 0) {
        Matrix b2 = dbarAdj(p, q) * k_.del(p - 1, q + 1);
        Matrix b2adj = adjoint(b2, gram(p - 1, q + 1), gram(p, q));
        lap = lap + b2 * b2adj;
    }
    // dbar* dbar + del* del
    lap = lap + dbarAdj(p, q) * k_.dbar(p, q) + delAdj(p, q) * k_.del(p, q);
    std::lock_guard<std::mutex> lock(mu_);
    return lapBc_.emplace(std::make_pair(p, q), std::move(lap)).first->second;
}

std::optional<Vec> HodgeContext::minNormDdbarSolve(int p, int q, const Vec& v) {
    if (p - 1 < 0 || q - 1 < 0 || k_.dim(p - 1, q - 1) == 0)
        return isZeroVec(v) ? std::optional<Vec>(Vec(k_.dim(p - 1, q - 1))) : std::nullopt;
    std::shared_ptr<MinNormSolver> solver;
    {
        std::lock_guard<std::mutex> lock(mu_);
        auto it = ddbarSolvers_.find({p, q});
        if (it != ddbarSolvers_.end()) solver = it->second;
    }
    if (!solver) {
        Matrix s = k_.del(p - 1, q) * k_.dbar(p - 1, q - 1);
        solver = std::make_shared<MinNormSolver>(s, gram(p - 1, q - 1));
        std::lock_guard<std::mutex> lock(mu_);
        ddbarSolvers_.emplace(std::make_pair(p, q), solver);
    }
    return solver->solve(v);
}

std::optional<Vec> HodgeContext::greenDdbarSolve(int p, int q, const Vec& v) {
    if (p - 1 < 0 || q - 1 < 0 || k_.dim(p - 1, q - 1) == 0)
        return isZeroVec(v) ? std::optional<Vec>(Vec(k_.dim(p - 1, q - 1))) : std::nullopt;
    Matrix s = k_.del(p - 1, q) * k_.dbar(p - 1, q - 1);
    // exactness test first: the Green formula only applies to del-dbar-exact data
    LinearSolver probe(s);
    if (!probe.solvable(v)) return std::nullopt;
    std::shared_ptr<MinNormSolver> green;
    {
        std::lock_guard<std::mutex> lock(mu_);
        auto it = bcGreen_.find({p, q});
        if (it != bcGreen_.end()) green = it->second;
    }
    if (!green) {
        green = std::make_shared<MinNormSolver>(bcLaplacian(p, q), gram(p, q));
        std::lock_guard<std::mutex> lock(mu_);
        bcGreen_.emplace(std::make_pair(p, q), green);
    }
    auto w = green->solve(v);
    if (!w) return std::nullopt;
    Matrix sadj = adjoint(s, gram(p - 1, q - 1), gram(p, q));
    return sadj.apply(*w);
}

Subspace HodgeContext::e1Zero(int p, int q) {
    const PageData& e1 = spec_.page(1, p, q);
    Subspace z2 = spec_.Z(2, p, q);
    std::vector<Vec> classes;
    for (std::size_t j = 0; j < z2.dim(); ++j) classes.push_back(e1.classOf(z2.basisVec(j)));
    return Subspace::span(e1.dim, classes);
}

Matrix HodgeContext::pMap(int p, int q) {
    const PageData& e1 = spec_.page(1, p, q);
    const PageData& e2 = spec_.page(2, p, q);
    Subspace z2 = spec_.Z(2, p, q);
    Subspace e10 = e1Zero(p, q);
    // matrix of E_1-classes of a Z_2 basis, to pull e10 coordinates back to
    // actual E_2-closed representatives
    std::vector<Vec> cols;
    for (std::size_t j = 0; j < z2.dim(); ++j) cols.push_back(e1.classOf(z2.basisVec(j)));
    LinearSolver pullback(Matrix::fromCols(e1.dim, cols));
    Matrix out(e2.dim, e10.dim());
    for (std::size_t j = 0; j < e10.dim(); ++j) {
        auto x = pullback.solve(e10.basisVec(j));
        if (!x) throw std::logic_error("pMap: e1Zero class without E_2-closed representative");
        Vec rep = z2.basis().apply(*x);
        Vec cls = e2.classOf(rep);
        for (std::size_t i = 0; i < e2.dim; ++i) out.at(i, j) = cls[i];
    }
    return out;
}

LiftResult HodgeContext::dClosedRep(int p, int q, const Vec& e2Class) {
    const PageData& e2 = spec_.page(2, p, q);
    if (e2Class.size() != e2.dim) throw std::invalid_argument("dClosedRep: class size mismatch");
    LiftResult res;
    res.inputClass = e2Class;
    // harmonic representative: unique ker(tilde Laplacian) element of the class
    const Subspace& h2 = harmonic2(p, q);
    Vec target(k_.dim(p, q));
    for (std::size_t i = 0; i < e2.dim; ++i)
        if (!e2Class[i].isZero()) target = addVec(target, scaleVec(e2Class[i], e2.reps[i]));
    Matrix sys = Matrix::hstack(h2.basis(), e2.exact.basis());
    LinearSolver ls(sys);
    auto sol = ls.solve(target);
    if (!sol) throw std::logic_error("dClosedRep: no harmonic representative found (Hodge isomorphism)");
    Vec a(sol->begin(), sol->begin() + h2.dim());
    res.harmonicRep = h2.basis().apply(a);

    Vec rhs = k_.del(p, q).apply(res.harmonicRep);
    for (auto& x : rhs) x = -x;
    auto xi = minNormDdbarSolve(p + 1, q, rhs);
    if (!xi)
        throw SolvabilityError(
            "dClosedRep: del(harmonic representative) is not del-dbar-exact; "
            "the complex is not page-1-ddbar in this bidegree");
    res.correction = *xi;
    res.liftedRep = res.harmonicRep;
    if (q - 1 >= 0 && k_.dim(p, q - 1) > 0)
        res.liftedRep = addVec(res.harmonicRep, k_.dbar(p, q - 1).apply(res.correction));
    if (!isZeroVec(k_.del(p, q).apply(res.liftedRep)) ||
        !isZeroVec(k_.dbar(p, q).apply(res.liftedRep)))
        throw std::logic_error("dClosedRep: lifted representative is not d-closed");
    res.liftedClass = spec_.page(1, p, q).classOf(res.liftedRep);
    return res;
}

Matrix HodgeContext::omegaLift(int p, int q) {
    const PageData& e1 = spec_.page(1, p, q);
    const PageData& e2 = spec_.page(2, p, q);
    Matrix out(e1.dim, e2.dim);
    for (std::size_t j = 0; j < e2.dim; ++j) {
        Vec cls(e2.dim);
        cls[j] = GaussianRational(1);
        LiftResult lift = dClosedRep(p, q, cls);
        for (std::size_t i = 0; i < e1.dim; ++i) out.at(i, j) = lift.liftedClass[i];
    }
    return out;
}

Subspace HodgeContext::essentialSpace(int p, int q) { return image(omegaLift(p, q)); }

} // namespace fss
