#include "fss/kuranishi.hpp"

#include <algorithm>
#include <functional>

namespace fss {

std::string Monomial::str() const {
    std::string s;
    for (std::size_t i = 0; i < e.size(); ++i) {
        if (e[i] == 0) continue;
        if (!s.empty()) s += "·";
        s += "t" + std::to_string(i + 1);
        if (e[i] > 1) s += "^" + std::to_string(e[i]);
    }
    return s.empty() ? "1" : s;
}

const char* solveStatusName(SolveStatus s) {
    switch (s) {
        case SolveStatus::SchemeSolved: return "scheme-solved";
        case SolveStatus::DbarSolvedOnly: return "scheme-failed-dbar-solvable";
        case SolveStatus::Obstructed: return "obstructed";
        case SolveStatus::Inadmissible: return "inadmissible";
    }
    return "?";
}

bool KuranishiResult::allSchemeSolved() const {
    for (const auto& st : statuses)
        if (st.status != SolveStatus::SchemeSolved) return false;
    return !obstructed();
}

KuranishiIterator::KuranishiIterator(HodgeContext& hodge, DeformationCalculus& defc)
    : hodge_(hodge), defc_(defc), k_(hodge.complex()) {}

std::vector<DirectionInfo> KuranishiIterator::fullDirections() {
    int n = k_.n();
    const PolyVectorSpace& pv = defc_.pv();
    std::vector<std::string> pvLabels;
    for (std::size_t i = 0; i < pv.dim(); ++i) pvLabels.push_back(pv.elementLabel(i));
    std::vector<DirectionInfo> dirs;
    const Subspace& h1 = hodge_.harmonic1(n - 1, 1);
    for (std::size_t j = 0; j < h1.dim(); ++j) {
        DirectionInfo d;
        Vec h = h1.basisVec(j);
        Vec dh = k_.del(n - 1, 1).apply(h);
        if (isZeroVec(dh)) {
            d.admissible = true;
            d.rep = h;
        } else {
            for (auto& x : dh) x = -x;
            auto beta = hodge_.minNormDdbarSolve(n, 1, dh);
            if (beta) {
                d.admissible = true;
                d.rep = addVec(h, k_.dbar(n - 1, 0).apply(*beta));
            } else {
                d.admissible = false; // no d-closed representative in this class
                d.rep = h;
            }
        }
        d.theta = d.admissible ? pv.contractUInverse(d.rep) : Vec(pv.dim());
        d.label = linearComboLabel(pv.contractUInverse(d.rep), pvLabels);
        dirs.push_back(std::move(d));
    }
    return dirs;
}

std::vector<DirectionInfo> KuranishiIterator::essentialDirections() {
    int n = k_.n();
    const PolyVectorSpace& pv = defc_.pv();
    std::vector<std::string> pvLabels;
    for (std::size_t i = 0; i < pv.dim(); ++i) pvLabels.push_back(pv.elementLabel(i));
    std::vector<DirectionInfo> dirs;
    const PageData& e2 = hodge_.spectral().page(2, n - 1, 1);
    for (std::size_t j = 0; j < e2.dim; ++j) {
        Vec cls(e2.dim);
        cls[j] = GaussianRational(1);
        LiftResult lift = hodge_.dClosedRep(n - 1, 1, cls);
        DirectionInfo d;
        d.admissible = true;
        d.rep = lift.liftedRep;
        d.theta = pv.contractUInverse(d.rep);
        d.label = linearComboLabel(d.theta, pvLabels);
        dirs.push_back(std::move(d));
    }
    return dirs;
}

Vec KuranishiIterator::bracketRhs(const KuranishiResult& res, const Monomial& m) const {
    int n = k_.n();
    Vec rhs(k_.dim(n - 1, 2));
    // ordered splittings m = m1 + m2 with both parts of positive degree
    std::function<void(std::size_t, Monomial&, bool)> enumerate;
    Monomial m1;
    m1.e.assign(m.e.size(), 0);
    GaussianRational half(mpq_class(1, 2));
    enumerate = [&](std::size_t pos, Monomial& cur, bool) {
        if (pos == m.e.size()) {
            if (cur.degree() == 0 || cur.degree() == m.degree()) return;
            auto it1 = res.psi.find(cur);
            if (it1 == res.psi.end()) return;
            Monomial m2;
            m2.e.resize(m.e.size());
            for (std::size_t i = 0; i < m.e.size(); ++i) m2.e[i] = m.e[i] - cur.e[i];
            auto it2 = res.psi.find(m2);
            if (it2 == res.psi.end()) return;
            Vec term = defc_.ttBracketU(it1->second, it2->second);
            for (std::size_t i = 0; i < rhs.size(); ++i) rhs[i] += half * term[i];
            return;
        }
        for (unsigned v = 0; v <= m.e[pos]; ++v) {
            cur.e[pos] = v;
            enumerate(pos + 1, cur, false);
        }
        cur.e[pos] = 0;
    };
    enumerate(0, m1, false);
    return rhs;
}

KuranishiResult KuranishiIterator::run(KuranishiMode mode, int order,
                                       const std::vector<int>& directionSubset) {
    KuranishiResult res;
    res.mode = mode;
    res.order = order;
    int n = k_.n();
    const PolyVectorSpace& pv = defc_.pv();

    auto dirs = mode == KuranishiMode::Full ? fullDirections() : essentialDirections();
    if (!directionSubset.empty()) {
        std::vector<DirectionInfo> chosen;
        for (int idx : directionSubset) {
            if (idx < 0 || idx >= static_cast<int>(dirs.size()))
                throw std::invalid_argument("kuranishi: direction index out of range");
            chosen.push_back(dirs[idx]);
        }
        dirs = std::move(chosen);
    }
    res.directions = dirs;
    std::size_t m = dirs.size();

    for (std::size_t j = 0; j < m; ++j) {
        if (!dirs[j].admissible) continue;
        Monomial mono;
        mono.e.assign(m, 0);
        mono.e[j] = 1;
        res.psi[mono] = dirs[j].theta;
    }

    // factorized solvers for all orders
    Matrix scheme = k_.dbar(n - 1, 1) * k_.del(n - 2, 1);
    MinNormSolver schemeSolver(scheme, hodge_.gram(n - 2, 1));
    MinNormSolver dbarSolver(k_.dbar(n - 1, 1), hodge_.gram(n - 1, 1));

    // enumerate monomials of fixed degree in lexicographic order
    std::function<void(std::size_t, unsigned, Monomial&, const std::function<void(const Monomial&)>&)>
        forEachMonomial = [&](std::size_t pos, unsigned left, Monomial& cur,
                              const std::function<void(const Monomial&)>& fn) {
            if (pos + 1 == cur.e.size()) {
                cur.e[pos] = left;
                fn(cur);
                cur.e[pos] = 0;
                return;
            }
            for (unsigned v = left; v > 0; --v) {
                cur.e[pos] = v;
                forEachMonomial(pos + 1, left - v, cur, fn);
            }
            cur.e[pos] = 0;
            forEachMonomial(pos + 1, left, cur, fn);
        };

    for (int nu = 2; nu <= order && !res.obstructed(); ++nu) {
        std::vector<Monomial> monos;
        Monomial scratch;
        scratch.e.assign(m, 0);
        if (m > 0)
            forEachMonomial(0, static_cast<unsigned>(nu), scratch,
                            [&](const Monomial& mm) { monos.push_back(mm); });
        std::sort(monos.begin(), monos.end());
        for (const auto& mono : monos) {
            bool touchesInadmissible = false;
            for (std::size_t j = 0; j < m; ++j)
                if (mono.e[j] > 0 && !dirs[j].admissible) touchesInadmissible = true;
            if (touchesInadmissible) {
                res.statuses.push_back({mono, SolveStatus::Inadmissible});
                continue;
            }
            Vec rhs = bracketRhs(res, mono);
            if (isZeroVec(rhs)) {
                res.statuses.push_back({mono, SolveStatus::SchemeSolved});
                continue; // psi_mono = 0, omitted from the series
            }
            if (auto phi = schemeSolver.solve(rhs)) {
                Vec eta = k_.del(n - 2, 1).apply(*phi);
                res.psi[mono] = pv.contractUInverse(eta);
                res.statuses.push_back({mono, SolveStatus::SchemeSolved});
                continue;
            }
            if (auto x = dbarSolver.solve(rhs)) {
                res.psi[mono] = pv.contractUInverse(*x);
                res.statuses.push_back({mono, SolveStatus::DbarSolvedOnly});
                continue;
            }
            ObstructionReport ob;
            ob.order = nu;
            ob.monomial = mono;
            ob.rhs = rhs;
            ob.mode = mode;
            if (!isZeroVec(k_.dbar(n - 1, 2).apply(rhs)))
                throw std::logic_error("kuranishi: right-hand side is not dbar-closed");
            ob.e1Class = hodge_.spectral().page(1, n - 1, 2).classOf(rhs);
            res.statuses.push_back({mono, SolveStatus::Obstructed});
            res.obstruction = std::move(ob);
            break;
        }
    }
    return res;
}

bool KuranishiIterator::verifyReplay(const KuranishiResult& res) const {
    int n = k_.n();
    const PolyVectorSpace& pv = defc_.pv();
    for (const auto& [mono, theta] : res.psi) {
        Vec lhs = k_.dbar(n - 1, 1).apply(pv.contractU(theta));
        Vec rhs = mono.degree() == 1 ? Vec(k_.dim(n - 1, 2)) : bracketRhs(res, mono);
        if (!(lhs == rhs)) return false;
    }
    // monomials solved to zero carry no entry; their equations need checking too
    for (const auto& st : res.statuses) {
        if (st.status != SolveStatus::SchemeSolved || res.psi.count(st.m)) continue;
        if (!isZeroVec(bracketRhs(res, st.m))) return false;
    }
    return true;
}

} // namespace fss
