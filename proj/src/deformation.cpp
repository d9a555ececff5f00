#include "fss/deformation.hpp"

namespace fss {

DeformationCalculus::DeformationCalculus(SpectralCache& spec)
    : spec_(spec), k_(spec.complex()), pv_(spec.complex()) {}

bool DeformationCalculus::delClosedContraction(const Vec& theta) const {
    int n = k_.n();
    return isZeroVec(k_.del(n - 1, 1).apply(pv_.contractU(theta)));
}

Vec DeformationCalculus::doubleContraction(const Vec& theta1, const Vec& theta2) const {
    int n = k_.n();
    return pv_.contractForm(theta1, n - 1, 1, pv_.contractU(theta2));
}

Vec DeformationCalculus::ttBracketU(const Vec& theta1, const Vec& theta2) const {
    if (!delClosedContraction(theta1) || !delClosedContraction(theta2))
        throw BracketPreconditionError(
            "ttBracketU: contraction against u must be del-closed for both arguments");
    int n = k_.n();
    Vec inner = doubleContraction(theta1, theta2);
    Vec out = k_.del(n - 2, 2).apply(inner);
    for (auto& x : out) x = -x;
    return out;
}

bool DeformationCalculus::condition11(const Vec& theta1, const Vec& theta2) {
    int n = k_.n();
    return spec_.Z(2, n - 2, 2).contains(doubleContraction(theta1, theta2));
}

DeformationCalculus::SuiteResult DeformationCalculus::condition11Suite() {
    SuiteResult res;
    int n = k_.n();
    Subspace kerD = kernel(k_.del(n - 1, 1)).intersect(kernel(k_.dbar(n - 1, 1)));
    Subspace imDel = image(k_.del(n - 2, 1));
    auto add = [&](const Subspace& s) {
        for (std::size_t j = 0; j < s.dim(); ++j) {
            Vec theta = pv_.contractUInverse(s.basisVec(j));
            res.labels.push_back(linearComboLabel(theta, [&] {
                std::vector<std::string> ls;
                for (std::size_t idx = 0; idx < pv_.dim(); ++idx) ls.push_back(pv_.elementLabel(idx));
                return ls;
            }()));
            res.thetas.push_back(std::move(theta));
        }
    };
    add(kerD);
    res.kerCount = res.thetas.size();
    add(imDel);
    for (std::size_t a = 0; a < res.thetas.size(); ++a)
        for (std::size_t b = 0; b < res.thetas.size(); ++b) {
            SuiteCell cell{a, b, true, {}};
            cell.ok = condition11(res.thetas[a], res.thetas[b]);
            if (!cell.ok) cell.dObstruction = ttBracketU(res.thetas[a], res.thetas[b]);
            res.cells.push_back(std::move(cell));
        }
    return res;
}

Subspace centre(const LieAlgebraSpec& g) {
    int n = g.dim();
    // rows: (i,k) equations sum_j a_j c(j,i,k) = 0
    Matrix sys(static_cast<std::size_t>(n) * n, n);
    for (int i = 1; i <= n; ++i)
        for (int k = 1; k <= n; ++k)
            for (int j = 1; j <= n; ++j)
                sys.at(static_cast<std::size_t>(i - 1) * n + (k - 1), j - 1) = g.c(j, i, k);
    return kernel(sys);
}

HParData hPar(const DoubleComplex& k, const LieAlgebraSpec& g, const PolyVectorSpace& pv) {
    HParData out;
    Subspace h01 = kernel(k.dbar(0, 1));
    Subspace z = centre(g);
    out.h01Dim = h01.dim();
    out.centreDim = z.dim();
    int n = k.n();
    for (std::size_t a = 0; a < h01.dim(); ++a)
        for (std::size_t b = 0; b < z.dim(); ++b) {
            Vec lambda = h01.basisVec(a); // coordinates over phibar_1..phibar_n
            Vec zc = z.basisVec(b);       // coordinates over theta_1..theta_n
            Vec theta(pv.dim());
            for (int l = 1; l <= n; ++l)
                for (int i = 1; i <= n; ++i) {
                    if (lambda[l - 1].isZero() || zc[i - 1].isZero()) continue;
                    theta = addVec(theta, scaleVec(lambda[l - 1] * zc[i - 1], pv.basisVector(l, i)));
                }
            out.basis.push_back(std::move(theta));
        }
    return out;
}

bool parallelisableDirection(const LieAlgebraSpec& g, const PolyVectorSpace& pv, const Vec& mu) {
    int n = g.dim();
    // mu(thetabar_lambda) = sum_i m_{lambda i} theta_i from polyvector coordinates
    for (int j = 1; j <= n; ++j)
        for (int lambda = 1; lambda <= n; ++lambda)
            for (int k = 1; k <= n; ++k) {
                GaussianRational s;
                for (std::size_t idx = 0; idx < pv.dim(); ++idx) {
                    const auto& e = pv.element(idx);
                    if (e.barIdx != lambda || mu[idx].isZero()) continue;
                    s += mu[idx] * g.c(j, e.vecIdx, k);
                }
                if (!s.isZero()) return false;
            }
    return true;
}

AlphaCheckReport alphaIsomorphismCheck(const LieAlgebraSpec& g, const PolyVectorSpace& pv, const Vec& mu) {
    AlphaCheckReport rep;
    int n = g.dim();
    // complexified basis: theta_1..theta_n, thetabar_1..thetabar_n (indices 0..2n-1)
    // alpha(thetabar_l) = thetabar_l + sum_i m_{l i} theta_i
    // alpha(theta_l)    = theta_l + sum_i conj(m_{l i}) thetabar_i
    Matrix m(n, n); // m(l-1, i-1) = coefficient of theta_i in mu(thetabar_l)
    for (std::size_t idx = 0; idx < pv.dim(); ++idx) {
        const auto& e = pv.element(idx);
        if (mu[idx].isZero()) continue;
        m.at(e.barIdx - 1, e.vecIdx - 1) += mu[idx];
    }
    auto bracket = [&](const Vec& x, const Vec& y) {
        // bracket on g_C: [theta_i,theta_j] = sum c(i,j,k) theta_k,
        // [thetabar_i,thetabar_j] = sum conj(c(i,j,k)) thetabar_k, mixed = 0
        Vec out(2 * n);
        for (int i = 1; i <= n; ++i)
            for (int j = 1; j <= n; ++j) {
                if (i == j) continue;
                GaussianRational holo = x[i - 1] * y[j - 1];
                GaussianRational anti = x[n + i - 1] * y[n + j - 1];
                if (holo.isZero() && anti.isZero()) continue;
                for (int k = 1; k <= n; ++k) {
                    GaussianRational c = g.c(i, j, k);
                    if (c.isZero()) continue;
                    out[k - 1] += holo * c;
                    out[n + k - 1] += anti * c.conj();
                }
            }
        return out;
    };
    auto alpha = [&](const Vec& x) {
        Vec out = x;
        for (int l = 1; l <= n; ++l)
            for (int i = 1; i <= n; ++i) {
                const GaussianRational& c = m.at(l - 1, i - 1);
                if (c.isZero()) continue;
                out[i - 1] += c * x[n + l - 1];            // mu on the (0,1) part
                out[n + i - 1] += c.conj() * x[l - 1];     // mubar on the (1,0) part
            }
        return out;
    };
    rep.isomorphism = true;
    for (int a = 0; a < 2 * n && rep.isomorphism; ++a)
        for (int b = a + 1; b < 2 * n && rep.isomorphism; ++b) {
            Vec ea(2 * n), eb(2 * n);
            ea[a] = GaussianRational(1);
            eb[b] = GaussianRational(1);
            Vec lhs = bracket(alpha(ea), alpha(eb));
            Vec rhs = alpha(bracket(ea, eb));
            if (!(lhs == rhs)) {
                rep.isomorphism = false;
                auto name = [&](int idx) {
                    return idx < n ? "θ_" + std::to_string(idx + 1)
                                   : "θ̄_" + std::to_string(idx - n + 1);
                };
                rep.failureWitness = "[α(" + name(a) + "), α(" + name(b) +
                                     ")] ≠ α([" + name(a) + ", " + name(b) + "])";
            }
        }
    return rep;
}

} // namespace fss
