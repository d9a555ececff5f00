#include "fss/report.hpp"

#include <iomanip>
#include <sstream>

namespace fss {

using nlohmann::json;

Engine::Engine(ModelDocument doc) : doc_(std::move(doc)) {
    spec_ = std::make_unique<SpectralCache>(doc_.complex);
    hodge_ = std::make_unique<HodgeContext>(*spec_);
}

bool Engine::hasCyStructure() const {
    const DoubleComplex& k = doc_.complex;
    return k.hasMonomials() && k.dim(k.n(), 0) == 1 &&
           k.generators(k.n(), 0)[0].w == Weight{0, 0};
}

DeformationCalculus& Engine::deformation() {
    if (!defc_) {
        if (!hasCyStructure())
            throw std::invalid_argument("model has no Calabi-Yau contraction structure");
        defc_ = std::make_unique<DeformationCalculus>(*spec_);
    }
    return *defc_;
}

KuranishiIterator& Engine::kuranishi() {
    if (!kur_) kur_ = std::make_unique<KuranishiIterator>(hodge(), deformation());
    return *kur_;
}

json gaussianJson(const GaussianRational& g) {
    return json::array({GaussianRational::ratStr(g.re()), GaussianRational::ratStr(g.im())});
}

json vecJson(const Vec& v) {
    json a = json::array();
    for (const auto& x : v) a.push_back(gaussianJson(x));
    return a;
}

json wrapReport(const Engine& e, const std::string& command, const json& params,
                const json& payload) {
    return json{{"model", {{"path", e.doc().sourcePath}, {"hash", e.doc().contentHash}}},
                {"command", command},
                {"params", params},
                {"engine", "fss 0.1.0"},
                {"payload", payload}};
}

json reportValidate(Engine& e) {
    ValidationReport rep = e.complex().validate();
    json v = json::array();
    for (const auto& viol : rep.violations)
        v.push_back({{"identity", viol.identity}, {"p", viol.p}, {"q", viol.q}});
    return json{{"ok", rep.ok()},
                {"violations", v},
                {"n", e.complex().n()},
                {"total_dim", e.complex().totalDim()}};
}

namespace {

json dimGrid(Engine& e, int r) {
    int n = e.complex().n();
    json grid = json::array();
    for (int p = 0; p <= n; ++p) {
        json row = json::array();
        for (int q = 0; q <= n; ++q) row.push_back(e.spectral().page(r, p, q).dim);
        grid.push_back(row);
    }
    return grid;
}

} // namespace

json reportPages(Engine& e, int maxPage) {
    int degen = e.spectral().degenerationPage();
    int top = std::min(maxPage, degen + 1);
    json pages = json::array();
    for (int r = 1; r <= top; ++r) pages.push_back({{"r", r}, {"dims", dimGrid(e, r)}});
    return json{{"betti", e.spectral().deRham().betti},
                {"degeneration_page", degen},
                {"pages", pages}};
}

json reportCheck(Engine& e, int page) {
    PageDdbarReport rep = e.spectral().pageDdbar(page);
    if (!rep.internalConsistent)
        throw std::logic_error("page_ddbar: conditions (5) and (6) disagree (engine bug)");
    return json{{"page", page},
                {"property", "page-" + std::to_string(page - 1) + "-ddbar"},
                {"holds", rep.holds},
                {"condition_dims_equal", rep.holds},
                {"condition_bc_to_a_injective", rep.mapInjective},
                {"degenerates_by_page", rep.degeneratesByR},
                {"bc_dims", rep.bcDims},
                {"a_dims", rep.aDims}};
}

json reportBca(Engine& e, int page) {
    int n = e.complex().n();
    json bc = json::array(), a = json::array();
    for (int p = 0; p <= n; ++p) {
        json rowBc = json::array(), rowA = json::array();
        for (int q = 0; q <= n; ++q) {
            rowBc.push_back(e.spectral().bc(page, p, q).dim);
            rowA.push_back(e.spectral().aeppli(page, p, q).dim);
        }
        bc.push_back(rowBc);
        a.push_back(rowA);
    }
    json payload{{"r", page}, {"bc_dims", bc}, {"a_dims", a}};
    payload["check"] = reportCheck(e, page);
    return payload;
}

json reportEssential(Engine& e) {
    const DoubleComplex& k = e.complex();
    int n = k.n();
    PageDdbarReport prop = e.spectral().pageDdbar(2);
    json payload;
    payload["page1_ddbar"] = prop.holds;
    if (!prop.holds) {
        payload["error"] = "model is not page-1-ddbar; the omega-lift is not defined";
        return payload;
    }
    const auto& labels = k.labels(n - 1, 1);
    const PageData& e2 = e.spectral().page(2, n - 1, 1);
    json classes = json::array();
    Matrix jmat = e.hodge().omegaLift(n - 1, 1);
    for (std::size_t j = 0; j < e2.dim; ++j) {
        Vec cls(e2.dim);
        cls[j] = GaussianRational(1);
        LiftResult lift = e.hodge().dClosedRep(n - 1, 1, cls);
        classes.push_back({{"e2_index", j},
                           {"harmonic_rep", linearComboLabel(lift.harmonicRep, labels)},
                           {"correction", linearComboLabel(lift.correction, k.labels(n - 1, 0))},
                           {"lifted_rep", linearComboLabel(lift.liftedRep, labels)},
                           {"lifted_class", vecJson(lift.liftedClass)}});
    }
    payload["dim"] = e2.dim;
    payload["classes"] = classes;
    json jm = json::array();
    for (std::size_t i = 0; i < jmat.rows(); ++i) {
        json row = json::array();
        for (std::size_t j = 0; j < jmat.cols(); ++j) row.push_back(gaussianJson(jmat.at(i, j)));
        jm.push_back(row);
    }
    payload["omega_lift"] = jm;
    return payload;
}

json reportCondition11(Engine& e) {
    auto suite = e.deformation().condition11Suite();
    const DoubleComplex& k = e.complex();
    int n = k.n();
    json cells = json::array();
    for (const auto& c : suite.cells) {
        json cell{{"left", c.left}, {"right", c.right}, {"ok", c.ok}};
        if (!c.ok)
            cell["d_obstruction"] = linearComboLabel(c.dObstruction, k.labels(n - 1, 2));
        cells.push_back(cell);
    }
    return json{{"spanning_labels", suite.labels},
                {"ker_d_count", suite.kerCount},
                {"cells", cells},
                {"all_ok", suite.allOk()}};
}

json reportKuranishi(Engine& e, KuranishiMode mode, int order, const std::vector<int>& directions) {
    KuranishiResult res = e.kuranishi().run(mode, order, directions);
    const DoubleComplex& k = e.complex();
    int n = k.n();
    json dirs = json::array();
    for (const auto& d : res.directions)
        dirs.push_back({{"label", d.label}, {"admissible", d.admissible}});
    json orders = json::array();
    for (int nu = 2; nu <= order; ++nu) {
        std::map<std::string, int> counts;
        json nonSolved = json::array();
        for (const auto& st : res.statuses) {
            if (static_cast<int>(st.m.degree()) != nu) continue;
            counts[solveStatusName(st.status)]++;
            if (st.status != SolveStatus::SchemeSolved)
                nonSolved.push_back({{"monomial", st.m.str()}, {"status", solveStatusName(st.status)}});
        }
        orders.push_back({{"nu", nu}, {"statuses", counts}, {"exceptional", nonSolved}});
        if (res.obstruction && res.obstruction->order == nu) break;
    }
    json payload{{"mode", mode == KuranishiMode::Full ? "full" : "essential"},
                 {"order", order},
                 {"directions", dirs},
                 {"orders", orders},
                 {"obstructed", res.obstructed()},
                 {"replay_ok", e.kuranishi().verifyReplay(res)}};
    if (res.obstruction) {
        payload["obstruction"] = {
            {"order", res.obstruction->order},
            {"monomial", res.obstruction->monomial.str()},
            {"rhs", linearComboLabel(res.obstruction->rhs, k.labels(n - 1, 2))},
            {"e1_class", vecJson(res.obstruction->e1Class)}};
    }
    return payload;
}

namespace {

std::string grid(const json& dims) {
    std::ostringstream os;
    for (const auto& row : dims) {
        os << "  ";
        for (const auto& v : row) os << std::setw(5) << v.get<std::size_t>();
        os << "\n";
    }
    return os.str();
}

} // namespace

std::string renderValidateText(const json& p) {
    std::ostringstream os;
    os << (p["ok"].get<bool>() ? "valid" : "INVALID") << " (n=" << p["n"]
       << ", total dim " << p["total_dim"] << ")\n";
    for (const auto& v : p["violations"])
        os << "  violated: " << v["identity"].get<std::string>() << " at (" << v["p"] << ","
           << v["q"] << ")\n";
    return os.str();
}

std::string renderPagesText(const json& p) {
    std::ostringstream os;
    os << "betti:";
    for (const auto& b : p["betti"]) os << " " << b;
    os << "\ndegeneration page: " << p["degeneration_page"] << "\n";
    for (const auto& page : p["pages"]) {
        os << "E_" << page["r"] << " dims (p down, q across):\n" << grid(page["dims"]);
    }
    return os.str();
}

std::string renderCheckText(const json& p) {
    std::ostringstream os;
    os << p["property"].get<std::string>() << ": " << (p["holds"].get<bool>() ? "true" : "false")
       << "\n";
    os << "  dim E_" << p["page"] << ",BC per degree:";
    for (const auto& v : p["bc_dims"]) os << " " << v;
    os << "\n  dim E_" << p["page"] << ",A  per degree:";
    for (const auto& v : p["a_dims"]) os << " " << v;
    os << "\n  conditions: dims-equal=" << (p["condition_dims_equal"].get<bool>() ? "yes" : "no")
       << ", BC->A injective=" << (p["condition_bc_to_a_injective"].get<bool>() ? "yes" : "no")
       << ", degenerates-by-page=" << (p["degenerates_by_page"].get<bool>() ? "yes" : "no") << "\n";
    return os.str();
}

std::string renderBcaText(const json& p) {
    std::ostringstream os;
    os << "E_" << p["r"] << "-Bott-Chern dims:\n"
       << grid(p["bc_dims"]) << "E_" << p["r"] << "-Aeppli dims:\n"
       << grid(p["a_dims"]);
    os << renderCheckText(p["check"]);
    return os.str();
}

std::string renderEssentialText(const json& p) {
    std::ostringstream os;
    if (!p["page1_ddbar"].get<bool>()) {
        os << "not page-1-ddbar: " << p["error"].get<std::string>() << "\n";
        return os.str();
    }
    os << "essential space dimension: " << p["dim"] << "\n";
    for (const auto& c : p["classes"]) {
        os << "  [" << c["e2_index"] << "] harmonic: " << c["harmonic_rep"].get<std::string>()
           << "\n      correction: " << c["correction"].get<std::string>()
           << "\n      lifted:     " << c["lifted_rep"].get<std::string>() << "\n";
    }
    return os.str();
}

std::string renderCondition11Text(const json& p) {
    std::ostringstream os;
    std::size_t m = p["spanning_labels"].size();
    os << "spanning set (" << p["ker_d_count"].get<std::size_t>() << " from ker d, "
       << m - p["ker_d_count"].get<std::size_t>() << " from Im del):\n";
    std::size_t i = 0;
    for (const auto& l : p["spanning_labels"]) os << "  [" << i++ << "] " << l.get<std::string>() << "\n";
    os << "pair matrix (rows x cols, '.' = ok, 'X' = fails):\n";
    std::vector<std::string> rows(m, std::string(m, '.'));
    for (const auto& c : p["cells"])
        if (!c["ok"].get<bool>()) rows[c["left"].get<std::size_t>()][c["right"].get<std::size_t>()] = 'X';
    for (const auto& r : rows) os << "  " << r << "\n";
    for (const auto& c : p["cells"])
        if (!c["ok"].get<bool>())
            os << "  witness (" << c["left"] << "," << c["right"]
               << "): d-obstruction = " << c["d_obstruction"].get<std::string>() << "\n";
    os << (p["all_ok"].get<bool>() ? "all pairs satisfy the hypothesis\n"
                                   : "hypothesis FAILS for the marked pairs\n");
    return os.str();
}

std::string renderKuranishiText(const json& p) {
    std::ostringstream os;
    os << "mode " << p["mode"].get<std::string>() << ", order " << p["order"] << ", "
       << p["directions"].size() << " directions\n";
    for (const auto& d : p["directions"])
        os << "  dir: " << d["label"].get<std::string>()
           << (d["admissible"].get<bool>() ? "" : "  [not admissible for the scheme]") << "\n";
    for (const auto& o : p["orders"]) {
        os << "order " << o["nu"] << ":";
        for (const auto& [k, v] : o["statuses"].items()) os << " " << k << "=" << v;
        os << "\n";
    }
    os << "replay identity: " << (p["replay_ok"].get<bool>() ? "holds" : "FAILS") << "\n";
    if (p["obstructed"].get<bool>()) {
        const auto& ob = p["obstruction"];
        os << "OBSTRUCTED at order " << ob["order"] << ", monomial " << ob["monomial"].get<std::string>()
           << "\n  rhs = " << ob["rhs"].get<std::string>() << "\n";
    } else {
        os << "unobstructed through order " << p["order"] << "\n";
    }
    return os.str();
}

} // namespace fss
