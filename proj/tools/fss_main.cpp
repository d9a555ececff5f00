#include "fss/report.hpp"

#include <CLI11.hpp>

#include <chrono>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <optional>
#include <sstream>

namespace {

constexpr int kExitOk = 0;
constexpr int kExitFail = 1;        // validation / page-property failure
constexpr int kExitObstructed = 2;  // only with --fail-on-obstruction
constexpr int kExitFormat = 64;     // unusable input

struct Output {
    bool asJson = false;

    void emit(const nlohmann::json& report, const std::string& text) const {
        if (asJson)
            std::cout << report.dump(2) << "\n";
        else
            std::cout << text;
    }
};

/// optional on-disk memo of full JSON reports, keyed by content hash +
/// command + params; enabled through FSS_CACHE_DIR
class ReportCache {
public:
    ReportCache() {
        if (const char* dir = std::getenv("FSS_CACHE_DIR")) dir_ = dir;
    }
    bool enabled() const { return !dir_.empty(); }

    std::string keyFor(const fss::Engine& e, const std::string& command,
                       const nlohmann::json& params) const {
        return fss::fnv1a64(e.doc().contentHash + "|" + command + "|" + params.dump());
    }
    std::optional<nlohmann::json> load(const std::string& key) const {
        std::ifstream in(dir_ + "/" + key + ".json");
        if (!in) return std::nullopt;
        try {
            return nlohmann::json::parse(in);
        } catch (...) {
            return std::nullopt;
        }
    }
    void store(const std::string& key, const nlohmann::json& report) const {
        std::filesystem::create_directories(dir_);
        std::ofstream out(dir_ + "/" + key + ".json");
        out << report.dump(2) << "\n";
    }

private:
    std::string dir_;
};

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact higher-page cohomology and deformation calculator for finite double complexes"};
    app.require_subcommand(1);

    Output out;
    std::string file;
    int maxPage = 0, page = 2, order = 4;
    std::string mode = "full", directionsArg;
    bool failOnObstruction = false;

    auto addCommon = [&](CLI::App* sub) {
        sub->add_option("file", file, "model document (JSON)")->required();
        sub->add_flag("--json", out.asJson, "machine-readable canonical JSON report");
    };

    CLI::App* validate = app.add_subcommand("validate", "check the double-complex axioms");
    addCommon(validate);
    CLI::App* pages = app.add_subcommand("pages", "spectral-sequence page dimensions and Betti numbers");
    addCommon(pages);
    pages->add_option("--max-page", maxPage, "highest page to print (default: degeneration+1)");
    CLI::App* check = app.add_subcommand("check", "decide the page-(r-1)-ddbar property at page r");
    addCommon(check);
    check->add_option("--page", page, "page r of the BC/A comparison (default 2)");
    CLI::App* bca = app.add_subcommand("bca", "higher-page Bott-Chern and Aeppli dimension tables");
    addCommon(bca);
    bca->add_option("--page", page, "page r (default 2)");
    CLI::App* essential = app.add_subcommand("essential", "omega-lift and essential deformation space");
    addCommon(essential);
    CLI::App* cond11 = app.add_subcommand("condition11", "pairwise double-contraction hypothesis matrix");
    addCommon(cond11);
    CLI::App* kuranishi = app.add_subcommand("kuranishi", "order-by-order integrability iteration");
    addCommon(kuranishi);
    kuranishi->add_option("--order", order, "truncation order (default 4)");
    kuranishi->add_option("--mode", mode, "full | essential")->check(CLI::IsMember({"full", "essential"}));
    kuranishi->add_option("--directions", directionsArg, "comma-separated direction indices");
    kuranishi->add_flag("--fail-on-obstruction", failOnObstruction, "exit 2 when obstructed");

    CLI11_PARSE(app, argc, argv);

    try {
        auto t0 = std::chrono::steady_clock::now();
        fss::Engine engine(fss::loadModelFile(file));
        ReportCache cache;

        auto finish = [&](const std::string& command, const nlohmann::json& params,
                          const nlohmann::json& payload,
                          const std::function<std::string(const nlohmann::json&)>& render,
                          int exitCode) {
            nlohmann::json report = fss::wrapReport(engine, command, params, payload);
            if (cache.enabled()) cache.store(cache.keyFor(engine, command, params), report);
            out.emit(report, render(payload));
            auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                          std::chrono::steady_clock::now() - t0)
                          .count();
            std::cerr << "[fss] " << command << " on " << file << " took " << ms << " ms\n";
            return exitCode;
        };

        auto cached = [&](const std::string& command, const nlohmann::json& params)
            -> std::optional<nlohmann::json> {
            if (!cache.enabled()) return std::nullopt;
            return cache.load(cache.keyFor(engine, command, params));
        };

        if (*validate) {
            nlohmann::json payload = fss::reportValidate(engine);
            return finish("validate", {}, payload, fss::renderValidateText,
                          payload["ok"].get<bool>() ? kExitOk : kExitFail);
        }
        if (*pages) {
            nlohmann::json params{{"max_page", maxPage}};
            if (auto hit = cached("pages", params)) {
                out.emit(*hit, fss::renderPagesText((*hit)["payload"]));
                return kExitOk;
            }
            int degen = engine.spectral().degenerationPage();
            int top = maxPage > 0 ? maxPage : degen + 1;
            return finish("pages", params, fss::reportPages(engine, top), fss::renderPagesText,
                          kExitOk);
        }
        if (*check) {
            nlohmann::json params{{"page", page}};
            nlohmann::json payload = fss::reportCheck(engine, page);
            return finish("check", params, payload, fss::renderCheckText,
                          payload["holds"].get<bool>() ? kExitOk : kExitFail);
        }
        if (*bca) {
            nlohmann::json params{{"page", page}};
            return finish("bca", params, fss::reportBca(engine, page), fss::renderBcaText, kExitOk);
        }
        if (*essential) {
            nlohmann::json payload = fss::reportEssential(engine);
            return finish("essential", {}, payload, fss::renderEssentialText,
                          payload["page1_ddbar"].get<bool>() ? kExitOk : kExitFail);
        }
        if (*cond11) {
            return finish("condition11", {}, fss::reportCondition11(engine),
                          fss::renderCondition11Text, kExitOk);
        }
        if (*kuranishi) {
            std::vector<int> dirs;
            if (!directionsArg.empty()) {
                std::stringstream ss(directionsArg);
                std::string tok;
                while (std::getline(ss, tok, ',')) dirs.push_back(std::stoi(tok));
            }
            nlohmann::json params{{"order", order},
                                  {"mode", mode},
                                  {"directions", dirs},
                                  {"fail_on_obstruction", failOnObstruction}};
            nlohmann::json payload = fss::reportKuranishi(
                engine, mode == "full" ? fss::KuranishiMode::Full : fss::KuranishiMode::Essential,
                order, dirs);
            int code = kExitOk;
            if (payload["obstructed"].get<bool>() && failOnObstruction) code = kExitObstructed;
            return finish("kuranishi", params, payload, fss::renderKuranishiText, code);
        }
    } catch (const fss::FormatError& e) {
        std::cerr << "format error: " << e.what() << "\n";
        return kExitFormat;
    } catch (const fss::SolvabilityError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitFail;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitFail;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return 70;
    }
    return kExitOk;
}
