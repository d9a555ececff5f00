#pragma once

#include "fss/kuranishi.hpp"
#include "fss/model_io.hpp"

#include <json.hpp>

#include <memory>

namespace fss {

/// One loaded model with its lazily shared computation caches.
class Engine {
public:
    explicit Engine(ModelDocument doc);

    const ModelDocument& doc() const { return doc_; }
    const DoubleComplex& complex() const { return doc_.complex; }
    SpectralCache& spectral() { return *spec_; }
    HodgeContext& hodge() { return *hodge_; }
    /// throws when the model carries no monomial/CY structure
    DeformationCalculus& deformation();
    KuranishiIterator& kuranishi();

    bool hasCyStructure() const;

private:
    ModelDocument doc_;
    std::unique_ptr<SpectralCache> spec_;
    std::unique_ptr<HodgeContext> hodge_;
    std::unique_ptr<DeformationCalculus> defc_;
    std::unique_ptr<KuranishiIterator> kur_;
};

// canonical payloads (deterministic serialization: sorted keys, "p/q" strings)
nlohmann::json reportValidate(Engine& e);
nlohmann::json reportPages(Engine& e, int maxPage);
nlohmann::json reportCheck(Engine& e, int page);
nlohmann::json reportBca(Engine& e, int page);
nlohmann::json reportEssential(Engine& e);
nlohmann::json reportCondition11(Engine& e);
nlohmann::json reportKuranishi(Engine& e, KuranishiMode mode, int order,
                               const std::vector<int>& directions);

/// full run report around a payload: model identity, command, parameters
nlohmann::json wrapReport(const Engine& e, const std::string& command,
                          const nlohmann::json& params, const nlohmann::json& payload);

// plain-text rendering for the terminal
std::string renderPagesText(const nlohmann::json& payload);
std::string renderCheckText(const nlohmann::json& payload);
std::string renderBcaText(const nlohmann::json& payload);
std::string renderValidateText(const nlohmann::json& payload);
std::string renderEssentialText(const nlohmann::json& payload);
std::string renderCondition11Text(const nlohmann::json& payload);
std::string renderKuranishiText(const nlohmann::json& payload);

nlohmann::json gaussianJson(const GaussianRational& g);
nlohmann::json vecJson(const Vec& v);

} // namespace fss
