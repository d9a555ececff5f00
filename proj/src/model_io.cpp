#include "fss/model_io.hpp"

#include <json.hpp>

#include <cstdint>
#include <cstdio>
#include <fstream>
#include <sstream>

namespace fss {

using nlohmann::json;

namespace {

GaussianRational parseGaussian(const json& j, const char* where) {
    try {
        if (j.is_string()) return GaussianRational(GaussianRational::parseRat(j.get<std::string>()));
        if (j.is_number_integer()) return GaussianRational(j.get<long>());
        if (j.is_array() && j.size() == 2)
            return GaussianRational(GaussianRational::parseRat(j[0].get<std::string>()),
                                    GaussianRational::parseRat(j[1].get<std::string>()));
    } catch (const std::exception& e) {
        throw FormatError(std::string(where) + ": " + e.what());
    }
    throw FormatError(std::string(where) + ": expected \"p/q\" or [\"p/q\",\"r/s\"]");
}

IdxSet parseIdxSet(const json& j, int n, const char* where) {
    IdxSet s;
    for (const auto& x : j) {
        int v = x.get<int>();
        if (v < 1 || v > n) throw FormatError(std::string(where) + ": index out of range");
        s.push_back(v);
    }
    for (std::size_t i = 1; i < s.size(); ++i)
        if (s[i] <= s[i - 1]) throw FormatError(std::string(where) + ": indices must increase");
    return s;
}

Weight parseWeight(const json& j, const char* where) {
    if (!j.is_array() || j.size() != 2) throw FormatError(std::string(where) + ": weight must be [a,b]");
    return Weight{j[0].get<int>(), j[1].get<int>()};
}

Matrix parseMatrix(const json& j, std::size_t rows, std::size_t cols, const char* where) {
    if (!j.is_array() || j.size() != rows) throw FormatError(std::string(where) + ": row count");
    Matrix m(rows, cols);
    for (std::size_t i = 0; i < rows; ++i) {
        if (!j[i].is_array() || j[i].size() != cols)
            throw FormatError(std::string(where) + ": column count");
        for (std::size_t c = 0; c < cols; ++c) m.at(i, c) = parseGaussian(j[i][c], where);
    }
    return m;
}

DoubleComplex buildLieAlgebra(const json& doc) {
    int n = doc.at("dim").get<int>();
    if (n < 1 || n > 8) throw FormatError("lie_algebra: dim out of supported range");
    LieAlgebraSpec g(n);
    for (const auto& br : doc.value("brackets", json::array())) {
        int i = br.at("i").get<int>(), j = br.at("j").get<int>();
        Vec coeffs(n);
        for (const auto& [ks, v] : br.at("coeffs").items()) {
            int k = std::stoi(ks);
            if (k < 1 || k > n) throw FormatError("lie_algebra: bracket target out of range");
            coeffs[k - 1] = parseGaussian(v, "lie_algebra.coeffs");
        }
        g.setBracket(i, j, coeffs);
    }
    try {
        return buildCeComplex(g, doc.value("name", "model"));
    } catch (const std::invalid_argument& e) {
        throw FormatError(e.what());
    }
}

DoubleComplex buildWeighted(const json& doc) {
    WeightedModelSpec spec;
    spec.n = doc.at("dim").get<int>();
    spec.name = doc.value("name", "model");
    for (const auto& gj : doc.at("generators")) {
        Generator g;
        g.w = parseWeight(gj.at("w"), "weighted.generators");
        g.I = parseIdxSet(gj.at("I"), spec.n, "weighted.generators.I");
        g.J = parseIdxSet(gj.at("J"), spec.n, "weighted.generators.J");
        spec.generators.push_back(std::move(g));
    }
    for (const auto& cj : doc.value("conjugation", json::array())) {
        Weight from = parseWeight(cj.at("from"), "weighted.conjugation");
        Weight to = parseWeight(cj.at("to"), "weighted.conjugation");
        spec.conjWeight[from] = to;
    }
    for (const auto& rj : doc.value("extra_rules", json::array())) {
        WeightedRule r;
        r.src.w = parseWeight(rj.at("src_w"), "weighted.extra_rules");
        r.src.I = parseIdxSet(rj.at("src_I"), spec.n, "weighted.extra_rules");
        r.src.J = parseIdxSet(rj.at("src_J"), spec.n, "weighted.extra_rules");
        r.dst.w = parseWeight(rj.at("dst_w"), "weighted.extra_rules");
        r.dst.I = parseIdxSet(rj.at("dst_I"), spec.n, "weighted.extra_rules");
        r.dst.J = parseIdxSet(rj.at("dst_J"), spec.n, "weighted.extra_rules");
        r.coeff = parseGaussian(rj.at("coeff"), "weighted.extra_rules");
        r.onDel = rj.value("op", "del") == "del";
        spec.extraRules.push_back(std::move(r));
    }
    try {
        return buildWeightedComplex(spec);
    } catch (const std::invalid_argument& e) {
        throw FormatError(e.what());
    }
}

DoubleComplex buildExplicit(const json& doc) {
    ExplicitSpec spec;
    spec.n = doc.at("dim").get<int>();
    spec.name = doc.value("name", "model");
    const auto& dj = doc.at("dims");
    if (!dj.is_array() || static_cast<int>(dj.size()) != spec.n + 1)
        throw FormatError("explicit: dims must be an (n+1)x(n+1) table");
    spec.dims.assign(spec.n + 1, std::vector<std::size_t>(spec.n + 1, 0));
    for (int p = 0; p <= spec.n; ++p) {
        if (static_cast<int>(dj[p].size()) != spec.n + 1)
            throw FormatError("explicit: dims must be an (n+1)x(n+1) table");
        for (int q = 0; q <= spec.n; ++q) spec.dims[p][q] = dj[p][q].get<std::size_t>();
    }
    auto parseSlotKey = [&](const std::string& s) {
        auto comma = s.find(',');
        if (comma == std::string::npos) throw FormatError("explicit: slot keys are \"p,q\"");
        int p = std::stoi(s.substr(0, comma)), q = std::stoi(s.substr(comma + 1));
        if (p < 0 || p > spec.n || q < 0 || q > spec.n) throw FormatError("explicit: slot out of range");
        return std::make_pair(p, q);
    };
    auto dimAt = [&](int p, int q) -> std::size_t {
        if (p < 0 || p > spec.n || q < 0 || q > spec.n) return 0;
        return spec.dims[p][q];
    };
    for (const auto& [key, mj] : doc.value("labels", json::object()).items()) {
        auto [p, q] = parseSlotKey(key);
        spec.labels[{p, q}] = mj.get<std::vector<std::string>>();
    }
    for (const auto& [key, mj] : doc.value("del", json::object()).items()) {
        auto [p, q] = parseSlotKey(key);
        spec.del[{p, q}] = parseMatrix(mj, dimAt(p + 1, q), dimAt(p, q), "explicit.del");
    }
    for (const auto& [key, mj] : doc.value("dbar", json::object()).items()) {
        auto [p, q] = parseSlotKey(key);
        spec.dbar[{p, q}] = parseMatrix(mj, dimAt(p, q + 1), dimAt(p, q), "explicit.dbar");
    }
    if (doc.contains("conj")) {
        spec.hasConj = true;
        for (const auto& [key, mj] : doc.at("conj").items()) {
            auto [p, q] = parseSlotKey(key);
            spec.conj[{p, q}] = parseMatrix(mj, dimAt(q, p), dimAt(p, q), "explicit.conj");
        }
    }
    for (const auto& [key, mj] : doc.value("gram", json::object()).items()) {
        auto [p, q] = parseSlotKey(key);
        spec.gram[{p, q}] = parseMatrix(mj, dimAt(p, q), dimAt(p, q), "explicit.gram");
    }
    try {
        return buildExplicitComplex(spec);
    } catch (const std::invalid_argument& e) {
        throw FormatError(e.what());
    }
}

} // namespace

std::string fnv1a64(const std::string& bytes) {
    std::uint64_t h = 1469598103934665603ull;
    for (unsigned char c : bytes) {
        h ^= c;
        h *= 1099511628211ull;
    }
    char buf[17];
    std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
    return buf;
}

ModelDocument loadModelJson(const std::string& text, const std::string& path) {
    json doc;
    try {
        doc = json::parse(text);
    } catch (const json::parse_error& e) {
        throw FormatError("JSON parse error in " + path + ": " + e.what());
    }
    std::string kind;
    try {
        kind = doc.at("kind").get<std::string>();
        DoubleComplex k = kind == "lie_algebra"     ? buildLieAlgebra(doc)
                          : kind == "weighted_model" ? buildWeighted(doc)
                          : kind == "explicit"       ? buildExplicit(doc)
                                                     : throw FormatError("unknown kind: " + kind);
        return ModelDocument{std::move(k), kind, path, fnv1a64(text)};
    } catch (const json::exception& e) {
        throw FormatError("bad model document " + path + ": " + e.what());
    }
}

ModelDocument loadModelFile(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw FormatError("cannot open " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return loadModelJson(ss.str(), path);
}

} // namespace fss
