#pragma once

#include "fss/builders.hpp"

#include <stdexcept>
#include <string>

namespace fss {

/// Malformed input document (distinct from mathematical validation failures).
struct FormatError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct ModelDocument {
    DoubleComplex complex;
    std::string kind;
    std::string sourcePath;
    std::string contentHash; // FNV-1a 64 of the file bytes, hex
};

ModelDocument loadModelFile(const std::string& path);
ModelDocument loadModelJson(const std::string& jsonText, const std::string& pathForDiagnostics);

std::string fnv1a64(const std::string& bytes);

} // namespace fss
