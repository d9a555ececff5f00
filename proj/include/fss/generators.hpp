#pragma once

#include <vector>
#include <string>
#include <optional>
#include <cstdint>

namespace fss {

/// Exponent pair (a,b) of the scalar factor e^{a z1 + b zbar1} carried by a
/// basis monomial; (0,0) for unweighted (Lie-algebra) models.
struct Weight {
    int a = 0;
    int b = 0;
    friend bool operator==(const Weight&, const Weight&) = default;
    friend auto operator<=>(const Weight&, const Weight&) = default;
    Weight operator+(const Weight& o) const { return {a + o.a, b + o.b}; }
    /// conjugating e^{a z1 + b zbar1} swaps the exponents
    Weight conj() const { return {b, a}; }
};

using IdxSet = std::vector<int>; // strictly increasing 1-based indices

/// Basis monomial e^{w} dz_I wedge dzbar_J (resp. phi_I wedge phibar_J).
struct Generator {
    Weight w;
    IdxSet I, J;
    friend bool operator==(const Generator&, const Generator&) = default;
    /// basis order: weights first, then lexicographic on (I, J)
    friend auto operator<=>(const Generator&, const Generator&) = default;
};

/// sign of inserting idx in front of the sorted list, counted by transpositions;
/// nullopt if idx already present.
std::optional<std::pair<int, IdxSet>> wedgeInsert(const IdxSet& s, int idx);
/// sign of extracting idx out of the front of the sorted list;
/// nullopt if idx absent.
std::optional<std::pair<int, IdxSet>> wedgeRemove(const IdxSet& s, int idx);
/// sign of merging a wedge b into sorted order; nullopt on a repeated index.
std::optional<std::pair<int, IdxSet>> wedgeMerge(const IdxSet& a, const IdxSet& b);

std::vector<IdxSet> subsetsOfSize(int n, int k);

enum class LabelStyle : std::uint8_t { Phi, Dz };

std::string generatorLabel(const Generator& g, LabelStyle style);

} // namespace fss
