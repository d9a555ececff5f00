#include "fss/generators.hpp"

#include <algorithm>

namespace fss {

std::optional<std::pair<int, IdxSet>> wedgeInsert(const IdxSet& s, int idx) {
    IdxSet out;
    out.reserve(s.size() + 1);
    int sign = 1;
    bool placed = false;
    for (int x : s) {
        if (x == idx) return std::nullopt;
        if (!placed && x > idx) {
            out.push_back(idx);
            placed = true;
        }
        if (!placed) sign = -sign;
        out.push_back(x);
    }
    if (!placed) out.push_back(idx);
    return std::make_pair(sign, std::move(out));
}

std::optional<std::pair<int, IdxSet>> wedgeRemove(const IdxSet& s, int idx) {
    IdxSet out;
    out.reserve(s.size());
    int sign = 1;
    bool found = false;
    for (int x : s) {
        if (x == idx) {
            found = true;
            continue;
        }
        if (!found) sign = -sign;
        out.push_back(x);
    }
    if (!found) return std::nullopt;
    return std::make_pair(sign, std::move(out)); // (-1)^(position of idx)
}

std::optional<std::pair<int, IdxSet>> wedgeMerge(const IdxSet& a, const IdxSet& b) {
    IdxSet out = a;
    out.insert(out.end(), b.begin(), b.end());
    // insertion sort, counting transpositions
    int sign = 1;
    for (std::size_t i = 1; i < out.size(); ++i)
        for (std::size_t j = i; j > 0 && out[j] < out[j - 1]; --j) {
            std::swap(out[j], out[j - 1]);
            sign = -sign;
        }
    for (std::size_t i = 1; i < out.size(); ++i)
        if (out[i] == out[i - 1]) return std::nullopt;
    return std::make_pair(sign, std::move(out));
}

std::vector<IdxSet> subsetsOfSize(int n, int k) {
    std::vector<IdxSet> out;
    if (k < 0 || k > n) return out;
    IdxSet cur(k);
    // lexicographic enumeration
    auto rec = [&](auto&& self, int start, int depth) -> void {
        if (depth == k) {
            out.push_back(cur);
            return;
        }
        for (int v = start; v <= n - (k - depth - 1); ++v) {
            cur[depth] = v;
            self(self, v + 1, depth + 1);
        }
    };
    rec(rec, 1, 0);
    return out;
}

namespace {

const char* kMacron = "̄";

std::string indexBlock(const IdxSet& I, const IdxSet& J) {
    std::string s;
    for (int i : I) s += std::to_string(i);
    if (!I.empty() && !J.empty()) s += " ";
    for (int j : J) {
        s += std::to_string(j);
        s += kMacron;
    }
    return s;
}

std::string weightPrefix(const Weight& w) {
    if (w.a == 0 && w.b == 0) return "";
    auto term = [](int c, const char* var, bool lead) -> std::string {
        if (c == 0) return "";
        std::string s;
        if (c > 0 && !lead) s += "+";
        if (c == -1) s += "-";
        else if (c != 1) s += std::to_string(c);
        s += var;
        return s;
    };
    std::string e = term(w.a, "z₁", true);
    e += term(w.b, "z̄₁", e.empty());
    return "e^{" + e + "} ";
}

} // namespace

std::string generatorLabel(const Generator& g, LabelStyle style) {
    std::string body = indexBlock(g.I, g.J);
    if (style == LabelStyle::Phi) {
        if (body.empty()) return "1";
        return "φ_{" + body + "}";
    }
    std::string w = weightPrefix(g.w);
    if (body.empty()) return w.empty() ? "1" : w.substr(0, w.size() - 1);
    return w + "dz_{" + body + "}";
}

} // namespace fss
