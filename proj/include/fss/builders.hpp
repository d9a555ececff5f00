#pragma once

#include "fss/double_complex.hpp"

#include <map>

namespace fss {

/// Complex Lie algebra by structure constants: [theta_i, theta_j] = sum_k c(i,j,k) theta_k.
/// Constants are stored for i < j and extended antisymmetrically.
class LieAlgebraSpec {
public:
    LieAlgebraSpec(int dim) : dim_(dim) {}

    int dim() const { return dim_; }
    void setBracket(int i, int j, const Vec& coeffs);
    GaussianRational c(int i, int j, int k) const;

    /// Jacobi identity on all basis triples; antisymmetry holds by construction.
    void checkJacobi() const;

private:
    int dim_;
    std::map<std::pair<int, int>, Vec> brackets_; // (i<j) -> coefficient vector
};

struct WeightedRule {
    Generator src;
    Generator dst;
    GaussianRational coeff;
    bool onDel = true;
};

struct WeightedModelSpec {
    int n = 0;
    std::string name;
    std::vector<Generator> generators;
    std::map<Weight, Weight> conjWeight; // empty: conjugation omitted
    std::vector<WeightedRule> extraRules;
};

/// Exterior algebra of invariant (1,0)/(0,1) frames with the Chevalley-Eilenberg
/// differential; gram = identity on the monomial basis.
DoubleComplex buildCeComplex(const LieAlgebraSpec& g, const std::string& name);

/// Weighted-generator complex: del/dbar act through the exponent weights
/// (a dz1-, b dzbar1-multiplication) plus any declared extra rules.
DoubleComplex buildWeightedComplex(const WeightedModelSpec& spec);

struct ExplicitSpec {
    int n = 0;
    std::string name;
    std::vector<std::vector<std::size_t>> dims;          // (n+1)x(n+1)
    std::map<std::pair<int, int>, Matrix> del, dbar;
    std::map<std::pair<int, int>, Matrix> conj, gram;    // optional per slot
    std::map<std::pair<int, int>, std::vector<std::string>> labels;
    bool hasConj = false;
};

DoubleComplex buildExplicitComplex(const ExplicitSpec& spec);

} // namespace fss
