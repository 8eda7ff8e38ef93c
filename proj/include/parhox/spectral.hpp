#pragma once

#include <optional>
#include <string>
#include <vector>

#include "parhox/homology.hpp"

namespace parhox {

// Everything the spectral-sequence checks need for one twisted partial action and one Lambda-bimodule.
struct PipelineInstance {
    std::string name;
    TwistedPartialAction data;
    CrossedProduct lambda;
    Bimodule coefficients;  // defaults to the regular bimodule of lambda
    XiResult xi;            // xi and the idempotent factor set
    KparPtr kpar;           // untwisted partial group algebra
    IdempotentQuotient k2;  // k2.quotient is the algebra twisted by the idempotent factor set
    KparPtr k_sigma;        // algebra twisted by sigma itself
    bool separable = false;

    const StructureAlgebra& A() const { return data.action.A(); }
    const StructureAlgebra& L() const { return *lambda.algebra; }
    const TwistedPartialGroupAlgebra& K2() const { return *k2.quotient; }
};

// Throws NotNormalized when sigma(g, g^-1) is not in {0, 1} for some g with g^2 != 1.
PipelineInstance make_instance(std::string name, const TwistedPartialAction& tw,
                               const std::optional<Bimodule>& M = std::nullopt);

// dims[p][q] for p <= max_p, q <= max_q.
struct E2Page {
    std::vector<std::vector<std::size_t>> dims;
    std::size_t diagonal(std::size_t n) const;  // sum over p + q = n
};

E2Page homology_e2(const PipelineInstance& inst, std::size_t max_p, std::size_t max_q,
                   GeneratorOrder order = GeneratorOrder::Forward);
E2Page cohomology_e2(const PipelineInstance& inst, std::size_t max_p, std::size_t max_q,
                     GeneratorOrder order = GeneratorOrder::Forward);

struct DegreeComparison {
    std::string label;  // e.g. "H_1" or "p=1,q=0"
    std::size_t lhs = 0, rhs = 0;
    bool holds = false;
};

struct Verdict {
    std::string name;
    bool pass = false;
    bool skipped = false;
    std::string reason;
    std::vector<DegreeComparison> degrees;
    ValidationReport report;
};

// Hochschild homology of Lambda against the partial homology of M / [A, M] (and the cohomological dual).
Verdict collapse_check_separable(const PipelineInstance& inst, std::size_t max_n);
// Hochschild homology of the twisted partial group algebra with regular coefficients against the partial
// homology of M / [B^sigma, M]; also compares the partial and global group algebras on group-algebra bimodules.
Verdict collapse_check_maclane(const PartialFactorSet& sigma, std::size_t max_n);
// Tor over the idempotent-twisted algebra of (B^sigma, H_q(A, M)) against partial homology of Omega (x) H_q(A, M).
Verdict tor_form_consistency(const PipelineInstance& inst, std::size_t max_p, std::size_t max_q);
Verdict structural_identity_suite(const PipelineInstance& inst);
// B (x) Omega over the partial group algebra is isomorphic to B^sigma, by an explicit map.
Verdict omega_tensor_check(const PipelineInstance& inst);
// Tor_1(Omega, X) = 0 for the sample modules of the pipeline.
Verdict flatness_check(const PipelineInstance& inst, std::size_t max_q);
// sum_{p+q=n} dim E2 >= dim H_n(Lambda, M), equality expected when A is separable.
Verdict dimension_bound_check(const PipelineInstance& inst, std::size_t max_n, bool cohomological);

}  // namespace parhox
