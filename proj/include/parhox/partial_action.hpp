#pragma once

#include <cstdint>
#include <memory>
#include <vector>

#include "parhox/algebra.hpp"
#include "parhox/factor_set.hpp"
#include "parhox/group.hpp"

namespace parhox {

// theta[g] is a dim x dim matrix vanishing off D_{g^-1} = 1_{g^-1} A and landing in D_g.
struct UnitalPartialAction {
    AlgebraPtr algebra;
    GroupPtr group;
    std::vector<Vec> unit_of;  // 1_g, central idempotents
    std::vector<Matrix> theta;

    const StructureAlgebra& A() const { return *algebra; }
    const FiniteGroup& G() const { return *group; }
    // 1_g 1_{gh} != 0 and 1_g 1_{gh} 1_{ght} != 0 tables for validate_twist.
    std::vector<bool> pair_support() const;
    std::vector<bool> triple_support() const;
};

struct TwistedPartialAction {
    UnitalPartialAction action;
    PartialFactorSet sigma;
};

ValidationReport validate_partial_action(const UnitalPartialAction& theta);
ValidationReport validate_twisted(const TwistedPartialAction& tw);

// A *_{theta,sigma} G with basis (g, k) running over a basis of each D_g.
struct CrossedProduct {
    TwistedPartialAction data;
    AlgebraPtr algebra;
    std::vector<std::vector<Vec>> ideal_basis;  // per g, basis of D_g in A
    std::vector<std::shared_ptr<const SpanSolver>> ideal_solver;
    std::vector<std::size_t> offset;  // first index of degree g; offset[n] = dim

    std::size_t dim() const { return algebra->dim(); }
    // a delta_g for a in D_g; throws PreconditionFailed if a is outside D_g.
    Vec element(int g, const Vec& a) const;
    Vec embed(const Vec& a) const { return element(0, a); }
    // Degree-g component of x as an element of A.
    Vec component(const Vec& x, int g) const;
    int degree_of(std::size_t basis_index) const;
};

// Throws AssociativityFailure when the rule does not give an associative algebra.
CrossedProduct build_crossed_product(const TwistedPartialAction& tw, std::uint64_t seed = 1);

// Associativity on every triple when dim <= exhaustive_limit, otherwise on `samples` random triples.
ValidationReport check_associativity(const StructureAlgebra& A, std::size_t exhaustive_limit, std::size_t samples,
                                     std::uint64_t seed);

struct PartialProjRepresentation {
    AlgebraPtr target;
    GroupPtr group;
    std::vector<Vec> image;  // Gamma(g)
    PartialFactorSet sigma;
};

ValidationReport validate_partial_representation(const PartialProjRepresentation& rep, bool factor_set = true);
// Zero-pattern equivalences Gamma(g^-1)Gamma(gh) = 0 <=> Gamma(g)Gamma(h) = 0 <=> Gamma(gh)Gamma(h^-1) = 0.
ValidationReport check_zero_pattern(const PartialProjRepresentation& rep);

PartialProjRepresentation gamma_sigma(const CrossedProduct& cp);

// e_g = sigma(g^-1,g)^-1 Gamma(g) Gamma(g^-1), or 0; throws PropertyFailure if the commutation rules fail.
std::vector<Vec> induced_idempotents(const PartialProjRepresentation& rep);

struct InducedAction {
    Subalgebra subalgebra;  // B generated by the e_g
    std::vector<Vec> idempotents;
    UnitalPartialAction action;  // on subalgebra.algebra
    ValidationReport report;     // action and twist validation
};

InducedAction induced_partial_action(const PartialProjRepresentation& rep);

// Gamma(g) pi(a) Gamma(g^-1) = sigma(g,g^-1) pi(theta_g(a)) on a basis of D_{g^-1}.
ValidationReport validate_covariant(const TwistedPartialAction& tw, const AlgebraHom& pi,
                                    const PartialProjRepresentation& rep);
// a delta_g -> pi(a) Gamma(g); throws NotCovariant when the pair is not covariant or the map is not a hom.
AlgebraHom pi_times_gamma(const CrossedProduct& cp, const AlgebraHom& pi, const PartialProjRepresentation& rep);

struct TransportResult {
    CrossedProduct source;  // twist nu
    CrossedProduct target;  // twist rho
    AlgebraHom iso;         // a delta_g -> eta(g) a delta_g
};

TransportResult transport_by_equivalence(const TwistedPartialAction& tw, const EquivalenceWitness& eta);

// A = D_g + (1 - 1_g) A as a direct sum for every g, so the crossed product is projective over A.
ValidationReport projectivity_splitting(const UnitalPartialAction& theta);

}  // namespace parhox
