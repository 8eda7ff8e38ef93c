#pragma once

#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "parhox/algebra.hpp"
#include "parhox/factor_set.hpp"
#include "parhox/group.hpp"
#include "parhox/partial_action.hpp"

namespace parhox {

// Algebra spanned by the surviving monomials E_A[g] = (prod_{x in A} e_x)[g] of S(G).
// The partial group algebra is the case sigma = 1 with nothing vanished.
class TwistedPartialGroupAlgebra {
public:
    TwistedPartialGroupAlgebra(std::shared_ptr<const ExelMonoid> monoid, PartialFactorSet sigma,
                               std::vector<bool> vanished, std::vector<std::string> log);

    const StructureAlgebra& A() const { return *algebra_; }
    const AlgebraPtr& algebra() const { return algebra_; }
    const ExelMonoid& monoid() const { return *monoid_; }
    const std::shared_ptr<const ExelMonoid>& monoid_ptr() const { return monoid_; }
    const FiniteGroup& group() const { return monoid_->group(); }
    const PartialFactorSet& sigma() const { return sigma_; }
    std::size_t dim() const { return algebra_->dim(); }

    bool vanished(std::size_t s) const { return position_[s] < 0; }
    long position(std::size_t s) const { return position_[s]; }
    std::size_t monomial_of(std::size_t basis_index) const { return monomials_[basis_index]; }
    const std::vector<std::string>& completion_log() const { return log_; }

    Vec monomial(std::size_t s) const;  // E_A[g], zero when vanished
    Vec generator(int g) const;         // [g]
    Vec idempotent(int g) const;        // e_g = sigma(g,g^-1)^-1 [g][g^-1], or 0
    std::vector<Vec> generators() const;
    PartialProjRepresentation canonical() const;

    // Normal form of a word in [g] and e_h: a scalar times a surviving monomial, or none when it vanishes.
    std::optional<std::pair<Scalar, std::size_t>> reduce_word(const std::vector<ExelSymbol>& word) const;

private:
    std::shared_ptr<const ExelMonoid> monoid_;
    PartialFactorSet sigma_;
    std::vector<long> position_;
    std::vector<std::size_t> monomials_;
    std::vector<std::string> log_;
    AlgebraPtr algebra_;
};

using KparPtr = std::shared_ptr<const TwistedPartialGroupAlgebra>;

KparPtr build_kpar(const GroupPtr& G, const FieldSpec& f, std::size_t limit = 512);

struct IdempotentQuotient {
    KparPtr kpar;
    KparPtr quotient;
    AlgebraHom surjection;  // [g] -> [g]
};

// Quotient of the semigroup algebra by the semigroup ideal attached to the zeros of an idempotent factor set.
IdempotentQuotient build_kpar_idempotent(const PartialFactorSet& sigma, std::size_t limit = 512);

struct CompletionOptions {
    std::size_t limit = 512;
    std::size_t max_rounds = 0;  // 0 means |S(G)| + 1
};

// Completion of the defining relations over the monomial model. Throws CompletionDiverged or
// AssociativityFailure (with a witness) instead of returning an unverified algebra.
KparPtr build_kpar_sigma(const PartialFactorSet& sigma, const CompletionOptions& opt = {});

// Defining relations and the factor-set property checked on the structure constants.
ValidationReport check_defining_relations(const TwistedPartialGroupAlgebra& K);

// Extension of a partial sigma-representation to the algebra; throws NotARepresentation.
AlgebraHom universal_hom(const TwistedPartialGroupAlgebra& K, const PartialProjRepresentation& rep);

struct OppositeIso {
    KparPtr starred;  // built from sigma*(g,h) = sigma(h^-1,g^-1)
    AlgebraPtr opposite;
    AlgebraHom map;  // [g] -> [g^-1]
};

OppositeIso opposite_iso(const PartialFactorSet& sigma, const CompletionOptions& opt = {});

struct BSigmaOmega {
    Subalgebra b;        // idempotent subalgebra of the partial group algebra
    Subalgebra b_sigma;  // generated by the e_g inside the twisted algebra
    Matrix zeta;         // b_sigma.dim x b.dim, e_g -> e_g
    std::vector<Vec> kernel;  // spanning set of ker zeta in partial group algebra coordinates
    Quotient omega;           // partial group algebra modulo the ideal generated by ker zeta
};

BSigmaOmega build_B_sigma_omega(const TwistedPartialGroupAlgebra& kpar, const TwistedPartialGroupAlgebra& K);

// The quotient as a module over the idempotent-twisted algebra, [g] acting through the class of [g].
Module omega_module(const BSigmaOmega& bo, const TwistedPartialGroupAlgebra& kpar,
                    const TwistedPartialGroupAlgebra& k2, Side side);

struct CrossedStructure {
    InducedAction induced;  // B^sigma with its partial action
    CrossedProduct crossed;
    AlgebraHom phi;  // K -> crossed, [g] -> e_g delta_g
    AlgebraHom psi;  // crossed -> K, b delta_g -> b [g]
};

// Throws IsomorphismFailure if the two maps are not mutually inverse.
CrossedStructure phi_psi_crossed_iso(const TwistedPartialGroupAlgebra& K);

struct BSigmaModules {
    Subalgebra b_sigma;
    Module left;   // [g]'' . w = xi(g) [g] w [g^-1]
    Module right;  // w . [g]'' = [g^-1]'' . w
    ValidationReport report;
};

BSigmaModules b_sigma_module_structures(const TwistedPartialGroupAlgebra& K, const TwistedPartialGroupAlgebra& k2,
                                        const std::vector<Scalar>& xi);

}  // namespace parhox
