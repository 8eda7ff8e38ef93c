#pragma once

#include <memory>
#include <vector>

#include "parhox/group.hpp"
#include "parhox/report.hpp"
#include "parhox/scalar.hpp"

namespace parhox {

// Table g,h -> sigma(g,h); zero entries are allowed.
class PartialFactorSet {
public:
    PartialFactorSet(GroupPtr G, const FieldSpec& f, std::vector<Scalar> values);
    static PartialFactorSet constant_one(GroupPtr G, const FieldSpec& f);

    const FiniteGroup& group() const { return *group_; }
    const GroupPtr& group_ptr() const { return group_; }
    const FieldSpec& field() const { return field_; }
    int order() const { return group_->order(); }

    const Scalar& operator()(int g, int h) const { return values_[idx(g, h)]; }
    void set(int g, int h, const Scalar& v);
    bool is_idempotent() const;  // every value in {0, 1}
    bool operator==(const PartialFactorSet& o) const;
    bool operator!=(const PartialFactorSet& o) const { return !(*this == o); }

private:
    std::size_t idx(int g, int h) const { return static_cast<std::size_t>(g * group_->order() + h); }
    GroupPtr group_;
    FieldSpec field_;
    std::vector<Scalar> values_;
};

// support[g*n+h]: 1_g 1_{gh} != 0; triple[(g*n+h)*n+t]: 1_g 1_{gh} 1_{ght} != 0.
ValidationReport validate_twist(const PartialFactorSet& sigma, const std::vector<bool>& support,
                                const std::vector<bool>& triple);
// Unit and inverse-symmetry conditions only.
ValidationReport validate_unit_and_symmetry(const PartialFactorSet& sigma);

struct MonoidFactorSet {
    std::shared_ptr<const ExelMonoid> monoid;
    std::vector<Scalar> values;  // rho(x, y) at x * size + y
    const Scalar& operator()(std::size_t x, std::size_t y) const { return values[x * monoid->size() + y]; }
};

ValidationReport validate_monoid_factor_set(const MonoidFactorSet& rho);
PartialFactorSet derive_sigma_from_monoid(const MonoidFactorSet& rho, const FieldSpec& f);

PartialFactorSet product(const PartialFactorSet& a, const PartialFactorSet& b);
PartialFactorSet involution_star(const PartialFactorSet& s);
PartialFactorSet sigma_prime(const PartialFactorSet& s);

// sigma(g, g^-1) in {0, 1} for every g with g^2 != 1.
bool is_inverse_normalized(const PartialFactorSet& s);

struct XiResult {
    std::vector<Scalar> xi;
    PartialFactorSet sigma_double_prime;
    ValidationReport checks;  // values in {0,1} and self-duality
};

// Throws NotNormalized unless is_inverse_normalized(s).
XiResult xi_sigma_double_prime(const PartialFactorSet& s);

using EquivalenceWitness = std::vector<Scalar>;

// nu(g,h) = eta(g) eta(h) eta(gh)^-1 sigma(g,h)
PartialFactorSet transport(const PartialFactorSet& s, const EquivalenceWitness& eta);

struct NormalizationResult {
    EquivalenceWitness eta;
    PartialFactorSet nu;
    bool square_roots_applied = true;
    ValidationReport report;
};

NormalizationResult normalize_inverse_pairs(const PartialFactorSet& s);

ValidationReport check_good_factor_set_identities(const PartialFactorSet& s);

}  // namespace parhox
