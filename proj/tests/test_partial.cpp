#include <doctest.h>

#include "support.hpp"
#include "parhox/partial_group_algebra.hpp"

using namespace testing;

namespace {

bool is_identity(const Matrix& m) { return m == Matrix::identity(m.field(), m.rows()); }

}  // namespace

TEST_CASE("partial actions validate and bad ones do not") {
    CHECK(validate_partial_action(z3_on_ksq(QQ)).ok());
    CHECK(validate_partial_action(z2_sign_on_dual(QQ)).ok());
    UnitalPartialAction bad = z3_on_ksq(QQ);
    bad.theta[1].at(0, 1) = Scalar(QQ, 2);  // not multiplicative
    CHECK_FALSE(validate_partial_action(bad).ok());
}

TEST_CASE("twists are checked against the action") {
    CHECK(validate_twisted({z3_on_ksq(QQ), z3_zero_pattern(QQ)}).ok());
    PartialFactorSet s = z3_zero_pattern(QQ);
    s.set(0, 1, Scalar(QQ, 2));  // sigma(1, g) must be 1
    CHECK_FALSE(validate_twisted({z3_on_ksq(QQ), s}).ok());
}

TEST_CASE("crossed product dimension is the sum of ideal dimensions") {
    CrossedProduct cp = build_crossed_product({z3_on_ksq(QQ), z3_zero_pattern(QQ)});
    CHECK(cp.dim() == 2 + 1 + 1);
    CHECK(validate_algebra(*cp.algebra).ok());
    // Lambda is M2(k) here: a 4-dimensional separable algebra with a 1-dimensional centre.
    CHECK(separability_idempotent(*cp.algebra).has_value());
    CHECK_FALSE(cp.algebra->is_commutative());
}

TEST_CASE("partial group algebra dimensions") {
    const std::vector<std::pair<FiniteGroup, std::size_t>> cases{
        {FiniteGroup::cyclic(2), 3}, {FiniteGroup::cyclic(3), 8}, {FiniteGroup::klein_four(), 20}};
    for (const auto& [G, dim] : cases) {
        KparPtr K = build_kpar(group(G), QQ);
        CHECK(K->dim() == dim);
        CHECK(validate_algebra(K->A()).ok());
        CHECK(check_defining_relations(*K).ok());
    }
}

TEST_CASE("idempotent subalgebra has one basis vector per subset through the identity") {
    for (int n = 2; n <= 4; ++n) {
        KparPtr K = build_kpar(group(FiniteGroup::cyclic(n)), QQ);
        Subalgebra B = subalgebra_generated(K->A(), [&] {
            std::vector<Vec> es;
            for (int g = 0; g < n; ++g) es.push_back(K->idempotent(g));
            return es;
        }());
        CHECK(B.basis.size() == (std::size_t{1} << (n - 1)));
    }
}

TEST_CASE("twisted completion with constant one reproduces the untwisted algebra") {
    GroupPtr G = group(FiniteGroup::klein_four());
    KparPtr plain = build_kpar(G, QQ);
    KparPtr twisted = build_kpar_sigma(PartialFactorSet::constant_one(G, QQ));
    CHECK(twisted->dim() == plain->dim());
    AlgebraHom f = universal_hom(*twisted, plain->canonical());
    CHECK(validate_hom(f).ok());
    CHECK(rank(f.map) == plain->dim());
}

TEST_CASE("scalar twists on Z2 keep the dimension") {
    GroupPtr Z2 = group(FiniteGroup::cyclic(2));
    for (const char* lam : {"2", "1/3", "-1"}) {
        PartialFactorSet s = PartialFactorSet::constant_one(Z2, QQ);
        s.set(1, 1, Scalar::parse(QQ, lam));
        KparPtr K = build_kpar_sigma(s);
        CHECK(K->dim() == 3);
        CHECK(check_defining_relations(*K).ok());
    }
}

TEST_CASE("crossed-product isomorphism is inverse both ways") {
    KparPtr K = build_kpar_sigma(z3_zero_pattern(QQ));
    CrossedStructure cs = phi_psi_crossed_iso(*K);
    CHECK(validate_hom(cs.phi).ok());
    CHECK(validate_hom(cs.psi).ok());
    CHECK(is_identity(cs.psi.map * cs.phi.map));
    CHECK(is_identity(cs.phi.map * cs.psi.map));
}

TEST_CASE("opposite algebra is the starred twist") {
    PartialFactorSet s = PartialFactorSet::constant_one(group(FiniteGroup::cyclic(2)), QQ);
    s.set(1, 1, Scalar(QQ, 5));
    OppositeIso o = opposite_iso(s);
    CHECK(validate_hom(o.map).ok());
    CHECK(rank(o.map.map) == o.opposite->dim());
}

TEST_CASE("Burnside count of subsets up to translation") {
    // Hand counts: Z2 {1}~{t}, G; Z3 by size; V4 (15 + 3 * 3) / 4; S3 (63 + 3 * 7 + 2 * 3) / 6.
    CHECK(translation_orbits(FiniteGroup::cyclic(2)) == 2);
    CHECK(translation_orbits(FiniteGroup::cyclic(3)) == 3);
    CHECK(translation_orbits(FiniteGroup::klein_four()) == 6);
    CHECK(translation_orbits(FiniteGroup::symmetric3()) == 15);
}
