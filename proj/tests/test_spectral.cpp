#include <doctest.h>

#include "support.hpp"
#include "parhox/spectral.hpp"

using namespace testing;

namespace {

void require_pass(const Verdict& v) {
    INFO(v.name << " " << v.reason << (v.report.violations.empty() ? "" : " " + v.report.violations.front()));
    for (const auto& d : v.degrees) INFO(d.label << " " << d.lhs << " vs " << d.rhs);
    CHECK(v.pass);
}

}  // namespace

TEST_CASE("second page of the partial Z3 action on k^2") {
    PipelineInstance inst = make_instance("z3", {z3_on_ksq(QQ), z3_zero_pattern(QQ)});
    CHECK(inst.separable);
    // Lambda is M2(k): HH_n = 1, 0, 0 and the page must add up to the same numbers.
    E2Page page = homology_e2(inst, 2, 2);
    CHECK(page.diagonal(0) == 1);
    CHECK(page.diagonal(1) == 0);
    CHECK(page.diagonal(2) == 0);
    E2Page dual = cohomology_e2(inst, 2, 2);
    CHECK(dual.diagonal(0) == 1);
    CHECK(homology_e2(inst, 2, 1, GeneratorOrder::Reverse).dims == homology_e2(inst, 2, 1).dims);
}

TEST_CASE("verdicts on a separable and a non-separable instance") {
    for (const auto& tw : {TwistedPartialAction{z3_on_ksq(QQ), z3_zero_pattern(QQ)},
                           TwistedPartialAction{z2_sign_on_dual(QQ),
                                                PartialFactorSet::constant_one(group(FiniteGroup::cyclic(2)), QQ)}}) {
        PipelineInstance inst = make_instance("case", tw);
        require_pass(collapse_check_separable(inst, 2));
        require_pass(tor_form_consistency(inst, 2, 1));
        require_pass(structural_identity_suite(inst));
        require_pass(omega_tensor_check(inst));
        require_pass(flatness_check(inst, 1));
        require_pass(dimension_bound_check(inst, 2, false));
        require_pass(dimension_bound_check(inst, 2, true));
    }
}

TEST_CASE("collapse is skipped, not faked, without separability") {
    PipelineInstance inst =
        make_instance("dual", {z2_sign_on_dual(QQ), PartialFactorSet::constant_one(group(FiniteGroup::cyclic(2)), QQ)});
    CHECK_FALSE(inst.separable);
    Verdict v = collapse_check_separable(inst, 2);
    CHECK(v.skipped);
    CHECK(v.degrees.empty());
}

TEST_CASE("dual numbers with the sign action: the bound is strict somewhere") {
    // HH_n(Lambda) for Lambda = D * Z2; the page bounds it from above.
    PipelineInstance inst =
        make_instance("dual", {z2_sign_on_dual(QQ), PartialFactorSet::constant_one(group(FiniteGroup::cyclic(2)), QQ)});
    auto hh = hochschild_homology_bar(inst.L(), inst.coefficients, 2);
    E2Page page = homology_e2(inst, 2, 2);
    for (std::size_t n = 0; n <= 2; ++n) CHECK(page.diagonal(n) >= hh[n]);
}

TEST_CASE("MacLane comparison for scalar Z2 twists") {
    GroupPtr Z2 = group(FiniteGroup::cyclic(2));
    for (const char* lam : {"1", "2", "1/3"}) {
        PartialFactorSet s = PartialFactorSet::constant_one(Z2, QQ);
        s.set(1, 1, Scalar::parse(QQ, lam));
        require_pass(collapse_check_maclane(s, 2));
    }
    const FieldSpec F7 = FieldSpec::prime(7);
    PartialFactorSet s = PartialFactorSet::constant_one(Z2, F7);
    s.set(1, 1, Scalar(F7, 4));
    require_pass(collapse_check_maclane(s, 2));
}

TEST_CASE("twists that are not inverse-normalized are refused by the pipeline") {
    PartialFactorSet s = PartialFactorSet::constant_one(group(FiniteGroup::cyclic(3)), QQ);
    s.set(1, 2, Scalar(QQ, 3));
    s.set(2, 1, Scalar(QQ, 3));
    CHECK_THROWS_AS(make_instance("bad", {trivial_action(QQ, group(FiniteGroup::cyclic(3))), s}), Error);
}
