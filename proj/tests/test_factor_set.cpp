#include <doctest.h>

#include "support.hpp"

using namespace testing;

namespace {

PartialFactorSet random_support_one(GroupPtr G, std::mt19937_64& rng) {
    PartialFactorSet s = PartialFactorSet::constant_one(G, QQ);
    std::uniform_int_distribution<int> val(1, 5);
    for (int g = 1; g < G->order(); ++g)
        for (int h = 1; h < G->order(); ++h) s.set(g, h, Scalar(QQ, val(rng)));
    return s;
}

}  // namespace

TEST_CASE("star is an involution and sigma prime is self-dual") {
    std::mt19937_64 rng(11);
    for (GroupPtr G : {group(FiniteGroup::cyclic(3)), group(FiniteGroup::symmetric3())})
        for (int trial = 0; trial < 5; ++trial) {
            PartialFactorSet s = random_support_one(G, rng);
            CHECK(involution_star(involution_star(s)) == s);
            PartialFactorSet sp = sigma_prime(s);
            CHECK(sp == involution_star(sp));
        }
}

TEST_CASE("star matches its defining formula") {
    std::mt19937_64 rng(2);
    GroupPtr G = group(FiniteGroup::symmetric3());
    PartialFactorSet s = random_support_one(G, rng);
    PartialFactorSet st = involution_star(s);
    for (int g = 0; g < 6; ++g)
        for (int h = 0; h < 6; ++h) CHECK(st(g, h) == s(G->inv(h), G->inv(g)));
}

TEST_CASE("xi and the idempotent factor set") {
    const PartialFactorSet s = z3_zero_pattern(QQ);
    XiResult xr = xi_sigma_double_prime(s);
    CHECK(xr.checks.ok());
    CHECK(xr.sigma_double_prime.is_idempotent());
    CHECK(involution_star(xr.sigma_double_prime) == xr.sigma_double_prime);
    for (int g = 0; g < 3; ++g) CHECK(xr.xi[static_cast<std::size_t>(g)] == xr.xi[static_cast<std::size_t>((3 - g) % 3)]);
    // Zero pattern is kept, nonzero values become one.
    for (int g = 0; g < 3; ++g)
        for (int h = 0; h < 3; ++h) CHECK(xr.sigma_double_prime(g, h).is_zero() == s(g, h).is_zero());
}

TEST_CASE("idempotent factor sets are fixed by the construction") {
    const PartialFactorSet one = PartialFactorSet::constant_one(group(FiniteGroup::klein_four()), QQ);
    XiResult xr = xi_sigma_double_prime(one);
    CHECK(xr.sigma_double_prime == one);
    for (const auto& x : xr.xi) CHECK(x.is_one());
}

TEST_CASE("inverse normalization") {
    GroupPtr Z3 = group(FiniteGroup::cyclic(3));
    PartialFactorSet s = PartialFactorSet::constant_one(Z3, QQ);
    s.set(1, 2, Scalar(QQ, 5));
    s.set(2, 1, Scalar(QQ, 5));
    CHECK_FALSE(is_inverse_normalized(s));
    CHECK_THROWS_AS(xi_sigma_double_prime(s), Error);
    NormalizationResult nr = normalize_inverse_pairs(s);
    CHECK(nr.report.ok());
    CHECK(is_inverse_normalized(nr.nu));
    CHECK(nr.nu == transport(s, nr.eta));
}

TEST_CASE("involution twists need square roots to normalize") {
    GroupPtr Z2 = group(FiniteGroup::cyclic(2));
    const FieldSpec F7 = FieldSpec::prime(7);
    PartialFactorSet four = PartialFactorSet::constant_one(Z2, F7);
    four.set(1, 1, Scalar(F7, 4));
    NormalizationResult nr = normalize_inverse_pairs(four);
    CHECK(nr.square_roots_applied);
    CHECK(nr.nu(1, 1).is_one());
    CHECK(check_good_factor_set_identities(nr.nu).ok());

    PartialFactorSet three = PartialFactorSet::constant_one(Z2, F7);
    three.set(1, 1, Scalar(F7, 3));
    CHECK_FALSE(normalize_inverse_pairs(three).square_roots_applied);
    CHECK_FALSE(check_good_factor_set_identities(three).ok());
}

TEST_CASE("good identities on constant and zero-pattern factor sets") {
    CHECK(check_good_factor_set_identities(PartialFactorSet::constant_one(group(FiniteGroup::symmetric3()), QQ)).ok());
    CHECK(check_good_factor_set_identities(z3_zero_pattern(QQ)).ok());
    CHECK(validate_unit_and_symmetry(z3_zero_pattern(QQ)).ok());
}
