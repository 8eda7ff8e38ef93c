#include <doctest.h>

#include "support.hpp"
#include "parhox/homology.hpp"

using namespace testing;

using Dims = std::vector<std::size_t>;

TEST_CASE("Hochschild homology of matrix algebras is concentrated in degree zero") {
    AlgebraPtr M2 = matrix_algebra(QQ, 2);
    CHECK(hochschild_homology_bar(*M2, regular_bimodule(*M2), 2) == Dims{1, 0, 0});
    CHECK(hochschild_homology_resolution(*M2, regular_bimodule(*M2), 2) == Dims{1, 0, 0});
    CHECK(hochschild_cohomology_bar(*M2, regular_bimodule(*M2), 2) == Dims{1, 0, 0});
}

TEST_CASE("dual numbers: periodic resolution values") {
    // Over Q the periodic maps tensor to 0 and 2x, leaving one class per positive degree.
    AlgebraPtr D = dual_numbers(QQ);
    CHECK(hochschild_homology_bar(*D, regular_bimodule(*D), 3) == Dims{2, 1, 1, 1});
    CHECK(hochschild_cohomology_bar(*D, regular_bimodule(*D), 3) == Dims{2, 1, 1, 1});
    // In characteristic two both maps vanish.
    const FieldSpec F2 = FieldSpec::prime(2);
    AlgebraPtr D2 = dual_numbers(F2);
    CHECK(hochschild_homology_bar(*D2, regular_bimodule(*D2), 3) == Dims{2, 2, 2, 2});
    CHECK(hochschild_homology_resolution(*D2, regular_bimodule(*D2), 3) == Dims{2, 2, 2, 2});
}

TEST_CASE("group algebras: degree zero counts conjugacy classes") {
    AlgebraPtr kS3 = group_algebra(QQ, FiniteGroup::symmetric3());
    CHECK(hochschild_homology_resolution(*kS3, regular_bimodule(*kS3), 1) == Dims{3, 0});
    AlgebraPtr kZ3 = group_algebra(QQ, FiniteGroup::cyclic(3));
    CHECK(hochschild_homology_bar(*kZ3, regular_bimodule(*kZ3), 2) == Dims{3, 0, 0});
    // kZ2 over F2 is the dual numbers.
    AlgebraPtr kZ2 = group_algebra(FieldSpec::prime(2), FiniteGroup::cyclic(2));
    CHECK(hochschild_homology_bar(*kZ2, regular_bimodule(*kZ2), 2) == Dims{2, 2, 2});
}

TEST_CASE("bar complex squares to zero and normalization does not change homology") {
    AlgebraPtr D = dual_numbers(QQ);
    for (bool normalized : {true, false}) {
        ChainComplex C = bar_complex(*D, regular_bimodule(*D), 3, normalized, 200000);
        CHECK(C.check().ok());
    }
    CHECK(hochschild_homology_bar(*D, regular_bimodule(*D), 2, false) ==
          hochschild_homology_bar(*D, regular_bimodule(*D), 2, true));
}

TEST_CASE("size caps are enforced") {
    AlgebraPtr M3 = matrix_algebra(QQ, 3);
    CHECK_THROWS_AS(hochschild_homology_bar(*M3, regular_bimodule(*M3), 3, false, 1000), Error);
}

TEST_CASE("resolutions are exact and choice-independent") {
    KparPtr K = build_kpar(group(FiniteGroup::cyclic(3)), QQ);
    Module B = idempotent_module(*K, Side::Left);
    FreeResolution f = resolve(K->algebra(), B, 3, GeneratorOrder::Forward, 200000);
    FreeResolution r = resolve(K->algebra(), B, 3, GeneratorOrder::Reverse, 200000);
    CHECK(f.exactness.ok());
    CHECK(r.exactness.ok());
    Module Br = idempotent_module(*K, Side::Right);
    CHECK(tor_dims(K->algebra(), Br, B, 2) ==
          tor_dims(K->algebra(), Br, B, 2, GeneratorOrder::Forward, TorRoute::ResolveRight));
}

TEST_CASE("partial homology of the idempotent module counts translation classes") {
    // The partial group algebra is semisimple in characteristic zero, so only degree zero survives.
    for (const FiniteGroup& G : {FiniteGroup::cyclic(2), FiniteGroup::cyclic(3), FiniteGroup::klein_four()}) {
        KparPtr K = build_kpar(group(G), QQ);
        Module B = idempotent_module(*K, Side::Left);
        Dims h = partial_homology(*K, B, 2);
        CHECK(h[0] == translation_orbits(G));
        CHECK(h[1] == 0);
        CHECK(h[2] == 0);
        CHECK(partial_cohomology(*K, B, 2) == h);
    }
}

TEST_CASE("partial homology in the modular case has higher classes") {
    // Over F2 the group algebra of Z2 sits inside the partial one as a block with nonzero H_1.
    const FieldSpec F2 = FieldSpec::prime(2);
    KparPtr K = build_kpar(group(FiniteGroup::cyclic(2)), F2);
    Dims h = partial_homology(*K, idempotent_module(*K, Side::Left), 2);
    CHECK(h == partial_homology(*K, idempotent_module(*K, Side::Left), 2, GeneratorOrder::Reverse));
    CHECK(h[1] >= 1);
}

TEST_CASE("module from operators needs a representation") {
    KparPtr K = build_kpar(group(FiniteGroup::cyclic(2)), QQ);
    // T_t = 2 is not compatible with [t][t][t] = [t]: 8 != 2.
    std::vector<Matrix> T{Matrix::identity(QQ, 1), Matrix::identity(QQ, 1).scaled(Scalar(QQ, 2))};
    CHECK_THROWS_AS(module_from_operators(*K, T), Error);
    std::vector<Matrix> sign{Matrix::identity(QQ, 1), Matrix::identity(QQ, 1).scaled(Scalar(QQ, -1))};
    CHECK_NOTHROW(module_from_operators(*K, sign));
}

TEST_CASE("chain action passes its gates and rejects a wrong twist") {
    TwistedPartialAction tw{z3_on_ksq(QQ), z3_zero_pattern(QQ)};
    CrossedProduct cp = build_crossed_product(tw);
    XiResult xr = xi_sigma_double_prime(tw.sigma);
    Bimodule M = regular_bimodule(*cp.algebra);
    EquivariantChains ec = diagonal_chain_action(cp, M, xr.xi, xr.sigma_double_prime, 2);
    CHECK(ec.report.ok());
    EquivariantCochains cc = diagonal_cochain_action(cp, M, xr.xi, xr.sigma_double_prime, 2);
    CHECK(cc.report.ok());
    // sigma(t, t) is invisible here (both sides vanish); sigma(t, t^2) = 0 is not.
    PartialFactorSet wrong = xr.sigma_double_prime;
    wrong.set(1, 2, Scalar::zero(QQ));
    wrong.set(2, 1, Scalar::zero(QQ));
    CHECK_THROWS_AS(diagonal_chain_action(cp, M, xr.xi, wrong, 2), Error);
}
