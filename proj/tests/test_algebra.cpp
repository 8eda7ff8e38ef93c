#include <doctest.h>

#include "support.hpp"

using namespace testing;

TEST_CASE("hand-built algebras validate") {
    CHECK(validate_algebra(*diagonal(QQ, 3)).ok());
    CHECK(validate_algebra(*dual_numbers(QQ)).ok());
    CHECK(validate_algebra(*matrix_algebra(QQ, 2)).ok());
    CHECK(validate_algebra(*group_algebra(QQ, FiniteGroup::symmetric3())).ok());
    CHECK_FALSE(matrix_algebra(QQ, 2)->is_commutative());
}

TEST_CASE("non-associative structure constants are rejected") {
    // x * x = 1 + x on a two-dimensional unital algebra is associative; x * 1 = 0 breaks the unit.
    const Scalar one = Scalar::one(QQ);
    StructureAlgebra bad = StructureAlgebra::from_triples(QQ, {"1", "x"}, {{0, 0, 0, one}, {0, 1, 1, one}},
                                                          unit_vec(QQ, 2, 0));
    CHECK_FALSE(validate_algebra(bad).ok());
}

TEST_CASE("separability") {
    CHECK(separability_idempotent(*diagonal(QQ, 2)).has_value());
    CHECK(separability_idempotent(*matrix_algebra(QQ, 2)).has_value());
    CHECK_FALSE(separability_idempotent(*dual_numbers(QQ)).has_value());
    // kG is separable exactly when the characteristic does not divide |G|.
    CHECK(separability_idempotent(*group_algebra(FieldSpec::prime(3), FiniteGroup::cyclic(2))).has_value());
    CHECK_FALSE(separability_idempotent(*group_algebra(FieldSpec::prime(2), FiniteGroup::cyclic(2))).has_value());
}

TEST_CASE("enveloping algebra has the square dimension") {
    AlgebraPtr M2 = matrix_algebra(QQ, 2);
    StructureAlgebra E = enveloping(*M2);
    CHECK(E.dim() == 16);
    CHECK(validate_algebra(E).ok());
}

TEST_CASE("tensor products over a ring") {
    AlgebraPtr A = diagonal(QQ, 3);
    TensorProduct t = tensor_over(*A, regular_module(*A, Side::Right), regular_module(*A, Side::Left));
    CHECK(t.dim() == 3);
    AlgebraPtr M2 = matrix_algebra(QQ, 2);
    // Column vectors: M2 (x) over M2 of column space is the column space again.
    TensorProduct u = tensor_over(*M2, regular_module(*M2, Side::Right), regular_module(*M2, Side::Left));
    CHECK(u.dim() == 4);
}

TEST_CASE("Hom between regular modules is the algebra") {
    AlgebraPtr D = dual_numbers(QQ);
    auto homs = hom_over(*D, regular_module(*D, Side::Left), regular_module(*D, Side::Left));
    CHECK(homs.size() == 2);
    for (const auto& f : homs) CHECK(is_module_map(regular_module(*D, Side::Left), regular_module(*D, Side::Left), f));
}

TEST_CASE("generator actions close up or are refused") {
    AlgebraPtr D = dual_numbers(QQ);
    Matrix nil(QQ, 2, 2);
    nil.at(1, 0) = Scalar::one(QQ);
    Module M = close_generator_action(*D, Side::Left, 2, {unit_vec(QQ, 2, 1)}, {nil});
    CHECK(validate_module(*D, M).ok());
    // x must square to zero.
    CHECK_THROWS_AS(close_generator_action(*D, Side::Left, 2, {unit_vec(QQ, 2, 1)}, {Matrix::identity(QQ, 2)}), Error);
}

TEST_CASE("ideals and quotients") {
    AlgebraPtr D = dual_numbers(QQ);
    Quotient q = ideal_and_quotient(*D, {unit_vec(QQ, 2, 1)});
    CHECK(q.algebra->dim() == 1);
    CHECK(q.ideal_basis.size() == 1);
}
