#pragma once

// Small hand-built algebras and actions shared by the unit tests.

#include <memory>
#include <random>
#include <string>
#include <tuple>
#include <vector>

#include "parhox/partial_action.hpp"

namespace testing {

using namespace parhox;

inline const FieldSpec QQ = FieldSpec::rationals();

inline GroupPtr group(FiniteGroup G) { return std::make_shared<const FiniteGroup>(std::move(G)); }

inline AlgebraPtr ptr(StructureAlgebra A) { return std::make_shared<const StructureAlgebra>(std::move(A)); }

inline AlgebraPtr diagonal(const FieldSpec& f, std::size_t n) {
    std::vector<std::tuple<std::size_t, std::size_t, std::size_t, Scalar>> sc;
    std::vector<std::string> labels;
    Vec unit = zero_vec(f, n);
    for (std::size_t i = 0; i < n; ++i) {
        sc.emplace_back(i, i, i, Scalar::one(f));
        labels.push_back("e" + std::to_string(i + 1));
        unit[i] = Scalar::one(f);
    }
    return ptr(StructureAlgebra::from_triples(f, labels, sc, unit));
}

inline AlgebraPtr dual_numbers(const FieldSpec& f) {
    const Scalar one = Scalar::one(f);
    return ptr(StructureAlgebra::from_triples(f, {"1", "x"}, {{0, 0, 0, one}, {0, 1, 1, one}, {1, 0, 1, one}},
                                              unit_vec(f, 2, 0)));
}

// Matrix units E_ij at index i * n + j.
inline AlgebraPtr matrix_algebra(const FieldSpec& f, std::size_t n) {
    std::vector<std::tuple<std::size_t, std::size_t, std::size_t, Scalar>> sc;
    std::vector<std::string> labels;
    Vec unit = zero_vec(f, n * n);
    for (std::size_t i = 0; i < n; ++i) {
        unit[i * n + i] = Scalar::one(f);
        for (std::size_t j = 0; j < n; ++j) {
            labels.push_back("E" + std::to_string(i) + std::to_string(j));
            for (std::size_t k = 0; k < n; ++k) sc.emplace_back(i * n + j, j * n + k, i * n + k, Scalar::one(f));
        }
    }
    return ptr(StructureAlgebra::from_triples(f, labels, sc, unit));
}

inline AlgebraPtr group_algebra(const FieldSpec& f, const FiniteGroup& G) {
    std::vector<std::tuple<std::size_t, std::size_t, std::size_t, Scalar>> sc;
    std::vector<std::string> labels;
    const auto n = static_cast<std::size_t>(G.order());
    for (std::size_t g = 0; g < n; ++g) {
        labels.push_back(G.label(static_cast<int>(g)));
        for (std::size_t h = 0; h < n; ++h)
            sc.emplace_back(g, h, static_cast<std::size_t>(G.mul(static_cast<int>(g), static_cast<int>(h))),
                            Scalar::one(f));
    }
    return ptr(StructureAlgebra::from_triples(f, labels, sc, unit_vec(f, n, 0)));
}

// The global action of a group on a one-dimensional algebra.
inline UnitalPartialAction trivial_action(const FieldSpec& f, GroupPtr G) {
    AlgebraPtr k = diagonal(f, 1);
    UnitalPartialAction act{k, G, {}, {}};
    for (int g = 0; g < G->order(); ++g) {
        act.unit_of.push_back(k->unit());
        act.theta.push_back(Matrix::identity(f, 1));
    }
    return act;
}

// Z3 acting partially on k^2: D_t = k e1, D_{t^2} = k e2, theta_t(e2) = e1.
inline UnitalPartialAction z3_on_ksq(const FieldSpec& f) {
    GroupPtr Z3 = group(FiniteGroup::cyclic(3));
    AlgebraPtr A = diagonal(f, 2);
    UnitalPartialAction act{A, Z3, {A->unit(), unit_vec(f, 2, 0), unit_vec(f, 2, 1)}, {Matrix::identity(f, 2)}};
    Matrix t1(f, 2, 2), t2(f, 2, 2);
    t1.at(0, 1) = Scalar::one(f);
    t2.at(1, 0) = Scalar::one(f);
    act.theta.push_back(t1);
    act.theta.push_back(t2);
    return act;
}

// Z2 acting on the dual numbers by x -> -x.
inline UnitalPartialAction z2_sign_on_dual(const FieldSpec& f) {
    GroupPtr Z2 = group(FiniteGroup::cyclic(2));
    AlgebraPtr D = dual_numbers(f);
    Matrix neg = Matrix::identity(f, 2);
    neg.at(1, 1) = -Scalar::one(f);
    return {D, Z2, {D->unit(), D->unit()}, {Matrix::identity(f, 2), neg}};
}

inline PartialFactorSet z3_zero_pattern(const FieldSpec& f) {
    PartialFactorSet s = PartialFactorSet::constant_one(group(FiniteGroup::cyclic(3)), f);
    s.set(1, 1, Scalar::zero(f));
    s.set(2, 2, Scalar::zero(f));
    return s;
}

// Nonempty subsets of G up to left translation, by Burnside.
inline std::size_t translation_orbits(const FiniteGroup& G) {
    const int n = G.order();
    std::size_t fixed = 0;
    for (int g = 0; g < n; ++g)
        for (Subset A = 1; A < (Subset{1} << n); ++A) fixed += translate(G, g, A) == A;
    return fixed / static_cast<std::size_t>(n);
}

inline Matrix random_matrix(const FieldSpec& f, std::size_t r, std::size_t c, std::mt19937_64& rng, int density = 3) {
    Matrix m(f, r, c);
    std::uniform_int_distribution<int> coin(0, density), val(-3, 3);
    for (std::size_t i = 0; i < r; ++i)
        for (std::size_t j = 0; j < c; ++j)
            if (coin(rng) == 0) m.at(i, j) = Scalar(f, val(rng));
    return m;
}

}  // namespace testing
