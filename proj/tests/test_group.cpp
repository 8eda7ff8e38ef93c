#include <doctest.h>

#include "support.hpp"

using namespace testing;

namespace {

// Pairs (A, g) with 1 and g in A, counted by enumerating subsets.
std::size_t count_exel_pairs(int n) {
    std::size_t count = 0;
    for (Subset A = 0; A < (Subset{1} << n); ++A)
        for (int g = 0; g < n; ++g)
            if (contains(A, 0) && contains(A, g)) ++count;
    return count;
}

ExelSymbol gen(int g) { return {ExelSymbol::Generator, g}; }

}  // namespace

TEST_CASE("named groups are groups of the right order") {
    CHECK(FiniteGroup::cyclic(5).order() == 5);
    CHECK(FiniteGroup::klein_four().order() == 4);
    const FiniteGroup S3 = FiniteGroup::symmetric3();
    CHECK(S3.order() == 6);
    int involutions = 0;
    for (int g = 1; g < 6; ++g) involutions += S3.squares_to_one(g);
    CHECK(involutions == 3);
    bool abelian = true;
    for (int a = 0; a < 6; ++a)
        for (int b = 0; b < 6; ++b) abelian = abelian && S3.mul(a, b) == S3.mul(b, a);
    CHECK_FALSE(abelian);
}

TEST_CASE("permutation generators close to the generated group") {
    const FiniteGroup G = FiniteGroup::from_permutations({{1, 0, 2}, {1, 2, 0}});
    CHECK(G.order() == 6);
    const FiniteGroup C = FiniteGroup::from_permutations({{1, 2, 3, 0}});
    CHECK(C.order() == 4);
}

TEST_CASE("Cayley tables are validated") {
    CHECK_NOTHROW(FiniteGroup({{0, 1}, {1, 0}}));
    CHECK_THROWS_AS(FiniteGroup({{0, 1}, {1, 1}}), Error);  // not a Latin square
    CHECK_THROWS_AS(FiniteGroup({{1, 0}, {0, 1}}), Error);  // identity not first
    // Latin square with identity whose product is not associative.
    CHECK_THROWS_AS(FiniteGroup({{0, 1, 2, 3, 4},
                                 {1, 0, 3, 4, 2},
                                 {2, 4, 0, 1, 3},
                                 {3, 2, 4, 0, 1},
                                 {4, 3, 1, 2, 0}}),
                    Error);
}

TEST_CASE("Exel monoid size matches a subset count") {
    for (int n = 1; n <= 6; ++n) {
        ExelMonoid S(group(FiniteGroup::cyclic(n)), 4096);
        CHECK(S.size() == count_exel_pairs(n));
        CHECK(exel_size_formula(n) == count_exel_pairs(n));
    }
    CHECK(ExelMonoid(group(FiniteGroup::symmetric3()), 512).size() == 112);
    CHECK_THROWS_AS(ExelMonoid(group(FiniteGroup::cyclic(8)), 512), Error);
}

TEST_CASE("Exel relations hold on words") {
    const FiniteGroup S3 = FiniteGroup::symmetric3();
    for (int g = 0; g < 6; ++g) {
        const int gi = S3.inv(g);
        CHECK(word_to_exel(S3, {gen(g), gen(gi), gen(g)}) == word_to_exel(S3, {gen(g)}));
        for (int h = 0; h < 6; ++h) {
            CHECK(word_to_exel(S3, {gen(gi), gen(g), gen(h)}) == word_to_exel(S3, {gen(gi), gen(S3.mul(g, h))}));
            CHECK(word_to_exel(S3, {gen(g), gen(h), gen(S3.inv(h))}) == word_to_exel(S3, {gen(S3.mul(g, h)), gen(S3.inv(h))}));
        }
    }
}

TEST_CASE("Exel star reverses products") {
    GroupPtr G = group(FiniteGroup::klein_four());
    ExelMonoid S(G, 512);
    for (std::size_t x = 0; x < S.size(); ++x) {
        CHECK(S.star(S.star(x)) == x);
        for (std::size_t y = 0; y < S.size(); ++y) CHECK(S.star(S.mul(x, y)) == S.mul(S.star(y), S.star(x)));
    }
}
