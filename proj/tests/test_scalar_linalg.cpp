#include <doctest.h>

#include "support.hpp"

using namespace testing;

TEST_CASE("prime field arithmetic") {
    const FieldSpec F7 = FieldSpec::prime(7);
    CHECK(Scalar::parse(F7, "1/3") == Scalar(F7, 5));  // 3 * 5 = 15 = 1 mod 7
    CHECK(Scalar(F7, -1) == Scalar(F7, 6));
    CHECK((Scalar(F7, 3) * Scalar(F7, 5)).is_one());
    CHECK(power(Scalar(F7, 3), 6).is_one());  // Fermat
    for (long a = 1; a < 7; ++a) CHECK((Scalar(F7, a) * Scalar(F7, a).inverse()).is_one());
    CHECK_THROWS_AS(Scalar::zero(F7).inverse(), Error);
}

TEST_CASE("rational arithmetic and parsing") {
    const Scalar a = Scalar::parse(QQ, "1/3"), b = Scalar::parse(QQ, "-2/6");
    CHECK((a + b).is_zero());
    CHECK((a * Scalar(QQ, 3)).is_one());
    CHECK(Scalar::parse(QQ, "4/2") == Scalar(QQ, 2));
    CHECK_THROWS_AS(Scalar::parse(QQ, "1/0"), Error);
}

TEST_CASE("mixing fields is refused") {
    CHECK_THROWS_AS(Scalar(QQ, 1) + Scalar(FieldSpec::prime(5), 1), Error);
}

TEST_CASE("square roots") {
    const FieldSpec F7 = FieldSpec::prime(7);
    CHECK(square_root(Scalar(F7, 4)).has_value());
    CHECK_FALSE(square_root(Scalar(F7, 3)).has_value());  // squares mod 7: 1, 2, 4
    auto r = square_root(Scalar::parse(QQ, "9/4"));
    REQUIRE(r.has_value());
    CHECK(*r * *r == Scalar::parse(QQ, "9/4"));
    CHECK_FALSE(square_root(Scalar(QQ, 2)).has_value());
}

TEST_CASE("primality") {
    const std::vector<std::uint64_t> primes{2, 3, 5, 7, 11, 13, 101, 65537};
    for (auto p : primes) CHECK(is_prime(p));
    for (std::uint64_t n : {0, 1, 4, 9, 15, 91, 65536}) CHECK_FALSE(is_prime(n));
}

TEST_CASE("rank and kernel agree on random matrices") {
    std::mt19937_64 rng(17);
    for (const FieldSpec& f : {QQ, FieldSpec::prime(5)})
        for (int trial = 0; trial < 20; ++trial) {
            const std::size_t r = 1 + rng() % 7, c = 1 + rng() % 7;
            Matrix m = random_matrix(f, r, c, rng, 1);
            auto K = kernel(m);
            CHECK(K.size() + rank(m) == c);
            for (const auto& v : K) CHECK(is_zero(m.apply(v)));
            CHECK(rank(m) == rank(m.transpose()));
        }
}

TEST_CASE("sparse null space matches the dense one") {
    std::mt19937_64 rng(3);
    for (int trial = 0; trial < 20; ++trial) {
        const std::size_t r = 1 + rng() % 8, c = 1 + rng() % 10;
        Matrix m = random_matrix(QQ, r, c, rng);
        Echelon e(QQ, c);
        for (std::size_t i = 0; i < r; ++i) e.insert(m.row(i));
        auto sparse = e.sparse_null_space();
        auto dense = e.null_space();
        REQUIRE(sparse.size() == dense.size());
        for (std::size_t k = 0; k < dense.size(); ++k) {
            CHECK(to_dense(QQ, c, sparse[k]) == dense[k]);
            CHECK(is_zero(m.apply(dense[k])));
        }
    }
}

TEST_CASE("quotient space projects relations to zero") {
    std::mt19937_64 rng(5);
    Matrix m = random_matrix(QQ, 3, 6, rng, 1);
    std::vector<Vec> rel;
    for (std::size_t i = 0; i < 3; ++i) rel.push_back(m.row(i));
    QuotientSpace q(QQ, 6, rel);
    CHECK(q.dim() == 6 - rank(m));
    for (const auto& v : rel) CHECK(is_zero(q.project(v)));
    for (std::size_t k = 0; k < q.dim(); ++k) CHECK(q.project(q.lift(k)) == unit_vec(QQ, q.dim(), k));
}

TEST_CASE("solve finds preimages exactly when they exist") {
    Matrix m(QQ, 2, 2);
    m.at(0, 0) = Scalar(QQ, 1);
    m.at(1, 0) = Scalar(QQ, 2);
    auto x = solve(m, {Scalar(QQ, 3), Scalar(QQ, 6)});
    REQUIRE(x.has_value());
    CHECK(m.apply(*x) == Vec{Scalar(QQ, 3), Scalar(QQ, 6)});
    CHECK_FALSE(solve(m, {Scalar(QQ, 1), Scalar(QQ, 1)}).has_value());
}
