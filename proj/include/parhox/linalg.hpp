#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "parhox/scalar.hpp"

namespace parhox {

using Vec = std::vector<Scalar>;
using SparseVec = std::vector<std::pair<std::size_t, Scalar>>;  // sorted by index

Vec zero_vec(const FieldSpec& f, std::size_t n);
Vec unit_vec(const FieldSpec& f, std::size_t n, std::size_t i);
bool is_zero(const Vec& v);
Vec add(const Vec& a, const Vec& b);
Vec sub(const Vec& a, const Vec& b);
Vec scale(const Scalar& c, const Vec& v);
void axpy(Vec& y, const Scalar& c, const Vec& x);  // y += c x
SparseVec to_sparse(const Vec& v);
Vec to_dense(const FieldSpec& f, std::size_t n, const SparseVec& v);

class Matrix {
public:
    Matrix() = default;
    Matrix(const FieldSpec& f, std::size_t rows, std::size_t cols);

    static Matrix identity(const FieldSpec& f, std::size_t n);
    static Matrix from_columns(const FieldSpec& f, std::size_t rows, const std::vector<Vec>& cols);

    std::size_t rows() const { return r_; }
    std::size_t cols() const { return c_; }
    const FieldSpec& field() const { return f_; }

    Scalar& at(std::size_t i, std::size_t j) { return a_[i * c_ + j]; }
    const Scalar& at(std::size_t i, std::size_t j) const { return a_[i * c_ + j]; }

    Vec column(std::size_t j) const;
    Vec row(std::size_t i) const;
    Vec apply(const Vec& v) const;
    Matrix operator*(const Matrix& o) const;
    Matrix operator+(const Matrix& o) const;
    Matrix operator-(const Matrix& o) const;
    Matrix scaled(const Scalar& c) const;
    Matrix transpose() const;
    bool operator==(const Matrix& o) const;
    bool operator!=(const Matrix& o) const { return !(*this == o); }
    bool is_zero() const;
    void add_scaled(const Scalar& c, const Matrix& o);  // this += c o
    void set_block(std::size_t r0, std::size_t c0, const Matrix& b);

private:
    FieldSpec f_;
    std::size_t r_ = 0, c_ = 0;
    std::vector<Scalar> a_;
};

struct Rref {
    Matrix reduced;
    std::vector<std::size_t> pivots;  // pivot column per nonzero row
};

Rref rref(Matrix m);
std::size_t rank(const Matrix& m);
std::vector<Vec> kernel(const Matrix& m);            // basis of {x : m x = 0}
std::optional<Vec> solve(const Matrix& m, const Vec& b);

// Incremental row-echelon span with leading-index pivots; vectors stay sparse.
class Echelon {
public:
    Echelon(const FieldSpec& f, std::size_t ambient) : f_(f), n_(ambient) {}

    bool insert(const Vec& v);
    bool insert(const SparseVec& v);
    bool contains(const Vec& v) const;
    // Eliminates every pivot coordinate; the remainder lives on non-pivot indices.
    SparseVec reduce(const SparseVec& v) const;
    std::size_t rank() const { return pivots_.size(); }
    std::size_t ambient() const { return n_; }
    bool is_pivot(std::size_t i) const { return pivots_.count(i) != 0; }
    std::vector<std::size_t> non_pivots() const;
    // Fully reduced basis, ordered by leading index.
    std::vector<Vec> reduced_basis() const;
    std::vector<SparseVec> sparse_reduced_basis() const;
    // Basis of {x : r . x = 0 for every inserted row r}, one vector per non-pivot index.
    std::vector<Vec> null_space() const;
    std::vector<SparseVec> sparse_null_space() const;

private:
    FieldSpec f_;
    std::size_t n_;
    std::map<std::size_t, SparseVec> pivots_;
};

// Coordinates with respect to a fixed list of linearly independent vectors.
class SpanSolver {
public:
    SpanSolver(const FieldSpec& f, std::size_t ambient, std::vector<Vec> basis);
    std::optional<Vec> coords(const Vec& v) const;
    Vec combine(const Vec& c) const;
    std::size_t size() const { return basis_.size(); }
    const std::vector<Vec>& basis() const { return basis_; }

private:
    FieldSpec f_;
    std::size_t n_;
    std::vector<Vec> basis_;
    std::vector<std::size_t> rows_;
    Matrix inv_;
};

// V / U with the complement spanned by the standard vectors at non-pivot indices of U.
class QuotientSpace {
public:
    QuotientSpace(const FieldSpec& f, std::size_t ambient, const std::vector<Vec>& relations);
    std::size_t dim() const { return keep_.size(); }
    std::size_t ambient() const { return ech_.ambient(); }
    Vec project(const Vec& v) const;
    Vec lift(std::size_t k) const;  // standard representative of quotient basis vector k
    const std::vector<std::size_t>& kept() const { return keep_; }
    Matrix projection_matrix() const;
    const Echelon& relations() const { return ech_; }

private:
    FieldSpec f_;
    Echelon ech_;
    std::vector<std::size_t> keep_;
    std::vector<long> pos_;
};

}  // namespace parhox
