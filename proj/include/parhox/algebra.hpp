#pragma once

#include <memory>
#include <optional>
#include <string>
#include <tuple>
#include <vector>

#include "parhox/linalg.hpp"
#include "parhox/report.hpp"

namespace parhox {

// Finite-dimensional associative unital algebra given by sparse structure constants.
class StructureAlgebra {
public:
    StructureAlgebra() = default;
    StructureAlgebra(const FieldSpec& f, std::vector<std::string> labels, std::vector<SparseVec> products, Vec unit);
    static StructureAlgebra from_triples(const FieldSpec& f, std::vector<std::string> labels,
                                         const std::vector<std::tuple<std::size_t, std::size_t, std::size_t, Scalar>>& sc,
                                         Vec unit);

    std::size_t dim() const { return d_; }
    const FieldSpec& field() const { return f_; }
    const std::vector<std::string>& labels() const { return labels_; }
    const std::string& label(std::size_t i) const { return labels_[i]; }
    const Vec& unit() const { return unit_; }
    const SparseVec& product(std::size_t i, std::size_t j) const { return prod_[i * d_ + j]; }

    Vec basis(std::size_t i) const { return unit_vec(f_, d_, i); }
    Vec zero() const { return zero_vec(f_, d_); }
    Vec multiply(const Vec& a, const Vec& b) const;
    Vec multiply(const Vec& a, const Vec& b, const Vec& c) const { return multiply(multiply(a, b), c); }
    Matrix left_matrix(const Vec& a) const;   // x -> a x
    Matrix right_matrix(const Vec& a) const;  // x -> x a
    bool is_commutative() const;
    bool operator==(const StructureAlgebra& o) const;

private:
    FieldSpec f_;
    std::size_t d_ = 0;
    std::vector<std::string> labels_;
    std::vector<SparseVec> prod_;
    Vec unit_;
};

using AlgebraPtr = std::shared_ptr<const StructureAlgebra>;

ValidationReport validate_algebra(const StructureAlgebra& A);
StructureAlgebra opposite(const StructureAlgebra& A);
// Basis e_i (x) e_j at index i*d+j, product (a(x)b)(c(x)d) = ac (x) db.
StructureAlgebra enveloping(const StructureAlgebra& A, std::size_t cap = 1024);

struct AlgebraHom {
    AlgebraPtr source;
    AlgebraPtr target;
    Matrix map;  // target.dim x source.dim; column j is the image of basis j
    Vec apply(const Vec& v) const { return map.apply(v); }
};

ValidationReport validate_hom(const AlgebraHom& f, bool require_unital = true);

struct Subalgebra {
    AlgebraPtr algebra;      // structure constants in the subalgebra basis
    std::vector<Vec> basis;  // ambient coordinates, fully reduced
    Matrix inclusion;        // ambient.dim x sub.dim
    std::shared_ptr<const SpanSolver> solver;
    std::optional<Vec> coords(const Vec& ambient_vector) const { return solver->coords(ambient_vector); }
};

Subalgebra subalgebra_generated(const StructureAlgebra& A, const std::vector<Vec>& gens);

struct Quotient {
    std::vector<Vec> ideal_basis;
    AlgebraPtr algebra;
    std::shared_ptr<const QuotientSpace> space;
    Matrix projection;  // quotient.dim x ambient.dim
};

// Two-sided ideal generated by gens and the quotient on the lowest-index complement.
// Throws PreconditionFailed when the ideal contains 1.
Quotient ideal_and_quotient(const StructureAlgebra& A, const std::vector<Vec>& gens);

std::vector<Vec> orthogonalize_idempotents(const StructureAlgebra& A, const std::vector<Vec>& gens);

struct RegularityWitness {
    bool regular = false;
    std::vector<Vec> orthogonal_basis;
    std::vector<Vec> quasi_inverses;  // y with x y x = x for every basis vector x of A
};

RegularityWitness is_von_neumann_regular_idempotent_generated(const StructureAlgebra& A,
                                                             const std::vector<Vec>& idempotent_gens);

// Element of A (x) A^op (index i*d+j) with multiplication 1 and a e = e a; none if A is not separable.
std::optional<Vec> separability_idempotent(const StructureAlgebra& A);

enum class Side { Left, Right };

// One-sided module: act[i] is the matrix of basis element i.
struct Module {
    FieldSpec field;
    std::size_t dim = 0;
    Side side = Side::Left;
    std::vector<Matrix> act;

    Matrix action(const Vec& a) const;
    Vec apply(const Vec& a, const Vec& x) const { return action(a).apply(x); }
};

struct Bimodule {
    FieldSpec field;
    std::size_t dim = 0;
    std::vector<Matrix> left, right;

    Module left_module() const { return {field, dim, Side::Left, left}; }
    Module right_module() const { return {field, dim, Side::Right, right}; }
};

ValidationReport validate_module(const StructureAlgebra& A, const Module& M);
ValidationReport validate_bimodule(const StructureAlgebra& A, const Bimodule& M);

Module regular_module(const StructureAlgebra& A, Side side);
Bimodule regular_bimodule(const StructureAlgebra& A);
// a m b  <->  (a (x) b) m
Module bimodule_to_enveloping(const StructureAlgebra& A, const Bimodule& M);
Bimodule enveloping_to_bimodule(const StructureAlgebra& A, const Module& M);
// m (a (x) b) = b m a
Module bimodule_to_enveloping_right(const StructureAlgebra& A, const Bimodule& M);
// Same matrices, viewed over the opposite algebra.
Module flip_side(const Module& M);
Module restrict_along(const AlgebraHom& f, const Module& M);

// Closes an action given on generating elements to all basis elements; throws ActionMismatch if inconsistent.
Module close_generator_action(const StructureAlgebra& A, Side side, std::size_t dim, const std::vector<Vec>& gens,
                              const std::vector<Matrix>& mats);

// X (x)_R Y for a right module X and a left module Y.
struct TensorProduct {
    FieldSpec field;
    std::size_t mx = 0, my = 0;
    std::shared_ptr<const QuotientSpace> space;
    std::size_t dim() const { return space->dim(); }
    Vec element(const Vec& x, const Vec& y) const;  // class of x (x) y
    Vec project(const Vec& ambient) const { return space->project(ambient); }
    // Matrix on the quotient induced by f (x) g; f acts on X, g on Y.
    Matrix induced(const Matrix& f, const Matrix& g) const;
    bool preserves_relations(const Matrix& f, const Matrix& g) const;
};

TensorProduct tensor_over(const StructureAlgebra& R, const Module& X, const Module& Y);

// Kronecker product: (f (x) g)(e_i (x) e_j) = f e_i (x) g e_j with index i*dimY+j.
Matrix kron(const Matrix& f, const Matrix& g);

// Basis of Hom_R(X, Y) for two modules on the same side.
std::vector<Matrix> hom_over(const StructureAlgebra& R, const Module& X, const Module& Y);
bool is_module_map(const Module& X, const Module& Y, const Matrix& f);

struct SubModule {
    Module module;
    Matrix inclusion;  // ambient.dim x sub.dim
};

struct QuotientModule {
    Module module;
    std::shared_ptr<const QuotientSpace> space;
};

// Submodule spanned by vectors (must be invariant) and quotient modules.
SubModule submodule(const Module& M, const std::vector<Vec>& span);
QuotientModule quotient_module(const Module& M, const std::vector<Vec>& relations);
SubModule kernel_module(const Module& X, const Module& Y, const Matrix& f);
QuotientModule cokernel_module(const Module& X, const Module& Y, const Matrix& f);

// Image of each action matrix on an invariant quotient space.
Matrix induced_on_quotient(const QuotientSpace& q, const Matrix& f);
// Matrix of f restricted to an invariant subspace with the given basis.
Matrix induced_on_subspace(const SpanSolver& s, const Matrix& f);

}  // namespace parhox
