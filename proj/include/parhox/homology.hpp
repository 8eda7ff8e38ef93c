#pragma once

#include <cstddef>
#include <memory>
#include <vector>

#include "parhox/algebra.hpp"
#include "parhox/partial_action.hpp"
#include "parhox/partial_group_algebra.hpp"

namespace parhox {

// Column-sparse matrix for the large differentials.
struct SparseMatrix {
    FieldSpec field;
    std::size_t rows = 0, cols = 0;
    std::vector<SparseVec> columns;

    SparseMatrix() = default;
    SparseMatrix(const FieldSpec& f, std::size_t r, std::size_t c) : field(f), rows(r), cols(c), columns(c) {}
    static SparseMatrix from_dense(const Matrix& m);
    Matrix dense() const;
    SparseVec apply(const SparseVec& v) const;
    Vec apply(const Vec& v) const;
    SparseMatrix transpose() const;
};

std::size_t rank(const SparseMatrix& m);
std::vector<Vec> kernel(const SparseMatrix& m);
bool product_is_zero(const SparseMatrix& a, const SparseMatrix& b);  // a * b == 0

// d[n]: C_n -> C_{n-1}; d[0] is the zero map out of C_0.
struct ChainComplex {
    FieldSpec field;
    std::vector<std::size_t> dims;
    std::vector<SparseMatrix> d;

    std::size_t top() const { return dims.size() - 1; }
    ValidationReport check() const;
    // dim H_n for n < top(); the top degree lacks its incoming differential.
    std::vector<std::size_t> homology_dims() const;
};

// delta[n]: C^n -> C^{n+1} for n < top().
struct CochainComplex {
    FieldSpec field;
    std::vector<std::size_t> dims;
    std::vector<SparseMatrix> delta;

    std::size_t top() const { return dims.size() - 1; }
    ValidationReport check() const;
    std::vector<std::size_t> cohomology_dims() const;  // n < top()
};

// ker(out) / im(in) with representatives; dense, for the small spaces that carry actions.
class HomologySpace {
public:
    HomologySpace(const SparseMatrix& out, const SparseMatrix& in, std::size_t dim);
    std::size_t dim() const { return solver_ ? solver_->size() : 0; }
    Vec representative(std::size_t k) const;          // cycle in C_n
    std::optional<Vec> coords(const Vec& cycle) const;  // class of a cycle
    Matrix induced(const Matrix& chain_map) const;    // chain_map must preserve cycles and boundaries

private:
    std::shared_ptr<QuotientSpace> quotient_;
    std::shared_ptr<SpanSolver> solver_;
    std::vector<Vec> reps_;
};

// Hochschild chains M (x) Rbar^{(x)n}, Rbar = R / k1 when normalized; index m * r^n + (k_1 ... k_n) in base r.
ChainComplex bar_complex(const StructureAlgebra& R, const Bimodule& M, std::size_t top, bool normalized,
                         std::size_t cap = 200000);
// Cochains Hom(Rbar^{(x)n}, M) with the same indexing; delta is the transpose of the chain differential of M*.
CochainComplex bar_cochain_complex(const StructureAlgebra& R, const Bimodule& M, std::size_t top, bool normalized,
                                   std::size_t cap = 200000);
Bimodule dual_bimodule(const Bimodule& M);

enum class GeneratorOrder { Forward, Reverse };

// Free resolution of a left module Y: maps[0] is the augmentation S^{r_0} -> Y, maps[k] = d_k: S^{r_k} -> S^{r_{k-1}}.
struct FreeResolution {
    AlgebraPtr ring;
    std::vector<std::size_t> ranks;
    std::vector<std::vector<Vec>> generators;  // level 0 in Y, level k in S^{r_{k-1}}
    std::vector<SparseMatrix> maps;
    ValidationReport exactness;
};

FreeResolution resolve(const AlgebraPtr& S, const Module& Y, std::size_t length, GeneratorOrder order,
                       std::size_t cap = 200000);

// Tor_n^S(X, Y) for a right module X and left module Y, resolving Y (or X over the opposite ring).
enum class TorRoute { ResolveLeft, ResolveRight };
std::vector<std::size_t> tor_dims(const AlgebraPtr& S, const Module& X, const Module& Y, std::size_t max_n,
                                  GeneratorOrder order = GeneratorOrder::Forward,
                                  TorRoute route = TorRoute::ResolveLeft, std::size_t cap = 200000);
// Ext^n_S(Y, Z) for left modules, resolving Y.
std::vector<std::size_t> ext_dims(const AlgebraPtr& S, const Module& Y, const Module& Z, std::size_t max_n,
                                  GeneratorOrder order = GeneratorOrder::Forward, std::size_t cap = 200000);

std::vector<std::size_t> hochschild_homology_bar(const StructureAlgebra& R, const Bimodule& M, std::size_t max_n,
                                                 bool normalized = true, std::size_t cap = 200000);
std::vector<std::size_t> hochschild_homology_resolution(const StructureAlgebra& R, const Bimodule& M,
                                                        std::size_t max_n,
                                                        GeneratorOrder order = GeneratorOrder::Forward,
                                                        std::size_t cap = 200000);
std::vector<std::size_t> hochschild_cohomology_bar(const StructureAlgebra& R, const Bimodule& M, std::size_t max_n,
                                                   bool normalized = true, std::size_t cap = 200000);
std::vector<std::size_t> hochschild_cohomology_resolution(const StructureAlgebra& R, const Bimodule& M,
                                                          std::size_t max_n,
                                                          GeneratorOrder order = GeneratorOrder::Forward,
                                                          std::size_t cap = 200000);

// B as a right partial-group-algebra module, b . [g] = [g^-1] b [g], and as a left one, [g] . b = [g] b [g^-1].
Module idempotent_module(const TwistedPartialGroupAlgebra& kpar, Side side);
std::vector<std::size_t> partial_homology(const TwistedPartialGroupAlgebra& kpar, const Module& X, std::size_t max_n,
                                          GeneratorOrder order = GeneratorOrder::Forward, std::size_t cap = 200000);
std::vector<std::size_t> partial_cohomology(const TwistedPartialGroupAlgebra& kpar, const Module& X,
                                            std::size_t max_n, GeneratorOrder order = GeneratorOrder::Forward,
                                            std::size_t cap = 200000);

// Left module over the partial group algebra from operators T_g: (A, g) acts as prod_{x in A} T_x T_{x^-1} * T_g.
Module module_from_operators(const TwistedPartialGroupAlgebra& kpar, const std::vector<Matrix>& T);

// Restriction of a crossed-product bimodule to the base algebra through a -> a delta_1.
Bimodule restrict_to_base(const CrossedProduct& cp, const Bimodule& M);
// [g] . m = xi(g) (1_g delta_g) m (1_{g^-1} delta_{g^-1})
Matrix coefficient_action(const CrossedProduct& cp, const Bimodule& M, const std::vector<Scalar>& xi, int g);

// Diagonal action on the unnormalized bar complex of A with coefficients in M; flagged as a chain-level model.
struct EquivariantChains {
    ChainComplex chains;
    std::vector<std::vector<Matrix>> action;  // action[q][g]
    ValidationReport report;
};

// Throws EquivarianceFailure when a gate fails.
EquivariantChains diagonal_chain_action(const CrossedProduct& cp, const Bimodule& M, const std::vector<Scalar>& xi,
                                        const PartialFactorSet& sigma2, std::size_t top, std::size_t cap = 200000);
std::vector<Matrix> action_on_homology(const EquivariantChains& ec, std::size_t q);

struct EquivariantCochains {
    CochainComplex cochains;
    std::vector<std::vector<Matrix>> action;
    ValidationReport report;
};

// (T_g f)(a_1 .. a_q) = [g] . f([g^-1] a_1, ..., [g^-1] a_q)
EquivariantCochains diagonal_cochain_action(const CrossedProduct& cp, const Bimodule& M,
                                            const std::vector<Scalar>& xi, const PartialFactorSet& sigma2,
                                            std::size_t top, std::size_t cap = 200000);
std::vector<Matrix> action_on_cohomology(const EquivariantCochains& ec, std::size_t q);

// Hom_{A^e}(A, M) = {m : a m = m a} with [g] acting by coefficient_action.
struct InvariantsModule {
    SubModule carrier;  // over the partial group algebra
    std::vector<Matrix> operators;
};
InvariantsModule hom_A_module_structure(const CrossedProduct& cp, const Bimodule& M, const std::vector<Scalar>& xi,
                                        const TwistedPartialGroupAlgebra& kpar);

// Partial-representation relations with factor set sigma for operators T_g.
ValidationReport check_operator_relations(const FiniteGroup& G, const std::vector<Matrix>& T,
                                          const PartialFactorSet& sigma);

}  // namespace parhox
