#include "parhox/homology.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <string>

#include "parhox/error.hpp"

namespace parhox {

namespace {

using Acc = std::map<std::size_t, Scalar>;

std::size_t idx(int g) { return static_cast<std::size_t>(g); }

void add_to(Acc& acc, std::size_t k, const Scalar& c) {
    if (c.is_zero()) return;
    auto [it, fresh] = acc.try_emplace(k, c);
    if (!fresh) {
        it->second += c;
        if (it->second.is_zero()) acc.erase(it);
    }
}

SparseVec flatten(const Acc& acc) { return SparseVec(acc.begin(), acc.end()); }

std::size_t checked_power(std::size_t base, std::size_t e, std::size_t factor, std::size_t cap, const char* what) {
    std::size_t out = factor;
    for (std::size_t i = 0; i < e; ++i) {
        if (base != 0 && out > cap / base) fail(ErrorKind::SizeLimit, std::string(what) + " exceeds the size cap");
        out *= base;
    }
    if (out > cap) fail(ErrorKind::SizeLimit, std::string(what) + " exceeds the size cap");
    return out;
}

SparseMatrix zero_map(const FieldSpec& f, std::size_t rows, std::size_t cols) { return SparseMatrix(f, rows, cols); }

Matrix tensor_power(const Matrix& m, std::size_t q) {
    Matrix out = Matrix::identity(m.field(), 1);
    for (std::size_t i = 0; i < q; ++i) out = kron(out, m);
    return out;
}

// s_a . v for v in S^r, blockwise.
SparseVec left_multiply(const StructureAlgebra& S, std::size_t a, const Vec& v) {
    const std::size_t d = S.dim();
    Acc acc;
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (v[i].is_zero()) continue;
        const std::size_t block = i / d * d;
        for (const auto& [k, c] : S.product(a, i % d)) add_to(acc, block + k, c * v[i]);
    }
    return flatten(acc);
}

Vec block_of(const Vec& v, std::size_t l, std::size_t d) {
    return Vec(v.begin() + static_cast<long>(l * d), v.begin() + static_cast<long>((l + 1) * d));
}

// Greedy S-span of candidates until the target rank is reached.
std::vector<Vec> pick_generators(const FieldSpec& f, std::size_t ambient, std::size_t target,
                                 std::vector<SparseVec> candidates, GeneratorOrder order,
                                 const std::function<std::vector<SparseVec>(const Vec&)>& orbit) {
    if (order == GeneratorOrder::Reverse) std::reverse(candidates.begin(), candidates.end());
    Echelon span(f, ambient);
    std::vector<Vec> gens;
    for (const auto& v : candidates) {
        if (span.rank() == target) break;
        if (span.reduce(v).empty()) continue;
        gens.push_back(to_dense(f, ambient, v));
        for (const auto& w : orbit(gens.back())) span.insert(w);
    }
    if (span.rank() != target) fail(ErrorKind::PropertyFailure, "resolution: candidates do not generate");
    return gens;
}

ValidationReport relations_report(const std::vector<Matrix>& T, const FiniteGroup& G, const PartialFactorSet& s) {
    return check_operator_relations(G, T, s);
}

}  // namespace

SparseMatrix SparseMatrix::from_dense(const Matrix& m) {
    SparseMatrix out(m.field(), m.rows(), m.cols());
    for (std::size_t j = 0; j < m.cols(); ++j) out.columns[j] = to_sparse(m.column(j));
    return out;
}

Matrix SparseMatrix::dense() const {
    Matrix out(field, rows, cols);
    for (std::size_t j = 0; j < cols; ++j)
        for (const auto& [i, c] : columns[j]) out.at(i, j) = c;
    return out;
}

SparseVec SparseMatrix::apply(const SparseVec& v) const {
    Acc acc;
    for (const auto& [j, x] : v)
        for (const auto& [i, c] : columns[j]) add_to(acc, i, c * x);
    return flatten(acc);
}

Vec SparseMatrix::apply(const Vec& v) const { return to_dense(field, rows, apply(to_sparse(v))); }

SparseMatrix SparseMatrix::transpose() const {
    SparseMatrix out(field, cols, rows);
    for (std::size_t j = 0; j < cols; ++j)
        for (const auto& [i, c] : columns[j]) out.columns[i].emplace_back(j, c);
    return out;
}

std::size_t rank(const SparseMatrix& m) {
    Echelon e(m.field, m.rows);
    for (const auto& c : m.columns)
        if (!c.empty()) e.insert(c);
    return e.rank();
}

std::vector<Vec> kernel(const SparseMatrix& m) {
    Echelon e(m.field, m.cols);
    for (const auto& r : m.transpose().columns)
        if (!r.empty()) e.insert(r);
    return e.null_space();
}

bool product_is_zero(const SparseMatrix& a, const SparseMatrix& b) {
    for (const auto& c : b.columns)
        if (!a.apply(c).empty()) return false;
    return true;
}

ValidationReport ChainComplex::check() const {
    ValidationReport rep;
    if (d.size() != dims.size()) rep.fail("one differential per degree is required");
    for (std::size_t n = 2; n < d.size(); ++n)
        if (!product_is_zero(d[n - 1], d[n])) rep.fail("d_" + std::to_string(n - 1) + " d_" + std::to_string(n) + " != 0");
    return rep;
}

std::vector<std::size_t> ChainComplex::homology_dims() const {
    std::vector<std::size_t> r(dims.size(), 0);
    for (std::size_t n = 1; n < dims.size(); ++n) r[n] = rank(d[n]);
    std::vector<std::size_t> out;
    for (std::size_t n = 0; n + 1 < dims.size(); ++n) out.push_back(dims[n] - r[n] - r[n + 1]);
    return out;
}

ValidationReport CochainComplex::check() const {
    ValidationReport rep;
    for (std::size_t n = 1; n < delta.size(); ++n)
        if (!product_is_zero(delta[n], delta[n - 1]))
            rep.fail("delta^" + std::to_string(n) + " delta^" + std::to_string(n - 1) + " != 0");
    return rep;
}

std::vector<std::size_t> CochainComplex::cohomology_dims() const {
    std::vector<std::size_t> r;
    for (const auto& m : delta) r.push_back(rank(m));
    std::vector<std::size_t> out;
    for (std::size_t n = 0; n + 1 < dims.size(); ++n) out.push_back(dims[n] - r[n] - (n ? r[n - 1] : 0));
    return out;
}

HomologySpace::HomologySpace(const SparseMatrix& out, const SparseMatrix& in, std::size_t dim) {
    const FieldSpec& f = out.field;
    std::vector<Vec> cycles = kernel(out);
    std::vector<Vec> boundaries;
    for (const auto& c : in.columns) boundaries.push_back(to_dense(f, dim, c));
    quotient_ = std::make_shared<QuotientSpace>(f, dim, boundaries);
    Echelon seen(f, quotient_->dim());
    std::vector<Vec> projected;
    for (const auto& z : cycles) {
        Vec p = quotient_->project(z);
        if (seen.insert(p)) {
            reps_.push_back(z);
            projected.push_back(p);
        }
    }
    if (!reps_.empty()) solver_ = std::make_shared<SpanSolver>(f, quotient_->dim(), projected);
}

Vec HomologySpace::representative(std::size_t k) const { return reps_.at(k); }

std::optional<Vec> HomologySpace::coords(const Vec& cycle) const {
    if (!solver_) {
        if (is_zero(quotient_->project(cycle))) return Vec{};
        return std::nullopt;
    }
    return solver_->coords(quotient_->project(cycle));
}

Matrix HomologySpace::induced(const Matrix& chain_map) const {
    const FieldSpec f = chain_map.field();
    Matrix out(f, dim(), dim());
    for (std::size_t k = 0; k < dim(); ++k) {
        auto c = coords(chain_map.apply(reps_[k]));
        if (!c) fail(ErrorKind::PreconditionFailed, "map does not preserve cycles modulo boundaries");
        for (std::size_t r = 0; r < dim(); ++r) out.at(r, k) = (*c)[r];
    }
    return out;
}

ChainComplex bar_complex(const StructureAlgebra& R, const Bimodule& M, std::size_t top, bool normalized,
                         std::size_t cap) {
    const FieldSpec& f = R.field();
    const std::size_t d = R.dim();
    std::vector<std::size_t> kept;
    std::shared_ptr<QuotientSpace> bar;
    if (normalized) {
        bar = std::make_shared<QuotientSpace>(f, d, std::vector<Vec>{R.unit()});
        kept = bar->kept();
    } else {
        for (std::size_t i = 0; i < d; ++i) kept.push_back(i);
    }
    const std::size_t r = kept.size();

    std::vector<SparseVec> pair(r * r);
    for (std::size_t k = 0; k < r; ++k)
        for (std::size_t l = 0; l < r; ++l) {
            const SparseVec& p = R.product(kept[k], kept[l]);
            pair[k * r + l] = normalized ? to_sparse(bar->project(to_dense(f, d, p))) : p;
        }
    std::vector<std::vector<SparseVec>> right(r), left(r);
    for (std::size_t k = 0; k < r; ++k)
        for (std::size_t m = 0; m < M.dim; ++m) {
            right[k].push_back(to_sparse(M.right[kept[k]].column(m)));
            left[k].push_back(to_sparse(M.left[kept[k]].column(m)));
        }

    ChainComplex C;
    C.field = f;
    std::vector<std::size_t> pw{1};
    for (std::size_t n = 0; n <= top; ++n) {
        if (n) pw.push_back(pw.back() * r);
        C.dims.push_back(checked_power(r, n, M.dim, cap, "bar complex"));
    }
    C.d.push_back(zero_map(f, 0, C.dims[0]));
    const Scalar one = Scalar::one(f);
    std::vector<std::size_t> dig;
    for (std::size_t n = 1; n <= top; ++n) {
        SparseMatrix D(f, C.dims[n - 1], C.dims[n]);
        dig.assign(n, 0);
        for (std::size_t c = 0; c < C.dims[n]; ++c) {
            const std::size_t m = c / pw[n];
            std::size_t t = c % pw[n];
            for (std::size_t i = n; i-- > 0;) {
                dig[i] = t % r;
                t /= r;
            }
            const std::size_t tail = c % pw[n] % pw[n - 1];  // digits 2..n
            const std::size_t head = c % pw[n] / r;          // digits 1..n-1
            Acc acc;
            for (const auto& [mm, x] : right[dig[0]][m]) add_to(acc, mm * pw[n - 1] + tail, x);
            Scalar sign = one;
            for (std::size_t i = 0; i + 1 < n; ++i) {
                sign = -sign;
                std::size_t pre = 0;
                for (std::size_t j = 0; j < i; ++j) pre = pre * r + dig[j];
                std::size_t post = 0, post_w = 1;
                for (std::size_t j = i + 2; j < n; ++j) {
                    post = post * r + dig[j];
                    post_w *= r;
                }
                for (const auto& [p, x] : pair[dig[i] * r + dig[i + 1]])
                    add_to(acc, m * pw[n - 1] + ((pre * r + p) * post_w + post), sign * x);
            }
            sign = -sign;
            for (const auto& [mm, x] : left[dig[n - 1]][m]) add_to(acc, mm * pw[n - 1] + head, sign * x);
            D.columns[c] = flatten(acc);
        }
        C.d.push_back(std::move(D));
    }
    return C;
}

Bimodule dual_bimodule(const Bimodule& M) {
    Bimodule out{M.field, M.dim, {}, {}};
    for (const auto& m : M.right) out.left.push_back(m.transpose());
    for (const auto& m : M.left) out.right.push_back(m.transpose());
    return out;
}

CochainComplex bar_cochain_complex(const StructureAlgebra& R, const Bimodule& M, std::size_t top, bool normalized,
                                   std::size_t cap) {
    ChainComplex C = bar_complex(R, dual_bimodule(M), top, normalized, cap);
    CochainComplex out{C.field, C.dims, {}};
    for (std::size_t n = 0; n < top; ++n) out.delta.push_back(C.d[n + 1].transpose());
    return out;
}

FreeResolution resolve(const AlgebraPtr& S, const Module& Y, std::size_t length, GeneratorOrder order,
                       std::size_t cap) {
    if (Y.side != Side::Left) fail(ErrorKind::PreconditionFailed, "resolve expects a left module");
    const FieldSpec& f = S->field();
    const std::size_t d = S->dim();
    FreeResolution res;
    res.ring = S;

    std::vector<SparseVec> cand;
    for (std::size_t i = 0; i < Y.dim; ++i) cand.push_back({{i, Scalar::one(f)}});
    auto orbit0 = [&](const Vec& y) {
        std::vector<SparseVec> out;
        for (std::size_t a = 0; a < d; ++a) out.push_back(to_sparse(Y.act[a].apply(y)));
        return out;
    };
    res.generators.push_back(pick_generators(f, Y.dim, Y.dim, cand, order, orbit0));
    res.ranks.push_back(res.generators[0].size());
    if (res.ranks[0] * d > cap) fail(ErrorKind::SizeLimit, "resolution exceeds the size cap");
    SparseMatrix eps(f, Y.dim, res.ranks[0] * d);
    for (std::size_t j = 0; j < res.ranks[0]; ++j)
        for (std::size_t a = 0; a < d; ++a) eps.columns[j * d + a] = to_sparse(Y.act[a].apply(res.generators[0][j]));
    res.maps.push_back(std::move(eps));
    if (rank(res.maps[0]) != Y.dim) res.exactness.fail("augmentation is not surjective");

    for (std::size_t k = 1; k <= length; ++k) {
        const SparseMatrix& prev = res.maps[k - 1];
        const std::size_t N = prev.cols;
        std::vector<SparseVec> K;
        if (N) {
            Echelon e(f, N);
            for (const auto& r : prev.transpose().columns)
                if (!r.empty()) e.insert(r);
            K = e.sparse_null_space();
        }
        std::vector<Vec> gens;
        if (!K.empty()) {
            auto orbit = [&](const Vec& v) {
                std::vector<SparseVec> out;
                for (std::size_t a = 0; a < d; ++a) out.push_back(left_multiply(*S, a, v));
                return out;
            };
            gens = pick_generators(f, N, K.size(), K, order, orbit);
        }
        if (gens.size() * d > cap) fail(ErrorKind::SizeLimit, "resolution exceeds the size cap");
        SparseMatrix D(f, N, gens.size() * d);
        for (std::size_t j = 0; j < gens.size(); ++j)
            for (std::size_t a = 0; a < d; ++a) D.columns[j * d + a] = left_multiply(*S, a, gens[j]);
        if (rank(D) != K.size()) res.exactness.fail("not exact at level " + std::to_string(k - 1));
        if (!product_is_zero(prev, D)) res.exactness.fail("maps do not compose to zero at level " + std::to_string(k));
        res.ranks.push_back(gens.size());
        res.generators.push_back(std::move(gens));
        res.maps.push_back(std::move(D));
    }
    if (!res.exactness.ok()) fail(ErrorKind::PropertyFailure, "resolution: " + res.exactness.violations.front());
    return res;
}

std::vector<std::size_t> tor_dims(const AlgebraPtr& S, const Module& X, const Module& Y, std::size_t max_n,
                                  GeneratorOrder order, TorRoute route, std::size_t cap) {
    if (X.side != Side::Right || Y.side != Side::Left)
        fail(ErrorKind::PreconditionFailed, "tor_dims expects a right and a left module");
    if (route == TorRoute::ResolveRight) {
        auto op = std::make_shared<const StructureAlgebra>(opposite(*S));
        return tor_dims(op, flip_side(Y), flip_side(X), max_n, order, TorRoute::ResolveLeft, cap);
    }
    const FieldSpec& f = S->field();
    const std::size_t d = S->dim();
    FreeResolution res = resolve(S, Y, max_n + 1, order, cap);
    const std::size_t dx = X.dim;
    std::vector<std::size_t> dims, ranks(max_n + 2, 0);
    for (std::size_t k = 0; k <= max_n + 1; ++k) dims.push_back(res.ranks[k] * dx);
    for (std::size_t k = 1; k <= max_n + 1; ++k) {
        const std::size_t rk = res.ranks[k], rp = res.ranks[k - 1];
        SparseMatrix D(f, rp * dx, rk * dx);
        for (std::size_t j = 0; j < rk; ++j) {
            std::vector<Matrix> blocks;
            for (std::size_t l = 0; l < rp; ++l) blocks.push_back(X.action(block_of(res.generators[k][j], l, d)));
            for (std::size_t x = 0; x < dx; ++x) {
                SparseVec col;
                for (std::size_t l = 0; l < rp; ++l)
                    for (std::size_t i = 0; i < dx; ++i)
                        if (!blocks[l].at(i, x).is_zero()) col.emplace_back(l * dx + i, blocks[l].at(i, x));
                D.columns[j * dx + x] = std::move(col);
            }
        }
        ranks[k] = rank(D);
    }
    std::vector<std::size_t> out;
    for (std::size_t n = 0; n <= max_n; ++n) out.push_back(dims[n] - ranks[n] - ranks[n + 1]);
    return out;
}

std::vector<std::size_t> ext_dims(const AlgebraPtr& S, const Module& Y, const Module& Z, std::size_t max_n,
                                  GeneratorOrder order, std::size_t cap) {
    if (Y.side != Side::Left || Z.side != Side::Left) fail(ErrorKind::PreconditionFailed, "ext_dims expects left modules");
    const FieldSpec& f = S->field();
    const std::size_t d = S->dim();
    FreeResolution res = resolve(S, Y, max_n + 1, order, cap);
    const std::size_t dz = Z.dim;
    std::vector<std::size_t> dims, ranks(max_n + 1, 0);  // ranks[n] = rank delta^n
    for (std::size_t k = 0; k <= max_n + 1; ++k) dims.push_back(res.ranks[k] * dz);
    for (std::size_t n = 0; n <= max_n; ++n) {
        const std::size_t rk = res.ranks[n + 1], rp = res.ranks[n];
        SparseMatrix D(f, rk * dz, rp * dz);
        for (std::size_t j = 0; j < rk; ++j)
            for (std::size_t l = 0; l < rp; ++l) {
                Matrix blk = Z.action(block_of(res.generators[n + 1][j], l, d));
                for (std::size_t z = 0; z < dz; ++z)
                    for (std::size_t i = 0; i < dz; ++i)
                        if (!blk.at(i, z).is_zero()) D.columns[l * dz + z].emplace_back(j * dz + i, blk.at(i, z));
            }
        ranks[n] = rank(D);
    }
    std::vector<std::size_t> out;
    for (std::size_t n = 0; n <= max_n; ++n) out.push_back(dims[n] - ranks[n] - (n ? ranks[n - 1] : 0));
    return out;
}

std::vector<std::size_t> hochschild_homology_bar(const StructureAlgebra& R, const Bimodule& M, std::size_t max_n,
                                                 bool normalized, std::size_t cap) {
    return bar_complex(R, M, max_n + 1, normalized, cap).homology_dims();
}

std::vector<std::size_t> hochschild_cohomology_bar(const StructureAlgebra& R, const Bimodule& M, std::size_t max_n,
                                                   bool normalized, std::size_t cap) {
    return bar_cochain_complex(R, M, max_n + 1, normalized, cap).cohomology_dims();
}

std::vector<std::size_t> hochschild_homology_resolution(const StructureAlgebra& R, const Bimodule& M,
                                                        std::size_t max_n, GeneratorOrder order, std::size_t cap) {
    auto Re = std::make_shared<const StructureAlgebra>(enveloping(R));
    return tor_dims(Re, bimodule_to_enveloping_right(R, M), bimodule_to_enveloping(R, regular_bimodule(R)), max_n,
                    order, TorRoute::ResolveLeft, cap);
}

std::vector<std::size_t> hochschild_cohomology_resolution(const StructureAlgebra& R, const Bimodule& M,
                                                          std::size_t max_n, GeneratorOrder order, std::size_t cap) {
    auto Re = std::make_shared<const StructureAlgebra>(enveloping(R));
    return ext_dims(Re, bimodule_to_enveloping(R, regular_bimodule(R)), bimodule_to_enveloping(R, M), max_n, order,
                    cap);
}

Module idempotent_module(const TwistedPartialGroupAlgebra& kpar, Side side) {
    const FiniteGroup& G = kpar.group();
    const StructureAlgebra& K = kpar.A();
    std::vector<Vec> ids;
    for (int g = 0; g < G.order(); ++g) ids.push_back(kpar.idempotent(g));
    Subalgebra B = subalgebra_generated(K, ids);
    std::vector<Matrix> mats;
    for (int g = 0; g < G.order(); ++g) {
        const Vec a = kpar.generator(side == Side::Left ? g : G.inv(g));
        const Vec b = kpar.generator(side == Side::Left ? G.inv(g) : g);
        std::vector<Vec> cols;
        for (const auto& w : B.basis) {
            auto c = B.coords(K.multiply(a, w, b));
            if (!c) fail(ErrorKind::PropertyFailure, "conjugation leaves the idempotent subalgebra");
            cols.push_back(*c);
        }
        mats.push_back(Matrix::from_columns(K.field(), B.basis.size(), cols));
    }
    return close_generator_action(K, side, B.basis.size(), kpar.generators(), mats);
}

std::vector<std::size_t> partial_homology(const TwistedPartialGroupAlgebra& kpar, const Module& X, std::size_t max_n,
                                          GeneratorOrder order, std::size_t cap) {
    return tor_dims(kpar.algebra(), idempotent_module(kpar, Side::Right), X, max_n, order, TorRoute::ResolveLeft, cap);
}

std::vector<std::size_t> partial_cohomology(const TwistedPartialGroupAlgebra& kpar, const Module& X,
                                            std::size_t max_n, GeneratorOrder order, std::size_t cap) {
    return ext_dims(kpar.algebra(), idempotent_module(kpar, Side::Left), X, max_n, order, cap);
}

Module module_from_operators(const TwistedPartialGroupAlgebra& kpar, const std::vector<Matrix>& T) {
    const FiniteGroup& G = kpar.group();
    for (int g = 0; g < G.order(); ++g)
        for (int h = 0; h < G.order(); ++h)
            if (!kpar.sigma()(g, h).is_one())
                fail(ErrorKind::PreconditionFailed, "module_from_operators needs the untwisted partial group algebra");
    if (T.size() != idx(G.order())) fail(ErrorKind::InvalidInput, "one operator per group element is required");
    const FieldSpec& f = kpar.A().field();
    const std::size_t n = T[0].rows();
    Module out{f, n, Side::Left, {}};
    for (std::size_t i = 0; i < kpar.dim(); ++i) {
        const ExelElement& e = kpar.monoid().element(kpar.monomial_of(i));
        Matrix m = Matrix::identity(f, n);
        for (int x : elements_of(e.set))
            if (x != 0) m = m * T[idx(x)] * T[idx(G.inv(x))];
        out.act.push_back(m * T[idx(e.g)]);
    }
    ValidationReport rep = validate_module(kpar.A(), out);
    if (!rep.ok()) fail(ErrorKind::ActionMismatch, "operators do not define a module: " + rep.violations.front());
    return out;
}

Bimodule restrict_to_base(const CrossedProduct& cp, const Bimodule& M) {
    const StructureAlgebra& A = cp.data.action.A();
    Bimodule out{M.field, M.dim, {}, {}};
    Module L = M.left_module(), R = M.right_module();
    for (std::size_t i = 0; i < A.dim(); ++i) {
        Vec a = cp.embed(A.basis(i));
        out.left.push_back(L.action(a));
        out.right.push_back(R.action(a));
    }
    return out;
}

Matrix coefficient_action(const CrossedProduct& cp, const Bimodule& M, const std::vector<Scalar>& xi, int g) {
    const auto& act = cp.data.action;
    const int gi = act.G().inv(g);
    Matrix l = M.left_module().action(cp.element(g, act.unit_of[idx(g)]));
    Matrix r = M.right_module().action(cp.element(gi, act.unit_of[idx(gi)]));
    return (l * r).scaled(xi[idx(g)]);
}

ValidationReport check_operator_relations(const FiniteGroup& G, const std::vector<Matrix>& T,
                                          const PartialFactorSet& s) {
    ValidationReport rep;
    const int n = G.order();
    const FieldSpec& f = s.field();
    if (T[0] != Matrix::identity(f, T[0].rows())) rep.fail("[1] does not act as the identity");
    for (int g = 0; g < n && !rep.full(); ++g)
        for (int h = 0; h < n; ++h) {
            const int gi = G.inv(g), hi = G.inv(h), gh = G.mul(g, h);
            const Scalar& c = s(g, h);
            const std::string at = " at (" + G.label(g) + ", " + G.label(h) + ")";
            if (T[idx(gi)] * T[idx(g)] * T[idx(h)] != (T[idx(gi)] * T[idx(gh)]).scaled(c))
                rep.fail("[g^-1][g][h] relation fails" + at);
            if (T[idx(g)] * T[idx(h)] * T[idx(hi)] != (T[idx(gh)] * T[idx(hi)]).scaled(c))
                rep.fail("[g][h][h^-1] relation fails" + at);
            if (c.is_zero() && (!(T[idx(gi)] * T[idx(gh)]).is_zero() || !(T[idx(gh)] * T[idx(hi)]).is_zero()))
                rep.fail("vanishing relation fails" + at);
        }
    return rep;
}

EquivariantChains diagonal_chain_action(const CrossedProduct& cp, const Bimodule& M, const std::vector<Scalar>& xi,
                                        const PartialFactorSet& sigma2, std::size_t top, std::size_t cap) {
    const auto& act = cp.data.action;
    const StructureAlgebra& A = act.A();
    const FiniteGroup& G = act.G();
    const int n = G.order();
    const FieldSpec& f = A.field();
    Bimodule MA = restrict_to_base(cp, M);
    EquivariantChains ec;
    ec.chains = bar_complex(A, MA, top, false, cap);
    for (auto dq : ec.chains.dims)
        if (dq > 1024) fail(ErrorKind::SizeLimit, "chain action: degree too large for dense operators");
    ec.report.note("chain-level model: unnormalized bar complex with the diagonal action");

    std::vector<Matrix> coeff;
    for (int g = 0; g < n; ++g) coeff.push_back(coefficient_action(cp, M, xi, g));
    for (std::size_t q = 0; q <= top; ++q) {
        std::vector<Matrix> Tq;
        for (int g = 0; g < n; ++g) Tq.push_back(kron(coeff[idx(g)], tensor_power(act.theta[idx(g)], q)));
        ec.action.push_back(std::move(Tq));
    }
    for (std::size_t q = 1; q <= top; ++q) {
        Matrix D = ec.chains.d[q].dense();
        for (int g = 0; g < n; ++g)
            if (D * ec.action[q][idx(g)] != ec.action[q - 1][idx(g)] * D)
                ec.report.fail("action does not commute with d_" + std::to_string(q) + " at g = " + G.label(g));
    }
    for (std::size_t q = 0; q <= top; ++q)
        ec.report.merge(relations_report(ec.action[q], G, sigma2), "degree " + std::to_string(q) + ": ");

    // Degree 0: the class of ([g].a)([g].m) agrees with [g].(a m) in M / [A, M].
    std::vector<Vec> comm;
    for (std::size_t i = 0; i < A.dim(); ++i) {
        Matrix c = MA.left[i] - MA.right[i];
        for (std::size_t j = 0; j < M.dim; ++j) comm.push_back(c.column(j));
    }
    QuotientSpace coinv(f, M.dim, comm);
    for (int g = 0; g < n && ec.report.ok(); ++g)
        for (std::size_t i = 0; i < A.dim(); ++i) {
            const Matrix La = MA.left_module().action(act.theta[idx(g)].column(i));
            for (std::size_t m = 0; m < M.dim; ++m) {
                Vec lhs = La.apply(coeff[idx(g)].column(m));
                Vec rhs = coeff[idx(g)].apply(MA.left[i].column(m));
                if (coinv.project(lhs) != coinv.project(rhs)) {
                    ec.report.fail("degree-0 action differs from [g].a (x) [g].m at g = " + G.label(g));
                    break;
                }
            }
        }
    if (!ec.report.ok()) fail(ErrorKind::EquivarianceFailure, ec.report.violations.front());
    return ec;
}

std::vector<Matrix> action_on_homology(const EquivariantChains& ec, std::size_t q) {
    if (q >= ec.chains.top()) fail(ErrorKind::PreconditionFailed, "degree out of range for the chain action");
    HomologySpace H(ec.chains.d[q], ec.chains.d[q + 1], ec.chains.dims[q]);
    std::vector<Matrix> out;
    for (const auto& T : ec.action[q]) out.push_back(H.induced(T));
    return out;
}

EquivariantCochains diagonal_cochain_action(const CrossedProduct& cp, const Bimodule& M,
                                            const std::vector<Scalar>& xi, const PartialFactorSet& sigma2,
                                            std::size_t top, std::size_t cap) {
    const auto& act = cp.data.action;
    const StructureAlgebra& A = act.A();
    const FiniteGroup& G = act.G();
    const int n = G.order();
    Bimodule MA = restrict_to_base(cp, M);
    EquivariantCochains ec;
    ec.cochains = bar_cochain_complex(A, MA, top, false, cap);
    for (auto dq : ec.cochains.dims)
        if (dq > 1024) fail(ErrorKind::SizeLimit, "cochain action: degree too large for dense operators");
    ec.report.note("chain-level model: unnormalized Hochschild cochains with the conjugation action");
    for (std::size_t q = 0; q <= top; ++q) {
        std::vector<Matrix> Tq;
        for (int g = 0; g < n; ++g)
            Tq.push_back(kron(coefficient_action(cp, M, xi, g),
                              tensor_power(act.theta[idx(G.inv(g))], q).transpose()));
        ec.action.push_back(std::move(Tq));
    }
    for (std::size_t q = 0; q < top; ++q) {
        Matrix D = ec.cochains.delta[q].dense();
        for (int g = 0; g < n; ++g)
            if (D * ec.action[q][idx(g)] != ec.action[q + 1][idx(g)] * D)
                ec.report.fail("action does not commute with delta^" + std::to_string(q) + " at g = " + G.label(g));
    }
    for (std::size_t q = 0; q <= top; ++q)
        ec.report.merge(check_operator_relations(G, ec.action[q], sigma2), "degree " + std::to_string(q) + ": ");
    if (!ec.report.ok()) fail(ErrorKind::EquivarianceFailure, ec.report.violations.front());
    return ec;
}

std::vector<Matrix> action_on_cohomology(const EquivariantCochains& ec, std::size_t q) {
    const CochainComplex& C = ec.cochains;
    if (q >= C.top()) fail(ErrorKind::PreconditionFailed, "degree out of range for the cochain action");
    SparseMatrix in = q ? C.delta[q - 1] : SparseMatrix(C.field, C.dims[0], 0);
    HomologySpace H(C.delta[q], in, C.dims[q]);
    std::vector<Matrix> out;
    for (const auto& T : ec.action[q]) out.push_back(H.induced(T));
    return out;
}

InvariantsModule hom_A_module_structure(const CrossedProduct& cp, const Bimodule& M, const std::vector<Scalar>& xi,
                                        const TwistedPartialGroupAlgebra& kpar) {
    const StructureAlgebra& A = cp.data.action.A();
    const FieldSpec& f = A.field();
    Bimodule MA = restrict_to_base(cp, M);
    Matrix stacked(f, A.dim() * M.dim, M.dim);
    for (std::size_t i = 0; i < A.dim(); ++i) stacked.set_block(i * M.dim, 0, MA.left[i] - MA.right[i]);
    std::vector<Vec> inv = kernel(stacked);
    InvariantsModule out;
    std::vector<Matrix> full;
    for (int g = 0; g < kpar.group().order(); ++g) full.push_back(coefficient_action(cp, M, xi, g));
    Module ambient = module_from_operators(kpar, full);
    out.carrier = submodule(ambient, inv);
    std::vector<Vec> basis;
    for (std::size_t j = 0; j < out.carrier.inclusion.cols(); ++j) basis.push_back(out.carrier.inclusion.column(j));
    SpanSolver solver(f, M.dim, basis);
    for (const auto& T : full) out.operators.push_back(induced_on_subspace(solver, T));
    return out;
}

}  // namespace parhox
