#include "parhox/algebra.hpp"

#include <deque>
#include <map>

#include "parhox/error.hpp"

namespace parhox {

namespace {

using Acc = std::map<std::size_t, Scalar>;

void accumulate(Acc& acc, const SparseVec& v, const Scalar& c) {
    for (const auto& [k, x] : v) {
        auto [it, ins] = acc.try_emplace(k, Scalar::zero(c.field()));
        it->second += c * x;
        if (it->second.is_zero()) acc.erase(it);
    }
}

SparseVec to_sparse(const Acc& acc) { return SparseVec(acc.begin(), acc.end()); }

std::vector<std::size_t> support(const Vec& v) {
    std::vector<std::size_t> s;
    for (std::size_t i = 0; i < v.size(); ++i)
        if (!v[i].is_zero()) s.push_back(i);
    return s;
}

void check_dim(const StructureAlgebra& A, const Vec& v, const char* what) {
    if (v.size() != A.dim()) fail(ErrorKind::InvalidInput, std::string(what) + ": vector has the wrong length");
}

// Span closure of seeds under the given products, returned as a sparse echelon.
template <class Step>
Echelon close_span(const FieldSpec& f, std::size_t n, const std::vector<Vec>& seeds, Step step) {
    Echelon ech(f, n);
    std::deque<Vec> todo;
    for (const auto& s : seeds)
        if (ech.insert(s)) todo.push_back(s);
    while (!todo.empty()) {
        Vec v = std::move(todo.front());
        todo.pop_front();
        for (Vec& w : step(v))
            if (ech.insert(w)) todo.push_back(std::move(w));
    }
    return ech;
}

}  // namespace

StructureAlgebra::StructureAlgebra(const FieldSpec& f, std::vector<std::string> labels, std::vector<SparseVec> products,
                                   Vec unit)
    : f_(f), d_(labels.size()), labels_(std::move(labels)), prod_(std::move(products)), unit_(std::move(unit)) {
    if (prod_.size() != d_ * d_) fail(ErrorKind::InvalidInput, "structure constants must be dim x dim");
    if (unit_.size() != d_) fail(ErrorKind::InvalidInput, "unit has the wrong length");
    for (const auto& p : prod_)
        for (const auto& [k, c] : p) {
            if (k >= d_) fail(ErrorKind::InvalidInput, "structure constant index out of range");
            if (c.field() != f_) fail(ErrorKind::FieldMismatch, "structure constant from another field");
        }
}

StructureAlgebra StructureAlgebra::from_triples(
    const FieldSpec& f, std::vector<std::string> labels,
    const std::vector<std::tuple<std::size_t, std::size_t, std::size_t, Scalar>>& sc, Vec unit) {
    const std::size_t d = labels.size();
    std::vector<Acc> acc(d * d);
    for (const auto& [i, j, k, c] : sc) {
        if (i >= d || j >= d || k >= d) fail(ErrorKind::InvalidInput, "structure constant index out of range");
        accumulate(acc[i * d + j], {{k, c}}, Scalar::one(f));
    }
    std::vector<SparseVec> prod;
    prod.reserve(d * d);
    for (const auto& a : acc) prod.push_back(to_sparse(a));
    return StructureAlgebra(f, std::move(labels), std::move(prod), std::move(unit));
}

Vec StructureAlgebra::multiply(const Vec& a, const Vec& b) const {
    check_dim(*this, a, "multiply");
    check_dim(*this, b, "multiply");
    Vec out = zero();
    auto sb = support(b);
    for (std::size_t i = 0; i < d_; ++i) {
        if (a[i].is_zero()) continue;
        for (std::size_t j : sb) {
            Scalar c = a[i] * b[j];
            for (const auto& [k, x] : product(i, j)) out[k] += c * x;
        }
    }
    return out;
}

Matrix StructureAlgebra::left_matrix(const Vec& a) const {
    check_dim(*this, a, "left_matrix");
    Matrix m(f_, d_, d_);
    for (std::size_t i = 0; i < d_; ++i) {
        if (a[i].is_zero()) continue;
        for (std::size_t j = 0; j < d_; ++j)
            for (const auto& [k, x] : product(i, j)) m.at(k, j) += a[i] * x;
    }
    return m;
}

Matrix StructureAlgebra::right_matrix(const Vec& a) const {
    check_dim(*this, a, "right_matrix");
    Matrix m(f_, d_, d_);
    for (std::size_t i = 0; i < d_; ++i) {
        if (a[i].is_zero()) continue;
        for (std::size_t j = 0; j < d_; ++j)
            for (const auto& [k, x] : product(j, i)) m.at(k, j) += a[i] * x;
    }
    return m;
}

bool StructureAlgebra::is_commutative() const {
    for (std::size_t i = 0; i < d_; ++i)
        for (std::size_t j = i + 1; j < d_; ++j)
            if (product(i, j) != product(j, i)) return false;
    return true;
}

bool StructureAlgebra::operator==(const StructureAlgebra& o) const {
    return f_ == o.f_ && d_ == o.d_ && prod_ == o.prod_ && unit_ == o.unit_;
}

ValidationReport validate_algebra(const StructureAlgebra& A) {
    ValidationReport rep;
    const std::size_t d = A.dim();
    for (std::size_t i = 0; i < d && !rep.full(); ++i)
        for (std::size_t j = 0; j < d && !rep.full(); ++j) {
            const SparseVec& ij = A.product(i, j);
            for (std::size_t k = 0; k < d; ++k) {
                Acc lhs, rhs;
                for (const auto& [m, c] : ij) accumulate(lhs, A.product(m, k), c);
                for (const auto& [m, c] : A.product(j, k)) accumulate(rhs, A.product(i, m), c);
                if (lhs != rhs) {
                    rep.fail("associativity fails at (" + A.label(i) + "," + A.label(j) + "," + A.label(k) + ")");
                    if (rep.full()) break;
                }
            }
        }
    for (std::size_t i = 0; i < d; ++i) {
        Vec e = A.basis(i);
        if (A.multiply(A.unit(), e) != e || A.multiply(e, A.unit()) != e)
            rep.fail("unit does not act trivially on " + A.label(i));
    }
    return rep;
}

StructureAlgebra opposite(const StructureAlgebra& A) {
    const std::size_t d = A.dim();
    std::vector<SparseVec> prod(d * d);
    for (std::size_t i = 0; i < d; ++i)
        for (std::size_t j = 0; j < d; ++j) prod[i * d + j] = A.product(j, i);
    std::vector<std::string> labels;
    for (const auto& l : A.labels()) labels.push_back(l + "^op");
    return StructureAlgebra(A.field(), std::move(labels), std::move(prod), A.unit());
}

StructureAlgebra enveloping(const StructureAlgebra& A, std::size_t cap) {
    const std::size_t d = A.dim();
    const std::size_t D = d * d;
    if (D > cap) fail(ErrorKind::SizeLimit, "enveloping algebra dimension " + std::to_string(D) + " exceeds cap");
    std::vector<SparseVec> prod(D * D);
    for (std::size_t i = 0; i < d; ++i)
        for (std::size_t j = 0; j < d; ++j)
            for (std::size_t k = 0; k < d; ++k)
                for (std::size_t l = 0; l < d; ++l) {
                    // (e_i (x) e_j)(e_k (x) e_l) = e_i e_k (x) e_l e_j
                    Acc acc;
                    for (const auto& [p, c] : A.product(i, k))
                        for (const auto& [q, e] : A.product(l, j)) accumulate(acc, {{p * d + q, c * e}}, Scalar::one(A.field()));
                    prod[(i * d + j) * D + (k * d + l)] = to_sparse(acc);
                }
    std::vector<std::string> labels;
    for (std::size_t i = 0; i < d; ++i)
        for (std::size_t j = 0; j < d; ++j) labels.push_back(A.label(i) + "(x)" + A.label(j));
    Vec unit = zero_vec(A.field(), D);
    for (std::size_t i = 0; i < d; ++i)
        for (std::size_t j = 0; j < d; ++j) unit[i * d + j] = A.unit()[i] * A.unit()[j];
    return StructureAlgebra(A.field(), std::move(labels), std::move(prod), std::move(unit));
}

ValidationReport validate_hom(const AlgebraHom& f, bool require_unital) {
    ValidationReport rep;
    const StructureAlgebra& S = *f.source;
    const StructureAlgebra& T = *f.target;
    if (f.map.rows() != T.dim() || f.map.cols() != S.dim()) {
        rep.fail("homomorphism matrix has the wrong shape");
        return rep;
    }
    std::vector<Vec> img;
    for (std::size_t i = 0; i < S.dim(); ++i) img.push_back(f.map.column(i));
    for (std::size_t i = 0; i < S.dim() && !rep.full(); ++i)
        for (std::size_t j = 0; j < S.dim(); ++j) {
            Vec lhs = f.apply(to_dense(S.field(), S.dim(), S.product(i, j)));
            if (lhs != T.multiply(img[i], img[j])) rep.fail("multiplicativity fails at (" + S.label(i) + "," + S.label(j) + ")");
        }
    if (require_unital && f.apply(S.unit()) != T.unit()) rep.fail("unit is not preserved");
    return rep;
}

Subalgebra subalgebra_generated(const StructureAlgebra& A, const std::vector<Vec>& gens) {
    std::vector<Vec> seeds{A.unit()};
    seeds.insert(seeds.end(), gens.begin(), gens.end());
    // Products of the new element with the generators on both sides reach every monomial.
    Echelon ech = close_span(A.field(), A.dim(), seeds, [&](const Vec& v) {
        std::vector<Vec> out;
        for (const auto& g : gens) {
            out.push_back(A.multiply(v, g));
            out.push_back(A.multiply(g, v));
        }
        return out;
    });
    Subalgebra sub;
    sub.basis = ech.reduced_basis();
    const std::size_t k = sub.basis.size();
    sub.inclusion = Matrix::from_columns(A.field(), A.dim(), sub.basis);
    sub.solver = std::make_shared<SpanSolver>(A.field(), A.dim(), sub.basis);
    std::vector<SparseVec> prod(k * k);
    for (std::size_t i = 0; i < k; ++i)
        for (std::size_t j = 0; j < k; ++j) {
            auto c = sub.solver->coords(A.multiply(sub.basis[i], sub.basis[j]));
            if (!c) fail(ErrorKind::PropertyFailure, "generated span is not closed under multiplication");
            prod[i * k + j] = to_sparse(*c);
        }
    std::vector<std::string> labels;
    for (std::size_t i = 0; i < k; ++i) labels.push_back("b" + std::to_string(i));
    auto unit = sub.solver->coords(A.unit());
    sub.algebra = std::make_shared<StructureAlgebra>(A.field(), std::move(labels), std::move(prod), *unit);
    return sub;
}

Quotient ideal_and_quotient(const StructureAlgebra& A, const std::vector<Vec>& gens) {
    Echelon ech = close_span(A.field(), A.dim(), gens, [&](const Vec& v) {
        std::vector<Vec> out;
        for (std::size_t i = 0; i < A.dim(); ++i) {
            Vec e = A.basis(i);
            out.push_back(A.multiply(e, v));
            out.push_back(A.multiply(v, e));
        }
        return out;
    });
    if (ech.contains(A.unit())) fail(ErrorKind::PreconditionFailed, "ideal contains the unit; quotient is zero");
    Quotient q;
    q.ideal_basis = ech.reduced_basis();
    q.space = std::make_shared<QuotientSpace>(A.field(), A.dim(), q.ideal_basis);
    q.projection = q.space->projection_matrix();
    const auto& keep = q.space->kept();
    const std::size_t k = keep.size();
    std::vector<SparseVec> prod(k * k);
    for (std::size_t i = 0; i < k; ++i)
        for (std::size_t j = 0; j < k; ++j)
            prod[i * k + j] = to_sparse(q.space->project(to_dense(A.field(), A.dim(), A.product(keep[i], keep[j]))));
    std::vector<std::string> labels;
    for (auto i : keep) labels.push_back(A.label(i));
    q.algebra = std::make_shared<StructureAlgebra>(A.field(), std::move(labels), std::move(prod),
                                                   q.space->project(A.unit()));
    return q;
}

std::vector<Vec> orthogonalize_idempotents(const StructureAlgebra& A, const std::vector<Vec>& gens) {
    for (const auto& g : gens) {
        check_dim(A, g, "orthogonalize_idempotents");
        if (A.multiply(g, g) != g) fail(ErrorKind::NotIdempotent, "generator is not idempotent");
        for (const auto& h : gens)
            if (A.multiply(g, h) != A.multiply(h, g)) fail(ErrorKind::NotCommuting, "generators do not commute");
    }
    std::vector<Vec> parts{A.unit()};
    for (const auto& g : gens) {
        Vec comp = sub(A.unit(), g);
        std::vector<Vec> next;
        for (const auto& p : parts) {
            Vec a = A.multiply(p, g);
            Vec b = A.multiply(p, comp);
            if (!is_zero(a)) next.push_back(std::move(a));
            if (!is_zero(b)) next.push_back(std::move(b));
        }
        parts = std::move(next);
    }
    return parts;
}

RegularityWitness is_von_neumann_regular_idempotent_generated(const StructureAlgebra& A,
                                                             const std::vector<Vec>& idempotent_gens) {
    RegularityWitness w;
    w.orthogonal_basis = orthogonalize_idempotents(A, idempotent_gens);
    if (w.orthogonal_basis.size() != A.dim()) return w;
    SpanSolver solver(A.field(), A.dim(), w.orthogonal_basis);
    for (std::size_t i = 0; i < A.dim(); ++i) {
        Vec x = A.basis(i);
        auto c = solver.coords(x);
        if (!c) return w;
        Vec inv = *c;
        for (auto& s : inv)
            if (!s.is_zero()) s = s.inverse();
        Vec y = solver.combine(inv);
        if (A.multiply(x, y, x) != x) return w;
        w.quasi_inverses.push_back(std::move(y));
    }
    w.regular = true;
    return w;
}

std::optional<Vec> separability_idempotent(const StructureAlgebra& A) {
    const std::size_t d = A.dim();
    const FieldSpec f = A.field();
    const std::size_t n = d * d;
    // Rows: d for the multiplication map, then d * d * d for a e - e a.
    Matrix m(f, d + d * n, n);
    Vec rhs = zero_vec(f, d + d * n);
    for (std::size_t i = 0; i < d; ++i)
        for (std::size_t j = 0; j < d; ++j)
            for (const auto& [k, c] : A.product(i, j)) m.at(k, i * d + j) += c;
    for (std::size_t k = 0; k < d; ++k) rhs[k] = A.unit()[k];
    for (std::size_t a = 0; a < d; ++a) {
        const std::size_t base = d + a * n;
        for (std::size_t i = 0; i < d; ++i)
            for (std::size_t j = 0; j < d; ++j) {
                const std::size_t col = i * d + j;
                for (const auto& [p, c] : A.product(a, i)) m.at(base + p * d + j, col) += c;
                for (const auto& [q, c] : A.product(j, a)) m.at(base + i * d + q, col) -= c;
            }
    }
    return solve(m, rhs);
}

Matrix Module::action(const Vec& a) const {
    if (a.size() != act.size()) fail(ErrorKind::InvalidInput, "action: vector has the wrong length");
    Matrix m(field, dim, dim);
    for (std::size_t i = 0; i < a.size(); ++i)
        if (!a[i].is_zero()) m.add_scaled(a[i], act[i]);
    return m;
}

ValidationReport validate_module(const StructureAlgebra& A, const Module& M) {
    ValidationReport rep;
    if (M.act.size() != A.dim()) {
        rep.fail("module has " + std::to_string(M.act.size()) + " action matrices for an algebra of dimension " +
                 std::to_string(A.dim()));
        return rep;
    }
    for (const auto& m : M.act)
        if (m.rows() != M.dim || m.cols() != M.dim) {
            rep.fail("action matrix has the wrong shape");
            return rep;
        }
    for (std::size_t i = 0; i < A.dim() && !rep.full(); ++i)
        for (std::size_t j = 0; j < A.dim(); ++j) {
            Matrix lhs = M.action(to_dense(A.field(), A.dim(), A.product(i, j)));
            Matrix rhs = M.side == Side::Left ? M.act[i] * M.act[j] : M.act[j] * M.act[i];
            if (lhs != rhs) rep.fail("action is not multiplicative at (" + A.label(i) + "," + A.label(j) + ")");
        }
    if (M.action(A.unit()) != Matrix::identity(M.field, M.dim)) rep.fail("unit does not act as the identity");
    return rep;
}

ValidationReport validate_bimodule(const StructureAlgebra& A, const Bimodule& M) {
    ValidationReport rep;
    rep.merge(validate_module(A, M.left_module()), "left: ");
    rep.merge(validate_module(A, M.right_module()), "right: ");
    if (!rep.ok()) return rep;
    for (std::size_t i = 0; i < A.dim() && !rep.full(); ++i)
        for (std::size_t j = 0; j < A.dim(); ++j)
            if (M.left[i] * M.right[j] != M.right[j] * M.left[i])
                rep.fail("left and right actions do not commute at (" + A.label(i) + "," + A.label(j) + ")");
    return rep;
}

Module regular_module(const StructureAlgebra& A, Side side) {
    Module M{A.field(), A.dim(), side, {}};
    for (std::size_t i = 0; i < A.dim(); ++i)
        M.act.push_back(side == Side::Left ? A.left_matrix(A.basis(i)) : A.right_matrix(A.basis(i)));
    return M;
}

Bimodule regular_bimodule(const StructureAlgebra& A) {
    return {A.field(), A.dim(), regular_module(A, Side::Left).act, regular_module(A, Side::Right).act};
}

Module bimodule_to_enveloping(const StructureAlgebra& A, const Bimodule& M) {
    const std::size_t d = A.dim();
    Module out{M.field, M.dim, Side::Left, {}};
    out.act.reserve(d * d);
    for (std::size_t i = 0; i < d; ++i)
        for (std::size_t j = 0; j < d; ++j) out.act.push_back(M.left[i] * M.right[j]);
    return out;
}

Bimodule enveloping_to_bimodule(const StructureAlgebra& A, const Module& M) {
    const std::size_t d = A.dim();
    if (M.act.size() != d * d) fail(ErrorKind::InvalidInput, "module is not over the enveloping algebra");
    Bimodule out{M.field, M.dim, {}, {}};
    for (std::size_t i = 0; i < d; ++i) {
        Matrix l(M.field, M.dim, M.dim), r(M.field, M.dim, M.dim);
        for (std::size_t j = 0; j < d; ++j) {
            if (!A.unit()[j].is_zero()) {
                l.add_scaled(A.unit()[j], M.act[i * d + j]);
                r.add_scaled(A.unit()[j], M.act[j * d + i]);
            }
        }
        out.left.push_back(std::move(l));
        out.right.push_back(std::move(r));
    }
    return out;
}

Module bimodule_to_enveloping_right(const StructureAlgebra& A, const Bimodule& M) {
    const std::size_t d = A.dim();
    Module out{M.field, M.dim, Side::Right, {}};
    out.act.reserve(d * d);
    for (std::size_t i = 0; i < d; ++i)
        for (std::size_t j = 0; j < d; ++j) out.act.push_back(M.left[j] * M.right[i]);
    return out;
}

Module flip_side(const Module& M) {
    Module out = M;
    out.side = M.side == Side::Left ? Side::Right : Side::Left;
    return out;
}

Module restrict_along(const AlgebraHom& f, const Module& M) {
    Module out{M.field, M.dim, M.side, {}};
    for (std::size_t i = 0; i < f.source->dim(); ++i) out.act.push_back(M.action(f.map.column(i)));
    return out;
}

Module close_generator_action(const StructureAlgebra& A, Side side, std::size_t dim, const std::vector<Vec>& gens,
                              const std::vector<Matrix>& mats) {
    if (gens.size() != mats.size()) fail(ErrorKind::InvalidInput, "one matrix per generator is required");
    const FieldSpec f = A.field();
    std::vector<Vec> elems{A.unit()};
    std::vector<Matrix> acts{Matrix::identity(f, dim)};
    Echelon ech(f, A.dim());
    ech.insert(A.unit());
    for (std::size_t pos = 0; pos < elems.size(); ++pos) {
        for (std::size_t g = 0; g < gens.size(); ++g) {
            Vec v = A.multiply(elems[pos], gens[g]);
            if (!ech.insert(v)) continue;
            acts.push_back(side == Side::Left ? acts[pos] * mats[g] : mats[g] * acts[pos]);
            elems.push_back(std::move(v));
        }
    }
    if (elems.size() != A.dim()) fail(ErrorKind::InvalidInput, "generators do not generate the algebra");
    SpanSolver solver(f, A.dim(), elems);
    Module M{f, dim, side, {}};
    for (std::size_t i = 0; i < A.dim(); ++i) {
        Vec c = *solver.coords(A.basis(i));
        Matrix m(f, dim, dim);
        for (std::size_t k = 0; k < c.size(); ++k)
            if (!c[k].is_zero()) m.add_scaled(c[k], acts[k]);
        M.act.push_back(std::move(m));
    }
    ValidationReport rep = validate_module(A, M);
    for (std::size_t g = 0; g < gens.size(); ++g)
        if (M.action(gens[g]) != mats[g]) rep.fail("closed action disagrees with generator " + std::to_string(g));
    if (!rep.ok()) fail(ErrorKind::ActionMismatch, "generator action does not extend: " + rep.violations.front());
    return M;
}

Matrix kron(const Matrix& f, const Matrix& g) {
    Matrix out(f.field(), f.rows() * g.rows(), f.cols() * g.cols());
    for (std::size_t i = 0; i < f.rows(); ++i)
        for (std::size_t j = 0; j < f.cols(); ++j) {
            if (f.at(i, j).is_zero()) continue;
            for (std::size_t k = 0; k < g.rows(); ++k)
                for (std::size_t l = 0; l < g.cols(); ++l)
                    if (!g.at(k, l).is_zero()) out.at(i * g.rows() + k, j * g.cols() + l) = f.at(i, j) * g.at(k, l);
        }
    return out;
}

Vec TensorProduct::element(const Vec& x, const Vec& y) const {
    if (x.size() != mx || y.size() != my) fail(ErrorKind::InvalidInput, "tensor element: wrong lengths");
    Vec v = zero_vec(field, mx * my);
    for (std::size_t i = 0; i < mx; ++i) {
        if (x[i].is_zero()) continue;
        for (std::size_t j = 0; j < my; ++j)
            if (!y[j].is_zero()) v[i * my + j] = x[i] * y[j];
    }
    return project(v);
}

Matrix TensorProduct::induced(const Matrix& f, const Matrix& g) const {
    Matrix out(f.field(), dim(), dim());
    const auto& keep = space->kept();
    for (std::size_t k = 0; k < keep.size(); ++k) {
        std::size_t x = keep[k] / my, y = keep[k] % my;
        Vec img = zero_vec(f.field(), mx * my);
        for (std::size_t i = 0; i < mx; ++i) {
            const Scalar& a = f.at(i, x);
            if (a.is_zero()) continue;
            for (std::size_t j = 0; j < my; ++j)
                if (!g.at(j, y).is_zero()) img[i * my + j] += a * g.at(j, y);
        }
        Vec p = project(img);
        for (std::size_t r = 0; r < dim(); ++r) out.at(r, k) = p[r];
    }
    return out;
}

bool TensorProduct::preserves_relations(const Matrix& f, const Matrix& g) const {
    Matrix fg = kron(f, g);
    for (const auto& r : space->relations().reduced_basis())
        if (!is_zero(project(fg.apply(r)))) return false;
    return true;
}

TensorProduct tensor_over(const StructureAlgebra& R, const Module& X, const Module& Y) {
    if (X.side != Side::Right || Y.side != Side::Left)
        fail(ErrorKind::InvalidInput, "tensor_over expects a right module and a left module");
    if (X.act.size() != R.dim() || Y.act.size() != R.dim())
        fail(ErrorKind::InvalidInput, "tensor_over: modules are over a different algebra");
    const FieldSpec f = R.field();
    const std::size_t mx = X.dim, my = Y.dim, n = mx * my;
    Echelon ech(f, n);
    for (std::size_t r = 0; r < R.dim() && ech.rank() < n; ++r) {
        const Matrix& Xr = X.act[r];
        const Matrix& Yr = Y.act[r];
        for (std::size_t x = 0; x < mx; ++x)
            for (std::size_t y = 0; y < my; ++y) {
                // (x r) (x) y - x (x) (r y)
                Acc acc;
                for (std::size_t i = 0; i < mx; ++i)
                    if (!Xr.at(i, x).is_zero()) accumulate(acc, {{i * my + y, Xr.at(i, x)}}, Scalar::one(f));
                for (std::size_t j = 0; j < my; ++j)
                    if (!Yr.at(j, y).is_zero()) accumulate(acc, {{x * my + j, Yr.at(j, y)}}, -Scalar::one(f));
                if (!acc.empty()) ech.insert(to_sparse(acc));
            }
    }
    TensorProduct t;
    t.field = f;
    t.mx = mx;
    t.my = my;
    t.space = std::make_shared<QuotientSpace>(f, n, ech.reduced_basis());
    return t;
}

bool is_module_map(const Module& X, const Module& Y, const Matrix& f) {
    if (f.rows() != Y.dim || f.cols() != X.dim || X.act.size() != Y.act.size() || X.side != Y.side) return false;
    for (std::size_t i = 0; i < X.act.size(); ++i)
        if (f * X.act[i] != Y.act[i] * f) return false;
    return true;
}

std::vector<Matrix> hom_over(const StructureAlgebra& R, const Module& X, const Module& Y) {
    if (X.side != Y.side) fail(ErrorKind::InvalidInput, "hom_over expects modules on the same side");
    if (X.act.size() != R.dim() || Y.act.size() != R.dim())
        fail(ErrorKind::InvalidInput, "hom_over: modules are over a different algebra");
    const FieldSpec f = R.field();
    const std::size_t mx = X.dim, my = Y.dim, n = mx * my;
    Echelon ech(f, n);
    for (std::size_t i = 0; i < R.dim() && ech.rank() < n; ++i) {
        const Matrix& Xi = X.act[i];
        const Matrix& Yi = Y.act[i];
        for (std::size_t r = 0; r < my; ++r)
            for (std::size_t c = 0; c < mx; ++c) {
                // (F X_i - Y_i F)_{r,c}; unknown F_{a,b} at a * mx + b
                Acc acc;
                for (std::size_t k = 0; k < mx; ++k)
                    if (!Xi.at(k, c).is_zero()) accumulate(acc, {{r * mx + k, Xi.at(k, c)}}, Scalar::one(f));
                for (std::size_t k = 0; k < my; ++k)
                    if (!Yi.at(r, k).is_zero()) accumulate(acc, {{k * mx + c, Yi.at(r, k)}}, -Scalar::one(f));
                if (!acc.empty()) ech.insert(to_sparse(acc));
            }
    }
    std::vector<Matrix> out;
    for (const auto& v : ech.null_space()) {
        Matrix F(f, my, mx);
        for (std::size_t a = 0; a < my; ++a)
            for (std::size_t b = 0; b < mx; ++b) F.at(a, b) = v[a * mx + b];
        out.push_back(std::move(F));
    }
    return out;
}

Matrix induced_on_quotient(const QuotientSpace& q, const Matrix& f) {
    Matrix out(f.field(), q.dim(), q.dim());
    for (std::size_t k = 0; k < q.dim(); ++k) {
        Vec p = q.project(f.column(q.kept()[k]));
        for (std::size_t r = 0; r < q.dim(); ++r) out.at(r, k) = p[r];
    }
    return out;
}

Matrix induced_on_subspace(const SpanSolver& s, const Matrix& f) {
    Matrix out(f.field(), s.size(), s.size());
    for (std::size_t k = 0; k < s.size(); ++k) {
        auto c = s.coords(f.apply(s.basis()[k]));
        if (!c) fail(ErrorKind::PreconditionFailed, "subspace is not invariant");
        for (std::size_t r = 0; r < s.size(); ++r) out.at(r, k) = (*c)[r];
    }
    return out;
}

SubModule submodule(const Module& M, const std::vector<Vec>& span) {
    Echelon ech(M.field, M.dim);
    for (const auto& v : span) ech.insert(v);
    std::vector<Vec> basis = ech.reduced_basis();
    SpanSolver solver(M.field, M.dim, basis);
    SubModule out{{M.field, basis.size(), M.side, {}}, Matrix::from_columns(M.field, M.dim, basis)};
    for (const auto& a : M.act) out.module.act.push_back(induced_on_subspace(solver, a));
    return out;
}

QuotientModule quotient_module(const Module& M, const std::vector<Vec>& relations) {
    auto q = std::make_shared<QuotientSpace>(M.field, M.dim, relations);
    for (const auto& r : q->relations().reduced_basis())
        for (const auto& a : M.act)
            if (!is_zero(q->project(a.apply(r)))) fail(ErrorKind::PreconditionFailed, "relations are not invariant");
    QuotientModule out{{M.field, q->dim(), M.side, {}}, q};
    for (const auto& a : M.act) out.module.act.push_back(induced_on_quotient(*q, a));
    return out;
}

SubModule kernel_module(const Module& X, const Module& Y, const Matrix& f) {
    if (!is_module_map(X, Y, f)) fail(ErrorKind::PreconditionFailed, "kernel_module: not a module map");
    return submodule(X, kernel(f));
}

QuotientModule cokernel_module(const Module& X, const Module& Y, const Matrix& f) {
    if (!is_module_map(X, Y, f)) fail(ErrorKind::PreconditionFailed, "cokernel_module: not a module map");
    std::vector<Vec> cols;
    for (std::size_t j = 0; j < f.cols(); ++j) cols.push_back(f.column(j));
    return quotient_module(Y, cols);
}

}  // namespace parhox
