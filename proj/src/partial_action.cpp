#include "parhox/partial_action.hpp"

#include <random>

#include "parhox/error.hpp"

namespace parhox {

namespace {

std::size_t idx(int g) { return static_cast<std::size_t>(g); }

std::string pair_str(const FiniteGroup& G, int g, int h) { return "(" + G.label(g) + "," + G.label(h) + ")"; }

std::string vec_label(const StructureAlgebra& A, const Vec& v) {
    std::string out;
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (v[i].is_zero()) continue;
        if (!out.empty()) out += "+";
        if (!v[i].is_one()) out += v[i].to_string() + "*";
        out += A.label(i);
    }
    return out.empty() ? "0" : out;
}

std::vector<Vec> ideal_of(const StructureAlgebra& A, const Vec& e) {
    Echelon ech(A.field(), A.dim());
    for (std::size_t i = 0; i < A.dim(); ++i) ech.insert(A.multiply(e, A.basis(i)));
    return ech.reduced_basis();
}

}  // namespace

std::vector<bool> UnitalPartialAction::pair_support() const {
    const int n = G().order();
    std::vector<bool> out(idx(n * n));
    for (int g = 0; g < n; ++g)
        for (int h = 0; h < n; ++h)
            out[idx(g * n + h)] = !is_zero(A().multiply(unit_of[idx(g)], unit_of[idx(G().mul(g, h))]));
    return out;
}

std::vector<bool> UnitalPartialAction::triple_support() const {
    const int n = G().order();
    std::vector<bool> out(idx(n * n * n));
    for (int g = 0; g < n; ++g)
        for (int h = 0; h < n; ++h) {
            Vec two = A().multiply(unit_of[idx(g)], unit_of[idx(G().mul(g, h))]);
            if (is_zero(two)) continue;
            for (int t = 0; t < n; ++t)
                out[idx((g * n + h) * n + t)] = !is_zero(A().multiply(two, unit_of[idx(G().mul(G().mul(g, h), t))]));
        }
    return out;
}

ValidationReport validate_partial_action(const UnitalPartialAction& th) {
    ValidationReport rep;
    const StructureAlgebra& A = th.A();
    const FiniteGroup& G = th.G();
    const int n = G.order();
    const std::size_t d = A.dim();
    if (th.unit_of.size() != idx(n) || th.theta.size() != idx(n)) {
        rep.fail("one idempotent and one map per group element are required");
        return rep;
    }
    for (int g = 0; g < n; ++g) {
        if (th.unit_of[idx(g)].size() != d || th.theta[idx(g)].rows() != d || th.theta[idx(g)].cols() != d) {
            rep.fail("wrong shape of data at " + G.label(g));
            return rep;
        }
    }
    if (th.unit_of[0] != A.unit()) rep.fail("D_1 is not A");
    if (th.theta[0] != Matrix::identity(A.field(), d)) rep.fail("theta_1 is not the identity");
    std::vector<Matrix> mult;
    for (int g = 0; g < n; ++g) {
        const Vec& e = th.unit_of[idx(g)];
        if (A.multiply(e, e) != e) rep.fail("1_" + G.label(g) + " is not idempotent");
        for (std::size_t i = 0; i < d; ++i)
            if (A.multiply(e, A.basis(i)) != A.multiply(A.basis(i), e)) {
                rep.fail("1_" + G.label(g) + " is not central");
                break;
            }
        mult.push_back(A.left_matrix(e));
    }
    if (!rep.ok()) return rep;
    for (int g = 0; g < n && !rep.full(); ++g) {
        const int gi = G.inv(g);
        const Matrix& T = th.theta[idx(g)];
        if (T * mult[idx(gi)] != T) rep.fail("theta_" + G.label(g) + " does not vanish off D_" + G.label(gi));
        if (mult[idx(g)] * T != T) rep.fail("theta_" + G.label(g) + " does not land in D_" + G.label(g));
        if (T.apply(th.unit_of[idx(gi)]) != th.unit_of[idx(g)])
            rep.fail("theta_" + G.label(g) + " does not map 1_" + G.label(gi) + " to 1_" + G.label(g));
        std::vector<Vec> img;
        for (std::size_t i = 0; i < d; ++i) img.push_back(T.column(i));
        for (std::size_t i = 0; i < d && !rep.full(); ++i)
            for (std::size_t j = 0; j < d; ++j) {
                Vec lhs = T.apply(to_dense(A.field(), d, A.product(i, j)));
                if (lhs != A.multiply(img[i], img[j])) {
                    rep.fail("theta_" + G.label(g) + " is not multiplicative at (" + A.label(i) + "," + A.label(j) + ")");
                    break;
                }
            }
        for (int h = 0; h < n; ++h) {
            Vec lhs = T.apply(A.multiply(th.unit_of[idx(gi)], th.unit_of[idx(h)]));
            Vec rhs = A.multiply(th.unit_of[idx(g)], th.unit_of[idx(G.mul(g, h))]);
            if (lhs != rhs) rep.fail("theta_g(1_{g^-1} 1_h) = 1_g 1_{gh} fails at " + pair_str(G, g, h));
        }
    }
    for (int g = 0; g < n && !rep.full(); ++g)
        for (int h = 0; h < n && !rep.full(); ++h) {
            const int gh = G.mul(g, h);
            Vec dom = A.multiply(th.unit_of[idx(G.inv(h))], th.unit_of[idx(G.inv(gh))]);
            Matrix proj = A.left_matrix(dom);
            if (th.theta[idx(g)] * th.theta[idx(h)] * proj != th.theta[idx(gh)] * proj)
                rep.fail("theta_g theta_h = theta_gh on D_{h^-1} D_{(gh)^-1} fails at " + pair_str(G, g, h));
        }
    return rep;
}

ValidationReport validate_twisted(const TwistedPartialAction& tw) {
    ValidationReport rep = validate_partial_action(tw.action);
    if (!rep.ok()) return rep;
    if (tw.sigma.order() != tw.action.G().order()) {
        rep.fail("factor set is over a group of another order");
        return rep;
    }
    if (tw.sigma.field() != tw.action.A().field()) {
        rep.fail("factor set is over another field");
        return rep;
    }
    rep.merge(validate_twist(tw.sigma, tw.action.pair_support(), tw.action.triple_support()));
    return rep;
}

ValidationReport check_associativity(const StructureAlgebra& A, std::size_t exhaustive_limit, std::size_t samples,
                                     std::uint64_t seed) {
    if (A.dim() <= exhaustive_limit) return validate_algebra(A);
    ValidationReport rep;
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<std::size_t> pick(0, A.dim() - 1);
    for (std::size_t s = 0; s < samples && !rep.full(); ++s) {
        std::size_t i = pick(rng), j = pick(rng), k = pick(rng);
        Vec a = A.basis(i), b = A.basis(j), c = A.basis(k);
        if (A.multiply(A.multiply(a, b), c) != A.multiply(a, A.multiply(b, c)))
            rep.fail("associativity fails at (" + A.label(i) + "," + A.label(j) + "," + A.label(k) + ")");
    }
    for (std::size_t i = 0; i < A.dim(); ++i) {
        Vec e = A.basis(i);
        if (A.multiply(A.unit(), e) != e || A.multiply(e, A.unit()) != e)
            rep.fail("unit does not act trivially on " + A.label(i));
    }
    rep.note("associativity sampled on " + std::to_string(samples) + " random triples");
    return rep;
}

Vec CrossedProduct::element(int g, const Vec& a) const {
    const auto& s = *ideal_solver[idx(g)];
    auto c = s.coords(a);
    if (!c) fail(ErrorKind::PreconditionFailed, "element lies outside D_g");
    Vec out = zero_vec(algebra->field(), dim());
    for (std::size_t k = 0; k < c->size(); ++k) out[offset[idx(g)] + k] = (*c)[k];
    return out;
}

Vec CrossedProduct::component(const Vec& x, int g) const {
    const StructureAlgebra& A = data.action.A();
    Vec out = A.zero();
    const auto& basis = ideal_basis[idx(g)];
    for (std::size_t k = 0; k < basis.size(); ++k)
        if (!x[offset[idx(g)] + k].is_zero()) axpy(out, x[offset[idx(g)] + k], basis[k]);
    return out;
}

int CrossedProduct::degree_of(std::size_t i) const {
    for (std::size_t g = 0; g + 1 < offset.size(); ++g)
        if (i < offset[g + 1]) return static_cast<int>(g);
    fail(ErrorKind::InvalidInput, "basis index out of range");
}

CrossedProduct build_crossed_product(const TwistedPartialAction& tw, std::uint64_t seed) {
    const StructureAlgebra& A = tw.action.A();
    const FiniteGroup& G = tw.action.G();
    const int n = G.order();
    const FieldSpec f = A.field();
    CrossedProduct cp{tw, nullptr, {}, {}, {0}};
    std::vector<std::string> labels;
    for (int g = 0; g < n; ++g) {
        auto basis = ideal_of(A, tw.action.unit_of[idx(g)]);
        for (const auto& b : basis) labels.push_back("(" + vec_label(A, b) + ")d_" + G.label(g));
        cp.ideal_solver.push_back(std::make_shared<SpanSolver>(f, A.dim(), basis));
        cp.offset.push_back(cp.offset.back() + basis.size());
        cp.ideal_basis.push_back(std::move(basis));
    }
    const std::size_t D = cp.offset.back();
    std::vector<SparseVec> prod(D * D);
    for (int g = 0; g < n; ++g) {
        const int gi = G.inv(g);
        for (int h = 0; h < n; ++h) {
            const int gh = G.mul(g, h);
            const Scalar& s = tw.sigma(g, h);
            Vec twist = A.multiply(tw.action.unit_of[idx(g)], tw.action.unit_of[idx(gh)]);
            for (std::size_t k = 0; k < cp.ideal_basis[idx(g)].size(); ++k)
                for (std::size_t l = 0; l < cp.ideal_basis[idx(h)].size(); ++l) {
                    if (s.is_zero()) continue;
                    const Vec& a = cp.ideal_basis[idx(g)][k];
                    const Vec& b = cp.ideal_basis[idx(h)][l];
                    Vec moved = tw.action.theta[idx(g)].apply(A.multiply(tw.action.unit_of[idx(gi)], b));
                    Vec r = scale(s, A.multiply(A.multiply(a, moved), twist));
                    auto c = cp.ideal_solver[idx(gh)]->coords(r);
                    if (!c) fail(ErrorKind::InvalidInput, "product leaves D_gh at " + pair_str(G, g, h));
                    SparseVec sv;
                    for (std::size_t m = 0; m < c->size(); ++m)
                        if (!(*c)[m].is_zero()) sv.emplace_back(cp.offset[idx(gh)] + m, (*c)[m]);
                    prod[(cp.offset[idx(g)] + k) * D + cp.offset[idx(h)] + l] = std::move(sv);
                }
        }
    }
    Vec unit = zero_vec(f, D);
    {
        auto c = cp.ideal_solver[0]->coords(A.unit());
        for (std::size_t m = 0; m < c->size(); ++m) unit[m] = (*c)[m];
    }
    cp.algebra = std::make_shared<StructureAlgebra>(f, std::move(labels), std::move(prod), std::move(unit));
    ValidationReport rep = check_associativity(*cp.algebra, 40, 1000, seed);
    if (!rep.ok()) fail(ErrorKind::AssociativityFailure, "crossed product: " + rep.violations.front());
    return cp;
}

ValidationReport validate_partial_representation(const PartialProjRepresentation& r, bool factor_set) {
    ValidationReport rep;
    const StructureAlgebra& R = *r.target;
    const FiniteGroup& G = *r.group;
    const int n = G.order();
    if (r.image.size() != idx(n)) {
        rep.fail("one image per group element is required");
        return rep;
    }
    std::vector<Vec> P(idx(n * n));
    for (int g = 0; g < n; ++g)
        for (int h = 0; h < n; ++h) P[idx(g * n + h)] = R.multiply(r.image[idx(g)], r.image[idx(h)]);
    auto prod = [&](int g, int h) -> const Vec& { return P[idx(g * n + h)]; };
    for (int g = 0; g < n && !rep.full(); ++g)
        for (int h = 0; h < n; ++h) {
            const int gi = G.inv(g), hi = G.inv(h), gh = G.mul(g, h);
            const Scalar& s = r.sigma(g, h);
            if (s.is_zero() && (!is_zero(prod(gi, gh)) || !is_zero(prod(gh, hi))))
                rep.fail("sigma = 0 but Gamma(g^-1)Gamma(gh) or Gamma(gh)Gamma(h^-1) is nonzero at " + pair_str(G, g, h));
            if (R.multiply(prod(gi, g), r.image[idx(h)]) != scale(s, prod(gi, gh)))
                rep.fail("Gamma(g^-1)Gamma(g)Gamma(h) = sigma Gamma(g^-1)Gamma(gh) fails at " + pair_str(G, g, h));
            if (R.multiply(prod(g, h), r.image[idx(hi)]) != scale(s, prod(gh, hi)))
                rep.fail("Gamma(g)Gamma(h)Gamma(h^-1) = sigma Gamma(gh)Gamma(h^-1) fails at " + pair_str(G, g, h));
            if (factor_set && s.is_zero() != is_zero(prod(g, h)))
                rep.fail("sigma(g,h) = 0 <=> Gamma(g)Gamma(h) = 0 fails at " + pair_str(G, g, h));
        }
    if (r.image[0] != R.unit()) rep.fail("Gamma(1) is not the unit");
    return rep;
}

ValidationReport check_zero_pattern(const PartialProjRepresentation& r) {
    ValidationReport rep;
    const StructureAlgebra& R = *r.target;
    const FiniteGroup& G = *r.group;
    for (int g = 0; g < G.order(); ++g)
        for (int h = 0; h < G.order(); ++h) {
            const int gi = G.inv(g), hi = G.inv(h), gh = G.mul(g, h);
            bool a = is_zero(R.multiply(r.image[idx(gi)], r.image[idx(gh)]));
            bool b = is_zero(R.multiply(r.image[idx(g)], r.image[idx(h)]));
            bool c = is_zero(R.multiply(r.image[idx(gh)], r.image[idx(hi)]));
            if (a != b || b != c) rep.fail("zero pattern differs at " + pair_str(G, g, h));
        }
    return rep;
}

PartialProjRepresentation gamma_sigma(const CrossedProduct& cp) {
    const auto& act = cp.data.action;
    PartialProjRepresentation r{cp.algebra, act.group, {}, cp.data.sigma};
    for (int g = 0; g < act.G().order(); ++g) r.image.push_back(cp.element(g, act.unit_of[idx(g)]));
    return r;
}

std::vector<Vec> induced_idempotents(const PartialProjRepresentation& r) {
    const StructureAlgebra& R = *r.target;
    const FiniteGroup& G = *r.group;
    const int n = G.order();
    std::vector<Vec> e;
    for (int g = 0; g < n; ++g) {
        const Scalar& s = r.sigma(G.inv(g), g);
        if (s.is_zero())
            e.push_back(R.zero());
        else
            e.push_back(scale(s.inverse(), R.multiply(r.image[idx(g)], r.image[idx(G.inv(g))])));
    }
    for (int g = 0; g < n; ++g) {
        if (R.multiply(e[idx(g)], e[idx(g)]) != e[idx(g)])
            fail(ErrorKind::PropertyFailure, "e_" + G.label(g) + " is not idempotent");
        for (int h = 0; h < n; ++h) {
            if (R.multiply(e[idx(g)], e[idx(h)]) != R.multiply(e[idx(h)], e[idx(g)]))
                fail(ErrorKind::PropertyFailure, "e_g and e_h do not commute at " + pair_str(G, g, h));
            if (R.multiply(r.image[idx(g)], e[idx(h)]) != R.multiply(e[idx(G.mul(g, h))], r.image[idx(g)]))
                fail(ErrorKind::PropertyFailure, "Gamma(g) e_h = e_gh Gamma(g) fails at " + pair_str(G, g, h));
            if (R.multiply(e[idx(h)], r.image[idx(g)]) != R.multiply(r.image[idx(g)], e[idx(G.mul(G.inv(g), h))]))
                fail(ErrorKind::PropertyFailure, "e_h Gamma(g) = Gamma(g) e_{g^-1 h} fails at " + pair_str(G, g, h));
        }
    }
    if (e[0] != R.unit()) fail(ErrorKind::PropertyFailure, "e_1 is not the unit");
    return e;
}

InducedAction induced_partial_action(const PartialProjRepresentation& r) {
    const StructureAlgebra& R = *r.target;
    const FiniteGroup& G = *r.group;
    const int n = G.order();
    InducedAction out;
    out.idempotents = induced_idempotents(r);
    out.subalgebra = subalgebra_generated(R, out.idempotents);
    const Subalgebra& sub = out.subalgebra;
    const std::size_t k = sub.basis.size();
    UnitalPartialAction act{sub.algebra, r.group, {}, {}};
    for (int g = 0; g < n; ++g) act.unit_of.push_back(*sub.coords(out.idempotents[idx(g)]));
    for (int g = 0; g < n; ++g) {
        const int gi = G.inv(g);
        Matrix T(R.field(), k, k);
        const Vec& dom = out.idempotents[idx(gi)];
        if (!is_zero(dom)) {
            Scalar c = r.sigma(gi, g).inverse();
            for (std::size_t j = 0; j < k; ++j) {
                Vec b = R.multiply(dom, sub.basis[j]);
                Vec img = scale(c, R.multiply(r.image[idx(g)], b, r.image[idx(gi)]));
                auto coords = sub.coords(img);
                if (!coords) fail(ErrorKind::PropertyFailure, "conjugation leaves the idempotent subalgebra");
                for (std::size_t i = 0; i < k; ++i) T.at(i, j) = (*coords)[i];
            }
        }
        act.theta.push_back(std::move(T));
    }
    out.action = act;
    out.report = validate_twisted({act, r.sigma});
    return out;
}

ValidationReport validate_covariant(const TwistedPartialAction& tw, const AlgebraHom& pi,
                                    const PartialProjRepresentation& r) {
    ValidationReport rep = validate_hom(pi);
    rep.merge(validate_partial_representation(r, false), "representation: ");
    if (!rep.ok()) return rep;
    const StructureAlgebra& A = tw.action.A();
    const StructureAlgebra& R = *r.target;
    const FiniteGroup& G = tw.action.G();
    for (int g = 0; g < G.order() && !rep.full(); ++g) {
        const int gi = G.inv(g);
        for (const auto& a : ideal_of(A, tw.action.unit_of[idx(gi)])) {
            Vec lhs = R.multiply(r.image[idx(g)], pi.apply(a), r.image[idx(gi)]);
            Vec rhs = scale(tw.sigma(g, gi), pi.apply(tw.action.theta[idx(g)].apply(a)));
            if (lhs != rhs) {
                rep.fail("covariance fails at g = " + G.label(g) + ", a = " + vec_label(A, a));
                break;
            }
        }
    }
    return rep;
}

AlgebraHom pi_times_gamma(const CrossedProduct& cp, const AlgebraHom& pi, const PartialProjRepresentation& r) {
    ValidationReport rep = validate_covariant(cp.data, pi, r);
    if (!rep.ok()) fail(ErrorKind::NotCovariant, rep.violations.front());
    const StructureAlgebra& R = *r.target;
    const int n = cp.data.action.G().order();
    std::vector<Vec> cols;
    for (int g = 0; g < n; ++g)
        for (const auto& a : cp.ideal_basis[idx(g)]) cols.push_back(R.multiply(pi.apply(a), r.image[idx(g)]));
    AlgebraHom h{cp.algebra, r.target, Matrix::from_columns(R.field(), R.dim(), cols)};
    ValidationReport hr = validate_hom(h);
    if (!hr.ok()) fail(ErrorKind::NotCovariant, "pi x Gamma is not a homomorphism: " + hr.violations.front());
    return h;
}

TransportResult transport_by_equivalence(const TwistedPartialAction& tw, const EquivalenceWitness& eta) {
    TwistedPartialAction nu{tw.action, transport(tw.sigma, eta)};
    TransportResult out{build_crossed_product(nu), build_crossed_product(tw), {}};
    const std::size_t D = out.source.dim();
    Matrix m(tw.action.A().field(), D, D);
    for (std::size_t i = 0; i < D; ++i) m.at(i, i) = eta[idx(out.source.degree_of(i))];
    out.iso = AlgebraHom{out.source.algebra, out.target.algebra, m};
    ValidationReport rep = validate_hom(out.iso);
    if (!rep.ok() || rank(m) != D)
        fail(ErrorKind::IsomorphismFailure,
             "transport map is not an isomorphism" + (rep.ok() ? std::string() : ": " + rep.violations.front()));
    return out;
}

ValidationReport projectivity_splitting(const UnitalPartialAction& th) {
    ValidationReport rep;
    const StructureAlgebra& A = th.A();
    for (int g = 0; g < th.G().order(); ++g) {
        const Vec& e = th.unit_of[idx(g)];
        auto D = ideal_of(A, e);
        auto C = ideal_of(A, sub(A.unit(), e));
        Echelon all(A.field(), A.dim());
        for (const auto& v : D) all.insert(v);
        for (const auto& v : C) all.insert(v);
        if (D.size() + C.size() != A.dim() || all.rank() != A.dim())
            rep.fail("A is not D_g + (1 - 1_g)A at " + th.G().label(g));
    }
    return rep;
}

}  // namespace parhox
