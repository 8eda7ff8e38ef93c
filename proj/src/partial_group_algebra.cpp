#include "parhox/partial_group_algebra.hpp"

#include <deque>

#include "parhox/error.hpp"

namespace parhox {

namespace {

std::size_t idx(int g) { return static_cast<std::size_t>(g); }

// Monomial model: E_A[g] E_B[h] = sigma(g,h) E_{A u gB}[gh], zero on vanished monomials.
struct Model {
    const ExelMonoid& S;
    const PartialFactorSet& sigma;
    const std::vector<bool>& vanished;

    // Scalar is zero when the product vanishes; the monomial is the S(G) product regardless.
    std::pair<Scalar, std::size_t> path(const std::vector<std::size_t>& word) const {
        const FieldSpec f = sigma.field();
        Scalar c = Scalar::one(f);
        std::size_t m = S.identity();
        for (std::size_t w : word) {
            if (!c.is_zero()) c *= sigma(S.element(m).g, S.element(w).g);
            if (vanished[w]) c = Scalar::zero(f);
            m = S.mul(m, w);
            if (vanished[m]) c = Scalar::zero(f);
        }
        return {c, m};
    }
};

class Completion {
public:
    Completion(const ExelMonoid& S, const PartialFactorSet& sigma)
        : S_(S), sigma_(sigma), G_(S.group()), n_(G_.order()), V_(S.size(), false) {
        zero_.resize(idx(n_ * n_));
        for (int g = 0; g < n_; ++g)
            for (int h = 0; h < n_; ++h) zero_[idx(g * n_ + h)] = sigma(g, h).is_zero();
        cocycle_.resize(idx(n_ * n_ * n_));
        for (int g = 0; g < n_; ++g)
            for (int h = 0; h < n_; ++h)
                for (int t = 0; t < n_; ++t)
                    cocycle_[idx((g * n_ + h) * n_ + t)] =
                        sigma(g, h) * sigma(G_.mul(g, h), t) == sigma(h, t) * sigma(g, G_.mul(h, t));
    }

    std::vector<std::string> run(std::size_t max_rounds) {
        seed_idempotents();
        close();
        std::size_t rounds = 0;
        bool changed = true;
        while (changed) {
            if (++rounds > max_rounds)
                fail(ErrorKind::CompletionDiverged, "completion did not stabilise within " +
                                                        std::to_string(max_rounds) + " rounds");
            const std::size_t before = log_.size();
            relations();
            close();
            triples();
            close();
            changed = log_.size() != before;
        }
        log_.push_back("stable after " + std::to_string(rounds) + " rounds; " + std::to_string(count()) +
                       " monomials vanished");
        return log_;
    }

    const std::vector<bool>& vanished() const { return V_; }

private:
    bool z(int g, int h) const { return zero_[idx(g * n_ + h)]; }
    int grp(std::size_t s) const { return S_.element(s).g; }

    std::size_t count() const {
        std::size_t c = 0;
        for (bool v : V_) c += v;
        return c;
    }

    void mark(std::size_t m, const std::string& why) {
        if (V_[m]) return;
        V_[m] = true;
        todo_.push_back(m);
        log_.push_back(S_.label(m) + " vanishes: " + why);
    }

    void seed_idempotents() {
        for (int x = 0; x < n_; ++x) {
            if (!z(x, G_.inv(x))) continue;
            for (std::size_t s = 0; s < S_.size(); ++s)
                if (contains(S_.element(s).set, x)) mark(s, "contains e_" + G_.label(x) + " and sigma(x,x^-1) = 0");
        }
    }

    void compare(const std::pair<Scalar, std::size_t>& lhs, const std::pair<Scalar, std::size_t>& rhs,
                 const std::string& why) {
        if (V_[lhs.second]) return;
        if (lhs.first != rhs.first) mark(lhs.second, why);
    }

    void relations() {
        Model M{S_, sigma_, V_};
        const FieldSpec f = sigma_.field();
        auto gen = [&](int g) { return S_.generator(g); };
        for (int g = 0; g < n_; ++g)
            for (int h = 0; h < n_; ++h) {
                const int gi = G_.inv(g), hi = G_.inv(h), gh = G_.mul(g, h);
                const std::string at = " at (" + G_.label(g) + "," + G_.label(h) + ")";
                auto a = M.path({gen(gi), gen(gh)});
                auto b = M.path({gen(gh), gen(hi)});
                if (z(g, h)) {
                    compare(a, {Scalar::zero(f), a.second}, "[g^-1][gh] = 0" + at);
                    compare(b, {Scalar::zero(f), b.second}, "[gh][h^-1] = 0" + at);
                }
                auto l2 = M.path({gen(gi), gen(g), gen(h)});
                compare(l2, {sigma_(g, h) * a.first, a.second}, "[g^-1][g][h] = sigma [g^-1][gh]" + at);
                auto l3 = M.path({gen(g), gen(h), gen(hi)});
                compare(l3, {sigma_(g, h) * b.first, b.second}, "[g][h][h^-1] = sigma [gh][h^-1]" + at);
            }
        for (int g = 0; g < n_; ++g) {
            auto one = M.path({gen(g)});
            compare(M.path({gen(g), gen(0)}), one, "[g][1] = [g] at " + G_.label(g));
            compare(M.path({gen(0), gen(g)}), one, "[1][g] = [g] at " + G_.label(g));
        }
    }

    void close() {
        while (!todo_.empty()) {
            std::size_t m = todo_.front();
            todo_.pop_front();
            for (std::size_t b = 0; b < S_.size(); ++b) {
                if (!z(grp(b), grp(m))) mark(S_.mul(b, m), "multiple of " + S_.label(m));
                if (!z(grp(m), grp(b))) mark(S_.mul(m, b), "multiple of " + S_.label(m));
            }
        }
    }

    void triples() {
        std::vector<std::size_t> live;
        for (std::size_t s = 0; s < S_.size(); ++s)
            if (!V_[s]) live.push_back(s);
        for (std::size_t a : live)
            for (std::size_t b : live) {
                const std::size_t ab = S_.mul(a, b);
                const int ga = grp(a), gb = grp(b), gab = grp(ab);
                for (std::size_t c : live) {
                    const std::size_t m = S_.mul(ab, c);
                    if (V_[m] || V_[a] || V_[b] || V_[c]) continue;
                    const std::size_t bc = S_.mul(b, c);
                    const int gc = grp(c), gbc = grp(bc);
                    bool lz = z(ga, gb) || V_[ab] || z(gab, gc);
                    bool rz = z(gb, gc) || V_[bc] || z(ga, gbc);
                    if (lz && rz) continue;
                    if (lz != rz || !cocycle_[idx((ga * n_ + gb) * n_ + gc)])
                        mark(m, "two bracketings of " + S_.label(a) + S_.label(b) + S_.label(c) + " differ");
                }
            }
    }

    const ExelMonoid& S_;
    const PartialFactorSet& sigma_;
    const FiniteGroup& G_;
    int n_;
    std::vector<bool> V_;
    std::vector<bool> zero_, cocycle_;
    std::deque<std::size_t> todo_;
    std::vector<std::string> log_;
};

}  // namespace

TwistedPartialGroupAlgebra::TwistedPartialGroupAlgebra(std::shared_ptr<const ExelMonoid> monoid,
                                                       PartialFactorSet sigma, std::vector<bool> vanished,
                                                       std::vector<std::string> log)
    : monoid_(std::move(monoid)), sigma_(std::move(sigma)), log_(std::move(log)) {
    const ExelMonoid& S = *monoid_;
    if (vanished.size() != S.size()) fail(ErrorKind::InvalidInput, "vanishing table has the wrong size");
    if (vanished[S.identity()]) fail(ErrorKind::AssociativityFailure, "the relations force 1 = 0");
    position_.assign(S.size(), -1);
    for (std::size_t s = 0; s < S.size(); ++s)
        if (!vanished[s]) {
            position_[s] = static_cast<long>(monomials_.size());
            monomials_.push_back(s);
        }
    const std::size_t d = monomials_.size();
    const FieldSpec f = sigma_.field();
    std::vector<SparseVec> prod(d * d);
    std::vector<std::string> labels;
    for (std::size_t i = 0; i < d; ++i) {
        labels.push_back(S.label(monomials_[i]));
        for (std::size_t j = 0; j < d; ++j) {
            const std::size_t a = monomials_[i], b = monomials_[j];
            const Scalar& c = sigma_(S.element(a).g, S.element(b).g);
            const std::size_t m = S.mul(a, b);
            if (!c.is_zero() && position_[m] >= 0) prod[i * d + j] = {{static_cast<std::size_t>(position_[m]), c}};
        }
    }
    algebra_ = std::make_shared<StructureAlgebra>(f, std::move(labels), std::move(prod), unit_vec(f, d, 0));
}

Vec TwistedPartialGroupAlgebra::monomial(std::size_t s) const {
    if (position_[s] < 0) return algebra_->zero();
    return algebra_->basis(static_cast<std::size_t>(position_[s]));
}

Vec TwistedPartialGroupAlgebra::generator(int g) const { return monomial(monoid_->generator(g)); }

Vec TwistedPartialGroupAlgebra::idempotent(int g) const {
    const int gi = group().inv(g);
    const Scalar& s = sigma_(g, gi);
    if (s.is_zero()) return algebra_->zero();
    return scale(s.inverse(), algebra_->multiply(generator(g), generator(gi)));
}

std::vector<Vec> TwistedPartialGroupAlgebra::generators() const {
    std::vector<Vec> out;
    for (int g = 0; g < group().order(); ++g) out.push_back(generator(g));
    return out;
}

PartialProjRepresentation TwistedPartialGroupAlgebra::canonical() const {
    return {algebra_, monoid_->group_ptr(), generators(), sigma_};
}

std::optional<std::pair<Scalar, std::size_t>> TwistedPartialGroupAlgebra::reduce_word(
    const std::vector<ExelSymbol>& word) const {
    std::vector<std::size_t> mons;
    for (const auto& sym : word)
        mons.push_back(sym.kind == ExelSymbol::Generator ? monoid_->generator(sym.g) : monoid_->idempotent(sym.g));
    std::vector<bool> vanished(monoid_->size());
    for (std::size_t s = 0; s < vanished.size(); ++s) vanished[s] = position_[s] < 0;
    auto [c, m] = Model{*monoid_, sigma_, vanished}.path(mons);
    if (c.is_zero()) return std::nullopt;
    return std::make_pair(c, m);
}

KparPtr build_kpar(const GroupPtr& G, const FieldSpec& f, std::size_t limit) {
    auto S = std::make_shared<const ExelMonoid>(G, limit);
    std::vector<bool> none(S->size(), false);
    return std::make_shared<const TwistedPartialGroupAlgebra>(S, PartialFactorSet::constant_one(G, f), none,
                                                              std::vector<std::string>{});
}

IdempotentQuotient build_kpar_idempotent(const PartialFactorSet& sigma, std::size_t limit) {
    if (!sigma.is_idempotent()) fail(ErrorKind::InvalidInput, "factor set takes values outside {0,1}");
    const GroupPtr& Gp = sigma.group_ptr();
    const FiniteGroup& G = *Gp;
    KparPtr kpar = build_kpar(Gp, sigma.field(), limit);
    const ExelMonoid& S = kpar->monoid();
    std::vector<bool> ideal(S.size(), false);
    std::vector<std::string> log;
    std::deque<std::size_t> todo;
    auto add = [&](std::size_t s, const std::string& why) {
        if (ideal[s]) return;
        ideal[s] = true;
        todo.push_back(s);
        log.push_back(S.label(s) + " in ideal: " + why);
    };
    auto word = [&](std::initializer_list<int> gs) {
        std::vector<ExelSymbol> w;
        for (int g : gs) w.push_back({ExelSymbol::Generator, g});
        return static_cast<std::size_t>(S.index_of(word_to_exel(G, w)));
    };
    for (int g = 0; g < G.order(); ++g)
        for (int h = 0; h < G.order(); ++h) {
            if (!sigma(g, h).is_zero()) continue;
            const int gi = G.inv(g), hi = G.inv(h), gh = G.mul(g, h);
            const std::string at = " (" + G.label(g) + "," + G.label(h) + ")";
            add(word({gi, gh}), "[g^-1][gh]" + at);
            add(word({gh, hi}), "[gh][h^-1]" + at);
            add(word({gi, g, h}), "[g^-1][g][h]" + at);
            add(word({g, h, hi}), "[g][h][h^-1]" + at);
        }
    while (!todo.empty()) {
        std::size_t s = todo.front();
        todo.pop_front();
        for (int g = 0; g < G.order(); ++g) {
            add(S.mul(S.generator(g), s), "multiple of " + S.label(s));
            add(S.mul(s, S.generator(g)), "multiple of " + S.label(s));
        }
    }
    auto q = std::make_shared<const TwistedPartialGroupAlgebra>(kpar->monoid_ptr(), sigma, ideal, log);
    Matrix m(sigma.field(), q->dim(), kpar->dim());
    for (std::size_t s = 0; s < S.size(); ++s)
        if (!q->vanished(s))
            m.at(static_cast<std::size_t>(q->position(s)), static_cast<std::size_t>(kpar->position(s))) =
                Scalar::one(sigma.field());
    IdempotentQuotient out{kpar, q, {kpar->algebra(), q->algebra(), m}};
    ValidationReport rep = validate_algebra(q->A());
    rep.merge(validate_hom(out.surjection));
    if (!rep.ok()) fail(ErrorKind::AssociativityFailure, "semigroup quotient: " + rep.violations.front());
    return out;
}

KparPtr build_kpar_sigma(const PartialFactorSet& sigma, const CompletionOptions& opt) {
    ValidationReport pre = validate_unit_and_symmetry(sigma);
    if (!pre.ok()) fail(ErrorKind::PreconditionFailed, "factor set is not normalized: " + pre.violations.front());
    auto S = std::make_shared<const ExelMonoid>(sigma.group_ptr(), opt.limit);
    Completion c(*S, sigma);
    auto log = c.run(opt.max_rounds ? opt.max_rounds : S->size() + 1);
    auto K = std::make_shared<const TwistedPartialGroupAlgebra>(S, sigma, c.vanished(), std::move(log));
    ValidationReport rep = validate_algebra(K->A());
    if (!rep.ok()) fail(ErrorKind::AssociativityFailure, "completed model: " + rep.violations.front());
    ValidationReport rel = check_defining_relations(*K);
    if (!rel.ok()) fail(ErrorKind::AssociativityFailure, "completed model: " + rel.violations.front());
    return K;
}

ValidationReport check_defining_relations(const TwistedPartialGroupAlgebra& K) {
    return validate_partial_representation(K.canonical(), true);
}

AlgebraHom universal_hom(const TwistedPartialGroupAlgebra& K, const PartialProjRepresentation& rep) {
    ValidationReport r = validate_partial_representation(rep, false);
    if (!r.ok()) fail(ErrorKind::NotARepresentation, r.violations.front());
    std::vector<Vec> e;
    try {
        e = induced_idempotents(rep);
    } catch (const Error& err) {
        fail(ErrorKind::NotARepresentation, err.what());
    }
    const StructureAlgebra& R = *rep.target;
    std::vector<Vec> cols;
    for (std::size_t i = 0; i < K.dim(); ++i) {
        const ExelElement& x = K.monoid().element(K.monomial_of(i));
        Vec v = R.unit();
        for (int h : elements_of(x.set))
            if (h != 0) v = R.multiply(v, e[idx(h)]);
        cols.push_back(R.multiply(v, rep.image[idx(x.g)]));
    }
    AlgebraHom hom{K.algebra(), rep.target, Matrix::from_columns(R.field(), R.dim(), cols)};
    ValidationReport hr = validate_hom(hom);
    for (int g = 0; g < K.group().order(); ++g)
        if (hom.apply(K.generator(g)) != rep.image[idx(g)])
            hr.fail("image of [" + K.group().label(g) + "] differs from the representation");
    if (!hr.ok()) fail(ErrorKind::NotARepresentation, "extension is not a homomorphism: " + hr.violations.front());
    if (subalgebra_generated(K.A(), K.generators()).basis.size() != K.dim())
        fail(ErrorKind::PropertyFailure, "algebra is not generated by the [g]");
    return hom;
}

OppositeIso opposite_iso(const PartialFactorSet& sigma, const CompletionOptions& opt) {
    KparPtr K = build_kpar_sigma(sigma, opt);
    OppositeIso out{build_kpar_sigma(involution_star(sigma), opt), std::make_shared<StructureAlgebra>(opposite(K->A())),
                    {}};
    const FiniteGroup& G = K->group();
    PartialProjRepresentation rep{out.opposite, sigma.group_ptr(), {}, out.starred->sigma()};
    for (int g = 0; g < G.order(); ++g) rep.image.push_back(K->generator(G.inv(g)));
    out.map = universal_hom(*out.starred, rep);
    if (out.starred->dim() != K->dim() || rank(out.map.map) != K->dim())
        fail(ErrorKind::IsomorphismFailure, "[g] -> [g^-1] is not bijective");
    return out;
}

BSigmaOmega build_B_sigma_omega(const TwistedPartialGroupAlgebra& kpar, const TwistedPartialGroupAlgebra& K) {
    const FieldSpec f = K.A().field();
    const int n = K.group().order();
    std::vector<Vec> e1, e2;
    for (int g = 0; g < n; ++g) {
        e1.push_back(kpar.idempotent(g));
        e2.push_back(K.idempotent(g));
    }
    BSigmaOmega out{subalgebra_generated(kpar.A(), e1), subalgebra_generated(K.A(), e2), {}, {}, {}};
    std::vector<Vec> cols;
    for (const auto& v : out.b.basis) {
        Vec img = K.A().zero();
        for (std::size_t i = 0; i < v.size(); ++i)
            if (!v[i].is_zero()) axpy(img, v[i], K.monomial(kpar.monomial_of(i)));
        auto c = out.b_sigma.coords(img);
        if (!c) fail(ErrorKind::PropertyFailure, "zeta leaves B^sigma");
        cols.push_back(*c);
    }
    out.zeta = Matrix::from_columns(f, out.b_sigma.basis.size(), cols);
    ValidationReport hr = validate_hom({out.b.algebra, out.b_sigma.algebra, out.zeta});
    if (!hr.ok()) fail(ErrorKind::PropertyFailure, "zeta is not a homomorphism: " + hr.violations.front());
    const ExelMonoid& S = kpar.monoid();
    for (std::size_t s = 0; s < S.size(); ++s)
        if (S.is_idempotent(s) && K.vanished(s)) out.kernel.push_back(kpar.monomial(s));
    if (rank(out.zeta) + out.kernel.size() != out.b.basis.size())
        fail(ErrorKind::PropertyFailure, "vanished idempotent monomials do not span ker zeta");
    out.omega = ideal_and_quotient(kpar.A(), out.kernel);
    return out;
}

Module omega_module(const BSigmaOmega& bo, const TwistedPartialGroupAlgebra& kpar,
                    const TwistedPartialGroupAlgebra& k2, Side side) {
    std::vector<Matrix> mats;
    for (int g = 0; g < kpar.group().order(); ++g) {
        Vec x = kpar.generator(g);
        mats.push_back(induced_on_quotient(*bo.omega.space,
                                           side == Side::Left ? kpar.A().left_matrix(x) : kpar.A().right_matrix(x)));
    }
    return close_generator_action(k2.A(), side, bo.omega.space->dim(), k2.generators(), mats);
}

CrossedStructure phi_psi_crossed_iso(const TwistedPartialGroupAlgebra& K) {
    PartialProjRepresentation can = K.canonical();
    InducedAction induced = induced_partial_action(can);
    if (!induced.report.ok())
        fail(ErrorKind::PropertyFailure, "induced partial action is invalid: " + induced.report.violations.front());
    CrossedProduct cp = build_crossed_product({induced.action, K.sigma()});
    AlgebraHom phi = universal_hom(K, gamma_sigma(cp));
    AlgebraHom pi{induced.subalgebra.algebra, K.algebra(), induced.subalgebra.inclusion};
    AlgebraHom psi = pi_times_gamma(cp, pi, can);
    const FieldSpec f = K.A().field();
    if (phi.map * psi.map != Matrix::identity(f, cp.dim()) || psi.map * phi.map != Matrix::identity(f, K.dim()))
        fail(ErrorKind::IsomorphismFailure, "Phi and Psi are not mutually inverse");
    return {std::move(induced), std::move(cp), std::move(phi), std::move(psi)};
}

BSigmaModules b_sigma_module_structures(const TwistedPartialGroupAlgebra& K, const TwistedPartialGroupAlgebra& k2,
                                        const std::vector<Scalar>& xi) {
    const FiniteGroup& G = K.group();
    const int n = G.order();
    std::vector<Vec> e;
    for (int g = 0; g < n; ++g) e.push_back(K.idempotent(g));
    BSigmaModules out{subalgebra_generated(K.A(), e), {}, {}, {}};
    const SpanSolver& solver = *out.b_sigma.solver;
    std::vector<Matrix> left;
    for (int g = 0; g < n; ++g) {
        Matrix conj = (K.A().left_matrix(K.generator(g)) * K.A().right_matrix(K.generator(G.inv(g))))
                          .scaled(xi[idx(g)]);
        left.push_back(induced_on_subspace(solver, conj));
    }
    std::vector<Matrix> right;
    for (int g = 0; g < n; ++g) right.push_back(left[idx(G.inv(g))]);
    const std::size_t d = out.b_sigma.basis.size();
    out.left = close_generator_action(k2.A(), Side::Left, d, k2.generators(), left);
    out.right = close_generator_action(k2.A(), Side::Right, d, k2.generators(), right);
    Vec one = *out.b_sigma.coords(K.A().unit());
    for (int g = 0; g < n; ++g)
        if (out.left.apply(k2.idempotent(g), one) != *out.b_sigma.coords(e[idx(g)]))
            out.report.fail("e_g'' . 1 differs from e_g at " + G.label(g));
    return out;
}

}  // namespace parhox
