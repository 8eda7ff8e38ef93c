#include "parhox/spectral.hpp"

#include <string>

#include "parhox/error.hpp"

namespace parhox {

namespace {

std::size_t idx(int g) { return static_cast<std::size_t>(g); }

std::string str(std::size_t n) { return std::to_string(n); }

void compare(Verdict& v, std::string label, std::size_t lhs, std::size_t rhs) {
    v.degrees.push_back({std::move(label), lhs, rhs, lhs == rhs});
}

void finish(Verdict& v) {
    v.pass = v.report.ok();
    for (const auto& d : v.degrees) v.pass = v.pass && d.holds;
}

Module k2_module(const PipelineInstance& inst, const std::vector<Matrix>& T, Side side = Side::Left) {
    const std::size_t dim = T.empty() ? 0 : T[0].rows();
    return close_generator_action(inst.K2().A(), side, dim, inst.K2().generators(), T);
}

// The untwisted algebra acting on the right of the quotient Omega, and on the left.
Module omega_over_kpar(const PipelineInstance& inst, const BSigmaOmega& bo, Side side) {
    const StructureAlgebra& K = inst.kpar->A();
    Module out{K.field(), bo.omega.space->dim(), side, {}};
    for (std::size_t i = 0; i < K.dim(); ++i)
        out.act.push_back(induced_on_quotient(
            *bo.omega.space, side == Side::Left ? K.left_matrix(K.basis(i)) : K.right_matrix(K.basis(i))));
    return out;
}

// A with [g] . a = theta_g(1_{g^-1} a).
std::vector<Matrix> base_operators(const PipelineInstance& inst) {
    const auto& act = inst.data.action;
    std::vector<Matrix> T;
    for (int g = 0; g < act.G().order(); ++g)
        T.push_back(act.theta[idx(g)] * act.A().left_matrix(act.unit_of[idx(act.G().inv(g))]));
    return T;
}

std::vector<Matrix> coefficient_operators(const PipelineInstance& inst) {
    std::vector<Matrix> T;
    for (int g = 0; g < inst.data.action.G().order(); ++g)
        T.push_back(coefficient_action(inst.lambda, inst.coefficients, inst.xi.xi, g));
    return T;
}

// Span of lambda m - m lambda over a basis of the algebra.
std::vector<Vec> commutators(const StructureAlgebra& R, const Bimodule& M) {
    std::vector<Vec> out;
    for (std::size_t i = 0; i < R.dim(); ++i) {
        Matrix c = M.left[i] - M.right[i];
        for (std::size_t j = 0; j < M.dim; ++j) out.push_back(c.column(j));
    }
    return out;
}

std::vector<Vec> invariants(const StructureAlgebra& R, const Bimodule& M) {
    Matrix stacked(M.field, R.dim() * M.dim, M.dim);
    for (std::size_t i = 0; i < R.dim(); ++i) stacked.set_block(i * M.dim, 0, M.left[i] - M.right[i]);
    return kernel(stacked);
}

std::size_t span_rank(const FieldSpec& f, std::size_t n, const std::vector<Vec>& vs) {
    Echelon e(f, n);
    for (const auto& v : vs) e.insert(v);
    return e.rank();
}

// X (x)_{B''} Lambda with the bimodule structure of a right module X over the idempotent-twisted algebra.
struct InducedBimodule {
    TensorProduct tensor;
    Bimodule bimodule;
    ValidationReport report;
};

InducedBimodule induced_bimodule(const PipelineInstance& inst, const Subalgebra& b2, const Module& X_right,
                                 const Module& lambda_left) {
    const StructureAlgebra& L = inst.L();
    const FiniteGroup& G = inst.data.action.G();
    AlgebraHom incl{b2.algebra, inst.K2().algebra(), b2.inclusion};
    Module XB = restrict_along(incl, X_right);
    InducedBimodule out{tensor_over(*b2.algebra, XB, lambda_left), {}, {}};
    const TensorProduct& T = out.tensor;
    out.bimodule = {L.field(), T.dim(), {}, {}};
    const Matrix idX = Matrix::identity(L.field(), X_right.dim);
    for (std::size_t i = 0; i < L.dim(); ++i) {
        const int g = inst.lambda.degree_of(i);
        const Matrix xg = X_right.action(inst.K2().generator(G.inv(g)));
        const Matrix lm = L.left_matrix(L.basis(i));
        const Matrix rm = L.right_matrix(L.basis(i));
        if (!T.preserves_relations(xg, lm)) {
            out.report.fail("left action is not balanced at basis " + L.label(i));
            return out;
        }
        if (!T.preserves_relations(idX, rm)) {
            out.report.fail("right action is not balanced at basis " + L.label(i));
            return out;
        }
        out.bimodule.left.push_back(T.induced(xg, lm));
        out.bimodule.right.push_back(T.induced(idX, rm));
    }
    out.report.merge(validate_bimodule(L, out.bimodule), "bimodule axioms: ");
    return out;
}

}  // namespace

PipelineInstance make_instance(std::string name, const TwistedPartialAction& tw, const std::optional<Bimodule>& M) {
    ValidationReport rep = validate_twisted(tw);
    if (!rep.ok()) fail(ErrorKind::PreconditionFailed, "twisted partial action is invalid: " + rep.violations.front());
    PipelineInstance inst{std::move(name), tw, build_crossed_product(tw), {}, xi_sigma_double_prime(tw.sigma),
                          nullptr, {}, nullptr, false};
    inst.coefficients = M ? *M : regular_bimodule(inst.L());
    ValidationReport mr = validate_bimodule(inst.L(), inst.coefficients);
    if (!mr.ok()) fail(ErrorKind::InvalidInput, "coefficient bimodule is invalid: " + mr.violations.front());
    inst.k2 = build_kpar_idempotent(inst.xi.sigma_double_prime);
    inst.kpar = inst.k2.kpar;
    inst.k_sigma = build_kpar_sigma(tw.sigma);
    inst.separable = separability_idempotent(inst.A()).has_value();
    return inst;
}

std::size_t E2Page::diagonal(std::size_t n) const {
    std::size_t s = 0;
    for (std::size_t p = 0; p <= n && p < dims.size(); ++p)
        if (n - p < dims[p].size()) s += dims[p][n - p];
    return s;
}

E2Page homology_e2(const PipelineInstance& inst, std::size_t max_p, std::size_t max_q, GeneratorOrder order) {
    EquivariantChains ec = diagonal_chain_action(inst.lambda, inst.coefficients, inst.xi.xi,
                                                 inst.xi.sigma_double_prime, max_q + 1);
    E2Page page{std::vector<std::vector<std::size_t>>(max_p + 1, std::vector<std::size_t>(max_q + 1, 0))};
    for (std::size_t q = 0; q <= max_q; ++q) {
        Module X = module_from_operators(*inst.kpar, action_on_homology(ec, q));
        auto col = partial_homology(*inst.kpar, X, max_p, order);
        for (std::size_t p = 0; p <= max_p; ++p) page.dims[p][q] = col[p];
    }
    return page;
}

E2Page cohomology_e2(const PipelineInstance& inst, std::size_t max_p, std::size_t max_q, GeneratorOrder order) {
    EquivariantCochains ec = diagonal_cochain_action(inst.lambda, inst.coefficients, inst.xi.xi,
                                                     inst.xi.sigma_double_prime, max_q + 1);
    E2Page page{std::vector<std::vector<std::size_t>>(max_p + 1, std::vector<std::size_t>(max_q + 1, 0))};
    for (std::size_t q = 0; q <= max_q; ++q) {
        Module X = module_from_operators(*inst.kpar, action_on_cohomology(ec, q));
        auto col = partial_cohomology(*inst.kpar, X, max_p, order);
        for (std::size_t p = 0; p <= max_p; ++p) page.dims[p][q] = col[p];
    }
    return page;
}

Verdict collapse_check_separable(const PipelineInstance& inst, std::size_t max_n) {
    Verdict v{"collapse over a separable base: " + inst.name, false, false, {}, {}, {}};
    if (!inst.separable) {
        v.skipped = true;
        v.pass = true;
        v.reason = "A has no separability idempotent";
        return v;
    }
    EquivariantChains ec = diagonal_chain_action(inst.lambda, inst.coefficients, inst.xi.xi,
                                                 inst.xi.sigma_double_prime, 1);
    Module coinv = module_from_operators(*inst.kpar, action_on_homology(ec, 0));
    auto lhs = hochschild_homology_bar(inst.L(), inst.coefficients, max_n);
    auto rhs = partial_homology(*inst.kpar, coinv, max_n);
    for (std::size_t n = 0; n <= max_n; ++n) compare(v, "H_" + str(n), lhs[n], rhs[n]);
    InvariantsModule inv = hom_A_module_structure(inst.lambda, inst.coefficients, inst.xi.xi, *inst.kpar);
    auto clhs = hochschild_cohomology_bar(inst.L(), inst.coefficients, max_n);
    auto crhs = partial_cohomology(*inst.kpar, inv.carrier.module, max_n);
    for (std::size_t n = 0; n <= max_n; ++n) compare(v, "H^" + str(n), clhs[n], crhs[n]);
    finish(v);
    return v;
}

Verdict collapse_check_maclane(const PartialFactorSet& sigma, std::size_t max_n) {
    const FiniteGroup& G = sigma.group();
    const FieldSpec& f = sigma.field();
    Verdict v{"MacLane isomorphism for " + G.name(), false, false, {}, {}, {}};
    KparPtr K = build_kpar_sigma(sigma);
    CrossedStructure cs = phi_psi_crossed_iso(*K);
    PipelineInstance inst = make_instance("maclane", cs.crossed.data);
    EquivariantChains ec = diagonal_chain_action(inst.lambda, inst.coefficients, inst.xi.xi,
                                                 inst.xi.sigma_double_prime, 1);
    Module coinv = module_from_operators(*inst.kpar, action_on_homology(ec, 0));
    auto lhs = hochschild_homology_bar(K->A(), regular_bimodule(K->A()), max_n);
    auto rhs = partial_homology(*inst.kpar, coinv, max_n);
    for (std::size_t n = 0; n <= max_n; ++n) compare(v, "H_" + str(n), lhs[n], rhs[n]);

    // Group-algebra coefficients: the partial and the global group algebra see the same homology.
    const int n = G.order();
    std::vector<std::tuple<std::size_t, std::size_t, std::size_t, Scalar>> sc;
    std::vector<std::string> labels;
    for (int g = 0; g < n; ++g) {
        labels.push_back(G.label(g));
        for (int h = 0; h < n; ++h) sc.emplace_back(idx(g), idx(h), idx(G.mul(g, h)), Scalar::one(f));
    }
    auto kg = std::make_shared<const StructureAlgebra>(
        StructureAlgebra::from_triples(f, labels, sc, unit_vec(f, idx(n), 0)));
    KparPtr kp = inst.kpar;
    Matrix to_group(f, idx(n), kp->dim());
    for (std::size_t i = 0; i < kp->dim(); ++i) to_group.at(idx(kp->monoid().element(kp->monomial_of(i)).g), i) = Scalar::one(f);
    AlgebraHom q{kp->algebra(), kg, to_group};
    ValidationReport hr = validate_hom(q);
    if (!hr.ok()) v.report.fail("partial group algebra does not map onto the group algebra: " + hr.violations.front());
    Bimodule M = regular_bimodule(*kg);
    Bimodule pulled{f, M.dim, restrict_along(q, M.left_module()).act, restrict_along(q, M.right_module()).act};
    auto par = hochschild_homology_bar(kp->A(), pulled, max_n);
    auto glob = hochschild_homology_bar(*kg, M, max_n);
    for (std::size_t k = 0; k <= max_n; ++k) compare(v, "group algebra H_" + str(k), par[k], glob[k]);
    finish(v);
    return v;
}

Verdict tor_form_consistency(const PipelineInstance& inst, std::size_t max_p, std::size_t max_q) {
    Verdict v{"Tor form of the second page: " + inst.name, false, false, {}, {}, {}};
    EquivariantChains ec = diagonal_chain_action(inst.lambda, inst.coefficients, inst.xi.xi,
                                                 inst.xi.sigma_double_prime, max_q + 1);
    BSigmaModules bm = b_sigma_module_structures(*inst.k_sigma, inst.K2(), inst.xi.xi);
    v.report.merge(bm.report, "B^sigma modules: ");
    BSigmaOmega bo = build_B_sigma_omega(*inst.kpar, *inst.k_sigma);
    Module omega_r = omega_over_kpar(inst, bo, Side::Right);
    const StructureAlgebra& K = inst.kpar->A();
    std::vector<Matrix> omega_l;
    for (int g = 0; g < inst.kpar->group().order(); ++g)
        omega_l.push_back(induced_on_quotient(*bo.omega.space, K.left_matrix(inst.kpar->generator(g))));
    for (std::size_t q = 0; q <= max_q; ++q) {
        auto T = action_on_homology(ec, q);
        Module Xk2 = k2_module(inst, T);
        Module Xk = module_from_operators(*inst.kpar, T);
        auto lhs = tor_dims(inst.K2().algebra(), bm.right, Xk2, max_p);
        TensorProduct tp = tensor_over(K, omega_r, Xk);
        std::vector<Matrix> ops;
        const Matrix idX = Matrix::identity(K.field(), Xk.dim);
        for (const auto& Lg : omega_l) {
            if (!tp.preserves_relations(Lg, idX)) v.report.fail("left action on Omega (x) X is not balanced");
            ops.push_back(tp.induced(Lg, idX));
        }
        if (!v.report.ok()) break;
        auto rhs = partial_homology(*inst.kpar, module_from_operators(*inst.kpar, ops), max_p);
        for (std::size_t p = 0; p <= max_p; ++p) compare(v, "p=" + str(p) + ",q=" + str(q), lhs[p], rhs[p]);
    }
    finish(v);
    return v;
}

Verdict structural_identity_suite(const PipelineInstance& inst) {
    Verdict v{"structural identities: " + inst.name, false, false, {}, {}, {}};
    const auto& act = inst.data.action;
    const FiniteGroup& G = act.G();
    const StructureAlgebra& A = act.A();
    const StructureAlgebra& L = inst.L();
    const TwistedPartialGroupAlgebra& k2 = inst.K2();
    const TwistedPartialGroupAlgebra& kp = *inst.kpar;
    const FieldSpec& f = A.field();
    const Bimodule& M = inst.coefficients;
    const int n = G.order();
    auto embed_left = [&](const Vec& a) { return M.left_module().action(inst.lambda.embed(a)); };
    auto embed_right = [&](const Vec& a) { return M.right_module().action(inst.lambda.embed(a)); };

    // (a) idempotents act as the units of the ideals.
    Module A_mod = module_from_operators(kp, base_operators(inst));
    std::vector<Matrix> coeff = coefficient_operators(inst);
    Module M_k2 = k2_module(inst, coeff);
    Module M_kp = module_from_operators(kp, coeff);
    for (int g = 0; g < n; ++g) {
        const Vec& u = act.unit_of[idx(g)];
        if (A_mod.action(kp.idempotent(g)) != A.left_matrix(u)) v.report.fail("e_g . a != 1_g a at " + G.label(g));
        const Matrix sandwich = embed_left(u) * embed_right(u);
        if (M_kp.action(kp.idempotent(g)) != sandwich) v.report.fail("e_g . x != 1_g x 1_g at " + G.label(g));
        if (M_k2.action(k2.idempotent(g)) != sandwich) v.report.fail("e_g'' . x != 1_g x 1_g at " + G.label(g));
    }

    // Degree-0 module M / [A, M] with explicit classes.
    Bimodule MA = restrict_to_base(inst.lambda, M);
    QuotientSpace coinv(f, M.dim, commutators(A, MA));
    std::vector<Matrix> coinv_ops;
    for (const auto& T : coeff) coinv_ops.push_back(induced_on_quotient(coinv, T));
    Module Y_k2 = k2_module(inst, coinv_ops);
    Module Y_kp = module_from_operators(kp, coinv_ops);
    BSigmaModules bm = b_sigma_module_structures(*inst.k_sigma, k2, inst.xi.xi);
    v.report.merge(bm.report, "B^sigma modules: ");
    const Vec one = *bm.b_sigma.coords(inst.k_sigma->A().unit());
    TensorProduct by = tensor_over(k2.A(), bm.right, Y_k2);
    for (int g = 0; g < n; ++g) {
        const Vec eg = *bm.b_sigma.coords(inst.k_sigma->idempotent(g));
        for (std::size_t k = 0; k < Y_k2.dim; ++k) {
            const Vec y = unit_vec(f, Y_k2.dim, k);
            const Vec lhs = by.element(eg, y);
            if (lhs != by.element(one, Y_k2.apply(k2.generator(G.inv(g)), y)) ||
                lhs != by.element(one, Y_k2.apply(k2.idempotent(g), y)) ||
                lhs != by.element(one, Y_kp.apply(kp.idempotent(g), y))) {
                v.report.fail("e_g (x) y relations fail in B^sigma (x) Y at " + G.label(g));
                break;
            }
        }
        // e_g . (a (x) m) = a (x) e_g . m = e_g . a (x) m, read in M / [A, M] through a (x) m -> a m.
        for (std::size_t i = 0; i < A.dim() && v.report.ok(); ++i)
            for (std::size_t m = 0; m < M.dim; ++m) {
                const Vec am = MA.left[i].column(m);
                const Vec x = Y_kp.apply(kp.idempotent(g), coinv.project(am));
                const Vec y = coinv.project(MA.left[i].apply(M_kp.apply(kp.idempotent(g), unit_vec(f, M.dim, m))));
                const Vec z = coinv.project(MA.left_module().apply(A_mod.apply(kp.idempotent(g), A.basis(i)),
                                                                   unit_vec(f, M.dim, m)));
                if (x != y || x != z) {
                    v.report.fail("e_g acting on A (x)_{A^e} M is not balanced at " + G.label(g));
                    break;
                }
            }
    }

    // (b) Lambda -> B^sigma (x)_{B''} Lambda, lambda -> 1 (x) lambda.
    std::vector<Vec> e2;
    for (int g = 0; g < n; ++g) e2.push_back(k2.idempotent(g));
    Subalgebra b2 = subalgebra_generated(k2.A(), e2);
    std::vector<Vec> gens;
    std::vector<Matrix> mats;
    for (int g = 0; g < n; ++g) {
        if (is_zero(e2[idx(g)])) {
            if (!is_zero(act.unit_of[idx(g)])) v.report.fail("e_g'' = 0 but 1_g != 0 at " + G.label(g));
            continue;
        }
        gens.push_back(*b2.coords(e2[idx(g)]));
        mats.push_back(L.left_matrix(inst.lambda.embed(act.unit_of[idx(g)])));
    }
    Module lambda_left = close_generator_action(*b2.algebra, Side::Left, L.dim(), gens, mats);
    InducedBimodule phi_target = induced_bimodule(inst, b2, bm.right, lambda_left);
    v.report.merge(phi_target.report, "B^sigma (x) Lambda: ");
    if (phi_target.report.ok()) {
        std::vector<Vec> cols;
        for (std::size_t j = 0; j < L.dim(); ++j) cols.push_back(phi_target.tensor.element(one, L.basis(j)));
        Matrix phi = Matrix::from_columns(f, phi_target.tensor.dim(), cols);
        if (phi_target.tensor.dim() != L.dim() || rank(phi) != L.dim()) v.report.fail("phi is not bijective");
        for (std::size_t i = 0; i < L.dim(); ++i)
            if (phi * L.left_matrix(L.basis(i)) != phi_target.bimodule.left[i] * phi ||
                phi * L.right_matrix(L.basis(i)) != phi_target.bimodule.right[i] * phi) {
                v.report.fail("phi is not a bimodule map at " + L.label(i));
                break;
            }
    }

    // (e) the same construction for other right modules.
    {
        Module reg = regular_module(k2.A(), Side::Right);
        v.report.merge(induced_bimodule(inst, b2, reg, lambda_left).report, "regular (x) Lambda: ");
        BSigmaOmega bo = build_B_sigma_omega(kp, *inst.k_sigma);
        v.report.merge(induced_bimodule(inst, b2, omega_module(bo, kp, k2, Side::Right), lambda_left).report,
                       "Omega (x) Lambda: ");
    }

    // (c) M / [Lambda, M] -> B^sigma (x) (M / [A, M]), m -> 1 (x) [m].
    {
        std::vector<Vec> cols;
        for (std::size_t m = 0; m < M.dim; ++m) cols.push_back(by.element(one, coinv.project(unit_vec(f, M.dim, m))));
        Matrix F = Matrix::from_columns(f, by.dim(), cols);
        std::vector<Vec> comm = commutators(L, M);
        for (const auto& c : comm)
            if (!is_zero(F.apply(c))) {
                v.report.fail("m -> 1 (x) [m] does not kill [Lambda, M]");
                break;
            }
        const std::size_t coinv_dim = M.dim - span_rank(f, M.dim, comm);
        if (rank(F) != by.dim() || by.dim() != coinv_dim)
            v.report.fail("M/[Lambda,M] and B^sigma (x) (A (x)_{A^e} M) differ: " + str(coinv_dim) + " vs " +
                          str(by.dim()));
    }

    // (d) Hom_{Lambda^e}(Lambda, M) against Hom(B^sigma, Hom_{A^e}(A, M)), evaluating at 1.
    {
        InvariantsModule inv = hom_A_module_structure(inst.lambda, M, inst.xi.xi, kp);
        Module inv_k2 = k2_module(inst, inv.operators);
        std::vector<Matrix> homs = hom_over(k2.A(), bm.left, inv_k2);
        std::vector<Vec> images;
        for (const auto& F : homs) images.push_back(inv.carrier.inclusion.apply(F.apply(one)));
        std::vector<Vec> centre = invariants(L, M);
        const std::size_t ri = span_rank(f, M.dim, images), rc = centre.size();
        std::vector<Vec> both = images;
        both.insert(both.end(), centre.begin(), centre.end());
        if (homs.size() != rc || ri != rc || span_rank(f, M.dim, both) != rc)
            v.report.fail("Hom_{Lambda^e}(Lambda, M) differs from Hom(B^sigma, Hom_{A^e}(A, M)): " + str(rc) + " vs " +
                          str(homs.size()));
    }
    finish(v);
    return v;
}

Verdict omega_tensor_check(const PipelineInstance& inst) {
    Verdict v{"B (x) Omega vs B^sigma: " + inst.name, false, false, {}, {}, {}};
    const TwistedPartialGroupAlgebra& kp = *inst.kpar;
    const StructureAlgebra& K = kp.A();
    const FieldSpec& f = K.field();
    BSigmaOmega bo = build_B_sigma_omega(kp, *inst.k_sigma);
    BSigmaModules bm = b_sigma_module_structures(*inst.k_sigma, inst.K2(), inst.xi.xi);
    Module b_right = idempotent_module(kp, Side::Right);
    Module omega_left = omega_over_kpar(inst, bo, Side::Left);
    Module bs_right = restrict_along(inst.k2.surjection, bm.right);
    TensorProduct tp = tensor_over(K, b_right, omega_left);
    const std::size_t dO = omega_left.dim, dB = b_right.dim, dS = bs_right.dim;

    for (const auto& j : bo.omega.ideal_basis)
        if (!bs_right.action(j).is_zero()) {
            v.report.fail("the ideal of Omega does not act as zero on B^sigma");
            break;
        }
    Matrix ambient(f, dS, dB * dO);
    for (std::size_t b = 0; b < dB; ++b)
        for (std::size_t k = 0; k < dO; ++k) {
            Vec img = bs_right.action(bo.omega.space->lift(k)).apply(bo.zeta.column(b));
            for (std::size_t r = 0; r < dS; ++r) ambient.at(r, b * dO + k) = img[r];
        }
    for (const auto& rel : tp.space->relations().reduced_basis())
        if (!is_zero(ambient.apply(rel))) {
            v.report.fail("b (x) w -> zeta(b) . w is not balanced");
            break;
        }
    std::vector<Vec> cols;
    for (std::size_t k : tp.space->kept()) cols.push_back(ambient.column(k));
    Matrix iso = Matrix::from_columns(f, dS, cols);
    compare(v, "dim", tp.dim(), dS);
    if (rank(iso) != dS || tp.dim() != dS) v.report.fail("b (x) w -> zeta(b) . w is not bijective");
    const Matrix idB = Matrix::identity(f, dB);
    for (int g = 0; g < kp.group().order() && v.report.ok(); ++g) {
        const Vec x = kp.generator(g);
        Matrix on_tensor = tp.induced(idB, induced_on_quotient(*bo.omega.space, K.right_matrix(x)));
        if (iso * on_tensor != bs_right.action(x) * iso) v.report.fail("the map is not right-linear at " + kp.group().label(g));
    }
    finish(v);
    return v;
}

Verdict flatness_check(const PipelineInstance& inst, std::size_t max_q) {
    Verdict v{"flatness of Omega: " + inst.name, false, false, {}, {}, {}};
    const TwistedPartialGroupAlgebra& kp = *inst.kpar;
    BSigmaOmega bo = build_B_sigma_omega(kp, *inst.k_sigma);
    Module omega_r = omega_over_kpar(inst, bo, Side::Right);
    std::vector<std::pair<std::string, Module>> samples;
    EquivariantChains ec = diagonal_chain_action(inst.lambda, inst.coefficients, inst.xi.xi,
                                                 inst.xi.sigma_double_prime, max_q + 1);
    for (std::size_t q = 0; q <= max_q; ++q)
        samples.emplace_back("H_" + str(q) + "(A,M)", module_from_operators(kp, action_on_homology(ec, q)));
    samples.emplace_back("A", module_from_operators(kp, base_operators(inst)));
    samples.emplace_back("B", idempotent_module(kp, Side::Left));
    samples.emplace_back("regular", regular_module(kp.A(), Side::Left));
    for (const auto& [label, X] : samples) compare(v, "Tor_1 with " + label, tor_dims(kp.algebra(), omega_r, X, 1)[1], 0);
    finish(v);
    return v;
}

Verdict dimension_bound_check(const PipelineInstance& inst, std::size_t max_n, bool cohomological) {
    Verdict v{std::string(cohomological ? "cohomological" : "homological") + " dimension bound: " + inst.name, false,
              false, {}, {}, {}};
    E2Page page = cohomological ? cohomology_e2(inst, max_n, max_n) : homology_e2(inst, max_n, max_n);
    auto hh = cohomological ? hochschild_cohomology_bar(inst.L(), inst.coefficients, max_n)
                            : hochschild_homology_bar(inst.L(), inst.coefficients, max_n);
    for (std::size_t n = 0; n <= max_n; ++n) {
        const std::size_t e2 = page.diagonal(n);
        const bool holds = inst.separable ? e2 == hh[n] : e2 >= hh[n];
        v.degrees.push_back({(cohomological ? "H^" : "H_") + str(n), e2, hh[n], holds});
    }
    v.reason = inst.separable ? "separable base: equality expected" : "inequality only";
    finish(v);
    return v;
}

}  // namespace parhox
