#include <algorithm>
#include <chrono>
#include <functional>
#include <map>

#include "parhox/io.hpp"
#include "parhox/selfcheck.hpp"

namespace parhox {

using nlohmann::ordered_json;

namespace {

using Clock = std::chrono::steady_clock;

struct Context {
    ProblemSpec spec;
    PipelineOptions opt;
    ordered_json results = ordered_json::object();
    ordered_json verdicts = ordered_json::array();
    ordered_json stages = ordered_json::object();
    std::vector<std::string> notes;

    void verdict(const std::string& name, bool pass, const ValidationReport& r = {}) {
        ordered_json j;
        j["name"] = name;
        j["pass"] = pass;
        j["skipped"] = false;
        j["comparisons"] = ordered_json::array();
        j["violations"] = r.violations;
        verdicts.push_back(j);
    }
    void verdict(const Verdict& v) { verdicts.push_back(to_json(v)); }

    template <class F>
    auto stage(const std::string& name, F&& f) {
        const auto t0 = Clock::now();
        if constexpr (std::is_void_v<decltype(f())>) {
            f();
            stages[name] = std::chrono::duration<double>(Clock::now() - t0).count();
        } else {
            auto out = f();
            stages[name] = std::chrono::duration<double>(Clock::now() - t0).count();
            return out;
        }
    }
};

ordered_json dims_json(const std::vector<std::size_t>& v) { return ordered_json(v); }

ordered_json sigma_json(const PartialFactorSet& s) {
    ordered_json rows = ordered_json::array();
    for (int g = 0; g < s.order(); ++g) {
        ordered_json r = ordered_json::array();
        for (int h = 0; h < s.order(); ++h) r.push_back(s(g, h).to_string());
        rows.push_back(r);
    }
    return rows;
}

const UnitalPartialAction& require_action(const Context& c) {
    if (!c.spec.action) fail(ErrorKind::PreconditionFailed, "this command needs a partial_action");
    return *c.spec.action;
}

TwistedPartialAction working_twist(Context& c) {
    bool renormalized = false;
    TwistedPartialAction tw = spec_twist(c.spec, &renormalized);
    if (renormalized) {
        c.notes.push_back("sigma replaced by an equivalent inverse-normalized factor set");
        c.results["normalized_sigma"] = sigma_json(tw.sigma);
    }
    return tw;
}

std::optional<Bimodule> custom_module(Context& c, const TwistedPartialAction& tw) {
    if (!c.spec.module) return std::nullopt;
    CrossedProduct cp = build_crossed_product(tw, c.opt.seed);
    return build_module(*c.spec.module, *cp.algebra);
}

void cmd_validate(Context& c) {
    const FiniteGroup& G = *c.spec.group;
    c.results["group"] = {{"name", G.name()}, {"order", G.order()}, {"labels", G.labels()}};
    c.results["field"] = c.spec.field.to_string();
    c.verdict("schema", true);
    if (c.spec.sigma) {
        const PartialFactorSet& s = *c.spec.sigma;
        c.results["sigma_inverse_normalized"] = is_inverse_normalized(s);
        c.verdict("sigma_unit_and_symmetry", validate_unit_and_symmetry(s).ok(), validate_unit_and_symmetry(s));
        // The identities presuppose sigma(g, g^-1) in {0, 1}; try an equivalent factor set first.
        NormalizationResult nr = normalize_inverse_pairs(s);
        if (nr.square_roots_applied) {
            ValidationReport good = check_good_factor_set_identities(nr.nu);
            c.verdict("sigma_good_identities", good.ok(), good);
            if (nr.nu != s) c.results["normalized_sigma"] = sigma_json(nr.nu);
        } else {
            c.verdicts.push_back({{"name", "sigma_good_identities"}, {"pass", true}, {"skipped", true},
                                  {"reason", "no equivalent factor set has sigma(g, g^-1) in {0, 1}"},
                                  {"comparisons", ordered_json::array()}, {"violations", nr.report.notes}});
        }
    }
    if (c.spec.action) {
        ValidationReport r = validate_partial_action(*c.spec.action);
        c.verdict("partial_action", r.ok(), r);
    }
}

void cmd_validate_action(Context& c) {
    const UnitalPartialAction& act = require_action(c);
    ValidationReport r = c.stage("partial_action", [&] { return validate_partial_action(act); });
    c.verdict("partial_action", r.ok(), r);
    TwistedPartialAction tw{act, effective_sigma(c.spec)};
    ValidationReport t = c.stage("twist", [&] { return validate_twisted(tw); });
    c.verdict("twisted_partial_action", t.ok(), t);
    ValidationReport p = projectivity_splitting(act);
    c.verdict("projectivity_splitting", p.ok(), p);
    c.results["algebra"] = to_json(act.A());
    c.results["separable"] = separability_idempotent(act.A()).has_value();
    c.results["sigma_inverse_normalized"] = is_inverse_normalized(tw.sigma);
}

void cmd_build_kpar(Context& c) {
    const GroupPtr& G = c.spec.group;
    KparPtr K = c.stage("build", [&] {
        if (!c.spec.sigma) return build_kpar(G, c.spec.field, c.opt.max_basis);
        return build_kpar_sigma(effective_sigma(c.spec), CompletionOptions{c.opt.max_basis, 0});
    });
    c.results["exel_monoid_size"] = K->monoid().size();
    c.results["dim"] = K->dim();
    ordered_json basis = ordered_json::array();
    for (std::size_t i = 0; i < K->dim(); ++i) basis.push_back(K->monoid().label(K->monomial_of(i)));
    c.results["basis"] = basis;
    c.results["completion_log"] = K->completion_log();
    ValidationReport r = c.stage("relations", [&] { return check_defining_relations(*K); });
    c.verdict("defining_relations", r.ok(), r);
    if (!c.spec.sigma) {
        const std::size_t expected = exel_size_formula(G->order());
        ValidationReport d;
        if (K->dim() != expected)
            d.fail("dimension " + std::to_string(K->dim()) + " differs from " + std::to_string(expected));
        c.results["expected_dim"] = expected;
        c.verdict("dimension_closed_form", d.ok(), d);
    }
}

void cmd_build_crossed(Context& c) {
    TwistedPartialAction tw = working_twist(c);
    ValidationReport t = validate_twisted(tw);
    c.verdict("twisted_partial_action", t.ok(), t);
    if (!t.ok()) return;
    CrossedProduct cp = c.stage("build", [&] { return build_crossed_product(tw, c.opt.seed); });
    c.results["dim"] = cp.dim();
    c.results["degree_offsets"] = cp.offset;
    c.results["algebra"] = to_json(*cp.algebra);
    ValidationReport a = c.stage("associativity", [&] { return validate_algebra(*cp.algebra); });
    c.verdict("associative_unital", a.ok(), a);
    ValidationReport g = validate_partial_representation(gamma_sigma(cp));
    c.verdict("canonical_partial_representation", g.ok(), g);
}

void cmd_hochschild(Context& c) {
    TwistedPartialAction tw = working_twist(c);
    CrossedProduct cp = c.stage("build", [&] { return build_crossed_product(tw, c.opt.seed); });
    const StructureAlgebra& L = *cp.algebra;
    Bimodule M = c.spec.module ? build_module(*c.spec.module, L) : regular_bimodule(L);
    const std::size_t N = c.opt.max_n;
    auto hb = c.stage("homology_bar", [&] { return hochschild_homology_bar(L, M, N, true, c.opt.cap); });
    auto hr = c.stage("homology_resolution",
                      [&] { return hochschild_homology_resolution(L, M, N, GeneratorOrder::Forward, c.opt.cap); });
    auto cb = c.stage("cohomology_bar", [&] { return hochschild_cohomology_bar(L, M, N, true, c.opt.cap); });
    auto cr = c.stage("cohomology_resolution",
                      [&] { return hochschild_cohomology_resolution(L, M, N, GeneratorOrder::Forward, c.opt.cap); });
    c.results["lambda_dim"] = L.dim();
    c.results["module_dim"] = M.dim;
    c.results["homology"] = dims_json(hb);
    c.results["cohomology"] = dims_json(cb);
    c.verdict("homology_routes_agree", hb == hr);
    c.verdict("cohomology_routes_agree", cb == cr);
}

// A as a left module over the partial group algebra: [g] . a = theta_g(1_{g^-1} a).
Module algebra_as_kpar_module(const UnitalPartialAction& act, const TwistedPartialGroupAlgebra& kpar) {
    const StructureAlgebra& A = act.A();
    std::vector<Matrix> T;
    for (int g = 0; g < act.G().order(); ++g)
        T.push_back(act.theta[static_cast<std::size_t>(g)] *
                    A.left_matrix(act.unit_of[static_cast<std::size_t>(act.G().inv(g))]));
    return module_from_operators(kpar, T);
}

void cmd_partial_homology(Context& c) {
    KparPtr K = c.stage("build", [&] { return build_kpar(c.spec.group, c.spec.field, c.opt.max_basis); });
    Module X = c.spec.action ? algebra_as_kpar_module(*c.spec.action, *K) : idempotent_module(*K, Side::Left);
    c.results["coefficients"] = c.spec.action ? "partial action algebra" : "idempotent subalgebra";
    c.results["coefficient_dim"] = X.dim;
    const std::size_t N = c.opt.max_n;
    auto h = c.stage("homology", [&] { return partial_homology(*K, X, N, GeneratorOrder::Forward, c.opt.cap); });
    auto hr = c.stage("homology_reverse", [&] { return partial_homology(*K, X, N, GeneratorOrder::Reverse, c.opt.cap); });
    auto co = c.stage("cohomology", [&] { return partial_cohomology(*K, X, N, GeneratorOrder::Forward, c.opt.cap); });
    auto cor = c.stage("cohomology_reverse",
                       [&] { return partial_cohomology(*K, X, N, GeneratorOrder::Reverse, c.opt.cap); });
    c.results["homology"] = dims_json(h);
    c.results["cohomology"] = dims_json(co);
    c.verdict("resolution_independence", h == hr && co == cor);
}

void cmd_spectral(Context& c) {
    TwistedPartialAction tw = working_twist(c);
    std::optional<Bimodule> M = custom_module(c, tw);
    PipelineInstance inst = c.stage("instance", [&] { return make_instance("spectral", tw, M); });
    const std::size_t P = c.opt.max_p, Q = c.opt.max_q, N = std::min(P, Q);
    E2Page hom = c.stage("homology_e2", [&] { return homology_e2(inst, P, Q); });
    E2Page coh = c.stage("cohomology_e2", [&] { return cohomology_e2(inst, P, Q); });
    auto hh = c.stage("hochschild", [&] { return hochschild_homology_bar(inst.L(), inst.coefficients, N, true, c.opt.cap); });
    auto hc = c.stage("hochschild_dual",
                      [&] { return hochschild_cohomology_bar(inst.L(), inst.coefficients, N, true, c.opt.cap); });
    c.results["lambda_dim"] = inst.L().dim();
    c.results["separable"] = inst.separable;
    c.results["sigma_double_prime"] = sigma_json(inst.xi.sigma_double_prime);
    c.results["homology_e2"] = to_json(hom);
    c.results["cohomology_e2"] = to_json(coh);
    c.results["hochschild_homology"] = dims_json(hh);
    c.results["hochschild_cohomology"] = dims_json(hc);
    bool collapsed = true;
    for (std::size_t n = 0; n <= N; ++n) collapsed = collapsed && hom.diagonal(n) == hh[n] && coh.diagonal(n) == hc[n];
    Verdict bh = c.stage("bound", [&] { return dimension_bound_check(inst, N, false); });
    Verdict bc = c.stage("bound_dual", [&] { return dimension_bound_check(inst, N, true); });
    Verdict col = c.stage("collapse", [&] { return collapse_check_separable(inst, N); });
    c.verdict(bh);
    c.verdict(bc);
    c.verdict(col);
    c.verdict(c.stage("tor_form", [&] { return tor_form_consistency(inst, P, std::min<std::size_t>(Q, 1)); }));
    c.results["status"] = collapsed ? "collapse-consistent" : (bh.pass && bc.pass ? "bound-consistent" : "inconsistent");
}

void cmd_selfcheck(Context& c, const std::string& dir) {
    std::vector<CriterionResult> crit = c.stage("acceptance", [&] { return run_acceptance(load_fixtures(dir)); });
    ordered_json list = ordered_json::array();
    for (const auto& r : crit) {
        list.push_back({{"criterion", r.number}, {"title", r.title}, {"pass", r.pass}, {"detail", r.detail}});
        c.stages["criterion_" + std::to_string(r.number)] = r.seconds;
        c.verdict("criterion " + std::to_string(r.number) + ": " + r.title, r.pass);
    }
    c.results["criteria"] = list;
}

}  // namespace

CommandResult run_command(const std::string& command, const std::string& spec_path, const CommandFlags& flags) {
    const auto t0 = Clock::now();
    ordered_json report;
    report["tool"] = "parhox";
    report["version"] = kToolVersion;
    report["command"] = command;
    report["input_digest"] = nullptr;
    Context c;
    int code = 0;
    try {
        static const std::vector<std::string> commands{"validate", "validate-action", "build-kpar", "build-crossed",
                                                       "hochschild", "partial-homology", "spectral", "selfcheck"};
        if (std::find(commands.begin(), commands.end(), command) == commands.end())
            fail(ErrorKind::InvalidInput, "unknown command '" + command + "'");
        if (command == "selfcheck") {
            cmd_selfcheck(c, flags.fixtures_dir);
        } else {
            std::optional<FieldSpec> field;
            if (flags.field) {
                try {
                    field = parse_field(*flags.field);
                } catch (const Error& e) {
                    throw SchemaFailure({std::string("--field: ") + e.what()});
                }
            }
            c.spec = c.stage("parse", [&] { return parse_spec_file(spec_path, field); });
            report["input_digest"] = c.spec.digest;
            c.opt = c.spec.options;
            if (flags.max_n) c.opt.max_n = *flags.max_n;
            if (flags.max_p) c.opt.max_p = *flags.max_p;
            if (flags.max_q) c.opt.max_q = *flags.max_q;
            if (flags.cap) c.opt.cap = *flags.cap;
            if (flags.cap_env) {
                const std::string& v = *flags.cap_env;
                if (v.empty() || v.size() > 12 || v.find_first_not_of("0123456789") != std::string::npos)
                    throw SchemaFailure({"PARHOX_CAP: expected a non-negative integer, got '" + v + "'"});
                c.opt.cap = std::stoull(v);
            }
            if (flags.seed) c.opt.seed = *flags.seed;
            static const std::map<std::string, std::function<void(Context&)>> table{
                {"validate", cmd_validate},         {"validate-action", cmd_validate_action},
                {"build-kpar", cmd_build_kpar},     {"build-crossed", cmd_build_crossed},
                {"hochschild", cmd_hochschild},     {"partial-homology", cmd_partial_homology},
                {"spectral", cmd_spectral}};
            table.at(command)(c);
        }
        bool ok = true;
        for (const auto& v : c.verdicts) ok = ok && v["pass"].get<bool>();
        code = ok ? 0 : 1;
    } catch (const SchemaFailure& e) {
        report["error"] = {{"kind", "SchemaError"}, {"message", e.what()}, {"issues", e.issues()}};
        code = 2;
    } catch (const Error& e) {
        report["error"] = {{"kind", to_string(e.kind())}, {"message", e.what()}};
        code = 2;
    } catch (const std::exception& e) {
        report["error"] = {{"kind", "InternalError"}, {"message", e.what()}};
        code = 2;
    }
    report["results"] = c.results;
    report["verdicts"] = c.verdicts;
    if (!c.notes.empty()) report["notes"] = c.notes;
    report["ok"] = code == 0;
    report["exit_code"] = code;
    c.stages["total"] = std::chrono::duration<double>(Clock::now() - t0).count();
    report["timing"] = c.stages;
    return {report, code};
}

}  // namespace parhox
