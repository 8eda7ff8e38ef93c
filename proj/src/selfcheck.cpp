#include "parhox/selfcheck.hpp"

#include <algorithm>
#include <chrono>
#include <filesystem>
#include <functional>
#include <sstream>

namespace parhox {

namespace {

using Clock = std::chrono::steady_clock;

double since(Clock::time_point t0) { return std::chrono::duration<double>(Clock::now() - t0).count(); }

// Collects failures of one criterion; the first few are kept for the detail line.
struct Tally {
    std::size_t checks = 0;
    std::vector<std::string> failures;

    void expect(bool ok, const std::string& what) {
        ++checks;
        if (!ok) failures.push_back(what);
    }
    void verdict(const Verdict& v, const std::string& where) {
        ++checks;
        if (v.pass) return;
        std::string why = v.reason;
        for (const auto& d : v.degrees)
            if (!d.holds) why += " " + d.label + ":" + std::to_string(d.lhs) + "/" + std::to_string(d.rhs);
        if (!v.report.violations.empty()) why += " " + v.report.violations.front();
        failures.push_back(where + " " + v.name + why);
    }
    // Runs f, turning an escaping library error into a failure.
    void guard(const std::string& where, const std::function<void()>& f) {
        try {
            f();
        } catch (const std::exception& e) {
            ++checks;
            failures.push_back(where + ": " + e.what());
        }
    }
    std::string detail() const {
        std::ostringstream os;
        os << checks << " checks";
        if (!failures.empty()) {
            os << ", " << failures.size() << " failed: " << failures.front();
            if (failures.size() > 1) os << " (+" << failures.size() - 1 << " more)";
        }
        return os.str();
    }
};

bool bijective_hom(const AlgebraHom& f) {
    return validate_hom(f).ok() && f.source->dim() == f.target->dim() && rank(f.map) == f.source->dim();
}

bool is_identity(const Matrix& m) { return m.rows() == m.cols() && m == Matrix::identity(m.field(), m.rows()); }

PartialFactorSet normalized(const PartialFactorSet& s) {
    return is_inverse_normalized(s) ? s : normalize_inverse_pairs(s).nu;
}

struct SigmaCase {
    std::string name;
    PartialFactorSet sigma;
};

// Factor sets carried by fixtures: explicit ones, and the constant one of actions without a twist.
std::vector<SigmaCase> sigma_cases(const std::vector<Fixture>& fx) {
    std::vector<SigmaCase> out;
    for (const auto& f : fx)
        if (f.spec.sigma || f.spec.action) out.push_back({f.name, effective_sigma(f.spec)});
    return out;
}

struct InstanceCase {
    std::string name;
    PipelineInstance inst;
};

bool is_z2_scalar_twist(const Fixture& f) {
    return f.spec.group->order() == 2 && f.spec.action && f.spec.action->A().dim() == 1;
}

}  // namespace

std::vector<Fixture> load_fixtures(const std::string& dir) {
    namespace fs = std::filesystem;
    if (!fs::is_directory(dir)) fail(ErrorKind::IOError, "fixture directory not found: " + dir);
    std::vector<fs::path> files;
    for (const auto& e : fs::directory_iterator(dir))
        if (e.path().extension() == ".json") files.push_back(e.path());
    std::sort(files.begin(), files.end());
    std::vector<Fixture> out;
    for (const auto& p : files) out.push_back({p.stem().string(), parse_spec_file(p.string())});
    return out;
}

std::vector<CriterionResult> run_acceptance(const std::vector<Fixture>& fx) {
    const auto start = Clock::now();
    std::vector<CriterionResult> results;
    const FieldSpec Q = FieldSpec::rationals();
    const auto sigmas = sigma_cases(fx);
    std::size_t unattainable = 0;  // factor sets outside the reach of the good identities

    auto run = [&](int number, std::string title, double limit, const std::function<void(Tally&)>& body) {
        const auto t0 = Clock::now();
        Tally t;
        t.guard("criterion " + std::to_string(number), [&] { body(t); });
        const double secs = since(t0);
        if (limit > 0) t.expect(secs < limit, "took " + std::to_string(secs) + " s, limit " + std::to_string(limit));
        results.push_back({number, std::move(title), t.failures.empty(), t.detail(), secs});
        if (number == 4 && unattainable > 0)
            results.back().detail += "; good identities not applicable to " + std::to_string(unattainable) +
                                     " factor sets without square roots of sigma(g, g)";
    };

    // Pipeline instances are shared by the homological criteria.
    std::vector<InstanceCase> instances;
    std::vector<std::string> instance_errors;
    for (const auto& f : fx) {
        if (!f.spec.action) continue;
        try {
            instances.push_back({f.name, instance_from_spec(f.name, f.spec)});
        } catch (const std::exception& e) {
            instance_errors.push_back(f.name + ": " + e.what());
        }
    }
    auto report_instance_errors = [&](Tally& t) {
        for (const auto& e : instance_errors) t.expect(false, e);
        t.expect(!instances.empty(), "no fixture carries a partial action");
    };

    run(1, "constant-one twist reproduces the partial group algebra", 30, [&](Tally& t) {
        const std::vector<std::pair<GroupPtr, std::size_t>> groups{
            {std::make_shared<const FiniteGroup>(FiniteGroup::cyclic(2)), 3},
            {std::make_shared<const FiniteGroup>(FiniteGroup::cyclic(3)), 8},
            {std::make_shared<const FiniteGroup>(FiniteGroup::klein_four()), 20},
            {std::make_shared<const FiniteGroup>(FiniteGroup::symmetric3()), 112}};
        for (const auto& [G, expected] : groups) {
            KparPtr plain = build_kpar(G, Q);
            KparPtr twisted = build_kpar_sigma(PartialFactorSet::constant_one(G, Q));
            const std::string g = G->name();
            t.expect(plain->dim() == expected, g + " dim " + std::to_string(plain->dim()));
            t.expect(twisted->dim() == expected, g + " twisted dim " + std::to_string(twisted->dim()));
            t.expect(bijective_hom(universal_hom(*twisted, plain->canonical())), g + " [g] -> [g] is not an iso");
            t.expect(check_defining_relations(*twisted).ok(), g + " relations");
        }
    });

    run(2, "idempotent twists: completion equals quotient", 30, [&](Tally& t) {
        for (const auto& c : sigmas)
            t.guard(c.name, [&] {
                const PartialFactorSet s2 = xi_sigma_double_prime(normalized(c.sigma)).sigma_double_prime;
                KparPtr completed = build_kpar_sigma(s2);
                IdempotentQuotient q = build_kpar_idempotent(s2);
                t.expect(completed->dim() == q.quotient->dim(), c.name + " dims differ");
                t.expect(bijective_hom(universal_hom(*completed, q.quotient->canonical())),
                         c.name + " [g] -> [g] is not an iso");
                t.expect(validate_hom(q.surjection).ok(), c.name + " surjection is not a homomorphism");
            });
    });

    run(3, "crossed-product maps are mutually inverse", 0, [&](Tally& t) {
        std::vector<SigmaCase> cases = sigmas;
        auto Z2 = std::make_shared<const FiniteGroup>(FiniteGroup::cyclic(2));
        const FieldSpec F7 = FieldSpec::prime(7);
        for (const auto& [f, lam] : std::vector<std::pair<FieldSpec, std::string>>{{Q, "1"}, {Q, "2"}, {Q, "1/3"}, {F7, "4"}}) {
            PartialFactorSet s = PartialFactorSet::constant_one(Z2, f);
            s.set(1, 1, Scalar::parse(f, lam));
            cases.push_back({"Z2 lambda " + lam + " over " + f.to_string(), s});
        }
        for (const auto& c : cases)
            t.guard(c.name, [&] {
                KparPtr K = build_kpar_sigma(c.sigma);
                CrossedStructure cs = phi_psi_crossed_iso(*K);
                t.expect(validate_hom(cs.phi).ok() && validate_hom(cs.psi).ok(), c.name + " maps are not homomorphisms");
                t.expect(is_identity(cs.psi.map * cs.phi.map), c.name + " psi phi != id");
                t.expect(is_identity(cs.phi.map * cs.psi.map), c.name + " phi psi != id");
            });
    });

    run(4, "factor-set calculus", 0, [&](Tally& t) {
        for (const auto& c : sigmas)
            t.guard(c.name, [&] {
                const PartialFactorSet s = normalized(c.sigma);
                const FiniteGroup& G = s.group();
                t.expect(involution_star(involution_star(s)) == s, c.name + " star is not an involution");
                const PartialFactorSet sp = sigma_prime(s);
                t.expect(sp == involution_star(sp), c.name + " sigma' is not self-dual");
                XiResult xr = xi_sigma_double_prime(s);
                t.expect(xr.sigma_double_prime.is_idempotent(), c.name + " sigma'' leaves {0, 1}");
                t.expect(involution_star(xr.sigma_double_prime) == xr.sigma_double_prime, c.name + " sigma'' not self-dual");
                for (int g = 0; g < G.order(); ++g)
                    t.expect(xr.xi[static_cast<std::size_t>(g)] == xr.xi[static_cast<std::size_t>(G.inv(g))],
                             c.name + " xi(g) != xi(g^-1) at " + G.label(g));
                // Only meaningful once sigma(g, g^-1) in {0, 1} for involutions too.
                NormalizationResult nr = normalize_inverse_pairs(c.sigma);
                if (!nr.square_roots_applied) {
                    ++unattainable;
                    return;
                }
                ValidationReport good = check_good_factor_set_identities(nr.nu);
                t.expect(good.ok(), c.name + " " + (good.ok() ? "" : good.violations.front()));
            });
    });

    run(5, "homology does not depend on the route", 180, [&](Tally& t) {
        report_instance_errors(t);
        for (const auto& ic : instances)
            t.guard(ic.name, [&] {
                const StructureAlgebra& L = ic.inst.L();
                const Bimodule& M = ic.inst.coefficients;
                const std::size_t N = L.dim() <= 6 ? 3 : 2;
                t.expect(hochschild_homology_bar(L, M, N) == hochschild_homology_resolution(L, M, N),
                         ic.name + " Hochschild homology routes differ");
                t.expect(hochschild_homology_bar(L, M, N, false) == hochschild_homology_bar(L, M, N, true),
                         ic.name + " normalized and unnormalized bar differ");
                t.expect(hochschild_cohomology_bar(L, M, N) == hochschild_cohomology_resolution(L, M, N),
                         ic.name + " Hochschild cohomology routes differ");
                t.expect(hochschild_homology_resolution(L, M, N, GeneratorOrder::Reverse) ==
                             hochschild_homology_resolution(L, M, N),
                         ic.name + " Hochschild homology depends on the resolution");

                const TwistedPartialGroupAlgebra& K = *ic.inst.kpar;
                Module Bright = idempotent_module(K, Side::Right), Bleft = idempotent_module(K, Side::Left);
                auto base = tor_dims(K.algebra(), Bright, Bleft, 2);
                t.expect(tor_dims(K.algebra(), Bright, Bleft, 2, GeneratorOrder::Reverse) == base,
                         ic.name + " Tor depends on generator order");
                t.expect(tor_dims(K.algebra(), Bright, Bleft, 2, GeneratorOrder::Forward, TorRoute::ResolveRight) == base,
                         ic.name + " Tor depends on the resolved side");
                t.expect(ext_dims(K.algebra(), Bleft, Bleft, 2) ==
                             ext_dims(K.algebra(), Bleft, Bleft, 2, GeneratorOrder::Reverse),
                         ic.name + " Ext depends on generator order");
            });
    });

    run(6, "equivariance gate", 0, [&](Tally& t) {
        report_instance_errors(t);
        for (const auto& ic : instances)
            t.guard(ic.name, [&] {
                const PipelineInstance& in = ic.inst;
                EquivariantChains ec =
                    diagonal_chain_action(in.lambda, in.coefficients, in.xi.xi, in.xi.sigma_double_prime, 3);
                t.expect(ec.report.ok(), ic.name + " chains: " + (ec.report.ok() ? "" : ec.report.violations.front()));
                EquivariantCochains cc =
                    diagonal_cochain_action(in.lambda, in.coefficients, in.xi.xi, in.xi.sigma_double_prime, 3);
                t.expect(cc.report.ok(), ic.name + " cochains: " + (cc.report.ok() ? "" : cc.report.violations.front()));
            });
    });

    run(7, "collapse on separable and group-algebra inputs", 0, [&](Tally& t) {
        bool z3_seen = false;
        for (const auto& ic : instances)
            if (ic.name == "z3_ksq") {
                z3_seen = true;
                t.verdict(collapse_check_separable(ic.inst, 2), ic.name);
            }
        t.expect(z3_seen, "z3_ksq fixture missing");
        std::size_t maclane = 0;
        for (const auto& f : fx)
            if (is_z2_scalar_twist(f)) {
                ++maclane;
                t.guard(f.name, [&] { t.verdict(collapse_check_maclane(effective_sigma(f.spec), 2), f.name); });
            }
        t.expect(maclane >= 2, "needs the trivial and a scalar Z2 twist");
    });

    run(8, "Tor form of the second page", 0, [&](Tally& t) {
        report_instance_errors(t);
        for (const auto& ic : instances)
            t.guard(ic.name, [&] {
                t.verdict(tor_form_consistency(ic.inst, 2, 1), ic.name);
                t.verdict(omega_tensor_check(ic.inst), ic.name);
            });
    });

    run(9, "structural identities and flatness", 0, [&](Tally& t) {
        report_instance_errors(t);
        for (const auto& ic : instances)
            t.guard(ic.name, [&] {
                t.verdict(structural_identity_suite(ic.inst), ic.name);
                t.verdict(flatness_check(ic.inst, 1), ic.name);
            });
    });

    run(10, "second-page dimension bound", 0, [&](Tally& t) {
        report_instance_errors(t);
        for (const auto& ic : instances)
            t.guard(ic.name, [&] {
                t.verdict(dimension_bound_check(ic.inst, 2, false), ic.name);
                t.verdict(dimension_bound_check(ic.inst, 2, true), ic.name);
            });
        t.expect(since(start) < 600, "whole self-check exceeded 10 minutes");
    });

    return results;
}

}  // namespace parhox
