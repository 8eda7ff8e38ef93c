#include "parhox/io.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <sstream>

#include <openssl/evp.h>

namespace parhox {

using nlohmann::json;
using nlohmann::ordered_json;

namespace {

std::size_t idx_size(const GroupPtr& G) { return static_cast<std::size_t>(G->order()); }

std::string join(const std::vector<std::string>& xs) {
    std::string out;
    for (const auto& x : xs) out += (out.empty() ? "" : "; ") + x;
    return out;
}

// Collects schema problems with their JSON paths instead of stopping at the first.
struct Issues {
    std::vector<std::string> list;
    void add(const std::string& path, const std::string& msg) { list.push_back((path.empty() ? "/" : path) + ": " + msg); }
    bool any() const { return !list.empty(); }
};

std::string at(const std::string& path, const std::string& key) { return path + "/" + key; }
std::string at(const std::string& path, std::size_t i) { return path + "/" + std::to_string(i); }

std::optional<std::size_t> get_size(const json& j, const std::string& path, Issues& is) {
    if (!j.is_number_integer() || j.get<long long>() < 0) {
        is.add(path, "expected a non-negative integer");
        return std::nullopt;
    }
    return static_cast<std::size_t>(j.get<long long>());
}

std::optional<Scalar> get_scalar(const json& j, const FieldSpec& f, const std::string& path, Issues& is) {
    try {
        if (j.is_number_integer()) return Scalar(f, static_cast<long>(j.get<long long>()));
        if (j.is_string()) return Scalar::parse(f, j.get<std::string>());
    } catch (const Error& e) {
        is.add(path, e.what());
        return std::nullopt;
    }
    is.add(path, "expected an integer or a string such as \"1/3\"");
    return std::nullopt;
}

std::optional<Vec> get_vec(const json& j, const FieldSpec& f, std::size_t n, const std::string& path, Issues& is) {
    if (!j.is_array() || j.size() != n) {
        is.add(path, "expected an array of length " + std::to_string(n));
        return std::nullopt;
    }
    Vec v;
    bool ok = true;
    for (std::size_t i = 0; i < n; ++i) {
        auto s = get_scalar(j[i], f, at(path, i), is);
        ok = ok && s.has_value();
        v.push_back(s ? *s : Scalar::zero(f));
    }
    return ok ? std::optional<Vec>(v) : std::nullopt;
}

// Matrices are given as lists of rows.
std::optional<Matrix> get_matrix(const json& j, const FieldSpec& f, std::size_t r, std::size_t c,
                                 const std::string& path, Issues& is) {
    if (!j.is_array() || j.size() != r) {
        is.add(path, "expected " + std::to_string(r) + " rows");
        return std::nullopt;
    }
    Matrix m(f, r, c);
    bool ok = true;
    for (std::size_t i = 0; i < r; ++i) {
        auto row = get_vec(j[i], f, c, at(path, i), is);
        if (!row) {
            ok = false;
            continue;
        }
        for (std::size_t k = 0; k < c; ++k) m.at(i, k) = (*row)[k];
    }
    return ok ? std::optional<Matrix>(m) : std::nullopt;
}

GroupPtr named_group(const std::string& raw) {
    std::string s;
    for (char ch : raw) s += static_cast<char>(std::toupper(static_cast<unsigned char>(ch)));
    if (s == "TRIVIAL" || s == "1") return std::make_shared<const FiniteGroup>(FiniteGroup::trivial());
    if (s == "Z2XZ2" || s == "V4" || s == "KLEIN") return std::make_shared<const FiniteGroup>(FiniteGroup::klein_four());
    if (s == "S3") return std::make_shared<const FiniteGroup>(FiniteGroup::symmetric3());
    if (s.size() > 1 && (s[0] == 'Z' || s[0] == 'C')) {
        const std::string digits = s.substr(1);
        if (!digits.empty() && digits.find_first_not_of("0123456789") == std::string::npos && digits.size() < 4)
            return std::make_shared<const FiniteGroup>(FiniteGroup::cyclic(std::stoi(digits)));
    }
    return nullptr;
}

GroupPtr parse_group(const json& j, Issues& is) {
    const std::string path = "/group";
    try {
        if (j.is_string()) {
            if (auto G = named_group(j.get<std::string>())) return G;
            is.add(path, "unknown group name '" + j.get<std::string>() + "'");
            return nullptr;
        }
        if (!j.is_object()) {
            is.add(path, "expected a name or an object");
            return nullptr;
        }
        const std::string name = j.contains("name") && j["name"].is_string() ? j["name"].get<std::string>() : "";
        if (j.contains("cyclic")) {
            auto n = get_size(j["cyclic"], at(path, "cyclic"), is);
            if (n && *n >= 1 && *n <= 63) return std::make_shared<const FiniteGroup>(FiniteGroup::cyclic(static_cast<int>(*n)));
            if (n) is.add(at(path, "cyclic"), "order must be between 1 and 63");
            return nullptr;
        }
        if (j.contains("cayley")) {
            auto table = j["cayley"].get<std::vector<std::vector<int>>>();
            std::vector<std::string> labels;
            if (j.contains("labels")) labels = j["labels"].get<std::vector<std::string>>();
            return std::make_shared<const FiniteGroup>(FiniteGroup(table, name, labels));
        }
        if (j.contains("permutations")) {
            auto gens = j["permutations"].get<std::vector<std::vector<int>>>();
            return std::make_shared<const FiniteGroup>(FiniteGroup::from_permutations(gens, name));
        }
        is.add(path, "expected one of cyclic, cayley, permutations");
    } catch (const Error& e) {
        is.add(path, e.what());
    } catch (const json::exception& e) {
        is.add(path, std::string("malformed group: ") + e.what());
    }
    return nullptr;
}

AlgebraPtr parse_algebra(const json& j, const FieldSpec& f, const std::string& path, Issues& is) {
    if (!j.is_object()) {
        is.add(path, "expected an object");
        return nullptr;
    }
    const Scalar one = Scalar::one(f);
    std::vector<std::tuple<std::size_t, std::size_t, std::size_t, Scalar>> sc;
    std::vector<std::string> labels;
    Vec unit;
    if (j.contains("preset")) {
        const std::string p = j["preset"].is_string() ? j["preset"].get<std::string>() : "";
        if (p == "field") {
            labels = {"1"};
            sc.emplace_back(0, 0, 0, one);
            unit = unit_vec(f, 1, 0);
        } else if (p == "diagonal") {
            if (!j.contains("dim")) {
                is.add(path, "preset diagonal needs dim");
                return nullptr;
            }
            auto d = get_size(j["dim"], at(path, "dim"), is);
            if (!d || *d == 0) return nullptr;
            unit = zero_vec(f, *d);
            for (std::size_t i = 0; i < *d; ++i) {
                labels.push_back("e" + std::to_string(i + 1));
                sc.emplace_back(i, i, i, one);
                unit[i] = one;
            }
        } else if (p == "dual_numbers") {
            labels = {"1", "x"};
            sc = {{0, 0, 0, one}, {0, 1, 1, one}, {1, 0, 1, one}};
            unit = unit_vec(f, 2, 0);
        } else {
            is.add(at(path, "preset"), "unknown preset (field, diagonal, dual_numbers)");
            return nullptr;
        }
    } else {
        if (!j.contains("dim") || !j.contains("unit") || !j.contains("products")) {
            is.add(path, "expected dim, unit and products");
            return nullptr;
        }
        auto d = get_size(j["dim"], at(path, "dim"), is);
        if (!d || *d == 0) return nullptr;
        auto u = get_vec(j["unit"], f, *d, at(path, "unit"), is);
        if (!u) return nullptr;
        unit = *u;
        if (j.contains("labels")) {
            labels = j["labels"].get<std::vector<std::string>>();
            if (labels.size() != *d) is.add(at(path, "labels"), "one label per basis element is required");
        } else {
            for (std::size_t i = 0; i < *d; ++i) labels.push_back("b" + std::to_string(i));
        }
        const json& pr = j["products"];
        if (!pr.is_array()) {
            is.add(at(path, "products"), "expected a list of [i, j, k, c]");
            return nullptr;
        }
        for (std::size_t t = 0; t < pr.size(); ++t) {
            const std::string pp = at(at(path, "products"), t);
            if (!pr[t].is_array() || pr[t].size() != 4) {
                is.add(pp, "expected [i, j, k, c]");
                continue;
            }
            auto i = get_size(pr[t][0], at(pp, 0), is), jj = get_size(pr[t][1], at(pp, 1), is),
                 k = get_size(pr[t][2], at(pp, 2), is);
            auto c = get_scalar(pr[t][3], f, at(pp, 3), is);
            if (!i || !jj || !k || !c) continue;
            if (*i >= *d || *jj >= *d || *k >= *d) {
                is.add(pp, "index out of range");
                continue;
            }
            sc.emplace_back(*i, *jj, *k, *c);
        }
        if (is.any()) return nullptr;
    }
    auto A = std::make_shared<const StructureAlgebra>(StructureAlgebra::from_triples(f, labels, sc, unit));
    ValidationReport rep = validate_algebra(*A);
    if (!rep.ok()) {
        is.add(path, "not a unital associative algebra: " + rep.violations.front());
        return nullptr;
    }
    return A;
}

std::optional<PartialFactorSet> parse_sigma(const json& j, const FieldSpec& f, const GroupPtr& G,
                                            const std::string& path, Issues& is) {
    const std::size_t n = idx_size(G);
    if (!j.is_array() || j.size() != n) {
        is.add(path, "expected an " + std::to_string(n) + " x " + std::to_string(n) + " table");
        return std::nullopt;
    }
    std::vector<Scalar> vals;
    bool ok = true;
    for (std::size_t g = 0; g < n; ++g) {
        auto row = get_vec(j[g], f, n, at(path, g), is);
        if (!row) {
            ok = false;
            continue;
        }
        vals.insert(vals.end(), row->begin(), row->end());
    }
    if (!ok) return std::nullopt;
    return PartialFactorSet(G, f, vals);
}

}  // namespace

SchemaFailure::SchemaFailure(std::vector<std::string> issues)
    : Error(ErrorKind::SchemaError, join(issues)), issues_(std::move(issues)) {}

std::string sha256_hex(const std::string& data) {
    unsigned char md[EVP_MAX_MD_SIZE];
    unsigned int len = 0;
    if (EVP_Digest(data.data(), data.size(), md, &len, EVP_sha256(), nullptr) != 1)
        fail(ErrorKind::IOError, "SHA-256 computation failed");
    static const char* hex = "0123456789abcdef";
    std::string out;
    for (unsigned int i = 0; i < len; ++i) {
        out += hex[md[i] >> 4];
        out += hex[md[i] & 15];
    }
    return out;
}

FieldSpec parse_field(const std::string& raw) {
    std::string s;
    for (char ch : raw)
        if (!std::isspace(static_cast<unsigned char>(ch))) s += static_cast<char>(std::toupper(static_cast<unsigned char>(ch)));
    if (s == "Q" || s == "QQ" || s == "RATIONALS") return FieldSpec::rationals();
    std::string digits;
    if (s.rfind("GF(", 0) == 0 && s.back() == ')') digits = s.substr(3, s.size() - 4);
    else if (s.rfind("F", 0) == 0) digits = s.substr(1);
    if (digits.empty() || digits.size() > 9 || digits.find_first_not_of("0123456789") != std::string::npos)
        fail(ErrorKind::SchemaError, "unknown field '" + raw + "' (use Q or Fp)");
    const std::uint64_t p = std::stoull(digits);
    if (!is_prime(p)) fail(ErrorKind::SchemaError, std::to_string(p) + " is not prime");
    return FieldSpec::prime(p);
}

ProblemSpec parse_spec(const json& doc, const std::optional<FieldSpec>& field_override) {
    Issues is;
    ProblemSpec spec;
    if (!doc.is_object()) throw SchemaFailure({"/: expected a JSON object"});
    static const std::vector<std::string> known{"field", "group", "sigma", "partial_action", "module", "options", "name",
                                                "description"};
    for (auto it = doc.begin(); it != doc.end(); ++it)
        if (std::find(known.begin(), known.end(), it.key()) == known.end()) is.add("/" + it.key(), "unknown key");

    spec.canonical = doc;
    if (field_override) {
        spec.field = *field_override;
        spec.canonical["field"] = field_override->to_string();
    } else if (!doc.contains("field")) {
        is.add("/field", "missing (or pass --field)");
    } else {
        try {
            if (doc["field"].is_string()) spec.field = parse_field(doc["field"].get<std::string>());
            else if (doc["field"].is_number_integer()) {
                const long long p = doc["field"].get<long long>();
                if (p == 0) spec.field = FieldSpec::rationals();
                else if (p < 0 || !is_prime(static_cast<std::uint64_t>(p))) is.add("/field", std::to_string(p) + " is not prime");
                else spec.field = FieldSpec::prime(static_cast<std::uint64_t>(p));
            } else is.add("/field", "expected \"Q\" or \"Fp\"");
        } catch (const Error& e) {
            is.add("/field", e.what());
        }
    }
    if (is.any()) throw SchemaFailure(is.list);
    const FieldSpec& f = spec.field;

    if (!doc.contains("group")) is.add("/group", "missing");
    else spec.group = parse_group(doc["group"], is);

    if (doc.contains("options")) {
        const json& o = doc["options"];
        if (!o.is_object()) is.add("/options", "expected an object");
        else
            for (auto it = o.begin(); it != o.end(); ++it) {
                const std::string p = "/options/" + it.key();
                auto v = get_size(it.value(), p, is);
                if (!v) continue;
                if (it.key() == "max_n") spec.options.max_n = *v;
                else if (it.key() == "max_p") spec.options.max_p = *v;
                else if (it.key() == "max_q") spec.options.max_q = *v;
                else if (it.key() == "cap") spec.options.cap = *v;
                else if (it.key() == "max_basis") spec.options.max_basis = *v;
                else if (it.key() == "seed") spec.options.seed = *v;
                else is.add(p, "unknown option");
            }
    }
    if (!spec.group) throw SchemaFailure(is.list.empty() ? std::vector<std::string>{"/group: invalid"} : is.list);

    if (doc.contains("sigma")) spec.sigma = parse_sigma(doc["sigma"], f, spec.group, "/sigma", is);

    std::size_t lambda_dim = 0;
    if (doc.contains("partial_action")) {
        const json& pa = doc["partial_action"];
        const std::string path = "/partial_action";
        const std::size_t n = idx_size(spec.group);
        if (!pa.is_object() || !pa.contains("algebra") || !pa.contains("one_g") || !pa.contains("theta")) {
            is.add(path, "expected algebra, one_g and theta");
        } else if (auto A = parse_algebra(pa["algebra"], f, at(path, "algebra"), is)) {
            const std::size_t d = A->dim();
            UnitalPartialAction act{A, spec.group, {}, {}};
            const json& ones = pa["one_g"];
            const json& th = pa["theta"];
            if (!ones.is_array() || ones.size() != n) is.add(at(path, "one_g"), "expected one idempotent per group element");
            if (!th.is_array() || th.size() != n) is.add(at(path, "theta"), "expected one matrix per group element");
            if (!is.any()) {
                for (std::size_t g = 0; g < n; ++g) {
                    auto u = get_vec(ones[g], f, d, at(at(path, "one_g"), g), is);
                    auto m = get_matrix(th[g], f, d, d, at(at(path, "theta"), g), is);
                    if (u) act.unit_of.push_back(*u);
                    if (m) act.theta.push_back(*m);
                }
                if (!is.any()) {
                    ValidationReport rep = validate_partial_action(act);
                    if (!rep.ok()) is.add(path, "not a unital partial action: " + rep.violations.front());
                    else spec.action = act;
                }
            }
            if (pa.contains("sigma")) {
                auto s = parse_sigma(pa["sigma"], f, spec.group, at(path, "sigma"), is);
                if (s && spec.sigma && *s != *spec.sigma) is.add(at(path, "sigma"), "conflicts with /sigma");
                if (s) spec.sigma = s;
            }
            if (spec.action) {
                std::size_t total = 0;
                for (std::size_t g = 0; g < n; ++g) {
                    Echelon e(f, d);
                    for (std::size_t i = 0; i < d; ++i) e.insert(A->multiply(act.unit_of[g], A->basis(i)));
                    total += e.rank();
                }
                lambda_dim = total;
            }
        }
    }

    if (doc.contains("module")) {
        const json& m = doc["module"];
        if (m.is_string() && m.get<std::string>() == "regular") {
        } else if (!spec.action && !is.any()) {
            is.add("/module", "a coefficient bimodule needs a partial action");
        } else if (!m.is_object() || !m.contains("dim")) {
            is.add("/module", "expected \"regular\" or an object with dim, left, right");
        } else if (auto dim = get_size(m["dim"], "/module/dim", is)) {
            ModuleSpec ms{*dim, {}, {}};
            for (const char* side : {"left", "right"}) {
                const std::string sp = std::string("/module/") + side;
                if (!m.contains(side) || !m[side].is_array()) {
                    is.add(sp, "expected a list of {element, matrix}");
                    continue;
                }
                for (std::size_t t = 0; t < m[side].size(); ++t) {
                    const json& e = m[side][t];
                    const std::string ep = at(sp, t);
                    if (!e.is_object() || !e.contains("element") || !e.contains("matrix")) {
                        is.add(ep, "expected {element, matrix}");
                        continue;
                    }
                    auto v = get_vec(e["element"], f, lambda_dim, at(ep, "element"), is);
                    auto mat = get_matrix(e["matrix"], f, *dim, *dim, at(ep, "matrix"), is);
                    if (v && mat) (side[0] == 'l' ? ms.left : ms.right).emplace_back(*v, *mat);
                }
            }
            spec.module = ms;
        }
    }
    if (spec.options.max_basis > 4096) is.add("/options/max_basis", "at most 4096");
    if (is.any()) throw SchemaFailure(is.list);
    spec.digest = sha256_hex(spec.canonical.dump());
    return spec;
}

ProblemSpec parse_spec_file(const std::string& path, const std::optional<FieldSpec>& field_override) {
    std::ifstream in(path);
    if (!in) fail(ErrorKind::IOError, "cannot read " + path);
    json doc;
    try {
        doc = json::parse(in);
    } catch (const json::parse_error& e) {
        throw SchemaFailure({std::string("/: invalid JSON: ") + e.what()});
    }
    return parse_spec(doc, field_override);
}

PartialFactorSet effective_sigma(const ProblemSpec& spec) {
    return spec.sigma ? *spec.sigma : PartialFactorSet::constant_one(spec.group, spec.field);
}

Bimodule build_module(const ModuleSpec& m, const StructureAlgebra& L) {
    std::vector<Vec> lg, rg;
    std::vector<Matrix> lm, rm;
    for (const auto& [v, mat] : m.left) {
        lg.push_back(v);
        lm.push_back(mat);
    }
    for (const auto& [v, mat] : m.right) {
        rg.push_back(v);
        rm.push_back(mat);
    }
    Module left = close_generator_action(L, Side::Left, m.dim, lg, lm);
    Module right = close_generator_action(L, Side::Right, m.dim, rg, rm);
    Bimodule out{L.field(), m.dim, left.act, right.act};
    ValidationReport rep = validate_bimodule(L, out);
    if (!rep.ok()) fail(ErrorKind::ActionMismatch, "module: " + rep.violations.front());
    return out;
}

TwistedPartialAction spec_twist(const ProblemSpec& spec, bool* renormalized) {
    if (!spec.action) fail(ErrorKind::PreconditionFailed, "this command needs a partial_action");
    TwistedPartialAction tw{*spec.action, effective_sigma(spec)};
    if (renormalized) *renormalized = false;
    if (is_inverse_normalized(tw.sigma)) return tw;
    if (spec.module)
        fail(ErrorKind::PreconditionFailed,
             "sigma(g, g^-1) is not in {0, 1} for some g with g^2 != 1; normalize sigma before giving a custom module");
    tw.sigma = normalize_inverse_pairs(tw.sigma).nu;
    if (renormalized) *renormalized = true;
    return tw;
}

PipelineInstance instance_from_spec(const std::string& name, const ProblemSpec& spec) {
    TwistedPartialAction tw = spec_twist(spec);
    std::optional<Bimodule> M;
    if (spec.module) M = build_module(*spec.module, *build_crossed_product(tw, spec.options.seed).algebra);
    return make_instance(name, tw, M);
}

ordered_json to_json(const ValidationReport& r) {
    ordered_json j;
    j["ok"] = r.ok();
    j["violations"] = r.violations;
    j["notes"] = r.notes;
    return j;
}

ordered_json to_json(const Verdict& v) {
    ordered_json j;
    j["name"] = v.name;
    j["pass"] = v.pass;
    j["skipped"] = v.skipped;
    if (!v.reason.empty()) j["reason"] = v.reason;
    ordered_json degs = ordered_json::array();
    for (const auto& d : v.degrees) {
        ordered_json e;
        e["label"] = d.label;
        e["lhs"] = d.lhs;
        e["rhs"] = d.rhs;
        e["holds"] = d.holds;
        degs.push_back(e);
    }
    j["comparisons"] = degs;
    j["violations"] = v.report.violations;
    if (!v.report.notes.empty()) j["notes"] = v.report.notes;
    return j;
}

ordered_json to_json(const StructureAlgebra& A) {
    ordered_json j;
    j["dim"] = A.dim();
    j["basis"] = A.labels();
    ordered_json unit = ordered_json::array();
    for (const auto& c : A.unit()) unit.push_back(c.to_string());
    j["unit"] = unit;
    ordered_json sc = ordered_json::array();
    for (std::size_t i = 0; i < A.dim(); ++i)
        for (std::size_t k = 0; k < A.dim(); ++k)
            for (const auto& [t, c] : A.product(i, k)) sc.push_back({i, k, t, c.to_string()});
    j["sc"] = sc;
    return j;
}

ordered_json to_json(const E2Page& page) {
    ordered_json rows = ordered_json::array();
    for (const auto& r : page.dims) rows.push_back(r);
    return rows;
}

}  // namespace parhox
