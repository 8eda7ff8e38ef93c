#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "parhox/spectral.hpp"

namespace parhox {

inline constexpr const char* kToolVersion = "0.1.0";

// A SchemaError carrying one entry per offending JSON path.
class SchemaFailure : public Error {
public:
    explicit SchemaFailure(std::vector<std::string> issues);
    const std::vector<std::string>& issues() const { return issues_; }

private:
    std::vector<std::string> issues_;
};

struct PipelineOptions {
    std::size_t max_n = 2;
    std::size_t max_p = 2;
    std::size_t max_q = 1;
    std::size_t cap = 200000;     // chain dimension
    std::size_t max_basis = 512;  // Exel monoid and algebra bases
    std::uint64_t seed = 1;
};

// Bimodule over the crossed product given on generating elements; empty means the regular bimodule.
struct ModuleSpec {
    std::size_t dim = 0;
    std::vector<std::pair<Vec, Matrix>> left, right;
};

struct ProblemSpec {
    FieldSpec field;
    GroupPtr group;
    std::optional<PartialFactorSet> sigma;
    std::optional<UnitalPartialAction> action;
    std::optional<ModuleSpec> module;
    PipelineOptions options;
    nlohmann::json canonical;  // keys sorted, numbers as given
    std::string digest;        // SHA-256 of canonical.dump()
};

std::string sha256_hex(const std::string& data);

// Throws SchemaFailure listing every problem found, or IOError.
ProblemSpec parse_spec(const nlohmann::json& doc, const std::optional<FieldSpec>& field_override = std::nullopt);
ProblemSpec parse_spec_file(const std::string& path, const std::optional<FieldSpec>& field_override = std::nullopt);
FieldSpec parse_field(const std::string& text);  // "Q", "F7", "GF(7)"

// The factor set of a spec: the action's own, else the top-level one, else constant one.
PartialFactorSet effective_sigma(const ProblemSpec& spec);
Bimodule build_module(const ModuleSpec& m, const StructureAlgebra& L);

// The twisted action of a problem. A factor set that is not inverse-normalized is swapped for an equivalent
// normalized one, which is refused when a custom module fixes the crossed-product basis.
TwistedPartialAction spec_twist(const ProblemSpec& spec, bool* renormalized = nullptr);
PipelineInstance instance_from_spec(const std::string& name, const ProblemSpec& spec);

nlohmann::ordered_json to_json(const Verdict& v);
nlohmann::ordered_json to_json(const ValidationReport& r);
nlohmann::ordered_json to_json(const StructureAlgebra& A);
nlohmann::ordered_json to_json(const E2Page& page);

struct CommandFlags {
    std::optional<std::string> field;  // overrides the field of the input
    std::optional<std::size_t> max_n, max_p, max_q, cap;
    std::optional<std::uint64_t> seed;
    std::optional<std::string> cap_env;  // PARHOX_CAP, wins over --cap
    std::string fixtures_dir;  // selfcheck
};

struct CommandResult {
    nlohmann::ordered_json report;
    int exit_code = 0;  // 0 iff every verdict passes
};

// Runs one command; errors become part of the report instead of escaping.
CommandResult run_command(const std::string& command, const std::string& spec_path, const CommandFlags& flags);

}  // namespace parhox
