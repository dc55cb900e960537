#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include <json.hpp>

#include "stableset/contraction.hpp"
#include "stableset/oracle.hpp"
#include "stableset/relation.hpp"
#include "stableset/solution_family.hpp"

namespace stableset {

enum class InstanceFormat { Json, EdgeList };

/// Reads either the JSON schema {"n", "labels"?, "edges"} or a whitespace
/// edge list (first line n, then one "u v" pair per line, '#' comments).
/// Duplicate edges collapse. Throws ParseError or LoopEdge.
DecisionProblem parse_instance(std::string_view text);

std::string serialize_instance(const DecisionProblem& p, InstanceFormat format = InstanceFormat::Json);

/// Graphviz digraph; with a contraction the classes become clusters and
/// every condensation edge is drawn bold between clusters.
std::string export_dot(const DecisionProblem& p, const std::optional<Contraction>& c = std::nullopt);

struct VerificationSummary {
    bool pass = false;
    std::size_t oracle_count = 0;
    std::size_t constructive_count = 0;
    std::vector<AltSet> oracle_only;
    std::vector<AltSet> constructive_only;

    static VerificationSummary from(const VerificationReport& report);
    bool operator==(const VerificationSummary&) const = default;
};

/// What `solve` prints. Set-valued concepts fill `set`, family-valued
/// concepts fill `family`.
struct ResultDocument {
    std::string concept_name;
    std::optional<std::string> interp;
    std::optional<AltSet> set;
    std::optional<SolutionFamily> family;
    std::optional<VerificationSummary> verification;
    /// Stage name and wall time in milliseconds; only filled on request so
    /// that default output stays byte-stable.
    std::vector<std::pair<std::string, double>> timings;
    std::vector<std::string> notes;

    bool operator==(const ResultDocument&) const = default;
};

std::string to_json_text(const ResultDocument& doc);
ResultDocument result_from_json_text(std::string_view text);

/// One top-level key per line, values in compact form.
std::string dump_document(const nlohmann::json& doc);

/// Command-line entry point. Exit codes: 0 success, 1 solver or input
/// error, 2 oracle/constructive mismatch, 64 usage error.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace stableset
