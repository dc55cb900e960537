#include <chrono>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "stableset/contraction.hpp"
#include "stableset/errors.hpp"
#include "stableset/io.hpp"
#include "stableset/oracle.hpp"
#include "stableset/order_topology.hpp"
#include "stableset/solutions.hpp"

namespace stableset {

namespace {

using nlohmann::json;

constexpr int kExitOk = 0;
constexpr int kExitSolver = 1;
constexpr int kExitMismatch = 2;
constexpr int kExitUsage = 64;

class Stopwatch {
public:
    double lap_ms() {
        const auto now = std::chrono::steady_clock::now();
        const double ms = std::chrono::duration<double, std::milli>(now - start_).count();
        start_ = now;
        return ms;
    }

private:
    std::chrono::steady_clock::time_point start_ = std::chrono::steady_clock::now();
};

std::string read_input(const std::string& path) {
    if (path == "-") {
        std::ostringstream os;
        os << std::cin.rdbuf();
        return os.str();
    }
    std::ifstream in(path);
    if (!in) throw Error("cannot open input file '" + path + "'");
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
}

SociallyInterp parse_interp(const std::string& s) {
    return s == "closure" ? SociallyInterp::ClosureOfRestriction : SociallyInterp::RestrictClosure;
}

SchwartzMethod parse_method(const std::string& s) {
    if (s == "deb") return SchwartzMethod::Deb;
    if (s == "brute") return SchwartzMethod::Brute;
    return SchwartzMethod::Condensation;
}

json sets_json(const std::vector<AltSet>& sets) {
    json arr = json::array();
    for (const auto& s : sets) arr.push_back(s.members());
    return arr;
}

json pairs_json(const Rel& r) {
    json arr = json::array();
    for (const auto& [x, y] : r.pairs()) arr.push_back({x, y});
    return arr;
}

struct SolveOptions {
    std::string kind;
    std::string input;
    std::string interp = "restrict";
    std::string method = "condensation";
    std::size_t max_n = 0;
    bool verify = false;
    bool timings = false;
};

int run_solve(const SolveOptions& o, std::ostream& out) {
    Stopwatch clock;
    ResultDocument doc;
    const DecisionProblem p = parse_instance(read_input(o.input));
    const double parse_ms = clock.lap_ms();

    bool mismatch = false;
    if (o.kind == "core") {
        doc.concept_name = "CORE";
        doc.set = core(p);
    } else if (o.kind == "schwartz") {
        doc.concept_name = "SCHWARTZ";
        doc.set = schwartz_set(p, parse_method(o.method), o.max_n);
        doc.notes.push_back("method " + o.method);
    } else if (o.kind == "duggan") {
        doc.concept_name = "DUGGAN";
        doc.set = duggan_set(p);
    } else {
        const Concept kind = concept_from_string(o.kind);
        const SociallyInterp interp = parse_interp(o.interp);
        doc.concept_name = std::string(to_string(kind));
        if (kind == Concept::Socially) doc.interp = std::string(to_string(interp));
        doc.family = constructive_family(p, kind, interp, o.max_n);
        if (doc.family->empty()) {
            doc.notes.push_back(kind == Concept::Vnm ? "no stable set" : "empty family");
        }
        if (o.verify) {
            const auto report = cross_verify(p, kind, interp, o.max_n);
            doc.verification = VerificationSummary::from(report);
            mismatch = !report.pass();
        }
    }
    const double solve_ms = clock.lap_ms();
    if (o.timings) {
        doc.timings = {{"parse", parse_ms}, {"solve", solve_ms}};
    }
    out << to_json_text(doc);
    return mismatch ? kExitMismatch : kExitOk;
}

struct VerifyOptions {
    std::string kind;
    std::string interp = "restrict";
    std::size_t trials = 100;
    std::size_t max_n = 8;
    std::uint64_t seed = 0;
};

int run_verify(const VerifyOptions& o, std::ostream& out) {
    OracleConfig config;
    config.max_n = o.max_n;
    config.seed = o.seed;
    config.instance_count = o.trials;
    const Concept kind = concept_from_string(o.kind);
    const SociallyInterp interp = parse_interp(o.interp);
    const TrialSummary summary = run_trials(kind, config, interp);

    json j;
    j["concept"] = std::string(to_string(kind));
    if (kind == Concept::Socially) j["interp"] = std::string(to_string(interp));
    j["trials"] = summary.trials;
    j["passed"] = summary.passed;
    j["max_n"] = o.max_n;
    j["seed"] = o.seed;
    j["result"] = summary.pass() ? "PASS" : "FAIL";
    json failures = json::array();
    for (const auto& f : summary.failures) {
        failures.push_back({{"seed", f.seed},
                            {"n", f.n},
                            {"relation", f.problem},
                            {"oracle_only", sets_json(f.report.oracle_only)},
                            {"constructive_only", sets_json(f.report.constructive_only)}});
    }
    j["failures"] = failures;
    out << dump_document(j);
    return summary.pass() ? kExitOk : kExitMismatch;
}

int run_contract(const std::string& input, bool dot, std::ostream& out) {
    const DecisionProblem p = parse_instance(read_input(input));
    const Contraction c = equipotence_classes(p);
    if (dot) {
        out << export_dot(p, c);
        return kExitOk;
    }
    json j;
    j["n"] = p.size();
    j["classes"] = sets_json(c.classes);
    j["cond"] = pairs_json(c.cond);
    j["maximal"] = maximal_components(c).indices;
    j["condensation_stable_set"] = condensation_stable_set(c);
    j["extended_dominance"] = pairs_json(extended_dominance(p));
    out << dump_document(j);
    return kExitOk;
}

struct TopologyOptions {
    std::string check;
    std::string input;
    std::string poset;
    std::size_t n = 0;
    std::vector<std::size_t> exclude;
    std::string generator = "schwartz";
    std::string relation = "order";
};

AltSet generator_set(const DecisionProblem& p, const std::string& name) {
    if (name == "schwartz") return schwartz_set(p);
    if (name == "duggan") return duggan_set(p);
    if (name == "core") return core(p);
    const Concept kind = concept_from_string(name);
    AltSet first(p.size());
    constructive_family(p, kind).for_each([&](const AltSet& m) {
        first = m;
        return false;
    });
    return first;
}

Poset topology_poset(const TopologyOptions& o) {
    if (!o.input.empty()) return Poset::from_problem(parse_instance(read_input(o.input)));
    if (o.poset == "chain") return Poset::chain(o.n);
    if (o.poset == "antichain") return Poset::antichain(o.n);
    if (o.poset == "diamond") return Poset::diamond();
    throw Error("topology check needs --input or --poset");
}

int run_topology(const TopologyOptions& o, std::ostream& out) {
    json j;
    j["check"] = o.check;
    if (o.check == "dm" || o.check == "frink" || o.check == "precont") {
        const Poset poset = topology_poset(o);
        j["n"] = poset.size();
        if (o.check == "dm") {
            const CutLattice lattice = dm_completion(poset);
            j["cuts"] = sets_json(lattice.cuts);
            j["complete_lattice"] = is_complete_lattice(poset, lattice);
        } else if (o.check == "frink") {
            j["ideals"] = sets_json(frink_ideals(poset));
        } else {
            j["way_below"] = pairs_json(way_below_relation(poset));
            j["precontinuous"] = is_precontinuous(poset);
        }
        out << dump_document(j);
        return kExitOk;
    }

    if (o.check == "excluded" && o.input.empty()) {
        if (o.n == 0) throw Error("excluded topology needs --n or --input");
        AltSet f(o.n);
        for (std::size_t x : o.exclude) {
            if (x >= o.n) throw Error("excluded index out of range");
            f.set(x);
        }
        const FiniteTopology t = excluded_set_topology(o.n, f);
        j["n"] = o.n;
        j["excluded"] = f.members();
        j["opens"] = sets_json(t.opens);
        j["is_topology"] = is_topology(t);
        j["compact_subcover"] = sets_json(compact_subcover(t, t.opens));
        out << dump_document(j);
        return kExitOk;
    }

    if (o.input.empty()) throw Error("topology check '" + o.check + "' needs --input");
    const DecisionProblem p = parse_instance(read_input(o.input));
    const AltSet f = generator_set(p, o.generator);
    const FiniteTopology t = excluded_set_topology(p.size(), f);
    const Rel base = o.relation == "trap" ? trap_relation(p) : p.rel();
    j["n"] = p.size();
    j["generator"] = o.generator;
    j["generator_set"] = f.members();
    j["relation"] = o.relation;
    if (o.check == "excluded") {
        j["opens"] = sets_json(t.opens);
        j["is_topology"] = is_topology(t);
        j["compact_subcover"] = sets_json(compact_subcover(t, t.opens));
    } else if (o.check == "t1") {
        const Rel strict = strict_dominance(base);
        j["weak_t1"] = weak_t1_separation(t, strict);
        j["t1"] = t1_order_separation(t, strict);
    } else if (o.check == "nachbin") {
        const Rel order = strict_dominance(base) | Rel::identity(p.size());
        j["nachbin_closed"] = nachbin_closed(t, order);
    }
    out << dump_document(j);
    return kExitOk;
}

struct RandomOptions {
    std::size_t n = 5;
    double density = 0.5;
    std::uint64_t seed = 0;
    bool tournament = false;
    std::string format = "json";
};

}  // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    CLI::App app{"Stable sets and their variants on finite abstract decision problems", "stableset"};
    app.require_subcommand(1);
    app.set_help_all_flag("--help-all", "Expand all help");

    const std::vector<std::string> concepts{"core", "schwartz", "duggan", "vnm", "gss",
                                            "sss",  "mss",      "wss",    "ess"};
    const std::vector<std::string> family_concepts{"vnm", "gss", "sss", "mss", "wss", "ess"};

    SolveOptions solve;
    auto* solve_cmd = app.add_subcommand("solve", "Compute a solution concept for one instance");
    solve_cmd->add_option("--concept", solve.kind, "Solution concept")
        ->required()
        ->check(CLI::IsMember(concepts));
    solve_cmd->add_option("--input", solve.input, "Instance file (JSON or edge list, '-' for stdin)")
        ->required();
    solve_cmd->add_option("--interp", solve.interp, "Socially stable interpretation")
        ->check(CLI::IsMember({"restrict", "closure"}));
    solve_cmd->add_option("--method", solve.method, "Schwartz set method")
        ->check(CLI::IsMember({"condensation", "deb", "brute"}));
    solve_cmd->add_option("--max-n", solve.max_n, "Enumeration ceiling (default STABLESET_MAX_N or 12)");
    solve_cmd->add_flag("--verify", solve.verify, "Cross-check against the brute-force oracle");
    solve_cmd->add_flag("--timings", solve.timings, "Include per-stage wall times");

    VerifyOptions verify;
    auto* verify_cmd = app.add_subcommand("verify", "Cross-verify a concept on random instances");
    verify_cmd->add_option("--concept", verify.kind, "Solution concept")
        ->required()
        ->check(CLI::IsMember(family_concepts));
    verify_cmd->add_option("--interp", verify.interp, "Socially stable interpretation")
        ->check(CLI::IsMember({"restrict", "closure"}));
    verify_cmd->add_option("--trials", verify.trials, "Number of random instances");
    verify_cmd->add_option("--max-n", verify.max_n, "Largest instance size")->check(CLI::Range(1, 20));
    verify_cmd->add_option("--seed", verify.seed, "Seed of the first trial");

    std::string contract_input;
    bool contract_dot = false;
    auto* contract_cmd = app.add_subcommand("contract", "Strong components and condensation");
    contract_cmd->add_option("--input", contract_input, "Instance file")->required();
    contract_cmd->add_flag("--dot", contract_dot, "Emit a Graphviz document");

    TopologyOptions topo;
    auto* topo_cmd = app.add_subcommand("topology", "Finite order and topology checks");
    topo_cmd->add_option("--check", topo.check, "Check to run")
        ->required()
        ->check(CLI::IsMember({"dm", "frink", "precont", "excluded", "t1", "nachbin"}));
    topo_cmd->add_option("--input", topo.input, "Instance file; its order P(closure(P(R))) is used");
    topo_cmd->add_option("--poset", topo.poset, "Built-in poset")
        ->check(CLI::IsMember({"chain", "antichain", "diamond"}));
    topo_cmd->add_option("--n", topo.n, "Size for built-in posets and --exclude");
    topo_cmd->add_option("--exclude", topo.exclude, "Excluded set for the excluded-set topology")
        ->delimiter(',');
    topo_cmd->add_option("--generator", topo.generator, "Solution set generating the topology")
        ->check(CLI::IsMember({"schwartz", "duggan", "core", "gss", "mss", "wss", "ess", "vnm", "sss"}));
    topo_cmd->add_option("--relation", topo.relation, "Relation for separation checks")
        ->check(CLI::IsMember({"order", "trap"}));

    RandomOptions rnd;
    auto* random_cmd = app.add_subcommand("random", "Generate a random instance");
    random_cmd->add_option("--n", rnd.n, "Number of alternatives")->required()->check(CLI::Range(1, 4096));
    random_cmd->add_option("--density", rnd.density, "Edge probability")->check(CLI::Range(0.0, 1.0));
    random_cmd->add_option("--seed", rnd.seed, "Seed");
    random_cmd->add_flag("--tournament", rnd.tournament, "Exactly one edge per pair");
    random_cmd->add_option("--format", rnd.format, "Output format")
        ->check(CLI::IsMember({"json", "edgelist"}));

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kExitOk;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return kExitOk;
    } catch (const CLI::ParseError& e) {
        err << "usage error: " << e.what() << "\n";
        return kExitUsage;
    }

    try {
        if (*solve_cmd) return run_solve(solve, out);
        if (*verify_cmd) return run_verify(verify, out);
        if (*contract_cmd) return run_contract(contract_input, contract_dot, out);
        if (*topo_cmd) return run_topology(topo, out);
        if (*random_cmd) {
            const DecisionProblem p = random_problem(rnd.n, rnd.density, rnd.seed, rnd.tournament);
            out << serialize_instance(p, rnd.format == "edgelist" ? InstanceFormat::EdgeList
                                                                   : InstanceFormat::Json);
            return kExitOk;
        }
    } catch (const Error& e) {
        err << "error: " << e.what() << "\n";
        return kExitSolver;
    }
    return kExitUsage;
}

}  // namespace stableset
