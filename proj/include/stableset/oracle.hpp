#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "stableset/alt_set.hpp"
#include "stableset/limits.hpp"
#include "stableset/relation.hpp"
#include "stableset/solutions.hpp"

namespace stableset {

enum class Concept { Vnm, Generalized, Socially, MStable, WStable, Extended };

/// "VNM", "GENERALIZED", ...
std::string_view to_string(Concept kind);
/// Accepts the upper-case tag or the short CLI name (vnm, gss, sss, mss, wss, ess).
Concept concept_from_string(std::string_view name);

struct OracleConfig {
    std::size_t max_n = kDefaultMaxN;
    std::uint64_t seed = 0;
    std::size_t instance_count = 100;
};

/// Every non-empty subset passing the tagged definition, ascending by mask.
/// The checks are written directly from the definitions and share no code
/// with the constructive characterizations.
std::vector<AltSet> enumerate_solutions(const DecisionProblem& p, Concept kind,
                                        SociallyInterp interp = SociallyInterp::RestrictClosure,
                                        std::size_t max_n = 0);

/// Union of the inclusion-minimal P(R)-undominated subsets.
AltSet gocha_bruteforce(const DecisionProblem& p, std::size_t max_n = 0);

/// Irreflexive random digraph; each ordered pair is an edge with probability
/// `density`. With `tournament`, each unordered pair gets exactly one
/// direction and `density` is ignored. Deterministic per seed.
DecisionProblem random_problem(std::size_t n, double density, std::uint64_t seed,
                               bool tournament = false);

struct CorpusInstance {
    std::uint64_t seed = 0;
    double density = 0.0;
    bool tournament = false;
    DecisionProblem problem;
};

/// `digraphs` random digraphs with 1 <= n <= max_digraph_n and densities
/// cycling through {0.2, 0.5, 0.8}, followed by `tournaments` random
/// tournaments with 1 <= n <= max_tournament_n.
std::vector<CorpusInstance> random_corpus(std::uint64_t seed, std::size_t digraphs,
                                          std::size_t max_digraph_n, std::size_t tournaments,
                                          std::size_t max_tournament_n);

struct VerificationReport {
    Concept kind = Concept::Vnm;
    std::optional<SociallyInterp> interp;
    std::size_t oracle_count = 0;
    std::size_t constructive_count = 0;
    /// Sets found by enumeration only.
    std::vector<AltSet> oracle_only;
    /// Sets produced by the characterization only.
    std::vector<AltSet> constructive_only;

    bool pass() const { return oracle_only.empty() && constructive_only.empty(); }
};

/// The constructive family of `concept` from the solutions module.
SolutionFamily constructive_family(const DecisionProblem& p, Concept kind,
                                   SociallyInterp interp = SociallyInterp::RestrictClosure,
                                   std::size_t max_n = 0);

VerificationReport cross_verify(const DecisionProblem& p, Concept kind,
                                SociallyInterp interp = SociallyInterp::RestrictClosure,
                                std::size_t max_n = 0);

struct TrialFailure {
    std::uint64_t seed = 0;
    std::size_t n = 0;
    std::string problem;
    VerificationReport report;
};

struct TrialSummary {
    Concept kind = Concept::Vnm;
    std::size_t trials = 0;
    std::size_t passed = 0;
    /// Sorted by seed.
    std::vector<TrialFailure> failures;

    bool pass() const { return failures.empty(); }
};

/// cross_verify on config.instance_count random instances. Trial i uses
/// seed config.seed + i, n = 1 + (seed mod max_n), density cycling through
/// {0.2, 0.5, 0.8}; every fourth trial is a tournament. Trials run on
/// worker threads and are aggregated in seed order.
TrialSummary run_trials(Concept kind, const OracleConfig& config,
                        SociallyInterp interp = SociallyInterp::RestrictClosure);

}  // namespace stableset
