#pragma once

#include <cstddef>
#include <optional>
#include <string_view>
#include <vector>

#include "stableset/alt_set.hpp"
#include "stableset/contraction.hpp"
#include "stableset/relation.hpp"
#include "stableset/solution_family.hpp"

namespace stableset {

/// Violation found by a stability check. For an internal violation both
/// ends are members; for an external one `first` is the undominated
/// outsider and `second` is empty.
struct Witness {
    AltId first = 0;
    std::optional<AltId> second;
};

struct StabilityReport {
    bool internal_ok = false;
    bool external_ok = false;
    std::optional<Witness> witness;

    bool ok() const { return internal_ok && external_ok; }
};

/// Internal: no q-edge between distinct members. External: every outsider
/// has a q-dominator among the members. Throws EmptySolution for empty v.
StabilityReport is_stable_set(const AltSet& v, const Rel& q);

AltSet core(const DecisionProblem& p);

enum class SchwartzMethod { Condensation, Deb, Brute };

/// BRUTE enumerates subsets and throws OracleLimitExceeded above max_n.
AltSet schwartz_set(const DecisionProblem& p, SchwartzMethod method = SchwartzMethod::Condensation,
                    std::size_t max_n = 0);

/// Maximal elements of the trap relation.
AltSet duggan_set(const DecisionProblem& p);

/// All VNM stable sets (stability under P(R)). Acyclic P(R) takes the
/// constructive route; otherwise a backtracking search runs, guarded by
/// max_n (0 means the configured default).
SolutionFamily vnm_stable_sets(const DecisionProblem& p, std::size_t max_n = 0);

/// One alternative from each maximal component.
SolutionFamily generalized_stable_sets(const DecisionProblem& p);

enum class SociallyInterp {
    /// Internal symmetry over the global closure restricted to V.
    RestrictClosure,
    /// Internal symmetry over the closure of P(R) restricted to V.
    ClosureOfRestriction,
};

std::string_view to_string(SociallyInterp interp);

SolutionFamily socially_stable_sets(const DecisionProblem& p,
                                    SociallyInterp interp = SociallyInterp::RestrictClosure,
                                    std::size_t max_n = 0);

/// Non-empty unions of maximal components.
SolutionFamily m_stable_sets(const DecisionProblem& p);

/// At most one alternative from each maximal component.
SolutionFamily w_stable_sets(const DecisionProblem& p);

/// One alternative from each class in the condensation's stable set.
SolutionFamily extended_stable_sets(const DecisionProblem& p);

/// A pair (generator, support) satisfying the undominated-pair conditions.
struct UndominatedPair {
    AltSet generator;
    AltSet support;
    /// Both sets are P(R)-cycles, so the generator is a top-cycle pairgenerator.
    bool top_cycle = false;

    bool operator==(const UndominatedPair&) const = default;
};

/// All minimal P(R)-undominated pairs, ordered by (support, generator) mask.
std::vector<UndominatedPair> undominated_pairs(const DecisionProblem& p, std::size_t max_n = 0);

/// P(R)-undominated elements together with every top-cycle pairgenerator.
AltSet undominated_pair_union(const DecisionProblem& p, std::size_t max_n = 0);

}  // namespace stableset
