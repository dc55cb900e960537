#pragma once

#include <cstddef>
#include <vector>

#include "stableset/alt_set.hpp"
#include "stableset/relation.hpp"

namespace stableset {

using ClassId = std::size_t;

/// Quotient of a decision problem by its strong components under P(R).
///
/// `classes` partitions the alternatives and is listed in a topological
/// order of `cond` (every condensation edge i -> j has i < j); ties are
/// broken by the smallest member so the numbering is deterministic.
struct Contraction {
    std::size_t n = 0;
    std::vector<AltSet> classes;
    std::vector<ClassId> class_of;
    /// The condensation relation over class indices.
    Rel cond;

    std::size_t class_count() const { return classes.size(); }
    /// A class is non-trivial when its members lie on a P(R)-cycle.
    bool is_nontrivial(ClassId c) const;
};

/// Class indices with no incoming condensation edge.
struct MaximalFamily {
    std::vector<ClassId> indices;

    /// Union of the ground sets of the maximal classes.
    AltSet ground(const Contraction& c) const;
};

Contraction equipotence_classes(const DecisionProblem& p);

MaximalFamily maximal_components(const Contraction& c);

enum class ExtendedReading {
    /// Pairs inside one equipotence class are excluded (acyclic).
    ComponentLevel,
    /// The definition taken verbatim: x and y are related whenever some
    /// member of x's class strictly dominates some member of y's class,
    /// including x's own class.
    Literal,
};

/// Extended (omega-tilde) dominance lifted from the condensation.
Rel extended_dominance(const DecisionProblem& p,
                       ExtendedReading reading = ExtendedReading::ComponentLevel);

/// Self-test: cond[i][j] holds iff every member of class i extended-dominates
/// every member of class j.
bool class_level_equivalence_check(const DecisionProblem& p);

/// The unique stable set of the acyclic condensation, by iterated
/// extraction of maximal classes. Returned in increasing class order.
std::vector<ClassId> condensation_stable_set(const Contraction& c);

}  // namespace stableset
