#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "stableset/alt_set.hpp"
#include "stableset/relation.hpp"

namespace stableset {

/// Finite poset; leq(x, y) reads "x <= y".
class Poset {
public:
    /// Throws PosetViolation unless leq is reflexive, antisymmetric and transitive.
    explicit Poset(Rel leq);

    static Poset chain(std::size_t n);
    static Poset antichain(std::size_t n);
    /// Bottom 0, atoms 1 and 2, top 3.
    static Poset diamond();
    /// The order P(closure(P(R))) plus diagonal of a decision problem.
    static Poset from_problem(const DecisionProblem& p);

    std::size_t size() const { return leq_.size(); }
    const Rel& leq() const { return leq_; }
    bool le(AltId x, AltId y) const { return leq_.test(x, y); }
    AltSet all() const { return AltSet::full(size()); }

private:
    Rel leq_;
};

inline constexpr std::size_t kDefaultCompletionLimit = 10;
inline constexpr std::size_t kDefaultIdealLimit = 8;

/// { y | a <= y for all a in A }; the full set for empty A.
AltSet upper_bounds(const Poset& p, const AltSet& a);
/// { y | y <= a for all a in A }; the full set for empty A.
AltSet lower_bounds(const Poset& p, const AltSet& a);
/// Lower bounds of the upper bounds of A.
AltSet delta_closure(const Poset& p, const AltSet& a);

/// Dedekind-MacNeille completion: every delta-closed set, ordered by inclusion.
struct CutLattice {
    std::size_t n = 0;
    /// Ascending by membership mask.
    std::vector<AltSet> cuts;

    std::optional<std::size_t> find(const AltSet& cut) const;
    /// Intersection of the selected cuts (the full set for an empty selection).
    AltSet meet(const std::vector<std::size_t>& selection) const;
    /// Smallest cut containing the union of the selected cuts.
    AltSet join(const Poset& p, const std::vector<std::size_t>& selection) const;
};

/// Throws LimitExceeded above `limit` elements.
CutLattice dm_completion(const Poset& p, std::size_t limit = kDefaultCompletionLimit);

/// Checks every subfamily of cuts (exponential in the number of cuts):
/// the intersection is a cut and is the greatest lower bound by inclusion,
/// and the join is the least cut above the union.
bool is_complete_lattice(const Poset& p, const CutLattice& lattice);

/// Every I with delta_closure(Z) inside I for each finite Z inside I (the
/// empty Z included), ascending by mask. Throws LimitExceeded above `limit`.
std::vector<AltSet> frink_ideals(const Poset& p, std::size_t limit = kDefaultIdealLimit);

/// x <<_e y: every Frink ideal whose delta-closure contains y contains x.
bool way_below_e(const Poset& p, AltId x, AltId y, std::size_t limit = kDefaultIdealLimit);

/// The whole <<_e relation, row x holding { y | x <<_e y }.
Rel way_below_relation(const Poset& p, std::size_t limit = kDefaultIdealLimit);

/// Every x lies in the delta-closure of { y | y <<_e x }.
bool is_precontinuous(const Poset& p, std::size_t limit = kDefaultIdealLimit);

/// A topology given by its explicit family of open sets.
struct FiniteTopology {
    std::size_t n = 0;
    /// Ascending by membership mask, no duplicates.
    std::vector<AltSet> opens;

    static FiniteTopology discrete(std::size_t n);
    static FiniteTopology indiscrete(std::size_t n);

    bool is_open(const AltSet& u) const;
    /// Intersection of all open sets containing x.
    AltSet minimal_neighborhood(AltId x) const;
};

/// Contains the empty and full sets and is closed under pairwise union and
/// intersection.
bool is_topology(const FiniteTopology& t);

/// Opens are the sets disjoint from `excluded`, plus the full set.
FiniteTopology excluded_set_topology(std::size_t n, const AltSet& excluded);

/// An open cover's finite subcover. For finite topologies the cover itself
/// is finite; when the full set is open it alone is returned.
std::vector<AltSet> compact_subcover(const FiniteTopology& t, const std::vector<AltSet>& cover);

/// strict(y, x) reads "y is strictly above x". Holds when each such x has
/// an open neighbourhood missing y.
bool weak_t1_separation(const FiniteTopology& t, const Rel& strict);

/// The weak property plus the convergence clause, which on a finite space
/// asks that y be strictly above every point of x's minimal neighbourhood.
bool t1_order_separation(const FiniteTopology& t, const Rel& strict);

/// Every pair (x, y) outside `order` has open U containing x and V
/// containing y with U x V disjoint from `order`.
bool nachbin_closed(const FiniteTopology& t, const Rel& order);

}  // namespace stableset
