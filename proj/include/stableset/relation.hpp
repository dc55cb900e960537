#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "stableset/alt_set.hpp"

namespace stableset {

using Edge = std::pair<AltId, AltId>;

/// Dense binary relation over {0, ..., n-1}. Row x holds { y | x R y }.
class Rel {
public:
    Rel() = default;
    explicit Rel(std::size_t n);

    static Rel from_pairs(std::size_t n, std::span<const Edge> pairs);
    static Rel from_pairs(std::size_t n, std::initializer_list<Edge> pairs);
    static Rel identity(std::size_t n);
    static Rel complete(std::size_t n);

    std::size_t size() const { return rows_.size(); }

    bool test(AltId x, AltId y) const { return rows_[x].test(y); }
    bool operator()(AltId x, AltId y) const { return test(x, y); }
    void set(AltId x, AltId y) { rows_[x].set(y); }
    void reset(AltId x, AltId y) { rows_[x].reset(y); }

    /// Lower contour set xR = { y | x R y }.
    const AltSet& successors(AltId x) const { return rows_[x]; }
    /// Upper contour set Rx = { y | y R x }.
    AltSet predecessors(AltId x) const;

    Rel transpose() const;
    std::vector<Edge> pairs() const;
    std::size_t pair_count() const;
    bool empty() const { return pair_count() == 0; }

    bool is_subset_of(const Rel& other) const;
    Rel& operator|=(const Rel& other);
    Rel& operator&=(const Rel& other);
    friend Rel operator|(Rel a, const Rel& b) { return a |= b; }
    friend Rel operator&(Rel a, const Rel& b) { return a &= b; }

    bool is_reflexive() const;
    bool is_irreflexive() const;
    bool is_transitive() const;
    bool is_antisymmetric() const;

    bool operator==(const Rel& other) const = default;

    std::string to_string() const;

private:
    std::vector<AltSet> rows_;
};

/// A finite abstract decision problem: labelled alternatives and an
/// irreflexive dominance relation.
class DecisionProblem {
public:
    /// Throws LoopEdge when rel has a pair (x, x) and Error when empty.
    explicit DecisionProblem(Rel rel, std::vector<std::string> labels = {});

    std::size_t size() const { return rel_.size(); }
    const Rel& rel() const { return rel_; }
    const std::vector<std::string>& labels() const { return labels_; }
    const std::string& label(AltId x) const { return labels_[x]; }

    AltSet all() const { return AltSet::full(size()); }

    bool operator==(const DecisionProblem& other) const = default;

private:
    Rel rel_;
    std::vector<std::string> labels_;
};

/// P(R): pairs of r whose reverse is absent.
Rel asymmetric_part(const Rel& r);

/// Reachability by chains of length >= 1; (x, x) appears iff x lies on a cycle.
Rel transitive_closure(const Rel& r);

/// M(xs, r) = { x in xs | for all y in xs: y r x implies x r y }.
/// Throws EmptyGround for empty xs.
AltSet maximal_set(const AltSet& xs, const Rel& r);

/// Pairs of r with both ends in xs; indices keep their original meaning.
Rel restrict(const Rel& r, const AltSet& xs);

bool is_acyclic(const Rel& r);

/// x traps y iff x P(R) y and y does not reach x in the closure of P(R).
Rel trap_relation(const DecisionProblem& p);

/// P(closure(P(r))): strict part of the reachability order of r.
Rel strict_dominance(const Rel& r);

/// P(closure(P(R))) plus the diagonal. Throws PosetViolation if the result
/// is not a partial order.
Rel strict_poset_order(const DecisionProblem& p);

}  // namespace stableset
