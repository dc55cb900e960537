#include "stableset/relation.hpp"

#include <sstream>
#include <stdexcept>

#include "stableset/errors.hpp"

namespace stableset {

Rel::Rel(std::size_t n) : rows_(n, AltSet(n)) {}

Rel Rel::from_pairs(std::size_t n, std::span<const Edge> pairs) {
    Rel r(n);
    for (const auto& [x, y] : pairs) {
        if (x >= n || y >= n) {
            throw std::out_of_range("relation pair index out of range");
        }
        r.set(x, y);
    }
    return r;
}

Rel Rel::from_pairs(std::size_t n, std::initializer_list<Edge> pairs) {
    return from_pairs(n, std::span<const Edge>(pairs.begin(), pairs.size()));
}

Rel Rel::identity(std::size_t n) {
    Rel r(n);
    for (AltId x = 0; x < n; ++x) r.set(x, x);
    return r;
}

Rel Rel::complete(std::size_t n) {
    Rel r(n);
    for (auto& row : r.rows_) row = AltSet::full(n);
    return r;
}

AltSet Rel::predecessors(AltId x) const {
    AltSet out(size());
    for (AltId y = 0; y < size(); ++y) {
        if (test(y, x)) out.set(y);
    }
    return out;
}

Rel Rel::transpose() const {
    Rel t(size());
    for (AltId x = 0; x < size(); ++x) {
        rows_[x].for_each([&](AltId y) { t.set(y, x); });
    }
    return t;
}

std::vector<Edge> Rel::pairs() const {
    std::vector<Edge> out;
    for (AltId x = 0; x < size(); ++x) {
        rows_[x].for_each([&](AltId y) { out.emplace_back(x, y); });
    }
    return out;
}

std::size_t Rel::pair_count() const {
    std::size_t c = 0;
    for (const auto& row : rows_) c += row.count();
    return c;
}

bool Rel::is_subset_of(const Rel& other) const {
    for (AltId x = 0; x < size(); ++x) {
        if (!rows_[x].is_subset_of(other.rows_[x])) return false;
    }
    return true;
}

Rel& Rel::operator|=(const Rel& other) {
    for (AltId x = 0; x < size(); ++x) rows_[x] |= other.rows_[x];
    return *this;
}

Rel& Rel::operator&=(const Rel& other) {
    for (AltId x = 0; x < size(); ++x) rows_[x] &= other.rows_[x];
    return *this;
}

bool Rel::is_reflexive() const {
    for (AltId x = 0; x < size(); ++x) {
        if (!test(x, x)) return false;
    }
    return true;
}

bool Rel::is_irreflexive() const {
    for (AltId x = 0; x < size(); ++x) {
        if (test(x, x)) return false;
    }
    return true;
}

bool Rel::is_transitive() const {
    for (AltId x = 0; x < size(); ++x) {
        AltSet reach = rows_[x];
        bool ok = true;
        rows_[x].for_each([&](AltId y) {
            if (!rows_[y].is_subset_of(reach)) ok = false;
        });
        if (!ok) return false;
    }
    return true;
}

bool Rel::is_antisymmetric() const {
    for (AltId x = 0; x < size(); ++x) {
        for (AltId y = x + 1; y < size(); ++y) {
            if (test(x, y) && test(y, x)) return false;
        }
    }
    return true;
}

std::string Rel::to_string() const {
    std::ostringstream os;
    os << '{';
    bool first = true;
    for (const auto& [x, y] : pairs()) {
        if (!first) os << ',';
        os << '(' << x << ',' << y << ')';
        first = false;
    }
    os << '}';
    return os.str();
}

DecisionProblem::DecisionProblem(Rel rel, std::vector<std::string> labels)
    : rel_(std::move(rel)), labels_(std::move(labels)) {
    if (rel_.size() == 0) {
        throw Error("a decision problem needs at least one alternative");
    }
    for (AltId x = 0; x < rel_.size(); ++x) {
        if (rel_.test(x, x)) throw LoopEdge(x);
    }
    if (labels_.empty()) {
        labels_.reserve(rel_.size());
        for (AltId x = 0; x < rel_.size(); ++x) labels_.push_back(std::to_string(x));
    } else if (labels_.size() != rel_.size()) {
        throw Error("label count " + std::to_string(labels_.size()) +
                    " does not match alternative count " + std::to_string(rel_.size()));
    }
}

Rel asymmetric_part(const Rel& r) {
    Rel out(r.size());
    for (AltId x = 0; x < r.size(); ++x) {
        r.successors(x).for_each([&](AltId y) {
            if (!r.test(y, x)) out.set(x, y);
        });
    }
    return out;
}

Rel transitive_closure(const Rel& r) {
    // Warshall with row sweeps: after pivot k, row i contains everything
    // reachable through intermediates drawn from {0..k}.
    Rel t = r;
    const std::size_t n = r.size();
    for (AltId k = 0; k < n; ++k) {
        const AltSet pivot = t.successors(k);
        for (AltId i = 0; i < n; ++i) {
            if (t.test(i, k)) {
                pivot.for_each([&](AltId j) { t.set(i, j); });
            }
        }
    }
    return t;
}

AltSet maximal_set(const AltSet& xs, const Rel& r) {
    if (xs.empty()) throw EmptyGround();
    AltSet out(r.size());
    xs.for_each([&](AltId x) {
        bool maximal = true;
        xs.for_each([&](AltId y) {
            if (maximal && r.test(y, x) && !r.test(x, y)) maximal = false;
        });
        if (maximal) out.set(x);
    });
    return out;
}

Rel restrict(const Rel& r, const AltSet& xs) {
    Rel out(r.size());
    xs.for_each([&](AltId x) {
        (r.successors(x) & xs).for_each([&](AltId y) { out.set(x, y); });
    });
    return out;
}

bool is_acyclic(const Rel& r) {
    return transitive_closure(r).is_irreflexive();
}

Rel trap_relation(const DecisionProblem& p) {
    const Rel strict = asymmetric_part(p.rel());
    const Rel reach = transitive_closure(strict);
    Rel out(p.size());
    for (const auto& [x, y] : strict.pairs()) {
        if (!reach.test(y, x)) out.set(x, y);
    }
    return out;
}

Rel strict_dominance(const Rel& r) {
    return asymmetric_part(transitive_closure(asymmetric_part(r)));
}

Rel strict_poset_order(const DecisionProblem& p) {
    Rel order = strict_dominance(p.rel()) | Rel::identity(p.size());
    if (!order.is_reflexive() || !order.is_antisymmetric() || !order.is_transitive()) {
        throw PosetViolation("P(closure(P(R))) plus diagonal is not a partial order");
    }
    return order;
}

}  // namespace stableset
