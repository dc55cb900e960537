#include "stableset/order_topology.hpp"

#include <algorithm>
#include <cstdint>

#include "stableset/errors.hpp"

namespace stableset {

namespace {

using Mask = std::uint64_t;

void guard(const char* what, std::size_t n, std::size_t limit) {
    if (n > limit || n > 20) throw LimitExceeded(what, n, std::min<std::size_t>(limit, 20));
}

AltSet from_mask(std::size_t n, Mask m) { return AltSet::from_mask(n, m); }

}  // namespace

Poset::Poset(Rel leq) : leq_(std::move(leq)) {
    if (!leq_.is_reflexive()) throw PosetViolation("order is not reflexive");
    if (!leq_.is_antisymmetric()) throw PosetViolation("order is not antisymmetric");
    if (!leq_.is_transitive()) throw PosetViolation("order is not transitive");
}

Poset Poset::chain(std::size_t n) {
    Rel r(n);
    for (AltId x = 0; x < n; ++x) {
        for (AltId y = x; y < n; ++y) r.set(x, y);
    }
    return Poset(std::move(r));
}

Poset Poset::antichain(std::size_t n) { return Poset(Rel::identity(n)); }

Poset Poset::diamond() {
    Rel r = Rel::identity(4);
    for (AltId y = 1; y < 4; ++y) r.set(0, y);
    r.set(1, 3);
    r.set(2, 3);
    return Poset(std::move(r));
}

Poset Poset::from_problem(const DecisionProblem& p) { return Poset(strict_poset_order(p)); }

AltSet upper_bounds(const Poset& p, const AltSet& a) {
    AltSet out = p.all();
    a.for_each([&](AltId x) { out &= p.leq().successors(x); });
    return out;
}

AltSet lower_bounds(const Poset& p, const AltSet& a) {
    AltSet out = p.all();
    a.for_each([&](AltId x) { out &= p.leq().predecessors(x); });
    return out;
}

AltSet delta_closure(const Poset& p, const AltSet& a) {
    return lower_bounds(p, upper_bounds(p, a));
}

std::optional<std::size_t> CutLattice::find(const AltSet& cut) const {
    const auto it = std::lower_bound(cuts.begin(), cuts.end(), cut);
    if (it == cuts.end() || !(*it == cut)) return std::nullopt;
    return static_cast<std::size_t>(it - cuts.begin());
}

AltSet CutLattice::meet(const std::vector<std::size_t>& selection) const {
    AltSet out = AltSet::full(n);
    for (std::size_t i : selection) out &= cuts[i];
    return out;
}

AltSet CutLattice::join(const Poset& p, const std::vector<std::size_t>& selection) const {
    AltSet un(n);
    for (std::size_t i : selection) un |= cuts[i];
    return delta_closure(p, un);
}

CutLattice dm_completion(const Poset& p, std::size_t limit) {
    const std::size_t n = p.size();
    guard("Dedekind-MacNeille completion", n, limit);
    CutLattice lattice;
    lattice.n = n;
    for (Mask m = 0; m < (Mask{1} << n); ++m) {
        const AltSet a = from_mask(n, m);
        if (delta_closure(p, a) == a) lattice.cuts.push_back(a);
    }
    return lattice;
}

bool is_complete_lattice(const Poset& p, const CutLattice& lattice) {
    const std::size_t k = lattice.cuts.size();
    if (k == 0 || k > 20) return false;
    for (Mask sel = 0; sel < (Mask{1} << k); ++sel) {
        std::vector<std::size_t> selection;
        for (std::size_t i = 0; i < k; ++i) {
            if (sel >> i & 1u) selection.push_back(i);
        }
        const AltSet meet = lattice.meet(selection);
        const AltSet join = lattice.join(p, selection);
        if (!lattice.find(meet) || !lattice.find(join)) return false;
        for (std::size_t i : selection) {
            if (!meet.is_subset_of(lattice.cuts[i]) || !lattice.cuts[i].is_subset_of(join)) {
                return false;
            }
        }
        // Greatest lower bound and least upper bound among all cuts.
        for (const auto& c : lattice.cuts) {
            const bool below_all = std::all_of(selection.begin(), selection.end(),
                                               [&](std::size_t i) { return c.is_subset_of(lattice.cuts[i]); });
            const bool above_all = std::all_of(selection.begin(), selection.end(),
                                               [&](std::size_t i) { return lattice.cuts[i].is_subset_of(c); });
            if (below_all && !c.is_subset_of(meet)) return false;
            if (above_all && !join.is_subset_of(c)) return false;
        }
    }
    return true;
}

std::vector<AltSet> frink_ideals(const Poset& p, std::size_t limit) {
    const std::size_t n = p.size();
    guard("Frink ideals", n, limit);
    std::vector<AltSet> ideals;
    for (Mask i = 0; i < (Mask{1} << n); ++i) {
        const AltSet ideal = from_mask(n, i);
        bool closed = true;
        // Every submask z of i, the empty one included.
        Mask z = i;
        while (true) {
            if (!delta_closure(p, from_mask(n, z)).is_subset_of(ideal)) {
                closed = false;
                break;
            }
            if (z == 0) break;
            z = (z - 1) & i;
        }
        if (closed) ideals.push_back(ideal);
    }
    return ideals;
}

Rel way_below_relation(const Poset& p, std::size_t limit) {
    const std::size_t n = p.size();
    const auto ideals = frink_ideals(p, limit);
    std::vector<AltSet> closures;
    closures.reserve(ideals.size());
    for (const auto& ideal : ideals) closures.push_back(delta_closure(p, ideal));

    Rel out(n);
    for (AltId x = 0; x < n; ++x) {
        for (AltId y = 0; y < n; ++y) {
            bool holds = true;
            for (std::size_t k = 0; k < ideals.size() && holds; ++k) {
                if (closures[k].test(y) && !ideals[k].test(x)) holds = false;
            }
            if (holds) out.set(x, y);
        }
    }
    return out;
}

bool way_below_e(const Poset& p, AltId x, AltId y, std::size_t limit) {
    return way_below_relation(p, limit).test(x, y);
}

bool is_precontinuous(const Poset& p, std::size_t limit) {
    const Rel way_below = way_below_relation(p, limit);
    for (AltId x = 0; x < p.size(); ++x) {
        if (!delta_closure(p, way_below.predecessors(x)).test(x)) return false;
    }
    return true;
}

FiniteTopology FiniteTopology::discrete(std::size_t n) {
    if (n > 20) throw LimitExceeded("discrete topology", n, 20);
    FiniteTopology t;
    t.n = n;
    for (Mask m = 0; m < (Mask{1} << n); ++m) t.opens.push_back(from_mask(n, m));
    return t;
}

FiniteTopology FiniteTopology::indiscrete(std::size_t n) {
    FiniteTopology t;
    t.n = n;
    t.opens.emplace_back(n);
    if (n > 0) t.opens.push_back(AltSet::full(n));
    return t;
}

bool FiniteTopology::is_open(const AltSet& u) const {
    return std::binary_search(opens.begin(), opens.end(), u);
}

AltSet FiniteTopology::minimal_neighborhood(AltId x) const {
    AltSet out = AltSet::full(n);
    for (const auto& u : opens) {
        if (u.test(x)) out &= u;
    }
    return out;
}

bool is_topology(const FiniteTopology& t) {
    if (!t.is_open(AltSet(t.n)) || !t.is_open(AltSet::full(t.n))) return false;
    for (std::size_t i = 0; i < t.opens.size(); ++i) {
        for (std::size_t j = i + 1; j < t.opens.size(); ++j) {
            if (!t.is_open(t.opens[i] | t.opens[j]) || !t.is_open(t.opens[i] & t.opens[j])) {
                return false;
            }
        }
    }
    return true;
}

FiniteTopology excluded_set_topology(std::size_t n, const AltSet& excluded) {
    if (n > 20) throw LimitExceeded("excluded set topology", n, 20);
    FiniteTopology t;
    t.n = n;
    const Mask free = AltSet::full(n).to_mask() & ~excluded.to_mask();
    // Submasks of the free part, ascending.
    Mask u = 0;
    while (true) {
        t.opens.push_back(from_mask(n, u));
        if (u == free) break;
        u = (u - free) & free;
    }
    const AltSet full = AltSet::full(n);
    if (!(t.opens.back() == full)) t.opens.push_back(full);
    return t;
}

std::vector<AltSet> compact_subcover(const FiniteTopology& t, const std::vector<AltSet>& cover) {
    const AltSet full = AltSet::full(t.n);
    for (const auto& u : cover) {
        if (u == full) return {u};
    }
    // Greedy pass keeping only sets that add new points.
    std::vector<AltSet> out;
    AltSet covered(t.n);
    for (const auto& u : cover) {
        if (!u.is_subset_of(covered)) {
            out.push_back(u);
            covered |= u;
        }
    }
    if (!(covered == full)) throw Error("family does not cover the space");
    return out;
}

bool weak_t1_separation(const FiniteTopology& t, const Rel& strict) {
    // The smallest neighbourhood of x misses y iff some neighbourhood does.
    for (AltId x = 0; x < t.n; ++x) {
        const AltSet nbhd = t.minimal_neighborhood(x);
        for (AltId y = 0; y < t.n; ++y) {
            if (strict.test(y, x) && nbhd.test(y)) return false;
        }
    }
    return true;
}

bool t1_order_separation(const FiniteTopology& t, const Rel& strict) {
    if (!weak_t1_separation(t, strict)) return false;
    for (AltId x = 0; x < t.n; ++x) {
        const AltSet nbhd = t.minimal_neighborhood(x);
        for (AltId y = 0; y < t.n; ++y) {
            if (!strict.test(y, x)) continue;
            bool all_below = true;
            nbhd.for_each([&](AltId z) { all_below = all_below && strict.test(y, z); });
            if (!all_below) return false;
        }
    }
    return true;
}

bool nachbin_closed(const FiniteTopology& t, const Rel& order) {
    std::vector<AltSet> nbhd;
    nbhd.reserve(t.n);
    for (AltId x = 0; x < t.n; ++x) nbhd.push_back(t.minimal_neighborhood(x));
    for (AltId x = 0; x < t.n; ++x) {
        for (AltId y = 0; y < t.n; ++y) {
            if (order.test(x, y)) continue;
            bool separated = true;
            nbhd[x].for_each([&](AltId u) {
                if (order.successors(u).intersects(nbhd[y])) separated = false;
            });
            if (!separated) return false;
        }
    }
    return true;
}

}  // namespace stableset
