#include "stableset/solutions.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <vector>

#include "stableset/errors.hpp"
#include "stableset/limits.hpp"
#include "stableset/oracle.hpp"

namespace stableset {

namespace {

using Mask = std::uint64_t;

std::size_t checked_limit(const DecisionProblem& p, std::size_t max_n) {
    const std::size_t limit = resolve_max_n(max_n);
    if (p.size() > limit) throw OracleLimitExceeded(p.size(), limit);
    return limit;
}

std::vector<Mask> row_masks(const Rel& r) {
    std::vector<Mask> out(r.size());
    for (AltId x = 0; x < r.size(); ++x) out[x] = r.successors(x).to_mask();
    return out;
}

std::vector<Mask> column_masks(const Rel& r) { return row_masks(r.transpose()); }

std::vector<AltSet> components_of(const Contraction& c, const std::vector<ClassId>& ids) {
    std::vector<AltSet> out;
    out.reserve(ids.size());
    for (ClassId i : ids) out.push_back(c.classes[i]);
    return out;
}

// Backtracking search for every VNM stable set of the strict relation.
class KernelSearch {
public:
    explicit KernelSearch(const Rel& strict)
        : n_(strict.size()), succ_(row_masks(strict)), pred_(column_masks(strict)) {}

    std::vector<AltSet> run() {
        descend(0, 0, 0);
        return std::move(found_);
    }

private:
    // Every rejected vertex must still be able to get a dominator.
    bool feasible(Mask in, Mask out, AltId next) const {
        const Mask undecided = next >= 64 ? 0 : (~Mask{0} << next) & full();
        for (Mask bits = out; bits != 0; bits &= bits - 1) {
            const auto y = static_cast<AltId>(std::countr_zero(bits));
            if ((pred_[y] & in) == 0 && (pred_[y] & undecided) == 0) return false;
        }
        return true;
    }

    Mask full() const { return n_ >= 64 ? ~Mask{0} : (Mask{1} << n_) - 1; }

    void descend(AltId v, Mask in, Mask out) {
        if (v == n_) {
            if (in != 0 && feasible(in, out, v)) found_.push_back(AltSet::from_mask(n_, in));
            return;
        }
        const Mask bit = Mask{1} << v;
        if (((succ_[v] | pred_[v]) & in) == 0 && feasible(in | bit, out, v + 1)) {
            descend(v + 1, in | bit, out);
        }
        if (feasible(in, out | bit, v + 1)) descend(v + 1, in, out | bit);
    }

    std::size_t n_;
    std::vector<Mask> succ_;
    std::vector<Mask> pred_;
    std::vector<AltSet> found_;
};

// Reachability masks (chains of length >= 1) of `succ` inside `within`.
std::vector<Mask> closure_within(const std::vector<Mask>& succ, Mask within) {
    std::vector<Mask> reach(succ.size(), 0);
    for (Mask xs = within; xs != 0; xs &= xs - 1) {
        const auto x = static_cast<AltId>(std::countr_zero(xs));
        Mask frontier = succ[x] & within;
        Mask seen = frontier;
        while (frontier != 0) {
            Mask next = 0;
            for (Mask f = frontier; f != 0; f &= f - 1) {
                next |= succ[static_cast<AltId>(std::countr_zero(f))] & within;
            }
            frontier = next & ~seen;
            seen |= next;
        }
        reach[x] = seen;
    }
    return reach;
}

bool symmetric_on(const std::vector<Mask>& reach, Mask v) {
    for (Mask xs = v; xs != 0; xs &= xs - 1) {
        const auto x = static_cast<AltId>(std::countr_zero(xs));
        for (Mask ys = reach[x] & v; ys != 0; ys &= ys - 1) {
            const auto y = static_cast<AltId>(std::countr_zero(ys));
            if ((reach[y] >> x & 1u) == 0) return false;
        }
    }
    return true;
}

}  // namespace

StabilityReport is_stable_set(const AltSet& v, const Rel& q) {
    if (v.empty()) throw EmptySolution();
    StabilityReport report;
    report.internal_ok = true;
    v.for_each([&](AltId x) {
        if (!report.internal_ok) return;
        AltSet hits = q.successors(x) & v;
        hits.reset(x);
        if (hits.any()) {
            report.internal_ok = false;
            report.witness = Witness{x, hits.first()};
        }
    });

    AltSet reached(v.universe());
    v.for_each([&](AltId x) { reached |= q.successors(x); });
    const AltSet missed = v.complement() - reached;
    report.external_ok = missed.empty();
    if (!report.external_ok && !report.witness) report.witness = Witness{missed.first(), {}};
    return report;
}

AltSet core(const DecisionProblem& p) {
    return maximal_set(p.all(), asymmetric_part(p.rel()));
}

AltSet schwartz_set(const DecisionProblem& p, SchwartzMethod method, std::size_t max_n) {
    switch (method) {
        case SchwartzMethod::Condensation: {
            const Contraction c = equipotence_classes(p);
            return maximal_components(c).ground(c);
        }
        case SchwartzMethod::Deb:
            return maximal_set(p.all(), transitive_closure(asymmetric_part(p.rel())));
        case SchwartzMethod::Brute:
            return gocha_bruteforce(p, max_n);
    }
    return AltSet(p.size());
}

AltSet duggan_set(const DecisionProblem& p) {
    return maximal_set(p.all(), trap_relation(p));
}

SolutionFamily vnm_stable_sets(const DecisionProblem& p, std::size_t max_n) {
    const Rel strict = asymmetric_part(p.rel());
    if (is_acyclic(strict)) {
        // Acyclic P(R): every class is a singleton and the condensation
        // stable set is the unique stable set.
        const Contraction c = equipotence_classes(p);
        AltSet chosen(p.size());
        for (ClassId i : condensation_stable_set(c)) chosen |= c.classes[i];
        if (!core(p).is_subset_of(chosen)) {
            throw Error("acyclic stable set " + chosen.to_string() + " misses part of the core");
        }
        return SolutionFamily::explicit_family(p.size(), {chosen});
    }
    checked_limit(p, max_n);
    return SolutionFamily::explicit_family(p.size(), KernelSearch(strict).run());
}

SolutionFamily generalized_stable_sets(const DecisionProblem& p) {
    const Contraction c = equipotence_classes(p);
    return SolutionFamily::one_per_component(p.size(),
                                             components_of(c, maximal_components(c).indices));
}

std::string_view to_string(SociallyInterp interp) {
    return interp == SociallyInterp::RestrictClosure ? "RESTRICT_CLOSURE" : "CLOSURE_OF_RESTRICTION";
}

SolutionFamily socially_stable_sets(const DecisionProblem& p, SociallyInterp interp,
                                    std::size_t max_n) {
    checked_limit(p, max_n);
    const std::size_t n = p.size();
    const Rel strict = asymmetric_part(p.rel());
    const auto succ = row_masks(strict);
    const auto pred = column_masks(strict);
    const Mask all = (Mask{1} << n) - 1;
    const auto global = closure_within(succ, all);

    const Contraction c = equipotence_classes(p);
    const auto maximal = components_of(c, maximal_components(c).indices);

    std::vector<AltSet> members;
    for (Mask v = 1; v <= all; ++v) {
        bool external = true;
        for (Mask ys = all & ~v; ys != 0 && external; ys &= ys - 1) {
            external = (pred[static_cast<AltId>(std::countr_zero(ys))] & v) != 0;
        }
        if (!external) continue;
        const bool internal = interp == SociallyInterp::RestrictClosure
                                  ? symmetric_on(global, v)
                                  : symmetric_on(closure_within(succ, v), v);
        if (!internal) continue;

        AltSet member = AltSet::from_mask(n, v);
        for (const auto& component : maximal) {
            if (!component.intersects(member)) {
                throw Error("socially stable set " + member.to_string() +
                            " misses the maximal component " + component.to_string());
            }
        }
        members.push_back(std::move(member));
    }
    return SolutionFamily::explicit_family(n, std::move(members));
}

SolutionFamily m_stable_sets(const DecisionProblem& p) {
    const Contraction c = equipotence_classes(p);
    return SolutionFamily::unions_of_components(p.size(),
                                                components_of(c, maximal_components(c).indices));
}

SolutionFamily w_stable_sets(const DecisionProblem& p) {
    const Contraction c = equipotence_classes(p);
    return SolutionFamily::subset_of_representatives(
        p.size(), components_of(c, maximal_components(c).indices));
}

SolutionFamily extended_stable_sets(const DecisionProblem& p) {
    const Contraction c = equipotence_classes(p);
    return SolutionFamily::one_per_component(p.size(),
                                             components_of(c, condensation_stable_set(c)));
}

std::vector<UndominatedPair> undominated_pairs(const DecisionProblem& p, std::size_t max_n) {
    checked_limit(p, max_n);
    const std::size_t n = p.size();
    const Rel strict = asymmetric_part(p.rel());
    const auto pred = column_masks(strict);
    const auto reach = row_masks(transitive_closure(strict));
    const Mask all = (Mask{1} << n) - 1;
    const auto key = [n](Mask generator, Mask support) { return (support << n) | generator; };

    // undominated[key] for generator ⊆ support; below[key] says some
    // undominated pair sits under (generator, support) in the product order.
    std::vector<bool> undominated(std::size_t{1} << (2 * n), false);
    std::vector<bool> below(std::size_t{1} << (2 * n), false);

    const auto is_undominated = [&](Mask g, Mask s) {
        if (g == 0) return false;
        for (Mask xs = g; xs != 0; xs &= xs - 1) {
            if ((pred[static_cast<AltId>(std::countr_zero(xs))] & ~s & all) != 0) return false;
        }
        if (std::popcount(s) > 1) {
            Mask covered = 0;
            for (Mask xs = g; xs != 0; xs &= xs - 1) {
                covered |= reach[static_cast<AltId>(std::countr_zero(xs))];
            }
            if ((s & ~covered) != 0) return false;
        }
        return true;
    };

    const auto strictly_below = [&](Mask g, Mask s) {
        for (Mask es = g; es != 0; es &= es - 1) {
            if (below[key(g & ~(es & -es), s)]) return true;
        }
        for (Mask es = s & ~g; es != 0; es &= es - 1) {
            if (below[key(g, s & ~(es & -es))]) return true;
        }
        return false;
    };

    for (Mask s = 1; s <= all; ++s) {
        // Submasks of s in ascending order.
        Mask g = 0;
        do {
            g = (g - s) & s;
            const bool u = is_undominated(g, s);
            undominated[key(g, s)] = u;
            below[key(g, s)] = u || strictly_below(g, s);
        } while (g != s);
    }

    const auto is_cycle = [&](Mask set) {
        for (Mask xs = set; xs != 0; xs &= xs - 1) {
            if ((set & ~reach[static_cast<AltId>(std::countr_zero(xs))]) != 0) return false;
        }
        return true;
    };

    std::vector<UndominatedPair> out;
    for (Mask s = 1; s <= all; ++s) {
        for (Mask g = s; g != 0; g = (g - 1) & s) {
            if (!undominated[key(g, s)] || strictly_below(g, s)) continue;
            out.push_back({AltSet::from_mask(n, g), AltSet::from_mask(n, s),
                           is_cycle(g) && is_cycle(s)});
        }
    }
    std::sort(out.begin(), out.end(), [](const UndominatedPair& a, const UndominatedPair& b) {
        if (a.support != b.support) return a.support < b.support;
        return a.generator < b.generator;
    });
    return out;
}

AltSet undominated_pair_union(const DecisionProblem& p, std::size_t max_n) {
    AltSet out = core(p);
    for (const auto& pair : undominated_pairs(p, max_n)) {
        if (pair.top_cycle) out |= pair.generator;
    }
    return out;
}

}  // namespace stableset
