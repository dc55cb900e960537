#include "stableset/contraction.hpp"

#include <algorithm>
#include <functional>
#include <queue>
#include <utility>

namespace stableset {

namespace {

constexpr std::size_t kUnvisited = static_cast<std::size_t>(-1);

// Iterative Tarjan over the successor rows of `g`. Components come out in
// reverse topological order (sinks first).
std::vector<std::vector<AltId>> tarjan_sccs(const Rel& g) {
    const std::size_t n = g.size();
    std::vector<std::size_t> index(n, kUnvisited);
    std::vector<std::size_t> lowlink(n, 0);
    std::vector<bool> on_stack(n, false);
    std::vector<AltId> stack;
    std::vector<std::vector<AltId>> sccs;
    std::size_t counter = 0;

    // Call frame: vertex and the next successor to try.
    std::vector<std::pair<AltId, AltId>> frames;
    for (AltId root = 0; root < n; ++root) {
        if (index[root] != kUnvisited) continue;
        frames.emplace_back(root, 0);
        index[root] = lowlink[root] = counter++;
        stack.push_back(root);
        on_stack[root] = true;

        while (!frames.empty()) {
            auto& [v, cursor] = frames.back();
            const AltId w = g.successors(v).next(cursor);
            if (w < n) {
                cursor = w + 1;
                if (index[w] == kUnvisited) {
                    index[w] = lowlink[w] = counter++;
                    stack.push_back(w);
                    on_stack[w] = true;
                    frames.emplace_back(w, 0);
                } else if (on_stack[w]) {
                    lowlink[v] = std::min(lowlink[v], index[w]);
                }
                continue;
            }
            const AltId done = v;
            frames.pop_back();
            if (!frames.empty()) {
                const AltId parent = frames.back().first;
                lowlink[parent] = std::min(lowlink[parent], lowlink[done]);
            }
            if (lowlink[done] == index[done]) {
                std::vector<AltId> scc;
                AltId x;
                do {
                    x = stack.back();
                    stack.pop_back();
                    on_stack[x] = false;
                    scc.push_back(x);
                } while (x != done);
                sccs.push_back(std::move(scc));
            }
        }
    }
    return sccs;
}

}  // namespace

bool Contraction::is_nontrivial(ClassId c) const {
    return classes[c].count() > 1;
}

AltSet MaximalFamily::ground(const Contraction& c) const {
    AltSet out(c.n);
    for (ClassId i : indices) out |= c.classes[i];
    return out;
}

Contraction equipotence_classes(const DecisionProblem& p) {
    const std::size_t n = p.size();
    const Rel strict = asymmetric_part(p.rel());
    const auto sccs = tarjan_sccs(strict);
    const std::size_t k = sccs.size();

    std::vector<ClassId> raw_of(n);
    std::vector<AltId> smallest(k);
    for (ClassId c = 0; c < k; ++c) {
        smallest[c] = *std::min_element(sccs[c].begin(), sccs[c].end());
        for (AltId x : sccs[c]) raw_of[x] = c;
    }

    Rel raw_cond(k);
    for (const auto& [x, y] : strict.pairs()) {
        if (raw_of[x] != raw_of[y]) raw_cond.set(raw_of[x], raw_of[y]);
    }

    // Kahn's algorithm, smallest member first among ready classes.
    std::vector<std::size_t> indegree(k, 0);
    for (const auto& [i, j] : raw_cond.pairs()) ++indegree[j];
    using Ready = std::pair<AltId, ClassId>;
    std::priority_queue<Ready, std::vector<Ready>, std::greater<>> ready;
    for (ClassId c = 0; c < k; ++c) {
        if (indegree[c] == 0) ready.emplace(smallest[c], c);
    }
    std::vector<ClassId> order;
    order.reserve(k);
    while (!ready.empty()) {
        const ClassId c = ready.top().second;
        ready.pop();
        order.push_back(c);
        raw_cond.successors(c).for_each([&](AltId j) {
            if (--indegree[j] == 0) ready.emplace(smallest[j], j);
        });
    }

    std::vector<ClassId> renumber(k);
    for (ClassId pos = 0; pos < k; ++pos) renumber[order[pos]] = pos;

    Contraction c;
    c.n = n;
    c.classes.assign(k, AltSet(n));
    c.class_of.resize(n);
    for (AltId x = 0; x < n; ++x) {
        c.class_of[x] = renumber[raw_of[x]];
        c.classes[c.class_of[x]].set(x);
    }
    c.cond = Rel(k);
    for (const auto& [i, j] : raw_cond.pairs()) c.cond.set(renumber[i], renumber[j]);
    return c;
}

MaximalFamily maximal_components(const Contraction& c) {
    MaximalFamily family;
    for (ClassId j = 0; j < c.class_count(); ++j) {
        bool dominated = false;
        for (ClassId i = 0; i < c.class_count() && !dominated; ++i) {
            dominated = c.cond.test(i, j);
        }
        if (!dominated) family.indices.push_back(j);
    }
    return family;
}

Rel extended_dominance(const DecisionProblem& p, ExtendedReading reading) {
    const Contraction c = equipotence_classes(p);
    Rel out(p.size());
    for (AltId x = 0; x < p.size(); ++x) {
        const ClassId cx = c.class_of[x];
        AltSet row(p.size());
        c.cond.successors(cx).for_each([&](ClassId cy) { row |= c.classes[cy]; });
        if (reading == ExtendedReading::Literal && c.is_nontrivial(cx)) {
            row |= c.classes[cx];
        }
        row.for_each([&](AltId y) { out.set(x, y); });
    }
    return out;
}

bool class_level_equivalence_check(const DecisionProblem& p) {
    const Contraction c = equipotence_classes(p);
    const Rel ext = extended_dominance(p);
    for (ClassId i = 0; i < c.class_count(); ++i) {
        for (ClassId j = 0; j < c.class_count(); ++j) {
            bool all = true;
            c.classes[i].for_each([&](AltId x) {
                if (!c.classes[j].is_subset_of(ext.successors(x))) all = false;
            });
            if (all != c.cond.test(i, j)) return false;
        }
    }
    return true;
}

std::vector<ClassId> condensation_stable_set(const Contraction& c) {
    // Topological numbering means every dominator of class j precedes j.
    std::vector<ClassId> chosen;
    AltSet dominated(c.class_count());
    for (ClassId j = 0; j < c.class_count(); ++j) {
        if (dominated.test(j)) continue;
        chosen.push_back(j);
        dominated |= c.cond.successors(j);
    }
    return chosen;
}

}  // namespace stableset
