#pragma once

// Fixtures and small brute-force helpers shared by the unit suites. The
// helpers work on plain bitmasks and adjacency matrices so that the checks
// never route through the library's own closure or component code.

#include <algorithm>
#include <bit>
#include <cstdint>
#include <functional>
#include <vector>

#include "stableset/alt_set.hpp"
#include "stableset/relation.hpp"
#include "stableset/solution_family.hpp"

namespace fx {

using stableset::AltSet;
using stableset::DecisionProblem;
using stableset::Rel;

using Mask = std::uint64_t;
using Matrix = std::vector<std::vector<bool>>;

inline DecisionProblem problem(std::size_t n, std::initializer_list<stableset::Edge> edges) {
    return DecisionProblem(Rel::from_pairs(n, edges));
}

// I1: 3-cycle.
inline DecisionProblem i1() { return problem(3, {{0, 1}, {1, 2}, {2, 0}}); }
// I2: transitive chain 0 > 1 > 2.
inline DecisionProblem i2() { return problem(3, {{0, 1}, {1, 2}, {0, 2}}); }
// I3: 3-cycle with a tail 0 -> 3.
inline DecisionProblem i3() { return problem(4, {{0, 1}, {1, 2}, {2, 0}, {0, 3}}); }
// I4: 4-cycle.
inline DecisionProblem i4() { return problem(4, {{0, 1}, {1, 2}, {2, 3}, {3, 0}}); }
// I5: one symmetric pair.
inline DecisionProblem i5() { return problem(2, {{0, 1}, {1, 0}}); }

inline DecisionProblem five_cycle() {
    return problem(5, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 0}});
}

inline Mask mask(const AltSet& s) { return s.to_mask(); }

inline std::vector<Mask> masks(const std::vector<AltSet>& sets) {
    std::vector<Mask> out;
    for (const auto& s : sets) out.push_back(s.to_mask());
    std::sort(out.begin(), out.end());
    return out;
}

inline std::vector<Mask> masks(const stableset::SolutionFamily& f) { return masks(f.members()); }

inline Matrix matrix(const Rel& r) {
    Matrix m(r.size(), std::vector<bool>(r.size(), false));
    for (std::size_t x = 0; x < r.size(); ++x) {
        for (std::size_t y = 0; y < r.size(); ++y) m[x][y] = r.test(x, y);
    }
    return m;
}

inline Matrix asym(const Matrix& m) {
    Matrix out = m;
    for (std::size_t x = 0; x < m.size(); ++x) {
        for (std::size_t y = 0; y < m.size(); ++y) out[x][y] = m[x][y] && !m[y][x];
    }
    return out;
}

// Reachability by paths of length >= 1, one depth-first search per source.
inline Matrix reach(const Matrix& m) {
    const std::size_t n = m.size();
    Matrix out(n, std::vector<bool>(n, false));
    for (std::size_t s = 0; s < n; ++s) {
        std::vector<std::size_t> stack;
        for (std::size_t y = 0; y < n; ++y) {
            if (m[s][y] && !out[s][y]) {
                out[s][y] = true;
                stack.push_back(y);
            }
        }
        while (!stack.empty()) {
            const std::size_t v = stack.back();
            stack.pop_back();
            for (std::size_t y = 0; y < n; ++y) {
                if (m[v][y] && !out[s][y]) {
                    out[s][y] = true;
                    stack.push_back(y);
                }
            }
        }
    }
    return out;
}

inline Rel rel(const Matrix& m) {
    Rel r(m.size());
    for (std::size_t x = 0; x < m.size(); ++x) {
        for (std::size_t y = 0; y < m.size(); ++y) {
            if (m[x][y]) r.set(x, y);
        }
    }
    return r;
}

inline bool has_cycle(const Matrix& m) {
    const Matrix c = reach(m);
    for (std::size_t x = 0; x < m.size(); ++x) {
        if (c[x][x]) return true;
    }
    return false;
}

// Union of inclusion-minimal sets D with no outside y strictly dominating a member.
inline Mask gocha(const DecisionProblem& p) {
    const Matrix s = asym(matrix(p.rel()));
    const std::size_t n = p.size();
    std::vector<Mask> undominated;
    for (Mask d = 1; d < (Mask{1} << n); ++d) {
        bool ok = true;
        for (std::size_t x = 0; x < n && ok; ++x) {
            if (!((d >> x) & 1)) continue;
            for (std::size_t y = 0; y < n && ok; ++y) {
                if (!((d >> y) & 1) && s[y][x]) ok = false;
            }
        }
        if (ok) undominated.push_back(d);
    }
    Mask out = 0;
    for (Mask d : undominated) {
        const bool minimal = std::none_of(undominated.begin(), undominated.end(),
                                          [d](Mask e) { return e != d && (e & d) == e; });
        if (minimal) out |= d;
    }
    return out;
}

// Small mixing generator so the property suites do not depend on the library RNG.
struct SplitMix {
    std::uint64_t state;
    std::uint64_t next() {
        std::uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }
    double unit() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }
};

inline DecisionProblem random_digraph(std::uint64_t seed, std::size_t max_n) {
    SplitMix rng{seed};
    const std::size_t n = 1 + rng.next() % max_n;
    const double density = rng.unit();
    Rel r(n);
    for (std::size_t x = 0; x < n; ++x) {
        for (std::size_t y = 0; y < n; ++y) {
            if (x != y && rng.unit() < density) r.set(x, y);
        }
    }
    return DecisionProblem(r);
}

}  // namespace fx
