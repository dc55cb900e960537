#include <doctest.h>

#include "stableset/errors.hpp"
#include "stableset/order_topology.hpp"
#include "stableset/solutions.hpp"
#include "support.hpp"

using namespace stableset;
using fx::Mask;

namespace {

// Random partial order: a random DAG on the index order, transitively closed.
Poset random_poset(std::uint64_t seed, std::size_t max_n) {
    fx::SplitMix rng{seed};
    const std::size_t n = 1 + rng.next() % max_n;
    fx::Matrix m(n, std::vector<bool>(n, false));
    const double density = rng.unit();
    for (std::size_t x = 0; x < n; ++x) {
        for (std::size_t y = x + 1; y < n; ++y) m[x][y] = rng.unit() < density;
    }
    fx::Matrix c = fx::reach(m);
    for (std::size_t x = 0; x < n; ++x) c[x][x] = true;
    return Poset(fx::rel(c));
}

}  // namespace

TEST_CASE("poset validation") {
    CHECK_THROWS_AS(Poset(Rel::from_pairs(2, {{0, 1}})), PosetViolation);
    CHECK_THROWS_AS(Poset(Rel::complete(2)), PosetViolation);
    CHECK(Poset::chain(3).le(0, 2));
    CHECK_FALSE(Poset::antichain(3).le(0, 1));
    CHECK(Poset::from_problem(fx::i3()).le(0, 3));
    CHECK_FALSE(Poset::from_problem(fx::i3()).le(0, 1));
}

TEST_CASE("bounds and delta closure") {
    const Poset chain = Poset::chain(3);
    CHECK(upper_bounds(chain, AltSet(3, {0, 1})) == AltSet(3, {1, 2}));
    CHECK(lower_bounds(chain, AltSet(3, {1, 2})) == AltSet(3, {0, 1}));
    CHECK(upper_bounds(Poset::antichain(2), AltSet(2, {0, 1})).empty());
    CHECK(upper_bounds(chain, AltSet(3)) == AltSet::full(3));
    CHECK(lower_bounds(chain, AltSet(3)) == AltSet::full(3));

    CHECK(delta_closure(chain, AltSet(3, {0})) == AltSet(3, {0}));
    CHECK(delta_closure(Poset::antichain(2), AltSet(2, {0, 1})) == AltSet::full(2));
    CHECK(delta_closure(Poset::diamond(), AltSet(4, {1, 2})) == AltSet::full(4));
}

TEST_CASE("dedekind macneille completion") {
    const CutLattice chain = dm_completion(Poset::chain(3));
    CHECK(fx::masks(chain.cuts) == std::vector<Mask>{0b001, 0b011, 0b111});
    CHECK(is_complete_lattice(Poset::chain(3), chain));

    const CutLattice anti = dm_completion(Poset::antichain(2));
    CHECK(fx::masks(anti.cuts) == std::vector<Mask>{0b00, 0b01, 0b10, 0b11});
    CHECK(is_complete_lattice(Poset::antichain(2), anti));

    const CutLattice one = dm_completion(Poset::chain(1));
    CHECK(one.cuts.size() <= 2);
    CHECK(is_complete_lattice(Poset::chain(1), one));

    REQUIRE(anti.find(AltSet(2, {1})));
    CHECK(anti.meet({*anti.find(AltSet(2, {0})), *anti.find(AltSet(2, {1}))}).empty());
    CHECK(anti.join(Poset::antichain(2), {*anti.find(AltSet(2, {0})), *anti.find(AltSet(2, {1}))}) ==
          AltSet::full(2));
    CHECK_THROWS_AS(dm_completion(Poset::chain(11)), LimitExceeded);
}

TEST_CASE("frink ideals") {
    CHECK(fx::masks(frink_ideals(Poset::chain(3))) == std::vector<Mask>{0b001, 0b011, 0b111});
    CHECK(fx::masks(frink_ideals(Poset::antichain(2))) == std::vector<Mask>{0b00, 0b01, 0b10, 0b11});
    // Three pairwise unbounded points: a pair closes to the whole set.
    const auto three = fx::masks(frink_ideals(Poset::antichain(3)));
    CHECK(std::find(three.begin(), three.end(), Mask{0b011}) == three.end());
    CHECK(std::find(three.begin(), three.end(), Mask{0b001}) != three.end());
    CHECK(fx::masks(frink_ideals(Poset::chain(1))) == std::vector<Mask>{0b1});
    CHECK_THROWS_AS(frink_ideals(Poset::chain(9)), LimitExceeded);
}

TEST_CASE("way below and precontinuity") {
    const Poset chain = Poset::chain(3);
    CHECK(way_below_e(chain, 0, 2));
    CHECK(way_below_e(chain, 0, 0));
    CHECK_FALSE(way_below_e(chain, 2, 1));
    CHECK(is_precontinuous(Poset::chain(4)));
    CHECK(is_precontinuous(Poset::antichain(3)));
    CHECK(is_precontinuous(Poset::diamond()));
}

TEST_CASE("order lab on random posets") {
    for (std::uint64_t seed = 0; seed < 300; ++seed) {
        const Poset p = random_poset(seed, 6);
        CAPTURE(seed);
        const std::size_t n = p.size();
        const Mask all = (Mask{1} << n) - 1;
        for (Mask a = 0; a <= all; ++a) {
            const AltSet s = AltSet::from_mask(n, a);
            const AltSet d = delta_closure(p, s);
            REQUIRE(s.is_subset_of(d));
            REQUIRE(delta_closure(p, d) == d);
            for (Mask b = a; b <= all; b = (b + 1) | a) {
                REQUIRE(d.is_subset_of(delta_closure(p, AltSet::from_mask(n, b))));
                if (b == all) break;
            }
        }
        REQUIRE(is_complete_lattice(p, dm_completion(p)));
        REQUIRE(is_precontinuous(p));
        // On a finite poset the e-way-below relation is the order itself.
        const Rel wb = way_below_relation(p);
        for (AltId x = 0; x < n; ++x) {
            for (AltId y = 0; y < n; ++y) REQUIRE(wb.test(x, y) == p.le(x, y));
        }
    }
}

TEST_CASE("finite topologies") {
    const FiniteTopology t = excluded_set_topology(3, AltSet(3, {0}));
    CHECK(fx::masks(t.opens) == std::vector<Mask>{0b000, 0b010, 0b100, 0b110, 0b111});
    CHECK(is_topology(t));
    CHECK(excluded_set_topology(2, AltSet(2)).opens == FiniteTopology::discrete(2).opens);
    CHECK(excluded_set_topology(2, AltSet::full(2)).opens == FiniteTopology::indiscrete(2).opens);
    CHECK(t.minimal_neighborhood(0) == AltSet::full(3));
    CHECK(t.minimal_neighborhood(1) == AltSet(3, {1}));

    FiniteTopology bad{3, {AltSet(3), AltSet(3, {0}), AltSet(3, {1}), AltSet::full(3)}};
    CHECK_FALSE(is_topology(bad));

    const auto sub = compact_subcover(t, {AltSet(3, {1}), AltSet(3, {2}), AltSet::full(3)});
    AltSet covered(3);
    for (const auto& u : sub) covered |= u;
    CHECK(covered == AltSet::full(3));
}

TEST_CASE("t1 order separation") {
    const DecisionProblem p = fx::i3();
    const Rel strict = strict_dominance(p.rel());
    const FiniteTopology t = excluded_set_topology(4, schwartz_set(p));
    CHECK(weak_t1_separation(t, strict));

    const Rel some = Rel::from_pairs(2, {{1, 0}});
    CHECK_FALSE(weak_t1_separation(FiniteTopology::indiscrete(2), some));
    CHECK(weak_t1_separation(FiniteTopology::discrete(2), some));
    CHECK(t1_order_separation(FiniteTopology::discrete(2), Rel(2)));
}

TEST_CASE("nachbin closedness") {
    CHECK(nachbin_closed(FiniteTopology::discrete(3), Poset::chain(3).leq()));
    CHECK_FALSE(nachbin_closed(FiniteTopology::indiscrete(2), Rel::identity(2)));
    // Order 2 <= 1 <= 0. The pair (0, 1) is unordered, but the only open set
    // around 0 is the whole space, and it pairs 2 with 1.
    const Rel leq = Rel::identity(3) | Rel::from_pairs(3, {{2, 1}, {2, 0}, {1, 0}});
    CHECK_FALSE(nachbin_closed(excluded_set_topology(3, AltSet(3, {0})), leq));
}
