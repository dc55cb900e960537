#include <doctest.h>

#include "stableset/errors.hpp"
#include "stableset/solutions.hpp"
#include "support.hpp"

using namespace stableset;
using fx::Mask;

namespace {

// Minimal undominated pairs straight from the definition, for small n.
std::vector<std::pair<Mask, Mask>> brute_pairs(const DecisionProblem& p) {
    const std::size_t n = p.size();
    const fx::Matrix s = fx::asym(fx::matrix(p.rel()));
    const fx::Matrix c = fx::reach(s);
    const Mask all = (Mask{1} << n) - 1;
    std::vector<std::pair<Mask, Mask>> good;
    for (Mask u = 1; u <= all; ++u) {
        for (Mask g = u; g != 0; g = (g - 1) & u) {
            bool ok = true;
            for (std::size_t x = 0; x < n && ok; ++x) {
                if (!((g >> x) & 1)) continue;
                for (std::size_t y = 0; y < n && ok; ++y) {
                    if (!((u >> y) & 1) && s[y][x]) ok = false;
                }
            }
            if (ok && std::popcount(u) > 1) {
                for (std::size_t y = 0; y < n && ok; ++y) {
                    if (!((u >> y) & 1)) continue;
                    bool hit = false;
                    for (std::size_t x = 0; x < n; ++x) {
                        if (((g >> x) & 1) && c[x][y]) hit = true;
                    }
                    ok = hit;
                }
            }
            if (ok) good.emplace_back(g, u);
        }
    }
    std::vector<std::pair<Mask, Mask>> out;
    for (const auto& [g, u] : good) {
        bool minimal = true;
        for (const auto& [h, v] : good) {
            if ((h != g || v != u) && (h & g) == h && (v & u) == v) minimal = false;
        }
        if (minimal) out.emplace_back(g, u);
    }
    std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
        return a.second != b.second ? a.second < b.second : a.first < b.first;
    });
    return out;
}

}  // namespace

TEST_CASE("stability checks") {
    const StabilityReport alt = is_stable_set(AltSet(4, {0, 2}), asymmetric_part(fx::i4().rel()));
    CHECK(alt.internal_ok);
    CHECK(alt.external_ok);

    const StabilityReport single = is_stable_set(AltSet(3, {0}), asymmetric_part(fx::i1().rel()));
    CHECK(single.internal_ok);
    CHECK_FALSE(single.external_ok);
    REQUIRE(single.witness);
    CHECK(single.witness->first == 2);
    CHECK_FALSE(single.witness->second);

    const Rel closure = transitive_closure(asymmetric_part(fx::i1().rel()));
    CHECK(is_stable_set(AltSet(3, {0}), closure).ok());

    const StabilityReport pair = is_stable_set(AltSet(3, {0, 1}), fx::i1().rel());
    CHECK_FALSE(pair.internal_ok);
    CHECK(pair.witness->first == 0);
    CHECK(pair.witness->second == 1);

    CHECK_THROWS_AS(is_stable_set(AltSet(3), fx::i1().rel()), EmptySolution);
}

TEST_CASE("core") {
    CHECK(core(fx::i2()) == AltSet(3, {0}));
    CHECK(core(fx::i1()).empty());
    CHECK(core(fx::i5()) == AltSet(2, {0, 1}));
}

TEST_CASE("schwartz set by three methods") {
    for (auto method : {SchwartzMethod::Condensation, SchwartzMethod::Deb, SchwartzMethod::Brute}) {
        CHECK(schwartz_set(fx::i3(), method) == AltSet(4, {0, 1, 2}));
        CHECK(schwartz_set(fx::i2(), method) == AltSet(3, {0}));
        CHECK(schwartz_set(fx::i5(), method) == AltSet(2, {0, 1}));
        CHECK(schwartz_set(fx::i4(), method) == AltSet::full(4));
    }
    CHECK_THROWS_AS(schwartz_set(fx::i3(), SchwartzMethod::Brute, 3), OracleLimitExceeded);
}

TEST_CASE("duggan set") {
    CHECK(duggan_set(fx::i3()) == AltSet(4, {0, 1, 2}));
    CHECK(duggan_set(fx::i1()) == AltSet::full(3));
    CHECK(duggan_set(fx::i2()) == AltSet(3, {0}));
}

TEST_CASE("vnm stable sets") {
    CHECK(vnm_stable_sets(fx::i1()).empty());
    CHECK(vnm_stable_sets(fx::five_cycle()).empty());
    CHECK(fx::masks(vnm_stable_sets(fx::i4())) == std::vector<Mask>{0b0101, 0b1010});
    CHECK(fx::masks(vnm_stable_sets(fx::i2())) == std::vector<Mask>{0b001});
}

TEST_CASE("generalized stable sets") {
    const SolutionFamily g3 = generalized_stable_sets(fx::i3());
    CHECK(g3.form() == FamilyForm::OnePerComponent);
    CHECK(fx::masks(g3) == std::vector<Mask>{0b001, 0b010, 0b100});
    CHECK(fx::masks(generalized_stable_sets(fx::i5())) == std::vector<Mask>{0b11});
    CHECK(fx::masks(generalized_stable_sets(fx::i2())) == std::vector<Mask>{0b001});
}

TEST_CASE("socially stable sets under both readings") {
    CHECK(fx::masks(socially_stable_sets(fx::i3(), SociallyInterp::RestrictClosure)) ==
          std::vector<Mask>{0b0011, 0b0101, 0b0111});
    CHECK(fx::masks(socially_stable_sets(fx::i3(), SociallyInterp::ClosureOfRestriction)) ==
          std::vector<Mask>{0b0111});
    for (auto interp : {SociallyInterp::RestrictClosure, SociallyInterp::ClosureOfRestriction}) {
        CHECK(fx::masks(socially_stable_sets(fx::i2(), interp)) == std::vector<Mask>{0b001});
    }
}

TEST_CASE("m stable sets") {
    const SolutionFamily m5 = m_stable_sets(fx::i5());
    CHECK(m5.form() == FamilyForm::UnionsOfComponents);
    CHECK(fx::masks(m5) == std::vector<Mask>{0b01, 0b10, 0b11});
    CHECK(fx::masks(m_stable_sets(fx::i3())) == std::vector<Mask>{0b0111});
    CHECK(fx::masks(m_stable_sets(fx::i2())) == std::vector<Mask>{0b001});
}

TEST_CASE("w stable sets") {
    CHECK(fx::masks(w_stable_sets(fx::i3())) == std::vector<Mask>{0b0001, 0b0010, 0b0100});
    CHECK(fx::masks(w_stable_sets(fx::i5())) == std::vector<Mask>{0b01, 0b10, 0b11});
    CHECK(fx::masks(w_stable_sets(fx::i1())) == std::vector<Mask>{0b001, 0b010, 0b100});
}

TEST_CASE("extended stable sets") {
    CHECK(fx::masks(extended_stable_sets(fx::i3())) == std::vector<Mask>{0b0001, 0b0010, 0b0100});
    CHECK(fx::masks(extended_stable_sets(fx::i2())) == std::vector<Mask>{0b001});
    CHECK(fx::masks(extended_stable_sets(fx::i5())) == std::vector<Mask>{0b11});
}

TEST_CASE("undominated pairs") {
    SUBCASE("3-cycle") {
        // (X, X) is undominated but not minimal: each cycle edge already
        // gives a smaller pair, e.g. ({0}, {0,2}) below it.
        const auto pairs = undominated_pairs(fx::i1());
        REQUIRE_FALSE(pairs.empty());
        AltSet generators(3);
        for (const auto& pr : pairs) {
            CHECK(pr.top_cycle);
            CHECK(pr.support != AltSet::full(3));
            generators |= pr.generator;
        }
        CHECK(generators == duggan_set(fx::i1()));
    }
    SUBCASE("chain") {
        const auto pairs = undominated_pairs(fx::i2());
        REQUIRE(pairs.size() == 1);
        CHECK(pairs[0].generator == AltSet(3, {0}));
        CHECK(pairs[0].support == AltSet(3, {0}));
    }
    SUBCASE("cycle with tail") {
        CHECK(undominated_pair_union(fx::i3()) == AltSet(4, {0, 1, 2}));
        CHECK(undominated_pair_union(fx::i3()) == duggan_set(fx::i3()));
    }
    for (std::uint64_t seed = 0; seed < 300; ++seed) {
        const DecisionProblem p = fx::random_digraph(seed, 5);
        std::vector<std::pair<Mask, Mask>> got;
        for (const auto& pr : undominated_pairs(p)) got.emplace_back(pr.generator.to_mask(), pr.support.to_mask());
        CAPTURE(seed);
        REQUIRE(got == brute_pairs(p));
    }
}

TEST_CASE("set-valued concepts agree with brute force on random digraphs") {
    for (std::uint64_t seed = 0; seed < 1000; ++seed) {
        const DecisionProblem p = fx::random_digraph(seed, 10);
        CAPTURE(seed);
        const Mask g = fx::gocha(p);
        REQUIRE(schwartz_set(p, SchwartzMethod::Condensation).to_mask() == g);
        REQUIRE(schwartz_set(p, SchwartzMethod::Deb).to_mask() == g);
        REQUIRE(core(p).is_subset_of(schwartz_set(p)));
        REQUIRE(schwartz_set(p).is_subset_of(duggan_set(p)));
        REQUIRE(generalized_stable_sets(p).count() > 0);
    }
}
