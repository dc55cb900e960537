#include <doctest.h>

#include "stableset/errors.hpp"
#include "stableset/oracle.hpp"
#include "stableset/solution_family.hpp"
#include "support.hpp"

using namespace stableset;
using fx::Mask;

TEST_CASE("solution family forms") {
    const std::vector<AltSet> comps{AltSet(5, {0, 1}), AltSet(5, {3})};

    const auto one = SolutionFamily::one_per_component(5, comps);
    CHECK(one.count() == 2);
    CHECK(fx::masks(one) == std::vector<Mask>{0b01001, 0b01010});
    CHECK(one.contains(AltSet(5, {1, 3})));
    CHECK_FALSE(one.contains(AltSet(5, {1})));

    const auto reps = SolutionFamily::subset_of_representatives(5, comps);
    CHECK(reps.count() == 5);
    CHECK(fx::masks(reps) == std::vector<Mask>{0b00001, 0b00010, 0b01000, 0b01001, 0b01010});
    CHECK(reps.contains(AltSet(5, {3})));
    CHECK_FALSE(reps.contains(AltSet(5, {0, 1})));

    const auto unions = SolutionFamily::unions_of_components(5, comps);
    CHECK(unions.count() == 3);
    CHECK(fx::masks(unions) == std::vector<Mask>{0b00011, 0b01000, 0b01011});

    const auto ex = SolutionFamily::explicit_family(3, {AltSet(3, {2}), AltSet(3, {0}), AltSet(3, {2})});
    CHECK(ex.count() == 2);
    CHECK(ex.sorted_members() == std::vector<AltSet>{AltSet(3, {0}), AltSet(3, {2})});

    CHECK(SolutionFamily::one_per_component(5, {}).empty());
    CHECK(SolutionFamily::unions_of_components(5, {}).empty());
    CHECK_THROWS_AS(SolutionFamily::explicit_family(3, {AltSet(3)}), EmptySolution);
    CHECK_THROWS_AS(SolutionFamily::one_per_component(5, {AltSet(5, {0}), AltSet(5, {0, 1})}), Error);
    CHECK_THROWS_AS(reps.members(2), LimitExceeded);

    int visited = 0;
    reps.for_each([&](const AltSet&) { return ++visited < 2; });
    CHECK(visited == 2);

    CHECK(family_form_from_string(to_string(FamilyForm::SubsetOfRepresentatives)) ==
          FamilyForm::SubsetOfRepresentatives);
}

TEST_CASE("family counts match enumeration") {
    for (std::uint64_t seed = 0; seed < 200; ++seed) {
        fx::SplitMix rng{seed};
        const std::size_t n = 1 + rng.next() % 8;
        std::vector<AltSet> comps;
        AltSet current(n);
        for (AltId x = 0; x < n; ++x) {
            current.set(x);
            if (rng.next() % 2 == 0) {
                comps.push_back(current);
                current = AltSet(n);
            }
        }
        if (current.any() && rng.next() % 2 == 0) comps.push_back(current);
        for (const auto& f : {SolutionFamily::one_per_component(n, comps),
                              SolutionFamily::subset_of_representatives(n, comps),
                              SolutionFamily::unions_of_components(n, comps)}) {
            const auto members = f.members();
            CHECK(members.size() == f.count());
            for (const auto& m : members) CHECK(f.contains(m));
            auto sorted = f.sorted_members();
            CHECK(std::is_sorted(sorted.begin(), sorted.end()));
            CHECK(std::adjacent_find(sorted.begin(), sorted.end()) == sorted.end());
        }
    }
}

TEST_CASE("concept names") {
    CHECK(concept_from_string("ess") == Concept::Extended);
    CHECK(concept_from_string("W_STABLE") == Concept::WStable);
    CHECK(to_string(Concept::Generalized) == "GENERALIZED");
    CHECK_THROWS_AS(concept_from_string("kernel"), Error);
}

TEST_CASE("oracle enumeration") {
    CHECK(enumerate_solutions(fx::i1(), Concept::Vnm).empty());
    CHECK(fx::masks(enumerate_solutions(fx::i3(), Concept::WStable)) ==
          std::vector<Mask>{0b0001, 0b0010, 0b0100});
    CHECK(fx::masks(enumerate_solutions(fx::i5(), Concept::MStable)) ==
          std::vector<Mask>{0b01, 0b10, 0b11});
    CHECK(fx::masks(enumerate_solutions(fx::i3(), Concept::Socially, SociallyInterp::RestrictClosure)) ==
          std::vector<Mask>{0b0011, 0b0101, 0b0111});
    CHECK(fx::masks(enumerate_solutions(fx::i3(), Concept::Socially,
                                        SociallyInterp::ClosureOfRestriction)) ==
          std::vector<Mask>{0b0111});
    CHECK_THROWS_AS(enumerate_solutions(fx::i3(), Concept::Vnm, SociallyInterp::RestrictClosure, 3),
                    OracleLimitExceeded);
}

TEST_CASE("gocha brute force") {
    CHECK(gocha_bruteforce(fx::i3()) == AltSet(4, {0, 1, 2}));
    CHECK(gocha_bruteforce(fx::i2()) == AltSet(3, {0}));
    CHECK(gocha_bruteforce(fx::i4()) == AltSet::full(4));
}

TEST_CASE("random problems") {
    const DecisionProblem t = random_problem(3, 1.0, 5, true);
    for (AltId x = 0; x < 3; ++x) {
        for (AltId y = 0; y < 3; ++y) {
            if (x != y) CHECK(t.rel().test(x, y) != t.rel().test(y, x));
        }
    }
    CHECK(random_problem(1, 0.5, 9).rel().empty());
    CHECK(random_problem(10, 0.3, 42) == random_problem(10, 0.3, 42));
    CHECK_FALSE(random_problem(10, 0.3, 42) == random_problem(10, 0.3, 43));

    const auto corpus = random_corpus(1, 30, 10, 10, 9);
    REQUIRE(corpus.size() == 40);
    for (std::size_t i = 0; i < corpus.size(); ++i) {
        CHECK(corpus[i].tournament == (i >= 30));
        CHECK(corpus[i].problem.size() <= (i >= 30 ? 9u : 10u));
    }
}

TEST_CASE("cross verification") {
    CHECK(cross_verify(fx::i3(), Concept::Extended).pass());
    const auto vnm = cross_verify(fx::i4(), Concept::Vnm);
    CHECK(vnm.pass());
    CHECK(vnm.oracle_count == 2);
    CHECK(vnm.constructive_count == 2);
    for (std::uint64_t seed = 0; seed < 20; ++seed) {
        CHECK(cross_verify(random_problem(7, 0.5, seed, true), Concept::Generalized).pass());
    }
}

TEST_CASE("trial runner is deterministic") {
    const OracleConfig config{8, 7, 100};
    const TrialSummary a = run_trials(Concept::WStable, config);
    const TrialSummary b = run_trials(Concept::WStable, config);
    CHECK(a.pass());
    CHECK(a.trials == 100);
    CHECK(a.passed == b.passed);
    CHECK(run_trials(Concept::Socially, {7, 3, 60}, SociallyInterp::ClosureOfRestriction).pass());
}
