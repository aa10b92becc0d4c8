#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "floatopt/layout.hpp"
#include "test_support.hpp"

using namespace floatopt;

TEST_CASE("partition splits the interval at the bumps") {
    const Instance instance(0.0, 1000.0, {250.0, 750.0}, 3);
    const BracketSet brackets = partition(instance);
    REQUIRE(brackets.size() == 3);
    CHECK(brackets[0].lower_wall == 0.0);
    CHECK(brackets[0].upper_wall == 250.0);
    CHECK(brackets[1].lower_wall == 250.0);
    CHECK(brackets[1].upper_wall == 750.0);
    CHECK(brackets[2].lower_wall == 750.0);
    CHECK(brackets[2].upper_wall == 1000.0);
    CHECK(brackets[0].area() == doctest::Approx(250.0));
    CHECK(brackets[1].area() == doctest::Approx(500.0));
    CHECK(brackets[2].area() == doctest::Approx(250.0));
    CHECK(brackets[0].lower_kind == WallKind::Boundary);
    CHECK(brackets[0].upper_kind == WallKind::Bump);
    CHECK(brackets[2].upper_kind == WallKind::Boundary);
    CHECK(brackets.total_length() == doctest::Approx(1000.0));
}

TEST_CASE("partition with no bumps is a single bracket") {
    const BracketSet brackets = partition(Instance(0.0, 1000.0, {}, 1));
    REQUIRE(brackets.size() == 1);
    CHECK(brackets[0].area() == doctest::Approx(1000.0));
    CHECK(brackets[0].lower_kind == WallKind::Boundary);
    CHECK(brackets[0].upper_kind == WallKind::Boundary);
}

TEST_CASE("duplicate bumps are merged at construction") {
    const Instance instance(0.0, 1000.0, {500.0, 500.0}, 2);
    CHECK(instance.bumps().size() == 1);
    const BracketSet brackets = partition(instance);
    REQUIRE(brackets.size() == 2);
    CHECK(brackets[0].upper_wall == 500.0);
}

TEST_CASE("instance construction rejects bad inputs by name") {
    CHECK_THROWS_WITH_AS(Instance(10.0, 10.0, {}, 1),
                         "boundary_lower must be strictly less than boundary_upper",
                         std::invalid_argument);
    CHECK_THROWS_AS(Instance(0.0, 1000.0, {1000.0}, 1), std::invalid_argument);
    CHECK_THROWS_AS(Instance(0.0, 1000.0, {0.0}, 1), std::invalid_argument);
    CHECK_THROWS_AS(Instance(0.0, 1000.0, {-5.0}, 1), std::invalid_argument);
    const double nan = std::numeric_limits<double>::quiet_NaN();
    CHECK_THROWS_AS(Instance(nan, 1000.0, {}, 1), std::invalid_argument);
    CHECK_THROWS_AS(Instance(0.0, 1000.0, {nan}, 1), std::invalid_argument);
}

TEST_CASE("objective at symmetric midpoints") {
    const Instance instance(0.0, 1000.0, {500.0}, 2);
    const std::vector<Track> positions{250.0, 750.0};
    CHECK(evaluate_objective(instance, positions, ObjectiveMode::Controllable) ==
          doctest::Approx(250.0));
    CHECK(evaluate_objective(instance, positions, ObjectiveMode::StrictAllPairs) ==
          doctest::Approx(250.0));
}

TEST_CASE("close bump pair caps strict mode but not controllable") {
    const Instance instance(0.0, 1000.0, {100.0, 120.0}, 1);
    const std::vector<Track> positions{560.0};
    CHECK(evaluate_objective(instance, positions, ObjectiveMode::Controllable) ==
          doctest::Approx(440.0));
    CHECK(evaluate_objective(instance, positions, ObjectiveMode::StrictAllPairs) ==
          doctest::Approx(20.0));
}

TEST_CASE("controllable objective with nothing placed is an error") {
    const Instance instance(0.0, 1000.0, {500.0}, 0);
    CHECK_THROWS_WITH_AS(
        evaluate_objective(instance, std::span<const Track>{}, ObjectiveMode::Controllable),
        "nothing to place", std::invalid_argument);
    // strict mode still has fixed pairs to measure
    CHECK(evaluate_objective(instance, std::span<const Track>{},
                             ObjectiveMode::StrictAllPairs) == doctest::Approx(500.0));
}

TEST_CASE("objective validates positions") {
    const Instance instance(0.0, 1000.0, {}, 1);
    CHECK_THROWS_AS(evaluate_objective(instance, std::vector<Track>{0.0}),
                    std::invalid_argument);
    CHECK_THROWS_AS(evaluate_objective(instance, std::vector<Track>{1000.0}),
                    std::invalid_argument);
    CHECK_THROWS_AS(evaluate_objective(instance, std::vector<Track>{1.0, 2.0}),
                    std::invalid_argument);
}

TEST_CASE("strict equals min of controllable and fixed gap on random instances") {
    std::mt19937_64 rng(0xA11CE);
    for (int i = 0; i < 300; ++i) {
        const Instance instance = testsupport::random_instance(rng);
        const auto positions = testsupport::random_positions(rng, instance);
        const double controllable =
            evaluate_objective(instance, positions, ObjectiveMode::Controllable);
        const double strict =
            evaluate_objective(instance, positions, ObjectiveMode::StrictAllPairs);
        const double expected = std::min(controllable, min_fixed_distance(instance));
        CHECK(strict == doctest::Approx(expected).epsilon(1e-12));
        CHECK(strict <= controllable);
        // cross-check both modes against the all-pairs reference
        CHECK(controllable ==
              doctest::Approx(testsupport::pairwise_objective(instance, positions, false)));
        CHECK(strict ==
              doctest::Approx(testsupport::pairwise_objective(instance, positions, true)));
    }
}

TEST_CASE("bracket areas sum to the total length on random instances") {
    std::mt19937_64 rng(0xB0B);
    for (int i = 0; i < 1000; ++i) {
        const Instance instance = testsupport::random_instance(rng);
        const BracketSet brackets = partition(instance);
        CHECK(brackets.size() == instance.bumps().size() + 1);
        double sum = 0.0;
        for (const Bracket& b : brackets.brackets()) sum += b.area();
        CHECK(sum == doctest::Approx(instance.length()).epsilon(1e-9));
    }
}

TEST_CASE("bracket set construction enforces contiguity") {
    CHECK_THROWS_AS(BracketSet({{0.0, 100.0}, {150.0, 200.0}}), std::invalid_argument);
    CHECK_THROWS_AS(BracketSet({{100.0, 0.0}}), std::invalid_argument);
    CHECK_THROWS_AS(BracketSet(std::vector<Bracket>{}), std::invalid_argument);
    CHECK_NOTHROW(BracketSet::from_walls({0.0, 100.0, 1000.0}));
}
