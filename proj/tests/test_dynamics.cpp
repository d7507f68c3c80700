#include <doctest.h>

#include <cmath>

#include "universalis/dynamics.hpp"
#include "universalis/transforms.hpp"

using namespace universalis;

namespace {
Rational R(long n, long d = 1) { return Rational(n, d); }
PdParams canonical() { return PdParams(R(0), R(1), R(2), R(3)); }
}  // namespace

TEST_CASE("the UPD mixed equilibrium is a fixed point of the map") {
    const auto upd = universalize(make_pd(canonical()), 1);
    const std::vector<double> eq{0.5, 0.0, 0.0, 0.5};
    const auto next = replicator_step(upd, eq);
    for (std::size_t i = 0; i < 4; ++i) CHECK(next[i] == doctest::Approx(eq[i]).epsilon(1e-14));
}

TEST_CASE("dominant confession grows from an even split") {
    const auto pd = make_pd(canonical());
    const auto next = replicator_step(pd, {0.5, 0.5});
    CHECK(next[1] > 0.5);
}

TEST_CASE("vertices are rest points of the map") {
    const auto upd = universalize(make_pd(canonical()), 1);
    for (std::size_t i = 0; i < 4; ++i) {
        std::vector<double> pure(4, 0.0);
        pure[i] = 1.0;
        CHECK(replicator_step(upd, pure) == pure);
    }
}

TEST_CASE("simulate with zero steps returns only the initial state") {
    const auto traj = simulate(make_pd(canonical()), {0.5, 0.5}, 0);
    REQUIRE(traj.states.size() == 1);
    CHECK(traj.states[0] == std::vector<double>{0.5, 0.5});
}

TEST_CASE("PD from uniform converges to confession") {
    const auto traj = simulate(make_pd(canonical()), {0.5, 0.5}, 10000, 1000);
    CHECK(traj.states.back()[1] > 0.999);
}

TEST_CASE("starting at a rest point records a constant trajectory") {
    const auto upd = universalize(make_pd(canonical()), 1);
    const std::vector<double> eq{0.5, 0.0, 0.0, 0.5};
    const auto traj = simulate(upd, eq, 200, 10);
    for (const auto& state : traj.states)
        for (std::size_t i = 0; i < 4; ++i)
            CHECK(state[i] == doctest::Approx(eq[i]).epsilon(1e-12));
}

TEST_CASE("trajectories are bit-deterministic") {
    const auto upd = universalize(make_pd(canonical()), 1);
    const std::vector<double> start{0.3, 0.2, 0.1, 0.4};
    const auto a = simulate(upd, start, 500);
    const auto b = simulate(upd, start, 500);
    CHECK(a.states == b.states);
}

TEST_CASE("coordinates starting at exactly zero stay zero") {
    const auto upd = universalize(make_pd(canonical()), 1);
    const auto traj = simulate(upd, {0.7, 0.0, 0.0, 0.3}, 300, 7);
    for (const auto& state : traj.states) {
        CHECK(state[1] == 0.0);
        CHECK(state[2] == 0.0);
    }
}

TEST_CASE("states stay on the simplex") {
    const auto game = add_risk(canonical(), {R(1, 3)});
    const auto traj = simulate(game, {0.25, 0.25, 0.25, 0.25}, 2000, 50);
    for (const auto& state : traj.states) {
        double sum = 0.0;
        for (double p : state) {
            CHECK(p >= 0.0);
            sum += p;
        }
        CHECK(std::abs(sum - 1.0) < 1e-12);
    }
}

TEST_CASE("every solver point finding is an exact rest point") {
    for (const Rational r : {R(0), R(1, 2), R(1)}) {
        const auto game = add_risk(canonical(), {r});
        for (const auto& f : symmetric_equilibria(game))
            CHECK(is_rest_point(game, f.strategy));
    }
}

TEST_CASE("is_rest_point examples") {
    const auto upd = universalize(make_pd(canonical()), 1);
    CHECK(is_rest_point(upd, MixedStrategy({R(1, 2), R(0), R(0), R(1, 2)})));
    CHECK(!is_rest_point(upd, MixedStrategy({R(1, 4), R(1, 4), R(1, 4), R(1, 4)})));
    for (std::size_t i = 0; i < 4; ++i) CHECK(is_rest_point(upd, MixedStrategy::pure(i, 4)));
}
