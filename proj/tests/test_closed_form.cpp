#include <doctest.h>

#include <random>

#include "universalis/closed_form.hpp"
#include "universalis/equilibria.hpp"

using namespace universalis;

namespace {
Rational R(long n, long d = 1) { return Rational(n, d); }
PdParams canonical() { return PdParams(R(0), R(1), R(2), R(3)); }
}  // namespace

TEST_CASE("closed_form_upd on the canonical parameters") {
    const auto cf = closed_form_upd(canonical());
    CHECK(cf.q1 == R(1, 2));
    CHECK(cf.q4 == R(1, 2));
    CHECK(cf.ev == R(2));
}

TEST_CASE("Romeo-Juliet minutes: near-certain silence") {
    // X = -1, W = 0, Y = -11,500,000 (thirty years in the scenario's minutes).
    const PdParams p(R(-20000000), R(-11500000), R(-1), R(0));
    const auto cf = closed_form_upd(p);
    CHECK(cf.q1 == R(11499999, 11500000));
    CHECK(cf.q4 == R(1, 11500000));
    CHECK(cf.ev == R(-1));
    CHECK(obligation_strength(p) == R(11499999, 11500000));
}

TEST_CASE("vanishing defection as the temptation gap closes") {
    const auto cf = closed_form_upd(PdParams(R(0), R(1), R(299, 100), R(3)));
    CHECK(cf.q4 == R(1, 200));
}

TEST_CASE("closed_form_updr interior and boundary") {
    const auto mid = closed_form_updr(canonical(), {R(1, 2)});
    CHECK(mid.q1 == R(1, 4));
    CHECK(mid.q4 == R(3, 4));
    CHECK(mid.ev == R(3, 2));

    const auto zero = closed_form_updr(canonical(), {R(0)});
    const auto upd = closed_form_upd(canonical());
    CHECK(zero.q1 == upd.q1);
    CHECK(zero.q4 == upd.q4);
    CHECK(zero.ev == upd.ev);

    const auto maximal = closed_form_updr(canonical(), {R(1)});
    CHECK(maximal.q1 == R(0));
    CHECK(maximal.q4 == R(1));
    CHECK(maximal.ev == R(1));  // Y

    CHECK_THROWS_AS(closed_form_updr(canonical(), {R(2)}), ValidationError);
    CHECK_THROWS_AS(closed_form_updr(canonical(), {R(-1, 2)}), ValidationError);
}

TEST_CASE("ev_quadratic examples") {
    CHECK(ev_quadratic(canonical(), {R(0)}, R(1, 2)) == R(2));
    // -1/2 + 3/8 + 9/4 - 27/16 + 2 - 3/2 + 9/16 = 3/2
    CHECK(ev_quadratic(canonical(), {R(1, 2)}, R(3, 4)) == R(3, 2));
    CHECK(ev_quadratic(canonical(), {R(0)}, R(0)) == R(2));
}

TEST_CASE("obligation_strength examples") {
    CHECK(obligation_strength(canonical()) == R(1, 2));
    CHECK(obligation_strength(PdParams(R(0), R(1), R(2), R(1000001))) == R(1, 1000000));
}

TEST_CASE("closed-form invariants over random admissible parameters") {
    std::mt19937 rng(23);
    std::uniform_int_distribution<long> pick(-20, 20);
    int done = 0;
    while (done < 60) {
        long v[4] = {pick(rng), pick(rng), pick(rng), pick(rng)};
        std::sort(v, v + 4);
        if (v[0] == v[1] || v[1] == v[2] || v[2] == v[3]) continue;
        const PdParams p(R(v[0]), R(v[1]), R(v[2]), R(v[3]));
        const Rational span = p.X - p.Y;
        for (long k = 0; k <= 4; ++k) {
            const RiskLevel risk{R(k) * span / R(4)};
            const auto cf = closed_form_updr(p, risk);
            CHECK(cf.q1 + cf.q4 == R(1));
            CHECK(cf.ev == p.X - risk.r);
            // Quadratic identity at the equilibrium q4.
            CHECK(ev_quadratic(p, risk, cf.q4) == p.X - risk.r);
        }
        // Slope of q1 in r is exactly -1/(W-Y).
        const auto a = closed_form_updr(p, {R(0)});
        const auto b = closed_form_updr(p, {span / R(2)});
        CHECK((b.q1 - a.q1) / (span / R(2)) == R(-1) / (p.W - p.Y));
        ++done;
    }
}

TEST_CASE("q1 is strictly increasing in X for fixed W, Y") {
    const Rational w = R(10), y = R(0);
    Rational prev = R(-1);
    for (long x = 1; x < 10; ++x) {
        const Rational q1 = obligation_strength(PdParams(R(-1), y, R(x), w));
        CHECK(q1 > prev);
        prev = q1;
    }
}

TEST_CASE("Z never appears in closed forms") {
    for (long z : {-15, -8, -3}) {
        const PdParams p(R(z), R(-1), R(4), R(9));
        const auto cf = closed_form_upd(p);
        const auto ref = closed_form_upd(PdParams(R(-2), R(-1), R(4), R(9)));
        CHECK(cf.q1 == ref.q1);
        CHECK(cf.q4 == ref.q4);
        CHECK(cf.ev == ref.ev);
    }
}

TEST_CASE("closed forms agree exactly with the support-enumeration solver") {
    std::mt19937 rng(29);
    std::uniform_int_distribution<long> pick(-12, 12);
    int done = 0;
    while (done < 15) {
        long v[4] = {pick(rng), pick(rng), pick(rng), pick(rng)};
        std::sort(v, v + 4);
        if (v[0] == v[1] || v[1] == v[2] || v[2] == v[3]) continue;
        const PdParams p(R(v[0]), R(v[1]), R(v[2]), R(v[3]));
        for (long k = 0; k <= 2; ++k) {
            const RiskLevel risk{R(k) * (p.X - p.Y) / R(3)};
            const auto cf = closed_form_updr(p, risk);
            const auto findings = symmetric_equilibria(add_risk(p, risk));
            REQUIRE(findings.size() == 1);
            CHECK(findings[0].strategy ==
                  MixedStrategy({cf.q1, R(0), R(0), cf.q4}));
            CHECK(findings[0].payoff == cf.ev);
        }
        ++done;
    }
}
