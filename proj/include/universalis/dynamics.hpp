#pragma once

#include <cmath>
#include <cstddef>
#include <vector>

#include "universalis/equilibria.hpp"
#include "universalis/game.hpp"

namespace universalis {

/// Discrete replicator trajectory. Dynamics run in binary floating point
/// (exact rationals blow up exponentially under the map); exact-arithmetic
/// certification of rest points is `is_rest_point`.
struct Trajectory {
    std::vector<std::vector<double>> states;  // recorded states, initial first
    std::size_t step_count = 0;
    std::size_t record_every = 1;
    double payoff_shift = 0.0;
};

namespace detail {

inline double positivity_shift(const SymmetricGame& g) {
    double lowest = 0.0;
    for (std::size_t i = 0; i < g.size(); ++i)
        for (std::size_t j = 0; j < g.size(); ++j)
            lowest = std::min(lowest, g.at(i, j).to_double());
    // c = 1 + max(0, -min entry): fitnesses strictly positive, equilibria
    // unchanged by the common shift.
    return 1.0 + std::max(0.0, -lowest);
}

inline void check_simplex(const SymmetricGame& g, const std::vector<double>& mix) {
    if (mix.size() != g.size()) throw ValidationError("replicator: dimension mismatch");
    double sum = 0.0;
    for (double p : mix) {
        if (p < 0.0) throw ValidationError("replicator: negative probability");
        sum += p;
    }
    if (std::abs(sum - 1.0) > 1e-9) throw ValidationError("replicator: probabilities must sum to 1");
}

}  // namespace detail

/// One step of the discrete replicator map with the positivity shift in
/// place: mix'_i = mix_i * f_i / fbar, renormalized.
inline std::vector<double> replicator_step(const SymmetricGame& g, const std::vector<double>& mix) {
    detail::check_simplex(g, mix);
    const std::size_t n = g.size();
    const double shift = detail::positivity_shift(g);
    std::vector<double> fitness(n, 0.0);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            fitness[i] += (g.at(i, j).to_double() + shift) * mix[j];
    double average = 0.0;
    for (std::size_t i = 0; i < n; ++i) average += mix[i] * fitness[i];
    std::vector<double> next(n);
    double total = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        next[i] = mix[i] * fitness[i] / average;
        total += next[i];
    }
    for (double& p : next) p /= total;
    return next;
}

/// Iterates the replicator map, recording the initial state and every
/// record_every-th state after it. Deterministic for a given input.
inline Trajectory simulate(const SymmetricGame& g, const std::vector<double>& initial,
                           std::size_t steps, std::size_t record_every = 1) {
    detail::check_simplex(g, initial);
    if (record_every == 0) record_every = 1;
    Trajectory traj;
    traj.step_count = steps;
    traj.record_every = record_every;
    traj.payoff_shift = detail::positivity_shift(g);
    traj.states.push_back(initial);
    std::vector<double> state = initial;
    for (std::size_t s = 1; s <= steps; ++s) {
        state = replicator_step(g, state);
        if (s % record_every == 0) traj.states.push_back(state);
    }
    return traj;
}

/// Exact rest-point certificate: the pure payoffs are constant across the
/// support of the mix.
inline bool is_rest_point(const SymmetricGame& g, const MixedStrategy& mix) {
    const auto payoffs = pure_payoffs_vs(g, mix);
    const auto support = mix.support();
    for (std::size_t i : support)
        if (payoffs[i] != payoffs[support.front()]) return false;
    return true;
}

}  // namespace universalis
