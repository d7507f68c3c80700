#pragma once

#include <cstddef>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include "universalis/rational.hpp"

namespace universalis {

/// Raised when game parameters or strategy vectors violate a documented
/// invariant. The message names the violated condition.
class ValidationError : public std::runtime_error {
public:
    explicit ValidationError(const std::string& what) : std::runtime_error(what) {}
};

/// The four prisoner's dilemma payoffs as utilities, ordered Z < Y < X < W:
/// Z sucker, Y mutual confession, X mutual silence, W temptation.
struct PdParams {
    Rational Z, Y, X, W;

    PdParams(Rational z, Rational y, Rational x, Rational w)
        : Z(std::move(z)), Y(std::move(y)), X(std::move(x)), W(std::move(w)) {
        if (!(Z < Y)) throw ValidationError("PdParams: Z < Y violated");
        if (!(Y < X)) throw ValidationError("PdParams: Y < X violated");
        if (!(X < W)) throw ValidationError("PdParams: X < W violated");
    }
};

/// Symmetric normal-form game stored as the row player's n x n payoff
/// matrix. The column player's payoff for profile (i, j) is u(j, i); the
/// transpose is a convention, not stored.
class SymmetricGame {
public:
    SymmetricGame(std::vector<std::string> labels,
                  std::vector<std::vector<Rational>> payoff)
        : labels_(std::move(labels)), payoff_(std::move(payoff)) {
        const std::size_t n = labels_.size();
        if (n == 0) throw ValidationError("SymmetricGame: at least one strategy required");
        if (payoff_.size() != n) throw ValidationError("SymmetricGame: matrix must be square");
        for (const auto& row : payoff_)
            if (row.size() != n) throw ValidationError("SymmetricGame: matrix must be square");
        std::set<std::string> seen(labels_.begin(), labels_.end());
        if (seen.size() != n) throw ValidationError("SymmetricGame: labels must be unique");
    }

    std::size_t size() const { return labels_.size(); }
    const std::vector<std::string>& labels() const { return labels_; }
    const std::vector<std::vector<Rational>>& matrix() const { return payoff_; }

    /// Row player's payoff when row plays i and column plays j.
    const Rational& at(std::size_t i, std::size_t j) const { return payoff_[i][j]; }

private:
    std::vector<std::string> labels_;
    std::vector<std::vector<Rational>> payoff_;
};

/// Exact probability vector over a game's strategies.
class MixedStrategy {
public:
    explicit MixedStrategy(std::vector<Rational> probs) : probs_(std::move(probs)) {
        Rational sum;
        for (const auto& p : probs_) {
            if (p < Rational(0)) throw ValidationError("MixedStrategy: negative probability");
            sum += p;
        }
        if (sum != Rational(1)) throw ValidationError("MixedStrategy: probabilities must sum to 1");
    }

    static MixedStrategy pure(std::size_t i, std::size_t n) {
        std::vector<Rational> p(n, Rational(0));
        p.at(i) = Rational(1);
        return MixedStrategy(std::move(p));
    }

    std::size_t size() const { return probs_.size(); }
    const Rational& operator[](std::size_t i) const { return probs_[i]; }
    const std::vector<Rational>& probs() const { return probs_; }

    /// Indices played with strictly positive probability.
    std::vector<std::size_t> support() const {
        std::vector<std::size_t> s;
        for (std::size_t i = 0; i < probs_.size(); ++i)
            if (probs_[i] > Rational(0)) s.push_back(i);
        return s;
    }

    friend bool operator==(const MixedStrategy& a, const MixedStrategy& b) {
        return a.probs_ == b.probs_;
    }

private:
    std::vector<Rational> probs_;
};

/// The 2x2 prisoner's dilemma: labels [S, C], rows [[X, Z], [W, Y]].
inline SymmetricGame make_pd(const PdParams& p) {
    return SymmetricGame({"S", "C"}, {{p.X, p.Z}, {p.W, p.Y}});
}

/// Converts jail durations (less is better) to PD utilities by negation:
/// X = -mutual_silence, Z = -sucker, W = -temptation, Y = -mutual_confession.
inline PdParams pd_from_sentences(const Rational& mutual_silence, const Rational& sucker,
                                  const Rational& temptation, const Rational& mutual_confession) {
    for (const Rational* d : {&mutual_silence, &sucker, &temptation, &mutual_confession})
        if (*d < Rational(0)) throw ValidationError("pd_from_sentences: durations must be >= 0");
    return PdParams(-sucker, -mutual_confession, -mutual_silence, -temptation);
}

/// Pure payoff of each row strategy against an opponent mix:
/// entry i = sum_j u(i,j) * opponent_mix[j].
inline std::vector<Rational> pure_payoffs_vs(const SymmetricGame& g, const MixedStrategy& mix) {
    if (mix.size() != g.size()) throw ValidationError("pure_payoffs_vs: dimension mismatch");
    std::vector<Rational> out(g.size());
    for (std::size_t i = 0; i < g.size(); ++i)
        for (std::size_t j = 0; j < g.size(); ++j)
            out[i] += g.at(i, j) * mix[j];
    return out;
}

/// Bilinear payoff to the row player: sum_ij row[i] * u(i,j) * col[j].
inline Rational expected_payoff(const SymmetricGame& g, const MixedStrategy& row,
                                const MixedStrategy& col) {
    if (row.size() != g.size() || col.size() != g.size())
        throw ValidationError("expected_payoff: dimension mismatch");
    Rational total;
    const auto pure = pure_payoffs_vs(g, col);
    for (std::size_t i = 0; i < g.size(); ++i) total += row[i] * pure[i];
    return total;
}

}  // namespace universalis
