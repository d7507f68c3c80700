#pragma once

#include <string>
#include <vector>

#include "universalis/game.hpp"

namespace universalis {

/// Risk subtracted from the universalized-silent row of UPD. The default
/// regime requires 0 <= r <= X - Y ("maximal risk"); `unrestricted` lifts
/// the bound so negative-risk cases can be explored.
struct RiskLevel {
    Rational r;
    bool unrestricted = false;
};

/// One application maps an n-strategy game to a 2n-strategy game. Labels are
/// [s + "U" for every base s, then s + "~U"], base order preserved. A
/// universalizer receives u(s, s) regardless of the opponent; a
/// non-universalizer playing s receives u(s, t) where t is the opponent's
/// base strategy, ignoring the opponent's universalization flag. Depth k
/// applies the map k times, each application treating the previous output as
/// the base game.
inline SymmetricGame universalize(const SymmetricGame& game, unsigned depth) {
    if (depth == 0) throw ValidationError("universalize: depth must be >= 1");
    SymmetricGame g = game;
    for (unsigned step = 0; step < depth; ++step) {
        const std::size_t n = g.size();
        std::vector<std::string> labels;
        labels.reserve(2 * n);
        for (const auto& s : g.labels()) labels.push_back(s + "U");
        for (const auto& s : g.labels()) labels.push_back(s + "~U");
        std::vector<std::vector<Rational>> m(2 * n, std::vector<Rational>(2 * n));
        for (std::size_t s = 0; s < n; ++s) {
            for (std::size_t col = 0; col < 2 * n; ++col) {
                const std::size_t t = col % n;  // opponent's base strategy
                m[s][col] = g.at(s, s);
                m[n + s][col] = g.at(s, t);
            }
        }
        g = SymmetricGame(std::move(labels), std::move(m));
    }
    return g;
}

/// UPD with every entry of row SU replaced by X - r. The column-player
/// effect follows from the transpose convention. r = 0 reproduces UPD
/// exactly.
inline SymmetricGame add_risk(const PdParams& p, const RiskLevel& risk) {
    if (!risk.unrestricted) {
        if (risk.r < Rational(0))
            throw ValidationError("RiskLevel: r >= 0 violated (pass unrestricted to allow)");
        if (risk.r > p.X - p.Y)
            throw ValidationError("RiskLevel: r <= X - Y violated (maximal risk bound)");
    }
    SymmetricGame upd = universalize(make_pd(p), 1);
    std::vector<std::vector<Rational>> m = upd.matrix();
    for (auto& entry : m[0]) entry = p.X - risk.r;
    return SymmetricGame(upd.labels(), std::move(m));
}

}  // namespace universalis
