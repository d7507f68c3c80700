#pragma once

#include "universalis/game.hpp"
#include "universalis/transforms.hpp"

namespace universalis {

/// Closed-form equilibrium rates for the universalized game: q1 the rate of
/// silence (SU), q4 the rate of confession (C~U), ev the equilibrium payoff.
/// q1 + q4 = 1 always. Note Z appears nowhere below: the rate of confession
/// is independent of the sucker payoff, however catastrophic.
struct ClosedFormResult {
    Rational q1, q4, ev;
};

/// UPD: q1 = (X-Y)/(W-Y), q4 = (W-X)/(W-Y), ev = X.
inline ClosedFormResult closed_form_upd(const PdParams& p) {
    const Rational denom = p.W - p.Y;
    return {(p.X - p.Y) / denom, (p.W - p.X) / denom, p.X};
}

/// UPDR with 0 <= r <= X-Y: q1 = (X-Y-r)/(W-Y), q4 = (W-X+r)/(W-Y),
/// ev = X - r. At r = X-Y this returns the degenerate limit q1 = 0, q4 = 1
/// even though the solver reports a different equilibrium structure there;
/// the boundary is a documented regime switch.
inline ClosedFormResult closed_form_updr(const PdParams& p, const RiskLevel& risk) {
    if (risk.r < Rational(0) || risk.r > p.X - p.Y)
        throw ValidationError("closed_form_updr: r outside [0, X - Y]");
    const Rational denom = p.W - p.Y;
    return {(p.X - p.Y - risk.r) / denom, (p.W - p.X + risk.r) / denom, p.X - risk.r};
}

/// The expected value of SU/C~U as a quadratic in q4:
/// ev = -r + q4*r + q4*W - q4^2*W + X - q4*X + q4^2*Y. With r = 0 this is
/// the risk-free form; at the equilibrium q4 it collapses to X - r.
inline Rational ev_quadratic(const PdParams& p, const RiskLevel& risk, const Rational& q4) {
    const Rational q4sq = q4 * q4;
    return -risk.r + q4 * risk.r + q4 * p.W - q4sq * p.W + p.X - q4 * p.X + q4sq * p.Y;
}

/// The equilibrium rate of silence read as the strength of the moral
/// obligation to cooperate: (X-Y)/(W-Y).
inline Rational obligation_strength(const PdParams& p) {
    return closed_form_upd(p).q1;
}

}  // namespace universalis
