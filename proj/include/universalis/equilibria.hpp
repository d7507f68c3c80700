#pragma once

#include <algorithm>
#include <cstddef>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "universalis/game.hpp"
#include "universalis/linear_solver.hpp"

namespace universalis {

/// Definition-level best-response check, usable as an independent oracle:
/// a mix is a symmetric equilibrium iff its pure payoffs are equal on its
/// support and no off-support pure strategy earns strictly more. Comparisons
/// are exact; an off-support payoff exactly equal to the support payoff is
/// accepted.
struct Certificate {
    std::vector<Rational> pure_payoffs;
    Rational support_payoff;
    bool valid = false;
};

inline Certificate verify_equilibrium(const SymmetricGame& g, const MixedStrategy& mix) {
    Certificate cert;
    cert.pure_payoffs = pure_payoffs_vs(g, mix);
    const auto support = mix.support();
    cert.support_payoff = cert.pure_payoffs[support.front()];
    cert.valid = true;
    for (std::size_t i : support)
        if (cert.pure_payoffs[i] != cert.support_payoff) cert.valid = false;
    for (std::size_t k = 0; k < g.size(); ++k)
        if (cert.pure_payoffs[k] > cert.support_payoff) cert.valid = false;
    return cert;
}

/// A degenerate (rank-deficient) solution set: the segment or polytope of
/// equilibria over one support, represented by its extreme points plus the
/// centroid rather than symbolically.
struct EquilibriumFamily {
    std::vector<std::size_t> free_vars;   // strategy indices left free by the solve
    std::vector<MixedStrategy> vertices;  // extreme points of the solution set
    std::vector<Rational> vertex_payoffs;
};

struct EquilibriumFinding {
    enum class Kind { point, family };

    Kind kind;
    std::vector<std::size_t> support;
    MixedStrategy strategy;  // the equilibrium point, or the family centroid
    Rational payoff;         // equilibrium payoff at `strategy`
    std::optional<EquilibriumFamily> family;

    /// True when `mix` is this finding: equal to the point, or on the family
    /// (supported within the family's support and indifferent across all of
    /// it).
    bool contains(const SymmetricGame& g, const MixedStrategy& mix) const {
        if (kind == Kind::point) return mix == strategy;
        for (std::size_t i = 0; i < mix.size(); ++i) {
            if (mix[i] == Rational(0)) continue;
            if (!std::binary_search(support.begin(), support.end(), i)) return false;
        }
        const auto payoffs = pure_payoffs_vs(g, mix);
        for (std::size_t i : support)
            if (payoffs[i] != payoffs[support.front()]) return false;
        for (std::size_t k = 0; k < mix.size(); ++k)
            if (payoffs[k] > payoffs[support.front()]) return false;
        return true;
    }
};

/// One line of the support worksheet: what happened for one candidate
/// support.
struct SupportReportRow {
    enum class Status { solved, infeasible, degenerate };

    std::vector<std::size_t> support;
    Status status;
    std::optional<EquilibriumFinding> finding;
    std::string failure_reason;
};

namespace detail {

/// All nonempty supports of an n-strategy game in lexicographic order of the
/// sorted index sequence: {0}, {0,1}, {0,1,2}, ..., {n-1}.
inline std::vector<std::vector<std::size_t>> enumerate_supports(std::size_t n) {
    std::vector<std::vector<std::size_t>> out;
    for (std::size_t mask = 1; mask < (std::size_t{1} << n); ++mask) {
        std::vector<std::size_t> s;
        for (std::size_t i = 0; i < n; ++i)
            if (mask & (std::size_t{1} << i)) s.push_back(i);
        out.push_back(std::move(s));
    }
    std::sort(out.begin(), out.end());
    return out;
}

/// Solution of one indifference system: unknowns are the probabilities on
/// `support` plus the common payoff v; equations make every strategy in
/// `eq_rows` earn exactly v against the unknown mix, plus the probabilities
/// summing to 1. `coef(i, j)` is the payoff of equation-strategy i against
/// support-strategy j.
struct SupportSolve {
    enum class Status { point, family, infeasible };
    enum class Fail { none, system, simplex_empty, deviation_empty };

    Status status = Status::infeasible;
    Fail fail = Fail::none;
    std::vector<Rational> probs;  // full length n; point, or family centroid
    Rational value;               // v at probs
    std::vector<std::size_t> free_vars;
    std::vector<std::vector<Rational>> vertices;  // full-length prob vectors
    std::vector<Rational> vertex_values;
    bool interior = false;  // strictly positive on support
};

inline SupportSolve solve_indifference(
    std::size_t n, const std::vector<std::size_t>& support,
    const std::vector<std::size_t>& eq_rows,
    const std::function<Rational(std::size_t, std::size_t)>& coef) {
    const std::size_t m = support.size();
    std::vector<std::vector<Rational>> a;
    std::vector<Rational> b;
    for (std::size_t i : eq_rows) {
        std::vector<Rational> row(m + 1);
        for (std::size_t jj = 0; jj < m; ++jj) row[jj] = coef(i, support[jj]);
        row[m] = Rational(-1);
        a.push_back(std::move(row));
        b.push_back(Rational(0));
    }
    std::vector<Rational> sum_row(m + 1, Rational(0));
    for (std::size_t jj = 0; jj < m; ++jj) sum_row[jj] = Rational(1);
    a.push_back(std::move(sum_row));
    b.push_back(Rational(1));

    SupportSolve out;
    auto expand = [&](const std::vector<Rational>& packed) {
        std::vector<Rational> full(n, Rational(0));
        for (std::size_t jj = 0; jj < m; ++jj) full[support[jj]] = packed[jj];
        return full;
    };

    const LinearSolution sol = solve_exact(a, b);
    if (sol.status == LinearSolution::Status::infeasible) {
        out.fail = SupportSolve::Fail::system;
        return out;
    }

    if (sol.status == LinearSolution::Status::unique) {
        out.status = SupportSolve::Status::point;
        out.probs = expand(sol.particular);
        out.value = sol.particular[m];
        out.interior = true;
        for (std::size_t jj = 0; jj < m; ++jj)
            if (!(sol.particular[jj] > Rational(0))) out.interior = false;
        return out;
    }

    // Rank-deficient. No solution-set direction is pure v (every equation
    // couples v to the probabilities), so the q-space projection keeps the
    // full dimension d. The equilibria on this support form the polytope
    // { q >= 0, indifference } clipped by the off-support half-spaces
    // sum_j coef(k, j) q_j <= v; its vertices have at least d active
    // constraints among the bounds.
    const std::size_t d = sol.free_cols.size();
    for (std::size_t f : sol.free_cols)
        if (f < m) out.free_vars.push_back(support[f]);

    // Candidate active constraints: q_j = 0 for each support slot, then the
    // deviation equalities for each strategy outside eq_rows.
    std::vector<std::vector<Rational>> bounds;  // row . x, = 0 active, q-rows first
    const std::size_t zero_count = m;
    for (std::size_t jj = 0; jj < m; ++jj) {
        std::vector<Rational> row(m + 1, Rational(0));
        row[jj] = Rational(1);
        bounds.push_back(std::move(row));
    }
    for (std::size_t k = 0; k < n; ++k) {
        if (std::find(eq_rows.begin(), eq_rows.end(), k) != eq_rows.end()) continue;
        std::vector<Rational> row(m + 1);
        for (std::size_t jj = 0; jj < m; ++jj) row[jj] = coef(k, support[jj]);
        row[m] = Rational(-1);
        bounds.push_back(std::move(row));
    }

    auto feasible = [&](const std::vector<Rational>& x, bool with_deviation) {
        for (std::size_t jj = 0; jj < m; ++jj)
            if (x[jj] < Rational(0)) return false;
        if (!with_deviation) return true;
        for (std::size_t c = zero_count; c < bounds.size(); ++c) {
            Rational lhs;
            for (std::size_t jj = 0; jj <= m; ++jj) lhs += bounds[c][jj] * x[jj];
            if (lhs > Rational(0)) return false;
        }
        return true;
    };

    // with_deviation = true gives the equilibrium polytope; false is used
    // only to tell a positivity failure apart from a deviation failure.
    auto enumerate_vertices = [&](bool with_deviation) {
        std::vector<std::pair<std::vector<Rational>, Rational>> found;  // packed q, v
        const std::size_t limit = with_deviation ? bounds.size() : zero_count;
        std::vector<std::size_t> pick(d);
        std::function<void(std::size_t, std::size_t)> rec = [&](std::size_t start,
                                                                std::size_t chosen) {
            if (chosen == d) {
                auto a2 = a;
                auto b2 = b;
                for (std::size_t c : pick) {
                    a2.push_back(bounds[c]);
                    b2.push_back(Rational(0));
                }
                const LinearSolution v = solve_exact(a2, b2);
                if (v.status == LinearSolution::Status::unique &&
                    feasible(v.particular, with_deviation)) {
                    std::vector<Rational> packed(v.particular.begin(), v.particular.begin() + m);
                    bool dup = false;
                    for (const auto& [q, val] : found) dup = dup || q == packed;
                    if (!dup) found.emplace_back(std::move(packed), v.particular[m]);
                }
                return;
            }
            for (std::size_t c = start; c < limit; ++c) {
                pick[chosen] = c;
                rec(c + 1, chosen + 1);
            }
        };
        rec(0, 0);
        std::sort(found.begin(), found.end());
        return found;
    };

    auto clipped = enumerate_vertices(true);
    if (clipped.empty()) {
        // Distinguish the simplex missing the affine set from the deviation
        // half-spaces cutting it away entirely; in the latter case keep the
        // unclipped representatives so the caller can name a deviator.
        auto unclipped = enumerate_vertices(false);
        if (unclipped.empty()) {
            out.fail = SupportSolve::Fail::simplex_empty;
            return out;
        }
        out.fail = SupportSolve::Fail::deviation_empty;
        const Rational total(static_cast<long>(unclipped.size()));
        out.probs.assign(n, Rational(0));
        out.value = Rational(0);
        for (const auto& [packed, value] : unclipped) {
            out.vertices.push_back(expand(packed));
            out.vertex_values.push_back(value);
            for (std::size_t i = 0; i < n; ++i) out.probs[i] += out.vertices.back()[i] / total;
            out.value += value / total;
        }
        return out;
    }

    if (clipped.size() == 1) {
        out.status = SupportSolve::Status::point;
        out.probs = expand(clipped[0].first);
        out.value = clipped[0].second;
        out.interior = true;
        for (std::size_t jj = 0; jj < m; ++jj)
            if (!(clipped[0].first[jj] > Rational(0))) out.interior = false;
        return out;
    }

    out.status = SupportSolve::Status::family;
    const Rational count(static_cast<long>(clipped.size()));
    out.probs.assign(n, Rational(0));
    out.value = Rational(0);
    for (const auto& [packed, value] : clipped) {
        out.vertices.push_back(expand(packed));
        out.vertex_values.push_back(value);
        for (std::size_t i = 0; i < n; ++i) out.probs[i] += out.vertices.back()[i] / count;
        out.value += value / count;
    }
    out.interior = true;
    for (std::size_t i : support)
        if (!(out.probs[i] > Rational(0))) out.interior = false;
    return out;
}

}  // namespace detail

/// Support enumeration over all 2^n - 1 candidate supports, one worksheet row
/// per support: solve the equal-payoff system exactly, then require strict
/// positivity on the support and no profitable off-support deviation.
/// Rank-deficient solvable systems become `degenerate` rows whose finding is
/// a family (extreme points + centroid), each representative certified
/// individually.
inline std::vector<SupportReportRow> support_report(const SymmetricGame& g) {
    const std::size_t n = g.size();
    std::vector<SupportReportRow> report;

    for (const auto& support : detail::enumerate_supports(n)) {
        SupportReportRow row;
        row.support = support;

        const auto solve = detail::solve_indifference(
            n, support, support,
            [&](std::size_t i, std::size_t j) { return g.at(i, j); });

        // Names the best-response violation at a representative, for the
        // worksheet's failure column.
        auto deviation_failure = [&](const std::vector<Rational>& probs,
                                     const Rational& value) -> std::optional<std::string> {
            const auto payoffs = pure_payoffs_vs(g, MixedStrategy(probs));
            for (std::size_t k = 0; k < n; ++k)
                if (payoffs[k] > value)
                    return "outside-deviation: " + g.labels()[k] + " earns more than the support payoff";
            return std::nullopt;
        };

        if (solve.status == detail::SupportSolve::Status::infeasible) {
            row.status = SupportReportRow::Status::infeasible;
            switch (solve.fail) {
                case detail::SupportSolve::Fail::system:
                    row.failure_reason = "equal-payoff system has no solution";
                    break;
                case detail::SupportSolve::Fail::simplex_empty:
                    row.failure_reason = "positivity fails: some support probability is not > 0";
                    break;
                case detail::SupportSolve::Fail::deviation_empty: {
                    auto failure = deviation_failure(solve.probs, solve.value);
                    for (std::size_t k = 0; k < solve.vertices.size() && !failure; ++k)
                        failure = deviation_failure(solve.vertices[k], solve.vertex_values[k]);
                    row.failure_reason = failure ? *failure : "outside-deviation cuts away the solution set";
                    break;
                }
                case detail::SupportSolve::Fail::none:
                    row.failure_reason = "equal-payoff system has no solution";
                    break;
            }
            report.push_back(std::move(row));
            continue;
        }
        if (!solve.interior) {
            row.status = SupportReportRow::Status::infeasible;
            row.failure_reason = "positivity fails: some support probability is not > 0";
            report.push_back(std::move(row));
            continue;
        }

        std::optional<std::string> failure = deviation_failure(solve.probs, solve.value);
        if (solve.status == detail::SupportSolve::Status::family && !failure)
            for (std::size_t k = 0; k < solve.vertices.size() && !failure; ++k)
                failure = deviation_failure(solve.vertices[k], solve.vertex_values[k]);
        if (failure) {
            row.status = SupportReportRow::Status::infeasible;
            row.failure_reason = *failure;
            report.push_back(std::move(row));
            continue;
        }

        EquilibriumFinding finding{EquilibriumFinding::Kind::point, support,
                                   MixedStrategy(solve.probs), solve.value, std::nullopt};
        if (solve.status == detail::SupportSolve::Status::family) {
            finding.kind = EquilibriumFinding::Kind::family;
            EquilibriumFamily fam;
            fam.free_vars = solve.free_vars;
            for (const auto& v : solve.vertices) fam.vertices.emplace_back(v);
            fam.vertex_payoffs = solve.vertex_values;
            finding.family = std::move(fam);
            row.status = SupportReportRow::Status::degenerate;
        } else {
            row.status = SupportReportRow::Status::solved;
        }
        row.finding = std::move(finding);
        report.push_back(std::move(row));
    }
    return report;
}

/// All symmetric Nash equilibria by support enumeration, ordered by support
/// (lexicographic). A finite symmetric game always has one, so an empty list
/// can only mean an internal fault and is thrown as such.
inline std::vector<EquilibriumFinding> symmetric_equilibria(const SymmetricGame& g) {
    std::vector<EquilibriumFinding> out;
    for (auto& row : support_report(g))
        if (row.finding) out.push_back(std::move(*row.finding));
    if (out.empty())
        throw std::logic_error("internal fault: no symmetric equilibrium found in a finite symmetric game");
    return out;
}

/// One (row, column) equilibrium of the bimatrix game (A, A^T), possibly
/// asymmetric. Degenerate pairs are flagged and represented by the centroid
/// of their solution set.
struct BimatrixFinding {
    std::vector<std::size_t> row_support, col_support;
    MixedStrategy row_mix, col_mix;
    Rational row_payoff, col_payoff;
    bool degenerate = false;
};

/// Support-pair enumeration over all (2^n - 1)^2 pairs with exact solves and
/// two-sided best-response certification. Every symmetric finding appears as
/// a (sigma, sigma) pair.
inline std::vector<BimatrixFinding> two_sided_equilibria(const SymmetricGame& g) {
    const std::size_t n = g.size();
    const auto supports = detail::enumerate_supports(n);
    std::vector<BimatrixFinding> out;

    for (const auto& rs : supports) {
        for (const auto& cs : supports) {
            // Column mix y makes every row-support strategy indifferent.
            const auto ysol = detail::solve_indifference(
                n, cs, rs, [&](std::size_t i, std::size_t j) { return g.at(i, j); });
            if (ysol.status == detail::SupportSolve::Status::infeasible || !ysol.interior) continue;
            // Row mix x makes every column-support strategy indifferent; the
            // column player's payoff for pure j against x is sum_i u(j,i) x_i.
            const auto xsol = detail::solve_indifference(
                n, rs, cs, [&](std::size_t j, std::size_t i) { return g.at(j, i); });
            if (xsol.status == detail::SupportSolve::Status::infeasible || !xsol.interior) continue;

            const MixedStrategy x(xsol.probs), y(ysol.probs);
            const auto row_payoffs = pure_payoffs_vs(g, y);
            const auto col_payoffs = pure_payoffs_vs(g, x);
            bool ok = true;
            for (std::size_t k = 0; k < n && ok; ++k) {
                if (row_payoffs[k] > ysol.value) ok = false;
                if (col_payoffs[k] > xsol.value) ok = false;
            }
            if (!ok) continue;

            out.push_back(BimatrixFinding{
                rs, cs, x, y, ysol.value, xsol.value,
                ysol.status == detail::SupportSolve::Status::family ||
                    xsol.status == detail::SupportSolve::Status::family});
        }
    }
    return out;
}

}  // namespace universalis
