// universalis: exact analysis of the prisoner's dilemma, its universalized
// variant (UPD), and the risk-augmented variant (UPDR).
//
// Subcommands:
//   analyze    solve one parameterization and cross-check the closed forms
//   sweep      closed risk grid from r = 0 to r = X - Y
//   enumerate  worksheet of all 15 candidate supports
//   dynamics   discrete replicator trajectories as CSV
//
// All machine output serializes rationals exactly as "p/q".

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <cstdlib>
#include <iostream>
#include <optional>
#include <random>
#include <sstream>
#include <thread>
#include <vector>

#include "universalis/closed_form.hpp"
#include "universalis/dynamics.hpp"
#include "universalis/equilibria.hpp"
#include "universalis/transforms.hpp"

using json = nlohmann::ordered_json;
using namespace universalis;

namespace {

constexpr int kExitUsage = 2;
constexpr int kExitValidation = 3;
constexpr int kExitInternal = 4;

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

Rational parse_rational(const std::string& text, const std::string& flag) {
    try {
        return Rational::parse(text);
    } catch (const std::invalid_argument&) {
        throw UsageError("malformed rational for " + flag + ": '" + text + "' (expected p or p/q)");
    }
}

struct CommonArgs {
    std::string z, y, x, w;
    std::string risk;
    std::string format = "table";
    bool allow_any_risk = false;
};

void add_common_flags(CLI::App* cmd, CommonArgs& args, const std::string& default_format) {
    args.format = default_format;
    cmd->add_option("--Z", args.z, "sucker payoff Z (rational p/q)")->required();
    cmd->add_option("--Y", args.y, "mutual-confession payoff Y")->required();
    cmd->add_option("--X", args.x, "mutual-silence payoff X")->required();
    cmd->add_option("--W", args.w, "temptation payoff W")->required();
    cmd->add_option("--risk", args.risk, "risk level r (omit for UPD)");
    cmd->add_option("--format", args.format, "output format")
        ->check(CLI::IsMember({"table", "json", "csv"}));
    cmd->add_flag("--allow-any-risk", args.allow_any_risk,
                  "lift the 0 <= r <= X - Y bound on --risk");
}

struct Scenario {
    PdParams params;
    std::optional<RiskLevel> risk;
    SymmetricGame game;
};

Scenario build_scenario(const CommonArgs& args) {
    PdParams params(parse_rational(args.z, "--Z"), parse_rational(args.y, "--Y"),
                    parse_rational(args.x, "--X"), parse_rational(args.w, "--W"));
    std::optional<RiskLevel> risk;
    if (!args.risk.empty())
        risk = RiskLevel{parse_rational(args.risk, "--risk"), args.allow_any_risk};
    SymmetricGame game = risk ? add_risk(params, *risk) : universalize(make_pd(params), 1);
    return {params, risk, game};
}

std::string support_label(const SymmetricGame& g, const std::vector<std::size_t>& support) {
    std::string out = "{";
    for (std::size_t k = 0; k < support.size(); ++k) {
        if (k) out += ",";
        out += g.labels()[support[k]];
    }
    return out + "}";
}

std::string probs_str(const MixedStrategy& mix) {
    std::string out = "(";
    for (std::size_t i = 0; i < mix.size(); ++i) {
        if (i) out += ", ";
        out += mix[i].str();
    }
    return out + ")";
}

std::size_t thread_budget() {
    if (const char* env = std::getenv("UNIVERSALIS_THREADS")) {
        const long v = std::atol(env);
        if (v > 0) return static_cast<std::size_t>(v);
    }
    const unsigned hw = std::thread::hardware_concurrency();
    return hw == 0 ? 1 : hw;
}

/// Runs fn(i) for i in [0, count) across the thread budget; results land in
/// index order regardless of interleaving.
template <typename T, typename Fn>
std::vector<T> ordered_parallel(std::size_t count, Fn fn) {
    std::vector<std::optional<T>> slots(count);
    const std::size_t workers = std::min(thread_budget(), std::max<std::size_t>(count, 1));
    std::vector<std::thread> pool;
    std::atomic<std::size_t> next{0};
    for (std::size_t w = 0; w < workers; ++w)
        pool.emplace_back([&] {
            for (std::size_t i = next++; i < count; i = next++) slots[i] = fn(i);
        });
    for (auto& t : pool) t.join();
    std::vector<T> out;
    out.reserve(count);
    for (auto& s : slots) out.push_back(std::move(*s));
    return out;
}

// ---- analyze ---------------------------------------------------------------

std::string compute_verdict(const Scenario& sc, const std::optional<ClosedFormResult>& cf,
                            const std::vector<EquilibriumFinding>& findings) {
    if (!cf) return "N/A";
    if (sc.risk && sc.risk->r == sc.params.X - sc.params.Y) return "BOUNDARY";
    if (findings.size() != 1 || findings[0].kind != EquilibriumFinding::Kind::point)
        return "MISMATCH";
    const MixedStrategy expected({cf->q1, Rational(0), Rational(0), cf->q4});
    return (findings[0].strategy == expected && findings[0].payoff == cf->ev) ? "MATCH"
                                                                              : "MISMATCH";
}

std::optional<ClosedFormResult> closed_form_for(const Scenario& sc) {
    if (!sc.risk) return closed_form_upd(sc.params);
    if (sc.risk->r < Rational(0) || sc.risk->r > sc.params.X - sc.params.Y) return std::nullopt;
    return closed_form_updr(sc.params, *sc.risk);
}

json finding_to_json(const SymmetricGame& g, const EquilibriumFinding& f) {
    json j;
    j["support"] = f.support;
    json labels = json::array();
    for (std::size_t i : f.support) labels.push_back(g.labels()[i]);
    j["labels"] = labels;
    j["kind"] = f.kind == EquilibriumFinding::Kind::point ? "point" : "family";
    json probs = json::array();
    for (std::size_t i = 0; i < f.strategy.size(); ++i) probs.push_back(f.strategy[i].str());
    j["probs"] = probs;
    j["payoff"] = f.payoff.str();
    if (f.family) {
        json verts = json::array();
        for (const auto& v : f.family->vertices) {
            json vp = json::array();
            for (std::size_t i = 0; i < v.size(); ++i) vp.push_back(v[i].str());
            verts.push_back(vp);
        }
        j["vertices"] = verts;
    }
    return j;
}

json scenario_header_json(const Scenario& sc) {
    json j;
    j["params"] = {{"Z", sc.params.Z.str()},
                   {"Y", sc.params.Y.str()},
                   {"X", sc.params.X.str()},
                   {"W", sc.params.W.str()}};
    j["risk"] = sc.risk ? json(sc.risk->r.str()) : json(nullptr);
    json game;
    game["labels"] = sc.game.labels();
    json matrix = json::array();
    for (const auto& row : sc.game.matrix()) {
        json r = json::array();
        for (const auto& e : row) r.push_back(e.str());
        matrix.push_back(r);
    }
    game["matrix"] = matrix;
    j["game"] = game;
    return j;
}

void print_matrix(std::ostream& os, const SymmetricGame& g) {
    os << "        ";
    for (const auto& l : g.labels()) os << l << "\t";
    os << "\n";
    for (std::size_t i = 0; i < g.size(); ++i) {
        os << g.labels()[i] << "\t";
        for (std::size_t j = 0; j < g.size(); ++j) os << g.at(i, j).str() << "\t";
        os << "\n";
    }
}

int cmd_analyze(const CommonArgs& args) {
    const Scenario sc = build_scenario(args);
    const auto findings = symmetric_equilibria(sc.game);
    const auto cf = closed_form_for(sc);
    const std::string verdict = compute_verdict(sc, cf, findings);

    if (args.format == "json") {
        json j = scenario_header_json(sc);
        json fs = json::array();
        for (const auto& f : findings) fs.push_back(finding_to_json(sc.game, f));
        j["findings"] = fs;
        j["closed_form"] = cf ? json{{"q1", cf->q1.str()}, {"q4", cf->q4.str()}, {"ev", cf->ev.str()}}
                              : json(nullptr);
        j["verdict"] = verdict;
        std::cout << j.dump(2) << "\n";
        return 0;
    }

    std::cout << (sc.risk ? "UPDR" : "UPD") << " (Z=" << sc.params.Z.str()
              << ", Y=" << sc.params.Y.str() << ", X=" << sc.params.X.str()
              << ", W=" << sc.params.W.str();
    if (sc.risk) std::cout << ", r=" << sc.risk->r.str();
    std::cout << ")\n\n";
    print_matrix(std::cout, sc.game);
    std::cout << "\nfindings (" << findings.size() << "):\n";
    for (const auto& f : findings) {
        std::cout << "  " << support_label(sc.game, f.support) << "  "
                  << (f.kind == EquilibriumFinding::Kind::point ? "point " : "family")
                  << "  " << probs_str(f.strategy) << "  payoff " << f.payoff.str();
        if (f.kind == EquilibriumFinding::Kind::point)
            std::cout << " (~" << f.payoff.to_double() << ")";
        std::cout << "\n";
        if (f.family)
            for (const auto& v : f.family->vertices)
                std::cout << "      vertex " << probs_str(v) << "\n";
    }
    if (cf)
        std::cout << "\nclosed form: q1=" << cf->q1.str() << " q4=" << cf->q4.str()
                  << " ev=" << cf->ev.str() << "\n";
    else
        std::cout << "\nclosed form: not defined for r outside [0, X - Y]\n";
    std::cout << "verdict: " << verdict << "\n";
    return 0;
}

// ---- sweep -----------------------------------------------------------------

struct SweepRecord {
    Rational r, q1, q4, ev;
    std::size_t n_findings = 0;
    bool degenerate = false;
};

int cmd_sweep(const CommonArgs& args, unsigned steps) {
    const Scenario base = build_scenario(args);
    const Rational span = base.params.X - base.params.Y;

    const auto records = ordered_parallel<SweepRecord>(steps, [&](std::size_t k) {
        SweepRecord rec;
        rec.r = Rational(static_cast<long>(k)) * span / Rational(static_cast<long>(steps - 1));
        const auto cf = closed_form_updr(base.params, {rec.r});
        rec.q1 = cf.q1;
        rec.q4 = cf.q4;
        rec.ev = cf.ev;
        const auto findings = symmetric_equilibria(add_risk(base.params, {rec.r}));
        rec.n_findings = findings.size();
        for (const auto& f : findings)
            if (f.kind == EquilibriumFinding::Kind::family) rec.degenerate = true;
        return rec;
    });

    if (args.format == "json") {
        json rows = json::array();
        for (const auto& rec : records)
            rows.push_back({{"r", rec.r.str()},
                            {"q1", rec.q1.str()},
                            {"q4", rec.q4.str()},
                            {"ev", rec.ev.str()},
                            {"n_findings", rec.n_findings},
                            {"degenerate", rec.degenerate}});
        std::cout << rows.dump(2) << "\n";
        return 0;
    }
    if (args.format == "csv") {
        std::cout << "r,q1,q4,ev,n_findings,degenerate\n";
        for (const auto& rec : records)
            std::cout << rec.r.str() << "," << rec.q1.str() << "," << rec.q4.str() << ","
                      << rec.ev.str() << "," << rec.n_findings << ","
                      << (rec.degenerate ? "true" : "false") << "\n";
        return 0;
    }
    std::cout << "r\tq1\tq4\tev\tn_findings\tdegenerate\n";
    for (const auto& rec : records)
        std::cout << rec.r.str() << "\t" << rec.q1.str() << "\t" << rec.q4.str() << "\t"
                  << rec.ev.str() << "\t" << rec.n_findings << "\t"
                  << (rec.degenerate ? "true" : "false") << "\n";
    return 0;
}

// ---- enumerate -------------------------------------------------------------

const char* status_name(SupportReportRow::Status s) {
    switch (s) {
        case SupportReportRow::Status::solved: return "solved";
        case SupportReportRow::Status::degenerate: return "degenerate";
        default: return "infeasible";
    }
}

int cmd_enumerate(const CommonArgs& args) {
    const Scenario sc = build_scenario(args);
    const auto report = support_report(sc.game);

    if (args.format == "json") {
        json j = scenario_header_json(sc);
        json rows = json::array();
        for (const auto& row : report) {
            json r;
            r["support"] = row.support;
            json labels = json::array();
            for (std::size_t i : row.support) labels.push_back(sc.game.labels()[i]);
            r["labels"] = labels;
            r["status"] = status_name(row.status);
            if (row.finding)
                r["finding"] = finding_to_json(sc.game, *row.finding);
            else
                r["failure_reason"] = row.failure_reason;
            rows.push_back(r);
        }
        j["rows"] = rows;
        std::cout << j.dump(2) << "\n";
        return 0;
    }

    std::cout << "support report: " << (sc.risk ? "UPDR" : "UPD") << " (Z=" << sc.params.Z.str()
              << ", Y=" << sc.params.Y.str() << ", X=" << sc.params.X.str()
              << ", W=" << sc.params.W.str();
    if (sc.risk) std::cout << ", r=" << sc.risk->r.str();
    std::cout << ")\n";
    int idx = 0;
    for (const auto& row : report) {
        std::ostringstream line;
        line << ++idx << ". " << support_label(sc.game, row.support);
        std::string head = line.str();
        head.resize(std::max<std::size_t>(head.size(), 18), ' ');
        std::cout << head << " " << status_name(row.status);
        if (row.finding) {
            std::cout << "  " << probs_str(row.finding->strategy) << "  payoff "
                      << row.finding->payoff.str();
            if (row.finding->family) {
                std::cout << "  vertices";
                for (const auto& v : row.finding->family->vertices)
                    std::cout << " " << probs_str(v);
            }
        } else {
            std::cout << "  " << row.failure_reason;
        }
        std::cout << "\n";
    }
    return 0;
}

// ---- dynamics --------------------------------------------------------------

int cmd_dynamics(const CommonArgs& args, std::size_t steps, unsigned long seed,
                 std::size_t starts, std::size_t record_every, bool base_pd) {
    const PdParams params(parse_rational(args.z, "--Z"), parse_rational(args.y, "--Y"),
                          parse_rational(args.x, "--X"), parse_rational(args.w, "--W"));
    std::optional<RiskLevel> risk;
    if (!args.risk.empty())
        risk = RiskLevel{parse_rational(args.risk, "--risk"), args.allow_any_risk};

    const SymmetricGame game = base_pd ? make_pd(params)
                              : risk   ? add_risk(params, *risk)
                                       : universalize(make_pd(params), 1);

    // L1 target: the closed-form point when it uniquely exists.
    std::optional<std::vector<double>> target;
    if (!base_pd && (!risk || (risk->r >= Rational(0) && risk->r < params.X - params.Y))) {
        const auto cf = risk ? closed_form_updr(params, *risk) : closed_form_upd(params);
        target = std::vector<double>{cf.q1.to_double(), 0.0, 0.0, cf.q4.to_double()};
    }

    std::mt19937 rng(static_cast<std::mt19937::result_type>(seed));
    std::uniform_real_distribution<double> uniform(1e-9, 1.0);

    std::cout << "run,step,q1,q2,q3,q4,dist_to_eq\n";
    std::ostringstream out;
    out.precision(17);
    for (std::size_t run = 0; run < starts; ++run) {
        // Interior start: normalized exponential weights (Dirichlet(1,...,1)).
        std::vector<double> start(game.size());
        double total = 0.0;
        for (auto& p : start) {
            p = -std::log(uniform(rng));
            total += p;
        }
        for (auto& p : start) p /= total;

        const Trajectory traj = simulate(game, start, steps, record_every);
        for (std::size_t s = 0; s < traj.states.size(); ++s) {
            const auto& state = traj.states[s];
            out << run << "," << (s == 0 ? 0 : s * record_every);
            for (std::size_t i = 0; i < 4; ++i) {
                out << ",";
                if (i < state.size()) out << state[i];
            }
            out << ",";
            if (target) {
                double dist = 0.0;
                for (std::size_t i = 0; i < state.size(); ++i)
                    dist += std::abs(state[i] - (*target)[i]);
                out << dist;
            }
            out << "\n";
        }
    }
    std::cout << out.str();
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact equilibrium analysis of PD, UPD and UPDR"};
    app.require_subcommand(1);

    CommonArgs analyze_args, sweep_args, enum_args, dyn_args;
    unsigned sweep_steps = 5;
    std::size_t dyn_steps = 10000, dyn_starts = 1, dyn_record = 1;
    unsigned long dyn_seed = 0;
    bool dyn_pd = false;

    auto* analyze = app.add_subcommand("analyze", "solve one parameterization exactly");
    add_common_flags(analyze, analyze_args, "table");

    auto* sweep = app.add_subcommand("sweep", "risk grid from 0 to X - Y inclusive");
    add_common_flags(sweep, sweep_args, "csv");
    sweep->add_option("--steps", sweep_steps, "grid points (>= 2)")->check(CLI::Range(2u, 100000u));

    auto* enumerate = app.add_subcommand("enumerate", "report all 15 candidate supports");
    add_common_flags(enumerate, enum_args, "table");

    auto* dynamics = app.add_subcommand("dynamics", "replicator trajectories as CSV");
    add_common_flags(dynamics, dyn_args, "csv");
    dynamics->add_option("--steps", dyn_steps, "iterations per run (>= 1)")
        ->check(CLI::Range(std::size_t{1}, std::size_t{100000000}));
    dynamics->add_option("--seed", dyn_seed, "RNG seed for the start generator");
    dynamics->add_option("--starts", dyn_starts, "number of seeded interior starts (>= 1)")
        ->check(CLI::Range(std::size_t{1}, std::size_t{100000}));
    dynamics->add_option("--record-every", dyn_record, "record every k-th state");
    dynamics->add_flag("--pd", dyn_pd, "run on the base 2x2 PD instead of UPD/UPDR");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        std::cerr << e.what() << "\n";
        return kExitUsage;
    }

    try {
        if (*analyze) return cmd_analyze(analyze_args);
        if (*sweep) return cmd_sweep(sweep_args, sweep_steps);
        if (*enumerate) return cmd_enumerate(enum_args);
        if (*dynamics)
            return cmd_dynamics(dyn_args, dyn_steps, dyn_seed, dyn_starts, dyn_record, dyn_pd);
    } catch (const UsageError& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const ValidationError& e) {
        std::cerr << "validation error: " << e.what() << "\n";
        return kExitValidation;
    } catch (const std::exception& e) {
        std::cerr << "internal fault: " << e.what() << "\n";
        return kExitInternal;
    }
    return kExitInternal;
}
