#pragma once

// JSON views of reports. Floating-point values are rounded to 9 significant
// digits, and magnitudes below 1e-12 (round-off noise at desk scale) print
// as 0, so output is stable across platforms.

#include <cmath>
#include <cstdio>
#include <string>
#include <vector>

#include "json.hpp"  // nlohmann/json (vendor/)

#include "loopspec/laplacian.hpp"
#include "loopspec/lifting.hpp"
#include "loopspec/oracle.hpp"
#include "loopspec/spectral.hpp"
#include "loopspec/sweep.hpp"

namespace loopspec {

inline double round9(double x) {
    if (!std::isfinite(x)) return x;
    if (std::abs(x) < 1e-12) return 0.0;
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.9g", x);
    const double r = std::stod(buf);
    return r == 0.0 ? 0.0 : r;  // no "-0.0"
}

inline nlohmann::json round9(const std::vector<double>& xs) {
    auto out = nlohmann::json::array();
    for (double x : xs) out.push_back(round9(x));
    return out;
}

inline nlohmann::json to_json(const VerificationReport& r) {
    nlohmann::json checks = nlohmann::json::array();
    for (const auto& c : r.checks) checks.push_back({{"id", c.id}, {"pass", c.pass}, {"margin", round9(c.margin)}});
    return {
        {"graph", {{"n", r.n}, {"q", r.q}, {"components", r.components}, {"pseudo_connected", r.pseudo_connected}}},
        {"checks", checks},
        {"tolerances",
         {{"solver", r.tolerances.solver},
          {"match", r.tolerances.match},
          {"positivity", r.tolerances.positivity},
          {"scale_base", round9(r.scale_base)},
          {"scale_lifted", round9(r.scale_lifted)}}},
    };
}

inline nlohmann::json to_json(const GeneratorConfig& cfg) {
    return {{"n", cfg.n}, {"p_edge", cfg.p_edge}, {"p_loop", cfg.p_loop}, {"seed", cfg.seed},
            {"require", to_string(cfg.require)}};
}

inline nlohmann::json to_json(const SweepResult& r) {
    nlohmann::json failures = nlohmann::json::array();
    for (const auto& f : r.failures) {
        nlohmann::json j{{"index", f.index}, {"n", f.n}};
        if (f.seed) j["seed"] = *f.seed;
        if (f.mask) j["mask"] = *f.mask;
        nlohmann::json ids = nlohmann::json::array(), margins = nlohmann::json::object();
        for (const auto& c : f.failed) {
            ids.push_back(c.id);
            margins[c.id] = round9(c.margin);
        }
        j["failed_checks"] = ids;
        j["margins"] = margins;
        if (!f.error.empty()) j["error"] = f.error;
        failures.push_back(std::move(j));
    }
    return {{"total", r.total}, {"passed", r.passed}, {"failures", failures}};
}

template <class M>
nlohmann::json matrix_json(const M& m) {
    auto rows = nlohmann::json::array();
    for (std::size_t i = 0; i < m.dim(); ++i) {
        auto row = nlohmann::json::array();
        for (std::size_t j = 0; j < m.dim(); ++j) row.push_back(m(i, j));
        rows.push_back(std::move(row));
    }
    return rows;
}

/// Summary behind `loopspec analyze`: structure, Laplacian, spectrum and the
/// degree/Fiedler bounds with their slack.
inline nlohmann::json analyze(const Graph& g, const Tolerances& tol = {}) {
    const IntMatrix lap = laplacian_of(g);
    const Spectrum spec = eigen_sym(lap, tol.solver);
    const bool loopless = g.self_loop_count() == 0;
    const auto comps = connected_components(g).count;

    nlohmann::json out{
        {"graph",
         {{"n", g.vertex_count()},
          {"q", g.self_loop_count()},
          {"components", comps},
          {"pseudo_connected", is_pseudo_connected(g)}}},
        {"laplacian", matrix_json(lap)},
        {"eigenvalues", round9(spec.values)},
    };
    nlohmann::json bounds = nlohmann::json::object();
    if (loopless && g.vertex_count() >= 2) {
        const double a = spec.values[1];
        out["algebraic_connectivity"] = round9(a);
        if (comps == 1) {
            const double b = fiedler_lower_bound(g.vertex_count());
            bounds["eq2"] = {{"bound", round9(b)}, {"value", round9(a)}, {"margin", round9(a - b)}};
        }
    }
    const double ub = degree_upper_bound(g);
    bounds[loopless ? "eq3" : "eq8"] = {
        {"bound", round9(ub)}, {"value", round9(spec.max())}, {"margin", round9(ub - spec.max())}};
    out["bounds"] = bounds;
    return out;
}

/// Summary written by `loopspec lift`.
inline nlohmann::json lift_summary(const LiftedGraph& lg) {
    return {{"n", lg.base.vertex_count()},
            {"q", lg.base.self_loop_count()},
            {"lifted_n", lg.lifted.vertex_count()},
            {"lifted_edges", lg.lifted.edge_count()},
            {"middle", lg.middle},
            {"middle_isolated", lg.lifted.degree(lg.middle) == 0}};
}

}  // namespace loopspec
