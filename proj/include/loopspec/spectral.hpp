#pragma once

// Spectral bounds and the verifiers for graphs with self-loops.
//
// Claims checked by verify_all:
//   eq2          a(G) >= 2(1 - cos(pi/N))              connected, loopless, N >= 2
//   eq3          max sigma(L) <= 2 d(G)                 loopless
//   eq8          max sigma(L(G)) <= max sigma(L(G°)) + 1 <= 2 d(G°) + 1   with loops
//   lemma1       L(G) positive definite                 pseudo-connected
//   eq6          sigma(L(G)) within sigma(L(lift)) and inside [0, 2 d(G°) + 1]
//   eq7          matched lifted eigenvalues positive    pseudo-connected
//   lift-eigvec  [v; 0; -v] is an eigenvector of L(lift) for every eigenpair of L(G)

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <limits>
#include <numbers>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "loopspec/eigen.hpp"
#include "loopspec/graph.hpp"
#include "loopspec/laplacian.hpp"
#include "loopspec/lifting.hpp"

namespace loopspec {

struct Tolerances {
    /// Jacobi stopping threshold, relative to ‖M‖_F.
    double solver = 1e-12;
    /// Absolute matching/residual tolerance before scaling by max(1, ρ).
    double match = 1e-8;
    /// Positivity threshold before scaling by max(1, ρ).
    double positivity = 1e-8;

    double scaled_match(double rho) const { return match * std::max(1.0, rho); }
    double scaled_positivity(double rho) const { return positivity * std::max(1.0, rho); }
};

/// Defaults, with LOOPSPEC_TOL (a decimal string) replacing the match
/// tolerance when set.
inline Tolerances tolerances_from_env() {
    Tolerances t;
    if (const char* env = std::getenv("LOOPSPEC_TOL"); env && *env) {
        char* end = nullptr;
        const double v = std::strtod(env, &end);
        if (end == env || *end != '\0' || !(v > 0.0) || !std::isfinite(v)) {
            throw std::invalid_argument(std::string("LOOPSPEC_TOL is not a positive number: '") + env + "'");
        }
        t.match = v;
    }
    return t;
}

inline Spectrum laplacian_spectrum(const Graph& g, double solver_tol = 1e-12) {
    return eigen_sym(laplacian_of(g), solver_tol);
}

/// Second-smallest Laplacian eigenvalue of a loopless graph.
inline double algebraic_connectivity(const Graph& g, double solver_tol = 1e-12) {
    if (g.vertex_count() < 2) throw std::invalid_argument("algebraic connectivity needs at least 2 vertices");
    if (g.self_loop_count() != 0) throw std::invalid_argument("algebraic connectivity is defined for loopless graphs");
    return laplacian_spectrum(g, solver_tol).values[1];
}

/// 2(1 − cos(π/n)): the smallest algebraic connectivity of a connected
/// loopless graph on n vertices, attained by the path.
inline double fiedler_lower_bound(std::size_t n) {
    if (n < 2) throw std::invalid_argument("Fiedler bound needs n >= 2");
    return 2.0 * (1.0 - std::cos(std::numbers::pi / static_cast<double>(n)));
}

/// 2 d(G°) + 1 when g has a loop, 2 d(G) otherwise.
inline double degree_upper_bound(const Graph& g) {
    if (g.self_loop_count() == 0) return 2.0 * static_cast<double>(max_degree(g));
    return 2.0 * static_cast<double>(max_degree(strip_self_loops(g))) + 1.0;
}

struct SubsetResult {
    bool included = false;
    /// (index into a, index into b) for every matched eigenvalue of a.
    std::vector<std::pair<std::size_t, std::size_t>> matching;
    double max_error = 0.0;
    /// match_tol minus the worst distance; negative when some value of a has
    /// no unused partner within tolerance.
    double margin = 0.0;
};

/// Multiset inclusion of a in b within `match_tol`: each eigenvalue of a
/// consumes a distinct eigenvalue of b. Both inputs must be ascending; the
/// greedy two-pointer sweep is then an optimal matching.
inline SubsetResult spectrum_subset(const std::vector<double>& a, const std::vector<double>& b, double match_tol) {
    if (!(match_tol > 0.0)) throw std::invalid_argument("match tolerance must be positive");
    SubsetResult res;
    res.included = true;
    std::vector<bool> used(b.size(), false);
    std::size_t j = 0;
    double worst = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) {
        while (j < b.size() && b[j] < a[i] - match_tol) ++j;
        if (j < b.size() && std::abs(b[j] - a[i]) <= match_tol) {
            res.matching.emplace_back(i, j);
            used[j] = true;
            worst = std::max(worst, std::abs(b[j] - a[i]));
            ++j;
            continue;
        }
        res.included = false;
        double nearest = std::numeric_limits<double>::infinity();
        for (std::size_t k = 0; k < b.size(); ++k)
            if (!used[k]) nearest = std::min(nearest, std::abs(b[k] - a[i]));
        worst = std::max(worst, nearest);
    }
    res.max_error = worst;
    res.margin = match_tol - worst;
    return res;
}

inline SubsetResult spectrum_subset(const Spectrum& a, const Spectrum& b, double match_tol) {
    return spectrum_subset(a.values, b.values, match_tol);
}

struct Check {
    std::string id;
    bool pass = false;
    double margin = 0.0;
};

struct VerificationReport {
    std::size_t n = 0;
    std::size_t q = 0;
    std::size_t components = 0;
    bool pseudo_connected = false;
    std::vector<Check> checks;
    Tolerances tolerances;
    /// max(1, ρ) scalings actually applied for the base and lifted Laplacians.
    double scale_base = 1.0;
    double scale_lifted = 1.0;

    bool all_passed() const {
        return std::all_of(checks.begin(), checks.end(), [](const Check& c) { return c.pass; });
    }

    const Check* find(const std::string& id) const {
        for (const auto& c : checks)
            if (c.id == id) return &c;
        return nullptr;
    }

    std::vector<std::string> failed_ids() const {
        std::vector<std::string> out;
        for (const auto& c : checks)
            if (!c.pass) out.push_back(c.id);
        return out;
    }
};

/// Runs every claim applicable to g. Margins are the raw slack of each
/// inequality (eq2, eq3, eq8, eq6 interval), the smallest eigenvalue for
/// the positivity claims (lemma1, eq7), and tolerance minus error for the
/// matching and residual claims (eq6 matching, lift-eigvec). Inequalities
/// pass with slack down to minus the scaled match tolerance; positivity
/// claims must clear the scaled positivity threshold.
inline VerificationReport verify_all(const Graph& g, const Tolerances& tol = {}) {
    VerificationReport rep;
    rep.n = g.vertex_count();
    rep.q = g.self_loop_count();
    rep.components = connected_components(g).count;
    rep.pseudo_connected = is_pseudo_connected(g);
    rep.tolerances = tol;

    const IntMatrix lap = laplacian_of(g);
    const Spectrum spec = eigen_sym(lap, tol.solver);
    const LiftedGraph lg = lift(g);
    const IntMatrix lap_hat = laplacian_of(lg.lifted);
    const Spectrum spec_hat = eigen_sym(lap_hat, tol.solver);

    rep.scale_base = std::max(1.0, spec.spectral_radius());
    rep.scale_lifted = std::max(1.0, spec_hat.spectral_radius());
    const double tol_base = tol.scaled_match(spec.spectral_radius());
    const double tol_hat = tol.scaled_match(spec_hat.spectral_radius());
    const double pos_base = tol.scaled_positivity(spec.spectral_radius());
    const double pos_hat = tol.scaled_positivity(spec_hat.spectral_radius());

    const bool loopless = rep.q == 0;

    if (loopless && rep.components == 1 && rep.n >= 2) {
        const double m = spec.values[1] - fiedler_lower_bound(rep.n);
        rep.checks.push_back({"eq2", m >= -tol_base, m});
    }

    if (loopless) {
        const double m = 2.0 * static_cast<double>(max_degree(g)) - spec.max();
        rep.checks.push_back({"eq3", m >= -tol_base, m});
    } else {
        const Graph stripped = strip_self_loops(g);
        const Spectrum spec_stripped = eigen_sym(laplacian_of(stripped), tol.solver);
        const double first = spec_stripped.max() + 1.0 - spec.max();
        const double second = 2.0 * static_cast<double>(max_degree(stripped)) + 1.0 - (spec_stripped.max() + 1.0);
        const double m = std::min(first, second);
        rep.checks.push_back({"eq8", m >= -tol_base, m});
    }

    if (rep.pseudo_connected) {
        const double m = spec.min();
        rep.checks.push_back({"lemma1", m > pos_base, m});
    }

    const SubsetResult sub = spectrum_subset(spec, spec_hat, tol_hat);
    {
        const double upper = 2.0 * static_cast<double>(max_degree(strip_self_loops(g))) + 1.0;
        const bool interval_ok = spec.min() >= -tol_base && spec.max() <= upper + tol_base;
        const double m = std::min({sub.margin, spec.min(), upper - spec.max()});
        rep.checks.push_back({"eq6", sub.included && interval_ok, m});
    }

    if (rep.pseudo_connected) {
        double m = std::numeric_limits<double>::infinity();
        for (const auto& [i, j] : sub.matching) m = std::min(m, spec_hat.values[j]);
        if (!sub.included) m = std::min(m, 0.0);
        if (sub.matching.empty()) m = 0.0;
        rep.checks.push_back({"eq7", sub.included && m > pos_hat, m});
    }

    {
        const std::size_t n = rep.n;
        const RealMatrix lhat = lap_hat.cast<double>();
        double worst = 0.0;
        for (std::size_t k = 0; k < spec.size(); ++k) {
            std::vector<double> w(2 * n + 1, 0.0);
            for (std::size_t i = 0; i < n; ++i) {
                w[i] = spec.vectors(i, k) / std::numbers::sqrt2;
                w[i + n + 1] = -spec.vectors(i, k) / std::numbers::sqrt2;
            }
            const auto lw = lhat.multiply(w);
            double r = 0.0;
            for (std::size_t i = 0; i < w.size(); ++i) r += (lw[i] - spec.values[k] * w[i]) * (lw[i] - spec.values[k] * w[i]);
            worst = std::max(worst, std::sqrt(r));
        }
        const double m = tol_hat - worst;
        rep.checks.push_back({"lift-eigvec", m >= 0.0, m});
    }

    return rep;
}

}  // namespace loopspec
