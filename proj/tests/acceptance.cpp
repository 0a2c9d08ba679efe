// Acceptance suite: one PASS/FAIL line per criterion, nonzero exit if any fails.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <map>
#include <numbers>
#include <random>
#include <string>
#include <vector>

#include "loopspec.hpp"

using namespace loopspec;

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) { return std::chrono::duration<double>(Clock::now() - t0).count(); }

struct Criterion {
    bool ok = true;
    std::vector<std::string> notes;

    void require(bool cond, const std::string& what) {
        if (!cond) {
            ok = false;
            if (notes.size() < 10) notes.push_back(what);
        }
    }
};

int failures = 0;

void report(const char* id, const char* title, const Criterion& c, const std::string& detail) {
    std::printf("[%s] %s %s (%s)\n", c.ok ? "PASS" : "FAIL", id, title, detail.c_str());
    for (const auto& n : c.notes) std::printf("       - %s\n", n.c_str());
    if (!c.ok) ++failures;
}

std::string fmt(const char* f, double x) {
    char buf[64];
    std::snprintf(buf, sizeof buf, f, x);
    return buf;
}

/// EᵀE = D − A = rank-one assembly, lifted order 2N+1, middle degree 2q.
void check_structure(Criterion& c, const Graph& g, const std::string& tag) {
    const auto lap = laplacian_of(g);
    const auto da = degree_adjacency(g);
    c.require(gram(incidence_matrix(g)) == lap, tag + ": EᵀE != L");
    c.require(da.degree - da.adjacency == lap, tag + ": D − A != L");
    const auto lg = lift(g);
    c.require(lg.lifted.vertex_count() == 2 * g.vertex_count() + 1, tag + ": lifted order");
    c.require(lg.lifted.degree(lg.middle) == 2 * g.self_loop_count(), tag + ": middle degree");
}

// --- 1 ---------------------------------------------------------------------
void worked_example() {
    const auto t0 = Clock::now();
    Criterion c;
    Graph g(2);
    g.add_edge(1, 1).add_edge(1, 2);

    c.require(laplacian_of(g) == IntMatrix::from_rows({{2, -1}, {-1, 1}}), "L(G) != [[2,-1],[-1,1]]");

    const auto spec = laplacian_spectrum(g);
    const auto oracle = charpoly_eigenvalues(laplacian_of(g));
    const double lo = (3.0 - std::sqrt(5.0)) / 2.0, hi = (3.0 + std::sqrt(5.0)) / 2.0;
    c.require(std::abs(spec.values[0] - 0.381966011) <= 1e-8 && std::abs(spec.values[1] - 2.618033989) <= 1e-8,
              "spectrum of L(G)");
    c.require(std::abs(oracle[0] - lo) <= 1e-10 && std::abs(oracle[1] - hi) <= 1e-10, "oracle roots of λ²−3λ+1");

    const auto lg = lift(g);
    std::vector<std::size_t> deg;
    for (Vertex v = 1; v <= lg.lifted.vertex_count(); ++v) deg.push_back(lg.lifted.degree(v));
    c.require(lg.lifted.vertex_count() == 5 && lg.lifted.edge_count() == 4 && is_connected(lg.lifted) &&
                  deg == std::vector<std::size_t>{2, 1, 2, 2, 1},
              "lifted graph is not the path 2–1–3–4–5");

    const auto lifted = laplacian_spectrum(lg.lifted);
    const std::vector<double> p5{0.0, 0.381966011, 1.381966011, 2.618033989, 3.618033989};
    for (std::size_t k = 0; k < 5; ++k) {
        c.require(std::abs(lifted.values[k] - p5[k]) <= 1e-8, "σ(L(lift)) entry " + std::to_string(k));
        const double closed = 2.0 * (1.0 - std::cos(static_cast<double>(k) * std::numbers::pi / 5.0));
        c.require(std::abs(lifted.values[k] - closed) <= 1e-10, "σ(L(P5)) closed form " + std::to_string(k));
    }

    const auto sub = spectrum_subset(spec, lifted, 1e-8);
    c.require(sub.included && sub.max_error <= 1e-8, "σ(L(G)) ⊄ σ(L(lift))");
    c.require(degree_upper_bound(g) == 3.0 && spec.max() <= 3.0, "2d(G°)+1 = 3 ≥ λmax");
    c.require(verify_all(g).all_passed(), "verify_all");

    const double dt = seconds_since(t0);
    c.require(dt < 1.0, "runtime " + fmt("%.3f s", dt));
    report("AC1", "worked example {(1,1),(1,2)}", c,
           "eigs " + fmt("%.9f", spec.values[0]) + ", " + fmt("%.9f", spec.values[1]) + "; match err " +
               fmt("%.1e", sub.max_error) + "; " + fmt("%.4f s", dt));
}

// --- 2 and 7 (exhaustive part) --------------------------------------------
void exhaustive_sweep(Criterion& structural) {
    const auto t0 = Clock::now();
    Criterion c;
    SweepOptions opt;
    opt.mode = SweepMode::exhaustive;
    opt.n_max = 4;

    std::map<std::string, std::size_t> seen;
    std::size_t pc = 0, connected_loopless = 0;
    const auto res = run_sweep(opt, [&](const SweepItem& it, const VerificationReport* r) {
        const std::string tag = "n=" + std::to_string(it.graph.vertex_count()) + " mask=" + std::to_string(*it.mask);
        check_structure(structural, it.graph, tag);
        if (!r) return;
        for (const auto& ch : r->checks) ++seen[ch.id];
        const bool is_pc = is_pseudo_connected(it.graph);
        const bool is_cl = it.graph.self_loop_count() == 0 && is_connected(it.graph) && it.graph.vertex_count() >= 2;
        pc += is_pc;
        connected_loopless += is_cl;
        c.require((r->find("lemma1") != nullptr) == is_pc && (r->find("eq7") != nullptr) == is_pc,
                  tag + ": lemma1/eq7 applicability");
        c.require((r->find("eq2") != nullptr) == is_cl, tag + ": eq2 applicability");
        c.require(r->find("eq6") && r->find("lift-eigvec") && (r->find("eq3") || r->find("eq8")),
                  tag + ": missing always-on check");
    });
    c.require(res.total == 1098, "expected 2+8+64+1024 = 1098 graphs, got " + std::to_string(res.total));
    c.require(res.failures.empty(), std::to_string(res.failures.size()) + " failing graphs");
    for (const auto& f : res.failures) {
        std::string ids;
        for (const auto& ch : f.failed) ids += ch.id + " ";
        c.require(false, "n=" + std::to_string(f.n) + " mask=" + std::to_string(*f.mask) + ": " + ids + f.error);
    }
    c.require(seen["lemma1"] == pc && seen["eq7"] == pc, "lemma1/eq7 count");
    c.require(seen["eq2"] == connected_loopless, "eq2 count");

    const double dt = seconds_since(t0);
    c.require(dt < 30.0, "runtime " + fmt("%.2f s", dt));
    report("AC2", "exhaustive sweep n <= 4", c,
           std::to_string(res.total) + " graphs, " + std::to_string(res.passed) + " passed, " + std::to_string(pc) +
               " pseudo-connected, " + std::to_string(connected_loopless) + " connected loopless; " +
               fmt("%.2f s", dt));
}

// --- 3 and 7 (random part) --------------------------------------------------
void random_sweep(Criterion& structural) {
    const auto t0 = Clock::now();
    Criterion c;
    SweepOptions opt;
    opt.mode = SweepMode::random;
    opt.samples = 1000;
    opt.n_min = 2;
    opt.n_max = 12;
    opt.p_edge = 0.4;
    opt.p_loop = 0.3;
    opt.seed = 20140101;

    std::size_t checks = 0;
    const auto res = run_sweep(opt, [&](const SweepItem& it, const VerificationReport* r) {
        check_structure(structural, it.graph, "seed=" + std::to_string(*it.seed));
        if (r) checks += r->checks.size();
    });
    c.require(res.total == 1000, "total");
    for (const auto& f : res.failures) {
        c.require(f.seed.has_value(), "failure without reproducing seed");
        std::string ids;
        for (const auto& ch : f.failed) ids += ch.id + " ";
        c.require(false, "seed=" + std::to_string(f.seed.value_or(0)) + " n=" + std::to_string(f.n) + ": " + ids +
                             f.error);
    }
    const double dt = seconds_since(t0);
    c.require(dt < 60.0, "runtime " + fmt("%.2f s", dt));
    report("AC3", "random sweep 1000 graphs, n in [2,12], p_edge 0.4, p_loop 0.3", c,
           std::to_string(res.passed) + "/" + std::to_string(res.total) + " passed, " + std::to_string(checks) +
               " checks, seed " + std::to_string(opt.seed) + "; " + fmt("%.2f s", dt));
}

// --- 4 ---------------------------------------------------------------------
void lemma_decomposition() {
    Criterion c;
    std::mt19937_64 rng(4);
    std::normal_distribution<double> normal;
    double min_form = std::numeric_limits<double>::infinity();
    double worst_split = 0.0;

    for (int k = 0; k < 100; ++k) {
        const GeneratorConfig cfg{2 + rng() % 11, 0.4, 0.3, rng(), Requirement::pseudo_connected};
        const Graph g = random_graph(cfg);
        const std::string tag = "seed=" + std::to_string(cfg.seed);
        c.require(is_pseudo_connected(g), tag + ": not pseudo-connected");

        const std::size_t n = g.vertex_count();
        const auto lap = laplacian_of(g).cast<double>();
        const auto lap0 = laplacian_of(strip_self_loops(g)).cast<double>();
        const auto q0 = self_loop_matrix(g).cast<double>();
        const double q = static_cast<double>(g.self_loop_count());
        const std::vector<double> ones(n, 1.0);

        for (int t = 0; t < 100; ++t) {
            std::vector<double> v(n);
            for (auto& x : v) x = normal(rng);
            // mix in some pure-𝟙 and pure-w directions
            if (t % 10 == 0) std::fill(v.begin(), v.end(), 1.0);
            double norm = 0.0;
            for (double x : v) norm += x * x;
            norm = std::sqrt(norm);
            for (auto& x : v) x /= norm;

            double zeta = 0.0;
            for (double x : v) zeta += x;
            zeta /= static_cast<double>(n);
            std::vector<double> w(n);
            for (std::size_t i = 0; i < n; ++i) w[i] = v[i] - zeta;

            const double direct = lap.quadratic_form(v);
            const auto q0ones = q0.multiply(ones);
            double cross = 0.0;
            for (std::size_t i = 0; i < n; ++i) cross += w[i] * q0ones[i];
            const double split = lap0.quadratic_form(w) + q0.quadratic_form(w) + 2.0 * zeta * cross + q * zeta * zeta;

            worst_split = std::max(worst_split, std::abs(split - direct));
            min_form = std::min(min_form, direct);
            c.require(direct >= -1e-10, tag + ": vᵀLv < −1e−10");
            c.require(direct > 0.0, tag + ": vᵀLv not strictly positive for ‖v‖ = 1");
            c.require(std::abs(split - direct) <= 1e-10, tag + ": decomposition mismatch");
        }
    }
    report("AC4", "Lemma 1 decomposition v = w + ζ𝟙 on 100 pseudo-connected graphs x 100 vectors", c,
           "min vᵀLv " + fmt("%.3e", min_form) + ", max split error " + fmt("%.1e", worst_split));
}

// --- 5 ---------------------------------------------------------------------
void tightness() {
    Criterion c;
    double worst = 0.0;
    for (std::size_t n = 2; n <= 12; ++n) {
        Graph p(n);
        for (Vertex i = 1; i < n; ++i) p.add_edge(i, i + 1);
        const double err = std::abs(algebraic_connectivity(p) - fiedler_lower_bound(n));
        worst = std::max(worst, err);
        c.require(err <= 1e-8, "P" + std::to_string(n) + " a(G) off by " + fmt("%.2e", err));
    }
    Graph c4(4);
    c4.add_edge(1, 2).add_edge(2, 3).add_edge(3, 4).add_edge(4, 1);
    const double c4max = laplacian_spectrum(c4).max();
    c.require(std::abs(c4max - 2.0 * static_cast<double>(max_degree(c4))) <= 1e-8 && max_degree(c4) == 2,
              "C4 max eigenvalue " + fmt("%.12f", c4max));

    Graph k1(1);
    k1.add_edge(1, 1);
    const double k1max = laplacian_spectrum(k1).max();
    c.require(k1max == 1.0 && degree_upper_bound(k1) == 1.0, "K1 with loop: max eigenvalue " + fmt("%.17g", k1max));
    report("AC5", "bound tightness (paths, C4, looped K1)", c,
           "max path error " + fmt("%.1e", worst) + ", C4 " + fmt("%.12f", c4max) + ", K1 " + fmt("%.17g", k1max));
}

// --- 6 ---------------------------------------------------------------------
void solver_vs_oracle() {
    Criterion c;
    double worst_diff = 0.0, worst_res = 0.0;
    std::size_t graphs = 0;
    for (std::size_t n = 1; n <= 4; ++n) {
        for_each_graph(n, [&](std::uint64_t mask, const Graph& g) {
            ++graphs;
            const auto lap = laplacian_of(g);
            const auto s = eigen_sym(lap, 1e-12);
            const auto ref = charpoly_eigenvalues(lap, 1e-12);
            const std::string tag = "n=" + std::to_string(n) + " mask=" + std::to_string(mask);
            c.require(ref.size() == s.size(), tag + ": oracle size");
            for (std::size_t k = 0; k < s.size() && k < ref.size(); ++k) {
                const double d = std::abs(s.values[k] - ref[k]);
                worst_diff = std::max(worst_diff, d);
                c.require(d <= 1e-8, tag + ": eigenvalue " + std::to_string(k) + " differs by " + fmt("%.2e", d));
            }
            const double bound = 1e-10 * std::max(1.0, s.spectral_radius());
            const double rel = s.residual / std::max(1.0, s.spectral_radius());
            worst_res = std::max(worst_res, rel);
            c.require(s.residual <= bound, tag + ": residual " + fmt("%.2e", s.residual));
        });
    }
    report("AC6", "Jacobi vs characteristic-polynomial oracle, n <= 4", c,
           std::to_string(graphs) + " graphs, max |Δλ| " + fmt("%.1e", worst_diff) + ", max scaled residual " +
               fmt("%.1e", worst_res));
}

}  // namespace

int main() {
    std::printf("loopspec acceptance suite\n");
    Criterion structural;

    worked_example();
    exhaustive_sweep(structural);
    random_sweep(structural);
    lemma_decomposition();
    tightness();
    solver_vs_oracle();
    report("AC7", "structural identities on every swept graph", structural,
           "EᵀE = D − A = rank-one assembly; lifted order 2N+1; middle degree 2q");

    std::printf("%s: %d criterion(s) failed\n", failures ? "FAILED" : "OK", failures);
    return failures ? 1 : 0;
}
