// loopspec: command-line front end.
//
// Exit codes: 0 success, 1 a verification check failed, 2 usage or I/O error.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <string>

#include "CLI11.hpp"
#include "loopspec.hpp"

namespace {

using loopspec::Graph;
using nlohmann::json;

constexpr int kOk = 0;
constexpr int kCheckFailed = 1;
constexpr int kUsageError = 2;

std::string fmt9(double x) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.9g", loopspec::round9(x));
    return buf;
}

void print_analysis_text(const json& a) {
    const auto& g = a["graph"];
    std::cout << "n: " << g["n"] << "\nq: " << g["q"] << "\ncomponents: " << g["components"]
              << "\npseudo_connected: " << (g["pseudo_connected"].get<bool>() ? "true" : "false") << "\nlaplacian:\n";
    for (const auto& row : a["laplacian"]) {
        bool first = true;
        for (const auto& x : row) {
            std::cout << (first ? "" : " ") << x.get<long long>();
            first = false;
        }
        std::cout << '\n';
    }
    std::cout << "eigenvalues:";
    for (const auto& x : a["eigenvalues"]) std::cout << ' ' << fmt9(x.get<double>());
    std::cout << '\n';
    if (a.contains("algebraic_connectivity"))
        std::cout << "algebraic_connectivity: " << fmt9(a["algebraic_connectivity"].get<double>()) << '\n';
    for (const auto& [id, b] : a["bounds"].items()) {
        std::cout << id << ": bound " << fmt9(b["bound"].get<double>()) << " value " << fmt9(b["value"].get<double>())
                  << " margin " << fmt9(b["margin"].get<double>()) << '\n';
    }
}

void write_text_file(const std::string& path, const std::string& text) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot write '" + path + "'");
    out << text;
    if (!out) throw std::runtime_error("failed writing '" + path + "'");
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Laplacians of undirected graphs with self-loops: analysis, lifting and spectral verification"};
    app.require_subcommand(1);

    std::string path, out_path, format = "json";

    auto* analyze = app.add_subcommand("analyze", "Print structure, Laplacian, spectrum and bounds of an edge list");
    analyze->add_option("path", path, "Edge-list file")->required();
    analyze->add_option("--format", format, "Output format")->check(CLI::IsMember({"text", "json"}));

    auto* lift = app.add_subcommand("lift", "Write the lifted graph as an edge list and print a JSON summary");
    lift->add_option("path", path, "Edge-list file")->required();
    lift->add_option("out", out_path, "Output edge-list file")->required();

    auto* verify = app.add_subcommand("verify", "Check every applicable spectral claim; exit 1 on failure");
    verify->add_option("path", path, "Edge-list file")->required();

    loopspec::GeneratorConfig gen_cfg;
    std::string require = "none";
    auto* generate = app.add_subcommand("generate", "Write a seeded random graph as an edge list");
    generate->add_option("--n", gen_cfg.n, "Vertex count")->required()->check(CLI::PositiveNumber);
    generate->add_option("--p-edge", gen_cfg.p_edge, "Probability of each vertex pair")->check(CLI::Range(0.0, 1.0));
    generate->add_option("--p-loop", gen_cfg.p_loop, "Probability of a loop at each vertex")->check(CLI::Range(0.0, 1.0));
    generate->add_option("--seed", gen_cfg.seed, "PRNG seed");
    generate->add_option("--require", require, "Constraint enforced by resampling")
        ->check(CLI::IsMember({"none", "connected", "pseudo_connected"}));
    generate->add_option("-o,--out", out_path, "Output file (default: stdout)");

    loopspec::SweepOptions sweep_opt;
    std::string mode = "random";
    auto* sweep = app.add_subcommand("sweep", "Verify every graph of a random or exhaustive campaign");
    sweep->add_option("--mode", mode, "Campaign kind")->check(CLI::IsMember({"random", "exhaustive"}));
    sweep->add_option("--n-max", sweep_opt.n_max, "Largest vertex count");
    sweep->add_option("--n-min", sweep_opt.n_min, "Smallest vertex count (random mode)");
    sweep->add_option("--samples", sweep_opt.samples, "Number of random graphs");
    sweep->add_option("--seed", sweep_opt.seed, "Campaign seed");
    sweep->add_option("--p-edge", sweep_opt.p_edge, "Edge probability (random mode)")->check(CLI::Range(0.0, 1.0));
    sweep->add_option("--p-loop", sweep_opt.p_loop, "Loop probability (random mode)")->check(CLI::Range(0.0, 1.0));
    sweep->add_option("--jobs", sweep_opt.jobs, "Worker threads");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e);
        return rc == 0 ? kOk : kUsageError;
    }

    try {
        const loopspec::Tolerances tol = loopspec::tolerances_from_env();

        if (*analyze) {
            const auto a = loopspec::analyze(loopspec::read_edge_list_file(path), tol);
            if (format == "text") print_analysis_text(a); else std::cout << a.dump(2) << '\n';
            return kOk;
        }
        if (*lift) {
            const auto lg = loopspec::lift(loopspec::read_edge_list_file(path));
            write_text_file(out_path, loopspec::to_edge_list(lg.lifted));
            std::cout << loopspec::lift_summary(lg).dump(2) << '\n';
            return kOk;
        }
        if (*verify) {
            const auto rep = loopspec::verify_all(loopspec::read_edge_list_file(path), tol);
            std::cout << loopspec::to_json(rep).dump(2) << '\n';
            return rep.all_passed() ? kOk : kCheckFailed;
        }
        if (*generate) {
            gen_cfg.require = loopspec::requirement_from_string(require);
            Graph g(1);
            try {
                g = loopspec::random_graph(gen_cfg);
            } catch (const loopspec::GenerationError& e) {
                std::cerr << "error: " << e.what() << '\n'
                          << json{{"failure", e.what()}, {"cfg", loopspec::to_json(e.config())}}.dump() << '\n';
                return kCheckFailed;
            }
            if (out_path.empty()) loopspec::write_edge_list(std::cout, g);
            else write_text_file(out_path, loopspec::to_edge_list(g));
            return kOk;
        }
        if (*sweep) {
            sweep_opt.mode = mode == "exhaustive" ? loopspec::SweepMode::exhaustive : loopspec::SweepMode::random;
            sweep_opt.tolerances = tol;
            const auto res = loopspec::run_sweep(sweep_opt);
            std::cout << loopspec::to_json(res).dump(2) << '\n';
            return res.failures.empty() ? kOk : kCheckFailed;
        }
    } catch (const loopspec::ConvergenceError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kCheckFailed;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kUsageError;
    }
    return kUsageError;
}
