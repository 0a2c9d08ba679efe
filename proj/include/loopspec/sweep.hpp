#pragma once

// Verification campaigns over many graphs: exhaustive enumeration of small
// orders or seeded random samples.

#include <algorithm>
#include <cstdint>
#include <exception>
#include <functional>
#include <optional>
#include <string>
#include <thread>
#include <utility>
#include <vector>

#include "loopspec/oracle.hpp"
#include "loopspec/spectral.hpp"

namespace loopspec {

enum class SweepMode { random, exhaustive };

struct SweepOptions {
    SweepMode mode = SweepMode::random;
    std::size_t n_min = 2;  // random mode only; exhaustive always starts at 1
    std::size_t n_max = 12;
    std::size_t samples = 1000;
    std::uint64_t seed = 0;
    double p_edge = 0.4;
    double p_loop = 0.3;
    unsigned jobs = 1;
    Tolerances tolerances;
};

struct SweepFailure {
    std::size_t index = 0;  // position in the campaign
    std::size_t n = 0;
    std::optional<std::uint64_t> seed;  // random mode: reproduces the graph via random_graph
    std::optional<std::uint64_t> mask;  // exhaustive mode: graph_from_mask(n, mask)
    std::vector<Check> failed;
    std::string error;  // set when verification threw
};

struct SweepResult {
    std::size_t total = 0;
    std::size_t passed = 0;
    std::vector<SweepFailure> failures;
};

struct SweepItem {
    std::size_t index;
    std::optional<std::uint64_t> seed;
    std::optional<std::uint64_t> mask;
    Graph graph;
};

/// Config that regenerates random sample `k` of a campaign.
inline GeneratorConfig sample_config(const SweepOptions& opt, std::size_t k) {
    const std::uint64_t s = splitmix64(opt.seed + k);
    const std::size_t span = opt.n_max - opt.n_min + 1;
    return GeneratorConfig{opt.n_min + static_cast<std::size_t>(s % span), opt.p_edge, opt.p_loop, s,
                           Requirement::none};
}

inline std::vector<SweepItem> sweep_items(const SweepOptions& opt) {
    std::vector<SweepItem> items;
    if (opt.mode == SweepMode::exhaustive) {
        if (opt.n_max > kMaxEnumerationOrder)
            throw std::invalid_argument("exhaustive sweeps support n-max <= " + std::to_string(kMaxEnumerationOrder));
        for (std::size_t n = 1; n <= opt.n_max; ++n)
            for_each_graph(n, [&](std::uint64_t mask, const Graph& g) {
                items.push_back({items.size(), std::nullopt, mask, g});
            });
    } else {
        if (opt.n_min == 0 || opt.n_min > opt.n_max) throw std::invalid_argument("need 1 <= n-min <= n-max");
        items.reserve(opt.samples);
        for (std::size_t k = 0; k < opt.samples; ++k) {
            const auto cfg = sample_config(opt, k);
            items.push_back({k, cfg.seed, std::nullopt, random_graph(cfg)});
        }
    }
    return items;
}

using SweepVisitor = std::function<void(const SweepItem&, const VerificationReport*)>;

/// Verifies every item, possibly on several threads. Results and visitor
/// calls are in campaign order regardless of `jobs`.
inline SweepResult run_sweep(const SweepOptions& opt, const SweepVisitor& visit = {}) {
    const auto items = sweep_items(opt);
    std::vector<std::optional<VerificationReport>> reports(items.size());
    std::vector<std::string> errors(items.size());

    auto work = [&](std::size_t begin, std::size_t stride) {
        for (std::size_t k = begin; k < items.size(); k += stride) {
            try {
                reports[k] = verify_all(items[k].graph, opt.tolerances);
            } catch (const std::exception& e) {
                errors[k] = e.what();
            }
        }
    };
    const unsigned jobs = std::max(1U, opt.jobs);
    if (jobs == 1) {
        work(0, 1);
    } else {
        std::vector<std::jthread> pool;
        for (unsigned t = 0; t < jobs; ++t) pool.emplace_back(work, t, jobs);
    }

    SweepResult res;
    res.total = items.size();
    for (std::size_t k = 0; k < items.size(); ++k) {
        const auto& item = items[k];
        const VerificationReport* rep = reports[k] ? &*reports[k] : nullptr;
        if (visit) visit(item, rep);
        if (rep && rep->all_passed()) {
            ++res.passed;
            continue;
        }
        SweepFailure f{item.index, item.graph.vertex_count(), item.seed, item.mask, {}, errors[k]};
        if (rep)
            for (const auto& c : rep->checks)
                if (!c.pass) f.failed.push_back(c);
        res.failures.push_back(std::move(f));
    }
    return res;
}

}  // namespace loopspec
