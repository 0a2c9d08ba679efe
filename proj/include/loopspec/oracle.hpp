#pragma once

// Ground truth that shares no code with the Jacobi path: seeded random
// graphs, exhaustive enumeration of small labeled graphs, and eigenvalues
// from the exact characteristic polynomial.

#include <cstdint>
#include <algorithm>
#include <functional>
#include <random>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "loopspec/graph.hpp"
#include "loopspec/matrix.hpp"

namespace loopspec {

// ---------------------------------------------------------------------------
// Random graphs

enum class Requirement { none, connected, pseudo_connected };

inline const char* to_string(Requirement r) {
    switch (r) {
        case Requirement::none: return "none";
        case Requirement::connected: return "connected";
        case Requirement::pseudo_connected: return "pseudo_connected";
    }
    return "none";
}

inline Requirement requirement_from_string(const std::string& s) {
    if (s == "none") return Requirement::none;
    if (s == "connected") return Requirement::connected;
    if (s == "pseudo_connected" || s == "pseudo-connected") return Requirement::pseudo_connected;
    throw std::invalid_argument("unknown requirement '" + s + "'");
}

struct GeneratorConfig {
    std::size_t n = 1;
    double p_edge = 0.0;
    double p_loop = 0.0;
    std::uint64_t seed = 0;
    Requirement require = Requirement::none;
};

inline constexpr int kGeneratorRetryCap = 10'000;

class GenerationError : public std::runtime_error {
public:
    GenerationError(const std::string& what, GeneratorConfig cfg) : std::runtime_error(what), cfg_(cfg) {}
    const GeneratorConfig& config() const noexcept { return cfg_; }

private:
    GeneratorConfig cfg_;
};

/// splitmix64 step; used to derive per-sample seeds from a campaign seed.
constexpr std::uint64_t splitmix64(std::uint64_t x) noexcept {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

/// Bernoulli draws use the top 53 bits of mt19937_64 so results do not
/// depend on the standard library's distribution implementations.
inline Graph random_graph(const GeneratorConfig& cfg) {
    if (cfg.n == 0) throw std::invalid_argument("generator needs n >= 1");
    if (!(cfg.p_edge >= 0.0 && cfg.p_edge <= 1.0) || !(cfg.p_loop >= 0.0 && cfg.p_loop <= 1.0))
        throw std::invalid_argument("generator probabilities must lie in [0, 1]");

    std::mt19937_64 rng(cfg.seed);
    auto coin = [&](double p) { return static_cast<double>(rng() >> 11) * 0x1.0p-53 < p; };

    for (int attempt = 0; attempt < kGeneratorRetryCap; ++attempt) {
        Graph g(cfg.n);
        for (Vertex i = 1; i <= cfg.n; ++i) {
            if (coin(cfg.p_loop)) g.add_edge(i, i);
            for (Vertex j = i + 1; j <= cfg.n; ++j)
                if (coin(cfg.p_edge)) g.add_edge(i, j);
        }
        const bool ok = cfg.require == Requirement::none ||
                        (cfg.require == Requirement::connected && is_connected(g)) ||
                        (cfg.require == Requirement::pseudo_connected && is_pseudo_connected(g));
        if (ok) return g;
    }
    throw GenerationError("no graph satisfying '" + std::string(to_string(cfg.require)) + "' after " +
                              std::to_string(kGeneratorRetryCap) + " attempts",
                          cfg);
}

// ---------------------------------------------------------------------------
// Exhaustive enumeration

inline constexpr std::size_t kMaxEnumerationOrder = 5;

/// Number of labeled graphs with loops on n vertices: 2^(n(n+1)/2).
inline std::uint64_t enumeration_count(std::size_t n) { return std::uint64_t{1} << (n * (n + 1) / 2); }

/// Bit k of `mask` selects the k-th pair in lexicographic order
/// (1,1), (1,2), ..., (1,n), (2,2), ...
inline Graph graph_from_mask(std::size_t n, std::uint64_t mask) {
    Graph g(n);
    std::size_t bit = 0;
    for (Vertex i = 1; i <= n; ++i)
        for (Vertex j = i; j <= n; ++j, ++bit)
            if (mask >> bit & 1U) g.add_edge(i, j);
    return g;
}

inline void for_each_graph(std::size_t n, const std::function<void(std::uint64_t, const Graph&)>& visit) {
    if (n == 0 || n > kMaxEnumerationOrder)
        throw std::invalid_argument("enumeration supports 1 <= n <= " + std::to_string(kMaxEnumerationOrder));
    const auto total = enumeration_count(n);
    for (std::uint64_t mask = 0; mask < total; ++mask) visit(mask, graph_from_mask(n, mask));
}

inline std::vector<Graph> enumerate_graphs(std::size_t n) {
    std::vector<Graph> out;
    for_each_graph(n, [&](std::uint64_t, const Graph& g) { out.push_back(g); });
    return out;
}

// ---------------------------------------------------------------------------
// Characteristic polynomial oracle

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

inline constexpr std::size_t kMaxOracleOrder = 6;

/// Coefficients of det(λI − M), lowest degree first, leading coefficient 1.
/// Faddeev–LeVerrier in exact integer arithmetic; every division by k is exact.
inline std::vector<BigInt> charpoly_coefficients(const IntMatrix& m) {
    const std::size_t n = m.dim();
    std::vector<BigInt> c(n + 1);
    c[n] = 1;
    std::vector<BigInt> a(n * n), mk(n * n, 0), tmp(n * n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) a[i * n + j] = m(i, j);

    for (std::size_t k = 1; k <= n; ++k) {
        // M_k = A M_{k-1} + c_{n-k+1} I
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j) {
                BigInt s = 0;
                for (std::size_t l = 0; l < n; ++l) s += a[i * n + l] * mk[l * n + j];
                if (i == j) s += c[n - k + 1];
                tmp[i * n + j] = s;
            }
        mk.swap(tmp);
        BigInt tr = 0;
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t l = 0; l < n; ++l) tr += a[i * n + l] * mk[l * n + i];
        if (tr % static_cast<long>(k) != 0) throw std::logic_error("charpoly: inexact division");
        c[n - k] = -tr / static_cast<long>(k);
    }
    return c;
}

namespace detail {

using Poly = std::vector<Rational>;  // lowest degree first, no trailing zeros

inline void trim(Poly& p) {
    while (!p.empty() && p.back() == 0) p.pop_back();
}

inline Poly derivative(const Poly& p) {
    Poly d;
    for (std::size_t k = 1; k < p.size(); ++k) d.push_back(p[k] * static_cast<long>(k));
    trim(d);
    return d;
}

inline std::pair<Poly, Poly> divmod(Poly num, const Poly& den) {
    if (den.empty()) throw std::domain_error("polynomial division by zero");
    Poly quot(num.size() >= den.size() ? num.size() - den.size() + 1 : 0, Rational(0));
    while (num.size() >= den.size() && !num.empty()) {
        const std::size_t shift = num.size() - den.size();
        const Rational f = num.back() / den.back();
        quot[shift] = f;
        for (std::size_t k = 0; k < den.size(); ++k) num[shift + k] -= f * den[k];
        num.pop_back();
        trim(num);
    }
    trim(quot);
    return {quot, num};
}

inline Poly monic(Poly p) {
    if (p.empty()) return p;
    const Rational lead = p.back();
    for (auto& x : p) x /= lead;
    return p;
}

inline Poly gcd(Poly a, Poly b) {
    while (!b.empty()) {
        auto r = divmod(a, b).second;
        a = std::move(b);
        b = std::move(r);
    }
    return monic(a);
}

inline Rational eval(const Poly& p, const Rational& x) {
    Rational acc = 0;
    for (auto it = p.rbegin(); it != p.rend(); ++it) acc = acc * x + *it;
    return acc;
}

inline int sign(const Rational& x) { return x > 0 ? 1 : (x < 0 ? -1 : 0); }

class SturmChain {
public:
    explicit SturmChain(const Poly& p) {
        chain_.push_back(p);
        chain_.push_back(derivative(p));
        while (!chain_.back().empty()) {
            auto r = divmod(chain_[chain_.size() - 2], chain_.back()).second;
            for (auto& x : r) x = -x;
            chain_.push_back(std::move(r));
        }
        chain_.pop_back();
    }

    int variations(const Rational& x) const {
        int count = 0, prev = 0;
        for (const auto& p : chain_) {
            const int s = sign(eval(p, x));
            if (s == 0) continue;
            if (prev != 0 && s != prev) ++count;
            prev = s;
        }
        return count;
    }

    /// Distinct roots in (a, b].
    int roots_in(const Rational& a, const Rational& b) const { return variations(a) - variations(b); }

private:
    std::vector<Poly> chain_;
};

/// Roots of a square-free polynomial in (lo, hi], each bisected to width <= tol.
inline void isolate_roots(const SturmChain& sturm, Rational lo, Rational hi, int count, const Rational& tol,
                          std::vector<double>& out) {
    if (count == 0) return;
    if (count == 1) {
        while (hi - lo > tol) {
            const Rational mid = (lo + hi) / 2;
            if (sturm.roots_in(lo, mid) == 1) hi = mid; else lo = mid;
        }
        out.push_back(static_cast<double>((lo + hi) / 2));
        return;
    }
    const Rational mid = (lo + hi) / 2;
    const int left = sturm.roots_in(lo, mid);
    isolate_roots(sturm, lo, mid, left, tol, out);
    isolate_roots(sturm, mid, hi, count - left, tol, out);
}

}  // namespace detail

class BracketError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Eigenvalues of an integer symmetric matrix of order <= 6, ascending, with
/// multiplicity. Distinct roots of each square-free layer (p / gcd(p, p'),
/// then the same on gcd(p, p'), ...) are isolated by Sturm bisection on
/// [-1, 2n + 2], which brackets every Laplacian spectrum in scope.
inline std::vector<double> charpoly_eigenvalues(const IntMatrix& m, double tol = 1e-12) {
    const std::size_t n = m.dim();
    if (n > kMaxOracleOrder) throw std::invalid_argument("charpoly oracle supports order <= 6");
    if (!(tol > 0.0)) throw std::invalid_argument("charpoly oracle tolerance must be positive");

    detail::Poly p;
    for (const auto& c : charpoly_coefficients(m)) p.emplace_back(c);

    const Rational lo(-1);
    const Rational hi(static_cast<long>(2 * n + 2));
    const Rational width(tol);

    std::vector<double> roots;
    while (p.size() > 1) {
        const auto d = detail::gcd(p, detail::derivative(p));
        const auto square_free = detail::divmod(p, d).first;
        const detail::SturmChain sturm(square_free);
        const int expected = static_cast<int>(square_free.size()) - 1;
        const int found = sturm.roots_in(lo, hi);
        if (found != expected || detail::eval(square_free, lo) == 0)
            throw BracketError("charpoly oracle: " + std::to_string(expected - found) +
                               " root(s) outside the bracket [-1, " + std::to_string(2 * n + 2) + "]");
        detail::isolate_roots(sturm, lo, hi, found, width, roots);
        p = d;
    }
    std::sort(roots.begin(), roots.end());
    return roots;
}

}  // namespace loopspec
