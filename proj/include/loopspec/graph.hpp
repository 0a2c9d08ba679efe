#pragma once

// Undirected graphs with self-loops (no multi-edges), component analysis
// and the pseudo-connectedness decision.

#include <algorithm>
#include <cstddef>
#include <numeric>
#include <set>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace loopspec {

/// 1-based vertex index, as used in edge-list files and on the CLI.
using Vertex = std::size_t;

/// An undirected edge stored canonically with `u <= v`; `u == v` is a self-loop.
struct Edge {
    Vertex u;
    Vertex v;

    constexpr bool is_loop() const noexcept { return u == v; }
    friend constexpr auto operator<=>(const Edge&, const Edge&) = default;
};

constexpr Edge make_edge(Vertex i, Vertex j) noexcept {
    return i <= j ? Edge{i, j} : Edge{j, i};
}

/// Finite undirected graph on vertices 1..n.
///
/// Edges keep their insertion order; that order is the row order of the
/// incidence matrix. The Laplacian only depends on the edge set.
class Graph {
public:
    explicit Graph(std::size_t n) : n_(n), degree_(n, 0) {
        if (n == 0) throw std::invalid_argument("graph needs at least one vertex");
    }

    std::size_t vertex_count() const noexcept { return n_; }
    std::size_t edge_count() const noexcept { return edges_.size(); }
    const std::vector<Edge>& edges() const noexcept { return edges_; }

    /// Adds {i, j}. Rejects out-of-range endpoints and duplicates, including a
    /// second loop at the same vertex.
    Graph& add_edge(Vertex i, Vertex j) {
        if (i < 1 || i > n_ || j < 1 || j > n_) {
            throw std::out_of_range("edge (" + std::to_string(i) + "," + std::to_string(j) +
                                    ") outside vertex range [1," + std::to_string(n_) + "]");
        }
        const Edge e = make_edge(i, j);
        if (!index_.insert(e).second) {
            throw std::invalid_argument("duplicate edge (" + std::to_string(e.u) + "," +
                                        std::to_string(e.v) + ")");
        }
        edges_.push_back(e);
        ++degree_[e.u - 1];
        if (!e.is_loop()) ++degree_[e.v - 1];
        if (e.is_loop()) ++loops_;
        return *this;
    }

    bool has_edge(Vertex i, Vertex j) const { return index_.contains(make_edge(i, j)); }
    bool has_loop(Vertex i) const { return has_edge(i, i); }

    /// Incident non-loop edges plus one per self-loop.
    std::size_t degree(Vertex i) const { return degree_.at(i - 1); }

    std::size_t self_loop_count() const noexcept { return loops_; }

    /// Same edge set, regardless of insertion order.
    friend bool operator==(const Graph& a, const Graph& b) {
        return a.n_ == b.n_ && a.index_ == b.index_;
    }

private:
    std::size_t n_;
    std::vector<Edge> edges_;
    std::set<Edge> index_;
    std::vector<std::size_t> degree_;
    std::size_t loops_ = 0;
};

inline Graph new_graph(std::size_t n) { return Graph(n); }

inline Graph add_edge(Graph g, Vertex i, Vertex j) {
    g.add_edge(i, j);
    return g;
}

/// G°: same vertices, every non-loop edge in its original order.
inline Graph strip_self_loops(const Graph& g) {
    Graph out(g.vertex_count());
    for (const Edge& e : g.edges()) {
        if (!e.is_loop()) out.add_edge(e.u, e.v);
    }
    return out;
}

inline std::size_t max_degree(const Graph& g) {
    std::size_t best = 0;
    for (Vertex i = 1; i <= g.vertex_count(); ++i) best = std::max(best, g.degree(i));
    return best;
}

struct ComponentPartition {
    /// labels[i-1] in [1, count] for vertex i; numbered by smallest member.
    std::vector<std::size_t> labels;
    std::size_t count = 0;

    std::size_t label_of(Vertex i) const { return labels.at(i - 1); }
};

/// Components under non-loop reachability. Self-loops never merge anything,
/// so isolated vertices are singletons whether or not they carry a loop.
inline ComponentPartition connected_components(const Graph& g) {
    const std::size_t n = g.vertex_count();
    std::vector<std::size_t> parent(n);
    std::iota(parent.begin(), parent.end(), std::size_t{0});
    auto find = [&](std::size_t x) {
        while (parent[x] != x) {
            parent[x] = parent[parent[x]];
            x = parent[x];
        }
        return x;
    };
    for (const Edge& e : g.edges()) {
        if (e.is_loop()) continue;
        auto a = find(e.u - 1);
        auto b = find(e.v - 1);
        if (a != b) parent[std::max(a, b)] = std::min(a, b);
    }

    ComponentPartition part;
    part.labels.assign(n, 0);
    std::vector<std::size_t> root_label(n, 0);
    for (std::size_t i = 0; i < n; ++i) {
        auto r = find(i);
        if (root_label[r] == 0) root_label[r] = ++part.count;
        part.labels[i] = root_label[r];
    }
    return part;
}

inline bool is_connected(const Graph& g) { return connected_components(g).count == 1; }

/// Every vertex has an incident edge (a loop counts) and every maximal
/// connected component carries at least one self-loop.
inline bool is_pseudo_connected(const Graph& g) {
    for (Vertex i = 1; i <= g.vertex_count(); ++i) {
        if (g.degree(i) == 0) return false;
    }
    const auto part = connected_components(g);
    std::vector<bool> looped(part.count + 1, false);
    for (const Edge& e : g.edges()) {
        if (e.is_loop()) looped[part.label_of(e.u)] = true;
    }
    return std::all_of(looped.begin() + 1, looped.end(), [](bool b) { return b; });
}

}  // namespace loopspec
