#pragma once

// The lifted graph: a loopless graph on 2N+1 vertices that carries the
// spectrum of a graph with self-loops.
//
// Vertex i of the base appears twice, as i and i+N+1. A middle vertex N+1
// sits between the copies. Each non-loop edge {i, j} is mirrored into both
// copies, and each loop (i, i) becomes the two spokes {i, N+1} and
// {N+1, i+N+1}.

#include <cstdint>
#include <vector>

#include "loopspec/graph.hpp"
#include "loopspec/laplacian.hpp"

namespace loopspec {

struct LiftedGraph {
    Graph base;
    Graph lifted;
    Vertex middle;

    /// Vertex in the mirrored copy corresponding to base vertex i.
    Vertex mirror(Vertex i) const { return i + middle; }
};

/// Edge order: non-loop base edges, their mirrored copies, then one pair of
/// spokes per loop (in base order).
inline LiftedGraph lift(const Graph& g) {
    const std::size_t n = g.vertex_count();
    const Vertex middle = n + 1;
    Graph lifted(2 * n + 1);
    for (const Edge& e : g.edges())
        if (!e.is_loop()) lifted.add_edge(e.u, e.v);
    for (const Edge& e : g.edges())
        if (!e.is_loop()) lifted.add_edge(e.u + middle, e.v + middle);
    for (const Edge& e : g.edges()) {
        if (!e.is_loop()) continue;
        lifted.add_edge(e.u, middle);
        lifted.add_edge(middle, e.u + middle);
    }
    return LiftedGraph{g, std::move(lifted), middle};
}

/// The blocks E° (non-loop rows) and S (loop rows, single +1) of the base
/// incidence matrix. Stacking [E°; S] reproduces incidence_matrix(base) up to
/// row order.
struct LiftBlocks {
    IncidenceMatrix loopless;
    IncidenceMatrix loops;
};

inline LiftBlocks lifted_incidence_blocks(const LiftedGraph& lg) {
    const Graph& g = lg.base;
    const auto n = g.vertex_count();
    const auto q = g.self_loop_count();
    LiftBlocks b{IncidenceMatrix(g.edge_count() - q, n), IncidenceMatrix(q, n)};
    std::size_t r0 = 0, r1 = 0;
    for (const Edge& e : g.edges()) {
        if (e.is_loop()) {
            b.loops(r1++, e.u - 1) = 1;
        } else {
            b.loopless(r0, e.u - 1) = 1;
            b.loopless(r0++, e.v - 1) = -1;
        }
    }
    return b;
}

/// Lifted incidence matrix assembled from the blocks, columns ordered
/// [base copy | middle | mirrored copy]:
///
///     [ E°  0   0  ]
///     [ S  -1   0  ]
///     [ 0   1  -S  ]
///     [ 0   0   E° ]
///
/// Signs follow the +1-at-smaller-index convention, so this equals the
/// incidence matrix of `lg.lifted` up to row order.
inline IncidenceMatrix block_lifted_incidence(const LiftBlocks& b) {
    const std::size_t n = b.loopless.cols();
    const std::size_t m0 = b.loopless.rows();
    const std::size_t q = b.loops.rows();
    IncidenceMatrix out(2 * m0 + 2 * q, 2 * n + 1);
    const std::size_t mid = n;
    const std::size_t off = n + 1;
    for (std::size_t r = 0; r < m0; ++r)
        for (std::size_t c = 0; c < n; ++c) {
            out(r, c) = b.loopless(r, c);
            out(m0 + 2 * q + r, off + c) = b.loopless(r, c);
        }
    for (std::size_t r = 0; r < q; ++r) {
        for (std::size_t c = 0; c < n; ++c) {
            out(m0 + r, c) = b.loops(r, c);
            out(m0 + q + r, off + c) = -b.loops(r, c);
        }
        out(m0 + r, mid) = -1;
        out(m0 + q + r, mid) = 1;
    }
    return out;
}

/// Sᵀ𝟙: per base vertex, 1 if it carries a loop.
inline std::vector<std::int64_t> loop_indicator(const LiftBlocks& b) {
    std::vector<std::int64_t> s(b.loops.cols(), 0);
    for (std::size_t r = 0; r < b.loops.rows(); ++r)
        for (std::size_t c = 0; c < b.loops.cols(); ++c) s[c] += b.loops(r, c);
    return s;
}

}  // namespace loopspec
