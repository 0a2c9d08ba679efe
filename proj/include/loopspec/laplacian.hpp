#pragma once

// Incidence matrices and Laplacians of graphs with self-loops.
//
// Three assemblies are provided and must agree exactly for every graph:
//   laplacian_of      sum of (e_i - e_j)(e_i - e_j)^T over edges, plus e_i e_i^T per loop
//   gram              E^T E for the incidence matrix E
//   degree_adjacency  D - A

#include <cstdint>
#include <utility>

#include "loopspec/graph.hpp"
#include "loopspec/matrix.hpp"

namespace loopspec {

/// Edge-by-vertex matrix with entries in {-1, 0, +1}. A non-loop edge {p, q},
/// p < q, has +1 in column p and -1 in column q; a loop at p has a single +1.
using IncidenceMatrix = DenseMatrix<int>;

inline IncidenceMatrix incidence_matrix(const Graph& g) {
    IncidenceMatrix e(g.edge_count(), g.vertex_count());
    for (std::size_t r = 0; r < g.edges().size(); ++r) {
        const Edge& ed = g.edges()[r];
        e(r, ed.u - 1) = 1;
        if (!ed.is_loop()) e(r, ed.v - 1) = -1;
    }
    return e;
}

/// EᵀE.
inline IntMatrix gram(const IncidenceMatrix& e) {
    IntMatrix out(e.cols());
    for (std::size_t i = 0; i < e.cols(); ++i) {
        for (std::size_t j = i; j < e.cols(); ++j) {
            std::int64_t s = 0;
            for (std::size_t r = 0; r < e.rows(); ++r) s += std::int64_t{e(r, i)} * e(r, j);
            out.set(i, j, s);
        }
    }
    return out;
}

inline IntMatrix laplacian_of(const Graph& g) {
    IntMatrix lap(g.vertex_count());
    for (const Edge& e : g.edges()) {
        const auto i = e.u - 1;
        const auto j = e.v - 1;
        lap.add(i, i, 1);
        if (!e.is_loop()) {
            lap.add(j, j, 1);
            lap.add(i, j, -1);
        }
    }
    return lap;
}

/// Q₀ = Σ e_i e_iᵀ over self-loops (i, i).
inline IntMatrix self_loop_matrix(const Graph& g) {
    IntMatrix q(g.vertex_count());
    for (const Edge& e : g.edges())
        if (e.is_loop()) q.add(e.u - 1, e.u - 1, 1);
    return q;
}

struct DegreeAdjacency {
    IntMatrix degree;
    IntMatrix adjacency;
};

/// D carries the degree of each vertex with a loop counting once; A has zero
/// diagonal, so D - A == EᵀE for every graph.
inline DegreeAdjacency degree_adjacency(const Graph& g) {
    DegreeAdjacency da{IntMatrix(g.vertex_count()), IntMatrix(g.vertex_count())};
    for (Vertex i = 1; i <= g.vertex_count(); ++i)
        da.degree.set(i - 1, i - 1, static_cast<std::int64_t>(g.degree(i)));
    for (const Edge& e : g.edges())
        if (!e.is_loop()) da.adjacency.set(e.u - 1, e.v - 1, 1);
    return da;
}

}  // namespace loopspec
