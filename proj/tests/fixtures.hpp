#pragma once

#include <utility>
#include <vector>

#include "pmax/flow.hpp"
#include "pmax/graph.hpp"

// Shared hand-checked instances. The five-vertex graph is two triangles
// glued at c plus the d-e edge; its minimum vertex cover is 3, its
// fractional matching/cover optimum is 2.5, and the derived bipartite
// network has maximum flow 5.

inline pmax::Graph figure_graph() {
    return pmax::Graph(5, {{0, 1}, {0, 2}, {1, 2}, {2, 3}, {2, 4}, {3, 4}});
}

// Bipartite doubling of a graph: s=0, t=1, left copy u1=2+u, right copy
// u2=2+n+u; arcs s->u1, u1->v2 and v1->u2 per edge, u2->t.
inline pmax::Network doubled_cover_network(const pmax::Graph& g) {
    std::vector<std::pair<int, int>> arcs;
    auto left = [&](int v) { return 2 + v; };
    auto right = [&](int v) { return 2 + g.n + v; };
    for (int v = 0; v < g.n; v++) arcs.emplace_back(0, left(v));
    for (auto [u, v] : g.edges) {
        arcs.emplace_back(left(u), right(v));
        arcs.emplace_back(left(v), right(u));
    }
    for (int v = 0; v < g.n; v++) arcs.emplace_back(right(v), 1);
    return pmax::Network(2 + 2 * g.n, std::move(arcs), 0, 1);
}

inline pmax::Network figure_network() { return doubled_cover_network(figure_graph()); }
