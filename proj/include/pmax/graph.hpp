#pragma once

#include <utility>
#include <vector>

#include "pmax/common.hpp"

namespace pmax {

// Simple undirected graph on vertices 0..n-1. Edges are stored with u < v,
// sorted and deduplicated; self-loops are rejected.
struct Graph {
    int n = 0;
    std::vector<std::pair<int, int>> edges;

    Graph() = default;
    Graph(int n_, std::vector<std::pair<int, int>> e);

    int m() const { return int(edges.size()); }
    bool has_edge(int u, int v) const;
    std::vector<std::vector<int>> adjacency() const;
    std::vector<int> degrees() const;

    // Induced subgraph on the complement of `removed`; keep[i] receives the
    // old id of new vertex i.
    Graph without(const std::vector<int>& removed, std::vector<int>* keep = nullptr) const;

    bool operator==(const Graph& g) const { return n == g.n && edges == g.edges; }
};

Graph parse_dimacs_edge(const std::string& text);
std::string to_dimacs_edge(const Graph& g);

// Edge lists "u v" per line, vertices 0-based, for matchings.
std::vector<std::pair<int, int>> parse_edge_list(const std::string& text, int n);

// Undirected multigraph; parallel edges and self-loops (u == v) are allowed.
// Vertices carry an alive flag so ids stay stable under deletions.
struct Multigraph {
    int n = 0;
    std::vector<std::pair<int, int>> edges;
    std::vector<std::uint8_t> alive;

    Multigraph() = default;
    explicit Multigraph(const Graph& g);
    Multigraph(int n_, std::vector<std::pair<int, int>> e);

    // Self-loops contribute 2 to the degree.
    std::vector<int> degrees() const;
    bool has_loop_at(int v) const;
    void remove_vertex(int v);
    int alive_count() const;
    int edge_count() const { return int(edges.size()); }

    // True if some cycle exists (a self-loop and a parallel pair both count).
    bool has_cycle() const;
};

}  // namespace pmax
