#include "pmax/graph.hpp"

#include <algorithm>
#include <sstream>
#include <string>

namespace pmax {

Graph::Graph(int n_, std::vector<std::pair<int, int>> e) : n(n_) {
    if (n < 0) throw Error("graph: negative vertex count");
    for (auto& [u, v] : e) {
        if (u < 0 || u >= n || v < 0 || v >= n) throw Error("graph: vertex out of range");
        if (u == v) throw Error("graph: self-loop");
        if (u > v) std::swap(u, v);
    }
    std::sort(e.begin(), e.end());
    e.erase(std::unique(e.begin(), e.end()), e.end());
    edges = std::move(e);
}

bool Graph::has_edge(int u, int v) const {
    if (u > v) std::swap(u, v);
    return std::binary_search(edges.begin(), edges.end(), std::make_pair(u, v));
}

std::vector<std::vector<int>> Graph::adjacency() const {
    std::vector<std::vector<int>> adj(n);
    for (auto [u, v] : edges) {
        adj[u].push_back(v);
        adj[v].push_back(u);
    }
    return adj;
}

std::vector<int> Graph::degrees() const {
    std::vector<int> deg(n, 0);
    for (auto [u, v] : edges) {
        deg[u]++;
        deg[v]++;
    }
    return deg;
}

Graph Graph::without(const std::vector<int>& removed, std::vector<int>* keep) const {
    std::vector<std::uint8_t> gone(n, 0);
    for (int v : removed) {
        if (v < 0 || v >= n) throw Error("graph: removed vertex out of range");
        gone[v] = 1;
    }
    std::vector<int> new_id(n, -1);
    std::vector<int> old_id;
    for (int v = 0; v < n; v++) {
        if (!gone[v]) {
            new_id[v] = int(old_id.size());
            old_id.push_back(v);
        }
    }
    std::vector<std::pair<int, int>> kept;
    for (auto [u, v] : edges)
        if (!gone[u] && !gone[v]) kept.emplace_back(new_id[u], new_id[v]);
    if (keep) *keep = old_id;
    return Graph(int(old_id.size()), std::move(kept));
}

Graph parse_dimacs_edge(const std::string& text) {
    std::istringstream in(text);
    std::string line;
    int n = -1;
    long long m_decl = -1;
    std::vector<std::pair<int, int>> edges;
    while (std::getline(in, line)) {
        std::istringstream ls(line);
        std::string head;
        if (!(ls >> head)) continue;
        if (head == "c") continue;
        if (head == "p") {
            std::string kind;
            if (!(ls >> kind >> n >> m_decl) || kind != "edge")
                throw Error("graph parse: bad problem line");
            if (n < 0 || m_decl < 0) throw Error("graph parse: negative counts");
            continue;
        }
        if (head == "e") {
            if (n < 0) throw Error("graph parse: edge before problem line");
            int u, v;
            if (!(ls >> u >> v)) throw Error("graph parse: bad edge line");
            if (u < 1 || u > n || v < 1 || v > n) throw Error("graph parse: vertex out of range");
            if (u == v) throw Error("graph parse: self-loop");
            edges.emplace_back(u - 1, v - 1);
            continue;
        }
        throw Error("graph parse: unknown line '" + head + "'");
    }
    if (n < 0) throw Error("graph parse: missing problem line");
    Graph g(n, std::move(edges));
    if (m_decl >= 0 && g.m() != m_decl)
        throw Error("graph parse: edge count mismatch (duplicates removed or lines missing)");
    return g;
}

std::string to_dimacs_edge(const Graph& g) {
    std::ostringstream out;
    out << "p edge " << g.n << " " << g.m() << "\n";
    for (auto [u, v] : g.edges) out << "e " << (u + 1) << " " << (v + 1) << "\n";
    return out.str();
}

std::vector<std::pair<int, int>> parse_edge_list(const std::string& text, int n) {
    std::istringstream in(text);
    std::vector<std::pair<int, int>> out;
    int u, v;
    while (in >> u >> v) {
        if (u < 0 || u >= n || v < 0 || v >= n) throw Error("edge list: vertex out of range");
        out.emplace_back(u, v);
    }
    if (!in.eof()) throw Error("edge list: trailing tokens");
    return out;
}

Multigraph::Multigraph(const Graph& g) : n(g.n), edges(g.edges), alive(g.n, 1) {}

Multigraph::Multigraph(int n_, std::vector<std::pair<int, int>> e) : n(n_), alive(n_, 1) {
    if (n < 0) throw Error("multigraph: negative vertex count");
    for (auto& [u, v] : e) {
        if (u < 0 || u >= n || v < 0 || v >= n) throw Error("multigraph: vertex out of range");
        if (u > v) std::swap(u, v);
    }
    edges = std::move(e);
}

std::vector<int> Multigraph::degrees() const {
    std::vector<int> deg(n, 0);
    for (auto [u, v] : edges) {
        deg[u]++;
        deg[v]++;
    }
    return deg;
}

bool Multigraph::has_loop_at(int v) const {
    for (auto [a, b] : edges)
        if (a == v && b == v) return true;
    return false;
}

void Multigraph::remove_vertex(int v) {
    if (v < 0 || v >= n || !alive[v]) throw InternalError("multigraph: removing dead vertex");
    alive[v] = 0;
    edges.erase(std::remove_if(edges.begin(), edges.end(),
                               [v](const std::pair<int, int>& e) {
                                   return e.first == v || e.second == v;
                               }),
                edges.end());
}

int Multigraph::alive_count() const {
    int c = 0;
    for (auto a : alive) c += a;
    return c;
}

bool Multigraph::has_cycle() const {
    // Union-find; a loop or an edge inside one component closes a cycle.
    std::vector<int> parent(n);
    for (int i = 0; i < n; i++) parent[i] = i;
    auto find = [&](int x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    };
    for (auto [u, v] : edges) {
        int ru = find(u), rv = find(v);
        if (ru == rv) return true;
        parent[ru] = rv;
    }
    return false;
}

}  // namespace pmax
