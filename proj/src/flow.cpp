#include "pmax/flow.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <sstream>

namespace pmax {

Network::Network(int n_, std::vector<std::pair<int, int>> arcs_, int s_, int t_)
    : n(n_), arcs(std::move(arcs_)), s(s_), t(t_) {
    if (n < 0) throw Error("network: negative vertex count");
    if (s < 0 || s >= n || t < 0 || t >= n) throw Error("network: source or sink out of range");
    if (s == t) throw Error("network: source equals sink");
    std::vector<std::pair<int, int>> seen;
    seen.reserve(arcs.size());
    for (auto [u, v] : arcs) {
        if (u < 0 || u >= n || v < 0 || v >= n) throw Error("network: arc endpoint out of range");
        if (u == v) throw Error("network: self-arc");
        seen.emplace_back(std::min(u, v), std::max(u, v));
    }
    std::sort(seen.begin(), seen.end());
    if (std::adjacent_find(seen.begin(), seen.end()) != seen.end())
        throw Error("network: parallel or antiparallel arc pair");
}

int Network::arc_index(int u, int v) const {
    for (int i = 0; i < int(arcs.size()); i++)
        if (arcs[i].first == u && arcs[i].second == v) return i;
    return -1;
}

void validate_flow(const Network& net, const UnitFlow& f) {
    if (int(f.on.size()) != net.arc_count()) throw Error("flow: arc count mismatch");
    std::vector<std::int64_t> balance(net.n, 0);
    for (int i = 0; i < net.arc_count(); i++) {
        if (f.on[i] > 1) throw Error("flow: value outside {0,1}");
        if (!f.on[i]) continue;
        balance[net.arcs[i].first]--;
        balance[net.arcs[i].second]++;
    }
    for (int v = 0; v < net.n; v++)
        if (v != net.s && v != net.t && balance[v] != 0)
            throw Error("flow: conservation violated at vertex " + std::to_string(v));
}

int flow_value(const Network& net, const UnitFlow& f) {
    int value = 0;
    for (int i = 0; i < net.arc_count(); i++) {
        if (!f.on[i]) continue;
        if (net.arcs[i].first == net.s) value++;
        if (net.arcs[i].second == net.s) value--;
    }
    return value;
}

ResidualGraph build_residual(const Network& net, const UnitFlow& f) {
    validate_flow(net, f);
    ResidualGraph g;
    g.n = net.n;
    g.arcs.reserve(net.arcs.size());
    for (int i = 0; i < net.arc_count(); i++) {
        auto [u, v] = net.arcs[i];
        if (f.on[i])
            g.arcs.emplace_back(v, u);
        else
            g.arcs.emplace_back(u, v);
    }
    return g;
}

std::optional<std::vector<int>> shortest_path(int n, const std::vector<std::pair<int, int>>& arcs,
                                              int s, int t) {
    if (s < 0 || s >= n || t < 0 || t >= n) throw Error("shortest_path: endpoint out of range");
    if (s == t) return std::vector<int>{s};
    std::vector<std::vector<int>> fwd(n), rev(n);
    for (auto [u, v] : arcs) {
        if (u < 0 || u >= n || v < 0 || v >= n) throw Error("shortest_path: arc out of range");
        fwd[u].push_back(v);
        rev[v].push_back(u);
    }
    // Distance to t via reverse BFS; then walk from s, always taking the
    // smallest next vertex that is one step closer.
    const int inf = -1;
    std::vector<int> dist(n, inf);
    std::deque<int> queue{t};
    dist[t] = 0;
    while (!queue.empty()) {
        int v = queue.front();
        queue.pop_front();
        for (int u : rev[v])
            if (dist[u] == inf) {
                dist[u] = dist[v] + 1;
                queue.push_back(u);
            }
    }
    if (dist[s] == inf) return std::nullopt;
    for (auto& adj : fwd) std::sort(adj.begin(), adj.end());
    std::vector<int> path{s};
    int cur = s;
    while (cur != t) {
        int next = -1;
        for (int w : fwd[cur])
            if (dist[w] == dist[cur] - 1) {
                next = w;
                break;
            }
        if (next == -1) throw InternalError("shortest_path: dead end on a BFS layer");
        path.push_back(next);
        cur = next;
    }
    return path;
}

std::optional<std::vector<int>> shortest_path(const ResidualGraph& g, int s, int t) {
    return shortest_path(g.n, g.arcs, s, t);
}

UnitFlow augment(const Network& net, const UnitFlow& f) {
    ResidualGraph g = build_residual(net, f);
    auto path = shortest_path(g, net.s, net.t);
    if (!path) return f;
    UnitFlow out = f;
    std::map<std::pair<int, int>, int> index;
    for (int i = 0; i < net.arc_count(); i++) index[net.arcs[i]] = i;
    for (std::size_t i = 0; i + 1 < path->size(); i++) {
        int a = (*path)[i], b = (*path)[i + 1];
        auto it = index.find({a, b});
        if (it != index.end() && !out.on[it->second]) {
            out.on[it->second] = 1;
            continue;
        }
        it = index.find({b, a});
        if (it != index.end() && out.on[it->second]) {
            out.on[it->second] = 0;
            continue;
        }
        throw InternalError("augment: residual path step without a matching arc");
    }
    return out;
}

UnitFlow flow_of_value_k(const Network& net, std::int64_t k, std::int64_t* augment_calls) {
    return flow_update(net, UnitFlow(net.arc_count()), k, augment_calls);
}

UnitFlow flow_update(const Network& net, const UnitFlow& f, std::int64_t k,
                     std::int64_t* augment_calls) {
    validate_flow(net, f);
    if (k < 0) throw Error("flow: negative round count");
    UnitFlow cur = f;
    std::int64_t calls = 0;
    for (std::int64_t i = 0; i < k; i++) {
        // Reachability gate keeps the call count at exactly min(k, maxflow).
        if (!shortest_path(build_residual(net, cur), net.s, net.t)) break;
        cur = augment(net, cur);
        calls++;
    }
    if (augment_calls) *augment_calls = calls;
    return cur;
}

NormalizedNetwork normalize_capacities(const CapNetwork& cnet) {
    if (cnet.n < 0) throw Error("normalize: negative vertex count");
    if (cnet.s < 0 || cnet.s >= cnet.n || cnet.t < 0 || cnet.t >= cnet.n)
        throw Error("normalize: source or sink out of range");
    for (const auto& a : cnet.arcs) {
        if (a.u < 0 || a.u >= cnet.n || a.v < 0 || a.v >= cnet.n)
            throw Error("normalize: arc endpoint out of range");
        if (a.cap == 0) throw Error("normalize: zero capacity");
    }
    int next = cnet.n;
    std::vector<std::pair<int, int>> arcs;
    std::vector<int> origin;
    for (int j = 0; j < int(cnet.arcs.size()); j++) {
        const auto& a = cnet.arcs[j];
        for (std::uint64_t c = 0; c < a.cap; c++) {
            if (a.u != a.v) {
                int mid = next++;
                arcs.emplace_back(a.u, mid);
                arcs.emplace_back(mid, a.v);
                origin.push_back(j);
                origin.push_back(j);
            } else {
                // Two midpoints keep a self-arc off the antiparallel case.
                int m1 = next++, m2 = next++;
                arcs.emplace_back(a.u, m1);
                arcs.emplace_back(m1, m2);
                arcs.emplace_back(m2, a.v);
                origin.push_back(j);
                origin.push_back(j);
                origin.push_back(j);
            }
        }
    }
    NormalizedNetwork nn;
    nn.net = Network(next, std::move(arcs), cnet.s, cnet.t);
    nn.arc_origin = std::move(origin);
    nn.original_n = cnet.n;
    return nn;
}

std::vector<std::uint64_t> flow_per_origin(const NormalizedNetwork& nn, const UnitFlow& f,
                                           int origin_count) {
    validate_flow(nn.net, f);
    std::vector<std::uint64_t> total(std::size_t(origin_count), 0);
    for (int i = 0; i < nn.net.arc_count(); i++) {
        if (!f.on[i]) continue;
        int j = nn.arc_origin[i];
        if (j < 0 || j >= origin_count) throw InternalError("flow_per_origin: bad origin index");
        // A unit arc is the first half of its subdivision exactly when its
        // tail is an original vertex, so each throughput unit counts once.
        if (nn.net.arcs[i].first < nn.original_n) total[std::size_t(j)]++;
    }
    return total;
}

Network parse_network(const std::string& text) {
    std::istringstream in(text);
    std::string line;
    int n = -1, s = -1, t = -1;
    long long m_decl = -1;
    std::vector<std::pair<int, int>> arcs;
    while (std::getline(in, line)) {
        std::istringstream ls(line);
        std::string head;
        if (!(ls >> head)) continue;
        if (head == "c") continue;
        if (head == "p") {
            std::string kind;
            if (!(ls >> kind >> n >> m_decl) || kind != "max")
                throw Error("network parse: bad problem line");
            if (n < 0 || m_decl < 0) throw Error("network parse: negative counts");
            continue;
        }
        if (head == "n") {
            if (!(ls >> s >> t)) throw Error("network parse: bad source/sink line");
            continue;
        }
        if (head == "a") {
            if (n < 0) throw Error("network parse: arc before problem line");
            int u, v;
            if (!(ls >> u >> v)) throw Error("network parse: bad arc line");
            if (u < 1 || u > n || v < 1 || v > n)
                throw Error("network parse: arc endpoint out of range");
            arcs.emplace_back(u - 1, v - 1);
            continue;
        }
        throw Error("network parse: unknown line '" + head + "'");
    }
    if (n < 0) throw Error("network parse: missing problem line");
    if (s < 0) throw Error("network parse: missing source/sink line");
    if (s < 1 || s > n || t < 1 || t > n) throw Error("network parse: source or sink out of range");
    if (m_decl != (long long)arcs.size()) throw Error("network parse: arc count mismatch");
    return Network(n, std::move(arcs), s - 1, t - 1);
}

std::string to_network_text(const Network& net) {
    std::ostringstream out;
    out << "p max " << net.n << " " << net.arc_count() << "\n";
    out << "n " << (net.s + 1) << " " << (net.t + 1) << "\n";
    for (auto [u, v] : net.arcs) out << "a " << (u + 1) << " " << (v + 1) << "\n";
    return out.str();
}

}  // namespace pmax
