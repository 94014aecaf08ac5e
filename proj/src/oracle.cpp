#include "pmax/oracle.hpp"

#include <algorithm>

namespace pmax {

namespace {

// Assignments in lexicographic order: the counter's most significant bit is
// variable 1, so the first optimum seen is the lexicographically least one.
Assignment assignment_from_counter(int n, std::uint64_t counter) {
    Assignment beta(n);
    for (int v = 1; v <= n; v++) beta.set(v, (counter >> (n - v)) & 1);
    return beta;
}

void check_var_guard(int n) {
    if (n < 0) throw Error("oracle: negative variable count");
    if (n > kOracleMaxVars) throw Error("oracle: variable count over brute-force guard");
}

template <typename CountFn>
BruteBest enumerate_best(int n, bool maximize, CountFn&& count) {
    check_var_guard(n);
    BruteBest best;
    bool first = true;
    for (std::uint64_t c = 0; c < (std::uint64_t(1) << n); c++) {
        Assignment beta = assignment_from_counter(n, c);
        std::int64_t value = count(beta);
        if (first || (maximize ? value > best.best : value < best.best)) {
            best.best = value;
            best.witness = beta;
            first = false;
        }
    }
    return best;
}

}  // namespace

BruteBest brute_max(const CnfFormula& f, const Mode& mode) {
    return enumerate_best(f.n, true,
                          [&](const Assignment& b) { return count_satisfied(b, f, mode); });
}

BruteBest brute_max(const DnfFormula& f, const Mode& mode) {
    return enumerate_best(f.n, true,
                          [&](const Assignment& b) { return count_satisfied(b, f, mode); });
}

BruteBest brute_min_sat(const CnfFormula& f) {
    return enumerate_best(f.n, false,
                          [&](const Assignment& b) { return count_satisfied(b, f, Mode::sat()); });
}

BruteWeightedBest brute_weighted(const WeightedCnf& f) {
    check_var_guard(f.n);
    BruteWeightedBest best;
    best.witness = Assignment(f.n);
    for (std::uint64_t c = 0; c < (std::uint64_t(1) << f.n); c++) {
        Assignment beta = assignment_from_counter(f.n, c);
        WeightedCount wc = weighted_count(beta, f);
        if (!wc.hard_ok) continue;
        if (!best.feasible || wc.soft > best.soft) {
            best.feasible = true;
            best.soft = wc.soft;
            best.witness = beta;
        }
    }
    return best;
}

BruteCover brute_vertex_cover(const Graph& g) {
    if (g.n > kOracleMaxCoverVertices) throw Error("oracle: vertex count over cover guard");
    int best_size = g.n + 1;
    std::uint32_t best_mask = 0;
    for (std::uint32_t mask = 0; mask < (std::uint32_t(1) << g.n); mask++) {
        bool covers = true;
        for (auto [u, v] : g.edges)
            if (!((mask >> u) & 1) && !((mask >> v) & 1)) {
                covers = false;
                break;
            }
        if (!covers) continue;
        int size = __builtin_popcount(mask);
        if (size < best_size || (size == best_size && mask < best_mask)) {
            best_size = size;
            best_mask = mask;
        }
    }
    BruteCover out;
    out.size = best_size;
    for (int v = 0; v < g.n; v++)
        if ((best_mask >> v) & 1) out.vertices.push_back(v);
    return out;
}

namespace {

// Plain DFS Ford-Fulkerson on a capacity matrix, kept independent of the
// flow module on purpose.
bool ff_dfs(int v, int t, std::vector<std::vector<std::int64_t>>& cap,
            std::vector<std::uint8_t>& seen) {
    if (v == t) return true;
    seen[v] = 1;
    for (int w = 0; w < int(cap.size()); w++) {
        if (seen[w] || cap[v][w] <= 0) continue;
        if (ff_dfs(w, t, cap, seen)) {
            cap[v][w]--;
            cap[w][v]++;
            return true;
        }
    }
    return false;
}

}  // namespace

std::int64_t brute_max_flow(const Network& net) {
    std::vector<std::vector<std::int64_t>> cap(net.n, std::vector<std::int64_t>(net.n, 0));
    for (auto [u, v] : net.arcs) cap[u][v]++;
    std::int64_t value = 0;
    while (true) {
        std::vector<std::uint8_t> seen(net.n, 0);
        if (!ff_dfs(net.s, net.t, cap, seen)) break;
        value++;
    }
    return value;
}

BruteHalfIntegral brute_halfintegral_vc(const Graph& g) {
    if (g.n > kOracleMaxHalfIntegralVertices)
        throw Error("oracle: vertex count over half-integral guard");
    std::vector<int> cur(g.n, 0);
    BruteHalfIntegral best;
    best.total_half_units = 2 * g.n + 1;
    while (true) {
        bool feasible = true;
        for (auto [u, v] : g.edges)
            if (cur[u] + cur[v] < 2) {
                feasible = false;
                break;
            }
        if (feasible) {
            int total = 0;
            for (int x : cur) total += x;
            // Enumeration is lexicographic with vertex 0 most significant, so
            // strict improvement keeps the lexicographically least optimum.
            if (total < best.total_half_units) {
                best.total_half_units = total;
                best.values = cur;
            }
        }
        // Mixed-radix increment, vertex 0 most significant.
        int i = g.n - 1;
        while (i >= 0 && cur[i] == 2) cur[i--] = 0;
        if (i < 0) break;
        cur[i]++;
    }
    if (best.values.empty() && g.n > 0) throw InternalError("half-integral: no feasible point");
    if (g.n == 0) best.total_half_units = 0;
    return best;
}

BruteAlmost brute_almost(const CnfFormula& f, const Mode& mode) {
    check_var_guard(f.n);
    if (f.m() > kOracleMaxAlmostClauses) throw Error("oracle: clause count over deletion guard");
    auto satisfiable_without = [&](const std::vector<int>& deleted) -> std::optional<Assignment> {
        CnfFormula rest;
        rest.n = f.n;
        std::size_t d = 0;
        for (int i = 0; i < f.m(); i++) {
            if (d < deleted.size() && deleted[d] == i) {
                d++;
                continue;
            }
            rest.clauses.push_back(f.clauses[std::size_t(i)]);
        }
        BruteBest b = brute_max(rest, mode);
        if (b.best == rest.m()) return b.witness;
        return std::nullopt;
    };
    // Subsets ordered by size, then lexicographically by index list; the set
    // bits of a mask read from the low end give ascending clause indices.
    for (int d = 0; d <= f.m(); d++) {
        std::vector<int> pick(d);
        for (int i = 0; i < d; i++) pick[i] = i;
        while (true) {
            if (auto beta = satisfiable_without(pick)) {
                BruteAlmost out;
                out.deletions = d;
                out.deleted = pick;
                out.witness = *beta;
                return out;
            }
            // Next combination in lexicographic order.
            int i = d - 1;
            while (i >= 0 && pick[i] == f.m() - d + i) i--;
            if (i < 0) break;
            pick[i]++;
            for (int j = i + 1; j < d; j++) pick[j] = pick[j - 1] + 1;
        }
    }
    throw InternalError("almost: deleting every clause still unsatisfiable");
}

}  // namespace pmax
