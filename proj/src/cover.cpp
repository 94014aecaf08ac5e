#include "pmax/cover.hpp"

#include <algorithm>

#include "pmax/engine.hpp"

namespace pmax {

namespace {

bool is_tautological(const std::vector<Literal>& distinct) {
    for (std::size_t i = 1; i < distinct.size(); ++i)
        if (distinct[i].var == distinct[i - 1].var) return true;
    return false;
}

struct SearchNode {
    std::vector<int> taken;
    int budget = 0;
};

}  // namespace

BussKernel buss_kernel(const Graph& g, int k) {
    if (k < 0) throw Error("buss_kernel: k must be nonnegative");
    BussKernel out;
    std::vector<int> deg = g.degrees();
    for (int v = 0; v < g.n; ++v)
        if (deg[v] > k) out.forced.push_back(v);
    if (int(out.forced.size()) > k) {
        out.reject = true;
        return out;
    }

    std::vector<int> keep_mid;
    Graph mid = g.without(out.forced, &keep_mid);
    std::vector<int> isolated;
    std::vector<int> mid_deg = mid.degrees();
    for (int v = 0; v < mid.n; ++v)
        if (mid_deg[v] == 0) isolated.push_back(v);
    std::vector<int> keep_kernel;
    out.kernel = mid.without(isolated, &keep_kernel);
    out.original_vertex.reserve(keep_kernel.size());
    for (int v : keep_kernel)
        out.original_vertex.push_back(keep_mid[std::size_t(v)]);

    std::int64_t bound = std::int64_t(k) * k;
    if (out.kernel.m() > bound || out.kernel.n > bound + k) out.reject = true;
    return out;
}

std::optional<std::vector<int>> vertex_cover(const Graph& g, int k) {
    BussKernel kern = buss_kernel(g, k);
    if (kern.reject) return std::nullopt;
    const int budget = k - int(kern.forced.size());

    const Graph& kg = kern.kernel;
    auto taken_has = [](const std::vector<int>& taken, int v) {
        return std::find(taken.begin(), taken.end(), v) != taken.end();
    };
    using Result = StepResult<std::vector<int>, SearchNode>;
    auto step = [&](const SearchNode& node) -> Result {
        const std::pair<int, int>* open = nullptr;
        for (const auto& e : kg.edges) {
            if (!taken_has(node.taken, e.first) && !taken_has(node.taken, e.second)) {
                open = &e;
                break;
            }
        }
        if (!open) return Result::decide(node.taken);
        if (node.budget == 0) return Result::prune();
        SearchNode left{node.taken, node.budget - 1};
        left.taken.push_back(open->first);
        SearchNode right{node.taken, node.budget - 1};
        right.taken.push_back(open->second);
        std::vector<SearchNode> children;
        children.push_back(std::move(left));
        children.push_back(std::move(right));
        return Result::expand(std::move(children));
    };

    std::optional<std::vector<int>> verdict = run_rounds<std::vector<int>, SearchNode>(
        {SearchNode{{}, budget}}, step, std::int64_t(budget) + 1, 2);
    if (!verdict) return std::nullopt;

    std::vector<int> cover = kern.forced;
    for (int v : *verdict) cover.push_back(kern.original_vertex[std::size_t(v)]);
    std::sort(cover.begin(), cover.end());
    if (int(cover.size()) > k)
        throw InternalError("vertex_cover: assembled cover exceeds the budget");
    for (const auto& [u, v] : g.edges)
        if (!std::binary_search(cover.begin(), cover.end(), u) &&
            !std::binary_search(cover.begin(), cover.end(), v))
            throw InternalError("vertex_cover: assembled cover misses an edge");
    return cover;
}

Graph minsat_graph(const CnfFormula& f) {
    const int m = f.m();
    std::vector<std::vector<Literal>> distinct(std::size_t(m));
    std::vector<char> taut(std::size_t(m), 0);
    for (int i = 0; i < m; ++i) {
        distinct[std::size_t(i)] = distinct_literals(f.clauses[std::size_t(i)]);
        taut[std::size_t(i)] = is_tautological(distinct[std::size_t(i)]);
    }
    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i < m; ++i) {
        if (taut[std::size_t(i)]) continue;
        for (int j = i + 1; j < m; ++j) {
            if (taut[std::size_t(j)]) continue;
            bool conflict = false;
            for (const Literal& l : distinct[std::size_t(i)]) {
                if (std::binary_search(distinct[std::size_t(j)].begin(),
                                       distinct[std::size_t(j)].end(),
                                       Literal{l.var, !l.neg})) {
                    conflict = true;
                    break;
                }
            }
            if (conflict) edges.emplace_back(i, j);
        }
    }
    return Graph(m, std::move(edges));
}

MinSatAnswer solve_min_sat(const CnfFormula& f, std::int64_t k) {
    if (k < 0) throw Error("solve_min_sat: k must be nonnegative");
    std::int64_t taut_count = 0;
    for (const Clause& c : f.clauses)
        if (is_tautological(distinct_literals(c))) ++taut_count;
    // Tautological clauses are satisfied no matter what.
    if (k - taut_count < 0) return MinSatAnswer{false, std::nullopt};

    Graph g = minsat_graph(f);
    int budget = int(std::min<std::int64_t>(k - taut_count, f.m()));
    std::optional<std::vector<int>> cover = vertex_cover(g, budget);
    if (!cover) return MinSatAnswer{false, std::nullopt};

    std::vector<char> in_cover(std::size_t(f.m()), 0);
    for (int i : *cover) in_cover[std::size_t(i)] = 1;

    Assignment beta(f.n);
    std::vector<std::uint8_t> pinned(std::size_t(f.n) + 1, 0);
    auto falsify = [&](const Literal& l) {
        if (pinned[std::size_t(l.var)]) return beta.get(l.var) == l.neg;
        beta.set(l.var, l.neg);
        pinned[std::size_t(l.var)] = 1;
        return true;
    };
    for (int i = 0; i < f.m(); ++i) {
        std::vector<Literal> distinct = distinct_literals(f.clauses[std::size_t(i)]);
        if (in_cover[std::size_t(i)] || is_tautological(distinct)) continue;
        for (const Literal& l : distinct)
            if (!falsify(l))
                throw InternalError("min-sat: out-of-cover clauses are not independent");
    }
    // Covered clauses may still lose their free variables; conflicts are fine.
    for (int i = 0; i < f.m(); ++i) {
        if (!in_cover[std::size_t(i)]) continue;
        for (const Literal& l : distinct_literals(f.clauses[std::size_t(i)])) falsify(l);
    }

    if (count_satisfied(beta, f, Mode::sat()) > k)
        throw InternalError("min-sat: witness satisfies more than k clauses");
    return MinSatAnswer{true, beta};
}

MinSatAnswer solve_almost_dnf(const DnfFormula& f, std::int64_t k) {
    CnfFormula psi;
    psi.n = f.n;
    psi.clauses.reserve(f.terms.size());
    for (const Clause& term : f.terms) {
        Clause negated;
        negated.lits.reserve(term.lits.size());
        for (const Literal& l : term.lits) negated.lits.push_back(Literal{l.var, !l.neg});
        psi.clauses.push_back(std::move(negated));
    }
    MinSatAnswer ans = solve_min_sat(psi, k);
    if (ans.yes && count_satisfied(*ans.witness, f, Mode::term()) < f.m() - k)
        throw InternalError("almost-dnf: witness misses the term bound");
    return ans;
}

}  // namespace pmax
