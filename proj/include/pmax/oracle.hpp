#pragma once

#include <cstdint>
#include <vector>

#include "pmax/flow.hpp"
#include "pmax/formula.hpp"
#include "pmax/graph.hpp"

namespace pmax {

// Exhaustive reference solvers. No pruning on purpose; every result is the
// outcome of a full enumeration, and every witness is the lexicographically
// least optimum so tests can compare values byte for byte.

inline constexpr int kOracleMaxVars = 24;
inline constexpr int kOracleMaxCoverVertices = 20;
inline constexpr int kOracleMaxHalfIntegralVertices = 12;
inline constexpr int kOracleMaxAlmostClauses = 20;

struct BruteBest {
    std::int64_t best = 0;
    Assignment witness;
};

BruteBest brute_max(const CnfFormula& f, const Mode& mode);
BruteBest brute_max(const DnfFormula& f, const Mode& mode);
BruteBest brute_min_sat(const CnfFormula& f);

struct BruteWeightedBest {
    bool feasible = false;
    std::uint64_t soft = 0;
    Assignment witness;
};

BruteWeightedBest brute_weighted(const WeightedCnf& f);

struct BruteCover {
    int size = 0;
    std::vector<int> vertices;
};

BruteCover brute_vertex_cover(const Graph& g);

std::int64_t brute_max_flow(const Network& net);

// Vertex-cover LP over {0, 1/2, 1}^V in half-units: values[v] in {0,1,2},
// values[u] + values[v] >= 2 on every edge, total minimized.
struct BruteHalfIntegral {
    int total_half_units = 0;
    std::vector<int> values;
};

BruteHalfIntegral brute_halfintegral_vc(const Graph& g);

// Fewest clause deletions after which the remainder is mode-satisfiable.
// Deleted indices are the first feasible set in smallest-size-then-
// lexicographic order.
struct BruteAlmost {
    int deletions = 0;
    std::vector<int> deleted;
    Assignment witness;
};

BruteAlmost brute_almost(const CnfFormula& f, const Mode& mode);

}  // namespace pmax
