#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "pmax/formula.hpp"
#include "pmax/graph.hpp"

namespace pmax {

// One-pass kernelization for a size-k vertex cover. Vertices whose degree
// exceeds k belong to every such cover and are forced; after removing them
// and the isolated leftovers, more than k^2 edges or more than k^2+k
// vertices certify a no-instance.
struct BussKernel {
    bool reject = false;
    // Meaningful when reject is false.
    std::vector<int> forced;
    Graph kernel;
    std::vector<int> original_vertex;
};

// g has a cover of size k iff kernel has one of size k - |forced|; forced
// plus any such kernel cover (mapped through original_vertex) covers g.
BussKernel buss_kernel(const Graph& g, int k);

// Cover of size at most k, or nothing. Kernel first, then a depth-bounded
// search tree branching both ways on the least uncovered edge; rounds run on
// the engine, so the reported cover is the leftmost earliest one regardless
// of worker count. Minimality is not promised, the size bound is.
std::optional<std::vector<int>> vertex_cover(const Graph& g, int k);

// Clause graph of the min-sat reduction: one vertex per clause, an edge
// where two clauses hold complementary literals. A clause that is
// tautological by itself stays isolated; solve_min_sat charges it separately
// since every assignment satisfies it.
Graph minsat_graph(const CnfFormula& f);

struct MinSatAnswer {
    bool yes = false;
    std::optional<Assignment> witness;
};

// Is there an assignment satisfying at most k clauses? Equivalent to a
// vertex cover of minsat_graph of size k minus the tautological clause
// count. The witness falsifies every out-of-cover clause outright (they
// form an independent set, so that is consistent), falsifies covered
// clauses where variables remain free, and is re-verified before return.
MinSatAnswer solve_min_sat(const CnfFormula& f, std::int64_t k);

// Is there an assignment satisfying at least m - k terms? Every term is
// negated into a clause and min-sat answers with the same k; a satisfied
// term is exactly an unsatisfied clause, so the witness carries over.
MinSatAnswer solve_almost_dnf(const DnfFormula& f, std::int64_t k);

}  // namespace pmax
