#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "pmax/formula.hpp"

namespace pmax {

// Family of colorings {1..n} -> {1..c}. Universality: every size-k index set
// together with every target coloring of it is matched by some member.
struct ColoringFamily {
    int n = 0;
    int k = 0;
    int c = 0;
    std::vector<std::vector<std::uint8_t>> functions;
};

// Total number of stored color values allowed in one family.
inline constexpr std::int64_t kFamilyBudget = std::int64_t(1) << 27;

// Construction: compose universal hashing i -> ((a*i+b) mod p) mod k*k over
// all multiplier/offset pairs with every coloring of the k*k buckets; when
// the plain set of all c^n functions is smaller, use that instead. Members
// are sorted and deduplicated, so iteration order is lexicographic.
ColoringFamily universal_coloring_family(int n, int k, int c);

// Exhaustive check of the defining property.
bool verify_universal(const ColoringFamily& fam);

// Robustness bound of a clause set under a mode: how many variables must be
// pinned to keep a satisfied clause satisfied. A disjunction needs 1, a
// not-all-equal clause 2, an exact-count or all-true clause all its distinct
// variables.
int robustness_bound(const std::vector<Clause>& clauses, const Mode& mode);

struct MaxKAnswer {
    bool yes = false;
    std::optional<Assignment> witness;
};

// Accept iff some assignment satisfies at least k clauses/terms under the
// mode, searching a (n, min(t*k, n), 2)-universal family; colors read as
// truth values. The witness comes from the lexicographically least accepting
// coloring.
MaxKAnswer solve_max_k(const CnfFormula& f, std::int64_t k, const Mode& mode);
MaxKAnswer solve_max_k(const DnfFormula& f, std::int64_t k, const Mode& mode);

}  // namespace pmax
