#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "pmax/formula.hpp"

namespace pmax {

// Above-half reduction outcome. The residual always carries rules 1 and 2
// applied (empty clauses gone, unit pairs cancelled); target is the clause
// count the residual must reach, ceil(m'/2) + g.
struct AboveHalfReduction {
    bool decided_yes = false;
    CnfFormula residual;
    std::int64_t target = 0;
    std::int64_t removed_empty = 0;
    std::int64_t removed_pairs = 0;
    std::int64_t unit_clauses = 0;
    std::int64_t nonunit_clauses = 0;
};

// Clause classes go by distinct literal count: 0 empty, 1 unit, 2+ non-unit,
// so (x v x) is the unit (x). Decides yes when the residual keeps at least
// ceil(m'/2)+g unit clauses or at least 4g+4 non-unit clauses; otherwise
// floor(m'/2) <= 5g+2 and target <= 6g+3 hold. Requires g >= 1.
AboveHalfReduction reduce_above_half(const CnfFormula& f, std::int64_t g);

struct AboveHalfAnswer {
    bool yes = false;
    std::optional<Assignment> witness;
    // The trivial-decision rule answered; the witness, if any, is the
    // best-effort recovery described in solve_above_half.
    bool decided_by_reduction = false;
};

// Is there an assignment satisfying at least ceil((m - m_empty)/2) + g
// clauses? g = 0 is always yes (the better of all-false and all-true).
// Otherwise the reduction runs first and a residual is handed to the
// color-coding solver over its occurring variables. Witnesses from that path
// are exact; for trivial-decision yes answers the witness is recovered best
// effort (unit-aligned assignments, then bounded greedy flips, then the
// color-coding solver on the residual) and omitted when nothing verified.
// Every emitted witness is checked against the original formula.
AboveHalfAnswer solve_above_half(const CnfFormula& f, std::int64_t g);

// Term of the +-1 polynomial X: coefficient times the product of the listed
// variables, truth values read as false -> -1, true -> +1.
struct Monomial {
    std::int64_t coefficient = 0;
    std::vector<int> vars;

    bool operator==(const Monomial& o) const {
        return coefficient == o.coefficient && vars == o.vars;
    }
};

// Expand X = sum over clauses of 1 - prod_j (1 + sign_j x_j), sign -1 on a
// positive occurrence and +1 on a negated one. Like terms are collected on
// the sorted variable set, zero coefficients dropped, output ordered by
// variable set. Every clause must have exactly d literals, pairwise
// non-duplicate and non-complementary; d is capped at kEdsatMaxWidth.
std::vector<Monomial> expand_polynomial(const CnfFormula& f, int d);

inline constexpr int kEdsatMaxWidth = 16;
inline constexpr int kEdsatBruteVars = 24;

// Value of the expanded polynomial at the +-1 point given by beta, which
// must cover every variable that occurs. Equals 2^d * (satisfied - E(f))
// when the monomials came from expand_polynomial(f, d).
std::int64_t evaluate_polynomial(const std::vector<Monomial>& monomials,
                                 const Assignment& beta);

// Is there an assignment satisfying at least E(f) + g clauses, with every
// clause exactly d distinct non-complementary literals? Trivial yes when
// g = 0 or when the expansion has at least 4 * 9^d * 4^d * g^2 monomials;
// otherwise brute force over the surviving variables (at most
// kEdsatBruteVars of them, larger counts exceed the budget).
bool solve_edsat_aa(const CnfFormula& f, std::int64_t g, int d);

}  // namespace pmax
