#include "pmax/guarantee.hpp"

#include <algorithm>
#include <limits>
#include <map>

#include "pmax/colorcoding.hpp"
#include "pmax/common.hpp"

namespace pmax {

namespace {

constexpr std::int64_t kI64Max = std::numeric_limits<std::int64_t>::max();

std::int64_t sat_add(std::int64_t a, std::int64_t b) {
    return a > kI64Max - b ? kI64Max : a + b;
}

std::int64_t sat_mul(std::int64_t a, std::int64_t b) {
    if (a == 0 || b == 0) return 0;
    return a > kI64Max / b ? kI64Max : a * b;
}

// Residual formula renamed to its occurring variables so the coloring family
// is built over them alone. original_var[i] is the source of variable i+1.
struct Compacted {
    CnfFormula f;
    std::vector<int> original_var;
};

Compacted compact_variables(const CnfFormula& f) {
    Compacted out;
    std::vector<int> new_of(std::size_t(f.n) + 1, 0);
    out.f.clauses.reserve(f.clauses.size());
    for (const Clause& c : f.clauses) {
        Clause renamed;
        renamed.lits.reserve(c.lits.size());
        for (const Literal& l : c.lits) {
            int& slot = new_of[std::size_t(l.var)];
            if (slot == 0) {
                out.original_var.push_back(l.var);
                slot = int(out.original_var.size());
            }
            renamed.lits.push_back(Literal{slot, l.neg});
        }
        out.f.clauses.push_back(std::move(renamed));
    }
    out.f.n = int(out.original_var.size());
    return out;
}

Assignment expand_witness(const Assignment& compact, const std::vector<int>& original_var,
                          int n) {
    Assignment beta(n);
    for (std::size_t i = 0; i < original_var.size(); ++i)
        beta.set(original_var[i], compact.get(int(i) + 1));
    return beta;
}

// Best-effort witness for a trivial-decision yes: unit-aligned assignments,
// then greedy single-variable flips, then the color-coding solver over the
// residual's occurring variables. Verified against the original target.
std::optional<Assignment> rule3_witness(const CnfFormula& f, const AboveHalfReduction& red,
                                        std::int64_t original_target) {
    const Mode mode = Mode::sat();

    // After rule 2 at most one unit polarity per variable survives, so one
    // assignment satisfies every unit clause.
    Assignment base(f.n);
    std::vector<std::uint8_t> pinned(std::size_t(f.n) + 1, 0);
    for (const Clause& c : red.residual.clauses) {
        std::vector<Literal> distinct = distinct_literals(c);
        if (distinct.size() != 1) continue;
        base.set(distinct[0].var, !distinct[0].neg);
        pinned[std::size_t(distinct[0].var)] = 1;
    }

    Assignment best;
    std::int64_t best_count = -1;
    for (int fill = 0; fill < 2; ++fill) {
        Assignment cand = base;
        for (int v = 1; v <= f.n; ++v)
            if (!pinned[std::size_t(v)]) cand.set(v, fill == 1);
        std::int64_t count = count_satisfied(cand, f, mode);
        if (count >= original_target) return cand;
        if (count > best_count) {
            best_count = count;
            best = cand;
        }
    }
    if (f.n == 0) return std::nullopt;

    constexpr int kGreedyRounds = 256;
    Assignment cur = best;
    std::int64_t cur_count = best_count;
    for (int round = 0; round < kGreedyRounds; ++round) {
        int best_var = 0;
        std::int64_t best_gain = 0;
        for (int v = 1; v <= f.n; ++v) {
            cur.set(v, !cur.get(v));
            std::int64_t gain = count_satisfied(cur, f, mode) - cur_count;
            cur.set(v, !cur.get(v));
            if (gain > best_gain) {
                best_gain = gain;
                best_var = v;
            }
        }
        if (best_var == 0) break;
        cur.set(best_var, !cur.get(best_var));
        cur_count += best_gain;
        if (cur_count >= original_target) return cur;
    }

    try {
        Compacted comp = compact_variables(red.residual);
        MaxKAnswer ans = solve_max_k(comp.f, red.target, mode);
        if (ans.yes && ans.witness) {
            Assignment beta = expand_witness(*ans.witness, comp.original_var, f.n);
            if (count_satisfied(beta, f, mode) < original_target)
                throw InternalError("above-half: residual witness fails on the original");
            return beta;
        }
    } catch (const Error&) {
        // Family budget exceeded; the answer stands without a witness.
    }
    return std::nullopt;
}

}  // namespace

AboveHalfReduction reduce_above_half(const CnfFormula& f, std::int64_t g) {
    if (g < 1) throw Error("reduce_above_half: g must be at least 1");
    AboveHalfReduction out;
    out.residual.n = f.n;

    // Unit polarity counts drive the exhaustive pair cancellation.
    std::vector<std::int64_t> pos_units(std::size_t(f.n) + 1, 0);
    std::vector<std::int64_t> neg_units(std::size_t(f.n) + 1, 0);
    for (const Clause& c : f.clauses) {
        std::vector<Literal> distinct = distinct_literals(c);
        if (distinct.size() == 1)
            ++(distinct[0].neg ? neg_units : pos_units)[std::size_t(distinct[0].var)];
    }
    std::vector<std::int64_t> cancel_pos(std::size_t(f.n) + 1, 0);
    std::vector<std::int64_t> cancel_neg(std::size_t(f.n) + 1, 0);
    for (int v = 1; v <= f.n; ++v) {
        std::int64_t pairs =
            std::min(pos_units[std::size_t(v)], neg_units[std::size_t(v)]);
        cancel_pos[std::size_t(v)] = pairs;
        cancel_neg[std::size_t(v)] = pairs;
        out.removed_pairs += pairs;
    }

    for (const Clause& c : f.clauses) {
        std::vector<Literal> distinct = distinct_literals(c);
        if (distinct.empty()) {
            ++out.removed_empty;
            continue;
        }
        if (distinct.size() == 1) {
            std::int64_t& budget = (distinct[0].neg ? cancel_neg
                                                    : cancel_pos)[std::size_t(distinct[0].var)];
            if (budget > 0) {
                --budget;
                continue;
            }
            ++out.unit_clauses;
        } else {
            ++out.nonunit_clauses;
        }
        out.residual.clauses.push_back(c);
    }

    std::int64_t m = out.residual.m();
    out.target = sat_add((m + 1) / 2, g);
    out.decided_yes = out.unit_clauses >= out.target ||
                      out.nonunit_clauses >= sat_add(sat_mul(4, g), 4);
    if (!out.decided_yes) {
        if (m / 2 > sat_add(sat_mul(5, g), 2))
            throw InternalError("above-half residual exceeds the floor(m/2) <= 5g+2 bound");
        if (out.target > sat_add(sat_mul(6, g), 3))
            throw InternalError("above-half residual target exceeds 6g+3");
    }
    return out;
}

AboveHalfAnswer solve_above_half(const CnfFormula& f, std::int64_t g) {
    if (g < 0) throw Error("solve_above_half: g must be nonnegative");
    const Mode mode = Mode::sat();
    std::int64_t target = sat_add(guaranteed_half(f), g);

    if (g == 0) {
        // One of any assignment and its complement satisfies every non-empty
        // clause, so the better of all-false and all-true meets the bound.
        Assignment all_false(f.n);
        Assignment all_true = complement(all_false);
        std::int64_t count_false = count_satisfied(all_false, f, mode);
        std::int64_t count_true = count_satisfied(all_true, f, mode);
        Assignment best = count_true > count_false ? all_true : all_false;
        if (std::max(count_false, count_true) < target)
            throw InternalError("above-half: half guarantee violated at g = 0");
        return AboveHalfAnswer{true, best, false};
    }

    AboveHalfReduction red = reduce_above_half(f, g);
    if (red.decided_yes)
        return AboveHalfAnswer{true, rule3_witness(f, red, target), true};

    Compacted comp = compact_variables(red.residual);
    MaxKAnswer ans = solve_max_k(comp.f, red.target, mode);
    if (!ans.yes) return AboveHalfAnswer{false, std::nullopt, false};
    Assignment beta = expand_witness(*ans.witness, comp.original_var, f.n);
    if (count_satisfied(beta, f, mode) < target)
        throw InternalError("above-half: residual witness fails on the original");
    return AboveHalfAnswer{true, beta, false};
}

std::vector<Monomial> expand_polynomial(const CnfFormula& f, int d) {
    if (d < 0) throw Error("expand_polynomial: d must be nonnegative");
    if (d > kEdsatMaxWidth)
        throw Error("expand_polynomial: clause width exceeds the expansion budget");

    std::map<std::vector<int>, std::int64_t> acc;
    for (const Clause& c : f.clauses) {
        if (int(c.lits.size()) != d)
            throw Error("expand_polynomial: clause width differs from d");
        std::vector<Literal> lits = c.lits;
        std::sort(lits.begin(), lits.end());
        for (std::size_t i = 1; i < lits.size(); ++i) {
            if (lits[i] == lits[i - 1])
                throw Error("expand_polynomial: duplicate literal in a clause");
            if (lits[i].var == lits[i - 1].var)
                throw Error("expand_polynomial: complementary literals in a clause");
        }
        // 1 - prod_j (1 + sign_j x_j): the constants cancel and every
        // nonempty subset T contributes -prod_{j in T} sign_j.
        for (unsigned mask = 1; mask < (1u << d); ++mask) {
            std::vector<int> key;
            int coeff = -1;
            for (int j = 0; j < d; ++j) {
                if (!(mask & (1u << j))) continue;
                key.push_back(lits[std::size_t(j)].var);
                if (!lits[std::size_t(j)].neg) coeff = -coeff;
            }
            acc[std::move(key)] += coeff;
        }
    }

    std::vector<Monomial> out;
    for (const auto& [vars, coeff] : acc)
        if (coeff != 0) out.push_back(Monomial{coeff, vars});
    return out;
}

std::int64_t evaluate_polynomial(const std::vector<Monomial>& monomials,
                                 const Assignment& beta) {
    std::int64_t total = 0;
    for (const Monomial& mono : monomials) {
        int sign = 1;
        for (int v : mono.vars) {
            if (v < 1 || v > beta.n())
                throw Error("evaluate_polynomial: variable outside the assignment");
            if (!beta.get(v)) sign = -sign;
        }
        total += sign * mono.coefficient;
    }
    return total;
}

bool solve_edsat_aa(const CnfFormula& f, std::int64_t g, int d) {
    std::vector<Monomial> monomials = expand_polynomial(f, d);
    if (g < 0) throw Error("solve_edsat_aa: g must be nonnegative");
    if (g == 0) return true;

    std::int64_t threshold = sat_mul(4, sat_mul(g, g));
    for (int i = 0; i < d; ++i) threshold = sat_mul(threshold, 36);
    if (std::int64_t(monomials.size()) >= threshold) return true;

    std::vector<int> vars;
    for (const Monomial& mono : monomials)
        vars.insert(vars.end(), mono.vars.begin(), mono.vars.end());
    std::sort(vars.begin(), vars.end());
    vars.erase(std::unique(vars.begin(), vars.end()), vars.end());
    if (int(vars.size()) > kEdsatBruteVars)
        throw Error("solve_edsat_aa: surviving variables exceed the brute-force budget");

    std::vector<int> index_of(std::size_t(f.n) + 1, 0);
    for (std::size_t i = 0; i < vars.size(); ++i)
        index_of[std::size_t(vars[i])] = int(i);
    std::vector<std::uint64_t> var_mask(monomials.size(), 0);
    for (std::size_t i = 0; i < monomials.size(); ++i)
        for (int v : monomials[i].vars)
            var_mask[i] |= std::uint64_t(1) << index_of[std::size_t(v)];

    std::int64_t want = sat_mul(g, std::int64_t(1) << d);
    // Mask bit set reads as true (+1); a monomial's sign is the parity of its
    // false variables.
    for (std::uint64_t mask = 0; mask < (std::uint64_t(1) << vars.size()); ++mask) {
        std::int64_t value = 0;
        for (std::size_t i = 0; i < monomials.size(); ++i) {
            int falses = __builtin_popcountll(~mask & var_mask[i]);
            value += (falses & 1) ? -monomials[i].coefficient : monomials[i].coefficient;
        }
        if (value >= want) return true;
    }
    return false;
}

}  // namespace pmax
