#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "pmax/common.hpp"

namespace pmax {

// Variables are 1-based; a literal is a variable with a sign.
struct Literal {
    int var = 0;
    bool neg = false;

    bool operator==(const Literal& o) const { return var == o.var && neg == o.neg; }
    bool operator<(const Literal& o) const {
        return var != o.var ? var < o.var : neg < o.neg;
    }
};

inline Literal pos(int v) { return Literal{v, false}; }
inline Literal neg(int v) { return Literal{v, true}; }

// Ordered literal list; duplicates and complementary pairs are legal.
struct Clause {
    std::vector<Literal> lits;

    bool operator==(const Clause& o) const { return lits == o.lits; }
    std::size_t size() const { return lits.size(); }
    bool empty() const { return lits.empty(); }
};

// Distinct literals of a clause, sorted. Duplicate occurrences collapse;
// complementary literals stay distinct.
std::vector<Literal> distinct_literals(const Clause& c);

struct CnfFormula {
    int n = 0;
    std::vector<Clause> clauses;

    bool operator==(const CnfFormula& o) const { return n == o.n && clauses == o.clauses; }
    int m() const { return int(clauses.size()); }
};

// Terms use the same clause shape; a term is a conjunction of its literals.
struct DnfFormula {
    int n = 0;
    std::vector<Clause> terms;

    bool operator==(const DnfFormula& o) const { return n == o.n && terms == o.terms; }
    int m() const { return int(terms.size()); }
};

// Natural weight or the distinguished hard marker.
struct Weight {
    bool is_hard = false;
    std::uint64_t value = 0;

    static Weight hard() { return Weight{true, 0}; }
    static Weight soft(std::uint64_t w) { return Weight{false, w}; }
    bool operator==(const Weight& o) const {
        return is_hard == o.is_hard && (is_hard || value == o.value);
    }
};

struct WeightedClause {
    Weight weight;
    Clause clause;

    bool operator==(const WeightedClause& o) const {
        return weight == o.weight && clause == o.clause;
    }
};

struct WeightedCnf {
    int n = 0;
    std::vector<WeightedClause> clauses;

    bool operator==(const WeightedCnf& o) const { return n == o.n && clauses == o.clauses; }
    int m() const { return int(clauses.size()); }
};

// Total assignment; bits[i] is the value of variable i+1.
// Comparison order is lexicographic with variable 1 most significant.
struct Assignment {
    std::vector<std::uint8_t> bits;

    Assignment() = default;
    explicit Assignment(int n) : bits(std::size_t(n), 0) {}

    int n() const { return int(bits.size()); }
    bool get(int var) const { return bits[std::size_t(var - 1)] != 0; }
    void set(int var, bool v) { bits[std::size_t(var - 1)] = v ? 1 : 0; }
    bool satisfies(const Literal& l) const { return get(l.var) != l.neg; }

    bool operator==(const Assignment& o) const { return bits == o.bits; }
    bool operator<(const Assignment& o) const { return bits < o.bits; }
};

// Flip every variable.
Assignment complement(const Assignment& beta);

// Clause evaluation modes. Exact carries the required count of true literals.
struct Mode {
    enum class Kind { Sat, Nae, Exact, Term } kind = Kind::Sat;
    int exact_count = 0;

    static Mode sat() { return Mode{Kind::Sat, 0}; }
    static Mode nae() { return Mode{Kind::Nae, 0}; }
    static Mode exact(int x) { return Mode{Kind::Exact, x}; }
    static Mode term() { return Mode{Kind::Term, 0}; }

    const char* name() const {
        switch (kind) {
            case Kind::Sat: return "sat";
            case Kind::Nae: return "nae";
            case Kind::Exact: return "exact";
            default: return "term";
        }
    }
};

// Empty clause: Sat false, Nae false, Term true, Exact(x) true iff x == 0.
// Duplicate literal occurrences count separately (Nae on {x,x} is never true).
bool eval_clause(const Assignment& beta, const Clause& c, const Mode& mode);

std::int64_t count_satisfied(const Assignment& beta, const CnfFormula& f, const Mode& mode);
std::int64_t count_satisfied(const Assignment& beta, const DnfFormula& f, const Mode& mode);

struct WeightedCount {
    bool hard_ok = false;
    std::uint64_t soft = 0;
};
WeightedCount weighted_count(const Assignment& beta, const WeightedCnf& f);

// Sum of 1 - 2^-r per clause, r the number of distinct literals.
// Equals the expected satisfied-clause count of a uniform random assignment
// whenever no clause contains a complementary literal pair.
Dyadic expected_satisfied(const CnfFormula& f);

// ceil((m - empty_count) / 2): the satisfiable-for-free clause count.
std::int64_t guaranteed_half(const CnfFormula& f);
std::int64_t count_empty(const CnfFormula& f);

CnfFormula parse_dimacs_cnf(const std::string& text);
WeightedCnf parse_wcnf(const std::string& text);
std::string to_dimacs(const CnfFormula& f);
std::string to_wcnf(const WeightedCnf& f);

}  // namespace pmax
