#include "pmax/formula.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

namespace pmax {

std::vector<Literal> distinct_literals(const Clause& c) {
    std::vector<Literal> out = c.lits;
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

Assignment complement(const Assignment& beta) {
    Assignment out = beta;
    for (auto& b : out.bits) b = b ? 0 : 1;
    return out;
}

bool eval_clause(const Assignment& beta, const Clause& c, const Mode& mode) {
    int t = 0;
    for (const auto& l : c.lits)
        if (beta.satisfies(l)) ++t;
    int total = int(c.lits.size());
    switch (mode.kind) {
        case Mode::Kind::Sat: return t >= 1;
        case Mode::Kind::Nae: return t >= 1 && t < total;
        case Mode::Kind::Exact: return t == mode.exact_count;
        default: return t == total;
    }
}

std::int64_t count_satisfied(const Assignment& beta, const CnfFormula& f, const Mode& mode) {
    std::int64_t s = 0;
    for (const auto& c : f.clauses)
        if (eval_clause(beta, c, mode)) ++s;
    return s;
}

std::int64_t count_satisfied(const Assignment& beta, const DnfFormula& f, const Mode& mode) {
    std::int64_t s = 0;
    for (const auto& c : f.terms)
        if (eval_clause(beta, c, mode)) ++s;
    return s;
}

WeightedCount weighted_count(const Assignment& beta, const WeightedCnf& f) {
    WeightedCount out;
    out.hard_ok = true;
    for (const auto& wc : f.clauses) {
        bool sat = eval_clause(beta, wc.clause, Mode::sat());
        if (wc.weight.is_hard) {
            if (!sat) out.hard_ok = false;
        } else if (sat) {
            out.soft = checked_add(out.soft, wc.weight.value);
        }
    }
    return out;
}

Dyadic expected_satisfied(const CnfFormula& f) {
    Dyadic sum;
    for (const auto& c : f.clauses) {
        int r = int(distinct_literals(c).size());
        if (r > 62) throw Error("clause too wide for exact dyadic arithmetic");
        // 1 - 2^-r = (2^r - 1) / 2^r
        sum = sum + Dyadic((std::int64_t(1) << r) - 1, r);
    }
    return sum;
}

std::int64_t count_empty(const CnfFormula& f) {
    std::int64_t e = 0;
    for (const auto& c : f.clauses)
        if (c.empty()) ++e;
    return e;
}

std::int64_t guaranteed_half(const CnfFormula& f) {
    std::int64_t m = f.m() - count_empty(f);
    return (m + 1) / 2;
}

namespace {

// Token stream that skips comment lines; a 'c' only opens a comment at the
// start of a line, so the "cnf" header token stays a token.
struct TokenStream {
    std::istringstream in;
    bool at_line_start = true;
    explicit TokenStream(const std::string& text) : in(text) {}

    std::optional<std::string> next() {
        std::string tok;
        while (true) {
            int ch = in.peek();
            if (ch == EOF) return std::nullopt;
            if (ch == '\n') {
                in.get();
                at_line_start = true;
                continue;
            }
            if (std::isspace(ch)) {
                in.get();
                continue;
            }
            if (ch == 'c' && at_line_start) {
                std::string line;
                std::getline(in, line);
                continue;
            }
            in >> tok;
            at_line_start = false;
            return tok;
        }
    }
};

int parse_int(const std::string& tok, const char* what) {
    std::size_t pos = 0;
    long v = 0;
    try {
        v = std::stol(tok, &pos);
    } catch (...) {
        throw Error(std::string("expected ") + what + ", got '" + tok + "'");
    }
    if (pos != tok.size()) throw Error(std::string("expected ") + what + ", got '" + tok + "'");
    if (v > 1000000000L || v < -1000000000L) throw Error(std::string(what) + " out of range");
    return int(v);
}

}  // namespace

CnfFormula parse_dimacs_cnf(const std::string& text) {
    TokenStream ts(text);
    auto tok = ts.next();
    if (!tok || *tok != "p") throw Error("missing 'p cnf' header");
    tok = ts.next();
    if (!tok || *tok != "cnf") throw Error("header format is not 'p cnf'");
    tok = ts.next();
    if (!tok) throw Error("header missing variable count");
    int n = parse_int(*tok, "variable count");
    tok = ts.next();
    if (!tok) throw Error("header missing clause count");
    int m = parse_int(*tok, "clause count");
    if (n < 0 || m < 0) throw Error("negative size in header");

    CnfFormula f;
    f.n = n;
    Clause cur;
    bool in_clause = false;
    while ((tok = ts.next())) {
        int lit = parse_int(*tok, "literal");
        if (lit == 0) {
            f.clauses.push_back(cur);
            cur = Clause{};
            in_clause = false;
            continue;
        }
        int v = lit < 0 ? -lit : lit;
        if (v > n) throw Error("literal " + *tok + " exceeds declared variable count");
        cur.lits.push_back(Literal{v, lit < 0});
        in_clause = true;
    }
    if (in_clause) throw Error("clause missing terminating 0");
    if (f.m() != m)
        throw Error("declared " + std::to_string(m) + " clauses, found " +
                    std::to_string(f.m()));
    return f;
}

WeightedCnf parse_wcnf(const std::string& text) {
    WeightedCnf f;
    std::istringstream in(text);
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        std::istringstream ls(line);
        std::string first;
        if (!(ls >> first)) continue;
        if (first == "c" || first[0] == 'c') continue;
        Weight w;
        if (first == "h") {
            w = Weight::hard();
        } else {
            if (first[0] == '-')
                throw Error("line " + std::to_string(lineno) + ": negative weight");
            std::uint64_t wv = 0;
            try {
                std::size_t pos = 0;
                wv = std::stoull(first, &pos);
                if (pos != first.size()) throw Error("");
            } catch (...) {
                throw Error("line " + std::to_string(lineno) + ": bad weight '" + first + "'");
            }
            if (wv == 0) throw Error("line " + std::to_string(lineno) + ": weight must be positive");
            w = Weight::soft(wv);
        }
        Clause c;
        bool closed = false;
        std::string tok;
        while (ls >> tok) {
            int lit = parse_int(tok, "literal");
            if (lit == 0) { closed = true; break; }
            int v = lit < 0 ? -lit : lit;
            c.lits.push_back(Literal{v, lit < 0});
            if (v > f.n) f.n = v;
        }
        if (!closed) throw Error("line " + std::to_string(lineno) + ": clause missing terminating 0");
        if (ls >> tok) throw Error("line " + std::to_string(lineno) + ": trailing tokens after 0");
        f.clauses.push_back(WeightedClause{w, c});
    }
    return f;
}

std::string to_dimacs(const CnfFormula& f) {
    std::ostringstream out;
    out << "p cnf " << f.n << " " << f.m() << "\n";
    for (const auto& c : f.clauses) {
        for (const auto& l : c.lits) out << (l.neg ? -l.var : l.var) << " ";
        out << "0\n";
    }
    return out.str();
}

std::string to_wcnf(const WeightedCnf& f) {
    std::ostringstream out;
    for (const auto& wc : f.clauses) {
        if (wc.weight.is_hard)
            out << "h";
        else
            out << wc.weight.value;
        for (const auto& l : wc.clause.lits) out << " " << (l.neg ? -l.var : l.var);
        out << " 0\n";
    }
    return out.str();
}

}  // namespace pmax
