#include <random>

#include "doctest.h"
#include "pmax/colorcoding.hpp"
#include "pmax/oracle.hpp"

using namespace pmax;

namespace {

CnfFormula random_formula(std::mt19937& rng, int n, int m, int max_width) {
    CnfFormula f;
    f.n = n;
    for (int i = 0; i < m; i++) {
        Clause c;
        int w = int(rng() % (max_width + 1));
        for (int j = 0; j < w; j++)
            c.lits.push_back(Literal{1 + int(rng() % n), rng() % 2 == 1});
        f.clauses.push_back(c);
    }
    return f;
}

}  // namespace

TEST_CASE("family construction is forced to all functions when k = n") {
    ColoringFamily fam = universal_coloring_family(3, 3, 2);
    CHECK(fam.functions.size() == 8);
    CHECK(verify_universal(fam));
}

TEST_CASE("k = 1 reduces to the constant functions") {
    ColoringFamily fam = universal_coloring_family(5, 1, 3);
    REQUIRE(fam.functions.size() == 3);
    CHECK(fam.functions[0] == std::vector<std::uint8_t>(5, 1));
    CHECK(fam.functions[1] == std::vector<std::uint8_t>(5, 2));
    CHECK(fam.functions[2] == std::vector<std::uint8_t>(5, 3));
    CHECK(verify_universal(fam));
}

TEST_CASE("small families verify exhaustively") {
    CHECK(verify_universal(universal_coloring_family(4, 2, 2)));
    CHECK(verify_universal(universal_coloring_family(6, 2, 3)));
    CHECK(verify_universal(universal_coloring_family(5, 3, 2)));
    CHECK(verify_universal(universal_coloring_family(7, 0, 2)));
    // First size where the hash composition beats the plain 2^n fallback.
    ColoringFamily hashed = universal_coloring_family(16, 2, 2);
    CHECK(hashed.functions.size() < (std::size_t(1) << 16));
    CHECK(verify_universal(hashed));
}

TEST_CASE("family members are sorted, deduplicated, and in range") {
    ColoringFamily fam = universal_coloring_family(16, 2, 2);
    CHECK(std::is_sorted(fam.functions.begin(), fam.functions.end()));
    CHECK(std::adjacent_find(fam.functions.begin(), fam.functions.end()) == fam.functions.end());
    for (const auto& fn : fam.functions) {
        CHECK(fn.size() == 16);
        for (auto v : fn) CHECK((v == 1 || v == 2));
    }
}

TEST_CASE("verify_universal rejects broken families") {
    ColoringFamily empty;
    empty.n = 2;
    empty.k = 1;
    empty.c = 2;
    CHECK_FALSE(verify_universal(empty));

    // The constant functions are minimal for k = 1: dropping any one breaks
    // the property.
    ColoringFamily fam = universal_coloring_family(5, 1, 3);
    for (std::size_t drop = 0; drop < fam.functions.size(); drop++) {
        ColoringFamily crippled = fam;
        crippled.functions.erase(crippled.functions.begin() + std::ptrdiff_t(drop));
        CHECK_FALSE(verify_universal(crippled));
    }
}

TEST_CASE("family construction guards") {
    CHECK_THROWS_AS(universal_coloring_family(2, 3, 2), Error);
    CHECK_THROWS_AS(universal_coloring_family(3, 1, 0), Error);
    CHECK_THROWS_AS(universal_coloring_family(3, 1, 256), Error);
    CHECK_THROWS_AS(universal_coloring_family(-1, 0, 2), Error);
    CHECK_THROWS_AS(universal_coloring_family(24, 4, 2), Error);  // over size budget
}

TEST_CASE("family size grows polynomially in n at fixed k and c") {
    for (int n : {8, 16, 32, 64}) {
        ColoringFamily fam = universal_coloring_family(n, 2, 2);
        CHECK(std::int64_t(fam.functions.size()) <= 64 * std::int64_t(n) * n);
    }
}

TEST_CASE("robustness bounds per mode") {
    CnfFormula f = parse_dimacs_cnf("p cnf 2 4\n1 2 -2 0\n1 0\n1 0\n2 2 0\n");
    CHECK(robustness_bound(f.clauses, Mode::sat()) == 1);
    CHECK(robustness_bound(f.clauses, Mode::nae()) == 2);
    CHECK(robustness_bound(f.clauses, Mode::exact(1)) == 2);  // widest distinct-variable set
    CHECK(robustness_bound(f.clauses, Mode::term()) == 2);
    CHECK(robustness_bound({}, Mode::term()) == 0);
    CHECK(robustness_bound({Clause{{pos(2), pos(2)}}}, Mode::term()) == 1);
}

TEST_CASE("solve_max_k on the running example") {
    CnfFormula f = parse_dimacs_cnf("p cnf 2 4\n1 2 -2 0\n1 0\n1 0\n2 2 0\n");
    MaxKAnswer yes = solve_max_k(f, 4, Mode::sat());
    REQUIRE(yes.yes);
    CHECK(count_satisfied(*yes.witness, f, Mode::sat()) >= 4);
    CHECK_FALSE(solve_max_k(f, 5, Mode::sat()).yes);

    MaxKAnswer zero = solve_max_k(f, 0, Mode::sat());
    REQUIRE(zero.yes);
    CHECK(*zero.witness == Assignment(2));  // least coloring: everything false

    CnfFormula contradiction = parse_dimacs_cnf("p cnf 1 2\n1 0\n-1 0\n");
    CHECK_FALSE(solve_max_k(contradiction, 2, Mode::sat()).yes);
    CHECK(solve_max_k(contradiction, 1, Mode::sat()).yes);

    CHECK_THROWS_AS(solve_max_k(f, -1, Mode::sat()), Error);
}

TEST_CASE("solve_max_k matches the oracle in every mode") {
    std::mt19937 rng(60622);
    for (int caseno = 0; caseno < 80; caseno++) {
        int n = 1 + int(rng() % 5);
        CnfFormula f = random_formula(rng, n, int(rng() % 6), 3);
        for (Mode mode : {Mode::sat(), Mode::nae(), Mode::exact(1), Mode::exact(2)}) {
            std::int64_t best = brute_max(f, mode).best;
            for (std::int64_t k = 0; k <= f.m() + 1; k++) {
                MaxKAnswer got = solve_max_k(f, k, mode);
                CHECK(got.yes == (best >= k));
                if (got.yes) CHECK(count_satisfied(*got.witness, f, mode) >= k);
            }
        }
    }
}

TEST_CASE("solve_max_k matches the oracle on term counting") {
    std::mt19937 rng(1111);
    for (int caseno = 0; caseno < 60; caseno++) {
        int n = 1 + int(rng() % 5);
        DnfFormula d;
        d.n = n;
        int m = int(rng() % 6);
        for (int i = 0; i < m; i++) {
            Clause term;
            int w = int(rng() % 4);
            for (int j = 0; j < w; j++)
                term.lits.push_back(Literal{1 + int(rng() % n), rng() % 2 == 1});
            d.terms.push_back(term);
        }
        std::int64_t best = brute_max(d, Mode::term()).best;
        for (std::int64_t k = 0; k <= d.m() + 1; k++) {
            MaxKAnswer got = solve_max_k(d, k, Mode::term());
            CHECK(got.yes == (best >= k));
            if (got.yes) CHECK(count_satisfied(*got.witness, d, Mode::term()) >= k);
        }
    }
}

TEST_CASE("solve_max_k handles variable counts beyond any brute-force range") {
    // Color coding touches only min(t*k, n) positions, so a wide formula
    // with a small target stays cheap.
    CnfFormula f;
    f.n = 40;
    f.clauses.push_back(Clause{{pos(1)}});
    f.clauses.push_back(Clause{{pos(40)}});
    f.clauses.push_back(Clause{{neg(1), neg(40)}});
    MaxKAnswer got = solve_max_k(f, 2, Mode::sat());
    REQUIRE(got.yes);
    CHECK(count_satisfied(*got.witness, f, Mode::sat()) >= 2);

    CnfFormula hard;
    hard.n = 40;
    hard.clauses.push_back(Clause{{pos(1)}});
    hard.clauses.push_back(Clause{{neg(1)}});
    CHECK_FALSE(solve_max_k(hard, 2, Mode::sat()).yes);
}
