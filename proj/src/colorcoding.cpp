#include "pmax/colorcoding.hpp"

#include <algorithm>

namespace pmax {

namespace {

bool is_prime(int x) {
    if (x < 2) return false;
    for (int d = 2; std::int64_t(d) * d <= x; d++)
        if (x % d == 0) return false;
    return true;
}

int next_prime_above(int x) {
    int p = x + 1;
    while (!is_prime(p)) p++;
    return p;
}

// min(base^e, cap), saturating.
std::int64_t sat_pow(std::int64_t base, std::int64_t e, std::int64_t cap) {
    std::int64_t r = 1;
    for (std::int64_t i = 0; i < e; i++) {
        if (r > cap / base) return cap;
        r *= base;
        if (r >= cap) return cap;
    }
    return r;
}

// All c^len tables over {1..c} in lexicographic order (position 0 most
// significant).
std::vector<std::vector<std::uint8_t>> all_tables(int len, int c) {
    std::vector<std::vector<std::uint8_t>> out;
    std::vector<std::uint8_t> cur(std::size_t(len), 1);
    while (true) {
        out.push_back(cur);
        int i = len - 1;
        while (i >= 0 && cur[std::size_t(i)] == c) cur[std::size_t(i--)] = 1;
        if (i < 0) break;
        cur[std::size_t(i)]++;
    }
    return out;
}

}  // namespace

ColoringFamily universal_coloring_family(int n, int k, int c) {
    if (n < 0 || k < 0) throw Error("coloring family: negative parameter");
    if (k > n) throw Error("coloring family: k exceeds n");
    if (c < 1) throw Error("coloring family: needs at least one color");
    if (c > 255) throw Error("coloring family: color count over storage bound");

    ColoringFamily fam;
    fam.n = n;
    fam.k = k;
    fam.c = c;

    if (k == 0 || n == 0) {
        // A single function matches the empty index set.
        fam.functions.push_back(std::vector<std::uint8_t>(std::size_t(n), 1));
        return fam;
    }

    const std::int64_t cap = std::int64_t(1) << 62;
    int p = next_prime_above(std::max(n, 2));
    std::int64_t buckets = std::int64_t(k) * k;
    std::int64_t pair_count = std::int64_t(p) * (p - 1);
    std::int64_t table_count = sat_pow(c, buckets, cap);
    std::int64_t hash_total =
        table_count > cap / pair_count ? cap : pair_count * table_count;
    std::int64_t plain_total = sat_pow(c, n, cap);

    if (plain_total <= hash_total) {
        if (plain_total > kFamilyBudget / std::max(n, 1))
            throw Error("coloring family: parameters over size budget");
        fam.functions = all_tables(n, c);
        return fam;
    }

    if (hash_total > kFamilyBudget / std::max(n, 1))
        throw Error("coloring family: parameters over size budget");

    std::vector<std::vector<std::uint8_t>> tables = all_tables(int(buckets), c);
    fam.functions.reserve(std::size_t(hash_total));
    for (int a = 1; a < p; a++)
        for (int b = 0; b < p; b++) {
            std::vector<int> slot(std::size_t(n), 0);
            for (int i = 1; i <= n; i++)
                slot[std::size_t(i - 1)] =
                    int(((std::int64_t(a) * i + b) % p) % buckets);
            for (const auto& g : tables) {
                std::vector<std::uint8_t> fn(std::size_t(n), 0);
                for (int i = 0; i < n; i++) fn[std::size_t(i)] = g[std::size_t(slot[std::size_t(i)])];
                fam.functions.push_back(std::move(fn));
            }
        }
    std::sort(fam.functions.begin(), fam.functions.end());
    fam.functions.erase(std::unique(fam.functions.begin(), fam.functions.end()),
                        fam.functions.end());
    return fam;
}

bool verify_universal(const ColoringFamily& fam) {
    if (fam.n < 0 || fam.k < 0 || fam.k > fam.n || fam.c < 1)
        throw Error("verify_universal: malformed family");
    for (const auto& fn : fam.functions) {
        if (int(fn.size()) != fam.n) throw Error("verify_universal: wrong domain size");
        for (auto v : fn)
            if (v < 1 || v > fam.c) throw Error("verify_universal: color out of range");
    }
    if (fam.functions.empty()) return false;
    if (fam.k == 0) return true;

    // Budget: (n choose k) * c^k subset/target pairs.
    std::int64_t pairs = 1;
    for (int i = 0; i < fam.k; i++) {
        pairs = pairs * (fam.n - i) / (i + 1);
        if (pairs > (std::int64_t(1) << 24)) throw Error("verify_universal: over test budget");
    }
    pairs *= sat_pow(fam.c, fam.k, std::int64_t(1) << 30);
    if (pairs > (std::int64_t(1) << 24)) throw Error("verify_universal: over test budget");

    std::vector<int> subset(std::size_t(fam.k));
    for (int i = 0; i < fam.k; i++) subset[std::size_t(i)] = i;
    while (true) {
        // Every target coloring of this subset, as a mixed-radix counter.
        std::vector<std::uint8_t> target(std::size_t(fam.k), 1);
        while (true) {
            bool matched = false;
            for (const auto& fn : fam.functions) {
                bool agrees = true;
                for (int i = 0; i < fam.k && agrees; i++)
                    agrees = fn[std::size_t(subset[std::size_t(i)])] == target[std::size_t(i)];
                if (agrees) {
                    matched = true;
                    break;
                }
            }
            if (!matched) return false;
            int i = fam.k - 1;
            while (i >= 0 && target[std::size_t(i)] == fam.c) target[std::size_t(i--)] = 1;
            if (i < 0) break;
            target[std::size_t(i)]++;
        }
        int i = fam.k - 1;
        while (i >= 0 && subset[std::size_t(i)] == fam.n - fam.k + i) i--;
        if (i < 0) break;
        subset[std::size_t(i)]++;
        for (int j = i + 1; j < fam.k; j++)
            subset[std::size_t(j)] = subset[std::size_t(j - 1)] + 1;
    }
    return true;
}

int robustness_bound(const std::vector<Clause>& clauses, const Mode& mode) {
    switch (mode.kind) {
        case Mode::Kind::Sat: return 1;
        case Mode::Kind::Nae: return 2;
        default: {
            int t = 0;
            for (const auto& c : clauses) {
                std::vector<int> vars;
                for (const auto& l : c.lits) vars.push_back(l.var);
                std::sort(vars.begin(), vars.end());
                vars.erase(std::unique(vars.begin(), vars.end()), vars.end());
                t = std::max(t, int(vars.size()));
            }
            return t;
        }
    }
}

namespace {

template <typename Formula>
MaxKAnswer solve_max_k_impl(const Formula& f, const std::vector<Clause>& clauses, std::int64_t k,
                            const Mode& mode) {
    if (k < 0) throw Error("solve_max_k: negative target");
    MaxKAnswer out;
    if (k > std::int64_t(clauses.size())) return out;  // more than m clauses can't be satisfied

    std::int64_t t = robustness_bound(clauses, mode);
    std::int64_t want = std::min<std::int64_t>(t * k, f.n);
    ColoringFamily fam = universal_coloring_family(f.n, int(want), 2);
    for (const auto& fn : fam.functions) {
        Assignment beta(f.n);
        for (int v = 1; v <= f.n; v++) beta.set(v, fn[std::size_t(v - 1)] == 2);
        if (count_satisfied(beta, f, mode) >= k) {
            out.yes = true;
            out.witness = beta;
            return out;  // family is sorted: first hit is the least coloring
        }
    }
    return out;
}

}  // namespace

MaxKAnswer solve_max_k(const CnfFormula& f, std::int64_t k, const Mode& mode) {
    return solve_max_k_impl(f, f.clauses, k, mode);
}

MaxKAnswer solve_max_k(const DnfFormula& f, std::int64_t k, const Mode& mode) {
    return solve_max_k_impl(f, f.terms, k, mode);
}

}  // namespace pmax
