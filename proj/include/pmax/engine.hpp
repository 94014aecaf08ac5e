#pragma once

#include <algorithm>
#include <cstdint>
#include <cstdlib>
#include <optional>
#include <thread>
#include <vector>

#include "pmax/common.hpp"

namespace pmax {

// Frontier-of-instances execution substrate for the branching solvers. One
// round maps every instance through a pure step function; a step either
// decides the whole run or replaces its instance with up to b children. The
// verdict is the leftmost one of the earliest deciding round, independent of
// the worker count.

inline int engine_workers() {
    if (const char* env = std::getenv("PMAX_WORKERS")) {
        char* end = nullptr;
        long v = std::strtol(env, &end, 10);
        if (!end || *end != '\0' || v < 1 || v > 1024)
            throw Error("PMAX_WORKERS must be an integer in [1, 1024]");
        return int(v);
    }
    unsigned hc = std::thread::hardware_concurrency();
    return hc ? int(hc) : 1;
}

template <typename Verdict, typename Instance>
struct StepResult {
    std::optional<Verdict> verdict;
    std::vector<Instance> children;

    static StepResult decide(Verdict v) { return {std::move(v), {}}; }
    static StepResult expand(std::vector<Instance> c) { return {std::nullopt, std::move(c)}; }
    static StepResult prune() { return {std::nullopt, {}}; }
};

struct RunStats {
    std::int64_t rounds = 0;
    std::size_t frontier_peak = 0;
};

// Exhausted (the frontier emptied or max_rounds passed) is nullopt. A round
// producing more than growth_bound children per instance is a solver bug and
// raises InternalError.
template <typename Verdict, typename Instance, typename Step>
std::optional<Verdict> run_rounds(std::vector<Instance> frontier, Step&& step,
                                  std::int64_t max_rounds, std::size_t growth_bound,
                                  RunStats* stats = nullptr, int workers = 0) {
    if (max_rounds < 0) throw Error("engine: negative round bound");
    if (growth_bound == 0) throw Error("engine: zero growth bound");
    if (workers <= 0) workers = engine_workers();

    RunStats st;
    st.frontier_peak = frontier.size();
    auto finish = [&](std::optional<Verdict> v) {
        if (stats) *stats = st;
        return v;
    };

    for (std::int64_t round = 1; round <= max_rounds && !frontier.empty(); round++) {
        st.rounds = round;
        st.frontier_peak = std::max(st.frontier_peak, frontier.size());

        const std::size_t count = frontier.size();
        std::vector<StepResult<Verdict, Instance>> results(count);
        std::size_t w = std::min<std::size_t>(std::size_t(workers), count);
        if (w <= 1) {
            for (std::size_t i = 0; i < count; i++) results[i] = step(frontier[i]);
        } else {
            // Contiguous index slices; every instance of the round is
            // evaluated before any verdict is taken, so the outcome cannot
            // depend on scheduling.
            std::vector<std::exception_ptr> errors(count);
            std::vector<std::thread> threads;
            threads.reserve(w);
            for (std::size_t j = 0; j < w; j++) {
                std::size_t begin = count * j / w;
                std::size_t end = count * (j + 1) / w;
                threads.emplace_back([&, begin, end] {
                    for (std::size_t i = begin; i < end; i++) {
                        try {
                            results[i] = step(frontier[i]);
                        } catch (...) {
                            errors[i] = std::current_exception();
                        }
                    }
                });
            }
            for (auto& th : threads) th.join();
            for (std::size_t i = 0; i < count; i++)
                if (errors[i]) std::rethrow_exception(errors[i]);
        }

        for (auto& r : results)
            if (r.verdict) return finish(std::move(r.verdict));

        std::vector<Instance> next;
        for (auto& r : results) {
            if (r.children.size() > growth_bound)
                throw InternalError("engine: a step exceeded the growth bound");
            for (auto& child : r.children) next.push_back(std::move(child));
        }
        frontier = std::move(next);
    }
    return finish(std::nullopt);
}

}  // namespace pmax
