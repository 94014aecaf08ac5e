#include <string>
#include <vector>

#include "doctest.h"
#include "pmax/engine.hpp"

using namespace pmax;

namespace {

struct Node {
    int depth = 0;
    std::vector<int> path;
};

using NodeStep = StepResult<std::string, Node>;

std::string path_string(const std::vector<int>& p) {
    std::string s;
    for (int b : p) s += char('0' + b);
    return s;
}

}  // namespace

TEST_CASE("immediate verdict lands in round one") {
    RunStats st;
    auto verdict = run_rounds<int, int>(
        std::vector<int>{7},
        [](int v) { return StepResult<int, int>::decide(v * v); }, 10, 2, &st, 1);
    CHECK(verdict == 49);
    CHECK(st.rounds == 1);
    CHECK(st.frontier_peak == 1);
}

TEST_CASE("always-empty steps exhaust in round one") {
    RunStats st;
    auto verdict = run_rounds<int, int>(
        std::vector<int>{1, 2, 3},
        [](int) { return StepResult<int, int>::prune(); }, 10, 2, &st, 1);
    CHECK_FALSE(verdict.has_value());
    CHECK(st.rounds == 1);
    CHECK(st.frontier_peak == 3);
}

TEST_CASE("empty initial frontier exhausts with zero rounds") {
    RunStats st;
    auto verdict = run_rounds<int, int>(
        std::vector<int>{}, [](int v) { return StepResult<int, int>::decide(v); }, 10, 2, &st, 1);
    CHECK_FALSE(verdict.has_value());
    CHECK(st.rounds == 0);
}

TEST_CASE("max_rounds cuts the run off") {
    RunStats st;
    auto verdict = run_rounds<int, int>(
        std::vector<int>{0},
        [](int v) { return StepResult<int, int>::expand({v + 1}); }, 5, 2, &st, 1);
    CHECK_FALSE(verdict.has_value());
    CHECK(st.rounds == 5);
}

TEST_CASE("leftmost verdict of the earliest round wins") {
    // Both instances decide in round one: the left one is the answer.
    auto both = run_rounds<std::string, std::string>(
        std::vector<std::string>{"left", "right"},
        [](const std::string& s) { return StepResult<std::string, std::string>::decide(s); },
        10, 2, nullptr, 1);
    CHECK(both == "left");

    // The left instance needs two rounds, the right one decides at once: the
    // earlier round wins even though it is further right.
    auto earliest = run_rounds<std::string, std::string>(
        std::vector<std::string>{"slow", "fast"},
        [](const std::string& s) {
            if (s == "slow") return StepResult<std::string, std::string>::expand({"slow-done"});
            return StepResult<std::string, std::string>::decide(s);
        },
        10, 2, nullptr, 1);
    CHECK(earliest == "fast");
}

TEST_CASE("binary branching finds the single accepting leaf at its depth") {
    const int depth = 7;
    const std::vector<int> target{1, 0, 1, 1, 0, 0, 1};
    auto step = [&](const Node& node) {
        if (node.depth == depth) {
            if (node.path == target) return NodeStep::decide(path_string(node.path));
            return NodeStep::prune();
        }
        Node zero{node.depth + 1, node.path};
        zero.path.push_back(0);
        Node one{node.depth + 1, node.path};
        one.path.push_back(1);
        return NodeStep::expand({zero, one});
    };

    RunStats sequential;
    auto v1 = run_rounds<std::string, Node>({Node{}}, step, 100, 2, &sequential, 1);
    CHECK(v1 == path_string(target));
    CHECK(sequential.rounds == depth + 1);
    CHECK(sequential.frontier_peak == std::size_t(1) << depth);

    // Identical verdict and statistics on several worker counts.
    for (int workers : {2, 3, 4, 13}) {
        RunStats st;
        auto v = run_rounds<std::string, Node>({Node{}}, step, 100, 2, &st, workers);
        CHECK(v == v1);
        CHECK(st.rounds == sequential.rounds);
        CHECK(st.frontier_peak == sequential.frontier_peak);
    }
}

TEST_CASE("the growth bound trips exactly on oversized replacement lists") {
    auto fan_out = [](int v) {
        if (v == 0) return StepResult<int, int>::expand({1, 2, 3});
        return StepResult<int, int>::prune();
    };
    CHECK_THROWS_AS((run_rounds<int, int>({0}, fan_out, 10, 2, nullptr, 1)), InternalError);
    CHECK_FALSE(run_rounds<int, int>({0}, fan_out, 10, 3, nullptr, 1).has_value());
}

TEST_CASE("worker exceptions surface deterministically") {
    auto step = [](int v) -> StepResult<int, int> {
        if (v % 2 == 1) throw Error("odd instance " + std::to_string(v));
        return StepResult<int, int>::prune();
    };
    for (int workers : {1, 4}) {
        try {
            run_rounds<int, int>({0, 3, 2, 5}, step, 10, 2, nullptr, workers);
            FAIL("expected an error");
        } catch (const Error& e) {
            CHECK(std::string(e.what()) == "odd instance 3");
        }
    }
}

TEST_CASE("engine worker count parsing") {
    // The env override must be a small positive integer when present.
    if (const char* env = std::getenv("PMAX_WORKERS")) {
        (void)env;
        CHECK(engine_workers() >= 1);
    } else {
        CHECK(engine_workers() >= 1);
    }
    CHECK_THROWS_AS((run_rounds<int, int>(
                        {0}, [](int) { return StepResult<int, int>::prune(); }, -1, 2)),
                    Error);
    CHECK_THROWS_AS((run_rounds<int, int>(
                        {0}, [](int) { return StepResult<int, int>::prune(); }, 1, 0)),
                    Error);
}
