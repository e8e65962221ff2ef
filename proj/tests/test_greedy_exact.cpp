#include <cmath>

#include "doctest.h"
#include "polarmin/errors.hpp"
#include "polarmin/graphgen.hpp"
#include "polarmin/greedy_exact.hpp"

using namespace polarmin;

namespace {
LeaderConfig config_with_universe(const Graph& g, std::vector<int> leaders) {
    LeaderConfig cfg = make_leader_config(g, std::move(leaders));
    cfg.candidates = candidate_universe(g, cfg);
    return cfg;
}
}  // namespace

TEST_CASE("group effective resistance: closed forms") {
    Graph p3 = path_graph(3);
    LeaderConfig a_cfg = make_leader_config(p3, {2});
    GroundedSystem a = grounded_laplacian(p3, a_cfg);
    CHECK(effective_resistance(a) == doctest::Approx(3.0).epsilon(1e-12));

    Graph k3 = complete_graph(3);
    LeaderConfig b_cfg = make_leader_config(k3, {0});
    GroundedSystem b = grounded_laplacian(k3, b_cfg);
    CHECK(effective_resistance(b) == doctest::Approx(4.0 / 3.0).epsilon(1e-12));

    for (int leaves : {3, 7}) {
        Graph s = star_graph(leaves);
        LeaderConfig c_cfg = make_leader_config(s, {0});
        GroundedSystem c = grounded_laplacian(s, c_cfg);
        CHECK(effective_resistance(c) ==
              doctest::Approx(double(leaves)).epsilon(1e-12));
    }
}

TEST_CASE("gains from the maintained inverse: path oracle") {
    Graph p3 = path_graph(3);
    LeaderConfig cfg = config_with_universe(p3, {2});
    DenseInverse invm = dense_inverse(grounded_laplacian(p3, cfg));
    auto gains = exact_gains(invm, cfg, cfg.candidates);
    REQUIRE(gains.size() == 1);
    CHECK(gains[0].t == doctest::Approx(5.0).epsilon(1e-12));  // ||(2,1)||^2
    CHECK(gains[0].r == doctest::Approx(2.0).epsilon(1e-12));
    CHECK(gains[0].gain == doctest::Approx(5.0 / 3.0).epsilon(1e-12));

    // the gain is exactly the trace drop: 3 - 5/3 = 4/3
    GroundedSystem after = grounded_laplacian(p3, cfg);
    add_candidate(after, cfg.candidates[0]);
    CHECK(effective_resistance(after) ==
          doctest::Approx(3.0 - gains[0].gain).epsilon(1e-12));
}

TEST_CASE("gains approach t/r as the weight grows, never exceed it") {
    Graph p3 = path_graph(3);
    LeaderConfig cfg = make_leader_config(p3, {2});
    cfg.candidates = candidate_universe(p3, cfg, 1e9);
    DenseInverse invm = dense_inverse(grounded_laplacian(p3, cfg));
    auto gains = exact_gains(invm, cfg, cfg.candidates);
    REQUIRE(gains.size() == 1);
    double cap = gains[0].t / gains[0].r;  // 2.5
    CHECK(gains[0].gain < cap);
    CHECK(gains[0].gain == doctest::Approx(cap).epsilon(1e-6));
}

TEST_CASE("gain equals trace drop on a weighted random instance") {
    Graph g = randomize_weights(sparse_random_graph(24, 3.5, 5), 0.25, 4.0, 6);
    LeaderConfig cfg = make_leader_config(g, {0, 5});
    cfg.candidates = candidate_universe(g, cfg, 0.8);
    GroundedSystem sys = grounded_laplacian(g, cfg);
    DenseInverse invm = dense_inverse(sys);
    double base = invm.trace();
    for (const auto& ge : exact_gains(invm, cfg, cfg.candidates)) {
        GroundedSystem mod = grounded_laplacian(g, cfg);
        add_candidate(mod, ge.edge);
        double drop = base - effective_resistance(mod);
        CHECK(ge.gain == doctest::Approx(drop).epsilon(1e-9));
        CHECK(ge.gain > 0.0);
        CHECK(ge.gain < ge.t / ge.r);
    }
}

TEST_CASE("greedy: path oracle run") {
    Graph p3 = path_graph(3);
    LeaderConfig cfg = config_with_universe(p3, {2});
    SelectionResult res = run_exact(p3, cfg, 1);
    CHECK(res.algorithm == "exact");
    REQUIRE(res.chosen.size() == 1);
    CHECK(res.chosen[0].leader == 2);
    CHECK(res.chosen[0].follower == 0);
    REQUIRE(res.trajectory.size() == 2);
    CHECK(res.trajectory[0] == doctest::Approx(3.0).epsilon(1e-12));
    CHECK(res.trajectory[1] == doctest::Approx(4.0 / 3.0).epsilon(1e-12));
    CHECK(!res.estimated);
    CHECK(res.round_wall_ms.size() == res.trajectory.size());
}

TEST_CASE("greedy: k = 0 reports only the base value") {
    Graph k3 = complete_graph(3);
    LeaderConfig cfg = config_with_universe(k3, {0});
    SelectionResult res = run_exact(k3, cfg, 0);
    CHECK(res.chosen.empty());
    REQUIRE(res.trajectory.size() == 1);
    CHECK(res.trajectory[0] == doctest::Approx(4.0 / 3.0).epsilon(1e-12));
}

TEST_CASE("greedy: picks the end of the dangling path first") {
    // path 0-1-2-3 led from 3: candidate (3,0) gains 3.5, (3,1) gains 3
    Graph p4 = path_graph(4);
    LeaderConfig cfg = config_with_universe(p4, {3});
    SelectionResult res = run_exact(p4, cfg, 1);
    REQUIRE(res.chosen.size() == 1);
    CHECK(res.chosen[0].follower == 0);
    CHECK(res.trajectory[0] == doctest::Approx(6.0).epsilon(1e-12));
    CHECK(res.trajectory[1] == doctest::Approx(2.5).epsilon(1e-12));
}

TEST_CASE("greedy: equal gains break toward the smaller (follower, leader)") {
    // path 0-..-4 led from both ends; both candidates on follower 2 tie
    Graph p5 = path_graph(5);
    LeaderConfig cfg = config_with_universe(p5, {0, 4});
    SelectionResult res = run_exact(p5, cfg, 1);
    REQUIRE(res.chosen.size() == 1);
    CHECK(res.chosen[0].follower == 2);
    CHECK(res.chosen[0].leader == 0);

    SelectionResult again = run_exact(p5, cfg, 1);
    CHECK(again.chosen[0].leader == res.chosen[0].leader);
    CHECK(again.trajectory == res.trajectory);
}

TEST_CASE("greedy: trajectory strictly decreases and matches recomputation") {
    Graph g = randomize_weights(grid_graph(4, 5), 0.5, 2.0, 31);
    LeaderConfig cfg = config_with_universe(g, {3, 9});
    int k = 5;
    SelectionResult res = run_exact(g, cfg, k);
    REQUIRE(res.trajectory.size() == std::size_t(k + 1));
    for (int i = 0; i < k; ++i) CHECK(res.trajectory[i + 1] < res.trajectory[i]);

    GroundedSystem sys = grounded_laplacian(g, cfg);
    for (const auto& e : res.chosen) add_candidate(sys, e);
    CHECK(effective_resistance(sys) ==
          doctest::Approx(res.final_value()).epsilon(1e-9));
}

TEST_CASE("greedy: guards") {
    Graph p3 = path_graph(3);
    LeaderConfig cfg = config_with_universe(p3, {2});
    CHECK_THROWS_AS(run_exact(p3, cfg, 2), ValidationError);  // one candidate
    CHECK_THROWS_AS(run_exact(p3, cfg, -1), ValidationError);
    ExactOptions opts;
    opts.dense_cap = 1;
    CHECK_THROWS_AS(run_exact(p3, cfg, 1, opts), CapacityError);
}
