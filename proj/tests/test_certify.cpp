#include <catch2/catch_amalgamated.hpp>

#include "helpers.hpp"

using namespace epp;
using test_util::make_graph;

TEST_CASE("verify_packing outcomes") {
    Graph g = test_util::cycle_graph(4);
    PathSpec spec = PathSpec::ab({0}, {2}, 2);
    Path left(g, {0, 1, 2});
    Path right(g, {0, 3, 2});

    SECTION("a valid packing is OK") {
        REQUIRE_FALSE(verify_packing(g, spec, 2, {left, right}));
    }
    SECTION("too few paths") {
        auto v = verify_packing(g, spec, 2, {left});
        REQUIRE(v);
        REQUIRE(v->code == ViolationCode::TooFewPaths);
    }
    SECTION("shared edge is reported with the edge") {
        auto v = verify_packing(g, spec, 2, {left, left});
        REQUIRE(v);
        REQUIRE(v->code == ViolationCode::NotEdgeDisjoint);
        REQUIRE(v->witness_edge);
        REQUIRE(left.contains_edge(*v->witness_edge));
    }
    SECTION("too short") {
        PathSpec long_spec = PathSpec::ab({0}, {2}, 3);
        auto v = verify_packing(g, long_spec, 1, {left});
        REQUIRE(v);
        REQUIRE(v->code == ViolationCode::TooShort);
    }
    SECTION("wrong endpoints") {
        auto v = verify_packing(g, spec, 1, {Path(g, {1, 2, 3})});
        REQUIRE(v);
        REQUIRE(v->code == ViolationCode::WrongEndpoints);
    }
    SECTION("forbidden interior vertex") {
        Graph h = test_util::path_graph(4);
        PathSpec s2 = PathSpec::ab({0, 2}, {3}, 1);
        Path through(h, {0, 1, 2, 3});
        auto v = verify_packing(h, s2, 1, {through});
        REQUIRE(v);
        REQUIRE(v->code == ViolationCode::InteriorForbidden);
    }
    SECTION("structurally broken path") {
        Path fake = left;
        fake.edges[0] = 99;
        auto v = verify_packing(g, spec, 1, {fake});
        REQUIRE(v);
        REQUIRE(v->code == ViolationCode::NotAPath);
    }
    SECTION("cycle requirements") {
        PathSpec cyc = PathSpec::cycle_through(0, 4);
        Path c(g, {0, 1, 2, 3}, true);
        REQUIRE_FALSE(verify_packing(g, cyc, 1, {c}));
        auto v = verify_packing(g, cyc, 1, {left});
        REQUIRE(v);
        REQUIRE(v->code == ViolationCode::WrongEndpoints);
    }
}

TEST_CASE("verify_hitting outcomes") {
    Graph g = test_util::path_graph(4);
    PathSpec spec = PathSpec::ab({0}, {3}, 3);

    SECTION("empty set on an empty family") {
        Graph h = test_util::path_graph(3);
        REQUIRE_FALSE(verify_hitting(h, PathSpec::ab({0}, {2}, 3), {}, 0));
    }
    SECTION("surviving path carries a witness") {
        auto v = verify_hitting(g, spec, {}, 5);
        REQUIRE(v);
        REQUIRE(v->code == ViolationCode::SurvivingPath);
        REQUIRE(v->witness_path);
        REQUIRE(qualifies(spec, *v->witness_path));
    }
    SECTION("bound exceeded") {
        auto v = verify_hitting(g, spec, {0, 1}, 1);
        REQUIRE(v);
        REQUIRE(v->code == ViolationCode::BoundExceeded);
    }
    SECTION("good hitting set") {
        REQUIRE_FALSE(verify_hitting(g, spec, {1}, 1));
    }
}

TEST_CASE("verify_packing disjointness agrees with the quadratic check") {
    std::mt19937_64 rng(321);
    for (int round = 0; round < 40; ++round) {
        Graph g = test_util::random_graph(7, 0.5, rng);
        PathSpec spec = PathSpec::a_star({0, 1, 2, 3, 4, 5, 6}, 1);
        auto all = all_qualifying(g, spec, OracleLimits{16, 64});
        if (all.size() < 2) continue;
        std::vector<Path> sample;
        for (const auto& p : all)
            if (rng() % 4 == 0 && sample.size() < 4) sample.push_back(p);
        if (sample.empty()) continue;

        bool quad_ok = true;
        for (size_t i = 0; i < sample.size() && quad_ok; ++i)
            for (size_t j = i + 1; j < sample.size() && quad_ok; ++j)
                if (!edge_disjoint(sample[i], sample[j])) quad_ok = false;

        auto v = verify_packing(g, spec, static_cast<int>(sample.size()), sample);
        bool verdict_disjoint = !v || v->code != ViolationCode::NotEdgeDisjoint;
        REQUIRE(quad_ok == verdict_disjoint);
    }
}

TEST_CASE("verified hitting sets are at least the exact optimum") {
    std::mt19937_64 rng(654);
    for (int round = 0; round < 25; ++round) {
        Graph g = test_util::random_graph(7, 0.4, rng);
        PathSpec spec = PathSpec::ab({0}, {5, 6}, 2);
        auto hit = exact_min_hitting(g, spec);
        REQUIRE_FALSE(verify_hitting(g, spec, hit.hitting, BigInt(hit.optimum)));
        // any verified set can only be bigger
        auto everything = g.edge_ids();
        REQUIRE_FALSE(verify_hitting(g, spec, everything, BigInt(everything.size())));
        REQUIRE(static_cast<int>(everything.size()) >= hit.optimum);
    }
}
