#include <catch2/catch_amalgamated.hpp>

#include "helpers.hpp"

using namespace epp;

TEST_CASE("instance parsing") {
    SECTION("minimal A-B instance") {
        Instance inst = parse_instance("n 2\ne 0 1\nA 0\nB 1\n");
        REQUIRE(inst.graph.alive_vertex_count() == 2);
        REQUIRE(inst.graph.alive_edge_count() == 1);
        REQUIRE(inst.a == VertexSet{0});
        REQUIRE(inst.b == VertexSet{1});
    }
    SECTION("comments and partitions") {
        Instance inst = parse_instance("# header\nn 6\ne 0 1 # chatter\ne 1 2\nS 0 | 2\nX 3\n");
        REQUIRE(inst.parts->size() == 2);
        REQUIRE(inst.hub == 3);
    }
    SECTION("rejects bad records") {
        REQUIRE_THROWS_AS(parse_instance("n 2\ne 0 0\n"), parse_error);
        REQUIRE_THROWS_AS(parse_instance("n 2\ne 0 1\ne 1 0\n"), parse_error);
        REQUIRE_THROWS_AS(parse_instance("n 2\ne 0 5\n"), parse_error);
        REQUIRE_THROWS_AS(parse_instance("n 2\nq 1\n"), parse_error);
        REQUIRE_THROWS_AS(parse_instance("e 0 1\n"), parse_error);
        REQUIRE_THROWS_AS(parse_instance("n 3\nA 0\nA 1\n"), parse_error);
        REQUIRE_THROWS_AS(parse_instance("n 3\nS 0 | 0\n"), parse_error);
    }
    SECTION("line numbers in errors") {
        try {
            parse_instance("n 3\ne 0 1\ne 0 9\n");
            FAIL("expected parse_error");
        } catch (const parse_error& e) {
            REQUIRE(e.line == 3);
        }
    }
}

TEST_CASE("instance serialization round-trips") {
    std::mt19937_64 seeds(4242);
    for (int round = 0; round < 10; ++round) {
        GenOptions opt;
        opt.n = 7;
        opt.p = 0.4;
        opt.seed = seeds();
        opt.kind = round % 2 ? PathKind::SPath : PathKind::AB;
        opt.a_size = 2;
        opt.b_size = 2;
        opt.part_sizes = {2, 1};
        Instance inst = gen_random(opt);
        std::string text = serialize_instance(inst);
        Instance back = parse_instance(text);
        REQUIRE(serialize_instance(back) == text);
        REQUIRE(back.graph.alive_edge_count() == inst.graph.alive_edge_count());
    }
}

TEST_CASE("generation is deterministic and respects kinds") {
    GenOptions opt;
    opt.n = 6;
    opt.p = 0.5;
    opt.seed = 99;
    opt.kind = PathKind::AB;
    opt.a_size = 2;
    opt.b_size = 2;
    Instance one = gen_random(opt);
    Instance two = gen_random(opt);
    REQUIRE(serialize_instance(one) == serialize_instance(two));
    for (VertexId v : *one.a) REQUIRE_FALSE(one.b->count(v));

    opt.p = 0.0;
    REQUIRE(gen_random(opt).graph.alive_edge_count() == 0);
    opt.p = 1.0;
    opt.n = 4;
    REQUIRE(gen_random(opt).graph.alive_edge_count() == 6);
}

TEST_CASE("certificate documents round-trip through verification") {
    BoundTable table;
    SolveParams params;
    params.k = 2;
    params.len = 2;
    params.oracle = OracleLimits{32, 64};

    GenOptions opt;
    opt.n = 7;
    opt.p = 0.45;
    opt.seed = 7;
    opt.kind = PathKind::AB;
    opt.a_size = 2;
    opt.b_size = 2;
    Instance inst = gen_random(opt);
    Certificate cert = solve_ab(inst.graph, *inst.a, *inst.b, table, params);

    std::string doc = serialize_certificate(inst.graph, cert);
    Certificate back = parse_certificate(doc, inst);
    REQUIRE(back.type == cert.type);
    REQUIRE(back.k == cert.k);
    REQUIRE_FALSE(verify_certificate(inst.graph, back, OracleLimits{96, 192}));

    SECTION("tampering is caught") {
        if (cert.is_packing()) {
            nlohmann::json j = nlohmann::json::parse(doc);
            j["k"] = cert.k + 3;
            Certificate bad = parse_certificate(j.dump(), inst);
            auto v = verify_certificate(inst.graph, bad, OracleLimits{96, 192});
            REQUIRE(v);
            REQUIRE(v->code == ViolationCode::TooFewPaths);
        } else {
            nlohmann::json j = nlohmann::json::parse(doc);
            j["edges"] = nlohmann::json::array();
            Certificate bad = parse_certificate(j.dump(), inst);
            auto v = verify_certificate(inst.graph, bad, OracleLimits{96, 192});
            REQUIRE(v);
        }
    }
}

TEST_CASE("certificate parser rejects malformed documents") {
    Instance inst = parse_instance("n 3\ne 0 1\ne 1 2\nA 0\nB 2\n");
    REQUIRE_THROWS_AS(parse_certificate("not json", inst), parse_error);
    REQUIRE_THROWS_AS(parse_certificate("{}", inst), parse_error);
    REQUIRE_THROWS_AS(parse_certificate(
                          R"({"type":"hitting","kind":"ab","k":1,"len":1,"paths":[],"edges":[[0,2]],"bound":"0"})",
                          inst),
                      parse_error); // 0-2 is not an edge
}

TEST_CASE("spec_for checks kind requirements") {
    Instance inst = parse_instance("n 3\ne 0 1\nA 0\n");
    REQUIRE_THROWS_AS(spec_for(inst, PathKind::AB, 1), std::invalid_argument);
    REQUIRE_THROWS_AS(spec_for(inst, PathKind::SPath, 1), std::invalid_argument);
    REQUIRE(spec_for(inst, PathKind::APath, 2).kind == PathKind::APath);
}
