// Command-line front end: solve / oracle / bounds / gen / verify.
//
// Exit codes: 0 success or verification OK, 1 verification violation,
// 2 usage or parse error, 3 oracle size cap exceeded.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "epp/epp.hpp"

namespace {

std::string read_file(const std::string& path) {
    if (path == "-") {
        std::ostringstream buf;
        buf << std::cin.rdbuf();
        return buf.str();
    }
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("cannot open file: " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

void write_file(const std::string& path, const std::string& text) {
    if (path.empty() || path == "-") {
        std::cout << text;
        return;
    }
    std::ofstream out(path);
    if (!out) throw std::invalid_argument("cannot open file for writing: " + path);
    out << text;
}

epp::OracleLimits limits_from_env() {
    epp::OracleLimits lim;
    const char* env = std::getenv("EPP_ORACLE_CAP");
    if (!env) return lim;
    int v = 0, e = 0;
    char comma = 0;
    std::istringstream is(env);
    if (is >> v >> comma >> e && comma == ',' && v > 0 && e > 0) {
        lim.max_vertices = v;
        lim.max_edges = e;
        return lim;
    }
    throw std::invalid_argument("EPP_ORACLE_CAP must look like '<vertices>,<edges>'");
}

epp::PathKind parse_kind(const std::string& s) {
    auto k = epp::kind_from_name(s);
    if (!k) throw std::invalid_argument("unknown kind: " + s);
    return *k;
}

int run(int argc, char** argv) {
    CLI::App app{"certifying solvers for edge-disjoint long path packing and covering"};
    app.require_subcommand(1);

    // solve
    auto* solve = app.add_subcommand("solve", "solve an instance and emit a certificate");
    std::string s_kind, s_in, s_out;
    int s_k = 1, s_len = 1;
    bool s_verify = false;
    solve->add_option("--kind", s_kind, "ab|ab-general|a|astar|astar-b|astar-bstar|s|cycles-at")
        ->required();
    solve->add_option("--k", s_k, "number of edge-disjoint paths wanted")->required();
    solve->add_option("--len", s_len, "minimum path length")->required();
    solve->add_option("--in", s_in, "instance file ('-' for stdin)")->required();
    solve->add_option("--out", s_out, "certificate file (default stdout)");
    solve->add_flag("--verify", s_verify, "re-check the certificate before writing");

    // oracle
    auto* oracle = app.add_subcommand("oracle", "exact optimum packing or hitting set");
    std::string o_kind, o_in, o_mode;
    int o_len = 1;
    oracle->add_option("--kind", o_kind)->required();
    oracle->add_option("--len", o_len)->required();
    oracle->add_option("--in", o_in)->required();
    oracle->add_option("--mode", o_mode, "packing|hitting")->required();

    // bounds
    auto* bounds_cmd = app.add_subcommand("bounds", "evaluate a hitting-set bound function");
    std::string b_func;
    int b_k = 1, b_len = 1;
    bounds_cmd->add_option("--func", b_func, "f|g|f1|f2")->required();
    bounds_cmd->add_option("--k", b_k)->required();
    bounds_cmd->add_option("--len", b_len)->required();

    // gen
    auto* gen = app.add_subcommand("gen", "generate a seeded random instance");
    std::string g_kind = "ab", g_out, g_parts;
    int g_n = 8, g_a = 1, g_b = 1;
    double g_p = 0.3;
    std::uint64_t g_seed = 1;
    gen->add_option("--n", g_n, "vertex count");
    gen->add_option("--p", g_p, "edge probability");
    gen->add_option("--seed", g_seed, "PRNG seed");
    gen->add_option("--kind", g_kind, "which terminal declarations to emit");
    gen->add_option("--a-size", g_a, "size of A");
    gen->add_option("--b-size", g_b, "size of B");
    gen->add_option("--parts", g_parts, "comma-separated part sizes for kind s");
    gen->add_option("--out", g_out, "output file (default stdout)");

    // verify
    auto* verify = app.add_subcommand("verify", "check a certificate against an instance");
    std::string v_in, v_cert;
    verify->add_option("--in", v_in)->required();
    verify->add_option("--cert", v_cert)->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    epp::BoundTable table;
    epp::OracleLimits lim = limits_from_env();

    if (solve->parsed()) {
        epp::PathKind kind = parse_kind(s_kind);
        epp::Instance inst = epp::parse_instance(read_file(s_in));
        epp::PathSpec spec = epp::spec_for(inst, kind, s_len);
        if (s_k < 1 || s_len < 1) throw std::invalid_argument("k and len must be >= 1");
        epp::SolveParams params;
        params.k = s_k;
        params.len = s_len;
        params.oracle = lim;
        epp::Certificate cert;
        switch (kind) {
        case epp::PathKind::AB:
            cert = epp::solve_ab(inst.graph, spec.a, spec.b, table, params);
            break;
        case epp::PathKind::ABGeneral:
            cert = epp::solve_ab_general(inst.graph, spec.a, spec.b, table, params);
            break;
        case epp::PathKind::APath:
            cert = epp::solve_a_paths(inst.graph, spec.a, table, params);
            break;
        case epp::PathKind::AStar:
            cert = epp::solve_astar_paths(inst.graph, spec.a, table, params);
            break;
        case epp::PathKind::AStarB:
            cert = epp::solve_astar_b(inst.graph, spec.a, spec.b, table, params);
            break;
        case epp::PathKind::AStarBStar:
            cert = epp::solve_astar_bstar(inst.graph, spec.a, spec.b, table, params);
            break;
        case epp::PathKind::SPath:
            cert = epp::solve_s_paths(inst.graph, spec.parts, table, params);
            break;
        case epp::PathKind::CycleThrough:
            cert = epp::solve_cycles_at(inst.graph, spec.hub, table, params);
            break;
        }
        if (s_verify) {
            if (auto v = epp::verify_certificate(inst.graph, cert, lim.gadget_envelope())) {
                std::cerr << "certificate failed verification: " << v->describe() << "\n";
                return 1;
            }
        }
        write_file(s_out, epp::serialize_certificate(inst.graph, cert));
        return 0;
    }

    if (oracle->parsed()) {
        epp::PathKind kind = parse_kind(o_kind);
        epp::Instance inst = epp::parse_instance(read_file(o_in));
        epp::PathSpec spec = epp::spec_for(inst, kind, o_len);
        nlohmann::json doc;
        if (o_mode == "packing") {
            epp::OracleResult r = epp::exact_max_packing(inst.graph, spec, lim);
            doc["optimum"] = r.optimum;
            nlohmann::json paths = nlohmann::json::array();
            for (const auto& p : r.packing) paths.push_back(p.verts);
            doc["paths"] = std::move(paths);
        } else if (o_mode == "hitting") {
            epp::OracleResult r = epp::exact_min_hitting(inst.graph, spec, lim);
            doc["optimum"] = r.optimum;
            nlohmann::json edges = nlohmann::json::array();
            for (epp::EdgeId e : r.hitting) {
                const epp::Edge& ed = inst.graph.edge(e);
                edges.push_back({std::min(ed.u, ed.v), std::max(ed.u, ed.v)});
            }
            doc["edges"] = std::move(edges);
        } else {
            throw std::invalid_argument("mode must be packing or hitting");
        }
        std::cout << doc.dump(2) << "\n";
        return 0;
    }

    if (bounds_cmd->parsed()) {
        if (b_k < 1 || b_len < 1) throw std::invalid_argument("k and len must be >= 1");
        epp::BigInt v;
        if (b_func == "f")
            v = table.f(b_k, b_len);
        else if (b_func == "g")
            v = table.g(b_k, b_len);
        else if (b_func == "f1")
            v = table.f1(b_k, b_len);
        else if (b_func == "f2")
            v = table.f2(b_k, b_len);
        else
            throw std::invalid_argument("func must be one of f, g, f1, f2");
        std::cout << epp::to_decimal(v) << "\n";
        return 0;
    }

    if (gen->parsed()) {
        epp::GenOptions opt;
        opt.n = g_n;
        opt.p = g_p;
        opt.seed = g_seed;
        opt.kind = parse_kind(g_kind);
        opt.a_size = g_a;
        opt.b_size = g_b;
        if (!g_parts.empty()) {
            std::istringstream ps(g_parts);
            std::string tok;
            while (std::getline(ps, tok, ',')) opt.part_sizes.push_back(std::stoi(tok));
        }
        epp::Instance inst = epp::gen_random(opt);
        write_file(g_out, epp::serialize_instance(inst));
        return 0;
    }

    if (verify->parsed()) {
        epp::Instance inst = epp::parse_instance(read_file(v_in));
        epp::Certificate cert = epp::parse_certificate(read_file(v_cert), inst);
        if (auto v = epp::verify_certificate(inst.graph, cert, lim.gadget_envelope())) {
            std::cerr << "violation: " << v->describe() << "\n";
            return 1;
        }
        std::cout << "OK\n";
        return 0;
    }
    return 2;
}

} // namespace

int main(int argc, char** argv) {
    try {
        return run(argc, argv);
    } catch (const epp::oracle_too_large& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    } catch (const epp::parse_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return 2;
    }
}
