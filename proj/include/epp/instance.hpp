#pragma once

// Instance text format (one record per line, '#' starts a comment):
//
//   n <count>            vertex count, must precede everything else
//   e <u> <v>            edge; self-loops and duplicates rejected
//   A <v...>             terminal set A
//   B <v...>             terminal set B
//   S <v...> | <v...>    partition parts
//   X <v>                hub vertex
//
// Certificates are single JSON documents with decimal-string bounds (they
// exceed 64-bit range at small parameters).

#include <cstdint>
#include <optional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "epp/bigint.hpp"
#include "epp/certificate.hpp"
#include "epp/graph.hpp"
#include "epp/path_spec.hpp"

namespace epp {

struct parse_error : std::runtime_error {
    int line;
    parse_error(int ln, const std::string& what)
        : std::runtime_error("line " + std::to_string(ln) + ": " + what), line(ln) {}
};

struct Instance {
    Graph graph;
    std::optional<VertexSet> a;
    std::optional<VertexSet> b;
    std::optional<std::vector<VertexSet>> parts;
    std::optional<VertexId> hub;
};

inline Instance parse_instance(const std::string& text) {
    Instance inst;
    bool have_n = false;
    std::istringstream in(text);
    std::string raw;
    int ln = 0;
    auto parse_vertex = [&](const std::string& tok) {
        size_t pos = 0;
        int v;
        try {
            v = std::stoi(tok, &pos);
        } catch (...) {
            throw parse_error(ln, "not a vertex id: '" + tok + "'");
        }
        if (pos != tok.size()) throw parse_error(ln, "not a vertex id: '" + tok + "'");
        if (!have_n || v < 0 || v >= inst.graph.vertex_slots())
            throw parse_error(ln, "vertex id out of range: " + tok);
        return v;
    };
    while (std::getline(in, raw)) {
        ++ln;
        std::string line = raw.substr(0, raw.find('#'));
        std::istringstream ls(line);
        std::string rec;
        if (!(ls >> rec)) continue;
        if (rec == "n") {
            if (have_n) throw parse_error(ln, "duplicate n record");
            long long cnt;
            if (!(ls >> cnt) || cnt < 0 || cnt > 1'000'000) throw parse_error(ln, "bad vertex count");
            inst.graph = Graph(static_cast<int>(cnt));
            have_n = true;
        } else if (rec == "e") {
            std::string su, sv;
            if (!(ls >> su >> sv)) throw parse_error(ln, "edge needs two endpoints");
            VertexId u = parse_vertex(su), v = parse_vertex(sv);
            if (u == v) throw parse_error(ln, "self-loop on vertex " + su);
            if (inst.graph.edge_between(u, v)) throw parse_error(ln, "duplicate edge");
            inst.graph.add_edge(u, v);
        } else if (rec == "A" || rec == "B") {
            auto& slot = rec == "A" ? inst.a : inst.b;
            if (slot) throw parse_error(ln, "duplicate " + rec + " record");
            VertexSet s;
            std::string tok;
            while (ls >> tok) s.insert(parse_vertex(tok));
            slot = std::move(s);
        } else if (rec == "S") {
            if (inst.parts) throw parse_error(ln, "duplicate S record");
            std::vector<VertexSet> parts(1);
            std::string tok;
            while (ls >> tok) {
                if (tok == "|") {
                    parts.emplace_back();
                } else {
                    VertexId v = parse_vertex(tok);
                    for (const auto& p : parts)
                        if (p.count(v)) throw parse_error(ln, "vertex repeats across parts");
                    parts.back().insert(v);
                }
            }
            for (const auto& p : parts)
                if (p.empty()) throw parse_error(ln, "empty partition part");
            inst.parts = std::move(parts);
        } else if (rec == "X") {
            if (inst.hub) throw parse_error(ln, "duplicate X record");
            std::string tok;
            if (!(ls >> tok)) throw parse_error(ln, "X needs a vertex");
            inst.hub = parse_vertex(tok);
        } else {
            throw parse_error(ln, "unknown record '" + rec + "'");
        }
        std::string extra;
        if (ls >> extra) throw parse_error(ln, "trailing tokens after record");
    }
    if (!have_n) throw parse_error(ln, "missing n record");
    return inst;
}

inline std::string serialize_instance(const Instance& inst) {
    std::ostringstream os;
    os << "n " << inst.graph.vertex_slots() << "\n";
    for (EdgeId e : inst.graph.edge_ids()) {
        const Edge& ed = inst.graph.edge(e);
        os << "e " << std::min(ed.u, ed.v) << " " << std::max(ed.u, ed.v) << "\n";
    }
    auto put_set = [&](const char* tag, const VertexSet& s) {
        os << tag;
        for (VertexId v : s) os << " " << v;
        os << "\n";
    };
    if (inst.a) put_set("A", *inst.a);
    if (inst.b) put_set("B", *inst.b);
    if (inst.parts) {
        os << "S";
        for (size_t i = 0; i < inst.parts->size(); ++i) {
            if (i) os << " |";
            for (VertexId v : (*inst.parts)[i]) os << " " << v;
        }
        os << "\n";
    }
    if (inst.hub) os << "X " << *inst.hub << "\n";
    return os.str();
}

// Builds the PathSpec a command asked for, checking the instance declares the
// sets that kind needs.
inline PathSpec spec_for(const Instance& inst, PathKind kind, int lmin) {
    auto need = [&](bool ok, const char* what) {
        if (!ok) throw std::invalid_argument(std::string("instance lacks ") + what +
                                             " required by kind " + kind_name(kind));
    };
    switch (kind) {
    case PathKind::AB:
        need(inst.a && inst.b, "A and B");
        return PathSpec::ab(*inst.a, *inst.b, lmin);
    case PathKind::ABGeneral:
        need(inst.a && inst.b, "A and B");
        return PathSpec::ab_general(*inst.a, *inst.b, lmin);
    case PathKind::APath:
        need(bool(inst.a), "A");
        return PathSpec::a_path(*inst.a, lmin);
    case PathKind::AStar:
        need(bool(inst.a), "A");
        return PathSpec::a_star(*inst.a, lmin);
    case PathKind::AStarB:
        need(inst.a && inst.b, "A and B");
        return PathSpec::a_star_b(*inst.a, *inst.b, lmin);
    case PathKind::AStarBStar:
        need(inst.a && inst.b, "A and B");
        return PathSpec::a_star_b_star(*inst.a, *inst.b, lmin);
    case PathKind::SPath:
        need(bool(inst.parts), "S");
        return PathSpec::s_path(*inst.parts, lmin);
    case PathKind::CycleThrough:
        need(bool(inst.hub), "X");
        return PathSpec::cycle_through(*inst.hub, lmin);
    }
    throw std::invalid_argument("unknown kind");
}

struct GenOptions {
    int n = 6;
    double p = 0.3;
    std::uint64_t seed = 1;
    PathKind kind = PathKind::AB;
    int a_size = 1;
    int b_size = 1;
    std::vector<int> part_sizes;
};

// Seeded G(n,p) plus terminal declarations. All randomness flows from the
// seed; raw 64-bit draws are used so identical inputs give identical bytes
// everywhere.
inline Instance gen_random(const GenOptions& opt) {
    if (opt.n < 0 || opt.p < 0.0 || opt.p > 1.0) throw std::invalid_argument("bad gen parameters");
    std::mt19937_64 rng(opt.seed);
    auto coin = [&](double p) {
        return static_cast<double>(rng() >> 11) < p * 9007199254740992.0; // 2^53
    };
    auto pick = [&](std::uint64_t m) { return static_cast<int>(rng() % m); };

    Instance inst;
    inst.graph = Graph(opt.n);
    for (VertexId u = 0; u < opt.n; ++u)
        for (VertexId v = u + 1; v < opt.n; ++v)
            if (coin(opt.p)) inst.graph.add_edge(u, v);

    auto sample = [&](int want) {
        if (want > opt.n) throw std::invalid_argument("terminal size exceeds vertex count");
        std::vector<VertexId> order(opt.n);
        for (int i = 0; i < opt.n; ++i) order[i] = i;
        for (int i = opt.n - 1; i > 0; --i) std::swap(order[i], order[pick(i + 1)]);
        return order;
    };

    switch (opt.kind) {
    case PathKind::AB:
    case PathKind::AStarB: {
        if (opt.a_size + opt.b_size > opt.n)
            throw std::invalid_argument("disjoint terminal sizes exceed vertex count");
        auto order = sample(opt.a_size + opt.b_size);
        inst.a = VertexSet(order.begin(), order.begin() + opt.a_size);
        inst.b = VertexSet(order.begin() + opt.a_size, order.begin() + opt.a_size + opt.b_size);
        break;
    }
    case PathKind::ABGeneral:
    case PathKind::AStarBStar: {
        auto order = sample(opt.a_size);
        inst.a = VertexSet(order.begin(), order.begin() + opt.a_size);
        auto order2 = sample(opt.b_size);
        inst.b = VertexSet(order2.begin(), order2.begin() + opt.b_size);
        break;
    }
    case PathKind::APath:
    case PathKind::AStar: {
        auto order = sample(opt.a_size);
        inst.a = VertexSet(order.begin(), order.begin() + opt.a_size);
        break;
    }
    case PathKind::SPath: {
        int total = 0;
        for (int s : opt.part_sizes) total += s;
        if (opt.part_sizes.empty() || total > opt.n)
            throw std::invalid_argument("bad partition sizes");
        auto order = sample(total);
        std::vector<VertexSet> parts;
        int at = 0;
        for (int s : opt.part_sizes) {
            parts.emplace_back(order.begin() + at, order.begin() + at + s);
            at += s;
        }
        inst.parts = std::move(parts);
        break;
    }
    case PathKind::CycleThrough: {
        if (opt.n < 1) throw std::invalid_argument("need a vertex for the hub");
        inst.hub = sample(1).front();
        break;
    }
    }
    return inst;
}

inline std::string serialize_certificate(const Graph& g, const Certificate& c) {
    nlohmann::json doc;
    doc["type"] = c.is_packing() ? "packing" : "hitting";
    doc["kind"] = kind_name(c.spec.kind);
    doc["k"] = c.k;
    doc["len"] = c.spec.lmin;
    nlohmann::json paths = nlohmann::json::array();
    for (const Path& p : c.paths) paths.push_back(p.verts);
    doc["paths"] = std::move(paths);
    nlohmann::json edges = nlohmann::json::array();
    for (EdgeId e : c.edges) {
        const Edge& ed = g.edge(e);
        edges.push_back({std::min(ed.u, ed.v), std::max(ed.u, ed.v)});
    }
    doc["edges"] = std::move(edges);
    doc["bound"] = to_decimal(c.bound);
    return doc.dump(2) + "\n";
}

inline Certificate parse_certificate(const std::string& text, const Instance& inst) {
    nlohmann::json doc;
    try {
        doc = nlohmann::json::parse(text);
    } catch (const nlohmann::json::exception& e) {
        throw parse_error(0, std::string("bad certificate document: ") + e.what());
    }
    auto fail = [](const std::string& why) { throw parse_error(0, "certificate: " + why); };
    if (!doc.is_object()) fail("not an object");
    for (const char* field : {"type", "kind", "k", "len", "paths", "edges", "bound"})
        if (!doc.contains(field)) fail(std::string("missing field ") + field);

    std::string type = doc["type"].get<std::string>();
    if (type != "packing" && type != "hitting") fail("bad type");
    auto kind = kind_from_name(doc["kind"].get<std::string>());
    if (!kind) fail("unknown kind");
    int k = doc["k"].get<int>();
    int len = doc["len"].get<int>();
    if (k < 1 || len < 1) fail("bad k or len");
    PathSpec spec = spec_for(inst, *kind, len);

    Certificate c;
    c.spec = spec;
    c.k = k;
    const Graph& g = inst.graph;
    if (type == "packing") {
        c.type = CertType::Packing;
        for (const auto& arr : doc["paths"]) {
            std::vector<VertexId> verts;
            for (const auto& v : arr) {
                int vid = v.get<int>();
                if (!g.has_vertex(vid)) fail("path vertex out of range");
                verts.push_back(vid);
            }
            bool closed = *kind == PathKind::CycleThrough;
            try {
                c.paths.push_back(Path(g, std::move(verts), closed));
            } catch (const std::invalid_argument& e) {
                fail(std::string("bad path: ") + e.what());
            }
        }
    } else {
        c.type = CertType::Hitting;
        for (const auto& pair : doc["edges"]) {
            if (!pair.is_array() || pair.size() != 2) fail("bad edge entry");
            int u = pair[0].get<int>(), v = pair[1].get<int>();
            if (!g.has_vertex(u) || !g.has_vertex(v)) fail("edge endpoint out of range");
            auto e = g.edge_between(u, v);
            if (!e) fail("edge not present in instance graph");
            c.edges.push_back(*e);
        }
        std::sort(c.edges.begin(), c.edges.end());
        c.edges.erase(std::unique(c.edges.begin(), c.edges.end()), c.edges.end());
        auto bound = from_decimal(doc["bound"].get<std::string>());
        if (!bound) fail("bad bound string");
        c.bound = *bound;
    }
    return c;
}

} // namespace epp
