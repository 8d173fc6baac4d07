#pragma once

// Independent certificate verification. Nothing here trusts solver internals:
// qualification is re-derived from the PathSpec, packings are re-checked edge
// by edge, and hitting sets are re-checked with the exact search oracle.

#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "epp/certificate.hpp"
#include "epp/graph.hpp"
#include "epp/oracle.hpp"
#include "epp/path_spec.hpp"

namespace epp {

enum class ViolationCode {
    NotAPath,
    WrongEndpoints,
    InteriorForbidden,
    TooShort,
    NotEdgeDisjoint,
    SurvivingPath,
    BoundExceeded,
    TooFewPaths,
};

inline const char* violation_name(ViolationCode c) {
    switch (c) {
    case ViolationCode::NotAPath: return "NOT_A_PATH";
    case ViolationCode::WrongEndpoints: return "WRONG_ENDPOINTS";
    case ViolationCode::InteriorForbidden: return "INTERIOR_FORBIDDEN";
    case ViolationCode::TooShort: return "TOO_SHORT";
    case ViolationCode::NotEdgeDisjoint: return "NOT_EDGE_DISJOINT";
    case ViolationCode::SurvivingPath: return "SURVIVING_PATH";
    case ViolationCode::BoundExceeded: return "BOUND_EXCEEDED";
    case ViolationCode::TooFewPaths: return "TOO_FEW_PATHS";
    }
    return "?";
}

struct Violation {
    ViolationCode code;
    std::optional<Path> witness_path;
    std::optional<EdgeId> witness_edge;
    std::string detail;

    std::string describe() const {
        std::ostringstream os;
        os << violation_name(code);
        if (!detail.empty()) os << ": " << detail;
        return os.str();
    }
};

using VerifyResult = std::optional<Violation>; // nullopt == OK

namespace detail {

inline VerifyResult structural_check(const Graph& g, const Path& p) {
    auto fail = [&](const std::string& why) {
        return Violation{ViolationCode::NotAPath, p, std::nullopt, why};
    };
    if (p.verts.empty()) return fail("empty vertex list");
    size_t want_edges = p.closed ? p.verts.size() : p.verts.size() - 1;
    if (p.edges.size() != want_edges) return fail("edge count mismatch");
    if (p.closed && p.verts.size() < 3) return fail("cycle with fewer than 3 vertices");
    std::set<VertexId> seen;
    for (VertexId v : p.verts) {
        if (!g.has_vertex(v)) return fail("vertex " + std::to_string(v) + " not in graph");
        if (!seen.insert(v).second) return fail("vertex " + std::to_string(v) + " repeats");
    }
    for (size_t i = 0; i < p.edges.size(); ++i) {
        VertexId u = p.verts[i];
        VertexId w = p.verts[(i + 1) % p.verts.size()];
        if (!g.has_edge(p.edges[i])) return fail("edge id " + std::to_string(p.edges[i]) + " not in graph");
        const Edge& e = g.edge(p.edges[i]);
        if (!(e.touches(u) && e.touches(w) && u != w))
            return fail("edge id " + std::to_string(p.edges[i]) + " does not join consecutive vertices");
    }
    return std::nullopt;
}

// Splits the qualification test so violations carry the right code.
inline VerifyResult qualification_check(const PathSpec& spec, const Path& p) {
    if (p.length() < spec.lmin)
        return Violation{ViolationCode::TooShort, p, std::nullopt,
                         "length " + std::to_string(p.length()) + " < " + std::to_string(spec.lmin)};

    if (spec.kind == PathKind::CycleThrough) {
        if (!p.closed || !p.contains_vertex(spec.hub))
            return Violation{ViolationCode::WrongEndpoints, p, std::nullopt,
                             "not a cycle through vertex " + std::to_string(spec.hub)};
        return std::nullopt;
    }
    if (p.closed)
        return Violation{ViolationCode::WrongEndpoints, p, std::nullopt, "cycle where a path is required"};

    VertexId x = p.front(), y = p.back();
    auto ends_ok = [&](const VertexSet& s, const VertexSet& t) {
        return (s.count(x) && t.count(y)) || (s.count(y) && t.count(x));
    };
    auto interior_hits = [&](const VertexSet& s) -> std::optional<VertexId> {
        for (size_t i = 1; i + 1 < p.verts.size(); ++i)
            if (s.count(p.verts[i])) return p.verts[i];
        return std::nullopt;
    };
    auto bad_interior = [&](VertexId v) {
        return Violation{ViolationCode::InteriorForbidden, p, std::nullopt,
                         "interior vertex " + std::to_string(v) + " is forbidden"};
    };
    auto bad_ends = [&]() {
        return Violation{ViolationCode::WrongEndpoints, p, std::nullopt,
                         "ends " + std::to_string(x) + "," + std::to_string(y)};
    };

    switch (spec.kind) {
    case PathKind::AB:
    case PathKind::ABGeneral:
        if (!ends_ok(spec.a, spec.b)) return bad_ends();
        if (auto v = interior_hits(spec.a)) return bad_interior(*v);
        if (auto v = interior_hits(spec.b)) return bad_interior(*v);
        return std::nullopt;
    case PathKind::APath:
        if (!(x != y && spec.a.count(x) && spec.a.count(y))) return bad_ends();
        if (auto v = interior_hits(spec.a)) return bad_interior(*v);
        return std::nullopt;
    case PathKind::AStar:
        if (!(x != y && spec.a.count(x) && spec.a.count(y))) return bad_ends();
        return std::nullopt;
    case PathKind::AStarB:
        if (!ends_ok(spec.a, spec.b)) return bad_ends();
        if (auto v = interior_hits(spec.b)) return bad_interior(*v);
        return std::nullopt;
    case PathKind::AStarBStar:
        if (!ends_ok(spec.a, spec.b)) return bad_ends();
        return std::nullopt;
    case PathKind::SPath: {
        int px = spec.part_of(x), py = spec.part_of(y);
        if (px < 0 || py < 0 || px == py) return bad_ends();
        if (auto v = interior_hits(spec.a)) return bad_interior(*v);
        return std::nullopt;
    }
    default:
        return bad_ends();
    }
}

} // namespace detail

inline VerifyResult verify_packing(const Graph& g, const PathSpec& spec, int k,
                                   const std::vector<Path>& paths) {
    spec.validate(g);
    if (static_cast<int>(paths.size()) < k)
        return Violation{ViolationCode::TooFewPaths, std::nullopt, std::nullopt,
                         std::to_string(paths.size()) + " paths, need " + std::to_string(k)};
    for (const Path& p : paths) {
        if (auto v = detail::structural_check(g, p)) return v;
        if (auto v = detail::qualification_check(spec, p)) return v;
    }
    std::map<EdgeId, size_t> owner;
    for (size_t i = 0; i < paths.size(); ++i)
        for (EdgeId e : paths[i].edges) {
            auto [it, fresh] = owner.emplace(e, i);
            if (!fresh)
                return Violation{ViolationCode::NotEdgeDisjoint, paths[i], e,
                                 "edge id " + std::to_string(e) + " shared by paths " +
                                     std::to_string(it->second) + " and " + std::to_string(i)};
        }
    return std::nullopt;
}

inline VerifyResult verify_hitting(const Graph& g, const PathSpec& spec,
                                   const std::vector<EdgeId>& edges, const BigInt& bound,
                                   const OracleLimits& lim = {}) {
    spec.validate(g);
    if (BigInt(edges.size()) > bound)
        return Violation{ViolationCode::BoundExceeded, std::nullopt, std::nullopt,
                         std::to_string(edges.size()) + " edges exceed claimed bound " +
                             to_decimal(bound)};
    for (EdgeId e : edges)
        if (!g.has_edge(e))
            return Violation{ViolationCode::BoundExceeded, std::nullopt, e,
                             "edge id " + std::to_string(e) + " not in graph"};
    PathSpec probe = spec;
    probe.lmax.reset();
    if (auto survivor = find_long_path(g.without_edges(edges), probe, lim))
        return Violation{ViolationCode::SurvivingPath, *survivor, std::nullopt,
                         "a qualifying object survives the hitting set"};
    return std::nullopt;
}

inline VerifyResult verify_certificate(const Graph& g, const Certificate& c,
                                       const OracleLimits& lim = {}) {
    if (c.is_packing()) return verify_packing(g, c.spec, c.k, c.paths);
    return verify_hitting(g, c.spec, c.edges, c.bound, lim);
}

} // namespace epp
