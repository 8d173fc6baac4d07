#pragma once

// Thin certificate-translating wrappers over the engine: A-B-paths for
// intersecting terminal sets, S-paths via subdivide-and-contract, A*-paths via
// small-object stripping, and long cycles through a designated hub vertex.
//
// The composed hitting bounds these wrappers claim (sums, shifted lengths,
// strip surcharges) follow from their reductions; the underlying theorems
// state no explicit functions for them.

#include <stdexcept>
#include <vector>

#include "epp/bounds.hpp"
#include "epp/certificate.hpp"
#include "epp/engine.hpp"
#include "epp/gadgets.hpp"
#include "epp/graph.hpp"
#include "epp/oracle.hpp"
#include "epp/path_spec.hpp"

namespace epp {

inline BigInt ab_general_bound(BoundTable& bounds, int k, int len) {
    return 2 * bounds.f(k, len) + bounds.g(k, len);
}

inline BigInt s_paths_bound(BoundTable& bounds, int k, int len) {
    if (len >= 2) return bounds.g(k, len + 2);
    // Length 1: every inter-part edge is itself an S-path and gets stripped
    // one at a time before the gadget runs at length 3.
    BigInt v = 0;
    for (int j = 2; j <= k; ++j) {
        BigInt direct = bounds.g(j, 3);
        BigInt strip = v + 1;
        v = direct > strip ? direct : strip;
    }
    return v;
}

inline BigInt astar_paths_bound(BoundTable& bounds, int k, int len) {
    BigInt v = 0;
    for (int j = 2; j <= k; ++j) {
        BigInt direct = bounds.g(j, len);
        BigInt strip = v + (2 * len - 2);
        v = direct > strip ? direct : strip;
    }
    return v;
}

inline BigInt cycles_at_bound(BoundTable& bounds, int k, int len) { return bounds.g(k, len); }

// Long A-B-paths with possibly intersecting A and B: one end in A, one end in
// B, interior avoiding both. Split by endpoint classes into two disjoint A-B
// solves plus an (A cap B)-path solve on the graph without the one-sided
// terminal vertices, so each sub-packing qualifies verbatim.
inline Certificate solve_ab_general(const Graph& g, const VertexSet& a, const VertexSet& b,
                                    BoundTable& bounds, const SolveParams& params) {
    PathSpec spec = PathSpec::ab_general(a, b, params.len);
    spec.validate(g);
    detail::check_cap(g, params.oracle);
    int k = params.k, len = params.len;

    VertexSet a_only = set_minus(a, b);
    VertexSet b_only = set_minus(b, a);
    VertexSet both = set_and(a, b);

    Certificate s1 = solve_ab(g, a, b_only, bounds, params);
    if (s1.is_packing()) return Certificate::packing(spec, k, std::move(s1.paths));
    Certificate s2 = solve_ab(g, b, a_only, bounds, params);
    if (s2.is_packing()) return Certificate::packing(spec, k, std::move(s2.paths));

    std::vector<VertexId> one_sided(a_only.begin(), a_only.end());
    one_sided.insert(one_sided.end(), b_only.begin(), b_only.end());
    Certificate s3 = solve_a_paths(g.without_vertices(one_sided), both, bounds, params);
    if (s3.is_packing()) return Certificate::packing(spec, k, std::move(s3.paths));

    std::vector<EdgeId> edges = s1.edges;
    edges.insert(edges.end(), s2.edges.begin(), s2.edges.end());
    edges.insert(edges.end(), s3.edges.begin(), s3.edges.end());
    std::sort(edges.begin(), edges.end());
    edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
    BigInt claimed = bound_or_witness([&] { return ab_general_bound(bounds, k, len); }, edges.size());
    return Certificate::hitting(spec, k, std::move(edges), std::move(claimed));
}

namespace detail {

inline VertexId part_endpoint(const Graph& g, const std::vector<VertexSet>& parts, EdgeId e,
                              int part_idx) {
    const Edge& ed = g.edge(e);
    if (parts[part_idx].count(ed.u)) return ed.u;
    if (parts[part_idx].count(ed.v)) return ed.v;
    throw std::logic_error("subdivided edge has no endpoint in the expected part");
}

inline Path s_path_from_derived(const Graph& g, const Graph& gp, const GadgetMap& gm,
                                const std::vector<VertexSet>& parts, const Path& derived) {
    std::vector<VertexId> dv = derived.verts;
    auto part_index = [&](VertexId pv) {
        for (size_t i = 0; i < gm.part_vertex.size(); ++i)
            if (gm.part_vertex[i] == pv) return static_cast<int>(i);
        throw std::logic_error("derived path does not end at a part vertex");
    };
    (void)gp;
    int pi = part_index(dv.front());
    int pj = part_index(dv.back());
    EdgeId e_first = gm.midpoint_edge.at(dv[1]);
    EdgeId e_last = gm.midpoint_edge.at(dv[dv.size() - 2]);
    std::vector<VertexId> verts;
    verts.push_back(part_endpoint(g, parts, e_first, pi));
    for (size_t i = 2; i + 2 < dv.size(); ++i) verts.push_back(dv[i]);
    verts.push_back(part_endpoint(g, parts, e_last, pj));
    return Path(g, std::move(verts));
}

} // namespace detail

// Long S-paths via subdivision and contraction: derived leaf-to-leaf paths of
// length L+2 correspond to S-paths of length L. Length 1 strips the
// inter-part edges (each one is an S-path by itself) before using the gadget.
inline Certificate solve_s_paths(const Graph& g, const std::vector<VertexSet>& parts,
                                 BoundTable& bounds, const SolveParams& params) {
    PathSpec spec = PathSpec::s_path(parts, params.len);
    spec.validate(g);
    detail::check_cap(g, params.oracle);
    int k = params.k, len = params.len;

    auto gadget_phase = [&](const Graph& g2, int k2) -> Certificate {
        auto [gp, gm] = subdivide_and_contract(g2, parts);
        VertexSet aset(gm.part_vertex.begin(), gm.part_vertex.end());
        SolveParams inner = params.with(k2, len >= 2 ? len + 2 : 3);
        inner.oracle = OracleLimits{2 * params.oracle.max_vertices + params.oracle.max_edges,
                                    2 * params.oracle.max_edges};
        Certificate sub = solve_a_paths(gp, aset, bounds, inner);
        if (sub.is_packing()) {
            std::vector<Path> paths;
            for (const Path& p : sub.paths)
                paths.push_back(detail::s_path_from_derived(g2, gp, gm, parts, p));
            return Certificate::packing(spec, k2, std::move(paths));
        }
        std::vector<EdgeId> edges;
        for (EdgeId e : sub.edges) edges.push_back(gm.edge_origin.at(e));
        std::sort(edges.begin(), edges.end());
        edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
        BigInt claimed = bound_or_witness([&] { return s_paths_bound(bounds, k2, len); }, edges.size());
        return Certificate::hitting(spec, k2, std::move(edges), std::move(claimed));
    };

    if (len >= 2) return gadget_phase(g, k);
    if (k == 1) {
        if (auto p = find_long_path(g, spec, params.oracle))
            return Certificate::packing(spec, 1, {*p});
        return Certificate::hitting(spec, 1, {}, 0);
    }
    std::function<Certificate(const Graph&, int)> full = [&](const Graph& g2, int k2) {
        SolveParams p2 = params.with(k2, len);
        return solve_s_paths(g2, parts, bounds, p2);
    };
    return strip_small(g, spec, 1, 1, k, params.oracle, full, gadget_phase,
                       [&](int k2) { return s_paths_bound(bounds, k2, len); });
}

// Long A*-paths: after stripping short ones, packings and hitting sets for
// plain A-paths transfer verbatim (a surviving long A*-path would contain a
// long A-path once nothing of length up to 2L-2 exists).
inline Certificate solve_astar_paths(const Graph& g, const VertexSet& a, BoundTable& bounds,
                                     const SolveParams& params) {
    PathSpec spec = PathSpec::a_star(a, params.len);
    spec.validate(g);
    detail::check_cap(g, params.oracle);
    int k = params.k, len = params.len;

    if (k == 1) {
        if (auto p = find_long_path(g, spec, params.oracle))
            return Certificate::packing(spec, 1, {*p});
        return Certificate::hitting(spec, 1, {}, 0);
    }
    auto rest = [&](const Graph& g2, int k2) -> Certificate {
        Certificate inner = solve_a_paths(g2, a, bounds, params.with(k2, len));
        if (inner.is_packing()) return Certificate::packing(spec, k2, std::move(inner.paths));
        BigInt claimed =
            bound_or_witness([&] { return astar_paths_bound(bounds, k2, len); }, inner.edges.size());
        return Certificate::hitting(spec, k2, std::move(inner.edges), std::move(claimed));
    };
    std::function<Certificate(const Graph&, int)> full = [&](const Graph& g2, int k2) {
        return solve_astar_paths(g2, a, bounds, params.with(k2, len));
    };
    return strip_small(g, spec, len, 2 * len - 2, k, params.oracle, full, rest,
                       [&](int k2) { return astar_paths_bound(bounds, k2, len); });
}

// Long cycles through x, assuming x meets every long cycle (checked against
// the oracle when check_hub is set). Leaf edges of the split graph stand for
// the hub edges, so certificates swap one for the other.
inline Certificate solve_cycles_at(const Graph& g, VertexId x, BoundTable& bounds,
                                   const SolveParams& params, bool check_hub = false) {
    PathSpec spec = PathSpec::cycle_through(x, params.len);
    spec.validate(g);
    detail::check_cap(g, params.oracle);
    int k = params.k, len = params.len;
    OracleLimits split_cap{2 * params.oracle.max_vertices, params.oracle.max_edges};

    if (check_hub) {
        Graph rest = g.without_vertices({x});
        for (VertexId y : rest.vertices()) {
            if (rest.degree(y) < 2) continue;
            if (auto c = find_long_path(rest, PathSpec::cycle_through(y, len), split_cap)) {
                Path witness(g, c->verts, true);
                throw precondition_error("a long cycle avoids the hub vertex", witness);
            }
        }
    }

    auto [gp, gm] = split_hub(g, x);
    SolveParams inner = params.with(k, len);
    inner.oracle = split_cap;
    Certificate sub = solve_a_paths(gp, gm.leaves, bounds, inner);
    if (sub.is_packing()) {
        std::vector<Path> cycles;
        for (const Path& p : sub.paths) {
            std::vector<VertexId> verts;
            verts.push_back(x);
            for (size_t i = 1; i + 1 < p.verts.size(); ++i) verts.push_back(p.verts[i]);
            if (verts.size() >= 3 && verts[1] > verts.back())
                std::reverse(verts.begin() + 1, verts.end());
            cycles.push_back(Path(g, std::move(verts), true));
        }
        return Certificate::packing(spec, k, std::move(cycles));
    }
    std::vector<EdgeId> edges;
    for (EdgeId e : sub.edges) edges.push_back(gm.edge_origin.at(e));
    std::sort(edges.begin(), edges.end());
    edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
    BigInt claimed = bound_or_witness([&] { return cycles_at_bound(bounds, k, len); }, edges.size());
    return Certificate::hitting(spec, k, std::move(edges), std::move(claimed));
}

} // namespace epp
