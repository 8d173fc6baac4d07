#pragma once

// The three gadget constructions used by the solvers, each returning the
// derived graph plus enough provenance to translate certificates back.

#include <map>
#include <stdexcept>
#include <vector>

#include "epp/graph.hpp"
#include "epp/path_spec.hpp"

namespace epp {

enum class GadgetKind { Pendant, SubdivideContract, HubSplit };

struct GadgetMap {
    GadgetKind kind = GadgetKind::Pendant;

    // derived edge id -> original edge id; absent means the edge is fresh.
    std::map<EdgeId, EdgeId> edge_origin;
    // derived vertex id -> original vertex id; absent means fresh.
    std::map<VertexId, VertexId> vertex_origin;

    // Pendant: the twin set C, and each twin's owner in A.
    VertexSet twins;
    std::map<VertexId, VertexId> twin_owner;

    // SubdivideContract: contracted part vertices A' in part order, midpoint
    // per subdivided original edge, and which endpoint of that edge lay in A
    // on each side (needed to decontract).
    std::vector<VertexId> part_vertex;
    std::map<EdgeId, VertexId> midpoint_of;   // original edge -> midpoint
    std::map<VertexId, EdgeId> midpoint_edge; // midpoint -> original edge

    // HubSplit: leaf set A, leaf -> former neighbor of the hub, and the
    // original hub edge each leaf edge stands for.
    VertexSet leaves;
    std::map<VertexId, VertexId> leaf_neighbor;
    std::map<VertexId, EdgeId> leaf_hub_edge; // leaf -> original edge {x, neighbor}
};

// One twin of degree 1 per incident edge of each a in A, adjacent only to a.
inline std::pair<Graph, GadgetMap> add_pendant_twins(const Graph& g, const VertexSet& a_set) {
    for (VertexId a : a_set)
        if (!g.has_vertex(a)) throw std::invalid_argument("pendant twin owner not in graph");

    Graph h = g;
    GadgetMap gm;
    gm.kind = GadgetKind::Pendant;
    for (EdgeId e : g.edge_ids()) gm.edge_origin[e] = e;
    for (VertexId v : g.vertices()) gm.vertex_origin[v] = v;
    for (VertexId a : a_set) {
        int d = g.degree(a);
        for (int i = 0; i < d; ++i) {
            VertexId c = h.add_vertex();
            h.add_edge(a, c);
            gm.twins.insert(c);
            gm.twin_owner[c] = a;
        }
    }
    return {std::move(h), std::move(gm)};
}

// Remove edges inside A, subdivide every remaining A-incident edge once, then
// contract each part to a single fresh vertex. The result is simple.
inline std::pair<Graph, GadgetMap> subdivide_and_contract(const Graph& g,
                                                          const std::vector<VertexSet>& parts) {
    VertexSet a_set;
    for (const auto& p : parts) {
        if (p.empty()) throw std::invalid_argument("empty partition part");
        for (VertexId v : p) {
            if (!g.has_vertex(v)) throw std::invalid_argument("partition vertex not in graph");
            if (!a_set.insert(v).second) throw std::invalid_argument("overlapping partition parts");
        }
    }

    Graph h = g;
    GadgetMap gm;
    gm.kind = GadgetKind::SubdivideContract;

    for (EdgeId e : g.edge_ids()) {
        const Edge& ed = g.edge(e);
        if (a_set.count(ed.u) && a_set.count(ed.v)) h.delete_edge(e);
    }

    // Subdivide A-incident edges (midpoints in ascending original edge id).
    for (EdgeId e : h.edge_ids()) {
        const Edge& ed = h.edge(e);
        bool ui = a_set.count(ed.u) > 0, vi = a_set.count(ed.v) > 0;
        if (!ui && !vi) {
            gm.edge_origin[e] = e;
            continue;
        }
        VertexId u = ed.u, v = ed.v;
        h.delete_edge(e);
        VertexId m = h.add_vertex();
        EdgeId half1 = h.add_edge(u, m);
        EdgeId half2 = h.add_edge(m, v);
        gm.edge_origin[half1] = e;
        gm.edge_origin[half2] = e;
        gm.midpoint_of[e] = m;
        gm.midpoint_edge[m] = e;
    }

    // Contract each part: a fresh vertex picks up its members' midpoint edges.
    for (const auto& part : parts) {
        VertexId pv = h.add_vertex();
        gm.part_vertex.push_back(pv);
        for (VertexId a : part) {
            for (EdgeId e : h.incident_edges(a)) {
                VertexId m = h.edge(e).other(a);
                EdgeId orig = gm.edge_origin.at(e);
                h.delete_edge(e);
                EdgeId moved = h.add_edge(pv, m);
                gm.edge_origin[moved] = orig;
            }
            h.delete_vertex(a);
        }
    }

    for (VertexId v : g.vertices())
        if (h.has_vertex(v)) gm.vertex_origin[v] = v;
    return {std::move(h), std::move(gm)};
}

// Remove x; every former neighbor gets a fresh degree-1 leaf standing for the
// deleted hub edge.
inline std::pair<Graph, GadgetMap> split_hub(const Graph& g, VertexId x) {
    if (!g.has_vertex(x)) throw std::invalid_argument("hub vertex not in graph");

    Graph h = g;
    GadgetMap gm;
    gm.kind = GadgetKind::HubSplit;
    for (EdgeId e : g.edge_ids())
        if (!g.edge(e).touches(x)) gm.edge_origin[e] = e;
    for (VertexId v : g.vertices())
        if (v != x) gm.vertex_origin[v] = v;

    std::vector<std::pair<VertexId, EdgeId>> nbrs;
    for (EdgeId e : g.incident_edges(x)) nbrs.push_back({g.edge(e).other(x), e});
    std::sort(nbrs.begin(), nbrs.end());

    h.delete_vertex(x);
    for (auto [v, orig] : nbrs) {
        VertexId leaf = h.add_vertex();
        EdgeId le = h.add_edge(v, leaf);
        gm.leaves.insert(leaf);
        gm.leaf_neighbor[leaf] = v;
        gm.leaf_hub_edge[leaf] = orig;
        gm.edge_origin[le] = orig;
    }
    return {std::move(h), std::move(gm)};
}

} // namespace epp
