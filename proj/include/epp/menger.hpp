#pragma once

// Exact base cases of the induction: the edge version of Menger's theorem via
// unit-capacity max-flow, and the length-1/2 base for long A-B-paths.

#include <deque>
#include <stdexcept>
#include <vector>

#include "epp/certificate.hpp"
#include "epp/graph.hpp"
#include "epp/path_spec.hpp"

namespace epp {

namespace detail {

// Net flow per edge: 0 idle, +1 along (u -> v) as stored, -1 the other way.
// A-vertices act as sources, B-vertices as sinks; neither is ever an interior
// vertex of an augmenting path, so decomposed paths qualify as A-B-paths.
struct UnitFlow {
    const Graph& g;
    const VertexSet& a;
    const VertexSet& b;
    std::vector<int> flow;       // indexed by edge id
    std::vector<bool> considered; // edge participates (not intra-A / intra-B)
    int value = 0;

    UnitFlow(const Graph& gr, const VertexSet& as, const VertexSet& bs)
        : g(gr), a(as), b(bs), flow(gr.edge_slots(), 0), considered(gr.edge_slots(), false) {
        for (EdgeId e : g.edge_ids()) {
            const Edge& ed = g.edge(e);
            bool ua = a.count(ed.u) > 0, va = a.count(ed.v) > 0;
            bool ub = b.count(ed.u) > 0, vb = b.count(ed.v) > 0;
            if ((ua && va) || (ub && vb)) continue; // useless for any A-B-path
            considered[e] = true;
        }
    }

    bool arc_usable(EdgeId e, VertexId from) const {
        const Edge& ed = g.edge(e);
        int dir = from == ed.u ? 1 : -1;
        return flow[e] != dir; // capacity 1 per direction, net representation
    }

    void push(EdgeId e, VertexId from) {
        const Edge& ed = g.edge(e);
        flow[e] += from == ed.u ? 1 : -1;
    }

    // One BFS augmentation; arcs explored in ascending edge id. Returns false
    // when no augmenting A-B path remains.
    bool augment() {
        std::vector<std::pair<VertexId, EdgeId>> parent(g.vertex_slots(), {-1, -1});
        std::vector<bool> seen(g.vertex_slots(), false);
        std::deque<VertexId> queue;
        for (VertexId s : a) {
            if (!g.has_vertex(s)) continue;
            seen[s] = true;
            queue.push_back(s);
        }
        while (!queue.empty()) {
            VertexId u = queue.front();
            queue.pop_front();
            for (EdgeId e : g.incident_edges(u)) {
                if (!considered[e] || !arc_usable(e, u)) continue;
                VertexId w = g.edge(e).other(u);
                if (seen[w] || a.count(w)) continue;
                if (b.count(w)) {
                    push(e, u);
                    VertexId cur = u;
                    while (!a.count(cur)) {
                        auto [pv, pe] = parent[cur];
                        push(pe, pv);
                        cur = pv;
                    }
                    ++value;
                    return true;
                }
                seen[w] = true;
                parent[w] = {u, e};
                queue.push_back(w);
            }
        }
        return false;
    }

    // Decomposes the flow into `value` simple A-B paths; circulation loops are
    // excised and their arcs discarded.
    std::vector<Path> decompose() {
        std::vector<bool> used(g.edge_slots(), false);
        std::vector<Path> out;
        auto out_arc = [&](VertexId u) -> EdgeId {
            for (EdgeId e : g.incident_edges(u)) {
                if (!considered[e] || used[e]) continue;
                const Edge& ed = g.edge(e);
                int dir = u == ed.u ? 1 : -1;
                if (flow[e] == dir) return e;
            }
            return -1;
        };
        for (VertexId s : a) {
            if (!g.has_vertex(s)) continue;
            while (true) {
                if (out_arc(s) < 0) break;
                std::vector<VertexId> walk{s};
                std::vector<EdgeId> walk_edges;
                VertexId cur = s;
                while (!b.count(cur)) {
                    EdgeId e = out_arc(cur);
                    if (e < 0) throw std::logic_error("flow conservation broken in decomposition");
                    used[e] = true;
                    cur = g.edge(e).other(cur);
                    auto seen_at = std::find(walk.begin(), walk.end(), cur);
                    if (seen_at != walk.end()) {
                        size_t keep = seen_at - walk.begin();
                        walk.resize(keep + 1);
                        walk_edges.resize(keep);
                    } else {
                        walk.push_back(cur);
                        walk_edges.push_back(e);
                    }
                }
                Path p;
                p.verts = std::move(walk);
                p.edges = std::move(walk_edges);
                out.push_back(std::move(p));
            }
        }
        return out;
    }

    // Residual-reachable side after the flow is maximum; crossing edges form a
    // minimum cut of exactly `value` edges.
    std::vector<EdgeId> min_cut() {
        std::vector<bool> seen(g.vertex_slots(), false);
        std::deque<VertexId> queue;
        for (VertexId s : a) {
            if (!g.has_vertex(s)) continue;
            seen[s] = true;
            queue.push_back(s);
        }
        while (!queue.empty()) {
            VertexId u = queue.front();
            queue.pop_front();
            for (EdgeId e : g.incident_edges(u)) {
                if (!considered[e] || !arc_usable(e, u)) continue;
                VertexId w = g.edge(e).other(u);
                if (seen[w] || b.count(w)) continue;
                seen[w] = true;
                queue.push_back(w);
            }
        }
        std::vector<EdgeId> cut;
        for (EdgeId e : g.edge_ids()) {
            if (!considered[e]) continue;
            const Edge& ed = g.edge(e);
            bool su = seen[ed.u], sv = seen[ed.v];
            if (su == sv) continue;
            VertexId from = su ? ed.u : ed.v;
            if (!arc_usable(e, from)) cut.push_back(e);
        }
        return cut;
    }
};

} // namespace detail

// Either k edge-disjoint A-B-paths or a minimum A-B edge cut of at most k-1
// edges, by unit-capacity max-flow.
inline Certificate menger_edge(const Graph& g, const VertexSet& a, const VertexSet& b, int k) {
    if (a.empty() || b.empty()) throw std::invalid_argument("empty terminal set");
    if (k < 1) throw std::invalid_argument("k must be >= 1");
    for (VertexId v : a)
        if (b.count(v)) throw std::invalid_argument("A and B must be disjoint");
    PathSpec spec = PathSpec::ab(a, b, 1);
    spec.validate(g);

    detail::UnitFlow fl(g, a, b);
    while (fl.value < k && fl.augment()) {}
    if (fl.value >= k) {
        auto paths = fl.decompose();
        if (static_cast<int>(paths.size()) < k)
            throw std::logic_error("flow decomposition lost paths");
        paths.resize(k);
        return Certificate::packing(spec, k, std::move(paths));
    }
    // Flow is maximum here (< k), so the residual cut is a minimum cut.
    auto cut = fl.min_cut();
    if (static_cast<int>(cut.size()) != fl.value)
        throw std::logic_error("cut size does not match max-flow value");
    return Certificate::hitting(spec, k, std::move(cut), BigInt(k - 1));
}

// Long A-B-paths for L in {1,2}: length 1 is Menger verbatim; for length 2 the
// direct A-B edges are deleted first, which removes exactly the too-short paths.
inline Certificate base_long_ab(const Graph& g, const VertexSet& a, const VertexSet& b, int k,
                                int len) {
    if (len != 1 && len != 2) throw std::invalid_argument("base case needs L in {1,2}");
    PathSpec spec = PathSpec::ab(a, b, len);
    spec.validate(g);
    Graph h = g;
    if (len == 2) {
        for (EdgeId e : g.edge_ids()) {
            const Edge& ed = g.edge(e);
            bool mixed = (a.count(ed.u) && b.count(ed.v)) || (a.count(ed.v) && b.count(ed.u));
            if (mixed) h.delete_edge(e);
        }
    }
    Certificate c = menger_edge(h, a, b, k);
    c.spec = spec;
    return c;
}

} // namespace epp
