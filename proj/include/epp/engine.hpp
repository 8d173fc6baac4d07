#pragma once

// The constructive recursion behind the duality theorems: every solver either
// returns k edge-disjoint qualifying paths or an edge hitting set within the
// recursive size bound for its family.
//
// Call structure (lengths relative to a solve_ab call at length L, l = L-1):
//
//   solve_ab(L) -> solve_astar_bstar(L-2)
//   solve_astar_bstar(L) -> solve_astar_b(L) [x4] and solve_a_paths(L)
//   solve_astar_b(L) -> solve_ab(L+1) on the pendant-twin graph
//   solve_a_paths(L) -> solve_ab(L) bipartition probes, self at k-1
//
// so every composite cycle strictly decreases L, and within a length level
// only k decreases. k = 1 is answered directly by the search oracle in every
// solver.

#include <cassert>
#include <functional>
#include <map>
#include <optional>
#include <set>
#include <stdexcept>
#include <variant>
#include <vector>

#include "epp/bounds.hpp"
#include "epp/certificate.hpp"
#include "epp/certify.hpp"
#include "epp/gadgets.hpp"
#include "epp/graph.hpp"
#include "epp/menger.hpp"
#include "epp/oracle.hpp"
#include "epp/path_spec.hpp"

namespace epp {

struct SolveStats {
    int depth = 0;
    int max_depth = 0;
    long long oracle_calls = 0;
    int exchange_runs = 0;
    int exchange_iterations = 0;
    std::vector<std::pair<long long, long long>> last_exchange_trace;
};

struct SolveParams {
    int k = 1;
    int len = 1;
    OracleLimits oracle{};      // cap for the instance; gadget calls get the envelope
    SolveStats* stats = nullptr;

    SolveParams with(int k2, int len2) const {
        SolveParams p = *this;
        p.k = k2;
        p.len = len2;
        return p;
    }
};

// A packing member with its designated ends (A-end first).
struct OrientedPath {
    Path path;
    VertexId a_end = -1;
    VertexId b_end = -1;

    // Vertex sequence walked from the A-end.
    std::vector<VertexId> from_a() const {
        std::vector<VertexId> vs = path.verts;
        if (vs.front() != a_end) std::reverse(vs.begin(), vs.end());
        return vs;
    }
    std::vector<VertexId> from(VertexId end) const {
        std::vector<VertexId> vs = path.verts;
        if (vs.front() != end) std::reverse(vs.begin(), vs.end());
        return vs;
    }
};

using OrientedPathFamily = std::vector<OrientedPath>;

// Designates ends: the end that can only be the A-end becomes it; when both
// orientations qualify the lexicographically smaller end is the A-end.
inline OrientedPath orient_path(const PathSpec& spec, const Path& p) {
    VertexId x = p.front(), y = p.back();
    OrientedPath op{p, x, y};
    switch (spec.kind) {
    case PathKind::AB:
    case PathKind::ABGeneral:
    case PathKind::AStarB:
    case PathKind::AStarBStar: {
        bool fwd = spec.a.count(x) && spec.b.count(y);
        bool bwd = spec.a.count(y) && spec.b.count(x);
        if (fwd && bwd) {
            op.a_end = std::min(x, y);
            op.b_end = std::max(x, y);
        } else if (bwd) {
            op.a_end = y;
            op.b_end = x;
        }
        break;
    }
    default:
        op.a_end = std::min(x, y);
        op.b_end = std::max(x, y);
        break;
    }
    return op;
}

struct ExchangeState {
    OrientedPathFamily current; // the k-1 packing paths, edge-disjoint
    OrientedPathFamily qv;      // concentrated family, all ending at hub
    VertexId hub = -1;
};

struct ExchangeResult {
    int chosen = -1;            // index into qv of the member disjoint from all paths
    OrientedPathFamily updated; // the packing after surgeries
    std::vector<std::pair<long long, long long>> trace; // (phi1, phi2) per iteration
};

struct Concentration {
    bool matched = false;
    std::vector<int> chosen; // matched path indices (size k) when matched
    VertexId hub = -1;       // otherwise: hub plus kept path indices
    std::vector<int> kept;
};

// Pigeonhole step: either k family members with pairwise distinct endpoint
// pairs (greedy matching on the endpoint multigraph) or a hub vertex where
// exactly (2l+5)(k-1) members end, lowest indices first.
inline Concentration endpoint_concentration(const OrientedPathFamily& q, int k, int l) {
    long long threshold = 2LL * k * (2 * l + 5) * (k - 1);
    if (static_cast<long long>(q.size()) < threshold)
        throw std::invalid_argument("family too small for endpoint concentration");
    std::vector<std::pair<VertexId, VertexId>> pairs;
    pairs.reserve(q.size());
    for (const auto& op : q) pairs.push_back({op.a_end, op.b_end});
    std::vector<int> matching = greedy_maximal_matching(pairs);
    Concentration out;
    if (static_cast<int>(matching.size()) >= k) {
        out.matched = true;
        out.chosen.assign(matching.begin(), matching.begin() + k);
        return out;
    }
    std::map<VertexId, int> ending;
    for (const auto& op : q) {
        ++ending[op.a_end];
        ++ending[op.b_end];
    }
    VertexId hub = -1;
    int best = -1;
    for (auto [v, c] : ending)
        if (c > best) {
            best = c;
            hub = v;
        }
    long long want = static_cast<long long>(2 * l + 5) * (k - 1);
    if (best < want) throw std::logic_error("endpoint pigeonhole failed");
    out.hub = hub;
    for (size_t i = 0; i < q.size() && static_cast<long long>(out.kept.size()) < want; ++i)
        if (q[i].a_end == hub || q[i].b_end == hub) out.kept.push_back(static_cast<int>(i));
    return out;
}

namespace detail {

inline int position_from(const std::vector<VertexId>& ordered, VertexId v) {
    auto it = std::find(ordered.begin(), ordered.end(), v);
    return it == ordered.end() ? -1 : static_cast<int>(it - ordered.begin());
}

// Number of nontrivial components of p ^ q: maximal runs of consecutive
// q-edges that also belong to p (two paths can only share edges in such runs).
inline int nontrivial_components(const std::set<EdgeId>& p_edges, const Path& q) {
    int comps = 0;
    bool in_run = false;
    for (EdgeId e : q.edges) {
        bool shared = p_edges.count(e) > 0;
        if (shared && !in_run) ++comps;
        in_run = shared;
    }
    return comps;
}

struct ClosestEdge {
    int owner = -1;  // index into the packing
    EdgeId edge = -1;
    int dist = 0;    // edges between the hub and the closest edge along q
};

} // namespace detail

// Local search realizing the exchange argument: repeatedly reroutes one
// packing path along family members until some family member shares no edge
// with the packing. The potential (phi1, phi2) strictly decreases
// lexicographically with every surgery.
inline ExchangeResult exchange_augment(const Graph& g, ExchangeState st, int len) {
    int l = len - 1;
    if (st.current.empty()) throw std::invalid_argument("exchange needs a nonempty packing");
    long long want = static_cast<long long>(2 * l + 5) * st.current.size();
    if (static_cast<long long>(st.qv.size()) < want)
        throw std::invalid_argument("exchange needs at least (2l+5)(k-1) family members");
    for (const auto& op : st.qv)
        if (op.path.front() != st.hub && op.path.back() != st.hub)
            throw std::invalid_argument("family member does not end at the hub");

    ExchangeResult res;
    res.updated = std::move(st.current);
    auto edge_sets = [&]() {
        std::vector<std::set<EdgeId>> es;
        for (const auto& op : res.updated) es.emplace_back(op.path.edges.begin(), op.path.edges.end());
        return es;
    };

    long long cap = -1;
    int iterations = 0;
    while (true) {
        auto pe = edge_sets();
        std::vector<std::optional<detail::ClosestEdge>> closest(st.qv.size());
        int free_q = -1;
        for (size_t qi = 0; qi < st.qv.size(); ++qi) {
            std::vector<VertexId> vq = st.qv[qi].from(st.hub);
            const Path& qp = st.qv[qi].path;
            for (int d = 0; d < qp.length(); ++d) {
                EdgeId e = *g.edge_between(vq[d], vq[d + 1]);
                int owner = -1;
                for (size_t i = 0; i < pe.size(); ++i)
                    if (pe[i].count(e)) {
                        owner = static_cast<int>(i);
                        break;
                    }
                if (owner >= 0) {
                    closest[qi] = detail::ClosestEdge{owner, e, d};
                    break;
                }
            }
            if (!closest[qi] && free_q < 0) free_q = static_cast<int>(qi);
        }

        long long phi1 = 0, phi2 = 0;
        for (size_t i = 0; i < res.updated.size(); ++i)
            for (const auto& op : st.qv) phi1 += detail::nontrivial_components(pe[i], op.path);
        for (const auto& c : closest)
            if (c) phi2 += c->dist;
        if (!res.trace.empty()) {
            auto [p1, p2] = res.trace.back();
            if (std::make_pair(phi1, phi2) >= std::make_pair(p1, p2))
                throw std::logic_error("exchange potential failed to decrease");
        }
        res.trace.push_back({phi1, phi2});
        if (cap < 0) cap = phi1 + phi2;

        if (free_q >= 0) {
            res.chosen = free_q;
            return res;
        }
        if (iterations >= cap) throw std::logic_error("exchange exceeded its iteration cap");
        ++iterations;

        // Owner responsible for at least 2l+5 closest edges.
        std::vector<int> owner_count(res.updated.size(), 0);
        for (const auto& c : closest) ++owner_count[c->owner];
        int pi = -1;
        for (size_t i = 0; i < owner_count.size(); ++i)
            if (owner_count[i] >= 2 * l + 5) {
                pi = static_cast<int>(i);
                break;
            }
        if (pi < 0) throw std::logic_error("closest-edge pigeonhole failed");

        // Order that owner's family members by where their closest edge sits
        // on the path, walking from its B-end.
        std::vector<VertexId> pb = res.updated[pi].from(res.updated[pi].b_end);
        auto edge_pos_from_b = [&](EdgeId e) {
            const Edge& ed = g.edge(e);
            int pu = detail::position_from(pb, ed.u);
            int pv = detail::position_from(pb, ed.v);
            return std::min(pu, pv);
        };
        std::vector<int> ord;
        for (size_t qi = 0; qi < st.qv.size(); ++qi)
            if (closest[qi] && closest[qi]->owner == pi) ord.push_back(static_cast<int>(qi));
        std::sort(ord.begin(), ord.end(), [&](int x, int y) {
            return edge_pos_from_b(closest[x]->edge) < edge_pos_from_b(closest[y]->edge);
        });

        const std::set<VertexId> pi_verts(res.updated[pi].path.verts.begin(),
                                          res.updated[pi].path.verts.end());

        // The vertex of the closest edge nearer the hub along q, and the
        // first meeting point with the owner when walking back toward the hub.
        auto hub_side = [&](int qi) {
            std::vector<VertexId> vq = st.qv[qi].from(st.hub);
            int d = closest[qi]->dist;
            return std::make_pair(vq, d);
        };
        auto first_meet = [&](const std::vector<VertexId>& vq, int d) -> int {
            for (int j = d - 1; j >= 0; --j)
                if (pi_verts.count(vq[j])) return j;
            return -1;
        };

        auto rebuild = [&](std::vector<VertexId> verts) {
            Path np(g, std::move(verts));
            if (np.length() < len) throw std::logic_error("exchange produced a short path");
            for (size_t i = 0; i < res.updated.size(); ++i) {
                if (static_cast<int>(i) == pi) continue;
                if (!edge_disjoint(np, res.updated[i].path))
                    throw std::logic_error("exchange broke edge-disjointness");
            }
            if (!(np.front() == res.updated[pi].a_end && np.back() == res.updated[pi].b_end) &&
                !(np.front() == res.updated[pi].b_end && np.back() == res.updated[pi].a_end))
                throw std::logic_error("exchange moved a path endpoint");
            res.updated[pi].path = std::move(np);
        };

        // Replace the owner's stretch between s and x by the q-segment.
        auto reroute = [&](const std::vector<VertexId>& vq, int d, int j) {
            VertexId s = vq[d], x = vq[j];
            int ps = detail::position_from(pb, s);
            int px = detail::position_from(pb, x);
            std::vector<VertexId> nv;
            if (px < ps) {
                nv.assign(pb.begin(), pb.begin() + px + 1);
                for (int t = j + 1; t <= d; ++t) nv.push_back(vq[t]);
                nv.insert(nv.end(), pb.begin() + ps + 1, pb.end());
            } else {
                nv.assign(pb.begin(), pb.begin() + ps + 1);
                for (int t = d - 1; t >= j; --t) nv.push_back(vq[t]);
                nv.insert(nv.end(), pb.begin() + px + 1, pb.end());
            }
            rebuild(std::move(nv));
        };

        int q2 = ord[l + 1];  // the (l+2)-nd member, 1-based
        auto [vq2, d2] = hub_side(q2);
        int meet2 = first_meet(vq2, d2);
        if (meet2 >= 0) {
            reroute(vq2, d2, meet2);
            continue;
        }
        int q4 = ord[l + 3];  // the (l+4)-th member
        auto [vq4, d4] = hub_side(q4);
        int meet4 = first_meet(vq4, d4);
        if (meet4 >= 0) {
            reroute(vq4, d4, meet4);
            continue;
        }

        // Both hub-side prefixes avoid the owner: splice them through their
        // first common vertex, dropping the owner's stretch in between.
        VertexId s2 = vq2[d2], s4 = vq4[d4];
        int ps2 = detail::position_from(pb, s2);
        int ps4 = detail::position_from(pb, s4);
        if (ps2 < 0 || ps4 < 0 || ps2 >= ps4)
            throw std::logic_error("exchange splice anchors out of order");
        std::set<VertexId> prefix4;
        for (int t = 0; t <= d4; ++t) prefix4.insert(vq4[t]);
        int wpos2 = -1;
        for (int t = d2; t >= 0; --t)
            if (prefix4.count(vq2[t])) {
                wpos2 = t;
                break;
            }
        if (wpos2 < 0) throw std::logic_error("exchange splice found no junction");
        VertexId w = vq2[wpos2];
        int wpos4 = detail::position_from(vq4, w);

        std::vector<VertexId> nv(pb.begin(), pb.begin() + ps2 + 1);
        for (int t = d2 - 1; t >= wpos2; --t) nv.push_back(vq2[t]);
        for (int t = wpos4 + 1; t <= d4; ++t) nv.push_back(vq4[t]);
        nv.insert(nv.end(), pb.begin() + ps4 + 1, pb.end());
        rebuild(std::move(nv));
    }
}

// Small-object stripping: while a qualifying object with length inside the
// window exists, remove its edges and solve for k-1; otherwise hand over with
// the no-small-object guarantee in force.
inline Certificate strip_small(const Graph& g, const PathSpec& spec, int window_lo, int window_hi,
                               int k, const OracleLimits& lim,
                               const std::function<Certificate(const Graph&, int)>& solve_full,
                               const std::function<Certificate(const Graph&, int)>& rest,
                               const std::function<BigInt(int)>& claimed_bound) {
    if (k < 2) throw std::invalid_argument("strip_small needs k >= 2");
    if (window_hi >= window_lo) {
        auto small = find_long_path(g, spec.windowed(window_lo, window_hi), lim);
        if (small) {
            Certificate sub = solve_full(g.without_edges(small->edges), k - 1);
            if (sub.is_packing()) {
                std::vector<Path> paths;
                paths.push_back(*small);
                paths.insert(paths.end(), sub.paths.begin(), sub.paths.end());
                return Certificate::packing(spec, k, std::move(paths));
            }
            std::vector<EdgeId> edges = sub.edges;
            edges.insert(edges.end(), small->edges.begin(), small->edges.end());
            std::sort(edges.begin(), edges.end());
            edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
            BigInt claimed = bound_or_witness([&] { return claimed_bound(k); }, edges.size());
            return Certificate::hitting(spec, k, std::move(edges), std::move(claimed));
        }
    }
    return rest(g, k);
}

namespace detail {

// Shared machinery for the four solvers; `lim` is the envelope actually used
// for oracle calls (instance caps are applied at the public entry points).
class Engine {
public:
    Engine(BoundTable& bounds, OracleLimits lim, SolveStats* stats)
        : bounds_(bounds), lim_(lim), stats_(stats) {}

    struct Outcome {
        Certificate cert;
        OrientedPathFamily oriented; // parallel to cert.paths when packing
    };

    Outcome ab(const Graph& g, const VertexSet& a, const VertexSet& b, int k, int len) {
        DepthGuard guard(this);
        for (VertexId v : a)
            if (b.count(v)) throw std::invalid_argument("solve_ab needs disjoint A and B");
        PathSpec spec = PathSpec::ab(a, b, len);
        spec.validate(g);
        if (a.empty() || b.empty())
            return hitting_outcome(spec, k, {}, [&] { return bounds_.f(k, len); });
        if (len <= 2) {
            Certificate c = base_long_ab(g, a, b, k, len);
            return from_cert(std::move(c));
        }
        if (k == 1) return oracle_k1(g, spec);

        int l = len - 1;
        // Edges inside A, inside B, and between A and B lie on no long path.
        Graph g1 = g;
        for (EdgeId e : g.edge_ids()) {
            const Edge& ed = g.edge(e);
            bool ta = a.count(ed.u) || a.count(ed.v);
            bool tb = b.count(ed.u) || b.count(ed.v);
            bool ia = a.count(ed.u) && a.count(ed.v);
            bool ib = b.count(ed.u) && b.count(ed.v);
            if (ia || ib || (ta && tb)) g1.delete_edge(e);
        }
        VertexSet a1, b1;
        for (VertexId v : a)
            for (VertexId w : g1.neighbors(v)) a1.insert(w);
        for (VertexId v : b)
            for (VertexId w : g1.neighbors(v)) b1.insert(w);
        if (a1.empty() || b1.empty())
            return hitting_outcome(spec, k, {}, [&] { return bounds_.f(k, len); });

        long long kprime = 2LL * k * (2 * l + 5) * (k - 1);
        if (kprime > INT32_MAX) throw std::invalid_argument("k too large for the engine");
        std::vector<VertexId> ab_verts(a.begin(), a.end());
        ab_verts.insert(ab_verts.end(), b.begin(), b.end());
        Graph core = g1.without_vertices(ab_verts);
        Outcome sub = astar_bstar(core, a1, b1, static_cast<int>(kprime), l - 1);
        if (sub.cert.is_hitting())
            return hitting_outcome(spec, k, sub.cert.edges, [&] { return bounds_.f(k, len); });

        Concentration conc = endpoint_concentration(sub.oriented, k, l);
        auto attach_edge = [&](VertexId end, const VertexSet& side) {
            EdgeId best = -1;
            for (EdgeId e : g1.incident_edges(end))
                if (side.count(g1.edge(e).other(end))) {
                    best = e;
                    break;
                }
            if (best < 0) throw std::logic_error("family endpoint has no attachment edge");
            return best;
        };
        auto extend = [&](const OrientedPath& op) {
            EdgeId ea = attach_edge(op.a_end, a);
            EdgeId eb = attach_edge(op.b_end, b);
            std::vector<VertexId> verts;
            verts.push_back(g1.edge(ea).other(op.a_end));
            for (VertexId v : op.from_a()) verts.push_back(v);
            verts.push_back(g1.edge(eb).other(op.b_end));
            return orient_path(spec, Path(g, std::move(verts)));
        };

        if (conc.matched) {
            OrientedPathFamily fam;
            for (int idx : conc.chosen) fam.push_back(extend(sub.oriented[idx]));
            return packing_outcome(spec, k, std::move(fam));
        }

        OrientedPathFamily qv;
        for (int idx : conc.kept) qv.push_back(sub.oriented[idx]);
        std::set<EdgeId> x1;
        for (const auto& op : qv) {
            x1.insert(attach_edge(op.a_end, a));
            x1.insert(attach_edge(op.b_end, b));
        }
        std::vector<EdgeId> x1v(x1.begin(), x1.end());

        Outcome rec = ab(g.without_edges(x1v), a, b, k - 1, len);
        if (rec.cert.is_hitting()) {
            std::vector<EdgeId> edges = rec.cert.edges;
            edges.insert(edges.end(), x1v.begin(), x1v.end());
            return hitting_outcome(spec, k, std::move(edges), [&] { return bounds_.f(k, len); });
        }

        if (stats_) ++stats_->exchange_runs;
        ExchangeResult ex = exchange_augment(g, ExchangeState{rec.oriented, qv, conc.hub}, len);
        if (stats_) {
            stats_->exchange_iterations += static_cast<int>(ex.trace.size()) - 1;
            stats_->last_exchange_trace = ex.trace;
        }
        OrientedPathFamily fam = std::move(ex.updated);
        fam.push_back(extend(qv[ex.chosen]));
        return packing_outcome(spec, k, std::move(fam));
    }

    Outcome a_paths(const Graph& g, const VertexSet& a, int k, int len) {
        DepthGuard guard(this);
        PathSpec spec = PathSpec::a_path(a, len);
        spec.validate(g);
        if (a.size() < 2) return hitting_outcome(spec, k, {}, [&] { return bounds_.g(k, len); });
        if (k == 1) return oracle_k1(g, spec);
        Certificate c = strip_small(
            g, spec, len, 2 * len, k, lim_,
            [&](const Graph& g2, int k2) { return a_paths(g2, a, k2, len).cert; },
            [&](const Graph& g2, int k2) { return bipartition_phase(g2, a, k2, len).cert; },
            [&](int k2) { return bounds_.g(k2, len); });
        return from_cert(std::move(c));
    }

    Outcome astar_b(const Graph& g, const VertexSet& a, const VertexSet& b, int k, int len) {
        DepthGuard guard(this);
        for (VertexId v : a)
            if (b.count(v)) throw std::invalid_argument("solve_astar_b needs disjoint A and B");
        PathSpec spec = PathSpec::a_star_b(a, b, len);
        spec.validate(g);
        if (k == 1) return oracle_k1(g, spec);

        auto [gp, gm] = add_pendant_twins(g, a);
        Outcome sub = ab(gp, gm.twins, b, k, len + 1);
        if (sub.cert.is_packing()) {
            OrientedPathFamily fam;
            for (const auto& op : sub.oriented) {
                std::vector<VertexId> vs = op.from_a(); // starts at the twin
                VertexId owner = gm.twin_owner.at(vs.front());
                vs.erase(vs.begin());
                if (vs.front() != owner) throw std::logic_error("pendant path does not enter its owner");
                OrientedPath np{Path(g, vs), owner, op.b_end};
                fam.push_back(std::move(np));
            }
            return packing_outcome(spec, k, std::move(fam));
        }

        PathSpec inner = PathSpec::ab(gm.twins, b, len + 1);
        std::vector<EdgeId> xp = minimalize_hitting_set(gp, inner, sub.cert.edges, lim_);
        // Pendant edges in the minimal set mark owners whose whole original
        // star moves into the hitting set; everything else carries over.
        std::set<EdgeId> x;
        std::set<VertexId> marked;
        for (EdgeId e : xp) {
            if (gm.edge_origin.count(e)) {
                x.insert(gm.edge_origin.at(e));
            } else {
                const Edge& ed = gp.edge(e);
                VertexId twin = gm.twins.count(ed.u) ? ed.u : ed.v;
                marked.insert(gm.twin_owner.at(twin));
            }
        }
        for (VertexId v : marked)
            for (EdgeId e : g.incident_edges(v)) x.insert(e);
        if (x.size() > xp.size()) throw std::logic_error("pendant translation grew the hitting set");
        return hitting_outcome(spec, k, std::vector<EdgeId>(x.begin(), x.end()),
                               [&] { return bounds_.f1(k, len); });
    }

    Outcome astar_bstar(const Graph& g, const VertexSet& a, const VertexSet& b, int k, int len) {
        DepthGuard guard(this);
        PathSpec spec = PathSpec::a_star_b_star(a, b, len);
        spec.validate(g);
        if (k == 1) return oracle_k1(g, spec);
        Certificate c = strip_small(
            g, spec, len, (len + 1) * (len - 1), k, lim_,
            [&](const Graph& g2, int k2) { return astar_bstar(g2, a, b, k2, len).cert; },
            [&](const Graph& g2, int k2) { return five_way(g2, a, b, k2, len).cert; },
            [&](int k2) { return bounds_.f2(k2, len); });
        return from_cert(std::move(c));
    }

    SolveStats* stats() { return stats_; }

private:
    struct DepthGuard {
        Engine* e;
        explicit DepthGuard(Engine* eng) : e(eng) {
            if (!e->stats_) return;
            ++e->stats_->depth;
            e->stats_->max_depth = std::max(e->stats_->max_depth, e->stats_->depth);
            if (e->stats_->depth > 100000) throw std::logic_error("engine recursion ran away");
        }
        ~DepthGuard() {
            if (e->stats_) --e->stats_->depth;
        }
    };

    Outcome from_cert(Certificate c) {
        Outcome out;
        if (c.is_packing())
            for (const Path& p : c.paths) out.oriented.push_back(orient_path(c.spec, p));
        out.cert = std::move(c);
        return out;
    }

    Outcome oracle_k1(const Graph& g, const PathSpec& spec) {
        if (stats_) ++stats_->oracle_calls;
        auto p = find_long_path(g, spec, lim_);
        if (p) return packing_outcome(spec, 1, {orient_path(spec, *p)});
        Outcome out;
        out.cert = Certificate::hitting(spec, 1, {}, 0);
        return out;
    }

    // Every packing the engine hands upward gets re-checked against its spec
    // and for pairwise edge-disjointness; a failure is a bug, never a result.
    Outcome packing_outcome(const PathSpec& spec, int k, OrientedPathFamily fam) {
        if (static_cast<int>(fam.size()) < k)
            throw std::logic_error("engine packing has too few paths");
        std::set<EdgeId> seen;
        for (const auto& op : fam) {
            if (!qualifies(spec, op.path))
                throw std::logic_error("engine packing member does not qualify");
            VertexId x = op.path.front(), y = op.path.back();
            if (!((op.a_end == x && op.b_end == y) || (op.a_end == y && op.b_end == x)))
                throw std::logic_error("engine packing member has inconsistent orientation");
            for (EdgeId e : op.path.edges)
                if (!seen.insert(e).second)
                    throw std::logic_error("engine packing is not edge-disjoint");
        }
        Outcome out;
        std::vector<Path> paths;
        for (const auto& op : fam) paths.push_back(op.path);
        out.cert = Certificate::packing(spec, k, std::move(paths));
        out.oriented = std::move(fam);
        return out;
    }

    Outcome hitting_outcome(const PathSpec& spec, int k, std::vector<EdgeId> edges,
                            const std::function<BigInt()>& bound) {
        std::sort(edges.begin(), edges.end());
        edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
        BigInt claimed = bound_or_witness(bound, edges.size());
        Outcome out;
        out.cert = Certificate::hitting(spec, k, std::move(edges), std::move(claimed));
        return out;
    }

    struct ExactlyOne {
        VertexSet side;            // the side that still has a long path
        std::vector<EdgeId> probe; // X(T, A \ T) for the probed bipartition
    };
    using ProcessResult = std::variant<Outcome, ExactlyOne>;

    ProcessResult process_bipartition(const Graph& g, const VertexSet& a, const VertexSet& t,
                                      int k, int len) {
        PathSpec spec = PathSpec::a_path(a, len);
        VertexSet rest = set_minus(a, t);
        Outcome rt = ab(g, t, rest, k, len);
        if (rt.cert.is_packing()) {
            // k edge-disjoint long T-(A\T)-paths are long A-paths verbatim.
            return packing_outcome(spec, k, std::move(rt.oriented));
        }
        const std::vector<EdgeId>& x = rt.cert.edges;
        Graph gx = g.without_edges(x);
        Graph g1 = gx.without_vertices({rest.begin(), rest.end()});
        Graph g2 = gx.without_vertices({t.begin(), t.end()});
        if (stats_) stats_->oracle_calls += 2;
        std::optional<Path> p1, p2;
        if (t.size() >= 2) p1 = find_long_path(g1, PathSpec::a_path(t, len), lim_);
        if (rest.size() >= 2) p2 = find_long_path(g2, PathSpec::a_path(rest, len), lim_);
        if (p1 && p2) {
            Outcome r1 = a_paths(g1, t, k - 1, len);
            if (r1.cert.is_packing()) {
                OrientedPathFamily fam = std::move(r1.oriented);
                fam.push_back(orient_path(spec, *p2));
                return packing_outcome(spec, k, std::move(fam));
            }
            Outcome r2 = a_paths(g2, rest, k - 1, len);
            if (r2.cert.is_packing()) {
                OrientedPathFamily fam = std::move(r2.oriented);
                fam.push_back(orient_path(spec, *p1));
                return packing_outcome(spec, k, std::move(fam));
            }
            std::vector<EdgeId> edges = x;
            edges.insert(edges.end(), r1.cert.edges.begin(), r1.cert.edges.end());
            edges.insert(edges.end(), r2.cert.edges.begin(), r2.cert.edges.end());
            return hitting_outcome(spec, k, std::move(edges), [&] { return bounds_.g(k, len); });
        }
        if (!p1 && !p2) return hitting_outcome(spec, k, x, [&] { return bounds_.g(k, len); });
        return ExactlyOne{p1 ? t : rest, x};
    }

    static VertexSet first_half(const VertexSet& s) {
        VertexSet out;
        size_t take = (s.size() + 1) / 2;
        for (VertexId v : s) {
            if (out.size() >= take) break;
            out.insert(v);
        }
        return out;
    }

    Outcome bipartition_phase(const Graph& g, const VertexSet& a, int k, int len) {
        PathSpec spec = PathSpec::a_path(a, len);
        ProcessResult first = process_bipartition(g, a, first_half(a), k, len);
        if (auto* out = std::get_if<Outcome>(&first)) return std::move(*out);
        ExactlyOne state = std::get<ExactlyOne>(first);

        size_t guard = a.size() + 2;
        while (guard-- > 0) {
            const VertexSet& s = state.side;
            if (s.size() < 2) throw std::logic_error("descent reached a side without long paths");
            VertexSet s1 = first_half(s);
            VertexSet s2 = set_minus(s, s1);

            ProcessResult r1 = process_bipartition(g, a, s1, k, len);
            if (auto* out = std::get_if<Outcome>(&r1)) return std::move(*out);
            ExactlyOne e1 = std::get<ExactlyOne>(r1);
            if (e1.side == s1) {
                state = std::move(e1);
                continue;
            }
            ProcessResult r2 = process_bipartition(g, a, s2, k, len);
            if (auto* out = std::get_if<Outcome>(&r2)) return std::move(*out);
            ExactlyOne e2 = std::get<ExactlyOne>(r2);
            if (e2.side == s2) {
                state = std::move(e2);
                continue;
            }
            // Neither half keeps its long path on the small side: the three
            // probe sets together hit every long A-path.
            std::vector<EdgeId> edges = state.probe;
            edges.insert(edges.end(), e1.probe.begin(), e1.probe.end());
            edges.insert(edges.end(), e2.probe.begin(), e2.probe.end());
            return hitting_outcome(spec, k, std::move(edges), [&] { return bounds_.g(k, len); });
        }
        throw std::logic_error("bipartition descent failed to shrink");
    }

    Outcome five_way(const Graph& g, const VertexSet& a, const VertexSet& b, int k, int len) {
        PathSpec spec = PathSpec::a_star_b_star(a, b, len);
        VertexSet a_only = set_minus(a, b);
        VertexSet b_only = set_minus(b, a);
        VertexSet both = set_and(a, b);

        std::vector<EdgeId> pool;
        auto absorb = [&](Outcome&& o, bool flip) -> std::optional<Outcome> {
            if (o.cert.is_hitting()) {
                pool.insert(pool.end(), o.cert.edges.begin(), o.cert.edges.end());
                return std::nullopt;
            }
            OrientedPathFamily fam = std::move(o.oriented);
            if (flip)
                for (auto& op : fam) std::swap(op.a_end, op.b_end);
            return packing_outcome(spec, k, std::move(fam));
        };

        if (auto out = absorb(astar_b(g, a_only, b, k, len), false)) return std::move(*out);
        if (auto out = absorb(astar_b(g, b_only, a, k, len), true)) return std::move(*out);
        if (auto out = absorb(astar_b(g, a, b_only, k, len), false)) return std::move(*out);
        if (auto out = absorb(astar_b(g, b, a_only, k, len), true)) return std::move(*out);
        if (auto out = absorb(a_paths(g, both, k, len), false)) return std::move(*out);
        return hitting_outcome(spec, k, std::move(pool), [&] { return bounds_.f2(k, len); });
    }

    BoundTable& bounds_;
    OracleLimits lim_;
    SolveStats* stats_;
};

inline Engine make_engine(BoundTable& bounds, const Graph& g, const SolveParams& params) {
    check_cap(g, params.oracle);
    return Engine(bounds, params.oracle.gadget_envelope(), params.stats);
}

} // namespace detail

// Public solvers. The instance must respect params.oracle; oracle calls made
// on gadget-derived graphs inside run under the corresponding envelope.

inline Certificate solve_ab(const Graph& g, const VertexSet& a, const VertexSet& b,
                            BoundTable& bounds, const SolveParams& params) {
    auto eng = detail::make_engine(bounds, g, params);
    return eng.ab(g, a, b, params.k, params.len).cert;
}

inline Certificate solve_a_paths(const Graph& g, const VertexSet& a, BoundTable& bounds,
                                 const SolveParams& params) {
    auto eng = detail::make_engine(bounds, g, params);
    return eng.a_paths(g, a, params.k, params.len).cert;
}

inline Certificate solve_astar_b(const Graph& g, const VertexSet& a, const VertexSet& b,
                                 BoundTable& bounds, const SolveParams& params) {
    auto eng = detail::make_engine(bounds, g, params);
    return eng.astar_b(g, a, b, params.k, params.len).cert;
}

inline Certificate solve_astar_bstar(const Graph& g, const VertexSet& a, const VertexSet& b,
                                     BoundTable& bounds, const SolveParams& params) {
    auto eng = detail::make_engine(bounds, g, params);
    return eng.astar_bstar(g, a, b, params.k, params.len).cert;
}

} // namespace epp
