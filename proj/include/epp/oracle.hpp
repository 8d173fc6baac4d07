#pragma once

// Exact, desk-scale searches: long-path existence per kind, enumeration of all
// qualifying objects, optimal edge-disjoint packing, optimal hitting set,
// inclusion-minimalization, and the greedy matching helper.
//
// Everything here is exponential-time by nature; calls refuse instances above
// the configured size cap instead of approximating.

#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <set>
#include <stdexcept>
#include <unordered_map>
#include <vector>

#include "epp/gadgets.hpp"
#include "epp/graph.hpp"
#include "epp/path_spec.hpp"

namespace epp {

struct OracleLimits {
    int max_vertices = 16;
    int max_edges = 40;

    // Envelope for oracle calls the solvers make on gadget-derived graphs
    // (pendant twins add at most 2E vertices and 2E edges).
    OracleLimits gadget_envelope() const {
        return OracleLimits{max_vertices + 2 * max_edges, 3 * max_edges};
    }
};

struct oracle_too_large : std::runtime_error {
    oracle_too_large(int nv, int ne, const OracleLimits& lim)
        : std::runtime_error("oracle too large: " + std::to_string(nv) + " vertices / " +
                             std::to_string(ne) + " edges exceeds cap " +
                             std::to_string(lim.max_vertices) + "/" +
                             std::to_string(lim.max_edges)) {}
};

struct precondition_error : std::runtime_error {
    Path witness;
    precondition_error(const std::string& what, Path w)
        : std::runtime_error(what), witness(std::move(w)) {}
};

struct OracleResult {
    int optimum = 0;
    std::vector<Path> packing;
    std::vector<EdgeId> hitting;
};

namespace detail {

inline void check_cap(const Graph& g, const OracleLimits& lim) {
    int nv = g.alive_vertex_count(), ne = g.alive_edge_count();
    if (nv > lim.max_vertices || ne > lim.max_edges) throw oracle_too_large(nv, ne, lim);
}

enum class Step { Block, Pass, End, EndOrPass };

inline Step classify(const PathSpec& spec, VertexId u, VertexId start) {
    switch (spec.kind) {
    case PathKind::AB:
    case PathKind::ABGeneral:
        if (spec.b.count(u)) return Step::End;
        if (spec.a.count(u)) return Step::Block;
        return Step::Pass;
    case PathKind::APath:
        return spec.a.count(u) ? Step::End : Step::Pass;
    case PathKind::AStar:
        return spec.a.count(u) ? Step::EndOrPass : Step::Pass;
    case PathKind::AStarB:
        return spec.b.count(u) ? Step::End : Step::Pass;
    case PathKind::AStarBStar:
        return spec.b.count(u) ? Step::EndOrPass : Step::Pass;
    case PathKind::SPath: {
        int pu = spec.part_of(u);
        if (pu < 0) return Step::Pass;
        return pu == spec.part_of(start) ? Step::Block : Step::End;
    }
    default:
        return Step::Block;
    }
}

// Depth-first search over simple paths. Emits every qualifying path (or stops
// at the first when `first_only`); neighbors are explored in ascending vertex
// id so results are deterministic. Returns true once a first-only hit occurs.
class PathDfs {
public:
    PathDfs(const Graph& g, const PathSpec& spec, std::function<bool(EdgeId)> usable,
            bool first_only, std::function<void(const std::vector<VertexId>&)> emit)
        : g_(g), spec_(spec), usable_(std::move(usable)), first_only_(first_only),
          emit_(std::move(emit)), visited_(g.vertex_slots(), false),
          alive_count_(g.alive_vertex_count()) {}

    bool run() {
        for (VertexId s : spec_.a) {
            if (!g_.has_vertex(s)) continue;
            visited_[s] = true;
            trail_.push_back(s);
            bool hit = dfs(s, 0);
            trail_.pop_back();
            visited_[s] = false;
            if (hit && first_only_) return true;
        }
        return false;
    }

private:
    bool dfs(VertexId u, int len) {
        int hi = spec_.lmax ? *spec_.lmax : INT32_MAX;
        std::vector<std::pair<VertexId, EdgeId>> next;
        for (EdgeId e : g_.incident_edges(u)) {
            if (usable_ && !usable_(e)) continue;
            VertexId w = g_.edge(e).other(u);
            if (!visited_[w]) next.push_back({w, e});
        }
        std::sort(next.begin(), next.end());

        for (auto [w, e] : next) {
            Step cls = classify(spec_, w, trail_.front());
            if (cls == Step::Block) continue;
            int nlen = len + 1;
            bool can_end = (cls == Step::End || cls == Step::EndOrPass);
            if (can_end && nlen >= spec_.lmin && nlen <= hi) {
                trail_.push_back(w);
                emit_(trail_);
                trail_.pop_back();
                if (first_only_) return true;
            }
            bool can_pass = (cls == Step::Pass || cls == Step::EndOrPass);
            if (can_pass && nlen < hi) {
                int budget = alive_count_ - static_cast<int>(trail_.size()) - 1;
                if (nlen + budget < spec_.lmin) continue;
                visited_[w] = true;
                trail_.push_back(w);
                bool hit = dfs(w, nlen);
                trail_.pop_back();
                visited_[w] = false;
                if (hit && first_only_) return true;
            }
        }
        return false;
    }

    const Graph& g_;
    const PathSpec& spec_;
    std::function<bool(EdgeId)> usable_;
    bool first_only_;
    std::function<void(const std::vector<VertexId>&)> emit_;
    std::vector<bool> visited_;
    std::vector<VertexId> trail_;
    int alive_count_ = 0;
};

// Cycles through the hub reduce to leaf-to-leaf searches on the split graph,
// length-preserving both ways.
inline Path leaf_path_to_cycle(const Graph& g, const GadgetMap& gm, VertexId hub,
                               const std::vector<VertexId>& pverts) {
    std::vector<VertexId> cverts;
    cverts.push_back(hub);
    for (size_t i = 1; i + 1 < pverts.size(); ++i) cverts.push_back(pverts[i]);
    if (cverts.size() >= 3 && cverts[1] > cverts.back())
        std::reverse(cverts.begin() + 1, cverts.end());
    (void)gm;
    return Path(g, std::move(cverts), true);
}

template <typename Emit>
void search_kind(const Graph& g, const PathSpec& spec, std::function<bool(EdgeId)> usable,
                 bool first_only, Emit&& emit) {
    if (spec.kind == PathKind::CycleThrough) {
        auto [h, gm] = split_hub(g, spec.hub);
        PathSpec inner = PathSpec::a_path(gm.leaves, spec.lmin);
        inner.lmax = spec.lmax;
        std::function<bool(EdgeId)> inner_usable;
        if (usable)
            inner_usable = [&gm, &usable](EdgeId e) { return usable(gm.edge_origin.at(e)); };
        PathDfs dfs(h, inner, inner_usable, first_only,
                    [&](const std::vector<VertexId>& vs) { emit(leaf_path_to_cycle(g, gm, spec.hub, vs)); });
        dfs.run();
        return;
    }
    PathDfs dfs(g, spec, std::move(usable), first_only,
                [&](const std::vector<VertexId>& vs) { emit(Path(g, vs)); });
    dfs.run();
}

} // namespace detail

// Exact decision/search oracle: a qualifying object with lmin <= length <= lmax,
// or nothing iff none exists.
inline std::optional<Path> find_long_path(const Graph& g, const PathSpec& spec,
                                          const OracleLimits& lim = {}) {
    spec.validate(g);
    detail::check_cap(g, lim);
    if (spec.window_empty()) return std::nullopt;
    std::optional<Path> found;
    detail::search_kind(g, spec, nullptr, true, [&](Path p) {
        if (!found) found = std::move(p);
    });
    return found;
}

// Every qualifying object, deduplicated (a path and its reverse count once,
// cycles once per edge set) and sorted for determinism.
inline std::vector<Path> all_qualifying(const Graph& g, const PathSpec& spec,
                                        const OracleLimits& lim = {}) {
    spec.validate(g);
    detail::check_cap(g, lim);
    if (spec.window_empty()) return {};
    std::set<std::vector<VertexId>> canon;
    std::vector<Path> out;
    detail::search_kind(g, spec, nullptr, false, [&](Path p) {
        std::vector<VertexId> key = p.verts;
        std::vector<VertexId> rev(key.rbegin(), key.rend());
        if (!p.closed && rev < key) key = rev;
        if (canon.insert(key).second) out.push_back(std::move(p));
    });
    std::sort(out.begin(), out.end(),
              [](const Path& x, const Path& y) { return x.verts < y.verts; });
    return out;
}

namespace detail {

struct MaskedFamily {
    std::vector<Path> paths;
    std::vector<uint64_t> masks;
    std::map<EdgeId, int> bit_of;
    uint64_t full = 0;
};

inline MaskedFamily build_family(const Graph& g, const PathSpec& spec, const OracleLimits& lim) {
    if (g.alive_edge_count() > 64)
        throw oracle_too_large(g.alive_vertex_count(), g.alive_edge_count(),
                               OracleLimits{lim.max_vertices, 64});
    MaskedFamily fam;
    int bit = 0;
    for (EdgeId e : g.edge_ids()) fam.bit_of[e] = bit++;
    fam.full = bit == 64 ? ~0ull : ((1ull << bit) - 1);
    fam.paths = all_qualifying(g, spec, lim);
    for (const Path& p : fam.paths) {
        uint64_t m = 0;
        for (EdgeId e : p.edges) m |= 1ull << fam.bit_of.at(e);
        fam.masks.push_back(m);
    }
    return fam;
}

} // namespace detail

// Maximum number of pairwise edge-disjoint qualifying objects, with witnesses.
// Exhaustive branch-and-bound over the qualifying family, memoized on the set
// of surviving edges.
inline OracleResult exact_max_packing(const Graph& g, const PathSpec& spec,
                                      const OracleLimits& lim = {}) {
    detail::MaskedFamily fam = detail::build_family(g, spec, lim);
    struct Choice {
        int best = 0;
        int take = -1;  // index of path taken, or -1
        int skip = -1;  // bit of anchor edge skipped, or -1
    };
    std::unordered_map<uint64_t, Choice> memo;

    std::function<int(uint64_t)> solve = [&](uint64_t mask) -> int {
        auto it = memo.find(mask);
        if (it != memo.end()) return it->second.best;
        int first = -1;
        for (size_t i = 0; i < fam.paths.size(); ++i)
            if ((fam.masks[i] & mask) == fam.masks[i]) {
                first = static_cast<int>(i);
                break;
            }
        Choice c;
        if (first < 0) {
            memo[mask] = c;
            return 0;
        }
        uint64_t anchor = fam.masks[first] & (~fam.masks[first] + 1); // lowest set bit
        c.best = solve(mask & ~anchor);
        c.skip = __builtin_ctzll(anchor);
        for (size_t i = 0; i < fam.paths.size(); ++i) {
            if ((fam.masks[i] & mask) != fam.masks[i] || !(fam.masks[i] & anchor)) continue;
            int cand = 1 + solve(mask & ~fam.masks[i]);
            if (cand > c.best) {
                c.best = cand;
                c.take = static_cast<int>(i);
            }
        }
        memo[mask] = c;
        return c.best;
    };

    OracleResult res;
    res.optimum = solve(fam.full);
    uint64_t mask = fam.full;
    while (true) {
        const auto& c = memo.at(mask);
        if (c.best == 0) break;
        if (c.take >= 0) {
            res.packing.push_back(fam.paths[c.take]);
            mask &= ~fam.masks[c.take];
        } else {
            mask &= ~(1ull << c.skip);
        }
    }
    return res;
}

// Minimum edge set whose removal leaves no qualifying object, with witnesses.
// Branches on the edges of one surviving object at a time.
inline OracleResult exact_min_hitting(const Graph& g, const PathSpec& spec,
                                      const OracleLimits& lim = {}) {
    detail::MaskedFamily fam = detail::build_family(g, spec, lim);
    struct Choice {
        int best = 0;
        int bit = -1;
    };
    std::unordered_map<uint64_t, Choice> memo;

    std::function<int(uint64_t)> solve = [&](uint64_t mask) -> int {
        auto it = memo.find(mask);
        if (it != memo.end()) return it->second.best;
        int first = -1;
        for (size_t i = 0; i < fam.paths.size(); ++i)
            if ((fam.masks[i] & mask) == fam.masks[i]) {
                first = static_cast<int>(i);
                break;
            }
        Choice c;
        if (first >= 0) {
            c.best = INT32_MAX;
            uint64_t pm = fam.masks[first];
            while (pm) {
                uint64_t b = pm & (~pm + 1);
                pm &= ~b;
                int cand = 1 + solve(mask & ~b);
                if (cand < c.best) {
                    c.best = cand;
                    c.bit = __builtin_ctzll(b);
                }
            }
        }
        memo[mask] = c;
        return c.best;
    };

    OracleResult res;
    res.optimum = solve(fam.full);
    std::vector<EdgeId> edge_of_bit(64, -1);
    for (auto [e, b] : fam.bit_of) edge_of_bit[b] = e;
    uint64_t mask = fam.full;
    while (true) {
        const auto& c = memo.at(mask);
        if (c.bit < 0) break;
        res.hitting.push_back(edge_of_bit[c.bit]);
        mask &= ~(1ull << c.bit);
    }
    std::sort(res.hitting.begin(), res.hitting.end());
    return res;
}

// Shrinks X to an inclusion-minimal hitting set, scanning in ascending edge id.
// Requires that X already hits every qualifying object.
inline std::vector<EdgeId> minimalize_hitting_set(const Graph& g, const PathSpec& spec,
                                                  std::vector<EdgeId> x,
                                                  const OracleLimits& lim = {}) {
    std::sort(x.begin(), x.end());
    x.erase(std::unique(x.begin(), x.end()), x.end());
    if (auto survivor = find_long_path(g.without_edges(x), spec, lim))
        throw precondition_error("edge set is not a hitting set", *survivor);
    for (size_t i = 0; i < x.size();) {
        std::vector<EdgeId> trial;
        for (size_t j = 0; j < x.size(); ++j)
            if (j != i) trial.push_back(x[j]);
        if (!find_long_path(g.without_edges(trial), spec, lim)) {
            x = std::move(trial);
        } else {
            ++i;
        }
    }
    return x;
}

// Greedy maximal matching on a pair list (parallel pairs allowed). The matched
// endpoints cover every input pair.
inline std::vector<int> greedy_maximal_matching(const std::vector<std::pair<VertexId, VertexId>>& pairs) {
    std::set<VertexId> used;
    std::vector<int> picked;
    for (size_t i = 0; i < pairs.size(); ++i) {
        auto [u, v] = pairs[i];
        if (u == v || used.count(u) || used.count(v)) continue;
        used.insert(u);
        used.insert(v);
        picked.push_back(static_cast<int>(i));
    }
    return picked;
}

} // namespace epp
