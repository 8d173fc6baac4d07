#pragma once

// Shared test utilities: tiny graph builders, seeded randomness, and a naive
// all-simple-paths enumerator kept deliberately independent of the search
// oracle (plain recursion, no pruning, membership via qualifies()).

#include <random>
#include <set>
#include <vector>

#include "epp/epp.hpp"

namespace test_util {

using namespace epp;

inline Graph make_graph(int n, const std::vector<std::pair<int, int>>& edges) {
    Graph g(n);
    for (auto [u, v] : edges) g.add_edge(u, v);
    return g;
}

inline Graph path_graph(int n) {
    Graph g(n);
    for (int i = 0; i + 1 < n; ++i) g.add_edge(i, i + 1);
    return g;
}

inline Graph cycle_graph(int n) {
    Graph g = path_graph(n);
    g.add_edge(n - 1, 0);
    return g;
}

inline Graph complete_graph(int n) {
    Graph g(n);
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) g.add_edge(u, v);
    return g;
}

// Every simple path with at least one edge, one representative per vertex
// sequence up to reversal.
inline std::vector<std::vector<VertexId>> naive_all_simple_paths(const Graph& g) {
    std::set<std::vector<VertexId>> canon;
    std::vector<VertexId> trail;
    std::vector<bool> used(g.vertex_slots(), false);
    std::function<void(VertexId)> walk = [&](VertexId u) {
        if (trail.size() >= 2) {
            std::vector<VertexId> rev(trail.rbegin(), trail.rend());
            canon.insert(std::min(trail, rev));
        }
        for (VertexId w : g.neighbors(u)) {
            if (used[w]) continue;
            used[w] = true;
            trail.push_back(w);
            walk(w);
            trail.pop_back();
            used[w] = false;
        }
    };
    for (VertexId s : g.vertices()) {
        used[s] = true;
        trail.push_back(s);
        walk(s);
        trail.pop_back();
        used[s] = false;
    }
    return {canon.begin(), canon.end()};
}

// Every simple cycle, canonical form: smallest vertex first, smaller neighbor
// second.
inline std::vector<std::vector<VertexId>> naive_all_cycles(const Graph& g) {
    std::set<std::vector<VertexId>> canon;
    std::vector<VertexId> trail;
    std::vector<bool> used(g.vertex_slots(), false);
    std::function<void(VertexId, VertexId)> walk = [&](VertexId root, VertexId u) {
        for (VertexId w : g.neighbors(u)) {
            if (w == root && trail.size() >= 3) {
                std::vector<VertexId> cyc = trail;
                if (cyc[1] > cyc.back()) std::reverse(cyc.begin() + 1, cyc.end());
                canon.insert(cyc);
                continue;
            }
            if (used[w] || w < root) continue;
            used[w] = true;
            trail.push_back(w);
            walk(root, w);
            trail.pop_back();
            used[w] = false;
        }
    };
    for (VertexId s : g.vertices()) {
        used[s] = true;
        trail.push_back(s);
        walk(s, s);
        trail.pop_back();
        used[s] = false;
    }
    return {canon.begin(), canon.end()};
}

// Independent ground truth for find_long_path existence tests.
inline std::vector<Path> naive_qualifying(const Graph& g, const PathSpec& spec) {
    std::vector<Path> out;
    if (spec.kind == PathKind::CycleThrough) {
        for (const auto& verts : naive_all_cycles(g)) {
            Path p(g, verts, true);
            if (qualifies(spec, p)) out.push_back(std::move(p));
        }
        return out;
    }
    for (const auto& verts : naive_all_simple_paths(g)) {
        Path p(g, verts);
        if (qualifies(spec, p)) out.push_back(std::move(p));
    }
    return out;
}

inline Graph random_graph(int n, double p, std::mt19937_64& rng) {
    Graph g(n);
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (static_cast<double>(rng() >> 11) < p * 9007199254740992.0) g.add_edge(u, v);
    return g;
}

inline std::vector<VertexId> shuffled_vertices(int n, std::mt19937_64& rng) {
    std::vector<VertexId> order(n);
    for (int i = 0; i < n; ++i) order[i] = i;
    for (int i = n - 1; i > 0; --i) std::swap(order[i], order[rng() % (i + 1)]);
    return order;
}

} // namespace test_util
