#pragma once

// Undirected simple graph with stable edge identifiers. Deleting an edge or
// vertex never renumbers anything else; ids of dead slots are simply retired.

#include <algorithm>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace epp {

using VertexId = int;
using EdgeId = int;

struct Edge {
    VertexId u = -1;
    VertexId v = -1;
    bool alive = false;

    VertexId other(VertexId w) const { return w == u ? v : u; }
    bool touches(VertexId w) const { return u == w || v == w; }
};

class Graph {
public:
    Graph() = default;
    explicit Graph(int vertex_count)
        : vertex_alive_(vertex_count, true), adj_(vertex_count) {}

    int vertex_slots() const { return static_cast<int>(vertex_alive_.size()); }
    int edge_slots() const { return static_cast<int>(edges_.size()); }

    int alive_vertex_count() const {
        return static_cast<int>(std::count(vertex_alive_.begin(), vertex_alive_.end(), true));
    }
    int alive_edge_count() const { return alive_edges_; }

    bool has_vertex(VertexId v) const {
        return v >= 0 && v < vertex_slots() && vertex_alive_[v];
    }
    bool has_edge(EdgeId e) const {
        return e >= 0 && e < edge_slots() && edges_[e].alive;
    }

    VertexId add_vertex() {
        vertex_alive_.push_back(true);
        adj_.emplace_back();
        return vertex_slots() - 1;
    }

    EdgeId add_edge(VertexId u, VertexId v) {
        require_vertex(u);
        require_vertex(v);
        if (u == v) throw std::invalid_argument("self-loop on vertex " + std::to_string(u));
        if (edge_between(u, v)) throw std::invalid_argument("parallel edge " + pair_str(u, v));
        EdgeId id = edge_slots();
        edges_.push_back(Edge{u, v, true});
        adj_[u].push_back(id);
        adj_[v].push_back(id);
        ++alive_edges_;
        return id;
    }

    void delete_edge(EdgeId e) {
        if (!has_edge(e)) throw std::invalid_argument("no such edge id " + std::to_string(e));
        Edge& ed = edges_[e];
        detach(adj_[ed.u], e);
        detach(adj_[ed.v], e);
        ed.alive = false;
        --alive_edges_;
    }

    // Removes the vertex together with all incident edges; the id is retired.
    void delete_vertex(VertexId v) {
        require_vertex(v);
        for (EdgeId e : std::vector<EdgeId>(adj_[v].begin(), adj_[v].end())) delete_edge(e);
        vertex_alive_[v] = false;
    }

    const Edge& edge(EdgeId e) const {
        if (!has_edge(e)) throw std::invalid_argument("no such edge id " + std::to_string(e));
        return edges_[e];
    }

    std::optional<EdgeId> edge_between(VertexId u, VertexId v) const {
        if (!has_vertex(u) || !has_vertex(v)) return std::nullopt;
        const auto& shorter = adj_[u].size() <= adj_[v].size() ? adj_[u] : adj_[v];
        VertexId a = adj_[u].size() <= adj_[v].size() ? u : v;
        VertexId b = a == u ? v : u;
        for (EdgeId e : shorter)
            if (edges_[e].other(a) == b) return e;
        return std::nullopt;
    }

    // Incident edge ids in ascending order.
    std::vector<EdgeId> incident_edges(VertexId v) const {
        require_vertex(v);
        std::vector<EdgeId> out(adj_[v].begin(), adj_[v].end());
        std::sort(out.begin(), out.end());
        return out;
    }

    // Neighbor vertex ids in ascending order.
    std::vector<VertexId> neighbors(VertexId v) const {
        require_vertex(v);
        std::vector<VertexId> out;
        out.reserve(adj_[v].size());
        for (EdgeId e : adj_[v]) out.push_back(edges_[e].other(v));
        std::sort(out.begin(), out.end());
        return out;
    }

    int degree(VertexId v) const {
        require_vertex(v);
        return static_cast<int>(adj_[v].size());
    }

    std::vector<VertexId> vertices() const {
        std::vector<VertexId> out;
        for (VertexId v = 0; v < vertex_slots(); ++v)
            if (vertex_alive_[v]) out.push_back(v);
        return out;
    }

    std::vector<EdgeId> edge_ids() const {
        std::vector<EdgeId> out;
        for (EdgeId e = 0; e < edge_slots(); ++e)
            if (edges_[e].alive) out.push_back(e);
        return out;
    }

    Graph without_edges(const std::vector<EdgeId>& es) const {
        Graph g = *this;
        for (EdgeId e : es)
            if (g.has_edge(e)) g.delete_edge(e);
        return g;
    }

    Graph without_vertices(const std::vector<VertexId>& vs) const {
        Graph g = *this;
        for (VertexId v : vs)
            if (g.has_vertex(v)) g.delete_vertex(v);
        return g;
    }

private:
    void require_vertex(VertexId v) const {
        if (!has_vertex(v)) throw std::invalid_argument("no such vertex id " + std::to_string(v));
    }
    static void detach(std::vector<EdgeId>& list, EdgeId e) {
        list.erase(std::remove(list.begin(), list.end(), e), list.end());
    }
    static std::string pair_str(VertexId u, VertexId v) {
        return "{" + std::to_string(u) + "," + std::to_string(v) + "}";
    }

    std::vector<bool> vertex_alive_;
    std::vector<Edge> edges_;
    std::vector<std::vector<EdgeId>> adj_;
    int alive_edges_ = 0;
};

// A simple path (or cycle when closed): distinct vertices, consecutive ones
// adjacent in the host graph. For a closed path the edge list includes the
// wrap-around edge, so length == verts.size() in that case.
struct Path {
    std::vector<VertexId> verts;
    std::vector<EdgeId> edges;
    bool closed = false;

    Path() = default;

    Path(const Graph& g, std::vector<VertexId> vs, bool close = false)
        : verts(std::move(vs)), closed(close) {
        if (verts.empty()) throw std::invalid_argument("empty path");
        if (closed && verts.size() < 3) throw std::invalid_argument("cycle needs >= 3 vertices");
        for (size_t i = 0; i + 1 < verts.size(); ++i) edges.push_back(resolve(g, verts[i], verts[i + 1]));
        if (closed) edges.push_back(resolve(g, verts.back(), verts.front()));
        auto sorted = verts;
        std::sort(sorted.begin(), sorted.end());
        if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
            throw std::invalid_argument("repeated vertex in path");
    }

    int length() const { return static_cast<int>(edges.size()); }
    VertexId front() const { return verts.front(); }
    VertexId back() const { return verts.back(); }

    bool contains_vertex(VertexId v) const {
        return std::find(verts.begin(), verts.end(), v) != verts.end();
    }
    bool contains_edge(EdgeId e) const {
        return std::find(edges.begin(), edges.end(), e) != edges.end();
    }

    Path reversed(const Graph& g) const {
        std::vector<VertexId> vs(verts.rbegin(), verts.rend());
        return Path(g, std::move(vs), closed);
    }

private:
    static EdgeId resolve(const Graph& g, VertexId u, VertexId v) {
        auto e = g.edge_between(u, v);
        if (!e) throw std::invalid_argument("vertices " + std::to_string(u) + " and " +
                                            std::to_string(v) + " are not adjacent");
        return *e;
    }
};

inline bool edge_disjoint(const Path& a, const Path& b) {
    for (EdgeId e : a.edges)
        if (b.contains_edge(e)) return false;
    return true;
}

} // namespace epp
