#pragma once

#include <cstddef>
#include <stdexcept>
#include <utility>
#include <vector>

namespace polysieve {

class GraphError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Simple undirected graph: no loops, no parallel edges. Edges are indexed
/// 0..m-1 in insertion order; each is stored with endpoints (u, v), u < v.
class Graph {
public:
    explicit Graph(std::size_t vertex_count) : adjacency_(vertex_count) {}

    Graph(std::size_t vertex_count, const std::vector<std::pair<int, int>>& edges)
        : Graph(vertex_count) {
        for (auto [u, v] : edges) add_edge(u, v);
    }

    std::size_t vertex_count() const { return adjacency_.size(); }
    std::size_t edge_count() const { return edges_.size(); }

    /// Endpoints of edge e, normalized so first < second.
    std::pair<int, int> edge(std::size_t e) const { return edges_[e]; }
    const std::vector<std::pair<int, int>>& edges() const { return edges_; }

    /// (neighbor, edge index) pairs incident to v.
    const std::vector<std::pair<int, int>>& neighbors(int v) const { return adjacency_[v]; }

    std::size_t degree(int v) const { return adjacency_[v].size(); }

    bool adjacent(int u, int v) const {
        for (auto [w, e] : adjacency_[u])
            if (w == v) return true;
        return false;
    }

    /// Edge index of {u, v}, or -1.
    int edge_index(int u, int v) const {
        for (auto [w, e] : adjacency_[u])
            if (w == v) return e;
        return -1;
    }

    bool is_regular() const {
        if (vertex_count() == 0) return true;
        std::size_t d = degree(0);
        for (std::size_t v = 1; v < vertex_count(); ++v)
            if (degree(v) != d) return false;
        return true;
    }

    std::size_t max_degree() const {
        std::size_t d = 0;
        for (std::size_t v = 0; v < vertex_count(); ++v)
            if (degree(v) > d) d = degree(v);
        return d;
    }

    void add_edge(int u, int v) {
        if (u == v) throw GraphError("loop edge");
        if (u < 0 || v < 0 || static_cast<std::size_t>(u) >= vertex_count() ||
            static_cast<std::size_t>(v) >= vertex_count())
            throw GraphError("vertex out of range");
        if (u > v) std::swap(u, v);
        if (adjacent(u, v)) throw GraphError("parallel edge");
        int e = static_cast<int>(edges_.size());
        edges_.emplace_back(u, v);
        adjacency_[u].emplace_back(v, e);
        adjacency_[v].emplace_back(u, e);
    }

private:
    std::vector<std::pair<int, int>> edges_;
    std::vector<std::vector<std::pair<int, int>>> adjacency_;
};

}  // namespace polysieve
