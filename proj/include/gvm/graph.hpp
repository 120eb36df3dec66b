#pragma once

// Simple undirected graphs, the pendant / support / neutral vertex partition,
// BFS distances, tree metrics and small-tree enumeration.

#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace gvm {

using Vertex = std::size_t;
using Edge = std::pair<Vertex, Vertex>;

class Graph {
public:
    Graph() = default;
    explicit Graph(std::size_t n) : adj_(n) {}
    Graph(std::size_t n, const std::vector<Edge>& edges);

    std::size_t order() const noexcept { return adj_.size(); }
    std::size_t size() const noexcept { return edge_count_; }

    /// Throws std::invalid_argument on loops, repeated edges and bad endpoints.
    void add_edge(Vertex u, Vertex v);
    Vertex add_vertex();

    const std::vector<Vertex>& neighbors(Vertex v) const;
    bool adjacent(Vertex u, Vertex v) const;
    std::size_t degree(Vertex v) const { return neighbors(v).size(); }
    /// Edges with u < v, sorted.
    std::vector<Edge> edges() const;

    bool is_regular() const;
    std::optional<std::size_t> regularity() const;
    bool is_connected() const;

    friend bool operator==(const Graph&, const Graph&) = default;

private:
    void check_vertex(Vertex v) const;

    std::vector<std::vector<Vertex>> adj_;
    std::size_t edge_count_ = 0;
};

Graph path_graph(std::size_t n);
Graph cycle_graph(std::size_t n);
Graph complete_graph(std::size_t n);
Graph empty_graph(std::size_t n);
Graph star_graph(std::size_t leaves);
/// Circulant graph on n vertices with the given connection offsets in [1, n/2].
Graph circulant_graph(std::size_t n, const std::vector<std::size_t>& offsets);

enum class VertexClass { Pendant, StrongSupport, WeakSupport, Neutral };

std::string to_string(VertexClass c);
inline bool is_support(VertexClass c) { return c == VertexClass::StrongSupport || c == VertexClass::WeakSupport; }

struct DegreeProfile {
    std::size_t deg = 0;
    std::size_t deg_p = 0;
    std::size_t deg_s = 0;
    std::size_t deg_n = 0;
};

struct VertexPartition {
    std::vector<VertexClass> classes;
    std::vector<DegreeProfile> profile;

    std::vector<Vertex> of(VertexClass c) const;
    std::vector<Vertex> non_pendants() const;
    std::vector<Vertex> supports() const;
    /// Pendant neighbors of v.
    std::vector<Vertex> pendants_of(const Graph& g, Vertex v) const;
    bool has_pendant() const;
};

/// Throws std::invalid_argument when G has an isolated vertex.
VertexPartition classify_vertices(const Graph& g);

/// BFS distances from `source`; unreachable vertices are nullopt.
std::vector<std::optional<std::size_t>> bfs_distances(const Graph& g, Vertex source);
std::optional<std::size_t> distance(const Graph& g, Vertex u, Vertex v);

struct TreeMetrics {
    bool is_tree = false;
    std::size_t diameter = 0;
    std::vector<Vertex> centers;
};

/// Throws std::invalid_argument for a disconnected graph.
TreeMetrics tree_metrics(const Graph& g);

/// Keeps exactly the edges inside S; S[i] becomes vertex i.
Graph induced_subgraph(const Graph& g, const std::vector<Vertex>& s);

inline constexpr std::size_t kDefaultTreeCap = 10;

/// AHU canonical string of a tree, minimized over its centers.
std::string tree_canonical_form(const Graph& tree);

/// Non-isomorphic trees on n vertices with the given diameter, ordered by
/// canonical form. Throws std::invalid_argument when n exceeds `cap`.
std::vector<Graph> enumerate_trees(std::size_t n, std::size_t diameter, std::size_t cap = kDefaultTreeCap);
/// Every non-isomorphic tree on n vertices.
std::vector<Graph> enumerate_all_trees(std::size_t n, std::size_t cap = kDefaultTreeCap);

}  // namespace gvm
