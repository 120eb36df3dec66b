#pragma once

// Graph products and subdivision transforms. Every constructor also returns
// the provenance of each product vertex.
//
// Layout: for (generalized) coronas the base vertices come first, followed by
// the attached copies in base-vertex order. Pair products use row-major
// indices g·|V(H)| + h; a composition with layers of different orders
// concatenates the layers in base-vertex order. Subdivisions keep the
// original vertices and append the new path vertices u_1..u_n, followed by
// any attached pendants.

#include "gvm/graph.hpp"

#include <cstddef>
#include <string>
#include <vector>

namespace gvm {

enum class ProvenanceKind { Base, Attached, Pair, Original, Subdivision, SubdivisionPendant };

struct Provenance {
    ProvenanceKind kind = ProvenanceKind::Base;
    // Base: a = base vertex. Attached: a = base vertex whose copy this is,
    // b = vertex inside the copy. Pair: (a, b) = (g, h). Original: a = vertex
    // of the input graph. Subdivision: a = i (1-based path position).
    // SubdivisionPendant: a = i, b = j (0-based pendant index at u_i).
    std::size_t a = 0;
    std::size_t b = 0;

    friend bool operator==(const Provenance&, const Provenance&) = default;
};

std::string to_string(ProvenanceKind k);

struct ProductIndexMap {
    std::string kind;
    std::vector<Provenance> provenance;
    /// Index layout helper for corona-like products: first index of copy i.
    std::vector<std::size_t> copy_offset;

    /// Inverse lookup; throws std::out_of_range when absent.
    std::size_t index_of(const Provenance& p) const;
};

struct Product {
    Graph graph;
    ProductIndexMap map;
};

Product corona(const Graph& g, const Graph& h);
/// Throws std::invalid_argument unless attachments.size() == |V(G)|.
Product generalized_corona(const Graph& g, const std::vector<Graph>& attachments);
Product composition(const Graph& g, const Graph& h);
Product composition_per_vertex(const Graph& g, const std::vector<Graph>& layers);
Product cartesian(const Graph& g, const Graph& h);
Product direct_product(const Graph& g, const Graph& h);

struct Subdivision {
    Graph graph;
    /// u, u_1, …, u_n, v.
    std::vector<Vertex> path;
    ProductIndexMap map;
};

/// Replaces the edge uv by the path u, u_1, …, u_n, v (n ≥ 1).
Subdivision subdivide_edge(const Graph& g, Edge e, std::size_t n);
/// As subdivide_edge, then joins t_i new pendants to u_i; every t_i ≥ 2.
Subdivision subdivide_and_attach(const Graph& g, Edge e, const std::vector<std::size_t>& pendant_counts);

/// The 8-vertex base graph of the worked generalized-corona example: the cycle
/// u1..u8 with chords u1u5 and u3u7.
Graph sample_gencorona_base();
inline const std::vector<std::size_t> kSampleGencoronaAttachments{3, 4, 4, 4, 5, 6, 4, 5};

}  // namespace gvm
