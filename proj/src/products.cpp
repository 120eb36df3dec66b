#include "gvm/products.hpp"

#include <algorithm>
#include <stdexcept>

namespace gvm {

std::string to_string(ProvenanceKind k) {
    switch (k) {
        case ProvenanceKind::Base: return "base";
        case ProvenanceKind::Attached: return "attached";
        case ProvenanceKind::Pair: return "pair";
        case ProvenanceKind::Original: return "original";
        case ProvenanceKind::Subdivision: return "subdivision";
        case ProvenanceKind::SubdivisionPendant: return "subdivision-pendant";
    }
    return "?";
}

std::size_t ProductIndexMap::index_of(const Provenance& p) const {
    auto it = std::find(provenance.begin(), provenance.end(), p);
    if (it == provenance.end()) throw std::out_of_range("provenance record not present in index map");
    return static_cast<std::size_t>(it - provenance.begin());
}

Product generalized_corona(const Graph& g, const std::vector<Graph>& attachments) {
    if (attachments.size() != g.order())
        throw std::invalid_argument("generalized_corona: " + std::to_string(attachments.size()) +
                                    " attachment graphs for " + std::to_string(g.order()) + " base vertices");
    std::size_t total = g.order();
    for (auto& h : attachments) total += h.order();
    Product out{Graph(total), {}};
    out.map.kind = "gencorona";
    for (Vertex v = 0; v < g.order(); ++v) out.map.provenance.push_back({ProvenanceKind::Base, v, 0});
    for (auto [u, v] : g.edges()) out.graph.add_edge(u, v);
    std::size_t offset = g.order();
    for (Vertex i = 0; i < g.order(); ++i) {
        const auto& h = attachments[i];
        out.map.copy_offset.push_back(offset);
        for (Vertex x = 0; x < h.order(); ++x) {
            out.map.provenance.push_back({ProvenanceKind::Attached, i, x});
            out.graph.add_edge(i, offset + x);
        }
        for (auto [x, y] : h.edges()) out.graph.add_edge(offset + x, offset + y);
        offset += h.order();
    }
    return out;
}

Product corona(const Graph& g, const Graph& h) {
    auto out = generalized_corona(g, std::vector<Graph>(g.order(), h));
    out.map.kind = "corona";
    return out;
}

Product composition_per_vertex(const Graph& g, const std::vector<Graph>& layers) {
    if (layers.size() != g.order())
        throw std::invalid_argument("composition: " + std::to_string(layers.size()) + " layer graphs for " +
                                    std::to_string(g.order()) + " vertices");
    std::size_t total = 0;
    std::vector<std::size_t> offset;
    for (auto& h : layers) {
        offset.push_back(total);
        total += h.order();
    }
    Product out{Graph(total), {}};
    out.map.kind = "composition";
    out.map.copy_offset = offset;
    for (Vertex x = 0; x < g.order(); ++x)
        for (Vertex y = 0; y < layers[x].order(); ++y) out.map.provenance.push_back({ProvenanceKind::Pair, x, y});
    for (Vertex x = 0; x < g.order(); ++x)
        for (auto [a, b] : layers[x].edges()) out.graph.add_edge(offset[x] + a, offset[x] + b);
    for (auto [x1, x2] : g.edges())
        for (Vertex a = 0; a < layers[x1].order(); ++a)
            for (Vertex b = 0; b < layers[x2].order(); ++b) out.graph.add_edge(offset[x1] + a, offset[x2] + b);
    return out;
}

Product composition(const Graph& g, const Graph& h) {
    return composition_per_vertex(g, std::vector<Graph>(g.order(), h));
}

namespace {

Product pair_skeleton(const Graph& g, const Graph& h, const char* kind) {
    Product out{Graph(g.order() * h.order()), {}};
    out.map.kind = kind;
    for (Vertex x = 0; x < g.order(); ++x)
        for (Vertex y = 0; y < h.order(); ++y) out.map.provenance.push_back({ProvenanceKind::Pair, x, y});
    return out;
}

}  // namespace

Product cartesian(const Graph& g, const Graph& h) {
    auto out = pair_skeleton(g, h, "cartesian");
    const auto m = h.order();
    for (Vertex x = 0; x < g.order(); ++x)
        for (auto [a, b] : h.edges()) out.graph.add_edge(x * m + a, x * m + b);
    for (auto [x1, x2] : g.edges())
        for (Vertex y = 0; y < m; ++y) out.graph.add_edge(x1 * m + y, x2 * m + y);
    return out;
}

Product direct_product(const Graph& g, const Graph& h) {
    auto out = pair_skeleton(g, h, "direct");
    const auto m = h.order();
    for (auto [x1, x2] : g.edges())
        for (auto [a, b] : h.edges()) {
            out.graph.add_edge(x1 * m + a, x2 * m + b);
            out.graph.add_edge(x1 * m + b, x2 * m + a);
        }
    return out;
}

Subdivision subdivide_edge(const Graph& g, Edge e, std::size_t n) {
    auto [u, v] = e;
    if (u >= g.order() || v >= g.order() || !g.adjacent(u, v))
        throw std::invalid_argument("subdivide: " + std::to_string(u) + "-" + std::to_string(v) + " is not an edge");
    if (n == 0) throw std::invalid_argument("subdivide: at least one new vertex is required");
    Subdivision out{Graph(g.order() + n), {}, {}};
    out.map.kind = "subdivide";
    for (Vertex x = 0; x < g.order(); ++x) out.map.provenance.push_back({ProvenanceKind::Original, x, 0});
    for (auto [a, b] : g.edges()) {
        if ((a == u && b == v) || (a == v && b == u)) continue;
        out.graph.add_edge(a, b);
    }
    out.path.push_back(u);
    for (std::size_t i = 1; i <= n; ++i) {
        out.map.provenance.push_back({ProvenanceKind::Subdivision, i, 0});
        out.path.push_back(g.order() + i - 1);
    }
    out.path.push_back(v);
    for (std::size_t i = 0; i + 1 < out.path.size(); ++i) out.graph.add_edge(out.path[i], out.path[i + 1]);
    return out;
}

Subdivision subdivide_and_attach(const Graph& g, Edge e, const std::vector<std::size_t>& pendant_counts) {
    for (auto t : pendant_counts)
        if (t < 2) throw std::invalid_argument("subdivide_and_attach: every new vertex needs at least 2 pendants");
    auto out = subdivide_edge(g, e, pendant_counts.size());
    out.map.kind = "subdivide-attach";
    for (std::size_t i = 1; i <= pendant_counts.size(); ++i)
        for (std::size_t j = 0; j < pendant_counts[i - 1]; ++j) {
            auto p = out.graph.add_vertex();
            out.graph.add_edge(out.path[i], p);
            out.map.provenance.push_back({ProvenanceKind::SubdivisionPendant, i, j});
        }
    return out;
}

Graph sample_gencorona_base() {
    Graph g = cycle_graph(8);
    g.add_edge(0, 4);
    g.add_edge(2, 6);
    return g;
}

}  // namespace gvm
