#include "gvm/labeling.hpp"

#include <algorithm>
#include <iterator>

namespace gvm {

std::string to_string(ObstructionKind k) {
    switch (k) {
        case ObstructionKind::DegreeGapNeighborhood: return "degree-gap-neighborhood";
        case ObstructionKind::PendantDeg2Dist2: return "pendant-deg2-dist2";
        case ObstructionKind::CompleteGraphSumMu: return "complete-graph-sum-mu";
        case ObstructionKind::DirectProductPendant: return "direct-product-pendant";
        case ObstructionKind::ExhaustedSearch: return "exhausted-search";
    }
    return "?";
}

namespace {

std::vector<std::pair<Vertex, Vertex>> pendant_deg2_pairs(const Graph& g) {
    std::vector<std::pair<Vertex, Vertex>> out;
    for (Vertex u = 0; u < g.order(); ++u) {
        if (g.degree(u) != 1) continue;
        auto d = bfs_distances(g, u);
        for (Vertex v = 0; v < g.order(); ++v)
            if (g.degree(v) == 2 && d[v] && *d[v] == 2) out.emplace_back(u, v);
    }
    return out;
}

}  // namespace

std::vector<Obstruction> check_obstructions(const Graph& g) {
    std::vector<Obstruction> out;
    for (Vertex u = 0; u < g.order(); ++u) {
        const auto& nu = g.neighbors(u);
        for (Vertex v = 0; v < g.order(); ++v) {
            if (u == v) continue;
            const auto& nv = g.neighbors(v);
            if (nu.size() != nv.size() + 1) continue;
            std::vector<Vertex> diff;
            std::set_difference(nu.begin(), nu.end(), nv.begin(), nv.end(), std::back_inserter(diff));
            if (diff.size() != 1) continue;
            out.push_back({ObstructionKind::DegreeGapNeighborhood,
                           {u, v, diff[0]},
                           "N(" + std::to_string(u) + ") = N(" + std::to_string(v) + ") + {" +
                               std::to_string(diff[0]) + "}"});
        }
    }
    for (auto [u, v] : pendant_deg2_pairs(g))
        out.push_back({ObstructionKind::PendantDeg2Dist2,
                       {u, v},
                       "pendant " + std::to_string(u) + " at distance 2 from degree-2 vertex " + std::to_string(v)});
    return out;
}

std::optional<Obstruction> check_direct_product_obstruction(const Graph& g, const Graph& h) {
    auto pairs = pendant_deg2_pairs(g);
    if (pairs.empty()) return std::nullopt;
    for (Vertex y = 0; y < h.order(); ++y) {
        if (h.degree(y) != 1) continue;
        auto [u, v] = pairs.front();
        const auto m = h.order();
        return Obstruction{ObstructionKind::DirectProductPendant,
                           {u * m + y, v * m + y},
                           "(" + std::to_string(u) + "," + std::to_string(y) + ") is a pendant at distance 2 from (" +
                               std::to_string(v) + "," + std::to_string(y) + "), which has degree 2"};
    }
    return std::nullopt;
}

bool is_complete(const Graph& g) {
    const auto n = g.order();
    return n > 0 && g.size() == n * (n - 1) / 2;
}

std::vector<std::string> check_neutral_observation(const MagicCertificate<FiniteAbelianGroup>& c) {
    const auto& g = c.graph();
    const auto& grp = c.group();
    std::vector<std::string> out;
    if (g.order() == 0) return out;
    VertexPartition part;
    try {
        part = classify_vertices(g);
    } catch (const std::invalid_argument&) {
        return out;
    }
    if (!part.has_pendant()) return out;
    const auto& mu = c.mu();
    const auto& l = c.labels();
    for (auto y : part.supports())
        if (!(l[y] == mu))
            out.push_back("support " + std::to_string(y) + " is labeled " + grp.format(l[y]) + ", not mu = " +
                          grp.format(mu));
    auto neutral_nbrs = [&](Vertex x) {
        std::vector<Vertex> r;
        for (auto u : g.neighbors(x))
            if (part.classes[u] == VertexClass::Neutral) r.push_back(u);
        return r;
    };
    const auto neutrals = part.of(VertexClass::Neutral);
    for (auto x1 : neutrals)
        for (auto x2 : g.neighbors(x1)) {
            if (x2 <= x1 || part.classes[x2] != VertexClass::Neutral) continue;
            auto a = neutral_nbrs(x1);
            auto b = neutral_nbrs(x2);
            a.erase(std::remove(a.begin(), a.end(), x2), a.end());
            b.erase(std::remove(b.begin(), b.end(), x1), b.end());
            if (a != b) continue;
            auto lhs = grp.sub(l[x1], l[x2]);
            auto rhs = grp.scale(static_cast<std::int64_t>(g.degree(x1)) - static_cast<std::int64_t>(g.degree(x2)), mu);
            if (!(lhs == rhs))
                out.push_back("adjacent neutrals " + std::to_string(x1) + ", " + std::to_string(x2) +
                              ": label difference " + grp.format(lhs) + " differs from " + grp.format(rhs));
        }
    const auto o = grp.order_of(mu);
    for (auto x : neutrals) {
        if (!neutral_nbrs(x).empty()) continue;
        const auto d = g.degree(x);
        if (d % o != 1 % o || d % o == 2 % o)
            out.push_back("neutral " + std::to_string(x) + " has degree " + std::to_string(d) +
                          ", which is not 1 mod o(mu) = " + std::to_string(o));
    }
    for (Vertex u = 0; u < g.order(); ++u) {
        if (g.degree(u) != 1) continue;
        auto d = bfs_distances(g, u);
        for (Vertex v = 0; v < g.order(); ++v)
            if (g.degree(v) >= 2 && d[v] && *d[v] == 2 && g.degree(v) < 3)
                out.push_back("vertex " + std::to_string(v) + " at distance 2 from pendant " + std::to_string(u) +
                              " has degree " + std::to_string(g.degree(v)));
    }
    return out;
}

}  // namespace gvm
