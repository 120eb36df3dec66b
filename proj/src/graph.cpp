#include "gvm/graph.hpp"

#include <algorithm>
#include <deque>
#include <functional>
#include <set>
#include <stdexcept>

namespace gvm {

Graph::Graph(std::size_t n, const std::vector<Edge>& edges) : adj_(n) {
    for (auto [u, v] : edges) add_edge(u, v);
}

void Graph::check_vertex(Vertex v) const {
    if (v >= adj_.size())
        throw std::invalid_argument("vertex " + std::to_string(v) + " out of range for a graph on " +
                                    std::to_string(adj_.size()) + " vertices");
}

void Graph::add_edge(Vertex u, Vertex v) {
    check_vertex(u);
    check_vertex(v);
    if (u == v) throw std::invalid_argument("loop at vertex " + std::to_string(u));
    auto& au = adj_[u];
    auto it = std::lower_bound(au.begin(), au.end(), v);
    if (it != au.end() && *it == v)
        throw std::invalid_argument("repeated edge " + std::to_string(u) + "-" + std::to_string(v));
    au.insert(it, v);
    auto& av = adj_[v];
    av.insert(std::lower_bound(av.begin(), av.end(), u), u);
    ++edge_count_;
}

Vertex Graph::add_vertex() {
    adj_.emplace_back();
    return adj_.size() - 1;
}

const std::vector<Vertex>& Graph::neighbors(Vertex v) const {
    check_vertex(v);
    return adj_[v];
}

bool Graph::adjacent(Vertex u, Vertex v) const {
    const auto& a = neighbors(u);
    check_vertex(v);
    return std::binary_search(a.begin(), a.end(), v);
}

std::vector<Edge> Graph::edges() const {
    std::vector<Edge> out;
    out.reserve(edge_count_);
    for (Vertex u = 0; u < adj_.size(); ++u)
        for (auto v : adj_[u])
            if (u < v) out.emplace_back(u, v);
    return out;
}

std::optional<std::size_t> Graph::regularity() const {
    if (adj_.empty()) return std::nullopt;
    auto r = adj_[0].size();
    for (auto& a : adj_)
        if (a.size() != r) return std::nullopt;
    return r;
}

bool Graph::is_regular() const { return regularity().has_value(); }

bool Graph::is_connected() const {
    if (adj_.empty()) return true;
    auto d = bfs_distances(*this, 0);
    return std::all_of(d.begin(), d.end(), [](auto& x) { return x.has_value(); });
}

Graph path_graph(std::size_t n) {
    Graph g(n);
    for (std::size_t i = 0; i + 1 < n; ++i) g.add_edge(i, i + 1);
    return g;
}

Graph cycle_graph(std::size_t n) {
    if (n < 3) throw std::invalid_argument("a cycle needs at least 3 vertices");
    Graph g = path_graph(n);
    g.add_edge(n - 1, 0);
    return g;
}

Graph complete_graph(std::size_t n) {
    Graph g(n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j) g.add_edge(i, j);
    return g;
}

Graph empty_graph(std::size_t n) { return Graph(n); }

Graph star_graph(std::size_t leaves) {
    Graph g(leaves + 1);
    for (std::size_t i = 1; i <= leaves; ++i) g.add_edge(0, i);
    return g;
}

Graph circulant_graph(std::size_t n, const std::vector<std::size_t>& offsets) {
    Graph g(n);
    std::set<Edge> seen;
    for (auto s : offsets) {
        if (s == 0 || 2 * s > n) throw std::invalid_argument("circulant offset out of range");
        for (std::size_t i = 0; i < n; ++i) {
            auto j = (i + s) % n;
            Edge e{std::min(i, j), std::max(i, j)};
            if (seen.insert(e).second) g.add_edge(e.first, e.second);
        }
    }
    return g;
}

std::string to_string(VertexClass c) {
    switch (c) {
        case VertexClass::Pendant: return "pendant";
        case VertexClass::StrongSupport: return "strong-support";
        case VertexClass::WeakSupport: return "weak-support";
        case VertexClass::Neutral: return "neutral";
    }
    return "?";
}

std::vector<Vertex> VertexPartition::of(VertexClass c) const {
    std::vector<Vertex> out;
    for (Vertex v = 0; v < classes.size(); ++v)
        if (classes[v] == c) out.push_back(v);
    return out;
}

std::vector<Vertex> VertexPartition::non_pendants() const {
    std::vector<Vertex> out;
    for (Vertex v = 0; v < classes.size(); ++v)
        if (classes[v] != VertexClass::Pendant) out.push_back(v);
    return out;
}

std::vector<Vertex> VertexPartition::supports() const {
    std::vector<Vertex> out;
    for (Vertex v = 0; v < classes.size(); ++v)
        if (is_support(classes[v])) out.push_back(v);
    return out;
}

std::vector<Vertex> VertexPartition::pendants_of(const Graph& g, Vertex v) const {
    std::vector<Vertex> out;
    for (auto u : g.neighbors(v))
        if (classes[u] == VertexClass::Pendant) out.push_back(u);
    return out;
}

bool VertexPartition::has_pendant() const {
    return std::find(classes.begin(), classes.end(), VertexClass::Pendant) != classes.end();
}

VertexPartition classify_vertices(const Graph& g) {
    const auto n = g.order();
    VertexPartition p;
    p.classes.resize(n);
    p.profile.resize(n);
    for (Vertex v = 0; v < n; ++v)
        if (g.degree(v) == 0) throw std::invalid_argument("isolated vertex " + std::to_string(v));
    for (Vertex v = 0; v < n; ++v) {
        std::size_t pend = 0;
        for (auto u : g.neighbors(v))
            if (g.degree(u) == 1) ++pend;
        // K2: both ends are pendants, neither is a support
        if (g.degree(v) == 1)
            p.classes[v] = VertexClass::Pendant;
        else if (pend >= 2)
            p.classes[v] = VertexClass::StrongSupport;
        else if (pend == 1)
            p.classes[v] = VertexClass::WeakSupport;
        else
            p.classes[v] = VertexClass::Neutral;
    }
    for (Vertex v = 0; v < n; ++v) {
        auto& d = p.profile[v];
        d.deg = g.degree(v);
        for (auto u : g.neighbors(v)) {
            switch (p.classes[u]) {
                case VertexClass::Pendant: ++d.deg_p; break;
                case VertexClass::StrongSupport:
                case VertexClass::WeakSupport: ++d.deg_s; break;
                case VertexClass::Neutral: ++d.deg_n; break;
            }
        }
    }
    return p;
}

std::vector<std::optional<std::size_t>> bfs_distances(const Graph& g, Vertex source) {
    std::vector<std::optional<std::size_t>> dist(g.order());
    (void)g.neighbors(source);
    std::deque<Vertex> q{source};
    dist[source] = 0;
    while (!q.empty()) {
        auto v = q.front();
        q.pop_front();
        for (auto u : g.neighbors(v))
            if (!dist[u]) {
                dist[u] = *dist[v] + 1;
                q.push_back(u);
            }
    }
    return dist;
}

std::optional<std::size_t> distance(const Graph& g, Vertex u, Vertex v) {
    (void)g.neighbors(v);
    return bfs_distances(g, u)[v];
}

TreeMetrics tree_metrics(const Graph& g) {
    if (g.order() == 0) throw std::invalid_argument("tree_metrics: empty graph");
    if (!g.is_connected()) throw std::invalid_argument("tree_metrics: graph is disconnected");
    TreeMetrics m;
    m.is_tree = g.size() + 1 == g.order();
    std::vector<std::size_t> ecc(g.order());
    for (Vertex v = 0; v < g.order(); ++v) {
        auto d = bfs_distances(g, v);
        std::size_t e = 0;
        for (auto& x : d) e = std::max(e, *x);
        ecc[v] = e;
    }
    m.diameter = *std::max_element(ecc.begin(), ecc.end());
    auto radius = *std::min_element(ecc.begin(), ecc.end());
    for (Vertex v = 0; v < g.order(); ++v)
        if (ecc[v] == radius) m.centers.push_back(v);
    return m;
}

Graph induced_subgraph(const Graph& g, const std::vector<Vertex>& s) {
    std::vector<std::optional<std::size_t>> pos(g.order());
    for (std::size_t i = 0; i < s.size(); ++i) {
        (void)g.neighbors(s[i]);
        if (pos[s[i]]) throw std::invalid_argument("induced_subgraph: repeated vertex");
        pos[s[i]] = i;
    }
    Graph h(s.size());
    for (std::size_t i = 0; i < s.size(); ++i)
        for (auto u : g.neighbors(s[i]))
            if (pos[u] && *pos[u] > i) h.add_edge(i, *pos[u]);
    return h;
}

namespace {

std::string ahu(const Graph& t, Vertex v, std::optional<Vertex> parent) {
    std::vector<std::string> kids;
    for (auto u : t.neighbors(v))
        if (!parent || u != *parent) kids.push_back(ahu(t, u, v));
    std::sort(kids.begin(), kids.end());
    std::string out = "(";
    for (auto& k : kids) out += k;
    out += ")";
    return out;
}

std::vector<Graph> grow_all(std::size_t n) {
    std::vector<Graph> level{Graph(1)};
    for (std::size_t k = 2; k <= n; ++k) {
        std::set<std::string> seen;
        std::vector<std::pair<std::string, Graph>> next;
        for (const auto& t : level) {
            for (Vertex v = 0; v < t.order(); ++v) {
                Graph g = t;
                auto leaf = g.add_vertex();
                g.add_edge(v, leaf);
                auto key = tree_canonical_form(g);
                if (seen.insert(key).second) next.emplace_back(std::move(key), std::move(g));
            }
        }
        std::sort(next.begin(), next.end(), [](auto& a, auto& b) { return a.first < b.first; });
        level.clear();
        for (auto& [k2, g] : next) level.push_back(std::move(g));
    }
    return level;
}

}  // namespace

std::string tree_canonical_form(const Graph& tree) {
    if (tree.order() == 0) return "";
    auto m = tree_metrics(tree);
    if (!m.is_tree) throw std::invalid_argument("tree_canonical_form: not a tree");
    std::string best;
    for (auto c : m.centers) {
        auto s = ahu(tree, c, std::nullopt);
        if (best.empty() || s < best) best = s;
    }
    return best;
}

std::vector<Graph> enumerate_all_trees(std::size_t n, std::size_t cap) {
    if (n == 0) throw std::invalid_argument("enumerate_trees: n must be at least 1");
    if (n > cap)
        throw std::invalid_argument("enumerate_trees: n = " + std::to_string(n) + " exceeds the cap " +
                                    std::to_string(cap));
    return grow_all(n);
}

std::vector<Graph> enumerate_trees(std::size_t n, std::size_t diameter, std::size_t cap) {
    std::vector<Graph> out;
    for (auto& t : enumerate_all_trees(n, cap))
        if (tree_metrics(t).diameter == diameter) out.push_back(std::move(t));
    return out;
}

}  // namespace gvm
