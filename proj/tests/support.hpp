#pragma once

#include "gvm/algebra.hpp"
#include "gvm/constructors.hpp"
#include "gvm/graph.hpp"
#include "gvm/labeling.hpp"

#include <random>
#include <stdexcept>
#include <vector>

namespace gvm::testing {

// Center 0 with `legs` paths of length 2 hanging off it.
inline Graph spider(std::size_t legs) {
    Graph g(1 + 2 * legs);
    for (std::size_t i = 0; i < legs; ++i) {
        g.add_edge(0, 1 + 2 * i);
        g.add_edge(1 + 2 * i, 2 + 2 * i);
    }
    return g;
}

// Adjacent centers 0 and 1 with a and b leaves.
inline Graph double_star(std::size_t a, std::size_t b) {
    Graph g(2 + a + b);
    g.add_edge(0, 1);
    for (std::size_t i = 0; i < a; ++i) g.add_edge(0, 2 + i);
    for (std::size_t i = 0; i < b; ++i) g.add_edge(1, 2 + a + i);
    return g;
}

inline Graph from_prufer(const std::vector<std::size_t>& seq) {
    const auto n = seq.size() + 2;
    std::vector<std::size_t> degree(n, 1);
    for (auto x : seq) ++degree[x];
    Graph g(n);
    for (auto x : seq) {
        for (std::size_t leaf = 0; leaf < n; ++leaf)
            if (degree[leaf] == 1) {
                g.add_edge(leaf, x);
                --degree[leaf];
                --degree[x];
                break;
            }
    }
    std::vector<std::size_t> rest;
    for (std::size_t v = 0; v < n; ++v)
        if (degree[v] == 1) rest.push_back(v);
    g.add_edge(rest.at(0), rest.at(1));
    return g;
}

inline Graph random_tree(std::size_t n, std::mt19937_64& rng) {
    if (n == 1) return Graph(1);
    if (n == 2) return path_graph(2);
    std::uniform_int_distribution<std::size_t> pick(0, n - 1);
    std::vector<std::size_t> seq(n - 2);
    for (auto& x : seq) x = pick(rng);
    return from_prufer(seq);
}

inline Certificate certify(const Graph& g, const FiniteAbelianGroup& grp, const std::vector<GroupElement>& labels) {
    auto r = verify_magic(g, Labeling<FiniteAbelianGroup>{grp, labels});
    if (!is_magic(r)) throw std::logic_error("test fixture is not magic");
    return std::get<Certificate>(std::move(r));
}

inline Certificate certify_cyclic(const Graph& g, std::int64_t n, const std::vector<std::int64_t>& labels) {
    auto grp = FiniteAbelianGroup::cyclic(n);
    std::vector<GroupElement> v;
    for (auto x : labels) v.push_back(grp.make({x}));
    return certify(g, grp, v);
}

inline Certificate constant_certificate(const Graph& g, const FiniteAbelianGroup& grp, const GroupElement& a) {
    return certify(g, grp, std::vector<GroupElement>(g.order(), a));
}

}  // namespace gvm::testing
