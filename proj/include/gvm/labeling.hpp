#pragma once

// Labelings, vertex weights, magic verification and the structural
// obstructions that rule a labeling out.

#include "gvm/algebra.hpp"
#include "gvm/graph.hpp"

#include <cstddef>
#include <optional>
#include <string>
#include <variant>
#include <vector>

namespace gvm {

template <AbelianGroup G>
struct Labeling {
    G group;
    std::vector<typename G::Element> values;
};

template <AbelianGroup G>
class MagicCertificate;

template <AbelianGroup G>
struct VerifyFailure {
    enum class Kind { SizeMismatch, NotMember, ZeroLabel, WeightMismatch };
    Kind kind = Kind::WeightMismatch;
    /// Offending vertex (for SizeMismatch: the labeling's length).
    std::size_t vertex = 0;
    /// For WeightMismatch: the weight at `vertex` and the weight at vertex 0.
    std::optional<typename G::Element> weight;
    std::optional<typename G::Element> expected;

    std::string describe(const G& group) const {
        switch (kind) {
            case Kind::SizeMismatch: return "labeling has " + std::to_string(vertex) + " entries, graph size differs";
            case Kind::NotMember: return "label of vertex " + std::to_string(vertex) + " is not a group element";
            case Kind::ZeroLabel: return "vertex " + std::to_string(vertex) + " has the zero label";
            case Kind::WeightMismatch:
                return "vertex " + std::to_string(vertex) + " has weight " + group.format(*weight) +
                       ", vertex 0 has weight " + group.format(*expected);
        }
        return "unknown failure";
    }
};

template <AbelianGroup G>
using VerifyResult = std::variant<MagicCertificate<G>, VerifyFailure<G>>;

template <AbelianGroup G>
typename G::Element weight(const Graph& graph, const Labeling<G>& l, Vertex v) {
    auto w = l.group.zero();
    for (auto u : graph.neighbors(v)) w = l.group.add(w, l.values.at(u));
    return w;
}

template <AbelianGroup G>
VerifyResult<G> verify_magic(const Graph& graph, Labeling<G> l);

/// A labeling whose weights have been checked to agree. Only verify_magic
/// can construct one.
template <AbelianGroup G>
class MagicCertificate {
public:
    using Element = typename G::Element;

    const G& group() const noexcept { return labeling_.group; }
    const Labeling<G>& labeling() const noexcept { return labeling_; }
    const std::vector<Element>& labels() const noexcept { return labeling_.values; }
    const Element& mu() const noexcept { return mu_; }
    const Graph& graph() const noexcept { return graph_; }

private:
    MagicCertificate(Graph graph, Labeling<G> l, Element mu)
        : graph_(std::move(graph)), labeling_(std::move(l)), mu_(std::move(mu)) {}

    friend VerifyResult<G> verify_magic<G>(const Graph& graph, Labeling<G> l);

    Graph graph_;
    Labeling<G> labeling_;
    Element mu_;
};

template <AbelianGroup G>
VerifyResult<G> verify_magic(const Graph& graph, Labeling<G> l) {
    using F = VerifyFailure<G>;
    if (l.values.size() != graph.order()) return F{F::Kind::SizeMismatch, l.values.size(), {}, {}};
    for (Vertex v = 0; v < graph.order(); ++v) {
        if (!l.group.contains(l.values[v])) return F{F::Kind::NotMember, v, {}, {}};
        if (l.group.is_zero(l.values[v])) return F{F::Kind::ZeroLabel, v, {}, {}};
    }
    if (graph.order() == 0) {
        auto zero = l.group.zero();
        return MagicCertificate<G>(graph, std::move(l), std::move(zero));
    }
    auto mu = weight(graph, l, 0);
    for (Vertex v = 1; v < graph.order(); ++v) {
        auto w = weight(graph, l, v);
        if (!(w == mu)) return F{F::Kind::WeightMismatch, v, w, mu};
    }
    return MagicCertificate<G>(graph, std::move(l), std::move(mu));
}

template <AbelianGroup G>
bool is_magic(const VerifyResult<G>& r) {
    return std::holds_alternative<MagicCertificate<G>>(r);
}

template <AbelianGroup G>
typename G::Element label_sum(const G& group, const std::vector<typename G::Element>& values) {
    auto s = group.zero();
    for (auto& x : values) s = group.add(s, x);
    return s;
}

/// Σ deg(v)ℓ(v) = nμ.
template <AbelianGroup G>
bool degree_weighted_identity(const Graph& graph, const Labeling<G>& l, const typename G::Element& mu) {
    auto lhs = l.group.zero();
    for (Vertex v = 0; v < graph.order(); ++v)
        lhs = l.group.add(lhs, l.group.scale(static_cast<std::int64_t>(graph.degree(v)), l.values.at(v)));
    return lhs == l.group.scale(static_cast<std::int64_t>(graph.order()), mu);
}

template <AbelianGroup G>
bool degree_weighted_identity(const MagicCertificate<G>& c) {
    return degree_weighted_identity(c.graph(), c.labeling(), c.mu());
}

/// Negates every label; the result verifies with constant −μ.
template <AbelianGroup G>
MagicCertificate<G> negate_labeling(const MagicCertificate<G>& c) {
    Labeling<G> l = c.labeling();
    for (auto& x : l.values) x = l.group.neg(x);
    auto r = verify_magic(c.graph(), std::move(l));
    return std::get<MagicCertificate<G>>(std::move(r));
}

enum class ObstructionKind { DegreeGapNeighborhood, PendantDeg2Dist2, CompleteGraphSumMu, DirectProductPendant, ExhaustedSearch };

std::string to_string(ObstructionKind k);

struct Obstruction {
    ObstructionKind kind;
    /// DegreeGapNeighborhood: (u, v, x) with N(u) = N(v) ∪ {x}.
    /// PendantDeg2Dist2: (pendant, degree-2 vertex).
    /// DirectProductPendant: the same pair, as product vertex indices.
    std::vector<Vertex> witness;
    std::string detail;
};

/// Unconditional obstructions on G: every vertex pair whose neighborhoods
/// differ by exactly one extra vertex, and every pendant at distance 2 from a
/// vertex of degree 2.
std::vector<Obstruction> check_obstructions(const Graph& g);

/// If G has a pendant at distance 2 from a degree-2 vertex and H has a
/// pendant, returns the corresponding pattern inside G × H (row-major pair
/// indices).
std::optional<Obstruction> check_direct_product_obstruction(const Graph& g, const Graph& h);

bool is_complete(const Graph& g);

/// A complete graph admits no certificate with Σℓ = μ; reports the
/// conflict when `certificate` is such a certificate.
template <AbelianGroup G>
std::optional<Obstruction> check_complete_graph_certificate(const MagicCertificate<G>& c) {
    if (!is_complete(c.graph())) return std::nullopt;
    if (!(label_sum(c.group(), c.labels()) == c.mu())) return std::nullopt;
    return Obstruction{ObstructionKind::CompleteGraphSumMu, {}, "complete graph certificate with label sum equal to mu"};
}

/// Claims about a magic labeling of a graph with a pendant, checked on a
/// concrete certificate:
///   (1) every support vertex carries μ;
///   (2) adjacent neutrals x1, x2 whose other neutral neighbors coincide
///       (N_n(x1) ∖ {x2} = N_n(x2) ∖ {x1}) satisfy ℓ(x1) − ℓ(x2) = (deg(x1) − deg(x2))μ;
///   (3) a neutral with no neutral neighbor has deg ≡ 1 and ≢ 2 mod o(μ);
///   (4) every non-pendant at distance 2 from a pendant has degree ≥ 3.
/// Returns one message per violated claim; empty when the graph has no
/// pendant.
std::vector<std::string> check_neutral_observation(const MagicCertificate<FiniteAbelianGroup>& c);

}  // namespace gvm
