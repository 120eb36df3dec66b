#include "gvm/constructors.hpp"

#include <algorithm>
#include <array>
#include <utility>

namespace gvm {

namespace {

constexpr std::array<std::pair<TheoremId, const char*>, 21> kNames{{
    {TheoremId::AllStrongSupport, "all-strong-support"},
    {TheoremId::AllWeakSupport, "all-weak-support"},
    {TheoremId::GeneralizedCoronaEmpty, "gencorona-empty"},
    {TheoremId::StrongOrNeutral, "strong-or-neutral"},
    {TheoremId::OneNeutral, "one-neutral"},
    {TheoremId::TwoNeutral, "two-neutral"},
    {TheoremId::NeutralInducedLift, "neutral-induced-lift"},
    {TheoremId::IndependentNeutrals, "independent-neutrals"},
    {TheoremId::SubdividePeriod4, "subdivide-period4"},
    {TheoremId::SubdivideHalfsum, "subdivide-halfsum"},
    {TheoremId::SubdivideAttach, "subdivide-attach"},
    {TheoremId::RegularInvolution, "regular-involution"},
    {TheoremId::CoronaProductGroups, "corona-product-groups"},
    {TheoremId::CoronaComplete, "corona-complete"},
    {TheoremId::CoronaSelf, "corona-self"},
    {TheoremId::GencoronaRegulars, "gencorona-regulars"},
    {TheoremId::CompositionP2, "composition-p2"},
    {TheoremId::CompositionRegular, "composition-regular"},
    {TheoremId::CompositionZeroSum, "composition-zero-sum"},
    {TheoremId::CompositionDegreeMultiple, "composition-degree-multiple"},
    {TheoremId::Cartesian, "cartesian"},
}};

using Partial = std::vector<std::optional<GroupElement>>;

[[noreturn]] void violate(TheoremId t, std::string what) { throw HypothesisViolation(t, std::move(what)); }

void require_nonzero(TheoremId t, const FiniteAbelianGroup& grp, const GroupElement& h) {
    if (!grp.contains(h)) violate(t, "g must be an element of " + grp.spec());
    if (grp.is_zero(h)) violate(t, "g must be nonzero");
}

void require_order_three(TheoremId t, const FiniteAbelianGroup& grp) {
    if (!grp.has_at_least(3)) violate(t, "|Γ| ≥ 3");
}

std::int64_t as_int(std::size_t x) { return static_cast<std::int64_t>(x); }

VertexPartition partition(TheoremId t, const Graph& g) {
    VertexPartition p;
    try {
        p = classify_vertices(g);
    } catch (const std::invalid_argument& e) {
        violate(t, std::string("no isolated vertices (") + e.what() + ")");
    }
    for (Vertex v = 0; v < g.order(); ++v)
        if (p.classes[v] == VertexClass::Pendant && g.degree(g.neighbors(v)[0]) == 1)
            violate(t, "no K2 component (vertex " + std::to_string(v) + ")");
    return p;
}

std::size_t count_mod(std::size_t d, std::uint64_t o) { return static_cast<std::size_t>(d % o); }

// μ minus the labels of y's non-pendant neighbors: what y's pendants must sum to.
GroupElement block_sum(const Graph& g, const VertexPartition& p, const FiniteAbelianGroup& grp, const Partial& l,
                       Vertex y, const GroupElement& mu) {
    auto s = mu;
    for (auto u : g.neighbors(y))
        if (p.classes[u] != VertexClass::Pendant) s = grp.sub(s, l.at(u).value());
    return s;
}

// Labels the pendants of every support so that its weight is μ. Returns the
// first weak support whose single pendant would get the zero label.
std::optional<Vertex> fill_pendants(TheoremId t, const Graph& g, const VertexPartition& p,
                                    const FiniteAbelianGroup& grp, Partial& l, const GroupElement& mu) {
    for (auto y : p.supports()) {
        auto s = block_sum(g, p, grp, l, y, mu);
        auto pend = p.pendants_of(g, y);
        if (pend.size() == 1) {
            if (grp.is_zero(s)) return y;
            l[pend[0]] = s;
            continue;
        }
        if (!grp.has_at_least(3)) violate(t, "|Γ| ≥ 3 (strong support " + std::to_string(y) + ")");
        auto parts = decompose_nonzero_sum(grp, s, pend.size());
        for (std::size_t i = 0; i < pend.size(); ++i) l[pend[i]] = parts[i];
    }
    return std::nullopt;
}

Labeling<FiniteAbelianGroup> finalize(const FiniteAbelianGroup& grp, const Partial& l) {
    Labeling<FiniteAbelianGroup> out{grp, {}};
    out.values.reserve(l.size());
    for (std::size_t v = 0; v < l.size(); ++v) {
        if (!l[v]) throw std::logic_error("vertex " + std::to_string(v) + " left unlabeled");
        out.values.push_back(*l[v]);
    }
    return out;
}

Construction certify(TheoremId t, const Graph& g, Labeling<FiniteAbelianGroup> l, const GroupElement& expected,
                     std::optional<ProductIndexMap> map = std::nullopt) {
    auto grp = l.group;
    auto r = verify_magic(g, std::move(l));
    if (auto* f = std::get_if<VerifyFailure<FiniteAbelianGroup>>(&r))
        throw StatementDiscrepancy(t, "labeling is not magic: " + f->describe(grp));
    auto& cert = std::get<Certificate>(r);
    if (!(cert.mu() == expected))
        throw StatementDiscrepancy(t, "magic constant is " + grp.format(cert.mu()) + ", the claimed value is " +
                                          grp.format(expected));
    return Construction{t, std::move(cert), std::move(map)};
}

Partial constant_on_non_pendants(const Graph& g, const VertexPartition& p, const GroupElement& h) {
    Partial l(g.order());
    for (auto v : p.non_pendants()) l[v] = h;
    return l;
}

std::size_t regularity_or(TheoremId t, const Graph& g, const char* name) {
    auto r = g.regularity();
    if (!r) violate(t, std::string(name) + " is regular");
    return *r;
}

}  // namespace

std::string to_string(TheoremId id) {
    for (auto& [k, name] : kNames)
        if (k == id) return name;
    return "?";
}

std::optional<TheoremId> theorem_from_string(std::string_view name) {
    for (auto& [k, n] : kNames)
        if (name == n) return k;
    return std::nullopt;
}

const std::vector<TheoremId>& all_theorems() {
    static const std::vector<TheoremId> all = [] {
        std::vector<TheoremId> v;
        for (auto& kv : kNames) v.push_back(kv.first);
        return v;
    }();
    return all;
}

HypothesisViolation::HypothesisViolation(TheoremId theorem, std::string hypothesis)
    : std::invalid_argument(to_string(theorem) + ": hypothesis violated: " + hypothesis),
      theorem_(theorem),
      hypothesis_(std::move(hypothesis)) {}

StatementDiscrepancy::StatementDiscrepancy(TheoremId theorem, std::string detail)
    : std::runtime_error(to_string(theorem) + ": " + detail), theorem_(theorem), detail_(std::move(detail)) {}

// ---------------------------------------------------------------------------

Construction label_all_strong_support(const Graph& g, const FiniteAbelianGroup& grp, const GroupElement& h) {
    constexpr auto T = TheoremId::AllStrongSupport;
    require_nonzero(T, grp, h);
    require_order_three(T, grp);
    auto p = partition(T, g);
    for (auto v : p.non_pendants())
        if (p.classes[v] != VertexClass::StrongSupport)
            violate(T, "every non-pendant is a strong support (vertex " + std::to_string(v) + " is " +
                           to_string(p.classes[v]) + ")");
    auto l = constant_on_non_pendants(g, p, h);
    fill_pendants(T, g, p, grp, l, h);
    return certify(T, g, finalize(grp, l), h);
}

Construction label_all_weak_support(const Graph& g, const FiniteAbelianGroup& grp, const GroupElement& h) {
    constexpr auto T = TheoremId::AllWeakSupport;
    require_nonzero(T, grp, h);
    auto p = partition(T, g);
    const auto o = grp.order_of(h);
    for (auto v : p.non_pendants()) {
        if (p.classes[v] != VertexClass::WeakSupport)
            violate(T, "every non-pendant is a weak support (vertex " + std::to_string(v) + " is " +
                           to_string(p.classes[v]) + ")");
        if (count_mod(g.degree(v), o) == 2 % o)
            violate(T, "deg(x) ≢ 2 mod o(g) (vertex " + std::to_string(v) + " has degree " +
                           std::to_string(g.degree(v)) + ")");
    }
    auto l = constant_on_non_pendants(g, p, h);
    for (auto y : p.supports()) l[p.pendants_of(g, y)[0]] = grp.scale(2 - as_int(g.degree(y)), h);
    return certify(T, g, finalize(grp, l), h);
}

Construction label_generalized_corona_empty(const Graph& g, const std::vector<std::size_t>& m,
                                            const FiniteAbelianGroup& grp, const GroupElement& h) {
    constexpr auto T = TheoremId::GeneralizedCoronaEmpty;
    require_nonzero(T, grp, h);
    require_order_three(T, grp);
    if (g.order() < 2) violate(T, "G has more than one vertex");
    if (m.size() != g.order()) violate(T, "one attachment size per vertex of G");
    std::vector<Graph> att;
    for (auto mi : m) {
        if (mi < 2) violate(T, "every m_i ≥ 2");
        att.push_back(empty_graph(mi));
    }
    auto prod = generalized_corona(g, att);
    Partial l(prod.graph.order());
    for (Vertex i = 0; i < g.order(); ++i) l[i] = h;
    for (Vertex i = 0; i < g.order(); ++i) {
        auto parts = decompose_nonzero_sum(grp, grp.scale(1 - as_int(g.degree(i)), h), m[i]);
        for (std::size_t j = 0; j < m[i]; ++j) l[prod.map.copy_offset[i] + j] = parts[j];
    }
    return certify(T, prod.graph, finalize(grp, l), h, prod.map);
}

Construction label_strong_or_neutral(const Graph& g, const FiniteAbelianGroup& grp, const GroupElement& h) {
    constexpr auto T = TheoremId::StrongOrNeutral;
    require_nonzero(T, grp, h);
    require_order_three(T, grp);
    auto p = partition(T, g);
    if (!p.has_pendant()) violate(T, "at least one pendant");
    const auto o = grp.order_of(h);
    for (auto v : p.non_pendants()) {
        if (p.classes[v] == VertexClass::WeakSupport)
            violate(T, "non-pendants are strong supports or neutrals (vertex " + std::to_string(v) + " is a weak support)");
        if (p.classes[v] == VertexClass::Neutral && count_mod(g.degree(v), o) != 1 % o)
            violate(T, "deg(x) ≡ 1 mod o(g) for every neutral x (vertex " + std::to_string(v) + " has degree " +
                           std::to_string(g.degree(v)) + ")");
    }
    auto l = constant_on_non_pendants(g, p, h);
    fill_pendants(T, g, p, grp, l, h);
    return certify(T, g, finalize(grp, l), h);
}

namespace {

struct OneNeutralSetup {
    VertexPartition p;
    Vertex x;
};

OneNeutralSetup one_neutral_setup(const Graph& g, const FiniteAbelianGroup& grp, const GroupElement& h) {
    constexpr auto T = TheoremId::OneNeutral;
    require_nonzero(T, grp, h);
    require_order_three(T, grp);
    auto p = partition(T, g);
    if (!p.has_pendant()) violate(T, "at least one pendant");
    auto ns = p.of(VertexClass::Neutral);
    if (ns.size() != 1) violate(T, "exactly one neutral vertex (found " + std::to_string(ns.size()) + ")");
    return {std::move(p), ns[0]};
}

std::optional<Construction> try_one_neutral(const Graph& g, const FiniteAbelianGroup& grp, const GroupElement& h,
                                            const OneNeutralSetup& s) {
    constexpr auto T = TheoremId::OneNeutral;
    const auto o = grp.order_of(h);
    if (count_mod(g.degree(s.x), o) != 1 % o) return std::nullopt;
    std::vector<GroupElement> choices{h};
    for (auto& a : grp.nonzero_elements())
        if (!(a == h)) choices.push_back(a);
    for (auto& a : choices) {
        auto l = constant_on_non_pendants(g, s.p, h);
        l[s.x] = a;
        if (fill_pendants(T, g, s.p, grp, l, h)) continue;
        return certify(T, g, finalize(grp, l), h);
    }
    return std::nullopt;
}

}  // namespace

bool is_magic_one_neutral(const Graph& g, const FiniteAbelianGroup& grp, const GroupElement& h) {
    auto s = one_neutral_setup(g, grp, h);
    return try_one_neutral(g, grp, h, s).has_value();
}

Construction label_one_neutral(const Graph& g, const FiniteAbelianGroup& grp, const GroupElement& h) {
    auto s = one_neutral_setup(g, grp, h);
    const auto o = grp.order_of(h);
    if (count_mod(g.degree(s.x), o) != 1 % o)
        violate(TheoremId::OneNeutral, "deg(x) ≡ 1 mod o(g) (degree " + std::to_string(g.degree(s.x)) + ")");
    auto c = try_one_neutral(g, grp, h, s);
    if (!c) violate(TheoremId::OneNeutral, "some label of the neutral keeps every weak-support pendant nonzero");
    return std::move(*c);
}

Construction label_two_neutral(const Graph& g, const FiniteAbelianGroup& grp, const GroupElement& h) {
    constexpr auto T = TheoremId::TwoNeutral;
    require_nonzero(T, grp, h);
    require_order_three(T, grp);
    auto p = partition(T, g);
    if (!p.has_pendant()) violate(T, "at least one pendant");
    auto ns = p.of(VertexClass::Neutral);
    if (ns.size() != 2) violate(T, "exactly two neutral vertices (found " + std::to_string(ns.size()) + ")");
    const auto x1 = ns[0], x2 = ns[1];
    const auto o = grp.order_of(h);

    if (g.adjacent(x1, x2)) {
        auto a1 = grp.scale(2 - as_int(g.degree(x2)), h);
        auto a2 = grp.scale(2 - as_int(g.degree(x1)), h);
        if (grp.is_zero(a1) || grp.is_zero(a2)) violate(T, "deg(x_i) ≢ 2 mod o(g) for adjacent neutrals");
        auto l = constant_on_non_pendants(g, p, h);
        l[x1] = a1;
        l[x2] = a2;
        if (auto y = fill_pendants(T, g, p, grp, l, h))
            violate(T, "no forced zero label (pendant of weak support " + std::to_string(*y) + ")");
        return certify(T, g, finalize(grp, l), h);
    }

    for (auto x : {x1, x2})
        if (count_mod(g.degree(x), o) != 1 % o)
            violate(T, "deg(x_i) ≡ 1 mod o(g) for non-adjacent neutrals (vertex " + std::to_string(x) + ")");
    const auto nz = grp.nonzero_elements();
    for (auto& a1 : nz)
        for (auto& a2 : nz) {
            auto l = constant_on_non_pendants(g, p, h);
            l[x1] = a1;
            l[x2] = a2;
            if (fill_pendants(T, g, p, grp, l, h)) continue;
            return certify(T, g, finalize(grp, l), h);
        }
    violate(T, "some choice of neutral labels keeps every weak-support pendant nonzero");
}

Construction label_neutral_induced_lift(const Graph& g, const Certificate& inner) {
    constexpr auto T = TheoremId::NeutralInducedLift;
    const auto& grp = inner.group();
    const auto& h = inner.mu();
    require_nonzero(T, grp, h);
    auto p = partition(T, g);
    auto ns = p.of(VertexClass::Neutral);
    if (ns.size() < 2) violate(T, "the induced subgraph on the neutrals has more than one vertex");
    auto induced = induced_subgraph(g, ns);
    if (induced.order() != inner.graph().order() || induced.edges() != inner.graph().edges())
        violate(T, "the inner certificate is for the induced subgraph on the neutrals");
    const auto o = grp.order_of(h);
    for (auto x : ns)
        if (count_mod(p.profile[x].deg_s, o) != 0)
            violate(T, "deg_s(x) ≡ 0 mod o(g) for every neutral (vertex " + std::to_string(x) + ")");
    Partial l(g.order());
    for (auto v : p.supports()) l[v] = h;
    for (std::size_t i = 0; i < ns.size(); ++i) l[ns[i]] = inner.labels()[i];
    if (auto y = fill_pendants(T, g, p, grp, l, h))
        violate(T, "no forced zero label (pendant of weak support " + std::to_string(*y) + ")");
    return certify(T, g, finalize(grp, l), h);
}

Construction label_independent_neutrals(const Graph& g, const FiniteAbelianGroup& grp, const GroupElement& h) {
    constexpr auto T = TheoremId::IndependentNeutrals;
    require_nonzero(T, grp, h);
    auto p = partition(T, g);
    const auto o = grp.order_of(h);
    for (auto x : p.of(VertexClass::Neutral)) {
        if (p.profile[x].deg_n != 0) violate(T, "the neutrals are pairwise non-adjacent");
        if (count_mod(g.degree(x), o) != 1 % o || count_mod(g.degree(x), o) == 2 % o)
            violate(T, "deg(x) ≡ 1 and ≢ 2 mod o(g) for every neutral (vertex " + std::to_string(x) + ")");
    }
    for (auto y : p.supports())
        if (count_mod(p.profile[y].deg_n, o) != 0)
            violate(T, "every support has a multiple of o(g) neutral neighbors (vertex " + std::to_string(y) + ")");
    auto l = constant_on_non_pendants(g, p, h);
    if (auto y = fill_pendants(T, g, p, grp, l, h))
        violate(T, "(1 − deg_s(y))g ≠ 0 at weak support " + std::to_string(*y));
    return certify(T, g, finalize(grp, l), h);
}

// ---------------------------------------------------------------------------

namespace {

Edge require_edge(TheoremId t, const Graph& g, Edge e) {
    if (e.first >= g.order() || e.second >= g.order() || !g.adjacent(e.first, e.second))
        violate(t, "uv is an edge of G");
    return e;
}

}  // namespace

Construction subdivide_relabel_period4(const Certificate& c, Edge e, std::size_t n) {
    constexpr auto T = TheoremId::SubdividePeriod4;
    const auto& g = c.graph();
    const auto& grp = c.group();
    auto [u, v] = require_edge(T, g, e);
    auto p = partition(T, g);
    for (Vertex x = 0; x < g.order(); ++x)
        if (p.classes[x] != VertexClass::Neutral) violate(T, "every vertex of G is neutral");
    if (n == 0 || n % 4 != 0) violate(T, "n ≡ 0 mod 4");
    const auto& lu = c.labels()[u];
    if (!(lu == c.labels()[v])) violate(T, "ℓ(u) = ℓ(v)");
    if (lu == c.mu()) violate(T, "ℓ(u) ≠ μ");
    auto sub = subdivide_edge(g, e, n);
    Partial l(sub.graph.order());
    for (Vertex x = 0; x < g.order(); ++x) l[x] = c.labels()[x];
    const auto other = grp.sub(c.mu(), lu);
    for (std::size_t i = 1; i <= n; ++i) l[sub.path[i]] = (i % 4 == 0 || i % 4 == 1) ? lu : other;
    return certify(T, sub.graph, finalize(grp, l), c.mu(), sub.map);
}

Construction subdivide_relabel_halfsum(const Certificate& c, Edge e, std::size_t n) {
    constexpr auto T = TheoremId::SubdivideHalfsum;
    const auto& g = c.graph();
    const auto& grp = c.group();
    auto [u, v] = require_edge(T, g, e);
    if (n == 0) violate(T, "n ≥ 1");
    const auto& lu = c.labels()[u];
    if (!(lu == c.labels()[v])) violate(T, "ℓ(u) = ℓ(v)");
    if (!(grp.add(lu, lu) == c.mu())) violate(T, "2ℓ(u) = μ");
    auto sub = subdivide_edge(g, e, n);
    Partial l(sub.graph.order());
    for (Vertex x = 0; x < g.order(); ++x) l[x] = c.labels()[x];
    for (std::size_t i = 1; i <= n; ++i) l[sub.path[i]] = lu;
    return certify(T, sub.graph, finalize(grp, l), c.mu(), sub.map);
}

Construction subdivide_attach_relabel(const Certificate& c, Edge e, const std::vector<std::size_t>& t) {
    constexpr auto T = TheoremId::SubdivideAttach;
    const auto& g = c.graph();
    const auto& grp = c.group();
    auto [u, v] = require_edge(T, g, e);
    const auto& h = c.mu();
    if (!(c.labels()[u] == h) || !(c.labels()[v] == h)) violate(T, "ℓ(u) = ℓ(v) = μ");
    for (auto ti : t)
        if (ti < 2) violate(T, "every t_i ≥ 2");
    if (t.empty()) {
        auto map = ProductIndexMap{"subdivide-attach", {}, {}};
        for (Vertex x = 0; x < g.order(); ++x) map.provenance.push_back({ProvenanceKind::Original, x, 0});
        return certify(T, g, c.labeling(), h, map);
    }
    require_order_three(T, grp);
    auto sub = subdivide_and_attach(g, e, t);
    Partial l(sub.graph.order());
    for (Vertex x = 0; x < g.order(); ++x) l[x] = c.labels()[x];
    for (std::size_t i = 1; i <= t.size(); ++i) l[sub.path[i]] = h;
    auto next = g.order() + t.size();
    for (std::size_t i = 0; i < t.size(); ++i) {
        auto parts = decompose_nonzero_sum(grp, grp.neg(h), t[i]);
        for (auto& a : parts) l[next++] = a;
    }
    return certify(T, sub.graph, finalize(grp, l), h, sub.map);
}

// ---------------------------------------------------------------------------

Construction label_regular_involution(const Graph& g, const FiniteAbelianGroup& grp,
                                      std::optional<GroupElement> involution) {
    constexpr auto T = TheoremId::RegularInvolution;
    if (!involution) {
        auto inv = grp.involutions();
        if (inv.empty()) violate(T, "Γ has an involution");
        involution = inv.front();
    }
    require_nonzero(T, grp, *involution);
    if (!grp.is_zero(grp.add(*involution, *involution))) violate(T, "g is an involution");
    if (g.order() == 0) violate(T, "G is nonempty");
    const auto parity = g.degree(0) % 2;
    for (Vertex v = 0; v < g.order(); ++v)
        if (g.degree(v) % 2 != parity) violate(T, "all degrees even or all degrees odd");
    Labeling<FiniteAbelianGroup> l{grp, std::vector<GroupElement>(g.order(), *involution)};
    return certify(T, g, std::move(l), parity ? *involution : grp.zero());
}

Construction label_corona_product_groups(const Certificate& gcert, const Certificate& hcert) {
    constexpr auto T = TheoremId::CoronaProductGroups;
    const auto& G = gcert.graph();
    const auto& H = hcert.graph();
    for (auto& a : gcert.labels())
        if (!(a == gcert.mu())) violate(T, "every label of G equals its magic constant");
    if (!(label_sum(hcert.group(), hcert.labels()) == hcert.mu()))
        violate(T, "the label sum of H equals its magic constant");
    const auto prod_group = gcert.group().times(hcert.group());
    auto prod = corona(G, H);
    Labeling<FiniteAbelianGroup> l{prod_group, {}};
    const auto gz = gcert.group().zero();
    const auto hz = hcert.group().zero();
    for (Vertex x = 0; x < G.order(); ++x) l.values.push_back(prod_group.pair(gcert.labels()[x], hz));
    for (Vertex i = 0; i < G.order(); ++i)
        for (Vertex y = 0; y < H.order(); ++y) l.values.push_back(prod_group.pair(gz, hcert.labels()[y]));
    return certify(T, prod.graph, std::move(l), prod_group.pair(gcert.mu(), hcert.mu()), prod.map);
}

Construction label_corona_complete(const Graph& g, std::size_t m, const FiniteAbelianGroup& grp,
                                   const GroupElement& g1) {
    constexpr auto T = TheoremId::CoronaComplete;
    require_nonzero(T, grp, g1);
    if (m == 0) violate(T, "m ≥ 1");
    const auto r = as_int(regularity_or(T, g, "G"));
    const auto g2 = grp.scale(-(r - 1), g1);
    if (grp.is_zero(g2)) violate(T, "−(r − 1)g₁ ≠ 0");
    auto prod = corona(g, complete_graph(m));
    Labeling<FiniteAbelianGroup> l{grp, std::vector<GroupElement>(prod.graph.order(), g2)};
    for (Vertex x = 0; x < g.order(); ++x) l.values[x] = g1;
    return certify(T, prod.graph, std::move(l), grp.scale(r - as_int(m) * (r - 1), g1), prod.map);
}

Construction label_corona_self(const Graph& g, const FiniteAbelianGroup& grp, const GroupElement& h) {
    constexpr auto T = TheoremId::CoronaSelf;
    require_nonzero(T, grp, h);
    const auto r = as_int(regularity_or(T, g, "G"));
    const auto o = grp.order_of(h);
    if (count_mod(g.order(), o) != 1 % o) violate(T, "n ≡ 1 mod o(g)");
    auto prod = corona(g, g);
    Labeling<FiniteAbelianGroup> l{grp, std::vector<GroupElement>(prod.graph.order(), h)};
    return certify(T, prod.graph, std::move(l), grp.scale(r + 1, h), prod.map);
}

bool gencorona_regulars_literal_condition(const std::vector<Graph>& hs, const GroupElement& h,
                                          const FiniteAbelianGroup& grp) {
    const auto o = static_cast<std::int64_t>(grp.order_of(h));
    for (auto& hi : hs) {
        if (!hi.regularity()) return false;
        for (auto& hj : hs) {
            if (!hj.regularity()) return false;
            const auto lhs = as_int(*hi.regularity()) + as_int(hi.order());
            const auto rhs = as_int(*hj.regularity()) + 1;
            if ((lhs - rhs) % o != 0) return false;
        }
    }
    return true;
}

Construction label_gencorona_regulars(const Graph& g, const std::vector<Graph>& hs, const FiniteAbelianGroup& grp,
                                      const GroupElement& h) {
    constexpr auto T = TheoremId::GencoronaRegulars;
    require_nonzero(T, grp, h);
    const auto r = as_int(regularity_or(T, g, "G"));
    if (hs.size() != g.order()) violate(T, "one attached graph per vertex of G");
    if (hs.empty()) violate(T, "G is nonempty");
    const auto n = hs.front().order();
    const auto o = static_cast<std::int64_t>(grp.order_of(h));
    for (auto& hi : hs) {
        if (hi.order() != n) violate(T, "every H_i has the same order");
        const auto ri = as_int(regularity_or(T, hi, "every H_i"));
        if ((r + as_int(n) - ri - 1) % o != 0) violate(T, "r + n ≡ r_i + 1 mod o(g) for every i");
    }
    auto prod = generalized_corona(g, hs);
    Labeling<FiniteAbelianGroup> l{grp, std::vector<GroupElement>(prod.graph.order(), h)};
    return certify(T, prod.graph, std::move(l), grp.scale(r + as_int(n), h), prod.map);
}

Construction label_composition_p2(const Graph& g, const Graph& h, const FiniteAbelianGroup& grp) {
    constexpr auto T = TheoremId::CompositionP2;
    const auto order = grp.order();
    auto p = smallest_prime_factor(order);
    if (!p || *p * *p != order) violate(T, "|Γ| = p² for a prime p");
    const auto r = as_int(regularity_or(T, h, "H"));
    if (h.order() % *p != 0) violate(T, "n ≡ 0 mod p");
    auto a = grp.first_of_order(*p);
    if (!a) violate(T, "Γ has an element of order p");
    auto prod = composition(g, h);
    Labeling<FiniteAbelianGroup> l{grp, std::vector<GroupElement>(prod.graph.order(), *a)};
    return certify(T, prod.graph, std::move(l), grp.scale(r, *a), prod.map);
}

namespace {

struct LayerData {
    FiniteAbelianGroup grp;
    GroupElement mu;
    std::vector<GroupElement> sums;
};

LayerData layer_data(TheoremId t, const Graph& g, const std::vector<Certificate>& layers) {
    if (layers.size() != g.order()) violate(t, "one layer certificate per vertex of G");
    if (layers.empty()) violate(t, "G is nonempty");
    LayerData d{layers.front().group(), layers.front().mu(), {}};
    for (auto& c : layers) {
        if (!(c.group() == d.grp)) violate(t, "all layer certificates use the same group");
        if (!(c.mu() == d.mu)) violate(t, "all layer certificates share the magic constant");
        d.sums.push_back(label_sum(d.grp, c.labels()));
    }
    return d;
}

std::pair<Product, Labeling<FiniteAbelianGroup>> layered(const Graph& g, const std::vector<Certificate>& layers,
                                                         const FiniteAbelianGroup& grp) {
    std::vector<Graph> hs;
    for (auto& c : layers) hs.push_back(c.graph());
    auto prod = composition_per_vertex(g, hs);
    Labeling<FiniteAbelianGroup> l{grp, {}};
    for (auto& c : layers) l.values.insert(l.values.end(), c.labels().begin(), c.labels().end());
    return {std::move(prod), std::move(l)};
}

}  // namespace

Construction label_composition_regular(const Graph& g, const std::vector<Certificate>& layers) {
    constexpr auto T = TheoremId::CompositionRegular;
    const auto r = as_int(regularity_or(T, g, "G"));
    auto d = layer_data(T, g, layers);
    for (auto& c : layers)
        if (c.graph().order() != layers.front().graph().order()) violate(T, "every H_i has the same order");
    for (auto& s : d.sums)
        if (!(s == d.sums.front())) violate(T, "every layer has the same label sum");
    auto [prod, l] = layered(g, layers, d.grp);
    auto mu = d.grp.add(d.mu, d.grp.scale(r, d.sums.front()));
    return certify(T, prod.graph, std::move(l), mu, prod.map);
}

Construction label_composition_zero_sum(const Graph& g, const std::vector<Certificate>& layers) {
    constexpr auto T = TheoremId::CompositionZeroSum;
    auto d = layer_data(T, g, layers);
    for (auto& s : d.sums)
        if (!d.grp.is_zero(s)) violate(T, "every layer has label sum 0");
    auto [prod, l] = layered(g, layers, d.grp);
    return certify(T, prod.graph, std::move(l), d.mu, prod.map);
}

namespace {

LayerData degree_multiple_data(const Graph& g, const std::vector<Certificate>& layers) {
    constexpr auto T = TheoremId::CompositionDegreeMultiple;
    auto d = layer_data(T, g, layers);
    for (auto& s : d.sums)
        if (!(s == d.mu)) violate(T, "every layer has label sum equal to its magic constant");
    return d;
}

}  // namespace

bool is_magic_composition_degree_multiple(const Graph& g, const std::vector<Certificate>& layers) {
    auto d = degree_multiple_data(g, layers);
    for (Vertex v = 0; v < g.order(); ++v)
        if (!d.grp.is_zero(d.grp.scale(as_int(g.degree(v)), d.mu))) return false;
    return true;
}

Construction label_composition_degree_multiple(const Graph& g, const std::vector<Certificate>& layers) {
    constexpr auto T = TheoremId::CompositionDegreeMultiple;
    auto d = degree_multiple_data(g, layers);
    if (!is_magic_composition_degree_multiple(g, layers)) violate(T, "deg_G(x) ≡ 0 mod o(g) for every vertex of G");
    auto [prod, l] = layered(g, layers, d.grp);
    return certify(T, prod.graph, std::move(l), d.mu, prod.map);
}

Construction label_cartesian(const Certificate& gcert, const Certificate& hcert) {
    constexpr auto T = TheoremId::Cartesian;
    const auto& G = gcert.graph();
    const auto& H = hcert.graph();
    const auto t = as_int(G.order() + H.order());
    const auto grp = gcert.group().times(hcert.group());
    auto prod = cartesian(G, H);
    Labeling<FiniteAbelianGroup> l{grp, {}};
    for (Vertex x = 0; x < G.order(); ++x)
        for (Vertex y = 0; y < H.order(); ++y) l.values.push_back(grp.pair(gcert.labels()[x], hcert.labels()[y]));
    auto claimed = grp.pair(gcert.group().scale(t, gcert.mu()), hcert.group().scale(t, hcert.mu()));
    return certify(T, prod.graph, std::move(l), claimed, prod.map);
}

}  // namespace gvm
