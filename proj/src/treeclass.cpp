#include "gvm/treeclass.hpp"

#include <algorithm>
#include <stdexcept>
#include <utility>

namespace gvm {

std::string to_string(Verdict v) {
    switch (v) {
        case Verdict::Magic: return "magic";
        case Verdict::NotMagic: return "not-magic";
        case Verdict::Unsupported: return "unsupported";
    }
    return "?";
}

namespace {

struct Shape {
    VertexPartition p;
    std::vector<Vertex> centers;
};

Shape shape(const Graph& t, std::size_t diameter) {
    auto m = tree_metrics(t);
    if (!m.is_tree) throw std::invalid_argument("classify: the graph is not a tree");
    if (m.diameter != diameter)
        throw std::invalid_argument("classify: expected diameter " + std::to_string(diameter) + ", got " +
                                    std::to_string(m.diameter));
    return {classify_vertices(t), m.centers};
}

std::string vname(Vertex v) { return "vertex " + std::to_string(v); }

template <AbelianGroup G>
using Fixed = std::vector<std::pair<Vertex, typename G::Element>>;

// Supports get g, the listed vertices their fixed labels, and every pendant
// block is filled so its support weighs g. Nullopt when a weak support's
// pendant would need the zero label.
template <AbelianGroup G>
std::optional<MagicCertificate<G>> fill_tree(const Graph& t, const VertexPartition& p, const G& grp,
                                             const typename G::Element& g, const Fixed<G>& fixed) {
    std::vector<std::optional<typename G::Element>> l(t.order());
    for (auto v : p.supports()) l[v] = g;
    for (auto& [v, a] : fixed) l[v] = a;
    for (auto v : p.non_pendants())
        if (!l[v]) throw std::logic_error("tree witness: " + vname(v) + " has no label");
    for (auto y : p.supports()) {
        auto s = g;
        for (auto u : t.neighbors(y))
            if (p.classes[u] != VertexClass::Pendant) s = grp.sub(s, *l[u]);
        auto pend = p.pendants_of(t, y);
        if (pend.size() == 1) {
            if (grp.is_zero(s)) return std::nullopt;
            l[pend[0]] = s;
        } else {
            auto parts = decompose_nonzero_sum(grp, s, pend.size());
            for (std::size_t i = 0; i < pend.size(); ++i) l[pend[i]] = parts[i];
        }
    }
    Labeling<G> lab{grp, {}};
    for (auto& a : l) lab.values.push_back(*a);
    auto r = verify_magic(t, std::move(lab));
    if (!is_magic(r)) throw std::logic_error("tree witness failed verification: " +
                                             std::get<VerifyFailure<G>>(r).describe(grp));
    return std::get<MagicCertificate<G>>(std::move(r));
}

template <AbelianGroup G>
std::vector<typename G::Element> free_choices(const G& grp) {
    if constexpr (std::is_same_v<G, FiniteAbelianGroup>)
        return grp.nonzero_elements();
    else {
        auto out = grp.candidates(4);
        for (auto& a : grp.torsion().nonzero_elements()) out.push_back(grp.make(0, a));
        return out;
    }
}

// As fill_tree, trying each nonzero label in turn for `free`.
template <AbelianGroup G>
std::optional<MagicCertificate<G>> fill_with_free(const Graph& t, const VertexPartition& p, const G& grp,
                                                  const typename G::Element& g, Vertex free) {
    for (auto& h : free_choices(grp))
        if (auto c = fill_tree<G>(t, p, grp, g, {{free, h}})) return c;
    return std::nullopt;
}

ClassificationResult not_magic(std::string clause_note) {
    return {Verdict::NotMagic, std::move(clause_note), "none", {}};
}

ClassificationResult unsupported(std::string why) { return {Verdict::Unsupported, std::move(why), "none", {}}; }

// `build` receives the carrier group and element and returns an optional
// certificate; an empty result for a Magic verdict is a logic error.
template <class Build>
ClassificationResult magic(const RealizedCarrier& carrier, std::string criterion, std::string clause, Build&& build) {
    ClassificationResult r{Verdict::Magic, std::move(criterion), std::move(clause), {}};
    std::visit(
        [&](const auto& rc) {
            auto c = build(rc.group, rc.element);
            if (!c) throw std::logic_error("classify: no witness for a magic verdict (" + r.criterion + ")");
            r.witness = std::move(*c);
        },
        carrier);
    return r;
}

RealizedCarrier any_carrier(const GroupDescriptor& d) {
    switch (d.kind()) {
        case DescriptorKind::Finite: {
            const auto& grp = *d.finite_group();
            return RealizedFinite{grp, grp.candidates(1).at(0)};
        }
        case DescriptorKind::TorsionFree:
        case DescriptorKind::Mixed: return realize_witness_group(d, Exponent::infinite());
        case DescriptorKind::InfiniteTorsion: {
            auto e = d.exponent();
            return realize_witness_group(d, Exponent::finite(e.value ? *e.value : 3));
        }
    }
    throw std::logic_error("unknown descriptor");
}

std::uint64_t torsion_exponent(const GroupDescriptor& d) { return d.torsion_part()->exponent(); }

std::uint64_t as_u64(std::size_t x) { return static_cast<std::uint64_t>(x); }

}  // namespace

ClassificationResult classify_diam4(const Graph& t, const GroupDescriptor& d) {
    auto [p, centers] = shape(t, 4);
    if (d.kind() == DescriptorKind::Finite && !d.finite_group()->has_at_least(3))
        throw std::invalid_argument("classify_diam4: finite groups need at least 3 elements");
    const auto vc = centers.at(0);
    const auto cls = p.classes[vc];
    const auto deg = t.degree(vc);
    const auto kind = d.kind();
    const std::string tag = "diam4 " + d.spec() + ": ";

    std::optional<Vertex> weak_other;
    for (auto v : p.non_pendants())
        if (v != vc && p.classes[v] != VertexClass::StrongSupport) {
            weak_other = v;
            break;
        }

    auto fill = [&](const auto& grp, const auto& g) {
        using G = std::decay_t<decltype(grp)>;
        return fill_tree<G>(t, p, grp, g, {});
    };
    auto fill_free = [&](const auto& grp, const auto& g) {
        using G = std::decay_t<decltype(grp)>;
        return fill_with_free<G>(t, p, grp, g, vc);
    };

    if (cls == VertexClass::StrongSupport) {
        if (weak_other)
            return not_magic(tag + "v_c is a strong support but " + vname(*weak_other) +
                             " is a weak support whose pendant would be forced to 0");
        return magic(any_carrier(d), tag + "(i) every non-pendant vertex is a strong support", "i", fill);
    }

    if (cls == VertexClass::WeakSupport) {
        if (weak_other)
            return not_magic(tag + "v_c is a weak support but " + vname(*weak_other) +
                             " is a weak support whose pendant would be forced to 0");
        const auto k = as_u64(deg - 2);
        const std::string what = "(ii) v_c is a weak support, the other non-pendants are strong supports, deg(v_c) = " +
                                 std::to_string(deg);
        switch (kind) {
            case DescriptorKind::Finite: {
                const auto& grp = *d.finite_group();
                const auto e = grp.exponent();
                if (k % e == 0) return not_magic(tag + "v_c is a weak support with deg(v_c) ≡ 2 mod e = " + std::to_string(e));
                for (auto& g : grp.nonzero_elements())
                    if (!grp.is_zero(grp.scale(static_cast<std::int64_t>(k), g)))
                        return magic(RealizedFinite{grp, g}, tag + what + " ≢ 2 mod e = " + std::to_string(e), "ii", fill);
                throw std::logic_error("classify_diam4: exponent bookkeeping");
            }
            case DescriptorKind::InfiniteTorsion: {
                auto e = d.exponent();
                if (e.value) {
                    if (k % *e.value == 0)
                        return not_magic(tag + "v_c is a weak support with deg(v_c) ≡ 2 mod e = " + e.to_string());
                    return magic(realize_witness_group(d, e), tag + what + " ≢ 2 mod e = " + e.to_string(), "ii", fill);
                }
                std::uint64_t n = 3;
                while (k % n == 0) ++n;
                return magic(realize_witness_group(d, Exponent::finite(n)), tag + what + ", g of order " +
                                                                               std::to_string(n),
                             "ii", fill);
            }
            case DescriptorKind::TorsionFree:
            case DescriptorKind::Mixed:
                return magic(realize_witness_group(d, Exponent::infinite()), tag + what + ", g of infinite order", "ii",
                             fill);
        }
    }

    // v_c is neutral.
    const auto k = as_u64(deg - 1);
    std::uint64_t m = 1;
    std::string gcd_of;
    switch (kind) {
        case DescriptorKind::Finite:
            m = gcd_u64(k, d.finite_group()->order());
            gcd_of = "gcd(deg(v_c) − 1, |Γ|)";
            break;
        case DescriptorKind::InfiniteTorsion: {
            auto e = d.exponent();
            m = e.value ? gcd_u64(k, *e.value) : k;
            gcd_of = "gcd(deg(v_c) − 1, e(Γ))";
            break;
        }
        case DescriptorKind::TorsionFree:
            return not_magic(tag + "v_c is neutral, so (deg(v_c) − 1)g = 0 forces g to be torsion");
        case DescriptorKind::Mixed:
            m = gcd_u64(k, torsion_exponent(d));
            gcd_of = "gcd(deg(v_c) − 1, e(T))";
            break;
    }
    const std::string nums = gcd_of + " = gcd(" + std::to_string(k) + ", ·) = " + std::to_string(m);
    if (m == 1) return not_magic(tag + "v_c is neutral and " + nums);
    const auto prime = *smallest_prime_factor(m);
    return magic(realize_witness_group(d, Exponent::finite(prime)),
                 tag + "(iii) v_c is neutral and " + nums + ", g of order " + std::to_string(prime), "iii", fill_free);
}

ClassificationResult classify_diam5(const Graph& t, const GroupDescriptor& d) {
    auto [p, centers] = shape(t, 5);
    auto c1 = centers.at(0), c2 = centers.at(1);
    if (p.classes[c1] == VertexClass::Neutral && p.classes[c2] != VertexClass::Neutral) std::swap(c1, c2);
    const bool s1 = is_support(p.classes[c1]), s2 = is_support(p.classes[c2]);
    const std::string tag = "diam5 " + d.spec() + ": ";
    const auto kind = d.kind();

    auto fill_free = [&](const auto& grp, const auto& g) {
        using G = std::decay_t<decltype(grp)>;
        return fill_with_free<G>(t, p, grp, g, c2);
    };

    std::optional<Vertex> weak_next_to_c1;
    for (auto u : t.neighbors(c1))
        if (u != c2 && p.classes[u] == VertexClass::WeakSupport) {
            weak_next_to_c1 = u;
            break;
        }

    if (s1 && !s2) {
        const auto k = as_u64(t.degree(c2) - 1);
        std::uint64_t m = 1;
        std::string gcd_of;
        switch (kind) {
            case DescriptorKind::Finite: {
                const auto& grp = *d.finite_group();
                if (!grp.has_at_least(4))
                    return unsupported(tag + "support/neutral centers over a group with fewer than 4 elements");
                m = gcd_u64(k, grp.order());
                gcd_of = "gcd(deg(v_c2) − 1, |Γ|)";
                break;
            }
            case DescriptorKind::InfiniteTorsion:
                return unsupported(tag + "infinite torsion groups are not characterized for diameter 5");
            case DescriptorKind::TorsionFree:
                return not_magic(tag + "v_c1 is a support and v_c2 is neutral, so (deg(v_c2) − 1)g = 0 forces g to be torsion");
            case DescriptorKind::Mixed:
                m = gcd_u64(k, torsion_exponent(d));
                gcd_of = "gcd(deg(v_c2) − 1, e(T))";
                break;
        }
        const std::string nums = gcd_of + " = gcd(" + std::to_string(k) + ", ·) = " + std::to_string(m);
        if (weak_next_to_c1)
            return not_magic(tag + "v_c1 is adjacent to the weak support " + vname(*weak_next_to_c1) +
                             ", whose pendant would be forced to 0 (" + nums + ")");
        if (m == 1) return not_magic(tag + "v_c2 is neutral and " + nums);
        const auto prime = *smallest_prime_factor(m);
        return magic(realize_witness_group(d, Exponent::finite(prime)),
                     tag + "v_c1 is not adjacent to a weak support and " + nums + ", g of order " +
                         std::to_string(prime),
                     "i+ii", fill_free);
    }

    if (kind == DescriptorKind::Finite)
        return unsupported(tag + "finite groups are characterized only for a support center next to a neutral center");
    if (kind == DescriptorKind::InfiniteTorsion)
        return unsupported(tag + "infinite torsion groups are not characterized for diameter 5");

    const auto carrier = realize_witness_group(d, Exponent::infinite());
    if (!s1 && !s2) {
        for (auto c : {c1, c2})
            if (t.degree(c) == 2) return not_magic(tag + "both centers are neutral and " + vname(c) + " has degree 2");
        const auto d1 = static_cast<std::int64_t>(t.degree(c1)), d2 = static_cast<std::int64_t>(t.degree(c2));
        return magic(carrier, tag + "both centers are neutral with degrees " + std::to_string(d1) + " and " +
                                  std::to_string(d2) + ", neither equal to 2",
                     "i", [&](const auto& grp, const auto& g) {
                         using G = std::decay_t<decltype(grp)>;
                         return fill_tree<G>(t, p, grp, g, {{c1, grp.scale(2 - d2, g)}, {c2, grp.scale(2 - d1, g)}});
                     });
    }

    for (Vertex v = 0; v < t.order(); ++v)
        if (t.degree(v) == 2) return not_magic(tag + "both centers are supports and " + vname(v) + " has degree 2");
    return magic(carrier, tag + "both centers are supports and no vertex has degree 2", "i",
                 [&](const auto& grp, const auto& g) {
                     using G = std::decay_t<decltype(grp)>;
                     return fill_tree<G>(t, p, grp, g, {});
                 });
}

ClassificationResult classify_tree(const Graph& tree, const GroupDescriptor& d) {
    auto m = tree_metrics(tree);
    if (m.diameter == 4) return classify_diam4(tree, d);
    if (m.diameter == 5) return classify_diam5(tree, d);
    throw std::invalid_argument("classify: only trees of diameter 4 or 5 are characterized (diameter " +
                                std::to_string(m.diameter) + ")");
}

TreeWitness witness_realize(const Graph& tree, const ClassificationResult& result) {
    if (result.verdict != Verdict::Magic || !result.has_witness())
        throw std::invalid_argument("witness_realize: the verdict is " + to_string(result.verdict));
    TreeWitness out;
    std::visit(
        [&](const auto& c) {
            using C = std::decay_t<decltype(c)>;
            if constexpr (!std::is_same_v<C, std::monostate>) {
                auto r = verify_magic(tree, c.labeling());
                if (!is_magic(r)) throw std::invalid_argument("witness_realize: the witness does not fit this tree");
                out = std::get<C>(std::move(r));
            }
        },
        result.witness);
    return out;
}

}  // namespace gvm
