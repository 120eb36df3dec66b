#pragma once

// Constructive labelers. Each checks its hypotheses, builds a labeling and
// hands it to verify_magic; nothing is returned unverified.

#include "gvm/algebra.hpp"
#include "gvm/graph.hpp"
#include "gvm/labeling.hpp"
#include "gvm/products.hpp"

#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace gvm {

enum class TheoremId {
    AllStrongSupport,
    AllWeakSupport,
    GeneralizedCoronaEmpty,
    StrongOrNeutral,
    OneNeutral,
    TwoNeutral,
    NeutralInducedLift,
    IndependentNeutrals,
    SubdividePeriod4,
    SubdivideHalfsum,
    SubdivideAttach,
    RegularInvolution,
    CoronaProductGroups,
    CoronaComplete,
    CoronaSelf,
    GencoronaRegulars,
    CompositionP2,
    CompositionRegular,
    CompositionZeroSum,
    CompositionDegreeMultiple,
    Cartesian,
};

std::string to_string(TheoremId id);
std::optional<TheoremId> theorem_from_string(std::string_view name);
const std::vector<TheoremId>& all_theorems();

class HypothesisViolation : public std::invalid_argument {
public:
    HypothesisViolation(TheoremId theorem, std::string hypothesis);
    TheoremId theorem() const noexcept { return theorem_; }
    const std::string& hypothesis() const noexcept { return hypothesis_; }

private:
    TheoremId theorem_;
    std::string hypothesis_;
};

/// The construction ran on valid input but the verifier rejected the
/// result, or found a magic constant other than the one claimed.
class StatementDiscrepancy : public std::runtime_error {
public:
    StatementDiscrepancy(TheoremId theorem, std::string detail);
    TheoremId theorem() const noexcept { return theorem_; }
    const std::string& detail() const noexcept { return detail_; }

private:
    TheoremId theorem_;
    std::string detail_;
};

using Certificate = MagicCertificate<FiniteAbelianGroup>;

struct Construction {
    TheoremId theorem;
    Certificate certificate;
    std::optional<ProductIndexMap> map;

    const Graph& graph() const noexcept { return certificate.graph(); }
};

// --- graphs with pendants ---------------------------------------------------

/// Every non-pendant is a strong support. μ = g.
Construction label_all_strong_support(const Graph& g, const FiniteAbelianGroup& grp, const GroupElement& h);

/// Every non-pendant is a weak support and deg(x) ≢ 2 mod o(g). μ = g.
Construction label_all_weak_support(const Graph& g, const FiniteAbelianGroup& grp, const GroupElement& h);

/// Builds G ∘̃ (K̄_{m_1}, …, K̄_{m_n}) with every m_i ≥ 2. Vertices of G
/// may have any degree: every base vertex becomes a strong support. μ = g.
Construction label_generalized_corona_empty(const Graph& g, const std::vector<std::size_t>& m,
                                            const FiniteAbelianGroup& grp, const GroupElement& h);

/// Non-pendants are strong supports or neutrals, every neutral has
/// deg ≡ 1 mod o(g). μ = g.
Construction label_strong_or_neutral(const Graph& g, const FiniteAbelianGroup& grp, const GroupElement& h);

/// Exactly one neutral x. Magic with constant g iff deg(x) ≡ 1 mod o(g) and
/// some nonzero label of x leaves every weak-support pendant nonzero.
bool is_magic_one_neutral(const Graph& g, const FiniteAbelianGroup& grp, const GroupElement& h);
Construction label_one_neutral(const Graph& g, const FiniteAbelianGroup& grp, const GroupElement& h);

/// Exactly two neutrals. μ = g.
Construction label_two_neutral(const Graph& g, const FiniteAbelianGroup& grp, const GroupElement& h);

/// Lifts a certificate of the induced subgraph on the neutrals (vertex i of
/// `inner` is the i-th neutral in increasing order). μ = g.
Construction label_neutral_induced_lift(const Graph& g, const Certificate& inner);

/// The neutrals form an independent set. μ = g.
Construction label_independent_neutrals(const Graph& g, const FiniteAbelianGroup& grp, const GroupElement& h);

// --- subdivisions ------------------------------------------------------------

/// All vertices neutral, ℓ(u) = ℓ(v) ≠ μ, n ≡ 0 mod 4.
Construction subdivide_relabel_period4(const Certificate& c, Edge e, std::size_t n);
/// ℓ(u) = ℓ(v) and 2ℓ(u) = μ, any n ≥ 1.
Construction subdivide_relabel_halfsum(const Certificate& c, Edge e, std::size_t n);
/// ℓ(u) = ℓ(v) = μ; t_i ≥ 2 pendants attached at each new vertex.
Construction subdivide_attach_relabel(const Certificate& c, Edge e, const std::vector<std::size_t>& t);

// --- products ------------------------------------------------------------------

/// Constant label on a graph whose degrees all share a parity; `involution`
/// defaults to the first involution of the group.
Construction label_regular_involution(const Graph& g, const FiniteAbelianGroup& grp,
                                      std::optional<GroupElement> involution = std::nullopt);

/// G-certificate with every label equal to μ, H-certificate with Σℓ = μ.
/// Result over Γ × Γ†, μ = (g, g†).
Construction label_corona_product_groups(const Certificate& gcert, const Certificate& hcert);

/// G ⊙ K_m for r-regular G. μ = (r − m(r − 1))g₁.
Construction label_corona_complete(const Graph& g, std::size_t m, const FiniteAbelianGroup& grp,
                                   const GroupElement& g1);

/// G ⊙ G for r-regular G of order n ≡ 1 mod o(g). μ = (r + 1)g.
Construction label_corona_self(const Graph& g, const FiniteAbelianGroup& grp, const GroupElement& h);

/// G r-regular, every H_i regular of a common order n; read as
/// r + n ≡ r_i + 1 mod o(g) for every i. μ = (r + n)g.
Construction label_gencorona_regulars(const Graph& g, const std::vector<Graph>& hs, const FiniteAbelianGroup& grp,
                                      const GroupElement& h);
/// The congruence taken literally over all pairs (i, j), G's parameters unused.
bool gencorona_regulars_literal_condition(const std::vector<Graph>& hs, const GroupElement& h,
                                          const FiniteAbelianGroup& grp);

/// G[H] for r-regular H of order n, |Γ| = p², p | n. μ = r·g with o(g) = p.
Construction label_composition_p2(const Graph& g, const Graph& h, const FiniteAbelianGroup& grp);

/// G r-regular, layer certificates share μ = g₁ and Σℓ = g. μ = g₁ + r·g.
Construction label_composition_regular(const Graph& g, const std::vector<Certificate>& layers);

/// Any G, layer certificates share μ = g₁ and have Σℓ = 0. μ = g₁.
Construction label_composition_zero_sum(const Graph& g, const std::vector<Certificate>& layers);

/// Any G, layer certificates share μ = g and Σℓ = g. Magic with constant g
/// iff deg_G(i)·g = 0 for every vertex i of G.
bool is_magic_composition_degree_multiple(const Graph& g, const std::vector<Certificate>& layers);
Construction label_composition_degree_multiple(const Graph& g, const std::vector<Certificate>& layers);

/// (x, y) ↦ (ℓ(x), ℓ†(y)) on G □ G†, claimed μ = ((m + n)g, (m + n)g†).
/// Throws StatementDiscrepancy when the verifier disagrees with the claim.
Construction label_cartesian(const Certificate& gcert, const Certificate& hcert);

}  // namespace gvm
