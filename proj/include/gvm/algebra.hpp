#pragma once

// Finite Abelian groups as direct products of cyclic groups, the ℤ × T
// carrier used for infinite-group witnesses, and symbolic descriptors of the
// ambient group that drive theorem selection.

#include <boost/multiprecision/cpp_int.hpp>

#include <compare>
#include <concepts>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

namespace gvm {

using BigInt = boost::multiprecision::cpp_int;

/// Raised when two operands do not belong to the same group, or an element
/// is not a valid member of the group it is used with.
class GroupMismatch : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// Raised when an enumeration would exceed its element budget.
class BudgetExceeded : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

inline constexpr std::uint64_t kDefaultEnumerationBudget = std::uint64_t{1} << 22;

struct GroupElement {
    std::vector<std::int64_t> residues;

    friend bool operator==(const GroupElement&, const GroupElement&) = default;
    friend auto operator<=>(const GroupElement&, const GroupElement&) = default;
};

/// Direct product Z_{n_1} × … × Z_{n_k}; an empty modulus list is the trivial
/// group. Moduli are kept exactly as given: Z2xZ3 and Z6 are different
/// groups for arithmetic purposes.
class FiniteAbelianGroup {
public:
    using Element = GroupElement;

    FiniteAbelianGroup() = default;
    explicit FiniteAbelianGroup(std::vector<std::int64_t> moduli);

    static FiniteAbelianGroup cyclic(std::int64_t n);

    const std::vector<std::int64_t>& moduli() const noexcept { return moduli_; }
    std::size_t rank() const noexcept { return moduli_.size(); }

    std::uint64_t order() const;
    std::uint64_t exponent() const;
    bool has_at_least(std::uint64_t count) const;

    Element zero() const;
    /// Reduces each coordinate modulo its factor order.
    Element make(std::vector<std::int64_t> residues) const;
    bool contains(const Element& a) const noexcept;
    bool is_zero(const Element& a) const;

    Element add(const Element& a, const Element& b) const;
    Element neg(const Element& a) const;
    Element sub(const Element& a, const Element& b) const;
    Element scale(std::int64_t k, const Element& a) const;

    /// o(a): lcm over coordinates of n_i / gcd(n_i, a_i).
    std::uint64_t order_of(const Element& a) const;

    /// Lexicographic enumeration of residue vectors (first factor most
    /// significant).
    std::vector<Element> elements(std::uint64_t budget = kDefaultEnumerationBudget) const;
    std::vector<Element> nonzero_elements(std::uint64_t budget = kDefaultEnumerationBudget) const;
    /// Up to `limit` nonzero elements, in enumeration order.
    std::vector<Element> candidates(std::size_t limit) const;
    std::vector<Element> involutions(std::uint64_t budget = kDefaultEnumerationBudget) const;
    /// First element of order exactly `n` in enumeration order.
    std::optional<Element> first_of_order(std::uint64_t n) const;

    /// Position of `a` in the lexicographic enumeration and its inverse.
    std::uint64_t index_of(const Element& a) const;
    Element at_index(std::uint64_t index) const;

    /// Γ × Γ†, moduli concatenated.
    FiniteAbelianGroup times(const FiniteAbelianGroup& other) const;
    Element pair(const Element& left, const Element& right) const;

    std::string spec() const;
    std::string format(const Element& a) const;
    Element parse_element(std::string_view text) const;

    friend bool operator==(const FiniteAbelianGroup&, const FiniteAbelianGroup&) = default;

private:
    void require_member(const Element& a) const;

    std::vector<std::int64_t> moduli_;
};

struct MixedElement {
    BigInt free;
    GroupElement torsion;

    friend bool operator==(const MixedElement&, const MixedElement&) = default;
};

/// ℤ × T for a finite T (T trivial gives ℤ itself). Used as the concrete
/// carrier for witnesses over torsion-free and mixed groups.
class MixedGroup {
public:
    using Element = MixedElement;

    MixedGroup() = default;
    explicit MixedGroup(FiniteAbelianGroup torsion) : torsion_(std::move(torsion)) {}

    const FiniteAbelianGroup& torsion() const noexcept { return torsion_; }
    bool has_at_least(std::uint64_t) const noexcept { return true; }

    Element zero() const;
    Element make(BigInt free, GroupElement torsion) const;
    bool contains(const Element& a) const noexcept;
    bool is_zero(const Element& a) const;

    Element add(const Element& a, const Element& b) const;
    Element neg(const Element& a) const;
    Element sub(const Element& a, const Element& b) const;
    Element scale(std::int64_t k, const Element& a) const;

    /// Finite order, or nullopt for elements with a nonzero ℤ coefficient.
    std::optional<std::uint64_t> order_of(const Element& a) const;

    /// (1|0), (2|0), …: distinct nonzero elements of infinite order.
    std::vector<Element> candidates(std::size_t limit) const;

    std::string spec() const;
    std::string format(const Element& a) const;
    Element parse_element(std::string_view text) const;

    friend bool operator==(const MixedGroup&, const MixedGroup&) = default;

private:
    FiniteAbelianGroup torsion_;
};

/// The operations the labeling machinery needs from a carrier group.
template <class G>
concept AbelianGroup = requires(const G& grp, const typename G::Element& a, std::int64_t k,
                                std::size_t limit, std::string_view text) {
    { grp.zero() } -> std::same_as<typename G::Element>;
    { grp.add(a, a) } -> std::same_as<typename G::Element>;
    { grp.sub(a, a) } -> std::same_as<typename G::Element>;
    { grp.neg(a) } -> std::same_as<typename G::Element>;
    { grp.scale(k, a) } -> std::same_as<typename G::Element>;
    { grp.is_zero(a) } -> std::convertible_to<bool>;
    { grp.contains(a) } -> std::convertible_to<bool>;
    { grp.has_at_least(std::uint64_t{3}) } -> std::convertible_to<bool>;
    { grp.candidates(limit) } -> std::same_as<std::vector<typename G::Element>>;
    { grp.format(a) } -> std::same_as<std::string>;
    { grp.parse_element(text) } -> std::same_as<typename G::Element>;
    { grp.spec() } -> std::same_as<std::string>;
};

static_assert(AbelianGroup<FiniteAbelianGroup>);
static_assert(AbelianGroup<MixedGroup>);

/// e(Γ): a positive integer, or infinite.
struct Exponent {
    std::optional<std::uint64_t> value;

    static Exponent finite(std::uint64_t v) { return Exponent{v}; }
    static Exponent infinite() { return Exponent{std::nullopt}; }
    bool is_infinite() const noexcept { return !value.has_value(); }
    std::string to_string() const;

    friend bool operator==(const Exponent&, const Exponent&) = default;
};

struct FiniteDescriptor {
    FiniteAbelianGroup group;
};
/// An infinite torsion group of the given exponent. An infinite exponent is
/// read as a group containing cyclic subgroups of every finite order (ℚ/ℤ).
struct InfiniteTorsionDescriptor {
    Exponent exponent;
};
struct TorsionFreeDescriptor {};
/// An infinite group whose torsion subgroup is the given nontrivial finite
/// group; realized concretely as ℤ × T.
struct MixedDescriptor {
    FiniteAbelianGroup torsion;
};

enum class DescriptorKind { Finite, InfiniteTorsion, TorsionFree, Mixed };

class GroupDescriptor {
public:
    using Variant = std::variant<FiniteDescriptor, InfiniteTorsionDescriptor,
                                 TorsionFreeDescriptor, MixedDescriptor>;

    static GroupDescriptor finite(FiniteAbelianGroup group);
    static GroupDescriptor infinite_torsion(Exponent exponent);
    static GroupDescriptor torsion_free();
    static GroupDescriptor mixed(FiniteAbelianGroup torsion);

    /// Group spec grammar: Z<k> factors joined by 'x' (Z4xZ2), "1" for the
    /// trivial group, "Z+" (torsion-free), "Z+Z3" or "Z+xZ3" (ℤ × Z3),
    /// T<e> (infinite torsion of exponent e) and Tinf.
    static GroupDescriptor parse(std::string_view spec);

    DescriptorKind kind() const noexcept;
    const Variant& variant() const noexcept { return v_; }
    /// Finite group for Finite, torsion part for Mixed.
    const FiniteAbelianGroup* finite_group() const noexcept;
    const FiniteAbelianGroup* torsion_part() const noexcept;

    Exponent exponent() const;
    std::string spec() const;

private:
    explicit GroupDescriptor(Variant v) : v_(std::move(v)) {}
    Variant v_;
};

/// Parses a finite group spec; throws std::invalid_argument for anything
/// that is not a finite product of cyclic factors.
FiniteAbelianGroup parse_finite_group(std::string_view spec);

struct RealizedFinite {
    FiniteAbelianGroup group;
    GroupElement element;
};
struct RealizedMixed {
    MixedGroup group;
    MixedElement element;
};
using RealizedCarrier = std::variant<RealizedFinite, RealizedMixed>;

/// Picks a concrete carrier group for witness labels under `descriptor`,
/// together with an element of order `needed` (Exponent::infinite() asks for
/// a non-torsion element). Throws std::invalid_argument when the descriptor
/// cannot supply such an element.
RealizedCarrier realize_witness_group(const GroupDescriptor& descriptor, Exponent needed);

std::uint64_t gcd_u64(std::uint64_t a, std::uint64_t b);
std::uint64_t lcm_u64(std::uint64_t a, std::uint64_t b);
std::optional<std::uint64_t> smallest_prime_factor(std::uint64_t n);

/// g = g_1 + … + g_n with every g_i nonzero. For n = 2 the first nonzero a
/// with g − a ≠ 0 is taken; for n > 2, n − 2 copies of the first nonzero
/// element h precede a 2-decomposition of g − (n − 2)h.
template <AbelianGroup G>
std::vector<typename G::Element> decompose_nonzero_sum(const G& group,
                                                       const typename G::Element& g,
                                                       std::size_t n) {
    if (n == 0) throw std::invalid_argument("decompose_nonzero_sum: n must be at least 1");
    if (!group.contains(g)) throw GroupMismatch("decompose_nonzero_sum: element not in group");
    if (n == 1) {
        if (group.is_zero(g))
            throw std::invalid_argument("decompose_nonzero_sum: zero cannot be a single nonzero term");
        return {g};
    }
    if (!group.has_at_least(3))
        throw std::invalid_argument("decompose_nonzero_sum: needs a group with at least 3 elements");

    const auto firsts = group.candidates(2);
    const auto& h = firsts[0];
    std::vector<typename G::Element> out(n - 2, h);
    auto rest = group.sub(g, group.scale(static_cast<std::int64_t>(n - 2), h));
    const auto& a = group.is_zero(group.sub(rest, firsts[0])) ? firsts[1] : firsts[0];
    out.push_back(a);
    out.push_back(group.sub(rest, a));
    return out;
}

}  // namespace gvm
