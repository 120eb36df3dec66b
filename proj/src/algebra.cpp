#include "gvm/algebra.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <numeric>
#include <sstream>

namespace gvm {

namespace {

std::int64_t mod(std::int64_t a, std::int64_t n) {
    std::int64_t r = a % n;
    return r < 0 ? r + n : r;
}

std::string_view trim(std::string_view s) {
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
    return s;
}

std::int64_t parse_int(std::string_view s, const char* what) {
    s = trim(s);
    if (!s.empty() && s.front() == '+') s.remove_prefix(1);
    std::int64_t v = 0;
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (s.empty() || ec != std::errc{} || ptr != s.data() + s.size())
        throw std::invalid_argument(std::string(what) + ": not an integer: '" + std::string(s) + "'");
    return v;
}

std::vector<std::string_view> split(std::string_view s, char sep) {
    std::vector<std::string_view> out;
    std::size_t start = 0;
    for (std::size_t i = 0; i <= s.size(); ++i) {
        if (i == s.size() || s[i] == sep) {
            out.push_back(s.substr(start, i - start));
            start = i + 1;
        }
    }
    return out;
}

std::uint64_t checked_mul(std::uint64_t a, std::uint64_t b) {
    std::uint64_t r = 0;
    if (__builtin_mul_overflow(a, b, &r)) throw std::overflow_error("group order overflows 64 bits");
    return r;
}

std::string join_residues(const std::vector<std::int64_t>& r) {
    std::string out;
    for (std::size_t i = 0; i < r.size(); ++i) {
        if (i) out += ',';
        out += std::to_string(r[i]);
    }
    return out;
}

}  // namespace

std::uint64_t gcd_u64(std::uint64_t a, std::uint64_t b) { return std::gcd(a, b); }

std::uint64_t lcm_u64(std::uint64_t a, std::uint64_t b) {
    if (a == 0 || b == 0) return 0;
    return checked_mul(a / std::gcd(a, b), b);
}

std::optional<std::uint64_t> smallest_prime_factor(std::uint64_t n) {
    if (n < 2) return std::nullopt;
    for (std::uint64_t p = 2; p * p <= n; ++p)
        if (n % p == 0) return p;
    return n;
}

// ---------------------------------------------------------------------------
// FiniteAbelianGroup

FiniteAbelianGroup::FiniteAbelianGroup(std::vector<std::int64_t> moduli) : moduli_(std::move(moduli)) {
    for (auto n : moduli_)
        if (n < 2) throw std::invalid_argument("cyclic factor order must be at least 2, got " + std::to_string(n));
    (void)order();
}

FiniteAbelianGroup FiniteAbelianGroup::cyclic(std::int64_t n) { return FiniteAbelianGroup({n}); }

std::uint64_t FiniteAbelianGroup::order() const {
    std::uint64_t o = 1;
    for (auto n : moduli_) o = checked_mul(o, static_cast<std::uint64_t>(n));
    return o;
}

std::uint64_t FiniteAbelianGroup::exponent() const {
    std::uint64_t e = 1;
    for (auto n : moduli_) e = lcm_u64(e, static_cast<std::uint64_t>(n));
    return e;
}

bool FiniteAbelianGroup::has_at_least(std::uint64_t count) const { return order() >= count; }

GroupElement FiniteAbelianGroup::zero() const { return GroupElement{std::vector<std::int64_t>(moduli_.size(), 0)}; }

GroupElement FiniteAbelianGroup::make(std::vector<std::int64_t> residues) const {
    if (residues.size() != moduli_.size())
        throw GroupMismatch("element has " + std::to_string(residues.size()) + " coordinates, group " + spec() +
                            " has " + std::to_string(moduli_.size()));
    for (std::size_t i = 0; i < residues.size(); ++i) residues[i] = mod(residues[i], moduli_[i]);
    return GroupElement{std::move(residues)};
}

bool FiniteAbelianGroup::contains(const GroupElement& a) const noexcept {
    if (a.residues.size() != moduli_.size()) return false;
    for (std::size_t i = 0; i < moduli_.size(); ++i)
        if (a.residues[i] < 0 || a.residues[i] >= moduli_[i]) return false;
    return true;
}

void FiniteAbelianGroup::require_member(const GroupElement& a) const {
    if (!contains(a)) throw GroupMismatch("element " + format(a) + " is not a member of " + spec());
}

bool FiniteAbelianGroup::is_zero(const GroupElement& a) const {
    require_member(a);
    return std::all_of(a.residues.begin(), a.residues.end(), [](std::int64_t r) { return r == 0; });
}

GroupElement FiniteAbelianGroup::add(const GroupElement& a, const GroupElement& b) const {
    require_member(a);
    require_member(b);
    GroupElement out{a.residues};
    for (std::size_t i = 0; i < moduli_.size(); ++i) {
        out.residues[i] += b.residues[i];
        if (out.residues[i] >= moduli_[i]) out.residues[i] -= moduli_[i];
    }
    return out;
}

GroupElement FiniteAbelianGroup::neg(const GroupElement& a) const {
    require_member(a);
    GroupElement out{a.residues};
    for (std::size_t i = 0; i < moduli_.size(); ++i)
        if (out.residues[i] != 0) out.residues[i] = moduli_[i] - out.residues[i];
    return out;
}

GroupElement FiniteAbelianGroup::sub(const GroupElement& a, const GroupElement& b) const { return add(a, neg(b)); }

GroupElement FiniteAbelianGroup::scale(std::int64_t k, const GroupElement& a) const {
    require_member(a);
    GroupElement out{a.residues};
    for (std::size_t i = 0; i < moduli_.size(); ++i) {
        const auto n = moduli_[i];
        // (k mod n)(a mod n) < n² fits comfortably for n < 2^31
        out.residues[i] = static_cast<std::int64_t>((static_cast<__int128>(mod(k, n)) * a.residues[i]) % n);
    }
    return out;
}

std::uint64_t FiniteAbelianGroup::order_of(const GroupElement& a) const {
    require_member(a);
    std::uint64_t o = 1;
    for (std::size_t i = 0; i < moduli_.size(); ++i) {
        const auto n = static_cast<std::uint64_t>(moduli_[i]);
        o = lcm_u64(o, n / std::gcd(n, static_cast<std::uint64_t>(a.residues[i])));
    }
    return o;
}

std::vector<GroupElement> FiniteAbelianGroup::elements(std::uint64_t budget) const {
    const auto total = order();
    if (total > budget)
        throw BudgetExceeded("enumerating " + spec() + " needs " + std::to_string(total) +
                             " elements, budget is " + std::to_string(budget));
    std::vector<GroupElement> out;
    out.reserve(total);
    GroupElement cur = zero();
    for (std::uint64_t i = 0; i < total; ++i) {
        out.push_back(cur);
        for (std::size_t k = moduli_.size(); k-- > 0;) {
            if (++cur.residues[k] < moduli_[k]) break;
            cur.residues[k] = 0;
        }
    }
    return out;
}

std::vector<GroupElement> FiniteAbelianGroup::nonzero_elements(std::uint64_t budget) const {
    auto all = elements(budget);
    all.erase(all.begin());
    return all;
}

std::vector<GroupElement> FiniteAbelianGroup::candidates(std::size_t limit) const {
    const auto total = order();
    std::vector<GroupElement> out;
    for (std::uint64_t i = 1; i < total && out.size() < limit; ++i) out.push_back(at_index(i));
    return out;
}

std::vector<GroupElement> FiniteAbelianGroup::involutions(std::uint64_t budget) const {
    std::vector<GroupElement> out;
    for (auto& a : nonzero_elements(budget))
        if (is_zero(add(a, a))) out.push_back(a);
    return out;
}

std::optional<GroupElement> FiniteAbelianGroup::first_of_order(std::uint64_t n) const {
    if (n == 0 || exponent() % n != 0) return std::nullopt;
    const auto total = order();
    for (std::uint64_t i = 0; i < total; ++i) {
        auto a = at_index(i);
        if (order_of(a) == n) return a;
    }
    return std::nullopt;
}

std::uint64_t FiniteAbelianGroup::index_of(const GroupElement& a) const {
    require_member(a);
    std::uint64_t idx = 0;
    for (std::size_t i = 0; i < moduli_.size(); ++i)
        idx = idx * static_cast<std::uint64_t>(moduli_[i]) + static_cast<std::uint64_t>(a.residues[i]);
    return idx;
}

GroupElement FiniteAbelianGroup::at_index(std::uint64_t index) const {
    if (index >= order()) throw std::out_of_range("element index out of range for " + spec());
    GroupElement out = zero();
    for (std::size_t k = moduli_.size(); k-- > 0;) {
        const auto n = static_cast<std::uint64_t>(moduli_[k]);
        out.residues[k] = static_cast<std::int64_t>(index % n);
        index /= n;
    }
    return out;
}

FiniteAbelianGroup FiniteAbelianGroup::times(const FiniteAbelianGroup& other) const {
    auto m = moduli_;
    m.insert(m.end(), other.moduli_.begin(), other.moduli_.end());
    return FiniteAbelianGroup(std::move(m));
}

GroupElement FiniteAbelianGroup::pair(const GroupElement& left, const GroupElement& right) const {
    if (left.residues.size() > moduli_.size())
        throw GroupMismatch("pair: left component does not fit " + spec());
    GroupElement out{left.residues};
    out.residues.insert(out.residues.end(), right.residues.begin(), right.residues.end());
    require_member(out);
    return out;
}

std::string FiniteAbelianGroup::spec() const {
    if (moduli_.empty()) return "1";
    std::string out;
    for (std::size_t i = 0; i < moduli_.size(); ++i) {
        if (i) out += 'x';
        out += 'Z' + std::to_string(moduli_[i]);
    }
    return out;
}

std::string FiniteAbelianGroup::format(const GroupElement& a) const { return "(" + join_residues(a.residues) + ")"; }

GroupElement FiniteAbelianGroup::parse_element(std::string_view text) const {
    auto s = trim(text);
    if (!s.empty() && s.front() == '(') {
        if (s.back() != ')') throw std::invalid_argument("unbalanced parentheses in element '" + std::string(text) + "'");
        s = trim(s.substr(1, s.size() - 2));
    }
    GroupElement out;
    if (!s.empty())
        for (auto part : split(s, ',')) out.residues.push_back(parse_int(part, "element"));
    if (out.residues.size() != moduli_.size())
        throw GroupMismatch("element '" + std::string(text) + "' has " + std::to_string(out.residues.size()) +
                            " coordinates, group " + spec() + " has " + std::to_string(moduli_.size()));
    if (!contains(out)) throw GroupMismatch("element '" + std::string(text) + "' is out of range for " + spec());
    return out;
}

// ---------------------------------------------------------------------------
// MixedGroup

MixedElement MixedGroup::zero() const { return MixedElement{0, torsion_.zero()}; }

MixedElement MixedGroup::make(BigInt free, GroupElement torsion) const {
    if (!torsion_.contains(torsion)) torsion = torsion_.make(torsion.residues);
    return MixedElement{std::move(free), std::move(torsion)};
}

bool MixedGroup::contains(const MixedElement& a) const noexcept { return torsion_.contains(a.torsion); }

bool MixedGroup::is_zero(const MixedElement& a) const { return a.free == 0 && torsion_.is_zero(a.torsion); }

MixedElement MixedGroup::add(const MixedElement& a, const MixedElement& b) const {
    return MixedElement{a.free + b.free, torsion_.add(a.torsion, b.torsion)};
}

MixedElement MixedGroup::neg(const MixedElement& a) const { return MixedElement{-a.free, torsion_.neg(a.torsion)}; }

MixedElement MixedGroup::sub(const MixedElement& a, const MixedElement& b) const { return add(a, neg(b)); }

MixedElement MixedGroup::scale(std::int64_t k, const MixedElement& a) const {
    return MixedElement{a.free * k, torsion_.scale(k, a.torsion)};
}

std::optional<std::uint64_t> MixedGroup::order_of(const MixedElement& a) const {
    if (a.free != 0) return std::nullopt;
    return torsion_.order_of(a.torsion);
}

std::vector<MixedElement> MixedGroup::candidates(std::size_t limit) const {
    std::vector<MixedElement> out;
    for (std::size_t i = 1; i <= limit; ++i) out.push_back(MixedElement{BigInt(i), torsion_.zero()});
    return out;
}

std::string MixedGroup::spec() const {
    if (torsion_.rank() == 0) return "Z+";
    return "Z+" + torsion_.spec();
}

std::string MixedGroup::format(const MixedElement& a) const {
    return "(" + a.free.str() + " |" + (a.torsion.residues.empty() ? "" : " " + join_residues(a.torsion.residues)) + ")";
}

MixedElement MixedGroup::parse_element(std::string_view text) const {
    auto s = trim(text);
    if (s.size() < 2 || s.front() != '(' || s.back() != ')')
        throw std::invalid_argument("mixed element must look like '(k | a,b)': '" + std::string(text) + "'");
    s = s.substr(1, s.size() - 2);
    auto bar = s.find('|');
    if (bar == std::string_view::npos)
        throw std::invalid_argument("mixed element is missing '|': '" + std::string(text) + "'");
    auto free_text = trim(s.substr(0, bar));
    BigInt free;
    try {
        if (free_text.empty()) throw std::invalid_argument("empty");
        std::string digits(free_text);
        if (digits.front() == '+') digits.erase(0, 1);
        for (std::size_t i = (digits.front() == '-') ? 1 : 0; i < digits.size(); ++i)
            if (!std::isdigit(static_cast<unsigned char>(digits[i]))) throw std::invalid_argument("digit");
        free = BigInt(digits);
    } catch (const std::exception&) {
        throw std::invalid_argument("bad integer part in mixed element '" + std::string(text) + "'");
    }
    auto torsion = torsion_.parse_element(std::string("(") + std::string(trim(s.substr(bar + 1))) + ")");
    return MixedElement{std::move(free), std::move(torsion)};
}

// ---------------------------------------------------------------------------
// Descriptors

std::string Exponent::to_string() const { return value ? std::to_string(*value) : std::string("inf"); }

GroupDescriptor GroupDescriptor::finite(FiniteAbelianGroup group) { return GroupDescriptor(FiniteDescriptor{std::move(group)}); }

GroupDescriptor GroupDescriptor::infinite_torsion(Exponent exponent) {
    if (exponent.value && *exponent.value < 2)
        throw std::invalid_argument("an infinite torsion group has exponent at least 2");
    return GroupDescriptor(InfiniteTorsionDescriptor{exponent});
}

GroupDescriptor GroupDescriptor::torsion_free() { return GroupDescriptor(TorsionFreeDescriptor{}); }

GroupDescriptor GroupDescriptor::mixed(FiniteAbelianGroup torsion) {
    if (torsion.order() < 2) throw std::invalid_argument("a mixed group needs a torsion part of order at least 2");
    return GroupDescriptor(MixedDescriptor{std::move(torsion)});
}

FiniteAbelianGroup parse_finite_group(std::string_view spec) {
    auto s = trim(spec);
    if (s == "1" || s == "trivial") return FiniteAbelianGroup{};
    if (s.empty()) throw std::invalid_argument("empty group spec");
    std::vector<std::int64_t> moduli;
    for (auto part : split(s, 'x')) {
        part = trim(part);
        if (part.size() < 2 || part.front() != 'Z' || part[1] == '+')
            throw std::invalid_argument("bad cyclic factor '" + std::string(part) + "' in group spec '" +
                                        std::string(spec) + "'");
        moduli.push_back(parse_int(part.substr(1), "cyclic factor"));
    }
    return FiniteAbelianGroup(std::move(moduli));
}

GroupDescriptor GroupDescriptor::parse(std::string_view spec) {
    auto s = trim(spec);
    if (s.rfind("Z+", 0) == 0) {
        auto rest = trim(s.substr(2));
        if (!rest.empty() && rest.front() == 'x') rest = trim(rest.substr(1));
        if (rest.empty()) return torsion_free();
        return mixed(parse_finite_group(rest));
    }
    if (s == "Tinf") return infinite_torsion(Exponent::infinite());
    if (!s.empty() && s.front() == 'T') {
        auto e = parse_int(s.substr(1), "torsion exponent");
        if (e < 2) throw std::invalid_argument("infinite torsion exponent must be at least 2");
        return infinite_torsion(Exponent::finite(static_cast<std::uint64_t>(e)));
    }
    return finite(parse_finite_group(s));
}

DescriptorKind GroupDescriptor::kind() const noexcept { return static_cast<DescriptorKind>(v_.index()); }

const FiniteAbelianGroup* GroupDescriptor::finite_group() const noexcept {
    if (auto* f = std::get_if<FiniteDescriptor>(&v_)) return &f->group;
    return nullptr;
}

const FiniteAbelianGroup* GroupDescriptor::torsion_part() const noexcept {
    if (auto* m = std::get_if<MixedDescriptor>(&v_)) return &m->torsion;
    return nullptr;
}

Exponent GroupDescriptor::exponent() const {
    switch (kind()) {
        case DescriptorKind::Finite: return Exponent::finite(std::get<FiniteDescriptor>(v_).group.exponent());
        case DescriptorKind::InfiniteTorsion: return std::get<InfiniteTorsionDescriptor>(v_).exponent;
        case DescriptorKind::TorsionFree: return Exponent::infinite();
        case DescriptorKind::Mixed: return Exponent::finite(std::get<MixedDescriptor>(v_).torsion.exponent());
    }
    return Exponent::infinite();
}

std::string GroupDescriptor::spec() const {
    switch (kind()) {
        case DescriptorKind::Finite: return std::get<FiniteDescriptor>(v_).group.spec();
        case DescriptorKind::InfiniteTorsion: {
            auto e = std::get<InfiniteTorsionDescriptor>(v_).exponent;
            return e.value ? "T" + std::to_string(*e.value) : std::string("Tinf");
        }
        case DescriptorKind::TorsionFree: return "Z+";
        case DescriptorKind::Mixed: return "Z+" + std::get<MixedDescriptor>(v_).torsion.spec();
    }
    return {};
}

RealizedCarrier realize_witness_group(const GroupDescriptor& d, Exponent needed) {
    auto fail = [&](const std::string& why) -> std::invalid_argument {
        return std::invalid_argument("cannot realize an element of order " + needed.to_string() + " in " + d.spec() +
                                     ": " + why);
    };
    if (needed.value && *needed.value == 0) throw fail("order must be positive");
    switch (d.kind()) {
        case DescriptorKind::Finite: {
            const auto& grp = *d.finite_group();
            if (!needed.value) throw fail("finite groups have no element of infinite order");
            auto a = grp.first_of_order(*needed.value);
            if (!a) throw fail(std::to_string(*needed.value) + " does not divide the exponent");
            return RealizedFinite{grp, *a};
        }
        case DescriptorKind::TorsionFree: {
            if (needed.value) throw fail("a torsion-free group has no nonzero element of finite order");
            MixedGroup z;
            return RealizedMixed{z, MixedElement{1, z.torsion().zero()}};
        }
        case DescriptorKind::Mixed: {
            MixedGroup zt(*d.torsion_part());
            if (!needed.value) return RealizedMixed{zt, MixedElement{1, zt.torsion().zero()}};
            auto a = zt.torsion().first_of_order(*needed.value);
            if (!a) throw fail(std::to_string(*needed.value) + " does not divide the torsion exponent");
            return RealizedMixed{zt, MixedElement{0, *a}};
        }
        case DescriptorKind::InfiniteTorsion: {
            if (!needed.value) throw fail("torsion groups have no element of infinite order");
            auto e = d.exponent();
            // Carriers have at least 3 elements so pendant blocks can be split.
            if (e.value) {
                if (*e.value % *needed.value != 0) throw fail("order does not divide the exponent");
                auto grp = *e.value == 2 ? FiniteAbelianGroup({2, 2})
                                         : FiniteAbelianGroup::cyclic(static_cast<std::int64_t>(*e.value));
                return RealizedFinite{grp, *grp.first_of_order(*needed.value)};
            }
            auto n = static_cast<std::int64_t>(*needed.value);
            if (n <= 2) n = 4;  // the cyclic subgroup Z4 holds the elements of order 1 and 2
            auto grp = FiniteAbelianGroup::cyclic(n);
            return RealizedFinite{grp, *grp.first_of_order(*needed.value)};
        }
    }
    throw fail("unknown descriptor");
}

}  // namespace gvm
