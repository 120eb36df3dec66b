#pragma once

// Decision procedures for trees of diameter 4 and 5 over every kind of
// group descriptor. Magic verdicts carry a verified witness over Γ itself
// (finite) or over a concrete carrier (ℤ, ℤ × T, or a finite subgroup of an
// infinite torsion group).

#include "gvm/algebra.hpp"
#include "gvm/graph.hpp"
#include "gvm/labeling.hpp"

#include <string>
#include <variant>

namespace gvm {

enum class Verdict { Magic, NotMagic, Unsupported };

std::string to_string(Verdict v);

using TreeWitness = std::variant<std::monostate, MagicCertificate<FiniteAbelianGroup>, MagicCertificate<MixedGroup>>;

struct ClassificationResult {
    Verdict verdict = Verdict::Unsupported;
    /// Which characterization applied and why, with the relevant numbers.
    std::string criterion;
    /// "i", "ii", "iii" for the clause that fired, "none" otherwise.
    std::string clause = "none";
    TreeWitness witness;

    bool has_witness() const noexcept { return !std::holds_alternative<std::monostate>(witness); }
};

/// Throws std::invalid_argument unless T is a tree of diameter 4, or when a
/// finite descriptor has fewer than 3 elements.
ClassificationResult classify_diam4(const Graph& tree, const GroupDescriptor& d);

/// Throws std::invalid_argument unless T is a tree of diameter 5. Center
/// combinations no characterization covers come back Unsupported.
ClassificationResult classify_diam5(const Graph& tree, const GroupDescriptor& d);

/// Dispatches on the diameter.
ClassificationResult classify_tree(const Graph& tree, const GroupDescriptor& d);

/// Re-verifies the witness of a Magic verdict against `tree` and returns a
/// fresh certificate. Throws std::invalid_argument for other verdicts or when
/// the witness does not fit the tree.
TreeWitness witness_realize(const Graph& tree, const ClassificationResult& result);

}  // namespace gvm
