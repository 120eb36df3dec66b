#pragma once

// Exhaustive search for magic labelings over small finite groups.

#include "gvm/algebra.hpp"
#include "gvm/graph.hpp"
#include "gvm/labeling.hpp"

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace gvm {

struct SearchBudget {
    std::uint64_t max_nodes = 100'000'000;
    std::optional<double> max_seconds;
    /// Off: neighborhoods are only checked once fully labeled, nothing is forced.
    bool pruning = true;
    unsigned jobs = 1;
};

enum class SearchStatus { Found, NoneExists, BudgetExceeded };

std::string to_string(SearchStatus s);

struct SearchOutcome {
    SearchStatus status = SearchStatus::NoneExists;
    std::optional<MagicCertificate<FiniteAbelianGroup>> certificate;
    std::uint64_t nodes = 0;
};

struct SearchConstraint {
    std::optional<GroupElement> mu;
    /// Empty, or one entry per vertex.
    std::vector<std::optional<GroupElement>> fixed;
};

/// The constraint is malformed (zero or foreign label, wrong length) or
/// contradicts itself at setup.
class ContradictoryConstraint : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// Candidates are ranked by (μ, labels in variable order), all in element
/// enumeration order; the reported certificate is the lowest-ranked one,
/// independent of `jobs`.
SearchOutcome search_magic(const Graph& g, const FiniteAbelianGroup& grp, const SearchBudget& budget = {});
SearchOutcome search_with_constraint(const Graph& g, const FiniteAbelianGroup& grp, const SearchConstraint& c,
                                     const SearchBudget& budget = {});

/// Unpruned odometer over every nonzero assignment; reports the same
/// lowest-ranked certificate as search_magic. Only for small instances.
SearchOutcome enumerate_plain(const Graph& g, const FiniteAbelianGroup& grp, const SearchConstraint& c = {},
                              const SearchBudget& budget = {});

/// Vertices sorted by (support first, degree descending, index).
std::vector<Vertex> search_variable_order(const Graph& g);

}  // namespace gvm
