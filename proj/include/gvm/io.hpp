#pragma once

// JSON and DOT serialization. Graph JSON is {"n": N, "edges": [[u, v], ...]};
// labeling JSON is {"group": "<spec>", "labels": ["(a,b)", ...]}. Witness
// files add "mu" and the SHA-256 digest of the graph they belong to.

#include "gvm/algebra.hpp"
#include "gvm/constructors.hpp"
#include "gvm/graph.hpp"
#include "gvm/labeling.hpp"
#include "gvm/oracle.hpp"
#include "gvm/products.hpp"
#include "gvm/treeclass.hpp"

#include <json.hpp>

#include <map>
#include <optional>
#include <string>
#include <variant>
#include <vector>

namespace gvm {

using Json = nlohmann::json;

inline constexpr const char* kToolVersion = "1.0.0";

/// Raised on malformed input documents.
class FormatError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

std::string sha256_hex(const std::string& bytes);

Json graph_to_json(const Graph& g);
Graph graph_from_json(const Json& j);
/// Digest of the compact graph JSON with edges sorted.
std::string graph_digest(const Graph& g);

using AnyLabeling = std::variant<Labeling<FiniteAbelianGroup>, Labeling<MixedGroup>>;

template <AbelianGroup G>
Json labeling_to_json(const Labeling<G>& l) {
    Json labels = Json::array();
    for (auto& a : l.values) labels.push_back(l.group.format(a));
    return Json{{"group", l.group.spec()}, {"labels", labels}};
}

/// "Z+"-prefixed specs give a MixedGroup labeling, anything else a finite one.
AnyLabeling labeling_from_json(const Json& j);
Labeling<FiniteAbelianGroup> finite_labeling_from_json(const Json& j);

template <AbelianGroup G>
Json certificate_to_json(const MagicCertificate<G>& c) {
    auto j = labeling_to_json(c.labeling());
    j["mu"] = c.group().format(c.mu());
    j["graph_digest"] = graph_digest(c.graph());
    return j;
}

/// Re-verifies a witness document against `g`. Throws FormatError when the
/// digest or the stored μ disagrees, or when the labeling is not magic.
std::variant<MagicCertificate<FiniteAbelianGroup>, MagicCertificate<MixedGroup>> certificate_from_json(const Json& j,
                                                                                                      const Graph& g);

Json witness_to_json(const TreeWitness& w);

Json provenance_to_json(const ProductIndexMap& m);
ProductIndexMap provenance_from_json(const Json& j);

Json construction_to_json(const Construction& c);
Json classification_to_json(const ClassificationResult& r);
Json search_outcome_to_json(const SearchOutcome& o);

struct RunManifest {
    std::string command;
    std::map<std::string, std::string> input_digests;
    std::string group;
    std::optional<std::uint64_t> seed;
    std::string tool_version = kToolVersion;
    std::string outcome;
};

Json manifest_to_json(const RunManifest& m);
RunManifest manifest_from_json(const Json& j);

/// Pendants are boxes, strong supports double circles, weak supports
/// circles and neutrals diamonds; node text is the vertex label when given.
std::string to_dot(const Graph& g, const std::vector<std::string>& labels = {});

Json read_json_file(const std::string& path);
void write_text_file(const std::string& path, const std::string& text);
std::string read_text_file(const std::string& path);

}  // namespace gvm
