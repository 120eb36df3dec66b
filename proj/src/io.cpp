#include "gvm/io.hpp"

#include <openssl/evp.h>

#include <array>
#include <fstream>
#include <iomanip>
#include <sstream>

namespace gvm {

std::string sha256_hex(const std::string& bytes) {
    std::array<unsigned char, EVP_MAX_MD_SIZE> md{};
    unsigned int len = 0;
    if (EVP_Digest(bytes.data(), bytes.size(), md.data(), &len, EVP_sha256(), nullptr) != 1)
        throw std::runtime_error("sha256 failed");
    std::ostringstream out;
    for (unsigned int i = 0; i < len; ++i) out << std::hex << std::setw(2) << std::setfill('0') << int(md[i]);
    return out.str();
}

Json graph_to_json(const Graph& g) {
    Json edges = Json::array();
    for (auto [u, v] : g.edges()) edges.push_back({u, v});
    return Json{{"n", g.order()}, {"edges", edges}};
}

Graph graph_from_json(const Json& j) {
    auto index = [](const Json& x) { return x.is_number_unsigned() || (x.is_number_integer() && x.get<std::int64_t>() >= 0); };
    if (!j.is_object() || !j.contains("n") || !index(j.at("n")))
        throw FormatError("graph JSON needs a non-negative integer \"n\"");
    Graph g(j.at("n").get<std::size_t>());
    if (!j.contains("edges")) return g;
    const auto& edges = j.at("edges");
    if (!edges.is_array()) throw FormatError("graph JSON \"edges\" must be an array");
    for (const auto& e : edges) {
        if (!e.is_array() || e.size() != 2 || !index(e[0]) || !index(e[1]))
            throw FormatError("every edge must be a pair of vertex indices");
        try {
            g.add_edge(e[0].get<Vertex>(), e[1].get<Vertex>());
        } catch (const std::invalid_argument& ex) {
            throw FormatError(ex.what());
        }
    }
    return g;
}

std::string graph_digest(const Graph& g) { return sha256_hex(graph_to_json(g).dump()); }

namespace {

const Json& field(const Json& j, const char* key) {
    if (!j.is_object() || !j.contains(key)) throw FormatError(std::string("missing field \"") + key + "\"");
    return j.at(key);
}

std::string string_field(const Json& j, const char* key) {
    const auto& v = field(j, key);
    if (!v.is_string()) throw FormatError(std::string("field \"") + key + "\" must be a string");
    return v.get<std::string>();
}

template <AbelianGroup G>
Labeling<G> parse_labels(G grp, const Json& j) {
    const auto& labels = field(j, "labels");
    if (!labels.is_array()) throw FormatError("\"labels\" must be an array");
    Labeling<G> l{std::move(grp), {}};
    for (const auto& x : labels) {
        if (!x.is_string()) throw FormatError("every label must be a string such as \"(1,0)\"");
        try {
            l.values.push_back(l.group.parse_element(x.get<std::string>()));
        } catch (const std::invalid_argument& e) {
            throw FormatError(e.what());
        }
    }
    return l;
}

GroupDescriptor parse_descriptor(const std::string& spec) {
    try {
        return GroupDescriptor::parse(spec);
    } catch (const std::invalid_argument& e) {
        throw FormatError(e.what());
    }
}

}  // namespace

AnyLabeling labeling_from_json(const Json& j) {
    auto d = parse_descriptor(string_field(j, "group"));
    switch (d.kind()) {
        case DescriptorKind::Finite: return parse_labels(*d.finite_group(), j);
        case DescriptorKind::TorsionFree: return parse_labels(MixedGroup{}, j);
        case DescriptorKind::Mixed: return parse_labels(MixedGroup(*d.torsion_part()), j);
        case DescriptorKind::InfiniteTorsion: break;
    }
    throw FormatError("labels over " + d.spec() + " need a concrete carrier group");
}

Labeling<FiniteAbelianGroup> finite_labeling_from_json(const Json& j) {
    auto l = labeling_from_json(j);
    if (auto* f = std::get_if<Labeling<FiniteAbelianGroup>>(&l)) return std::move(*f);
    throw FormatError("expected a labeling over a finite group");
}

std::variant<MagicCertificate<FiniteAbelianGroup>, MagicCertificate<MixedGroup>> certificate_from_json(const Json& j,
                                                                                                      const Graph& g) {
    if (j.contains("graph_digest") && string_field(j, "graph_digest") != graph_digest(g))
        throw FormatError("witness digest does not match the graph");
    auto any = labeling_from_json(j);
    return std::visit(
        [&](auto& l) -> std::variant<MagicCertificate<FiniteAbelianGroup>, MagicCertificate<MixedGroup>> {
            using L = std::decay_t<decltype(l)>;
            using G = decltype(L::group);
            const auto grp = l.group;
            auto r = verify_magic(g, std::move(l));
            if (auto* f = std::get_if<VerifyFailure<G>>(&r)) throw FormatError("witness does not verify: " + f->describe(grp));
            auto c = std::get<MagicCertificate<G>>(std::move(r));
            if (j.contains("mu")) {
                auto mu = grp.parse_element(string_field(j, "mu"));
                if (!(mu == c.mu()))
                    throw FormatError("witness states mu = " + grp.format(mu) + " but the weights are " + grp.format(c.mu()));
            }
            return c;
        },
        any);
}

Json witness_to_json(const TreeWitness& w) {
    return std::visit(
        [](const auto& c) -> Json {
            if constexpr (std::is_same_v<std::decay_t<decltype(c)>, std::monostate>)
                return nullptr;
            else
                return certificate_to_json(c);
        },
        w);
}

namespace {

constexpr std::array kProvenanceKinds{ProvenanceKind::Base,     ProvenanceKind::Attached,    ProvenanceKind::Pair,
                                      ProvenanceKind::Original, ProvenanceKind::Subdivision, ProvenanceKind::SubdivisionPendant};

}  // namespace

Json provenance_to_json(const ProductIndexMap& m) {
    Json vertices = Json::array();
    for (auto& p : m.provenance) vertices.push_back({{"kind", to_string(p.kind)}, {"a", p.a}, {"b", p.b}});
    return Json{{"kind", m.kind}, {"copy_offset", m.copy_offset}, {"vertices", vertices}};
}

ProductIndexMap provenance_from_json(const Json& j) {
    ProductIndexMap m;
    m.kind = string_field(j, "kind");
    m.copy_offset = field(j, "copy_offset").get<std::vector<std::size_t>>();
    for (const auto& v : field(j, "vertices")) {
        auto name = string_field(v, "kind");
        auto it = std::find_if(kProvenanceKinds.begin(), kProvenanceKinds.end(),
                               [&](ProvenanceKind k) { return to_string(k) == name; });
        if (it == kProvenanceKinds.end()) throw FormatError("unknown provenance kind \"" + name + "\"");
        m.provenance.push_back({*it, field(v, "a").get<std::size_t>(), field(v, "b").get<std::size_t>()});
    }
    return m;
}

Json construction_to_json(const Construction& c) {
    Json j{{"theorem", to_string(c.theorem)},
           {"graph", graph_to_json(c.graph())},
           {"certificate", certificate_to_json(c.certificate)}};
    j["provenance"] = c.map ? provenance_to_json(*c.map) : Json(nullptr);
    return j;
}

Json classification_to_json(const ClassificationResult& r) {
    return Json{{"verdict", to_string(r.verdict)},
                {"criterion", r.criterion},
                {"clause", r.clause},
                {"witness", witness_to_json(r.witness)}};
}

Json search_outcome_to_json(const SearchOutcome& o) {
    Json j{{"status", to_string(o.status)}, {"nodes", o.nodes}};
    j["certificate"] = o.certificate ? certificate_to_json(*o.certificate) : Json(nullptr);
    return j;
}

Json manifest_to_json(const RunManifest& m) {
    Json j{{"command", m.command},
           {"input_digests", m.input_digests},
           {"group", m.group},
           {"tool_version", m.tool_version},
           {"outcome", m.outcome}};
    j["seed"] = m.seed ? Json(*m.seed) : Json(nullptr);
    return j;
}

RunManifest manifest_from_json(const Json& j) {
    RunManifest m;
    m.command = string_field(j, "command");
    m.input_digests = field(j, "input_digests").get<std::map<std::string, std::string>>();
    m.group = string_field(j, "group");
    if (j.contains("seed") && !j.at("seed").is_null()) m.seed = j.at("seed").get<std::uint64_t>();
    m.tool_version = string_field(j, "tool_version");
    m.outcome = string_field(j, "outcome");
    return m;
}

std::string to_dot(const Graph& g, const std::vector<std::string>& labels) {
    std::optional<VertexPartition> p;
    try {
        p = classify_vertices(g);
    } catch (const std::invalid_argument&) {
    }
    auto shape = [&](Vertex v) -> const char* {
        if (!p) return "ellipse";
        switch (p->classes[v]) {
            case VertexClass::Pendant: return "box";
            case VertexClass::StrongSupport: return "doublecircle";
            case VertexClass::WeakSupport: return "circle";
            case VertexClass::Neutral: return "diamond";
        }
        return "ellipse";
    };
    std::ostringstream o;
    o << "graph G {\n";
    for (Vertex v = 0; v < g.order(); ++v) {
        o << "  " << v << " [shape=" << shape(v) << ", label=\"";
        o << (v < labels.size() ? labels[v] : std::to_string(v)) << "\"];\n";
    }
    for (auto [u, v] : g.edges()) o << "  " << u << " -- " << v << ";\n";
    o << "}\n";
    return o.str();
}

Json read_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw FormatError("cannot open " + path);
    try {
        return Json::parse(in);
    } catch (const Json::parse_error& e) {
        throw FormatError(path + ": " + e.what());
    }
}

std::string read_text_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw FormatError("cannot open " + path);
    std::ostringstream s;
    s << in.rdbuf();
    return s.str();
}

void write_text_file(const std::string& path, const std::string& text) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot write " + path);
    out << text;
}

}  // namespace gvm
