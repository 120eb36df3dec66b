// gvm: command-line front end for verification, constructions, tree
// classification, exhaustive search, products and corpus sweeps.

#include "gvm/constructors.hpp"
#include "gvm/io.hpp"
#include "gvm/oracle.hpp"
#include "gvm/treeclass.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <atomic>
#include <iostream>
#include <numeric>
#include <random>
#include <thread>

using namespace gvm;

namespace {

enum Exit : int { kOk = 0, kFail = 1, kUsage = 2, kHypothesis = 3, kBudget = 4 };

struct Common {
    std::optional<std::uint64_t> seed;
    std::uint64_t budget = SearchBudget{}.max_nodes;
    unsigned jobs = 1;
    std::string manifest_path;
};

struct Run {
    Common& common;
    RunManifest manifest;

    void input(const std::string& name, const std::string& path) {
        manifest.input_digests[name] = sha256_hex(read_text_file(path));
    }

    int finish(const Json& out, int code, const std::string& summary) {
        std::cout << out.dump(2) << "\n";
        manifest.seed = common.seed;
        manifest.outcome = summary;
        auto m = manifest_to_json(manifest).dump();
        std::cerr << summary << "\n";
        if (!common.manifest_path.empty()) write_text_file(common.manifest_path, m + "\n");
        return code;
    }
};

Edge parse_edge(const std::string& s) {
    auto comma = s.find(',');
    if (comma == std::string::npos) throw CLI::ValidationError("--edge", "expected u,v");
    return {std::stoul(s.substr(0, comma)), std::stoul(s.substr(comma + 1))};
}

Certificate load_certificate(Run& run, const std::string& graph_path, const std::string& cert_path,
                             const char* tag) {
    run.input(std::string(tag) + "_graph", graph_path);
    run.input(tag, cert_path);
    auto g = graph_from_json(read_json_file(graph_path));
    auto c = certificate_from_json(read_json_file(cert_path), g);
    if (auto* f = std::get_if<Certificate>(&c)) return std::move(*f);
    throw FormatError(std::string(tag) + ": constructions need a certificate over a finite group");
}

// --- verify -------------------------------------------------------------------

struct VerifyArgs {
    std::string graph, labels;
};

int cmd_verify(Run& run, const VerifyArgs& a) {
    run.input("graph", a.graph);
    run.input("labels", a.labels);
    auto g = graph_from_json(read_json_file(a.graph));
    auto lj = read_json_file(a.labels);
    if (lj.contains("graph_digest") && lj.at("graph_digest") != graph_digest(g))
        return run.finish({{"magic", false}, {"reason", "graph digest mismatch"}}, kFail, "digest mismatch");
    auto any = labeling_from_json(lj);
    return std::visit(
        [&](auto& l) {
            using L = std::decay_t<decltype(l)>;
            using G = decltype(L::group);
            const auto grp = l.group;
            run.manifest.group = grp.spec();
            auto r = verify_magic(g, std::move(l));
            if (auto* c = std::get_if<MagicCertificate<G>>(&r)) {
                auto mu = grp.format(c->mu());
                return run.finish({{"magic", true}, {"mu", mu}}, kOk, "magic, mu = " + mu);
            }
            auto& f = std::get<VerifyFailure<G>>(r);
            Json out{{"magic", false}, {"vertex", f.vertex}, {"reason", f.describe(grp)}};
            if (f.weight) out["weight"] = grp.format(*f.weight);
            if (f.expected) out["expected"] = grp.format(*f.expected);
            return run.finish(out, kFail, "not magic: " + f.describe(grp));
        },
        any);
}

// --- construct ------------------------------------------------------------------

struct ConstructArgs {
    std::string theorem, graph, group, g;
    std::vector<std::string> h_graphs;
    std::string cert_graph, cert, cert2_graph, cert2;
    std::vector<std::size_t> attach;
    std::size_t m = 0, n = 0;
    std::string edge, out;
};

Construction run_construction(Run& run, const ConstructArgs& a, TheoremId id) {
    auto need = [](bool ok, const char* what) {
        if (!ok) throw CLI::ValidationError(what, "required for this theorem");
    };
    std::optional<Graph> g;
    if (!a.graph.empty()) {
        run.input("graph", a.graph);
        g = graph_from_json(read_json_file(a.graph));
    }
    std::optional<FiniteAbelianGroup> grp;
    if (!a.group.empty()) {
        grp = parse_finite_group(a.group);
        run.manifest.group = grp->spec();
    }
    auto group = [&]() -> const FiniteAbelianGroup& {
        need(grp.has_value(), "--group");
        return *grp;
    };
    auto element = [&]() -> GroupElement {
        need(grp.has_value(), "--group");
        if (!a.g.empty()) return grp->parse_element(a.g);
        return grp->candidates(1).at(0);
    };
    auto h_list = [&] {
        std::vector<Graph> hs;
        for (std::size_t i = 0; i < a.h_graphs.size(); ++i) {
            run.input("h" + std::to_string(i), a.h_graphs[i]);
            hs.push_back(graph_from_json(read_json_file(a.h_graphs[i])));
        }
        return hs;
    };
    auto cert = [&] {
        need(!a.cert.empty() && !a.cert_graph.empty(), "--cert and --cert-graph");
        return load_certificate(run, a.cert_graph, a.cert, "cert");
    };
    auto cert2 = [&] {
        need(!a.cert2.empty() && !a.cert2_graph.empty(), "--cert2 and --cert2-graph");
        return load_certificate(run, a.cert2_graph, a.cert2, "cert2");
    };
    auto layers = [&] {
        need(g.has_value(), "--graph");
        return std::vector<Certificate>(g->order(), cert());
    };

    switch (id) {
        case TheoremId::AllStrongSupport: need(g.has_value(), "--graph"); return label_all_strong_support(*g, group(), element());
        case TheoremId::AllWeakSupport: need(g.has_value(), "--graph"); return label_all_weak_support(*g, group(), element());
        case TheoremId::GeneralizedCoronaEmpty:
            need(g.has_value(), "--graph");
            return label_generalized_corona_empty(*g, a.attach, group(), element());
        case TheoremId::StrongOrNeutral: need(g.has_value(), "--graph"); return label_strong_or_neutral(*g, group(), element());
        case TheoremId::OneNeutral: need(g.has_value(), "--graph"); return label_one_neutral(*g, group(), element());
        case TheoremId::TwoNeutral: need(g.has_value(), "--graph"); return label_two_neutral(*g, group(), element());
        case TheoremId::NeutralInducedLift: need(g.has_value(), "--graph"); return label_neutral_induced_lift(*g, cert());
        case TheoremId::IndependentNeutrals:
            need(g.has_value(), "--graph");
            return label_independent_neutrals(*g, group(), element());
        case TheoremId::SubdividePeriod4: return subdivide_relabel_period4(cert(), parse_edge(a.edge), a.n);
        case TheoremId::SubdivideHalfsum: return subdivide_relabel_halfsum(cert(), parse_edge(a.edge), a.n);
        case TheoremId::SubdivideAttach: return subdivide_attach_relabel(cert(), parse_edge(a.edge), a.attach);
        case TheoremId::RegularInvolution:
            need(g.has_value() && grp.has_value(), "--graph and --group");
            return label_regular_involution(*g, *grp, a.g.empty() ? std::nullopt : std::optional(grp->parse_element(a.g)));
        case TheoremId::CoronaProductGroups: return label_corona_product_groups(cert(), cert2());
        case TheoremId::CoronaComplete: need(g.has_value(), "--graph"); return label_corona_complete(*g, a.m, group(), element());
        case TheoremId::CoronaSelf: need(g.has_value(), "--graph"); return label_corona_self(*g, group(), element());
        case TheoremId::GencoronaRegulars:
            need(g.has_value(), "--graph");
            return label_gencorona_regulars(*g, h_list(), group(), element());
        case TheoremId::CompositionP2: {
            need(g.has_value() && a.h_graphs.size() == 1 && grp.has_value(), "--graph, one --h and --group");
            return label_composition_p2(*g, h_list().front(), *grp);
        }
        case TheoremId::CompositionRegular: return label_composition_regular(*g, layers());
        case TheoremId::CompositionZeroSum: return label_composition_zero_sum(*g, layers());
        case TheoremId::CompositionDegreeMultiple: return label_composition_degree_multiple(*g, layers());
        case TheoremId::Cartesian: return label_cartesian(cert(), cert2());
    }
    throw std::logic_error("unhandled theorem");
}

int cmd_construct(Run& run, const ConstructArgs& a) {
    auto id = theorem_from_string(a.theorem);
    if (!id) throw CLI::ValidationError("--theorem", "unknown theorem " + a.theorem);
    try {
        auto c = run_construction(run, a, *id);
        if (!a.out.empty()) write_text_file(a.out, certificate_to_json(c.certificate).dump(2) + "\n");
        return run.finish(construction_to_json(c), kOk,
                          to_string(*id) + ": verified, mu = " + c.certificate.group().format(c.certificate.mu()));
    } catch (const HypothesisViolation& e) {
        return run.finish({{"theorem", a.theorem}, {"violated", e.hypothesis()}}, kHypothesis, e.what());
    } catch (const StatementDiscrepancy& e) {
        return run.finish({{"theorem", a.theorem}, {"discrepancy", e.detail()}}, kFail, e.what());
    }
}

// --- classify ---------------------------------------------------------------------

struct ClassifyArgs {
    std::string tree, group, witness_out = "witness.json";
};

int cmd_classify(Run& run, const ClassifyArgs& a) {
    run.input("tree", a.tree);
    auto t = graph_from_json(read_json_file(a.tree));
    auto d = GroupDescriptor::parse(a.group);
    run.manifest.group = d.spec();
    auto r = classify_tree(t, d);
    auto j = classification_to_json(r);
    j.erase("witness");
    j["witness_path"] = nullptr;
    if (r.has_witness()) {
        write_text_file(a.witness_out, witness_to_json(r.witness).dump(2) + "\n");
        j["witness_path"] = a.witness_out;
    }
    return run.finish(j, kOk, to_string(r.verdict) + ": " + r.criterion);
}

// --- search ------------------------------------------------------------------------

struct SearchArgs {
    std::string graph, group, mu;
    bool no_pruning = false;
};

int cmd_search(Run& run, const SearchArgs& a) {
    run.input("graph", a.graph);
    auto g = graph_from_json(read_json_file(a.graph));
    auto grp = parse_finite_group(a.group);
    run.manifest.group = grp.spec();
    SearchBudget b;
    b.max_nodes = run.common.budget;
    b.jobs = run.common.jobs;
    b.pruning = !a.no_pruning;
    SearchConstraint c;
    if (!a.mu.empty()) c.mu = grp.parse_element(a.mu);
    auto o = search_with_constraint(g, grp, c, b);
    auto j = search_outcome_to_json(o);
    j.erase("nodes");  // depends on worker scheduling
    return run.finish(j, o.status == SearchStatus::BudgetExceeded ? kBudget : kOk,
                      to_string(o.status) + " after " + std::to_string(o.nodes) + " nodes");
}

// --- product -----------------------------------------------------------------------

struct ProductArgs {
    std::string kind, g;
    std::vector<std::string> h;
    std::string edge, out, provenance_out;
    std::size_t n = 1;
};

int cmd_product(Run& run, const ProductArgs& a) {
    run.input("g", a.g);
    auto g = graph_from_json(read_json_file(a.g));
    std::vector<Graph> hs;
    for (std::size_t i = 0; i < a.h.size(); ++i) {
        run.input("h" + std::to_string(i), a.h[i]);
        hs.push_back(graph_from_json(read_json_file(a.h[i])));
    }
    auto one_h = [&]() -> const Graph& {
        if (hs.size() != 1) throw CLI::ValidationError("--h", "exactly one factor graph is required");
        return hs.front();
    };
    Graph out;
    ProductIndexMap map;
    if (a.kind == "subdivide") {
        auto s = subdivide_edge(g, parse_edge(a.edge), a.n);
        out = std::move(s.graph);
        map = std::move(s.map);
    } else {
        Product p;
        if (a.kind == "corona") p = corona(g, one_h());
        else if (a.kind == "gencorona") p = generalized_corona(g, hs);
        else if (a.kind == "lex") p = composition(g, one_h());
        else if (a.kind == "cartesian") p = cartesian(g, one_h());
        else if (a.kind == "direct") p = direct_product(g, one_h());
        else throw CLI::ValidationError("--kind", "unknown product " + a.kind);
        out = std::move(p.graph);
        map = std::move(p.map);
    }
    if (!a.provenance_out.empty()) write_text_file(a.provenance_out, provenance_to_json(map).dump(2) + "\n");
    if (!a.out.empty()) write_text_file(a.out, graph_to_json(out).dump() + "\n");
    return run.finish(graph_to_json(out), kOk,
                      a.kind + ": " + std::to_string(out.order()) + " vertices, " + std::to_string(out.size()) + " edges");
}

// --- sweep -------------------------------------------------------------------------

struct SweepArgs {
    std::size_t diameter = 4, min_n = 0, max_n = 9;
    std::vector<std::string> groups;
    std::size_t sample = 0;
};

struct Cell {
    std::size_t n = 0, index = 0;
    std::string group;
    std::string verdict, oracle;
    bool agree = true, budget = false;
};

int cmd_sweep(Run& run, const SweepArgs& a) {
    std::vector<std::pair<Graph, Cell>> cells;
    for (std::size_t n = std::max(a.min_n, a.diameter + 1); n <= a.max_n; ++n) {
        auto trees = enumerate_trees(n, a.diameter);
        for (std::size_t i = 0; i < trees.size(); ++i)
            for (auto& spec : a.groups) cells.push_back({trees[i], Cell{n, i, spec, {}, {}, true, false}});
    }
    if (a.sample && a.sample < cells.size()) {
        std::mt19937_64 rng(run.common.seed.value_or(0));
        std::vector<std::size_t> idx(cells.size());
        std::iota(idx.begin(), idx.end(), 0);
        std::shuffle(idx.begin(), idx.end(), rng);
        idx.resize(a.sample);
        std::sort(idx.begin(), idx.end());
        std::vector<std::pair<Graph, Cell>> kept;
        for (auto i : idx) kept.push_back(std::move(cells[i]));
        cells = std::move(kept);
    }
    run.manifest.group = [&] {
        std::string s;
        for (auto& g : a.groups) s += (s.empty() ? "" : ",") + g;
        return s;
    }();

    std::atomic<std::size_t> next{0};
    auto work = [&] {
        for (std::size_t k; (k = next.fetch_add(1)) < cells.size();) {
            auto& [t, c] = cells[k];
            auto grp = parse_finite_group(c.group);
            auto r = classify_tree(t, GroupDescriptor::finite(grp));
            c.verdict = to_string(r.verdict);
            if (r.verdict == Verdict::Unsupported) continue;
            SearchBudget b;
            b.max_nodes = run.common.budget;
            auto o = search_magic(t, grp, b);
            c.oracle = to_string(o.status);
            c.budget = o.status == SearchStatus::BudgetExceeded;
            c.agree = !c.budget && (r.verdict == Verdict::Magic) == (o.status == SearchStatus::Found);
        }
    };
    std::vector<std::thread> pool;
    for (unsigned i = 0; i < std::max(1u, run.common.jobs); ++i) pool.emplace_back(work);
    for (auto& th : pool) th.join();

    Json rows = Json::array();
    std::size_t disagree = 0, budget = 0, unsupported = 0;
    for (auto& [t, c] : cells) {
        rows.push_back({{"n", c.n},
                        {"tree", c.index},
                        {"edges", graph_to_json(t)["edges"]},
                        {"group", c.group},
                        {"classifier", c.verdict},
                        {"oracle", c.oracle.empty() ? Json(nullptr) : Json(c.oracle)},
                        {"agree", c.agree}});
        disagree += !c.agree && !c.budget;
        budget += c.budget;
        unsupported += c.verdict == "unsupported";
    }
    Json out{{"diameter", a.diameter},
             {"cells", rows},
             {"disagreements", disagree},
             {"budget_exceeded", budget},
             {"unsupported", unsupported}};
    int code = disagree ? kFail : budget ? kBudget : kOk;
    return run.finish(out, code,
                      std::to_string(cells.size()) + " cells, " + std::to_string(disagree) + " disagreements, " +
                          std::to_string(unsupported) + " unsupported, " + std::to_string(budget) + " over budget");
}

// --- export-dot ------------------------------------------------------------------------

struct DotArgs {
    std::string graph, labels;
};

int cmd_export_dot(Run& run, const DotArgs& a) {
    run.input("graph", a.graph);
    auto g = graph_from_json(read_json_file(a.graph));
    std::vector<std::string> text;
    if (!a.labels.empty()) {
        run.input("labels", a.labels);
        auto any = labeling_from_json(read_json_file(a.labels));
        std::visit(
            [&](auto& l) {
                for (auto& x : l.values) text.push_back(l.group.format(x));
            },
            any);
    }
    std::cout << to_dot(g, text);
    run.manifest.outcome = "dot";
    std::cerr << "wrote DOT for " << g.order() << " vertices\n";
    if (!run.common.manifest_path.empty())
        write_text_file(run.common.manifest_path, manifest_to_json(run.manifest).dump() + "\n");
    return kOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Group-vertex-magic labelings: verify, construct, classify, search"};
    app.require_subcommand(1);
    // factor graphs take --h, so help is long-form only
    app.set_help_flag("--help", "Print this help message and exit");
    Common common;
    app.add_option("--seed", common.seed, "Seed for sampled corpora");
    app.add_option("--budget", common.budget, "Search node budget");
    app.add_option("--jobs", common.jobs, "Worker threads")->check(CLI::Range(1u, 256u));
    app.add_option("--manifest", common.manifest_path, "Write the run manifest here");

    VerifyArgs va;
    auto* verify = app.add_subcommand("verify", "Check a labeling");
    verify->add_option("--graph", va.graph)->required();
    verify->add_option("--labels", va.labels)->required();

    ConstructArgs ca;
    auto* construct = app.add_subcommand("construct", "Run a constructive labeler");
    construct->add_option("--theorem", ca.theorem)->required();
    construct->add_option("--graph", ca.graph);
    construct->add_option("--group", ca.group);
    construct->add_option("--g", ca.g, "Group element, e.g. (1,0)");
    construct->add_option("--h", ca.h_graphs, "Attached or layer graph (repeatable)");
    construct->add_option("--cert-graph", ca.cert_graph);
    construct->add_option("--cert", ca.cert);
    construct->add_option("--cert2-graph", ca.cert2_graph);
    construct->add_option("--cert2", ca.cert2);
    construct->add_option("--attach", ca.attach, "Pendant counts per vertex")->delimiter(',');
    construct->add_option("--m", ca.m);
    construct->add_option("--n", ca.n);
    construct->add_option("--edge", ca.edge, "u,v");
    construct->add_option("--out", ca.out, "Write the witness file here");

    ClassifyArgs cla;
    auto* classify = app.add_subcommand("classify", "Classify a tree of diameter 4 or 5");
    classify->add_option("--tree", cla.tree)->required();
    classify->add_option("--group", cla.group)->required();
    classify->add_option("--witness-out", cla.witness_out);

    SearchArgs sa;
    auto* search = app.add_subcommand("search", "Exhaustive search");
    search->add_option("--graph", sa.graph)->required();
    search->add_option("--group", sa.group)->required();
    search->add_option("--mu", sa.mu);
    search->add_flag("--no-pruning", sa.no_pruning);

    ProductArgs pa;
    auto* product = app.add_subcommand("product", "Build a product graph");
    product->add_option("--kind", pa.kind)->required()->check(
        CLI::IsMember({"corona", "gencorona", "lex", "cartesian", "direct", "subdivide"}));
    product->add_option("--g", pa.g)->required();
    product->add_option("--h", pa.h);
    product->add_option("--edge", pa.edge);
    product->add_option("--n", pa.n);
    product->add_option("--out", pa.out);
    product->add_option("--provenance-out", pa.provenance_out);

    SweepArgs swa;
    auto* sweep = app.add_subcommand("sweep", "Classifier against oracle over all small trees");
    sweep->add_option("--diameter", swa.diameter)->check(CLI::IsMember({4, 5}));
    sweep->add_option("--min-n", swa.min_n);
    sweep->add_option("--max-n", swa.max_n)->check(CLI::Range(0, 10));
    sweep->add_option("--groups", swa.groups)->delimiter(',')->required();
    sweep->add_option("--sample", swa.sample, "Keep a seeded random subset of this many cells");

    DotArgs da;
    auto* dot = app.add_subcommand("export-dot", "Write Graphviz DOT");
    dot->add_option("--graph", da.graph)->required();
    dot->add_option("--labels", da.labels);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kUsage;
    }

    Run run{common, {}};
    for (auto* sub : app.get_subcommands()) run.manifest.command = sub->get_name();
    try {
        if (verify->parsed()) return cmd_verify(run, va);
        if (construct->parsed()) return cmd_construct(run, ca);
        if (classify->parsed()) return cmd_classify(run, cla);
        if (search->parsed()) return cmd_search(run, sa);
        if (product->parsed()) return cmd_product(run, pa);
        if (sweep->parsed()) return cmd_sweep(run, swa);
        if (dot->parsed()) return cmd_export_dot(run, da);
    } catch (const CLI::ValidationError& e) {
        std::cerr << "usage: " << e.what() << "\n";
        return kUsage;
    } catch (const HypothesisViolation& e) {
        std::cerr << e.what() << "\n";
        return kHypothesis;
    } catch (const ContradictoryConstraint& e) {
        std::cerr << e.what() << "\n";
        return kHypothesis;
    } catch (const FormatError& e) {
        std::cerr << "bad input: " << e.what() << "\n";
        return kUsage;
    } catch (const std::invalid_argument& e) {
        std::cerr << "precondition: " << e.what() << "\n";
        return kHypothesis;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kFail;
    }
    return kUsage;
}
