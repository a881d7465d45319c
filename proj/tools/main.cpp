// Command-line front end: graph catalog, recognizers, pair classification,
// NAE gadget reduction, exact solvers, lemma verification sweeps, survey
// tables and graph enumeration. Data goes to stdout, diagnostics to stderr;
// identical arguments, files and seeds produce identical bytes.

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "bigenic/classifier.hpp"
#include "bigenic/errors.hpp"
#include "bigenic/families.hpp"
#include "bigenic/gadget.hpp"
#include "bigenic/graph.hpp"
#include "bigenic/lemmas.hpp"
#include "bigenic/recognizers.hpp"
#include "bigenic/solvers.hpp"

namespace {

using namespace bigenic;
using nlohmann::json;

// A graph argument is either a family expression or a graph6 string.
Graph graph_argument(const std::string& text) {
    try {
        return make_graph(text);
    } catch (const validation_error&) {
    }
    try {
        return from_graph6(text);
    } catch (const validation_error&) {
    }
    throw validation_error(
        "'" + text + "' is neither a family expression nor graph6");
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in)
        throw validation_error("cannot open file '" + path + "'");
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return buffer.str();
}

json roles_json(const GadgetGraph& gadget) {
    json roles = json::array();
    for (const Role& role : gadget.roles) {
        const char* kind = role.kind == Role::Kind::X    ? "x"
                           : role.kind == Role::Kind::C  ? "C"
                           : role.kind == Role::Kind::Cp ? "Cp"
                                                         : "k";
        roles.push_back({{"kind", kind}, {"index", role.index}});
    }
    return roles;
}

json sidecar_json(const GadgetGraph& gadget) {
    return {{"variant", to_string(gadget.variant)},
            {"roles", roles_json(gadget)},
            {"lists", gadget.lists.lists},
            {"colour_budget", gadget.colour_budget}};
}

ListAssignment lists_from_json(const json& doc, int expected) {
    if (!doc.contains("lists"))
        throw validation_error("lists file must contain a \"lists\" array");
    ListAssignment lists;
    lists.lists = doc.at("lists").get<std::vector<std::vector<int>>>();
    if (static_cast<int>(lists.lists.size()) != expected)
        throw validation_error(
            "lists cover " + std::to_string(lists.lists.size()) +
            " vertices but the graph has " + std::to_string(expected));
    return lists;
}

int run(int argc, char** argv) {
    CLI::App app{"graph colouring complexity workbench for classes "
                 "excluding two induced subgraphs"};
    app.require_subcommand(1);

    // catalog
    auto* catalog = app.add_subcommand(
        "catalog", "realize a family expression as graph6");
    std::string catalog_expr;
    std::string catalog_format = "g6";
    bool catalog_all = false;
    catalog->add_option("expr", catalog_expr, "family expression");
    catalog->add_flag("--all", catalog_all, "print every fixture graph");
    catalog->add_option("--format", catalog_format,
                        "output format: g6 or dimacs");

    // recognize
    auto* recognize =
        app.add_subcommand("recognize", "structural recognizers");
    std::string recognize_graph;
    bool rec_class_t = false, rec_t = false, rec_open = false,
         rec_tricho = false;
    recognize->add_option("graph", recognize_graph, "graph6 or expression")
        ->required();
    recognize->add_flag("--class-T", rec_class_t,
                        "membership in the path/T class");
    recognize->add_flag("--T", rec_t, "recognize T parameters");
    recognize->add_flag("--open-pattern", rec_open,
                        "match the graph, read as co(H), against the open "
                        "families");
    recognize->add_flag("--tree-trichotomy", rec_tricho,
                        "structural split of a qualifying tree");

    // classify
    auto* classify_cmd =
        app.add_subcommand("classify", "complexity verdict for a pair");
    std::string h1_text, h2_text;
    bool classify_json_flag = false;
    classify_cmd->add_option("--h1", h1_text, "first forbidden graph")
        ->required();
    classify_cmd->add_option("--h2", h2_text, "second forbidden graph")
        ->required();
    classify_cmd->add_flag("--json", classify_json_flag, "JSON verdict");

    // reduce
    auto* reduce = app.add_subcommand(
        "reduce", "build a colouring gadget from a NAE instance");
    std::string reduce_instance, reduce_variant = "g1p";
    reduce->add_option("--instance", reduce_instance, "instance file")
        ->required();
    reduce->add_option("--variant", reduce_variant, "g1, g2, g1p or g2p");

    // solve
    auto* solve = app.add_subcommand("solve", "exact solvers");
    solve->require_subcommand(1);
    auto* chrom = solve->add_subcommand("chromatic", "chromatic number");
    std::string chrom_graph;
    chrom->add_option("graph", chrom_graph, "graph6 or expression")
        ->required();
    auto* kcol = solve->add_subcommand("kcol", "k-colouring");
    std::string kcol_graph;
    int kcol_k = 0;
    kcol->add_option("graph", kcol_graph, "graph6 or expression")
        ->required();
    kcol->add_option("--k", kcol_k, "colour count")->required();
    auto* listcol = solve->add_subcommand("listcol", "list colouring");
    std::string listcol_graph, listcol_lists;
    listcol->add_option("graph", listcol_graph, "graph6 or expression")
        ->required();
    listcol->add_option("--lists", listcol_lists,
                        "JSON file with a \"lists\" array")
        ->required();

    // verify
    auto* verify = app.add_subcommand(
        "verify", "run the gadget lemma checks");
    std::string verify_what = "all";
    std::string verify_instance;
    int verify_random = 0, verify_max_vars = 6, verify_max_clauses = 8;
    std::uint64_t verify_seed = 1;
    bool verify_timings = false;
    verify->add_option("what", verify_what,
                       "lemma1, lemma2, lemma3, lemma4 or all");
    verify->add_option("--instance", verify_instance, "instance file");
    verify->add_option("--random", verify_random,
                       "number of random instances");
    verify->add_option("--max-vars", verify_max_vars, "variable bound");
    verify->add_option("--max-clauses", verify_max_clauses, "clause bound");
    verify->add_option("--seed", verify_seed, "generator seed");
    verify->add_flag("--timings", verify_timings,
                     "include elapsed_ms (output no longer byte-stable)");

    // survey
    auto* survey_cmd = app.add_subcommand(
        "survey", "classify (forbidden, H) over all small graphs H");
    std::string survey_forbid;
    int survey_max_n = 5;
    std::string survey_format = "csv";
    survey_cmd->add_option("--forbid", survey_forbid, "2P2 or P5")
        ->required();
    survey_cmd->add_option("--max-n", survey_max_n, "largest vertex count");
    survey_cmd->add_option("--format", survey_format, "csv or json");

    // freeness
    auto* freeness = app.add_subcommand(
        "freeness", "induced subgraph search for a pattern list");
    std::string free_host;
    std::string free_patterns;
    freeness->add_option("--host", free_host, "graph6 or expression")
        ->required();
    freeness->add_option("--patterns", free_patterns,
                         "comma separated expressions")
        ->required();

    // enumerate
    auto* enumerate = app.add_subcommand(
        "enumerate", "stream non-isomorphic graphs as graph6");
    int enum_n = 0;
    enumerate->add_option("--n", enum_n, "vertex count")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        std::cerr << "error: validation: " << e.what() << "\n";
        return 1;
    }

    if (catalog->parsed()) {
        if (catalog_all) {
            for (const auto& [name, graph] : catalog_fixtures())
                std::cout << name << " " << to_graph6(graph) << "\n";
            return 0;
        }
        if (catalog_expr.empty())
            throw validation_error("catalog needs an expression or --all");
        const Graph g = graph_argument(catalog_expr);
        if (catalog_format == "dimacs")
            std::cout << to_dimacs(g);
        else
            std::cout << to_graph6(g) << "\n";
        return 0;
    }

    if (recognize->parsed()) {
        const Graph g = graph_argument(recognize_graph);
        json out;
        out["graph6"] = to_graph6(g);
        if (rec_class_t) {
            out["in_class_T"] = in_class_T(g);
            out["in_class_T_zero_arms"] = in_class_T(g, true);
        }
        if (rec_t) {
            const auto t = recognize_T(g);
            out["T"] = t ? json({(*t)[0], (*t)[1], (*t)[2]}) : json();
        }
        if (rec_open) {
            const auto match = match_open_pattern(g);
            if (match) {
                json m = {{"family", match->family}, {"s", match->s}};
                if (match->t)
                    m["t"] = *match->t;
                if (match->u)
                    m["u"] = *match->u;
                if (match->thij)
                    m["thij"] = {(*match->thij)[0], (*match->thij)[1],
                                 (*match->thij)[2]};
                out["open_pattern"] = m;
            } else {
                out["open_pattern"] = json();
            }
            json all = json::array();
            for (const auto& match_all : match_open_pattern_all(g))
                all.push_back(match_all.family);
            out["open_pattern_all_families"] = all;
        }
        if (rec_tricho) {
            const auto outcome = tree_trichotomy(g);
            const char* tag =
                outcome.tag == TreeTrichotomyOutcome::Tag::ContainsK14
                    ? "ContainsK14"
                : outcome.tag == TreeTrichotomyOutcome::Tag::ContainsS112
                    ? "ContainsS112"
                    : "LongPath";
            out["tree_trichotomy"] = tag;
            if (outcome.witness)
                out["witness"] = outcome.witness->mapping;
            else
                out["path_length"] = outcome.path_length;
        }
        std::cout << out.dump() << "\n";
        return 0;
    }

    if (classify_cmd->parsed()) {
        const Graph h1 = graph_argument(h1_text);
        const Graph h2 = graph_argument(h2_text);
        const Verdict verdict = classify(h1, h2);
        if (classify_json_flag) {
            std::cout << verdict_json(h1, h2, verdict).dump() << "\n";
        } else {
            std::cout << to_string(verdict.status);
            if (!verdict.trace.empty()) {
                std::cout << " (";
                for (std::size_t i = 0; i < verdict.trace.size(); ++i) {
                    if (i)
                        std::cout << "; ";
                    std::cout << verdict.trace[i].rule << ": "
                              << verdict.trace[i].citation;
                }
                std::cout << ")";
            }
            std::cout << "\n";
        }
        return 0;
    }

    if (reduce->parsed()) {
        const NaeInstance inst = parse_nae(read_file(reduce_instance));
        GadgetGraph gadget;
        if (reduce_variant == "g1")
            gadget = build_g1(inst);
        else if (reduce_variant == "g2")
            gadget = build_g2(inst);
        else if (reduce_variant == "g1p")
            gadget = extend_with_clique(build_g1(inst));
        else if (reduce_variant == "g2p")
            gadget = extend_with_clique(build_g2(inst));
        else
            throw validation_error("variant must be g1, g2, g1p or g2p");
        std::cout << to_graph6(gadget.graph) << "\n";
        std::cout << sidecar_json(gadget).dump() << "\n";
        return 0;
    }

    if (solve->parsed()) {
        json out;
        if (chrom->parsed()) {
            const Graph g = graph_argument(chrom_graph);
            out = {{"graph6", to_graph6(g)},
                   {"chromatic_number", chromatic_number(g)}};
        } else if (kcol->parsed()) {
            const Graph g = graph_argument(kcol_graph);
            const auto colouring = solve_k_colouring(g, kcol_k);
            out = {{"graph6", to_graph6(g)},
                   {"k", kcol_k},
                   {"colourable", colouring.has_value()}};
            if (colouring)
                out["colouring"] = colouring->colour;
        } else {
            const Graph g = graph_argument(listcol_graph);
            const json doc = json::parse(read_file(listcol_lists));
            const ListAssignment lists =
                lists_from_json(doc, g.vertex_count());
            const auto colouring = solve_list_colouring(g, lists);
            out = {{"graph6", to_graph6(g)},
                   {"colourable", colouring.has_value()}};
            if (colouring)
                out["colouring"] = colouring->colour;
        }
        std::cout << out.dump() << "\n";
        return 0;
    }

    if (verify->parsed()) {
        std::vector<NaeInstance> instances;
        if (!verify_instance.empty())
            instances.push_back(parse_nae(read_file(verify_instance)));
        if (verify_random > 0) {
            auto generated =
                random_instances(verify_random, verify_max_vars,
                                 verify_max_clauses, verify_seed);
            instances.insert(instances.end(), generated.begin(),
                             generated.end());
        }
        if (instances.empty())
            throw validation_error(
                "verify needs --instance FILE or --random N");
        std::vector<VerificationReport> reports;
        for (const NaeInstance& inst : instances) {
            if (verify_what == "lemma1" || verify_what == "all")
                reports.push_back(verify_lemma1(inst));
            if (verify_what == "lemma2" || verify_what == "all")
                reports.push_back(verify_lemma2(inst));
            if (verify_what == "lemma3" || verify_what == "all")
                reports.push_back(verify_lemma3(inst));
            if (verify_what == "lemma4" || verify_what == "all")
                reports.push_back(verify_lemma4(inst));
        }
        if (reports.empty())
            throw validation_error(
                "unknown verify target '" + verify_what + "'");
        std::cout << emit_report(reports, verify_timings).dump(2) << "\n";
        for (const auto& report : reports)
            if (!report.all_hold())
                throw inconsistency_error("a lemma claim was violated; see "
                                          "report for the counter-witness");
        return 0;
    }

    if (survey_cmd->parsed()) {
        if (survey_forbid != "2P2" && survey_forbid != "P5")
            throw validation_error("--forbid must be 2P2 or P5");
        const SurveyTable table =
            survey(make_graph(survey_forbid), survey_max_n);
        if (survey_format == "json")
            std::cout << survey_json(table).dump(2) << "\n";
        else
            std::cout << survey_to_csv(table);
        return 0;
    }

    if (freeness->parsed()) {
        const Graph host = graph_argument(free_host);
        json results = json::array();
        bool free = true;
        // K r,s / S h,i,j / T h,i,j atoms contain commas, so split on
        // commas and greedily merge tokens into the longest parseable
        // expression.
        std::vector<std::string> tokens;
        std::stringstream stream(free_patterns);
        std::string token;
        while (std::getline(stream, token, ','))
            tokens.push_back(token);
        std::vector<std::string> exprs;
        std::size_t at = 0;
        const auto parses = [](const std::string& text) {
            try {
                (void)parse_family(text);
                return true;
            } catch (const validation_error&) {
                return false;
            }
        };
        while (at < tokens.size()) {
            std::string expr = tokens[at++];
            while (at < tokens.size() && !parses(expr))
                expr += "," + tokens[at++];
            while (at < tokens.size() && parses(expr + "," + tokens[at]))
                expr += "," + tokens[at++];
            exprs.push_back(expr);
        }
        for (const std::string& expr : exprs) {
            const Graph pattern = make_graph(expr);
            const auto witness = contains_induced(host, pattern);
            json row = {{"pattern", expr}};
            if (witness) {
                free = false;
                row["witness"] = witness->mapping;
            } else {
                row["witness"] = json();
            }
            results.push_back(std::move(row));
        }
        json out = {{"host", to_graph6(host)},
                    {"free", free},
                    {"results", std::move(results)}};
        std::cout << out.dump() << "\n";
        return 0;
    }

    if (enumerate->parsed()) {
        for (const Graph& g : enumerate_graphs(enum_n))
            std::cout << to_graph6(g) << "\n";
        return 0;
    }

    return 0;
}

} // namespace

int main(int argc, char** argv) {
    try {
        return run(argc, argv);
    } catch (const validation_error& e) {
        std::cerr << "error: validation: " << e.what() << "\n";
        return 1;
    } catch (const resource_limit_error& e) {
        std::cerr << "error: resource-limit: " << e.what() << "\n";
        return 2;
    } catch (const inconsistency_error& e) {
        std::cerr << "error: inconsistency: " << e.what() << "\n";
        return 3;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}
