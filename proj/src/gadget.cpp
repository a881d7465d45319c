#include "bigenic/gadget.hpp"

#include <algorithm>
#include <set>
#include <sstream>

#include "bigenic/errors.hpp"
#include "bigenic/recognizers.hpp"

namespace bigenic {

void validate(const NaeInstance& inst) {
    if (inst.variable_count < 0)
        throw validation_error("negative variable count");
    for (std::size_t j = 0; j < inst.clauses.size(); ++j) {
        const auto& clause = inst.clauses[j];
        for (int v : clause)
            if (v < 1 || v > inst.variable_count)
                throw validation_error(
                    "clause " + std::to_string(j + 1) + ": variable " +
                    std::to_string(v) + " out of range 1.." +
                    std::to_string(inst.variable_count));
        if (clause[0] == clause[1] || clause[1] == clause[2] ||
            clause[0] == clause[2])
            throw validation_error(
                "clause " + std::to_string(j + 1) +
                ": a variable appears more than once");
    }
}

NaeInstance parse_nae(std::string_view text) {
    std::istringstream in{std::string(text)};
    std::string line;
    NaeInstance inst;
    bool have_header = false;
    int declared_clauses = 0;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        std::istringstream ls(line);
        std::string first;
        if (!(ls >> first))
            continue; // blank line
        if (first == "c")
            continue;
        if (!have_header) {
            if (first != "p")
                throw validation_error("line " + std::to_string(line_no) +
                                       ": expected header 'p nae <n> <m>'");
            std::string kind;
            if (!(ls >> kind >> inst.variable_count >> declared_clauses) ||
                kind != "nae")
                throw validation_error("line " + std::to_string(line_no) +
                                       ": malformed header, expected "
                                       "'p nae <n> <m>'");
            if (inst.variable_count < 0 || declared_clauses < 0)
                throw validation_error("line " + std::to_string(line_no) +
                                       ": negative counts in header");
            have_header = true;
            continue;
        }
        std::array<int, 3> clause{};
        int terminator = -1;
        std::istringstream cs(line);
        if (!(cs >> clause[0] >> clause[1] >> clause[2] >> terminator) ||
            terminator != 0)
            throw validation_error("line " + std::to_string(line_no) +
                                   ": expected clause 'v1 v2 v3 0'");
        std::sort(clause.begin(), clause.end());
        inst.clauses.push_back(clause);
    }
    if (!have_header)
        throw validation_error("missing header 'p nae <n> <m>'");
    if (static_cast<int>(inst.clauses.size()) != declared_clauses)
        throw validation_error(
            "header declares " + std::to_string(declared_clauses) +
            " clauses but " + std::to_string(inst.clauses.size()) +
            " were given");
    validate(inst);
    return inst;
}

std::string format_nae(const NaeInstance& inst) {
    std::string out = "p nae " + std::to_string(inst.variable_count) + " " +
                      std::to_string(inst.clauses.size()) + "\n";
    for (const auto& clause : inst.clauses)
        out += std::to_string(clause[0]) + " " + std::to_string(clause[1]) +
               " " + std::to_string(clause[2]) + " 0\n";
    return out;
}

std::string to_string(const Role& role) {
    switch (role.kind) {
    case Role::Kind::X:
        return "x" + std::to_string(role.index);
    case Role::Kind::C:
        return "C" + std::to_string(role.index);
    case Role::Kind::Cp:
        return "C" + std::to_string(role.index) + "'";
    case Role::Kind::K:
        return "k" + std::to_string(role.index);
    }
    return {};
}

std::string to_string(GadgetVariant v) {
    switch (v) {
    case GadgetVariant::G1:
        return "g1";
    case GadgetVariant::G2:
        return "g2";
    case GadgetVariant::G1Prime:
        return "g1p";
    case GadgetVariant::G2Prime:
        return "g2p";
    }
    return {};
}

namespace {

GadgetGraph build_base(const NaeInstance& inst, bool x_clique) {
    validate(inst);
    const int n = inst.variable_count;
    const int m = static_cast<int>(inst.clauses.size());
    const int total = n + 2 * m;
    if (total + 2 * n > Graph::max_vertices)
        throw resource_limit_error(
            "gadget for n=" + std::to_string(n) + ", m=" +
            std::to_string(m) + " would exceed " +
            std::to_string(Graph::max_vertices) + " vertices");

    GadgetGraph g;
    g.instance = inst;
    g.variant = x_clique ? GadgetVariant::G2 : GadgetVariant::G1;
    g.colour_budget = 2 * n;
    g.graph = Graph(total);
    g.roles.reserve(static_cast<std::size_t>(total));
    g.lists.lists.assign(static_cast<std::size_t>(total), {});

    for (int i = 1; i <= n; ++i) {
        g.roles.push_back({Role::Kind::X, i});
        g.lists.lists[static_cast<std::size_t>(i - 1)] = {2 * i - 1, 2 * i};
    }
    for (int j = 1; j <= m; ++j)
        g.roles.push_back({Role::Kind::C, j});
    for (int j = 1; j <= m; ++j)
        g.roles.push_back({Role::Kind::Cp, j});

    for (int j = 0; j < m; ++j) {
        const auto& clause = inst.clauses[static_cast<std::size_t>(j)];
        std::vector<int> odd, even;
        for (int v : clause) {
            odd.push_back(2 * v - 1);
            even.push_back(2 * v);
        }
        g.lists.lists[static_cast<std::size_t>(n + j)] = odd;
        g.lists.lists[static_cast<std::size_t>(n + m + j)] = even;
    }

    // Every x-type vertex is joined to every C-type vertex.
    for (int i = 0; i < n; ++i)
        for (int c = n; c < total; ++c)
            g.graph.add_edge(i, c);
    if (x_clique)
        for (int a = 0; a < n; ++a)
            for (int b = a + 1; b < n; ++b)
                g.graph.add_edge(a, b);
    return g;
}

} // namespace

GadgetGraph build_g1(const NaeInstance& inst) {
    return build_base(inst, false);
}

GadgetGraph build_g2(const NaeInstance& inst) {
    return build_base(inst, true);
}

GadgetGraph extend_with_clique(const GadgetGraph& g) {
    if (g.variant != GadgetVariant::G1 && g.variant != GadgetVariant::G2)
        throw validation_error("extend_with_clique expects a G1 or G2 gadget");
    const int base = g.graph.vertex_count();
    const int n = g.instance.variable_count;
    const int palette = 2 * n;

    GadgetGraph out = g;
    out.variant = g.variant == GadgetVariant::G1 ? GadgetVariant::G1Prime
                                                 : GadgetVariant::G2Prime;
    out.graph = Graph(base + palette);
    for (int a = 0; a < base; ++a)
        for (int b = a + 1; b < base; ++b)
            if (g.graph.adjacent(a, b))
                out.graph.add_edge(a, b);
    for (int l = 1; l <= palette; ++l) {
        out.roles.push_back({Role::Kind::K, l});
        out.lists.lists.emplace_back();
    }
    for (int a = 0; a < palette; ++a)
        for (int b = a + 1; b < palette; ++b)
            out.graph.add_edge(base + a, base + b);
    // k_l ~ u exactly when colour l is not on u's list.
    for (int l = 1; l <= palette; ++l)
        for (int u = 0; u < base; ++u) {
            const auto& list = g.lists.lists[static_cast<std::size_t>(u)];
            if (std::find(list.begin(), list.end(), l) == list.end())
                out.graph.add_edge(base + l - 1, u);
        }
    return out;
}

bool StructureReport::all_pass() const {
    return std::all_of(checks.begin(), checks.end(),
                       [](const StructureCheck& c) { return c.pass; });
}

namespace {

std::vector<int> vertices_of_kind(const GadgetGraph& g, Role::Kind kind,
                                  Role::Kind second = Role::Kind::X,
                                  bool use_second = false) {
    std::vector<int> out;
    for (int v = 0; v < g.graph.vertex_count(); ++v) {
        const auto k = g.roles[static_cast<std::size_t>(v)].kind;
        if (k == kind || (use_second && k == second))
            out.push_back(v);
    }
    return out;
}

bool all_pairs(const Graph& g, const std::vector<int>& verts, bool adjacent) {
    for (std::size_t a = 0; a < verts.size(); ++a)
        for (std::size_t b = a + 1; b < verts.size(); ++b)
            if (g.adjacent(verts[a], verts[b]) != adjacent)
                return false;
    return true;
}

bool no_cross_edges(const Graph& g, const std::vector<int>& left,
                    const std::vector<int>& right) {
    for (int a : left)
        for (int b : right)
            if (g.adjacent(a, b))
                return false;
    return true;
}

bool all_cross_edges(const Graph& g, const std::vector<int>& left,
                     const std::vector<int>& right) {
    for (int a : left)
        for (int b : right)
            if (!g.adjacent(a, b))
                return false;
    return true;
}

} // namespace

StructureReport gadget_structure_report(const GadgetGraph& g) {
    if (g.variant != GadgetVariant::G1Prime &&
        g.variant != GadgetVariant::G2Prime)
        throw validation_error(
            "structure report expects a G1' or G2' gadget");
    const bool split = g.variant == GadgetVariant::G2Prime;
    const Graph& graph = g.graph;
    const Graph co = complement(graph);
    const auto xs = vertices_of_kind(g, Role::Kind::X);
    const auto cs =
        vertices_of_kind(g, Role::Kind::C, Role::Kind::Cp, true);
    const auto ks = vertices_of_kind(g, Role::Kind::K);

    StructureReport report;
    auto add = [&report](std::string name, bool pass) {
        report.checks.push_back({std::move(name), pass});
    };

    // Primal side.
    add("x_C_complete_bipartite", all_cross_edges(graph, xs, cs));
    add(split ? "x_clique" : "x_independent", all_pairs(graph, xs, split));
    add("C_independent", all_pairs(graph, cs, false));
    add("k_clique", all_pairs(graph, ks, true));

    bool edge_rule = true;
    for (int l = 1; l <= g.colour_budget && edge_rule; ++l) {
        const int kv = static_cast<int>(
            xs.size() + cs.size()) + l - 1;
        for (int u = 0;
             u < static_cast<int>(xs.size() + cs.size()) && edge_rule;
             ++u) {
            const auto& list = g.lists.lists[static_cast<std::size_t>(u)];
            const bool listed =
                std::find(list.begin(), list.end(), l) != list.end();
            if (graph.adjacent(kv, u) != !listed)
                edge_rule = false;
        }
    }
    add("k_edge_rule_l_not_in_list", edge_rule);

    // Complement side, as used in the freeness arguments.
    add(split ? "co_x_independent" : "co_x_clique",
        all_pairs(co, xs, !split));
    add("co_C_clique", all_pairs(co, cs, true));
    add("co_k_independent", all_pairs(co, ks, false));
    add("co_x_C_nonadjacent", no_cross_edges(co, xs, cs));

    if (split) {
        // x and k types together induce disjoint P3s in the complement:
        // k_{2i-1} - x_i - k_{2i} for each variable.
        std::vector<int> xk = xs;
        xk.insert(xk.end(), ks.begin(), ks.end());
        bool p3s = true;
        const auto comps = components(induced_subgraph(co, xk));
        for (const Graph& comp : comps)
            if (!(comp.vertex_count() == 3 && is_path_graph(comp)))
                p3s = false;
        add("co_xk_disjoint_P3s", p3s);

        bool xdeg2 = true;
        for (int x : xs)
            if (co.degree(x) != 2)
                xdeg2 = false;
        add("co_x_degree_2", xdeg2);
    }

    std::set<std::array<int, 3>> distinct(g.instance.clauses.begin(),
                                          g.instance.clauses.end());
    report.duplicate_clauses = distinct.size() != g.instance.clauses.size();
    return report;
}

} // namespace bigenic
