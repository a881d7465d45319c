#include "bigenic/classifier.hpp"

#include <algorithm>
#include <sstream>

#include "bigenic/errors.hpp"
#include "bigenic/families.hpp"
#include "bigenic/recognizers.hpp"

namespace bigenic {

std::string to_string(Status s) {
    switch (s) {
    case Status::PolynomialTime:
        return "PolynomialTime";
    case Status::NPComplete:
        return "NPComplete";
    case Status::Open:
        return "Open";
    case Status::Unknown:
        return "Unknown";
    }
    return {};
}

Status status_from_string(std::string_view text) {
    if (text == "PolynomialTime")
        return Status::PolynomialTime;
    if (text == "NPComplete")
        return Status::NPComplete;
    if (text == "Open")
        return Status::Open;
    if (text == "Unknown")
        return Status::Unknown;
    throw validation_error("unknown status '" + std::string(text) + "'");
}

namespace {

bool contains(const Graph& host, const Graph& pattern) {
    return contains_induced(host, pattern).has_value();
}

// a is an induced subgraph of b
bool sub_of(const Graph& a, const Graph& b) {
    return contains(b, a);
}

struct Fixtures {
    Graph p4 = make_graph("P4");
    Graph p5 = make_graph("P5");
    Graph p6 = make_graph("P6");
    Graph p9 = make_graph("P9");
    Graph p22 = make_graph("P22");
    Graph p1_p3 = make_graph("P1+P3");
    Graph p2p2 = make_graph("2P2");
    Graph c3 = make_graph("C3");
    Graph c4 = make_graph("C4");
    Graph k4 = make_graph("K4");
    Graph k6 = make_graph("K6");
    Graph claw = make_graph("K1,3");
    Graph k15 = make_graph("K1,5");
    Graph p4p1 = make_graph("4P1");
    Graph p2p1_p2 = make_graph("2P1+P2");
    Graph co_3p2 = make_graph("co(3P2)");
    Graph co_t022 = make_graph("co(T0,2,2)");
    Graph co_2c3 = make_graph("co(2C3)");
    Graph co_c3p4 = make_graph("co(C3+P4)");
    Graph co_2p4 = make_graph("co(2P4)");
    Graph co_t004 = make_graph("co(T0,0,4)");
    Graph c3_p4 = make_graph("C3+P4");
    Graph t3p2 = make_graph("3P2");
    Graph t2p4 = make_graph("2P4");
    Graph t113 = make_graph("T1,1,3");
    std::vector<Graph> poly_co_list = {
        make_graph("2P1+P3"), make_graph("P1+P4"),    make_graph("P2+P3"),
        make_graph("P5"),     make_graph("T0,0,1+P1"), make_graph("T0,1,1"),
        make_graph("T0,0,2")};
    std::vector<std::string> poly_co_names = {
        "2P1+P3", "P1+P4", "P2+P3", "P5", "T0,0,1+P1", "T0,1,1", "T0,0,2"};
    std::vector<std::string> poly_co_sources = {
        "Ma",   "BLM04/BBKRS05", "ML17", "HL",
        "KMP", "KMP",           "KMP"};
    std::vector<std::pair<Graph, Graph>> open4 = {
        {make_graph("K1,3"), make_graph("4P1")},
        {make_graph("K1,3"), make_graph("2P1+P2")},
        {make_graph("C4"), make_graph("4P1")}};
    std::vector<std::pair<Graph, Graph>> open5 = {
        {make_graph("K1,3"), make_graph("co(C4+P1)")},
        {make_graph("P5"), make_graph("co(C3+2P1)")},
        {make_graph("P5"), make_graph("co(C3+P2)")},
        {make_graph("P5"), make_graph("co(P1+2P2)")}};
    std::vector<std::string> open4_names = {"(K1,3, 4P1)", "(K1,3, 2P1+P2)",
                                            "(C4, 4P1)"};
    std::vector<std::string> open5_names = {
        "(K1,3, co(C4+P1))", "(P5, co(C3+2P1))", "(P5, co(C3+P2))",
        "(P5, co(P1+2P2))"};
};

const Fixtures& fx() {
    static const Fixtures f;
    return f;
}

// Lengths r >= rmin with an induced r-cycle in g.
std::vector<int> induced_cycle_lengths(const Graph& g, int rmin) {
    std::vector<int> out;
    for (int r = rmin; r <= g.vertex_count(); ++r)
        if (contains(g, make_graph("C" + std::to_string(r))))
            out.push_back(r);
    return out;
}

// Closure rule for a hardness axiom with a finite forbidden set: it applies
// to the pair exactly when some member embeds into each of the two graphs.
struct MemberHit {
    bool fires = false;
    std::string left, right;
};

MemberHit closure_hit(const std::vector<const Graph*>& members,
                      const std::vector<std::string>& names, const Graph& a,
                      const Graph& b) {
    MemberHit hit;
    for (std::size_t i = 0; i < members.size(); ++i)
        if (sub_of(*members[i], a)) {
            hit.left = names[i];
            for (std::size_t j = 0; j < members.size(); ++j)
                if (sub_of(*members[j], b)) {
                    hit.right = names[j];
                    hit.fires = true;
                    return hit;
                }
            return hit;
        }
    return hit;
}

// Theorem-style condition used by rule N14 on the second graph of the
// pair: its complement contains C3+P4, 3P2 or 2P4, or does not embed in
// T_{1,1,3} + P_{2n-1} with n the vertex count.
std::string hardness_side_condition(const Graph& h) {
    const Graph co_h = complement(h);
    if (contains(co_h, fx().c3_p4))
        return "co(H) contains C3+P4";
    if (contains(co_h, fx().t3p2))
        return "co(H) contains 3P2";
    if (contains(co_h, fx().t2p4))
        return "co(H) contains 2P4";
    const int n = h.vertex_count();
    const int path_len = std::max(1, 2 * n - 1);
    if (fx().t113.vertex_count() + path_len <= Graph::max_vertices) {
        Graph host = disjoint_union(
            fx().t113, make_graph("P" + std::to_string(path_len)));
        if (!sub_of(co_h, host))
            return "co(H) not inside T1,1,3+P" + std::to_string(path_len);
        return {};
    }
    // Same test componentwise when the literal host would not fit in 64
    // vertices: the path components always fit in P_{2n-1}, so only the
    // non-path components matter.
    int non_path = 0;
    for (const Graph& comp : components(co_h)) {
        if (is_path_graph(comp))
            continue;
        ++non_path;
        if (non_path > 1 || !sub_of(comp, fx().t113))
            return "co(H) not inside T1,1,3+P" + std::to_string(path_len);
    }
    return {};
}

struct Firing {
    bool fires = false;
    std::string detail;
};

using RulePredicate = Firing (*)(const Graph&, const Graph&);

struct Rule {
    const char* id;
    char kind;
    const char* citation;
    const char* description;
    RulePredicate predicate;
};

Firing fire(std::string detail) {
    return {true, std::move(detail)};
}

Firing no_fire() {
    return {};
}

// --- polynomial rules ---

Firing rule_p1(const Graph& a, const Graph&) {
    if (sub_of(a, fx().p4))
        return fire("one forbidden graph embeds in P4");
    if (sub_of(a, fx().p1_p3))
        return fire("one forbidden graph embeds in P1+P3");
    return no_fire();
}

Firing rule_p2(const Graph& a, const Graph& b) {
    if (!sub_of(a, fx().p5))
        return no_fire();
    const Graph co_b = complement(b);
    for (std::size_t i = 0; i < fx().poly_co_list.size(); ++i)
        if (sub_of(co_b, fx().poly_co_list[i]))
            return fire("co(H) embeds in " + fx().poly_co_names[i] + " [" +
                        fx().poly_co_sources[i] + "]");
    if (co_b.edge_count() <= 1)
        return fire("co(H) embeds in sP1+P2 [ML17]");
    return no_fire();
}

Firing rule_p3(const Graph& a, const Graph& b) {
    if (sub_of(a, fx().claw) && sub_of(b, fx().p5))
        return fire("pair embeds in (K1,3, P5)");
    return no_fire();
}

// --- hardness rules ---

Firing rule_n1(const Graph& a, const Graph& b) {
    if (!in_class_T(complement(a), true) && !in_class_T(complement(b), true))
        return fire("both complements lie outside the path/T class");
    return no_fire();
}

Firing rule_n2(const Graph& a, const Graph& b) {
    if (has_cycle(a) && has_cycle(b))
        return fire("both forbidden graphs contain a cycle");
    return no_fire();
}

Firing rule_n3(const Graph& a, const Graph& b) {
    if (contains(a, fx().claw) && contains(b, fx().claw))
        return fire("both forbidden graphs contain an induced K1,3");
    return no_fire();
}

Firing closure_rule(const std::vector<const Graph*>& members,
                    const std::vector<std::string>& names, const Graph& a,
                    const Graph& b) {
    const MemberHit hit = closure_hit(members, names, a, b);
    if (hit.fires)
        return fire(hit.left + " embeds in H1, " + hit.right +
                    " embeds in H2");
    return no_fire();
}

Firing rule_n4(const Graph& a, const Graph& b) {
    return closure_rule({&fx().p22, &fx().c3}, {"P22", "C3"}, a, b);
}

Firing rule_n5(const Graph& a, const Graph& b) {
    return closure_rule({&fx().p9, &fx().c4}, {"P9", "C4"}, a, b);
}

// Axiom family {X, Cr} for all r >= rmin: a common witness r is required
// when both sides rely on the cycle member.
Firing cycle_family_rule(const Graph& anchor, const std::string& anchor_name,
                         int rmin, const Graph& a, const Graph& b) {
    const bool xa = contains(a, anchor);
    const bool xb = contains(b, anchor);
    if (xa && xb)
        return fire(anchor_name + " embeds in both");
    const auto ca = induced_cycle_lengths(a, rmin);
    const auto cb = induced_cycle_lengths(b, rmin);
    if (xa && !cb.empty())
        return fire(anchor_name + " embeds in H1, C" +
                    std::to_string(cb.front()) + " embeds in H2");
    if (xb && !ca.empty())
        return fire("C" + std::to_string(ca.front()) +
                    " embeds in H1, " + anchor_name + " embeds in H2");
    for (int r : ca)
        if (std::find(cb.begin(), cb.end(), r) != cb.end())
            return fire("C" + std::to_string(r) + " embeds in both");
    return no_fire();
}

Firing rule_n6(const Graph& a, const Graph& b) {
    return cycle_family_rule(fx().p2p2, "2P2", 5, a, b);
}

Firing rule_n7(const Graph& a, const Graph& b) {
    return closure_rule({&fx().p4p1, &fx().p2p1_p2}, {"4P1", "2P1+P2"}, a,
                        b);
}

Firing rule_n8(const Graph& a, const Graph& b) {
    return closure_rule({&fx().p6, &fx().k6}, {"P6", "K6"}, a, b);
}

Firing rule_n9(const Graph& a, const Graph& b) {
    return closure_rule({&fx().k15, &fx().c3}, {"K1,5", "C3"}, a, b);
}

Firing rule_n10(const Graph& a, const Graph& b) {
    return cycle_family_rule(fx().claw, "K1,3", 4, a, b);
}

Firing rule_n11(const Graph& a, const Graph& b) {
    return closure_rule({&fx().claw, &fx().k4}, {"K1,3", "K4"}, a, b);
}

Firing rule_n12(const Graph& a, const Graph& b) {
    return closure_rule({&fx().p2p2, &fx().co_3p2, &fx().co_t022},
                        {"2P2", "co(3P2)", "co(T0,2,2)"}, a, b);
}

Firing rule_n13(const Graph& a, const Graph& b) {
    return closure_rule(
        {&fx().p2p2, &fx().co_2c3, &fx().co_c3p4, &fx().co_2p4,
         &fx().co_t004},
        {"2P2", "co(2C3)", "co(C3+P4)", "co(2P4)", "co(T0,0,4)"}, a, b);
}

Firing rule_n14(const Graph& a, const Graph& b) {
    if (!sub_of(fx().p2p2, a))
        return no_fire();
    std::string cond = hardness_side_condition(b);
    if (!cond.empty())
        return fire("2P2 embeds in H1; " + cond);
    return no_fire();
}

// --- open entries ---

Firing pair_list_rule(const std::vector<std::pair<Graph, Graph>>& pairs,
                      const std::vector<std::string>& names, const Graph& a,
                      const Graph& b) {
    for (std::size_t i = 0; i < pairs.size(); ++i)
        if (is_isomorphic(a, pairs[i].first) &&
            is_isomorphic(b, pairs[i].second))
            return fire("pair is " + names[i]);
    return no_fire();
}

Firing rule_o1(const Graph& a, const Graph& b) {
    return pair_list_rule(fx().open4, fx().open4_names, a, b);
}

Firing rule_o2(const Graph& a, const Graph& b) {
    return pair_list_rule(fx().open5, fx().open5_names, a, b);
}

Firing rule_o3(const Graph& a, const Graph& b) {
    if (!is_isomorphic(a, fx().p2p2) && !is_isomorphic(a, fx().p5))
        return no_fire();
    const auto match = match_open_pattern(complement(b));
    if (!match)
        return no_fire();
    return fire("co(H) matches open family " +
                std::to_string(match->family));
}

Firing rule_o4(const Graph& a, const Graph& b) {
    if (is_isomorphic(a, fx().claw) && is_path_graph(b) &&
        b.vertex_count() >= 6)
        return fire("pair is (K1,3, P" + std::to_string(b.vertex_count()) +
                    ")");
    return no_fire();
}

const std::vector<Rule>& rules() {
    static const std::vector<Rule> table = {
        {"P1", 'P', "KKTW01",
         "Colouring on H-free graphs is polynomial when H embeds in P4 or "
         "P1+P3",
         rule_p1},
        {"P2", 'P', "Ma/BLM04/BBKRS05/ML17/HL/KMP",
         "Colouring on (P5,H)-free graphs is polynomial when co(H) embeds "
         "in 2P1+P3, P1+P4, P2+P3, P5, T0,0,1+P1, T0,1,1, T0,0,2 or sP1+P2",
         rule_p2},
        {"P3", 'P', "Ma13",
         "Colouring on (K1,3,P5)-free graphs is polynomial", rule_p3},
        {"N1", 'N', "Sc05",
         "Colouring is NP-complete when every forbidden graph has its "
         "complement outside the class of path/T-component graphs",
         rule_n1},
        {"N2", 'N', "EHK98",
         "3-Colouring is NP-complete when both forbidden graphs contain a "
         "cycle",
         rule_n2},
        {"N3", 'N', "Ho81",
         "3-Colouring is NP-complete when both forbidden graphs contain an "
         "induced K1,3",
         rule_n3},
        {"N4", 'N', "HJP14",
         "4-Colouring is NP-complete for (P22,C3)-free graphs", rule_n4},
        {"N5", 'N', "GHP",
         "Colouring is NP-complete for (P9,C4)-free graphs", rule_n5},
        {"N6", 'N', "KKTW01",
         "Colouring is NP-complete for (2P2,Cr)-free graphs for all r >= 5",
         rule_n6},
        {"N7", 'N', "KKTW01",
         "Colouring is NP-complete for (4P1,2P1+P2)-free graphs", rule_n7},
        {"N8", 'N', "Hu16/GJPS",
         "5-Colouring is NP-complete for P6-free graphs and K6 is not "
         "5-colourable, so (P6,K6)-free Colouring is NP-complete",
         rule_n8},
        {"N9", 'N', "MF96",
         "3-Colouring is NP-complete for (K1,5,C3)-free graphs", rule_n9},
        {"N10", 'N', "KKTW01",
         "3-Colouring is NP-complete for (K1,3,Cr)-free graphs for all "
         "r >= 4",
         rule_n10},
        {"N11", 'N', "KKTW01",
         "Colouring is NP-complete for (K1,3,K4)-free graphs", rule_n11},
        {"N12", 'N', "GH09 gadget, complete bipartite variant",
         "Colouring is NP-complete for (2P2,co(3P2),co(T0,2,2))-free "
         "graphs; witnessed by the G1' reduction (verify lemma3)",
         rule_n12},
        {"N13", 'N', "GH09/GP14 gadget, complete split variant",
         "Colouring is NP-complete for "
         "(2P2,co(2C3),co(C3+P4),co(2P4),co(T0,0,4))-free graphs; "
         "witnessed by the G2' reduction (verify lemma4)",
         rule_n13},
        {"N14", 'N', "gadget consequences + Sc05",
         "Colouring is NP-complete for (2P2,H)-free graphs when co(H) "
         "contains C3+P4, 3P2 or 2P4, or co(H) is not an induced subgraph "
         "of T1,1,3+P(2n-1)",
         rule_n14},
        {"O1", 'O', "LM15",
         "open pairs of graphs on at most four vertices", rule_o1},
        {"O2", 'O', "KMP/ML17",
         "open pairs of connected graphs on at most five vertices",
         rule_o2},
        {"O3", 'O', "open families for (2P2,H) and (P5,H)",
         "complexity of Colouring is open when one forbidden graph is 2P2 "
         "or P5 and co(H) matches one of the six open families",
         rule_o3},
        {"O4", 'O', "open; Ma13 covers t = 5",
         "complexity of Colouring is open for (K1,3,Pt)-free graphs for "
         "all t >= 6",
         rule_o4},
    };
    return table;
}

} // namespace

std::vector<RuleInfo> kb_rules() {
    std::vector<RuleInfo> out;
    for (const Rule& rule : rules())
        out.push_back({rule.id, rule.kind, rule.citation, rule.description});
    return out;
}

RuleFirings evaluate_rules(const Graph& h1, const Graph& h2) {
    RuleFirings firings;
    for (const Rule& rule : rules()) {
        Firing result = rule.predicate(h1, h2);
        if (!result.fires) {
            Firing swapped = rule.predicate(h2, h1);
            if (swapped.fires) {
                result.fires = true;
                result.detail = swapped.detail + " (H1/H2 swapped)";
            }
        }
        if (!result.fires)
            continue;
        TraceEntry entry{rule.id, rule.citation, result.detail};
        if (rule.kind == 'P')
            firings.poly.push_back(std::move(entry));
        else if (rule.kind == 'N')
            firings.hard.push_back(std::move(entry));
        else
            firings.open.push_back(std::move(entry));
    }
    return firings;
}

Verdict classify(const Graph& h1, const Graph& h2) {
    const RuleFirings firings = evaluate_rules(h1, h2);
    if (!firings.poly.empty() && !firings.hard.empty()) {
        std::string message =
            "contradictory derivation: polynomial rules {";
        for (const auto& e : firings.poly)
            message += e.rule + " ";
        message += "} and hardness rules {";
        for (const auto& e : firings.hard)
            message += e.rule + " ";
        message += "} fired together";
        throw inconsistency_error(message);
    }
    if (!firings.open.empty())
        return {Status::Open, firings.open};
    if (!firings.poly.empty())
        return {Status::PolynomialTime, firings.poly};
    if (!firings.hard.empty())
        return {Status::NPComplete, firings.hard};
    return {Status::Unknown, {}};
}

nlohmann::json verdict_json(const Graph& h1, const Graph& h2,
                            const Verdict& verdict) {
    nlohmann::json trace = nlohmann::json::array();
    for (const auto& entry : verdict.trace)
        trace.push_back({{"rule", entry.rule},
                         {"citation", entry.citation},
                         {"detail", entry.detail}});
    return {{"h1_g6", to_graph6(h1)},
            {"h2_g6", to_graph6(h2)},
            {"status", to_string(verdict.status)},
            {"trace", std::move(trace)}};
}

std::map<Status, int> SurveyTable::counts() const {
    std::map<Status, int> out;
    for (const SurveyRow& row : rows)
        ++out[row.status];
    return out;
}

SurveyTable survey(const Graph& forbidden, int max_n) {
    SurveyTable table;
    table.forbidden_graph6 = to_graph6(forbidden);
    for (int n = 1; n <= max_n; ++n) {
        for (const Graph& h : enumerate_graphs(n)) {
            const Verdict verdict = classify(forbidden, h);
            SurveyRow row;
            row.n = n;
            row.graph6 = to_graph6(h);
            row.status = verdict.status;
            for (const auto& entry : verdict.trace)
                row.rules.push_back(entry.rule);
            table.rows.push_back(std::move(row));
        }
    }
    return table;
}

std::string survey_to_csv(const SurveyTable& table) {
    std::string out = "forbidden,n,graph6,status,rules\n";
    for (const SurveyRow& row : table.rows) {
        out += table.forbidden_graph6 + "," + std::to_string(row.n) + "," +
               row.graph6 + "," + to_string(row.status) + ",";
        for (std::size_t i = 0; i < row.rules.size(); ++i) {
            if (i)
                out += ";";
            out += row.rules[i];
        }
        out += "\n";
    }
    return out;
}

SurveyTable survey_from_csv(std::string_view text) {
    std::istringstream in{std::string(text)};
    std::string line;
    if (!std::getline(in, line) || line != "forbidden,n,graph6,status,rules")
        throw validation_error("survey CSV missing its header line");
    SurveyTable table;
    while (std::getline(in, line)) {
        if (line.empty())
            continue;
        std::vector<std::string> fields;
        std::size_t start = 0;
        for (int f = 0; f < 4; ++f) {
            const std::size_t comma = line.find(',', start);
            if (comma == std::string::npos)
                throw validation_error("survey CSV row with missing fields: " +
                                       line);
            fields.push_back(line.substr(start, comma - start));
            start = comma + 1;
        }
        fields.push_back(line.substr(start));
        if (table.rows.empty())
            table.forbidden_graph6 = fields[0];
        else if (table.forbidden_graph6 != fields[0])
            throw validation_error(
                "survey CSV mixes forbidden graphs in one table");
        SurveyRow row;
        row.n = std::stoi(fields[1]);
        row.graph6 = fields[2];
        row.status = status_from_string(fields[3]);
        std::size_t pos = 0;
        while (pos < fields[4].size()) {
            const std::size_t semi = fields[4].find(';', pos);
            const std::size_t end =
                semi == std::string::npos ? fields[4].size() : semi;
            if (end > pos)
                row.rules.push_back(fields[4].substr(pos, end - pos));
            pos = end + 1;
        }
        table.rows.push_back(std::move(row));
    }
    return table;
}

nlohmann::json survey_json(const SurveyTable& table) {
    nlohmann::json rows = nlohmann::json::array();
    for (const SurveyRow& row : table.rows)
        rows.push_back({{"n", row.n},
                        {"graph6", row.graph6},
                        {"status", to_string(row.status)},
                        {"rules", row.rules}});
    nlohmann::json counts = nlohmann::json::object();
    for (const auto& [status, count] : table.counts())
        counts[to_string(status)] = count;
    return {{"forbidden_g6", table.forbidden_graph6},
            {"counts", std::move(counts)},
            {"rows", std::move(rows)}};
}

} // namespace bigenic
