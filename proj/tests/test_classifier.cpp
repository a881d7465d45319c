#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <random>

#include "bigenic/classifier.hpp"
#include "bigenic/errors.hpp"
#include "bigenic/families.hpp"
#include "bigenic/graph.hpp"
#include "bigenic/recognizers.hpp"

using namespace bigenic;

namespace {

Status status_of(const char* h1, const char* h2) {
    return classify(make_graph(h1), make_graph(h2)).status;
}

bool trace_has_rule(const Verdict& verdict, const std::string& rule) {
    return std::any_of(verdict.trace.begin(), verdict.trace.end(),
                       [&rule](const TraceEntry& e) {
                           return e.rule == rule;
                       });
}

} // namespace

TEST_CASE("rule list is complete and well formed") {
    const auto rules = kb_rules();
    CHECK(rules.size() >= 21);
    int poly = 0, hard = 0, open = 0;
    for (const auto& rule : rules) {
        CHECK_FALSE(rule.citation.empty());
        CHECK_FALSE(rule.description.empty());
        if (rule.kind == 'P')
            ++poly;
        else if (rule.kind == 'N')
            ++hard;
        else
            ++open;
    }
    CHECK(poly == 3);
    CHECK(hard == 14);
    CHECK(open == 4);
}

TEST_CASE("polynomial fixtures") {
    const Verdict p4_any = classify(make_graph("P4"), make_graph("K10"));
    CHECK(p4_any.status == Status::PolynomialTime);
    CHECK(trace_has_rule(p4_any, "P1"));
    CHECK(status_of("P4", "C5") == Status::PolynomialTime);
    CHECK(status_of("P1+P3", "co(3P2)") == Status::PolynomialTime);

    const Verdict t5ii =
        classify(make_graph("P5"), make_graph("co(P1+P4)"));
    CHECK(t5ii.status == Status::PolynomialTime);
    CHECK(trace_has_rule(t5ii, "P2"));
    CHECK(status_of("P5", "co(P2+P3)") == Status::PolynomialTime);
    CHECK(status_of("2P2", "K3") == Status::PolynomialTime);

    const Verdict claw_p5 = classify(make_graph("K1,3"), make_graph("P5"));
    CHECK(claw_p5.status == Status::PolynomialTime);
    CHECK(trace_has_rule(claw_p5, "P3"));
}

TEST_CASE("hardness fixtures") {
    const Verdict both_cycles = classify(make_graph("C5"), make_graph("C5"));
    CHECK(both_cycles.status == Status::NPComplete);
    CHECK(trace_has_rule(both_cycles, "N2"));

    const Verdict k15_c3 = classify(make_graph("K1,5"), make_graph("C3"));
    CHECK(k15_c3.status == Status::NPComplete);
    CHECK(trace_has_rule(k15_c3, "N9"));

    const Verdict claw_k4 = classify(make_graph("K1,3"), make_graph("K4"));
    CHECK(claw_k4.status == Status::NPComplete);
    CHECK(trace_has_rule(claw_k4, "N11"));

    const Verdict t3 = classify(make_graph("2P2"), make_graph("co(3P2)"));
    CHECK(t3.status == Status::NPComplete);
    CHECK(trace_has_rule(t3, "N12"));

    const Verdict t4 = classify(make_graph("2P2"), make_graph("co(T0,0,4)"));
    CHECK(t4.status == Status::NPComplete);
    CHECK(trace_has_rule(t4, "N13"));
    CHECK(trace_has_rule(t4, "N14"));

    // Schindl closure: both complements outside the path/T class.
    const Verdict schindl = classify(make_graph("2P2"), make_graph("P5"));
    CHECK(schindl.status == Status::NPComplete);
    CHECK(trace_has_rule(schindl, "N1"));

    CHECK(status_of("C4", "C5") == Status::NPComplete);
    CHECK(status_of("K1,3", "C4") == Status::NPComplete); // N10
    CHECK(status_of("P6", "K6") == Status::NPComplete);   // N8
    CHECK(status_of("4P1", "2P1+P2") == Status::NPComplete); // N7
}

TEST_CASE("open fixtures") {
    // Pairs on at most four vertices.
    CHECK(status_of("K1,3", "4P1") == Status::Open);
    CHECK(status_of("K1,3", "2P1+P2") == Status::Open);
    CHECK(status_of("C4", "4P1") == Status::Open);
    // Connected pairs on five vertices.
    CHECK(status_of("K1,3", "co(C4+P1)") == Status::Open);
    CHECK(status_of("P5", "co(C3+2P1)") == Status::Open);
    CHECK(status_of("P5", "co(C3+P2)") == Status::Open);
    CHECK(status_of("P5", "co(P1+2P2)") == Status::Open);
    // Claw versus long paths.
    const Verdict claw_p6 = classify(make_graph("K1,3"), make_graph("P6"));
    CHECK(claw_p6.status == Status::Open);
    CHECK(trace_has_rule(claw_p6, "O4"));
    CHECK(status_of("K1,3", "P9") == Status::Open);
    // Open families reached through the complement matcher.
    const Verdict fam = classify(make_graph("2P2"), make_graph("co(P6)"));
    CHECK(fam.status == Status::Open);
    CHECK(trace_has_rule(fam, "O3"));
}

TEST_CASE("documented non-firings") {
    // co(P6) fits inside T1,1,3 + P11 and contains none of the hard
    // complements, so the gadget-consequence rule stays quiet.
    const RuleFirings f =
        evaluate_rules(make_graph("2P2"), make_graph("co(P6)"));
    CHECK(std::none_of(f.hard.begin(), f.hard.end(),
                       [](const TraceEntry& e) { return e.rule == "N14"; }));

    // co(C4) = 2P2 is a linear forest, so the Schindl rule needs more.
    const RuleFirings c4 =
        evaluate_rules(make_graph("C4"), make_graph("C4"));
    CHECK(std::none_of(c4.hard.begin(), c4.hard.end(),
                       [](const TraceEntry& e) { return e.rule == "N1"; }));
    // (C4,C4) is still hard via the two-cycles rule.
    CHECK(status_of("C4", "C4") == Status::NPComplete);
}

TEST_CASE("unknown outside the knowledge base") {
    // Nothing covers claw pairs beyond the recorded open cases and the
    // parameterized hardness families.
    CHECK(status_of("K1,3", "4P1+P2") == Status::Unknown);
    const Verdict unknown =
        classify(make_graph("K1,3"), make_graph("4P1+P2"));
    CHECK(unknown.trace.empty());

    // The path families stop at P7 because P8 picks up an induced 3P2 and
    // the gadget-consequence rule takes over.
    const Verdict p8 = classify(make_graph("2P2"), make_graph("co(P8)"));
    CHECK(p8.status == Status::NPComplete);
    CHECK(trace_has_rule(p8, "N14"));
}

TEST_CASE("classification is symmetric and isomorphism invariant") {
    std::mt19937_64 rng(31);
    const auto graphs5 = enumerate_graphs(5);
    for (int round = 0; round < 120; ++round) {
        const Graph& a = graphs5[rng() % graphs5.size()];
        const Graph& b = graphs5[rng() % graphs5.size()];
        CHECK(classify(a, b).status == classify(b, a).status);
    }
    // Relabelled copies never change the verdict.
    for (int round = 0; round < 40; ++round) {
        const Graph& a = graphs5[rng() % graphs5.size()];
        const Graph& b = graphs5[rng() % graphs5.size()];
        std::vector<int> perm{0, 1, 2, 3, 4};
        std::shuffle(perm.begin(), perm.end(), rng);
        Graph shuffled(5);
        for (int u = 0; u < 5; ++u)
            for (int v = u + 1; v < 5; ++v)
                if (b.adjacent(u, v))
                    shuffled.add_edge(perm[static_cast<std::size_t>(u)],
                                      perm[static_cast<std::size_t>(v)]);
        CHECK(classify(a, b).status == classify(a, shuffled).status);
    }
}

TEST_CASE("verdict monotonicity on sampled quadruples") {
    std::mt19937_64 rng(57);
    std::vector<Graph> graphs;
    for (int n = 1; n <= 4; ++n)
        for (const Graph& g : enumerate_graphs(n))
            graphs.push_back(g);
    // Grow an induced supergraph by attaching fresh vertices with random
    // neighbourhoods.
    const auto grow = [&rng](const Graph& base, int extra) {
        const int n = base.vertex_count();
        Graph big(n + extra);
        for (int u = 0; u < n; ++u)
            for (int v = u + 1; v < n; ++v)
                if (base.adjacent(u, v))
                    big.add_edge(u, v);
        for (int w = n; w < n + extra; ++w)
            for (int u = 0; u < w; ++u)
                if (rng() & 1u)
                    big.add_edge(u, w);
        return big;
    };
    int hardness_lifts = 0;
    int poly_descents = 0;
    for (int round = 0; round < 600; ++round) {
        const Graph& small1 = graphs[rng() % graphs.size()];
        const Graph& small2 = graphs[rng() % graphs.size()];
        const Graph big1 = grow(small1, 1 + static_cast<int>(rng() % 2));
        const Graph big2 = grow(small2, 1 + static_cast<int>(rng() % 2));
        REQUIRE(contains_induced(big1, small1).has_value());
        REQUIRE(contains_induced(big2, small2).has_value());
        const Status small_status = classify(small1, small2).status;
        const Status big_status = classify(big1, big2).status;
        if (small_status == Status::NPComplete) {
            ++hardness_lifts;
            CHECK(big_status == Status::NPComplete);
        }
        if (big_status == Status::PolynomialTime) {
            ++poly_descents;
            CHECK(small_status == Status::PolynomialTime);
        }
    }
    CHECK(hardness_lifts >= 50);
    CHECK(poly_descents >= 10);
}

TEST_CASE("open entries never co-fire with polynomial or hardness rules") {
    std::vector<std::pair<Graph, Graph>> open_pairs = {
        {make_graph("K1,3"), make_graph("4P1")},
        {make_graph("K1,3"), make_graph("2P1+P2")},
        {make_graph("C4"), make_graph("4P1")},
        {make_graph("K1,3"), make_graph("co(C4+P1)")},
        {make_graph("P5"), make_graph("co(C3+2P1)")},
        {make_graph("P5"), make_graph("co(C3+P2)")},
        {make_graph("P5"), make_graph("co(P1+2P2)")},
        {make_graph("K1,3"), make_graph("P6")},
        {make_graph("K1,3"), make_graph("P7")},
    };
    for (const Graph& co_h : minimal_open_coH()) {
        open_pairs.emplace_back(make_graph("2P2"), complement(co_h));
        open_pairs.emplace_back(make_graph("P5"), complement(co_h));
    }
    for (const auto& [h1, h2] : open_pairs) {
        const RuleFirings firings = evaluate_rules(h1, h2);
        CHECK_FALSE(firings.open.empty());
        CHECK(firings.poly.empty());
        CHECK(firings.hard.empty());
    }
}

TEST_CASE("pairs (H,H) reproduce the single-graph dichotomy") {
    // (H,H)-free is just H-free, whose complexity is fully classified:
    // polynomial exactly when H embeds in P4 or P1+P3, NP-complete
    // otherwise. The rule engine must land on the right side for every
    // graph it can enumerate.
    const Graph p4 = make_graph("P4");
    const Graph p1_p3 = make_graph("P1+P3");
    for (int n = 1; n <= 6; ++n)
        for (const Graph& h : enumerate_graphs(n)) {
            const bool easy = contains_induced(p4, h).has_value() ||
                              contains_induced(p1_p3, h).has_value();
            const Status status = classify(h, h).status;
            CHECK(status ==
                  (easy ? Status::PolynomialTime : Status::NPComplete));
        }
}

TEST_CASE("no contradictions across any pair of graphs up to 6 vertices") {
    std::vector<Graph> graphs;
    for (int n = 1; n <= 6; ++n)
        for (const Graph& g : enumerate_graphs(n))
            graphs.push_back(g);
    int contradictions = 0;
    for (std::size_t i = 0; i < graphs.size(); ++i)
        for (std::size_t j = i; j < graphs.size(); ++j) {
            try {
                classify(graphs[i], graphs[j]);
            } catch (const inconsistency_error&) {
                ++contradictions;
            }
        }
    CHECK(contradictions == 0);
}

TEST_CASE("the 2P2 and P5 surveys coincide on small graphs") {
    const SurveyTable a = survey(make_graph("2P2"), 5);
    const SurveyTable b = survey(make_graph("P5"), 5);
    REQUIRE(a.rows.size() == b.rows.size());
    for (std::size_t i = 0; i < a.rows.size(); ++i) {
        CHECK(a.rows[i].graph6 == b.rows[i].graph6);
        CHECK(a.rows[i].status == b.rows[i].status);
    }
    CHECK(a.rows.size() == 1 + 2 + 4 + 11 + 34);
    // On five or fewer vertices the summarized results tile completely.
    const auto counts = a.counts();
    CHECK(counts.count(Status::Unknown) == 0);
}

TEST_CASE("survey tables round trip through CSV") {
    const SurveyTable table = survey(make_graph("2P2"), 4);
    const std::string csv = survey_to_csv(table);
    const SurveyTable back = survey_from_csv(csv);
    CHECK(back == table);
    CHECK(survey_to_csv(back) == csv);
    CHECK_THROWS_AS(survey_from_csv("not,a,table\n"), validation_error);
}

TEST_CASE("verdict JSON carries the citations") {
    const Graph h1 = make_graph("2P2");
    const Graph h2 = make_graph("co(3P2)");
    const auto doc = verdict_json(h1, h2, classify(h1, h2));
    CHECK(doc.at("status") == "NPComplete");
    CHECK(doc.at("h1_g6") == to_graph6(h1));
    bool cited = false;
    for (const auto& entry : doc.at("trace"))
        if (entry.at("rule") == "N12")
            cited = true;
    CHECK(cited);
}
