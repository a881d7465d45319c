#include "bigenic/lemmas.hpp"

#include <algorithm>
#include <chrono>
#include <limits>
#include <random>

#include "bigenic/errors.hpp"
#include "bigenic/families.hpp"
#include "bigenic/solvers.hpp"

namespace bigenic {

bool VerificationReport::all_hold() const {
    return std::all_of(claims.begin(), claims.end(),
                       [](const Claim& c) { return c.holds; });
}

namespace {

nlohmann::json assignment_json(const Assignment& a) {
    nlohmann::json values = nlohmann::json::array();
    for (bool b : a.value)
        values.push_back(b);
    return {{"assignment", values}};
}

nlohmann::json colouring_json(const Colouring& c) {
    return {{"colouring", c.colour}};
}

nlohmann::json witness_json(const Witness& w) {
    return {{"mapping", w.mapping}};
}

using Clock = std::chrono::steady_clock;

std::int64_t ms_since(Clock::time_point start) {
    return std::chrono::duration_cast<std::chrono::milliseconds>(
               Clock::now() - start)
        .count();
}

// A biconditional claim holds when both sides agree; the counter-witness is
// whichever concrete object exists on the true side.
Claim equivalence_claim(const std::string& name, bool left, bool right,
                        nlohmann::json left_witness,
                        nlohmann::json right_witness) {
    Claim claim;
    claim.name = name;
    claim.holds = left == right;
    if (!claim.holds)
        claim.witness = left ? std::move(left_witness)
                             : std::move(right_witness);
    return claim;
}

} // namespace

VerificationReport verify_lemma1(const NaeInstance& inst) {
    const auto start = Clock::now();
    VerificationReport report;
    report.lemma = "lemma1";
    report.instance = inst;

    const auto assignment = solve_nae(inst);
    const GadgetGraph g1 = build_g1(inst);
    const GadgetGraph g2 = build_g2(inst);
    const auto c1 = solve_list_colouring(g1.graph, g1.lists);
    const auto c2 = solve_list_colouring(g2.graph, g2.lists);

    const nlohmann::json nae_w =
        assignment ? assignment_json(*assignment) : nlohmann::json();
    report.claims.push_back(equivalence_claim(
        "nae_sat_iff_g1_list_colourable", assignment.has_value(),
        c1.has_value(), nae_w, c1 ? colouring_json(*c1) : nlohmann::json()));
    report.claims.push_back(equivalence_claim(
        "nae_sat_iff_g2_list_colourable", assignment.has_value(),
        c2.has_value(), nae_w, c2 ? colouring_json(*c2) : nlohmann::json()));

    report.elapsed_ms = ms_since(start);
    return report;
}

VerificationReport verify_lemma2(const NaeInstance& inst) {
    const auto start = Clock::now();
    VerificationReport report;
    report.lemma = "lemma2";
    report.instance = inst;

    const auto assignment = solve_nae(inst);
    const GadgetGraph g1p = extend_with_clique(build_g1(inst));
    const GadgetGraph g2p = extend_with_clique(build_g2(inst));
    const int budget = 2 * inst.variable_count;
    const auto c1 = solve_k_colouring(g1p.graph, budget);
    const auto c2 = solve_k_colouring(g2p.graph, budget);

    const nlohmann::json nae_w =
        assignment ? assignment_json(*assignment) : nlohmann::json();
    report.claims.push_back(equivalence_claim(
        "nae_sat_iff_g1p_2n_colourable", assignment.has_value(),
        c1.has_value(), nae_w, c1 ? colouring_json(*c1) : nlohmann::json()));
    report.claims.push_back(equivalence_claim(
        "nae_sat_iff_g2p_2n_colourable", assignment.has_value(),
        c2.has_value(), nae_w, c2 ? colouring_json(*c2) : nlohmann::json()));

    report.elapsed_ms = ms_since(start);
    return report;
}

namespace {

VerificationReport freeness_report(const std::string& lemma,
                                   const NaeInstance& inst,
                                   const GadgetGraph& gadget,
                                   const std::vector<std::string>& patterns) {
    const auto start = Clock::now();
    VerificationReport report;
    report.lemma = lemma;
    report.instance = inst;

    const Graph& host = gadget.graph;
    const Graph co_host = complement(host);
    for (const std::string& expr : patterns) {
        const Graph pattern = make_graph(expr);
        const Graph co_pattern = complement(pattern);

        const auto direct = contains_induced(host, pattern);
        Claim direct_claim;
        direct_claim.name = expr + "_free";
        direct_claim.holds = !direct.has_value();
        if (direct)
            direct_claim.witness = witness_json(*direct);
        report.claims.push_back(std::move(direct_claim));

        const auto via_co = contains_induced(co_host, co_pattern);
        Claim agree;
        agree.name = expr + "_direct_vs_complement_agree";
        agree.holds = direct.has_value() == via_co.has_value();
        if (!agree.holds)
            agree.witness = direct ? witness_json(*direct)
                                   : witness_json(*via_co);
        report.claims.push_back(std::move(agree));
    }
    report.elapsed_ms = ms_since(start);
    return report;
}

} // namespace

VerificationReport verify_lemma3(const NaeInstance& inst) {
    const GadgetGraph g1p = extend_with_clique(build_g1(inst));
    return freeness_report("lemma3", inst, g1p,
                           {"2P2", "co(3P2)", "co(T0,2,2)"});
}

VerificationReport verify_lemma4(const NaeInstance& inst) {
    const GadgetGraph g2p = extend_with_clique(build_g2(inst));
    return freeness_report("lemma4", inst, g2p,
                           {"2P2", "co(2C3)", "co(C3+P4)", "co(2P4)",
                            "co(T0,0,4)"});
}

namespace {

// Rejection-sampled uniform value in [0, bound); avoids the
// implementation-defined distributions so seeds reproduce everywhere.
std::uint64_t uniform_below(std::mt19937_64& rng, std::uint64_t bound) {
    const std::uint64_t limit =
        std::numeric_limits<std::uint64_t>::max() -
        std::numeric_limits<std::uint64_t>::max() % bound;
    std::uint64_t r;
    do {
        r = rng();
    } while (r >= limit);
    return r % bound;
}

} // namespace

std::vector<NaeInstance> random_instances(int count, int max_vars,
                                          int max_clauses,
                                          std::uint64_t seed) {
    if (count < 0)
        throw validation_error("instance count must be non-negative");
    if (max_vars < 3)
        throw validation_error(
            "need at least 3 variables to form a clause, got max_vars = " +
            std::to_string(max_vars));
    if (max_clauses < 1)
        throw validation_error("max_clauses must be positive");
    const long max_triples = static_cast<long>(max_vars) * (max_vars - 1) *
                             (max_vars - 2) / 6;
    if (max_clauses > max_triples)
        throw validation_error(
            "max_clauses = " + std::to_string(max_clauses) + " exceeds the " +
            std::to_string(max_triples) + " distinct clauses over " +
            std::to_string(max_vars) + " variables");

    std::mt19937_64 rng(seed);
    std::vector<NaeInstance> out;
    out.reserve(static_cast<std::size_t>(count));
    for (int k = 0; k < count; ++k) {
        NaeInstance inst;
        inst.variable_count = 3 + static_cast<int>(uniform_below(
                                      rng, static_cast<std::uint64_t>(
                                               max_vars - 2)));
        const int n = inst.variable_count;
        std::vector<std::array<int, 3>> triples;
        for (int a = 1; a <= n; ++a)
            for (int b = a + 1; b <= n; ++b)
                for (int c = b + 1; c <= n; ++c)
                    triples.push_back({a, b, c});
        const int available = static_cast<int>(triples.size());
        const int m =
            1 + static_cast<int>(uniform_below(
                    rng, static_cast<std::uint64_t>(
                             std::min(max_clauses, available))));
        for (int pick = 0; pick < m; ++pick) {
            const std::size_t j =
                static_cast<std::size_t>(pick) +
                static_cast<std::size_t>(uniform_below(
                    rng, static_cast<std::uint64_t>(available - pick)));
            std::swap(triples[static_cast<std::size_t>(pick)], triples[j]);
        }
        triples.resize(static_cast<std::size_t>(m));
        std::sort(triples.begin(), triples.end());
        inst.clauses = std::move(triples);
        validate(inst);
        out.push_back(std::move(inst));
    }
    return out;
}

nlohmann::json instance_json(const NaeInstance& inst) {
    nlohmann::json clauses = nlohmann::json::array();
    for (const auto& clause : inst.clauses)
        clauses.push_back({clause[0], clause[1], clause[2]});
    return {{"n", inst.variable_count}, {"clauses", clauses}};
}

nlohmann::json report_json(const VerificationReport& report,
                           bool include_timing) {
    nlohmann::json claims = nlohmann::json::array();
    for (const Claim& claim : report.claims) {
        nlohmann::json c = {{"name", claim.name},
                            {"status", claim.holds ? "holds" : "violated"}};
        if (!claim.witness.is_null())
            c["witness"] = claim.witness;
        claims.push_back(std::move(c));
    }
    nlohmann::json out = {{"lemma", report.lemma},
                          {"instance", instance_json(report.instance)},
                          {"claims", std::move(claims)}};
    if (include_timing)
        out["elapsed_ms"] = report.elapsed_ms;
    return out;
}

nlohmann::json emit_report(std::span<const VerificationReport> reports,
                           bool include_timings) {
    nlohmann::json list = nlohmann::json::array();
    for (const auto& report : reports)
        list.push_back(report_json(report, include_timings));
    return {{"version", 1}, {"reports", std::move(list)}};
}

} // namespace bigenic
