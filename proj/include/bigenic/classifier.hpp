#ifndef BIGENIC_CLASSIFIER_HPP
#define BIGENIC_CLASSIFIER_HPP

#include <map>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "bigenic/graph.hpp"

namespace bigenic {

enum class Status { PolynomialTime, NPComplete, Open, Unknown };

std::string to_string(Status s);
Status status_from_string(std::string_view text);

/// One fired rule: its id, the literature citation, and what matched.
struct TraceEntry {
    std::string rule;
    std::string citation;
    std::string detail;

    bool operator==(const TraceEntry&) const = default;
};

struct Verdict {
    Status status = Status::Unknown;
    std::vector<TraceEntry> trace;
};

/// Static description of a knowledge-base rule.
struct RuleInfo {
    std::string id;
    char kind = 'N'; // 'P' polynomial, 'N' NP-complete, 'O' open
    std::string citation;
    std::string description;
};

/// The machine-readable rule list.
std::vector<RuleInfo> kb_rules();

/// Every rule that fires on the pair, grouped by kind. Both orientations
/// are tried; each rule is reported at most once.
struct RuleFirings {
    std::vector<TraceEntry> open;
    std::vector<TraceEntry> poly;
    std::vector<TraceEntry> hard;
};

RuleFirings evaluate_rules(const Graph& h1, const Graph& h2);

/// Complexity verdict for Colouring on (h1,h2)-free graphs. Symmetric in
/// its arguments. Open entries win the report when nothing contradicts;
/// a polynomial rule and a hardness rule firing together throws
/// inconsistency_error carrying both traces, never a silent choice.
Verdict classify(const Graph& h1, const Graph& h2);

nlohmann::json verdict_json(const Graph& h1, const Graph& h2,
                            const Verdict& verdict);

struct SurveyRow {
    int n = 0;
    std::string graph6;
    Status status = Status::Unknown;
    std::vector<std::string> rules;

    bool operator==(const SurveyRow&) const = default;
};

struct SurveyTable {
    std::string forbidden_graph6;
    std::vector<SurveyRow> rows;

    std::map<Status, int> counts() const;

    bool operator==(const SurveyTable&) const = default;
};

/// Classifies (forbidden, H) for one representative H of every isomorphism
/// class on 1..max_n vertices.
SurveyTable survey(const Graph& forbidden, int max_n);

std::string survey_to_csv(const SurveyTable& table);
SurveyTable survey_from_csv(std::string_view text);
nlohmann::json survey_json(const SurveyTable& table);

} // namespace bigenic

#endif
