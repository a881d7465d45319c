#ifndef BIGENIC_RECOGNIZERS_HPP
#define BIGENIC_RECOGNIZERS_HPP

#include <array>
#include <optional>
#include <vector>

#include "bigenic/graph.hpp"

namespace bigenic {

bool is_connected(const Graph& g);
bool is_path_graph(const Graph& g);
bool is_cycle_graph(const Graph& g);
bool is_tree(const Graph& g);
bool is_linear_forest(const Graph& g);
bool is_complete(const Graph& g);
bool has_cycle(const Graph& g);

/// The triple (h,i,j), h <= i <= j, with g isomorphic to the triangle with
/// pendant paths of those lengths, or nullopt. Works by locating the unique
/// triangle and measuring the arms, so no general isomorphism call.
std::optional<std::array<int, 3>> recognize_T(const Graph& g);

/// Membership in the class of graphs whose every component is a path or a
/// T_{h,i,j}. The strict form requires every arm length >= 1 (so the paw
/// and the triangle do not qualify); with allow_zero_arms those count too.
/// The classifier's Schindl-style hardness rule needs the zero-arm form:
/// with the strict one it would wrongly fire on complements such as the
/// paw = co(P1+P3), whose free class is polynomial.
bool in_class_T(const Graph& g, bool allow_zero_arms = false);

/// Outcome of the structural split of a qualifying tree: a tree other than
/// K_{1,3}, P5 and the subpaths of P4 contains K_{1,4} (max degree >= 4),
/// contains S_{1,1,2} (max degree 3), or is a path on >= 6 vertices.
struct TreeTrichotomyOutcome {
    enum class Tag { ContainsK14, ContainsS112, LongPath };

    Tag tag;
    std::optional<Witness> witness; // for the two containment outcomes
    int path_length = 0;            // for LongPath

    bool operator==(const TreeTrichotomyOutcome&) const = default;
};

/// Throws validation_error naming the failed precondition when g is not a
/// tree, or is K_{1,3}, P5, or an induced subgraph of P4.
TreeTrichotomyOutcome tree_trichotomy(const Graph& g);

/// A match of a complement graph against one of the six open families,
/// numbered in their published order:
///   1: sP1 + Pt + T_{h,i,j}   0 <= h <= i <= j <= 1, s >= 0, 2 <= t <= 3
///   2: sP1 + T_{h,i,j}        0 <= h <= i <= 1 <= j <= 3, h+i+j+s >= 3
///   3: sP1 + T_{0,0,0}        s >= 2
///   4: sP1 + Pt               3 <= t <= 7, s + t >= 6
///   5: sP1 + Pt + Pu          2 <= t <= 3, 3 <= u <= 4, s + t + u >= 6
///   6: sP1 + 2P2              s >= 1
struct OpenPatternMatch {
    int family = 0;
    int s = 0;
    std::optional<int> t;
    std::optional<int> u;
    std::optional<std::array<int, 3>> thij;

    bool operator==(const OpenPatternMatch&) const = default;
};

/// First matching family in bullet order, or nullopt. The argument is the
/// complement of the forbidden graph; callers complement H themselves.
std::optional<OpenPatternMatch> match_open_pattern(const Graph& co_h);

/// Every matching family, for auditing overlap.
std::vector<OpenPatternMatch> match_open_pattern_all(const Graph& co_h);

/// The ten minimal open complements, in their published order.
std::vector<Graph> minimal_open_coH();

} // namespace bigenic

#endif
