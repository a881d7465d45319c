#ifndef BIGENIC_GADGET_HPP
#define BIGENIC_GADGET_HPP

#include <array>
#include <string>
#include <string_view>
#include <vector>

#include "bigenic/graph.hpp"

namespace bigenic {

/// Not-All-Equal 3-SAT with positive literals only: variables 1..n and
/// clauses of three distinct variables. A satisfying assignment gives each
/// clause at least one true and at least one false literal.
struct NaeInstance {
    int variable_count = 0;
    std::vector<std::array<int, 3>> clauses; // each sorted ascending

    bool operator==(const NaeInstance&) const = default;
};

/// Throws validation_error on broken invariants (variable out of range,
/// repeated variable in a clause), citing the clause index.
void validate(const NaeInstance& inst);

/// Parses the instance format: optional 'c' comment lines, a header line
/// "p nae <n> <m>", then m clause lines "v1 v2 v3 0".
NaeInstance parse_nae(std::string_view text);

/// Serializer; format_nae and parse_nae round-trip.
std::string format_nae(const NaeInstance& inst);

/// Per-vertex sets of allowed colours (positive integers, sorted). An empty
/// list means unconstrained only where a context says so; the solvers treat
/// empty lists as errors.
struct ListAssignment {
    std::vector<std::vector<int>> lists;

    bool operator==(const ListAssignment&) const = default;
};

/// Role of a gadget vertex: variable vertex x_i, odd clause vertex C_j,
/// even clause vertex C_j', or palette clique vertex k_l.
struct Role {
    enum class Kind { X, C, Cp, K };

    Kind kind = Kind::X;
    int index = 0; // 1-based, within its kind

    bool operator==(const Role&) const = default;
};

std::string to_string(const Role& role);

enum class GadgetVariant { G1, G2, G1Prime, G2Prime };

std::string to_string(GadgetVariant v);

/// A reduction gadget: the graph, per-vertex roles and colour lists (empty
/// on k-type vertices), and the colour budget 2n. Vertex layout is fixed as
/// x_1..x_n, C_1..C_m, C_1'..C_m', k_1..k_2n.
struct GadgetGraph {
    Graph graph;
    std::vector<Role> roles;
    ListAssignment lists;
    int colour_budget = 0;
    GadgetVariant variant = GadgetVariant::G1;
    NaeInstance instance;
};

/// Complete bipartite gadget: every x-type vertex joined to every C-type
/// vertex; L(x_i) = {2i-1, 2i}, L(C_j) the odd and L(C_j') the even list
/// colours of the clause's variables.
GadgetGraph build_g1(const NaeInstance& inst);

/// As build_g1 plus a clique on the x-type class (a complete split graph).
GadgetGraph build_g2(const NaeInstance& inst);

/// Adds the palette clique k_1..k_2n with k_l adjacent to an original
/// vertex u exactly when l is not in L(u). Turns G1 into G1' and G2 into
/// G2'.
GadgetGraph extend_with_clique(const GadgetGraph& g);

struct StructureCheck {
    std::string name;
    bool pass = false;
};

struct StructureReport {
    std::vector<StructureCheck> checks;
    bool duplicate_clauses = false;

    bool all_pass() const;
};

/// Verifies the structural facts the hardness arguments rely on, on the
/// gadget itself and on its complement. Accepts G1' and G2' gadgets.
StructureReport gadget_structure_report(const GadgetGraph& g);

} // namespace bigenic

#endif
