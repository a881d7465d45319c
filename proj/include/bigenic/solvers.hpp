#ifndef BIGENIC_SOLVERS_HPP
#define BIGENIC_SOLVERS_HPP

#include <optional>
#include <vector>

#include "bigenic/gadget.hpp"
#include "bigenic/graph.hpp"

namespace bigenic {

/// Proper vertex colouring; colour[v] is a positive integer.
struct Colouring {
    std::vector<int> colour;

    bool operator==(const Colouring&) const = default;
};

/// Truth assignment; value[i] is the value of variable i+1.
struct Assignment {
    std::vector<bool> value;

    bool operator==(const Assignment&) const = default;
};

bool is_proper_colouring(const Graph& g, const Colouring& c);
bool uses_at_most(const Colouring& c, int k);
bool respects_lists(const ListAssignment& lists, const Colouring& c);
bool satisfies_nae(const NaeInstance& inst, const Assignment& a);

/// Highest variable count solve_nae will search exhaustively.
constexpr int max_nae_variables = 24;

/// First satisfying assignment in counting order, or nullopt. Exhaustive
/// over all 2^n assignments; throws resource_limit_error past the limit.
std::optional<Assignment> solve_nae(const NaeInstance& inst);

/// Proper k-colouring or nullopt. A maximum clique (greedy seed, then exact
/// branch and bound) is pre-coloured 1..q to break colour symmetry; the
/// remaining search branches on the vertex with the fewest remaining
/// colours, ties by lowest index. Throws validation_error for k < 0.
std::optional<Colouring> solve_k_colouring(const Graph& g, int k);

/// Colouring respecting the per-vertex lists, or nullopt. Propagates
/// singleton lists before branching. Throws validation_error when some
/// vertex has an empty list or the list count does not match the graph.
std::optional<Colouring> solve_list_colouring(const Graph& g,
                                              const ListAssignment& lists);

/// Highest vertex count chromatic_number accepts.
constexpr int max_chromatic_vertices = 40;

/// Least k admitting a proper k-colouring.
int chromatic_number(const Graph& g);

/// One maximum clique (exact), as a sorted vertex list.
std::vector<int> max_clique(const Graph& g);

} // namespace bigenic

#endif
