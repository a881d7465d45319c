#include "bigenic/solvers.hpp"

#include <algorithm>
#include <bit>

#include "bigenic/errors.hpp"

namespace bigenic {

bool is_proper_colouring(const Graph& g, const Colouring& c) {
    const int n = g.vertex_count();
    if (static_cast<int>(c.colour.size()) != n)
        return false;
    for (int v = 0; v < n; ++v)
        if (c.colour[static_cast<std::size_t>(v)] < 1)
            return false;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (g.adjacent(u, v) &&
                c.colour[static_cast<std::size_t>(u)] ==
                    c.colour[static_cast<std::size_t>(v)])
                return false;
    return true;
}

bool uses_at_most(const Colouring& c, int k) {
    return std::all_of(c.colour.begin(), c.colour.end(),
                       [k](int col) { return col >= 1 && col <= k; });
}

bool respects_lists(const ListAssignment& lists, const Colouring& c) {
    if (lists.lists.size() != c.colour.size())
        return false;
    for (std::size_t v = 0; v < c.colour.size(); ++v) {
        const auto& list = lists.lists[v];
        if (std::find(list.begin(), list.end(), c.colour[v]) == list.end())
            return false;
    }
    return true;
}

bool satisfies_nae(const NaeInstance& inst, const Assignment& a) {
    if (static_cast<int>(a.value.size()) != inst.variable_count)
        return false;
    for (const auto& clause : inst.clauses) {
        int trues = 0;
        for (int v : clause)
            trues += a.value[static_cast<std::size_t>(v - 1)] ? 1 : 0;
        if (trues == 0 || trues == 3)
            return false;
    }
    return true;
}

std::optional<Assignment> solve_nae(const NaeInstance& inst) {
    validate(inst);
    const int n = inst.variable_count;
    if (n > max_nae_variables)
        throw resource_limit_error(
            "NAE search limited to " + std::to_string(max_nae_variables) +
            " variables, got " + std::to_string(n));
    const std::uint64_t total = std::uint64_t{1} << n;
    for (std::uint64_t bits = 0; bits < total; ++bits) {
        Assignment a;
        a.value.resize(static_cast<std::size_t>(n));
        for (int i = 0; i < n; ++i)
            a.value[static_cast<std::size_t>(i)] = (bits >> i) & 1u;
        if (satisfies_nae(inst, a))
            return a;
    }
    return std::nullopt;
}

namespace {

// Exact maximum clique: greedy seed for the bound, then branch and bound on
// candidate masks.
struct CliqueSearch {
    const Graph& g;
    std::vector<int> best;

    void grow(std::vector<int>& current, std::uint64_t candidates) {
        if (current.size() + static_cast<std::size_t>(
                                 std::popcount(candidates)) <= best.size())
            return;
        if (!candidates) {
            if (current.size() > best.size())
                best = current;
            return;
        }
        // Branch on candidates in index order; dropping a vertex removes it
        // from every deeper branch.
        while (candidates) {
            if (current.size() + static_cast<std::size_t>(
                                     std::popcount(candidates)) <=
                best.size())
                return;
            const int v = std::countr_zero(candidates);
            candidates &= candidates - 1;
            current.push_back(v);
            grow(current, candidates & g.neighbours(v));
            current.pop_back();
        }
    }
};

std::vector<int> greedy_clique(const Graph& g) {
    const int n = g.vertex_count();
    std::vector<int> order(static_cast<std::size_t>(n));
    for (int v = 0; v < n; ++v)
        order[static_cast<std::size_t>(v)] = v;
    std::stable_sort(order.begin(), order.end(), [&g](int a, int b) {
        return g.degree(a) > g.degree(b);
    });
    std::vector<int> clique;
    std::uint64_t allowed = g.vertex_mask();
    for (int v : order) {
        if ((allowed >> v) & 1u) {
            clique.push_back(v);
            allowed &= g.neighbours(v);
        }
    }
    std::sort(clique.begin(), clique.end());
    return clique;
}

// Backtracking over per-vertex colour masks: place the vertex with the
// fewest remaining colours first, ties by lowest index. Colours are tried
// ascending, so singletons propagate before any real branching happens.
struct ColourSearch {
    const Graph& g;
    std::vector<int> colour; // 1-based palette indices, 0 = uncoloured

    bool run(std::vector<std::uint64_t>& allowed, int uncoloured) {
        if (uncoloured == 0)
            return true;
        const int n = g.vertex_count();
        int v = -1;
        int fewest = 65;
        for (int u = 0; u < n; ++u) {
            if (colour[static_cast<std::size_t>(u)] != 0)
                continue;
            const int count =
                std::popcount(allowed[static_cast<std::size_t>(u)]);
            if (count < fewest) {
                v = u;
                fewest = count;
            }
        }
        std::uint64_t options = allowed[static_cast<std::size_t>(v)];
        while (options) {
            const int col = std::countr_zero(options);
            options &= options - 1;
            colour[static_cast<std::size_t>(v)] = col + 1;
            std::vector<std::uint64_t> saved = allowed;
            bool dead = false;
            std::uint64_t nb = g.neighbours(v);
            while (nb) {
                const int w = std::countr_zero(nb);
                nb &= nb - 1;
                if (colour[static_cast<std::size_t>(w)] == 0) {
                    auto& aw = allowed[static_cast<std::size_t>(w)];
                    aw &= ~(std::uint64_t{1} << col);
                    if (!aw)
                        dead = true;
                }
            }
            if (!dead && run(allowed, uncoloured - 1))
                return true;
            allowed = std::move(saved);
            colour[static_cast<std::size_t>(v)] = 0;
        }
        return false;
    }
};

std::optional<std::vector<int>> colour_search(
    const Graph& g, std::vector<std::uint64_t> allowed) {
    const int n = g.vertex_count();
    ColourSearch search{g, std::vector<int>(static_cast<std::size_t>(n), 0)};
    if (!search.run(allowed, n))
        return std::nullopt;
    return search.colour;
}

} // namespace

std::vector<int> max_clique(const Graph& g) {
    CliqueSearch search{g, greedy_clique(g)};
    std::vector<int> current;
    search.grow(current, g.vertex_mask());
    std::sort(search.best.begin(), search.best.end());
    return search.best;
}

std::optional<Colouring> solve_k_colouring(const Graph& g, int k) {
    if (k < 0)
        throw validation_error("colour count must be non-negative, got " +
                               std::to_string(k));
    const int n = g.vertex_count();
    if (n == 0)
        return Colouring{};
    if (k == 0)
        return std::nullopt;
    if (k >= n) {
        Colouring c;
        c.colour.resize(static_cast<std::size_t>(n));
        for (int v = 0; v < n; ++v)
            c.colour[static_cast<std::size_t>(v)] = v + 1;
        return c;
    }
    const std::vector<int> clique = max_clique(g);
    if (static_cast<int>(clique.size()) > k)
        return std::nullopt;

    const std::uint64_t palette =
        k == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << k) - 1;
    std::vector<std::uint64_t> allowed(static_cast<std::size_t>(n), palette);
    // Pre-colour the clique 1..q; any proper colouring can be renamed so.
    for (std::size_t q = 0; q < clique.size(); ++q)
        allowed[static_cast<std::size_t>(clique[q])] = std::uint64_t{1} << q;

    auto result = colour_search(g, std::move(allowed));
    if (!result)
        return std::nullopt;
    return Colouring{std::move(*result)};
}

std::optional<Colouring> solve_list_colouring(const Graph& g,
                                              const ListAssignment& lists) {
    const int n = g.vertex_count();
    if (static_cast<int>(lists.lists.size()) != n)
        throw validation_error(
            "list assignment covers " + std::to_string(lists.lists.size()) +
            " vertices but the graph has " + std::to_string(n));
    // Map colours to a dense palette.
    std::vector<int> palette;
    for (const auto& list : lists.lists)
        for (int c : list)
            palette.push_back(c);
    std::sort(palette.begin(), palette.end());
    palette.erase(std::unique(palette.begin(), palette.end()),
                  palette.end());
    if (palette.size() > 64)
        throw resource_limit_error(
            "list colouring limited to 64 distinct colours, got " +
            std::to_string(palette.size()));

    std::vector<std::uint64_t> allowed(static_cast<std::size_t>(n), 0);
    for (int v = 0; v < n; ++v) {
        const auto& list = lists.lists[static_cast<std::size_t>(v)];
        if (list.empty())
            throw validation_error("vertex " + std::to_string(v) +
                                   " has an empty colour list");
        for (int c : list) {
            if (c < 1)
                throw validation_error("vertex " + std::to_string(v) +
                                       " lists non-positive colour " +
                                       std::to_string(c));
            const auto it =
                std::lower_bound(palette.begin(), palette.end(), c);
            allowed[static_cast<std::size_t>(v)] |=
                std::uint64_t{1}
                << std::distance(palette.begin(), it);
        }
    }

    auto result = colour_search(g, std::move(allowed));
    if (!result)
        return std::nullopt;
    Colouring c;
    c.colour.resize(static_cast<std::size_t>(n));
    for (int v = 0; v < n; ++v)
        c.colour[static_cast<std::size_t>(v)] = palette[static_cast<
            std::size_t>((*result)[static_cast<std::size_t>(v)] - 1)];
    return c;
}

int chromatic_number(const Graph& g) {
    const int n = g.vertex_count();
    if (n > max_chromatic_vertices)
        throw resource_limit_error(
            "chromatic number limited to " +
            std::to_string(max_chromatic_vertices) + " vertices, got " +
            std::to_string(n));
    if (n == 0)
        return 0;
    for (int k = static_cast<int>(max_clique(g).size()); k <= n; ++k)
        if (solve_k_colouring(g, k))
            return k;
    return n; // unreachable: k = n always colours
}

} // namespace bigenic
