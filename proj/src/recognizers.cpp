#include "bigenic/recognizers.hpp"

#include <algorithm>
#include <bit>

#include "bigenic/errors.hpp"
#include "bigenic/families.hpp"

namespace bigenic {

bool is_connected(const Graph& g) {
    if (g.vertex_count() == 0)
        return true;
    return component_vertex_sets(g).size() == 1;
}

bool is_path_graph(const Graph& g) {
    const int n = g.vertex_count();
    if (n == 0 || !is_connected(g) || g.edge_count() != n - 1)
        return false;
    for (int v = 0; v < n; ++v)
        if (g.degree(v) > 2)
            return false;
    return true;
}

bool is_cycle_graph(const Graph& g) {
    const int n = g.vertex_count();
    if (n < 3)
        return false;
    if (!is_connected(g) || g.edge_count() != n)
        return false;
    for (int v = 0; v < n; ++v)
        if (g.degree(v) != 2)
            return false;
    return true;
}

bool is_tree(const Graph& g) {
    const int n = g.vertex_count();
    return n >= 1 && is_connected(g) && g.edge_count() == n - 1;
}

bool is_linear_forest(const Graph& g) {
    for (const Graph& comp : components(g))
        if (!is_path_graph(comp))
            return false;
    return true;
}

bool is_complete(const Graph& g) {
    const int n = g.vertex_count();
    return g.edge_count() == n * (n - 1) / 2;
}

bool has_cycle(const Graph& g) {
    int edges_in_forest = 0;
    for (const auto& comp : component_vertex_sets(g))
        edges_in_forest += static_cast<int>(comp.size()) - 1;
    return g.edge_count() > edges_in_forest;
}

std::optional<std::array<int, 3>> recognize_T(const Graph& g) {
    const int n = g.vertex_count();
    if (n < 3 || !is_connected(g) || g.edge_count() != n)
        return std::nullopt;
    // Exactly one triangle, found by brute force.
    std::array<int, 3> tri{-1, -1, -1};
    int triangles = 0;
    for (int a = 0; a < n && triangles < 2; ++a)
        for (int b = a + 1; b < n && triangles < 2; ++b) {
            if (!g.adjacent(a, b))
                continue;
            std::uint64_t common = g.neighbours(a) & g.neighbours(b);
            common &= ~((std::uint64_t{2} << b) - 1); // only c > b
            while (common) {
                const int c = std::countr_zero(common);
                common &= common - 1;
                tri = {a, b, c};
                if (++triangles >= 2)
                    break;
            }
        }
    if (triangles != 1)
        return std::nullopt;
    std::uint64_t tri_mask = 0;
    for (int v : tri)
        tri_mask |= std::uint64_t{1} << v;
    // Each corner starts at most one pendant path; everything else must have
    // degree <= 2 and be covered by the three arms.
    std::array<int, 3> arms{0, 0, 0};
    std::uint64_t covered = tri_mask;
    for (int corner_index = 0; corner_index < 3; ++corner_index) {
        const int corner = tri[static_cast<std::size_t>(corner_index)];
        if (g.degree(corner) > 3)
            return std::nullopt;
        std::uint64_t away = g.neighbours(corner) & ~tri_mask;
        if (std::popcount(away) > 1)
            return std::nullopt;
        int prev = corner;
        while (away) {
            const int next = std::countr_zero(away);
            if ((covered >> next) & 1u)
                return std::nullopt; // arms may not merge
            covered |= std::uint64_t{1} << next;
            ++arms[static_cast<std::size_t>(corner_index)];
            if (g.degree(next) > 2)
                return std::nullopt;
            away = g.neighbours(next) &
                   ~(std::uint64_t{1} << prev) & ~tri_mask;
            prev = next;
        }
    }
    if (std::popcount(covered) != n)
        return std::nullopt;
    std::sort(arms.begin(), arms.end());
    return arms;
}

bool in_class_T(const Graph& g, bool allow_zero_arms) {
    for (const Graph& comp : components(g)) {
        if (is_path_graph(comp))
            continue;
        const auto t = recognize_T(comp);
        if (!t)
            return false;
        if (!allow_zero_arms && (*t)[0] < 1)
            return false;
    }
    return true;
}

TreeTrichotomyOutcome tree_trichotomy(const Graph& g) {
    if (!is_tree(g))
        throw validation_error("tree trichotomy requires a tree");
    const int n = g.vertex_count();
    if (is_path_graph(g) && n <= 4)
        throw validation_error(
            "tree trichotomy excludes induced subgraphs of P4");
    if (is_path_graph(g) && n == 5)
        throw validation_error("tree trichotomy excludes P5");
    if (is_isomorphic(g, make_graph("K1,3")))
        throw validation_error("tree trichotomy excludes K1,3");

    int max_degree = 0;
    for (int v = 0; v < n; ++v)
        max_degree = std::max(max_degree, g.degree(v));

    if (max_degree >= 4) {
        auto w = contains_induced(g, make_graph("K1,4"));
        return {TreeTrichotomyOutcome::Tag::ContainsK14, std::move(w), 0};
    }
    if (max_degree == 3) {
        auto w = contains_induced(g, make_graph("S1,1,2"));
        return {TreeTrichotomyOutcome::Tag::ContainsS112, std::move(w), 0};
    }
    return {TreeTrichotomyOutcome::Tag::LongPath, std::nullopt, n};
}

namespace {

// Component shapes of a candidate complement: isolated vertices, longer
// paths, and T components. Anything else disqualifies every family.
struct Decomposition {
    int isolated = 0;                      // number of P1 components
    std::vector<int> paths;                // lengths >= 2, ascending
    std::vector<std::array<int, 3>> ts;    // T parameters
    bool clean = true;                     // only paths and T components
};

Decomposition decompose(const Graph& co_h) {
    Decomposition d;
    for (const Graph& comp : components(co_h)) {
        if (is_path_graph(comp)) {
            if (comp.vertex_count() == 1)
                ++d.isolated;
            else
                d.paths.push_back(comp.vertex_count());
            continue;
        }
        if (auto t = recognize_T(comp)) {
            d.ts.push_back(*t);
            continue;
        }
        d.clean = false;
        break;
    }
    std::sort(d.paths.begin(), d.paths.end());
    return d;
}

std::optional<OpenPatternMatch> match_family(const Decomposition& d,
                                             int family) {
    const int s = d.isolated;
    OpenPatternMatch m;
    m.family = family;
    m.s = s;
    switch (family) {
    case 1: {
        if (d.ts.size() != 1 || d.paths.size() != 1)
            return std::nullopt;
        const int j = d.ts.front()[2];
        const int t = d.paths.front();
        if (j <= 1 && 2 <= t && t <= 3) {
            m.t = t;
            m.thij = d.ts.front();
            return m;
        }
        return std::nullopt;
    }
    case 2: {
        if (d.ts.size() != 1 || !d.paths.empty())
            return std::nullopt;
        const int h = d.ts.front()[0];
        const int i = d.ts.front()[1];
        const int j = d.ts.front()[2];
        if (i <= 1 && 1 <= j && j <= 3 && h + i + j + s >= 3) {
            m.thij = d.ts.front();
            return m;
        }
        return std::nullopt;
    }
    case 3: {
        if (d.ts.size() != 1 || !d.paths.empty())
            return std::nullopt;
        if (d.ts.front() == std::array<int, 3>{0, 0, 0} && s >= 2) {
            m.thij = d.ts.front();
            return m;
        }
        return std::nullopt;
    }
    case 4: {
        if (!d.ts.empty() || d.paths.size() != 1)
            return std::nullopt;
        const int t = d.paths.front();
        if (3 <= t && t <= 7 && s + t >= 6) {
            m.t = t;
            return m;
        }
        return std::nullopt;
    }
    case 5: {
        if (!d.ts.empty() || d.paths.size() != 2)
            return std::nullopt;
        const int t = d.paths[0];
        const int u = d.paths[1];
        if (2 <= t && t <= 3 && 3 <= u && u <= 4 && s + t + u >= 6) {
            m.t = t;
            m.u = u;
            return m;
        }
        return std::nullopt;
    }
    case 6: {
        if (!d.ts.empty() || d.paths != std::vector<int>{2, 2})
            return std::nullopt;
        if (s >= 1)
            return m;
        return std::nullopt;
    }
    default:
        return std::nullopt;
    }
}

} // namespace

std::optional<OpenPatternMatch> match_open_pattern(const Graph& co_h) {
    const Decomposition d = decompose(co_h);
    if (!d.clean)
        return std::nullopt;
    for (int family = 1; family <= 6; ++family)
        if (auto m = match_family(d, family))
            return m;
    return std::nullopt;
}

std::vector<OpenPatternMatch> match_open_pattern_all(const Graph& co_h) {
    std::vector<OpenPatternMatch> out;
    const Decomposition d = decompose(co_h);
    if (!d.clean)
        return out;
    for (int family = 1; family <= 6; ++family)
        if (auto m = match_family(d, family))
            out.push_back(*m);
    return out;
}

std::vector<Graph> minimal_open_coH() {
    std::vector<Graph> out;
    for (const char* expr :
         {"C3+2P1", "C3+P2", "P1+2P2", "3P1+P3", "2P1+P4", "2P3", "P6",
          "T0,1,1+P1", "T0,1,2", "T1,1,1"})
        out.push_back(make_graph(expr));
    return out;
}

} // namespace bigenic
