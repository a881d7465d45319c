#include "bigenic/graph.hpp"

#include <algorithm>
#include <bit>
#include <map>
#include <numeric>
#include <set>

#include "bigenic/errors.hpp"

namespace bigenic {

Graph::Graph(int n) {
    if (n < 0 || n > max_vertices)
        throw validation_error("vertex count " + std::to_string(n) +
                               " outside supported range 0.." +
                               std::to_string(max_vertices));
    n_ = n;
    adj_.assign(static_cast<std::size_t>(n), 0);
}

Graph Graph::from_edges(int n,
                        std::initializer_list<std::pair<int, int>> edges) {
    Graph g(n);
    for (auto [u, v] : edges)
        g.add_edge(u, v);
    return g;
}

void Graph::check_vertex(int v) const {
    if (v < 0 || v >= n_)
        throw validation_error("vertex " + std::to_string(v) +
                               " out of range 0.." + std::to_string(n_ - 1));
}

int Graph::edge_count() const {
    int twice = 0;
    for (int v = 0; v < n_; ++v)
        twice += degree(v);
    return twice / 2;
}

bool Graph::adjacent(int u, int v) const {
    check_vertex(u);
    check_vertex(v);
    return (adj_[static_cast<std::size_t>(u)] >> v) & 1u;
}

void Graph::add_edge(int u, int v) {
    check_vertex(u);
    check_vertex(v);
    if (u == v)
        throw validation_error("self-loop on vertex " + std::to_string(u));
    adj_[static_cast<std::size_t>(u)] |= std::uint64_t{1} << v;
    adj_[static_cast<std::size_t>(v)] |= std::uint64_t{1} << u;
}

std::uint64_t Graph::neighbours(int v) const {
    check_vertex(v);
    return adj_[static_cast<std::size_t>(v)];
}

int Graph::degree(int v) const {
    return std::popcount(neighbours(v));
}

std::vector<int> Graph::degree_sequence() const {
    std::vector<int> d(static_cast<std::size_t>(n_));
    for (int v = 0; v < n_; ++v)
        d[static_cast<std::size_t>(v)] = degree(v);
    std::sort(d.begin(), d.end());
    return d;
}

std::uint64_t Graph::vertex_mask() const {
    return n_ == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n_) - 1;
}

bool is_induced_embedding(const Graph& host, const Graph& pattern,
                          const Witness& w) {
    const int p = pattern.vertex_count();
    if (static_cast<int>(w.mapping.size()) != p)
        return false;
    std::uint64_t used = 0;
    for (int v : w.mapping) {
        if (v < 0 || v >= host.vertex_count())
            return false;
        const std::uint64_t bit = std::uint64_t{1} << v;
        if (used & bit)
            return false;
        used |= bit;
    }
    for (int a = 0; a < p; ++a)
        for (int b = a + 1; b < p; ++b)
            if (pattern.adjacent(a, b) !=
                host.adjacent(w.mapping[static_cast<std::size_t>(a)],
                              w.mapping[static_cast<std::size_t>(b)]))
                return false;
    return true;
}

Graph complement(const Graph& g) {
    const int n = g.vertex_count();
    Graph c(n);
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (!g.adjacent(u, v))
                c.add_edge(u, v);
    return c;
}

Graph disjoint_union(const Graph& g, const Graph& h) {
    const int gn = g.vertex_count();
    const int hn = h.vertex_count();
    if (gn + hn > Graph::max_vertices)
        throw validation_error(
            "disjoint union would exceed " +
            std::to_string(Graph::max_vertices) + " vertices");
    Graph u(gn + hn);
    for (int a = 0; a < gn; ++a)
        for (int b = a + 1; b < gn; ++b)
            if (g.adjacent(a, b))
                u.add_edge(a, b);
    for (int a = 0; a < hn; ++a)
        for (int b = a + 1; b < hn; ++b)
            if (h.adjacent(a, b))
                u.add_edge(gn + a, gn + b);
    return u;
}

Graph induced_subgraph(const Graph& g, std::span<const int> vertices) {
    const int k = static_cast<int>(vertices.size());
    Graph s(k);
    for (int a = 0; a < k; ++a)
        for (int b = a + 1; b < k; ++b)
            if (g.adjacent(vertices[static_cast<std::size_t>(a)],
                           vertices[static_cast<std::size_t>(b)]))
                s.add_edge(a, b);
    return s;
}

std::vector<std::vector<int>> component_vertex_sets(const Graph& g) {
    const int n = g.vertex_count();
    std::vector<std::vector<int>> out;
    std::uint64_t seen = 0;
    for (int start = 0; start < n; ++start) {
        if ((seen >> start) & 1u)
            continue;
        std::uint64_t comp = std::uint64_t{1} << start;
        std::uint64_t frontier = comp;
        while (frontier) {
            std::uint64_t next = 0;
            std::uint64_t f = frontier;
            while (f) {
                const int v = std::countr_zero(f);
                f &= f - 1;
                next |= g.neighbours(v);
            }
            frontier = next & ~comp;
            comp |= next;
        }
        seen |= comp;
        std::vector<int> verts;
        std::uint64_t c = comp;
        while (c) {
            verts.push_back(std::countr_zero(c));
            c &= c - 1;
        }
        out.push_back(std::move(verts));
    }
    return out;
}

std::vector<Graph> components(const Graph& g) {
    std::vector<Graph> out;
    for (const auto& verts : component_vertex_sets(g))
        out.push_back(induced_subgraph(g, verts));
    return out;
}

Graph line_graph(const Graph& g) {
    const int n = g.vertex_count();
    std::vector<std::pair<int, int>> edges;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (g.adjacent(u, v))
                edges.emplace_back(u, v);
    const int m = static_cast<int>(edges.size());
    if (m > Graph::max_vertices)
        throw validation_error("line graph would exceed " +
                               std::to_string(Graph::max_vertices) +
                               " vertices");
    Graph lg(m);
    for (int a = 0; a < m; ++a)
        for (int b = a + 1; b < m; ++b) {
            const auto [u1, v1] = edges[static_cast<std::size_t>(a)];
            const auto [u2, v2] = edges[static_cast<std::size_t>(b)];
            if (u1 == u2 || u1 == v2 || v1 == u2 || v1 == v2)
                lg.add_edge(a, b);
        }
    return lg;
}

namespace {

// Search order for induced embedding: components by descending size, and
// within a component a BFS from its highest-degree vertex, so that each new
// pattern vertex is adjacent to an already placed one whenever possible.
std::vector<int> pattern_order(const Graph& pattern) {
    auto comps = component_vertex_sets(pattern);
    std::stable_sort(comps.begin(), comps.end(),
                     [](const auto& a, const auto& b) {
                         return a.size() > b.size();
                     });
    std::vector<int> order;
    order.reserve(static_cast<std::size_t>(pattern.vertex_count()));
    for (const auto& comp : comps) {
        int root = comp.front();
        for (int v : comp)
            if (pattern.degree(v) > pattern.degree(root))
                root = v;
        std::uint64_t placed = 0;
        std::vector<int> queue{root};
        placed |= std::uint64_t{1} << root;
        for (std::size_t head = 0; head < queue.size(); ++head) {
            const int v = queue[head];
            order.push_back(v);
            std::uint64_t nb = pattern.neighbours(v) & ~placed;
            while (nb) {
                const int w = std::countr_zero(nb);
                nb &= nb - 1;
                placed |= std::uint64_t{1} << w;
                queue.push_back(w);
            }
        }
    }
    return order;
}

struct InducedSearch {
    const Graph& host;
    const Graph& pattern;
    std::vector<int> order;
    std::vector<int> mapping;     // pattern vertex -> host vertex or -1
    std::vector<std::uint64_t> cand; // candidate host set per pattern vertex

    bool run() {
        // Degree bounds: pattern neighbours need host neighbours, pattern
        // non-neighbours need host non-neighbours.
        const int hn = host.vertex_count();
        const int pn = pattern.vertex_count();
        for (int p = 0; p < pn; ++p) {
            std::uint64_t c = 0;
            for (int v = 0; v < hn; ++v) {
                if (host.degree(v) < pattern.degree(p))
                    continue;
                if ((hn - 1 - host.degree(v)) < (pn - 1 - pattern.degree(p)))
                    continue;
                c |= std::uint64_t{1} << v;
            }
            cand[static_cast<std::size_t>(p)] = c;
            if (!c)
                return false;
        }
        return extend(0);
    }

    bool extend(std::size_t depth) {
        if (depth == order.size())
            return true;
        const int p = order[depth];
        std::uint64_t options = cand[static_cast<std::size_t>(p)];
        while (options) {
            const int v = std::countr_zero(options);
            options &= options - 1;
            mapping[static_cast<std::size_t>(p)] = v;
            auto saved = cand;
            bool dead = false;
            const std::uint64_t vbit = std::uint64_t{1} << v;
            for (std::size_t later = depth + 1; later < order.size();
                 ++later) {
                const int q = order[later];
                auto& cq = cand[static_cast<std::size_t>(q)];
                cq &= ~vbit;
                if (pattern.adjacent(p, q))
                    cq &= host.neighbours(v);
                else
                    cq &= ~host.neighbours(v);
                if (!cq) {
                    dead = true;
                    break;
                }
            }
            if (!dead && extend(depth + 1))
                return true;
            cand = std::move(saved);
        }
        mapping[static_cast<std::size_t>(p)] = -1;
        return false;
    }
};

} // namespace

std::optional<Witness> contains_induced(const Graph& host,
                                        const Graph& pattern) {
    const int pn = pattern.vertex_count();
    if (pn == 0)
        return Witness{};
    if (pn > host.vertex_count())
        return std::nullopt;
    InducedSearch search{host, pattern, pattern_order(pattern),
                         std::vector<int>(static_cast<std::size_t>(pn), -1),
                         std::vector<std::uint64_t>(
                             static_cast<std::size_t>(pn), 0)};
    if (!search.run())
        return std::nullopt;
    return Witness{std::move(search.mapping)};
}

namespace {

using Partition = std::vector<std::vector<int>>;

// Split cells by the multiset of neighbour counts into every cell, repeated
// to a fixed point. Cell order after a split is by signature, which keeps
// the refinement canonical.
void refine(const Graph& g, Partition& cells) {
    bool changed = true;
    while (changed) {
        changed = false;
        std::vector<std::uint64_t> cell_masks;
        cell_masks.reserve(cells.size());
        for (const auto& cell : cells) {
            std::uint64_t m = 0;
            for (int v : cell)
                m |= std::uint64_t{1} << v;
            cell_masks.push_back(m);
        }
        Partition next;
        for (const auto& cell : cells) {
            if (cell.size() == 1) {
                next.push_back(cell);
                continue;
            }
            std::map<std::vector<int>, std::vector<int>> groups;
            for (int v : cell) {
                std::vector<int> sig;
                sig.reserve(cell_masks.size());
                for (std::uint64_t m : cell_masks)
                    sig.push_back(std::popcount(g.neighbours(v) & m));
                groups[sig].push_back(v);
            }
            if (groups.size() > 1)
                changed = true;
            for (auto& [sig, verts] : groups)
                next.push_back(std::move(verts));
        }
        cells = std::move(next);
    }
}

// True when every vertex of the cell sees the same vertices outside the
// cell and the cell induces a clique or an independent set. Any ordering
// of such a cell extends to an automorphism, so the canonical search does
// not need to branch on it.
bool interchangeable_cell(const Graph& g, const std::vector<int>& cell) {
    std::uint64_t cell_mask = 0;
    for (int v : cell)
        cell_mask |= std::uint64_t{1} << v;
    const std::uint64_t outside0 = g.neighbours(cell.front()) & ~cell_mask;
    bool all_adjacent = true;
    bool none_adjacent = true;
    for (std::size_t a = 0; a < cell.size(); ++a) {
        if ((g.neighbours(cell[a]) & ~cell_mask) != outside0)
            return false;
        for (std::size_t b = a + 1; b < cell.size(); ++b) {
            if (g.adjacent(cell[a], cell[b]))
                none_adjacent = false;
            else
                all_adjacent = false;
        }
    }
    return all_adjacent || none_adjacent;
}

std::vector<std::uint64_t> relabelled_rows(const Graph& g,
                                           const std::vector<int>& by_pos) {
    // by_pos[i] = original vertex placed at canonical position i.
    const int n = g.vertex_count();
    std::vector<int> pos(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i)
        pos[static_cast<std::size_t>(by_pos[static_cast<std::size_t>(i)])] =
            i;
    std::vector<std::uint64_t> rows(static_cast<std::size_t>(n), 0);
    for (int i = 0; i < n; ++i) {
        std::uint64_t nb = g.neighbours(by_pos[static_cast<std::size_t>(i)]);
        while (nb) {
            const int w = std::countr_zero(nb);
            nb &= nb - 1;
            rows[static_cast<std::size_t>(i)] |=
                std::uint64_t{1}
                << pos[static_cast<std::size_t>(w)];
        }
    }
    return rows;
}

struct CanonSearch {
    const Graph& g;
    std::vector<std::uint64_t> best;
    bool have_best = false;

    void visit(Partition cells) {
        refine(g, cells);
        for (std::size_t ci = 0; ci < cells.size(); ++ci) {
            auto& cell = cells[ci];
            if (cell.size() == 1)
                continue;
            if (interchangeable_cell(g, cell)) {
                Partition split;
                split.reserve(cells.size() + cell.size());
                for (std::size_t cj = 0; cj < cells.size(); ++cj) {
                    if (cj == ci) {
                        for (int v : cells[cj])
                            split.push_back({v});
                    } else {
                        split.push_back(cells[cj]);
                    }
                }
                visit(std::move(split));
                return;
            }
            for (int v : cell) {
                Partition split;
                split.reserve(cells.size() + 1);
                for (std::size_t cj = 0; cj < cells.size(); ++cj) {
                    if (cj == ci) {
                        split.push_back({v});
                        std::vector<int> rest;
                        for (int w : cells[cj])
                            if (w != v)
                                rest.push_back(w);
                        split.push_back(std::move(rest));
                    } else {
                        split.push_back(cells[cj]);
                    }
                }
                visit(std::move(split));
            }
            return;
        }
        // Discrete partition: a complete labelling.
        std::vector<int> by_pos;
        by_pos.reserve(cells.size());
        for (const auto& cell : cells)
            by_pos.push_back(cell.front());
        auto rows = relabelled_rows(g, by_pos);
        if (!have_best || rows < best) {
            best = std::move(rows);
            have_best = true;
        }
    }
};

} // namespace

std::vector<std::uint64_t> canonical_certificate(const Graph& g) {
    const int n = g.vertex_count();
    std::vector<std::uint64_t> cert;
    cert.push_back(static_cast<std::uint64_t>(n));
    if (n == 0)
        return cert;
    // A disconnected graph is canonicalized componentwise; branching over
    // interleavings of isomorphic components would blow up otherwise.
    const auto comps = component_vertex_sets(g);
    if (comps.size() > 1) {
        std::vector<std::vector<std::uint64_t>> parts;
        parts.reserve(comps.size());
        for (const auto& verts : comps)
            parts.push_back(
                canonical_certificate(induced_subgraph(g, verts)));
        std::sort(parts.begin(), parts.end());
        std::vector<std::uint64_t> rows(static_cast<std::size_t>(n), 0);
        int offset = 0;
        for (const auto& part : parts) {
            const int k = static_cast<int>(part[0]);
            for (int v = 0; v < k; ++v)
                rows[static_cast<std::size_t>(offset + v)] =
                    part[static_cast<std::size_t>(v) + 1] << offset;
            offset += k;
        }
        cert.insert(cert.end(), rows.begin(), rows.end());
        return cert;
    }
    std::vector<int> all(static_cast<std::size_t>(n));
    std::iota(all.begin(), all.end(), 0);
    CanonSearch search{g, {}, false};
    search.visit(Partition{all});
    cert.insert(cert.end(), search.best.begin(), search.best.end());
    return cert;
}

Graph canonical_form(const Graph& g) {
    const auto cert = canonical_certificate(g);
    const int n = static_cast<int>(cert[0]);
    Graph out(n);
    for (int v = 0; v < n; ++v) {
        std::uint64_t row = cert[static_cast<std::size_t>(v) + 1];
        while (row) {
            const int w = std::countr_zero(row);
            row &= row - 1;
            if (w > v)
                out.add_edge(v, w);
        }
    }
    return out;
}

bool is_isomorphic(const Graph& g, const Graph& h) {
    if (g.vertex_count() != h.vertex_count())
        return false;
    if (g.edge_count() != h.edge_count())
        return false;
    if (g.degree_sequence() != h.degree_sequence())
        return false;
    return canonical_certificate(g) == canonical_certificate(h);
}

std::vector<Graph> enumerate_graphs(int n) {
    if (n < 0)
        throw validation_error("vertex count must be non-negative");
    if (n > max_enumeration_vertices)
        throw resource_limit_error(
            "enumeration limited to " +
            std::to_string(max_enumeration_vertices) + " vertices, got " +
            std::to_string(n));
    // Grow by one vertex at a time: every graph on k vertices arises from a
    // graph on k-1 vertices by attaching the new vertex to some subset, and
    // the certificate set keeps one representative per class.
    std::vector<Graph> level{Graph(0)};
    for (int k = 1; k <= n; ++k) {
        std::set<std::vector<std::uint64_t>> seen;
        for (const Graph& base : level) {
            Graph grown(k);
            for (int a = 0; a < k - 1; ++a)
                for (int b = a + 1; b < k - 1; ++b)
                    if (base.adjacent(a, b))
                        grown.add_edge(a, b);
            const std::uint64_t subsets = std::uint64_t{1} << (k - 1);
            for (std::uint64_t s = 0; s < subsets; ++s) {
                Graph cand = grown;
                for (int v = 0; v < k - 1; ++v)
                    if ((s >> v) & 1u)
                        cand.add_edge(v, k - 1);
                seen.insert(canonical_certificate(cand));
            }
        }
        level.clear();
        for (const auto& cert : seen) {
            Graph rep(k);
            for (int v = 0; v < k; ++v) {
                std::uint64_t row = cert[static_cast<std::size_t>(v) + 1];
                while (row) {
                    const int w = std::countr_zero(row);
                    row &= row - 1;
                    if (w > v)
                        rep.add_edge(v, w);
                }
            }
            level.push_back(std::move(rep));
        }
    }
    return level;
}

std::string to_graph6(const Graph& g) {
    const int n = g.vertex_count();
    if (n > 62)
        throw validation_error(
            "graph6 short form supports at most 62 vertices, got " +
            std::to_string(n));
    std::string out;
    out.push_back(static_cast<char>(n + 63));
    int acc = 0;
    int bits = 0;
    for (int v = 1; v < n; ++v) {
        for (int u = 0; u < v; ++u) {
            acc = (acc << 1) | (g.adjacent(u, v) ? 1 : 0);
            if (++bits == 6) {
                out.push_back(static_cast<char>(acc + 63));
                acc = 0;
                bits = 0;
            }
        }
    }
    if (bits > 0)
        out.push_back(static_cast<char>((acc << (6 - bits)) + 63));
    return out;
}

Graph from_graph6(std::string_view text) {
    if (text.empty())
        throw validation_error("empty graph6 string");
    for (char c : text)
        if (c < 63 || c > 126)
            throw validation_error("invalid graph6 character '" +
                                   std::string(1, c) + "'");
    const int n = text[0] - 63;
    if (n == 63)
        throw validation_error(
            "graph6 long form (>62 vertices) is not supported");
    const int pair_bits = n * (n - 1) / 2;
    const std::size_t want = 1 + static_cast<std::size_t>((pair_bits + 5) / 6);
    if (text.size() != want)
        throw validation_error("graph6 string has " +
                               std::to_string(text.size()) +
                               " bytes, expected " + std::to_string(want) +
                               " for " + std::to_string(n) + " vertices");
    Graph g(n);
    int bit_index = 0;
    for (int v = 1; v < n; ++v) {
        for (int u = 0; u < v; ++u) {
            const int byte = 1 + bit_index / 6;
            const int shift = 5 - bit_index % 6;
            if ((text[static_cast<std::size_t>(byte)] - 63) >> shift & 1)
                g.add_edge(u, v);
            ++bit_index;
        }
    }
    // Padding bits past the triangle must be zero.
    while (bit_index < 6 * static_cast<int>(want - 1)) {
        const int byte = 1 + bit_index / 6;
        const int shift = 5 - bit_index % 6;
        if ((text[static_cast<std::size_t>(byte)] - 63) >> shift & 1)
            throw validation_error("graph6 padding bits must be zero");
        ++bit_index;
    }
    return g;
}

std::string to_dimacs(const Graph& g) {
    const int n = g.vertex_count();
    std::string out = "p edge " + std::to_string(n) + " " +
                      std::to_string(g.edge_count()) + "\n";
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (g.adjacent(u, v))
                out += "e " + std::to_string(u + 1) + " " +
                       std::to_string(v + 1) + "\n";
    return out;
}

} // namespace bigenic
