#ifndef BIGENIC_GRAPH_HPP
#define BIGENIC_GRAPH_HPP

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace bigenic {

/// Simple undirected graph on at most 64 labelled vertices 0..n-1.
/// Adjacency is kept as one 64-bit neighbourhood mask per vertex, so
/// neighbourhood intersection and complement are single word operations.
/// Instances are treated as immutable once built; every operation below
/// returns a fresh graph.
class Graph {
public:
    static constexpr int max_vertices = 64;

    Graph() = default;
    explicit Graph(int n);

    static Graph from_edges(int n,
                            std::initializer_list<std::pair<int, int>> edges);

    int vertex_count() const { return n_; }
    int edge_count() const;

    bool adjacent(int u, int v) const;
    void add_edge(int u, int v);

    /// Neighbourhood of v as a bit mask (bit u set iff u ~ v).
    std::uint64_t neighbours(int v) const;
    int degree(int v) const;

    /// Degree sequence sorted ascending.
    std::vector<int> degree_sequence() const;

    /// Mask with bits 0..n-1 set.
    std::uint64_t vertex_mask() const;

    bool operator==(const Graph&) const = default;

private:
    void check_vertex(int v) const;

    int n_ = 0;
    std::vector<std::uint64_t> adj_;
};

/// An induced embedding of a pattern into a host: mapping[p] is the host
/// vertex carrying pattern vertex p. Injective, and it preserves both
/// adjacency and non-adjacency.
struct Witness {
    std::vector<int> mapping;

    bool operator==(const Witness&) const = default;
};

/// Re-checks that w is a valid induced embedding of pattern into host.
bool is_induced_embedding(const Graph& host, const Graph& pattern,
                          const Witness& w);

Graph complement(const Graph& g);
Graph disjoint_union(const Graph& g, const Graph& h);

/// Subgraph induced by the given vertices; result vertex i corresponds to
/// vertices[i].
Graph induced_subgraph(const Graph& g, std::span<const int> vertices);

/// Vertex sets of the connected components, each sorted ascending, ordered
/// by smallest member.
std::vector<std::vector<int>> component_vertex_sets(const Graph& g);

/// Connected components as induced subgraphs, ordered by smallest vertex.
std::vector<Graph> components(const Graph& g);

/// One result vertex per edge of g (edges in lexicographic order); result
/// vertices adjacent iff the edges share an endpoint.
Graph line_graph(const Graph& g);

/// First induced embedding of pattern into host in the fixed search order,
/// or nullopt if none exists. Deterministic. A pattern on zero vertices is
/// always present.
std::optional<Witness> contains_induced(const Graph& host,
                                        const Graph& pattern);

/// Canonical certificate: the lexicographically least relabelled adjacency
/// rows, prefixed by the vertex count. Equal certificates iff isomorphic.
std::vector<std::uint64_t> canonical_certificate(const Graph& g);

/// The canonically relabelled copy of g.
Graph canonical_form(const Graph& g);

bool is_isomorphic(const Graph& g, const Graph& h);

/// Highest vertex count accepted by enumerate_graphs.
constexpr int max_enumeration_vertices = 7;

/// Exactly one representative (its canonical form) per isomorphism class of
/// simple graphs on n vertices, in certificate order.
std::vector<Graph> enumerate_graphs(int n);

/// graph6 encoding (short form, n <= 62).
std::string to_graph6(const Graph& g);
Graph from_graph6(std::string_view text);

/// DIMACS .col format ("p edge n m" plus 1-based "e u v" lines).
std::string to_dimacs(const Graph& g);

} // namespace bigenic

#endif
