#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace qspread {

using Vertex = int;
using Edge = std::pair<Vertex, Vertex>;

class GraphError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Raised by read_edge_list; line() is 1-based.
class ParseError : public std::runtime_error {
public:
    ParseError(int line, const std::string& what);
    int line() const { return line_; }

private:
    int line_;
};

/// Simple undirected graph. Immutable once built: edges are stored sorted with
/// first < second, and degrees and neighbor lists are cached.
class Graph {
public:
    /// Throws GraphError on self-loops, duplicate or out-of-range edges, and on
    /// isolated vertices unless allow_isolated is set.
    Graph(int n, std::vector<Edge> edges, bool allow_isolated = false);

    int order() const { return n_; }
    int size() const { return static_cast<int>(edges_.size()); }
    const std::vector<Edge>& edges() const { return edges_; }
    const std::vector<int>& degrees() const { return degrees_; }
    int degree(Vertex v) const { return degrees_[v]; }
    std::span<const Vertex> neighbors(Vertex v) const { return adjacency_[v]; }
    bool adjacent(Vertex u, Vertex v) const;
    bool has_isolated_vertex() const;

    friend bool operator==(const Graph& a, const Graph& b) {
        return a.n_ == b.n_ && a.edges_ == b.edges_;
    }

private:
    int n_;
    std::vector<Edge> edges_;
    std::vector<int> degrees_;
    std::vector<std::vector<Vertex>> adjacency_;
};

Graph build_graph(int n, std::vector<Edge> edges, bool allow_isolated = false);

enum class Family {
    path,
    cycle,
    complete,
    star,
    complete_bipartite,
    complete_plus_isolated,  ///< K_{n-1} union K_1
};

/// Named families with fixed labelings:
///  - path n: edges {i, i+1}
///  - cycle n (n >= 3): path plus {0, n-1}
///  - complete n (n >= 2)
///  - star n (n >= 2): center 0, leaves 1..n-1
///  - complete_bipartite (p, q): parts {0..p-1} and {p..p+q-1}
///  - complete_plus_isolated n (n >= 2): K_{n-1} on 0..n-2, vertex n-1 isolated
/// params holds one size, or two for complete_bipartite.
Graph generate_named(Family family, std::span<const int> params);

/// Random connected simple graph with exactly m edges, a pure function of
/// (n, m, seed). A spanning tree is decoded from a uniform Pruefer sequence
/// (n-2 draws of below(n)), then m-(n-1) non-tree pairs are picked uniformly
/// without replacement by a partial Fisher-Yates over the lexicographically
/// ordered non-tree pairs.
Graph generate_random_connected(int n, int m, std::uint64_t seed);

struct DegreeProfile {
    int n = 0;
    int m = 0;
    std::vector<int> degrees;
    int min_degree = 0;
    int max_degree = 0;
    double average = 0.0;            ///< 2m/n
    long long zagreb1 = 0;           ///< sum of squared degrees
    std::vector<long long> second;   ///< A*d: sum of neighbor degrees

    bool regular() const { return min_degree == max_degree; }
};

DegreeProfile degree_profile(const Graph& g);

struct Bipartition {
    std::vector<Vertex> left;
    std::vector<Vertex> right;
};

/// BFS 2-coloring; returns the color classes when the graph is bipartite.
std::optional<Bipartition> bipartition(const Graph& g);
bool is_bipartite(const Graph& g);
bool is_connected(const Graph& g);

/// One vertex per edge of g, in g.edges() order; two are adjacent when the
/// edges share an endpoint. Isolated vertices are allowed in the result.
Graph line_graph(const Graph& g);

/// Edge-list text format: first significant line is n, then one "i j" per
/// line. Blank lines and lines starting with '#' are skipped.
Graph read_edge_list(std::string_view text, bool allow_isolated = false);
std::string write_edge_list(const Graph& g);

}  // namespace qspread
