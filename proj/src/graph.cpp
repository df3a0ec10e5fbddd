#include "qspread/graph.hpp"

#include <algorithm>
#include <charconv>
#include <numeric>
#include <queue>

#include "qspread/rng.hpp"

namespace qspread {

ParseError::ParseError(int line, const std::string& what)
    : std::runtime_error("line " + std::to_string(line) + ": " + what), line_(line) {}

Graph::Graph(int n, std::vector<Edge> edges, bool allow_isolated) : n_(n), edges_(std::move(edges)) {
    if (n < 1) throw GraphError("vertex count must be positive");
    for (auto& [u, v] : edges_) {
        if (u < 0 || v < 0 || u >= n || v >= n) {
            throw GraphError("edge {" + std::to_string(u) + "," + std::to_string(v) +
                             "} has an endpoint outside [0," + std::to_string(n) + ")");
        }
        if (u == v) throw GraphError("self-loop at vertex " + std::to_string(u));
        if (u > v) std::swap(u, v);
    }
    std::sort(edges_.begin(), edges_.end());
    auto dup = std::adjacent_find(edges_.begin(), edges_.end());
    if (dup != edges_.end()) {
        throw GraphError("duplicate edge {" + std::to_string(dup->first) + "," +
                         std::to_string(dup->second) + "}");
    }

    degrees_.assign(n, 0);
    adjacency_.assign(n, {});
    for (auto [u, v] : edges_) {
        ++degrees_[u];
        ++degrees_[v];
        adjacency_[u].push_back(v);
        adjacency_[v].push_back(u);
    }
    for (auto& list : adjacency_) std::sort(list.begin(), list.end());

    if (!allow_isolated) {
        for (int v = 0; v < n; ++v) {
            if (degrees_[v] == 0) throw GraphError("vertex " + std::to_string(v) + " is isolated");
        }
    }
}

bool Graph::adjacent(Vertex u, Vertex v) const {
    const auto& list = adjacency_[u];
    return std::binary_search(list.begin(), list.end(), v);
}

bool Graph::has_isolated_vertex() const {
    return std::find(degrees_.begin(), degrees_.end(), 0) != degrees_.end();
}

Graph build_graph(int n, std::vector<Edge> edges, bool allow_isolated) {
    return Graph(n, std::move(edges), allow_isolated);
}

namespace {

int require_size(std::span<const int> params, std::size_t index, int minimum, const char* family) {
    if (params.size() <= index) {
        throw GraphError(std::string(family) + ": missing size parameter");
    }
    int value = params[index];
    if (value < minimum) {
        throw GraphError(std::string(family) + ": size " + std::to_string(value) + " is below " +
                         std::to_string(minimum));
    }
    return value;
}

std::vector<Edge> clique_edges(int first, int count) {
    std::vector<Edge> edges;
    for (int i = first; i < first + count; ++i)
        for (int j = i + 1; j < first + count; ++j) edges.emplace_back(i, j);
    return edges;
}

}  // namespace

Graph generate_named(Family family, std::span<const int> params) {
    std::vector<Edge> edges;
    switch (family) {
        case Family::path: {
            int n = require_size(params, 0, 2, "path");
            for (int i = 0; i + 1 < n; ++i) edges.emplace_back(i, i + 1);
            return Graph(n, std::move(edges));
        }
        case Family::cycle: {
            int n = require_size(params, 0, 3, "cycle");
            for (int i = 0; i + 1 < n; ++i) edges.emplace_back(i, i + 1);
            edges.emplace_back(0, n - 1);
            return Graph(n, std::move(edges));
        }
        case Family::complete: {
            int n = require_size(params, 0, 2, "complete");
            return Graph(n, clique_edges(0, n));
        }
        case Family::star: {
            int n = require_size(params, 0, 2, "star");
            for (int i = 1; i < n; ++i) edges.emplace_back(0, i);
            return Graph(n, std::move(edges));
        }
        case Family::complete_bipartite: {
            int p = require_size(params, 0, 1, "complete_bipartite");
            int q = require_size(params, 1, 1, "complete_bipartite");
            for (int i = 0; i < p; ++i)
                for (int j = 0; j < q; ++j) edges.emplace_back(i, p + j);
            return Graph(p + q, std::move(edges));
        }
        case Family::complete_plus_isolated: {
            int n = require_size(params, 0, 2, "complete_plus_isolated");
            return Graph(n, clique_edges(0, n - 1), /*allow_isolated=*/true);
        }
    }
    throw GraphError("unknown family");
}

namespace {

// Standard linear-time Pruefer decoding.
std::vector<Edge> decode_pruefer(const std::vector<int>& code, int n) {
    std::vector<int> degree(n, 1);
    for (int v : code) ++degree[v];
    std::vector<Edge> edges;
    edges.reserve(n - 1);
    int ptr = 0;
    while (degree[ptr] != 1) ++ptr;
    int leaf = ptr;
    for (int v : code) {
        edges.emplace_back(std::min(leaf, v), std::max(leaf, v));
        if (--degree[v] == 1 && v < ptr) {
            leaf = v;
        } else {
            ++ptr;
            while (degree[ptr] != 1) ++ptr;
            leaf = ptr;
        }
    }
    edges.emplace_back(std::min(leaf, n - 1), std::max(leaf, n - 1));
    return edges;
}

}  // namespace

Graph generate_random_connected(int n, int m, std::uint64_t seed) {
    if (n < 2) throw GraphError("random connected graph needs at least 2 vertices");
    const long long max_edges = static_cast<long long>(n) * (n - 1) / 2;
    if (m < n - 1 || m > max_edges) {
        throw GraphError("edge count " + std::to_string(m) + " outside [" + std::to_string(n - 1) + "," +
                         std::to_string(max_edges) + "]");
    }
    Xoshiro256 rng(seed);

    std::vector<Edge> edges;
    if (n == 2) {
        edges.emplace_back(0, 1);
    } else {
        std::vector<int> code(n - 2);
        for (auto& c : code) c = static_cast<int>(rng.below(n));
        edges = decode_pruefer(code, n);
    }
    std::sort(edges.begin(), edges.end());

    const int extra = m - (n - 1);
    if (extra > 0) {
        std::vector<Edge> pool;
        pool.reserve(max_edges - (n - 1));
        auto tree_it = edges.begin();
        for (int i = 0; i < n; ++i) {
            for (int j = i + 1; j < n; ++j) {
                if (tree_it != edges.end() && *tree_it == Edge{i, j}) {
                    ++tree_it;
                    continue;
                }
                pool.emplace_back(i, j);
            }
        }
        for (int i = 0; i < extra; ++i) {
            auto j = i + static_cast<std::size_t>(rng.below(pool.size() - i));
            std::swap(pool[i], pool[j]);
            edges.push_back(pool[i]);
        }
    }
    return Graph(n, std::move(edges));
}

DegreeProfile degree_profile(const Graph& g) {
    DegreeProfile p;
    p.n = g.order();
    p.m = g.size();
    p.degrees = g.degrees();
    auto [lo, hi] = std::minmax_element(p.degrees.begin(), p.degrees.end());
    p.min_degree = *lo;
    p.max_degree = *hi;
    p.average = 2.0 * p.m / p.n;
    p.second.assign(p.n, 0);
    for (int v = 0; v < p.n; ++v) {
        p.zagreb1 += static_cast<long long>(p.degrees[v]) * p.degrees[v];
        for (Vertex u : g.neighbors(v)) p.second[v] += p.degrees[u];
    }
    return p;
}

std::optional<Bipartition> bipartition(const Graph& g) {
    const int n = g.order();
    std::vector<int> color(n, -1);
    std::queue<Vertex> queue;
    for (int start = 0; start < n; ++start) {
        if (color[start] != -1) continue;
        color[start] = 0;
        queue.push(start);
        while (!queue.empty()) {
            Vertex v = queue.front();
            queue.pop();
            for (Vertex u : g.neighbors(v)) {
                if (color[u] == -1) {
                    color[u] = 1 - color[v];
                    queue.push(u);
                } else if (color[u] == color[v]) {
                    return std::nullopt;
                }
            }
        }
    }
    Bipartition parts;
    for (int v = 0; v < n; ++v) (color[v] == 0 ? parts.left : parts.right).push_back(v);
    return parts;
}

bool is_bipartite(const Graph& g) { return bipartition(g).has_value(); }

bool is_connected(const Graph& g) {
    const int n = g.order();
    std::vector<char> seen(n, 0);
    std::vector<Vertex> stack{0};
    seen[0] = 1;
    int reached = 1;
    while (!stack.empty()) {
        Vertex v = stack.back();
        stack.pop_back();
        for (Vertex u : g.neighbors(v)) {
            if (!seen[u]) {
                seen[u] = 1;
                ++reached;
                stack.push_back(u);
            }
        }
    }
    return reached == n;
}

Graph line_graph(const Graph& g) {
    if (g.size() < 1) throw GraphError("line graph needs at least one edge");
    const int n = g.order();
    // edge indices incident to each vertex
    std::vector<std::vector<int>> incident(n);
    for (int e = 0; e < g.size(); ++e) {
        incident[g.edges()[e].first].push_back(e);
        incident[g.edges()[e].second].push_back(e);
    }
    std::vector<Edge> edges;
    for (const auto& list : incident) {
        for (std::size_t a = 0; a < list.size(); ++a)
            for (std::size_t b = a + 1; b < list.size(); ++b) edges.emplace_back(list[a], list[b]);
    }
    // Two distinct simple edges share at most one endpoint, so no duplicates.
    return Graph(g.size(), std::move(edges), /*allow_isolated=*/true);
}

namespace {

std::vector<std::string_view> split_ws(std::string_view line) {
    std::vector<std::string_view> tokens;
    std::size_t i = 0;
    while (i < line.size()) {
        while (i < line.size() && (line[i] == ' ' || line[i] == '\t')) ++i;
        std::size_t start = i;
        while (i < line.size() && line[i] != ' ' && line[i] != '\t') ++i;
        if (i > start) tokens.push_back(line.substr(start, i - start));
    }
    return tokens;
}

int parse_int(std::string_view token, int line) {
    int value = 0;
    auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
    if (ec != std::errc() || ptr != token.data() + token.size()) {
        throw ParseError(line, "expected an integer, got '" + std::string(token) + "'");
    }
    return value;
}

}  // namespace

Graph read_edge_list(std::string_view text, bool allow_isolated) {
    std::optional<int> n;
    std::vector<Edge> edges;
    int line_no = 0;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        std::size_t end = text.find('\n', pos);
        if (end == std::string_view::npos) end = text.size();
        std::string_view line = text.substr(pos, end - pos);
        pos = end + 1;
        ++line_no;
        if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
        auto tokens = split_ws(line);
        if (tokens.empty() || tokens.front().front() == '#') continue;
        if (!n) {
            if (tokens.size() != 1) throw ParseError(line_no, "expected the vertex count alone");
            n = parse_int(tokens[0], line_no);
            if (*n < 1) throw ParseError(line_no, "vertex count must be positive");
            continue;
        }
        if (tokens.size() != 2) throw ParseError(line_no, "expected two vertex indices");
        int u = parse_int(tokens[0], line_no);
        int v = parse_int(tokens[1], line_no);
        if (u < 0 || v < 0 || u >= *n || v >= *n) {
            throw ParseError(line_no, "vertex index out of range [0," + std::to_string(*n) + ")");
        }
        edges.emplace_back(u, v);
    }
    if (!n) throw ParseError(line_no, "missing vertex count");
    return Graph(*n, std::move(edges), allow_isolated);
}

std::string write_edge_list(const Graph& g) {
    std::string out = std::to_string(g.order()) + "\n";
    for (auto [u, v] : g.edges()) {
        out += std::to_string(u);
        out += ' ';
        out += std::to_string(v);
        out += '\n';
    }
    return out;
}

}  // namespace qspread
