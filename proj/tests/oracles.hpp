#pragma once
// Independent reference implementations used only by the tests. None of them
// shares code with the library algorithm it checks.

#include <algorithm>
#include <bit>
#include <complex>
#include <cstdint>
#include <functional>
#include <numbers>
#include <stdexcept>
#include <vector>

#include "qspread/graph.hpp"
#include "qspread/matrices.hpp"

namespace oracle {

using qspread::Edge;
using qspread::Graph;

/// Characteristic polynomial coefficients of an integer matrix, highest degree
/// first (c[0] = 1), by Faddeev-LeVerrier. Exact for the small orders used.
inline std::vector<long long> characteristic_polynomial(const qspread::IntMatrix& a) {
    const auto n = a.rows();
    std::vector<long long> c(n + 1, 0);
    c[0] = 1;
    qspread::IntMatrix m = qspread::IntMatrix::Zero(n, n);
    for (Eigen::Index k = 1; k <= n; ++k) {
        m = a * m;
        for (Eigen::Index i = 0; i < n; ++i) m(i, i) += c[k - 1];
        const qspread::IntMatrix am = a * m;
        c[k] = -am.trace() / k;
    }
    return c;
}

/// All roots of a monic polynomial by Aberth-Ehrlich iteration; returns real
/// parts sorted descending (the matrices tested are symmetric).
inline std::vector<double> real_roots(const std::vector<long long>& coeffs) {
    using cplx = std::complex<long double>;
    const int n = static_cast<int>(coeffs.size()) - 1;
    auto eval = [&](cplx z, cplx& deriv) {
        cplx p = 0, d = 0;
        for (int i = 0; i <= n; ++i) {
            d = d * z + p;
            p = p * z + static_cast<long double>(coeffs[i]);
        }
        deriv = d;
        return p;
    };
    long double radius = 1;
    for (int i = 1; i <= n; ++i) radius = std::max(radius, 1 + std::abs(static_cast<long double>(coeffs[i])));
    std::vector<cplx> z(n);
    for (int k = 0; k < n; ++k) {
        const long double angle = 2 * std::numbers::pi_v<long double> * k / n + 0.4L;
        z[k] = std::polar(radius * 0.5L, angle);
    }
    for (int iter = 0; iter < 2000; ++iter) {
        long double change = 0;
        for (int k = 0; k < n; ++k) {
            cplx deriv;
            const cplx p = eval(z[k], deriv);
            if (p == cplx(0)) continue;
            const cplx ratio = p / deriv;
            cplx repulsion = 0;
            for (int j = 0; j < n; ++j)
                if (j != k) repulsion += cplx(1) / (z[k] - z[j]);
            const cplx w = ratio / (cplx(1) - ratio * repulsion);
            z[k] -= w;
            change = std::max(change, std::abs(w));
        }
        if (change < 1e-15L) break;
    }
    std::vector<long double> re;
    for (auto r : z) re.push_back(r.real());
    std::sort(re.begin(), re.end(), std::greater<>());
    // A root of multiplicity k converges slowly and only to about eps^(1/k).
    // It is a simple root of the (k-1)-th derivative, so polish the cluster
    // mean with Newton steps there.
    auto derivative = [](std::vector<long double> c) {
        const int deg = static_cast<int>(c.size()) - 1;
        std::vector<long double> d;
        for (int i = 0; i < deg; ++i) d.push_back(c[i] * (deg - i));
        return d;
    };
    auto horner = [](const std::vector<long double>& c, long double x) {
        long double v = 0;
        for (long double a : c) v = v * x + a;
        return v;
    };
    std::vector<double> out;
    for (std::size_t i = 0; i < re.size();) {
        std::size_t j = i + 1;
        while (j < re.size() && re[j - 1] - re[j] < 5e-3L) ++j;
        long double root = 0;
        for (std::size_t k = i; k < j; ++k) root += re[k];
        root /= static_cast<long double>(j - i);
        std::vector<long double> c(coeffs.begin(), coeffs.end());
        for (std::size_t k = 1; k < j - i; ++k) c = derivative(c);
        const auto dc = derivative(c);
        for (int step = 0; step < 50 && !dc.empty(); ++step) {
            const long double slope = horner(dc, root);
            if (slope == 0) break;
            const long double delta = horner(c, root) / slope;
            root -= delta;
            if (std::abs(delta) < 1e-18L) break;
        }
        out.insert(out.end(), j - i, static_cast<double>(root));
        i = j;
    }
    return out;
}

inline bool adjacent_in(const Graph& g, int u, int v) { return g.adjacent(u, v); }

/// Bipartiteness of the subgraph induced by `keep`, by plain two-colouring
/// with an explicit stack.
inline bool induced_bipartite(const Graph& g, std::uint64_t keep) {
    const int n = g.order();
    std::vector<int> colour(n, -1);
    for (int s = 0; s < n; ++s) {
        if (!(keep >> s & 1) || colour[s] != -1) continue;
        colour[s] = 0;
        std::vector<int> stack{s};
        while (!stack.empty()) {
            int u = stack.back();
            stack.pop_back();
            for (int v = 0; v < n; ++v) {
                if (!(keep >> v & 1) || !g.adjacent(u, v)) continue;
                if (colour[v] == -1) {
                    colour[v] = 1 - colour[u];
                    stack.push_back(v);
                } else if (colour[v] == colour[u]) {
                    return false;
                }
            }
        }
    }
    return true;
}

inline int independence_number(const Graph& g) {
    const int n = g.order();
    int best = 0;
    for (std::uint64_t s = 0; s < (1ULL << n); ++s) {
        bool ok = true;
        for (auto [u, v] : g.edges())
            if ((s >> u & 1) && (s >> v & 1)) ok = false;
        if (ok) best = std::max(best, std::popcount(s));
    }
    return best;
}

inline int vertex_cover_number(const Graph& g) {
    const int n = g.order();
    int best = n;
    for (std::uint64_t s = 0; s < (1ULL << n); ++s) {
        bool covers = true;
        for (auto [u, v] : g.edges())
            if (!(s >> u & 1) && !(s >> v & 1)) covers = false;
        if (covers) best = std::min(best, std::popcount(s));
    }
    return best;
}

/// Minimum deletion set over the whole power set (no size ordering).
inline int vertex_bipartiteness(const Graph& g) {
    const int n = g.order();
    const std::uint64_t all = (1ULL << n) - 1;
    int best = n;
    for (std::uint64_t s = 0; s <= all; ++s) {
        if (induced_bipartite(g, all & ~s)) best = std::min(best, std::popcount(s));
    }
    return best;
}

/// m - maxcut over all 2^n colourings (no pinned vertex).
inline int edge_bipartiteness(const Graph& g) {
    const int n = g.order();
    int best_cut = 0;
    for (std::uint64_t s = 0; s < (1ULL << n); ++s) {
        int cut = 0;
        for (auto [u, v] : g.edges())
            if ((s >> u & 1) != (s >> v & 1)) ++cut;
        best_cut = std::max(best_cut, cut);
    }
    return g.size() - best_cut;
}

/// Exhaustive search for an odd simple cycle (small n only).
inline bool has_odd_cycle(const Graph& g) {
    const int n = g.order();
    std::vector<bool> on_path(n, false);
    std::function<bool(int, int, int)> walk = [&](int start, int u, int length) {
        for (int v : g.neighbors(u)) {
            if (v == start && length >= 3 && length % 2 == 1) return true;
            if (v <= start || on_path[v]) continue;
            on_path[v] = true;
            if (walk(start, v, length + 1)) return true;
            on_path[v] = false;
        }
        return false;
    };
    for (int s = 0; s < n; ++s) {
        std::fill(on_path.begin(), on_path.end(), false);
        on_path[s] = true;
        if (walk(s, s, 1)) return true;
    }
    return false;
}

/// k-regular circulant on n vertices: i ~ i +- 1..k/2, plus the antipode when
/// k is odd (needs n even). Requires k < n.
inline Graph circulant_regular(int n, int k) {
    if (k >= n || (k % 2 == 1 && n % 2 == 1)) throw std::invalid_argument("no such circulant");
    std::vector<Edge> edges;
    for (int i = 0; i < n; ++i) {
        for (int j = 1; j <= k / 2; ++j) {
            const int v = (i + j) % n;
            edges.emplace_back(std::min(i, v), std::max(i, v));
        }
        if (k % 2 == 1 && i < n / 2) edges.emplace_back(i, i + n / 2);
    }
    std::sort(edges.begin(), edges.end());
    edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
    return Graph(n, edges);
}

/// Every labelled graph on n vertices (isolated vertices allowed), n <= 6.
inline std::vector<Graph> all_graphs(int n) {
    std::vector<Edge> pairs;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) pairs.emplace_back(u, v);
    std::vector<Graph> out;
    for (std::uint64_t s = 0; s < (1ULL << pairs.size()); ++s) {
        std::vector<Edge> edges;
        for (std::size_t i = 0; i < pairs.size(); ++i)
            if (s >> i & 1) edges.push_back(pairs[i]);
        out.emplace_back(n, edges, true);
    }
    return out;
}

}  // namespace oracle
