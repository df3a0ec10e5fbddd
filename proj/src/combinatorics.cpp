#include "qspread/combinatorics.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <vector>

namespace qspread {

OracleLimitError::OracleLimitError(const std::string& oracle, int n, int limit)
    : std::runtime_error(oracle + ": graph order " + std::to_string(n) + " exceeds oracle limit " +
                         std::to_string(limit)),
      order_(n),
      limit_(limit) {}

namespace {

using Mask = std::uint64_t;
constexpr int kMaskBits = 63;

struct BitGraph {
    int n;
    std::vector<Mask> adj;
    Mask all;
};

BitGraph to_bits(const Graph& g, const char* oracle, int limit) {
    const int cap = std::min(limit, kMaskBits);
    if (g.order() > cap) throw OracleLimitError(oracle, g.order(), cap);
    BitGraph b{g.order(), std::vector<Mask>(g.order(), 0), 0};
    for (auto [u, v] : g.edges()) {
        b.adj[u] |= Mask{1} << v;
        b.adj[v] |= Mask{1} << u;
    }
    b.all = b.n == 64 ? ~Mask{0} : (Mask{1} << b.n) - 1;
    return b;
}

class IndependentSetSearch {
public:
    explicit IndependentSetSearch(const BitGraph& g) : g_(g) {}

    int run() {
        best_ = 0;
        expand(g_.all, 0);
        return best_;
    }

private:
    void expand(Mask candidates, int size) {
        // vertices with at most one neighbor among the candidates are always
        // safe to take
        bool changed = true;
        while (changed && candidates) {
            changed = false;
            for (Mask rest = candidates; rest; rest &= rest - 1) {
                int v = std::countr_zero(rest);
                if (std::popcount(g_.adj[v] & candidates) <= 1) {
                    candidates &= ~(g_.adj[v] | (Mask{1} << v));
                    ++size;
                    changed = true;
                    break;
                }
            }
        }
        if (!candidates) {
            best_ = std::max(best_, size);
            return;
        }
        if (size + std::popcount(candidates) <= best_) return;

        int pivot = -1;
        int pivot_degree = -1;
        for (Mask rest = candidates; rest; rest &= rest - 1) {
            int v = std::countr_zero(rest);
            int d = std::popcount(g_.adj[v] & candidates);
            if (d > pivot_degree) {
                pivot = v;
                pivot_degree = d;
            }
        }
        const Mask bit = Mask{1} << pivot;
        expand(candidates & ~(g_.adj[pivot] | bit), size + 1);
        expand(candidates & ~bit, size);
    }

    const BitGraph& g_;
    int best_ = 0;
};

bool induced_bipartite(const BitGraph& g, Mask keep) {
    Mask uncolored = keep;
    while (uncolored) {
        Mask frontier = uncolored & (~uncolored + 1);
        Mask color[2] = {frontier, 0};
        int side = 0;
        uncolored &= ~frontier;
        while (frontier) {
            Mask reached = 0;
            for (Mask rest = frontier; rest; rest &= rest - 1) reached |= g.adj[std::countr_zero(rest)];
            reached &= keep;
            if (reached & color[side]) return false;
            side ^= 1;
            frontier = reached & uncolored;
            color[side] |= frontier;
            uncolored &= ~frontier;
        }
    }
    return true;
}

}  // namespace

int independence_number(const Graph& g, int limit) {
    auto bits = to_bits(g, "independence_number", limit);
    return IndependentSetSearch(bits).run();
}

int vertex_cover_number(const Graph& g, int limit) { return g.order() - independence_number(g, limit); }

int vertex_bipartiteness(const Graph& g, int limit) {
    auto bits = to_bits(g, "vertex_bipartiteness", limit);
    const int n = bits.n;
    for (int k = 0; k <= n; ++k) {
        if (k == 0) {
            if (induced_bipartite(bits, bits.all)) return 0;
            continue;
        }
        // Gosper's hack over all k-subsets of the n vertices
        Mask subset = (Mask{1} << k) - 1;
        const Mask end = Mask{1} << n;
        while (subset < end) {
            if (induced_bipartite(bits, bits.all & ~subset)) return k;
            Mask low = subset & (~subset + 1);
            Mask ripple = subset + low;
            subset = (((ripple ^ subset) >> 2) / low) | ripple;
        }
    }
    return n;
}

int max_cut(const Graph& g, int limit) {
    auto bits = to_bits(g, "edge_bipartiteness", limit);
    const int n = bits.n;
    if (n <= 1) return 0;
    std::vector<int> degree(n);
    for (int v = 0; v < n; ++v) degree[v] = std::popcount(bits.adj[v]);

    // Gray-code walk over the side assignment of vertices 0..n-2
    Mask side = 0;
    int cut = 0;
    int best = 0;
    const std::uint64_t steps = std::uint64_t{1} << (n - 1);
    for (std::uint64_t i = 1; i < steps; ++i) {
        int v = std::countr_zero(i);
        const Mask bit = Mask{1} << v;
        int in_side = std::popcount(bits.adj[v] & side);
        int same = (side & bit) ? in_side : degree[v] - in_side;
        cut += same - (degree[v] - same);
        side ^= bit;
        best = std::max(best, cut);
    }
    return best;
}

int edge_bipartiteness(const Graph& g, int limit) { return g.size() - max_cut(g, limit); }

CombinatorialInvariants combinatorial_invariants(const Graph& g, const OracleLimits& limits) {
    CombinatorialInvariants c;
    c.alpha = independence_number(g, limits.independence);
    c.tau = g.order() - c.alpha;
    c.vb = vertex_bipartiteness(g, limits.vertex_bipartiteness);
    c.eb = edge_bipartiteness(g, limits.edge_bipartiteness);
    return c;
}

ConditionCheck check_condition_cond(const Graph& g, int limit) {
    ConditionCheck c;
    const long long n = g.order();
    c.k = g.order() - independence_number(g, limit);
    c.lhs = n * c.k * (c.k - 1);
    c.rhs = 8LL * g.size();
    c.holds = c.lhs <= c.rhs;
    c.necessary_condition = 4 * (n - 1) >= static_cast<long long>(c.k) * (c.k - 1);
    return c;
}

}  // namespace qspread
