#pragma once

#include <stdexcept>
#include <string>

#include "qspread/graph.hpp"

namespace qspread {

/// Raised when an exact oracle is asked for a graph above its size cap.
class OracleLimitError : public std::runtime_error {
public:
    OracleLimitError(const std::string& oracle, int n, int limit);
    int order() const { return order_; }
    int limit() const { return limit_; }

private:
    int order_;
    int limit_;
};

/// Largest n each exhaustive oracle accepts. Bitmask search caps every limit
/// at 63 regardless of the setting.
struct OracleLimits {
    int independence = 30;
    int vertex_bipartiteness = 20;
    int edge_bipartiteness = 24;

    /// Same cap for all three oracles.
    static OracleLimits uniform(int limit) { return {limit, limit, limit}; }
};

/// Exact maximum independent set size (branch and bound on bitsets).
int independence_number(const Graph& g, int limit = OracleLimits{}.independence);

/// n - alpha(G).
int vertex_cover_number(const Graph& g, int limit = OracleLimits{}.independence);

/// Minimum number of vertices whose deletion leaves a bipartite graph.
/// Vertex subsets are scanned by increasing size; the first size with a
/// bipartite remainder is returned.
int vertex_bipartiteness(const Graph& g, int limit = OracleLimits{}.vertex_bipartiteness);

/// m - maxcut(G); the cut is maximized exhaustively over the 2^(n-1)
/// bipartitions with the last vertex pinned to one side.
int edge_bipartiteness(const Graph& g, int limit = OracleLimits{}.edge_bipartiteness);

int max_cut(const Graph& g, int limit = OracleLimits{}.edge_bipartiteness);

struct CombinatorialInvariants {
    int alpha = 0;
    int tau = 0;
    int vb = 0;
    int eb = 0;
};

CombinatorialInvariants combinatorial_invariants(const Graph& g, const OracleLimits& limits = {});

struct ConditionCheck {
    bool holds = false;                 ///< n(n-alpha)(n-alpha-1) <= 8m
    int k = 0;                          ///< n - alpha
    bool necessary_condition = false;   ///< 4(n-1) >= k(k-1)
    long long lhs = 0;
    long long rhs = 0;
};

ConditionCheck check_condition_cond(const Graph& g, int limit = OracleLimits{}.independence);

}  // namespace qspread
