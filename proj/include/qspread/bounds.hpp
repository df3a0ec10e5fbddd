#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include "qspread/graph.hpp"
#include "qspread/matrices.hpp"

namespace qspread {

enum class Direction { lower, upper };

/// Which spread a bound constrains.
enum class Target {
    signless,   ///< s_Q(G)
    adjacency,  ///< s(G)
    laplacian,  ///< s_L(G)
};

/// Preconditions a bound was derived under; combined as a bit set.
enum Assumption : unsigned {
    kNone = 0,
    kConnected = 1u << 0,
    kRegular = 1u << 1,
    kBipartiteForEquality = 1u << 2,
    kNoIsolatedVertices = 1u << 3,
    kAtLeastFiveVertices = 1u << 4,
    kNeedsOracle = 1u << 5,
};

struct BoundResult {
    std::string name;
    double value = 0.0;
    Direction direction = Direction::lower;
    Target target = Target::signless;
    unsigned assumptions = kNone;
    std::vector<std::string> inputs_used;
    bool strict = false;  ///< the underlying inequality is strict
};

std::string to_string(Direction d);
std::string to_string(Target t);

/// Raised when a bound is evaluated outside its preconditions.
class BoundDomainError : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

// Generic spread bounds for a symmetric matrix W.

/// Mirsky: s(W) <= sqrt(2|W|_F^2 - (2/n) tr(W)^2).
double mirsky_upper(const SymmetricMatrix& w);

/// Barnes-Hoffman: max over ordered pairs of
/// sqrt((w_ii - w_jj)^2 + 2 sum_{s!=j} w_js^2 + 2 sum_{s!=i} w_is^2).
double barnes_hoffman_lower(const SymmetricMatrix& w);

/// Jiang-Zhan refinement with the e_ij correction term. Diagonal equality is
/// tested with exact floating comparison, which is exact on the integer
/// valued graph matrices.
double jiang_zhan_lower(const SymmetricMatrix& w);

/// Jiang-Zhan value for one specific pair (i != j), squared.
double jiang_zhan_pair_squared(const SymmetricMatrix& w, int i, int j);

// Lower bounds on s_Q(G).

BoundResult lb_mu1_minus_vb(double mu1, int vertex_bipartiteness);
BoundResult lb_4m_over_n_minus_vb(const DegreeProfile& p, int vertex_bipartiteness);
BoundResult lb_2lambda1_minus_vb(double lambda1, int vertex_bipartiteness);

/// max(2 sqrt(Delta), sqrt((Delta-delta)^2 + 2 Delta + 2 delta)).
BoundResult lb_degree_two_case(const DegreeProfile& p);

/// sqrt((Delta-delta)^2 + 2 Delta + 2 delta + 4).
BoundResult lb_jz_degree_form(const DegreeProfile& p);

/// Same evaluator as lb_jz_degree_form, reported under the name "L1".
BoundResult lb_l1_formula(const DegreeProfile& p);

/// 2 sqrt(k+1) for a k-regular graph.
BoundResult lb_regular_sqrt(const DegreeProfile& p);

/// (2/n) sqrt(n M1 - 4m^2 + 2mn).
BoundResult lb_zagreb(const DegreeProfile& p);

/// Delta + 1 - delta; the inequality is strict for connected graphs.
BoundResult lb_liu_delta(const DegreeProfile& p);

/// (1/(n-1)) sqrt((n Delta)^2 + 8(m - Delta)(2m - n Delta)).
BoundResult lb_l2(const DegreeProfile& p);

/// |(sum d^3 + sum d_i d2_i)/M1 - Upsilon| where Upsilon is the least
/// smaller eigenvalue of [[Delta, 1], [1, d_p]] over edges at a maximum
/// degree vertex. Needs m >= 1.
BoundResult lb_cubic_moment(const Graph& g, const DegreeProfile& p);

/// The Upsilon term of lb_cubic_moment.
double cubic_moment_upsilon(const Graph& g, const DegreeProfile& p);

/// k + 1 for a k-regular graph.
BoundResult lb_regular_kplus1(const DegreeProfile& p);

/// 2 + 2 cos(pi/n), attained by P_n.
BoundResult lb_path_universal(int n);

// Upper bounds.

/// sqrt(2 M1 + 4m - 8m^2/n); Mirsky applied to Q.
BoundResult ub_mirsky_q(const DegreeProfile& p);

/// ub_mirsky_q with M1 replaced by the degree-only Zagreb majorant
/// m(2m/(n-1) + (n-2)/(n-1) Delta + (Delta-delta)(1 - Delta/(n-1))).
BoundResult ub_mirsky_q_degreeonly(const DegreeProfile& p);

/// The degree-only Zagreb majorant used by ub_mirsky_q_degreeonly.
double zagreb_majorant(const DegreeProfile& p);

/// 2n - 4, valid for n >= 5.
BoundResult ub_global_2n4(int n);

/// max_v d(v) + (1/d(v)) sum_{u ~ v} d(u).
BoundResult ub_liu_degree_avg(const DegreeProfile& p);

/// Upper bound on the Laplacian spread: sqrt(2 M1 + 4m - 8m^2/(n-1)), n >= 5.
BoundResult ub_das_laplacian(const DegreeProfile& p);

enum class L1L2Regime {
    regular,          ///< k-regular: L2 <= L1 iff k <= 3 or (k == 4 and n >= 10)
    pendant,          ///< connected with a pendant vertex
    unclassified,
};

struct L1L2Comparison {
    double l1 = 0.0;
    double l2 = 0.0;
    bool l2_dominates = false;  ///< L2 > L1
    L1L2Regime regime = L1L2Regime::unclassified;
    /// For the regular regime: whether L2 > L1 is predicted. For the pendant
    /// regime: whether the sufficient condition for L2 < L1 is met.
    bool predicted = false;
    /// Whether the observed ordering agrees with the prediction (always true
    /// when the regime makes no prediction).
    bool consistent = true;
};

/// Requires n > 2.
L1L2Comparison compare_l1_l2(const DegreeProfile& p, bool connected);

}  // namespace qspread
