#include "qspread/bounds.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

namespace qspread {

std::string to_string(Direction d) { return d == Direction::lower ? "lower" : "upper"; }

std::string to_string(Target t) {
    switch (t) {
        case Target::signless: return "s_Q";
        case Target::adjacency: return "s";
        case Target::laplacian: return "s_L";
    }
    return "?";
}

namespace {

double clamped_sqrt(double x) { return std::sqrt(std::max(0.0, x)); }

BoundResult make(std::string name, double value, Direction direction, unsigned assumptions,
                 std::vector<std::string> inputs, Target target = Target::signless) {
    BoundResult r;
    r.name = std::move(name);
    r.value = value;
    r.direction = direction;
    r.target = target;
    r.assumptions = assumptions;
    r.inputs_used = std::move(inputs);
    return r;
}

void require_regular(const DegreeProfile& p, const char* name) {
    if (!p.regular()) throw BoundDomainError(std::string(name) + " needs a regular graph");
}

// sum_{k != i} w_ik^2
Eigen::VectorXd off_diagonal_row_squares(const SymmetricMatrix& w) {
    Eigen::VectorXd rows = w.dense().array().square().rowwise().sum();
    return rows - w.dense().diagonal().array().square().matrix();
}

}  // namespace

double mirsky_upper(const SymmetricMatrix& w) {
    const double n = w.order();
    const double tr = w.trace();
    return clamped_sqrt(2.0 * w.frobenius_squared() - (2.0 / n) * tr * tr);
}

double barnes_hoffman_lower(const SymmetricMatrix& w) {
    const int n = w.order();
    const Eigen::VectorXd r = off_diagonal_row_squares(w);
    double best = 0.0;
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) {
            const double diff = w(i, i) - w(j, j);
            best = std::max(best, diff * diff + 2.0 * r[j] + 2.0 * r[i]);
        }
    }
    return std::sqrt(best);
}

double jiang_zhan_pair_squared(const SymmetricMatrix& w, int i, int j) {
    const Eigen::VectorXd r = off_diagonal_row_squares(w);
    const double f = std::abs(r[i] - r[j]);
    const double diff = w(i, i) - w(j, j);
    const double diff2 = diff * diff;
    double e;
    if (w(i, i) == w(j, j)) {
        e = 2.0 * f;
    } else {
        e = std::min(diff2 + 2.0 * std::abs(diff2 - f), f * f / diff2);
    }
    return diff2 + 2.0 * r[i] + 2.0 * r[j] + 4.0 * e;
}

double jiang_zhan_lower(const SymmetricMatrix& w) {
    const int n = w.order();
    if (n < 2) return 0.0;
    const Eigen::VectorXd r = off_diagonal_row_squares(w);
    double best = 0.0;
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) {
            if (i == j) continue;
            const double f = std::abs(r[i] - r[j]);
            const double diff = w(i, i) - w(j, j);
            const double diff2 = diff * diff;
            const double e = w(i, i) == w(j, j) ? 2.0 * f
                                                : std::min(diff2 + 2.0 * std::abs(diff2 - f), f * f / diff2);
            best = std::max(best, diff2 + 2.0 * r[i] + 2.0 * r[j] + 4.0 * e);
        }
    }
    return std::sqrt(best);
}

BoundResult lb_mu1_minus_vb(double mu1, int vb) {
    return make("mu1_minus_vb", mu1 - vb, Direction::lower, kConnected | kNeedsOracle | kBipartiteForEquality,
                {"mu1", "vb"});
}

BoundResult lb_4m_over_n_minus_vb(const DegreeProfile& p, int vb) {
    return make("4m_over_n_minus_vb", 4.0 * p.m / p.n - vb, Direction::lower,
                kConnected | kNeedsOracle | kBipartiteForEquality, {"n", "m", "vb"});
}

BoundResult lb_2lambda1_minus_vb(double lambda1, int vb) {
    return make("2lambda1_minus_vb", 2.0 * lambda1 - vb, Direction::lower,
                kConnected | kNeedsOracle | kBipartiteForEquality, {"lambda1", "vb"});
}

BoundResult lb_degree_two_case(const DegreeProfile& p) {
    const double hi = p.max_degree;
    const double lo = p.min_degree;
    const double value = std::max(2.0 * std::sqrt(hi), std::sqrt((hi - lo) * (hi - lo) + 2.0 * hi + 2.0 * lo));
    return make("two_case", value, Direction::lower, kNoIsolatedVertices, {"Delta", "delta"});
}

namespace {

double jz_degree_value(const DegreeProfile& p) {
    const double hi = p.max_degree;
    const double lo = p.min_degree;
    return std::sqrt((hi - lo) * (hi - lo) + 2.0 * hi + 2.0 * lo + 4.0);
}

}  // namespace

BoundResult lb_jz_degree_form(const DegreeProfile& p) {
    return make("meg2", jz_degree_value(p), Direction::lower, kNoIsolatedVertices, {"Delta", "delta"});
}

BoundResult lb_l1_formula(const DegreeProfile& p) {
    return make("L1", jz_degree_value(p), Direction::lower, kNoIsolatedVertices, {"Delta", "delta"});
}

BoundResult lb_regular_sqrt(const DegreeProfile& p) {
    require_regular(p, "regular_sqrt");
    return make("regular_sqrt", 2.0 * std::sqrt(p.max_degree + 1.0), Direction::lower, kRegular, {"k"});
}

BoundResult lb_zagreb(const DegreeProfile& p) {
    const double n = p.n;
    const double m = p.m;
    const double value = (2.0 / n) * clamped_sqrt(n * static_cast<double>(p.zagreb1) - 4.0 * m * m + 2.0 * m * n);
    return make("meg1", value, Direction::lower, kConnected, {"n", "m", "M1"});
}

BoundResult lb_liu_delta(const DegreeProfile& p) {
    auto r = make("liu_delta", p.max_degree + 1.0 - p.min_degree, Direction::lower, kConnected,
                  {"Delta", "delta"});
    r.strict = true;
    return r;
}

BoundResult lb_l2(const DegreeProfile& p) {
    const double n = p.n;
    const double m = p.m;
    const double hi = p.max_degree;
    const double value = clamped_sqrt((n * hi) * (n * hi) + 8.0 * (m - hi) * (2.0 * m - n * hi)) / (n - 1.0);
    return make("liu_2.3", value, Direction::lower, kConnected, {"n", "m", "Delta"});
}

double cubic_moment_upsilon(const Graph& g, const DegreeProfile& p) {
    if (g.size() == 0) throw BoundDomainError("cubic moment bound needs at least one edge");
    const double hi = p.max_degree;
    double upsilon = INFINITY;
    for (auto [u, v] : g.edges()) {
        for (auto [top, other] : {std::pair{u, v}, std::pair{v, u}}) {
            if (p.degrees[top] != p.max_degree) continue;
            const double d = p.degrees[other];
            // smaller eigenvalue of [[Delta, 1], [1, d]]
            const double half_sum = (hi + d) / 2.0;
            const double half_gap = (hi - d) / 2.0;
            upsilon = std::min(upsilon, half_sum - std::sqrt(half_gap * half_gap + 1.0));
        }
    }
    return upsilon;
}

BoundResult lb_cubic_moment(const Graph& g, const DegreeProfile& p) {
    const double upsilon = cubic_moment_upsilon(g, p);
    double cubes = 0.0;
    double mixed = 0.0;
    for (int i = 0; i < p.n; ++i) {
        const double d = p.degrees[i];
        cubes += d * d * d;
        mixed += d * static_cast<double>(p.second[i]);
    }
    const double ratio = (cubes + mixed) / static_cast<double>(p.zagreb1);
    return make("cubic", std::abs(ratio - upsilon), Direction::lower, kNoIsolatedVertices,
                {"degrees", "second_degrees", "M1"});
}

BoundResult lb_regular_kplus1(const DegreeProfile& p) {
    require_regular(p, "regular_kplus1");
    if (p.max_degree < 1) throw BoundDomainError("regular_kplus1 needs at least one edge");
    return make("regular_kplus1", p.max_degree + 1.0, Direction::lower, kRegular, {"k"});
}

BoundResult lb_path_universal(int n) {
    if (n < 2) throw BoundDomainError("path bound needs n >= 2");
    return make("path", 2.0 + 2.0 * std::cos(std::numbers::pi / n), Direction::lower, kNoIsolatedVertices, {"n"});
}

BoundResult ub_mirsky_q(const DegreeProfile& p) {
    const double n = p.n;
    const double m = p.m;
    const double value = clamped_sqrt(2.0 * static_cast<double>(p.zagreb1) + 4.0 * m - 8.0 * m * m / n);
    return make("mirsky_q", value, Direction::upper, kNone, {"n", "m", "M1"});
}

double zagreb_majorant(const DegreeProfile& p) {
    const double n = p.n;
    const double m = p.m;
    const double hi = p.max_degree;
    const double lo = p.min_degree;
    return m * (2.0 * m / (n - 1.0) + (n - 2.0) / (n - 1.0) * hi + (hi - lo) * (1.0 - hi / (n - 1.0)));
}

BoundResult ub_mirsky_q_degreeonly(const DegreeProfile& p) {
    if (p.n < 2) throw BoundDomainError("mirsky_q_deg needs n >= 2");
    const double n = p.n;
    const double m = p.m;
    const double value = clamped_sqrt(2.0 * zagreb_majorant(p) + 4.0 * m - 8.0 * m * m / n);
    return make("mirsky_q_deg", value, Direction::upper, kNone, {"n", "m", "Delta", "delta"});
}

BoundResult ub_global_2n4(int n) {
    if (n < 5) throw BoundDomainError("2n-4 bound needs n >= 5");
    return make("2n_minus_4", 2.0 * n - 4.0, Direction::upper, kAtLeastFiveVertices, {"n"});
}

BoundResult ub_liu_degree_avg(const DegreeProfile& p) {
    double best = 0.0;
    for (int v = 0; v < p.n; ++v) {
        if (p.degrees[v] == 0) throw BoundDomainError("liu_avg needs a graph without isolated vertices");
        best = std::max(best, p.degrees[v] + static_cast<double>(p.second[v]) / p.degrees[v]);
    }
    return make("liu_avg", best, Direction::upper, kConnected, {"degrees", "second_degrees"});
}

BoundResult ub_das_laplacian(const DegreeProfile& p) {
    if (p.n < 5 || p.m < 1) throw BoundDomainError("das_sl needs n >= 5 and m >= 1");
    const double n = p.n;
    const double m = p.m;
    const double value = clamped_sqrt(2.0 * static_cast<double>(p.zagreb1) + 4.0 * m - 8.0 * m * m / (n - 1.0));
    return make("das_sl", value, Direction::upper, kAtLeastFiveVertices, {"n", "m", "M1"}, Target::laplacian);
}

L1L2Comparison compare_l1_l2(const DegreeProfile& p, bool connected) {
    if (p.n <= 2) throw BoundDomainError("L1/L2 comparison needs n > 2");
    L1L2Comparison c;
    c.l1 = jz_degree_value(p);
    c.l2 = lb_l2(p).value;
    constexpr double kTie = 1e-12;
    c.l2_dominates = c.l2 - c.l1 > kTie;

    if (p.regular()) {
        const int k = p.max_degree;
        c.regime = L1L2Regime::regular;
        c.predicted = !(k <= 3 || (k == 4 && p.n >= 10));
        c.consistent = c.l2_dominates == c.predicted;
    } else if (connected && p.min_degree == 1) {
        c.regime = L1L2Regime::pendant;
        const double n = p.n;
        const double hi = p.max_degree;
        c.predicted = (2.0 * n - 1.0) / ((n - 1.0) * (n - 1.0)) * hi * hi < 7.0;
        c.consistent = !c.predicted || c.l1 - c.l2 > kTie;
    }
    return c;
}

}  // namespace qspread
