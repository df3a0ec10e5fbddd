#pragma once

#include <Eigen/Dense>
#include <string>
#include <vector>

#include "qspread/bounds.hpp"
#include "qspread/graph.hpp"
#include "qspread/matrices.hpp"

namespace qspread {

/// A point on the unit sphere. Construction normalizes; a zero vector is
/// rejected.
class UnitVector {
public:
    explicit UnitVector(Eigen::VectorXd coords);

    /// (1/sqrt(n)) * all-ones.
    static UnitVector uniform(int n);
    /// The i-th coordinate vector.
    static UnitVector basis(int n, int i);

    const Eigen::VectorXd& coords() const { return coords_; }
    int size() const { return static_cast<int>(coords_.size()); }

private:
    Eigen::VectorXd coords_;
};

/// f(x) = 2 |Qx - (x^T Q x) x|: twice the distance from Qx to span{x}.
double f_value(const SymmetricMatrix& q, const UnitVector& x);

/// Same quantity through 2 sqrt(x^T Q^2 x - (x^T Q x)^2), the radicand
/// clamped at zero.
double f_value_radicand(const SymmetricMatrix& q, const UnitVector& x);

/// 2 sqrt(|y|^2 |tau|^2 - (y . tau)^2) / |y|^2 with tau = Q y. Scale
/// invariant; throws std::invalid_argument for y = 0.
double bound_from_vector(const SymmetricMatrix& q, const Eigen::VectorXd& y);

/// Ncon (all-ones vector, closed form), deg_vec (degree vector), Z1
/// (reciprocal degrees, closed form) and Z2 (inverse cubed degrees). Z1 and
/// Z2 need a graph without isolated vertices and are omitted otherwise.
std::vector<BoundResult> named_vector_bounds(const Graph& g, const DegreeProfile& p);

/// Ncon closed form (4/n) sqrt(n M1 - 4m^2).
double ncon_closed_form(const DegreeProfile& p);
/// Degree-vector bound with alpha_i = d_i^2 + sum_{j ~ i} d_j.
double degree_vector_closed_form(const DegreeProfile& p);
/// Reciprocal-degree bound with tau_i = 1 + sum_{j ~ i} 1/d_j.
double reciprocal_degree_closed_form(const Graph& g, const DegreeProfile& p);

/// Gradient of g(x) = f(x)^2 = 4 (x^T Q^2 x - (x^T Q x)^2) in R^n:
/// 8 Q^2 x - 16 (x^T Q x) Q x.
Eigen::VectorXd grad_f_squared(const SymmetricMatrix& q, const Eigen::VectorXd& x);

/// Central finite differences of f^2 with step h.
Eigen::VectorXd numerical_grad_f_squared(const SymmetricMatrix& q, const Eigen::VectorXd& x, double h);

enum class StepMode { constant, decreasing };
enum class GradientMode { analytic, numerical };
/// tangent steps along the gradient projected onto the sphere at x; ambient
/// steps along the raw gradient of f^2 in R^n.
enum class StepDirection { tangent, ambient };

struct SearchConfig {
    int iterations = 10;
    StepMode step_mode = StepMode::constant;
    double step = 0.1;  ///< s; the decreasing schedule uses s / sqrt(k)
    GradientMode gradient_mode = GradientMode::analytic;
    double fd_step = 1e-6;
    StepDirection direction = StepDirection::tangent;
    /// Added to coordinate 0 of the start point when its tangential gradient
    /// vanishes (every regular graph).
    double start_perturbation = 1e-3;

    /// Throws std::invalid_argument unless iterations >= 1, step > 0 and
    /// fd_step > 0.
    void validate() const;
};

struct SearchTrace {
    double initial_value = 0.0;
    std::vector<double> values;  ///< f after iteration 1..K
    double best_value = 0.0;     ///< eta: max of initial_value and values
    Eigen::VectorXd best_vector;
    int iteration_of_best = 0;   ///< 0 means the start point
    bool start_perturbed = false;
    int stagnated_at = 0;        ///< first iteration with a vanishing gradient, 0 if none
};

/// Simple gradient search from (1/sqrt(n)) e. Every iteration moves to
/// normalize(x + s_k g/|g|) whether or not f improves; eta is the best value
/// seen.
SearchTrace gradient_search(const SymmetricMatrix& q, const SearchConfig& cfg = {});

/// One analytic gradient step of length `step` from (1/sqrt(n)) e, then f.
/// Returns f at the start point when the tangential gradient there vanishes.
double one_step_analytic_bound(const SymmetricMatrix& q, double step = 0.1);

/// Two-row CSV: "iteration,1,..,K" then "f(x),v1,..,vK".
std::string trace_csv(const SearchTrace& trace, int precision = 10);

}  // namespace qspread
