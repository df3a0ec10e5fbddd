#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include "qspread/graph.hpp"
#include "qspread/matrices.hpp"

namespace qspread {

class SolverError : public std::runtime_error {
public:
    SolverError(const std::string& what, double achieved_residual)
        : std::runtime_error(what), achieved_residual_(achieved_residual) {}
    double achieved_residual() const { return achieved_residual_; }

private:
    double achieved_residual_;
};

struct EigenOptions {
    int max_order = 2000;
    /// Accepted residual, relative to max(1, |lambda|_max).
    double relative_tolerance = 1e-9;
};

/// All eigenvalues of a symmetric matrix, sorted descending.
struct Spectrum {
    std::vector<double> values;
    /// max_i |W v_i - lambda_i v_i| over the computed unit eigenvectors.
    double residual = 0.0;

    double largest() const { return values.front(); }
    double smallest() const { return values.back(); }
    double spread() const { return values.front() - values.back(); }
    std::size_t size() const { return values.size(); }
    double operator[](std::size_t i) const { return values[i]; }
};

/// Full symmetric eigendecomposition (Householder tridiagonalization + QR via
/// Eigen's SelfAdjointEigenSolver). Throws SolverError when the solver fails
/// or the residual exceeds the contract, and std::invalid_argument for
/// non-finite input or an order above options.max_order.
Spectrum eigenvalues(const SymmetricMatrix& w, const EigenOptions& options = {});

struct SpreadReport {
    Spectrum adjacency;
    Spectrum laplacian;
    Spectrum signless;

    double lambda1 = 0.0;
    double mu1 = 0.0;
    double mu_n_minus_1 = 0.0;  ///< algebraic connectivity a(G)
    double q1 = 0.0;
    double qn = 0.0;

    double adjacency_spread = 0.0;  ///< s(G) = lambda_1 - lambda_n
    double laplacian_spread = 0.0;  ///< s_L(G) = mu_1 - mu_{n-1}
    double signless_spread = 0.0;   ///< s_Q(G) = q_1 - q_n

    double algebraic_connectivity() const { return mu_n_minus_1; }
};

/// Requires n >= 2. For disconnected graphs mu_{n-1} is 0 and s_L is still
/// reported as mu_1 - mu_{n-1}.
SpreadReport spread_report(const Graph& g, const EigenOptions& options = {});

/// One eigenvalue per line, descending, 17 significant digits.
std::string write_spectrum(const Spectrum& s);

}  // namespace qspread
