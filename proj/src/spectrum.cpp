#include "qspread/spectrum.hpp"

#include <Eigen/Eigenvalues>
#include <algorithm>
#include <cmath>
#include <cstdio>
#include <functional>

namespace qspread {

Spectrum eigenvalues(const SymmetricMatrix& w, const EigenOptions& options) {
    const int n = w.order();
    if (n < 1) throw std::invalid_argument("empty matrix");
    if (n > options.max_order) {
        throw std::invalid_argument("matrix order " + std::to_string(n) + " exceeds the limit " +
                                    std::to_string(options.max_order));
    }
    if (!w.dense().allFinite()) throw std::invalid_argument("matrix has non-finite entries");

    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(w.dense(), Eigen::ComputeEigenvectors);
    if (solver.info() != Eigen::Success) {
        throw SolverError("symmetric eigensolver did not converge", std::nan(""));
    }
    const Eigen::VectorXd& values = solver.eigenvalues();
    const Eigen::MatrixXd& vectors = solver.eigenvectors();

    Eigen::MatrixXd defect = w.dense() * vectors - vectors * values.asDiagonal();
    const double residual = defect.colwise().norm().maxCoeff();
    const double scale = std::max(1.0, values.cwiseAbs().maxCoeff());
    if (!(residual <= options.relative_tolerance * scale)) {
        throw SolverError("eigen residual " + std::to_string(residual) + " exceeds tolerance", residual);
    }

    Spectrum s;
    s.values.assign(values.data(), values.data() + n);
    std::sort(s.values.begin(), s.values.end(), std::greater<>());
    s.residual = residual;
    return s;
}

SpreadReport spread_report(const Graph& g, const EigenOptions& options) {
    if (g.order() < 2) throw std::invalid_argument("spread report needs at least two vertices");
    SpreadReport r;
    r.adjacency = eigenvalues(adjacency_matrix(g), options);
    r.laplacian = eigenvalues(laplacian_matrix(g), options);
    r.signless = eigenvalues(signless_laplacian_matrix(g), options);

    const std::size_t n = r.signless.size();
    r.lambda1 = r.adjacency.largest();
    r.mu1 = r.laplacian.largest();
    r.mu_n_minus_1 = r.laplacian[n - 2];
    r.q1 = r.signless.largest();
    r.qn = r.signless.smallest();
    r.adjacency_spread = r.adjacency.spread();
    r.laplacian_spread = r.mu1 - r.mu_n_minus_1;
    r.signless_spread = r.q1 - r.qn;
    return r;
}

std::string write_spectrum(const Spectrum& s) {
    std::string out;
    char buf[64];
    for (double v : s.values) {
        std::snprintf(buf, sizeof buf, "%.17g\n", v);
        out += buf;
    }
    return out;
}

}  // namespace qspread
