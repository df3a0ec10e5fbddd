#pragma once

#include <Eigen/Dense>

#include "qspread/graph.hpp"

namespace qspread {

/// Dense real symmetric matrix. Symmetry is exact: the constructor rejects
/// any input whose (i,j) and (j,i) entries differ.
class SymmetricMatrix {
public:
    SymmetricMatrix() = default;
    explicit SymmetricMatrix(Eigen::MatrixXd entries);

    /// Zero matrix of the given order.
    static SymmetricMatrix zero(int order);
    static SymmetricMatrix identity(int order);

    int order() const { return static_cast<int>(entries_.rows()); }
    double operator()(int i, int j) const { return entries_(i, j); }
    const Eigen::MatrixXd& dense() const { return entries_; }

    /// Sets both (i,j) and (j,i).
    void set(int i, int j, double value);

    double trace() const { return entries_.trace(); }
    double frobenius_squared() const { return entries_.squaredNorm(); }

private:
    Eigen::MatrixXd entries_;
};

SymmetricMatrix adjacency_matrix(const Graph& g);
SymmetricMatrix laplacian_matrix(const Graph& g);
SymmetricMatrix signless_laplacian_matrix(const Graph& g);

using IntMatrix = Eigen::Matrix<long long, Eigen::Dynamic, Eigen::Dynamic>;

/// n x m vertex-edge incidence matrix; column j is edge g.edges()[j].
IntMatrix incidence_matrix(const Graph& g);

/// n x m (0, +-1) incidence matrix of an orientation. reversed[j] == false
/// orients edge j from its lower to its higher endpoint: the tail gets -1 and
/// the head +1. An empty vector means the default orientation.
IntMatrix oriented_incidence_matrix(const Graph& g, const std::vector<bool>& reversed = {});

/// Integer copies of A, L and Q, used for exact identity checks.
IntMatrix integer_adjacency(const Graph& g);
IntMatrix integer_laplacian(const Graph& g);
IntMatrix integer_signless_laplacian(const Graph& g);

}  // namespace qspread
