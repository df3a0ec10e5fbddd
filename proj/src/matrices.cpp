#include "qspread/matrices.hpp"

#include <stdexcept>

namespace qspread {

SymmetricMatrix::SymmetricMatrix(Eigen::MatrixXd entries) : entries_(std::move(entries)) {
    if (entries_.rows() != entries_.cols()) throw std::invalid_argument("matrix is not square");
    for (Eigen::Index i = 0; i < entries_.rows(); ++i) {
        for (Eigen::Index j = i + 1; j < entries_.cols(); ++j) {
            if (entries_(i, j) != entries_(j, i)) throw std::invalid_argument("matrix is not symmetric");
        }
    }
}

SymmetricMatrix SymmetricMatrix::zero(int order) {
    return SymmetricMatrix(Eigen::MatrixXd::Zero(order, order));
}

SymmetricMatrix SymmetricMatrix::identity(int order) {
    return SymmetricMatrix(Eigen::MatrixXd::Identity(order, order));
}

void SymmetricMatrix::set(int i, int j, double value) {
    entries_(i, j) = value;
    entries_(j, i) = value;
}

namespace {

SymmetricMatrix graph_matrix(const Graph& g, double diagonal_sign, double off_diagonal) {
    auto w = SymmetricMatrix::zero(g.order());
    for (int v = 0; v < g.order(); ++v) w.set(v, v, diagonal_sign * g.degree(v));
    for (auto [u, v] : g.edges()) w.set(u, v, off_diagonal);
    return w;
}

IntMatrix integer_graph_matrix(const Graph& g, long long diagonal_sign, long long off_diagonal) {
    IntMatrix w = IntMatrix::Zero(g.order(), g.order());
    for (int v = 0; v < g.order(); ++v) w(v, v) = diagonal_sign * g.degree(v);
    for (auto [u, v] : g.edges()) {
        w(u, v) = off_diagonal;
        w(v, u) = off_diagonal;
    }
    return w;
}

}  // namespace

SymmetricMatrix adjacency_matrix(const Graph& g) { return graph_matrix(g, 0.0, 1.0); }
SymmetricMatrix laplacian_matrix(const Graph& g) { return graph_matrix(g, 1.0, -1.0); }
SymmetricMatrix signless_laplacian_matrix(const Graph& g) { return graph_matrix(g, 1.0, 1.0); }

IntMatrix integer_adjacency(const Graph& g) { return integer_graph_matrix(g, 0, 1); }
IntMatrix integer_laplacian(const Graph& g) { return integer_graph_matrix(g, 1, -1); }
IntMatrix integer_signless_laplacian(const Graph& g) { return integer_graph_matrix(g, 1, 1); }

IntMatrix incidence_matrix(const Graph& g) {
    IntMatrix inc = IntMatrix::Zero(g.order(), g.size());
    for (int e = 0; e < g.size(); ++e) {
        inc(g.edges()[e].first, e) = 1;
        inc(g.edges()[e].second, e) = 1;
    }
    return inc;
}

IntMatrix oriented_incidence_matrix(const Graph& g, const std::vector<bool>& reversed) {
    if (!reversed.empty() && static_cast<int>(reversed.size()) != g.size()) {
        throw std::invalid_argument("orientation must have one entry per edge");
    }
    IntMatrix inc = IntMatrix::Zero(g.order(), g.size());
    for (int e = 0; e < g.size(); ++e) {
        auto [tail, head] = g.edges()[e];
        if (!reversed.empty() && reversed[e]) std::swap(tail, head);
        inc(tail, e) = -1;
        inc(head, e) = 1;
    }
    return inc;
}

}  // namespace qspread
