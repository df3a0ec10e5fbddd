#include "qspread/minmax.hpp"

#include <cmath>
#include <cstdio>
#include <stdexcept>

namespace qspread {

UnitVector::UnitVector(Eigen::VectorXd coords) : coords_(std::move(coords)) {
    const double norm = coords_.norm();
    if (!(norm > 0.0) || !std::isfinite(norm)) throw std::invalid_argument("unit vector from a zero or non-finite vector");
    coords_ /= norm;
}

UnitVector UnitVector::uniform(int n) { return UnitVector(Eigen::VectorXd::Ones(n)); }

UnitVector UnitVector::basis(int n, int i) { return UnitVector(Eigen::VectorXd::Unit(n, i)); }

namespace {

void require_dimensions(const SymmetricMatrix& q, Eigen::Index size) {
    if (q.order() != size) throw std::invalid_argument("vector length does not match the matrix order");
}

double clamped_sqrt(double x) { return std::sqrt(std::max(0.0, x)); }

Eigen::VectorXd tangential(const Eigen::VectorXd& g, const Eigen::VectorXd& x) { return g - g.dot(x) * x; }

// The tangential gradient counts as zero when it is lost in rounding relative
// to the full gradient.
bool vanishes(const Eigen::VectorXd& tangent, const Eigen::VectorXd& full) {
    return tangent.norm() <= 1e-10 * std::max(1.0, full.norm());
}

}  // namespace

double f_value(const SymmetricMatrix& q, const UnitVector& x) {
    require_dimensions(q, x.size());
    const Eigen::VectorXd qx = q.dense() * x.coords();
    const double rayleigh = x.coords().dot(qx);
    return 2.0 * (qx - rayleigh * x.coords()).norm();
}

double f_value_radicand(const SymmetricMatrix& q, const UnitVector& x) {
    require_dimensions(q, x.size());
    // x^T Q^2 x = |Qx|^2 for symmetric Q. The difference cancels badly when f
    // is small next to x^T Q x, so it is accumulated in long double, and the
    // Rayleigh term is divided by x^T x (= 1 up to rounding of the stored x).
    const Eigen::MatrixXd& a = q.dense();
    const Eigen::VectorXd& v = x.coords();
    const Eigen::Index n = v.size();
    long double xx = 0.0L, rayleigh = 0.0L, qq = 0.0L;
    for (Eigen::Index i = 0; i < n; ++i) {
        long double qi = 0.0L;
        for (Eigen::Index j = 0; j < n; ++j) qi += static_cast<long double>(a(i, j)) * v[j];
        xx += static_cast<long double>(v[i]) * v[i];
        rayleigh += qi * v[i];
        qq += qi * qi;
    }
    return 2.0 * clamped_sqrt(static_cast<double>(qq - rayleigh * rayleigh / xx));
}

double bound_from_vector(const SymmetricMatrix& q, const Eigen::VectorXd& y) {
    require_dimensions(q, y.size());
    const double yy = y.squaredNorm();
    if (!(yy > 0.0)) throw std::invalid_argument("bound_from_vector needs a nonzero vector");
    const Eigen::VectorXd tau = q.dense() * y;
    const double ytau = y.dot(tau);
    return 2.0 * clamped_sqrt(yy * tau.squaredNorm() - ytau * ytau) / yy;
}

double ncon_closed_form(const DegreeProfile& p) {
    const double n = p.n;
    const double m = p.m;
    return (4.0 / n) * clamped_sqrt(n * static_cast<double>(p.zagreb1) - 4.0 * m * m);
}

double degree_vector_closed_form(const DegreeProfile& p) {
    double dd = 0.0;
    double aa = 0.0;
    double da = 0.0;
    for (int i = 0; i < p.n; ++i) {
        const double d = p.degrees[i];
        const double alpha = d * d + static_cast<double>(p.second[i]);
        dd += d * d;
        aa += alpha * alpha;
        da += d * alpha;
    }
    if (dd == 0.0) throw std::invalid_argument("degree vector bound needs at least one edge");
    return 2.0 * clamped_sqrt(dd * aa - da * da) / dd;
}

double reciprocal_degree_closed_form(const Graph& g, const DegreeProfile& p) {
    double inv_sq = 0.0;
    double tau_sq = 0.0;
    double cross = 0.0;
    for (int i = 0; i < p.n; ++i) {
        if (p.degrees[i] == 0) throw std::invalid_argument("reciprocal degree bound needs no isolated vertices");
        const double di = p.degrees[i];
        double neighbor_inv = 0.0;
        for (Vertex k : g.neighbors(i)) neighbor_inv += 1.0 / p.degrees[k];
        inv_sq += 1.0 / (di * di);
        tau_sq += (neighbor_inv + 1.0) * (neighbor_inv + 1.0);
        cross += neighbor_inv / di + 1.0 / di;
    }
    return 2.0 * clamped_sqrt(inv_sq * tau_sq - cross * cross) / inv_sq;
}

std::vector<BoundResult> named_vector_bounds(const Graph& g, const DegreeProfile& p) {
    std::vector<BoundResult> out;
    auto add = [&](std::string name, double value, unsigned assumptions, std::vector<std::string> inputs) {
        BoundResult r;
        r.name = std::move(name);
        r.value = value;
        r.direction = Direction::lower;
        r.target = Target::signless;
        r.assumptions = assumptions;
        r.inputs_used = std::move(inputs);
        out.push_back(std::move(r));
    };
    add("Ncon", ncon_closed_form(p), kNone, {"n", "m", "M1"});
    if (p.m > 0) add("deg_vec", degree_vector_closed_form(p), kNone, {"degrees", "second_degrees"});
    if (!g.has_isolated_vertex()) {
        add("Z1", reciprocal_degree_closed_form(g, p), kNoIsolatedVertices, {"degrees", "adjacency"});
        const auto q = signless_laplacian_matrix(g);
        Eigen::VectorXd y(p.n);
        for (int i = 0; i < p.n; ++i) y[i] = std::pow(static_cast<double>(p.degrees[i]), -3.0);
        add("Z2", bound_from_vector(q, y), kNoIsolatedVertices, {"Q", "degrees"});
    }
    return out;
}

Eigen::VectorXd grad_f_squared(const SymmetricMatrix& q, const Eigen::VectorXd& x) {
    require_dimensions(q, x.size());
    const Eigen::VectorXd qx = q.dense() * x;
    const Eigen::VectorXd qqx = q.dense() * qx;
    return 8.0 * qqx - 16.0 * x.dot(qx) * qx;
}

namespace {

// f^2 on R^n (not restricted to the sphere)
double f_squared_ambient(const SymmetricMatrix& q, const Eigen::VectorXd& x) {
    const Eigen::VectorXd qx = q.dense() * x;
    const double rayleigh = x.dot(qx);
    return 4.0 * (qx.squaredNorm() - rayleigh * rayleigh);
}

}  // namespace

Eigen::VectorXd numerical_grad_f_squared(const SymmetricMatrix& q, const Eigen::VectorXd& x, double h) {
    require_dimensions(q, x.size());
    if (!(h > 0.0)) throw std::invalid_argument("finite difference step must be positive");
    Eigen::VectorXd grad(x.size());
    Eigen::VectorXd probe = x;
    for (Eigen::Index i = 0; i < x.size(); ++i) {
        probe[i] = x[i] + h;
        const double up = f_squared_ambient(q, probe);
        probe[i] = x[i] - h;
        const double down = f_squared_ambient(q, probe);
        probe[i] = x[i];
        grad[i] = (up - down) / (2.0 * h);
    }
    return grad;
}

void SearchConfig::validate() const {
    if (iterations < 1) throw std::invalid_argument("search needs at least one iteration");
    if (!(step > 0.0)) throw std::invalid_argument("step length must be positive");
    if (!(fd_step > 0.0)) throw std::invalid_argument("finite difference step must be positive");
}

SearchTrace gradient_search(const SymmetricMatrix& q, const SearchConfig& cfg) {
    cfg.validate();
    const int n = q.order();
    auto gradient = [&](const Eigen::VectorXd& x) {
        return cfg.gradient_mode == GradientMode::analytic ? grad_f_squared(q, x)
                                                           : numerical_grad_f_squared(q, x, cfg.fd_step);
    };

    SearchTrace trace;
    Eigen::VectorXd x = UnitVector::uniform(n).coords();
    trace.initial_value = f_value(q, UnitVector(x));
    trace.best_value = trace.initial_value;
    trace.best_vector = x;

    {
        const Eigen::VectorXd g = gradient(x);
        if (vanishes(tangential(g, x), g)) {
            x[0] += cfg.start_perturbation;
            x.normalize();
            trace.start_perturbed = true;
        }
    }

    for (int k = 1; k <= cfg.iterations; ++k) {
        const Eigen::VectorXd g = gradient(x);
        const Eigen::VectorXd t = tangential(g, x);
        if (trace.stagnated_at == 0 && vanishes(t, g)) trace.stagnated_at = k;
        if (trace.stagnated_at == 0) {
            const Eigen::VectorXd dir = cfg.direction == StepDirection::tangent ? t : g;
            const double s = cfg.step_mode == StepMode::constant ? cfg.step : cfg.step / std::sqrt(k);
            x += s * dir / dir.norm();
            x.normalize();
        }
        const double value = f_value(q, UnitVector(x));
        trace.values.push_back(value);
        if (value > trace.best_value) {
            trace.best_value = value;
            trace.best_vector = x;
            trace.iteration_of_best = k;
        }
    }
    return trace;
}

double one_step_analytic_bound(const SymmetricMatrix& q, double step) {
    const Eigen::VectorXd x0 = UnitVector::uniform(q.order()).coords();
    const Eigen::VectorXd g = grad_f_squared(q, x0);
    const Eigen::VectorXd t = tangential(g, x0);
    if (vanishes(t, g)) return f_value(q, UnitVector(x0));
    return f_value(q, UnitVector(x0 + step * t / t.norm()));
}

std::string trace_csv(const SearchTrace& trace, int precision) {
    std::string header = "iteration";
    std::string row = "f(x)";
    char buf[64];
    for (std::size_t k = 0; k < trace.values.size(); ++k) {
        header += "," + std::to_string(k + 1);
        std::snprintf(buf, sizeof buf, ",%.*g", precision, trace.values[k]);
        row += buf;
    }
    return header + "\n" + row + "\n";
}

}  // namespace qspread
