#include "qspread/catalog.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace qspread {

namespace {

BoundResult vector_bound(const std::string& name, double value, std::vector<std::string> inputs) {
    BoundResult r;
    r.name = name;
    r.value = value;
    r.inputs_used = std::move(inputs);
    return r;
}

Eigen::VectorXd inverse_cubed_degrees(const DegreeProfile& p) {
    Eigen::VectorXd y(p.n);
    for (int i = 0; i < p.n; ++i) y[i] = 1.0 / (static_cast<double>(p.degrees[i]) * p.degrees[i] * p.degrees[i]);
    return y;
}

std::vector<BoundCatalogEntry> build_catalog() {
    using D = Direction;
    std::vector<BoundCatalogEntry> entries = {
        {"meg1", "Zagreb lower bound (2/n)sqrt(nM1 - 4m^2 + 2mn)", D::lower, Target::signless, kConnected, 0, false,
         [](const CatalogContext& c) { return lb_zagreb(c.profile); }},
        {"meg2", "Jiang-Zhan degree form sqrt((D-d)^2 + 2D + 2d + 4)", D::lower, Target::signless,
         kNoIsolatedVertices, 0, true, [](const CatalogContext& c) { return lb_jz_degree_form(c.profile); }},
        {"L1", "alias of meg2 for the L1/L2 comparison", D::lower, Target::signless, kNoIsolatedVertices, 0, true,
         [](const CatalogContext& c) { return lb_l1_formula(c.profile); }},
        {"liu_delta", "Delta + 1 - delta (strict)", D::lower, Target::signless, kConnected, 0, false,
         [](const CatalogContext& c) { return lb_liu_delta(c.profile); }},
        {"liu_2.3", "L2 = sqrt((nD)^2 + 8(m-D)(2m-nD))/(n-1)", D::lower, Target::signless, kConnected, 0, false,
         [](const CatalogContext& c) { return lb_l2(c.profile); }},
        {"two_case", "max(2sqrt(D), sqrt((D-d)^2 + 2D + 2d)) via Barnes-Hoffman", D::lower, Target::signless,
         kNoIsolatedVertices, 0, false, [](const CatalogContext& c) { return lb_degree_two_case(c.profile); }},
        {"regular_sqrt", "2sqrt(k+1) for k-regular graphs", D::lower, Target::signless, kRegular, 1, true,
         [](const CatalogContext& c) { return lb_regular_sqrt(c.profile); }},
        {"regular_kplus1", "k+1 for k-regular graphs", D::lower, Target::signless, kRegular, 1, false,
         [](const CatalogContext& c) { return lb_regular_kplus1(c.profile); }},
        {"cubic", "|e'Q^3e / e'Q^2e - Upsilon| moment bound", D::lower, Target::signless, kNoIsolatedVertices, 1,
         false, [](const CatalogContext& c) { return lb_cubic_moment(*c.graph, c.profile); }},
        {"path", "2 + 2cos(pi/n), attained by P_n", D::lower, Target::signless, kNoIsolatedVertices, 0, false,
         [](const CatalogContext& c) { return lb_path_universal(c.profile.n); }},
        {"mu1_minus_vb", "mu_1 - vertex bipartiteness", D::lower, Target::signless, kConnected | kNeedsOracle, 0,
         false,
         [](const CatalogContext& c) { return lb_mu1_minus_vb(c.spectra.mu1, *c.vertex_bipartiteness); }},
        {"4m_over_n_minus_vb", "4m/n - vertex bipartiteness", D::lower, Target::signless, kConnected | kNeedsOracle,
         0, false,
         [](const CatalogContext& c) { return lb_4m_over_n_minus_vb(c.profile, *c.vertex_bipartiteness); }},
        {"2lambda1_minus_vb", "2 lambda_1 - vertex bipartiteness", D::lower, Target::signless,
         kConnected | kNeedsOracle, 0, false,
         [](const CatalogContext& c) { return lb_2lambda1_minus_vb(c.spectra.lambda1, *c.vertex_bipartiteness); }},
        {"bh_q", "Barnes-Hoffman lower bound applied to Q", D::lower, Target::signless, kNone, 0, false,
         [](const CatalogContext& c) {
             BoundResult r;
             r.name = "bh_q";
             r.value = barnes_hoffman_lower(c.signless);
             r.inputs_used = {"Q"};
             return r;
         }},
        {"Ncon", "minmax bound at the normalized all-ones vector", D::lower, Target::signless, kNone, 0, false,
         [](const CatalogContext& c) { return vector_bound("Ncon", ncon_closed_form(c.profile), {"n", "m", "M1"}); }},
        {"deg_vec", "minmax bound at the degree vector", D::lower, Target::signless, kNone, 1, false,
         [](const CatalogContext& c) {
             return vector_bound("deg_vec", degree_vector_closed_form(c.profile), {"degrees", "second_degrees"});
         }},
        {"Z1", "minmax bound at the reciprocal degree vector", D::lower, Target::signless, kNoIsolatedVertices, 0,
         false, [](const CatalogContext& c) {
             return vector_bound("Z1", reciprocal_degree_closed_form(*c.graph, c.profile), {"degrees", "adjacency"});
         }},
        {"Z2", "minmax bound at the inverse cubed degree vector", D::lower, Target::signless, kNoIsolatedVertices, 0,
         false, [](const CatalogContext& c) {
             return vector_bound("Z2", bound_from_vector(c.signless, inverse_cubed_degrees(c.profile)), {"Q", "degrees"});
         }},
        {"eta", "best f over a simple gradient search on the sphere", D::lower, Target::signless, kNone, 0, false,
         [](const CatalogContext& c) {
             return vector_bound("eta", gradient_search(c.signless, c.search).best_value, {"Q"});
         }},
        {"one_step", "f after one analytic gradient step from the all-ones vector", D::lower, Target::signless, kNone,
         0, false,
         [](const CatalogContext& c) {
             return vector_bound("one_step", one_step_analytic_bound(c.signless, c.search.step), {"Q"});
         }},
        {"mirsky_q", "Mirsky upper bound sqrt(2M1 + 4m - 8m^2/n)", D::upper, Target::signless, kNone, 0, false,
         [](const CatalogContext& c) { return ub_mirsky_q(c.profile); }},
        {"mirsky_q_deg", "Mirsky bound with a degree-only Zagreb majorant", D::upper, Target::signless, kNone, 0,
         false, [](const CatalogContext& c) { return ub_mirsky_q_degreeonly(c.profile); }},
        {"2n_minus_4", "2n - 4 for n >= 5", D::upper, Target::signless, kAtLeastFiveVertices, 0, false,
         [](const CatalogContext& c) { return ub_global_2n4(c.profile.n); }},
        {"liu_avg", "max_v d(v) + average neighbor degree", D::upper, Target::signless, kConnected, 0, false,
         [](const CatalogContext& c) { return ub_liu_degree_avg(c.profile); }},
        {"das_sl", "Laplacian spread bound sqrt(2M1 + 4m - 8m^2/(n-1))", D::upper, Target::laplacian,
         kAtLeastFiveVertices, 1, false, [](const CatalogContext& c) { return ub_das_laplacian(c.profile); }},
    };
    for (auto& e : entries) {
        auto inner = e.evaluate;
        const auto direction = e.direction;
        const auto target = e.target;
        const auto assumptions = e.assumptions;
        const auto name = e.name;
        e.evaluate = [inner, direction, target, assumptions, name](const CatalogContext& c) {
            BoundResult r = inner(c);
            r.name = name;
            r.direction = direction;
            r.target = target;
            r.assumptions |= assumptions;
            return r;
        };
    }
    std::sort(entries.begin(), entries.end(), [](const auto& a, const auto& b) { return a.name < b.name; });
    return entries;
}

}  // namespace

const std::vector<BoundCatalogEntry>& bound_catalog() {
    static const std::vector<BoundCatalogEntry> catalog = build_catalog();
    return catalog;
}

const std::vector<std::string>& table_bound_names() {
    static const std::vector<std::string> names = {"liu_2.3", "meg1", "meg2", "Ncon", "Z1", "Z2", "eta"};
    return names;
}

const BoundCatalogEntry* find_bound(const std::string& name) {
    for (const auto& e : bound_catalog())
        if (e.name == name) return &e;
    return nullptr;
}

namespace {

bool selected(const CatalogOptions& options, const std::string& name) {
    return options.selection.empty() ||
           std::find(options.selection.begin(), options.selection.end(), name) != options.selection.end();
}

}  // namespace

CatalogContext make_catalog_context(const Graph& g, const CatalogOptions& options) {
    for (const auto& name : options.selection) {
        if (!find_bound(name)) throw std::invalid_argument("unknown bound '" + name + "'");
    }
    CatalogContext c;
    c.graph = &g;
    c.profile = degree_profile(g);
    c.spectra = spread_report(g, options.eigen);
    c.signless = signless_laplacian_matrix(g);
    c.connected = is_connected(g);
    c.bipartite = is_bipartite(g);
    c.search = options.search;

    bool needs_oracle = false;
    for (const auto& e : bound_catalog()) {
        if ((e.assumptions & kNeedsOracle) && selected(options, e.name)) needs_oracle = true;
    }
    if (!options.include_oracle_bounds) {
        c.oracle_error = "oracle bounds disabled";
    } else if (needs_oracle) {
        try {
            c.vertex_bipartiteness = vertex_bipartiteness(g, options.limits.vertex_bipartiteness);
        } catch (const OracleLimitError& err) {
            c.oracle_error = err.what();
        }
    }
    return c;
}

std::string inapplicable_reason(const BoundCatalogEntry& entry, const CatalogContext& ctx) {
    const auto& p = ctx.profile;
    if ((entry.assumptions & kConnected) && !ctx.connected) return "requires a connected graph";
    if ((entry.assumptions & kNoIsolatedVertices) && ctx.graph->has_isolated_vertex()) {
        return "requires no isolated vertices";
    }
    if ((entry.assumptions & kRegular) && !p.regular()) return "requires a regular graph";
    if ((entry.assumptions & kAtLeastFiveVertices) && p.n < 5) return "requires n >= 5";
    if (p.m < entry.min_edges) return "requires at least " + std::to_string(entry.min_edges) + " edge(s)";
    if ((entry.assumptions & kNeedsOracle) && !ctx.vertex_bipartiteness) {
        return "oracle unavailable" + (ctx.oracle_error.empty() ? std::string() : ": " + ctx.oracle_error);
    }
    return {};
}

std::vector<BoundEvaluation> evaluate_catalog(const CatalogContext& ctx, const CatalogOptions& options) {
    std::vector<BoundEvaluation> out;
    for (const auto& entry : bound_catalog()) {
        if (!selected(options, entry.name)) continue;
        BoundEvaluation e;
        e.name = entry.name;
        e.direction = entry.direction;
        e.target = entry.target;
        e.excluded_on_regular = entry.excluded_on_regular;
        e.skipped = inapplicable_reason(entry, ctx);
        if (e.skipped.empty()) {
            try {
                e.result = entry.evaluate(ctx);
            } catch (const std::exception& err) {
                e.skipped = std::string("error: ") + err.what();
            }
        }
        out.push_back(std::move(e));
    }
    return out;
}

std::vector<BoundEvaluation> evaluate_catalog(const Graph& g, const CatalogOptions& options) {
    const CatalogContext ctx = make_catalog_context(g, options);
    return evaluate_catalog(ctx, options);
}

SandwichCheck check_sandwich(const BoundEvaluation& e, const CatalogContext& ctx, double tol) {
    SandwichCheck check;
    if (!e.result) return check;
    switch (e.target) {
        case Target::signless: check.exact = ctx.spectra.signless_spread; break;
        case Target::adjacency: check.exact = ctx.spectra.adjacency_spread; break;
        case Target::laplacian: check.exact = ctx.spectra.laplacian_spread; break;
    }
    const double value = e.result->value;
    check.margin = e.direction == Direction::lower ? check.exact - value : value - check.exact;
    const bool holds = std::isfinite(value) && check.margin >= -tol;
    if (holds) {
        check.status = SandwichStatus::ok;
    } else if (e.excluded_on_regular && ctx.profile.regular()) {
        check.status = SandwichStatus::logged;
    } else {
        check.status = SandwichStatus::violated;
    }
    return check;
}

}  // namespace qspread
