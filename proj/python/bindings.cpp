#include <pybind11/eigen.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <string>
#include <vector>

#include "qspread/catalog.hpp"
#include "qspread/combinatorics.hpp"
#include "qspread/graph.hpp"
#include "qspread/matrices.hpp"
#include "qspread/minmax.hpp"
#include "qspread/report.hpp"
#include "qspread/spectrum.hpp"

namespace py = pybind11;
using namespace qspread;

namespace {

SymmetricMatrix matrix_of(const Graph& g, const std::string& kind) {
    if (kind == "q") return signless_laplacian_matrix(g);
    if (kind == "l") return laplacian_matrix(g);
    if (kind == "a") return adjacency_matrix(g);
    throw ConfigError("matrix kind must be one of q, l, a (got '" + kind + "')");
}

OracleLimits limits_from(std::optional<int> oracle_limit) {
    return oracle_limit ? OracleLimits::uniform(*oracle_limit) : OracleLimits{};
}

SearchConfig search_config(int iterations, double step, const std::string& step_mode) {
    SearchConfig cfg;
    cfg.iterations = iterations;
    cfg.step = step;
    if (step_mode == "constant") {
        cfg.step_mode = StepMode::constant;
    } else if (step_mode == "decreasing") {
        cfg.step_mode = StepMode::decreasing;
    } else {
        throw ConfigError("step_mode must be constant or decreasing (got '" + step_mode + "')");
    }
    cfg.validate();
    return cfg;
}

const char* status_name(SandwichStatus s) {
    switch (s) {
        case SandwichStatus::ok: return "ok";
        case SandwichStatus::violated: return "violated";
        case SandwichStatus::logged: return "logged";
        case SandwichStatus::skipped: return "skipped";
    }
    return "skipped";
}

py::list evaluate_bounds(const Graph& g, const std::vector<std::string>& selection, std::optional<int> oracle_limit) {
    CatalogOptions options;
    options.selection = selection;
    options.limits = limits_from(oracle_limit);
    const CatalogContext ctx = make_catalog_context(g, options);
    py::list out;
    for (const auto& e : evaluate_catalog(ctx, options)) {
        py::dict row;
        row["name"] = e.name;
        row["direction"] = to_string(e.direction);
        row["target"] = to_string(e.target);
        row["value"] = e.result ? py::cast(e.result->value) : py::none();
        row["skipped"] = e.skipped;
        row["status"] = status_name(check_sandwich(e, ctx).status);
        out.append(std::move(row));
    }
    return out;
}

py::dict trace_dict(const SearchTrace& t) {
    py::dict d;
    d["initial_value"] = t.initial_value;
    d["values"] = t.values;
    d["eta"] = t.best_value;
    d["best_vector"] = t.best_vector;
    d["iteration_of_best"] = t.iteration_of_best;
    d["start_perturbed"] = t.start_perturbed;
    d["stagnated_at"] = t.stagnated_at;
    return d;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "Signless Laplacian spread bounds, spectra and the minmax lower bound";

    py::register_exception<ConfigError>(m, "ConfigError", PyExc_ValueError);
    py::register_exception<OracleLimitError>(m, "OracleLimitError", PyExc_RuntimeError);
    py::register_exception_translator([](std::exception_ptr p) {
        try {
            if (p) std::rethrow_exception(p);
        } catch (const GraphError& e) {
            PyErr_SetString(PyExc_ValueError, e.what());
        } catch (const ParseError& e) {
            PyErr_SetString(PyExc_ValueError, e.what());
        }
    });

    py::class_<Graph>(m, "Graph")
        .def(py::init<int, std::vector<Edge>, bool>(), py::arg("n"), py::arg("edges"), py::arg("allow_isolated") = false)
        .def_property_readonly("order", &Graph::order)
        .def_property_readonly("size", &Graph::size)
        .def_property_readonly("edges", &Graph::edges)
        .def_property_readonly("degrees", &Graph::degrees)
        .def("is_connected", [](const Graph& g) { return is_connected(g); })
        .def("is_bipartite", [](const Graph& g) { return is_bipartite(g); })
        .def("line_graph", [](const Graph& g) { return line_graph(g); })
        .def("to_edge_list", [](const Graph& g) { return write_edge_list(g); })
        .def("__eq__", [](const Graph& a, const Graph& b) { return a == b; })
        .def("__repr__", [](const Graph& g) {
            return "Graph(n=" + std::to_string(g.order()) + ", m=" + std::to_string(g.size()) + ")";
        });

    m.def("path", [](int n) { return generate_named(Family::path, std::vector<int>{n}); }, py::arg("n"));
    m.def("cycle", [](int n) { return generate_named(Family::cycle, std::vector<int>{n}); }, py::arg("n"));
    m.def("complete", [](int n) { return generate_named(Family::complete, std::vector<int>{n}); }, py::arg("n"));
    m.def("star", [](int n) { return generate_named(Family::star, std::vector<int>{n}); }, py::arg("n"));
    m.def("complete_bipartite", [](int p, int q) { return generate_named(Family::complete_bipartite, std::vector<int>{p, q}); },
          py::arg("p"), py::arg("q"));
    m.def("complete_plus_isolated", [](int n) { return generate_named(Family::complete_plus_isolated, std::vector<int>{n}); },
          py::arg("n"));
    m.def("random_connected", &generate_random_connected, py::arg("n"), py::arg("m"), py::arg("seed"));
    m.def("parse", [](const std::string& spec, std::uint64_t seed) { return parse_graph_spec(spec, seed).graph; },
          py::arg("spec"), py::arg("seed") = 1, "Graph from a source string such as 'kbip:3,5' or 'rand:n=40,m=634,seed=1'.");
    m.def("read_edge_list", [](const std::string& text, bool allow_isolated) { return read_edge_list(text, allow_isolated); },
          py::arg("text"), py::arg("allow_isolated") = false);

    m.def("matrix", [](const Graph& g, const std::string& kind) { return matrix_of(g, kind).dense(); }, py::arg("graph"),
          py::arg("kind") = "q");
    m.def("spectrum", [](const Graph& g, const std::string& kind) { return eigenvalues(matrix_of(g, kind)).values; },
          py::arg("graph"), py::arg("kind") = "q", "Eigenvalues in descending order.");
    m.def(
        "spread_report",
        [](const Graph& g) {
            const SpreadReport r = spread_report(g);
            py::dict d;
            d["q1"] = r.q1;
            d["qn"] = r.qn;
            d["mu1"] = r.mu1;
            d["lambda1"] = r.lambda1;
            d["algebraic_connectivity"] = r.mu_n_minus_1;
            d["signless_spread"] = r.signless_spread;
            d["laplacian_spread"] = r.laplacian_spread;
            d["adjacency_spread"] = r.adjacency_spread;
            return d;
        },
        py::arg("graph"));

    m.def("independence_number", [](const Graph& g, int limit) { return independence_number(g, limit); }, py::arg("graph"),
          py::arg("limit") = OracleLimits{}.independence);
    m.def("vertex_bipartiteness", [](const Graph& g, int limit) { return vertex_bipartiteness(g, limit); },
          py::arg("graph"), py::arg("limit") = OracleLimits{}.vertex_bipartiteness);
    m.def("edge_bipartiteness", [](const Graph& g, int limit) { return edge_bipartiteness(g, limit); }, py::arg("graph"),
          py::arg("limit") = OracleLimits{}.edge_bipartiteness);
    m.def(
        "invariants",
        [](const Graph& g, std::optional<int> oracle_limit) {
            const auto inv = combinatorial_invariants(g, limits_from(oracle_limit));
            py::dict d;
            d["alpha"] = inv.alpha;
            d["tau"] = inv.tau;
            d["vb"] = inv.vb;
            d["eb"] = inv.eb;
            return d;
        },
        py::arg("graph"), py::arg("oracle_limit") = py::none());

    m.def("bounds", &evaluate_bounds, py::arg("graph"), py::arg("selection") = std::vector<std::string>{},
          py::arg("oracle_limit") = py::none(),
          "Evaluates catalog bounds; each entry carries its value (None when inapplicable) and sandwich status.");

    m.def(
        "f_value",
        [](const Graph& g, const Eigen::VectorXd& x, const std::string& form) {
            const UnitVector unit(x);
            const SymmetricMatrix q = signless_laplacian_matrix(g);
            if (form == "norm") return f_value(q, unit);
            if (form == "radicand") return f_value_radicand(q, unit);
            throw ConfigError("form must be norm or radicand (got '" + form + "')");
        },
        py::arg("graph"), py::arg("x"), py::arg("form") = "norm");
    m.def(
        "gradient_search",
        [](const Graph& g, int iterations, double step, const std::string& step_mode) {
            return trace_dict(gradient_search(signless_laplacian_matrix(g), search_config(iterations, step, step_mode)));
        },
        py::arg("graph"), py::arg("iterations") = 10, py::arg("step") = 0.1, py::arg("step_mode") = "constant");

    m.def(
        "table",
        [](const std::vector<std::string>& sources, const std::vector<std::string>& bound_names, const std::string& format,
           int precision, std::optional<int> oracle_limit) {
            RunConfig cfg;
            cfg.sources = sources;
            cfg.bounds = bound_names;
            cfg.precision = precision;
            cfg.limits = limits_from(oracle_limit);
            if (format == "csv") {
                cfg.format = OutputFormat::csv;
            } else if (format == "text") {
                cfg.format = OutputFormat::text;
            } else {
                throw ConfigError("format must be csv or text (got '" + format + "')");
            }
            const TableResult result = run_table(cfg);
            return py::make_tuple(result.rendered, result.has_violation);
        },
        py::arg("sources"), py::arg("bounds") = std::vector<std::string>{}, py::arg("format") = "csv",
        py::arg("precision") = 2, py::arg("oracle_limit") = py::none(), "Returns (rendered table, has_violation).");
    m.def(
        "validate",
        [](const std::vector<std::string>& sources) {
            RunConfig cfg;
            cfg.sources = sources;
            const ValidationReport report = run_validate(cfg);
            auto issues = [](const std::vector<ValidationIssue>& list) {
                py::list out;
                for (const auto& i : list) out.append(py::make_tuple(i.graph, i.check, i.detail));
                return out;
            };
            py::dict d;
            d["graphs"] = report.graphs;
            d["passed"] = report.passed;
            d["failures"] = issues(report.failures);
            d["logged"] = issues(report.logged);
            d["ok"] = report.ok();
            return d;
        },
        py::arg("sources") = std::vector<std::string>{});
}
