#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "qspread/catalog.hpp"
#include "qspread/combinatorics.hpp"
#include "qspread/graph.hpp"
#include "qspread/minmax.hpp"

namespace qspread {

class ConfigError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// A graph plus where it came from.
struct GraphSource {
    std::string id;
    Graph graph;
    std::optional<Family> family;
    std::vector<int> params;
    std::optional<std::uint64_t> seed;
};

/// Parses one graph source:
///   path:5  cycle:6  complete:4  star:4  kbip:3,3  kn1uk1:6
///   rand:n=40,m=634,seed=1   (seed defaults to default_seed)
///   file:PATH                (edge-list format)
GraphSource parse_graph_spec(std::string_view spec, std::uint64_t default_seed = 1);

/// Named families used when validate runs without explicit sources: every
/// family at every size from its minimum up to max_order.
std::vector<GraphSource> named_corpus(int max_order);

enum class OutputFormat { csv, text };

struct RunConfig {
    std::vector<std::string> sources;
    /// Catalog names; empty means the comparison-table columns, {"all"} means
    /// the whole catalog.
    std::vector<std::string> bounds;
    OracleLimits limits;
    bool oracle_columns = true;
    SearchConfig search;
    OutputFormat format = OutputFormat::text;
    int precision = 2;  ///< decimals in text output
    std::uint64_t seed = 1;
};

/// Reads SLQ_ORACLE_LIMIT; returns nullopt when unset. Throws ConfigError on
/// a malformed value.
std::optional<int> oracle_limit_from_env();

struct BoundCell {
    std::string name;
    std::optional<double> value;
    std::string note;  ///< reason for an empty value
};

struct ExperimentRow {
    std::string id;
    int n = 0;
    int m = 0;
    int max_degree = 0;
    int min_degree = 0;
    std::vector<BoundCell> bounds;
    double spread = 0.0;
    std::optional<std::uint64_t> seed;
    std::optional<int> alpha;
    std::optional<int> vb;
    std::optional<int> eb;
    std::vector<std::string> violations;  ///< sandwich failures
    std::vector<std::string> logged;      ///< excluded mismatches
};

struct TableResult {
    std::vector<ExperimentRow> rows;
    std::string rendered;
    bool has_violation = false;
};

/// Column order: id, n, m, Delta, delta, liu_2.2 (external, rendered "ext"),
/// the selected bounds, spread, seed, alpha, vb, eb, violations.
TableResult run_table(const RunConfig& cfg);

ExperimentRow compute_row(const GraphSource& source, const RunConfig& cfg);
std::string render_table(const std::vector<ExperimentRow>& rows, const RunConfig& cfg);

/// Minimal RFC 4180 reader (quoted fields, no embedded newlines).
std::vector<std::vector<std::string>> parse_csv(std::string_view text);

struct ValidationIssue {
    std::string graph;
    std::string check;
    std::string detail;
};

struct ValidationReport {
    int graphs = 0;
    int passed = 0;
    std::vector<ValidationIssue> failures;
    std::vector<ValidationIssue> logged;
    std::string rendered;

    bool ok() const { return failures.empty(); }
};

/// Runs the sandwich, equality, identity, oracle-chain and minmax checks on
/// every source (the named corpus up to order 10 when cfg.sources is empty).
ValidationReport run_validate(const RunConfig& cfg);

/// All checks for one graph, appended to report.
void validate_graph(const GraphSource& source, const RunConfig& cfg, ValidationReport& report);

struct TraceResult {
    std::string id;
    SearchTrace trace;
    std::string rendered;
};

/// Search trace for a single graph, in a two-row iteration table.
TraceResult run_trace(const std::string& source, const RunConfig& cfg);

/// Key/value listing of n, m, Delta, delta, M1 and the oracle invariants that
/// fit within the limits.
std::string render_invariants(const GraphSource& source, const OracleLimits& limits);

}  // namespace qspread
