#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "qspread/bounds.hpp"
#include "qspread/combinatorics.hpp"
#include "qspread/minmax.hpp"
#include "qspread/spectrum.hpp"

namespace qspread {

/// Everything a catalog entry may consume, computed once per graph.
struct CatalogContext {
    const Graph* graph = nullptr;
    DegreeProfile profile;
    SpreadReport spectra;
    SymmetricMatrix signless;
    bool connected = false;
    bool bipartite = false;
    std::optional<int> vertex_bipartiteness;
    std::string oracle_error;  ///< why vertex_bipartiteness is missing
    SearchConfig search;
};

struct BoundCatalogEntry {
    std::string name;
    std::string description;
    Direction direction = Direction::lower;
    Target target = Target::signless;
    unsigned assumptions = kNone;
    int min_edges = 0;
    /// Skipped by the sandwich check on regular graphs; a mismatch there is
    /// logged instead of failed.
    bool excluded_on_regular = false;
    std::function<BoundResult(const CatalogContext&)> evaluate;
};

/// The full catalog, sorted by name. Names are unique and stable.
const std::vector<BoundCatalogEntry>& bound_catalog();

/// Catalog entries that mirror the columns of the comparison table.
const std::vector<std::string>& table_bound_names();

const BoundCatalogEntry* find_bound(const std::string& name);

struct CatalogOptions {
    std::vector<std::string> selection;  ///< empty selects every entry
    bool include_oracle_bounds = true;
    OracleLimits limits;
    SearchConfig search;
    EigenOptions eigen;
};

struct BoundEvaluation {
    std::string name;
    Direction direction = Direction::lower;
    Target target = Target::signless;
    std::optional<BoundResult> result;
    std::string skipped;  ///< reason when result is empty
    bool excluded_on_regular = false;
};

/// Throws std::invalid_argument for unknown names in options.selection.
CatalogContext make_catalog_context(const Graph& g, const CatalogOptions& options = {});

/// Evaluates the selected entries in name order. Entries whose preconditions
/// fail, or whose oracle input is unavailable, carry a reason instead of a
/// result; an error inside one entry does not stop the others.
std::vector<BoundEvaluation> evaluate_catalog(const CatalogContext& ctx, const CatalogOptions& options = {});
std::vector<BoundEvaluation> evaluate_catalog(const Graph& g, const CatalogOptions& options = {});

/// Reason string when the entry does not apply to the graph, empty otherwise.
std::string inapplicable_reason(const BoundCatalogEntry& entry, const CatalogContext& ctx);

enum class SandwichStatus { ok, violated, logged, skipped };

struct SandwichCheck {
    SandwichStatus status = SandwichStatus::skipped;
    double exact = 0.0;   ///< the targeted spread
    double margin = 0.0;  ///< exact - value for lower bounds, value - exact for upper
};

/// Lower bounds must not exceed the targeted spread by more than tol, upper
/// bounds must not fall below it by more than tol. Entries excluded on
/// regular graphs report `logged` instead of `violated` there.
SandwichCheck check_sandwich(const BoundEvaluation& e, const CatalogContext& ctx, double tol = 1e-6);

}  // namespace qspread
