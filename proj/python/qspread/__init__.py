"""Signless Laplacian spread bounds, spectra and the minmax lower bound."""

from ._core import (
    ConfigError,
    Graph,
    OracleLimitError,
    bounds,
    complete,
    complete_bipartite,
    complete_plus_isolated,
    cycle,
    edge_bipartiteness,
    f_value,
    gradient_search,
    independence_number,
    invariants,
    matrix,
    parse,
    path,
    random_connected,
    read_edge_list,
    spectrum,
    spread_report,
    star,
    table,
    validate,
    vertex_bipartiteness,
)

__all__ = [
    "ConfigError",
    "Graph",
    "OracleLimitError",
    "bounds",
    "complete",
    "complete_bipartite",
    "complete_plus_isolated",
    "cycle",
    "edge_bipartiteness",
    "f_value",
    "gradient_search",
    "independence_number",
    "invariants",
    "matrix",
    "parse",
    "path",
    "random_connected",
    "read_edge_list",
    "spectrum",
    "spread_report",
    "star",
    "table",
    "validate",
    "vertex_bipartiteness",
]
