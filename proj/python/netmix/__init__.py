"""Edge classification and degree-distribution analysis for undirected networks.

The heavy lifting lives in the compiled ``netmix._core`` extension; this
package re-exports its public surface.
"""

from ._core import (
    DisconnectedError,
    Graph,
    ParseError,
    __version__,
    analyze,
    build_ccdf,
    classify,
    fit_power_law,
    fit_weibull,
    generate_ba,
    generate_eba,
    load_edge_list,
    parse_edge_list,
)

__all__ = [
    "DisconnectedError",
    "Graph",
    "ParseError",
    "__version__",
    "analyze",
    "build_ccdf",
    "classify",
    "fit_power_law",
    "fit_weibull",
    "generate_ba",
    "generate_eba",
    "load_edge_list",
    "parse_edge_list",
]
