"""Min Max Average Cycle Weight (MACW) allocation toolkit.

Agents value objects; each agent gets one object. The envy graph of an
allocation has arc weights ``v_i(A_j) - v_i(A_i)``, and the goal is an
allocation whose envy graph, optionally minus a fixed offset graph, has the
smallest maximum average cycle weight.
"""

from .core import (
    Allocation,
    CapExceededError,
    Cycle,
    DimensionError,
    Instance,
    MACWError,
    NoCycleError,
    ParseError,
    Solution,
    WeightGraph,
    parse_instance,
    parse_problem,
    render,
    to_rational,
    total_value,
)
from .cycles import all_cycle_averages, macw_bruteforce, macw_karp
from .envy import apply_switches, cycle_decomposition, difference_graph, envy_graph
from .explore import (
    GapReport,
    GapSearchConfig,
    gap_report,
    generate_instance,
    generate_offset,
    search_gap,
)
from .matching import all_max_value_matchings, max_value_matching, max_value_matching_bruteforce
from .solve import LocalSearchParams, solve_exact, solve_local_search, solve_zero_offset
from .tables import reproduce_table

__version__ = "0.1.0"
