"""River-crossing puzzle toolkit.

Solves and counts shortest solutions of generalized missionaries-and-cannibals
puzzles (and other species-based river crossings) by three independent
methods, generates counting sequences over infinite puzzle families with
automatic recurrence and generating-function fitting, and executes named
constructive strategies with sufficiency conditions.
"""

from .digraph import (
    Digraph,
    PathList,
    all_shortest_paths,
    random_digraph,
    shortest_distance,
)
from .families import (
    ConjectureReport,
    FamilySpec,
    LinearRecurrence,
    RationalGF,
    conjecture_report,
    family_counts,
    fit_linear_recurrence,
    rational_gf,
    series_coefficients,
)
from .puzzle import (
    BankState,
    McParams,
    Move,
    ParamError,
    SpeciesPuzzle,
    check_solution_path,
    is_legal_state,
    legal_boat_loads,
    legal_moves,
    mc_graph,
    mc_species,
    moves_to_path,
    path_to_moves,
    solve_mc,
    solve_species,
    species_graph,
    spell_out,
    validate_params,
    wolf_goat_cabbage,
)
from .strategies import (
    Strategy,
    Violation,
    applicability,
    build_strategy,
    validate_solution,
)
from .transfer import (
    TransferOutcome,
    TransferTrace,
    cleanup,
    crossing_polynomial,
    format_polynomial,
    legal_state_bound,
    solve_by_transfer,
    transfer_step,
    transfer_trace,
)
from .walkcount import (
    adjacency_matrix,
    count_shortest_walks,
    symbolic_shortest_paths,
)

__version__ = "0.1.0"
