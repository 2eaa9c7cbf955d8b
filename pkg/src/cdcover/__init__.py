"""Cycle double covers of 2-edge-connected multigraphs containing a prescribed
non-separating cycle, with exhaustive oracles certifying every output."""

from .builder import (
    cdc_containing_cycle,
    decomposition_cdc,
    five_cdc_from_contraction_flow,
    five_cdc_with_removable_edges,
    four_cdc_containing,
    girth_cdc_recursive,
    glue_cdcs,
    petersen_base_cdc,
    reduce_to_hist_instance,
    three_cdc,
    tree_cycle_cdc,
)
from .certificates import CdcCertificate, HistInstance, make_certificate, make_hist_instance, verify_cdc
from .cyclespace import (
    CycleBasis,
    circuit_through_edge,
    cycle_basis,
    cycle_components,
    cycle_space_dimension,
    is_circuit,
    is_even_subgraph,
    iter_even_subgraphs,
)
from .degeneracy import (
    ContractionSequence,
    DegeneracyVerdict,
    classify_degeneracy,
    maximal_small_contraction,
    replay_contractions,
)
from .errors import (
    BudgetExceededError,
    CircuitGraphError,
    GraphError,
    InternalCheckError,
    NoCircuitError,
    NotEvenError,
    PreconditionError,
    TheoryViolationError,
    UnknownEdgeError,
)
from .flows import (
    FourFlow,
    find_nz4f,
    flow_with_support,
    lift_through_circuit,
    nz4f_via_degeneracy,
    verify_flow,
)
from .multigraph import (
    ContractionResult,
    CutSplit,
    EdgeSet,
    MultiGraph,
    contract_edges,
    is_non_separating,
    is_petersen,
    reassemble_cut,
    split_along_cut,
    split_away,
    suppress_degree_two,
)
from .oracle import (
    SearchBudget,
    enumerate_non_separating_cycles,
    find_kcdc_containing,
    find_tree_cycle_decomposition,
    iter_tree_cycle_decompositions,
)
