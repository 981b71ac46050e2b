"""Color-code decoherence simulator.

Builds the topological color code on a honeycomb torus, applies XX
decoherence on red links in the stabilizer formalism, and measures
entanglement negativity, topological entanglement negativity (TEN),
logarithmic purity, gauge-group centers and the logical-loop algebra.
"""

from .f2core import BitMatrix, BitVector, in_row_space, kernel_f2, rank_f2, rref_f2
from .lattice import (
    HoneycombTorus,
    Region,
    TenComplex,
    TriangularEmbedding,
    build_honeycomb_torus,
    logical_loops,
    named_region,
    region_parallelogram,
    region_triangular_commensurate,
    ten_complex,
    triangular_embedding,
)
from .pauli import (
    PauliWord,
    StabilizerState,
    color_code_state,
    commutes_with_all,
    contractible_loop_operator,
    is_stabilized_by,
    plaquette_operator,
    symplectic_product,
)
from .channels import ChannelConfig, apply_maximal, apply_stochastic, dephase_with
from .gauging import (
    PauliGroupSpan,
    center_matches_decohered_state,
    center_of,
    gauge_group,
    logical_survival_report,
)
from .negativity import k_matrix, log_purity, negativity, ten, truncate
from .experiments import (
    AggregateRow,
    SweepConfig,
    SweepRecord,
    aggregate_records,
    dense_negativity_oracle,
    oracle_check,
    random_stabilizer_state,
    read_aggregates,
    run_sweep,
    write_results,
)

__all__ = [
    "AggregateRow",
    "BitMatrix",
    "BitVector",
    "ChannelConfig",
    "HoneycombTorus",
    "PauliGroupSpan",
    "PauliWord",
    "Region",
    "StabilizerState",
    "SweepConfig",
    "SweepRecord",
    "TenComplex",
    "TriangularEmbedding",
    "aggregate_records",
    "apply_maximal",
    "apply_stochastic",
    "build_honeycomb_torus",
    "center_matches_decohered_state",
    "center_of",
    "color_code_state",
    "commutes_with_all",
    "contractible_loop_operator",
    "dense_negativity_oracle",
    "dephase_with",
    "gauge_group",
    "in_row_space",
    "is_stabilized_by",
    "k_matrix",
    "kernel_f2",
    "log_purity",
    "logical_loops",
    "logical_survival_report",
    "named_region",
    "negativity",
    "oracle_check",
    "plaquette_operator",
    "random_stabilizer_state",
    "rank_f2",
    "read_aggregates",
    "run_sweep",
    "region_parallelogram",
    "region_triangular_commensurate",
    "rref_f2",
    "symplectic_product",
    "ten",
    "ten_complex",
    "triangular_embedding",
    "truncate",
    "write_results",
]

__version__ = "0.1.0"
