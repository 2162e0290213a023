"""Bipartite degree-sequence packing toolkit.

Core types and operations are re-exported here; see the module docstrings
for the details of each subsystem.
"""

from .conditions import (
    ConditionReport,
    busch,
    compare_theorems,
    diemunsch_bigraphic,
    diemunsch_graphic,
    lemma5_conditions,
    sauer_spencer,
    theorem1_conditions,
)
from .embedder import EmbedConfig, EmbedFailure, azuma_bound, embed
from .flow import (
    FlowNetwork,
    Infeasible,
    Lemma4Violation,
    fixed_order_embed,
    lemma4_check_exhaustive,
    max_flow,
)
from .graphs import (
    BigraphicSequence,
    BipartiteGraph,
    EmbeddingMap,
    PackingWitness,
    complement_in_biclique,
    degree_sequence_of,
    verify_embedding,
    verify_packing,
)
from .oracle import (
    BudgetExceeded,
    NoEmbedding,
    NoPacking,
    OracleBudget,
    brute_force_embed,
    brute_force_pack,
)
from .sequences import is_bigraphic, is_graphic, kundu_check, realize_bigraphic

__all__ = [
    "BigraphicSequence",
    "BipartiteGraph",
    "BudgetExceeded",
    "ConditionReport",
    "EmbedConfig",
    "EmbedFailure",
    "EmbeddingMap",
    "FlowNetwork",
    "Infeasible",
    "Lemma4Violation",
    "NoEmbedding",
    "NoPacking",
    "OracleBudget",
    "PackingWitness",
    "azuma_bound",
    "brute_force_embed",
    "brute_force_pack",
    "busch",
    "compare_theorems",
    "complement_in_biclique",
    "degree_sequence_of",
    "diemunsch_bigraphic",
    "diemunsch_graphic",
    "embed",
    "fixed_order_embed",
    "is_bigraphic",
    "is_graphic",
    "kundu_check",
    "lemma4_check_exhaustive",
    "lemma5_conditions",
    "max_flow",
    "realize_bigraphic",
    "sauer_spencer",
    "theorem1_conditions",
    "verify_embedding",
    "verify_packing",
]

__version__ = "0.1.0"
