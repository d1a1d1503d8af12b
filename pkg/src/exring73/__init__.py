"""
Modules over R = [[Z_p, Z_p], [0, Z_(p)]] as triples (L, N, φ).
"""

from src.exring73.decompose import (
    Decomposition,
    decompose,
    invariants,
    is_projective,
    verify_reassembly,
)
from src.exring73.dimensions import (
    injdim_triple,
    pd_triple,
    projective_dimension_by_syzygies,
    standard_sequence,
)
from src.exring73.fixtures import enumerate_indecomposables, to_homquiver
from src.exring73.homs import (
    TripleHom,
    ext1_triples,
    hom_triples,
    projective_cover,
    syzygy,
)
from src.exring73.modules import (
    PLocalModule,
    TripleModule,
    direct_sum_triples,
    e_r,
    f_r,
    g_r,
    name_of,
    paired_cyclic,
    simple_s,
    torsion_cyclic,
)

__all__ = [
    # Modules
    "PLocalModule",
    "TripleModule",
    "TripleHom",
    "direct_sum_triples",
    "name_of",
    "simple_s",
    "e_r",
    "f_r",
    "g_r",
    "torsion_cyclic",
    "paired_cyclic",
    # Hom and Ext
    "hom_triples",
    "ext1_triples",
    "projective_cover",
    "syzygy",
    # Structure
    "Decomposition",
    "decompose",
    "verify_reassembly",
    "invariants",
    "is_projective",
    "pd_triple",
    "injdim_triple",
    "projective_dimension_by_syzygies",
    "standard_sequence",
    # Fixtures
    "enumerate_indecomposables",
    "to_homquiver",
]
