"""
Indecomposables of the ring R = [[Z_p, Z_p], [0, Z_(p)]] and their Hom-quiver.
"""

from typing import List, Optional

from src.ahdetect.quiver import HomQuiver, Vertex
from src.config import settings
from src.exring73.dimensions import injdim_triple, pd_triple
from src.exring73.homs import ext1_triples, hom_triples
from src.exring73.modules import TripleModule, f_r, name_of, paired_cyclic, simple_s, torsion_cyclic
from src.utils.error_handling import InputValidationError
from src.utils.logging import get_logger

logger = get_logger(__name__)

R_SUMMANDS = ("eR", "fR")


def enumerate_indecomposables(bound: int, p: Optional[int] = None) -> List[TripleModule]:
    """
    S, fR, then (0, Z/p^r, 0) and (F_p, Z/p^r, incl) for 1 <= r <= bound.

    Args:
        bound: Largest exponent of the two cyclic families
        p: The prime, EXAMPLE_PRIME when omitted

    Returns:
        The modules in vertex order
    """
    if bound < 0:
        raise InputValidationError(f"Truncation bound must be non-negative, got {bound}", field="bound")
    p = settings.EXAMPLE_PRIME if p is None else p
    modules = [simple_s(p), f_r(p)]
    modules += [torsion_cyclic(p, r) for r in range(1, bound + 1)]
    modules += [paired_cyclic(p, s) for s in range(1, bound + 1)]
    return modules


def to_homquiver(bound: int, p: Optional[int] = None) -> HomQuiver:
    """The Hom-quiver of the indecomposables up to ``bound``, ready for detection."""
    p = settings.EXAMPLE_PRIME if p is None else p
    modules = enumerate_indecomposables(bound, p)
    vertices = tuple(
        Vertex(name_of(m), pd_triple(m), injdim_triple(m).value, name_of(m) in R_SUMMANDS)
        for m in modules
    )
    hom_nonzero = tuple(tuple(not hom_triples(a, b).is_zero for b in modules) for a in modules)
    ext1_nonzero = tuple(tuple(not ext1_triples(a, b).is_zero for b in modules) for a in modules)
    logger.debug("example73 quiver built", bound=bound, p=p, vertices=len(vertices))
    return HomQuiver(
        vertices,
        hom_nonzero,
        ext1_nonzero,
        bound,
        f"Indecomposables of [[Z_{p}, Z_{p}], [0, Z_({p})]] with exponents up to {bound}",
    )
