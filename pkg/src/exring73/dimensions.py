"""
Projective and injective dimensions of triple modules.
"""

from dataclasses import dataclass
from typing import Optional, Tuple

from src.abgrp.matrix import IntMatrix
from src.exring73.decompose import decompose, is_projective
from src.exring73.homs import Ext1Triples, TripleHom, ext1_triples, hom_triples, syzygy
from src.exring73.modules import TripleModule, e_r, g_r, simple_s
from src.utils.error_handling import InvariantBreachError
from src.utils.logging import get_logger

logger = get_logger(__name__)

GLOBAL_DIMENSION = 2


def pd_triple(m: TripleModule) -> int:
    """2 with an S summand, 0 for sums of eR and fR, 1 otherwise."""
    names = decompose(m).names
    if "S" in names:
        return 2
    if all(name in ("eR", "fR") for name in names):
        return 0
    return 1


def projective_dimension_by_syzygies(m: TripleModule) -> int:
    """
    pd(m) as the number of syzygies taken until a projective one appears.
    """
    current = m
    for steps in range(GLOBAL_DIMENSION + 1):
        if is_projective(current):
            return steps
        current = syzygy(current).module
    raise InvariantBreachError(f"{m} has no projective syzygy within the global dimension")


@dataclass(frozen=True)
class InjectiveDimension:
    """injdim of a module with one nonvanishing Ext¹(gR, summand) per non-S summand."""

    module: TripleModule
    value: int
    witnesses: Tuple[Ext1Triples, ...]


def injdim_triple(m: TripleModule) -> InjectiveDimension:
    """
    S is injective and every other indecomposable has injective dimension 2,
    witnessed by Ext¹(gR, summand) ≠ 0.
    """
    witnesses = []
    value = 0
    gr = g_r(m.p)
    for summand in decompose(m).summands:
        if summand == simple_s(m.p):
            continue
        witness = ext1_triples(gr, summand)
        if witness.is_zero:
            raise InvariantBreachError(f"Ext¹(gR, {summand}) vanishes")
        witnesses.append(witness)
        value = GLOBAL_DIMENSION
    return InjectiveDimension(m, value, tuple(witnesses))


@dataclass(frozen=True)
class StandardSequence:
    """0 -> gR -> eR -> S -> 0 with its exactness and non-splitting evidence."""

    inclusion: TripleHom
    projection: TripleHom
    composite_zero: bool
    exact: bool
    extension: Ext1Triples
    section: Optional[TripleHom]

    @property
    def non_split(self) -> bool:
        return not self.extension.is_zero and self.section is None


def standard_sequence(p: int) -> StandardSequence:
    gr, er, s = g_r(p), e_r(p), simple_s(p)
    inclusion = TripleHom(gr, er, IntMatrix.zeros(1, 0), IntMatrix.identity(1))
    projection = TripleHom(er, s, IntMatrix.identity(1), IntMatrix.zeros(0, 1))
    composite_zero = (projection @ inclusion).is_zero()

    # lengths add up: dim L and the order of N are additive on exact sequences
    injective = inclusion.beta[0, 0] % p != 0
    surjective = projection.alpha[0, 0] % p != 0
    additive = er.l == gr.l + s.l and er.n.exponents == gr.n.exponents
    exact = composite_zero and injective and surjective and additive

    sections = [h for h in hom_triples(s, er).basis if (projection @ h) == TripleHom.identity(s)]
    return StandardSequence(
        inclusion,
        projection,
        composite_zero,
        exact,
        ext1_triples(s, gr),
        sections[0] if sections else None,
    )
