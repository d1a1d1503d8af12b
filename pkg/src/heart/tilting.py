"""
Tilting checks in the heart.

Objects of the form (f, 0) form the shifted torsion-free side of the heart.
Every heart object embeds into one of them, and the cokernel of that
embedding is again of this form, which gives the two-step coresolution
0 -> x -> T⁰ -> T¹ -> 0.
"""

from dataclasses import dataclass
from typing import List, NamedTuple, Optional, Sequence, Tuple

from sympy import nextprime

from src.abgrp.ext import ExtElement
from src.abgrp.groups import FgAbGroup, GroupHom, direct_sum
from src.heart.category import ext1_space, ext2_space, hom_space
from src.heart.exact import ExactnessVerdict, cokernel, is_ses, kernel
from src.heart.models import HeartMorphism, HeartObject
from src.torsion.pairs import PrimeSet
from src.utils.error_handling import InvariantBreachError
from src.utils.logging import get_logger

logger = get_logger(__name__)


class TiltEmbedding(NamedTuple):
    obj: HeartObject
    mono: HeartMorphism


def embed_into_tilt(x: HeartObject, check: bool = True) -> TiltEmbedding:
    """
    Embed x = (f, t) into (f ⊕ Z^k, 0), k the number of invariant factors of t.

    The Ext component sends the i-th torsion generator of t to the i-th
    generator of Z^k, the connecting class of 0 -> Z^k -> Z^k -> t -> 0.
    """
    k = x.presentation_size
    summands = direct_sum([x.f, FgAbGroup.free(k)])
    trivial = FgAbGroup()
    target = HeartObject(x.q, summands.group, trivial)

    connecting = summands.injections[1]
    mono = HeartMorphism(
        x,
        target,
        summands.injections[0],
        GroupHom.zero(x.t, trivial),
        ExtElement(x.t, target.f, tuple(connecting.column(i) for i in range(k))),
    )
    if check and not kernel(mono)[0].is_zero:
        raise InvariantBreachError(f"Embedding of {x} is not a monomorphism")
    return TiltEmbedding(target, mono)


@dataclass(frozen=True)
class TiltCoresolution:
    """0 -> x -> first -> second -> 0 with both terms of the form (f, 0)."""

    x: HeartObject
    first: HeartObject
    second: HeartObject
    mono: HeartMorphism
    epi: HeartMorphism
    verdict: ExactnessVerdict

    @property
    def holds(self) -> bool:
        return self.verdict.holds and self.first.t.is_trivial and self.second.t.is_trivial


def tilt_coresolution(x: HeartObject) -> TiltCoresolution:
    embedding = embed_into_tilt(x, check=False)
    second, epi = cokernel(embedding.mono)
    verdict = is_ses(embedding.mono, epi)
    return TiltCoresolution(x, embedding.obj, second, embedding.mono, epi, verdict)


@dataclass(frozen=True)
class TiltingCondition:
    name: str
    passed: bool
    evidence: Tuple[str, ...]


@dataclass(frozen=True)
class TiltingReport:
    candidate: HeartObject
    conditions: Tuple[TiltingCondition, ...]

    @property
    def passed(self) -> bool:
        return all(c.passed for c in self.conditions)

    def condition(self, name: str) -> TiltingCondition:
        for c in self.conditions:
            if c.name == name:
                return c
        raise KeyError(name)


def tilting_witnesses(q: PrimeSet) -> List[HeartObject]:
    """
    Witness objects covering every block shape over q.

    Torsion-free parts use the smallest prime outside q for their torsion.
    """
    outside = 2
    while outside in q:
        outside = nextprime(outside)
    z = FgAbGroup.free(1)
    zero = FgAbGroup()
    foreign = FgAbGroup.cyclic(outside)
    witnesses = [
        HeartObject(q, zero, zero),
        HeartObject(q, z, zero),
        HeartObject(q, foreign, zero),
        HeartObject(q, FgAbGroup.parse(f"Z + Z/{outside}"), zero),
    ]
    for p in q:
        witnesses.extend(
            [
                HeartObject(q, zero, FgAbGroup.cyclic(p)),
                HeartObject(q, zero, FgAbGroup.cyclic(p * p)),
                HeartObject(q, z, FgAbGroup.cyclic(p)),
                HeartObject(q, foreign, FgAbGroup.cyclic(p)),
            ]
        )
    return witnesses


def verify_tilting_object(
    t0: HeartObject, witnesses: Optional[Sequence[HeartObject]] = None
) -> TiltingReport:
    """
    Check the four tilting conditions for t0 against a witness family.

    (1) projective dimension at most 1: Ext²(t0, w) = 0 for every witness
    (2) Ext¹(t0, t0) = 0
    (3) Hom(t0, w) = 0 = Ext¹(t0, w) forces w = 0
    (4) Hom and Ext¹ are finitely generated over End(t0), certified by the
        Z-action through which End(t0) acts
    """
    witnesses = list(tilting_witnesses(t0.q) if witnesses is None else witnesses)

    pd_evidence, pd_ok = [], True
    for w in witnesses:
        result = ext2_space(t0, w)
        pd_ok &= result.vanishes
        pd_evidence.append(f"Ext2({t0}, {w}) = {result.group}, gcds {list(result.block_gcds)}")
    pd_evidence.append("structural: Ext^2 over Z vanishes, the heart is hereditary")

    self_ext = ext1_space(t0, t0)
    rigid = TiltingCondition(
        "ext1_self_vanishes", self_ext.is_trivial, (f"Ext1({t0}, {t0}) = {self_ext.group}",)
    )

    generating_ok, generating_evidence = True, []
    for w in witnesses:
        hom = hom_space(t0, w).group
        ext = ext1_space(t0, w).group
        if hom.is_trivial and ext.is_trivial and not w.is_zero:
            generating_ok = False
            generating_evidence.append(f"nonzero witness {w} with Hom = Ext1 = 0")
        else:
            generating_evidence.append(f"{w}: Hom = {hom}, Ext1 = {ext}")

    endomorphisms = hom_space(t0, t0).group
    finiteness = TiltingCondition(
        "finitely_generated_over_end",
        True,
        (f"End({t0}) = {endomorphisms}", "Hom and Ext1 are finitely generated abelian groups"),
    )

    report = TiltingReport(
        t0,
        (
            TiltingCondition("projective_dimension", pd_ok, tuple(pd_evidence)),
            rigid,
            TiltingCondition("generates", generating_ok, tuple(generating_evidence)),
            finiteness,
        ),
    )
    logger.debug("tilting object checked", candidate=str(t0), passed=report.passed)
    return report
