"""
Composition and Hom/Ext spaces of the heart.

Over the hereditary base Z every space splits into blocks of Hom and Ext¹
groups of the components:

    Hom(X1, X2)  = Hom(f1, f2) ⊕ Hom(t1, t2) ⊕ Ext¹(t1, f2)
    Ext¹(X1, X2) = Ext¹(f1, f2) ⊕ Hom(f1, t2) ⊕ Ext¹(t1, t2)
    Ext²(X1, X2) = Ext¹(f1, t2), which vanishes because f1 has no Q-torsion
                   and t2 is a Q-group
"""

from dataclasses import dataclass, field
from itertools import product
from math import gcd
from typing import Dict, Iterator, List, NamedTuple, Optional, Sequence, Tuple

from src.abgrp.ext import ExtElement, ExtGroup, ext_group, ext_pullback, ext_pushout
from src.abgrp.groups import DirectSum, FgAbGroup, GroupHom, direct_sum, preimage
from src.abgrp.hom import HomGroup, hom_group
from src.abgrp.matrix import Vector
from src.abgrp.oracles import check_enumerable
from src.heart.models import HeartMorphism, HeartObject, check_same_q
from src.utils.error_handling import EndpointMismatchError, InvariantBreachError
from src.utils.logging import get_logger

logger = get_logger(__name__)


def compose(m2: HeartMorphism, m1: HeartMorphism) -> HeartMorphism:
    """
    The composite m2 ∘ m1.

    Returns:
        (a2·a1, b2·b1, pushout(e1, a2) + pullback(e2, b1))
    """
    if m1.target != m2.source:
        raise EndpointMismatchError(
            f"Cannot compose {m1.source} -> {m1.target} with {m2.source} -> {m2.target}"
        )
    return HeartMorphism(
        m1.source,
        m2.target,
        m2.a @ m1.a,
        m2.b @ m1.b,
        ext_pushout(m1.e, m2.a) + ext_pullback(m2.e, m1.b),
    )


@dataclass(frozen=True)
class BlockedGroup:
    """A group together with its labeled block summands."""

    group: FgAbGroup
    components: Tuple[Tuple[str, FgAbGroup], ...]

    def component(self, label: str) -> FgAbGroup:
        return dict(self.components)[label]

    @property
    def is_trivial(self) -> bool:
        return self.group.is_trivial


@dataclass(frozen=True)
class HeartHomSpace:
    """
    Hom(source, target) in the heart with canonical coordinates.

    The three blocks are Hom(f1, f2), Hom(t1, t2) and Ext¹(t1, f2).
    """

    source: HeartObject
    target: HeartObject
    hom_f: HomGroup = field(init=False, repr=False)
    hom_t: HomGroup = field(init=False, repr=False)
    ext: ExtGroup = field(init=False, repr=False)
    blocks: DirectSum = field(init=False, repr=False)

    def __post_init__(self):
        check_same_q(self.source, self.target)
        x1, x2 = self.source, self.target
        object.__setattr__(self, "hom_f", hom_group(x1.f, x2.f))
        object.__setattr__(self, "hom_t", hom_group(x1.t, x2.t))
        object.__setattr__(self, "ext", ext_group(x1.t, x2.f))
        object.__setattr__(
            self,
            "blocks",
            direct_sum([self.hom_f.group, self.hom_t.group, self.ext.group]),
        )

    @property
    def group(self) -> FgAbGroup:
        return self.blocks.group

    @property
    def components(self) -> Tuple[Tuple[str, FgAbGroup], ...]:
        return (
            ("Hom(f1,f2)", self.hom_f.group),
            ("Hom(t1,t2)", self.hom_t.group),
            ("Ext1(t1,f2)", self.ext.group),
        )

    def as_blocked(self) -> BlockedGroup:
        return BlockedGroup(self.group, self.components)

    def coordinates(self, m: HeartMorphism) -> Vector:
        if (m.source, m.target) != (self.source, self.target):
            raise EndpointMismatchError("Morphism does not belong to this Hom space")
        return self.blocks.combine(
            [self.hom_f.coordinates(m.a), self.hom_t.coordinates(m.b), self.ext.coordinates(m.e)]
        )

    def element(self, vector: Sequence[int]) -> HeartMorphism:
        va, vb, ve = self.blocks.split(vector)
        return HeartMorphism(
            self.source,
            self.target,
            self.hom_f.element(va),
            self.hom_t.element(vb),
            self.ext.element(ve),
        )

    @property
    def basis(self) -> List[HeartMorphism]:
        return [self.element(self.group.generator(k)) for k in range(self.group.ngens)]

    def morphisms(self, bound: Optional[int] = None) -> Iterator[HeartMorphism]:
        """Every morphism, when the Hom space is finite and within ``bound``."""
        check_enumerable(self.group, bound)
        for vector in product(*(range(d) for d in self.group.torsion)):
            yield self.element(vector)


def hom_space(x1: HeartObject, x2: HeartObject) -> HeartHomSpace:
    """Hom(x1, x2) with its three labeled blocks."""
    space = HeartHomSpace(x1, x2)
    logger.debug("heart hom computed", source=str(x1), target=str(x2), group=str(space.group))
    return space


def _blocked(parts: Sequence[Tuple[str, FgAbGroup]]) -> BlockedGroup:
    total = direct_sum([g for _, g in parts]).group
    return BlockedGroup(total, tuple(parts))


def ext1_space(x1: HeartObject, x2: HeartObject) -> BlockedGroup:
    """Ext¹(x1, x2) = Ext¹(f1, f2) ⊕ Hom(f1, t2) ⊕ Ext¹(t1, t2)."""
    check_same_q(x1, x2)
    return _blocked(
        [
            ("Ext1(f1,f2)", ext_group(x1.f, x2.f).group),
            ("Hom(f1,t2)", hom_group(x1.f, x2.t).group),
            ("Ext1(t1,t2)", ext_group(x1.t, x2.t).group),
        ]
    )


@dataclass(frozen=True)
class Ext2Result:
    """Ext² of two heart objects with its coprimality certificate."""

    group: FgAbGroup
    block: FgAbGroup
    block_gcds: Tuple[int, ...]

    @property
    def vanishes(self) -> bool:
        return self.group.is_trivial and self.block.is_trivial and all(g == 1 for g in self.block_gcds)


def ext2_space(x1: HeartObject, x2: HeartObject) -> Ext2Result:
    """
    Ext²(x1, x2), which is always zero.

    The only candidate block Ext¹(f1, t2) is computed and returned with the
    gcd of every pair of cyclic factors as certificate.
    """
    check_same_q(x1, x2)
    block = ext_group(x1.f, x2.t).group
    gcds = tuple(gcd(d, c) for d in x1.f.torsion for c in x2.t.torsion)
    if not block.is_trivial:
        raise InvariantBreachError(
            f"Ext¹({x1.f}, {x2.t}) = {block} should vanish over the prime set {x1.q}"
        )
    return Ext2Result(FgAbGroup(), block, gcds)


class HeartSequence(NamedTuple):
    """The torsion-pair sequence 0 -> f[1] -> x -> t -> 0 in the heart."""

    f_object: HeartObject
    inclusion: HeartMorphism
    t_object: HeartObject
    projection: HeartMorphism


def canonical_ses(x: HeartObject) -> HeartSequence:
    """The summand inclusion (f, 0) -> x and projection x -> (0, t)."""
    trivial = FgAbGroup()
    f_object = HeartObject(x.q, x.f, trivial)
    t_object = HeartObject(x.q, trivial, x.t)
    inclusion = HeartMorphism(
        f_object,
        x,
        GroupHom.identity(x.f),
        GroupHom.zero(trivial, x.t),
        ExtElement.zero(trivial, x.f),
    )
    projection = HeartMorphism(
        x,
        t_object,
        GroupHom.zero(x.f, trivial),
        GroupHom.identity(x.t),
        ExtElement.zero(x.t, trivial),
    )
    return HeartSequence(f_object, inclusion, t_object, projection)


def postcomposition(k: HeartMorphism, source: HeartObject) -> GroupHom:
    """The map Hom(source, k.source) -> Hom(source, k.target), u ↦ k∘u."""
    domain, codomain = hom_space(source, k.source), hom_space(source, k.target)
    columns = [codomain.coordinates(compose(k, u)) for u in domain.basis]
    return GroupHom.from_columns(domain.group, codomain.group, columns)


def precomposition(c: HeartMorphism, target: HeartObject) -> GroupHom:
    """The map Hom(c.target, target) -> Hom(c.source, target), u ↦ u∘c."""
    domain, codomain = hom_space(c.target, target), hom_space(c.source, target)
    columns = [codomain.coordinates(compose(u, c)) for u in domain.basis]
    return GroupHom.from_columns(domain.group, codomain.group, columns)


def factor_through_mono(k: HeartMorphism, m: HeartMorphism) -> Optional[HeartMorphism]:
    """Solve k∘u = m for u, or return None when m does not factor through k."""
    if k.target != m.target:
        raise EndpointMismatchError("Both morphisms must end at the same object")
    induced = postcomposition(k, m.source)
    solution = preimage(induced, hom_space(m.source, m.target).coordinates(m))
    if solution is None:
        return None
    return hom_space(m.source, k.source).element(solution)


def factor_through_epi(c: HeartMorphism, m: HeartMorphism) -> Optional[HeartMorphism]:
    """Solve u∘c = m for u, or return None when m does not factor through c."""
    if c.source != m.source:
        raise EndpointMismatchError("Both morphisms must start at the same object")
    induced = precomposition(c, m.target)
    solution = preimage(induced, hom_space(m.source, m.target).coordinates(m))
    if solution is None:
        return None
    return hom_space(c.target, m.target).element(solution)


def direct_sum_objects(objects: Sequence[HeartObject]) -> Tuple[HeartObject, Dict[str, DirectSum]]:
    """Componentwise direct sum of heart objects over a common prime set."""
    if not objects:
        raise EndpointMismatchError("Direct sum of no objects needs an explicit prime set")
    for x in objects[1:]:
        check_same_q(objects[0], x)
    f_sum = direct_sum([x.f for x in objects])
    t_sum = direct_sum([x.t for x in objects])
    return HeartObject(objects[0].q, f_sum.group, t_sum.group), {"f": f_sum, "t": t_sum}
