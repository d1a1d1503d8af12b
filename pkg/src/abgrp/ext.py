"""
Ext¹ over Z in cyclic-block coordinates.

A class in Ext¹(T, F) is stored as one element c_i of F per torsion invariant
factor d_i of T, reduced modulo d_i·F. The class c corresponds to the
extension in which a lift x_i of the i-th torsion generator of T satisfies
d_i·x_i = c_i. Free generators of T carry no coordinate.
"""

from dataclasses import dataclass, field
from math import gcd
from typing import List, NamedTuple, Sequence, Tuple

from src.abgrp.groups import (
    CyclicSum,
    FgAbGroup,
    GroupHom,
    cyclic_sum,
    preimage,
    present,
)
from src.abgrp.hom import hom_group
from src.abgrp.matrix import IntMatrix, Vector
from src.utils.error_handling import (
    EndpointMismatchError,
    InputValidationError,
    InvariantBreachError,
)
from src.utils.logging import get_logger

logger = get_logger(__name__)

# Global dimension of Z: Ext^n vanishes for n >= 2.
HEREDITARY_GLOBAL_DIMENSION = 1


def reduce_modulo_multiple(f: FgAbGroup, d: int, vector: Sequence[int]) -> Vector:
    """Reduce an element of f modulo d·f."""
    if len(vector) != f.ngens:
        raise InputValidationError(
            f"Coordinate of length {len(vector)} for a group with {f.ngens} generators",
            field="coords",
        )
    return tuple(
        x % (gcd(d, o) if o else d) for x, o in zip(vector, f.orders)
    )


@dataclass(frozen=True)
class ExtElement:
    """An extension class in Ext¹(t, f)."""

    t: FgAbGroup
    f: FgAbGroup
    coords: Tuple[Tuple[int, ...], ...]

    def __post_init__(self):
        if len(self.coords) != len(self.t.torsion):
            raise InputValidationError(
                f"Expected {len(self.t.torsion)} coordinates for Ext¹({self.t}, {self.f}), "
                f"got {len(self.coords)}",
                field="coords",
            )
        reduced = tuple(
            reduce_modulo_multiple(self.f, d, c) for d, c in zip(self.t.torsion, self.coords)
        )
        object.__setattr__(self, "coords", reduced)

    @classmethod
    def zero(cls, t: FgAbGroup, f: FgAbGroup) -> "ExtElement":
        return cls(t, f, tuple(f.zero() for _ in t.torsion))

    def _check_parallel(self, other: "ExtElement") -> None:
        if (self.t, self.f) != (other.t, other.f):
            raise EndpointMismatchError(
                f"Cannot add classes in Ext¹({self.t}, {self.f}) and Ext¹({other.t}, {other.f})"
            )

    def __add__(self, other: "ExtElement") -> "ExtElement":
        self._check_parallel(other)
        return ExtElement(
            self.t,
            self.f,
            tuple(tuple(a + b for a, b in zip(u, v)) for u, v in zip(self.coords, other.coords)),
        )

    def __neg__(self) -> "ExtElement":
        return self.scale(-1)

    def __sub__(self, other: "ExtElement") -> "ExtElement":
        return self + (-other)

    def scale(self, n: int) -> "ExtElement":
        return ExtElement(self.t, self.f, tuple(tuple(n * x for x in c) for c in self.coords))

    def is_zero(self) -> bool:
        return all(x == 0 for c in self.coords for x in c)


@dataclass(frozen=True)
class ExtBlock:
    factor: int  # index of the torsion invariant factor of t
    generator: int  # index of the generator of f
    order: int


@dataclass(frozen=True)
class ExtGroup:
    """Ext¹(t, f) = ⊕_i f / d_i·f with canonical coordinates."""

    t: FgAbGroup
    f: FgAbGroup
    blocks: Tuple[ExtBlock, ...] = field(init=False, repr=False)
    layout: CyclicSum = field(init=False, repr=False)

    def __post_init__(self):
        blocks = tuple(
            ExtBlock(i, k, gcd(d, o) if o else d)
            for i, d in enumerate(self.t.torsion)
            for k, o in enumerate(self.f.orders)
        )
        object.__setattr__(self, "blocks", blocks)
        object.__setattr__(self, "layout", cyclic_sum([b.order for b in blocks]))

    @property
    def group(self) -> FgAbGroup:
        return self.layout.group

    @property
    def basis(self) -> List[ExtElement]:
        return [self.element(self.group.generator(k)) for k in range(self.group.ngens)]

    def element(self, vector: Sequence[int]) -> ExtElement:
        values = self.layout.from_canonical(vector)
        coords = [[0] * self.f.ngens for _ in self.t.torsion]
        for block, value in zip(self.blocks, values):
            coords[block.factor][block.generator] = value
        return ExtElement(self.t, self.f, tuple(tuple(c) for c in coords))

    def coordinates(self, e: ExtElement) -> Vector:
        if (e.t, e.f) != (self.t, self.f):
            raise EndpointMismatchError(
                f"Class in Ext¹({e.t}, {e.f}) is not in Ext¹({self.t}, {self.f})"
            )
        values = [e.coords[b.factor][b.generator] for b in self.blocks]
        return self.layout.to_canonical(values)


def ext_group(t: FgAbGroup, f: FgAbGroup) -> ExtGroup:
    """
    Compute Ext¹(t, f).

    Returns:
        ExtGroup whose ``group`` is the canonical form and which fixes the
        ExtElement coordinate system
    """
    ext = ExtGroup(t, f)
    logger.debug("ext group computed", t=str(t), f=str(f), group=str(ext.group))
    return ext


def higher_ext_group(n: int, t: FgAbGroup, f: FgAbGroup) -> FgAbGroup:
    """Ext^n(t, f) over Z: Hom for n = 0, Ext¹ for n = 1, zero above."""
    if n < 0:
        raise InputValidationError(f"Ext degree must be non-negative, got {n}")
    if n == 0:
        return hom_group(t, f).group
    if n <= HEREDITARY_GLOBAL_DIMENSION:
        return ext_group(t, f).group
    return FgAbGroup()


def ext_pushout(e: ExtElement, a: GroupHom) -> ExtElement:
    """
    Push a class along a: e.f -> f'.

    Returns:
        The class in Ext¹(e.t, f') with coordinates a(c_i)
    """
    if a.source != e.f:
        raise EndpointMismatchError(
            f"Pushout map starts at {a.source}, extension kernel is {e.f}"
        )
    return ExtElement(e.t, a.target, tuple(a(c) for c in e.coords))


def ext_pullback(e: ExtElement, b: GroupHom) -> ExtElement:
    """
    Pull a class back along b: t' -> e.t.

    For a torsion generator y_j of t' of order d'_j the new coordinate is
    Σ_k (d'_j·b_kj / d_k)·c_k, summed over the torsion factors d_k of e.t.
    """
    if b.target != e.t:
        raise EndpointMismatchError(
            f"Pullback map ends at {b.target}, extension quotient is {e.t}"
        )
    t, t_new, f = e.t, b.source, e.f
    coords = []
    for jj, d_new in enumerate(t_new.torsion):
        j = t_new.rank + jj
        total = [0] * f.ngens
        for k, d in enumerate(t.torsion):
            entry = b.matrix[t.rank + k, j]
            if (d_new * entry) % d != 0:
                raise InvariantBreachError(f"Pullback map {b.matrix} is not well defined")
            factor = d_new * entry // d
            total = [x + factor * c for x, c in zip(total, e.coords[k])]
        coords.append(tuple(total))
    return ExtElement(t_new, f, tuple(coords))


def pushout_map(a: GroupHom, t: FgAbGroup) -> GroupHom:
    """The induced map Ext¹(t, a.source) -> Ext¹(t, a.target)."""
    domain, codomain = ext_group(t, a.source), ext_group(t, a.target)
    columns = [codomain.coordinates(ext_pushout(e, a)) for e in domain.basis]
    return GroupHom.from_columns(domain.group, codomain.group, columns)


def pullback_map(b: GroupHom, f: FgAbGroup) -> GroupHom:
    """The induced map Ext¹(b.target, f) -> Ext¹(b.source, f)."""
    domain, codomain = ext_group(b.target, f), ext_group(b.source, f)
    columns = [codomain.coordinates(ext_pullback(e, b)) for e in domain.basis]
    return GroupHom.from_columns(domain.group, codomain.group, columns)


class Extension(NamedTuple):
    """A short exact sequence 0 -> f -> middle -> t -> 0."""

    middle: FgAbGroup
    inclusion: GroupHom
    projection: GroupHom


def realize_extension(e: ExtElement) -> Extension:
    """
    Build the extension with class ``e``.

    The middle term is (f ⊕ Z·x_1 ⊕ ... ⊕ Z^rank(t)) / (d_i·x_i - c_i) with
    the free part of t lifted freely.
    """
    f, t = e.f, e.t
    nf, nt = f.ngens, t.ngens
    n = nf + nt

    columns = []
    for k, o in enumerate(f.orders):
        if o:
            column = [0] * n
            column[k] = o
            columns.append(column)
    for i, d in enumerate(t.torsion):
        column = [-x for x in e.coords[i]] + [0] * nt
        column[nf + t.rank + i] = d
        columns.append(column)

    presentation = present(IntMatrix.from_columns(columns, n))
    middle = presentation.group
    inclusion = GroupHom(
        f, middle, presentation.projection.submatrix(range(middle.ngens), range(nf))
    )
    projection = GroupHom(
        middle, t, presentation.section.submatrix(range(nf, n), range(middle.ngens))
    )
    logger.debug("extension realized", t=str(t), f=str(f), middle=str(middle))
    return Extension(middle, inclusion, projection)


def extension_class(inclusion: GroupHom, projection: GroupHom) -> ExtElement:
    """
    Read off the class of an exact sequence 0 -> f -> E -> t -> 0.

    Args:
        inclusion: Injective map f -> E
        projection: Surjective map E -> t with kernel the image of ``inclusion``

    Returns:
        The ExtElement in Ext¹(t, f)
    """
    if inclusion.target != projection.source:
        raise EndpointMismatchError("Inclusion and projection do not share the middle term")
    f, middle, t = inclusion.source, inclusion.target, projection.target

    coords = []
    for i, d in enumerate(t.torsion):
        lift = preimage(projection, t.generator(t.rank + i))
        if lift is None:
            raise InputValidationError("Projection is not surjective", field="projection")
        multiple = middle.reduce(tuple(d * x for x in lift))
        c = preimage(inclusion, multiple)
        if c is None:
            raise InputValidationError(
                "Sequence is not exact at the middle term", field="inclusion"
            )
        coords.append(c)
    return ExtElement(t, f, tuple(coords))
