"""
Objects and morphisms of the tilted heart A_Q.

An object is stored in normal form X ≅ f[1] ⊕ t with f ∈ Y_Q and t ∈ X_Q.
A morphism (a, b, e) between X1 and X2 has the components

    a: f1 -> f2          (between the shifted torsion-free parts)
    b: t1 -> t2          (between the torsion parts)
    e ∈ Ext¹(t1, f2)     (the map t1 -> f2[1])

and the component f1[1] -> t2 vanishes identically.
"""

from dataclasses import dataclass

from src.abgrp.ext import ExtElement
from src.abgrp.groups import FgAbGroup, GroupHom
from src.torsion.pairs import PrimeSet, require_torsion, require_torsion_free
from src.utils.error_handling import (
    EndpointMismatchError,
    FixtureParseError,
    PrimeMismatchError,
)


@dataclass(frozen=True)
class HeartObject:
    """An object f[1] ⊕ t of the heart."""

    q: PrimeSet
    f: FgAbGroup
    t: FgAbGroup

    def __post_init__(self):
        require_torsion_free(self.q, self.f, field="f")
        require_torsion(self.q, self.t, field="t")

    @classmethod
    def zero(cls, q: PrimeSet) -> "HeartObject":
        return cls(q, FgAbGroup(), FgAbGroup())

    @classmethod
    def parse(cls, q: PrimeSet, text: str) -> "HeartObject":
        """Parse ``"F,T"``, for example ``"Z,0"`` or ``"Z + Z/3,Z/4"``."""
        parts = text.split(",")
        if len(parts) != 2:
            raise FixtureParseError(
                f"Heart object must be written as 'F,T', got '{text}'", field="object"
            )
        return cls(q, FgAbGroup.parse(parts[0]), FgAbGroup.parse(parts[1]))

    @property
    def is_zero(self) -> bool:
        return self.f.is_trivial and self.t.is_trivial

    @property
    def presentation_size(self) -> int:
        """Number of torsion invariant factors of t, the size of its square presentation."""
        return len(self.t.torsion)

    def __str__(self) -> str:
        return f"({self.f}, {self.t})"


def make_object(q: PrimeSet, f: FgAbGroup, t: FgAbGroup) -> HeartObject:
    """Validated constructor: rejects f ∉ Y_Q or t ∉ X_Q."""
    return HeartObject(q, f, t)


def check_same_q(x1: HeartObject, x2: HeartObject) -> None:
    if x1.q != x2.q:
        raise PrimeMismatchError(f"Objects live over different prime sets {x1.q} and {x2.q}")


@dataclass(frozen=True)
class HeartMorphism:
    """A morphism (a, b, e) from ``source`` to ``target``."""

    source: HeartObject
    target: HeartObject
    a: GroupHom
    b: GroupHom
    e: ExtElement

    def __post_init__(self):
        check_same_q(self.source, self.target)
        if (self.a.source, self.a.target) != (self.source.f, self.target.f):
            raise EndpointMismatchError(
                f"Component a must map {self.source.f} -> {self.target.f}", field="a"
            )
        if (self.b.source, self.b.target) != (self.source.t, self.target.t):
            raise EndpointMismatchError(
                f"Component b must map {self.source.t} -> {self.target.t}", field="b"
            )
        if (self.e.t, self.e.f) != (self.source.t, self.target.f):
            raise EndpointMismatchError(
                f"Component e must lie in Ext¹({self.source.t}, {self.target.f})", field="e"
            )

    @classmethod
    def identity(cls, x: HeartObject) -> "HeartMorphism":
        return cls(x, x, GroupHom.identity(x.f), GroupHom.identity(x.t), ExtElement.zero(x.t, x.f))

    @classmethod
    def zero(cls, x: HeartObject, y: HeartObject) -> "HeartMorphism":
        return cls(
            x,
            y,
            GroupHom.zero(x.f, y.f),
            GroupHom.zero(x.t, y.t),
            ExtElement.zero(x.t, y.f),
        )

    @classmethod
    def scalar(cls, x: HeartObject, n: int) -> "HeartMorphism":
        """Multiplication by n on x."""
        return cls(x, x, GroupHom.scalar(x.f, n), GroupHom.scalar(x.t, n), ExtElement.zero(x.t, x.f))

    def _check_parallel(self, other: "HeartMorphism") -> None:
        if (self.source, self.target) != (other.source, other.target):
            raise EndpointMismatchError("Heart morphisms are not parallel")

    def __add__(self, other: "HeartMorphism") -> "HeartMorphism":
        self._check_parallel(other)
        return HeartMorphism(
            self.source, self.target, self.a + other.a, self.b + other.b, self.e + other.e
        )

    def __neg__(self) -> "HeartMorphism":
        return HeartMorphism(self.source, self.target, -self.a, -self.b, -self.e)

    def __sub__(self, other: "HeartMorphism") -> "HeartMorphism":
        return self + (-other)

    def is_zero(self) -> bool:
        return self.a.is_zero() and self.b.is_zero() and self.e.is_zero()

    def __str__(self) -> str:
        return (
            f"{self.source} -> {self.target}: a={self.a.matrix}, b={self.b.matrix}, "
            f"e={list(self.e.coords)}"
        )
