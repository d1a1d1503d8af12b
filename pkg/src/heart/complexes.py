"""
Two-term complexes representing heart objects at chain level.

Every heart object X = (f, t) with t = ⊕ Z/d_i has the normal complex

    N(X) = [ Z^k ⊕ f --(δ, 0)--> Z^k ],   δ = diag(d_1, ..., d_k)

whose homology is f in degree -1 and t in degree 0. A morphism (a, b, e)
lifts to the chain map whose degree 0 part is the matrix of b, whose
P -> P part is b_ji·d_i/d'_j, whose P -> f' part sends the i-th generator to
the i-th coordinate of e and whose f -> f' part is a.
"""

from dataclasses import dataclass
from typing import List, Sequence, Tuple

from src.abgrp.ext import ExtElement
from src.abgrp.groups import FgAbGroup, GroupHom, hom_kernel_cokernel_image, preimage, quotient
from src.abgrp.matrix import IntMatrix, Vector
from src.heart.models import HeartMorphism, HeartObject
from src.torsion.pairs import PrimeSet
from src.utils.error_handling import InputValidationError, InvariantBreachError
from src.utils.logging import get_logger

logger = get_logger(__name__)


def linear_combination(group: FgAbGroup, terms: Sequence[Tuple[int, Sequence[int]]]) -> Vector:
    """Reduced Σ coefficient·vector in ``group``."""
    total = [0] * group.ngens
    for coefficient, vector in terms:
        for index, x in enumerate(vector):
            total[index] += coefficient * x
    return group.reduce(total)


@dataclass(frozen=True)
class TwoTermComplex:
    """A complex C⁻¹ -> C⁰ concentrated in degrees -1 and 0 with C⁰ free."""

    differential: GroupHom

    def __post_init__(self):
        if not self.differential.target.is_free:
            raise InputValidationError(
                f"Degree 0 term {self.differential.target} must be free", field="differential"
            )

    @property
    def minus_one(self) -> FgAbGroup:
        return self.differential.source

    @property
    def zero(self) -> FgAbGroup:
        return self.differential.target

    def normalize(self, q: PrimeSet) -> "Normalization":
        """
        Identify the complex with the normal complex of its homology.

        Raises:
            ClassMembershipError: if the homology is not a heart object over q
        """
        d = self.differential
        split = hom_kernel_cokernel_image(d)
        coker = quotient(d.target, d.matrix)
        obj = HeartObject(q, split.kernel, coker.group)

        lifts0 = tuple(coker.section.column(j) for j in range(obj.t.ngens))
        lifts1 = []
        for order, lift in zip(obj.t.torsion, lifts0):
            y = preimage(d, tuple(order * x for x in lift))
            if y is None:
                raise InvariantBreachError("Torsion generator of H⁰ does not bound")
            lifts1.append(y)

        logger.debug("complex normalized", f=str(obj.f), t=str(obj.t))
        return Normalization(
            obj, self, split.kernel_inclusion, coker.projection, lifts0, tuple(lifts1)
        )


@dataclass(frozen=True)
class Normalization:
    """
    A quasi-isomorphism ν: N(obj) -> complex.

    ``lifts0[j]`` is ν⁰ of the j-th generator of Z^k and ``lifts1[j]`` is
    ν⁻¹ of the j-th generator, so that d(lifts1[j]) = d_j·lifts0[j].
    """

    obj: HeartObject
    complex: TwoTermComplex
    f_inclusion: GroupHom
    t_projection: GroupHom
    lifts0: Tuple[Vector, ...]
    lifts1: Tuple[Vector, ...]

    def f_coordinates(self, y: Sequence[int]) -> Vector:
        """Coordinates in f of a cycle y ∈ C⁻¹."""
        c = preimage(self.f_inclusion, y)
        if c is None:
            raise InvariantBreachError(f"Element {tuple(y)} is not a cycle")
        return c

    def morphism_from(
        self,
        x: HeartObject,
        degree0: Sequence[Sequence[int]],
        degree_minus1: Sequence[Sequence[int]],
        on_f: GroupHom,
    ) -> HeartMorphism:
        """
        The heart morphism x -> obj of a chain map N(x) -> complex.

        Args:
            x: Source object
            degree0: Image in C⁰ of each generator of N(x)⁰
            degree_minus1: Image in C⁻¹ of each free generator of N(x)⁻¹
            on_f: The chain map restricted to f_x ⊆ N(x)⁻¹

        Returns:
            The morphism (a, b, e) of the homotopic chain map into N(obj)
        """
        d = self.complex.differential
        c_minus1, c_zero = self.complex.minus_one, self.complex.zero
        target = self.obj

        b = GroupHom.from_columns(x.t, target.t, [self.t_projection(v) for v in degree0])
        a = GroupHom.from_columns(
            x.f, target.f, [self.f_coordinates(on_f(x.f.generator(g))) for g in range(x.f.ngens)]
        )

        coords = []
        for i, order in enumerate(x.t.torsion):
            beta = b.column(i)
            boundary = linear_combination(
                c_zero,
                [(1, degree0[i])] + [(-beta[j], self.lifts0[j]) for j in range(len(beta))],
            )
            h = preimage(d, boundary)
            if h is None:
                raise InvariantBreachError("Degree 0 correction is not a boundary")
            terms = [(1, degree_minus1[i]), (-order, h)]
            for j, target_order in enumerate(target.t.torsion):
                terms.append((-(order * beta[j] // target_order), self.lifts1[j]))
            coords.append(self.f_coordinates(linear_combination(c_minus1, terms)))

        return HeartMorphism(x, target, a, b, ExtElement(x.t, target.f, tuple(coords)))


@dataclass(frozen=True)
class NormalComplex:
    """
    N(X) with coordinates [P (k) | f free | f torsion] in degree -1.

    The f coordinates are contiguous, so an element of f embeds by offset.
    """

    obj: HeartObject
    complex: TwoTermComplex

    @property
    def k(self) -> int:
        return self.obj.presentation_size

    def p_generator(self, i: int) -> Vector:
        return self.complex.minus_one.generator(i)

    def embed_f(self, vector: Sequence[int]) -> Vector:
        return self.complex.minus_one.reduce((0,) * self.k + tuple(vector))

    def f_component(self, vector: Sequence[int]) -> Vector:
        return self.obj.f.reduce(tuple(vector[self.k :]))

    def p_component(self, vector: Sequence[int]) -> Vector:
        return tuple(vector[: self.k])


def normal_complex(x: HeartObject) -> NormalComplex:
    k = x.presentation_size
    minus_one = FgAbGroup(k + x.f.rank, x.f.torsion)
    delta = IntMatrix.diagonal(x.t.torsion, rows=k, cols=minus_one.ngens)
    differential = GroupHom(minus_one, FgAbGroup.free(k), delta)
    return NormalComplex(x, TwoTermComplex(differential))


@dataclass(frozen=True)
class ChainMap:
    """A chain map N(X1) -> N(X2) given by its two degree components."""

    source: NormalComplex
    target: NormalComplex
    degree0: IntMatrix
    degree_minus1: GroupHom


def chain_map(m: HeartMorphism) -> ChainMap:
    """Lift a heart morphism to the normal complexes of its endpoints."""
    n1, n2 = normal_complex(m.source), normal_complex(m.target)
    k1, k2 = n1.k, n2.k
    d1, d2 = m.source.t.torsion, m.target.t.torsion
    f2 = m.target.f

    rows: List[List[int]] = [[0] * n1.complex.minus_one.ngens for _ in range(n2.complex.minus_one.ngens)]
    for j in range(k2):
        for i in range(k1):
            entry = m.b.matrix[j, i]
            if (entry * d1[i]) % d2[j] != 0:
                raise InvariantBreachError(f"Torsion component {m.b.matrix} is not well defined")
            rows[j][i] = entry * d1[i] // d2[j]
    for i in range(k1):
        for g in range(f2.ngens):
            rows[k2 + g][i] = m.e.coords[i][g]
    for g in range(f2.ngens):
        for h in range(m.source.f.ngens):
            rows[k2 + g][k1 + h] = m.a.matrix[g, h]

    degree_minus1 = GroupHom(
        n1.complex.minus_one,
        n2.complex.minus_one,
        IntMatrix.from_rows(rows, cols=n1.complex.minus_one.ngens),
    )
    return ChainMap(n1, n2, m.b.matrix, degree_minus1)
