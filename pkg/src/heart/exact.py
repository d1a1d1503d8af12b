"""
Kernels, cokernels, images and exactness in the heart.

For a morphism m: X1 -> X2 the chain map N(X1) -> N(X2) is turned into the
three-term complex

    W⁻² = P1⁻¹ ⊕ f1  -->  W⁻¹ = P1⁰ ⊕ P2⁻¹ ⊕ f2  -->  W⁰ = P2⁰
    (p, φ) ↦ (δ1·p, β·p, c·p + a·φ)      (x, q, ψ) ↦ b·x - δ2·q

with homology ker a, M and coker b. The middle homology M sits in
0 -> coker a -> M -> ker b -> 0, and

    kernel(m)   = (ker a, t-part of M)
    cokernel(m) = (M / t-part of M, coker b)
"""

from dataclasses import dataclass
from typing import List, NamedTuple, Optional, Tuple

from src.abgrp.ext import ExtElement
from src.abgrp.groups import (
    FgAbGroup,
    GroupHom,
    hom_kernel_cokernel_image,
    preimage,
    quotient,
)
from src.abgrp.matrix import IntMatrix, Vector
from src.heart.category import compose, factor_through_mono, postcomposition
from src.heart.complexes import TwoTermComplex, chain_map, linear_combination
from src.heart.models import HeartMorphism, HeartObject
from src.torsion.pairs import torsion_part
from src.utils.error_handling import EndpointMismatchError, InvariantBreachError
from src.utils.logging import get_logger

logger = get_logger(__name__)


@dataclass(frozen=True)
class _MiddleHomology:
    """The complex W of a morphism and the torsion part of its middle homology."""

    morphism: HeartMorphism
    k1: int
    k2: int
    w_minus1: FgAbGroup
    boundaries: IntMatrix  # columns: images of the generators of W⁻²
    d_zero: GroupHom
    torsion: FgAbGroup  # t-part of M
    lifts: Tuple[Vector, ...]  # cycles in W⁻¹ lifting the generators of the t-part


def _middle_homology(m: HeartMorphism) -> _MiddleHomology:
    cm = chain_map(m)
    k1, k2 = cm.source.k, cm.target.k
    x1, x2 = m.source, m.target
    w_minus2 = cm.source.complex.minus_one
    w_minus1 = FgAbGroup(k1 + k2 + x2.f.rank, x2.f.torsion)

    delta1 = IntMatrix.diagonal(x1.t.torsion, rows=k1, cols=w_minus2.ngens)
    boundaries = delta1.vstack(cm.degree_minus1.matrix)

    delta2 = IntMatrix.diagonal(x2.t.torsion, rows=k2, cols=k2)
    d_zero = GroupHom(
        w_minus1,
        FgAbGroup.free(k2),
        m.b.matrix.hstack(-delta2, IntMatrix.zeros(k2, x2.f.ngens)),
    )

    cycles = hom_kernel_cokernel_image(d_zero)
    inclusion = cycles.kernel_inclusion
    boundary_coords = []
    for column in boundaries.columns():
        z = preimage(inclusion, column)
        if z is None:
            raise InvariantBreachError("Boundary of the morphism complex is not a cycle")
        boundary_coords.append(z)
    middle = quotient(cycles.kernel, IntMatrix.from_columns(boundary_coords, cycles.kernel.ngens))

    t_part, t_inclusion = torsion_part(x1.q, middle.group)
    lifts = tuple(
        inclusion(middle.section.apply(t_inclusion.column(j))) for j in range(t_part.ngens)
    )
    logger.debug(
        "middle homology computed",
        morphism=str(m),
        homology=str(middle.group),
        torsion=str(t_part),
    )
    return _MiddleHomology(m, k1, k2, w_minus1, boundaries, d_zero, t_part, lifts)


def kernel(m: HeartMorphism) -> Tuple[HeartObject, HeartMorphism]:
    """
    Kernel of a heart morphism.

    Returns:
        The kernel object (ker a, t-part of M) and its monomorphism into m.source
    """
    x1, x2 = m.source, m.target
    homology = _middle_homology(m)
    k1, k2 = homology.k1, homology.k2

    ker_a = hom_kernel_cokernel_image(m.a)
    obj = HeartObject(x1.q, ker_a.kernel, homology.torsion)

    b_columns, e_coords = [], []
    for order, w in zip(homology.torsion.torsion, homology.lifts):
        x, psi = w[:k1], w[k1 + k2 :]
        p = []
        for xi, d in zip(x, x1.t.torsion):
            if (order * xi) % d != 0:
                raise InvariantBreachError("Torsion lift does not bound in the source")
            p.append(order * xi // d)
        rhs = linear_combination(
            x2.f, [(order, psi)] + [(-pi, m.e.coords[i]) for i, pi in enumerate(p)]
        )
        phi = preimage(m.a, rhs)
        if phi is None:
            raise InvariantBreachError("Extension component of the kernel does not lift")
        b_columns.append(x)
        e_coords.append(phi)

    mono = HeartMorphism(
        obj,
        x1,
        ker_a.kernel_inclusion,
        GroupHom.from_columns(obj.t, x1.t, b_columns),
        ExtElement(obj.t, x1.f, tuple(e_coords)),
    )
    logger.debug("heart kernel computed", morphism=str(m), kernel=str(obj))
    return obj, mono


def cokernel(m: HeartMorphism) -> Tuple[HeartObject, HeartMorphism]:
    """
    Cokernel of a heart morphism.

    The degree -1 term W⁻¹ is divided by the boundaries and the lifts of the
    t-part of M; the resulting two-term complex is normalized and the
    canonical map from m.target is read off through the normalization.

    Returns:
        The cokernel object (M / t-part, coker b) and its epimorphism from m.target
    """
    x2 = m.target
    homology = _middle_homology(m)
    k1, k2 = homology.k1, homology.k2
    w_minus1 = homology.w_minus1

    relations = homology.boundaries.hstack(
        IntMatrix.from_columns(homology.lifts, w_minus1.ngens)
    )
    reduced = quotient(w_minus1, relations)
    rho = reduced.projection
    differential = GroupHom(
        reduced.group,
        FgAbGroup.free(k2),
        (-homology.d_zero.matrix) @ reduced.section,
    )
    normalization = TwoTermComplex(differential).normalize(x2.q)

    degree0 = [FgAbGroup.free(k2).generator(i) for i in range(k2)]
    degree_minus1 = [rho(w_minus1.generator(k1 + i)) for i in range(k2)]
    on_f = GroupHom.from_columns(
        x2.f,
        reduced.group,
        [rho(w_minus1.generator(k1 + k2 + g)) for g in range(x2.f.ngens)],
    )
    epi = normalization.morphism_from(x2, degree0, degree_minus1, on_f)
    logger.debug("heart cokernel computed", morphism=str(m), cokernel=str(normalization.obj))
    return normalization.obj, epi


class ImageFactorization(NamedTuple):
    """m = mono ∘ epi through the image object."""

    obj: HeartObject
    epi: HeartMorphism
    mono: HeartMorphism


def image(m: HeartMorphism) -> ImageFactorization:
    """Image of m as the kernel of its cokernel."""
    _, c = cokernel(m)
    obj, mono = kernel(c)
    epi = factor_through_mono(mono, m)
    if epi is None:
        raise InvariantBreachError("Morphism does not factor through its image")
    return ImageFactorization(obj, epi, mono)


@dataclass(frozen=True)
class ExactnessVerdict:
    """Named exactness checks, all of which must hold."""

    checks: Tuple[Tuple[str, bool], ...]

    @property
    def holds(self) -> bool:
        return all(ok for _, ok in self.checks)

    @property
    def failed(self) -> List[str]:
        return [name for name, ok in self.checks if not ok]

    def __bool__(self) -> bool:
        return self.holds


def is_ses(f: HeartMorphism, g: HeartMorphism) -> ExactnessVerdict:
    """
    Decide whether 0 -> A --f--> B --g--> C -> 0 is exact.

    Checks g∘f = 0, ker f = 0, coker g = 0 and that the comparison map
    A -> ker g is an isomorphism.
    """
    if f.target != g.source:
        raise EndpointMismatchError("Morphisms of a short exact sequence must chain")
    composite_zero = compose(g, f).is_zero()
    mono = kernel(f)[0].is_zero
    epi = cokernel(g)[0].is_zero

    comparison = False
    if composite_zero:
        _, k = kernel(g)
        u = factor_through_mono(k, f)
        if u is not None:
            comparison = kernel(u)[0].is_zero and cokernel(u)[0].is_zero

    return ExactnessVerdict(
        (
            ("composite_zero", composite_zero),
            ("mono", mono),
            ("epi", epi),
            ("image_is_kernel", comparison),
        )
    )


def four_term_exactness(m: HeartMorphism) -> ExactnessVerdict:
    """
    Check 0 -> ker m -> X1 -> X2 -> coker m -> 0 through the image factorization.
    """
    _, k = kernel(m)
    _, c = cokernel(m)
    factorization = image(m)
    left = is_ses(k, factorization.epi)
    right = is_ses(factorization.mono, c)
    return ExactnessVerdict(
        tuple((f"left.{n}", ok) for n, ok in left.checks)
        + tuple((f"right.{n}", ok) for n, ok in right.checks)
    )


def hom_exactness_probe(w: HeartObject, f: HeartMorphism, g: HeartMorphism) -> ExactnessVerdict:
    """
    Check that Hom(w, -) is left exact on 0 -> A -> B -> C.

    Verifies that Hom(w, A) -> Hom(w, B) is injective and that its image is
    the kernel of Hom(w, B) -> Hom(w, C).
    """
    if f.target != g.source:
        raise EndpointMismatchError("Morphisms of the probed sequence must chain")
    on_f = postcomposition(f, w)
    on_g = postcomposition(g, w)
    injective = hom_kernel_cokernel_image(on_f).kernel.is_trivial

    kernel_g = hom_kernel_cokernel_image(on_g)
    coords = []
    contained = True
    for column in on_f.matrix.columns():
        z = preimage(kernel_g.kernel_inclusion, on_f.target.reduce(column))
        if z is None:
            contained = False
            break
        coords.append(z)
    exact_middle = contained and quotient(
        kernel_g.kernel, IntMatrix.from_columns(coords, kernel_g.kernel.ngens)
    ).group.is_trivial

    return ExactnessVerdict((("injective", injective), ("exact_middle", exact_middle)))
