"""
Homomorphisms, projective presentations and Ext¹ for triple modules.

A homomorphism (L1, N1, φ1) -> (L2, N2, φ2) is a pair (α, β) with α an
F_p-linear map L1 -> L2 and β a Z_(p)-linear map N1 -> N2 such that
φ2·α = Soc(β)·φ1.

In coordinates, β is an integer matrix with rows [free | torsion] of N2 and
columns [free | torsion] of N1. Its torsion-to-free block vanishes and the
entry from Z/p^e_j to Z/p^e'_i is p^max(0, e'_i - e_j)·u_ij, whose socle
component is u_ij mod p when e'_i >= e_j and 0 otherwise.
"""

from dataclasses import dataclass, field
from typing import List, NamedTuple, Sequence, Tuple

from sympy import multiplicity

from src.abgrp.groups import (
    CyclicSum,
    FgAbGroup,
    GroupHom,
    cyclic_sum,
    hom_kernel_cokernel_image,
    preimage,
)
from src.abgrp.matrix import IntMatrix, Vector
from src.exring73.modules import PLocalModule, TripleModule
from src.utils.error_handling import (
    EndpointMismatchError,
    InputValidationError,
    InvariantBreachError,
    PrimeMismatchError,
)
from src.utils.logging import get_logger

logger = get_logger(__name__)


def localize(g: FgAbGroup, p: int) -> FgAbGroup:
    """The integer model g ⊗ Z_(p): keep the rank and the p-parts of the torsion."""
    parts = [p ** multiplicity(p, d) for d in g.torsion]
    return FgAbGroup(g.rank, tuple(d for d in parts if d > 1))


def _shift(p_target: int, p_source: int) -> int:
    return max(0, p_target - p_source)


def socle_matrix(source: PLocalModule, target: PLocalModule, beta: IntMatrix) -> List[List[int]]:
    """Soc(β) as an m2×m1 matrix over F_p."""
    p = source.p
    rows = []
    for i, e_target in enumerate(target.exponents):
        row = []
        for j, e_source in enumerate(source.exponents):
            entry = beta[target.rank + i, source.rank + j]
            if e_target < e_source:
                row.append(0)
                continue
            row.append((entry // p ** (e_target - e_source)) % p)
        rows.append(row)
    return rows


def _mat_mod_p(
    a: Sequence[Sequence[int]], b: Sequence[Sequence[int]], p: int, inner: int, cols: int
) -> List[List[int]]:
    # cols is explicit: b has no rows when inner is 0
    return [
        [sum(a[i][k] * b[k][j] for k in range(inner)) % p for j in range(cols)]
        for i in range(len(a))
    ]


def hom_defects(
    source: TripleModule, target: TripleModule, alpha: IntMatrix, beta: IntMatrix
) -> List[str]:
    """Reasons why (alpha, beta) is not a homomorphism; empty when it is."""
    p = source.p
    n1, n2 = source.n, target.n
    if alpha.shape != (target.l, source.l):
        return [f"alpha has shape {alpha.shape}, expected {(target.l, source.l)}"]
    if beta.shape != (n2.ngens, n1.ngens):
        return [f"beta has shape {beta.shape}, expected {(n2.ngens, n1.ngens)}"]

    defects = []
    for j, e_source in enumerate(n1.exponents):
        column = n1.rank + j
        if any(beta[i, column] for i in range(n2.rank)):
            defects.append(f"torsion generator {j} maps into the free part")
        for i, e_target in enumerate(n2.exponents):
            if (p**e_source * beta[n2.rank + i, column]) % p**e_target:
                defects.append(f"beta is not well defined on torsion generator {j}")

    if not defects and source.l and target.n.m:
        left = _mat_mod_p(target.phi, alpha.to_lists(), p, target.l, source.l)
        right = _mat_mod_p(socle_matrix(n1, n2, beta), source.phi, p, n1.m, source.l)
        if left != right:
            defects.append("the square φ2·α = Soc(β)·φ1 does not commute")
    return defects


@dataclass(frozen=True)
class TripleHom:
    source: TripleModule
    target: TripleModule
    alpha: IntMatrix
    beta: IntMatrix

    def __post_init__(self):
        if self.source.p != self.target.p:
            raise PrimeMismatchError("Homomorphism between modules over different primes")
        p = self.source.p
        alpha = IntMatrix.from_rows(
            [[x % p for x in row] for row in self.alpha.to_lists()], cols=self.alpha.cols
        )
        orders = self.target.n.orders
        beta = IntMatrix.from_rows(
            [[x % o if o else x for x in row] for row, o in zip(self.beta.to_lists(), orders)],
            cols=self.beta.cols,
        )
        object.__setattr__(self, "alpha", alpha)
        object.__setattr__(self, "beta", beta)
        defects = hom_defects(self.source, self.target, alpha, beta)
        if defects:
            raise InputValidationError("; ".join(defects), field="beta")

    @classmethod
    def identity(cls, m: TripleModule) -> "TripleHom":
        return cls(m, m, IntMatrix.identity(m.l), IntMatrix.identity(m.n.ngens))

    @classmethod
    def zero(cls, source: TripleModule, target: TripleModule) -> "TripleHom":
        return cls(
            source,
            target,
            IntMatrix.zeros(target.l, source.l),
            IntMatrix.zeros(target.n.ngens, source.n.ngens),
        )

    def __matmul__(self, other: "TripleHom") -> "TripleHom":
        if other.target != self.source:
            raise EndpointMismatchError("Homomorphisms do not chain")
        return TripleHom(other.source, self.target, self.alpha @ other.alpha, self.beta @ other.beta)

    def is_zero(self) -> bool:
        return self.alpha.is_zero() and self.beta.is_zero()


@dataclass(frozen=True)
class HomTriples:
    """
    Hom(source, target) as the kernel of the commuting-square constraint.

    The parameter group lists, in order, the free-to-free entries of β (Z),
    the free-to-torsion entries (Z/p^e'_i), the torsion-to-torsion
    parameters u_ij (Z/p^min(e_j, e'_i)) and the entries of α (Z/p). The
    constraint map sends a parameter vector to φ2·α - Soc(β)·φ1 in
    F_p^(m2·l1).
    """

    source: TripleModule
    target: TripleModule
    parameters: CyclicSum = field(init=False, repr=False)
    constraint: GroupHom = field(init=False, repr=False)
    group: FgAbGroup = field(init=False)
    inclusion: GroupHom = field(init=False, repr=False)

    def __post_init__(self):
        if self.source.p != self.target.p:
            raise PrimeMismatchError(
                f"Hom between modules over {self.source.p} and {self.target.p}"
            )
        p = self.source.p
        n1, n2 = self.source.n, self.target.n
        l1, l2 = self.source.l, self.target.l

        orders = [0] * (n2.rank * n1.rank)
        orders += [p**e for e in n2.exponents for _ in range(n1.rank)]
        orders += [p ** min(e_s, e_t) for e_t in n2.exponents for e_s in n1.exponents]
        orders += [p] * (l2 * l1)
        parameters = cyclic_sum(orders)

        tt_offset = n2.rank * n1.rank + n2.m * n1.rank
        alpha_offset = tt_offset + n2.m * n1.m
        rows = []
        for i in range(n2.m):
            for k in range(l1):
                row = [0] * len(orders)
                for a in range(l2):
                    row[alpha_offset + a * l1 + k] = self.target.phi[i][a]
                for j, e_source in enumerate(n1.exponents):
                    if n2.exponents[i] >= e_source:
                        row[tt_offset + i * n1.m + j] = -self.source.phi[j][k]
                rows.append(row)
        block = IntMatrix.from_rows(rows, cols=len(orders))
        constraint = GroupHom(
            parameters.group, FgAbGroup(0, (p,) * len(rows)), block @ parameters.section
        )
        kernel = hom_kernel_cokernel_image(constraint)

        object.__setattr__(self, "parameters", parameters)
        object.__setattr__(self, "constraint", constraint)
        object.__setattr__(self, "group", kernel.kernel)
        object.__setattr__(self, "inclusion", kernel.kernel_inclusion)

    def _decode(self, block: Sequence[int]) -> Tuple[IntMatrix, IntMatrix]:
        p = self.source.p
        n1, n2 = self.source.n, self.target.n
        beta = [[0] * n1.ngens for _ in range(n2.ngens)]
        position = 0
        for i in range(n2.rank):
            for j in range(n1.rank):
                beta[i][j] = block[position]
                position += 1
        for i in range(n2.m):
            for j in range(n1.rank):
                beta[n2.rank + i][j] = block[position]
                position += 1
        for i, e_target in enumerate(n2.exponents):
            for j, e_source in enumerate(n1.exponents):
                beta[n2.rank + i][n1.rank + j] = p ** _shift(e_target, e_source) * block[position]
                position += 1
        alpha = [[0] * self.source.l for _ in range(self.target.l)]
        for a in range(self.target.l):
            for k in range(self.source.l):
                alpha[a][k] = block[position]
                position += 1
        return (
            IntMatrix.from_rows(alpha, cols=self.source.l),
            IntMatrix.from_rows(beta, cols=n1.ngens),
        )

    def _encode(self, alpha: IntMatrix, beta: IntMatrix) -> Vector:
        p = self.source.p
        n1, n2 = self.source.n, self.target.n
        block = [beta[i, j] for i in range(n2.rank) for j in range(n1.rank)]
        block += [beta[n2.rank + i, j] for i in range(n2.m) for j in range(n1.rank)]
        for i, e_target in enumerate(n2.exponents):
            for j, e_source in enumerate(n1.exponents):
                entry = beta[n2.rank + i, n1.rank + j]
                step = p ** _shift(e_target, e_source)
                if entry % step:
                    raise InputValidationError("beta is not well defined", field="beta")
                block.append(entry // step)
        block += [alpha[a, k] for a in range(self.target.l) for k in range(self.source.l)]
        return self.parameters.to_canonical(block)

    def element(self, vector: Sequence[int]) -> TripleHom:
        block = self.parameters.from_canonical(self.inclusion(vector))
        alpha, beta = self._decode(block)
        return TripleHom(self.source, self.target, alpha, beta)

    @property
    def basis(self) -> List[TripleHom]:
        return [self.element(self.group.generator(k)) for k in range(self.group.ngens)]

    def contains(self, alpha: IntMatrix, beta: IntMatrix) -> bool:
        """Membership test: (alpha, beta) lies in the kernel of the constraint."""
        if alpha.shape != (self.target.l, self.source.l):
            return False
        if beta.shape != (self.target.n.ngens, self.source.n.ngens):
            return False
        if hom_defects(self.source, self.target, alpha, beta):
            return False
        return self.constraint(self._encode(alpha, beta)) == self.constraint.target.zero()

    def coordinates(self, h: TripleHom) -> Vector:
        if (h.source, h.target) != (self.source, self.target):
            raise EndpointMismatchError("Homomorphism does not belong to this Hom group")
        solution = preimage(self.inclusion, self._encode(h.alpha, h.beta))
        if solution is None:
            raise InvariantBreachError("Homomorphism parameters violate the square")
        return solution

    @property
    def is_zero(self) -> bool:
        return self.group.is_trivial


def hom_triples(m1: TripleModule, m2: TripleModule) -> HomTriples:
    space = HomTriples(m1, m2)
    logger.debug("triple hom computed", source=str(m1), target=str(m2), group=str(space.group))
    return space


class ProjectiveCover(NamedTuple):
    """P0 = eR^l ⊕ fR^n with its surjection onto the module."""

    module: TripleModule
    cover: TripleModule
    projection: TripleHom


def projective_cover(m: TripleModule) -> ProjectiveCover:
    """
    A projective module mapping onto m.

    One eR for every basis vector of L and one fR for every generator of N.
    The cover's N is Z_(p)^n ⊕ (Z/p)^l with the eR socles last.
    """
    p, l, n = m.p, m.l, m.n.ngens
    cover = TripleModule.build(p, l, n, (1,) * l, [[int(i == j) for j in range(l)] for i in range(l)])
    columns = [m.n.reduce(tuple(int(i == g) for i in range(n))) for g in range(n)]
    columns += [m.phi_of(tuple(int(i == k) for i in range(l))) for k in range(l)]
    beta = IntMatrix.from_columns(columns, n)
    projection = TripleHom(cover, m, IntMatrix.identity(l), beta)
    return ProjectiveCover(m, cover, projection)


class Syzygy(NamedTuple):
    """Ω = ker(P0 -> m) with its inclusion into P0."""

    cover: ProjectiveCover
    module: TripleModule
    inclusion: TripleHom


def syzygy(m: TripleModule) -> Syzygy:
    """
    The first syzygy of m.

    The L-part of the cover maps isomorphically onto L, so the kernel is
    (0, K, 0) with K the kernel of β.
    """
    cover = projective_cover(m)
    beta = GroupHom(cover.cover.n.group, m.n.group, cover.projection.beta)
    kernel = hom_kernel_cokernel_image(beta)
    k = PLocalModule.from_group(m.p, kernel.kernel)
    omega = TripleModule.build(m.p, 0, k.rank, k.exponents)
    inclusion = TripleHom(
        omega, cover.cover, IntMatrix.zeros(cover.cover.l, 0), kernel.kernel_inclusion.matrix
    )
    return Syzygy(cover, omega, inclusion)


@dataclass(frozen=True)
class Ext1Triples:
    """Ext¹(source, target) = coker(Hom(P0, target) -> Hom(Ω, target))."""

    source: TripleModule
    target: TripleModule
    syzygy: Syzygy
    restriction: GroupHom
    group: FgAbGroup

    @property
    def is_zero(self) -> bool:
        return self.group.is_trivial


def ext1_triples(m1: TripleModule, m2: TripleModule) -> Ext1Triples:
    """
    Ext¹(m1, m2) through the first syzygy of m1.

    Restricting along Ω -> P0 and dividing by the image gives the homology
    of Hom(P•, m2) at P1 without needing P1 -> P0 to be injective.
    """
    if m1.p != m2.p:
        raise PrimeMismatchError(f"Ext between modules over {m1.p} and {m2.p}")
    omega = syzygy(m1)
    on_cover = hom_triples(omega.cover.cover, m2)
    on_syzygy = hom_triples(omega.module, m2)
    columns = [on_syzygy.coordinates(h @ omega.inclusion) for h in on_cover.basis]
    restriction = GroupHom.from_columns(on_cover.group, on_syzygy.group, columns)
    cokernel = hom_kernel_cokernel_image(restriction).cokernel
    group = localize(cokernel, m1.p)
    logger.debug("triple ext computed", source=str(m1), target=str(m2), group=str(group))
    return Ext1Triples(m1, m2, omega, restriction, group)
