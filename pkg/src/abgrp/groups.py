"""
Finitely generated abelian groups, homomorphisms and lattice primitives.

Groups are stored in invariant-factor normal form: ``rank`` free generators
followed by torsion generators of orders d_1 | d_2 | ... | d_k. Every
construction in this module (cokernels, subgroups, quotients, direct sums)
goes through a Smith normal form and returns canonical groups together with
explicit coordinate maps.
"""

import re
from dataclasses import dataclass
from math import prod
from typing import Dict, List, NamedTuple, Optional, Sequence, Tuple

from sympy import factorint

from src.abgrp.matrix import (
    IntMatrix,
    Vector,
    integer_kernel,
    inverse_unimodular,
    smith_normal_form,
    solve_integer_system,
)
from src.utils.error_handling import (
    EndpointMismatchError,
    FixtureParseError,
    InputValidationError,
)
from src.utils.logging import get_logger

logger = get_logger(__name__)

_GROUP_TERM = re.compile(r"^(?:Z|ℤ)(?:\^(\d+)|/(\d+))?$")


@dataclass(frozen=True)
class FgAbGroup:
    """
    A finitely generated abelian group Z^rank + Z/d_1 + ... + Z/d_k.

    Two equal groups always have identical field values, so ``==`` is
    isomorphism.
    """

    rank: int = 0
    torsion: Tuple[int, ...] = ()

    def __post_init__(self):
        object.__setattr__(self, "torsion", tuple(int(d) for d in self.torsion))
        if self.rank < 0:
            raise InputValidationError(
                f"Free rank must be non-negative, got {self.rank}", field="rank"
            )
        for d in self.torsion:
            if d < 2:
                raise InputValidationError(
                    f"Invariant factors must be at least 2, got {d}", field="torsion"
                )
        for a, b in zip(self.torsion, self.torsion[1:]):
            if b % a != 0:
                raise InputValidationError(
                    f"Invariant factors {self.torsion} do not form a divisibility chain",
                    field="torsion",
                )

    @classmethod
    def free(cls, rank: int) -> "FgAbGroup":
        return cls(rank, ())

    @classmethod
    def cyclic(cls, n: int) -> "FgAbGroup":
        """Z/n, where n = 0 gives Z and n = 1 the trivial group."""
        if n == 0:
            return cls(1, ())
        if n == 1:
            return cls()
        return cls(0, (abs(n),))

    @classmethod
    def from_orders(cls, orders: Sequence[int]) -> "FgAbGroup":
        """Canonical form of a direct sum of cyclic groups (0 stands for Z)."""
        return cyclic_sum(orders).group

    @classmethod
    def from_elementary_divisors(cls, rank: int, powers: Sequence[int]) -> "FgAbGroup":
        """Rebuild a group from its primary decomposition."""
        return cls.from_orders([0] * rank + list(powers))

    @classmethod
    def parse(cls, text: str) -> "FgAbGroup":
        """
        Parse the text form ``Z^r + Z/d1 + ... + Z/dk``.

        Terms may be given in any order and need not form a divisibility
        chain; the result is re-canonicalized.

        Args:
            text: Group description such as ``"Z + Z/12"`` or ``"0"``

        Returns:
            The canonical group
        """
        cleaned = text.replace(" ", "")
        if not cleaned:
            raise FixtureParseError("Empty group description", field="group")
        orders: List[int] = []
        for term in cleaned.split("+"):
            if term == "0":
                continue
            match = _GROUP_TERM.match(term)
            if not match:
                raise FixtureParseError(
                    f"Cannot parse group term '{term}' in '{text}'", field="group"
                )
            power, modulus = match.groups()
            if power is not None:
                orders.extend([0] * int(power))
            elif modulus is not None:
                orders.append(int(modulus))
            else:
                orders.append(0)
        return cls.from_orders(orders)

    # Structure

    @property
    def ngens(self) -> int:
        return self.rank + len(self.torsion)

    @property
    def orders(self) -> Tuple[int, ...]:
        """Generator orders, 0 for the free generators."""
        return (0,) * self.rank + self.torsion

    @property
    def is_trivial(self) -> bool:
        return self.ngens == 0

    @property
    def is_finite(self) -> bool:
        return self.rank == 0

    @property
    def is_free(self) -> bool:
        return not self.torsion

    @property
    def order(self) -> Optional[int]:
        """Group order, or None for infinite groups."""
        if self.rank:
            return None
        return prod(self.torsion)

    @property
    def exponent(self) -> int:
        """Largest invariant factor, 0 when the group is infinite."""
        if self.rank:
            return 0
        return self.torsion[-1] if self.torsion else 1

    def torsion_subgroup_order(self) -> int:
        return prod(self.torsion)

    # Elements

    def reduce(self, vector: Sequence[int]) -> Vector:
        """Reduce a coordinate vector modulo the generator orders."""
        if len(vector) != self.ngens:
            raise InputValidationError(
                f"Element of length {len(vector)} in a group with {self.ngens} generators"
            )
        return tuple(x % o if o else x for x, o in zip(vector, self.orders))

    def zero(self) -> Vector:
        return (0,) * self.ngens

    def generator(self, i: int) -> Vector:
        return tuple(1 if j == i else 0 for j in range(self.ngens))

    def is_zero_element(self, vector: Sequence[int]) -> bool:
        return all(x == 0 for x in self.reduce(vector))

    def __str__(self) -> str:
        parts = []
        if self.rank == 1:
            parts.append("Z")
        elif self.rank > 1:
            parts.append(f"Z^{self.rank}")
        parts.extend(f"Z/{d}" for d in self.torsion)
        return " + ".join(parts) if parts else "0"


def primary_decomposition(g: FgAbGroup) -> Dict[int, List[int]]:
    """
    Elementary divisors of the torsion part, grouped by prime.

    Args:
        g: Any group

    Returns:
        Mapping p -> sorted list of prime powers p^e
    """
    result: Dict[int, List[int]] = {}
    for d in g.torsion:
        for p, e in factorint(d).items():
            result.setdefault(p, []).append(p**e)
    return {p: sorted(powers) for p, powers in sorted(result.items())}


def reduce_rows(matrix: IntMatrix, orders: Sequence[int]) -> IntMatrix:
    """Reduce row i of a matrix modulo orders[i] (rows with order 0 are kept)."""
    return IntMatrix(
        matrix.rows,
        matrix.cols,
        tuple(
            tuple(x % o for x in row) if o else row
            for row, o in zip(matrix.entries, orders)
        ),
    )


@dataclass(frozen=True)
class Presentation:
    """
    A presented group Z^n / (relations) in canonical form.

    ``projection`` maps Z^n onto the canonical generators and ``section``
    sends each canonical generator to a preimage in Z^n.
    """

    group: FgAbGroup
    projection: IntMatrix
    section: IntMatrix


def present(relations: IntMatrix) -> Presentation:
    """
    Canonical form of the group presented by the columns of ``relations``.

    Args:
        relations: Matrix whose columns are relations on ``relations.rows``
            generators

    Returns:
        Presentation with the canonical group and coordinate maps
    """
    n = relations.rows
    form = smith_normal_form(relations)
    diagonal = form.invariants
    orders = [diagonal[i] if i < len(diagonal) else 0 for i in range(n)]

    free_rows = [i for i, o in enumerate(orders) if o == 0]
    torsion_rows = [i for i, o in enumerate(orders) if o > 1]
    kept = free_rows + torsion_rows

    group = FgAbGroup(len(free_rows), tuple(orders[i] for i in torsion_rows))
    projection = reduce_rows(
        IntMatrix.from_rows([form.u.row(i) for i in kept], cols=n), group.orders
    )
    section = inverse_unimodular(form.u).submatrix(range(n), kept)
    return Presentation(group, projection, section)


def cokernel_group(m: IntMatrix) -> FgAbGroup:
    """
    The group presented by the columns of ``m`` as relations.

    Args:
        m: Presentation matrix with one row per generator

    Returns:
        The canonical group Z^rows / column span
    """
    group = present(m).group
    logger.debug("cokernel computed", shape=m.shape, group=str(group))
    return group


@dataclass(frozen=True)
class GroupHom:
    """
    A homomorphism between canonical groups.

    Column j of ``matrix`` is the image of source generator j, reduced
    modulo the target generator orders.
    """

    source: FgAbGroup
    target: FgAbGroup
    matrix: IntMatrix

    def __post_init__(self):
        expected = (self.target.ngens, self.source.ngens)
        if self.matrix.shape != expected:
            raise InputValidationError(
                f"Matrix shape {self.matrix.shape} does not match {expected} "
                f"for {self.source} -> {self.target}",
                field="matrix",
            )
        reduced = reduce_rows(self.matrix, self.target.orders)
        object.__setattr__(self, "matrix", reduced)

        for j, d in enumerate(self.source.orders):
            if d == 0:
                continue
            for i, o in enumerate(self.target.orders):
                x = reduced[i, j]
                if (o == 0 and x != 0) or (o and (d * x) % o != 0):
                    raise InputValidationError(
                        f"Generator {j} of order {d} cannot map to {x} in row {i} "
                        f"of {self.target}",
                        field="matrix",
                    )

    @classmethod
    def identity(cls, g: FgAbGroup) -> "GroupHom":
        return cls(g, g, IntMatrix.identity(g.ngens))

    @classmethod
    def zero(cls, source: FgAbGroup, target: FgAbGroup) -> "GroupHom":
        return cls(source, target, IntMatrix.zeros(target.ngens, source.ngens))

    @classmethod
    def scalar(cls, g: FgAbGroup, n: int) -> "GroupHom":
        """Multiplication by n on g."""
        return cls(g, g, IntMatrix.identity(g.ngens).scale(n))

    @classmethod
    def from_columns(
        cls, source: FgAbGroup, target: FgAbGroup, columns: Sequence[Sequence[int]]
    ) -> "GroupHom":
        return cls(source, target, IntMatrix.from_columns(columns, target.ngens))

    def __call__(self, vector: Sequence[int]) -> Vector:
        return self.target.reduce(self.matrix.apply(tuple(vector)))

    def __matmul__(self, other: "GroupHom") -> "GroupHom":
        """Composition ``self ∘ other``."""
        if other.target != self.source:
            raise EndpointMismatchError(
                f"Cannot compose {other.source} -> {other.target} with "
                f"{self.source} -> {self.target}"
            )
        return GroupHom(other.source, self.target, self.matrix @ other.matrix)

    def _check_parallel(self, other: "GroupHom") -> None:
        if (self.source, self.target) != (other.source, other.target):
            raise EndpointMismatchError("Homomorphisms are not parallel")

    def __add__(self, other: "GroupHom") -> "GroupHom":
        self._check_parallel(other)
        return GroupHom(self.source, self.target, self.matrix + other.matrix)

    def __neg__(self) -> "GroupHom":
        return GroupHom(self.source, self.target, -self.matrix)

    def __sub__(self, other: "GroupHom") -> "GroupHom":
        return self + (-other)

    def scale(self, n: int) -> "GroupHom":
        return GroupHom(self.source, self.target, self.matrix.scale(n))

    def is_zero(self) -> bool:
        return self.matrix.is_zero()

    def column(self, j: int) -> Vector:
        return self.matrix.column(j)

    def is_injective(self) -> bool:
        return hom_kernel_cokernel_image(self).kernel.is_trivial

    def is_surjective(self) -> bool:
        return hom_kernel_cokernel_image(self).cokernel.is_trivial

    def is_isomorphism(self) -> bool:
        return self.is_injective() and self.is_surjective()


def torsion_relations(a: FgAbGroup) -> IntMatrix:
    """Columns o_i·e_i for the torsion generators of ``a``."""
    columns = []
    for i, o in enumerate(a.orders):
        if o:
            column = [0] * a.ngens
            column[i] = o
            columns.append(column)
    return IntMatrix.from_columns(columns, a.ngens)


class Subgroup(NamedTuple):
    group: FgAbGroup
    inclusion: GroupHom
    coordinates: IntMatrix  # each given generator in the subgroup's coordinates


class Quotient(NamedTuple):
    group: FgAbGroup
    projection: GroupHom
    section: IntMatrix  # canonical generator -> representative in the parent


def subgroup(a: FgAbGroup, generators: IntMatrix) -> Subgroup:
    """
    The subgroup of ``a`` generated by the columns of ``generators``.

    Args:
        a: Ambient group
        generators: Matrix with ``a.ngens`` rows, one column per element

    Returns:
        Subgroup with its canonical form, inclusion and the coordinates of
        each generating element
    """
    s = generators.cols
    lattice = generators.hstack(torsion_relations(a))
    kernel = integer_kernel(lattice)
    relations = kernel.submatrix(range(s), range(kernel.cols))
    presentation = present(relations)
    inclusion = GroupHom(
        presentation.group, a, generators @ presentation.section
    )
    return Subgroup(presentation.group, inclusion, presentation.projection)


def quotient(a: FgAbGroup, elements: IntMatrix) -> Quotient:
    """
    The quotient of ``a`` by the subgroup generated by the columns of ``elements``.

    Returns:
        Quotient with its canonical form, projection and a set-theoretic section
    """
    presentation = present(elements.hstack(torsion_relations(a)))
    projection = GroupHom(a, presentation.group, presentation.projection)
    return Quotient(presentation.group, projection, presentation.section)


def preimage(h: GroupHom, y: Sequence[int]) -> Optional[Vector]:
    """
    Find some x with h(x) = y.

    Returns:
        A reduced preimage, or None when y is not in the image
    """
    system = h.matrix.hstack(torsion_relations(h.target))
    solution = solve_integer_system(system, tuple(y))
    if solution is None:
        return None
    return h.source.reduce(solution[: h.source.ngens])


@dataclass(frozen=True)
class KernelCokernelImage:
    """Kernel, image and cokernel of a homomorphism with structure maps."""

    kernel: FgAbGroup
    kernel_inclusion: GroupHom
    image: FgAbGroup
    image_inclusion: GroupHom
    coimage_projection: GroupHom
    cokernel: FgAbGroup
    cokernel_projection: GroupHom


def hom_kernel_cokernel_image(h: GroupHom) -> KernelCokernelImage:
    """
    Compute ker, im and coker of ``h``.

    The returned maps satisfy h = image_inclusion ∘ coimage_projection,
    h ∘ kernel_inclusion = 0 and cokernel_projection ∘ h = 0.
    """
    source, target = h.source, h.target

    lattice = h.matrix.hstack(torsion_relations(target))
    kernel_basis = integer_kernel(lattice)
    kernel_elements = kernel_basis.submatrix(range(source.ngens), range(kernel_basis.cols))
    ker = subgroup(source, kernel_elements)

    im = subgroup(target, h.matrix)
    coimage = GroupHom(source, im.group, im.coordinates)

    coker = quotient(target, h.matrix)

    logger.debug(
        "kernel/cokernel computed",
        source=str(source),
        target=str(target),
        kernel=str(ker.group),
        image=str(im.group),
        cokernel=str(coker.group),
    )
    return KernelCokernelImage(
        kernel=ker.group,
        kernel_inclusion=ker.inclusion,
        image=im.group,
        image_inclusion=im.inclusion,
        coimage_projection=coimage,
        cokernel=coker.group,
        cokernel_projection=coker.projection,
    )


@dataclass(frozen=True)
class CyclicSum:
    """
    Canonical form of Z/o_1 + ... + Z/o_N with block coordinates.

    Order 0 stands for Z and order 1 for a block that is always zero.
    """

    orders: Tuple[int, ...]
    group: FgAbGroup
    projection: IntMatrix
    section: IntMatrix

    def to_canonical(self, block_vector: Sequence[int]) -> Vector:
        return self.group.reduce(self.projection.apply(tuple(block_vector)))

    def from_canonical(self, vector: Sequence[int]) -> Vector:
        raw = self.section.apply(self.group.reduce(vector))
        return tuple(x % o if o else x for x, o in zip(raw, self.orders))


def cyclic_sum(orders: Sequence[int]) -> CyclicSum:
    orders = tuple(int(o) for o in orders)
    if any(o < 0 for o in orders):
        raise InputValidationError(f"Cyclic orders must be non-negative, got {orders}")
    n = len(orders)
    columns = []
    for i, o in enumerate(orders):
        if o:
            column = [0] * n
            column[i] = o
            columns.append(column)
    presentation = present(IntMatrix.from_columns(columns, n))
    return CyclicSum(orders, presentation.group, presentation.projection, presentation.section)


@dataclass(frozen=True)
class DirectSum:
    """A canonical direct sum with its injections and projections."""

    summands: Tuple[FgAbGroup, ...]
    group: FgAbGroup
    injections: Tuple[GroupHom, ...]
    projections: Tuple[GroupHom, ...]
    layout: CyclicSum

    def combine(self, vectors: Sequence[Sequence[int]]) -> Vector:
        """Canonical coordinates of the tuple (v_1, ..., v_k)."""
        block = tuple(x for v in vectors for x in v)
        return self.layout.to_canonical(block)

    def split(self, vector: Sequence[int]) -> List[Vector]:
        return [p(vector) for p in self.projections]


def direct_sum(groups: Sequence[FgAbGroup]) -> DirectSum:
    """
    Direct sum of canonical groups.

    Args:
        groups: Summands in order

    Returns:
        DirectSum with the canonical sum, block injections and projections
    """
    groups = tuple(groups)
    layout = cyclic_sum([o for g in groups for o in g.orders])
    total = layout.group

    injections, projections = [], []
    offset = 0
    for g in groups:
        block = range(offset, offset + g.ngens)
        injections.append(
            GroupHom(g, total, layout.projection.submatrix(range(total.ngens), block))
        )
        projections.append(
            GroupHom(total, g, layout.section.submatrix(block, range(total.ngens)))
        )
        offset += g.ngens
    return DirectSum(groups, total, tuple(injections), tuple(projections), layout)


def block_hom(
    source: DirectSum,
    target: DirectSum,
    blocks: Sequence[Sequence[Optional[GroupHom]]],
) -> GroupHom:
    """
    Assemble a map between direct sums from its components.

    ``blocks[i][j]`` is the component from source summand j to target summand
    i; None stands for zero.
    """
    total = GroupHom.zero(source.group, target.group)
    for i, row in enumerate(blocks):
        for j, component in enumerate(row):
            if component is None:
                continue
            total = total + target.injections[i] @ component @ source.projections[j]
    return total
