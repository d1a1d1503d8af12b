"""
Hom groups between canonical groups.

Hom(A, B) is the direct sum of the cyclic blocks Hom(A_j, B_i) over pairs of
canonical generators:

    Hom(Z, B_i)       = B_i        (generator entry 1)
    Hom(Z/a, Z)       = 0
    Hom(Z/a, Z/b)     = Z/gcd(a,b) (generator entry b/gcd(a,b))
"""

from dataclasses import dataclass, field
from math import gcd
from typing import List, Sequence, Tuple

from src.abgrp.groups import CyclicSum, FgAbGroup, GroupHom, cyclic_sum
from src.abgrp.matrix import IntMatrix, Vector
from src.utils.error_handling import EndpointMismatchError
from src.utils.logging import get_logger

logger = get_logger(__name__)


@dataclass(frozen=True)
class HomBlock:
    """The cyclic block of maps from source generator ``col`` to target generator ``row``."""

    row: int
    col: int
    order: int
    unit: int


def _hom_blocks(a: FgAbGroup, b: FgAbGroup) -> Tuple[HomBlock, ...]:
    blocks = []
    for j, m in enumerate(a.orders):
        for i, n in enumerate(b.orders):
            if m == 0:
                blocks.append(HomBlock(i, j, n, 1))
            elif n == 0:
                blocks.append(HomBlock(i, j, 1, 0))
            else:
                g = gcd(m, n)
                blocks.append(HomBlock(i, j, g, n // g))
    return tuple(blocks)


@dataclass(frozen=True)
class HomGroup:
    """
    Hom(source, target) in canonical form.

    ``basis`` holds one homomorphism per canonical generator of ``group``;
    ``coordinates`` and ``element`` translate between the two.
    """

    source: FgAbGroup
    target: FgAbGroup
    blocks: Tuple[HomBlock, ...] = field(init=False, repr=False)
    layout: CyclicSum = field(init=False, repr=False)

    def __post_init__(self):
        object.__setattr__(self, "blocks", _hom_blocks(self.source, self.target))
        object.__setattr__(self, "layout", cyclic_sum([b.order for b in self.blocks]))

    @property
    def group(self) -> FgAbGroup:
        return self.layout.group

    @property
    def basis(self) -> List[GroupHom]:
        return [self.element(self.group.generator(k)) for k in range(self.group.ngens)]

    def element(self, vector: Sequence[int]) -> GroupHom:
        """The homomorphism with the given canonical coordinates."""
        values = self.layout.from_canonical(vector)
        entries = [[0] * self.source.ngens for _ in range(self.target.ngens)]
        for block, value in zip(self.blocks, values):
            entries[block.row][block.col] = value * block.unit
        return GroupHom(self.source, self.target, IntMatrix.from_rows(entries, cols=self.source.ngens))

    def coordinates(self, h: GroupHom) -> Vector:
        """Canonical coordinates of ``h``."""
        if (h.source, h.target) != (self.source, self.target):
            raise EndpointMismatchError(
                f"Homomorphism {h.source} -> {h.target} is not in "
                f"Hom({self.source}, {self.target})"
            )
        values = []
        for block in self.blocks:
            x = h.matrix[block.row, block.col]
            values.append(x // block.unit if block.unit else 0)
        return self.layout.to_canonical(values)


def hom_group(a: FgAbGroup, b: FgAbGroup) -> HomGroup:
    """
    Compute Hom(a, b).

    Args:
        a: Source group
        b: Target group

    Returns:
        HomGroup whose ``group`` is isomorphic to Hom(a, b) and whose
        ``basis`` realizes its canonical generators
    """
    hom = HomGroup(a, b)
    logger.debug("hom group computed", source=str(a), target=str(b), group=str(hom.group))
    return hom


def postcomposition_map(h: GroupHom, a: FgAbGroup) -> GroupHom:
    """The induced map Hom(a, h.source) -> Hom(a, h.target), φ ↦ h∘φ."""
    domain = hom_group(a, h.source)
    codomain = hom_group(a, h.target)
    columns = [codomain.coordinates(h @ phi) for phi in domain.basis]
    return GroupHom.from_columns(domain.group, codomain.group, columns)


def precomposition_map(h: GroupHom, b: FgAbGroup) -> GroupHom:
    """The induced map Hom(h.target, b) -> Hom(h.source, b), φ ↦ φ∘h."""
    domain = hom_group(h.target, b)
    codomain = hom_group(h.source, b)
    columns = [codomain.coordinates(phi @ h) for phi in domain.basis]
    return GroupHom.from_columns(domain.group, codomain.group, columns)
