"""
Finite Hom-quiver descriptions of module categories.

A Hom-quiver lists the indecomposables of a category together with their
projective and injective dimensions and records which Hom and Ext¹ spaces
between them are nonzero.
"""

from dataclasses import dataclass
from typing import FrozenSet, Iterable, List, Optional, Tuple

import numpy as np

from src.utils.error_handling import InputValidationError

DIMENSIONS = (0, 1, 2)

BoolRows = Tuple[Tuple[bool, ...], ...]


@dataclass(frozen=True)
class Vertex:
    name: str
    pd: int
    injdim: int
    r_summand: bool = False

    def __post_init__(self):
        if not self.name:
            raise InputValidationError("Vertex names must be non-empty", field="name")
        if self.pd not in DIMENSIONS:
            raise InputValidationError(f"pd of {self.name} must be 0, 1 or 2", field="pd")
        if self.injdim not in DIMENSIONS:
            raise InputValidationError(f"injdim of {self.name} must be 0, 1 or 2", field="injdim")
        if self.r_summand and self.pd != 0:
            raise InputValidationError(
                f"Summand {self.name} of the ring must be projective", field="r_summand"
            )


def _square(rows: BoolRows, n: int, label: str) -> BoolRows:
    rows = tuple(tuple(bool(x) for x in row) for row in rows)
    if len(rows) != n or any(len(row) != n for row in rows):
        raise InputValidationError(f"{label} must be a {n}x{n} boolean matrix", field=label)
    return rows


@dataclass(frozen=True)
class HomQuiver:
    """
    Indecomposables with pd/injdim and the nonzero Hom and Ext¹ relations.

    ``hom_nonzero[i][j]`` says Hom(v_i, v_j) ≠ 0 and must hold on the
    diagonal; ``ext1_nonzero[i][j]`` says Ext¹(v_i, v_j) ≠ 0.
    """

    vertices: Tuple[Vertex, ...]
    hom_nonzero: BoolRows
    ext1_nonzero: BoolRows
    bound: Optional[int] = None
    description: str = ""

    def __post_init__(self):
        object.__setattr__(self, "vertices", tuple(self.vertices))
        names = [v.name for v in self.vertices]
        if len(set(names)) != len(names):
            raise InputValidationError("Vertex names must be unique", field="vertices")
        if not any(v.r_summand for v in self.vertices):
            raise InputValidationError("At least one vertex must be a summand of the ring", field="vertices")
        n = len(self.vertices)
        object.__setattr__(self, "hom_nonzero", _square(self.hom_nonzero, n, "hom_nonzero"))
        object.__setattr__(self, "ext1_nonzero", _square(self.ext1_nonzero, n, "ext1_nonzero"))
        for i, v in enumerate(self.vertices):
            if not self.hom_nonzero[i][i]:
                raise InputValidationError(
                    f"Hom({v.name}, {v.name}) must be nonzero", field="hom_nonzero"
                )

    @property
    def names(self) -> List[str]:
        return [v.name for v in self.vertices]

    def index(self, name: str) -> int:
        return self.names.index(name)

    def vertex(self, name: str) -> Vertex:
        return self.vertices[self.index(name)]

    def hom(self, source: str, target: str) -> bool:
        return self.hom_nonzero[self.index(source)][self.index(target)]

    def ext1(self, source: str, target: str) -> bool:
        return self.ext1_nonzero[self.index(source)][self.index(target)]

    @property
    def hom_array(self) -> np.ndarray:
        return np.array(self.hom_nonzero, dtype=bool).reshape(len(self.vertices), len(self.vertices))

    @property
    def ext1_array(self) -> np.ndarray:
        return np.array(self.ext1_nonzero, dtype=bool).reshape(len(self.vertices), len(self.vertices))

    @property
    def r_summands(self) -> FrozenSet[str]:
        return frozenset(v.name for v in self.vertices if v.r_summand)

    def ordered(self, names: Iterable[str]) -> List[str]:
        """The given names in vertex order."""
        wanted = set(names)
        return [n for n in self.names if n in wanted]

    def with_edge(self, source: str, target: str) -> "HomQuiver":
        """A copy with Hom(source, target) marked nonzero."""
        rows = [list(row) for row in self.hom_nonzero]
        rows[self.index(source)][self.index(target)] = True
        return HomQuiver(
            self.vertices,
            tuple(tuple(r) for r in rows),
            self.ext1_nonzero,
            self.bound,
            self.description,
        )


@dataclass(frozen=True)
class TorsionPairOnQuiver:
    """A bipartition (X, Y) of the vertices of a quiver."""

    x_set: FrozenSet[str]
    y_set: FrozenSet[str]

    def __post_init__(self):
        object.__setattr__(self, "x_set", frozenset(self.x_set))
        object.__setattr__(self, "y_set", frozenset(self.y_set))
        if self.x_set & self.y_set:
            raise InputValidationError(
                f"Classes overlap in {sorted(self.x_set & self.y_set)}", field="x_set"
            )

    @classmethod
    def from_x(cls, q: HomQuiver, x_set: Iterable[str]) -> "TorsionPairOnQuiver":
        x = frozenset(x_set)
        unknown = x - set(q.names)
        if unknown:
            raise InputValidationError(f"Unknown vertices {sorted(unknown)}", field="x_set")
        return cls(x, frozenset(q.names) - x)

    def covers(self, q: HomQuiver) -> bool:
        return self.x_set | self.y_set == set(q.names)

    def orthogonality_failures(self, q: HomQuiver) -> List[str]:
        return [
            f"Hom({x}, {y}) ≠ 0"
            for x in q.ordered(self.x_set)
            for y in q.ordered(self.y_set)
            if q.hom(x, y)
        ]

    def describe(self, q: HomQuiver) -> Tuple[List[str], List[str]]:
        return q.ordered(self.x_set), q.ordered(self.y_set)
