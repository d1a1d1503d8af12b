"""
Linear algebra over the prime field F_p.

Matrices are plain row lists of integers; sympy's DomainMatrix over GF(p)
does the elimination. GF(p) elements use the symmetric representation, so
entries are read back with ``int(x) % p``.
"""

from typing import List, Sequence

from sympy.polys.domains import GF
from sympy.polys.matrices import DomainMatrix

Rows = Sequence[Sequence[int]]


def fp_matrix(rows: Rows, p: int, cols: int) -> DomainMatrix:
    field = GF(p)
    return DomainMatrix(
        [[field(int(x) % p) for x in row] for row in rows], (len(rows), cols), field
    )


def rank_mod_p(rows: Rows, p: int, cols: int) -> int:
    if not rows or cols == 0:
        return 0
    return fp_matrix(rows, p, cols).rank()


def is_invertible_mod_p(rows: Rows, p: int) -> bool:
    n = len(rows)
    if any(len(row) != n for row in rows):
        return False
    return rank_mod_p(rows, p, n) == n


def nullspace_mod_p(rows: Rows, p: int, cols: int) -> List[List[int]]:
    """A basis of {x : rows·x = 0} as a list of vectors with entries in [0, p)."""
    if cols == 0:
        return []
    if not rows:
        return [[1 if i == j else 0 for i in range(cols)] for j in range(cols)]
    basis = fp_matrix(rows, p, cols).nullspace()
    return [[int(x) % p for x in row] for row in basis.to_list()]


def column_span_dimension(columns: Sequence[Sequence[int]], p: int, length: int) -> int:
    """Dimension of the span of the given vectors of F_p^length."""
    if not columns or length == 0:
        return 0
    rows = [[c[i] for c in columns] for i in range(length)]
    return rank_mod_p(rows, p, len(columns))
