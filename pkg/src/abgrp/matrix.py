"""
Integer matrices and the Smith normal form.

IntMatrix is an immutable row-major matrix of arbitrary precision integers.
The heavy lifting (products, Smith decomposition, inverses) is delegated to
sympy's DomainMatrix over ZZ; this module only adapts shapes, guards empty
matrices and checks the decomposition contract.
"""

from dataclasses import dataclass
from functools import cached_property, lru_cache
from typing import Iterable, List, NamedTuple, Optional, Sequence, Tuple

from sympy.polys.domains import QQ, ZZ
from sympy.polys.matrices import DomainMatrix
from sympy.polys.matrices.normalforms import smith_normal_decomp

from src.utils.error_handling import InputValidationError, InvariantBreachError
from src.utils.logging import get_logger

logger = get_logger(__name__)

Vector = Tuple[int, ...]


@dataclass(frozen=True)
class IntMatrix:
    """
    An integer matrix with explicit shape.

    The shape is stored separately so that matrices with zero rows or zero
    columns keep their dimensions.
    """

    rows: int
    cols: int
    entries: Tuple[Tuple[int, ...], ...]

    def __post_init__(self):
        if self.rows < 0 or self.cols < 0:
            raise InputValidationError(
                f"Matrix shape must be non-negative, got {self.rows}x{self.cols}",
                field="shape",
            )
        if len(self.entries) != self.rows or any(
            len(row) != self.cols for row in self.entries
        ):
            raise InputValidationError(
                f"Entry count does not match shape {self.rows}x{self.cols}",
                field="entries",
            )
        object.__setattr__(
            self, "entries", tuple(tuple(int(x) for x in row) for row in self.entries)
        )

    # Constructors

    @classmethod
    def from_rows(
        cls, rows: Sequence[Sequence[int]], cols: Optional[int] = None
    ) -> "IntMatrix":
        """
        Build a matrix from a list of rows.

        Args:
            rows: Row-major entries
            cols: Column count, required when there are no rows

        Returns:
            The matrix
        """
        rows = [tuple(r) for r in rows]
        if cols is None:
            if not rows:
                raise InputValidationError(
                    "Column count is required for a matrix without rows", field="cols"
                )
            cols = len(rows[0])
        return cls(len(rows), cols, tuple(rows))

    @classmethod
    def from_columns(cls, columns: Sequence[Sequence[int]], rows: int) -> "IntMatrix":
        """Build a matrix from a list of column vectors of length ``rows``."""
        columns = [tuple(c) for c in columns]
        for c in columns:
            if len(c) != rows:
                raise InputValidationError(
                    f"Column of length {len(c)} in a matrix with {rows} rows",
                    field="columns",
                )
        entries = tuple(tuple(c[i] for c in columns) for i in range(rows))
        return cls(rows, len(columns), entries)

    @classmethod
    def zeros(cls, rows: int, cols: int) -> "IntMatrix":
        return cls(rows, cols, tuple((0,) * cols for _ in range(rows)))

    @classmethod
    def identity(cls, n: int) -> "IntMatrix":
        return cls(
            n, n, tuple(tuple(1 if i == j else 0 for j in range(n)) for i in range(n))
        )

    @classmethod
    def diagonal(
        cls, values: Sequence[int], rows: Optional[int] = None, cols: Optional[int] = None
    ) -> "IntMatrix":
        """Rectangular diagonal matrix; missing shape defaults to square."""
        rows = len(values) if rows is None else rows
        cols = len(values) if cols is None else cols
        entries = [[0] * cols for _ in range(rows)]
        for i, value in enumerate(values):
            entries[i][i] = value
        return cls(rows, cols, tuple(tuple(r) for r in entries))

    @classmethod
    def from_domain_matrix(cls, dm: DomainMatrix) -> "IntMatrix":
        rows, cols = dm.shape
        return cls(rows, cols, tuple(tuple(int(x) for x in r) for r in dm.to_list()))

    # Conversions

    @cached_property
    def domain_matrix(self) -> DomainMatrix:
        """The matrix as a dense sympy DomainMatrix over ZZ."""
        return DomainMatrix(
            [[ZZ(x) for x in row] for row in self.entries], (self.rows, self.cols), ZZ
        )

    def to_lists(self) -> List[List[int]]:
        return [list(row) for row in self.entries]

    # Access

    @property
    def shape(self) -> Tuple[int, int]:
        return (self.rows, self.cols)

    def column(self, j: int) -> Vector:
        return tuple(row[j] for row in self.entries)

    def columns(self) -> List[Vector]:
        return [self.column(j) for j in range(self.cols)]

    def row(self, i: int) -> Vector:
        return self.entries[i]

    def __getitem__(self, index: Tuple[int, int]) -> int:
        i, j = index
        return self.entries[i][j]

    def is_zero(self) -> bool:
        return all(x == 0 for row in self.entries for x in row)

    def is_diagonal(self) -> bool:
        return all(
            x == 0
            for i, row in enumerate(self.entries)
            for j, x in enumerate(row)
            if i != j
        )

    def diagonal_entries(self) -> Vector:
        return tuple(self.entries[i][i] for i in range(min(self.rows, self.cols)))

    # Arithmetic

    def __matmul__(self, other: "IntMatrix") -> "IntMatrix":
        if self.cols != other.rows:
            raise InputValidationError(
                f"Cannot multiply {self.rows}x{self.cols} by {other.rows}x{other.cols}",
                field="shape",
            )
        if 0 in (self.rows, self.cols, other.cols):
            return IntMatrix.zeros(self.rows, other.cols)
        return IntMatrix.from_domain_matrix(self.domain_matrix * other.domain_matrix)

    def __add__(self, other: "IntMatrix") -> "IntMatrix":
        if self.shape != other.shape:
            raise InputValidationError("Cannot add matrices of different shapes")
        return IntMatrix(
            self.rows,
            self.cols,
            tuple(
                tuple(a + b for a, b in zip(r1, r2))
                for r1, r2 in zip(self.entries, other.entries)
            ),
        )

    def __neg__(self) -> "IntMatrix":
        return self.scale(-1)

    def __sub__(self, other: "IntMatrix") -> "IntMatrix":
        return self + (-other)

    def scale(self, n: int) -> "IntMatrix":
        return IntMatrix(
            self.rows, self.cols, tuple(tuple(n * x for x in row) for row in self.entries)
        )

    def apply(self, vector: Sequence[int]) -> Vector:
        """Multiply by a column vector."""
        if len(vector) != self.cols:
            raise InputValidationError(
                f"Vector of length {len(vector)} for a matrix with {self.cols} columns"
            )
        return tuple(sum(a * b for a, b in zip(row, vector)) for row in self.entries)

    def transpose(self) -> "IntMatrix":
        return IntMatrix(
            self.cols,
            self.rows,
            tuple(tuple(self.entries[i][j] for i in range(self.rows)) for j in range(self.cols)),
        )

    def hstack(self, *others: "IntMatrix") -> "IntMatrix":
        """Concatenate column blocks sharing the row count."""
        blocks = (self,) + others
        for b in blocks:
            if b.rows != self.rows:
                raise InputValidationError("hstack needs equal row counts")
        cols = sum(b.cols for b in blocks)
        entries = tuple(
            tuple(x for b in blocks for x in b.entries[i]) for i in range(self.rows)
        )
        return IntMatrix(self.rows, cols, entries)

    def vstack(self, *others: "IntMatrix") -> "IntMatrix":
        """Concatenate row blocks sharing the column count."""
        blocks = (self,) + others
        for b in blocks:
            if b.cols != self.cols:
                raise InputValidationError("vstack needs equal column counts")
        entries = tuple(row for b in blocks for row in b.entries)
        return IntMatrix(len(entries), self.cols, entries)

    def submatrix(self, rows: Iterable[int], cols: Iterable[int]) -> "IntMatrix":
        rows, cols = list(rows), list(cols)
        return IntMatrix(
            len(rows),
            len(cols),
            tuple(tuple(self.entries[i][j] for j in cols) for i in rows),
        )

    def determinant(self) -> int:
        if self.rows != self.cols:
            raise InputValidationError("Determinant of a non-square matrix")
        if self.rows == 0:
            return 1
        return int(self.domain_matrix.det())

    def __str__(self) -> str:
        return "[" + ", ".join("[" + ", ".join(map(str, r)) + "]" for r in self.entries) + "]"


class SmithForm(NamedTuple):
    """Result of smith_normal_form: u·m·v = d."""

    d: IntMatrix
    u: IntMatrix
    v: IntMatrix

    @property
    def invariants(self) -> Vector:
        return self.d.diagonal_entries()

    @property
    def rank(self) -> int:
        return sum(1 for x in self.invariants if x != 0)


def _check_smith_contract(m: IntMatrix, form: SmithForm) -> None:
    d, u, v = form
    if u @ m @ v != d:
        raise InvariantBreachError(f"Smith decomposition does not reproduce {m}")
    if not d.is_diagonal():
        raise InvariantBreachError(f"Smith form of {m} is not diagonal")
    diag = d.diagonal_entries()
    if any(x < 0 for x in diag):
        raise InvariantBreachError(f"Smith form of {m} has a negative entry")
    for a, b in zip(diag, diag[1:]):
        if (a == 0 and b != 0) or (a != 0 and b % a != 0):
            raise InvariantBreachError(f"Smith form of {m} breaks the divisibility chain")
    if abs(u.determinant()) != 1 or abs(v.determinant()) != 1:
        raise InvariantBreachError(f"Smith transforms of {m} are not unimodular")


@lru_cache(maxsize=8192)
def smith_normal_form(m: IntMatrix) -> SmithForm:
    """
    Compute the Smith normal form with unimodular transforms.

    Args:
        m: Any integer matrix

    Returns:
        SmithForm (d, u, v) with u·m·v = d, d diagonal, non-negative, and
        each diagonal entry dividing the next
    """
    if m.rows == 0 or m.cols == 0:
        return SmithForm(
            IntMatrix.zeros(m.rows, m.cols),
            IntMatrix.identity(m.rows),
            IntMatrix.identity(m.cols),
        )

    smf, s, t = smith_normal_decomp(m.domain_matrix)
    form = SmithForm(
        IntMatrix.from_domain_matrix(smf),
        IntMatrix.from_domain_matrix(s),
        IntMatrix.from_domain_matrix(t),
    )
    _check_smith_contract(m, form)
    logger.debug("smith form computed", shape=m.shape, invariants=form.invariants)
    return form


def inverse_unimodular(u: IntMatrix) -> IntMatrix:
    """Inverse of a unimodular matrix, computed over QQ and checked integral."""
    if u.rows != u.cols:
        raise InputValidationError("Only square matrices can be inverted")
    if u.rows == 0:
        return u
    inverse = u.domain_matrix.convert_to(QQ).inv()
    rows = []
    for row in inverse.to_list():
        converted = []
        for x in row:
            if QQ.denom(x) != 1:
                raise InvariantBreachError(f"Matrix {u} is not unimodular")
            converted.append(int(QQ.numer(x)))
        rows.append(tuple(converted))
    return IntMatrix(u.rows, u.cols, tuple(rows))


def integer_kernel(m: IntMatrix) -> IntMatrix:
    """
    Basis of the integer null space {x in Z^cols : m·x = 0}.

    Returns:
        Matrix whose columns form a Z-basis of the kernel lattice
    """
    form = smith_normal_form(m)
    basis = [form.v.column(j) for j in range(form.rank, m.cols)]
    return IntMatrix.from_columns(basis, m.cols)


def solve_integer_system(m: IntMatrix, b: Sequence[int]) -> Optional[Vector]:
    """
    Find an integer solution of m·x = b.

    Args:
        m: Coefficient matrix
        b: Right-hand side of length m.rows

    Returns:
        One solution, or None when the system has no integer solution
    """
    if len(b) != m.rows:
        raise InputValidationError(
            f"Right-hand side of length {len(b)} for {m.rows} equations"
        )
    form = smith_normal_form(m)
    transformed = form.u.apply(tuple(b))
    diag = form.invariants
    w = [0] * m.cols
    for i, value in enumerate(transformed):
        pivot = diag[i] if i < len(diag) else 0
        if pivot == 0:
            if value != 0:
                return None
        else:
            if value % pivot != 0:
                return None
            w[i] = value // pivot
    return form.v.apply(tuple(w))
