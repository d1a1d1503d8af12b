"""
Modules over the triangular ring R = [[F_p, F_p], [0, Z_(p)]].

A right R-module is a triple (L, N, φ): an F_p-space L = F_p^l, a finitely
generated Z_(p)-module N = Z_(p)^rank ⊕ Z/p^e_1 ⊕ ... ⊕ Z/p^e_m and an
F_p-linear map φ: L -> Soc(N) ≅ F_p^m. The socle line of the j-th cyclic
factor is spanned by p^(e_j - 1) times its generator.

Z_(p)-modules are modelled by integer data: Z_(p)^r by Z^r and the torsion
by the same cyclic p-groups. Every map built here has integer entries, so
localizing the integer model is exact and gives the Z_(p) answer.
"""

from dataclasses import dataclass
from typing import List, Optional, Sequence, Tuple

from sympy import isprime, multiplicity

from src.abgrp.groups import FgAbGroup
from src.abgrp.matrix import IntMatrix, Vector
from src.exring73.linalg import is_invertible_mod_p
from src.utils.error_handling import InputValidationError, PrimeMismatchError

Rows = Tuple[Tuple[int, ...], ...]


def _check_prime(p: int) -> None:
    if not isprime(p):
        raise InputValidationError(f"{p} is not a prime", field="p")


@dataclass(frozen=True)
class PLocalModule:
    """Z_(p)^rank ⊕ Z/p^e_1 ⊕ ... ⊕ Z/p^e_m with e_1 <= ... <= e_m."""

    p: int
    rank: int = 0
    exponents: Tuple[int, ...] = ()

    def __post_init__(self):
        _check_prime(self.p)
        object.__setattr__(self, "exponents", tuple(int(e) for e in self.exponents))
        if self.rank < 0:
            raise InputValidationError("Free rank must be non-negative", field="rank")
        if any(e < 1 for e in self.exponents):
            raise InputValidationError(
                f"Torsion exponents must be positive, got {self.exponents}", field="exponents"
            )
        if list(self.exponents) != sorted(self.exponents):
            raise InputValidationError(
                f"Torsion exponents must be sorted, got {self.exponents}", field="exponents"
            )

    @classmethod
    def from_group(cls, p: int, g: FgAbGroup) -> "PLocalModule":
        """Read a group with p-power torsion as a Z_(p)-module."""
        exponents = []
        for d in g.torsion:
            e = multiplicity(p, d)
            if p**e != d:
                raise InputValidationError(f"{g} has torsion prime to {p}", field="torsion")
            exponents.append(e)
        return cls(p, g.rank, tuple(exponents))

    @property
    def m(self) -> int:
        """Number of cyclic factors, the dimension of the socle."""
        return len(self.exponents)

    @property
    def ngens(self) -> int:
        return self.rank + self.m

    @property
    def orders(self) -> Tuple[int, ...]:
        return (0,) * self.rank + tuple(self.p**e for e in self.exponents)

    @property
    def group(self) -> FgAbGroup:
        return FgAbGroup(self.rank, tuple(self.p**e for e in self.exponents))

    def socle_generator(self, j: int) -> Vector:
        v = [0] * self.ngens
        v[self.rank + j] = self.p ** (self.exponents[j] - 1)
        return tuple(v)

    def reduce(self, vector: Sequence[int]) -> Vector:
        return tuple(x % o if o else x for x, o in zip(vector, self.orders))

    @property
    def is_zero(self) -> bool:
        return self.ngens == 0

    def __str__(self) -> str:
        parts = [f"Z_({self.p})^{self.rank}"] if self.rank else []
        parts += [f"Z/{self.p}^{e}" for e in self.exponents]
        return " + ".join(parts) or "0"


@dataclass(frozen=True)
class TripleModule:
    """A module (F_p^l, n, φ) with φ given as an m×l matrix over F_p."""

    p: int
    l: int
    n: PLocalModule
    phi: Rows = ()

    def __post_init__(self):
        if self.n.p != self.p:
            raise PrimeMismatchError(f"Module over {self.p} with N over {self.n.p}", field="n")
        if self.l < 0:
            raise InputValidationError("dim L must be non-negative", field="l")
        phi = tuple(tuple(int(x) % self.p for x in row) for row in self.phi)
        if len(phi) != self.n.m or any(len(row) != self.l for row in phi):
            raise InputValidationError(
                f"φ must be a {self.n.m}x{self.l} matrix", field="phi"
            )
        object.__setattr__(self, "phi", phi)

    @classmethod
    def build(
        cls, p: int, l: int, rank: int = 0, exponents: Sequence[int] = (), phi: Sequence[Sequence[int]] = ()
    ) -> "TripleModule":
        n = PLocalModule(p, rank, tuple(exponents))
        if not phi:
            phi = [[0] * l for _ in range(n.m)]
        return cls(p, l, n, tuple(tuple(row) for row in phi))

    @property
    def phi_matrix(self) -> IntMatrix:
        return IntMatrix.from_rows(self.phi, cols=self.l)

    def phi_of(self, x: Sequence[int]) -> Vector:
        """φ(x) as an element of N."""
        v = [0] * self.n.ngens
        for j, row in enumerate(self.phi):
            coefficient = sum(a * b for a, b in zip(row, x)) % self.p
            v[self.n.rank + j] = coefficient * self.p ** (self.n.exponents[j] - 1)
        return self.n.reduce(v)

    @property
    def is_zero(self) -> bool:
        return self.l == 0 and self.n.is_zero

    def __str__(self) -> str:
        return f"(F_{self.p}^{self.l}, {self.n}, {[list(r) for r in self.phi]})"


def simple_s(p: int) -> TripleModule:
    """S = eR/gR = (F_p, 0, 0)."""
    return TripleModule.build(p, 1)


def e_r(p: int) -> TripleModule:
    """eR = (F_p, Z/p, id)."""
    return TripleModule.build(p, 1, 0, (1,), [[1]])


def f_r(p: int) -> TripleModule:
    """fR = (0, Z_(p), 0)."""
    return TripleModule.build(p, 0, 1)


def g_r(p: int) -> TripleModule:
    """gR = (0, Z/p, 0)."""
    return torsion_cyclic(p, 1)


def torsion_cyclic(p: int, r: int) -> TripleModule:
    return TripleModule.build(p, 0, 0, (r,))


def paired_cyclic(p: int, s: int) -> TripleModule:
    """(F_p, Z/p^s, incl): L maps onto the socle of Z/p^s."""
    return TripleModule.build(p, 1, 0, (s,), [[1]])


def direct_sum_triples(modules: Sequence[TripleModule], p: Optional[int] = None) -> TripleModule:
    """
    Direct sum of triples.

    L and the free parts are concatenated in order; the cyclic factors are
    sorted by exponent, keeping the input order among equal exponents. The
    empty sum is the zero module over ``p``.
    """
    if not modules:
        if p is None:
            raise InputValidationError("Direct sum of no modules needs an explicit prime")
        return TripleModule.build(p, 0)
    if p is None:
        p = modules[0].p
    for m in modules:
        if m.p != p:
            raise PrimeMismatchError(f"Cannot add modules over {p} and {m.p}")

    factors: List[Tuple[int, int, int]] = []  # (exponent, module index, factor index)
    for index, m in enumerate(modules):
        factors.extend((e, index, j) for j, e in enumerate(m.n.exponents))
    factors.sort(key=lambda f: f[0])

    offsets, l = [], 0
    for m in modules:
        offsets.append(l)
        l += m.l

    phi = []
    for _, index, j in factors:
        row = [0] * l
        m = modules[index]
        row[offsets[index] : offsets[index] + m.l] = m.phi[j]
        phi.append(row)
    return TripleModule.build(
        p, l, sum(m.n.rank for m in modules), [f[0] for f in factors], phi
    )


def name_of(m: TripleModule) -> str:
    """
    Name of an indecomposable of the classification, or "" for anything else.
    """
    n = m.n
    if m.l == 1 and n.is_zero:
        return "S"
    if m.l == 0 and n.rank == 1 and n.m == 0:
        return "fR"
    if n.rank == 0 and n.m == 1:
        r = n.exponents[0]
        if m.l == 0:
            return "gR" if r == 1 else f"(0,Z/p^{r},0)"
        if m.l == 1 and m.phi[0][0] % m.p:
            return "eR" if r == 1 else f"(F_p,Z/p^{r},incl)"
    return ""


def beta_is_invertible(source: PLocalModule, target: PLocalModule, beta: IntMatrix) -> bool:
    """
    Whether beta: source -> target is bijective.

    Both modules must have the same invariants; by Nakayama it then suffices
    that beta is invertible on N/pN.
    """
    if (source.rank, source.exponents) != (target.rank, target.exponents):
        return False
    return is_invertible_mod_p(beta.to_lists(), source.p)
