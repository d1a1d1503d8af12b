"""
Prime-set torsion pairs (X_Q, Y_Q) on finitely generated abelian groups.

X_Q holds the finite groups whose order only has prime factors in Q; Y_Q
holds the groups whose torsion part has no prime factor in Q.
"""

from dataclasses import dataclass
from math import gcd
from typing import FrozenSet, Iterable, List, NamedTuple, Optional, Sequence, Tuple

from sympy import factorint, isprime

from src.abgrp.ext import ext_group
from src.abgrp.groups import FgAbGroup, GroupHom, quotient
from src.abgrp.matrix import IntMatrix
from src.abgrp.oracles import check_enumerable, element_order, elements
from src.utils.error_handling import ClassMembershipError, FixtureParseError, InputValidationError
from src.utils.logging import get_logger

logger = get_logger(__name__)


@dataclass(frozen=True)
class PrimeSet:
    """A finite explicit set of primes."""

    primes: FrozenSet[int] = frozenset()

    def __post_init__(self):
        primes = frozenset(int(p) for p in self.primes)
        for p in primes:
            if not isprime(p):
                raise InputValidationError(f"{p} is not prime", field="q")
        object.__setattr__(self, "primes", primes)

    @classmethod
    def of(cls, *primes: int) -> "PrimeSet":
        return cls(frozenset(primes))

    @classmethod
    def parse(cls, text: str) -> "PrimeSet":
        """Parse a comma separated list such as ``"2,3"``; an empty string is the empty set."""
        cleaned = text.strip().strip("{}")
        if not cleaned:
            return cls()
        try:
            return cls(frozenset(int(part) for part in cleaned.split(",") if part.strip()))
        except ValueError as e:
            raise FixtureParseError(f"Cannot parse prime set '{text}'", field="q") from e

    def __contains__(self, p: int) -> bool:
        return p in self.primes

    def __iter__(self):
        return iter(sorted(self.primes))

    def __len__(self) -> int:
        return len(self.primes)

    def as_list(self) -> List[int]:
        return sorted(self.primes)

    def __str__(self) -> str:
        return "{" + ",".join(str(p) for p in self.as_list()) + "}"


def q_part(q: PrimeSet, n: int) -> int:
    """The largest divisor of n whose prime factors all lie in q."""
    if n <= 0:
        raise InputValidationError(f"Expected a positive integer, got {n}")
    result = 1
    for p, e in factorint(n).items():
        if p in q:
            result *= p**e
    return result


def q_prime_part(q: PrimeSet, n: int) -> int:
    return n // q_part(q, n)


def in_torsion_class(q: PrimeSet, m: FgAbGroup) -> bool:
    """m ∈ X_Q: finite with every prime factor of the order in q."""
    return m.is_finite and all(q_part(q, d) == d for d in m.torsion)


def in_torsion_free_class(q: PrimeSet, m: FgAbGroup) -> bool:
    """m ∈ Y_Q: no element of prime order p ∈ q."""
    return all(q_part(q, d) == 1 for d in m.torsion)


def require_torsion(q: PrimeSet, m: FgAbGroup, field: str = "t") -> None:
    if not in_torsion_class(q, m):
        raise ClassMembershipError(f"{m} is not in the torsion class X_{q}", field=field)


def require_torsion_free(q: PrimeSet, m: FgAbGroup, field: str = "f") -> None:
    if not in_torsion_free_class(q, m):
        raise ClassMembershipError(f"{m} is not in the torsion-free class Y_{q}", field=field)


class TorsionPart(NamedTuple):
    t: FgAbGroup
    inclusion: GroupHom


class TorsionSequence(NamedTuple):
    """The canonical sequence 0 -> t -> m -> f -> 0."""

    t: FgAbGroup
    inclusion: GroupHom
    f: FgAbGroup
    projection: GroupHom


def torsion_part(q: PrimeSet, m: FgAbGroup) -> TorsionPart:
    """
    The Q-primary part of m with its inclusion.

    The i-th torsion generator of order d_i contributes the cyclic subgroup
    generated by (d_i / c_i)·e_i where c_i is the q-part of d_i.
    """
    orders, columns = [], []
    for i, d in enumerate(m.torsion):
        c = q_part(q, d)
        if c == 1:
            continue
        column = [0] * m.ngens
        column[m.rank + i] = d // c
        orders.append(c)
        columns.append(column)
    t = FgAbGroup(0, tuple(orders))
    inclusion = GroupHom(t, m, IntMatrix.from_columns(columns, m.ngens))
    return TorsionPart(t, inclusion)


def canonical_ses(q: PrimeSet, m: FgAbGroup) -> TorsionSequence:
    """
    The torsion-pair sequence 0 -> t -> m -> f -> 0 with t ∈ X_Q, f ∈ Y_Q.
    """
    t, inclusion = torsion_part(q, m)
    f, projection, _ = quotient(m, inclusion.matrix)
    logger.debug("canonical sequence", q=str(q), m=str(m), t=str(t), f=str(f))
    return TorsionSequence(t, inclusion, f, projection)


@dataclass(frozen=True)
class SplitCertificate:
    """Evidence that Ext¹(f-part of a, t-part of b) vanishes."""

    a: FgAbGroup
    b: FgAbGroup
    f_part: FgAbGroup
    t_part: FgAbGroup
    block_gcds: Tuple[int, ...]
    ext_order: int

    @property
    def holds(self) -> bool:
        return self.ext_order == 1


@dataclass(frozen=True)
class SplitVerdict:
    split: bool
    certificates: Tuple[SplitCertificate, ...]


def is_split(q: PrimeSet, sample: Sequence[Tuple[FgAbGroup, FgAbGroup]]) -> SplitVerdict:
    """
    Check Ext¹(f-part of A, t-part of B) = 0 for each sampled pair (A, B).

    Each certificate records the gcd of every pair of cyclic blocks; they are
    all 1 because the f-part has no prime in q while the t-part only has
    primes in q.
    """
    certificates = []
    for a, b in sample:
        f_part = canonical_ses(q, a).f
        t_part = torsion_part(q, b).t
        gcds = tuple(gcd(d, c) for d in f_part.torsion for c in t_part.torsion)
        ext_order = ext_group(f_part, t_part).group.order
        certificates.append(SplitCertificate(a, b, f_part, t_part, gcds, ext_order))
    verdict = SplitVerdict(all(c.holds for c in certificates), tuple(certificates))
    logger.debug("split check", q=str(q), pairs=len(certificates), split=verdict.split)
    return verdict


@dataclass(frozen=True)
class CotiltingVerdict:
    holds: bool
    witness: str


def is_cotilting(q: PrimeSet) -> CotiltingVerdict:
    """Y_Q is cotilting iff Z ∈ Y_Q."""
    holds = in_torsion_free_class(q, FgAbGroup.free(1))
    witness = f"Z in Y_{q}" if holds else f"Z not in Y_{q}"
    return CotiltingVerdict(holds, witness)


def brute_force_torsion_order(q: PrimeSet, m: FgAbGroup, bound: Optional[int] = None) -> int:
    """
    Count the elements of m whose order only has prime factors in q.

    Only the torsion subgroup is enumerated, so m may have positive rank.
    """
    torsion = FgAbGroup(0, m.torsion)
    check_enumerable(torsion, bound)
    return sum(
        1
        for x in elements(torsion)
        if q_part(q, element_order(torsion, x)) == element_order(torsion, x)
    )


def primes_in_play(groups: Iterable[FgAbGroup]) -> PrimeSet:
    """Every prime dividing a torsion order of the given groups."""
    primes = set()
    for g in groups:
        for d in g.torsion:
            primes.update(factorint(d))
    return PrimeSet(frozenset(primes))


@dataclass(frozen=True)
class TorsionPairZ:
    """The torsion pair (X_Q, Y_Q) of a prime set."""

    q: PrimeSet

    def is_torsion(self, m: FgAbGroup) -> bool:
        return in_torsion_class(self.q, m)

    def is_torsion_free(self, m: FgAbGroup) -> bool:
        return in_torsion_free_class(self.q, m)

    def decompose(self, m: FgAbGroup) -> TorsionSequence:
        return canonical_ses(self.q, m)
