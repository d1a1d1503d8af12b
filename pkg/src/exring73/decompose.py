"""
Decomposition of triple modules into indecomposables.

Every module splits as S^k ⊕ fR^rank ⊕ (torsion summands), with k the
dimension of ker φ. On the torsion part with φ monic, the image of φ is
moved onto coordinate socle lines by automorphisms of L and of N: socle
line j may be added to socle line i whenever e_i >= e_j. Each hit cyclic
factor pairs with one line of L to give (F_p, Z/p^s, incl); the others give
(0, Z/p^r, 0).
"""

from collections import Counter
from dataclasses import dataclass
from typing import Dict, List, Tuple

from src.abgrp.matrix import IntMatrix
from src.exring73.homs import TripleHom, hom_triples
from src.exring73.linalg import column_span_dimension, is_invertible_mod_p, rank_mod_p
from src.exring73.modules import (
    TripleModule,
    beta_is_invertible,
    direct_sum_triples,
    f_r,
    name_of,
    paired_cyclic,
    simple_s,
    torsion_cyclic,
)
from src.utils.error_handling import InvariantBreachError
from src.utils.logging import get_logger

logger = get_logger(__name__)


@dataclass(frozen=True)
class Decomposition:
    """
    Indecomposable summands of a module.

    ``isomorphism`` goes from the direct sum of the summands, in order, to
    the decomposed module.
    """

    module: TripleModule
    summands: Tuple[TripleModule, ...]
    isomorphism: TripleHom

    @property
    def names(self) -> List[str]:
        return [name_of(s) for s in self.summands]

    def count(self, name: str) -> int:
        return self.names.count(name)

    @property
    def is_indecomposable(self) -> bool:
        return len(self.summands) == 1


def _identity(n: int) -> List[List[int]]:
    return [[int(i == j) for j in range(n)] for i in range(n)]


def decompose(m: TripleModule) -> Decomposition:
    p, l, n = m.p, m.l, m.n
    rank, exponents = n.rank, n.exponents
    phi = [list(row) for row in m.phi]
    alpha = _identity(l)  # current L -> original L
    beta = _identity(n.ngens)  # current N -> original N

    pivots: Dict[int, int] = {}  # socle row -> column of L
    for j in range(n.m):  # exponents ascend, so later rows have e_i >= e_j
        free_columns = [c for c in range(l) if c not in pivots.values()]
        pivot = next((c for c in free_columns if phi[j][c]), None)
        if pivot is None:
            continue
        pivots[j] = pivot

        inverse = pow(phi[j][pivot], -1, p)
        for row in phi:
            row[pivot] = row[pivot] * inverse % p
        for row in alpha:
            row[pivot] = row[pivot] * inverse % p

        for c in free_columns:
            if c == pivot or not phi[j][c]:
                continue
            factor = phi[j][c]
            for row in phi:
                row[c] = (row[c] - factor * row[pivot]) % p
            for row in alpha:
                row[c] = (row[c] - factor * row[pivot]) % p

        for i in range(j + 1, n.m):
            factor = phi[i][pivot]
            if not factor:
                continue
            phi[i] = [(a - factor * b) % p for a, b in zip(phi[i], phi[j])]
            # the inverse row operation lifts to g_j -> g_j + factor·p^(e_i - e_j)·g_i
            step = factor * p ** (exponents[i] - exponents[j])
            for row in beta:
                row[rank + j] += step * row[rank + i]

    kernel_columns = [c for c in range(l) if c not in pivots.values()]
    if any(phi[i][c] for c in kernel_columns for i in range(n.m)):
        raise InvariantBreachError(f"Elimination left φ nonzero off the pivots for {m}")

    summands = [simple_s(p) for _ in kernel_columns]
    summands += [f_r(p) for _ in range(rank)]
    order = list(kernel_columns)
    for j, e in enumerate(exponents):
        if j in pivots:
            summands.append(paired_cyclic(p, e))
            order.append(pivots[j])
        else:
            summands.append(torsion_cyclic(p, e))

    source = direct_sum_triples(summands, p=p)
    permutation = [[int(order[k] == c) for k in range(l)] for c in range(l)]
    alpha_total = IntMatrix.from_rows(alpha, cols=l) @ IntMatrix.from_rows(permutation, cols=l)
    isomorphism = TripleHom(source, m, alpha_total, IntMatrix.from_rows(beta, cols=n.ngens))

    result = Decomposition(m, tuple(summands), isomorphism)
    logger.debug("triple decomposed", module=str(m), summands=result.names)
    return result


def verify_reassembly(decomposition: Decomposition) -> bool:
    """
    Check the decomposition isomorphism.

    The pair (α, β) must pass the Hom solver's membership test, α must be
    invertible over F_p and β bijective.
    """
    iso = decomposition.isomorphism
    space = hom_triples(iso.source, iso.target)
    if not space.contains(iso.alpha, iso.beta):
        return False
    if iso.source.l != iso.target.l:
        return False
    if iso.source.l and not is_invertible_mod_p(iso.alpha.to_lists(), iso.source.p):
        return False
    return beta_is_invertible(iso.source.n, iso.target.n, iso.beta)


def is_projective(m: TripleModule) -> bool:
    """Whether m is a sum of copies of eR and fR."""
    return all(name in ("eR", "fR") for name in decompose(m).names)


@dataclass(frozen=True)
class ModuleInvariants:
    """
    Isomorphism invariants of a triple module.

    ``paired`` and ``unpaired`` count the summands (F_p, Z/p^s, incl) and
    (0, Z/p^r, 0) by exponent.
    """

    s_count: int
    free_rank: int
    paired: Tuple[Tuple[int, int], ...]
    unpaired: Tuple[Tuple[int, int], ...]


def invariants(m: TripleModule) -> ModuleInvariants:
    """
    Invariants computed from the socle filtration, without decomposing.

    W_k, the span of the socle lines of factors with exponent > k, is
    preserved by every automorphism of N, so dim(im φ ∩ W_k) counts the
    paired summands of exponent > k.
    """
    p, n = m.p, m.n
    image_rank = rank_mod_p(m.phi, p, m.l)
    image = [[m.phi[i][c] for i in range(n.m)] for c in range(m.l)]

    def meet(k: int) -> int:
        w = [[int(i == j) for i in range(n.m)] for j, e in enumerate(n.exponents) if e > k]
        total = column_span_dimension(image + w, p, n.m)
        return image_rank + len(w) - total

    paired, unpaired = Counter(), Counter()
    for e, count in Counter(n.exponents).items():
        hit = meet(e - 1) - meet(e)
        paired[e] += hit
        unpaired[e] += count - hit
    return ModuleInvariants(
        m.l - image_rank,
        n.rank,
        tuple(sorted((e, c) for e, c in paired.items() if c)),
        tuple(sorted((e, c) for e, c in unpaired.items() if c)),
    )


def summand_invariants(decomposition: Decomposition) -> ModuleInvariants:
    """The same invariants read off the returned summands."""
    names = decomposition.names
    paired, unpaired = Counter(), Counter()
    for s in decomposition.summands:
        name = name_of(s)
        if name in ("S", "fR"):
            continue
        (paired if s.l else unpaired)[s.n.exponents[0]] += 1
    return ModuleInvariants(
        names.count("S"),
        names.count("fR"),
        tuple(sorted(paired.items())),
        tuple(sorted(unpaired.items())),
    )


def has_nontrivial_idempotent(m: TripleModule) -> bool:
    """
    Search the Hom solver's generating set of End(m) for an idempotent other
    than 0 and the identity.
    """
    identity = TripleHom.identity(m)
    for h in hom_triples(m, m).basis:
        if h.is_zero() or h == identity:
            continue
        if h @ h == h:
            return True
    return False
