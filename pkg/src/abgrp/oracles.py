"""
Brute-force oracles over finite groups.

These enumerate elements directly and are used to cross-check the block
formulas in tests and in the selftest suite. The functor-law check samples
instances instead of enumerating them.
"""

from itertools import product
from math import gcd
from typing import Iterator, List, Optional

import numpy as np

from src.abgrp.ext import ext_pullback, ext_pushout
from src.abgrp.groups import FgAbGroup, GroupHom
from src.abgrp.matrix import Vector
from src.abgrp.sampling import random_ext, random_group, random_hom
from src.config import settings
from src.utils.error_handling import BoundExceededError, InfiniteGroupError


def check_enumerable(g: FgAbGroup, bound: Optional[int] = None) -> int:
    """
    Ensure g is finite and small enough to enumerate.

    Returns:
        The order of g
    """
    bound = settings.BRUTE_FORCE_ORDER_BOUND if bound is None else bound
    if not g.is_finite:
        raise InfiniteGroupError(f"Cannot enumerate the infinite group {g}", field="group")
    order = g.order
    if order > bound:
        raise BoundExceededError(
            f"Group {g} has order {order}, above the enumeration bound {bound}",
            bound=bound,
            requested=order,
        )
    return order


def elements(g: FgAbGroup) -> Iterator[Vector]:
    """All elements of a finite group in reduced coordinates."""
    if not g.is_finite:
        raise InfiniteGroupError(f"Cannot enumerate the infinite group {g}", field="group")
    return product(*(range(d) for d in g.torsion))


def element_order(g: FgAbGroup, vector: Vector) -> int:
    """Order of an element, 0 when it has infinite order."""
    reduced = g.reduce(vector)
    result = 1
    for x, o in zip(reduced, g.orders):
        if o == 0:
            if x != 0:
                return 0
            continue
        result = result * (o // gcd(o, x)) // gcd(result, o // gcd(o, x))
    return result


def brute_force_hom_count(a: FgAbGroup, b: FgAbGroup, bound: Optional[int] = None) -> int:
    """
    Count Hom(a, b) by enumerating generator images.

    A generator of order d may go to any element of b killed by d; the count
    is the product over the generators of a.

    Args:
        a: Finite source group
        b: Finite target group
        bound: Largest group order allowed (defaults to BRUTE_FORCE_ORDER_BOUND)

    Returns:
        |Hom(a, b)|
    """
    check_enumerable(a, bound)
    check_enumerable(b, bound)
    count = 1
    for d in a.torsion:
        count *= sum(
            1
            for y in elements(b)
            if all((d * x) % o == 0 for x, o in zip(y, b.torsion))
        )
    return count


def functor_law_failures(rng: np.random.Generator, samples: int) -> List[str]:
    """
    Check the Ext¹ functor laws on random instances.

    Each sample draws chains t1 -> t2 -> t3 and f1 -> f2 -> f3 of random
    homomorphisms and two classes in Ext¹(t3, f1).

    Returns:
        One message per failed law
    """
    failures = []
    for i in range(samples):
        t1, t2, t3 = (random_group(rng, 1, 12, 2) for _ in range(3))
        f1, f2, f3 = (random_group(rng, 1, 12, 2) for _ in range(3))
        e, other = random_ext(rng, t3, f1), random_ext(rng, t3, f1)
        a1, a2 = random_hom(rng, f1, f2), random_hom(rng, f2, f3)
        b1, b2 = random_hom(rng, t1, t2), random_hom(rng, t2, t3)

        laws = {
            "pushout identity": ext_pushout(e, GroupHom.identity(f1)) == e,
            "pullback identity": ext_pullback(e, GroupHom.identity(t3)) == e,
            "pushout composition": ext_pushout(ext_pushout(e, a1), a2) == ext_pushout(e, a2 @ a1),
            "pullback composition": ext_pullback(ext_pullback(e, b2), b1) == ext_pullback(e, b2 @ b1),
            "pushout additive": ext_pushout(e + other, a1) == ext_pushout(e, a1) + ext_pushout(other, a1),
            "pullback additive": ext_pullback(e + other, b2) == ext_pullback(e, b2) + ext_pullback(other, b2),
            "commutation": ext_pullback(ext_pushout(e, a1), b2) == ext_pushout(ext_pullback(e, b2), a1),
        }
        failures += [f"sample {i}: {law} fails for Ext¹({t3}, {f1})" for law, held in laws.items() if not held]
    return failures
