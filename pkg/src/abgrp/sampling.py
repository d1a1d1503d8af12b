"""
Seeded random generation of groups, homomorphisms and extension classes.
"""

from typing import Optional

import numpy as np

from src.abgrp.ext import ExtElement, ext_group
from src.abgrp.groups import FgAbGroup, GroupHom
from src.abgrp.hom import hom_group


def random_group(
    rng: np.random.Generator,
    max_rank: int = 2,
    max_factor: int = 100,
    max_factors: int = 3,
) -> FgAbGroup:
    """A group Z^r + Z/n_1 + ... with r <= max_rank and each n_i <= max_factor."""
    rank = int(rng.integers(0, max_rank + 1))
    count = int(rng.integers(0, max_factors + 1))
    factors = [int(x) for x in rng.integers(1, max_factor + 1, size=count)]
    return FgAbGroup.from_orders([0] * rank + factors)


def random_element(rng: np.random.Generator, g: FgAbGroup, spread: int = 5) -> tuple:
    return tuple(
        int(rng.integers(0, o)) if o else int(rng.integers(-spread, spread + 1))
        for o in g.orders
    )


def random_hom(
    rng: np.random.Generator, a: FgAbGroup, b: FgAbGroup, spread: int = 5
) -> GroupHom:
    hom = hom_group(a, b)
    return hom.element(random_element(rng, hom.group, spread))


def random_ext(
    rng: np.random.Generator, t: FgAbGroup, f: FgAbGroup, spread: Optional[int] = None
) -> ExtElement:
    ext = ext_group(t, f)
    return ext.element(random_element(rng, ext.group, spread or 5))
