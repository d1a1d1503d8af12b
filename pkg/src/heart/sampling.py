"""
Seeded random heart objects and morphisms.
"""

import numpy as np

from src.abgrp.sampling import random_element, random_group
from src.heart.category import hom_space
from src.heart.models import HeartMorphism, HeartObject
from src.torsion.pairs import PrimeSet, canonical_ses, torsion_part


def random_object(
    rng: np.random.Generator, q: PrimeSet, max_rank: int = 2, max_factor: int = 100
) -> HeartObject:
    """(f, t) with f the torsion-free part and t the torsion part of random groups."""
    f = canonical_ses(q, random_group(rng, max_rank=max_rank, max_factor=max_factor)).f
    t = torsion_part(q, random_group(rng, max_rank=0, max_factor=max_factor)).t
    return HeartObject(q, f, t)


def random_morphism(
    rng: np.random.Generator, x: HeartObject, y: HeartObject, spread: int = 5
) -> HeartMorphism:
    space = hom_space(x, y)
    return space.element(random_element(rng, space.group, spread))
