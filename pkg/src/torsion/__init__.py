"""
Prime-set torsion pairs on finitely generated abelian groups.
"""

from src.torsion.pairs import (
    PrimeSet,
    TorsionPairZ,
    TorsionSequence,
    brute_force_torsion_order,
    canonical_ses,
    in_torsion_class,
    in_torsion_free_class,
    is_cotilting,
    is_split,
    q_part,
    q_prime_part,
    torsion_part,
)

__all__ = [
    "PrimeSet",
    "TorsionPairZ",
    "TorsionSequence",
    "brute_force_torsion_order",
    "canonical_ses",
    "in_torsion_class",
    "in_torsion_free_class",
    "is_cotilting",
    "is_split",
    "q_part",
    "q_prime_part",
    "torsion_part",
]
