"""
The tilted heart of a prime-set torsion pair as a computable abelian category.
"""

from src.heart.category import (
    HeartHomSpace,
    canonical_ses,
    compose,
    ext1_space,
    ext2_space,
    factor_through_epi,
    factor_through_mono,
    hom_space,
)
from src.heart.complexes import TwoTermComplex, chain_map, normal_complex
from src.heart.exact import (
    cokernel,
    four_term_exactness,
    hom_exactness_probe,
    image,
    is_ses,
    kernel,
)
from src.heart.models import HeartMorphism, HeartObject, make_object
from src.heart.tilting import (
    embed_into_tilt,
    tilt_coresolution,
    tilting_witnesses,
    verify_tilting_object,
)

__all__ = [
    # Objects
    "HeartObject",
    "HeartMorphism",
    "make_object",
    # Spaces and composition
    "HeartHomSpace",
    "compose",
    "hom_space",
    "ext1_space",
    "ext2_space",
    "canonical_ses",
    "factor_through_mono",
    "factor_through_epi",
    # Chain level
    "TwoTermComplex",
    "chain_map",
    "normal_complex",
    # Exactness
    "kernel",
    "cokernel",
    "image",
    "is_ses",
    "four_term_exactness",
    "hom_exactness_probe",
    # Tilting
    "embed_into_tilt",
    "tilt_coresolution",
    "tilting_witnesses",
    "verify_tilting_object",
]
