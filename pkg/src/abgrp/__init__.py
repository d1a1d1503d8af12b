"""
Exact arithmetic of finitely generated abelian groups.
"""

from src.abgrp.ext import (
    HEREDITARY_GLOBAL_DIMENSION,
    ExtElement,
    ExtGroup,
    Extension,
    ext_group,
    ext_pullback,
    ext_pushout,
    extension_class,
    higher_ext_group,
    realize_extension,
)
from src.abgrp.groups import (
    FgAbGroup,
    GroupHom,
    KernelCokernelImage,
    cokernel_group,
    direct_sum,
    hom_kernel_cokernel_image,
    preimage,
    primary_decomposition,
    quotient,
    subgroup,
)
from src.abgrp.hom import HomGroup, hom_group
from src.abgrp.matrix import (
    IntMatrix,
    SmithForm,
    integer_kernel,
    smith_normal_form,
    solve_integer_system,
)
from src.abgrp.oracles import brute_force_hom_count, functor_law_failures

__all__ = [
    # Matrices
    "IntMatrix",
    "SmithForm",
    "smith_normal_form",
    "integer_kernel",
    "solve_integer_system",
    # Groups
    "FgAbGroup",
    "GroupHom",
    "KernelCokernelImage",
    "cokernel_group",
    "direct_sum",
    "hom_kernel_cokernel_image",
    "preimage",
    "primary_decomposition",
    "quotient",
    "subgroup",
    # Hom and Ext
    "HomGroup",
    "hom_group",
    "ExtElement",
    "ExtGroup",
    "Extension",
    "ext_group",
    "ext_pullback",
    "ext_pushout",
    "extension_class",
    "higher_ext_group",
    "realize_extension",
    "HEREDITARY_GLOBAL_DIMENSION",
    "brute_force_hom_count",
    "functor_law_failures",
]
