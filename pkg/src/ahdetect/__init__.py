"""
Almost-hereditary detection on finite Hom-quivers.
"""

from src.ahdetect.detector import (
    DetectionReport,
    c_levels,
    check_condition_ii,
    check_condition_iii,
    check_maximality,
    compare_on_shared_vertices,
    detect,
    dump_fixture,
    enumerate_split_torsion_pairs,
    hom_to_r_check,
    is_almost_hereditary,
    load_fixture,
    lr_classes,
    parse_fixture,
    torsion_pair_x0y0,
    verify_c_equals_c1,
)
from src.ahdetect.quiver import HomQuiver, TorsionPairOnQuiver, Vertex

__all__ = [
    # Quivers
    "HomQuiver",
    "Vertex",
    "TorsionPairOnQuiver",
    "load_fixture",
    "parse_fixture",
    "dump_fixture",
    # Algorithm
    "c_levels",
    "verify_c_equals_c1",
    "torsion_pair_x0y0",
    "check_condition_ii",
    "check_condition_iii",
    "hom_to_r_check",
    "is_almost_hereditary",
    "lr_classes",
    "enumerate_split_torsion_pairs",
    "check_maximality",
    # Reports
    "DetectionReport",
    "detect",
    "compare_on_shared_vertices",
]
