"""
The acceptance suite behind ``hrs-tilt selftest``.

Every criterion runs at both depths; ``quick`` shrinks sample sizes and
ranges. All sampling is seeded, so two runs with the same seed produce
identical verdicts.
"""

from dataclasses import dataclass
from functools import lru_cache
from itertools import product
from math import gcd
from typing import Any, Callable, Dict, List, Tuple

import numpy as np

from src.abgrp.ext import ext_group
from src.abgrp.groups import FgAbGroup, hom_kernel_cokernel_image
from src.abgrp.hom import hom_group
from src.abgrp.oracles import brute_force_hom_count, functor_law_failures
from src.abgrp.sampling import random_group
from src.ahdetect.detector import detect
from src.cli.commands import example73_verdicts
from src.cli.reports import VerdictTuple, canonical_json
from src.config import settings
from src.exring73.decompose import decompose, invariants, summand_invariants, verify_reassembly
from src.exring73.dimensions import injdim_triple, pd_triple, projective_dimension_by_syzygies
from src.exring73.fixtures import enumerate_indecomposables, to_homquiver
from src.exring73.modules import TripleModule, name_of
from src.heart.category import compose, ext2_space, hom_space
from src.heart.exact import cokernel, four_term_exactness, is_ses, kernel
from src.heart.models import HeartMorphism, HeartObject
from src.heart.sampling import random_morphism, random_object
from src.heart.tilting import embed_into_tilt, verify_tilting_object
from src.torsion.pairs import PrimeSet, canonical_ses, is_cotilting, is_split
from src.utils.error_handling import HrsTiltError
from src.utils.logging import ExecutionTimer, get_logger

logger = get_logger(__name__)

DEPTHS = ("quick", "full")

PRIME_SETS = (
    PrimeSet(),
    PrimeSet.of(2),
    PrimeSet.of(2, 3),
    PrimeSet.of(2, 3, 5, 7, 11, 13),
)


@dataclass(frozen=True)
class Depth:
    hom_ext_range: int
    torsion_samples: int
    heart_samples: int
    max_l: int
    max_rank: int
    max_factors: int
    functor_samples: int

    @classmethod
    def of(cls, depth: str) -> "Depth":
        if depth == "full":
            return cls(
                24,
                settings.TORSION_SAMPLE_SIZE,
                settings.HEART_SAMPLE_SIZE,
                3,
                2,
                2,
                settings.FUNCTOR_LAW_SAMPLES,
            )
        return cls(12, 40, 10, 2, 1, 1, 20)


def _failures(detail: List[str], limit: int = 10) -> Dict[str, Any]:
    return {"failures": detail[:limit], "failure_count": len(detail)}


def ac1_hom_ext_oracle(depth: Depth, seed: int) -> Tuple[bool, Dict[str, Any]]:
    failures = []
    for m, n in product(range(2, depth.hom_ext_range + 1), repeat=2):
        a, b = FgAbGroup.cyclic(m), FgAbGroup.cyclic(n)
        hom = hom_group(a, b).group.order
        ext = ext_group(a, b).group.order
        brute = brute_force_hom_count(a, b)
        if not hom == ext == brute == gcd(m, n):
            failures.append(f"m={m}, n={n}: hom {hom}, ext {ext}, brute force {brute}")
    failures += functor_law_failures(np.random.default_rng(seed), depth.functor_samples)
    return not failures, _failures(failures)


def _ses_exact(seq) -> bool:
    if not (seq.inclusion.is_injective() and seq.projection.is_surjective()):
        return False
    if not (seq.projection @ seq.inclusion).is_zero():
        return False
    return hom_kernel_cokernel_image(seq.projection).kernel == seq.t


def ac2_torsion_pairs(depth: Depth, seed: int) -> Tuple[bool, Dict[str, Any]]:
    rng = np.random.default_rng(seed)
    failures, checked = [], 0
    for q in PRIME_SETS:
        sample = [random_group(rng) for _ in range(depth.torsion_samples)]
        for g in sample:
            seq = canonical_ses(q, g)
            if not hom_group(seq.t, seq.f).group.is_trivial:
                failures.append(f"{q}: Hom({seq.t}, {seq.f}) ≠ 0")
            if not _ses_exact(seq):
                failures.append(f"{q}: canonical sequence of {g} is not exact")
            checked += 1
        verdict = is_split(q, list(zip(sample, reversed(sample))))
        if not verdict.split:
            failures.append(f"{q}: split certificate failed")
        if not is_cotilting(q).holds:
            failures.append(f"{q}: Y is not cotilting")
    return not failures, {**_failures(failures), "groups": checked}


def ac3_heart_hereditary(depth: Depth, seed: int) -> Tuple[bool, Dict[str, Any]]:
    rng = np.random.default_rng(seed)
    failures = []
    for q in PRIME_SETS:
        for _ in range(depth.heart_samples):
            x, y = random_object(rng, q), random_object(rng, q)
            result = ext2_space(x, y)
            if not result.vanishes:
                failures.append(f"{q}: Ext2({x}, {y}) = {result.group}")
    return not failures, _failures(failures)


def ac4_multiplication_by_p(depth: Depth, seed: int) -> Tuple[bool, Dict[str, Any]]:
    failures = []
    for q in PRIME_SETS[1:]:
        x = HeartObject(q, FgAbGroup.free(1), FgAbGroup())
        for p in q:
            m = HeartMorphism.scalar(x, p)
            kernel_obj, k = kernel(m)
            cokernel_obj, _ = cokernel(m)
            if kernel_obj != HeartObject(q, FgAbGroup(), FgAbGroup.cyclic(p)):
                failures.append(f"{q}, p={p}: kernel {kernel_obj}")
            if not cokernel_obj.is_zero:
                failures.append(f"{q}, p={p}: cokernel {cokernel_obj}")
            if not is_ses(k, m).holds:
                failures.append(f"{q}, p={p}: sequence not exact")
    return not failures, _failures(failures)


def ac5_tilting_object(depth: Depth, seed: int) -> Tuple[bool, Dict[str, Any]]:
    failures = []
    for q in PRIME_SETS:
        t0 = HeartObject(q, FgAbGroup.free(1), FgAbGroup())
        report = verify_tilting_object(t0)
        failures += [f"{q}: {c.name}" for c in report.conditions if not c.passed]
        end = hom_space(t0, t0).group
        if end != FgAbGroup.free(1):
            failures.append(f"{q}: End = {end}")
    return not failures, _failures(failures)


def ac6_abelian_structure(depth: Depth, seed: int) -> Tuple[bool, Dict[str, Any]]:
    rng = np.random.default_rng(seed)
    q = PrimeSet.of(2, 3)
    failures = []
    for i in range(depth.heart_samples):
        objects = [random_object(rng, q, max_factor=36) for _ in range(4)]
        f, g, h = (random_morphism(rng, a, b) for a, b in zip(objects, objects[1:]))
        if compose(h, compose(g, f)) != compose(compose(h, g), f):
            failures.append(f"sample {i}: composition not associative")
        verdict = four_term_exactness(f)
        if not verdict.holds:
            failures.append(f"sample {i}: four-term sequence fails {verdict.failed}")
        if not kernel(embed_into_tilt(objects[0], check=False).mono)[0].is_zero:
            failures.append(f"sample {i}: embedding of {objects[0]} is not monic")
    return not failures, _failures(failures)


@lru_cache(maxsize=4)
def _detections(big_bound: int, small_bound: int, p: int):
    return detect(to_homquiver(big_bound, p)), detect(to_homquiver(small_bound, p))


def ac7_detection(depth: Depth, seed: int) -> Tuple[bool, Dict[str, Any]]:
    big, small = _detections(settings.TRUNCATION_BOUND, settings.STABILITY_BOUND, settings.EXAMPLE_PRIME)
    checks = example73_verdicts(big, small) + [("hom_to_r", big.hom_to_r.passed, {})]
    failed = [name for name, passed, _ in checks if not passed]
    return not failed, {"failed": failed, "summary": big.summary()}


def ac8_maximality(depth: Depth, seed: int) -> Tuple[bool, Dict[str, Any]]:
    big, _ = _detections(settings.TRUNCATION_BOUND, settings.STABILITY_BOUND, settings.EXAMPLE_PRIME)
    count = len(big.split_pairs_with_r)
    passed = count == 1 and big.maximality.passed
    return passed, {"split_pairs_with_r": count, "failures": big.maximality.failures}


def triples(p: int, depth: Depth) -> List[TripleModule]:
    """Every triple with dim L, rank and the number of cyclic factors within the depth, exponents <= 3."""
    modules = []
    exponent_lists = [
        list(e)
        for k in range(depth.max_factors + 1)
        for e in product(range(1, 4), repeat=k)
        if list(e) == sorted(e)
    ]
    for dim, rank, exponents in product(range(depth.max_l + 1), range(depth.max_rank + 1), exponent_lists):
        for entries in product(range(p), repeat=dim * len(exponents)):
            phi = [list(entries[i * dim : (i + 1) * dim]) for i in range(len(exponents))]
            modules.append(TripleModule.build(p, dim, rank, exponents, phi))
    return modules


def ac9_example_modules(depth: Depth, seed: int) -> Tuple[bool, Dict[str, Any]]:
    p = settings.EXAMPLE_PRIME
    failures = []
    modules = triples(p, depth)
    for m in modules:
        d = decompose(m)
        expected = invariants(m)
        if (pd_triple(m) == 2) != (expected.s_count > 0):
            failures.append(f"{m}: pd {pd_triple(m)} with summands {d.names}")
        if not verify_reassembly(d):
            failures.append(f"{m}: reassembly fails")
        if expected != summand_invariants(d):
            failures.append(f"{m}: invariants disagree")
    for m in enumerate_indecomposables(settings.TRUNCATION_BOUND, p):
        if name_of(m) == "S":
            continue
        injdim = injdim_triple(m)
        if injdim.value != 2 or any(w.is_zero for w in injdim.witnesses):
            failures.append(f"{name_of(m)}: injdim {injdim.value}")
        if projective_dimension_by_syzygies(m) != pd_triple(m):
            failures.append(f"{name_of(m)}: syzygy pd disagrees")
    return not failures, {**_failures(failures), "modules": len(modules)}


Criterion = Callable[[Depth, int], Tuple[bool, Dict[str, Any]]]

CRITERIA: Tuple[Tuple[str, Criterion], ...] = (
    ("AC1", ac1_hom_ext_oracle),
    ("AC2", ac2_torsion_pairs),
    ("AC3", ac3_heart_hereditary),
    ("AC4", ac4_multiplication_by_p),
    ("AC5", ac5_tilting_object),
    ("AC6", ac6_abelian_structure),
    ("AC7", ac7_detection),
    ("AC8", ac8_maximality),
    ("AC9", ac9_example_modules),
)

SEEDED = ("AC1", "AC2", "AC3", "AC6")


def _evaluate(name: str, criterion: Criterion, depth: Depth, seed: int) -> VerdictTuple:
    """Run one criterion; an engine error fails it without stopping the suite."""
    try:
        with ExecutionTimer(f"selftest {name}", logger):
            passed, detail = criterion(depth, seed)
    except HrsTiltError as error:
        return name, False, error.to_dict()
    return name, passed, detail


def run_selftest(depth: str, seed: int) -> Tuple[List[VerdictTuple], Dict[str, Any]]:
    """
    Run AC1 to AC10 at the given depth.

    AC10 reruns the seeded criteria and requires identical payloads. Every
    criterion is tagged with the depth it was evaluated at.
    """
    settings_for = Depth.of(depth)
    verdicts = [_evaluate(name, criterion, settings_for, seed) for name, criterion in CRITERIA]

    with ExecutionTimer("selftest AC10", logger):
        first = {name: detail for name, _, detail in verdicts if name in SEEDED}
        rerun = {
            name: _evaluate(name, criterion, settings_for, seed)[2]
            for name, criterion in CRITERIA
            if name in SEEDED
        }
        deterministic = canonical_json(first) == canonical_json(rerun)
        everything = all(passed for _, passed, _ in verdicts)
    verdicts.append(("AC10", deterministic and everything, {"deterministic": deterministic}))

    results = {
        "depth": depth,
        "criteria": [{"id": name, "tags": [depth], "passed": passed} for name, passed, _ in verdicts],
    }
    return verdicts, results
