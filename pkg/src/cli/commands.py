"""
One handler per CLI verb.

Handlers take the parsed arguments and return a CommandOutcome; they never
print. Report assembly and rendering happen in main.
"""

import json
import re
from argparse import Namespace
from pathlib import Path
from typing import Any, Dict, List, NamedTuple, Optional, Tuple

from src.abgrp.ext import ext_group, higher_ext_group
from src.abgrp.groups import FgAbGroup, cokernel_group, primary_decomposition
from src.abgrp.hom import hom_group
from src.abgrp.matrix import IntMatrix, smith_normal_form
from src.abgrp.oracles import brute_force_hom_count
from src.ahdetect.detector import (
    DetectionReport,
    compare_on_shared_vertices,
    detect,
    dump_fixture,
    fixture_digest,
    load_fixture,
)
from src.cli.reports import VerdictTuple, sha256_file, sha256_payload
from src.config import settings
from src.exring73.dimensions import projective_dimension_by_syzygies, standard_sequence
from src.exring73.fixtures import to_homquiver
from src.exring73.modules import g_r
from src.heart.category import compose, ext1_space, ext2_space, hom_space
from src.heart.exact import cokernel, four_term_exactness, kernel
from src.heart.models import HeartMorphism, HeartObject
from src.heart.tilting import tilt_coresolution, verify_tilting_object
from src.torsion.pairs import PrimeSet
from src.utils.error_handling import (
    BoundExceededError,
    FixtureParseError,
    InputValidationError,
    PrimeMismatchError,
)
from src.utils.logging import get_logger
from src.utils.validation import HeartMorphismFixture, MatrixFixture, parse_document, validate_payload

logger = get_logger(__name__)

_SCALAR = re.compile(r"^p=(-?\d+)$")


class CommandOutcome(NamedTuple):
    verdicts: List[VerdictTuple]
    results: Dict[str, Any]
    inputs: Dict[str, str]


def _read_text(path: Path, label: str) -> str:
    try:
        return path.read_text(encoding="utf-8")
    except OSError as e:
        raise FixtureParseError(f"Cannot read {label} {path}: {e}", field=label) from e


def _group_results(g: FgAbGroup) -> Dict[str, Any]:
    return {
        "group": str(g),
        "rank": g.rank,
        "torsion": list(g.torsion),
        "primary": {str(p): powers for p, powers in primary_decomposition(g).items()},
    }


def load_matrix(value: str) -> Tuple[IntMatrix, str]:
    """A matrix from a JSON list-of-rows literal or a MatrixFixture file, with its digest."""
    path = Path(value)
    if path.is_file():
        fixture = parse_document(MatrixFixture, _read_text(path, "matrix"), "matrix")
        return fixture.to_matrix(), sha256_file(path)
    try:
        rows = json.loads(value)
    except json.JSONDecodeError as e:
        raise FixtureParseError(f"Matrix must be a JSON list of rows or a file: {value}", field="matrix") from e
    fixture = validate_payload(MatrixFixture, {"rows": rows}, "matrix")
    return fixture.to_matrix(), sha256_payload(rows)


# Groups


def run_snf(args: Namespace) -> CommandOutcome:
    m, digest = load_matrix(args.matrix)
    form = smith_normal_form(m)
    reproduces = form.u @ m @ form.v == form.d
    diagonal = form.invariants
    chain = all(b % a == 0 if a else b == 0 for a, b in zip(diagonal, diagonal[1:]))
    verdicts = [
        ("reproduces", reproduces, {}),
        ("divisibility_chain", chain and form.d.is_diagonal(), {"invariants": list(diagonal)}),
        ("unimodular", abs(form.u.determinant()) == 1 and abs(form.v.determinant()) == 1, {}),
    ]
    results = {
        "d": form.d.to_lists(),
        "u": form.u.to_lists(),
        "v": form.v.to_lists(),
        "invariants": list(diagonal),
        "rank": form.rank,
    }
    return CommandOutcome(verdicts, results, {"matrix": digest})


def run_group(args: Namespace) -> CommandOutcome:
    if args.matrix is not None:
        m, digest = load_matrix(args.matrix)
        g = cokernel_group(m)
        inputs = {"matrix": digest}
    elif args.group is not None:
        g = FgAbGroup.parse(args.group)
        inputs = {"group": sha256_payload(args.group)}
    else:
        raise InputValidationError("group needs a GROUP or --matrix", field="group")
    verdicts = [("canonical_form", FgAbGroup.parse(str(g)) == g, {"text": str(g)})]
    return CommandOutcome(verdicts, _group_results(g), inputs)


def run_hom(args: Namespace) -> CommandOutcome:
    a, b = FgAbGroup.parse(args.source), FgAbGroup.parse(args.target)
    hom = hom_group(a, b).group
    results: Dict[str, Any] = {"hom": str(hom), "order": hom.order}
    verdicts: List[VerdictTuple] = []
    if a.is_finite and b.is_finite:
        try:
            count = brute_force_hom_count(a, b, args.bound)
            verdicts.append(("brute_force_count", count == hom.order, {"count": count, "order": hom.order}))
        except BoundExceededError as e:
            results["brute_force"] = e.to_dict()
    inputs = {"groups": sha256_payload([args.source, args.target])}
    return CommandOutcome(verdicts, results, inputs)


def run_ext(args: Namespace) -> CommandOutcome:
    t, f = FgAbGroup.parse(args.source), FgAbGroup.parse(args.target)
    ext = ext_group(t, f).group
    verdicts: List[VerdictTuple] = [("ext2_vanishes", higher_ext_group(2, t, f).is_trivial, {})]
    if t.is_finite and f.is_finite:
        hom = hom_group(t, f).group
        verdicts.append(("order_matches_hom", ext.order == hom.order, {"ext": ext.order, "hom": hom.order}))
    results = {"ext1": str(ext), "order": ext.order}
    return CommandOutcome(verdicts, results, {"groups": sha256_payload([args.source, args.target])})


# Heart


def load_morphism(args: Namespace, q: PrimeSet, x: HeartObject) -> Tuple[HeartMorphism, Dict[str, str]]:
    if args.morphism_file is not None:
        path = Path(args.morphism_file)
        fixture = parse_document(HeartMorphismFixture, _read_text(path, "morphism"), "morphism")
        m = fixture.to_morphism()
        if m.source.q != q:
            raise PrimeMismatchError(f"Morphism file is over {m.source.q}, expected {q}", field="q")
        return m, {"morphism": sha256_file(path)}
    if args.morphism is None:
        raise InputValidationError("kernel and cokernel need --morphism or --morphism-file", field="morphism")
    match = _SCALAR.match(args.morphism.replace(" ", ""))
    if not match:
        raise FixtureParseError(f"Morphism must be written p=N, got '{args.morphism}'", field="morphism")
    return HeartMorphism.scalar(x, int(match.group(1))), {}


def _blocks(components) -> Dict[str, str]:
    return {label: str(g) for label, g in components}


def run_heart(args: Namespace) -> CommandOutcome:
    q = PrimeSet.parse(args.q)
    x = HeartObject.parse(q, args.object)
    y = HeartObject.parse(q, args.target) if args.target else x
    inputs = {"objects": sha256_payload([str(q), args.object, args.target])}
    verdicts: List[VerdictTuple] = []
    results: Dict[str, Any] = {"q": str(q), "source": str(x), "target": str(y)}

    if args.operation == "hom":
        space = hom_space(x, y)
        unital = all(
            compose(HeartMorphism.identity(y), m) == m and compose(m, HeartMorphism.identity(x)) == m
            for m in space.basis
        )
        verdicts.append(("identities_are_units", unital, {"generators": len(space.basis)}))
        results.update(hom=str(space.group), blocks=_blocks(space.components))
    elif args.operation == "ext1":
        ext = ext1_space(x, y)
        results.update(ext1=str(ext.group), blocks=_blocks(ext.components))
    elif args.operation == "ext2":
        ext2 = ext2_space(x, y)
        verdicts.append(
            ("ext2_vanishes", ext2.vanishes, {"block": str(ext2.block), "gcds": list(ext2.block_gcds)})
        )
        results.update(ext2=str(ext2.group))
    else:
        m, morphism_inputs = load_morphism(args, q, x)
        inputs.update(morphism_inputs)
        exactness = four_term_exactness(m)
        if args.operation == "kernel":
            obj, k = kernel(m)
            verdicts += [
                ("composite_zero", compose(m, k).is_zero(), {}),
                ("monomorphism", kernel(k)[0].is_zero, {}),
            ]
            results["kernel"] = str(obj)
        else:
            obj, c = cokernel(m)
            verdicts += [
                ("composite_zero", compose(c, m).is_zero(), {}),
                ("epimorphism", cokernel(c)[0].is_zero, {}),
            ]
            results["cokernel"] = str(obj)
        verdicts.append(("four_term_exact", exactness.holds, {"failed": exactness.failed}))
        results["morphism"] = str(m.source) + " -> " + str(m.target)
    return CommandOutcome(verdicts, results, inputs)


def run_tilt(args: Namespace) -> CommandOutcome:
    q = PrimeSet.parse(args.q)
    t0 = HeartObject.parse(q, args.object)
    witnesses: Optional[List[HeartObject]] = (
        [HeartObject.parse(q, w) for w in args.witness] if args.witness else None
    )
    report = verify_tilting_object(t0, witnesses)
    verdicts: List[VerdictTuple] = [
        (c.name, c.passed, {"evidence": list(c.evidence)}) for c in report.conditions
    ]
    end = hom_space(t0, t0).group
    if t0 == HeartObject(q, FgAbGroup.free(1), FgAbGroup()):
        verdicts.append(("end_is_z", end == FgAbGroup.free(1), {"end": str(end)}))

    resolved = [tilt_coresolution(w) for w in (witnesses or [])]
    if resolved:
        failures = [str(r.x) for r in resolved if not r.holds]
        verdicts.append(("coresolutions_exact", not failures, {"failures": failures}))
    results = {"q": str(q), "candidate": str(t0), "end": str(end)}
    inputs = {"objects": sha256_payload([str(q), args.object, list(args.witness or [])])}
    return CommandOutcome(verdicts, results, inputs)


# Detection


def run_ah_detect(args: Namespace) -> CommandOutcome:
    q = load_fixture(args.fixture)
    report = detect(q, args.bound)
    return CommandOutcome(report.verdicts(), report.summary(), {"fixture": sha256_file(args.fixture)})


def example73_verdicts(report: DetectionReport, other: DetectionReport) -> List[VerdictTuple]:
    """The detection verdicts plus the expected outcome on the example ring."""
    q = report.quiver
    rest = frozenset(q.names) - {"S"}
    stability = compare_on_shared_vertices(report, other)
    return report.verdicts() + [
        ("x0_is_s", report.x0y0.x_set == {"S"}, {"x0": q.ordered(report.x0y0.x_set)}),
        ("l_is_complement_of_s", report.left == rest, {"L": q.ordered(report.left)}),
        ("r_is_s", report.right == {"S"}, {"R": q.ordered(report.right)}),
        ("l_r_disjoint", not report.l_meets_r, {}),
        ("unique_split_pair_with_r", len(report.split_pairs_with_r) == 1, {}),
        (
            "bound_stability",
            stability.stable,
            {"bounds": [q.bound, other.quiver.bound], "differences": list(stability.differences)},
        ),
    ]


def run_example73(args: Namespace) -> CommandOutcome:
    bound = settings.TRUNCATION_BOUND if args.bound is None else args.bound
    p = settings.EXAMPLE_PRIME if args.prime is None else args.prime
    other_bound = settings.STABILITY_BOUND if settings.STABILITY_BOUND != bound else bound + 1

    q = to_homquiver(bound, p)
    report = detect(q)
    other = detect(to_homquiver(other_bound, p))
    sequence = standard_sequence(p)
    pd_gr = projective_dimension_by_syzygies(g_r(p))

    verdicts = example73_verdicts(report, other) + [
        ("standard_sequence_exact", sequence.exact, {}),
        ("standard_sequence_non_split", sequence.non_split, {"ext1": str(sequence.extension.group)}),
        ("pd_gr_is_1", pd_gr == 1, {"pd": pd_gr}),
    ]
    results = report.summary()
    results["prime"] = p
    if args.export:
        Path(args.export).parent.mkdir(parents=True, exist_ok=True)
        Path(args.export).write_text(dump_fixture(q) + "\n", encoding="utf-8")
        results["exported"] = str(args.export)
    return CommandOutcome(verdicts, results, {"quiver": fixture_digest(q)})
