"""
Almost-hereditary detection on Hom-quivers.

The closure C of the projective-dimension-2 vertices under nonzero Hom
gives the torsion pair (X0, Y0) = (C, rest). A noetherian ring is almost
hereditary exactly when a split torsion pair with R in Y and pd(Y) <= 1
exists, and (X0, Y0) is then the largest such pair on the Y side.
"""

import hashlib
import json
from dataclasses import dataclass
from pathlib import Path
from typing import Any, Dict, FrozenSet, List, Optional, Tuple, Union

import numpy as np

from src.ahdetect.quiver import HomQuiver, TorsionPairOnQuiver
from src.config import settings
from src.utils.error_handling import BoundExceededError, FixtureParseError
from src.utils.logging import get_logger
from src.utils.validation import HomQuiverFixture, parse_document

logger = get_logger(__name__)

Level = FrozenSet[str]


@dataclass(frozen=True)
class CheckItem:
    name: str
    failures: Tuple[str, ...] = ()

    @property
    def passed(self) -> bool:
        return not self.failures


@dataclass(frozen=True)
class ConditionReport:
    name: str
    items: Tuple[CheckItem, ...]

    @property
    def passed(self) -> bool:
        return all(item.passed for item in self.items)

    @property
    def failures(self) -> List[str]:
        return [f"{item.name}: {f}" for item in self.items for f in item.failures]

    def item(self, name: str) -> CheckItem:
        return next(i for i in self.items if i.name == name)


def _successors(q: HomQuiver, level: Level) -> Level:
    hom = q.hom_array
    rows = [q.index(v) for v in level]
    if not rows:
        return frozenset()
    reached = hom[rows].any(axis=0)
    return frozenset(q.names[j] for j in np.flatnonzero(reached))


def c_levels(q: HomQuiver) -> List[Level]:
    """
    C0 = {pd = 2} and C_{n+1} = vertices receiving a nonzero map from C_n,
    until the union stops growing.
    """
    levels = [frozenset(v.name for v in q.vertices if v.pd == 2)]
    union = set(levels[0])
    while True:
        following = _successors(q, levels[-1])
        levels.append(following)
        if following <= union:
            break
        union |= following
    logger.debug("c levels computed", levels=[q.ordered(level) for level in levels])
    return levels


def closure(levels: List[Level]) -> Level:
    return frozenset().union(*levels)


def verify_c_equals_c1(q: HomQuiver) -> bool:
    levels = c_levels(q)
    return closure(levels) == levels[0] | levels[1]


def torsion_pair_x0y0(q: HomQuiver) -> TorsionPairOnQuiver:
    return TorsionPairOnQuiver.from_x(q, closure(c_levels(q)))


def check_condition_ii(q: HomQuiver, tp: TorsionPairOnQuiver) -> ConditionReport:
    """
    Split torsion pair with pd(Y) <= 1 and every summand of R in Y.
    """
    split = [
        f"Ext1({y}, {x}) ≠ 0"
        for y in q.ordered(tp.y_set)
        for x in q.ordered(tp.x_set)
        if q.ext1(y, x)
    ]
    pd_y = [f"pd({y}) = {q.vertex(y).pd}" for y in q.ordered(tp.y_set) if q.vertex(y).pd > 1]
    r_in_y = [f"{r} lies in X" for r in q.ordered(q.r_summands - tp.y_set)]
    return ConditionReport(
        "condition_ii",
        (
            CheckItem("orthogonal", tuple(tp.orthogonality_failures(q))),
            CheckItem("split", tuple(split)),
            CheckItem("pd_y_at_most_1", tuple(pd_y)),
            CheckItem("r_summands_in_y", tuple(r_in_y)),
        ),
    )


def check_condition_iii(q: HomQuiver) -> ConditionReport:
    """
    pd <= 1 or injdim <= 1 for every vertex.

    Global dimension at most 2 is not checked here: Vertex rejects pd or
    injdim above 2 when the quiver is built.
    """
    neither = [
        f"{v.name}: pd = {v.pd}, injdim = {v.injdim}"
        for v in q.vertices
        if v.pd > 1 and v.injdim > 1
    ]
    return ConditionReport(
        "condition_iii",
        (CheckItem("pd_or_injdim", tuple(neither)),),
    )


def hom_to_r_check(q: HomQuiver) -> ConditionReport:
    """Hom(M, R) = 0 for every M of projective dimension 2."""
    c0 = c_levels(q)[0]
    violations = [
        f"Hom({m}, {r}) ≠ 0"
        for m in q.ordered(c0)
        for r in q.ordered(q.r_summands)
        if q.hom(m, r)
    ]
    return ConditionReport("hom_to_r", (CheckItem("hom_to_r_vanishes", tuple(violations)),))


def is_almost_hereditary(q: HomQuiver) -> bool:
    return check_condition_iii(q).passed and hom_to_r_check(q).passed


def reachability(q: HomQuiver) -> np.ndarray:
    """reach[i, j] is true when a chain of nonzero maps leads from v_i to v_j."""
    reach = q.hom_array | np.eye(len(q.vertices), dtype=bool)
    while True:
        step = reach | ((reach.astype(np.int64) @ reach.astype(np.int64)) > 0)
        if (step == reach).all():
            return reach
        reach = step


def lr_classes(q: HomQuiver) -> Tuple[Level, Level]:
    """
    L: vertices all of whose predecessors have pd <= 1.
    R: vertices all of whose successors have injdim <= 1.
    """
    reach = reachability(q)
    pd = np.array([v.pd for v in q.vertices])
    injdim = np.array([v.injdim for v in q.vertices])
    left = frozenset(
        name for j, name in enumerate(q.names) if (pd[reach[:, j]] <= 1).all()
    )
    right = frozenset(
        name for i, name in enumerate(q.names) if (injdim[reach[i, :]] <= 1).all()
    )
    return left, right


def enumerate_split_torsion_pairs(
    q: HomQuiver, bound: Optional[int] = None, require_r_in_y: bool = False
) -> List[TorsionPairOnQuiver]:
    """
    Every Hom-orthogonal bipartition (X, Y) that is split and has pd(Y) <= 1.

    Vertices are assigned in order, Y before X, and a branch is cut as soon
    as an assigned pair breaks orthogonality or splitness.

    Raises:
        BoundExceededError: if the quiver has more vertices than ``bound``
    """
    bound = settings.ENUMERATION_VERTEX_BOUND if bound is None else bound
    n = len(q.vertices)
    if n > bound:
        raise BoundExceededError(
            f"Enumeration over {n} vertices exceeds the bound {bound}", bound=bound, requested=n
        )
    hom, ext1 = q.hom_array, q.ext1_array
    allowed_in_y = [v.pd <= 1 for v in q.vertices]
    required_in_y = [require_r_in_y and v.r_summand for v in q.vertices]

    pairs: List[TorsionPairOnQuiver] = []
    in_x: List[int] = []
    in_y: List[int] = []

    def fits_y(k: int) -> bool:
        return allowed_in_y[k] and not any(hom[x, k] or ext1[k, x] for x in in_x)

    def fits_x(k: int) -> bool:
        return not required_in_y[k] and not any(hom[k, y] or ext1[y, k] for y in in_y)

    def assign(k: int) -> None:
        if k == n:
            pairs.append(
                TorsionPairOnQuiver(
                    frozenset(q.names[i] for i in in_x), frozenset(q.names[i] for i in in_y)
                )
            )
            return
        if fits_y(k):
            in_y.append(k)
            assign(k + 1)
            in_y.pop()
        if fits_x(k):
            in_x.append(k)
            assign(k + 1)
            in_x.pop()

    assign(0)
    logger.debug("split torsion pairs enumerated", vertices=n, pairs=len(pairs))
    return pairs


def check_maximality(
    q: HomQuiver, pairs: List[TorsionPairOnQuiver], x0y0: TorsionPairOnQuiver
) -> ConditionReport:
    """Y ⊆ Y0 and X0 ⊆ X for every enumerated pair."""
    failures = []
    for tp in pairs:
        x, y = tp.describe(q)
        if not tp.y_set <= x0y0.y_set or not x0y0.x_set <= tp.x_set:
            failures.append(f"X = {x}, Y = {y}")
    return ConditionReport("maximality", (CheckItem("y_inside_y0", tuple(failures)),))


@dataclass(frozen=True)
class DetectionReport:
    """All detection results for one quiver."""

    quiver: HomQuiver
    levels: Tuple[Level, ...]
    x0y0: TorsionPairOnQuiver
    c_equals_c1: bool
    condition_ii: ConditionReport
    condition_iii: ConditionReport
    hom_to_r: ConditionReport
    left: Level
    right: Level
    split_pairs: Tuple[TorsionPairOnQuiver, ...]
    split_pairs_with_r: Tuple[TorsionPairOnQuiver, ...]
    maximality: ConditionReport

    @property
    def almost_hereditary(self) -> bool:
        return self.condition_iii.passed and self.hom_to_r.passed

    @property
    def iii_implies_ii(self) -> bool:
        return not self.almost_hereditary or self.condition_ii.passed

    @property
    def ii_implies_iii(self) -> bool:
        witnessed = any(check_condition_ii(self.quiver, tp).passed for tp in self.split_pairs_with_r)
        return not witnessed or self.condition_iii.passed

    @property
    def l_meets_r(self) -> bool:
        return bool(self.left & self.right)

    def verdicts(self) -> List[Tuple[str, bool, Dict[str, Any]]]:
        q = self.quiver
        x0, y0 = self.x0y0.describe(q)
        return [
            ("c_equals_c1", self.c_equals_c1, {"levels": [q.ordered(level) for level in self.levels]}),
            ("condition_ii", self.condition_ii.passed, {"x0": x0, "y0": y0, "failures": self.condition_ii.failures}),
            ("condition_iii", self.condition_iii.passed, {"failures": self.condition_iii.failures}),
            ("hom_to_r", self.hom_to_r.passed, {"failures": self.hom_to_r.failures}),
            ("iii_implies_ii", self.iii_implies_ii, {}),
            ("ii_implies_iii", self.ii_implies_iii, {}),
            (
                "maximality",
                self.maximality.passed,
                {
                    "split_pairs": len(self.split_pairs),
                    "split_pairs_with_r": len(self.split_pairs_with_r),
                    "failures": self.maximality.failures,
                },
            ),
        ]

    def summary(self) -> Dict[str, Any]:
        q = self.quiver
        x0, y0 = self.x0y0.describe(q)
        return {
            "vertices": q.names,
            "bound": q.bound,
            "x0": x0,
            "y0": y0,
            "c0": q.ordered(self.levels[0]),
            "c": q.ordered(closure(list(self.levels))),
            "L": q.ordered(self.left),
            "R": q.ordered(self.right),
            "l_meets_r": self.l_meets_r,
            "almost_hereditary": self.almost_hereditary,
            "split_pairs_with_r": [
                {"x": tp.describe(q)[0], "y": tp.describe(q)[1]} for tp in self.split_pairs_with_r
            ],
        }


def detect(q: HomQuiver, bound: Optional[int] = None) -> DetectionReport:
    """Run the whole detection on q."""
    levels = c_levels(q)
    x0y0 = TorsionPairOnQuiver.from_x(q, closure(levels))
    left, right = lr_classes(q)
    pairs = enumerate_split_torsion_pairs(q, bound)
    with_r = [tp for tp in pairs if q.r_summands <= tp.y_set]
    report = DetectionReport(
        quiver=q,
        levels=tuple(levels),
        x0y0=x0y0,
        c_equals_c1=closure(levels) == levels[0] | levels[1],
        condition_ii=check_condition_ii(q, x0y0),
        condition_iii=check_condition_iii(q),
        hom_to_r=hom_to_r_check(q),
        left=left,
        right=right,
        split_pairs=tuple(pairs),
        split_pairs_with_r=tuple(with_r),
        maximality=check_maximality(q, pairs, x0y0),
    )
    logger.debug(
        "detection finished",
        vertices=len(q.vertices),
        almost_hereditary=report.almost_hereditary,
        split_pairs=len(pairs),
    )
    return report


@dataclass(frozen=True)
class StabilityReport:
    shared: Tuple[str, ...]
    differences: Tuple[str, ...]

    @property
    def stable(self) -> bool:
        return not self.differences


def compare_on_shared_vertices(first: DetectionReport, second: DetectionReport) -> StabilityReport:
    """Compare two detection runs on the vertices both quivers contain."""
    shared = frozenset(first.quiver.names) & frozenset(second.quiver.names)
    differences = []

    def compare(label: str, a: FrozenSet[str], b: FrozenSet[str]) -> None:
        if a & shared != b & shared:
            differences.append(f"{label}: {sorted(a & shared)} vs {sorted(b & shared)}")

    compare("C", closure(list(first.levels)), closure(list(second.levels)))
    compare("X0", first.x0y0.x_set, second.x0y0.x_set)
    compare("Y0", first.x0y0.y_set, second.x0y0.y_set)
    compare("L", first.left, second.left)
    compare("R", first.right, second.right)

    flags = (
        "c_equals_c1",
        "almost_hereditary",
        "iii_implies_ii",
        "ii_implies_iii",
        "l_meets_r",
    )
    for flag in flags:
        a, b = getattr(first, flag), getattr(second, flag)
        if a != b:
            differences.append(f"{flag}: {a} vs {b}")
    for name in ("condition_ii", "condition_iii", "hom_to_r", "maximality"):
        a, b = getattr(first, name).passed, getattr(second, name).passed
        if a != b:
            differences.append(f"{name}: {a} vs {b}")
    if len(first.split_pairs_with_r) != len(second.split_pairs_with_r):
        differences.append(
            f"split pairs with R in Y: {len(first.split_pairs_with_r)} vs {len(second.split_pairs_with_r)}"
        )
    return StabilityReport(tuple(first.quiver.ordered(shared)), tuple(differences))


def load_fixture(path: Union[str, Path]) -> HomQuiver:
    """
    Read a Hom-quiver fixture through the schema.

    Raises:
        FixtureParseError: if the file is missing or is not JSON
        InputValidationError: if the document violates the schema
    """
    try:
        text = Path(path).read_text(encoding="utf-8")
    except OSError as e:
        raise FixtureParseError(f"Cannot read fixture {path}: {e}", field="path") from e
    return parse_fixture(text)


def parse_fixture(text: str) -> HomQuiver:
    return parse_document(HomQuiverFixture, text, "fixture").to_quiver()


def dump_fixture(q: HomQuiver) -> str:
    return HomQuiverFixture.from_quiver(q).model_dump_json(indent=2)


def fixture_digest(q: HomQuiver) -> str:
    """sha256 of the canonical JSON of q."""
    canonical = json.dumps(json.loads(dump_fixture(q)), sort_keys=True, separators=(",", ":"))
    return hashlib.sha256(canonical.encode("utf-8")).hexdigest()
