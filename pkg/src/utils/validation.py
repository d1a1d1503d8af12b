"""
Schemas for fixtures and reports.

Every document read from disk or produced for output goes through one of
these pydantic models. Fixtures convert into engine objects with their
``to_*`` methods; reports are rendered to JSON with ``model_dump_json``.
"""

from typing import Any, Dict, List, Optional, Type, TypeVar

from pydantic import (
    BaseModel,
    Field,
    ValidationError,
    computed_field,
    field_validator,
    model_validator,
)
from sympy import isprime

from src.config.settings import FIXTURE_SCHEMA_VERSION, REPORT_SCHEMA_VERSION, TOOL_VERSION
from src.utils.error_handling import FixtureParseError, InputValidationError

Model = TypeVar("Model", bound=BaseModel)


def _check_schema_version(value: int) -> int:
    if value != FIXTURE_SCHEMA_VERSION:
        raise ValueError(
            f"unsupported schema version {value}, expected {FIXTURE_SCHEMA_VERSION}"
        )
    return value


def _check_rectangular(rows: List[List[Any]], cols: Optional[int], label: str) -> None:
    widths = {len(r) for r in rows}
    if len(widths) > 1:
        raise ValueError(f"{label} rows have different lengths {sorted(widths)}")
    if rows and cols is not None and widths != {cols}:
        raise ValueError(f"{label} rows must have {cols} entries")


class MatrixFixture(BaseModel):
    schema_version: int = FIXTURE_SCHEMA_VERSION
    rows: List[List[int]]
    cols: Optional[int] = Field(default=None, ge=0)

    check_version = field_validator("schema_version")(_check_schema_version)

    @model_validator(mode="after")
    def check_shape(self) -> "MatrixFixture":
        _check_rectangular(self.rows, self.cols, "matrix")
        if not self.rows and self.cols is None:
            raise ValueError("a matrix without rows needs an explicit column count")
        return self

    def to_matrix(self):
        from src.abgrp.matrix import IntMatrix

        return IntMatrix.from_rows(self.rows, cols=self.cols)


class GroupFixture(BaseModel):
    """A group given either as text ("Z^2 + Z/6") or by rank and cyclic orders."""

    text: Optional[str] = None
    rank: int = Field(default=0, ge=0)
    torsion: List[int] = Field(default_factory=list)

    @field_validator("torsion")
    @classmethod
    def check_orders(cls, value: List[int]) -> List[int]:
        if any(d < 1 for d in value):
            raise ValueError("cyclic orders must be positive")
        return value

    def to_group(self):
        from src.abgrp.groups import FgAbGroup

        if self.text is not None:
            return FgAbGroup.parse(self.text)
        return FgAbGroup.from_orders([0] * self.rank + list(self.torsion))


class HeartObjectFixture(BaseModel):
    primes: List[int]
    f: str
    t: str

    @field_validator("primes")
    @classmethod
    def check_primes(cls, value: List[int]) -> List[int]:
        bad = [p for p in value if not isprime(p)]
        if bad:
            raise ValueError(f"not prime: {bad}")
        return sorted(set(value))

    def to_object(self):
        from src.abgrp.groups import FgAbGroup
        from src.heart.models import HeartObject
        from src.torsion.pairs import PrimeSet

        return HeartObject(PrimeSet.of(*self.primes), FgAbGroup.parse(self.f), FgAbGroup.parse(self.t))


class HeartMorphismFixture(BaseModel):
    """
    A heart morphism (a, b, e).

    ``a`` and ``b`` are matrices in the canonical generators of the f and t
    parts; ``e`` lists, for every torsion generator of the source, its
    coordinates in the target's f.
    """

    schema_version: int = FIXTURE_SCHEMA_VERSION
    source: HeartObjectFixture
    target: HeartObjectFixture
    a: List[List[int]] = Field(default_factory=list)
    b: List[List[int]] = Field(default_factory=list)
    e: List[List[int]] = Field(default_factory=list)

    check_version = field_validator("schema_version")(_check_schema_version)

    @model_validator(mode="after")
    def check_same_primes(self) -> "HeartMorphismFixture":
        if self.source.primes != self.target.primes:
            raise ValueError("source and target must use the same prime set")
        _check_rectangular(self.a, None, "a")
        _check_rectangular(self.b, None, "b")
        _check_rectangular(self.e, None, "e")
        return self

    def to_morphism(self):
        from src.abgrp.ext import ExtElement
        from src.abgrp.groups import GroupHom
        from src.abgrp.matrix import IntMatrix
        from src.heart.models import HeartMorphism

        x, y = self.source.to_object(), self.target.to_object()
        a = GroupHom(x.f, y.f, IntMatrix.from_rows(self.a, cols=x.f.ngens))
        b = GroupHom(x.t, y.t, IntMatrix.from_rows(self.b, cols=x.t.ngens))
        e = ExtElement(x.t, y.f, tuple(tuple(c) for c in self.e))
        return HeartMorphism(x, y, a, b, e)


class VertexFixture(BaseModel):
    name: str = Field(min_length=1)
    pd: int = Field(ge=0, le=2)
    injdim: int = Field(ge=0, le=2)
    r_summand: bool = False

    @model_validator(mode="after")
    def check_projective_summand(self) -> "VertexFixture":
        if self.r_summand and self.pd != 0:
            raise ValueError(f"summand {self.name} of the ring must have pd 0")
        return self


class HomQuiverFixture(BaseModel):
    schema_version: int = FIXTURE_SCHEMA_VERSION
    description: str = ""
    bound: Optional[int] = Field(default=None, ge=0)
    vertices: List[VertexFixture]
    hom_nonzero: List[List[bool]]
    ext1_nonzero: List[List[bool]]

    check_version = field_validator("schema_version")(_check_schema_version)

    @model_validator(mode="after")
    def check_quiver(self) -> "HomQuiverFixture":
        n = len(self.vertices)
        names = [v.name for v in self.vertices]
        if len(set(names)) != n:
            raise ValueError("vertex names must be unique")
        if not any(v.r_summand for v in self.vertices):
            raise ValueError("at least one vertex must be a summand of the ring")
        for label, rows in (("hom_nonzero", self.hom_nonzero), ("ext1_nonzero", self.ext1_nonzero)):
            if len(rows) != n or any(len(r) != n for r in rows):
                raise ValueError(f"{label} must be a {n}x{n} matrix")
        missing = [names[i] for i in range(n) if not self.hom_nonzero[i][i]]
        if missing:
            raise ValueError(f"hom_nonzero must be reflexive, fails at {missing}")
        return self

    def to_quiver(self):
        from src.ahdetect.quiver import HomQuiver, Vertex

        return HomQuiver(
            tuple(Vertex(v.name, v.pd, v.injdim, v.r_summand) for v in self.vertices),
            tuple(tuple(r) for r in self.hom_nonzero),
            tuple(tuple(r) for r in self.ext1_nonzero),
            self.bound,
            self.description,
        )

    @classmethod
    def from_quiver(cls, q) -> "HomQuiverFixture":
        return cls(
            description=q.description,
            bound=q.bound,
            vertices=[
                VertexFixture(name=v.name, pd=v.pd, injdim=v.injdim, r_summand=v.r_summand)
                for v in q.vertices
            ],
            hom_nonzero=[list(r) for r in q.hom_nonzero],
            ext1_nonzero=[list(r) for r in q.ext1_nonzero],
        )


class TripleModuleFixture(BaseModel):
    """A module (F_p^l, Z_(p)^rank ⊕ Z/p^e_1 ⊕ ..., φ) with φ as an m×l matrix."""

    p: int
    l: int = Field(ge=0)  # noqa: E741
    rank: int = Field(default=0, ge=0)
    exponents: List[int] = Field(default_factory=list)
    phi: List[List[int]] = Field(default_factory=list)

    @field_validator("p")
    @classmethod
    def check_prime(cls, value: int) -> int:
        if not isprime(value):
            raise ValueError(f"{value} is not prime")
        return value

    @field_validator("exponents")
    @classmethod
    def check_exponents(cls, value: List[int]) -> List[int]:
        if any(e < 1 for e in value):
            raise ValueError("exponents must be positive")
        if value != sorted(value):
            raise ValueError("exponents must be sorted")
        return value

    @model_validator(mode="after")
    def check_phi(self) -> "TripleModuleFixture":
        if self.phi and (len(self.phi) != len(self.exponents) or any(len(r) != self.l for r in self.phi)):
            raise ValueError(f"phi must be a {len(self.exponents)}x{self.l} matrix")
        return self

    def to_module(self):
        from src.exring73.modules import TripleModule

        return TripleModule.build(self.p, self.l, self.rank, self.exponents, self.phi)

    @classmethod
    def from_module(cls, m) -> "TripleModuleFixture":
        return cls(
            p=m.p,
            l=m.l,
            rank=m.n.rank,
            exponents=list(m.n.exponents),
            phi=[list(r) for r in m.phi],
        )


class Verdict(BaseModel):
    name: str
    passed: bool
    detail: Dict[str, Any] = Field(default_factory=dict)


class Provenance(BaseModel):
    tool_version: str = TOOL_VERSION
    command: str
    arguments: Dict[str, Any] = Field(default_factory=dict)
    inputs: Dict[str, str] = Field(default_factory=dict)  # label -> sha256
    seed: Optional[int] = None
    bounds: Dict[str, int] = Field(default_factory=dict)


class Report(BaseModel):
    """One versioned result document per run."""

    schema_version: int = REPORT_SCHEMA_VERSION
    command: str
    verdicts: List[Verdict] = Field(default_factory=list)
    results: Dict[str, Any] = Field(default_factory=dict)
    provenance: Provenance

    @computed_field  # type: ignore[misc]
    @property
    def passed(self) -> bool:
        return all(v.passed for v in self.verdicts)


def parse_document(model: Type[Model], text: str, label: str = "document") -> Model:
    """
    Validate a JSON document against a schema.

    Raises:
        FixtureParseError: if the text is not JSON
        InputValidationError: if the document violates the schema
    """
    try:
        return model.model_validate_json(text)
    except ValidationError as e:
        if any(error["type"] == "json_invalid" for error in e.errors()):
            raise FixtureParseError(f"{label} is not valid JSON: {e}", field=label) from e
        raise InputValidationError(f"{label} violates the schema: {e}", field=label) from e


def validate_payload(model: Type[Model], payload: Any, label: str = "document") -> Model:
    try:
        return model.model_validate(payload)
    except ValidationError as e:
        raise InputValidationError(f"{label} violates the schema: {e}", field=label) from e
