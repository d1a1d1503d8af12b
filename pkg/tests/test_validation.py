"""
Tests for the fixture and report schemas.
"""

import json

import pytest

from src.abgrp.groups import FgAbGroup
from src.abgrp.matrix import IntMatrix
from src.exring73.modules import paired_cyclic
from src.heart.models import HeartMorphism, HeartObject
from src.torsion.pairs import PrimeSet
from src.utils.error_handling import FixtureParseError, InputValidationError
from src.utils.validation import (
    GroupFixture,
    HeartMorphismFixture,
    MatrixFixture,
    Provenance,
    Report,
    TripleModuleFixture,
    Verdict,
    VertexFixture,
    parse_document,
    validate_payload,
)


class TestMatrixFixture:
    def test_valid_matrix(self):
        """Rows become an IntMatrix."""
        fixture = validate_payload(MatrixFixture, {"rows": [[1, 2], [3, 4]]})
        assert fixture.to_matrix() == IntMatrix.from_rows([[1, 2], [3, 4]])

    def test_empty_matrix_needs_cols(self):
        """A matrix without rows needs cols."""
        with pytest.raises(InputValidationError):
            validate_payload(MatrixFixture, {"rows": []})
        assert validate_payload(MatrixFixture, {"rows": [], "cols": 2}).to_matrix().shape == (0, 2)

    def test_ragged_rows(self):
        """Rows of different lengths are rejected."""
        with pytest.raises(InputValidationError):
            validate_payload(MatrixFixture, {"rows": [[1, 2], [3]]})

    def test_non_integer_entries(self):
        """Entries must be integers."""
        with pytest.raises(InputValidationError):
            validate_payload(MatrixFixture, {"rows": [["a"]]})

    def test_invalid_json(self):
        """Broken JSON is a parse error, not a validation error."""
        with pytest.raises(FixtureParseError):
            parse_document(MatrixFixture, "[[1, 2]", "matrix")


class TestGroupFixture:
    def test_text_and_orders_agree(self):
        """Text and rank/torsion descriptions give the same group."""
        by_text = GroupFixture(text="Z + Z/6 + Z/4").to_group()
        by_orders = validate_payload(GroupFixture, {"rank": 1, "torsion": [6, 4]}).to_group()
        assert by_text == by_orders == FgAbGroup(1, (2, 12))

    def test_orders_positive(self):
        """Cyclic orders must be positive."""
        with pytest.raises(InputValidationError):
            validate_payload(GroupFixture, {"torsion": [0]})


class TestHeartMorphismFixture:
    def setup_method(self):
        self.payload = {
            "source": {"primes": [2], "f": "Z", "t": "0"},
            "target": {"primes": [2], "f": "Z", "t": "0"},
            "a": [[2]],
        }

    def test_scalar_morphism(self):
        """a = [[2]] on (Z, 0) is multiplication by 2."""
        m = validate_payload(HeartMorphismFixture, self.payload).to_morphism()
        assert m == HeartMorphism.scalar(HeartObject(PrimeSet.of(2), FgAbGroup.free(1), FgAbGroup()), 2)

    def test_prime_sets_must_match(self):
        """Source and target share one prime set."""
        self.payload["target"]["primes"] = [3]
        with pytest.raises(InputValidationError):
            validate_payload(HeartMorphismFixture, self.payload)

    def test_composite_primes_rejected(self):
        """Only primes are allowed."""
        self.payload["source"]["primes"] = [4]
        with pytest.raises(InputValidationError):
            validate_payload(HeartMorphismFixture, self.payload)


class TestModuleFixtures:
    def test_vertex_summand_must_be_projective(self):
        """A summand of R with pd 1 is rejected."""
        with pytest.raises(InputValidationError):
            validate_payload(VertexFixture, {"name": "eR", "pd": 1, "injdim": 2, "r_summand": True})

    def test_triple_module(self):
        """A triple module fixture builds the module it describes."""
        fixture = TripleModuleFixture.from_module(paired_cyclic(2, 3))
        assert fixture.exponents == [3]
        assert fixture.to_module() == paired_cyclic(2, 3)

    def test_triple_module_checks(self):
        """Unsorted exponents and composite p are rejected."""
        with pytest.raises(InputValidationError):
            validate_payload(TripleModuleFixture, {"p": 2, "l": 0, "exponents": [2, 1]})
        with pytest.raises(InputValidationError):
            validate_payload(TripleModuleFixture, {"p": 6, "l": 0})


class TestReport:
    def test_passed_is_computed(self):
        """passed is true only when every verdict passes and is serialized."""
        report = Report(
            command="snf",
            verdicts=[Verdict(name="a", passed=True), Verdict(name="b", passed=False)],
            provenance=Provenance(command="snf"),
        )
        assert not report.passed
        payload = json.loads(report.model_dump_json())
        assert payload["passed"] is False
        assert payload["schema_version"] == 1

    def test_empty_report_passes(self):
        """A report without verdicts passes."""
        assert Report(command="group", provenance=Provenance(command="group")).passed
