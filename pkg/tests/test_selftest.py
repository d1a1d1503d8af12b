"""
Tests for the acceptance suite behind ``hrs-tilt selftest``.
"""

import pytest

from src.cli import selftest
from src.cli.selftest import (
    CRITERIA,
    Depth,
    ac1_hom_ext_oracle,
    ac2_torsion_pairs,
    ac4_multiplication_by_p,
    ac5_tilting_object,
    ac9_example_modules,
    run_selftest,
    triples,
)
from src.config import settings
from src.exring73.modules import name_of
from src.utils.error_handling import InputValidationError

SEED = settings.DEFAULT_SEED


class TestCriteria:
    def setup_method(self):
        self.depth = Depth.of("quick")

    def test_depths(self):
        """quick shrinks every range relative to full."""
        full = Depth.of("full")
        assert self.depth.hom_ext_range < full.hom_ext_range
        assert self.depth.max_l < full.max_l
        assert full.torsion_samples == settings.TORSION_SAMPLE_SIZE

    def test_hom_ext_oracle(self):
        """Hom and Ext of cyclic groups match gcd and enumeration."""
        passed, detail = ac1_hom_ext_oracle(self.depth, SEED)
        assert passed, detail
        assert detail["failure_count"] == 0

    def test_torsion_pairs_are_seeded(self):
        """The torsion criterion passes and repeats exactly under one seed."""
        first = ac2_torsion_pairs(self.depth, SEED)
        assert first[0], first[1]
        assert first == ac2_torsion_pairs(self.depth, SEED)
        assert first[1]["groups"] == self.depth.torsion_samples * 4

    def test_multiplication_and_tilting(self):
        """Multiplication by p and the tilting object checks pass."""
        assert ac4_multiplication_by_p(self.depth, SEED)[0]
        assert ac5_tilting_object(self.depth, SEED)[0]

    def test_triples_cover_classification(self):
        """The quick module list contains S and both cyclic families."""
        names = {name_of(m) for m in triples(2, self.depth)}
        assert {"S", "eR", "fR", "gR", "(0,Z/p^3,0)", "(F_p,Z/p^2,incl)"} <= names

    def test_triples_start_with_zero_module(self):
        """The enumeration includes the zero module, first."""
        assert triples(2, self.depth)[0].is_zero

    def test_example_modules(self):
        """Decomposition, pd and injdim agree on every quick module."""
        passed, detail = ac9_example_modules(self.depth, SEED)
        assert passed, detail
        assert detail["modules"] == len(triples(settings.EXAMPLE_PRIME, self.depth))


class TestRunSelftest:
    def test_quick_suite(self):
        """Every criterion and the determinism check pass at quick depth."""
        verdicts, results = run_selftest("quick", SEED)
        assert [name for name, _, _ in verdicts] == [name for name, _ in CRITERIA] + ["AC10"]
        assert all(passed for _, passed, _ in verdicts), [v for v in verdicts if not v[1]]
        assert results["depth"] == "quick"
        assert all(c["passed"] for c in results["criteria"])

    @pytest.mark.slow
    def test_full_suite(self):
        """The full suite passes."""
        verdicts, _ = run_selftest("full", SEED)
        assert all(passed for _, passed, _ in verdicts)

    def test_raising_criterion_keeps_suite_going(self, mocker):
        """An engine error fails its criterion and the later ones still run."""

        def passing(depth, seed):
            return True, {"seed": seed}

        def raising(depth, seed):
            raise InputValidationError("bad module", field="phi")

        mocker.patch.object(
            selftest, "CRITERIA", (("AC1", passing), ("AC2", raising), ("AC3", passing))
        )
        verdicts, results = run_selftest("quick", SEED)

        assert [name for name, _, _ in verdicts] == ["AC1", "AC2", "AC3", "AC10"]
        assert verdicts[1] == (
            "AC2",
            False,
            {"error": "InputValidationError", "message": "bad module", "field": "phi"},
        )
        assert verdicts[2][1]
        assert verdicts[3] == ("AC10", False, {"deterministic": True})
        assert [c["passed"] for c in results["criteria"]] == [True, False, True, False]

    def test_tags_name_the_depth_run(self, mocker):
        """Each criterion is tagged with the depth it was evaluated at."""
        mocker.patch.object(selftest, "CRITERIA", (("AC1", lambda depth, seed: (True, {})),))
        _, results = run_selftest("full", SEED)
        assert [c["tags"] for c in results["criteria"]] == [["full"], ["full"]]
