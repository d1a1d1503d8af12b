"""
Tests for finitely generated abelian groups and their homomorphisms.
"""

import pytest
from hypothesis import given

from src.abgrp.groups import (
    FgAbGroup,
    GroupHom,
    cokernel_group,
    direct_sum,
    hom_kernel_cokernel_image,
    primary_decomposition,
    subgroup,
)
from src.abgrp.matrix import IntMatrix
from src.utils.error_handling import EndpointMismatchError, FixtureParseError, InputValidationError
from tests.conftest import groups


class TestFgAbGroup:
    def test_parse_recanonicalizes(self):
        """Terms in any order are brought into invariant-factor form."""
        g = FgAbGroup.parse("Z/6 + Z^2 + Z/4")
        assert g == FgAbGroup(2, (2, 12))
        assert str(g) == "Z^2 + Z/2 + Z/12"

    def test_parse_trivial_forms(self):
        """'0' and Z/1 both give the trivial group."""
        assert FgAbGroup.parse("0").is_trivial
        assert FgAbGroup.parse("Z/1").is_trivial
        assert str(FgAbGroup()) == "0"
        assert str(FgAbGroup.free(1)) == "Z"

    def test_parse_rejects_garbage(self):
        """Unknown terms and empty text are parse errors."""
        with pytest.raises(FixtureParseError):
            FgAbGroup.parse("Q")
        with pytest.raises(FixtureParseError):
            FgAbGroup.parse("  ")

    def test_constructor_checks_chain(self):
        """Invariant factors must be at least 2 and divide each other."""
        with pytest.raises(InputValidationError):
            FgAbGroup(0, (4, 6))
        with pytest.raises(InputValidationError):
            FgAbGroup(0, (1,))
        with pytest.raises(InputValidationError):
            FgAbGroup(-1)

    def test_cyclic_special_cases(self):
        """Z/0 is Z and Z/1 is trivial."""
        assert FgAbGroup.cyclic(0) == FgAbGroup.free(1)
        assert FgAbGroup.cyclic(1).is_trivial
        assert FgAbGroup.cyclic(5).order == 5

    def test_order_and_exponent(self):
        """Finite groups report order and exponent, infinite ones None and 0."""
        g = FgAbGroup(0, (2, 12))
        assert g.order == 24
        assert g.exponent == 12
        assert FgAbGroup.free(1).order is None
        assert FgAbGroup.free(1).exponent == 0

    def test_primary_decomposition(self):
        """Z/12 + Z/36 splits into 2- and 3-primary parts."""
        g = FgAbGroup(0, (12, 36))
        assert primary_decomposition(g) == {2: [4, 4], 3: [3, 9]}
        assert FgAbGroup.from_elementary_divisors(0, [4, 4, 3, 9]) == g

    @given(groups())
    def test_primary_decomposition_rebuilds(self, g):
        """Elementary divisors rebuild the same canonical group."""
        powers = [q for qs in primary_decomposition(g).values() for q in qs]
        assert FgAbGroup.from_elementary_divisors(g.rank, powers) == g


class TestCokernel:
    def test_diagonal_relations(self):
        """Relations 2e1, 3e2 present Z/6."""
        assert cokernel_group(IntMatrix.from_rows([[2, 0], [0, 3]])) == FgAbGroup.cyclic(6)

    def test_free_generators_survive(self):
        """A generator without relations stays free."""
        assert cokernel_group(IntMatrix.from_rows([[2], [0]])) == FgAbGroup(1, (2,))

    def test_no_relations(self):
        """Three generators and no relations give Z^3."""
        assert cokernel_group(IntMatrix.zeros(3, 0)) == FgAbGroup.free(3)


class TestGroupHom:
    def setup_method(self):
        self.z4 = FgAbGroup.cyclic(4)
        self.z = FgAbGroup.free(1)

    def test_multiplication_by_two_on_z4(self):
        """2 on Z/4 has kernel, image and cokernel Z/2."""
        result = hom_kernel_cokernel_image(GroupHom.scalar(self.z4, 2))
        assert result.kernel == FgAbGroup.cyclic(2)
        assert result.image == FgAbGroup.cyclic(2)
        assert result.cokernel == FgAbGroup.cyclic(2)

    def test_multiplication_by_two_on_z(self):
        """2 on Z is injective with cokernel Z/2."""
        h = GroupHom.scalar(self.z, 2)
        assert h.is_injective()
        assert not h.is_surjective()
        assert hom_kernel_cokernel_image(h).cokernel == FgAbGroup.cyclic(2)

    def test_structure_maps_compose_to_zero(self):
        """h ∘ ker = 0 and coker ∘ h = 0."""
        h = GroupHom.scalar(self.z4, 2)
        result = hom_kernel_cokernel_image(h)
        assert (h @ result.kernel_inclusion).is_zero()
        assert (result.cokernel_projection @ h).is_zero()
        assert result.image_inclusion @ result.coimage_projection == h

    def test_ill_defined_map_rejected(self):
        """A generator of order 4 cannot go to a generator of Z/3."""
        with pytest.raises(InputValidationError):
            GroupHom(self.z4, FgAbGroup.cyclic(3), IntMatrix.from_rows([[1]]))

    def test_composition_checks_endpoints(self):
        """Composing maps that do not chain raises."""
        with pytest.raises(EndpointMismatchError):
            GroupHom.identity(self.z4) @ GroupHom.identity(self.z)

    def test_subgroup_generated_by_element(self):
        """2 in Z/12 generates a copy of Z/6."""
        sub = subgroup(FgAbGroup.cyclic(12), IntMatrix.from_rows([[2]]))
        assert sub.group == FgAbGroup.cyclic(6)
        assert sub.inclusion.is_injective()


class TestDirectSum:
    def test_coprime_sum_is_cyclic(self):
        """Z/2 + Z/3 is Z/6."""
        total = direct_sum([FgAbGroup.cyclic(2), FgAbGroup.cyclic(3)])
        assert total.group == FgAbGroup.cyclic(6)

    def test_projection_after_injection_is_identity(self):
        """p_i ∘ ι_i is the identity and p_j ∘ ι_i vanishes."""
        parts = [FgAbGroup.cyclic(4), FgAbGroup(1, (2,))]
        total = direct_sum(parts)
        for i, g in enumerate(parts):
            for j, p in enumerate(total.projections):
                composite = p @ total.injections[i]
                if i == j:
                    assert composite == GroupHom.identity(g)
                else:
                    assert composite.is_zero()
