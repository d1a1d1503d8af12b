"""
Tests for Hom and Ext¹ over the integers, checked against brute force.
"""

from math import gcd

import pytest
from hypothesis import given

from src.abgrp.ext import (
    ExtElement,
    ext_group,
    ext_pullback,
    ext_pushout,
    extension_class,
    higher_ext_group,
    realize_extension,
)
from src.abgrp.groups import FgAbGroup, GroupHom
from src.abgrp.hom import hom_group
from src.abgrp.matrix import IntMatrix
from src.abgrp.oracles import brute_force_hom_count, functor_law_failures
from src.utils.error_handling import BoundExceededError, InfiniteGroupError, InputValidationError
from tests.conftest import finite_groups, groups


class TestHomGroup:
    @pytest.mark.parametrize("m,n", [(2, 4), (6, 9), (5, 7), (12, 18)])
    def test_cyclic_hom_is_gcd(self, m, n):
        """Hom(Z/m, Z/n) has order gcd(m, n)."""
        assert hom_group(FgAbGroup.cyclic(m), FgAbGroup.cyclic(n)).group.order == gcd(m, n)

    def test_free_source_and_target(self):
        """Hom(Z, B) = B and Hom(Z/a, Z) = 0."""
        b = FgAbGroup(1, (6,))
        assert hom_group(FgAbGroup.free(1), b).group == b
        assert hom_group(FgAbGroup.cyclic(5), FgAbGroup.free(1)).group.is_trivial

    @given(finite_groups(), finite_groups())
    def test_order_matches_brute_force(self, a, b):
        """The block formula agrees with enumeration on finite groups."""
        assert hom_group(a, b).group.order == brute_force_hom_count(a, b)

    @given(groups(max_rank=1, max_factor=12, max_factors=2), groups(max_rank=1, max_factor=12, max_factors=2))
    def test_basis_has_unit_coordinates(self, a, b):
        """The k-th basis map has the k-th generator as coordinates."""
        hom = hom_group(a, b)
        for k, h in enumerate(hom.basis):
            assert hom.coordinates(h) == hom.group.generator(k)

    def test_identity_coordinates(self):
        """The identity of Z/6 is a generator of End(Z/6)."""
        g = FgAbGroup.cyclic(6)
        hom = hom_group(g, g)
        assert hom.element(hom.coordinates(GroupHom.identity(g))) == GroupHom.identity(g)


class TestExtGroup:
    def test_known_values(self):
        """Ext(Z/m, Z) = Z/m, Ext(Z, -) = 0 and Ext(Z/4, Z/6) = Z/2."""
        assert ext_group(FgAbGroup.cyclic(5), FgAbGroup.free(1)).group == FgAbGroup.cyclic(5)
        assert ext_group(FgAbGroup.free(1), FgAbGroup.cyclic(3)).group.is_trivial
        assert ext_group(FgAbGroup.cyclic(4), FgAbGroup.cyclic(6)).group == FgAbGroup.cyclic(2)

    def test_higher_ext_vanishes(self):
        """Ext^n over Z vanishes for n >= 2 and negative degrees are refused."""
        t, f = FgAbGroup.cyclic(4), FgAbGroup.cyclic(2)
        assert higher_ext_group(0, t, f) == hom_group(t, f).group
        assert higher_ext_group(1, t, f) == ext_group(t, f).group
        assert higher_ext_group(2, t, f).is_trivial
        with pytest.raises(InputValidationError):
            higher_ext_group(-1, t, f)

    def test_coordinate_count_checked(self):
        """One coordinate per torsion factor of t is required."""
        with pytest.raises(InputValidationError):
            ExtElement(FgAbGroup.cyclic(2), FgAbGroup.cyclic(2), ())

    def test_non_split_extension_of_z2_by_z2(self):
        """The non-zero class of Ext(Z/2, Z/2) is realized by Z/4."""
        t = f = FgAbGroup.cyclic(2)
        e = ext_group(t, f).basis[0]
        extension = realize_extension(e)
        assert extension.middle == FgAbGroup.cyclic(4)
        assert extension.inclusion.is_injective()
        assert extension.projection.is_surjective()
        assert extension_class(extension.inclusion, extension.projection) == e

    def test_split_extension(self):
        """The zero class is realized by the direct sum."""
        t = f = FgAbGroup.cyclic(2)
        extension = realize_extension(ExtElement.zero(t, f))
        assert extension.middle == FgAbGroup(0, (2, 2))

    def test_pushout_along_multiplication(self):
        """Pushing the Z/4 class along 2 on Z/2 kills it."""
        t = f = FgAbGroup.cyclic(2)
        e = ext_group(t, f).basis[0]
        assert ext_pushout(e, GroupHom.scalar(f, 2)).is_zero()
        assert not ext_pushout(e, GroupHom.identity(f)).is_zero()

    def test_pushout_along_reduction(self):
        """The nonzero class in Ext¹(Z/3, Z) stays nonzero after reducing Z to Z/3."""
        e = ext_group(FgAbGroup.cyclic(3), FgAbGroup.free(1)).basis[0]
        reduction = GroupHom(FgAbGroup.free(1), FgAbGroup.cyclic(3), IntMatrix.from_rows([[1]]))
        pushed = ext_pushout(e, reduction)
        assert not pushed.is_zero()
        assert realize_extension(pushed).middle == FgAbGroup.cyclic(9)

    def test_pullback_along_surjection(self):
        """Pulling Ext¹(Z/2, Z) back along Z/4 -> Z/2 gives the class 2 in Ext¹(Z/4, Z)."""
        e = ext_group(FgAbGroup.cyclic(2), FgAbGroup.free(1)).basis[0]
        surjection = GroupHom(FgAbGroup.cyclic(4), FgAbGroup.cyclic(2), IntMatrix.from_rows([[1]]))
        assert ext_pullback(e, surjection).coords == ((2,),)
        assert ext_pullback(e, GroupHom.identity(e.t)) == e

    def test_functor_laws(self, rng):
        """Pushout and pullback satisfy the functor laws on random instances."""
        assert functor_law_failures(rng, 25) == []


class TestBruteForceOracle:
    def test_infinite_groups_refused(self):
        """Enumeration needs finite groups."""
        with pytest.raises(InfiniteGroupError):
            brute_force_hom_count(FgAbGroup.free(1), FgAbGroup.cyclic(2))

    def test_bound_enforced(self):
        """Groups above the bound raise with the bound recorded."""
        with pytest.raises(BoundExceededError) as excinfo:
            brute_force_hom_count(FgAbGroup.cyclic(101), FgAbGroup.cyclic(2), bound=100)
        assert excinfo.value.bound == 100
        assert excinfo.value.requested == 101
