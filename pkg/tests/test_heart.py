"""
Tests for the tilted heart: objects, morphisms, Hom/Ext spaces, exactness
and tilting.
"""

import numpy as np
import pytest
from hypothesis import given
from hypothesis import strategies as st

from src.abgrp.ext import ExtElement
from src.abgrp.groups import FgAbGroup, GroupHom
from src.abgrp.matrix import IntMatrix
from src.heart.category import canonical_ses, compose, ext1_space, ext2_space, hom_space
from src.heart.complexes import TwoTermComplex
from src.heart.exact import cokernel, four_term_exactness, hom_exactness_probe, image, is_ses, kernel
from src.heart.models import HeartMorphism, HeartObject
from src.heart.sampling import random_morphism, random_object
from src.heart.tilting import embed_into_tilt, tilt_coresolution, verify_tilting_object
from src.torsion.pairs import PrimeSet
from src.utils.error_handling import (
    ClassMembershipError,
    EndpointMismatchError,
    FixtureParseError,
    InputValidationError,
    PrimeMismatchError,
)

Z = FgAbGroup.free(1)
ZERO = FgAbGroup()


class TestHeartObject:
    def setup_method(self):
        self.q = PrimeSet.of(2)

    def test_parse(self):
        """'F,T' parses both components."""
        x = HeartObject.parse(self.q, "Z + Z/3,Z/4")
        assert x.f == FgAbGroup(1, (3,))
        assert x.t == FgAbGroup.cyclic(4)
        assert str(x) == "(Z + Z/3, Z/4)"

    def test_parse_needs_two_parts(self):
        """A single component is a parse error."""
        with pytest.raises(FixtureParseError):
            HeartObject.parse(self.q, "Z")

    def test_class_membership_enforced(self):
        """f must be Q-torsion-free and t must be a Q-group."""
        with pytest.raises(ClassMembershipError):
            HeartObject(self.q, FgAbGroup.cyclic(2), ZERO)
        with pytest.raises(ClassMembershipError):
            HeartObject(self.q, ZERO, FgAbGroup.cyclic(3))
        with pytest.raises(ClassMembershipError):
            HeartObject(self.q, ZERO, Z)

    def test_zero_object(self):
        """The zero object has both parts trivial."""
        assert HeartObject.zero(self.q).is_zero
        assert not HeartObject(self.q, Z, ZERO).is_zero


class TestHeartMorphism:
    def setup_method(self):
        self.q = PrimeSet.of(2)
        self.x = HeartObject(self.q, Z, FgAbGroup.cyclic(2))

    def test_component_endpoints_checked(self):
        """Components must run between the matching parts."""
        with pytest.raises(EndpointMismatchError):
            HeartMorphism(
                self.x,
                self.x,
                GroupHom.identity(self.x.t),
                GroupHom.identity(self.x.t),
                ExtElement.zero(self.x.t, self.x.f),
            )

    def test_prime_sets_must_agree(self):
        """Objects over different prime sets do not mix."""
        other = HeartObject(PrimeSet.of(3), Z, ZERO)
        with pytest.raises(PrimeMismatchError):
            HeartMorphism.zero(self.x, other)

    def test_identity_is_neutral(self):
        """id ∘ m = m = m ∘ id."""
        y = HeartObject(self.q, Z, FgAbGroup.cyclic(4))
        for m in hom_space(self.x, y).basis:
            assert compose(HeartMorphism.identity(y), m) == m
            assert compose(m, HeartMorphism.identity(self.x)) == m

    def test_composition_checks_endpoints(self):
        """Morphisms that do not chain cannot be composed."""
        y = HeartObject(self.q, Z, ZERO)
        with pytest.raises(EndpointMismatchError):
            compose(HeartMorphism.identity(self.x), HeartMorphism.identity(y))

    def test_composition_is_associative(self, rng):
        """Random triples of composable morphisms associate."""
        for _ in range(5):
            objects = [random_object(rng, self.q, max_factor=16) for _ in range(4)]
            f, g, h = (random_morphism(rng, a, b) for a, b in zip(objects, objects[1:]))
            assert compose(h, compose(g, f)) == compose(compose(h, g), f)


class TestHomExtSpaces:
    def setup_method(self):
        self.q = PrimeSet.of(2)

    def test_end_of_shifted_z(self):
        """End((Z, 0)) is Z."""
        t0 = HeartObject(self.q, Z, ZERO)
        assert hom_space(t0, t0).group == Z

    def test_hom_uses_ext_block(self):
        """Hom((0, Z/2), (Z, 0)) = Ext¹(Z/2, Z) = Z/2."""
        space = hom_space(HeartObject(self.q, ZERO, FgAbGroup.cyclic(2)), HeartObject(self.q, Z, ZERO))
        assert space.group == FgAbGroup.cyclic(2)
        assert dict(space.components)["Ext1(t1,f2)"] == FgAbGroup.cyclic(2)

    def test_ext1_uses_hom_block(self):
        """Ext¹((Z, 0), (0, Z/2)) = Hom(Z, Z/2) = Z/2."""
        result = ext1_space(HeartObject(self.q, Z, ZERO), HeartObject(self.q, ZERO, FgAbGroup.cyclic(2)))
        assert result.group == FgAbGroup.cyclic(2)
        assert result.component("Hom(f1,t2)") == FgAbGroup.cyclic(2)

    def test_enumerate_morphisms(self):
        """Hom((0, Z/2), (0, Z/4)) has exactly two elements."""
        x = HeartObject(self.q, ZERO, FgAbGroup.cyclic(2))
        y = HeartObject(self.q, ZERO, FgAbGroup.cyclic(4))
        assert len(list(hom_space(x, y).morphisms())) == 2

    @given(st.integers(0, 2**32 - 1))
    def test_ext2_always_vanishes(self, seed):
        """Ext² between random objects vanishes with coprime certificates."""
        rng = np.random.default_rng(seed)
        q = PrimeSet.of(2, 3)
        result = ext2_space(random_object(rng, q, max_factor=36), random_object(rng, q, max_factor=36))
        assert result.vanishes


class TestExactness:
    def test_multiplication_by_p(self):
        """Multiplication by 2 on (Z, 0) has kernel (0, Z/2) and no cokernel for Q = {2}."""
        q = PrimeSet.of(2)
        m = HeartMorphism.scalar(HeartObject(q, Z, ZERO), 2)
        kernel_obj, k = kernel(m)
        cokernel_obj, _ = cokernel(m)
        assert kernel_obj == HeartObject(q, ZERO, FgAbGroup.cyclic(2))
        assert cokernel_obj.is_zero
        assert is_ses(k, m).holds

    def test_multiplication_by_prime_outside_q(self):
        """For Q = {3}, 2 on (Z, 0) is monic with cokernel (Z/2, 0)."""
        q = PrimeSet.of(3)
        m = HeartMorphism.scalar(HeartObject(q, Z, ZERO), 2)
        assert kernel(m)[0].is_zero
        assert cokernel(m)[0] == HeartObject(q, FgAbGroup.cyclic(2), ZERO)

    def test_canonical_sequence_is_exact(self):
        """0 -> (f, 0) -> x -> (0, t) -> 0 is exact."""
        x = HeartObject(PrimeSet.of(2), FgAbGroup(1, (3,)), FgAbGroup.cyclic(4))
        seq = canonical_ses(x)
        assert is_ses(seq.inclusion, seq.projection).holds

    def test_image_factorization(self):
        """m = mono ∘ epi through the image."""
        q = PrimeSet.of(2)
        x = HeartObject(q, Z, FgAbGroup.cyclic(4))
        m = HeartMorphism.scalar(x, 2)
        factorization = image(m)
        assert compose(factorization.mono, factorization.epi) == m

    def test_four_term_sequences(self, rng):
        """Random morphisms have exact kernel-image-cokernel sequences."""
        q = PrimeSet.of(2, 3)
        for _ in range(5):
            x, y = random_object(rng, q, max_factor=36), random_object(rng, q, max_factor=36)
            verdict = four_term_exactness(random_morphism(rng, x, y))
            assert verdict.holds, verdict.failed

    def test_hom_is_left_exact(self):
        """Hom(w, -) is left exact on the canonical sequence of w."""
        w = HeartObject(PrimeSet.of(2), FgAbGroup(1, (3,)), FgAbGroup.cyclic(4))
        seq = canonical_ses(w)
        assert hom_exactness_probe(w, seq.inclusion, seq.projection).holds

    def test_non_exact_sequence_detected(self):
        """Two identities do not form a short exact sequence."""
        x = HeartObject(PrimeSet.of(2), Z, ZERO)
        verdict = is_ses(HeartMorphism.identity(x), HeartMorphism.identity(x))
        assert not verdict.holds
        assert "composite_zero" in verdict.failed


class TestTilting:
    @pytest.mark.parametrize("q", [PrimeSet(), PrimeSet.of(2), PrimeSet.of(2, 3)])
    def test_shifted_z_is_tilting(self, q):
        """(Z, 0) passes all four conditions."""
        report = verify_tilting_object(HeartObject(q, Z, ZERO))
        assert report.passed
        assert [c.name for c in report.conditions] == [
            "projective_dimension",
            "ext1_self_vanishes",
            "generates",
            "finitely_generated_over_end",
        ]

    def test_torsion_candidate_fails_rigidity(self):
        """(0, Z/2) has self-extensions."""
        report = verify_tilting_object(HeartObject(PrimeSet.of(2), ZERO, FgAbGroup.cyclic(2)))
        assert not report.passed
        assert not report.condition("ext1_self_vanishes").passed

    def test_embedding_is_monic(self):
        """(0, Z/4) embeds into (Z, 0)."""
        x = HeartObject(PrimeSet.of(2), ZERO, FgAbGroup.cyclic(4))
        embedding = embed_into_tilt(x)
        assert embedding.obj == HeartObject(x.q, Z, ZERO)
        assert kernel(embedding.mono)[0].is_zero

    def test_coresolution(self):
        """(0, Z/4) has the coresolution 0 -> x -> (Z, 0) -> (Z, 0) -> 0."""
        x = HeartObject(PrimeSet.of(2), ZERO, FgAbGroup.cyclic(4))
        coresolution = tilt_coresolution(x)
        assert coresolution.holds
        assert coresolution.second == HeartObject(x.q, Z, ZERO)


class TestTwoTermComplex:
    def setup_method(self):
        self.q = PrimeSet.of(2)

    def test_normalize(self):
        """Z^2 -(2, 0)-> Z has homology Z in degree -1 and Z/2 in degree 0."""
        d = GroupHom(FgAbGroup.free(2), Z, IntMatrix.from_rows([[2, 0]]))
        normalization = TwoTermComplex(d).normalize(self.q)
        assert normalization.obj == HeartObject(self.q, Z, FgAbGroup.cyclic(2))
        assert len(normalization.lifts1) == 1

    def test_degree_zero_must_be_free(self):
        """C⁰ must be a free group."""
        with pytest.raises(InputValidationError):
            TwoTermComplex(GroupHom(Z, FgAbGroup.cyclic(2), IntMatrix.from_rows([[1]])))

    def test_homology_outside_heart(self):
        """Z -3-> Z has H⁰ = Z/3, which is not a {2}-group."""
        with pytest.raises(ClassMembershipError):
            TwoTermComplex(GroupHom.scalar(Z, 3)).normalize(self.q)
