"""
Tests for modules over the triangular ring [[Z_p, Z_p], [0, Z_(p)]].
"""

import pytest

from src.abgrp.groups import FgAbGroup
from src.abgrp.matrix import IntMatrix
from src.exring73.decompose import (
    decompose,
    has_nontrivial_idempotent,
    invariants,
    is_projective,
    summand_invariants,
    verify_reassembly,
)
from src.exring73.dimensions import (
    injdim_triple,
    pd_triple,
    projective_dimension_by_syzygies,
    standard_sequence,
)
from src.exring73.fixtures import enumerate_indecomposables, to_homquiver
from src.exring73.homs import TripleHom, ext1_triples, hom_triples, localize
from src.exring73.modules import (
    TripleModule,
    direct_sum_triples,
    e_r,
    f_r,
    g_r,
    name_of,
    paired_cyclic,
    simple_s,
    torsion_cyclic,
)
from src.utils.error_handling import InputValidationError, PrimeMismatchError

P = 2


class TestTripleModule:
    def test_names_of_indecomposables(self):
        """Every family of the classification has its name."""
        assert name_of(simple_s(P)) == "S"
        assert name_of(e_r(P)) == "eR"
        assert name_of(f_r(P)) == "fR"
        assert name_of(g_r(P)) == "gR"
        assert name_of(torsion_cyclic(P, 3)) == "(0,Z/p^3,0)"
        assert name_of(paired_cyclic(P, 2)) == "(F_p,Z/p^2,incl)"

    def test_sum_has_no_name(self):
        """A decomposable module is not named."""
        assert name_of(direct_sum_triples([simple_s(P), simple_s(P)])) == ""

    def test_build_validates(self):
        """Bad primes, unsorted exponents and misshapen φ are rejected."""
        with pytest.raises(InputValidationError):
            TripleModule.build(4, 1)
        with pytest.raises(InputValidationError):
            TripleModule.build(P, 0, 0, (2, 1))
        with pytest.raises(InputValidationError):
            TripleModule.build(P, 2, 0, (1,), [[1]])

    def test_sum_over_different_primes(self):
        """Direct sums need a common prime."""
        with pytest.raises(PrimeMismatchError):
            direct_sum_triples([simple_s(2), simple_s(3)])

    def test_localize_keeps_p_part(self):
        """Z + Z/12 localizes at 2 to Z + Z/4."""
        assert localize(FgAbGroup(1, (12,)), 2) == FgAbGroup(1, (4,))


class TestHomExt:
    def test_hom_from_simple_into_er(self):
        """Hom(S, eR) = 0 while Hom(eR, S) ≠ 0."""
        assert hom_triples(simple_s(P), e_r(P)).is_zero
        assert not hom_triples(e_r(P), simple_s(P)).is_zero

    def test_hom_square_enforced(self):
        """(id, 0) from S to eR breaks the compatibility square."""
        with pytest.raises(InputValidationError):
            TripleHom(simple_s(P), e_r(P), IntMatrix.identity(1), IntMatrix.zeros(1, 0))

    def test_hom_into_module_without_l(self):
        """Maps into a target with L = 0 only need Soc(β)·φ1 = 0."""
        source, target = paired_cyclic(3, 2), torsion_cyclic(3, 3)
        h = TripleHom(source, target, IntMatrix.zeros(0, 1), IntMatrix.from_rows([[9]], cols=1))
        assert not h.is_zero()
        with pytest.raises(InputValidationError):
            TripleHom(source, target, IntMatrix.zeros(0, 1), IntMatrix.from_rows([[3]], cols=1))
        assert hom_triples(paired_cyclic(P, 2), torsion_cyclic(P, 3)).group == FgAbGroup(0, (2,))

    def test_ext_into_module_without_l(self):
        """Ext¹ into (0, Z/p^r, 0) is computed and vanishes from eR."""
        assert ext1_triples(e_r(3), torsion_cyclic(3, 2)).is_zero
        assert not ext1_triples(simple_s(3), torsion_cyclic(3, 2)).is_zero

    def test_basis_coordinates(self):
        """Basis homomorphisms have unit coordinates."""
        space = hom_triples(paired_cyclic(P, 2), torsion_cyclic(P, 3))
        for k, h in enumerate(space.basis):
            assert space.coordinates(h) == space.group.generator(k)

    def test_projectives_have_no_extensions(self):
        """Ext¹(eR, -) and Ext¹(fR, -) vanish."""
        for target in (simple_s(P), g_r(P), torsion_cyclic(P, 2)):
            assert ext1_triples(e_r(P), target).is_zero
            assert ext1_triples(f_r(P), target).is_zero

    def test_ext_from_simple_into_gr(self):
        """Ext¹(S, gR) ≠ 0."""
        assert not ext1_triples(simple_s(P), g_r(P)).is_zero

    def test_standard_sequence(self):
        """0 -> gR -> eR -> S -> 0 is exact and does not split."""
        seq = standard_sequence(P)
        assert seq.composite_zero
        assert seq.exact
        assert seq.non_split
        assert seq.section is None


class TestDecomposition:
    def test_simple_plus_gr(self):
        """φ = 0 on (F_p, Z/p) splits off S."""
        d = decompose(TripleModule.build(P, 1, 0, (1,), [[0]]))
        assert d.names == ["S", "gR"]
        assert verify_reassembly(d)

    def test_diagonal_socle_map(self):
        """L onto the diagonal of Z/p ⊕ Z/p^2 gives eR ⊕ (0, Z/p^2, 0)."""
        m = TripleModule.build(P, 1, 0, (1, 2), [[1], [1]])
        d = decompose(m)
        assert d.names == ["eR", "(0,Z/p^2,0)"]
        assert verify_reassembly(d)
        assert invariants(m) == summand_invariants(d)

    def test_mixed_module(self):
        """Free rank, kernel of φ and paired factors are all found."""
        m = TripleModule.build(P, 3, 1, (1, 3), [[1, 0, 1], [0, 1, 0]])
        d = decompose(m)
        assert d.count("S") == 1
        assert d.count("fR") == 1
        assert d.count("eR") == 1
        assert d.count("(F_p,Z/p^3,incl)") == 1
        assert verify_reassembly(d)
        assert invariants(m) == summand_invariants(d)

    def test_zero_module(self):
        """The zero module has no summands and reassembles to itself."""
        zero = TripleModule.build(P, 0)
        d = decompose(zero)
        assert d.summands == ()
        assert d.isomorphism.source == zero
        assert verify_reassembly(d)
        assert invariants(zero) == summand_invariants(d)

    def test_empty_direct_sum(self):
        """The empty sum is the zero module once a prime is given."""
        assert direct_sum_triples([], p=P).is_zero
        with pytest.raises(InputValidationError):
            direct_sum_triples([])

    def test_indecomposable(self):
        """A paired cyclic module is indecomposable and has no idempotents."""
        d = decompose(paired_cyclic(P, 3))
        assert d.is_indecomposable
        assert not has_nontrivial_idempotent(g_r(P))

    def test_projective(self):
        """eR ⊕ fR is projective and S is not."""
        assert is_projective(direct_sum_triples([e_r(P), f_r(P)]))
        assert not is_projective(simple_s(P))


class TestDimensions:
    @pytest.mark.parametrize(
        "module,pd",
        [
            (simple_s(P), 2),
            (e_r(P), 0),
            (f_r(P), 0),
            (g_r(P), 1),
            (torsion_cyclic(P, 2), 1),
            (paired_cyclic(P, 3), 1),
        ],
    )
    def test_projective_dimension(self, module, pd):
        """pd from the decomposition agrees with counting syzygies."""
        assert pd_triple(module) == pd
        assert projective_dimension_by_syzygies(module) == pd

    def test_injective_dimension(self):
        """S is injective and the other indecomposables have injdim 2."""
        assert injdim_triple(simple_s(P)).value == 0
        for module in (e_r(P), f_r(P), g_r(P), paired_cyclic(P, 2)):
            result = injdim_triple(module)
            assert result.value == 2
            assert all(not w.is_zero for w in result.witnesses)

    def test_simple_plus_gr(self):
        """An S summand forces pd 2."""
        assert pd_triple(direct_sum_triples([simple_s(P), g_r(P)])) == 2


class TestFixtures:
    def test_enumeration_order(self):
        """S, fR, the unpaired family, then the paired family."""
        names = [name_of(m) for m in enumerate_indecomposables(2, P)]
        assert names == ["S", "fR", "gR", "(0,Z/p^2,0)", "eR", "(F_p,Z/p^2,incl)"]

    def test_negative_bound(self):
        """Negative truncation bounds are rejected."""
        with pytest.raises(InputValidationError):
            enumerate_indecomposables(-1, P)

    def test_quiver(self):
        """The quiver marks eR and fR as summands of R and records pd and Hom."""
        q = to_homquiver(2, P)
        assert q.r_summands == frozenset({"eR", "fR"})
        assert q.vertex("S").pd == 2
        assert q.vertex("gR").pd == 1
        assert q.ext1("S", "gR")
        assert not q.hom("S", "eR")
        assert q.bound == 2
