from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from seifert_sections import (InsertTrivial, Permute, SeifertData, Twist, apply_move,
                              rolfsen_twist, surgery_presentation)
from seifert_sections.surgery import SurgeryDiagram

from conftest import seifert_data, zero_sum_vectors

M = SeifertData.of


def test_presentation():
    diag = surgery_presentation(M(0, (2, 1), (3, -1)))
    assert diag == SurgeryDiagram(0, (Fraction(2), Fraction(-3)))
    assert diag.to_text() == "K0[0]; m1[2], m2[-3]"


def test_trivial_meridian():
    diag = surgery_presentation(M(0, (1, 0)))
    assert diag.meridian_coefficients == (None,)
    assert diag.to_text() == "K0[0]; m1[inf]"
    assert diag.without_trivial() == surgery_presentation(M(0))


def test_empty_is_s2xs1():
    assert surgery_presentation(M(0)).to_text() == "K0[0]"


def test_rejects_positive_genus():
    with pytest.raises(ValueError):
        surgery_presentation(M(1, (2, 1)))


def test_twist_example():
    diag = SurgeryDiagram(0, (Fraction(2), Fraction(3)))
    out = rolfsen_twist(diag, (1, -1))
    assert out == SurgeryDiagram(0, (Fraction(2, 3), Fraction(3, -2)))
    assert out.exportable


def test_zero_twist_identity():
    diag = surgery_presentation(M(0, (5, 3), (1, 0), (7, -2)))
    assert rolfsen_twist(diag, (0, 0, 0)) == diag


def test_unbalanced_twist_not_exportable():
    out = rolfsen_twist(SurgeryDiagram(0, (Fraction(2),)), (1,))
    assert out.k0_framing == 1 and not out.exportable
    assert out.meridian_coefficients == (Fraction(2, 3),)


def test_twist_through_infinity():
    # alpha = 1: 1/1 twisted by -1 is the trivial surgery 1/0
    out = rolfsen_twist(SurgeryDiagram(0, (Fraction(1), None)), (-1, 1))
    assert out.meridian_coefficients == (None, Fraction(1))


@given(st.data(), seifert_data(max_genus=0))
def test_commutes_with_twist_move(data, m):
    k = data.draw(zero_sum_vectors(m.n, bound=8))
    assert surgery_presentation(apply_move(m, Twist(k))) == rolfsen_twist(surgery_presentation(m), k)


@given(st.data(), seifert_data(max_genus=0))
def test_other_moves_are_diagram_moves(data, m):
    diag = surgery_presentation(m)
    perm = tuple(data.draw(st.permutations(range(m.n))))
    permuted = surgery_presentation(apply_move(m, Permute(perm)))
    assert permuted.meridian_coefficients == tuple(diag.meridian_coefficients[i] for i in perm)
    inserted = surgery_presentation(apply_move(m, InsertTrivial()))
    assert inserted.without_trivial() == diag.without_trivial()
