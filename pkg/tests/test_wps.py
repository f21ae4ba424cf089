from fractions import Fraction
from itertools import product
from math import gcd

import pytest
from hypothesis import given
from hypothesis import strategies as st

from seifert_sections import (CurveSpec, WeightedPlane, admissible_d, admissible_degrees,
                              curve_section_correspondence, degree_genus, sphere_from_weights)
from seifert_sections.wps import SingularCurveError, default_roots

COPRIME = [(a, b) for a in range(1, 13) for b in range(1, 13) if gcd(a, b) == 1]


def brute_representations(a1, a2, d_max):
    out = set()
    for k, e1, e2 in product(range(d_max + 1), (0, 1), (0, 1)):
        d = k * a1 * a2 + e1 * a1 + e2 * a2
        if k + e1 + e2 >= 1 and d <= d_max:
            out.add((d, k, e1, e2))
    return out


class TestDegreeGenus:
    @pytest.mark.parametrize("d", range(1, 30))
    def test_plane(self, d):
        assert degree_genus(WeightedPlane(1, 1, 1), d) == Fraction((d - 1) * (d - 2), 2)

    def test_p123(self):
        assert degree_genus(WeightedPlane(1, 2, 3), 5) == 0
        assert degree_genus(WeightedPlane(1, 2, 3), 6) == 1

    def test_fractional_off_realizable_degrees(self):
        # with a0 = 1 the value is integral for every d; weights all > 1 are not
        assert all(degree_genus(WeightedPlane(1, 2, 3), d).denominator == 1 for d in range(1, 60))
        assert degree_genus(WeightedPlane(2, 3, 5), 1) == Fraction(-2, 15)
        assert degree_genus(WeightedPlane(2, 3, 5), 6) == Fraction(1, 5)

    @given(st.integers(1, 9), st.integers(1, 9), st.integers(1, 9), st.integers(1, 300))
    def test_denominator_divides(self, a0, a1, a2, d):
        if gcd(a0, a1) != 1 or gcd(a0, a2) != 1 or gcd(a1, a2) != 1:
            return
        g = degree_genus(WeightedPlane(a0, a1, a2), d)
        assert (2 * a0 * a1 * a2) % g.denominator == 0

    def test_rejects_non_coprime(self):
        with pytest.raises(ValueError):
            WeightedPlane(1, 2, 4)


class TestAdmissible:
    def test_2_3(self):
        reps = admissible_degrees(2, 3, 6)
        for r in [(2, 0, 1, 0), (3, 0, 0, 1), (5, 0, 1, 1), (6, 1, 0, 0)]:
            assert r in reps
        assert not any(r[0] == 1 for r in reps)

    def test_unit(self):
        assert {r[0] for r in admissible_degrees(1, 1, 3)} == {1, 2, 3}

    @pytest.mark.parametrize("a1, a2", COPRIME)
    def test_matches_brute_force(self, a1, a2):
        assert set(admissible_degrees(a1, a2, 120)) == brute_representations(a1, a2, 120)

    @pytest.mark.parametrize("a1, a2", COPRIME)
    def test_agrees_with_sphere_table(self, a1, a2):
        f = sphere_from_weights(a1, a2)
        plane = WeightedPlane(1, a1, a2)
        ds = {r[0] for r in admissible_degrees(a1, a2, 200)}
        for d in range(1, 201):
            row = admissible_d(f, d)
            assert (d in ds) == (row is not None)
            if row is not None:
                g = degree_genus(plane, d)
                assert g.denominator == 1 and g == row.genus


class TestCorrespondence:
    def test_both_boundary(self):
        s = curve_section_correspondence(CurveSpec(2, 3, 1, 1))
        assert s.d == 5 and s.c1_boundary and s.c2_boundary
        assert s.boundary_count == 2 and s.genus == 0

    @pytest.mark.parametrize("d", range(1, 15))
    def test_hopf(self, d):
        s = curve_section_correspondence(CurveSpec(1, 1, 0, 0, default_roots(d)))
        assert s.d == d and s.regular_boundary == d
        assert s.genus == (d - 1) * (d - 2) // 2

    def test_regular(self):
        s = curve_section_correspondence(CurveSpec(2, 3, 0, 0, ((1, 1),)))
        assert s.d == 6 and s.regular_boundary == 1 and s.boundary_count == 1 and s.genus == 1
        assert not (s.c1_boundary or s.c2_boundary)

    def test_eps_marks_fibres_like_table(self):
        # z1 | f gives d = alpha1 (+...): the C2-boundary family
        s = curve_section_correspondence(CurveSpec(2, 3, 1, 0))
        row = admissible_d(sphere_from_weights(2, 3), s.d)
        assert (s.c1_boundary, s.c2_boundary) == (row.c1_in_boundary, row.c2_in_boundary)

    def test_repeated_root_is_singular(self):
        with pytest.raises(SingularCurveError):
            CurveSpec(2, 3, 0, 0, ((1, 1), (1, 1)))
        # [1:1] and [-1:1] coincide in P(2,3): (-1)^3/1^2 != 1, so they differ;
        # [t^2 : t^3] with t = 2 is [4:8] ~ [1:1]
        with pytest.raises(SingularCurveError):
            CurveSpec(2, 3, 0, 0, ((1, 1), (4, 8)))
        CurveSpec(2, 3, 0, 0, ((1, 1), (-1, 1)))

    def test_orbifold_point_rejected(self):
        with pytest.raises(SingularCurveError):
            CurveSpec(2, 3, 0, 0, ((0, 1),))

    def test_k0_needs_eps(self):
        with pytest.raises(ValueError):
            CurveSpec(2, 3, 0, 0)

    @given(st.permutations([(1, 1), (1, 2), (2, 1), (3, 5)]))
    def test_root_order_irrelevant(self, roots):
        base = curve_section_correspondence(CurveSpec(2, 5, 1, 0, ((1, 1), (1, 2), (2, 1), (3, 5))))
        assert curve_section_correspondence(CurveSpec(2, 5, 1, 0, tuple(roots))) == base

    @pytest.mark.parametrize("a1, a2", COPRIME)
    def test_matches_table_rows(self, a1, a2):
        f = sphere_from_weights(a1, a2)
        for d, k, e1, e2 in admissible_degrees(a1, a2, 150):
            s = curve_section_correspondence(CurveSpec(a1, a2, e1, e2, default_roots(k)))
            row = admissible_d(f, d)
            assert s.genus == row.genus and s.boundary_count == row.boundary_count
            if a1 > 1:
                assert s.c1_boundary == row.c1_in_boundary
            if a2 > 1:
                assert s.c2_boundary == row.c2_in_boundary
