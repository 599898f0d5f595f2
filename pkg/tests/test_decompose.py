"""Coordinate expansions and the central-factor decomposition."""

from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from quatpoly import (
    HAMILTON,
    CentralPoly,
    PreconditionError,
    QPoly,
    beck_decompose,
    center_coordinates,
    commutes,
    eval_right,
    max_central_right_divisor,
    rational_roots,
    right_divrem,
    roots_in_center,
    subfield_coordinates,
    subfield_gcd,
    transverse_unit_for,
)

from conftest import DIVISION_ALGEBRAS, qpolys, quaternions

algebras = st.sampled_from(DIVISION_ALGEBRAS)


class TestCenterCoordinates:
    @given(algebras, st.data())
    @settings(max_examples=60)
    def test_recombine_round_trip(self, A, data):
        p = data.draw(qpolys(A, max_degree=6))
        coords = center_coordinates(p)
        assert coords.recombine() == p

    def test_parts_read_off_components(self):
        A = HAMILTON
        p = QPoly(A, [A.quat(1, 2, 3, 4), A.quat(0, -1, 0, Fraction(1, 2))])
        coords = center_coordinates(p)
        assert coords.scalar_part == CentralPoly((Fraction(1),))
        assert coords.i_part == CentralPoly((Fraction(2), Fraction(-1)))
        assert coords.j_part == CentralPoly((Fraction(3),))
        assert coords.k_part == CentralPoly((Fraction(4), Fraction(1, 2)))


class TestBeckDecomposition:
    @given(algebras, st.data())
    @settings(max_examples=80)
    def test_round_trip_and_normalization(self, A, data):
        p = data.draw(qpolys(A, max_degree=6).filter(lambda f: not f.is_zero))
        beck = beck_decompose(p)
        assert beck.recombine() == p
        assert beck.leading == p.leading
        assert beck.reduced.is_monic
        assert beck.central.is_monic
        # the quotient has no nonconstant central right divisor left
        assert max_central_right_divisor(beck.reduced).degree == 0

    def test_central_factor_can_exceed_the_visible_one(self):
        # (x^2 + 1) x is divisible by the central x, but its maximal
        # central right divisor is the full product x^3 + x
        A = HAMILTON
        x = QPoly.x(A)
        p = (x * x + QPoly.constant(A.one)) * x
        beck = beck_decompose(p)
        assert beck.central == CentralPoly((0, 1, 0, 1))
        assert beck.reduced == QPoly.constant(A.one)
        assert beck.leading == A.one
        # the visible right factor divides, with strictly smaller degree
        _, rem = right_divrem(p, x)
        assert rem.is_zero
        assert x.degree < beck.central.degree

    def test_no_central_divisor(self):
        A = HAMILTON
        p = QPoly(A, [-A.i, A.one])
        beck = beck_decompose(p)
        assert beck.central == CentralPoly((1,))
        assert beck.reduced == p

    def test_zero_rejected(self):
        with pytest.raises(PreconditionError):
            beck_decompose(QPoly(HAMILTON, []))

    @given(st.data())
    @settings(max_examples=40)
    def test_planted_central_factor_recovered(self, data):
        g = data.draw(qpolys(max_degree=3).filter(lambda f: not f.is_zero))
        r = data.draw(st.fractions(min_value=-4, max_value=4, max_denominator=3))
        central = CentralPoly((-r, 1))
        beck = beck_decompose(g * central.lift(HAMILTON))
        assert central.divides(beck.central)


class TestRationalRoots:
    def test_integer_and_fraction_roots(self):
        # (2x - 3)(x + 2) x
        p = CentralPoly((0, -6, 1, 2))
        assert rational_roots(p) == [Fraction(-2), Fraction(0), Fraction(3, 2)]

    def test_no_rational_roots(self):
        assert rational_roots(CentralPoly((1, 0, 1))) == []

    def test_pure_power_of_x(self):
        assert rational_roots(CentralPoly((0, 0, 1))) == [Fraction(0)]

    def test_zero_poly_rejected(self):
        with pytest.raises(PreconditionError):
            rational_roots(CentralPoly())

    @given(st.lists(st.fractions(min_value=-6, max_value=6, max_denominator=4),
                    min_size=1, max_size=4))
    @settings(max_examples=50)
    def test_planted_roots_found(self, roots):
        p = CentralPoly((1,))
        for r in roots:
            p = p * CentralPoly((-r, 1))
        assert rational_roots(p) == sorted(set(roots))


class TestRootsInCenter:
    def test_central_roots_of_mixed_product(self):
        A = HAMILTON
        x = QPoly.x(A)
        p = (x - QPoly.constant(A.i)) * (x + QPoly.constant(A.one)) ** 2
        assert roots_in_center(p) == [Fraction(-1)]

    @given(st.data())
    @settings(max_examples=40)
    def test_planted_central_root(self, data):
        g = data.draw(qpolys(max_degree=3).filter(lambda f: not f.is_zero))
        r = data.draw(st.fractions(min_value=-4, max_value=4, max_denominator=3))
        p = g * QPoly(HAMILTON, [HAMILTON.scalar(-r), HAMILTON.one])
        assert r in roots_in_center(p)
        assert eval_right(p, HAMILTON.scalar(r)).is_zero


class TestSubfieldExpansion:
    def test_transverse_unit(self):
        A = HAMILTON
        u = transverse_unit_for(A.i)
        assert not commutes(u, A.i)
        with pytest.raises(PreconditionError):
            transverse_unit_for(A.one)

    @given(st.data())
    @settings(max_examples=60)
    def test_recombine_and_membership(self, data):
        A = HAMILTON
        p = data.draw(qpolys(A, max_degree=5))
        s = data.draw(quaternions(A).filter(lambda q: not q.is_central))
        coords = subfield_coordinates(p, s)
        assert coords.recombine() == p
        for c in coords.aligned.coeffs:
            assert commutes(c, s)
        for c in coords.transverse.coeffs:
            assert commutes(c, s)

    def test_dependent_unit_rejected(self):
        A = HAMILTON
        with pytest.raises(PreconditionError):
            subfield_coordinates(QPoly.x(A), A.i, u=A.i)

    def test_subfield_gcd_collects_subfield_roots(self):
        A = HAMILTON
        x = QPoly.x(A)
        p = (x - QPoly.constant(A.i)) * (x - QPoly.constant(A.j))
        coords = subfield_coordinates(p, A.j)
        g = subfield_gcd(coords)
        # j is a right root of P lying in F(j), so the gcd vanishes there
        assert eval_right(p, A.j).is_zero
        assert eval_right(g, A.j).is_zero
        assert g.is_monic
        for c in g.coeffs:
            assert commutes(c, A.j)

    def test_subfield_gcd_zero_pair_rejected(self):
        A = HAMILTON
        coords = subfield_coordinates(QPoly(A, []), A.i)
        with pytest.raises(PreconditionError):
            subfield_gcd(coords)
