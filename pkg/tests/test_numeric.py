"""Floating-point backend: classification, healing, and agreement."""

import math
from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from quatpoly import (
    HAMILTON,
    CentralClassF,
    IsolatedRoot,
    NumericFailure,
    NumericSettings,
    PreconditionError,
    QPoly,
    QuatF,
    SphereClassF,
    SphericalRoots,
    agree_with_exact,
    classify_f64,
    companion_roots_f64,
    eval_f64,
    eval_right,
    parse_to_qpoly,
    roots_in_subfield_f64,
)

from conftest import quaternions, separated_class_product

A = HAMILTON


def entry_kinds(report):
    return sorted(type(status).__name__ for _, status in report.class_entries)


class TestQuatF:
    def test_from_exact_and_arithmetic(self):
        p = QuatF.from_exact(A.quat(1, 2, 3, 4))
        q = QuatF(0.5, -1.0, 0.0, 2.0)
        assert (p * q).norm() == pytest.approx(p.norm() * q.norm())
        assert (p + q - q).w == pytest.approx(p.w)

    def test_inverse(self):
        q = QuatF(1.0, 2.0, -1.0, 0.5)
        r = q * q.inverse()
        assert r.w == pytest.approx(1.0)
        assert abs(r.x) + abs(r.y) + abs(r.z) < 1e-12

    def test_zero_inverse_raises(self):
        with pytest.raises(ZeroDivisionError):
            QuatF(0.0, 0.0, 0.0, 0.0).inverse()

    def test_non_finite_rejected(self):
        with pytest.raises(PreconditionError):
            QuatF(float("nan"), 0.0, 0.0, 0.0)
        with pytest.raises(PreconditionError):
            QuatF(float("inf"), 0.0, 0.0, 0.0)

    @given(st.data())
    @settings(max_examples=30)
    def test_matches_exact_arithmetic(self, data):
        p = data.draw(quaternions(bound=5))
        q = data.draw(quaternions(bound=5))
        exact = QuatF.from_exact(p * q)
        approx = QuatF.from_exact(p) * QuatF.from_exact(q)
        assert math.isclose(exact.w, approx.w, rel_tol=1e-12, abs_tol=1e-12)
        assert math.isclose(exact.x, approx.x, rel_tol=1e-12, abs_tol=1e-12)


class TestEvalF64:
    @given(st.data())
    @settings(max_examples=40)
    def test_tracks_exact_evaluation(self, data):
        from conftest import qpolys

        poly = data.draw(qpolys(max_degree=4, bound=4))
        q = data.draw(quaternions(bound=3))
        exact = QuatF.from_exact(eval_right(poly, q))
        approx = eval_f64(poly, q)
        scale = 1.0 + max(abs(exact.w), abs(exact.x), abs(exact.y), abs(exact.z))
        assert abs(exact.w - approx.w) <= 1e-9 * scale
        assert abs(exact.z - approx.z) <= 1e-9 * scale


class TestClassifyF64:
    def test_central_roots_of_cubic(self):
        rep = classify_f64(parse_to_qpoly("x^3 - x"))
        assert sorted(rep.central_roots) == pytest.approx([-1.0, 0.0, 1.0])
        assert rep.class_entries == ()
        assert rep.candidate_source == "numeric"

    def test_sphere_detected(self):
        rep = classify_f64(parse_to_qpoly("x^3 + x"))
        assert list(rep.central_roots) == pytest.approx([0.0])
        ((cls, status),) = rep.class_entries
        assert isinstance(status, SphericalRoots)
        assert cls.trace == pytest.approx(0.0, abs=1e-9)
        assert cls.norm == pytest.approx(1.0, abs=1e-9)

    def test_isolated_root_detected(self):
        rep = classify_f64(parse_to_qpoly("(x - i)(x^2 - 1)"))
        assert sorted(rep.central_roots) == pytest.approx([-1.0, 1.0])
        ((cls, status),) = rep.class_entries
        assert isinstance(status, IsolatedRoot)
        r = status.representative
        assert (r.w, r.x, r.y, r.z) == pytest.approx((0, 1, 0, 0), abs=1e-7)

    def test_triple_central_root(self):
        rep = classify_f64(parse_to_qpoly("(x - 2)^3"))
        assert len(rep.central_roots) == 1
        assert rep.central_roots[0] == pytest.approx(2.0, abs=1e-4)

    def test_repeated_noncentral_classes_heal(self):
        # (x - i)(x - j)(x - k) has the lone root k; the companion is
        # (x^2 + 1)^3, so float fragments must be merged back together
        rep = classify_f64(parse_to_qpoly("(x - i)(x - j)(x - k)"))
        assert rep.central_roots == ()
        ((cls, status),) = rep.class_entries
        assert isinstance(status, IsolatedRoot)
        assert cls.trace == pytest.approx(0.0, abs=1e-6)
        assert cls.norm == pytest.approx(1.0, abs=1e-6)
        r = status.representative
        assert (r.w, r.x, r.y, r.z) == pytest.approx((0, 0, 0, 1), abs=1e-6)

    def test_repeated_sphere(self):
        rep = classify_f64(parse_to_qpoly("(x^2 + 1)^2"))
        ((cls, status),) = rep.class_entries
        assert isinstance(status, SphericalRoots)
        assert cls.trace == pytest.approx(0.0, abs=1e-6)

    def test_close_spheres_resolve_above_scatter(self):
        rep = classify_f64(parse_to_qpoly("(x^2 + 1)(x^2 + 101/100)"))
        norms = sorted(cls.norm for cls, _ in rep.class_entries)
        assert len(norms) == 2
        assert norms[0] == pytest.approx(1.0, abs=1e-4)
        assert norms[1] == pytest.approx(1.01, abs=1e-4)

    def test_sub_resolution_spheres_fuse(self):
        # double eigenvalues 5e-5 apart sit below the joint scatter of
        # a multiplicity-4 cluster; the honest answer is one midpoint
        # class, and the agreement checker downgrades it to a flag
        rep = classify_f64(parse_to_qpoly("(x^2 + 1)(x^2 + 10001/10000)"))
        assert len(rep.class_entries) == 1
        agreement = agree_with_exact(parse_to_qpoly("(x^2 + 1)(x^2 + 10001/10000)"))
        assert agreement.agreed
        assert agreement.mismatches == ()
        assert len(agreement.flagged) >= 2

    def test_irrational_spheres_found(self):
        rep = classify_f64(parse_to_qpoly("x^5 + x"))
        assert list(rep.central_roots) == pytest.approx([0.0])
        traces = sorted(cls.trace for cls, _ in rep.class_entries)
        assert traces == pytest.approx([-math.sqrt(2), math.sqrt(2)], abs=1e-9)
        assert entry_kinds(rep) == ["SphericalRoots", "SphericalRoots"]

    def test_degree_zero_rejected(self):
        with pytest.raises(PreconditionError):
            classify_f64(QPoly.constant(A.i))

    @given(st.randoms(use_true_random=False))
    @settings(max_examples=25, deadline=None)
    def test_matches_exact_on_separated_products(self, rng):
        poly, tags = separated_class_product(rng)
        if poly.degree < 1:
            return
        rep = classify_f64(poly)
        want_central = sorted(float(v) for kind, *rest in tags
                              if kind == "central" for v in rest)
        assert sorted(rep.central_roots) == pytest.approx(want_central, abs=1e-6)
        # round the sort key so float jitter cannot reorder tied traces
        key = lambda pair: (round(pair[0], 6), round(pair[1], 6))
        got = sorted(((cls.trace, cls.norm) for cls, _ in rep.class_entries),
                     key=key)
        want = sorted(((float(t), float(n)) for kind, t, n in
                       (tag for tag in tags if tag[0] == "sphere")), key=key)
        assert len(got) == len(want)
        for (gt, gn), (wt, wn) in zip(got, want):
            assert gt == pytest.approx(wt, abs=1e-6)
            assert gn == pytest.approx(wn, abs=1e-6)


class TestAgreement:
    EXAMPLES = [
        "x^3 - x",
        "x^3 + x",
        "(x - i)(x^2 - 1)",
        "(x - i)(x^2 + 1)",
        "(x - i)(x + 1)^2",
        "(x - i)(x^2 + x + 1)",
    ]

    @pytest.mark.parametrize("text", EXAMPLES)
    def test_example_cubics_agree_cleanly(self, text):
        agreement = agree_with_exact(parse_to_qpoly(text))
        assert agreement.agreed
        assert agreement.mismatches == ()
        assert agreement.flagged == ()
        assert agreement.matched

    def test_irrational_classes_flagged_not_mismatched(self):
        # exact backend cannot certify the sqrt(2)-trace spheres, so
        # they surface as near-sphere flags on the numeric side
        agreement = agree_with_exact(parse_to_qpoly("x^5 + x"))
        assert agreement.agreed
        assert len(agreement.flagged) == 2
        assert all("near-spherical" in f for f in agreement.flagged)

    def test_tiny_perturbation_stays_agreed(self):
        # the exact backend sees no certifiable classes at denominator
        # 1e12, the numeric backend sees an almost-(0,1) sphere
        text = "x^2 + 1/1000000000000 x + 1"
        agreement = agree_with_exact(parse_to_qpoly(text))
        assert agreement.agreed
        assert agreement.exact_report.class_entries == ()
        assert len(agreement.flagged) == 1

    def test_non_hamilton_rejected(self):
        from quatpoly import AlgebraParams

        B = AlgebraParams(Fraction(-1), Fraction(-2))
        with pytest.raises(PreconditionError):
            agree_with_exact(QPoly(B, [B.i, B.one]))


class TestCompanionRootsF64:
    def test_simple_companion_roots(self):
        roots = companion_roots_f64(parse_to_qpoly("x^2 + 1"))
        # companion (x^2 + 1)^2 has double roots at +-1j
        assert len(roots) == 4
        for r in roots:
            assert abs(r.real) < 1e-6 and abs(abs(r.imag) - 1.0) < 1e-6

    def test_extreme_spread_fails(self):
        poly = parse_to_qpoly("1/10000000000000 x^2 + 10000000000000")
        with pytest.raises(NumericFailure):
            companion_roots_f64(poly)

    def test_classify_surfaces_the_failure(self):
        poly = parse_to_qpoly("1/10000000000000 x^2 + 10000000000000")
        with pytest.raises(NumericFailure):
            classify_f64(poly)


class TestSettings:
    def test_defaults(self):
        s = NumericSettings()
        assert s.eps_zero == 1e-9 and s.eps_class == 1e-8

    def test_invalid_tolerances_rejected(self):
        with pytest.raises(PreconditionError):
            NumericSettings(eps_zero=0.0)
        with pytest.raises(PreconditionError):
            NumericSettings(eps_class=-1e-9)
        with pytest.raises(PreconditionError):
            NumericSettings(cluster_tol=float("nan"))

    def test_unattainable_tolerance_is_refused(self):
        # residuals can never beat 1e-30, so the solve reports failure
        # instead of inventing certainty
        with pytest.raises(NumericFailure):
            classify_f64(parse_to_qpoly("(x - i)(x^2 - 1)"),
                         NumericSettings(eps_zero=1e-30, eps_class=1e-8))


class TestSubfieldRootsF64:
    def test_sees_rational_and_irrational_meetings(self):
        # exact subfield search reports only +-j here; the float
        # backend also resolves the (-1, 1) sphere hitting F(j) at
        # -1/2 +- sqrt(3)/2 j
        p = parse_to_qpoly("(x^2 + 1)(x^2 + x + 1)")
        roots = roots_in_subfield_f64(p, A.j)
        got = sorted((round(r.w, 6), round(r.y, 6)) for r in roots)
        assert len(got) == 4
        assert got[0] == pytest.approx((-0.5, -math.sqrt(3) / 2), abs=1e-6)
        assert got[1] == pytest.approx((-0.5, math.sqrt(3) / 2), abs=1e-6)
        assert got[2] == pytest.approx((0.0, -1.0), abs=1e-6)
        assert got[3] == pytest.approx((0.0, 1.0), abs=1e-6)

    def test_irrational_beta_now_visible(self):
        # the (-1, 1) sphere meets F(j) at -1/2 +- sqrt(3)/2 j, which
        # the exact backend skips; the float backend reports it
        p = parse_to_qpoly("x^2 + x + 1")
        roots = roots_in_subfield_f64(p, A.j)
        assert len(roots) == 2
        for r in roots:
            assert r.w == pytest.approx(-0.5, abs=1e-9)
            assert abs(r.y) == pytest.approx(math.sqrt(3) / 2, abs=1e-9)

    def test_central_generator_rejected(self):
        with pytest.raises(PreconditionError):
            roots_in_subfield_f64(parse_to_qpoly("x^2 + 1"), A.one)

    def test_accepts_float_generator(self):
        roots = roots_in_subfield_f64(parse_to_qpoly("x^2 + 1"),
                                      QuatF(0.0, 0.0, 2.0, 0.0))
        assert len(roots) == 2
