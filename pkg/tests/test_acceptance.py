"""Acceptance gate: one test per shipped guarantee.

Each test wraps its checks in the ``criterion`` recorder from conftest,
so the terminal summary prints one PASS/FAIL line per criterion.  Timed
criteria use wall-clock budgets; randomized corpora use fixed seeds.
"""

import json
import random
import time
from fractions import Fraction
from pathlib import Path

from quatpoly import (
    HAMILTON,
    CentralPoly,
    IsolatedRoot,
    QPoly,
    SphereClass,
    SphericalRoots,
    agree_with_exact,
    analyze_sparse,
    beck_decompose,
    center_coordinates,
    central_gcd,
    classify,
    classify_cubic,
    classify_f64,
    conjugation_root_kernel,
    eval_product,
    eval_right,
    gcrd,
    nonroot_conjugates,
    parse_to_qpoly,
    right_divrem,
    same_class,
    spherical_bound_report,
    spherical_classes,
)
from quatpoly.cli import main as cli_main
from quatpoly.parsing import poly_from_json_obj, poly_to_json_obj

from conftest import (
    criterion,
    rand_fraction,
    rand_monic,
    rand_poly,
    rand_quat,
    separated_class_product,
)

A = HAMILTON
GOLDEN = Path(__file__).parent / "golden"

EXAMPLE_CUBICS = [
    # (text, expected spherical classes)
    ("x^3 - x", []),
    ("x^3 + x", [SphereClass(0, 1)]),
    ("x^3 - i x^2 - x + i", []),
    ("x^3 - i x^2 + x - i", [SphereClass(0, 1)]),
    ("x^3 + (2 - i) x^2 + (1 - 2i) x - i", []),
    ("x^3 + (1 - i) x^2 + (1 - i) x - i", [SphereClass(-1, 1)]),
]


def _noncentral(rng, direction=None):
    """A noncentral quaternion, optionally with a fixed pure direction."""
    if direction is None:
        while True:
            q = rand_quat(rng, A, 5)
            if not q.is_central:
                return q
    beta = Fraction(0)
    while beta == 0:
        beta = rand_fraction(rng, 5)
    return A.scalar(rand_fraction(rng, 5)) + A.scalar(beta) * direction


def _pure_direction(rng):
    while True:
        q = rand_quat(rng, A, 3)
        if not q.is_central:
            return q.pure()


def test_example_cubics_classify_as_stated():
    with criterion("six example cubics classify as stated (exact, < 1 s)"):
        start = time.perf_counter()
        reports = [(text, classify(parse_to_qpoly(text)))
                   for text, _ in EXAMPLE_CUBICS]
        elapsed = time.perf_counter() - start
        for (text, want), (_, rep) in zip(EXAMPLE_CUBICS, reports):
            got = [cls for cls, status in rep.class_entries
                   if isinstance(status, SphericalRoots)]
            assert got == want, f"{text}: spherical classes {got} != {want}"
            assert rep.candidate_source == "exact"
        # the no-spherical cubics still carry their isolated root i
        for index in (2, 4):
            _, rep = reports[index]
            isolated = [status.representative for _, status in rep.class_entries
                        if isinstance(status, IsolatedRoot)]
            assert isolated == [A.i]
        assert elapsed < 1.0, f"classification took {elapsed:.3f} s"


def test_central_factor_maximality_example():
    with criterion("maximal central right divisor exceeds the visible factor"):
        x = QPoly.x(A)
        p = (x * x + QPoly.constant(A.one)) * x
        beck = beck_decompose(p)
        assert beck.central == CentralPoly((0, 1, 0, 1))  # x^3 + x
        # h = x right-divides P yet is not the greatest central divisor
        h = x
        _, rem = right_divrem(p, h)
        assert rem.is_zero
        assert h.degree < beck.central.degree
        assert beck.recombine() == p


def test_division_and_gcrd_round_trips():
    with criterion("1000 division + 500 gcrd round-trips, exact (< 30 s)"):
        rng = random.Random(20260815)
        start = time.perf_counter()
        for _ in range(1000):
            p = rand_poly(rng, rng.randint(0, 6))
            d = rand_monic(rng, rng.randint(1, 6))
            q, r = right_divrem(p, d)
            assert q * d + r == p
            assert r.degree < d.degree
        for _ in range(500):
            a = rand_poly(rng, rng.randint(0, 3))
            b = rand_poly(rng, rng.randint(0, 3))
            w = rand_monic(rng, rng.randint(1, 3))
            g = gcrd(a * w, b * w)
            _, rem = right_divrem(g, w)
            assert rem.is_zero
        elapsed = time.perf_counter() - start
        assert elapsed < 30.0, f"suite took {elapsed:.1f} s"


def test_central_decomposition_round_trip():
    with criterion("500 leading * reduced * central round-trips"):
        rng = random.Random(40404)
        for k in range(500):
            degree = rng.randint(0, 5)
            p = rand_poly(rng, degree)
            # plant a central factor in a third of the cases so the
            # decomposition has real work to do
            if k % 3 == 0:
                r = rand_fraction(rng, 4)
                p = p * QPoly(A, [A.scalar(-r), A.one])
            beck = beck_decompose(p)
            assert beck.recombine() == p
            assert beck.central.is_monic
            assert beck.reduced.is_monic
            parts = center_coordinates(beck.reduced).parts()
            g = CentralPoly()
            for part in parts:
                if part.is_zero and g.is_zero:
                    continue
                g = central_gcd(g, part)
            assert g == CentralPoly((1,))


def _equality_witness(rng):
    """A polynomial attaining the spherical bound."""
    if rng.random() < 0.5:
        # even degree: product of central irreducible quadratics
        p = QPoly.constant(A.one)
        used = set()
        for _ in range(rng.randint(1, 3)):
            while True:
                t = rand_fraction(rng, 3)
                n = t * t / 4 + Fraction(rng.randint(1, 9), rng.choice([1, 2]))
                if (t, n) not in used:
                    used.add((t, n))
                    break
            p = p * QPoly(A, [A.scalar(n), A.scalar(-t), A.one])
        return p
    # odd degree: commuting coefficients, one linear factor in the
    # same subfield as the quadratics
    s = _pure_direction(rng)
    q = A.scalar(rand_fraction(rng, 3)) + s
    p = QPoly(A, [-q, A.one])
    t = q.trace() + 1
    n = t * t / 4 + 1
    return p * QPoly(A, [A.scalar(n), A.scalar(-t), A.one])


def test_root_class_bounds():
    with criterion("500 random classifications respect the class bounds"):
        rng = random.Random(33550336)
        equalities = 0
        for k in range(500):
            if k % 3 == 0:
                p = _equality_witness(rng)
            else:
                p = rand_poly(rng, rng.randint(1, 6), bound=6)
                if p.degree < 1:
                    continue
            rep = classify(p)
            assert rep.classes_with_roots <= p.degree
            spheres = [c for c, st in rep.class_entries
                       if isinstance(st, SphericalRoots)]
            assert len(spheres) <= p.degree // 2
            # the report recomputes the bound and, at equality, asserts
            # the structure theorems internally
            bound_rep = spherical_bound_report(p)
            assert bound_rep.count == len(spheres)
            if bound_rep.count == bound_rep.bound and bound_rep.bound > 0:
                equalities += 1
                if bound_rep.equality_parity == "even":
                    assert bound_rep.coefficients_central is True
                else:
                    assert bound_rep.coefficients_commute is True
        assert equalities >= 100, f"only {equalities} equality cases exercised"


def test_bound_equality_witnesses():
    with criterion("bound-equality witnesses show the forced structure"):
        even = spherical_bound_report(parse_to_qpoly("(x^2 + 1)(x^2 + x + 1)"))
        assert even.count == 2 and even.bound == 2
        assert even.equality_parity == "even"
        assert even.coefficients_central is True
        assert {(c.trace, c.norm) for c in spherical_classes(
            parse_to_qpoly("(x^2 + 1)(x^2 + x + 1)"))} == {(0, 1), (-1, 1)}

        odd = spherical_bound_report(parse_to_qpoly("(x - i)(x^2 + 1)"))
        assert odd.count == 1 and odd.bound == 1
        assert odd.equality_parity == "odd"
        assert odd.coefficients_commute is True


def test_nonroot_conjugates_and_kernel_parity():
    with criterion("10 certified non-root conjugates; kernel parity on 200 pairs"):
        p = parse_to_qpoly("x^2 + x + 1")
        out = nonroot_conjugates(p, A.i, 10)
        assert len(out) == 10
        assert len({q.coords() for q in out}) == 10
        for q in out:
            assert same_class(q, A.i)
            assert not eval_right(p, q).is_zero
        rng = random.Random(271828)
        for _ in range(200):
            poly = rand_poly(rng, rng.randint(1, 4), bound=4)
            if poly.degree < 1:
                continue
            c = _noncentral(rng)
            kernel = conjugation_root_kernel(poly, c)
            assert len(kernel) in (0, 2, 4)


def _sparse_case1(rng):
    degree = rng.randint(2, 6)
    coeffs = [A.scalar(rand_fraction(rng, 6)) for _ in range(degree)]
    coeffs[rng.randrange(degree)] = _noncentral(rng)
    return QPoly(A, coeffs + [A.one])


def _sparse_case2(rng):
    degree = rng.randint(2, 6)
    s = _pure_direction(rng)
    coeffs = [A.scalar(rand_fraction(rng, 6)) for _ in range(degree)]
    low = rng.randrange(degree - 1)
    high = rng.randrange(low + 1, degree)
    coeffs[low] = _noncentral(rng, s)
    coeffs[high] = _noncentral(rng, s)
    return QPoly(A, coeffs + [A.one])


def _sparse_case3(rng):
    degree = rng.randint(2, 6)
    while True:
        u, v = _pure_direction(rng), _pure_direction(rng)
        if u * v != v * u:
            break
    coeffs = [A.scalar(rand_fraction(rng, 6)) for _ in range(degree)]
    low = rng.randrange(degree - 1)
    high = rng.randrange(low + 1, degree)
    coeffs[low] = A.scalar(rand_fraction(rng, 5)) + u
    coeffs[high] = A.scalar(rand_fraction(rng, 5)) + v
    return QPoly(A, coeffs + [A.one])


CUBIC_BUILDERS = {
    "all_central": lambda rng, s: [A.scalar(rand_fraction(rng, 5)) for _ in range(3)],
    "single_noncentral": lambda rng, s: _place_one(rng, s),
    "outer_pair_in_subfield": lambda rng, s: [
        _noncentral(rng, s), A.scalar(rand_fraction(rng, 5)), _noncentral(rng, s)],
    "upper_pair_in_subfield": lambda rng, s: [
        _noncentral(rng, s), _noncentral(rng, s), A.scalar(rand_fraction(rng, 5))],
    "lower_pair_in_subfield": lambda rng, s: [
        A.scalar(rand_fraction(rng, 5)), _noncentral(rng, s), _noncentral(rng, s)],
    "all_in_subfield": lambda rng, s: [
        _noncentral(rng, s), _noncentral(rng, s), _noncentral(rng, s)],
}


def _place_one(rng, s):
    coeffs = [A.scalar(rand_fraction(rng, 5)) for _ in range(3)]
    coeffs[rng.randrange(3)] = _noncentral(rng, s)
    return coeffs


def test_structural_analyzers_never_overpromise():
    with criterion("sparse/cubic analyzers: bounds hold, 200 zero-sphere cases"):
        rng = random.Random(1729)
        zero_cases = 0
        while zero_cases < 200:
            build = rng.choice([_sparse_case1, _sparse_case3])
            poly = build(rng)
            res = analyze_sparse(poly)
            if not res.applicable:
                continue  # random central draw happened to be noncentral-free
            assert res.case in ("lone_noncentral", "separate_subfields")
            assert res.bound == 0
            assert res.spherical_found == 0
            assert spherical_classes(poly) == []
            zero_cases += 1
        for _ in range(60):
            poly = _sparse_case2(rng)
            res = analyze_sparse(poly)
            if not res.applicable:
                continue
            assert res.spherical_found <= res.bound
        # every cubic case: the analyzer's bound dominates the count
        for case, build in CUBIC_BUILDERS.items():
            seen = 0
            while seen < 25:
                # x^2 coefficient ordering: builders return [c2, c1, c0]
                c2, c1, c0 = build(rng, _pure_direction(rng))
                poly = QPoly(A, [c0, c1, c2, A.one])
                res = classify_cubic(poly)
                if res.case != case:
                    continue  # a random central draw changed the pattern
                assert res.spherical_found <= res.bound
                seen += 1
        # non-commuting pairs land in the catch-all case with bound 0
        seen = 0
        while seen < 25:
            while True:
                u, v = _pure_direction(rng), _pure_direction(rng)
                if u * v != v * u:
                    break
            coeffs = [A.scalar(rand_fraction(rng, 5)) + u,
                      A.scalar(rand_fraction(rng, 5)),
                      A.scalar(rand_fraction(rng, 5)) + v]
            poly = QPoly(A, [coeffs[2], coeffs[1], coeffs[0], A.one])
            res = classify_cubic(poly)
            if res.case != "no_common_subfield":
                continue
            assert res.bound == 0 and res.spherical_found == 0
            seen += 1


def test_backend_agreement():
    with criterion("200 rational-class polynomials: numeric matches exact at 1e-8"):
        rng = random.Random(65537)
        done = 0
        while done < 200:
            poly, tags = separated_class_product(rng)
            if poly.degree < 1:
                continue
            agreement = agree_with_exact(poly)
            assert agreement.agreed, f"{poly}: {agreement.mismatches}"
            assert agreement.mismatches == ()
            assert agreement.flagged == ()
            exact_entries = len(agreement.exact_report.class_entries) + len(
                agreement.exact_report.central_roots)
            assert len(agreement.matched) == exact_entries
            done += 1
        # fully random polynomials: irrational classes may be flagged,
        # but nothing may ever contradict the exact backend
        for _ in range(100):
            poly = rand_poly(rng, rng.randint(1, 5), bound=5)
            if poly.degree < 1:
                continue
            agreement = agree_with_exact(poly)
            assert agreement.agreed, f"{poly}: {agreement.mismatches}"


def test_product_evaluation_rule():
    with criterion("200 product evaluations agree; naive rule fails somewhere"):
        rng = random.Random(31337)
        naive_breaks = 0
        for _ in range(200):
            g = rand_poly(rng, rng.randint(0, 4))
            h = rand_poly(rng, rng.randint(0, 4))
            q = rand_quat(rng, A, 5)
            true = eval_right(g * h, q)
            assert eval_product(g, h, q) == true
            if eval_right(g, q) * eval_right(h, q) != true:
                naive_breaks += 1
        assert naive_breaks > 0
        # the canonical counterexample, pinned explicitly
        x = QPoly.x(A)
        g = x - QPoly.constant(A.i)
        h = x - QPoly.constant(A.j)
        assert eval_right(g, A.i) * eval_right(h, A.i) == A.zero
        assert eval_right(g * h, A.i) == A.scalar(2) * A.k


def test_parser_round_trip_and_goldens(capsys):
    with criterion("500 parse/print round-trips; golden documents byte-stable"):
        rng = random.Random(524287)
        for _ in range(500):
            p = rand_poly(rng, rng.randint(0, 6))
            assert parse_to_qpoly(str(p)) == p
            assert poly_from_json_obj(poly_to_json_obj(p)) == p
        texts = [text for text, _ in EXAMPLE_CUBICS]
        for index, text in enumerate(texts, start=1):
            code = cli_main(["classify", text, "--format", "json"])
            out = capsys.readouterr().out
            assert code == 0
            golden = (GOLDEN / f"classify_cubic_{index}.json").read_text()
            assert out == golden, f"golden {index} drifted"


def test_numeric_backend_on_examples():
    with criterion("numeric backend classifies every example cubic correctly"):
        for text, want in EXAMPLE_CUBICS:
            rep = classify_f64(parse_to_qpoly(text))
            got = [cls for cls, status in rep.class_entries
                   if isinstance(status, SphericalRoots)]
            assert len(got) == len(want)
            for cls, target in zip(got, want):
                assert abs(cls.trace - float(target.trace)) <= 1e-8
                assert abs(cls.norm - float(target.norm)) <= 1e-8
