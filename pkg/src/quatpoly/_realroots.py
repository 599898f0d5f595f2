"""Float root extraction for real polynomials, plus root clustering.

Thin wrapper around numpy's companion-matrix eigenvalue solver, with
helpers to group conjugate pairs and collapse multiple eigenvalues.
Collapsing matters: repeated roots come out of the eigensolver with
errors around the square root of machine epsilon, but the mean of a
cluster recovers the root to near machine precision.
"""

from __future__ import annotations

from typing import Sequence

import numpy as np

from .errors import NumericFailure


def real_poly_roots(coeffs_const_first: Sequence[float]) -> list[complex]:
    """All complex roots of a real polynomial given constant-first."""
    cs = list(coeffs_const_first)
    while cs and cs[-1] == 0.0:
        cs.pop()
    if len(cs) <= 1:
        return []
    try:
        roots = np.roots(np.array(cs[::-1], dtype=float))
    except np.linalg.LinAlgError as exc:
        raise NumericFailure(f"companion-matrix eigenvalue solve failed: {exc}") from exc
    return [complex(z) for z in roots]


def _cluster(points: list[complex], tol: float) -> list[tuple[complex, int]]:
    """Greedy clustering by distance; returns (mean, size) per cluster."""
    groups: list[list[complex]] = []
    for p in sorted(points, key=lambda z: (z.real, z.imag)):
        for g in groups:
            mean = sum(g) / len(g)
            if abs(p - mean) <= tol * (1.0 + abs(mean)):
                g.append(p)
                break
        else:
            groups.append([p])
    return [(sum(g) / len(g), len(g)) for g in groups]


def pair_and_cluster(
    roots: Sequence[complex], tol: float
) -> tuple[list[tuple[float, int]], list[tuple[tuple[float, float], int]]]:
    """Split roots into real values and conjugate-pair (trace, norm) data.

    Returns (reals, spheres): reals as (value, multiplicity), spheres as
    ((2*Re z, |z|^2), multiplicity) taken from the upper half-plane.
    """
    real_points: list[complex] = []
    upper: list[complex] = []
    for z in roots:
        if abs(z.imag) <= tol * (1.0 + abs(z)):
            real_points.append(complex(z.real, 0.0))
        elif z.imag > 0:
            upper.append(z)
    reals = [(mean.real, mult) for mean, mult in _cluster(real_points, tol)]
    spheres = [
        ((2.0 * mean.real, abs(mean) ** 2), mult)
        for mean, mult in _cluster(upper, tol)
    ]
    return reals, spheres
