"""Carathéodory-function computations on the spectral gap arc.

``F_0`` is the Carathéodory function of the constant-coefficient measure
with parameter alpha; on the open gap arc (-theta_alpha, theta_alpha) it
is purely imaginary for real alpha and ``-i F_0`` is given by a closed
formula.  Appending n arbitrary coefficients in front of the constant tail
changes ``F_0`` into the rational combination of the degree-n monic and
second-kind polynomials below, and a pure point of the perturbed measure
inside the arc is exactly a blow-up of that combination, which happens
where ``(-i F_0) + cot(arg(b_n)/2)`` crosses zero.  The scan works with the
cross-multiplied form ``(-i F_0) sin(arg(b_n)/2) + cos(arg(b_n)/2)`` so
that cotangent poles cannot fake a crossing.
"""

import csv
import math
from dataclasses import dataclass
from typing import List, Tuple

import numpy as np

from .errors import DomainError, PoleError
from .phase import _lift
from .szego import evaluate, polynomials_upto, second_kind_upto
from .verblunsky import RegionP, theta_alpha

__all__ = [
    "CaratheodoryEvaluation",
    "ScanReport",
    "f0_boundary",
    "gap_arc_regular",
    "peherstorfer_F",
    "pure_point_scan",
    "write_scan_csv",
]


@dataclass(frozen=True)
class CaratheodoryEvaluation:
    """Boundary value of F_0 at one angle of the gap arc."""

    theta: float
    value: complex
    regular: bool   # sin^2(theta/2) <= alpha^2, i.e. the square root is real


@dataclass(frozen=True)
class ScanReport:
    """Candidate pure-point intervals from one scan."""

    n: int
    alpha: float
    grid_points: int
    hypothesis_ok: bool
    puncture: float
    candidates: List[Tuple[float, float, float, float]]  # (theta_lo, theta_hi, g_lo, g_hi)


def _check_alpha_interval(alpha, lo, hi, what):
    alpha = float(alpha)
    if not lo < alpha < hi:
        raise DomainError(f"{what} needs alpha in ({lo}, {hi}), got {alpha}")
    return alpha


def gap_arc_regular(alpha, theta):
    """Regularity flag of the F_0 square root: sin^2(theta/2) <= alpha^2."""
    return bool(math.sin(0.5 * theta) ** 2 <= float(alpha) ** 2)


def _f0_values(alpha, thetas):
    """Vectorized -i F_0 on angles strictly inside the punctured gap arc."""
    half = 0.5 * thetas
    s = np.sin(half)
    root = np.sqrt(np.maximum(alpha * alpha - s * s, 0.0))
    return (alpha * np.cos(half) / s + root / s) / (1.0 + alpha)


def f0_boundary(alpha, theta):
    """Boundary formula for the constant-coefficient Carathéodory function.

    Evaluates ``-i F_0 = [alpha*cot(theta/2) + csc(theta/2) *
    sqrt(alpha^2 - sin^2(theta/2))] / (1 + alpha)`` and returns F_0 itself
    (purely imaginary here).  The square root is taken nonnegative on the
    arc; outside the open arc the operation refuses rather than guessing
    the analytic continuation.

    Raises
    ------
    DomainError
        At theta = 0 or |theta| >= theta_alpha, or alpha outside (-1, 0).
    """
    alpha = _check_alpha_interval(alpha, -1.0, 0.0, "f0_boundary")
    th_a = theta_alpha(alpha)
    theta = float(theta)
    if theta == 0.0 or abs(theta) >= th_a:
        raise DomainError(
            f"f0_boundary needs 0 < |theta| < {th_a:.6f}, got theta = {theta}"
        )
    v = float(_f0_values(alpha, np.array([theta]))[0])
    return CaratheodoryEvaluation(
        theta=theta, value=1j * v, regular=gap_arc_regular(alpha, theta)
    )


def peherstorfer_F(seq, n, alpha, z, f0_value=None):
    """Carathéodory function of the measure (alpha_0..alpha_{n-1}, alpha, alpha, ...).

    Evaluates the finite-perturbation formula

        F = [Psi* - Psi + (Psi* + Psi) F_0] / [Phi* + Phi + (Phi* - Phi) F_0]

    with the degree-n monic and second-kind polynomials at ``z``.  When
    ``f0_value`` is None, ``z`` must be a boundary point of the open gap
    arc and F_0 comes from :func:`f0_boundary`; elsewhere the caller
    supplies F_0.

    Raises
    ------
    PoleError
        When the denominator vanishes (the pure-point blow-up condition).
    """
    n = int(n)
    if n < 0:
        raise DomainError("peherstorfer_F needs n >= 0")
    z = complex(z)
    if f0_value is None:
        if abs(abs(z) - 1.0) > 1e-9:
            raise DomainError(
                "without an explicit f0_value, z must lie on the unit circle"
            )
        f0_value = f0_boundary(alpha, math.atan2(z.imag, z.real)).value
    f0_value = complex(f0_value)
    pair = polynomials_upto(seq, n)
    second = second_kind_upto(seq, n)
    phi = evaluate(pair.phi, z)
    phistar = evaluate(pair.phistar, z)
    psi = evaluate(second.phi, z)
    psistar = evaluate(second.phistar, z)
    num = psistar - psi + (psistar + psi) * f0_value
    den = phistar + phi + (phistar - phi) * f0_value
    scale = max(abs(phi), abs(phistar), 1.0) * max(1.0, abs(f0_value))
    if abs(den) <= 1e-13 * scale:
        raise PoleError(
            f"denominator vanishes at z = {z}: candidate pure point"
        )
    return num / den


def pure_point_scan(seq, n, alpha, grid_points):
    """Scan the punctured gap arc for pure-point candidates.

    Uses the cross-multiplied crossing function
    ``h = (-i F_0) sin(arg b_n / 2) + cos(arg b_n / 2)`` on a uniform grid
    of each half-arc (total of about ``grid_points`` points, puncture
    radius theta_alpha * 1e-6 around 0) and reports the sign-change
    intervals.  Under the region-P hypothesis the list is empty; a
    hypothesis violation is flagged but still scanned.
    """
    alpha = _check_alpha_interval(alpha, -0.5, 0.0, "pure_point_scan")
    n = int(n)
    if n < 0:
        raise DomainError("pure_point_scan needs n >= 0")
    grid_points = int(grid_points)
    if grid_points < 8:
        raise DomainError("grid_points must be at least 8")
    th_a = theta_alpha(alpha)
    puncture = th_a * 1e-6
    edge = th_a * 1e-9
    alphas = seq.prefix(n)
    hypothesis_ok = bool(RegionP(alpha).contains(alphas).all())

    half_points = max(grid_points // 2, 4)
    candidates = []
    for sgn in (-1.0, 1.0):
        grid = sgn * np.linspace(puncture, th_a - edge, half_points)
        grid = np.sort(grid)
        psi = _lift(alphas, grid) - grid  # arg b_n on the arc
        h = _f0_values(alpha, grid) * np.sin(0.5 * psi) + np.cos(0.5 * psi)
        flips = np.nonzero(h[:-1] * h[1:] < 0.0)[0]
        for i in flips:
            candidates.append(
                (float(grid[i]), float(grid[i + 1]), float(h[i]), float(h[i + 1]))
            )
        for i in np.nonzero(h == 0.0)[0]:
            candidates.append((float(grid[i]), float(grid[i]), 0.0, 0.0))

    candidates.sort()
    return ScanReport(
        n=n,
        alpha=alpha,
        grid_points=grid_points,
        hypothesis_ok=hypothesis_ok,
        puncture=puncture,
        candidates=candidates,
    )


def write_scan_csv(report, path):
    """CSV of candidate intervals; a header-only file means no candidates."""
    with open(path, "w", newline="", encoding="utf-8") as fh:
        writer = csv.writer(fh)
        writer.writerow(["theta_lo", "theta_hi", "g_lo", "g_hi"])
        for lo, hi, glo, ghi in report.candidates:
            writer.writerow([repr(lo), repr(hi), repr(glo), repr(ghi)])
