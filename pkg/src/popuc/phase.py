"""Continuous phase lift, exact zero location, and gap measurements.

For a coefficient sequence with prefix ``alpha_0 .. alpha_{n-2}``, the
unimodular Blaschke ratio ``b_{n-1} = phi_{n-1}/phi_{n-1}^*`` on the circle
drives everything: ``eta_n(theta)`` is the continuous lift of the phase of
``e^{i theta} b_{n-1}(e^{i theta})``, computed by the one-step recursion

    eta_k = eta_{k-1} + theta - 2*arg(1 - alpha_{k-2} * e^{i eta_{k-1}}),

with ``eta_1(theta) = theta`` and the principal branch of arg (safe since
``Re(1 - a e^{ix}) >= 1 - |a| > 0``).  The lift is strictly increasing in
theta and grows by exactly ``2 pi n`` over a full turn; for real sequences
``eta_n(0) = 0``.  Negative angles are handled by the same recursion (no
conjugation shortcut is assumed).

A paraorthogonal polynomial built with boundary coefficient beta vanishes
at ``e^{i theta}`` precisely when ``e^{i theta} b_{n-1} = conj(beta)``, so
every zero is the unique bisection solution of ``eta_n(theta) = target``
for one branch target, and the zero set costs O(n^2 log(1/tol)) total.
Branch bisections are independent; the solver vectorizes across branches,
and a parallel map over branches is the intended scaling path.
"""

import csv
import math
from dataclasses import dataclass

import numpy as np

from ._kernels import eta_lift
from .errors import DomainError, PreconditionError
from .verblunsky import RegionP, theta_alpha

__all__ = [
    "PhaseState",
    "ZeroSet",
    "GapMeasurements",
    "PhaseBoundReport",
    "eta",
    "phase_state",
    "blaschke_step",
    "popuc_zeros",
    "zeros_near_one",
    "nearest_zero_to_one",
    "gap_measurements",
    "phase_bound_check",
    "write_zeroset_csv",
    "zeroset_to_json_dict",
]

TWO_PI = 2.0 * math.pi
_UNIT_MODULUS_TOL = 1e-10
_MAX_BISECTIONS = 200


@dataclass(frozen=True)
class PhaseState:
    """Lift value eta_n(theta) at one angle."""

    n: int
    theta: float
    eta: float


@dataclass(frozen=True)
class ZeroSet:
    """The n zeros of a paraorthogonal polynomial as angles in [0, 2*pi).

    Angles are strictly increasing, ordered counterclockwise from 1; an
    angle of exactly 0 occurs only when beta makes 1 itself a zero.
    """

    n: int
    args: np.ndarray
    beta: complex


@dataclass(frozen=True)
class GapMeasurements:
    """Arithmetic readout of a ZeroSet around the point 1."""

    gap_ccw: float              # arg zeta_1
    gap_cw: float               # 2*pi - arg zeta_n
    spacings: np.ndarray        # n-1 neighbor gaps, wrap-around excluded
    max_offgap_spacing: float


@dataclass(frozen=True)
class PhaseBoundReport:
    """Result of the Blaschke phase-bound check on the gap arc."""

    n: int
    alpha: float
    grid_points: int
    max_abs_arg: float
    bound: float                # pi/2 - arcsin|alpha|
    passed: bool


def blaschke_step(b, alpha, theta):
    """One Khrushchev step: (e^{i theta} b - conj(alpha)) / (1 - alpha e^{i theta} b).

    A Moebius map of the unit circle to itself; the result is unimodular.

    Raises
    ------
    DomainError
        If ``b`` is off the circle by more than 1e-10 or ``|alpha| >= 1``.
    """
    b = complex(b)
    alpha = complex(alpha)
    if abs(abs(b) - 1.0) > _UNIT_MODULUS_TOL:
        raise DomainError(f"blaschke_step needs |b| = 1, got |b| = {abs(b)}")
    if abs(alpha) >= 1.0:
        raise DomainError(f"blaschke_step needs |alpha| < 1, got {alpha}")
    w = complex(math.cos(theta), math.sin(theta)) * b
    return (w - alpha.conjugate()) / (1.0 - alpha * w)


def _lift(alphas, thetas):
    thetas = np.ascontiguousarray(thetas, dtype=np.float64)
    return eta_lift(
        np.ascontiguousarray(alphas.real),
        np.ascontiguousarray(alphas.imag),
        thetas,
    )


def eta(seq, n, theta):
    """Lifted phase eta_n(theta); scalar in, scalar out.

    ``theta`` may also be an array, and any real angle is accepted (the
    canonical domain is [0, 2*pi]; the lift extends continuously).
    Cost is O(n) per evaluation point.
    """
    n = int(n)
    if n < 1:
        raise DomainError("eta needs n >= 1")
    alphas = seq.prefix(n - 1)
    arr = np.atleast_1d(np.asarray(theta, dtype=np.float64))
    out = _lift(alphas, arr)
    return float(out[0]) if np.isscalar(theta) or np.ndim(theta) == 0 else out


def phase_state(seq, n, theta):
    """Convenience record around :func:`eta`."""
    return PhaseState(n=int(n), theta=float(theta), eta=float(eta(seq, int(n), float(theta))))


def _branch_targets(n, beta, eta0):
    """Lift targets for the n zeros; flags a zero at angle exactly 0."""
    xi = (-np.angle(beta)) % TWO_PI
    if xi == 0.0:
        xi = TWO_PI
    k0 = math.ceil((eta0 - xi) / TWO_PI)
    t1 = xi + TWO_PI * k0
    if t1 < eta0:
        t1 += TWO_PI
    if t1 == eta0:
        # beta makes 1 itself a zero; remaining n-1 zeros lie in (0, 2*pi)
        return t1 + TWO_PI * np.arange(1, n, dtype=np.float64), True
    return t1 + TWO_PI * np.arange(n, dtype=np.float64), False


def _solve_targets(alphas, n, targets, tol_rad, eta0):
    """Bisection solutions of eta_n(theta) = target for each target.

    Brackets start at the equidistributed guess ``(target - eta0)/n`` with
    half-width pi/n and are widened by doubling until they straddle the
    target; monotonicity of the lift makes the subsequent bisection exact.
    """
    targets = np.asarray(targets, dtype=np.float64)
    if targets.size == 0:
        return targets
    guess = np.clip((targets - eta0) / n, 0.0, TWO_PI)
    half = math.pi / n
    lo = np.maximum(guess - half, 0.0)
    hi = np.minimum(guess + half, TWO_PI)
    e_lo = _lift(alphas, lo)
    e_hi = _lift(alphas, hi)
    width = 2.0 * half
    for _ in range(_MAX_BISECTIONS):
        need_lo = e_lo > targets
        need_hi = e_hi < targets
        if not (need_lo.any() or need_hi.any()):
            break
        if need_lo.any():
            lo[need_lo] = np.maximum(lo[need_lo] - width, 0.0)
            e_lo[need_lo] = _lift(alphas, lo[need_lo])
        if need_hi.any():
            hi[need_hi] = np.minimum(hi[need_hi] + width, TWO_PI)
            e_hi[need_hi] = _lift(alphas, hi[need_hi])
        width *= 2.0
    else:  # pragma: no cover - impossible for a correct lift
        raise RuntimeError("internal error: bracket expansion failed")
    for _ in range(_MAX_BISECTIONS):
        if float(np.max(hi - lo)) <= tol_rad:
            return 0.5 * (lo + hi)
        mid = 0.5 * (lo + hi)
        below = _lift(alphas, mid) < targets
        lo = np.where(below, mid, lo)
        hi = np.where(below, hi, mid)
    raise RuntimeError("internal error: bisection failed to contract")  # pragma: no cover


def popuc_zeros(seq, n, beta, tol_rad=1e-12):
    """All n zeros of the degree-n paraorthogonal polynomial for ``beta``.

    The k-th zero solves ``eta_n(theta) = xi' + 2*pi*(m-1)`` on its own
    monotone branch, with ``xi' = arg(conj(beta))`` mapped into (0, 2*pi];
    each solution is bisected to ``|dtheta| <= tol_rad``.
    """
    n = int(n)
    if n < 1:
        raise DomainError("popuc_zeros needs n >= 1")
    if tol_rad <= 0.0:
        raise DomainError("tol_rad must be positive")
    beta = complex(beta)
    if abs(abs(beta) - 1.0) > 1e-12:
        raise DomainError(f"boundary coefficient must be unimodular, got |beta| = {abs(beta)}")
    alphas = seq.prefix(n - 1)
    eta0 = float(_lift(alphas, np.zeros(1))[0])
    targets, zero_at_origin = _branch_targets(n, beta, eta0)
    args = _solve_targets(alphas, n, targets, tol_rad, eta0)
    if zero_at_origin:
        args = np.concatenate(([0.0], args))
    args = np.sort(args)
    args.setflags(write=False)
    return ZeroSet(n=n, args=args, beta=beta)


def zeros_near_one(seq, n, beta, k=1, side="ccw", tol_rad=1e-12):
    """Angles of the k zeros nearest 1 on one side, by k branch bisections.

    ``side="ccw"`` returns branches 1..k (increasing angles just above 0);
    ``side="cw"`` returns branches n..n-k+1 (decreasing angles just below
    2*pi).  Cost is O(k * n * log(1/tol)), which keeps n = 10^6 feasible.
    """
    n = int(n)
    k = int(k)
    if not 1 <= k <= n:
        raise DomainError(f"need 1 <= k <= n, got k={k}, n={n}")
    if side not in ("ccw", "cw"):
        raise DomainError(f"side must be 'ccw' or 'cw', got {side!r}")
    beta = complex(beta)
    if abs(abs(beta) - 1.0) > 1e-12:
        raise DomainError(f"boundary coefficient must be unimodular, got |beta| = {abs(beta)}")
    alphas = seq.prefix(n - 1)
    eta0 = float(_lift(alphas, np.zeros(1))[0])
    targets, zero_at_origin = _branch_targets(n, beta, eta0)
    if zero_at_origin:
        # angle 0 is a zero; the remaining branches flank it
        full = np.concatenate(([np.nan], targets))
    else:
        full = targets
    picked = full[:k] if side == "ccw" else full[-k:][::-1]
    out = np.empty(k, dtype=np.float64)
    finite = ~np.isnan(picked)
    out[finite] = _solve_targets(alphas, n, picked[finite], tol_rad, eta0)
    out[~finite] = 0.0
    return out


def nearest_zero_to_one(seq, n, beta, side="ccw", tol_rad=1e-12):
    """Angle of the first zero counterclockwise (or clockwise) from 1."""
    return float(zeros_near_one(seq, n, beta, k=1, side=side, tol_rad=tol_rad)[0])


def gap_measurements(zs):
    """Gap sizes around 1 and the neighbor spacings away from it."""
    args = np.asarray(zs.args, dtype=np.float64)
    spacings = np.diff(args)
    return GapMeasurements(
        gap_ccw=float(args[0]),
        gap_cw=float(TWO_PI - args[-1]),
        spacings=spacings,
        max_offgap_spacing=float(spacings.max()) if spacings.size else float("nan"),
    )


def phase_bound_check(seq, n, alpha, grid_points):
    """Check arg b_n against the gap-arc phase bound pi/2 - arcsin|alpha|.

    Every prefix coefficient alpha_j (j < n) must lie in P_alpha with
    ``alpha`` real in (-1/2, 0); the argument of b_n is evaluated as
    ``eta_{n+1}(theta) - theta`` on an interior grid of (-theta_alpha,
    theta_alpha), the negative side by direct lift.

    Raises
    ------
    PreconditionError
        Listing the offending indices if some alpha_j is outside P_alpha.
    """
    alpha = float(alpha)
    if not -0.5 < alpha < 0.0:
        raise DomainError(f"alpha must be real in (-1/2, 0), got {alpha}")
    if int(grid_points) < 2:
        raise DomainError("grid_points must be at least 2")
    region = RegionP(alpha)
    alphas = seq.prefix(n)
    inside = region.contains(alphas)
    if not inside.all():
        bad = np.nonzero(~inside)[0]
        raise PreconditionError(
            f"{bad.size} coefficient(s) outside P_alpha for alpha={alpha}: "
            f"indices {bad[:10].tolist()}{'...' if bad.size > 10 else ''}",
            indices=bad.tolist(),
        )
    th_a = theta_alpha(alpha)
    grid = np.linspace(-th_a, th_a, int(grid_points) + 2)[1:-1]
    arg_b = _lift(alphas, grid) - grid
    max_abs = float(np.max(np.abs(arg_b)))
    bound = 0.5 * math.pi - math.asin(abs(alpha))
    return PhaseBoundReport(
        n=int(n),
        alpha=alpha,
        grid_points=int(grid_points),
        max_abs_arg=max_abs,
        bound=bound,
        passed=max_abs < bound,
    )


def write_zeroset_csv(zs, path):
    """Serialize a ZeroSet as CSV rows ``k, arg, re, im``."""
    with open(path, "w", newline="", encoding="utf-8") as fh:
        writer = csv.writer(fh)
        writer.writerow(["k", "arg", "re", "im"])
        for k, a in enumerate(zs.args, start=1):
            writer.writerow([k, repr(float(a)), repr(math.cos(a)), repr(math.sin(a))])


def zeroset_to_json_dict(zs):
    """JSON-ready dict with fields ``n``, ``beta_arg``, ``args``."""
    return {
        "n": int(zs.n),
        "beta_arg": float(np.angle(zs.beta)),
        "args": [float(a) for a in zs.args],
    }
