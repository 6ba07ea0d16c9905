"""Banded CMV operators, trial vectors, and the determinant/resolvent checks.

The n x n truncation with boundary coefficient beta is the product
``C = L M`` of two block factors built from 2x2 rotations

    Theta_j = [[conj(a_j), rho_j], [rho_j, -a_j]],   rho_j = sqrt(1 - |a_j|^2),

L holding the even-indexed blocks, M = 1 (+) the odd-indexed ones, with
``a_{n-1} = beta`` so that ``rho_{n-1} = 0`` and the block decouples; the
final 1x1 entry conj(beta) lands in L or M depending on the parity of n.
The product is unitary, pentadiagonal, and its characteristic polynomial
is the degree-n paraorthogonal polynomial for beta.

Operators are immutable after construction; ``apply`` and ``residual``
are pure, and independent experiments parallelize at the harness level.
"""

import csv
import math
from dataclasses import dataclass
from typing import Optional

import numpy as np
import scipy.sparse as sp

from .errors import DomainError, PatternError, PreconditionError
from .phase import nearest_zero_to_one

__all__ = [
    "CMVOperator",
    "TrialVector",
    "EigenvalueBall",
    "ResolventGapReport",
    "SignPatternReport",
    "build_cmv",
    "apply",
    "dense",
    "m_minus_l",
    "gamma_n",
    "trial_nu",
    "trial_upsilon",
    "residual",
    "eigenvalue_ball",
    "resolvent_gap_check",
    "sign_pattern_invertibility",
    "write_dense_csv",
]

_BAND_OFFSETS = (-2, -1, 0, 1, 2)


@dataclass(frozen=True)
class CMVOperator:
    """Unitary pentadiagonal truncation in banded storage.

    ``bands`` has shape (5, n), row-aligned: ``bands[d+2][i] = C[i, i+d]``
    for offsets d in -2..2 (entries addressing outside the matrix are 0).
    ``alphas`` holds the realized alpha_0..alpha_{n-2} plus beta in the
    last slot.  The factor diagonals are kept for the appendix lemmas.
    """

    n: int
    beta: complex
    alphas: np.ndarray
    bands: np.ndarray
    l_diag: np.ndarray
    l_off: np.ndarray
    m_diag: np.ndarray
    m_off: np.ndarray


@dataclass(frozen=True)
class TrialVector:
    """Structured trial vector for the variational bound."""

    n: int
    entries: np.ndarray
    kind: str
    gamma: Optional[int] = None


@dataclass(frozen=True)
class EigenvalueBall:
    """Localization around 1 certified by a residual (normal operator).

    Some eigenvalue lies within chordal distance ``chordal_radius`` of 1;
    on the unit circle that is the arc |theta| <= ``angular_radius``.
    """

    chordal_radius: float
    angular_radius: float


@dataclass(frozen=True)
class ResolventGapReport:
    n: int
    min_distance: float     # min_k |zeta_k - 1| = 2 sin(gap angle / 2)
    bound: float            # 2 |alpha_{n-1}|
    passed: bool


@dataclass(frozen=True)
class SignPatternReport:
    n: int
    m: int
    det_sign: float
    parity_prediction: float
    scaled_abs_det: float
    passed: bool


def _factor_diagonals(alphas, n):
    """Diagonal and off-diagonal arrays of the L and M block factors."""
    rho = np.sqrt(np.maximum(0.0, 1.0 - np.abs(alphas) ** 2))
    rho[n - 1] = 0.0
    l_diag = np.ones(n, dtype=np.complex128)
    l_off = np.zeros(n - 1, dtype=np.float64)
    m_diag = np.ones(n, dtype=np.complex128)
    m_off = np.zeros(n - 1, dtype=np.float64)
    m_diag[0] = 1.0
    for start, diag, off in ((0, l_diag, l_off), (1, m_diag, m_off)):
        js = np.arange(start, n - 1, 2)
        diag[js] = np.conj(alphas[js])
        diag[js + 1] = -alphas[js]
        off[js] = rho[js]
    # a half block cut by the truncation leaves the bare 1x1 entry conj(beta)
    if (n - 1) % 2 == 0:
        l_diag[n - 1] = np.conj(alphas[n - 1])
    else:
        m_diag[n - 1] = np.conj(alphas[n - 1])
    return l_diag, l_off, m_diag, m_off


def _tridiag(diag, off):
    n = diag.size
    return sp.diags([off, diag, off], offsets=(-1, 0, 1), shape=(n, n), format="csr")


def build_cmv(seq, n, beta):
    """CMV truncation of dimension n with the boundary coefficient beta.

    Raises
    ------
    DomainError
        If ``|beta|`` is off 1 by more than 1e-12 or some ``|alpha_j| >= 1``.
    """
    n = int(n)
    if n < 1:
        raise DomainError("build_cmv needs n >= 1")
    beta = complex(beta)
    if abs(abs(beta) - 1.0) > 1e-12:
        raise DomainError(f"boundary coefficient must be unimodular, got |beta| = {abs(beta)}")
    beta = beta / abs(beta)
    alphas = np.concatenate((seq.prefix(n - 1), [beta]))
    l_diag, l_off, m_diag, m_off = _factor_diagonals(alphas, n)
    product = _tridiag(l_diag, l_off) @ _tridiag(m_diag, m_off)
    bands = np.zeros((5, n), dtype=np.complex128)
    for d in _BAND_OFFSETS:
        diag = product.diagonal(d)
        if d >= 0:
            bands[d + 2, : n - d] = diag
        else:
            bands[d + 2, -d:] = diag
    for arr in (alphas, bands, l_diag, l_off, m_diag, m_off):
        arr.setflags(write=False)
    return CMVOperator(
        n=n,
        beta=beta,
        alphas=alphas,
        bands=bands,
        l_diag=l_diag,
        l_off=l_off,
        m_diag=m_diag,
        m_off=m_off,
    )


def apply(op, v):
    """Banded matrix-vector product C v in O(n)."""
    v = np.asarray(v)
    if v.shape != (op.n,):
        raise DomainError(f"dimension mismatch: operator is {op.n}, vector is {v.shape}")
    b = op.bands
    y = b[2] * v
    y[:-1] += b[3][:-1] * v[1:]
    if op.n > 2:
        y[:-2] += b[4][:-2] * v[2:]
    y[1:] += b[1][1:] * v[:-1]
    if op.n > 2:
        y[2:] += b[0][2:] * v[:-2]
    return y


def dense(op):
    """Materialize the operator; intended for tests and small dumps."""
    out = np.zeros((op.n, op.n), dtype=np.complex128)
    idx = np.arange(op.n)
    for d in _BAND_OFFSETS:
        rows = idx[max(0, -d) : op.n - max(0, d)]
        out[rows, rows + d] = op.bands[d + 2][rows]
    return out


def m_minus_l(op):
    """Dense M - L, the self-adjoint tridiagonal of the resolvent lemma."""
    n = op.n
    out = np.zeros((n, n), dtype=np.complex128)
    idx = np.arange(n)
    out[idx, idx] = op.m_diag - op.l_diag
    out[idx[:-1], idx[:-1] + 1] = op.m_off - op.l_off
    out[idx[:-1] + 1, idx[:-1]] = op.m_off - op.l_off
    return out


def gamma_n(n, b):
    """Support cutoff n - n^((1+b)/2), rounded to the nearest integer."""
    return int(n - round(float(n) ** ((1.0 + b) / 2.0)))


def trial_nu(n, gamma):
    """Quadratic-tent trial vector on 1-based positions gamma < j < n.

    Entries are (j-gamma)(n-j) at even j and i(j-gamma)(n-j) at odd j,
    zero elsewhere, so ||nu||^2 = sum_{gamma<j<n} (j-gamma)^2 (n-j)^2.
    """
    n = int(n)
    gamma = int(gamma)
    if not 0 <= gamma < n - 1:
        raise DomainError(f"need 0 <= gamma < n-1, got gamma={gamma}, n={n}")
    j = np.arange(1, n + 1, dtype=np.float64)
    w = np.where((j > gamma) & (j < n), (j - gamma) * (n - j), 0.0)
    entries = np.where(j % 2 == 0, w, 1j * w).astype(np.complex128)
    entries.setflags(write=False)
    return TrialVector(n=n, entries=entries, kind="nu", gamma=gamma)


def trial_upsilon(n):
    """Unit indicator of the window (n - sqrt(n), n), scaled by n^(-1/4).

    1-based support runs from floor(n - sqrt(n)) + 1 through n - 1; the
    vector is renormalized to unit norm after the endpoint rounding.
    """
    n = int(n)
    if n < 4:
        raise DomainError(f"trial_upsilon needs n >= 4, got {n}")
    j = np.arange(1, n + 1, dtype=np.float64)
    lo = math.floor(n - math.sqrt(n))
    entries = np.where((j >= lo + 1) & (j <= n - 1), n ** -0.25, 0.0).astype(np.complex128)
    entries /= np.linalg.norm(entries)
    entries.setflags(write=False)
    return TrialVector(n=n, entries=entries, kind="upsilon")


def residual(op, v):
    """Normalized residual ||(C - 1) v|| / ||v|| via the banded apply."""
    vec = v.entries if isinstance(v, TrialVector) else np.asarray(v, dtype=np.complex128)
    norm = np.linalg.norm(vec)
    if norm == 0.0:
        raise DomainError("residual needs a nonzero vector")
    return float(np.linalg.norm(apply(op, vec) - vec) / norm)


def eigenvalue_ball(residual_value):
    """Localization radius from a unit-vector residual against a normal operator.

    Raises
    ------
    DomainError
        If the residual is negative or >= 2 (the ball covers the circle).
    """
    r = float(residual_value)
    if not 0.0 <= r < 2.0:
        raise DomainError(f"residual must lie in [0, 2), got {r}")
    return EigenvalueBall(chordal_radius=r, angular_radius=2.0 * math.asin(0.5 * r))


def resolvent_gap_check(seq, n):
    """Check min_k |zeta_k - 1| > 2 |alpha_{n-1}| for beta = -1.

    Requires the first n coefficients to be real, negative, and strictly
    increasing.  The eigenvalue gap is measured through the phase zero
    finder (exact for a normal operator) instead of forming an inverse.
    """
    n = int(n)
    if n < 2:
        raise DomainError("resolvent_gap_check needs n >= 2")
    alphas = seq.prefix(n)
    if np.any(alphas.imag != 0.0):
        raise PreconditionError(
            "resolvent bound needs a real sequence",
            indices=np.nonzero(alphas.imag != 0.0)[0].tolist(),
        )
    re = alphas.real
    bad = np.nonzero(~((re < 0.0) & (np.concatenate((np.diff(re), [1.0])) > 0.0)))[0]
    if bad.size:
        raise PreconditionError(
            "resolvent bound needs alpha_j < alpha_{j+1} < 0",
            indices=bad.tolist(),
        )
    ccw = nearest_zero_to_one(seq, n, -1.0, side="ccw")
    cw = nearest_zero_to_one(seq, n, -1.0, side="cw")
    gap_angle = min(ccw, 2.0 * math.pi - cw)
    min_distance = 2.0 * math.sin(0.5 * gap_angle)
    bound = 2.0 * abs(float(re[n - 1]))
    return ResolventGapReport(
        n=n, min_distance=min_distance, bound=bound, passed=min_distance > bound
    )


def sign_pattern_invertibility(J):
    """Determinant sign test for the alternating tridiagonal pattern.

    The pattern has diagonal signs +,-,+,-,... and off-diagonal signs
    -,+,-,... (both sides), every patterned entry nonzero, all other
    entries zero.  With n = 2m or 2m+1 the determinant is predicted to
    carry sign(J11) for even m and -sign(J11) for odd m; the determinant
    is computed by pivoted elimination after row scaling.

    Raises
    ------
    PatternError
        If the matrix does not match the sign pattern.
    """
    J = np.asarray(J, dtype=np.float64)
    if J.ndim != 2 or J.shape[0] != J.shape[1] or J.shape[0] < 1:
        raise PatternError(f"need a square matrix, got shape {J.shape}")
    n = J.shape[0]
    i = np.arange(n)
    diag_signs = np.where(i % 2 == 0, 1.0, -1.0)
    if np.any(J[i, i] * diag_signs <= 0.0):
        raise PatternError("main diagonal must alternate +,-,+,-,... and be nonzero")
    if n > 1:
        k = np.arange(n - 1)
        off_signs = np.where(k % 2 == 0, -1.0, 1.0)
        if np.any(J[k, k + 1] * off_signs <= 0.0) or np.any(J[k + 1, k] * off_signs <= 0.0):
            raise PatternError("off-diagonals must alternate -,+,-,... and be nonzero")
    mask = np.abs(i[:, None] - i[None, :]) > 1
    if np.any(J[mask] != 0.0):
        raise PatternError("entries beyond the three main diagonals must be zero")

    scaled = J / np.abs(J).max(axis=1, keepdims=True)
    sign, logabs = np.linalg.slogdet(scaled)
    m = n // 2
    prediction = 1.0 if m % 2 == 0 else -1.0
    scaled_abs = float(np.exp(logabs)) if sign != 0 else 0.0
    return SignPatternReport(
        n=n,
        m=m,
        det_sign=float(sign),
        parity_prediction=prediction,
        scaled_abs_det=scaled_abs,
        passed=bool(sign == prediction and scaled_abs > 1e-12),
    )


def write_dense_csv(op, path):
    """Dump nonzero entries as CSV rows ``i, j, re, im`` (n <= 64 only)."""
    if op.n > 64:
        raise DomainError(f"dense dump is limited to n <= 64, got n = {op.n}")
    mat = dense(op)
    with open(path, "w", newline="", encoding="utf-8") as fh:
        writer = csv.writer(fh)
        writer.writerow(["i", "j", "re", "im"])
        for i in range(op.n):
            for j in range(op.n):
                v = mat[i, j]
                if v != 0:
                    writer.writerow([i, j, repr(float(v.real)), repr(float(v.imag))])
