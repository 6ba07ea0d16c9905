"""Coefficient-level polynomial recursions and a simultaneous root finder.

Coefficient arrays are dense, complex, and degree-ascending (index j holds
the z^j coefficient).  These operations are meant for moderate degrees (up
to a few thousand); large-n work goes through :mod:`popuc.phase`, which
never forms coefficients.

The second-kind family is generated by the same recursion with every
coefficient sign-flipped (alpha -> -alpha).  Under that convention the
mixed product ``Psi_n^* Phi_n + Psi_n Phi_n^*`` equals
``2 z^n prod_{j<n}(1 - |alpha_j|^2)`` for monic arrays; the constant was
pinned by a hand check at n = 1.
"""

import csv
from dataclasses import dataclass

import numpy as np

from .errors import ConvergenceError, DomainError

__all__ = [
    "PolynomialPair",
    "SecondKindPair",
    "initial_pair",
    "szego_step",
    "polynomials_upto",
    "second_kind_upto",
    "paraorthogonal",
    "evaluate",
    "interior_roots",
    "write_coefficients_csv",
]

_UNIT_MODULUS_TOL = 1e-12
_SEED_OFFSET = 0.5 * (5.0 ** 0.5 - 1.0)  # irrational rotation, avoids symmetry traps


@dataclass(frozen=True)
class PolynomialPair:
    """Monic polynomial of degree ``n`` and its conjugate-reversed partner.

    ``phistar[j] == conj(phi[n-j])`` and ``phi[n] == 1`` by construction.
    """

    n: int
    phi: np.ndarray
    phistar: np.ndarray


class SecondKindPair(PolynomialPair):
    """Same layout, holding the sign-flipped (second kind) family."""


def _freeze(arr):
    arr = np.asarray(arr, dtype=np.complex128)
    arr.setflags(write=False)
    return arr


def initial_pair(cls=PolynomialPair):
    """Degree-zero pair (1, 1)."""
    one = _freeze([1.0])
    return cls(0, one, one)


def szego_step(pair, alpha):
    """One recursion step: degree n pair -> degree n+1 pair.

    phi' = z*phi - conj(alpha)*phistar, phistar' = conjugate reversal of phi'
    (this agrees with the coupled update phistar - alpha*z*phi to rounding).

    Raises
    ------
    DomainError
        If ``|alpha| >= 1``.
    """
    alpha = complex(alpha)
    if abs(alpha) >= 1.0:
        raise DomainError(f"szego_step needs |alpha| < 1, got {alpha}")
    shifted = np.concatenate(([0.0], pair.phi))
    padded = np.concatenate((pair.phistar, [0.0]))
    phi_next = shifted - np.conj(alpha) * padded
    phistar_next = np.conj(phi_next[::-1])
    return type(pair)(pair.n + 1, _freeze(phi_next), _freeze(phistar_next))


def polynomials_upto(seq, n):
    """Monic pair (Phi_n, Phi_n^*) from alpha_0 .. alpha_{n-1}."""
    n = int(n)
    if n < 0:
        raise DomainError("degree must be nonnegative")
    alphas = seq.prefix(n)
    pair = initial_pair()
    for a in alphas:
        pair = szego_step(pair, a)
    return pair


def second_kind_upto(seq, n):
    """Second-kind pair (Psi_n, Psi_n^*): the recursion run with -alpha_j."""
    n = int(n)
    if n < 0:
        raise DomainError("degree must be nonnegative")
    alphas = seq.prefix(n)
    pair = initial_pair(SecondKindPair)
    for a in alphas:
        pair = szego_step(pair, -a)
    return pair


def paraorthogonal(pair, beta):
    """Coefficients of z*phi - conj(beta)*phistar, degree n+1.

    Raises
    ------
    DomainError
        If ``beta`` is off the unit circle by more than 1e-12.
    """
    beta = complex(beta)
    if abs(abs(beta) - 1.0) > _UNIT_MODULUS_TOL:
        raise DomainError(f"boundary coefficient must be unimodular, got |beta| = {abs(beta)}")
    shifted = np.concatenate(([0.0], pair.phi))
    padded = np.concatenate((pair.phistar, [0.0]))
    return _freeze(shifted - np.conj(beta) * padded)


def evaluate(coeffs, z):
    """Horner evaluation of a degree-ascending coefficient array at ``z``.

    ``z`` may be a scalar or an array; relative error is O(degree * eps).
    """
    c = np.asarray(coeffs, dtype=np.complex128)
    if c.size == 0:
        raise DomainError("empty coefficient array")
    z = np.asarray(z, dtype=np.complex128)
    out = np.full(z.shape, c[-1])
    for j in range(c.size - 2, -1, -1):
        out = out * z + c[j]
    return out[()] if out.ndim == 0 else out


def _abs_scale(coeffs_abs, z_abs):
    # sum_j |c_j| * max(1, |z|)^j, a conservative evaluation-error scale
    base = np.maximum(z_abs, 1.0)
    out = np.full(z_abs.shape, coeffs_abs[-1])
    for j in range(coeffs_abs.size - 2, -1, -1):
        out = out * base + coeffs_abs[j]
    return out


def interior_roots(coeffs, tol=1e-12, max_iter=200):
    """All roots by simultaneous Aberth-Ehrlich iteration.

    Returns the degree-many roots with residual ``|p(root)| <= tol * scale``
    where ``scale`` is the coefficient-magnitude bound used by
    :func:`_abs_scale`.  Roots are seeded equally spaced on the circle of
    radius 0.9 with a fixed irrational rotation offset, which suits
    polynomials with all roots in the closed unit disk.

    Raises
    ------
    DomainError
        Degree < 1 or vanishing leading coefficient.
    ConvergenceError
        Residual target not met within ``max_iter`` sweeps; the error
        carries the best iterate and its residuals.
    """
    c = np.asarray(coeffs, dtype=np.complex128)
    if c.size < 2:
        raise DomainError("need degree >= 1")
    if c[-1] == 0:
        raise DomainError("leading coefficient must be nonzero")
    c = c / c[-1]
    d = c.size - 1
    if d == 1:
        return np.array([-c[0]])

    dc = c[1:] * np.arange(1, d + 1)
    k = np.arange(d)
    z = 0.9 * np.exp(1j * (2.0 * np.pi * k / d + _SEED_OFFSET))
    c_abs = np.abs(c)

    residuals = None
    for _ in range(max_iter):
        p = evaluate(c, z)
        residuals = np.abs(p)
        if np.all(residuals <= tol * _abs_scale(c_abs, np.abs(z))):
            return z
        dp = evaluate(dc, z)
        dp = np.where(dp == 0, 1e-300, dp)
        newton = p / dp
        diff = z[:, None] - z[None, :]
        np.fill_diagonal(diff, 1.0)
        inv = 1.0 / diff
        np.fill_diagonal(inv, 0.0)
        s = inv.sum(axis=1)
        denom = 1.0 - newton * s
        denom = np.where(denom == 0, 1e-300, denom)
        z = z - newton / denom
    raise ConvergenceError(
        f"Aberth iteration did not reach tol={tol} in {max_iter} sweeps",
        best=z,
        residuals=residuals,
    )


def write_coefficients_csv(coeffs, path):
    """Dump a coefficient array as CSV rows ``j, re, im``, degree-ascending."""
    c = np.asarray(coeffs, dtype=np.complex128)
    with open(path, "w", newline="", encoding="utf-8") as fh:
        writer = csv.writer(fh)
        writer.writerow(["j", "re", "im"])
        for j, v in enumerate(c):
            writer.writerow([j, repr(float(v.real)), repr(float(v.imag))])
