"""Low-level phase-lift kernels.

The recursion advanced here is, with ``eta_1(theta) = theta``,

    eta_k(theta) = eta_{k-1}(theta) + theta - 2*arg(1 - a_{k-2} * exp(i*eta_{k-1}(theta)))

using the principal branch of arg, which is smooth because
Re(1 - a*e^{ix}) >= 1 - |a| > 0 for |a| < 1.  One call costs O(len(alphas))
per evaluation point.

A numba-compiled kernel is used when available; the pure-numpy fallback is
kept both as insurance and as an independent implementation that the test
suite cross-checks against the compiled one.
"""

import math

import numpy as np

__all__ = ["eta_lift", "eta_lift_reference", "JIT_ENABLED"]


def _eta_lift_numpy(alpha_re, alpha_im, thetas):
    eta = thetas.astype(np.float64).copy()
    for j in range(alpha_re.shape[0]):
        phase = np.exp(1j * eta)
        w = 1.0 - (alpha_re[j] + 1j * alpha_im[j]) * phase
        eta += thetas - 2.0 * np.arctan2(w.imag, w.real)
    return eta


def _eta_lift_scalar_loop(alpha_re, alpha_im, thetas):
    out = np.empty(thetas.shape[0])
    for t in range(thetas.shape[0]):
        th = thetas[t]
        eta = th
        for j in range(alpha_re.shape[0]):
            c = math.cos(eta)
            s = math.sin(eta)
            re = 1.0 - (alpha_re[j] * c - alpha_im[j] * s)
            im = -(alpha_re[j] * s + alpha_im[j] * c)
            eta = eta + th - 2.0 * math.atan2(im, re)
        out[t] = eta
    return out


try:
    from numba import njit

    eta_lift = njit(cache=True)(_eta_lift_scalar_loop)
    JIT_ENABLED = True
except ImportError:  # pragma: no cover - exercised only without numba
    eta_lift = _eta_lift_numpy
    JIT_ENABLED = False

# reference path for cross-checking, always the interpreted one
eta_lift_reference = _eta_lift_numpy
