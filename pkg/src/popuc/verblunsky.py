"""Verblunsky coefficient sequences, decay control functions, and the region P.

A :class:`VerblunskySequence` is a rule ``n -> alpha_n`` with every
coefficient in the open unit disk.  Realized prefixes are cached, so a
length-10^6 prefix costs one vectorized evaluation and is then shared by
every consumer.  Sequences are immutable after construction; the cache is
a grow-only, write-once-per-index table, safe to read concurrently.
"""

import math
from dataclasses import dataclass
from typing import Optional

import numpy as np

from .errors import DomainError

__all__ = [
    "VerblunskySequence",
    "DecayProfile",
    "RegionP",
    "SlowDecayReport",
    "theta_alpha",
    "in_region_P",
    "sample_region_P",
    "validate_slow_decay",
]


def theta_alpha(alpha):
    """Half-gap angle 2*arcsin|alpha| of the constant-coefficient measure.

    Raises
    ------
    DomainError
        If ``|alpha| >= 1``.
    """
    a = abs(alpha)
    if a >= 1.0:
        raise DomainError(f"theta_alpha needs |alpha| < 1, got |alpha| = {a}")
    return 2.0 * math.asin(a)


@dataclass(frozen=True)
class RegionP:
    """Closed-left region {z in the open disk : Re z <= Re alpha}.

    ``alpha`` must lie in the disk ``|z + 1/2| < 1/2`` (for real alpha this
    is the interval (-1, 0)).
    """

    alpha: complex

    def __post_init__(self):
        if abs(self.alpha + 0.5) >= 0.5:
            raise DomainError(
                f"region parameter must satisfy |alpha + 1/2| < 1/2, got {self.alpha}"
            )

    @property
    def threshold(self):
        """Real-part bound Re(alpha)."""
        return self.alpha.real if isinstance(self.alpha, complex) else float(self.alpha)

    def contains(self, z):
        """Vectorized membership test; see :func:`in_region_P`."""
        z = np.asarray(z)
        return (np.abs(z) < 1.0) & (z.real <= self.threshold)


def in_region_P(z, region):
    """True iff ``|z| < 1`` and ``Re z <= Re alpha`` (unit circle excluded)."""
    return bool(region.contains(complex(z)))


def sample_region_P(region, size, rng, radius=0.9):
    """Draw ``size`` points uniformly from ``P_alpha`` intersected with |z| <= radius.

    Rejection sampling from the enclosing rectangle; ``rng`` is a
    ``numpy.random.Generator`` so draws are reproducible.
    """
    if not -radius < region.threshold:
        raise DomainError("sampling region is empty for this radius")
    out = np.empty(size, dtype=complex)
    have = 0
    while have < size:
        m = max(size - have, 64)
        x = rng.uniform(-radius, region.threshold, m)
        y = rng.uniform(-radius, radius, m)
        z = x + 1j * y
        z = z[np.abs(z) <= radius]
        take = min(size - have, z.size)
        out[have : have + take] = z[:take]
        have += take
    return out


class VerblunskySequence:
    """A coefficient rule with a cached realized prefix.

    Use the factory classmethods (:meth:`power_law`, :meth:`log_law`,
    :meth:`constant`, :meth:`from_values`, :meth:`from_rule`) or
    :meth:`parse` for the CLI mini-format
    ``power:C,b | log | const:re,im | file:<path>``.
    """

    def __init__(self, rule, kind="custom", params=(), vector_rule=None, length=None):
        self._rule = rule
        self._vector_rule = vector_rule
        self.kind = kind
        self.params = tuple(params)
        self.length = length  # None = unbounded
        self._cache = np.empty(0, dtype=np.complex128)

    # -- factories ---------------------------------------------------------

    @classmethod
    def power_law(cls, c, b):
        """alpha_n = -C*(n+2)^(-b) with C > 0 and 0 < b < 1."""
        if not (c > 0.0 and 0.0 < b < 1.0):
            raise DomainError(f"power law needs C > 0 and b in (0,1), got C={c}, b={b}")
        return cls(
            lambda n: -c * (n + 2.0) ** (-b),
            kind="power-law",
            params=(float(c), float(b)),
            vector_rule=lambda ns: -c * np.power(ns + 2.0, -b),
        )

    @classmethod
    def log_law(cls):
        """alpha_n = -1/log(n+3)."""
        return cls(
            lambda n: -1.0 / math.log(n + 3.0),
            kind="log-law",
            vector_rule=lambda ns: -1.0 / np.log(ns + 3.0),
        )

    @classmethod
    def constant(cls, alpha):
        """alpha_n = alpha for every n."""
        alpha = complex(alpha)
        if abs(alpha) >= 1.0:
            raise DomainError(f"constant coefficient must have |alpha| < 1, got {alpha}")
        return cls(
            lambda n: alpha,
            kind="constant",
            params=(alpha,),
            vector_rule=lambda ns: np.full(ns.shape, alpha, dtype=np.complex128),
        )

    @classmethod
    def from_values(cls, values):
        """Finite explicit coefficient list; realized and validated up front."""
        arr = np.asarray(values, dtype=np.complex128)
        if arr.ndim != 1:
            raise DomainError("explicit coefficient list must be one-dimensional")
        seq = cls(lambda n: arr[n], kind="explicit", length=arr.size)
        seq._extend_cache_with(arr)
        return seq

    @classmethod
    def from_rule(cls, rule, kind="custom", vector_rule=None):
        """Wrap an arbitrary ``n -> alpha_n`` callable."""
        return cls(rule, kind=kind, vector_rule=vector_rule)

    @classmethod
    def parse(cls, text):
        """Parse the mini-format ``power:C,b | log | const:re,im | file:<path>``."""
        text = text.strip()
        if text == "log":
            return cls.log_law()
        if text.startswith("power:"):
            try:
                c_str, b_str = text[len("power:") :].split(",")
                return cls.power_law(float(c_str), float(b_str))
            except (ValueError, TypeError) as exc:
                raise DomainError(f"bad power spec {text!r}: {exc}") from exc
        if text.startswith("const:"):
            try:
                re_str, im_str = text[len("const:") :].split(",")
                return cls.constant(complex(float(re_str), float(im_str)))
            except (ValueError, TypeError) as exc:
                raise DomainError(f"bad const spec {text!r}: {exc}") from exc
        if text.startswith("file:"):
            path = text[len("file:") :]
            rows = []
            with open(path, "r", encoding="utf-8") as fh:
                for line in fh:
                    line = line.strip()
                    if not line:
                        continue
                    re_str, im_str = line.split()
                    rows.append(complex(float(re_str), float(im_str)))
            return cls.from_values(rows)
        raise DomainError(f"unrecognized sequence spec {text!r}")

    # -- realization -------------------------------------------------------

    def _extend_cache_with(self, block):
        bad = np.abs(block) >= 1.0
        if bad.any():
            first = int(np.argmax(bad)) + self._cache.size
            raise DomainError(
                f"coefficient alpha_{first} has modulus >= 1: {block[np.argmax(bad)]}"
            )
        merged = np.concatenate((self._cache, block))
        merged.setflags(write=False)
        self._cache = merged

    def prefix(self, m):
        """Read-only array of alpha_0 .. alpha_{m-1}.

        Raises
        ------
        IndexError
            If the sequence is a finite explicit list shorter than ``m``.
        """
        m = int(m)
        if m < 0:
            raise DomainError("prefix length must be nonnegative")
        if self.length is not None and m > self.length:
            raise IndexError(
                f"sequence has only {self.length} coefficients, {m} requested"
            )
        if m > self._cache.size:
            lo, hi = self._cache.size, m
            if self._vector_rule is not None:
                block = np.asarray(
                    self._vector_rule(np.arange(lo, hi, dtype=np.float64)),
                    dtype=np.complex128,
                )
            else:
                block = np.fromiter(
                    (self._rule(n) for n in range(lo, hi)),
                    dtype=np.complex128,
                    count=hi - lo,
                )
            self._extend_cache_with(block)
        return self._cache[:m]

    def alpha(self, n):
        """Coefficient alpha_n as a Python complex."""
        return complex(self.prefix(int(n) + 1)[int(n)])

    def __repr__(self):
        tail = f", params={self.params}" if self.params else ""
        return f"VerblunskySequence(kind={self.kind!r}{tail})"


class DecayProfile:
    """Control function f of the slow-decay conditions.

    ``tag`` is ``"power"`` when f has the exact form -C*(n+shift)^(-b)
    (the first branch of condition (i)) and ``"general"`` otherwise.
    The rule must accept numpy float arrays of indices n >= 1.
    """

    def __init__(self, rule, tag, c=None, b=None, shift=0.0, label=""):
        if tag not in ("power", "general"):
            raise DomainError(f"profile tag must be 'power' or 'general', got {tag!r}")
        self.rule = rule
        self.tag = tag
        self.c = c
        self.b = b
        self.shift = shift
        self.label = label or tag

    @classmethod
    def power(cls, c, b, shift=0.0):
        """f(n) = -C*(n+shift)^(-b); shift=2 matches the power-law sequences."""
        if not (c > 0.0 and 0.0 < b < 1.0):
            raise DomainError(f"power profile needs C > 0 and b in (0,1), got C={c}, b={b}")
        return cls(
            lambda ns: -c * np.power(np.asarray(ns, dtype=np.float64) + shift, -b),
            tag="power",
            c=float(c),
            b=float(b),
            shift=float(shift),
            label=f"-{c}*(n+{shift})^(-{b})",
        )

    @classmethod
    def log_law(cls):
        """f(n) = -1/log(n+3), the canonical second-branch example."""
        return cls(
            lambda ns: -1.0 / np.log(np.asarray(ns, dtype=np.float64) + 3.0),
            tag="general",
            label="-1/log(n+3)",
        )

    @classmethod
    def custom(cls, rule, tag="general", label=""):
        return cls(rule, tag=tag, label=label)

    def values(self, ns):
        """Evaluate f on an array of (possibly non-integer) indices."""
        return np.asarray(self.rule(np.asarray(ns, dtype=np.float64)), dtype=np.float64)

    def __repr__(self):
        return f"DecayProfile({self.label!r}, tag={self.tag!r})"


@dataclass(frozen=True)
class SlowDecayReport:
    """One flag per slow-decay condition plus the measured diagnostics."""

    n_max: int
    k_max: int
    tol: float
    divergence_threshold: float
    cond_i: bool
    i_branch: int
    i_value: float          # sqrt(n) * f(n - sqrt n)^2 at n = n_max
    i_increasing: bool
    cond_ii: bool
    cond_iii: bool
    iii_worst: float        # max_k |f(n - k sqrt n)/f(n) - 1| at n = n_max
    cond_iv: bool
    iv_deviation: float     # |alpha_n/f(n) - 1| at n = n_max
    cond_v: bool
    v_m0: Optional[int]     # smallest valid m0, None if condition (v) fails up to n_max

    @property
    def passed(self):
        return self.cond_i and self.cond_ii and self.cond_iii and self.cond_iv and self.cond_v


def validate_slow_decay(profile, seq, n_max, k_max, tol, divergence_threshold=10.0):
    """Check the five slow-decay conditions numerically up to ``n_max``.

    Condition semantics (all at finite range, reported not proved):

    i.   power tag, or sqrt(n)*f(n - sqrt n)^2 increasing over the last
         decade of n and above ``divergence_threshold`` at n = n_max;
    ii.  f strictly increasing and negative on 1..n_max, |f| shrinking
         over the last decade;
    iii. |f(n - k*sqrt(n))/f(n) - 1| < tol at n = n_max for k <= k_max;
    iv.  |alpha_n/f(n) - 1| < tol at n = n_max;
    v.   reports the smallest m0 <= n_max with Re(alpha_n) <= f(m) for all
         m0 <= m <= n_max and n <= m (None, and a failed flag, if there is
         no such m0).
    """
    n_max = int(n_max)
    k_max = int(k_max)
    if n_max < 100:
        raise DomainError(f"n_max must be at least 100, got {n_max}")
    if k_max < 1:
        raise DomainError(f"k_max must be at least 1, got {k_max}")

    alphas = seq.prefix(n_max + 1)
    ns = np.arange(1.0, n_max + 1.0)
    fv = profile.values(ns)

    # (ii) strict monotone increase toward 0 from below
    monotone = bool(np.all(fv[:-1] < fv[1:]) and np.all(fv < 0.0))
    decade_shrink = bool(abs(fv[-1]) < abs(fv[max(n_max // 10, 1) - 1]))
    cond_ii = monotone and decade_shrink

    # (i) divergence diagnostic over the last decade (geometric grid)
    grid = np.unique(np.geomspace(max(n_max / 10.0, 2.0), float(n_max), 64))
    div_vals = np.sqrt(grid) * profile.values(grid - np.sqrt(grid)) ** 2
    i_increasing = bool(np.all(np.diff(div_vals) > 0.0))
    i_value = float(div_vals[-1])
    if profile.tag == "power":
        i_branch, cond_i = 1, True
    else:
        i_branch = 2
        cond_i = i_increasing and i_value > divergence_threshold

    # (iii) ratio stability under sqrt-size shifts, at n = n_max
    ks = np.arange(1.0, k_max + 1.0)
    shifted = profile.values(n_max - ks * math.sqrt(n_max))
    f_at_n = float(profile.values(np.array([float(n_max)]))[0])
    iii_worst = float(np.max(np.abs(shifted / f_at_n - 1.0)))
    cond_iii = iii_worst < tol

    # (iv) alpha tracks f
    iv_deviation = float(abs(alphas[n_max] / f_at_n - 1.0))
    cond_iv = iv_deviation < tol

    # (v) prefix maxima of Re(alpha) against f(m), m = 1..n_max
    run_max = np.maximum.accumulate(alphas.real)
    ok = run_max[1:] <= fv  # position m-1 <-> index m
    if bool(ok[-1]):
        bad = np.nonzero(~ok)[0]
        v_m0 = int(bad[-1]) + 2 if bad.size else 1
        cond_v = True
    else:
        v_m0 = None
        cond_v = False

    return SlowDecayReport(
        n_max=n_max,
        k_max=k_max,
        tol=float(tol),
        divergence_threshold=float(divergence_threshold),
        cond_i=cond_i,
        i_branch=i_branch,
        i_value=i_value,
        i_increasing=i_increasing,
        cond_ii=cond_ii,
        cond_iii=cond_iii,
        iii_worst=iii_worst,
        cond_iv=cond_iv,
        iv_deviation=iv_deviation,
        cond_v=cond_v,
        v_m0=v_m0,
    )
