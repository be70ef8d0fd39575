"""Generic three-term recurrence machinery.

Works with any coefficient family object exposing ``a_coeff(n)`` and
``b_sq_coeff(n)`` (the recurrence X_{n+1} - (z - a_n) X_n + b_n^2 X_{n-1}
= 0).  Sequences carry a per-index logarithmic scale so that residual and
ratio tests stay meaningful when values leave the comfortable double
range; forward evaluation renormalizes every ``RENORM_EVERY`` steps.
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass

import numpy as np

from .errors import (
    IndexOutOfWindow,
    Overflow,
    ZeroDenominator,
    ZeroDivisor,
)

RENORM_EVERY = 50
_LOG_HUGE = 700.0  # ~ log(1e304)


@dataclass(frozen=True)
class Scaled:
    """A complex value stored as mantissa * exp(log_scale)."""

    mantissa: complex
    log_scale: float = 0.0

    @classmethod
    def of(cls, value) -> "Scaled":
        return cls(complex(value), 0.0)

    @property
    def value(self) -> complex:
        if self.mantissa == 0:
            return 0.0 + 0.0j
        if self.log_scale > _LOG_HUGE:
            raise Overflow("scaled value exceeds the double range")
        return self.mantissa * math.exp(self.log_scale)

    def log_abs(self) -> float:
        if self.mantissa == 0:
            return -math.inf
        return math.log(abs(self.mantissa)) + self.log_scale

    def __mul__(self, other):
        if isinstance(other, Scaled):
            return Scaled(self.mantissa * other.mantissa, self.log_scale + other.log_scale)
        return Scaled(self.mantissa * complex(other), self.log_scale)

    __rmul__ = __mul__

    def ratio(self, other: "Scaled") -> complex:
        if other.mantissa == 0:
            raise ZeroDivisor("ratio against a zero value")
        shift = self.log_scale - other.log_scale
        if shift > _LOG_HUGE:
            raise Overflow("ratio exceeds the double range")
        return self.mantissa / other.mantissa * math.exp(shift)

    def normalized(self) -> "Scaled":
        m = abs(self.mantissa)
        if m == 0 or m == 1.0:
            return self
        return Scaled(self.mantissa / m, self.log_scale + math.log(m))


@dataclass(frozen=True)
class SolutionSequence:
    """An indexed run of solution values over a contiguous window."""

    start_index: int
    mantissas: tuple
    log_scales: tuple
    provenance: str = ""

    def __post_init__(self):
        if len(self.mantissas) != len(self.log_scales):
            raise ValueError("mantissas and log_scales must have equal length")

    @classmethod
    def from_values(cls, start_index, values, provenance="") -> "SolutionSequence":
        vals = [complex(v) for v in values]
        return cls(start_index, tuple(vals), tuple(0.0 for _ in vals), provenance)

    @classmethod
    def from_scaled(cls, start_index, scaled_values, provenance="") -> "SolutionSequence":
        items = [s.normalized() for s in scaled_values]
        return cls(
            start_index,
            tuple(s.mantissa for s in items),
            tuple(s.log_scale for s in items),
            provenance,
        )

    @classmethod
    def from_function(cls, fn, start_index, stop_index, provenance="") -> "SolutionSequence":
        """Build a window from a per-index evaluator returning Scaled."""
        return cls.from_scaled(
            start_index,
            [fn(n) for n in range(start_index, stop_index + 1)],
            provenance,
        )

    def __len__(self):
        return len(self.mantissas)

    @property
    def stop_index(self) -> int:
        return self.start_index + len(self) - 1

    def window(self):
        return self.start_index, self.stop_index

    def _pos(self, n: int) -> int:
        pos = n - self.start_index
        if pos < 0 or pos >= len(self):
            raise IndexOutOfWindow(
                f"index {n} outside window [{self.start_index}, {self.stop_index}]"
            )
        return pos

    def scaled(self, n: int) -> Scaled:
        pos = self._pos(n)
        return Scaled(self.mantissas[pos], self.log_scales[pos])

    def value(self, n: int) -> complex:
        return self.scaled(n).value

    def values(self):
        return [self.value(n) for n in range(self.start_index, self.stop_index + 1)]


def coeffs(family, n: int):
    """Recurrence coefficients (a_n, b_n^2) of the family at index n."""
    return family.a_coeff(n), family.b_sq_coeff(n)


def forward_eval(family, z, x_prev, x_0, n_max: int, provenance="forward") -> SolutionSequence:
    """Iterate X_{n+1} = (z - a_n) X_n - b_n^2 X_{n-1} from the seeds.

    Seeds are (X_{-1}, X_0); with (0, 1) the result is the sequence of
    monic polynomials in z.  The running pair is renormalized every
    ``RENORM_EVERY`` steps with the scale tracked separately.
    """
    if n_max < 0:
        raise ValueError("n_max must be >= 0")
    z = complex(z)
    mantissas = [complex(x_prev), complex(x_0)]
    scales = [0.0, 0.0]
    prev, cur = mantissas[0], mantissas[1]
    log_scale = 0.0
    for n in range(0, n_max):
        a_n, b_sq = coeffs(family, n)
        nxt = (z - a_n) * cur - b_sq * prev
        if not (math.isfinite(nxt.real) and math.isfinite(nxt.imag)):
            raise Overflow(f"forward recurrence overflowed at index {n + 1}")
        prev, cur = cur, nxt
        if (n + 1) % RENORM_EVERY == 0:
            top = max(abs(prev), abs(cur))
            if top > 0:
                prev /= top
                cur /= top
                log_scale += math.log(top)
        mantissas.append(cur)
        scales.append(log_scale)
    return SolutionSequence(-1, tuple(mantissas), tuple(scales), provenance)


def residual(family, z, seq: SolutionSequence, n: int) -> complex:
    """X_{n+1} - (z - a_n) X_n + b_n^2 X_{n-1}; zero for exact solutions."""
    a_n, b_sq = coeffs(family, n)
    t1 = seq.scaled(n + 1)
    t2 = seq.scaled(n) * (complex(z) - a_n)
    t3 = seq.scaled(n - 1) * b_sq
    shift = max(t.log_scale for t in (t1, t2, t3))
    total = (
        t1.mantissa * math.exp(t1.log_scale - shift)
        - t2.mantissa * math.exp(t2.log_scale - shift)
        + t3.mantissa * math.exp(t3.log_scale - shift)
    )
    return Scaled(total, shift).value


def relative_residual(family, z, seq: SolutionSequence, n: int) -> float:
    """|residual| normalized by the largest of the three recurrence terms."""
    a_n, b_sq = coeffs(family, n)
    t1 = seq.scaled(n + 1)
    t2 = seq.scaled(n) * (complex(z) - a_n)
    t3 = seq.scaled(n - 1) * b_sq
    shift = max(t.log_scale for t in (t1, t2, t3))
    parts = [t.mantissa * math.exp(t.log_scale - shift) for t in (t1, t2, t3)]
    scale = max(abs(p) for p in parts)
    if scale == 0:
        return 0.0
    return abs(parts[0] - parts[1] + parts[2]) / scale


def casoratian(x: SolutionSequence, y: SolutionSequence, n: int) -> complex:
    """Discrete Wronskian X_n Y_{n+1} - X_{n+1} Y_n."""
    a = x.scaled(n) * y.scaled(n + 1)
    b = x.scaled(n + 1) * y.scaled(n)
    shift = max(a.log_scale, b.log_scale)
    diff = a.mantissa * math.exp(a.log_scale - shift) - b.mantissa * math.exp(
        b.log_scale - shift
    )
    return Scaled(diff, shift).value


def minimality_ratio(candidate: SolutionSequence, dominant: SolutionSequence):
    """|candidate_n / dominant_n| over the shared window.

    The dominant sequence must not vanish there; geometric decay of the
    returned list is the minimality signature.
    """
    lo = max(candidate.start_index, dominant.start_index)
    hi = min(candidate.stop_index, dominant.stop_index)
    if hi < lo:
        raise IndexOutOfWindow("sequences share no indices")
    ratios = []
    for n in range(lo, hi + 1):
        c = candidate.scaled(n)
        d = dominant.scaled(n)
        if d.mantissa == 0:
            raise ZeroDivisor(f"dominant sequence vanishes at index {n}")
        if c.mantissa == 0:
            ratios.append(0.0)
        else:
            ratios.append(math.exp(c.log_abs() - d.log_abs()))
    return ratios


def cf_truncated(family, z, depth: int) -> complex:
    """Evaluate the J-fraction z - a_0 - b_1^2/(z - a_1 - ...) bottom-up
    from tail value 0 at the given depth."""
    if depth < 1:
        raise ValueError("depth must be >= 1")
    z = complex(z)
    tail = 0.0 + 0.0j
    for k in range(depth - 1, 0, -1):
        a_k, b_sq = coeffs(family, k)
        den = z - a_k - tail
        if den == 0:
            raise ZeroDenominator(f"convergent hit a pole at level {k}")
        tail = b_sq / den
    a_0, _ = coeffs(family, 0)
    return z - a_0 - tail


def cf_adaptive(family, z, rel_tol: float = 1e-12, start_depth: int = 32, max_depth: int = 1 << 16):
    """Double the truncation depth until successive values agree.

    Returns (value, depth).  A pole hit at some depth is retried at a
    slightly perturbed depth.
    """

    def attempt(d):
        for shift in (0, 1, 3, 7):
            try:
                return cf_truncated(family, z, d + shift)
            except ZeroDenominator:
                continue
        raise ZeroDenominator(f"persistent pole near depth {d}")

    depth = start_depth
    prev = attempt(depth)
    while depth <= max_depth:
        depth *= 2
        cur = attempt(depth)
        if abs(cur - prev) <= rel_tol * max(abs(cur), 1e-300):
            return cur, depth
        prev = cur
    raise ZeroDenominator(f"continued fraction did not settle by depth {max_depth}")


def characteristic_roots(z, product):
    """Roots of lambda^2 - z lambda + product, ordered (small, large).

    These are the large-n growth rates of a recurrence whose
    coefficients tend to a_n -> 0, b_n^2 -> product.
    """
    z = complex(z)
    disc = cmath.sqrt(z * z - 4.0 * product)
    r1 = 0.5 * (z + disc)
    r2 = 0.5 * (z - disc)
    if abs(r1) >= abs(r2):
        return r2, r1
    return r1, r2


def poly_coeffs(family, n_max: int):
    """Monomial coefficient arrays of the monic polynomials P_0..P_{n_max}.

    Row n holds the coefficients of P_n(z) from degree 0 upward; the
    recurrence is applied directly to the coefficient arrays, so the
    leading coefficient is exactly 1 by construction.
    """
    if n_max < 0:
        raise ValueError("n_max must be >= 0")
    prev = np.array([0.0], dtype=complex)  # P_{-1}
    cur = np.array([1.0], dtype=complex)  # P_0
    out = [cur]
    for n in range(0, n_max):
        a_n, b_sq = coeffs(family, n)
        nxt = np.zeros(n + 2, dtype=complex)
        nxt[1:] += cur  # z * P_n
        nxt[: n + 1] -= a_n * cur
        nxt[: len(prev)] -= b_sq * prev
        prev, cur = cur, nxt
        out.append(nxt)
    return out
