"""q-Pochhammer symbols and basic hypergeometric series.

Conventions used throughout the package: the base q is real with
0 < q < 1 (strictly), parameters and arguments are complex, and all sums
and products are evaluated in double precision with relative-tolerance
truncation.  An r-phi-s series is

    sum_k  [(a_1,...,a_r; q)_k / ((b_1,...,b_s; q)_k (q; q)_k)]
           * [(-1)^k q^(k(k-1)/2)]^(1+s-r) * z^k,

which terminates when some numerator parameter equals q^(-m) for an
integer m >= 0, converges for every argument when r <= s, converges for
|z| < 1 when r = s+1, and otherwise diverges.

``phi32`` evaluates the balanced 3-phi-2 with argument de/(abc); outside
the unit disk it dispatches automatically to one of the two standard
continuations, trying every assignment of the numerator parameters to
the distinguished slot.  Candidate representations are ranked by an
estimated total error (truncation tail plus accumulated rounding), since
the analytically equivalent rewrites differ enormously in conditioning.
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass

from .errors import (
    DivergentSeries,
    MaxTermsExceeded,
    NoConvergentRepresentation,
    Overflow,
    ZeroDivisor,
)

INFINITY = math.inf

# Numerator parameter p terminates a series iff |p - q^-m| < this times q^-m.
TERMINATION_REL_TOL = 1e-13


def _check_q(q) -> float:
    if isinstance(q, complex):
        raise ValueError("base q must be real; complex bases are rejected")
    q = float(q)
    if not 0.0 < q < 1.0:
        raise ValueError(f"base q must lie strictly inside (0, 1), got {q!r}")
    return q


def _assert_finite(value: complex, context: str) -> complex:
    if not (math.isfinite(value.real) and math.isfinite(value.imag)):
        raise Overflow(f"{context} left the double-precision range")
    return value


@dataclass(frozen=True)
class TruncationPolicy:
    """Stopping control for infinite sums and products."""

    rel_tol: float = 1e-12
    max_terms: int = 5000

    def __post_init__(self):
        if not self.rel_tol > 0:
            raise ValueError("rel_tol must be positive")
        if self.max_terms < 1:
            raise ValueError("max_terms must be at least 1")


DEFAULT_POLICY = TruncationPolicy()


@dataclass(frozen=True)
class SeriesSpec:
    """Full description of an r-phi-s basic hypergeometric series."""

    numerator: tuple
    denominator: tuple
    q: float
    argument: complex

    def __post_init__(self):
        object.__setattr__(self, "numerator", tuple(complex(a) for a in self.numerator))
        object.__setattr__(self, "denominator", tuple(complex(b) for b in self.denominator))
        object.__setattr__(self, "q", _check_q(self.q))
        object.__setattr__(self, "argument", complex(self.argument))

    @property
    def r(self) -> int:
        return len(self.numerator)

    @property
    def s(self) -> int:
        return len(self.denominator)


def qpoch(a, q, n=INFINITY, rel_tol: float = 1e-15) -> complex:
    """(a; q)_n for integer n (of either sign) or n = math.inf.

    The infinite product is truncated once the factor deviation
    |a q^(j-1)| drops below rel_tol*(1-q); a first-order multiplicative
    tail estimate exp(-a q^J / (1-q)) is then applied, so the result is
    accurate well beyond the bare truncation point.
    """
    q = _check_q(q)
    a = complex(a)
    if n == INFINITY:
        product = 1.0 + 0.0j
        factor = a  # a * q^(j-1), starting at j = 1
        threshold = rel_tol * (1.0 - q)
        while abs(factor) >= threshold:
            product *= 1.0 - factor
            factor *= q
        product *= cmath.exp(-factor / (1.0 - q))
        return _assert_finite(product, "infinite q-Pochhammer product")
    n = int(n)
    if n >= 0:
        product = 1.0 + 0.0j
        factor = a
        for _ in range(n):
            product *= 1.0 - factor
            factor *= q
        return _assert_finite(product, "q-Pochhammer product")
    # Negative order: (a; q)_{-m} = 1 / prod_{j=1..m} (1 - a q^(-j)).
    product = 1.0 + 0.0j
    for j in range(1, -n + 1):
        factor = 1.0 - a * q ** (-j)
        if factor == 0:
            raise ZeroDivisor(f"(a; q)_{n} hits the zero factor 1 - a q^-{j}")
        product *= factor
    return _assert_finite(1.0 / product, "negative-order q-Pochhammer")


def qpoch_multi(params, q, n=INFINITY, rel_tol: float = 1e-15) -> complex:
    """Product of (a_k; q)_n over a parameter list (empty list gives 1)."""
    product = 1.0 + 0.0j
    for a in params:
        product *= qpoch(a, q, n, rel_tol)
    return _assert_finite(product, "q-Pochhammer product list")


def termination_order(p, q, max_order: int = 5000):
    """Smallest m >= 0 with p = q^(-m) to relative tolerance, else None.

    The nearest admissible m wins; ties break toward the smaller m.
    """
    p = complex(p)
    if p == 0 or abs(p.imag) > TERMINATION_REL_TOL * abs(p) or p.real <= 0:
        return None
    estimate = -math.log(abs(p)) / math.log(q)
    best = None
    best_err = None
    for m in sorted({math.floor(estimate), math.ceil(estimate)}):
        if m < 0 or m > max_order:
            continue
        target = q ** (-m)
        err = abs(p - target)
        if err < TERMINATION_REL_TOL * target:
            if best is None or err < best_err or (err == best_err and m < best):
                best, best_err = m, err
    return best


def series_termination(spec: SeriesSpec, max_order: int = 5000):
    """Termination index of the series, or None if it does not terminate."""
    orders = [termination_order(p, spec.q, max_order) for p in spec.numerator]
    orders = [m for m in orders if m is not None]
    return min(orders) if orders else None


def _phi_core(spec: SeriesSpec, policy: TruncationPolicy):
    """Sum the series; returns (value, largest absolute term, tail bound).

    The largest term measures cancellation (a sum far below it has lost
    the corresponding digits); the tail bound estimates the truncation
    remainder from the final term and the observed term ratio, so
    callers can rank alternative representations by total error.
    """
    q = spec.q
    z = spec.argument
    extra = 1 + spec.s - spec.r
    stop = series_termination(spec, policy.max_terms)
    if stop is not None:
        for b in spec.denominator:
            m = termination_order(b, q, policy.max_terms)
            if m is not None and m < stop:
                raise ZeroDivisor(
                    "denominator parameter equals q^-%d before the series terminates" % m
                )
    else:
        if spec.r > spec.s + 1:
            raise DivergentSeries(
                "nonterminating series with r > s+1 diverges for every argument"
            )
        if spec.r == spec.s + 1 and abs(z) >= 1.0:
            raise DivergentSeries(
                "argument modulus >= 1 with r = s+1; use a continuation"
            )
    term = 1.0 + 0.0j
    total = term
    largest = 1.0
    weighted = 1.0  # sum of (k+1) |T_k|, driving the rounding estimate
    small_run = 0
    ratio_mag = 0.0
    qk = 1.0  # q^k
    k = 0
    while True:
        if stop is not None and k >= stop:
            break
        num = 1.0 + 0.0j
        for a in spec.numerator:
            num *= 1.0 - a * qk
        den = 1.0 - q * qk  # the (q; q)_k factor advanced to k+1
        for b in spec.denominator:
            den *= 1.0 - b * qk
        if den == 0:
            raise ZeroDivisor("series denominator vanished at term %d" % (k + 1))
        factor = num / den * z
        if extra:
            base = -qk
            if base == 0.0 and extra < 0:
                raise Overflow("q^k underflow with negative exponent weight")
            factor *= base**extra
        term *= factor
        total += term
        largest = max(largest, abs(term))
        weighted += (k + 2.0) * abs(term)
        ratio_mag = abs(factor)
        k += 1
        qk *= q
        if stop is None:
            # geometric tail-aware smallness; three consecutive small
            # terms guard against alternating near-cancellation
            tail_factor = ratio_mag / (1.0 - ratio_mag) if ratio_mag < 0.999 else 1e3
            tail_factor = min(max(tail_factor, 1.0), 1e3)
            if abs(term) * tail_factor < policy.rel_tol * max(
                abs(total), 1e-3 * largest
            ):
                small_run += 1
                if small_run >= 3:
                    break
            else:
                small_run = 0
            if k >= policy.max_terms or (k > 800 and ratio_mag > 0.995):
                raise MaxTermsExceeded(
                    "series did not settle within %d terms" % min(k, policy.max_terms)
                )
        elif k > policy.max_terms:
            raise MaxTermsExceeded("terminating series exceeds the term budget")
    if stop is not None:
        tail = 0.0
    else:
        tail_factor = ratio_mag / (1.0 - ratio_mag) if ratio_mag < 0.999 else 1e3
        tail = abs(term) * min(max(tail_factor, 1.0), 1e3)
    return _assert_finite(total, "series sum"), weighted, tail


def _series_error(value, weighted, tail) -> float:
    """Absolute error estimate of a summed series.

    ``weighted`` is the (k+1)-weighted sum of term magnitudes, modelling
    rounding accumulated along the multiplicative term recursion.
    """
    return tail + 4e-16 * weighted


def phi(spec: SeriesSpec, policy: TruncationPolicy = DEFAULT_POLICY) -> complex:
    """Sum the basic hypergeometric series described by ``spec``.

    Terminating series are summed exactly (m+1 terms); nonterminating
    ones stop once three consecutive terms (weighted by the geometric
    tail estimate) fall below rel_tol times the partial sum.
    """
    return _phi_core(spec, policy)[0]


def _phi(numerator, denominator, q, argument, policy=DEFAULT_POLICY) -> complex:
    return phi(SeriesSpec(tuple(numerator), tuple(denominator), q, argument), policy)


def _balanced_spec(a, b, c, d, e, q) -> SeriesSpec:
    if a * b * c == 0:
        raise ZeroDivisor("balanced series needs nonzero numerator parameters")
    return SeriesSpec((a, b, c), (d, e), q, d * e / (a * b * c))


def phi32(a, b, c, d, e, q, policy: TruncationPolicy = DEFAULT_POLICY) -> complex:
    """The balanced 3-phi-2 with numerator (a, b, c), denominator (d, e)
    and argument de/(abc), continued analytically when that argument
    leaves the unit disk.

    Both standard continuations are tried with every assignment of the
    numerator parameters to the distinguished slot.  Candidates are
    visited by increasing transformed-argument modulus and ranked by
    estimated error; a candidate whose series collapses by cancellation
    is passed over in favor of a better-conditioned one, since the
    candidates agree analytically but not in double precision.
    """
    spec = _balanced_spec(a, b, c, d, e, q)
    w = spec.argument
    if series_termination(spec, policy.max_terms) is not None:
        return phi(spec, policy)

    nums = (complex(a), complex(b), complex(c))
    candidates = []
    if abs(w) < 1.0 - 1e-12:
        candidates.append(("direct", None, None, None, None, w))
    for i, p in enumerate(nums):
        rest = [nums[j] for j in range(3) if j != i]
        if p == 0:
            continue
        for dd, ee in ((complex(d), complex(e)), (complex(e), complex(d))):
            candidates.append(("pivot-up", p, rest, dd, ee, ee / p))
        candidates.append(("pivot-arg", p, rest, complex(d), complex(e), p))
    candidates = [cand for cand in candidates if abs(cand[5]) < 1.0 - 1e-12]
    candidates.sort(key=lambda cand: abs(cand[5]))
    best = None
    last_error = None
    for kind, p, rest, dd, ee, arg in candidates:
        try:
            if kind == "direct":
                series, weighted, tail = _phi_core(spec, policy)
                prefactor = 1.0 + 0.0j
            elif kind == "pivot-up":
                o1, o2 = rest
                prefactor = qpoch_multi([ee / p, dd * ee / (o1 * o2)], q) / qpoch_multi(
                    [ee, w], q
                )
                series, weighted, tail = _phi_core(
                    SeriesSpec(
                        (p, dd / o1, dd / o2), (dd, dd * ee / (o1 * o2)), q, ee / p
                    ),
                    policy,
                )
            else:
                o1, o2 = rest
                de = dd * ee
                prefactor = qpoch_multi([p, de / (o1 * p), de / (o2 * p)], q) / qpoch_multi(
                    [dd, ee, w], q
                )
                series, weighted, tail = _phi_core(
                    SeriesSpec(
                        (dd / p, ee / p, w), (de / (o1 * p), de / (o2 * p)), q, p
                    ),
                    policy,
                )
            value = _assert_finite(prefactor * series, "continued balanced series")
            err = _series_error(series, weighted, tail) / max(abs(series), 1e-300)
            if err <= _TARGET_REL_ERROR:
                return value
            if best is None or err < best[0]:
                best = (err, value)
        except (ZeroDivisor, Overflow, DivergentSeries, MaxTermsExceeded) as exc:
            last_error = exc
    if best is not None:
        return best[1]
    raise NoConvergentRepresentation(
        "no convergent representation of the balanced series at argument "
        f"{w!r}" + (f" (last failure: {last_error})" if last_error else "")
    )


# ---------------------------------------------------------------------------
# Error-aware evaluators for the low-order series the limit families
# are built from.  Each tries the direct sum plus the standard rewrites
# and keeps the representation with the smallest estimated error; the
# rewrites shift a large argument into a large (harmless) denominator
# parameter.
# ---------------------------------------------------------------------------

# accept a representation outright below this relative error estimate
_TARGET_REL_ERROR = 5e-13


def _best_of(candidates):
    """Run candidate thunks returning (value, absolute error estimate);
    return the first that meets the target or the overall best."""
    best = None
    last_error = None
    for thunk in candidates:
        try:
            value, err = thunk()
        except (ZeroDivisor, Overflow, DivergentSeries, MaxTermsExceeded) as exc:
            last_error = exc
            continue
        value = _assert_finite(value, "series evaluation")
        rel = err / max(abs(value), 1e-300)
        if rel <= _TARGET_REL_ERROR:
            return value
        if best is None or rel < best[0]:
            best = (rel, value)
    if best is not None:
        return best[1]
    raise NoConvergentRepresentation(
        "no usable representation found"
        + (f" (last failure: {last_error})" if last_error else "")
    )


def phi01(c, w, q, policy: TruncationPolicy = DEFAULT_POLICY) -> complex:
    """0-phi-1 with denominator c and argument w (entire in w)."""
    value, _, _ = _phi_core(SeriesSpec((), (c,), q, w), policy)
    return value


def phi11(a, c, z, q, policy: TruncationPolicy = DEFAULT_POLICY) -> complex:
    """1-phi-1, evaluated through whichever of the direct sum, the
    argument/denominator swap, or the 0-phi-1 reduction carries the
    smallest error estimate."""
    a, c, z = complex(a), complex(c), complex(z)

    def direct():
        value, weighted, tail = _phi_core(SeriesSpec((a,), (c,), q, z), policy)
        return value, _series_error(value, weighted, tail)

    def swapped():
        # valid for c != 0: moves the argument into the denominator slot
        pref = qpoch(z, q) / qpoch(c, q)
        value, weighted, tail = _phi_core(SeriesSpec((a * z / c,), (z,), q, c), policy)
        return pref * value, _series_error(value, weighted, tail) * abs(pref)

    def via01():
        # c = 0 reduction: (z)_inf * 0phi1(-; z; a z)
        pref = qpoch(z, q)
        value, weighted, tail = _phi_core(SeriesSpec((), (z,), q, a * z), policy)
        return pref * value, _series_error(value, weighted, tail) * abs(pref)

    candidates = [direct]
    if c != 0:
        candidates.append(swapped)
    else:
        candidates.append(via01)
    return _best_of(candidates)


def phi21(a, b, c, z, q, policy: TruncationPolicy = DEFAULT_POLICY) -> complex:
    """2-phi-1 with analytic continuation past |z| = 1.

    Continuation moves one numerator parameter into the argument slot;
    both assignments are candidates and the smallest estimated error
    wins.
    """
    a, b, c, z = complex(a), complex(b), complex(c), complex(z)
    spec = SeriesSpec((a, b), (c,), q, z)

    def direct():
        value, weighted, tail = _phi_core(spec, policy)
        return value, _series_error(value, weighted, tail)

    def pivot(p, other):
        def thunk():
            pref = qpoch_multi([p, other * z], q) / qpoch_multi([c, z], q)
            value, weighted, tail = _phi_core(
                SeriesSpec((c / p, z), (other * z,), q, p), policy
            )
            return pref * value, _series_error(value, weighted, tail) * abs(pref)

        return thunk

    candidates = []
    if series_termination(spec, policy.max_terms) is not None or abs(z) < 1 - 1e-12:
        candidates.append(direct)
    for p, other in ((b, a), (a, b)):
        if p != 0 and abs(p) < 1 - 1e-12:
            candidates.append(pivot(p, other))
    return _best_of(candidates)


def phi22_balanced(a1, a2, b1, b2, w, q, policy: TruncationPolicy = DEFAULT_POLICY) -> complex:
    """2-phi-2 satisfying the balance a1 a2 w = b1 b2.

    Alongside the direct sum (entire in w but prone to cancellation at
    small values), the numerator-pivot rewrite

        [(p, w)_inf / ((b1, b2))_inf] * 2phi1(b1/p, b2/p; w; q, p)

    is tried for each numerator parameter p with |p| < 1.  The rewrite
    agrees with the direct sum on |w| < 1 and both sides are meromorphic
    in w with matching pole structure, so it is a global identity; other
    textbook reductions of this shape fail off their derivation domain
    and are deliberately not used.
    """
    a1, a2, b1, b2, w = (complex(v) for v in (a1, a2, b1, b2, w))
    if abs(a1 * a2 * w - b1 * b2) > 1e-9 * max(abs(b1 * b2), 1e-30):
        raise ValueError("arguments do not satisfy the balance condition")

    def direct():
        value, weighted, tail = _phi_core(SeriesSpec((a1, a2), (b1, b2), q, w), policy)
        return value, _series_error(value, weighted, tail)

    def pivoted(p):
        def thunk():
            pref = qpoch_multi([p, w], q) / qpoch_multi([b1, b2], q)
            value, weighted, tail = _phi_core(
                SeriesSpec((b1 / p, b2 / p), (w,), q, p), policy
            )
            return pref * value, _series_error(value, weighted, tail) * abs(pref)

        return thunk

    candidates = [direct]
    for p in (a1, a2):
        if p != 0 and abs(p) < 1 - 1e-12:
            candidates.append(pivoted(p))
    return _best_of(candidates)


def phi20_terminating(a1, a2, w, q, policy: TruncationPolicy = DEFAULT_POLICY) -> complex:
    """2-phi-0, which only exists as a terminating sum."""
    spec = SeriesSpec((a1, a2), (), q, w)
    if series_termination(spec, policy.max_terms) is None:
        raise DivergentSeries("2-phi-0 diverges unless a parameter is q^-m")
    return phi(spec, policy)


def phi30_terminating(a1, a2, a3, w, q, policy: TruncationPolicy = DEFAULT_POLICY) -> complex:
    """3-phi-0, which only exists as a terminating sum."""
    spec = SeriesSpec((a1, a2, a3), (), q, w)
    if series_termination(spec, policy.max_terms) is None:
        raise DivergentSeries("3-phi-0 diverges unless a parameter is q^-m")
    return phi(spec, policy)


# ---------------------------------------------------------------------------
# Transformation identities.  Each entry evaluates both sides independently;
# the caller asserts closeness.  Samplers draw parameters inside the
# documented convergence domain of both sides.
# ---------------------------------------------------------------------------


def _uniform(rng, lo, hi):
    return lo + (hi - lo) * rng.random()


def _t_cont_a(q, policy, a, b, c, d, e):
    lhs = phi(_balanced_spec(a, b, c, d, e, q), policy)
    rhs = qpoch_multi([e / a, d * e / (b * c)], q) / qpoch_multi(
        [e, d * e / (a * b * c)], q
    ) * _phi((a, d / b, d / c), (d, d * e / (b * c)), q, e / a, policy)
    return lhs, rhs


def _s_cont_a(rng, q):
    while True:
        a, b, c = (_uniform(rng, 1.2, 2.5), _uniform(rng, 0.1, 0.9), _uniform(rng, 0.1, 0.9))
        d, e = _uniform(rng, 0.1, 0.9), _uniform(rng, 0.1, 0.9)
        if abs(d * e / (a * b * c)) < 0.8 and abs(e / a) < 0.8:
            return {"a": a, "b": b, "c": c, "d": d, "e": e}


def _t_cont_b(q, policy, a, b, c, d, e):
    lhs = phi(_balanced_spec(a, b, c, d, e, q), policy)
    de = d * e
    rhs = qpoch_multi([b, de / (a * b), de / (b * c)], q) / qpoch_multi(
        [d, e, de / (a * b * c)], q
    ) * _phi((d / b, e / b, de / (a * b * c)), (de / (a * b), de / (b * c)), q, b, policy)
    return lhs, rhs


def _s_cont_b(rng, q):
    while True:
        a, c = _uniform(rng, 0.3, 1.6), _uniform(rng, 0.3, 1.6)
        b = _uniform(rng, 0.1, 0.85)
        d, e = _uniform(rng, 0.1, 0.9), _uniform(rng, 0.1, 0.9)
        if abs(d * e / (a * b * c)) < 0.8:
            return {"a": a, "b": b, "c": c, "d": d, "e": e}


def _t_heine(q, policy, a, b, c, z):
    lhs = _phi((a, b), (c,), q, z, policy)
    rhs = qpoch_multi([b, a * z], q) / qpoch_multi([c, z], q) * _phi(
        (c / b, z), (a * z,), q, b, policy
    )
    return lhs, rhs


def _s_heine(rng, q):
    return {
        "a": _uniform(rng, 0.1, 0.9),
        "b": _uniform(rng, 0.1, 0.85),
        "c": _uniform(rng, 0.1, 0.9),
        "z": _uniform(rng, 0.05, 0.85),
    }


def _t_p21_p22(q, policy, a, b, c, z):
    lhs = _phi((a, b), (c,), q, z, policy)
    rhs = qpoch(a * z, q) / qpoch(z, q) * _phi(
        (a, c / b), (c, a * z), q, b * z, policy
    )
    return lhs, rhs


def _t_p21_p12(q, policy, a, c, z):
    lhs = qpoch(z, q) / qpoch(a * z, q) * _phi((a, 0.0), (c,), q, z, policy)
    rhs = _phi((a,), (c, a * z), q, c * z, policy)
    return lhs, rhs


def _t_p21_p11(q, policy, a, c, z):
    lhs = qpoch(z, q) / qpoch(a * z, q) * _phi((a, 0.0), (c,), q, z, policy)
    rhs = _phi((z,), (a * z,), q, c, policy) / qpoch(c, q)
    return lhs, rhs


def _s_p21_z(rng, q):
    return {
        "a": _uniform(rng, 0.1, 0.9),
        "c": _uniform(rng, 0.1, 0.9),
        "z": _uniform(rng, 0.05, 0.85),
    }


def _t_p11_swap(q, policy, b, c, z):
    lhs = _phi((c / b,), (c,), q, b * z, policy)
    rhs = qpoch(b * z, q) / qpoch(c, q) * _phi((z,), (b * z,), q, c, policy)
    return lhs, rhs


def _s_p11_swap(rng, q):
    return {
        "b": _uniform(rng, 0.1, 0.9),
        "c": _uniform(rng, 0.1, 0.9),
        "z": _uniform(rng, 0.05, 0.9),
    }


def _t_p11_zero_swap(q, policy, c, z):
    lhs = _phi((0.0,), (c,), q, z, policy)
    rhs = qpoch(z, q) / qpoch(c, q) * _phi((0.0,), (z,), q, c, policy)
    return lhs, rhs


def _t_p01_p11(q, policy, c, z):
    lhs = _phi((), (c,), q, c * z, policy)
    rhs = _phi((z,), (0.0,), q, c, policy) / qpoch(c, q)
    return lhs, rhs


def _s_two_params(rng, q):
    return {"c": _uniform(rng, 0.1, 0.9), "z": _uniform(rng, 0.05, 0.9)}


def _t_qbinomial(q, policy, a, z):
    lhs = _phi((a,), (), q, z, policy)
    rhs = qpoch(a * z, q) / qpoch(z, q)
    return lhs, rhs


def _s_qbinomial(rng, q):
    return {"a": _uniform(rng, 0.1, 0.9), "z": _uniform(rng, 0.05, 0.85)}


TRANSFORMS = {
    "cont-a": (_t_cont_a, _s_cont_a),
    "cont-b": (_t_cont_b, _s_cont_b),
    "heine": (_t_heine, _s_heine),
    "p21-p22": (_t_p21_p22, _s_heine),
    "p21-p12": (_t_p21_p12, _s_p21_z),
    "p21-p11": (_t_p21_p11, _s_p21_z),
    "p11-swap": (_t_p11_swap, _s_p11_swap),
    "p11-zero-swap": (_t_p11_zero_swap, _s_two_params),
    "p01-p11": (_t_p01_p11, _s_two_params),
    "q-binomial": (_t_qbinomial, _s_qbinomial),
}


def transform_ids():
    return tuple(TRANSFORMS)


def transform_check(transform_id: str, q, policy: TruncationPolicy = DEFAULT_POLICY, **params):
    """Evaluate both sides of the named identity; returns (lhs, rhs)."""
    try:
        evaluator, _ = TRANSFORMS[transform_id]
    except KeyError:
        raise KeyError(f"unknown transform id {transform_id!r}") from None
    return evaluator(_check_q(q), policy, **params)


def sample_transform_inputs(transform_id: str, rng, q):
    """Draw one in-domain parameter set for the named identity."""
    _, sampler = TRANSFORMS[transform_id]
    return sampler(rng, _check_q(q))
