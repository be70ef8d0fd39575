"""Shared independent oracles for the test suite.

The brute-force evaluators below recompute every Pochhammer product
from scratch per term (no recursion shared with the library), so they
are genuinely independent implementations of the defining sums.
"""

import pytest


def brute_qpoch(a, q, n):
    if n < 0:
        prod = 1.0 + 0.0j
        for j in range(1, -n + 1):
            prod *= 1 - a * q**-j
        return 1 / prod
    prod = 1.0 + 0.0j
    for j in range(n):
        prod *= 1 - a * q**j
    return prod


def brute_qpoch_inf(a, q, floor=1e-19):
    prod = 1.0 + 0.0j
    factor = complex(a)
    while abs(factor) > floor:
        prod *= 1 - factor
        factor *= q
    return prod


def brute_phi(numerator, denominator, q, z, kmax=400):
    """Term-by-term sum of the defining series with per-term products."""
    extra = 1 + len(denominator) - len(numerator)
    total = 0.0 + 0.0j
    for k in range(kmax):
        term = 1.0 + 0.0j
        for a in numerator:
            term *= brute_qpoch(a, q, k)
        for b in denominator:
            term /= brute_qpoch(b, q, k)
        term /= brute_qpoch(q, q, k)
        term *= ((-1) ** k * q ** (k * (k - 1) // 2)) ** extra * z**k
        total += term
        if k > 10 and abs(term) < 1e-25 * max(abs(total), 1e-30):
            break
    return total


@pytest.fixture
def oracles():
    return brute_qpoch, brute_qpoch_inf, brute_phi
