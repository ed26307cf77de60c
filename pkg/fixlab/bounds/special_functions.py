"""
Fixlab - Special functions
The bound functions f, F and phi = f o F, and the vertex threshold N(L, alpha),
evaluated with mpmath at extended precision
"""

import logging
from fractions import Fraction
from numbers import Rational
from typing import Union

import mpmath
from mpmath import mp, mpf

from fixlab.models.errors import DomainError

logger = logging.getLogger(__name__)

WORKING_DPS = 50
BISECTION_STEPS = 240
# relative nudge applied by directed rounding; far above the working precision
ROUNDING_NUDGE = mpf(10) ** -30

Real = Union[int, Fraction, float, mpf]


def to_mpf(value: Real) -> mpf:
    if isinstance(value, Rational):
        return mpf(value.numerator) / mpf(value.denominator)
    return mpf(value)


def round_up(value: mpf) -> mpf:
    return value + abs(value) * ROUNDING_NUDGE


def round_down(value: mpf) -> mpf:
    return value - abs(value) * ROUNDING_NUDGE


def _factorial_index(value: mpf) -> int:
    """k with k! == value for an integral value >= 1, else 0"""
    if value < 1 or value != mpmath.floor(value):
        return 0
    k, fact = 1, mpf(1)
    while fact < value:
        k += 1
        fact *= k
    return k if fact == value else 0


def inverse_gamma(value: Real) -> mpf:
    """
    Inverse of Gamma restricted to [2, inf)
    - bisection on log Gamma, which is increasing there
    - arguments below Gamma(2) = 1 clamp to 2
    """
    with mp.workdps(WORKING_DPS):
        v = to_mpf(value)
        if v <= 1:
            return mpf(2)
        k = _factorial_index(v)
        if k:
            return mpf(k + 1)
        target = mpmath.log(v)
        lo, hi = mpf(2), mpf(4)
        while mpmath.loggamma(hi) < target:
            lo, hi = hi, hi * 2
        for _ in range(BISECTION_STEPS):
            mid = (lo + hi) / 2
            if mpmath.loggamma(mid) < target:
                lo = mid
            else:
                hi = mid
        return (lo + hi) / 2


def f_bound(x: Real) -> mpf:
    """
    1 / Gamma^{-1}(x - 1) on [1, inf)
    - x in [1, 2) clamps the Gamma^{-1} argument to 1, giving 1/2
    - f((n-1)! + 1) == 1/n exactly
    """
    with mp.workdps(WORKING_DPS):
        v = to_mpf(x)
        if v < 1:
            raise DomainError(f"f is defined on [1, inf), got {x}")
        return 1 / inverse_gamma(v - 1)


def _log_g(x: mpf) -> mpf:
    """log of x (2x)^x"""
    return mpmath.log(x) + x * mpmath.log(2 * x)


def g_map(x: Real) -> mpf:
    """x (2x)^x, the increasing bijection of the positive reals inverted by F"""
    with mp.workdps(WORKING_DPS):
        v = to_mpf(x)
        if v <= 0:
            raise DomainError(f"x (2x)^x is taken on positive reals, got {x}")
        return v * (2 * v) ** v


def F_bound(y: Real) -> mpf:
    """Inverse of x (2x)^x, by bisection in log space"""
    with mp.workdps(WORKING_DPS):
        v = to_mpf(y)
        if v <= 0:
            raise DomainError(f"F is defined on positive reals, got {y}")
        target = mpmath.log(v)
        lo, hi = mpf(1), mpf(1)
        while _log_g(lo) > target:
            lo /= 2
        while _log_g(hi) < target:
            hi *= 2
        for _ in range(BISECTION_STEPS):
            mid = (lo + hi) / 2
            if _log_g(mid) < target:
                lo = mid
            else:
                hi = mid
        return (lo + hi) / 2


def phi(y: Real) -> mpf:
    return f_bound(F_bound(y))


def n_threshold(c: int, alpha: Real) -> mpf:
    """
    log10 of N = phi^{-1}(alpha / c^2) = g(Gamma(c^2 / alpha) + 1)
    - for alpha / c^2 > 1/2 the Gamma argument clamps to 2, so N = 32
    """
    if c < 1:
        raise DomainError(f"c must be a positive integer, got {c}")
    a = Fraction(alpha) if not isinstance(alpha, mpf) else alpha
    if not 0 < a <= 1:
        raise DomainError(f"alpha must lie in (0, 1], got {alpha}")
    with mp.workdps(WORKING_DPS):
        inverse_y = to_mpf(c * c) / to_mpf(a)
        if inverse_y < 2:
            inverse_y = mpf(2)
        x = mpmath.exp(mpmath.loggamma(inverse_y)) + 1
        log10_n = mpmath.log10(x) + x * mpmath.log10(2 * x)
    logger.debug(f"log10 N(c={c}, alpha={alpha}) = {mpmath.nstr(log10_n, 12)}")
    return log10_n
