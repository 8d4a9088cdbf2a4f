"""Closed-form query bounds and the integer identities behind them.

All ceiling/floor arithmetic is exact integer arithmetic; the two growth
constants are the only floating-point values, and comparisons against
them are biased by 1e-9 on the caller's side.
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from math import comb

from .errors import InvalidParameter

FLOAT_BIAS = 1e-9


def ceil_div(a: int, b: int) -> int:
    """Exact ceiling of a / b for b > 0."""
    return -((-a) // b)


@lru_cache(maxsize=None)
def _pow(base: int, exp: int) -> int:
    return base**exp


def query_bound(k: int, degree: int, height: int) -> int:
    """Worst-case total queries of the budgeted strategy.

    sum_{i=0}^{ceil(n/k)-1} d**i  +  sum_{j=1}^{k-1} d**ceil((n-j)/k),
    with d = degree, n = height, and the convention 0**0 = 1.
    """
    if k < 1 or degree < 0 or height < 0:
        raise InvalidParameter("need k >= 1, degree >= 0, height >= 0")
    total = 0
    for i in range(ceil_div(height, k)):
        total += _pow(degree, i)
    for j in range(1, k):
        exp = ceil_div(height - j, k)
        total += _pow(degree, exp) if exp >= 0 else 0
    return total


def query_bound_closed(k: int, degree: int, height: int) -> int | None:
    """The simplified closed form, when one applies.

    degree 0 with height 1 gives k; degree 1 gives ceil(n/k) + k - 1;
    1 <= height <= k gives n*d - d + k - n + 1.  Returns None outside
    these cases.
    """
    if k < 1 or degree < 0 or height < 0:
        raise InvalidParameter("need k >= 1, degree >= 0, height >= 0")
    if degree == 0 and height == 1:
        return k
    if degree == 1:
        return ceil_div(height, k) + k - 1
    if 1 <= height <= k:
        return height * degree - degree + k - height + 1
    return None


def chain_capacity(k: int, trials: int) -> int:
    """sum_{i=1}^{k} C(trials, i): longest chain solvable in ``trials``
    queries with at most k positive answers."""
    if k < 1 or trials < 0:
        raise InvalidParameter("need k >= 1 and trials >= 0")
    return sum(comb(trials, i) for i in range(1, k + 1))


def min_trials(k: int, size: int) -> int:
    """Smallest t >= 0 with chain_capacity(k, t) >= size.

    This is the information-theoretic lower bound on total queries for
    any instance with ``size`` nodes.
    """
    if k < 1 or size < 0:
        raise InvalidParameter("need k >= 1 and size >= 0")
    if size == 0:
        return 0
    hi = 1
    while chain_capacity(k, hi) < size:
        hi *= 2
    lo = hi // 2  # capacity(lo) < size <= capacity(hi); capacity is strictly increasing
    while lo + 1 < hi:
        mid = (lo + hi) // 2
        if chain_capacity(k, mid) < size:
            lo = mid
        else:
            hi = mid
    return hi


def _capacity_coefficients(k: int) -> list[Fraction]:
    """Coefficients a_0..a_k of chain_capacity(k, x) as a polynomial in x."""
    total = [Fraction(0)] * (k + 1)
    for i in range(1, k + 1):
        poly = [Fraction(1)]
        for j in range(i):  # multiply by (x - j)
            shifted = [Fraction(0)] + poly
            poly = [shifted[t] - j * (poly[t] if t < len(poly) else 0) for t in range(len(shifted))]
        fact = 1
        for j in range(2, i + 1):
            fact *= j
        for t, c in enumerate(poly):
            total[t] += c / fact
    return total


def growth_lower_const(k: int, degree: int) -> float:
    """Constant m with m * degree**(n/k) below the lower bound on complete
    trees: (degree * u)**(-1/k) where u sums |coefficients| of the
    capacity polynomial."""
    if k < 1 or degree < 1:
        raise InvalidParameter("need k >= 1 and degree >= 1")
    u = sum(abs(c) for c in _capacity_coefficients(k))
    return float(degree * u) ** (-1.0 / k)


def growth_upper_const(k: int, degree: int) -> float:
    """Constant M = k * degree with query_bound <= M * degree**(n/k) for
    degree >= 2."""
    if k < 1 or degree < 1:
        raise InvalidParameter("need k >= 1 and degree >= 1")
    return float(k * degree)


# -- exact ceiling/floor identities, checkable on integer grids ---------


def ceil_floor_complement(m: int, k: int) -> bool:
    """m - ceil((m+1)/k) + 1 == floor((m+1)(k-1)/k)."""
    if m < 1 or k < 1:
        raise InvalidParameter("need m >= 1 and k >= 1")
    return m - ceil_div(m + 1, k) + 1 == ((m + 1) * (k - 1)) // k


def ceil_fraction_remainder(n: int, k: int) -> bool:
    """n - ceil((k-1)n/k) == ceil((n-k+1)/k)."""
    if n < 1 or k < 1:
        raise InvalidParameter("need n >= 1 and k >= 1")
    return n - ceil_div((k - 1) * n, k) == ceil_div(n - k + 1, k)


def nested_ceil_collapse(n: int, k: int, i: int) -> bool:
    """ceil((ceil(n(k-1)/k) - i) / (k-1)) == ceil((n-i)/k)."""
    if n < 1 or k < 2 or not 0 <= i <= k - 2:
        raise InvalidParameter("need n >= 1, k >= 2, 0 <= i <= k-2")
    inner = ceil_div(n * k - n, k)
    return ceil_div(inner - i, k - 1) == ceil_div(n - i, k)


def query_bound_step_inequality(degree: int, n: int, k: int) -> bool:
    """degree**(j-1) + bound(k, degree, j-1) <= bound(k, degree, n) for
    j = ceil((n+1)/k), on the domain n > k >= 2, degree >= 1."""
    if not (n > k >= 2) or degree < 1:
        raise InvalidParameter("need n > k >= 2 and degree >= 1")
    j = ceil_div(n + 1, k)
    lhs = _pow(degree, j - 1) + query_bound(k, degree, j - 1)
    return lhs <= query_bound(k, degree, n)


def bound_report(k: int, degree: int, height: int) -> dict:
    """Bound summary for the maximal instance of the given degree/height.

    The instance size is that of the complete tree (the largest pointed
    poset with these statistics); sandwich_ok records whether the growth
    constants bracket the lower bound and the strategy bound.
    """
    if k < 1 or degree < 1 or height < 0:
        raise InvalidParameter("need k >= 1, degree >= 1, height >= 0")
    size = sum(_pow(degree, t) for t in range(height))
    f_value = query_bound(k, degree, height)
    tau_lower = min_trials(k, size)
    m_const = growth_lower_const(k, degree)
    big_m_const = growth_upper_const(k, degree)
    growth = float(degree) ** (height / k)
    sandwich_ok = (
        m_const * growth - FLOAT_BIAS <= tau_lower <= f_value
        and (degree < 2 or f_value <= big_m_const * growth + FLOAT_BIAS)
    )
    return {
        "k": k,
        "l": degree,
        "n": height,
        "tree_size": size,
        "f_value": f_value,
        "tau_lower": tau_lower,
        "m_const": m_const,
        "M_const": big_m_const,
        "sandwich_ok": sandwich_ok,
    }
