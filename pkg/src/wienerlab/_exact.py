"""Exact comparisons involving square roots of rationals."""

from fractions import Fraction
from math import isqrt


def _frac(x):
    return x if isinstance(x, Fraction) else Fraction(x)


def floor_sqrt(q):
    """Largest integer m with m*m <= q, for rational q >= 0."""
    q = _frac(q)
    if q < 0:
        raise ValueError("negative radicand")
    m = isqrt(q.numerator // q.denominator)
    while (m + 1) * (m + 1) <= q:
        m += 1
    return m


def ceil_sqrt(q):
    """Smallest integer m with m*m >= q, for rational q >= 0."""
    m = floor_sqrt(q)
    return m if m * m == q else m + 1


def sign_minus_sqrt(q, r):
    """Sign of ``q - sqrt(r)`` with q rational and r >= 0."""
    q, r = _frac(q), _frac(r)
    if q < 0:
        return -1
    s = q * q - r
    return (s > 0) - (s < 0)


def sign_sqrt_diff(a, b, c):
    """Sign of ``sqrt(a) - sqrt(b) - c`` for rationals a, b >= 0."""
    a, b, c = _frac(a), _frac(b), _frac(c)
    if c < 0:
        return -sign_sqrt_diff(b, a, -c)
    # sqrt(a) vs sqrt(b) + c, both sides nonnegative
    lhs = a - b - c * c
    if lhs < 0:
        return -1
    s = lhs * lhs - 4 * c * c * b
    return (s > 0) - (s < 0)


class SqrtBound:
    """The real number ``sqrt(radicand) + offset`` with rational parts.

    Comparisons against rationals and other ``SqrtBound`` values are exact;
    ``float()`` is for display.
    """

    __slots__ = ("radicand", "offset")

    def __init__(self, radicand, offset=0):
        self.radicand = _frac(radicand)
        self.offset = _frac(offset)
        if self.radicand < 0:
            raise ValueError("negative radicand")

    def __float__(self):
        return float(self.radicand) ** 0.5 + float(self.offset)

    def __repr__(self):
        return f"SqrtBound(sqrt({self.radicand}) + {self.offset})"

    def _cmp(self, other):
        if isinstance(other, SqrtBound):
            return sign_sqrt_diff(self.radicand, other.radicand,
                                  other.offset - self.offset)
        # sqrt(r) + o - q = -(q - o - sqrt(r))
        return -sign_minus_sqrt(_frac(other) - self.offset, self.radicand)

    def __lt__(self, other):
        return self._cmp(other) < 0

    def __le__(self, other):
        return self._cmp(other) <= 0

    def __gt__(self, other):
        return self._cmp(other) > 0

    def __ge__(self, other):
        return self._cmp(other) >= 0

    def __eq__(self, other):
        if not isinstance(other, (SqrtBound, int, Fraction)):
            return NotImplemented
        return self._cmp(other) == 0

    def __hash__(self):
        return hash((self.radicand, self.offset))

    def ceil(self):
        """Smallest integer m with m >= self."""
        m = floor_sqrt(self.radicand) + (self.offset.numerator // self.offset.denominator) - 1
        while not m >= self:
            m += 1
        while m - 1 >= self:
            m -= 1
        return m

    def floor(self):
        """Largest integer m with m <= self."""
        m = self.ceil()
        return m if m == self else m - 1
