"""Truncated formal power series with exact integer/rational coefficients.

A Series holds coefficients for z^0 .. z^N.  All arithmetic is exact;
multiplication truncates at the smaller of the two orders.  Coefficients
stay plain ints whenever the inputs are integral, and become
fractions.Fraction only where rational factors genuinely appear.
"""

from __future__ import annotations

from fractions import Fraction

from .errors import DomainError

Coeff = "int | Fraction"


class Series:
    __slots__ = ("coeffs",)

    def __init__(self, coeffs):
        self.coeffs = list(coeffs)
        if not self.coeffs:
            raise DomainError("a series needs at least the z^0 coefficient")

    # -- constructors ------------------------------------------------------

    @classmethod
    def zero(cls, order: int) -> "Series":
        return cls([0] * (order + 1))

    @classmethod
    def one(cls, order: int) -> "Series":
        c = [0] * (order + 1)
        c[0] = 1
        return cls(c)

    @classmethod
    def constant(cls, value, order: int) -> "Series":
        c = [0] * (order + 1)
        c[0] = value
        return cls(c)

    @classmethod
    def z(cls, order: int) -> "Series":
        c = [0] * (order + 1)
        if order >= 1:
            c[1] = 1
        return cls(c)

    @classmethod
    def from_coeffs(cls, coeffs, order: int) -> "Series":
        c = list(coeffs)[: order + 1]
        c += [0] * (order + 1 - len(c))
        return cls(c)

    # -- basics ------------------------------------------------------------

    @property
    def order(self) -> int:
        return len(self.coeffs) - 1

    def coeff(self, n: int):
        if n < 0:
            return 0
        if n > self.order:
            raise DomainError(f"coefficient {n} beyond truncation order {self.order}")
        return self.coeffs[n]

    def truncate(self, order: int) -> "Series":
        if order >= self.order:
            return self
        return Series(self.coeffs[: order + 1])

    def __eq__(self, other):
        if not isinstance(other, Series):
            return NotImplemented
        n = min(self.order, other.order)
        return all(self.coeffs[i] == other.coeffs[i] for i in range(n + 1))

    def __repr__(self):
        head = ", ".join(str(c) for c in self.coeffs[:8])
        tail = ", ..." if self.order >= 8 else ""
        return f"Series([{head}{tail}], order={self.order})"

    # -- ring operations ---------------------------------------------------

    def __neg__(self):
        return Series([-c for c in self.coeffs])

    def __add__(self, other):
        if isinstance(other, (int, Fraction)):
            out = list(self.coeffs)
            out[0] += other
            return Series(out)
        n = min(self.order, other.order)
        return Series([self.coeffs[i] + other.coeffs[i] for i in range(n + 1)])

    __radd__ = __add__

    def __sub__(self, other):
        if isinstance(other, (int, Fraction)):
            out = list(self.coeffs)
            out[0] -= other
            return Series(out)
        n = min(self.order, other.order)
        return Series([self.coeffs[i] - other.coeffs[i] for i in range(n + 1)])

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return Series([c * other for c in self.coeffs])
        n = min(self.order, other.order)
        a, b = self.coeffs, other.coeffs
        out = [0] * (n + 1)
        for i in range(min(len(a) - 1, n) + 1):
            ai = a[i]
            if not ai:
                continue
            lim = n - i
            for j in range(min(len(b) - 1, lim) + 1):
                bj = b[j]
                if bj:
                    out[i + j] += ai * bj
        return Series(out)

    __rmul__ = __mul__

    def __pow__(self, e: int):
        if e < 0:
            raise DomainError("negative series powers are not defined")
        result = Series.one(self.order)
        base = self
        while e:
            if e & 1:
                result = result * base
            base = base * base if e > 1 else base
            e >>= 1
        return result

    def reciprocal(self) -> "Series":
        """Multiplicative inverse of a series with nonzero constant term."""
        c0 = self.coeffs[0]
        if c0 == 0:
            raise DomainError("cannot invert a series with zero constant term")
        inv0 = 1 if c0 == 1 else Fraction(1, 1) / c0
        n = self.order
        out = [0] * (n + 1)
        out[0] = inv0
        a = self.coeffs
        for k in range(1, n + 1):
            acc = 0
            for j in range(1, k + 1):
                aj = a[j]
                if aj:
                    acc += aj * out[k - j]
            out[k] = -inv0 * acc
        return Series(out)

    def __truediv__(self, other):
        if isinstance(other, (int, Fraction)):
            return Series([Fraction(c) / other if c else 0 for c in self.coeffs])
        # Exact division: strip the divisor's leading zeros, which must be
        # matched by zeros of the dividend.
        v = 0
        while v <= other.order and other.coeffs[v] == 0:
            v += 1
        if v > other.order:
            raise DomainError("division by the zero series")
        if any(self.coeffs[i] != 0 for i in range(min(v, self.order + 1))):
            raise DomainError("division is not exact (dividend order too low)")
        num = Series(self.coeffs[v:] or [0])
        den = Series(other.coeffs[v:])
        return num * den.reciprocal()

    # -- structural operations ----------------------------------------------

    def shift(self, k: int) -> "Series":
        """Multiply by z**k, keeping the truncation order."""
        if k < 0:
            raise DomainError("negative shifts are not defined")
        n = self.order
        return Series([0] * min(k, n + 1) + self.coeffs[: n + 1 - k])

    def compose_z2(self) -> "Series":
        """Substitute z -> z**2."""
        n = self.order
        out = [0] * (n + 1)
        for i in range(n // 2 + 1):
            out[2 * i] = self.coeffs[i]
        return Series(out)

    def derivative(self) -> "Series":
        """Formal derivative, truncated to the same order."""
        n = self.order
        out = [i * self.coeffs[i] for i in range(1, n + 1)]
        out.append(0)
        return Series(out)

    # -- coefficient handling ------------------------------------------------

    def is_integral(self) -> bool:
        return all(
            isinstance(c, int) or (isinstance(c, Fraction) and c.denominator == 1)
            for c in self.coeffs)

    def to_int_coeffs(self) -> "Series":
        """Assert integrality and normalize all coefficients to int."""
        out = []
        for i, c in enumerate(self.coeffs):
            if isinstance(c, Fraction):
                if c.denominator != 1:
                    raise DomainError(
                        f"non-integer coefficient {c} at z^{i}; "
                        "this indicates an arithmetic bug")
                c = c.numerator
            out.append(c)
        return Series(out)


def dot_coefficient(a: Series, b: Series, n: int):
    """Coefficient of z**n in a*b without forming the full product."""
    if n > min(a.order, b.order):
        raise DomainError(f"coefficient {n} beyond truncation order")
    acc = 0
    ac = a.coeffs
    bc = b.coeffs
    for i in range(n + 1):
        ai = ac[i]
        if ai:
            bj = bc[n - i]
            if bj:
                acc += ai * bj
    return acc
