"""Exact Gaussian-rational arithmetic (pairs of unbounded-integer fractions).

Coefficient field for the symbolic map algebra: values a + b*i with a, b
rational.  Arithmetic is exact; nothing here touches floating point except
the explicit conversion helpers.
"""

from __future__ import annotations

from fractions import Fraction


class GQ:
    """A Gaussian rational re + im*i with exact Fraction parts."""

    __slots__ = ("re", "im")

    def __init__(self, re=0, im=0):
        self.re = re if isinstance(re, Fraction) else Fraction(re)
        self.im = im if isinstance(im, Fraction) else Fraction(im)

    # -- constructors -------------------------------------------------

    @classmethod
    def from_parts(cls, re_num, re_den, im_num=0, im_den=1):
        return cls(Fraction(re_num, re_den), Fraction(im_num, im_den))

    @classmethod
    def coerce(cls, value) -> "GQ":
        if isinstance(value, GQ):
            return value
        if isinstance(value, complex):
            return cls(Fraction(value.real), Fraction(value.imag))
        return cls(Fraction(value))

    # -- predicates ----------------------------------------------------

    def is_zero(self) -> bool:
        return not self.re and not self.im

    def is_one(self) -> bool:
        return self.re == 1 and not self.im

    def is_rational(self) -> bool:
        return not self.im

    # -- arithmetic ----------------------------------------------------

    def __add__(self, other):
        other = GQ.coerce(other)
        return GQ(self.re + other.re, self.im + other.im)

    __radd__ = __add__

    def __neg__(self):
        return GQ(-self.re, -self.im)

    def __sub__(self, other):
        other = GQ.coerce(other)
        return GQ(self.re - other.re, self.im - other.im)

    def __rsub__(self, other):
        return GQ.coerce(other) - self

    def __mul__(self, other):
        other = GQ.coerce(other)
        return GQ(self.re * other.re - self.im * other.im,
                  self.re * other.im + self.im * other.re)

    __rmul__ = __mul__

    def conjugate(self):
        return GQ(self.re, -self.im)

    def norm2(self) -> Fraction:
        """|.|^2 as an exact rational."""
        return self.re * self.re + self.im * self.im

    def __truediv__(self, other):
        other = GQ.coerce(other)
        n2 = other.norm2()
        if not n2:
            raise ZeroDivisionError("division by zero Gaussian rational")
        num = self * other.conjugate()
        return GQ(num.re / n2, num.im / n2)

    def __rtruediv__(self, other):
        return GQ.coerce(other) / self

    def __pow__(self, k: int):
        if k < 0:
            return GQ(1) / self ** (-k)
        out = GQ(1)
        base = self
        while k:
            if k & 1:
                out = out * base
            base = base * base
            k >>= 1
        return out

    # -- comparison / hashing -------------------------------------------

    def __eq__(self, other):
        try:
            other = GQ.coerce(other)
        except (TypeError, ValueError):
            return NotImplemented
        return self.re == other.re and self.im == other.im

    def __hash__(self):
        return hash((self.re, self.im))

    # -- conversion ------------------------------------------------------

    def to_complex(self) -> complex:
        return complex(self.re) + 1j * complex(self.im)

    def __repr__(self):
        if not self.im:
            return f"GQ({self.re})"
        return f"GQ({self.re}, {self.im})"

    def __str__(self):
        if not self.im:
            return str(self.re)
        if not self.re:
            return f"{self.im}i"
        sign = "+" if self.im > 0 else "-"
        return f"({self.re}{sign}{abs(self.im)}i)"


GQ_ZERO = GQ(0)
GQ_ONE = GQ(1)
