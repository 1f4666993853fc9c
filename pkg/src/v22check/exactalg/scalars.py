"""Scalar tower: rationals, polynomials and rational functions in u, quadratic extensions."""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

Rat = Fraction


class SpecializationError(ZeroDivisionError):
    """Raised when a denominator vanishes at the chosen value of u."""


class RadicalMismatch(ValueError):
    """Raised when two different square roots meet in one operation."""


def _frac(x) -> Fraction:
    return x if type(x) is Fraction else Fraction(x)


def _fmt_frac(c: Fraction) -> str:
    return str(c.numerator) if c.denominator == 1 else f"{c.numerator}/{c.denominator}"


def rational_sqrt(c: Fraction):
    """Exact square root of a nonnegative rational, or None."""
    c = _frac(c)
    if c < 0:
        return None
    n, d = c.numerator, c.denominator
    rn, rd = math.isqrt(n), math.isqrt(d)
    if rn * rn == n and rd * rd == d:
        return Fraction(rn, rd)
    return None


class UPoly:
    """Dense univariate polynomial in u with rational coefficients (low degree first)."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs=()):
        c = [_frac(x) for x in coeffs]
        while c and c[-1] == 0:
            c.pop()
        self.coeffs = tuple(c)

    @classmethod
    def _raw(cls, coeffs):
        obj = object.__new__(cls)
        c = list(coeffs)
        while c and c[-1] == 0:
            c.pop()
        obj.coeffs = tuple(c)
        return obj

    @classmethod
    def u(cls) -> "UPoly":
        return cls._raw((Fraction(0), Fraction(1)))

    @classmethod
    def const(cls, c) -> "UPoly":
        return cls._raw((_frac(c),))

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    def lc(self) -> Fraction:
        return self.coeffs[-1] if self.coeffs else Fraction(0)

    def __bool__(self):
        return bool(self.coeffs)

    def is_constant(self) -> bool:
        return len(self.coeffs) <= 1

    def constant_value(self) -> Fraction:
        return self.coeffs[0] if self.coeffs else Fraction(0)

    def is_one(self) -> bool:
        return len(self.coeffs) == 1 and self.coeffs[0] == 1

    def _coerce(self, other):
        if isinstance(other, UPoly):
            return other
        if isinstance(other, (int, Fraction)):
            return UPoly.const(other)
        return None

    def __add__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        a, b = self.coeffs, o.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, c in enumerate(b):
            out[i] += c
        return UPoly._raw(out)

    __radd__ = __add__

    def __neg__(self):
        return UPoly._raw([-c for c in self.coeffs])

    def __sub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self + (-o)

    def __rsub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o + (-self)

    def __mul__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        a, b = self.coeffs, o.coeffs
        if not a or not b:
            return UPoly._raw(())
        out = [Fraction(0)] * (len(a) + len(b) - 1)
        for i, x in enumerate(a):
            if x:
                for j, y in enumerate(b):
                    out[i + j] += x * y
        return UPoly._raw(out)

    __rmul__ = __mul__

    def __pow__(self, n: int):
        if n < 0:
            raise ValueError("negative power of a polynomial")
        result, base = UPoly.const(1), self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def __eq__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self.coeffs == o.coeffs

    def __hash__(self):
        if len(self.coeffs) <= 1:
            return hash(self.constant_value())
        return hash(("UPoly", self.coeffs))

    def divmod(self, other: "UPoly"):
        if not other:
            raise ZeroDivisionError("polynomial division by zero")
        rem = list(self.coeffs)
        dq = other.degree
        lc = other.lc()
        if len(rem) - 1 < dq:
            return UPoly._raw(()), self
        quot = [Fraction(0)] * (len(rem) - dq)
        oc = other.coeffs
        for k in range(len(rem) - 1 - dq, -1, -1):
            c = rem[k + dq] / lc
            quot[k] = c
            if c:
                for j, y in enumerate(oc):
                    rem[k + j] -= c * y
        return UPoly._raw(quot), UPoly._raw(rem[:dq])

    def __floordiv__(self, other):
        return self.divmod(other)[0]

    def __mod__(self, other):
        return self.divmod(other)[1]

    def monic(self) -> "UPoly":
        if not self.coeffs:
            return self
        lc = self.lc()
        if lc == 1:
            return self
        return UPoly._raw([c / lc for c in self.coeffs])

    @staticmethod
    def gcd(a: "UPoly", b: "UPoly") -> "UPoly":
        while b:
            a, b = b, a % b
        return a.monic()

    def derivative(self) -> "UPoly":
        return UPoly._raw([i * c for i, c in enumerate(self.coeffs)][1:])

    def __call__(self, x):
        return self.evaluate(x)

    def evaluate(self, x):
        """Horner evaluation at any ring element x."""
        acc = Fraction(0)
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def sqrt(self):
        """Exact square root up to nothing (returns None if not a square)."""
        if not self.coeffs:
            return self
        if self.degree % 2:
            return None
        lead = rational_sqrt(self.lc())
        if lead is None:
            return None
        n = self.degree // 2
        # coefficients of the root, highest first
        root = [Fraction(0)] * (n + 1)
        root[n] = lead
        for k in range(n - 1, -1, -1):
            # coefficient of u^(n+k) in root^2 fixes root[k]
            target = self.coeffs[n + k]
            s = sum(root[i] * root[n + k - i] for i in range(k + 1, n + 1) if 0 <= n + k - i <= n)
            root[k] = (target - s) / (2 * lead)
        r = UPoly._raw(root)
        return r if r * r == self else None

    def __str__(self):
        if not self.coeffs:
            return "0"
        parts = []
        for i in range(len(self.coeffs) - 1, -1, -1):
            c = self.coeffs[i]
            if not c:
                continue
            mono = "" if i == 0 else ("u" if i == 1 else f"u^{i}")
            mag = abs(c)
            if mono:
                body = mono if mag == 1 else f"{_fmt_frac(mag)}*{mono}"
            else:
                body = _fmt_frac(mag)
            if not parts:
                parts.append(("-" if c < 0 else "") + body)
            else:
                parts.append((" - " if c < 0 else " + ") + body)
        return "".join(parts)

    def __repr__(self):
        return f"UPoly({self})"


_ONE = UPoly.const(1)


class RatFunc:
    """Element of Q(u): num/den with den monic and gcd(num, den) = 1."""

    __slots__ = ("num", "den")

    def __init__(self, num, den=None, _reduced=False):
        if not isinstance(num, UPoly):
            num = UPoly.const(num)
        if den is None:
            den = _ONE
        elif not isinstance(den, UPoly):
            den = UPoly.const(den)
        if not den:
            raise ZeroDivisionError("rational function with zero denominator")
        if not _reduced:
            if not num:
                den = _ONE
            elif not den.is_one():
                if den.degree > 0:
                    g = UPoly.gcd(num, den)
                    if not g.is_one():
                        num = num // g
                        den = den // g
                lc = den.lc()
                if lc != 1:
                    num = UPoly._raw([c / lc for c in num.coeffs])
                    den = UPoly._raw([c / lc for c in den.coeffs])
        self.num = num
        self.den = den

    @classmethod
    def u(cls) -> "RatFunc":
        return cls(UPoly.u(), _ONE, _reduced=True)

    def __bool__(self):
        return bool(self.num)

    def is_constant(self) -> bool:
        return self.den.is_one() and self.num.is_constant()

    def constant_value(self) -> Fraction:
        if not self.is_constant():
            raise ValueError("not a constant")
        return self.num.constant_value()

    def is_polynomial(self) -> bool:
        return self.den.is_one()

    @staticmethod
    def _coerce(other):
        if isinstance(other, RatFunc):
            return other
        if isinstance(other, (int, Fraction)):
            return RatFunc(UPoly.const(other), _ONE, _reduced=True)
        if isinstance(other, UPoly):
            return RatFunc(other, _ONE, _reduced=True)
        return None

    def __add__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        if self.den.is_one() and o.den.is_one():
            return RatFunc(self.num + o.num, _ONE, _reduced=True)
        if self.den == o.den:
            return RatFunc(self.num + o.num, self.den)
        return RatFunc(self.num * o.den + o.num * self.den, self.den * o.den)

    __radd__ = __add__

    def __neg__(self):
        return RatFunc(-self.num, self.den, _reduced=True)

    def __sub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self + (-o)

    def __rsub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o + (-self)

    def __mul__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        if self.den.is_one() and o.den.is_one():
            return RatFunc(self.num * o.num, _ONE, _reduced=True)
        return RatFunc(self.num * o.num, self.den * o.den)

    __rmul__ = __mul__

    def inverse(self) -> "RatFunc":
        if not self.num:
            raise ZeroDivisionError("inverse of zero in Q(u)")
        return RatFunc(self.den, self.num)

    def __truediv__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self * o.inverse()

    def __rtruediv__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o * self.inverse()

    def __pow__(self, n: int):
        if n < 0:
            return self.inverse() ** (-n)
        return RatFunc(self.num ** n, self.den ** n, _reduced=True)

    def __eq__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self.num == o.num and self.den == o.den

    def __hash__(self):
        if self.den.is_one():
            return hash(self.num)
        return hash(("RatFunc", self.num.coeffs, self.den.coeffs))

    def evaluate(self, value):
        d = self.den.evaluate(value)
        if not d:
            raise SpecializationError(f"denominator {self.den} vanishes at u = {value}")
        n = self.num.evaluate(value)
        return n / d

    def sqrt(self):
        """Square root inside Q(u), or None."""
        if not self.num:
            return self
        c = self.num.lc()
        r = rational_sqrt(c)
        if r is None:
            return None
        n = self.num.monic().sqrt()
        d = self.den.sqrt()
        if n is None or d is None:
            return None
        return RatFunc(n * r, d, _reduced=True)

    def __str__(self):
        if self.den.is_one():
            return str(self.num)
        return f"({self.num})/({self.den})"

    def __repr__(self):
        return f"RatFunc({self})"


def is_square(c) -> bool:
    c = normalize(c)
    if isinstance(c, Fraction):
        return rational_sqrt(c) is not None
    if isinstance(c, RatFunc):
        return c.sqrt() is not None
    return False


def scalar_sqrt(c):
    c = normalize(c)
    if isinstance(c, Fraction):
        return rational_sqrt(c)
    if isinstance(c, RatFunc):
        r = c.sqrt()
        return None if r is None else normalize(r)
    return None


@dataclass(frozen=True)
class Radical:
    """A named formal square root of a non-square element of Q(u)."""

    name: str
    radicand: object

    def __post_init__(self):
        d = normalize(self.radicand)
        object.__setattr__(self, "radicand", d)
        if not d:
            raise ValueError("radicand must be nonzero")
        if is_square(d):
            raise ValueError(f"radicand {d} of {self.name} is already a square")

    def __str__(self):
        return self.name


class QuadExt:
    """p + q*sqrt(d) over Q(u), with sqrt(d) given by a Radical."""

    __slots__ = ("a", "b", "rad")

    def __init__(self, a, b, rad: Radical):
        self.a = normalize(a)
        self.b = normalize(b)
        self.rad = rad

    @classmethod
    def root(cls, rad: Radical) -> "QuadExt":
        return cls(Fraction(0), Fraction(1), rad)

    def __bool__(self):
        return bool(self.a) or bool(self.b)

    def _coerce(self, other):
        if isinstance(other, QuadExt):
            if other.rad != self.rad:
                raise RadicalMismatch(f"cannot combine sqrt {self.rad.name} with {other.rad.name}")
            return other
        if isinstance(other, (int, Fraction, RatFunc)):
            return QuadExt(other, Fraction(0), self.rad)
        return None

    def __add__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return QuadExt(self.a + o.a, self.b + o.b, self.rad)

    __radd__ = __add__

    def __neg__(self):
        return QuadExt(-self.a, -self.b, self.rad)

    def __sub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return QuadExt(self.a - o.a, self.b - o.b, self.rad)

    def __rsub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return QuadExt(o.a - self.a, o.b - self.b, self.rad)

    def __mul__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        d = self.rad.radicand
        return QuadExt(self.a * o.a + self.b * o.b * d, self.a * o.b + self.b * o.a, self.rad)

    __rmul__ = __mul__

    def conj(self) -> "QuadExt":
        return QuadExt(self.a, -self.b, self.rad)

    def norm(self):
        return normalize(self.a * self.a - self.b * self.b * self.rad.radicand)

    def inverse(self) -> "QuadExt":
        n = self.norm()
        if not n:
            raise ZeroDivisionError("inverse of zero in quadratic extension")
        return QuadExt(self.a / n, -self.b / n, self.rad)

    def __truediv__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self * o.inverse()

    def __rtruediv__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o * self.inverse()

    def __pow__(self, n: int):
        if n < 0:
            return self.inverse() ** (-n)
        result, base = QuadExt(Fraction(1), Fraction(0), self.rad), self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def __eq__(self, other):
        if isinstance(other, QuadExt):
            if other.rad != self.rad:
                return not self.b and not other.b and self.a == other.a
            return self.a == other.a and self.b == other.b
        if isinstance(other, (int, Fraction, RatFunc)):
            return not self.b and self.a == other
        return NotImplemented

    def __hash__(self):
        if not self.b:
            return hash(self.a)
        return hash(("QuadExt", self.a, self.b, self.rad))

    def __str__(self):
        if not self.b:
            return str(self.a)
        bs = "" if self.b == 1 else ("-" if self.b == -1 else f"({self.b})*")
        if not self.a:
            return f"{bs}{self.rad.name}"
        return f"({self.a}) + ({self.b})*{self.rad.name}"

    def __repr__(self):
        return f"QuadExt({self})"


def normalize(c):
    """Demote a scalar to the smallest type holding it."""
    t = type(c)
    if t is Fraction:
        return c
    if t is int or t is bool:
        return Fraction(c)
    if t is RatFunc:
        if c.den.is_one() and len(c.num.coeffs) <= 1:
            return c.num.constant_value()
        return c
    if t is QuadExt:
        if not c.b:
            return normalize(c.a)
        return c
    if t is UPoly:
        return normalize(RatFunc(c))
    raise TypeError(f"unsupported scalar {c!r}")


def is_scalar(c) -> bool:
    return isinstance(c, (int, Fraction, RatFunc, QuadExt, UPoly))


def scalar_str(c) -> str:
    c = normalize(c)
    if isinstance(c, Fraction):
        return _fmt_frac(c)
    return str(c)


def specialize(c, value, root_sign: int = 1):
    """Substitute u = value (a rational or a QuadExt) into a scalar.

    Radicals whose radicand becomes a rational square are replaced by the root
    with the requested sign.
    """
    c = normalize(c)
    if isinstance(c, Fraction):
        return c
    if isinstance(c, RatFunc):
        return normalize(c.evaluate(value))
    if isinstance(c, QuadExt):
        a = specialize(c.a, value)
        b = specialize(c.b, value)
        d = specialize(c.rad.radicand, value)
        if not d:
            return a
        r = scalar_sqrt(d)
        if r is not None:
            return normalize(a + root_sign * r * b)
        if isinstance(d, QuadExt):
            raise RadicalMismatch("radicand specializes outside the base field")
        return normalize(QuadExt(a, b, Radical(c.rad.name, d)))
    raise TypeError(f"unsupported scalar {c!r}")


U = RatFunc.u()
