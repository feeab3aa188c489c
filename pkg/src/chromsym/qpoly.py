"""Exact arithmetic for polynomials and rational functions in the parameter q.

Coefficients are arbitrary-precision rationals (``fractions.Fraction``, with
integers kept as plain ``int``), so q-factorials and the large alternating
sums arising downstream never lose precision.  ``QPoly`` stores coefficients
in ascending degree order with trailing zeros stripped; ``QRat`` keeps a
canonical form (monic denominator, gcd-reduced), which makes equality a
field-wise comparison.

No floating point is used anywhere.
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache

from .errors import NotDivisible, PoleAtPoint

Scalar = int | Fraction


def _norm_coeff(c: Scalar) -> Scalar:
    """Keep integral values as ``int`` so printing and hashing stay tidy."""
    if isinstance(c, Fraction):
        if c.denominator == 1:
            return c.numerator
        return c
    if isinstance(c, int):
        return c
    raise TypeError(f"coefficient must be int or Fraction, got {type(c).__name__}")


class QPoly:
    """A polynomial in q over the rationals."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: tuple[Scalar, ...] | list[Scalar] = ()):
        cs = [_norm_coeff(c) for c in coeffs]
        while cs and cs[-1] == 0:
            cs.pop()
        object.__setattr__(self, "coeffs", tuple(cs))

    def __setattr__(self, name, value):
        raise AttributeError("QPoly is immutable")

    @classmethod
    def const(cls, c: Scalar) -> "QPoly":
        return cls((c,))

    @property
    def degree(self) -> int:
        """Degree of the polynomial; -1 for the zero polynomial."""
        return len(self.coeffs) - 1

    def is_zero(self) -> bool:
        return not self.coeffs

    def is_one(self) -> bool:
        return self.coeffs == (1,)

    def __bool__(self) -> bool:
        return bool(self.coeffs)

    def __eq__(self, other) -> bool:
        if isinstance(other, QPoly):
            return self.coeffs == other.coeffs
        if isinstance(other, (int, Fraction)):
            return self == QPoly.const(other)
        return NotImplemented

    def __hash__(self) -> int:
        return hash(("QPoly", self.coeffs))

    def __neg__(self) -> "QPoly":
        return QPoly(tuple(-c for c in self.coeffs))

    def __add__(self, other) -> "QPoly":
        other = _as_poly(other)
        if other is None:
            return NotImplemented
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, c in enumerate(b):
            out[i] += c
        return QPoly(out)

    __radd__ = __add__

    def __sub__(self, other) -> "QPoly":
        other = _as_poly(other)
        if other is None:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other) -> "QPoly":
        other = _as_poly(other)
        if other is None:
            return NotImplemented
        return other + (-self)

    def __mul__(self, other) -> "QPoly":
        other = _as_poly(other)
        if other is None:
            return NotImplemented
        a, b = self.coeffs, other.coeffs
        if not a or not b:
            return ZERO
        out = [0] * (len(a) + len(b) - 1)
        for i, ca in enumerate(a):
            if ca == 0:
                continue
            for j, cb in enumerate(b):
                out[i + j] += ca * cb
        return QPoly(out)

    __rmul__ = __mul__

    def __pow__(self, n: int) -> "QPoly":
        if n < 0:
            raise ValueError("negative power of a polynomial")
        result = ONE
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def shifted(self, k: int) -> "QPoly":
        """Multiply by q**k."""
        if self.is_zero():
            return self
        return QPoly((0,) * k + self.coeffs)

    def __divmod__(self, other: "QPoly") -> tuple["QPoly", "QPoly"]:
        if not isinstance(other, QPoly):
            other = _as_poly(other)
        if other.is_zero():
            raise ZeroDivisionError("polynomial division by zero")
        rem = list(self.coeffs)
        db, lead = other.degree, other.coeffs[-1]
        quot = [0] * max(len(rem) - db, 0)
        for i in range(len(rem) - 1, db - 1, -1):
            if rem[i] == 0:
                continue
            factor = _norm_coeff(Fraction(rem[i]) / lead)
            quot[i - db] = factor
            for j, c in enumerate(other.coeffs):
                rem[i - db + j] -= factor * c
        return QPoly(quot), QPoly(rem)

    def __mod__(self, other: "QPoly") -> "QPoly":
        return divmod(self, other)[1]

    def exact_div(self, other: "QPoly") -> "QPoly":
        """Exact quotient; raises :class:`NotDivisible` on a nonzero remainder."""
        q, r = divmod(self, other)
        if not r.is_zero():
            raise NotDivisible(f"{self} is not divisible by {other}")
        return q

    def monic(self) -> "QPoly":
        if self.is_zero():
            return self
        lead = self.coeffs[-1]
        if lead == 1:
            return self
        inv = Fraction(1, 1) / lead
        return QPoly(tuple(_norm_coeff(c * inv) for c in self.coeffs))

    def __call__(self, q0: Scalar) -> Fraction:
        """Evaluate at an exact rational point."""
        acc = Fraction(0)
        for c in reversed(self.coeffs):
            acc = acc * q0 + c
        return acc

    def to_json(self) -> list[str]:
        return [str(c) for c in self.coeffs]

    @classmethod
    def from_json(cls, data: list[str]) -> "QPoly":
        return cls(tuple(Fraction(s) for s in data))

    def __str__(self) -> str:
        if self.is_zero():
            return "0"
        terms = []
        for i, c in enumerate(self.coeffs):
            if c == 0:
                continue
            if i == 0:
                terms.append(str(c))
                continue
            var = "q" if i == 1 else f"q^{i}"
            if c == 1:
                terms.append(var)
            elif c == -1:
                terms.append(f"-{var}")
            elif isinstance(c, Fraction):
                terms.append(f"({c})*{var}")
            else:
                terms.append(f"{c}*{var}")
        out = " + ".join(terms)
        return out.replace("+ -", "- ")

    def __repr__(self) -> str:
        return f"QPoly({self})"


def _as_poly(x) -> QPoly | None:
    if isinstance(x, QPoly):
        return x
    if isinstance(x, (int, Fraction)):
        return QPoly.const(x)
    return None


ZERO = QPoly()
ONE = QPoly((1,))
Q = QPoly((0, 1))


def poly_gcd(a: QPoly, b: QPoly) -> QPoly:
    """Monic gcd by the Euclidean algorithm over the rationals."""
    while not b.is_zero():
        a, b = b, a % b
    return a.monic()


@lru_cache(maxsize=None)
def q_int(k: int) -> QPoly:
    """The q-integer 1 + q + ... + q**(k-1); zero for k = 0."""
    if k < 0:
        raise ValueError("q_int requires k >= 0")
    return QPoly((1,) * k)


@lru_cache(maxsize=None)
def q_fact(k: int) -> QPoly:
    """The q-factorial, the product of q_int(1) ... q_int(k)."""
    if k < 0:
        raise ValueError("q_fact requires k >= 0")
    if k == 0:
        return ONE
    return q_fact(k - 1) * q_int(k)


class QRat:
    """A rational function in q, kept in canonical form.

    The denominator is monic and coprime to the numerator, so two values are
    equal exactly when their stored fields are.
    """

    __slots__ = ("num", "den")

    def __init__(self, num, den=ONE):
        num = _as_poly(num)
        den = _as_poly(den)
        if num is None or den is None:
            raise TypeError("QRat components must be polynomials or scalars")
        if den.is_zero():
            raise ZeroDivisionError("zero denominator")
        if num.is_zero():
            den = ONE
        elif not den.is_one():
            g = poly_gcd(num, den)
            if g.degree > 0:
                num = num.exact_div(g)
                den = den.exact_div(g)
            lead = den.coeffs[-1]
            if lead != 1:
                inv = Fraction(1, 1) / lead
                num = num * inv
                den = den * inv
        object.__setattr__(self, "num", num)
        object.__setattr__(self, "den", den)

    def __setattr__(self, name, value):
        raise AttributeError("QRat is immutable")

    @classmethod
    def const(cls, c: Scalar) -> "QRat":
        return cls(QPoly.const(c))

    def is_zero(self) -> bool:
        return self.num.is_zero()

    def is_polynomial(self) -> bool:
        return self.den.is_one()

    def as_poly(self) -> QPoly:
        """The underlying polynomial; raises :class:`NotDivisible` otherwise."""
        if not self.den.is_one():
            raise NotDivisible(f"{self} is not a polynomial")
        return self.num

    def __bool__(self) -> bool:
        return not self.num.is_zero()

    def __eq__(self, other) -> bool:
        other = _as_rat(other)
        if other is None:
            return NotImplemented
        return self.num == other.num and self.den == other.den

    def __hash__(self) -> int:
        return hash(("QRat", self.num.coeffs, self.den.coeffs))

    def __neg__(self) -> "QRat":
        return QRat(-self.num, self.den)

    def __add__(self, other) -> "QRat":
        other = _as_rat(other)
        if other is None:
            return NotImplemented
        if self.den.is_one() and other.den.is_one():
            return QRat(self.num + other.num)
        return QRat(self.num * other.den + other.num * self.den, self.den * other.den)

    __radd__ = __add__

    def __sub__(self, other) -> "QRat":
        other = _as_rat(other)
        if other is None:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other) -> "QRat":
        other = _as_rat(other)
        if other is None:
            return NotImplemented
        return other + (-self)

    def __mul__(self, other) -> "QRat":
        other = _as_rat(other)
        if other is None:
            return NotImplemented
        if self.den.is_one() and other.den.is_one():
            return QRat(self.num * other.num)
        return QRat(self.num * other.num, self.den * other.den)

    __rmul__ = __mul__

    def invert(self) -> "QRat":
        if self.num.is_zero():
            raise ZeroDivisionError("inverting zero")
        return QRat(self.den, self.num)

    def __truediv__(self, other) -> "QRat":
        other = _as_rat(other)
        if other is None:
            return NotImplemented
        return self * other.invert()

    def __rtruediv__(self, other) -> "QRat":
        other = _as_rat(other)
        if other is None:
            return NotImplemented
        return other * self.invert()

    def __pow__(self, n: int) -> "QRat":
        if n < 0:
            return self.invert() ** (-n)
        return QRat(self.num**n, self.den**n)

    def eval_at(self, q0: Scalar) -> Fraction:
        """Exact value at q = q0; raises :class:`PoleAtPoint` on a pole."""
        d = self.den(q0)
        if d == 0:
            raise PoleAtPoint(f"pole at q = {q0}")
        return Fraction(self.num(q0)) / d

    def to_json(self) -> dict:
        return {"num": self.num.to_json(), "den": self.den.to_json()}

    @classmethod
    def from_json(cls, data: dict) -> "QRat":
        return cls(QPoly.from_json(data["num"]), QPoly.from_json(data["den"]))

    def __str__(self) -> str:
        if self.den.is_one():
            return str(self.num)
        num = str(self.num)
        if "+" in num or "-" in num[1:]:
            num = f"({num})"
        return f"{num}/({self.den})"

    def __repr__(self) -> str:
        return f"QRat({self})"


def _as_rat(x) -> QRat | None:
    if isinstance(x, QRat):
        return x
    p = _as_poly(x)
    if p is not None:
        return QRat(p)
    return None


RAT_ZERO = QRat(ZERO)
RAT_ONE = QRat(ONE)
