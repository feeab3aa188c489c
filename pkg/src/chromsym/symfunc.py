"""Homogeneous symmetric functions of fixed degree over Q(q).

A :class:`SymFun` is a sparse map from partitions of its degree to ``QRat``
coefficients, tagged with a basis ('e', 'h', 'm' or 's').  The elementary
basis is the internal canonical one: products are multiset unions there, and
the Schur and monomial views are derived through Kostka matrices, avoiding
Littlewood-Richardson entirely.  Degree-heterogeneous sums are rejected.
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache

from .errors import DegreeMismatch
from .partitions import Partition, conjugate, kostka, partitions
from .qpoly import QPoly, QRat, RAT_ONE

BASES = ("e", "h", "m", "s")


def _coerce(c) -> QRat:
    if isinstance(c, QRat):
        return c
    if isinstance(c, (QPoly, int, Fraction)):
        return QRat(c)
    raise TypeError(f"cannot use {type(c).__name__} as a coefficient")


class SymFun:
    """A homogeneous symmetric function in basis coordinates."""

    __slots__ = ("degree", "basis", "coeffs")

    def __init__(self, degree: int, basis: str, coeffs=None):
        if basis not in BASES:
            raise ValueError(f"unknown basis {basis!r}")
        clean: dict[Partition, QRat] = {}
        for lam, c in (coeffs or {}).items():
            lam = tuple(lam)
            if sum(lam) != degree:
                raise DegreeMismatch(f"{lam} is not a partition of {degree}")
            c = _coerce(c)
            if not c.is_zero():
                clean[lam] = c
        object.__setattr__(self, "degree", degree)
        object.__setattr__(self, "basis", basis)
        object.__setattr__(self, "coeffs", clean)

    def __setattr__(self, name, value):
        raise AttributeError("SymFun is immutable")

    @classmethod
    def term(cls, basis: str, parts, coeff=1) -> "SymFun":
        lam = tuple(sorted(parts, reverse=True))
        return cls(sum(lam), basis, {lam: coeff})

    @classmethod
    def e_term(cls, parts, coeff=1) -> "SymFun":
        return cls.term("e", parts, coeff)

    @classmethod
    def s_term(cls, parts, coeff=1) -> "SymFun":
        return cls.term("s", parts, coeff)

    @classmethod
    def one(cls) -> "SymFun":
        return cls(0, "e", {(): RAT_ONE})

    @classmethod
    def zero(cls, degree: int, basis: str = "e") -> "SymFun":
        return cls(degree, basis, {})

    def is_zero(self) -> bool:
        return not self.coeffs

    def coeff(self, lam) -> QRat:
        return self.coeffs.get(tuple(lam), QRat(0))

    # --- basis conversions -------------------------------------------------

    def to_e(self) -> "SymFun":
        if self.basis == "e":
            return self
        if self.basis == "h":
            out = SymFun.zero(self.degree)
            for lam, c in self.coeffs.items():
                prod = SymFun.one()
                for part in lam:
                    prod = prod * h_to_e(part)
                out = out + c * prod
            return out
        if self.basis == "s":
            return _apply_matrix(self, _s_to_e_matrix(self.degree), "e")
        return _apply_matrix(self, _m_to_e_matrix(self.degree), "e")

    def to_s(self) -> "SymFun":
        if self.basis == "s":
            return self
        return _apply_matrix(self.to_e(), _e_to_s_matrix(self.degree), "s")

    def to_m(self) -> "SymFun":
        if self.basis == "m":
            return self
        return _apply_matrix(self.to_s(), _s_to_m_matrix(self.degree), "m")

    def in_basis(self, basis: str) -> "SymFun":
        if basis == "e":
            return self.to_e()
        if basis == "s":
            return self.to_s()
        if basis == "m":
            return self.to_m()
        raise ValueError(f"cannot convert into basis {basis!r}")

    # --- ring structure ----------------------------------------------------

    def __add__(self, other: "SymFun") -> "SymFun":
        if not isinstance(other, SymFun):
            return NotImplemented
        if self.degree != other.degree:
            raise DegreeMismatch(f"degree {self.degree} + degree {other.degree}")
        a, b = self, other
        if a.basis != b.basis:
            a, b = a.to_e(), b.to_e()
        out = dict(a.coeffs)
        for lam, c in b.coeffs.items():
            out[lam] = out.get(lam, QRat(0)) + c
        return SymFun(a.degree, a.basis, out)

    def __neg__(self) -> "SymFun":
        return SymFun(self.degree, self.basis, {lam: -c for lam, c in self.coeffs.items()})

    def __sub__(self, other: "SymFun") -> "SymFun":
        return self + (-other)

    def scaled(self, c) -> "SymFun":
        c = _coerce(c)
        return SymFun(self.degree, self.basis, {lam: c * v for lam, v in self.coeffs.items()})

    def __mul__(self, other):
        if isinstance(other, SymFun):
            a, b = self.to_e(), other.to_e()
            out: dict[Partition, QRat] = {}
            for lam, c in a.coeffs.items():
                for mu, d in b.coeffs.items():
                    key = tuple(sorted(lam + mu, reverse=True))
                    prod = c * d
                    out[key] = out.get(key, QRat(0)) + prod
            return SymFun(a.degree + b.degree, "e", out)
        return self.scaled(other)

    def __rmul__(self, other):
        return self.scaled(other)

    def __eq__(self, other) -> bool:
        if not isinstance(other, SymFun):
            return NotImplemented
        if self.degree != other.degree:
            return False
        return self.to_e().coeffs == other.to_e().coeffs

    def __hash__(self):
        raise TypeError("SymFun is unhashable")

    # --- evaluation and predicates ------------------------------------------

    def at_q(self, q0) -> dict[Partition, Fraction]:
        return {lam: c.eval_at(q0) for lam, c in self.coeffs.items()}

    def is_e_positive_at_one(self) -> bool:
        """Every elementary-basis coefficient is nonnegative at q = 1."""
        return all(v >= 0 for v in self.to_e().at_q(1).values())

    # --- serialization -------------------------------------------------------

    def sorted_items(self) -> list[tuple[Partition, QRat]]:
        return sorted(self.coeffs.items(), key=lambda kv: kv[0], reverse=True)

    def to_json(self) -> dict:
        return {
            "degree": self.degree,
            "basis": self.basis,
            "coeffs": [
                {"partition": list(lam), **c.to_json()} for lam, c in self.sorted_items()
            ],
        }

    def __str__(self) -> str:
        if self.is_zero():
            return "0"
        return "; ".join(
            f"{self.basis}[{','.join(map(str, lam))}]: {c}" for lam, c in self.sorted_items()
        )

    def __repr__(self) -> str:
        return f"SymFun({self})"


def _apply_matrix(f: SymFun, matrix, target: str) -> SymFun:
    basis_list, rows = matrix
    vec = [f.coeffs.get(lam, QRat(0)) for lam in basis_list]
    out: dict[Partition, QRat] = {}
    for i, lam in enumerate(basis_list):
        total = QRat(0)
        for j, c in enumerate(vec):
            a = rows[i][j]
            if a and not c.is_zero():
                total = total + c * a
        if not total.is_zero():
            out[lam] = total
    return SymFun(f.degree, target, out)


def _invert(rows: list[list[Fraction]]) -> list[list]:
    n = len(rows)
    aug = [[Fraction(x) for x in row] + [Fraction(int(i == j)) for j in range(n)] for i, row in enumerate(rows)]
    for col in range(n):
        pivot = next(r for r in range(col, n) if aug[r][col] != 0)
        aug[col], aug[pivot] = aug[pivot], aug[col]
        inv = 1 / aug[col][col]
        aug[col] = [x * inv for x in aug[col]]
        for r in range(n):
            if r != col and aug[r][col] != 0:
                factor = aug[r][col]
                aug[r] = [x - factor * y for x, y in zip(aug[r], aug[col])]
    out = []
    for i in range(n):
        out.append([int(x) if x.denominator == 1 else x for x in aug[i][n:]])
    return out


@lru_cache(maxsize=None)
def _e_to_s_matrix(n: int):
    """Row lam, column mu: coefficient K_{lam', mu} of s_lam in e_mu."""
    basis_list = partitions(n)
    rows = [[kostka(conjugate(lam), mu) for mu in basis_list] for lam in basis_list]
    return basis_list, rows


@lru_cache(maxsize=None)
def _s_to_e_matrix(n: int):
    basis_list, rows = _e_to_s_matrix(n)
    return basis_list, _invert(rows)


@lru_cache(maxsize=None)
def _s_to_m_matrix(n: int):
    basis_list = partitions(n)
    rows = [[kostka(mu, lam) for mu in basis_list] for lam in basis_list]
    return basis_list, rows


@lru_cache(maxsize=None)
def _m_to_e_matrix(n: int):
    basis_list = partitions(n)
    _, e2s = _e_to_s_matrix(n)
    _, s2m = _s_to_m_matrix(n)
    size = len(basis_list)
    e2m = [
        [sum(s2m[i][k] * e2s[k][j] for k in range(size)) for j in range(size)]
        for i in range(size)
    ]
    return basis_list, _invert(e2m)


def to_schur(f: SymFun) -> SymFun:
    return f.to_s()


def schur_to_e(f: SymFun) -> SymFun:
    return f.to_e()


def to_monomial(f: SymFun) -> SymFun:
    return f.to_m()


@lru_cache(maxsize=None)
def h_to_e(n: int) -> SymFun:
    """The complete homogeneous h_n expanded in the elementary basis.

    Uses h_n = sum_{i=1}^{n} (-1)^(i-1) e_i h_{n-i} with h_0 = 1.
    """
    if n == 0:
        return SymFun.one()
    out = SymFun.zero(n)
    sign = 1
    for i in range(1, n + 1):
        out = out + sign * (SymFun.e_term((i,)) * h_to_e(n - i))
        sign = -sign
    return out


def omega(f: SymFun) -> SymFun:
    """The classical involution sending h to e (and hence e to h)."""
    f = f.to_e()
    out = SymFun.zero(f.degree)
    for lam, c in f.coeffs.items():
        prod = SymFun.one()
        for part in lam:
            prod = prod * h_to_e(part)
        out = out + c * prod
    return out
