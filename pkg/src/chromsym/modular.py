"""Modular triples, the restricted law, and reduction to path certificates.

A function f on Hessenberg functions satisfies the restricted modular law if
(1+q) f(m') = q f(m) + f(m'') over every type-I triple and every type-II
triple with index i != 1.  Any such f is determined by its values on
disjoint unions of paths; :func:`reduce_to_paths` makes that effective by
emitting a certificate mapping path decompositions to Q(q) coefficients.

Certificate keys are the component sizes in vertex order (first component
first, the rest in their original order).  They are deliberately not sorted:
the component containing vertex 1 is distinguished, and the three functions
of interest take different values on reorderings, e.g. already on the
two-component unions of a single edge and an isolated vertex.
"""

from __future__ import annotations

from functools import lru_cache
from typing import Callable

from .errors import DegreeMismatch, NotFlat, NotNonFlat, SizeLimitExceeded
from .hessenberg import (
    Flat,
    Hess,
    NonFlat,
    UnionOfPaths,
    classify,
    enumerate_hess,
    union_of_paths,
)
from .qpoly import Q, QRat, q_int
from .symfunc import SymFun

Certificate = dict[tuple[int, ...], QRat]
Triple = tuple[Hess, Hess, Hess, int]

DEFAULT_BOUND = 8

_ONE_PLUS_Q = q_int(2)


def is_type1(m: Hess, mp: Hess, mpp: Hess, i: int) -> bool:
    """Type-I predicate at index i (1-based, i in [n-1])."""
    n = len(m)
    if not (len(mp) == len(mpp) == n and 1 <= i <= n - 1):
        return False
    if any(m[t] != mp[t] or mp[t] != mpp[t] for t in range(n) if t != i - 1):
        return False
    v = mp[i - 1]
    if not (m[i - 1] + 1 == v == mpp[i - 1] - 1):
        return False
    left = mp[i - 2] if i >= 2 else 0
    if not (left < v < mp[i]):
        return False
    if v + 1 > n or mp[v - 1] != mp[v]:
        return False
    return all(_valid(x) for x in (m, mp, mpp))


def is_type2(m: Hess, mp: Hess, mpp: Hess, i: int, restricted: bool = False) -> bool:
    """Type-II predicate at index i; the restricted variant excludes i = 1."""
    n = len(m)
    if not (len(mp) == len(mpp) == n and 1 <= i <= n - 1):
        return False
    if restricted and i == 1:
        return False
    if any(
        m[t] != mp[t] or mp[t] != mpp[t]
        for t in range(n)
        if t not in (i - 1, i)
    ):
        return False
    if mp[i - 1] + 1 != mp[i]:
        return False
    if not (m[i - 1] == mp[i - 1] == mpp[i - 1] - 1):
        return False
    if not (m[i] + 1 == mp[i] == mpp[i]):
        return False
    if i in mp:
        return False
    return all(_valid(x) for x in (m, mp, mpp))


def _valid(m: Hess) -> bool:
    n = len(m)
    return all(i <= v <= n for i, v in enumerate(m, start=1)) and all(
        m[t] <= m[t + 1] for t in range(n - 1)
    )


def enumerate_triples(n: int, kind: str) -> tuple[Triple, ...]:
    """All triples of a kind ('I', 'II', or 'IIr') within length n."""
    out = []
    for mp in enumerate_hess(n):
        for i in range(1, n):
            if kind == "I":
                m = mp[: i - 1] + (mp[i - 1] - 1,) + mp[i:]
                mpp = mp[: i - 1] + (mp[i - 1] + 1,) + mp[i:]
                if mp[i - 1] + 1 <= n and is_type1(m, mp, mpp, i):
                    out.append((m, mp, mpp, i))
            else:
                restricted = kind == "IIr"
                m = mp[:i] + (mp[i] - 1,) + mp[i + 1 :]
                mpp = mp[: i - 1] + (mp[i - 1] + 1,) + mp[i:]
                if is_type2(m, mp, mpp, i, restricted):
                    out.append((m, mp, mpp, i))
    return tuple(out)


def split_flat(m: Hess) -> tuple[Hess, Hess]:
    """Lower m at beta by 2 and by 1; (m0, m1, m) is a type-I triple."""
    shape = classify(m)
    if not isinstance(shape, Flat):
        raise NotFlat(f"{m} is not flat")
    b = shape.beta
    m0 = m[: b - 1] + (m[b - 1] - 2,) + m[b:]
    m1 = m[: b - 1] + (m[b - 1] - 1,) + m[b:]
    assert is_type1(m0, m1, m, b), f"flat split broke the type-I predicate at {m}"
    return m0, m1


def split_nonflat(m: Hess) -> tuple[Hess, Hess, Hess]:
    """The three companions (m0, m0_1, m_1) of a non-flat function.

    Internally raises m at alpha to form m2; (m0, m, m2) is a restricted
    type-II triple and (m0_1, m_1, m2) a type-I triple, giving
    (1+q) f(m) = (1+q) f(m_1) + q f(m0) - q f(m0_1).
    """
    shape = classify(m)
    if not isinstance(shape, NonFlat):
        raise NotNonFlat(f"{m} is not non-flat")
    a, b = shape.alpha, shape.beta
    m0 = m[:a] + (m[a] - 1,) + m[a + 1 :]
    m2 = m[: a - 1] + (m[a - 1] + 1,) + m[a:]
    m0_1 = m2[: b - 1] + (m2[b - 1] - 2,) + m2[b:]
    m_1 = m2[: b - 1] + (m2[b - 1] - 1,) + m2[b:]
    assert is_type2(m0, m, m2, a, restricted=True), f"non-flat split broke type II at {m}"
    assert is_type1(m0_1, m_1, m2, b), f"non-flat split broke type I at {m}"
    return m0, m0_1, m_1


def _merge(target: Certificate, source: Certificate, factor: QRat) -> None:
    for key, coeff in source.items():
        value = target.get(key, QRat(0)) + factor * coeff
        if value.is_zero():
            target.pop(key, None)
        else:
            target[key] = value


@lru_cache(maxsize=None)
def reduce_to_paths(m: Hess, bound: int = DEFAULT_BOUND) -> Certificate:
    """Certificate expressing f(m) through values on unions of paths.

    Sound for every f satisfying the restricted modular law; terminates
    because flat steps lower the area and non-flat steps move a cell of the
    Dyck path strictly to the right.
    """
    if len(m) > bound:
        raise SizeLimitExceeded(f"n = {len(m)} exceeds bound {bound}")
    shape = classify(m)
    if isinstance(shape, UnionOfPaths):
        return {shape.parts: QRat(1)}
    out: Certificate = {}
    if isinstance(shape, Flat):
        m0, m1 = split_flat(m)
        _merge(out, reduce_to_paths(m1, bound), QRat(_ONE_PLUS_Q))
        _merge(out, reduce_to_paths(m0, bound), QRat(-Q))
    else:
        m0, m0_1, m_1 = split_nonflat(m)
        ratio = QRat(Q, _ONE_PLUS_Q)
        _merge(out, reduce_to_paths(m_1, bound), QRat(1))
        _merge(out, reduce_to_paths(m0, bound), ratio)
        _merge(out, reduce_to_paths(m0_1, bound), -ratio)
    return out


def law_defect(f: Callable[[Hess], SymFun], triple: Triple) -> SymFun:
    """(1+q) f(m') - q f(m) - f(m''); zero exactly when the law holds."""
    m, mp, mpp, _ = triple
    return _ONE_PLUS_Q * f(mp) - Q * f(m) - f(mpp)


def check_restricted_modular_law(
    f: Callable[[Hess], SymFun], n: int, kinds: tuple[str, ...] = ("I", "IIr")
) -> list[dict]:
    """Evaluate the law on every triple of the given kinds; violations are data."""
    violations = []
    for kind in kinds:
        for triple in enumerate_triples(n, kind):
            defect = law_defect(f, triple)
            if not defect.is_zero():
                violations.append(
                    {"kind": kind, "triple": triple[:3], "i": triple[3], "defect": defect}
                )
    return violations


def _base_e(key: tuple[int, ...]) -> SymFun:
    from .transition import e_total

    return e_total(union_of_paths(key))


def _base_g(key: tuple[int, ...]) -> SymFun:
    from .gfunctions import g_total

    return g_total(union_of_paths(key))


def _base_s(key: tuple[int, ...]) -> SymFun:
    from .ptableaux import s_fun

    return s_fun(union_of_paths(key)).to_e()

BASES = {"E": _base_e, "G": _base_g, "S": _base_s}


def evaluate(cert: Certificate, base) -> SymFun:
    """Contract a certificate against a base function on path unions."""
    if isinstance(base, str):
        base = BASES[base]
    degrees = {sum(key) for key in cert}
    if len(degrees) > 1:
        raise DegreeMismatch(f"certificate mixes degrees {sorted(degrees)}")
    out = None
    for key, coeff in sorted(cert.items()):
        value = base(key)
        if value.degree != sum(key):
            raise DegreeMismatch(
                f"base value for {key} has degree {value.degree}, expected {sum(key)}"
            )
        term = coeff * value
        out = term if out is None else out + term
    if out is None:
        raise DegreeMismatch("empty certificate has no degree")
    return out


def certificate_json(m: Hess, cert: Certificate) -> dict:
    return {
        "n": len(m),
        "terms": [
            {"paths": list(key), "coeff": coeff.to_json()}
            for key, coeff in sorted(cert.items())
        ],
    }


def certificate_from_json(data: dict) -> Certificate:
    return {
        tuple(term["paths"]): QRat.from_json(term["coeff"]) for term in data["terms"]
    }
