"""Transition-probability model on standard Young tableaux.

A tableau of size s grows by inserting s+1 at one of the admissible columns
read off from the 0/1 indicator of "column contains an entry above the
threshold r"; each insertion carries an exact rational weight in q.  Running
the growth process with the thresholds prescribed by a Hessenberg function m
(step i uses r = n - m(n+1-i)) assigns a probability p(T) to every standard
tableau of size n, and these probabilities drive the elementary-basis
expansion refinements.

The dynamic program keeps values as a polynomial numerator together with a
multiset of q-integer indices for the denominator, so no polynomial gcd is
ever taken in the hot loop; exact division happens once per extracted
coefficient and doubles as a polynomiality assertion.
"""

from __future__ import annotations

from functools import lru_cache

from .errors import SizeLimitExceeded
from .hessenberg import Hess, area
from .partitions import (
    Partition,
    Tableau,
    entry_column,
    partitions,
    shape_of,
)
from .qpoly import ONE, QPoly, QRat, q_fact, q_int
from .symfunc import SymFun

DEFAULT_BOUND = 8

Runs = tuple[int, tuple[tuple[int, int], ...], int]


def delta_bits(tableau: Tableau, r: int) -> tuple[int, ...]:
    """Bit i says whether column i holds an entry greater than r (length = size)."""
    n = sum(len(row) for row in tableau)
    width = len(tableau[0]) if tableau else 0
    bits = []
    for c in range(width):
        height = sum(1 for row in tableau if len(row) > c)
        bits.append(1 if tableau[height - 1][c] > r else 0)
    bits.extend([0] * (n - width))
    return tuple(bits)


def delta_runs(bits: tuple[int, ...]) -> Runs:
    """Unique decomposition (1^b0, 0^a1, 1^b1, ..., 0^al, 1^bl, 0^tail)."""
    i, n = 0, len(bits)
    b0 = 0
    while i < n and bits[i] == 1:
        b0 += 1
        i += 1
    pairs = []
    while i < n:
        a = 0
        while i < n and bits[i] == 0:
            a += 1
            i += 1
        b = 0
        while i < n and bits[i] == 1:
            b += 1
            i += 1
        if b == 0:
            return b0, tuple(pairs), a
        pairs.append((a, b))
    return b0, tuple(pairs), 0


def insertion_column(runs: Runs, k: int) -> int:
    b0, pairs, _ = runs
    if not 0 <= k <= len(pairs):
        raise IndexError(f"k = {k} exceeds the number of runs {len(pairs)}")
    return 1 + b0 + sum(a + b for a, b in pairs[:k])


def insert_at_column(tableau: Tableau, column: int) -> Tableau:
    """Append size+1 at the bottom of the given 1-based column."""
    n = sum(len(row) for row in tableau)
    rows = [list(row) for row in tableau]
    height = sum(1 for row in rows if len(row) >= column)
    if height == len(rows):
        rows.append([])
    assert len(rows[height]) == column - 1, "insertion breaks the shape"
    rows[height].append(n + 1)
    return tuple(tuple(row) for row in rows)


def insertions(tableau: Tableau, r: int) -> list[tuple[int, Tableau]]:
    """All admissible growth steps (k, resulting tableau) at threshold r."""
    runs = delta_runs(delta_bits(tableau, r))
    return [
        (k, insert_at_column(tableau, insertion_column(runs, k)))
        for k in range(len(runs[1]) + 1)
    ]


def _weight_runs(runs: Runs, k: int, modified: bool) -> tuple[QPoly, tuple[int, ...]]:
    """Insertion weight as (numerator, q-integer denominator indices).

    ``modified`` selects the q-power sum(b_i, i > k) in front; the original
    variant uses sum(a_i, i <= k) instead, everything else being equal.
    """
    _, pairs, _ = runs
    l = len(pairs)
    if not 0 <= k <= l:
        raise IndexError(f"k = {k} exceeds the number of runs {l}")
    a = [ab[0] for ab in pairs]
    b = [ab[1] for ab in pairs]
    if modified:
        power = sum(b[k:])
    else:
        power = sum(a[:k])
    num = ONE.shifted(power)
    den: list[int] = []
    for i in range(1, k + 1):
        num = num * q_int(sum(a[i:k]) + sum(b[i - 1 : k]))
        den.append(sum(a[i - 1 : k]) + sum(b[i - 1 : k]))
    for i in range(k + 1, l + 1):
        num = num * q_int(sum(a[k:i]) + sum(b[k : i - 1]))
        den.append(sum(a[k:i]) + sum(b[k:i]))
    return num, tuple(sorted(den))


def _den_poly(den: tuple[int, ...]) -> QPoly:
    out = ONE
    for j in den:
        out = out * q_int(j)
    return out


def _to_qrat(value: tuple[QPoly, tuple[int, ...]]) -> QRat:
    num, den = value
    return QRat(num, _den_poly(den))


def _mul(value, weight):
    num, den = value
    wnum, wden = weight
    return num * wnum, tuple(sorted(den + wden))


def _add(v1, v2):
    num1, den1 = v1
    num2, den2 = v2
    if den1 == den2:
        return num1 + num2, den1
    merged: dict[int, int] = {}
    for j in den1:
        merged[j] = merged.get(j, 0) + 1
    extra2 = dict(merged)
    for j in den2:
        if extra2.get(j, 0) > 0:
            extra2[j] -= 1
        else:
            merged[j] = merged.get(j, 0) + 1
    # merged now holds the per-index max; extra2 the deficit of den2
    den = tuple(sorted(j for j, c in merged.items() for _ in range(c)))
    extra1: dict[int, int] = dict(merged)
    for j in den1:
        extra1[j] -= 1
    for j, c in extra1.items():
        for _ in range(c):
            num1 = num1 * q_int(j)
    for j, c in extra2.items():
        for _ in range(c):
            num2 = num2 * q_int(j)
    return num1 + num2, den


def psi(tableau: Tableau, k: int, r: int) -> QRat:
    """Weight of the k-th insertion at threshold r (modified variant)."""
    return _to_qrat(_weight_runs(delta_runs(delta_bits(tableau, r)), k, modified=True))


def phi(tableau: Tableau, k: int, r: int) -> QRat:
    """Weight of the k-th insertion at threshold r (original variant)."""
    return _to_qrat(_weight_runs(delta_runs(delta_bits(tableau, r)), k, modified=False))


def thresholds(m: Hess) -> list[int]:
    """Threshold used at step i (growing entry i), for i = 1..n."""
    n = len(m)
    return [n - m[n - i] for i in range(1, n + 1)]


@lru_cache(maxsize=None)
def _table_raw(m: Hess, modified: bool) -> dict[Tableau, tuple[QPoly, tuple[int, ...]]]:
    states: dict[Tableau, tuple[QPoly, tuple[int, ...]]] = {(): (ONE, ())}
    for r in thresholds(m):
        new: dict[Tableau, tuple[QPoly, tuple[int, ...]]] = {}
        for tab, value in states.items():
            runs = delta_runs(delta_bits(tab, r))
            for k in range(len(runs[1]) + 1):
                weight = _weight_runs(runs, k, modified)
                child = insert_at_column(tab, insertion_column(runs, k))
                contrib = _mul(value, weight)
                new[child] = _add(new[child], contrib) if child in new else contrib
        states = new
    return states


def _check_bound(m: Hess, bound: int) -> None:
    if len(m) > bound:
        raise SizeLimitExceeded(f"n = {len(m)} exceeds bound {bound}")


def p_table(m: Hess, bound: int = DEFAULT_BOUND) -> dict[Tableau, QRat]:
    """Probability of every reachable standard tableau of size n under m."""
    _check_bound(m, bound)
    return {t: _to_qrat(v) for t, v in _table_raw(m, True).items() if not v[0].is_zero()}


def p_bar_table(m: Hess, bound: int = DEFAULT_BOUND) -> dict[Tableau, QRat]:
    """Same table built with the original (unmodified) weights."""
    _check_bound(m, bound)
    return {t: _to_qrat(v) for t, v in _table_raw(m, False).items() if not v[0].is_zero()}


def probability_sum(m: Hess, modified: bool = True) -> QRat:
    total: tuple[QPoly, tuple[int, ...]] = (QPoly(), ())
    for value in _table_raw(m, modified).values():
        total = _add(total, value)
    return _to_qrat(total)


def check_area_relation(m: Hess, bound: int = DEFAULT_BOUND) -> bool:
    """Entrywise relation between the two tables through a fixed power of q.

    The modified probability equals the original one multiplied by q to the
    power area(m) - sum of binomial(lam_j, 2) over the rows of the shape.
    """
    _check_bound(m, bound)
    mod = _table_raw(m, True)
    orig = _table_raw(m, False)
    if set(mod) != set(orig):
        return False
    a = area(m)
    for tab, (num_m, den_m) in mod.items():
        num_o, den_o = orig[tab]
        shift = sum(p * (p - 1) // 2 for p in shape_of(tab))
        lhs = num_m.shifted(shift) * _den_poly(den_o)
        rhs = num_o.shifted(a) * _den_poly(den_m)
        if lhs != rhs:
            return False
    return True


def c_poly(m: Hess, lam: Partition, k: int, bound: int = DEFAULT_BOUND) -> QPoly:
    """Product of row q-factorials times the probability mass of the tableaux
    of shape lam whose largest entry sits in column k.  Always a polynomial;
    a failed division here would falsify that claim and raises NotDivisible.
    """
    _check_bound(m, bound)
    n = len(m)
    total: tuple[QPoly, tuple[int, ...]] = (QPoly(), ())
    for tab, value in _table_raw(m, True).items():
        if shape_of(tab) == lam and entry_column(tab, n) == k:
            total = _add(total, value)
    num, den = total
    for part in lam:
        num = num * q_fact(part)
    return num.exact_div(_den_poly(den))


def e_part(m: Hess, k: int, bound: int = DEFAULT_BOUND) -> SymFun:
    """Degree-n refinement indexed by the column k of the largest entry."""
    n = len(m)
    coeffs = {}
    for lam in partitions(n):
        if k > lam[0]:
            continue
        c = c_poly(m, lam, k, bound)
        if not c.is_zero():
            coeffs[lam] = c.exact_div(q_int(k))
    return SymFun(n, "e", coeffs)


@lru_cache(maxsize=None)
def e_total(m: Hess, bound: int = DEFAULT_BOUND) -> SymFun:
    """Sum of the refinements over all columns k."""
    n = len(m)
    out = SymFun.zero(n)
    for k in range(1, n + 1):
        out = out + e_part(m, k, bound)
    return out


@lru_cache(maxsize=None)
def x_from_table(m: Hess, bound: int = DEFAULT_BOUND) -> SymFun:
    """The chromatic quasisymmetric function from the probability table."""
    _check_bound(m, bound)
    n = len(m)
    coeffs = {}
    for lam in partitions(n):
        total: tuple[QPoly, tuple[int, ...]] = (QPoly(), ())
        for tab, value in _table_raw(m, True).items():
            if shape_of(tab) == lam:
                total = _add(total, value)
        num, den = total
        for part in lam:
            num = num * q_fact(part)
        c = num.exact_div(_den_poly(den))
        if not c.is_zero():
            coeffs[lam] = c
    return SymFun(n, "e", coeffs)


def trace(m: Hess, bound: int = DEFAULT_BOUND) -> list[dict]:
    """Growth tree records for display: one per (parent, child) insertion."""
    _check_bound(m, bound)
    records = []
    states: dict[Tableau, QRat] = {(): QRat(1)}
    for step, r in enumerate(thresholds(m), start=1):
        new: dict[Tableau, QRat] = {}
        for tab, prob in states.items():
            runs = delta_runs(delta_bits(tab, r))
            for k in range(len(runs[1]) + 1):
                weight = _to_qrat(_weight_runs(runs, k, True))
                child = insert_at_column(tab, insertion_column(runs, k))
                cumulative = prob * weight
                new[child] = new.get(child, QRat(0)) + cumulative
                records.append(
                    {
                        "step": step,
                        "r": r,
                        "k": k,
                        "parent": tab,
                        "child": child,
                        "weight": weight,
                        "p": cumulative,
                    }
                )
        states = new
    return records
