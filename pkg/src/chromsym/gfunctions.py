"""Cycle-sum refinements of the chromatic symmetric function.

The degree-k function attached to a Hessenberg function m is a signed,
q-weighted sum over the permutations bounded by m (sigma(i) <= m(i) for all
i), organized by cycle type.  Cycles are written with their smallest element
first and ordered by increasing minima, so the first cycle is the one
containing 1; the weight of sigma counts graph edges (i, j) whose larger end
precedes the smaller in the resulting word.
"""

from __future__ import annotations

from functools import lru_cache
from typing import Iterator

from .hessenberg import Hess, edges
from .partitions import compositions
from .qpoly import ONE, QPoly, q_int
from .symfunc import SymFun, h_to_e, omega

Perm = tuple[int, ...]


def bounded_permutations(m: Hess) -> Iterator[Perm]:
    """All permutations sigma with sigma(i) <= m(i), position by position."""
    n = len(m)
    used = [False] * (n + 1)
    sigma = [0] * n

    def fill(i: int) -> Iterator[Perm]:
        if i == n:
            yield tuple(sigma)
            return
        for v in range(1, m[i] + 1):
            if not used[v]:
                used[v] = True
                sigma[i] = v
                yield from fill(i + 1)
                used[v] = False

    yield from fill(0)


def cycle_word(sigma: Perm) -> tuple[int, ...]:
    """Concatenated cycle decomposition, smallest elements first, minima increasing."""
    n = len(sigma)
    seen = [False] * (n + 1)
    word: list[int] = []
    for start in range(1, n + 1):
        if seen[start]:
            continue
        v = start
        while not seen[v]:
            seen[v] = True
            word.append(v)
            v = sigma[v - 1]
    return tuple(word)


def cycle_sizes(sigma: Perm) -> tuple[int, ...]:
    """Cycle sizes ordered by increasing cycle minima (first contains 1)."""
    n = len(sigma)
    seen = [False] * (n + 1)
    sizes = []
    for start in range(1, n + 1):
        if seen[start]:
            continue
        size, v = 0, start
        while not seen[v]:
            seen[v] = True
            size += 1
            v = sigma[v - 1]
        sizes.append(size)
    return tuple(sizes)


def wt(m: Hess, sigma: Perm) -> int:
    """Edges (i, j), i < j <= m(i), with j before i in the cycle word."""
    word = cycle_word(sigma)
    pos = [0] * (len(m) + 1)
    for idx, v in enumerate(word):
        pos[v] = idx
    return sum(1 for i, j in edges(m) if pos[j] < pos[i])


@lru_cache(maxsize=None)
def rho(k: int) -> SymFun:
    """Degree-k building block solved from [n]_q h_n = sum h_{n-i} rho_i."""
    if k < 0:
        raise ValueError("rho requires k >= 0")
    if k == 0:
        return SymFun.one()
    out = q_int(k) * h_to_e(k)
    for i in range(1, k):
        out = out - h_to_e(k - i) * rho(i)
    return out


@lru_cache(maxsize=None)
def _omega_rho(k: int) -> SymFun:
    return omega(rho(k))


@lru_cache(maxsize=None)
def _omega_rho_product(parts: tuple[int, ...]) -> SymFun:
    out = SymFun.one()
    for p in parts:
        out = out * _omega_rho(p)
    return out


@lru_cache(maxsize=None)
def _cycle_stats(m: Hess) -> dict[tuple[int, tuple[int, ...]], QPoly]:
    """Aggregate q^wt by (size of the cycle containing 1, sorted other sizes)."""
    stats: dict[tuple[int, tuple[int, ...]], list[int]] = {}
    max_wt = len(edges(m))
    for sigma in bounded_permutations(m):
        sizes = cycle_sizes(sigma)
        key = (sizes[0], tuple(sorted(sizes[1:], reverse=True)))
        bucket = stats.setdefault(key, [0] * (max_wt + 1))
        bucket[wt(m, sigma)] += 1
    return {key: QPoly(counts) for key, counts in stats.items()}


def gfun(m: Hess, k: int) -> SymFun:
    """The degree-k cycle-sum function, in the elementary basis.

    Sums over bounded permutations whose first cycle has size at least n - k;
    a first cycle of size n - k + d contributes with sign (-1)^d through h_d.
    """
    n = len(m)
    if not 0 <= k < n:
        raise ValueError(f"k must lie in [0, {n})")
    out = SymFun.zero(k)
    for (t1, rest), poly in _cycle_stats(m).items():
        d = t1 - (n - k)
        if d < 0:
            continue
        sign = 1 if d % 2 == 0 else -1
        term = h_to_e(d) * _omega_rho_product(rest)
        out = out + (sign * poly) * term
    return out


def g_cap(m: Hess, k: int) -> SymFun:
    """e_k times the degree-(n-k) cycle-sum function."""
    n = len(m)
    if not 1 <= k <= n:
        raise ValueError(f"k must lie in [1, {n}]")
    return SymFun.e_term((k,)) * gfun(m, n - k)


@lru_cache(maxsize=None)
def g_total(m: Hess) -> SymFun:
    n = len(m)
    out = SymFun.zero(n)
    for k in range(1, n + 1):
        out = out + g_cap(m, k)
    return out


@lru_cache(maxsize=None)
def x_cycle_sum(m: Hess) -> SymFun:
    """The chromatic quasisymmetric function as a full cycle-type sum."""
    n = len(m)
    out = SymFun.zero(n)
    for (t1, rest), poly in _cycle_stats(m).items():
        out = out + poly * _omega_rho_product((t1,) + rest)
    return out


@lru_cache(maxsize=None)
def closed_g(degree: int) -> SymFun:
    """Composition sum matching the cycle-sum function of a path.

    Equals gfun(path(n), degree) for any path length n > degree; this is a
    path-only identity, not valid for general m.
    """
    out = SymFun.zero(degree)
    for alpha in compositions(degree):
        coeff = ONE
        for part in alpha:
            coeff = coeff * (q_int(part) - ONE)
        if not coeff.is_zero():
            out = out + coeff * SymFun.e_term(alpha)
    return out


def path_e_closed(n: int, k: int) -> SymFun:
    """Closed form of the degree-n refinement at column k for the path."""
    return SymFun.e_term((k,)) * closed_g(n - k)


def path_x_closed(n: int) -> SymFun:
    """Closed form of the chromatic quasisymmetric function of the path."""
    out = SymFun.zero(n)
    for k in range(1, n + 1):
        out = out + q_int(k) * path_e_closed(n, k)
    return out
