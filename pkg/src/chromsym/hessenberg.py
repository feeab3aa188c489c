"""Hessenberg functions and their Dyck-path, poset, and graph views.

A Hessenberg function of length n is a weakly increasing tuple m with
i <= m(i) <= n.  It encodes a natural unit interval order (i < j in the poset
iff m(i) < j) whose incomparability graph has the edges (i, j) for
i < j <= m(i).  Functions here are plain 1-based tuples, validated at
construction.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import Iterator

Hess = tuple[int, ...]


def hess(values) -> Hess:
    """Validate and normalize a Hessenberg function."""
    if isinstance(values, str):
        values = [int(x) for x in values.replace(",", " ").split()]
    m = tuple(int(v) for v in values)
    n = len(m)
    if n == 0:
        raise ValueError("a Hessenberg function has positive length")
    for i, v in enumerate(m, start=1):
        if not i <= v <= n:
            raise ValueError(f"value {v} at position {i} violates {i} <= m({i}) <= {n}")
    if any(m[i] > m[i + 1] for i in range(n - 1)):
        raise ValueError(f"{m} is not weakly increasing")
    return m


def area(m: Hess) -> int:
    """Cells between the Dyck path and the diagonal."""
    return sum(v - i for i, v in enumerate(m, start=1))


def edges(m: Hess) -> tuple[tuple[int, int], ...]:
    """Incomparability-graph edges (i, j) with i < j <= m(i)."""
    return tuple((i, j) for i in range(1, len(m) + 1) for j in range(i + 1, m[i - 1] + 1))


def has_edge(m: Hess, i: int, j: int) -> bool:
    if i > j:
        i, j = j, i
    return i < j <= m[i - 1]


def poset_less(m: Hess, i: int, j: int) -> bool:
    """True when i precedes j in the natural unit interval order."""
    n = len(m)
    if not (1 <= i <= n and 1 <= j <= n):
        raise IndexError(f"vertices must lie in [1, {n}]")
    return m[i - 1] < j


def hsum(m1: Hess, m2: Hess) -> Hess:
    """Concatenation whose graph is the disjoint union of the two graphs."""
    n1 = len(m1)
    return m1 + tuple(v + n1 for v in m2)


def wedge(m1: Hess, m2: Hess) -> Hess:
    """Glue the last vertex of m1 onto the first vertex of m2."""
    n1 = len(m1)
    return m1[: n1 - 1] + tuple(v + n1 - 1 for v in m2)


def path(n: int) -> Hess:
    """The Hessenberg function whose graph is the path on n vertices."""
    if n < 1:
        raise ValueError("paths need at least one vertex")
    if n == 1:
        return (1,)
    return tuple(range(2, n + 1)) + (n,)


def union_of_paths(lengths) -> Hess:
    m: Hess = ()
    for k in lengths:
        m = hsum(m, path(k)) if m else path(k)
    return m


@lru_cache(maxsize=None)
def enumerate_hess(n: int) -> tuple[Hess, ...]:
    """All Hessenberg functions of length n (Catalan many), lexicographic."""

    def gen(i: int, lo: int) -> Iterator[Hess]:
        if i > n:
            yield ()
            return
        for v in range(max(lo, i), n + 1):
            for tail in gen(i + 1, v):
                yield (v,) + tail

    return tuple(gen(1, 1))


def components(m: Hess) -> list[list[int]]:
    """Connected components of the graph, each a sorted vertex list."""
    n = len(m)
    seen = [False] * (n + 1)
    out = []
    for start in range(1, n + 1):
        if seen[start]:
            continue
        comp, stack = [], [start]
        seen[start] = True
        while stack:
            v = stack.pop()
            comp.append(v)
            for w in range(1, n + 1):
                if w != v and not seen[w] and has_edge(m, v, w):
                    seen[w] = True
                    stack.append(w)
        out.append(sorted(comp))
    return out


def path_components(m: Hess) -> tuple[int, ...] | None:
    """Component sizes (in vertex order) when every component is a path.

    Returns None as soon as some component contains a vertex of degree > 2 or
    a cycle.  For these graphs a component is a path exactly when its edges
    are the consecutive pairs, so it suffices to check edge counts and degrees.
    """
    comps = components(m)
    sizes = []
    for comp in comps:
        vs = set(comp)
        comp_edges = [e for e in edges(m) if e[0] in vs]
        if len(comp_edges) != len(comp) - 1:
            return None
        degree = {v: 0 for v in comp}
        for i, j in comp_edges:
            degree[i] += 1
            degree[j] += 1
        if any(d > 2 for d in degree.values()):
            return None
        sizes.append(len(comp))
    return tuple(sizes)


@dataclass(frozen=True)
class UnionOfPaths:
    parts: tuple[int, ...]


@dataclass(frozen=True)
class Flat:
    alpha: int
    beta: int


@dataclass(frozen=True)
class NonFlat:
    alpha: int
    beta: int


def classify(m: Hess) -> UnionOfPaths | Flat | NonFlat:
    """Sort a Hessenberg function into the three reduction cases.

    When m is not a union of paths, alpha is the largest value in [n-1] that
    is missed by m while alpha+1 is attained with min preimage < alpha; the
    function is flat when m(alpha) = m(alpha+1).
    """
    parts = path_components(m)
    if parts is not None:
        return UnionOfPaths(parts)
    n = len(m)
    values = set(m)
    for a in range(n - 1, 0, -1):
        if a in values or (a + 1) not in values:
            continue
        beta = min(i for i in range(1, n + 1) if m[i - 1] == a + 1)
        if beta < a:
            if m[a - 1] == m[a]:
                return Flat(a, beta)
            # the largest-alpha choice forces the step to be exactly one
            assert m[a] == m[a - 1] + 1, f"non-flat step broken at {m}"
            return NonFlat(a, beta)
    raise AssertionError(f"no split point found for non-path {m}")
