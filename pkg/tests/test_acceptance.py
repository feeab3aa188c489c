"""Acceptance suite: every headline identity, verified exactly at desk scale.

One test per criterion, in order.  Everything is checked by structural
equality over Q(q) after canonicalization; there are no tolerances anywhere.
The heavy per-function values are cached inside the library, so the whole
suite runs in well under the ten-minute single-threaded budget.
"""

from math import comb

from chromsym.coloring import x_colorings
from chromsym.errors import NotDivisible
from chromsym.gfunctions import g_cap, g_total, gfun, path_e_closed, path_x_closed
from chromsym.hessenberg import enumerate_hess, hsum, path
from chromsym.modular import (
    enumerate_triples,
    evaluate,
    law_defect,
    reduce_to_paths,
)
from chromsym.orientations import (
    ao_sink_poly,
    enumerate_ao,
    sink_distribution,
    sink_subset_count,
    sinks,
)
from chromsym.partitions import all_syt, partitions, vertical_strips
from chromsym.ptableaux import (
    base_column,
    corner_path_poly,
    enumerate_pt,
    inv_filling,
    path_peel,
    path_unpeel,
    s_fun,
    x_schur,
)
from chromsym.qpoly import ONE, Q, QPoly, QRat, q_int
from chromsym.symfunc import SymFun
from chromsym.transition import (
    c_poly,
    check_area_relation,
    delta_bits,
    delta_runs,
    e_part,
    e_total,
    p_table,
    phi,
    probability_sum,
    psi,
    x_from_table,
)


def hess_up_to(n_max):
    return [m for n in range(1, n_max + 1) for m in enumerate_hess(n)]


def test_criterion_01_main_theorem_e_g_s():
    """E = G = S and E_k = G_k for all 196 functions up to length six."""
    functions = hess_up_to(6)
    assert len(functions) == 196
    for m in functions:
        n = len(m)
        e = e_total(m)
        assert e == g_total(m), m
        assert e == s_fun(m).to_e(), m
        for k in range(1, n + 1):
            assert e_part(m, k) == g_cap(m, k), (m, k)


def test_criterion_02_four_way_x_agreement():
    """Coloring oracle = probability model = weighted cycle sums = tableaux."""
    for m in hess_up_to(5):
        n = len(m)
        x = x_colorings(m).to_e()
        assert x == x_from_table(m), (m, "transition")
        assert x == x_schur(m).to_e(), (m, "schur")
        decomposition = SymFun.zero(n)
        for k in range(1, n + 1):
            decomposition = decomposition + q_int(k) * g_cap(m, k)
        assert x == decomposition, (m, "decomposition")
    for m in enumerate_hess(6):
        assert x_colorings(m).to_e() == x_from_table(m), m


def test_criterion_03_e_positivity_at_one():
    """Every cycle-sum refinement is e-positive at q = 1 up to length six."""
    for m in hess_up_to(6):
        for k in range(0, len(m)):
            f = gfun(m, k)
            assert all(v >= 0 for v in f.at_q(1).values()), (m, k)


def test_criterion_04_divisions_always_exact():
    """No coefficient division by a q-integer ever leaves a remainder."""
    for m in hess_up_to(6):
        n = len(m)
        for lam in partitions(n):
            for k in range(1, lam[0] + 1):
                try:
                    c_poly(m, lam, k).exact_div(q_int(k))
                except NotDivisible as exc:  # pragma: no cover
                    raise AssertionError(f"division failed at {m}, {lam}, {k}") from exc


def test_criterion_05_probability_table_reproduction():
    """The worked five-vertex probability table, entry for entry."""
    table = p_table((2, 3, 5, 5, 5))
    assert table == {
        ((1, 2, 3), (4, 5)): QRat(Q * q_int(2), q_int(3)),
        ((1, 2, 3, 4), (5,)): QRat(Q, q_int(4)),
        ((1, 2, 3, 4, 5),): QRat(ONE, q_int(3) * q_int(4)),
    }


def test_criterion_06_restricted_modular_law():
    """Zero violations on restricted triples; the i = 1 exclusion is necessary."""
    for n in range(2, 6):
        triples = enumerate_triples(n, "I") + enumerate_triples(n, "IIr")
        families = [("S", lambda m: s_fun(m).to_e())]
        for k in range(1, n + 1):
            families.append((f"E_{k}", lambda m, k=k: e_part(m, k)))
            families.append((f"G_{k}", lambda m, k=k: g_cap(m, k)))
        for k in range(0, n):
            families.append((f"g_{k}", lambda m, k=k: gfun(m, k)))
        for name, f in families:
            for triple in triples:
                assert law_defect(f, triple).is_zero(), (name, triple)
    # at least one unrestricted type-II triple at i=1 where S fails
    violations = []
    for n in range(2, 6):
        for triple in enumerate_triples(n, "II"):
            if triple[3] == 1 and not law_defect(
                lambda m: s_fun(m).to_e(), triple
            ).is_zero():
                violations.append(triple)
    assert violations, "expected an i = 1 violation for the corner tableau sum"


def test_criterion_07_reduction_soundness():
    """Certificates evaluate to the direct values; reduction terminates at n = 7."""
    for m in hess_up_to(5):
        cert = reduce_to_paths(m)
        assert evaluate(cert, "E") == e_total(m), (m, "E")
        assert evaluate(cert, "G") == g_total(m), (m, "G")
        assert evaluate(cert, "S") == s_fun(m).to_e(), (m, "S")
    for m in enumerate_hess(7):
        cert = reduce_to_paths(m)
        assert all(sum(key) == 7 for key in cert)


def test_criterion_08_path_closed_forms():
    """Composition closed forms, the strip recursion, and the peel bijection."""
    for n in range(1, 9):
        m = path(n)
        for k in range(1, n + 1):
            assert e_part(m, k) == path_e_closed(n, k), (n, k)
        assert x_from_table(m) == path_x_closed(n), n
    for n in range(1, 8):
        for lam in partitions(n):
            lhs = corner_path_poly(lam)
            rhs = QPoly((1,)) if set(lam) == {1} else QPoly()
            for mu in vertical_strips(lam):
                if mu == lam:
                    continue
                rhs = rhs + (q_int(n - sum(mu)) - ONE) * corner_path_poly(mu)
            assert lhs == rhs, lam
    for n in range(1, 8):
        m = path(n)
        for lam in partitions(n):
            for rows in enumerate_pt(m, lam, corner1=True):
                if rows == base_column(n):
                    continue
                stripped, j = path_peel(rows)
                assert path_unpeel(stripped, j, lam) == rows, rows
                smaller = sum(len(r) for r in stripped)
                assert (
                    inv_filling(m, rows)
                    == inv_filling(path(smaller), stripped) + j
                ), rows


def test_criterion_09_sink_theorems():
    """Both sink distributions and the hook-shape binomial counts, n <= 5."""
    for m in hess_up_to(5):
        assert sink_distribution(m, "X") == {
            l: QRat(p) for l, p in ao_sink_poly(m, False).items()
        }, (m, "X")
        assert sink_distribution(m, "S") == {
            l: QRat(p) for l, p in ao_sink_poly(m, True).items()
        }, (m, "S")
        for theta in enumerate_ao(m, require_1_sink=True):
            ell = len(sinks(m, theta))
            for i in range(1, ell + 1):
                assert sink_subset_count(m, theta, i) == comb(ell - 1, i - 1), (m, i)


def test_criterion_10_appendix_identities():
    """Weight-variant power relation, sum-to-one laws, and the area relation."""
    for size in range(0, 7):
        for tab in all_syt(size):
            for r in range(0, size + 1):
                _, pairs, _ = delta_runs(delta_bits(tab, r))
                total = QRat(0)
                for k in range(len(pairs) + 1):
                    a_sum = sum(a for a, _ in pairs[:k])
                    b_sum = sum(b for _, b in pairs[k:])
                    left = psi(tab, k, r) * QRat(ONE.shifted(a_sum))
                    right = phi(tab, k, r) * QRat(ONE.shifted(b_sum))
                    assert left == right, (tab, r, k)
                    total = total + psi(tab, k, r)
                assert total == QRat(1), (tab, r)
    for m in hess_up_to(6):
        assert probability_sum(m) == QRat(1), m
        assert check_area_relation(m), m


def test_criterion_11_multiplicativity():
    """Disjoint unions factor through the second component's chromatic function."""
    for n1 in range(1, 5):
        for n2 in range(1, 6 - n1):
            for m1 in enumerate_hess(n1):
                for m2 in enumerate_hess(n2):
                    m = hsum(m1, m2)
                    x2 = x_colorings(m2).to_e()
                    assert e_total(m) == e_total(m1) * x2, (m1, m2, "E")
                    assert g_total(m) == g_total(m1) * x2, (m1, m2, "G")
                    assert s_fun(m).to_e() == s_fun(m1).to_e() * x2, (m1, m2, "S")
                    for k in range(1, n1 + n2 + 1):
                        expected = (
                            e_part(m1, k) * x2
                            if k <= n1
                            else SymFun.zero(n1 + n2)
                        )
                        assert e_part(m, k) == expected, (m1, m2, k, "E_k")
                        assert g_cap(m, k) == (
                            g_cap(m1, k) * x2 if k <= n1 else SymFun.zero(n1 + n2)
                        ), (m1, m2, k, "G_k")
