import random

import pytest
from fractions import Fraction

from linkpoly.bracket import jones
from linkpoly.diagram import (BraidWord, Diagram, braid_closure, parse_braid,
                              random_almost_positive_diagram,
                              random_positive_diagram, torus_closure)
from linkpoly.laurent import Laurent, Laurent2, homfly_to_jones
from linkpoly.seifert import bennequin, canonical_euler
from linkpoly.skein import (DELTA, SkeinBudgetError, alexander_nonneg,
                            alexander_symmetric, degrees, homfly,
                            homfly_braid, morton_report)


def T(terms):
    return Laurent({4 * k: v for k, v in terms.items()}, "t")


def test_base_cases():
    assert homfly(Diagram((), (), 1)) == Laurent2.one()
    assert homfly(Diagram((), (), 2)) == DELTA
    assert homfly(Diagram((), (), 3)) == DELTA * DELTA


def test_trefoil_and_hopf():
    P = homfly(torus_closure(3))
    assert P == Laurent2({(8, 0): -2, (16, 0): -1, (8, 8): 1})
    assert homfly_to_jones(P) == T({1: 1, 3: 1, 4: -1})
    Ph = homfly(torus_closure(2))
    assert homfly_to_jones(Ph) == jones(torus_closure(2))


def test_alexander_normalizations():
    tref = torus_closure(3)
    sym = alexander_symmetric(tref)
    assert sym == T({-1: 1, 0: -1, 1: 1})
    assert sym.evaluate(1) == 1
    assert sym == sym.reciprocal()
    nn = alexander_nonneg(tref)
    assert nn == T({0: 1, 1: -1, 2: 1})
    assert nn.min_deg() == 0 and nn.coeff_at(0) == 1
    hop = alexander_symmetric(torus_closure(2))
    assert hop.max_cf() > 0
    assert hop.max_deg() == Fraction(1, 2)
    assert hop == -hop.reciprocal()   # even-component antisymmetry
    # split link: zero polynomial, reported as zero
    assert alexander_symmetric(Diagram((), (), 2)) == Laurent.zero("t")


def test_alexander_symmetric_vs_det_at_minus_one():
    # |Delta(-1)| is the determinant; for torus knots T(2,n) it is n
    for n in (3, 5, 7):
        sym = alexander_symmetric(torus_closure(n))
        assert abs(sym.evaluate(-1)) == n


def test_degrees_and_morton():
    tref = torus_closure(3)
    P = homfly(tref)
    d = degrees(P)
    assert (d.mindeg_l, d.maxdeg_l, d.mindeg_m, d.maxdeg_m) == (2, 4, 0, 2)
    rep = morton_report(tref, P=P)
    assert rep.bennequin == 2
    assert rep.mindeg_l == 2
    assert rep.maxdeg_m == 2 == rep.one_minus_chi
    assert rep.all_hold


def test_braid_engine_matches_diagram_engine():
    words = ["2: 1 1 1", "2: -1 -1 -1", "3: 1 1 2 2", "3: 1 2 1 2",
             "2: -1 1 1 1 1", "3: -1 2 -1 2 2 1", "4: 1 2 3 1 2 3",
             "3: 1 1 1 2 2 2", "4: -1 2 -3 2 1 1 3 2", "3: 2 2 1 1 2 1"]
    rng = random.Random(11)
    for _ in range(10):
        s = rng.randint(2, 4)
        letters = tuple(rng.choice([1, -1]) * rng.randint(1, s - 1)
                        for _ in range(rng.randint(2, 12)))
        words.append(f"{s}: " + " ".join(map(str, letters)))
    for text in words:
        w = parse_braid(text)
        assert homfly_braid(w) == homfly(braid_closure(w)), text


def test_substituted_jones_matches_bracket():
    rng = random.Random(23)
    for _ in range(12):
        D = random_positive_diagram(rng.getrandbits(30), rng.randint(4, 10))
        assert homfly_to_jones(homfly(D)) == jones(D)
        A = random_almost_positive_diagram(rng.getrandbits(30),
                                           rng.randint(4, 10),
                                           rng.random() < 0.5)
        assert homfly_to_jones(homfly(A)) == jones(A)


def test_alexander_mdeg_bound():
    rng = random.Random(5)
    for _ in range(10):
        D = random_positive_diagram(rng.getrandbits(30), rng.randint(4, 10))
        P = homfly(D)
        sym = alexander_symmetric(D, P=P)
        if sym:
            assert 2 * sym.max_deg() <= degrees(P).maxdeg_m


def test_positive_diagram_degree_laws():
    rng = random.Random(9)
    for _ in range(10):
        D = random_positive_diagram(rng.getrandbits(30), rng.randint(4, 10))
        P = homfly(D)
        d = degrees(P)
        assert bennequin(D) <= d.mindeg_l
        assert d.maxdeg_m == 1 - canonical_euler(D)


def test_budget_error():
    brep = parse_braid("4: 1 1 1 2 -1 2 1 3 1 2 -1 2 2 3 -2 1 2 -1 2 3 -2")
    with pytest.raises(SkeinBudgetError) as exc:
        homfly_braid(brep, budget=3)
    assert exc.value.nodes > 3 or "budget" in str(exc.value)


def test_catalog_degree_values():
    brep = parse_braid("4: 1 1 1 2 -1 2 1 3 1 2 -1 2 2 3 -2 1 2 -1 2 3 -2")
    P = homfly_braid(brep)
    assert degrees(P).mindeg_l == 10
    assert homfly_to_jones(P).min_deg() == 5
    assert bennequin(braid_closure(brep)) == 8 <= degrees(P).mindeg_l
    cx = parse_braid("4: 2 3 -2 1 2 -1 2 3 -2 1 2 -1 2 3 -2 1 2 -1 1")
    Pc = homfly_braid(cx)
    assert degrees(Pc).mindeg_l == 4
    assert homfly_to_jones(Pc).min_deg() == 3
    k15 = parse_braid("5: -1 -2 3 4 -3 2 1 -2 1 2 2 -3 4 3 -2 3")
    assert homfly_to_jones(homfly_braid(k15)).min_deg() == 1
