import random

import pytest

from linkpoly.diagram import (BraidWord, Diagram, DiagramError,
                              GenerationError, NonReducedError, braid_closure,
                              parse_braid, parse_pd, pretzel_diagram,
                              prime_factor_count,
                              random_almost_positive_diagram,
                              random_positive_diagram, torus_closure)
from linkpoly.seifert import canonical_euler, positivity_class, seifert


def test_parse_pd_trefoil():
    D = parse_pd("X[4,2,5,1] X[2,6,3,5] X[6,4,1,3]")
    assert D.n == 3
    assert abs(D.writhe()) == 3
    assert D.components() == 1
    assert len(D.faces()) == D.n + 2


def test_parse_pd_rejects():
    with pytest.raises(DiagramError):
        parse_pd("")
    with pytest.raises(DiagramError):
        parse_pd("X[1,2,1,2]")   # torus diagram fails Euler
    with pytest.raises(DiagramError):
        parse_pd("X[1,2,3,4]")   # dangling labels
    with pytest.raises(DiagramError):
        parse_pd("just text")


def test_parse_pd_kink():
    D = parse_pd("X[1,1,2,2]")
    assert D.n == 1 and D.components() == 1
    assert D.nugatory_crossings() == {0}


def test_braid_parse_and_closure():
    w = parse_braid("2: 1 1 1")
    assert w == BraidWord(2, (1, 1, 1))
    D = braid_closure(w)
    assert D.n == 3 and D.writhe() == 3
    assert seifert(D).s == 2
    assert D.is_connected()
    with pytest.raises(DiagramError):
        parse_braid("2: 5")
    with pytest.raises(DiagramError):
        parse_braid("")
    # unused strands close into free loops
    D2 = braid_closure(BraidWord(3, (1,)))
    assert D2.free_loops == 1 and D2.components() == 2
    D3 = braid_closure(BraidWord(4, (1, 1)))
    assert D3.free_loops == 2 and D3.components() == 4


def test_paper_braids_statistics():
    k15 = braid_closure(parse_braid("5: -1 -2 3 4 -3 2 1 -2 1 2 2 -3 4 3 -2 3"))
    assert k15.n == 16 and k15.writhe() == 4
    brep = braid_closure(parse_braid(
        "4: 1 1 1 2 -1 2 1 3 1 2 -1 2 2 3 -2 1 2 -1 2 3 -2"))
    assert brep.n == 21 and brep.writhe() == 11
    assert seifert(brep).s == 4


def test_euler_everywhere():
    rng = random.Random(5)
    for _ in range(20):
        D = random_positive_diagram(rng.getrandbits(30), rng.randint(4, 12))
        assert len(D.faces()) == D.n + 2


def test_moves_change_components_correctly():
    tref = torus_closure(3)
    for c in range(tref.n):
        assert abs(tref.smooth_oriented(c).components() - 1) == 1
        assert tref.switch_crossing(c).components() == 1
    # smoothing all crossings leaves the Seifert circles
    D = torus_closure(4)
    for c in reversed(range(D.n)):
        D = D.smooth_oriented(c)
    assert D.n == 0 and D.free_loops == 2


def test_switch_sign_and_mirror():
    tref = torus_closure(3)
    s = tref.switch_crossing(1)
    assert s.signs[1] == -1 and s.signs[0] == 1
    assert s.switch_crossing(1) == tref
    m = tref.mirror()
    assert m.writhe() == -3
    assert m.mirror() == tref


def test_switch_is_unknot_move_on_trefoil():
    # switching one crossing of the trefoil gives an unknot diagram; its
    # Jones polynomial is 1 (checked in the bracket tests), here we check
    # component count and connectivity survive
    s = torus_closure(3).switch_crossing(0)
    assert s.components() == 1 and s.is_connected()


def test_split_and_connectivity():
    tref = torus_closure(3)
    assert not tref.is_split_diagram()
    two = Diagram((), (), 2)
    assert two.is_split_diagram()
    assert Diagram((), (), 1).is_connected()
    # distant union via a braid word leaving a strand untouched
    D = braid_closure(BraidWord(3, (1, 1)))
    assert D.is_split_diagram()


def test_nugatory_and_once_used_generator():
    # every generator twice: reduced
    assert not braid_closure(parse_braid("3: 1 1 2 2")).nugatory_crossings()
    # a once-used generator is a nugatory crossing
    D = braid_closure(parse_braid("3: 1 2 2"))
    assert D.nugatory_crossings()
    with pytest.raises(NonReducedError):
        prime_factor_count(D)


def test_prime_factor_count():
    assert prime_factor_count(torus_closure(3)) == 1
    granny = braid_closure(parse_braid("3: 1 1 1 2 2 2"))
    assert prime_factor_count(granny) == 2
    three = braid_closure(parse_braid("4: 1 1 2 2 2 3 3"))
    assert prime_factor_count(three) == 3
    # invariance under mirror
    assert prime_factor_count(granny.mirror()) == 2
    with pytest.raises(DiagramError):
        prime_factor_count(Diagram((), (), 2))


def test_pretzels():
    L3 = pretzel_diagram((3, 3, 3, -1), "reverse")
    assert L3.n == 10 and L3.components() == 2
    assert positivity_class(L3) == 1
    p22 = pretzel_diagram((2, 2), "reverse")
    assert p22.n == 4 and positivity_class(p22) == 0
    assert canonical_euler(p22) == 0
    with pytest.raises(DiagramError):
        pretzel_diagram((3,), "reverse")
    with pytest.raises(DiagramError):
        pretzel_diagram((2, 3), ["parallel", "reverse"])  # unorientable


def test_torus_closure():
    T4 = torus_closure(4)
    assert T4.n == 4 and T4.components() == 2
    assert T4.writhe() == 4


def test_generators_deterministic_and_correct():
    for seed in (1, 7, 42):
        a = random_positive_diagram(seed, 8)
        b = random_positive_diagram(seed, 8)
        assert a == b
        assert positivity_class(a) == 0
        assert a.is_connected() and not a.nugatory_crossings()
    d1 = random_almost_positive_diagram(1, 8, True)
    d2 = random_almost_positive_diagram(1, 8, True)
    assert d1 == d2
    assert positivity_class(d1) == 1


def test_almost_positive_parallel_flag():
    from linkpoly.seifert import seifert as sdata
    for seed in range(6):
        for flag in (True, False):
            D = random_almost_positive_diagram(seed, 9, flag)
            data = sdata(D)
            p = D.negative_crossings()[0]
            partners = [c for c in range(D.n) if c != p
                        and data.crossing_pair[c] == data.crossing_pair[p]]
            assert bool(partners) == flag


def test_diagram_json_round_trip():
    D = torus_closure(5)
    assert Diagram.from_json(D.to_json()) == D


def test_canonical_code_invariance():
    # relabeling crossings must not change the canonical code
    D = braid_closure(parse_braid("3: 1 2 1 2"))
    base = D.canonical_code()
    # rebuild with crossings in a rotated order
    n = D.n
    perm = [(i + 1) % n for i in range(n)]
    inv = [0] * n
    for i, p in enumerate(perm):
        inv[p] = i
    theta = [0] * (4 * n)
    for d in range(4 * n):
        c, s = d >> 2, d & 3
        t = D.theta[d]
        theta[4 * perm[c] + s] = 4 * perm[t >> 2] + (t & 3)
    signs = [0] * n
    for c in range(n):
        signs[perm[c]] = D.signs[c]
    E = Diagram(signs, theta)
    assert E.canonical_code() == base
