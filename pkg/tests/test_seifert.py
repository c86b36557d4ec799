import random

import pytest

from linkpoly.bracket import jones
from linkpoly.diagram import (DiagramError, braid_closure, parse_braid,
                              pretzel_diagram, random_positive_diagram,
                              torus_closure)
from linkpoly.seifert import (bennequin, betti1, canonical_euler, is_special,
                              is_special_alternating, positivity_class,
                              reduced_seifert_graph, rudolph_bennequin,
                              seifert, seifert_graph, separating_circles,
                              special_summands)


def test_circles_of_torus_closures():
    tref = torus_closure(3)
    data = seifert(tref)
    assert data.s == 2
    assert all(len(p) == 2 for p in data.crossing_pair.values())
    assert set(data.valency) == {3}
    D = braid_closure(parse_braid("3: 1 2 1 2"))
    data = seifert(D)
    assert data.s == 3
    pairs = set(map(tuple, map(sorted, data.crossing_pair.values())))
    assert len(pairs) == 2  # (1,2) and (2,3) strand pairs only


def test_canonical_euler():
    assert canonical_euler(torus_closure(3)) == -1
    assert canonical_euler(torus_closure(2)) == 0


def test_positivity_class():
    assert positivity_class(torus_closure(3)) == 0
    assert positivity_class(braid_closure(parse_braid("2: -1 1 1 1 1"))) == 1
    assert positivity_class(torus_closure(3).mirror()) == 3


def test_betti_numbers():
    tref = torus_closure(3)
    assert betti1(reduced_seifert_graph(tref)) == 0
    assert betti1(seifert_graph(tref)) == 2 == 1 - canonical_euler(tref)
    rng = random.Random(3)
    for _ in range(12):
        D = random_positive_diagram(rng.getrandbits(30), rng.randint(4, 12))
        assert betti1(seifert_graph(D)) == 1 - canonical_euler(D)
    # explicit generated diagrams with cycles in the reduced graph:
    # the (2,2)-pretzel's four circles form a 4-cycle (b1 = 1), the
    # (2,2,2)-pretzel's five a theta of paths (b1 = 2)
    p22 = pretzel_diagram((2, 2), "reverse")
    assert betti1(reduced_seifert_graph(p22)) == 1
    p222 = pretzel_diagram((2, 2, 2), "reverse")
    assert betti1(reduced_seifert_graph(p222)) == 2


def test_b1_invariance_under_flypes():
    # pretzel band permutations are flypes: same link, same reduced b1
    perms = [(2, 2, 4), (2, 4, 2), (4, 2, 2)]
    diagrams = [pretzel_diagram(p, "reverse") for p in perms]
    vs = {str(jones(D)) for D in diagrams}
    assert len(vs) == 1
    b1s = {betti1(reduced_seifert_graph(D)) for D in diagrams}
    assert len(b1s) == 1


def test_bennequin_numbers():
    tref = torus_closure(3)
    assert bennequin(tref) == 2 == 1 - canonical_euler(tref)
    assert rudolph_bennequin(tref) == bennequin(tref)
    m = tref.mirror()
    assert bennequin(m) == -4
    assert rudolph_bennequin(m) == 0  # s_- = 2 on the two 3-valent circles


def test_separating_and_special():
    tref = torus_closure(3)
    assert separating_circles(tref) == set()
    assert is_special(tref) and is_special_alternating(tref)
    granny = braid_closure(parse_braid("3: 1 1 1 2 2 2"))
    assert len(separating_circles(granny)) == 1
    assert not is_special(granny)
    assert not is_special_alternating(braid_closure(
        parse_braid("2: -1 1 1 1 1")))


def test_murasugi_decomposition_round_trip():
    granny = braid_closure(parse_braid("3: 1 1 1 2 2 2"))
    dec = special_summands(granny)
    assert len(dec.summands) == 2
    assert sorted(s.n for s in dec.summands) == [3, 3]
    assert sum(1 - canonical_euler(s) for s in dec.summands) == \
        1 - canonical_euler(granny)
    assert all(is_special(s) for s in dec.summands)
    # crossing multiset is preserved
    signs = sorted(x for s in dec.summands for x in s.signs)
    assert signs == sorted(granny.signs)
    chain = braid_closure(parse_braid("4: 1 1 2 2 2 3 3 3 3"))
    dec = special_summands(chain)
    assert sorted(s.n for s in dec.summands) == [2, 3, 4]
    assert sum(1 - canonical_euler(s) for s in dec.summands) == \
        1 - canonical_euler(chain)


def test_murasugi_needs_connected():
    from linkpoly.diagram import Diagram
    with pytest.raises(DiagramError):
        special_summands(Diagram((), (), 2))
