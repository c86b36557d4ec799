import pytest
from fractions import Fraction

from linkpoly.bracket import (LeadingPrediction, StateSumCapError,
                              almost_positive_leading, is_a_adequate,
                              is_b_adequate, jones, kauffman_bracket,
                              state_loops)
from linkpoly.diagram import (Diagram, DiagramError, braid_closure,
                              parse_braid, random_positive_diagram,
                              torus_closure)
from linkpoly.laurent import Laurent


def A(terms):
    return Laurent({4 * k: v for k, v in terms.items()}, "A")


def T(terms):
    return Laurent({4 * k: v for k, v in terms.items()}, "t")


def test_state_loops_hand_traced():
    hopf = torus_closure(2)
    assert state_loops(hopf, "AA") == 2
    assert state_loops(hopf, "AB") == 1
    assert state_loops(hopf, "BA") == 1
    assert state_loops(hopf, "BB") == 2
    tref = torus_closure(3)
    # the all-A state of a positive diagram is the Seifert state
    assert state_loops(tref, "AAA") == 2
    with pytest.raises(DiagramError):
        state_loops(tref, "AA")


def test_bracket_hand_sums():
    # 4-state sum for the Hopf closure, 8-state for the trefoil
    assert kauffman_bracket(torus_closure(2)) == A({4: -1, -4: -1})
    assert kauffman_bracket(torus_closure(3)) == A({5: -1, -3: -1, -7: 1})
    assert kauffman_bracket(Diagram((), (), 1)) == Laurent.one("A")
    assert kauffman_bracket(Diagram((), (), 3)) == A({2: -1, -2: -1}) ** 2


def test_jones_values():
    assert jones(torus_closure(3)) == T({1: 1, 3: 1, 4: -1})
    V2 = jones(torus_closure(2))
    assert V2 == Laurent({2: -1, 10: -1}, "t")   # -t^1/2 - t^5/2
    assert V2.min_cf() == -1                      # (-1)^(n-1), n = 2
    tref = torus_closure(3)
    assert jones(tref).min_deg() == Fraction(1 - (-1), 2)  # (1-chi)/2
    assert jones(tref).min_cf() == 1


def test_jones_reidemeister_invariance():
    tref = torus_closure(3)
    d5 = braid_closure(parse_braid("2: -1 1 1 1 1"))
    assert jones(d5) == jones(tref)
    unknot = torus_closure(3).switch_crossing(0)
    assert jones(unknot) == Laurent.one("t")
    assert jones(tref.mirror()) == jones(tref).reciprocal()


def test_cap_error_names_cap():
    with pytest.raises(StateSumCapError) as exc:
        kauffman_bracket(torus_closure(6), cap=5)
    assert "cap is 5" in str(exc.value)


def test_adequacy():
    for seed in range(8):
        D = random_positive_diagram(seed, 8)
        assert is_a_adequate(D)
    kinked = braid_closure(parse_braid("3: 1 2 2"))
    assert not is_a_adequate(kinked) or not is_b_adequate(kinked)
    assert is_b_adequate(torus_closure(3))


def test_almost_positive_leading_parallel():
    d5 = braid_closure(parse_braid("2: -1 1 1 1 1"))
    pred = almost_positive_leading(d5)
    assert pred.parallel_exists
    assert pred.predicted_min_deg_V == 1   # (1-chi(D))/2 - 1 = 2 - 1
    assert pred.predicted_min_cf == 1
    V = jones(d5)
    assert V.min_deg() == pred.predicted_min_deg_V
    assert V.min_cf() == pred.predicted_min_cf


def test_almost_positive_leading_printed_reading_fails():
    # the printed statement of the dichotomy would demand
    # min deg V >= (1-chi(D))/2 = 2 when a parallel crossing exists;
    # the closure of s1^-1 s1^4 has min deg V = 1, so the corrected
    # reading (implemented above) is the consistent one
    d5 = braid_closure(parse_braid("2: -1 1 1 1 1"))
    chi = -3
    assert jones(d5).min_deg() < Fraction(1 - chi, 2)


def test_almost_positive_leading_no_parallel_cancels():
    from linkpoly.diagram import random_almost_positive_diagram
    from linkpoly.seifert import canonical_euler
    D = random_almost_positive_diagram(3, 8, force_parallel_crossing=False)
    pred = almost_positive_leading(D)
    assert not pred.parallel_exists and pred.cancelled
    assert pred.predicted_min_deg_V == Fraction(1 - canonical_euler(D), 2)
    V = jones(D)
    assert V.min_deg() == pred.predicted_min_deg_V


def test_almost_positive_leading_rejects_positive():
    with pytest.raises(DiagramError):
        almost_positive_leading(torus_closure(3))
