import pytest
from fractions import Fraction
from hypothesis import given, settings, strategies as st

from linkpoly.laurent import (ImaginaryResidueError, Laurent, Laurent2,
                              VariableMismatch, ZeroPolynomialError,
                              homfly_to_alexander, homfly_to_jones)


def L(terms, var="t"):
    return Laurent({4 * k: v for k, v in terms.items()}, var)


def test_cancellation_and_identity():
    t = Laurent.mono(1, 1)
    assert t + (-t) == Laurent.zero()
    assert not (t - t)
    half = Laurent.mono(1, Fraction(1, 2))
    assert (Laurent.one() + half) + half == Laurent.one() + 2 * half
    p = L({0: 1, 2: 1, 3: -1})
    assert p * Laurent.one() == p
    assert Laurent.one() + Laurent.zero() == Laurent.one()


def test_half_powers_multiply():
    half = Laurent.mono(1, Fraction(1, 2))
    assert half * half == Laurent.mono(1, 1)


def test_square_expansion_frozen():
    # (1 + t^2 - t^3)^2, expanded by hand
    p = L({0: 1, 2: 1, 3: -1})
    assert p * p == L({0: 1, 2: 2, 3: -2, 4: 1, 5: -2, 6: 1})
    assert p ** 2 == p * p


def test_degree_accessors():
    p = L({1: 1, 3: 1, 4: -1})     # trefoil Jones
    assert p.min_deg() == 1
    assert p.max_deg() == 4
    assert p.span() == 3
    assert p.min_cf() == 1
    assert p.max_cf() == -1
    one = Laurent.one()
    assert one.min_deg() == one.max_deg() == 0
    with pytest.raises(ZeroPolynomialError):
        Laurent.zero().min_deg()


def test_list_notation():
    h = L({-1: -3, 0: 1, 1: 2})
    assert h.coeff_list_str() == "(-3 [1] 2)"
    assert h.coeff_at(-1) == -3
    assert h.coeff_at(Fraction(-1)) == -3
    # min degree above zero still shows the absolute term
    assert L({1: 1, 2: 2}).coeff_list_str() == "([0] 1 2)"


def test_variable_mismatch():
    with pytest.raises(VariableMismatch):
        Laurent.mono(1, 1, "t") + Laurent.mono(1, 1, "A")
    with pytest.raises(VariableMismatch):
        Laurent2.mono(1, 1, 0, ("l", "m")) * Laurent2.mono(1, 0, 0, ("x", "y"))


def test_json_round_trip():
    p = L({-2: 7, 0: -1, 5: 123456789123456789})
    assert Laurent.from_json(p.to_json()) == p
    q = Laurent2({(4, -4): -1, (0, 8): 3})
    assert Laurent2.from_json(q.to_json()) == q


def test_div_exact():
    u = Laurent({-2: 1, 2: -1})
    p = u * u * L({0: 2, 1: 5})
    assert p.div_exact(u * u) == L({0: 2, 1: 5})
    with pytest.raises(ValueError):
        (u + Laurent.one()).div_exact(u * u)


small_poly = st.dictionaries(st.integers(-6, 6), st.integers(-9, 9),
                             max_size=5).map(lambda d: Laurent(d))


@settings(max_examples=80, deadline=None)
@given(small_poly, small_poly, small_poly)
def test_ring_axioms(a, b, c):
    assert a + b == b + a
    assert a * b == b * a
    assert (a + b) + c == a + (b + c)
    assert (a * b) * c == a * (b * c)
    assert a * (b + c) == a * b + a * c


def test_homfly_substitutions_on_known_polynomials():
    # P(unknot) = 1
    assert homfly_to_jones(Laurent2.one()) == Laurent.one()
    assert homfly_to_alexander(Laurent2.one()) == Laurent.one()
    # P(positive trefoil) = -2 l^2 - l^4 + l^2 m^2
    P = Laurent2({(8, 0): -2, (16, 0): -1, (8, 8): 1})
    assert homfly_to_jones(P) == L({1: 1, 3: 1, 4: -1})
    assert homfly_to_alexander(P) == L({-1: 1, 0: -1, 1: 1})
    # delta = -(l + 1/l)/m: the 2-component unlink
    delta = Laurent2({(4, -4): -1, (-4, -4): -1})
    V = homfly_to_jones(delta)
    assert V == Laurent({-2: -1, 2: -1}, "t")
    assert homfly_to_alexander(delta) == Laurent.zero()


def test_imaginary_residue_rejected():
    bad = Laurent2({(4, 0): 1})  # bare l is not a link polynomial
    with pytest.raises(ImaginaryResidueError):
        homfly_to_jones(bad)


def test_laurent2_degrees():
    P = Laurent2({(8, 0): -2, (16, 0): -1, (8, 8): 1})
    assert P.min_deg("l") == 2 and P.max_deg("l") == 4
    assert P.min_deg("m") == 0 and P.max_deg("m") == 2
    assert P.coeff_at(2, 2) == 1
