import itertools

import pytest
from hypothesis import given
from hypothesis import strategies as st

from monideal.ideal import (
    DisjointnessError,
    MonomialSyntaxError,
    RingContext,
    RingMismatchError,
    UnitIdealError,
    colon_by_monomial,
    contains,
    divides,
    embed_tensor,
    extend_ring,
    ideal_from_strings,
    ideal_product,
    ideal_sum,
    is_squarefree,
    is_squarefree_lexsegment,
    is_strongly_stable,
    make_ideal,
    minimalize,
    mono_mul,
    parse_monomial,
    polarize,
    zero_ideal,
)

from conftest import ideals

R3 = RingContext(("x", "y", "z"))


def test_minimal_generators_drop_multiples():
    I = ideal_from_strings(R3, ["x^2", "x^2*y", "x*y", "x*y"])
    assert str(I) == "(x^2, x*y)"


def test_unit_and_zero():
    assert make_ideal(R3, [(0, 0, 0), (1, 0, 0)]).gens == ((0, 0, 0),)
    assert zero_ideal(R3).is_zero()
    with pytest.raises(UnitIdealError):
        make_ideal(R3, [(0, 0, 0)]).require_proper()


def test_contains():
    I = ideal_from_strings(R3, ["x*y", "z^2"])
    assert contains(I, (1, 1, 0)) and contains(I, (2, 3, 1))
    assert not contains(I, (1, 0, 1))


def test_colon():
    I = ideal_from_strings(R3, ["x^2*y", "z"])
    assert str(colon_by_monomial(I, (1, 0, 0))) == "(z, x*y)"
    assert colon_by_monomial(I, (0, 0, 1)).is_unit()


def test_sum_product_ring_mismatch():
    other = RingContext(("a", "b"))
    with pytest.raises(RingMismatchError):
        ideal_sum(ideal_from_strings(R3, ["x"]), ideal_from_strings(other, ["a"]))


def test_embed_tensor():
    I1 = ideal_from_strings(RingContext(("x",)), ["x^2"])
    I2 = ideal_from_strings(RingContext(("u", "v")), ["u*v"])
    ring, a, b = embed_tensor(I1, I2)
    assert ring.var_names == ("x", "u", "v")
    assert str(ideal_sum(a, b)) == "(x^2, u*v)"
    with pytest.raises(DisjointnessError):
        embed_tensor(I1, I1)


def test_extend_ring_by_name():
    I = ideal_from_strings(RingContext(("z", "x")), ["x*z^2"])
    assert extend_ring(I, R3).gens == ((1, 0, 2),)


def test_polarize():
    I = ideal_from_strings(R3, ["x^2", "x*y"])
    P = polarize(I)
    assert P.ring.var_names == ("x#1", "x#2", "y#1")
    assert str(P) == "(x#1*x#2, x#1*y#1)"
    assert is_squarefree(P)


def test_parse_and_format():
    assert parse_monomial(R3, " x^2 * z ") == (2, 0, 1)
    assert parse_monomial(R3, "1") == (0, 0, 0)
    assert R3.format_monomial((0, 3, 1)) == "y^3*z"
    with pytest.raises(MonomialSyntaxError) as err:
        parse_monomial(R3, "x*w")
    assert err.value.column == 3
    with pytest.raises(MonomialSyntaxError):
        parse_monomial(R3, "x^0")
    with pytest.raises(MonomialSyntaxError):
        parse_monomial(R3, "x**y")


def test_bad_variable_names():
    for names in [(), ("x", "x"), ("a b",), ("12",)]:
        with pytest.raises(ValueError):
            RingContext(names)


def test_strongly_stable_and_lexsegment():
    assert is_strongly_stable(ideal_from_strings(R3, ["x^2", "x*y"]))
    assert not is_strongly_stable(ideal_from_strings(R3, ["y^2"]))
    assert is_squarefree_lexsegment(ideal_from_strings(R3, ["x*y", "x*z"]))
    assert not is_squarefree_lexsegment(ideal_from_strings(R3, ["x*y", "y*z"]))
    assert not is_squarefree_lexsegment(ideal_from_strings(R3, ["x^2"]))


@given(ideals(proper=False))
def test_minimalize_idempotent(I):
    assert minimalize(I.gens) == I.gens
    assert make_ideal(I.ring, I.gens) == I


@given(ideals(proper=False))
def test_generators_are_antichain(I):
    for a, b in itertools.permutations(I.gens, 2):
        assert not divides(a, b)


@given(ideals(), st.data())
def test_colon_composes(I, data):
    n = I.num_vars
    mono = st.tuples(*[st.integers(0, 2) for _ in range(n)])
    u, v = data.draw(mono), data.draw(mono)
    assert colon_by_monomial(colon_by_monomial(I, u), v) == colon_by_monomial(I, mono_mul(u, v))


@given(ideals(max_vars=3, max_exp=2), ideals(max_vars=3, max_exp=2))
def test_sum_and_product_membership(I, J):
    if I.ring != J.ring:
        return
    S, P = ideal_sum(I, J), ideal_product(I, J)
    for m in itertools.product(range(4), repeat=I.num_vars):
        assert contains(S, m) == (contains(I, m) or contains(J, m))
        if contains(P, m):
            assert contains(I, m) and contains(J, m)


@given(ideals(max_vars=3, max_exp=2), st.data())
def test_colon_membership_brute_force(I, data):
    u = data.draw(st.tuples(*[st.integers(0, 2) for _ in range(I.num_vars)]))
    C = colon_by_monomial(I, u)
    for m in itertools.product(range(4), repeat=I.num_vars):
        assert contains(C, m) == contains(I, mono_mul(m, u))


@given(ideals(proper=False))
def test_format_parse_round_trip(I):
    parsed = ideal_from_strings(I.ring, [I.ring.format_monomial(g) for g in I.gens])
    assert parsed == I
