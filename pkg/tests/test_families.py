import pytest

from monideal.families import (
    FamilyError,
    Graph,
    edge_ideal,
    family_ideal,
    ferrers_graph,
    g2_graph,
    herzog_example,
    parse_family_spec,
    sqfree_lex_ideal,
    staircase_ideal,
    star_triangle,
    theorem_main_ideal,
)
from monideal.hilbert import h_polynomial
from monideal.ideal import is_squarefree, is_squarefree_lexsegment, is_strongly_stable
from monideal.verify import g2_h_polynomial, remark_identity_checks


def test_sqfree_lex():
    assert str(sqfree_lex_ideal(1, 1)) == "(u1*u2)"
    assert str(sqfree_lex_ideal(2, 3)) == "(u1*u2*u3, u1*u2*u4)"
    assert len(sqfree_lex_ideal(3, 6).gens) == 4
    with pytest.raises(FamilyError):
        sqfree_lex_ideal(3, 2)


def test_family_examples():
    K2 = family_ideal("K", 2)
    assert K2.ring.var_names == ("x", "y1") and str(K2) == "(x*y1)"
    I2 = family_ideal("I", 2)
    assert I2.num_vars == 6 and len(I2.gens) == 8
    assert str(family_ideal("L", 3)) == "(y1*z1, y1*z2, y1*z3, y2*z2, y2*z3)"
    assert family_ideal("J", 4).ring.var_names == ("x", "y1", "y2", "y3", "z1", "z2", "z3", "z4", "z5")
    with pytest.raises(FamilyError):
        family_ideal("I", 1)
    with pytest.raises(FamilyError):
        family_ideal("Q", 3)


def test_theorem_ideal_shapes():
    assert theorem_main_ideal(2, 2) == sqfree_lex_ideal(2, 2)
    I = theorem_main_ideal(2, 1)
    assert I.ring.var_names == ("x", "y1", "z1", "z2", "u1")
    assert len(I.gens) == 5
    assert theorem_main_ideal(3, 1).num_vars == 7
    assert h_polynomial(theorem_main_ideal(3, 1))[0] == [1, 3]


def test_herzog():
    I = herzog_example()
    assert len(I.gens) == 8 and is_strongly_stable(I) and not is_squarefree(I)


def test_graphs():
    assert len(star_triangle(2).edges) == 6 and star_triangle(2).degree(5) == 4
    assert len(g2_graph(1).edges) == 5 and g2_graph(1).num_vertices == 5
    assert len(edge_ideal(g2_graph(1)).gens) == 5
    assert edge_ideal(Graph(3, frozenset())).is_zero()
    with pytest.raises(FamilyError):
        Graph.from_edges(3, [(1, 2), (2, 1)])
    with pytest.raises(FamilyError):
        Graph.from_edges(3, [(1, 1)])


@pytest.mark.parametrize("n", range(2, 7))
def test_ferrers_edge_ideal_is_L(n):
    assert edge_ideal(ferrers_graph(n)) == family_ideal("L", n)


@pytest.mark.parametrize("n", range(2, 7))
def test_colon_and_sum_identities(n):
    checks = remark_identity_checks(n)
    assert len(checks) == (6 if n >= 3 else 4)
    assert all(c.passed for c in checks), [c for c in checks if not c.passed]


@pytest.mark.parametrize("m", range(1, 8))
def test_g2_h_polynomial(m):
    h, deg = h_polynomial(edge_ideal(g2_graph(m)))
    assert h == g2_h_polynomial(m) and deg == m + 1
    if m % 2:
        assert h == h[::-1]


def test_g2_not_unimodal_at_3_and_7():
    from monideal.betti import is_unimodal

    assert not is_unimodal(h_polynomial(edge_ideal(g2_graph(3)))[0])
    assert not is_unimodal(h_polynomial(edge_ideal(g2_graph(7)))[0])


def test_all_families_squarefree():
    for n in range(2, 6):
        for w in "IJKL":
            assert is_squarefree(family_ideal(w, n))
    assert is_squarefree(staircase_ideal(4))
    for s in range(1, 6):
        for r in range(1, s + 1):
            assert is_squarefree_lexsegment(sqfree_lex_ideal(r, s))


def test_parse_family_spec():
    assert parse_family_spec("herzog") == herzog_example()
    assert parse_family_spec("Irs:2,3") == sqfree_lex_ideal(2, 3)
    assert parse_family_spec("ferrers:4") == family_ideal("L", 4)
    for bad in ["nope", "Irs:2", "I:x", "herzog:1"]:
        with pytest.raises(FamilyError):
            parse_family_spec(bad)
