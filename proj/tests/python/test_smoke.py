import pytest

import edgereg

C4 = edgereg.from_edges(4, [(0, 1), (1, 2), (2, 3), (0, 3)])
C5 = "Dhc"


def test_graph6_helpers():
    assert C4 == "Cl"
    assert edgereg.edges("A_") == [(0, 1)]
    assert edgereg.canonical_graph6(edgereg.from_edges(3, [(1, 2), (0, 2)])) == edgereg.canonical_graph6(
        edgereg.from_edges(3, [(0, 1), (1, 2)])
    )
    assert edgereg.induced_matching_number(C5) == 1


def test_tables():
    assert edgereg.betti_table("A_") == {(0, 2): 1}
    assert edgereg.betti_table(C5) == {(0, 2): 5, (1, 3): 5, (2, 5): 1}
    assert edgereg.regularity(C4) == 2
    assert edgereg.regularity(C5, power=2) == 4
    assert edgereg.projective_dimension(C5) == 2
    assert edgereg.ideal_betti_table("x0, x1", 2) == {(0, 1): 2, (1, 2): 1}
    assert edgereg.betti_table(C5, field="GF(2)") == edgereg.betti_table(C5)


def test_suspension():
    star = edgereg.s_suspension(edgereg.from_edges(3, [(0, 1), (1, 2)]), [0, 2])
    assert sorted(edgereg.edges(star)) == [(0, 1), (1, 2), (1, 3)]


def test_reports():
    assert edgereg.check_froberg(C5)["verdict"] == "pass"
    assert edgereg.check_main2(C4, [0, 2], 3)["verdict"] == "pass"
    r = edgereg.check_betti_splitting("x0^2, x0*x1, x1^2", "x0^2, x1^2", "x0*x1", 2)
    assert r["verdict"] == "fail"
    assert (r["witness"]["i"], r["witness"]["j"]) == (1, 4)


def test_errors():
    with pytest.raises(ValueError):
        edgereg.regularity("C")
    with pytest.raises(ValueError):
        edgereg.regularity(C4, power=0)
