from fractions import Fraction

import pytest

from coxtw.errors import ExprError, ValidationError
from coxtw.system import Root, build_system, parse_cartan_file, parse_root


def test_type_strings_and_rank_bounds():
    assert build_system("A1").ngens == 1
    assert build_system("E8").rank_finite == 8
    assert build_system("A~2").ngens == 3
    for bad in ("A0", "B1", "C1", "D3", "E5", "E9", "F3", "G3", "H3", "", "2A"):
        with pytest.raises(ExprError):
            build_system(bad)


def test_positive_root_counts():
    for spec, count in (("A2", 3), ("B2", 4), ("C3", 9), ("G2", 6),
                        ("A3", 6), ("D4", 12), ("F4", 24), ("E6", 36)):
        assert len(build_system(spec).positive_roots) == count, spec


def test_symmetrizer_normalization():
    assert build_system("A3").symmetrizer == (1, 1, 1)
    assert build_system("B2").symmetrizer == (2, 1)
    assert build_system("C3").symmetrizer == (1, 1, 2)
    assert build_system("F4").symmetrizer == (2, 2, 1, 1)
    assert build_system("G2").symmetrizer == (3, 1)


def test_highest_roots():
    assert build_system("A~2").highest_root == Root((1, 1))
    assert build_system("B~2").highest_root == Root((1, 2))
    assert build_system("G~2").highest_root == Root((2, 3))


def test_connection_index():
    for spec, idx in (("A2", 3), ("A3", 4), ("B2", 2), ("D4", 4),
                      ("E6", 3), ("F4", 1), ("G2", 1)):
        assert build_system(spec).connection_index == idx, spec


def test_simple_names_affine_label():
    assert build_system("A~1").simple_names == ("a", "d-a")
    assert build_system("A~2").simple_names == ("a", "b", "d-a-b")
    assert build_system("G~2").simple_names == ("a", "b", "d-2a-3b")


def test_affine_simple_root():
    a1 = build_system("A~1")
    assert a1.simple_root(1) == Root((-1,), 1)
    assert a1.simple_root(0) == Root((1,))


def test_roots_up_to_counts():
    a1 = build_system("A~1")
    assert len(a1.roots_up_to(0)) == 2
    assert len(a1.roots_up_to(1)) == 6
    assert len(a1.positive_roots_up_to(0)) == 1
    assert len(a1.positive_roots_up_to(1)) == 3
    # each level past 0 adds one string element per finite root
    assert len(a1.positive_roots_up_to(3)) == 7


def test_fundamental_coweights_a2():
    a2 = build_system("A2")
    w = a2.fundamental_coweights
    assert w[0] == (Fraction(2, 3), Fraction(1, 3))
    assert w[1] == (Fraction(1, 3), Fraction(2, 3))


def test_dominant_coweight():
    a2 = build_system("A~2")
    assert a2.dominant_coweight_for(()) == (3, 3)
    assert a2.dominant_coweight_for((1,)) == (2, 1)


def test_coroot_lattice_b2():
    b2 = build_system("B2")
    assert b2.in_coroot_lattice((Fraction(1, 2), 1))
    assert b2.in_coroot_lattice((1, 1))
    assert not b2.in_coroot_lattice((Fraction(1, 2), Fraction(1, 2)))


def test_inner_products():
    a2 = build_system("A2")
    a, b = a2.simple_root(0), a2.simple_root(1)
    assert a2.inner(a, a) == 2
    assert a2.inner(a, b) == -1
    g2 = build_system("G2")
    assert g2.inner(g2.simple_root(0), g2.simple_root(0)) == 6
    assert g2.inner(g2.simple_root(1), g2.simple_root(1)) == 2


def test_is_root():
    a2 = build_system("A2")
    assert a2.is_root(Root((1, 1)))
    assert not a2.is_root(Root((2, 1)))
    assert not a2.is_root(Root((0, 0)))
    aff = build_system("A~1")
    assert aff.is_root(Root((-1,), 1))
    assert not aff.is_root(Root((0,), 1))   # delta itself is not a root


def test_bad_cartan_rejected():
    with pytest.raises(ValidationError):
        build_system(cartan=[[2, -1], [0, 2]])     # asymmetric zero pattern
    with pytest.raises(ValidationError):
        build_system(cartan=[[2, 1], [1, 2]])      # positive off-diagonal
    with pytest.raises(ValidationError):
        build_system(cartan=[[1, 0], [0, 2]])      # diagonal not 2
    with pytest.raises(ValidationError):
        build_system(cartan=[[2, -2], [-2, 2]])    # not positive definite
    with pytest.raises(ValidationError):
        build_system(cartan=[[2, 0], [0, 2]], affine=True)  # reducible


def test_explicit_symmetrizer_checked():
    with pytest.raises(ValidationError):
        build_system(cartan=[[2, -1], [-2, 2]], symmetrizer=[1, 1])
    ok = build_system(cartan=[[2, -1], [-2, 2]], symmetrizer=[2, 1])
    assert ok.symmetrizer == (2, 1)


def test_root_literals_roundtrip():
    r = Root((-1, 2), 3)
    assert r.literal() == "-1.2:3"
    assert parse_root(r.literal(), 2) == r
    assert parse_root("1.0", 2) == Root((1, 0))
    with pytest.raises(ExprError):
        parse_root("1.x", 2)
    with pytest.raises(ExprError):
        parse_root("1.0.0", 2)


def test_root_ordering_and_signs():
    assert Root((1, 0)).is_positive
    assert not Root((0, 0)).is_positive
    assert Root((-1, 0), 1).is_positive     # positive by delta level
    assert Root((1, 0), -1).is_negative
    assert -Root((1, 2), 1) == Root((-1, -2), -1)
    assert Root((1, 0), 1).fin() == Root((1, 0))


def test_cartan_file():
    sys2 = parse_cartan_file("# a B2 system\nrank 2\n2 -1\n-2 2\n")
    assert sys2.kind == "finite" and len(sys2.positive_roots) == 4
    aff = parse_cartan_file("rank 2 affine\n2 -1\n-1 2\nsymmetrizer 1 1\n")
    assert aff.kind == "affine" and aff.ngens == 3
    for bad in ("", "rank x\n2", "rank 2\n2 -1\n", "rank 2\n2 -1\n-2 2\njunk\n",
                "rank 2 extra flag\n2 -1\n-2 2\n", "rank 2\n2 -1 0\n-2 2\n"):
        with pytest.raises(ValidationError):
            parse_cartan_file(bad)


def test_metadata_shape():
    meta = build_system("B~2").metadata()
    assert meta["kind"] == "affine"
    assert meta["type"] == "B~2"
    assert meta["cartan"] == [[2, -1], [-2, 2]]
    assert meta["simple_names"] == ["a", "b", "d-a-2b"]


def test_system_equality_and_key():
    assert build_system("A2") == build_system("A2")
    assert build_system("A2") != build_system("A~2")
    assert hash(build_system("B2")) == hash(build_system("B2"))
