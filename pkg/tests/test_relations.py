import pytest

from sympbw.pluecker import poly_term
from sympbw.relations import (
    Relation,
    degenerate_component,
    generate_ideal,
    pluecker_relation,
    relation_text,
    s_deformed_relation,
    specialize_s,
    symplectic_relation,
    term_pbw_degree,
)

# The full generating set for n = 2, frozen as rendered text.
CLASSICAL_N2 = {
    "R^1_{(1,2),(2̅)}": "X_{1}X_{2,2̅} - X_{2}X_{1,2̅} + X_{2̅}X_{1,2}",
    "R^1_{(1,2),(1̅)}": "X_{1}X_{2,1̅} - X_{2}X_{1,1̅} + X_{1̅}X_{1,2}",
    "R^1_{(1,2̅),(1̅)}": "X_{1}X_{2̅,1̅} - X_{2̅}X_{1,1̅} + X_{1̅}X_{1,2̅}",
    "R^1_{(2,2̅),(1̅)}": "X_{2}X_{2̅,1̅} - X_{2̅}X_{2,1̅} + X_{1̅}X_{2,2̅}",
    "R^1_{(1,2),(2̅,1̅)}": "X_{1,2}X_{2̅,1̅} - X_{1,2̅}X_{2,1̅} + X_{1,1̅}X_{2,2̅}",
    "S_{(1̅,1)}": "X_{1,1̅} + X_{2,2̅}",
}

DEGENERATE_N2 = {
    "R^1_{(1,2),(2̅)} (degenerate part)": "X^a_{1}X^a_{2,2̅} + X^a_{2̅}X^a_{1,2}",
    "R^1_{(1,2),(1̅)} (degenerate part)": "X^a_{1}X^a_{2,1̅} + X^a_{1̅}X^a_{1,2}",
    "R^1_{(1,2̅),(1̅)} (degenerate part)": "X^a_{1}X^a_{2̅,1̅} - X^a_{2̅}X^a_{1,1̅} + X^a_{1̅}X^a_{1,2̅}",
    "R^1_{(2,2̅),(1̅)} (degenerate part)": "X^a_{2̅}X^a_{2,1̅} - X^a_{1̅}X^a_{2,2̅}",
    "R^1_{(1,2),(2̅,1̅)} (degenerate part)": "X^a_{1,2}X^a_{2̅,1̅} - X^a_{1,2̅}X^a_{2,1̅} + X^a_{1,1̅}X^a_{2,2̅}",
    "S_{(1̅,1)} (degenerate part)": "X^a_{1,1̅} + X^a_{2,2̅}",
}

S_FAMILY_N2 = {
    "R^1_{(1,2),(2̅)} (s-family)": "X_{1}X_{2,2̅} - s^1*X_{2}X_{1,2̅} + X_{2̅}X_{1,2}",
    "R^1_{(1,2),(1̅)} (s-family)": "X_{1}X_{2,1̅} - s^1*X_{2}X_{1,1̅} + X_{1̅}X_{1,2}",
    "R^1_{(1,2̅),(1̅)} (s-family)": "X_{1}X_{2̅,1̅} - X_{2̅}X_{1,1̅} + X_{1̅}X_{1,2̅}",
    "R^1_{(2,2̅),(1̅)} (s-family)": "s^1*X_{2}X_{2̅,1̅} - X_{2̅}X_{2,1̅} + X_{1̅}X_{2,2̅}",
    "R^1_{(1,2),(2̅,1̅)} (s-family)": "X_{1,2}X_{2̅,1̅} - X_{1,2̅}X_{2,1̅} + X_{1,1̅}X_{2,2̅}",
    "S_{(1̅,1)} (s-family)": "X_{1,1̅} + X_{2,2̅}",
}


def test_pluecker_relation_n2():
    p = pluecker_relation(2, (1, 2), (3,), 1)
    assert p == {
        (None, ((3,), (1, 2))): 1,
        (None, ((1,), (2, 3))): 1,
        (None, ((2,), (1, 3))): -1,
    }
    # the two-column relation behind the degree-2 straightening step
    q = pluecker_relation(2, (1, 2), (3, 4), 1)
    assert q == {
        (None, ((1, 2), (3, 4))): 1,
        (None, ((1, 3), (2, 4))): -1,
        (None, ((1, 4), (2, 3))): 1,
    }
    # swapping all of J into L with t = |J| = |L| cancels identically
    assert pluecker_relation(2, (1, 2), (3, 4), 2) == {}


def test_pluecker_relation_errors():
    with pytest.raises(ValueError):
        pluecker_relation(2, (2, 1), (3,), 1)  # not increasing
    with pytest.raises(ValueError):
        pluecker_relation(2, (1,), (2, 3), 1)  # |J| > |L|
    with pytest.raises(ValueError):
        pluecker_relation(2, (1, 2), (3,), 2)  # t > |J|
    with pytest.raises(ValueError):
        pluecker_relation(2, (1, 5), (3,), 1)  # entry out of range


def test_symplectic_relation_n2():
    p = symplectic_relation(2, ({1}, {1}))
    assert p == {(None, ((1, 4),)): -1, (None, ((2, 3),)): -1}
    with pytest.raises(ValueError):
        symplectic_relation(2, ({1}, {2}))  # reverse-admissible


def test_symplectic_relation_n4_diagonal():
    # the trailing-minor expansion with a two-element new part
    p = symplectic_relation(4, ({1, 2}, {1, 2}))
    assert p == {
        (None, ((1, 2, 7, 8),)): 1,
        (None, ((1, 3, 6, 8),)): 1,
        (None, ((1, 4, 5, 8),)): 1,
    }


def test_term_pbw_degree():
    assert term_pbw_degree((None, ((1, 2), (3, 4)))) == 2
    assert term_pbw_degree((None, ((1, 4),))) == 1
    assert term_pbw_degree((None, ())) == 0


def test_degenerate_component():
    p = pluecker_relation(2, (1, 2), (3,), 1)
    assert degenerate_component(p) == {
        (None, ((1,), (2, 3))): 1,
        (None, ((3,), (1, 2))): 1,
    }
    with pytest.raises(ValueError):
        degenerate_component({})


def test_s_deformation_and_specialization():
    p = pluecker_relation(2, (1, 2), (3,), 1)
    s = s_deformed_relation(p)
    assert s == {
        (0, ((1,), (2, 3))): 1,
        (1, ((2,), (1, 3))): -1,
        (0, ((3,), (1, 2))): 1,
    }
    assert specialize_s(s, 1) == p
    assert specialize_s(s, 0) == degenerate_component(p)
    with pytest.raises(ValueError):
        s_deformed_relation(s)  # already graded
    with pytest.raises(ValueError):
        s_deformed_relation({})
    with pytest.raises(ValueError):
        specialize_s(p, 1)  # not graded


def test_relation_ring():
    assert Relation("pluecker", "r", ()).ring == "classical"
    assert Relation("symplectic", "r", ()).ring == "classical"
    assert Relation("pluecker_degenerate", "r", ()).ring == "degenerate"
    assert Relation("symplectic_degenerate", "r", ()).ring == "degenerate"
    assert Relation("s_family", "r", ()).ring == "s"


def test_generate_ideal_n2_classical():
    rels = generate_ideal(2, "classical")
    assert {r.label: relation_text(2, r) for r in rels} == CLASSICAL_N2


def test_generate_ideal_n2_degenerate():
    rels = generate_ideal(2, "degenerate")
    assert {r.label: relation_text(2, r) for r in rels} == DEGENERATE_N2
    assert all(r.ring == "degenerate" for r in rels)


def test_generate_ideal_n2_s_family():
    rels = generate_ideal(2, "s-family")
    assert {r.label: relation_text(2, r) for r in rels} == S_FAMILY_N2
    assert all(r.ring == "s" for r in rels)


def test_generate_ideal_sizes_n3():
    assert len(generate_ideal(3, "classical")) == 245
    assert len(generate_ideal(3, "degenerate")) == 230
    assert len(generate_ideal(3, "s-family")) == 245


def test_generate_ideal_bad_kind():
    with pytest.raises(ValueError):
        generate_ideal(2, "quantum")


def test_relation_text_forms():
    assert relation_text(2, {}) == "0"
    assert relation_text(2, poly_term(2, [(1,)])) == "2*X_{1}"
    assert relation_text(2, poly_term(-1, [(3,)])) == "-X_{2̅}"
    assert relation_text(2, poly_term(-1, [(3,)]), ascii_only=True) == "-X_{2'}"
    two_terms = {(None, ((1,),)): 1, (None, ((2,),)): -3}
    assert relation_text(2, two_terms) == "X_{1} - 3*X_{2}"
