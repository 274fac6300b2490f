"""R_n: normal form, Weyl action, divided differences, Schubert calculus."""

from fractions import Fraction

import pytest

from flagops import afperm as ap
from flagops import nilcox as nc
from flagops import schubert as sr
from flagops import strongorder as so
from flagops import symfunc as sf
from flagops.errors import ModulusMismatchError

A = nc.basis_element
HALF = Fraction(1, 2)


def test_normal_form_examples():
    x = [sr.x_gen(3, i) for i in range(3)]
    assert (x[0] + x[1] + x[2]).is_zero()
    assert (sr.x_gen(2, 1) * sr.x_gen(2, 1)).is_zero()
    p1 = sr.p_gen(3, 1)
    assert p1.terms == {((1,), (0, 0, 0)): Fraction(1)}
    # x_1^2 = -x_0^2 - x_0 x_1 (from e_1, e_2)
    sq = sr.x_gen(3, 1) * sr.x_gen(3, 1)
    assert sq.terms == {
        ((), (2, 0, 0)): Fraction(-1),
        ((), (1, 1, 0)): Fraction(-1),
    }


def test_normal_form_idempotent_and_staircase():
    rng_terms = {
        ((2, 1), (0, 2, 1)): Fraction(3),
        ((), (3, 0, 0)): Fraction(1, 2),
    }
    f = sr.RnElement(3, rng_terms)
    for (_, xpart) in f.terms:
        assert all(xpart[i] <= 3 - 1 - i for i in range(3))
    again = sr.RnElement(3, dict(f.terms))
    assert again == f


def test_multiply_examples():
    assert (sr.p_gen(2, 1) * sr.p_gen(2, 1)).terms == {((1, 1), (0, 0)): Fraction(1)}
    assert (sr.p_gen(3, 2) * sr.p_gen(3, 2)).terms == {((2, 2), (0, 0, 0)): Fraction(1)}
    with pytest.raises(ModulusMismatchError):
        sr.p_gen(2, 1) * sr.p_gen(3, 1)


def test_weyl_action_examples():
    # s_1(x_1) = x_2 = -x_0 - x_1 in normal form
    assert sr.weyl_action(1, sr.x_gen(3, 1)) == sr.x_gen(3, 2)
    got = sr.weyl_action(0, sr.p_gen(3, 2))
    expect = sr.p_gen(3, 2) + sr.x_gen(3, 1) * sr.x_gen(3, 1) - sr.x_gen(3, 0) * sr.x_gen(3, 0)
    assert got == expect
    assert sr.weyl_action(2, sr.p_gen(3, 1)) == sr.p_gen(3, 1)


def test_weyl_action_is_involutive_automorphism():
    f = sr.affine_schubert(ap.from_reduced_word(3, [2, 1]))
    g = sr.affine_schubert(ap.from_reduced_word(3, [1, 0]))
    for i in range(3):
        assert sr.weyl_action(i, sr.weyl_action(i, f)) == f
        assert sr.weyl_action(i, f * g) == sr.weyl_action(i, f) * sr.weyl_action(i, g)


def test_divided_difference_examples():
    assert sr.divided_difference(0, sr.p_gen(3, 1)) == sr.unit(3)
    assert sr.divided_difference(1, sr.p_gen(3, 1) + sr.x_gen(3, 1)) == sr.unit(3)
    f = (sr.p_gen(3, 1) * sr.p_gen(3, 1) + sr.p_gen(3, 2)).scale(HALF)
    assert sr.divided_difference(0, f) == sr.p_gen(3, 1) + sr.x_gen(3, 1)


def test_divided_difference_via_definition():
    """(x_i - x_{i+1}) * dd_i(f) = f - s_i(f) for assorted f."""
    samples = [
        sr.p_gen(3, 2),
        sr.x_gen(3, 0) * sr.x_gen(3, 0),
        sr.affine_schubert(ap.from_reduced_word(3, [2, 1])),
        sr.affine_schubert(ap.from_reduced_word(3, [1, 0])) * sr.x_gen(3, 1),
    ]
    for f in samples:
        for i in range(3):
            lhs = (sr.x_gen(3, i) - sr.x_gen(3, (i + 1) % 3)) * sr.divided_difference(i, f)
            assert lhs == f - sr.weyl_action(i, f)


def test_schubert_table_n3():
    p1, p2 = sr.p_gen(3, 1), sr.p_gen(3, 2)
    x1, x2 = sr.x_gen(3, 1), sr.x_gen(3, 2)
    assert sr.affine_schubert(ap.identity(3)) == sr.unit(3)
    assert sr.affine_schubert(ap.simple(3, 0)) == p1
    assert sr.affine_schubert(ap.simple(3, 1)) == p1 + x1
    assert sr.affine_schubert(ap.simple(3, 2)) == p1 + x1 + x2
    assert sr.affine_schubert(ap.from_reduced_word(3, [1, 0])) == (p1 * p1 + p2).scale(HALF)
    assert sr.affine_schubert(ap.from_reduced_word(3, [2, 1])) == (
        (p1 + x1) * (p1 + x1) + p2 + x1 * x1
    ).scale(HALF)
    cubic = sr.affine_schubert(ap.from_reduced_word(3, [2, 1, 0]))
    assert cubic.terms == {
        ((2, 1), (0, 0, 0)): Fraction(1, 2),
        ((1, 1, 1), (0, 0, 0)): Fraction(1, 6),
    }


def test_schubert_n2_towers():
    p1, x1 = sr.p_gen(2, 1), sr.x_gen(2, 1)
    w21 = ap.from_reduced_word(2, [0, 1])
    assert sr.affine_schubert(w21) == (p1 * p1).scale(HALF) + p1 * x1
    w30 = ap.from_reduced_word(2, [0, 1, 0])
    assert sr.affine_schubert(w30) == (p1 * p1 * p1).scale(Fraction(1, 6))


def test_defining_recursion():
    for l in range(5):
        for w in ap.elements_of_length(3, l):
            Sw = sr.affine_schubert(w)
            for i in range(3):
                moved = w.times_s(i)
                got = sr.divided_difference(i, Sw)
                if moved.length == w.length - 1:
                    assert got == sr.affine_schubert(moved)
                else:
                    assert got.is_zero()


def test_schubert_basis_and_dimensions():
    for n in (2, 3):
        for d in range(6):
            basis = sr.schubert_basis(n, d)
            assert len(basis.elements) == sr.rn_dimension(n, d)
            assert len(basis.elements) == len(ap.elements_of_length(n, d))
    b = sr.schubert_basis(2, 2)
    assert [w.reduced_word() for w in b.elements] == [(1, 0), (0, 1)]


def test_structure_constants_examples():
    s0 = ap.simple(2, 0)
    table = sr.structure_constants(s0, s0)
    assert table == {ap.from_reduced_word(2, [1, 0]): Fraction(2)}
    # unit rule
    for w in ap.elements_of_length(3, 3):
        assert sr.structure_constants(ap.identity(3), w) == {w: Fraction(1)}


def test_structure_constants_symmetry_and_positivity():
    for lu in range(3):
        for u in ap.elements_of_length(3, lu):
            for lv in range(3):
                for v in ap.elements_of_length(3, lv):
                    t1 = sr.structure_constants(u, v)
                    t2 = sr.structure_constants(v, u)
                    assert t1 == t2
                    for c in t1.values():
                        assert c.denominator == 1 and c >= 0


def test_cap_examples():
    s0 = ap.simple(3, 0)
    x = A(s0)
    assert sr.cap_apply(ap.identity(3), x) == x
    assert sr.cap_apply(s0, x) == nc.unit(3)
    got = sr.cap_apply(ap.rho_element(3, 0, 2), A(ap.from_reduced_word(3, [1, 0])))
    assert got == nc.unit(3)


def test_cap_equals_bss_small():
    for m in (1, 2):
        for i in range(m):
            rho = ap.rho_element(3, i, m)
            J = (m - i,) + (1,) * i
            for l in range(5):
                for w in ap.elements_of_length(3, l):
                    assert sr.cap_apply(rho, A(w)) == so.bss_apply(A(w), J, 0)


def test_xi_class():
    signed, rep, sym = sr.xi_class(3, 1)
    assert signed == [(1, ap.simple(3, 0))]
    assert rep == sr.p_gen(3, 1)
    assert sym.terms == {(1,): Fraction(1)}
    signed, rep, sym = sr.xi_class(3, 2)
    assert [(s, w.reduced_word()) for s, w in signed] == [(1, (1, 0)), (-1, (2, 0))]
    assert rep == sr.affine_schubert(ap.from_reduced_word(3, [1, 0])) - sr.affine_schubert(
        ap.from_reduced_word(3, [2, 0])
    )
    assert sym.terms == {(2,): Fraction(1)}


def test_symmetric_part_is_stanley():
    for l in range(5):
        for w in ap.elements_of_length(3, l):
            assert sr.symmetric_part(sr.affine_schubert(w)).terms == sf.affine_stanley_p(w).terms


def test_json_roundtrip():
    f = sr.affine_schubert(ap.from_reduced_word(3, [2, 1]))
    assert sr.RnElement.from_json(f.to_json()) == f
