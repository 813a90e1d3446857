import random
from fractions import Fraction

import pytest

from schuralg.enveloping import (
    UElement,
    divided_monomial,
    integrality_coords,
    matrix_unit,
    minus_weight,
    monomial_degree,
    monomial_weight,
    pbw_image,
    plus_weight,
    root_pairs,
    tensor_rep,
    u_multiply,
    u_one,
    u_relabel,
    verify_weight_idempotent,
)
from schuralg.exact_linalg import unimodular_change
from schuralg.schur import hom_basis
from schuralg.weights import compositions, margin_matrices


def test_root_pairs():
    assert root_pairs(2) == ((1, 2),)
    assert root_pairs(3) == ((1, 2), (1, 3), (2, 3))


def test_unit_one():
    one = u_one(2)
    f = matrix_unit(2, 2, 1)
    assert u_multiply(one, f) == f
    assert u_multiply(f, one) == f


def test_chevalley_bracket_n2():
    e = matrix_unit(2, 1, 2)
    f = matrix_unit(2, 2, 1)
    h1 = matrix_unit(2, 1, 1)
    h2 = matrix_unit(2, 2, 2)
    comm = u_multiply(e, f) - u_multiply(f, e)
    assert comm == h1 - h2


def test_bracket_h_e():
    e = matrix_unit(2, 1, 2)
    h1 = matrix_unit(2, 1, 1)
    comm = u_multiply(h1, e) - u_multiply(e, h1)
    assert comm == e


def test_serre_like_n3():
    # [e_12, e_23] = e_13 and e_13 commutes with both
    e12 = matrix_unit(3, 1, 2)
    e23 = matrix_unit(3, 2, 3)
    e13 = matrix_unit(3, 1, 3)
    assert u_multiply(e12, e23) - u_multiply(e23, e12) == e13
    assert u_multiply(e12, e13) == u_multiply(e13, e12)


def test_straightening_ef():
    x = divided_monomial(2, ((0, 1), (1, 0)), (), "ef")
    assert x.terms == {
        ((1,), (0, 0), (1,)): Fraction(1),
        ((0,), (1, 0), (0,)): Fraction(1),
        ((0,), (0, 1), (0,)): Fraction(-1),
    }


def test_divided_monomial_fe_needs_no_straightening():
    x = divided_monomial(2, ((0, 2), (3, 0)), (), "fe")
    assert x.terms == {((3,), (0, 0), (2,)): Fraction(1, 12)}


def test_divided_monomial_validates():
    with pytest.raises(ValueError):
        divided_monomial(2, ((1, 0), (0, 0)), (), "fe")
    with pytest.raises(ValueError):
        divided_monomial(2, ((0, 1), (1, 0)), (), "middle")


def test_monomial_grading():
    m = ((2,), (1, 0), (1,))
    assert monomial_degree(m) == 4
    assert monomial_weight(2, m) == (1 - 2, 2 - 1)


def test_integrality_coords_plain_square():
    f = matrix_unit(2, 2, 1)
    f2 = u_multiply(f, f)
    coords, integral = integrality_coords(f2)
    assert coords == {((2,), (0, 0), (0,)): Fraction(2)}
    assert integral


def test_integrality_coords_divided():
    x = divided_monomial(2, ((0, 1), (2, 0)), (1, 0), "fe")
    coords, integral = integrality_coords(x)
    assert coords == {((2,), (1, 0), (1,)): Fraction(1)}
    assert integral


def test_integrality_coords_detects_fractions():
    f = matrix_unit(2, 2, 1)
    half = u_multiply(f, f).scale(Fraction(1, 2))
    coords, integral = integrality_coords(half)
    assert coords == {((2,), (0, 0), (0,)): Fraction(1)}
    assert integral
    third = u_multiply(f, f).scale(Fraction(1, 3))
    _, integral = integrality_coords(third)
    assert not integral


def test_integrality_of_divided_products():
    rng = random.Random(11)
    for _ in range(25):
        factors = []
        for _ in range(rng.randint(2, 3)):
            a = rng.randint(1, 3)
            if rng.random() < 0.5:
                pat = ((0, a), (0, 0))
            else:
                pat = ((0, 0), (a, 0))
            factors.append(divided_monomial(2, pat, (), "fe"))
        prod = factors[0]
        for x in factors[1:]:
            prod = u_multiply(prod, x)
        _, integral = integrality_coords(prod)
        assert integral


def test_tensor_rep_letters():
    h1 = matrix_unit(2, 1, 1)
    assert tensor_rep(h1, 1).entries == {((1,), (1,)): Fraction(1)}
    e = matrix_unit(2, 1, 2)
    assert tensor_rep(e, 1).entries == {((1,), (2,)): Fraction(1)}
    f = matrix_unit(2, 2, 1)
    assert tensor_rep(f, 2).entries == {
        ((2, 1), (1, 1)): Fraction(1),
        ((1, 2), (1, 1)): Fraction(1),
        ((2, 2), (1, 2)): Fraction(1),
        ((2, 2), (2, 1)): Fraction(1),
    }


def test_tensor_rep_is_homomorphism_seeded():
    rng = random.Random(7)
    pairs = root_pairs(3)

    def random_element():
        terms = {}
        for _ in range(2):
            f = [0] * len(pairs)
            h = [0] * 3
            e = [0] * len(pairs)
            for _ in range(rng.randint(0, 4)):
                bucket = rng.randint(0, 2)
                if bucket == 0:
                    f[rng.randrange(len(pairs))] += 1
                elif bucket == 1:
                    h[rng.randrange(3)] += 1
                else:
                    e[rng.randrange(len(pairs))] += 1
            terms[(tuple(f), tuple(h), tuple(e))] = Fraction(rng.randint(-3, 3))
        return UElement(3, terms)

    for _ in range(50):
        x = random_element()
        y = random_element()
        lhs = tensor_rep(u_multiply(x, y), 3)
        rhs = tensor_rep(x, 3).compose(tensor_rep(y, 3))
        assert lhs == rhs


def test_weight_idempotent_lemma():
    for n, r in [(2, 2), (2, 3), (3, 3)]:
        for lam in compositions(n, r):
            assert verify_weight_idempotent(lam, r)


def test_plus_minus_weight():
    a = ((1, 1), (0, 1))
    assert plus_weight(a) == (1, 2)
    assert minus_weight(a) == (2, 1)
    diag = ((2, 0), (0, 1))
    assert plus_weight(diag) == (2, 1)
    assert minus_weight(diag) == (2, 1)


def test_pbw_image_forms_agree():
    for lam in compositions(2, 3):
        for mu in compositions(2, 3):
            for a in margin_matrices(lam, mu):
                fe = pbw_image(a, "fe")
                ef = pbw_image(a, "ef")
                assert pbw_image(a, "fe-middle") == fe
                assert pbw_image(a, "ef-middle") == ef
                assert fe.integral()
                assert ef.integral()


def test_pbw_image_identity_matrix():
    a = ((2, 0), (0, 1))
    img = pbw_image(a, "fe")
    assert img.terms == {a: Fraction(1)}


def test_pbw_images_unimodular():
    for lam in compositions(2, 2):
        for mu in compositions(2, 2):
            margins = margin_matrices(lam, mu)
            xi = [x.terms for x in hom_basis(lam, mu)]
            fe = [pbw_image(a, "fe").terms for a in margins]
            ef = [pbw_image(a, "ef").terms for a in margins]
            assert unimodular_change(fe, xi)
            assert unimodular_change(ef, xi)


def test_pbw_image_rejects_bad_form():
    with pytest.raises(ValueError):
        pbw_image(((1, 0), (0, 1)), "middle")


def test_u_relabel_is_automorphism():
    rng = random.Random(13)
    pairs = root_pairs(3)

    def random_element():
        terms = {}
        for _ in range(2):
            f = [0] * len(pairs)
            h = [0] * 3
            e = [0] * len(pairs)
            for _ in range(rng.randint(0, 3)):
                bucket = rng.randint(0, 2)
                if bucket == 0:
                    f[rng.randrange(len(pairs))] += 1
                elif bucket == 1:
                    h[rng.randrange(3)] += 1
                else:
                    e[rng.randrange(len(pairs))] += 1
            terms[(tuple(f), tuple(h), tuple(e))] = Fraction(rng.randint(-2, 3))
        return UElement(3, terms)

    for w in [(2, 1, 3), (1, 3, 2), (3, 1, 2)]:
        for _ in range(10):
            x = random_element()
            y = random_element()
            lhs = u_relabel(u_multiply(x, y), w)
            rhs = u_multiply(u_relabel(x, w), u_relabel(y, w))
            assert lhs == rhs


def test_u_relabel_letters():
    e12 = matrix_unit(3, 1, 2)
    assert u_relabel(e12, (2, 1, 3)) == matrix_unit(3, 2, 1)
    assert u_relabel(e12, (1, 2, 3)) == e12


def test_u_relabel_restraightens():
    # swapping indices turns a normal fe word into an ef word,
    # which must pick up the bracket correction
    fe = divided_monomial(2, ((0, 1), (1, 0)), (), "fe")
    out = u_relabel(fe, (2, 1))
    assert out.terms == {
        ((1,), (0, 0), (1,)): Fraction(1),
        ((0,), (1, 0), (0,)): Fraction(1),
        ((0,), (0, 1), (0,)): Fraction(-1),
    }


def test_resource_guard():
    from schuralg.errors import ResourceLimitError

    x = u_one(4)
    with pytest.raises(ResourceLimitError):
        tensor_rep(x, 12)
