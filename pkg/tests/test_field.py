import itertools

import numpy as np
import pytest
from hypothesis import given, strategies as st

from codedist.errors import DegreeTooLarge, DivisionByZero, IncompatibleFields, NoConwayPolynomial, NotPrime
from codedist.field import GF, Embedding, embed, extension_field, field_new, is_irreducible

SMALL = [(2, 1), (2, 2), (2, 3), (2, 4), (3, 1), (3, 2), (5, 1), (7, 1), (2, 8), (3, 4), (5, 2)]


def test_prime_field_f2():
    F = field_new(2, 1)
    assert F.q == 2
    assert F.elements().tolist() == [0, 1]


def test_f9_uses_conway_modulus():
    F = field_new(3, 2)
    # x^2 + 2x + 2, constant term first
    assert tuple(F.modulus) == (2, 2, 1)
    assert is_irreducible(F.modulus, 3)


def test_f4_eta_squared():
    F = GF(4)
    eta = 2
    assert F.mul(eta, eta) == F.add(eta, 1) == 3


def test_f3_add():
    assert GF(3).add(2, 2) == 1


def test_f9_inverses_exhaustive():
    F = GF(9)
    x = np.arange(1, 9)
    assert (F.mul(F.inv(x), x) == 1).all()


def test_inverse_of_zero():
    with pytest.raises(DivisionByZero):
        GF(4).inv(0)


@pytest.mark.parametrize("p,e", [(4, 1), (1, 2), (9, 1)])
def test_not_prime(p, e):
    with pytest.raises(NotPrime):
        field_new(p, e)


def test_degree_and_table_limits():
    with pytest.raises(DegreeTooLarge):
        field_new(2, 21)
    with pytest.raises(NoConwayPolynomial):
        field_new(11, 1)


@pytest.mark.parametrize("p,e", SMALL)
def test_generator_order_and_log_tables(p, e):
    F = field_new(p, e)
    powers = {F.gen_power(n) for n in range(F.q - 1)}
    assert len(powers) == F.q - 1 and 0 not in powers


@pytest.mark.parametrize("q", [2, 3, 4, 5, 8, 9, 16])
def test_field_axioms_exhaustive(q):
    F = GF(q)
    a, b = np.meshgrid(F.elements(), F.elements(), indexing="ij")
    a, b = a.ravel(), b.ravel()
    assert (F.add(a, b) == F.add(b, a)).all()
    assert (F.mul(a, b) == F.mul(b, a)).all()
    for c in F.elements():
        assert (F.mul(F.mul(a, b), c) == F.mul(a, F.mul(b, c))).all()
        assert (F.mul(a, F.add(b, c)) == F.add(F.mul(a, b), F.mul(a, c))).all()
        assert (F.add(F.add(a, b), c) == F.add(a, F.add(b, c))).all()
    assert (F.add(a, F.neg(a)) == 0).all()
    assert (F.sub(F.add(a, b), b) == a).all()


@pytest.mark.parametrize("q", [4, 8, 9, 25, 27, 256])
def test_frobenius_additive(q):
    F = GF(q)
    a, b = np.meshgrid(F.elements(), F.elements(), indexing="ij")
    assert (F.frobenius(F.add(a, b)) == F.add(F.frobenius(a), F.frobenius(b))).all()


def test_large_field_without_tables_agrees_with_tables():
    # F_{2^17} is outside the Conway table; F_{3^11} = 177147 > 2^16 uses polynomial arithmetic
    F = field_new(3, 11)
    assert not F.has_log_tables
    rng = np.random.default_rng(1)
    a = rng.integers(1, F.q, 200)
    b = rng.integers(1, F.q, 200)
    assert (F.mul(F.div(a, b), b) == a).all()
    assert (F.power(a, F.q - 1) == 1).all()


@given(st.integers(1, 2**8 - 1), st.integers(1, 2**8 - 1), st.integers(0, 2**8 - 1))
def test_f256_distributive_random(a, b, c):
    F = GF(256)
    assert F.mul(a, F.add(b, c)) == F.add(F.mul(a, b), F.mul(a, c))


def test_embed_identity_on_prime_field():
    assert embed(1, GF(2), GF(4)) == 1
    assert embed(0, GF(2), GF(4)) == 0


def test_embed_minus_one():
    F9 = GF(9)
    image = embed(2, GF(3), F9)
    assert image == F9.neg(1)
    order2 = [x for x in range(1, 9) if F9.mul(x, x) == 1 and x != 1]
    assert order2 == [image]


@pytest.mark.parametrize("src,dst", [(2, 4), (2, 8), (4, 16), (2, 256), (3, 9), (9, 81), (4, 64)])
def test_embedding_homomorphism_exhaustive(src, dst):
    S, T = GF(src), GF(dst)
    phi = Embedding(S, T)
    for a, b in itertools.product(range(src), repeat=2):
        assert phi(S.add(a, b)) == T.add(phi(a), phi(b))
        assert phi(S.mul(a, b)) == T.mul(phi(a), phi(b))
    assert phi(0) == 0 and phi(1) == 1


@pytest.mark.parametrize("p,a,b,c", [(2, 1, 2, 4), (2, 2, 4, 8), (3, 1, 2, 4), (2, 1, 3, 6)])
def test_embedding_towers_commute(p, a, b, c):
    A, B, C = field_new(p, a), field_new(p, b), field_new(p, c)
    x = A.elements()
    assert (embed(embed(x, A, B), B, C) == embed(x, A, C)).all()


def test_incompatible_fields():
    with pytest.raises(IncompatibleFields):
        Embedding(GF(4), GF(8))
    with pytest.raises(IncompatibleFields):
        Embedding(GF(2), GF(9))


def test_extension_field():
    assert extension_field(GF(4), 2) == GF(16)
    assert extension_field(GF(3), 3).q == 27
