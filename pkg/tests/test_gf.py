"""Finite field arithmetic tests: axioms, codecs, shipped moduli."""

import random

import pytest

from sunforge.gf import Field, FieldSpec, IRREDUCIBLE_TABLE, field_ops, is_irreducible


def test_prime_field_examples():
    f = Field.of_order(5)
    assert f.add(3, 4) == 2
    assert f.mul(3, 4) == 2
    assert f.inv(2) == 3
    assert f.eval_poly([1, 2], 3) == 2  # 1 + 2*3 mod 5


def test_gf4_multiplication():
    f = Field.of_order(4)  # modulus x^2 + x + 1
    x = f.element([0, 1])
    assert f.coeffs(f.mul(x, x)) == (1, 1)  # x^2 = x + 1


def test_horner_matches_powers():
    f = Field.of_order(9)
    rng = random.Random(5)
    for _ in range(100):
        coeffs = [rng.randrange(9) for _ in range(rng.randint(0, 4))]
        a = rng.randrange(9)
        direct = 0
        for i, c in enumerate(coeffs):
            direct = f.add(direct, f.mul(c, f.pow(a, i)))
        assert f.eval_poly(coeffs, a) == direct


def test_inverse_of_zero_raises():
    for q in (2, 4, 7):
        with pytest.raises(ZeroDivisionError):
            Field.of_order(q).inv(0)


def test_spec_validation():
    with pytest.raises(ValueError):
        FieldSpec(4, 1, (0, 1))  # characteristic not prime
    with pytest.raises(ValueError):
        FieldSpec(2, 2, (0, 0, 1))  # x^2 is reducible
    with pytest.raises(ValueError):
        FieldSpec(2, 2, (1, 1))  # wrong degree
    with pytest.raises(ValueError):
        Field.of_order(12)  # not a prime power
    with pytest.raises(ValueError):
        Field.of_order(3**3)  # extension outside the shipped table


def test_shipped_moduli_are_irreducible():
    for (p, m), coeffs in IRREDUCIBLE_TABLE.items():
        assert len(coeffs) == m + 1 and coeffs[-1] == 1
        assert is_irreducible(coeffs, p)


def test_canonical_order_constants_first():
    f = Field.of_order(9)
    for a in range(3):
        assert f.coeffs(a)[1:] == (0,)
    assert [f.coeffs(a)[0] for a in range(3)] == [0, 1, 2]


@pytest.mark.parametrize("q", [2, 3, 5, 7, 251, 4, 8, 9])
def test_field_axioms(q):
    f = field_ops(Field.of_order(q).spec)
    one = f.element([1]) if f.m > 1 else 1
    rng = random.Random(q)
    if q <= 9:
        triples = [
            (a, b, c) for a in range(q) for b in range(q) for c in range(q)
        ]
    else:
        triples = [
            (rng.randrange(q), rng.randrange(q), rng.randrange(q))
            for _ in range(400)
        ]
    for a, b, c in triples:
        assert f.add(a, b) == f.add(b, a)
        assert f.mul(a, b) == f.mul(b, a)
        assert f.add(f.add(a, b), c) == f.add(a, f.add(b, c))
        assert f.mul(f.mul(a, b), c) == f.mul(a, f.mul(b, c))
        assert f.mul(a, f.add(b, c)) == f.add(f.mul(a, b), f.mul(a, c))
        assert f.add(a, 0) == a and f.mul(a, one) == a
        assert f.add(a, f.neg(a)) == 0
        if a:
            assert f.mul(a, f.inv(a)) == one


@pytest.mark.parametrize("q", [4, 8, 9, 251])
def test_pow_matches_repeated_multiplication(q):
    f = Field.of_order(q)
    one = f.element([1]) if f.m > 1 else 1
    rng = random.Random(q + 1)
    for _ in range(50):
        a = rng.randrange(1, q)
        e = rng.randrange(0, 12)
        acc = one
        for _ in range(e):
            acc = f.mul(acc, a)
        assert f.pow(a, e) == acc
    # multiplicative group order
    for a in range(1, q):
        assert f.pow(a, q - 1) == one
