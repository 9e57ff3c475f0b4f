"""Tests for the abelian group generated by interval elements A(i, j)."""

import itertools
import random

import pytest

from gaussloop.groupa import AElement, product

RANGE = range(-5, 6)


class TestPresentation:
    def test_degenerate_generators_are_identity(self):
        for i in RANGE:
            assert AElement.generator(i, i).is_identity()

    def test_generators_are_symmetric(self):
        for i, j in itertools.product(RANGE, repeat=2):
            assert AElement.generator(i, j) == AElement.generator(j, i)

    def test_generators_are_involutions(self):
        for i, j in itertools.product(RANGE, repeat=2):
            g = AElement.generator(i, j)
            assert (g * g).is_identity()
            assert g.inverse() == g

    def test_commutativity(self):
        rng = random.Random(0)
        pairs = [(rng.randrange(-5, 6), rng.randrange(-5, 6))
                 for _ in range(40)]
        for (a, b), (c, d) in itertools.combinations(pairs, 2):
            x, y = AElement.generator(a, b), AElement.generator(c, d)
            assert x * y == y * x

    def test_triangle_relation(self):
        # A(i, j) A(j, k) = A(i, k) for i <= j <= k
        for i, j, k in itertools.combinations_with_replacement(RANGE, 3):
            lhs = AElement.generator(i, j) * AElement.generator(j, k)
            assert lhs == AElement.generator(i, k)

    def test_associativity_on_samples(self):
        rng = random.Random(1)
        for _ in range(50):
            x, y, z = (AElement.generator(rng.randrange(-5, 6),
                                          rng.randrange(-5, 6))
                       for _ in range(3))
            assert (x * y) * z == x * (y * z)


class TestSupport:
    def test_single_generator_support(self):
        assert AElement.generator(-2, 1).sorted_support() == [-2, -1, 0]

    def test_product_support(self):
        v = AElement.generator(-2, 3) * AElement.generator(1, 2)
        assert v.sorted_support() == [-2, -1, 0, 2]

    def test_identity_support(self):
        assert AElement.identity().sorted_support() == []


class TestHomomorphisms:
    def test_shift_is_an_automorphism(self):
        rng = random.Random(2)
        for _ in range(30):
            x = AElement.generator(rng.randrange(-5, 6), rng.randrange(-5, 6))
            y = AElement.generator(rng.randrange(-5, 6), rng.randrange(-5, 6))
            assert (x * y).shift() == x.shift() * y.shift()

    def test_shift_on_generators(self):
        for i, j in itertools.product(RANGE, repeat=2):
            assert (AElement.generator(i, j).shift()
                    == AElement.generator(i - 1, j - 1))

    def test_reflect_is_an_automorphism(self):
        rng = random.Random(3)
        for _ in range(30):
            x = AElement.generator(rng.randrange(-5, 6), rng.randrange(-5, 6))
            y = AElement.generator(rng.randrange(-5, 6), rng.randrange(-5, 6))
            assert (x * y).reflect() == x.reflect() * y.reflect()

    def test_reflect_on_generators(self):
        for i, j in itertools.product(RANGE, repeat=2):
            assert (AElement.generator(i, j).reflect()
                    == AElement.generator(-j, -i))

    def test_reflect_is_an_involution(self):
        for i, j in itertools.product(RANGE, repeat=2):
            g = AElement.generator(i, j)
            assert g.reflect().reflect() == g

    def test_support_parity_is_a_homomorphism(self):
        rng = random.Random(4)
        for _ in range(50):
            x = AElement.generator(rng.randrange(-5, 6), rng.randrange(-5, 6))
            y = AElement.generator(rng.randrange(-5, 6), rng.randrange(-5, 6))
            assert ((x * y).support_parity()
                    == (x.support_parity() + y.support_parity()) % 2)

    def test_support_parity_on_generators(self):
        for i, j in itertools.product(RANGE, repeat=2):
            assert AElement.generator(i, j).support_parity() == abs(j - i) % 2


class TestFactorization:
    def test_roundtrip(self):
        rng = random.Random(5)
        for _ in range(30):
            v = product(AElement.generator(rng.randrange(-5, 6),
                                           rng.randrange(-5, 6))
                        for _ in range(rng.randrange(5)))
            factors = v.generator_factorization()
            assert product(AElement.generator(i, j) for i, j in factors) == v

    def test_identity_factorization(self):
        assert AElement.identity().generator_factorization() == []


def test_rendering():
    assert str(AElement.identity()) == "1"
    s = str(AElement.generator(0, 2))
    assert "A(0,2)" in s.replace(" ", "")


def test_product_of_nothing_is_identity():
    assert product([]).is_identity()
