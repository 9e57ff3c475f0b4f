"""Tests for the quotient algebras of configuration combinations.

The virtual algebra is spanned by configurations (cls, (x, y, z)) with
integer labels, modulo:

    repeated-label configurations = 0
    C(x, y, z) = A(x, z, y) + A(y, z, x)
    B(x, y, z) = A(z, x, y) + A(z, y, x)

The surface algebra is spanned by configurations labeled with homology
classes, modulo zero-class deletion and

    C(a, b, c) = A(b, a, c) + A(b, c, a)
    B(a, b, c) = A(c, a, b) + A(a, c, b)
"""

import itertools
import random

import pytest

from gaussloop.invariants import ACombination, loop_functional, normal_form
from gaussloop.surface import gv_functional, surface_normal_form, weight_image


def comb(*terms):
    d = {}
    for cls, labels, coeff in terms:
        key = (cls, tuple(labels))
        d[key] = d.get(key, 0) + coeff
    return ACombination.from_dict(d)


def virtual_relations(label_range):
    """Generators of the virtual relation submodule over a label range."""
    rels = []
    for x, y, z in itertools.product(label_range, repeat=3):
        if len({x, y, z}) != 3:
            for cls in ("A", "B", "C"):
                rels.append(comb((cls, (x, y, z), 1)))
            continue
        rels.append(comb(("C", (x, y, z), 1), ("A", (x, z, y), -1),
                         ("A", (y, z, x), -1)))
        rels.append(comb(("B", (x, y, z), 1), ("A", (z, x, y), -1),
                         ("A", (z, y, x), -1)))
    return rels


def surface_relations(classes, genus):
    zero = (0,) * 2 * genus
    rels = []
    for a, b, c in itertools.product(classes, repeat=3):
        if zero in (a, b, c):
            for cls in ("A", "B", "C"):
                rels.append(comb((cls, (a, b, c), 1)))
            continue
        rels.append(comb(("C", (a, b, c), 1), ("A", (b, a, c), -1),
                         ("A", (b, c, a), -1)))
        rels.append(comb(("B", (a, b, c), 1), ("A", (c, a, b), -1),
                         ("A", (a, c, b), -1)))
    return rels


def rewrite_randomly(combination, rng, step, is_normal):
    """Reduce by applying single-term rewrite steps in a random order."""
    current = combination.as_dict()
    while True:
        reducible = [key for key, c in current.items()
                     if c and not is_normal(key)]
        if not reducible:
            break
        key = rng.choice(reducible)
        coeff = current.pop(key)
        for new_key, factor in step(key):
            current[new_key] = current.get(new_key, 0) + factor * coeff
    return ACombination.from_dict(current)


def virtual_step(key):
    cls, (x, y, z) = key
    if len({x, y, z}) != 3:
        return []
    if cls == "C":
        return [(("A", (x, z, y)), 1), (("A", (y, z, x)), 1)]
    return [(("A", (z, x, y)), 1), (("A", (z, y, x)), 1)]


def virtual_is_normal(key):
    cls, labels = key
    return cls == "A" and len(set(labels)) == 3


def surface_step(zero):
    def step(key):
        cls, (a, b, c) = key
        if zero in (a, b, c):
            return []
        if cls == "C":
            return [(("A", (b, a, c)), 1), (("A", (b, c, a)), 1)]
        return [(("A", (c, a, b)), 1), (("A", (a, c, b)), 1)]
    return step


def surface_is_normal(zero):
    def is_normal(key):
        cls, labels = key
        return cls == "A" and zero not in labels
    return is_normal


class TestVirtualNormalForm:
    def test_kills_relations(self):
        for rel in virtual_relations(range(7)):
            assert normal_form(rel).is_zero()

    def test_random_rewrite_orders_agree(self):
        rng = random.Random(0)
        labels = range(-2, 5)
        for _ in range(25):
            terms = [(rng.choice("ABC"),
                      tuple(rng.choice(labels) for _ in range(3)),
                      rng.choice((-2, -1, 1, 2)))
                     for _ in range(rng.randint(1, 8))]
            c = comb(*terms)
            expected = normal_form(c)
            for _ in range(100):
                assert rewrite_randomly(c, rng, virtual_step,
                                        virtual_is_normal) == expected

    def test_loop_functional_vanishes_on_relations(self):
        triples = [(1, 0, 2), (2, 0, 3), (3, 1, 2), (5, 4, 0), (1, 2, 3)]
        for rel in virtual_relations(range(7)):
            for t in triples:
                assert loop_functional(rel, *t) == 0

    def test_normal_form_is_idempotent(self):
        rng = random.Random(1)
        for _ in range(20):
            c = comb(*[(rng.choice("ABC"),
                        tuple(rng.randrange(5) for _ in range(3)),
                        rng.choice((-1, 1)))
                       for _ in range(6)])
            nf = normal_form(c)
            assert normal_form(nf) == nf


class TestSurfaceNormalForm:
    def genus_classes(self, genus, bound):
        return list(itertools.product(range(-bound, bound + 1),
                                      repeat=2 * genus))

    def test_kills_relations_genus_one(self):
        classes = self.genus_classes(1, 2)
        for rel in surface_relations(classes, 1):
            assert surface_normal_form(rel, 1).is_zero()

    def test_kills_relations_genus_two_sampled(self):
        rng = random.Random(2)
        all_classes = self.genus_classes(2, 2)
        classes = [(0, 0, 0, 0)] + rng.sample(all_classes, 12)
        for rel in surface_relations(classes, 2):
            assert surface_normal_form(rel, 2).is_zero()

    def test_random_rewrite_orders_agree(self):
        rng = random.Random(3)
        classes = self.genus_classes(1, 1)
        zero = (0, 0)
        for _ in range(15):
            c = comb(*[(rng.choice("ABC"),
                        tuple(rng.choice(classes) for _ in range(3)),
                        rng.choice((-1, 1)))
                       for _ in range(5)])
            expected = surface_normal_form(c, 1)
            for _ in range(100):
                assert rewrite_randomly(c, rng, surface_step(zero),
                                        surface_is_normal(zero)) == expected

    def test_gv_functional_vanishes_on_relations(self):
        classes = self.genus_classes(1, 1)
        tries = [((1, 0), (0, 1), (1, 1)), ((1, 0), (0, 1), (1, 0)),
                 ((1, 1), (-1, 0), (0, -1))]
        for rel in surface_relations(classes, 1):
            for alpha, beta, gamma in tries:
                assert gv_functional(rel, alpha, beta, gamma, 1) == 0

    def test_gv_functional_hypothesis_enforced(self):
        c = comb(("A", ((1, 0), (0, 1), (1, 1)), 1))
        with pytest.raises(ValueError):
            gv_functional(c, (0, 0), (1, 0), (0, 1), 1)
        with pytest.raises(ValueError):
            gv_functional(c, (1, 0), (1, 0), (0, 1), 1)

    def test_weight_image_maps_relations_to_relations(self):
        classes = self.genus_classes(1, 2)
        rng = random.Random(4)
        rels = surface_relations(classes, 1)
        for rel in rng.sample(rels, 200) + rels[:50]:
            assert normal_form(weight_image(rel)).is_zero()
