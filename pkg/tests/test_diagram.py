import random

import pytest
from hypothesis import given, settings, strategies as st

from gaussloop.diagram import (Arrow, GaussCodeError, GaussDiagram,
                               parse_gauss_code)
from conftest import random_diagram


def diagrams(max_n=6, signs=(1, -1)):
    def build(seed_and_n):
        seed, n = seed_and_n
        return random_diagram(random.Random(seed), n, signs=signs)
    return st.tuples(st.integers(0, 10**6), st.integers(0, max_n)).map(build)


class TestParsing:
    def test_empty(self):
        d = parse_gauss_code("")
        assert d.n == 0 and d.code() == ""

    def test_two_arrow_example(self):
        d = parse_gauss_code("O1+O2+U1+U2+")
        assert d.n == 2
        assert d.arrows[0] == Arrow(0, 2, 1)
        assert d.arrows[1] == Arrow(1, 3, 1)

    def test_whitespace_and_commas_ignored(self):
        assert parse_gauss_code("O1+, U1+").code() == "O1+U1+"

    def test_inconsistent_sign_rejected(self):
        with pytest.raises(GaussCodeError):
            parse_gauss_code("O1+U1+O2+U2-")

    def test_label_count_rejected(self):
        with pytest.raises(GaussCodeError):
            parse_gauss_code("O1+U1+O2+")

    def test_syntax_error_position(self):
        with pytest.raises(GaussCodeError) as err:
            parse_gauss_code("O1+X1+")
        assert err.value.position == 3

    def test_singular_marker_on_both_occurrences(self):
        d = parse_gauss_code("O1+*U1+*")
        assert d.arrows[0].singular
        with pytest.raises(GaussCodeError):
            parse_gauss_code("O1+*U1+")

    @given(diagrams())
    @settings(max_examples=60, deadline=None)
    def test_roundtrip(self, d):
        assert parse_gauss_code(d.code()) == d

    def test_canonical_code_roundtrips(self):
        d = parse_gauss_code("U2+O1+U1+O2+")
        again = parse_gauss_code(d.canonical_code())
        assert again.canonical_equal(d)


class TestCanonical:
    def test_rotation_equal(self):
        assert parse_gauss_code("O1+U1+").canonical_equal(
            parse_gauss_code("U1+O1+"))

    def test_sign_differs(self):
        assert not parse_gauss_code("O1+U1+").canonical_equal(
            parse_gauss_code("O1-U1-"))

    def test_relabeling_equal(self):
        a = parse_gauss_code("O1+O2+U1+U2+")
        b = parse_gauss_code("O2+O1+U2+U1+")
        assert a.canonical_equal(b)

    @given(diagrams(), st.integers(0, 11))
    @settings(max_examples=40, deadline=None)
    def test_rotation_invariance(self, d, k):
        if d.n:
            assert d.rotate(k % (2 * d.n)).canonical_equal(d)


class TestIntersection:
    def test_interleaved(self):
        d = parse_gauss_code("O1+O2+U1+U2+")
        assert d.intersect(0, 1)

    def test_nested(self):
        d = parse_gauss_code("O1+U1+O2+U2+")
        assert not d.intersect(0, 1)

    def test_invalid_id(self):
        with pytest.raises(IndexError):
            parse_gauss_code("O1+U1+").intersect(0, 1)

    @given(diagrams(max_n=8))
    @settings(max_examples=40, deadline=None)
    def test_symmetry(self, d):
        for i in range(d.n):
            for j in range(i + 1, d.n):
                assert d.intersect(i, j) == d.intersect(j, i)


class TestSmoothing:
    def test_three_components_partition(self):
        rng = random.Random(5)
        for _ in range(30):
            d = random_diagram(rng, rng.randint(2, 7))
            for i, j in d.parallel_pairs():
                sm = d.smooth_pair(i, j)
                assert len(sm.components) == 3
                seen = sorted(p for comp in sm.components for p in comp)
                assert seen == list(range(2 * d.n))
                assert set(sm.arrow_components()) == (
                    set(range(d.n)) - {i, j})

    def test_middle_component_empty_for_nested_kinks(self):
        d = parse_gauss_code("O1+U1+O2+U2+")
        sm = d.smooth_pair(0, 1)
        counts = [sum(1 for k in range(d.n) if k not in (0, 1)
                      for p in d.arrows[k].endpoints()
                      if sm.component_of(p) == c) for c in range(3)]
        assert counts == [0, 0, 0]

    def test_intersecting_pair_rejected(self):
        d = parse_gauss_code("O1+O2+U1+U2+")
        with pytest.raises(ValueError):
            d.smooth_pair(0, 1)


class TestConnectSum:
    def test_identity(self):
        vt = parse_gauss_code("O1+O2+U1+U2+")
        empty = parse_gauss_code("")
        assert vt.connect_sum(empty, 0, 0).canonical_equal(vt)

    def test_cross_copy_pairs(self):
        vt = parse_gauss_code("O1+O2+U1+U2+")
        d = vt.connect_sum(vt, 0, 0)
        assert len(d.parallel_pairs()) == 4

    def test_out_of_range(self):
        vt = parse_gauss_code("O1+O2+U1+U2+")
        with pytest.raises(ValueError):
            vt.connect_sum(vt, 9, 0)


class TestSymmetries:
    def test_mirror_example(self):
        d = parse_gauss_code("O1+O2+U1+U2+")
        assert d.mirror().code() == "O1-O2-U1-U2-"

    def test_empty_fixed(self):
        e = parse_gauss_code("")
        for mode in ("inverse", "mirror", "switch"):
            assert e.apply_symmetry(mode).n == 0

    @given(diagrams())
    @settings(max_examples=30, deadline=None)
    def test_involutions(self, d):
        for mode in ("inverse", "mirror", "switch"):
            twice = d.apply_symmetry(mode).apply_symmetry(mode)
            assert twice.canonical_equal(d)

    @given(diagrams())
    @settings(max_examples=30, deadline=None)
    def test_commuting_involutions(self, d):
        assert d.mirror().inverse().canonical_equal(d.inverse().mirror())
        assert d.mirror().switch().canonical_equal(d.switch().mirror())
        assert d.inverse().switch().canonical_equal(d.switch().inverse())


class TestVirtualization:
    def test_way_swaps_one_arrow(self):
        d = parse_gauss_code("O1+O2+U1+U2+")
        v = d.virtualize(0, "way")
        assert v.arrows[0] == Arrow(2, 0, 1)
        assert v.arrows[1] == d.arrows[1]

    def test_involutions(self):
        d = parse_gauss_code("O1+O2-U1+U2-")
        for kind in ("way", "sign"):
            assert d.virtualize(0, kind).virtualize(0, kind) == d

    def test_invalid_id(self):
        with pytest.raises(IndexError):
            parse_gauss_code("O1+U1+").virtualize(3, "way")


class TestResolution:
    def test_all_zero_keeps_arrows(self):
        d = parse_gauss_code("O1+*U1+*O2+U2+")
        r = d.resolve([0])
        assert r.arrows[0] == Arrow(0, 1, 1)
        assert not r.singular_indices()

    def test_bit_one_reverses_and_negates(self):
        d = parse_gauss_code("O1+*U1+*")
        r = d.resolve([1])
        assert r.arrows[0] == Arrow(1, 0, -1)

    def test_length_mismatch(self):
        with pytest.raises(ValueError):
            parse_gauss_code("O1+*U1+*").resolve([0, 1])

    def test_writhe_parity_constant_over_resolutions(self):
        rng = random.Random(11)
        for _ in range(10):
            d = random_diagram(rng, 5, singular_count=3)
            parities = {d.resolve([a, b, c]).writhe() % 2
                        for a in (0, 1) for b in (0, 1) for c in (0, 1)}
            assert len(parities) == 1


def test_writhe():
    assert parse_gauss_code("O1+O2+U1+U2+").writhe() == 2
    assert parse_gauss_code("").writhe() == 0
    assert parse_gauss_code("O1+U1+O2-U2-").writhe() == 0
    # singular arrows contribute the sign of their unswitched resolution
    assert parse_gauss_code("O1+*U1+*").writhe() == 1
