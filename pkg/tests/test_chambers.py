import math
import random
from fractions import Fraction

import pytest

from stairchambers.chambers import (
    InvalidCutError,
    build_chamber,
    chamber_from_stairs,
    chamber_of_theta,
    characteristic_stairs,
    compatible_pair,
    contains,
    count_by_generators,
    enumerate_chambers,
    enumerate_simple_chambers,
    generator_classes,
    horizontal_offsets,
    representative_theta,
    simple_chamber_of,
)
from stairchambers.stability import NotGenericError, Stability, StabilityCondition, classify, is_generic
from stairchambers.stairs import Direction, enumerate_stairs, linking_stair, make_stair, same_generator_family
from stairchambers.verify import random_theta


def theta(*values):
    return StabilityCondition.of(Fraction(v) for v in values)


def cg(k):
    return build_chamber(k, 1, [1] * (k - 1))


def cg_op(k):
    return build_chamber(k, 0, [k - 1] * (k - 1))


class TestBuild:
    def test_k2(self):
        c = build_chamber(2, 1, [1])
        assert c.stairs == (make_stair(2, 1, "D"), make_stair(2, 0, "R"))
        assert c.path.steps == "DR"
        assert set(c.chamber_stair.boxes) == {(0, 1), (0, 0), (1, 0)}

    def test_cg_k3(self):
        c = build_chamber(3, 1, [1, 1])
        assert c.stairs == (make_stair(3, 1, "DD"), make_stair(3, 2, "DR"), make_stair(3, 0, "RR"))
        assert c.path.steps == "DDRR"

    def test_vertical_entry_rejected(self):
        with pytest.raises(InvalidCutError, match="RIGHT"):
            build_chamber(2, 1, [2])

    @pytest.mark.parametrize("offsets", [[0, 1], [4, 1], [1]])
    def test_bad_offsets(self, offsets):
        with pytest.raises(ValueError):
            build_chamber(3, 1, offsets)

    def test_gluing_figure_k5(self):
        c = build_chamber(5, 1, [3, 4, 2, 2])
        assert [(s.first_rep, s.steps) for s in c.stairs] == [
            (1, "DDDD"),
            (4, "DRDD"),
            (3, "RDRD"),
            (0, "RDRR"),
            (2, "RRRR"),
        ]
        assert c.path.steps == "DDDDRDDRDRDRRRR"

    def test_cg_op_k5(self):
        assert cg_op(5).path.steps == "DDDDRDDDRRDDRRRDRRRR"

    @pytest.mark.parametrize("k", range(2, 7))
    def test_chamber_structure(self, k):
        for c in enumerate_chambers(k):
            assert [s.width for s in c.stairs] == list(range(1, k + 1))
            assert c.path.n_boxes == k + sum(c.offsets)
            for s, p in zip(c.stairs, c.positions):
                assert c.path.steps[p : p + k - 1] == s.steps
                assert c.path.irrep_at(p) == s.first_rep

    @pytest.mark.parametrize("k", range(2, 7))
    def test_offset_choices(self, k):
        for c in enumerate_chambers(k):
            for j, s in enumerate(c.stairs[:-1], start=1):
                assert len(horizontal_offsets(s)) == k - j


class TestEnumerate:
    @pytest.mark.parametrize("k", range(2, 7))
    def test_count_and_injectivity(self, k):
        found = enumerate_chambers(k)
        assert len(found) == math.factorial(k)
        assert len({c.key for c in found}) == len(found)
        assert [(c.first_rep, c.offsets) for c in found] == sorted((c.first_rep, c.offsets) for c in found)

    def test_k4_shapes(self):
        shapes = {}
        for c in enumerate_chambers(4):
            shapes.setdefault(c.path.steps, []).append(c)
        assert len(shapes) == 6
        assert all(len(v) == 4 for v in shapes.values())


class TestRepresentative:
    def test_cg_k3(self):
        assert representative_theta(cg(3)).values == (-4, 2, 2)

    def test_k2(self):
        assert representative_theta(build_chamber(2, 1, [1])).values == (-2, 2)

    def test_cg_op_k3_signs(self):
        v = representative_theta(cg_op(3)).values
        assert v[0] > 0 and v[1] < 0 and v[2] < 0

    @pytest.mark.parametrize("k", range(2, 6))
    def test_representative_properties(self, k):
        for c in enumerate_chambers(k):
            t = representative_theta(c)
            assert all(classify(s, t) is Stability.STABLE for s in c.stairs)
            assert is_generic(k, t)
            assert contains(c, t)


class TestGenericityCrossCheck:
    @pytest.mark.parametrize("k", [3, 4, 5])
    def test_generic_iff_inside_exactly_one_chamber(self, k):
        rng = random.Random(k)
        chambers = enumerate_chambers(k)
        for _ in range(40):
            t = random_theta(k, rng, spread=3)
            hits = [c for c in chambers if contains(c, t)]
            assert is_generic(k, t) == (len(hits) == 1)
            assert len(hits) <= 1


class TestContains:
    def test_cg(self):
        assert contains(cg(3), theta(-4, 2, 2))

    def test_violates(self):
        assert not contains(cg(3), theta(2, -1, -1))

    def test_zero(self):
        for c in enumerate_chambers(3):
            assert not contains(c, theta(0, 0, 0))

    def test_k_mismatch(self):
        with pytest.raises(ValueError):
            contains(cg(3), theta(1, -1))


class TestChamberOfTheta:
    def test_cg(self):
        assert chamber_of_theta(3, theta(-4, 2, 2)) == cg(3)

    def test_cg_op(self):
        c = chamber_of_theta(3, theta(4, -2, -2))
        assert c == cg_op(3)

    def test_not_generic(self):
        with pytest.raises(NotGenericError) as info:
            chamber_of_theta(3, theta(0, 1, -1))
        assert info.value.witness.semistable is not None

    def test_from_stairs_rejects_broken_chain(self):
        with pytest.raises(ValueError):
            chamber_from_stairs([make_stair(3, 1, "DD"), make_stair(3, 0, "RR")])


class TestSimple:
    def test_column_k3(self):
        assert simple_chamber_of(make_stair(3, 1, "DD")) == cg(3)

    def test_row_k2(self):
        assert simple_chamber_of(make_stair(2, 0, "R")) == build_chamber(2, 1, [1])

    @pytest.mark.parametrize("k", range(2, 7))
    def test_stair_is_characteristic_in_its_chamber(self, k):
        for s in enumerate_stairs(k):
            c = simple_chamber_of(s)
            assert s in c.stairs
            assert s in characteristic_stairs(c)
            for other in characteristic_stairs(c):
                assert simple_chamber_of(other) == c

    def test_cg_characteristic(self):
        chars = characteristic_stairs(cg(3))
        assert chars == list(cg(3).stairs)
        assert all(s.irrep_at(g) == 0 for s in chars for g in s.generators)

    def test_cg_op_k4_not_simple(self):
        assert characteristic_stairs(cg_op(4)) == []

    def test_cg_op_k3_simple(self):
        assert characteristic_stairs(cg_op(3))

    @pytest.mark.parametrize("k,n", [(3, 6), (4, 16), (5, 40)])
    def test_counts(self, k, n):
        assert len(enumerate_simple_chambers(k)) == n

    def test_k5_shapes(self):
        shapes = {c.path.steps for c in enumerate_simple_chambers(5)}
        assert len(shapes) == 8

    @pytest.mark.parametrize("k", range(2, 7))
    def test_characteristic_is_generator_family(self, k):
        for c in enumerate_simple_chambers(k):
            chars = characteristic_stairs(c)
            family = same_generator_family(chars[0])
            assert chars == [s for s in c.stairs if s in family]


class TestCompatiblePair:
    def test_decreasing_true(self):
        a = make_stair(2, 1, "D")
        b = linking_stair(a, Direction.DECREASING).window(1).stair
        assert compatible_pair(a, b, Direction.DECREASING)

    def test_same_stair(self):
        a = make_stair(2, 1, "D")
        assert not compatible_pair(a, a, Direction.DECREASING)

    def test_row_has_no_successor(self):
        a = make_stair(3, 0, "RR")
        for w in linking_stair(a, Direction.DECREASING).windows():
            assert not compatible_pair(a, w.stair, Direction.DECREASING)

    def test_not_a_window(self):
        with pytest.raises(ValueError):
            compatible_pair(make_stair(3, 0, "RR"), make_stair(3, 0, "DD"), Direction.DECREASING)

    def test_increasing(self):
        a = make_stair(3, 0, "RR")
        hits = [
            w.stair
            for w in linking_stair(a, Direction.INCREASING).windows()
            if compatible_pair(a, w.stair, Direction.INCREASING)
        ]
        assert hits and all(b.height == a.height + 1 for b in hits)


class TestGeneratorCounts:
    def test_k4(self):
        assert count_by_generators(4) == {1: 4, 2: 12}

    def test_k3(self):
        assert count_by_generators(3) == {1: 3, 2: 3}

    @pytest.mark.parametrize("k", range(2, 11))
    def test_formula_matches_grouping(self, k):
        formula = count_by_generators(k)
        assert formula == generator_classes(k)
        assert sum(formula.values()) == k * 2 ** (k - 2)
        assert max(r for r, n in formula.items() if n) == (k + 1) // 2
