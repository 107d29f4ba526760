"""Chambers of generic stability conditions, built from cut sequences.

A chamber is a chain S_1, ..., S_k of stairs of widths 1..k.  S_1 is a
column and S_{j+1} is the window at offset o_j of the decreasing linking
stair of S_j, entered through a horizontal cut.  The offsets determine the
chamber; gluing the chain along its overlaps gives the chamber stair.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass, field
from functools import cached_property, lru_cache

from .constellations import proper_content_masks
from .stability import (
    ConeInequality,
    NotGenericError,
    StabilityCondition,
    Stability,
    classify,
    favorite_condition,
    genericity_witness,
    reps_of,
)
from .stairs import (
    DOWN,
    RIGHT,
    Cut,
    Direction,
    RealizedStair,
    Stair,
    StepPath,
    check_order,
    enumerate_stairs,
    family_key,
    linking_stair,
)


class InvalidCutError(ValueError):
    """An offset selects a window entered through a vertical cut."""


def horizontal_offsets(stair: Stair) -> list[int]:
    """Offsets whose decreasing-link window is entered through a horizontal cut."""
    return [o for o in range(1, stair.k) if stair.steps[o - 1] == DOWN]


def _next_stair(stair: Stair, offset: int) -> Stair:
    k = stair.k
    if isinstance(offset, bool) or not isinstance(offset, int):
        raise TypeError(f"offset must be an int, got {offset!r}")
    if not 1 <= offset <= k:
        raise ValueError(f"offset {offset} not in 1..{k}")
    window = linking_stair(stair, Direction.DECREASING).window(offset)
    if window.entry_cut is not Cut.HORIZONTAL:
        raise InvalidCutError(
            f"offset {offset} window of {stair} is entered via RIGHT (vertical cut)"
        )
    return window.stair


@dataclass(frozen=True)
class Chamber:
    k: int
    first_rep: int
    offsets: tuple[int, ...]
    stairs: tuple[Stair, ...] = field(init=False, compare=False, repr=False)

    def __post_init__(self):
        check_order(self.k)
        offsets = tuple(self.offsets)
        object.__setattr__(self, "offsets", offsets)
        if len(offsets) != self.k - 1:
            raise ValueError(f"expected {self.k - 1} offsets, got {len(offsets)}")
        chain = [Stair(self.k, self.first_rep, DOWN * (self.k - 1))]
        for o in offsets:
            chain.append(_next_stair(chain[-1], o))
        object.__setattr__(self, "stairs", tuple(chain))

    @cached_property
    def positions(self) -> tuple[int, ...]:
        """Chamber-stair position of the first box of each S_j."""
        return tuple(itertools.accumulate(self.offsets, initial=0))

    @cached_property
    def path(self) -> StepPath:
        steps = self.stairs[0].steps + "".join(
            RIGHT + s.steps[: o - 1] for s, o in zip(self.stairs, self.offsets)
        )
        return StepPath(self.k, self.first_rep, steps)

    @cached_property
    def chamber_stair(self) -> RealizedStair:
        return self.path.realize()

    @property
    def key(self) -> tuple[int, str]:
        return self.path.first_rep, self.path.steps

    @cached_property
    def inequality_masks(self) -> frozenset[int]:
        return frozenset(m for s in self.stairs for m in proper_content_masks(s))

    @property
    def inequalities(self) -> frozenset[ConeInequality]:
        return frozenset(ConeInequality(reps_of(m)) for m in self.inequality_masks)

    @cached_property
    def representative_theta(self) -> StabilityCondition:
        total = favorite_condition(self.stairs[0])
        for s in self.stairs[1:]:
            total = total + favorite_condition(s)
        return total

    def __str__(self) -> str:
        return f"Chamber(k={self.k}, first_rep={self.first_rep}, offsets={list(self.offsets)})"


def build_chamber(k: int, first_rep: int, offsets) -> Chamber:
    return Chamber(k, first_rep, tuple(offsets))


def _offset_sequences(stair: Stair):
    if stair.width == stair.k:
        yield ()
        return
    for o in horizontal_offsets(stair):
        nxt = linking_stair(stair, Direction.DECREASING).window(o).stair
        for rest in _offset_sequences(nxt):
            yield (o,) + rest


@lru_cache(maxsize=None)
def _all_chambers(k: int) -> tuple[Chamber, ...]:
    return tuple(
        Chamber(k, r, offsets)
        for r in range(k)
        for offsets in _offset_sequences(Stair(k, r, DOWN * (k - 1)))
    )


def enumerate_chambers(k: int) -> list[Chamber]:
    """All k! chambers, ordered by (first_rep, offsets)."""
    check_order(k)
    return list(_all_chambers(k))


def representative_theta(chamber: Chamber) -> StabilityCondition:
    return chamber.representative_theta


def contains(chamber: Chamber, theta: StabilityCondition) -> bool:
    if theta.k != chamber.k:
        raise ValueError(f"θ has k={theta.k} but the chamber has k={chamber.k}")
    return all(theta.mask_value(m) > 0 for m in chamber.inequality_masks)


def chamber_from_stairs(stairs: list[Stair]) -> Chamber:
    """Recover offsets from a width-ordered chain of stairs.

    Raises ValueError if consecutive stairs are not linked by a
    horizontal-entry window.
    """
    offsets = []
    for cur, nxt in zip(stairs, stairs[1:]):
        link = linking_stair(cur, Direction.DECREASING)
        found = [o for o in horizontal_offsets(cur) if link.window(o).stair == nxt]
        if not found:
            raise ValueError(f"{nxt} is not a horizontal-entry window of {cur}")
        offsets.append(found[0])
    chamber = Chamber(stairs[0].k, stairs[0].first_rep, tuple(offsets))
    if list(chamber.stairs) != list(stairs):
        raise ValueError("stairs do not start with a column")
    return chamber


def chamber_of_theta(k: int, theta: StabilityCondition) -> Chamber:
    witness = genericity_witness(k, theta)
    if witness is not None:
        raise NotGenericError(f"θ = {theta} is not generic: {witness}", witness)
    stable = sorted(
        (s for s in enumerate_stairs(k) if classify(s, theta) is Stability.STABLE),
        key=lambda s: s.width,
    )
    chamber = chamber_from_stairs(stable)
    if not contains(chamber, theta):
        raise RuntimeError(f"{chamber} assembled from stable stairs rejects θ = {theta}")
    return chamber


def _ascend(stair: Stair) -> Stair:
    return linking_stair(stair, Direction.DECREASING).window(horizontal_offsets(stair)[0]).stair


def _descend(stair: Stair) -> Stair:
    # Largest offset whose increasing-link window leaves through a vertical cut.
    o = max(o for o in range(1, stair.k) if stair.steps[o - 1] == RIGHT)
    return linking_stair(stair, Direction.INCREASING).window(o).stair


@lru_cache(maxsize=None)
def simple_chamber_of(stair: Stair) -> Chamber:
    """The simple chamber in which ``stair`` is characteristic."""
    up = [stair]
    while up[-1].width < stair.k:
        up.append(_ascend(up[-1]))
    down = [stair]
    while down[-1].width > 1:
        down.append(_descend(down[-1]))
    chain = down[:0:-1] + up
    chamber = chamber_from_stairs(chain)
    if stair not in characteristic_stairs(chamber):
        raise RuntimeError(f"{stair} is not characteristic in its simple chamber {chamber}")
    return chamber


def characteristic_stairs(chamber: Chamber) -> list[Stair]:
    gens = set(chamber.path.generators)
    return [
        s
        for s, p in zip(chamber.stairs, chamber.positions)
        if {g + p for g in s.generators} == gens
    ]


def is_simple(chamber: Chamber) -> bool:
    return bool(characteristic_stairs(chamber))


def enumerate_simple_chambers(k: int) -> list[Chamber]:
    """The k·2^(k-2) simple chambers, found by two independent routes.

    Raises RuntimeError if filtering all chambers and collecting
    ``simple_chamber_of`` over all stairs disagree.
    """
    check_order(k)
    filtered = {c.key: c for c in enumerate_chambers(k) if is_simple(c)}
    collected = {}
    for s in enumerate_stairs(k):
        c = simple_chamber_of(s)
        collected[c.key] = c
    if filtered.keys() != collected.keys():
        raise RuntimeError(
            f"simple chambers disagree at k={k}: {len(filtered)} by filtering, "
            f"{len(collected)} by construction"
        )
    return sorted(filtered.values(), key=lambda c: (c.first_rep, c.offsets))


def _cones_meet(a: Stair, b: Stair) -> bool:
    """Decide exactly whether both stairs are stable for some common θ.

    A common θ is searched among small combinations of the favorite
    conditions.  Emptiness is certified by disjoint inequality subsets that
    cover every irrep, since their values would sum to both 0 and > 0.
    Raises RuntimeError when neither is found.
    """
    masks = set(proper_content_masks(a)) | set(proper_content_masks(b))
    fa, fb = favorite_condition(a), favorite_condition(b)
    for wa, wb in ((1, 1), (2, 1), (1, 2), (3, 1), (1, 3)):
        theta = fa.scaled(wa) + fb.scaled(wb)
        if all(theta.mask_value(m) > 0 for m in masks):
            return True
    if _exact_cover(sorted(masks), (1 << a.k) - 1):
        return False
    raise RuntimeError(f"could not decide whether the cones of {a} and {b} meet")


def _exact_cover(masks: list[int], target: int) -> bool:
    if target == 0:
        return True
    low = target & -target
    return any(
        _exact_cover(masks, target ^ m)
        for m in masks
        if m & low and m & target == m
    )


def compatible_pair(a: Stair, b: Stair, direction: Direction) -> bool:
    """Whether ``b`` neighbours ``a`` in some chamber.

    Three criteria are evaluated and must agree: the height changes by one,
    the window has the expected cut, and the stability cones of a and b meet.
    ``b == a`` is never compatible.  Raises ValueError if ``b`` is not a
    window of the linking stair of ``a`` and RuntimeError if the criteria
    disagree.
    """
    direction = Direction(direction)
    link = linking_stair(a, direction)
    found = [w for w in link.windows() if w.stair == b]
    if not found:
        raise ValueError(f"{b} is not a window of the {direction.value} linking stair of {a}")
    if b == a:
        return False
    window = found[0]
    if direction is Direction.DECREASING:
        by_height = b.height == a.height - 1
        by_cut = window.entry_cut is Cut.HORIZONTAL
    else:
        by_height = b.height == a.height + 1
        by_cut = window.exit_cut is Cut.VERTICAL
    by_cones = _cones_meet(a, b)
    if not by_height == by_cut == by_cones:
        raise RuntimeError(
            f"criteria disagree for {a} -> {b} ({direction.value}): "
            f"height={by_height} cut={by_cut} cones={by_cones}"
        )
    return by_height


def count_by_generators(k: int) -> dict[int, int]:
    """Number of generator classes with r generators, by the closed formula."""
    check_order(k)
    counts = {1: k}
    for r in range(2, (k + 1) // 2 + 1):
        counts[r] = k * sum(math.comb(k - 2 - j, 2 * r - 3) for j in range(k - 2 * r + 2))
    return counts


def generator_classes(k: int) -> dict[int, int]:
    """Number of generator classes with r generators, by grouping all stairs."""
    classes = {family_key(s): len(s.generators) for s in enumerate_stairs(k)}
    counts: dict[int, int] = {}
    for r in classes.values():
        counts[r] = counts.get(r, 0) + 1
    return dict(sorted(counts.items()))
