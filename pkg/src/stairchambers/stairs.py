"""Stairs on the representation tableau of Z/kZ.

A stair is stored abstractly as ``(k, first_rep, steps)``: box 0 is the
upper-left box, each ``'R'`` step moves one box right and each ``'D'`` step
moves one box down.  Box ``t`` carries the irrep ``first_rep + t`` mod k.
Realizing a stair places box 0 on a monomial ``x^a y^b`` whose irrep is
``(a - b) mod k``.
"""

from __future__ import annotations

import enum
import itertools
from dataclasses import dataclass
from functools import cached_property
from typing import NamedTuple

RIGHT = "R"
DOWN = "D"


class DegenerateGroupError(ValueError):
    """Raised for k < 2; the trivial group is not supported."""


class Direction(enum.Enum):
    DECREASING = "DECREASING"
    INCREASING = "INCREASING"


class Cut(enum.Enum):
    HORIZONTAL = "HORIZONTAL"
    VERTICAL = "VERTICAL"
    NONE = "NONE"


class Monomial(NamedTuple):
    """The monomial x^a y^b, also a box of the tableau at column a, row b."""

    a: int
    b: int

    def irrep(self, k: int) -> int:
        return (self.a - self.b) % k

    def shifted(self, da: int, db: int) -> "Monomial":
        return Monomial(self.a + da, self.b + db)

    def divides(self, other: "Monomial") -> bool:
        return self.a <= other.a and self.b <= other.b


def check_order(k: int) -> int:
    if isinstance(k, bool) or not isinstance(k, int):
        raise TypeError(f"k must be an int, got {k!r}")
    if k < 2:
        raise DegenerateGroupError(f"k must be at least 2, got {k}")
    return k


@dataclass(frozen=True)
class StepPath:
    """A connected chain of boxes described by a word over R/D.

    Stairs have exactly k boxes; chamber stairs and linking stairs reuse the
    same arithmetic with longer words.
    """

    k: int
    first_rep: int
    steps: str

    def __post_init__(self):
        check_order(self.k)
        if isinstance(self.first_rep, bool) or not isinstance(self.first_rep, int):
            raise TypeError(f"first_rep must be an int, got {self.first_rep!r}")
        if not 0 <= self.first_rep < self.k:
            raise ValueError(f"first_rep {self.first_rep} not in 0..{self.k - 1}")
        if not isinstance(self.steps, str) or set(self.steps) - {RIGHT, DOWN}:
            raise ValueError(f"steps must be a word over 'R'/'D', got {self.steps!r}")

    @property
    def n_boxes(self) -> int:
        return len(self.steps) + 1

    @property
    def width(self) -> int:
        return self.steps.count(RIGHT) + 1

    @property
    def height(self) -> int:
        return self.steps.count(DOWN) + 1

    def irrep_at(self, t: int) -> int:
        return (self.first_rep + t) % self.k

    @cached_property
    def irreps(self) -> tuple[int, ...]:
        return tuple(self.irrep_at(t) for t in range(self.n_boxes))

    @cached_property
    def offsets(self) -> tuple[tuple[int, int], ...]:
        """Box positions relative to box 0."""
        x = y = 0
        out = [(0, 0)]
        for s in self.steps:
            if s == RIGHT:
                x += 1
            else:
                y -= 1
            out.append((x, y))
        return tuple(out)

    @cached_property
    def generators(self) -> tuple[int, ...]:
        last = self.n_boxes - 1
        st = self.steps
        return tuple(
            t
            for t in range(self.n_boxes)
            if (t == 0 or st[t - 1] == DOWN) and (t == last or st[t] == RIGHT)
        )

    @cached_property
    def antigenerators(self) -> tuple[int, ...]:
        last = self.n_boxes - 1
        st = self.steps
        return tuple(
            t
            for t in range(self.n_boxes)
            if (t == 0 or st[t - 1] == RIGHT) and (t == last or st[t] == DOWN)
        )

    def minimal_anchor(self) -> Monomial:
        """Smallest-degree anchor keeping every box in the first quadrant.

        The anchor must carry irrep ``first_rep``.  When ``(0, height-1)`` has
        the right irrep it is chosen; otherwise the diagram is shifted along
        one axis, preferring the shift of smaller total degree and then the
        lower one.
        """
        k, h = self.k, self.height
        shift = (self.first_rep + h - 1) % k
        along_x = Monomial(shift, h - 1)
        along_y = Monomial(0, h - 1 + (k - shift) % k)
        return min(along_x, along_y, key=lambda m: (m.a + m.b, m.b))

    def realize(self, anchor: Monomial | tuple[int, int] | None = None) -> "RealizedStair":
        if anchor is None:
            anchor = self.minimal_anchor()
        return RealizedStair(self, Monomial(*anchor))

    def __str__(self) -> str:
        return f"({self.first_rep},{self.steps or '-'})"


@dataclass(frozen=True)
class Stair(StepPath):
    """A G-stair: k boxes, one for each irrep of Z/kZ."""

    def __post_init__(self):
        super().__post_init__()
        if len(self.steps) != self.k - 1:
            raise ValueError(
                f"step-word length {len(self.steps)} != k-1 = {self.k - 1}"
            )


@dataclass(frozen=True)
class RealizedStair:
    """A path of boxes placed on the tableau, box 0 at ``anchor``."""

    stair: StepPath
    anchor: Monomial

    def __post_init__(self):
        anchor = Monomial(*self.anchor)
        object.__setattr__(self, "anchor", anchor)
        k = self.stair.k
        if anchor.irrep(k) != self.stair.first_rep:
            raise ValueError(
                f"anchor x^{anchor.a}y^{anchor.b} has irrep {anchor.irrep(k)}, "
                f"expected {self.stair.first_rep}"
            )
        if anchor.a < 0 or anchor.b < self.stair.height - 1:
            raise ValueError(
                f"anchor {tuple(anchor)} puts boxes outside the first quadrant "
                f"(need a >= 0 and b >= {self.stair.height - 1})"
            )

    @cached_property
    def boxes(self) -> tuple[Monomial, ...]:
        return tuple(self.anchor.shifted(*off) for off in self.stair.offsets)

    @property
    def generator_monomials(self) -> tuple[Monomial, ...]:
        return tuple(self.boxes[t] for t in self.stair.generators)


def make_stair(k: int, first_rep: int, steps: str) -> Stair:
    return Stair(k, first_rep, steps)


def enumerate_stairs(k: int) -> list[Stair]:
    check_order(k)
    return [
        Stair(k, r, "".join(word))
        for r in range(k)
        for word in itertools.product((DOWN, RIGHT), repeat=k - 1)
    ]


def realize(stair: StepPath, anchor: Monomial | tuple[int, int] | None = None) -> RealizedStair:
    return stair.realize(anchor)


def marker_boxes(stair: StepPath) -> tuple[frozenset[int], frozenset[int]]:
    """(generators, antigenerators) as sets of box positions."""
    return frozenset(stair.generators), frozenset(stair.antigenerators)


def dims(stair: StepPath) -> tuple[int, int]:
    return stair.height, stair.width


def tails(stair: StepPath) -> tuple[frozenset[int], frozenset[int]]:
    gens = stair.generators
    return (
        frozenset(range(gens[0])),
        frozenset(range(gens[-1] + 1, stair.n_boxes)),
    )


def path_from_boxes(k: int, boxes) -> StepPath:
    """Recover the abstract path from a set of realized boxes.

    Raises ValueError if the boxes do not form a connected chain of unit
    right/down steps.
    """
    ordered = sorted((Monomial(*m) for m in boxes), key=lambda m: (m.a, -m.b))
    if not ordered:
        raise ValueError("no boxes")
    steps = []
    for prev, cur in zip(ordered, ordered[1:]):
        if cur == (prev.a + 1, prev.b):
            steps.append(RIGHT)
        elif cur == (prev.a, prev.b - 1):
            steps.append(DOWN)
        else:
            raise ValueError(f"boxes {tuple(prev)} and {tuple(cur)} are not adjacent")
    path = StepPath(k, ordered[0].irrep(k), "".join(steps))
    if len(steps) == k - 1:
        return Stair(path.k, path.first_rep, path.steps)
    return path


@dataclass(frozen=True)
class Window:
    offset: int
    stair: Stair
    entry_cut: Cut
    exit_cut: Cut


@dataclass(frozen=True)
class LinkingStair:
    """Two copies of ``base`` glued end to end into a 2k-box path."""

    base: Stair
    direction: Direction

    @property
    def k(self) -> int:
        return self.base.k

    @property
    def first_rep(self) -> int:
        return self.base.first_rep

    @cached_property
    def steps(self) -> str:
        glue = RIGHT if self.direction is Direction.DECREASING else DOWN
        return self.base.steps + glue + self.base.steps

    @cached_property
    def path(self) -> StepPath:
        return StepPath(self.k, self.first_rep, self.steps)

    def window(self, offset: int) -> Window:
        k = self.k
        if not 0 <= offset <= k:
            raise ValueError(f"window offset {offset} not in 0..{k}")
        st = self.steps
        entry = Cut.NONE
        if offset > 0:
            entry = Cut.HORIZONTAL if st[offset - 1] == DOWN else Cut.VERTICAL
        exit_ = Cut.NONE
        if offset < k:
            exit_ = Cut.VERTICAL if st[offset + k - 1] == RIGHT else Cut.HORIZONTAL
        stair = Stair(k, (self.first_rep + offset) % k, st[offset : offset + k - 1])
        return Window(offset, stair, entry, exit_)

    def windows(self) -> list[Window]:
        return [self.window(o) for o in range(self.k + 1)]


def linking_stair(stair: Stair, direction: Direction) -> LinkingStair:
    return LinkingStair(stair, Direction(direction))


def windows(link: LinkingStair) -> list[Window]:
    return link.windows()


def family_key(stair: StepPath) -> tuple[int, str]:
    """Generator data up to translation: irrep of the first generator and the
    step word strictly between the first and last generator."""
    gens = stair.generators
    return stair.irrep_at(gens[0]), stair.steps[gens[0] : gens[-1]]


def same_generator_family(stair: Stair) -> list[Stair]:
    """Stairs sharing the generators of ``stair``, differing only in tails.

    Sorted by left-tail length.
    """
    left, right = tails(stair)
    m = len(left) + len(right)
    gen_rep, core = family_key(stair)
    k = stair.k
    return [
        Stair(k, (gen_rep - a) % k, DOWN * a + core + RIGHT * (m - a))
        for a in range(m + 1)
    ]
