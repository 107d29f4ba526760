"""Fibers of the tautological bundle at the toric chart origins.

The chamber stair, realized at its minimal anchor, has lower corners
x^α_1 y^β_1, ..., x^α_s y^β_s; these generate the monomial ideal K.  On
chart j the fiber is spanned by the monomials of K that none of three
single-step rules kill:

  (A_j)  m · x^-j y^(k-j)        lies in K
  (C_j)  m · x^(j-1) y^-(k-j+1)  lies in K
  (XY)   m · x^-1 y^-1           lies in K

Each rule needs the shifted exponents to stay non-negative.  On chart j the
relations are a_j·y^(k-j) = x^j, c_j·x^(j-1) = y^(k-j+1) and a_j·c_j = xy,
and a monomial dies in the fiber exactly when one rewrite lands it in K.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass

from .chambers import Chamber
from .stairs import Monomial, RealizedStair, Stair, StepPath, check_order, path_from_boxes


class Kill(enum.Enum):
    KILLED_A = "KILLED_A"
    KILLED_C = "KILLED_C"
    KILLED_XY = "KILLED_XY"
    SURVIVES = "SURVIVES"


class FiberError(RuntimeError):
    """A chart fiber is not a k-box stair."""


@dataclass(frozen=True)
class ChamberIdeal:
    k: int
    generators: tuple[Monomial, ...]

    def __post_init__(self):
        check_order(self.k)
        gens = tuple(Monomial(*g) for g in self.generators)
        object.__setattr__(self, "generators", gens)
        if not gens:
            raise ValueError("an ideal needs at least one generator")
        for g, h in zip(gens, gens[1:]):
            if not (g.a < h.a and g.b > h.b):
                raise ValueError(f"generators {tuple(g)}, {tuple(h)} are not staircase ordered")

    def __contains__(self, m) -> bool:
        a, b = m
        return a >= 0 and b >= 0 and any(g.a <= a and g.b <= b for g in self.generators)


@dataclass(frozen=True)
class ChartPresentation:
    """Chart j: the shift vectors of the three killing rules."""

    k: int
    j: int

    def __post_init__(self):
        check_order(self.k)
        if not 1 <= self.j <= self.k:
            raise ValueError(f"chart {self.j} not in 1..{self.k}")

    @property
    def relations(self) -> tuple[str, str, str]:
        k, j = self.k, self.j
        return (
            f"a_{j}*y^{k - j} - x^{j}",
            f"c_{j}*x^{j - 1} - y^{k - j + 1}",
            f"a_{j}*c_{j} - x*y",
        )

    @property
    def shift_a(self) -> tuple[int, int]:
        return -self.j, self.k - self.j

    @property
    def shift_c(self) -> tuple[int, int]:
        return self.j - 1, -(self.k - self.j + 1)


def ideal_generators(chamber: Chamber) -> ChamberIdeal:
    return ChamberIdeal(chamber.k, chamber.chamber_stair.generator_monomials)


def monomial_in_ideal(ideal: ChamberIdeal, m) -> bool:
    return Monomial(*m) in ideal


def kill_test(ideal: ChamberIdeal, k: int, j: int, m) -> Kill:
    if k != ideal.k:
        raise ValueError(f"ideal has k={ideal.k}, got k={k}")
    m = Monomial(*m)
    if m not in ideal:
        raise ValueError(f"x^{m.a}y^{m.b} is not in the ideal")
    chart = ChartPresentation(k, j)
    if m.shifted(*chart.shift_a) in ideal:
        return Kill.KILLED_A
    if m.shifted(*chart.shift_c) in ideal:
        return Kill.KILLED_C
    if m.shifted(-1, -1) in ideal:
        return Kill.KILLED_XY
    return Kill.SURVIVES


@dataclass(frozen=True)
class TautFiber:
    j: int
    survivors: frozenset[Monomial]
    as_stair: RealizedStair


def surviving_monomials(chamber: Chamber, j: int, margin: int = 2) -> frozenset[Monomial]:
    """Scan a ``margin * k`` neighbourhood of the staircase for survivors."""
    ideal = ideal_generators(chamber)
    k = chamber.k
    ChartPresentation(k, j)
    top_a = ideal.generators[-1].a + margin * k
    top_b = ideal.generators[0].b + margin * k
    return frozenset(
        Monomial(a, b)
        for a in range(top_a + 1)
        for b in range(top_b + 1)
        if (a, b) in ideal and kill_test(ideal, k, j, (a, b)) is Kill.SURVIVES
    )


def fiber_at_chart(chamber: Chamber, j: int) -> TautFiber:
    """Raises FiberError if the survivors are not a k-box stair of width j."""
    k = chamber.k
    survivors = surviving_monomials(chamber, j)
    if len(survivors) != k:
        raise FiberError(f"chart {j} of {chamber}: {len(survivors)} survivors, expected {k}")
    try:
        path = path_from_boxes(k, survivors)
    except ValueError as exc:
        raise FiberError(f"chart {j} of {chamber}: survivors are not a stair ({exc})") from exc
    if path.width != j:
        raise FiberError(f"chart {j} of {chamber}: survivors have width {path.width}")
    top_left = min(survivors, key=lambda m: (m.a, -m.b))
    return TautFiber(j, survivors, RealizedStair(path, top_left))


def closed_form_fiber(chamber: Chamber, j: int) -> frozenset[Monomial]:
    """Fiber basis at chart 1 or chart k from the outermost generators."""
    k = chamber.k
    gens = ideal_generators(chamber).generators
    if j == 1:
        g = gens[0]
        return frozenset(Monomial(g.a, g.b + t) for t in range(k))
    if j == k:
        g = gens[-1]
        return frozenset(Monomial(g.a + t, g.b) for t in range(k))
    raise ValueError(f"closed form known only for charts 1 and {k}, got {j}")


@dataclass(frozen=True)
class ChartResult:
    j: int
    expected: Stair
    found: StepPath | None
    survivors: tuple[Monomial, ...]
    message: str = ""

    @property
    def passed(self) -> bool:
        return self.found == self.expected


@dataclass(frozen=True)
class TautReport:
    chamber: Chamber
    charts: tuple[ChartResult, ...]

    @property
    def passed(self) -> bool:
        return all(c.passed for c in self.charts)


def verify_tautological(chamber: Chamber) -> TautReport:
    results = []
    for j, expected in enumerate(chamber.stairs, start=1):
        try:
            fiber = fiber_at_chart(chamber, j)
        except FiberError as exc:
            survivors = tuple(sorted(surviving_monomials(chamber, j)))
            results.append(ChartResult(j, expected, None, survivors, str(exc)))
            continue
        found = fiber.as_stair.stair
        message = "" if found == expected else f"found {found}, expected {expected}"
        results.append(ChartResult(j, expected, found, tuple(sorted(fiber.survivors)), message))
    return TautReport(chamber, tuple(results))
