"""The bundled verification suite run by ``stairchambers verify``.

Each check returns a CheckResult; ``run_suite`` runs every check that applies
to the given k and condenses the outcome into a CountReport.
"""

from __future__ import annotations

import itertools
import math
import random
from dataclasses import dataclass, field
from fractions import Fraction

from .chambers import (
    Chamber,
    chamber_of_theta,
    compatible_pair,
    contains,
    count_by_generators,
    enumerate_chambers,
    enumerate_simple_chambers,
    generator_classes,
    horizontal_offsets,
)
from .stability import (
    Stability,
    StabilityCondition,
    classify,
    favorite_condition,
    is_generic,
)
from .stairs import DOWN, Direction, Stair, enumerate_stairs, linking_stair
from .tautological import closed_form_fiber, fiber_at_chart, verify_tautological

MAX_K = 8
SEED = 20240229


@dataclass(frozen=True)
class CheckResult:
    name: str
    passed: bool
    detail: str = ""

    def line(self) -> str:
        return f"{'PASS' if self.passed else 'FAIL'} {self.name}: {self.detail}"


@dataclass(frozen=True)
class CountReport:
    k: int
    chambers: int
    simple: int
    stairs: int
    taut: str
    by_generators: dict[int, int] = field(default_factory=dict)
    checks: tuple[CheckResult, ...] = ()

    @property
    def passed(self) -> bool:
        return all(c.passed for c in self.checks)

    def summary(self) -> str:
        return f"chambers={self.chambers} simple={self.simple} stairs={self.stairs} taut={self.taut}"


def brute_force_classify(stair: Stair, theta: StabilityCondition) -> Stability:
    """Classify by testing every subset of boxes for closure under x and y.

    Independent of the step-word closure rule: x moves a box one column
    right, y one row up, and a subset is a submodule when neither move leaves
    it while staying inside the stair.
    """
    k = stair.k
    where = {pos: t for t, pos in enumerate(stair.offsets)}
    up = [where.get((x, y + 1)) for x, y in stair.offsets]
    right = [where.get((x + 1, y)) for x, y in stair.offsets]
    values = []
    for size in range(1, k):
        for members in itertools.combinations(range(k), size):
            chosen = set(members)
            if all(
                (right[t] is None or right[t] in chosen) and (up[t] is None or up[t] in chosen)
                for t in chosen
            ):
                values.append(sum(theta.values[stair.irrep_at(t)] for t in chosen))
    if any(v < 0 for v in values):
        return Stability.UNSTABLE
    if any(v == 0 for v in values):
        return Stability.STRICTLY_SEMISTABLE
    return Stability.STABLE


def random_theta(k: int, rng: random.Random, spread: int = 6) -> StabilityCondition:
    values = [Fraction(rng.randint(-spread, spread), rng.randint(1, 3)) for _ in range(k - 1)]
    return StabilityCondition(k, tuple(values) + (-sum(values),))


def random_chamber(k: int, rng: random.Random) -> Chamber:
    """Uniform over all k! chambers: step j always offers k - j choices."""
    stair = Stair(k, rng.randrange(k), DOWN * (k - 1))
    first_rep, offsets = stair.first_rep, []
    while stair.width < k:
        o = rng.choice(horizontal_offsets(stair))
        offsets.append(o)
        stair = linking_stair(stair, Direction.DECREASING).window(o).stair
    return Chamber(k, first_rep, tuple(offsets))


def cg_theta(k: int) -> StabilityCondition:
    return StabilityCondition(k, (Fraction(2 - 2 * k),) + (Fraction(2),) * (k - 1))


def check_chambers(k: int) -> CheckResult:
    chambers = enumerate_chambers(k)
    keys = {c.key for c in chambers}
    ok = len(chambers) == math.factorial(k) == len(keys)
    return CheckResult("chambers", ok, f"{len(chambers)} chambers, {len(keys)} distinct keys, expected {math.factorial(k)}")


def check_simple(k: int) -> CheckResult:
    try:
        simple = enumerate_simple_chambers(k)
    except RuntimeError as exc:
        return CheckResult("simple", False, str(exc))
    expected = k * 2 ** (k - 2)
    return CheckResult("simple", len(simple) == expected, f"{len(simple)} simple chambers, expected {expected}")


def check_stairs(k: int) -> CheckResult:
    n = len(set(enumerate_stairs(k)))
    formula = count_by_generators(k)
    direct = generator_classes(k)
    bound = (k + 1) // 2
    ok = (
        n == k * 2 ** (k - 1)
        and formula == direct
        and sum(formula.values()) == k * 2 ** (k - 2)
        and max(direct) <= bound
    )
    return CheckResult("stairs", ok, f"{n} stairs; generator classes {direct}, formula {formula}")


def check_oracle(k: int, samples: int = 50) -> CheckResult:
    rng = random.Random(SEED + k)
    thetas = [random_theta(k, rng) for _ in range(samples)]
    bad = [
        (s, t)
        for t in thetas
        for s in enumerate_stairs(k)
        if classify(s, t) is not brute_force_classify(s, t)
    ]
    detail = f"{samples} random θ x {k * 2 ** (k - 1)} stairs"
    if bad:
        detail += f"; first disagreement {bad[0][0]} at θ={bad[0][1]}"
    return CheckResult("oracle", not bad, detail)


def check_favorite(k: int) -> CheckResult:
    unstable = []
    generic = []
    for s in enumerate_stairs(k):
        f = favorite_condition(s)
        if classify(s, f) is not Stability.STABLE:
            unstable.append(s)
        if is_generic(k, f):
            generic.append(s)
    detail = f"{len(unstable)} not stable under own condition, {len(generic)} with generic condition"
    if generic:
        detail += " (e.g. " + ", ".join(str(s) for s in generic[:3]) + ")"
    return CheckResult("favorite", not unstable and not generic, detail)


def check_representatives(k: int) -> CheckResult:
    chambers = enumerate_chambers(k)
    thetas = [c.representative_theta for c in chambers]
    for c, t in zip(chambers, thetas):
        if not all(classify(s, t) is Stability.STABLE for s in c.stairs):
            return CheckResult("representative", False, f"{c}: a stair is not stable")
        if not is_generic(k, t) or not contains(c, t):
            return CheckResult("representative", False, f"{c}: representative not generic or not contained")
    for i, c in enumerate(chambers):
        for j, t in enumerate(thetas):
            if i != j and contains(c, t):
                return CheckResult("representative", False, f"{c} contains the representative of {chambers[j]}")
    return CheckResult("representative", True, f"{len(chambers)} chambers pairwise separated")


def check_cg(k: int) -> CheckResult:
    chamber = chamber_of_theta(k, cg_theta(k))
    expected = [Stair(k, i % k, DOWN * (k - i) + "R" * (i - 1)) for i in range(1, k + 1)]
    by_zero = all(s.irrep_at(g) == 0 for s in chamber.stairs for g in s.generators)
    ok = list(chamber.stairs) == expected and by_zero
    return CheckResult("cg", ok, f"{chamber}")


def check_pairs(k: int) -> CheckResult:
    truth = {(a, b) for c in enumerate_chambers(k) for a, b in zip(c.stairs, c.stairs[1:])}
    n = 0
    for a in enumerate_stairs(k):
        for direction in Direction:
            for w in linking_stair(a, direction).windows():
                b = w.stair
                try:
                    got = compatible_pair(a, b, direction)
                except RuntimeError as exc:
                    return CheckResult("pairs", False, str(exc))
                pair = (a, b) if direction is Direction.DECREASING else (b, a)
                if got != (pair in truth):
                    return CheckResult("pairs", False, f"{a} -> {b} ({direction.value}) disagrees with chambers")
                n += 1
    return CheckResult("pairs", True, f"{n} windows, criteria agree with chamber enumeration")


def _taut_sample(k: int, samples: int) -> list[Chamber]:
    if k <= 5:
        return enumerate_chambers(k)
    rng = random.Random(SEED + k)
    return [random_chamber(k, rng) for _ in range(samples)]


def check_tautological(k: int, samples: int = 100) -> CheckResult:
    chambers = _taut_sample(k, samples)
    for c in chambers:
        report = verify_tautological(c)
        if not report.passed:
            bad = next(r for r in report.charts if not r.passed)
            return CheckResult("taut", False, f"{c} chart {bad.j}: {bad.message}")
    return CheckResult("taut", True, f"{len(chambers)} chambers, all charts match")


def check_closed_form(k: int) -> CheckResult:
    for c in enumerate_chambers(k):
        for j in (1, k):
            if fiber_at_chart(c, j).survivors != closed_form_fiber(c, j):
                return CheckResult("closed_form", False, f"{c} chart {j}")
    return CheckResult("closed_form", True, "charts 1 and k match the quotient bases")


def check_roundtrip(k: int, samples: int = 200) -> CheckResult:
    from .serialize import emit_json, parse_json

    rng = random.Random(SEED + k)
    values: list = list(enumerate_stairs(k))
    values += [s.realize() for s in values]
    values += [random_theta(k, rng) for _ in range(20)]
    values += [random_chamber(k, rng) for _ in range(20)]
    values = rng.sample(values, min(samples, len(values)))
    bad = [v for v in values if parse_json(emit_json(v)) != v]
    return CheckResult("roundtrip", not bad, f"{len(values)} documents")


def run_suite(k: int) -> CountReport:
    """Run every check applicable at k (2 <= k <= MAX_K)."""
    if not 2 <= k <= MAX_K:
        raise ValueError(f"verify supports k in 2..{MAX_K}, got {k}")
    checks = [check_chambers(k), check_simple(k), check_stairs(k)]
    if k <= 6:
        checks += [check_oracle(k), check_representatives(k), check_cg(k)]
    if k <= 7:
        checks.append(check_favorite(k))
    if k <= 5:
        checks += [check_pairs(k), check_closed_form(k)]
    taut = check_tautological(k)
    checks += [taut, check_roundtrip(k)]
    try:
        simple = len(enumerate_simple_chambers(k))
    except RuntimeError:
        simple = -1
    return CountReport(
        k=k,
        chambers=len(enumerate_chambers(k)),
        simple=simple,
        stairs=len(enumerate_stairs(k)),
        taut="pass" if taut.passed else "fail",
        by_generators=count_by_generators(k),
        checks=tuple(checks),
    )
