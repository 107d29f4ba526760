"""Exact stability conditions and classification of stairs."""

from __future__ import annotations

import enum
from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property, lru_cache
from typing import Iterable

from .constellations import proper_content_masks
from .stairs import Stair, StepPath, check_order, enumerate_stairs

# Above this many irreps the subset-sum table is skipped in favour of summing
# each mask directly.
_TABLE_LIMIT = 16


class Stability(enum.Enum):
    STABLE = "STABLE"
    STRICTLY_SEMISTABLE = "STRICTLY_SEMISTABLE"
    UNSTABLE = "UNSTABLE"


class NotGenericError(ValueError):
    """θ lies on a wall; ``witness`` says why."""

    def __init__(self, message: str, witness: "GenericityWitness"):
        super().__init__(message)
        self.witness = witness


def _to_fraction(v) -> Fraction:
    if isinstance(v, float):
        raise TypeError(f"floats are not accepted as stability values: {v!r}")
    return Fraction(v)


@dataclass(frozen=True)
class StabilityCondition:
    k: int
    values: tuple[Fraction, ...]

    def __post_init__(self):
        check_order(self.k)
        vals = tuple(_to_fraction(v) for v in self.values)
        object.__setattr__(self, "values", vals)
        if len(vals) != self.k:
            raise ValueError(f"expected {self.k} values, got {len(vals)}")
        if sum(vals) != 0:
            raise ValueError(f"values must sum to 0, got {sum(vals)}")

    @classmethod
    def of(cls, values: Iterable) -> "StabilityCondition":
        vals = tuple(values)
        return cls(len(vals), vals)

    def __add__(self, other: "StabilityCondition") -> "StabilityCondition":
        if other.k != self.k:
            raise ValueError(f"cannot add conditions for k={self.k} and k={other.k}")
        return StabilityCondition(self.k, tuple(a + b for a, b in zip(self.values, other.values)))

    def scaled(self, c) -> "StabilityCondition":
        c = _to_fraction(c)
        return StabilityCondition(self.k, tuple(c * v for v in self.values))

    @cached_property
    def _sums(self) -> tuple[Fraction, ...] | None:
        if self.k > _TABLE_LIMIT:
            return None
        table = [Fraction(0)] * (1 << self.k)
        for mask in range(1, 1 << self.k):
            low = mask & -mask
            table[mask] = table[mask ^ low] + self.values[low.bit_length() - 1]
        return tuple(table)

    def mask_value(self, mask: int) -> Fraction:
        table = self._sums
        if table is not None:
            return table[mask]
        return sum((v for i, v in enumerate(self.values) if mask >> i & 1), Fraction(0))

    def __str__(self) -> str:
        return "(" + ", ".join(str(v) for v in self.values) + ")"


@dataclass(frozen=True)
class ConeInequality:
    """The strict inequality Σ_{i ∈ subset} θ_i > 0."""

    subset: frozenset[int]

    @property
    def mask(self) -> int:
        return sum(1 << i for i in self.subset)

    def holds(self, theta: StabilityCondition) -> bool:
        return theta.mask_value(self.mask) > 0


def mask_of(reps: Iterable[int]) -> int:
    return sum(1 << i for i in set(reps))


def reps_of(mask: int) -> frozenset[int]:
    return frozenset(i for i in range(mask.bit_length()) if mask >> i & 1)


def theta_of(theta: StabilityCondition, reps: Iterable[int]) -> Fraction:
    reps = set(reps)
    if any(not 0 <= i < theta.k for i in reps):
        raise ValueError(f"irreps {sorted(reps)} not all in 0..{theta.k - 1}")
    return theta.mask_value(mask_of(reps))


def _check_k(stair: StepPath, theta: StabilityCondition) -> None:
    if stair.k != theta.k:
        raise ValueError(f"stair has k={stair.k} but θ has k={theta.k}")


def classify(stair: Stair, theta: StabilityCondition) -> Stability:
    _check_k(stair, theta)
    zero = False
    for mask in proper_content_masks(stair):
        value = theta.mask_value(mask)
        if value < 0:
            return Stability.UNSTABLE
        if value == 0:
            zero = True
    return Stability.STRICTLY_SEMISTABLE if zero else Stability.STABLE


@lru_cache(maxsize=None)
def favorite_condition(stair: Stair) -> StabilityCondition:
    last = stair.k - 1
    values = [Fraction(0)] * stair.k
    for t in stair.generators:
        values[stair.irrep_at(t)] -= 1 if t in (0, last) else 2
    for t in stair.antigenerators:
        values[stair.irrep_at(t)] += 1 if t in (0, last) else 2
    return StabilityCondition(stair.k, tuple(values))


def cone_inequalities(stair: Stair) -> frozenset[ConeInequality]:
    return frozenset(ConeInequality(reps_of(m)) for m in proper_content_masks(stair))


@dataclass(frozen=True)
class GenericityWitness:
    """Why a condition is not generic: a strictly semistable stair, or a
    width with the wrong number of stable stairs."""

    semistable: Stair | None = None
    width: int | None = None
    stable_count: int | None = None

    def __str__(self) -> str:
        if self.semistable is not None:
            return f"stair {self.semistable} is strictly semistable"
        return f"{self.stable_count} stable stairs of width {self.width}, expected 1"


def stable_stairs(k: int, theta: StabilityCondition) -> list[Stair]:
    return [s for s in enumerate_stairs(k) if classify(s, theta) is Stability.STABLE]


def genericity_witness(k: int, theta: StabilityCondition) -> GenericityWitness | None:
    """None when θ is generic over the toric constellations."""
    check_order(k)
    if theta.k != k:
        raise ValueError(f"θ has k={theta.k}, expected {k}")
    by_width = [0] * (k + 1)
    for stair in enumerate_stairs(k):
        status = classify(stair, theta)
        if status is Stability.STRICTLY_SEMISTABLE:
            return GenericityWitness(semistable=stair)
        if status is Stability.STABLE:
            by_width[stair.width] += 1
    for width in range(1, k + 1):
        if by_width[width] != 1:
            return GenericityWitness(width=width, stable_count=by_width[width])
    return None


def is_generic(k: int, theta: StabilityCondition) -> bool:
    return genericity_witness(k, theta) is None
