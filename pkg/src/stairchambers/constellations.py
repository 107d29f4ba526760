"""Equivariant submodules of the module carried by a stair.

x sends box t to box t+1 across an 'R' step and y sends box t+1 to box t
across a 'D' step; every other action of x or y on a box is zero.  A set of
boxes spans a submodule exactly when it is closed under these two moves.
Sets of boxes are bitmasks over positions 0..k-1.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

from .stairs import RIGHT, Stair


@dataclass(frozen=True)
class Submodule:
    parent: Stair
    mask: int

    @property
    def members(self) -> frozenset[int]:
        return frozenset(t for t in range(self.parent.k) if self.mask >> t & 1)

    @property
    def content_mask(self) -> int:
        """Irrep content as a bitmask over irreps."""
        return rotate_mask(self.mask, self.parent.first_rep, self.parent.k)

    def __len__(self) -> int:
        return bin(self.mask).count("1")


def rotate_mask(mask: int, shift: int, k: int) -> int:
    """Relabel bit t as bit (t + shift) mod k."""
    full = (1 << k) - 1
    shift %= k
    return ((mask << shift) | (mask >> (k - shift))) & full


def is_closed(stair: Stair, mask: int) -> bool:
    for t, s in enumerate(stair.steps):
        here = mask >> t & 1
        there = mask >> (t + 1) & 1
        if s == RIGHT:
            if here and not there:
                return False
        elif there and not here:
            return False
    return True


@lru_cache(maxsize=None)
def submodule_masks(stair: Stair) -> tuple[int, ...]:
    """All closed box sets, including empty and full, sorted by (size, members)."""
    # Grow closed sets box by box: box t is either in or out, and its step to
    # box t+1 forces or forbids the next choice.
    masks = [0, 1]
    for t, s in enumerate(stair.steps):
        grown = []
        for m in masks:
            inside = m >> t & 1
            if s == RIGHT:
                grown.append(m | 1 << (t + 1))
                if not inside:
                    grown.append(m)
            else:
                grown.append(m)
                if inside:
                    grown.append(m | 1 << (t + 1))
        masks = grown
    return tuple(sorted(masks, key=_mask_order))


def _mask_order(mask: int) -> tuple[int, tuple[int, ...]]:
    members = tuple(t for t in range(mask.bit_length()) if mask >> t & 1)
    return len(members), members


@lru_cache(maxsize=None)
def proper_content_masks(stair: Stair) -> tuple[int, ...]:
    """Irrep contents of the proper nonzero submodules, deduplicated."""
    full = (1 << stair.k) - 1
    seen = dict.fromkeys(
        rotate_mask(m, stair.first_rep, stair.k)
        for m in submodule_masks(stair)
        if m not in (0, full)
    )
    return tuple(seen)


def submodules(stair: Stair, proper_nonzero: bool = True) -> list[Submodule]:
    full = (1 << stair.k) - 1
    return [
        Submodule(stair, m)
        for m in submodule_masks(stair)
        if not proper_nonzero or m not in (0, full)
    ]


def rep_content(sub: Submodule) -> frozenset[int]:
    return frozenset(sub.parent.irrep_at(t) for t in sub.members)
