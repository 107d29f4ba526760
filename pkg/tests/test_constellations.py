import itertools

import pytest

from stairchambers.constellations import is_closed, rep_content, submodule_masks, submodules
from stairchambers.stairs import enumerate_stairs, make_stair


def geometric_closure_oracle(stair):
    """Closed box sets by brute force: x moves right, y moves up."""
    where = {pos: t for t, pos in enumerate(stair.offsets)}
    found = []
    for mask in range(1 << stair.k):
        chosen = {t for t in range(stair.k) if mask >> t & 1}
        ok = True
        for t in chosen:
            x, y = stair.offsets[t]
            for nbr in ((x + 1, y), (x, y + 1)):
                if nbr in where and where[nbr] not in chosen:
                    ok = False
        if ok:
            found.append(mask)
    return found


def members(stair, **kw):
    return [sorted(s.members) for s in submodules(stair, **kw)]


def test_column():
    assert members(make_stair(3, 1, "DD")) == [[0], [0, 1]]


def test_row():
    assert members(make_stair(3, 0, "RR")) == [[2], [1, 2]]


def test_hook():
    assert members(make_stair(3, 2, "DR")) == [[0], [2], [0, 2]]


def test_improper_included_without_flag():
    found = members(make_stair(3, 2, "DR"), proper_nonzero=False)
    assert found[0] == [] and found[-1] == [0, 1, 2]


def test_rep_content():
    column = make_stair(3, 1, "DD")
    subs = submodules(column, proper_nonzero=False)
    by_members = {frozenset(s.members): s for s in subs}
    assert rep_content(by_members[frozenset({0, 1})]) == {1, 2}
    assert rep_content(by_members[frozenset({0, 1, 2})]) == {0, 1, 2}
    assert rep_content(by_members[frozenset()]) == set()


@pytest.mark.parametrize("k", range(2, 7))
def test_matches_brute_force(k):
    for stair in enumerate_stairs(k):
        assert sorted(submodule_masks(stair)) == geometric_closure_oracle(stair)


@pytest.mark.parametrize("k", range(2, 7))
def test_runs_have_allowed_cuts(k):
    for stair in enumerate_stairs(k):
        for sub in submodules(stair):
            chosen = sub.members
            for t in chosen:
                if t > 0 and t - 1 not in chosen:
                    # entering a run: only a vertical left cut is allowed
                    assert stair.steps[t - 1] == "R"
                if t < k - 1 and t + 1 not in chosen:
                    # leaving a run: only a horizontal right cut is allowed
                    assert stair.steps[t] == "D"


@pytest.mark.parametrize("k", [4, 5])
def test_union_and_intersection(k):
    for stair in enumerate_stairs(k):
        masks = submodule_masks(stair)
        for a, b in itertools.product(masks, repeat=2):
            assert is_closed(stair, a | b)
            assert is_closed(stair, a & b)


def test_content_is_injective():
    for stair in enumerate_stairs(5):
        for sub in submodules(stair):
            assert len(rep_content(sub)) == len(sub.members)
