"""Stairs, stability chambers and tautological fibers for cyclic groups in SL(2, C)."""

from .chambers import (
    Chamber,
    InvalidCutError,
    build_chamber,
    chamber_of_theta,
    characteristic_stairs,
    compatible_pair,
    contains,
    count_by_generators,
    enumerate_chambers,
    enumerate_simple_chambers,
    representative_theta,
    simple_chamber_of,
)
from .constellations import Submodule, rep_content, submodules
from .render import render_ascii, render_svg
from .serialize import SchemaError, emit_json, parse_json
from .stability import (
    ConeInequality,
    NotGenericError,
    Stability,
    StabilityCondition,
    classify,
    cone_inequalities,
    favorite_condition,
    is_generic,
    theta_of,
)
from .stairs import (
    Cut,
    DegenerateGroupError,
    Direction,
    LinkingStair,
    Monomial,
    RealizedStair,
    Stair,
    StepPath,
    dims,
    enumerate_stairs,
    linking_stair,
    make_stair,
    marker_boxes,
    realize,
    same_generator_family,
    tails,
    windows,
)
from .tautological import (
    ChamberIdeal,
    Kill,
    TautFiber,
    fiber_at_chart,
    ideal_generators,
    kill_test,
    monomial_in_ideal,
    verify_tautological,
)

__version__ = "0.1.0"
