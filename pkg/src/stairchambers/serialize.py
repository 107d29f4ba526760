"""JSON documents for stairs, conditions, chambers and reports.

Every emitted document starts with ``kind`` and ``schema_version``.  When
parsing, both may be omitted and the kind is then inferred from the keys, so
hand-written payloads such as ``{"k":3,"first_rep":1,"steps":"DD"}`` work.
Rationals travel as strings, e.g. ``"-4"`` or ``"2/3"``.
"""

from __future__ import annotations

import json
import re
from fractions import Fraction
from typing import Any

from .chambers import Chamber
from .stability import StabilityCondition
from .stairs import Monomial, RealizedStair, Stair, StepPath
from .tautological import ChartResult, TautReport
from .verify import CheckResult, CountReport

SCHEMA_VERSION = 1
KINDS = ("stair", "realized_stair", "theta", "chamber", "fiber_report", "count_report")

_RATIONAL = re.compile(r"-?\d+(/\d+)?")


class SchemaError(ValueError):
    """A document is malformed or violates its schema."""


def kind_of(value) -> str:
    if isinstance(value, Stair):
        return "stair"
    if isinstance(value, RealizedStair):
        return "realized_stair"
    if isinstance(value, StabilityCondition):
        return "theta"
    if isinstance(value, Chamber):
        return "chamber"
    if isinstance(value, TautReport):
        return "fiber_report"
    if isinstance(value, CountReport):
        return "count_report"
    raise TypeError(f"cannot serialize {type(value).__name__}")


def _rational(q: Fraction) -> str:
    return str(q)


def _path_fields(p: StepPath) -> dict[str, Any]:
    return {"first_rep": p.first_rep, "steps": p.steps}


def to_document(value, derived: bool = False) -> dict[str, Any]:
    kind = kind_of(value)
    doc: dict[str, Any] = {"kind": kind, "schema_version": SCHEMA_VERSION}
    if kind == "stair":
        doc.update(k=value.k, **_path_fields(value))
    elif kind == "realized_stair":
        doc.update(k=value.stair.k, **_path_fields(value.stair), anchor=list(value.anchor))
    elif kind == "theta":
        doc.update(k=value.k, values=[_rational(v) for v in value.values])
    elif kind == "chamber":
        doc.update(k=value.k, first_rep=value.first_rep, offsets=list(value.offsets))
        if derived:
            cs = value.chamber_stair
            doc["stairs"] = [_path_fields(s) for s in value.stairs]
            doc["chamber_stair"] = {**_path_fields(cs.stair), "anchor": list(cs.anchor)}
            doc["theta"] = [_rational(v) for v in value.representative_theta.values]
    elif kind == "fiber_report":
        c = value.chamber
        doc.update(
            chamber={"k": c.k, "first_rep": c.first_rep, "offsets": list(c.offsets)},
            passed=value.passed,
            charts=[
                {
                    "j": r.j,
                    "passed": r.passed,
                    "expected": _path_fields(r.expected),
                    "found": None if r.found is None else _path_fields(r.found),
                    "survivors": [list(m) for m in r.survivors],
                    "message": r.message,
                }
                for r in value.charts
            ],
        )
    else:
        doc.update(
            k=value.k,
            chambers=value.chambers,
            simple=value.simple,
            stairs=value.stairs,
            taut=value.taut,
            by_generators=[{"r": r, "count": n} for r, n in value.by_generators.items()],
            checks=[
                {"name": c.name, "passed": c.passed, "detail": c.detail} for c in value.checks
            ],
        )
    return doc


def emit_json(value, derived: bool = False, indent: int | None = None) -> str:
    """Serialize with stable field order; compact unless ``indent`` is given."""
    separators = (",", ":") if indent is None else (",", ": ")
    return json.dumps(
        to_document(value, derived), ensure_ascii=False, indent=indent, separators=separators
    )


def parse_json(text: str, kind: str | None = None):
    """Parse a document; ``kind`` pins the expected kind.

    Raises SchemaError on malformed JSON, schema violations, bad rationals or
    values that fail validation (e.g. θ not summing to zero).
    """
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise SchemaError(f"malformed JSON: {exc}") from exc
    return from_document(doc, kind)


def from_document(doc: Any, kind: str | None = None):
    if not isinstance(doc, dict):
        raise SchemaError("a document must be a JSON object")
    doc = dict(doc)
    declared = doc.pop("kind", None)
    version = doc.pop("schema_version", SCHEMA_VERSION)
    if version != SCHEMA_VERSION:
        raise SchemaError(f"unsupported schema_version {version!r}")
    if declared is None:
        declared = _infer_kind(doc)
    if declared not in KINDS:
        raise SchemaError(f"unknown document kind {declared!r}")
    if kind is not None and declared != kind:
        raise SchemaError(f"expected a {kind} document, got {declared}")
    try:
        return _READERS[declared](doc)
    except SchemaError:
        raise
    except (ValueError, TypeError) as exc:
        raise SchemaError(f"invalid {declared}: {exc}") from exc


def _infer_kind(doc: dict) -> str:
    if "values" in doc:
        return "theta"
    if "offsets" in doc:
        return "chamber"
    if "anchor" in doc:
        return "realized_stair"
    if "steps" in doc:
        return "stair"
    if "charts" in doc:
        return "fiber_report"
    if "checks" in doc:
        return "count_report"
    raise SchemaError(f"cannot infer document kind from keys {sorted(doc)}")


def _fields(doc: dict, required: tuple[str, ...], optional: tuple[str, ...] = ()) -> None:
    missing = [f for f in required if f not in doc]
    if missing:
        raise SchemaError(f"missing field(s) {missing}")
    extra = sorted(set(doc) - set(required) - set(optional))
    if extra:
        raise SchemaError(f"unexpected field(s) {extra}")


def _int(v: Any, name: str) -> int:
    if isinstance(v, bool) or not isinstance(v, int):
        raise SchemaError(f"{name} must be an integer, got {v!r}")
    return v


def _str(v: Any, name: str) -> str:
    if not isinstance(v, str):
        raise SchemaError(f"{name} must be a string, got {v!r}")
    return v


def _bool(v: Any, name: str) -> bool:
    if not isinstance(v, bool):
        raise SchemaError(f"{name} must be a boolean, got {v!r}")
    return v


def _list(v: Any, name: str) -> list:
    if not isinstance(v, list):
        raise SchemaError(f"{name} must be a list, got {v!r}")
    return v


def parse_rational(v: Any) -> Fraction:
    if not isinstance(v, str) or not _RATIONAL.fullmatch(v):
        raise SchemaError(f"not a rational string: {v!r}")
    num, _, den = v.partition("/")
    if den and int(den) == 0:
        raise SchemaError(f"zero denominator in {v!r}")
    return Fraction(int(num), int(den) if den else 1)


def _monomial(v: Any, name: str) -> Monomial:
    pair = _list(v, name)
    if len(pair) != 2:
        raise SchemaError(f"{name} must be [a, b], got {v!r}")
    return Monomial(_int(pair[0], name), _int(pair[1], name))


def _path(k: int, d: Any, name: str) -> StepPath:
    if not isinstance(d, dict):
        raise SchemaError(f"{name} must be an object")
    _fields(d, ("first_rep", "steps"))
    first_rep = _int(d["first_rep"], f"{name}.first_rep")
    steps = _str(d["steps"], f"{name}.steps")
    cls = Stair if len(steps) == k - 1 else StepPath
    return cls(k, first_rep, steps)


def _read_stair(doc: dict) -> Stair:
    _fields(doc, ("k", "first_rep", "steps"))
    return Stair(_int(doc["k"], "k"), _int(doc["first_rep"], "first_rep"), _str(doc["steps"], "steps"))


def _read_realized(doc: dict) -> RealizedStair:
    _fields(doc, ("k", "first_rep", "steps", "anchor"))
    k = _int(doc["k"], "k")
    path = _path(k, {"first_rep": doc["first_rep"], "steps": doc["steps"]}, "stair")
    return RealizedStair(path, _monomial(doc["anchor"], "anchor"))


def _read_theta(doc: dict) -> StabilityCondition:
    _fields(doc, ("k", "values"))
    values = [parse_rational(v) for v in _list(doc["values"], "values")]
    return StabilityCondition(_int(doc["k"], "k"), tuple(values))


def _read_chamber(doc: dict) -> Chamber:
    _fields(doc, ("k", "first_rep", "offsets"), ("stairs", "chamber_stair", "theta"))
    k = _int(doc["k"], "k")
    offsets = tuple(_int(o, "offsets[]") for o in _list(doc["offsets"], "offsets"))
    chamber = Chamber(k, _int(doc["first_rep"], "first_rep"), offsets)
    # Derived blocks are optional, but must agree with the offsets when present.
    if "stairs" in doc:
        stairs = [_path(k, s, "stairs[]") for s in _list(doc["stairs"], "stairs")]
        if stairs != list(chamber.stairs):
            raise SchemaError("stairs block does not match the offsets")
    if "chamber_stair" in doc:
        block = doc["chamber_stair"]
        if not isinstance(block, dict):
            raise SchemaError("chamber_stair must be an object")
        _fields(block, ("first_rep", "steps", "anchor"))
        path = _path(k, {"first_rep": block["first_rep"], "steps": block["steps"]}, "chamber_stair")
        if RealizedStair(path, _monomial(block["anchor"], "chamber_stair.anchor")) != chamber.chamber_stair:
            raise SchemaError("chamber_stair block does not match the offsets")
    if "theta" in doc:
        values = tuple(parse_rational(v) for v in _list(doc["theta"], "theta"))
        if values != chamber.representative_theta.values:
            raise SchemaError("theta block does not match the offsets")
    return chamber


def _read_fiber_report(doc: dict) -> TautReport:
    _fields(doc, ("chamber", "passed", "charts"))
    if not isinstance(doc["chamber"], dict):
        raise SchemaError("chamber must be an object")
    chamber = _read_chamber(dict(doc["chamber"]))
    k = chamber.k
    charts = []
    for entry in _list(doc["charts"], "charts"):
        if not isinstance(entry, dict):
            raise SchemaError("charts[] must be objects")
        _fields(entry, ("j", "passed", "expected", "found", "survivors", "message"))
        expected = _path(k, entry["expected"], "expected")
        found = None if entry["found"] is None else _path(k, entry["found"], "found")
        survivors = tuple(_monomial(m, "survivors[]") for m in _list(entry["survivors"], "survivors"))
        result = ChartResult(
            _int(entry["j"], "j"), expected, found, survivors, _str(entry["message"], "message")
        )
        if result.passed != _bool(entry["passed"], "passed"):
            raise SchemaError(f"chart {result.j}: passed flag contradicts expected/found")
        charts.append(result)
    report = TautReport(chamber, tuple(charts))
    if report.passed != _bool(doc["passed"], "passed"):
        raise SchemaError("passed flag contradicts the chart entries")
    return report


def _read_count_report(doc: dict) -> CountReport:
    _fields(doc, ("k", "chambers", "simple", "stairs", "taut", "by_generators", "checks"))
    by_generators = {}
    for entry in _list(doc["by_generators"], "by_generators"):
        if not isinstance(entry, dict):
            raise SchemaError("by_generators[] must be objects")
        _fields(entry, ("r", "count"))
        by_generators[_int(entry["r"], "r")] = _int(entry["count"], "count")
    checks = []
    for entry in _list(doc["checks"], "checks"):
        if not isinstance(entry, dict):
            raise SchemaError("checks[] must be objects")
        _fields(entry, ("name", "passed", "detail"))
        checks.append(
            CheckResult(
                _str(entry["name"], "name"), _bool(entry["passed"], "passed"), _str(entry["detail"], "detail")
            )
        )
    return CountReport(
        k=_int(doc["k"], "k"),
        chambers=_int(doc["chambers"], "chambers"),
        simple=_int(doc["simple"], "simple"),
        stairs=_int(doc["stairs"], "stairs"),
        taut=_str(doc["taut"], "taut"),
        by_generators=by_generators,
        checks=tuple(checks),
    )


_READERS = {
    "stair": _read_stair,
    "realized_stair": _read_realized,
    "theta": _read_theta,
    "chamber": _read_chamber,
    "fiber_report": _read_fiber_report,
    "count_report": _read_count_report,
}
