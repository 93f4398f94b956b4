"""JSON configuration files and report documents.

Rationals cross the wire as canonical strings "p/q" (or "p"), never as
floats, so exactness survives serialization.  Three config kinds are
discriminated by a "kind" field:

    {"kind": "ceva", "vertices": [[qx, qy], ...], "M": [qx, qy],
     "s": 1, "t": 1}
    {"kind": "inscribed", "radius": q, "params": [q, ...],
     "lines": [{"second_param": q} | {"through": [qx, qy]}, ...],
     "s": 1, "t": 1}
    {"kind": "counterexample", "vertices": [[qx, qy]] * 5,
     "M": [qx, qy], "seed": 0}

Parse errors name the offending field; structural invariant failures
raise InvariantViolation while geometric degeneracy raises
DegenerateConfig, because the CLI maps them to different exit codes.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from fractions import Fraction
from typing import Union

from .ceva import CevaConfig, Counterexample, ProductReport
from .circle import InscribedConfig, InscribedReport, SecondParam, ThroughPoint
from .errors import InvalidRational, InvariantViolation, MalformedJson
from .geometry import Point, format_rational, parse_rational


@dataclass(frozen=True)
class CounterexampleInput:
    """Raw ingredients for the pentagon counterexample construction."""

    vertices: tuple[Point, ...]
    pivot: Point
    seed: int


ParsedConfig = Union[CevaConfig, InscribedConfig, CounterexampleInput]


def _rational(value, where: str) -> Fraction:
    if not isinstance(value, str):
        raise InvalidRational(f"{where}: rationals must be strings, got {value!r}")
    try:
        return parse_rational(value)
    except InvalidRational as exc:
        raise InvalidRational(f"{where}: {exc}") from exc


def _point(value, where: str) -> Point:
    if not isinstance(value, list) or len(value) != 2:
        raise InvariantViolation(f"{where}: a point is a [x, y] pair")
    return Point(_rational(value[0], f"{where}[0]"),
                 _rational(value[1], f"{where}[1]"))


def _int(doc: dict, key: str) -> int:
    if key not in doc:
        raise InvariantViolation(f"missing field {key!r}")
    value = doc[key]
    if not isinstance(value, int) or isinstance(value, bool):
        raise InvariantViolation(f"{key}: expected an integer, got {value!r}")
    return value


def _points(doc: dict, key: str) -> tuple[Point, ...]:
    if key not in doc:
        raise InvariantViolation(f"missing field {key!r}")
    value = doc[key]
    if not isinstance(value, list):
        raise InvariantViolation(f"{key}: expected a list of points")
    return tuple(_point(p, f"{key}[{i}]") for i, p in enumerate(value))


def parse_config(data: Union[bytes, str]) -> ParsedConfig:
    """Parse and validate a config document.

    Returns a fully validated CevaConfig or InscribedConfig, or the raw
    CounterexampleInput (validated for shape; the geometric work happens
    in the builder).
    """
    try:
        doc = json.loads(data)
    except json.JSONDecodeError as exc:
        raise MalformedJson(f"invalid JSON: {exc}") from exc
    if not isinstance(doc, dict):
        raise InvariantViolation("top level must be a JSON object")
    kind = doc.get("kind")
    if kind == "ceva":
        return CevaConfig(_points(doc, "vertices"),
                          _point(doc.get("M"), "M"),
                          _int(doc, "s"), _int(doc, "t"))
    if kind == "inscribed":
        if "radius" not in doc:
            raise InvariantViolation("missing field 'radius'")
        radius = _rational(doc["radius"], "radius")
        if not isinstance(doc.get("params"), list):
            raise InvariantViolation("params: expected a list of rationals")
        params = tuple(_rational(u, f"params[{i}]")
                       for i, u in enumerate(doc["params"]))
        if not isinstance(doc.get("lines"), list):
            raise InvariantViolation("lines: expected a list of line specs")
        specs = tuple(_line_spec(item, f"lines[{i}]")
                      for i, item in enumerate(doc["lines"]))
        return InscribedConfig(radius, params, specs,
                               _int(doc, "s"), _int(doc, "t"))
    if kind == "counterexample":
        vertices = _points(doc, "vertices")
        if len(vertices) != 5:
            raise InvariantViolation(
                f"vertices: counterexample needs exactly 5, got {len(vertices)}")
        return CounterexampleInput(vertices, _point(doc.get("M"), "M"),
                                   _int(doc, "seed"))
    raise InvariantViolation(
        f"kind: expected 'ceva', 'inscribed' or 'counterexample', got {kind!r}")


def _line_spec(item, where: str):
    if not isinstance(item, dict) or len(item) != 1:
        raise InvariantViolation(
            f"{where}: expected {{'second_param': q}} or {{'through': [x, y]}}")
    if "second_param" in item:
        return SecondParam(_rational(item["second_param"], f"{where}.second_param"))
    if "through" in item:
        return ThroughPoint(_point(item["through"], f"{where}.through"))
    raise InvariantViolation(f"{where}: unknown line spec {item!r}")


def point_to_json(p: Point) -> list[str]:
    return [format_rational(p.x), format_rational(p.y)]


def config_to_dict(cfg: ParsedConfig) -> dict:
    """Serialize any parsed config back to its JSON document form."""
    if isinstance(cfg, CevaConfig):
        return {
            "kind": "ceva",
            "vertices": [point_to_json(v) for v in cfg.vertices],
            "M": point_to_json(cfg.pivot),
            "s": cfg.s,
            "t": cfg.t,
        }
    if isinstance(cfg, InscribedConfig):
        lines = []
        for spec in cfg.line_specs:
            if isinstance(spec, SecondParam):
                lines.append({"second_param": format_rational(spec.v)})
            else:
                lines.append({"through": point_to_json(spec.point)})
        return {
            "kind": "inscribed",
            "radius": format_rational(cfg.radius),
            "params": [format_rational(u) for u in cfg.params],
            "lines": lines,
            "s": cfg.s,
            "t": cfg.t,
        }
    if isinstance(cfg, CounterexampleInput):
        return {
            "kind": "counterexample",
            "vertices": [point_to_json(v) for v in cfg.vertices],
            "M": point_to_json(cfg.pivot),
            "seed": cfg.seed,
        }
    raise TypeError(f"cannot serialize {cfg!r}")


def _factor_entries(factors) -> list[dict]:
    return [{"i": f.i, "j": f.j, "value": format_rational(f.value)}
            for f in factors]


def ceva_run_report(cfg: CevaConfig, report: ProductReport) -> dict:
    return {
        "kind": "ceva",
        "n": cfg.n,
        "s": cfg.s,
        "t": cfg.t,
        "factors": _factor_entries(report.factors),
        "product": format_rational(report.product),
        "expected": format_rational(report.expected),
        "holds": report.holds,
        "diagnostics": {},
    }


def inscribed_run_report(cfg: InscribedConfig, report: InscribedReport,
                         expected: Fraction | None) -> dict:
    return {
        "kind": "inscribed",
        "n": cfg.n,
        "s": cfg.s,
        "t": cfg.t,
        "factors": _factor_entries(report.factors),
        "product": format_rational(report.lhs),
        "expected": None if expected is None else format_rational(expected),
        "holds": report.holds,
        "diagnostics": {
            "lhs_squared": format_rational(report.lhs_squared),
            "rhs_squared": format_rational(report.rhs_squared),
            "second_circle_points": [point_to_json(p)
                                     for p in report.m_prime_points],
        },
    }


def counterexample_run_report(result: Counterexample, seed: int) -> dict:
    holds = result.product == -1 and not result.concurrent
    return {
        "kind": "counterexample",
        "n": 5,
        "s": 2,
        "t": 1,
        "factors": [{"i": i, "j": i, "value": format_rational(r)}
                    for i, r in enumerate(result.ratios, start=1)],
        "product": format_rational(result.product),
        "expected": "-1",
        "holds": holds,
        "K": format_rational(result.K),
        "branch": result.branch,
        "concurrent": result.concurrent,
        "diagnostics": {
            "seed": seed,
            "meet_points": [point_to_json(p) for p in result.meet_points],
        },
    }
