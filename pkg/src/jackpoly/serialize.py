"""JSON, CSV and plain-text renderings of Jack expansions."""

from __future__ import annotations

from fractions import Fraction
from typing import Any

from .alpha import AlphaPoly, AlphaRational
from .jack import JackResult, conjecture_report
from .partitions import Partition

__all__ = [
    "JACK_RECORD_SCHEMA",
    "poly_terms",
    "coeff_to_json",
    "coeff_from_json",
    "coeff_text",
    "result_record",
    "render_plain",
    "table_rows",
]

_TERMS = {
    "type": "array",
    "items": {
        "type": "array",
        "prefixItems": [{"type": "integer", "minimum": 0}, {"type": "integer"}],
        "items": False,
        "minItems": 2,
        "maxItems": 2,
    },
}

_COEFF = {
    "oneOf": [
        _TERMS,
        {
            "type": "object",
            "properties": {"num": _TERMS, "den": _TERMS},
            "required": ["num", "den"],
            "additionalProperties": False,
        },
    ]
}

_PARTITION = {"type": "array", "items": {"type": "integer", "minimum": 1}}

JACK_RECORD_SCHEMA: dict[str, Any] = {
    "$schema": "https://json-schema.org/draft/2020-12/schema",
    "type": "object",
    "properties": {
        "lambda": _PARTITION,
        "n": {"type": "integer", "minimum": 0},
        "coeffs": {
            "type": "array",
            "items": {
                "type": "object",
                "properties": {"mu": _PARTITION, "v": _COEFF},
                "required": ["mu", "v"],
                "additionalProperties": False,
            },
        },
        "flagged": {"type": "boolean"},
    },
    "required": ["lambda", "n", "coeffs"],
    "additionalProperties": False,
}


def poly_terms(p: AlphaPoly) -> list[list[int]]:
    """``[[degree, coefficient], ...]`` in ascending degree, zeros omitted."""
    return [[k, c] for k, c in enumerate(p.coeffs) if c]


def _value(c: AlphaRational, alpha: Fraction | None):
    return c if alpha is None else c.evaluate(alpha)


def coeff_to_json(c: AlphaRational | Fraction):
    if isinstance(c, Fraction):
        if c.denominator == 1:
            return [[0, c.numerator]] if c else []
        return {"num": [[0, c.numerator]], "den": [[0, c.denominator]]}
    if c.is_polynomial():
        return poly_terms(c.num)
    return {"num": poly_terms(c.num), "den": poly_terms(c.den)}


def _from_terms(terms) -> AlphaPoly:
    deg = max((k for k, _ in terms), default=-1)
    out = [0] * (deg + 1)
    for k, c in terms:
        out[k] += c
    return AlphaPoly(out)


def coeff_from_json(obj) -> AlphaRational:
    if isinstance(obj, dict):
        return AlphaRational(_from_terms(obj["num"]), _from_terms(obj["den"]))
    return AlphaRational(_from_terms(obj))


def coeff_text(c: AlphaRational | Fraction, compact: bool = False) -> str:
    if isinstance(c, Fraction):
        return str(c)
    return c.render(compact=compact)


def result_record(result: JackResult, alpha: Fraction | None = None) -> dict[str, Any]:
    coeffs = [{"mu": list(mu), "v": coeff_to_json(_value(c, alpha))}
              for mu, c in result.expansion]
    record: dict[str, Any] = {"lambda": list(result.lam), "n": result.n, "coeffs": coeffs}
    if any(not c.is_polynomial() for c in result.expansion.coeffs.values()):
        record["flagged"] = True
    return record


def _bracket(p: Partition) -> str:
    return f"[{p}]"


def render_plain(result: JackResult, alpha: Fraction | None = None) -> str:
    """``J[2] = (1 + a) m[2] + (2) m[1,1]``."""
    terms = [f"({coeff_text(_value(c, alpha))}) m{_bracket(mu)}" for mu, c in result.expansion]
    return f"J{_bracket(result.lam)} = " + (" + ".join(terms) if terms else "0")


def table_rows(result: JackResult, alpha: Fraction | None = None) -> list[dict[str, Any]]:
    """One row per nonzero coefficient: lambda, mu, v and the renormalized v~."""
    rows = []
    for e in conjecture_report(result).entries:
        rows.append({
            "lambda": result.lam,
            "mu": e.mu,
            "v": _value(e.v, alpha),
            "tilde_v": _value(e.tilde_v, alpha),
        })
    return rows
