"""
Deterministic text and JSON renderings for mufgl values

Rationals serialize as "p/q" (or "p"), generators as CPn, hn, pn, en, b and
divided powers as b(n). JSON emitted here parses back to an equal value.
"""

from __future__ import annotations

import json
from fractions import Fraction
from typing import Any, Callable, Dict, List, Optional, Sequence, Tuple

from exactalg import Generator, Monomial, MultiPoly
from hurewicz import DividedExpr, TwistExpansion
from series import BiTruncSeries, CheckReport, TruncSeries

DOT = "·"


def format_rational(value: Fraction) -> str:
    value = Fraction(value)
    return str(value.numerator) if value.denominator == 1 else f"{value.numerator}/{value.denominator}"


def parse_rational(text: str) -> Fraction:
    try:
        return Fraction(text.strip())
    except (ValueError, ZeroDivisionError) as exc:
        raise ValueError(f"not a rational number: {text!r}") from exc


def _monomial_factors(mono: Monomial) -> List[str]:
    return [gen.name if exp == 1 else f"{gen.name}^{exp}" for gen, exp in mono]


def _power_factor(var: str, k: int) -> List[str]:
    if k == 0:
        return []
    return [var if k == 1 else f"{var}^{k}"]


def _term(coeff: Fraction, factors: List[str], leading: Sequence[str] = (),
          trailing: Sequence[str] = ()) -> Tuple[bool, str]:
    magnitude = abs(coeff)
    parts = list(factors)
    bare = not (parts or leading or trailing)
    if magnitude != 1 or bare:
        text = format_rational(magnitude)
        if magnitude.denominator != 1 and not bare:
            text = f"({text})"
        parts.insert(0, text)
    return coeff < 0, DOT.join(list(leading) + parts + list(trailing))


def _product(coeff: MultiPoly, leading: List[str], trailing: List[str]) -> Tuple[bool, str]:
    """Render leading * coeff * trailing, parenthesising a multi-term coefficient"""
    if len(coeff) == 1:
        mono, c = next(coeff.items())
        return _term(c, _monomial_factors(mono), leading, trailing)
    return False, DOT.join(leading + [f"({poly_text(coeff)})"] + trailing)


def _join(parts: Sequence[Tuple[bool, str]]) -> str:
    if not parts:
        return "0"
    negative, first = parts[0]
    text = f"-{first}" if negative else first
    for negative, body in parts[1:]:
        text += f" - {body}" if negative else f" + {body}"
    return text


def poly_text(poly: MultiPoly) -> str:
    return _join([_term(c, _monomial_factors(m)) for m, c in poly.sorted_terms()])


def series_text(f: TruncSeries, var: str = "z") -> str:
    return _join([_product(c, [], _power_factor(var, k))
                  for k, c in enumerate(f.coeffs) if not c.is_zero()])


def bi_text(F: BiTruncSeries) -> str:
    return _join([_product(c, [], _power_factor("z0", i) + _power_factor("z1", j))
                  for (i, j), c in F.items()])


def _divided_label(r: int) -> List[str]:
    return [f"b({r})"] if r else []


def _volume_label(r: int) -> List[str]:
    return [f"vol(CP_{r},w)"] if r else []


def divided_text(e: DividedExpr, label: Callable[[int], List[str]] = _divided_label,
                 prefix: Callable[[int], List[str]] = lambda r: []) -> str:
    return _join([_product(c, prefix(r), label(r)) for r, c in e.entries()])


def twist_text(tw: TwistExpansion) -> str:
    if tw.t is None:
        return divided_text(tw.terms, _volume_label, lambda r: _power_factor("t", r))
    return divided_text(tw.value(), _volume_label)


def report_text(report: CheckReport) -> str:
    if report.ok:
        return f"{report.name}: ok ({report.detail})"
    lines = [f"{report.name}: FAILED ({report.detail})"]
    if report.left is not None:
        lines.append(f"  left:  {value_text(report.left)}")
    if report.right is not None:
        lines.append(f"  right: {value_text(report.right)}")
    return "\n".join(lines)


def value_text(value: Any) -> str:
    if isinstance(value, MultiPoly):
        return poly_text(value)
    if isinstance(value, TruncSeries):
        return series_text(value)
    if isinstance(value, BiTruncSeries):
        return bi_text(value)
    if isinstance(value, DividedExpr):
        return divided_text(value)
    if isinstance(value, Fraction):
        return format_rational(value)
    return str(value)


# JSON

def poly_to_json(poly: MultiPoly) -> List[Dict[str, Any]]:
    return [{"coeff": format_rational(c), "monomial": {g.name: e for g, e in m}}
            for m, c in poly.sorted_terms()]


def poly_from_json(terms: List[Dict[str, Any]]) -> MultiPoly:
    table = {}
    for term in terms:
        mono = tuple((Generator.parse(name), int(exp)) for name, exp in term["monomial"].items())
        table[mono] = table.get(mono, Fraction(0)) + parse_rational(term["coeff"])
    return MultiPoly(table)


def series_to_json(f: TruncSeries, var: str = "z") -> Dict[str, Any]:
    return {
        "variable": var,
        "order": f.order,
        "coefficients": [{"power": k, "terms": poly_to_json(c)} for k, c in enumerate(f.coeffs)],
    }


def series_from_json(data: Dict[str, Any]) -> TruncSeries:
    coeffs = [MultiPoly.zero()] * (data["order"] + 1)
    for entry in data["coefficients"]:
        coeffs[entry["power"]] = poly_from_json(entry["terms"])
    return TruncSeries(data["order"], coeffs)


def bi_to_json(F: BiTruncSeries) -> Dict[str, Any]:
    return {
        "variables": ["z0", "z1"],
        "order": F.order,
        "coefficients": [{"powers": [i, j], "terms": poly_to_json(c)} for (i, j), c in F.items()],
    }


def bi_from_json(data: Dict[str, Any]) -> BiTruncSeries:
    return BiTruncSeries(data["order"], {tuple(entry["powers"]): poly_from_json(entry["terms"])
                                         for entry in data["coefficients"]})


def divided_to_json(e: DividedExpr) -> Dict[str, Any]:
    return {"entries": [{"divided_index": r, "terms": poly_to_json(c)} for r, c in e.entries()]}


def divided_from_json(data: Dict[str, Any]) -> DividedExpr:
    return DividedExpr({entry["divided_index"]: poly_from_json(entry["terms"])
                        for entry in data["entries"]})


def twist_to_json(tw: TwistExpansion) -> Dict[str, Any]:
    data = divided_to_json(tw.terms)
    data.update({"n": tw.n, "t": None if tw.t is None else format_rational(tw.t),
                 "label": "vol(CP_r,w)"})
    return data


def twist_from_json(data: Dict[str, Any]) -> TwistExpansion:
    t: Optional[Fraction] = None if data["t"] is None else parse_rational(data["t"])
    return TwistExpansion(data["n"], t, divided_from_json(data))


def report_to_json(report: CheckReport) -> Dict[str, Any]:
    data: Dict[str, Any] = {"check": report.name, "ok": report.ok, "detail": report.detail}
    if report.position is not None:
        data["position"] = list(report.position)
    for side in ("left", "right"):
        value = getattr(report, side)
        if value is not None:
            data[side] = value_text(value)
    return data


def dumps(data: Any) -> str:
    return json.dumps(data, indent=2, ensure_ascii=False)
