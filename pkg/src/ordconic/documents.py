"""Machine-readable result documents.

A document is a JSON object with a fixed key order and every number rendered
as an exact string ('3', '-1', '24/13'), so identical runs produce identical
bytes on every platform.  Wall-clock time is deliberately excluded; the
`timing` section carries deterministic work counters instead.
"""

from __future__ import annotations

import json
from fractions import Fraction

from .finder import AllOnConic, OrdinaryConic, SGConicResult
from .incidence import InequalityReport, OrdinaryBoundReport
from .oracle import OrdinaryConicCertificate
from .projective import Conic, ProjLine, ProjPoint, conic_is_singular


def scalar_str(v: int | Fraction) -> str:
    if isinstance(v, Fraction) and v.denominator != 1:
        return f"{v.numerator}/{v.denominator}"
    return str(int(v))


def point_doc(p: ProjPoint) -> list[str]:
    return [str(c) for c in p.coords]


def line_doc(line: ProjLine) -> list[str]:
    return [str(c) for c in line.coeffs]


def conic_doc(c: Conic) -> list[str]:
    return [str(v) for v in c.coeffs]


def inequality_doc(name: str, report: InequalityReport | None, reason: str | None = None) -> dict:
    if report is None:
        return {"name": name, "status": "precondition-unmet", "reason": reason or ""}
    return {
        "name": name,
        "status": "holds" if report.holds else "violated",
        "lhs": scalar_str(report.lhs),
        "rhs": scalar_str(report.rhs),
    }


def bound_doc(report: OrdinaryBoundReport | None, reason: str | None = None) -> dict:
    if report is None:
        return {
            "name": "ordinary-line-bound",
            "status": "precondition-unmet",
            "reason": reason or "",
        }
    return {
        "name": "ordinary-line-bound",
        "status": "holds" if report.holds else "violated",
        "count": scalar_str(report.count),
        "bound": scalar_str(report.bound),
    }


def result_doc(result: SGConicResult) -> dict:
    if isinstance(result, AllOnConic):
        return {
            "kind": "all-on-conic",
            "conic": conic_doc(result.conic),
            "singular": conic_is_singular(result.conic),
        }
    assert isinstance(result, OrdinaryConic)
    return {
        "kind": "ordinary-conic",
        "conic": conic_doc(result.conic),
        "singular": conic_is_singular(result.conic),
        "witness": [point_doc(p) for p in result.witness],
        "trace": list(result.trace),
    }


def certificate_doc(cert: OrdinaryConicCertificate) -> dict:
    return {
        "subset": [point_doc(p) for p in cert.subset],
        "conic": conic_doc(cert.conic),
        "singular": cert.singular,
    }


def render(doc: dict) -> str:
    return json.dumps(doc, indent=2) + "\n"
