"""Serialization of verification reports to text, JSON and CSV.

Records share one schema for finite and infinite reports.  Big integers and
certified values are emitted as decimal strings so nothing is lost to JSON
number limits and output is byte-stable.
"""

from __future__ import annotations

import csv
import io
import json
from typing import Iterable, List, Optional, Union

from .catalog import FiniteReport, IdentityInfo
from .series import InfiniteReport

__all__ = ["FIELDS", "record", "dumps", "to_csv", "to_text", "info_record"]

FIELDS = ["id", "m", "t", "status", "gaussian", "pi_multiple", "lhs", "rhs",
          "radius", "terms_used", "elapsed_ms"]

Report = Union[FiniteReport, InfiniteReport]


def record(report: Report, timing: bool = True) -> dict:
    elapsed = round(report.elapsed_ms, 3) if timing else 0
    if isinstance(report, FiniteReport):
        return {
            "id": report.id,
            "m": report.m,
            "t": report.t,
            "status": report.status,
            "gaussian": {"re": str(report.gaussian.re), "im": str(report.gaussian.im)},
            "pi_multiple": report.pi_multiple,
            "lhs": str(report.lhs),
            "rhs": str(report.rhs),
            "radius": None,
            "terms_used": len(report.lhs) + len(report.rhs),
            "elapsed_ms": elapsed,
        }
    shown = report.digits + 5
    radius = max((report.lhs, report.rhs), key=lambda b: b.radius)
    return {
        "id": report.id,
        "m": report.m,
        "t": None,
        "status": report.status,
        "gaussian": None,
        "pi_multiple": None,
        "lhs": report.lhs.to_decimal(shown),
        "rhs": report.rhs.to_decimal(shown),
        "radius": radius.radius_string(),
        "terms_used": report.terms_used,
        "elapsed_ms": elapsed,
    }


def info_record(info: IdentityInfo) -> dict:
    return {
        "id": info.id,
        "arity": info.arity.value,
        "parity": info.parity.value,
        "kind": info.kind.value,
        "alternating": info.alternating,
        "description": info.description,
    }


def dumps(obj) -> str:
    return json.dumps(obj, ensure_ascii=True)


def _flat(rec: dict) -> dict:
    out = dict(rec)
    g = out.pop("gaussian", None)
    out_items = []
    for key in FIELDS:
        if key == "gaussian":
            out_items.append(("gaussian_re", g["re"] if g else ""))
            out_items.append(("gaussian_im", g["im"] if g else ""))
        else:
            value = out.get(key)
            out_items.append((key, "" if value is None else value))
    return dict(out_items)


def to_csv(records: Iterable[dict], fieldnames: Optional[List[str]] = None) -> str:
    """CSV text; report records are flattened (``gaussian`` becomes two columns)."""
    rows = list(records)
    if fieldnames is None:
        rows = [_flat(r) for r in rows]
        fieldnames = list(rows[0]) if rows else [f for f in FIELDS if f != "gaussian"]
    buf = io.StringIO()
    writer = csv.DictWriter(buf, fieldnames=fieldnames, lineterminator="\n")
    writer.writeheader()
    writer.writerows(rows)
    return buf.getvalue()


def to_text(rec: dict) -> str:
    params = []
    if rec["m"] is not None:
        params.append(f"m={rec['m']}")
    if rec["t"] is not None:
        params.append(f"t={rec['t']}")
    head = f"{rec['id']}" + (f" ({', '.join(params)})" if params else "")
    lines = [f"{head}: {rec['status']}"]
    if rec["gaussian"] is not None:
        g = rec["gaussian"]
        lines.append(f"  gaussian witness: {g['re']} + {g['im']}i, pi multiple {rec['pi_multiple']}")
        lines.append(f"  lhs: {rec['lhs']}")
        lines.append(f"  rhs: {rec['rhs']}")
    else:
        lines.append(f"  lhs: {rec['lhs']}")
        lines.append(f"  rhs: {rec['rhs']}")
        lines.append(f"  radius <= {rec['radius']}, terms used {rec['terms_used']}")
    return "\n".join(lines)
