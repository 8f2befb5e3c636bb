"""Serialization of results to JSON, CSV and plain text.

Exact values are written as rational coefficient vectors; floats only appear
in the companion ``approx`` fields.  Output is deterministic byte for byte.
"""

from __future__ import annotations

import csv
import io
import json
import os
from dataclasses import dataclass, field
from importlib import resources
from pathlib import Path
from typing import Any, Optional

from .cyclotomic import CycNum
from .partitions import Partition
from .series import Composite, SeriesSpec, _DISPLAY

__all__ = [
    "Result",
    "OUTPUT_DIR_ENV",
    "to_jsonable",
    "spec_json",
    "render",
    "export",
    "load_schema",
    "default_path",
]

OUTPUT_DIR_ENV = "BCDCAT_OUTPUT_DIR"
FORMATS = ("json", "csv", "pretty")


@dataclass
class Result:
    """A command result: a header, a list of uniform rows, optional extras."""

    command: str
    spec: Optional[dict] = None
    rows: list[dict] = field(default_factory=list)
    extra: dict = field(default_factory=dict)
    notes: list[str] = field(default_factory=list)


def _label_str(x: Any) -> str:
    if isinstance(x, Composite):
        return x.name
    return str(x)


def to_jsonable(x: Any) -> Any:
    if isinstance(x, CycNum):
        return x.to_json()
    if isinstance(x, Partition):
        return list(x.parts)
    if isinstance(x, Composite):
        return {"tensor": [list(x.first.partition.parts), list(x.second.partition.parts)]}
    if isinstance(x, dict):
        return {str(k): to_jsonable(v) for k, v in x.items()}
    if isinstance(x, (list, tuple)):
        return [to_jsonable(v) for v in x]
    return x


def spec_json(spec: SeriesSpec, with_labels: bool = False) -> dict:
    out = {
        "series": _DISPLAY.get(spec.series, spec.series),
        "n": spec.n,
        "k": spec.k,
        "l": spec.l,
        "M": spec.M,
        "alpha": spec.alpha_value.to_json(),
        "s": spec.s_value.to_json(),
    }
    if with_labels:
        out["gamma"] = [list(p.parts) for p in spec.labels.gamma]
        out["gamma_bar"] = [list(p.parts) for p in spec.labels.gamma_bar]
    return out


def _flat(v: Any) -> str:
    """Scalar text for CSV and pretty output; exact, never rounded."""
    if isinstance(v, CycNum):
        return str(v)
    if isinstance(v, Partition):
        return str(v)
    if isinstance(v, Composite):
        return v.name
    if isinstance(v, bool):
        return "true" if v else "false"
    if v is None:
        return ""
    if isinstance(v, (list, tuple)):
        return " ".join(_flat(x) for x in v)
    if isinstance(v, dict):
        return json.dumps(to_jsonable(v), sort_keys=True)
    return str(v)


def _approx(v: CycNum) -> str:
    z = v.approx()
    re, im = round(z.real, 9) + 0.0, round(z.imag, 9) + 0.0
    return f"{re}{'+' if im >= 0 else '-'}{abs(im)}i"


def _csv_row(row: dict) -> dict:
    out = {}
    for key, v in row.items():
        out[key] = _flat(v)
        if isinstance(v, CycNum):
            out[key + "_approx"] = _approx(v)
    return out


def render(result: Result, fmt: str) -> str:
    if fmt == "json":
        doc: dict[str, Any] = {"command": result.command, "spec": result.spec, "rows": to_jsonable(result.rows)}
        for key, v in result.extra.items():
            doc[key] = to_jsonable(v)
        doc["notes"] = list(result.notes)
        return json.dumps(doc, indent=2, ensure_ascii=False) + "\n"
    if fmt == "csv":
        buf = io.StringIO()
        rows = [_csv_row(r) for r in result.rows]
        cols: list[str] = []
        for r in rows:
            cols += [c for c in r if c not in cols]
        w = csv.DictWriter(buf, fieldnames=cols, restval="", lineterminator="\n")
        if cols:
            w.writeheader()
            w.writerows(rows)
        return buf.getvalue()
    if fmt == "pretty":
        return _pretty(result)
    raise ValueError(f"unknown format {fmt!r}")


def _pretty(result: Result) -> str:
    lines = []
    if result.spec:
        s = result.spec
        lines.append(f"{s['series']}^{{{s['n']},{s['k']}}}  l = {s['l']}  M = {s['M']}")
    for key, v in result.extra.items():
        lines.append(f"{key}: {_flat(v)}")
    rows = [{k: (_flat(v) + (f"  ~ {_approx(v)}" if isinstance(v, CycNum) else "")) for k, v in r.items()}
            for r in result.rows]
    if rows:
        cols = []
        for r in rows:
            cols += [c for c in r if c not in cols]
        widths = {c: max(len(c), *(len(r.get(c, "")) for r in rows)) for c in cols}
        lines.append("  ".join(c.ljust(widths[c]) for c in cols).rstrip())
        for r in rows:
            lines.append("  ".join(r.get(c, "").ljust(widths[c]) for c in cols).rstrip())
    for note in result.notes:
        lines.append(f"note: {note}")
    return "\n".join(lines) + "\n"


def default_path(result: Result, fmt: str) -> Optional[Path]:
    """File under $BCDCAT_OUTPUT_DIR when that variable is set."""
    base = os.environ.get(OUTPUT_DIR_ENV)
    if not base:
        return None
    ext = {"json": "json", "csv": "csv", "pretty": "txt"}[fmt]
    tag = ""
    if result.spec:
        tag = f"_{result.spec['series'].replace('-', 'neg')}_{result.spec['n']}_{result.spec['k']}"
    return Path(base) / f"{result.command}{tag}.{ext}"


def export(result: Result, fmt: str, path: Optional[str | Path] = None) -> Optional[Path]:
    """Write the rendered result to ``path`` (or the default directory).

    Returns the path written, or None when nothing was written to a file.
    """
    text = render(result, fmt)
    target = Path(path) if path else default_path(result, fmt)
    if target is None:
        return None
    target.parent.mkdir(parents=True, exist_ok=True)
    target.write_text(text, encoding="utf-8")
    return target


def load_schema() -> dict:
    """The JSON schema shipped with the package."""
    with resources.files("bcdcat").joinpath("schema/output.schema.json").open(encoding="utf-8") as fh:
        return json.load(fh)
