"""Reading and writing CBBA documents and belief tables.

CBBA documents are JSON objects::

    {"frame": ["a", "b"],
     "masses": [{"set": ["a"], "re": 0.3, "im": 0.4},
                {"set": ["b"], "magnitude": 0.5, "phase": -0.927}],
     "tolerance": 1e-9}

Each mass entry carries exactly one of the rectangular (``re``/``im``) or
polar (``magnitude``/``phase``) forms.  Unknown keys are rejected.

Tables are CSV with header ``set,com,bel,pl`` (set labels joined by ``|``)
or JSON ``{"frame": [...], "rows": [{"set": [...], "com": ..., ...}]}``.
Numbers are rendered with 12 significant digits in shortest form, rows in
ascending mask order.
"""

from __future__ import annotations

import csv
import io
import json
import math
from collections.abc import Sequence
from dataclasses import dataclass

import numpy as np

from .cbba import CBBA
from .complexnum import ComplexScalar, canonical_phase, from_polar
from .errors import DocumentError, InvalidTable, PhaseOutOfRange
from .frame import Frame, Proposition
from .transforms import BeliefTable, TableKind

RESERVED_CHARS = ",|"
_DOC_KEYS = {"frame", "masses", "tolerance"}
_RECT_KEYS = {"set", "re", "im"}
_POLAR_KEYS = {"set", "magnitude", "phase"}


@dataclass(frozen=True)
class CbbaDocument:
    frame: Frame
    entries: list[tuple[Proposition, ComplexScalar]]
    tolerance: float | None = None


def _number(value, what: str) -> float:
    if isinstance(value, bool) or not isinstance(value, (int, float)):
        raise DocumentError(f"{what} must be a number, got {value!r}")
    value = float(value)
    if not math.isfinite(value):
        raise DocumentError(f"{what} must be finite, got {value!r}")
    return value


def _frame(labels) -> Frame:
    if not isinstance(labels, list) or not all(isinstance(x, str) for x in labels):
        raise DocumentError("'frame' must be a list of strings")
    for label in labels:
        if any(c in label for c in RESERVED_CHARS):
            raise DocumentError(f"label {label!r} contains one of the reserved characters {RESERVED_CHARS!r}")
    try:
        return Frame(labels)
    except ValueError as exc:
        if type(exc) is not ValueError:
            raise
        raise DocumentError(str(exc)) from None


def parse_cbba_document(text: str) -> CbbaDocument:
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise DocumentError(f"invalid JSON: {exc}") from None
    if not isinstance(doc, dict):
        raise DocumentError("document must be a JSON object")
    unknown = set(doc) - _DOC_KEYS
    if unknown:
        raise DocumentError(f"unknown fields: {sorted(unknown)}")
    for key in ("frame", "masses"):
        if key not in doc:
            raise DocumentError(f"missing field {key!r}")
    frame = _frame(doc["frame"])
    tolerance = None
    if "tolerance" in doc:
        tolerance = _number(doc["tolerance"], "tolerance")
        if tolerance <= 0:
            raise DocumentError(f"tolerance must be positive, got {tolerance}")
    if not isinstance(doc["masses"], list):
        raise DocumentError("'masses' must be a list")
    entries = []
    for n, entry in enumerate(doc["masses"]):
        entries.append(_entry(frame, entry, n))
    return CbbaDocument(frame, entries, tolerance)


def _entry(frame: Frame, entry, n: int) -> tuple[Proposition, ComplexScalar]:
    if not isinstance(entry, dict):
        raise DocumentError(f"masses[{n}] must be an object")
    keys = set(entry)
    if keys == _RECT_KEYS:
        z = ComplexScalar(_number(entry["re"], f"masses[{n}].re"), _number(entry["im"], f"masses[{n}].im"))
    elif keys == _POLAR_KEYS:
        r = _number(entry["magnitude"], f"masses[{n}].magnitude")
        theta = _number(entry["phase"], f"masses[{n}].phase")
        if not -math.pi <= theta <= math.pi:
            raise PhaseOutOfRange(f"masses[{n}].phase {theta} outside [-pi, pi]")
        z = from_polar(r, canonical_phase(theta))
    else:
        raise DocumentError(
            f"masses[{n}] must have keys {sorted(_RECT_KEYS)} or {sorted(_POLAR_KEYS)}, got {sorted(keys)}"
        )
    labels = entry["set"]
    if not isinstance(labels, list) or not all(isinstance(x, str) for x in labels):
        raise DocumentError(f"masses[{n}].set must be a list of labels")
    return frame.proposition(labels), z


def load_cbba_document(path: str) -> CbbaDocument:
    with open(path, encoding="utf-8") as fh:
        return parse_cbba_document(fh.read())


def dump_cbba_document(cbba: CBBA, form: str = "rectangular", tolerance: float | None = None) -> str:
    """Serialize ``cbba`` deterministically in rectangular or polar form."""
    masses = []
    for a, z in cbba.items():
        entry = {"set": cbba.frame.labels_of(a)}
        if form == "rectangular":
            entry.update(re=z.re, im=z.im)
        elif form == "polar":
            entry.update(magnitude=abs(z), phase=z.argument())
        else:
            raise ValueError(f"unknown form {form!r}")
        masses.append(entry)
    doc = {"frame": list(cbba.frame.labels), "masses": masses}
    if tolerance is not None:
        doc["tolerance"] = tolerance
    return json.dumps(doc, indent=2) + "\n"


# -- tables ------------------------------------------------------------------


def format_number(x: float) -> str:
    s = format(float(x), ".12g")
    return "0" if s == "-0" else s


def set_names(frame: Frame, sep: str = "|", quote: bool = False) -> list[str]:
    """Joined label string for every mask, built incrementally.

    With ``quote`` each label is rendered as a JSON string.
    """
    names = [""] * (1 << frame.size)
    labels = [json.dumps(x) for x in frame.labels] if quote else frame.labels
    for i, label in enumerate(labels):
        low = 1 << i
        for mask in range(low, low << 1):
            rest = names[mask ^ low]
            names[mask] = rest + sep + label if rest else label
    return names


def table_columns(**columns: BeliefTable) -> tuple[Frame, dict[str, BeliefTable]]:
    frames = {t.frame for t in columns.values()}
    if len(frames) != 1:
        raise ValueError("tables belong to different frames")
    return frames.pop(), columns


def render_csv(frame: Frame, columns: dict[str, BeliefTable]) -> str:
    out = io.StringIO()
    writer = csv.writer(out, lineterminator="\n")
    writer.writerow(["set", *columns])
    rendered = [[format_number(x) for x in t.values.tolist()] for t in columns.values()]
    writer.writerows(zip(set_names(frame), *rendered))
    return out.getvalue()


def render_json(frame: Frame, columns: dict[str, BeliefTable]) -> str:
    # floats are re-parsed from their 12-digit text so both formats carry equal values
    rendered = [[repr(float(format_number(x))) for x in t.values.tolist()] for t in columns.values()]
    quoted = [json.dumps(name) for name in columns]
    sets = ["[" + names + "]" if names else "[]" for names in set_names(frame, sep=", ", quote=True)]
    lines = []
    for row in zip(sets, *rendered):
        fields = ", ".join(f"{q}: {v}" for q, v in zip(quoted, row[1:]))
        lines.append(f'{{"set": {row[0]}, {fields}}}')
    return '{"frame": ' + json.dumps(list(frame.labels)) + ',\n "rows": [\n  ' + ",\n  ".join(lines) + "\n]}\n"


def render_table(fmt: str, **columns: BeliefTable) -> str:
    frame, columns = table_columns(**columns)
    if fmt == "csv":
        return render_csv(frame, columns)
    if fmt == "json":
        return render_json(frame, columns)
    raise ValueError(f"unknown format {fmt!r}")


def detect_format(text: str) -> str:
    return "json" if text.lstrip().startswith("{") else "csv"


def parse_table(text: str, column: str = "bel", kind: TableKind = TableKind.BELIEF) -> BeliefTable:
    """Read one column of a CSV or JSON table back into a :class:`BeliefTable`.

    Any structural problem raises :class:`InvalidTable`.
    """
    if detect_format(text) == "json":
        frame, sets, values = _json_column(text, column)
    else:
        frame, sets, values = _csv_column(text, column)
    if len(sets) != 1 << frame.size:
        raise InvalidTable(f"expected {1 << frame.size} rows for a frame of {frame.size}, got {len(sets)}")
    expected = set_names(frame)
    if sets != expected:
        mask = next(i for i, (got, want) in enumerate(zip(sets, expected)) if got != want)
        raise InvalidTable(f"row {mask} has set {sets[mask]!r}, expected {expected[mask]!r}")
    try:
        numbers = np.array(values, dtype=np.float64)
    except (TypeError, ValueError):
        raise InvalidTable(f"column {column!r} contains non-numeric values") from None
    return BeliefTable(frame, numbers, kind)


def _json_column(text: str, column: str):
    try:
        doc = json.loads(text)
        frame = _frame(doc["frame"])
        rows = doc["rows"]
        sets = ["|".join(row["set"]) for row in rows]
        values = [row[column] for row in rows]
    except (json.JSONDecodeError, KeyError, TypeError, DocumentError) as exc:
        raise InvalidTable(f"malformed JSON table: {exc!r}") from None
    if any(isinstance(v, (bool, str)) or v is None for v in values):
        raise InvalidTable(f"column {column!r} contains non-numeric values")
    return frame, sets, values


def _csv_column(text: str, column: str):
    records = list(csv.reader(io.StringIO(text)))
    if len(records) < 3:
        raise InvalidTable("a CSV table needs a header and at least two rows")
    header, body = records[0], records[1:]
    if not header or header[0] != "set":
        raise InvalidTable(f"CSV header must start with 'set', got {header!r}")
    if column not in header:
        raise InvalidTable(f"table has no {column!r} column")
    width = len(header)
    if any(len(r) != width for r in body):
        raise InvalidTable("CSV rows do not match the header width")
    try:
        frame = _frame(body[-1][0].split("|"))
    except DocumentError as exc:
        raise InvalidTable(f"cannot recover the frame from the last row: {exc}") from None
    k = header.index(column)
    return frame, [r[0] for r in body], [r[k] for r in body]


def parse_set_argument(frame: Frame, text: str) -> Proposition:
    """``"a,b"`` to a proposition; the empty string is the empty set."""
    labels: Sequence[str] = [x.strip() for x in text.split(",")] if text.strip() else []
    return frame.proposition(labels)
