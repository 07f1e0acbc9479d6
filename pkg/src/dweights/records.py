"""Output records for the command line: build, render as json/csv/text, load schema."""

from __future__ import annotations

import csv
import io
import json
from importlib import resources

from . import closed_form as cf
from .grading import OrbitSpec, dynkin_weights

CSV_COLUMNS = ["r", "k", "so2r_partition", "height_partition", "weight_partition", "formula_source"]
PARTITION_FIELDS = ("so2r_partition", "dynkin_weights", "height_partition", "weight_partition")
FORMATS = ("text", "json", "csv")


def build_record(spec: OrbitSpec, checks=None):
    """Closed-form record for one orbit; ``checks`` is an optional list of Check."""
    height, source = cf.height_closed(spec)
    rec = {
        "type": "D",
        "r": spec.r,
        "k": spec.k,
        "so2r_partition": spec.so2r_partition().to_list(),
        "dynkin_weights": list(dynkin_weights(spec).weights),
        "height_partition": height.to_list(),
        "weight_partition": cf.theorem_weight(spec.r, spec.k).to_list(),
        "formula_source": str(source),
    }
    if checks is not None:
        rec["checks"] = [c.to_dict() for c in checks]
    return rec


def _spaced(values):
    return " ".join(str(v) for v in values)


def to_json(rec):
    return json.dumps(rec, separators=(",", ":"))


def csv_header():
    return _csv_line(CSV_COLUMNS)


def _csv_line(values):
    buf = io.StringIO()
    csv.writer(buf, quoting=csv.QUOTE_NONNUMERIC, lineterminator="\r\n").writerow(values)
    return buf.getvalue()


def to_csv_row(rec):
    return _csv_line([_spaced(rec[c]) if c in PARTITION_FIELDS else rec[c] for c in CSV_COLUMNS])


def to_text(rec):
    lines = [f"D_{rec['r']}(a_{rec['k']})"]
    for key in PARTITION_FIELDS:
        lines.append(f"  {key}: {_spaced(rec[key])}")
    lines.append(f"  formula_source: {rec['formula_source']}")
    for c in rec.get("checks", ()):
        mark = "ok" if c["passed"] else ("info" if c["informational"] else "FAIL")
        lines.append(f"  [{mark}] {c['name']}: {c['detail']}")
    return "\n".join(lines)


def parse_csv(text):
    """Read csv output back into records (partition fields as int lists)."""
    out = []
    for row in csv.DictReader(io.StringIO(text)):
        rec = {"r": int(row["r"]), "k": int(row["k"]), "formula_source": row["formula_source"]}
        for c in CSV_COLUMNS:
            if c in PARTITION_FIELDS:
                rec[c] = [int(x) for x in row[c].split()]
        out.append(rec)
    return out


def load_schema():
    with resources.files("dweights").joinpath("schema/output_record.schema.json").open() as f:
        return json.load(f)
