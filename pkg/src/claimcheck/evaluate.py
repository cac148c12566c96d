"""Binary classification metrics and report emission.

The positive class is Misinformative everywhere: precision and recall are
oriented around catching misinformation, and a false negative means a
misinformative item slipped through.
"""

from __future__ import annotations

import csv
import io
import json
from dataclasses import dataclass, field

from .corpus import Verdict

REPORT_COLUMNS = ("model", "dataset", "accuracy", "precision", "recall", "f1",
                  "tp", "fp", "tn", "fn")


@dataclass(frozen=True)
class EvalReport:
    tp: int
    fp: int
    tn: int
    fn: int
    accuracy: float
    precision: float
    recall: float
    f1: float
    model: str = ""
    dataset: str = ""
    zero_denominator_flags: tuple = field(default_factory=tuple)

    @property
    def total(self) -> int:
        return self.tp + self.fp + self.tn + self.fn


def _as_binary(value) -> int:
    if isinstance(value, Verdict):
        return 1 if value is Verdict.MISINFORMATIVE else 0
    if value in (0, 1):
        return int(value)
    raise ValueError(f"labels must be Verdict or 0/1, got {value!r}")


def from_counts(tp: int, fp: int, tn: int, fn: int,
                model: str = "", dataset: str = "") -> EvalReport:
    """Build a report from confusion-matrix counts.

    Zero-denominator metrics come out as 0.0 and are named in
    ``zero_denominator_flags`` so downstream code never sees NaN.
    """
    n = tp + fp + tn + fn
    if n == 0:
        raise ValueError("empty confusion matrix")
    flags = []

    def ratio(num, den, name):
        if den == 0:
            flags.append(name)
            return 0.0
        return num / den

    accuracy = (tp + tn) / n
    precision = ratio(tp, tp + fp, "precision")
    recall = ratio(tp, tp + fn, "recall")
    f1 = ratio(2 * precision * recall, precision + recall, "f1")
    return EvalReport(
        tp=tp, fp=fp, tn=tn, fn=fn,
        accuracy=accuracy, precision=precision, recall=recall, f1=f1,
        model=model, dataset=dataset,
        zero_denominator_flags=tuple(flags),
    )


def score(y_true, y_pred, model: str = "", dataset: str = "") -> EvalReport:
    """Score predictions against truth; Misinformative is the positive class."""
    if len(y_true) != len(y_pred):
        raise ValueError(f"length mismatch: {len(y_true)} true vs {len(y_pred)} predicted")
    if len(y_true) == 0:
        raise ValueError("cannot score zero predictions")
    tp = fp = tn = fn = 0
    for t, p in zip(y_true, y_pred):
        t, p = _as_binary(t), _as_binary(p)
        if t == 1 and p == 1:
            tp += 1
        elif t == 0 and p == 1:
            fp += 1
        elif t == 0 and p == 0:
            tn += 1
        else:
            fn += 1
    return from_counts(tp, fp, tn, fn, model=model, dataset=dataset)


def f1_from(precision: float, recall: float) -> float:
    if precision + recall == 0:
        return 0.0
    return 2 * precision * recall / (precision + recall)


def _report_row(report: EvalReport) -> dict:
    return {
        "model": report.model,
        "dataset": report.dataset,
        "accuracy": f"{report.accuracy:.4f}",
        "precision": f"{report.precision:.4f}",
        "recall": f"{report.recall:.4f}",
        "f1": f"{report.f1:.4f}",
        "tp": report.tp,
        "fp": report.fp,
        "tn": report.tn,
        "fn": report.fn,
    }


def emit_report(reports: list[EvalReport], format: str = "table-text") -> str:
    """Render reports as a text table, CSV, or JSON document (4 dp metrics)."""
    if not reports:
        raise ValueError("no reports to emit")
    rows = [_report_row(r) for r in reports]
    if format == "table-text":
        widths = {
            c: max(len(c), *(len(str(row[c])) for row in rows)) for c in REPORT_COLUMNS
        }
        lines = ["  ".join(c.ljust(widths[c]) for c in REPORT_COLUMNS)]
        lines.append("  ".join("-" * widths[c] for c in REPORT_COLUMNS))
        for row in rows:
            lines.append("  ".join(str(row[c]).ljust(widths[c]) for c in REPORT_COLUMNS))
        return "\n".join(lines) + "\n"
    if format == "csv":
        buf = io.StringIO()
        writer = csv.DictWriter(buf, fieldnames=list(REPORT_COLUMNS))
        writer.writeheader()
        writer.writerows(rows)
        return buf.getvalue()
    if format == "json":
        docs = []
        for row, report in zip(rows, reports):
            doc = dict(row)
            for key in ("accuracy", "precision", "recall", "f1"):
                doc[key] = float(doc[key])
            doc["zero_denominator_flags"] = list(report.zero_denominator_flags)
            docs.append(doc)
        return json.dumps({"reports": docs}, indent=2, sort_keys=True) + "\n"
    raise ValueError(f"unknown report format: {format!r}")


def parse_report_csv(text: str) -> list[dict]:
    """Read back an emitted CSV report (values stay at 4 dp)."""
    reader = csv.DictReader(io.StringIO(text))
    out = []
    for row in reader:
        parsed = dict(row)
        for key in ("accuracy", "precision", "recall", "f1"):
            parsed[key] = float(row[key])
        for key in ("tp", "fp", "tn", "fn"):
            parsed[key] = int(row[key])
        out.append(parsed)
    return out
