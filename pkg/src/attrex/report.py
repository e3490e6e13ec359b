"""Rendering metric reports: CSV rows, aligned terminal tables, and a
summary figure (PNG) for quick side-by-side reading of the two scoring
modes."""

import csv

import numpy as np
from matplotlib.figure import Figure

CSV_COLUMNS = ("mode", "property", "tp", "fp", "fn",
               "precision", "recall", "f1")


def _rows(report):
    yield report.mode, "overall", report.overall
    for name in sorted(report.per_property):
        yield report.mode, name, report.per_property[name]


def write_metrics_csv(reports, path: str):
    """One row per (mode, property), overall first within each mode."""
    if not reports:
        raise ValueError("no reports to write")
    with open(path, "w", newline="") as fh:
        writer = csv.writer(fh)
        writer.writerow(CSV_COLUMNS)
        for report in reports:
            for mode, name, m in _rows(report):
                writer.writerow([mode, name, m.tp, m.fp, m.fn,
                                 "%.6f" % m.precision, "%.6f" % m.recall,
                                 "%.6f" % m.f1])


def format_table(report) -> str:
    """Fixed-width table with the overall row on top."""
    lines = []
    header = "%-22s %4s %4s %4s  %9s %7s %7s" % (
        "property", "tp", "fp", "fn", "precision", "recall", "f1")
    lines.append("[%s]" % report.mode)
    lines.append(header)
    lines.append("-" * len(header))
    for _mode, name, m in _rows(report):
        lines.append("%-22s %4d %4d %4d  %9.3f %7.3f %7.3f" % (
            name, m.tp, m.fp, m.fn, m.precision, m.recall, m.f1))
    return "\n".join(lines)


def render_metrics_figure(reports, path: str):
    """Overall P/R/F1 bars per mode, plus per-property F1 detail for the
    last report in the list."""
    if not reports:
        raise ValueError("no reports to render")
    fig = Figure(figsize=(11, 4.5))
    left, right = fig.subplots(1, 2)

    modes = [r.mode for r in reports]
    x = np.arange(len(modes))
    width = 0.25
    for k, metric in enumerate(("precision", "recall", "f1")):
        values = [getattr(r.overall, metric) for r in reports]
        left.bar(x + (k - 1) * width, values, width, label=metric)
    left.set_xticks(x)
    left.set_xticklabels(modes)
    left.set_ylim(0.0, 1.05)
    left.set_title("overall")
    left.legend(loc="lower right")

    detail = reports[-1]
    names = sorted(detail.per_property)
    if names:
        y = np.arange(len(names))
        right.barh(y, [detail.per_property[n].f1 for n in names],
                   color="tab:gray")
        right.set_yticks(y)
        right.set_yticklabels(names, fontsize=8)
        right.invert_yaxis()
    right.set_xlim(0.0, 1.05)
    right.set_title("per-property f1 (%s)" % detail.mode)

    fig.tight_layout()
    fig.savefig(path, dpi=150)
