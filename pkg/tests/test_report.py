"""Tests for metric rendering: CSV layout, the text table, and the figure."""

import csv

import pytest

from attrex.metrics import MetricsReport, PropertyMetrics
from attrex.report import (
    CSV_COLUMNS,
    format_table,
    render_metrics_figure,
    write_metrics_csv,
)

PNG_MAGIC = b"\x89PNG\r\n\x1a\n"


def make_report(mode):
    return MetricsReport(
        mode=mode,
        overall=PropertyMetrics(tp=3, fp=1, fn=2),
        per_property={
            "shirt": PropertyMetrics(tp=2, fp=0, fn=1),
            "hat": PropertyMetrics(tp=1, fp=1, fn=1),
        })


def test_csv_layout(tmp_path):
    path = tmp_path / "metrics.csv"
    write_metrics_csv([make_report("attr_only"), make_report("attr_value")],
                      str(path))
    with open(path, newline="") as fh:
        rows = list(csv.reader(fh))
    assert rows[0] == list(CSV_COLUMNS)
    # overall first per mode, then properties sorted by name
    assert [(r[0], r[1]) for r in rows[1:]] == [
        ("attr_only", "overall"), ("attr_only", "hat"),
        ("attr_only", "shirt"),
        ("attr_value", "overall"), ("attr_value", "hat"),
        ("attr_value", "shirt")]
    overall = rows[1]
    assert overall[2:5] == ["3", "1", "2"]
    assert overall[5] == "%.6f" % (3 / 4)
    assert overall[7] == "%.6f" % (2 * (3 / 4) * (3 / 5) / (3 / 4 + 3 / 5))


def test_csv_requires_reports(tmp_path):
    with pytest.raises(ValueError, match="no reports"):
        write_metrics_csv([], str(tmp_path / "x.csv"))


def test_table_layout():
    table = format_table(make_report("attr_value"))
    lines = table.splitlines()
    assert lines[0] == "[attr_value]"
    assert lines[1].split() == ["property", "tp", "fp", "fn", "precision",
                                "recall", "f1"]
    assert lines[3].startswith("overall")
    assert "0.750" in lines[3]
    body = [line.split()[0] for line in lines[4:]]
    assert body == ["hat", "shirt"]


def test_figure_rendering(tmp_path):
    path = tmp_path / "metrics.png"
    render_metrics_figure([make_report("attr_only"),
                           make_report("attr_value")], str(path))
    blob = path.read_bytes()
    assert blob[:8] == PNG_MAGIC
    assert len(blob) > 1000


def test_figure_with_no_property_detail(tmp_path):
    report = MetricsReport("attr_only", PropertyMetrics(), {})
    path = tmp_path / "empty.png"
    render_metrics_figure([report], str(path))
    assert path.read_bytes()[:8] == PNG_MAGIC


def test_figure_requires_reports(tmp_path):
    with pytest.raises(ValueError, match="no reports"):
        render_metrics_figure([], str(tmp_path / "x.png"))
