from eupbounds.records import parse_csv
from eupbounds.report import render_reports


def test_report_writes_figures_and_csv(tmp_path):
    paths = render_reports(tmp_path, dims=(1, 3), points=25)
    names = {p.name for p in paths}
    assert names == {"bound1d.csv", "bound1d.png", "ball3d.csv", "ball3d.png"}
    for p in paths:
        assert p.stat().st_size > 0
    header, rows, _ = parse_csv((tmp_path / "bound1d.csv").read_text())
    assert header == ["alpha", "dx", "product"]
    assert len(rows) == 4 * 25


def test_report_cap_figure(tmp_path):
    paths = render_reports(tmp_path, dims=(2,), points=15, figure_format="pdf")
    assert {p.name for p in paths} == {"cap2d.csv", "cap2d.pdf"}
