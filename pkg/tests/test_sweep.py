"""Config parsing, presets, sweep execution, CSV and SVG emission."""
import xml.etree.ElementTree as ET

import numpy as np
import pytest

from qcorr import (
    ModelParams,
    ParseError,
    SweepConfig,
    UnknownPreset,
    ValidationError,
    emit_csv,
    emit_svg,
    figure_preset,
    parse_config,
    run_sweep,
)
from qcorr.sweep import PRESET_NAMES, QUANTITIES, series_label

MINIMAL = """
[base]

[sweep]
vary = T
from = 0.1
to = 5
steps = 2
"""

FIG1A_DOC = """
# reproduction of the first reference panel
[base]
b1 = 2
b2 = 1
Jx = 2
Jy = 2
Jz = 2
Dz = 1

[sweep]
vary = Kz
from = 0
to = 10
steps = 50
quantities = s_ab
output = fig1a_doc

[series]
T = 0.1

[series]
T = 0.2

[series]
T = 0.4
"""


class TestParseConfig:
    def test_minimal_document_gets_defaults(self):
        cfg = parse_config(MINIMAL)
        assert cfg.base == ModelParams()
        assert cfg.vary == "T"
        assert (cfg.start, cfg.stop, cfg.steps) == (0.1, 5.0, 2)
        assert cfg.quantities == QUANTITIES
        assert cfg.output == "sweep"
        assert cfg.emit_svg is False
        assert cfg.series == ()

    def test_reference_panel_document(self):
        cfg = parse_config(FIG1A_DOC)
        assert cfg.base == ModelParams(b1=2, b2=1, Jx=2, Jy=2, Jz=2, Dz=1)
        assert cfg.vary == "Kz"
        assert cfg.series == ((("T", 0.1),), (("T", 0.2),), (("T", 0.4),))
        assert cfg.quantities == ("s_ab",)

    def test_series_overriding_vary_axis_rejected(self):
        doc = MINIMAL.replace("vary = T", "vary = Kz") + "\n[series]\nKz = 1\nT = 1\n"
        with pytest.raises(ValidationError):
            parse_config(doc)

    def test_unknown_key_rejected_with_line_number(self):
        doc = "[base]\nb1 = 1\nbogus = 2\n[sweep]\nvary = T\nfrom = 0.1\nto = 1\n"
        with pytest.raises(ParseError, match="line 3"):
            parse_config(doc)

    def test_bad_literal_rejected(self):
        doc = MINIMAL.replace("from = 0.1", "from = zero")
        with pytest.raises(ParseError, match="decimal"):
            parse_config(doc)

    def test_missing_required_key(self):
        with pytest.raises(ParseError, match="vary"):
            parse_config("[sweep]\nfrom = 0\nto = 1\n")

    def test_comments_and_blank_lines_ignored(self):
        doc = "# header\n\n" + MINIMAL + "  # trailing\n"
        assert parse_config(doc) == parse_config(MINIMAL)

    def test_inverted_bounds_rejected(self):
        doc = MINIMAL.replace("to = 5", "to = 0.05")
        with pytest.raises(ValidationError, match="from < to"):
            parse_config(doc)

    def test_too_few_steps_rejected(self):
        doc = MINIMAL.replace("steps = 2", "steps = 1")
        with pytest.raises(ValidationError, match="steps"):
            parse_config(doc)

    def test_non_positive_temperature_sweep_rejected(self):
        doc = MINIMAL.replace("from = 0.1", "from = 0")
        with pytest.raises(ValidationError, match="positive"):
            parse_config(doc)

    def test_missing_temperature_rejected(self):
        doc = "[base]\n[sweep]\nvary = Kz\nfrom = 0\nto = 1\n"
        with pytest.raises(ValidationError, match="temperature"):
            parse_config(doc)

    def test_unknown_quantity_rejected(self):
        doc = MINIMAL.replace(
            "steps = 2", "steps = 2\nquantities = s_ab, entanglement_of_formation"
        )
        with pytest.raises(ValidationError, match="unknown quantities"):
            parse_config(doc)

    def test_duplicate_key_rejected(self):
        doc = MINIMAL.replace("from = 0.1", "from = 0.1\nfrom = 0.2")
        with pytest.raises(ParseError, match="duplicate"):
            parse_config(doc)


class TestFigurePresets:
    def test_all_presets_valid(self):
        assert len(PRESET_NAMES) == 12
        for name in PRESET_NAMES:
            cfg = figure_preset(name)
            assert cfg.steps >= 2 and cfg.output == name

    def test_fig1c_definition(self):
        cfg = figure_preset("fig1c")
        assert cfg.vary == "T"
        assert cfg.series == ((("Kz", 3.0),),)
        assert cfg.quantities == ("s_ab", "s_ba", "delta12")
        assert cfg.base == ModelParams(b1=2, b2=1, Jx=2, Jy=2, Jz=2, Dz=1)

    def test_fig4c_definition(self):
        cfg = figure_preset("fig4c")
        assert cfg.vary == "T"
        assert cfg.series == ((("Kz", 10.0),),)
        assert cfg.quantities == ("w", "e_d", "s_g", "s_l", "w_l")
        assert cfg.base == ModelParams(b1=1, b2=1, Jx=1, Jy=0, Jz=1, Dz=1)

    def test_unknown_preset(self):
        with pytest.raises(UnknownPreset):
            figure_preset("bogus")


def tiny_config(**overrides) -> SweepConfig:
    defaults = dict(
        base=ModelParams(b1=2, b2=1, Jx=1, Jy=2, Jz=2, Dz=1),
        vary="T",
        start=0.1,
        stop=1.0,
        steps=5,
        series=((("Kz", 1.0),), (("Kz", 3.0),)),
        quantities=("concurrence", "s_ab"),
        output="tiny",
    )
    defaults.update(overrides)
    return SweepConfig(**defaults)


class TestRunSweep:
    def test_two_step_row_count(self):
        cfg = tiny_config(steps=2, series=((("Kz", 1.0),),), quantities=("concurrence",))
        result = run_sweep(cfg)
        assert len(result.rows) == 2
        assert result.columns == ("series", "T", "concurrence")

    def test_row_count_is_steps_times_series(self):
        result = run_sweep(tiny_config())
        assert len(result.rows) == 5 * 2

    def test_rows_series_major_with_increasing_grid(self):
        result = run_sweep(tiny_config())
        labels = [row[0] for row in result.rows]
        assert labels == ["Kz=1"] * 5 + ["Kz=3"] * 5
        for block in (result.rows[:5], result.rows[5:]):
            xs = [row[1] for row in block]
            assert all(b > a for a, b in zip(xs, xs[1:]))

    def test_provenance_echoes_config(self):
        cfg = parse_config(FIG1A_DOC)
        assert run_sweep(cfg).provenance == cfg

    def test_every_cell_finite(self):
        result = run_sweep(tiny_config(quantities=QUANTITIES))
        for row in result.rows:
            for cell in row[1:]:
                assert cell is None or np.isfinite(cell)

    def test_parallel_matches_serial(self):
        cfg = tiny_config()
        serial = run_sweep(cfg, threads=1)
        parallel = run_sweep(cfg, threads=4)
        auto = run_sweep(cfg, threads=0)
        assert serial == parallel == auto

    def test_default_series_label(self):
        assert series_label(()) == "base"
        result = run_sweep(tiny_config(series=(), steps=2))
        assert {row[0] for row in result.rows} == {"base"}

    def test_concurrency_determinism_of_csv_bytes(self, tmp_path):
        cfg = tiny_config()
        paths = []
        for i, threads in enumerate((1, 3)):
            path = tmp_path / f"run{i}.csv"
            emit_csv(run_sweep(cfg, threads=threads), path)
            paths.append(path.read_bytes())
        assert paths[0] == paths[1]


class TestEmitCsv:
    def test_header_and_line_count(self, tmp_path):
        cfg = tiny_config(steps=2, series=((("Kz", 1.0),),), quantities=("concurrence",))
        path = tmp_path / "out.csv"
        emit_csv(run_sweep(cfg), path)
        lines = path.read_text().splitlines()
        assert len(lines) == 3
        assert lines[0] == "series,T,concurrence"

    def test_absent_eta_is_empty_field(self, tmp_path):
        cfg = SweepConfig(
            base=ModelParams(b1=1, b2=1),
            vary="T",
            start=0.5,
            stop=1.5,
            steps=2,
            quantities=("eta", "w"),
        )
        path = tmp_path / "eta.csv"
        emit_csv(run_sweep(cfg), path)
        for line in path.read_text().splitlines()[1:]:
            cells = line.split(",")
            assert cells[2] == ""  # no interaction: efficiency undefined
            assert cells[3] != ""

    def test_round_trip_recovers_12_digits(self, tmp_path):
        cfg = tiny_config(quantities=("s_ab", "w", "mutual_info"))
        result = run_sweep(cfg)
        path = tmp_path / "rt.csv"
        emit_csv(result, path)
        lines = path.read_text().splitlines()[1:]
        for row, line in zip(result.rows, lines):
            cells = line.split(",")
            assert cells[0] == row[0]
            for expected, text in zip(row[1:], cells[1:]):
                got = float(text)
                assert abs(got - expected) <= 1e-11 * max(1.0, abs(expected))

    def test_newline_endings(self, tmp_path):
        cfg = tiny_config(steps=2, series=((("Kz", 1.0),),), quantities=("concurrence",))
        path = tmp_path / "nl.csv"
        emit_csv(run_sweep(cfg), path)
        data = path.read_bytes()
        assert b"\r" not in data
        assert data.endswith(b"\n")


class TestEmitSvg:
    def test_chart_and_polyline_counts(self, tmp_path):
        result = run_sweep(figure_preset("fig1a"))
        path = tmp_path / "fig1a.svg"
        emit_svg(result, path)
        text = path.read_text()
        assert text.count("<polyline") == 3  # one per series, single chart
        root = ET.fromstring(text)
        assert root.tag.endswith("svg")

    def test_run_twice_identical_bytes(self, tmp_path):
        cfg = tiny_config()
        a, b = tmp_path / "a.svg", tmp_path / "b.svg"
        emit_svg(run_sweep(cfg), a)
        emit_svg(run_sweep(cfg), b)
        assert a.read_bytes() == b.read_bytes()

    def test_absent_eta_breaks_polyline(self, tmp_path):
        cfg = SweepConfig(
            base=ModelParams(b1=1, b2=1),
            vary="T",
            start=0.5,
            stop=1.5,
            steps=3,
            quantities=("eta",),
        )
        path = tmp_path / "eta.svg"
        emit_svg(run_sweep(cfg), path)
        assert path.exists()
        ET.fromstring(path.read_text())

    def test_stacked_charts_for_many_quantities(self, tmp_path):
        cfg = tiny_config(quantities=("s_ab", "concurrence", "w"))
        path = tmp_path / "stack.svg"
        emit_svg(run_sweep(cfg), path)
        text = path.read_text()
        # one chart frame per quantity, one polyline per series per chart
        assert text.count("<rect") == 1 + 3  # background + 3 frames
        assert text.count("<polyline") == 3 * 2


class TestMonotoneTrends:
    def test_concurrence_non_increasing_in_temperature(self):
        result = run_sweep(figure_preset("fig2b"))
        ci = result.columns.index("concurrence")
        by_series: dict[str, list[float]] = {}
        for row in result.rows:
            by_series.setdefault(row[0], []).append(row[ci])
        assert len(by_series) == 4
        for label, values in by_series.items():
            diffs = np.diff(values)
            assert (diffs <= 1e-9).all(), label
