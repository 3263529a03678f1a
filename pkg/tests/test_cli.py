"""End-to-end command line tests via the main() entry point."""
import pytest

from qcorr.cli import main

CONFIG = """
[base]
b1 = 2
b2 = 1
Jx = 1
Jy = 2
Jz = 2
Dz = 1

[sweep]
vary = T
from = 0.1
to = 1
steps = 4
quantities = concurrence
output = {stem}

[series]
Kz = 1
"""


def test_figure_subcommand_writes_csv(tmp_path, capsys):
    stem = str(tmp_path / "f1c")
    code = main(["figure", "fig1c", "--out", stem])
    assert code == 0
    lines = (tmp_path / "f1c.csv").read_text().splitlines()
    assert lines[0] == "series,T,s_ab,s_ba,delta12"
    assert len(lines) == 201
    assert "f1c.csv" in capsys.readouterr().out


def test_figure_svg_flag(tmp_path):
    stem = str(tmp_path / "f1c")
    assert main(["figure", "fig1c", "--out", stem, "--svg"]) == 0
    assert (tmp_path / "f1c.svg").exists()


def test_unknown_preset_exits_1(tmp_path, capsys):
    assert main(["figure", "fig9z", "--out", str(tmp_path / "x")]) == 1
    assert "unknown preset" in capsys.readouterr().err


def test_sweep_subcommand(tmp_path):
    stem = str(tmp_path / "run")
    cfg = tmp_path / "run.cfg"
    cfg.write_text(CONFIG.format(stem=stem))
    assert main(["sweep", "--config", str(cfg)]) == 0
    lines = (tmp_path / "run.csv").read_text().splitlines()
    assert lines[0] == "series,T,concurrence"
    assert len(lines) == 5


def test_invalid_config_exits_1(tmp_path, capsys):
    cfg = tmp_path / "bad.cfg"
    cfg.write_text("[sweep]\nvary = T\nfrom = 5\nto = 1\n")
    assert main(["sweep", "--config", str(cfg)]) == 1
    assert "error" in capsys.readouterr().err


def test_missing_config_file_exits_2(tmp_path, capsys):
    assert main(["sweep", "--config", str(tmp_path / "absent.cfg")]) == 2
    assert "i/o error" in capsys.readouterr().err


def test_unwritable_output_exits_2(tmp_path):
    stem = str(tmp_path / "no_such_dir" / "f")
    assert main(["figure", "fig1c", "--out", stem]) == 2


def test_threads_flag_and_env(tmp_path, monkeypatch):
    stem = str(tmp_path / "t")
    assert main(["figure", "fig1c", "--out", stem, "--threads", "2"]) == 0
    first = (tmp_path / "t.csv").read_bytes()

    monkeypatch.setenv("QCORR_THREADS", "3")
    assert main(["figure", "fig1c", "--out", stem]) == 0
    assert (tmp_path / "t.csv").read_bytes() == first


def test_bad_threads_env_exits_1(tmp_path, monkeypatch, capsys):
    monkeypatch.setenv("QCORR_THREADS", "many")
    assert main(["figure", "fig1c", "--out", str(tmp_path / "x")]) == 1
    assert "QCORR_THREADS" in capsys.readouterr().err


def test_out_flag_overrides_config_stem(tmp_path):
    cfg = tmp_path / "run.cfg"
    cfg.write_text(CONFIG.format(stem=str(tmp_path / "ignored")))
    override = str(tmp_path / "chosen")
    assert main(["sweep", "--config", str(cfg), "--out", override]) == 0
    assert (tmp_path / "chosen.csv").exists()
    assert not (tmp_path / "ignored.csv").exists()
