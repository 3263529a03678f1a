"""Configuration-driven parameter sweeps and figure presets.

A sweep varies one axis (a coupling or T) over a uniform inclusive grid and
evaluates a set of scalar quantities for one or more series, each series
being a set of fixed parameter overrides. Results are emitted as CSV (and
optionally SVG line charts, see qcorr.svg).

Config grammar (flat sectioned key-value text, `#` starts a comment):

    [base]              # couplings; omitted keys default to 0
    b1 = 2.0
    Jz = 2.0

    [sweep]
    vary = T            # one of b1 b2 Jx Jy Jz Dz Kz T
    from = 0.01
    to = 1.0
    steps = 200         # default 200
    quantities = s_ab, s_ba, delta12    # default: all
    output = run1       # file path stem, default "sweep"
    emit_svg = false    # default false

    [series]            # zero or more; each produces one curve
    Kz = 3.0

With no [series] section a single unmodified curve labeled "base" is run.
Every curve needs a temperature: either vary = T or a T override in each
series. Grid-point evaluations are independent; with threads > 1 they run
on a thread pool, and the output row order (series-major, ascending grid)
is identical either way.
"""
from __future__ import annotations

import os
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, fields

import numpy as np

from .correlations import concurrence_x, steering
from .model import ModelParams, NonPositiveTemperature, thermal_state
from .thermo import entropic_terms

QUANTITIES = (
    "s_ab",
    "s_ba",
    "delta12",
    "concurrence",
    "w",
    "eta",
    "s_g",
    "e_d",
    "s_l",
    "w_l",
    "mutual_info",
)

AXES = ("b1", "b2", "Jx", "Jy", "Jz", "Dz", "Kz", "T")

_STEERING_QUANTITIES = frozenset({"s_ab", "s_ba", "delta12"})
_THERMO_QUANTITIES = frozenset({"w", "eta", "s_g", "e_d", "s_l", "w_l", "mutual_info"})


class ParseError(ValueError):
    """Malformed config text; the message carries the offending line number."""


class ValidationError(ValueError):
    """Structurally valid config that violates a sweep invariant."""


class UnknownPreset(ValueError):
    """Requested figure preset does not exist."""


Overrides = tuple[tuple[str, float], ...]


def series_label(overrides: Overrides) -> str:
    if not overrides:
        return "base"
    return ",".join(f"{k}={v:g}" for k, v in overrides)


@dataclass(frozen=True)
class SweepConfig:
    """Fully resolved description of one sweep; validates on construction."""

    base: ModelParams
    vary: str
    start: float
    stop: float
    steps: int = 200
    series: tuple[Overrides, ...] = ()
    quantities: tuple[str, ...] = QUANTITIES
    output: str = "sweep"
    emit_svg: bool = False

    def __post_init__(self):
        if self.vary not in AXES:
            raise ValidationError(f"vary must be one of {AXES}, got {self.vary!r}")
        if not (self.start < self.stop):
            raise ValidationError(
                f"sweep bounds must satisfy from < to, got {self.start!r} >= {self.stop!r}"
            )
        if self.steps < 2:
            raise ValidationError(f"steps must be >= 2, got {self.steps!r}")
        if self.vary == "T" and self.start <= 0.0:
            raise ValidationError(
                f"temperature sweep must stay positive, got from = {self.start!r}"
            )
        unknown = [q for q in self.quantities if q not in QUANTITIES]
        if unknown:
            raise ValidationError(f"unknown quantities {unknown}")
        if not self.quantities:
            raise ValidationError("quantities must not be empty")
        for overrides in self.series:
            for key, value in overrides:
                if key not in AXES:
                    raise ValidationError(f"unknown series override key {key!r}")
                if key == self.vary:
                    raise ValidationError(
                        f"series override of {key!r} collides with the vary axis"
                    )
                if key == "T" and value <= 0.0:
                    raise ValidationError(f"series temperature must be > 0, got {value!r}")
        if self.vary != "T":
            for overrides in self.series or ((),):
                if not any(k == "T" for k, _ in overrides):
                    raise ValidationError(
                        "temperature is unset: vary is not T and series "
                        f"{series_label(overrides)!r} has no T override"
                    )

    def effective_series(self) -> tuple[Overrides, ...]:
        return self.series if self.series else ((),)

    def grid(self) -> np.ndarray:
        return np.linspace(self.start, self.stop, self.steps)


@dataclass(frozen=True)
class SweepResult:
    """Rows of evaluated quantities plus the exact config that produced them."""

    columns: tuple[str, ...]
    rows: tuple[tuple, ...]
    provenance: SweepConfig


# ---------------------------------------------------------------------------
# Config parsing


def _parse_float(token: str, lineno: int) -> float:
    try:
        value = float(token)
    except ValueError:
        raise ParseError(f"line {lineno}: {token!r} is not a decimal literal") from None
    if not np.isfinite(value):
        raise ParseError(f"line {lineno}: {token!r} is not finite")
    return value


_PARAM_KEYS = tuple(f.name for f in fields(ModelParams))
_SWEEP_KEYS = ("vary", "from", "to", "steps", "quantities", "output", "emit_svg")


def parse_config(text: str) -> SweepConfig:
    """Parse and validate a sweep config document.

    Raises ParseError (with line number) for grammar problems and unknown
    keys, ValidationError for violated sweep invariants.
    """
    base: dict[str, float] = {}
    sweep: dict[str, object] = {}
    series: list[Overrides] = []
    section = None
    seen_sections: set[str] = set()
    current_series: list[tuple[str, float]] = []

    def close_series():
        if section == "series":
            series.append(tuple(current_series))
            current_series.clear()

    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        if line.startswith("["):
            if not line.endswith("]"):
                raise ParseError(f"line {lineno}: unterminated section header {raw!r}")
            name = line[1:-1].strip()
            if name not in ("base", "sweep", "series"):
                raise ParseError(f"line {lineno}: unknown section [{name}]")
            close_series()
            if name in ("base", "sweep") and name in seen_sections:
                raise ParseError(f"line {lineno}: duplicate section [{name}]")
            seen_sections.add(name)
            section = name
            continue
        if "=" not in line:
            raise ParseError(f"line {lineno}: expected key = value, got {raw!r}")
        key, _, value = (part.strip() for part in line.partition("="))
        if section is None:
            raise ParseError(f"line {lineno}: key {key!r} outside any section")
        if section == "base":
            if key not in _PARAM_KEYS:
                raise ParseError(f"line {lineno}: unknown base key {key!r}")
            if key in base:
                raise ParseError(f"line {lineno}: duplicate base key {key!r}")
            base[key] = _parse_float(value, lineno)
        elif section == "sweep":
            if key not in _SWEEP_KEYS:
                raise ParseError(f"line {lineno}: unknown sweep key {key!r}")
            if key in sweep:
                raise ParseError(f"line {lineno}: duplicate sweep key {key!r}")
            if key in ("from", "to"):
                sweep[key] = _parse_float(value, lineno)
            elif key == "steps":
                try:
                    sweep[key] = int(value)
                except ValueError:
                    raise ParseError(f"line {lineno}: steps must be an integer") from None
            elif key == "quantities":
                sweep[key] = tuple(q.strip() for q in value.split(",") if q.strip())
            elif key == "emit_svg":
                if value not in ("true", "false"):
                    raise ParseError(f"line {lineno}: emit_svg must be true or false")
                sweep[key] = value == "true"
            else:
                sweep[key] = value
        else:
            if key not in AXES:
                raise ParseError(f"line {lineno}: unknown series key {key!r}")
            if any(k == key for k, _ in current_series):
                raise ParseError(f"line {lineno}: duplicate series key {key!r}")
            current_series.append((key, _parse_float(value, lineno)))
    close_series()

    for required in ("vary", "from", "to"):
        if required not in sweep:
            raise ParseError(f"missing required sweep key {required!r}")
    return SweepConfig(
        base=ModelParams(**base),
        vary=str(sweep["vary"]),
        start=float(sweep["from"]),
        stop=float(sweep["to"]),
        steps=int(sweep.get("steps", 200)),
        series=tuple(series),
        quantities=tuple(sweep.get("quantities", QUANTITIES)),
        output=str(sweep.get("output", "sweep")),
        emit_svg=bool(sweep.get("emit_svg", False)),
    )


# ---------------------------------------------------------------------------
# Figure presets

_FIG1_BASE = ModelParams(b1=2, b2=1, Jx=2, Jy=2, Jz=2, Dz=1)
_FIG2_BASE = ModelParams(b1=2, b2=1, Jx=1, Jy=2, Jz=2, Dz=1)
_FIG34_BASE = ModelParams(b1=1, b2=1, Jx=1, Jy=0, Jz=1, Dz=1)

_STEER3 = ("s_ab", "s_ba", "delta12")
_THERMO5 = ("w", "e_d", "s_g", "s_l", "w_l")


def _t_series(*values: float) -> tuple[Overrides, ...]:
    return tuple((("T", v),) for v in values)


def _kz_series(*values: float) -> tuple[Overrides, ...]:
    return tuple((("Kz", v),) for v in values)


def _presets() -> dict[str, SweepConfig]:
    # Axis bounds and series values not fixed by the preset definitions are
    # best-effort readings of the reference plots; see README.
    return {
        "fig1a": SweepConfig(
            base=_FIG1_BASE, vary="Kz", start=0.0, stop=10.0,
            series=_t_series(0.1, 0.2, 0.4), quantities=("s_ab",), output="fig1a",
        ),
        "fig1b": SweepConfig(
            base=_FIG1_BASE, vary="T", start=0.01, stop=1.0,
            series=_kz_series(0.0, 1.0, 2.0, 3.0), quantities=("s_ab",), output="fig1b",
        ),
        "fig1c": SweepConfig(
            base=_FIG1_BASE, vary="T", start=0.01, stop=1.0,
            series=_kz_series(3.0), quantities=_STEER3, output="fig1c",
        ),
        "fig2a": SweepConfig(
            base=_FIG2_BASE, vary="Kz", start=0.0, stop=10.0,
            series=_t_series(0.1, 0.5, 1.0), quantities=("concurrence",), output="fig2a",
        ),
        "fig2b": SweepConfig(
            base=_FIG2_BASE, vary="T", start=0.01, stop=2.0,
            series=_kz_series(0.0, 1.0, 3.0, 6.0), quantities=("concurrence",),
            output="fig2b",
        ),
        "fig2c": SweepConfig(
            base=_FIG2_BASE, vary="T", start=0.01, stop=2.0,
            series=_kz_series(1.0), quantities=("s_ab", "concurrence"), output="fig2c",
        ),
        "fig3a": SweepConfig(
            base=_FIG34_BASE, vary="Kz", start=0.0, stop=50.0,
            series=_t_series(1.0, 10.0, 20.0, 50.0), quantities=("w",), output="fig3a",
        ),
        "fig3b": SweepConfig(
            base=_FIG34_BASE, vary="Kz", start=0.0, stop=50.0,
            series=_t_series(1.0, 10.0, 20.0, 50.0), quantities=("eta",), output="fig3b",
        ),
        "fig3c": SweepConfig(
            base=_FIG34_BASE, vary="Kz", start=0.0, stop=50.0,
            series=_t_series(1.0), quantities=_THERMO5, output="fig3c",
        ),
        "fig4a": SweepConfig(
            base=_FIG34_BASE, vary="T", start=0.01, stop=200.0,
            series=_kz_series(0.0, 5.0, 10.0, 20.0), quantities=("w",), output="fig4a",
        ),
        "fig4b": SweepConfig(
            base=_FIG34_BASE, vary="T", start=0.01, stop=200.0,
            series=_kz_series(0.0, 5.0, 10.0, 20.0), quantities=("eta",), output="fig4b",
        ),
        "fig4c": SweepConfig(
            base=_FIG34_BASE, vary="T", start=0.01, stop=200.0,
            series=_kz_series(10.0), quantities=_THERMO5, output="fig4c",
        ),
    }


PRESET_NAMES = tuple(sorted(_presets()))


def figure_preset(name: str) -> SweepConfig:
    """Sweep config reproducing one reference figure panel."""
    try:
        return _presets()[name]
    except KeyError:
        raise UnknownPreset(
            f"unknown preset {name!r}; available: {', '.join(PRESET_NAMES)}"
        ) from None


# ---------------------------------------------------------------------------
# Execution


def _evaluate_point(
    cfg: SweepConfig, overrides: Overrides, value: float
) -> tuple[float | None, ...]:
    assignments = dict(overrides)
    assignments[cfg.vary] = value
    t = assignments.pop("T", None)
    params = cfg.base.replace(**assignments)
    wanted = set(cfg.quantities)

    cells: dict[str, float | None] = {}
    if wanted & _STEERING_QUANTITIES or "concurrence" in wanted:
        rho = thermal_state(params, t).rho
        if wanted & _STEERING_QUANTITIES:
            report = steering(rho)
            cells["s_ab"] = report.s_ab
            cells["s_ba"] = report.s_ba
            cells["delta12"] = report.delta12
        if "concurrence" in wanted:
            cells["concurrence"] = concurrence_x(rho)
    if wanted & _THERMO_QUANTITIES:
        rep = entropic_terms(params, t)
        cells.update(
            w=rep.w, eta=rep.eta, s_g=rep.s_g, e_d=rep.e_d,
            s_l=rep.s_l, w_l=rep.w_l, mutual_info=rep.mutual_info,
        )
    row = tuple(cells[q] for q in cfg.quantities)
    for q, v in zip(cfg.quantities, row):
        if v is not None and not np.isfinite(v):
            raise ArithmeticError(
                f"non-finite {q} = {v!r} at {cfg.vary} = {value:g}, "
                f"series {series_label(overrides)!r}"
            )
    return row


def run_sweep(cfg: SweepConfig, threads: int = 1) -> SweepResult:
    """Evaluate the sweep; threads = 0 uses one worker per CPU.

    Output row order is series-major with ascending grid values regardless
    of the execution schedule, so results are deterministic.
    """
    if threads == 0:
        threads = os.cpu_count() or 1
    grid = cfg.grid()
    points = [
        (overrides, float(value))
        for overrides in cfg.effective_series()
        for value in grid
    ]

    def job(point):
        overrides, value = point
        try:
            return _evaluate_point(cfg, overrides, value)
        except NonPositiveTemperature as exc:
            raise NonPositiveTemperature(
                f"{exc} (at {cfg.vary} = {value:g}, series {series_label(overrides)!r})"
            ) from None

    if threads > 1:
        with ThreadPoolExecutor(max_workers=threads) as pool:
            evaluated = list(pool.map(job, points))
    else:
        evaluated = [job(point) for point in points]

    rows = tuple(
        (series_label(overrides), value, *cells)
        for (overrides, value), cells in zip(points, evaluated)
    )
    columns = ("series", cfg.vary, *cfg.quantities)
    return SweepResult(columns=columns, rows=rows, provenance=cfg)


def _format_cell(value) -> str:
    if value is None:
        return ""
    if isinstance(value, str):
        return value
    return f"{value:.12g}"


def emit_csv(result: SweepResult, path) -> None:
    """Write the result as UTF-8 CSV with 12 significant digits and \\n endings."""
    lines = [",".join(result.columns)]
    lines.extend(",".join(_format_cell(cell) for cell in row) for row in result.rows)
    data = "\n".join(lines) + "\n"
    with open(path, "w", encoding="utf-8", newline="\n") as fh:
        fh.write(data)
