"""Benchmark functions, the RMAE metric, and the comparison sweep harness.

Two discontinuous targets are built in: a single-jump function mixing a
Runge-type bump with a trigonometric branch, and a three-jump variant adding
a kink.  ``run_comparison`` sweeps (method, degree) cells -- plain
interpolation, the bare S-Gibbs shift, and the GRASPA map with or without the
even-split node correction -- collecting the relative maximum absolute error
and the Lebesgue constant for each cell.  Everything is deterministic.
"""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from .domain import Interval, PiecewiseDomain, equispaced_nodes
from .exceptions import EvaluationError
from .interpolation import build_interpolant
from .maps import MapChain, MkteMap, SGibbsMap, VnMap
from .stability import lebesgue_constant, lebesgue_grid, lebesgue_function, lagrange_matrix

__all__ = [
    "DEFAULT_KAPPA",
    "RMAE_GRID_SIZE",
    "METHODS",
    "FUNCTIONS",
    "f1",
    "f2",
    "rmae",
    "method_chain",
    "ExperimentConfig",
    "CellResult",
    "ExperimentResult",
    "run_comparison",
    "FigureOutput",
    "FIGURE_IDS",
    "build_figure",
]

DEFAULT_KAPPA = 10000.0
RMAE_GRID_SIZE = 332
METHODS = ("classical", "sgibbs", "graspa", "graspa+vn")


def f1(x):
    """Single jump at 0: Runge-type bump on the left, trigonometric right."""
    xs = np.asarray(x, dtype=float)
    left = 1.0 / (25.0 * (2.0 * xs + 1.0) ** 2 + 1.0) - 0.5
    right = np.sin(2.0 * xs) * np.cos(3.0 * xs) + 0.5
    out = np.where(xs <= 0.0, left, right)
    return float(out) if xs.ndim == 0 else out


def f2(x):
    """Jumps at -1/2, 0 and 1/2: Runge-type, kink, and trigonometric pieces."""
    xs = np.asarray(x, dtype=float)
    runge = 1.0 / (25.0 * (4.0 * xs + 3.0) ** 2 + 1.0) - 0.5
    kink = np.abs(4.0 * xs - 1.0)
    trig = np.sin(2.0 * xs) * np.cos(3.0 * xs) + 0.5
    out = np.select([xs <= -0.5, (xs > 0.0) & (xs <= 0.5)], [runge, kink], default=trig)
    return float(out) if xs.ndim == 0 else out


FUNCTIONS = {
    "f1": (f1, (0.0,)),
    "f2": (f2, (-0.5, 0.0, 0.5)),
}


def rmae(interp, truth_samples, grid) -> float:
    """Relative maximum absolute error: max |f - R| / max |f| over the grid."""
    g = np.asarray(grid, dtype=float)
    if g.size == 0:
        raise ValueError("empty evaluation grid")
    truth = np.asarray(truth_samples, dtype=float)
    if truth.shape != g.shape:
        raise ValueError("truth samples and grid sizes differ")
    if not np.all(np.isfinite(truth)):
        raise ValueError("truth samples must be finite")
    denom = float(np.max(np.abs(truth)))
    if denom == 0.0:
        raise ValueError("all-zero truth samples: relative error undefined")
    return float(np.max(np.abs(truth - interp(g))) / denom)


def method_chain(method: str, domain: PiecewiseDomain, kappa: float,
                 n: int | None = None) -> MapChain:
    """Map chain for a named comparison method.

    classical = identity, sgibbs = bare shift on the raw nodes, graspa =
    shift after the piecewise stretch, graspa+vn = the same preceded by the
    even-split node correction (needs the degree).
    """
    if method == "classical":
        return MapChain()
    if method == "sgibbs":
        return MapChain((SGibbsMap(kappa, domain),))
    if method == "graspa":
        return MapChain((MkteMap(1.0, domain), SGibbsMap(kappa, domain)))
    if method == "graspa+vn":
        if n is None:
            raise ValueError("graspa+vn requires the degree n")
        return MapChain((VnMap(int(n), domain), MkteMap(1.0, domain),
                         SGibbsMap(kappa, domain)))
    raise ValueError(f"unknown method {method!r}; expected one of {METHODS}")


@dataclass(frozen=True)
class ExperimentConfig:
    """Sweep description; cuts default to the chosen function's own jumps."""

    function: str = "f1"
    cuts: tuple[float, ...] | None = None
    n_values: tuple[int, ...] = ()
    kappa: float = DEFAULT_KAPPA
    methods: tuple[str, ...] = ("classical", "sgibbs", "graspa")
    rmae_grid: int = RMAE_GRID_SIZE
    lebesgue_grid: str | int = "auto"
    interval: tuple[float, float] = (-1.0, 1.0)

    def __post_init__(self) -> None:
        if self.function not in FUNCTIONS:
            raise ValueError(f"unknown function {self.function!r}")
        cuts = self.cuts if self.cuts is not None else FUNCTIONS[self.function][1]
        object.__setattr__(self, "cuts", tuple(float(c) for c in cuts))
        n_values = tuple(int(n) for n in self.n_values)
        if not n_values:
            n_values = (13, 29, 41) if self.function == "f2" else (11, 23, 51)
        if any(n < 1 for n in n_values):
            raise ValueError("all degrees must be >= 1")
        object.__setattr__(self, "n_values", n_values)
        if not self.kappa > 0:
            raise ValueError("kappa must be positive")
        if not self.methods:
            raise ValueError("need at least one method")
        for m in self.methods:
            if m not in METHODS:
                raise ValueError(f"unknown method {m!r}; expected one of {METHODS}")
        if self.rmae_grid < 2:
            raise ValueError("the error grid needs at least 2 points")
        object.__setattr__(self, "interval",
                           (float(self.interval[0]), float(self.interval[1])))
        self.domain()  # validates interval/cut consistency

    def domain(self) -> PiecewiseDomain:
        return PiecewiseDomain(Interval(*self.interval), self.cuts)

    _JSON_KEYS = {"function", "cuts", "kappa", "n", "methods", "rmae_grid",
                  "lebesgue_grid"}

    @classmethod
    def from_json_dict(cls, data: dict) -> "ExperimentConfig":
        unknown = set(data) - cls._JSON_KEYS
        if unknown:
            raise ValueError(f"unknown config keys: {sorted(unknown)}")
        kwargs = {}
        if "function" in data:
            kwargs["function"] = data["function"]
        if "cuts" in data:
            kwargs["cuts"] = tuple(data["cuts"])
        if "n" in data:
            kwargs["n_values"] = tuple(data["n"])
        if "kappa" in data:
            kwargs["kappa"] = float(data["kappa"])
        if "methods" in data:
            kwargs["methods"] = tuple(data["methods"])
        if "rmae_grid" in data:
            kwargs["rmae_grid"] = int(data["rmae_grid"])
        if "lebesgue_grid" in data:
            spec = data["lebesgue_grid"]
            kwargs["lebesgue_grid"] = spec if spec == "auto" else int(spec)
        return cls(**kwargs)

    def to_json_dict(self) -> dict:
        return {
            "function": self.function,
            "cuts": list(self.cuts),
            "kappa": self.kappa,
            "n": list(self.n_values),
            "methods": list(self.methods),
            "rmae_grid": self.rmae_grid,
            "lebesgue_grid": self.lebesgue_grid,
        }


@dataclass(frozen=True)
class CellResult:
    method: str
    n: int
    rmae: float
    lebesgue: float
    ok: bool = True
    note: str = ""


@dataclass(frozen=True, eq=False)
class ExperimentResult:
    config: ExperimentConfig
    grid: np.ndarray
    truth: np.ndarray
    cells: tuple[CellResult, ...]
    samples: dict = field(default_factory=dict)

    def cell(self, method: str, n: int) -> CellResult:
        for c in self.cells:
            if c.method == method and c.n == n:
                return c
        raise KeyError(f"no cell for ({method!r}, {n})")


def run_comparison(config: ExperimentConfig) -> ExperimentResult:
    """Run every (method, n) cell of the sweep.

    Numerical blowups (weight overflow, shifts so large the mapped nodes
    collapse together) are flagged per cell instead of aborting; misuse of
    the node correction (odd degree or an unsupported domain) and bad grid
    specs are hard errors.
    """
    fn = FUNCTIONS[config.function][0]
    domain = config.domain()
    grid = np.linspace(config.interval[0], config.interval[1], config.rmae_grid)
    truth = fn(grid)
    denom = float(np.max(np.abs(truth)))
    lebesgue_grid(domain, equispaced_nodes(config.n_values[0],
                                           Interval(*config.interval)),
                  config.lebesgue_grid)  # reject bad grid specs up front
    cells = []
    samples = {}
    for n in config.n_values:
        nodes = equispaced_nodes(n, Interval(*config.interval))
        fvals = fn(nodes.nodes)
        for method in config.methods:
            chain = method_chain(method, domain, config.kappa, n)
            try:
                interp = build_interpolant(nodes, fvals, chain)
                approx = interp(grid)
                err = float(np.max(np.abs(truth - approx)) / denom)
                rep = lebesgue_constant(nodes, chain, domain, config.lebesgue_grid)
                cells.append(CellResult(method, n, err, rep.lebesgue_constant))
                samples[(method, n)] = approx
            except (EvaluationError, ValueError) as exc:
                cells.append(CellResult(method, n, float("nan"), float("nan"),
                                        ok=False, note=str(exc)))
    return ExperimentResult(config, grid, truth, tuple(cells), samples)


# ---------------------------------------------------------------------------
# Figure tables
# ---------------------------------------------------------------------------

@dataclass(frozen=True, eq=False)
class FigureOutput:
    """One CSV-able table; kind "xy" tables plot as lines (column 0 is x)."""

    name: str
    header: tuple[str, ...]
    rows: np.ndarray
    kind: str = "xy"
    logy: bool = False


ODD_SWEEP = tuple(range(11, 52, 4))
EVEN_SWEEP = tuple(range(8, 49, 4))
F2_SWEEP = tuple(range(13, 50, 4))
F2_LONG_SWEEP = tuple(range(13, 90, 4))
MATRIX_GRID_SIZE = 100

FIGURE_IDS = ("fig1", "fig2", "fig3", "fig3bis", "fig4", "fig5", "fig6", "fig7",
              "fig8", "fig8bis", "fig9")

_COLUMN_TAG = {"classical": "classical", "sgibbs": "sgibbs", "graspa": "graspa",
               "graspa+vn": "graspa_vn"}


def _lambda_function_table(name, function, n, methods):
    fn, cuts = FUNCTIONS[function]
    domain = PiecewiseDomain(Interval(-1.0, 1.0), cuts)
    nodes = equispaced_nodes(n)
    grid = lebesgue_grid(domain, nodes)
    cols = [grid]
    header = ["x"]
    for m in methods:
        chain = method_chain(m, domain, DEFAULT_KAPPA, n)
        cols.append(lebesgue_function(nodes, chain, grid))
        header.append(f"lambda_{_COLUMN_TAG[m]}")
    return FigureOutput(name, tuple(header), np.column_stack(cols), logy=True)


_FIELD_TAG = {"lebesgue": "lambda", "rmae": "rmae"}


def _sweep_table(name, function, n_list, methods, fields):
    config = ExperimentConfig(function=function, n_values=tuple(n_list),
                              methods=tuple(methods))
    result = run_comparison(config)
    header = ["n"]
    cols = [np.asarray(n_list, dtype=float)]
    for fieldname in fields:
        for m in methods:
            header.append(f"{_FIELD_TAG[fieldname]}_{_COLUMN_TAG[m]}")
            cols.append(np.array(
                [getattr(result.cell(m, n), fieldname) for n in n_list]))
    return FigureOutput(name, tuple(header), np.column_stack(cols), logy=True)


def _interpolant_table(name, function, n, methods):
    config = ExperimentConfig(function=function, n_values=(n,),
                              methods=tuple(methods))
    result = run_comparison(config)
    header = ["x", "f"] + [f"r_{_COLUMN_TAG[m]}" for m in methods]
    cols = [result.grid, result.truth] + [result.samples[(m, n)] for m in methods]
    return FigureOutput(name, tuple(header), np.column_stack(cols))


def _matrix_table(name, function, n, method):
    fn, cuts = FUNCTIONS[function]
    domain = PiecewiseDomain(Interval(-1.0, 1.0), cuts)
    nodes = equispaced_nodes(n)
    grid = np.linspace(-1.0, 1.0, MATRIX_GRID_SIZE)
    chain = method_chain(method, domain, DEFAULT_KAPPA, n)
    mat = lagrange_matrix(nodes, chain, grid)
    header = tuple(format(x, ".17g") for x in grid)
    return FigureOutput(name, header, mat, kind="matrix")


def build_figure(fig_id: str) -> tuple[FigureOutput, ...]:
    """Tables reproducing the numbered comparison figures.

    fig1/fig6: Lebesgue functions at a fixed degree.  fig2/fig5/fig8:
    Lebesgue-constant (and, for fig5, error) sweeps.  fig3/fig7: interpolant
    curves.  fig3bis/fig8bis: error sweeps.  fig4: the even-split basis
    matrices with and without the node correction.  fig9: the late
    fixed-shift divergence on the three-jump target.
    """
    three = ("classical", "sgibbs", "graspa")
    if fig_id == "fig1":
        return (_lambda_function_table("fig1", "f1", 23, three),)
    if fig_id == "fig2":
        return (_sweep_table("fig2", "f1", ODD_SWEEP, three, ("lebesgue",)),)
    if fig_id == "fig3":
        return (_interpolant_table("fig3", "f1", 23, three),)
    if fig_id == "fig3bis":
        return (_sweep_table("fig3bis", "f1", ODD_SWEEP, three, ("rmae",)),)
    if fig_id == "fig4":
        return (_matrix_table("fig4", "f1", 50, "graspa"),
                _matrix_table("fig4_vn", "f1", 50, "graspa+vn"))
    if fig_id == "fig5":
        return (_sweep_table("fig5", "f1", EVEN_SWEEP,
                             ("classical", "sgibbs", "graspa+vn"),
                             ("lebesgue", "rmae")),)
    if fig_id == "fig6":
        return (_lambda_function_table("fig6", "f2", 29, three),)
    if fig_id == "fig7":
        return (_interpolant_table("fig7", "f2", 29, three),)
    if fig_id == "fig8":
        return (_sweep_table("fig8", "f2", F2_SWEEP, three, ("lebesgue",)),)
    if fig_id == "fig8bis":
        return (_sweep_table("fig8bis", "f2", F2_SWEEP, three, ("rmae",)),)
    if fig_id == "fig9":
        return (_sweep_table("fig9", "f2", F2_LONG_SWEEP, ("graspa",),
                             ("lebesgue",)),)
    raise ValueError(f"unknown figure id {fig_id!r}; expected one of {FIGURE_IDS}")
