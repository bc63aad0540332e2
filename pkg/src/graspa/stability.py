"""Lebesgue-function analysis for mapped bases and infinite-shift predictions.

The Lebesgue function of a mapped Lagrange basis is computed through the same
capacity-scaled barycentric representation used for interpolation, so the two
paths share their numerical behaviour.  For piecewise-shifted bases the
module also evaluates what the Lebesgue constant tends to as the shift grows
without bound: per-subinterval classical constants for the balanced odd and
equal-cardinality multi-cut splits, and the residual-augmented maximum for
the even split.  Those predictions come from closed forms; brute-force
large-shift evaluation is only ever a test oracle.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .domain import NodePartition, NodeSet, PiecewiseDomain
from .exceptions import EvaluationError, PredictionUnavailableError
from .interpolation import barycentric_weights
from .maps import MapChain

__all__ = [
    "StabilityReport",
    "LimitQuantities",
    "lebesgue_function",
    "lebesgue_grid",
    "lebesgue_constant",
    "lagrange_matrix",
    "limit_lebesgue_prediction",
    "even_split_residual_sum",
    "c_factor",
    "delta_bound",
]


@dataclass(frozen=True, eq=False)
class StabilityReport:
    """Lebesgue function samples and their maximum over the grid."""

    grid: np.ndarray
    lebesgue_values: np.ndarray
    lebesgue_constant: float
    predicted_limit: float | None = None
    method: str = "mapped-barycentric"


@dataclass(frozen=True, eq=False)
class LimitQuantities:
    """Closed-form infinite-shift prediction and its ingredients.

    ``side_constants`` are the per-subinterval classical Lebesgue constants.
    For the even split, ``r_max`` is the maximum over the right subinterval of
    the residual sum plus the right-side Lebesgue function, and ``r_samples``
    holds that integrand on the grid.  ``c_table`` maps (mu, tau) index pairs
    to the cross-subinterval amplification factors (diagonal entries are not
    stored; they count as 1).
    """

    case: str
    predicted: float
    side_constants: tuple[float, ...]
    c_table: dict
    r_max: float | None = None
    r_samples: np.ndarray | None = None


def _mapped_node_images(nodes, chain: MapChain | None) -> np.ndarray:
    x = nodes.nodes if isinstance(nodes, NodeSet) else np.asarray(nodes, dtype=float)
    s = np.asarray(chain(x), dtype=float) if chain is not None else x.astype(float)
    if not np.all(np.isfinite(s)):
        raise EvaluationError("map produced non-finite node images")
    if np.unique(s).size != s.size:
        raise ValueError("map is not injective on the nodes: mapped nodes collide")
    return s


def lebesgue_function(nodes, chain: MapChain | None, x):
    """Sum of absolute mapped Lagrange basis values at x; exactly 1 at nodes."""
    s_nodes = _mapped_node_images(nodes, chain)
    w = barycentric_weights(s_nodes)
    pts = np.atleast_1d(np.asarray(x, dtype=float))
    s = np.atleast_1d(np.asarray(chain(pts), dtype=float)) if chain is not None else pts
    if not np.all(np.isfinite(s)):
        raise EvaluationError("map produced non-finite values at evaluation points")
    diff = s[:, None] - s_nodes[None, :]
    hit_row = np.nonzero(np.any(diff == 0.0, axis=1))[0]
    with np.errstate(divide="ignore", invalid="ignore"):
        t = w / diff
        lam = np.abs(t).sum(axis=1) / np.abs(t.sum(axis=1))
    lam[hit_row] = 1.0
    if not np.all(np.isfinite(lam)):
        raise EvaluationError("Lebesgue function evaluation lost finiteness")
    return float(lam[0]) if np.ndim(x) == 0 else lam


def lebesgue_grid(domain: PiecewiseDomain, nodes, grid_spec="auto") -> np.ndarray:
    """Maximization grid for the Lebesgue constant.

    Per subinterval, a uniform sweep (left-open subintervals drop their left
    edge, matching the membership rule), unioned with the midpoints of
    adjacent nodes where the local maxima sit.  ``grid_spec`` is ``"auto"``
    (max(2000, 100 * node count) points per subinterval), an explicit
    per-subinterval count, or a ready-made array of points.
    """
    x = nodes.nodes if isinstance(nodes, NodeSet) else np.asarray(nodes, dtype=float)
    if isinstance(grid_spec, str):
        if grid_spec != "auto":
            raise ValueError(f"unknown grid spec {grid_spec!r}")
        per = max(2000, 100 * x.size)
    elif isinstance(grid_spec, (int, np.integer)):
        per = int(grid_spec)
        if per < 2:
            raise ValueError("per-subinterval grid needs at least 2 points")
    else:
        grid = np.sort(np.asarray(grid_spec, dtype=float))
        if grid.size == 0:
            raise ValueError("empty evaluation grid")
        if grid[0] < domain.interval.a or grid[-1] > domain.interval.b:
            raise ValueError("grid points outside the domain")
        return grid
    bp = domain.breakpoints
    pieces = []
    for i in range(domain.n_subintervals):
        g = np.linspace(bp[i], bp[i + 1], per)
        pieces.append(g if i == 0 else g[1:])
    if x.size > 1:
        pieces.append((x[:-1] + x[1:]) / 2.0)
    return np.unique(np.concatenate(pieces))


def lebesgue_constant(nodes, chain: MapChain | None, domain: PiecewiseDomain,
                      grid_spec="auto") -> StabilityReport:
    """Maximum of the mapped Lebesgue function over a dense grid."""
    grid = lebesgue_grid(domain, nodes, grid_spec)
    if grid.size < 1000:
        raise ValueError(f"grid resolves to {grid.size} points; need at least 1000")
    vals = lebesgue_function(nodes, chain, grid)
    grid.setflags(write=False)
    vals.setflags(write=False)
    return StabilityReport(grid=grid, lebesgue_values=vals,
                           lebesgue_constant=float(vals.max()))


def lagrange_matrix(nodes, chain: MapChain | None, grid) -> np.ndarray:
    """Matrix |l_i(x_j)| of absolute mapped basis values, nodes by grid points.

    Column sums reproduce the Lebesgue function; a grid point whose image hits
    a mapped node exactly yields the corresponding unit column.
    """
    g = np.asarray(grid, dtype=float)
    if g.ndim != 1 or g.size == 0:
        raise ValueError("grid must be a nonempty 1-D sequence")
    s_nodes = _mapped_node_images(nodes, chain)
    w = barycentric_weights(s_nodes)
    s = np.asarray(chain(g), dtype=float) if chain is not None else g
    diff = s[None, :] - s_nodes[:, None]
    hit_node, hit_col = np.nonzero(diff == 0.0)
    with np.errstate(divide="ignore", invalid="ignore"):
        t = w[:, None] / diff
        mat = np.abs(t / t.sum(axis=0)[None, :])
    for i, j in zip(hit_node, hit_col):
        mat[:, j] = 0.0
        mat[i, j] = 1.0
    if not np.all(np.isfinite(mat)):
        raise EvaluationError("Lagrange matrix evaluation lost finiteness")
    return mat


def even_split_residual_sum(left_nodes, right_nodes, x) -> np.ndarray:
    """sum_i |r_i(x)| for the even split: |left| = |right| + 1.

    Each r_i is the nodal polynomial over the right node set times the i-th
    barycentric weight of the left set, so the sum factorizes.  Both products
    are scaled by the same capacity constant, which cancels because the factor
    counts match.
    """
    x1 = np.asarray(left_nodes, dtype=float)
    x2 = np.asarray(right_nodes, dtype=float)
    if x1.size != x2.size + 1:
        raise ValueError(
            f"even split needs |left| = |right| + 1, got {x1.size} and {x2.size}"
        )
    pts = np.atleast_1d(np.asarray(x, dtype=float))
    cap = (max(x1.max(), x2.max()) - min(x1.min(), x2.min())) / 4.0
    diff = (x1[:, None] - x1[None, :]) / cap
    np.fill_diagonal(diff, 1.0)
    prod = diff.prod(axis=1)
    if not np.all(np.isfinite(prod)) or np.any(prod == 0.0):
        raise EvaluationError("residual weight products overflowed")
    weight_sum = np.abs(1.0 / prod).sum()
    omega = np.prod((pts[:, None] - x2[None, :]) / cap, axis=1)
    out = np.abs(omega) * weight_sum
    if not np.all(np.isfinite(out)):
        raise EvaluationError("residual sum evaluation lost finiteness")
    return out


def _classical_max(part: np.ndarray, grid: np.ndarray) -> float:
    if grid.size == 0:
        raise ValueError("empty subinterval grid")
    return float(np.max(lebesgue_function(NodeSet(part), None, grid)))


def limit_lebesgue_prediction(partition: NodePartition, domain: PiecewiseDomain,
                              grid_spec="auto") -> LimitQuantities:
    """Infinite-shift Lebesgue constant from its closed form.

    Covers the single-cut splits with per-side counts equal (odd case: the
    larger of the two classical side constants) or left-larger-by-one (even
    case: the left classical constant against the residual-augmented right
    maximum), and the multi-cut split with all counts equal.  Anything else is
    refused: outside the balance condition the limit is unbounded, and the
    mirrored even split is not implemented -- mirror the domain instead.
    """
    cards = partition.cardinalities
    d = len(cards) - 1
    if d < 1:
        raise PredictionUnavailableError("the domain has no cuts; nothing to predict")
    all_nodes = np.concatenate(partition.parts)
    grid = lebesgue_grid(domain, all_nodes, grid_spec)
    # classical per-side Lebesgue functions are continuous, so the supremum
    # over a half-open subinterval equals the maximum over its closure; use
    # closed masks (cut points count for both neighbours)
    bp = domain.breakpoints
    side_grids = [grid[(grid >= bp[i]) & (grid <= bp[i + 1])] for i in range(d + 1)]
    side_constants = tuple(
        _classical_max(part, g) for part, g in zip(partition.parts, side_grids)
    )
    c_table = {}
    if d >= 2:
        for mu in range(1, d + 2):
            for tau in range(1, d + 2):
                if mu != tau:
                    c_table[(mu, tau)] = c_factor(mu, tau, cards)
    if d == 1:
        n1, n2 = cards
        if n1 == n2:
            return LimitQuantities("odd", max(side_constants), side_constants, c_table)
        if n1 == n2 + 1:
            r_vals = even_split_residual_sum(partition.parts[0], partition.parts[1],
                                             side_grids[1])
            integrand = r_vals + lebesgue_function(NodeSet(partition.parts[1]), None,
                                                   side_grids[1])
            integrand.setflags(write=False)
            r_max = float(integrand.max())
            return LimitQuantities("even", max(side_constants[0], r_max),
                                   side_constants, c_table, r_max=r_max,
                                   r_samples=integrand)
        if n2 == n1 + 1:
            raise PredictionUnavailableError(
                "even split with the larger set on the right is not handled; "
                "mirror the domain and nodes"
            )
        raise PredictionUnavailableError(
            f"per-side counts {cards} differ by more than one; the "
            "infinite-shift Lebesgue constant is unbounded outside the "
            "balance condition"
        )
    if len(set(cards)) == 1:
        return LimitQuantities("multi-equal", max(side_constants), side_constants,
                               c_table)
    raise PredictionUnavailableError(
        f"multi-cut closed form needs equal per-subinterval counts, got {cards}"
    )


def c_factor(mu: int, tau: int, cardinalities) -> float:
    """Cross-subinterval amplification prod_{nu != mu, tau} |(tau-nu)/(mu-nu)|^k_nu.

    Indices are 1-based over the d+1 subintervals; needs d >= 2 and mu != tau.
    """
    cards = [int(c) for c in cardinalities]
    count = len(cards)
    if count < 3:
        raise ValueError("the amplification factor needs at least two cuts (d >= 2)")
    if not (1 <= mu <= count and 1 <= tau <= count):
        raise ValueError(f"indices must lie in 1..{count}")
    if mu == tau:
        raise ValueError("mu and tau must differ")
    out = 1.0
    for nu in range(1, count + 1):
        if nu in (mu, tau):
            continue
        out *= abs((tau - nu) / (mu - nu)) ** cards[nu - 1]
    return out


def delta_bound(n_max: int) -> float:
    """Endpoint-offset threshold 4 / (pi N^2 (2 + pi log(N + 1))).

    Node families whose largest offset stays below this value keep a
    logarithmically growing Lebesgue constant; callers compare their maximal
    beta/gamma against it.
    """
    n_max = int(n_max)
    if n_max < 1:
        raise ValueError("need N >= 1")
    return 4.0 / (np.pi * n_max * n_max * (2.0 + np.pi * np.log(n_max + 1.0)))
