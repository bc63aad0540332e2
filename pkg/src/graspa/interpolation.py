"""Barycentric interpolation in a mapped variable.

Values sampled at the original nodes are interpolated as a polynomial in the
mapped variable ``s = S(x)`` and evaluated through the quotient (second-form)
barycentric formula.  Weight products are capacity-scaled so they stay
representable even when the mapped nodes form clusters separated by a shift
of 1e4 or more; the common scale cancels in the quotient.  A monomial
(Vandermonde) path is kept for low degrees as an independent cross-check --
for shifted node sets the mapped monomial basis is numerically unusable
beyond toy sizes, so it is guarded, never the production path.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .domain import NodeSet
from .exceptions import EvaluationError
from .maps import MapChain

__all__ = [
    "Interpolant",
    "barycentric_weights",
    "build_interpolant",
    "eval_interpolant",
    "vandermonde_coefficients",
    "eval_monomial",
]

VANDERMONDE_MAX_DEGREE = 12


def _node_array(nodes) -> np.ndarray:
    if isinstance(nodes, NodeSet):
        return nodes.nodes
    return np.asarray(nodes, dtype=float)


def barycentric_weights(points) -> np.ndarray:
    """Weights 1 / prod_{j != i} (s_i - s_j), up to a common scale.

    Each difference is divided by a capacity constant (one quarter of the node
    span) before the product is taken; the resulting common factor drops out
    of the quotient evaluation formula but keeps the partial products finite
    for clustered node sets.
    """
    s = np.asarray(points, dtype=float)
    if s.ndim != 1 or s.size == 0:
        raise ValueError("points must form a nonempty 1-D sequence")
    if s.size == 1:
        return np.ones(1)
    cap = (s.max() - s.min()) / 4.0
    if not cap > 0:
        raise ValueError("points must be distinct")
    diff = (s[:, None] - s[None, :]) / cap
    np.fill_diagonal(diff, 1.0)
    prod = diff.prod(axis=1)
    if not np.all(np.isfinite(prod)) or np.any(prod == 0.0):
        raise EvaluationError("barycentric weight products overflowed")
    return 1.0 / prod


@dataclass(frozen=True, eq=False)
class Interpolant:
    """Mapped-node barycentric interpolant; immutable, exact at the nodes."""

    nodes: np.ndarray
    mapped_nodes: np.ndarray
    values: np.ndarray
    weights: np.ndarray
    chain: MapChain

    def __call__(self, x):
        return eval_interpolant(self, x)

    def __len__(self) -> int:
        return int(self.nodes.size)


def build_interpolant(nodes, values, chain: MapChain | None = None) -> Interpolant:
    """Construct the interpolant of (nodes, values) in the mapped variable.

    The samples are taken as given -- changing the chain never triggers a
    resample of the underlying function.  Raises if the chain is not
    injective on the nodes (mapped nodes collide) or if any value is
    non-finite.
    """
    chain = chain if chain is not None else MapChain()
    x = _node_array(nodes)
    f = np.array(values, dtype=float)
    if f.shape != x.shape:
        raise ValueError(f"got {f.size} values for {x.size} nodes")
    if not np.all(np.isfinite(f)):
        raise ValueError("sample values must be finite")
    s = np.asarray(chain(x), dtype=float)
    if not np.all(np.isfinite(s)):
        raise EvaluationError("map produced non-finite node images")
    order = np.argsort(s, kind="stable")
    x, s, f = x[order].copy(), s[order].copy(), f[order].copy()
    if np.any(np.diff(s) <= 0):
        raise ValueError("map is not injective on the nodes: mapped nodes collide")
    w = barycentric_weights(s)
    for arr in (x, s, f, w):
        arr.setflags(write=False)
    return Interpolant(x, s, f, w, chain)


def eval_interpolant(interp: Interpolant, x):
    """Evaluate via the quotient barycentric form in s = S(x).

    A point whose image coincides bit-exactly with a mapped node returns the
    stored sample value, making the interpolation conditions exact.
    """
    pts = np.atleast_1d(np.asarray(x, dtype=float))
    s = np.atleast_1d(np.asarray(interp.chain(pts), dtype=float))
    if not np.all(np.isfinite(s)):
        raise EvaluationError("map produced non-finite values at evaluation points")
    diff = s[:, None] - interp.mapped_nodes[None, :]
    hit_row, hit_col = np.nonzero(diff == 0.0)
    with np.errstate(divide="ignore", invalid="ignore"):
        t = interp.weights / diff
        out = (t @ interp.values) / t.sum(axis=1)
    out[hit_row] = interp.values[hit_col]
    if not np.all(np.isfinite(out)):
        raise EvaluationError("barycentric evaluation lost finiteness")
    return float(out[0]) if np.ndim(x) == 0 else out


def vandermonde_coefficients(nodes, values, chain: MapChain | None = None) -> np.ndarray:
    """Monomial coefficients c_0..c_n of the interpolant in the mapped variable.

    Low-degree oracle path only: refuses degree > 12, where the mapped
    Vandermonde system is too ill-conditioned to trust; use the barycentric
    interpolant instead.
    """
    chain = chain if chain is not None else MapChain()
    x = _node_array(nodes)
    f = np.asarray(values, dtype=float)
    if f.shape != x.shape:
        raise ValueError(f"got {f.size} values for {x.size} nodes")
    degree = x.size - 1
    if degree > VANDERMONDE_MAX_DEGREE:
        raise ValueError(
            f"degree {degree} exceeds the Vandermonde guard "
            f"({VANDERMONDE_MAX_DEGREE}); use build_interpolant for the "
            "barycentric path"
        )
    s = np.asarray(chain(x), dtype=float)
    if np.unique(s).size != s.size:
        raise ValueError("map is not injective on the nodes: mapped nodes collide")
    vmat = np.vander(s, increasing=True)
    try:
        return np.linalg.solve(vmat, f)
    except np.linalg.LinAlgError as exc:
        raise ValueError(f"Vandermonde system is numerically singular: {exc}") from exc


def eval_monomial(coeffs, s):
    """Horner evaluation of sum_i c_i s^i (ascending coefficients)."""
    return np.polynomial.polynomial.polyval(np.asarray(s, dtype=float),
                                            np.asarray(coeffs, dtype=float))
