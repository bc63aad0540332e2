"""Injective maps on a partitioned interval, composable into chains.

Building blocks: per-subinterval affine reparameterizations, the
Kosloff-Tal-Ezer sine stretch ``M_a(x) = sin(a pi x / 2) / sin(a pi / 2)``,
the S-Gibbs shift that separates the subintervals by a large constant, their
piecewise conjugation (MKTE), and a node-correction map for the even
equispaced split.  The full GRASPA map is the shift composed with MKTE.

A :class:`MapChain` is plain data (a tuple of atomic maps applied
left-to-right) so that experiment configurations can be serialized and
logged; every atom is injective on its declared domain.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .domain import PiecewiseDomain
from .exceptions import EvaluationError

__all__ = [
    "affine_to_reference",
    "affine_from_reference",
    "kte",
    "sgibbs",
    "mkte",
    "vn_correction",
    "graspa_map",
    "IdentityMap",
    "KteMap",
    "SGibbsMap",
    "MkteMap",
    "VnMap",
    "AffineToReferenceMap",
    "AffineFromReferenceMap",
    "MapChain",
    "sgibbs_chain",
    "mkte_chain",
    "graspa_chain",
    "map_from_dict",
]


def _check_alpha(alpha: float) -> None:
    if not 0.0 < alpha <= 1.0:
        raise ValueError(f"alpha must lie in (0, 1], got {alpha}")


def _unwrap(x, out: np.ndarray):
    return float(out) if np.ndim(x) == 0 else out


def affine_to_reference(x, sub: int, domain: PiecewiseDomain):
    """F_sub: subinterval sub -> [-1, 1], sending its endpoints to -1 and 1."""
    lo, hi = domain.subinterval_bounds(sub)
    xs = np.asarray(x, dtype=float)
    return _unwrap(x, 2.0 * (xs - lo) / (hi - lo) - 1.0)


def affine_from_reference(u, sub: int, domain: PiecewiseDomain):
    """G_sub, the inverse of :func:`affine_to_reference`."""
    lo, hi = domain.subinterval_bounds(sub)
    us = np.asarray(u, dtype=float)
    return _unwrap(u, lo + (hi - lo) * (us + 1.0) / 2.0)


def kte(alpha: float, x):
    """Kosloff-Tal-Ezer stretch on [-1, 1]: odd, strictly increasing, fixes +-1.

    At alpha = 1 it sends equispaced points to Chebyshev-Lobatto-type points.
    """
    _check_alpha(alpha)
    xs = np.asarray(x, dtype=float)
    half = alpha * np.pi / 2.0
    return _unwrap(x, np.sin(half * xs) / np.sin(half))


def sgibbs(kappa: float, domain: PiecewiseDomain, x):
    """S-Gibbs shift: adds (tau - 1) kappa on subinterval tau.

    Injective for every kappa > 0 thanks to the left-closed membership rule;
    globally increasing once kappa exceeds the interval width.
    """
    if not kappa > 0:
        raise ValueError("kappa must be positive")
    xs = np.asarray(x, dtype=float)
    tau = np.asarray(domain.subinterval_index(xs), dtype=float)
    return _unwrap(x, xs + (tau - 1.0) * kappa)


def mkte(alpha: float, domain: PiecewiseDomain, x):
    """Piecewise KTE: G_i o M_alpha o F_i on each subinterval.

    Maps [a, b] onto itself; continuous, strictly increasing, and fixes a, b
    and every cut point.
    """
    _check_alpha(alpha)
    xs = np.asarray(x, dtype=float)
    idx = np.asarray(domain.subinterval_index(xs))
    bp = np.asarray(domain.breakpoints)
    lo = bp[idx - 1]
    hi = bp[idx]
    u = 2.0 * (xs - lo) / (hi - lo) - 1.0
    v = kte(alpha, np.clip(u, -1.0, 1.0))
    y = lo + (hi - lo) * (np.asarray(v) + 1.0) / 2.0
    # Pin subinterval ends exactly, and keep every interior image strictly
    # inside its half-open source cell: the sine flattens quadratically at the
    # ends, and an image rounded onto the open left edge would flip the
    # piecewise dispatch of any shift applied next.
    y = np.where(u >= 1.0, hi, np.where(u <= -1.0, lo, np.clip(y, lo, hi)))
    stuck = (xs > lo) & (y <= lo)
    if np.any(stuck):
        y = np.where(stuck, np.nextafter(lo, hi), y)
    return _unwrap(x, y)


def vn_correction(n: int, domain: PiecewiseDomain, x):
    """Node-correction map for the even equispaced split on [-1, 1], cut at 0.

    Identity left of the cut; on the right, a two-slope contraction that
    halves the gap between the cut and the first node while keeping 1 fixed.
    Only this fixed form is implemented: even n >= 4, domain [-1, 1] with a
    single cut at 0; no generalization to other cut layouts is attempted.
    """
    n = int(n)
    if n < 4 or n % 2 != 0:
        raise ValueError(f"the node correction needs even n >= 4, got {n}")
    if domain.cuts != (0.0,) or (domain.interval.a, domain.interval.b) != (-1.0, 1.0):
        raise ValueError("the node correction is defined on [-1, 1] with a single cut at 0")
    xs = np.asarray(x, dtype=float)
    if np.any(xs < -1.0) or np.any(xs > 1.0):
        raise ValueError("point outside the domain")
    knee = 2.0 / n
    out = np.where(
        xs <= 0.0,
        xs,
        np.where(xs <= knee, n * xs / (2.0 * (n - 1.0)), (n * xs - 1.0) / (n - 1.0)),
    )
    return _unwrap(x, out)


def graspa_map(kappa: float, domain: PiecewiseDomain, x, with_vn: bool = False,
               n: int | None = None):
    """GRASPA map: S-Gibbs shift composed with MKTE at alpha = 1.

    With ``with_vn`` the node-correction map is applied first (requires the
    degree ``n`` and the correction's supported domain).
    """
    y = x
    if with_vn:
        if n is None:
            raise ValueError("with_vn requires the degree n")
        y = vn_correction(n, domain, y)
    return sgibbs(kappa, domain, mkte(1.0, domain, y))


# ---------------------------------------------------------------------------
# Atomic maps as data, and their composition
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class IdentityMap:
    def __call__(self, x):
        return _unwrap(x, np.asarray(x, dtype=float))

    def to_dict(self) -> dict:
        return {"kind": "identity"}


@dataclass(frozen=True)
class KteMap:
    alpha: float = 1.0

    def __post_init__(self) -> None:
        _check_alpha(self.alpha)

    def __call__(self, x):
        return kte(self.alpha, x)

    def to_dict(self) -> dict:
        return {"kind": "kte", "alpha": self.alpha}


@dataclass(frozen=True)
class SGibbsMap:
    kappa: float
    domain: PiecewiseDomain

    def __post_init__(self) -> None:
        if not self.kappa > 0:
            raise ValueError("kappa must be positive")

    def __call__(self, x):
        return sgibbs(self.kappa, self.domain, x)

    def to_dict(self) -> dict:
        return {"kind": "sgibbs", "kappa": self.kappa, "domain": self.domain.to_dict()}


@dataclass(frozen=True)
class MkteMap:
    alpha: float
    domain: PiecewiseDomain

    def __post_init__(self) -> None:
        _check_alpha(self.alpha)

    def __call__(self, x):
        return mkte(self.alpha, self.domain, x)

    def to_dict(self) -> dict:
        return {"kind": "mkte", "alpha": self.alpha, "domain": self.domain.to_dict()}


@dataclass(frozen=True)
class VnMap:
    n: int
    domain: PiecewiseDomain

    def __post_init__(self) -> None:
        vn_correction(self.n, self.domain, 0.0)  # validates n and the domain shape

    def __call__(self, x):
        return vn_correction(self.n, self.domain, x)

    def to_dict(self) -> dict:
        return {"kind": "vn", "n": self.n, "domain": self.domain.to_dict()}


@dataclass(frozen=True)
class AffineToReferenceMap:
    sub: int
    domain: PiecewiseDomain

    def __call__(self, x):
        return affine_to_reference(x, self.sub, self.domain)

    def to_dict(self) -> dict:
        return {"kind": "affine_to_reference", "sub": self.sub,
                "domain": self.domain.to_dict()}


@dataclass(frozen=True)
class AffineFromReferenceMap:
    sub: int
    domain: PiecewiseDomain

    def __call__(self, u):
        return affine_from_reference(u, self.sub, self.domain)

    def to_dict(self) -> dict:
        return {"kind": "affine_from_reference", "sub": self.sub,
                "domain": self.domain.to_dict()}


@dataclass(frozen=True)
class MapChain:
    """Composition of atomic maps, applied left-to-right; empty = identity."""

    maps: tuple = ()

    def __call__(self, x):
        out = np.asarray(x, dtype=float)
        for m in self.maps:
            out = np.asarray(m(out), dtype=float)
        if not np.all(np.isfinite(out)):
            raise EvaluationError("map chain produced non-finite values")
        return _unwrap(x, out)

    def then(self, atom) -> "MapChain":
        return MapChain(self.maps + (atom,))

    def to_dict(self) -> dict:
        return {"maps": [m.to_dict() for m in self.maps]}

    @classmethod
    def from_dict(cls, data: dict) -> "MapChain":
        return cls(tuple(map_from_dict(d) for d in data["maps"]))


def map_from_dict(data: dict):
    """Rebuild an atomic map from its JSON descriptor."""
    kind = data["kind"]
    if kind == "identity":
        return IdentityMap()
    if kind == "kte":
        return KteMap(float(data.get("alpha", 1.0)))
    if kind not in ("sgibbs", "mkte", "vn", "affine_to_reference",
                    "affine_from_reference"):
        raise ValueError(f"unknown map kind {kind!r}")
    dom = PiecewiseDomain.from_dict(data["domain"])
    if kind == "sgibbs":
        return SGibbsMap(float(data["kappa"]), dom)
    if kind == "mkte":
        return MkteMap(float(data.get("alpha", 1.0)), dom)
    if kind == "vn":
        return VnMap(int(data["n"]), dom)
    if kind == "affine_to_reference":
        return AffineToReferenceMap(int(data["sub"]), dom)
    return AffineFromReferenceMap(int(data["sub"]), dom)


def sgibbs_chain(kappa: float, domain: PiecewiseDomain) -> MapChain:
    return MapChain((SGibbsMap(kappa, domain),))


def mkte_chain(alpha: float, domain: PiecewiseDomain) -> MapChain:
    return MapChain((MkteMap(alpha, domain),))


def graspa_chain(kappa: float, domain: PiecewiseDomain, with_vn: bool = False,
                 n: int | None = None) -> MapChain:
    """S-Gibbs shift after MKTE(1), optionally preceded by the node correction."""
    atoms: tuple = (MkteMap(1.0, domain), SGibbsMap(kappa, domain))
    if with_vn:
        if n is None:
            raise ValueError("with_vn requires the degree n")
        atoms = (VnMap(int(n), domain),) + atoms
    return MapChain(atoms)
