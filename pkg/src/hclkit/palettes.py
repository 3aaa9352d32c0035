"""Parametric HCL palette construction.

Palettes are built from per-coordinate trajectories over an intensity
``i`` in [0, 1], where ``i = 1`` is full intensity (the dark / outer end):

* constant:   ``v1``
* linear:     ``v2 - (v2 - v1) * i``
* triangular: rises from ``v2`` at ``i = 0`` through ``vmax`` at an
  interior intensity ``j`` and on to ``v1`` at ``i = 1``, with
  ``j = (1 + |vmax - v1| / |vmax - v2|) ** -1`` chosen so the slopes on
  both sides of ``j`` are equal and opposite.

A power transform replaces ``i`` with ``i ** p`` before evaluating the
chroma (``p1``) and luminance (``p2``) trajectories; hue is always linear
in plain ``i``.
"""

from __future__ import annotations

import math
import warnings
from dataclasses import dataclass, fields

from . import core

__all__ = [
    "Trajectory",
    "trajectory_value",
    "PaletteParams",
    "DivergingxParams",
    "PaletteResult",
    "build_palette",
    "resolve_palette_params",
    "qualitative_palette",
    "sequential_palette",
    "diverging_palette",
    "divergingx_palette",
    "cividis_manual",
    "rainbow_hcl",
    "heat_hcl",
    "terrain_hcl",
    "diverging_hsv",
]


@dataclass(frozen=True)
class Trajectory:
    """One HCL coordinate's path as a function of intensity."""

    kind: str  # constant | linear | triangular
    v1: float
    v2: float | None = None
    vmax: float | None = None
    power: float = 1.0

    def __post_init__(self) -> None:
        if self.kind not in ("constant", "linear", "triangular"):
            raise ValueError(f"unknown trajectory kind {self.kind!r}")
        if not self.power > 0:
            raise ValueError(f"trajectory power must be positive, got {self.power!r}")
        if self.kind in ("linear", "triangular") and self.v2 is None:
            raise ValueError(f"{self.kind} trajectory requires v2")
        if self.kind == "triangular" and self.vmax is None:
            raise ValueError("triangular trajectory requires vmax")

    def __call__(self, i: float) -> float:
        return trajectory_value(self, i)


def trajectory_value(t: Trajectory, i: float) -> float:
    """Evaluate a trajectory at intensity ``i`` in [0, 1]."""
    if not 0.0 <= i <= 1.0:
        raise ValueError(f"intensity must be in [0, 1], got {i!r}")
    if t.kind == "constant":
        return t.v1
    i = i**t.power
    if t.kind == "linear":
        return t.v2 - (t.v2 - t.v1) * i
    # triangular; vmax == v2 is the j -> 0 limit (the rise from v2 to vmax
    # has zero length), leaving a straight line from vmax down to v1
    if t.vmax == t.v2:
        j = 0.0
    else:
        j = 1.0 / (1.0 + abs(t.vmax - t.v1) / abs(t.vmax - t.v2))
    if j > 0.0 and i <= j:
        return t.v2 - (t.v2 - t.vmax) * (i / j)
    return t.vmax - (t.vmax - t.v1) * (i - j) / (1.0 - j)


@dataclass(frozen=True)
class PaletteParams:
    """Parameter record for qualitative, sequential, and diverging palettes.

    ``h2`` defaults per palette type (the hue wheel end for qualitative,
    ``h1`` for single-hue sequential).  ``p2`` defaults to ``p1``.  For
    diverging palettes ``c2`` is unused: the center always has chroma 0.
    """

    type: str  # qualitative | sequential-single | sequential-multi | diverging
    h1: float = 0.0
    h2: float | None = None
    c1: float = 80.0
    c2: float | None = None
    cmax: float | None = None
    l1: float = 60.0
    l2: float | None = None
    p1: float = 1.0
    p2: float | None = None
    fixup: bool = True

    _TYPES = ("qualitative", "sequential-single", "sequential-multi", "diverging")

    def __post_init__(self) -> None:
        if self.type not in self._TYPES:
            raise ValueError(f"unknown palette type {self.type!r}; expected one of {self._TYPES}")
        if not self.p1 > 0 or (self.p2 is not None and not self.p2 > 0):
            raise ValueError("palette powers must be positive")
        if self.type.startswith("sequential") and self.l2 is not None and self.l1 == self.l2:
            warnings.warn(
                "sequential palette with l1 == l2 has no luminance contrast",
                UserWarning,
                stacklevel=3,
            )


@dataclass(frozen=True)
class DivergingxParams:
    """Two back-to-back sequential trajectories sharing the midpoint.

    The left arm runs (h1, c1, l1) -> (h2, c2, l2) with powers p1/p2 and
    optional triangular chroma peak cmax1; the right arm runs from the
    midpoint out to (h3, c3, l3) with powers p3/p4 and cmax2.  A missing
    h2 keeps each arm at its own constant hue.  No balance between the
    arms is required.
    """

    h1: float
    h3: float
    h2: float | None = None
    c1: float = 80.0
    c2: float = 0.0
    c3: float = 80.0
    cmax1: float | None = None
    cmax2: float | None = None
    l1: float = 40.0
    l2: float = 95.0
    l3: float = 40.0
    p1: float = 1.0
    p2: float | None = None
    p3: float = 1.0
    p4: float | None = None
    fixup: bool = True

    def __post_init__(self) -> None:
        for p in (self.p1, self.p2, self.p3, self.p4):
            if p is not None and not p > 0:
                raise ValueError("palette powers must be positive")


@dataclass(frozen=True)
class PaletteResult:
    """Generated palette with per-color diagnostics."""

    colors: list[str]
    hcl: list[tuple[float, float, float]]
    clamped: list[bool]


def _encode(hcl_triples, fixup: bool, rev: bool, alpha: float | None) -> PaletteResult:
    colors, clamped = [], []
    for l, c, h in hcl_triples:
        col = core.polar_luv(l, max(c, 0.0), h, alpha)
        strict = core.hex_encode(col, fixup=False)
        if strict is None:
            colors.append(core.hex_encode(col, fixup=True))
            clamped.append(True)
        else:
            colors.append(strict)
            clamped.append(False)
        if not fixup and clamped[-1]:
            colors[-1] = None
    triples = list(hcl_triples)
    if rev:
        colors.reverse()
        clamped.reverse()
        triples.reverse()
    return PaletteResult(colors, triples, clamped)


def _chroma_trajectory(c1, c2, cmax, p) -> Trajectory:
    if cmax is not None:
        return Trajectory("triangular", c1, c2, cmax, p)
    return Trajectory("linear", c1, c2, power=p)


def _intensities(n: int) -> list[float]:
    if n == 1:
        return [1.0]
    return [(n - 1 - k) / (n - 1) for k in range(n)]


def _diverging_grid(n: int) -> list[float]:
    if n == 1:
        return [0.0]
    return [1.0 - 2.0 * k / (n - 1) for k in range(n)]


def build_palette(params: PaletteParams | DivergingxParams, n: int,
                  rev: bool = False, alpha: float | None = None) -> PaletteResult:
    """Evaluate a parameter record at ``n`` colors."""
    if n < 0:
        raise ValueError(f"number of colors must be non-negative, got {n}")
    if n == 0:
        return PaletteResult([], [], [])

    if isinstance(params, DivergingxParams):
        triples = _divergingx_hcl(params, n)
        return _encode(triples, params.fixup, rev, alpha)

    p1 = params.p1
    p2 = params.p2 if params.p2 is not None else p1

    if params.type == "qualitative":
        h2 = params.h2 if params.h2 is not None else params.h1 + 360.0 * (n - 1) / n
        hues = [params.h1 + (h2 - params.h1) * (k / (n - 1) if n > 1 else 0.0) for k in range(n)]
        triples = [(params.l1, params.c1, h) for h in hues]
    elif params.type.startswith("sequential"):
        h2 = params.h2 if params.h2 is not None else params.h1
        c2 = params.c2 if params.c2 is not None else 0.0
        l2 = params.l2 if params.l2 is not None else 90.0
        ctraj = _chroma_trajectory(params.c1, c2, params.cmax, p1)
        ltraj = Trajectory("linear", params.l1, l2, power=p2)
        triples = [
            (ltraj(i), ctraj(i), h2 - (h2 - params.h1) * i)
            for i in _intensities(n)
        ]
    elif params.type == "diverging":
        h2 = params.h2 if params.h2 is not None else 0.0
        l2 = params.l2 if params.l2 is not None else 90.0
        ctraj = _chroma_trajectory(params.c1, 0.0, params.cmax, p1)
        ltraj = Trajectory("linear", params.l1, l2, power=p2)
        triples = [
            (ltraj(abs(r)), ctraj(abs(r)), params.h1 if r > 0 else h2)
            for r in _diverging_grid(n)
        ]
    else:  # pragma: no cover - guarded by PaletteParams
        raise ValueError(f"unknown palette type {params.type!r}")

    return _encode(triples, params.fixup, rev, alpha)


def _divergingx_hcl(p: DivergingxParams, n: int):
    left_h2 = p.h2 if p.h2 is not None else p.h1
    right_h2 = p.h2 if p.h2 is not None else p.h3
    lc = _chroma_trajectory(p.c1, p.c2, p.cmax1, p.p1)
    rc = _chroma_trajectory(p.c3, p.c2, p.cmax2, p.p3)
    ll = Trajectory("linear", p.l1, p.l2, power=p.p2 if p.p2 is not None else p.p1)
    rl = Trajectory("linear", p.l3, p.l2, power=p.p4 if p.p4 is not None else p.p3)
    triples = []
    for r in _diverging_grid(n):
        i = abs(r)
        if r >= 0:
            triples.append((ll(i), lc(i), left_h2 - (left_h2 - p.h1) * i))
        else:
            triples.append((rl(i), rc(i), right_h2 - (right_h2 - p.h3) * i))
    return triples


# --- named/ad-hoc palette front ends --------------------------------------

_FAMILY_DEFAULTS = {
    "qualitative": {"type": "qualitative", "h1": 0.0, "c1": 80.0, "l1": 60.0},
    "sequential": {"type": "sequential-single", "h1": 260.0, "c1": 80.0, "c2": 0.0,
                   "l1": 30.0, "l2": 90.0, "p1": 1.5},
    "diverging": {"type": "diverging", "h1": 260.0, "h2": 0.0, "c1": 80.0,
                  "l1": 30.0, "l2": 90.0, "p1": 1.5},
    "divergingx": {"h1": 195.0, "h3": 325.0, "c1": 70.0, "c2": 0.0, "c3": 70.0,
                   "l1": 55.0, "l2": 95.0, "l3": 55.0},
}


def resolve_palette_params(kind: str, palette: str | None = None,
                           overrides: dict | None = None,
                           registry=None) -> PaletteParams | DivergingxParams:
    """Merge a named palette (or the family defaults) with explicit overrides.

    ``kind`` is the construction family: qualitative, sequential (single
    or multi hue), diverging, or divergingx.
    """
    from . import registry as _registry_mod

    if kind not in _FAMILY_DEFAULTS:
        raise ValueError(f"unknown palette family {kind!r}; expected one of {tuple(_FAMILY_DEFAULTS)}")
    reg = registry if registry is not None else _registry_mod.default_registry()
    overrides = {k: v for k, v in (overrides or {}).items() if v is not None}
    if palette is not None:
        rec = reg.lookup(palette, type=kind)
        base = dict(rec.raw_params)
        base["type"] = rec.type
    else:
        base = dict(_FAMILY_DEFAULTS[kind])
    base.update(overrides)
    if kind == "divergingx":
        return _divx_from_mapping(base)
    if kind == "sequential" and palette is None:
        base["type"] = "sequential-multi" if base.get("h2") is not None else "sequential-single"
    elif kind != "sequential":
        base["type"] = kind
    return _params_from_mapping(base)


def _params_from_mapping(mapping: dict) -> PaletteParams:
    allowed = {f.name for f in fields(PaletteParams)}
    return PaletteParams(**{k: v for k, v in mapping.items() if k in allowed})


def _divx_from_mapping(mapping: dict) -> DivergingxParams:
    allowed = {f.name for f in fields(DivergingxParams)}
    return DivergingxParams(**{k: v for k, v in mapping.items() if k in allowed})


def qualitative_palette(n: int, palette: str | None = None, *, h1=None, h2=None,
                        c1=None, l1=None, fixup=None, rev: bool = False,
                        alpha: float | None = None, registry=None) -> list[str]:
    """Hues spread equidistantly at constant chroma and luminance.

    Without ``h2`` the hues span the full color wheel, stopping short of
    the start so the first and last colors never coincide.
    """
    params = resolve_palette_params(
        "qualitative", palette,
        {"h1": h1, "h2": h2, "c1": c1, "l1": l1, "fixup": fixup}, registry)
    return build_palette(params, n, rev, alpha).colors


def sequential_palette(n: int, palette: str | None = None, *, h1=None, h2=None,
                       c1=None, c2=None, cmax=None, l1=None, l2=None, p1=None, p2=None,
                       fixup=None, rev: bool = False, alpha: float | None = None,
                       registry=None) -> list[str]:
    """Monotone luminance from dark (first color) to light, single or multi hue."""
    params = resolve_palette_params(
        "sequential", palette,
        {"h1": h1, "h2": h2, "c1": c1, "c2": c2, "cmax": cmax,
         "l1": l1, "l2": l2, "p1": p1, "p2": p2, "fixup": fixup}, registry)
    return build_palette(params, n, rev, alpha).colors


def diverging_palette(n: int, palette: str | None = None, *, h1=None, h2=None,
                      c1=None, cmax=None, l1=None, l2=None, p1=None, p2=None,
                      fixup=None, rev: bool = False, alpha: float | None = None,
                      registry=None) -> list[str]:
    """Two chroma/luminance-balanced sequential arms meeting at a neutral center."""
    params = resolve_palette_params(
        "diverging", palette,
        {"h1": h1, "h2": h2, "c1": c1, "cmax": cmax,
         "l1": l1, "l2": l2, "p1": p1, "p2": p2, "fixup": fixup}, registry)
    return build_palette(params, n, rev, alpha).colors


def divergingx_palette(n: int, palette: str | None = None, *, h1=None, h2=None, h3=None,
                       c1=None, c2=None, c3=None, cmax1=None, cmax2=None,
                       l1=None, l2=None, l3=None, p1=None, p2=None, p3=None, p4=None,
                       fixup=None, rev: bool = False, alpha: float | None = None,
                       registry=None) -> list[str]:
    """Flexible diverging palettes without the balance restrictions."""
    params = resolve_palette_params(
        "divergingx", palette,
        {"h1": h1, "h2": h2, "h3": h3, "c1": c1, "c2": c2, "c3": c3,
         "cmax1": cmax1, "cmax2": cmax2, "l1": l1, "l2": l2, "l3": l3,
         "p1": p1, "p2": p2, "p3": p3, "p4": p4, "fixup": fixup}, registry)
    return build_palette(params, n, rev, alpha).colors


def cividis_manual(n: int) -> list[str]:
    """Blue-to-yellow colormap built from explicit piecewise trajectories.

    Linear luminance 13..92, piecewise-linear chroma through
    (i, C) = (1, 30), (0.9, 50), (0.5, 0), (0, 95), and hue 255 on the
    dark half, 75 on the light half.
    """
    if n < 2:
        raise ValueError(f"need at least 2 colors, got {n}")
    xs = (0.0, 0.5, 0.9, 1.0)
    ys = (95.0, 0.0, 50.0, 30.0)

    def interp(x: float) -> float:
        for k in range(len(xs) - 1):
            if xs[k] <= x <= xs[k + 1]:
                f = (x - xs[k]) / (xs[k + 1] - xs[k])
                return ys[k] + f * (ys[k + 1] - ys[k])
        raise ValueError(x)

    out = []
    for k in range(n):
        i = (n - 1 - k) / (n - 1)
        l = 92.0 - (92.0 - 13.0) * i
        c = interp(i)
        h = 255.0 if i >= 0.5 else 75.0
        out.append(core.hex_encode(core.polar_luv(l, c, h), fixup=True))
    return out


# --- thin presets over the main constructors -------------------------------

def rainbow_hcl(n: int, c: float = 50.0, l: float = 70.0, start: float = 0.0,
                end: float | None = None, rev: bool = False,
                alpha: float | None = None) -> list[str]:
    """Balanced hue wheel; a drop-in replacement for RGB rainbows."""
    if end is None:
        end = start + 360.0 * (n - 1) / n if n > 0 else start
    return qualitative_palette(n, h1=start, h2=end, c1=c, l1=l, rev=rev, alpha=alpha)


def heat_hcl(n: int, rev: bool = False, alpha: float | None = None) -> list[str]:
    """Luminance-balanced heat colors (red to yellow)."""
    return sequential_palette(n, h1=0, h2=90, c1=100, c2=30, l1=50, l2=90,
                              p1=0.2, p2=1.0, rev=rev, alpha=alpha)


def terrain_hcl(n: int, rev: bool = False, alpha: float | None = None) -> list[str]:
    """Luminance-balanced terrain colors (green over tan to light gray)."""
    return sequential_palette(n, h1=130, h2=0, c1=80, c2=0, l1=60, l2=95,
                              p1=0.1, p2=1.0, rev=rev, alpha=alpha)


def diverging_hsv(n: int, h1: float = 240.0, h2: float = 0.0, s: float = 1.0,
                  v: float = 1.0, power: float = 1.0, rev: bool = False,
                  alpha: float | None = None) -> list[str]:
    """Diverging palette interpolated linearly in HSV space through white.

    Provided for contrast with the HCL-based construction; the result is
    flashier and much less balanced.
    """
    out = []
    for r in _diverging_grid(n):
        col = core.hsv(h1 if r > 0 else h2, s * abs(r) ** power, v, alpha)
        out.append(core.hex_encode(col, fixup=True))
    if rev:
        out.reverse()
    return out
