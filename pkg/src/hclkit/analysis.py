"""Palette analysis: HCL spectra, type inference, plane projections, SVG output.

The SVG emitters are deterministic: identical input produces identical
bytes, so outputs are safe to golden-file.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field

import numpy as np

from . import core
from .manip import parse_color

__all__ = [
    "SpectrumTrace",
    "PaletteTypeGuess",
    "ProjectionData",
    "spectrum",
    "infer_type",
    "hcl_projection",
    "swatch_svg",
    "spectrum_svg",
    "LOW_CHROMA_THRESHOLD",
    "QUALITATIVE_LUMINANCE_RANGE",
    "MONOTONE_NOISE",
]

#: Below this chroma, hue is too poorly identified to trust; such hues
#: are replaced by interpolation from the neighboring reliable ones.
LOW_CHROMA_THRESHOLD = 8.0

#: Luminance range treated as "approximately constant" when inferring
#: the palette type.
QUALITATIVE_LUMINANCE_RANGE = 10.0

#: Luminance wiggle tolerated by the monotonicity checks, in L units.
MONOTONE_NOISE = 1.0

# byte-quantized colors never have perfectly constant coordinates, so the
# projection only models a collapsed coordinate when it truly varies
_VARIES_TOL = 2.0


@dataclass(frozen=True)
class SpectrumTrace:
    """Per-color hue/chroma/luminance sequences of an analyzed palette.

    Hues are smoothed over low-chroma colors and unwrapped so adjacent
    values never jump by more than 180 degrees; after unwrapping they lie
    within [-360, 360] whenever the palette spans at most two turns.
    """

    colors: list[str]
    hue: list[float]
    chroma: list[float]
    luminance: list[float]
    fixup_fired: list[bool]
    degenerate_hue: bool = False

    @property
    def n(self) -> int:
        return len(self.colors)

    def to_json_dict(self) -> dict:
        return {
            "n": self.n,
            "colors": self.colors,
            "hue": self.hue,
            "chroma": self.chroma,
            "luminance": self.luminance,
            "fixup_fired": self.fixup_fired,
            "degenerate_hue": self.degenerate_hue,
        }


@dataclass(frozen=True)
class PaletteTypeGuess:
    type: str  # qualitative | sequential | diverging
    evidence: dict
    low_confidence: bool = False

    def to_json_dict(self) -> dict:
        return {"type": self.type, "evidence": self.evidence,
                "low_confidence": self.low_confidence}


def spectrum(colors, clamped=None) -> SpectrumTrace:
    """Convert a palette to its HCL trace with hue smoothing and unwrapping.

    ``clamped`` optionally carries per-color gamut-fixup flags from the
    palette generator; analysis of plain hex input cannot recover them.
    """
    items = [colors] if isinstance(colors, str) else list(colors)
    if not items:
        raise ValueError("need at least one color")
    hexes, hs, cs, ls = [], [], [], []
    for idx, item in enumerate(items):
        try:
            col = parse_color(item)
        except ValueError as exc:
            raise ValueError(f"color {idx}: {exc}") from None
        hexes.append(core.hex_encode(col))
        l, c, h = core.convert(col, "polarLUV").coords
        hs.append(h)
        cs.append(c)
        ls.append(l)
    hs, degenerate = _smooth_unwrap_hues(hs, cs)
    if clamped is None:
        flags = [False] * len(items)
    else:
        flags = [bool(v) for v in clamped]
        if len(flags) != len(items):
            raise ValueError("clamped flags must match the number of colors")
    return SpectrumTrace(hexes, hs, cs, ls, flags, degenerate)


def _smooth_unwrap_hues(hues, chromas):
    n = len(hues)
    reliable = [i for i in range(n) if chromas[i] >= LOW_CHROMA_THRESHOLD]
    if not reliable:
        return [0.0] * n, True
    # unwrap along the reliable subsequence
    unwrapped = dict()
    prev = None
    for i in reliable:
        h = hues[i]
        if prev is not None:
            d = h - unwrapped[prev]
            d -= 360.0 * round(d / 360.0)
            h = unwrapped[prev] + d
        unwrapped[i] = h
        prev = i
    # fill unreliable positions by linear interpolation in index space,
    # extending flat beyond the first/last reliable color
    out = [0.0] * n
    for i in range(n):
        if i in unwrapped:
            out[i] = unwrapped[i]
            continue
        before = max((j for j in reliable if j < i), default=None)
        after = min((j for j in reliable if j > i), default=None)
        if before is None:
            out[i] = unwrapped[after]
        elif after is None:
            out[i] = unwrapped[before]
        else:
            f = (i - before) / (after - before)
            out[i] = unwrapped[before] + f * (unwrapped[after] - unwrapped[before])
    # slide by whole turns into [0, 360], or [-360, 360] if the span needs it
    shift = -360.0 * math.floor(min(out) / 360.0)
    out = [v + shift for v in out]
    if max(out) > 360.0 and min(out) - 360.0 >= -360.0:
        out = [v - 360.0 for v in out]
    return out, False


def _monotone(values, sign: int) -> bool:
    return all(sign * (b - a) >= -MONOTONE_NOISE for a, b in zip(values, values[1:]))


def infer_type(trace: SpectrumTrace) -> PaletteTypeGuess:
    """Classify a palette from its luminance trajectory.

    Approximately constant luminance means qualitative; monotone means
    sequential; a single interior extremum with monotone arms means
    diverging.  Anything else falls back to sequential with a
    low-confidence flag.
    """
    if trace.n < 3:
        raise ValueError(f"type inference needs at least 3 colors, got {trace.n}")
    lum = trace.luminance
    l_range = max(lum) - min(lum)
    evidence = {"luminance_range": round(l_range, 4)}
    if l_range < QUALITATIVE_LUMINANCE_RANGE:
        return PaletteTypeGuess("qualitative", evidence)
    for sign, label in ((1, "increasing"), (-1, "decreasing")):
        if _monotone(lum, sign):
            evidence["direction"] = label
            return PaletteTypeGuess("sequential", evidence)
    for pick, sign in ((max, 1), (min, -1)):
        m = lum.index(pick(lum))
        if 0 < m < trace.n - 1 and _monotone(lum[: m + 1], sign) and _monotone(lum[m:], -sign):
            evidence["extremum_index"] = m
            evidence["extremum"] = "maximum" if sign == 1 else "minimum"
            return PaletteTypeGuess("diverging", evidence)
    evidence["note"] = "luminance trajectory is neither flat, monotone, nor single-peaked"
    return PaletteTypeGuess("sequential", evidence, low_confidence=True)


@dataclass(frozen=True)
class ProjectionData:
    """An HCL-plane slice with the palette's trajectory highlighted.

    ``cells[j][i]`` is the hex color at ``(x_values[i], y_values[j])`` or
    None where that coordinate is outside the displayable gamut.
    """

    mode: str  # hue-chroma | chroma-luminance
    x_label: str
    y_label: str
    x_values: list[float]
    y_values: list[float]
    cells: list[list[str | None]]
    polyline: list[tuple[float, float]]
    points_hcl: list[tuple[float, float, float]]
    fixed: dict = field(default_factory=dict)
    fit: dict | None = None

    def to_json_dict(self) -> dict:
        return {
            "mode": self.mode,
            "x_label": self.x_label,
            "y_label": self.y_label,
            "x_values": self.x_values,
            "y_values": self.y_values,
            "cells": self.cells,
            "polyline": [list(p) for p in self.polyline],
            "points_hcl": [list(p) for p in self.points_hcl],
            "fixed": self.fixed,
            "fit": self.fit,
        }


def _fit_plane(xs, ys, zs):
    """Least-squares z ~ b0 + bx*x + by*y; returns (b0, bx, by)."""
    a = np.column_stack([np.ones(len(xs)), xs, ys])
    coef, *_ = np.linalg.lstsq(a, np.asarray(zs, dtype=float), rcond=None)
    return tuple(float(v) for v in coef)


def _cell_hex(l, c, h):
    if l < 0.0 or l > 100.0 or c < 0.0:
        return None
    return core.hex_encode(core.polar_luv(l, c, h), fixup=False)


def hcl_projection(colors, type: PaletteTypeGuess | str | None = None,
                   chroma_step: float = 4.0, hue_step: float = 4.0,
                   luminance_step: float = 2.0) -> ProjectionData:
    """Project a palette into a 2-d HCL plane with an in-gamut background grid.

    Qualitative palettes collapse luminance and show the hue-chroma plane;
    sequential and diverging palettes collapse hue and show the
    chroma-luminance plane (chroma mirrored negative for the left arm of
    a diverging palette).  A collapsed coordinate that is not constant in
    the palette is modeled as a linear function of the two displayed ones.
    """
    trace = spectrum(colors)
    if type is None:
        guess = infer_type(trace)
    elif isinstance(type, str):
        if type not in ("qualitative", "sequential", "diverging"):
            raise ValueError(f"unknown projection type {type!r}")
        guess = PaletteTypeGuess(type, {})
    else:
        guess = type
    hs, cs, ls = trace.hue, trace.chroma, trace.luminance

    if guess.type == "qualitative":
        xs = [round(hue_step * i, 6) for i in range(int(360.0 / hue_step) + 1)]
        ys = [round(chroma_step * j, 6) for j in range(int(180.0 / chroma_step) + 1)]
        l_mean = sum(ls) / len(ls)
        varies = max(ls) - min(ls) > _VARIES_TOL
        fit = None
        if varies:
            b0, bx, by = _fit_plane(hs, cs, ls)
            fit = {"target": "luminance", "b0": b0, "b_hue": bx, "b_chroma": by}

        def level(h, c):
            return b0 + bx * h + by * c if varies else l_mean

        cells = [[_cell_hex(level(h, c), c, h) for h in xs] for c in ys]
        return ProjectionData(
            mode="hue-chroma", x_label="hue", y_label="chroma",
            x_values=xs, y_values=ys, cells=cells,
            polyline=[(h % 360.0, c) for h, c in zip(hs, cs)],
            points_hcl=list(zip(hs, cs, ls)),
            fixed={"luminance": round(l_mean, 4)}, fit=fit,
        )

    ys = [round(luminance_step * j, 6) for j in range(int(100.0 / luminance_step) + 1)]
    if guess.type == "diverging":
        m = guess.evidence.get("extremum_index")
        if m is None:
            lum_max, lum_min = max(ls), min(ls)
            m = ls.index(lum_max if lum_max - ls[0] >= ls[0] - lum_min else lum_min)
        left_h = _circular_mean(hs[:m] or hs[: m + 1])
        right_h = _circular_mean(hs[m + 1:] or hs[m:])
        half = int(180.0 / chroma_step)
        xs = [round(chroma_step * (i - half), 6) for i in range(2 * half + 1)]
        cells = [
            [_cell_hex(l, abs(c), left_h if c < 0 else right_h) for c in xs]
            for l in ys
        ]
        poly = [(-c if k < m else (0.0 if k == m else c), l)
                for k, (c, l) in enumerate(zip(cs, ls))]
        return ProjectionData(
            mode="chroma-luminance", x_label="chroma", y_label="luminance",
            x_values=xs, y_values=ys, cells=cells, polyline=poly,
            points_hcl=list(zip(hs, cs, ls)),
            fixed={"hue_left": round(left_h, 4), "hue_right": round(right_h, 4)},
        )

    # sequential
    xs = [round(chroma_step * i, 6) for i in range(int(180.0 / chroma_step) + 1)]
    varies = max(hs) - min(hs) > _VARIES_TOL
    h_mean = _circular_mean(hs)
    fit = None
    if varies:
        b0, bx, by = _fit_plane(cs, ls, hs)
        fit = {"target": "hue", "b0": b0, "b_chroma": bx, "b_luminance": by}

    def hue_at(c, l):
        return b0 + bx * c + by * l if varies else h_mean

    cells = [[_cell_hex(l, c, hue_at(c, l)) for c in xs] for l in ys]
    return ProjectionData(
        mode="chroma-luminance", x_label="chroma", y_label="luminance",
        x_values=xs, y_values=ys, cells=cells,
        polyline=list(zip(cs, ls)),
        points_hcl=list(zip(hs, cs, ls)),
        fixed={"hue": round(h_mean, 4)}, fit=fit,
    )


def _circular_mean(hues) -> float:
    sx = sum(math.cos(math.radians(h)) for h in hues)
    sy = sum(math.sin(math.radians(h)) for h in hues)
    if sx == 0.0 and sy == 0.0:
        return 0.0
    return math.degrees(math.atan2(sy, sx)) % 360.0


# --- SVG emission ----------------------------------------------------------

_FONT = 'font-family="sans-serif"'


def _f(v: float) -> str:
    return f"{v:.2f}"


def _esc(s: str) -> str:
    return s.replace("&", "&amp;").replace("<", "&lt;").replace(">", "&gt;")


def _rect(x, y, w, h, fill, extra="") -> str:
    return (f'<rect x="{_f(x)}" y="{_f(y)}" width="{_f(w)}" height="{_f(h)}" '
            f'fill="{fill}"{extra} />')


def _normalize_swatch_input(palettes):
    """Normalize to [(group_label_or_None, [(row_label, colors), ...]), ...]."""
    items = palettes.items() if isinstance(palettes, dict) else list(palettes)
    groups = []
    for name, value in items:
        value = list(value)
        if value and not isinstance(value[0], str):
            rows = []
            for k, row in enumerate(value):
                if isinstance(row, tuple) and len(row) == 2 and not isinstance(row[0], (list, tuple)):
                    rows.append((str(row[0]), list(row[1])))
                else:
                    rows.append(("", list(row)))
            groups.append((str(name), rows))
        else:
            groups.append((None, [(str(name), value)]))
    return groups


def swatch_svg(palettes, swatch_width: float = 480.0, row_height: float = 22.0,
               gap: float = 4.0, label_width: float = 130.0) -> str:
    """Render palettes as rows of color swatches.

    ``palettes`` maps names to color lists; a name may instead map to a
    list of rows (each a color list or a ``(label, colors)`` pair), which
    renders as a titled matrix of swatches.
    """
    groups = _normalize_swatch_input(palettes)
    if not groups or all(not rows for _, rows in groups):
        raise ValueError("need at least one palette to draw")
    parts = []
    y = 10.0
    group_title_h = 20.0
    for title, rows in groups:
        if title is not None:
            parts.append(f'<text x="{_f(10.0)}" y="{_f(y + 13.0)}" {_FONT} '
                         f'font-size="13" font-weight="bold">{_esc(title)}</text>')
            y += group_title_h
        for label, colors in rows:
            if label:
                parts.append(f'<text x="{_f(10.0)}" y="{_f(y + row_height * 0.7)}" {_FONT} '
                             f'font-size="12">{_esc(label)}</text>')
            if colors:
                w = swatch_width / len(colors)
                for i, col in enumerate(colors):
                    x = label_width + i * w
                    if col is None:
                        parts.append(_rect(x, y, w, row_height, "none",
                                           ' stroke="#CCCCCC" stroke-width="0.5"'))
                    else:
                        parts.append(_rect(x, y, w, row_height, _esc(col)))
            y += row_height + gap
        y += gap * 2.0
    width = label_width + swatch_width + 10.0
    height = y + 6.0
    body = "\n".join(parts)
    return (f'<svg xmlns="http://www.w3.org/2000/svg" width="{_f(width)}" '
            f'height="{_f(height)}" viewBox="0 0 {_f(width)} {_f(height)}">\n'
            f"{body}\n</svg>\n")


def _polyline(points, stroke: str, width: float = 2.0) -> str:
    pts = " ".join(f"{_f(x)},{_f(y)}" for x, y in points)
    return (f'<polyline points="{pts}" fill="none" stroke="{stroke}" '
            f'stroke-width="{_f(width)}" />')


def spectrum_svg(trace: SpectrumTrace, include_rgb: bool = False,
                 width: float = 600.0, panel_height: float = 220.0) -> str:
    """Line chart of a palette's HCL trajectories plus a swatch strip.

    Hue is drawn in red against the right axis; chroma (green) and
    luminance (blue) use the left axis.  With ``include_rgb`` a second
    panel of the sRGB channel trajectories is stacked on top.
    """
    n = trace.n
    margin_l, margin_r, margin_t = 46.0, 46.0, 16.0
    plot_w = width - margin_l - margin_r
    swatch_h = 26.0
    panels = ([("rgb",)] if include_rgb else []) + [("hcl",)]
    parts = []
    y0 = margin_t

    def xpos(i: int) -> float:
        return margin_l + (plot_w * i / (n - 1) if n > 1 else plot_w / 2.0)

    for kind, in panels:
        if kind == "rgb":
            channels = {"red": [], "green": [], "blue": []}
            for hx in trace.colors:
                c = core.hex_decode(hx)
                for name, v in zip(("red", "green", "blue"), c.coords):
                    channels[name].append(v)
            for tick in (0.0, 0.5, 1.0):
                ty = y0 + panel_height * (1.0 - tick)
                parts.append(f'<line x1="{_f(margin_l)}" y1="{_f(ty)}" x2="{_f(margin_l + plot_w)}" '
                             f'y2="{_f(ty)}" stroke="#EEEEEE" />')
                parts.append(f'<text x="{_f(margin_l - 6.0)}" y="{_f(ty + 4.0)}" {_FONT} '
                             f'font-size="10" text-anchor="end">{_f(tick)}</text>')
            for name, values in channels.items():
                pts = [(xpos(i), y0 + panel_height * (1.0 - v)) for i, v in enumerate(values)]
                parts.append(_polyline(pts, name))
        else:
            left_max = max(100.0, math.ceil(max(trace.chroma) / 20.0) * 20.0)
            hue_min = -360.0 if min(trace.hue) < 0.0 else 0.0
            for tick in range(0, int(left_max) + 1, 20):
                ty = y0 + panel_height * (1.0 - tick / left_max)
                parts.append(f'<line x1="{_f(margin_l)}" y1="{_f(ty)}" x2="{_f(margin_l + plot_w)}" '
                             f'y2="{_f(ty)}" stroke="#EEEEEE" />')
                parts.append(f'<text x="{_f(margin_l - 6.0)}" y="{_f(ty + 4.0)}" {_FONT} '
                             f'font-size="10" text-anchor="end">{tick}</text>')
            for tick in range(int(hue_min), 361, 120):
                ty = y0 + panel_height * (1.0 - (tick - hue_min) / (360.0 - hue_min))
                parts.append(f'<text x="{_f(margin_l + plot_w + 6.0)}" y="{_f(ty + 4.0)}" {_FONT} '
                             f'font-size="10" fill="red">{tick}</text>')
            hue_pts = [(xpos(i), y0 + panel_height * (1.0 - (h - hue_min) / (360.0 - hue_min)))
                       for i, h in enumerate(trace.hue)]
            chroma_pts = [(xpos(i), y0 + panel_height * (1.0 - c / left_max))
                          for i, c in enumerate(trace.chroma)]
            lum_pts = [(xpos(i), y0 + panel_height * (1.0 - l / left_max))
                       for i, l in enumerate(trace.luminance)]
            if not trace.degenerate_hue:
                parts.append(_polyline(hue_pts, "red"))
            parts.append(_polyline(chroma_pts, "green"))
            parts.append(_polyline(lum_pts, "blue"))
        y0 += panel_height + 14.0

    sw = plot_w / n
    for i, col in enumerate(trace.colors):
        parts.append(_rect(margin_l + i * sw, y0, sw, swatch_h, _esc(col)))
    height = y0 + swatch_h + 12.0
    body = "\n".join(parts)
    return (f'<svg xmlns="http://www.w3.org/2000/svg" width="{_f(width)}" '
            f'height="{_f(height)}" viewBox="0 0 {_f(width)} {_f(height)}">\n'
            f"{body}\n</svg>\n")
