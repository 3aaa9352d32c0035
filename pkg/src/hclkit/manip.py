"""Color manipulation: desaturation, lighten/darken, gamut queries, mixing."""

from __future__ import annotations

import math

from . import core
from .names import resolve_name

__all__ = ["desaturate", "lighten", "darken", "max_chroma", "mixcolor", "parse_color"]

#: Gamut slack used by the chroma search, in sRGB channel units.  Chosen
#: so the boundary agrees with the established reference table for
#: maximum chroma at integer hue/luminance points.
MAX_CHROMA_TOL = 1.5 / 255.0

_ADDITIVE_SPACES = ("RGB", "XYZ")


def parse_color(value: str) -> core.Color:
    """Decode a hex string or CSS/X11 color name to an sRGB color."""
    return core.hex_decode(resolve_name(value))


def _map_colors(colors, fn):
    single = isinstance(colors, str)
    items = [colors] if single else list(colors)
    out = []
    for idx, item in enumerate(items):
        try:
            col = parse_color(item)
        except ValueError as exc:
            raise ValueError(f"color {idx}: {exc}") from None
        out.append(fn(col))
    return out[0] if single else out


def desaturate(colors, amount: float = 1.0):
    """Scale chroma down by ``amount`` in HCL space (1 removes all color).

    Luminance is preserved, so a fully desaturated color is the gray with
    the same perceived brightness.  Alpha passes through.
    """
    if not 0.0 <= amount <= 1.0:
        raise ValueError(f"amount must be in [0, 1], got {amount!r}")

    def one(col: core.Color) -> str:
        l, c, h = core.convert(col, "polarLUV").coords
        return core.hex_encode(core.polar_luv(l, c * (1.0 - amount), h, col.alpha), fixup=True)

    return _map_colors(colors, one)


def _adjust(value: float, amount: float, method: str, top: float, darkening: bool) -> float:
    if method == "relative":
        new = value * (1.0 - amount) if darkening else top - (top - value) * (1.0 - amount)
    elif method == "absolute":
        new = value - top * amount if darkening else value + top * amount
    else:
        raise ValueError(f"unknown adjustment method {method!r}; expected 'relative' or 'absolute'")
    return min(top, max(0.0, new))


def _shift_luminance(col: core.Color, amount: float, method: str, space: str,
                     darkening: bool) -> str:
    l, c, h = core.convert(col, "polarLUV").coords
    if space == "HCL":
        out = core.polar_luv(_adjust(l, amount, method, 100.0, darkening), c, h, col.alpha)
    elif space == "HLS":
        hh, hl, hs = core.convert(col, "HLS").coords
        out = core.hls(hh, _adjust(hl, amount, method, 1.0, darkening), hs, col.alpha)
    elif space == "combined":
        # luminance from the HCL path, chroma from the HLS-space result
        hh, hl, hs = core.convert(col, "HLS").coords
        via_hls = core.hls(hh, _adjust(hl, amount, method, 1.0, darkening), hs)
        c_hls = core.convert(via_hls, "polarLUV").coords[1]
        out = core.polar_luv(_adjust(l, amount, method, 100.0, darkening), c_hls, h, col.alpha)
    else:
        raise ValueError(f"unknown space {space!r}; expected 'HCL', 'HLS', or 'combined'")
    return core.hex_encode(out, fixup=True)


def lighten(colors, amount: float, method: str = "relative", space: str = "HCL"):
    """Lighten colors; the HCL-space strategy is the default as it
    typically performs best for lightening."""
    if not 0.0 <= amount <= 1.0:
        raise ValueError(f"amount must be in [0, 1], got {amount!r}")
    return _map_colors(colors, lambda col: _shift_luminance(col, amount, method, space, False))


def darken(colors, amount: float, method: str = "relative", space: str = "combined"):
    """Darken colors; the combined HCL/HLS strategy often works best for
    darkening and is the default."""
    if not 0.0 <= amount <= 1.0:
        raise ValueError(f"amount must be in [0, 1], got {amount!r}")
    return _map_colors(colors, lambda col: _shift_luminance(col, amount, method, space, True))


def _max_chroma_one(h: float, l: float) -> float:
    if not 0.0 <= l <= 100.0:
        raise ValueError(f"luminance must be in [0, 100], got {l!r}")
    if l <= 0.0 or l >= 100.0:
        return 0.0
    lo, hi = 0.0, 200.0
    for _ in range(40):
        mid = (lo + hi) / 2.0
        if core.gamut_distance(core.polar_luv(l, mid, h)) <= MAX_CHROMA_TOL:
            lo = mid
        else:
            hi = mid
    return math.floor(lo * 100.0) / 100.0


def max_chroma(h, l):
    """Approximate maximum chroma displayable at hue ``h`` and luminance ``l``.

    Found by bisection on the chroma axis against an in-gamut predicate,
    accurate to 0.01.  Scalar arguments give a scalar; sequences recycle
    against each other like the hue/luminance tables this mirrors.
    """
    h_seq = isinstance(h, (list, tuple))
    l_seq = isinstance(l, (list, tuple))
    if not h_seq and not l_seq:
        return _max_chroma_one(float(h), float(l))
    hs = [float(v) for v in (h if h_seq else [h])]
    ls = [float(v) for v in (l if l_seq else [l])]
    n = max(len(hs), len(ls))
    if not hs or not ls:
        return []
    return [_max_chroma_one(hs[i % len(hs)], ls[i % len(ls)]) for i in range(n)]


def mixcolor(alpha: float, color1: core.Color, color2: core.Color) -> core.Color:
    """Additive mix: the convex combination ``(1 - alpha) * color1 + alpha * color2``.

    Only meaningful in the additive spaces RGB and XYZ; ``color2`` is
    converted into ``color1``'s space first if they differ.
    """
    if not 0.0 <= alpha <= 1.0:
        raise ValueError(f"alpha must be in [0, 1], got {alpha!r}")
    if color1.space not in _ADDITIVE_SPACES:
        raise ValueError(
            f"mixing requires an additive space ({' or '.join(_ADDITIVE_SPACES)}), "
            f"got {color1.space!r}"
        )
    c2 = core.convert(color2, color1.space)
    coords = tuple((1.0 - alpha) * a + alpha * b for a, b in zip(color1.coords, c2.coords))
    return core.Color(color1.space, coords, color1.alpha)
