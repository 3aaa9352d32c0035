"""Color space representations and conversions.

Nine three-dimensional color models are supported.  Conversions route
through a fixed graph; every pair of spaces is connected:

    HSV --- sRGB --- RGB --- XYZ --- LUV --- polarLUV
    HLS ---/                   \\--- LAB --- polarLAB

``polarLUV`` is the HCL (hue-chroma-luminance) model: the polar form of
CIELUV with coordinates stored as (L, C, H).  RGB is linear, sRGB is
gamma-encoded per IEC 61966-2-1 (linear segment below 0.0031308 on the
linear side / 0.04045 on the encoded side, exponent 2.4).  XYZ, LUV and
LAB are scaled so that white has Y = 100.

The XYZ <-> linear-RGB step uses the classic 6-decimal sRGB/D65 primaries
matrix.  The white point only parameterizes the LUV/LAB reference terms
(u'n, v'n and the f-function); it defaults to D65 and can be changed
process-wide with :func:`set_whitepoint`.
"""

from __future__ import annotations

import math
import re
import threading
from dataclasses import dataclass

__all__ = [
    "SPACES",
    "Color",
    "WhitePoint",
    "D65",
    "convert",
    "hex_encode",
    "hex_decode",
    "get_whitepoint",
    "set_whitepoint",
    "gamut_distance",
    "rgb",
    "srgb",
    "hsv",
    "hls",
    "xyz",
    "luv",
    "lab",
    "polar_luv",
    "polar_lab",
]

SPACES = ("RGB", "sRGB", "HSV", "HLS", "XYZ", "LUV", "LAB", "polarLUV", "polarLAB")

_POLAR_SPACES = {"polarLUV", "polarLAB"}

#: Channels may stick out of [0, 1] by this much before a color counts as
#: out of gamut; absorbs float noise right at the gamut boundary.
GAMUT_TOL = 1e-7

# XYZ <-> linear RGB for sRGB/D65 primaries, in the well-known 6-decimal
# form.  The inverse pair is kept verbatim rather than recomputed so that
# both directions match the established reference values exactly.
_M_XYZ_TO_RGB = (
    (3.240479, -1.537150, -0.498535),
    (-0.969256, 1.875992, 0.041556),
    (0.055648, -0.204043, 1.057311),
)
_M_RGB_TO_XYZ = (
    (0.412453, 0.357580, 0.180423),
    (0.212671, 0.715160, 0.072169),
    (0.019334, 0.119193, 0.950227),
)

_HEX_RE = re.compile(r"^#([0-9a-fA-F]{6})([0-9a-fA-F]{2})?$")


@dataclass(frozen=True)
class WhitePoint:
    """Reference illuminant in XYZ, scaled so nominal white has Y = 100."""

    x: float
    y: float
    z: float

    def __post_init__(self) -> None:
        for v in (self.x, self.y, self.z):
            if not (math.isfinite(v) and v > 0):
                raise ValueError(f"white point components must be positive, got {self!r}")


D65 = WhitePoint(95.047, 100.0, 108.883)

_whitepoint = D65
_whitepoint_lock = threading.Lock()


def get_whitepoint() -> WhitePoint:
    """Return the process-wide white point (initially D65)."""
    return _whitepoint


def set_whitepoint(wp: WhitePoint) -> None:
    """Replace the process-wide white point.

    Writes are serialized internally, but callers that interleave
    conversions with white point changes must coordinate externally.
    """
    if not isinstance(wp, WhitePoint):
        wp = WhitePoint(*wp)
    global _whitepoint
    with _whitepoint_lock:
        _whitepoint = wp


@dataclass(frozen=True)
class Color:
    """A coordinate triplet tagged with its color space.

    Hue coordinates of polar spaces are normalized into [0, 360).  The
    optional alpha rides along unchanged through all conversions and is
    only consumed by hex encoding.
    """

    space: str
    coords: tuple[float, float, float]
    alpha: float | None = None

    def __post_init__(self) -> None:
        if self.space not in SPACES:
            raise ValueError(f"unknown color space {self.space!r}; expected one of {SPACES}")
        c = tuple(float(v) for v in self.coords)
        if len(c) != 3 or not all(math.isfinite(v) for v in c):
            raise ValueError(f"coordinates must be three finite numbers, got {self.coords!r}")
        if self.space in _POLAR_SPACES:
            if c[1] < 0:
                raise ValueError(f"chroma must be non-negative, got {c[1]!r}")
            c = (c[0], c[1], c[2] % 360.0)
        object.__setattr__(self, "coords", c)
        if self.alpha is not None:
            a = float(self.alpha)
            if not (math.isfinite(a) and 0.0 <= a <= 1.0):
                raise ValueError(f"alpha must be in [0, 1], got {self.alpha!r}")
            object.__setattr__(self, "alpha", a)

    @property
    def c1(self) -> float:
        return self.coords[0]

    @property
    def c2(self) -> float:
        return self.coords[1]

    @property
    def c3(self) -> float:
        return self.coords[2]


def rgb(r: float, g: float, b: float, alpha: float | None = None) -> Color:
    """Linear RGB in [0, 1] per channel (unclamped values allowed)."""
    return Color("RGB", (r, g, b), alpha)


def srgb(r: float, g: float, b: float, alpha: float | None = None) -> Color:
    """Gamma-encoded standard RGB in [0, 1] per channel."""
    return Color("sRGB", (r, g, b), alpha)


def hsv(h: float, s: float, v: float, alpha: float | None = None) -> Color:
    return Color("HSV", (h, s, v), alpha)


def hls(h: float, l: float, s: float, alpha: float | None = None) -> Color:
    return Color("HLS", (h, l, s), alpha)


def xyz(x: float, y: float, z: float, alpha: float | None = None) -> Color:
    return Color("XYZ", (x, y, z), alpha)


def luv(l: float, u: float, v: float, alpha: float | None = None) -> Color:
    return Color("LUV", (l, u, v), alpha)


def lab(l: float, a: float, b: float, alpha: float | None = None) -> Color:
    return Color("LAB", (l, a, b), alpha)


def polar_luv(l: float, c: float, h: float, alpha: float | None = None) -> Color:
    """HCL color: luminance in [0, 100], chroma >= 0, hue in degrees."""
    return Color("polarLUV", (l, c, h), alpha)


def polar_lab(l: float, c: float, h: float, alpha: float | None = None) -> Color:
    return Color("polarLAB", (l, c, h), alpha)


# --- transfer functions -------------------------------------------------

def _gtrans(u: float) -> float:
    """Linear -> gamma-encoded sRGB channel (IEC 61966-2-1).

    Written anchored at 1 (1.055*x - 0.055 == 1.055*(x - 1) + 1) so that
    1 maps to exactly 1.0 in floating point.
    """
    if u > 0.0031308:
        return 1.055 * (u ** (1.0 / 2.4) - 1.0) + 1.0
    return 12.92 * u


def _ftrans(u: float) -> float:
    """Gamma-encoded sRGB -> linear channel; exact at 1 like _gtrans."""
    if u > 0.04045:
        return (1.0 + (u - 1.0) / 1.055) ** 2.4
    return u / 12.92


# --- pairwise conversions ------------------------------------------------
# Each takes (coords, whitepoint) and returns coords in the target space.

def _rgb_to_srgb(c, wp):
    return tuple(_gtrans(v) for v in c)


def _srgb_to_rgb(c, wp):
    return tuple(_ftrans(v) for v in c)


def _rgb_to_xyz(c, wp):
    r, g, b = c
    yn = wp.y
    return tuple(yn * (m[0] * r + m[1] * g + m[2] * b) for m in _M_RGB_TO_XYZ)


def _xyz_to_rgb(c, wp):
    x, y, z = c
    yn = wp.y
    return tuple((m[0] * x + m[1] * y + m[2] * z) / yn for m in _M_XYZ_TO_RGB)


def _xyz_to_luv(c, wp):
    x, y, z = c
    if x == 0.0 and y == 0.0 and z == 0.0:
        return (0.0, 0.0, 0.0)
    d = x + 15.0 * y + 3.0 * z
    u, v = 4.0 * x / d, 9.0 * y / d
    dn = wp.x + 15.0 * wp.y + 3.0 * wp.z
    un, vn = 4.0 * wp.x / dn, 9.0 * wp.y / dn
    yy = y / wp.y
    ll = 116.0 * yy ** (1.0 / 3.0) - 16.0 if yy > 0.008856 else 903.3 * yy
    return (ll, 13.0 * ll * (u - un), 13.0 * ll * (v - vn))


def _luv_to_xyz(c, wp):
    ll, u, v = c
    if ll <= 0.0:
        return (0.0, 0.0, 0.0)
    y = wp.y * (((ll + 16.0) / 116.0) ** 3 if ll > 7.999592 else ll / 903.3)
    dn = wp.x + 15.0 * wp.y + 3.0 * wp.z
    un, vn = 4.0 * wp.x / dn, 9.0 * wp.y / dn
    uu = u / (13.0 * ll) + un
    vv = v / (13.0 * ll) + vn
    x = 9.0 * y * uu / (4.0 * vv)
    return (x, y, -x / 3.0 - 5.0 * y + 3.0 * y / vv)


def _lab_f(t: float) -> float:
    return t ** (1.0 / 3.0) if t > 0.008856 else 7.787 * t + 16.0 / 116.0


def _lab_f_inv(t: float) -> float:
    t3 = t ** 3
    return t3 if t3 > 0.008856 else (t - 16.0 / 116.0) / 7.787


def _xyz_to_lab(c, wp):
    x, y, z = c
    fx, fy, fz = _lab_f(x / wp.x), _lab_f(y / wp.y), _lab_f(z / wp.z)
    return (116.0 * fy - 16.0, 500.0 * (fx - fy), 200.0 * (fy - fz))


def _lab_to_xyz(c, wp):
    ll, a, b = c
    fy = (ll + 16.0) / 116.0
    fx = a / 500.0 + fy
    fz = fy - b / 200.0
    return (wp.x * _lab_f_inv(fx), wp.y * _lab_f_inv(fy), wp.z * _lab_f_inv(fz))


def _to_polar(c, wp):
    ll, a, b = c
    chroma = math.hypot(a, b)
    hue = math.degrees(math.atan2(b, a)) % 360.0
    return (ll, chroma, hue)


def _from_polar(c, wp):
    ll, chroma, hue = c
    rad = math.radians(hue)
    return (ll, chroma * math.cos(rad), chroma * math.sin(rad))


def _srgb_hue_common(r, g, b):
    hi, lo = max(r, g, b), min(r, g, b)
    d = hi - lo
    if d == 0.0:
        return hi, lo, 0.0
    if hi == r:
        h = (g - b) / d % 6.0
    elif hi == g:
        h = (b - r) / d + 2.0
    else:
        h = (r - g) / d + 4.0
    return hi, lo, (60.0 * h) % 360.0


def _srgb_to_hsv(c, wp):
    r, g, b = c
    hi, lo, h = _srgb_hue_common(r, g, b)
    s = 0.0 if hi == 0.0 else (hi - lo) / hi
    return (h, s, hi)


def _hsv_to_srgb(c, wp):
    h, s, v = c
    h = h % 360.0 / 60.0
    i = math.floor(h)
    f = h - i
    p, q, t = v * (1.0 - s), v * (1.0 - s * f), v * (1.0 - s * (1.0 - f))
    return [(v, t, p), (q, v, p), (p, v, t), (p, q, v), (t, p, v), (v, p, q)][int(i) % 6]


def _srgb_to_hls(c, wp):
    r, g, b = c
    hi, lo, h = _srgb_hue_common(r, g, b)
    l = (hi + lo) / 2.0
    if hi == lo:
        s = 0.0
    elif l <= 0.5:
        s = (hi - lo) / (hi + lo)
    else:
        s = (hi - lo) / (2.0 - hi - lo)
    return (h, l, s)


def _hls_to_srgb(c, wp):
    h, l, s = c
    if s == 0.0:
        return (l, l, l)
    q = l * (1.0 + s) if l <= 0.5 else l + s - l * s
    p = 2.0 * l - q

    def chan(t: float) -> float:
        t = t % 360.0
        if t < 60.0:
            return p + (q - p) * t / 60.0
        if t < 180.0:
            return q
        if t < 240.0:
            return p + (q - p) * (240.0 - t) / 60.0
        return p

    return (chan(h + 120.0), chan(h), chan(h - 120.0))


_EDGES = {
    ("RGB", "sRGB"): _rgb_to_srgb,
    ("sRGB", "RGB"): _srgb_to_rgb,
    ("RGB", "XYZ"): _rgb_to_xyz,
    ("XYZ", "RGB"): _xyz_to_rgb,
    ("XYZ", "LUV"): _xyz_to_luv,
    ("LUV", "XYZ"): _luv_to_xyz,
    ("XYZ", "LAB"): _xyz_to_lab,
    ("LAB", "XYZ"): _lab_to_xyz,
    ("LUV", "polarLUV"): _to_polar,
    ("polarLUV", "LUV"): _from_polar,
    ("LAB", "polarLAB"): _to_polar,
    ("polarLAB", "LAB"): _from_polar,
    ("sRGB", "HSV"): _srgb_to_hsv,
    ("HSV", "sRGB"): _hsv_to_srgb,
    ("sRGB", "HLS"): _srgb_to_hls,
    ("HLS", "sRGB"): _hls_to_srgb,
}


def _build_routes() -> dict[tuple[str, str], tuple[str, ...]]:
    adj: dict[str, list[str]] = {s: [] for s in SPACES}
    for a, b in _EDGES:
        adj[a].append(b)
    routes = {}
    for start in SPACES:
        seen = {start: (start,)}
        queue = [start]
        while queue:
            cur = queue.pop(0)
            for nxt in adj[cur]:
                if nxt not in seen:
                    seen[nxt] = seen[cur] + (nxt,)
                    queue.append(nxt)
        for end, path in seen.items():
            routes[(start, end)] = path
    return routes


_ROUTES = _build_routes()


def convert(color: Color, target: str, whitepoint: WhitePoint | None = None) -> Color:
    """Convert a color to ``target`` space.

    Out-of-gamut results are returned unclamped; clamping only ever
    happens in :func:`hex_encode` when fixup is requested.  Converting a
    color to its own space returns it unchanged.
    """
    if target not in SPACES:
        raise ValueError(f"unknown color space {target!r}; expected one of {SPACES}")
    if color.space == target:
        return color
    wp = whitepoint if whitepoint is not None else _whitepoint
    coords = color.coords
    path = _ROUTES[(color.space, target)]
    for a, b in zip(path, path[1:]):
        coords = _EDGES[(a, b)](coords, wp)
    return Color(target, coords, color.alpha)


def gamut_distance(color: Color, whitepoint: WhitePoint | None = None) -> float:
    """Largest amount by which any sRGB channel leaves [0, 1] (0 if inside)."""
    c = convert(color, "sRGB", whitepoint)
    return max(max(-v, v - 1.0, 0.0) for v in c.coords)


def _channel_byte(v: float) -> int:
    # round half away from zero; v is already clamped to [0, 1]
    return int(math.floor(v * 255.0 + 0.5))


def hex_encode(color: Color, fixup: bool = True, whitepoint: WhitePoint | None = None) -> str | None:
    """Encode a color as an sRGB hex string ``#RRGGBB`` (``#RRGGBBAA`` with alpha).

    With ``fixup`` every channel is clamped into [0, 1] first.  Without it,
    any channel further than :data:`GAMUT_TOL` outside [0, 1] makes the
    color undisplayable and ``None`` is returned instead.
    """
    c = convert(color, "sRGB", whitepoint)
    coords = c.coords
    if not fixup and any(v < -GAMUT_TOL or v > 1.0 + GAMUT_TOL for v in coords):
        return None
    coords = tuple(min(1.0, max(0.0, v)) for v in coords)
    out = "#%02X%02X%02X" % tuple(_channel_byte(v) for v in coords)
    if c.alpha is not None:
        out += "%02X" % _channel_byte(min(1.0, max(0.0, c.alpha)))
    return out


def hex_decode(s: str) -> Color:
    """Parse ``#RRGGBB`` or ``#RRGGBBAA`` (case-insensitive) into an sRGB color."""
    if not isinstance(s, str):
        raise ValueError(f"expected a hex color string, got {s!r}")
    m = _HEX_RE.match(s.strip())
    if m is None:
        raise ValueError(f"malformed hex color {s!r}; expected '#RRGGBB' or '#RRGGBBAA'")
    body, alpha_part = m.groups()
    r, g, b = (int(body[i : i + 2], 16) / 255.0 for i in (0, 2, 4))
    alpha = int(alpha_part, 16) / 255.0 if alpha_part else None
    return Color("sRGB", (r, g, b), alpha)
