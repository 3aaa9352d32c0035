"""Color vision deficiency emulation.

Applies published 3x3 channel-mixing matrices for deuteranomaly,
protanomaly, and tritanomaly at severities from 0 (normal vision) to 1
(dichromacy).  Matrices are tabulated at severity steps of 0.1; in
between, the two bracketing matrices are interpolated entrywise (the
published model does not define intermediate severities, so linear
interpolation is this implementation's choice).

The matrices operate on gamma-encoded RGB on the 0-255 scale; results
are clamped to the displayable range and truncated to whole channel
values when re-encoded, which matches how the reference outputs for
these matrices were produced.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from importlib import resources

from . import core

__all__ = ["KINDS", "CvdMatrix", "cvd_matrix", "simulate_cvd", "deutan", "protan", "tritan"]

KINDS = ("deutan", "protan", "tritan")

Matrix3 = tuple[tuple[float, float, float], ...]


@dataclass(frozen=True)
class CvdMatrix:
    kind: str
    severity: float
    m: Matrix3


def _load_tables() -> dict[str, list[Matrix3]]:
    text = resources.files(__package__).joinpath("data/cvd_matrices.json").read_text("utf-8")
    data = json.loads(text)
    tables = {}
    for kind in KINDS:
        mats = []
        for flat in data[kind]:
            if len(flat) != 9:
                raise ValueError(f"bad matrix row for {kind}: {flat!r}")
            mats.append(tuple(tuple(flat[r * 3 + c] for c in range(3)) for r in range(3)))
        if len(mats) != 11:
            raise ValueError(f"expected 11 severity steps for {kind}, got {len(mats)}")
        tables[kind] = mats
    return tables


_TABLES = _load_tables()


def cvd_matrix(kind: str, severity: float) -> CvdMatrix:
    """The transformation matrix for ``kind`` at ``severity`` in [0, 1]."""
    if kind not in KINDS:
        raise ValueError(f"unknown deficiency kind {kind!r}; expected one of {KINDS}")
    severity = float(severity)
    if not 0.0 <= severity <= 1.0:
        raise ValueError(f"severity must be in [0, 1], got {severity!r}")
    table = _TABLES[kind]
    pos = severity * 10.0
    lo = int(pos)
    if lo >= 10:
        return CvdMatrix(kind, severity, table[10])
    f = pos - lo
    if f == 0.0:
        return CvdMatrix(kind, severity, table[lo])
    a, b = table[lo], table[lo + 1]
    m = tuple(
        tuple((1.0 - f) * a[r][c] + f * b[r][c] for c in range(3))
        for r in range(3)
    )
    return CvdMatrix(kind, severity, m)


def _parse_rgb255(color: str, index: int) -> tuple[int, int, int, int | None]:
    try:
        c = core.hex_decode(color)
    except ValueError as exc:
        raise ValueError(f"color {index}: {exc}") from None
    r, g, b = (round(v * 255.0) for v in c.coords)
    a = round(c.alpha * 255.0) if c.alpha is not None else None
    return r, g, b, a


def simulate_cvd(colors: list[str], matrix: CvdMatrix) -> list[str]:
    """Transform hex colors through a CVD matrix; alpha passes through."""
    m = matrix.m
    out = []
    for idx, color in enumerate(colors):
        r, g, b, a = _parse_rgb255(color, idx)
        channels = []
        for row in m:
            v = row[0] * r + row[1] * g + row[2] * b
            channels.append(int(min(255.0, max(0.0, v))))
        s = "#%02X%02X%02X" % tuple(channels)
        if a is not None:
            s += "%02X" % a
        out.append(s)
    return out


def deutan(colors: list[str], severity: float = 1.0) -> list[str]:
    """Emulate deuteranomaly (defective green cone cells)."""
    return simulate_cvd(colors, cvd_matrix("deutan", severity))


def protan(colors: list[str], severity: float = 1.0) -> list[str]:
    """Emulate protanomaly (defective red cone cells)."""
    return simulate_cvd(colors, cvd_matrix("protan", severity))


def tritan(colors: list[str], severity: float = 1.0) -> list[str]:
    """Emulate tritanomaly (defective blue cone cells)."""
    return simulate_cvd(colors, cvd_matrix("tritan", severity))
