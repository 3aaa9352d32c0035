"""PNG helpers for applying CVD emulation to raster images."""

from __future__ import annotations

import os

import numpy as np
from PIL import Image

from .cvd import CvdMatrix

__all__ = ["simulate_cvd_png", "suffixed_path"]


def suffixed_path(path: str, suffix: str) -> str:
    root, ext = os.path.splitext(path)
    return f"{root}_{suffix}{ext or '.png'}"


def simulate_cvd_png(in_path: str, out_path: str, matrix: CvdMatrix) -> None:
    """Map every pixel of a PNG through a CVD matrix and write the result.

    Uses the same channel convention as the hex color path: the matrix
    acts on 0-255 values, results clamp to the displayable range and
    truncate to whole channel values, and alpha passes through untouched.
    """
    img = Image.open(in_path)
    has_alpha = "A" in img.getbands()
    rgba = img.convert("RGBA")
    arr = np.asarray(rgba, dtype=np.float64)
    m = np.asarray(matrix.m, dtype=np.float64)
    mixed = arr[..., :3] @ m.T
    np.clip(mixed, 0.0, 255.0, out=mixed)
    out = np.empty(arr.shape, dtype=np.uint8)
    out[..., :3] = np.trunc(mixed)
    out[..., 3] = np.asarray(rgba, dtype=np.uint8)[..., 3]
    result = Image.fromarray(out, "RGBA")
    if not has_alpha:
        result = result.convert("RGB")
    result.save(out_path, format="PNG")
