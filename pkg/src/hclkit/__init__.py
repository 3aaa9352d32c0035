"""hclkit: perceptual color palettes built on the HCL color model.

Qualitative, sequential, and diverging palettes from parametric HCL
trajectories, conversion among nine color spaces, color-vision-deficiency
emulation, manipulation utilities, palette analysis with SVG output, and
a CLI plus embedded HTTP service.
"""

from .core import (
    Color,
    WhitePoint,
    D65,
    SPACES,
    convert,
    get_whitepoint,
    hex_decode,
    hex_encode,
    set_whitepoint,
    rgb,
    srgb,
    hsv,
    hls,
    xyz,
    luv,
    lab,
    polar_luv,
    polar_lab,
)
from .palettes import (
    DivergingxParams,
    PaletteParams,
    Trajectory,
    build_palette,
    cividis_manual,
    diverging_hsv,
    diverging_palette,
    divergingx_palette,
    heat_hcl,
    qualitative_palette,
    rainbow_hcl,
    sequential_palette,
    terrain_hcl,
    trajectory_value,
)
from .registry import PaletteRecord, PaletteRegistry, UnknownPaletteError, default_registry
from .cvd import CvdMatrix, cvd_matrix, deutan, protan, simulate_cvd, tritan
from .manip import darken, desaturate, lighten, max_chroma, mixcolor, parse_color
from .analysis import (
    PaletteTypeGuess,
    ProjectionData,
    SpectrumTrace,
    hcl_projection,
    infer_type,
    spectrum,
    spectrum_svg,
    swatch_svg,
)

__version__ = "0.1.0"
