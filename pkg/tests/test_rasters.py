import numpy as np
import pytest
from PIL import Image

from hclkit import cvd, rasters
from hclkit.cli import main


@pytest.fixture
def gradient_png(tmp_path):
    rng = np.random.default_rng(42)
    arr = rng.integers(0, 256, size=(24, 32, 3), dtype=np.uint8)
    path = tmp_path / "img.png"
    Image.fromarray(arr, "RGB").save(path)
    return str(path)


def test_severity_zero_round_trip_is_pixel_identical(gradient_png, tmp_path):
    out = str(tmp_path / "out.png")
    rasters.simulate_cvd_png(gradient_png, out, cvd.cvd_matrix("deutan", 0.0))
    a = np.asarray(Image.open(gradient_png).convert("RGB"))
    b = np.asarray(Image.open(out).convert("RGB"))
    assert np.array_equal(a, b)


def test_png_matches_hex_path(gradient_png, tmp_path):
    out = str(tmp_path / "out.png")
    matrix = cvd.cvd_matrix("tritan", 0.8)
    rasters.simulate_cvd_png(gradient_png, out, matrix)
    src = np.asarray(Image.open(gradient_png).convert("RGB"))
    got = np.asarray(Image.open(out).convert("RGB"))
    for y, x in ((0, 0), (5, 7), (23, 31)):
        hex_in = "#%02X%02X%02X" % tuple(src[y, x])
        hex_out = cvd.simulate_cvd([hex_in], matrix)[0]
        assert "#%02X%02X%02X" % tuple(got[y, x]) == hex_out


def test_alpha_channel_preserved(tmp_path):
    arr = np.zeros((4, 4, 4), dtype=np.uint8)
    arr[..., 0] = 200
    arr[..., 3] = 77
    src = tmp_path / "rgba.png"
    Image.fromarray(arr, "RGBA").save(src)
    out = str(tmp_path / "out.png")
    rasters.simulate_cvd_png(str(src), out, cvd.cvd_matrix("deutan", 1.0))
    result = np.asarray(Image.open(out))
    assert result.shape[-1] == 4
    assert (result[..., 3] == 77).all()


def test_suffixed_path():
    assert rasters.suffixed_path("/a/b/volcano.png", "deutan") == "/a/b/volcano_deutan.png"
    assert rasters.suffixed_path("plain", "tritan") == "plain_tritan.png"


def test_cli_png_flow(gradient_png, capsys):
    code = main(["cvd", "protan", "0.5", "--png", gradient_png])
    captured = capsys.readouterr()
    assert code == 0
    out_path = captured.out.strip()
    assert out_path.endswith("img_protan.png")
    assert Image.open(out_path).size == (32, 24)


def test_cli_png_missing_file_exits_3(capsys, tmp_path):
    code = main(["cvd", "protan", "0.5", "--png", str(tmp_path / "missing.png")])
    assert code == 3
