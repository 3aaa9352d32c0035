import json
from importlib import resources

import pytest

from hclkit import cvd
from hclkit.core import hex_decode

RAINBOW_11 = ["#FF0000FF", "#FF6600FF", "#FFCC00FF", "#CCFF00FF", "#66FF00FF",
              "#00FF00FF", "#00FF66FF", "#00FFCCFF", "#00CCFFFF", "#0066FFFF",
              "#0000FFFF"]

DEUTAN_11 = ["#5D4700FF", "#B58C01FF", "#FFD005FF", "#FFE408FF", "#FFC809FF",
             "#DBAB0AFF", "#C4B06DFF", "#ACB5D0FF", "#7595FFFF", "#1D50FBFF",
             "#000CF7FF"]


class TestMatrix:
    def test_severity_zero_is_identity(self):
        for kind in cvd.KINDS:
            m = cvd.cvd_matrix(kind, 0.0).m
            assert m == ((1.0, 0.0, 0.0), (0.0, 1.0, 0.0), (0.0, 0.0, 1.0))

    def test_interpolation_is_entrywise_mean_of_brackets(self):
        lo = cvd.cvd_matrix("deutan", 0.5).m
        hi = cvd.cvd_matrix("deutan", 0.6).m
        mid = cvd.cvd_matrix("deutan", 0.55).m
        for r in range(3):
            for c in range(3):
                assert mid[r][c] == pytest.approx(0.5 * lo[r][c] + 0.5 * hi[r][c])

    def test_tabulated_severities_returned_exactly(self):
        m = cvd.cvd_matrix("protan", 1.0).m
        assert m[0] == (0.152286, 1.052583, -0.204868)
        assert m[1] == (0.114503, 0.786281, 0.099216)
        assert m[2] == (-0.003882, -0.048116, 1.051998)

    def test_published_half_severity_values(self):
        assert cvd.cvd_matrix("tritan", 0.5).m[0] == (1.017277, 0.027029, -0.044306)
        assert cvd.cvd_matrix("deutan", 0.5).m[2] == (-0.010410, 0.027275, 0.983136)

    def test_severity_out_of_range(self):
        with pytest.raises(ValueError):
            cvd.cvd_matrix("deutan", 1.2)
        with pytest.raises(ValueError):
            cvd.cvd_matrix("deutan", -0.1)

    def test_unknown_kind(self):
        with pytest.raises(ValueError):
            cvd.cvd_matrix("achromat", 0.5)

    def test_matrix_entries_continuous_in_severity(self):
        for kind in cvd.KINDS:
            prev = cvd.cvd_matrix(kind, 0.0).m
            s = 0.01
            while s <= 1.0:
                cur = cvd.cvd_matrix(kind, s).m
                step = max(abs(cur[r][c] - prev[r][c]) for r in range(3) for c in range(3))
                assert step < 0.03
                prev = cur
                s = round(s + 0.01, 2)

    def test_rows_sum_to_one_guarding_transcription(self):
        # the published tables are normalized so grays map near grays;
        # a transcription slip would show up as a row sum away from 1
        data = json.loads(resources.files("hclkit").joinpath("data/cvd_matrices.json")
                          .read_text("utf-8"))
        for kind in cvd.KINDS:
            for flat in data[kind]:
                for r in range(3):
                    assert abs(sum(flat[r * 3: r * 3 + 3]) - 1.0) < 0.01


class TestSimulate:
    def test_reference_deutan_vector(self):
        assert cvd.deutan(RAINBOW_11) == DEUTAN_11

    def test_severity_zero_echoes_input(self):
        colors = ["#5D4700FF", "#ACB5D0", "#000000", "#FFFFFF80"]
        for kind in cvd.KINDS:
            assert cvd.simulate_cvd(colors, cvd.cvd_matrix(kind, 0.0)) == colors

    def test_tritan_preserves_gray(self):
        out = cvd.tritan(["#808080"])[0]
        r, g, b = (int(out[i:i + 2], 16) for i in (1, 3, 5))
        assert max(abs(r - 128), abs(g - 128), abs(b - 128)) <= 3

    def test_gray_preservation_all_kinds_severities(self):
        for kind in cvd.KINDS:
            for severity in (0.25, 0.5, 0.75, 1.0):
                for gray in ("#404040", "#808080", "#C0C0C0"):
                    out = cvd.simulate_cvd([gray], cvd.cvd_matrix(kind, severity))[0]
                    want = int(gray[1:3], 16)
                    got = [int(out[i:i + 2], 16) for i in (1, 3, 5)]
                    assert all(abs(v - want) <= 3 for v in got)

    def test_linear_before_clamping(self):
        # convex channel mixes commute with the transform when nothing clips
        m = cvd.cvd_matrix("deutan", 0.4)
        a, b = "#204060", "#503020"
        mixed = "#383840"  # halfway mix of the two
        sim_mix = cvd.simulate_cvd([mixed], m)[0]
        sim_a = hex_decode(cvd.simulate_cvd([a], m)[0]).coords
        sim_b = hex_decode(cvd.simulate_cvd([b], m)[0]).coords
        mix_sim = [(x + y) / 2 for x, y in zip(sim_a, sim_b)]
        got = hex_decode(sim_mix).coords
        assert all(abs(x - y) <= 1.0 / 255 + 1e-9 for x, y in zip(got, mix_sim))

    def test_sugar_matches_simulate(self):
        colors = ["#E16A86", "#909800"]
        assert cvd.deutan(colors, 0.7) == cvd.simulate_cvd(colors, cvd.cvd_matrix("deutan", 0.7))
        assert cvd.protan(colors) == cvd.simulate_cvd(colors, cvd.cvd_matrix("protan", 1.0))
        assert cvd.tritan(colors, 0.3) == cvd.simulate_cvd(colors, cvd.cvd_matrix("tritan", 0.3))

    def test_parse_error_names_color_index(self):
        with pytest.raises(ValueError, match="color 1"):
            cvd.deutan(["#FFFFFF", "oops"])

    def test_alpha_passes_through_unchanged(self):
        out = cvd.deutan(["#FF000080", "#00FF00"])
        assert out[0].endswith("80") and len(out[1]) == 7
