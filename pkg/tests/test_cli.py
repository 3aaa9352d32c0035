import json

import pytest

from hclkit.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


class TestGenerate:
    def test_named_qualitative(self, capsys):
        code, out, _ = run(capsys, "generate", "qualitative", "--palette", "Dark 3", "-n", "4")
        assert code == 0
        assert out.splitlines() == ["#E16A86", "#909800", "#00AD9A", "#9183E6"]

    def test_name_with_overrides(self, capsys):
        code, out, _ = run(capsys, "generate", "qualitative", "--palette", "set2",
                           "--l1", "80", "-n", "4")
        assert code == 0
        assert out.splitlines() == ["#FFACBF", "#C6CD70", "#32DDCD", "#C7BEFF"]

    def test_gray_sequential(self, capsys):
        code, out, _ = run(capsys, "generate", "sequential", "--c1", "0", "--c2", "0", "-n", "5")
        assert code == 0
        lines = out.splitlines()
        assert len(lines) == 5
        assert all(s[1:3] == s[3:5] == s[5:7] for s in lines)

    def test_plain_output_has_exactly_n_lines(self, capsys):
        for n in (1, 3, 12):
            _, out, _ = run(capsys, "generate", "diverging", "--palette", "Blue-Red",
                            "-n", str(n))
            assert len(out.splitlines()) == n

    def test_json_output(self, capsys):
        code, out, _ = run(capsys, "generate", "qualitative", "--palette", "Dark 3",
                           "-n", "4", "--json")
        assert code == 0
        assert json.loads(out) == ["#E16A86", "#909800", "#00AD9A", "#9183E6"]

    def test_unknown_palette_exits_2_with_suggestion(self, capsys):
        code, _, err = run(capsys, "generate", "qualitative", "--palette", "Drak 3", "-n", "4")
        assert code == 2
        assert "Dark 3" in err

    def test_bad_params_exit_2(self, capsys):
        code, _, err = run(capsys, "generate", "sequential", "--p1", "-1", "-n", "4")
        assert code == 2 and "error" in err

    def test_divergingx_named(self, capsys):
        code, out, _ = run(capsys, "generate", "divergingx", "--palette", "Cividis", "-n", "3")
        assert code == 0 and len(out.splitlines()) == 3


class TestListRegister:
    def test_list_plain_groups(self, capsys):
        code, out, _ = run(capsys, "list", "qualitative")
        assert code == 0
        assert "[qualitative]" in out and "Dark 3" in out and "Blues 2" not in out

    def test_list_json(self, capsys):
        code, out, _ = run(capsys, "list", "--json")
        records = json.loads(out)
        assert any(r["name"] == "Viridis" for r in records)

    def test_register_and_generate_via_file(self, capsys, tmp_path):
        reg_file = str(tmp_path / "reg.json")
        code, out, _ = run(capsys, "register", "myset",
                           '{"type":"qualitative","h1":0,"c1":60,"l1":80}',
                           "--registry", reg_file)
        assert code == 0
        assert json.loads(out)["name"] == "myset"
        code, out, _ = run(capsys, "generate", "qualitative", "--palette", "myset",
                           "-n", "4", "--registry", reg_file)
        assert code == 0
        assert out.splitlines() == ["#FFACBF", "#C6CD70", "#32DDCD", "#C7BEFF"]

    def test_register_bad_json_exits_2(self, capsys):
        code, _, err = run(capsys, "register", "x", "{not json")
        assert code == 2

    def test_registry_file_missing_exits_3(self, capsys, tmp_path):
        code, _, err = run(capsys, "list", "--registry", str(tmp_path / "nope.json"))
        assert code == 3


class TestSpecSwatch:
    def test_spec_json(self, capsys):
        code, out, _ = run(capsys, "spec", "#E16A86", "#909800", "#00AD9A", "--json")
        trace = json.loads(out)
        assert trace["n"] == 3 and len(trace["luminance"]) == 3

    def test_spec_plain_table(self, capsys):
        code, out, _ = run(capsys, "spec", "#FFFFFF")
        assert code == 0
        assert out.splitlines()[0] == "color hue chroma luminance"

    def test_spec_svg_to_file(self, capsys, tmp_path):
        path = tmp_path / "spec.svg"
        code, _, _ = run(capsys, "spec", "#E16A86", "#909800", "--svg", "--rgb",
                         "-o", str(path))
        assert code == 0
        assert path.read_text().startswith("<svg")

    def test_swatch_named_groups(self, capsys):
        code, out, _ = run(capsys, "swatch", "warm=#E16A86,#909800", "cold=#00AD9A,#9183E6")
        assert code == 0
        assert out.count("<rect") == 4 and "warm" in out

    def test_swatch_bare_colors(self, capsys):
        code, out, _ = run(capsys, "swatch", "#E16A86", "#909800")
        assert code == 0 and out.count("<rect") == 2


class TestCvdManip:
    def test_cvd_reference_vector(self, capsys):
        rainbow = ["#FF0000FF", "#FF6600FF", "#FFCC00FF", "#CCFF00FF", "#66FF00FF",
                   "#00FF00FF", "#00FF66FF", "#00FFCCFF", "#00CCFFFF", "#0066FFFF",
                   "#0000FFFF"]
        code, out, _ = run(capsys, "cvd", "deutan", "1.0", *rainbow)
        assert code == 0
        assert out.splitlines() == ["#5D4700FF", "#B58C01FF", "#FFD005FF", "#FFE408FF",
                                    "#FFC809FF", "#DBAB0AFF", "#C4B06DFF", "#ACB5D0FF",
                                    "#7595FFFF", "#1D50FBFF", "#000CF7FF"]

    def test_cvd_requires_colors_or_png(self, capsys):
        code, _, err = run(capsys, "cvd", "deutan", "1.0")
        assert code == 2

    def test_manip_desaturate_reference(self, capsys):
        code, out, _ = run(capsys, "manip", "desaturate", "1.0",
                           "#FF0000FF", "#00FF00FF", "#0000FFFF")
        assert code == 0
        assert out.splitlines() == ["#7F7F7FFF", "#DCDCDCFF", "#4C4C4CFF"]

    def test_manip_lighten_json(self, capsys):
        code, out, _ = run(capsys, "manip", "lighten", "0.2", "#61A9D9", "--json")
        assert code == 0
        assert isinstance(json.loads(out), list)

    def test_manip_bad_amount_exits_2(self, capsys):
        code, _, _ = run(capsys, "manip", "desaturate", "2.0", "#FFFFFF")
        assert code == 2
