import json

import pytest

from hclkit import palettes
from hclkit.palettes import PaletteParams
from hclkit.registry import PaletteRegistry, UnknownPaletteError, default_registry


@pytest.fixture
def reg():
    return PaletteRegistry()


class TestLookup:
    def test_set2_parameters(self, reg):
        rec = reg.lookup("set2")
        assert rec.name == "Set 2"
        assert rec.raw_params == {"h1": 0, "c1": 60, "l1": 70, "fixup": True}

    def test_matching_ignores_case_space_punctuation(self, reg):
        for variant in ("Set 2", "SET2", "set-2", "  set _2 "):
            assert reg.lookup(variant).name == "Set 2"

    def test_unknown_name_suggests_neighbors(self, reg):
        with pytest.raises(UnknownPaletteError) as exc:
            reg.lookup("Drak 3")
        assert "Dark 3" in exc.value.suggestions

    def test_type_disambiguates_shared_names(self, reg):
        assert reg.lookup("Tropic", type="diverging").type == "diverging"
        assert reg.lookup("Tropic", type="divergingx").type == "divergingx"

    def test_lookup_respects_type_filter(self, reg):
        with pytest.raises(UnknownPaletteError):
            reg.lookup("Dark 3", type="diverging")


class TestList:
    def test_builtin_group_sizes(self, reg):
        assert len(reg.list("qualitative")) == 9
        assert len(reg.list("sequential-single")) == 11
        assert len(reg.list("sequential-multi")) == 55
        assert len(reg.list("sequential")) == 66
        assert len(reg.list("diverging")) == 18

    def test_qualitative_names_in_shipped_order(self, reg):
        names = [r.name for r in reg.list("qualitative")]
        assert names == ["Pastel 1", "Dark 2", "Dark 3", "Set 2", "Set 3",
                         "Warm", "Cold", "Harmonic", "Dynamic"]

    def test_groups_ordered_by_type(self, reg):
        types = [r.type for r in reg.list()]
        boundaries = [types.index(t) for t in
                      ("qualitative", "sequential-single", "sequential-multi",
                       "diverging", "divergingx")]
        assert boundaries == sorted(boundaries)

    def test_unknown_filter_rejected(self, reg):
        with pytest.raises(ValueError):
            reg.list("rainbow")


class TestRegister:
    def test_register_then_generate(self, reg):
        base = reg.lookup("set2").raw_params
        reg.register("myset", dict(base) | {"l1": 80}, type="qualitative")
        assert palettes.qualitative_palette(4, "myset", registry=reg) == \
            ["#FFACBF", "#C6CD70", "#32DDCD", "#C7BEFF"]

    def test_registered_name_appears_in_listing(self, reg):
        reg.register("myset", PaletteParams(type="qualitative", h1=0, c1=60, l1=80))
        names = [r.name for r in reg.list("qualitative")]
        assert names == ["Pastel 1", "Dark 2", "Dark 3", "Set 2", "Set 3",
                         "Warm", "Cold", "Harmonic", "Dynamic", "myset"]

    def test_register_overwrites_previous(self, reg):
        reg.register("mine", PaletteParams(type="qualitative", h1=0, c1=60, l1=70))
        reg.register("mine", PaletteParams(type="qualitative", h1=0, c1=60, l1=80))
        assert reg.lookup("mine").raw_params["l1"] == 80

    def test_overwriting_builtin_shadows_and_marks_source(self, reg):
        reg.register("Set 2", PaletteParams(type="qualitative", h1=10, c1=60, l1=70))
        rec = reg.lookup("set2")
        assert rec.source == "registered" and rec.raw_params["h1"] == 10
        qualitative = reg.list("qualitative")
        assert sum(1 for r in qualitative if r.name.lower().startswith("set 2")) == 1
        # a fresh registry still has the builtin record untouched
        assert PaletteRegistry().lookup("set2").raw_params["h1"] == 0

    def test_register_validates(self, reg):
        with pytest.raises(ValueError):
            reg.register("", PaletteParams(type="qualitative"))
        with pytest.raises(ValueError):
            reg.register("bad", {"type": "nope", "h1": 0})

    def test_default_registry_is_shared(self):
        assert default_registry() is default_registry()


class TestJsonRoundTrip:
    def test_dump_and_load(self, reg, tmp_path):
        reg.register("customseq",
                     PaletteParams(type="sequential-single", h1=120, c1=50, c2=0,
                                   l1=30, l2=90, p1=1.2))
        path = tmp_path / "registry.json"
        assert reg.dump_registered(path) == 1
        data = json.loads(path.read_text())
        assert data["palettes"][0]["name"] == "customseq"
        assert data["palettes"][0]["type"] == "sequential-single"

        other = PaletteRegistry()
        assert other.load_file(path) == 1
        assert other.lookup("customseq").source == "registered"
        assert palettes.sequential_palette(5, "customseq", registry=other) == \
            palettes.sequential_palette(5, "customseq", registry=reg)

    def test_load_rejects_bad_records(self, reg, tmp_path):
        path = tmp_path / "bad.json"
        path.write_text(json.dumps({"palettes": [{"name": "x", "type": "mystery"}]}))
        with pytest.raises(ValueError):
            reg.load_file(path)
