"""Named palette registry.

Builtin parameter presets ship as package data; additional palettes can
be registered for the current process and optionally persisted to a JSON
file.  Name matching ignores case, spaces, and punctuation, so "set2"
finds "Set 2".
"""

from __future__ import annotations

import difflib
import json
import re
import threading
from dataclasses import dataclass
from importlib import resources

from .palettes import DivergingxParams, PaletteParams

__all__ = [
    "PaletteRecord",
    "PaletteRegistry",
    "UnknownPaletteError",
    "default_registry",
    "PALETTE_TYPES",
]

PALETTE_TYPES = ("qualitative", "sequential-single", "sequential-multi", "diverging", "divergingx")

_PARAM_KEYS = ("h1", "h2", "h3", "c1", "c2", "c3", "cmax", "cmax1", "cmax2",
               "l1", "l2", "l3", "p1", "p2", "p3", "p4", "fixup")

_DIVX_ONLY_KEYS = ("h3", "c3", "l3", "p3", "p4", "cmax1", "cmax2")


class UnknownPaletteError(KeyError):
    """Raised when a palette name cannot be resolved."""

    def __init__(self, name: str, suggestions: list[str]):
        self.name = name
        self.suggestions = suggestions
        hint = f"; did you mean {', '.join(repr(s) for s in suggestions)}?" if suggestions else ""
        super().__init__(f"unknown palette {name!r}{hint}")

    def __str__(self) -> str:  # KeyError quotes its payload otherwise
        return self.args[0]


def _normalize(name: str) -> str:
    return re.sub(r"[^a-z0-9]+", "", name.lower())


def _expand_type(type: str) -> tuple[str, ...]:
    t = type.strip().lower().replace(" ", "-").replace("(", "").replace(")", "")
    if t == "sequential":
        return ("sequential-single", "sequential-multi")
    if t in ("sequential-single-hue", "sequential-singlehue"):
        return ("sequential-single",)
    if t in ("sequential-multi-hue", "sequential-multihue"):
        return ("sequential-multi",)
    if t in PALETTE_TYPES:
        return (t,)
    raise ValueError(f"unknown palette type filter {type!r}")


@dataclass(frozen=True)
class PaletteRecord:
    """A named palette: its type, raw parameters, and where it came from."""

    name: str
    type: str
    raw_params: dict
    source: str  # builtin | registered

    def params(self) -> PaletteParams | DivergingxParams:
        """Parameters as a typed record."""
        raw = {k: v for k, v in self.raw_params.items() if k in _PARAM_KEYS}
        if self.type == "divergingx":
            return DivergingxParams(**raw)
        for k in _DIVX_ONLY_KEYS:
            raw.pop(k, None)
        return PaletteParams(type=self.type, **raw)

    def to_json_dict(self) -> dict:
        out = {"name": self.name, "type": self.type}
        for k in _PARAM_KEYS:
            if k in self.raw_params and self.raw_params[k] is not None:
                out[k] = self.raw_params[k]
        return out


def _record_from_json(obj: dict, source: str) -> PaletteRecord:
    name = obj.get("name")
    ptype = obj.get("type")
    if not name or not isinstance(name, str):
        raise ValueError(f"palette record needs a non-empty name: {obj!r}")
    if ptype not in PALETTE_TYPES:
        raise ValueError(f"palette {name!r} has unknown type {ptype!r}; expected one of {PALETTE_TYPES}")
    raw = {k: obj[k] for k in _PARAM_KEYS if k in obj and obj[k] is not None}
    rec = PaletteRecord(name=name, type=ptype, raw_params=raw, source=source)
    rec.params()  # validates
    return rec


class PaletteRegistry:
    """Builtin plus session-registered palettes.

    All reads and writes go through one lock, so concurrent lookups are
    safe and registration is exclusive.  Registered names shadow builtins
    of the same type without mutating them.
    """

    def __init__(self, include_builtins: bool = True):
        self._lock = threading.RLock()
        self._builtin: list[PaletteRecord] = _load_builtin_records() if include_builtins else []
        self._registered: dict[tuple[str, str], PaletteRecord] = {}

    def lookup(self, name: str, type: str | None = None) -> PaletteRecord:
        """Resolve a palette by normalized name, optionally within a type family.

        A few builtin names exist in more than one family (for example a
        balanced and a flexible diverging variant); passing ``type``
        disambiguates, otherwise the first match in shipped order wins.
        """
        key = _normalize(name)
        wanted = _expand_type(type) if type is not None else PALETTE_TYPES
        with self._lock:
            for t in wanted:
                rec = self._registered.get((key, t))
                if rec is not None:
                    return rec
            for rec in self._builtin:
                if rec.type in wanted and _normalize(rec.name) == key:
                    return rec
            known = {}
            for rec in self._iter_all():
                if rec.type in wanted:
                    known.setdefault(_normalize(rec.name), rec.name)
        matches = difflib.get_close_matches(key, list(known), n=3, cutoff=0.5)
        raise UnknownPaletteError(name, [known[m] for m in matches])

    def _iter_all(self):
        shadowed = set(self._registered)
        for rec in self._builtin:
            if (_normalize(rec.name), rec.type) not in shadowed:
                yield rec
        yield from self._registered.values()

    def list(self, type: str | None = None) -> list[PaletteRecord]:
        """All records grouped by type; builtins first in shipped order."""
        with self._lock:
            recs = list(self._iter_all())
        order = {t: i for i, t in enumerate(PALETTE_TYPES)}
        recs.sort(key=lambda r: order[r.type])  # stable: keeps shipped order in groups
        if type is not None:
            wanted = _expand_type(type)
            recs = [r for r in recs if r.type in wanted]
        return recs

    def register(self, name: str, params: PaletteParams | DivergingxParams | dict,
                 type: str | None = None) -> PaletteRecord:
        """Store a palette under ``name`` for this registry (session scope).

        Registering an existing name of the same type overwrites it;
        builtin records are shadowed, never mutated, and listing marks
        the replacement as ``registered``.
        """
        if not name or not _normalize(name):
            raise ValueError(f"palette name must contain letters or digits, got {name!r}")
        if isinstance(params, DivergingxParams):
            ptype = "divergingx"
            raw = {k: v for k, v in vars(params).items() if v is not None}
            rec = PaletteRecord(name=name, type=ptype, raw_params=raw, source="registered")
        elif isinstance(params, PaletteParams):
            ptype = params.type
            raw = {k: v for k, v in vars(params).items() if v is not None and k != "type"}
            rec = PaletteRecord(name=name, type=ptype, raw_params=raw, source="registered")
        else:
            obj = dict(params)
            if type is not None:
                obj.setdefault("type", type)
            obj["name"] = name
            rec = _record_from_json(obj, "registered")
            ptype = rec.type
        if type is not None and _expand_type(type) != (ptype,) and ptype not in _expand_type(type):
            raise ValueError(f"type {type!r} does not match parameter record type {ptype!r}")
        with self._lock:
            self._registered[(_normalize(name), ptype)] = rec
        return rec

    # --- JSON import/export ------------------------------------------------

    def load_file(self, path) -> int:
        """Merge palettes from a registry JSON file; returns the count loaded."""
        with open(path, encoding="utf-8") as fh:
            data = json.load(fh)
        entries = data["palettes"] if isinstance(data, dict) else data
        count = 0
        for obj in entries:
            rec = _record_from_json(obj, "registered")
            with self._lock:
                self._registered[(_normalize(rec.name), rec.type)] = rec
            count += 1
        return count

    def dump_registered(self, path) -> int:
        """Write session-registered palettes to a registry JSON file."""
        with self._lock:
            recs = list(self._registered.values())
        payload = {"palettes": [r.to_json_dict() for r in recs]}
        with open(path, "w", encoding="utf-8") as fh:
            json.dump(payload, fh, indent=2)
            fh.write("\n")
        return len(recs)


def _load_builtin_records() -> list[PaletteRecord]:
    text = resources.files(__package__).joinpath("data/palettes.json").read_text("utf-8")
    data = json.loads(text)
    return [_record_from_json(obj, "builtin") for obj in data["palettes"]]


_default_registry: PaletteRegistry | None = None
_default_lock = threading.Lock()


def default_registry() -> PaletteRegistry:
    """The process-wide registry used when none is passed explicitly."""
    global _default_registry
    with _default_lock:
        if _default_registry is None:
            _default_registry = PaletteRegistry()
        return _default_registry
