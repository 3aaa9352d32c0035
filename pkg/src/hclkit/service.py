"""Embedded HTTP JSON service.

Exposes palette generation, CVD emulation, palette analysis, the HCL
plane picker, and registry access over a small JSON API, plus optional
static file serving for a browser frontend.  Responses carry no
timestamps or randomness, so identical requests produce byte-identical
bodies.  See docs/api.md for the request and response schemas.
"""

from __future__ import annotations

import json
import os
import threading
from http.server import BaseHTTPRequestHandler, ThreadingHTTPServer

from . import analysis, core, cvd, manip, palettes
from .registry import PaletteRegistry, UnknownPaletteError, default_registry

__all__ = ["make_server", "ValidationError"]

_CONTENT_TYPES = {
    ".html": "text/html; charset=utf-8",
    ".js": "text/javascript; charset=utf-8",
    ".mjs": "text/javascript; charset=utf-8",
    ".css": "text/css; charset=utf-8",
    ".json": "application/json",
    ".svg": "image/svg+xml",
    ".png": "image/png",
    ".ico": "image/x-icon",
    ".map": "application/json",
    ".txt": "text/plain; charset=utf-8",
}

_PARAM_KEYS = ("h1", "h2", "h3", "c1", "c2", "c3", "cmax", "cmax1", "cmax2",
               "l1", "l2", "l3", "p1", "p2", "p3", "p4", "fixup")


class ValidationError(Exception):
    """Carries machine-readable per-field errors for a 400 response."""

    def __init__(self, errors: dict):
        self.errors = errors
        super().__init__(json.dumps(errors, sort_keys=True))


def _want(body: dict, key: str, kind, required: bool = False, default=None):
    if key not in body or body[key] is None:
        if required:
            raise ValidationError({key: "field is required"})
        return default
    value = body[key]
    try:
        if kind is float and isinstance(value, bool):
            raise TypeError
        return kind(value)
    except (TypeError, ValueError):
        raise ValidationError({key: f"expected {kind.__name__}, got {value!r}"}) from None


def _want_colors(body: dict) -> list[str]:
    colors = body.get("colors")
    if not isinstance(colors, list) or not colors or not all(isinstance(c, str) for c in colors):
        raise ValidationError({"colors": "expected a non-empty list of color strings"})
    return colors


def handle_generate(body: dict, registry: PaletteRegistry) -> dict:
    kind = _want(body, "type", str, required=True)
    if kind not in ("qualitative", "sequential", "diverging", "divergingx"):
        raise ValidationError({"type": f"unknown palette type {kind!r}"})
    n = _want(body, "n", int, required=True)
    if n < 0:
        raise ValidationError({"n": "must be non-negative"})
    rev = bool(body.get("rev", False))
    alpha = _want(body, "alpha", float)
    overrides = {}
    for key in _PARAM_KEYS:
        if key in body and body[key] is not None:
            overrides[key] = bool(body[key]) if key == "fixup" else _want(body, key, float)
    try:
        params = palettes.resolve_palette_params(kind, body.get("palette"), overrides, registry)
        result = palettes.build_palette(params, n, rev=rev, alpha=alpha)
    except ValueError as exc:
        raise ValidationError({"params": str(exc)}) from None
    payload = {"colors": result.colors, "clamped": result.clamped}
    if result.colors and all(c is not None for c in result.colors):
        payload["trace"] = analysis.spectrum(result.colors, clamped=result.clamped).to_json_dict()
    else:
        payload["trace"] = None
    return payload


def handle_cvd(body: dict) -> dict:
    colors = _want_colors(body)
    kind = _want(body, "kind", str, required=True)
    severity = _want(body, "severity", float, default=1.0)
    try:
        matrix = cvd.cvd_matrix(kind, severity)
        return {"colors": cvd.simulate_cvd(colors, matrix)}
    except ValueError as exc:
        raise ValidationError({"cvd": str(exc)}) from None


def handle_analyze(body: dict) -> dict:
    colors = _want_colors(body)
    try:
        trace = analysis.spectrum(colors)
        payload = {"trace": trace.to_json_dict()}
        if trace.n >= 3:
            guess = analysis.infer_type(trace)
            payload["type"] = guess.to_json_dict()
            payload["projection"] = analysis.hcl_projection(colors, guess).to_json_dict()
        else:
            payload["type"] = None
            payload["projection"] = None
        return payload
    except ValueError as exc:
        raise ValidationError({"colors": str(exc)}) from None


def handle_pick(body: dict) -> dict:
    mode = _want(body, "mode", str, required=True)
    if mode == "hue-chroma":
        level = _want(body, "l", float, required=True)
        if not 0.0 <= level <= 100.0:
            raise ValidationError({"l": "must be in [0, 100]"})
        hue_step = _want(body, "hue_step", float, default=4.0)
        chroma_step = _want(body, "chroma_step", float, default=4.0)
        xs = [round(hue_step * i, 6) for i in range(int(360.0 / hue_step) + 1)]
        ys = [round(chroma_step * j, 6) for j in range(int(180.0 / chroma_step) + 1)]
        cells = [
            [core.hex_encode(core.polar_luv(level, c, h), fixup=False) for h in xs]
            for c in ys
        ]
        grid = {"mode": mode, "x_label": "hue", "y_label": "chroma",
                "x_values": xs, "y_values": ys, "cells": cells, "fixed": {"luminance": level}}
    elif mode == "luminance-chroma":
        hue = _want(body, "h", float, required=True)
        chroma_step = _want(body, "chroma_step", float, default=4.0)
        lum_step = _want(body, "luminance_step", float, default=2.0)
        xs = [round(chroma_step * i, 6) for i in range(int(180.0 / chroma_step) + 1)]
        ys = [round(lum_step * j, 6) for j in range(int(100.0 / lum_step) + 1)]
        cells = [
            [core.hex_encode(core.polar_luv(l, c, hue), fixup=False) for c in xs]
            for l in ys
        ]
        grid = {"mode": mode, "x_label": "chroma", "y_label": "luminance",
                "x_values": xs, "y_values": ys, "cells": cells, "fixed": {"hue": hue % 360.0}}
    else:
        raise ValidationError({"mode": "expected 'hue-chroma' or 'luminance-chroma'"})

    snapped = None
    query = body.get("query")
    if query is not None:
        if not isinstance(query, dict):
            raise ValidationError({"query": "expected an object with h, c, l"})
        qh = _want(query, "h", float, required=True)
        qc = _want(query, "c", float, required=True)
        ql = _want(query, "l", float, required=True)
        if not 0.0 <= ql <= 100.0:
            raise ValidationError({"query": "l must be in [0, 100]"})
        if qc < 0.0:
            raise ValidationError({"query": "c must be non-negative"})
        mc = manip.max_chroma(qh, ql)
        c_in = min(qc, mc)
        snapped = {"h": qh % 360.0, "c": c_in, "l": ql, "max_chroma": mc,
                   "hex": core.hex_encode(core.polar_luv(ql, c_in, qh), fixup=True)}
    return grid | {"snapped": snapped}


def handle_register(body: dict, registry: PaletteRegistry, registry_file: str | None,
                    lock: threading.Lock) -> dict:
    name = body.get("name")
    if not isinstance(name, str) or not name.strip():
        raise ValidationError({"name": "field is required"})
    params = {k: body[k] for k in _PARAM_KEYS if k in body and body[k] is not None}
    ptype = body.get("type")
    if not isinstance(ptype, str):
        raise ValidationError({"type": "field is required"})
    try:
        rec = registry.register(name, params, type=ptype)
    except ValueError as exc:
        raise ValidationError({"params": str(exc)}) from None
    if registry_file:
        with lock:
            registry.dump_registered(registry_file)
    return {"ok": True, "record": rec.to_json_dict() | {"source": rec.source}}


def handle_palettes(registry: PaletteRegistry, type_filter: str | None) -> dict:
    try:
        records = registry.list(type_filter)
    except ValueError as exc:
        raise ValidationError({"type": str(exc)}) from None
    out = []
    for rec in records:
        d = rec.to_json_dict()
        params = {k: v for k, v in d.items() if k not in ("name", "type")}
        out.append({"name": rec.name, "type": rec.type, "source": rec.source, "params": params})
    return {"palettes": out}


class _Handler(BaseHTTPRequestHandler):
    protocol_version = "HTTP/1.1"

    # -- helpers -----------------------------------------------------------

    def _send_json(self, payload: dict, status: int = 200) -> None:
        body = json.dumps(payload, sort_keys=True, separators=(",", ":")).encode() + b"\n"
        self.send_response(status)
        self.send_header("Content-Type", "application/json")
        self.send_header("Content-Length", str(len(body)))
        self.end_headers()
        self.wfile.write(body)

    def _read_body(self) -> dict:
        length = int(self.headers.get("Content-Length") or 0)
        raw = self.rfile.read(length) if length else b""
        if not raw:
            raise ValidationError({"body": "expected a JSON object body"})
        try:
            body = json.loads(raw)
        except json.JSONDecodeError as exc:
            raise ValidationError({"body": f"invalid JSON: {exc}"}) from None
        if not isinstance(body, dict):
            raise ValidationError({"body": "expected a JSON object"})
        return body

    def log_message(self, fmt, *args):
        if not getattr(self.server, "quiet", True):
            super().log_message(fmt, *args)

    # -- routes --------------------------------------------------------------

    def do_GET(self):
        path, _, query = self.path.partition("?")
        if path == "/palettes":
            type_filter = None
            for part in query.split("&"):
                if part.startswith("type="):
                    type_filter = part[len("type="):].replace("%20", " ") or None
            try:
                self._send_json(handle_palettes(self.server.registry, type_filter))
            except ValidationError as exc:
                self._send_json({"error": exc.errors}, 400)
            return
        if path == "/health":
            self._send_json({"ok": True})
            return
        self._serve_static(path)

    def do_POST(self):
        try:
            body = self._read_body()
            if self.path == "/generate":
                payload = handle_generate(body, self.server.registry)
            elif self.path == "/cvd":
                payload = handle_cvd(body)
            elif self.path == "/analyze":
                payload = handle_analyze(body)
            elif self.path == "/pick":
                payload = handle_pick(body)
            elif self.path == "/register":
                payload = handle_register(body, self.server.registry,
                                          self.server.registry_file, self.server.write_lock)
            else:
                self._send_json({"error": f"no such endpoint {self.path!r}"}, 404)
                return
            self._send_json(payload)
        except UnknownPaletteError as exc:
            self._send_json({"error": str(exc), "suggestions": exc.suggestions}, 404)
        except ValidationError as exc:
            self._send_json({"error": exc.errors}, 400)
        except Exception as exc:  # pragma: no cover - last-resort guard
            self._send_json({"error": f"internal error: {exc}"}, 500)

    def _serve_static(self, path: str) -> None:
        static_dir = self.server.static_dir
        if static_dir is None:
            if path in ("/", "/index.html"):
                self._send_json({
                    "service": "hclkit",
                    "endpoints": ["GET /palettes", "POST /generate", "POST /cvd",
                                  "POST /analyze", "POST /pick", "POST /register"],
                })
                return
            self._send_json({"error": f"no such endpoint {path!r}"}, 404)
            return
        rel = path.lstrip("/") or "index.html"
        full = os.path.normpath(os.path.join(static_dir, rel))
        if not full.startswith(os.path.abspath(static_dir) + os.sep) and full != os.path.abspath(static_dir):
            self._send_json({"error": "forbidden"}, 403)
            return
        if os.path.isdir(full):
            full = os.path.join(full, "index.html")
        if not os.path.isfile(full):
            self._send_json({"error": f"not found: {path}"}, 404)
            return
        ext = os.path.splitext(full)[1].lower()
        ctype = _CONTENT_TYPES.get(ext, "application/octet-stream")
        with open(full, "rb") as fh:
            data = fh.read()
        self.send_response(200)
        self.send_header("Content-Type", ctype)
        self.send_header("Content-Length", str(len(data)))
        self.end_headers()
        self.wfile.write(data)


def make_server(bind: str = "127.0.0.1", port: int = 8027, registry: PaletteRegistry | None = None,
                registry_file: str | None = None, static_dir: str | None = None,
                quiet: bool = True) -> ThreadingHTTPServer:
    """Build (but do not start) the threaded HTTP server.

    With ``registry_file`` the file is loaded at startup and rewritten on
    every successful /register; without it registrations stay in memory.
    """
    if registry is None:
        registry = PaletteRegistry() if registry_file else default_registry()
    if registry_file and os.path.exists(registry_file):
        registry.load_file(registry_file)
    server = ThreadingHTTPServer((bind, port), _Handler)
    server.registry = registry
    server.registry_file = registry_file
    server.static_dir = os.path.abspath(static_dir) if static_dir else None
    server.write_lock = threading.Lock()
    server.quiet = quiet
    return server
