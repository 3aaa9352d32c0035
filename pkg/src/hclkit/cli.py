"""Command-line interface.

Exit codes: 0 success, 2 validation problem, 3 I/O problem.  Plain text
goes to stdout for shell pipelines; ``--json`` switches to the machine
format used by the HTTP service.
"""

from __future__ import annotations

import argparse
import json
import os
import sys

from . import analysis, cvd, manip, palettes
from .registry import PaletteRegistry, UnknownPaletteError, default_registry

EXIT_OK = 0
EXIT_VALIDATION = 2
EXIT_IO = 3

_GENERATE_KINDS = ("qualitative", "sequential", "diverging", "divergingx")

_PARAM_FLAGS = ("h1", "h2", "h3", "c1", "c2", "c3", "cmax", "cmax1", "cmax2",
                "l1", "l2", "l3", "p1", "p2", "p3", "p4")


def _registry_from_args(args, allow_missing: bool = False) -> PaletteRegistry:
    path = getattr(args, "registry", None)
    if path:
        reg = PaletteRegistry()
        if not (allow_missing and not os.path.exists(path)):
            reg.load_file(path)
        return reg
    return default_registry()


def _emit(text: str, out_path: str | None) -> None:
    if out_path:
        with open(out_path, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _cmd_generate(args) -> int:
    reg = _registry_from_args(args)
    overrides = {k: getattr(args, k) for k in _PARAM_FLAGS}
    common = dict(rev=args.rev, alpha=args.alpha, registry=reg,
                  fixup=False if args.no_fixup else None)
    kind = args.type
    if kind == "qualitative":
        colors = palettes.qualitative_palette(
            args.n, args.palette, h1=overrides["h1"], h2=overrides["h2"],
            c1=overrides["c1"], l1=overrides["l1"], **common)
    elif kind == "sequential":
        colors = palettes.sequential_palette(
            args.n, args.palette,
            **{k: overrides[k] for k in ("h1", "h2", "c1", "c2", "cmax", "l1", "l2", "p1", "p2")},
            **common)
    elif kind == "diverging":
        colors = palettes.diverging_palette(
            args.n, args.palette,
            **{k: overrides[k] for k in ("h1", "h2", "c1", "cmax", "l1", "l2", "p1", "p2")},
            **common)
    else:
        colors = palettes.divergingx_palette(
            args.n, args.palette,
            **{k: overrides[k] for k in ("h1", "h2", "h3", "c1", "c2", "c3",
                                         "cmax1", "cmax2", "l1", "l2", "l3",
                                         "p1", "p2", "p3", "p4")},
            **common)
    if args.json:
        print(json.dumps(colors))
    else:
        for c in colors:
            print(c if c is not None else "NA")
    return EXIT_OK


def _cmd_list(args) -> int:
    reg = _registry_from_args(args)
    records = reg.list(args.type)
    if args.json:
        print(json.dumps([r.to_json_dict() | {"source": r.source} for r in records]))
        return EXIT_OK
    current = None
    for rec in records:
        if rec.type != current:
            if current is not None:
                print()
            print(f"[{rec.type}]")
            current = rec.type
        marker = "" if rec.source == "builtin" else "  (registered)"
        print(f"  {rec.name}{marker}")
    return EXIT_OK


def _cmd_register(args) -> int:
    try:
        params = json.loads(args.params)
    except json.JSONDecodeError as exc:
        raise ValueError(f"params must be a JSON object: {exc}") from None
    if not isinstance(params, dict):
        raise ValueError("params must be a JSON object")
    reg = _registry_from_args(args, allow_missing=True)
    rec = reg.register(args.name, params)
    if args.registry:
        reg.dump_registered(args.registry)
    print(json.dumps(rec.to_json_dict() | {"source": rec.source}))
    return EXIT_OK


def _cmd_spec(args) -> int:
    trace = analysis.spectrum(args.colors)
    if args.svg:
        _emit(analysis.spectrum_svg(trace, include_rgb=args.rgb), args.output)
    elif args.json:
        _emit(json.dumps(trace.to_json_dict()) + "\n", args.output)
    else:
        lines = ["color hue chroma luminance"]
        for hx, h, c, l in zip(trace.colors, trace.hue, trace.chroma, trace.luminance):
            lines.append(f"{hx} {h:.3f} {c:.3f} {l:.3f}")
        _emit("\n".join(lines) + "\n", args.output)
    return EXIT_OK


def _cmd_swatch(args) -> int:
    named, bare = [], []
    for item in args.palettes:
        if "=" in item and not item.startswith("#"):
            name, _, spec_str = item.partition("=")
            colors = [c.strip() for c in spec_str.split(",") if c.strip()]
            if not colors:
                raise ValueError(f"palette {name!r} has no colors")
            named.append((name, colors))
        else:
            bare.append(item)
    if bare:
        named.append((args.name, bare))
    if not named:
        raise ValueError("no palettes given; pass hex colors or NAME=#RRGGBB,... groups")
    _emit(analysis.swatch_svg(named), args.output)
    return EXIT_OK


def _cmd_cvd(args) -> int:
    matrix = cvd.cvd_matrix(args.kind, args.severity)
    if args.png:
        from . import rasters

        out_path = args.out or rasters.suffixed_path(args.png, args.kind)
        rasters.simulate_cvd_png(args.png, out_path, matrix)
        print(out_path)
        return EXIT_OK
    if not args.colors:
        raise ValueError("pass colors or --png FILE")
    result = cvd.simulate_cvd(args.colors, matrix)
    if args.json:
        print(json.dumps(result))
    else:
        for c in result:
            print(c)
    return EXIT_OK


def _cmd_manip(args) -> int:
    if args.op == "desaturate":
        result = manip.desaturate(args.colors, args.amount)
    elif args.op == "lighten":
        result = manip.lighten(args.colors, args.amount, method=args.method,
                               space=args.space or "HCL")
    else:
        result = manip.darken(args.colors, args.amount, method=args.method,
                              space=args.space or "combined")
    if args.json:
        print(json.dumps(result))
    else:
        for c in result:
            print(c)
    return EXIT_OK


def _cmd_serve(args) -> int:
    from . import service

    reg = default_registry() if not args.registry else None
    server = service.make_server(args.bind, args.port, registry=reg,
                                 registry_file=args.registry, static_dir=args.static)
    host, port = server.server_address[:2]
    print(f"serving on http://{host}:{port}/", file=sys.stderr)
    try:
        server.serve_forever()
    except KeyboardInterrupt:
        pass
    finally:
        server.server_close()
    return EXIT_OK


def _add_param_flags(p: argparse.ArgumentParser, keys) -> None:
    for k in keys:
        p.add_argument(f"--{k}", type=float, default=None)


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="hclkit",
                                     description="HCL-based color palettes and color utilities")
    sub = parser.add_subparsers(dest="command", required=True)

    g = sub.add_parser("generate", help="generate a palette by name or parameters")
    g.add_argument("type", choices=_GENERATE_KINDS)
    g.add_argument("--palette", help="named palette; explicit parameters override its values")
    g.add_argument("-n", type=int, default=7, help="number of colors (default 7)")
    _add_param_flags(g, _PARAM_FLAGS)
    g.add_argument("--rev", action="store_true", help="reverse the color order")
    g.add_argument("--alpha", type=float, default=None, help="alpha in [0, 1] appended to each hex")
    g.add_argument("--no-fixup", action="store_true",
                   help="report out-of-gamut colors as NA instead of clamping")
    g.add_argument("--json", action="store_true")
    g.add_argument("--registry", help="registry JSON file merged over the builtins")
    g.set_defaults(func=_cmd_generate)

    li = sub.add_parser("list", help="list palettes in the registry")
    li.add_argument("type", nargs="?", default=None,
                    help="filter: qualitative, sequential, sequential-single, "
                         "sequential-multi, diverging, divergingx")
    li.add_argument("--json", action="store_true")
    li.add_argument("--registry", help="registry JSON file merged over the builtins")
    li.set_defaults(func=_cmd_list)

    rg = sub.add_parser("register", help="register a palette for reuse by name")
    rg.add_argument("name")
    rg.add_argument("params", help='JSON object, e.g. \'{"type":"qualitative","h1":0,"c1":60,"l1":80}\'')
    rg.add_argument("--registry", help="registry JSON file to load and persist to")
    rg.set_defaults(func=_cmd_register)

    sp = sub.add_parser("spec", help="HCL spectrum of a palette")
    sp.add_argument("colors", nargs="+", help="hex colors or color names")
    sp.add_argument("--rgb", action="store_true", help="include RGB trajectories (SVG output)")
    sp.add_argument("--json", action="store_true")
    sp.add_argument("--svg", action="store_true")
    sp.add_argument("-o", "--output", default=None)
    sp.set_defaults(func=_cmd_spec)

    sw = sub.add_parser("swatch", help="render palettes as an SVG swatch sheet")
    sw.add_argument("palettes", nargs="+",
                    help="hex colors, or NAME=#RRGGBB,#RRGGBB,... groups")
    sw.add_argument("--name", default="palette", help="label for bare color lists")
    sw.add_argument("-o", "--output", default=None)
    sw.set_defaults(func=_cmd_swatch)

    cv = sub.add_parser("cvd", help="emulate color vision deficiency")
    cv.add_argument("kind", choices=cvd.KINDS)
    cv.add_argument("severity", type=float)
    cv.add_argument("colors", nargs="*", help="hex colors (alpha preserved)")
    cv.add_argument("--png", help="transform a PNG image instead of a color list")
    cv.add_argument("--out", help="output path for --png (default: suffixed input name)")
    cv.add_argument("--json", action="store_true")
    cv.set_defaults(func=_cmd_cvd)

    mp = sub.add_parser("manip", help="desaturate, lighten, or darken colors")
    mp.add_argument("op", choices=("desaturate", "lighten", "darken"))
    mp.add_argument("amount", type=float)
    mp.add_argument("colors", nargs="+")
    mp.add_argument("--method", choices=("relative", "absolute"), default="relative")
    mp.add_argument("--space", choices=("HCL", "HLS", "combined"), default=None)
    mp.add_argument("--json", action="store_true")
    mp.set_defaults(func=_cmd_manip)

    sv = sub.add_parser("serve", help="run the HTTP JSON service")
    sv.add_argument("--bind", default="127.0.0.1")
    sv.add_argument("--port", type=int, default=8027)
    sv.add_argument("--registry", help="registry JSON file loaded at startup and written on register")
    sv.add_argument("--static", help="directory of static files to serve at /")
    sv.set_defaults(func=_cmd_serve)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except UnknownPaletteError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_VALIDATION
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_VALIDATION
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_IO


if __name__ == "__main__":
    sys.exit(main())
