"""Command line front end.

Subcommands compute exactly the layers the HTTP service serves (same code
path), print canonical JSON to stdout, and exit 0 on success, 1 on a
geometric refusal (JSON diagnostic on stdout), 2 on malformed input.
"""

from __future__ import annotations

import argparse
import json
import os
import sys

from .errors import CposError, ValidationError
from .kernel import Vec
from .polygon import CposPolygon
from .scene import build_layer, canon_json, run_checks
from .svg import svg_scene


def _load_polygon(path: str) -> CposPolygon:
    try:
        with open(path, "r", encoding="utf-8") as fh:
            doc = json.load(fh)
    except (OSError, json.JSONDecodeError) as exc:
        raise _Malformed(f"cannot read polygon document: {exc}") from exc
    return CposPolygon.from_json(doc)


class _Malformed(Exception):
    pass


def _emit(obj) -> None:
    sys.stdout.write(canon_json(obj) + "\n")


def _write_svg(path: str, content: str) -> None:
    with open(path, "w", encoding="utf-8") as fh:
        fh.write(content)


_LAYER_COMMANDS = {
    "evolute": "ae",
    "css": "css",
    "equidistant": "equidistant",
    "ess": "ess",
    "pdtransform": "pd",
    "area-parallel": "area_parallel",
    "almost-symmetry": "almost_symmetry",
    "rass": "rass",
    "nchords-map": "nchords_map",
}

_SVG_FEATURES = {
    "evolute": ["ae"],
    "css": ["ae", "css"],
    "equidistant": ["ae", "css", "equidistant"],
    "ess": ["ae", "css", "ess"],
    "pdtransform": ["ae", "pd", "n_points"],
    "area-parallel": ["ae", "area_parallel"],
    "almost-symmetry": ["ae", "almost_symmetry"],
    "rass": ["ae", "rass"],
    "nchords-map": ["nchords_map"],
}


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="cpos", description=__doc__)
    sub = ap.add_subparsers(dest="command", required=True)

    def add(name, **flags):
        sp = sub.add_parser(name)
        sp.add_argument("file")
        for flag, kw in flags.items():
            sp.add_argument(flag, **kw)
        return sp

    add("validate")
    add("evolute", **{"--svg": dict(default=None)})
    add("css", **{"--svg": dict(default=None)})
    add("nchords", **{"--at": dict(required=True)})
    add("nchords-map", **{"--svg": dict(default=None)})
    add("equidistant", **{"--t": dict(required=True), "--svg": dict(default=None)})
    add("ess", **{"--svg": dict(default=None)})
    add("pdtransform", **{"--mu": dict(default=None), "--auto": dict(action="store_true")})
    add("area-parallel", **{"--level": dict(required=True), "--svg": dict(default=None)})
    add("almost-symmetry")
    add("rass", **{"--svg": dict(default=None)})
    add("check")
    add("svg", **{"--out": dict(required=True),
                  "--features": dict(default="ae,css"),
                  "--t": dict(default=None),
                  "--level": dict(default=None),
                  "--mu": dict(default=None)})
    serve = sub.add_parser("serve")
    serve.add_argument("--port", type=int, default=None)
    serve.add_argument("--host", default="127.0.0.1")
    return ap


def _params_from_args(args) -> dict:
    params = {}
    for key in ("t", "level", "mu"):
        val = getattr(args, key, None)
        if val is not None:
            params[key] = val
    if getattr(args, "auto", False):
        params["mu"] = "auto"
    if getattr(args, "at", None) is not None:
        try:
            x, y = args.at.split(",")
        except ValueError as exc:
            raise _Malformed("--at expects x,y") from exc
        params["at"] = Vec.of(x, y)
    return params


_VALUE_FLAGS = {"--at", "--t", "--level", "--mu", "--svg", "--out", "--features",
                "--port", "--host"}


def _join_flag_values(argv: list[str]) -> list[str]:
    """Fold '--at -3/8,1' into '--at=-3/8,1' so negative rationals parse."""
    out: list[str] = []
    i = 0
    while i < len(argv):
        if argv[i] in _VALUE_FLAGS and i + 1 < len(argv):
            out.append(f"{argv[i]}={argv[i + 1]}")
            i += 2
        else:
            out.append(argv[i])
            i += 1
    return out


def run_cli(argv=None) -> int:
    if argv is None:
        argv = sys.argv[1:]
    args = build_parser().parse_args(_join_flag_values(list(argv)))
    if args.command == "serve":
        import uvicorn

        from .service import app

        port = args.port or int(os.environ.get("CPOS_PORT", "8437"))
        uvicorn.run(app, host=args.host, port=port)
        return 0
    try:
        p = _load_polygon(args.file)
    except _Malformed as exc:
        sys.stderr.write(f"{exc}\n")
        return 2
    except ValidationError as exc:
        _emit({"valid": False, **exc.to_json()})
        return 1
    except CposError as exc:
        sys.stderr.write(f"{exc.message}\n")
        return 2
    try:
        params = _params_from_args(args)
        if args.command == "validate":
            _emit({"valid": True, "n": p.n})
            return 0
        if args.command == "check":
            report = run_checks(p)
            _emit(report)
            return 0 if report["ok"] else 1
        if args.command == "nchords":
            layer = build_layer(p, "nchords", params)
            sys.stdout.write(f'{layer["n"]}\n')
            return 0
        if args.command == "svg":
            features = [f.strip() for f in args.features.split(",") if f.strip()]
            _write_svg(args.out, svg_scene(p, features, params))
            _emit({"svg": args.out, "features": features})
            return 0
        feature = _LAYER_COMMANDS[args.command]
        layer = build_layer(p, feature, params)
        _emit(layer)
        svg_path = getattr(args, "svg", None)
        if svg_path:
            _write_svg(svg_path, svg_scene(p, _SVG_FEATURES[args.command], params))
        return 0
    except _Malformed as exc:
        sys.stderr.write(f"{exc}\n")
        return 2
    except CposError as exc:
        _emit(exc.to_json())
        return 1


def main() -> None:
    raise SystemExit(run_cli())


if __name__ == "__main__":
    main()
