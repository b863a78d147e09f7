"""Console entry point.

Angles are degrees here and radians everywhere else.  Subcommands: render a
still, print a distortion report, render the standard comparison set, emit
viewer parity vectors, and describe the conventions.  Exit codes: 0 success,
2 usage error (argparse), 1 processing error.
"""

from __future__ import annotations

import argparse
import math
import sys
from pathlib import Path

from .distortion import milnor_distortion
from .errors import GeometryError
from .projections import KINDS, ProjectionSpec, spec_from_mapping, spec_to_mapping
from .render import (
    WORKERS_ENV,
    EquirectImage,
    RenderRequest,
    export_test_vectors,
    format_vector_records,
    render,
    write_png,
)
from .sphere import ViewState


def _view_from_args(args, aspect):
    return ViewState(
        yaw=math.radians(args.yaw),
        pitch=math.radians(args.pitch),
        fov=math.radians(args.fov),
        fov_max=math.radians(args.fov_max),
        aspect=aspect,
    )


def _add_view_flags(p):
    p.add_argument("--fov", type=float, required=True, help="azimuthal FOV in degrees")
    p.add_argument("--fov-max", type=float, default=60.0, dest="fov_max",
                   help="shrink threshold in degrees (default 60)")
    p.add_argument("--yaw", type=float, default=0.0, help="view azimuth in degrees")
    p.add_argument("--pitch", type=float, default=0.0, help="view altitude in degrees")
    p.add_argument("--pannini-d", type=float, default=1.0, dest="pannini_d",
                   help="pannini center distance (default 1)")


def cmd_render(args) -> int:
    img = EquirectImage.open(args.input)
    view = _view_from_args(args, args.width / args.height)
    spec = ProjectionSpec(kind=args.projection, view=view, pannini_d=args.pannini_d)
    req = RenderRequest(spec=spec, out_width=args.width, out_height=args.height,
                        filter=args.filter)
    write_png(args.output, render(img, req))
    print(args.output)
    return 0


def cmd_distortion(args) -> int:
    view = _view_from_args(args, 4.0 / 3.0)
    spec = ProjectionSpec(kind=args.projection, view=view, pannini_d=args.pannini_d)
    rep = milnor_distortion(spec, grid_n=args.grid)
    rows = [
        ("kind", spec.kind),
        ("fov_deg", format(args.fov, ".17g")),
        ("grid_n", str(rep.grid_n)),
        ("pair_count", str(rep.pair_count)),
        ("sigma_min", format(rep.sigma_min, ".17g")),
        ("sigma_max", format(rep.sigma_max, ".17g")),
        ("delta", format(rep.delta, ".17g")),
    ]
    if args.machine:
        for k, v in rows:
            print(f"{k}={v}")
    else:
        width = max(len(k) for k, _ in rows)
        for k, v in rows:
            print(f"{k:<{width}}  {v}")
    return 0


# The standard comparison set: one perspective frame, the two conformal
# references, and the shrink pipeline at its default threshold and at a
# milder one.
COMPARE_SET = (
    ("perspective", None),
    ("stereographic", None),
    ("mercator", None),
    ("mobius", 60.0),
    ("mobius", 120.0),
)


def cmd_compare(args) -> int:
    img = EquirectImage.open(args.input)
    outdir = Path(args.output_dir)
    outdir.mkdir(parents=True, exist_ok=True)
    for kind, fov_max in COMPARE_SET:
        view = ViewState(
            yaw=math.radians(args.yaw),
            pitch=math.radians(args.pitch),
            fov=math.radians(args.fov),
            fov_max=math.radians(fov_max if fov_max is not None else 60.0),
            aspect=args.width / args.height,
        )
        spec = ProjectionSpec(kind=kind, view=view)
        req = RenderRequest(spec=spec, out_width=args.width, out_height=args.height)
        name = kind if fov_max is None else f"{kind}_fovmax{fov_max:g}"
        path = outdir / f"{name}.png"
        write_png(path, render(img, req))
        print(path)
    return 0


def cmd_vectors(args) -> int:
    kv = {}
    for token in args.spec.replace(",", " ").split():
        if "=" not in token:
            raise GeometryError(f"spec token {token!r} is not key=value")
        k, v = token.split("=", 1)
        kv[k] = v
    spec = spec_from_mapping(kv)
    dirs, plane = export_test_vectors(spec, args.n)
    text = format_vector_records(spec, dirs, plane)
    Path(args.output).write_text(text)
    print(args.output)
    return 0


def cmd_info(args) -> int:
    print("panomobius: wide-angle panorama projection via a Mobius shrink")
    print()
    print("conventions:")
    print("  world frame      y up, view axis -z at yaw=pitch=0")
    print("  azimuth          grows to the right, radians internally, degrees here")
    print("  equirect pixels  row 0 = north edge, azimuth wraps, altitude clamps")
    print("  plane frame      FOV edge at |u| = 1, v spans 1/aspect")
    print("  shrink factor    rho = min(1, fov_max/fov); rho = 1 is plain perspective")
    print()
    print("defaults:")
    print("  fov_max 60 deg, output 1024x768, bilinear filter, pannini d 1")
    print(f"  projections: {', '.join(KINDS)}")
    print(f"  worker override: {WORKERS_ENV}")
    print()
    print("spec keys (vectors --spec, serialized records):")
    example = ProjectionSpec(kind="mobius", view=ViewState(fov=math.radians(172.0)))
    print("  " + " ".join(f"{k}={v}" for k, v in spec_to_mapping(example).items()))
    return 0


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(
        prog="panomobius",
        description="Render and analyze wide-angle panorama projections.",
    )
    sub = p.add_subparsers(dest="command", required=True)

    r = sub.add_parser("render", help="render one projection to a PNG")
    r.add_argument("--input", required=True, help="equirectangular PNG or JPEG")
    r.add_argument("--projection", required=True, choices=KINDS)
    _add_view_flags(r)
    r.add_argument("--width", type=int, default=1024)
    r.add_argument("--height", type=int, default=768)
    r.add_argument("--filter", choices=("bilinear", "nearest"), default="bilinear")
    r.add_argument("--output", required=True, help="output PNG path")
    r.set_defaults(func=cmd_render)

    d = sub.add_parser("distortion", help="print a distortion report")
    d.add_argument("--projection", required=True, choices=KINDS)
    _add_view_flags(d)
    d.add_argument("--grid", type=int, default=50, help="graticule resolution (default 50)")
    d.add_argument("--machine", action="store_true",
                   help="line-delimited key=value output")
    d.set_defaults(func=cmd_distortion)

    c = sub.add_parser("compare", help="render the standard comparison set")
    c.add_argument("--input", required=True)
    c.add_argument("--fov", type=float, required=True)
    c.add_argument("--yaw", type=float, default=0.0)
    c.add_argument("--pitch", type=float, default=0.0)
    c.add_argument("--width", type=int, default=1024)
    c.add_argument("--height", type=int, default=768)
    c.add_argument("--output-dir", required=True, dest="output_dir")
    c.set_defaults(func=cmd_compare)

    v = sub.add_parser("vectors", help="emit deterministic parity vectors")
    v.add_argument("--spec", required=True,
                   help="comma/space separated key=value pairs, e.g. "
                        "'kind=mobius,fov_deg=172,fov_max_deg=60'")
    v.add_argument("--n", type=int, required=True)
    v.add_argument("--output", required=True)
    v.set_defaults(func=cmd_vectors)

    i = sub.add_parser("info", help="print conventions and defaults")
    i.set_defaults(func=cmd_info)
    return p


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except GeometryError as exc:
        print(f"error during {args.command}: {exc}", file=sys.stderr)
        return 1
    except OSError as exc:
        print(f"error during {args.command}: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    raise SystemExit(main())
