"""Command line: ``dweights compute|verify|layers|table``.

Exit codes: 0 success, 1 verification mismatch, 2 usage or input error.
"""

from __future__ import annotations

import argparse
import json
import sys

from . import records
from .grading import OrbitSpec, dynkin_weights, height_layers, valid_specs
from .roots import MIN_RANK, Root, root_system
from .verify import verify_grid, verify_orbit

EXIT_OK, EXIT_MISMATCH, EXIT_USAGE = 0, 1, 2


class UsageError(Exception):
    pass


def _spec(args):
    try:
        return OrbitSpec(args.r, args.k)
    except ValueError as e:
        raise UsageError(str(e)) from None


def _r_max(args):
    if args.r_max < MIN_RANK:
        raise UsageError(f"require --r-max >= {MIN_RANK} (smallest rank of type D), got {args.r_max}")
    return args.r_max


def _open_out(path):
    try:
        return open(path, "w", newline="")
    except OSError as e:
        raise UsageError(f"cannot write {path}: {e.strerror}") from None


def _render(recs, fmt, out):
    if fmt == "csv":
        out.write(records.csv_header())
    for i, rec in enumerate(recs):
        if fmt == "json":
            out.write(records.to_json(rec) + "\n")
        elif fmt == "csv":
            out.write(records.to_csv_row(rec))
        else:
            if i:
                out.write("\n")
            out.write(records.to_text(rec) + "\n")
        out.flush()


def cmd_compute(args, out):
    spec = _spec(args)
    checks = verify_orbit(spec).checks if args.check else None
    _render([records.build_record(spec, checks)], args.format, out)
    return EXIT_OK


def cmd_table(args, out):
    r_max = _r_max(args)
    recs = (records.build_record(spec) for spec in valid_specs(r_max))
    if args.out:
        with _open_out(args.out) as f:
            _render(recs, args.format, f)
    else:
        _render(recs, args.format, out)
    return EXIT_OK


def cmd_verify(args, out):
    r_max = _r_max(args)
    sink = _open_out(args.out) if args.out else None
    try:
        def emit(report):
            if sink is not None:
                sink.write(json.dumps(report.to_dict(), separators=(",", ":")) + "\n")
        summary = verify_grid(r_max, emit=emit)
    finally:
        if sink is not None:
            sink.close()
    for line in summary.lines():
        out.write(line + "\n")
    return EXIT_OK if summary.ok else EXIT_MISMATCH


def layer_listing(spec):
    """Rows of (height, coefficient vector, divisible by alpha_r) in listing order."""
    system = root_system(spec.r)
    a_r = Root.simple(spec.r, spec.r)
    layers = height_layers(spec)
    for i in range(0, layers.max_height + 1):
        for beta in layers.layer(i):
            yield i, beta, system.divides(a_r, beta)


def cmd_layers(args, out):
    spec = _spec(args)
    rows = list(layer_listing(spec))
    if args.format == "json":
        out.write(json.dumps({
            "type": "D", "r": spec.r, "k": spec.k,
            "dynkin_weights": list(dynkin_weights(spec).weights),
            "layers": [{"height": i, "root": list(beta.coeffs), "divisible_by_alpha_r": d}
                       for i, beta, d in rows],
        }) + "\n")
        return EXIT_OK
    out.write(f"{spec}  weights {dynkin_weights(spec)}\n")
    current = None
    for i, beta, d in rows:
        if i != current:
            size = len(height_layers(spec).layer(i))
            out.write(f"height {i} ({size} root{'s' if size != 1 else ''})\n")
            current = i
        vec = "(" + ",".join(map(str, beta.coeffs)) + ")"
        mark = f"  a{spec.r}|" if d else ""
        out.write(f"  {vec}  {beta}{mark}\n")
    return EXIT_OK


def build_parser():
    p = argparse.ArgumentParser(
        prog="dweights",
        description="Height and weight partitions of the semiregular orbits D_r(a_k).")
    sub = p.add_subparsers(dest="command", required=True)

    c = sub.add_parser("compute", help="partitions of one orbit")
    c.add_argument("--r", type=int, required=True)
    c.add_argument("--k", type=int, required=True)
    c.add_argument("--format", choices=records.FORMATS, default="text")
    c.add_argument("--check", action="store_true", help="also run the verification checks")
    c.set_defaults(func=cmd_compute)

    v = sub.add_parser("verify", help="check closed forms against root enumeration")
    v.add_argument("--r-max", type=int, default=40)
    v.add_argument("--out", metavar="PATH", help="write one JSON report per orbit to PATH")
    v.set_defaults(func=cmd_verify)

    lay = sub.add_parser("layers", help="list the roots in each height layer")
    lay.add_argument("--r", type=int, required=True)
    lay.add_argument("--k", type=int, required=True)
    lay.add_argument("--format", choices=("text", "json"), default="text")
    lay.set_defaults(func=cmd_layers)

    t = sub.add_parser("table", help="records for every orbit up to a rank")
    t.add_argument("--r-max", type=int, required=True)
    t.add_argument("--format", choices=records.FORMATS, default="csv")
    t.add_argument("--out", metavar="PATH")
    t.set_defaults(func=cmd_table)
    return p


def main(argv=None, out=None):
    out = out if out is not None else sys.stdout
    args = build_parser().parse_args(argv)
    try:
        return args.func(args, out)
    except UsageError as e:
        print(f"dweights {args.command}: error: {e}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
