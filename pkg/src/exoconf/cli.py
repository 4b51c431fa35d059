"""
Command-line front end.

    exoconf series    --set SET --space SPACE --bound 4
    exoconf hd-series --set SET --space SPACE --bound 4
    exoconf factorize --set SET --bound 4,4
    exoconf check     --max-points 4 --bound 3

SET and SPACE are JSON objects given inline or as ``@path/to/file.json``.
Exit status: 0 ok, 1 oracle mismatch, 2 malformed input, 3 invalid input.
"""

import argparse
import json
import sys

from . import exotic, spaces
from .exotic import ValidationError, c_series
from .oracle import enumerate_collections, mismatches
from .power import factorize, stratum_count
from .serialize import coefficient_text, factorization_to_json, series_to_json
from .series import SeriesError, box, series_int_pow

EXIT_OK = 0
EXIT_MISMATCH = 1
EXIT_MALFORMED = 2
EXIT_INVALID = 3


class MalformedInput(Exception):
    pass


def load_json_arg(text):
    if text.startswith("@"):
        try:
            with open(text[1:]) as fh:
                text = fh.read()
        except OSError as exc:
            raise MalformedInput(f"cannot read {text[1:]}: {exc}") from exc
    try:
        return json.loads(text)
    except json.JSONDecodeError as exc:
        raise MalformedInput(f"invalid JSON: {exc}") from exc


def parse_bound(text, r):
    try:
        parts = [int(x) for x in text.replace(" ", "").split(",")]
    except ValueError as exc:
        raise MalformedInput(f"bound must be comma-separated integers, got {text!r}") from exc
    if len(parts) == 1:
        parts = parts * r
    if len(parts) != r:
        raise ValidationError(f"bound {text!r} has {len(parts)} entries but the set has {r} colors")
    if any(b < 0 for b in parts):
        raise ValidationError("bound entries must be nonnegative")
    return tuple(parts)


def dump(doc):
    return json.dumps(doc, sort_keys=True, indent=2)


def table(headers, rows):
    cols = [list(map(str, col)) for col in zip(headers, *rows)]
    widths = [max(len(x) for x in col) for col in cols]
    lines = ["  ".join(h.ljust(w) for h, w in zip(headers, widths)).rstrip()]
    lines.append("  ".join("-" * w for w in widths))
    for row in rows:
        lines.append("  ".join(str(x).rjust(w) if isinstance(x, int) else str(x).ljust(w)
                               for x, w in zip(row, widths)).rstrip())
    return "\n".join(lines)


def _index_text(k):
    return ",".join(map(str, k))


def _series_table(f):
    rows = [(_index_text(k), coefficient_text(f[k])) for k in box(f.bound)]
    return table(["k", "coefficient"], rows)


def cmd_series(args, hd=False):
    I = exotic.from_json(load_json_arg(args.set))
    space = spaces.from_json(load_json_arg(args.space))
    bound = parse_bound(args.bound, I.r)
    if hd:
        f = spaces.uconf_hd_series(I, space, bound)
    else:
        f = spaces.uconf_euler_series(I, space, bound)
    doc = {
        "command": "hd-series" if hd else "series",
        "set": I.to_json(),
        "space": space.to_json(),
        "series": series_to_json(f),
    }
    return EXIT_OK, doc, _series_table(f)


def cmd_factorize(args):
    I = exotic.from_json(load_json_arg(args.set))
    bound = parse_bound(args.bound, I.r)
    fac = factorize(c_series(I, bound))
    doc = {
        "command": "factorize",
        "set": I.to_json(),
        "factorization": factorization_to_json(fac),
    }
    text = table(["m", "s"], [(_index_text(m), s) for m, s in fac.items()])
    return EXIT_OK, doc, text


def run_check(max_points, bound_text, max_r=2):
    """Compare the counting census with ``C_I ** n`` over the standard grid."""
    bad = []
    rows = []
    cases = 0
    for name, I in exotic.standard_sets(max_r=max_r):
        bound = parse_bound(bound_text, I.r)
        base = c_series(I, bound)
        a = {k: c for k, c in base.items() if any(k)}
        for n in range(max_points + 1):
            cases += 1
            census = enumerate_collections(n, I, bound)
            series = series_int_pow(base, n)
            wrong = mismatches(census, series)
            for k in wrong:
                bad.append({"set": name, "n": n, "k": list(k), "source": "series",
                            "census": str(census[k]), "expected": str(series[k])})
            strat_wrong = 0
            if I.r == 1:
                for k in box(bound):
                    expected = stratum_count(n, a, k)
                    if census[k] != expected:
                        strat_wrong += 1
                        bad.append({"set": name, "n": n, "k": list(k), "source": "stratum",
                                    "census": str(census[k]), "expected": str(expected)})
            ok = not wrong and not strat_wrong
            rows.append((name, n, "ok" if ok else f"FAIL ({len(wrong) + strat_wrong})"))
    return cases, bad, rows


def cmd_check(args):
    if args.max_points < 0:
        raise ValidationError("--max-points must be nonnegative")
    cases, bad, rows = run_check(args.max_points, args.bound, args.max_r)
    doc = {
        "command": "check",
        "max_points": args.max_points,
        "bound": args.bound,
        "cases": cases,
        "mismatches": bad,
    }
    text = table(["set", "n", "status"], rows)
    return (EXIT_MISMATCH if bad else EXIT_OK), doc, text


def build_parser():
    parser = argparse.ArgumentParser(
        prog="exoconf",
        description="Generating series of invariants of exotic unordered configuration spaces.")
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p, space=True):
        p.add_argument("--set", required=True, help="color-count set JSON (or @file)")
        if space:
            p.add_argument("--space", required=True, help="space JSON (or @file)")
        p.add_argument("--bound", required=True, help="degree bound, e.g. 4 or 4,4")
        p.add_argument("--output", choices=["json", "table"], default="json")

    common(sub.add_parser("series", help="Euler characteristic series"))
    common(sub.add_parser("hd-series", help="Hodge-Deligne polynomial series"))
    common(sub.add_parser("factorize", help="exponents of C_I as a product of (1-t^m)"),
           space=False)
    p = sub.add_parser("check", help="compare series against brute-force counting")
    p.add_argument("--max-points", type=int, default=4)
    p.add_argument("--bound", default="3")
    p.add_argument("--max-r", type=int, default=2, help="largest number of colors in the grid")
    p.add_argument("--output", choices=["json", "table"], default="json")
    return parser


def run(argv=None, stdout=None, stderr=None):
    stdout = stdout or sys.stdout
    stderr = stderr or sys.stderr
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else EXIT_MALFORMED
    handlers = {
        "series": lambda a: cmd_series(a),
        "hd-series": lambda a: cmd_series(a, hd=True),
        "factorize": cmd_factorize,
        "check": cmd_check,
    }
    try:
        status, doc, text = handlers[args.command](args)
    except MalformedInput as exc:
        print(f"error: {exc}", file=stderr)
        return EXIT_MALFORMED
    except (ValidationError, SeriesError) as exc:
        print(f"error: {exc}", file=stderr)
        return EXIT_INVALID
    print(dump(doc) if args.output == "json" else text, file=stdout)
    return status


def main():
    sys.exit(run())


if __name__ == "__main__":
    main()
