"""``cobweb`` command line tool.

Numerals on the command line use the digit-string form ``(c_m ... c_0)_F``.
Output goes to stdout only after a command has fully succeeded; diagnostics
go to stderr. Exit status is 2 for invalid input and 3 when a value cannot
be represented or a search limit is hit.
"""

from __future__ import annotations

import argparse
import itertools
import json
import sys
from dataclasses import dataclass

from . import cobweb, fbase, sequences, tiling
from .errors import CobwebError, NonDivisible, NonRepresentable, SearchLimitExceeded

EXIT_INVALID = 2
EXIT_LIMIT = 3


@dataclass
class CliConfig:
    sequence: sequences.FSequence
    origin: int = 1
    fmt: str = "text"
    limit: int = tiling.DEFAULT_POINT_LIMIT
    count_only: bool = False
    intervals_only: bool = False


class CliError(Exception):
    def __init__(self, message, code=EXIT_INVALID):
        super().__init__(message)
        self.code = code


def _config(args) -> CliConfig:
    try:
        seq = sequences.parse_sequence(args.sequence)
    except (ValueError, OSError) as exc:
        raise CliError(f"bad --sequence: {exc}") from None
    if args.origin < 1:
        raise CliError("--origin must be >= 1")
    if args.limit < 0:
        raise CliError("--limit must be >= 0")
    return CliConfig(seq, args.origin, args.format, args.limit, args.count_only, args.intervals_only)


def _inputs(items):
    if items:
        return list(items)
    return [line.strip() for line in sys.stdin if line.strip()]


def _int(text: str, what: str = "value") -> int:
    try:
        v = int(text)
    except ValueError:
        raise CliError(f"{what} must be a non-negative integer, got {text!r}") from None
    if v < 0:
        raise CliError(f"{what} must be a non-negative integer, got {text!r}")
    return v


def _numeral_out(x: fbase.FBaseNumeral, cfg: CliConfig) -> str:
    if cfg.fmt == "json":
        return json.dumps(fbase.numeral_to_json(x))
    return fbase.format_numeral(x)


def _parse(text: str, cfg: CliConfig) -> fbase.FBaseNumeral:
    return fbase.parse_numeral(text, cfg.sequence, cfg.origin)


def cmd_encode(args, cfg):
    return [_numeral_out(fbase.encode(_int(v), cfg.sequence, cfg.origin), cfg) for v in _inputs(args.values)]


def cmd_decode(args, cfg):
    out = []
    for text in _inputs(args.numerals):
        x = _parse(text, cfg)
        v = fbase.decode(x)
        out.append(json.dumps({"value": v, "numeral": fbase.numeral_to_json(x)}) if cfg.fmt == "json" else str(v))
    return out


def cmd_add(args, cfg):
    return [_numeral_out(fbase.add(_parse(args.a, cfg), _parse(args.b, cfg)), cfg)]


def cmd_succ(args, cfg):
    return [_numeral_out(fbase.successor(_parse(t, cfg)), cfg) for t in _inputs(args.numerals)]


def cmd_zeckendorf(args, cfg):
    out = []
    for v in _inputs(args.values):
        alpha = _int(v)
        terms = fbase.zeckendorf_terms(alpha)
        if cfg.fmt == "json":
            out.append(json.dumps({"value": alpha, "terms": terms, "digits_lsb": fbase.zeckendorf(alpha)}))
        else:
            out.append("+".join(map(str, terms)) or "0")
    return out


def cmd_fnomial(args, cfg):
    n, k = _int(args.n, "n"), _int(args.k, "k")
    q = sequences.fnomial(cfg.sequence, n, k)
    if cfg.fmt == "json":
        return [json.dumps({"n": n, "k": k, "numerator": q.numerator, "denominator": q.denominator,
                            "integral": q.denominator == 1})]
    return [str(q)]


def cmd_admissible(args, cfg):
    ok, witness = sequences.is_admissible(cfg.sequence, _int(args.n_max, "n_max"))
    if cfg.fmt == "json":
        return [json.dumps({"admissible": ok, "witness": list(witness) if witness else None})]
    return ["true"] if ok else [f"false {witness[0]} {witness[1]}"]


def cmd_hasse(args, cfg):
    g = cobweb.build_hasse(cfg.sequence, _int(args.n, "n"))
    if cfg.fmt == "dot":
        return [g.to_dot().rstrip("\n")]
    if cfg.fmt == "json":
        return [json.dumps(g.to_json())]
    if cfg.fmt == "svg":
        from .plotting import figure_to_svg, hasse_figure, save_figure

        fig = hasse_figure(g)
        if args.output:
            return [], lambda: _report_saved(save_figure(fig, args.output))
        return [figure_to_svg(fig).rstrip("\n")]
    return [f"levels {' '.join(map(str, g.widths))}", f"vertices {sum(g.widths)}", f"arcs {g.arc_count}"]


def _box(args, cfg) -> cobweb.HyperBox:
    k, n = _int(args.k, "k"), _int(args.n, "n")
    try:
        return cobweb.HyperBox(cfg.sequence, k, n)
    except ValueError as exc:
        raise CliError(str(exc)) from None


def _point(p) -> str:
    return "(" + ",".join(map(str, p)) + ")"


def cmd_chains(args, cfg):
    box = _box(args, cfg)
    count = cobweb.count_max_chains(box)
    if cfg.count_only:
        return [str(count)]
    if count > args.max_points:
        raise CliError(f"box has {count} points, above --max-points {args.max_points}; use --count-only", EXIT_LIMIT)
    pts = list(cobweb.enumerate_max_chains(box))
    if cfg.fmt == "json":
        return [json.dumps({"box": box.descriptor(), "count": count, "points": [list(p) for p in pts]})]
    return [_point(p) for p in pts]


def cmd_tilings(args, cfg):
    box = _box(args, cfg)
    kw = dict(limit=cfg.limit, intervals_only=cfg.intervals_only)
    if cfg.count_only:
        return [str(tiling.count_tilings(box, **kw))]
    found = list(tiling.enumerate_tilings(box, **kw))
    if cfg.fmt == "json":
        lines = [json.dumps({"box": box.descriptor(), "count": len(found),
                             "tilings": [tiling.tiling_to_json(t)["tiles"] for t in found]})]
    else:
        lines = [f"count {len(found)}"]
        for i, t in enumerate(found):
            lines.append(f"# tiling {i}")
            if box.dims <= 2:
                lines.append(tiling.render_text_grid(t).rstrip("\n"))
            else:
                lines.append(json.dumps(tiling.tiling_to_json(t)["tiles"]))
    if args.render == "svg":
        if not found:
            raise CliError("no tilings to render", EXIT_INVALID)
        from .plotting import save_figure, tiling_figure, tilings_figure

        shown = found[: args.max_figures]
        fig = tilings_figure(shown) if box.dims <= 2 else tiling_figure(shown[0])
        path = args.output or "tilings.svg"
        return lines, lambda: _report_saved(save_figure(fig, path))
    return lines


def _report_saved(path):
    print(f"wrote {path}", file=sys.stderr)


def cmd_check(args, cfg):
    """Check the numeral-system properties for the configured sequence and origin."""
    F, k, bound = cfg.sequence, cfg.origin, _int(args.bound, "bound")
    lines = []

    ok = all(fbase.decode(fbase.max_prefix_numeral(F, k, m)) + 1 == sequences.rising_factorial(F, k, m)
             for m in range(1, args.max_m + 1))
    lines.append(f"{'PASS' if ok else 'FAIL'} max-digits numeral is one below the next place value (m <= {args.max_m})")

    nums = [fbase.encode(a, F, k) for a in range(bound)]
    ok = all(fbase.decode(x) == a for a, x in enumerate(nums))
    lines.append(f"{'PASS' if ok else 'FAIL'} decode(encode(a)) == a for a < {bound}")
    ok = all(fbase.successor(nums[a]) == nums[a + 1] for a in range(bound - 1))
    lines.append(f"{'PASS' if ok else 'FAIL'} successor agrees with encode(a + 1) for a < {bound - 1}")
    ok = all(fbase.compare_lexV(nums[a], nums[a + 1]) == fbase.LT for a in range(bound - 1))
    lines.append(f"{'PASS' if ok else 'FAIL'} digit order is increasing along 0..{bound - 1}")

    box = cobweb.HyperBox(F, k, k + args.positions - 1)
    if box.size <= 10**6:
        values = [fbase.decode_digits(p, F, k) for p in box.points()]
        ok = len(set(values)) == len(values)
        lines.append(f"{'PASS' if ok else 'FAIL'} decode is injective on {box.size} points of V[{k},{box.end}]")
    return lines


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--sequence", default="fibonacci",
                        help="natural | fibonacci | const:<p> | gauss:<q> | file:<path> | list:<v0,v1,...> (default: fibonacci)")
    common.add_argument("--origin", type=int, default=1, help="origin index k >= 1 (default: 1)")
    common.add_argument("--format", choices=["text", "json", "dot", "svg"], default="text")
    common.add_argument("--count-only", action="store_true")
    common.add_argument("--limit", type=int, default=tiling.DEFAULT_POINT_LIMIT,
                        help="largest box (in points) the tiling search accepts")
    common.add_argument("--intervals-only", action="store_true",
                        help="restrict tiles to products of contiguous intervals")

    parser = argparse.ArgumentParser(prog="cobweb", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    def add(name, func, help_):
        p = sub.add_parser(name, parents=[common], help=help_)
        p.set_defaults(func=func)
        return p

    p = add("encode", cmd_encode, "natural number(s) to base-F digit strings")
    p.add_argument("values", nargs="*", help="integers; read from stdin when omitted")
    p = add("decode", cmd_decode, "base-F digit strings to natural numbers")
    p.add_argument("numerals", nargs="*", help="digit strings; read from stdin when omitted")
    p = add("add", cmd_add, "sum of two numerals")
    p.add_argument("a")
    p.add_argument("b")
    p = add("succ", cmd_succ, "successor of numeral(s)")
    p.add_argument("numerals", nargs="*")
    p = add("zeckendorf", cmd_zeckendorf, "Zeckendorf sum(s) of non-consecutive Fibonacci numbers")
    p.add_argument("values", nargs="*")
    p = add("fnomial", cmd_fnomial, "exact F-nomial coefficient n over k")
    p.add_argument("n")
    p.add_argument("k")
    p = add("admissible", cmd_admissible, "integrality of all F-nomials up to n_max")
    p.add_argument("n_max")
    p = add("hasse", cmd_hasse, "Hasse digraph of the cobweb poset P_n")
    p.add_argument("n")
    p.add_argument("--output", "-o", help="write the svg/png figure here instead of stdout")
    p = add("chains", cmd_chains, "maximal chains of layer k..n, i.e. points of V[k,n]")
    p.add_argument("k")
    p.add_argument("n")
    p.add_argument("--max-points", type=int, default=100_000)
    p = add("tilings", cmd_tilings, "all cobweb tilings of V[k,n]")
    p.add_argument("k")
    p.add_argument("n")
    p.add_argument("--render", choices=["text", "svg"], default="text",
                   help="svg also writes a figure file (see --output)")
    p.add_argument("--output", "-o", help="figure path for --render svg (default: tilings.svg)")
    p.add_argument("--max-figures", type=int, default=24, help="tilings drawn in the figure")
    p = add("check", cmd_check, "check numeral-system properties for one sequence")
    p.add_argument("--bound", default="2000")
    p.add_argument("--max-m", type=int, default=8)
    p.add_argument("--positions", type=int, default=6)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        cfg = _config(args)
        result = args.func(args, cfg)
        lines, after = result if isinstance(result, tuple) else (result, None)
        if after is not None:
            after()
    except CliError as exc:
        print(f"cobweb: error: {exc}", file=sys.stderr)
        return exc.code
    except (NonRepresentable, SearchLimitExceeded, NonDivisible) as exc:
        print(f"cobweb: error: {exc}", file=sys.stderr)
        return EXIT_LIMIT
    except (CobwebError, ValueError, OSError) as exc:
        print(f"cobweb: error: {exc}", file=sys.stderr)
        return EXIT_INVALID
    if lines:
        sys.stdout.write("\n".join(lines) + "\n")
    return 0


if __name__ == "__main__":
    sys.exit(main())
