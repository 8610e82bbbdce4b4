"""Command-line front end: ``show``, ``check`` and ``ennola``.

Exit status is 0 when every emitted record passes, 1 when any fails and 2
for usage or configuration errors.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys
from typing import Dict, List, Optional, Sequence

from . import families as fam
from .core import BiPoly
from .families import SignConvention
from .textfmt import render
from .verify import (
    CHECK_SELECTORS,
    DEFAULT_SEED,
    SweepConfig,
    check_exceptional_unit,
    sweep,
)

ALL_SELECTORS = (
    "prop2", "integrality", "corollary1", "conj14", "g-closed",
    "conj20", "audit-degrees", "decomposition", "ennola",
)

SHOW_OBJECTS = ("pd", "f", "s", "r", "e", "rm", "fab", "g", "gm")

# fixed CSV / text columns per record type
COLUMNS: Dict[str, List[str]] = {
    "prop2": ["d"],
    "integrality": ["d"],
    "corollary1": ["x1", "x2", "d"],
    "conj14_eq2": ["a", "b"],
    "conj14_eq3": ["a", "b", "convention"],
    "g_closed": ["a", "b", "convention"],
    "conj20": ["a", "b", "m", "case", "convention", "deg", "N", "N_expected", "lc", "expected_lc", "B"],
    "audit_degrees": ["a", "b", "convention", "terms"],
    "decomposition": ["a", "b", "m", "convention"],
    "ennola": ["l", "f_at_1", "f_at_minus_1", "shifted", "note", "min_poly", "shifted_min_poly"],
}


class UsageError(Exception):
    pass


def parse_range(text: str) -> tuple:
    """``"lo..hi"`` or a single integer ``"n"``; inverted ranges are rejected."""
    try:
        if ".." in text:
            lo, hi = (int(p) for p in text.split("..", 1))
        else:
            lo = hi = int(text)
    except ValueError:
        raise UsageError(f"malformed range {text!r}; expected LO..HI or N") from None
    if lo > hi:
        raise UsageError(f"empty range {text!r}")
    return lo, hi


def _conventions(name: str) -> tuple:
    if name == "both":
        return (SignConvention.PLUS, SignConvention.MINUS)
    return (SignConvention(name),)


# ---------------------------------------------------------------------------
# report emission
# ---------------------------------------------------------------------------


def _cell(value) -> str:
    if value is None:
        return ""
    if isinstance(value, bool):
        return "true" if value else "false"
    if isinstance(value, (dict, list)):
        return json.dumps(value, separators=(",", ":"))
    return str(value)


def _row(rec: dict) -> List[str]:
    cols = COLUMNS[rec["check"]]
    flat = dict(rec.get("params", {}))
    flat.update({k: v for k, v in rec.items() if k != "params"})
    return [rec["check"], *(_cell(flat.get(c)) for c in cols), _cell(rec["pass"]), _cell(rec.get("witness"))]


def _header(check: str) -> List[str]:
    return ["check", *COLUMNS[check], "pass", "witness"]


class Emitter:
    def __init__(self, fmt: str, out):
        self.fmt = fmt
        self.out = out
        self.current: Optional[str] = None
        self.block: List[List[str]] = []
        self._csv = csv.writer(out, lineterminator="\n") if fmt == "csv" else None

    def emit(self, rec: dict) -> None:
        if self.fmt == "jsonl":
            self.out.write(json.dumps(rec, separators=(",", ":")) + "\n")
            return
        if rec["check"] != self.current:
            self._flush()
            self.current = rec["check"]
            if self._csv:
                self._csv.writerow(_header(self.current))
            else:
                self.block.append(_header(self.current))
        if self._csv:
            self._csv.writerow(_row(rec))
        else:
            self.block.append(_row(rec))

    def _flush(self) -> None:
        if not self.block:
            return
        widths = [max(len(r[i]) for r in self.block) for i in range(len(self.block[0]))]
        for r in self.block:
            self.out.write("  ".join(c.ljust(w) for c, w in zip(r, widths)).rstrip() + "\n")
        self.out.write("\n")
        self.block = []

    def close(self) -> None:
        self._flush()


# ---------------------------------------------------------------------------
# commands
# ---------------------------------------------------------------------------


def _need(args, *names):
    for n in names:
        if getattr(args, n) is None:
            raise UsageError(f"show {args.object} needs --{n}")


def cmd_show(args, out) -> int:
    if args.convention == "both":
        raise UsageError("show takes a single --convention")
    conv = SignConvention(args.convention)
    obj = args.object
    try:
        if obj == "pd":
            _need(args, "d")
            poly = fam.p_poly(args.d)
        elif obj == "f":
            _need(args, "d")
            poly = fam.newton_f_spec(args.d) if args.spec else fam.newton_f_general(args.d)
        elif obj in ("s", "r", "e", "fab", "g"):
            _need(args, "a", "b")
            poly = {
                "s": lambda: fam.s_poly(args.a, args.b),
                "r": lambda: fam.r_poly(args.a, args.b, conv),
                "e": lambda: fam.e_poly(args.a, args.b),
                "fab": lambda: fam.f_poly(args.a, args.b),
                "g": lambda: fam.g_composed(args.a, args.b, conv) if args.composed else fam.g_closed(args.a, args.b),
            }[obj]()
        else:
            _need(args, "a", "b")
            m = args.m if args.m is not None else args.a**2 + args.a * args.b + args.b**2
            poly = fam.r_m_poly(args.a, args.b, m, conv) if obj == "rm" else fam.g_m_poly(args.a, args.b, m, conv)
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    out.write(render(poly) + "\n")
    return 0


def _config(args, selector: str) -> SweepConfig:
    d_range = parse_range(args.d) if args.d else None
    if args.d_max is not None:
        d_range = (d_range[0] if d_range else 1, args.d_max)
        if d_range[0] > d_range[1]:
            raise UsageError("empty d range")
    a_range = parse_range(args.a) if args.a else None
    b_range = parse_range(args.b) if args.b else None
    if args.max is not None:
        a_range = a_range or (1, args.max)
        b_range = b_range or (1, args.max)
    try:
        return SweepConfig(
            check=selector,
            d_range=d_range,
            a_range=a_range,
            b_range=b_range,
            l_range=parse_range(args.l) if args.l else None,
            conventions=_conventions(args.convention),
            seed=args.seed,
            trials=args.trials,
            jobs=args.jobs,
        )
    except ValueError as exc:
        raise UsageError(str(exc)) from None


def cmd_check(args, out) -> int:
    selectors = ALL_SELECTORS if args.selector == "all" else (args.selector,)
    configs = [_config(args, s) for s in selectors]
    emitter = Emitter(args.format, out)
    ok = True
    for config in configs:
        for report in sweep(config):
            ok &= report.passed
            emitter.emit(report.to_record())
    emitter.close()
    return 0 if ok else 1


def _cubic_text(coeffs: Sequence[int]) -> str:
    deg = len(coeffs) - 1
    return render(BiPoly({(deg - i, 0): c for i, c in enumerate(coeffs)}))


def cmd_ennola(args, out) -> int:
    lo, hi = parse_range(args.l or "3..100")
    emitter = Emitter(args.format, out)
    ok = True
    for l in range(lo, hi + 1):
        report = check_exceptional_unit(l)
        if args.print:
            report.values["min_poly"] = _cubic_text(fam.ennola_min_poly(l))
            report.values["shifted_min_poly"] = _cubic_text(fam.ennola_shifted_min_poly(l))
        ok &= report.passed
        emitter.emit(report.to_record())
    emitter.close()
    return 0 if ok else 1


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=("text", "jsonl", "csv"), default="text")
    common.add_argument("--convention", choices=("plus", "minus", "both"), default="plus")
    common.add_argument("--seed", type=int, default=DEFAULT_SEED)
    common.add_argument("--jobs", type=int, default=1)
    common.add_argument("--out", metavar="FILE")

    parser = argparse.ArgumentParser(
        prog="ennola-check",
        description="Exact construction and verification of the polynomial identities behind the exceptional-unit cubic family.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    show = sub.add_parser("show", parents=[common], help="print a polynomial in canonical form")
    show.add_argument("object", choices=SHOW_OBJECTS)
    show.add_argument("--d", type=int)
    show.add_argument("--a", type=int)
    show.add_argument("--b", type=int)
    show.add_argument("--m", type=int)
    show.add_argument("--spec", action="store_true", help="for f: print f_d(Y, X, 1)")
    show.add_argument("--composed", action="store_true", help="for g: compose F(R(T), R(1/T)) instead of the closed form")
    show.set_defaults(func=cmd_show)

    check = sub.add_parser("check", parents=[common], help="run a family of checks")
    check.add_argument("selector", choices=(*CHECK_SELECTORS, "all"))
    check.add_argument("--d", metavar="LO..HI")
    check.add_argument("--d-max", type=int)
    check.add_argument("--a", metavar="LO..HI")
    check.add_argument("--b", metavar="LO..HI")
    check.add_argument("--max", type=int, help="shorthand for --a 1..N --b 1..N")
    check.add_argument("--l", metavar="LO..HI")
    check.add_argument("--trials", type=int, default=1000)
    check.set_defaults(func=cmd_check)

    ennola = sub.add_parser("ennola", parents=[common], help="exceptional-unit checks over a range of l")
    ennola.add_argument("--l", metavar="LO..HI")
    ennola.add_argument("--print", action="store_true", help="include both minimal polynomials")
    ennola.set_defaults(func=cmd_ennola)
    return parser


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    if args.jobs < 1:
        print("error: --jobs must be positive", file=sys.stderr)
        return 2
    buf = io.StringIO()
    try:
        code = args.func(args, buf)
    except UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    if args.out:
        with open(args.out, "w", encoding="utf-8") as fh:
            fh.write(buf.getvalue())
    else:
        sys.stdout.write(buf.getvalue())
    return code


if __name__ == "__main__":
    sys.exit(main())
