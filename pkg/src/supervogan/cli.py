"""Command-line front end.

Family specs follow the grammar

    spec  ::= NAME "(" int ["," int] [";a=" rational] ")"
    NAME  ::= "A" | "B" | "C" | "D" | "F" | "G"

for example A(2,1), B(0,2), C(3), D(3,2), D(2,1;a=2/1), F(4), G(3).
"""
from __future__ import annotations

import argparse
import sys
from pathlib import Path

from . import double_vogan as dv
from .algebra_catalog import FAMILY_INFO, FamilyId, parse_family
from .dynkin import affine_diagram, finite_diagram
from .errors import ParseError, SuperVoganError
from .render import Collection, from_json, to_dot, to_json, to_text, to_tikz
from .verify import verify_family
from .vogan import enumerate_vogan, summarize, vogan_classes

EXIT_OK = 0
EXIT_USAGE = 1
EXIT_VERIFY = 2
EXIT_PARSE = 3


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message: str):
        raise UsageError(f"{self.prog}: {message}")


def _build_parser() -> argparse.ArgumentParser:
    common = _Parser(add_help=False)
    common.add_argument("--format", choices=("text", "json"), default="text")
    common.add_argument("--out", metavar="PATH", help="write the result here instead of stdout")
    common.add_argument("--permissive", action="store_true", help="allow A(n,n), treated as psl(n|n)")

    fam = _Parser(add_help=False)
    fam.add_argument("family", metavar="FAMILY", help='family spec, e.g. "A(2,1)" or "D(2,1;a=2/1)"')

    p = _Parser(
        prog="supervogan",
        description="Dynkin, Vogan and double Vogan superdiagrams.",
        epilog=__doc__.split("\n", 2)[2],
        formatter_class=argparse.RawDescriptionHelpFormatter,
    )
    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)
    sub.add_parser("families", parents=[common], help="list supported families and parameter rules")
    sub.add_parser("diagram", parents=[common, fam], help="finite Dynkin diagram")
    sub.add_parser("affine", parents=[common, fam], help="affine diagram with marks")

    v = sub.add_parser("vogan", parents=[common, fam], help="Vogan superdiagrams")
    v.add_argument("--canonical", action="store_true", help="one canonical representative per class")
    v.add_argument("--ignore-circlings", action="store_true")

    d = sub.add_parser("double", parents=[common, fam], help="double Vogan superdiagrams")
    d.add_argument("--almost", action="store_true", help="skip the mark-parity filter")
    d.add_argument("--r", type=int, choices=(1, 2), default=1)

    c = sub.add_parser("classify", parents=[common, fam], help="symmetric superpair table")
    c.add_argument("--r", type=int, choices=(1, 2), default=1)
    c.add_argument("--ignore-circlings", action="store_true")

    sub.add_parser("verify", parents=[common, fam], help="run every consistency check")

    r = sub.add_parser("render", parents=[common], help="re-render a JSON document")
    r.add_argument("--in", dest="infile", required=True, metavar="FILE")
    r.add_argument("--to", choices=("text", "dot", "tikz", "json"), default="text")
    return p


def _family(args) -> FamilyId:
    try:
        return parse_family(args.family, permissive=args.permissive)
    except SuperVoganError as e:
        raise UsageError(str(e)) from None


def _emit(obj, fmt: str) -> str:
    if fmt == "json":
        return to_json(obj)
    if fmt == "dot":
        return to_dot(obj)
    if fmt == "tikz":
        return to_tikz(obj)
    return to_text(obj).rstrip("\n") + "\n"


def _compute(args):
    """Return (object, exit code)."""
    cmd = args.command
    if cmd == "families":
        return Collection("families", FAMILY_INFO), EXIT_OK
    if cmd == "render":
        try:
            text = Path(args.infile).read_text(encoding="utf-8")
        except OSError as e:
            raise UsageError(f"cannot read {args.infile}: {e.strerror}") from None
        return from_json(text), EXIT_OK
    f = _family(args)
    if cmd == "diagram":
        return finite_diagram(f), EXIT_OK
    if cmd == "affine":
        return affine_diagram(f), EXIT_OK
    if cmd == "vogan":
        d = finite_diagram(f)
        if args.canonical:
            classes = summarize(vogan_classes(d, ignore_circlings=args.ignore_circlings))
            return Collection(f"vogan classes {f}", tuple(classes)), EXIT_OK
        return Collection(f"vogan superdiagrams {f}", tuple(enumerate_vogan(d))), EXIT_OK
    if cmd == "double":
        ad = affine_diagram(f)
        if args.almost:
            return Collection(f"almost-double {f}", tuple(dv.enumerate_almost_double(ad))), EXIT_OK
        return Collection(f"double {f} r={args.r}", tuple(dv.enumerate_double(ad, r=args.r))), EXIT_OK
    if cmd == "classify":
        return dv.enumerate_pairs(f, r=args.r, ignore_circlings=args.ignore_circlings), EXIT_OK
    if cmd == "verify":
        report = verify_family(f)
        return report, EXIT_OK if report.ok else EXIT_VERIFY
    raise UsageError(f"unknown command {cmd!r}")


def run(argv: list[str] | None = None, stdout=None, stderr=None) -> int:
    stdout = stdout if stdout is not None else sys.stdout
    stderr = stderr if stderr is not None else sys.stderr
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
        obj, code = _compute(args)
        fmt = args.to if args.command == "render" else args.format
        try:
            out = _emit(obj, fmt)
        except TypeError as e:
            raise UsageError(str(e)) from None
    except UsageError as e:
        print(e, file=stderr)
        return EXIT_USAGE
    except ParseError as e:
        print(f"parse error: {e}", file=stderr)
        return EXIT_PARSE
    except SuperVoganError as e:
        print(f"error: {e}", file=stderr)
        return EXIT_USAGE
    except SystemExit as e:
        # --help exits through argparse
        return int(e.code or 0)
    if args.out:
        Path(args.out).write_text(out, encoding="utf-8")
    else:
        stdout.write(out)
    if code == EXIT_VERIFY:
        print("verification failed", file=stderr)
    return code


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
