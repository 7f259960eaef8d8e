"""Command-line front end.

Exit status: 0 on success, 1 on a negative answer (not isomorphic, not
divisible, invalid presentation, ...), 2 on usage or parse errors.
"""

from __future__ import annotations

import argparse
import io
import json
import sys
from typing import List, Optional, Sequence

from .expr import ParseError, parse_expr, parse_scalar
from .iso import IsoError, automorphism, build_iso, decide_iso, format_eps, parse_eps, verify_hom
from .linalg import divide_by_z
from .pbw import nf
from .presentation import AlgebraParams, ValidationError, genericity_rank, parse_spec, validate
from .scalars import ScalarError


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(f"{self.format_usage()}{self.prog}: error: {message}")


def _read(path: str) -> str:
    try:
        with open(path, encoding="utf-8") as fh:
            return fh.read()
    except OSError as e:
        raise UsageError(f"cannot read {path}: {e.strerror}") from None


def _load(path: str, check: bool = True) -> AlgebraParams:
    try:
        return parse_spec(_read(path), check=check)
    except ParseError as e:
        raise UsageError(f"{path}: {e}") from None
    except ValidationError as e:
        raise UsageError(f"{path}: invalid presentation: {e}") from None


def _scalars(text: str, names) -> list:
    try:
        return [parse_scalar(s, names) for s in text.split(",")]
    except (ParseError, ScalarError) as e:
        raise UsageError(f"bad scalar list {text!r}: {e}") from None


def _expr(text: str, p: AlgebraParams):
    try:
        return parse_expr(text, p)
    except (ParseError, ScalarError, ValueError) as e:
        raise UsageError(f"bad expression {text!r}: {e}") from None


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--json", action="store_true", default=argparse.SUPPRESS, help="machine-readable output")
    parser = _Parser(prog="qweyl", description="Multiparameter quantized Weyl algebras.")
    parser.add_argument("--json", action="store_true", help="machine-readable output")
    sub = parser.add_subparsers(dest="verb", required=True, parser_class=_Parser)

    p = sub.add_parser("validate", parents=[common], help="check a presentation file")
    p.add_argument("file")
    p = sub.add_parser("nf", parents=[common], help="PBW normal form of an expression")
    p.add_argument("file")
    p.add_argument("expr")
    p = sub.add_parser("iso", parents=[common], help="decide whether two presentations are isomorphic")
    p.add_argument("file_a")
    p.add_argument("file_b")
    p = sub.add_parser("build-iso", parents=[common], help="construct the isomorphism phi_{mu,eps}")
    p.add_argument("file_a")
    p.add_argument("file_b")
    p.add_argument("--eps", required=True, help="comma-separated signs, e.g. +1,-1")
    p.add_argument("--mu", required=True, help="comma-separated nonzero scalars")
    p = sub.add_parser("aut", parents=[common], help="scaling automorphism x_i -> mu_i x_i")
    p.add_argument("file")
    p.add_argument("--mu", required=True)
    p = sub.add_parser("divide", parents=[common], help="left quotient by z_i")
    p.add_argument("file")
    p.add_argument("i", type=int)
    p.add_argument("expr")
    p = sub.add_parser("generic", parents=[common], help="genericity rank of the parameters")
    p.add_argument("file")
    return parser


def _dispatch(args, out: List[str]) -> int:
    js = args.json

    def emit(text: str, payload: dict):
        out.append(json.dumps(payload, sort_keys=True) if js else text)

    if args.verb == "validate":
        p = _load(args.file, check=False)
        v = validate(p)
        emit(
            "\n".join(map(str, v)) if v else f"OK n={p.n}",
            {"valid": not v, "n": p.n, "violations": [{"code": x.code, "indices": list(x.indices), "message": x.message} for x in v]},
        )
        return 1 if v else 0

    if args.verb == "nf":
        p = _load(args.file)
        f = nf(_expr(args.expr, p), p)
        emit(str(f), {"nf": str(f)})
        return 0

    if args.verb == "iso":
        A, B = _load(args.file_a), _load(args.file_b)
        d = decide_iso(A, B)
        emit(d.serialize(), d.to_json())
        return 0 if d.isomorphic else 1

    if args.verb in ("build-iso", "aut"):
        if args.verb == "aut":
            A = B = _load(args.file)
            names = A.indeterminates
        else:
            A, B = _load(args.file_a), _load(args.file_b)
            names = tuple(dict.fromkeys(A.indeterminates + B.indeterminates))
        mu = _scalars(args.mu, names)
        try:
            if args.verb == "aut":
                h = automorphism(A, mu)
            else:
                try:
                    eps = parse_eps(args.eps)
                except ValueError as e:
                    raise UsageError(str(e)) from None
                h = build_iso(A, B, eps, mu)
        except IsoError as e:
            raise _Negative(str(e)) from None
        bad = verify_hom(h)
        if bad:
            raise _Negative("relations violated: " + ", ".join(bad))
        payload = h.to_json()
        if args.verb == "build-iso":
            payload["eps"] = list(eps)
            text = f"ISOMORPHISM eps={format_eps(eps)}\n" + "\n".join(h.lines())
        else:
            text = "AUTOMORPHISM\n" + "\n".join(h.lines())
        emit(text, payload)
        return 0

    if args.verb == "divide":
        p = _load(args.file)
        if not 1 <= args.i <= p.n:
            raise UsageError(f"z index {args.i} out of range [1, {p.n}]")
        a = nf(_expr(args.expr, p), p)
        b = divide_by_z(args.i, a)
        if b is None:
            emit("NOT-DIVISIBLE", {"divisible": False})
            return 1
        emit(str(b), {"divisible": True, "quotient": str(b)})
        return 0

    if args.verb == "generic":
        p = _load(args.file)
        g = genericity_rank(p)
        if not g.decidable:
            emit(f"NOT-DECIDABLE reason={g.reason}", {"decidable": False, "reason": g.reason})
            return 1
        expected = p.n * (p.n + 1) // 2
        emit(
            f"rank={g.rank} expected={expected} generic={'true' if g.generic else 'false'}",
            {"decidable": True, "rank": g.rank, "expected": expected, "generic": g.generic},
        )
        return 0

    raise UsageError(f"unknown verb {args.verb!r}")  # pragma: no cover


class _Negative(Exception):
    pass


def _glue_values(argv: List[str]) -> List[str]:
    # "--eps -1,+1" would read -1,+1 as an option; pass it as "--eps=-1,+1"
    out = []
    it = iter(argv)
    for a in it:
        if a in ("--eps", "--mu"):
            nxt = next(it, None)
            out.append(a if nxt is None else f"{a}={nxt}")
        else:
            out.append(a)
    return out


def run(argv: Optional[Sequence[str]] = None, stdout=None, stderr=None) -> int:
    stdout = stdout or sys.stdout
    stderr = stderr or sys.stderr
    parser = build_parser()
    out: List[str] = []
    try:
        args = parser.parse_args(_glue_values(list(argv) if argv is not None else sys.argv[1:]))
        code = _dispatch(args, out)
    except SystemExit as e:  # --help
        return int(e.code or 0)
    except UsageError as e:
        stderr.write(f"{e}\n")
        return 2
    except _Negative as e:
        stderr.write(f"error: {e}\n")
        return 1
    stdout.write("\n".join(out) + "\n")
    return code


def run_captured(argv: Sequence[str]):
    """``(exit code, stdout, stderr)`` for one invocation."""
    out, err = io.StringIO(), io.StringIO()
    code = run(argv, out, err)
    return code, out.getvalue(), err.getvalue()


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
