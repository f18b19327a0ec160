"""Command-line entry point: ``stellar {info,move,normalize,recognize,check-manifold,pipeline}``."""

from __future__ import annotations

import argparse
import logging
import sys
from pathlib import Path

from .complex import Complex, euler_characteristic, is_closed, is_uniform
from .errors import InvalidAtError, NormalizeError, NotUniformError, ParseError, StellarError
from .formats import (
    format_complex,
    read_complex,
    read_trace,
    write_complex,
    write_equivalence,
    write_trace,
)
from .homology import homology_z2
from .moves import MoveTrace, replay
from .normalize import normalize
from .pipeline import PipelineStageError, poincare_pipeline
from .recognize import NO, YES, is_stellar_manifold, recognize

EXIT_OK = 0
EXIT_PARSE = 2
EXIT_INVALID_MOVE = 3
EXIT_NORMALIZE = 4
EXIT_NO = 5
EXIT_UNKNOWN = 6

def _betti(b) -> str:
    return "(" + ",".join(map(str, b)) + ")"


def _verdict_exit(status: str) -> int:
    return {YES: EXIT_OK, NO: EXIT_NO}.get(status, EXIT_UNKNOWN)


def _out_dir(args) -> Path | None:
    if args.out is None:
        return None
    out = Path(args.out)
    out.mkdir(parents=True, exist_ok=True)
    return out


def info_line(K: Complex) -> str:
    if K.is_empty:
        return "0 generators"
    dims = sorted(K.dims())
    dim = f"dim {dims[0]}" if len(dims) == 1 else "dims " + ",".join(map(str, dims))
    closed = "closed" if is_closed(K) else "not closed"
    return (f"{len(K.vertices())} vertices, {len(K)} generators, {dim}, {closed}, "
            f"χ={euler_characteristic(K)}, H={_betti(homology_z2(K))}")


def cmd_info(args) -> int:
    print(info_line(read_complex(args.path)))
    return EXIT_OK


def cmd_move(args) -> int:
    K = read_complex(args.path)
    moves = read_trace(args.trace)
    try:
        result = replay(MoveTrace(K, tuple(moves)))
    except InvalidAtError as exc:
        print(f"error: step {exc.index}: {type(exc.cause).__name__}: {exc.cause}", file=sys.stderr)
        return EXIT_INVALID_MOVE
    out = _out_dir(args)
    if out is None:
        sys.stdout.write(format_complex(result))
    else:
        write_complex(out / "result.cplx", result)
        print(f"wrote {out / 'result.cplx'}: {len(result)} generators")
    return EXIT_OK


def write_normalize_bundle(out: Path, ct) -> None:
    write_complex(out / "S.cplx", ct.S)
    write_equivalence(out / "eq.equiv", ct.eq)
    write_trace(out / "normalize.trace", ct.trace.moves)
    (out / "steps.log").write_text("".join(s.line() + "\n" for s in ct.steps), encoding="utf-8")


def cmd_normalize(args) -> int:
    M = read_complex(args.path)
    try:
        ct = normalize(M, validate=args.validate)
    except NormalizeError as exc:
        print(f"error: {type(exc).__name__}: {exc}", file=sys.stderr)
        return EXIT_NORMALIZE
    out = _out_dir(args)
    if out is not None:
        write_normalize_bundle(out, ct)
    print(ct.summary(closed=is_closed(M)))
    return EXIT_OK


def cmd_recognize(args) -> int:
    K = read_complex(args.path)
    if K.is_empty or not is_uniform(K):
        print("error: recognition needs a nonempty uniform complex", file=sys.stderr)
        return EXIT_PARSE
    v = recognize(K, args.target, args.budget, args.seed)
    print(v.describe())
    out = _out_dir(args)
    if v.status == YES and out is not None:
        write_trace(out / "recognize.trace", v.trace.moves)
    return _verdict_exit(v.status)


def cmd_check_manifold(args) -> int:
    K = read_complex(args.path)
    try:
        mv = is_stellar_manifold(K, args.budget, args.seed)
    except NotUniformError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_PARSE
    print(f"stellar manifold: {mv.status}")
    for v, kind in mv.failures().items():
        sph, ball = mv.per_vertex[v]
        print(f"  vertex {v}: {kind}; {sph.describe()}; {ball.describe()}")
    return _verdict_exit(mv.status)


def cmd_pipeline(args) -> int:
    M = read_complex(args.path)
    try:
        report = poincare_pipeline(M, args.budget, args.seed, validate=args.validate)
    except PipelineStageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_NORMALIZE if isinstance(exc.cause, NormalizeError) else 1
    text = report.to_text()
    sys.stdout.write(text)
    out = _out_dir(args)
    if out is not None:
        (out / "report.txt").write_text(text, encoding="utf-8")
        (out / "report.tsv").write_text(report.to_records(), encoding="utf-8")
        write_normalize_bundle(out, report.cone)
        if report.sphere_verdict.status == YES:
            write_trace(out / "sphere.trace", report.sphere_verdict.trace.moves)
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="stellar", description=__doc__)
    parser.add_argument("-v", "--verbose", action="count", default=0)
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p, search=False):
        p.add_argument("path", help="input .cplx file")
        p.add_argument("--out", metavar="DIR", help="directory for output files")
        if search:
            p.add_argument("--budget", type=int, default=1000, help="move budget (default 1000)")
            p.add_argument("--seed", type=int, default=0)
        return p

    common(sub.add_parser("info", help="summarize a complex")).set_defaults(func=cmd_info)
    p = common(sub.add_parser("move", help="replay a .trace on a complex"))
    p.add_argument("trace", help="input .trace file")
    p.set_defaults(func=cmd_move)
    p = common(sub.add_parser("normalize", help="rewrite into a cone over a glued 2-sphere"))
    p.add_argument("--validate", action="store_true", help="check chain formulas against move replay")
    p.set_defaults(func=cmd_normalize)
    p = common(sub.add_parser("recognize", help="stellar ball/sphere recognition"), search=True)
    p.add_argument("--target", choices=("ball", "sphere"), default="sphere")
    p.set_defaults(func=cmd_recognize)
    common(sub.add_parser("check-manifold", help="recognize every vertex link"),
           search=True).set_defaults(func=cmd_check_manifold)
    p = common(sub.add_parser("pipeline", help="run the staged sphere checks"), search=True)
    p.add_argument("--validate", action="store_true")
    p.set_defaults(func=cmd_pipeline)
    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    logging.basicConfig(level=logging.WARNING - 10 * min(args.verbose, 2),
                        format="%(levelname)s %(name)s: %(message)s")
    try:
        return args.func(args)
    except ParseError as exc:
        print(f"error: {args.path}: {exc}", file=sys.stderr)
        return EXIT_PARSE
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_PARSE
    except StellarError as exc:
        print(f"error: {type(exc).__name__}: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
