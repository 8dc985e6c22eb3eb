"""Command-line front end.

    twovcss solve GRAPH [-o OUT] [--trace] [--dot FILE] [--oracle] [--timing]
    twovcss solve --batch DIR [--jobs K]
    twovcss verify GRAPH SOLUTION
    twovcss gen KIND N [--seed S] [-o OUT]
    twovcss oracle GRAPH

Exit codes: 0 ok, 1 verification failed, 2 parse error, 3 input not 2VC,
4 internal assertion, 5 oracle budget exceeded.
"""

from __future__ import annotations

import argparse
import os
import sys
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Dict, List, Optional

from . import io
from .errors import TwoVCError
from .generators import FAMILIES, generate
from .graph import Graph, is_2vc
from .oracle import OracleBudget, opt as oracle_opt
from .pipeline import bound, solve


def _frac(q: Fraction) -> str:
    return f"{q.numerator}/{q.denominator}"


@dataclass
class RunReport:
    instance: str
    n: int
    m: int
    h: int
    s: int
    moves: Dict[str, int]
    digest: str
    reduction: Dict[str, int]
    core_ok: bool = True  # every core run within max(|H|, 4/3|H| - 2) of its own cover
    opt: Optional[int] = None
    seed: Optional[int] = None
    wall_s: Optional[float] = None
    extra: List[str] = field(default_factory=list)

    @property
    def guarantee(self) -> bool:
        if self.opt is not None and self.s > bound(self.opt):
            return False
        return self.core_ok

    def lines(self) -> List[str]:
        out = [
            f"instance={self.instance}",
            f"n={self.n} m={self.m}",
            f"H={self.h} S={self.s}",
            f"ratio_S_H={_frac(Fraction(self.s, self.h))} ({self.s / self.h:.4f})",
        ]
        if self.seed is not None:
            out.append(f"seed={self.seed}")
        if self.opt is not None:
            out.append(f"opt={self.opt}")
            out.append(f"ratio_S_opt={_frac(Fraction(self.s, self.opt))} ({self.s / self.opt:.4f})")
        out.append("moves " + " ".join(f"{k}={v}" for k, v in self.moves.items()))
        out.append("reduction " + " ".join(f"{k}={v}" for k, v in self.reduction.items()))
        # against the input's own cover; reductions may legitimately exceed it
        out.append(f"bound_H={'pass' if self.s <= bound(self.h) else 'exceeded'}")
        out.append(f"core_bound={'pass' if self.core_ok else 'fail'}")
        out.append(f"guarantee={'pass' if self.guarantee else 'fail'}")
        out.append(f"trace_sha256={self.digest}")
        out += self.extra
        if self.wall_s is not None:
            out.append(f"wall_s={self.wall_s:.3f}")
        return out


def run_solve(g: Graph, name: str, alpha: Fraction, with_opt: bool = False, seed=None,
              timing: bool = False, max_vertices: int = 8):
    t0 = time.perf_counter()
    res = solve(g, alpha)
    wall = time.perf_counter() - t0
    o = oracle_opt(g, OracleBudget(max_vertices=max_vertices)) if with_opt else None
    rs = res.red_stats
    report = RunReport(
        instance=name, n=g.n, m=g.m, h=res.h_size, s=res.size, moves=res.phase_counts, digest=res.digest,
        reduction={"splits": rs.splits, "irrelevant": rs.irrelevant, "removable": rs.removable,
                   "brute": rs.brute, "core": rs.core},
        core_ok=all(r.s_size <= bound(r.h_size) for r in res.core_runs),
        opt=o, seed=seed, wall_s=wall if timing else None,
    )
    return res, report


def _write(path: Optional[str], text: str) -> None:
    if path is None or path == "-":
        sys.stdout.write(text)
    else:
        with open(path, "w", encoding="utf-8") as fh:
            fh.write(text)


def cmd_solve(args) -> int:
    if args.batch:
        return _batch(args)
    g = io.read_graph(args.graph)
    res, report = run_solve(g, os.path.basename(args.graph), args.alpha, args.oracle, args.seed, args.timing)
    if args.dot:
        from .cover import min_2edge_cover

        _write(args.dot, io.to_dot(g, res.solution.edges, min_2edge_cover(g).edges))
    text = io.format_solution(res.solution)
    if args.out:
        _write(args.out, text)
    else:
        sys.stdout.write(text)
    if args.trace:
        for line in res.trace_lines():
            print(f"# {line}")
    for line in report.lines():
        print(f"# {line}")
    return 0 if report.guarantee else 4


def _solve_file(job):
    path, alpha, with_opt, timing = job
    try:
        g = io.read_graph(path)
        res, report = run_solve(g, os.path.basename(path), alpha, with_opt, None, timing)
    except TwoVCError as exc:
        return path, None, [f"error={type(exc).__name__}: {exc}"], exc.exit_code
    with open(path + ".sol", "w", encoding="utf-8") as fh:
        fh.write(io.format_solution(res.solution))
    return path, res.size, report.lines(), 0 if report.guarantee else 4


def _batch(args) -> int:
    files = sorted(os.path.join(args.batch, f) for f in os.listdir(args.batch) if f.endswith(".txt"))
    jobs = [(f, args.alpha, args.oracle, args.timing) for f in files]
    if args.jobs > 1:
        with ProcessPoolExecutor(args.jobs) as ex:
            results = list(ex.map(_solve_file, jobs))
    else:
        results = [_solve_file(j) for j in jobs]
    code = 0
    for path, _, lines, rc in results:
        for line in lines:
            print(f"# {line}")
        code = max(code, rc)
    return code


def cmd_verify(args) -> int:
    g = io.read_graph(args.graph)
    with open(args.solution, encoding="utf-8") as fh:
        s = io.parse_solution(fh.read(), g, args.solution)
    degrees = s.degrees()
    if any(d == 0 for d in degrees):
        print(f"fail: not spanning ({sum(1 for d in degrees if d == 0)} vertices untouched)")
        return 1
    if not is_2vc(s):
        print("fail: not 2-vertex-connected")
        return 1
    print(f"pass: {len(s)} edges, spanning and 2-vertex-connected")
    return 0


def cmd_gen(args) -> int:
    g = generate(args.kind, args.n, args.seed)
    _write(args.out, io.format_graph(g, [f"{args.kind} n={args.n} seed={args.seed}"]))
    return 0


def cmd_oracle(args) -> int:
    g = io.read_graph(args.graph)
    _, report = run_solve(g, os.path.basename(args.graph), args.alpha, True, None, args.timing, args.max_vertices)
    for line in report.lines():
        print(line)
    return 0 if report.guarantee else 4


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="twovcss", description="4/3-approximation for minimum 2VCSS")
    sub = p.add_subparsers(dest="cmd", required=True)

    def alpha(text):
        try:
            return Fraction(text)
        except (ValueError, ZeroDivisionError):
            raise argparse.ArgumentTypeError(f"not a rational: {text!r}") from None

    s = sub.add_parser("solve", help="solve an instance (or a directory of instances)")
    s.add_argument("graph", nargs="?")
    s.add_argument("-o", "--out", help="solution file (default: stdout)")
    s.add_argument("--seed", type=int, help="recorded in the report")
    s.add_argument("--trace", action="store_true", help="print one line per applied move")
    s.add_argument("--dot", help="write a DOT drawing of the solution")
    s.add_argument("--oracle", action="store_true", help="also compute opt exactly (small n)")
    s.add_argument("--timing", action="store_true", help="add wall time to the report (not reproducible)")
    s.add_argument("--batch", help="solve every *.txt file in this directory")
    s.add_argument("--jobs", type=int, default=1)
    s.add_argument("--alpha", type=alpha, default=Fraction(4, 3), help=argparse.SUPPRESS)
    s.set_defaults(func=cmd_solve)

    v = sub.add_parser("verify", help="check that a solution is a 2VC spanning subgraph")
    v.add_argument("graph")
    v.add_argument("solution")
    v.set_defaults(func=cmd_verify)

    gen = sub.add_parser("gen", help="generate a seeded instance")
    gen.add_argument("kind", choices=sorted(FAMILIES))
    gen.add_argument("n", type=int)
    gen.add_argument("--seed", type=int, default=0)
    gen.add_argument("-o", "--out")
    gen.set_defaults(func=cmd_gen)

    o = sub.add_parser("oracle", help="solve and compare against the exact optimum")
    o.add_argument("graph")
    o.add_argument("--max-vertices", type=int, default=8)
    o.add_argument("--timing", action="store_true")
    o.add_argument("--alpha", type=alpha, default=Fraction(4, 3), help=argparse.SUPPRESS)
    o.set_defaults(func=cmd_oracle)
    return p


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    if args.cmd == "solve" and not (args.graph or args.batch):
        parser.error("solve needs a graph file or --batch DIR")
    try:
        return args.func(args)
    except TwoVCError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return exc.exit_code
    except (OSError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
