"""Command-line driver.

Exit codes: 0 ok, 1 usage, 2 malformed input, 3 budget or resource limit,
4 internal invariant violation.
"""

from __future__ import annotations

import argparse
import sys
import time

from . import generators
from .asc import join as join_complexes
from .coloring import (SearchConfig, chromatic_bounds, chromatic_number, color_stats, count_colorings,
                       is_coloring)
from .errors import BudgetExhausted, InvariantViolation, RelaxColError
from .io import RunReport, complex_summary, parse_coloring, read_complex, render_facets, write_text
from .verifier import exhaustive_cross_check, verify_coloring_algebraically


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(1, f"{self.prog}: error: {message}\n")


def _csv(values) -> str:
    return ",".join(str(v) for v in values)


def _emit(args, K, result: dict, lines: list[str], started: float) -> None:
    report = RunReport(sys.argv[1:] if args.argv is None else list(args.argv), complex_summary(K) if K else {},
                       result, time.perf_counter() - started)
    if getattr(args, "json", False):
        print(report.to_json())
    else:
        print("\n".join(lines))


# -- subcommands ----------------------------------------------------------------


def cmd_info(args, started):
    K = read_complex(args.file)
    fv = list(K.f_vector())
    missing = [list(K.vertices.names(mf)) for mf in K.missing_faces()]
    flags = {s: K.is_s_flag(s) for s in range(1, K.dim + 2)}
    result = {
        "vertices": list(K.vertices.labels),
        "f_vector": fv,
        "f_vector_reduced": fv[1:],
        "m": K.m, "n": K.n, "dim": K.dim, "codim": K.codim,
        "missing_faces": missing,
        "s_flag": {str(s): v for s, v in flags.items()},
    }
    lines = [
        "vertices: " + " ".join(K.vertices.labels),
        f"m = {K.m}  n = {K.n}  dim = {K.dim}  codim = {K.codim}",
        f"f-vector (with empty face): {tuple(fv)}",
        f"f-vector (without empty face): {tuple(fv[1:])}",
        f"missing faces ({len(missing)}): " + (", ".join("{" + " ".join(mf) + "}" for mf in missing) or "none"),
        "s-flag: " + ", ".join(f"s={s} {'yes' if v else 'no'}" for s, v in flags.items()),
    ]
    _emit(args, K, result, lines, started)
    return 0


def cmd_chromatic(args, started):
    K = read_complex(args.file)
    cfg = SearchConfig(budget=args.budget, workers=args.workers)
    try:
        r, witness = chromatic_number(K, args.s, cfg)
    except BudgetExhausted as exc:
        result = {"s": args.s, "status": "budget", "lower": exc.lower, "upper": exc.upper, "nodes": exc.nodes}
        lines = [f"budget exhausted after {exc.nodes} nodes: {exc.lower} <= chi_{args.s} <= {exc.upper}"]
        _emit(args, K, result, lines, started)
        return 3
    lo, hi = chromatic_bounds(K, args.s)
    result = {"s": args.s, "status": "ok", "chromatic_number": r, "witness": witness.one_based(),
              "bounds": [lo, hi]}
    lines = [str(r), f"witness: {_csv(witness.one_based())}"]
    _emit(args, K, result, lines, started)
    return 0


def cmd_check(args, started):
    K = read_complex(args.file)
    f = parse_coloring(args.coloring, K)
    verdict = is_coloring(K, f, args.s)
    stats = color_stats(K, f)
    result = {"s": args.s, "coloring": f.one_based(), "verdict": verdict,
              "d_f": {str(p + 1): d for p, d in stats.d_f.items()}}
    lines = [f"verdict: {'true' if verdict else 'false'}",
             "d_f: " + ", ".join(f"{p + 1}:{d}" for p, d in stats.d_f.items())]
    code = 0
    if args.algebraic:
        cert = verify_coloring_algebraically(K, f, args.s, complex_id=args.file)
        result["certificate"] = cert.to_dict()
        lines.append(f"algebraic verdict: {'true' if cert.verdict else 'false'}")
        lines.append(f"c(V) = {cert.lhs}")
        lines.append(f"product = {cert.rhs}")
        for fac in cert.factors:
            lines.append(f"  factor {fac['color']}: {fac['poly']}")
        if cert.verdict != verdict:
            lines.append("INTERNAL ERROR: combinatorial and algebraic verdicts disagree")
            code = 4
    _emit(args, K, result, lines, started)
    return code


def cmd_count(args, started):
    K = read_complex(args.file)
    n = count_colorings(K, args.colors, args.s, surjective=args.surjective, budget=args.budget)
    result = {"colors": args.colors, "s": args.s, "surjective": args.surjective, "count": n}
    _emit(args, K, result, [str(n)], started)
    return 0


def cmd_gen(args, started):
    kind, params = args.kind, args.params
    need = {"cyclic": 2, "simplex": 1, "boundary": 1, "corpus": 1, "random": 1}
    if kind not in need:
        raise _usage(f"unknown family {kind!r}; choose from {', '.join(need)}")
    if len(params) != need[kind]:
        raise _usage(f"gen {kind} takes {need[kind]} argument(s)")
    try:
        if kind == "corpus":
            K = generators.corpus_entry(params[0]).complex
        else:
            nums = [int(p) for p in params]
            if kind == "cyclic":
                K = generators.cyclic_polytope(*nums)
            elif kind == "simplex":
                K = generators.full_simplex(nums[0])
            elif kind == "boundary":
                K = generators.boundary_simplex(nums[0])
            else:
                K = generators.random_complex(nums[0], args.density, args.seed)
    except (ValueError, KeyError) as exc:
        raise _usage(str(exc)) from None
    write_text(render_facets(K, comment=f"gen {kind} {' '.join(params)}"), args.output)
    return 0


def cmd_flagify(args, started):
    K = read_complex(args.file)
    write_text(render_facets(K.flagification(args.s)), args.output)
    return 0


def cmd_skeleton(args, started):
    K = read_complex(args.file)
    write_text(render_facets(K.skeleton(args.j)), args.output)
    return 0


def cmd_join(args, started):
    K = join_complexes(read_complex(args.file1), read_complex(args.file2))
    write_text(render_facets(K), args.output)
    return 0


def cmd_selftest(args, started):
    lines = []
    entries = generators.corpus()
    lines.append(f"corpus: {len(entries)} entries validated")
    checked = 0
    for e in entries:
        for s in (1, 2, 3):
            exhaustive_cross_check(e.complex, s, 3, complex_id=e.name)
            checked += 1
    for i, K in enumerate(generators.random_sample(args.samples, args.max_vertices, args.seed)):
        for s in (1, 2, 3):
            exhaustive_cross_check(K, s, 3, complex_id=f"sample{i}")
            checked += 1
    lines.append(f"oracle equivalence: {checked} (complex, s) cases, 0 disagreements")
    result = {"corpus": len(entries), "cases": checked, "disagreements": 0}
    _emit(args, None, result, lines, started)
    return 0


class _Usage(Exception):
    pass


def _usage(msg):
    return _Usage(msg)


def build_parser() -> argparse.ArgumentParser:
    p = _Parser(prog="relaxcol", description="Relaxed colorings of simplicial complexes.")
    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)

    def with_json(sp):
        sp.add_argument("--json", action="store_true", help="machine-readable report")
        return sp

    sp = with_json(sub.add_parser("info", help="summary of a facet file"))
    sp.add_argument("file")
    sp.set_defaults(func=cmd_info)

    sp = with_json(sub.add_parser("chromatic", help="exact s-chromatic number"))
    sp.add_argument("file")
    sp.add_argument("--s", type=int, required=True)
    sp.add_argument("--budget", type=int, default=None, help="search node limit")
    sp.add_argument("--workers", type=int, default=None)
    sp.set_defaults(func=cmd_chromatic)

    sp = with_json(sub.add_parser("check", help="check a coloring"))
    sp.add_argument("file")
    sp.add_argument("--s", type=int, required=True)
    sp.add_argument("--coloring", required=True, help="one-based colors, comma separated, or a file")
    sp.add_argument("--algebraic", action="store_true", help="also emit the ring-identity certificate")
    sp.set_defaults(func=cmd_check)

    sp = with_json(sub.add_parser("count", help="count labeled (r, s)-colorings"))
    sp.add_argument("file")
    sp.add_argument("--colors", type=int, required=True)
    sp.add_argument("--s", type=int, required=True)
    sp.add_argument("--surjective", action="store_true")
    sp.add_argument("--budget", type=int, default=None)
    sp.set_defaults(func=cmd_count)

    sp = sub.add_parser("gen", help="emit a facet file: cyclic M N | simplex M | boundary M | corpus NAME | random M")
    sp.add_argument("kind")
    sp.add_argument("params", nargs="*")
    sp.add_argument("-o", "--output")
    sp.add_argument("--seed", type=int, default=0)
    sp.add_argument("--density", type=float, default=0.5)
    sp.set_defaults(func=cmd_gen)

    sp = sub.add_parser("flagify", help="s-flagification")
    sp.add_argument("file")
    sp.add_argument("--s", type=int, required=True)
    sp.add_argument("-o", "--output")
    sp.set_defaults(func=cmd_flagify)

    sp = sub.add_parser("skeleton", help="j-skeleton")
    sp.add_argument("file")
    sp.add_argument("--j", type=int, required=True)
    sp.add_argument("-o", "--output")
    sp.set_defaults(func=cmd_skeleton)

    sp = sub.add_parser("join", help="join of two complexes")
    sp.add_argument("file1")
    sp.add_argument("file2")
    sp.add_argument("-o", "--output")
    sp.set_defaults(func=cmd_join)

    sp = with_json(sub.add_parser("selftest", help="corpus validation and oracle equivalence"))
    sp.add_argument("--seed", type=int, default=0)
    sp.add_argument("--samples", type=int, default=20)
    sp.add_argument("--max-vertices", type=int, default=7)
    sp.set_defaults(func=cmd_selftest)
    return p


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    args.argv = argv
    started = time.perf_counter()
    try:
        return args.func(args, started)
    except _Usage as exc:
        print(f"relaxcol: error: {exc}", file=sys.stderr)
        return 1
    except InvariantViolation as exc:
        print(f"relaxcol: invariant violation: {exc}", file=sys.stderr)
        return 4
    except RelaxColError as exc:
        print(f"relaxcol: {exc}", file=sys.stderr)
        return exc.exit_code
    except ValueError as exc:
        print(f"relaxcol: error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
