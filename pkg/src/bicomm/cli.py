"""Command-line front end.

Exit codes: 0 success, 1 verification mismatch, 2 usage or parse error,
3 invariant violation in input data.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
import time

from .galgebra import InvariantError, from_json, to_json
from .hwv import UnsupportedShapeError, hwv_basis, parse_partition, two_row_partitions
from .lattice import DEFAULT_SEED, build_graph, to_dot
from .lattice import to_json as graph_json
from .poly import DimensionError, parse_rational
from .tideal import MultiplicityTable, VarietySpec, default_engine
from .varieties import (
    classify_alpha,
    classify_beta,
    expected_cocharacter_U,
    expected_cocharacter_V,
    u_spec,
    v_spec,
    b_spec,
)

EXIT_OK, EXIT_MISMATCH, EXIT_USAGE, EXIT_INVARIANT = 0, 1, 2, 3


class UsageError(Exception):
    pass


class InputInvariantError(Exception):
    pass


def max_degree_cap() -> int:
    raw = os.environ.get("BICOMM_MAX_DEGREE_CAP", "12")
    try:
        return int(raw)
    except ValueError:
        raise UsageError(f"BICOMM_MAX_DEGREE_CAP must be an integer, got {raw!r}")


def _pair(text: str) -> tuple:
    parts = [p for p in text.replace(" ", "").split(",") if p]
    if len(parts) != 2:
        raise UsageError(f"expected a coefficient pair like 1,-1 or 1/2,3, got {text!r}")
    try:
        pair = tuple(parse_rational(p) for p in parts)
    except (ValueError, ZeroDivisionError) as exc:
        raise UsageError(f"bad coefficient pair {text!r}: {exc}")
    if pair == (0, 0):
        raise UsageError("the coefficient pair must not be (0,0)")
    return pair


def _partition(text: str):
    try:
        lam = parse_partition(text)
        lam.require_two_rows()
    except UnsupportedShapeError as exc:
        raise UsageError(f"unsupported shape: {exc}")
    except ValueError as exc:
        raise UsageError(str(exc))
    return lam


def load_generators(path: str) -> VarietySpec:
    try:
        with open(path, encoding="utf-8") as fh:
            text = fh.read()
    except OSError as exc:
        raise UsageError(f"cannot read {path}: {exc.strerror}")
    try:
        gens = from_json(text)
    except json.JSONDecodeError as exc:
        raise UsageError(f"{path}: malformed JSON at line {exc.lineno}, column {exc.colno}: {exc.msg}")
    except InvariantError as exc:
        raise InputInvariantError(f"{path}: {exc}")
    except (ValueError, DimensionError) as exc:
        raise UsageError(f"{path}: {exc}")
    try:
        return VarietySpec(tuple(g.embed(max(2, g.d)) if g.d < 2 else g for g in gens), os.path.basename(path))
    except InvariantError as exc:
        raise InputInvariantError(f"{path}: {exc}")
    except ValueError as exc:
        raise UsageError(f"{path}: {exc}")


def resolve_spec(args) -> tuple:
    """(spec, kind, case) from --variety/--alpha/--beta or --generators."""
    gen_file = getattr(args, "generators", None)
    variety = getattr(args, "variety", None)
    alpha, beta = getattr(args, "alpha", None), getattr(args, "beta", None)
    if gen_file and variety:
        raise UsageError("give either --variety or --generators, not both")
    if gen_file:
        if alpha or beta:
            raise UsageError("--alpha/--beta only apply to builtin varieties")
        return load_generators(gen_file), None, None
    if variety is None:
        raise UsageError("a variety is required (--variety u|v|b or --generators FILE)")
    if variety == "b":
        if alpha or beta:
            raise UsageError("the variety b takes no coefficients")
        return b_spec(), None, None
    if variety == "u":
        if alpha is None or beta is not None:
            raise UsageError("the variety u needs --alpha and no --beta")
        a = _pair(alpha)
        return u_spec(*a), "U", classify_alpha(*a)
    if beta is None or alpha is not None:
        raise UsageError("the variety v needs --beta and no --alpha")
    b = _pair(beta)
    return v_spec(*b), "V", classify_beta(*b)


def _check_degree(n: int) -> int:
    cap = max_degree_cap()
    if n < 1:
        raise UsageError("--max-degree must be positive")
    if n > cap:
        raise UsageError(f"--max-degree {n} exceeds the cap {cap} (set BICOMM_MAX_DEGREE_CAP to raise it)")
    return n


def _emit(args, text: str) -> None:
    out = getattr(args, "output", None)
    if out:
        with open(out, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


# subcommands


def cmd_hwv(args) -> int:
    lam = _partition(args.partition)
    basis = hwv_basis(lam)
    if args.format == "json":
        _emit(args, to_json(basis.elements) + "\n")
        return EXIT_OK
    if lam.n == 1:
        _emit(args, "x1\n")
    else:
        _emit(args, "".join(v.render() + "\n" for v in basis.vectors))
    return EXIT_OK


def cmd_cocharacter(args) -> int:
    spec, kind, case = resolve_spec(args)
    top = _check_degree(args.max_degree)
    eng = default_engine()
    table = MultiplicityTable()
    status = EXIT_OK
    lines = []
    for n in range(1, top + 1):
        row = eng.cocharacter(spec, n)
        for lam, m in row.items():
            table.set(n, lam, m)
        expected = None
        if args.expected:
            if kind == "U":
                expected = expected_cocharacter_U(case, n)
            elif kind == "V":
                expected = expected_cocharacter_V(case, n)
            elif spec.generators == ():
                from .hwv import m_formula

                expected = {lam: m_formula(lam) for lam in two_row_partitions(n)}
            else:
                raise UsageError("--expected is available for the builtin varieties only")
        for lam, m in row.items():
            line = f"{n}\t{lam}\t{m}"
            if expected is not None:
                ok = expected[lam] == m
                line += f"\t{expected[lam]}\t{'ok' if ok else 'MISMATCH'}"
                if not ok:
                    status = EXIT_MISMATCH
            lines.append(line)
    if args.format == "json":
        _emit(args, json.dumps(table.to_json(), indent=2) + "\n")
    else:
        header = "n\tlambda\tm" + ("\texpected\tmatch" if args.expected else "")
        _emit(args, header + "\n" + "\n".join(lines) + "\n")
    return status


def cmd_multiplicity(args) -> int:
    spec = load_generators(args.file)
    lam = _partition(args.partition)
    _check_degree(lam.n)
    print(default_engine().multiplicity(spec, lam))
    return EXIT_OK


def cmd_consequences(args) -> int:
    spec, _, _ = resolve_spec(args)
    lam = _partition(args.partition)
    _check_degree(lam.n)
    if lam.n == 1:
        raise UsageError("consequence spans start in degree 2")
    eng = default_engine()
    span = eng.consequence_span(spec, lam)
    if args.format == "json":
        from .galgebra import GElement

        _emit(args, to_json([GElement.from_poly(p) for p in span]) + "\n")
    else:
        _emit(args, f"# dim {len(span)}\n" + "".join(p.render() + "\n" for p in span))
    return EXIT_OK


def cmd_lattice(args) -> int:
    from .figures import FIGURES

    spec, kind, case = resolve_spec(args)
    top = _check_degree(args.max_degree)
    if top < 2:
        raise UsageError("--max-degree must be at least 2 for graphs")
    fig = None
    if args.check_figure:
        fig = FIGURES.get(args.check_figure)
        if fig is None:
            raise UsageError(f"unknown figure id {args.check_figure!r}; known: {', '.join(FIGURES)}")
        if kind != fig.kind or case.value != fig.case:
            raise UsageError(f"figure {fig.id} is for {fig.kind} at {fig.case}, not this variety")
    g = build_graph(spec, top, seed=args.seed)
    if args.format == "dot":
        _emit(args, to_dot(g))
    elif args.format == "json":
        _emit(args, graph_json(g) + "\n")
    else:
        lines = []
        for n, verts in sorted(g.by_degree().items()):
            for v in verts:
                outs = [g.vertices[b].name for a, b in g.edges if g.vertices[a] is v]
                lines.append(f"{n}\t{v.name}\t{v.partition}\t-> {', '.join(outs) if outs else '(none)'}")
        _emit(args, "\n".join(lines) + "\n")
    if fig is None:
        return EXIT_OK
    names = {v.name for v in g.vertices if v.degree <= fig.max_degree}
    got = {(a, b) for a, b in g.edge_names() if a in names and b in names}
    want = {(a, b) for a, b in fig.golden() if a in names and b in names}
    if got != want:
        sys.stderr.write(f"figure {fig.id}: missing {sorted(want - got)}, unexpected {sorted(got - want)}\n")
        return EXIT_MISMATCH
    sys.stderr.write(f"figure {fig.id}: {len(got)} edges match\n")
    return EXIT_OK


def cmd_verify(args) -> int:
    from .verify import SCOPES, run_all, run_scope

    t0 = time.perf_counter()
    if args.scope == "all":
        results = run_all()
    elif args.scope in SCOPES:
        results = run_scope(args.scope)
    else:
        raise UsageError(f"unknown scope {args.scope!r}; known: all, {', '.join(SCOPES)}")
    for r in results:
        print(r.line())
    failed = sum(not r.passed for r in results)
    print(f"{len(results) - failed}/{len(results)} passed in {time.perf_counter() - t0:.1f}s")
    return EXIT_OK if failed == 0 else EXIT_MISMATCH


def _add_variety(p: argparse.ArgumentParser) -> None:
    p.add_argument("--variety", choices=["u", "v", "b"], help="builtin variety")
    p.add_argument("--alpha", help="coefficient pair for u, e.g. 1,-1")
    p.add_argument("--beta", help="coefficient pair for v, e.g. 1,0")
    p.add_argument("--generators", metavar="FILE", help="JSON file of generator records")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="bicomm", description="Identities of bicommutative algebras.")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("hwv", help="highest weight vector basis of a two-row shape")
    p.add_argument("--partition", required=True)
    p.add_argument("--format", choices=["text", "json"], default="text")
    p.add_argument("--output")
    p.set_defaults(func=cmd_hwv)

    p = sub.add_parser("cocharacter", help="multiplicity table up to a degree")
    _add_variety(p)
    p.add_argument("--max-degree", type=int, required=True)
    p.add_argument("--expected", action="store_true", help="compare with the closed forms")
    p.add_argument("--format", choices=["text", "json"], default="text")
    p.add_argument("--output")
    p.set_defaults(func=cmd_cocharacter)

    p = sub.add_parser("multiplicity", help="multiplicity of one shape for a generator file")
    p.add_argument("file")
    p.add_argument("--partition", required=True)
    p.set_defaults(func=cmd_multiplicity)

    p = sub.add_parser("consequences", help="basis of the T-ideal at the weight of a shape")
    _add_variety(p)
    p.add_argument("--partition", required=True)
    p.add_argument("--format", choices=["text", "json"], default="text")
    p.add_argument("--output")
    p.set_defaults(func=cmd_consequences)

    p = sub.add_parser("lattice", help="consequence graph")
    _add_variety(p)
    p.add_argument("--max-degree", type=int, required=True)
    p.add_argument("--format", choices=["text", "json", "dot"], default="text")
    p.add_argument("--check-figure", metavar="ID")
    p.add_argument("--seed", type=int, default=DEFAULT_SEED)
    p.add_argument("--output")
    p.set_defaults(func=cmd_lattice)

    p = sub.add_parser("verify", help="replay the acceptance checks")
    p.add_argument("--scope", default="all")
    p.set_defaults(func=cmd_verify)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except UsageError as exc:
        sys.stderr.write(f"bicomm: error: {exc}\n")
        return EXIT_USAGE
    except InputInvariantError as exc:
        sys.stderr.write(f"bicomm: invalid input: {exc}\n")
        return EXIT_INVARIANT


if __name__ == "__main__":
    sys.exit(main())
