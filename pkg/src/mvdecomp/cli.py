"""Command-line interface.

Every subcommand reads an ideal file (ring/ideal lines, see ideal_io) except
``random`` and ``bench``, which synthesize ideals from a seed. Output is
deterministic: all sets are rendered in lexicographic order. ``--json``
switches to a machine-readable document.
"""

from __future__ import annotations

import argparse
import json
import sys

from .bench import format_results, run_benchmark
from .decompositions import (
    hilbert_series,
    irreducible_decomposition,
    krull_dimension,
    stanley_general,
)
from .errors import MvdecompError
from .ideal_io import (
    IdealDocument,
    default_variable_names,
    format_ideal,
    format_monomial,
    parse_ideal,
)
from .mvt import PivotStrategy, betti_bounds, build_mvt, maximal_corners
from .oracle import (
    koszul_homology_bruteforce,
    verify_irreducible,
    verify_stanley,
)
from .randomgen import BenchSpec, parse_bench_spec, random_ideal

_STRATEGIES = {
    "lex": PivotStrategy.LEX_FIRST,
    "last": PivotStrategy.LAST_GENERATOR,
}


def _load_document(path: str) -> IdealDocument:
    with open(path, encoding="utf-8") as handle:
        return parse_ideal(handle.read())


def _payload(doc: IdealDocument) -> dict:
    return {
        "variables": list(doc.variables),
        "generators": [list(g) for g in doc.generators],
    }


def _emit(payload: dict) -> None:
    print(json.dumps(payload, indent=2))


def _format_component(comp, names) -> str:
    parts = [
        name if e == 1 else f"{name}^{e}"
        for name, e in zip(names, comp)
        if e > 0
    ]
    return "<" + ", ".join(parts) + ">"


def _cmd_corners(args) -> int:
    doc = _load_document(args.file)
    corners = maximal_corners(
        doc.to_ideal(),
        strategy=_STRATEGIES[args.strategy],
        threads=args.threads,
        eliminate=args.eliminate,
        backend=args.backend,
    )
    if args.json:
        payload = _payload(doc)
        payload["corners"] = [list(mu) for mu in corners]
        _emit(payload)
    else:
        for mu in corners:
            print(format_monomial(mu, doc.variables))
    return 0


def _cmd_decompose(args) -> int:
    doc = _load_document(args.file)
    components = irreducible_decomposition(
        doc.to_ideal(),
        strategy=_STRATEGIES[args.strategy],
        threads=args.threads,
        eliminate=args.eliminate,
        backend=args.backend,
    )
    if args.json:
        payload = _payload(doc)
        payload["components"] = [list(c) for c in components]
        _emit(payload)
    else:
        for comp in components:
            print(_format_component(comp, doc.variables))
    return 0


def _cmd_stanley(args) -> int:
    doc = _load_document(args.file)
    decomposition = stanley_general(doc.to_ideal())
    if args.json:
        payload = _payload(doc)
        payload["cones"] = [
            {"base": list(cone.base), "free": sorted(cone.free)}
            for cone in decomposition.cones
        ]
        _emit(payload)
    else:
        for cone in decomposition.cones:
            free = " ".join(doc.variables[i] for i in sorted(cone.free))
            print(f"{format_monomial(cone.base, doc.variables)} {{{free}}}")
    return 0


def _cmd_betti(args) -> int:
    doc = _load_document(args.file)
    ideal = doc.to_ideal()
    bounds = betti_bounds(build_mvt(ideal, prune=False))
    rows = []
    for (i, mu), (low, high) in bounds:
        row = {"i": i, "mu": list(mu), "lower": low, "upper": high}
        if args.exact:
            row["exact"] = koszul_homology_bruteforce(ideal, i, mu)
        rows.append(row)
    if args.json:
        payload = _payload(doc)
        payload["betti"] = rows
        _emit(payload)
    else:
        for row in rows:
            line = (
                f"{row['i']} {format_monomial(tuple(row['mu']), doc.variables)} "
                f"{row['lower']} {row['upper']}"
            )
            if args.exact:
                line += f" {row['exact']}"
            print(line)
    return 0


def _cmd_hilbert(args) -> int:
    doc = _load_document(args.file)
    series = hilbert_series(stanley_general(doc.to_ideal()))
    coeffs = series.coefficients(args.degree)
    if args.json:
        payload = _payload(doc)
        payload["hilbert"] = {
            "terms": [list(term) for term in series.terms],
            "coefficients": coeffs,
        }
        _emit(payload)
    else:
        print(f"series: {series}")
        print("coefficients:", " ".join(map(str, coeffs)))
    return 0


def _cmd_mvt(args) -> int:
    doc = _load_document(args.file)
    tree = build_mvt(
        doc.to_ideal(),
        strategy=_STRATEGIES[args.strategy],
        prune=not args.no_prune,
    )
    if args.json:
        payload = _payload(doc)
        payload["tree"] = [
            {
                "position": node.position,
                "dimension": node.dimension,
                "relevant": node.relevant,
                "generators": [list(g) for g in node.ideal.gens],
                "prune_reason": node.prune_reason,
            }
            for node in tree
        ]
        _emit(payload)
    elif args.dump:
        print(tree.dump(doc.variables))
    else:
        relevant = sum(1 for node in tree if node.relevant)
        print(f"nodes: {tree.node_count()}")
        print(f"relevant: {relevant}")
    return 0


def _cmd_random(args) -> int:
    spec = BenchSpec(
        vars=args.vars,
        gens=args.gens,
        max_exp=args.max_exp,
        seed=args.seed,
        generic=args.generic,
    )
    ideal = random_ideal(spec)
    doc = IdealDocument(default_variable_names(spec.vars), ideal.gens)
    if args.output:
        with open(args.output, "w", encoding="utf-8") as handle:
            handle.write(format_ideal(doc))
    if args.json:
        _emit(_payload(doc))
    elif not args.output:
        print(format_ideal(doc), end="")
    return 0


def _cmd_verify(args) -> int:
    doc = _load_document(args.file)
    ideal = doc.to_ideal()
    checks = {
        "irreducible": verify_irreducible(ideal, irreducible_decomposition(ideal)),
        "stanley": verify_stanley(ideal, stanley_general(ideal)),
    }
    if args.json:
        payload = _payload(doc)
        payload["verify"] = {
            name: {
                "ok": res.ok,
                "mode": res.mode,
                "witness": list(res.witness) if res.witness else None,
                "detail": res.detail,
            }
            for name, res in checks.items()
        }
        _emit(payload)
    else:
        for name, res in checks.items():
            status = "ok" if res.ok else "FAIL"
            line = f"{name}: {status} ({res.mode})"
            if not res.ok:
                line += f" witness={res.witness} {res.detail}"
            print(line)
    return 0 if all(res.ok for res in checks.values()) else 1


def _cmd_bench(args) -> int:
    spec = parse_bench_spec(args.spec)
    backends = None if args.backend == "both" else (args.backend,)
    _, results = run_benchmark(spec, threads=args.threads, backends=backends)
    if args.json:
        _emit(
            {
                "bench": {
                    "spec": {
                        "vars": spec.vars,
                        "gens": spec.gens,
                        "max_exp": spec.max_exp,
                        "seed": spec.seed,
                        "generic": spec.generic,
                        "repetitions": spec.repetitions,
                    },
                    "results": [
                        {
                            "backend": res.backend,
                            "threads": res.threads,
                            "components": res.components,
                            "times": list(res.times),
                        }
                        for res in results
                    ],
                }
            }
        )
    else:
        print(format_results(spec, results))
    return 0


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="mvdecomp",
        description="Corner structure of monomial ideals: maximal corners, "
        "Betti bounds, irreducible and Stanley decompositions.",
    )
    shared = argparse.ArgumentParser(add_help=False)
    shared.add_argument("--json", action="store_true", help="machine-readable output")
    sub = parser.add_subparsers(dest="command", required=True)

    def engine_flags(p):
        p.add_argument("--strategy", choices=sorted(_STRATEGIES), default="lex")
        p.add_argument("--threads", type=int, default=1)
        p.add_argument(
            "--eliminate",
            action="store_true",
            help="close two-variable subtrees directly",
        )
        p.add_argument("--backend", choices=("compiled", "pure"), default=None)

    p = sub.add_parser("corners", parents=[shared], help="maximal corners")
    p.add_argument("file")
    engine_flags(p)
    p.set_defaults(func=_cmd_corners)

    p = sub.add_parser(
        "decompose", parents=[shared], help="irredundant irreducible decomposition"
    )
    p.add_argument("file")
    engine_flags(p)
    p.set_defaults(func=_cmd_decompose)

    p = sub.add_parser("stanley", parents=[shared], help="Stanley decomposition")
    p.add_argument("file")
    p.set_defaults(func=_cmd_stanley)

    p = sub.add_parser(
        "betti", parents=[shared], help="multigraded Betti-number bounds"
    )
    p.add_argument("file")
    p.add_argument(
        "--exact",
        action="store_true",
        help="add brute-force homology ranks (small ideals only)",
    )
    p.set_defaults(func=_cmd_betti)

    p = sub.add_parser("hilbert", parents=[shared], help="Hilbert series of R/I")
    p.add_argument("file")
    p.add_argument("--degree", type=int, required=True, help="expand up to t^D")
    p.set_defaults(func=_cmd_hilbert)

    p = sub.add_parser("mvt", parents=[shared], help="splitting-tree inspection")
    p.add_argument("file")
    p.add_argument("--dump", action="store_true", help="print every node")
    p.add_argument("--no-prune", action="store_true")
    p.add_argument("--strategy", choices=sorted(_STRATEGIES), default="lex")
    p.set_defaults(func=_cmd_mvt)

    p = sub.add_parser("random", parents=[shared], help="generate a seeded ideal")
    p.add_argument("--vars", type=int, required=True)
    p.add_argument("--gens", type=int, required=True)
    p.add_argument("--max-exp", type=int, required=True)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--generic", action="store_true")
    p.add_argument("-o", "--output", metavar="FILE")
    p.set_defaults(func=_cmd_random)

    p = sub.add_parser(
        "verify", parents=[shared], help="run the brute-force checkers"
    )
    p.add_argument("file")
    p.set_defaults(func=_cmd_verify)

    p = sub.add_parser("bench", parents=[shared], help="backend timing harness")
    p.add_argument(
        "--spec",
        required=True,
        help="ideal shape, e.g. n=10,r=40,e=30,seed=7,generic,reps=3",
    )
    p.add_argument("--threads", type=int, default=1)
    p.add_argument(
        "--backend", choices=("compiled", "pure", "both"), default="both"
    )
    p.set_defaults(func=_cmd_bench)
    return parser


def run_command(argv) -> int:
    """Dispatch one invocation; 0 success, 1 domain error, 2 usage error."""
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else 2
    try:
        return args.func(args)
    except MvdecompError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


def main() -> None:
    sys.exit(run_command(sys.argv[1:]))


if __name__ == "__main__":
    main()
