"""Command-line entry point: ``turan4 <command> ...``.

Exit codes: 0 success, 1 verification failure, 2 solver budget exhausted,
3 usage or input error.
"""

from __future__ import annotations

import argparse
import json
import sys
from dataclasses import dataclass
from pathlib import Path

from . import __version__, bounds, verify
from .constructions import NAMES, build, rainbow_counts
from .constructions.circular import circular_edge_formula
from .constructions.expansion import expansion_edge_formula
from .constructions.hm import HmLambdaSpec, hm_edge_formula, hm_type_formula
from .hypergraph import dumps_json, dumps_t4g, read_graph
from .solver import SolveBudget, Status, alpha_bruteforce, alpha_exact

EXIT_OK, EXIT_FAIL, EXIT_BUDGET, EXIT_USAGE = 0, 1, 2, 3


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


@dataclass(frozen=True)
class RunConfig:
    command: str
    seed: int
    max_nodes: int | None
    max_seconds: float | None

    def budget(self, n: int) -> SolveBudget:
        if self.max_nodes is None and self.max_seconds is None:
            return SolveBudget.default_for(n)
        return SolveBudget(self.max_nodes, self.max_seconds)

    def meta(self) -> dict:
        return {"tool": "turan4", "version": __version__, "command": self.command, "seed": self.seed,
                "budget_nodes": self.max_nodes, "budget_seconds": self.max_seconds}

    def header(self, prefix: str = "#") -> str:
        m = self.meta()
        body = " ".join(f"{k}={m[k]}" for k in ("version", "command", "seed", "budget_nodes", "budget_seconds"))
        if prefix == "<!--":
            return f"<!-- turan4 {body} -->"
        return f"{prefix} turan4 {body}"


def _global_flags(p: argparse.ArgumentParser, suppress: bool) -> None:
    d = (lambda v: argparse.SUPPRESS) if suppress else (lambda v: v)
    p.add_argument("--seed", type=int, default=d(0), help="seed for every random choice (default 0)")
    p.add_argument("--budget-nodes", type=int, default=d(None), help="solver node cap")
    p.add_argument("--budget-seconds", type=float, default=d(None), help="solver time cap")


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    _global_flags(common, suppress=True)

    p = _Parser(prog="turan4", description=__doc__.splitlines()[0])
    p.add_argument("--version", action="version", version=f"turan4 {__version__}")
    _global_flags(p, suppress=False)
    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)

    c = sub.add_parser("construct", parents=[common], help="build a construction and print its census")
    c.add_argument("name", help=f"one of {', '.join(NAMES)}")
    c.add_argument("--n", type=int, default=3)
    c.add_argument("--m", type=int, default=None)
    c.add_argument("--random", action="store_true", help="random parity matrix (seeded)")
    c.add_argument("--variant", type=int, default=0)
    c.add_argument("--example", type=int, default=1, choices=(1, 2))
    c.add_argument("--size", type=int, default=2)
    c.add_argument("--part", default="zerosum", choices=("zerosum", "rainbow1"))
    c.add_argument("--k", type=int, default=2)
    c.add_argument("--rule", default="swapped", choices=("swapped", "literal"))
    c.add_argument("--lambda", dest="lam", type=int, default=1)
    c.add_argument("--no-validate", action="store_true", help="skip hypothesis checks of circular parts")
    c.add_argument("--counts-only", action="store_true", help="closed-form counts, no materialization")
    c.add_argument("--out", type=Path, help="write the graph here")
    c.add_argument("--graph-format", default="t4g", choices=("t4g", "json"))

    a = sub.add_parser("alpha", parents=[common], help="independence number of a graph file")
    a.add_argument("file", type=Path)
    a.add_argument("--bruteforce", action="store_true", help="use subset enumeration")

    v = sub.add_parser("verify", parents=[common], help="run reproducibility suites")
    v.add_argument("suite", choices=verify.SUITES + ("all",))
    v.add_argument("--samples", type=int, default=1000)
    v.add_argument("--full", action="store_true", help="include the largest H_m,lambda builds")
    v.add_argument("--format", default="md", choices=("md", "json"))

    b = sub.add_parser("bounds", parents=[common], help="density and Turan-number tables")
    b.add_argument("table", choices=("table9", "tvalues"))
    b.add_argument("--format", default="md", choices=("md", "json", "csv"))
    b.add_argument("--restarts", type=int, default=32)

    o = sub.add_parser("optimize", parents=[common], help="optimize expansion part sizes")
    o.add_argument("example", choices=("example1", "example2"))
    o.add_argument("--restarts", type=int, default=32)

    r = sub.add_parser("report", parents=[common], help="write table9 md/json/csv and a figure")
    r.add_argument("--out-dir", type=Path, default=Path("report"))
    r.add_argument("--restarts", type=int, default=32)
    return p


def _counts(args) -> dict:
    name = args.name
    if name == "rainbow":
        c = rainbow_counts(args.k)
        return {"v": c.pop("v"), "e": sum(c.values()), "census": c}
    if name == "hm":
        spec = HmLambdaSpec(args.m if args.m is not None else 4, args.lam)
        per = hm_type_formula(spec.lam)
        return {"v": spec.v, "e": hm_edge_formula(spec.m, spec.lam),
                "census": {t: spec.m * c for t, c in per.items()}}
    if name == "circular":
        from .constructions import CircularSpec, circular_part

        spec = CircularSpec.uniform(circular_part(args.part, args.rule), args.m if args.m is not None else 2)
        f = circular_edge_formula(spec)
        return {"v": f.pop("v"), "e": f.pop("total"), "census": f}
    if name == "expansion":
        from .constructions import example1_spec, example2_spec

        spec = (example1_spec if args.example == 1 else example2_spec)(args.size)
        f = expansion_edge_formula(spec)
        return {"v": sum(spec.sizes), "e": f.pop("total"), "census": f}
    raise UsageError(f"--counts-only is not available for {name}")


def cmd_construct(args, cfg: RunConfig) -> int:
    if args.counts_only:
        info = _counts(args)
        print(cfg.header())
        print(json.dumps({"name": args.name, **info}, sort_keys=True))
        return EXIT_OK
    m_default = {"parity": 3, "circular": 2, "hm": 4}.get(args.name, 3)
    params = {
        "n": args.n, "m": args.m if args.m is not None else m_default, "random": args.random,
        "seed": cfg.seed, "variant": args.variant, "example": args.example, "size": args.size,
        "part": args.part, "k": args.k, "rule": args.rule, "lam": args.lam,
        "validate": not args.no_validate,
    }
    h = build(args.name, **params)
    if args.out:
        text = dumps_t4g(h) if args.graph_format == "t4g" else dumps_json(h)
        args.out.write_text(text)
    print(cfg.header())
    print(json.dumps({"name": h.name, "v": h.n, "e": h.e, "census": h.census}, sort_keys=True))
    return EXIT_OK


def cmd_alpha(args, cfg: RunConfig) -> int:
    h = read_graph(args.file)
    n = h.n
    res = alpha_bruteforce(h) if args.bruteforce else alpha_exact(h, cfg.budget(n))
    print(json.dumps({"meta": cfg.meta(), **res.to_json()}, sort_keys=True))
    return EXIT_OK if res.status is Status.EXACT else EXIT_BUDGET


def cmd_verify(args, cfg: RunConfig) -> int:
    checks = verify.run(args.suite, samples=args.samples, seed=cfg.seed, full=args.full)
    failed = [c for c in checks if c.passed is False]
    if args.format == "json":
        print(json.dumps({"meta": cfg.meta(), "checks": [c.to_json() for c in checks],
                          "failed": len(failed)}, indent=2, sort_keys=True))
    else:
        print(cfg.header())
        sys.stdout.write(verify.render(checks))
        print(f"{len(checks) - len(failed)}/{len(checks)} checks without failure")
    return EXIT_FAIL if failed else EXIT_OK


def _table9_text(rows, fmt: str, cfg: RunConfig) -> str:
    body = bounds.render_table9(rows, fmt)
    if fmt == "json":
        return json.dumps({"meta": cfg.meta(), "rows": json.loads(body)}, indent=2, sort_keys=True) + "\n"
    return cfg.header("<!--" if fmt == "md" else "#") + "\n" + body


def cmd_bounds(args, cfg: RunConfig) -> int:
    if args.table == "table9":
        rows = bounds.table9_report(restarts=args.restarts, seed=cfg.seed)
        sys.stdout.write(_table9_text(rows, args.format, cfg))
        return EXIT_OK
    if args.format == "csv":
        raise UsageError("tvalues supports md and json")
    table = bounds.seed_table()
    body = bounds.render_tvalues(table, args.format)
    if args.format == "json":
        sys.stdout.write(json.dumps({"meta": cfg.meta(), "rows": json.loads(body)}, indent=2, sort_keys=True) + "\n")
    else:
        sys.stdout.write(cfg.header("<!--") + "\n" + body)
    return EXIT_OK


def cmd_optimize(args, cfg: RunConfig) -> int:
    from .constructions import example1_spec, example2_spec
    from .optimizer import ExpansionObjective, minimize

    spec = example1_spec() if args.example == "example1" else example2_spec()
    res = minimize(ExpansionObjective.from_spec(spec), seed=cfg.seed, restarts=args.restarts)
    print(json.dumps({"meta": cfg.meta(), **res.to_json()}, indent=2, sort_keys=True))
    return EXIT_OK


def cmd_report(args, cfg: RunConfig) -> int:
    from .plotting import plot_table9

    rows = bounds.table9_report(restarts=args.restarts, seed=cfg.seed)
    out = args.out_dir
    out.mkdir(parents=True, exist_ok=True)
    for fmt in ("md", "json", "csv"):
        (out / f"table9.{fmt}").write_text(_table9_text(rows, fmt, cfg))
    plot_table9(rows, out / "table9.png")
    sys.stdout.write(_table9_text(rows, "md", cfg))
    return EXIT_OK


COMMANDS = {
    "construct": cmd_construct,
    "alpha": cmd_alpha,
    "verify": cmd_verify,
    "bounds": cmd_bounds,
    "optimize": cmd_optimize,
    "report": cmd_report,
}


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    cfg = RunConfig(args.command, args.seed, args.budget_nodes, args.budget_seconds)
    try:
        return COMMANDS[args.command](args, cfg)
    except (ValueError, UsageError, OSError) as exc:
        print(f"turan4: error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
