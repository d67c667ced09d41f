"""Campaign runner: generate corpora, run checkers, emit deterministic reports.

Output is JSON lines (one report object per line) or a CSV summary.  Reports
are buffered and written in instance order, so the thread count never
changes output bytes.  Exit codes: 0 all confirmed/vacuous, 1 any VIOLATION,
2 usage or input error, 3 indeterminate results present under --strict.
"""

from __future__ import annotations

import argparse
import json
import math
import os
import sys
from concurrent.futures import ThreadPoolExecutor

from . import __version__
from .graphs import (
    Graph,
    Graph6Error,
    GRAPH6_MAX_N,
    complete_graph,
    complete_multipartite,
    cycle_graph,
    gnp,
    parse_edge_list,
    parse_graph6,
    to_edge_list,
    to_graph6,
    turan_graph,
)
from .multipartite import (
    DEFAULT_BUDGET,
    SearchBudgetExceeded,
    find_complete_multipartite,
    max_balanced_biclique,
)
from .spectral import DEFAULT_TOL, spectral_radius
from .theorems import (
    Verdict,
    chromatic_number,
    fact1_check,
    fact2_check,
    fact3_check,
    proof_chain_check,
    spex_scan,
    theorem1_check,
    theorem2_gap,
)

EXIT_OK = 0
EXIT_VIOLATION = 1
EXIT_USAGE = 2
EXIT_INDETERMINATE = 3


class UsageError(Exception):
    pass


def _parse_int_list(text: str) -> list[int]:
    return [int(tok) for tok in text.split(",") if tok.strip()]


def _parse_float_list(text: str) -> list[float]:
    return [float(tok) for tok in text.split(",") if tok.strip()]


def _parse_seeds(text: str) -> list[int]:
    """Seed spec: '7', '1,2,5', or a range '1..20'."""
    if ".." in text:
        lo, hi = text.split("..", 1)
        return list(range(int(lo), int(hi) + 1))
    return _parse_int_list(text)


def named_graph(spec: str) -> Graph:
    """Pattern graph from 'K<n>', 'C<n>', or a graph6 literal."""
    s = spec.strip()
    if len(s) >= 2 and s[0] in "KC" and s[1:].isdigit():
        k = int(s[1:])
        return complete_graph(k) if s[0] == "K" else cycle_graph(k)
    return parse_graph6(s)


def _gather_instances(args) -> list[tuple[str, Graph]]:
    """Instance corpus in deterministic order: --in, --turan, --multipartite, --gnp."""
    instances: list[tuple[str, Graph]] = []
    if getattr(args, "infile", None):
        path = args.infile
        with open(path, encoding="utf-8") as fh:
            text = fh.read()
        name = os.path.basename(path)
        if args.in_format == "edgelist":
            instances.append((f"{name}#0", parse_edge_list(text)))
        else:
            for i, line in enumerate(ln for ln in text.splitlines() if ln.strip()):
                instances.append((f"{name}#{i}", parse_graph6(line)))
    if getattr(args, "turan", None):
        n, r = _parse_int_list(args.turan)
        instances.append((f"turan-n{n}-r{r}", turan_graph(n, r)))
    if getattr(args, "multipartite", None):
        sizes = _parse_int_list(args.multipartite)
        label = "x".join(str(s) for s in sizes)
        instances.append((f"kpartite-{label}", complete_multipartite(sizes)))
    if getattr(args, "gnp", None):
        parts = args.gnp.split(",")
        if len(parts) != 2:
            raise UsageError("--gnp expects 'n,p'")
        n, p = int(parts[0]), float(parts[1])
        count = getattr(args, "count", 1)
        seed = getattr(args, "seed", 0)
        for i in range(count):
            instances.append(
                (f"gnp-n{n}-p{p}-seed{seed}-i{i:04d}", gnp(n, p, seed + i))
            )
    if not instances:
        raise UsageError("no input graphs: use --in, --turan, --multipartite or --gnp")
    return instances


def _config_echo(args, subcommand: str) -> dict:
    # thread count is deliberately absent: identical configs must produce
    # identical bytes at any parallelism
    keys = (
        "infile", "in_format", "turan", "multipartite", "gnp", "count", "seed",
        "r", "c", "sizes", "n", "p", "seeds", "f", "n_max", "r_max",
        "tol", "budget", "strict", "format",
    )
    cfg = {"subcommand": subcommand}
    for k in keys:
        if hasattr(args, k):
            cfg[k] = getattr(args, k)
    return cfg


def _base_report(instance_id: str, subcommand: str, config: dict, g: Graph | None) -> dict:
    rep: dict = {
        "id": instance_id,
        "subcommand": subcommand,
        "params": {"n": None, "r": None, "c": None},
        "mu": None,
        "kr": None,
        "verdict": Verdict.CONFIRMED.value,
        "notes": "",
        "version": __version__,
        "config": config,
        "graph6": None,
    }
    if g is not None:
        rep["params"]["n"] = g.n
        rep["graph6"] = to_graph6(g) if g.n <= GRAPH6_MAX_N else None
        if g.n > GRAPH6_MAX_N:
            rep["notes"] = f"graph omitted: n = {g.n} > {GRAPH6_MAX_N}"
    return rep


def _merge_theorem_report(base: dict, tr) -> dict:
    d = tr.to_dict()
    out = dict(base)
    out["params"] = {
        "n": d["params"].get("n"),
        "r": d["params"].get("r"),
        "c": d["params"].get("c"),
    }
    out["mu"] = d["mu"]
    out["kr"] = d["kr"]
    out["verdict"] = d["verdict"]
    if base.get("notes") and d["notes"]:
        out["notes"] = base["notes"] + "; " + d["notes"]
    else:
        out["notes"] = d["notes"] or base.get("notes", "")
    if "witness" in d:
        out["witness"] = d["witness"]
    if "quantities" in d:
        out["quantities"] = d["quantities"]
    return out


def _run_parallel(tasks, threads: int) -> list[dict]:
    """Evaluate tasks (callables) preserving order; thread count never changes bytes."""
    if threads <= 1:
        return [t() for t in tasks]
    with ThreadPoolExecutor(max_workers=threads) as pool:
        futures = [pool.submit(t) for t in tasks]
        return [f.result() for f in futures]


def _write_reports(reports: list[dict], args) -> None:
    if args.format == "csv":
        lines = ["id,verdict,mu_low,mu_high,kr,rhs,s_target,t_target"]
        for rep in reports:
            mu = rep.get("mu")
            mu_low = repr(mu["value"] - mu["residual"]) if mu else ""
            mu_high = repr(mu["value"] + mu["residual"]) if mu else ""
            q = rep.get("quantities", {})
            rhs = ""
            for key in ("rhs_low", "bound_strict", "count_threshold", "threshold", "rhs_4r1nn_rr"):
                if key in q:
                    rhs = repr(q[key])
                    break
            s_target = repr(q["s_target"]) if "s_target" in q else ""
            t_target = repr(q["t_target"]) if "t_target" in q else ""
            kr = "" if rep.get("kr") is None else str(rep["kr"])
            lines.append(
                f"{rep['id']},{rep['verdict']},{mu_low},{mu_high},{kr},{rhs},{s_target},{t_target}"
            )
        text = "\n".join(lines) + "\n"
    else:
        text = "".join(
            json.dumps(rep, sort_keys=True, separators=(",", ":")) + "\n"
            for rep in reports
        )
    if args.out:
        with open(args.out, "w", encoding="utf-8", newline="") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _exit_code(reports: list[dict], strict: bool) -> int:
    verdicts = {rep["verdict"] for rep in reports}
    if Verdict.VIOLATION.value in verdicts:
        return EXIT_VIOLATION
    if strict and Verdict.INDETERMINATE.value in verdicts:
        return EXIT_INDETERMINATE
    return EXIT_OK


# ---------------------------------------------------------------------------
# subcommand drivers
# ---------------------------------------------------------------------------

def _cmd_gen(args) -> int:
    if args.kind == "turan":
        n, r = args.n, args.r
        graphs = [turan_graph(n, r)]
    elif args.kind == "multipartite":
        graphs = [complete_multipartite(_parse_int_list(args.sizes))]
    else:  # gnp
        graphs = [gnp(args.n, args.p, args.seed + i) for i in range(args.count)]
    if args.format == "edgelist":
        if len(graphs) > 1:
            raise UsageError("edgelist output supports a single graph")
        text = to_edge_list(graphs[0])
    else:
        text = "".join(to_graph6(g) + "\n" for g in graphs)
    if args.out:
        with open(args.out, "w", encoding="utf-8", newline="") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    return EXIT_OK


def _cmd_mu(args) -> int:
    config = _config_echo(args, "mu")
    instances = _gather_instances(args)

    def task(item):
        iid, g = item
        rep = _base_report(iid, "mu", config, g)
        est = spectral_radius(g, args.tol)
        rep["mu"] = {"value": est.value, "residual": est.residual}
        rep["quantities"] = {"iterations": est.iterations, "converged": est.converged}
        if not est.converged:
            rep["verdict"] = Verdict.INDETERMINATE.value
            rep["notes"] = "eigenvalue iteration did not converge"
        return rep

    reports = _run_parallel([lambda it=i: task(it) for i in instances], args.threads)
    _write_reports(reports, args)
    return _exit_code(reports, args.strict)


def _cmd_cliques(args) -> int:
    from .cliques import count_cliques

    config = _config_echo(args, "cliques")
    instances = _gather_instances(args)

    def task(item):
        iid, g = item
        rep = _base_report(iid, "cliques", config, g)
        rep["params"]["r"] = args.r
        rep["kr"] = count_cliques(g, args.r)
        return rep

    reports = _run_parallel([lambda it=i: task(it) for i in instances], args.threads)
    _write_reports(reports, args)
    return _exit_code(reports, args.strict)


def _cmd_find_kpartite(args) -> int:
    config = _config_echo(args, "find-kpartite")
    instances = _gather_instances(args)
    sizes = _parse_int_list(args.sizes)

    def task(item):
        iid, g = item
        rep = _base_report(iid, "find-kpartite", config, g)
        try:
            w = find_complete_multipartite(g, sizes, budget=args.budget)
        except SearchBudgetExceeded:
            rep["verdict"] = Verdict.INDETERMINATE.value
            rep["notes"] = "search budget exhausted"
            return rep
        if w is None:
            rep["verdict"] = Verdict.VACUOUS.value
            rep["notes"] = "exhaustive search: no witness exists"
        else:
            rep["witness"] = w.to_lists()
        return rep

    reports = _run_parallel([lambda it=i: task(it) for i in instances], args.threads)
    _write_reports(reports, args)
    return _exit_code(reports, args.strict)


def _cmd_verify(args) -> int:
    config = _config_echo(args, f"verify-{args.check}")
    if args.check == "fact3":
        if args.n_max is None or args.r_max is None:
            raise UsageError("verify fact3 needs --n-max and --r-max")
        tasks = []
        for r in range(1, args.r_max + 1):
            for n in range(0, args.n_max + 1):
                tasks.append((f"fact3-n{n}-r{r}", n, r))

        def t3(item):
            iid, n, r = item
            rep = _base_report(iid, "verify-fact3", config, None)
            tr = fact3_check(n, r, instance_id=iid)
            return _merge_theorem_report(rep, tr)

        reports = _run_parallel([lambda it=t: t3(it) for t in tasks], args.threads)
        _write_reports(reports, args)
        return _exit_code(reports, args.strict)

    instances = _gather_instances(args)
    r_values = _parse_int_list(args.r) if args.r else []
    c_values = _parse_float_list(args.c) if args.c else []
    if not r_values:
        raise UsageError(f"verify {args.check} needs --r")
    needs_c = args.check in ("fact2", "theorem1", "chain")
    if needs_c and not c_values:
        raise UsageError(f"verify {args.check} needs --c")
    if not needs_c:
        c_values = [None]

    def task(item):
        (iid, g), r, c = item
        suffix = f"-r{r}" + (f"-c{c}" if c is not None else "")
        rep = _base_report(iid + suffix, f"verify-{args.check}", config, g)
        if args.check == "fact1":
            tr = fact1_check(g, r, tol=args.tol, instance_id=iid + suffix)
        elif args.check == "fact2":
            tr = fact2_check(g, r, c, budget=args.budget, instance_id=iid + suffix)
        elif args.check == "theorem1":
            tr = theorem1_check(
                g, r, c, tol=args.tol, budget=args.budget, instance_id=iid + suffix
            )
        else:  # chain
            tr = proof_chain_check(g, r, c, tol=args.tol, instance_id=iid + suffix)
        return _merge_theorem_report(rep, tr)

    items = [(inst, r, c) for inst in instances for r in r_values for c in c_values]
    reports = _run_parallel([lambda it=i: task(it) for i in items], args.threads)
    _write_reports(reports, args)
    return _exit_code(reports, args.strict)


def _cmd_spex(args) -> int:
    config = _config_echo(args, "spex")
    f = named_graph(args.f)
    rep = _base_report(f"spex-n{args.n}-f{args.f}", "spex", config, None)
    res = spex_scan(args.n, f, max_n=args.max_n, tol=args.tol)
    est = spectral_radius(res.witness, args.tol)
    rep["params"]["n"] = args.n
    rep["mu"] = {"value": res.max_mu, "residual": est.residual}
    rep["graph6"] = to_graph6(res.witness)
    rep["quantities"] = {
        "max_mu": res.max_mu,
        "maximal_graphs": res.maximal_graphs,
    }
    _write_reports([rep], args)
    return _exit_code([rep], args.strict)


def _cmd_gap(args) -> int:
    config = _config_echo(args, "gap")
    f = named_graph(args.f)
    rep = _base_report(f"gap-n{args.n}-f{args.f}", "gap", config, None)
    tr = theorem2_gap(args.n, f, max_n=args.max_n, tol=args.tol)
    out = _merge_theorem_report(rep, tr)
    out["params"]["n"] = args.n
    _write_reports([out], args)
    return _exit_code([out], args.strict)


def _cmd_biclique_scan(args) -> int:
    config = _config_echo(args, "biclique-scan")
    seeds = _parse_seeds(args.seeds)
    alarm = 4.0 * math.log(args.n)

    def task(seed):
        g = gnp(args.n, args.p, seed)
        rep = _base_report(f"biclique-n{args.n}-p{args.p}-seed{seed}", "biclique-scan", config, g)
        res = max_balanced_biclique(g, budget=args.budget)
        rep["quantities"] = {
            "side": res.side,
            "exact": res.exact,
            "alarm_threshold": alarm,
        }
        if res.witness is not None:
            rep["witness"] = res.witness.to_lists()
        if not res.exact:
            rep["verdict"] = Verdict.INDETERMINATE.value
            rep["notes"] = "budget exhausted: side is a lower bound"
        elif res.side > alarm:
            rep["notes"] = f"alarm: side {res.side} exceeds 4 ln n = {alarm:.3f}"
        return rep

    reports = _run_parallel([lambda s=s: task(s) for s in seeds], args.threads)
    _write_reports(reports, args)
    return _exit_code(reports, args.strict)


# ---------------------------------------------------------------------------
# parser
# ---------------------------------------------------------------------------

def _add_common(p: argparse.ArgumentParser) -> None:
    p.add_argument("--tol", type=float, default=DEFAULT_TOL, help="eigenvalue residual tolerance")
    p.add_argument("--budget", type=int, default=DEFAULT_BUDGET, help="search node-expansion budget")
    p.add_argument(
        "--threads",
        type=int,
        default=int(os.environ.get("SPECTRAL_TURAN_THREADS", "1")),
        help="worker threads (output bytes are thread-count independent)",
    )
    p.add_argument("--strict", action="store_true", help="exit 3 when indeterminate results occur")
    p.add_argument("--out", default=None, help="output path (default stdout)")
    p.add_argument("--format", choices=("jsonl", "csv"), default="jsonl")


def _add_inputs(p: argparse.ArgumentParser) -> None:
    p.add_argument("--in", dest="infile", default=None, help="input graph file")
    p.add_argument("--in-format", choices=("graph6", "edgelist"), default="graph6")
    p.add_argument("--turan", default=None, metavar="N,R", help="Turan graph instance")
    p.add_argument("--multipartite", default=None, metavar="S1,S2,...", help="complete multipartite instance")
    p.add_argument("--gnp", default=None, metavar="N,P", help="random graph instances")
    p.add_argument("--count", type=int, default=1, help="number of gnp instances")
    p.add_argument("--seed", type=int, default=0, help="base seed (instance i uses seed + i)")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="spectral-turan",
        description="Verify the spectral radius / clique count / multipartite subgraph chain on exact graph corpora.",
    )
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = parser.add_subparsers(dest="command", required=True)

    p_gen = sub.add_parser("gen", help="generate graphs")
    gen_sub = p_gen.add_subparsers(dest="kind", required=True)
    g_turan = gen_sub.add_parser("turan")
    g_turan.add_argument("--n", type=int, required=True)
    g_turan.add_argument("--r", type=int, required=True)
    g_multi = gen_sub.add_parser("multipartite")
    g_multi.add_argument("--sizes", required=True, metavar="S1,S2,...")
    g_gnp = gen_sub.add_parser("gnp")
    g_gnp.add_argument("--n", type=int, required=True)
    g_gnp.add_argument("--p", type=float, required=True)
    g_gnp.add_argument("--seed", type=int, default=0)
    g_gnp.add_argument("--count", type=int, default=1)
    for gp in (g_turan, g_multi, g_gnp):
        gp.add_argument("--format", choices=("graph6", "edgelist"), default="graph6")
        gp.add_argument("--out", default=None)
    p_gen.set_defaults(func=_cmd_gen)

    p_mu = sub.add_parser("mu", help="certified spectral radius")
    _add_inputs(p_mu)
    _add_common(p_mu)
    p_mu.set_defaults(func=_cmd_mu)

    p_cl = sub.add_parser("cliques", help="exact r-clique count")
    p_cl.add_argument("--r", type=int, required=True)
    _add_inputs(p_cl)
    _add_common(p_cl)
    p_cl.set_defaults(func=_cmd_cliques)

    p_fk = sub.add_parser("find-kpartite", help="search complete multipartite subgraph")
    p_fk.add_argument("--sizes", required=True, metavar="S1,S2,...")
    _add_inputs(p_fk)
    _add_common(p_fk)
    p_fk.set_defaults(func=_cmd_find_kpartite)

    p_ver = sub.add_parser("verify", help="run a theorem/fact checker over a corpus")
    p_ver.add_argument("check", choices=("fact1", "fact2", "fact3", "theorem1", "chain"))
    p_ver.add_argument("--r", default=None, help="clique orders, comma separated")
    p_ver.add_argument("--c", default=None, help="c parameters, comma separated")
    p_ver.add_argument("--n-max", dest="n_max", type=int, default=None, help="fact3 sweep bound")
    p_ver.add_argument("--r-max", dest="r_max", type=int, default=None, help="fact3 sweep bound")
    _add_inputs(p_ver)
    _add_common(p_ver)
    p_ver.set_defaults(func=_cmd_verify)

    p_spex = sub.add_parser("spex", help="exhaustive max spectral radius over F-free graphs")
    p_spex.add_argument("--n", type=int, required=True)
    p_spex.add_argument("--f", required=True, help="pattern: K<n>, C<n>, or graph6")
    p_spex.add_argument("--max-n", dest="max_n", type=int, default=8)
    _add_common(p_spex)
    p_spex.set_defaults(func=_cmd_spex)

    p_gap = sub.add_parser("gap", help="finite-n sandwich around the extremal limit")
    p_gap.add_argument("--n", type=int, required=True)
    p_gap.add_argument("--f", required=True, help="pattern: K<n>, C<n>, or graph6")
    p_gap.add_argument("--max-n", dest="max_n", type=int, default=8)
    _add_common(p_gap)
    p_gap.set_defaults(func=_cmd_gap)

    p_bc = sub.add_parser("biclique-scan", help="max balanced biclique over seeded random graphs")
    p_bc.add_argument("--n", type=int, required=True)
    p_bc.add_argument("--p", type=float, required=True)
    p_bc.add_argument("--seeds", required=True, help="'7', '1,2,5' or '1..20'")
    _add_common(p_bc)
    p_bc.set_defaults(func=_cmd_biclique_scan)

    return parser


def cli_main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        # argparse exits 2 on usage errors, 0 on --help/--version
        return int(exc.code or 0)
    try:
        return args.func(args)
    except (UsageError, Graph6Error, ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


def main() -> None:
    sys.exit(cli_main())


if __name__ == "__main__":
    main()
