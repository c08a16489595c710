"""Command-line interface: ``galedesign <command> [options]``.

Exit codes: 0 success / pass, 1 verification failure, 2 input error,
3 brute-force budget exceeded.
"""
from __future__ import annotations

import argparse
import json
import os
import sys
from collections import Counter
from dataclasses import dataclass
from fractions import Fraction

from . import cubes_codes, gale, graphs, io, polytope, spectral
from .errors import BudgetExceeded, GaleDesignError

EXIT_OK, EXIT_FAIL, EXIT_INPUT, EXIT_BUDGET = 0, 1, 2, 3

FAMILIES = {
    "cycle": ("n", "cycle C_n"),
    "cocktail": ("d", "cocktail party graph on 2d vertices"),
    "hypercube": ("d", "hypercube Q_d"),
    "cayley": ("n,S", "Cayley graph of Z_n with connection set S"),
}


class InputError(GaleDesignError):
    pass


@dataclass
class RunConfig:
    graph: graphs.Graph
    order_text: str
    ties: str
    k: str | None
    tol_cluster: float
    tol_facet: float
    tol_verify: float
    fmt: str
    one_indexed: bool
    max_support: int
    mode: str


def threads() -> int:
    raw = os.environ.get("GALEDESIGN_THREADS", "")
    if not raw:
        return 1
    try:
        n = int(raw)
    except ValueError as e:
        raise InputError(f"GALEDESIGN_THREADS must be a positive integer, got {raw!r}") from e
    if n < 1:
        raise InputError("GALEDESIGN_THREADS must be positive")
    return n


# ---------------------------------------------------------------- config

def build_graph(a) -> graphs.Graph:
    if bool(a.family) == bool(a.graph_file):
        raise InputError("give exactly one of --family or --graph-file")
    if a.graph_file:
        return io.load_graph(a.graph_file, a.one_indexed)
    fam = a.family.lower().replace("-", "_")
    if fam in ("cycle",):
        return graphs.cycle(_need(a.n, "--n"))
    if fam in ("cocktail", "cocktail_party"):
        return graphs.cocktail_party(_need(a.d, "--d"))
    if fam in ("hypercube", "cube"):
        return graphs.hypercube(_need(a.d, "--d"))
    if fam == "cayley":
        if not a.S:
            raise InputError("--S is required for the cayley family")
        return graphs.cayley_cyclic(_need(a.n, "--n"), [int(x) for x in a.S.split(",")])
    return graphs.named(fam)


def _need(v, flag):
    if v is None:
        raise InputError(f"{flag} is required for this family")
    return v


def config_from_args(a) -> RunConfig:
    return RunConfig(build_graph(a), a.order, a.ties, a.k, a.tol_cluster, a.tol_facet,
                     a.tol_verify, a.format, a.one_indexed, a.max_support, getattr(a, "mode", "facets"))


def get_spectrum(cfg: RunConfig) -> spectral.Spectrum:
    g = cfg.graph
    try:
        return spectral.analytic_spectrum(g)
    except GaleDesignError:
        return spectral.decompose(graphs.normalized_adjacency(g), cfg.tol_cluster, source=g.name)


def _parse_value(text: str) -> float:
    try:
        return float(Fraction(text))
    except (ValueError, ZeroDivisionError):
        return float(text)


def resolve_order(s: spectral.Spectrum, text: str, ties: str) -> spectral.Ordering:
    """Grammar: ``frequency[:policy]``, ``last=lambdaN`` (N-th eigenspace in
    frequency order), ``last=value:X``, ``last=key:K``, ``perm=1,4,3,2``
    (frequency positions, 1-based)."""
    text = text.strip()
    if text.startswith("frequency"):
        _, _, pol = text.partition(":")
        return spectral.frequency_order(s, pol or ties)
    freq = spectral.frequency_order(s, ties)
    if text.startswith("last="):
        target = text[5:]
        if target.startswith("lambda"):
            pos = int(target[6:]) - 1
            if not 1 <= pos < s.m:
                raise InputError(f"{target} is not an eigenspace index between 2 and {s.m}")
            idx = freq.perm[pos]
        elif target.startswith("value:"):
            idx = s.index_of_value(_parse_value(target[6:]), 1e-6)
        elif target.startswith("key:"):
            key = target[4:]
            idx = s.index_of_key(int(key) if key.lstrip("-").isdigit() else key)
        else:
            raise InputError(f"cannot parse order {text!r}")
        if freq.perm[-1] == idx:
            return freq
        other = spectral.frequency_order(s, "negative_first" if ties == "positive_first" else "positive_first")
        if other.perm[-1] == idx:
            return other  # a tie decides which eigenspace is last; flip its policy
        return spectral.order_with_last(s, idx, ties)
    if text.startswith("perm="):
        pos = [int(x) - 1 for x in text[5:].split(",")]
        if sorted(pos) != list(range(s.m)):
            raise InputError(f"perm must list 1..{s.m} exactly once")
        return spectral.custom_order(s, [freq.perm[p] for p in pos])
    raise InputError(f"cannot parse order {text!r}")


def resolve_k(o: spectral.Ordering, k: str | None) -> int:
    if k is None or k == "extremal":
        return o.m - 1
    try:
        return int(k)
    except ValueError as e:
        raise InputError(f"--k must be an integer or 'extremal', got {k!r}") from e


def _header(cfg: RunConfig, o: spectral.Ordering, k: int | None = None) -> list:
    lines = [f"graph: {cfg.graph.name or 'graph'} (n={cfg.graph.n}, degree={cfg.graph.degree})",
             f"ordering: {o.describe()}"]
    for t in o.ties:
        labels = ", ".join(o.spectrum.clusters[i].label() for i in t.clusters)
        lines.append(f"tie: |lambda| equal for {labels}; resolved {t.policy}")
    if k is not None:
        lines.append(f"k: {k}")
    return lines


def _labels(js, one_indexed) -> str:
    off = int(one_indexed)
    return "{" + ",".join(str(j + off) for j in js) + "}"


def _fmt_w(w) -> str:
    return str(w) if isinstance(w, Fraction) else f"{w:.10g}"


# ---------------------------------------------------------------- commands

def cmd_spectrum(cfg: RunConfig, out) -> int:
    s = get_spectrum(cfg)
    o = resolve_order(s, cfg.order_text, cfg.ties)
    if cfg.fmt == "json":
        out.write(io.dumps(io.spectrum_to_json(s, o)))
        return EXIT_OK
    for line in _header(cfg, o):
        out.write(line + "\n")
    out.write(f"{s.m} eigenspaces (in ordering):\n")
    for pos, i in enumerate(o.perm, 1):
        c = s.clusters[i]
        key = "" if c.key is None else f"  key={c.key}"
        lab = c.label()
        lab = lab if lab.isdigit() else f"({lab})"
        out.write(f"  Lambda_{pos}: {lab}^({c.multiplicity})  exact={c.exact}{key}\n")
    return EXIT_OK


def _design_line(d: gale.Design, cfg: RunConfig) -> str:
    ws = ",".join(_fmt_w(w) for w in d.weights)
    fac = "" if d.from_facet is None else f" facet={_labels(d.from_facet, cfg.one_indexed)}"
    return f"  size={d.size} kind={d.kind} support={_labels(d.support, cfg.one_indexed)} weights=[{ws}]{fac}"


def cmd_designs(cfg: RunConfig, out) -> int:
    g = cfg.graph
    non = []
    if cfg.mode in ("code", "cut"):
        if g.family != "hypercube":
            raise InputError(f"--mode {cfg.mode} needs the hypercube family")
        d = g.param("d")
        designs = [cubes_codes.code_design(d)] if cfg.mode == "code" else cubes_codes.cut_polytope_designs(d)
        o = designs[0].ordering
        k = designs[0].k
    else:
        s = get_spectrum(cfg)
        o = resolve_order(s, cfg.order_text, cfg.ties)
        k = resolve_k(o, cfg.k)
        p = spectral.partition(s, o, k)
        if cfg.mode == "facets":
            c = polytope.configuration_from_matrix(p.U_kbar)
            facets = polytope.enumerate_facets(c, cfg.tol_facet)
            designs = [gale.design_from_facet(f, c, p) for f in facets]
        elif cfg.mode == "brute":
            res = gale.weighted_circuit_designs(p.U_k, cfg.max_support, k, o)
            designs, non = res.designs, res.non_designs
        else:
            raise InputError(f"unknown mode {cfg.mode!r}")
    designs = sorted(designs, key=lambda d: (d.size, d.support)) if cfg.mode == "brute" else designs
    if cfg.fmt == "json":
        out.write(io.dumps(io.designs_to_json(g.name, o, k, designs, non, cfg.one_indexed)))
        return EXIT_OK
    if cfg.fmt == "dot":
        if not designs:
            raise InputError("no design to draw")
        out.write(io.design_to_dot(g, designs[0], cfg.one_indexed))
        return EXIT_OK
    for line in _header(cfg, o, k):
        out.write(line + "\n")
    out.write(f"mode: {cfg.mode}\n")
    for d in designs:
        out.write(_design_line(d, cfg) + "\n")
    if non:
        out.write(f"non-design circuits (weights sum to 0): {len(non)}\n")
        for c in non:
            out.write(f"  support={_labels(c.support, cfg.one_indexed)}\n")
    if designs:
        lo = min(d.size for d in designs)
        cnt = sum(d.size == lo for d in designs)
        kinds = Counter(d.kind for d in designs)
        out.write(f"summary: {len(designs)} designs, min size {lo}, count {cnt}; "
                  + ", ".join(f"{v} {kk}" for kk, v in sorted(kinds.items())) + "\n")
    else:
        out.write("summary: no designs\n")
    return EXIT_OK


def _read_design_file(path, cfg, o, k_default):
    try:
        with open(path) as fh:
            obj = json.load(fh)
    except (OSError, json.JSONDecodeError) as e:
        raise InputError(f"cannot read design file: {e}") from e
    k = None if cfg.k is None else resolve_k(o, cfg.k)
    if k is None and "k" not in obj and "designs" not in obj:
        k = k_default
    return io.designs_from_json(obj, k if k is not None else obj.get("k", k_default), o, cfg.one_indexed)


def cmd_verify(cfg: RunConfig, path, out) -> int:
    s = get_spectrum(cfg)
    o = resolve_order(s, cfg.order_text, cfg.ties)
    designs = _read_design_file(path, cfg, o, o.m - 1)
    ok = True
    reports = []
    for d in designs:
        rep = gale.verify_design(d, s, o, cfg.tol_verify)
        ok &= rep.passed
        reports.append((d, rep))
    if cfg.fmt == "json":
        out.write(io.dumps({"schema": io.SCHEMA, "passed": ok, "results": [
            {"support": [j + int(cfg.one_indexed) for j in d.support], "passed": r.passed,
             "k": d.k, "classification": r.classification, "total_weight": io.num(r.total_weight),
             "residuals": [{"eigenvalue": lab, "residual": io.num(v)} for _, lab, v in r.residuals],
             "reasons": list(r.reasons)} for d, r in reports]}))
    else:
        for line in _header(cfg, o):
            out.write(line + "\n")
        for d, r in reports:
            out.write(f"design {_labels(d.support, cfg.one_indexed)} k={d.k}: "
                      f"{'PASS' if r.passed else 'FAIL'} ({r.classification})\n")
            out.write(f"  sum of weights: {_fmt_w(r.total_weight)}\n")
            for _, lab, v in r.residuals:
                out.write(f"  eigenvalue {lab:>14}: residual {_fmt_w(v)}\n")
            for reason in r.reasons:
                out.write(f"  reason: {reason}\n")
    return EXIT_OK if ok else EXIT_FAIL


def cmd_table1(max_d: int, fmt: str, out) -> int:
    if max_d < 2:
        raise InputError("--max-d must be at least 2")
    rows = [cubes_codes.table1(d) for d in range(2, max_d + 1)]
    if fmt == "json":
        out.write(io.dumps({"schema": io.SCHEMA, "rows": [r.as_dict() for r in rows]}))
    else:
        out.write(cubes_codes.format_table1(rows))
    return EXIT_OK


def cmd_export_dot(cfg: RunConfig, path, support, out) -> int:
    s = get_spectrum(cfg)
    o = resolve_order(s, cfg.order_text, cfg.ties)
    if path:
        designs = _read_design_file(path, cfg, o, o.m - 1)
        if not designs:
            raise InputError("design file holds no designs")
        d = designs[0]
    else:
        if not support:
            raise InputError("give a design file or --support")
        off = int(cfg.one_indexed)
        d = gale.uniform_design([int(x) - off for x in support.split(",") if x.strip()], resolve_k(o, cfg.k), o)
    out.write(io.design_to_dot(cfg.graph, d, cfg.one_indexed))
    return EXIT_OK


def cmd_families(out) -> int:
    out.write("named graphs:\n")
    for name in sorted(graphs.NAMED):
        g = graphs.named(name)
        out.write(f"  {name}: n={g.n}, degree={g.degree}\n")
    out.write("families:\n")
    for fam, (params, desc) in FAMILIES.items():
        out.write(f"  {fam} (--{params.replace(',', ', --')}): {desc}\n")
    return EXIT_OK


# ---------------------------------------------------------------- parser

def _graph_opts(p):
    p.add_argument("--family", help="named graph or family (see 'families')")
    p.add_argument("--graph-file", help="JSON or 'p n m' edge list file")
    p.add_argument("--n", type=int)
    p.add_argument("--d", type=int)
    p.add_argument("--S", help="comma-separated generators for --family cayley")
    p.add_argument("--order", default="frequency")
    p.add_argument("--ties", default="positive_first", choices=["positive_first", "negative_first"])
    p.add_argument("--k", default=None, help="integer or 'extremal' (default)")
    p.add_argument("--tol-cluster", type=float, default=spectral.DEFAULT_TOL)
    p.add_argument("--tol-facet", type=float, default=polytope.FACET_TOL)
    p.add_argument("--tol-verify", type=float, default=1e-8)
    p.add_argument("--format", default="text", choices=["text", "json", "dot"])
    p.add_argument("--one-indexed", action=argparse.BooleanOptionalAction, default=True)
    p.add_argument("--max-support", type=int, default=gale.DEFAULT_MAX_SUPPORT)


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="galedesign", description="Graphical designs via eigenpolytope faces.")
    sub = ap.add_subparsers(dest="command", required=True)
    p = sub.add_parser("spectrum", help="eigenspaces and frequency order")
    _graph_opts(p)
    p = sub.add_parser("designs", help="minimal designs")
    _graph_opts(p)
    p.add_argument("--mode", default="facets", choices=["facets", "code", "cut", "brute"])
    p = sub.add_parser("verify", help="check designs from a JSON file")
    _graph_opts(p)
    p.add_argument("design_file")
    p = sub.add_parser("table1", help="hypercube code bounds")
    p.add_argument("--max-d", type=int, default=11)
    p.add_argument("--format", default="text", choices=["text", "json"])
    p = sub.add_parser("export-dot", help="draw a design as DOT")
    _graph_opts(p)
    p.add_argument("design_file", nargs="?")
    p.add_argument("--support", help="comma-separated support, uniform weights")
    sub.add_parser("families", help="list available graphs")
    return ap


def main(argv=None, out=None) -> int:
    out = out or sys.stdout
    ap = build_parser()
    try:
        a = ap.parse_args(argv)
    except SystemExit as e:
        return EXIT_INPUT if e.code else EXIT_OK
    try:
        threads()
        if a.command == "table1":
            return cmd_table1(a.max_d, a.format, out)
        if a.command == "families":
            return cmd_families(out)
        cfg = config_from_args(a)
        if a.command == "spectrum":
            return cmd_spectrum(cfg, out)
        if a.command == "designs":
            return cmd_designs(cfg, out)
        if a.command == "verify":
            return cmd_verify(cfg, a.design_file, out)
        if a.command == "export-dot":
            return cmd_export_dot(cfg, a.design_file, a.support, out)
    except BudgetExceeded as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_BUDGET
    except (GaleDesignError, OSError) as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_INPUT
    return EXIT_INPUT


if __name__ == "__main__":
    sys.exit(main())
