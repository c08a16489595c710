"""Reading graphs and designs; JSON and DOT serialisation."""
from __future__ import annotations

import json
from fractions import Fraction
from pathlib import Path

from .errors import DesignError, GraphError
from .gale import Design, classify_weights
from .graphs import Graph, from_edge_list
from .polytope import VectorConfiguration, f_vector
from .spectral import Ordering, Spectrum

SCHEMA = 1


def num(x):
    """JSON-friendly number: ints stay ints, fractions become "p/q", floats stay floats."""
    if isinstance(x, Fraction):
        return x.numerator if x.denominator == 1 else f"{x.numerator}/{x.denominator}"
    if isinstance(x, float):
        return x
    return int(x)


def parse_num(x):
    if isinstance(x, bool):
        raise DesignError("booleans are not weights")
    if isinstance(x, int):
        return Fraction(x)
    if isinstance(x, float):
        return x
    if isinstance(x, str):
        try:
            return Fraction(x)
        except (ValueError, ZeroDivisionError) as e:
            raise DesignError(f"bad number {x!r}") from e
    raise DesignError(f"bad number {x!r}")


# ---------------------------------------------------------------- graphs

def parse_edge_text(text: str, one_indexed: bool = True) -> Graph:
    """Whitespace edge list with a ``p n m`` header; ``c`` lines are comments."""
    n = m = None
    edges = []
    for raw in text.splitlines():
        parts = raw.split()
        if not parts or parts[0] in ("c", "#"):
            continue
        if parts[0] == "p":
            nums = [p for p in parts[1:] if p.lstrip("-").isdigit()]
            if len(nums) != 2:
                raise GraphError(f"bad header line {raw!r}")
            n, m = int(nums[0]), int(nums[1])
            continue
        if parts[0] == "e":
            parts = parts[1:]
        if len(parts) != 2:
            raise GraphError(f"bad edge line {raw!r}")
        edges.append((int(parts[0]), int(parts[1])))
    if n is None:
        raise GraphError("missing 'p n m' header")
    if m is not None and m != len(edges):
        raise GraphError(f"header announces {m} edges, found {len(edges)}")
    return from_edge_list(n, edges, one_indexed)


def load_graph(path, one_indexed: bool = True) -> Graph:
    text = Path(path).read_text()
    if text.lstrip().startswith("{"):
        obj = json.loads(text)
        try:
            return from_edge_list(int(obj["n"]), obj["edges"], bool(obj.get("one_indexed", one_indexed)),
                                  name=str(obj.get("name", Path(path).stem)))
        except KeyError as e:
            raise GraphError(f"graph file lacks field {e}") from e
    return parse_edge_text(text, one_indexed)


def graph_to_json(g: Graph, one_indexed: bool = True) -> dict:
    off = int(one_indexed)
    return {"n": g.n, "edges": [[u + off, v + off] for u, v in g.sorted_edges()],
            "one_indexed": one_indexed}


# ---------------------------------------------------------------- spectra

def spectrum_to_json(s: Spectrum, o: Ordering | None = None) -> dict:
    cl = []
    for i, c in enumerate(s.clusters):
        cl.append({
            "index": i,
            "eigenvalue": repr(float(c.value)),
            "exact": None if c.exact_value is None else str(c.exact_value),
            "multiplicity": c.multiplicity,
            "key": c.key,
            "basis": [[int(x) for x in r] if c.exact else [float(x) for x in r] for r in c.basis],
        })
    out = {"schema": SCHEMA, "n": s.n, "clusters": cl}
    if o is not None:
        out["ordering"] = ordering_to_json(o)
    return out


def ordering_to_json(o: Ordering) -> dict:
    return {"permutation": list(o.perm), "policy": o.policy,
            "eigenvalues": [o.spectrum.clusters[i].label() for i in o.perm],
            "ties": [{"clusters": list(t.clusters), "policy": t.policy} for t in o.ties]}


# ---------------------------------------------------------------- polytopes

def facets_to_json(c: VectorConfiguration, facets, one_indexed: bool = True) -> dict:
    off = int(one_indexed)
    return {
        "schema": SCHEMA,
        "classes": [[j + off for j in cl] for cl in c.classes],
        "facets": [{"functional": [num(x) for x in f.functional],
                    "incident_labels": [j + off for j in f.incident_labels],
                    "exact": f.exact} for f in facets],
    }


def polytope_summary(c: VectorConfiguration, facets) -> dict:
    return {"schema": SCHEMA, "dim": c.dim - 1, "distinct_vertices": c.n_vertices,
            "facets": len(facets), "f_vector": list(f_vector(c, facets))}


# ---------------------------------------------------------------- designs

def design_to_json(d: Design, one_indexed: bool = True) -> dict:
    off = int(one_indexed)
    return {"support": [j + off for j in d.support], "weights": [num(w) for w in d.weights],
            "kind": d.kind,
            "from_facet": None if d.from_facet is None else [j + off for j in d.from_facet]}


def designs_to_json(graph: str, o: Ordering, k: int, designs, non_designs=(),
                    one_indexed: bool = True) -> dict:
    off = int(one_indexed)
    return {
        "schema": SCHEMA,
        "graph": graph,
        "ordering": ordering_to_json(o),
        "k": k,
        "one_indexed": one_indexed,
        "designs": [design_to_json(d, one_indexed) for d in designs],
        "non_design_circuits": [{"support": [j + off for j in c.support],
                                 "coefficients": [num(x) for x in c.vector]} for c in non_designs],
    }


def designs_from_json(obj: dict, k: int | None, o: Ordering | None, one_indexed: bool = True) -> list:
    """Accepts a design listing or a single ``{support, weights, kind}`` object."""
    off = int(obj.get("one_indexed", one_indexed))
    items = obj.get("designs", [obj])
    kk = k if k is not None else obj.get("k")
    if kk is None:
        raise DesignError("design file gives no k and none was supplied")
    out = []
    for it in items:
        if "support" not in it:
            raise DesignError("design entry lacks a support")
        sup = [int(j) - off for j in it["support"]]
        if not sup:
            raise DesignError("empty design")
        if "weights" in it:
            ws = [parse_num(w) for w in it["weights"]]
            if len(ws) != len(sup):
                raise DesignError("support and weights differ in length")
        else:
            ws = [Fraction(1, len(sup))] * len(sup)
        pairs = sorted(zip(sup, ws))
        sup = [p[0] for p in pairs]
        ws = [p[1] for p in pairs]
        if any(isinstance(w, float) for w in ws):
            ws = [float(w) for w in ws]
        kind = it.get("kind") or classify_weights(ws)
        out.append(Design(tuple(sup), tuple(ws), kind, int(kk), o))
    return out


def design_to_dot(g: Graph, d: Design, one_indexed: bool = True) -> str:
    """Design vertices in red with opacity ``weight / max weight``."""
    if not d.support:
        raise DesignError("empty design")
    off = int(one_indexed)
    wm = d.weight_map()
    top = max(abs(float(w)) for w in wm.values())
    lines = [f'graph "{g.name or "G"}" {{', '  node [shape=circle, style=filled, fillcolor="#ffffff"];']
    for v in range(g.n):
        if v in wm:
            alpha = round(255 * abs(float(wm[v])) / top)
            lines.append(f'  {v + off} [fillcolor="#ff0000{alpha:02x}"];')
        else:
            lines.append(f"  {v + off};")
    for u, v in g.sorted_edges():
        lines.append(f"  {u + off} -- {v + off};")
    lines.append("}")
    return "\n".join(lines) + "\n"


def dumps(obj) -> str:
    return json.dumps(obj, indent=2) + "\n"
