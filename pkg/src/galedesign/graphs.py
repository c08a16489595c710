"""Simple connected regular graphs and the families used throughout."""
from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from math import gcd
from typing import Iterable

import numpy as np
from scipy.sparse import csr_matrix
from scipy.sparse.csgraph import connected_components

from . import _named_data
from .errors import (Disconnected, DuplicateEdge, GraphError, LoopEdge,
                     NotGenerating, NotRegular, NotSymmetricSet, UnknownName)


@dataclass(frozen=True)
class Graph:
    """Validated simple, connected, regular graph on vertices ``0..n-1``.

    ``family`` and ``params`` tag graphs built by a generator so that closed
    form spectra can be looked up; ``name`` is a display label.
    """

    n: int
    edges: frozenset
    degree: int
    family: str | None = None
    params: tuple = ()
    name: str = ""
    _nbrs: tuple = field(default=(), repr=False, compare=False)

    @property
    def m(self) -> int:
        return len(self.edges)

    def neighbors(self, v: int) -> tuple:
        return self._nbrs[v]

    def sorted_edges(self) -> list:
        return sorted(self.edges)

    def adjacency(self) -> np.ndarray:
        A = np.zeros((self.n, self.n), dtype=np.int64)
        for u, v in self.edges:
            A[u, v] = A[v, u] = 1
        return A

    def param(self, key, default=None):
        return dict(self.params).get(key, default)


def from_edge_list(n: int, edges: Iterable, one_indexed: bool = False, *,
                   family=None, params=(), name="") -> Graph:
    if n < 1:
        raise GraphError(f"vertex count must be positive, got {n}")
    off = 1 if one_indexed else 0
    seen = set()
    for e in edges:
        u, v = (int(x) - off for x in e)
        if not (0 <= u < n and 0 <= v < n):
            raise GraphError(f"edge ({u + off}, {v + off}) has an endpoint outside the vertex range")
        if u == v:
            raise LoopEdge(f"loop at vertex {u + off}")
        key = (min(u, v), max(u, v))
        if key in seen:
            raise DuplicateEdge(f"duplicate edge ({key[0] + off}, {key[1] + off})")
        seen.add(key)
    nbrs = [[] for _ in range(n)]
    for u, v in seen:
        nbrs[u].append(v)
        nbrs[v].append(u)
    degs = [len(x) for x in nbrs]
    if n > 1:
        rows = [u for u, v in seen] + [v for u, v in seen]
        cols = [v for u, v in seen] + [u for u, v in seen]
        adj = csr_matrix((np.ones(len(rows)), (rows, cols)), shape=(n, n))
        ncomp, lab = connected_components(adj, directed=False)
        if ncomp > 1:
            bad = int(np.flatnonzero(lab != lab[0])[0])
            raise Disconnected(f"graph has {ncomp} components; vertex {bad + off} "
                               f"is not reachable from vertex {off}")
    d0 = degs[0]
    for v, dv in enumerate(degs):
        if dv != d0:
            raise NotRegular(f"vertex {v + off} has degree {dv}, vertex {off} has degree {d0}")
    if d0 == 0:
        raise GraphError("a regular graph needs at least one edge")
    return Graph(n, frozenset(seen), d0, family, tuple(params), name,
                 tuple(tuple(sorted(x)) for x in nbrs))


def cycle(n: int) -> Graph:
    if n < 3:
        raise GraphError(f"cycle needs n >= 3, got {n}")
    return from_edge_list(n, [(i, (i + 1) % n) for i in range(n)],
                          family="cycle", params=(("n", n),), name=f"C{n}")


def cocktail_party(d: int) -> Graph:
    """Vertices ``2i`` and ``2i+1`` are the antipodes ``+e_i`` and ``-e_i``."""
    if d < 2:
        raise GraphError(f"cocktail party graph needs d >= 2, got {d}")
    n = 2 * d
    edges = [(u, v) for u in range(n) for v in range(u + 1, n) if v != (u ^ 1)]
    return from_edge_list(n, edges, family="cocktail_party",
                          params=(("d", d),), name=f"CP{d}")


def hypercube(d: int) -> Graph:
    """Vertex ``y`` is the bitstring whose coordinate ``c`` is bit ``c-1`` of ``y``."""
    if d < 1:
        raise GraphError(f"hypercube needs d >= 1, got {d}")
    n = 1 << d
    edges = [(y, y | (1 << c)) for y in range(n) for c in range(d) if not y >> c & 1]
    return from_edge_list(n, edges, family="hypercube", params=(("d", d),), name=f"Q{d}")


def cayley_cyclic(n: int, S: Iterable[int]) -> Graph:
    S = sorted({int(s) % n for s in S})
    if 0 in S:
        raise NotSymmetricSet("0 is not allowed in the connection set")
    for s in S:
        if (-s) % n not in S:
            raise NotSymmetricSet(f"{s} is in the connection set but {(-s) % n} is not")
    g = n
    for s in S:
        g = gcd(g, s)
    if g != 1 or not S:
        raise NotGenerating(f"connection set {S} generates the subgroup of index {g} in Z_{n}")
    edges = {(min(v, (v + s) % n), max(v, (v + s) % n)) for v in range(n) for s in S}
    return from_edge_list(n, sorted(edges), params=(("n", n), ("S", tuple(S))),
                          name=f"Cay(Z{n},{S})")


def _named_petersen():
    return from_edge_list(10, _named_data.PETERSEN, one_indexed=True, name="petersen")


def _named_octahedron():
    g = cocktail_party(3)
    return Graph(g.n, g.edges, g.degree, g.family, g.params, "octahedron", g._nbrs)


NAMED = {
    "petersen": _named_petersen,
    "octahedron": _named_octahedron,
    "icosahedron": lambda: from_edge_list(12, _named_data.ICOSAHEDRON, True, name="icosahedron"),
    "truncated_tetrahedron": lambda: from_edge_list(
        12, _named_data.TRUNCATED_TETRAHEDRON, True, name="truncated_tetrahedron"),
    "truncated_cuboctahedron": lambda: from_edge_list(
        48, _named_data.TRUNCATED_CUBOCTAHEDRON, True, name="truncated_cuboctahedron"),
}


def named(name: str) -> Graph:
    key = name.lower().replace("-", "_").replace(" ", "_")
    if key not in NAMED:
        raise UnknownName(f"unknown graph {name!r}; known: {', '.join(sorted(NAMED))}")
    return NAMED[key]()


def normalized_adjacency(g: Graph) -> np.ndarray:
    """``A / degree`` as an object array of :class:`Fraction` entries."""
    M = np.full((g.n, g.n), Fraction(0), dtype=object)
    w = Fraction(1, g.degree)
    for u, v in g.edges:
        M[u, v] = M[v, u] = w
    return M
