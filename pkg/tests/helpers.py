"""Shared builders for the test-suite."""
import numpy as np

from galedesign import spectral
from galedesign.polytope import configuration_from_matrix


def spec_of(g):
    return spectral.spectrum(g)


def extremal(g, tie="positive_first"):
    s = spectral.spectrum(g)
    o = spectral.frequency_order(s, tie)
    return s, o, spectral.partition(s, o, o.m - 1)


def config_for(g, k=None, order=None):
    s = spectral.spectrum(g)
    o = order or spectral.frequency_order(s)
    p = spectral.partition(s, o, o.m - 1 if k is None else k)
    return configuration_from_matrix(p.U_kbar), p


def one(xs):
    """1-indexed label sets -> 0-indexed tuple."""
    return tuple(sorted(x - 1 for x in xs))


def cross_polytope(d):
    rows = [[1] * (2 * d)]
    for i in range(d):
        r = [0] * (2 * d)
        r[2 * i], r[2 * i + 1] = 1, -1
        rows.append(r)
    return np.array(rows, dtype=np.int64)


def antipodal_pairs(g):
    """Pairs at maximum graph distance from each other, by BFS."""
    dist = []
    for v in range(g.n):
        d = {v: 0}
        frontier = [v]
        while frontier:
            nxt = []
            for u in frontier:
                for w in g.neighbors(u):
                    if w not in d:
                        d[w] = d[u] + 1
                        nxt.append(w)
            frontier = nxt
        dist.append(d)
    diam = max(max(d.values()) for d in dist)
    return {(u, v) for u in range(g.n) for v in range(u + 1, g.n) if dist[u][v] == diam}
