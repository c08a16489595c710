"""Designs from faces of the eigenpolytope, verification against the
averaging definition, and brute-force circuit enumeration."""
from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from itertools import combinations
from math import comb, lcm

import numpy as np

from . import _exact
from .errors import BudgetExceeded, DesignError, NotAFace, NotCombinatorial, NotStable
from .graphs import Graph
from .polytope import (Facet, VectorConfiguration, configuration_from_matrix,
                       enumerate_facets, is_face, _rank_of_classes)
from .spectral import Ordering, Partition, Spectrum, order_with_last, partition, spectrum

KINDS = ("weighted", "positive", "combinatorial")
DEFAULT_MAX_SUPPORT = 10
DEFAULT_BUDGET = 10**7


@dataclass(frozen=True)
class Design:
    support: tuple
    weights: tuple                      # aligned with support
    kind: str
    k: int
    ordering: Ordering | None = field(default=None, repr=False, compare=False)
    from_facet: tuple | None = None     # incident labels of the facet it came from

    @property
    def size(self) -> int:
        return len(self.support)

    @property
    def exact(self) -> bool:
        return all(not isinstance(w, float) for w in self.weights)

    def weight_map(self) -> dict:
        return dict(zip(self.support, self.weights))

    def vector(self, n: int) -> list:
        v = [Fraction(0) if self.exact else 0.0] * n
        for j, w in zip(self.support, self.weights):
            v[j] = w
        return v


def classify_weights(weights, rel_tol: float = 1e-9) -> str:
    ws = list(weights)
    if not ws or any(w <= 0 for w in ws):
        return "weighted"
    if all(not isinstance(w, float) for w in ws):
        return "combinatorial" if len(set(ws)) == 1 else "positive"
    hi = max(abs(w) for w in ws)
    if max(ws) - min(ws) <= rel_tol * hi:
        return "combinatorial"
    return "positive"


def _normalized(support, values):
    total = sum(values)
    if total == 0:
        raise DesignError("weights sum to zero")
    if all(not isinstance(v, float) for v in values):
        ws = tuple(Fraction(v) / total for v in values)
    else:
        ws = tuple(float(v) / float(total) for v in values)
    return tuple(support), ws


def uniform_design(support, k: int, ordering: Ordering | None = None) -> Design:
    support = tuple(sorted(int(j) for j in support))
    if not support:
        raise DesignError("empty support")
    w = Fraction(1, len(support))
    return Design(support, tuple([w] * len(support)), "combinatorial", k, ordering)


# ---------------------------------------------------------------- verification

@dataclass(frozen=True)
class VerifyReport:
    passed: bool
    residuals: tuple            # (cluster index, eigenvalue label, max |phi . a|)
    total_weight: object
    classification: str
    declared_kind: str
    reasons: tuple
    exact: bool

    def __bool__(self) -> bool:
        return self.passed


def _int_weights(ws):
    fr = [_exact.to_fraction(w) for w in ws]
    L = 1
    for f in fr:
        L = lcm(L, f.denominator)
    return [int(f * L) for f in fr], L


def _exact_residual(B, cols, iw):
    sub = B[:, cols]
    bound = max(abs(int(x)) for x in iw) * max(1, int(np.abs(sub).max()) if sub.size else 1) * max(1, len(cols))
    if sub.dtype == np.int64 and bound < 2**62:
        return sub @ np.array(iw, dtype=np.int64)
    return np.array([sum(int(a) * b for a, b in zip(row, iw)) for row in sub], dtype=object)


def verify_design(d: Design, s: Spectrum | None = None, o: Ordering | None = None,
                  tol: float = 1e-8) -> VerifyReport:
    """Check that ``d`` averages eigenspaces 2..k of the ordering.

    Integer eigenbases with rational weights are checked exactly; otherwise
    residuals use unit-normalised rows and must not exceed ``tol``.
    """
    o = o or d.ordering
    if o is None:
        raise DesignError("an ordering is required to verify a design")
    s = s or o.spectrum
    reasons = []
    if not d.support:
        reasons.append("empty support")
    if len(set(d.support)) != len(d.support) or any(not 0 <= j < s.n for j in d.support):
        reasons.append("support labels out of range or repeated")
        return VerifyReport(False, (), 0, "weighted", d.kind, tuple(reasons), False)
    clusters = [o.perm[i] for i in range(1, d.k)]
    exact = all(s.clusters[i].exact for i in clusters) and d.exact
    total = sum(d.weights) if d.weights else 0
    if any(w == 0 for w in d.weights):
        reasons.append("support mismatch: a support vertex has zero weight")
    if (total == 0) if exact else abs(total) <= tol:
        reasons.append("weights sum to zero, so the constant eigenspace is not averaged")
    cls = classify_weights(d.weights)
    rank = KINDS.index
    if d.kind not in KINDS:
        reasons.append(f"unknown kind {d.kind!r}")
    elif rank(cls) < rank(d.kind):
        reasons.append(f"declared {d.kind} but weights are only {cls}")
    res = []
    cols = list(d.support)
    if exact and d.weights:
        iw, L = _int_weights(d.weights)
        for ci in clusters:
            r = _exact_residual(s.clusters[ci].basis, cols, iw)
            worst = max((abs(int(x)) for x in r), default=0)
            res.append((ci, s.clusters[ci].label(), Fraction(worst, L)))
            if worst:
                reasons.append(f"eigenspace {s.clusters[ci].label()} is not averaged")
    elif d.weights:
        w = np.array([float(x) for x in d.weights])
        for ci in clusters:
            B = s.clusters[ci].basis.astype(float)
            B = B / np.linalg.norm(B, axis=1, keepdims=True)
            worst = float(np.abs(B[:, cols] @ w).max()) if B.size else 0.0
            res.append((ci, s.clusters[ci].label(), worst))
            if worst > tol:
                reasons.append(f"eigenspace {s.clusters[ci].label()} residual {worst:.3g} exceeds {tol:g}")
    return VerifyReport(not reasons, tuple(res), total, cls, d.kind, tuple(reasons), exact)


# ---------------------------------------------------------------- faces -> designs

def _config(p: Partition) -> VectorConfiguration:
    return configuration_from_matrix(p.U_kbar)


def _design_from_values(p: Partition, labels, values, from_facet=None) -> Design:
    support, ws = _normalized(labels, values)
    kind = classify_weights(ws)
    if kind == "weighted":
        raise DesignError("face witness is not positive on the design support")
    return Design(support, ws, kind, p.k, p.ordering, from_facet)


def design_from_facet(f: Facet, c: VectorConfiguration, p: Partition) -> Design:
    """Weights are the facet slacks of the off-facet columns."""
    sl = f.slacks(c)
    inc = set(f.incident_labels)
    W = [j for j in range(c.n) if j not in inc]
    return _design_from_values(p, W, [sl[j] for j in W], f.incident_labels)


def design_from_face(face_labels, p: Partition) -> Design:
    c = _config(p)
    cert = is_face(c, face_labels, p.U_k)
    if not cert.is_face:
        raise NotAFace(f"labels {sorted(face_labels)} do not form a face")
    if not cert.proper:
        raise NotAFace("the whole polytope is an improper face and gives no design")
    F = set(cert.face_labels)
    W = [j for j in range(c.n) if j not in F]
    return _design_from_values(p, W, [cert.witness[j] for j in W], tuple(sorted(F)))


def facet_designs(p: Partition):
    """(configuration, facets, designs) for a partition, designs in facet order."""
    c = _config(p)
    facets = enumerate_facets(c)
    return c, facets, [design_from_facet(f, c, p) for f in facets]


def minimal_positive_designs(g: Graph | Spectrum | None, o: Ordering, k: int) -> list:
    """Every minimal positively weighted k-design, one per facet.

    ``g`` is only used as a sanity check on the vertex count; the eigenbasis
    comes from the ordering's spectrum.
    """
    s = o.spectrum
    if g is not None and getattr(g, "n", s.n) != s.n:
        raise DesignError("graph and ordering disagree on the number of vertices")
    return facet_designs(partition(s, o, k))[2]


def size_bound(s: Spectrum, o: Ordering, k: int) -> int:
    """``s_k``: no minimal positive k-design is larger than this."""
    return sum(s.clusters[o.perm[i]].multiplicity for i in range(k))


def complement(d: Design, s: Spectrum | None = None, o: Ordering | None = None) -> Design:
    if d.kind != "combinatorial":
        raise NotCombinatorial(f"complement needs a combinatorial design, got {d.kind}")
    o = o or d.ordering
    if o is None:
        raise DesignError("an ordering is required")
    n = o.spectrum.n
    rest = [j for j in range(n) if j not in set(d.support)]
    if not rest:
        raise DesignError("the complement of the full vertex set is empty")
    out = uniform_design(rest, d.k, o)
    rep = verify_design(out, s, o)
    if not rep.passed:
        raise DesignError("complement failed verification: " + "; ".join(rep.reasons))
    return out


@dataclass(frozen=True)
class DesignAdjacency:
    edges: tuple                # (i, j) index pairs, i < j
    unions: dict                # (i, j) -> non-minimal union design

    def neighbors(self, i: int) -> list:
        return sorted({b if a == i else a for a, b in self.edges if i in (a, b)})


def design_adjacency(designs, facets, c: VectorConfiguration) -> DesignAdjacency:
    """Two facet designs are adjacent when their facets meet in a ridge."""
    if len(designs) != len(facets):
        raise DesignError("one facet per design is required")
    edges, unions = [], {}
    target = c.dim - 2
    for i, j in combinations(range(len(facets)), 2):
        common = sorted(set(facets[i].incident_classes) & set(facets[j].incident_classes))
        if len(common) < target or _rank_of_classes(c, common) != target:
            continue
        edges.append((i, j))
        a, b = designs[i].weight_map(), designs[j].weight_map()
        lab = sorted(set(a) | set(b))
        zero = Fraction(0) if designs[i].exact else 0.0
        sup, ws = _normalized(lab, [a.get(x, zero) + b.get(x, zero) for x in lab])
        unions[(i, j)] = Design(sup, ws, classify_weights(ws), designs[i].k, designs[i].ordering)
    return DesignAdjacency(tuple(edges), unions)


# ---------------------------------------------------------------- circuits

@dataclass(frozen=True)
class Circuit:
    support: tuple
    vector: tuple               # coefficients aligned with support

    @property
    def total(self):
        return sum(self.vector)

    @property
    def positive(self) -> bool:
        return all(v > 0 for v in self.vector)


def _subset_budget(n: int, max_support: int) -> int:
    return sum(comb(n, s) for s in range(1, max_support + 1))


def circuits(U, max_support: int = DEFAULT_MAX_SUPPORT, budget: int = DEFAULT_BUDGET) -> list:
    """All circuits (minimal dependences) of the columns of ``U`` up to a size.

    Independent sets are grown in increasing label order; a dependent
    extension is a circuit exactly when its unique dependence has full
    support.  Exact matrices get every circuit confirmed over QQ.
    """
    U = np.asarray(U)
    r, n = U.shape if U.ndim == 2 else (0, U.shape[0])
    if _subset_budget(n, max_support) > budget:
        raise BudgetExceeded(f"{_subset_budget(n, max_support)} subsets exceed the budget of {budget}")
    exact = _exact.is_exact(U)
    Uf = U.astype(float).reshape(r, n)
    scale = max(1.0, float(np.abs(Uf).max())) if Uf.size else 1.0
    rtol = 1e-9 * scale
    out = []

    def null_vector(S):
        sub = Uf[:, S]
        if r == 0:
            return np.ones(len(S))
        _, sv, Vt = np.linalg.svd(sub, full_matrices=True)
        return Vt[-1]

    def rank_ok(S):
        if r == 0:
            return False
        sv = np.linalg.svd(Uf[:, S], compute_uv=False)
        return len(sv) == len(S) and sv[-1] > rtol

    def emit(S):
        if exact:
            cols = [[U[i, j] for j in S] for i in range(r)]
            ns = _exact.nullspace(cols, len(S)) if r else [[1] * len(S)]
            if len(ns) != 1 or any(x == 0 for x in ns[0]):
                return
            vec = [Fraction(x) for x in ns[0]]
        else:
            v = null_vector(S)
            if np.abs(v).min() <= 1e-7 * np.abs(v).max():
                return
            vec = list(v / np.abs(v).max())
        tot = sum(vec)
        flip = tot < 0 if (tot != 0 if exact else abs(tot) > 1e-9) else vec[0] < 0
        if flip:
            vec = [-x for x in vec]
        out.append(Circuit(tuple(S), tuple(vec)))

    def dfs(indep):
        start = indep[-1] + 1 if indep else 0
        for j in range(start, n):
            S = indep + [j]
            if rank_ok(S):
                if len(S) < max_support:
                    dfs(S)
            else:
                v = null_vector(S)
                if np.abs(v).min() > 1e-7 * np.abs(v).max():
                    emit(S)

    if max_support >= 1:
        dfs([])
    out.sort(key=lambda c: (c.support))
    return out


def brute_force_positive_circuits(U_k, max_support: int = DEFAULT_MAX_SUPPORT,
                                  budget: int = DEFAULT_BUDGET) -> list:
    """Supports of all positive circuits of the columns of ``U_k``."""
    return [c.support for c in circuits(U_k, max_support, budget) if c.positive]


@dataclass(frozen=True)
class CircuitDesigns:
    designs: list
    non_designs: list           # circuits whose coefficients sum to zero

    def minimum_size(self) -> int | None:
        return min((d.size for d in self.designs), default=None)

    def minimum(self) -> list:
        m = self.minimum_size()
        return [d for d in self.designs if d.size == m]


def weighted_circuit_designs(U_k, max_support: int = DEFAULT_MAX_SUPPORT, k: int = 0,
                             ordering: Ordering | None = None,
                             budget: int = DEFAULT_BUDGET) -> CircuitDesigns:
    """Circuit-supported weighted designs, split from circuits with zero sum."""
    designs, bad = [], []
    exact = _exact.is_exact(U_k)
    for c in circuits(U_k, max_support, budget):
        tot = c.total
        if (tot == 0) if exact else abs(tot) <= 1e-9:
            bad.append(c)
            continue
        sup, ws = _normalized(c.support, list(c.vector))
        designs.append(Design(sup, ws, "weighted", k, ordering))
    return CircuitDesigns(designs, bad)


# ---------------------------------------------------------------- stable sets

@dataclass(frozen=True)
class StableSetReport:
    passed: bool
    report: VerifyReport
    hoffman_ratio: object
    size_ratio: Fraction
    sharp: bool
    complement_passed: bool | None
    design: Design


def check_stable_set_design(g: Graph, W, s: Spectrum | None = None, tol: float = 1e-8) -> StableSetReport:
    """Verify a supplied stable set as an extremal design with the smallest
    eigenvalue last, and compare its density with the Hoffman ratio."""
    W = sorted({int(w) for w in W})
    Ws = set(W)
    for u, v in g.edges:
        if u in Ws and v in Ws:
            raise NotStable(f"edge ({u}, {v}) lies inside the set")
    s = s or spectrum(g)
    lo = min(range(s.m), key=lambda i: s.clusters[i].value)
    o = order_with_last(s, lo)
    d = uniform_design(W, o.m - 1, o)
    rep = verify_design(d, s, o, tol)
    c = s.clusters[lo]
    lam = c.exact_value if c.exact else c.value
    hoff = -lam / (1 - lam)
    ratio = Fraction(len(W), g.n)
    sharp = (hoff == ratio) if c.exact else abs(float(hoff) - float(ratio)) <= tol
    comp = None
    if len(W) < g.n:
        comp = verify_design(uniform_design([j for j in range(g.n) if j not in Ws], d.k, o), s, o, tol).passed
    return StableSetReport(rep.passed, rep, hoff, ratio, sharp, comp, d)
