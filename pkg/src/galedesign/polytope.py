"""Vector configurations given by the columns of ``U_kbar``: coincidence
classes, facets, face lattice counts and face membership certificates.

Every point has first coordinate 1, so facets of the polytope are the
extreme rays of the polar cone ``{h : h.u <= 0 for all points u}``.  A facet
is stored by such an ``h``: incident points satisfy ``h.u == 0`` and all
others ``h.u < 0``.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations
from math import gcd

import numpy as np
from scipy.optimize import linprog

from . import _exact
from .errors import NumericallyDegenerate, PolytopeError, RankDeficient

DEDUPE_TOL = 1e-7
FACET_TOL = 1e-8


@dataclass(frozen=True)
class VectorConfiguration:
    matrix: np.ndarray          # dim x n, columns are the labelled points
    exact: bool
    classes: tuple              # tuples of labels with identical columns, by first label
    class_of: tuple             # label -> class index

    @property
    def dim(self) -> int:
        return self.matrix.shape[0]

    @property
    def n(self) -> int:
        return self.matrix.shape[1]

    @property
    def n_vertices(self) -> int:
        return len(self.classes)

    def vertex(self, ci: int):
        """Representative column of class ``ci`` (int list or float array)."""
        j = self.classes[ci][0]
        col = self.matrix[:, j]
        if self.exact:
            return [int(x) for x in col]
        return col.astype(float)

    def vertices(self) -> list:
        return [self.vertex(i) for i in range(self.n_vertices)]

    def labels_of(self, class_ids) -> tuple:
        return tuple(sorted(l for ci in class_ids for l in self.classes[ci]))


@dataclass(frozen=True)
class Facet:
    functional: tuple           # h with h.u <= 0, equality exactly on the facet
    incident_labels: tuple
    incident_classes: tuple
    exact: bool

    def slacks(self, c: VectorConfiguration) -> list:
        """``-h.u`` for every label: zero on the facet, positive elsewhere."""
        h = self.functional
        if self.exact:
            return [-sum(int(a) * int(b) for a, b in zip(h, c.matrix[:, j])) for j in range(c.n)]
        hv = np.asarray(h, dtype=float)
        return list(-(hv @ c.matrix.astype(float)))

    @property
    def n_columns(self) -> int:
        return len(self.incident_labels)


def _full_row_rank(U, exact: bool) -> bool:
    r = U.shape[0]
    if exact:
        G = U @ U.T
        off = G - np.diag(np.diag(G))
        if not np.any(off != 0) and all(x != 0 for x in np.diag(G)):
            return True
        return _exact.rank(U.tolist(), U.shape[1]) == r
    return np.linalg.matrix_rank(U.astype(float), tol=1e-9 * max(1.0, np.abs(U).max())) == r


def configuration_from_matrix(U, dedupe_tol: float = DEDUPE_TOL) -> VectorConfiguration:
    U = np.asarray(U)
    exact = _exact.is_exact(U)
    if U.ndim != 2 or U.shape[0] < 1:
        raise PolytopeError("expected a non-empty 2-d matrix")
    first = U[0].astype(float)
    if not np.all(first == 1.0):
        raise PolytopeError("first row must be the all-ones vector")
    if not _full_row_rank(U, exact):
        raise RankDeficient("matrix does not have full row rank")
    n = U.shape[1]
    classes: list = []
    class_of = [0] * n
    if exact:
        seen = {}
        for j in range(n):
            key = tuple(int(x) for x in U[:, j])
            if key not in seen:
                seen[key] = len(classes)
                classes.append([])
            classes[seen[key]].append(j)
            class_of[j] = seen[key]
    else:
        Uf = U.astype(float)
        reps: list = []
        for j in range(n):
            col = Uf[:, j]
            hit = None
            if reps:
                dist = np.abs(np.array(reps) - col).max(axis=1)
                k = int(np.argmin(dist))
                if dist[k] <= dedupe_tol:
                    hit = k
            if hit is None:
                reps.append(col)
                classes.append([])
                hit = len(classes) - 1
            classes[hit].append(j)
            class_of[j] = hit
    return VectorConfiguration(U, exact, tuple(tuple(c) for c in classes), tuple(class_of))


# ---------------------------------------------------------------- double description

def _popcount(x: int) -> int:
    return bin(x).count("1")


def _primitive_int(v):
    g = 0
    for x in v:
        g = gcd(g, x)
    return [x // g for x in v] if g > 1 else list(v)


def _independent_prefix(points, exact: bool, D: int):
    """Indices of the first D linearly independent points, greedily by index."""
    chosen = []
    if exact:
        echelon: list = []  # (pivot, row as Fractions)
        for i, p in enumerate(points):
            v = [Fraction(x) for x in p]
            for piv, row in echelon:
                if v[piv]:
                    f = v[piv] / row[piv]
                    v = [a - f * b for a, b in zip(v, row)]
            piv = next((t for t, x in enumerate(v) if x), None)
            if piv is not None:
                echelon.append((piv, v))
                chosen.append(i)
                if len(chosen) == D:
                    break
    else:
        for i, p in enumerate(points):
            trial = np.array([points[j] for j in chosen] + [p])
            if np.linalg.matrix_rank(trial, tol=1e-9) == len(trial):
                chosen.append(i)
                if len(chosen) == D:
                    break
    if len(chosen) < D:
        raise RankDeficient("points do not span the ambient space")
    return chosen


def _double_description(points, exact: bool, eps: float = FACET_TOL):
    """Extreme rays of ``{h : p.h <= 0 for every p in points}``.

    Returns a list of (ray, zero-set bitmask over point indices).
    """
    D = len(points[0])
    N = len(points)
    base = _independent_prefix(points, exact, D)
    if exact:
        inv = _exact.inverse([points[i] for i in base])
        rays = [_exact.primitive([-inv[r][c] for r in range(D)]) for c in range(D)]
        dot = lambda p, r: sum(a * b for a, b in zip(p, r))  # noqa: E731
    else:
        inv = np.linalg.inv(np.array([points[i] for i in base]))
        rays = [-inv[:, c] / np.linalg.norm(inv[:, c]) for c in range(D)]
        dot = lambda p, r: float(np.dot(p, r))  # noqa: E731

    def sign(x):
        if exact:
            return (x > 0) - (x < 0)
        return 0 if abs(x) <= eps else (1 if x > 0 else -1)

    zeros = []
    for c in range(D):
        z = 0
        for t, i in enumerate(base):
            if t != c:
                z |= 1 << i
        zeros.append(z)
    done = set(base)
    for i in range(N):
        if i in done:
            continue
        p = points[i]
        vals = [dot(p, r) for r in rays]
        sg = [sign(v) for v in vals]
        pos = [t for t, s in enumerate(sg) if s > 0]
        neg = [t for t, s in enumerate(sg) if s < 0]
        new_rays, new_zeros = [], []
        for t, s in enumerate(sg):
            if s < 0:
                new_rays.append(rays[t])
                new_zeros.append(zeros[t])
            elif s == 0:
                new_rays.append(rays[t])
                new_zeros.append(zeros[t] | (1 << i))
        for a in pos:
            for b in neg:
                common = zeros[a] & zeros[b]
                if _popcount(common) < D - 2:
                    continue
                if any(t != a and t != b and zeros[t] & common == common for t in range(len(rays))):
                    continue
                va, vb = vals[a], vals[b]
                if exact:
                    w = _primitive_int([va * y - vb * x for x, y in zip(rays[a], rays[b])])
                else:
                    w = va * rays[b] - vb * rays[a]
                    w = w / np.linalg.norm(w)
                new_rays.append(w)
                new_zeros.append(common | (1 << i))
        rays, zeros = new_rays, new_zeros
        done.add(i)
    return rays, zeros


def _certify_float(points, ray, eps):
    P = np.asarray(points, dtype=float)
    vals = P @ ray
    inc = np.flatnonzero(np.abs(vals) <= eps)
    D = P.shape[1]
    sv_all = np.linalg.svd(P[inc], compute_uv=False) if len(inc) else np.zeros(0)
    if len(inc) < D - 1 or sv_all[D - 2] <= 1e-7:
        raise NumericallyDegenerate("candidate facet does not span a hyperplane")
    _, sv, Vt = np.linalg.svd(P[inc])
    h = Vt[-1]
    if len(sv) >= D and sv[D - 1] > 1e-7:
        raise NumericallyDegenerate("incident points are not on a common hyperplane")
    if np.dot(h, ray) < 0:
        h = -h
    slack = P @ h
    out = np.setdiff1d(np.arange(len(P)), inc)
    if np.any(np.abs(slack[inc]) > eps):
        raise NumericallyDegenerate("refit hyperplane misses an incident point")
    if len(out) and slack[out].max() > -10 * eps:
        raise NumericallyDegenerate("a non-incident point lies inside the tolerance band")
    return h, tuple(int(i) for i in inc)


def _make_facet(c: VectorConfiguration, h, inc_classes, exact) -> Facet:
    func = tuple(int(x) for x in h) if exact else tuple(float(x) for x in h)
    return Facet(func, c.labels_of(inc_classes), tuple(sorted(inc_classes)), exact)


def _sorted_facets(facets):
    return sorted(facets, key=lambda f: f.incident_labels)


def enumerate_facets(c: VectorConfiguration, facet_tol: float = FACET_TOL) -> list:
    """All facets in canonical order (lexicographic on incident label sets)."""
    pts = c.vertices()
    if c.dim < 2:
        raise PolytopeError("configuration must have dimension at least 2")
    rays, zeros = _double_description(pts, c.exact, facet_tol)
    out = []
    for r, z in zip(rays, zeros):
        if c.exact:
            inc = [i for i in range(len(pts)) if z >> i & 1]
            out.append(_make_facet(c, r, inc, True))
        else:
            h, inc = _certify_float(pts, r, facet_tol)
            out.append(_make_facet(c, h, inc, False))
    seen = {}
    for f in out:
        seen.setdefault(f.incident_labels, f)
    return _sorted_facets(seen.values())


def brute_force_facets(c: VectorConfiguration, facet_tol: float = FACET_TOL) -> list:
    """Oracle: test every hyperplane through ``dim-1`` distinct vertices."""
    pts = c.vertices()
    D = c.dim
    found = {}
    for sub in combinations(range(len(pts)), D - 1):
        if c.exact:
            ns = _exact.nullspace([pts[i] for i in sub], D)
            if len(ns) != 1:
                continue
            h = ns[0]
            vals = [sum(a * b for a, b in zip(h, p)) for p in pts]
            zero = [v == 0 for v in vals]
        else:
            _, sv, Vt = np.linalg.svd(np.array([pts[i] for i in sub]))
            if sv[-1] <= 1e-7:
                continue
            h = Vt[-1]
            vals = list(np.asarray(pts) @ h)
            zero = [abs(v) <= facet_tol for v in vals]
        if all(v >= 0 or z for v, z in zip(vals, zero)):
            h = [-x for x in h]
            vals = [-v for v in vals]
        if not all(v <= 0 or z for v, z in zip(vals, zero)):
            continue
        inc = tuple(i for i in range(len(pts)) if zero[i])
        if inc not in found:
            found[inc] = _make_facet(c, h, inc, c.exact)
    return _sorted_facets(found.values())


def max_vertex_facets(c: VectorConfiguration, facets=None) -> list:
    """Facets containing the most columns, counting coincident labels."""
    facets = enumerate_facets(c) if facets is None else facets
    best = max(f.n_columns for f in facets)
    return [f for f in facets if f.n_columns == best]


def _rank_of_classes(c: VectorConfiguration, cls) -> int:
    if not cls:
        return 0
    pts = [c.vertex(i) for i in cls]
    if c.exact:
        return _exact.rank(pts, c.dim)
    return int(np.linalg.matrix_rank(np.array(pts), tol=1e-7))


def face_lattice(c: VectorConfiguration, facets=None) -> dict:
    """Non-empty proper faces as class-index frozensets, mapped to their dimension."""
    facets = enumerate_facets(c) if facets is None else facets
    fsets = [frozenset(f.incident_classes) for f in facets]
    faces = set(fsets)
    frontier = set(fsets)
    while frontier:
        nxt = set()
        for F in frontier:
            for G in fsets:
                H = F & G
                if H and H != F and H not in faces:
                    nxt.add(H)
        faces |= nxt
        frontier = nxt
    return {F: _rank_of_classes(c, sorted(F)) - 1 for F in faces}


def f_vector(c: VectorConfiguration, facets=None) -> tuple:
    """``(f_0, ..., f_{dim-2})`` over distinct vertices."""
    lat = face_lattice(c, facets)
    top = c.dim - 2
    counts = [0] * (top + 1)
    for d in lat.values():
        counts[d] += 1
    return tuple(counts)


def is_facet_set(c: VectorConfiguration, labels) -> bool:
    """True when the (already certified) face spanned by ``labels`` is a facet."""
    cls = sorted({c.class_of[j] for j in labels})
    return _rank_of_classes(c, cls) == c.dim - 1


# ---------------------------------------------------------------- face membership

@dataclass(frozen=True)
class FaceCertificate:
    """Outcome of :func:`is_face`.

    YES: ``witness`` is a vector over labels in the row space of ``U_kbar``,
    zero on the face and strictly positive off it (so it is also a positive
    dependence of ``U_k`` supported on the complement).
    NO: ``refutation`` is a vector in the null space of ``U_kbar``, nonnegative
    and not identically zero off the face; no separating functional can exist.
    """

    is_face: bool
    proper: bool
    face_labels: tuple
    witness: tuple | None
    refutation: tuple | None
    exact: bool


def _lp_max_min(Bf: np.ndarray, I: list):
    """max t s.t. (z @ Bf)[I] >= t, |z| <= 1, t <= 1.  Returns (t, z)."""
    r = Bf.shape[0]
    if r == 0 or not I:
        return 0.0, np.zeros(r)
    A = np.hstack([-Bf[:, I].T, np.ones((len(I), 1))])
    res = linprog(np.r_[np.zeros(r), -1.0], A_ub=A, b_ub=np.zeros(len(I)),
                  bounds=[(-1, 1)] * r + [(None, 1)], method="highs")
    if res.status != 0:
        return 0.0, np.zeros(r)
    return -res.fun, res.x[:r]


def _exact_combo(B, z, dens=(10**3, 10**6, 10**9, 10**12)):
    for den in dens:
        zq = [Fraction(float(x)).limit_denominator(den) for x in z]
        yield [sum(zq[i] * B[i][j] for i in range(len(B))) for j in range(len(B[0]))]


def _basis_rows(vectors):
    """Scale each exact row by its max-abs entry so the LP sees unit-sized data."""
    out = []
    for v in vectors:
        m = max(abs(x) for x in v) or 1
        out.append([Fraction(x) / m for x in v])
    return out


def _strictly_positive_in(L, I, exact: bool, tol: float = 1e-9):
    """A vector of span(L) that is > 0 on I (given as list of label rows), or None."""
    if not L:
        return None
    if exact:
        Bq = _basis_rows(L)
        Bf = np.array([[float(x) for x in r] for r in Bq])
    else:
        Bf = np.array([np.asarray(r, float) / max(np.abs(r).max(), 1e-300) for r in L])
    t, z = _lp_max_min(Bf, I)
    if t <= tol:
        return None
    if not exact:
        return tuple(float(x) for x in z @ Bf)
    for x in _exact_combo(Bq, z):
        if all(x[i] > 0 for i in I):
            return tuple(x)
    return None


def _refute(Nrows, I, exact: bool, tol: float = 1e-9):
    """Nonzero a in span(Nrows), a >= 0 on I, found by max sum over I."""
    if not Nrows or not I:
        return None
    if exact:
        Bq = _basis_rows(Nrows)
        Bf = np.array([[float(x) for x in r] for r in Bq])
    else:
        Bf = np.asarray(Nrows, dtype=float)
    r = Bf.shape[0]
    BI = Bf[:, I]
    res = linprog(-BI.sum(axis=1), A_ub=np.vstack([-BI.T, BI.T]),
                  b_ub=np.r_[np.zeros(len(I)), np.ones(len(I))],
                  bounds=[(None, None)] * r, method="highs")
    if res.status != 0 or -res.fun <= tol:
        return None
    a = res.x @ Bf
    if not exact:
        return tuple(float(x) for x in a)
    support = [i for i in I if a[i] > 1e-7]
    zero = [i for i in I if a[i] <= 1e-7]
    # restrict to the exact subspace vanishing on the numerically zero part
    if zero:
        rows = [list(v) for v in Bq]
        M = [[rows[q][i] for q in range(r)] for i in zero]
        coeffs = _exact.nullspace(M, r)
        L = [[sum(cf[q] * rows[q][j] for q in range(r)) for j in range(len(rows[0]))] for cf in coeffs]
    else:
        L = [list(v) for v in Bq]
    x = _strictly_positive_in(L, support, True)
    if x is None:
        return None
    if any(x[i] < 0 for i in I) or not any(x[i] > 0 for i in I):
        return None
    return tuple(x)


def is_face(c: VectorConfiguration, face_labels, U_k=None) -> FaceCertificate:
    """Decide whether ``face_labels`` is exactly the label set of a face.

    The empty set is the empty face; the full label set is reported as an
    improper face.  When ``U_k`` is given the witness is also checked to be
    a dependence of its columns.
    """
    F = sorted(set(int(j) for j in face_labels))
    if any(j < 0 or j >= c.n for j in F):
        raise PolytopeError("face labels out of range")
    Fs = set(F)
    I = [j for j in range(c.n) if j not in Fs]
    key = tuple(F)
    if not I:
        return FaceCertificate(True, False, key, tuple([0] * c.n), None, c.exact)
    U = c.matrix
    if c.exact:
        rows = [[int(x) for x in r] for r in U]
        V = _exact.nullspace([[rows[i][j] for i in range(c.dim)] for j in F], c.dim) if F else \
            [[int(i == j) for i in range(c.dim)] for j in range(c.dim)]
        L = [[sum(v[i] * rows[i][j] for i in range(c.dim)) for j in range(c.n)] for v in V]
    else:
        Uf = U.astype(float)
        if F:
            _, sv, Vt = np.linalg.svd(Uf[:, F].T)
            rk = int((sv > 1e-9).sum())
            V = Vt[rk:]
        else:
            V = np.eye(c.dim)
        L = [v @ Uf for v in V]
    w = _strictly_positive_in(L, I, c.exact)
    if w is not None:
        if U_k is not None:
            Uk = np.asarray(U_k)
            if Uk.shape[0]:
                if c.exact:
                    bad = any(sum(int(Uk[r, j]) * w[j] for j in range(c.n)) != 0 for r in range(Uk.shape[0]))
                else:
                    bad = np.abs(Uk.astype(float) @ np.asarray(w, float)).max() > 1e-7
                if bad:
                    raise PolytopeError("U_k is not orthogonal to U_kbar")
        return FaceCertificate(True, True, key, w, None, c.exact)
    if c.exact:
        N = _exact.nullspace(rows, c.n)
    else:
        _, sv, Vt = np.linalg.svd(Uf)
        rk = int((sv > 1e-9).sum())
        N = list(Vt[rk:])
    a = _refute(N, I, c.exact)
    if a is None:
        raise NumericallyDegenerate("could not certify either outcome of the face test")
    return FaceCertificate(False, True, key, None, a, c.exact)
