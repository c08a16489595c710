"""Eigenspace clusters of the normalized adjacency matrix, orderings, and the
``U_k`` / ``U_kbar`` split."""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import comb, lcm
from typing import Sequence

import numpy as np

from . import _exact
from .errors import BadPermutation, ClusterAmbiguity, KOutOfRange, SpectralError, UnsupportedFamily
from .graphs import Graph, normalized_adjacency

DEFAULT_TOL = 1e-9


@dataclass(frozen=True)
class Cluster:
    """One eigenspace.  ``basis`` holds eigenvector rows (not unit length).

    Exact clusters carry an integer basis (int64 or object array) and the
    eigenvalue as a Fraction; floating clusters carry orthonormal float rows.
    """

    value: float
    basis: np.ndarray
    exact_value: Fraction | None = None
    key: object = None

    @property
    def multiplicity(self) -> int:
        return self.basis.shape[0]

    @property
    def exact(self) -> bool:
        return self.exact_value is not None

    def label(self) -> str:
        if self.exact_value is not None:
            return str(self.exact_value)
        return f"{self.value:.10g}"


@dataclass(frozen=True)
class Spectrum:
    clusters: tuple
    n: int
    tol: float = DEFAULT_TOL
    source: str = ""

    @property
    def exact(self) -> bool:
        return all(c.exact for c in self.clusters)

    @property
    def m(self) -> int:
        return len(self.clusters)

    def __getitem__(self, i) -> Cluster:
        return self.clusters[i]

    def values(self) -> list:
        return [c.value for c in self.clusters]

    def index_of_value(self, value: float, tol: float | None = None) -> int:
        tol = self.tol * 10 if tol is None else tol
        hits = [i for i, c in enumerate(self.clusters) if abs(c.value - value) <= tol]
        if len(hits) != 1:
            raise SpectralError(f"no unique eigenvalue near {value}")
        return hits[0]

    def index_of_key(self, key) -> int:
        for i, c in enumerate(self.clusters):
            if c.key == key:
                return i
        raise SpectralError(f"no eigenspace with key {key!r}")

    def trivial_index(self) -> int:
        return 0  # clusters are sorted by decreasing eigenvalue; lambda = 1 is the largest


@dataclass(frozen=True)
class TieRecord:
    clusters: tuple  # cluster indices, in the order chosen
    policy: str


@dataclass(frozen=True)
class Ordering:
    spectrum: Spectrum
    perm: tuple
    ties: tuple = ()
    policy: str = "custom"

    @property
    def m(self) -> int:
        return len(self.perm)

    def cluster(self, pos: int) -> Cluster:
        """Cluster at 0-based position ``pos`` of the ordering."""
        return self.spectrum.clusters[self.perm[pos]]

    @property
    def last(self) -> int:
        return self.perm[-1]

    def describe(self) -> str:
        return " < ".join(self.spectrum.clusters[i].label() for i in self.perm)


@dataclass(frozen=True)
class Partition:
    """Rows of the averaged eigenspaces (``U_k``) and the rest plus 𝟙 (``U_kbar``)."""

    k: int
    U_k: np.ndarray
    U_kbar: np.ndarray
    s_k: int
    ordering: Ordering
    exact_k: bool
    exact_kbar: bool

    @property
    def n(self) -> int:
        return self.U_kbar.shape[1]


def _stack(clusters, n, exact):
    if not clusters:
        return np.zeros((0, n), dtype=np.int64 if exact else float)
    if exact:
        if all(c.basis.dtype == np.int64 for c in clusters):
            return np.vstack([c.basis for c in clusters])
        return np.vstack([c.basis.astype(object) for c in clusters])
    return np.vstack([c.basis.astype(float) for c in clusters])


# ---------------------------------------------------------------- decomposition

def _cluster_eigenvalues(w: np.ndarray, tol: float):
    groups = [[0]]
    for i in range(1, len(w)):
        gap = w[groups[-1][-1]] - w[i]
        if gap <= tol:
            groups[-1].append(i)
        elif gap <= 10 * tol:
            raise ClusterAmbiguity(
                f"eigenvalues {w[i - 1]:.15g} and {w[i]:.15g} differ by {gap:.3g}, "
                f"inside the guard band ({tol:g}, {10 * tol:g}]")
        else:
            groups.append([i])
    return groups


def _common_denominator(M) -> int:
    D = 1
    for x in M.flat:
        D = lcm(D, _exact.to_fraction(x).denominator)
    return D


def decompose(M, tol: float = DEFAULT_TOL, exact: bool = True, source: str = "") -> Spectrum:
    """Cluster the spectrum of a symmetric stochastic matrix.

    With ``exact`` and rational ``M``, every cluster whose eigenvalue is
    rational is recomputed as an exact null space and orthogonalised over QQ.
    Clusters are returned in decreasing eigenvalue order.
    """
    M = np.asarray(M)
    rational = _exact.is_exact(M)
    Mf = M.astype(float)
    n = Mf.shape[0]
    if Mf.shape != (n, n) or not np.allclose(Mf, Mf.T, atol=1e-12):
        raise SpectralError("matrix is not square symmetric")
    if not np.allclose(Mf.sum(axis=1), 1.0, atol=1e-12):
        raise SpectralError("rows do not sum to 1")
    w, V = np.linalg.eigh(Mf)
    w, V = w[::-1], V[:, ::-1]
    groups = _cluster_eigenvalues(w, tol)
    if len(groups[0]) != 1:
        raise SpectralError(f"eigenvalue 1 has multiplicity {len(groups[0])}; graph is disconnected")
    D = _common_denominator(M) if rational and exact else None
    Mi = None
    clusters = []
    for gi, idx in enumerate(groups):
        val = float(np.mean(w[idx]))
        if gi == 0:
            clusters.append(Cluster(1.0, np.ones((1, n), dtype=np.int64), Fraction(1)))
            continue
        if D is not None:
            theta = val * D
            if abs(theta - round(theta)) < 1e-6:
                if Mi is None:
                    Mi = [[int(_exact.to_fraction(x) * D) for x in row] for row in M]
                t = int(round(theta))
                shifted = [[Mi[i][j] - (t if i == j else 0) for j in range(n)] for i in range(n)]
                ns = _exact.nullspace(shifted, n)
                if len(ns) == len(idx):
                    rows = _exact.gram_schmidt(ns)
                    clusters.append(Cluster(t / D, _exact.exact_array(rows), Fraction(t, D)))
                    continue
        B = V[:, idx].T.copy()
        q, _ = np.linalg.qr(B.T)
        clusters.append(Cluster(val, q.T.copy()))
    return Spectrum(tuple(clusters), n, tol, source)


# ---------------------------------------------------------------- closed forms

def walsh_rows(d: int, xs: Sequence[int]) -> np.ndarray:
    """Rows ``(-1)^(x.y)`` over all ``y`` in ``{0,1}^d`` (integer order)."""
    ys = np.arange(1 << d, dtype=np.int64)
    out = np.empty((len(xs), 1 << d), dtype=np.int64)
    for r, x in enumerate(xs):
        v = ys & int(x)
        par = np.zeros_like(v)
        while v.any():
            par ^= v & 1
            v >>= 1
        out[r] = 1 - 2 * par
    return out


def weight_class(d: int, i: int) -> list:
    return [x for x in range(1 << d) if bin(x).count("1") == i]


def _hypercube_spectrum(d: int, source: str) -> Spectrum:
    cl = []
    for i in range(d + 1):
        lam = Fraction(d - 2 * i, d)
        cl.append(Cluster(float(lam), walsh_rows(d, weight_class(d, i)), lam, i))
    return Spectrum(tuple(cl), 1 << d, DEFAULT_TOL, source)


def _cycle_spectrum(n: int, source: str) -> Spectrum:
    y = np.arange(n)
    cl = [Cluster(1.0, np.ones((1, n), dtype=np.int64), Fraction(1), 0)]
    for j in range(1, n // 2 + 1):
        if 2 * j == n:
            cl.append(Cluster(-1.0, ((-1) ** y).reshape(1, n).astype(np.int64), Fraction(-1), j))
            continue
        ang = 2 * np.pi * j * y / n
        val = float(np.cos(2 * np.pi * j / n))
        for r in (0.0, 0.5, -0.5):
            if abs(val - r) < 1e-14:
                val = r
        cl.append(Cluster(val, np.vstack([np.cos(ang), np.sin(ang)]), None, j))
    return Spectrum(tuple(cl), n, DEFAULT_TOL, source)


def _cocktail_spectrum(d: int, source: str) -> Spectrum:
    n = 2 * d
    pair_rows = []
    for j in range(1, d):
        r = [0] * n
        r[0] = r[1] = 1
        r[2 * j] = r[2 * j + 1] = -1
        pair_rows.append(r)
    odd_rows = []
    for i in range(d):
        r = [0] * n
        r[2 * i], r[2 * i + 1] = 1, -1
        odd_rows.append(r)
    lam2 = Fraction(-1, d - 1)
    cl = [Cluster(1.0, np.ones((1, n), dtype=np.int64), Fraction(1), 1),
          Cluster(0.0, _exact.exact_array(odd_rows), Fraction(0), 3),
          Cluster(float(lam2), _exact.exact_array(_exact.gram_schmidt(pair_rows)), lam2, 2)]
    cl.sort(key=lambda c: -c.value)
    return Spectrum(tuple(cl), n, DEFAULT_TOL, source)


def analytic_spectrum(g: Graph) -> Spectrum:
    """Closed-form eigenbasis for cycles, hypercubes and cocktail party graphs.

    Cluster keys: weight ``i`` for hypercubes, frequency ``j`` for cycles,
    and 1/2/3 for the cocktail party graph (eigenvalue 1, -1/(d-1), 0).
    """
    fam = g.family
    if fam == "hypercube":
        return _hypercube_spectrum(g.param("d"), g.name)
    if fam == "cycle":
        return _cycle_spectrum(g.n, g.name)
    if fam == "cocktail_party":
        return _cocktail_spectrum(g.param("d"), g.name)
    raise UnsupportedFamily(f"no closed-form spectrum for {g.name or 'this graph'}")


def spectrum(g: Graph, tol: float = DEFAULT_TOL) -> Spectrum:
    """Closed form when available, otherwise exact-refined decomposition."""
    try:
        return analytic_spectrum(g)
    except UnsupportedFamily:
        return decompose(normalized_adjacency(g), tol, source=g.name)


# ---------------------------------------------------------------- orderings

def _abs_equal(a: Cluster, b: Cluster, tol: float) -> bool:
    if a.exact and b.exact:
        return abs(a.exact_value) == abs(b.exact_value)
    return abs(abs(a.value) - abs(b.value)) <= tol


def frequency_order(s: Spectrum, tie_break="positive_first") -> Ordering:
    """Sort by decreasing ``|lambda|`` with eigenvalue 1 first.

    ``tie_break`` is ``"positive_first"``, ``"negative_first"``, or a sequence
    of cluster indices giving the preferred order inside any tie.
    """
    rest = sorted(range(1, s.m), key=lambda i: -abs(s.clusters[i].value))
    if isinstance(tie_break, str):
        if tie_break not in ("positive_first", "negative_first"):
            raise SpectralError(f"unknown tie policy {tie_break!r}")
        sign = -1 if tie_break == "positive_first" else 1
        rank = lambda i: sign * s.clusters[i].value  # noqa: E731
        policy = tie_break
    else:
        pref = [int(i) for i in tie_break]
        rank = lambda i: (pref.index(i) if i in pref else len(pref), -s.clusters[i].value)  # noqa: E731
        policy = "explicit"
    perm = [0]
    ties = []
    pos = 0
    while pos < len(rest):
        grp = [rest[pos]]
        while pos + len(grp) < len(rest) and _abs_equal(s.clusters[grp[0]], s.clusters[rest[pos + len(grp)]], s.tol):
            grp.append(rest[pos + len(grp)])
        pos += len(grp)
        if len(grp) > 1:
            grp.sort(key=rank)
            ties.append(TieRecord(tuple(grp), policy))
        perm.extend(grp)
    return Ordering(s, tuple(perm), tuple(ties), policy)


def custom_order(s: Spectrum, perm: Sequence[int]) -> Ordering:
    perm = tuple(int(p) for p in perm)
    if sorted(perm) != list(range(s.m)):
        raise BadPermutation(f"{perm} is not a permutation of the {s.m} eigenspaces")
    if perm[0] != s.trivial_index():
        raise BadPermutation("the eigenvalue-1 eigenspace must come first")
    return Ordering(s, perm, (), "custom")


def order_with_last(s: Spectrum, last: int, tie_break="positive_first") -> Ordering:
    """Frequency order with eigenspace ``last`` moved to the end."""
    o = frequency_order(s, tie_break)
    if last == s.trivial_index():
        raise BadPermutation("the eigenvalue-1 eigenspace cannot be last")
    perm = [i for i in o.perm if i != last] + [last]
    return Ordering(s, tuple(perm), o.ties, o.policy + "+last")


def extremal_k(o: Ordering) -> int:
    return o.m - 1


def partition(s: Spectrum, o: Ordering, k: int) -> Partition:
    if not 1 <= k < o.m:
        raise KOutOfRange(f"k must satisfy 1 <= k < {o.m}, got {k}")
    head = [s.clusters[i] for i in o.perm[1:k]]
    tail = [s.clusters[i] for i in o.perm[k:]]
    ek = all(c.exact for c in head)
    ekb = all(c.exact for c in tail)
    ones = np.ones((1, s.n), dtype=np.int64 if ekb else float)
    U_kbar = np.vstack([ones, _stack(tail, s.n, ekb)])
    s_k = 1 + sum(c.multiplicity for c in head)
    return Partition(k, _stack(head, s.n, ek), U_kbar, s_k, o, ek, ekb)


def size_bound_of(o: Ordering, k: int) -> int:
    return sum(o.cluster(i).multiplicity for i in range(k))


def check_spectrum(s: Spectrum, M, tol: float = 1e-8) -> None:
    """Raise if any spectrum invariant fails (used by tests and the CLI)."""
    M = np.asarray(M).astype(float)
    if sum(c.multiplicity for c in s.clusters) != s.n:
        raise SpectralError("multiplicities do not add up to n")
    B = np.vstack([c.basis.astype(float) for c in s.clusters])
    G = B @ B.T
    off = G - np.diag(np.diag(G))
    if np.abs(off).max() > tol * max(1.0, np.abs(np.diag(G)).max()):
        raise SpectralError("basis rows are not orthogonal")
    for c in s.clusters:
        if not -1 - tol <= c.value <= 1 + tol:
            raise SpectralError(f"eigenvalue {c.value} outside [-1, 1]")
        Bf = c.basis.astype(float)
        res = np.abs(Bf @ M - c.value * Bf).max() / max(1.0, np.abs(Bf).max())
        if res > tol:
            raise SpectralError(f"eigen-residual {res:.3g} for eigenvalue {c.value}")
    if s.clusters[0].value != 1.0 or s.clusters[0].multiplicity != 1:
        raise SpectralError("first cluster must be eigenvalue 1 with multiplicity 1")


def binomial_multiplicities(d: int) -> list:
    return [comb(d, i) for i in range(d + 1)]
