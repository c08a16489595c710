"""Hypercube constructions: weight slices, cut-polytope designs, and designs
from binary linear codes.

Bitstrings are ints: coordinate ``c`` (1-based) is bit ``c-1``.  GF(2)
matrices are lists of row bitmasks.
"""
from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from math import comb

import numpy as np

from .errors import DesignError, GaleDesignError, NoSuchCode
from .gale import Design, uniform_design, verify_design
from .graphs import hypercube
from .polytope import configuration_from_matrix, enumerate_facets, max_vertex_facets
from .spectral import (Ordering, Spectrum, analytic_spectrum, frequency_order,
                       order_with_last, walsh_rows, weight_class)


def popcount(x: int) -> int:
    return bin(x).count("1")


def bits_to_str(x: int, d: int) -> str:
    """Coordinate 1 first."""
    return "".join("1" if x >> c & 1 else "0" for c in range(d))


def str_to_bits(s: str) -> int:
    return sum(1 << c for c, ch in enumerate(s) if ch == "1")


# ---------------------------------------------------------------- GF(2)

def rows_from_matrix(M) -> list:
    M = np.asarray(M)
    return [sum(1 << c for c in range(M.shape[1]) if M[r, c] % 2) for r in range(M.shape[0])]


def matrix_from_rows(rows, d: int) -> np.ndarray:
    return np.array([[r >> c & 1 for c in range(d)] for r in rows], dtype=np.uint8).reshape(len(rows), d)


def gf2_echelon(rows) -> list:
    """Reduced row echelon form (pivot = lowest set bit), zero rows dropped."""
    basis: list = []
    for r in rows:
        for b in basis:
            if r & (b & -b):
                r ^= b
        if r:
            low = r & -r
            basis = [b ^ r if b & low else b for b in basis]
            basis.append(r)
    return sorted(basis, key=lambda b: b & -b)


def gf2_rank(rows) -> int:
    return len(gf2_echelon(rows))


def gf2_span(rows) -> list:
    """All elements of the row span, sorted."""
    span = {0}
    for r in gf2_echelon(rows):
        span |= {s ^ r for s in span}
    return sorted(span)


def gf2_kernel_basis(rows, d: int) -> list:
    ech = gf2_echelon(rows)
    pivots = {(b & -b).bit_length() - 1: b for b in ech}
    out = []
    for free in range(d):
        if free in pivots:
            continue
        v = 1 << free
        for p, b in pivots.items():
            if b >> free & 1:
                v |= 1 << p
        out.append(v)
    return out


@dataclass(frozen=True)
class LinearCode:
    """The binary code ``ker(M)`` for a full-rank check matrix ``M``."""

    d: int
    check_rows: tuple

    def __post_init__(self):
        if gf2_rank(self.check_rows) != len(self.check_rows):
            raise GaleDesignError("check matrix rows are not linearly independent over GF(2)")

    @classmethod
    def from_matrix(cls, M) -> "LinearCode":
        M = np.asarray(M)
        return cls(M.shape[1], tuple(rows_from_matrix(M)))

    @property
    def t(self) -> int:
        return len(self.check_rows)

    def check_matrix(self) -> np.ndarray:
        return matrix_from_rows(self.check_rows, self.d)

    def codewords(self) -> list:
        return gf2_span(gf2_kernel_basis(self.check_rows, self.d))

    def dual(self) -> list:
        return gf2_span(self.check_rows)

    def contains(self, y: int) -> bool:
        return all(popcount(r & y) % 2 == 0 for r in self.check_rows)


def hamming_check(r: int) -> np.ndarray:
    """``r x (2^r - 1)`` matrix; column ``j`` is ``j+1`` in binary, low bit in row 1."""
    if r < 2:
        raise GaleDesignError("Hamming check matrix needs r >= 2")
    return np.array([[(j >> s) & 1 for j in range(1, 1 << r)] for s in range(r)], dtype=np.uint8)


def _simplex_block(t: int) -> np.ndarray:
    if t == 1:
        return np.ones((1, 1), dtype=np.uint8)
    return hamming_check(t)


def max_equidistant_dimension(d: int, weight: int) -> int:
    """Largest t for which ``b`` copies of the t-dim simplex code fit in length d."""
    best = 0
    t = 1
    while weight % (1 << (t - 1)) == 0:
        b = weight >> (t - 1)
        if b * ((1 << t) - 1) <= d:
            best = t
        t += 1
    return best


def constant_weight_check(d: int, target_weight: int):
    """``(M, t)``: ``t x d`` matrix whose nonzero row-span elements all have
    weight ``target_weight``, with ``t`` as large as possible.

    Built as ``b`` side-by-side copies of the simplex block followed by zero
    columns on the right.
    """
    if not 1 <= target_weight <= d:
        raise NoSuchCode(f"weight {target_weight} impossible in length {d}")
    t = max_equidistant_dimension(d, target_weight)
    if t == 0:
        raise NoSuchCode(f"no equidistant code of weight {target_weight} in length {d}")
    b = target_weight >> (t - 1)
    blk = _simplex_block(t)
    M = np.hstack([blk] * b)
    pad = d - M.shape[1]
    if pad:
        M = np.hstack([M, np.zeros((t, pad), dtype=np.uint8)])
    return M, t


def is_constant_weight(M, weight: int) -> bool:
    return all(popcount(x) == weight for x in gf2_span(rows_from_matrix(M)) if x)


# ---------------------------------------------------------------- slices

@dataclass(frozen=True)
class CubeSlice:
    d: int
    i: int
    members: tuple

    def __len__(self) -> int:
        return len(self.members)


def slice_members(d: int, i: int) -> CubeSlice:
    return CubeSlice(d, i, tuple(weight_class(d, i)))


def slice_basis(d: int, i: int) -> np.ndarray:
    """Rows ``phi_x(y) = (-1)^(x.y)`` for ``x`` of weight ``i``, eigenvalue ``1 - 2i/d``."""
    if not 0 <= i <= d:
        raise GaleDesignError(f"slice index {i} outside 0..{d}")
    return walsh_rows(d, weight_class(d, i))


@dataclass(frozen=True)
class CubeCensus:
    d: int
    i: int
    dim: int
    n_vertices: int
    doubled: bool
    centrally_symmetric: bool
    pairing_holds: bool
    matches_configuration: bool


def cube_polytope_census(d: int, i: int) -> CubeCensus:
    """Vertex structure of the slice-``i`` eigenpolytope.

    Column ``y`` equals column ``~y`` for even ``i`` and its negative for odd
    ``i``; no other coincidences occur for ``1 <= i <= d-1``.
    """
    B = slice_basis(d, i)
    full = (1 << d) - 1
    sgn = 1 if i % 2 == 0 else -1
    pairing = all(np.array_equal(B[:, y], sgn * B[:, full ^ y]) for y in range(1 << d))
    cols = {tuple(B[:, y]) for y in range(1 << d)}
    nv = len(cols)
    if i == 0:
        conf_nv = 1  # the all-ones row alone; nothing to dedupe
    else:
        conf_nv = configuration_from_matrix(np.vstack([np.ones((1, 1 << d), dtype=np.int64), B])).n_vertices
    doubled = i % 2 == 0
    expected = (1 << (d - 1)) if doubled else (1 << d)
    if i == 0:
        expected = 1
    elif i == d:
        expected = 2
    cs = (not doubled) and nv == (1 << d)
    return CubeCensus(d, i, comb(d, i), nv, doubled, cs, pairing and nv == expected,
                      conf_nv == nv)


def cube_ordering(s: Spectrum, last: int) -> Ordering:
    """Frequency order with slice ``last`` at the end, preferring a tie policy
    that already puts it there."""
    for pol in ("positive_first", "negative_first"):
        o = frequency_order(s, pol)
        if o.last == last:
            return o
    return order_with_last(s, last)


# ---------------------------------------------------------------- cut polytope

@dataclass(frozen=True)
class CutVector:
    S: frozenset
    d: int
    chi: tuple      # indexed by pairs (i, j), i < j, in lexicographic order

    @staticmethod
    def edges(d: int) -> list:
        return list(combinations(range(d), 2))


def cut_vector(S, d: int) -> CutVector:
    S = frozenset(int(x) for x in S)
    chi = tuple(int((i in S) != (j in S)) for i, j in CutVector.edges(d))
    return CutVector(S, d, chi)


def _support(y: int, d: int) -> frozenset:
    return frozenset(c for c in range(d) if y >> c & 1)


def _triangle_supports(d: int):
    """(triple, variant, support) for the 4 triangle inequalities of each triple."""
    out = []
    for i, j, k in combinations(range(d), 3):
        bit = lambda y, c: y >> c & 1  # noqa: E731
        conds = [
            lambda y: bit(y, i) == bit(y, j) == bit(y, k),
            lambda y: bit(y, i) == bit(y, j) != bit(y, k),
            lambda y: bit(y, i) == bit(y, k) != bit(y, j),
            lambda y: bit(y, j) == bit(y, k) != bit(y, i),
        ]
        for v, cond in enumerate(conds):
            out.append(((i, j, k), v, tuple(y for y in range(1 << d) if cond(y))))
    return out


def cut_polytope_designs(d: int, verify: bool = True) -> list:
    """The ``4 C(d,3)`` triangle-inequality designs of size ``2^(d-2)``,
    for the ordering with slice 2 last."""
    if d < 3:
        raise GaleDesignError("cut polytope designs need d >= 3")
    s = analytic_spectrum(hypercube(d))
    o = cube_ordering(s, 2)
    out = []
    for _, _, W in _triangle_supports(d):
        des = uniform_design(W, o.m - 1, o)
        if verify:
            rep = verify_design(des, s, o)
            if not rep.passed:
                raise DesignError("triangle design failed verification: " + "; ".join(rep.reasons))
        out.append(des)
    return out


@dataclass(frozen=True)
class TriangleFacetReport:
    d: int
    affine_equivalent: bool
    n_facets: int
    n_max_facets: int
    max_facet_vertices: int
    triangle_facets_match: bool

    @property
    def passed(self) -> bool:
        return (self.affine_equivalent and self.triangle_facets_match
                and self.n_max_facets == 4 * comb(self.d, 3)
                and self.max_facet_vertices == 3 * 2 ** (self.d - 3))


def triangle_facet_check(d: int) -> TriangleFacetReport:
    """Compare the slice-2 eigenpolytope with the cut polytope of ``K_d``."""
    if d < 3:
        raise GaleDesignError("needs d >= 3")
    B = slice_basis(d, 2)
    U = np.vstack([np.ones((1, 1 << d), dtype=np.int64), B])
    c = configuration_from_matrix(U)
    # pair x = e_i + e_j in weight order matches the lexicographic K_d edge order
    pairs = [tuple(cc for cc in range(d) if x >> cc & 1) for x in weight_class(d, 2)]
    order = [pairs.index(e) for e in CutVector.edges(d)]
    affine = True
    for y in range(1 << d):
        chi = np.array(cut_vector(_support(y, d), d).chi)
        if not np.array_equal(B[order, y], 1 - 2 * chi):
            affine = False
            break
    facets = enumerate_facets(c)
    best = max_vertex_facets(c, facets)
    n = 1 << d
    want = sorted(tuple(j for j in range(n) if j not in set(W)) for _, _, W in _triangle_supports(d))
    got = sorted(f.incident_labels for f in best)
    return TriangleFacetReport(d, affine, len(facets), len(best),
                               max(len(f.incident_classes) for f in best), want == got)


# ---------------------------------------------------------------- code designs

def extremal_slice(d: int) -> int:
    """Slice index whose eigenspace is put last for the code construction."""
    r = d % 4
    if r == 2 or r == 0:
        return d // 2
    if r == 1:
        return (d - 1) // 2
    return (d + 1) // 2


def code_for(d: int):
    """(code, m, t): check matrix with constant row-span weight ``m``."""
    if d < 2:
        raise NoSuchCode("code designs need d >= 2")
    m = extremal_slice(d)
    M, t = constant_weight_check(d, m)
    return LinearCode.from_matrix(M), m, t


def code_averages_direct(code: LinearCode, x: int) -> bool:
    words = code.codewords()
    total = sum(1 - 2 * (popcount(x & y) & 1) for y in words)
    target = len(words) if x == 0 else 0
    return total == target


def code_averages(code: LinearCode, x: int, cross_check: bool = True) -> bool:
    """Does uniform weight on ``ker(M)`` average ``phi_x``?  True iff ``x`` is
    not a nonzero element of the row span of ``M``."""
    ech = gf2_echelon(code.check_rows)
    r = x
    for b in ech:
        if r & (b & -b):
            r ^= b
    ans = x == 0 or r != 0
    if cross_check and code.d <= 12 and code_averages_direct(code, x) != ans:
        raise GaleDesignError(f"averaging criterion disagrees with direct summation at x={x}")
    return ans


def code_design(d: int, verify: bool = True) -> Design:
    """Smallest known combinatorial extremal design on ``Q_d`` from a code."""
    code, m, t = code_for(d)
    s = analytic_spectrum(hypercube(d))
    o = cube_ordering(s, m)
    des = uniform_design(code.codewords(), o.m - 1, o)
    if len(des.support) != 2 ** (d - t):
        raise DesignError("unexpected code size")
    if verify:
        rep = verify_design(des, s, o)
        if not rep.passed:
            raise DesignError("code design failed verification: " + "; ".join(rep.reasons))
    return des


# ---------------------------------------------------------------- table

@dataclass(frozen=True)
class Table1Row:
    d: int
    m: int
    dim: int
    vertices: int
    doubled: bool
    design_bound: int
    facet_bound: int

    def cells(self) -> list:
        v = f"{self.vertices}·2" if self.doubled else str(self.vertices)
        return [str(self.d), str(self.m), str(self.dim), v, str(self.design_bound), str(self.facet_bound)]

    def as_dict(self) -> dict:
        return {"d": self.d, "m": self.m, "dim": self.dim, "vertices": self.vertices,
                "doubled": self.doubled, "design_bound": self.design_bound,
                "facet_vertex_bound": self.facet_bound}


def table1(d: int) -> Table1Row:
    if d < 2:
        raise GaleDesignError("table rows start at d = 2")
    m = extremal_slice(d)
    t = max_equidistant_dimension(d, m)
    doubled = m % 2 == 0
    nv = 2 ** (d - 1) if doubled else 2 ** d
    bound = 2 ** (d - t)
    return Table1Row(d, m, comb(d, m), nv, doubled, bound, 2 ** d - bound)


TABLE1_HEADER = ["d", "m", "dim(P_m)", "#V(P_m)", "|W*| <=", "#V(F*) >="]


def format_table1(rows) -> str:
    body = [TABLE1_HEADER] + [r.cells() for r in rows]
    widths = [max(len(r[c]) for r in body) for c in range(len(TABLE1_HEADER))]
    return "\n".join("  ".join(cell.rjust(w) for cell, w in zip(r, widths)) for r in body) + "\n"


@dataclass(frozen=True)
class CubeBounds:
    d: int
    residue: int
    facet_bound: int        # bound from doubled vertices / central symmetry
    code_bound: int


def cube_upper_bounds(d: int) -> CubeBounds:
    """Upper bounds on a minimal positive extremal design of ``Q_d``.

    The vertex-counting bound ``facet_bound`` never beats the code bound;
    for ``d = 2 mod 4`` the code bound ``2^(d-1)`` comes from one parity check.
    """
    n = 2 ** d
    r = d % 4
    if r == 0:
        b = n - 2 * comb(d, d // 2)
    elif r == 1:
        b = min(n - 2 * comb(d, (d - 1) // 2), n - comb(d, (d + 1) // 2))
    elif r == 2:
        b = n - comb(d, d // 2)
    else:
        b = min(n - 2 * comb(d, (d + 1) // 2), n - comb(d, (d - 1) // 2))
    return CubeBounds(d, r, b, table1(d).design_bound if d >= 2 else 1)


def face_certificate_for_code(d: int):
    """Certify that the complement of the code design is a face (and, when
    the face has full rank, a facet) without enumerating all facets."""
    from .polytope import is_face, is_facet_set
    from .spectral import partition
    des = code_design(d)
    o = des.ordering
    p = partition(o.spectrum, o, des.k)
    c = configuration_from_matrix(p.U_kbar)
    W = set(des.support)
    face = [j for j in range(c.n) if j not in W]
    cert = is_face(c, face, p.U_k)
    return des, cert, cert.is_face and is_facet_set(c, face)
