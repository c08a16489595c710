from math import comb

import numpy as np
import pytest

from galedesign import cubes_codes as cc
from galedesign import graphs, spectral
from galedesign.errors import GaleDesignError, NoSuchCode
from galedesign.gale import complement, verify_design
from galedesign.polytope import configuration_from_matrix, enumerate_facets

# the published table, cell for cell ("N·2" marks doubled vertices)
TABLE1 = [
    ("2", "1", "2", "4", "2", "2"),
    ("3", "2", "3", "4·2", "2", "6"),
    ("4", "2", "6", "8·2", "4", "12"),
    ("5", "2", "10", "16·2", "8", "24"),
    ("6", "3", "20", "64", "32", "32"),
    ("7", "4", "35", "64·2", "16", "112"),
    ("8", "4", "70", "128·2", "32", "224"),
    ("9", "4", "126", "256·2", "64", "448"),
    ("10", "5", "252", "1024", "512", "512"),
    ("11", "6", "462", "1024·2", "512", "1536"),
]

M3 = np.array([[1, 0, 1, 0, 1, 0, 1], [0, 1, 1, 0, 0, 1, 1], [0, 0, 0, 1, 1, 1, 1]])


def brute_span(M):
    M = np.asarray(M) % 2
    t, d = M.shape
    return {tuple(np.array(c) @ M % 2) for c in np.ndindex(*([2] * t))}


def test_bits_roundtrip():
    assert cc.bits_to_str(0b011, 4) == "1100"
    assert cc.str_to_bits("1100") == 3
    for x in range(64):
        assert cc.str_to_bits(cc.bits_to_str(x, 6)) == x


def test_gf2_helpers(rng):
    for _ in range(30):
        d = int(rng.integers(3, 9))
        M = rng.integers(0, 2, size=(int(rng.integers(1, d)), d))
        rows = cc.rows_from_matrix(M)
        span = {cc.str_to_bits("".join(map(str, v))) for v in brute_span(M)}
        assert set(cc.gf2_span(rows)) == span
        r = cc.gf2_rank(rows)
        assert len(span) == 2**r
        ker = cc.gf2_kernel_basis(rows, d)
        assert len(ker) == d - r
        for v in ker:
            assert all(cc.popcount(v & row) % 2 == 0 for row in rows)
        assert cc.gf2_rank(ker) == len(ker)


def test_linear_code_invariants():
    code = cc.LinearCode.from_matrix(M3)
    assert code.t == 3 and len(code.codewords()) == 2**4 and len(code.dual()) == 2**3
    for a in code.codewords():
        for b in code.dual():
            assert cc.popcount(a & b) % 2 == 0
    assert all(code.contains(y) for y in code.codewords())
    with pytest.raises(GaleDesignError):
        cc.LinearCode.from_matrix([[1, 1, 0], [1, 1, 0]])


def test_slice_basis_q3():
    for i in range(4):
        B = cc.slice_basis(3, i)
        assert B.shape == (comb(3, i), 8)
    assert (cc.slice_basis(3, 0) == 1).all()
    par = cc.slice_basis(3, 3)[0]
    assert list(par) == [(-1) ** cc.popcount(y) for y in range(8)]


@pytest.mark.parametrize("d", range(1, 7))
def test_slice_basis_eigen(d):
    A = graphs.hypercube(d).adjacency().astype(np.int64)
    for i in range(d + 1):
        B = cc.slice_basis(d, i)
        assert (B @ A == (d - 2 * i) * B).all()  # exact integer eigen-equation
        G = B @ B.T
        assert (G == (1 << d) * np.eye(len(B), dtype=np.int64)).all()
        sl = cc.slice_members(d, i)
        assert len(sl) == comb(d, i) and all(cc.popcount(x) == i for x in sl.members)


def test_slice_bad_index():
    with pytest.raises(GaleDesignError):
        cc.slice_basis(3, 4)


@pytest.mark.parametrize("d", range(2, 9))
def test_pairing_and_injectivity(d):
    full = (1 << d) - 1
    for i in range(1, d):
        B = cc.slice_basis(d, i)
        sgn = 1 if i % 2 == 0 else -1
        for y in range(1 << d):
            assert np.array_equal(B[:, y], sgn * B[:, full ^ y])
        cols = {}
        for y in range(1 << d):
            cols.setdefault(tuple(B[:, y]), []).append(y)
        for ys in cols.values():
            assert len(ys) == (2 if i % 2 == 0 else 1)
            if len(ys) == 2:
                assert ys[0] ^ ys[1] == full


def test_census_examples():
    c = cc.cube_polytope_census(3, 1)
    assert (c.dim, c.n_vertices, c.centrally_symmetric) == (3, 8, True)
    c = cc.cube_polytope_census(3, 2)
    assert (c.dim, c.n_vertices, c.doubled) == (3, 4, True)
    c = cc.cube_polytope_census(6, 3)
    assert (c.dim, c.n_vertices, c.centrally_symmetric) == (20, 64, True)
    for d in range(2, 7):
        for i in range(0, d + 1):
            r = cc.cube_polytope_census(d, i)
            assert r.pairing_holds and r.matches_configuration, (d, i)


def test_q3_slice1_is_cube():
    U = np.vstack([np.ones((1, 8), dtype=np.int64), cc.slice_basis(3, 1)])
    fs = enumerate_facets(configuration_from_matrix(U))
    assert len(fs) == 6 and {len(f.incident_labels) for f in fs} == {4}


@pytest.mark.parametrize("d,count,size", [(3, 4, 2), (4, 16, 4), (5, 40, 8)])
def test_cut_designs(d, count, size):
    ds = cc.cut_polytope_designs(d)
    assert len(ds) == count == 4 * comb(d, 3)
    assert {x.size for x in ds} == {size}
    assert len({x.support for x in ds}) == count
    for x in ds:
        assert verify_design(x).passed and x.kind == "combinatorial"
        full = (1 << d) - 1
        assert all(full ^ y in x.support for y in x.support)  # closed under complement of S


def test_cut_designs_match_min_facets_d4():
    from galedesign.gale import minimal_positive_designs
    s = spectral.spectrum(graphs.hypercube(4))
    o = cc.cube_ordering(s, 2)
    ds = minimal_positive_designs(None, o, o.m - 1)
    best = min(x.size for x in ds)
    assert best == 4
    assert {x.support for x in ds if x.size == best} == {x.support for x in cc.cut_polytope_designs(4)}


def test_cut_designs_small_d():
    with pytest.raises(GaleDesignError):
        cc.cut_polytope_designs(2)


def test_cut_vector():
    v = cc.cut_vector({0, 2}, 4)
    assert v.chi == cc.cut_vector({1, 3}, 4).chi
    assert v.chi == (1, 0, 1, 1, 0, 1)


@pytest.mark.parametrize("d", [3, 4, 5])
def test_triangle_facets(d):
    r = cc.triangle_facet_check(d)
    assert r.passed and r.affine_equivalent
    assert r.n_max_facets == 4 * comb(d, 3) and r.max_facet_vertices == 3 * 2 ** (d - 3)


def test_hamming():
    assert (cc.hamming_check(3) == M3).all()
    assert (cc.hamming_check(2) == np.array([[1, 0, 1], [0, 1, 1]])).all()
    for r in (2, 3, 4, 5):
        H = cc.hamming_check(r)
        assert H.shape == (r, 2**r - 1)
        span = cc.gf2_span(cc.rows_from_matrix(H))
        assert {cc.popcount(x) for x in span if x} == {2 ** (r - 1)}
    with pytest.raises(GaleDesignError):
        cc.hamming_check(1)


def max_t_brute(d, w):
    """Bonisoli: b copies of the t-dim simplex code plus zeros, weight b*2^(t-1)."""
    return max((t for t in range(1, d + 1) for b in range(1, d + 1)
                if b * 2 ** (t - 1) == w and b * (2**t - 1) <= d), default=0)


def test_constant_weight_examples():
    M, t = cc.constant_weight_check(7, 4)
    assert t == 3 and (M == M3).all()
    M, t = cc.constant_weight_check(11, 6)
    assert t == 2 and M.shape == (2, 11) and not M[:, 9:].any()
    assert (M[:, :3] == M[:, 3:6]).all() and (M[:, :3] == M[:, 6:9]).all()
    assert {cc.popcount(x) for x in cc.gf2_span(cc.rows_from_matrix(M)) if x} == {6}
    shown = np.array([[1, 1, 1, 1, 0, 0, 0, 0, 0], [1, 1, 0, 0, 1, 1, 0, 0, 0]])
    assert cc.is_constant_weight(shown, 4)


def test_constant_weight_exhaustive():
    for d in range(2, 20):
        for w in range(1, d + 1):
            t = max_t_brute(d, w)
            if t == 0:
                with pytest.raises(NoSuchCode):
                    cc.constant_weight_check(d, w)
                continue
            M, tt = cc.constant_weight_check(d, w)
            assert tt == t and M.shape == (t, d)
            assert cc.gf2_rank(cc.rows_from_matrix(M)) == t
            span = cc.gf2_span(cc.rows_from_matrix(M))
            assert len(span) == 2**t and all(cc.popcount(x) == w for x in span if x)


def test_t_matches_factorization():
    # d = 3 mod 4: d+1 = 2^t b with t maximal; d = 1 mod 4: d-1 = 2^t b
    for d in range(3, 60, 4):
        m = (d + 1) // 2
        t = ((d + 1) & -(d + 1)).bit_length() - 1
        assert cc.code_for(d)[2] == t, d
        assert cc.table1(d).design_bound == 2 ** (d - t)
        assert m == cc.code_for(d)[1]
    for d in range(5, 60, 4):
        t = ((d - 1) & -(d - 1)).bit_length() - 1
        assert cc.code_for(d)[2] == t, d


@pytest.mark.parametrize("d,m,size", [(2, 1, 2), (3, 2, 2), (4, 2, 4), (5, 2, 8), (6, 3, 32),
                                      (7, 4, 16), (8, 4, 32), (9, 4, 64), (10, 5, 512)])
def test_code_design(d, m, size):
    des = cc.code_design(d)
    assert des.size == size and des.kind == "combinatorial"
    assert des.ordering.spectrum.clusters[des.ordering.last].key == m
    assert verify_design(des).passed
    co = complement(des)
    assert verify_design(co).passed


def test_code_design_d6_uses_canonical_x():
    code, m, t = cc.code_for(6)
    assert code.check_rows == (0b000111,)
    assert set(cc.code_design(6).support) == {y for y in range(64) if cc.popcount(y & 0b111) % 2 == 0}


def test_code_design_facets_small():
    # d = 2 and d = 6 are = 2 mod 4; for d = 2 enumerate facets, for d = 6 check the face certificate
    s = spectral.spectrum(graphs.hypercube(2))
    des = cc.code_design(2)
    o = des.ordering
    c = configuration_from_matrix(spectral.partition(s, o, des.k).U_kbar)
    comp = tuple(j for j in range(4) if j not in des.support)
    assert comp in {f.incident_labels for f in enumerate_facets(c)}
    d6, cert, facet = cc.face_certificate_for_code(6)
    assert cert.is_face and cert.proper and facet and d6.size == 32
    # the incident face carries 2^(d-1) columns
    assert len(cert.face_labels) == 32


def test_code_averages_examples():
    code = cc.LinearCode.from_matrix(np.ones((1, 5), dtype=int))
    assert cc.code_averages(code, 0)
    assert not cc.code_averages(code, 0b11111)
    for x in range(1, 31):
        want = sum((-1) ** cc.popcount(x & y) for y in range(32) if cc.popcount(y) % 2 == 0) == 0
        assert want and cc.code_averages(code, x)


def test_code_averages_nonzero_row():
    code, m, t = cc.code_for(7)
    for r in code.check_rows:
        assert not cc.code_averages(code, r)


def test_table1_rows():
    got = [tuple(cc.table1(d).cells()) for d in range(2, 12)]
    assert got == TABLE1


def test_table13():
    r = cc.table1(13)
    assert (r.m, r.design_bound) == (6, 2**11)


def test_format_table1():
    text = cc.format_table1([cc.table1(2)])
    assert text.splitlines()[1].split() == list(TABLE1[0])


def test_cube_upper_bounds():
    assert cc.cube_upper_bounds(4).facet_bound == 16 - 2 * 6
    b6 = cc.cube_upper_bounds(6)
    assert (b6.facet_bound, b6.code_bound) == (44, 32)
    b5 = cc.cube_upper_bounds(5)
    assert b5.facet_bound == min(32 - 20, 32 - 10) == 12 and b5.code_bound == 8
    for d in range(2, 14):
        b = cc.cube_upper_bounds(d)
        assert b.code_bound <= b.facet_bound
        if d % 4 == 2:
            assert b.code_bound == 2 ** (d - 1)


def test_cube_ordering_prefers_policy():
    s = spectral.spectrum(graphs.hypercube(5))
    o = cc.cube_ordering(s, 2)
    assert o.last == 2 and "+last" not in o.policy
    o = cc.cube_ordering(s, 3)
    assert o.last == 3
