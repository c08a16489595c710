from fractions import Fraction
from itertools import combinations

import numpy as np
import pytest

from galedesign import gale, graphs, io, spectral
from galedesign.errors import BudgetExceeded, DesignError, NotAFace, NotCombinatorial, NotStable
from galedesign.gale import (Design, brute_force_positive_circuits, check_stable_set_design, complement,
                             design_adjacency, design_from_face, facet_designs, minimal_positive_designs,
                             size_bound, uniform_design, verify_design, weighted_circuit_designs)

from helpers import antipodal_pairs, extremal, one

OCTA_U = np.array([[1, 1, -1, -1, 0, 0], [0, 0, -1, -1, 1, 1]])


def petersen():
    g = graphs.named("petersen")
    s, o, p = extremal(g)
    return g, s, o, p


def test_truncated_tetrahedron_face():
    g = graphs.named("truncated_tetrahedron")
    s, o, p = extremal(g)
    d = design_from_face(one({3, 4, 9, 12, 1, 6, 7, 11}), p)
    assert d.support == one({2, 5, 8, 10}) and d.kind == "combinatorial"
    assert verify_design(d).passed


def test_truncated_cuboctahedron_face():
    g = graphs.named("truncated_cuboctahedron")
    s, o, p = extremal(g)
    cls = lambda S: {j for j in range(48) if (j % 6) + 1 in S}  # noqa: E731
    d = design_from_face(sorted(cls({3, 4, 5, 6})), p)
    assert set(d.support) == cls({1, 2}) and d.size == 16 and d.kind == "combinatorial"
    assert verify_design(d).passed


def test_petersen_simplicial_facet():
    g, s, o, p = petersen()
    d = design_from_face(one(range(6, 11)), p)
    assert d.support == one(range(1, 6)) and d.kind == "combinatorial"


def test_not_a_face():
    g, s, o, p = petersen()
    from galedesign.polytope import configuration_from_matrix, face_lattice
    c = configuration_from_matrix(p.U_kbar)
    faces = {c.labels_of(F) for F in face_lattice(c)}
    assert len(faces & set(combinations(range(10), 2))) == 45  # every pair spans an edge
    triple = next(T for T in combinations(range(10), 3) if T not in faces)
    with pytest.raises(NotAFace):
        design_from_face(triple, p)
    with pytest.raises(NotAFace):
        design_from_face(range(10), p)


def test_petersen_minimal_designs():
    g, s, o, p = petersen()
    ds = minimal_positive_designs(g, o, o.m - 1)
    sizes = sorted(d.size for d in ds)
    assert sizes == [4] * 10 + [5] * 12
    for d in ds:
        assert verify_design(d).passed
        if d.size == 5:
            assert d.kind == "combinatorial"
        else:
            # two weight levels: the centre of a closed neighbourhood carries 2/5
            assert d.kind == "positive"
            w = d.weight_map()
            heavy = [v for v in w if w[v] == Fraction(2, 5)]
            assert len(heavy) == 1 and sorted(w.values()) == [Fraction(1, 5)] * 3 + [Fraction(2, 5)]
            assert set(d.support) == {heavy[0], *g.neighbors(heavy[0])}
    # the figure's 6-vertex-facet design: heavy vertex 7 with neighbours 2, 9, 10
    figure = [d for d in ds if d.support == one({2, 7, 9, 10})]
    assert len(figure) == 1 and figure[0].weight_map()[6] == Fraction(2, 5)


def test_petersen_size4_never_uniform():
    g, s, o, p = petersen()
    for W in combinations(range(10), 4):
        assert not verify_design(uniform_design(W, o.m - 1, o)).passed


def test_octahedron_orders():
    g = graphs.named("octahedron")
    s = spectral.spectrum(g)
    o = spectral.order_with_last(s, s.index_of_value(-0.5))
    ds = minimal_positive_designs(g, o, o.m - 1)
    assert len(ds) == 3
    anti = antipodal_pairs(g)
    assert {d.support for d in ds} == anti
    fo = spectral.frequency_order(s)
    ds = minimal_positive_designs(g, fo, fo.m - 1)
    assert len(ds) == 8 and {d.size for d in ds} == {3} and {d.kind for d in ds} == {"combinatorial"}


def test_graph_size_mismatch():
    g, s, o, p = petersen()
    with pytest.raises(DesignError):
        minimal_positive_designs(graphs.cycle(5), o, 2)


def test_verify_icosahedron_antipodal():
    g = graphs.named("icosahedron")
    s = spectral.spectrum(g)
    o = spectral.frequency_order(s)
    for u, v in antipodal_pairs(g):
        rep = verify_design(uniform_design((u, v), 3, o))
        assert rep.passed and rep.classification == "combinatorial"


def test_verify_single_vertex():
    for g in (graphs.named("petersen"), graphs.cycle(7), graphs.hypercube(3)):
        s = spectral.spectrum(g)
        o = spectral.frequency_order(s)
        assert verify_design(Design((0,), (Fraction(1),), "combinatorial", 1, o)).passed


def test_verify_zero_sum_circuit():
    g = graphs.cocktail_party(3)
    s = spectral.spectrum(g)
    o = spectral.frequency_order(s)
    # frequency k=2 averages the -1/2 eigenspace, which contains both rows of OCTA_U
    M = graphs.normalized_adjacency(g)
    for r in OCTA_U:
        assert [sum(M[i, j] * int(r[j]) for j in range(6)) for i in range(6)] == [Fraction(-1, 2) * x for x in r]
    d = Design((4, 5), (Fraction(1), Fraction(-1)), "weighted", 2, o)
    rep = verify_design(d)
    assert not rep.passed and rep.total_weight == 0
    assert any("sum to zero" in r for r in rep.reasons)


def test_verify_report_contents():
    g, s, o, p = petersen()
    rep = verify_design(uniform_design(range(5), 2, o))
    assert rep.passed and rep.exact and rep.total_weight == 1
    assert [r[2] for r in rep.residuals] == [0]
    # an edge does not average the -2/3 eigenspace
    rep = verify_design(uniform_design((0, 1), 2, o))
    assert not rep.passed and rep.residuals[0][2] > 0


def test_verify_kind_and_support_checks():
    g, s, o, p = petersen()
    ds = [d for d in minimal_positive_designs(g, o, 2) if d.size == 4]
    d = ds[0]
    assert not verify_design(Design(d.support, d.weights, "combinatorial", 2, o)).passed
    zeroed = Design(d.support, (Fraction(0),) + d.weights[1:], "positive", 2, o)
    rep = verify_design(zeroed)
    assert not rep.passed and any("support mismatch" in r for r in rep.reasons)
    assert not verify_design(Design((0, 0), (Fraction(1, 2),) * 2, "positive", 2, o)).passed


def test_verify_float_path():
    g = graphs.cycle(9)
    s, o, p = extremal(g)
    for d in minimal_positive_designs(g, o, o.m - 1):
        rep = verify_design(d)
        assert rep.passed and not rep.exact
        assert max(r[2] for r in rep.residuals) <= 1e-8


def test_brute_force_octahedron_config():
    sup = brute_force_positive_circuits(OCTA_U, 6)
    assert (0, 2, 4) in sup  # {1,3,5}
    # one column from each coincident pair
    assert sorted(sup) == sorted((a, b, c) for a in (0, 1) for b in (2, 3) for c in (4, 5))


def test_brute_force_zero_column():
    U = np.array([[1, 0, -1, 2], [1, 0, 1, -1]])
    assert (1,) in brute_force_positive_circuits(U, 4)


def test_brute_force_c8():
    g = graphs.cycle(8)
    s, o, p = extremal(g)
    sup = brute_force_positive_circuits(p.U_k, 8)
    assert sorted(sup) == sorted(tuple(sorted(i for i in range(8) if i % 4 in (j, (j + 1) % 4))) for j in range(4))


def test_brute_force_budget():
    with pytest.raises(BudgetExceeded):
        brute_force_positive_circuits(np.ones((1, 30)), 10, budget=1000)


def test_circuits_are_minimal_dependences():
    U = np.array([[1, 2, 0, 1, -1], [0, 1, 1, -1, 2]])
    for c in gale.circuits(U, 5):
        v = np.zeros(5, dtype=object)
        v[list(c.support)] = c.vector
        assert not np.any(U.astype(object) @ v)
        for r in range(1, len(c.support)):
            for sub in combinations(c.support, r):
                assert np.linalg.matrix_rank(U[:, list(sub)].astype(float)) == len(sub)


def test_weighted_circuit_designs_cocktail():
    for d in (2, 3, 4):
        g = graphs.cocktail_party(d)
        s, o, p = extremal(g)
        res = weighted_circuit_designs(p.U_k, g.n, p.k, o)
        facet_sups = {x.support for x in minimal_positive_designs(g, o, p.k)}
        assert {x.support for x in res.designs} == facet_sups
        assert all(verify_design(x).passed for x in res.designs)
        assert all(gale.classify_weights(x.weights) == "combinatorial" for x in res.designs)
        assert all(c.total == 0 for c in res.non_designs) and res.non_designs


def test_weighted_equals_positive_min_cycles():
    for n in (5, 6, 7, 8, 9, 10):
        g = graphs.cycle(n)
        s, o, p = extremal(g)
        res = weighted_circuit_designs(p.U_k, p.U_k.shape[0] + 1, p.k, o)
        pos = minimal_positive_designs(g, o, p.k)
        assert res.minimum_size() == min(d.size for d in pos)
        assert all(verify_design(d).passed for d in res.designs)


def test_complement():
    g = graphs.cycle(4)
    s = spectral.spectrum(g)
    o = spectral.order_with_last(s, s.index_of_value(-1.0))
    half = uniform_design((0, 2), 2, o)
    assert verify_design(half).passed
    assert complement(half).support == (1, 3)
    c3 = graphs.cocktail_party(3)
    s, o, p = extremal(c3)
    for d in minimal_positive_designs(c3, o, p.k):
        co = complement(d)
        assert verify_design(co).passed
        assert co.support in {x.support for x in minimal_positive_designs(c3, o, p.k)}
    pg, ps, po, pp = petersen()
    pd = [d for d in minimal_positive_designs(pg, po, 2) if d.kind == "positive"]
    with pytest.raises(NotCombinatorial):
        complement(pd[0])


def test_adjacency_petersen():
    g, s, o, p = petersen()
    c, facets, ds = facet_designs(p)
    adj = design_adjacency(ds, facets, c)
    i = [d.support for d in ds].index(one(range(1, 6)))
    nb = adj.neighbors(i)
    assert len(nb) == 5
    for j in nb:
        u = adj.unions[(min(i, j), max(i, j))]
        assert set(u.support) == set(ds[i].support) | set(ds[j].support)
        assert verify_design(u).passed and u.kind in ("positive", "combinatorial")
    # the adjacency graph is the skeleton of the polar polytope: every simplicial facet has 5 ridges
    for t, f in enumerate(facets):
        if len(f.incident_classes) == 5:
            assert len(adj.neighbors(t)) == 5


def test_adjacency_triangle():
    g = graphs.named("octahedron")
    s = spectral.spectrum(g)
    o = spectral.order_with_last(s, s.index_of_value(-0.5))
    c, facets, ds = facet_designs(spectral.partition(s, o, o.m - 1))
    adj = design_adjacency(ds, facets, c)
    assert adj.edges == ((0, 1), (0, 2), (1, 2))
    for (i, j), u in adj.unions.items():
        assert u.size == 4 and verify_design(u).passed
        missing = set(range(6)) - set(u.support)
        assert missing in [set(cl) for cl in c.classes]


def test_adjacency_segment():
    g = graphs.cycle(4)
    s = spectral.spectrum(g)
    o = spectral.order_with_last(s, s.index_of_value(-1.0))
    c, facets, ds = facet_designs(spectral.partition(s, o, o.m - 1))
    assert c.n_vertices == 2
    adj = design_adjacency(ds, facets, c)
    assert len(ds) == 2 and adj.edges == ((0, 1),)


def test_size_bound():
    g = graphs.named("icosahedron")
    s = spectral.spectrum(g)
    o = spectral.custom_order(s, [0, 2, 1, 3])
    assert size_bound(s, o, 2) == 6 and size_bound(s, o, 3) == 9
    assert size_bound(s, o, 1) == 1
    for d in (3, 4, 5):
        q = spectral.spectrum(graphs.hypercube(d))
        fo = spectral.frequency_order(q)
        assert size_bound(q, fo, fo.m - 1) == 2**d - fo.cluster(fo.m - 1).multiplicity


def brute_stable_sets(g, size):
    return [W for W in combinations(range(g.n), size)
            if not any(u in W and v in W for u, v in g.edges)]


def test_stable_set_petersen():
    g = graphs.named("petersen")
    assert not brute_stable_sets(g, 5)
    four = brute_stable_sets(g, 4)
    assert four
    for W in four:
        rep = check_stable_set_design(g, W)
        assert rep.passed and rep.sharp and rep.complement_passed
        assert rep.hoffman_ratio == Fraction(2, 5) == rep.size_ratio


def test_stable_set_cocktail_single():
    g = graphs.cocktail_party(4)
    rep = check_stable_set_design(g, [0])
    assert not rep.sharp and rep.size_ratio == Fraction(1, 8)
    assert isinstance(rep.passed, bool)


def test_not_stable():
    with pytest.raises(NotStable):
        check_stable_set_design(graphs.named("petersen"), [0, 1])


def test_design_json_roundtrip():
    g, s, o, p = petersen()
    ds = minimal_positive_designs(g, o, 2)
    obj = io.designs_to_json("petersen", o, 2, ds)
    assert obj["schema"] == 1
    back = io.designs_from_json(obj, 2, o)
    assert [d.support for d in back] == [d.support for d in ds]
    assert [d.weights for d in back] == [d.weights for d in ds]
    assert all(verify_design(d).passed for d in back)
