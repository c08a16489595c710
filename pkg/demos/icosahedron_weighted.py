"""Positive versus signed minimal designs on the icosahedron.

With eigenvalues ordered 1, -1/5, 1/sqrt5, -1/sqrt5, the smallest positively
weighted 3-design has 9 vertices, while allowing negative weights brings it
down to 7.
"""
from galedesign import gale, graphs, spectral

g = graphs.named("icosahedron")
s = spectral.spectrum(g)
root5 = 5 ** -0.5
order = spectral.custom_order(s, [0, s.index_of_value(-0.2), s.index_of_value(root5), s.index_of_value(-root5)])

positive = gale.minimal_positive_designs(g, order, 3)
print("smallest positive 3-design:", min(d.size for d in positive), "vertices,", len(positive), "designs found")

U = spectral.partition(s, order, 3).U_k
signed = gale.weighted_circuit_designs(U, U.shape[0] + 1, 3, order)
best = signed.minimum()
print("smallest weighted 3-design:", signed.minimum_size(), "vertices,", len(best), "of them")
d = best[0]
print("  example support:", [v + 1 for v in d.support])
print("  weights:", [round(float(w), 4) for w in d.weights])
