"""Extremal designs of the Petersen graph read off the facets of its eigenpolytope."""
from collections import Counter

from galedesign import gale, graphs, spectral
from galedesign.polytope import f_vector

g = graphs.named("petersen")
s = spectral.spectrum(g)
order = spectral.frequency_order(s)
print("ordering:", " < ".join(str(order.cluster(i).exact_value) for i in range(order.m)))

part = spectral.partition(s, order, order.m - 1)
config, facets, designs = gale.facet_designs(part)
print("f-vector:", f_vector(config, facets))
print("facet sizes:", dict(Counter(len(f.incident_classes) for f in facets)))

for d in sorted(designs, key=lambda d: (d.size, d.support)):
    weights = ", ".join(str(w) for w in d.weights)
    labels = ",".join(str(v + 1) for v in d.support)
    print(f"  {{{labels}}}  {d.kind:14s}  [{weights}]  verified={gale.verify_design(d).passed}")
