"""Hypercube designs from binary linear codes, with the code bound table."""
from galedesign import cubes_codes as cc
from galedesign import gale

for d in range(2, 11):
    design = cc.code_design(d)
    print(f"Q_{d}: code design of size {design.size:4d}, verified={gale.verify_design(design).passed}")

design, cert, is_facet = cc.face_certificate_for_code(6)
print("Q_6 complement is a face:", cert.is_face, "facet:", is_facet)

print()
print("d  m  C(d,m)  vertices  |W*|  facet bound")
for d in range(2, 12):
    print("  ".join(cc.table1(d).cells()))
