"""Cross-check the algebraic classifier against a brute-force patch check.

The classifier decides everything from the ideal basis. The oracle colours
every point of a coefficient box, applies each point isometry and looks for
a consistent colour permutation.
"""
from cyclocolour import brute_force_verify, classify, ideals_of_norm, point_group
from cyclocolour.ring import cyclotomic_ring

ring = cyclotomic_ring(8)
for ell in (2, 4, 8, 9, 17):
    for I in ideals_of_norm(8, ell):
        rep = classify(I)
        row = []
        for g in point_group(ring):
            v = brute_force_verify(I, g, 0, 2)
            in_H = rep.perfect or not g.is_reflection
            mark = "=" if (in_H, rep.S.contains(g)) == (v.consistent, v.identity) else "?"
            row.append(mark)
        print(f"l={ell:>2} {rep.S.label():<14} {''.join(row)}")

# a small box can be too small: 49 points cannot refute a reflection with 53 colours
I = ideals_of_norm(4, 53)[0]
g = point_group(cyclotomic_ring(4))[4]
print(g.label(), [brute_force_verify(I, g, 0, b).consistent for b in (3, 4, 5)])
