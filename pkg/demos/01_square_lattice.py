"""Colourings of the Gaussian integers Z[i] by ideals.

Walks through the square lattice: which numbers of colours occur, which of
those colourings are perfect, and what the colour symmetries look like.
"""
from cyclocolour import classify, coset_representatives, ideals_of_norm, principal_ideal
from cyclocolour.ring import cyclotomic_ring

ring = cyclotomic_ring(4)
i = ring.xi()

# (2+i) has norm 5, so it colours Z[i] with five colours
q = 2 + i
I = principal_ideal(q)
print("ideal", I, "hnf", I.basis.rows)
T = coset_representatives(I)
print("colour representatives:", list(T))

# colour of every point in a small window; rows are imaginary parts
for y in range(3, -4, -1):
    print(" ".join(str(T.colour(ring.element([x, y]))) for x in range(-3, 4)))

# perfect means complex conjugation also permutes the colours
for ell in range(1, 26):
    found = ideals_of_norm(4, ell)
    if found:
        flags = ["perfect" if classify(J).perfect else "chiral" for J in found]
        print(f"l={ell:>2}  {len(found)} colouring(s): {', '.join(flags)}")

# the three 25-colourings: 5, 3+4i and 3-4i
for J in ideals_of_norm(4, 25):
    rep = classify(J)
    print(J.basis.rows, rep.H.label(), rep.K.label(), "|H/K| =", rep.quotient_order)
