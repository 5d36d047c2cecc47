"""An 8-colouring of the Ammann-Beenker vertex set.

Z[xi_8] is dense in the plane, so we keep only the points whose image under
xi -> xi^3 falls into a regular octagon. The ideal (1+xi+xi^2+xi^3) has
norm 8 and colours those vertices with eight colours.
"""
import sys

import numpy as np

from cyclocolour import ab_patch, principal_ideal, render_patch
from cyclocolour.ring import cyclotomic_ring

ring = cyclotomic_ring(8)
I = principal_ideal(ring.element([1, 1, 1, 1]))
patch = ab_patch(I, 15)
print(len(patch.points), "vertices,", len(patch.colours), "colours")

pos = np.array([p.position for p in patch.points])
d = np.abs(pos[:, None] - pos[None, :])
np.fill_diagonal(d, np.inf)
print("shortest distances:", np.unique(np.round(d.min(axis=1), 6)))

col = {p.z: p.colour for p in patch.points}
i = ring.xi(2)
print("rotation by pi keeps colours:", all(col[-z] == c for z, c in col.items() if -z in col))
print("rotation by pi/2 keeps colours:", all(col[z * i] == c for z, c in col.items() if z * i in col))

out = sys.argv[1] if len(sys.argv) > 1 else "ammann_beenker.svg"
render_patch(patch, out)
print("wrote", out)
