"""Every colouring with up to 64 colours for n = 3, 4, 7, 9.

j counts the colourings, H is G (perfect) or G' (chirally perfect), and K
is the group of isometries fixing every colour.
"""
import time

from cyclocolour.cli import format_table
from cyclocolour.splitting import norm_table

start = time.perf_counter()
for n in (3, 4, 7, 9):
    rows = norm_table(n, 64)
    if n in (3, 4):
        # beyond four colours nothing but translations survives; keep the start
        rows = [r for r in rows if r.norm <= 4] + [r for r in rows if r.norm > 4][:3]
    print(format_table(rows))
    print()
print(f"{time.perf_counter() - start:.2f}s")

# For n = 9 the rows l = 9 and l = 27 keep a rotation by 2 pi / 3:
# 1 - xi^3 lies in (1 - xi)^3, which is inside both ideals.
