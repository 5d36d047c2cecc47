"""How rational primes split in Z[xi_n], read off from Phi_n mod p."""
import math

from cyclocolour.splitting import factor_phi_mod_p, prime_ideals_above, splitting_type

for n in (4, 7, 9, 12):
    print(f"--- n = {n}")
    for p in (2, 3, 5, 7, 13, 29, 37):
        facs = factor_phi_mod_p(n, p)
        shape = " * ".join(f"({g})" + (f"^{e}" if e > 1 else "") for g, e in facs)
        print(f"p={p:>2} {splitting_type(n, p):<18} {shape}")

# residue degree is the order of p mod n when p does not divide n
n, p = 7, 2
f = next(k for k in range(1, n) if pow(p, k, n) == 1)
print("order of 2 mod 7:", f)
for P in prime_ideals_above(n, p):
    print("  prime of norm", P.ideal.norm, "conjugate partner", P.partner, "hnf", P.ideal.basis.rows)
print(math.prod(P.ideal.norm for P in prime_ideals_above(n, p)) == p ** 6)
