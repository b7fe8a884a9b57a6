"""End-to-end walkthrough for the prime p = 89.

89 = 9 (mod 16), so its prime ideals split in Z[sqrt2], split again in
Z[zeta8], and stay inert at every higher level of the power-of-two
tower.  That makes the rank-4 ideal in Z[zeta8] the whole story: its
shortest vector is also the shortest vector at every higher level.
"""

from cyclosvp import (
    CYCLO_EIGHTH,
    bounds,
    canonical_sq_length,
    classify_prime,
    field_norm,
    lambda1_squared,
    lift_shortest,
    prime_ideal_lattice,
    root_of_minus_one,
    solve_pell,
    svp_enumerate,
)

p = 89

print(f"=== residue class of {p} ===")
rc = classify_prime(p)
print(f"p mod 8 = {rc.class_mod8}, p mod 16 = {rc.class_mod16}")
for line in rc.splitting:
    print("  " + line)

print(f"\n=== fundamental solutions of a^2 - 2b^2 = +-{p} ===")
plus = solve_pell(p, 1)
minus = solve_pell(p, -1)
print(f"a_p  = {plus.a}, b_p  = {plus.b}   ({plus.a}^2 - 2*{plus.b}^2 = {p})")
print(f"a_-p = {minus.a}, b_-p = {minus.b}   ({minus.a}^2 - 2*{minus.b}^2 = -{p})")
print(f"identities: a_-p = a_p - 2 b_p = {plus.a - 2 * plus.b}, "
      f"b_-p = a_p - b_p = {plus.a - plus.b}")

print("\n=== the prime ideal of Z[zeta8] over 89 ===")
r = root_of_minus_one(p, 2)
print(f"root of x^4 = -1 mod {p}: r = {r}")
lat = prime_ideal_lattice(CYCLO_EIGHTH, p, r)
print("HNF basis rows (coefficients in 1, z, z^2, z^3):")
for b in lat.basis:
    print("  ", list(b.coeffs))

cert = svp_enumerate(lat, 4 * plus.a)
w = cert.vector
print(f"\nshortest vector by enumeration: {list(w.coeffs)}")
print(f"  squared canonical length {cert.sq_length} = 4 * a_p = {4 * plus.a}")
print(f"  field norm {field_norm(w)} (so the witness generates the ideal)")

print("\n=== the closed formula at every level ===")
for n in range(2, 6):
    res = lambda1_squared(p, n)
    tag = "enumeration-certified" if res.witness.cross_checked else "formula only (rank > 16)"
    print(f"level n={n} (rank {2**n:>2}): lambda1^2 = {res.lambda1_sq:>4}"
          f" = 2^{n} * a_p   [{tag}]")

print("\n=== upper bounds at n = 2 ===")
b = bounds(p, 2)
print(f"lambda1          = sqrt({b.lambda1_sq}) = {b.lambda1_decimal}")
print(f"tight bound      = (2^5 * 89)^(1/4) = {b.bound_new_decimal}")
print(f"covolume bound   = 4 * 89^(1/4)     = {b.bound_minkowski_decimal}")

print("\n=== lifting the witness ===")
lifted = lift_shortest(cert, 4)
print(f"lifted to Z[zeta32]: squared length {lifted.sq_length} "
      f"(= {cert.sq_length} * 4), re-enumeration at rank 16 "
      f"{'confirmed' if lifted.cross_checked else 'skipped'}")
print(f"lifted witness coefficients: {list(lifted.vector.coeffs)}")
assert canonical_sq_length(lifted.vector) == lifted.sq_length
