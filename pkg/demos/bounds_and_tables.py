"""Length formulas and upper bounds across the covered residue classes.

For p = 7, 9 (mod 16) the squared shortest length is 2^n * a_p, and the
length obeys lambda1 < (2^(2n+1) p)^(1/4) < 2^n p^(1/4); the middle
quantity is strictly tighter than the covolume bound on the right.
"""

from cyclosvp import bounds, classify_prime, lambda1_squared, sieve_primes
from cyclosvp.cli import emit_table

print("=== lambda1^2 over all covered classes (n = 3, rank 8) ===")
print(f"{'p':>4} {'class':>7} {'lambda1^2':>10}  certified")
for p in sieve_primes(60):
    if p == 2:
        continue
    rc = classify_prime(p)
    if not rc.supported or rc.min_level > 3:
        continue
    res = lambda1_squared(p, 3)
    label = f"{rc.class_mod16}mod16" if rc.class_mod16 in (7, 9) else f"{rc.class_mod8}mod8"
    print(f"{p:>4} {label:>7} {res.lambda1_sq:>10}  {res.witness.cross_checked}")

print("\n=== bound comparison for p = 9 (mod 16), n = 2 ===")
rows = emit_table(200, {"9mod16"}, 2)
print(f"{'p':>4} {'a_p':>5} {'lambda1':>9} {'tight bound':>12} {'covolume':>10}")
for row in rows:
    lam = float(bounds(int(row["p"]), 2).lambda1_decimal)
    print(
        f"{row['p']:>4} {row['a_p']:>5} {lam:>9.4f} "
        f"{float(row['bound_new']):>12.4f} {float(row['bound_minkowski']):>10.4f}"
    )

print("\n=== exact fourth-power chain lambda1^4 < 2^(2n+1) p < 2^(4n) p ===")
for p in (89, 233, 1033):
    for n in (2, 3, 4):
        b = bounds(p, n)
        assert b.lambda1_sq**2 < b.new_bound_radicand < b.minkowski_radicand
        print(
            f"p={p:>5} n={n}: {b.lambda1_sq**2} < {b.new_bound_radicand} "
            f"< {b.minkowski_radicand}"
        )
