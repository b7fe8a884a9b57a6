"""Shortest vector == shortest generator in the four special rings.

In Z[i], Z[sqrt2], Z[zeta8] and Z[zeta16+zeta16^7] every ideal has a
generator realizing the lattice minimum, so SVP collapses to a
one-dimensional search over unit powers g * (1+sqrt2)^m.  This demo runs
the two routes independently on every prime ideal of norm <= 150 and
prints the per-ring tallies, then zooms in on one ideal.
"""

from cyclosvp import (
    CYCLO_EIGHTH,
    GAUSSIAN_INT,
    QUAD_SQRT2,
    QUARTIC_THETA,
    canonical_sq_length,
    mul,
    shortest_generator,
    svsg_verify,
    unit,
)

for ring in (GAUSSIAN_INT, QUAD_SQRT2, CYCLO_EIGHTH, QUARTIC_THETA):
    report = svsg_verify(ring, 150)
    status = "all match" if report.passed else f"{len(report.mismatches)} MISMATCHES"
    print(f"{ring.name:>8}: {len(report.entries):>3} prime ideals of norm <= 150: {status}")

print("\n=== one ideal in detail: (89, zeta8 - 12) ===")
cert = shortest_generator(89, CYCLO_EIGHTH, 12)
g = cert.vector
print(f"shortest generator: {list(g.coeffs)} with squared length {cert.sq_length}")

print("\nsquared lengths of g * (1+sqrt2)^m around the minimum:")
for m in range(-3, 4):
    gm = mul(g, unit(CYCLO_EIGHTH, 0, m))
    marker = "  <-- minimum" if canonical_sq_length(gm) == cert.sq_length else ""
    print(f"  m = {m:>2}: {canonical_sq_length(gm):>12}{marker}")
