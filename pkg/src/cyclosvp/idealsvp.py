"""Shortest vectors of prime-ideal lattices in the power-of-two tower.

Length formulas by residue class of p, with n the tower level (ring
Z[zeta_{2^(n+1)}], rank 2^n) and (a_p, b_p) the fundamental solution of
a^2 - 2b^2 = p:

  p = 5 (mod 8),  n >= 1:  lambda1^2 = 2^n * p
  p = 3 (mod 8),  n >= 2:  lambda1^2 = 2^n * p
  p = 9 (mod 16), n >= 2:  lambda1^2 = 2^n * a_p
  p = 7 (mod 16), n >= 3:  lambda1^2 = 2^n * a_p

For p = 7, 9 (mod 16) the length also satisfies the strict bound chain
lambda1^4 < 2^(2n+1) p < 2^(4n) p (the right-hand member is the fourth
power of the covolume bound 2^n * p^(1/4)).

In Z[i], Z[sqrt2], Z[zeta8] and Z[zeta16+zeta16^7] every ideal has a
generator realizing the shortest vector, so shortest-vector search
reduces to shortest-generator search: pick any generator g and minimize
||Sigma(g * eps^m)||^2 = A t^m + B t^(-m) over m (t = eps^2 = 3 + 2 sqrt2,
eps = 1 + sqrt2); the minimum lies in a +-1 window around
x0 = log_t(B/A) / 2.  Witnesses are constructed in the smallest ring of
the tower that sees them and lifted: the shortest vector of an ideal is
still shortest after extension to any higher level, with the squared
length scaling by the degree ratio.

Every certificate at rank <= 16 is confirmed by independent Fincke-Pohst
enumeration; a formula/enumeration mismatch raises ConsistencyError and
is never silently resolved.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from decimal import Context, Decimal, ROUND_HALF_EVEN
from math import isqrt

from .errors import ConsistencyError, DomainError
from .lattice import (
    IntegerLattice,
    SvpCertificate,
    contains,
    enumerate_all,
    lattice_from_rows,
    lift_ideal_lattice,
    max_enumeration_rank,
    prime_ideal_from_factor,
    prime_ideal_lattice,
    principal_ideal_lattice,
    svp_enumerate,
    svp_with_doubling,
)
from .ntheory import (
    ResidueClass,
    class_label,
    classify_prime,
    is_prime,
    root_of_minus_one,
    sieve_primes,
    sqrt_mod,
)
from .pell import solve_pell
from .rings import (
    CYCLO_EIGHTH,
    GAUSSIAN_INT,
    QUAD_SQRT2,
    QUARTIC_THETA,
    Ring,
    RingElement,
    as_sqrt2_pair,
    canonical_sq_length,
    conjugate,
    cyclotomic,
    element,
    element_to_json,
    field_norm,
    integer,
    lift_element,
    mul,
    torsion_generator,
    unit,
)

SVSG_RINGS = (GAUSSIAN_INT, QUAD_SQRT2, CYCLO_EIGHTH, QUARTIC_THETA)

_PREC = Context(prec=40)
_TWELVE = Context(prec=12, rounding=ROUND_HALF_EVEN)


def sqrt_decimal(n: int) -> str:
    """sqrt(n) to 12 significant digits, round-half-even."""
    return str(_TWELVE.plus(_PREC.sqrt(Decimal(n))))


def fourth_root_decimal(n: int) -> str:
    """n**(1/4) to 12 significant digits, round-half-even."""
    return str(_TWELVE.plus(_PREC.sqrt(_PREC.sqrt(Decimal(n)))))


def iroot_floor(x: int, k: int) -> int:
    """floor(x ** (1/k)) for x >= 0, exact."""
    if x < 0:
        raise DomainError("iroot_floor needs x >= 0")
    if x == 0:
        return 0
    r = max(1, int(round(x ** (1.0 / k))))
    while r ** k > x:
        r -= 1
    while (r + 1) ** k <= x:
        r += 1
    return r


# ---------------------------------------------------------------------------
# closed-form representations


def cornacchia(p: int, d: int) -> tuple[int, int]:
    """Positive (a, b) with a^2 + d b^2 = p, by the descent from a square
    root of -d mod p.  d = 1 needs p = 1 (mod 4); d = 2 needs p = 1, 3
    (mod 8).  For d = 1 the output is ordered a > b."""
    if d not in (1, 2):
        raise DomainError(f"only d = 1, 2 are supported, got {d}")
    if not is_prime(p) or p == 2:
        raise DomainError(f"{p} is not an odd prime")
    if d == 1 and p % 4 != 1:
        raise DomainError(f"{p} != 1 (mod 4): no representation a^2 + b^2")
    if d == 2 and p % 8 not in (1, 3):
        raise DomainError(f"{p} != 1, 3 (mod 8): no representation a^2 + 2 b^2")
    r = sqrt_mod(p - d % p, p)
    assert r is not None
    x0 = max(r, p - r)
    a, b = p, x0
    lim = isqrt(p)
    while b > lim:
        a, b = b, a % b
    c, rem = divmod(p - b * b, d)
    t = isqrt(c)
    if rem or t * t != c:
        raise ConsistencyError(f"Cornacchia descent failed for p={p}, d={d}")
    if d == 1 and b < t:
        b, t = t, b
    return b, t


def theta_roots(p: int) -> list[int]:
    """Roots of x^4 + 4x^2 + 2 mod p (sorted).  Nonempty iff p = 1, 7
    (mod 16), where the quartic splits completely."""
    s = sqrt_mod(2, p) if p % 8 in (1, 7) else None
    if s is None:
        return []
    roots = []
    for y in ((s - 2) % p, (-s - 2) % p):
        r = sqrt_mod(y, p)
        if r is not None:
            roots.extend((r, p - r))
    return sorted(roots)


# ---------------------------------------------------------------------------
# shortest-generator machinery (SVSG rings)


def _generator_bound_sq(ring: Ring, norm: int) -> int:
    """Upper bound on the squared length of the shortest generator of an
    ideal of the given norm: 2N for Z[i], 2*sqrt2*N for Z[sqrt2], and
    4*sqrt2*sqrt(N) for the two quartic rings."""
    if ring is GAUSSIAN_INT:
        return 2 * norm
    if ring is QUAD_SQRT2:
        return isqrt(8 * norm * norm)
    return isqrt(32 * norm)


def _pair_step(u: int, v: int, up: bool) -> tuple[int, int]:
    """Multiply u + v*sqrt2 by eps^2 = 3 + 2*sqrt2 (or its inverse)."""
    if up:
        return 3 * u + 4 * v, 2 * u + 3 * v
    return 3 * u - 4 * v, -2 * u + 3 * v


def _window_min(g: RingElement) -> tuple[int, int, RingElement]:
    """Minimize ||Sigma(g * eps^m)||^2 over m.

    Returns (min_sq, m, g * eps^m).  The search window is
    {floor(x0)-1, ..., ceil(x0)+1} around the real minimizer x0 of
    A t^x + B t^(-x) (t = eps^2), extended while the exact integer value
    keeps decreasing (a guard against rounding at the window edge).
    """
    ring = g.ring
    base_sq = canonical_sq_length(g)
    if not ring.has_sqrt2:
        return base_sq, 0, g
    c1 = mul(g, g) if ring is QUAD_SQRT2 else mul(g, conjugate(g))
    u0, v0 = as_sqrt2_pair(c1)
    scale = 2 if ring is QUAD_SQRT2 else 4
    if scale * u0 != base_sq:
        raise ConsistencyError("conjugate-pair decomposition disagrees with the Gram form")
    sqrt2 = math.sqrt(2.0)
    big_a = u0 + v0 * sqrt2
    big_b = u0 - v0 * sqrt2
    if big_a <= 0 or big_b <= 0:
        raise ConsistencyError("generator square is not totally positive")
    x0 = 0.5 * math.log(big_b / big_a) / math.log(3 + 2 * sqrt2)

    def pair_at(m: int) -> tuple[int, int]:
        u, v = u0, v0
        for _ in range(abs(m)):
            u, v = _pair_step(u, v, up=m > 0)
        return u, v

    lo = math.floor(x0) - 1
    hi = math.ceil(x0) + 1
    u, v = pair_at(lo)
    best_m, best_u = lo, u
    for m in range(lo + 1, hi + 1):
        u, v = _pair_step(u, v, up=True)
        if u < best_u:
            best_u, best_m = u, m
    # defensive extension beyond the window (must not trigger)
    for direction in (1, -1):
        m = best_m + direction
        while pair_at(m)[0] < best_u:
            best_u, best_m = pair_at(m)[0], m
            m += direction
    return scale * best_u, best_m, mul(g, unit(ring, 0, best_m))


def canonical_torsion_rep(w: RingElement) -> RingElement:
    """Deterministic representative of {torsion * w}: the sign-normalized
    coefficient vector that is lexicographically smallest."""
    ring = w.ring
    t = torsion_generator(ring)

    def canon(c):
        for v in c:
            if v:
                return tuple(c) if v > 0 else tuple(-x for x in c)
        return tuple(c)

    best = canon(w.coeffs)
    cur = w
    for _ in range(ring.torsion_order - 1):
        cur = mul(cur, t)
        cand = canon(cur.coeffs)
        if cand < best:
            best = cand
    return element(ring, best)


def _svsg_core(lat: IntegerLattice, norm: int) -> tuple[int, int, RingElement]:
    """(lambda1_sq, shortest_generator_sq, shortest_generator).

    lambda1 comes from full enumeration below the generator bound; the
    generator length from the unit-window search seeded by the shortest
    enumerated vector of norm +-N.  The two generator routes (window vs.
    filtered enumeration) must agree or ConsistencyError is raised.
    """
    ring = lat.ring
    radius = _generator_bound_sq(ring, norm)
    vecs = enumerate_all(lat, radius)
    if not vecs:
        raise ConsistencyError(
            f"no vector of {lat} within the generator bound {radius}"
        )
    lam = vecs[0][1]
    gen_candidates = [(sq, v) for v, sq in vecs if abs(field_norm(v)) == norm]
    if not gen_candidates:
        raise ConsistencyError(
            f"no generator of norm {norm} within the bound; principality violated?"
        )
    enum_gen_sq, g = min(gen_candidates, key=lambda t: (t[0], t[1].coeffs))
    win_sq, _, g_best = _window_min(g)
    if win_sq != enum_gen_sq:
        raise ConsistencyError(
            f"window search ({win_sq}) and filtered enumeration ({enum_gen_sq}) disagree"
        )
    return lam, win_sq, g_best


def shortest_generator(p: int, ring: Ring, r: int) -> SvpCertificate:
    """Shortest generator of the degree-1 prime ideal (p, th - r).

    By the shortest-vector/shortest-generator equivalence in the four
    supported rings this is also the shortest vector; the equality is
    verified by enumeration and a mismatch raises ConsistencyError.
    """
    if ring not in SVSG_RINGS:
        raise DomainError(f"{ring.name} is not one of the generator-search rings")
    lat = prime_ideal_lattice(ring, p, r)
    lam, gen_sq, g = _svsg_core(lat, p)
    if lam != gen_sq:
        raise ConsistencyError(
            f"shortest generator ({gen_sq}) is longer than lambda1 ({lam}) for "
            f"(p={p}, r={r}) in {ring.name}"
        )
    return SvpCertificate(canonical_torsion_rep(g), gen_sq, "generator-search", True)


# ---------------------------------------------------------------------------
# prime ideal inventory (for verification suites)


def _poly_eval_mod(poly, x, p):
    acc = 0
    for c in reversed(poly):
        acc = (acc * x + c) % p
    return acc


def _quadratic_factors(ring: Ring, p: int) -> list[list[int]] | None:
    """Monic quadratic factors of the quartic defining polynomial mod an
    odd p without linear roots, or None when it is irreducible."""
    if ring is CYCLO_EIGHTH:
        # x^4 + 1 is never irreducible mod p
        if p % 8 == 3:
            t = sqrt_mod(p - 2, p)
            return [[p - 1, (-t) % p, 1], [p - 1, t % p, 1]]
        if p % 8 == 5:
            s = sqrt_mod(p - 1, p)
            return [[(-s) % p, 0, 1], [s % p, 0, 1]]
        if p % 8 == 7:
            s = sqrt_mod(2, p)
            return [[1, (-s) % p, 1], [1, s % p, 1]]
        raise ConsistencyError(f"x^4 + 1 has roots mod {p}, factor path unreachable")
    if ring is QUARTIC_THETA:
        if p % 8 not in (1, 7):
            return None  # no sqrt2 mod p: irreducible
        s = sqrt_mod(2, p)
        return [[(2 - s) % p, 0, 1], [(2 + s) % p, 0, 1]]
    raise DomainError(f"{ring.name} is not quartic")


def prime_ideals_up_to_norm(ring: Ring, norm_bound: int):
    """All prime ideals of the ring with norm <= norm_bound.

    Yields (lattice, norm, description) triples: degree-1 ideals from the
    roots of the defining polynomial mod p, degree-2 ideals from its
    quadratic factors (quartic rings), and inert ideals (p).
    """
    out = []
    for p in sieve_primes(norm_bound):
        roots = [r for r in range(p) if _poly_eval_mod(ring.poly, r, p) == 0]
        if roots:
            for r in roots:
                out.append((prime_ideal_lattice(ring, p, r), p, f"({p}, th-{r})"))
            continue
        if ring.degree == 2:
            if p * p <= norm_bound:
                lat = principal_ideal_lattice(ring, integer(ring, p))
                out.append((lat, p * p, f"({p}) inert"))
            continue
        if p * p <= norm_bound:
            factors = _quadratic_factors(ring, p)
            if factors:
                for g in factors:
                    lat = prime_ideal_from_factor(ring, p, g)
                    out.append((lat, p * p, f"({p}, g(th)) deg-2"))
                continue
        if p ** 4 <= norm_bound:
            facs = _quadratic_factors(ring, p)
            if facs is None:
                lat = principal_ideal_lattice(ring, integer(ring, p))
                out.append((lat, p ** 4, f"({p}) inert"))
    return out


@dataclass(frozen=True)
class SvsgEntry:
    p: int
    norm: int
    ideal: str
    lambda1_sq: int | None
    generator_sq: int | None
    match: bool
    detail: str = ""


@dataclass(frozen=True)
class SvsgReport:
    ring: str
    norm_bound: int
    entries: tuple[SvsgEntry, ...]

    @property
    def mismatches(self) -> tuple[SvsgEntry, ...]:
        return tuple(e for e in self.entries if not e.match)

    @property
    def passed(self) -> bool:
        return not self.mismatches


def svsg_verify(ring: Ring, norm_bound: int) -> SvsgReport:
    """Check shortest vector == shortest generator on every prime ideal of
    norm <= norm_bound.  Returns a per-ideal report; a nonzero mismatch
    list means failure."""
    if ring not in SVSG_RINGS:
        raise DomainError(f"{ring.name} is not one of the generator-search rings")
    entries = []
    for lat, norm, desc in prime_ideals_up_to_norm(ring, norm_bound):
        p = lat.ideal_meta[0] if lat.ideal_meta else norm
        try:
            lam, gen_sq, _ = _svsg_core(lat, norm)
            entries.append(SvsgEntry(p, norm, desc, lam, gen_sq, lam == gen_sq))
        except ConsistencyError as exc:
            entries.append(SvsgEntry(p, norm, desc, None, None, False, str(exc)))
    return SvsgReport(ring.name, norm_bound, tuple(entries))


# ---------------------------------------------------------------------------
# the tower: witnesses, lifting, length formulas


def _base_witness(p: int, label: str, n: int, root_hint: int | None):
    """Construct (base_lattice, witness, base_sq, method) in the smallest
    ring of the tower that contains the shortest vector."""
    if label == "5mod8" or (label == "9mod16" and n == 1):
        a, b = cornacchia(p, 1)
        r0 = (-a * pow(b, -1, p)) % p
        if root_hint is not None and root_hint % p not in (r0, p - r0):
            raise DomainError(f"{root_hint} is not a square root of -1 mod {p}")
        if root_hint is not None and root_hint % p == p - r0:
            w = element(GAUSSIAN_INT, (a, -b))
            r0 = p - r0
        else:
            w = element(GAUSSIAN_INT, (a, b))
        lat = prime_ideal_lattice(GAUSSIAN_INT, p, r0)
        return lat, w, 2 * p, "analytic-formula"
    if label == "3mod8":
        if n == 1:
            # p is inert in Z[i]; the ideal (p) has shortest vector p itself
            w = integer(GAUSSIAN_INT, p)
            lat = principal_ideal_lattice(GAUSSIAN_INT, w)
            return lat, w, 2 * p * p, "analytic-formula"
        if root_hint is not None:
            raise DomainError("p = 3 (mod 8): the base ideal has no degree-1 root")
        a, b = cornacchia(p, 2)
        w = element(CYCLO_EIGHTH, (a, b, 0, b))  # a + b*sqrt(-2)
        lat = principal_ideal_lattice(CYCLO_EIGHTH, w)
        return lat, w, 4 * p, "analytic-formula"
    if label == "9mod16":
        r = root_hint if root_hint is not None else root_of_minus_one(p, 2)
        lat = prime_ideal_lattice(CYCLO_EIGHTH, p, r)
        a_p = solve_pell(p).a
        cert = svp_enumerate(lat, 4 * a_p)
        if cert.sq_length != 4 * a_p:
            raise ConsistencyError(
                f"enumeration found {cert.sq_length} != 4 a_p = {4 * a_p} for p={p}"
            )
        return lat, cert.vector, 4 * a_p, "enumeration"
    if label == "7mod16":
        if root_hint is not None:
            r = root_hint
        else:
            roots = theta_roots(p)
            if not roots:
                raise ConsistencyError(f"theta quartic has no roots mod {p}")
            r = roots[0]
        lat = prime_ideal_lattice(QUARTIC_THETA, p, r)
        a_p = solve_pell(p).a
        cert = svp_enumerate(lat, 4 * a_p)
        if cert.sq_length != 4 * a_p:
            raise ConsistencyError(
                f"enumeration found {cert.sq_length} != 4 a_p = {4 * a_p} for p={p}"
            )
        return lat, cert.vector, 4 * a_p, "enumeration"
    raise DomainError(f"no witness construction for class {label}")


def _require_covered(p: int, n: int) -> tuple[ResidueClass, str]:
    rc = classify_prime(p)
    if n < 1:
        raise DomainError(f"tower level must be >= 1, got {n}")
    label = class_label(p)
    if not rc.supported:
        raise DomainError(
            f"p = {p} = {rc.class_mod16} (mod 16): no length formula",
            payload={"error": "class_not_covered", "class_mod16": str(rc.class_mod16)},
        )
    if label == "7mod16" and n < 3:
        raise DomainError(
            f"p = 7 (mod 16) needs level n >= 3 (zeta_16 must embed), got {n}"
        )
    return rc, label


def shortest_vector(p: int, n: int, root_hint: int | None = None) -> SvpCertificate:
    """Shortest-vector witness for the prime ideal over p at tower level n.

    Built in the minimal subring (Cornacchia representation or rank-4
    enumeration), lifted to Z[zeta_{2^(n+1)}], and re-enumerated at the
    target rank when it is <= 16 (cross_checked records this).
    """
    _, label = _require_covered(p, n)
    base_lat, w, base_sq, method = _base_witness(p, label, n, root_hint)
    target = cyclotomic(n)
    ratio = target.degree // base_lat.ring.degree
    expected = base_sq * ratio
    w_lift = lift_element(w, target)
    if canonical_sq_length(w_lift) != expected:
        raise ConsistencyError("lift did not scale the squared length by the degree ratio")
    if target.degree <= max_enumeration_rank():
        tower = lift_ideal_lattice(base_lat, target)
        if not contains(tower, w_lift):
            raise ConsistencyError("lifted witness escaped the lifted ideal")
        cert = svp_enumerate(tower, expected)
        if cert.sq_length != expected:
            raise ConsistencyError(
                f"enumeration at level {n} found {cert.sq_length} != {expected}"
            )
        return SvpCertificate(cert.vector, expected, method, True)
    return SvpCertificate(canonical_torsion_rep(w_lift), expected, method, False)


@dataclass(frozen=True)
class Lambda1Result:
    """Shortest length of the prime ideal over p at level n, with witness
    and the two upper-bound radicands (fourth powers), where covered."""

    p: int
    n: int
    residue_class: ResidueClass
    lambda1_sq: int
    witness: SvpCertificate
    bound_new_radicand: int | None
    bound_minkowski_radicand: int | None
    note: str | None = None


def _formula_lambda1_sq(p: int, label: str, n: int) -> tuple[int, str | None]:
    if label == "5mod8":
        return (1 << n) * p, None
    if label == "3mod8":
        if n == 1:
            return 2 * p * p, "inert: p stays prime in Z[i]; value is for the ideal (p)"
        return (1 << n) * p, None
    if label == "9mod16":
        if n == 1:
            return 2 * p, "level 1 falls back to the split Z[i] case"
        return (1 << n) * solve_pell(p).a, None
    if label == "7mod16":
        return (1 << n) * solve_pell(p).a, None
    raise DomainError(f"no formula for class {label}")


def lambda1_squared(
    p: int,
    n: int,
    root_hint: int | None = None,
    enumerate_fallback: bool = False,
) -> Lambda1Result:
    """Exact squared shortest length, witness included.

    Covered classes dispatch to the closed formulas above; the witness is
    cross-checked by enumeration whenever the rank is <= 16.  Uncovered
    classes (p = 1, 15 mod 16) raise DomainError unless
    ``enumerate_fallback`` is set, in which case pure enumeration is used
    and no bound radicands are reported.
    """
    rc = classify_prime(p)
    if n < 1:
        raise DomainError(f"tower level must be >= 1, got {n}")
    label = class_label(p)
    if not rc.supported:
        if not enumerate_fallback:
            raise DomainError(
                f"p = {p} = {rc.class_mod16} (mod 16): no length formula",
                payload={
                    "error": "class_not_covered",
                    "class_mod16": str(rc.class_mod16),
                },
            )
        cert = _fallback_enumerate(p, n)
        return Lambda1Result(p, n, rc, cert.sq_length, cert, None, None,
                             note="enumeration fallback; no formula for this class")
    if label == "7mod16" and n < 3:
        raise DomainError(
            f"p = 7 (mod 16) needs level n >= 3 (zeta_16 must embed), got {n}"
        )
    lam, note = _formula_lambda1_sq(p, label, n)
    witness = shortest_vector(p, n, root_hint)
    if witness.sq_length != lam:
        raise ConsistencyError(
            f"formula gives {lam} but witness has length {witness.sq_length}"
        )
    new_rad = mink_rad = None
    if label in ("7mod16", "9mod16") and n >= 2:
        new_rad = (1 << (2 * n + 1)) * p
        mink_rad = (1 << (4 * n)) * p
        if lam * lam >= new_rad:
            raise ConsistencyError(f"bound lambda1^4 < 2^(2n+1) p violated at p={p}, n={n}")
    return Lambda1Result(p, n, rc, lam, witness, new_rad, mink_rad, note)


def lambda1_sq_zsqrt2(p: int) -> int:
    """Squared shortest length of a prime ideal over p in Z[sqrt2]:
    2 * min(2 a_p^2 - p, 2 a_{-p}^2 + p) for p = 1, 7 (mod 8).

    Also asserts the bound lambda1 <= sqrt(2 sqrt2 p) in the exact
    fourth-power form lambda1^4 <= 8 p^2."""
    plus = solve_pell(p, 1)
    minus = solve_pell(p, -1)
    lam = 2 * min(2 * plus.a * plus.a - p, 2 * minus.a * minus.a + p)
    if lam * lam > 8 * p * p:
        raise ConsistencyError(f"lambda1^4 <= 8 p^2 violated at p={p}")
    return lam


def lift_shortest(cert: SvpCertificate, n: int) -> SvpCertificate:
    """Lift a shortest-vector certificate to tower level n.

    The witness must generate its ideal (all certificates produced by this
    module do).  The squared length scales by the degree ratio; at target
    rank <= 16 the lifted principal ideal is re-enumerated and finding
    anything shorter raises ConsistencyError."""
    target = cyclotomic(n)
    src = cert.vector.ring
    if src is target:
        return cert
    w2 = lift_element(cert.vector, target)
    ratio = target.degree // src.degree
    sq2 = cert.sq_length * ratio
    if canonical_sq_length(w2) != sq2:
        raise ConsistencyError("lift did not scale the squared length by the degree ratio")
    cross = False
    if target.degree <= max_enumeration_rank():
        lat = principal_ideal_lattice(target, w2)
        check = svp_enumerate(lat, sq2)
        if check.sq_length != sq2:
            raise ConsistencyError(
                f"re-enumeration found {check.sq_length} < {sq2} after lifting"
            )
        cross = True
    return SvpCertificate(canonical_torsion_rep(w2), sq2, cert.method, cross)


@dataclass(frozen=True)
class BoundsResult:
    p: int
    n: int
    lambda1_sq: int
    new_bound_radicand: int  # lambda1 < (this)^(1/4) = (2^(2n+1) p)^(1/4)
    minkowski_radicand: int  # (2^n p^(1/4))^4 = 2^(4n) p
    lambda1_decimal: str
    bound_new_decimal: str
    bound_minkowski_decimal: str


def bounds(p: int, n: int) -> BoundsResult:
    """lambda1 and the two upper bounds for p = 7, 9 (mod 16), exact
    radicands plus 12-significant-digit decimal renderings."""
    classify_prime(p)
    label = class_label(p)
    if label not in ("7mod16", "9mod16"):
        raise DomainError(
            f"the tight bound covers p = 7, 9 (mod 16) only; p = {p} is {label}",
            payload={"error": "class_not_covered", "class_mod16": str(p % 16)},
        )
    min_n = 2 if label == "9mod16" else 3
    if n < min_n:
        raise DomainError(f"class {label} needs level n >= {min_n}, got {n}")
    a_p = solve_pell(p).a
    lam = (1 << n) * a_p
    new_rad = (1 << (2 * n + 1)) * p
    mink_rad = (1 << (4 * n)) * p
    if not (lam * lam < new_rad < mink_rad):
        raise ConsistencyError(f"bound chain violated at p={p}, n={n}")
    return BoundsResult(
        p,
        n,
        lam,
        new_rad,
        mink_rad,
        sqrt_decimal(lam),
        fourth_root_decimal(new_rad),
        fourth_root_decimal(mink_rad),
    )


# ---------------------------------------------------------------------------
# zeta16 lift check (p = 7 mod 16)


@dataclass(frozen=True)
class LiftCheckReport:
    p: int
    subfield_sq: int
    extension_sq: int
    four_a_p: int
    ratio_exact: bool
    witness_attains: bool

    @property
    def passed(self) -> bool:
        return self.ratio_exact and self.witness_attains


def zeta16_lift_check(p: int) -> LiftCheckReport:
    """Independent check that the shortest vector of the rank-4 ideal in
    Z[zeta16+zeta16^7] stays shortest in its rank-8 extension to
    Z[zeta16], with squared lengths in exact ratio 2."""
    if p % 16 != 7:
        raise DomainError(f"p must be 7 (mod 16), got {p} = {p % 16} (mod 16)")
    classify_prime(p)
    roots = theta_roots(p)
    base = prime_ideal_lattice(QUARTIC_THETA, p, roots[0])
    sub = svp_enumerate(base, _generator_bound_sq(QUARTIC_THETA, p))
    ext_lat = lift_ideal_lattice(base, cyclotomic(3))
    ext = svp_enumerate(ext_lat, 2 * sub.sq_length)
    w = lift_element(sub.vector, cyclotomic(3))
    attains = (
        canonical_sq_length(w) == ext.sq_length and contains(ext_lat, w)
    )
    return LiftCheckReport(
        p,
        sub.sq_length,
        ext.sq_length,
        4 * solve_pell(p).a,
        ext.sq_length == 2 * sub.sq_length,
        attains,
    )


# ---------------------------------------------------------------------------
# enumeration fallback for uncovered classes (p = 1, 15 mod 16)


def _gf2_mul(x, y, p, q):
    a, b = x
    c, d = y
    return ((a * c + q * b * d) % p, (a * d + b * c) % p)


def _gf2_pow(x, e, p, q):
    acc = (1, 0)
    base = x
    while e:
        if e & 1:
            acc = _gf2_mul(acc, base, p, q)
        base = _gf2_mul(base, base, p, q)
        e >>= 1
    return acc


def _degree2_prime_lattice(p: int, n: int) -> IntegerLattice:
    """Prime ideal of Z[zeta_{2^(n+1)}] over p with residue degree 2, as
    the kernel of zeta -> beta for a root beta of x^(2^n) = -1 in GF(p^2)."""
    ring = cyclotomic(n)
    d = ring.degree
    order = 2 * d
    q = 2
    while sqrt_mod(q, p) is not None:
        q += 1
    g0 = 1
    beta = None
    while True:
        g0 += 1
        cand = _gf2_pow((g0 % p, 1), (p * p - 1) // order, p, q)
        if _gf2_pow(cand, order // 2, p, q) == (p - 1, 0):
            beta = cand
            break
    b0, b1 = beta
    if b1 == 0:
        raise ConsistencyError("beta landed in the prime field; expected degree 2")
    inv_b1 = pow(b1, -1, p)
    rows = [[p] + [0] * (d - 1), [0, p] + [0] * (d - 2)]
    cur = beta
    for j in range(2, d):
        cur = _gf2_mul(cur, beta, p, q)
        v = cur[1] * inv_b1 % p
        u = (cur[0] - v * b0) % p
        row = [0] * d
        row[0] = -u
        row[1] = -v
        row[j] = 1
        rows.append(row)
    return lattice_from_rows(ring, rows, ideal_meta=(p, None))


def _fallback_enumerate(p: int, n: int) -> SvpCertificate:
    ring = cyclotomic(n)
    d = ring.degree
    if d > max_enumeration_rank():
        raise DomainError(
            f"enumeration fallback needs rank <= {max_enumeration_rank()}, got {d}"
        )
    order = 2 * d
    if (p - 1) % order == 0:
        lat = prime_ideal_lattice(ring, p, root_of_minus_one(p, n))
        norm = p
    elif (p * p - 1) % order == 0:
        lat = _degree2_prime_lattice(p, n)
        norm = p * p
    else:
        raise DomainError(
            f"no prime ideal of residue degree <= 2 over {p} at level {n}"
        )
    # start at twice the AM-GM lower bound d * N^(2/d) and double as needed
    lower = iroot_floor(d ** d * norm * norm, d)
    return svp_with_doubling(lat, max(2 * lower, ring.gram_scale), 4)


# ---------------------------------------------------------------------------
# JSON rendering


def result_to_json(res: Lambda1Result) -> dict:
    rc = res.residue_class
    a_p = b_p = None
    if res.p % 8 in (1, 7):
        sol = solve_pell(res.p)
        a_p, b_p = str(sol.a), str(sol.b)
    data = {
        "p": str(res.p),
        "n": str(res.n),
        "class_mod16": str(rc.class_mod16),
        "a_p": a_p,
        "b_p": b_p,
        "lambda1_squared": str(res.lambda1_sq),
        "lambda1_decimal": sqrt_decimal(res.lambda1_sq),
        "bound_new_decimal": (
            fourth_root_decimal(res.bound_new_radicand)
            if res.bound_new_radicand
            else None
        ),
        "bound_minkowski_decimal": (
            fourth_root_decimal(res.bound_minkowski_radicand)
            if res.bound_minkowski_radicand
            else None
        ),
        "witness": element_to_json(res.witness.vector),
        "method": res.witness.method,
        "certified": res.witness.cross_checked,
    }
    if res.note:
        data["note"] = res.note
    return data
