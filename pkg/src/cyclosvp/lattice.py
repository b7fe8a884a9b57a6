"""Exact integer-lattice toolkit for ideal lattices.

Lattices are stored as integer coefficient rows in a ring's power basis,
together with the exact Gram matrix under the canonical bilinear form.
Bases are kept in Hermite normal form (lower-triangular, positive
diagonal, entries below the diagonal reduced modulo the diagonal above
them).  Reduction (Lagrange-Gauss, LLL at delta = 99/100) and shortest
vector enumeration (Fincke-Pohst) run in exact integer / rational
arithmetic throughout, so every certificate is unconditional.
"""

from __future__ import annotations

import math
import os
from dataclasses import dataclass
from fractions import Fraction

from .errors import ConsistencyError, DomainError, RadiusExhausted
from .rings import (
    Ring,
    RingElement,
    canonical_inner,
    cyclotomic,
    element,
    lift_element,
    mul,
)

DEFAULT_DELTA = Fraction(99, 100)
_DEFAULT_MAX_RANK = 16


def max_enumeration_rank() -> int:
    """Rank cap for enumeration; override with CYCLOSVP_MAX_RANK."""
    return int(os.environ.get("CYCLOSVP_MAX_RANK", _DEFAULT_MAX_RANK))


@dataclass(frozen=True)
class SvpCertificate:
    """Shortest-vector witness: the element, its exact squared canonical
    length, how it was obtained, and whether an independent route agreed."""

    vector: RingElement
    sq_length: int
    method: str  # "analytic-formula" | "enumeration" | "generator-search"
    cross_checked: bool


@dataclass(frozen=True)
class IntegerLattice:
    """A full-rank sublattice of a ring, basis rows in HNF.

    ``gram`` is the exact Gram matrix under the canonical form;
    ``ideal_meta`` records (p, r) for two-element presentations (p, th - r),
    with r = None when the lattice was built another way.
    """

    ring: Ring
    basis: tuple[RingElement, ...]
    gram: tuple[tuple[int, ...], ...]
    ideal_meta: tuple[int, int | None] | None = None
    transform: tuple[tuple[int, ...], ...] | None = None

    @property
    def rank(self) -> int:
        return len(self.basis)

    def rows(self) -> list[list[int]]:
        return [list(b.coeffs) for b in self.basis]


def _echelon_hnf(rows: list[list[int]], dim: int) -> list[list[int]]:
    """Row-style HNF with pivots on the diagonal (upper-triangular)."""
    work = [list(r) for r in rows if any(r)]
    basis: list[list[int]] = []
    for col in range(dim):
        pool = [r for r in work if r[col]]
        rest = [r for r in work if not r[col]]
        if not pool:
            raise DomainError("rank-deficient generating set")
        while len(pool) > 1:
            pool.sort(key=lambda r: abs(r[col]))
            piv = pool[0]
            if piv[col] < 0:
                for i in range(dim):
                    piv[i] = -piv[i]
            new_pool = [piv]
            for r in pool[1:]:
                q = r[col] // piv[col]
                if q:
                    for i in range(dim):
                        r[i] -= q * piv[i]
                if r[col]:
                    new_pool.append(r)
                elif any(r):
                    rest.append(r)
            pool = new_pool
        piv = pool[0]
        if piv[col] < 0:
            piv = [-v for v in piv]
        basis.append(piv)
        work = rest
    # reduce entries above each pivot
    for i in range(dim):
        for j in range(i + 1, dim):
            q = basis[i][j] // basis[j][j]
            if q:
                for t in range(j, dim):
                    basis[i][t] -= q * basis[j][t]
    return basis


def hnf_rows(rows: list[list[int]], dim: int) -> list[list[int]]:
    """Hermite normal form: lower-triangular, positive diagonal, and
    0 <= B[i][j] < B[j][j] for j < i.  Input rows must span rank ``dim``."""
    flipped = [list(reversed(r)) for r in rows]
    ech = _echelon_hnf(flipped, dim)
    return [list(reversed(ech[dim - 1 - i])) for i in range(dim)]


def lattice_from_rows(
    ring: Ring, rows: list[list[int]], ideal_meta=None
) -> IntegerLattice:
    """Build an IntegerLattice from generating rows (HNF + exact Gram)."""
    hnf = hnf_rows(rows, ring.degree)
    basis = tuple(element(ring, r) for r in hnf)
    gram = tuple(
        tuple(canonical_inner(basis[i], basis[j]) for j in range(len(basis)))
        for i in range(len(basis))
    )
    return IntegerLattice(ring, basis, gram, ideal_meta)


def prime_ideal_lattice(ring: Ring, p: int, r: int) -> IntegerLattice:
    """Lattice of the prime ideal (p, th - r) where th generates the ring.

    Requires r to be a root of the ring's defining polynomial mod p; a
    non-root raises DomainError carrying the offending residue.
    """
    d = ring.degree
    residue = sum(c * pow(r, j, p) for j, c in enumerate(ring.poly)) % p
    if residue:
        raise DomainError(
            f"(p={p}, r={r}) is not an ideal of {ring.name}: "
            f"defining polynomial has residue {residue} at r",
            payload={"error": "not_an_ideal", "residue": str(residue)},
        )
    rows = [[p] + [0] * (d - 1)]
    for j in range(1, d):
        row = [0] * d
        row[0] = -pow(r, j, p)
        row[j] = 1
        rows.append(row)
    return lattice_from_rows(ring, rows, ideal_meta=(p, r % p))


def prime_ideal_from_factor(ring: Ring, p: int, g: list[int]) -> IntegerLattice:
    """Lattice of (p, g(th)) for a monic divisor g of the defining
    polynomial mod p; the ideal norm is p**deg(g)."""
    d = ring.degree
    gd = len(g) - 1
    if g[-1] % p != 1:
        raise DomainError("factor must be monic")
    # check g | f mod p by polynomial long division
    rem = [c % p for c in ring.poly]
    for top in range(d, gd - 1, -1):
        c = rem[top]
        if c:
            for i in range(gd + 1):
                rem[top - gd + i] = (rem[top - gd + i] - c * g[i]) % p
    if any(rem):
        raise DomainError(
            f"g does not divide the defining polynomial of {ring.name} mod {p}"
        )
    rows = []
    for j in range(d):
        row = [0] * d
        row[j] = p
        rows.append(row)
    gel = element(ring, [g[i] if i <= gd else 0 for i in range(d)])
    shift = gel
    for _ in range(d - gd):
        rows.append(list(shift.coeffs))
        shift = mul(shift, element(ring, [0, 1] + [0] * (d - 2)))
    return lattice_from_rows(ring, rows, ideal_meta=(p, None))


def principal_ideal_lattice(ring: Ring, alpha: RingElement) -> IntegerLattice:
    """Lattice of the principal ideal generated by alpha."""
    if alpha.ring is not ring:
        raise DomainError("generator lies in a different ring")
    if alpha.is_zero():
        raise DomainError("zero generates the zero ideal, not a lattice")
    d = ring.degree
    rows = []
    shift = alpha
    theta = element(ring, [0, 1] + [0] * (d - 2))
    for _ in range(d):
        rows.append(list(shift.coeffs))
        shift = mul(shift, theta)
    return lattice_from_rows(ring, rows)


def lift_ideal_lattice(lat: IntegerLattice, target: Ring) -> IntegerLattice:
    """Extend an ideal lattice along the fixed ring embedding.

    Uses the module decomposition of the larger ring over the smaller
    (powers of zeta between cyclotomic levels; {1, zeta_16} over theta16),
    so the result is the lattice of (ideal) * target-ring.
    """
    source = lat.ring
    if source is target:
        return lat
    if source.cyclo_level is None:
        # Z[zeta8] = Z[sqrt2] + zeta*Z[sqrt2] (zeta^2 - sqrt2*zeta + 1 = 0);
        # Z[zeta16] = Z[th] + zeta*Z[th] (zeta^2 - th*zeta - 1 = 0)
        mid = cyclotomic(2 if source.name == "zsqrt2" else 3)
        zeta = element(mid, [0, 1] + [0] * (mid.degree - 2))
        rows = []
        for b in lat.basis:
            lifted = lift_element(b, mid)
            rows.append(list(lifted.coeffs))
            rows.append(list(mul(lifted, zeta).coeffs))
        meta = lat.ideal_meta and (lat.ideal_meta[0], None)
        lifted_lat = lattice_from_rows(mid, rows, ideal_meta=meta)
        return lift_ideal_lattice(lifted_lat, target)
    if source.cyclo_level is None or target.cyclo_level is None:
        raise DomainError(f"no ideal lift from {source.name} to {target.name}")
    if target.cyclo_level < source.cyclo_level:
        raise DomainError("can only lift to a larger ring")
    ratio = target.degree // source.degree
    d = target.degree
    rows = []
    for b in lat.basis:
        lifted = list(lift_element(b, target).coeffs)
        for j in range(ratio):
            row = [0] * d
            # multiply by zeta^j: indices shift by j, no wrap since the
            # lifted support sits in multiples of ratio
            for idx, c in enumerate(lifted):
                if c:
                    e = idx + j
                    if e < d:
                        row[e] += c
                    else:
                        row[e - d] -= c
            rows.append(row)
    meta = lat.ideal_meta and (lat.ideal_meta[0], None)
    return lattice_from_rows(target, rows, ideal_meta=meta)


def contains(lat: IntegerLattice, v: RingElement) -> bool:
    """Exact membership test by back-substitution against the HNF basis."""
    if v.ring is not lat.ring:
        return False
    d = lat.ring.degree
    if lat.rank != d:
        raise DomainError("membership test expects a full-rank lattice")
    rows = lat.rows()
    target = list(v.coeffs)
    for i in range(d - 1, -1, -1):
        q, rem = divmod(target[i], rows[i][i])
        if rem:
            return False
        if q:
            for t in range(i + 1):
                target[t] -= q * rows[i][t]
    return not any(target)


def gram_det(gram) -> int:
    """Determinant of an integer Gram matrix (exact, fraction-free)."""
    n = len(gram)
    m = [[Fraction(x) for x in row] for row in gram]
    det = Fraction(1)
    for i in range(n):
        piv = None
        for r in range(i, n):
            if m[r][i]:
                piv = r
                break
        if piv is None:
            return 0
        if piv != i:
            m[i], m[piv] = m[piv], m[i]
            det = -det
        det *= m[i][i]
        inv = m[i][i]
        for r in range(i + 1, n):
            if m[r][i]:
                f = m[r][i] / inv
                for c in range(i, n):
                    m[r][c] -= f * m[i][c]
    assert det.denominator == 1
    return int(det)


def _nearest_int(q: Fraction) -> int:
    return round(q)


def gauss_reduce_gram(gram) -> tuple[tuple[tuple[int, int], ...], list[list[int]]]:
    """Lagrange-Gauss reduction of a rank-2 Gram matrix.

    Returns (reduced_gram, U) with U unimodular and
    reduced = U * B giving |b1| <= |b2|, |<b1,b2>| <= |b1|^2 / 2.
    """
    a, b, c = gram[0][0], gram[0][1], gram[1][1]
    u = [[1, 0], [0, 1]]
    while True:
        if a > c:
            a, c = c, a
            u[0], u[1] = u[1], u[0]
        t = _nearest_int(Fraction(b, a))
        if t:
            c = c - 2 * t * b + t * t * a
            b = b - t * a
            u[1] = [u[1][i] - t * u[0][i] for i in range(2)]
        if abs(2 * b) <= a and a <= c:
            return ((a, b), (b, c)), u


def _apply_transform(lat: IntegerLattice, u: list[list[int]]) -> IntegerLattice:
    rows = lat.rows()
    n = len(rows)
    d = lat.ring.degree
    new_rows = [
        [sum(u[i][k] * rows[k][j] for k in range(n)) for j in range(d)]
        for i in range(n)
    ]
    basis = tuple(element(lat.ring, r) for r in new_rows)
    gram = tuple(
        tuple(canonical_inner(basis[i], basis[j]) for j in range(n)) for i in range(n)
    )
    return IntegerLattice(
        lat.ring, basis, gram, lat.ideal_meta, tuple(tuple(r) for r in u)
    )


def gauss_reduce(lat: IntegerLattice) -> IntegerLattice:
    """Lagrange-Gauss reduce a rank-2 lattice; the first basis vector of
    the result is exactly the shortest nonzero vector."""
    if lat.rank != 2:
        raise DomainError(f"Gauss reduction needs rank 2, got rank {lat.rank}")
    _, u = gauss_reduce_gram(lat.gram)
    return _apply_transform(lat, u)


def _gso(gram):
    """Exact Gram-Schmidt data (mu, B) from a Gram matrix."""
    n = len(gram)
    mu = [[Fraction(0)] * n for _ in range(n)]
    r = [[Fraction(0)] * n for _ in range(n)]
    bstar = [Fraction(0)] * n
    for i in range(n):
        for j in range(i):
            val = Fraction(gram[i][j])
            for k in range(j):
                val -= mu[j][k] * r[i][k]
            r[i][j] = val
            mu[i][j] = val / bstar[j]
        diag = Fraction(gram[i][i])
        for k in range(i):
            diag -= mu[i][k] * r[i][k]
        if diag <= 0:
            raise ConsistencyError("Gram matrix is not positive definite")
        bstar[i] = diag
    return mu, bstar


def lll_reduce(lat: IntegerLattice, delta: Fraction = DEFAULT_DELTA) -> IntegerLattice:
    """delta-LLL reduction with exact rational Gram-Schmidt arithmetic.

    Returns a new lattice whose ``transform`` field records the unimodular
    change of basis.  Rank-1 input is returned unchanged.
    """
    n = lat.rank
    if n < 2:
        return lat
    mu, bstar = _gso(lat.gram)
    u = [[1 if i == j else 0 for j in range(n)] for i in range(n)]

    def size_reduce(k, l):
        if abs(mu[k][l]) * 2 > 1:
            q = _nearest_int(mu[k][l])
            for t in range(n):
                u[k][t] -= q * u[l][t]
            for t in range(l):
                mu[k][t] -= q * mu[l][t]
            mu[k][l] -= q

    k = 1
    while k < n:
        size_reduce(k, k - 1)
        if bstar[k] < (delta - mu[k][k - 1] ** 2) * bstar[k - 1]:
            # swap rows k-1 and k, updating GSO data in place
            m = mu[k][k - 1]
            bnew = bstar[k] + m * m * bstar[k - 1]
            mu[k][k - 1] = m * bstar[k - 1] / bnew
            bstar[k] = bstar[k - 1] * bstar[k] / bnew
            bstar[k - 1] = bnew
            u[k - 1], u[k] = u[k], u[k - 1]
            for t in range(k - 1):
                mu[k - 1][t], mu[k][t] = mu[k][t], mu[k - 1][t]
            for i in range(k + 1, n):
                t = mu[i][k]
                mu[i][k] = mu[i][k - 1] - m * t
                mu[i][k - 1] = t + mu[k][k - 1] * mu[i][k]
            k = max(k - 1, 1)
        else:
            for l in range(k - 2, -1, -1):
                size_reduce(k, l)
            k += 1
    return _apply_transform(lat, u)


def _floor_plus_sqrt(center: Fraction, bound: Fraction) -> int:
    """floor(center + sqrt(bound)) for bound >= 0, exactly.

    Float arithmetic only seeds the estimate; the exact rational
    inequality fixes it up, so the result is always correct."""
    est = int(math.floor(float(center) + math.sqrt(float(bound))))

    def ok(x: int) -> bool:
        diff = x - center
        return diff <= 0 or diff * diff <= bound

    while ok(est + 1):
        est += 1
    while not ok(est):
        est -= 1
    return est


def _enum_coords(gram, radius_sq: int):
    """Yield (sq_length, coords) for nonzero vectors with x G x^T <= radius.

    One representative per +/- pair: the highest-index nonzero coordinate
    is positive.  Exact rational pruning; no floats affect completeness.
    """
    n = len(gram)
    mu, bstar = _gso(gram)
    radius = Fraction(radius_sq)
    x = [0] * n

    def rec(level: int, used: Fraction, zero_above: bool):
        c = Fraction(0)
        for j in range(level + 1, n):
            if x[j]:
                c -= x[j] * mu[j][level]
        allowance = (radius - used) / bstar[level]
        if allowance < 0:
            return
        hi = _floor_plus_sqrt(c, allowance)
        lo = -_floor_plus_sqrt(-c, allowance)
        if zero_above and lo < 0:
            lo = 0
        for xi in range(lo, hi + 1):
            diff = xi - c
            contrib = bstar[level] * diff * diff
            total = used + contrib
            if total > radius:
                continue
            x[level] = xi
            if level == 0:
                if any(x):
                    assert total.denominator == 1
                    yield int(total), tuple(x)
            else:
                yield from rec(level - 1, total, zero_above and xi == 0)
        x[level] = 0

    yield from rec(n - 1, Fraction(0), True)


def canonical_coeffs(coeffs) -> tuple[int, ...]:
    """Sign-normalize: first nonzero coefficient positive."""
    for c in coeffs:
        if c:
            return tuple(coeffs) if c > 0 else tuple(-v for v in coeffs)
    return tuple(coeffs)


def _coords_to_row(coords, rows, d):
    out = [0] * d
    for xi, row in zip(coords, rows):
        if xi:
            for j in range(d):
                out[j] += xi * row[j]
    return out


def _scaled_gram(lat: IntegerLattice, radius_sq: int):
    """Divide out the ring's common Gram factor to keep numbers small."""
    s = lat.ring.gram_scale
    gram = tuple(tuple(v // s for v in row) for row in lat.gram)
    return gram, radius_sq // s, s


def enumerate_all(lat: IntegerLattice, radius_sq: int) -> list[tuple[RingElement, int]]:
    """All nonzero vectors with squared canonical length <= radius_sq,
    one per +/- pair, sign-normalized, sorted by (length, coefficients)."""
    if lat.rank > max_enumeration_rank():
        raise DomainError(
            f"rank {lat.rank} exceeds enumeration cap {max_enumeration_rank()}"
        )
    d = lat.ring.degree
    if lat.rank == 1:
        g = lat.gram[0][0]
        out = []
        k = 1
        while k * k * g <= radius_sq:
            row = canonical_coeffs([k * c for c in lat.basis[0].coeffs])
            out.append((element(lat.ring, row), k * k * g))
            k += 1
        return out
    red = lll_reduce(lat)
    rows = red.rows()
    gram, radius, scale = _scaled_gram(red, radius_sq)
    found = []
    for sq, coords in _enum_coords(gram, radius):
        row = canonical_coeffs(_coords_to_row(coords, rows, d))
        found.append((sq * scale, row))
    found.sort()
    return [(element(lat.ring, row), sq) for sq, row in found]


def svp_enumerate(lat: IntegerLattice, radius_sq: int) -> SvpCertificate:
    """Exact shortest vector by Fincke-Pohst enumeration.

    ``radius_sq`` must be at least the squared lattice minimum; when no
    nonzero vector lies within it, RadiusExhausted is raised and the
    caller should double the radius.  Ties are broken by returning the
    lexicographically smallest sign-normalized coefficient vector.
    """
    if radius_sq <= 0:
        raise DomainError("radius_sq must be positive")
    if lat.rank > max_enumeration_rank():
        raise DomainError(
            f"rank {lat.rank} exceeds enumeration cap {max_enumeration_rank()}"
        )
    d = lat.ring.degree
    if lat.rank == 1:
        g = lat.gram[0][0]
        if g > radius_sq:
            raise RadiusExhausted(
                f"no vector with squared length <= {radius_sq}; double the radius"
            )
        vec = element(lat.ring, canonical_coeffs(lat.basis[0].coeffs))
        return SvpCertificate(vec, g, "enumeration", False)
    red = lll_reduce(lat)
    rows = red.rows()
    gram, radius, scale = _scaled_gram(red, radius_sq)
    best_sq = None
    best_row = None
    for sq, coords in _enum_coords(gram, radius):
        if best_sq is not None and sq > best_sq:
            continue
        row = canonical_coeffs(_coords_to_row(coords, rows, d))
        if best_sq is None or sq < best_sq or row < best_row:
            best_sq, best_row = sq, row
    if best_sq is None:
        raise RadiusExhausted(
            f"no vector with squared length <= {radius_sq}; double the radius"
        )
    return SvpCertificate(element(lat.ring, best_row), best_sq * scale, "enumeration", False)


def svp_with_doubling(lat: IntegerLattice, radius_sq: int, retries: int = 4) -> SvpCertificate:
    """svp_enumerate with the doubling-on-failure loop (capped)."""
    for _ in range(retries + 1):
        try:
            return svp_enumerate(lat, radius_sq)
        except RadiusExhausted:
            radius_sq *= 2
    raise RadiusExhausted(f"no vector found within {retries} doublings")


def lattice_to_json(lat: IntegerLattice) -> dict:
    data = {
        "ring": lat.ring.name,
        "basis": [[str(c) for c in b.coeffs] for b in lat.basis],
        "gram": [[str(v) for v in row] for row in lat.gram],
    }
    if lat.ideal_meta:
        data["p"] = str(lat.ideal_meta[0])
        data["r"] = None if lat.ideal_meta[1] is None else str(lat.ideal_meta[1])
    return data
