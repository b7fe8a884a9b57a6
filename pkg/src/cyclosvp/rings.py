"""Exact arithmetic in the supported integer rings.

Supported rings and their fixed power bases:

  =================  =======================  ====================  ======
  name               ring                     basis                 degree
  =================  =======================  ====================  ======
  zi                 Z[i]                     {1, i}                2
  zsqrt2             Z[sqrt2]                 {1, sqrt2}            2
  zeta8              Z[zeta_8]                {1, z, z^2, z^3}      4
  theta16            Z[zeta_16 + zeta_16^7]   {1, t, t^2, t^3}      4
  zeta{2^(k+1)}      Z[zeta_{2^(k+1)}]        powers of zeta        2^k
  =================  =======================  ====================  ======

``zi`` doubles as the level-1 power-of-two cyclotomic ring (zeta_4 = i)
and ``zeta8`` as level 2; ``cyclotomic(k)`` returns the same singleton
objects for k = 1, 2.  ``theta16`` is the real-conjugate quartic subring
of Z[zeta_16]: its generator t = zeta_16 + zeta_16^7 satisfies
t^4 + 4 t^2 + 2 = 0 and t^2 = sqrt2 - 2.

All coefficients are arbitrary-precision integers; no floating point is
used anywhere.  Lengths refer to the canonical embedding: the squared
length of x is the sum of |phi(x)|^2 over all field embeddings phi, an
integer computed from the precomputed Gram matrix of the power basis
(2^k * I for the cyclotomic rings, diag(2, 4) for zsqrt2, and the trace
form of t for theta16).  Serialization is the coefficient vector in the
fixed basis order above.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

from .errors import ConsistencyError, DomainError


def _reduction_rows(poly: tuple[int, ...]) -> tuple[tuple[int, ...], ...]:
    """Expansions of theta^d .. theta^(2d-2) in the power basis."""
    d = len(poly) - 1
    rows = []
    cur = [-c for c in poly[:-1]]
    rows.append(tuple(cur))
    for _ in range(d - 2):
        top = cur[-1]
        cur = [0] + cur[:-1]
        if top:
            cur = [cur[i] + top * rows[0][i] for i in range(d)]
        rows.append(tuple(cur))
    return tuple(rows)


class Ring:
    """A supported ring: defining polynomial, canonical Gram form, units."""

    __slots__ = (
        "name",
        "degree",
        "poly",
        "gram",
        "gram_scale",
        "cyclo_level",
        "torsion_order",
        "has_sqrt2",
        "_reduction",
    )

    def __init__(
        self,
        name: str,
        poly: tuple[int, ...],
        gram: tuple[tuple[int, ...], ...],
        gram_scale: int,
        cyclo_level: int | None,
        torsion_order: int,
        has_sqrt2: bool,
    ):
        self.name = name
        self.poly = poly
        self.degree = len(poly) - 1
        self.gram = gram
        self.gram_scale = gram_scale
        self.cyclo_level = cyclo_level
        self.torsion_order = torsion_order
        self.has_sqrt2 = has_sqrt2
        self._reduction = _reduction_rows(poly)

    def __repr__(self) -> str:
        return f"Ring({self.name})"


def _scaled_identity(d: int, s: int) -> tuple[tuple[int, ...], ...]:
    return tuple(tuple(s if i == j else 0 for j in range(d)) for i in range(d))


GAUSSIAN_INT = Ring("zi", (1, 0, 1), _scaled_identity(2, 2), 2, 1, 4, False)
QUAD_SQRT2 = Ring("zsqrt2", (-2, 0, 1), ((2, 0), (0, 4)), 2, None, 2, True)
CYCLO_EIGHTH = Ring("zeta8", (1, 0, 0, 0, 1), _scaled_identity(4, 4), 4, 2, 8, True)
# Trace form Tr(x * conj(y)) of the basis {1, t, t^2, t^3}, t^2 = sqrt2 - 2.
QUARTIC_THETA = Ring(
    "theta16",
    (2, 0, 4, 0, 1),
    ((4, 0, -8, 0), (0, 8, 0, -24), (-8, 0, 24, 0), (0, -24, 0, 80)),
    4,
    None,
    2,
    True,
)

_CYCLO_CACHE: dict[int, Ring] = {1: GAUSSIAN_INT, 2: CYCLO_EIGHTH}


def cyclotomic(k: int) -> Ring:
    """The power-of-two cyclotomic ring Z[zeta_{2^(k+1)}] of degree 2^k.

    Levels 1 and 2 resolve to the canonical ``zi`` / ``zeta8`` singletons.
    """
    if k < 1:
        raise DomainError(f"cyclotomic level must be >= 1, got {k}")
    ring = _CYCLO_CACHE.get(k)
    if ring is None:
        d = 1 << k
        poly = (1,) + (0,) * (d - 1) + (1,)
        ring = Ring(f"zeta{2 * d}", poly, _scaled_identity(d, d), d, k, 2 * d, True)
        _CYCLO_CACHE[k] = ring
    return ring


def ring_by_name(name: str) -> Ring:
    for ring in (GAUSSIAN_INT, QUAD_SQRT2, CYCLO_EIGHTH, QUARTIC_THETA):
        if ring.name == name:
            return ring
    if name.startswith("zeta") and name[4:].isdigit():
        m = int(name[4:])
        k = m.bit_length() - 2
        if m == 1 << (k + 1) and k >= 1:
            return cyclotomic(k)
    raise DomainError(f"unknown ring tag {name!r}")


@dataclass(frozen=True)
class RingElement:
    """An exact element: integer coefficient vector in the ring's basis."""

    ring: Ring
    coeffs: tuple[int, ...]

    def __post_init__(self):
        if len(self.coeffs) != self.ring.degree:
            raise DomainError(
                f"{self.ring.name} needs {self.ring.degree} coefficients, "
                f"got {len(self.coeffs)}"
            )

    def is_zero(self) -> bool:
        return not any(self.coeffs)

    def __add__(self, other: "RingElement") -> "RingElement":
        return add(self, other)

    def __sub__(self, other: "RingElement") -> "RingElement":
        return sub(self, other)

    def __neg__(self) -> "RingElement":
        return neg(self)

    def __mul__(self, other: "RingElement") -> "RingElement":
        return mul(self, other)

    def __repr__(self) -> str:
        return f"{self.ring.name}{list(self.coeffs)}"


def element(ring: Ring, coeffs) -> RingElement:
    return RingElement(ring, tuple(int(c) for c in coeffs))


def integer(ring: Ring, n: int) -> RingElement:
    return RingElement(ring, (n,) + (0,) * (ring.degree - 1))


def one(ring: Ring) -> RingElement:
    return integer(ring, 1)


def zero(ring: Ring) -> RingElement:
    return integer(ring, 0)


def _check_same_ring(x: RingElement, y: RingElement) -> None:
    if x.ring is not y.ring:
        raise DomainError(f"ring mismatch: {x.ring.name} vs {y.ring.name}")


def add(x: RingElement, y: RingElement) -> RingElement:
    _check_same_ring(x, y)
    return RingElement(x.ring, tuple(a + b for a, b in zip(x.coeffs, y.coeffs)))


def sub(x: RingElement, y: RingElement) -> RingElement:
    _check_same_ring(x, y)
    return RingElement(x.ring, tuple(a - b for a, b in zip(x.coeffs, y.coeffs)))


def neg(x: RingElement) -> RingElement:
    return RingElement(x.ring, tuple(-a for a in x.coeffs))


def scalar_mul(n: int, x: RingElement) -> RingElement:
    return RingElement(x.ring, tuple(n * a for a in x.coeffs))


def mul(x: RingElement, y: RingElement) -> RingElement:
    """Exact product, reduced modulo the defining relation."""
    _check_same_ring(x, y)
    ring = x.ring
    d = ring.degree
    prod = [0] * (2 * d - 1)
    for i, xi in enumerate(x.coeffs):
        if xi:
            for j, yj in enumerate(y.coeffs):
                if yj:
                    prod[i + j] += xi * yj
    out = prod[:d]
    for k in range(d, 2 * d - 1):
        c = prod[k]
        if c:
            row = ring._reduction[k - d]
            for i in range(d):
                if row[i]:
                    out[i] += c * row[i]
    return RingElement(ring, tuple(out))


def power(x: RingElement, n: int) -> RingElement:
    """x**n for n >= 0, by repeated squaring."""
    if n < 0:
        raise DomainError("negative powers are only defined for units; use unit()")
    acc = one(x.ring)
    base = x
    while n:
        if n & 1:
            acc = mul(acc, base)
        base = mul(base, base)
        n >>= 1
    return acc


def _eval_poly(coeffs: tuple[int, ...], at: RingElement) -> RingElement:
    """Evaluate sum coeffs[j] * at**j by Horner's rule."""
    ring = at.ring
    acc = zero(ring)
    for c in reversed(coeffs):
        acc = mul(acc, at)
        if c:
            acc = add(acc, integer(ring, c))
    return acc


# theta16 automorphisms, indexed by the odd residue i mod 16 acting on
# zeta_16; sigma_3(t) = t^3 + 3t, and i = 9 restricts to t -> -t.
_THETA_SIGMA3 = (0, 3, 0, 1)


def _theta_image(i: int) -> tuple[int, ...]:
    i %= 16
    if i in (1, 7):
        return (0, 1, 0, 0)
    if i in (9, 15):
        return (0, -1, 0, 0)
    if i in (3, 5):
        return _THETA_SIGMA3
    return tuple(-c for c in _THETA_SIGMA3)  # i in (11, 13)


def apply_automorphism(x: RingElement, i: int) -> RingElement:
    """Image of x under sigma_i (zeta -> zeta^i, restricted to subrings).

    For zsqrt2 the indices i = 3, 5 (mod 8) act as the conjugation
    sqrt2 -> -sqrt2 and i = 1, 7 (mod 8) as the identity; for theta16 the
    index is read mod 16 through the embedding into Z[zeta_16].
    """
    if i % 2 == 0:
        raise DomainError(f"automorphism index must be odd, got {i}")
    ring = x.ring
    if ring.cyclo_level is not None:
        d = ring.degree
        m = 2 * d
        i %= m
        out = [0] * d
        for j, c in enumerate(x.coeffs):
            if c:
                e = i * j % m
                if e < d:
                    out[e] += c
                else:
                    out[e - d] -= c
        return RingElement(ring, tuple(out))
    if ring is QUAD_SQRT2:
        if i % 8 in (1, 7):
            return x
        return RingElement(ring, (x.coeffs[0], -x.coeffs[1]))
    if ring is QUARTIC_THETA:
        return _eval_poly(x.coeffs, RingElement(ring, _theta_image(i)))
    raise DomainError(f"no automorphisms defined for {ring.name}")


def automorphism_indices(ring: Ring) -> tuple[int, ...]:
    """One index per distinct automorphism (the full Galois group)."""
    if ring.cyclo_level is not None:
        return tuple(range(1, 2 * ring.degree, 2))
    if ring is QUAD_SQRT2:
        return (1, 3)
    if ring is QUARTIC_THETA:
        return (1, 3, 9, 11)
    raise DomainError(f"no automorphisms defined for {ring.name}")


def conjugate(x: RingElement) -> RingElement:
    """Complex conjugation (the identity on the totally real zsqrt2)."""
    ring = x.ring
    if ring is QUAD_SQRT2:
        return x
    if ring is QUARTIC_THETA:
        return RingElement(ring, tuple(-c if j % 2 else c for j, c in enumerate(x.coeffs)))
    return apply_automorphism(x, 2 * ring.degree - 1)


def field_norm(x: RingElement) -> int:
    """Norm over Q: the exact product of all automorphism images.

    For a principal ideal (x) the ideal norm equals |field_norm(x)|.
    """
    acc = one(x.ring)
    for i in automorphism_indices(x.ring):
        acc = mul(acc, apply_automorphism(x, i))
    if any(acc.coeffs[1:]):
        raise ConsistencyError(f"norm computation left a non-rational value: {acc!r}")
    return acc.coeffs[0]


def canonical_inner(x: RingElement, y: RingElement) -> int:
    """Canonical-embedding inner product, an exact integer."""
    _check_same_ring(x, y)
    g = x.ring.gram
    total = 0
    for i, xi in enumerate(x.coeffs):
        if xi:
            row = g[i]
            total += xi * sum(row[j] * yj for j, yj in enumerate(y.coeffs) if yj)
    return total


def canonical_sq_length(x: RingElement) -> int:
    """Squared length under the canonical embedding, an exact integer.

    Equals 2^k * (sum of squared coefficients) in the level-k cyclotomic
    ring, 2(u^2 + 2v^2) for u + v*sqrt2, and the trace form Tr(x * conj x)
    for theta16.
    """
    return canonical_inner(x, x)


@lru_cache(maxsize=None)
def _generator_image(source: Ring, target: Ring) -> RingElement:
    """Image of source's generator under the fixed embedding into target."""
    if target.cyclo_level is not None:
        k = target.cyclo_level
        d = target.degree

        def zeta_pow(e: int) -> list[int]:
            out = [0] * d
            e %= 2 * d
            if e < d:
                out[e] = 1
            else:
                out[e - d] = -1
            return out

        if source.cyclo_level is not None and source.cyclo_level <= k:
            return element(target, zeta_pow(1 << (k - source.cyclo_level)))
        if source is QUAD_SQRT2 and k >= 2:
            e = 1 << (k - 2)
            img = zeta_pow(e)
            img3 = zeta_pow(3 * e)
            return element(target, [a - b for a, b in zip(img, img3)])
        if source is QUARTIC_THETA and k >= 3:
            e = 1 << (k - 3)
            img = zeta_pow(e)
            img7 = zeta_pow(7 * e)
            return element(target, [a + b for a, b in zip(img, img7)])
    if source is QUAD_SQRT2 and target is QUARTIC_THETA:
        return element(target, (2, 0, 1, 0))
    raise DomainError(f"no embedding of {source.name} into {target.name}")


def lift_element(x: RingElement, target: Ring) -> RingElement:
    """Image of x under the canonical embedding of its ring into target.

    The squared canonical length scales by the degree ratio
    target.degree / x.ring.degree.
    """
    if x.ring is target:
        return x
    return _eval_poly(x.coeffs, _generator_image(x.ring, target))


def torsion_generator(ring: Ring) -> RingElement:
    """Generator of the torsion unit subgroup (i, zeta, or -1)."""
    if ring.cyclo_level is not None:
        return element(ring, [0, 1] + [0] * (ring.degree - 2))
    return integer(ring, -1)


_EPS_SQRT2 = (1, 1)  # 1 + sqrt2, the fundamental unit
_EPS_INV_SQRT2 = (-1, 1)  # its inverse -1 + sqrt2


def unit(ring: Ring, torsion_k: int = 0, eps_n: int = 0) -> RingElement:
    """The unit torsion**k * (1 + sqrt2)**n, exact.

    Requesting eps_n != 0 in Z[i] is an error: its unit group is torsion.
    """
    t = torsion_generator(ring)
    u = power(t, torsion_k % ring.torsion_order)
    if eps_n:
        if not ring.has_sqrt2:
            raise DomainError(f"{ring.name} has no unit 1 + sqrt2")
        base = _EPS_SQRT2 if eps_n > 0 else _EPS_INV_SQRT2
        eps = lift_element(element(QUAD_SQRT2, base), ring)
        u = mul(u, power(eps, abs(eps_n)))
    return u


def as_sqrt2_pair(x: RingElement) -> tuple[int, int]:
    """Coordinates (u, v) with x = u + v*sqrt2, for x in the Z[sqrt2]
    subring of its ring.  DomainError when x lies outside that subring."""
    ring = x.ring
    c = x.coeffs
    if ring is QUAD_SQRT2:
        return c[0], c[1]
    if ring is QUARTIC_THETA:
        if c[1] == 0 and c[3] == 0:
            return c[0] - 2 * c[2], c[2]
    elif ring is CYCLO_EIGHTH:
        if c[2] == 0 and c[3] == -c[1]:
            return c[0], c[1]
    raise DomainError(f"{x!r} is not in the Z[sqrt2] subring")


def element_to_json(x: RingElement) -> dict:
    return {"ring": x.ring.name, "coeffs": [str(c) for c in x.coeffs]}


def element_from_json(data: dict) -> RingElement:
    return element(ring_by_name(data["ring"]), [int(c) for c in data["coeffs"]])
