"""Elementary modular arithmetic: primality, Legendre symbols, square roots
mod p, roots of unity mod p, and residue-class data for odd primes.

Everything here is exact integer arithmetic.  ``is_prime`` is deterministic
below 2**64 (fixed Miller-Rabin witness set) and a strong probable-prime
test above; ``is_probable_only`` tells callers which regime applies.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .errors import DomainError

# Deterministic Miller-Rabin witnesses for n < 2**64.
_MR_WITNESSES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37)
_DETERMINISTIC_LIMIT = 1 << 64

_SMALL_PRIMES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47)


def is_probable_only(n: int) -> bool:
    """True when primality of ``n`` rests on a probable-prime test."""
    return n >= _DETERMINISTIC_LIMIT


def is_prime(n: int) -> bool:
    """Primality test, deterministic for n < 2**64.

    Raises DomainError for n < 2.
    """
    if n < 2:
        raise DomainError(f"primality is defined for n >= 2, got {n}")
    for q in _SMALL_PRIMES:
        if n == q:
            return True
        if n % q == 0:
            return False
    d = n - 1
    s = 0
    while d % 2 == 0:
        d //= 2
        s += 1
    for a in _MR_WITNESSES:
        x = pow(a, d, n)
        if x == 1 or x == n - 1:
            continue
        for _ in range(s - 1):
            x = x * x % n
            if x == n - 1:
                break
        else:
            return False
    return True


def sieve_primes(limit: int) -> list[int]:
    """All primes p <= limit, by sieve of Eratosthenes."""
    if limit < 2:
        return []
    flags = bytearray([1]) * (limit + 1)
    flags[0] = flags[1] = 0
    for q in range(2, math.isqrt(limit) + 1):
        if flags[q]:
            flags[q * q :: q] = bytearray(len(flags[q * q :: q]))
    return [i for i in range(limit + 1) if flags[i]]


def legendre(a: int, p: int) -> int:
    """Legendre symbol (a/p) in {-1, 0, 1}, by Euler's criterion."""
    if p == 2 or not is_prime(p):
        raise DomainError(f"Legendre symbol needs an odd prime modulus, got {p}")
    a %= p
    if a == 0:
        return 0
    t = pow(a, (p - 1) // 2, p)
    return -1 if t == p - 1 else t


def sqrt_mod(a: int, p: int) -> int | None:
    """Canonical square root of ``a`` mod the odd prime ``p``.

    Returns r = min(r, p - r) with r*r = a (mod p), or None when ``a`` is a
    quadratic non-residue (a marker, not an error: callers branch on it).
    For a = 2 with p = 7 (mod 8) the closed form 2**((p+1)/4) mod p is
    used; p = 3 (mod 4) uses the standard exponent shortcut; the remaining
    case is Tonelli-Shanks.
    """
    if p == 2 or not is_prime(p):
        raise DomainError(f"sqrt_mod needs an odd prime modulus, got {p}")
    a %= p
    if a == 0:
        raise DomainError("sqrt_mod requires gcd(a, p) = 1")
    if a == 1:
        return 1
    if a == 2 % p and p % 8 == 7:
        r = pow(2, (p + 1) // 4, p)
        return min(r, p - r)
    if legendre(a, p) != 1:
        return None
    if p % 4 == 3:
        r = pow(a, (p + 1) // 4, p)
        return min(r, p - r)
    # Tonelli-Shanks: write p - 1 = q * 2**s with q odd.
    q, s = p - 1, 0
    while q % 2 == 0:
        q //= 2
        s += 1
    z = 2
    while legendre(z, p) != -1:
        z += 1
    c = pow(z, q, p)
    r = pow(a, (q + 1) // 2, p)
    t = pow(a, q, p)
    m = s
    while t != 1:
        i = 0
        t2 = t
        while t2 != 1:
            t2 = t2 * t2 % p
            i += 1
        b = pow(c, 1 << (m - i - 1), p)
        r = r * b % p
        c = b * b % p
        t = t * c % p
        m = i
    return min(r, p - r)


def root_of_minus_one(p: int, k: int) -> int:
    """Smallest r in [1, p-1] with r**(2**k) = -1 (mod p).

    Such r exists iff 2**(k+1) divides p - 1.  The full set of roots is
    the set of elements of exact order 2**(k+1); the minimum is returned
    for reproducibility.
    """
    order = 1 << (k + 1)
    if (p - 1) % order != 0:
        raise DomainError(f"x^{1 << k} = -1 has no root mod {p}")
    g = 2
    while True:
        r = pow(g, (p - 1) // order, p)
        if pow(r, order // 2, p) == p - 1:
            break
        g += 1
    best = min(pow(r, j, p) for j in range(1, order, 2))
    return best


@dataclass(frozen=True)
class ResidueClass:
    """Residue-class data of an odd prime with its decomposition tower.

    ``supported`` is True exactly when a shortest-vector length formula
    exists: p = 3, 5 (mod 8) or p = 7, 9 (mod 16).  ``min_level`` is the
    smallest tower level n (ring Z[zeta_{2^{n+1}}]) the formula covers,
    or None for unsupported classes.
    """

    p: int
    class_mod8: int
    class_mod16: int
    supported: bool
    min_level: int | None
    splitting: tuple[str, ...]


_SPLITTING = {
    "5mod8": (
        "splits into two degree-1 primes in Z[i]",
        "inert in Z[zeta8] and at every higher level",
    ),
    "3mod8": (
        "inert in Z[i]",
        "splits into two degree-2 primes in Z[zeta8]",
        "inert in Z[zeta16] and at every higher level",
    ),
    "9mod16": (
        "splits into two degree-1 primes in Z[sqrt2]",
        "each splits again in Z[zeta8]: four degree-1 primes",
        "inert in Z[zeta16] and at every higher level",
    ),
    "7mod16": (
        "splits into two degree-1 primes in Z[sqrt2]",
        "each splits again in Z[zeta16+zeta16^7]: four degree-1 primes",
        "inert in Z[zeta16]",
        "inert at every higher level",
    ),
    "1mod16": (
        "splits into two degree-1 primes in Z[sqrt2]",
        "splits completely in Z[zeta16]",
        "behaviour above Z[zeta16] depends on p mod 32; no length formula",
    ),
    "15mod16": (
        "splits into two degree-1 primes in Z[sqrt2]",
        "keeps splitting into degree-2 primes at higher levels; no length formula",
    ),
}

_MIN_LEVEL = {"5mod8": 1, "3mod8": 2, "9mod16": 2, "7mod16": 3}


def class_label(p: int) -> str:
    """Short label of the residue class: '5mod8', '9mod16', ..."""
    m8, m16 = p % 8, p % 16
    if m8 == 5:
        return "5mod8"
    if m8 == 3:
        return "3mod8"
    if m16 == 9:
        return "9mod16"
    if m16 == 7:
        return "7mod16"
    if m16 == 1:
        return "1mod16"
    return "15mod16"


def classify_prime(p: int) -> ResidueClass:
    """Classify an odd prime by its residue mod 8 / mod 16.

    Raises DomainError for p = 2 (ramified everywhere in the tower) and
    for composite input.
    """
    if p == 2:
        raise DomainError("p = 2 is ramified in every ring of the tower; unsupported")
    if not is_prime(p):
        raise DomainError(f"{p} is not prime")
    label = class_label(p)
    return ResidueClass(
        p=p,
        class_mod8=p % 8,
        class_mod16=p % 16,
        supported=label in _MIN_LEVEL,
        min_level=_MIN_LEVEL.get(label),
        splitting=_SPLITTING[label],
    )
