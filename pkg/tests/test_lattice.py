import itertools
from fractions import Fraction

import pytest

from cyclosvp.errors import DomainError, RadiusExhausted
from cyclosvp.lattice import (
    IntegerLattice,
    canonical_coeffs,
    contains,
    enumerate_all,
    gauss_reduce,
    gauss_reduce_gram,
    gram_det,
    hnf_rows,
    lattice_from_rows,
    lift_ideal_lattice,
    lll_reduce,
    prime_ideal_from_factor,
    prime_ideal_lattice,
    principal_ideal_lattice,
    svp_enumerate,
    svp_with_doubling,
)
from cyclosvp.rings import (
    CYCLO_EIGHTH,
    GAUSSIAN_INT,
    QUAD_SQRT2,
    QUARTIC_THETA,
    canonical_inner,
    cyclotomic,
    element,
    field_norm,
    integer,
)


def det2(u):
    return u[0][0] * u[1][1] - u[0][1] * u[1][0]


def ring_disc(ring):
    return gram_det(ring.gram)


# --- construction / HNF ---------------------------------------------------


def test_prime_ideal_zsqrt2_7():
    lat = prime_ideal_lattice(QUAD_SQRT2, 7, 4)
    rows = lat.rows()
    # lower-triangular HNF, positive diagonal, reduced entry below
    assert rows[0] == [7, 0] and rows[1][1] == 1 and 0 <= rows[1][0] < 7
    # generating rows (7,0) and (-4,1) have inner products 98, -56, 36
    a = element(QUAD_SQRT2, (7, 0))
    b = element(QUAD_SQRT2, (-4, 1))
    assert canonical_inner(a, a) == 98
    assert canonical_inner(a, b) == -56
    assert canonical_inner(b, b) == 36
    # same lattice: membership of both generators, determinant N^2 * disc
    assert contains(lat, a) and contains(lat, b)
    assert gram_det(lat.gram) == 49 * ring_disc(QUAD_SQRT2)
    assert not contains(lat, integer(QUAD_SQRT2, 1))


def test_prime_ideal_invalid_root():
    with pytest.raises(DomainError) as err:
        prime_ideal_lattice(QUAD_SQRT2, 7, 5)
    assert "residue 2" in str(err.value)  # 25 - 2 = 23 = 2 (mod 7)
    with pytest.raises(DomainError):
        prime_ideal_lattice(CYCLO_EIGHTH, 89, 34)  # 34^4 + 1 = 2 (mod 89)


def test_prime_ideal_zeta8_89():
    lat = prime_ideal_lattice(CYCLO_EIGHTH, 89, 12)
    assert pow(12, 4, 89) == 88
    assert lat.rank == 4
    assert gram_det(lat.gram) == 89 * 89 * ring_disc(CYCLO_EIGHTH)


def test_hnf_shape_and_lattice_preservation():
    rows = [[4, 2, 0], [2, 8, 2], [0, 2, 6], [6, 10, 2]]
    hnf = hnf_rows(rows, 3)
    for i in range(3):
        assert hnf[i][i] > 0
        for j in range(i + 1, 3):
            assert hnf[i][j] == 0
        for j in range(i):
            assert 0 <= hnf[i][j] < hnf[j][j]


def test_prime_ideal_from_factor_degree2():
    # x^4 + 1 = (x^2 - 3x - 1)(x^2 + 3x - 1) mod 11 since 3^2 = -2 (mod 11)
    lat = prime_ideal_from_factor(CYCLO_EIGHTH, 11, [10, 8, 1])
    assert gram_det(lat.gram) == 11**4 * ring_disc(CYCLO_EIGHTH)
    with pytest.raises(DomainError):
        prime_ideal_from_factor(CYCLO_EIGHTH, 11, [1, 1, 1])


def test_principal_ideal_lattice_norm():
    alpha = element(GAUSSIAN_INT, (3, 2))
    lat = principal_ideal_lattice(GAUSSIAN_INT, alpha)
    assert gram_det(lat.gram) == 13 * 13 * ring_disc(GAUSSIAN_INT)
    assert contains(lat, alpha)
    with pytest.raises(DomainError):
        principal_ideal_lattice(GAUSSIAN_INT, integer(GAUSSIAN_INT, 0))


# --- Gauss reduction ------------------------------------------------------


def test_gauss_reduce_7():
    lat = prime_ideal_lattice(QUAD_SQRT2, 7, 4)
    red = gauss_reduce(lat)
    assert red.gram[0][0] == 18
    assert red.gram[0][0] <= red.gram[1][1]
    assert 2 * abs(red.gram[0][1]) <= red.gram[0][0]
    assert det2(red.transform) in (1, -1)
    assert gram_det(red.gram) == gram_det(lat.gram)
    # the first vector is the shortest: enumeration agrees
    assert svp_enumerate(lat, 18).sq_length == 18


def test_gauss_reduce_89():
    lat = prime_ideal_lattice(QUAD_SQRT2, 89, 25)
    red = gauss_reduce(lat)
    assert red.gram[0][0] == 214  # 2 * min(2*11^2 - 89, 2*3^2 + 89)
    assert svp_enumerate(lat, 214).sq_length == 214


def test_gauss_reduce_idempotent():
    lat = prime_ideal_lattice(QUAD_SQRT2, 17, 6)
    red = gauss_reduce(lat)
    again = gauss_reduce(red)
    assert again.gram == red.gram


def test_gauss_reduce_needs_rank_2():
    lat = prime_ideal_lattice(CYCLO_EIGHTH, 89, 12)
    with pytest.raises(DomainError):
        gauss_reduce(lat)


# --- LLL ------------------------------------------------------------------


def test_lll_agrees_with_gauss_in_rank_2():
    for p, r in ((7, 4), (17, 6), (89, 25), (23, 5)):
        lat = prime_ideal_lattice(QUAD_SQRT2, p, r)
        assert lll_reduce(lat).gram[0][0] == gauss_reduce(lat).gram[0][0]


def test_lll_identity_gram_unchanged():
    lat = principal_ideal_lattice(cyclotomic(3), integer(cyclotomic(3), 1))
    red = lll_reduce(lat)
    assert red.gram == lat.gram


def test_lll_rank8_prime_ideal_over_7():
    # the rank-8 prime ideal of Z[zeta16] over 7 extends the theta-subring
    # degree-1 ideal; lambda1^2 = 2^3 * a_7 = 24
    roots = [r for r in range(7) if (pow(r, 4, 7) + 4 * r * r + 2) % 7 == 0]
    base = prime_ideal_lattice(QUARTIC_THETA, 7, roots[0])
    lat = lift_ideal_lattice(base, cyclotomic(3))
    red = lll_reduce(lat)
    assert gram_det(red.gram) == gram_det(lat.gram)
    assert red.gram[0][0] >= 24
    assert svp_enumerate(lat, 24).sq_length == 24
    # transform is unimodular
    u = [list(r) for r in red.transform]
    assert abs(_det_int(u, red.rank)) == 1


def test_lift_of_non_prime_ideal_keeps_subring_minimum():
    # (7, sqrt2-4) extends to the product of two zeta16 primes; the
    # subring shortest vector (length^2 18) stays shortest, scaled by 4
    base = prime_ideal_lattice(QUAD_SQRT2, 7, 4)
    lat = lift_ideal_lattice(base, cyclotomic(3))
    assert svp_enumerate(lat, 72).sq_length == 72


def _det_int(m, n):
    mat = [[Fraction(x) for x in row] for row in m]
    det = Fraction(1)
    for i in range(n):
        piv = next((r for r in range(i, n) if mat[r][i]), None)
        if piv is None:
            return 0
        if piv != i:
            mat[i], mat[piv] = mat[piv], mat[i]
            det = -det
        det *= mat[i][i]
        for r in range(i + 1, n):
            f = mat[r][i] / mat[i][i]
            for c in range(i, n):
                mat[r][c] -= f * mat[i][c]
    return int(det)


# --- enumeration ----------------------------------------------------------


def test_svp_zeta8_89():
    lat = prime_ideal_lattice(CYCLO_EIGHTH, 89, 12)
    cert = svp_enumerate(lat, 44)
    assert cert.sq_length == 44
    assert cert.vector.coeffs == (0, 1, 1, 3)
    assert contains(lat, cert.vector)


def test_svp_gaussian_13():
    lat = prime_ideal_lattice(GAUSSIAN_INT, 13, 5)
    cert = svp_enumerate(lat, 26)
    assert cert.sq_length == 26
    # canonical tie-break among {(3,2) torsion orbit}: (2,-3) is lex-least
    assert cert.vector.coeffs == (2, -3)
    assert abs(field_norm(cert.vector)) == 13


def test_svp_monotone_in_radius():
    lat = prime_ideal_lattice(CYCLO_EIGHTH, 89, 12)
    for radius in (44, 88, 176):
        cert = svp_enumerate(lat, radius)
        assert cert.sq_length == 44 and cert.vector.coeffs == (0, 1, 1, 3)


def test_svp_radius_exhausted_and_doubling():
    lat = prime_ideal_lattice(CYCLO_EIGHTH, 89, 12)
    with pytest.raises(RadiusExhausted):
        svp_enumerate(lat, 40)
    assert svp_with_doubling(lat, 4).sq_length == 44
    with pytest.raises(RadiusExhausted):
        svp_with_doubling(lat, 1, retries=2)


def test_svp_rank1_guard():
    lat = IntegerLattice(
        GAUSSIAN_INT,
        (element(GAUSSIAN_INT, (7, 0)),),
        ((98,),),
    )
    cert = svp_enumerate(lat, 98)
    assert cert.sq_length == 98 and cert.vector.coeffs == (7, 0)
    with pytest.raises(RadiusExhausted):
        svp_enumerate(lat, 97)
    vecs = enumerate_all(lat, 98 * 4)
    assert [(v.coeffs, sq) for v, sq in vecs] == [((7, 0), 98), ((14, 0), 392)]


def test_enumeration_scale_divisibility():
    # canonical lengths in the level-k ring are multiples of 2^k
    for k, p, r in ((2, 89, 12), (2, 41, 14)):
        lat = prime_ideal_lattice(cyclotomic(k), p, r)
        for v, sq in enumerate_all(lat, 16 * p):
            assert sq % (1 << k) == 0


def test_enumerate_all_against_box_scan_rank2():
    p, r = 23, 5
    lat = prime_ideal_lattice(QUAD_SQRT2, p, r)
    radius = 200
    expected = set()
    for u in range(-20, 21):
        for v in range(-20, 21):
            if (u, v) == (0, 0) or (u + v * r) % p:
                continue
            sq = 2 * (u * u + 2 * v * v)
            if sq <= radius:
                expected.add((canonical_coeffs((u, v)), sq))
    got = {(v.coeffs, sq) for v, sq in enumerate_all(lat, radius)}
    assert got == expected


def test_enumerate_all_against_box_scan_rank4():
    p = 41
    r = 14  # 14^4 = -1 (mod 41)
    assert pow(r, 4, p) == p - 1
    lat = prime_ideal_lattice(CYCLO_EIGHTH, p, r)
    radius = 4 * 41
    expected = set()
    for coeffs in itertools.product(range(-7, 8), repeat=4):
        if not any(coeffs):
            continue
        if sum(c * pow(r, j, p) for j, c in enumerate(coeffs)) % p:
            continue
        sq = 4 * sum(c * c for c in coeffs)
        if sq <= radius:
            expected.add((canonical_coeffs(coeffs), sq))
    got = {(v.coeffs, sq) for v, sq in enumerate_all(lat, radius)}
    assert got == expected


def test_enumeration_rank_cap(monkeypatch):
    monkeypatch.setenv("CYCLOSVP_MAX_RANK", "4")
    base = prime_ideal_lattice(QUAD_SQRT2, 7, 4)
    lat = lift_ideal_lattice(base, cyclotomic(3))
    with pytest.raises(DomainError):
        svp_enumerate(lat, 72)
    monkeypatch.setenv("CYCLOSVP_MAX_RANK", "8")
    assert svp_enumerate(lat, 72).sq_length == 72


# --- lifting lattices -----------------------------------------------------


def test_lift_ideal_lattice_determinants():
    base = prime_ideal_lattice(GAUSSIAN_INT, 13, 5)
    for k in (2, 3):
        lifted = lift_ideal_lattice(base, cyclotomic(k))
        d = cyclotomic(k).degree
        # index of the lifted ideal is N^(d/2) = 13^(d/2)
        assert gram_det(lifted.gram) == 13**d * ring_disc(cyclotomic(k))


def test_lift_theta_to_zeta16():
    roots = [r for r in range(7) if (pow(r, 4, 7) + 4 * pow(r, 2, 7) + 2) % 7 == 0]
    base = prime_ideal_lattice(QUARTIC_THETA, 7, roots[0])
    lifted = lift_ideal_lattice(base, cyclotomic(3))
    assert lifted.rank == 8
    # the extension has norm 7^2, so det(Gram) = (7^2)^2 * disc
    assert gram_det(lifted.gram) == 7**4 * ring_disc(cyclotomic(3))


def test_lift_ideal_requires_larger_ring():
    lat = prime_ideal_lattice(CYCLO_EIGHTH, 89, 12)
    with pytest.raises(DomainError):
        lift_ideal_lattice(lat, GAUSSIAN_INT)


# --- misc -----------------------------------------------------------------


def test_gauss_reduce_gram_unimodular():
    gram = ((2 * 89 * 89, 2 * 89 * 25), (2 * 89 * 25, 2 * 25 * 25 + 4))
    red, u = gauss_reduce_gram(gram)
    assert det2(u) in (1, -1)
    assert red[0][0] <= red[1][1] and 2 * abs(red[0][1]) <= red[0][0]


def test_lattice_from_rows_requires_full_rank():
    with pytest.raises(DomainError):
        lattice_from_rows(QUAD_SQRT2, [[2, 0]])


def test_contains_rejects_other_ring():
    lat = prime_ideal_lattice(QUAD_SQRT2, 7, 4)
    assert not contains(lat, integer(GAUSSIAN_INT, 7))


def test_basis_rows_vanish_at_the_root():
    # two-element representation: every basis element reduces to 0 mod p at r
    for ring, p, r in (
        (QUAD_SQRT2, 89, 25),
        (CYCLO_EIGHTH, 89, 12),
        (GAUSSIAN_INT, 13, 5),
        (QUARTIC_THETA, 23, min(r for r in range(23) if (pow(r, 4, 23) + 4 * r * r + 2) % 23 == 0)),
    ):
        lat = prime_ideal_lattice(ring, p, r)
        assert lat.ideal_meta == (p, r)
        for b in lat.basis:
            assert sum(c * pow(r, j, p) for j, c in enumerate(b.coeffs)) % p == 0


def test_lattice_json():
    from cyclosvp.lattice import lattice_to_json

    lat = prime_ideal_lattice(QUAD_SQRT2, 7, 4)
    data = lattice_to_json(lat)
    assert data["ring"] == "zsqrt2" and data["p"] == "7" and data["r"] == "4"
    assert data["basis"] == [["7", "0"], ["3", "1"]]
    assert all(isinstance(v, str) for row in data["gram"] for v in row)
