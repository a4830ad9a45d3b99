import random

import pytest
from hypothesis import given, settings, strategies as st

from frobcode.galois import FieldSpec
from frobcode.polyring import (
    CyclotomicFactors,
    Poly,
    build_from_roots,
    crt_combine,
    cyclic_mul,
    cyclotomic_cosets,
    factorize_xn_minus_1,
    inverse_mod,
    multiplicative_order,
    poly_gcd,
    reciprocal_transform,
)

F2 = FieldSpec.prime(2)
F3 = FieldSpec.prime(3)
F4 = FieldSpec.extension(2, 2)


def P2(*coeffs):
    return Poly.from_coeffs(F2, coeffs)


# --- independent oracle: dict-backed sparse arithmetic ---------------------

def oracle_cyclic_mul(a, b, n, p):
    out = {}
    for i, ai in enumerate(a):
        for j, bj in enumerate(b):
            k = (i + j) % n
            out[k] = (out.get(k, 0) + ai * bj) % p
    return [out.get(i, 0) for i in range(n)]


def test_basic_arithmetic():
    a = P2(1, 1)            # 1 + X
    assert (a * a).vals == (1, 0, 1)   # (1+X)^2 = 1 + X^2 over GF(2)
    assert (a + a).is_zero
    b = P2(1, 0, 1)
    q, r = divmod(b, a)
    assert q == a and r.is_zero
    assert b % a == Poly.zero(F2)
    assert a.degree == 1 and Poly.zero(F2).degree == float("-inf")


def test_cyclic_mul_examples():
    # X^4 * X^3 = X^7 = X^2 in F2[X]/(X^5-1)
    x4 = Poly.from_coeffs(F2, [0, 0, 0, 0, 1])
    x3 = Poly.from_coeffs(F2, [0, 0, 0, 1])
    assert cyclic_mul(x4, x3, 5).vals == (0, 0, 1)
    # (1+X)^2 stays below the wrap
    a = P2(1, 1)
    assert cyclic_mul(a, a, 5).vals == (1, 0, 1)


def test_reciprocal_transform_is_reversal():
    # X^(-1) = X^(n-1)
    x = Poly.x(F2)
    assert reciprocal_transform(x, 5).vals == (0, 0, 0, 0, 1)
    a = Poly.from_coeffs(F2, [1, 1, 0, 1])
    twice = reciprocal_transform(reciprocal_transform(a, 7), 7)
    assert twice == a


@settings(deadline=None)
@given(st.lists(st.integers(0, 2), min_size=0, max_size=9), st.integers(5, 9))
def test_reciprocal_involution_f3(coeffs, n):
    a = Poly.from_coeffs(F3, coeffs[:n])
    assert reciprocal_transform(reciprocal_transform(a, n), n) == a


@settings(deadline=None)
@given(
    st.lists(st.integers(0, 1), min_size=1, max_size=8),
    st.lists(st.integers(0, 1), min_size=1, max_size=8),
    st.integers(4, 9),
)
def test_cyclic_mul_matches_oracle(av, bv, n):
    a, b = Poly.from_coeffs(F2, av), Poly.from_coeffs(F2, bv)
    got = cyclic_mul(a, b, n)
    want = oracle_cyclic_mul(av, bv, n, 2)
    assert list(got.vals) + [0] * (n - len(got.vals)) == want


@settings(deadline=None)
@given(
    st.lists(st.integers(0, 3), min_size=1, max_size=7),
    st.lists(st.integers(0, 3), min_size=1, max_size=7),
)
def test_divmod_reconstructs_gf4(av, bv):
    a = Poly(F4, av)
    b = Poly(F4, bv)
    if b.is_zero:
        return
    q, r = divmod(a, b)
    assert q * b + r == a
    assert r.is_zero or r.degree < b.degree


def test_gcd_and_inverse():
    xn1 = Poly.xn_minus_1(F2, 5)
    a = P2(1, 1)
    g = poly_gcd(xn1, a)
    assert g == P2(1, 1)  # X+1 divides X^5-1
    m2 = xn1 // a
    inv = inverse_mod(a, m2)
    assert (a * inv) % m2 == Poly.one(F2)
    with pytest.raises(ValueError):
        inverse_mod(a, xn1)  # shares the factor X+1


def test_inverse_mod_extension_fields():
    # the trailing scalar of the euclidean chain need not be 1 here
    for p, k, n in [(3, 2, 5), (2, 2, 5), (2, 3, 9)]:
        spec = FieldSpec.extension(p, k)
        xn1 = Poly.xn_minus_1(spec, n)
        for f, _ in factorize_xn_minus_1(n, spec).pairs:
            cof = xn1 // f
            if f.degree == 0:
                continue
            inv = inverse_mod(cof, f)
            assert (cof * inv) % f == Poly.one(spec) % f


@settings(deadline=None)
@given(st.integers(0, 3**4 - 1), st.integers(0, 3**4 - 1))
def test_crt_combine_round_trip(ia, ib):
    # moduli X^2+1 and X+1 are coprime over GF(3)
    m1 = Poly.from_coeffs(F3, [1, 0, 1])
    m2 = Poly.from_coeffs(F3, [1, 1])
    r1 = Poly.from_coeffs(F3, [ia % 3, ia // 3 % 3])
    r2 = Poly.from_coeffs(F3, [ib % 3])
    sol = crt_combine([(r1, m1), (r2, m2)])
    assert sol % m1 == r1 % m1
    assert sol % m2 == r2 % m2
    assert sol.is_zero or sol.degree < 3


def test_build_from_roots():
    # (X-1)(X-2) over GF(3) = X^2 + 2  (since 1+2=0, 1*2=2)
    f = build_from_roots(F3, [1, 2])
    assert f.vals == (2, 0, 1)
    assert f.evaluate(1) == 0 and f.evaluate(2) == 0


# --- cyclotomic cosets -----------------------------------------------------

def test_cyclotomic_cosets_known():
    assert cyclotomic_cosets(5, 2) == ((0,), (1, 2, 3, 4))
    assert cyclotomic_cosets(5, 4) == ((0,), (1, 4), (2, 3))
    assert cyclotomic_cosets(9, 8) == ((0,), (1, 8), (2, 7), (3, 6), (4, 5))
    assert cyclotomic_cosets(17, 4) == (
        (0,), (1, 4, 13, 16), (2, 8, 9, 15), (3, 5, 12, 14), (6, 7, 10, 11))


def test_cyclotomic_cosets_partition():
    for n, q in [(13, 2), (65, 2), (65, 4), (97, 8), (21, 4)]:
        cos = cyclotomic_cosets(n, q)
        flat = sorted(i for c in cos for i in c)
        assert flat == list(range(n))
        for c in cos:
            assert all((i * q) % n in c for i in c)


def test_cyclotomic_cosets_rejects_non_unit():
    with pytest.raises(ValueError):
        cyclotomic_cosets(9, 3)


# --- factorisation of X^n - 1 ---------------------------------------------

@pytest.mark.parametrize("n,spec", [
    (5, F2), (7, F2), (9, F2), (13, F2), (17, F2), (17, F4), (65, F4),
    (5, F3), (8, F3),
])
def test_factorize_multiplies_back(n, spec):
    fac = factorize_xn_minus_1(n, spec)
    assert fac.verify_product()
    for f, coset in fac.pairs:
        assert f.is_monic
        assert f.degree == len(coset)
        assert coset[0] == min(coset)
    assert sorted(fac.labels()) == sorted(c[0] for c in
                                          cyclotomic_cosets(n, spec.q))


def test_factorize_degrees_match_coset_sizes():
    fac = factorize_xn_minus_1(65, F2)
    sizes = sorted(len(c) for _, c in fac.pairs)
    assert sizes == [1, 4, 12, 12, 12, 12, 12]
    assert multiplicative_order(2, 65) == 12


def test_factor_roots_are_beta_powers():
    fac = factorize_xn_minus_1(13, F2)
    big = fac.splitting
    for f, coset in fac.pairs:
        lifted = f.map_coeffs(lambda v: v, big)  # scalar coeffs embed as-is
        for i in coset:
            assert lifted.evaluate(big.vpow(fac.beta.val, i)) == 0


def test_frobenius_permutes_factors_by_coset_scaling():
    # over GF(4), sigma maps the factor with coset C to the one with 2C
    fac = factorize_xn_minus_1(17, F4)
    by_coset = {c: f for f, c in fac.pairs}
    for f, coset in fac.pairs:
        image = f.frobenius(1)
        scaled = tuple(sorted((2 * i) % 17 for i in coset))
        assert by_coset[scaled] == image


def test_self_reciprocal_coset_structure():
    # lengths dividing 2^t + 1: every nonzero coset is closed under negation
    for n in (5, 13, 17, 65, 97):
        for c in cyclotomic_cosets(n, 2):
            assert tuple(sorted((-i) % n for i in c)) == c
        nontrivial = [c for c in cyclotomic_cosets(n, 2) if c != (0,)]
        assert all(len(c) % 2 == 0 for c in nontrivial)


def test_factorize_rejects_characteristic_divisor():
    with pytest.raises(ValueError):
        factorize_xn_minus_1(6, F2)


def test_shared_beta_alignment():
    # the GF(2) and GF(4) factorisations of X^17-1 can share one root;
    # each GF(4) factor then divides its GF(2) parent exactly
    fac2 = factorize_xn_minus_1(17, F2)
    fac4 = factorize_xn_minus_1(17, F4, splitting=fac2.splitting, beta=fac2.beta)
    assert fac4.splitting is fac2.splitting
    for f4, c4 in fac4.pairs:
        parents = [
            (f2, c2) for f2, c2 in fac2.pairs if set(c4) <= set(c2)]
        assert len(parents) == 1
        f2, _ = parents[0]
        lifted = f2.map_coeffs(lambda v: v, F4)
        assert lifted % f4 == Poly.zero(F4)


def test_crt_with_factor_moduli_round_trip():
    fac = factorize_xn_minus_1(13, F2)
    rng = random.Random(7)
    target = Poly.from_coeffs(F2, [rng.randrange(2) for _ in range(13)])
    pairs = [(target % f, f) for f, _ in fac.pairs]
    assert crt_combine(pairs) == target % Poly.xn_minus_1(F2, 13)


@given(st.integers(2, 6), st.data())
@settings(max_examples=60, deadline=None)
def test_plane_mul_matches_schoolbook(k, data):
    # the characteristic-2 bit-plane product must agree with the plain
    # double loop over vmul/vadd for every extension degree
    spec = FieldSpec.extension(2, k)
    deg = st.integers(0, 30)
    coeff = st.integers(0, spec.q - 1)
    a = Poly(spec, data.draw(st.lists(coeff, min_size=1,
                                      max_size=data.draw(deg) + 1)))
    b = Poly(spec, data.draw(st.lists(coeff, min_size=1,
                                      max_size=data.draw(deg) + 1)))
    assert a * b == a._mul_generic(b)
