"""Length classification, (g, h) enumeration, CRT assembly of a, and the
BCH window machinery."""

import math

import pytest
from hypothesis import given, settings, strategies as st

from frobcode.codegen import (
    BchWindow,
    ConstructionError,
    FrobeniusCode,
    IncompatibleParams,
    bch_distance,
    bch_window_from_exponents,
    classify_length,
    code_params,
    compatible_power,
    construct_code,
    default_alpha,
    enumerate_candidates,
    enumerate_canonical,
    factor_tower,
    from_descriptor,
    from_labels,
    linear_exists,
    linear_generator,
)
from frobcode.galois import FieldSpec
from frobcode.polyring import Poly, cyclic_mul, reciprocal_transform

F2 = FieldSpec.prime(2)

ODD_PARITY_UNDER_100 = [9, 11, 19, 27, 33, 43, 57, 59, 67, 81, 83, 99]


# ---------------------------------------------------------------------------
# classification


def test_classify_known_lengths():
    c = classify_length(5, 2)
    assert (c.good, c.t_min, c.parity, c.order) == (True, 2, "even", 4)
    assert c.d_options == (2, 3)

    c = classify_length(9, 2)
    assert (c.good, c.t_min, c.parity) == (True, 3, "odd")
    assert all(d % 2 == 1 for d in c.d_options)

    assert not classify_length(7, 2).good     # <2> mod 7 misses -1
    assert not classify_length(15, 2).good
    assert classify_length(41, 2).t_min == 10
    assert classify_length(97, 2).t_min == 24


def test_classify_degenerate_and_bad_inputs():
    assert classify_length(1, 3).good
    assert classify_length(2, 3).t_min == 1
    assert not classify_length(9, 3).good     # shares a factor with p
    with pytest.raises(ValueError):
        classify_length(0, 2)


def oracle_compatible(t_min, d):
    # d divides some odd multiple of t_min; c = d is always enough to try
    return any(c * t_min % d == 0 for c in range(1, 2 * d, 2))


def test_compatible_power_against_scan():
    for t_min in range(1, 13):
        for d in range(2, 17):
            assert compatible_power(t_min, d) == oracle_compatible(t_min, d)


def test_linear_exists_partition_under_100():
    for n in ODD_PARITY_UNDER_100:
        assert not linear_exists(n, 2)
    for n in [5, 13, 17, 25, 29, 37, 41, 53, 61, 65, 97]:
        assert linear_exists(n, 2)


def test_incompatible_message_is_pinned():
    with pytest.raises(IncompatibleParams,
                       match=r"no even exponent: n \| 2\^t\+1 only for odd t"):
        list(enumerate_canonical(9, 2, 2))
    with pytest.raises(IncompatibleParams):
        list(enumerate_canonical(7, 2, 2))    # not a Frobenius length at all


# ---------------------------------------------------------------------------
# BCH window


def oracle_window(E, n):
    """Cubic-time sweep: every (s, start, length) combination directly."""
    E = {e % n for e in E}
    best = (0, 1, 0)
    for s in range(1, n):
        if math.gcd(s, n) != 1:
            continue
        for start in range(n):
            length = 0
            while length < n and (s * (start + length)) % n in E:
                length += 1
            # prefer longer, then smaller s, then smaller start
            if length > best[0]:
                best = (length, s, start)
    return best[0] + 1, BchWindow(best[1], best[2], best[0])


def test_window_examples():
    assert bch_window_from_exponents({2, 3}, 5) == (3, BchWindow(1, 2, 2))
    assert bch_window_from_exponents({1, 4}, 5)[0] == 3   # rescale by 2
    assert bch_window_from_exponents({0}, 5) == (2, BchWindow(1, 0, 1))
    assert bch_window_from_exponents({4, 0, 1}, 5) == (4, BchWindow(1, 4, 3))
    assert bch_window_from_exponents(range(5), 5)[0] == 6
    with pytest.raises(ValueError):
        bch_window_from_exponents([], 5)


@settings(max_examples=150)
@given(st.data())
def test_window_matches_cubic_oracle(data):
    n = data.draw(st.sampled_from([5, 7, 9, 12, 13]))
    E = data.draw(st.sets(st.integers(0, n - 1), min_size=1, max_size=n))
    got_delta, got_w = bch_window_from_exponents(E, n)
    exp_delta, exp_w = oracle_window(E, n)
    assert got_delta == exp_delta
    assert (got_w.s, got_w.length) == (exp_w.s, exp_w.length)
    # starts may legitimately differ only when several minimal-s runs tie;
    # both reported runs must really sit inside E
    for j in range(got_w.length):
        assert (got_w.s * (got_w.start + j)) % n in E


def test_bch_distance_public_entry():
    assert bch_distance(Poly.from_coeffs(F2, [1, 1]), 5) == 2     # X + 1
    assert bch_distance(Poly.one(F2), 5) == 1
    f4 = FieldSpec.extension(2, 2)
    h = factor_tower(5, 2, 2).ext.factor(2)   # roots beta^2, beta^3
    assert h.spec is f4
    assert bch_distance(h, 5) == 3
    with pytest.raises(ValueError):
        bch_distance(Poly.from_coeffs(F2, [1, 1, 1]), 5)  # not a factor


# ---------------------------------------------------------------------------
# enumeration and construction


def test_length5_enumeration_frozen():
    codes = list(enumerate_canonical(5, 2, 2))
    assert [c.params for c in codes] == [(5, 1, 3), (5, 1, 3)]
    assert [c.window for c in codes] == [BchWindow(2, 2, 2), BchWindow(1, 2, 2)]
    assert [c.h_labels for c in codes] == [(1,), (2,)]
    assert all(c.g_labels == (0,) for c in codes)
    assert all(c.t == 2 and c.m == 1 and c.linear for c in codes)


def test_length13_sigma_conjugates_share_delta():
    codes = list(enumerate_canonical(13, 2, 2))
    assert [c.params for c in codes] == [(13, 1, 5), (13, 1, 5)]
    assert {c.window for c in codes} == {BchWindow(2, 5, 4), BchWindow(1, 5, 4)}


def test_length17_enumeration_contains_published_rows():
    codes = list(enumerate_canonical(17, 2, 2))
    assert len(codes) == 8
    by_key = {(c.g_labels, c.h_labels): c for c in codes}
    assert len(by_key) == 8                     # dedup key is injective
    assert by_key[((0,), (2, 6))].params == (17, 1, 7)
    assert by_key[((0,), (2, 6))].window == BchWindow(1, 6, 6)
    assert by_key[((0, 1), (6,))].params == (17, 9, 3)
    assert by_key[((0, 1), (6,))].window == BchWindow(1, 6, 2)


def test_length97_parameter_set():
    params = {c.params for c in enumerate_canonical(97, 2, 2)}
    assert params == {(97, 1, 9), (97, 49, 5)}


def test_degenerate_candidate_is_last_and_flagged():
    cands = list(enumerate_candidates(5, 2, 2))
    assert cands[-1].degenerate and not any(c.degenerate for c in cands[:-1])
    code = construct_code(5, 2, 2, cands[-1])
    assert code.degenerate
    assert code.params == (5, 5, 1)
    assert code.window is None


def test_enumeration_is_deterministic():
    a = [c.descriptor() for c in enumerate_canonical(17, 2, 2)]
    b = [c.descriptor() for c in enumerate_canonical(17, 2, 2)]
    assert a == b


def test_spec_construct_rows():
    assert from_labels(17, 2, 2, [0, 1], [6]).params == (17, 9, 3)
    assert from_labels(57, 2, 3, [0, 19, 5], [4, 12]).params == (57, 21, 5)
    assert from_labels(65, 2, 2, [0, 7, 11, 13], [2, 6, 10]).params == (65, 29, 7)
    assert from_labels(81, 2, 3, [0, 27, 1, 3], [36]).params == (81, 75, 2)
    assert code_params(from_labels(5, 2, 2, [0], [2])) == (5, 1, 3)


def test_higher_power_route():
    # d need not divide t_min: 6 divides 3*t_min at n=13 (t_min = 6... d=6
    # splits the size-12 orbit into sextic conjugate pairs)
    codes = list(enumerate_canonical(13, 2, 6))
    assert len(codes) == 6
    assert {c.params for c in codes} == {(13, 1, 3)}
    assert all(c.t == 6 and c.m == 1 for c in codes)
    # compatible-but-unproductive: every factor is sigma-deficient at d=6
    assert list(enumerate_canonical(5, 2, 6)) == []
    assert from_labels(41, 2, 2, [0], [1, 6]).t == 10


def test_constructive_emptiness_at_odd_parity():
    for n in (9, 27, 57):
        swept = list(enumerate_canonical(n, 2, 2, check_compatible=False))
        assert swept == []


def test_from_labels_rejections():
    with pytest.raises(ValueError, match="must be part of g"):
        from_labels(9, 2, 3, [3], [4])          # drops mandatory g_0
    with pytest.raises(ValueError, match="not a factor label"):
        from_labels(5, 2, 2, [0, 3], [2])
    with pytest.raises(ValueError, match="conflicts with g-factor"):
        from_labels(5, 2, 2, [0, 1], [2])
    with pytest.raises(ValueError, match="share the sigma-orbit"):
        from_labels(17, 2, 2, [0], [1, 2, 6, 12])
    with pytest.raises(ValueError, match="neither in g nor matched by h"):
        from_labels(17, 2, 2, [0], [6])
    with pytest.raises(ValueError):
        construct_code(5, 2, 2, list(enumerate_candidates(5, 2, 2))[0], alpha=0)


# ---------------------------------------------------------------------------
# the verification identities, re-derived here rather than trusting the
# constructor's own checks


def recheck_invariants(code: FrobeniusCode):
    n, d = code.n, code.d
    ground = code.g.spec
    one = Poly.one(ground)
    xn1 = Poly.xn_minus_1(ground, n)

    assert (code.a % code.g) == (one % code.g)
    assert code.k == code.g.degree
    h_deg = 0 if code.h.is_zero or code.h.degree < 0 else int(code.h.degree)
    assert code.k + d * h_deg == n

    hbar = xn1 // code.g
    assert ((reciprocal_transform(code.a, n) - code.a) % hbar).is_zero

    lhs = cyclic_mul(code.g, reciprocal_transform(code.f, n), n)
    rhs = cyclic_mul(reciprocal_transform(code.g, n), code.f, n)
    assert lhs == rhs

    # a is stored over F_p, so sigma fixes it by construction; confirm the
    # defining ext-field congruences a = sigma^i(alpha*eta) mod sigma^i(h)
    if not code.degenerate:
        ext = code.tower.ext_spec
        a_lift = code.a.map_coeffs(lambda v: v, ext)
        h_i = code.h
        for i in range(d):
            want = Poly(ext, (ext.vscale(code.alpha, ext.vfrob(ext.eta.val, i)),))
            assert (a_lift % h_i) == want
            h_i = h_i.frobenius(1)


@pytest.mark.parametrize("n,d", [(5, 2), (13, 2), (17, 2), (9, 3), (27, 3)])
def test_construction_invariants(n, d):
    codes = list(enumerate_canonical(n, 2, d, include_degenerate=True))
    assert codes
    for code in codes:
        recheck_invariants(code)


def test_crt_reduces_back_at_n5():
    code = from_labels(5, 2, 2, [0], [2])
    recheck_invariants(code)
    assert code.a.degree < 5


# ---------------------------------------------------------------------------
# descriptors


def test_descriptor_shape_and_round_trip():
    code = from_labels(17, 2, 2, [0, 1], [6])
    desc = code.descriptor()
    assert set(desc) == {"p", "d", "n", "t", "alpha", "g", "h", "a",
                         "params", "flags"}
    assert desc["params"] == [17, 9, 3]
    assert desc["g"]["cosets"][0] == [0]
    assert desc["h"]["field_modulus"] == [1, 1, 1]      # X^2+X+1
    assert desc["flags"] == {"linear": True, "degenerate": False,
                             "isotropy_verified": True}
    again = from_descriptor(desc)
    assert again.descriptor() == desc
    assert again.params == code.params


def test_descriptor_round_trip_all_enumerated():
    for n, d in [(5, 2), (9, 3), (13, 2)]:
        for code in enumerate_canonical(n, 2, d, include_degenerate=True):
            assert from_descriptor(code.descriptor()).descriptor() \
                == code.descriptor()


def test_descriptor_strict_rejects_tampering():
    desc = from_labels(5, 2, 2, [0], [2]).descriptor()
    desc["a"] = [0] * 5
    with pytest.raises(ConstructionError, match="do not match"):
        from_descriptor(desc)
    desc2 = from_labels(5, 2, 2, [0], [2]).descriptor()
    desc2["params"] = [5, 1, 4]
    with pytest.raises(ConstructionError):
        from_descriptor(desc2)


# ---------------------------------------------------------------------------
# the classical d=2 correspondence


def test_linear_generator_equals_gh():
    for g_labels, h_labels in [([0], [2, 6]), ([0, 1], [6])]:
        code = from_labels(17, 2, 2, g_labels, h_labels)
        gen = linear_generator(code)
        ext = code.tower.ext_spec
        gh = (code.g.map_coeffs(lambda v: v, ext) * code.h).monic()
        assert gen == gh
    assert linear_generator(from_labels(17, 2, 2, [0, 1], [6])).degree == 13


def test_linear_generator_needs_d2():
    code = from_labels(9, 2, 3, [0, 3], [4])
    with pytest.raises(ValueError, match="d = 2"):
        linear_generator(code)


def test_default_alpha_conventions():
    assert default_alpha(2, 2) == 1
    assert default_alpha(2, 3) == 1
    # -1/c0 for the quadratic modulus over F_3 (X^2+1 -> alpha = -1 = 2)
    c0 = FieldSpec.extension(3, 2).modulus[0]
    assert default_alpha(3, 2) == (-pow(c0, 1, 3)) % 3
