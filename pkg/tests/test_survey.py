"""Density sweep: frozen table checkpoints, the naive-scan cross-check,
and the quadratic-residue mechanism."""

import math

import pytest

from frobcode.codegen import classify_length, linear_exists
from frobcode.survey import (Checkpoint, density, density_csv, is_good_length,
                             minimal_exponent, qr_lower_bound_check,
                             thread_budget, _jacobi)

TABLE = {
    10: (2, 1, 1),
    100: (23, 11, 12),
    1000: (189, 101, 88),
    10_000: (1521, 790, 731),
}


def naive_good(n, p):
    """Scan exponents directly; complete because powers of p cycle
    within the first n steps."""
    if n < 1 or math.gcd(n, p) != 1:
        return None
    for t in range(1, n + 1):
        if pow(p, t, n) == (n - 1) % n:
            return t
    return None


def test_table_checkpoints_up_to_ten_thousand():
    report = density(2, 10_000, workers=1)
    got = {c.x: (c.total, c.even, c.odd) for c in report.checkpoints}
    assert got == TABLE


def test_counts_partition_and_grow():
    report = density(2, 3000, checkpoints=list(range(10, 3001, 250)) + [3000])
    prev = Checkpoint(0, 0, 0, 0)
    for c in report.checkpoints:
        assert c.total == c.even + c.odd
        assert c.total >= prev.total
        assert c.even >= prev.even and c.odd >= prev.odd
        prev = c


def test_detail_lists_the_good_lengths():
    report = density(2, 30, keep_detail=True)
    assert report.good == (5, 9, 11, 13, 17, 19, 25, 27, 29)
    assert report.checkpoints[-1].total == 9


@pytest.mark.parametrize("p", [2, 3, 5])
def test_matches_naive_scan(p):
    limit = 1000 if p == 2 else 400
    for n in range(1, limit + 1):
        want = naive_good(n, p)
        assert is_good_length(n, p) == (want is not None)
        assert minimal_exponent(n, p) == want


def test_agrees_with_length_classifier():
    for n in range(1, 200):
        c = classify_length(n, 2)
        assert c.good == is_good_length(n, 2)
        if c.good:
            assert c.t_min == minimal_exponent(n, 2)


def test_short_lengths_are_good_but_uncounted():
    # n = 3 divides 2^1 + 1 yet supports no Frobenius power, so the
    # counts start above p + 1
    assert is_good_length(3, 2)
    assert not classify_length(3, 2).d_options
    report = density(2, 10, keep_detail=True)
    assert 3 not in report.good and 5 in report.good


def test_even_parity_matches_linear_route():
    report = density(2, 99, keep_detail=True)
    for n in report.good:
        assert linear_exists(n, 2) == (minimal_exponent(n, 2) % 2 == 0)


def test_csv_shape():
    report = density(2, 100, workers=1)
    text = density_csv(report)
    lines = text.strip().split("\n")
    assert lines[0] == "x,total,even,odd"
    assert lines[-1] == "100,23,11,12"


def test_checkpoint_validation():
    with pytest.raises(ValueError, match="x >= 2"):
        density(2, 1)
    with pytest.raises(ValueError, match="checkpoints"):
        density(2, 100, checkpoints=[50, 200])


def test_thread_budget_env(monkeypatch):
    monkeypatch.setenv("FROBCODE_THREADS", "3")
    assert thread_budget() == 3
    monkeypatch.setenv("FROBCODE_THREADS", "0")
    assert thread_budget() == 1
    monkeypatch.setenv("FROBCODE_THREADS", "lots")
    with pytest.raises(ValueError, match="FROBCODE_THREADS"):
        thread_budget()
    monkeypatch.delenv("FROBCODE_THREADS")
    assert thread_budget() >= 1


def test_worker_count_does_not_change_counts(monkeypatch):
    serial = density(2, 2000, workers=1)
    monkeypatch.setenv("FROBCODE_THREADS", "4")
    assert density(2, 2000).checkpoints == serial.checkpoints


def test_jacobi_matches_square_scan():
    for n in [3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47]:
        squares = {(b * b) % n for b in range(1, n)}
        for a in range(1, n):
            assert _jacobi(a, n) == (1 if a in squares else -1)
    assert _jacobi(10, 15) == 0
    with pytest.raises(ValueError):
        _jacobi(3, 8)


def test_jacobi_two_is_the_mod8_rule():
    for n in range(3, 500, 2):
        assert (_jacobi(2, n) == -1) == (n % 8 in (3, 5))


def test_qr_lower_bound():
    assert qr_lower_bound_check(2, 1000)
    assert qr_lower_bound_check(3, 500)
    assert qr_lower_bound_check(7, 300)
    with pytest.raises(ValueError, match="x >= 10"):
        qr_lower_bound_check(2, 9)


def test_qr_primes_really_land_in_the_counts():
    # the lower-bound mechanism: non-residue primes above p + 1 all show
    # up in the counted set itself
    report = density(2, 1000, keep_detail=True)
    good = set(report.good)
    for n in range(5, 1001, 2):
        if all(n % q for q in range(3, int(n ** 0.5) + 1, 2)):
            if n % 8 in (3, 5):
                assert n in good
