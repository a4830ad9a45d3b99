"""Density of usable lengths.

f_p(x) counts the n <= x for which some exponent t has p^t = -1 (mod n),
split by the parity of the least such t.  Lengths not exceeding p + 1 are
left out of the counts: for them the least exponent is 1 and the window
of compatible Frobenius powers [2, 2*t_min] is empty, so they carry no
codes.  The quadratic-residue check at the bottom pins the mechanism
that makes the count grow at least like x/log x: an odd prime n with p
a quadratic non-residue is always counted.
"""

from __future__ import annotations

import math
import os
from bisect import bisect_right
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass

__all__ = [
    "Checkpoint",
    "DensityReport",
    "density",
    "density_csv",
    "is_good_length",
    "minimal_exponent",
    "qr_lower_bound_check",
    "thread_budget",
]

_spf_cache: dict[int, list[int]] = {}


def thread_budget() -> int:
    """Worker cap: FROBCODE_THREADS when set, else the CPU count."""
    raw = os.environ.get("FROBCODE_THREADS")
    if raw is not None:
        try:
            return max(1, int(raw))
        except ValueError:
            raise ValueError(
                f"FROBCODE_THREADS must be an integer, got {raw!r}") from None
    return os.cpu_count() or 1


def _spf_table(limit: int) -> list[int]:
    """spf[n] = smallest prime factor of n (spf[n] == n iff n prime)."""
    for have, table in _spf_cache.items():
        if have >= limit:
            return table
    spf = list(range(limit + 1))
    for i in range(2, math.isqrt(limit) + 1):
        if spf[i] == i:
            for j in range(i * i, limit + 1, i):
                if spf[j] == j:
                    spf[j] = i
    _spf_cache.clear()          # keep only the largest table around
    _spf_cache[limit] = spf
    return spf


def _factor(n: int, spf: list[int]) -> dict[int, int]:
    out: dict[int, int] = {}
    while n > 1:
        q = spf[n]
        e = 0
        while n % q == 0:
            n //= q
            e += 1
        out[q] = e
    return out


def _order(p: int, n: int, spf: list[int]) -> int:
    # phi(n) is a multiple of the order; strip primes while p^(e/q) = 1
    e = 1
    for q, k in _factor(n, spf).items():
        e *= (q - 1) * q ** (k - 1)
    for q in _factor(e, spf):
        while e % q == 0 and pow(p, e // q, n) == 1:
            e //= q
    return e


def _t_min(p: int, n: int, spf: list[int]) -> int | None:
    """Least t with p^t = -1 (mod n), or None.  Assumes gcd(n, p) = 1."""
    if n <= 2:
        return 1
    order = _order(p, n, spf)
    if order % 2 != 0 or pow(p, order // 2, n) != n - 1:
        return None
    return order // 2


def is_good_length(n: int, p: int) -> bool:
    """Does any t satisfy p^t = -1 (mod n)?  The raw predicate, before
    the n > p + 1 counting cut."""
    if n < 1 or math.gcd(n, p) != 1:
        return False
    return _t_min(p, n, _spf_table(max(n, 3))) is not None


def minimal_exponent(n: int, p: int) -> int | None:
    """t_min for a good length, None otherwise."""
    if n < 1 or math.gcd(n, p) != 1:
        return None
    return _t_min(p, n, _spf_table(max(n, 3)))


def _classify_range(args: tuple[int, int, int, int]) -> list[tuple[int, int]]:
    """(p, lo, hi, limit) -> [(n, t_min parity bit)] for counted n in [lo, hi)."""
    p, lo, hi, limit = args
    spf = _spf_table(limit)
    out = []
    for n in range(max(lo, p + 2), hi):
        if math.gcd(n, p) != 1:
            continue
        t = _t_min(p, n, spf)
        if t is not None:
            out.append((n, t & 1))
    return out


@dataclass(frozen=True)
class Checkpoint:
    x: int
    total: int
    even: int
    odd: int


@dataclass(frozen=True)
class DensityReport:
    p: int
    x_max: int
    checkpoints: tuple[Checkpoint, ...]
    good: tuple[int, ...] | None = None


def _default_checkpoints(x: int) -> list[int]:
    marks = []
    mark = 10
    while mark < x:
        marks.append(mark)
        mark *= 10
    marks.append(x)
    return marks


def density(p: int, x: int, *, checkpoints: list[int] | None = None,
            keep_detail: bool = False, workers: int | None = None,
            ) -> DensityReport:
    """Count good lengths up to x, tallied at each checkpoint."""
    if x < 2:
        raise ValueError("need x >= 2")
    if checkpoints is None:
        checkpoints = _default_checkpoints(x)
    else:
        checkpoints = sorted(set(checkpoints))
        if not checkpoints or checkpoints[0] < 2 or checkpoints[-1] > x:
            raise ValueError("checkpoints must lie in [2, x]")
    if workers is None:
        workers = thread_budget()

    spans: list[tuple[int, int, int, int]] = []
    chunk = max(1, (x + 1) // max(1, workers))
    lo = 2
    while lo <= x:
        hi = min(lo + chunk, x + 1)
        spans.append((p, lo, hi, x))
        lo = hi

    if workers > 1 and x >= 10_000 and len(spans) > 1:
        try:
            with ProcessPoolExecutor(max_workers=workers) as pool:
                parts = list(pool.map(_classify_range, spans))
        except OSError:            # no process support in this environment
            parts = [_classify_range(span) for span in spans]
    else:
        parts = [_classify_range(span) for span in spans]

    found = [pair for part in parts for pair in part]
    found.sort()
    ns = [n for n, _ in found]
    odd_running = [0]
    for _, bit in found:
        odd_running.append(odd_running[-1] + bit)

    marks = []
    for c in checkpoints:
        k = bisect_right(ns, c)
        odd = odd_running[k]
        marks.append(Checkpoint(c, k, k - odd, odd))
    return DensityReport(p, x, tuple(marks),
                         tuple(ns) if keep_detail else None)


def density_csv(report: DensityReport) -> str:
    lines = ["x,total,even,odd"]
    lines += [f"{c.x},{c.total},{c.even},{c.odd}" for c in report.checkpoints]
    return "\n".join(lines) + "\n"


def _jacobi(a: int, n: int) -> int:
    """Jacobi symbol (a/n) for odd n > 0, by the usual reciprocity walk."""
    if n <= 0 or n % 2 == 0:
        raise ValueError("Jacobi symbol needs odd positive n")
    a %= n
    sign = 1
    while a != 0:
        while a % 2 == 0:
            a //= 2
            if n % 8 in (3, 5):
                sign = -sign
        a, n = n, a
        if a % 4 == 3 and n % 4 == 3:
            sign = -sign
        a %= n
    return sign if n == 1 else 0


def qr_lower_bound_check(p: int, x: int) -> bool:
    """Every odd prime n <= x with p a quadratic non-residue must be a
    good length (for p = 2 those are exactly n = 3, 5 mod 8).  True when
    the sweep finds no counterexample."""
    if x < 10:
        raise ValueError("need x >= 10")
    spf = _spf_table(x)
    for n in range(3, x + 1, 2):
        if spf[n] != n or n % p == 0:
            continue
        non_residue = _jacobi(p % n, n) == -1
        if p == 2 and non_residue != (n % 8 in (3, 5)):
            return False
        if non_residue and not is_good_length(n, p):
            return False
    return True
