"""Integer primality, factoring and multiplicative orders.

Deterministic: Miller-Rabin with the fixed witness set that is exact
below 3.3e24 (far beyond any group order arising here), and Pollard rho
with a fixed parameter schedule.
"""

from __future__ import annotations

import math

_MR_WITNESSES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37)


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    for p in (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37):
        if n % p == 0:
            return n == p
    d, s = n - 1, 0
    while d % 2 == 0:
        d //= 2
        s += 1
    for a in _MR_WITNESSES:
        x = pow(a, d, n)
        if x in (1, n - 1):
            continue
        for _ in range(s - 1):
            x = x * x % n
            if x == n - 1:
                break
        else:
            return False
    return True


def _rho(n: int) -> int:
    # Brent's cycle variant; n must be odd composite, not a prime power handled upstream
    if n % 2 == 0:
        return 2
    for c in range(1, 100):
        x, y, d = 2, 2, 1
        f = lambda v: (v * v + c) % n
        while d == 1:
            x = f(x)
            y = f(f(y))
            d = math.gcd(abs(x - y), n)
        if d != n:
            return d
    raise ArithmeticError(f"rho failed on {n}")  # pragma: no cover


def factorize(n: int) -> dict[int, int]:
    """Prime factorisation as {prime: exponent}."""
    out: dict[int, int] = {}
    for p in (2, 3, 5, 7, 11, 13):
        while n % p == 0:
            out[p] = out.get(p, 0) + 1
            n //= p
    stack = [n] if n > 1 else []
    while stack:
        m = stack.pop()
        if m == 1:
            continue
        if is_prime(m):
            out[m] = out.get(m, 0) + 1
            continue
        d = _rho(m)
        stack.append(d)
        stack.append(m // d)
    return out


def prime_factors(n: int) -> tuple[int, ...]:
    return tuple(sorted(factorize(n)))


def multiplicative_order(a: int, n: int) -> int:
    """Order of a in (Z/n)*; raises ValueError unless gcd(a, n) == 1."""
    a %= n
    if math.gcd(a, n) != 1:
        raise ValueError(f"{a} is not a unit modulo {n}")
    if n == 1:
        return 1
    # start from a multiple of the order (the Carmichael bound is not
    # needed: phi works) and strip primes while the power stays 1
    e = _phi(n)
    for p in prime_factors(e):
        while e % p == 0 and pow(a, e // p, n) == 1:
            e //= p
    return e


def _phi(n: int) -> int:
    r = 1
    for p, k in factorize(n).items():
        r *= (p - 1) * p ** (k - 1)
    return r
