"""Bit-packed polynomials over GF(2).

A polynomial sum(c_i X^i) with c_i in {0,1} is stored as the int
sum(c_i 2^i): XOR is addition, shifting is multiplication by X.  Plain
functions on ints, so hot loops stay allocation-free.
"""


def degree(a: int) -> int:
    """Degree of a, with degree(0) == -1."""
    return a.bit_length() - 1


def mul(a: int, b: int) -> int:
    """Carry-less product."""
    if a == 0 or b == 0:
        return 0
    if b.bit_count() > a.bit_count():
        a, b = b, a
    r = 0
    while b:
        low = b & -b
        r ^= a * low  # low is a power of two: plain shift
        b ^= low
    return r


def sqr(a: int) -> int:
    # squaring is Frobenius: spread bits to even positions
    if a == 0:
        return 0
    return int("0".join(bin(a)[2:]), 2)


def divmod_(a: int, m: int) -> tuple[int, int]:
    if m == 0:
        raise ZeroDivisionError("division by zero polynomial")
    dm = m.bit_length()
    q = 0
    while a.bit_length() >= dm:
        shift = a.bit_length() - dm
        q |= 1 << shift
        a ^= m << shift
    return q, a


def mod(a: int, m: int) -> int:
    dm = m.bit_length()
    while a.bit_length() >= dm:
        a ^= m << (a.bit_length() - dm)
    return a


def mulmod(a: int, b: int, m: int) -> int:
    return mod(mul(a, b), m)


def powmod(a: int, e: int, m: int) -> int:
    r = 1 % m if m.bit_length() == 1 else 1
    a = mod(a, m)
    while e:
        if e & 1:
            r = mulmod(r, a, m)
        e >>= 1
        if e:
            a = mod(sqr(a), m)
    return r


def gcd(a: int, b: int) -> int:
    while b:
        a, b = b, mod(a, b)
    return a


def invmod(a: int, m: int) -> int:
    """Inverse of a modulo m; raises ValueError if gcd(a, m) != 1."""
    r0, r1 = m, mod(a, m)
    s0, s1 = 0, 1
    while r1:
        q, r = divmod_(r0, r1)
        r0, r1 = r1, r
        s0, s1 = s1, s0 ^ mul(q, s1)
    if r0 != 1:
        raise ValueError("polynomial is not invertible modulo the given modulus")
    return mod(s0, m)
