"""Polynomials over a FieldSpec and the cyclic ring F[X]/(X^n - 1).

Poly is an immutable dense polynomial (tuple of packed coefficient vals).
Module functions cover the ring operations the code constructions need:
cyclic multiplication, the substitution X -> X^(-1), coefficient-wise
Frobenius, cyclotomic cosets, and the factorisation of X^n - 1 over any
field of characteristic coprime to n via a primitive n-th root of unity.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from . import _f2poly as _f2
from ._intfact import multiplicative_order  # noqa: F401  (re-exported)
from .galois import FieldElem, FieldSpec, SubfieldEmbedding, primitive_nth_root

_NEG_INF = float("-inf")


def _pack_stride(vals, k: int) -> int:
    # characteristic-2 packed vals are k-bit ints; one big int per poly
    bits = 0
    shift = 0
    for v in vals:
        if v:
            bits |= v << shift
        shift += k
    return bits


def _unpack_stride(spec, bits: int, k: int) -> "Poly":
    mask = (1 << k) - 1
    out = []
    while bits:
        out.append(bits & mask)
        bits >>= k
    return Poly(spec, out)


_BASIS_PRODUCTS: dict[int, list[list[int]]] = {}


def _basis_products(s) -> list[list[int]]:
    tbl = _BASIS_PRODUCTS.get(id(s))
    if tbl is None:
        tbl = [[s.vmul(1 << j, 1 << l) for l in range(s.k)]
               for j in range(s.k)]
        _BASIS_PRODUCTS[id(s)] = tbl
    return tbl


def _mul_planes(s, a, b):
    """Characteristic-2 product for extension coefficients: split both
    operands into k bit-planes over the F_2 power basis, take the k^2
    carry-less plane products, and recombine through the basis product
    table."""
    k = s.k
    pa, pb = [0] * k, [0] * k
    for plane, vals in ((pa, a), (pb, b)):
        for i, v in enumerate(vals):
            j = 0
            while v:
                if v & 1:
                    plane[j] |= 1 << i
                v >>= 1
                j += 1
    table = _basis_products(s)
    planes = [0] * k
    for j in range(k):
        if not pa[j]:
            continue
        for l in range(k):
            if not pb[l]:
                continue
            prod = _f2.mul(pa[j], pb[l])
            w = table[j][l]
            m = 0
            while w:
                if w & 1:
                    planes[m] ^= prod
                w >>= 1
                m += 1
    out = [0] * (len(a) + len(b) - 1)
    for m, bits in enumerate(planes):
        i = 0
        while bits:
            if bits & 1:
                out[i] |= 1 << m
            bits >>= 1
            i += 1
    return Poly(s, out)


class Poly:
    """Dense polynomial over a fixed field, coefficients as packed vals."""

    __slots__ = ("spec", "vals")

    def __init__(self, spec: FieldSpec, vals):
        vals = list(vals)
        while vals and vals[-1] == 0:
            vals.pop()
        self.spec = spec
        self.vals = tuple(vals)

    # -- constructors ------------------------------------------------------

    @classmethod
    def zero(cls, spec):
        return cls(spec, ())

    @classmethod
    def one(cls, spec):
        return cls(spec, (1,))

    @classmethod
    def x(cls, spec):
        return cls(spec, (0, 1))

    @classmethod
    def from_coeffs(cls, spec, coeffs):
        """Coefficients given as ints (reduced mod p) or FieldElems."""
        vals = []
        for c in coeffs:
            if isinstance(c, FieldElem):
                if c.spec is not spec:
                    raise ValueError("coefficient from a different field")
                vals.append(c.val)
            else:
                vals.append(int(c) % spec.p)
        return cls(spec, vals)

    @classmethod
    def xn_minus_1(cls, spec, n):
        vals = [0] * (n + 1)
        vals[0] = spec.vneg(1)
        vals[n] = 1
        return cls(spec, vals)

    # -- basics ------------------------------------------------------------

    @property
    def degree(self):
        return len(self.vals) - 1 if self.vals else _NEG_INF

    @property
    def is_zero(self):
        return not self.vals

    def coeff(self, i: int) -> int:
        return self.vals[i] if 0 <= i < len(self.vals) else 0

    def leading(self) -> int:
        if not self.vals:
            raise ValueError("zero polynomial has no leading coefficient")
        return self.vals[-1]

    @property
    def is_monic(self):
        return bool(self.vals) and self.vals[-1] == 1

    def __eq__(self, other):
        return (isinstance(other, Poly) and self.spec is other.spec
                and self.vals == other.vals)

    def __hash__(self):
        return hash((id(self.spec), self.vals))

    def __repr__(self):
        if not self.vals:
            return f"Poly({self.spec!r}, 0)"
        terms = []
        for i, v in enumerate(self.vals):
            if v:
                terms.append(f"{v}*X^{i}" if i else f"{v}")
        return f"Poly({self.spec!r}, {' + '.join(terms)})"

    def _check(self, other):
        if not isinstance(other, Poly):
            raise TypeError(f"expected Poly, got {type(other).__name__}")
        if other.spec is not self.spec:
            raise ValueError("polynomials over different fields")

    # -- ring operations ---------------------------------------------------

    def __add__(self, other):
        self._check(other)
        s = self.spec
        a, b = self.vals, other.vals
        if s.p == 2:
            return _unpack_stride(
                s, _pack_stride(a, s.k) ^ _pack_stride(b, s.k), s.k)
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, v in enumerate(b):
            out[i] = s.vadd(out[i], v)
        return Poly(s, out)

    def __neg__(self):
        s = self.spec
        return Poly(s, (s.vneg(v) for v in self.vals))

    def __sub__(self, other):
        self._check(other)
        s = self.spec
        a, b = self.vals, other.vals
        if s.p == 2:
            return _unpack_stride(
                s, _pack_stride(a, s.k) ^ _pack_stride(b, s.k), s.k)
        out = [s.vsub(self.coeff(i), other.coeff(i))
               for i in range(max(len(a), len(b)))]
        return Poly(s, out)

    def __mul__(self, other):
        if isinstance(other, (int, FieldElem)):
            v = other.val if isinstance(other, FieldElem) else other % self.spec.p
            s = self.spec
            return Poly(s, (s.vmul(v, c) for c in self.vals))
        self._check(other)
        s = self.spec
        a, b = self.vals, other.vals
        if not a or not b:
            return Poly.zero(s)
        if s.p == 2:
            if s.k == 1:
                return _unpack_stride(
                    s, _f2.mul(_pack_stride(a, 1), _pack_stride(b, 1)), 1)
            if len(a) + len(b) >= 24:     # plane setup beats the double
                return _mul_planes(s, a, b)   # loop only past this size
        return self._mul_generic(other)

    def _mul_generic(self, other):
        s = self.spec
        a, b = self.vals, other.vals
        out = [0] * (len(a) + len(b) - 1)
        vmul, vadd = s.vmul, s.vadd
        for i, ai in enumerate(a):
            if ai:
                for j, bj in enumerate(b):
                    if bj:
                        out[i + j] = vadd(out[i + j], vmul(ai, bj))
        return Poly(s, out)

    __rmul__ = __mul__

    def __divmod__(self, other):
        self._check(other)
        if other.is_zero:
            raise ZeroDivisionError("division by zero polynomial")
        s = self.spec
        if s.p == 2 and s.k == 1:
            q, r = _f2.divmod_(_pack_stride(self.vals, 1),
                               _pack_stride(other.vals, 1))
            return _unpack_stride(s, q, 1), _unpack_stride(s, r, 1)
        return self._divmod_generic(other)

    def _divmod_generic(self, other):
        s = self.spec
        rem = list(self.vals)
        dm = len(other.vals) - 1
        inv_lead = s.vinv(other.vals[-1])
        quo = [0] * max(len(rem) - dm, 0)
        while len(rem) - 1 >= dm and rem:
            c = s.vmul(rem[-1], inv_lead)
            off = len(rem) - 1 - dm
            quo[off] = c
            for i, mv in enumerate(other.vals):
                rem[off + i] = s.vsub(rem[off + i], s.vmul(c, mv))
            while rem and rem[-1] == 0:
                rem.pop()
        return Poly(s, quo), Poly(s, rem)

    def __mod__(self, other):
        return divmod(self, other)[1]

    def __floordiv__(self, other):
        return divmod(self, other)[0]

    # -- structure maps ----------------------------------------------------

    def monic(self):
        if self.is_zero or self.is_monic:
            return self
        s = self.spec
        inv = s.vinv(self.vals[-1])
        return Poly(s, (s.vmul(inv, v) for v in self.vals))

    def reciprocal(self):
        """X^deg * p(1/X): the plain coefficient reversal."""
        return Poly(self.spec, reversed(self.vals))

    def shift(self, i: int):
        return Poly(self.spec, (0,) * i + self.vals)

    def frobenius(self, i: int = 1):
        """Apply x -> x^(p^i) to every coefficient."""
        s = self.spec
        return Poly(s, (s.vfrob(v, i) for v in self.vals))

    def map_coeffs(self, fn, spec: FieldSpec | None = None):
        return Poly(spec or self.spec, (fn(v) for v in self.vals))

    def evaluate(self, x) -> int:
        """Horner evaluation; accepts a val or a FieldElem of this field,
        returns a val."""
        if isinstance(x, FieldElem):
            if x.spec is not self.spec:
                raise ValueError("evaluation point from a different field")
            x = x.val
        s = self.spec
        acc = 0
        for c in reversed(self.vals):
            acc = s.vadd(s.vmul(acc, x), c)
        return acc

    def to_int_coeffs(self) -> tuple[int, ...]:
        """Coefficients as plain ints; requires all of them scalar."""
        if any(v >= self.spec.p for v in self.vals):
            raise ValueError("polynomial has non-scalar coefficients")
        return self.vals


# ---------------------------------------------------------------------------
# ring F[X]/(X^n - 1)


def cyclic_mul(a: Poly, b: Poly, n: int) -> Poly:
    """a*b mod X^n - 1, folding exponents mod n."""
    a._check(b)
    s = a.spec
    out = [0] * n
    vmul, vadd = s.vmul, s.vadd
    for i, ai in enumerate(a.vals):
        if ai:
            for j, bj in enumerate(b.vals):
                if bj:
                    k = (i + j) % n
                    out[k] = vadd(out[k], vmul(ai, bj))
    return Poly(s, out)


def reciprocal_transform(a: Poly, n: int) -> Poly:
    """a(X^(-1)) in F[X]/(X^n - 1): coefficient at j moves to -j mod n."""
    if not a.is_zero and a.degree >= n:
        a = a % Poly.xn_minus_1(a.spec, n)
    out = [0] * n
    for j, v in enumerate(a.vals):
        out[(-j) % n] = v
    return Poly(a.spec, out)


def poly_gcd(a: Poly, b: Poly) -> Poly:
    a._check(b)
    while not b.is_zero:
        a, b = b, a % b
    return a.monic() if not a.is_zero else a


def inverse_mod(a: Poly, m: Poly) -> Poly:
    """Inverse of a modulo m; ValueError when gcd(a, m) != 1."""
    a._check(m)
    s = a.spec
    r0, r1 = m, a % m
    s0, s1 = Poly.zero(s), Poly.one(s)
    while not r1.is_zero:
        q, r = divmod(r0, r1)
        r0, r1 = r1, r
        s0, s1 = s1, s0 - q * s1
    if r0.degree != 0:
        raise ValueError("polynomial is not invertible modulo the given modulus")
    inv = s.vinv(r0.vals[0])
    return Poly(s, (s.vmul(inv, v) for v in s0.vals)) % m


def crt_combine(pairs) -> Poly:
    """Unique solution mod the product of the (pairwise coprime) moduli.

    pairs: iterable of (residue, modulus) Polys over one field.
    """
    pairs = list(pairs)
    if not pairs:
        raise ValueError("need at least one congruence")
    r, m = pairs[0]
    r = r % m
    for r2, m2 in pairs[1:]:
        u = inverse_mod(m, m2)
        diff = (r2 - r) % m2
        r = r + m * ((u * diff) % m2)
        m = m * m2
        r = r % m
    return r


def frobenius_poly(a: Poly, i: int = 1) -> Poly:
    return a.frobenius(i)


def build_from_roots(spec: FieldSpec, root_vals) -> Poly:
    """Monic product of (X - r) over the given root vals."""
    vals = [1]
    for r in root_vals:
        nr = spec.vneg(r)
        nxt = [0] * (len(vals) + 1)
        for i, v in enumerate(vals):
            if v:
                nxt[i + 1] = spec.vadd(nxt[i + 1], v)
                nxt[i] = spec.vadd(nxt[i], spec.vmul(nr, v))
        vals = nxt
    return Poly(spec, vals)


# ---------------------------------------------------------------------------
# cyclotomic structure


def cyclotomic_cosets(n: int, q: int) -> tuple[tuple[int, ...], ...]:
    """Orbits of multiplication by q on Z/n, each sorted ascending, the
    list sorted by smallest member.  Requires gcd(q, n) == 1."""
    import math

    if math.gcd(q, n) != 1:
        raise ValueError(f"{q} is not invertible modulo {n}")
    seen = [False] * n
    out = []
    for start in range(n):
        if seen[start]:
            continue
        orbit = []
        cur = start
        while not seen[cur]:
            seen[cur] = True
            orbit.append(cur)
            cur = cur * q % n
        out.append(tuple(sorted(orbit)))
    return tuple(out)


@dataclass(frozen=True)
class CyclotomicFactors:
    """Factorisation of X^n - 1 over `spec`, tied to a primitive root.

    Each irreducible factor is paired with the cyclotomic coset of the
    exponents of its roots: factor = prod_{i in coset} (X - beta^i).
    """

    n: int
    spec: FieldSpec
    splitting: FieldSpec
    beta: FieldElem
    pairs: tuple[tuple[Poly, tuple[int, ...]], ...]
    by_label: dict = field(compare=False, repr=False, default=None)

    def __post_init__(self):
        object.__setattr__(
            self, "by_label", {c[0]: (f, c) for f, c in self.pairs})

    def labels(self) -> tuple[int, ...]:
        return tuple(c[0] for _, c in self.pairs)

    def factor(self, label: int) -> Poly:
        return self.by_label[label][0]

    def coset(self, label: int) -> tuple[int, ...]:
        return self.by_label[label][1]

    def verify_product(self) -> bool:
        prod = Poly.one(self.spec)
        for f, _ in self.pairs:
            prod = prod * f
        return prod == Poly.xn_minus_1(self.spec, self.n)


def factorize_xn_minus_1(n: int, spec: FieldSpec, *, splitting=None,
                         beta=None) -> CyclotomicFactors:
    """Irreducible factors of X^n - 1 over `spec` via a primitive n-th
    root of unity.  Pass (splitting, beta) to share one root between the
    factorisations over several base fields of a common splitting field."""
    if n % spec.p == 0:
        raise ValueError(f"length {n} not coprime to characteristic {spec.p}")
    if beta is None:
        splitting, beta = primitive_nth_root(n, spec)
    elif splitting is None or beta.spec is not splitting:
        raise ValueError("beta must live in the given splitting field")
    emb = SubfieldEmbedding(spec, splitting)
    cosets = cyclotomic_cosets(n, spec.q % n if n > 1 else 1)
    # beta powers once
    pows = [1] * n
    for i in range(1, n):
        pows[i] = splitting.vmul(pows[i - 1], beta.val)
    pairs = []
    for coset in cosets:
        big = build_from_roots(splitting, (pows[i] for i in coset))
        f = big.map_coeffs(emb.project, spec)
        pairs.append((f, coset))
    return CyclotomicFactors(n, spec, splitting, beta, tuple(pairs))
