"""Finite fields GF(p^k) with explicit moduli, packed-int elements,
deterministic primitive roots of unity, and subfield embeddings.

An element sum(c_i eta^i), where eta is the class of X modulo the field's
modulus, is packed as the integer val = sum(c_i p^i).  For p == 2 a val is
simply the bit mask of the representing polynomial, and arithmetic runs on
the carry-less int kernel.  FieldSpec exposes the val-level operations
(vadd, vmul, ...) for inner loops; FieldElem wraps a val for operator
syntax.

Field specs are interned: two specs with the same (p, k, modulus) are the
same object.  The default modulus for GF(p^k) is the monic irreducible
of degree k whose packed val is smallest — e.g. X^2+X+1 for GF(4),
X^3+X+1 for GF(8), X^4+X+1 for GF(16).
"""

from __future__ import annotations

from . import _f2poly
from ._intfact import multiplicative_order, prime_factors

_TABLE_LIMIT = 1 << 16  # build log/exp tables up to this field size


# ---------------------------------------------------------------------------
# dense helpers over F_p, used only for modulus search / odd-p arithmetic

def _pm_trim(c: list[int]) -> list[int]:
    while c and c[-1] == 0:
        c.pop()
    return c


def _pm_mul(a: list[int], b: list[int], p: int) -> list[int]:
    if not a or not b:
        return []
    out = [0] * (len(a) + len(b) - 1)
    for i, ai in enumerate(a):
        if ai:
            for j, bj in enumerate(b):
                out[i + j] = (out[i + j] + ai * bj) % p
    return _pm_trim(out)


def _pm_mod(a: list[int], m: list[int], p: int) -> list[int]:
    a = a[:]
    inv_lead = pow(m[-1], p - 2, p)
    while len(a) >= len(m):
        c = a[-1] * inv_lead % p
        if c:
            off = len(a) - len(m)
            for i, mi in enumerate(m):
                a[off + i] = (a[off + i] - c * mi) % p
        a.pop()
        _pm_trim(a)
    return a


def _pm_gcd(a: list[int], b: list[int], p: int) -> list[int]:
    while b:
        a, b = b, _pm_mod(a, b, p)
    return a


def _pm_powmod(a: list[int], e: int, m: list[int], p: int) -> list[int]:
    r = [1]
    a = _pm_mod(a, m, p)
    while e:
        if e & 1:
            r = _pm_mod(_pm_mul(r, a, p), m, p)
        e >>= 1
        if e:
            a = _pm_mod(_pm_mul(a, a, p), m, p)
    return r


def _is_irreducible(coeffs: tuple[int, ...], p: int) -> bool:
    """Rabin's test for a monic polynomial of degree >= 1 over F_p."""
    k = len(coeffs) - 1
    if k == 1:
        return True
    if p == 2:
        f = sum(c << i for i, c in enumerate(coeffs))
        if coeffs[0] == 0:  # divisible by X
            return False
        x = 2
        r = x
        for _ in range(k):
            r = _f2poly.mod(_f2poly.sqr(r), f)
        if r != x:
            return False
        for d in prime_factors(k):
            r = x
            for _ in range(k // d):
                r = _f2poly.mod(_f2poly.sqr(r), f)
            if _f2poly.gcd(r ^ x, f) != 1:
                return False
        return True
    m = list(coeffs)
    x = [0, 1]
    if _pm_powmod(x, p**k, m, p) != _pm_mod(x, m, p):
        return False
    for d in prime_factors(k):
        r = _pm_powmod(x, p ** (k // d), m, p)
        diff = _pm_trim([(ri - xi) % p for ri, xi in
                         zip(r + [0] * 2, x + [0] * len(r))])
        if len(_pm_gcd(m, diff, p)) != 1:
            return False
    return True


def _default_modulus(p: int, k: int) -> tuple[int, ...]:
    if k == 1:
        return (0, 1)
    q = p**k
    for val in range(q, 2 * q):
        coeffs = []
        v = val
        for _ in range(k + 1):
            coeffs.append(v % p)
            v //= p
        if _is_irreducible(tuple(coeffs), p):
            return tuple(coeffs)
    raise AssertionError("no irreducible polynomial found")  # pragma: no cover


# ---------------------------------------------------------------------------


class FieldSpec:
    """Interned description of GF(p^k) plus val-level arithmetic."""

    _registry: dict[tuple, "FieldSpec"] = {}
    _default_cache: dict[tuple[int, int], tuple[int, ...]] = {}

    __slots__ = ("p", "k", "q", "modulus", "_mod_int", "_xrows",
                 "_exp", "_log", "_gen", "_zero", "_one", "_redtab")

    def __new__(cls, p: int, k: int, modulus: tuple[int, ...]):
        key = (p, k, modulus)
        spec = cls._registry.get(key)
        if spec is not None:
            return spec
        spec = object.__new__(cls)
        spec.p, spec.k, spec.q = p, k, p**k
        spec.modulus = modulus
        spec._mod_int = sum(c << i for i, c in enumerate(modulus)) if p == 2 else None
        spec._xrows = spec._make_xrows() if (p != 2 and k > 1) else None
        spec._exp = spec._log = None
        spec._gen = None
        spec._zero = spec._one = None
        spec._redtab = None
        cls._registry[key] = spec
        return spec

    # -- constructors ------------------------------------------------------

    @classmethod
    def prime(cls, p: int) -> "FieldSpec":
        return cls(p, 1, (0, 1))

    @classmethod
    def extension(cls, p: int, k: int) -> "FieldSpec":
        """GF(p^k) with the default (smallest-val) irreducible modulus."""
        if k == 1:
            return cls.prime(p)
        mod = cls._default_cache.get((p, k))
        if mod is None:
            mod = cls._default_cache.setdefault((p, k), _default_modulus(p, k))
        return cls(p, k, mod)

    @classmethod
    def with_modulus(cls, p: int, coeffs) -> "FieldSpec":
        coeffs = tuple(int(c) % p for c in coeffs)
        if len(coeffs) < 2 or coeffs[-1] != 1:
            raise ValueError("modulus must be monic of degree >= 1")
        if not _is_irreducible(coeffs, p):
            raise ValueError("modulus is reducible")
        return cls(p, len(coeffs) - 1, coeffs)

    def _make_xrows(self):
        # row j = coefficients of X^(k+j) reduced mod the modulus
        p, k = self.p, self.k
        rows = []
        cur = [(-c) % p for c in self.modulus[:-1]]  # X^k
        for _ in range(k - 1):
            rows.append(tuple(cur))
            top = cur[-1]
            cur = [top * (-self.modulus[0]) % p] + [
                (cur[i - 1] - top * self.modulus[i]) % p for i in range(1, k)
            ]
        return rows

    # -- val helpers -------------------------------------------------------

    def digits(self, val: int) -> tuple[int, ...]:
        if self.p == 2:
            return tuple((val >> i) & 1 for i in range(self.k))
        out = []
        for _ in range(self.k):
            out.append(val % self.p)
            val //= self.p
        return tuple(out)

    def pack(self, coeffs) -> int:
        v = 0
        for c in reversed(list(coeffs)):
            v = v * self.p + int(c) % self.p
        return v

    # -- arithmetic on vals ------------------------------------------------

    def vadd(self, x: int, y: int) -> int:
        if self.p == 2:
            return x ^ y
        if self.k == 1:
            return (x + y) % self.p
        p, v, mul = self.p, 0, 1
        while x or y:
            v += ((x + y) % p) * mul
            x //= p
            y //= p
            mul *= p
        return v

    def vneg(self, x: int) -> int:
        if self.p == 2:
            return x
        if self.k == 1:
            return (-x) % self.p
        p, v, mul = self.p, 0, 1
        while x:
            v += ((p - x % p) % p) * mul
            x //= p
            mul *= p
        return v

    def vsub(self, x: int, y: int) -> int:
        return self.vadd(x, self.vneg(y))

    def vscale(self, c: int, x: int) -> int:
        """Multiply by the scalar c in F_p."""
        c %= self.p
        if self.p == 2:
            return x if c else 0
        if c == 0:
            return 0
        if c == 1:
            return x
        p, v, mul = self.p, 0, 1
        while x:
            v += (c * (x % p)) % p * mul
            x //= p
            mul *= p
        return v

    def _build_redtab(self):
        # (byte << (k + 8j)) mod modulus: reduce products byte-at-a-time
        # instead of bit-at-a-time
        k, m = self.k, self._mod_int
        tabs = []
        for j in range((max(k - 2, 0)) // 8 + 1):
            tabs.append([_f2poly.mod(b << (k + 8 * j), m)
                         for b in range(256)])
        self._redtab = tabs
        return tabs

    def _f2_reduce(self, t: int) -> int:
        k = self.k
        hi = t >> k
        if not hi:
            return t
        tab = self._redtab
        if tab is None:
            tab = self._build_redtab()
        t &= (1 << k) - 1
        j = 0
        while hi:
            b = hi & 0xFF
            if b:
                t ^= tab[j][b]
            hi >>= 8
            j += 1
        return t

    def _vmul_direct(self, x: int, y: int) -> int:
        if self.p == 2:
            return self._f2_reduce(_f2poly.mul(x, y))
        if self.k == 1:
            return x * y % self.p
        p, k = self.p, self.k
        a, b = self.digits(x), self.digits(y)
        prod = [0] * (2 * k - 1)
        for i, ai in enumerate(a):
            if ai:
                for j, bj in enumerate(b):
                    prod[i + j] = (prod[i + j] + ai * bj) % p
        out = prod[:k]
        for j in range(k - 1):
            c = prod[k + j]
            if c:
                row = self._xrows[j]
                for i in range(k):
                    out[i] = (out[i] + c * row[i]) % p
        return self.pack(out)

    def vmul(self, x: int, y: int) -> int:
        if self._exp is None and self.q <= _TABLE_LIMIT:
            self._build_tables()
        if self._exp is not None:
            if x == 0 or y == 0:
                return 0
            return self._exp[self._log[x] + self._log[y]]
        return self._vmul_direct(x, y)

    def _vpow_direct(self, x: int, e: int) -> int:
        if e < 0:
            x = self.vinv(x)
            e = -e
        r = 1
        while e:
            if e & 1:
                r = self._vmul_direct(r, x)
            e >>= 1
            if e:
                x = self._vmul_direct(x, x)
        return r

    def vpow(self, x: int, e: int) -> int:
        if self._exp is None and self.q <= _TABLE_LIMIT:
            self._build_tables()
        if self._exp is not None and x:
            return self._exp[self._log[x] * e % (self.q - 1)]
        if x == 0:
            if e == 0:
                return 1
            if e < 0:
                raise ZeroDivisionError("inverse of zero")
            return 0
        return self._vpow_direct(x, e % (self.q - 1) if e >= self.q else e)

    def vinv(self, x: int) -> int:
        if x == 0:
            raise ZeroDivisionError("inverse of zero")
        if self._exp is None and self.q <= _TABLE_LIMIT:
            self._build_tables()
        if self._exp is not None:
            return self._exp[(self.q - 1) - self._log[x]]
        if self.p == 2:
            return _f2poly.invmod(x, self._mod_int)
        return self._vpow_direct(x, self.q - 2)

    def vfrob(self, x: int, i: int = 1) -> int:
        """x ** (p**i), the i-fold Frobenius."""
        i %= self.k
        if i == 0 or x == 0:
            return x
        if self._exp is None and self.q <= _TABLE_LIMIT:
            self._build_tables()
        if self._exp is not None:
            return self._exp[self._log[x] * pow(self.p, i, self.q - 1) % (self.q - 1)]
        if self.p == 2:
            for _ in range(i):
                x = _f2poly.mod(_f2poly.sqr(x), self._mod_int)
            return x
        return self._vpow_direct(x, pow(self.p, i, self.q - 1))

    def _build_tables(self):
        g = self.generator_val()
        exp = [0] * (2 * (self.q - 1) + 1)
        cur = 1
        for i in range(self.q - 1):
            exp[i] = exp[i + self.q - 1] = cur
            cur = self._vmul_direct(cur, g)
        exp[2 * (self.q - 1)] = 1
        log = [0] * self.q
        for i in range(self.q - 1):
            log[exp[i]] = i
        self._exp, self._log = exp, log

    def generator_val(self) -> int:
        """Smallest val generating the multiplicative group."""
        if self._gen is not None:
            return self._gen
        if self.q == 2:
            self._gen = 1
            return 1
        n = self.q - 1
        checks = [n // r for r in prime_factors(n)]
        for cand in range(2, self.q):
            if all(self._vpow_direct(cand, e) != 1 for e in checks):
                self._gen = cand
                return cand
        raise AssertionError("no generator found")  # pragma: no cover

    # -- element helpers ---------------------------------------------------

    @property
    def zero(self) -> "FieldElem":
        if self._zero is None:
            self._zero = FieldElem(self, 0)
        return self._zero

    @property
    def one(self) -> "FieldElem":
        if self._one is None:
            self._one = FieldElem(self, 1)
        return self._one

    @property
    def eta(self) -> "FieldElem":
        """The class of X modulo the field modulus (zero when k == 1)."""
        return FieldElem(self, self.p if self.k > 1 else 0)

    def scalar(self, c: int) -> "FieldElem":
        return FieldElem(self, c % self.p)

    def from_coeffs(self, coeffs) -> "FieldElem":
        return FieldElem(self, self.pack(coeffs))

    def elements(self):
        return (FieldElem(self, v) for v in range(self.q))

    def __repr__(self):
        if self.k == 1:
            return f"GF({self.p})"
        return f"GF({self.p}^{self.k})"

    def __reduce__(self):  # pickling re-interns
        return (FieldSpec, (self.p, self.k, self.modulus))


class FieldElem:
    """A field element: a FieldSpec plus a packed val."""

    __slots__ = ("spec", "val")

    def __init__(self, spec: FieldSpec, val: int):
        self.spec = spec
        self.val = val

    @property
    def coeffs(self) -> tuple[int, ...]:
        return self.spec.digits(self.val)

    def _coerce(self, other):
        if isinstance(other, FieldElem):
            if other.spec is not self.spec:
                raise ValueError("elements of different fields")
            return other.val
        if isinstance(other, int):
            return other % self.spec.p
        return NotImplemented

    def __add__(self, other):
        v = self._coerce(other)
        if v is NotImplemented:
            return v
        return FieldElem(self.spec, self.spec.vadd(self.val, v))

    __radd__ = __add__

    def __sub__(self, other):
        v = self._coerce(other)
        if v is NotImplemented:
            return v
        return FieldElem(self.spec, self.spec.vsub(self.val, v))

    def __rsub__(self, other):
        v = self._coerce(other)
        if v is NotImplemented:
            return v
        return FieldElem(self.spec, self.spec.vsub(v, self.val))

    def __neg__(self):
        return FieldElem(self.spec, self.spec.vneg(self.val))

    def __mul__(self, other):
        v = self._coerce(other)
        if v is NotImplemented:
            return v
        return FieldElem(self.spec, self.spec.vmul(self.val, v))

    __rmul__ = __mul__

    def __truediv__(self, other):
        v = self._coerce(other)
        if v is NotImplemented:
            return v
        return FieldElem(self.spec, self.spec.vmul(self.val, self.spec.vinv(v)))

    def __pow__(self, e: int):
        return FieldElem(self.spec, self.spec.vpow(self.val, e))

    def inverse(self):
        return FieldElem(self.spec, self.spec.vinv(self.val))

    def frobenius(self, i: int = 1):
        return FieldElem(self.spec, self.spec.vfrob(self.val, i))

    def __bool__(self):
        return self.val != 0

    def __eq__(self, other):
        if isinstance(other, FieldElem):
            return self.spec is other.spec and self.val == other.val
        if isinstance(other, int):
            return self.val == other % self.spec.p and self.val < self.spec.p
        return NotImplemented

    def __hash__(self):
        return hash((id(self.spec), self.val))

    def __repr__(self):
        return f"{self.spec!r}[{self.val}]"


# ---------------------------------------------------------------------------


def primitive_nth_root(n: int, base: FieldSpec) -> tuple[FieldSpec, FieldElem]:
    """Smallest-degree extension of `base` containing an element of
    multiplicative order exactly n, together with a deterministic such
    element (a fixed power of the field's smallest generator)."""
    if n == 1:
        return base, base.one
    if n % base.p == 0:
        raise ValueError(f"no primitive {n}-th root in characteristic {base.p}")
    m = multiplicative_order(base.q, n)
    spec = base if m == 1 else FieldSpec.extension(base.p, base.k * m)
    beta = spec.vpow(spec.generator_val(), (spec.q - 1) // n)
    return spec, FieldElem(spec, beta)


class SubfieldEmbedding:
    """Ring embedding GF(p^k) -> GF(p^K) for k | K.

    The image of the small field's X-class is the root of the small
    modulus with the smallest packed val inside the big field; embed()
    and project() convert vals in both directions, project() raising
    ValueError off the subfield.
    """

    __slots__ = ("small", "big", "root", "_rows", "_pinv", "_checks",
                 "_pinv_masks", "_check_masks")

    _cache: dict[tuple, "SubfieldEmbedding"] = {}

    def __new__(cls, small: FieldSpec, big: FieldSpec):
        key = (id(small), id(big))
        emb = cls._cache.get(key)
        if emb is not None:
            return emb
        if small.p != big.p or big.k % small.k != 0:
            raise ValueError(f"{small!r} does not embed in {big!r}")
        emb = object.__new__(cls)
        emb.small, emb.big = small, big
        emb._build()
        cls._cache[key] = emb
        return emb

    def _build(self):
        small, big = self.small, self.big
        p, k, K = small.p, small.k, big.k
        if small is big:
            self.root = big.p if k > 1 else 0
            self._rows = None
            return
        if k == 1:
            self.root = 0
            self._rows = None
            return
        # the small modulus splits into one Frobenius orbit of k roots
        # over the big field; the canonical image of the X-class is the
        # orbit member with the smallest packed val
        one = _poly_root(list(small.modulus), big)
        self.root = root = min(big.vfrob(one, i) for i in range(k))
        rows = [1]
        for _ in range(k - 1):
            rows.append(big.vmul(rows[-1], root))
        self._rows = rows
        # precompute projection: RREF of [E | I_K] over F_p
        E = [[0] * k for _ in range(K)]
        for j, rv in enumerate(rows):
            for i, d in enumerate(big.digits(rv)):
                E[i][j] = d
        aug = [E[i] + [1 if j == i else 0 for j in range(K)] for i in range(K)]
        pinv, checks = _rref_split(aug, k, K, p)
        self._pinv, self._checks = pinv, checks
        if p == 2:
            # digit vectors are bit vectors: row-dot-val becomes a
            # masked popcount parity
            pack = lambda row: sum(bit << i for i, bit in enumerate(row))
            self._pinv_masks = [pack(row) for row in pinv]
            self._check_masks = [pack(row) for row in checks]
        else:
            self._pinv_masks = self._check_masks = None

    def embed(self, val: int) -> int:
        if self._rows is None:
            return val
        big, small = self.big, self.small
        if big.p == 2:
            out = 0
            rows = self._rows
            while val:
                low = val & -val
                out ^= rows[low.bit_length() - 1]
                val ^= low
            return out
        out = 0
        for c, rv in zip(small.digits(val), self._rows):
            if c:
                out = big.vadd(out, big.vscale(c, rv))
        return out

    def project(self, val: int) -> int:
        if self._rows is None:
            if self.small is not self.big and val >= self.small.p:
                raise ValueError(f"val {val} is not in {self.small!r}")
            return val
        p = self.big.p
        if p == 2:
            for mask in self._check_masks:
                if (mask & val).bit_count() & 1:
                    raise ValueError(
                        f"val {val} is not in the image of {self.small!r}")
            out = 0
            for i, mask in enumerate(self._pinv_masks):
                if (mask & val).bit_count() & 1:
                    out |= 1 << i
            return out
        y = self.big.digits(val)
        for row in self._checks:
            if sum(r * d for r, d in zip(row, y)) % p:
                raise ValueError(f"val {val} is not in the image of {self.small!r}")
        coeffs = [sum(r * d for r, d in zip(row, y)) % p for row in self._pinv]
        return self.small.pack(coeffs)


# --- val-list polynomial arithmetic over a FieldSpec, used only for the
# root search in SubfieldEmbedding._build


def _pf_trim(a):
    while a and a[-1] == 0:
        a.pop()
    return a


def _pf_add(a, b, big):
    if len(a) < len(b):
        a, b = b, a
    out = list(a)
    for i, v in enumerate(b):
        out[i] = big.vadd(out[i], v)
    return _pf_trim(out)


def _pf_mul(a, b, big):
    if not a or not b:
        return []
    out = [0] * (len(a) + len(b) - 1)
    for i, av in enumerate(a):
        if av:
            for j, bv in enumerate(b):
                if bv:
                    out[i + j] = big.vadd(out[i + j], big.vmul(av, bv))
    return _pf_trim(out)


def _pf_divmod(a, b, big):
    a = _pf_trim(list(a))
    if len(b) == 1:
        inv = big.vinv(b[0])
        return [big.vmul(c, inv) for c in a], []
    inv = big.vinv(b[-1])
    db = len(b) - 1
    q = [0] * max(len(a) - db, 0)
    while len(a) > db:
        c = big.vmul(a[-1], inv)
        off = len(a) - 1 - db
        q[off] = c
        for i, bv in enumerate(b):
            if bv:
                a[off + i] = big.vsub(a[off + i], big.vmul(c, bv))
        _pf_trim(a)
    return q, a


def _pf_powmod(a, e, f, big):
    out = [1]
    a = _pf_divmod(a, f, big)[1]
    while e:
        if e & 1:
            out = _pf_divmod(_pf_mul(out, a, big), f, big)[1]
        a = _pf_divmod(_pf_mul(a, a, big), f, big)[1]
        e >>= 1
    return out


def _pf_gcd(a, b, big):
    a, b = _pf_trim(list(a)), _pf_trim(list(b))
    while b:
        a, b = b, _pf_divmod(a, b, big)[1]
    if a and a[-1] != 1:
        inv = big.vinv(a[-1])
        a = [big.vmul(c, inv) for c in a]
    return a


def _pf_split(f, big, salt):
    """One deterministic splitting attempt on f (monic, squarefree,
    fully split over `big`); returns a proper monic factor or None."""
    c = big.vpow(big.generator_val(), salt) if salt else 1
    if big.p == 2:
        # the absolute trace of c*X separates roots by trace value
        acc = [0, c]
        tr = acc
        for _ in range(big.k - 1):
            acc = _pf_divmod(_pf_mul(acc, acc, big), f, big)[1]
            tr = _pf_add(tr, acc, big)
        g = _pf_gcd(f, tr, big)
    else:
        # Euler criterion on X + c separates residues from non-residues
        w = _pf_powmod([c, 1], (big.q - 1) // 2, f, big)
        g = _pf_gcd(f, _pf_add(w, [big.vneg(1)], big), big)
    if 0 < len(g) - 1 < len(f) - 1:
        return g
    return None


def _solve_artin_schreier(u, big):
    """y with y^2 + y = u over a characteristic-2 field, solved as the
    F_2-linear system it is (bit-mask Gaussian elimination)."""
    pivots = []
    for i in range(big.k):
        col = big.vadd(big.vmul(1 << i, 1 << i), 1 << i)
        mask = 1 << i
        for pb, pc, pm in pivots:
            if col >> pb & 1:
                col ^= pc
                mask ^= pm
        if col:
            pivots.append((col.bit_length() - 1, col, mask))
    combo = 0
    for pb, pc, pm in pivots:
        if u >> pb & 1:
            u ^= pc
            combo ^= pm
    if u:
        raise RuntimeError("y^2 + y = u has no solution in the field")
    return combo


def _quad_root_f2(f, big):
    # monic X^2 + b X + c over characteristic 2
    c, b = f[0], f[1]
    if b == 0:
        return big.vfrob(c, big.k - 1)        # plain square root
    binv = big.vinv(b)
    u = big.vmul(c, big.vmul(binv, binv))
    return big.vmul(b, _solve_artin_schreier(u, big))


def _poly_root(f, big):
    """One root in `big` of the monic prime-field polynomial f, which
    must split completely; deterministic in the salt walk."""
    f = [c % big.p for c in f]
    salt = 0
    while len(f) - 1 > 1:
        if big.p == 2 and len(f) - 1 == 2:
            return _quad_root_f2(f, big)
        g = None
        while g is None:
            if salt > 64 * big.k + 256:
                raise RuntimeError(f"root search stalled over {big!r}")
            g = _pf_split(f, big, salt)
            salt += 1
        q, r = _pf_divmod(f, g, big)
        assert not r
        f = g if len(g) <= len(q) else q
    return big.vneg(f[0])


def _rref_split(aug, k, K, p):
    """Row-reduce [E | I]; return (first k rows' right parts, remaining
    rows' right parts) giving the projection map and membership checks."""
    r = 0
    for c in range(k):
        piv = next(i for i in range(r, K) if aug[i][c] % p)
        aug[r], aug[piv] = aug[piv], aug[r]
        inv = pow(aug[r][c], p - 2, p)
        aug[r] = [x * inv % p for x in aug[r]]
        for i in range(K):
            if i != r and aug[i][c]:
                f = aug[i][c]
                aug[i] = [(x - f * y) % p for x, y in zip(aug[i], aug[r])]
        r += 1
    pinv = [row[k:] for row in aug[:k]]
    checks = [row[k:] for row in aug[k:]]
    return pinv, checks
