"""Symplectic-model verification: inner products, joint weight, isotropy,
cyclicity predicates, and exhaustive centraliser sweeps at small sizes.

The stabiliser space of a code is S = {(w*g, w*f) : w in F_p[X]/(X^n-1)}
with f = a*g; its centraliser C(S) is parameterized by
(u, a*u + v*(X^n-1)/g) with u free and deg v < deg g.  The code distance
is the least joint weight in C(S) \\ S, and delta-purity says no nonzero
element of C(S) weighs less than the BCH bound.
"""

from __future__ import annotations

import itertools
import random
from dataclasses import dataclass
from typing import Iterator, NamedTuple

from .codegen import FrobeniusCode
from .polyring import Poly, cyclic_mul, poly_gcd, reciprocal_transform


class SympPair(NamedTuple):
    """A position/phase error pair (u, v), both length-n vectors over F_p."""

    u: tuple[int, ...]
    v: tuple[int, ...]

    @classmethod
    def make(cls, u, v) -> "SympPair":
        u, v = tuple(int(x) for x in u), tuple(int(x) for x in v)
        if len(u) != len(v):
            raise ValueError(f"length mismatch: {len(u)} vs {len(v)}")
        return cls(u, v)

    @property
    def n(self) -> int:
        return len(self.u)


def symp_inner(x: SympPair, y: SympPair, p: int) -> int:
    """u_x . v_y - v_x . u_y reduced mod p."""
    if x.n != y.n:
        raise ValueError(f"length mismatch: {x.n} vs {y.n}")
    acc = sum(a * d - b * c for a, b, c, d in zip(x.u, x.v, y.u, y.v))
    return acc % p


def joint_weight(x: SympPair) -> int:
    return sum(1 for a, b in zip(x.u, x.v) if a or b)


def right_shift(vec: tuple[int, ...], k: int = 1) -> tuple[int, ...]:
    """(u_1,...,u_n) -> (u_n, u_1, ..., u_[n-1]), applied k times."""
    n = len(vec)
    k %= n
    return vec[n - k:] + vec[:n - k]


def poly_to_vec(a: Poly, n: int) -> tuple[int, ...]:
    vals = a.vals
    if len(vals) > n:
        raise ValueError("degree too large for the vector length")
    if a.spec.k != 1:
        raise ValueError("prime-field polynomials only")
    return tuple(vals) + (0,) * (n - len(vals))


def vec_to_poly(spec, vec) -> Poly:
    return Poly.from_coeffs(spec, list(vec))


# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class IsotropicSpace:
    """The uniquely cyclic space generated by the pair (g, f) in
    F_p[X]/(X^n-1) x F_p[X]/(X^n-1)."""

    n: int
    p: int
    g: Poly
    f: Poly
    a: Poly | None = None     # multiplier with f = a*g, when known

    @classmethod
    def from_code(cls, code: FrobeniusCode) -> "IsotropicSpace":
        return cls(code.n, code.p, code.g, code.f, code.a)

    @classmethod
    def from_generator(cls, g: Poly, f: Poly, n: int) -> "IsotropicSpace":
        if g.spec.k != 1 or f.spec is not g.spec:
            raise ValueError("generator pair must share a prime field")
        xn1 = Poly.xn_minus_1(g.spec, n)
        if (g % xn1).is_zero:
            # the zero space: every w*g vanishes, so w*f must too
            if not (f % xn1).is_zero:
                raise ValueError("zero generator with a nonzero partner")
        elif not (xn1 % g).is_zero:
            raise ValueError(f"generator must divide X^{n} - 1")
        return cls(n, g.spec.p, g, f)

    @property
    def dimension(self) -> int:
        """log_p of the cardinality: n - deg g (0 for the zero space)."""
        if self.g.is_zero:
            return 0
        return self.n - int(self.g.degree)

    def basis(self) -> list[SympPair]:
        """Simultaneous shifts (X^i g, X^i f) spanning the space."""
        out = []
        for i in range(self.dimension):
            gx = cyclic_mul(self.g.shift(i), Poly.one(self.g.spec), self.n)
            fx = cyclic_mul(self.f.shift(i), Poly.one(self.f.spec), self.n)
            out.append(SympPair(poly_to_vec(gx, self.n),
                                poly_to_vec(fx, self.n)))
        return out

    def elements(self) -> Iterator[SympPair]:
        """Every member.  When the first component determines the second
        (f in the ideal of g), w sweeps the p^dimension residues mod
        (X^n-1)/g; otherwise all of F_p[X]/(X^n-1), deduplicated."""
        spec, n = self.g.spec, self.n
        unique = is_uniquely_cyclic(self)
        sweep = self.dimension if unique else n
        seen: set[SympPair] = set()
        for digits in itertools.product(range(self.p), repeat=sweep):
            w = Poly.from_coeffs(spec, list(digits))
            pair = SympPair(poly_to_vec(cyclic_mul(w, self.g, n), n),
                            poly_to_vec(cyclic_mul(w, self.f, n), n))
            if not unique:
                if pair in seen:
                    continue
                seen.add(pair)
            yield pair

    def contains(self, pair: SympPair) -> bool:
        """Division test: g must divide the first component, and the
        quotient must reproduce the second through f.  Valid when the
        first component determines the second (f = a*g spaces)."""
        spec, n = self.g.spec, self.n
        u = vec_to_poly(spec, pair.u)
        if self.g.is_zero:
            return u.is_zero and all(x == 0 for x in pair.v)
        q, r = divmod(u, self.g)
        if not r.is_zero:
            return False
        return poly_to_vec(cyclic_mul(q, self.f, n), n) == tuple(pair.v)


def is_isotropic(space: IsotropicSpace) -> bool:
    """Polynomial route: g(X) f(X^-1) = g(X^-1) f(X) mod X^n - 1.

    Small spaces (n <= 12, at most 2^10 members) are re-checked by the
    exhaustive pairwise route; disagreement is an internal error.
    """
    n = space.n
    xn1 = Poly.xn_minus_1(space.g.spec, n)
    lhs = cyclic_mul(space.g, reciprocal_transform(space.f % xn1, n), n)
    rhs = cyclic_mul(reciprocal_transform(space.g % xn1, n), space.f, n)
    verdict = lhs == rhs
    log_count = (space.dimension if is_uniquely_cyclic(space) else n)
    if n <= 12 and space.p ** log_count <= 1 << 10:
        if _pairwise_all_zero(space) is not verdict:
            raise RuntimeError(
                f"isotropy routes disagree on a dimension-{space.dimension} "
                f"space at n={n}")
    return verdict


def _pairwise_all_zero(space: IsotropicSpace) -> bool:
    members = list(space.elements())
    if space.p == 2:
        packed = [(sum(1 << i for i, c in enumerate(m.u) if c),
                   sum(1 << i for i, c in enumerate(m.v) if c))
                  for m in members]
        return all(((xu & yv).bit_count() ^ (xv & yu).bit_count()) & 1 == 0
                   for (xu, xv), (yu, yv)
                   in itertools.combinations_with_replacement(packed, 2))
    return all(symp_inner(x, y, space.p) == 0
               for x, y in itertools.combinations_with_replacement(members, 2))


def pairwise_isotropy(space: IsotropicSpace, cap: int = 2 ** 16) -> bool:
    """Exhaustive route: every pair of members has zero inner product."""
    log_count = (space.dimension if is_uniquely_cyclic(space) else space.n)
    if space.p ** log_count > cap:
        raise ValueError("space too large for the exhaustive check")
    return _pairwise_all_zero(space)


def is_simultaneously_cyclic(obj) -> bool:
    """Closure under the simultaneous right shift of both components,
    checked on an explicit element set or on a generator space's basis."""
    if isinstance(obj, IsotropicSpace):
        return all(obj.contains(SympPair(right_shift(b.u), right_shift(b.v)))
                   for b in obj.basis())
    seen = {(tuple(e.u), tuple(e.v)) for e in obj}
    return all((right_shift(u), right_shift(v)) in seen for u, v in seen)


def is_uniquely_cyclic(obj) -> bool:
    """No element of the form (0, y) with y != 0: the first component
    determines the second.  Accepts an element set or a generator space."""
    if isinstance(obj, IsotropicSpace):
        # (0, y) in S forces w*g = 0, i.e. w in (X^n-1)/g; then y = w*f
        # vanishes for every such w exactly when g divides f cyclically
        spec, n = obj.g.spec, obj.n
        xn1 = Poly.xn_minus_1(spec, n)
        g = obj.g % xn1
        if g.is_zero:
            return (obj.f % xn1).is_zero
        ann = xn1 // poly_gcd(xn1, g)
        return cyclic_mul(ann, obj.f, n).is_zero
    return all(any(x != 0 for x in e.u) or all(y == 0 for y in e.v)
               for e in obj)


# ---------------------------------------------------------------------------
# centraliser sweeps


class CentraliserSweep(NamedTuple):
    min_outside: int | None     # least joint weight over C(S) \ S
    min_nonzero: int | None     # least joint weight over C(S) \ {0}
    size: int


def _sweep_gray_f2(space: IsotropicSpace) -> CentraliserSweep:
    """p = 2 bit-packed walk over (u, v) in Gray order; each step flips
    one coordinate and XORs a precomputed row into a*u + v*(X^n-1)/g."""
    n = space.n
    spec = space.g.spec
    k = int(space.g.degree)
    xn1 = Poly.xn_minus_1(spec, n)
    hbar = xn1 // space.g

    def mask(poly: Poly) -> int:
        acc = 0
        for i, c in enumerate(poly.vals):
            if c:
                acc |= 1 << i
        return acc

    one = Poly.one(spec)
    x_i = one
    rows = []       # flip of coordinate i XORs rows[i] into the second comp
    rem_rows = []   # ... and rem_rows[i] into u mod g
    for i in range(n):
        rows.append(mask(cyclic_mul(space.a, x_i, n)))
        rem_rows.append(mask(x_i % space.g))
        x_i = x_i.shift(1)
    for j in range(k):
        rows.append(mask(hbar.shift(j)))
        rem_rows.append(0)

    u_bits = 0
    v_bits = 0
    t_bits = 0                               # second component
    r_bits = 0                               # u mod g
    min_out: int | None = None
    min_nz: int | None = None
    total = 1 << (n + k)
    u_all = (1 << n) - 1
    for step in range(1, total):
        i = (step & -step).bit_length() - 1
        if i < n:
            u_bits ^= 1 << i
        else:
            v_bits ^= 1 << (i - n)
        t_bits ^= rows[i]
        r_bits ^= rem_rows[i]
        w = ((u_bits | t_bits) & u_all).bit_count()
        if v_bits == 0 and r_bits == 0:      # inside S
            if min_nz is None or w < min_nz:
                min_nz = w
        else:
            if min_out is None or w < min_out:
                min_out = w
            if min_nz is None or w < min_nz:
                min_nz = w
    return CentraliserSweep(min_out, min_nz, total)


def _sweep_generic(space: IsotropicSpace) -> CentraliserSweep:
    n, p = space.n, space.p
    spec = space.g.spec
    k = int(space.g.degree)
    hbar = Poly.xn_minus_1(spec, n) // space.g
    min_out: int | None = None
    min_nz: int | None = None
    total = 0
    for u_digits in itertools.product(range(p), repeat=n):
        u = vec_to_poly(spec, u_digits)
        au = cyclic_mul(space.a, u, n)
        for v_digits in itertools.product(range(p), repeat=k):
            total += 1
            v = vec_to_poly(spec, v_digits)
            second = au + cyclic_mul(v, hbar, n)
            pair = SympPair(tuple(u_digits), poly_to_vec(second, n))
            w = joint_weight(pair)
            in_S = (all(x == 0 for x in v_digits)
                    and (u % space.g).is_zero)
            if in_S:
                if w and (min_nz is None or w < min_nz):
                    min_nz = w
            else:
                if min_out is None or w < min_out:
                    min_out = w
                if min_nz is None or w < min_nz:
                    min_nz = w
    return CentraliserSweep(min_out, min_nz, total)


def centraliser_sweep(space: IsotropicSpace,
                      cap: int = 2 ** 26) -> CentraliserSweep:
    """Exhaustive joint-weight minima over the centraliser, via the
    (u, a*u + v*(X^n-1)/g) parameterization.  Refuses above the cap."""
    if space.a is None:
        raise ValueError("centraliser sweeps need the a-multiplier")
    k = int(space.g.degree)
    if space.p ** (space.n + k) > cap:
        raise ValueError(
            f"centraliser has {space.p}^{space.n + k} elements, over the "
            f"cap {cap}; use centraliser_weight_sample for a labeled bound")
    if space.p == 2:
        return _sweep_gray_f2(space)
    return _sweep_generic(space)


def centraliser_min_weight(space: IsotropicSpace, cap: int = 2 ** 26) -> int:
    """Least joint weight over C(S) \\ S — the exact code distance."""
    res = centraliser_sweep(space, cap)
    if res.min_outside is None:
        raise ValueError("centraliser equals the stabiliser space")
    return res.min_outside


def centraliser_elements(space: IsotropicSpace) -> Iterator[SympPair]:
    """Every member of C(S), one (u, v) parameter pair at a time."""
    if space.a is None:
        raise ValueError("centraliser enumeration needs the a-multiplier")
    n, p = space.n, space.p
    spec = space.g.spec
    k = int(space.g.degree)
    hbar = Poly.xn_minus_1(spec, n) // space.g
    for u_digits in itertools.product(range(p), repeat=n):
        u = vec_to_poly(spec, u_digits)
        au = cyclic_mul(space.a, u, n)
        for v_digits in itertools.product(range(p), repeat=k):
            v = vec_to_poly(spec, v_digits)
            yield SympPair(tuple(u_digits),
                           poly_to_vec(au + cyclic_mul(v, hbar, n), n))


def centraliser_weight_sample(space: IsotropicSpace, samples: int,
                              seed: int) -> dict:
    """Randomized upper bound on the C(S) \\ S minimum weight; explicitly
    labeled non-exact."""
    if space.a is None:
        raise ValueError("centraliser sampling needs the a-multiplier")
    n, p = space.n, space.p
    spec = space.g.spec
    k = int(space.g.degree)
    hbar = Poly.xn_minus_1(spec, n) // space.g
    rng = random.Random(seed)
    best: int | None = None
    for _ in range(samples):
        u_digits = tuple(rng.randrange(p) for _ in range(n))
        v_digits = tuple(rng.randrange(p) for _ in range(k))
        u = vec_to_poly(spec, u_digits)
        if all(x == 0 for x in v_digits) and (u % space.g).is_zero:
            continue
        v = vec_to_poly(spec, v_digits)
        second = cyclic_mul(space.a, u, n) + cyclic_mul(v, hbar, n)
        w = joint_weight(SympPair(u_digits, poly_to_vec(second, n)))
        if best is None or w < best:
            best = w
    return {"exact": False, "samples": samples, "seed": seed,
            "upper_bound": best}


def verify_code(code: FrobeniusCode, cap: int = 2 ** 26) -> dict:
    """Verification report: the polynomial isotropy identity always, plus
    exact distance and purity when the centraliser fits under the cap."""
    space = IsotropicSpace.from_code(code)
    report: dict = {"isotropy": is_isotropic(space),
                    "params": list(code.params),
                    "purity_checked_up_to": 0}
    size = code.p ** (code.n + code.k)
    if size <= cap:
        res = centraliser_sweep(space, cap)
        if res.min_outside is not None:
            report["exact_distance"] = res.min_outside
        report["purity_checked_up_to"] = (
            res.min_nonzero if res.min_nonzero is not None else code.n + 1)
        report["centraliser_size"] = res.size
        report["pure_to_bch"] = (res.min_nonzero is None
                                 or res.min_nonzero >= code.delta_bch)
    return report
