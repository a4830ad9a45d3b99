"""Construction, classification and enumeration of cyclic stabiliser
codes of length n dividing p^t + 1.

A code is described by a triple (g, h, a): g in F_p[X] collects the
factors of X^n - 1 that cannot split over GF(p^d), h in GF(p^d)[X] picks
one factor from each sigma-orbit of the remaining ones, and a is the
unique prime-field polynomial that is 1 on g and a fixed conjugate of
alpha*eta on each sigma-power of h.  The stabiliser space is
{(w*g, w*a*g) : w in F_p[X]/(X^n-1)}; the classical BCH machinery on the
exponent set of h gives the claimed distance.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass
from functools import lru_cache
from typing import NamedTuple

from ._intfact import multiplicative_order
from .galois import FieldElem, FieldSpec
from .polyring import (
    Poly,
    cyclic_mul,
    factorize_xn_minus_1,
    inverse_mod,
    reciprocal_transform,
)


class IncompatibleParams(ValueError):
    """The (n, p, d) triple admits no code for structural reasons."""


class ConstructionError(Exception):
    """A candidate (g, h) pair fails the code verification identities."""


# ---------------------------------------------------------------------------
# length classification


@dataclass(frozen=True)
class LengthClass:
    n: int
    p: int
    good: bool
    t_min: int | None
    parity: str | None          # parity of t_min
    order: int | None           # multiplicative order of p mod n
    d_options: tuple[int, ...]  # usable Frobenius powers d <= 2*t_min


def _two_adic(x: int) -> int:
    return (x & -x).bit_length() - 1


def compatible_power(t_min: int, d: int) -> bool:
    """Whether d divides some valid exponent t (an odd multiple of
    t_min); equivalently the 2-part of d is at most that of t_min."""
    return d >= 2 and _two_adic(d) <= _two_adic(t_min)


def classify_length(n: int, p: int) -> LengthClass:
    """Decide whether n divides p^t + 1 for some t, and which Frobenius
    powers d admit codes of length n."""
    if n < 1 or p < 2:
        raise ValueError("need n >= 1 and p >= 2")
    if math.gcd(n, p) != 1:
        return LengthClass(n, p, False, None, None, None, ())
    if n <= 2:
        return LengthClass(n, p, True, 1, "odd", 1, ())
    order = multiplicative_order(p, n)
    if order % 2 != 0 or pow(p, order // 2, n) != n - 1:
        return LengthClass(n, p, False, None, None, order, ())
    t_min = order // 2
    d_opts = tuple(d for d in range(2, 2 * t_min + 1)
                   if compatible_power(t_min, d))
    return LengthClass(n, p, True, t_min,
                       "even" if t_min % 2 == 0 else "odd", order, d_opts)


def linear_exists(n: int, p: int) -> bool:
    """True when the d = 2 route exists, i.e. the minimal exponent is even."""
    c = classify_length(n, p)
    return c.good and c.t_min is not None and c.t_min % 2 == 0


def _require_compatible(n: int, p: int, d: int) -> LengthClass:
    c = classify_length(n, p)
    if not c.good:
        raise IncompatibleParams(
            f"length {n} does not divide {p}^t+1 for any t")
    if d < 2:
        raise IncompatibleParams("the Frobenius power d must be at least 2")
    if not compatible_power(c.t_min, d):
        if d == 2:
            raise IncompatibleParams(
                f"no even exponent: n | {p}^t+1 only for odd t")
        raise IncompatibleParams(
            f"Frobenius power {d} incompatible: {d} divides no odd "
            f"multiple of the minimal exponent {c.t_min}")
    return c


# ---------------------------------------------------------------------------
# factor tower: aligned factorisations of X^n - 1 over F_p and GF(p^d)


class Orbit(NamedTuple):
    """One irreducible F_p-factor of X^n - 1 and its GF(p^d) splitting."""

    label: int                  # smallest exponent in the ground coset
    ground: Poly                # the F_p factor
    coset: tuple[int, ...]
    splittable: bool            # exactly d conjugate children
    children: tuple[int, ...]   # ext labels in sigma-cycle order (sigma: i -> i+1)


class FactorTower:
    """Shared-root factorisations of X^n - 1 over F_p and GF(p^d), the
    sigma-orbit structure linking them, and cached CRT idempotents."""

    def __init__(self, n: int, p: int, d: int):
        if d < 1:
            raise ValueError("d must be positive")
        if math.gcd(n, p) != 1:
            raise ValueError(f"length {n} not coprime to {p}")
        self.n, self.p, self.d = n, p, d
        self.ground_spec = FieldSpec.prime(p)
        self.ext_spec = FieldSpec.extension(p, d)
        order = multiplicative_order(p, n) if n > 1 else 1
        K = math.lcm(d, order)
        splitting = FieldSpec.extension(p, K)
        beta_val = splitting.vpow(splitting.generator_val(),
                                  (splitting.q - 1) // n)
        beta = FieldElem(splitting, beta_val)
        self.ground = factorize_xn_minus_1(n, self.ground_spec,
                                           splitting=splitting, beta=beta)
        self.ext = factorize_xn_minus_1(n, self.ext_spec,
                                        splitting=splitting, beta=beta)
        self.splitting = splitting
        self.beta = beta
        self.orbits = self._link_orbits()
        self.by_label = {o.label: o for o in self.orbits}
        self._idempotents = None
        self._scaled_idem: dict[tuple[int, int], object] = {}

    def _link_orbits(self) -> tuple[Orbit, ...]:
        n, p, d = self.n, self.p, self.d
        ext_by_coset = {c: c[0] for _, c in self.ext.pairs}
        orbits = []
        for f, coset in self.ground.pairs:
            members = {i for i in coset}
            children_cosets = [c for _, c in self.ext.pairs
                               if c[0] in members]
            splittable = len(children_cosets) == d and len(coset) % d == 0
            # sigma-cycle order: start at the smallest ext label, then
            # multiply the coset by p repeatedly
            start = min(c[0] for c in children_cosets)
            cycle = []
            cur = self.ext.coset(start)
            for _ in range(len(children_cosets)):
                cycle.append(ext_by_coset[cur])
                cur = tuple(sorted(i * p % n for i in cur))
            orbits.append(Orbit(coset[0], f, coset, splittable, tuple(cycle)))
        return tuple(orbits)

    @property
    def splittable_orbits(self) -> tuple[Orbit, ...]:
        return tuple(o for o in self.orbits if o.splittable)

    @property
    def mandatory_labels(self) -> tuple[int, ...]:
        return tuple(o.label for o in self.orbits if not o.splittable)

    def idempotents(self) -> dict[int, Poly]:
        """CRT idempotents over GF(p^d), one per ext factor label:
        e_l = 1 mod that factor, 0 mod every other."""
        if self._idempotents is None:
            xn1 = Poly.xn_minus_1(self.ext_spec, self.n)
            out = {}
            for f, coset in self.ext.pairs:
                cof = xn1 // f
                out[coset[0]] = (cof * inverse_mod(cof % f, f)) % xn1
            self._idempotents = out
        return self._idempotents

    def scaled_idempotent(self, label: int, val: int):
        """val * e_label with the per-tower cache that makes enumeration
        sweeps cheap.  For p = 2 the coefficient vector is packed into
        one int (k bits per coefficient, addition = xor); otherwise a
        tuple of coefficient vals."""
        key = (label, val)
        out = self._scaled_idem.get(key)
        if out is None:
            ext = self.ext_spec
            scaled = [ext.vmul(c, val) for c in self.idempotents()[label].vals]
            if self.p == 2:
                out = 0
                for i, c in enumerate(scaled):
                    out |= c << (i * ext.k)
            else:
                out = tuple(scaled)
            self._scaled_idem[key] = out
        return out


@lru_cache(maxsize=None)
def factor_tower(n: int, p: int, d: int) -> FactorTower:
    return FactorTower(n, p, d)


# ---------------------------------------------------------------------------
# BCH window


class BchWindow(NamedTuple):
    s: int       # exponent multiplier, coprime to n
    start: int   # first exponent of the run (of beta^s)
    length: int  # run length; the distance bound is length + 1


def bch_window_from_exponents(exponents, n: int) -> tuple[int, BchWindow]:
    """Longest run start..start+len-1 with s*(start+j) mod n in the
    exponent set throughout, over every multiplier s coprime to n.

    Runs are cyclic, so an exponent set containing 0 may wrap around.
    Ties prefer the smallest s, then the smallest start; returns
    (delta, window) with delta = length + 1.
    """
    E = set(i % n for i in exponents)
    if not E:
        raise ValueError("empty exponent set")
    if len(E) == n:
        return n + 1, BchWindow(1, 0, n)
    in_E = bytearray(n)
    for i in E:
        in_E[i] = 1
    best_len, best_s, best_start = 0, 1, 0
    for s in range(1, n):
        if math.gcd(s, n) != 1:
            continue
        # scan one full period starting just past a gap of the rescaled
        # membership map j -> [s*j in E]; every cyclic run then appears whole
        gap = next(z for z in range(n) if not in_E[z * s % n])
        s_len, s_start = 0, 0
        run = 0
        for off in range(1, n + 1):
            j = gap + off
            if in_E[j * s % n]:
                if run == 0:
                    cur = j % n
                run += 1
                if run > s_len or (run == s_len and cur < s_start):
                    s_len, s_start = run, cur
            else:
                run = 0
        if s_len > best_len:
            best_len, best_s, best_start = s_len, s, s_start
    return best_len + 1, BchWindow(best_s, best_start, best_len)


def bch_distance(h: Poly, n: int) -> int:
    """Distance bound length+1 for an arbitrary divisor h of X^n - 1,
    found by locating the exponents of its roots directly."""
    from .galois import primitive_nth_root, SubfieldEmbedding

    if not (Poly.xn_minus_1(h.spec, n) % h).is_zero:
        raise ValueError(f"not a divisor of X^{n}-1 over its field")
    spec, beta = primitive_nth_root(n, h.spec)
    emb = SubfieldEmbedding(h.spec, spec)
    lifted = h.map_coeffs(emb.embed, spec)
    E = [i for i in range(n)
         if lifted.evaluate(spec.vpow(beta.val, i)) == 0]
    if not E:
        return 1
    delta, _ = bch_window_from_exponents(E, n)
    return delta


# ---------------------------------------------------------------------------
# code construction


class Candidate(NamedTuple):
    g_labels: tuple[int, ...]        # ground labels put into g
    h_choice: tuple[tuple[int, int], ...]  # (orbit label, cycle index) per h orbit
    degenerate: bool                 # h == 1


def enumerate_candidates(n: int, p: int, d: int):
    """Every canonical (g, h) choice at the given parameters, the
    all-in-g degenerate candidate last."""
    tower = factor_tower(n, p, d)
    splittable = tower.splittable_orbits
    mandatory = tower.mandatory_labels
    options = [tuple(range(d)) + ("g",) for _ in splittable]
    for combo in itertools.product(*options):
        g_labels = list(mandatory)
        h_choice = []
        for orbit, pick in zip(splittable, combo):
            if pick == "g":
                g_labels.append(orbit.label)
            else:
                h_choice.append((orbit.label, pick))
        yield Candidate(tuple(sorted(g_labels)), tuple(h_choice),
                        degenerate=not h_choice)


@dataclass
class FrobeniusCode:
    """A constructed and verified code."""

    n: int
    p: int
    d: int
    alpha: int
    g: Poly            # over F_p
    h: Poly            # over GF(p^d)
    a: Poly            # over F_p
    f: Poly            # a*g mod X^n-1, over F_p
    k: int
    delta_bch: int
    window: BchWindow | None
    g_labels: tuple[int, ...]
    h_labels: tuple[int, ...]
    exponents: tuple[int, ...]
    t: int
    m: int

    @property
    def linear(self) -> bool:
        return self.d == 2

    @property
    def degenerate(self) -> bool:
        return not self.h_labels

    @property
    def params(self) -> tuple[int, int, int]:
        return (self.n, self.k, self.delta_bch)

    @property
    def params_str(self) -> str:
        return f"[[{self.n},{self.k},{self.delta_bch}]]"

    @property
    def tower(self) -> FactorTower:
        return factor_tower(self.n, self.p, self.d)

    def descriptor(self) -> dict:
        """JSON-ready form; feed the result to from_descriptor to rebuild
        (and re-verify) the code."""
        tower = self.tower
        ext = tower.ext_spec
        return {
            "p": self.p, "d": self.d, "n": self.n, "t": self.t,
            "alpha": self.alpha,
            "g": {
                "cosets": [list(tower.by_label[l].coset)
                           for l in self.g_labels],
                "coeffs": list(self.g.vals),
            },
            "h": {
                "cosets": [list(tower.ext.coset(l)) for l in self.h_labels],
                "coeffs": [list(ext.digits(v)) for v in self.h.vals],
                "field_modulus": list(ext.modulus),
            },
            "a": list(self.a.vals),
            "params": [self.n, self.k, self.delta_bch],
            "flags": {"linear": self.linear, "degenerate": self.degenerate,
                      "isotropy_verified": True},
        }


def default_alpha(p: int, d: int) -> int:
    """alpha = -1/c0 for d = 2 (c0 the modulus constant term), else 1."""
    if d == 2:
        c0 = FieldSpec.extension(p, 2).modulus[0]
        return (-pow(c0, p - 2, p)) % p
    return 1


def construct_code(n: int, p: int, d: int, candidate: Candidate,
                   alpha: int | None = None) -> FrobeniusCode:
    """Build (g, h, a) for the candidate and verify the code identities;
    raises ConstructionError when the verification fails."""
    tower = factor_tower(n, p, d)
    if alpha is None:
        alpha = default_alpha(p, d)
    alpha %= p
    if alpha == 0:
        raise ValueError("alpha must be a nonzero scalar")
    ground, ext = tower.ground_spec, tower.ext_spec

    g = Poly.one(ground)
    for lab in candidate.g_labels:
        g = g * tower.by_label[lab].ground

    # residue per ext factor label: 1 under g, sigma^i(alpha*eta) on the
    # i-th sigma-power of the chosen h factor
    eta = ext.p if ext.k > 1 else 0
    residues: dict[int, int] = {}
    g_set = set(candidate.g_labels)
    for orbit in tower.orbits:
        if orbit.label in g_set:
            for child in orbit.children:
                residues[child] = 1
    h = Poly.one(ext)
    h_labels = []
    exponents: list[int] = []
    for lab, j in candidate.h_choice:
        orbit = tower.by_label[lab]
        if not orbit.splittable:
            raise ValueError(f"orbit {lab} cannot contribute to h")
        chosen = orbit.children[j]
        h = h * tower.ext.factor(chosen)
        h_labels.append(chosen)
        exponents.extend(tower.ext.coset(chosen))
        for k_pos, child in enumerate(orbit.children):
            lvl = (k_pos - j) % d
            residues[child] = ext.vscale(alpha, ext.vfrob(eta, lvl))

    # a = sum of residue * idempotent
    if p == 2:
        packed = 0
        for lab, val in residues.items():
            if val:
                packed ^= tower.scaled_idempotent(lab, val)
        mask = (1 << ext.k) - 1
        a_ext = Poly(ext, ((packed >> (i * ext.k)) & mask for i in range(n)))
    else:
        acc = [0] * n
        vadd = ext.vadd
        for lab, val in residues.items():
            if val:
                for i, c in enumerate(tower.scaled_idempotent(lab, val)):
                    if c:
                        acc[i] = vadd(acc[i], c)
        a_ext = Poly(ext, acc)
    return _finish_construction(tower, candidate, alpha, g, h,
                                tuple(sorted(h_labels)),
                                tuple(sorted(exponents)), a_ext)


def _finish_construction(tower, candidate, alpha, g, h, h_labels,
                         exponents, a_ext) -> FrobeniusCode:
    n, p, d = tower.n, tower.p, tower.d
    ground = tower.ground_spec

    # a must collapse to the prime field (coefficient-wise Frobenius fixes it)
    try:
        a = Poly(ground, a_ext.to_int_coeffs())
    except ValueError as exc:
        raise ConstructionError(
            f"a is not defined over F_{p}: {exc}") from None

    if not (a % g == Poly.one(ground) % g):
        raise ConstructionError("a is not congruent to 1 modulo g")

    hbar = Poly.xn_minus_1(ground, n) // g  # product of all sigma-powers of h
    if not ((reciprocal_transform(a, n) - a) % hbar).is_zero:
        raise ConstructionError(
            "a(X^-1) differs from a(X) modulo (X^n-1)/g")

    f = cyclic_mul(a, g, n)
    lhs = cyclic_mul(g, reciprocal_transform(f, n), n)
    rhs = cyclic_mul(reciprocal_transform(g, n), f, n)
    if lhs != rhs:
        raise ConstructionError(
            "isotropy identity g*f(X^-1) = g(X^-1)*f fails")

    h_deg = int(h.degree) if not h.is_zero else 0
    g_deg = int(g.degree)
    if g_deg + d * h_deg != n:
        raise ConstructionError(
            f"degree bookkeeping failed: {g_deg} + {d}*{h_deg} != {n}")

    if exponents:
        delta, window = bch_window_from_exponents(exponents, n)
    else:
        delta, window = 1, None
    cls = classify_length(n, p)
    t = math.lcm(d, cls.t_min) if cls.good else 0
    return FrobeniusCode(
        n=n, p=p, d=d, alpha=alpha, g=g, h=h, a=a, f=f,
        k=g_deg, delta_bch=delta, window=window,
        g_labels=candidate.g_labels, h_labels=h_labels,
        exponents=exponents, t=t, m=(t // d if t else 0),
    )


def enumerate_canonical(n: int, p: int, d: int, *, alpha: int | None = None,
                        include_degenerate: bool = False,
                        check_compatible: bool = True):
    """Yield every verified code at (n, p, d) in canonical candidate
    order.  With check_compatible=False, incompatible parameters are not
    rejected up front; candidates whose verification fails are skipped,
    so an incompatible triple simply yields nothing."""
    if check_compatible:
        _require_compatible(n, p, d)
    for cand in enumerate_candidates(n, p, d):
        if cand.degenerate and not include_degenerate:
            continue
        try:
            yield construct_code(n, p, d, cand, alpha=alpha)
        except ConstructionError:
            if check_compatible:
                raise
            continue


def from_labels(n: int, p: int, d: int, g_labels, h_labels,
                alpha: int | None = None) -> FrobeniusCode:
    """Rebuild a code from its ground g-labels and ext h-labels."""
    tower = factor_tower(n, p, d)
    g_labels = tuple(sorted(int(x) for x in g_labels))
    h_labels = tuple(sorted(int(x) for x in h_labels))
    for lab in tower.mandatory_labels:
        if lab not in g_labels:
            raise ValueError(
                f"factor {lab} cannot split and must be part of g")
    g_set = set(g_labels)
    known = {o.label for o in tower.orbits}
    for lab in g_labels:
        if lab not in known:
            raise ValueError(f"{lab} is not a factor label of X^{n}-1 over F_{p}")
    h_choice = []
    seen_parents = set()
    for lab in h_labels:
        if lab not in tower.ext.by_label:
            raise ValueError(
                f"{lab} is not a factor label of X^{n}-1 over GF({p}^{d})")
        parent = next(o for o in tower.orbits if lab in o.children)
        if not parent.splittable:
            raise ValueError(f"factor {lab} has no full sigma-orbit")
        if parent.label in g_set:
            raise ValueError(
                f"factor {lab} conflicts with g-factor {parent.label}")
        if parent.label in seen_parents:
            raise ValueError(
                f"two h-factors share the sigma-orbit of {parent.label}")
        seen_parents.add(parent.label)
        h_choice.append((parent.label, parent.children.index(lab)))
    for orbit in tower.splittable_orbits:
        if orbit.label not in g_set and orbit.label not in seen_parents:
            raise ValueError(
                f"sigma-orbit {orbit.label} is neither in g nor matched by h")
    cand = Candidate(g_labels, tuple(h_choice), degenerate=not h_choice)
    return construct_code(n, p, d, cand, alpha=alpha)


def from_descriptor(desc: dict, *, strict: bool = True) -> FrobeniusCode:
    """Rebuild (and re-verify) a code from its descriptor dict; with
    strict=True every embedded field must match the reconstruction."""
    g_labels = [min(c) for c in desc["g"]["cosets"]]
    h_labels = [min(c) for c in desc["h"]["cosets"]]
    code = from_labels(desc["n"], desc["p"], desc["d"],
                       g_labels, h_labels, alpha=desc.get("alpha"))
    if strict:
        got = code.descriptor()
        bad = [key for key in got if key in desc and desc[key] != got[key]]
        if bad:
            raise ConstructionError(
                f"descriptor fields {bad} do not match the canonical "
                f"reconstruction")
    return code


def code_params(code: FrobeniusCode) -> tuple[int, int, int]:
    return code.params


def linear_generator(code: FrobeniusCode) -> Poly:
    """For d = 2: the generator gcd(X^n - 1, g * (1 + sigma(eta) * a))
    of the associated classical cyclic code over GF(p^2); equals g*h."""
    if code.d != 2:
        raise ValueError("the classical correspondence needs d = 2")
    tower = code.tower
    ext = tower.ext_spec
    eta_conj = ext.vfrob(ext.p, 1)  # sigma(eta)
    a_lift = code.a.map_coeffs(lambda v: v, ext)
    one_plus = Poly.one(ext) + a_lift.map_coeffs(
        lambda c: ext.vmul(c, eta_conj))
    g_lift = code.g.map_coeffs(lambda v: v, ext)
    from .polyring import poly_gcd
    return poly_gcd(Poly.xn_minus_1(ext, code.n), g_lift * one_plus)
