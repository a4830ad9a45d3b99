"""Error correction at the BCH limit.

The pipeline mirrors the physical decoding story in classical terms.  A
syndrome oracle reveals the shifted inner products of the hidden error
pair with the stabiliser generators, packaged as the polynomial
a(X)g(X)u(X^-1) - g(X)v(X^-1) mod X^n-1.  Dividing out g and reducing
modulo h leaves e = alpha*eta*u(X^-1) - v(X^-1) mod h, a classical
syndrome for the cyclic code generated by h over GF(p^d).  A
Berlekamp-Massey round on the consecutive-root window of h, a Chien
search, and a linear solve for the magnitudes recover the error
polynomial, whose 1/eta digits split back into the pair (u, v).

Decode failure is a first-class outcome: candidates are re-reduced
against the input syndrome before being returned, and magnitudes must
land in the code's alphabet.
"""

from __future__ import annotations

import random
import time
from dataclasses import dataclass

from .codegen import FrobeniusCode
from .galois import SubfieldEmbedding
from .polyring import Poly, cyclic_mul, inverse_mod, reciprocal_transform
from .stab import SympPair, poly_to_vec, vec_to_poly


class DecodeFailure(Exception):
    """The observed syndrome is not explained by any error pair within
    the correction radius."""


@dataclass(frozen=True)
class Syndrome:
    """Reduced syndrome: alpha*eta*u(X^-1) - v(X^-1) mod h for the true
    error, as a polynomial over GF(p^d) of degree < deg h."""

    e_reduced: Poly
    code: FrobeniusCode


class _Context:
    """Per-code precomputation shared by the pipeline stages."""

    def __init__(self, code: FrobeniusCode):
        tower = code.tower
        ground = tower.ground_spec
        n = code.n
        self.ext = tower.ext_spec
        self.split = tower.ext.splitting
        self.emb = SubfieldEmbedding(self.ext, self.split)
        xn1 = Poly.xn_minus_1(ground, n)
        self.hbar = xn1 // code.g
        if self.hbar.degree > 0:
            self.g_inv = inverse_mod(code.g % self.hbar, self.hbar)
        else:
            self.g_inv = Poly.zero(ground)
        if code.window is not None:
            # gamma = beta^s is itself a primitive n-th root; gamma_pow[i]
            # tabulates gamma^i in the splitting field
            gamma = self.split.vpow(tower.ext.beta.val, code.window.s)
            pows = [1] * n
            for i in range(1, n):
                pows[i] = self.split.vmul(pows[i - 1], gamma)
            self.gamma_pow = pows
        else:
            self.gamma_pow = None


_contexts: dict[tuple, _Context] = {}


def _context(code: FrobeniusCode) -> _Context:
    key = (code.n, code.p, code.d, code.alpha, code.g_labels, code.h_labels)
    ctx = _contexts.get(key)
    if ctx is None:
        ctx = _contexts[key] = _Context(code)
    return ctx


def _eval(vals, x, K):
    """Horner evaluation of a coefficient list at the packed val x."""
    acc = 0
    for c in reversed(vals):
        acc = K.vadd(K.vmul(acc, x), c)
    return acc


# ---------------------------------------------------------------------------
# pipeline stages


def syndrome_oracle(error: SympPair, code: FrobeniusCode) -> Poly:
    """e'(X) = a g u(X^-1) - g v(X^-1) mod X^n - 1.

    Classically computable from the hidden pair; coefficient k equals
    the shifted inner product (ag)^T N^k u - g^T N^k v, which is what a
    measurement round would reveal one k at a time."""
    n = code.n
    if error.n != n:
        raise ValueError(f"length mismatch: {error.n} vs {n}")
    spec = code.g.spec
    u = vec_to_poly(spec, error.u)
    v = vec_to_poly(spec, error.v)
    return (cyclic_mul(code.f, reciprocal_transform(u, n), n)
            - cyclic_mul(code.g, reciprocal_transform(v, n), n))


def reduce_syndrome(e_prime: Poly, code: FrobeniusCode) -> Syndrome:
    """Divide out g (invertibly, mod (X^n-1)/g) and reduce modulo h."""
    ctx = _context(code)
    r = (e_prime * ctx.g_inv) % ctx.hbar
    lifted = Poly(ctx.ext, r.vals)   # prime-field coefficients embed as-is
    return Syndrome(lifted % code.h, code)


def _berlekamp_massey(S, K):
    """Connection polynomial C (C_0 = 1) of the minimal LFSR generating
    S, plus its claimed register length L."""
    C, B = [1], [1]
    L, m, b = 0, 1, 1
    for i, s in enumerate(S):
        delta = s
        for j in range(1, L + 1):
            if j < len(C) and C[j]:
                delta = K.vadd(delta, K.vmul(C[j], S[i - j]))
        if delta == 0:
            m += 1
            continue
        coef = K.vmul(delta, K.vinv(b))
        if len(B) + m > len(C):
            C = C + [0] * (len(B) + m - len(C))
        update = list(C)
        for j, bj in enumerate(B):
            if bj:
                update[j + m] = K.vsub(update[j + m], K.vmul(coef, bj))
        if 2 * L <= i:
            B, b, L, m = C, delta, i + 1 - L, 1
        else:
            m += 1
        C = update
    while C and C[-1] == 0:
        C.pop()
    return C, L


def _solve(M, rhs, K):
    """Gauss-Jordan solve of the L x L system M y = rhs over K."""
    L = len(rhs)
    A = [list(row) + [rhs[i]] for i, row in enumerate(M)]
    for col in range(L):
        piv = next((r for r in range(col, L) if A[r][col]), None)
        if piv is None:
            raise DecodeFailure("singular magnitude system")
        A[col], A[piv] = A[piv], A[col]
        inv = K.vinv(A[col][col])
        A[col] = [K.vmul(inv, x) for x in A[col]]
        for r in range(L):
            if r != col and A[r][col]:
                c = A[r][col]
                A[r] = [K.vsub(x, K.vmul(c, y))
                        for x, y in zip(A[r], A[col])]
    return [A[i][L] for i in range(L)]


def bch_decode(syn: Syndrome, tau: int) -> Poly:
    """The unique polynomial over GF(p^d) of weight <= tau congruent to
    the reduced syndrome modulo h; DecodeFailure when none exists."""
    code = syn.code
    ctx = _context(code)
    e = syn.e_reduced
    if tau < 0:
        raise ValueError("negative correction radius")
    if (e % code.h).is_zero:
        return Poly.zero(ctx.ext)
    if tau == 0:
        raise DecodeFailure("nonzero syndrome at radius 0")
    win = code.window
    if win is None:
        raise ValueError("code has no consecutive-root window")
    if 2 * tau > win.length:
        raise ValueError(
            f"radius {tau} needs {2 * tau} consecutive roots; the window "
            f"has {win.length}")
    n, K, emb = code.n, ctx.split, ctx.emb
    pows = ctx.gamma_pow

    e_lifted = [emb.embed(c) for c in e.vals]
    S = [_eval(e_lifted, pows[(win.start + j) % n], K)
         for j in range(2 * tau)]

    locator, L = _berlekamp_massey(S, K)
    if L > tau:
        raise DecodeFailure(f"locator degree {L} exceeds the radius {tau}")
    positions = [i for i in range(n)
                 if _eval(locator, pows[-i % n], K) == 0]
    if len(positions) != L:
        raise DecodeFailure("locator roots do not match its degree")

    if L:
        M = [[pows[pos * (win.start + j) % n] for pos in positions]
             for j in range(L)]
        Y = _solve(M, S[:L], K)
    else:
        Y = []

    coeffs = [0] * n
    for pos, y in zip(positions, Y):
        if y == 0:
            raise DecodeFailure("zero magnitude at a located position")
        try:
            coeffs[pos] = emb.project(y)
        except ValueError:
            raise DecodeFailure("magnitude outside the code alphabet") \
                from None
    E = Poly(ctx.ext, coeffs)
    # a wrong candidate must not leave this function looking like an answer
    if (E - e) % code.h != Poly.zero(ctx.ext):
        raise DecodeFailure("candidate does not reproduce the syndrome")
    return E


def split_error(E: Poly, code: FrobeniusCode) -> SympPair:
    """Undo E = alpha*eta*u(X^-1) - v(X^-1).

    Each coefficient must lie in the span of {1, eta}; any digit above
    the eta line means E cannot come from an error pair."""
    n, p = code.n, code.p
    ctx = _context(code)
    if E.spec is not ctx.ext:
        raise ValueError("candidate must live over the code's extension")
    alpha_inv = pow(code.alpha, p - 2, p)
    u_rev, v_rev = [0] * n, [0] * n
    for i, val in enumerate(E.vals):
        digits = ctx.ext.digits(val)
        if any(digits[2:]):
            raise DecodeFailure(
                f"coefficient at X^{i} falls outside the 1/eta span")
        u_rev[i] = digits[1] * alpha_inv % p
        v_rev[i] = -digits[0] % p
    ground = code.g.spec
    u = reciprocal_transform(vec_to_poly(ground, u_rev), n)
    v = reciprocal_transform(vec_to_poly(ground, v_rev), n)
    return SympPair(poly_to_vec(u, n), poly_to_vec(v, n))


def correct(error: SympPair, code: FrobeniusCode,
            tau: int | None = None) -> SympPair:
    """Full round on a hidden error pair: oracle -> reduce -> decode ->
    split.  Exact recovery for joint weight <= tau; DecodeFailure (or a
    rejected candidate) beyond that."""
    if tau is None:
        tau = (code.delta_bch - 1) // 2
    syn = reduce_syndrome(syndrome_oracle(error, code), code)
    return split_error(bch_decode(syn, tau), code)


# ---------------------------------------------------------------------------
# batches


def random_error(rng: random.Random, n: int, p: int,
                 weight: int) -> SympPair:
    """Uniform error pair of exact joint weight."""
    u, v = [0] * n, [0] * n
    for pos in rng.sample(range(n), weight):
        pat = rng.randrange(1, p * p)
        u[pos], v[pos] = pat % p, pat // p
    return SympPair(tuple(u), tuple(v))


def weight_le_pairs(n: int, p: int, max_weight: int):
    """Every error pair of joint weight 1..max_weight, exhaustively."""
    import itertools

    patterns = list(range(1, p * p))
    for w in range(1, max_weight + 1):
        for positions in itertools.combinations(range(n), w):
            for pats in itertools.product(patterns, repeat=w):
                u, v = [0] * n, [0] * n
                for pos, pat in zip(positions, pats):
                    u[pos], v[pos] = pat % p, pat // p
                yield SympPair(tuple(u), tuple(v))


def decode_simulation(code: FrobeniusCode, trials: int,
                      weight: int | None = None, seed: int = 0) -> dict:
    """Seeded batch of random-error round-trips.

    Draws joint weights uniformly in 1..weight (default: the radius),
    counts exact recoveries, and times each round."""
    tau = (code.delta_bch - 1) // 2
    if weight is None:
        weight = tau
    rng = random.Random(seed)
    successes = 0
    elapsed = 0.0
    for _ in range(trials):
        w = rng.randint(1, weight) if weight > 0 else 0
        err = random_error(rng, code.n, code.p, w)
        t0 = time.perf_counter()
        try:
            ok = correct(err, code, tau) == err
        except DecodeFailure:
            ok = False
        elapsed += time.perf_counter() - t0
        successes += ok
    return {"trials": trials, "successes": successes,
            "failures": trials - successes,
            "mean_time": elapsed / trials if trials else 0.0,
            "seed": seed, "weight": weight}
