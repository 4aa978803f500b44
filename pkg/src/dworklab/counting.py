"""Exact point counts for Dwork fibers over finite fields.

The fiber Y_t is the projective hypersurface

    x_1^N + ... + x_N^N = N t x_1^{w_1} ... x_N^{w_N}   in P^{N-1}(F_q),

smooth whenever t^N != 1 and gcd(q, N) = 1.  For odd N all cohomology off
the middle degree is one Tate class per even degree, so

    #Y_t(F_q) = 1 + q + ... + q^{N-2} - a_q

and the point count determines the middle trace a_q exactly.

Two counters are provided and must agree:

* ``count_projective_naive`` walks every normalized projective point (first
  nonzero coordinate scaled to 1) and evaluates the equation through
  precomputed power tables.  It works for any weight and any small field,
  prime or extension, and is the reference.
* ``count_projective_fast`` (classical weight, prime fields) splits off the
  points with a zero coordinate, which satisfy the diagonal equation
  sum x_i^N = 0 and are counted by additive convolutions of the table
  r(a) = #{x : x^N = a}; on the totally nonzero torus it normalizes the last
  coordinate to 1 and resolves the first coordinate through the table
  M[c][a] = #{x != 0 : x^N - c x = a}, built once in O(q^2).  Total work
  O(q^(N-2)) instead of O(q^(N-1)).

Counting partitions the outer coordinate range into chunks; workers > 1
spreads the chunks over threads, and the total is the same either way.
"""

import time
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from functools import lru_cache
from math import gcd
from typing import Sequence

import numpy as np

from .characters import WeightVector
from .hodge import total_dimension

__all__ = [
    "SmoothnessError",
    "CharacteristicError",
    "CapabilityError",
    "BudgetError",
    "DEFAULT_BUDGET",
    "is_prime",
    "field_make",
    "FiniteField",
    "FiberSpec",
    "FiberCount",
    "candidate_count",
    "count_projective_naive",
    "count_projective_fast",
    "middle_trace",
    "weil_bound_ok",
    "enumerate_points",
    "group_elements",
    "group_action_check",
    "tower_counts",
]

DEFAULT_BUDGET = 2_000_000_000  # evaluated candidates per invocation
_CHUNK = 1 << 22
_MAX_TABLE_Q = 1 << 20  # exp/log tables refuse beyond this


class SmoothnessError(ValueError):
    """t^N = 1: the fiber is outside the smooth locus."""


class CharacteristicError(ValueError):
    """The field characteristic divides N (or a root-of-unity condition fails)."""


class CapabilityError(ValueError):
    """The requested combination is outside what this strategy supports."""


class BudgetError(RuntimeError):
    """The work estimate exceeds the candidate budget."""

    def __init__(self, required: int, budget: int, what: str = "count"):
        self.required = required
        self.budget = budget
        super().__init__(
            f"{what} needs about {required} evaluated candidates, over the budget of "
            f"{budget}; pass a budget >= {required} to force it"
        )


def is_prime(n: int) -> bool:
    """Deterministic Miller-Rabin, exact for n < 3.3e24."""
    if n < 2:
        return False
    for p in (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37):
        if n % p == 0:
            return n == p
    d, s = n - 1, 0
    while d % 2 == 0:
        d //= 2
        s += 1
    for a in (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37):
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


# ---------------------------------------------------------------------------
# polynomials over F_p, coefficients low degree first, used only to build fields


def _poly_trim(a):
    while a and a[-1] == 0:
        a.pop()
    return a


def _poly_rem(a, b, p):
    """Remainder of a modulo b over F_p (b nonzero)."""
    a = [x % p for x in a]
    _poly_trim(a)
    db = len(b) - 1
    inv_lead = pow(b[-1], p - 2, p)
    while a and len(a) - 1 >= db:
        factor = a[-1] * inv_lead % p
        shift = len(a) - 1 - db
        for i, c in enumerate(b):
            a[i + shift] = (a[i + shift] - factor * c) % p
        _poly_trim(a)
    return a


def _poly_mulmod(a, b, mod, p):
    if not a or not b:
        return []
    out = [0] * (len(a) + len(b) - 1)
    for i, ai in enumerate(a):
        if ai:
            for j, bj in enumerate(b):
                out[i + j] = (out[i + j] + ai * bj) % p
    return _poly_rem(out, mod, p)


def _poly_powmod(base, e, mod, p):
    result = [1]
    base = _poly_rem(base, mod, p)
    while e:
        if e & 1:
            result = _poly_mulmod(result, base, mod, p)
        base = _poly_mulmod(base, base, mod, p)
        e >>= 1
    return result


def _poly_gcd(a, b, p):
    a, b = _poly_trim(list(a)), _poly_trim(list(b))
    while b:
        a, b = b, _poly_rem(a, b, p)
    return a


def _prime_factors(n: int) -> list[int]:
    out = []
    d = 2
    while d * d <= n:
        if n % d == 0:
            out.append(d)
            while n % d == 0:
                n //= d
        d += 1
    if n > 1:
        out.append(n)
    return out


def _minus_x(h, p):
    out = list(h)
    while len(out) < 2:
        out.append(0)
    out[1] = (out[1] - 1) % p
    return _poly_trim(out)


def _is_irreducible(coeffs: tuple[int, ...], p: int) -> bool:
    """Rabin's test: x^(p^m) = x mod f, and gcd(x^(p^(m/l)) - x, f) = 1 for primes l | m."""
    m = len(coeffs) - 1
    if m == 1:
        return True
    mod = list(coeffs)
    checkpoints = {m // ell for ell in _prime_factors(m)}
    h = [0, 1]
    for i in range(1, m + 1):
        h = _poly_powmod(h, p, mod, p)
        if i in checkpoints and len(_poly_gcd(mod, _minus_x(h, p), p)) > 1:
            return False
    return not _minus_x(h, p)


class FiniteField:
    """GF(p^m) with elements encoded as integers 0..q-1.

    The digits of an element base p are its polynomial coefficients, low
    degree first, reduced modulo the stored monic irreducible.  The modulus
    is the lexicographically least monic irreducible of degree m (constant
    coefficient compared first), so two builds of the same field agree.
    """

    __slots__ = ("p", "m", "q", "modulus", "_exp", "_log", "_add_table", "_mul_table")

    def __init__(self, p: int, m: int, modulus: tuple[int, ...]):
        self.p = p
        self.m = m
        self.q = p ** m
        self.modulus = modulus
        self._exp = None
        self._log = None
        self._add_table = None
        self._mul_table = None
        if m > 1:
            if self.q > _MAX_TABLE_Q:
                raise CapabilityError(
                    f"extension field of order {self.q} exceeds the table limit {_MAX_TABLE_Q}"
                )
            self._build_tables()
        self._spot_check()

    # -- encoding helpers

    def _digits(self, a: int) -> list[int]:
        out = []
        for _ in range(self.m):
            out.append(a % self.p)
            a //= self.p
        return out

    def _undigits(self, coeffs) -> int:
        out = 0
        for c in reversed(coeffs[: self.m] + [0] * max(0, self.m - len(coeffs))):
            out = out * self.p + c
        return out

    def _raw_mul(self, a: int, b: int) -> int:
        prod = _poly_mulmod(self._digits(a), self._digits(b), list(self.modulus), self.p)
        return self._undigits(prod)

    def _build_tables(self):
        q = self.q
        g = self._find_generator()
        exp = np.zeros(q - 1, dtype=np.int64)
        acc = 1
        for i in range(q - 1):
            exp[i] = acc
            acc = self._raw_mul(acc, g)
        if acc != 1:
            raise RuntimeError("generator power table failed to close")
        log = np.zeros(q, dtype=np.int64)
        log[exp] = np.arange(q - 1)
        self._exp = exp
        self._log = log

    def _find_generator(self) -> int:
        factors = _prime_factors(self.q - 1)
        for g in range(2, self.q):
            if all(self._raw_pow(g, (self.q - 1) // r) != 1 for r in factors):
                return g
        raise RuntimeError("no multiplicative generator found")

    def _raw_pow(self, a: int, e: int) -> int:
        result, base = 1, a
        while e:
            if e & 1:
                result = self._raw_mul(result, base)
            base = self._raw_mul(base, base)
            e >>= 1
        return result

    def _spot_check(self):
        # field axioms on a deterministic sample of triples
        samples = [(1, 2 % self.q, (self.q - 1))]
        step = max(1, self.q // 7)
        samples += [((3 * i) % self.q, (5 * i + 1) % self.q, (7 * i + 2) % self.q)
                    for i in range(1, self.q, step)]
        for a, b, c in samples[:12]:
            ok = (
                self.add(self.add(a, b), c) == self.add(a, self.add(b, c))
                and self.mul(self.mul(a, b), c) == self.mul(a, self.mul(b, c))
                and self.mul(a, self.add(b, c)) == self.add(self.mul(a, b), self.mul(a, c))
                and self.mul(a, 1) == a
                and self.add(a, 0) == a
            )
            if not ok:
                raise RuntimeError(f"field axiom spot check failed on {(a, b, c)} in {self}")

    # -- scalar arithmetic

    def add(self, a: int, b: int) -> int:
        if self.m == 1:
            return (a + b) % self.p
        return self._undigits([(x + y) % self.p for x, y in zip(self._digits(a), self._digits(b))])

    def neg(self, a: int) -> int:
        if self.m == 1:
            return (-a) % self.p
        return self._undigits([(-x) % self.p for x in self._digits(a)])

    def sub(self, a: int, b: int) -> int:
        return self.add(a, self.neg(b))

    def mul(self, a: int, b: int) -> int:
        if self.m == 1:
            return (a * b) % self.p
        if a == 0 or b == 0:
            return 0
        return int(self._exp[(self._log[a] + self._log[b]) % (self.q - 1)])

    def pow(self, a: int, e: int) -> int:
        if e == 0:
            return 1
        if a == 0:
            return 0
        if self.m == 1:
            return pow(a, e, self.p)
        return int(self._exp[(self._log[a] * e) % (self.q - 1)])

    def inv(self, a: int) -> int:
        if a == 0:
            raise ZeroDivisionError("inverse of zero")
        if self.m == 1:
            return pow(a, self.p - 2, self.p)
        return int(self._exp[(-self._log[a]) % (self.q - 1)])

    def generator(self) -> int:
        if self.m == 1:
            factors = _prime_factors(self.q - 1)
            for g in range(2, self.q):
                if all(pow(g, (self.q - 1) // r, self.p) != 1 for r in factors):
                    return g
            raise RuntimeError("no generator found")
        return int(self._exp[1])

    # -- vectorized helpers for the counters

    def pow_table(self, e: int) -> np.ndarray:
        """t[x] = x^e for all field elements, as int64."""
        if self.m == 1:
            xs = np.arange(self.q, dtype=np.int64)
            if e == 0:
                return np.ones(self.q, dtype=np.int64)
            out = np.ones(self.q, dtype=np.int64)
            base = xs.copy()
            ee = e
            while ee:
                if ee & 1:
                    out = out * base % self.p
                base = base * base % self.p
                ee >>= 1
            if e > 0:
                out[0] = 0
            return out
        out = np.zeros(self.q, dtype=np.int64)
        if e == 0:
            out[:] = 1
            return out
        nz = np.arange(1, self.q)
        out[nz] = self._exp[(self._log[nz] * e) % (self.q - 1)]
        return out

    def add_table(self) -> np.ndarray:
        """q x q addition table (extension fields only; prime fields add directly)."""
        if self._add_table is None:
            q, p, m = self.q, self.p, self.m
            xs = np.arange(q, dtype=np.int64)
            table = np.zeros((q, q), dtype=np.int32)
            scale = 1
            for _ in range(m):
                d = (xs // scale) % p
                table += (((d[:, None] + d[None, :]) % p) * scale).astype(np.int32)
                scale *= p
            self._add_table = table
        return self._add_table

    def mul_table(self) -> np.ndarray:
        """q x q multiplication table (extension fields only)."""
        if self._mul_table is None:
            q = self.q
            table = np.zeros((q, q), dtype=np.int32)
            nz = np.arange(1, q)
            logs = self._log[nz]
            table[1:, 1:] = self._exp[(logs[:, None] + logs[None, :]) % (q - 1)]
            self._mul_table = table
        return self._mul_table

    def __eq__(self, other):
        return (
            isinstance(other, FiniteField)
            and (self.p, self.m, self.modulus) == (other.p, other.m, other.modulus)
        )

    def __hash__(self):
        return hash((self.p, self.m, self.modulus))

    def __repr__(self):
        if self.m == 1:
            return f"GF({self.p})"
        return f"GF({self.p}^{self.m})"


@lru_cache(maxsize=32)
def field_make(p: int, m: int) -> FiniteField:
    """GF(p^m) with the lexicographically least monic irreducible modulus.

    Candidate moduli x^m + c_{m-1} x^{m-1} + ... + c_0 are scanned in
    lexicographic order of (c_0, ..., c_{m-1}) with each coefficient a
    canonical lift; the first irreducible wins, so the construction is
    reproducible.  m = 1 yields the prime field (modulus x).
    """
    if not is_prime(p):
        raise ValueError(f"{p} is not prime")
    if m < 1:
        raise ValueError(f"degree must be >= 1, got {m}")
    from itertools import product as iproduct

    for tail in iproduct(range(p), repeat=m):
        coeffs = tuple(tail) + (1,)
        if _is_irreducible(coeffs, p):
            return FiniteField(p, m, coeffs)
    raise RuntimeError("no irreducible polynomial found")  # unreachable


@dataclass(frozen=True, slots=True)
class FiberSpec:
    """One fiber Y_t of the degree-N family over a finite field."""

    N: int
    weight: WeightVector
    t: int
    field: FiniteField

    def __post_init__(self):
        if self.weight.modulus != self.N:
            raise ValueError("weight vector length does not match N")
        if gcd(self.field.q, self.N) != 1:
            raise CharacteristicError(
                f"gcd(q, N) must be 1: the base ring inverts N, got q = {self.field.q}, N = {self.N}"
            )
        if not (0 <= self.t < self.field.q):
            raise ValueError(f"t must be an element index in 0..{self.field.q - 1}, got {self.t}")
        if self.field.pow(self.t, self.N) == 1:
            raise SmoothnessError(
                f"t = {self.t} has t^{self.N} = 1 in {self.field}; the fiber is singular "
                "(smooth locus requires t^N != 1)"
            )

    @property
    def notes(self) -> tuple[str, ...]:
        if self.field.q <= self.N:
            return (f"q = {self.field.q} <= N = {self.N}: bad reduction possible; "
                    "the count is exact but the cohomological reading may degrade",)
        return ()


@dataclass(frozen=True, slots=True)
class FiberCount:
    """Exact projective count of one fiber plus the extracted middle trace."""

    spec: FiberSpec
    projective_count: int
    trace: int | None
    strategy: str
    elapsed: float


def candidate_count(q: int, N: int) -> int:
    """Number of normalized representatives of P^{N-1}(F_q)."""
    return (q ** N - 1) // (q - 1)


def middle_trace(count: int, q: int, N: int) -> int:
    """a_q from the point count: sum_{j<N-1} q^j - count (odd N only)."""
    if N % 2 == 0:
        raise CapabilityError(
            "middle trace extraction needs an odd-dimensional fiber (odd N); even "
            "middle cohomology carries an extra diagonal class with its own sign conventions"
        )
    return sum(q ** j for j in range(N - 1)) - count


def weil_bound_ok(trace: int, q: int, N: int, weight: WeightVector | None = None) -> bool:
    """|trace| <= b * q^((N-2)/2) with b the total middle dimension, checked in integers."""
    b = total_dimension(N, weight)
    return trace * trace <= b * b * q ** (N - 2)


# ---------------------------------------------------------------------------
# the naive counter

_INNER_CAP = 1 << 21  # rows of the reusable inner block


def _split_range(total: int, workers: int) -> list[tuple[int, int]]:
    if workers <= 1 or total < workers:
        return [(0, total)]
    step = -(-total // workers)
    return [(s, min(s + step, total)) for s in range(0, total, step)]


def _count_stratum(spec: FiberSpec, lead: int, workers: int) -> int:
    """Candidates with leading-one coordinate `lead` (earlier coordinates zero).

    The last `inner` free coordinates are swept by reusable vector blocks
    (power sums and monomial values built once); the remaining outer
    coordinates are iterated, optionally split across worker threads.
    """
    field = spec.field
    q, N = field.q, spec.N
    weights = spec.weight.entries
    prime = field.m == 1
    pow_n = field.pow_table(N)
    pow_w = {w: field.pow_table(w) for w in set(weights)}
    ct = (N % q) * spec.t % q if prime else field.mul(N % field.p, spec.t)
    # a zero coordinate with positive weight kills the monomial
    mono_dead = ct == 0 or any(weights[i] > 0 for i in range(lead))

    free = N - 1 - lead
    inner = 0
    while inner < free and q ** (inner + 1) <= _INNER_CAP:
        inner += 1
    inner_count = q ** inner
    outer_count = q ** (free - inner)
    inner_pos = list(range(N - inner, N))
    outer_pos = list(range(lead + 1, N - inner))

    idx = np.arange(inner_count, dtype=np.int64)
    if prime:
        sum_inner = np.zeros(inner_count, dtype=np.int64)
        mono_inner = None if mono_dead else np.full(inner_count, ct, dtype=np.int64)
        for r, pos in enumerate(inner_pos):
            col = (idx // q ** (inner - 1 - r)) % q
            sum_inner += pow_n[col]
            if mono_inner is not None and weights[pos]:
                mono_inner = mono_inner * pow_w[weights[pos]][col] % q
    else:
        add_tab = field.add_table()
        mul_tab = field.mul_table()
        exp, log = field._exp, field._log
        sum_inner = np.zeros(inner_count, dtype=np.int32)
        for r, pos in enumerate(inner_pos):
            col = (idx // q ** (inner - 1 - r)) % q
            sum_inner = add_tab[sum_inner, pow_n[col]]
        if mono_dead:
            mono_inner = None
        else:
            alive = np.ones(inner_count, dtype=bool)
            lsum = np.full(inner_count, log[ct], dtype=np.int64)
            for r, pos in enumerate(inner_pos):
                if weights[pos]:
                    col = (idx // q ** (inner - 1 - r)) % q
                    alive &= col != 0
                    lsum += weights[pos] * log[col]  # log[0] is 0, masked by alive
            mono_inner = np.where(alive, exp[lsum % (q - 1)], 0).astype(np.int32)

    def outer_coords(o: int) -> list[int]:
        return [(o // q ** (len(outer_pos) - 1 - r)) % q for r in range(len(outer_pos))]

    def run(start: int, stop: int) -> int:
        hits = 0
        for o in range(start, stop):
            coords = outer_coords(o)
            if prime:
                s = 1  # the leading coordinate contributes 1^N
                for c in coords:
                    s += int(pow_n[c])
                mono = None
                if mono_inner is not None:
                    mono = 1
                    for c, pos in zip(coords, outer_pos):
                        if weights[pos]:
                            mono = mono * int(pow_w[weights[pos]][c]) % q
                lhs = (sum_inner + s) % q
                if mono is None or mono == 0:
                    hits += int(np.count_nonzero(lhs == 0))
                else:
                    hits += int(np.count_nonzero(lhs == mono_inner * mono % q))
            else:
                s = 1
                for c in coords:
                    s = field.add(s, int(pow_n[c]))
                lhs = add_tab[s][sum_inner]
                mono = None
                if mono_inner is not None:
                    mono = 1
                    for c, pos in zip(coords, outer_pos):
                        if weights[pos]:
                            mono = field.mul(mono, field.pow(c, weights[pos]))
                if mono is None or mono == 0:
                    hits += int(np.count_nonzero(lhs == 0))
                else:
                    hits += int(np.count_nonzero(lhs == mul_tab[mono][mono_inner]))
        return hits

    ranges = _split_range(outer_count, workers)
    if len(ranges) == 1:
        return run(0, outer_count)
    with ThreadPoolExecutor(max_workers=workers) as pool:
        return sum(pool.map(lambda r: run(r[0], r[1]), ranges))


def count_projective_naive(
    spec: FiberSpec, workers: int = 1, budget: int = DEFAULT_BUDGET
) -> FiberCount:
    """Exact count by sweeping all normalized points of P^{N-1}(F_q).

    Every point has a unique representative whose first nonzero coordinate
    is 1; the stratum with leading coordinate j contributes q^(N-1-j)
    candidates.  The equation is evaluated for every candidate through
    precomputed power tables.
    """
    q, N = spec.field.q, spec.N
    required = candidate_count(q, N)
    if required > budget:
        raise BudgetError(required, budget, what=f"naive count over GF({q})")

    started = time.perf_counter()
    total = 0
    for lead in range(N):
        total += _count_stratum(spec, lead, workers)
    trace = middle_trace(total, q, N) if N % 2 == 1 else None
    return FiberCount(spec, total, trace, "naive", time.perf_counter() - started)


# ---------------------------------------------------------------------------
# the stratified counter (classical weight, prime fields)


def _cyclic_convolve(a: np.ndarray, b: np.ndarray, q: int) -> np.ndarray:
    full = np.convolve(a, b)
    out = full[:q].copy()
    out[: q - 1] += full[q:]
    return out


def count_projective_fast(
    spec: FiberSpec, workers: int = 1, budget: int = DEFAULT_BUDGET
) -> FiberCount:
    """Stratified exact count; must agree with the naive counter.

    Zero stratum: any vanishing coordinate kills the monomial, so those
    points satisfy the diagonal equation and are counted by N-fold additive
    convolution of r(a) = #{x : x^N = a}.  Torus stratum: normalize the last
    coordinate to 1 and read off the number of solutions in the first
    coordinate from M[c][a] = #{x != 0 : x^N - c x = a}.
    """
    if not spec.weight.classical:
        raise CapabilityError("the stratified counter requires the classical weight (1,...,1)")
    if spec.field.m != 1:
        raise CapabilityError("the stratified counter requires a prime field")
    q, N, t = spec.field.q, spec.N, spec.t
    required = q ** (N - 2)
    if required > budget:
        raise BudgetError(required, budget, what=f"stratified count over GF({q})")

    started = time.perf_counter()
    xs = np.arange(q, dtype=np.int64)
    pow_n = spec.field.pow_table(N)

    # points with at least one zero coordinate, on the diagonal sum x_i^N = 0
    r = np.bincount(pow_n, minlength=q).astype(np.int64)
    r_nonzero = r.copy()
    r_nonzero[0] -= 1
    conv_all, conv_tnz = r.copy(), r_nonzero.copy()
    for _ in range(N - 1):
        conv_all = _cyclic_convolve(conv_all, r, q)
        conv_tnz = _cyclic_convolve(conv_tnz, r_nonzero, q)
    zero_stratum = (int(conv_all[0]) - 1 - int(conv_tnz[0])) // (q - 1)

    # M[c][a] = #{x in F_q^* : x^N - c x = a}
    nz = xs[1:]
    m_table = np.zeros((q, q), dtype=np.int64)
    for c in range(q):
        vals = (pow_n[nz] - c * nz) % q
        m_table[c] = np.bincount(vals, minlength=q)
    m_flat = m_table.ravel()

    # torus stratum: x_N = 1, middle coordinates y in (F_q^*)^{N-2}
    ct = (N % q) * t % q
    middle = N - 2
    total_tuples = (q - 1) ** middle
    pow_n_nz = pow_n[1:]

    def torus_range(start: int, stop: int) -> int:
        hits = 0
        for s in range(start, stop, _CHUNK):
            e = min(s + _CHUNK, stop)
            idx = np.arange(s, e, dtype=np.int64)
            ssum = np.full(e - s, 1, dtype=np.int64)  # the normalized coordinate contributes 1
            prod = np.full(e - s, ct, dtype=np.int64)
            for j in range(middle):
                col = (idx // (q - 1) ** (middle - 1 - j)) % (q - 1)
                ssum += pow_n_nz[col]
                prod = prod * (col + 1) % q
            a = (-ssum) % q
            hits += int(m_flat[prod * q + a].sum())
        return hits

    ranges = _split_range(total_tuples, workers)
    if len(ranges) == 1:
        torus = torus_range(0, total_tuples)
    else:
        with ThreadPoolExecutor(max_workers=workers) as pool:
            torus = sum(pool.map(lambda rg: torus_range(rg[0], rg[1]), ranges))

    total = zero_stratum + torus
    trace = middle_trace(total, q, N) if N % 2 == 1 else None
    return FiberCount(spec, total, trace, "fast", time.perf_counter() - started)


# ---------------------------------------------------------------------------
# points, group action, towers


@lru_cache(maxsize=4)
def enumerate_points(spec: FiberSpec, budget: int = DEFAULT_BUDGET) -> tuple[tuple[int, ...], ...]:
    """All normalized points of Y_t(F_q), as coordinate tuples (small q)."""
    q, N = spec.field.q, spec.N
    required = candidate_count(q, N)
    if required > budget:
        raise BudgetError(required, budget, what=f"point enumeration over GF({q})")
    field = spec.field
    weights = spec.weight.entries
    c = field.mul(N % field.p, spec.t)
    points = []
    from itertools import product as iproduct

    for lead in range(N):
        for tail in iproduct(range(q), repeat=N - 1 - lead):
            x = (0,) * lead + (1,) + tail
            lhs = 0
            for xi in x:
                lhs = field.add(lhs, field.pow(xi, N))
            rhs = c
            for xi, w in zip(x, weights):
                if w:
                    rhs = field.mul(rhs, field.pow(xi, w))
            if lhs == rhs:
                points.append(x)
    return tuple(points)


def group_elements(weight: WeightVector, field: FiniteField) -> tuple[tuple[int, ...], ...]:
    """Coset representatives of the symmetry group, as root-of-unity tuples.

    The group is {(z_1,...,z_N) : each z_i^N = 1, prod z_i^{w_i} = 1} modulo
    the diagonal copy of mu_N; it needs q = 1 mod N so that mu_N lies in the
    field.  The identity tuple comes first.
    """
    N = weight.modulus
    q = field.q
    if (q - 1) % N != 0:
        raise CharacteristicError(f"mu_{N} requires q = 1 mod {N}, got q = {q}")
    if N ** N > 4_000_000:
        raise CapabilityError(f"group enumeration over {N}^{N} exponent tuples is too large")
    z = field.pow(field.generator(), (q - 1) // N)
    zpow = [field.pow(z, i) for i in range(N)]
    from itertools import product as iproduct

    reps = set()
    for a in iproduct(range(N), repeat=N):
        if sum(ai * wi for ai, wi in zip(a, weight.entries)) % N:
            continue
        reps.add(min(tuple((ai + j) % N for ai in a) for j in range(N)))
    return tuple(tuple(zpow[ai] for ai in a) for a in sorted(reps))


def _normalize_point(field: FiniteField, x: Sequence[int]) -> tuple[int, ...]:
    for xi in x:
        if xi:
            inv = field.inv(xi)
            return tuple(field.mul(inv, xj) for xj in x)
    raise ValueError("projective point cannot be zero")


@lru_cache(maxsize=4)
def _point_set(spec: FiberSpec) -> frozenset:
    return frozenset(enumerate_points(spec))


@lru_cache(maxsize=4)
def _diagonal_acts_trivially(spec: FiberSpec) -> bool:
    field, N = spec.field, spec.N
    z = field.pow(field.generator(), (field.q - 1) // N)
    for j in range(N):
        zj = field.pow(z, j)
        for x in enumerate_points(spec):
            if _normalize_point(field, tuple(field.mul(zj, xi) for xi in x)) != x:
                return False
    return True


def group_action_check(
    spec: FiberSpec,
    gamma: Sequence[int],
    sample_size: int | None = None,
) -> bool:
    """Verify that coordinate scaling by gamma maps Y_t(F_q) into itself.

    gamma is a tuple of N field elements with gamma_i^N = 1 and
    prod gamma_i^{w_i} = 1.  Also checks that the diagonal mu_N acts
    trivially on the (sampled) projective points.  Requires q = 1 mod N.
    """
    field, N = spec.field, spec.N
    q = field.q
    if (q - 1) % N != 0:
        raise CharacteristicError(f"mu_{N} requires q = 1 mod {N}, got q = {q}")
    gamma = tuple(gamma)
    if len(gamma) != N:
        raise ValueError(f"gamma must have {N} coordinates")
    for g in gamma:
        if field.pow(g, N) != 1:
            raise ValueError(f"gamma entry {g} is not an N-th root of unity")
    prod = 1
    for g, w in zip(gamma, spec.weight.entries):
        prod = field.mul(prod, field.pow(g, w))
    if prod != 1:
        raise ValueError(f"gamma violates the weight relation prod gamma_i^w_i = 1: {gamma}")

    points = enumerate_points(spec)
    if sample_size is not None and sample_size < len(points):
        stride = max(1, len(points) // sample_size)
        points = points[::stride][:sample_size]
    point_set = _point_set(spec)

    for x in points:
        mapped = _normalize_point(field, tuple(field.mul(g, xi) for g, xi in zip(gamma, x)))
        if mapped not in point_set:
            return False

    # the diagonal mu_N must act trivially on projective points; this depends
    # only on the fiber, so the exhaustive check is memoized per spec
    return _diagonal_acts_trivially(spec)


def tower_counts(
    spec: FiberSpec,
    m_max: int,
    workers: int = 1,
    budget: int = DEFAULT_BUDGET,
) -> tuple[FiberCount, ...]:
    """Naive counts over the extension tower F_{q^m}, m = 1..m_max.

    The parameter must lie in the prime subfield so that it lifts to every
    level unchanged.  Refuses up front, with an estimate, when the total
    candidate work would exceed the budget.
    """
    if m_max < 1:
        raise ValueError("m_max must be >= 1")
    base = spec.field
    if spec.t >= base.p:
        raise CapabilityError(
            "tower counts need a parameter in the prime subfield (t < p); "
            f"got t = {spec.t} over {base}"
        )
    required = sum(candidate_count(base.p ** (base.m * m), spec.N) for m in range(1, m_max + 1))
    if required > budget:
        raise BudgetError(required, budget, what=f"tower to level {m_max} over {base}")

    counts = []
    for m in range(1, m_max + 1):
        level_field = base if m == 1 else field_make(base.p, base.m * m)
        level_spec = FiberSpec(spec.N, spec.weight, spec.t, level_field)
        counts.append(count_projective_naive(level_spec, workers=workers, budget=budget))
    return tuple(counts)
