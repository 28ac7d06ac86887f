"""Small finite fields F_q (q = p^k) as immutable lookup tables.

Elements are encoded as base-p digit integers: the element with polynomial
representation a_0 + a_1*x + ... + a_{k-1}*x^{k-1} has index
a_0 + a_1*p + ... + a_{k-1}*p^{k-1}, so for k=1 the index is just the residue
and index 1 is always the multiplicative identity.

The modulus is the lexicographically smallest monic irreducible polynomial of
degree k over Z_p, comparing coefficient tuples (a_{k-1}, ..., a_1, a_0) —
leading coefficients first, constant term last.  The generator is the smallest
element index of multiplicative order q-1.  Both choices are deterministic, so
character labels and discrete logs are reproducible across runs and machines.
"""

from __future__ import annotations

from functools import cached_property

from .errors import NotPrime, TooLarge, ZeroInverse, ZeroLog

DEFAULT_MAX_Q = 4096
_ADD_TABLE_MAX_Q = 256


def _is_prime(m: int) -> bool:
    if m < 2:
        return False
    d = 2
    while d * d <= m:
        if m % d == 0:
            return False
        d += 1
    return True


def _prime_factors(m: int) -> list[int]:
    out = []
    d = 2
    while d * d <= m:
        while m % d == 0:
            out.append(d)
            m //= d
        d += 1
    if m > 1:
        out.append(m)
    return out


# -- polynomial helpers over Z_p; coefficient lists are low -> high ------------


def _pdeg(a: list[int], p: int) -> int:
    d = len(a) - 1
    while d >= 0 and a[d] % p == 0:
        d -= 1
    return d


def _pmul_mod(a: list[int], b: list[int], mod: list[int], p: int) -> list[int]:
    k = len(mod) - 1
    out = [0] * (len(a) + len(b) - 1)
    for i, ai in enumerate(a):
        if ai:
            for j, bj in enumerate(b):
                out[i + j] = (out[i + j] + ai * bj) % p
    for i in range(len(out) - 1, k - 1, -1):
        c = out[i]
        if c:
            out[i] = 0
            for j in range(k):
                out[i - k + j] = (out[i - k + j] - c * mod[j]) % p
    out = out[:k]
    out += [0] * (k - len(out))
    return out


def _ppow_mod(a: list[int], e: int, mod: list[int], p: int) -> list[int]:
    k = len(mod) - 1
    acc = [1] + [0] * (k - 1)
    base = a[:]
    while e:
        if e & 1:
            acc = _pmul_mod(acc, base, mod, p)
        base = _pmul_mod(base, base, mod, p)
        e >>= 1
    return acc


def _pgcd(a: list[int], b: list[int], p: int) -> list[int]:
    a, b = a[:], b[:]
    while True:
        db = _pdeg(b, p)
        if db < 0:
            return a
        da = _pdeg(a, p)
        if da < db:
            a, b = b, a
            continue
        inv = pow(b[db] % p, p - 2, p)
        while da >= db:
            c = a[da] * inv % p
            for i in range(db + 1):
                a[da - db + i] = (a[da - db + i] - c * b[i]) % p
            da = _pdeg(a, p)
        a, b = b, a


def _x_frobenius(e: int, mod: list[int], p: int) -> list[int]:
    """x^(p^e) reduced mod `mod` (deg >= 2)."""
    k = len(mod) - 1
    r = [0, 1] + [0] * (k - 2)
    for _ in range(e):
        r = _ppow_mod(r, p, mod, p)
    return r


def _is_irreducible(mod: list[int], p: int) -> bool:
    k = len(mod) - 1
    if k == 1:
        return True
    x = [0, 1] + [0] * (k - 2)
    xk = _x_frobenius(k, mod, p)
    if any((xk[i] - x[i]) % p for i in range(k)):
        return False
    for ell in set(_prime_factors(k)):
        xe = _x_frobenius(k // ell, mod, p)
        diff = [(xe[i] - x[i]) % p for i in range(k)]
        g = _pgcd(mod[:], diff + [0], p)
        if _pdeg(g, p) > 0:
            return False
    return True


def _smallest_modulus(p: int, k: int) -> tuple[int, ...]:
    if k == 1:
        return (0, 1)
    # lex order on (a_{k-1}, ..., a_0); digits stored low -> high
    key = [0] * k
    while True:
        mod = list(reversed(key)) + [1]
        if _is_irreducible(mod, p):
            return tuple(mod)
        i = k - 1
        while i >= 0 and key[i] == p - 1:
            key[i] = 0
            i -= 1
        if i < 0:
            raise AssertionError("no irreducible polynomial found")  # unreachable
        key[i] += 1


class FieldTable:
    """F_q with exp/log tables.  Immutable after construction; do not mutate."""

    def __init__(self, p: int, k: int):
        self.p = p
        self.k = k
        self.q = q = p**k
        self.n_chars = q - 1  # order of F_q*, also the root-of-unity order
        self.modulus = _smallest_modulus(p, k)

        powers = tuple(p**i for i in range(k))
        self._powers = powers

        def digits(i: int) -> list[int]:
            return [(i // pw) % p for pw in powers]

        def index(dv: list[int]) -> int:
            return sum(d * pw for d, pw in zip(dv, powers))

        self._digits = digits
        self._index = index

        mod = list(self.modulus)

        def mul_raw(a: int, b: int) -> int:
            if a == 0 or b == 0:
                return 0
            return index(_pmul_mod(digits(a), digits(b), mod, p))

        N = q - 1
        fac = set(_prime_factors(N)) if N > 1 else set()

        def order_is_full(g: int) -> bool:
            def powm(a: int, e: int) -> int:
                r = 1
                while e:
                    if e & 1:
                        r = mul_raw(r, a)
                    a = mul_raw(a, a)
                    e >>= 1
                return r

            return powm(g, N) == 1 and all(powm(g, N // ell) != 1 for ell in fac)

        self.generator = next(g for g in range(1, q) if order_is_full(g))

        exp = [1] * N
        for j in range(1, N):
            exp[j] = mul_raw(exp[j - 1], self.generator)
        log = [-1] * q
        for j, v in enumerate(exp):
            log[v] = j
        self.exp_table = tuple(exp)
        self.log_table = tuple(log)

    # -- arithmetic ------------------------------------------------------------

    def add(self, x: int, y: int) -> int:
        if self.k == 1:
            return (x + y) % self.p
        p = self.p
        return self._index([(a + b) % p for a, b in zip(self._digits(x), self._digits(y))])

    def neg(self, x: int) -> int:
        if self.k == 1:
            return (-x) % self.p
        p = self.p
        return self._index([(-a) % p for a in self._digits(x)])

    def sub(self, x: int, y: int) -> int:
        return self.add(x, self.neg(y))

    def mul(self, x: int, y: int) -> int:
        if x == 0 or y == 0:
            return 0
        N = self.q - 1
        return self.exp_table[(self.log_table[x] + self.log_table[y]) % N]

    def inv(self, x: int) -> int:
        if x == 0:
            raise ZeroInverse()
        return self.exp_table[(-self.log_table[x]) % (self.q - 1)]

    def div(self, x: int, y: int) -> int:
        return self.mul(x, self.inv(y))

    def dlog(self, x: int) -> int:
        if x == 0:
            raise ZeroLog()
        return self.log_table[x]

    @cached_property
    def add_table(self) -> tuple[tuple[int, ...], ...]:
        if self.q > _ADD_TABLE_MAX_Q:
            raise TooLarge(self.q, _ADD_TABLE_MAX_Q)
        return tuple(tuple(self.add(x, y) for y in range(self.q)) for x in range(self.q))

    @cached_property
    def mul_table(self) -> tuple[tuple[int, ...], ...]:
        if self.q > _ADD_TABLE_MAX_Q:
            raise TooLarge(self.q, _ADD_TABLE_MAX_Q)
        return tuple(tuple(self.mul(x, y) for y in range(self.q)) for x in range(self.q))

    def __eq__(self, other):
        return (
            isinstance(other, FieldTable)
            and self.p == other.p
            and self.k == other.k
            and self.modulus == other.modulus
            and self.generator == other.generator
            and self.exp_table == other.exp_table
        )

    def __hash__(self):
        return hash((self.p, self.k))

    def __repr__(self):
        return f"FieldTable(q={self.q}={self.p}^{self.k}, g={self.generator})"


def split_prime_power(q: int) -> tuple[int, int]:
    """q -> (p, k) with q = p^k, or ValueError if q is not a prime power."""
    if q < 2:
        raise ValueError(f"field order must be >= 2, got {q}")
    fac = set(_prime_factors(q))
    if len(fac) != 1:
        raise ValueError(f"{q} is not a prime power")
    p = fac.pop()
    k = 0
    while q > 1:
        q //= p
        k += 1
    return p, k


def build_field(p: int, k: int, max_q: int = DEFAULT_MAX_Q) -> FieldTable:
    if k < 1:
        raise ValueError(f"extension degree must be >= 1, got {k}")
    if not _is_prime(p):
        raise NotPrime(p)
    if p**k > max_q:
        raise TooLarge(p**k, max_q)
    return FieldTable(p, k)


def add(f: FieldTable, x: int, y: int) -> int:
    return f.add(x, y)


def mul(f: FieldTable, x: int, y: int) -> int:
    return f.mul(x, y)


def neg(f: FieldTable, x: int) -> int:
    return f.neg(x)


def inv(f: FieldTable, x: int) -> int:
    return f.inv(x)


def dlog(f: FieldTable, x: int) -> int:
    return f.dlog(x)
