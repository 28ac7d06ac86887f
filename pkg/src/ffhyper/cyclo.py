"""Exact arithmetic in Z[zeta_n], the ring of cyclotomic integers.

Character values and all hypergeometric character sums over F_q live here with
n = q-1.  Elements are kept in canonical form: the residue modulo the n-th
cyclotomic polynomial Phi_n, on the power basis 1, z, ..., z^(phi(n)-1).  Two
elements of the same order are equal iff their coefficient tuples are equal,
so every theorem check is an exact yes/no with no tolerance.  Coefficients are
Python ints, hence never overflow.
"""

from __future__ import annotations

import cmath
from dataclasses import dataclass
from functools import lru_cache

from .errors import OrderMismatch

MAX_ORDER = 4096


def _totient(n: int) -> int:
    out = n
    m = n
    d = 2
    while d * d <= m:
        if m % d == 0:
            out -= out // d
            while m % d == 0:
                m //= d
        d += 1
    if m > 1:
        out -= out // m
    return out


def _exact_div(num: list[int], den: tuple[int, ...]) -> list[int]:
    """Divide by a monic integer polynomial; remainder must vanish."""
    num = list(num)
    dd = len(den) - 1
    out = [0] * (len(num) - dd)
    for i in range(len(num) - 1, dd - 1, -1):
        c = num[i]
        out[i - dd] = c
        if c:
            for j in range(dd + 1):
                num[i - dd + j] -= c * den[j]
    assert not any(num[:dd]), "inexact cyclotomic division"
    return out


@lru_cache(maxsize=None)
def cyclotomic_poly(n: int) -> tuple[int, ...]:
    """Coefficients of Phi_n, low to high, computed by dividing x^n - 1 by the
    Phi_d of all proper divisors d of n."""
    if not 1 <= n <= MAX_ORDER:
        raise ValueError(f"order must be in 1..{MAX_ORDER}, got {n}")
    if n == 1:
        return (-1, 1)
    num = [-1] + [0] * (n - 1) + [1]
    for d in range(1, n):
        if n % d == 0:
            num = _exact_div(num, cyclotomic_poly(d))
    return tuple(num)


def _reduce(coeffs: list[int], n: int) -> tuple[int, ...]:
    phi_n = cyclotomic_poly(n)
    deg = len(phi_n) - 1
    coeffs = list(coeffs)
    for i in range(len(coeffs) - 1, deg - 1, -1):
        c = coeffs[i]
        if c:
            coeffs[i] = 0
            for j in range(deg):
                coeffs[i - deg + j] -= c * phi_n[j]
    coeffs = coeffs[:deg]
    coeffs += [0] * (deg - len(coeffs))
    return tuple(coeffs)


@dataclass(frozen=True)
class CycInt:
    order: int
    coeffs: tuple[int, ...]  # canonical, length phi(order)

    def __add__(self, other: "CycInt") -> "CycInt":
        return add(self, other)

    def __sub__(self, other: "CycInt") -> "CycInt":
        return add(self, neg(other))

    def __mul__(self, other: "CycInt") -> "CycInt":
        return mul(self, other)

    def __neg__(self) -> "CycInt":
        return neg(self)

    def is_zero(self) -> bool:
        return not any(self.coeffs)

    def __str__(self) -> str:
        return render(self)


def _check_orders(a: CycInt, b: CycInt) -> None:
    if a.order != b.order:
        raise OrderMismatch(a.order, b.order)


def from_int(n: int, m: int) -> CycInt:
    deg = _totient(n)
    return CycInt(n, _reduce([m] + [0] * (deg - 1), n))


def from_coeffs(n: int, coeffs) -> CycInt:
    """CycInt from an arbitrary-length power-basis coefficient sequence."""
    return CycInt(n, _reduce(list(coeffs), n))


def zero(n: int) -> CycInt:
    return from_int(n, 0)


def one(n: int) -> CycInt:
    return from_int(n, 1)


def zeta_pow(n: int, j: int) -> CycInt:
    j %= n
    return CycInt(n, _reduce([0] * j + [1], n))


def add(a: CycInt, b: CycInt) -> CycInt:
    _check_orders(a, b)
    return CycInt(a.order, tuple(x + y for x, y in zip(a.coeffs, b.coeffs)))


def neg(a: CycInt) -> CycInt:
    return CycInt(a.order, tuple(-x for x in a.coeffs))


def mul(a: CycInt, b: CycInt) -> CycInt:
    _check_orders(a, b)
    out = [0] * (len(a.coeffs) + len(b.coeffs) - 1)
    for i, x in enumerate(a.coeffs):
        if x:
            for j, y in enumerate(b.coeffs):
                out[i + j] += x * y
    return CycInt(a.order, _reduce(out, a.order))


def embed(a: CycInt, multiple_order: int) -> CycInt:
    """Map zeta_n to zeta_m^(m/n); a ring homomorphism Z[zeta_n] -> Z[zeta_m]."""
    m = multiple_order
    if m % a.order != 0:
        raise OrderMismatch(a.order, m)
    step = m // a.order
    out = [0] * ((len(a.coeffs) - 1) * step + 1)
    for i, x in enumerate(a.coeffs):
        out[i * step] += x
    return CycInt(m, _reduce(out, m))


def render(a: CycInt) -> str:
    """Canonical text: "c0 + c1*z + ... (z = zeta_n)"; plain integer when the
    value is rational."""
    parts = []
    for i, c in enumerate(a.coeffs):
        if c == 0:
            continue
        if i == 0:
            parts.append(str(c))
            continue
        mag = "" if abs(c) == 1 else f"{abs(c)}*"
        term = f"{mag}z" if i == 1 else f"{mag}z^{i}"
        if not parts:
            parts.append(term if c > 0 else f"-{term}")
        else:
            parts.append(f"+ {term}" if c > 0 else f"- {term}")
    if not parts:
        return "0"
    text = " ".join(parts)
    if len(parts) == 1 and parts[0].lstrip("-").isdigit():
        return text
    return f"{text} (z = zeta_{a.order})"


def to_complex(a: CycInt) -> complex:
    """Debug embedding at zeta_n = exp(2*pi*i/n)."""
    z = cmath.exp(2j * cmath.pi / a.order)
    acc = 0j
    for c in reversed(a.coeffs):
        acc = acc * z + c
    return acc
