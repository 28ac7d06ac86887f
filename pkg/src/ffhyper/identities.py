"""Identity registry and verification engine.

Each registered identity is an equation between two CycInt-valued expressions
in a tuple of character exponents (`chars`) and field elements (`elems`,
points first, then any extra scalars such as a shared evaluation point or a
generating-function variable).  The engine enumerates or samples assignments,
skips those violating the identity's stated domain constraints, and compares
both sides exactly.

Modes:
  exhaustive -- every assignment in the slot space (size-capped);
  sampled    -- `count` seeded-uniform draws that satisfy the constraints;
  boundary   -- the complement: only constraint-violating assignments, where
                mismatches and evaluation errors are recorded, not failed on.

Reports serialize to JSON with a fixed key order; wall time is zeroed unless
timings are requested, so repeated runs are byte-identical.
"""

from __future__ import annotations

import itertools
import random
from dataclasses import dataclass
from time import perf_counter
from typing import Callable

from . import cyclo, ff_core, hyperff
from .cyclo import CycInt
from .errors import CapExceeded, FFHyperError, InexactDivision, UnknownIdentity
from .ff_core import FieldTable

DEFAULT_CAP = 10_000_000
DEFAULT_SAMPLES = 500


# -- evaluation context -------------------------------------------------------------


class _Ev:
    """Per-field scratch: kit tables plus an F_D vector memo."""

    def __init__(self, f: FieldTable):
        self.f = f
        self.kit = hyperff._kit(f)
        self.N = f.n_chars
        self.q = f.q
        self.neg1 = self.kit.neg1
        self._fd: dict = {}

    def fd(self, mA, mBs, mC, xs):
        N = self.N
        key = (mA % N, tuple(m % N for m in mBs), mC % N, tuple(xs))
        v = self._fd.get(key)
        if v is None:
            v = hyperff._fd_vec(self.kit, key[0], key[1], key[2], key[3])
            self._fd[key] = v
        return v

    def binom(self, ma, mb):
        return hyperff._binom_vec(self.kit, ma, mb)

    def mono(self, pairs):
        return hyperff._mono_exp(self.kit, pairs)


_EVS: dict[FieldTable, _Ev] = {}


def _ev_for(f: FieldTable) -> _Ev:
    ev = _EVS.get(f)
    if ev is None:
        ev = _Ev(f)
        _EVS[f] = ev
    return ev


_FIELDS: dict[tuple[int, int | None], FieldTable] = {}


def _field_for_q(q: int, max_q: int | None = None) -> FieldTable:
    f = _FIELDS.get((q, max_q))
    if f is None:
        p, k = ff_core.split_prime_power(q)
        f = ff_core.build_field(p, k, max_q) if max_q else ff_core.build_field(p, k)
        _FIELDS[(q, max_q)] = f
    return f


def _addv(out: list[int], vec, e: int | None, scale: int = 1) -> None:
    """out += scale * zeta^e * vec; no-op when the monomial prefactor is zero."""
    if e is None:
        return
    N = len(out)
    e %= N
    for i, v in enumerate(vec):
        if v:
            out[(i + e) % N] += scale * v


def _addm(out: list[int], e: int | None, scale: int = 1) -> None:
    if e is not None:
        out[e % len(out)] += scale


def _div_exact(ev: _Ev, vec, d: int) -> CycInt:
    """Reduce to canonical form, then divide every coordinate exactly by d."""
    c = hyperff._to_cyc(ev.N, list(vec))
    if any(x % d for x in c.coeffs):
        raise InexactDivision(d)
    return CycInt(c.order, tuple(x // d for x in c.coeffs))


# -- identity descriptors -------------------------------------------------------------


@dataclass(frozen=True)
class IdentityDescriptor:
    id: str
    note: str
    n_min: int
    n_max: int | None  # None = no intrinsic bound
    heavy: bool  # inner character/theta loop: exhaustive n should stay <= 2
    chars: Callable[[int], int]
    points: Callable[[int], int]
    extras: Callable[[int], int]
    constraints: tuple[tuple[str, Callable], ...]
    lhs: Callable
    rhs: Callable

    def allows_n(self, n: int) -> bool:
        return n >= self.n_min and (self.n_max is None or n <= self.n_max)

    def slot_space(self, q: int, n: int) -> int:
        return (q - 1) ** self.chars(n) * q ** (self.points(n) + self.extras(n))


_REGISTRY: dict[str, IdentityDescriptor] = {}


def _reg(id, note, lhs, rhs, *, n_min=1, n_max=None, heavy=False,
         chars=lambda n: n + 2, points=lambda n: n, extras=lambda n: 0,
         constraints=()):
    _REGISTRY[id] = IdentityDescriptor(
        id=id, note=note, n_min=n_min, n_max=n_max, heavy=heavy,
        chars=chars, points=points, extras=extras,
        constraints=tuple(constraints), lhs=lhs, rhs=rhs)


# constraint predicates (cs = character exponents, es = elements)

def _c_b1_nontriv(ev, n, cs, es):
    return cs[2] % ev.N != 0


def _c_b2_nontriv(ev, n, cs, es):
    return cs[3] % ev.N != 0


def _c_xn_ne_1(ev, n, cs, es):
    return es[n - 1] != 1


def _c_all_x_ne_1(ev, n, cs, es):
    return all(x != 1 for x in es[:n])


def _c_t_ne_1(ev, n, cs, es):
    return es[-1] != 1


# -- the identities -------------------------------------------------------------------
# Slot layout unless noted: cs = (A, C, B_1..B_n), es = (x_1..x_n).


def _t21_lhs(ev, n, cs, es):
    return ev.fd(cs[0], cs[2:], cs[1], es)


def _t21_rhs(ev, n, cs, es):
    vec = hyperff._charsum_vec(ev.kit, cs[0], cs[2:], cs[1], es)
    return _div_exact(ev, vec, (ev.q - 1) ** n)


_reg("t2.1", "series form of F_D agrees with its full character-sum expansion",
     _t21_lhs, _t21_rhs, heavy=True)


def _ffbeta_lhs(ev, n, cs, es):
    A, C, Bs = cs[0], cs[1], cs[2:]
    x1, x2 = es[0], es[1]
    N, kit = ev.N, ev.kit
    out = [0] * N
    if x1 == 0 or x2 == 0:
        return out
    merged = (Bs[0] + Bs[1],) + Bs[2:]
    for u in range(2, ev.q):  # chi(0) = 0 kills u = 0 and u = 1
        e = Bs[0] * kit.L[u] + Bs[1] * kit.L[kit.one_minus[u]]
        xm = kit.add(kit.mul(u, x1), kit.mul(kit.one_minus[u], x2))
        _addv(out, ev.fd(A, merged, C, (xm,) + es[2:]), e)
    return out


def _ffbeta_rhs(ev, n, cs, es):
    A, C, Bs = cs[0], cs[1], cs[2:]
    x1, x2 = es[0], es[1]
    N, kit = ev.N, ev.kit
    m12 = -(Bs[0] + Bs[1])
    out = hyperff._conv(ev.binom(m12, -Bs[0]), ev.fd(A, Bs, C, es), N)
    if x1 != 0 and x2 != 0:
        e = ev.mono([(Bs[0], ev.neg1), (m12, kit.sub(x1, x2))])
        _addv(out, ev.fd(A + m12, Bs[2:], C + m12, es[2:]), e, -1)
    e = ev.mono([(Bs[0], x2), (Bs[1], kit.negt[x1]), (m12, kit.sub(x2, x1))])
    _addv(out, ev.fd(A, Bs[2:], C, es[2:]), e, -1)
    return out


_reg("t3.ff-beta", "beta-type u-convolution against F_D with the two lead B-slots merged",
     _ffbeta_lhs, _ffbeta_rhs, n_min=2,
     constraints=(("B1 != eps", _c_b1_nontriv), ("B2 != eps", _c_b2_nontriv)))


def _ksum_lhs(ev, n, cs, es):
    return ev.fd(cs[0], cs[2:], cs[1], es)


def _ksum_rhs(ev, n, cs, es):
    A, C, Bs = cs[0], cs[1], cs[2:]
    xn = es[-1]
    N = ev.N
    out = [0] * N
    if xn != 0:
        lx = ev.kit.L[xn]
        for ch in range(N):
            term = hyperff._conv(ev.binom(Bs[-1] + ch, ch),
                                 ev.fd(A + ch, Bs[:-1], C + ch, es[:-1]), N)
            _addv(out, term, ch * lx)
    return _div_exact(ev, out, ev.q - 1)


_reg("t3.ksum", "character sum over the last slot contracts F_D^(n) to shifted F_D^(n-1)",
     _ksum_lhs, _ksum_rhs, heavy=True)


def _epsred_lhs(ev, n, cs, es):
    A, C, Bs = cs[0], cs[1], cs[2:]  # n-1 free B slots; last is eps
    return ev.fd(A, Bs + (0,), C, es)


def _epsred_rhs(ev, n, cs, es):
    A, C, Bs = cs[0], cs[1], cs[2:]
    xn = es[-1]
    kit, N = ev.kit, ev.N
    out = [0] * N
    if xn != 0:
        _addv(out, ev.fd(A, Bs, C, es[:-1]), 0)
    e = ev.mono([(sum(Bs) - C, xn), (C - A, kit.one_minus[xn]),
                 *((-mb, kit.sub(xn, x)) for mb, x in zip(Bs, es[:-1])),
                 *((0, x) for x in es[:-1])])
    _addm(out, e, -1)
    return out


_reg("t4.eps-reduce", "trivial last character: F_D drops to F_D^(n-1) minus a monomial",
     _epsred_lhs, _epsred_rhs, chars=lambda n: n + 1)


def _ceqa_lhs(ev, n, cs, es):
    A, Bs = cs[0], cs[1:]
    return ev.fd(A, Bs, A, es)


def _ceqa_rhs(ev, n, cs, es):
    A, Bs = cs[0], cs[1:]
    xn = es[-1]
    kit, N = ev.kit, ev.N
    out = [0] * N
    e = ev.mono([*((-mb, kit.one_minus[x]) for mb, x in zip(Bs, es)),
                 *((0, x) for x in es)])
    _addm(out, e, -1)
    if xn != 0:
        inv = kit.inv(xn)
        e = ev.mono([(Bs[-1], ev.neg1), (-A, xn)])
        _addv(out, ev.fd(A, Bs[:-1], A - Bs[-1],
                         tuple(kit.mul(x, inv) for x in es[:-1])), e)
    return out


_reg("t4.c-eq-a", "C = A evaluation: the last B-slot is shifted out of C",
     _ceqa_lhs, _ceqa_rhs, chars=lambda n: n + 1)


def _oneminus_lhs(ev, n, cs, es):
    kit = ev.kit
    if any(kit.one_minus[x] == 0 for x in es):
        return [0] * ev.N
    return ev.fd(cs[0], cs[2:], cs[1], es)


def _oneminus_rhs(ev, n, cs, es):
    A, C, Bs = cs[0], cs[1], cs[2:]
    kit, N = ev.kit, ev.N
    out = [0] * N
    e = ev.mono([(sum(Bs), ev.neg1), *((0, x) for x in es)])
    _addv(out, ev.fd(A, Bs, A + sum(Bs) - C,
                     tuple(kit.one_minus[x] for x in es)), e)
    return out


_reg("t4.one-minus-x", "x -> 1-x transformation with C -> A B_1..B_n C^-1",
     _oneminus_lhs, _oneminus_rhs)


def _pfaff_lhs(ev, n, cs, es):
    return ev.fd(cs[0], cs[2:], cs[1], es)


def _pfaff_rhs(ev, n, cs, es):
    A, C, Bs = cs[0], cs[1], cs[2:]
    kit, N = ev.kit, ev.N
    out = [0] * N
    e = ev.mono([(C, ev.neg1),
                 *((-mb, kit.one_minus[x]) for mb, x in zip(Bs, es))])
    args = tuple(kit.div(x, kit.sub(x, 1)) for x in es)
    _addv(out, ev.fd(C - A, Bs, C, args), e)
    return out


_reg("t4.pfaff", "x -> x/(x-1) transformation with A -> A^-1 C and a B-monomial prefactor",
     _pfaff_lhs, _pfaff_rhs, constraints=(("all x_j != 1", _c_all_x_ne_1),))


def _lastpivot_lhs(ev, n, cs, es):
    kit = ev.kit
    xn = es[-1]
    if any(kit.sub(xn, x) == 0 for x in es[:-1]):
        return [0] * ev.N
    return ev.fd(cs[0], cs[2:], cs[1], es)


def _lastpivot_rhs(ev, n, cs, es):
    A, C, Bs = cs[0], cs[1], cs[2:]
    kit, N = ev.kit, ev.N
    xn = es[-1]
    out = [0] * N
    e = ev.mono([(-A, kit.one_minus[xn]), *((0, x) for x in es[:-1])])
    d = kit.inv(kit.sub(xn, 1))
    args = tuple(kit.mul(kit.sub(xn, x), d) for x in es[:-1]) + (kit.mul(xn, d),)
    _addv(out, ev.fd(A, Bs[:-1] + (C - sum(Bs),), C, args), e)
    return out


_reg("t4.last-pivot", "pivot on the last point: x_j -> (x_n-x_j)/(x_n-1)",
     _lastpivot_lhs, _lastpivot_rhs, constraints=(("x_n != 1", _c_xn_ne_1),))


def _c35_lhs(ev, n, cs, es):
    A, Bs = cs[0], cs[1:]
    kit = ev.kit
    xn = es[-1]
    if any(kit.sub(xn, x) == 0 for x in es[:-1]):
        return [0] * ev.N
    return ev.fd(A, Bs, sum(Bs), es)


def _c35_rhs(ev, n, cs, es):
    A, Bs = cs[0], cs[1:]
    kit, N = ev.kit, ev.N
    xn = es[-1]
    out = [0] * N
    e = ev.mono([(-A, kit.one_minus[xn]), *((0, x) for x in es)])
    d = kit.inv(kit.sub(xn, 1))
    args = tuple(kit.mul(kit.sub(xn, x), d) for x in es[:-1])
    _addv(out, ev.fd(A, Bs[:-1], sum(Bs), args), e)
    e = ev.mono([*((-mb, kit.negt[x]) for mb, x in zip(Bs, es)),
                 *((0, kit.sub(xn, x)) for x in es[:-1])])
    _addm(out, e, -1)
    return out


_reg("t4.reduce-c35", "C = B_1..B_n reduction dropping the last slot, minus a monomial",
     _c35_lhs, _c35_rhs, chars=lambda n: n + 1,
     constraints=(("x_n != 1", _c_xn_ne_1),))


def _pivot2_lhs(ev, n, cs, es):
    kit = ev.kit
    xn = es[-1]
    if any(kit.sub(xn, x) == 0 for x in es[:-1]):
        return [0] * ev.N
    return ev.fd(cs[0], cs[2:], cs[1], es)


def _pivot2_rhs(ev, n, cs, es):
    A, C, Bs = cs[0], cs[1], cs[2:]
    kit, N = ev.kit, ev.N
    xn = es[-1]
    out = [0] * N
    e = ev.mono([(C, ev.neg1), (C - A - Bs[-1], kit.one_minus[xn]),
                 *((-mb, kit.one_minus[x]) for mb, x in zip(Bs[:-1], es[:-1])),
                 *((0, x) for x in es[:-1])])
    args = tuple(kit.div(kit.sub(xn, x), kit.one_minus[x]) for x in es[:-1]) + (xn,)
    _addv(out, ev.fd(C - A, Bs[:-1] + (C - sum(Bs),), C, args), e)
    return out


_reg("t4.pivot2", "pivot with x_j -> (x_n-x_j)/(1-x_j) and A -> C A^-1",
     _pivot2_lhs, _pivot2_rhs, constraints=(("all x_j != 1", _c_all_x_ne_1),))


def _c37_lhs(ev, n, cs, es):
    A, Bs = cs[0], cs[1:]
    kit = ev.kit
    xn = es[-1]
    if any(kit.sub(xn, x) == 0 for x in es[:-1]):
        return [0] * ev.N
    return ev.fd(A, Bs, sum(Bs), es)


def _c37_rhs(ev, n, cs, es):
    A, Bs = cs[0], cs[1:]
    kit, N = ev.kit, ev.N
    SB = sum(Bs)
    xn = es[-1]
    out = [0] * N
    e = ev.mono([(SB, ev.neg1), (SB - Bs[-1] - A, kit.one_minus[xn]),
                 *((-mb, kit.one_minus[x]) for mb, x in zip(Bs[:-1], es[:-1])),
                 *((0, x) for x in es)])
    args = tuple(kit.div(kit.sub(xn, x), kit.one_minus[x]) for x in es[:-1])
    _addv(out, ev.fd(SB - A, Bs[:-1], SB, args), e)
    e = ev.mono([(0, kit.sub(xn, 1)),
                 *((-mb, kit.negt[x]) for mb, x in zip(Bs, es)),
                 *((0, kit.sub(xn, x)) for x in es[:-1])])
    _addm(out, e, -1)
    return out


_reg("t4.reduce-c37", "second C = B_1..B_n reduction with (x_n-x_j)/(1-x_j) arguments",
     _c37_lhs, _c37_rhs, chars=lambda n: n + 1,
     constraints=(("all x_j != 1", _c_all_x_ne_1),))


def _evalequal_lhs(ev, n, cs, es):
    return ev.fd(cs[0], cs[2:], cs[1], (es[0],) * n)


def _evalequal_rhs(ev, n, cs, es):
    return ev.fd(cs[0], (sum(cs[2:]),), cs[1], (es[0],))


_reg("t4.eval-equal-x", "all points equal: F_D collapses to a single merged slot",
     _evalequal_lhs, _evalequal_rhs, points=lambda n: 0, extras=lambda n: 1)


def _evalxn1_lhs(ev, n, cs, es):
    return ev.fd(cs[0], cs[2:], cs[1], es + (1,))


def _evalxn1_rhs(ev, n, cs, es):
    A, C, Bs = cs[0], cs[1], cs[2:]
    out = [0] * ev.N
    _addv(out, ev.fd(A, Bs[:-1], C - Bs[-1], es),
          (Bs[-1] % ev.N) * ev.kit.L[ev.neg1])
    return out


_reg("t4.eval-xn1", "last point 1: the slot is absorbed into C",
     _evalxn1_lhs, _evalxn1_rhs, points=lambda n: n - 1)


def _evalall1_lhs(ev, n, cs, es):
    return ev.fd(cs[0], cs[2:], cs[1], (1,) * n)


def _evalall1_rhs(ev, n, cs, es):
    A, C, Bs = cs[0], cs[1], cs[2:]
    out = [0] * ev.N
    _addv(out, ev.binom(A, C - sum(Bs)), (sum(Bs) % ev.N) * ev.kit.L[ev.neg1])
    return out


_reg("t4.eval-all1", "all points 1: closed binomial form",
     _evalall1_lhs, _evalall1_rhs, points=lambda n: 0)


def _c62_lhs(ev, n, cs, es):
    A, Bs = cs[0], cs[1:]
    return ev.fd(A, Bs, A, (es[0],) * n)


def _c62_rhs(ev, n, cs, es):
    A, Bs = cs[0], cs[1:]
    x = es[0]
    kit, N = ev.kit, ev.N
    SB = sum(Bs)
    out = [0] * N
    _addm(out, ev.mono([(0, x), (-SB, kit.one_minus[x])]), -1)
    _addv(out, ev.binom(A, SB), ev.mono([(SB, ev.neg1), (-A, x)]))
    return out


_reg("t4.c62", "C = A with equal points: two-term closed form",
     _c62_lhs, _c62_rhs, chars=lambda n: n + 1,
     points=lambda n: 0, extras=lambda n: 1)


def _c63_lhs(ev, n, cs, es):
    A, Bs = cs[0], cs[1:]
    return ev.fd(A, Bs, sum(Bs), (es[0],) * n)


def _c63_rhs(ev, n, cs, es):
    A, Bs = cs[0], cs[1:]
    x = es[0]
    kit, N = ev.kit, ev.N
    SB = sum(Bs)
    out = [0] * N
    _addv(out, ev.binom(A, SB), ev.mono([(0, x), (-A, kit.one_minus[x])]))
    _addm(out, ev.mono([(-SB, kit.negt[x])]), -1)
    if x == 1 and A % N == 0:
        _addm(out, (SB % N) * kit.L[ev.neg1], ev.q - 1)
    return out


_reg("t4.c63", "C = B_1..B_n with equal points: closed form plus delta at x = 1, A = eps",
     _c63_lhs, _c63_rhs, chars=lambda n: n + 1,
     points=lambda n: 0, extras=lambda n: 1)


def _gf_lhs(variant):
    def lhs(ev, n, cs, es):
        return hyperff._genfn_lhs_vec(ev.kit, cs[0], cs[2:], cs[1], es[:-1], es[-1], variant)
    return lhs


def _gf_rhs(variant):
    def rhs(ev, n, cs, es):
        return hyperff._genfn_rhs_vec(ev.kit, cs[0], cs[2:], cs[1], es[:-1], es[-1], variant)
    return rhs


_reg("t5.gf1", "generating function over the A-slot (t != 1)",
     _gf_lhs("T41"), _gf_rhs("T41"), heavy=True, extras=lambda n: 1,
     constraints=(("t != 1", _c_t_ne_1),))
_reg("t5.gf2", "generating function over the last B-slot, with a delta term at t = 1",
     _gf_lhs("T42"), _gf_rhs("T42"), heavy=True, extras=lambda n: 1)
_reg("t5.gf3", "generating function over the C-slot, with a delta term at 1 + t = 0",
     _gf_lhs("T43"), _gf_rhs("T43"), heavy=True, extras=lambda n: 1)


# binomial-coefficient facts; cs layout noted per entry, no point dependence on n

def _f2_lhs(ev, n, cs, es):
    return ev.binom(cs[0], cs[1])


def _f2_rhs(ev, n, cs, es):
    return ev.binom(cs[0], cs[0] - cs[1])


_reg("p2.f2", "{A choose B} = {A choose A B^-1}", _f2_lhs, _f2_rhs,
     n_min=0, n_max=0, chars=lambda n: 2, points=lambda n: 0)


def _f3_rhs(ev, n, cs, es):
    A, B = cs
    out = [0] * ev.N
    _addv(out, ev.binom(-B, -A), ((A + B) % ev.N) * ev.kit.L[ev.neg1])
    return out


_reg("p2.f3", "{A choose B} = AB(-1) {B^-1 choose A^-1}", _f2_lhs, _f3_rhs,
     n_min=0, n_max=0, chars=lambda n: 2, points=lambda n: 0)


def _f4_rhs(ev, n, cs, es):
    out = [0] * ev.N
    out[0] = -1 + (ev.q - 1 if cs[0] % ev.N == 0 else 0)
    return out


_reg("p2.f4-eps", "{A choose eps} = -1 + (q-1) delta(A)",
     lambda ev, n, cs, es: ev.binom(cs[0], 0), _f4_rhs,
     n_min=0, n_max=0, chars=lambda n: 1, points=lambda n: 0)
_reg("p2.f4-self", "{A choose A} = -1 + (q-1) delta(A)",
     lambda ev, n, cs, es: ev.binom(cs[0], cs[0]), _f4_rhs,
     n_min=0, n_max=0, chars=lambda n: 1, points=lambda n: 0)


def _prod_lhs(ev, n, cs, es):
    A, B, C = cs
    return hyperff._conv(ev.binom(A, B), ev.binom(C, A), ev.N)


def _prod_rhs(ev, n, cs, es):
    A, B, C = cs
    N, q = ev.N, ev.q
    out = hyperff._conv(ev.binom(C, B), ev.binom(C - B, A - B), N)
    if A % N == 0:
        _addm(out, (B % N) * ev.kit.L[ev.neg1], -(q - 1))
    if (B - C) % N == 0:
        _addm(out, ((A + B) % N) * ev.kit.L[ev.neg1], q - 1)
    return out


_reg("p2.prod", "binomial product re-association with two delta corrections",
     _prod_lhs, _prod_rhs, n_min=0, n_max=0, chars=lambda n: 3, points=lambda n: 0)


def _binthm_lhs(ev, n, cs, es):
    A, x = cs[0], es[0]
    N = ev.N
    out = [0] * N
    if x != 0:
        lx = ev.kit.L[x]
        for ch in range(N):
            _addv(out, ev.binom(A + ch, ch), ch * lx)
    return out


def _binthm_rhs(ev, n, cs, es):
    A, x = cs[0], es[0]
    out = [0] * ev.N
    _addm(out, ev.mono([(0, x), (-A, ev.kit.one_minus[x])]), ev.q - 1)
    return out


_reg("p2.binthm", "line sum of {A chi choose chi} chi(x) equals (q-1) A^-1(1-x) on x != 0",
     _binthm_lhs, _binthm_rhs, n_min=0, n_max=0,
     chars=lambda n: 1, points=lambda n: 1)


def _linesum_lhs(ev, n, cs, es):
    A, B, x = cs[0], cs[1], es[0]
    N = ev.N
    out = [0] * N
    if x != 0:
        lx = ev.kit.L[x]
        for ch in range(N):
            _addv(out, ev.binom(A + ch, B + ch), ch * lx)
    return out


def _linesum_rhs(ev, n, cs, es):
    A, B, x = cs[0], cs[1], es[0]
    out = [0] * ev.N
    _addm(out, ev.mono([(-B, x), (B - A, ev.kit.one_minus[x])]), ev.q - 1)
    return out


_reg("p2.linesum", "two-slot line sum {A chi choose B chi} chi(x) in closed form",
     _linesum_lhs, _linesum_rhs, n_min=0, n_max=0,
     chars=lambda n: 2, points=lambda n: 1)


# -- engine ---------------------------------------------------------------------------


def list_identities() -> tuple[IdentityDescriptor, ...]:
    return tuple(_REGISTRY.values())


def get_identity(ident: str) -> IdentityDescriptor:
    desc = _REGISTRY.get(ident)
    if desc is None:
        raise UnknownIdentity(ident)
    return desc


@dataclass(frozen=True)
class TheoremReport:
    id: str
    q: int
    n: int
    mode: str
    seed: int | None
    tested: int
    excluded: int
    failures: tuple[dict, ...]
    ms: float
    mismatches: int | None = None  # boundary mode only
    undefined: int | None = None  # boundary mode only

    @property
    def ok(self) -> bool:
        return not self.failures

    def to_dict(self, timings: bool = False) -> dict:
        d = {"id": self.id, "q": self.q, "n": self.n, "mode": self.mode,
             "seed": self.seed, "tested": self.tested, "excluded": self.excluded,
             "failures": [dict(x) for x in self.failures],
             "ms": round(self.ms, 3) if timings else 0}
        if self.mode == "boundary":
            d["mismatches"] = self.mismatches
            d["undefined"] = self.undefined
        return d


def _canon(ev: _Ev, val) -> CycInt:
    if isinstance(val, CycInt):
        return val
    return hyperff._to_cyc(ev.N, list(val))


def _fail_entry(ev, n, cs, es, lc, rc) -> dict:
    return {"q": ev.q, "n": n, "chars": list(cs), "elems": list(es),
            "lhs": cyclo.render(lc), "rhs": cyclo.render(rc)}


def _check(desc, ev, n, cs, es, corrupt: bool):
    lv = desc.lhs(ev, n, cs, es)
    rv = desc.rhs(ev, n, cs, es)
    if not corrupt and not isinstance(lv, CycInt) and not isinstance(rv, CycInt):
        if list(lv) == list(rv):
            return True, None, None
    lc, rc = _canon(ev, lv), _canon(ev, rv)
    if corrupt:
        rc = rc + cyclo.one(ev.N)
    return (lc - rc).is_zero(), lc, rc


def _run_one(desc, f: FieldTable, n: int, mode: str, seed: int, count: int,
             cap: int, corrupt_rhs: bool) -> TheoremReport:
    t0 = perf_counter()
    ev = _ev_for(f)
    N, q = f.n_chars, f.q
    nc = desc.chars(n)
    ne = desc.points(n) + desc.extras(n)
    tested = excluded = 0
    failures: list[dict] = []
    mismatches = undefined = None

    def passes(cs, es):
        return all(fn(ev, n, cs, es) for _, fn in desc.constraints)

    if mode == "exhaustive":
        size = desc.slot_space(q, n)
        if size > cap:
            raise CapExceeded(size, cap)
        for cs in itertools.product(range(N), repeat=nc):
            for es in itertools.product(range(q), repeat=ne):
                if not passes(cs, es):
                    excluded += 1
                    continue
                tested += 1
                ok, lc, rc = _check(desc, ev, n, cs, es, corrupt_rhs)
                if not ok:
                    failures.append(_fail_entry(ev, n, cs, es, lc, rc))
    elif mode == "sampled":
        rng = random.Random(f"{seed}:{desc.id}:{q}:{n}")
        attempts_cap = count * 1000 + 1000
        attempts = 0
        while tested < count:
            attempts += 1
            if attempts > attempts_cap:
                raise CapExceeded(attempts, attempts_cap)
            cs = tuple(rng.randrange(N) for _ in range(nc))
            es = tuple(rng.randrange(q) for _ in range(ne))
            if not passes(cs, es):
                excluded += 1
                continue
            tested += 1
            ok, lc, rc = _check(desc, ev, n, cs, es, corrupt_rhs)
            if not ok:
                failures.append(_fail_entry(ev, n, cs, es, lc, rc))
    elif mode == "boundary":
        # complement domain: only constraint-violating assignments; mismatches
        # and evaluation errors are recorded, never failed on.
        mismatches = undefined = 0
        size = desc.slot_space(q, n)
        if size > cap:
            raise CapExceeded(size, cap)
        for cs in itertools.product(range(N), repeat=nc):
            for es in itertools.product(range(q), repeat=ne):
                if passes(cs, es):
                    excluded += 1
                    continue
                try:
                    ok, _, _ = _check(desc, ev, n, cs, es, corrupt_rhs)
                except FFHyperError:
                    undefined += 1
                    continue
                tested += 1
                if not ok:
                    mismatches += 1
    else:
        raise ValueError(f"unknown mode {mode!r}")

    failures.sort(key=lambda d: (d["chars"], d["elems"]))
    return TheoremReport(
        id=desc.id, q=q, n=n, mode=mode,
        seed=seed if mode == "sampled" else None,
        tested=tested, excluded=excluded, failures=tuple(failures),
        ms=(perf_counter() - t0) * 1000.0,
        mismatches=mismatches, undefined=undefined)


def verify(ident: str, q_list, mode: str = "exhaustive", n_list=None,
           seed: int = 0, count: int = DEFAULT_SAMPLES, cap: int = DEFAULT_CAP,
           corrupt_rhs: bool = False, max_q: int | None = None) -> list[TheoremReport]:
    desc = get_identity(ident)
    if n_list is None:
        n_list = (desc.n_min,)
    reports = []
    for q in q_list:
        f = _field_for_q(q, max_q)
        for n in n_list:
            if not desc.allows_n(n):
                raise ValueError(f"identity {ident} does not allow n={n}")
            reports.append(_run_one(desc, f, n, mode, seed, count, cap, corrupt_rhs))
    return reports


def replay(ident: str, assignment: dict, corrupt_rhs: bool = False):
    """Re-run one stored assignment; returns (lhs, rhs, equal?)."""
    desc = get_identity(ident)
    q, n = int(assignment["q"]), int(assignment["n"])
    f = _field_for_q(q)
    ev = _ev_for(f)
    cs = tuple(int(c) % f.n_chars for c in assignment["chars"])
    es = tuple(int(e) % q for e in assignment["elems"])
    if len(cs) != desc.chars(n) or len(es) != desc.points(n) + desc.extras(n):
        raise ValueError("assignment shape does not match identity arity")
    lc = _canon(ev, desc.lhs(ev, n, cs, es))
    rc = _canon(ev, desc.rhs(ev, n, cs, es))
    if corrupt_rhs:
        rc = rc + cyclo.one(f.n_chars)
    return lc, rc, (lc - rc).is_zero()
