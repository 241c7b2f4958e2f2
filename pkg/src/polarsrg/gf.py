"""Table-driven arithmetic in GF(q) for q in {2, 3, 4, 5, 7}.

Elements are integer codes ``0..q-1``.  For prime q the code is the residue.
For q = 4 the code is the coefficient vector of a polynomial in w, bit 1
being the w-coefficient, so 2 is w and 3 is w + 1, with w^2 = w + 1.
"""
from __future__ import annotations

from functools import lru_cache

import numpy as np

from .errors import UnsupportedFieldOrder

SUPPORTED_ORDERS = (2, 3, 4, 5, 7)


def _gf4_mul(a: int, b: int) -> int:
    # carry-less product, then reduce x^2 -> x + 1
    r = 0
    for i in range(2):
        if b >> i & 1:
            r ^= a << i
    if r & 4:
        r ^= 0b111
    return r


class FieldCtx:
    """Arithmetic context for one field order.  Immutable; obtain via field_new."""

    __slots__ = ("q", "p", "add_table", "mul_table", "neg_table", "inv_table",
                 "add_np", "mul_np")

    def __init__(self, q: int):
        if q not in SUPPORTED_ORDERS:
            raise UnsupportedFieldOrder(f"GF({q}) is not supported; use one of {SUPPORTED_ORDERS}")
        if q == 4:
            p = 2
            add = [[a ^ b for b in range(4)] for a in range(4)]
            mul = [[_gf4_mul(a, b) for b in range(4)] for a in range(4)]
        else:
            p = q
            add = [[(a + b) % q for b in range(q)] for a in range(q)]
            mul = [[(a * b) % q for b in range(q)] for a in range(q)]
        neg = [add[a].index(0) for a in range(q)]
        inv = [None] + [mul[a].index(1) for a in range(1, q)]
        object.__setattr__(self, "q", q)
        object.__setattr__(self, "p", p)
        object.__setattr__(self, "add_table", tuple(map(tuple, add)))
        object.__setattr__(self, "mul_table", tuple(map(tuple, mul)))
        object.__setattr__(self, "neg_table", tuple(neg))
        object.__setattr__(self, "inv_table", tuple(inv))
        add_np = np.array(add, dtype=np.int64)
        mul_np = np.array(mul, dtype=np.int64)
        add_np.flags.writeable = False
        mul_np.flags.writeable = False
        object.__setattr__(self, "add_np", add_np)
        object.__setattr__(self, "mul_np", mul_np)

    def __setattr__(self, name, value):
        raise AttributeError("FieldCtx is immutable")

    def __repr__(self):
        return f"FieldCtx(q={self.q})"

    def __eq__(self, other):
        return isinstance(other, FieldCtx) and other.q == self.q

    def __hash__(self):
        return hash(("GF", self.q))

    def __reduce__(self):
        return field_new, (self.q,)

    @property
    def elements(self) -> range:
        return range(self.q)

    def add(self, a: int, b: int) -> int:
        return self.add_table[a][b]

    def sub(self, a: int, b: int) -> int:
        return self.add_table[a][self.neg_table[b]]

    def mul(self, a: int, b: int) -> int:
        return self.mul_table[a][b]

    def neg(self, a: int) -> int:
        return self.neg_table[a]

    def inv(self, a: int) -> int:
        if a == 0:
            raise ZeroDivisionError("0 has no inverse in GF(%d)" % self.q)
        return self.inv_table[a]

    def div(self, a: int, b: int) -> int:
        return self.mul(a, self.inv(b))

    def pow(self, a: int, e: int) -> int:
        r = 1
        for _ in range(e):
            r = self.mul_table[r][a]
        return r

    def dot(self, x, y) -> int:
        s = 0
        for a, b in zip(x, y):
            if a and b:
                s = self.add_table[s][self.mul_table[a][b]]
        return s


@lru_cache(maxsize=None)
def field_new(q: int) -> FieldCtx:
    """Return the (shared) arithmetic context for GF(q)."""
    return FieldCtx(q)


# Functional spellings, for callers that prefer them over methods.
def add(ctx: FieldCtx, a: int, b: int) -> int:
    return ctx.add(a, b)


def mul(ctx: FieldCtx, a: int, b: int) -> int:
    return ctx.mul(a, b)


def neg(ctx: FieldCtx, a: int) -> int:
    return ctx.neg(a)


def inv(ctx: FieldCtx, a: int) -> int:
    return ctx.inv(a)
