"""Points and subspaces of PG(m, q).

A point is a tuple of field codes whose first nonzero entry is 1.  A
subspace is stored by its reduced row-echelon basis, so two subspaces are
equal exactly when their bases are.  Over GF(2) rows are packed into Python
ints (coordinate 0 in the most significant bit) and reduced with XOR; other
fields go through the scalar Gauss-Jordan routine.
"""
from __future__ import annotations

from dataclasses import dataclass
from itertools import product
from typing import Iterable, Sequence

from .errors import AmbientMismatch, ZeroVector
from .gf import FieldCtx

ProjPoint = tuple  # tuple[int, ...], normalized


def theta(r: int, q: int) -> int:
    """Number of points of PG(r-1, q), i.e. (q^r - 1)/(q - 1)."""
    if r < 0:
        raise ValueError("r must be nonnegative")
    return (q**r - 1) // (q - 1)


def normalize(v: Sequence[int], ctx: FieldCtx) -> ProjPoint:
    for a in v:
        if a:
            if a == 1:
                return tuple(v)
            s = ctx.inv(a)
            return tuple(ctx.mul(s, x) for x in v)
    raise ZeroVector("the zero vector is not a projective point")


def is_normalized(v: Sequence[int]) -> bool:
    for a in v:
        if a:
            return a == 1
    return False


def enumerate_points(m: int, ctx: FieldCtx) -> list[ProjPoint]:
    """All points of PG(m, q) in lexicographic order of their codes."""
    if m < 0:
        raise ValueError("projective dimension must be >= 0")
    return [v for v in product(range(ctx.q), repeat=m + 1) if is_normalized(v)]


# ---------------------------------------------------------------------------
# row reduction

def pack(v: Sequence[int]) -> int:
    """GF(2) vector -> int, first coordinate in the most significant bit."""
    r = 0
    for a in v:
        r = (r << 1) | (a & 1)
    return r


def unpack(r: int, width: int) -> tuple:
    return tuple((r >> (width - 1 - j)) & 1 for j in range(width))


def rref_bits(rows: Iterable[int]) -> list[int]:
    """Reduced row-echelon form of packed GF(2) rows.

    Returned rows are nonzero and sorted by pivot, leftmost coordinate first.
    """
    basis: list[int] = []
    pivots: list[int] = []
    for r in rows:
        for pb, b in zip(pivots, basis):
            if r & pb:
                r ^= b
        if not r:
            continue
        pb = 1 << (r.bit_length() - 1)
        for i, b in enumerate(basis):
            if b & pb:
                basis[i] = b ^ r
        basis.append(r)
        pivots.append(pb)
    basis.sort(reverse=True)
    return basis


def rref_scalar(rows: Iterable[Sequence[int]], ctx: FieldCtx) -> list[tuple]:
    """Gauss-Jordan elimination over any supported field, one entry at a time."""
    mat = [list(r) for r in rows]
    if not mat:
        return []
    width = len(mat[0])
    out_row = 0
    for col in range(width):
        piv = None
        for i in range(out_row, len(mat)):
            if mat[i][col]:
                piv = i
                break
        if piv is None:
            continue
        mat[out_row], mat[piv] = mat[piv], mat[out_row]
        s = ctx.inv(mat[out_row][col])
        prow = [ctx.mul(s, x) for x in mat[out_row]]
        mat[out_row] = prow
        for i in range(len(mat)):
            c = mat[i][col]
            if i != out_row and c:
                row = mat[i]
                mat[i] = [ctx.sub(a, ctx.mul(c, b)) for a, b in zip(row, prow)]
        out_row += 1
        if out_row == len(mat):
            break
    return [tuple(r) for r in mat[:out_row]]


def rref(rows: Iterable[Sequence[int]], ctx: FieldCtx, width: int) -> tuple:
    if ctx.q == 2:
        return tuple(unpack(r, width) for r in rref_bits(pack(v) for v in rows))
    return tuple(rref_scalar(rows, ctx))


def nullspace_bits(rows: Iterable[int], width: int) -> list[int]:
    """GF(2) null space of packed rows, returned in RREF."""
    red = rref_bits(rows)
    pivots = [r.bit_length() - 1 for r in red]
    pset = set(pivots)
    vecs = []
    for f in range(width):
        if f in pset:
            continue
        v = 1 << f
        for r, pc in zip(red, pivots):
            if r >> f & 1:
                v |= 1 << pc
        vecs.append(v)
    return rref_bits(vecs)


def nullspace(rows: Sequence[Sequence[int]], ctx: FieldCtx, width: int) -> tuple:
    """Basis (in RREF) of {x : r . x = 0 for every row r}."""
    if ctx.q == 2:
        return tuple(unpack(r, width) for r in nullspace_bits((pack(v) for v in rows), width))
    red = rref(rows, ctx, width)
    pivot_cols = []
    for r in red:
        pivot_cols.append(next(j for j, a in enumerate(r) if a))
    free = [j for j in range(width) if j not in pivot_cols]
    vecs = []
    for f in free:
        v = [0] * width
        v[f] = 1
        for r, pc in zip(red, pivot_cols):
            v[pc] = ctx.neg(r[f])
        vecs.append(v)
    return rref(vecs, ctx, width)


# ---------------------------------------------------------------------------
# subspaces

@dataclass(frozen=True)
class Subspace:
    """Projective subspace of PG(m, q) held as a reduced row-echelon basis."""

    rows: tuple
    m: int
    field: FieldCtx

    @property
    def dim(self) -> int:
        return len(self.rows) - 1

    @property
    def is_empty(self) -> bool:
        return not self.rows

    def __len__(self):
        return len(self.rows)

    def __repr__(self):
        basis = ", ".join("".join(map(str, r)) for r in self.rows)
        return f"Subspace(dim={self.dim}, m={self.m}, q={self.field.q}, [{basis}])"


def subspace(rows: Iterable[Sequence[int]], ctx: FieldCtx, m: int) -> Subspace:
    rows = list(rows)
    for r in rows:
        if len(r) != m + 1:
            raise AmbientMismatch(f"vector {r} does not live in PG({m}, q)")
    return Subspace(rref(rows, ctx, m + 1), m, ctx)


def empty_subspace(m: int, ctx: FieldCtx) -> Subspace:
    return Subspace((), m, ctx)


def whole_space(m: int, ctx: FieldCtx) -> Subspace:
    return Subspace(tuple(tuple(int(i == j) for j in range(m + 1)) for i in range(m + 1)), m, ctx)


def span(items: Iterable, ctx: FieldCtx, m: int | None = None) -> Subspace:
    """Span of points and/or subspaces.  ``m`` is needed only for an empty input."""
    rows = []
    for it in items:
        if isinstance(it, Subspace):
            if m is not None and it.m != m:
                raise AmbientMismatch("subspaces live in different ambient spaces")
            m = it.m
            rows.extend(it.rows)
        else:
            if m is not None and len(it) != m + 1:
                raise AmbientMismatch("points live in different ambient spaces")
            m = len(it) - 1
            rows.append(it)
    if m is None:
        raise ValueError("span of nothing needs the ambient dimension m")
    return subspace(rows, ctx, m)


def annihilator(s: Subspace) -> Subspace:
    """Vectors orthogonal to all of s under the standard dot product."""
    if s.is_empty:
        return whole_space(s.m, s.field)
    return Subspace(nullspace(s.rows, s.field, s.m + 1), s.m, s.field)


def meet(s1: Subspace, s2: Subspace) -> Subspace:
    if s1.m != s2.m or s1.field != s2.field:
        raise AmbientMismatch("cannot intersect subspaces of different spaces")
    if s1 == s2:
        return s1
    ann = span([annihilator(s1), annihilator(s2)], s1.field, s1.m)
    return annihilator(ann)


def join(s1: Subspace, s2: Subspace) -> Subspace:
    if s1.m != s2.m:
        raise AmbientMismatch("cannot join subspaces of different spaces")
    return span([s1, s2], s1.field, s1.m)


def contains(s: Subspace, p: Sequence[int]) -> bool:
    if len(p) != s.m + 1:
        raise AmbientMismatch("point and subspace live in different spaces")
    if s.is_empty:
        return False
    ctx = s.field
    v = list(p)
    for r in s.rows:
        pc = next(j for j, a in enumerate(r) if a)
        c = v[pc]
        if c:
            v = [ctx.sub(a, ctx.mul(c, b)) for a, b in zip(v, r)]
    return not any(v)


def points_of(s: Subspace) -> list[ProjPoint]:
    """All points of s, in the global lexicographic point order."""
    ctx = s.field
    k = len(s.rows)
    if ctx.q == 2:
        width = s.m + 1
        packed = [pack(r) for r in s.rows]
        vals = [0]
        for r in packed:
            vals += [v ^ r for v in vals]
        vals = sorted(vals[1:])
        return [unpack(v, width) for v in vals]
    out = []
    for coeffs in product(range(ctx.q), repeat=k):
        if not is_normalized(coeffs):
            continue
        v = [0] * (s.m + 1)
        for c, r in zip(coeffs, s.rows):
            if c:
                v = [ctx.add(a, ctx.mul(c, b)) for a, b in zip(v, r)]
        out.append(normalize(v, ctx))
    out.sort()
    return out


def line_points(p1: Sequence[int], p2: Sequence[int], ctx: FieldCtx) -> list[ProjPoint]:
    """The q + 1 points on the line through two distinct points."""
    pts = [normalize(p1, ctx)]
    for c in range(ctx.q):
        v = [ctx.add(ctx.mul(c, a), b) for a, b in zip(p1, p2)]
        pts.append(normalize(v, ctx))
    return pts
