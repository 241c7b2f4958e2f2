"""The hyperbolic quadric Q+(2n+1, q) with a distinguished generator.

Coordinates are 0-based here: the form is

    Q(x) = x[0]*x[m] + x[1]*x[m-1] + ... + x[n]*x[n+1],   m = 2n + 1,

so coordinate i is paired with coordinate m - i, and the polar form is
f(x, y) = sum_i x[i] * y[m - i].  The distinguished generator is spanned by
the first n + 1 unit vectors.
"""
from __future__ import annotations

import enum
from dataclasses import dataclass, field
from functools import cached_property, lru_cache
from itertools import combinations
from typing import Iterable, Sequence

import numpy as np

from . import projgeom as pg
from .errors import (EmptySubspace, EqualPoints, NotPartialOvoid,
                     OutOfSupportedRange, PointNotOnQuadric)
from .gf import FieldCtx, field_new
from .projgeom import ProjPoint, Subspace, theta

# largest n per field order
MAX_N = {2: 4, 3: 3, 4: 2, 5: 2, 7: 2}


class LineType(enum.Enum):
    SECANT = "secant"
    TANGENT = "tangent"
    EXTERNAL = "external"
    TOTALLY_ISOTROPIC = "totally_isotropic"


class SectionTag(enum.Enum):
    ELLIPTIC = "elliptic"
    HYPERBOLIC = "hyperbolic"
    PARABOLIC = "parabolic"
    CONE = "cone"
    TOTALLY_ISOTROPIC = "totally_isotropic"
    POINTLESS_OR_OTHER = "pointless_or_other"


@dataclass(frozen=True)
class SectionType:
    dim: int
    radical_dim: int
    point_count: int
    tag: SectionTag


def section_tag(dim: int, radical_dim: int, point_count: int, q: int) -> SectionTag:
    """Classify a section from its dimension, singular radical and size."""
    if point_count == theta(dim + 1, q):
        return SectionTag.TOTALLY_ISOTROPIC
    if point_count == 0:
        return SectionTag.POINTLESS_OR_OTHER
    if radical_dim >= 0:
        return SectionTag.CONE
    if dim % 2 == 1:
        h = (dim + 1) // 2
        if point_count == (q ** (h - 1) + 1) * (q**h - 1) // (q - 1):
            return SectionTag.HYPERBOLIC
        if point_count == (q ** (h - 1) - 1) * (q**h + 1) // (q - 1):
            return SectionTag.ELLIPTIC
    elif point_count == theta(dim, q):
        return SectionTag.PARABOLIC
    return SectionTag.POINTLESS_OR_OTHER


def quadric_point_count(n: int, q: int) -> int:
    return (q**n + 1) * (q ** (n + 1) - 1) // (q - 1)


def generator_count(n: int, q: int) -> int:
    c = 2
    for i in range(1, n + 1):
        c *= q**i + 1
    return c


# ---------------------------------------------------------------------------
# vectorised form evaluation over code arrays

def form_values(ctx: FieldCtx, X: np.ndarray) -> np.ndarray:
    """Q evaluated on every row of the code array X."""
    m = X.shape[1] - 1
    acc = np.zeros(X.shape[0], dtype=np.int64)
    for i in range((m + 1) // 2):
        acc = ctx.add_np[acc, ctx.mul_np[X[:, i], X[:, m - i]]]
    return acc


def polar_matrix(ctx: FieldCtx, X: np.ndarray, Y: np.ndarray) -> np.ndarray:
    """f(x, y) for every row x of X and row y of Y."""
    m = X.shape[1] - 1
    acc = np.zeros((X.shape[0], Y.shape[0]), dtype=np.int64)
    for i in range(m + 1):
        acc = ctx.add_np[acc, ctx.mul_np[X[:, i][:, None], Y[:, m - i][None, :]]]
    return acc


def bits_of(mask: int):
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def mask_of(indices: Iterable[int]) -> int:
    r = 0
    for i in indices:
        r |= 1 << int(i)
    return r


@dataclass(frozen=True, eq=False)
class QuadricCtx:
    n: int
    field: FieldCtx
    points: tuple
    index: dict = field(repr=False)
    pi: Subspace = field(repr=False)

    @property
    def m(self) -> int:
        return 2 * self.n + 1

    @property
    def q(self) -> int:
        return self.field.q

    @cached_property
    def coords(self) -> np.ndarray:
        a = np.array(self.points, dtype=np.int64)
        a.flags.writeable = False
        return a

    @cached_property
    def collinear(self) -> np.ndarray:
        """Boolean matrix: f(P, Q) == 0 for quadric points P, Q (diagonal True)."""
        a = polar_matrix(self.field, self.coords, self.coords) == 0
        a.flags.writeable = False
        return a

    @cached_property
    def collinear_bits(self) -> tuple:
        return tuple(mask_of(np.flatnonzero(row)) for row in self.collinear)

    @cached_property
    def pi_mask(self) -> int:
        return mask_of(i for i, p in enumerate(self.points) if self.in_pi(p))

    def in_pi(self, p: Sequence[int]) -> bool:
        return not any(p[self.n + 1:])

    def on_quadric(self, p: Sequence[int]) -> bool:
        return form_eval(self, p) == 0

    @cached_property
    def _line_masks(self) -> dict:
        """(i, j) -> point mask of the quadric line through points i and j."""
        lines = {}
        ctx = self.field
        for i, bits in enumerate(self.collinear_bits):
            for j in bits_of(bits >> (i + 1) << (i + 1)):
                if (i, j) in lines:
                    continue
                pts = [self.index[p] for p in pg.line_points(self.points[i], self.points[j], ctx)]
                mk = mask_of(pts)
                for a, b in combinations(pts, 2):
                    lines[a, b] = mk
                    lines[b, a] = mk
        return lines

    @cached_property
    def isotropic_levels(self) -> tuple:
        """Point masks of all totally isotropic subspaces, grouped by dimension 0..n."""
        coll = self.collinear_bits
        lines = self._line_masks
        levels = [[1 << i for i in range(len(self.points))]]
        for _ in range(self.n):
            found = set()
            for s in levels[-1]:
                members = list(bits_of(s))
                cand = ~s
                for i in members:
                    cand &= coll[i]
                while cand:
                    low = cand & -cand
                    c = low.bit_length() - 1
                    t = s | low
                    for i in members:
                        t |= lines[i, c]
                    found.add(t)
                    cand &= ~t
            levels.append(sorted(found))
        return tuple(tuple(lv) for lv in levels)


@lru_cache(maxsize=None)
def quadric_new(n: int, q: int) -> QuadricCtx:
    """Build Q+(2n+1, q) together with its generator spanned by U_1..U_{n+1}."""
    if q not in MAX_N or not 1 <= n <= MAX_N[q]:
        raise OutOfSupportedRange(f"(n={n}, q={q}) outside the supported range")
    ctx = field_new(q)
    m = 2 * n + 1
    allpts = pg.enumerate_points(m, ctx)
    vals = form_values(ctx, np.array(allpts, dtype=np.int64))
    points = tuple(p for p, v in zip(allpts, vals) if v == 0)
    index = {p: i for i, p in enumerate(points)}
    pi = pg.subspace([tuple(int(i == j) for j in range(m + 1)) for i in range(n + 1)], ctx, m)
    return QuadricCtx(n, ctx, points, index, pi)


def form_eval(qc: QuadricCtx, p: Sequence[int]) -> int:
    ctx = qc.field
    m = len(p) - 1
    s = 0
    for i in range((m + 1) // 2):
        s = ctx.add(s, ctx.mul(p[i], p[m - i]))
    return s


def polar(qc: QuadricCtx, x: Sequence[int], y: Sequence[int]) -> int:
    ctx = qc.field
    m = len(x) - 1
    s = 0
    for i in range(m + 1):
        a, b = x[i], y[m - i]
        if a and b:
            s = ctx.add(s, ctx.mul(a, b))
    return s


def perp(qc: QuadricCtx, s: Subspace) -> Subspace:
    """Polar subspace of s.  Since f pairs i with m - i, f(., b) is reversed(b) . x."""
    if s.is_empty:
        raise EmptySubspace("perp of the empty subspace is not defined here")
    rows = [tuple(reversed(r)) for r in s.rows]
    return Subspace(pg.nullspace(rows, qc.field, s.m + 1), s.m, s.field)


def point_perp(qc: QuadricCtx, p: Sequence[int]) -> Subspace:
    return perp(qc, pg.span([p], qc.field))


def line_type(qc: QuadricCtx, p1: Sequence[int], p2: Sequence[int]) -> LineType:
    ctx = qc.field
    if pg.normalize(p1, ctx) == pg.normalize(p2, ctx):
        raise EqualPoints("a line needs two distinct points")
    on = sum(1 for p in pg.line_points(p1, p2, ctx) if form_eval(qc, p) == 0)
    if on == ctx.q + 1:
        return LineType.TOTALLY_ISOTROPIC
    return {2: LineType.SECANT, 1: LineType.TANGENT, 0: LineType.EXTERNAL}[on]


def singular_radical(qc: QuadricCtx, s: Subspace) -> Subspace:
    """Quadric points of s orthogonal to all of s; always a subspace."""
    rad = pg.meet(s, perp(qc, s))
    if rad.is_empty:
        return rad
    sing = [p for p in pg.points_of(rad) if form_eval(qc, p) == 0]
    return pg.span(sing, qc.field, s.m)


def section_type(qc: QuadricCtx, s: Subspace) -> SectionType:
    if s.is_empty:
        raise EmptySubspace("cannot classify the empty subspace")
    count = len(section_points(qc, s))
    r = singular_radical(qc, s).dim
    return SectionType(s.dim, r, count, section_tag(s.dim, r, count, qc.q))


def section_points(qc: QuadricCtx, s: Subspace) -> list[ProjPoint]:
    idx = qc.index
    return [p for p in pg.points_of(s) if p in idx]


def subspace_of_mask(qc: QuadricCtx, mask: int) -> Subspace:
    return pg.span([qc.points[i] for i in bits_of(mask)], qc.field, qc.m)


def enumerate_generators(qc: QuadricCtx) -> list[Subspace]:
    """All generators, sorted by their echelon bases."""
    gens = [subspace_of_mask(qc, mk) for mk in qc.isotropic_levels[qc.n]]
    gens.sort(key=lambda s: s.rows)
    return gens


# ---------------------------------------------------------------------------
# ovoids

def _indices(qc: QuadricCtx, pts) -> list[int]:
    out = []
    for p in pts:
        p = pg.normalize(p, qc.field)
        i = qc.index.get(p)
        if i is None:
            raise PointNotOnQuadric(f"{p} is not a point of the quadric")
        out.append(i)
    return out


def is_partial_ovoid(qc: QuadricCtx, pts) -> bool:
    idx = _indices(qc, pts)
    if len(set(idx)) != len(idx):
        return False
    coll = qc.collinear
    return all(not coll[i, j] for i, j in combinations(idx, 2))


def is_ovoid(qc: QuadricCtx, pts) -> bool:
    """Partial ovoid of size q^n + 1."""
    return is_partial_ovoid(qc, pts) and len(set(_indices(qc, pts))) == qc.q**qc.n + 1


def is_ovoid_by_generators(qc: QuadricCtx, pts) -> bool:
    """Every generator meets the set in exactly one point."""
    mk = mask_of(_indices(qc, pts))
    return all((g & mk).bit_count() == 1 for g in qc.isotropic_levels[qc.n])


def extend_partial_ovoid(qc: QuadricCtx, pts) -> list[tuple]:
    """All maximal partial ovoids containing ``pts``, as sorted point-index tuples.

    Plain backtracking over the points non-collinear with everything chosen so
    far; candidates are taken in increasing index order so every set is
    produced once.
    """
    idx = sorted(set(_indices(qc, pts)))
    if not is_partial_ovoid(qc, [qc.points[i] for i in idx]):
        raise NotPartialOvoid("input contains two collinear points")
    coll = qc.collinear_bits
    full = (1 << len(qc.points)) - 1
    noncoll = [full & ~c for c in coll]
    cand = full
    for i in idx:
        cand &= noncoll[i]
    out = []

    def grow(chosen, cand, allowed):
        # cand: every point extending chosen; allowed: those we may still pick
        if not cand:
            out.append(tuple(sorted(chosen)))
            return
        if not allowed:
            return
        a = allowed
        while a:
            low = a & -a
            c = low.bit_length() - 1
            a ^= low
            grow(chosen + [c], cand & noncoll[c], a & noncoll[c])

    grow(idx, cand, cand)
    out.sort(key=lambda t: (len(t), t))
    return out


def elliptic_solids(qc: QuadricCtx) -> list[int]:
    """Point masks of all solids meeting the quadric in an elliptic quadric.

    Such a section is a partial ovoid, so it contains four pairwise
    non-collinear points spanning it; scanning those 4-sets finds every one.
    Intended for q = 2, where the scan is small.
    """
    coll = qc.collinear_bits
    full = (1 << len(qc.points)) - 1
    noncoll = [full & ~c for c in coll]
    seen_spans: set = set()
    found: list[int] = []
    pts = qc.points
    packed = [pg.pack(p) for p in pts] if qc.q == 2 else None
    for a in range(len(pts)):
        ca = noncoll[a] >> (a + 1) << (a + 1)
        for b in bits_of(ca):
            cb = ca & noncoll[b] >> (b + 1) << (b + 1)
            for c in bits_of(cb):
                cc = cb & noncoll[c] >> (c + 1) << (c + 1)
                for d in bits_of(cc):
                    quad = (pts[a], pts[b], pts[c], pts[d])
                    if packed is not None:
                        key = tuple(pg.rref_bits(packed[i] for i in (a, b, c, d)))
                        if len(key) != 4 or key in seen_spans:
                            continue
                        seen_spans.add(key)
                    s = pg.span(quad, qc.field, qc.m)
                    if s.dim != 3 or s.rows in seen_spans:
                        continue
                    seen_spans.add(s.rows)
                    st = section_type(qc, s)
                    if st.tag is SectionTag.ELLIPTIC:
                        e = mask_of(qc.index[p] for p in section_points(qc, s))
                        found.append(e)
    found.sort()
    return found
