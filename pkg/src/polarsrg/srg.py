"""The graphs G_n(q) and NO+(2n+2, 2), and strongly regular graph checks.

Everything here is exact: parameters come from counting common neighbours
over all vertex pairs, and eigenvalues are kept as Fractions.
"""
from __future__ import annotations

import enum
from dataclasses import dataclass, field
from fractions import Fraction
from functools import cached_property
from math import isqrt
from typing import Sequence

import numpy as np

from . import projgeom as pg
from .errors import (InfeasibleParameters, NotRegular, NotStronglyRegular,
                     OutOfSupportedRange)
from .quadric import MAX_N, form_values, polar_matrix, quadric_new


class EdgeLabel(enum.IntEnum):
    NONE = 0
    SIM1 = 1
    SIM2 = 2
    TANGENT = 3
    COMPLEMENT = 4
    PLAIN = 5

    @property
    def tag(self) -> str:
        return self.name.lower()


class Family(str, enum.Enum):
    GN = "gn"
    NOPLUS = "noplus"


@dataclass(frozen=True, eq=False)
class LabeledGraph:
    """Graph on ordered vertex labels with a label on every edge.

    ``adj`` is a symmetric boolean matrix with empty diagonal and ``labels``
    holds an EdgeLabel code per pair (NONE off the edge set).
    """

    vertices: tuple
    adj: np.ndarray = field(repr=False)
    labels: np.ndarray = field(repr=False)
    meta: dict = field(default_factory=dict)

    def __post_init__(self):
        self.adj.flags.writeable = False
        self.labels.flags.writeable = False

    @property
    def order(self) -> int:
        return len(self.vertices)

    def __len__(self):
        return len(self.vertices)

    @cached_property
    def rows(self) -> tuple:
        """Adjacency as one int bitset per vertex."""
        out = []
        for row in self.adj:
            r = 0
            for j in np.flatnonzero(row):
                r |= 1 << int(j)
            out.append(r)
        return tuple(out)

    def degree(self, v: int) -> int:
        return int(self.adj[v].sum())

    def neighbors(self, v: int) -> list[int]:
        return [int(j) for j in np.flatnonzero(self.adj[v])]

    def is_edge(self, u: int, v: int) -> bool:
        return bool(self.adj[u, v])

    def edge_label(self, u: int, v: int) -> EdgeLabel:
        return EdgeLabel(int(self.labels[u, v]))

    def edges(self):
        """Yield (u, v, label) with u < v in lexicographic order."""
        us, vs = np.nonzero(np.triu(self.adj, 1))
        for u, v in zip(us.tolist(), vs.tolist()):
            yield u, v, EdgeLabel(int(self.labels[u, v]))

    def same_adjacency(self, other: "LabeledGraph") -> bool:
        return self.adj.shape == other.adj.shape and bool((self.adj == other.adj).all())


def graph_from_adjacency(adj, vertices: Sequence | None = None, label=EdgeLabel.PLAIN,
                         meta: dict | None = None) -> LabeledGraph:
    a = np.array(adj, dtype=bool)
    if a.shape[0] != a.shape[1] or (a != a.T).any() or a.diagonal().any():
        raise ValueError("adjacency must be symmetric with an empty diagonal")
    labels = np.where(a, int(label), 0).astype(np.uint8)
    if vertices is None:
        vertices = tuple(range(a.shape[0]))
    return LabeledGraph(tuple(vertices), a, labels, dict(meta or {}))


def graph_from_edges(nv: int, edges, label=EdgeLabel.PLAIN) -> LabeledGraph:
    a = np.zeros((nv, nv), dtype=bool)
    for u, v in edges:
        a[u, v] = a[v, u] = True
    return graph_from_adjacency(a, label=label)


def _tail_keys(ctx, X: np.ndarray, n: int) -> np.ndarray:
    """Integer id of the normalized last n + 1 coordinates of every row."""
    tails = X[:, n + 1:]
    keys = np.empty(X.shape[0], dtype=np.int64)
    for r, t in enumerate(tails.tolist()):
        t = pg.normalize(t, ctx)
        k = 0
        for a in t:
            k = k * ctx.q + a
        keys[r] = k
    return keys


def build_gn(n: int, q: int) -> LabeledGraph:
    """G_n(q): quadric points off the generator, adjacent via secants (SIM1)
    or via quadric lines meeting the generator (SIM2).

    Two quadric points span a secant iff f(P, Q) != 0, otherwise the line
    lies on the quadric.  It meets the generator iff the tails (coordinates
    n+1..2n+1, which vanish on the generator) of P and Q are proportional.
    """
    qc = quadric_new(n, q)
    ctx = qc.field
    keep = [i for i, p in enumerate(qc.points) if not qc.in_pi(p)]
    X = qc.coords[keep]
    f = polar_matrix(ctx, X, X)
    keys = _tail_keys(ctx, X, n)
    sim1 = f != 0
    sim2 = (f == 0) & (keys[:, None] == keys[None, :])
    np.fill_diagonal(sim2, False)
    adj = sim1 | sim2
    labels = np.zeros(adj.shape, dtype=np.uint8)
    labels[sim1] = EdgeLabel.SIM1
    labels[sim2] = EdgeLabel.SIM2
    verts = tuple(qc.points[i] for i in keep)
    meta = {"family": Family.GN.value, "n": n, "q": q,
            "pi": [list(r) for r in qc.pi.rows]}
    return LabeledGraph(verts, adj, labels, meta)


def build_no_plus(n: int, q: int = 2) -> LabeledGraph:
    """NO+(2n+2, 2): points off the quadric, adjacent when the joining line is tangent.

    For q = 2 and P, Q off the quadric, Q(P + Q) = f(P, Q), so the line is
    tangent exactly when f(P, Q) = 0.
    """
    if q != 2:
        raise OutOfSupportedRange("NO+(2n+2, q) is only built for q = 2")
    if not 1 <= n <= MAX_N[2]:
        raise OutOfSupportedRange(f"n={n} outside the supported range")
    ctx = quadric_new(n, 2).field
    allpts = pg.enumerate_points(2 * n + 1, ctx)
    A = np.array(allpts, dtype=np.int64)
    off = form_values(ctx, A) != 0
    X = A[off]
    adj = polar_matrix(ctx, X, X) == 0
    np.fill_diagonal(adj, False)
    labels = np.where(adj, int(EdgeLabel.TANGENT), 0).astype(np.uint8)
    verts = tuple(p for p, o in zip(allpts, off) if o)
    return LabeledGraph(verts, adj, labels, {"family": Family.NOPLUS.value, "n": n, "q": 2})


def build(family, n: int, q: int = 2) -> LabeledGraph:
    family = Family(family)
    if family is Family.GN:
        return build_gn(n, q)
    return build_no_plus(n, q)


# ---------------------------------------------------------------------------
# parameters and spectra

@dataclass(frozen=True)
class SrgParams:
    v: int
    k: int
    lam: int
    mu: int

    def as_tuple(self) -> tuple:
        return (self.v, self.k, self.lam, self.mu)

    def is_feasible(self) -> bool:
        v, k, lam, mu = self.as_tuple()
        return k * (k - lam - 1) == (v - k - 1) * mu and 0 <= lam < k < v and mu <= k

    def complement(self) -> "SrgParams":
        v, k, lam, mu = self.as_tuple()
        return SrgParams(v, v - k - 1, v - 2 * k + mu - 2, v - 2 * k + lam)


def theoretical_params(family, n: int, q: int = 2) -> SrgParams:
    family = Family(family)
    if family is Family.NOPLUS:
        if q != 2:
            raise OutOfSupportedRange("NO+ parameters are defined here for q = 2")
        return SrgParams(2 ** (2 * n + 1) - 2**n, 2 ** (2 * n) - 1,
                         2 ** (2 * n - 1) - 2, 2 ** (2 * n - 1) + 2 ** (n - 1))
    return SrgParams(q**n * (q ** (n + 1) - 1) // (q - 1),
                     q ** (2 * n) - 1,
                     q ** (2 * n - 1) * (q - 1) - 2,
                     (q ** (2 * n - 1) + q ** (n - 1)) * (q - 1))


def verify_srg(g: LabeledGraph) -> SrgParams:
    """Count degrees and common neighbours over every pair of vertices.

    Raises NotRegular or NotStronglyRegular with a witnessing vertex pair.
    A graph with no non-adjacent pairs reports mu = 0.
    """
    v = g.order
    if v < 2:
        raise ValueError("need at least two vertices")
    A = g.adj.astype(np.int64)
    deg = A.sum(axis=1)
    if (deg != deg[0]).any():
        j = int(np.flatnonzero(deg != deg[0])[0])
        raise NotRegular(f"degrees {deg[0]} and {deg[j]} differ", (0, j))
    common = A @ A
    iu = np.triu_indices(v, 1)
    on = g.adj[iu]
    vals = common[iu]
    lam_vals, mu_vals = vals[on], vals[~on]

    def constant(vals, mask, what):
        if vals.size == 0:
            return 0
        bad = np.flatnonzero(vals != vals[0])
        if bad.size:
            pos = np.flatnonzero(mask)
            i0, i1 = pos[0], pos[bad[0]]
            pair = ((int(iu[0][i0]), int(iu[1][i0])), (int(iu[0][i1]), int(iu[1][i1])))
            raise NotStronglyRegular(
                f"{what} pairs have {vals[0]} and {vals[bad[0]]} common neighbours", pair)
        return int(vals[0])

    lam = constant(lam_vals, on, "adjacent")
    mu = constant(mu_vals, ~on, "non-adjacent")
    return SrgParams(v, int(deg[0]), lam, mu)


@dataclass(frozen=True)
class Spectrum:
    k: Fraction
    theta1: Fraction
    theta2: Fraction
    m1: Fraction
    m2: Fraction

    @property
    def eigenvalues(self) -> tuple:
        return (self.k, self.theta1, self.theta2)

    @property
    def multiplicities(self) -> tuple:
        return (1, self.m1, self.m2)

    def as_dict(self) -> dict:
        return {"eigenvalues": [_num(x) for x in self.eigenvalues],
                "multiplicities": [_num(x) for x in self.multiplicities]}


def _num(x):
    x = Fraction(x)
    return x.numerator if x.denominator == 1 else str(x)


def _sqrt_disc(p: SrgParams) -> int:
    d = (p.lam - p.mu) ** 2 + 4 * (p.k - p.mu)
    r = isqrt(d)
    if r * r != d:
        raise InfeasibleParameters(f"discriminant {d} is not a square; eigenvalues are irrational")
    return r


def spectrum_of(p: SrgParams) -> Spectrum:
    """Eigenvalues from the quadratic, multiplicities from the two trace identities
    m1 + m2 = v - 1 and k + m1*theta1 + m2*theta2 = 0."""
    r = _sqrt_disc(p)
    t1 = Fraction(p.lam - p.mu + r, 2)
    t2 = Fraction(p.lam - p.mu - r, 2)
    if t1 == t2:
        raise InfeasibleParameters("eigenvalues coincide; not a primitive srg")
    m1 = (-p.k - (p.v - 1) * t2) / (t1 - t2)
    m2 = (p.v - 1) - m1
    for m in (m1, m2):
        if m.denominator != 1 or m < 0:
            raise InfeasibleParameters(f"multiplicity {m} is not a nonnegative integer")
    return Spectrum(Fraction(p.k), t1, t2, m1, m2)


def trace_checks(s: Spectrum, p: SrgParams) -> tuple[bool, bool]:
    """(sum of multiplicities == v, trace of A == 0)."""
    return (1 + s.m1 + s.m2 == p.v,
            s.k + s.m1 * s.theta1 + s.m2 * s.theta2 == 0)


def printed_multiplicities(p: SrgParams) -> tuple[Fraction, Fraction]:
    """Multiplicities from the closed form with a '-(v-1)(lam-mu)' term,

        m1,2 = ((v-1) -/+ (2k - (v-1)(lam-mu)) / sqrt(D)) / 2.

    This sign convention disagrees with the trace identities; it is kept only
    so the discrepancy can be reported.  The consistent form has
    2k + (v-1)(lam-mu) in the numerator.
    """
    r = _sqrt_disc(p)
    t = Fraction(2 * p.k - (p.v - 1) * (p.lam - p.mu), r)
    return (Fraction(p.v - 1) - t) / 2, (Fraction(p.v - 1) + t) / 2


def complement(g: LabeledGraph) -> LabeledGraph:
    adj = ~g.adj
    np.fill_diagonal(adj, False)
    labels = np.where(adj, int(EdgeLabel.COMPLEMENT), 0).astype(np.uint8)
    meta = dict(g.meta)
    meta["complement"] = not meta.get("complement", False)
    return LabeledGraph(g.vertices, adj, labels, meta)


# ---------------------------------------------------------------------------
# distance-2 subgraphs

class Gamma2Outcome(enum.Enum):
    EMPTY_SUBGRAPH = "empty"
    DISCONNECTED = "disconnected"


def _bfs_layers(rows, start: int, within: int) -> list[int]:
    seen = 1 << start
    frontier = 1 << start
    layers = [frontier]
    while True:
        nxt = 0
        f = frontier
        while f:
            low = f & -f
            nxt |= rows[low.bit_length() - 1]
            f ^= low
        nxt &= within & ~seen
        if not nxt:
            return layers
        seen |= nxt
        layers.append(nxt)
        frontier = nxt


def distance_two_subgraph_diameter(g: LabeledGraph, vertex: int):
    """Diameter of the subgraph induced on the vertices at distance 2 from ``vertex``.

    Returns an int, or a Gamma2Outcome when the subgraph is empty or disconnected.
    """
    rows = g.rows
    full = (1 << g.order) - 1
    layers = _bfs_layers(rows, vertex, full)
    if len(layers) < 3:
        return Gamma2Outcome.EMPTY_SUBGRAPH
    d2 = layers[2]
    members = []
    m = d2
    while m:
        low = m & -m
        members.append(low.bit_length() - 1)
        m ^= low
    diam = 0
    for u in members:
        lay = _bfs_layers(rows, u, d2)
        reached = 0
        for x in lay:
            reached |= x
        if reached != d2:
            return Gamma2Outcome.DISCONNECTED
        diam = max(diam, len(lay) - 1)
    return diam
