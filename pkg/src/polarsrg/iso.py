"""Isomorphism and non-isomorphism witnesses for pairs of graphs."""
from __future__ import annotations

import sys
from collections import Counter
from dataclasses import dataclass

from .cliques import maximal_cliques, size_histogram
from .errors import NotRegular, NotStronglyRegular
from .quadric import bits_of
from .srg import LabeledGraph, verify_srg

DEFAULT_BUDGET = 10**7


@dataclass(frozen=True)
class Isomorphic:
    mapping: tuple  # mapping[i] is the image in the right graph of left vertex i
    nodes: int = 0

    def as_dict(self) -> dict:
        return {"result": "isomorphic", "mapping": list(self.mapping), "nodes": self.nodes}


@dataclass(frozen=True)
class NonIsomorphic:
    invariant: str
    left: object
    right: object

    def as_dict(self) -> dict:
        return {"result": "non_isomorphic", "witness": self.invariant,
                "left_value": _jsonable(self.left), "right_value": _jsonable(self.right)}


@dataclass(frozen=True)
class Unknown:
    nodes: int

    def as_dict(self) -> dict:
        return {"result": "unknown", "nodes": self.nodes}


IsoResult = Isomorphic | NonIsomorphic | Unknown


def _jsonable(x):
    if isinstance(x, dict):
        return {str(k): v for k, v in x.items()}
    if isinstance(x, tuple):
        return list(x)
    return x


def is_isomorphism(g1: LabeledGraph, g2: LabeledGraph, mapping) -> bool:
    """Edge-by-edge check that ``mapping`` is an adjacency-preserving bijection."""
    n = g1.order
    if g2.order != n or sorted(mapping) != list(range(n)):
        return False
    a1, a2 = g1.adj, g2.adj
    for u in range(n):
        mu = mapping[u]
        for v in range(u + 1, n):
            if a1[u, v] != a2[mu, mapping[v]]:
                return False
    return True


def _srg_params(g):
    try:
        return verify_srg(g).as_tuple()
    except (NotRegular, NotStronglyRegular):
        return None


def _search_order(rows) -> list[int]:
    """Vertex order for the left graph: always take the vertex with most placed neighbours."""
    n = len(rows)
    placed = 0
    order = []
    for _ in range(n):
        best, bv = -1, -1
        for v in range(n):
            if placed >> v & 1:
                continue
            c = (rows[v] & placed).bit_count()
            if c > best:
                best, bv = c, v
        order.append(bv)
        placed |= 1 << bv
    return order


def _backtrack(g1: LabeledGraph, g2: LabeledGraph, budget: int):
    """Depth-first search for an isomorphism.

    sig1[x] is the set (as a right-graph bitmask) of images of x's mapped
    neighbours; sig2[y] is the set of mapped right vertices adjacent to y.
    A left vertex can only go to a right vertex with the same signature, and
    after each step the multisets of signatures of unmapped vertices must
    agree on both sides.
    """
    rows1, rows2 = g1.rows, g2.rows
    n = g1.order
    order = _search_order(rows1)
    sig1 = [0] * n
    sig2 = [0] * n
    mapping = [-1] * n
    nodes = 0

    def refine_ok(unmapped1, unmapped2):
        return Counter(sig1[x] for x in unmapped1) == Counter(sig2[y] for y in unmapped2)

    def rec(depth, unmapped1, free2):
        nonlocal nodes
        if depth == n:
            return True
        v = order[depth]
        want = sig1[v]
        rest1 = [x for x in unmapped1 if x != v]
        for w in list(bits_of(free2)):
            if sig2[w] != want:
                continue
            nodes += 1
            if nodes > budget:
                raise _Exhausted
            bit = 1 << w
            for x in bits_of(rows1[v]):
                sig1[x] |= bit
            for y in bits_of(rows2[w]):
                sig2[y] |= bit
            mapping[v] = w
            if refine_ok(rest1, bits_of(free2 & ~bit)) and rec(depth + 1, rest1, free2 & ~bit):
                return True
            mapping[v] = -1
            for x in bits_of(rows1[v]):
                sig1[x] &= ~bit
            for y in bits_of(rows2[w]):
                sig2[y] &= ~bit
        return False

    limit = sys.getrecursionlimit()
    sys.setrecursionlimit(max(limit, n + 100))
    try:
        found = rec(0, list(range(n)), (1 << n) - 1)
    except _Exhausted:
        return None, nodes
    finally:
        sys.setrecursionlimit(limit)
    return (tuple(mapping) if found else False), nodes


class _Exhausted(Exception):
    pass


def iso_check(g1: LabeledGraph, g2: LabeledGraph, budget: int = DEFAULT_BUDGET,
              cliques1=None, cliques2=None) -> IsoResult:
    """Decide isomorphism: cheap invariants first, then a bounded backtracking search.

    Invariants, in order: vertex count, degree sequence, strongly regular
    parameters, maximal-clique size histogram.  Precomputed clique lists may
    be passed in to avoid enumerating twice.
    """
    if g1.order != g2.order:
        return NonIsomorphic("vertex_count", g1.order, g2.order)
    d1 = tuple(sorted(int(x) for x in g1.adj.sum(axis=1)))
    d2 = tuple(sorted(int(x) for x in g2.adj.sum(axis=1)))
    if d1 != d2:
        return NonIsomorphic("degree_sequence", d1, d2)
    if g1.same_adjacency(g2):
        return Isomorphic(tuple(range(g1.order)))
    p1, p2 = _srg_params(g1), _srg_params(g2)
    if p1 != p2:
        return NonIsomorphic("srg_parameters", p1, p2)
    h1 = size_histogram(maximal_cliques(g1) if cliques1 is None else cliques1)
    h2 = size_histogram(maximal_cliques(g2) if cliques2 is None else cliques2)
    if h1 != h2:
        return NonIsomorphic("clique_size_histogram", h1, h2)
    mapping, nodes = _backtrack(g1, g2, budget)
    if mapping is None:
        return Unknown(nodes)
    if mapping is False:
        return NonIsomorphic("exhaustive_search", nodes, nodes)
    if not is_isomorphism(g1, g2, mapping):
        raise AssertionError("search returned a mapping that does not preserve edges")
    return Isomorphic(mapping, nodes)
