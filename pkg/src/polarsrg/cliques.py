"""Maximal cliques: enumeration, the Delsarte bound, and geometric classes in G_3(2)."""
from __future__ import annotations

import enum
import math
import os
from collections import Counter
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence

from . import projgeom as pg
from .errors import NotAClique, NotMaximal, UnclassifiedCliqueFound
from .quadric import (QuadricCtx, SectionTag, SectionType, bits_of, is_ovoid,
                      is_ovoid_by_generators, section_type)
from .srg import EdgeLabel, LabeledGraph, Spectrum


# ---------------------------------------------------------------------------
# enumeration

def degeneracy_order(rows: Sequence[int]) -> list[int]:
    """Repeatedly remove a vertex of minimum remaining degree (lowest index on ties)."""
    n = len(rows)
    alive = (1 << n) - 1
    deg = [r.bit_count() for r in rows]
    order = []
    for _ in range(n):
        best = min((deg[v], v) for v in bits_of(alive))[1]
        order.append(best)
        alive &= ~(1 << best)
        for u in bits_of(rows[best] & alive):
            deg[u] -= 1
    return order


def _expand(rows, R: int, P: int, X: int, out: list) -> None:
    if not P:
        if not X:
            out.append(R)
        return
    # pivot: vertex of P|X with most neighbours in P, lowest index on ties
    best, piv = -1, -1
    for u in bits_of(P | X):
        c = (P & rows[u]).bit_count()
        if c > best:
            best, piv = c, u
    for v in bits_of(P & ~rows[piv]):
        bit = 1 << v
        _expand(rows, R | bit, P & rows[v], X & rows[v], out)
        P &= ~bit
        X |= bit


def _branches(rows) -> list[tuple]:
    order = degeneracy_order(rows)
    later = (1 << len(rows)) - 1
    out = []
    for v in order:
        later &= ~(1 << v)
        earlier = ((1 << len(rows)) - 1) & ~later & ~(1 << v)
        out.append((1 << v, rows[v] & later, rows[v] & earlier))
    return out


def _run_branches(rows, branches) -> list[int]:
    out: list[int] = []
    for R, P, X in branches:
        _expand(rows, R, P, X, out)
    return out


def _to_sets(masks: Iterable[int]) -> list[tuple]:
    cl = [tuple(bits_of(m)) for m in masks]
    cl.sort(key=lambda c: (len(c), c))
    return cl


def maximal_cliques_from_rows(rows: Sequence[int], workers: int = 1) -> list[tuple]:
    """All maximal cliques of the graph given by adjacency bitsets.

    Pivoted Bron-Kerbosch, with the outer level taken in degeneracy order.
    Output is sorted by size and then lexicographically, whatever ``workers`` is.
    """
    rows = tuple(rows)
    if not rows:
        return []
    branches = _branches(rows)
    if workers <= 1 or len(branches) < 2 * workers:
        return _to_sets(_run_branches(rows, branches))
    chunks = [branches[i::workers] for i in range(workers)]
    masks: list[int] = []
    with ProcessPoolExecutor(max_workers=workers) as ex:
        for part in ex.map(_run_branches, [rows] * workers, chunks):
            masks.extend(part)
    return _to_sets(masks)


def default_workers() -> int:
    try:
        return max(1, int(os.environ.get("POLARSRG_THREADS", "1")))
    except ValueError:
        return 1


def maximal_cliques(g: LabeledGraph, workers: int | None = None) -> list[tuple]:
    return maximal_cliques_from_rows(g.rows, default_workers() if workers is None else workers)


def is_clique(g: LabeledGraph, c: Iterable[int]) -> bool:
    c = list(c)
    rows = g.rows
    mask = 0
    for v in c:
        mask |= 1 << v
    return all((rows[v] | (1 << v)) & mask == mask for v in c)


def is_maximal_clique(g: LabeledGraph, c: Iterable[int]) -> bool:
    c = list(c)
    if not is_clique(g, c):
        return False
    rows = g.rows
    common = (1 << g.order) - 1
    mask = 0
    for v in c:
        common &= rows[v]
        mask |= 1 << v
    return not common & ~mask


def size_histogram(cliques: Iterable[Sequence[int]]) -> dict[int, int]:
    return dict(sorted(Counter(len(c) for c in cliques).items()))


def delsarte_bound(s: Spectrum) -> int:
    """floor(1 - k / theta2) for the smallest eigenvalue theta2 < 0."""
    if s.theta2 >= 0:
        raise ValueError("the bound needs a negative smallest eigenvalue")
    return math.floor(1 - Fraction(s.k) / Fraction(s.theta2))


# ---------------------------------------------------------------------------
# classification in G_3(2)

class CliqueClass(enum.Enum):
    ELLIPTIC_SECTION_5 = "EllipticSection5"
    OVOID_8 = "Ovoid8"
    GENERATOR_8 = "Generator8"
    CONE_PQMINUS_8 = "ConePQminus8"
    CONE_LINE_QPLUS_8 = "ConeLineQplus8"
    UNCLASSIFIED = "Unclassified"


TABLE1_COUNTS = {
    CliqueClass.ELLIPTIC_SECTION_5: 10752,
    CliqueClass.OVOID_8: 960,
    CliqueClass.GENERATOR_8: 15,
    CliqueClass.CONE_PQMINUS_8: 840,
    CliqueClass.CONE_LINE_QPLUS_8: 210,
}


@dataclass(frozen=True)
class CliqueRecord:
    vertex_set: tuple
    size: int
    sim1_edges: int
    sim2_edges: int
    span_dim: int
    span_meet_pi_dim: int
    section: SectionType
    klass: CliqueClass
    completion: int | None = None  # Pi point completing an Ovoid8 clique to an ovoid

    def as_dict(self) -> dict:
        return {
            "vertex_set": list(self.vertex_set),
            "size": self.size,
            "sim1_edges": self.sim1_edges,
            "sim2_edges": self.sim2_edges,
            "span_dim": self.span_dim,
            "span_meet_pi_dim": self.span_meet_pi_dim,
            "section": {"dim": self.section.dim, "radical_dim": self.section.radical_dim,
                        "point_count": self.section.point_count,
                        "tag": self.section.tag.value},
            "klass": self.klass.value,
        }


def label_profile(g: LabeledGraph, c: Sequence[int]) -> tuple[int, int]:
    """(number of SIM1 edges, number of SIM2 edges) inside c."""
    s1 = s2 = 0
    for i, u in enumerate(c):
        for v in c[i + 1:]:
            lab = g.labels[u, v]
            if lab == EdgeLabel.SIM1:
                s1 += 1
            elif lab == EdgeLabel.SIM2:
                s2 += 1
    return s1, s2


def ovoid_completion(qc: QuadricCtx, pts) -> int | None:
    """Index of the unique generator point that is non-collinear with all of pts, if any."""
    cand = qc.pi_mask
    full = (1 << len(qc.points)) - 1
    for p in pts:
        cand &= full & ~qc.collinear_bits[qc.index[p]]
    if cand.bit_count() != 1:
        return None
    return cand.bit_length() - 1


def assign_class(size, s1, s2, span_dim, meet_dim, tag, ovoid_ok) -> CliqueClass:
    """Map the invariants of a maximal clique of G_3(2) to its class."""
    npairs = size * (size - 1) // 2
    all1 = s1 == npairs
    all2 = s2 == npairs
    mixed = s1 > 0 and s2 > 0
    if size == 5 and all1 and span_dim == 3 and meet_dim == -1 and tag is SectionTag.ELLIPTIC:
        return CliqueClass.ELLIPTIC_SECTION_5
    if size == 8 and all1 and ovoid_ok:
        return CliqueClass.OVOID_8
    if size == 8 and all2 and span_dim == 3 and tag is SectionTag.TOTALLY_ISOTROPIC and meet_dim == 2:
        return CliqueClass.GENERATOR_8
    if size == 8 and mixed and span_dim == 4 and meet_dim == 1 and tag is SectionTag.CONE:
        return CliqueClass.CONE_PQMINUS_8
    if size == 8 and mixed and span_dim == 3 and meet_dim == 1 and tag is SectionTag.CONE:
        return CliqueClass.CONE_LINE_QPLUS_8
    return CliqueClass.UNCLASSIFIED


def classify_clique(g: LabeledGraph, qc: QuadricCtx, c: Sequence[int]) -> CliqueRecord:
    c = tuple(sorted(c))
    if not is_clique(g, c):
        raise NotAClique(f"{c} is not a clique")
    if not is_maximal_clique(g, c):
        raise NotMaximal(f"{c} is not a maximal clique")
    pts = [g.vertices[v] for v in c]
    sp = pg.span(pts, qc.field, qc.m)
    meet_dim = pg.meet(sp, qc.pi).dim
    sec = section_type(qc, sp)
    s1, s2 = label_profile(g, c)
    comp = None
    ovoid_ok = False
    if len(c) == qc.q**qc.n and s1 == len(c) * (len(c) - 1) // 2:
        comp = ovoid_completion(qc, pts)
        if comp is not None:
            full = pts + [qc.points[comp]]
            ovoid_ok = is_ovoid(qc, full) and is_ovoid_by_generators(qc, full)
    klass = assign_class(len(c), s1, s2, sp.dim, meet_dim, sec.tag, ovoid_ok)
    return CliqueRecord(c, len(c), s1, s2, sp.dim, meet_dim, sec, klass, comp)


def classify_all(g: LabeledGraph, qc: QuadricCtx, cliques=None, strict: bool = True):
    """Classify every maximal clique; returns (histogram, records).

    With ``strict`` an UnclassifiedCliqueFound is raised on the first clique
    outside the known classes.
    """
    if cliques is None:
        cliques = maximal_cliques(g)
    records = []
    hist = Counter()
    for c in cliques:
        rec = classify_clique(g, qc, c)
        if strict and rec.klass is CliqueClass.UNCLASSIFIED:
            raise UnclassifiedCliqueFound(rec)
        hist[rec.klass] += 1
        records.append(rec)
    ordered = {k: hist[k] for k in CliqueClass if hist[k] or k is not CliqueClass.UNCLASSIFIED}
    return ordered, records
