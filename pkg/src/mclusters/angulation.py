"""
angulation.py

(m+2)-angulations: validation, face extraction and enumeration.

Faces are traced with a rotation system.  On the polygon the rotation at a
vertex is the cyclic order of its neighbours; on the strip it is computed in
the universal cover (boundary P bottom, Q top) and a face is closed once the
tracing returns to the starting dart up to a deck translation.  A non-zero
total translation means the region is not a disk.
"""

from __future__ import annotations

import gc
import math
from contextlib import contextmanager
from dataclasses import dataclass, field
from functools import lru_cache
from fractions import Fraction
from typing import Dict, List, Optional, Sequence, Tuple, Union

from .errors import (
    BadFace,
    CrossingArcs,
    DuplicateArc,
    MClusterError,
    NotMDiagonal,
    WrongArcCount,
)
from .surface import (
    P,
    Q,
    Arc,
    Diagonal,
    MarkedSurface,
    Peripheral,
    Polygon,
    Strip,
    Transjective,
    arc_key,
    arcs_cross,
    is_m_diagonal,
    normalize_arc,
    tilt,
)

Vertex = Tuple[Optional[str], int]


@dataclass(frozen=True, order=True)
class BoundarySegment:
    """Boundary piece from ``index`` to ``index + 1``; boundary is None on the polygon."""

    boundary: Optional[str]
    index: int

    def key(self) -> tuple:
        return (0, self.boundary or "", self.index)

    def text(self) -> str:
        return f"b{self.boundary or ''}{self.index}"


@dataclass(frozen=True, order=True)
class ArcEdge:
    arc: int

    def key(self) -> tuple:
        return (1, "", self.arc)

    def text(self) -> str:
        return f"a{self.arc}"


Edge = Union[BoundarySegment, ArcEdge]


@dataclass(frozen=True)
class Face:
    """A complementary region; ``edges`` are in clockwise order.

    ``corners[i]`` is the vertex (in cover coordinates on the strip) where
    ``edges[i]`` starts when walking clockwise.
    """

    edges: Tuple[Edge, ...]
    corners: Tuple[Vertex, ...] = field(compare=False, default=())
    annular: bool = False

    @property
    def size(self) -> int:
        return len(self.edges)

    def arc_ids(self) -> List[int]:
        return [e.arc for e in self.edges if isinstance(e, ArcEdge)]

    def key(self) -> tuple:
        return (self.annular, tuple(e.key() for e in self.edges))

    def text(self) -> str:
        body = " ".join(e.text() for e in self.edges)
        return body + (" (annular)" if self.annular else "")


@dataclass(frozen=True)
class Angulation:
    surface: MarkedSurface
    arcs: Tuple[Arc, ...]
    faces: Tuple[Face, ...]

    @property
    def m(self) -> int:
        return self.surface.m

    def boundary_segment_count(self) -> int:
        return boundary_segment_count(self.surface)


def boundary_segment_count(s: MarkedSurface) -> int:
    if isinstance(s, Polygon):
        return s.npoints
    return s.period(P) + s.period(Q)


def expected_arc_count(s: MarkedSurface) -> int:
    return s.n - 1 if isinstance(s, Polygon) else s.p + s.q


# ---------------------------------------------------------------------------
# face extraction


class _EdgeCodes:
    """Integer codes for edges, ordered like ``Edge.key``: boundary pieces, then arcs."""

    def __init__(self, s: MarkedSurface, narcs: int):
        boundary = _boundary_edges(s)
        self.q0 = s.npoints if isinstance(s, Polygon) else s.period(P)
        self.first_arc = len(boundary)
        self.edges: List[Edge] = boundary + _arc_edges(narcs)

    def arc(self, aid: int) -> int:
        return self.first_arc + aid


@lru_cache(maxsize=256)
def _boundary_edges_cached(s: MarkedSurface) -> Tuple[Edge, ...]:
    if isinstance(s, Polygon):
        return tuple(BoundarySegment(None, v) for v in range(s.npoints))
    return tuple([BoundarySegment(P, r) for r in range(s.period(P))]
                 + [BoundarySegment(Q, r) for r in range(s.period(Q))])


def _boundary_edges(s: MarkedSurface) -> List[Edge]:
    return list(_boundary_edges_cached(s))


@lru_cache(maxsize=64)
def _arc_edges_cached(narcs: int) -> Tuple[ArcEdge, ...]:
    return tuple(ArcEdge(a) for a in range(narcs))


def _arc_edges(narcs: int) -> List[Edge]:
    return list(_arc_edges_cached(narcs))


def _shift_vertex(v: Vertex, s: Strip, t: int) -> Vertex:
    return (v[0], v[1] + t * s.period(v[0]))


def _finish_faces(cycles, annular, codes: _EdgeCodes, s: MarkedSurface) -> List[Face]:
    """Turn clockwise (codes, corners) cycles into canonical, sorted faces."""
    keyed = []
    for cs, corners in cycles:
        lo = min(cs)
        if cs.count(lo) == 1:
            r = cs.index(lo)
        else:
            r = min(range(len(cs)), key=lambda i: cs[i:] + cs[:i])
        cs = cs[r:] + cs[:r]
        corners = corners[r:] + corners[:r]
        if isinstance(s, Strip):
            side, lift = corners[0]
            t = lift // s.period(side)
            if t:
                corners = [_shift_vertex(v, s, -t) for v in corners]
        keyed.append((cs, corners))
    keyed.sort(key=lambda item: item[0])
    get = codes.edges.__getitem__
    faces = [Face(tuple(map(get, cs)), tuple(corners)) for cs, corners in keyed]
    if annular:
        cs = sorted(c for c_list in annular for c in c_list)
        faces.append(Face(tuple(map(get, cs)), (), annular=True))
    return faces


def _polygon_faces(s: Polygon, arcs: Sequence[Diagonal]) -> List[Face]:
    """Faces of a chord diagram: the face inside chord (i, j) runs clockwise
    from i to j along the outermost chords and boundary pieces below it."""
    npts = s.npoints
    codes = _EdgeCodes(s, len(arcs))
    first = codes.first_arc
    longest: List[List[Tuple[int, int]]] = [[] for _ in range(npts)]
    for aid, d in enumerate(arcs):
        longest[d.i].append((d.j, first + aid))
    for lst in longest:
        lst.sort(reverse=True)
    # every chord, and the boundary piece from npts - 1 back to 0, closes one face
    tops = [(d.i, d.j, first + aid) for aid, d in enumerate(arcs)] + [(0, npts - 1, npts - 1)]
    cycles = []
    for i, j, closing in tops:
        cs: List[int] = []
        corners: List[Tuple[None, int]] = []
        v = i
        while v < j:
            corners.append((None, v))
            for w, code in longest[v]:
                if w < j or (v != i and w == j):
                    cs.append(code)
                    v = w
                    break
            else:
                cs.append(v)
                v += 1
        cs.append(closing)
        corners.append((None, j))
        cycles.append((cs, corners))
    return _finish_faces(cycles, [], codes, s)


class _StripRotation:
    """Counterclockwise rotation system of a strip arc set in the universal cover.

    Around a point of P (bottom) the order runs from the boundary piece to the
    right, through peripheral arcs going right (short to long), transjective
    arcs (by slope), peripheral arcs going left (long to short), to the
    boundary piece on the left.  Points of Q are handled symmetrically.
    """

    def __init__(self, s: Strip, arcs: Sequence[Arc], codes: _EdgeCodes):
        self.s = s
        self.arcs = arcs
        self.codes = codes
        self._cache: Dict[Vertex, Dict[Tuple[Vertex, int], Tuple[Vertex, int]]] = {}

    def _base(self, side: str, r: int):
        s = self.s
        m = s.m
        mp, mq = s.period(P), s.period(Q)
        per = s.period(side)
        q0 = self.codes.q0
        out = []
        if side == P:
            out.append(((0,), (P, r + 1), r % mp))
            out.append(((4,), (P, r - 1), (r - 1) % mp))
        else:
            out.append(((0,), (Q, r - 1), q0 + (r - 1) % mq))
            out.append(((4,), (Q, r + 1), q0 + r % mq))
        for aid, arc in enumerate(self.arcs):
            c = self.codes.first_arc + aid
            if isinstance(arc, Transjective):
                if side == P and (r - arc.x) % mp == 0:
                    y = arc.y + (r - arc.x) // mp * mq
                    slope = Fraction(y, mq) - Fraction(r, mp)
                    out.append(((2, -slope), (Q, y), c))
                elif side == Q and (r - arc.y) % mq == 0:
                    x = arc.x + (r - arc.y) // mq * mp
                    slope = Fraction(x, mp) - Fraction(r, mq)
                    out.append(((2, slope), (P, x), c))
            elif isinstance(arc, Peripheral) and arc.boundary == side:
                length = arc.length(m)
                if (r - arc.u) % per == 0:
                    key = (1, length) if side == P else (3, -length)
                    out.append((key, (side, r + length), c))
                if (r - arc.u - length) % per == 0:
                    key = (3, -length) if side == P else (1, length)
                    out.append((key, (side, r - length), c))
        out.sort(key=lambda item: item[0])
        # map (incoming neighbour, edge) to the next clockwise (neighbour, edge)
        turn = {}
        for idx in range(1, len(out)):
            turn[(out[idx][1], out[idx][2])] = (out[idx - 1][1], out[idx - 1][2])
        return turn

    def next_dart(self, dart):
        u, w, c = dart
        side, lift = w
        t = lift // self.s.period(side)
        base_w = (side, lift - t * self.s.period(side))
        turn = self._cache.get(base_w)
        if turn is None:
            turn = self._cache[base_w] = self._base(side, base_w[1])
        nw, nc = turn[(_shift_vertex(u, self.s, -t), c)]
        return (w, _shift_vertex(nw, self.s, t), nc)


def _strip_faces(s: Strip, arcs: Sequence[Arc]) -> List[Face]:
    m = s.m
    mp, mq = s.period(P), s.period(Q)
    codes = _EdgeCodes(s, len(arcs))
    rot = _StripRotation(s, arcs, codes)

    def norm(dart):
        u, w, c = dart
        t = u[1] // s.period(u[0])
        return (_shift_vertex(u, s, -t), _shift_vertex(w, s, -t), c), t

    starts = [((P, r), (P, r + 1), r) for r in range(mp)]
    starts += [((Q, r + 1), (Q, r), codes.q0 + r) for r in range(mq)]
    for aid, arc in enumerate(arcs):
        c = codes.first_arc + aid
        if isinstance(arc, Transjective):
            a, b = (P, arc.x), (Q, arc.y)
        else:
            a, b = (arc.boundary, arc.u), (arc.boundary, arc.u + arc.length(m))
        starts += [(a, b, c), (b, a, c)]

    seen = set()
    cycles = []
    annular = []
    for start in starts:
        start, _ = norm(start)
        if start in seen:
            continue
        cyc = []
        cur = start
        while True:
            key, shift = norm(cur)
            if key in seen:
                break
            seen.add(key)
            cyc.append(cur)
            cur = rot.next_dart(cur)
        # traced counterclockwise; store clockwise
        cyc.reverse()
        cs = [d[2] for d in cyc]
        if shift:
            annular.append(cs)
        else:
            cycles.append((cs, [d[1] for d in cyc]))
    return _finish_faces(cycles, annular, codes, s)


def extract_faces(s: MarkedSurface, arcs: Sequence[Arc]) -> List[Face]:
    """Complementary regions of pairwise non-crossing arcs, canonically ordered.

    When the arcs do not cut the strip into disks, the single non-disk region
    comes last with ``annular`` set and its edges listed in sorted order.
    """
    if isinstance(s, Polygon):
        return _polygon_faces(s, arcs)
    return _strip_faces(s, arcs)


# ---------------------------------------------------------------------------
# validation


def validate_angulation(s: MarkedSurface, arcs: Sequence[Arc]) -> Angulation:
    for arc in arcs:
        if not is_m_diagonal(arc, s):
            raise NotMDiagonal(f"{arc.text()} is not an m-diagonal of {s.header()}")
    arcs = tuple(normalize_arc(a, s) for a in arcs)
    if len(set(arcs)) != len(arcs):
        raise DuplicateArc("arc listed twice")
    if isinstance(s, Polygon):
        pairs = [(a.i, a.j) for a in arcs]
        for i, (a0, a1) in enumerate(pairs):
            for b0, b1 in pairs[i + 1:]:
                if a0 < b0 < a1 < b1 or b0 < a0 < b1 < a1:
                    raise CrossingArcs(f"d {a0} {a1}", f"d {b0} {b1}")
    else:
        for i in range(len(arcs)):
            for j in range(i + 1, len(arcs)):
                if arcs_cross(arcs[i], arcs[j], s):
                    raise CrossingArcs(arcs[i].text(), arcs[j].text())
    expected = expected_arc_count(s)
    if len(arcs) != expected:
        raise WrongArcCount(expected, len(arcs))
    faces = extract_faces(s, arcs)
    for f in faces:
        if f.annular:
            raise BadFace(f.text(), "annular")
        if f.size != s.m + 2:
            raise BadFace(f.text(), f.size)
    return Angulation(s, arcs, tuple(faces))


# ---------------------------------------------------------------------------
# enumeration


def _polygon_arc_sets(m: int, n: int) -> List[Tuple[List[Diagonal], List[Tuple[int, ...]]]]:
    """All (m+2)-angulations by completing one face at a time.

    Each result is the diagonal list and the faces as clockwise corner
    sequences (increasing labels, closing back to the first corner).
    """
    npts = n * m + 2
    out: List[Tuple[List[Diagonal], List[Tuple[int, ...]]]] = []

    def compositions(total: int, parts: int):
        if parts == 1:
            yield (total,)
            return
        for first in range(total + 1):
            for rest in compositions(total - first, parts - 1):
                yield (first,) + rest

    def fill(regions, chosen, faces) -> None:
        if not regions:
            out.append((list(chosen), list(faces)))
            return
        reg = regions[-1]
        rest = regions[:-1]
        # the (m+2)-gon on the edge (reg[0], reg[-1]) picks m more vertices;
        # consecutive picks are am+1 steps apart along reg
        j = (len(reg) - 2) // m
        for comp in compositions(j - 1, m + 1):
            new_regions = list(rest)
            new_arcs = []
            corners = [reg[0]]
            idx = 0
            for a in comp:
                nxt = idx + a * m + 1
                if a:
                    new_regions.append(reg[idx:nxt + 1])
                    new_arcs.append(Diagonal(reg[idx], reg[nxt]))
                corners.append(reg[nxt])
                idx = nxt
            fill(new_regions, chosen + new_arcs, faces + [tuple(corners)])

    if n >= 2:
        fill([tuple(range(npts))], [], [])
    else:
        out.append(([], [tuple(range(npts))]))
    return out


@lru_cache(maxsize=64)
def _polygon_points(npts: int) -> Tuple[Vertex, ...]:
    return tuple((None, v) for v in range(npts))


@contextmanager
def _collector_paused():
    """Bulk construction of acyclic values; the cycle collector only adds rescans."""
    was_enabled = gc.isenabled()
    gc.disable()
    try:
        yield
    finally:
        if was_enabled:
            gc.enable()


def _polygon_angulation(s: Polygon, arcs: List[Diagonal], corner_lists) -> Angulation:
    """Assemble an angulation from faces already known as corner sequences."""
    npts = s.npoints
    arcs.sort(key=arc_key)
    codes = _EdgeCodes(s, len(arcs))
    first = codes.first_arc
    code_of = {(d.i, d.j): first + aid for aid, d in enumerate(arcs)}
    code_of[(0, npts - 1)] = npts - 1
    points = _polygon_points(npts)
    cycles = []
    for cs in corner_lists:
        edge_codes = [u if w == u + 1 else code_of[(u, w)] for u, w in zip(cs, cs[1:])]
        edge_codes.append(code_of[(cs[0], cs[-1])])
        cycles.append((edge_codes, [points[v] for v in cs]))
    return Angulation(s, tuple(arcs), tuple(_finish_faces(cycles, [], codes, s)))


def strip_candidates(s: Strip, winding_bound: int) -> List[Arc]:
    """Normalized m-diagonals whose tilt is at most ``winding_bound`` periods."""
    m, p, q = s.m, s.p, s.q
    mp = s.period(P)
    bound = winding_bound * m * p * q
    out: List[Arc] = []
    for x in range(mp):
        # |x/(mp) - y/(mq)| <= W  <=>  |xq - yp| <= W m p q
        lo = -((bound - x * q) // p)
        hi = (x * q + bound) // p
        for y in range(lo, hi + 1):
            if (y - x) % m == 0:
                out.append(Transjective(x, y))
    for side in (P, Q):
        per = s.period(side)
        for u in range(per):
            k = 1
            while k * m + 1 < per:
                out.append(Peripheral(side, u, k))
                k += 1
    assert all(abs(tilt(a, s)) <= winding_bound for a in out)
    return sorted(out, key=arc_key)


def enumerate_angulations(s: MarkedSurface, winding_bound: int = 2) -> List[Angulation]:
    if winding_bound < 1:
        raise ValueError("winding bound must be positive")
    if isinstance(s, Polygon):
        with _collector_paused():
            found = [_polygon_angulation(s, arcs, faces) for arcs, faces in _polygon_arc_sets(s.m, s.n)]
        found.sort(key=lambda a: tuple(arc_key(x) for x in a.arcs))
        return found

    cands = strip_candidates(s, winding_bound)
    ncand = len(cands)
    compat = []
    for i, a in enumerate(cands):
        mask = 0
        for j, b in enumerate(cands):
            if i != j and not arcs_cross(a, b, s):
                mask |= 1 << j
        compat.append(mask)
    target = s.p + s.q
    found: List[Angulation] = []

    def dfs(start: int, chosen: List[int], mask: int) -> None:
        if len(chosen) == target:
            try:
                found.append(validate_angulation(s, [cands[i] for i in chosen]))
            except MClusterError:
                pass
            return
        need = target - len(chosen)
        if bin(mask >> start).count("1") < need:
            return
        for i in range(start, ncand):
            if mask >> i & 1:
                chosen.append(i)
                dfs(i + 1, chosen, mask & compat[i])
                chosen.pop()

    with _collector_paused():
        dfs(0, [], (1 << ncand) - 1)
    return found


def fuss_catalan(m: int, n: int) -> int:
    return math.comb((m + 1) * n, n - 1) // n
