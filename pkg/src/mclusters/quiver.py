"""
quiver.py

Bound quivers with length-two zero relations, the construction of the bound
quiver of an angulation, gentleness, and isomorphism testing.
"""

from __future__ import annotations

from collections import Counter, defaultdict
from dataclasses import dataclass, field
from typing import Dict, FrozenSet, Iterable, List, NamedTuple, Optional, Sequence, Tuple

from .angulation import Angulation, ArcEdge


@dataclass(frozen=True, order=True)
class Arrow:
    id: int
    source: int
    target: int
    label: Optional[str] = field(default=None, compare=False)


@dataclass(frozen=True)
class BoundQuiver:
    """A quiver together with a set of zero relations ``(a, b)``: the path a then b is zero."""

    vertices: Tuple[int, ...]
    arrows: Tuple[Arrow, ...]
    relations: FrozenSet[Tuple[int, int]] = frozenset()

    def __post_init__(self) -> None:
        object.__setattr__(self, "relations", frozenset(self.relations))
        if len(set(self.vertices)) != len(self.vertices):
            raise ValueError("duplicate vertex")
        by_id: Dict[int, Arrow] = {}
        vset = set(self.vertices)
        for a in self.arrows:
            if a.id in by_id:
                raise ValueError(f"duplicate arrow id {a.id}")
            if a.source not in vset or a.target not in vset:
                raise ValueError(f"arrow {a.id} uses an unknown vertex")
            by_id[a.id] = a
        for a, b in self.relations:
            if a not in by_id or b not in by_id:
                raise ValueError(f"relation ({a}, {b}) references a missing arrow")
            if by_id[a].target != by_id[b].source:
                raise ValueError(f"relation ({a}, {b}) is not composable")
        object.__setattr__(self, "_by_id", by_id)

    def arrow(self, aid: int) -> Arrow:
        return self._by_id[aid]

    @property
    def arrow_ids(self) -> List[int]:
        return [a.id for a in self.arrows]

    def out_arrows(self, v: int) -> List[Arrow]:
        return [a for a in self.arrows if a.source == v]

    def in_arrows(self, v: int) -> List[Arrow]:
        return [a for a in self.arrows if a.target == v]

    def opposite(self) -> "BoundQuiver":
        arrows = tuple(Arrow(a.id, a.target, a.source, a.label) for a in self.arrows)
        return BoundQuiver(self.vertices, arrows, frozenset((b, a) for a, b in self.relations))

    def relabel(self, vmap: Dict[int, int], amap: Dict[int, int]) -> "BoundQuiver":
        arrows = tuple(sorted(Arrow(amap[a.id], vmap[a.source], vmap[a.target], a.label)
                              for a in self.arrows))
        return BoundQuiver(
            tuple(sorted(vmap[v] for v in self.vertices)),
            arrows,
            frozenset((amap[a], amap[b]) for a, b in self.relations),
        )

    def without_arrows(self, removed: Iterable[int]) -> "BoundQuiver":
        removed = set(removed)
        return BoundQuiver(
            self.vertices,
            tuple(a for a in self.arrows if a.id not in removed),
            frozenset(r for r in self.relations if not (set(r) & removed)),
        )

    def is_connected(self) -> bool:
        if not self.vertices:
            return True
        adj = defaultdict(set)
        for a in self.arrows:
            adj[a.source].add(a.target)
            adj[a.target].add(a.source)
        seen = {self.vertices[0]}
        stack = [self.vertices[0]]
        while stack:
            v = stack.pop()
            for w in adj[v] - seen:
                seen.add(w)
                stack.append(w)
        return len(seen) == len(self.vertices)


def bound_quiver(a: Angulation) -> BoundQuiver:
    """Arrows join arcs adjacent at a corner of a face, from the clockwise-later
    arc to the earlier one; two consecutive arrows of one face compose to zero."""
    arrows: List[Arrow] = []
    relations = set()
    for face in a.faces:
        edges = face.edges
        size = len(edges)
        at: Dict[int, int] = {}
        for i in range(size):
            e0, e1 = edges[i], edges[(i + 1) % size]
            if isinstance(e0, ArcEdge) and isinstance(e1, ArcEdge):
                at[i] = len(arrows)
                arrows.append(Arrow(len(arrows), e1.arc, e0.arc))
        for i, beta in at.items():
            alpha = at.get((i + 1) % size)
            if alpha is not None and alpha != beta:
                relations.add((alpha, beta))
    return BoundQuiver(tuple(range(len(a.arcs))), tuple(arrows), frozenset(relations))


def is_gentle(q: BoundQuiver) -> Tuple[bool, str]:
    indeg = Counter(a.target for a in q.arrows)
    outdeg = Counter(a.source for a in q.arrows)
    for v in q.vertices:
        if indeg[v] > 2:
            return False, f"vertex {v} has in-degree {indeg[v]}"
        if outdeg[v] > 2:
            return False, f"vertex {v} has out-degree {outdeg[v]}"
    for b in q.arrows:
        # arrows composable into b, split by whether the composite is zero
        into = [a for a in q.in_arrows(b.source)]
        zero = [a for a in into if (a.id, b.id) in q.relations]
        if len(zero) > 1:
            return False, f"arrow {b.id} has {len(zero)} zero relations on the left"
        if len(into) - len(zero) > 1:
            return False, f"arrow {b.id} has {len(into) - len(zero)} nonzero compositions on the left"
    for a in q.arrows:
        out = q.out_arrows(a.target)
        zero = [b for b in out if (a.id, b.id) in q.relations]
        if len(zero) > 1:
            return False, f"arrow {a.id} has {len(zero)} zero relations on the right"
        if len(out) - len(zero) > 1:
            return False, f"arrow {a.id} has {len(out) - len(zero)} nonzero compositions on the right"
    return True, "gentle"


class Isomorphism(NamedTuple):
    vertices: Dict[int, int]
    arrows: Dict[int, int]


def _signature(q: BoundQuiver) -> Dict[int, tuple]:
    sig = {}
    for v in q.vertices:
        outs = q.out_arrows(v)
        ins = q.in_arrows(v)
        loops = sum(1 for a in outs if a.target == v)
        through = sum(1 for a, b in q.relations if q.arrow(a).target == v)
        sig[v] = (len(ins), len(outs), loops, through)
    return sig


def quivers_isomorphic(q1: BoundQuiver, q2: BoundQuiver,
                       up_to_opposite: bool = False) -> Optional[Isomorphism]:
    """A bijection on vertices and arrows preserving incidence and relations, or None."""
    found = _isomorphism(q1, q2)
    if found is None and up_to_opposite:
        found = _isomorphism(q1, q2.opposite())
    return found


def _isomorphism(q1: BoundQuiver, q2: BoundQuiver) -> Optional[Isomorphism]:
    if (len(q1.vertices), len(q1.arrows), len(q1.relations)) != (
        len(q2.vertices), len(q2.arrows), len(q2.relations)
    ):
        return None
    sig1, sig2 = _signature(q1), _signature(q2)
    if sorted(sig1.values()) != sorted(sig2.values()):
        return None
    mult1 = Counter((a.source, a.target) for a in q1.arrows)
    mult2 = Counter((a.source, a.target) for a in q2.arrows)

    # visit q1 vertices so that each one (after the first of its component)
    # has an already placed neighbour
    adj1 = defaultdict(set)
    for a in q1.arrows:
        adj1[a.source].add(a.target)
        adj1[a.target].add(a.source)
    order: List[int] = []
    placed = set()
    for root in q1.vertices:
        if root in placed:
            continue
        stack = [root]
        placed.add(root)
        while stack:
            v = stack.pop(0)
            order.append(v)
            for w in sorted(adj1[v]):
                if w not in placed:
                    placed.add(w)
                    stack.append(w)

    vmap: Dict[int, int] = {}
    used = set()

    def consistent(v: int, w: int) -> bool:
        if mult1[(v, v)] != mult2[(w, w)]:
            return False
        for u, x in vmap.items():
            if mult1[(v, u)] != mult2[(w, x)] or mult1[(u, v)] != mult2[(x, w)]:
                return False
        return True

    def assign_vertices(k: int) -> Optional[Dict[int, int]]:
        if k == len(order):
            return assign_arrows()
        v = order[k]
        for w in q2.vertices:
            if w in used or sig2[w] != sig1[v] or not consistent(v, w):
                continue
            vmap[v] = w
            used.add(w)
            res = assign_vertices(k + 1)
            if res is not None:
                return res
            del vmap[v]
            used.discard(w)
        return None

    def assign_arrows() -> Optional[Dict[int, int]]:
        by_pair = defaultdict(list)
        for a in q2.arrows:
            by_pair[(a.source, a.target)].append(a.id)
        arrows1 = sorted(q1.arrows, key=lambda a: a.id)
        rel_of = defaultdict(list)
        for a, b in q1.relations:
            rel_of[a].append((a, b))
            rel_of[b].append((a, b))
        amap: Dict[int, int] = {}
        taken = set()

        def step(k: int) -> bool:
            if k == len(arrows1):
                return True
            a = arrows1[k]
            for b in by_pair[(vmap[a.source], vmap[a.target])]:
                if b in taken:
                    continue
                amap[a.id] = b
                ok = all(
                    (amap[x], amap[y]) in q2.relations
                    for x, y in rel_of[a.id]
                    if x in amap and y in amap
                )
                if ok:
                    taken.add(b)
                    if step(k + 1):
                        return True
                    taken.discard(b)
                del amap[a.id]
            return False

        return dict(amap) if step(0) else None

    amap = assign_vertices(0)
    if amap is None:
        return None
    return Isomorphism(dict(vmap), amap)
