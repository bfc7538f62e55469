"""
classify.py

Structural predicates on bound quivers: saturated and root cycles, bands and
representation type of gentle quivers, global dimension, the characterization
of representation-infinite quivers coming from the strip, and the census of
transjective components of a strip angulation.
"""

from __future__ import annotations

import math
from collections import defaultdict
from dataclasses import dataclass, field
from typing import Dict, FrozenSet, List, Optional, Sequence, Tuple

from .angulation import Angulation
from .errors import Disconnected, NotGentle, NotStrip
from .quiver import BoundQuiver, is_gentle
from .surface import Strip, Transjective, component_index

FORWARD = 1
INVERSE = -1

FINITE = "Finite"
INFINITE_TYPE = "Infinite"
INFINITE = math.inf

Letter = Tuple[int, int]


@dataclass(frozen=True)
class Walk:
    letters: Tuple[Letter, ...]
    closed: bool = True

    def __len__(self) -> int:
        return len(self.letters)

    def is_oriented(self) -> bool:
        return all(d == FORWARD for _, d in self.letters)

    def arrow_ids(self) -> List[int]:
        return [a for a, _ in self.letters]

    def to_json(self) -> list:
        return [[a, "+" if d == FORWARD else "-"] for a, d in self.letters]

    def text(self) -> str:
        return " ".join(f"{a}{'+' if d == FORWARD else '-'}" for a, d in self.letters)


def _start(q: BoundQuiver, letter: Letter) -> int:
    a = q.arrow(letter[0])
    return a.source if letter[1] == FORWARD else a.target


def _end(q: BoundQuiver, letter: Letter) -> int:
    a = q.arrow(letter[0])
    return a.target if letter[1] == FORWARD else a.source


def is_walk(q: BoundQuiver, w: Walk) -> bool:
    """Connectable and reduced, cyclically when closed."""
    ls = w.letters
    n = len(ls)
    pairs = range(n) if w.closed else range(n - 1)
    for i in pairs:
        x, y = ls[i], ls[(i + 1) % n]
        if _end(q, x) != _start(q, y):
            return False
        if x[0] == y[0] and x[1] == -y[1]:
            return False
    return True


def _is_zero_pair(q: BoundQuiver, x: Letter, y: Letter) -> bool:
    """True when letters x then y read as a path lying in the relations."""
    if x[1] == FORWARD and y[1] == FORWARD:
        return (x[0], y[0]) in q.relations
    if x[1] == INVERSE and y[1] == INVERSE:
        return (y[0], x[0]) in q.relations
    return False


def relation_free(q: BoundQuiver, w: Walk) -> bool:
    ls = w.letters
    n = len(ls)
    pairs = range(n) if w.closed else range(n - 1)
    return not any(_is_zero_pair(q, ls[i], ls[(i + 1) % n]) for i in pairs)


def _canonical_cycle(letters: Sequence[Letter]) -> Tuple[Letter, ...]:
    """Rotate/invert a simple closed walk so it starts with its smallest arrow, forward."""
    letters = list(letters)
    lo = min(a for a, _ in letters)
    for idx, (a, d) in enumerate(letters):
        if a == lo:
            break
    if d == INVERSE:
        letters = [(b, -e) for b, e in reversed(letters)]
        idx = len(letters) - 1 - idx
    return tuple(letters[idx:] + letters[:idx])


def _canonical_band(letters: Sequence[Letter]) -> Tuple[Letter, ...]:
    """Smallest rotation of the walk or its inverse (letters may repeat)."""
    letters = list(letters)
    inv = [(a, -d) for a, d in reversed(letters)]
    best = None
    for seq in (letters, inv):
        for r in range(len(seq)):
            cand = tuple(seq[r:] + seq[:r])
            key = tuple((a, -d) for a, d in cand)  # forward before inverse
            if best is None or key < best[0]:
                best = (key, cand)
    return best[1]


def simple_cycles(q: BoundQuiver) -> List[Walk]:
    """Closed walks through distinct vertices using each arrow once, in canonical form."""
    rank = {v: i for i, v in enumerate(q.vertices)}
    inc = defaultdict(list)
    found = set()
    for a in q.arrows:
        if a.source == a.target:
            found.add(((a.id, FORWARD),))
            continue
        inc[a.source].append((a.id, FORWARD, a.target))
        inc[a.target].append((a.id, INVERSE, a.source))

    for s in q.vertices:
        path: List[Letter] = []
        on_path = {s}

        def dfs(v: int) -> None:
            for aid, d, w in inc[v]:
                if path and path[-1][0] == aid:
                    continue
                if w == s and path:
                    found.add(_canonical_cycle(path + [(aid, d)]))
                elif rank[w] > rank[s] and w not in on_path:
                    on_path.add(w)
                    path.append((aid, d))
                    dfs(w)
                    path.pop()
                    on_path.discard(w)

        dfs(s)
    return [Walk(c) for c in sorted(found)]


def oriented_cycles(q: BoundQuiver) -> List[Walk]:
    return [w for w in simple_cycles(q) if w.is_oriented()]


def _is_saturated(q: BoundQuiver, w: Walk) -> bool:
    ids = w.arrow_ids()
    n = len(ids)
    return w.is_oriented() and all((ids[i], ids[(i + 1) % n]) in q.relations for i in range(n))


def saturated_cycles(q: BoundQuiver) -> List[Walk]:
    return [w for w in simple_cycles(q) if _is_saturated(q, w)]


def root_cycles(q: BoundQuiver) -> List[Walk]:
    return [w for w in simple_cycles(q) if not _is_saturated(q, w)]


def _require_gentle(q: BoundQuiver) -> None:
    ok, why = is_gentle(q)
    if not ok:
        raise NotGentle(why)


def find_band(q: BoundQuiver) -> Optional[Walk]:
    """Shortest closed walk avoiding relations in both directions, cyclically.

    Such walks are exactly the cycles of the graph on letters in which x -> y
    when y may follow x; a shortest one has at most 2 * |arrows| letters.
    """
    _require_gentle(q)
    letters = [(a.id, d) for a in q.arrows for d in (FORWARD, INVERSE)]
    succ: Dict[Letter, List[Letter]] = {}
    starting = defaultdict(list)
    for y in letters:
        starting[_start(q, y)].append(y)
    for x in letters:
        succ[x] = [
            y for y in starting[_end(q, x)]
            if not (x[0] == y[0] and x[1] == -y[1]) and not _is_zero_pair(q, x, y)
        ]
    best = None
    for x in letters:
        # breadth first search for the shortest return to x
        parent = {x: None}
        frontier = [x]
        hit = None
        while frontier and hit is None:
            nxt = []
            for u in frontier:
                for y in succ[u]:
                    if y == x:
                        hit = u
                        break
                    if y not in parent:
                        parent[y] = u
                        nxt.append(y)
                if hit is not None:
                    break
            frontier = nxt
        if hit is None:
            continue
        cyc = []
        u = hit
        while u is not None:
            cyc.append(u)
            u = parent[u]
        cyc.reverse()
        cand = _canonical_band(cyc)
        key = (len(cand), tuple((a, -d) for a, d in cand))
        if best is None or key < best[0]:
            best = (key, cand)
    return Walk(best[1]) if best else None


def representation_type(q: BoundQuiver) -> str:
    return INFINITE_TYPE if find_band(q) is not None else FINITE


def _relation_successors(q: BoundQuiver) -> Dict[int, List[int]]:
    succ = defaultdict(list)
    for a, b in sorted(q.relations):
        succ[a].append(b)
    return succ


def _longest_relation_chain(q: BoundQuiver, arrows: Optional[set] = None) -> float:
    """Most consecutive relations along a path (restricted to ``arrows``); inf on a cycle."""
    succ = _relation_successors(q)
    allowed = set(q.arrow_ids) if arrows is None else arrows
    memo: Dict[int, float] = {}
    active = set()

    def depth(a: int) -> float:
        if a in memo:
            return memo[a]
        if a in active:
            return INFINITE
        active.add(a)
        best = 0
        for b in succ[a]:
            if b in allowed:
                best = max(best, 1 + depth(b))
        active.discard(a)
        memo[a] = best
        return best

    return max((depth(a) for a in allowed), default=0)


def gldim_gentle(q: BoundQuiver) -> float:
    """Global dimension of a gentle bound quiver algebra (``INFINITE`` if unbounded)."""
    _require_gentle(q)
    if not q.arrows:
        return 0
    if saturated_cycles(q):
        return INFINITE
    r = _longest_relation_chain(q)
    return INFINITE if r == INFINITE else 1 + r


def _gf2_rank(vectors: List[int]) -> int:
    basis: List[int] = []
    for v in vectors:
        for b in basis:
            v = min(v, v ^ b)
        if v:
            basis.append(v)
    return len(basis)


def cycle_vector(q: BoundQuiver, w: Walk) -> int:
    """The arrow set of a simple cycle as a GF(2) vector (bit i = i-th arrow)."""
    pos = {a: i for i, a in enumerate(q.arrow_ids)}
    return sum(1 << pos[a] for a in set(w.arrow_ids()))


def generated_by(q: BoundQuiver, generators: Sequence[Walk], w: Walk) -> bool:
    """Whether the cycle w is a GF(2) sum of the given cycles."""
    vecs = [cycle_vector(q, g) for g in generators]
    return _gf2_rank(vecs) == _gf2_rank(vecs + [cycle_vector(q, w)])


def is_rep_infinite_mcta_Atilde(q: BoundQuiver, m: int) -> Tuple[bool, str]:
    """Check the quiver-with-relations description of representation-infinite
    m-cluster tilted algebras arising from the strip.

    Clauses, reported in order by the diagnostic:
      gentle;
      (a) exactly one root cycle free of relations;
      (b) that root cycle and the saturated cycles generate every cycle
          (over GF(2)), so there are no other independent cycles;
      (c) at most m - 1 consecutive relations along paths avoiding the arrows
          of saturated cycles;
      (d) every saturated cycle has m + 2 arrows.
    """
    if not q.is_connected():
        raise Disconnected("quiver is not connected")
    ok, why = is_gentle(q)
    if not ok:
        return False, f"not gentle: {why}"
    free_roots = [w for w in root_cycles(q) if relation_free(q, w)]
    if len(free_roots) != 1:
        return False, f"(a) {len(free_roots)} relation-free root cycles"
    sats = saturated_cycles(q)
    vecs = [cycle_vector(q, w) for w in free_roots + sats]
    cyclomatic = len(q.arrows) - len(q.vertices) + 1
    if len(vecs) != cyclomatic or _gf2_rank(vecs) != cyclomatic:
        return False, (f"(b) cycle rank {cyclomatic} but {len(sats)} saturated "
                       f"cycles plus the root cycle")
    on_sat = {a for w in sats for a in w.arrow_ids()}
    outside = set(q.arrow_ids) - on_sat
    chain = _longest_relation_chain(q, outside)
    if chain > m - 1:
        return False, f"(c) {chain} consecutive relations outside saturated cycles"
    for w in sats:
        if len(w) != m + 2:
            return False, f"(d) saturated cycle of length {len(w)}, expected {m + 2}"
    return True, "representation-infinite m-cluster tilted of type A-tilde"


def transjective_census(a: Angulation) -> FrozenSet[int]:
    if not isinstance(a.surface, Strip):
        raise NotStrip("census is defined for strip angulations")
    return frozenset(component_index(x, a.surface) for x in a.arcs if isinstance(x, Transjective))


@dataclass
class ClassificationReport:
    gentle: bool
    saturated_cycles: List[Walk]
    root_cycles: List[Walk]
    band: Optional[Walk]
    rep_type: Optional[str]
    census: Optional[FrozenSet[int]]
    gldim: Optional[float]
    mcta_Atilde_infinite: Optional[bool]
    diagnostics: List[str] = field(default_factory=list)

    def to_json(self) -> dict:
        gldim = self.gldim
        if gldim == INFINITE:
            gldim = "Infinite"
        elif gldim is not None:
            gldim = int(gldim)
        return {
            "gentle": self.gentle,
            "saturated_cycles": [w.to_json() for w in self.saturated_cycles],
            "root_cycles": [w.to_json() for w in self.root_cycles],
            "band": self.band.to_json() if self.band else None,
            "rep_type": self.rep_type,
            "census": sorted(self.census) if self.census is not None else None,
            "gldim": gldim,
            "mcta_Atilde_infinite": self.mcta_Atilde_infinite,
            "diagnostics": list(self.diagnostics),
        }


def classify(q: BoundQuiver, m: Optional[int] = None,
             angulation: Optional[Angulation] = None) -> ClassificationReport:
    gentle, why = is_gentle(q)
    diagnostics = [why]
    band = rep = gldim = None
    if gentle:
        band = find_band(q)
        rep = INFINITE_TYPE if band is not None else FINITE
        gldim = gldim_gentle(q)
    census = None
    if angulation is not None:
        if m is None:
            m = angulation.m
        if isinstance(angulation.surface, Strip):
            census = transjective_census(angulation)
    atilde = None
    if m is not None:
        if q.is_connected():
            atilde, why = is_rep_infinite_mcta_Atilde(q, m)
            diagnostics.append(why)
        else:
            diagnostics.append("disconnected: A-tilde predicate not applicable")
    return ClassificationReport(
        gentle=gentle,
        saturated_cycles=saturated_cycles(q),
        root_cycles=root_cycles(q),
        band=band,
        rep_type=rep,
        census=census,
        gldim=gldim,
        mcta_Atilde_infinite=atilde,
        diagnostics=diagnostics,
    )
