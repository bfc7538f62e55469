"""
verify.py

Exhaustive property checks over enumerated angulations.  Each instance is
run through every structural check; the first failure is reported with the
offending angulation so it can be replayed from a file.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass, field
from typing import Callable, List, Optional, Tuple

from .angulation import (
    Angulation,
    ArcEdge,
    BoundarySegment,
    boundary_segment_count,
    enumerate_angulations,
    expected_arc_count,
    fuss_catalan,
)
from .classify import (
    find_band,
    generated_by,
    is_rep_infinite_mcta_Atilde,
    oriented_cycles,
    relation_free,
    root_cycles,
    saturated_cycles,
    transjective_census,
)
from .constructions import unroll, verify_extension_theorem
from .errors import MClusterError, RootCyclePresent
from .formats import serialize_angulation
from .quiver import BoundQuiver, bound_quiver, is_gentle, quivers_isomorphic
from .surface import P, Q, MarkedSurface, Polygon, Strip, Transjective, component_index


@dataclass(frozen=True)
class Failure:
    check: str
    detail: str
    instance: str


@dataclass
class VerifyReport:
    surface: MarkedSurface
    winding_bound: Optional[int]
    counts: Counter = field(default_factory=Counter)
    failures: List[Failure] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.failures

    def lines(self) -> List[str]:
        head = self.surface.header()
        if self.winding_bound is not None:
            head += f" winding={self.winding_bound}"
        out = [head]
        out.extend(f"  {k}: {self.counts[k]}" for k in sorted(self.counts))
        if self.ok:
            out.append(f"OK {self.counts['instances']} instances")
        else:
            f = self.failures[0]
            out.append(f"FAIL {f.check}: {f.detail}")
            out.extend("  " + line for line in f.instance.splitlines())
        return out


Check = Tuple[str, str]


def _common_checks(a: Angulation, q: BoundQuiver, counts: Counter) -> Optional[Check]:
    s = a.surface
    m = s.m
    ok, why = is_gentle(q)
    if not ok:
        return "gentle", why
    nseg = boundary_segment_count(s)
    if len(a.arcs) != expected_arc_count(s):
        return "counts", f"{len(a.arcs)} arcs"
    if len(a.faces) * (m + 2) != nseg + 2 * len(a.arcs):
        return "counts", "face edge identity fails"
    for face in a.faces:
        if face.size != m + 2:
            return "counts", f"face {face.text()} has {face.size} edges"
    sats = saturated_cycles(q)
    for w in sats:
        if len(w) != m + 2:
            return "oriented-cycles", f"saturated cycle {w.text()} has length {len(w)}"
    for w in oriented_cycles(q):
        if w in sats:
            continue
        counts["oriented_unsaturated"] += 1
        # an unsaturated oriented cycle must go round the core of the annulus
        if isinstance(s, Polygon) or generated_by(q, sats, w):
            return "oriented-cycles", f"oriented cycle {w.text()} is not saturated"
    counts["saturated_cycles"] += len(sats)
    return None


def check_polygon_instance(a: Angulation, counts: Counter) -> Optional[Check]:
    q = bound_quiver(a)
    bad = _common_checks(a, q, counts)
    if bad:
        return bad
    if root_cycles(q):
        return "root-cycles", "polygon quiver has a root cycle"
    if find_band(q) is not None:
        return "rep-type", "polygon quiver is representation-infinite"
    return None


def _two_sided_faces(a: Angulation):
    for face in a.faces:
        sides = {e.boundary for e in face.edges if isinstance(e, BoundarySegment)}
        if P in sides and Q in sides:
            yield face


def check_strip_instance(a: Angulation, counts: Counter, all_cuts: bool = False) -> Optional[Check]:
    s = a.surface
    m = s.m
    q = bound_quiver(a)
    bad = _common_checks(a, q, counts)
    if bad:
        return bad

    trans = [x for x in a.arcs if isinstance(x, Transjective)]
    if len(trans) < (2 if m >= 2 else 1):
        return "transjective", f"only {len(trans)} transjective arcs"

    band = find_band(q)
    infinite = band is not None
    census = transjective_census(a)
    counts["rep_infinite"] += infinite
    if infinite != (len(census) == 1):
        return "census", f"rep-infinite={infinite} but census={sorted(census)}"

    roots = root_cycles(q)
    free = [w for w in roots if relation_free(q, w)]
    if len(free) > 1:
        return "property-ii", f"{len(free)} relation-free root cycles"
    # up to saturated cycles the relation-free root cycle is the only one
    if free:
        sats = saturated_cycles(q)
        for w in roots:
            if not generated_by(q, sats + free, w):
                return "property-ii", f"root cycle {w.text()} is independent of {free[0].text()}"
    if infinite and not roots:
        return "property-ii", "band without a root cycle"

    try:
        b = unroll(a)
    except RootCyclePresent:
        b = None
    if (b is not None) != (not roots):
        return "unroll", f"root cycles={len(roots)} but unroll {'succeeded' if b else 'failed'}"
    if b is not None:
        counts["unrolled"] += 1
        if len(b.faces) != len(a.faces) + 1:
            return "unroll", "face count did not grow by one"
        if quivers_isomorphic(bound_quiver(b), q) is None:
            return "unroll", "unrolled quiver is not isomorphic"

    if m >= 2:
        for face in _two_sided_faces(a):
            counts["two_sided_faces"] += 1
            comps = [component_index(a.arcs[e.arc], s) for e in face.edges
                     if isinstance(e, ArcEdge) and isinstance(a.arcs[e.arc], Transjective)]
            if len(comps) != 2 or comps[0] == comps[1]:
                return "two-sided-face", f"face {face.text()} has transjective components {comps}"

    if not q.is_connected():
        counts["disconnected"] += 1
        return None
    if infinite:
        ok, why = is_rep_infinite_mcta_Atilde(q, m)
        if not ok:
            return "atilde", why
        try:
            report = verify_extension_theorem(q, m, all_cuts=all_cuts)
        except MClusterError as err:
            return "extension", f"{type(err).__name__}: {err}"
        counts[f"extension_case_{report['case']}"] += 1
        counts["cuts_checked"] += len(report["checks"])
    return None


def _run(s: MarkedSurface, angs: List[Angulation], winding: Optional[int],
         check: Callable[[Angulation, Counter], Optional[Check]]) -> VerifyReport:
    report = VerifyReport(s, winding)
    report.counts["instances"] = len(angs)
    for a in angs:
        bad = check(a, report.counts)
        if bad:
            report.failures.append(Failure(bad[0], bad[1], serialize_angulation(a)))
            break
    return report


def verify_polygon(s: Polygon) -> VerifyReport:
    angs = enumerate_angulations(s)
    report = _run(s, angs, None, check_polygon_instance)
    expected = fuss_catalan(s.m, s.n)
    if report.ok and len(angs) != expected:
        report.failures.append(Failure("fuss-catalan", f"{len(angs)} angulations, expected {expected}", ""))
    return report


def verify_strip(s: Strip, winding_bound: int = 2, all_cuts: bool = False) -> VerifyReport:
    angs = enumerate_angulations(s, winding_bound)
    return _run(s, angs, winding_bound, lambda a, c: check_strip_instance(a, c, all_cuts))


def verify_surface(s: MarkedSurface, winding_bound: int = 2, all_cuts: bool = False) -> VerifyReport:
    if isinstance(s, Polygon):
        return verify_polygon(s)
    return verify_strip(s, winding_bound, all_cuts)
