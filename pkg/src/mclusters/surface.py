"""
surface.py

Marked surfaces (the (nm+2)-gon and the strip covering an annulus) and the
m-diagonals drawn on them.

Conventions: polygon labels 0..nm+1 increase clockwise.  The strip is drawn
with boundary P at the bottom and boundary Q at the top; lifts on both
boundaries increase to the right.  A lift x on P sits at abscissa x/(mp) and a
lift y on Q at y/(mq), so the deck transformation (x, y) -> (x + mp, y + mq)
is a unit translation.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Optional, Union

from .errors import InvalidLabel, ParseError

P = "p"
Q = "q"


@dataclass(frozen=True)
class Polygon:
    m: int
    n: int

    def __post_init__(self) -> None:
        if self.m < 1 or self.n < 1:
            raise ValueError(f"polygon needs m >= 1 and n >= 1, got m={self.m} n={self.n}")

    @property
    def npoints(self) -> int:
        return self.n * self.m + 2

    def header(self) -> str:
        return f"polygon m={self.m} n={self.n}"


@dataclass(frozen=True)
class Strip:
    m: int
    p: int
    q: int

    def __post_init__(self) -> None:
        if self.m < 1 or self.p < 1 or self.q < 1:
            raise ValueError(f"strip needs m, p, q >= 1, got m={self.m} p={self.p} q={self.q}")

    def period(self, boundary: str) -> int:
        return self.m * (self.p if boundary == P else self.q)

    @property
    def narcs(self) -> int:
        return self.p + self.q

    def header(self) -> str:
        return f"strip m={self.m} p={self.p} q={self.q}"


MarkedSurface = Union[Polygon, Strip]


@dataclass(frozen=True, order=True)
class Diagonal:
    """Chord (i, j) of the polygon, i < j."""

    i: int
    j: int

    def text(self) -> str:
        return f"d {self.i} {self.j}"


@dataclass(frozen=True, order=True)
class Transjective:
    """Arc from lift x on P to lift y on Q."""

    x: int
    y: int

    def text(self) -> str:
        return f"t {self.x} {self.y}"


@dataclass(frozen=True, order=True)
class Peripheral:
    """Arc on one boundary from lift u to lift u + km + 1."""

    boundary: str
    u: int
    k: int

    def length(self, m: int) -> int:
        return self.k * m + 1

    def text(self) -> str:
        return f"r {self.boundary} {self.u} {self.k}"


Arc = Union[Diagonal, Transjective, Peripheral]

_KIND_ORDER = {Diagonal: 0, Transjective: 1, Peripheral: 2}


def arc_key(arc: Arc) -> tuple:
    """Integer-aware total order on arcs, used for canonical listings."""
    if isinstance(arc, Diagonal):
        return (0, arc.i, arc.j)
    if isinstance(arc, Transjective):
        return (1, arc.x, arc.y)
    return (2 if arc.boundary == P else 3, arc.u, arc.k)


def is_m_diagonal(arc: Arc, s: MarkedSurface) -> bool:
    m = s.m
    if isinstance(s, Polygon):
        if not isinstance(arc, Diagonal):
            return False
        npts = s.npoints
        for label in (arc.i, arc.j):
            if not 0 <= label < npts:
                raise InvalidLabel(f"label {label} outside 0..{npts - 1}")
        gap = arc.j - arc.i
        return gap > 0 and gap % m == 1 % m and gap >= m + 1 and npts - gap >= m + 1
    if isinstance(arc, Transjective):
        return (arc.x - arc.y) % m == 0
    if isinstance(arc, Peripheral):
        if arc.boundary not in (P, Q) or arc.k < 1:
            return False
        # a longer arc would cross its own deck translate
        return arc.length(m) < s.period(arc.boundary)
    return False


def normalize_arc(arc: Arc, s: MarkedSurface) -> Arc:
    if isinstance(arc, Transjective):
        t = arc.x // s.period(P)
        return Transjective(arc.x - t * s.period(P), arc.y - t * s.period(Q))
    if isinstance(arc, Peripheral):
        return Peripheral(arc.boundary, arc.u % s.period(arc.boundary), arc.k)
    return arc


def shift_arc(arc: Arc, s: Strip, t: int) -> Arc:
    """Apply the deck transformation t times."""
    if isinstance(arc, Transjective):
        return Transjective(arc.x + t * s.period(P), arc.y + t * s.period(Q))
    if isinstance(arc, Peripheral):
        return Peripheral(arc.boundary, arc.u + t * s.period(arc.boundary), arc.k)
    return arc


def _interleave(a0: int, a1: int, b0: int, b1: int) -> bool:
    return a0 < b0 < a1 < b1 or b0 < a0 < b1 < a1


def arcs_cross(a: Arc, b: Arc, s: MarkedSurface) -> bool:
    if isinstance(s, Polygon):
        return _interleave(a.i, a.j, b.i, b.j)
    m = s.m
    mp, mq = s.period(P), s.period(Q)
    if isinstance(a, Transjective) and isinstance(b, Transjective):
        dx, dy = a.x - b.x, a.y - b.y
        lo = min(dx // mp, dy // mq) - 1
        hi = max(dx // mp, dy // mq) + 1
        return any((dx - t * mp) * (dy - t * mq) < 0 for t in range(lo, hi + 1))
    if isinstance(a, Peripheral) and isinstance(b, Peripheral):
        if a.boundary != b.boundary:
            return False
        per = s.period(a.boundary)
        la, lb = a.length(m), b.length(m)
        base = (a.u - b.u) // per
        for t in range(base - 2, base + 3):
            u2 = b.u + t * per
            if _interleave(a.u, a.u + la, u2, u2 + lb):
                return True
        return False
    if isinstance(a, Peripheral):
        a, b = b, a
    # a transjective, b peripheral
    end = a.x if b.boundary == P else a.y
    per = s.period(b.boundary)
    lb = b.length(m)
    base = (end - b.u) // per
    return any(b.u + t * per < end < b.u + lb + t * per for t in range(base - 1, base + 2))


def component_index(arc: Arc, s: MarkedSurface) -> Optional[int]:
    if isinstance(arc, Transjective):
        return arc.x % s.m
    return None


def tilt(arc: Arc, s: Strip) -> Fraction:
    """Horizontal displacement of a transjective arc in units of periods."""
    if not isinstance(arc, Transjective):
        return Fraction(0)
    return Fraction(arc.y, s.period(Q)) - Fraction(arc.x, s.period(P))


def arc_text(arc: Arc) -> str:
    return arc.text()


def parse_arc(line: str) -> Arc:
    tok = line.split()
    try:
        if tok[0] == "d" and len(tok) == 3:
            i, j = int(tok[1]), int(tok[2])
            return Diagonal(min(i, j), max(i, j))
        if tok[0] == "t" and len(tok) == 3:
            return Transjective(int(tok[1]), int(tok[2]))
        if tok[0] == "r" and len(tok) == 4 and tok[1] in (P, Q):
            return Peripheral(tok[1], int(tok[2]), int(tok[3]))
    except (ValueError, IndexError):
        pass
    raise ParseError(f"bad arc line: {line!r}")


def parse_surface(tokens) -> MarkedSurface:
    """Parse ``polygon m=.. n=..`` or ``strip m=.. p=.. q=..`` (string or token list)."""
    if isinstance(tokens, str):
        tokens = tokens.split()
    if not tokens:
        raise ParseError("empty surface header")
    kind, rest = tokens[0], tokens[1:]
    params = {}
    for tok in rest:
        key, sep, val = tok.partition("=")
        if not sep:
            raise ParseError(f"bad surface parameter {tok!r}")
        try:
            params[key] = int(val)
        except ValueError:
            raise ParseError(f"bad surface parameter {tok!r}") from None
    try:
        if kind == "polygon" and set(params) == {"m", "n"}:
            return Polygon(params["m"], params["n"])
        if kind == "strip" and set(params) == {"m", "p", "q"}:
            return Strip(params["m"], params["p"], params["q"])
    except ValueError as err:
        raise ParseError(str(err)) from None
    raise ParseError(f"bad surface header: {' '.join(tokens)!r}")
