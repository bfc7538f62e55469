"""
cli.py

Command-line front end.  Exit status 0 on success, 1 on a domain error (the
error class name goes to stderr), 2 on a usage error.
"""

from __future__ import annotations

import argparse
import gc
import sys
from dataclasses import dataclass
from typing import List, Optional, Sequence, Tuple

from .angulation import Angulation, enumerate_angulations
from .classify import INFINITE_TYPE, classify
from .constructions import admissible_cut, canonical_cut, m_relation_extension, unroll, verify_extension_theorem
from .errors import MClusterError, ParseError
from .formats import (
    angulation_to_json,
    dumps,
    parse_angulation,
    parse_quiver,
    quiver_dot,
    quiver_to_json,
    serialize_angulation,
    serialize_quiver,
)
from .quiver import BoundQuiver, bound_quiver, quivers_isomorphic
from .surface import MarkedSurface, Polygon, parse_surface
from .verify import verify_surface



@dataclass(frozen=True)
class RunConfig:
    command: str
    files: Tuple[str, ...] = ()
    surface: Optional[MarkedSurface] = None
    winding_bound: int = 2
    fmt: str = "text"
    up_to_opposite: bool = False
    all_cuts: bool = False
    m: Optional[int] = None
    arrows: Optional[Tuple[int, ...]] = None


def _read(path: str) -> str:
    with open(path, encoding="utf-8") as fh:
        return fh.read()


def _is_quiver_text(text: str) -> bool:
    for raw in text.splitlines():
        line = raw.split("#", 1)[0].strip()
        if line:
            return line.startswith("vertices:")
    return False


def _load_quiver(path: str) -> Tuple[BoundQuiver, Optional[Angulation]]:
    """A quiver file, or an angulation file together with its quiver."""
    text = _read(path)
    if _is_quiver_text(text):
        return parse_quiver(text), None
    a = parse_angulation(text)
    return bound_quiver(a), a


def _emit_quiver(q: BoundQuiver, fmt: str) -> str:
    if fmt == "json":
        return dumps(quiver_to_json(q))
    if fmt == "dot":
        return quiver_dot(q)
    return serialize_quiver(q)


def _emit_angulation(a: Angulation, fmt: str) -> str:
    if fmt == "json":
        return dumps(angulation_to_json(a))
    return serialize_angulation(a)


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="mclusters", description=__doc__.strip().splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    def fmt_flag(p, choices=("text", "json")):
        p.add_argument("--format", dest="fmt", choices=choices, default="text")

    p = sub.add_parser("validate", help="check an angulation file")
    p.add_argument("files", nargs=1)
    p = sub.add_parser("faces", help="list the faces of an angulation")
    p.add_argument("files", nargs=1)
    p = sub.add_parser("quiver", help="bound quiver of an angulation")
    p.add_argument("files", nargs=1)
    fmt_flag(p, ("text", "json", "dot"))
    p = sub.add_parser("classify", help="classification report (JSON)")
    p.add_argument("files", nargs=1)
    p.add_argument("--m", type=int)
    p = sub.add_parser("enumerate", help="all angulations of a surface")
    p.add_argument("surface", nargs="+")
    p.add_argument("--winding", dest="winding_bound", type=int, default=2)
    fmt_flag(p)
    p = sub.add_parser("iso", help="isomorphism of two bound quivers")
    p.add_argument("files", nargs=2)
    p.add_argument("--up-to-opposite", action="store_true")
    p = sub.add_parser("cut", help="admissible cut of a bound quiver")
    p.add_argument("files", nargs=1)
    p.add_argument("--arrows", type=int, nargs="*")
    fmt_flag(p, ("text", "json", "dot"))
    p = sub.add_parser("extend", help="m-relation extension of a bound quiver")
    p.add_argument("files", nargs=1)
    p.add_argument("--m", type=int, required=True)
    fmt_flag(p, ("text", "json", "dot"))
    p = sub.add_parser("unroll", help="cut a strip angulation open into a polygon one")
    p.add_argument("files", nargs=1)
    fmt_flag(p)
    p = sub.add_parser("verify", help="exhaustive property checks on a surface")
    p.add_argument("surface", nargs="+")
    p.add_argument("--winding", dest="winding_bound", type=int, default=2)
    p.add_argument("--all-cuts", action="store_true")
    p = sub.add_parser("verify-extension", help="check the extension description of quivers")
    p.add_argument("targets", nargs="+", help="quiver/angulation files, or a strip surface")
    p.add_argument("--m", type=int)
    p.add_argument("--winding", dest="winding_bound", type=int, default=2)
    p.add_argument("--all-cuts", action="store_true")
    return parser


def parse_config(argv: Sequence[str]) -> RunConfig:
    parser = build_parser()
    ns = parser.parse_args(argv)
    surface = None
    files = tuple(getattr(ns, "files", ()) or ())
    tokens = getattr(ns, "surface", None)
    if ns.command == "verify-extension":
        if ns.targets[0] in ("strip", "polygon"):
            tokens = ns.targets
        else:
            files = tuple(ns.targets)
            if ns.m is None:
                parser.error("verify-extension on files needs --m")
    if tokens:
        try:
            surface = parse_surface(tokens)
        except ParseError as err:
            parser.error(str(err))
    winding = getattr(ns, "winding_bound", 2)
    if winding < 1:
        parser.error("--winding must be positive")
    arrows = getattr(ns, "arrows", None)
    return RunConfig(
        command=ns.command,
        files=files,
        surface=surface,
        winding_bound=winding,
        fmt=getattr(ns, "fmt", "text"),
        up_to_opposite=getattr(ns, "up_to_opposite", False),
        all_cuts=getattr(ns, "all_cuts", False),
        m=getattr(ns, "m", None),
        arrows=tuple(arrows) if arrows is not None else None,
    )


def _verify_extension(cfg: RunConfig) -> Tuple[int, List[str]]:
    items: List[Tuple[str, BoundQuiver, int]] = []
    if cfg.surface is not None:
        s = cfg.surface
        for k, a in enumerate(enumerate_angulations(s, cfg.winding_bound)):
            q = bound_quiver(a)
            report = classify(q, s.m, a)
            if report.rep_type == INFINITE_TYPE and q.is_connected():
                items.append((f"{s.header()} #{k}", q, s.m))
    else:
        for path in cfg.files:
            q, a = _load_quiver(path)
            items.append((path, q, cfg.m))
    out = []
    for name, q, m in items:
        try:
            report = verify_extension_theorem(q, m, all_cuts=cfg.all_cuts)
        except MClusterError as err:
            out.append(f"FAIL {name}: {type(err).__name__}: {err}")
            return 1, out
        out.append(dumps({"instance": name, **report}).rstrip("\n"))
    out.append(f"OK {len(items)} instances")
    return 0, out


def run(cfg: RunConfig) -> Tuple[int, str]:
    cmd = cfg.command
    if cmd == "verify":
        report = verify_surface(cfg.surface, cfg.winding_bound, cfg.all_cuts)
        return (0 if report.ok else 1), "\n".join(report.lines()) + "\n"
    if cmd == "verify-extension":
        status, lines = _verify_extension(cfg)
        return status, "\n".join(lines) + "\n"
    if cmd == "enumerate":
        angs = enumerate_angulations(cfg.surface, cfg.winding_bound)
        if cfg.fmt == "json":
            return 0, dumps([angulation_to_json(a) for a in angs])
        bound = "" if isinstance(cfg.surface, Polygon) else f" winding={cfg.winding_bound}"
        parts = [f"# {len(angs)} angulations{bound}\n"]
        parts.extend(f"# angulation {k}\n" + serialize_angulation(a) for k, a in enumerate(angs))
        return 0, "\n".join(parts)
    if cmd in ("validate", "faces", "unroll"):
        a = parse_angulation(_read(cfg.files[0]))
        if cmd == "validate":
            return 0, f"valid {a.surface.header()}: {len(a.arcs)} arcs, {len(a.faces)} faces\n"
        if cmd == "faces":
            return 0, "".join(f"face {k}: {f.text()}\n" for k, f in enumerate(a.faces))
        return 0, _emit_angulation(unroll(a), cfg.fmt)
    if cmd == "iso":
        q1, _ = _load_quiver(cfg.files[0])
        q2, _ = _load_quiver(cfg.files[1])
        iso = quivers_isomorphic(q1, q2, up_to_opposite=cfg.up_to_opposite)
        if iso is None:
            return 1, "not isomorphic\n"
        lines = [f"vertex {v} -> {w}" for v, w in sorted(iso.vertices.items())]
        lines += [f"arrow {a} -> {b}" for a, b in sorted(iso.arrows.items())]
        return 0, "\n".join(lines) + "\n"
    q, a = _load_quiver(cfg.files[0])
    if cmd == "quiver":
        return 0, _emit_quiver(q, cfg.fmt)
    if cmd == "classify":
        m = cfg.m if cfg.m is not None else (a.m if a is not None else None)
        return 0, dumps(classify(q, m, a).to_json())
    if cmd == "cut":
        chosen = cfg.arrows if cfg.arrows is not None else canonical_cut(q)
        cut, _ = admissible_cut(q, chosen)
        return 0, _emit_quiver(cut, cfg.fmt)
    if cmd == "extend":
        return 0, _emit_quiver(m_relation_extension(q, cfg.m), cfg.fmt)
    raise AssertionError(cmd)


def main(argv: Optional[Sequence[str]] = None) -> int:
    cfg = parse_config(sys.argv[1:] if argv is None else argv)
    try:
        status, text = run(cfg)
    except MClusterError as err:
        print(f"{type(err).__name__}: {err}", file=sys.stderr)
        return 1
    except OSError as err:
        print(f"{type(err).__name__}: {err}", file=sys.stderr)
        return 1
    sys.stdout.write(text)
    # large enumerations are left to the OS rather than collected at exit
    gc.freeze()
    return status


if __name__ == "__main__":
    sys.exit(main())
