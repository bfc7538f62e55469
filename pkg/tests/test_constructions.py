from __future__ import annotations

from collections import Counter

import pytest

from corpus import EXTRA_STRIPS, a2, kronecker, kronecker_angulation, q7, q7_cut, strip_angulations, strip_quivers
from mclusters.classify import gldim_gentle, is_rep_infinite_mcta_Atilde, root_cycles, saturated_cycles
from mclusters.constructions import (
    admissible_cut,
    canonical_cut,
    cut_choices,
    m_relation_extension,
    unroll,
    verify_extension_theorem,
)
from mclusters.errors import (
    BadCutSet,
    GldimTooLarge,
    NotGentle,
    NotStrip,
    PredicateFails,
    RootCyclePresent,
    SaturatedCyclePresent,
)
from mclusters.quiver import Arrow, BoundQuiver, bound_quiver, quivers_isomorphic
from mclusters.surface import Polygon
from corpus import fan_pentagon, saturated_triangle


def test_unroll_kronecker_has_root_cycle():
    with pytest.raises(RootCyclePresent) as err:
        unroll(kronecker_angulation())
    assert err.value.witness is not None


def test_unroll_needs_strip():
    with pytest.raises(NotStrip):
        unroll(fan_pentagon())


@pytest.mark.parametrize("params", [(2, 1, 1), (2, 2, 1), (2, 2, 2), (2, 3, 1)])
def test_unroll_round_trip(params):
    m, p, q = params
    unrolled = 0
    for a in strip_angulations(*params):
        quiver = bound_quiver(a)
        if root_cycles(quiver):
            with pytest.raises(RootCyclePresent):
                unroll(a)
            continue
        b = unroll(a)
        unrolled += 1
        assert b.surface == Polygon(m, len(a.arcs) + 1)
        assert b.surface.npoints == (len(a.arcs) + 1) * m + 2
        assert len(b.faces) == len(a.faces) + 1
        iso = quivers_isomorphic(bound_quiver(b), quiver)
        assert iso is not None
    assert unrolled > 0


def _endpoint_signature(q):
    arrows = Counter((a.source, a.target) for a in q.arrows)
    rels = Counter((q.arrow(x).source, q.arrow(x).target, q.arrow(y).target) for x, y in q.relations)
    return arrows, rels


@pytest.mark.parametrize("params", [(2, 2, 2), (2, 2, 3)])
def test_unroll_keeps_arc_ids(params):
    """Arc i of the strip becomes arc i of the polygon, so the identity on
    vertices already matches the two quivers."""
    for a in strip_angulations(*params):
        q = bound_quiver(a)
        if not root_cycles(q):
            assert _endpoint_signature(bound_quiver(unroll(a))) == _endpoint_signature(q)


def test_admissible_cut_q7():
    alpha5 = next(x.id for x in q7().arrows if (x.source, x.target) == (7, 1))
    cut, data = admissible_cut(q7(), [alpha5])
    assert cut == q7_cut()
    assert data.removed == (alpha5,)
    assert data.removed_relations == frozenset({(3, 4), (4, 0)})
    assert saturated_cycles(cut) == []


def test_admissible_cut_errors():
    cut, data = admissible_cut(kronecker(), [])
    assert cut == kronecker() and data.removed == ()
    with pytest.raises(BadCutSet):
        admissible_cut(q7(), [5])
    with pytest.raises(BadCutSet):
        admissible_cut(q7(), [])
    with pytest.raises(BadCutSet):
        admissible_cut(q7(), [0, 1])
    with pytest.raises(BadCutSet):
        admissible_cut(q7(), [4, 4])
    star = BoundQuiver((0, 1, 2, 3), (Arrow(0, 0, 1), Arrow(1, 0, 2), Arrow(2, 0, 3)))
    with pytest.raises(NotGentle):
        admissible_cut(star, [])


def test_cut_choices():
    assert cut_choices(q7()) == [(0,), (1,), (2,), (3,), (4,)]
    assert canonical_cut(q7()) == (4,)
    assert cut_choices(kronecker()) == [()]


def test_extension_examples():
    ext = m_relation_extension(q7_cut(), 3)
    assert quivers_isomorphic(ext, q7()) is not None
    assert m_relation_extension(kronecker(), 1) == kronecker()
    assert m_relation_extension(a2(), 2) == a2()


def test_extension_errors():
    with pytest.raises(SaturatedCyclePresent):
        m_relation_extension(q7(), 3)
    with pytest.raises(GldimTooLarge):
        m_relation_extension(q7_cut(), 2)


def test_extension_new_ids_follow_existing():
    ext = m_relation_extension(q7_cut(), 3)
    new = [a for a in ext.arrows if a.id not in q7_cut().arrow_ids]
    assert [(a.id, a.source, a.target) for a in new] == [(8, 7, 1)]
    assert {(3, 8), (8, 0)} <= ext.relations


def test_verify_extension_q7():
    report = verify_extension_theorem(q7(), 3)
    assert report["case"] == "ii"
    first = report["checks"][0]
    assert first["cut"] == [4] and first["gldim"] == 4 and first["admissible"]
    full = verify_extension_theorem(q7(), 3, all_cuts=True)
    assert len(full["checks"]) == 5
    assert all(c["round_trip"] for c in full["checks"])
    # cutting alpha1 removes the relation-free root cycle
    assert [c["cut"] for c in full["checks"] if not c["admissible"]] == [[0]]


def test_verify_extension_other_cases():
    assert verify_extension_theorem(kronecker(), 1) == {"case": "i", "checks": []}
    with pytest.raises(PredicateFails):
        verify_extension_theorem(q7(), 2)
    with pytest.raises(PredicateFails):
        verify_extension_theorem(saturated_triangle(), 1)


@pytest.mark.parametrize("params", EXTRA_STRIPS)
def test_cut_of_extension_is_exact(params):
    """B -> R_m(B) -> B for every enumerated quiver meeting the preconditions."""
    m = params[0]
    checked = 0
    for q in strip_quivers(*params):
        if saturated_cycles(q) or gldim_gentle(q) > m + 1:
            continue
        ext = m_relation_extension(q, m)
        added = [a.id for a in ext.arrows if a.id not in set(q.arrow_ids)]
        assert len(added) == len(saturated_cycles(ext))
        assert admissible_cut(ext, added)[0] == q
        checked += 1
    assert checked > 0


@pytest.mark.parametrize("params", EXTRA_STRIPS)
def test_extension_of_cut_is_isomorphic(params):
    m = params[0]
    checked = 0
    for q in strip_quivers(*params):
        if not saturated_cycles(q) or not q.is_connected() or not is_rep_infinite_mcta_Atilde(q, m)[0]:
            continue
        for c in cut_choices(q):
            b, _ = admissible_cut(q, c)
            assert quivers_isomorphic(m_relation_extension(b, m), q) is not None
            checked += 1
    assert checked > 0
