from __future__ import annotations

import pytest

from latmat import flats
from latmat.flats import (
    FlatsReport,
    HasLoops,
    NotPncFlat,
    all_flats,
    connected_flats_signature,
    cyclic_flats,
    flats_report,
    fundamental_flats,
    irreducible_pnc_flats,
    pnc_flats,
    reducible,
)
from latmat.kernel import (
    closure,
    dual,
    from_bases,
    rank_of,
    spanning_circuits,
    uniform,
)
from latmat.lpm import IntervalPresentation, realize
from util import p3_bases, spanning_trees_k4


def p3():
    return from_bases(6, p3_bases())


def wheel():
    return from_bases(6, spanning_trees_k4())


TRIANGLES = [
    frozenset({0, 1, 2}),
    frozenset({0, 3, 4}),
    frozenset({1, 4, 5}),
    frozenset({2, 3, 5}),
]


def test_all_flats_u24():
    U = uniform(2, 4)
    expected = {frozenset()} | {frozenset({e}) for e in range(4)} | {frozenset(range(4))}
    assert all_flats(U) == expected


def test_all_flats_p3():
    fl = all_flats(p3())
    assert frozenset({0, 1, 2}) in fl and frozenset({3, 4, 5}) in fl
    assert rank_of(p3(), {0, 1, 2}) == 2
    # closure fixed points, cross-checked independently
    M = p3()
    for f in fl:
        assert closure(M, f) == f


def test_all_flats_free():
    assert len(all_flats(uniform(3, 3))) == 8


def test_cyclic_flats():
    U = uniform(2, 4)
    assert cyclic_flats(U) == {frozenset(), frozenset(range(4))}
    M = p3()
    assert cyclic_flats(M) == {
        frozenset(),
        frozenset({0, 1, 2}),
        frozenset({3, 4, 5}),
        frozenset(range(6)),
    }


def test_cyclic_flats_duality():
    for M in (p3(), wheel(), uniform(2, 5)):
        E = frozenset(range(M.n))
        assert cyclic_flats(dual(M)) == {E - f for f in cyclic_flats(M)}


def test_pnc_flats():
    assert pnc_flats(p3()) == {frozenset({0, 1, 2}), frozenset({3, 4, 5})}
    assert pnc_flats(uniform(2, 4)) == frozenset()
    assert pnc_flats(wheel()) == set(TRIANGLES)


def test_reducible():
    assert not reducible(p3(), {0, 1, 2})
    for t in TRIANGLES:
        assert not reducible(wheel(), t)
    with pytest.raises(NotPncFlat):
        reducible(p3(), {0, 1})


def test_irreducible_pnc_flats_two_circuit_example():
    M = realize(IntervalPresentation(6, ((0, 3), (2, 5))))
    assert irreducible_pnc_flats(M) == {frozenset({0, 1}), frozenset({4, 5})}
    assert pnc_flats(M) == {frozenset({0, 1}), frozenset({4, 5})}


def test_fundamental_flats_examples():
    M = p3()
    assert fundamental_flats(M) == {frozenset({0, 1, 2}), frozenset({3, 4, 5})}
    # the witnessing spanning circuit from the flats definition
    assert frozenset({0, 1, 3, 4}) in spanning_circuits(M)
    assert fundamental_flats(wheel()) == set(TRIANGLES)
    assert fundamental_flats(uniform(2, 4)) == frozenset()


def test_connected_flats_signature():
    sig = connected_flats_signature(p3())
    assert sig == [
        (frozenset({0, 1, 2}), 2),
        (frozenset({3, 4, 5}), 2),
        (frozenset(range(6)), 3),
    ]
    assert connected_flats_signature(uniform(2, 4)) == [(frozenset(range(4)), 2)]
    loopy = from_bases(2, [{1}])
    with pytest.raises(HasLoops):
        connected_flats_signature(loopy)


def test_flats_report_structure():
    M = p3()
    report = flats_report(M)
    assert isinstance(report, FlatsReport)
    by_flat = {e.flat: e for e in report.entries}
    assert set(by_flat) == all_flats(M)
    for entry in report.entries:
        assert entry.nullity == len(entry.flat) - entry.rank
        if entry.is_fundamental:
            assert entry.is_pnc
        if entry.is_pnc:
            assert entry.flat != frozenset(range(M.n))
            assert entry.nullity > 0
    tri = by_flat[frozenset({0, 1, 2})]
    assert tri.is_pnc and tri.is_cyclic and tri.is_fundamental and not tri.is_reducible


def test_flats_report_reducible_flag():
    # overlapping prefix/suffix flats whose meet is a parallel pair
    M = realize(IntervalPresentation(6, ((0, 1), (1, 4), (4, 5))))
    report = flats_report(M)
    reducibles = {e.flat for e in report.entries if e.is_reducible}
    pncs = {e.flat for e in report.entries if e.is_pnc}
    fund = {e.flat for e in report.entries if e.is_fundamental}
    assert fund == {frozenset({0, 1, 2, 3}), frozenset({2, 3, 4, 5})}
    assert reducibles == {frozenset({2, 3})}
    assert pncs == fund | reducibles
    assert reducible(M, {2, 3})
