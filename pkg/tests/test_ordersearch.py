from __future__ import annotations

import itertools

import pytest

from latmat import ordersearch
from latmat.corpus import CorpusSpec, generate
from latmat.kernel import from_bases, uniform
from util import p3_bases, spanning_trees_k4

HAS_C = ordersearch.compiled_available()


def test_transversal_count_against_enumeration():
    cases = [
        (6, (0, 1, 3), (2, 4, 5)),
        (6, (0, 2), (3, 5)),
        (5, (0,), (4,)),
        (4, (), ()),
    ]
    for n, a, b in cases:
        expected = sum(
            1
            for xs in itertools.combinations(range(n), len(a))
            if all(a[i] <= xs[i] <= b[i] for i in range(len(a)))
        )
        assert ordersearch.transversal_count(n, a, b) == expected


def _scan_both(M, first_mask=0):
    py = ordersearch.scan_path_orders(
        M.n, M.rank, M.basis_masks, M.indep_masks, first_mask, backend="py"
    )
    if not HAS_C:
        return py, py
    c = ordersearch.scan_path_orders(
        M.n, M.rank, M.basis_masks, M.indep_masks, first_mask, backend="c"
    )
    return py, c


@pytest.mark.skipif(not HAS_C, reason="compiled backend not built")
def test_backends_agree_on_corpus():
    spec = CorpusSpec(
        ("catalog-minors", "random-transversal", "lpm-random", "duals-closure"),
        count=50,
        max_n=7,
        seed=31,
    )
    for M in generate(spec):
        if M.loops_mask:
            continue
        py, c = _scan_both(M)
        assert py == c


@pytest.mark.skipif(not HAS_C, reason="compiled backend not built")
def test_backends_agree_with_first_mask():
    M = from_bases(6, p3_bases())
    for mask in (0, 0b000111, 0b111000, 0b010010):
        py, c = _scan_both(M, mask)
        assert py == c
    W = from_bases(6, spanning_trees_k4())
    assert _scan_both(W)[0] is None and _scan_both(W)[1] is None


def test_scan_returns_lex_least():
    U = uniform(2, 4)
    py, c = _scan_both(U)
    assert py == (0, 1, 2, 3)
    got = ordersearch.scan_path_orders(
        U.n, U.rank, U.basis_masks, U.indep_masks, 0, backend="py"
    )
    assert got == (0, 1, 2, 3)


def test_scan_rank_zero_and_empty():
    M = uniform(0, 0)
    assert ordersearch.scan_path_orders(0, 0, M.basis_masks, M.indep_masks) == ()


def test_candidate_intervals_matches_p3():
    M = from_bases(6, p3_bases())
    ivs = ordersearch.candidate_intervals(
        M.n, M.rank, M.indep_masks, (0, 1, 2, 3, 4, 5)
    )
    assert ivs == ((0, 2), (1, 4), (3, 5))


def test_unknown_backend_rejected():
    M = uniform(1, 2)
    with pytest.raises(ValueError):
        ordersearch.scan_path_orders(
            M.n, M.rank, M.basis_masks, M.indep_masks, 0, backend="fortran"
        )
