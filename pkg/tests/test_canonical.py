"""Stress tests for canonical labeling: the brute-force twin is exhaustive
permutation search, so any disagreement pins a bug in the refinement,
pruning, or automorphism machinery."""

from __future__ import annotations

import itertools

from latmat.corpus import CorpusSpec, SplitMix64, generate
from latmat.kernel import (
    Matroid,
    automorphisms,
    canonical_form,
    from_bases,
    is_isomorphic,
    uniform,
)


def brute_isomorphic(M1, M2) -> bool:
    if (M1.n, M1.rank, M1.num_bases) != (M2.n, M2.rank, M2.num_bases):
        return False
    target = M2.mask_set
    for perm in itertools.permutations(range(M1.n)):
        mapped = frozenset(
            sum(1 << perm[e] for e in b) if b else 0 for b in M1.bases
        )
        if mapped == target:
            return True
    return False


def brute_automorphisms(M) -> set[tuple[int, ...]]:
    out = set()
    for perm in itertools.permutations(range(M.n)):
        mapped = frozenset(
            sum(1 << perm[e] for e in b) if b else 0 for b in M.bases
        )
        if mapped == M.mask_set:
            out.add(perm)
    return out


def _pool(max_n, seed, count):
    spec = CorpusSpec(
        ("catalog-minors", "random-transversal", "random-sparse-paving",
         "lpm-random", "duals-closure"),
        count=count,
        max_n=max_n,
        seed=seed,
    )
    return generate(spec)


def test_canonical_form_invariant_under_relabeling():
    rng = SplitMix64(2024)
    for M in _pool(7, seed=64, count=50):
        base = canonical_form(M)
        for _ in range(3):
            perm = list(range(M.n))
            for i in range(M.n - 1, 0, -1):
                j = rng.randrange(i + 1)
                perm[i], perm[j] = perm[j], perm[i]
            relab = Matroid._from_masks(
                M.n,
                [
                    sum(1 << perm[e] for e in b) if b else 0
                    for b in M.bases
                ],
            )
            assert canonical_form(relab) == base


def test_canonical_form_agrees_with_brute_isomorphism():
    pool = [M for M in _pool(5, seed=65, count=80) if M.n <= 5]
    for M1, M2 in itertools.combinations(pool, 2):
        fast = canonical_form(M1) == canonical_form(M2)
        assert fast == brute_isomorphic(M1, M2)


def test_is_isomorphic_witness_is_valid_bijection():
    pool = _pool(6, seed=66, count=40)
    rng = SplitMix64(4048)
    for M in pool:
        perm = list(range(M.n))
        for i in range(M.n - 1, 0, -1):
            j = rng.randrange(i + 1)
            perm[i], perm[j] = perm[j], perm[i]
        relab = Matroid._from_masks(
            M.n,
            [sum(1 << perm[e] for e in b) if b else 0 for b in M.bases],
        )
        bij = is_isomorphic(M, relab)
        assert bij is not None
        mapped = {frozenset(bij[e] for e in b) for b in M.bases}
        assert mapped == relab.bases


def test_automorphisms_match_brute_force():
    pool = [M for M in _pool(5, seed=67, count=60) if M.n <= 5]
    checked = 0
    for M in pool[:30]:
        assert automorphisms(M) == brute_automorphisms(M)
        checked += 1
    assert checked >= 10


def test_canonical_form_distinguishes_near_twins():
    # equal size, rank, basis count, and degree sequence; different matroids
    a = from_bases(6, [c for c in itertools.combinations(range(6), 3)
                       if set(c) not in ({0, 1, 2}, {3, 4, 5})])
    b = from_bases(6, [c for c in itertools.combinations(range(6), 3)
                       if set(c) not in ({0, 1, 2}, {2, 3, 4})])
    assert not brute_isomorphic(a, b)
    assert canonical_form(a) != canonical_form(b)


def test_loop_and_coloop_heavy_inputs():
    M = from_bases(6, [{4, 5}])  # four loops, two coloops
    base = canonical_form(M)
    relab = from_bases(6, [{0, 1}])
    assert canonical_form(relab) == base
    assert canonical_form(uniform(0, 4)) == canonical_form(uniform(0, 4))
