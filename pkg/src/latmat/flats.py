"""Enumeration and classification of flats.

Classifies every flat as connected / cyclic / pnc / reducible / fundamental.
Terminology: a flat is *cyclic* when it is a (possibly empty) union of
circuits; a *pnc-flat* is a proper, dependent, connected flat ("nontrivial"
means dependent: a multi-element rank-1 flat qualifies, a singleton does
not); a pnc-flat is *reducible* when it is the intersection of two
incomparable pnc-flats; a *fundamental flat* is a pnc-flat F for which some
spanning circuit C makes F & C a basis of F.

Everything here enumerates over all 2^n subsets, which the ground-set cap
keeps tractable.  Results are plain frozensets; no caching across calls
beyond the per-matroid tables.
"""

from __future__ import annotations

from dataclasses import dataclass

from .kernel import Matroid, MatroidError, members


class HasLoops(MatroidError):
    pass


class NotPncFlat(MatroidError):
    pass


def _flat_masks(M: Matroid) -> tuple[int, ...]:
    ranks = M.rank_table
    n = M.n
    out = []
    for x in range(1 << n):
        rx = ranks[x]
        if all(
            ranks[x | (1 << e)] > rx
            for e in range(n)
            if not (x >> e) & 1
        ):
            out.append(x)
    return tuple(out)


def _is_cyclic_mask(M: Matroid, x: int) -> bool:
    ranks = M.rank_table
    rx = ranks[x]
    m = x
    while m:
        low = m & -m
        m ^= low
        if ranks[x ^ low] != rx:
            return False
    return True


def _restriction_connected(M: Matroid, x: int) -> bool:
    """Connectivity of M restricted to x, via circuits lying inside x."""
    es = []
    m = x
    while m:
        low = m & -m
        es.append(low.bit_length() - 1)
        m ^= low
    if len(es) <= 1:
        return True
    parent = {e: e for e in es}

    def find(a):
        while parent[a] != a:
            parent[a] = parent[parent[a]]
            a = parent[a]
        return a

    for c in M.circuit_masks:
        if c & ~x:
            continue
        cs = [e for e in es if (c >> e) & 1]
        for e in cs[1:]:
            ra, rb = find(cs[0]), find(e)
            if ra != rb:
                parent[rb] = ra
    root = find(es[0])
    return all(find(e) == root for e in es)


def _pnc_masks(M: Matroid) -> tuple[int, ...]:
    ranks = M.rank_table
    out = []
    for x in _flat_masks(M):
        if x == M.full_mask:
            continue
        if ranks[x] >= x.bit_count():  # independent = trivial
            continue
        if _restriction_connected(M, x):
            out.append(x)
    return tuple(out)


def _fundamental_masks(M: Matroid) -> tuple[int, ...]:
    ranks = M.rank_table
    spanning = [c for c in M.circuit_masks if c.bit_count() == M.rank + 1]
    out = []
    for f in _pnc_masks(M):
        rf = ranks[f]
        for c in spanning:
            meet = f & c
            if meet.bit_count() == rf and M.is_independent(meet):
                out.append(f)
                break
    return tuple(out)


def all_flats(M: Matroid) -> frozenset[frozenset[int]]:
    """Every closure-closed subset, including the empty flat and the ground set."""
    return frozenset(members(x) for x in _flat_masks(M))


def cyclic_flats(M: Matroid) -> frozenset[frozenset[int]]:
    return frozenset(
        members(x) for x in _flat_masks(M) if _is_cyclic_mask(M, x)
    )


def pnc_flats(M: Matroid) -> frozenset[frozenset[int]]:
    return frozenset(members(x) for x in _pnc_masks(M))


def reducible(M: Matroid, F) -> bool:
    """Is the pnc-flat F an intersection of two incomparable pnc-flats?"""
    from .kernel import mask_of

    fm = mask_of(F, M.n)
    pncs = _pnc_masks(M)
    if fm not in pncs:
        raise NotPncFlat(f"{sorted(members(fm))} is not a pnc-flat")
    for i, g in enumerate(pncs):
        for h in pncs[i + 1 :]:
            if g & h == h or g & h == g:  # comparable
                continue
            if g & h == fm:
                return True
    return False


def irreducible_pnc_flats(M: Matroid) -> frozenset[frozenset[int]]:
    pncs = _pnc_masks(M)
    red = set()
    for i, g in enumerate(pncs):
        for h in pncs[i + 1 :]:
            meet = g & h
            if meet == g or meet == h:
                continue
            red.add(meet)
    return frozenset(members(f) for f in pncs if f not in red)


def fundamental_flats(M: Matroid) -> frozenset[frozenset[int]]:
    """Pnc-flats met by some spanning circuit in a basis of the flat."""
    return frozenset(members(f) for f in _fundamental_masks(M))


def connected_flats_signature(M: Matroid) -> list[tuple[frozenset[int], int]]:
    """Nontrivial connected flats (ground set included) with their ranks.

    Canonically sorted; a loopless matroid is determined by this list.
    """
    if M.loops_mask:
        raise HasLoops("signature is defined for loopless matroids")
    ranks = M.rank_table
    out = []
    for x in _flat_masks(M):
        if ranks[x] >= x.bit_count():
            continue
        if _restriction_connected(M, x):
            out.append((members(x), ranks[x]))
    out.sort(key=lambda fr: (len(fr[0]), sorted(fr[0])))
    return out


@dataclass(frozen=True)
class FlatEntry:
    flat: frozenset[int]
    rank: int
    nullity: int
    is_connected: bool
    is_cyclic: bool
    is_pnc: bool
    is_reducible: bool
    is_fundamental: bool


@dataclass(frozen=True)
class FlatsReport:
    entries: tuple[FlatEntry, ...]


def flats_report(M: Matroid) -> FlatsReport:
    """Classify every flat; rows sorted by (size, elements)."""
    ranks = M.rank_table
    pncs = set(_pnc_masks(M))
    fund = set(_fundamental_masks(M))
    red = set()
    pnc_list = tuple(pncs)
    for i, g in enumerate(pnc_list):
        for h in pnc_list[i + 1 :]:
            meet = g & h
            if meet == g or meet == h:
                continue
            if meet in pncs:
                red.add(meet)
    rows = []
    for x in sorted(_flat_masks(M), key=lambda m: (m.bit_count(), sorted(members(m)))):
        rows.append(
            FlatEntry(
                flat=members(x),
                rank=ranks[x],
                nullity=x.bit_count() - ranks[x],
                is_connected=_restriction_connected(M, x),
                is_cyclic=_is_cyclic_mask(M, x),
                is_pnc=x in pncs,
                is_reducible=x in red,
                is_fundamental=x in fund,
            )
        )
    return FlatsReport(entries=tuple(rows))
