"""Canonical labeling of basis families.

Backtracking over element orderings: positions are assigned one at a time,
candidates restricted to the first non-singleton cell of an iteratively
refined partition (invariants: basis-degree, co-occurrence with the assigned
prefix, co-occurrence multisets against the remaining cells).  Pruning:
prefix comparison of the partially relabelled family against the best branch
so far, collapsing of clone classes (elements interchangeable by a single
transposition), and root-level orbit skipping driven by automorphisms
discovered at the leaves.  Pruning never changes the computed form, only the
work done.
"""

from __future__ import annotations

import itertools
from math import comb


def _swap_bits(mask: int, e: int, f: int) -> int:
    be = (mask >> e) & 1
    bf = (mask >> f) & 1
    if be == bf:
        return mask
    return mask ^ ((1 << e) | (1 << f))


def _find(parent: list[int], a: int) -> int:
    while parent[a] != a:
        parent[a] = parent[parent[a]]
        a = parent[a]
    return a


def _clone_classes(n: int, masks, mask_set) -> list[int]:
    """Union elements whose transposition fixes the whole family."""
    parent = list(range(n))
    for e in range(n):
        for f in range(e + 1, n):
            if _find(parent, e) == _find(parent, f):
                continue
            if all(_swap_bits(b, e, f) in mask_set for b in masks):
                parent[_find(parent, f)] = _find(parent, e)
    return [_find(parent, e) for e in range(n)]


class _Search:
    def __init__(self, n: int, masks, collect_all: bool):
        self.n = n
        self.masks = tuple(masks)
        self.mask_set = frozenset(masks)
        self.collect_all = collect_all
        self.deg = [sum((b >> e) & 1 for b in masks) for e in range(n)]
        self.cooc = [
            [
                sum(1 for b in masks if (b >> e) & 1 and (b >> f) & 1)
                for f in range(n)
            ]
            for e in range(n)
        ]
        if collect_all:
            self.clone = list(range(n))  # clone skipping would lose leaves
        else:
            self.clone = _clone_classes(n, self.masks, self.mask_set)
        self.best_prof: list[tuple[int, ...]] = []
        self.best_leaves: list[tuple[int, ...]] = []
        self.order: list[int] = []

    def refine(self, cells: list[list[int]]) -> list[list[int]]:
        cooc = self.cooc
        deg = self.deg
        prefix = tuple(self.order)
        while True:
            new_cells: list[list[int]] = []
            changed = False
            for cell in cells:
                if len(cell) == 1:
                    new_cells.append(cell)
                    continue
                groups: dict[tuple, list[int]] = {}
                for e in cell:
                    row = cooc[e]
                    sig = (
                        deg[e],
                        tuple(row[a] for a in prefix),
                    ) + tuple(
                        tuple(sorted(row[f] for f in other if f != e))
                        for other in cells
                    )
                    groups.setdefault(sig, []).append(e)
                if len(groups) > 1:
                    changed = True
                for sig in sorted(groups):
                    new_cells.append(groups[sig])
            cells = new_cells
            if not changed:
                return cells

    def run(self) -> None:
        cells = self.refine([list(range(self.n))])
        part = [0] * len(self.masks)
        self._dfs(0, cells, part)

    def _dfs(self, depth: int, cells: list[list[int]], part: list[int]) -> None:
        if not cells:
            self.best_leaves.append(tuple(self.order))
            return
        idx = 0
        for i, c in enumerate(cells):
            if len(c) > 1:
                idx = i
                break
        cell = cells[idx]
        candidates = []
        seen_classes = set()
        for e in sorted(cell):
            c = self.clone[e]
            if c in seen_classes:
                continue
            seen_classes.add(c)
            candidates.append(e)

        at_root = depth == 0 and not self.collect_all
        root_orbit = list(range(self.n)) if at_root else None
        root_done: list[int] = []

        masks = self.masks
        bit = 1 << depth
        for e in candidates:
            if at_root and any(
                _find(root_orbit, e) == _find(root_orbit, p) for p in root_done
            ):
                continue
            newpart = [
                p | bit if (masks[j] >> e) & 1 else p
                for j, p in enumerate(part)
            ]
            prof = tuple(sorted(newpart))
            if len(self.best_prof) > depth:
                ref = self.best_prof[depth]
                if prof > ref:
                    if at_root:
                        root_done.append(e)
                    continue
                if prof < ref:
                    del self.best_prof[depth:]
                    self.best_prof.append(prof)
                    self.best_leaves.clear()
            else:
                self.best_prof.append(prof)
            self.order.append(e)
            rest = [f for f in cell if f != e]
            child = cells[:idx] + ([rest] if rest else []) + cells[idx + 1 :]
            self._dfs(depth + 1, self.refine(child), newpart)
            self.order.pop()
            if at_root:
                root_done.append(e)
                self._absorb_autos(root_orbit)

    def _absorb_autos(self, parent: list[int]) -> None:
        leaves = self.best_leaves
        if len(leaves) < 2:
            return
        base = leaves[0]
        inv = [0] * self.n
        for pos, e in enumerate(base):
            inv[e] = pos
        for other in leaves[1:]:
            for e in range(self.n):
                img = other[inv[e]]
                ra, rb = _find(parent, e), _find(parent, img)
                if ra != rb:
                    parent[rb] = ra


def _relabel(masks, order) -> tuple[int, ...]:
    pos = [0] * len(order)
    for i, e in enumerate(order):
        pos[e] = i
    out = []
    for b in masks:
        m = 0
        e = 0
        bb = b
        while bb:
            if bb & 1:
                m |= 1 << pos[e]
            bb >>= 1
            e += 1
        out.append(m)
    return tuple(sorted(out))


def canonical_labeling(n: int, masks) -> tuple[tuple[int, ...], tuple[int, ...]]:
    """Return (canonical mask family, order), where order[pos] = element.

    Relabelling the family through the order and sorting yields the first
    component.  Two families give equal canonical masks iff some bijection
    of their ground sets carries one family onto the other.
    """
    masks = tuple(sorted(masks))
    if n == 0:
        return masks, ()
    r = masks[0].bit_count()
    if len(masks) == comb(n, r):
        return masks, tuple(range(n))
    search = _Search(n, masks, collect_all=False)
    search.run()
    order = search.best_leaves[0]
    return _relabel(masks, order), order


def automorphism_group(n: int, masks) -> set[tuple[int, ...]]:
    """Full automorphism group as permutation tuples (p[e] = image of e)."""
    masks = tuple(sorted(masks))
    if n == 0:
        return {()}
    r = masks[0].bit_count()
    if len(masks) == comb(n, r):
        if n > 9:
            raise ValueError(
                f"automorphism group of the uniform matroid on {n} elements "
                "is n!; refusing to materialize it"
            )
        return set(itertools.permutations(range(n)))
    search = _Search(n, masks, collect_all=True)
    search.run()
    leaves = search.best_leaves
    base = leaves[0]
    inv = [0] * n
    for pos, e in enumerate(base):
        inv[e] = pos
    return {tuple(leaf[inv[e]] for e in range(n)) for leaf in leaves}
