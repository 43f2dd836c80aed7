"""Interval presentations and lattice-path-matroid recognition.

An interval presentation lists r position intervals [a_i, b_i] over a linear
order of the ground set, with both endpoint sequences strictly increasing
(an antichain of intervals).  The realized matroid is transversal: bases are
the position tuples x_1 < ... < x_r with x_i in [a_i, b_i], read back
through the order.  Positions not covered by any interval carry loops.

Three recognizers live here or are reachable from here:

- ``find_path_order`` -- the brute-force oracle; scans all ground-set orders
  for one whose forced candidate presentation realizes the input.
- ``is_lpm_char`` -- structural test on fundamental flats and pnc-flats
  of each connected component (four clauses, reported by id).
- ``minors.is_lpm_via_excluded_minors`` -- catalog search, in
  :mod:`latmat.minors`.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Optional

from . import flats as _flats
from . import ordersearch
from .kernel import (
    GroundTooLarge,
    Matroid,
    MatroidError,
    _bits,
    _compress,
    is_connected,
    members,
)


class LoopContraction(MatroidError):
    pass


class LoopDeletion(MatroidError):
    pass


class NotConnected(MatroidError):
    pass


@dataclass(frozen=True)
class IntervalPresentation:
    """r intervals of positions over a path order of n elements.

    ``order[p]`` is the element at position p (identity when omitted);
    ``intervals[i] = (a_i, b_i)`` are 0-based positions with a_i <= b_i and
    both endpoint sequences strictly increasing.
    """

    n: int
    intervals: tuple[tuple[int, int], ...]
    order: tuple[int, ...] = field(default=())

    def __post_init__(self):
        if not self.order:
            object.__setattr__(self, "order", tuple(range(self.n)))
        object.__setattr__(
            self, "intervals", tuple((int(a), int(b)) for a, b in self.intervals)
        )
        if sorted(self.order) != list(range(self.n)):
            raise MatroidError("order is not a permutation of 0..n-1")
        prev_a, prev_b = -1, -1
        for a, b in self.intervals:
            if not (0 <= a <= b < self.n):
                raise MatroidError(f"interval ({a},{b}) out of range")
            if a <= prev_a or b <= prev_b:
                raise MatroidError("interval endpoints must strictly increase")
            prev_a, prev_b = a, b

    @property
    def rank(self) -> int:
        return len(self.intervals)

    def position_of(self, element: int) -> int:
        return self.order.index(element)

    def reversed(self) -> "IntervalPresentation":
        n = self.n
        ivs = tuple(
            (n - 1 - b, n - 1 - a) for a, b in reversed(self.intervals)
        )
        return IntervalPresentation(n, ivs, tuple(reversed(self.order)))


@dataclass(frozen=True)
class ClauseViolation:
    """Which structural clause failed, on which component, shown by flats."""

    clause: str  # "i" | "ii" | "iii" | "iv"
    component: frozenset[int]
    flats: tuple[frozenset[int], ...]


@dataclass(frozen=True)
class RecognitionResult:
    verdict: bool
    method: str
    witness: object = None  # IntervalPresentation | ClauseViolation | MinorWitness | None


def realize(P: IntervalPresentation) -> Matroid:
    """The transversal matroid of the intervals (uncovered positions = loops)."""
    r = P.rank
    order = P.order
    masks: list[int] = []

    def rec(i: int, start: int, acc: int) -> None:
        if i == r:
            masks.append(acc)
            return
        a, b = P.intervals[i]
        for p in range(max(a, start), b + 1):
            rec(i + 1, p + 1, acc | (1 << order[p]))

    rec(0, 0, 0)
    return Matroid._from_masks(P.n, sorted(masks))


def presentation_connected(P: IntervalPresentation) -> bool:
    """Connectivity read off the endpoints: cover starts at the first
    position, ends at the last, and consecutive intervals overlap."""
    r = P.rank
    if r < 1:
        raise MatroidError("connectivity criterion needs at least one interval")
    a0 = P.intervals[0][0]
    br = P.intervals[-1][1]
    if a0 != 0 or br != P.n - 1:
        return False
    for i in range(r - 1):
        if P.intervals[i + 1][0] > P.intervals[i][1]:
            return False
    return True


def _covering_range(P: IntervalPresentation, pos: int) -> tuple[int, int]:
    """Indices (s, t) of the run of intervals containing the position, s > t if none."""
    s, t = None, None
    for i, (a, b) in enumerate(P.intervals):
        if a <= pos <= b:
            if s is None:
                s = i
            t = i
    if s is None:
        return 1, 0
    return s, t


def contract_presentation(P: IntervalPresentation, y: int) -> IntervalPresentation:
    """Presentation of the contraction by a non-loop element.

    If y lies in a single interval, that interval is dropped; if it lies in
    the run s..t, consecutive intervals are merged pairwise across the run.
    Remaining elements are relabelled exactly like the kernel contraction.
    """
    pos = P.position_of(y)
    s, t = _covering_range(P, pos)
    if s > t:
        raise LoopContraction(f"element {y} is a loop")
    ivs = []
    for i, (a, b) in enumerate(P.intervals):
        if i < s:
            ivs.append((a, b))  # entirely before the removed position
        elif s < t and i < t:
            ivs.append((a, P.intervals[i + 1][1] - 1))  # merged with successor
        elif i > t:
            ivs.append((a - 1, b - 1))
    new_order = tuple(e - (e > y) for e in P.order if e != y)
    return IntervalPresentation(P.n - 1, tuple(ivs), new_order)


def _delete_first(P: IntervalPresentation) -> IntervalPresentation:
    if P.rank == 0 or P.intervals[0][0] != 0:
        raise LoopDeletion("first element is a loop")
    y = P.order[0]
    if P.intervals[0] == (0, 0):
        ivs = tuple((a - 1, b - 1) for a, b in P.intervals[1:])
    else:
        ivs = tuple(
            (max(a, i + 1) - 1, b - 1) for i, (a, b) in enumerate(P.intervals)
        )
    new_order = tuple(e - (e > y) for e in P.order[1:])
    return IntervalPresentation(P.n - 1, ivs, new_order)


def delete_terminal_presentation(P: IntervalPresentation, end: str) -> IntervalPresentation:
    """Presentation of the deletion of the first or last (non-loop) element."""
    if end == "first":
        return _delete_first(P)
    if end == "last":
        return _delete_first(P.reversed()).reversed()
    raise ValueError(f"end must be 'first' or 'last', got {end!r}")


def fundamental_flats_from_presentation(
    P: IntervalPresentation,
) -> set[tuple[frozenset[int], int]]:
    """Fundamental flats of a connected presentation, read off the endpoints.

    Prefix flats end just before a lower endpoint that jumps by more than
    one; suffix flats start just after an upper endpoint with the matching
    gap.  Returned with their ranks.
    """
    if not presentation_connected(P):
        raise NotConnected("endpoint formulas require a connected presentation")
    r = P.rank
    a = [iv[0] for iv in P.intervals]
    b = [iv[1] for iv in P.intervals]
    out: set[tuple[frozenset[int], int]] = set()
    for j in range(1, r):
        if a[j] > a[j - 1] + 1:
            flat = frozenset(P.order[p] for p in range(a[j]))
            out.add((flat, j))
    for k in range(r - 1):
        if b[k] + 1 < b[k + 1]:
            flat = frozenset(P.order[p] for p in range(b[k] + 1, P.n))
            out.add((flat, r - (k + 1)))
    return out


# ---------------------------------------------------------------------------
# oracle recognizer


def _strip_loops(M: Matroid) -> tuple[Matroid, tuple[int, ...], tuple[int, ...]]:
    loops = tuple(sorted(members(M.loops_mask)))
    kept = tuple(e for e in range(M.n) if e not in loops)
    masks = sorted({_compress(b, kept) for b in M.basis_masks})
    return Matroid._from_masks(len(kept), masks), kept, loops


def find_path_order(
    M: Matroid,
    prune: bool = True,
    max_n: int = 9,
    backend: Optional[str] = None,
) -> Optional[tuple[tuple[int, ...], IntervalPresentation]]:
    """Brute-force oracle: the lexicographically least path order, if any.

    Scans every order of the loopless part (reversals skipped); per order the
    only possible presentation has lower endpoints at the greedy minimum
    basis and upper endpoints at the greedy maximum basis, so one realization
    test per order decides.  Loops are appended after the scanned part, in
    ascending label order, so the returned presentation realizes M exactly.

    ``prune=True`` additionally restricts first/last elements to the union
    of minimal fundamental flats on connected inputs; the unpruned scan is
    the reference mode and both return the same order.
    """
    if M.n > max_n:
        raise GroundTooLarge(f"oracle capped at {max_n} elements, got {M.n}")
    ML, kept, loops = _strip_loops(M)
    if ML.n == 0:
        return tuple(range(M.n)), IntervalPresentation(M.n, ())
    first_mask = 0
    if prune and is_connected(ML):
        fund = _flats._fundamental_masks(ML)
        minimal = [
            f for f in fund if not any(g != f and g & f == g for g in fund)
        ]
        if minimal:
            for f in minimal:
                first_mask |= f
    perm = ordersearch.scan_path_orders(
        ML.n, ML.rank, ML.basis_masks, ML.indep_masks, first_mask, backend
    )
    if perm is None:
        return None
    intervals = ordersearch.candidate_intervals(
        ML.n, ML.rank, ML.indep_masks, perm
    )
    full_order = tuple(kept[e] for e in perm) + loops
    pres = IntervalPresentation(M.n, intervals, full_order)
    return full_order, pres


# ---------------------------------------------------------------------------
# structural recognizer


def _chain_partition(fund: tuple[int, ...]):
    """Split fundamental flats into the components of their comparability
    graph.  Valid structure: each component totally ordered (there are at
    most two once no three flats are mutually incomparable), which makes
    every cross pair incomparable.  Returns the components and, when some
    component is not a chain, a comparability path whose endpoints are
    incomparable: a certificate that one chain must hold both."""
    k = len(fund)
    parent = list(range(k))

    def find(a):
        while parent[a] != a:
            parent[a] = parent[parent[a]]
            a = parent[a]
        return a

    def comparable(i, j):
        m = fund[i] & fund[j]
        return m == fund[i] or m == fund[j]

    for i in range(k):
        for j in range(i + 1, k):
            if comparable(i, j):
                ra, rb = find(i), find(j)
                if ra != rb:
                    parent[rb] = ra
    groups: dict[int, list[int]] = {}
    for i in range(k):
        groups.setdefault(find(i), []).append(i)
    comps = sorted(groups.values(), key=lambda g: min(fund[i] for i in g))
    bad_path = None
    for g in comps:
        for x in range(len(g)):
            for y in range(x + 1, len(g)):
                if not comparable(g[x], g[y]):
                    bad_path = _comparability_path(fund, g, g[x], g[y], comparable)
                    break
            if bad_path:
                break
        if bad_path:
            break
    return comps, bad_path


def _comparability_path(fund, comp, src, dst, comparable):
    """Shortest path from src to dst along comparable pairs (BFS)."""
    from collections import deque

    prev = {src: None}
    queue = deque([src])
    while queue:
        cur = queue.popleft()
        if cur == dst:
            path = []
            while cur is not None:
                path.append(cur)
                cur = prev[cur]
            return tuple(reversed(path))
        for other in comp:
            if other not in prev and comparable(cur, other):
                prev[other] = cur
                queue.append(other)
    raise AssertionError("endpoints share a comparability component")


def _check_component(Mi: Matroid):
    """None if the component passes the four structural clauses, else
    (clause id, offending flats as masks)."""
    fund = _flats._fundamental_masks(Mi)
    pncs = _flats._pnc_masks(Mi)
    # clause i: no three mutually incomparable fundamental flats, and the
    # comparability components (the forced chains) number at most two
    for i in range(len(fund)):
        for j in range(i + 1, len(fund)):
            mij = fund[i] & fund[j]
            if mij == fund[i] or mij == fund[j]:
                continue
            for k in range(j + 1, len(fund)):
                mik = fund[i] & fund[k]
                mjk = fund[j] & fund[k]
                if (
                    mik != fund[i]
                    and mik != fund[k]
                    and mjk != fund[j]
                    and mjk != fund[k]
                ):
                    return "i", (fund[i], fund[j], fund[k])
    comps, bad_path = _chain_partition(fund)
    # no three mutually incomparable flats here, so at most two components
    assert len(comps) <= 2
    if bad_path is not None:
        # consecutive flats comparable, endpoints not: no chain pair fits
        return "i", tuple(fund[i] for i in bad_path)
    chain1 = [fund[i] for i in comps[0]] if comps else []
    chain2 = [fund[i] for i in comps[1]] if len(comps) > 1 else []
    full = Mi.full_mask
    ranks = Mi.rank_table
    r = Mi.rank
    nullity = lambda x: x.bit_count() - ranks[x]
    # clause ii: overlapping cross pairs must cover the ground set
    for f in chain1:
        for g in chain2:
            if f & g and (f | g) != full:
                return "ii", (f, g)
    # clause iii: leftover pnc-flats are exactly the high-nullity crossings
    eta_m = nullity(full)
    qualifying = {
        f & g
        for f in chain1
        for g in chain2
        if eta_m < nullity(f) + nullity(g)
    }
    remaining = set(pncs) - set(fund)
    if remaining != qualifying:
        diff = sorted(remaining.symmetric_difference(qualifying))
        return "iii", tuple(diff)
    # clause iv: pnc crossings sit at the modular rank
    for f in chain1:
        for g in chain2:
            meet = f & g
            if meet in pncs and ranks[meet] != ranks[f] + ranks[g] - r:
                return "iv", (f, g)
    return None


def is_lpm_char(M: Matroid) -> RecognitionResult:
    """Structural recognizer: loops stripped, then each connected component
    is tested against the four-clause flat characterization."""
    ML, kept, _loops = _strip_loops(M)
    for cmask in ML.component_masks:
        comp_elems = tuple(e for e in range(ML.n) if (cmask >> e) & 1)
        masks = sorted(
            {_compress(b & cmask, comp_elems) for b in ML.basis_masks}
        )
        Mi = Matroid._from_masks(len(comp_elems), masks)
        hit = _check_component(Mi)
        if hit is not None:
            clause, flat_masks = hit
            orig = tuple(
                frozenset(kept[comp_elems[e]] for e in _bits(fm))
                for fm in flat_masks
            )
            comp_orig = frozenset(kept[comp_elems[e]] for e in range(Mi.n))
            return RecognitionResult(
                False, "flats", ClauseViolation(clause, comp_orig, orig)
            )
    return RecognitionResult(True, "flats")


# ---------------------------------------------------------------------------
# nested matroids


def is_nested(M: Matroid) -> bool:
    """Do the pnc-flats of the loopless part form a chain?"""
    ML, _, _ = _strip_loops(M)
    pncs = _flats._pnc_masks(ML)
    for i in range(len(pncs)):
        for j in range(i + 1, len(pncs)):
            meet = pncs[i] & pncs[j]
            if meet != pncs[i] and meet != pncs[j]:
                return False
    return True


def is_nested_via_pn(M: Matroid) -> bool:
    """Nestedness by excluded minors: no truncated double-circuit minor."""
    from . import catalog, minors  # local import; minors imports this module

    for k in range(2, M.rank + 1):
        if 2 * k > M.n:
            break
        if minors.has_minor(M, catalog.p_n(k)) is not None:
            return False
    return True


# ---------------------------------------------------------------------------
# unified front end and rendering


def recognize(M: Matroid, method: str, max_n: int = 9, prune: bool = True) -> RecognitionResult:
    """Run one of the three recognizers: 'oracle', 'flats', or 'minors'."""
    if method == "oracle":
        found = find_path_order(M, prune=prune, max_n=max_n)
        if found is None:
            return RecognitionResult(False, "oracle")
        return RecognitionResult(True, "oracle", found[1])
    if method == "flats":
        return is_lpm_char(M)
    if method == "minors":
        from . import minors

        witness = minors.find_catalog_minor(M)
        if witness is None:
            return RecognitionResult(True, "minors")
        return RecognitionResult(False, "minors", witness)
    raise ValueError(f"unknown method {method!r}")


def diagram(P: IntervalPresentation) -> str:
    """ASCII picture of the lattice-path region.

    Two step strings (N at the lower endpoints / at the upper endpoints),
    then one row of cells per interval, top row = last interval; row i
    occupies columns a_i - i .. b_i - i (0-based).  Glyphs are cosmetic.
    """
    n, r = P.n, P.rank
    aset = {iv[0] for iv in P.intervals}
    bset = {iv[1] for iv in P.intervals}
    lower = "".join("N" if p in aset else "E" for p in range(n))
    upper = "".join("N" if p in bset else "E" for p in range(n))
    lines = [f"region {n} x {r}", f"lower: {lower}", f"upper: {upper}"]
    for i in range(r - 1, -1, -1):
        a, b = P.intervals[i]
        lines.append(" " * (a - i) + "#" * (b - a + 1))
    return "\n".join(lines) + "\n"


# ---------------------------------------------------------------------------
# text format


def presentation_to_text(P: IntervalPresentation) -> str:
    lines = [f"LPM {P.n} {P.rank}"]
    for a, b in P.intervals:
        lines.append(f"{a} {b}")
    if P.order != tuple(range(P.n)):
        lines.append("ORDER " + " ".join(str(e) for e in P.order))
    return "\n".join(lines) + "\n"


def presentation_from_text(text: str) -> IntervalPresentation:
    header = None
    ivs: list[tuple[int, int]] = []
    order: tuple[int, ...] = ()
    for raw in text.splitlines():
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        if header is None:
            parts = line.split()
            if len(parts) != 3 or parts[0] != "LPM":
                raise MatroidError(f"bad header line: {raw!r}")
            header = (int(parts[1]), int(parts[2]))
            continue
        if line.startswith("ORDER"):
            order = tuple(int(t) for t in line.split()[1:])
            continue
        a, b = line.split()
        ivs.append((int(a), int(b)))
    if header is None:
        raise MatroidError("missing LPM header")
    n, r = header
    if len(ivs) != r:
        raise MatroidError(f"expected {r} interval lines, found {len(ivs)}")
    return IntervalPresentation(n, tuple(ivs), order)
