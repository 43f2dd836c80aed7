"""Finite matroids as explicit basis families on ground sets {0, ..., n-1}.

Bases are stored internally as integer bitmasks (bit i = element i).  Every
operation is a pure function and every value is immutable after
construction, so matroids are safe to share across threads with no locking.

Ground sets are capped at 12 elements: all algorithms here are exponential
and the cap keeps worst cases interactive.  Element subsets may be passed to
any operation either as an iterable of element ids or as a bitmask int;
results use ``frozenset`` values.
"""

from __future__ import annotations

import itertools
from functools import cached_property
from typing import Iterable, Optional, Union

from . import _canonical

MAX_GROUND = 12

ElementSetLike = Union[int, Iterable[int]]


class MatroidError(Exception):
    """Base class for all errors raised by this package."""


class EmptyFamily(MatroidError):
    pass


class MixedCardinality(MatroidError):
    pass


class OutOfRange(MatroidError):
    pass


class GroundTooLarge(MatroidError):
    pass


class NotCircuitHyperplane(MatroidError):
    pass


class LoopBasepoint(MatroidError):
    pass


class OverlappingSets(MatroidError):
    pass


class AxiomViolation(MatroidError):
    """Basis exchange failed; carries a witnessing (basis1, basis2, x) triple."""

    def __init__(self, b1: frozenset, b2: frozenset, x: int):
        self.basis1 = b1
        self.basis2 = b2
        self.x = x
        super().__init__(
            f"exchange fails for x={x} between {sorted(b1)} and {sorted(b2)}"
        )


def mask_of(elements: ElementSetLike, n: Optional[int] = None) -> int:
    """Pack an element set into a bitmask, range-checking against n if given."""
    if isinstance(elements, int):
        m = elements
        if m < 0 or (n is not None and m >> n):
            raise OutOfRange(f"bitmask {m:#x} not within 0..{n}")
        return m
    m = 0
    for e in elements:
        if e < 0 or (n is not None and e >= n):
            raise OutOfRange(f"element {e} not in 0..{(n or 0) - 1}")
        m |= 1 << e
    return m


def members(mask: int) -> frozenset[int]:
    """Unpack a bitmask into a frozenset of element ids."""
    out = []
    while mask:
        low = mask & -mask
        out.append(low.bit_length() - 1)
        mask ^= low
    return frozenset(out)


def _bits(mask: int):
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


class Matroid:
    """A matroid given by its basis family.

    Construct through :func:`from_bases` (validates the exchange axiom) or
    the internal :meth:`_from_masks` (trusted constructors).  Equality and
    hashing compare the labelled basis family, not isomorphism type.
    """

    def __init__(self, n: int, masks: Iterable[int], _trusted: bool = False):
        if not _trusted:
            raise MatroidError("use from_bases() to construct matroids")
        mask_tuple = tuple(sorted(masks))
        self.n = n
        self.basis_masks = mask_tuple
        self.mask_set = frozenset(mask_tuple)
        self.rank = mask_tuple[0].bit_count() if mask_tuple else 0
        self.full_mask = (1 << n) - 1

    @classmethod
    def _from_masks(cls, n: int, masks: Iterable[int]) -> "Matroid":
        return cls(n, masks, _trusted=True)

    @cached_property
    def bases(self) -> frozenset[frozenset[int]]:
        return frozenset(members(b) for b in self.basis_masks)

    @property
    def num_bases(self) -> int:
        return len(self.basis_masks)

    @cached_property
    def indep_masks(self) -> frozenset[int]:
        """All independent sets, as the downward closure of the bases."""
        out = set()
        for b in self.basis_masks:
            sub = b
            while True:
                out.add(sub)
                if sub == 0:
                    break
                sub = (sub - 1) & b
        return frozenset(out)

    def is_independent(self, mask: int) -> bool:
        return mask in self.indep_masks

    @cached_property
    def rank_table(self) -> list[int]:
        """rank of every subset, indexed by bitmask."""
        table = [0] * (1 << self.n)
        for x in range(1 << self.n):
            table[x] = max((b & x).bit_count() for b in self.basis_masks)
        return table

    @cached_property
    def loops_mask(self) -> int:
        used = 0
        for b in self.basis_masks:
            used |= b
        return self.full_mask & ~used

    @cached_property
    def coloops_mask(self) -> int:
        common = self.full_mask
        for b in self.basis_masks:
            common &= b
        return common

    @cached_property
    def circuit_masks(self) -> tuple[int, ...]:
        indep = self.indep_masks
        out = []
        for x in range(1, 1 << self.n):
            if x in indep:
                continue
            # minimal dependent: every one-element deletion is independent
            m = x
            minimal = True
            while m:
                low = m & -m
                if (x ^ low) not in indep:
                    minimal = False
                    break
                m ^= low
            if minimal:
                out.append(x)
        return tuple(out)

    @cached_property
    def component_masks(self) -> tuple[int, ...]:
        """Finest direct-sum decomposition, via shared-circuit transitivity."""
        parent = list(range(self.n))

        def find(a):
            while parent[a] != a:
                parent[a] = parent[parent[a]]
                a = parent[a]
            return a

        for c in self.circuit_masks:
            es = list(_bits(c))
            for e in es[1:]:
                ra, rb = find(es[0]), find(e)
                if ra != rb:
                    parent[rb] = ra
        groups: dict[int, int] = {}
        for e in range(self.n):
            r = find(e)
            groups[r] = groups.get(r, 0) | (1 << e)
        return tuple(sorted(groups.values(), key=lambda m: m & -m))

    @cached_property
    def _canon(self) -> tuple[tuple[int, ...], tuple[int, ...]]:
        return _canonical.canonical_labeling(self.n, self.basis_masks)

    def __eq__(self, other) -> bool:
        if not isinstance(other, Matroid):
            return NotImplemented
        return self.n == other.n and self.mask_set == other.mask_set

    def __hash__(self) -> int:
        return hash((self.n, self.mask_set))

    def __repr__(self) -> str:
        return f"Matroid(n={self.n}, rank={self.rank}, bases={self.num_bases})"


def _as_mask(M: Matroid, X: ElementSetLike) -> int:
    return mask_of(X, M.n)


# ---------------------------------------------------------------------------
# construction and validation


def from_bases(n: int, bases: Iterable[ElementSetLike]) -> Matroid:
    """Validate a basis family and build the matroid.

    Raises EmptyFamily, MixedCardinality, OutOfRange, GroundTooLarge, or
    AxiomViolation (with a witnessing pair) when the family is not the basis
    family of a matroid on {0..n-1}.
    """
    if n < 0:
        raise OutOfRange(f"negative ground size {n}")
    if n > MAX_GROUND:
        raise GroundTooLarge(f"n={n} exceeds the cap of {MAX_GROUND}")
    masks = sorted({mask_of(b, n) for b in bases})
    if not masks:
        raise EmptyFamily("a matroid has at least one basis")
    r = masks[0].bit_count()
    for b in masks:
        if b.bit_count() != r:
            raise MixedCardinality("bases must share one cardinality")
    mset = frozenset(masks)
    for b1 in masks:
        for b2 in masks:
            if b1 == b2:
                continue
            out = b1 & ~b2
            into = b2 & ~b1
            m = out
            while m:
                xbit = m & -m
                m ^= xbit
                moved = b1 ^ xbit
                k = into
                while k:
                    ybit = k & -k
                    k ^= ybit
                    if (moved | ybit) in mset:
                        break
                else:
                    raise AxiomViolation(
                        members(b1), members(b2), xbit.bit_length() - 1
                    )
    return Matroid._from_masks(n, masks)


def uniform(r: int, n: int) -> Matroid:
    """The uniform matroid: every r-subset of an n-set is a basis."""
    if not 0 <= r <= n:
        raise ValueError(f"uniform needs 0 <= r <= n, got r={r}, n={n}")
    if n > MAX_GROUND:
        raise GroundTooLarge(f"n={n} exceeds the cap of {MAX_GROUND}")
    masks = [mask_of(c) for c in itertools.combinations(range(n), r)]
    return Matroid._from_masks(n, masks)


# ---------------------------------------------------------------------------
# rank, closure, circuits, connectivity


def rank_of(M: Matroid, X: ElementSetLike) -> int:
    xm = _as_mask(M, X)
    return max((b & xm).bit_count() for b in M.basis_masks)


def closure(M: Matroid, X: ElementSetLike) -> frozenset[int]:
    xm = _as_mask(M, X)
    return members(_closure_mask(M, xm))


def _closure_mask(M: Matroid, xm: int) -> int:
    r = rank_of(M, xm)
    out = xm
    rest = M.full_mask & ~xm
    for e in _bits(rest):
        if rank_of(M, xm | (1 << e)) == r:
            out |= 1 << e
    return out


def circuits(M: Matroid) -> frozenset[frozenset[int]]:
    """All minimal dependent sets (loops appear as singletons)."""
    return frozenset(members(c) for c in M.circuit_masks)


def spanning_circuits(M: Matroid) -> frozenset[frozenset[int]]:
    """Circuits of full rank; these have rank(M) + 1 elements."""
    r = M.rank
    return frozenset(
        members(c) for c in M.circuit_masks if c.bit_count() == r + 1
    )


def is_connected(M: Matroid) -> bool:
    return len(M.component_masks) <= 1


def components(M: Matroid) -> tuple[frozenset[int], ...]:
    """Ground-set partition of the finest direct-sum decomposition."""
    return tuple(members(c) for c in M.component_masks)


# ---------------------------------------------------------------------------
# minors


def removal_relabeling(n: int, removed: ElementSetLike) -> dict[int, int]:
    """Order-preserving compaction map applied by delete/contract/minor."""
    rm = mask_of(removed, n)
    out = {}
    new = 0
    for e in range(n):
        if not (rm >> e) & 1:
            out[e] = new
            new += 1
    return out


def _greedy_independent(M: Matroid, mask: int) -> int:
    got = 0
    for e in _bits(mask):
        cand = got | (1 << e)
        if M.is_independent(cand):
            got = cand
    return got


def _compress(mask: int, kept: tuple[int, ...]) -> int:
    out = 0
    for i, e in enumerate(kept):
        if (mask >> e) & 1:
            out |= 1 << i
    return out


def _minor_masks(
    M: Matroid, dmask: int, cmask: int
) -> tuple[int, tuple[int, ...]]:
    """Bases of M with `cmask` contracted and `dmask` deleted, relabelled."""
    removed = dmask | cmask
    kept = tuple(e for e in range(M.n) if not (removed >> e) & 1)
    if not kept:
        return 0, (0,)
    imask = _greedy_independent(M, cmask)
    survivors = [b for b in M.basis_masks if b & removed == imask]
    if survivors:
        out = sorted({_compress(b & ~imask, kept) for b in survivors})
        return len(kept), tuple(out)
    # Deletion dropped the rank: rebuild from independence directly.
    kept_mask = M.full_mask & ~removed
    new_rank = rank_of(M, kept_mask | cmask) - rank_of(M, cmask)
    out = []
    for combo in itertools.combinations(kept, new_rank):
        sm = mask_of(combo)
        if M.is_independent(sm | imask):
            out.append(_compress(sm, kept))
    return len(kept), tuple(sorted(out))


def minor(M: Matroid, delete_set: ElementSetLike, contract_set: ElementSetLike) -> Matroid:
    """Delete and contract disjoint sets; result relabelled to 0..n'-1.

    The relabeling is the order-preserving compaction of the kept elements
    (see :func:`removal_relabeling`).
    """
    dm = _as_mask(M, delete_set)
    cm = _as_mask(M, contract_set)
    if dm & cm:
        raise OverlappingSets(
            f"delete and contract sets overlap on {sorted(members(dm & cm))}"
        )
    new_n, masks = _minor_masks(M, dm, cm)
    return Matroid._from_masks(new_n, masks)


def delete(M: Matroid, X: ElementSetLike) -> Matroid:
    return minor(M, X, 0)


def contract(M: Matroid, X: ElementSetLike) -> Matroid:
    return minor(M, 0, X)


def restrict(M: Matroid, X: ElementSetLike) -> Matroid:
    xm = _as_mask(M, X)
    return minor(M, M.full_mask & ~xm, 0)


# ---------------------------------------------------------------------------
# dual, sums, truncation, extensions


def dual(M: Matroid) -> Matroid:
    full = M.full_mask
    return Matroid._from_masks(M.n, [full ^ b for b in M.basis_masks])


def direct_sum(M1: Matroid, M2: Matroid) -> Matroid:
    """Disjoint union; M2's elements are relabelled after M1's."""
    n = M1.n + M2.n
    if n > MAX_GROUND:
        raise GroundTooLarge(f"direct sum has {n} > {MAX_GROUND} elements")
    masks = [
        b1 | (b2 << M1.n)
        for b1 in M1.basis_masks
        for b2 in M2.basis_masks
    ]
    return Matroid._from_masks(n, masks)


def truncate(M: Matroid, k: int) -> Matroid:
    """Truncation to rank k: bases become the independent k-sets."""
    if not 0 <= k <= M.rank:
        raise ValueError(f"truncation rank {k} not in 0..{M.rank}")
    if k == M.rank:
        return M
    out = set()
    for b in M.basis_masks:
        for combo in itertools.combinations(tuple(_bits(b)), k):
            out.add(mask_of(combo))
    return Matroid._from_masks(M.n, sorted(out))


def free_extension(M: Matroid) -> Matroid:
    """Add element n as freely as possible (rank unchanged)."""
    n = M.n + 1
    if n > MAX_GROUND:
        raise GroundTooLarge(f"extension has {n} > {MAX_GROUND} elements")
    bit = 1 << M.n
    out = set(M.basis_masks)
    for b in M.basis_masks:
        for e in _bits(b):
            out.add((b ^ (1 << e)) | bit)
    return Matroid._from_masks(n, sorted(out))


def free_coextension(M: Matroid) -> Matroid:
    return dual(free_extension(dual(M)))


def parallel_connection(M1: Matroid, x1: int, M2: Matroid, x2: int) -> Matroid:
    """Glue M1 and M2 at a shared basepoint.

    The result keeps M1's labels; M2's other elements follow in label order.
    The basepoint (label x1) may be a loop on one side but not both.  Bases
    are the unions B1 | B2 where either both parts are bases containing the
    basepoint, or one part is a basis avoiding it and the other becomes a
    basis once the basepoint is added.
    """
    if x1 < 0 or x1 >= M1.n or x2 < 0 or x2 >= M2.n:
        raise OutOfRange("basepoint outside ground set")
    loop1 = (M1.loops_mask >> x1) & 1
    loop2 = (M2.loops_mask >> x2) & 1
    if loop1 and loop2:
        raise LoopBasepoint("basepoint is a loop on both sides")
    n = M1.n + M2.n - 1
    if n > MAX_GROUND:
        raise GroundTooLarge(f"parallel connection has {n} > {MAX_GROUND} elements")
    # new label for M2 element e (e != x2)
    relabel2 = {}
    nxt = M1.n
    for e in range(M2.n):
        if e != x2:
            relabel2[e] = nxt
            nxt += 1

    def lift2(mask: int, with_base: bool) -> int:
        out = (1 << x1) if with_base else 0
        for e in _bits(mask & ~(1 << x2)):
            out |= 1 << relabel2[e]
        return out

    xbit1 = 1 << x1
    xbit2 = 1 << x2
    b1_with = [b for b in M1.basis_masks if b & xbit1]
    b1_without = [b for b in M1.basis_masks if not b & xbit1]
    b2_with = [b for b in M2.basis_masks if b & xbit2]
    b2_without = [b for b in M2.basis_masks if not b & xbit2]
    out = set()
    for b1 in b1_with:
        for b2 in b2_with:
            out.add(b1 | lift2(b2, True))
    # basepoint absent: one side a basis, the other a basis minus basepoint
    for b1 in b1_without:
        for b2 in b2_with:
            out.add(b1 | lift2(b2 ^ xbit2, False))
    for b1 in b1_with:
        for b2 in b2_without:
            out.add((b1 ^ xbit1) | lift2(b2, False))
    return Matroid._from_masks(n, sorted(out))


def relax(M: Matroid, X: ElementSetLike) -> Matroid:
    """Turn a circuit-hyperplane into a basis."""
    xm = _as_mask(M, X)
    if xm not in M.circuit_masks:
        raise NotCircuitHyperplane(f"{sorted(members(xm))} is not a circuit")
    if rank_of(M, xm) != M.rank - 1 or _closure_mask(M, xm) != xm:
        raise NotCircuitHyperplane(f"{sorted(members(xm))} is not a hyperplane")
    return Matroid._from_masks(M.n, sorted(M.mask_set | {xm}))


# ---------------------------------------------------------------------------
# simplification, isomorphism, canonical forms


def simplify(M: Matroid) -> tuple[Matroid, dict[int, int]]:
    """Drop loops and collapse parallel classes.

    Returns the simplification together with a map sending every non-loop
    element to the new label of its parallel class (class representative =
    smallest member).
    """
    reps = []
    assigned: dict[int, int] = {}
    for e in range(M.n):
        if (M.loops_mask >> e) & 1:
            continue
        for i, r in enumerate(reps):
            if rank_of(M, (1 << e) | (1 << r)) == 1:
                assigned[e] = i
                break
        else:
            assigned[e] = len(reps)
            reps.append(e)
    keep_mask = mask_of(reps)
    new_n, masks = _minor_masks(M, M.full_mask & ~keep_mask, 0)
    return Matroid._from_masks(new_n, masks), assigned


def canonical_form(M: Matroid) -> bytes:
    """Isomorphism-invariant encoding: equal iff the matroids are isomorphic."""
    canon_masks, _ = M._canon
    out = bytearray()
    out += M.n.to_bytes(1, "little")
    out += M.rank.to_bytes(1, "little")
    out += len(canon_masks).to_bytes(2, "little")
    for m in canon_masks:
        out += m.to_bytes(2, "little")
    return bytes(out)


def is_isomorphic(M1: Matroid, M2: Matroid) -> Optional[dict[int, int]]:
    """A bijection M1 -> M2 carrying bases to bases, or None."""
    if M1.n != M2.n or M1.rank != M2.rank or M1.num_bases != M2.num_bases:
        return None
    if canonical_form(M1) != canonical_form(M2):
        return None
    _, order1 = M1._canon
    _, order2 = M2._canon
    # order[pos] = element; both relabelings reach the same canonical family
    out = {}
    for pos in range(M1.n):
        out[order1[pos]] = order2[pos]
    assert frozenset(
        mask_of(out[e] for e in _bits(b)) for b in M1.basis_masks
    ) == M2.mask_set
    return out


def automorphisms(M: Matroid) -> set[tuple[int, ...]]:
    """All ground-set permutations fixing the basis family.

    Returned as tuples p with p[e] = image of e.  Output size is the group
    order, which is n! for uniform matroids.
    """
    return _canonical.automorphism_group(M.n, M.basis_masks)


# ---------------------------------------------------------------------------
# text format


def matroid_to_text(M: Matroid) -> str:
    """Canonical text form: header line, then one basis per line, sorted."""
    lines = [f"MATROID {M.n} {M.rank}"]
    rows = sorted(tuple(sorted(b)) for b in M.bases)
    for row in rows:
        if row:
            lines.append(" ".join(str(e) for e in row))
    return "\n".join(lines) + "\n"


def matroid_from_text(text: str) -> Matroid:
    """Parse the matroid text format; the family is fully re-validated."""
    rows = []
    header = None
    for raw in text.splitlines():
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        if header is None:
            parts = line.split()
            if len(parts) != 3 or parts[0] != "MATROID":
                raise MatroidError(f"bad header line: {raw!r}")
            header = (int(parts[1]), int(parts[2]))
            continue
        row = tuple(int(t) for t in line.split())
        if any(row[i] >= row[i + 1] for i in range(len(row) - 1)):
            raise MatroidError(f"basis line not strictly increasing: {raw!r}")
        rows.append(row)
    if header is None:
        raise MatroidError("missing MATROID header")
    n, r = header
    if r == 0:
        if rows:
            raise MatroidError("rank 0 matroid admits no basis lines")
        return from_bases(n, [frozenset()])
    if any(len(row) != r for row in rows):
        raise MixedCardinality("basis line length differs from declared rank")
    M = from_bases(n, rows)
    return M
