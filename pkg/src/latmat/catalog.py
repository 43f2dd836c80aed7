"""Named matroid families: the excluded minors of the lattice-path class.

Families (element count / rank):

- ``A{n}``      free extension of the truncated double circuit glued at a
                point (2n elements, rank n, self-dual), n >= 3;
- ``B{n},{k}``  rank-n truncation of two (n)-circuits plus a (k)-circuit
                (2n+k elements), n >= k >= 2, and its dual ``C{n+k},{k}``;
- ``D{n}``      free extension of (double circuit + coloop) (2n elements,
                rank n), n >= 4, and its dual ``E{n}``;
- ``W3`` / ``Whirl3``  the rank-3 wheel (triangles of the complete graph on
                four vertices) and its rim relaxation;
- ``R3`` / ``R4``  a 7-element dual pair built by parallel-extending the
                6-element rank-4 matroid with two 4-element
                circuit-hyperplanes at a shared element.

Helper families ``P{n}`` (truncated direct sum of two circuits) and
``Pprime{n}`` (truncated parallel connection of two circuits) are exposed
for construction and nestedness tests but are not excluded minors.
"""

from __future__ import annotations

import itertools
import re
from dataclasses import dataclass
from functools import lru_cache

from . import lpm
from .kernel import (
    GroundTooLarge,
    Matroid,
    canonical_form,
    contract,
    delete,
    direct_sum,
    dual,
    free_extension,
    mask_of,
    parallel_connection,
    relax,
    truncate,
    uniform,
)


@dataclass(frozen=True)
class CatalogEntry:
    family: str
    params: tuple[int, ...]
    matroid: Matroid
    name: str


def p_n(n: int) -> Matroid:
    """Rank-n truncation of the direct sum of two n-element circuits."""
    if n < 2:
        raise ValueError(f"P_n needs n >= 2, got {n}")
    circ = uniform(n - 1, n)
    return truncate(direct_sum(circ, circ), n)


def p_prime_n(n: int) -> Matroid:
    """Rank-n truncation of two n-element circuits glued at a point."""
    if n < 3:
        raise ValueError(f"P'_n needs n >= 3, got {n}")
    circ = uniform(n - 1, n)
    return truncate(parallel_connection(circ, n - 1, circ, 0), n)


def a_n(n: int) -> Matroid:
    if n < 3:
        raise ValueError(f"A_n needs n >= 3, got {n}")
    return free_extension(p_prime_n(n))


def b_nk(n: int, k: int) -> Matroid:
    if not n >= k >= 2:
        raise ValueError(f"B needs n >= k >= 2, got ({n},{k})")
    return truncate(
        direct_sum(direct_sum(uniform(n - 1, n), uniform(n - 1, n)), uniform(k - 1, k)),
        n,
    )


def c_nk(n: int, k: int) -> Matroid:
    if not n >= k >= 2:
        raise ValueError(f"C needs n >= k >= 2, got ({n},{k})")
    return dual(b_nk(n, k))


def d_n(n: int) -> Matroid:
    if n < 4:
        raise ValueError(f"D_n needs n >= 4, got {n}")
    return free_extension(direct_sum(p_n(n - 1), uniform(1, 1)))


def e_n(n: int) -> Matroid:
    if n < 4:
        raise ValueError(f"E_n needs n >= 4, got {n}")
    return dual(d_n(n))


def wheel3() -> Matroid:
    """Rank-3 wheel: 3-element circuits are the triangles of K4."""
    triangles = [(0, 1, 2), (0, 3, 4), (1, 4, 5), (2, 3, 5)]
    tri_masks = {mask_of(t) for t in triangles}
    masks = [
        mask_of(c)
        for c in itertools.combinations(range(6), 3)
        if mask_of(c) not in tri_masks
    ]
    return Matroid._from_masks(6, masks)


def whirl3() -> Matroid:
    return relax(wheel3(), (0, 1, 2))


def r4() -> Matroid:
    """Parallel-extend, at a shared element, the 6-element rank-4 matroid
    whose circuit-hyperplanes are {0,1,2,3} and {2,3,4,5}."""
    blocked = {mask_of((0, 1, 2, 3)), mask_of((2, 3, 4, 5))}
    masks = [
        mask_of(c)
        for c in itertools.combinations(range(6), 4)
        if mask_of(c) not in blocked
    ]
    core = Matroid._from_masks(6, masks)
    return parallel_connection(core, 2, uniform(1, 2), 0)


def r3() -> Matroid:
    return dual(r4())


_BUILDERS = {
    "A": (a_n, 1),
    "B": (b_nk, 2),
    "C": (None, 2),  # special-cased: name carries (n+k, k)
    "D": (d_n, 1),
    "E": (e_n, 1),
    "P": (p_n, 1),
    "Pprime": (p_prime_n, 1),
}

_FIXED = {
    "W3": wheel3,
    "Whirl3": whirl3,
    "R3": r3,
    "R4": r4,
}

_NAME_RE = re.compile(r"^(A|B|C|D|E|Pprime|P)(\d+)(?:,(\d+))?$")


def build_by_name(name: str) -> Matroid:
    """Construct a catalog matroid from its display name (e.g. ``B3,2``)."""
    if name in _FIXED:
        return _FIXED[name]()
    m = _NAME_RE.match(name)
    if m is None:
        raise ValueError(f"unknown family name {name!r}")
    fam, p1, p2 = m.group(1), int(m.group(2)), m.group(3)
    if fam == "C":
        if p2 is None:
            raise ValueError("C names look like C{n+k},{k}")
        k = int(p2)
        return c_nk(p1 - k, k)
    builder, arity = _BUILDERS[fam]
    if arity == 2:
        if p2 is None:
            raise ValueError(f"{fam} names carry two parameters")
        return builder(p1, int(p2))
    if p2 is not None:
        raise ValueError(f"{fam} names carry one parameter")
    return builder(p1)


def family_names() -> list[str]:
    return list(_FIXED) + list(_BUILDERS)


def catalog_up_to(m: int) -> list[CatalogEntry]:
    """All excluded-minor family members with at most m elements,
    deduplicated up to isomorphism and sorted by (size, name)."""
    if m < 6:
        raise ValueError(f"the smallest excluded minor has 6 elements, got m={m}")
    return list(_catalog_up_to(m))


@lru_cache(maxsize=None)
def _catalog_up_to(m: int) -> tuple[CatalogEntry, ...]:
    entries: list[CatalogEntry] = []
    for n in range(3, m // 2 + 1):
        entries.append(CatalogEntry("A", (n,), a_n(n), f"A{n}"))
    for n in range(2, m):
        for k in range(2, n + 1):
            if 2 * n + k > m:
                continue
            entries.append(CatalogEntry("B", (n, k), b_nk(n, k), f"B{n},{k}"))
            entries.append(
                CatalogEntry("C", (n, k), c_nk(n, k), f"C{n + k},{k}")
            )
    for n in range(4, m // 2 + 1):
        entries.append(CatalogEntry("D", (n,), d_n(n), f"D{n}"))
        entries.append(CatalogEntry("E", (n,), e_n(n), f"E{n}"))
    entries.append(CatalogEntry("W3", (), wheel3(), "W3"))
    entries.append(CatalogEntry("Whirl3", (), whirl3(), "Whirl3"))
    if m >= 7:
        entries.append(CatalogEntry("R3", (), r3(), "R3"))
        entries.append(CatalogEntry("R4", (), r4(), "R4"))
    seen: set[bytes] = set()
    out = []
    for entry in sorted(entries, key=lambda e: (e.matroid.n, e.name)):
        key = canonical_form(entry.matroid)
        if key in seen:
            continue
        seen.add(key)
        out.append(entry)
    return tuple(out)


@dataclass(frozen=True)
class ExclusionReport:
    """verify_excluded_minor evidence: the matroid itself must be outside
    the class while every single-element deletion and contraction is inside."""

    name: str
    outside_class: bool
    per_element: tuple[tuple[int, bool, bool], ...]  # (e, delete ok, contract ok)

    @property
    def passed(self) -> bool:
        return self.outside_class and all(
            d and c for _, d, c in self.per_element
        )


def verify_excluded_minor(
    M: Matroid, max_n: int = 9, name: str = "?"
) -> ExclusionReport:
    """Oracle check of minor-minimality at desk scale."""
    if M.n > max_n:
        raise GroundTooLarge(f"oracle capped at {max_n} elements, got {M.n}")
    outside = lpm.find_path_order(M, max_n=max_n) is None
    rows = []
    for e in range(M.n):
        del_ok = lpm.find_path_order(delete(M, (e,)), max_n=max_n) is not None
        con_ok = lpm.find_path_order(contract(M, (e,)), max_n=max_n) is not None
        rows.append((e, del_ok, con_ok))
    return ExclusionReport(name, outside, tuple(rows))
