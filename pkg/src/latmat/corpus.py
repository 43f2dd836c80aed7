"""Deterministic, seedable test-corpus generation.

All randomness flows from one SplitMix64 stream (documented below), so a
corpus spec reproduces byte-identically across runs and is cheap to
re-implement elsewhere.  Draw protocols, in stream order:

- ``random-transversal``: n = randint(3, max_n); r = randint(1, max(1,
  2n//3)); r set masks each drawn as ``next_u64() & (2^n - 1)`` rerolled
  while zero; the matroid is the transversal matroid of the system, with
  independence decided by augmenting-path matching (deliberately not the
  interval realizer).
- ``random-sparse-paving``: n = randint(3, max_n); r = randint(2, n-1);
  t = randint(1, n) candidate circuit-hyperplanes, each drawn as r distinct
  ``randrange(n)`` values, kept when it meets every kept one in at most r-2
  elements; bases are all other r-subsets (never empty: at r = n-1 at most
  one candidate survives, below that the candidates cannot exhaust the
  r-subsets).
- ``catalog-minors``: every delete/contract minor of every excluded-minor
  catalog member with at most min(8, max_n) elements (no stream use).
- ``lpm-random``: n = randint(2, max_n); r = randint(1, n); lower and upper
  endpoint sequences are drawn as independent r-subsets (r distinct
  ``randrange(n)`` values each, sorted) and redrawn together until they
  interlace (a_i <= b_i for all i), i.e. rejection sampling uniform over the
  presentations with these (n, r); the matroid is the realized presentation.
- ``duals-closure``: appends the dual of everything generated so far.

Output is deduplicated by canonical form, keeping first occurrences in
generation order.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional

from . import catalog, lpm
from .kernel import (
    Matroid,
    MatroidError,
    _bits,
    _minor_masks,
    canonical_form,
    dual,
    mask_of,
)

GENERATORS = (
    "random-transversal",
    "random-sparse-paving",
    "catalog-minors",
    "lpm-random",
    "duals-closure",
)

_RANDOM_GENERATORS = {"random-transversal", "random-sparse-paving", "lpm-random"}


class SplitMix64:
    """SplitMix64 (Steele-Lea-Flood): 64-bit state advanced by the golden
    gamma, output finalized with two xor-shift multiplies."""

    _MASK = (1 << 64) - 1

    def __init__(self, seed: int):
        self.state = seed & self._MASK

    def next_u64(self) -> int:
        self.state = (self.state + 0x9E3779B97F4A7C15) & self._MASK
        z = self.state
        z = ((z ^ (z >> 30)) * 0xBF58476D1CE4E5B9) & self._MASK
        z = ((z ^ (z >> 27)) * 0x94D049BB133111EB) & self._MASK
        return z ^ (z >> 31)

    def randrange(self, n: int) -> int:
        """Unbiased draw from 0..n-1 by rejection."""
        if n <= 0:
            raise ValueError("randrange needs n >= 1")
        bound = (1 << 64) - ((1 << 64) % n)
        while True:
            r = self.next_u64()
            if r < bound:
                return r % n

    def randint(self, a: int, b: int) -> int:
        return a + self.randrange(b - a + 1)


@dataclass(frozen=True)
class CorpusSpec:
    generators: tuple[str, ...]
    count: int = 100
    max_n: int = 8
    seed: Optional[int] = None

    def __post_init__(self):
        for g in self.generators:
            if g not in GENERATORS:
                raise MatroidError(f"unknown corpus generator {g!r}")
        if self.needs_seed and self.seed is None:
            raise MatroidError(
                "randomized corpus generators require an explicit seed"
            )

    @property
    def needs_seed(self) -> bool:
        return any(g in _RANDOM_GENERATORS for g in self.generators)

    @property
    def label(self) -> str:
        parts = list(self.generators)
        parts.append(f"count={self.count}")
        parts.append(f"max-n={self.max_n}")
        if self.seed is not None:
            parts.append(f"seed={self.seed}")
        return ",".join(parts)


def parse_corpus_spec(
    text: str,
    count: int = 100,
    max_n: int = 8,
    seed: Optional[int] = None,
) -> CorpusSpec:
    """Parse the comma mini-language: generator names plus ``count=``,
    ``max-n=``, ``seed=`` overrides."""
    gens = []
    for token in text.split(","):
        token = token.strip()
        if not token:
            continue
        if "=" in token:
            key, value = token.split("=", 1)
            key = key.strip()
            if key == "count":
                count = int(value)
            elif key == "max-n":
                max_n = int(value)
            elif key == "seed":
                seed = int(value)
            else:
                raise MatroidError(f"unknown corpus key {key!r}")
        else:
            gens.append(token)
    return CorpusSpec(tuple(gens), count=count, max_n=max_n, seed=seed)


# ---------------------------------------------------------------------------
# transversal matroids by matching


def _matching_rank(sets: list[int], xmask: int) -> int:
    """Maximum matching of elements in xmask against the set system."""
    owner: dict[int, int] = {}  # set index -> element

    def augment(e: int, visited: set[int]) -> bool:
        for i, s in enumerate(sets):
            if (s >> e) & 1 and i not in visited:
                visited.add(i)
                if i not in owner or augment(owner[i], visited):
                    owner[i] = e
                    return True
        return False

    size = 0
    for e in _bits(xmask):
        if augment(e, set()):
            size += 1
    return size


def transversal_matroid(n: int, sets: list[int]) -> Matroid:
    """Partial transversals of a set system, independence via matchings."""
    import itertools

    full = (1 << n) - 1
    r = _matching_rank(sets, full)
    masks = [
        mask_of(c)
        for c in itertools.combinations(range(n), r)
        if _matching_rank(sets, mask_of(c)) == r
    ]
    return Matroid._from_masks(n, masks)


# ---------------------------------------------------------------------------
# individual generators


def _gen_transversal(rng: SplitMix64, count: int, max_n: int):
    out = []
    for _ in range(count):
        n = rng.randint(3, max_n)
        r = rng.randint(1, max(1, (2 * n) // 3))
        sets = []
        for _ in range(r):
            m = 0
            while m == 0:
                m = rng.next_u64() & ((1 << n) - 1)
            sets.append(m)
        out.append(transversal_matroid(n, sets))
    return out


def _distinct_subset(rng: SplitMix64, n: int, r: int) -> int:
    got = 0
    while got.bit_count() < r:
        got |= 1 << rng.randrange(n)
    return got


def _gen_sparse_paving(rng: SplitMix64, count: int, max_n: int):
    import itertools

    out = []
    for _ in range(count):
        n = rng.randint(3, max_n)
        r = rng.randint(2, n - 1)
        chs: list[int] = []
        for _ in range(rng.randint(1, n)):
            cand = _distinct_subset(rng, n, r)
            if all((cand & c).bit_count() <= r - 2 for c in chs):
                chs.append(cand)
        blocked = set(chs)
        masks = [
            mask_of(c)
            for c in itertools.combinations(range(n), r)
            if mask_of(c) not in blocked
        ]
        out.append(Matroid._from_masks(n, masks))
    return out


def _gen_catalog_minors(max_n: int):
    out = []
    seen: set[tuple[int, tuple[int, ...]]] = set()
    for entry in catalog.catalog_up_to(8):
        M = entry.matroid
        for removed in range(1 << M.n):
            sub = removed
            while True:
                cmask = sub
                dmask = removed ^ cmask
                new_n, masks = _minor_masks(M, dmask, cmask)
                if new_n <= max_n:
                    key = (new_n, masks)
                    if key not in seen:
                        seen.add(key)
                        out.append(Matroid._from_masks(new_n, masks))
                if sub == 0:
                    break
                sub = (sub - 1) & removed
    return out


def _gen_lpm_random(rng: SplitMix64, count: int, max_n: int):
    out = []
    for _ in range(count):
        n = rng.randint(2, max_n)
        r = rng.randint(1, n)
        while True:
            a = sorted(_bits(_distinct_subset(rng, n, r)))
            b = sorted(_bits(_distinct_subset(rng, n, r)))
            if all(x <= y for x, y in zip(a, b)):
                break
        pres = lpm.IntervalPresentation(n, tuple(zip(a, b)))
        out.append(lpm.realize(pres))
    return out


# ---------------------------------------------------------------------------
# driver


def generate_tagged(spec: CorpusSpec) -> list[tuple[str, Matroid]]:
    """(source, matroid) pairs, deduplicated by canonical form in order."""
    rng = SplitMix64(spec.seed if spec.seed is not None else 0)
    raw: list[tuple[str, Matroid]] = []
    for g in spec.generators:
        if g == "random-transversal":
            raw.extend(
                ("random-transversal", M)
                for M in _gen_transversal(rng, spec.count, spec.max_n)
            )
        elif g == "random-sparse-paving":
            raw.extend(
                ("random-sparse-paving", M)
                for M in _gen_sparse_paving(rng, spec.count, spec.max_n)
            )
        elif g == "catalog-minors":
            raw.extend(
                ("catalog-minors", M) for M in _gen_catalog_minors(spec.max_n)
            )
        elif g == "lpm-random":
            raw.extend(
                ("lpm-random", M)
                for M in _gen_lpm_random(rng, spec.count, spec.max_n)
            )
        elif g == "duals-closure":
            raw.extend(("duals-closure", dual(M)) for _, M in list(raw))
    seen: set[bytes] = set()
    out = []
    for source, M in raw:
        key = canonical_form(M)
        if key in seen:
            continue
        seen.add(key)
        out.append((source, M))
    return out


def generate(spec: CorpusSpec) -> list[Matroid]:
    """Deduplicated corpus; same spec always returns the same list."""
    return [M for _, M in generate_tagged(spec)]
