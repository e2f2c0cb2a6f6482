"""Composition profiles: per-position value counts for words and tuples.

A fold-g profile counts, for each cell a in F_q^g, the positions i where
the g words take the joint value a.  Cells are ordered lexicographically in
element indices, so cell (a_1, ..., a_g) sits at

    cell_index = a_1 * q^(g-1) + a_2 * q^(g-2) + ... + a_g,

and a profile is a dense tuple of q^g counts in that order.  The same
tuples index enumerator polynomial variables and census keys.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass

from .capacity import DEFAULT_BUDGET, check_budget
from .codes import LinearCode
from .field import FieldSpec


def all_cells(q: int, fold: int) -> list[tuple[int, ...]]:
    """Cells of F_q^fold as index tuples, canonical (lexicographic) order."""
    return list(itertools.product(range(q), repeat=fold))


def cell_index(q: int, cell) -> int:
    idx = 0
    for a in cell:
        idx = idx * q + a
    return idx


def project_tuple(a: tuple, j: int) -> tuple:
    """Delete coordinate j (0-based) from the tuple a."""
    if not (0 <= j < len(a)):
        raise IndexError(f"coordinate {j} out of range for a {len(a)}-tuple")
    return a[:j] + a[j + 1 :]


def prepend(z, b: tuple) -> tuple:
    """Prefix the value z to the tuple b."""
    return (z,) + tuple(b)


@dataclass(frozen=True)
class CompositionProfile:
    q: int
    fold: int
    counts: tuple[int, ...]

    def __post_init__(self):
        if len(self.counts) != self.q**self.fold:
            raise ValueError(
                f"profile needs {self.q ** self.fold} cells, got {len(self.counts)}"
            )
        if any(c < 0 for c in self.counts):
            raise ValueError("cell counts must be non-negative")

    @property
    def n(self) -> int:
        return sum(self.counts)

    def marginal(self, j: int) -> CompositionProfile:
        """Fold-1 profile of coordinate j (0-based)."""
        if not (0 <= j < self.fold):
            raise IndexError(f"coordinate {j} out of range for fold {self.fold}")
        out = [0] * self.q
        div = self.q ** (self.fold - 1 - j)
        for idx, c in enumerate(self.counts):
            out[(idx // div) % self.q] += c
        return CompositionProfile(self.q, 1, tuple(out))

    def drop_first(self) -> CompositionProfile:
        """Fold-(g-1) profile obtained by summing out the first coordinate."""
        if self.fold < 2:
            raise ValueError("drop_first needs fold >= 2")
        size = self.q ** (self.fold - 1)
        out = [0] * size
        for idx, c in enumerate(self.counts):
            out[idx % size] += c
        return CompositionProfile(self.q, self.fold - 1, tuple(out))


def composition(spec: FieldSpec, word) -> CompositionProfile:
    counts = [0] * spec.q
    for e in word:
        counts[e] += 1
    return CompositionProfile(spec.q, 1, tuple(counts))


def bicomposition(spec: FieldSpec, u, v) -> CompositionProfile:
    if len(u) != len(v):
        raise ValueError(f"length mismatch: {len(u)} vs {len(v)}")
    q = spec.q
    counts = [0] * (q * q)
    for a, b in zip(u, v):
        counts[a * q + b] += 1
    return CompositionProfile(q, 2, tuple(counts))


def gcomposition(spec: FieldSpec, words) -> CompositionProfile:
    words = list(words)
    if not words:
        raise ValueError("need at least one word")
    n = len(words[0])
    if any(len(w) != n for w in words):
        raise ValueError("words must share one length")
    q = spec.q
    g = len(words)
    counts = [0] * (q**g)
    for i in range(n):
        idx = 0
        for w in words:
            idx = idx * q + w[i]
        counts[idx] += 1
    return CompositionProfile(q, g, tuple(counts))


def iter_compositions(total: int, cells: int):
    """All tuples of `cells` non-negative integers summing to `total`,
    in lexicographic order (stars and bars)."""
    if cells == 1:
        yield (total,)
        return
    for first in range(total + 1):
        for rest in iter_compositions(total - first, cells - 1):
            yield (first,) + rest


@dataclass
class Census:
    """Exact counts of codeword tuples per composition profile."""

    q: int
    fold: int
    n: int
    counts: dict

    def count(self, profile) -> int:
        key = profile.counts if isinstance(profile, CompositionProfile) else tuple(profile)
        return self.counts.get(key, 0)

    def total(self) -> int:
        return sum(self.counts.values())

    def b_count(self, r, s, eta) -> int:
        """Pair count refined by both marginals: the joint count when r and s
        are the marginals of eta, zero otherwise.  Fold 2 only."""
        if self.fold != 2:
            raise ValueError("b_count is defined for fold-2 censuses")
        eta_p = eta if isinstance(eta, CompositionProfile) else CompositionProfile(self.q, 2, tuple(eta))
        r_key = r.counts if isinstance(r, CompositionProfile) else tuple(r)
        s_key = s.counts if isinstance(s, CompositionProfile) else tuple(s)
        if eta_p.marginal(0).counts != r_key or eta_p.marginal(1).counts != s_key:
            return 0
        return self.counts.get(eta_p.counts, 0)


def census(codes: list[LinearCode], *, budget: int = DEFAULT_BUDGET) -> Census:
    """Joint profile census of tuples from the product of the given codes."""
    if not codes:
        raise ValueError("need at least one code")
    spec = codes[0].spec
    n = codes[0].n
    if any(c.spec != spec or c.n != n for c in codes):
        raise ValueError("codes must share field and length")
    total = 1
    for c in codes:
        total *= c.size
    check_budget(total * n, budget, "census")
    q = spec.q
    g = len(codes)
    word_lists = [c.codeword_list(budget=budget) for c in codes]
    counts: dict[tuple[int, ...], int] = {}
    ncells = q**g
    for combo in itertools.product(*word_lists):
        key = [0] * ncells
        for i in range(n):
            idx = 0
            for w in combo:
                idx = idx * q + w[i]
            key[idx] += 1
        key_t = tuple(key)
        counts[key_t] = counts.get(key_t, 0) + 1
    return Census(q, g, n, counts)
