"""Partitions, compositions, skew shapes and ribbons.

Partitions and compositions are plain tuples of positive integers.  Skew
shapes are immutable :class:`SkewShape` values kept in basic form: no empty
row and no empty column.  A disconnected shape therefore has its components
touching corner to corner, which is the one placement we enumerate.
"""
from __future__ import annotations

import operator

from dataclasses import dataclass
from functools import cached_property
from typing import Iterable, Iterator, Sequence

Partition = tuple[int, ...]
Composition = tuple[int, ...]


def as_partition(parts: Iterable[int]) -> Partition:
    """Validate and return `parts` as a partition tuple (trailing zeros dropped)."""
    p = tuple(operator.index(x) for x in parts)
    while p and p[-1] == 0:
        p = p[:-1]
    if any(x <= 0 for x in p):
        raise ValueError(f"partition parts must be positive: {p}")
    if any(p[i] < p[i + 1] for i in range(len(p) - 1)):
        raise ValueError(f"partition must be weakly decreasing: {p}")
    return p


def as_composition(parts: Iterable[int]) -> Composition:
    c = tuple(operator.index(x) for x in parts)
    if not c or any(x <= 0 for x in c):
        raise ValueError(f"composition parts must be positive and nonempty: {c}")
    return c


def transpose(p: Sequence[int]) -> Partition:
    """Conjugate partition: column lengths read left to right."""
    if not p:
        return ()
    return tuple(sum(1 for x in p if x > j) for j in range(p[0]))


def descent_positions(alpha: Sequence[int]) -> tuple[int, ...]:
    """Partial sums alpha_1, alpha_1+alpha_2, ... omitting the total."""
    out = []
    s = 0
    for part in alpha[:-1]:
        s += part
        out.append(s)
    return tuple(out)


def composition_from_descents(descents: Iterable[int], n: int) -> Composition:
    """Inverse of :func:`descent_positions` for a composition of `n`."""
    cuts = [0, *sorted(descents), n]
    return tuple(b - a for a, b in zip(cuts, cuts[1:]))


def dominance_leq(p: Sequence[int], q: Sequence[int]) -> bool:
    """True iff p is dominated by q.  Shorter partitions are padded with zeros."""
    if sum(p) != sum(q):
        raise ValueError(f"dominance compares partitions of equal size, got {tuple(p)} and {tuple(q)}")
    sp = sq = 0
    for i in range(max(len(p), len(q))):
        sp += p[i] if i < len(p) else 0
        sq += q[i] if i < len(q) else 0
        if sp > sq:
            return False
    return True


def contains(outer: Sequence[int], inner: Sequence[int]) -> bool:
    return len(inner) <= len(outer) and all(m <= l for m, l in zip(inner, outer))


@dataclass(frozen=True, order=False)
class SkewShape:
    """A basic skew shape outer/inner.

    Construct through :meth:`make` to strip empty rows and columns; the
    constructor itself rejects anything that is not already basic.
    """

    outer: Partition
    inner: Partition = ()

    def __post_init__(self) -> None:
        outer = as_partition(self.outer)
        inner = as_partition(self.inner)
        object.__setattr__(self, "outer", outer)
        object.__setattr__(self, "inner", inner)
        if not contains(outer, inner):
            raise ValueError(f"{inner} is not contained in {outer}")
        if sum(outer) == sum(inner):
            raise ValueError("empty skew shape")
        mu = self._inner_padded
        if any(outer[i] == mu[i] for i in range(len(outer))):
            raise ValueError(f"{self} has an empty row; use SkewShape.make")
        if mu[-1] != 0 or any(mu[i] > outer[i + 1] for i in range(len(outer) - 1)):
            raise ValueError(f"{self} has an empty column; use SkewShape.make")

    @classmethod
    def make(cls, outer: Iterable[int], inner: Iterable[int] = ()) -> SkewShape:
        """Build the basic form of outer/inner by deleting empty rows and columns."""
        lam = list(as_partition(outer))
        mu = list(as_partition(inner))
        if not contains(lam, mu):
            raise ValueError(f"{tuple(mu)} is not contained in {tuple(lam)}")
        mu += [0] * (len(lam) - len(mu))
        rows = [(m, l) for m, l in zip(mu, lam) if l > m]
        if not rows:
            raise ValueError("empty skew shape")
        width = rows[0][1]
        occupied = [False] * width
        for m, l in rows:
            for j in range(m, l):
                occupied[j] = True
        # new column index of each old column boundary
        shift = [0] * (width + 1)
        for j in range(width):
            shift[j + 1] = shift[j] + (1 if occupied[j] else 0)
        new_outer = tuple(shift[l] for _, l in rows)
        new_inner = tuple(shift[m] for m, _ in rows if shift[m] > 0)
        return cls(new_outer, new_inner)

    @cached_property
    def _inner_padded(self) -> tuple[int, ...]:
        return self.inner + (0,) * (len(self.outer) - len(self.inner))

    @property
    def size(self) -> int:
        return sum(self.outer) - sum(self.inner)

    @property
    def n_rows(self) -> int:
        return len(self.outer)

    @property
    def n_cols(self) -> int:
        return self.outer[0]

    @property
    def is_straight(self) -> bool:
        return not self.inner

    def row_span(self, i: int) -> tuple[int, int]:
        """Half-open column interval [start, end) of row i."""
        return self._inner_padded[i], self.outer[i]

    def row_lengths(self) -> tuple[int, ...]:
        return tuple(l - m for m, l in zip(self._inner_padded, self.outer))

    def cells(self) -> Iterator[tuple[int, int]]:
        for i, (m, l) in enumerate(zip(self._inner_padded, self.outer)):
            for j in range(m, l):
                yield i, j

    def to_json(self) -> dict:
        return {"outer": list(self.outer), "inner": list(self.inner)}

    @classmethod
    def from_json(cls, data: dict) -> SkewShape:
        if "ribbon" in data:
            return ribbon(data["ribbon"])
        return cls.make(data["outer"], data.get("inner", ()))

    def __str__(self) -> str:
        def fmt(p):
            sep = "," if any(x > 9 for x in p) else ""
            return sep.join(map(str, p))

        return fmt(self.outer) + ("/" + fmt(self.inner) if self.inner else "")

    def sort_key(self) -> tuple:
        return (self.outer, self.inner)


def transpose_skew(a: SkewShape) -> SkewShape:
    return SkewShape(transpose(a.outer), transpose(a.inner))


def rotate180(a: SkewShape) -> SkewShape:
    """Antipodal rotation inside the bounding box of `a`."""
    w = a.n_cols
    mu = a._inner_padded
    outer = tuple(w - m for m in reversed(mu))
    inner = tuple(w - l for l in reversed(a.outer))
    return SkewShape(outer, as_partition(inner))


def rows_of(a: SkewShape) -> Partition:
    return tuple(sorted(a.row_lengths(), reverse=True))


def cols_of(a: SkewShape) -> Partition:
    return rows_of(transpose_skew(a))


def overlap_partition(a: SkewShape, k: int = 2) -> tuple[int, ...]:
    """Multiset of k-row overlaps, sorted weakly decreasing, zeros kept.

    Entry i counts the columns occupied by all of rows i, ..., i+k-1.  With
    k = 1 this is rows_of(a); with k = 2 a zero entry marks a place where the
    shape falls apart into components.
    """
    if k < 1:
        raise ValueError("k must be positive")
    mu = a._inner_padded
    out = []
    for i in range(a.n_rows - k + 1):
        out.append(max(0, a.outer[i + k - 1] - mu[i]))
    return tuple(sorted(out, reverse=True))


def component_count(a: SkewShape) -> int:
    return 1 + sum(1 for x in overlap_partition(a, 2) if x == 0)


def is_connected(a: SkewShape) -> bool:
    return component_count(a) == 1


def is_ribbon(a: SkewShape) -> bool:
    return all(x == 1 for x in overlap_partition(a, 2))


def ribbon(alpha: Iterable[int]) -> SkewShape:
    """The ribbon whose row lengths, top to bottom, are `alpha`."""
    alpha = as_composition(alpha)
    starts = [0] * len(alpha)
    for i in range(len(alpha) - 2, -1, -1):
        starts[i] = starts[i + 1] + alpha[i + 1] - 1
    outer = tuple(s + r for s, r in zip(starts, alpha))
    return SkewShape(outer, as_partition(starts))


def ribbon_rows(a: SkewShape) -> Composition:
    """Row composition of a ribbon, top to bottom."""
    if not is_ribbon(a):
        raise ValueError(f"{a} is not a ribbon")
    return a.row_lengths()


def ribbon_cols(alpha: Sequence[int]) -> tuple[int, ...]:
    """Column lengths of rib(alpha), left to right."""
    return transpose_skew(ribbon(alpha)).row_lengths()


def enumerate_partitions(n: int, max_part: int | None = None) -> list[Partition]:
    """Partitions of n in reverse-lexicographic order (n = 0 gives [()])."""
    if max_part is None:
        max_part = n
    if n == 0:
        return [()]
    out = []
    for first in range(min(n, max_part), 0, -1):
        for rest in enumerate_partitions(n - first, first):
            out.append((first, *rest))
    return out


def enumerate_compositions(n: int) -> list[Composition]:
    """All 2^(n-1) compositions of n, reverse-lexicographic."""
    if n == 0:
        return [()]
    out = []
    for first in range(n, 0, -1):
        for rest in enumerate_compositions(n - first):
            out.append((first, *rest))
    return out


def enumerate_ribbons(n: int) -> list[Composition]:
    """Row compositions of all ribbons with n boxes."""
    if n < 1:
        raise ValueError("n must be positive")
    return enumerate_compositions(n)


def enumerate_skew_shapes(n: int) -> list[SkewShape]:
    """Every basic skew shape with n boxes, once each, sorted by (outer, inner) descending."""
    if n < 1:
        raise ValueError("n must be positive")
    found: list[SkewShape] = []

    # grow rows upward from the bottom one, which starts in column 0
    def grow(rows: list[tuple[int, int]], left: int) -> None:
        if left == 0:
            top_down = rows[::-1]
            found.append(SkewShape(tuple(e for _, e in top_down), as_partition(s for s, _ in top_down)))
            return
        s, e = rows[-1]
        for s2 in range(s, e + 1):
            for e2 in range(max(e, s2 + 1), s2 + left + 1):
                rows.append((s2, e2))
                grow(rows, left - (e2 - s2))
                rows.pop()

    for length in range(1, n + 1):
        grow([(0, length)], n - length)
    found.sort(key=SkewShape.sort_key, reverse=True)
    return found
