"""Semistandard and standard fillings: LR-fillings and SYT with given descents."""
from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence

from .shapes import Partition, SkewShape, as_partition, transpose_skew


@dataclass(frozen=True)
class Filling:
    """Entries of a skew shape, one tuple per row listing that row's boxes left to right."""

    shape: SkewShape
    rows: tuple[tuple[int, ...], ...]

    def __post_init__(self) -> None:
        rows = tuple(tuple(int(x) for x in r) for r in self.rows)
        object.__setattr__(self, "rows", rows)
        if tuple(map(len, rows)) != self.shape.row_lengths():
            raise ValueError(f"row lengths {tuple(map(len, rows))} do not fit shape {self.shape}")

    @classmethod
    def from_grid(cls, shape: SkewShape, grid: dict[tuple[int, int], int]) -> Filling:
        rows = []
        for i in range(shape.n_rows):
            start, end = shape.row_span(i)
            rows.append(tuple(grid[i, j] for j in range(start, end)))
        return cls(shape, tuple(rows))

    @classmethod
    def straight(cls, rows: Sequence[Sequence[int]]) -> Filling:
        """Filling of a straight shape given its rows."""
        lam = as_partition(len(r) for r in rows)
        return cls(SkewShape(lam), tuple(tuple(r) for r in rows))

    @property
    def size(self) -> int:
        return self.shape.size

    def items(self) -> Iterable[tuple[tuple[int, int], int]]:
        for i, row in enumerate(self.rows):
            start = self.shape.row_span(i)[0]
            for k, v in enumerate(row):
                yield (i, start + k), v

    def grid(self) -> dict[tuple[int, int], int]:
        return dict(self.items())

    def positions(self) -> dict[int, tuple[int, int]]:
        """Value -> cell.  Only meaningful for standard fillings."""
        return {v: cell for cell, v in self.items()}

    def content(self) -> tuple[int, ...]:
        counts: dict[int, int] = {}
        for _, v in self.items():
            counts[v] = counts.get(v, 0) + 1
        top = max(counts)
        return tuple(counts.get(k, 0) for k in range(1, top + 1))

    def is_ssyt(self) -> bool:
        g = self.grid()
        for (i, j), v in g.items():
            if v < 1:
                return False
            if (i, j + 1) in g and g[i, j + 1] < v:
                return False
            if (i + 1, j) in g and g[i + 1, j] <= v:
                return False
        return True

    def is_standard(self) -> bool:
        values = sorted(v for _, v in self.items())
        return values == list(range(1, self.size + 1)) and self.is_ssyt()

    def row_major(self) -> tuple[int, ...]:
        return tuple(v for row in self.rows for v in row)

    def transpose(self) -> Filling:
        g = {(j, i): v for (i, j), v in self.items()}
        return Filling.from_grid(transpose_skew(self.shape), g)

    def to_json(self) -> dict:
        out = []
        for i, row in enumerate(self.rows):
            start = self.shape.row_span(i)[0]
            out.append([None] * start + list(row))
        return {"shape": self.shape.to_json(), "rows": out}

    def __str__(self) -> str:
        width = len(str(max(v for _, v in self.items())))
        lines = []
        for i, row in enumerate(self.rows):
            start = self.shape.row_span(i)[0]
            cells = ["." * width] * start + [str(v).rjust(width) for v in row]
            lines.append(" ".join(cells))
        return "\n".join(lines)


def reverse_reading_word(t: Filling) -> tuple[int, ...]:
    """Entries read right to left along rows, top row first."""
    return tuple(v for row in t.rows for v in reversed(row))


def is_lattice(word: Iterable[int]) -> bool:
    counts: dict[int, int] = {}
    for v in word:
        c = counts.get(v, 0) + 1
        if v > 1 and c > counts.get(v - 1, 0):
            return False
        counts[v] = c
    return True


def enumerate_lr_fillings(a: SkewShape) -> list[Filling]:
    """All LR-fillings of `a`, ordered lexicographically by row-major entries.

    Boxes are filled in reverse reading order so the lattice condition is a
    prefix test checked as each letter is placed.
    """
    order = [(i, j) for i in range(a.n_rows) for j in reversed(range(*a.row_span(i)))]
    spans = [a.row_span(i) for i in range(a.n_rows)]
    grid: dict[tuple[int, int], int] = {}
    counts = [0] * (a.n_rows + 2)
    found = []

    def place(k: int) -> None:
        if k == len(order):
            t = Filling.from_grid(a, grid)
            found.append(t)
            return
        i, j = order[k]
        lo = 1
        if i > 0 and spans[i - 1][0] <= j < spans[i - 1][1]:
            lo = grid[i - 1, j] + 1
        # row i (0-based) of an LR-filling only holds letters <= i + 1
        hi = i + 1
        if j + 1 < spans[i][1]:
            hi = min(hi, grid[i, j + 1])
        for v in range(lo, hi + 1):
            if v > 1 and counts[v] >= counts[v - 1]:
                continue
            grid[i, j] = v
            counts[v] += 1
            place(k + 1)
            counts[v] -= 1
        grid.pop((i, j), None)

    place(0)
    found.sort(key=Filling.row_major)
    for t in found:
        assert t.is_ssyt() and is_lattice(reverse_reading_word(t)), t
    return found


def descent_set(t: Filling) -> frozenset[int]:
    """Entries i whose successor i+1 sits in a strictly lower row."""
    if not t.is_standard():
        raise ValueError("descent set is defined for standard fillings only")
    pos = t.positions()
    return frozenset(i for i in range(1, t.size) if pos[i + 1][0] > pos[i][0])


def enumerate_syt_with_descents(shape: Sequence[int], descents: Iterable[int] | None = None) -> list[Filling]:
    """SYT of a straight shape, optionally restricted to an exact descent set.

    Values 1..N are placed in increasing order at addable corners; whether
    i is a descent is settled the moment i+1 is placed.
    """
    lam: Partition = as_partition(shape)
    n = sum(lam)
    if n == 0:
        raise ValueError("empty shape")
    want = None if descents is None else frozenset(descents)
    if want is not None and any(not 1 <= d < n for d in want):
        return []
    filled = [0] * len(lam)
    rows: list[list[int]] = [[] for _ in lam]
    found = []

    def place(v: int, prev_row: int) -> None:
        if v > n:
            found.append(Filling.straight(rows))
            return
        for i in range(len(lam)):
            if filled[i] == lam[i] or (i > 0 and filled[i - 1] <= filled[i]):
                continue
            if want is not None and v > 1:
                if (v - 1 in want) != (i > prev_row):
                    continue
            filled[i] += 1
            rows[i].append(v)
            place(v + 1, i)
            rows[i].pop()
            filled[i] -= 1

    place(1, -1)
    found.sort(key=Filling.row_major)
    if want is not None:
        for t in found:
            assert descent_set(t) == want, t
    return found
