"""Schur-positivity and support-containment posets on skew shapes with N boxes."""
from __future__ import annotations

from dataclasses import dataclass, field
from functools import cached_property
from typing import Hashable, Iterable, Literal, Sequence

import numpy as np

from .expansion import SchurExpansion, expand_many
from .shapes import (
    Partition,
    SkewShape,
    cols_of,
    component_count,
    enumerate_partitions,
    enumerate_skew_shapes,
    is_ribbon,
    rows_of,
)

Order = Literal["schur", "support"]


@dataclass(frozen=True)
class EquivalenceClass:
    """Skew shapes sharing one expansion (order "schur") or one support ("support")."""

    members: tuple[SkewShape, ...]
    expansion: SchurExpansion
    order: Order

    @property
    def representative(self) -> SkewShape:
        return self.members[0]

    @property
    def key(self) -> Hashable:
        return self.expansion if self.order == "schur" else self.expansion.support()

    @property
    def size(self) -> int:
        return self.representative.size

    # the following are class invariants: members agree on all of them
    @property
    def rows(self) -> Partition:
        return rows_of(self.representative)

    @property
    def cols(self) -> Partition:
        return cols_of(self.representative)

    @property
    def components(self) -> int:
        return component_count(self.representative)

    @property
    def connected(self) -> bool:
        return self.components == 1

    @property
    def ribbon(self) -> bool:
        return is_ribbon(self.representative)

    @property
    def label(self) -> str:
        return str(self.representative)

    def to_json(self) -> dict:
        return {"members": [m.to_json() for m in self.members], "connected": self.connected}


def group_classes(shapes: Iterable[SkewShape], order: Order, jobs: int | None = None) -> list[EquivalenceClass]:
    """Partition `shapes` into classes of equal expansion or equal support.

    Classes appear in order of their first member; members keep input order.
    """
    if order not in ("schur", "support"):
        raise ValueError(f"unknown order {order!r}")
    shapes = list(shapes)
    groups: dict[Hashable, list[SkewShape]] = {}
    first: dict[Hashable, SchurExpansion] = {}
    for a, e in zip(shapes, expand_many(shapes, jobs)):
        k = e if order == "schur" else e.support()
        groups.setdefault(k, []).append(a)
        first.setdefault(k, e)
    return [EquivalenceClass(tuple(ms), first[k], order) for k, ms in groups.items()]


def schur_classes(n: int, jobs: int | None = None) -> list[EquivalenceClass]:
    return group_classes(enumerate_skew_shapes(n), "schur", jobs)


def support_classes(n: int, jobs: int | None = None) -> list[EquivalenceClass]:
    return group_classes(enumerate_skew_shapes(n), "support", jobs)


@dataclass
class OrderedFamily:
    """A finite poset of equivalence classes.

    ``leq[i, j]`` is True when element i lies below (or equals) element j.
    """

    elements: list[EquivalenceClass]
    leq: np.ndarray
    order: Order
    n: int = field(default=0)

    def __len__(self) -> int:
        return len(self.elements)

    @cached_property
    def strict(self) -> np.ndarray:
        return self.leq & ~np.eye(len(self), dtype=bool)

    @cached_property
    def covers(self) -> np.ndarray:
        """Transitive reduction of the strict order, as a boolean matrix."""
        s = self.strict.astype(np.float32)
        two_step = (s @ s) > 0
        return self.strict & ~two_step

    def cover_pairs(self) -> list[tuple[int, int]]:
        return [(int(i), int(j)) for i, j in zip(*np.nonzero(self.covers))]

    def restrict(self, indices: Sequence[int]) -> OrderedFamily:
        idx = np.asarray(list(indices), dtype=int)
        return OrderedFamily([self.elements[i] for i in idx], self.leq[np.ix_(idx, idx)], self.order, self.n)

    def connected_part(self) -> OrderedFamily:
        return self.restrict([i for i, c in enumerate(self.elements) if c.connected])

    def maximal(self) -> list[int]:
        return [i for i in range(len(self)) if not self.strict[i].any()]

    def minimal(self) -> list[int]:
        return [i for i in range(len(self)) if not self.strict[:, i].any()]

    def is_graded(self) -> bool:
        """True iff every maximal chain has the same length."""
        m = len(self)
        if m == 0:
            return True
        cov = self.covers
        longest = np.zeros(m, dtype=int)
        shortest = np.zeros(m, dtype=int)
        # chains are counted upward from each element to a maximal one
        for i in self._topological_desc():
            ups = np.nonzero(cov[i])[0]
            if len(ups):
                longest[i] = 1 + longest[ups].max()
                shortest[i] = 1 + shortest[ups].min()
        bottoms = self.minimal()
        lengths = set(longest[bottoms]) | set(shortest[bottoms])
        return len(lengths) == 1

    def _topological_desc(self) -> list[int]:
        # more elements above means lower in the order; process tops first
        above = self.strict.sum(axis=1)
        return sorted(range(len(self)), key=lambda i: (above[i], i))

    def is_join_semilattice(self) -> bool:
        """True iff every pair of elements has a least upper bound."""
        m = len(self)
        leq = self.leq
        not_leq = (~leq).astype(np.float32)
        for i in range(m):
            uppers = leq[i][None, :] & leq  # row j: common upper bounds of i and j
            # k is least in row j iff k is an upper bound lying below every upper bound
            spoil = uppers.astype(np.float32) @ not_leq.T
            least = uppers & (spoil == 0)
            if not least.any(axis=1).all():
                return False
        return True

    def to_dot(self, name: str = "poset") -> str:
        lines = [f"digraph {name} {{", "  rankdir=BT;", "  node [shape=box];"]
        for i, c in enumerate(self.elements):
            lines.append(f'  n{i} [label="{c.label}"];')
        for i, j in self.cover_pairs():
            lines.append(f"  n{i} -> n{j};")
        lines.append("}")
        return "\n".join(lines) + "\n"

    def to_json(self) -> dict:
        pairs = [[int(i), int(j)] for i, j in zip(*np.nonzero(self.leq))]
        return {
            "n": self.n,
            "order": self.order,
            "classes": [c.to_json() for c in self.elements],
            "leq": pairs,
            "covers": [list(p) for p in self.cover_pairs()],
        }


def _coefficient_matrix(classes: Sequence[EquivalenceClass]) -> np.ndarray:
    if not classes:
        return np.zeros((0, 0), dtype=np.int64)
    n = classes[0].size
    index = {lam: k for k, lam in enumerate(enumerate_partitions(n))}
    v = np.zeros((len(classes), len(index)), dtype=np.int64)
    for r, c in enumerate(classes):
        for lam, coeff in c.expansion.terms:
            v[r, index[lam]] = coeff
    return v


def build_poset(classes: Sequence[EquivalenceClass], order: Order | None = None) -> OrderedFamily:
    """Compare one representative per class.

    Under "schur", B <= A iff s_A - s_B is Schur-positive; under "support",
    B <= A iff supp(B) is contained in supp(A).
    """
    classes = list(classes)
    if order is None:
        order = classes[0].order if classes else "schur"
    sizes = {c.size for c in classes}
    if len(sizes) > 1:
        raise ValueError(f"classes of mixed sizes {sorted(sizes)}")
    v = _coefficient_matrix(classes)
    if order == "support":
        v = (v > 0).astype(np.int8)
    m = len(classes)
    leq = np.zeros((m, m), dtype=bool)
    for i in range(m):
        leq[i] = (v >= v[i]).all(axis=1)
    n = sizes.pop() if sizes else 0
    return OrderedFamily(classes, leq, order, n)


def poset(n: int, order: Order, jobs: int | None = None) -> OrderedFamily:
    """P_N for order "schur", Supp_N for order "support"."""
    return build_poset(group_classes(enumerate_skew_shapes(n), order, jobs), order)


def maximal_connected(f: OrderedFamily) -> list[EquivalenceClass]:
    sub = f.connected_part()
    return [sub.elements[i] for i in sub.maximal()]
