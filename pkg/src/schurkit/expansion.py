"""Schur expansions of skew Schur functions.

Two independent routes are provided: the Littlewood-Richardson rule for any
skew shape (:func:`lr_expand`) and the descent-set rule for ribbons
(:func:`ribbon_expand`).  Coefficients are kept within signed 64-bit range;
anything larger raises :class:`OverflowError`.
"""
from __future__ import annotations

import os
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from typing import Iterable, Mapping

from .shapes import (
    Partition,
    SkewShape,
    as_composition,
    as_partition,
    contains,
    descent_positions,
    enumerate_partitions,
    transpose,
)
from .tableaux import enumerate_lr_fillings, enumerate_syt_with_descents

MAX_COEFF = 2**63 - 1


def _checked(value: int) -> int:
    if not -MAX_COEFF - 1 <= value <= MAX_COEFF:
        raise OverflowError(f"coefficient {value} exceeds 64-bit range")
    return value


@dataclass(frozen=True)
class SchurExpansion:
    """A finite Schur-positive combination sum c_lambda s_lambda, all lambda of size `degree`.

    `terms` holds (partition, coefficient) pairs with coefficient >= 1, sorted
    by partition in reverse-lexicographic order, so equal expansions compare
    and hash equal.
    """

    degree: int
    terms: tuple[tuple[Partition, int], ...] = ()

    def __post_init__(self) -> None:
        for lam, c in self.terms:
            if sum(lam) != self.degree:
                raise ValueError(f"{lam} has size {sum(lam)}, expected {self.degree}")
            if c < 1:
                raise ValueError(f"coefficient of {lam} must be positive, got {c}")
            _checked(c)

    @classmethod
    def from_dict(cls, coeffs: Mapping[Iterable[int], int], degree: int | None = None) -> SchurExpansion:
        clean: dict[Partition, int] = {}
        for lam, c in coeffs.items():
            lam = as_partition(lam)
            clean[lam] = _checked(clean.get(lam, 0) + c)
        clean = {lam: c for lam, c in clean.items() if c != 0}
        if degree is None:
            if not clean:
                raise ValueError("degree is required for the zero expansion")
            degree = sum(next(iter(clean)))
        return cls(degree, tuple(sorted(clean.items(), reverse=True)))

    @classmethod
    def schur(cls, lam: Iterable[int]) -> SchurExpansion:
        lam = as_partition(lam)
        return cls(sum(lam), ((lam, 1),))

    def as_dict(self) -> dict[Partition, int]:
        return dict(self.terms)

    def coeff(self, lam: Iterable[int]) -> int:
        return self.as_dict().get(as_partition(lam), 0)

    def support(self) -> frozenset[Partition]:
        return frozenset(lam for lam, _ in self.terms)

    def total(self) -> int:
        return sum(c for _, c in self.terms)

    def __add__(self, other: SchurExpansion) -> SchurExpansion:
        if self.degree != other.degree:
            raise ValueError("cannot add expansions of different degree")
        out = self.as_dict()
        for lam, c in other.terms:
            out[lam] = _checked(out.get(lam, 0) + c)
        return SchurExpansion.from_dict(out, self.degree)

    def __mul__(self, other: SchurExpansion) -> SchurExpansion:
        return multiply(self, other)

    def dominates(self, other: SchurExpansion) -> bool:
        """True iff self - other is Schur-positive (coefficientwise >=)."""
        if self.degree != other.degree:
            return False
        mine = self.as_dict()
        return all(mine.get(lam, 0) >= c for lam, c in other.terms)

    def to_json(self) -> dict:
        return {
            "degree": self.degree,
            "terms": [{"partition": list(lam), "coeff": c} for lam, c in self.terms],
        }

    @classmethod
    def from_json(cls, data: dict) -> SchurExpansion:
        return cls.from_dict({tuple(t["partition"]): t["coeff"] for t in data["terms"]}, data["degree"])

    def __str__(self) -> str:
        if not self.terms:
            return "0"
        parts = []
        for lam, c in self.terms:
            name = "s_" + (",".join(map(str, lam)) if lam else "()")
            parts.append(name if c == 1 else f"{c}{name}")
        return " + ".join(parts)


# Keyed by basic skew shape.  Plain dict reads and writes are atomic under the
# GIL and every value is deterministic, so concurrent fills are harmless.
_LR_MEMO: dict[SkewShape, SchurExpansion] = {}


def _lr_compute(a: SkewShape) -> SchurExpansion:
    coeffs: dict[Partition, int] = {}
    for t in enumerate_lr_fillings(a):
        nu = t.content()
        coeffs[nu] = _checked(coeffs.get(nu, 0) + 1)
    return SchurExpansion.from_dict(coeffs, a.size)


def lr_expand(a: SkewShape) -> SchurExpansion:
    """Schur expansion of s_A by counting LR-fillings of A by content."""
    hit = _LR_MEMO.get(a)
    if hit is None:
        hit = _LR_MEMO[a] = _lr_compute(a)
    return hit


def default_jobs() -> int:
    try:
        return max(1, int(os.environ.get("SCHURKIT_JOBS", "1")))
    except ValueError:
        return 1


def expand_many(shapes: Iterable[SkewShape], jobs: int | None = None) -> list[SchurExpansion]:
    """lr_expand over many shapes, optionally across worker processes."""
    shapes = list(shapes)
    jobs = default_jobs() if jobs is None else jobs
    todo = [a for a in dict.fromkeys(shapes) if a not in _LR_MEMO]
    if jobs > 1 and len(todo) > 1:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            for a, e in zip(todo, pool.map(_lr_compute, todo, chunksize=16)):
                _LR_MEMO[a] = e
    return [lr_expand(a) for a in shapes]


def clear_memo() -> None:
    _LR_MEMO.clear()
    _RIBBON_MEMO.clear()


_RIBBON_MEMO: dict[tuple[int, ...], SchurExpansion] = {}


def ribbon_expand(alpha: Iterable[int]) -> SchurExpansion:
    """Expansion of the ribbon Schur function r_alpha by counting SYT with descent set S(alpha)."""
    alpha = as_composition(alpha)
    hit = _RIBBON_MEMO.get(alpha)
    if hit is not None:
        return hit
    n = sum(alpha)
    descents = descent_positions(alpha)
    coeffs = {}
    for lam in enumerate_partitions(n):
        count = len(enumerate_syt_with_descents(lam, descents))
        if count:
            coeffs[lam] = _checked(count)
    hit = _RIBBON_MEMO[alpha] = SchurExpansion.from_dict(coeffs, n)
    return hit


def support_of(a: SkewShape) -> frozenset[Partition]:
    return lr_expand(a).support()


def lr_coefficient(nu: Iterable[int], lam: Iterable[int], mu: Iterable[int]) -> int:
    """c^nu_{mu, lam}: the number of LR-fillings of nu/mu with content lam.  Degenerate input gives 0."""
    nu, lam, mu = as_partition(nu), as_partition(lam), as_partition(mu)
    if not contains(nu, mu) or sum(lam) + sum(mu) != sum(nu):
        return 0
    if sum(nu) == sum(mu):
        return 1 if not lam else 0
    return lr_expand(SkewShape.make(nu, mu)).coeff(lam)


def _schur_product(lam: Partition, mu: Partition) -> SchurExpansion:
    if not lam:
        return SchurExpansion.schur(mu)
    if not mu:
        return SchurExpansion.schur(lam)
    # s_lam * s_mu is the skew Schur function of lam placed north-east of mu
    width = mu[0]
    outer = tuple(width + x for x in lam) + mu
    inner = (width,) * len(lam)
    return lr_expand(SkewShape(outer, inner))


def multiply(f: SchurExpansion, g: SchurExpansion) -> SchurExpansion:
    out: dict[Partition, int] = {}
    for lam, a in f.terms:
        for mu, b in g.terms:
            ab = _checked(a * b)
            for nu, c in _schur_product(lam, mu).terms:
                out[nu] = _checked(out.get(nu, 0) + _checked(ab * c))
    return SchurExpansion.from_dict(out, f.degree + g.degree)


def omega(f: SchurExpansion) -> SchurExpansion:
    """Apply s_lambda -> s_{lambda^t} termwise."""
    return SchurExpansion.from_dict({transpose(lam): c for lam, c in f.terms}, f.degree)


def diff_schur_positive(a: SkewShape, b: SkewShape) -> bool:
    """True iff s_A - s_B is Schur-positive.  Shapes of different size are never related."""
    if a.size != b.size:
        return False
    return lr_expand(a).dominates(lr_expand(b))


def support_contained(b: SkewShape, a: SkewShape) -> bool:
    """True iff supp(B) is a subset of supp(A)."""
    if a.size != b.size:
        return False
    return support_of(b) <= support_of(a)
