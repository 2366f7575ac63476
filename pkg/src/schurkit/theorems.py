"""Equitable ribbons, maximal supports, the SYT witness construction and conjecture checks.

Every ``verify_*`` function returns a :class:`Report`; a failed check is a
counterexample record, never an exception.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from itertools import permutations
from typing import Iterable, Sequence

from .expansion import lr_expand, ribbon_expand, support_of
from .posets import build_poset, group_classes, maximal_connected, poset
from .shapes import (
    Composition,
    Partition,
    SkewShape,
    as_composition,
    as_partition,
    cols_of,
    composition_from_descents,
    descent_positions,
    dominance_leq,
    enumerate_compositions,
    enumerate_partitions,
    enumerate_skew_shapes,
    is_connected,
    is_ribbon,
    ribbon,
    ribbon_cols,
    ribbon_rows,
    rotate180,
    rows_of,
    transpose,
)
from .tableaux import Filling, descent_set


@dataclass
class Report:
    check: str
    n: object
    passed: bool
    counterexamples: list = field(default_factory=list)
    checked: int = 0

    def to_json(self) -> dict:
        return {
            "check": self.check,
            "n": self.n,
            "pass": self.passed,
            "checked": self.checked,
            "counterexamples": self.counterexamples,
        }


def _report(check: str, n: object, bad: list, checked: int) -> Report:
    return Report(check, n, not bad, bad, checked)


# -- equitable ribbons ---------------------------------------------------------


@dataclass(frozen=True)
class EquitableProfile:
    """Rows of an equitable ribbon have length a or a+1, columns b or b+1."""

    a: int
    b: int
    l: int
    n: int


def is_equitable(alpha: Iterable[int]) -> bool:
    alpha = as_composition(alpha)
    cols = ribbon_cols(alpha)
    return max(alpha) - min(alpha) <= 1 and max(cols) - min(cols) <= 1


def equitable_profile(alpha: Iterable[int]) -> EquitableProfile:
    alpha = as_composition(alpha)
    if not is_equitable(alpha):
        raise ValueError(f"rib{alpha} is not equitable")
    return EquitableProfile(min(alpha), min(ribbon_cols(alpha)), len(alpha), sum(alpha))


def enumerate_equitable(n: int, l: int) -> list[Composition]:
    """Row compositions of all equitable ribbons with n boxes and l rows, reverse-lex."""
    if not 1 <= l <= n:
        raise ValueError(f"need 1 <= l <= n, got n={n}, l={l}")
    a, extra = divmod(n, l)
    out = set()
    for pos in permutations(range(l), extra):
        alpha = [a] * l
        for p in pos:
            alpha[p] = a + 1
        out.add(tuple(alpha))
    return sorted((x for x in out if is_equitable(x)), reverse=True)


def predicted_support(n: int, l: int) -> frozenset[Partition]:
    """Partitions of n with at most l rows and at most n - l + 1 columns."""
    if not 1 <= l <= n:
        raise ValueError(f"need 1 <= l <= n, got n={n}, l={l}")
    return frozenset(lam for lam in enumerate_partitions(n) if len(lam) <= l and lam[0] <= n - l + 1)


def dominance_interval(bottom: Partition, top: Partition) -> frozenset[Partition]:
    n = sum(bottom)
    return frozenset(
        lam for lam in enumerate_partitions(n) if dominance_leq(bottom, lam) and dominance_leq(lam, top)
    )


def has_full_support(a: SkewShape) -> bool:
    """True iff supp(A) is the whole dominance interval [rows(A), cols(A)^t]."""
    return support_of(a) == dominance_interval(rows_of(a), transpose(cols_of(a)))


# -- main theorem ----------------------------------------------------------------


def verify_theorem_support(n: int) -> Report:
    """Every equitable ribbon with n boxes has exactly the predicted support."""
    bad = []
    checked = 0
    for l in range(1, n + 1):
        want = predicted_support(n, l)
        for alpha in enumerate_equitable(n, l):
            checked += 1
            got = support_of(ribbon(alpha))
            if got != want:
                bad.append({
                    "ribbon": list(alpha),
                    "missing": sorted(map(list, want - got), reverse=True),
                    "unexpected": sorted(map(list, got - want), reverse=True),
                })
    return _report("main-support", n, bad, checked)


def verify_theorem_main(n: int, with_poset: bool = True, jobs: int | None = None) -> Report:
    """Check all three parts of the maximal-support theorem at size n.

    With ``with_poset`` the support poset is built, and its maximal connected
    classes are compared with the equitable ribbons row count by row count.
    The support prediction is always checked.
    """
    report = verify_theorem_support(n)
    bad = list(report.counterexamples)
    checked = report.checked
    if with_poset:
        maxes = maximal_connected(poset(n, "support", jobs))
        checked += len(maxes)
        if len(maxes) != n:
            bad.append({"part": "a", "maximal_count": len(maxes)})
        by_rows: dict[int, list] = {}
        for cls in maxes:
            by_rows.setdefault(len(cls.rows), []).append(cls)
        for l in range(1, n + 1):
            found = by_rows.get(l, [])
            if len(found) != 1:
                bad.append({"part": "a", "rows": l, "maximal_count": len(found)})
                continue
            want = {ribbon(alpha) for alpha in enumerate_equitable(n, l)}
            got = set(found[0].members)
            if got != want:
                bad.append({
                    "part": "b",
                    "rows": l,
                    "class": sorted(str(m) for m in got),
                    "equitable": sorted(str(m) for m in want),
                })
    return _report("main", n, bad, checked)


def verify_lemma_extreme(n: int) -> Report:
    """Support lies in [rows(A), cols(A)^t] and both endpoints have coefficient 1."""
    bad = []
    shapes = enumerate_skew_shapes(n)
    for a in shapes:
        e = lr_expand(a)
        lo, hi = rows_of(a), transpose(cols_of(a))
        outside = [lam for lam in e.support() if not (dominance_leq(lo, lam) and dominance_leq(lam, hi))]
        if outside or e.coeff(lo) != 1 or e.coeff(hi) != 1:
            bad.append({
                "shape": a.to_json(),
                "outside": [list(x) for x in sorted(outside, reverse=True)],
                "coeff_rows": e.coeff(lo),
                "coeff_cols_t": e.coeff(hi),
            })
    return _report("extreme", n, bad, len(shapes))


# -- witness SYT ---------------------------------------------------------------------


@dataclass
class WitnessStep:
    """One level of the inductive construction: strip removal, filling, correction."""

    alpha: Composition
    lam: Partition
    descents: tuple[int, ...]
    strip: tuple[tuple[int, int], ...]
    mu: Partition
    r: int
    c: int
    inner: Filling
    filled: Filling
    case: str
    cycle: tuple[int, ...] | None
    tableau: Filling


def check_witness_args(alpha: Sequence[int], lam: Sequence[int]) -> tuple[Composition, Partition]:
    """Validate (alpha, lam); raise ValueError naming the bound that fails."""
    alpha = as_composition(alpha)
    lam = as_partition(lam)
    n, l = sum(alpha), len(alpha)
    if not is_equitable(alpha):
        raise ValueError(f"rib{alpha} is not equitable")
    if sum(lam) != n:
        raise ValueError(f"|lambda| = {sum(lam)} but |alpha| = {n}")
    if len(lam) > l:
        raise ValueError(f"lambda has {len(lam)} rows, more than l = {l}")
    if lam[0] > n - l + 1:
        raise ValueError(f"lambda_1 = {lam[0]} exceeds N - l + 1 = {n - l + 1}")
    return alpha, lam


def construct_witness_syt(alpha: Iterable[int], lam: Iterable[int], inner: Filling | None = None) -> Filling:
    """An SYT of shape lam whose descent set is S(alpha), for an equitable ribbon alpha.

    Built by induction on the number of rows: peel a horizontal strip of size
    alpha_l off lam, fill the rest recursively, put the largest alpha_l values
    in the strip and, if N_{l-1} fails to be a descent, permute a cycle of
    entries to repair it.  Any SYT of the right shape and descents may stand
    in for the recursive part; pass it as ``inner`` (normalized alpha only).
    """
    alpha, lam = check_witness_args(alpha, lam)
    t = _witness(alpha, lam) if inner is None else witness_step(alpha, lam, inner).tableau
    assert t.shape == SkewShape(lam) and descent_set(t) == frozenset(descent_positions(alpha)), (alpha, lam)
    return t


def _complement(alpha: Composition) -> Composition:
    n = sum(alpha)
    return composition_from_descents(set(range(1, n)) - set(descent_positions(alpha)), n)


def _witness(alpha: Composition, lam: Partition) -> Filling:
    alpha, lam = check_witness_args(alpha, lam)
    n = sum(alpha)
    if len(alpha) == 1:
        return Filling.straight([list(range(1, n + 1))])
    a, b = min(alpha), min(ribbon_cols(alpha))
    # transposing complements the descent set; it restores a >= b, and when
    # a == b == 1 it moves the length-1 row from the bottom to the top
    if a < b or (a == 1 and alpha[-1] == 1):
        return _witness(_complement(alpha), transpose(lam)).transpose()
    return witness_step(alpha, lam).tableau


def _choose_strip(alpha: Composition, lam: Partition) -> tuple[list[int], int, int]:
    """Boxes to remove from the right end of each row of lam, plus r and c."""
    n, l = sum(alpha), len(alpha)
    last = alpha[-1]
    width = n - last - (l - 1) + 1  # column bound for mu
    rows = len(lam)
    cap = [lam[i] - (lam[i + 1] if i + 1 < rows else 0) for i in range(rows)]
    take = [0] * rows
    r = lam[l - 1] if rows == l else 0
    c = max(0, lam[0] - width)
    if r:
        take[l - 1] = r
    if c:
        if c > cap[0]:
            raise AssertionError(f"box at row 2, column {width + 1} of {lam}")
        take[0] = max(take[0], c)
    take[rows - 1] = max(take[rows - 1], 1)
    if r == 0:
        corner = max(i for i in range(rows) if lam[i] == lam[0])
        take[corner] = max(take[corner], 1)
    spare = last - sum(take)
    if spare < 0:
        raise AssertionError(f"strip for {lam} needs {sum(take)} boxes but alpha_l = {last}")
    for _ in range(spare):
        options = [(lam[i] - take[i] - 1, i) for i in range(rows) if take[i] < cap[i]]
        if not options:
            raise AssertionError(f"no room for a horizontal strip of size {last} in {lam}")
        _, i = max(options)
        take[i] += 1
    return take, r, c


def witness_step(alpha: Iterable[int], lam: Iterable[int], inner: Filling | None = None) -> WitnessStep:
    """Top level of the construction for normalized input (a >= b, rows 2..l longer than 1).

    ``inner`` may supply the SYT of the smaller shape mu; by default it is
    built recursively.
    """
    alpha, lam = check_witness_args(alpha, lam)
    n, l = sum(alpha), len(alpha)
    if l < 2:
        raise ValueError("witness_step needs at least two rows")
    if min(alpha) < min(ribbon_cols(alpha)) or any(x == 1 for x in alpha[1:]):
        raise ValueError(f"rib{alpha} is not normalized")
    descents = descent_positions(alpha)
    top = descents[-1]
    take, r, c = _choose_strip(alpha, lam)
    mu = as_partition(lam[i] - take[i] for i in range(len(lam)))
    strip = sorted(((i, j) for i in range(len(lam)) for j in range(lam[i] - take[i], lam[i])), key=lambda x: x[1])
    if inner is None:
        inner = _witness(alpha[:-1], mu)
    elif inner.shape != SkewShape(mu) or descent_set(inner) != frozenset(descents[:-1]):
        raise ValueError(f"inner tableau must be an SYT of shape {mu} with descent set {set(descents[:-1])}")

    grid = inner.grid()
    for v, cell in enumerate(strip, start=top + 1):
        grid[cell] = v
    filled = Filling.from_grid(SkewShape(lam), grid)
    pos = filled.positions()

    def row(v: int) -> int:
        return pos[v][0]

    if row(top + 1) > row(top):
        case, cycle = "descent", None
    elif row(n) < row(top + 1):
        case = "non-rectangle"
        higher = min(v for v in range(top + 2, n + 1) if row(v) < row(top + 1))
        cycle = tuple(range(higher, top - 1, -1))
    else:
        case = "rectangle"
        cycle = _rectangle_cycle(alpha, lam, pos)

    if cycle is None:
        result = filled
    else:
        moved = dict(grid)
        for k, v in enumerate(cycle):
            moved[pos[cycle[(k + 1) % len(cycle)]]] = v
        result = Filling.from_grid(SkewShape(lam), moved)
    if not result.is_standard() or descent_set(result) != frozenset(descents):
        raise AssertionError(f"witness for {alpha}, {lam} failed in the {case} case")
    return WitnessStep(alpha, lam, descents, tuple(strip), mu, r, c, inner, filled, case, cycle, result)


def _rectangle_cycle(alpha: Composition, lam: Partition, pos: dict[int, tuple[int, int]]) -> tuple[int, ...]:
    n, l = sum(alpha), len(alpha)
    if len(set(lam)) != 1:
        raise AssertionError(f"{lam} should be a rectangle here")
    bottom = len(lam) - 1
    ns = descent_positions(alpha)  # ns[k] is N_{k+1}
    marked = set(ns)
    above = [v for v in range(1, n + 1) if pos[v][0] < bottom]
    x = max(v for v in above if v not in marked)
    if x + 1 not in marked:
        raise AssertionError(f"largest unmarked entry above the bottom row is {x}")
    j = ns.index(x + 1) + 1
    if j > l - 2:
        raise AssertionError(f"j = {j} exceeds l - 2 = {l - 2}")
    nj = ns[j - 1]
    prev = ns[j - 2] if j >= 2 else 0
    low = min(v for v in above if v > prev)
    i = nj - low
    skipped = set(ns[j : l - 2])  # N_{j+1}, ..., N_{l-2}
    along_bottom = [v for v in range(nj + 1, ns[l - 2] + 1) if v not in skipped]
    back_up = [ns[k] for k in range(l - 3, j - 2, -1)]  # N_{l-2}, ..., N_j
    strip_run = list(range(nj - 1, nj - i - 1, -1))
    return tuple(along_bottom + back_up + strip_run)


# -- conjectured maximal ribbons -----------------------------------------------------------


def conjectured_max_ribbon(n: int, l: int) -> Composition:
    """Ribbon cut out of an l x (n-l+1) grid by its rising diagonal.

    A box is kept when the open diagonal segment meets its open interior, or
    passes through its top-left corner.  Rows are returned top to bottom.
    """
    if not 1 <= l <= n:
        raise ValueError(f"need 1 <= l <= n, got n={n}, l={l}")
    w = n - l + 1
    # Cartesian coordinates: box (x, y) spans [x, x+1] x [y, y+1], y counted
    # upward from the bottom edge; the diagonal is l*X = w*Y.
    spans = []
    for y in range(l - 1, -1, -1):
        xs = [
            x
            for x in range(w)
            if (l * x < w * (y + 1) and l * (x + 1) > w * y) or l * x == w * (y + 1)
        ]
        spans.append((xs[0], xs[-1]))
        assert xs == list(range(xs[0], xs[-1] + 1)), (n, l, y, xs)
    for (up_lo, _), (_, low_hi) in zip(spans, spans[1:]):
        assert up_lo == low_hi, (n, l, spans)
    alpha = tuple(hi - lo + 1 for lo, hi in spans)
    assert sum(alpha) == n and is_equitable(alpha), (n, l, alpha)
    return alpha


def verify_conjecture_max(n: int, jobs: int | None = None) -> Report:
    """Maximal connected classes of P_N are {R, rotated R} for the diagonal ribbons R."""
    maxes = maximal_connected(poset(n, "schur", jobs))
    bad = []
    if len(maxes) != n:
        bad.append({"maximal_count": len(maxes), "classes": [[str(m) for m in c.members] for c in maxes]})
    by_rows: dict[int, list] = {}
    for cls in maxes:
        by_rows.setdefault(len(cls.rows), []).append(cls)
    for l in range(1, n + 1):
        r = ribbon(conjectured_max_ribbon(n, l))
        want = {r, rotate180(r)}
        found = by_rows.get(l, [])
        if len(found) != 1 or set(found[0].members) != want:
            bad.append({
                "rows": l,
                "predicted": sorted(str(m) for m in want),
                "found": [sorted(str(m) for m in c.members) for c in found],
            })
    return _report("max", n, bad, len(maxes))


def interleaved_ribbon(lam: Iterable[int]) -> Composition:
    """(lam_1, lam_3, lam_5, ..., lam_6, lam_4, lam_2)."""
    lam = as_partition(lam)
    return lam[0::2] + lam[1::2][::-1]


def verify_conjecture_minrib(lam: Iterable[int]) -> Report:
    """Ribbons with row multiset lam have a unique minimal Schur class, holding the interleaved ribbon."""
    lam = as_partition(lam)
    arrangements = sorted(set(permutations(lam)), reverse=True)
    shapes = [ribbon(x) for x in arrangements]
    f = build_poset(group_classes(shapes, "schur"), "schur")
    mins = [f.elements[i] for i in f.minimal()]
    want = ribbon(interleaved_ribbon(lam))
    bad = []
    if len(mins) != 1 or want not in mins[0].members:
        bad.append({
            "rows": list(lam),
            "predicted": list(interleaved_ribbon(lam)),
            "minimal": [[list(ribbon_rows(m)) for m in c.members] for c in mins],
        })
    return _report("minrib", list(lam), bad, len(arrangements))


def verify_minrib_all(n: int) -> Report:
    bad, checked = [], 0
    for lam in enumerate_partitions(n):
        rep = verify_conjecture_minrib(lam)
        bad += rep.counterexamples
        checked += rep.checked
    return _report("minrib", n, bad, checked)


# -- boundary words and reduction checks ---------------------------------------------------


def boundary_word(alpha: Iterable[int]) -> str:
    """Lower-right border of rib(alpha) from its bottom-left to its top-right corner.

    'h' is a unit step right and 'v' a unit step up; the word has N - l + 1
    h's and l v's.
    """
    alpha = as_composition(alpha)
    rows = alpha[::-1]
    word = "h" * rows[0]
    for length in rows[1:]:
        word += "v" + "h" * (length - 1)
    return word + "v"


def verify_reductions(n: int, jobs: int | None = None) -> Report:
    """Every connected non-ribbon and every non-equitable ribbon lies strictly below
    an equitable ribbon in both orders, and maximal connected classes are equitable ribbons.
    """
    bad = []
    checked = 0
    for order in ("schur", "support"):
        f = poset(n, order, jobs)
        conn = [i for i, c in enumerate(f.elements) if c.connected]
        equitable = [
            i for i in conn if f.elements[i].ribbon and is_equitable(ribbon_rows(f.elements[i].representative))
        ]
        for i in conn:
            cls = f.elements[i]
            checked += 1
            if i in equitable:
                continue
            if not cls.ribbon and not any(f.strict[i, k] and f.elements[k].ribbon for k in conn):
                bad.append({"order": order, "claim": "ribbon above", "shape": cls.label})
            if not any(f.strict[i, k] for k in equitable):
                bad.append({"order": order, "claim": "equitable above", "shape": cls.label})
        for cls in maximal_connected(f):
            if not all(is_ribbon(m) and is_equitable(ribbon_rows(m)) for m in cls.members):
                bad.append({"order": order, "claim": "maximal is equitable", "shape": cls.label})
    return _report("reductions", n, bad, checked)


def connected_shapes(n: int) -> list[SkewShape]:
    return [a for a in enumerate_skew_shapes(n) if is_connected(a)]


def ribbon_expansion_matches(n: int) -> Report:
    """Descent-set expansion against the LR expansion for every ribbon of size n."""
    bad = []
    comps = enumerate_compositions(n)
    for alpha in comps:
        if ribbon_expand(alpha) != lr_expand(ribbon(alpha)):
            bad.append({"ribbon": list(alpha)})
    return _report("ribbon-oracle", n, bad, len(comps))
