import pytest
from hypothesis import given, strategies as st

import oracles
from schurkit.shapes import (
    SkewShape,
    as_composition,
    as_partition,
    cols_of,
    component_count,
    composition_from_descents,
    descent_positions,
    dominance_leq,
    enumerate_compositions,
    enumerate_partitions,
    enumerate_skew_shapes,
    is_connected,
    is_ribbon,
    overlap_partition,
    ribbon,
    ribbon_cols,
    ribbon_rows,
    rotate180,
    rows_of,
    transpose,
    transpose_skew,
)

partitions_st = st.lists(st.integers(1, 9), min_size=0, max_size=7).map(lambda xs: tuple(sorted(xs, reverse=True)))
compositions_st = st.lists(st.integers(1, 6), min_size=1, max_size=7).map(tuple)


@st.composite
def skew_shapes(draw, max_n=7):
    n = draw(st.integers(1, max_n))
    shapes = enumerate_skew_shapes(n)
    return shapes[draw(st.integers(0, len(shapes) - 1))]


def test_as_partition_rejects_bad_input():
    assert as_partition([4, 4, 3, 0]) == (4, 4, 3)
    for bad in ([1, 2], [3, -1], [2.5]):
        with pytest.raises((ValueError, TypeError)):
            as_partition(bad)
    with pytest.raises(ValueError):
        as_composition([2, 0, 1])


def test_transpose_fixture():
    assert transpose((4, 4, 3)) == (3, 3, 3, 2)
    assert transpose(()) == ()


@given(partitions_st)
def test_transpose_is_involution(lam):
    assert transpose(transpose(lam)) == lam
    assert sum(transpose(lam)) == sum(lam)


@given(partitions_st)
def test_transpose_matches_cells(lam):
    cells = oracles.cells_of(lam)
    assert oracles.row_lengths(oracles.transpose_cells(cells)) == transpose(lam)


def test_dominance_fixtures():
    assert dominance_leq((2, 1, 1, 1), (3, 2))
    assert not dominance_leq((3, 2), (2, 1, 1, 1))
    assert dominance_leq((3, 3), (4, 1, 1)) is False
    assert dominance_leq((4, 1, 1), (3, 3)) is False
    with pytest.raises(ValueError):
        dominance_leq((2,), (1, 1, 1))


@pytest.mark.parametrize("n", range(1, 8))
def test_dominance_order_laws(n):
    parts = enumerate_partitions(n)
    for p in parts:
        assert dominance_leq(p, p)
        for q in parts:
            assert dominance_leq(p, q) == oracles.dominates(q, p)
            # transposition reverses dominance
            assert dominance_leq(p, q) == dominance_leq(transpose(q), transpose(p))
            if dominance_leq(p, q) and dominance_leq(q, p):
                assert p == q
    for p in parts[:8]:
        for q in parts:
            for r in parts:
                if dominance_leq(p, q) and dominance_leq(q, r):
                    assert dominance_leq(p, r)


@pytest.mark.parametrize("n", range(1, 9))
def test_enumerate_partitions_matches_oracle(n):
    assert enumerate_partitions(n) == list(oracles.partitions(n))


@pytest.mark.parametrize("n", range(1, 9))
def test_enumerate_compositions(n):
    comps = enumerate_compositions(n)
    assert len(comps) == 2 ** (n - 1)
    assert set(comps) == set(oracles.compositions(n))
    assert comps == sorted(comps, reverse=True)


@given(compositions_st)
def test_descent_positions_roundtrip(alpha):
    n = sum(alpha)
    s = descent_positions(alpha)
    assert len(s) == len(alpha) - 1
    assert composition_from_descents(s, n) == alpha


def test_basic_form_and_make():
    a = SkewShape.make((4, 4, 3), (2,))
    assert a == SkewShape((4, 4, 3), (2,))
    # empty top row and empty first column are stripped
    assert SkewShape.make((3, 3, 2), (3, 1, 1)) == SkewShape((2, 1), ())
    with pytest.raises(ValueError):
        SkewShape((3, 3), (3,))
    with pytest.raises(ValueError):
        SkewShape((3, 3), (1, 1))
    with pytest.raises(ValueError):
        SkewShape((2,), (2,))
    with pytest.raises(ValueError):
        SkewShape.make((2, 1), (2, 2))


def test_str_and_json():
    a = SkewShape((4, 4, 3), (2,))
    assert str(a) == "443/2"
    assert str(SkewShape((10, 4, 4))) == "10,4,4"
    assert a.to_json() == {"outer": [4, 4, 3], "inner": [2]}
    assert SkewShape.from_json(a.to_json()) == a
    assert SkewShape.from_json({"ribbon": [2, 3, 3]}) == ribbon((2, 3, 3))


SKEW_COUNTS = {1: 1, 2: 3, 3: 9, 4: 28, 5: 87, 6: 272}


@pytest.mark.parametrize("n", range(1, 7))
def test_enumerate_skew_shapes_matches_filter_oracle(n):
    shapes = enumerate_skew_shapes(n)
    assert len(shapes) == len(set(shapes)) == SKEW_COUNTS[n]
    got = {(a.outer, a.inner) for a in shapes}
    assert got == oracles.skew_shapes_by_filter(n)
    assert [a.sort_key() for a in shapes] == sorted((a.sort_key() for a in shapes), reverse=True)


@pytest.mark.parametrize("n", range(1, 8))
def test_component_count_matches_cells(n):
    for a in enumerate_skew_shapes(n):
        cells = list(a.cells())
        assert component_count(a) == oracles.components(cells)
        assert rows_of(a) == oracles.row_lengths(cells)
        assert cols_of(a) == oracles.column_lengths(cells)
        assert overlap_partition(a, 1) == rows_of(a)


@given(skew_shapes())
def test_shape_involutions(a):
    assert transpose_skew(transpose_skew(a)) == a
    assert rotate180(rotate180(a)) == a
    assert rows_of(transpose_skew(a)) == cols_of(a)
    assert rows_of(rotate180(a)) == rows_of(a)
    assert cols_of(rotate180(a)) == cols_of(a)
    assert component_count(rotate180(a)) == component_count(a)
    assert is_ribbon(transpose_skew(a)) == is_ribbon(a)


@given(skew_shapes())
def test_rotate180_matches_cells(a):
    h, w = a.n_rows, a.n_cols
    rotated = sorted((h - 1 - i, w - 1 - j) for i, j in a.cells())
    assert sorted(rotate180(a).cells()) == rotated


def test_ribbon_fixtures():
    assert ribbon((2, 1, 3)) == SkewShape((4, 3, 3), (2, 2))
    assert rotate180(ribbon((2, 1, 3))) == ribbon((3, 1, 2))
    assert rows_of(ribbon((2, 1, 3))) == (3, 2, 1)
    assert cols_of(ribbon((2, 1, 3))) == (3, 1, 1, 1)
    assert ribbon_cols((2, 3, 3)) == (1, 1, 2, 1, 2, 1)


@given(compositions_st)
def test_ribbon_matches_cells(alpha):
    a = ribbon(alpha)
    assert sorted(a.cells()) == sorted(oracles.ribbon_cells(alpha))
    assert is_ribbon(a) and is_connected(a)
    assert ribbon_rows(a) == alpha
    assert rotate180(a) == ribbon(alpha[::-1])


@pytest.mark.parametrize("n", range(1, 13))
def test_ribbon_row_plus_column_count(n):
    # every row after the first shares exactly one column with the row above
    for alpha in enumerate_compositions(n):
        a = ribbon(alpha)
        assert a.n_rows + a.n_cols == n + 1


@pytest.mark.parametrize("n", range(1, 8))
def test_ribbons_are_exactly_the_ribbon_shapes(n):
    ribbons = {a for a in enumerate_skew_shapes(n) if is_ribbon(a)}
    assert ribbons == {ribbon(alpha) for alpha in enumerate_compositions(n)}
