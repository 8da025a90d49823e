import itertools

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from kostka import core, tableaux
from oracles import immaculate_by_filter, ssyt_by_filter

# The running example pair from the shape-(4,3,4,3,1,5) covering: an
# immaculate filling of shape (4,3,7,6) whose content is the covering's
# weight sequence (4,3,5,2,2,4).
BIG_IMMACULATE = (
    (1, 1, 1, 1),
    (2, 2, 2),
    (3, 3, 3, 3, 3, 4, 6),
    (4, 5, 5, 6, 6, 6),
)

# SSYT of shape (6,5,5,4) with content (6,5,0,4,3,2).
BIG_SSYT = (
    (1, 1, 1, 1, 1, 1),
    (2, 2, 2, 2, 2),
    (4, 4, 4, 4, 5),
    (5, 5, 6, 6),
)


def test_content_vector():
    assert tableaux.content_vector(BIG_IMMACULATE, 6) == (4, 3, 5, 2, 2, 4)
    assert tableaux.content_vector(BIG_SSYT, 6) == (6, 5, 0, 4, 3, 2)
    assert tableaux.content_vector(((1, 1, 1),), 1) == (3,)
    with pytest.raises(ValueError):
        tableaux.content_vector(BIG_SSYT, 5)


def test_row_multiset():
    assert tableaux.row_multiset(BIG_IMMACULATE, 3) == (3, 3, 3, 3, 3, 4, 6)
    assert tableaux.row_multiset(BIG_SSYT, 3) == (4, 4, 4, 4, 5)
    with pytest.raises(ValueError):
        tableaux.row_multiset(BIG_SSYT, 5)


def test_validators():
    assert tableaux.is_immaculate(BIG_IMMACULATE)
    assert not tableaux.is_ssyt(BIG_IMMACULATE)  # shape is not a partition
    assert tableaux.is_ssyt(BIG_SSYT)
    assert not tableaux.is_immaculate(((1, 2), (1,)))  # first column ties
    assert not tableaux.is_immaculate(((2, 1),))  # row decreases


def test_enumerate_immaculate_single_row():
    result = tableaux.enumerate_immaculate((2,), (1, 1))
    assert result == (((1, 2),),)


def test_enumerate_immaculate_diagonal_unique():
    for n in range(1, 9):
        for alpha in core.compositions_of(n):
            assert len(tableaux.enumerate_immaculate(alpha, alpha)) == 1


@pytest.mark.parametrize("n", range(1, 7))
def test_enumerate_immaculate_lex_vanishing(n):
    comps = core.compositions_of(n)
    for alpha, beta in itertools.product(comps, repeat=2):
        count = len(tableaux.enumerate_immaculate(alpha, beta))
        if not core.lex_geq(alpha, beta):
            assert count == 0


@pytest.mark.parametrize("n", range(1, 6))
def test_enumerate_immaculate_against_filter_oracle(n):
    comps = core.compositions_of(n)
    for alpha, beta in itertools.product(comps, repeat=2):
        ours = tableaux.enumerate_immaculate(alpha, beta)
        brute = immaculate_by_filter(alpha, beta)
        assert sorted(ours) == sorted(brute)
        assert all(tableaux.is_immaculate(rows) for rows in ours)


def test_enumerate_ssyt_fixtures():
    assert len(tableaux.enumerate_ssyt((2, 1), (1, 1, 1))) == 2
    assert tableaux.enumerate_ssyt((1, 1), (2,)) == ()
    for n in range(1, 9):
        for lam in core.partitions_of(n):
            assert len(tableaux.enumerate_ssyt(lam, lam)) == 1


@pytest.mark.parametrize("n", range(1, 6))
def test_enumerate_ssyt_against_filter_oracle(n):
    parts = core.partitions_of(n)
    for lam, mu in itertools.product(parts, repeat=2):
        ours = tableaux.enumerate_ssyt(lam, mu)
        assert sorted(ours) == sorted(ssyt_by_filter(lam, mu))
        assert all(tableaux.is_ssyt(rows) for rows in ours)


def test_enumeration_order_is_reading_word_lex():
    result = tableaux.enumerate_immaculate((2, 2), (1, 1, 1, 1))
    words = [tuple(v for row in rows for v in row) for rows in result]
    assert words == sorted(words)


def test_bender_knuth_block_swap_example():
    # After lowering the leftmost 5 of row 3, the exchange at value 4 turns
    # three unpaired 4's into 5's while the two paired columns stay put.
    start = (
        (1, 1, 1, 1, 1, 1),
        (2, 2, 2, 2, 2),
        (4, 4, 4, 4, 4),
        (5, 5, 6, 6),
    )
    swapped = tableaux.bender_knuth(start, 4)
    assert swapped[2] == (4, 4, 5, 5, 5)
    assert swapped[0] == start[0] and swapped[1] == start[1] and swapped[3] == start[3]
    assert tableaux.bender_knuth(swapped, 4) == start


def test_bender_knuth_absent_values_is_identity():
    rows = ((1, 1), (2, 3))
    assert tableaux.bender_knuth(rows, 5) == rows


def _all_ssyt_up_to(n):
    for lam in core.partitions_of(n):
        for content in itertools.product(range(n + 1), repeat=n):
            if sum(content) != n:
                continue
            yield from tableaux.enumerate_ssyt(lam, content)


@pytest.mark.parametrize("n", range(1, 7))
def test_bender_knuth_involution_exhaustive(n):
    for rows in _all_ssyt_up_to(n):
        m = max(max(row) for row in rows) + 1
        for k in range(1, m):
            image = tableaux.bender_knuth(rows, k)
            assert tableaux.is_ssyt(image)
            before = tableaux.content_vector(rows, m + 1)
            after = tableaux.content_vector(image, m + 1)
            assert after[k - 1] == before[k]
            assert after[k] == before[k - 1]
            for idx in range(m + 1):
                if idx not in (k - 1, k):
                    assert after[idx] == before[idx]
            assert tableaux.bender_knuth(image, k) == rows


BAD_CELL_ROWS = (
    (1, 1, 1, 1, 2, 2, 3, 3, 4),
    (2, 2, 5),
    (3, 3, 5, 5, 5),
    (4, 4, 4, 6, 6, 7, 7),
    (8, 8, 9, 9),
)


def test_bad_cells_wide_example():
    cells = tableaux.bad_cells(BAD_CELL_ROWS)
    assert (4, 3) in cells
    in_col3 = [r for (r, c) in cells if c == 3]
    assert min(c for (_, c) in cells) == 3
    assert max(in_col3) == 4
    assert cells == sorted(cells, key=lambda cell: (cell[1], cell[0]))


def test_bad_cells_empty_for_ssyt():
    assert tableaux.bad_cells(BIG_SSYT) == []
    assert tableaux.bad_cells(((1,), (2,), (5,))) == []


@pytest.mark.parametrize("n", range(1, 7))
def test_bad_cells_characterize_ssyt(n):
    # no bad cells <=> partition shape and column strict
    for shape in core.compositions_of(n):
        for content in itertools.product(range(n + 1), repeat=n):
            if sum(content) != n:
                continue
            for rows in tableaux.enumerate_immaculate(shape, content):
                empty = not tableaux.bad_cells(rows)
                assert empty == tableaux.is_ssyt(rows)


@settings(max_examples=200)
@given(st.data())
def test_bender_knuth_involution_property(data):
    n = data.draw(st.integers(min_value=1, max_value=6))
    lam = data.draw(st.sampled_from(core.partitions_of(n)))
    content = data.draw(
        st.lists(st.integers(min_value=0, max_value=n), min_size=n, max_size=n).filter(
            lambda c: sum(c) == n
        )
    )
    options = tableaux.enumerate_ssyt(lam, tuple(content))
    if not options:
        return
    rows = data.draw(st.sampled_from(options))
    k = data.draw(st.integers(min_value=1, max_value=n))
    assert tableaux.bender_knuth(tableaux.bender_knuth(rows, k), k) == rows
