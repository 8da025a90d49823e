"""Fillings of composition diagrams: immaculate tableaux and SSYT.

A tableau is a tuple of rows, each row a weakly increasing tuple of positive
integers; the first column strictly increases from top to bottom.  A
semistandard Young tableau (SSYT) additionally has partition shape and
strictly increasing columns.

Enumeration is row-by-row backtracking in reading order, so results come out
in lexicographic order by reading word and the output order is stable.  The
enumerators are cached: the involution test suites hit the same
(shape, content) cells over and over.
"""

from __future__ import annotations

from functools import lru_cache
from typing import Sequence

from .core import is_composition, is_partition

Rows = tuple[tuple[int, ...], ...]


def shape_of(rows: Rows) -> tuple[int, ...]:
    return tuple(len(row) for row in rows)


def content_vector(rows: Rows, m: int) -> tuple[int, ...]:
    """Multiplicity vector of the entries 1..m; entries above m are an error."""
    counts = [0] * m
    for row in rows:
        for v in row:
            if not 1 <= v <= m:
                raise ValueError(f"entry {v} outside 1..{m}")
            counts[v - 1] += 1
    return tuple(counts)


def row_multiset(rows: Rows, i: int) -> tuple[int, ...]:
    """Entries of row i (1-based) as a sorted tuple; rows are stored sorted."""
    if not 1 <= i <= len(rows):
        raise ValueError(f"row {i} out of range")
    return tuple(sorted(rows[i - 1]))


def is_immaculate(rows: Rows) -> bool:
    if not rows or not all(rows):
        return False
    for row in rows:
        if any(row[j] > row[j + 1] for j in range(len(row) - 1)):
            return False
        if any(v < 1 for v in row):
            return False
    first_col = [row[0] for row in rows]
    return all(a < b for a, b in zip(first_col, first_col[1:]))


def is_ssyt(rows: Rows) -> bool:
    if not is_immaculate(rows) or not is_partition(shape_of(rows)):
        return False
    for i in range(1, len(rows)):
        above = rows[i - 1]
        if any(above[j] >= v for j, v in enumerate(rows[i])):
            return False
    return True


@lru_cache(maxsize=None)
def enumerate_immaculate(shape: tuple[int, ...], content: tuple[int, ...]) -> tuple[Rows, ...]:
    """All immaculate tableaux of the given shape and exact content vector.

    ``content`` is a weak composition giving the multiplicity of each value
    1..len(content); trailing zeros are significant (they forbid the values).
    """
    if not is_composition(shape):
        raise ValueError(f"shape {shape} is not a composition")
    if any(c < 0 for c in content):
        raise ValueError(f"content {content} has a negative entry")
    if sum(shape) != sum(content):
        raise ValueError("shape size and content total differ")
    m = len(content)
    counts = list(content)
    results: list[Rows] = []
    rows: list[tuple[int, ...]] = []

    def fill_row(i: int, prev_first: int) -> None:
        if i == len(shape):
            results.append(tuple(rows))
            return
        length = shape[i]
        row: list[int] = []

        def place(j: int, lo: int) -> None:
            if j == length:
                rows.append(tuple(row))
                fill_row(i + 1, row[0])
                rows.pop()
                return
            for v in range(lo, m + 1):
                if counts[v - 1] == 0:
                    continue
                counts[v - 1] -= 1
                row.append(v)
                place(j + 1, v)
                row.pop()
                counts[v - 1] += 1

        place(0, prev_first + 1)

    fill_row(0, 0)
    return tuple(results)


@lru_cache(maxsize=None)
def enumerate_ssyt(shape: tuple[int, ...], content: tuple[int, ...]) -> tuple[Rows, ...]:
    """All semistandard Young tableaux of the given partition shape and content."""
    if not is_partition(shape):
        raise ValueError(f"shape {shape} is not a partition")
    if any(c < 0 for c in content):
        raise ValueError(f"content {content} has a negative entry")
    if sum(shape) != sum(content):
        raise ValueError("shape size and content total differ")
    m = len(content)
    counts = list(content)
    results: list[Rows] = []
    rows: list[tuple[int, ...]] = []

    def fill_row(i: int) -> None:
        if i == len(shape):
            results.append(tuple(rows))
            return
        length = shape[i]
        above = rows[i - 1] if i > 0 else None
        row: list[int] = []

        def place(j: int, lo: int) -> None:
            if j == length:
                rows.append(tuple(row))
                fill_row(i + 1)
                rows.pop()
                return
            floor = lo
            if above is not None:
                floor = max(floor, above[j] + 1)
            for v in range(floor, m + 1):
                if counts[v - 1] == 0:
                    continue
                counts[v - 1] -= 1
                row.append(v)
                place(j + 1, v)
                row.pop()
                counts[v - 1] += 1

        place(0, 1)

    fill_row(0)
    return tuple(results)


def bender_knuth(rows: Rows, k: int) -> Rows:
    """Exchange the multiplicities of k and k+1 in an SSYT.

    An entry k is paired when k+1 sits directly below it, and an entry k+1
    is paired when k sits directly above; paired entries stay put.  In each
    row the free k's and free (k+1)'s form one contiguous block, which is
    rewritten with the two counts exchanged.  Applying the map twice gives
    back the input.
    """
    if k < 1:
        raise ValueError("value index must be >= 1")
    out = []
    for i, row in enumerate(rows):
        above = rows[i - 1] if i > 0 else ()
        below = rows[i + 1] if i + 1 < len(rows) else ()
        free_k = [
            j
            for j, v in enumerate(row)
            if v == k and not (j < len(below) and below[j] == k + 1)
        ]
        free_k1 = [
            j
            for j, v in enumerate(row)
            if v == k + 1 and not (j < len(above) and above[j] == k)
        ]
        if not free_k and not free_k1:
            out.append(row)
            continue
        positions = free_k + free_k1
        b = len(free_k1)
        new_row = list(row)
        for t, j in enumerate(positions):
            new_row[j] = k if t < b else k + 1
        out.append(tuple(new_row))
    return tuple(out)


def bad_cells(rows: Rows) -> list[tuple[int, int]]:
    """Cells (i, j), 1-based, where column-strictness fails or has no cell above.

    Empty exactly when the rows form a column-strict filling of a partition
    shape.  Sorted by (column, row).
    """
    out = []
    for i in range(2, len(rows) + 1):
        row = rows[i - 1]
        above = rows[i - 2]
        for j in range(1, len(row) + 1):
            if j > len(above) or above[j - 1] >= row[j - 1]:
                out.append((i, j))
    out.sort(key=lambda cell: (cell[1], cell[0]))
    return out


def clear_caches() -> None:
    """Drop the memoized enumerations (useful between large verification runs)."""
    enumerate_immaculate.cache_clear()
    enumerate_ssyt.cache_clear()
