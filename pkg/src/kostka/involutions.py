"""Sign-reversing involutions on tableau/hook-covering pairs.

Five maps act on five families of pairs, all matched through the weight
sequence of the covering:

* A(alpha, beta): immaculate tableau of shape alpha whose content equals the
  covering's weight sequence; covering of shape beta.  Map: ``phi``.
* B(lam, mu): SSYT of shape lam whose content is the weight sequence read in
  the order the permutation's inverse prescribes; covering of shape mu.
  Map: ``chi``.
* C(alpha, beta): covering of content alpha and an immaculate tableau of
  content beta on a common shape.  Map: ``psi``.
* D(lam, mu) / E(lam, mu): as C but the covering's content rearranges to
  lam and the tableau has content mu; D additionally requires the tableau
  to be semistandard.  Map on D: ``rho``, which alternates ``psi`` with the
  cell-block swap ``theta`` until it lands back in D.

Each map fixes exactly the diagonal pairs (left index equal to right index)
and flips the covering's sign everywhere else, so the signed pair counts
reduce to Kronecker deltas: that is the matrix-identity machinery.

``phi``, ``chi``, ``psi`` and ``theta`` are pairwise-independent involutions;
``rho`` composes the last two along alternating paths.  All maps are pure;
selection helpers are exposed separately so tests can pin the choices.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import Callable, Sequence

from .core import (
    IntSeq,
    compositions_of,
    dec,
    delete_fixed_point,
    embed,
    flatten,
    partitions_of,
    perm_inverse,
    swap_positions,
    swap_values,
)
from .tableaux import (
    Rows,
    bad_cells,
    bender_knuth,
    content_vector,
    enumerate_immaculate,
    enumerate_ssyt,
    shape_of,
)
from .tunnelhooks import TunnelHookCovering, delta_choices, thc_from_perm


@dataclass(frozen=True)
class Pair:
    kind: str  # "A" | "B" | "C" | "D" | "E"
    thc: TunnelHookCovering
    tableau: Rows


@dataclass(frozen=True)
class Trace:
    """A walk produced by ``rho``: pairs[0] is the input, pairs[-1] the
    output, and maps[i] named the step from pairs[i] to pairs[i+1]."""

    pairs: tuple[Pair, ...]
    maps: tuple[str, ...]


def validate_pair(pair: Pair) -> tuple[IntSeq, IntSeq]:
    """Check the pair's membership conditions; return its (left, right) indices.

    A: (tableau shape, covering shape), the tableau's content equal to the
    covering's weight sequence.  B: likewise with the weights read through
    the permutation's inverse and both shapes partitions.  C/E: a common
    shape, indices are the two contents; D additionally needs the tableau
    column-strict.  Raises ValueError with the violated condition.
    """
    from .core import is_partition
    from .tableaux import is_immaculate, is_ssyt

    rows = pair.tableau
    covering = pair.thc
    if not is_immaculate(rows):
        raise ValueError("tableau rows are not an immaculate filling")
    ell = len(covering.shape)
    if pair.kind == "A":
        delta = covering.delta()
        if any(d < 0 for d in delta):
            raise ValueError("covering weights must be nonnegative")
        if content_vector(rows, ell) != delta:
            raise ValueError("tableau content differs from the covering weights")
        return shape_of(rows), covering.shape
    if pair.kind == "B":
        if not is_ssyt(rows):
            raise ValueError("tableau must be column-strict")
        if not is_partition(covering.shape):
            raise ValueError("covering shape must be a partition")
        delta = covering.delta()
        if any(d < 0 for d in delta):
            raise ValueError("covering weights must be nonnegative")
        inv_perm = perm_inverse(covering.perm)
        reordered = tuple(delta[inv_perm[i] - 1] for i in range(ell))
        if content_vector(rows, ell) != reordered:
            raise ValueError("tableau content differs from the reordered weights")
        return shape_of(rows), covering.shape
    if pair.kind in ("C", "D", "E"):
        if shape_of(rows) != covering.shape:
            raise ValueError("tableau and covering shapes differ")
        if pair.kind == "D" and not is_ssyt(rows):
            raise ValueError("tableau must be column-strict")
        weight = covering.content()  # raises when a weight is negative
        top = max(max(row) for row in rows)
        mu = content_vector(rows, top)
        if not all(mu):
            raise ValueError("tableau content must be a composition")
        left = weight if pair.kind == "C" else dec(weight)
        return left, mu
    raise ValueError(f"unknown pair family {pair.kind!r}")


@lru_cache(maxsize=None)
def enumerate_pairs(kind: str, left: IntSeq, right: IntSeq) -> tuple[Pair, ...]:
    """The complete pair set of the given family and index pair."""
    left = tuple(left)
    right = tuple(right)
    n = sum(left)
    if sum(right) != n:
        raise ValueError("indices must have equal degree")
    out: list[Pair] = []
    if kind == "A":
        for perm, delta in delta_choices(right):
            covering = TunnelHookCovering(right, perm)
            for rows in enumerate_immaculate(left, delta):
                out.append(Pair("A", covering, rows))
    elif kind == "B":
        for perm, delta in delta_choices(right):
            inv = perm_inverse(perm)
            reordered = tuple(delta[inv[i] - 1] for i in range(len(right)))
            covering = TunnelHookCovering(right, perm)
            for rows in enumerate_ssyt(left, reordered):
                out.append(Pair("B", covering, rows))
    elif kind in ("C", "D", "E"):
        if kind == "D":
            shapes: Sequence[IntSeq] = partitions_of(n)
        else:
            shapes = compositions_of(n)
        fill = enumerate_ssyt if kind == "D" else enumerate_immaculate
        for shape in shapes:
            for perm, delta in delta_choices(shape):
                weight = flatten(delta)
                if kind == "C":
                    if weight != left:
                        continue
                elif dec(weight) != left:
                    continue
                covering = TunnelHookCovering(shape, perm)
                for rows in fill(shape, right):
                    out.append(Pair(kind, covering, rows))
    else:
        raise ValueError(f"unknown pair family {kind!r}")
    return tuple(out)


# -- phi on A ---------------------------------------------------------------


def phi_selection(pair: Pair) -> tuple[int, int, int] | None:
    """(row m, value q_m, replacement value p), or None on a fixed point.

    In each row, q_i is the entry whose image under the covering's
    permutation is largest; m is the first row where that image differs
    from the row number.
    """
    sigma = pair.thc.perm
    for i, row in enumerate(pair.tableau, start=1):
        q_i = max(row, key=lambda v: sigma[v - 1])
        if sigma[q_i - 1] != i:
            p = sigma.index(sigma[q_i - 1] - 1) + 1
            return i, q_i, p
    return None


def phi(pair: Pair) -> Pair:
    """Trade one cell's value against an adjacent transposition of the
    covering's permutation; fixes exactly the diagonal pairs of A."""
    selection = phi_selection(pair)
    if selection is None:
        return pair
    m, q_m, p = selection
    sigma = pair.thc.perm
    covering = thc_from_perm(pair.thc.shape, swap_values(sigma, sigma[q_m - 1] - 1))
    row = list(pair.tableau[m - 1])
    row.remove(q_m)
    row.append(p)
    row.sort()
    rows = pair.tableau[: m - 1] + (tuple(row),) + pair.tableau[m:]
    return Pair(pair.kind, covering, rows)


# -- chi on B ---------------------------------------------------------------


def chi_selection(pair: Pair) -> tuple[int, int] | None:
    """(row m, value q_m) with q_m the largest entry of the first row whose
    largest entry differs from the row number; None on a fixed point."""
    for i, row in enumerate(pair.tableau, start=1):
        q_i = max(row)
        if q_i != i:
            return i, q_i
    return None


def chi(pair: Pair) -> Pair:
    """Lower the leftmost maximal entry of the selected row, then rebalance
    the two touched values everywhere with the multiplicity-exchange swap."""
    selection = chi_selection(pair)
    if selection is None:
        return pair
    m, q_m = selection
    covering = thc_from_perm(pair.thc.shape, swap_values(pair.thc.perm, q_m - 1))
    row = list(pair.tableau[m - 1])
    row[row.index(q_m)] = q_m - 1
    rows = pair.tableau[: m - 1] + (tuple(row),) + pair.tableau[m:]
    return Pair(pair.kind, covering, bender_knuth(rows, q_m - 1))


# -- psi on C (and on E, inside rho) ---------------------------------------


def psi_selection(pair: Pair) -> tuple[int, int, int] | None:
    """(cutoff row k, moving value v, source row r), or None on a fixed point.

    Rows below k are already frozen: row i holds nothing but the value
    M - l + i (M the maximal entry, l the number of rows), that value occurs
    nowhere else, and the permutation fixes i.  v is the moving value
    M - l + k and r the row containing v whose permutation image is least.
    """
    rows = pair.tableau
    sigma = pair.thc.perm
    ell = len(rows)
    top = max(max(row) for row in rows)

    def frozen(i: int) -> bool:
        v = top - ell + i
        if sigma[i - 1] != i:
            return False
        if any(x != v for x in rows[i - 1]):
            return False
        return all(v not in rows[j] for j in range(ell) if j != i - 1)

    k = ell
    while k >= 1 and frozen(k):
        k -= 1
    if k == 0:
        return None
    v = top - ell + k
    sources = [j for j in range(1, ell + 1) if v in rows[j - 1]]
    r = min(sources, key=lambda j: sigma[j - 1])
    return k, v, r


def psi(pair: Pair) -> Pair:
    """Move one copy of the moving value between rows, adjusting the
    permutation by one adjacent transposition; the shape may gain a one-cell
    row, or lose its row r when that row empties."""
    selection = psi_selection(pair)
    if selection is None:
        return pair
    k, v, r = selection
    rows = pair.tableau
    sigma = pair.thc.perm
    ell = len(rows)
    if rows[r - 1][-1] != v:
        raise ValueError("the moving value must close its source row")
    if sigma[r - 1] == k:
        # open a fresh one-cell row right below row k
        new_rows = list(rows)
        new_rows[r - 1] = rows[r - 1][:-1]
        new_rows.insert(k, (v,))
        if not new_rows[r - 1]:
            raise ValueError("source row emptied while opening a new row")
        perm = swap_values(embed(sigma, ell + 1), k)
    else:
        q = sigma[r - 1]
        p = sigma.index(q + 1) + 1
        new_rows = list(rows)
        new_rows[r - 1] = rows[r - 1][:-1]
        new_rows[p - 1] = rows[p - 1] + (v,)
        perm = swap_values(sigma, q)
        if not new_rows[r - 1]:
            del new_rows[r - 1]
            perm = delete_fixed_point(perm, r)
    rows_out = tuple(new_rows)
    return Pair(pair.kind, thc_from_perm(shape_of(rows_out), perm), rows_out)


# -- theta on E \ D ---------------------------------------------------------


def theta_selection(rows: Rows) -> tuple[int, int]:
    """(row t, column i) of the acting bad cell: leftmost bad column, then
    the largest row with a bad cell in it."""
    cells = bad_cells(rows)
    if not cells:
        raise ValueError("theta needs a bad cell")
    i = min(j for (_, j) in cells)
    t = max(r for (r, j) in cells if j == i)
    return t, i


def theta(pair: Pair) -> Pair:
    """Swap the cell blocks right of the bad column between rows t-1 and t,
    and swap the same two positions of the permutation (right to left)."""
    t, i = theta_selection(pair.tableau)
    rows = pair.tableau
    above = rows[t - 2]
    row = rows[t - 1]
    new_above = above[: i - 1] + row[i:]
    new_row = row[:i] + above[i - 1 :]
    new_rows = rows[: t - 2] + (new_above, new_row) + rows[t:]
    covering = thc_from_perm(
        shape_of(new_rows), swap_positions(pair.thc.perm, t - 1)
    )
    return Pair(pair.kind, covering, new_rows)


# -- rho on D ---------------------------------------------------------------


def pair_indices(pair: Pair) -> tuple[IntSeq, IntSeq]:
    """(lam, mu) for a D/E pair: the covering content's partition
    rearrangement and the tableau's content vector."""
    lam = dec(pair.thc.content())
    rows = pair.tableau
    mu = content_vector(rows, max(max(row) for row in rows))
    return lam, mu


def rho(pair: Pair, max_steps: int | None = None) -> tuple[Pair, Trace]:
    """Alternate ``psi`` and ``theta`` until ``psi`` lands back in D.

    Fixed exactly when lam = mu.  The default iteration cap is four times
    the ambient E set; exceeding it can only mean a structural bug, since
    the alternating walk provably terminates.
    """
    lam, mu = pair_indices(pair)
    if lam == mu:
        return pair, Trace((pair,), ())
    if max_steps is None:
        max_steps = 4 * len(enumerate_pairs("E", lam, mu))
    pairs = [pair]
    maps: list[str] = []
    current = pair
    while True:
        current = psi(current)
        pairs.append(current)
        maps.append("psi")
        if not bad_cells(current.tableau):
            return current, Trace(tuple(pairs), tuple(maps))
        current = theta(current)
        pairs.append(current)
        maps.append("theta")
        if len(maps) > max_steps:
            raise RuntimeError(
                f"alternating walk exceeded {max_steps} steps; structural bug"
            )


# -- exhaustive verification -------------------------------------------------


@dataclass
class InvolutionReport:
    kind: str
    map_name: str
    degree: int
    index_pairs: int = 0
    pairs_checked: int = 0
    fixed_points: int = 0
    max_walk: int = 0
    violations: list[str] = None  # type: ignore[assignment]

    def __post_init__(self) -> None:
        if self.violations is None:
            self.violations = []

    @property
    def ok(self) -> bool:
        return not self.violations


_MAPS: dict[str, tuple[str, Callable[[Pair], Pair]]] = {
    "phi": ("A", phi),
    "chi": ("B", chi),
    "psi": ("C", psi),
    "rho": ("D", rho),  # type: ignore[dict-item]
}


def _apply(map_name: str, pair: Pair) -> Pair:
    if map_name == "rho":
        return rho(pair)[0]
    return _MAPS[map_name][1](pair)


def verify_involution(map_name: str, n: int, degrees_up_to: bool = True) -> InvolutionReport:
    """Exhaustively check one map over every index pair at degree <= n.

    Checks: the map is an involution, reverses the covering's sign off its
    fixed points, fixes exactly the diagonal pairs (which carry sign +1 and
    are unique), and that the signed pair count is the Kronecker delta.
    """
    if map_name not in _MAPS:
        raise ValueError(f"unknown map {map_name!r}")
    kind = _MAPS[map_name][0]
    report = InvolutionReport(kind=kind, map_name=map_name, degree=n)
    degrees = range(1, n + 1) if degrees_up_to else [n]
    for degree in degrees:
        if kind in ("A", "C"):
            indices = compositions_of(degree)
        else:
            indices = partitions_of(degree)
        for left in indices:
            for right in indices:
                _verify_cell(report, kind, map_name, left, right)
                if report.violations:
                    return report
    return report


def _verify_cell(
    report: InvolutionReport, kind: str, map_name: str, left: IntSeq, right: IntSeq
) -> None:
    pairs = enumerate_pairs(kind, left, right)
    report.index_pairs += 1
    signed = 0
    complain = report.violations.append
    for pair in pairs:
        report.pairs_checked += 1
        signed += pair.thc.sign()
        if map_name == "rho":
            image, trace = rho(pair)
            report.max_walk = max(report.max_walk, len(trace.maps))
            back, _ = rho(image)
        else:
            image = _apply(map_name, pair)
            back = _apply(map_name, image)
        if back != pair:
            complain(f"{map_name} is not an involution at {left},{right}: {pair}")
            return
        if image == pair:
            report.fixed_points += 1
            if left != right:
                complain(f"off-diagonal fixed point at {left},{right}: {pair}")
                return
            if pair.thc.sign() != 1:
                complain(f"fixed point of negative sign at {left}: {pair}")
                return
        elif image.thc.sign() != -pair.thc.sign():
            complain(f"{map_name} failed to reverse sign at {left},{right}: {pair}")
            return
    expected = 1 if left == right else 0
    if signed != expected:
        complain(f"signed sum over {kind}[{left},{right}] is {signed}, want {expected}")
        return
    if left == right and len(pairs) != 1:
        complain(f"diagonal set {kind}[{left},{left}] has {len(pairs)} pairs, want 1")


def clear_caches() -> None:
    enumerate_pairs.cache_clear()
