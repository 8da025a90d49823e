"""Hook coverings of composition diagrams and their permutation encoding.

A covering assigns to each row r of a diagram a "tunnel hook": the blue and
red cells of row r in a stage-wise colored diagram (or one purple cell when
there are none), together with every boundary cell of the rows the hook
passes through on its way down to a terminal cell.  Coverings of a shape of
length l are in bijection with permutations of {1..l}: hook r terminates on
the diagonal sigma(r), and the sign of the covering is the sign of sigma.

The canonical representation of a covering is the (shape, permutation) pair;
the colored-diagram geometry is replayed on demand.  Replaying keeps the
expensive part out of enumeration loops while still exercising the full
construction for validation and rendering.

Cells are 1-based (row, column) pairs; the diagonal of a cell (r, c) is
r - c + 1.  Column 0 acts as an implicit grey wall, so the leftmost non-grey
cell of every row is a legal terminal cell.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import Sequence

from .core import (
    IntSeq,
    Perm,
    cycle_to_perm,
    embed,
    flatten,
    is_composition,
    is_perm,
    perm_compose,
    perm_sign,
)

Cell = tuple[int, int]


def diagonal(cell: Cell) -> int:
    r, c = cell
    return r - c + 1


@dataclass(frozen=True)
class GBPRDiagram:
    """A stage of the colored construction: shape plus grey profile.

    Row i holds nu[i] grey cells; right of them sit blue cells (row still
    has cells to place), or red cells (the grey overshoots the row), and
    purple cells fill the rest of the row out to infinity.  Shape entries
    may be zero or negative in intermediate stages.
    """

    shape: IntSeq
    nu: IntSeq

    def __post_init__(self) -> None:
        if len(self.shape) != len(self.nu):
            raise ValueError("shape and grey profile lengths differ")
        if any(g < 0 for g in self.nu):
            raise ValueError("grey profile entries must be >= 0")

    def __len__(self) -> int:
        return len(self.shape)

    def row_spans(self, i: int) -> tuple[int, int, int]:
        """(grey end, blue end, red end) column bounds for row i (1-based)."""
        a = self.shape[i - 1]
        g = self.nu[i - 1]
        if a > 0 and g <= a:
            return g, a, a
        return g, g, 2 * g - a

    def color(self, i: int, j: int) -> str:
        """Color letter G/B/R/P of cell (i, j), j >= 1."""
        if not 1 <= i <= len(self):
            raise ValueError(f"row {i} out of range")
        if j < 1:
            raise ValueError("columns are 1-based")
        grey_end, blue_end, red_end = self.row_spans(i)
        if j <= grey_end:
            return "G"
        if j <= blue_end:
            return "B"
        if j <= red_end:
            return "R"
        return "P"

    def is_grey(self, r: int, c: int) -> bool:
        if c == 0:
            return True
        return 1 <= r <= len(self) and 1 <= c <= self.nu[r - 1]


def gbpr(a: Sequence[int], nu: Sequence[int]) -> GBPRDiagram:
    """Colored diagram of shape ``a`` over grey profile ``nu``."""
    return GBPRDiagram(tuple(a), tuple(nu))


def partial_gbpr(a: Sequence[int], nu: Sequence[int], r: int) -> GBPRDiagram:
    """The diagram restricted to rows r.., kept in place (top rows empty)."""
    if not 1 <= r <= len(a) + 1:
        raise ValueError(f"row {r} out of range")
    blank = (0,) * (r - 1)
    return GBPRDiagram(blank + tuple(a[r - 1 :]), blank + tuple(nu[r - 1 :]))


def boundary_cells(diagram: GBPRDiagram, i: int) -> list[Cell]:
    """Non-grey cells of row i adjacent (8 directions) to grey or the wall.

    These form one contiguous run starting at the first non-grey cell.
    """
    cells: list[Cell] = []
    c = diagram.nu[i - 1] + 1
    while True:
        adjacent = any(
            diagram.is_grey(rr, cc)
            for rr in (i - 1, i, i + 1)
            for cc in (c - 1, c, c + 1)
            if (rr, cc) != (i, c)
        )
        if not adjacent:
            break
        cells.append((i, c))
        c += 1
    return cells


def available_terminals(diagram: GBPRDiagram, r: int) -> list[Cell]:
    """Legal terminal cells for a hook starting in row r: one per end row.

    The terminal in row p is the leftmost non-grey cell (p, nu_p + 1); its
    left neighbor is grey (or the wall).  The terminals occupy distinct
    diagonals, which is what makes the permutation encoding possible.
    """
    ell = len(diagram)
    if not 1 <= r <= ell:
        raise ValueError(f"row {r} out of range")
    terminals = [(p, diagram.nu[p - 1] + 1) for p in range(r, ell + 1)]
    diags = [diagonal(t) for t in terminals]
    if len(set(diags)) != len(diags):
        raise ValueError(f"grey profile {diagram.nu} puts two terminals on one diagonal")
    return terminals


@dataclass(frozen=True)
class TunnelHook:
    start_row: int
    end_row: int
    terminal: Cell
    cells: tuple[Cell, ...]
    red_in_start_row: int
    purple_in_start_row: int
    delta: int

    @property
    def sign(self) -> int:
        return -1 if (self.end_row - self.start_row) % 2 else 1


def _hook_at(diagram: GBPRDiagram, r: int, p: int) -> TunnelHook:
    """The hook starting in row r and ending in row p at the current stage."""
    grey_end, blue_end, red_end = diagram.row_spans(r)
    span_end = max(blue_end, red_end)
    row_cells = [(r, c) for c in range(grey_end + 1, span_end + 1)]
    red = max(0, red_end - blue_end)
    purple = 0
    if not row_cells:
        row_cells = [(r, grey_end + 1)]
        purple = 1
    cells = list(row_cells)
    for i in range(r + 1, p + 1):
        cells.extend(boundary_cells(diagram, i))
    terminal = (p, diagram.nu[p - 1] + 1)
    if terminal not in cells:
        raise ValueError(f"hook from row {r} to row {p} does not reach {terminal}")
    delta = len(cells) - 2 * red - purple
    return TunnelHook(
        start_row=r,
        end_row=p,
        terminal=terminal,
        cells=tuple(cells),
        red_in_start_row=red,
        purple_in_start_row=purple,
        delta=delta,
    )


@dataclass(frozen=True)
class TunnelHookCovering:
    """A covering in canonical (shape, permutation) form."""

    shape: IntSeq
    perm: Perm

    def __post_init__(self) -> None:
        if not is_composition(self.shape):
            raise ValueError(f"shape {self.shape} is not a composition")
        if len(self.shape) != len(self.perm):
            raise ValueError("shape and permutation lengths differ")
        if not is_perm(self.perm):
            raise ValueError(f"{self.perm} is not a permutation")

    def delta(self) -> IntSeq:
        """Per-row weights: delta_i = shape_i + perm_i - i.  May be negative."""
        return tuple(
            self.shape[i] + self.perm[i] - (i + 1) for i in range(len(self.shape))
        )

    def content(self) -> IntSeq:
        """The zero-stripped weight sequence; errors when a weight is negative."""
        return flatten(self.delta())

    def sign(self) -> int:
        return perm_sign(self.perm)

    def hooks(self) -> tuple[TunnelHook, ...]:
        return replay_hooks(self.shape, self.perm)


def thc_from_perm(shape: Sequence[int], perm: Sequence[int]) -> TunnelHookCovering:
    """The unique covering of the given shape with the given permutation."""
    return TunnelHookCovering(tuple(shape), tuple(perm))


@lru_cache(maxsize=None)
def replay_hooks(shape: IntSeq, perm: Perm) -> tuple[TunnelHook, ...]:
    """Run the stage-wise construction, hook by hook, for (shape, perm).

    Each stage consumes the hook whose terminal lies on diagonal perm[r];
    the cell-wise weight of every hook is checked against the closed form
    shape_r + perm_r - r, so a geometry bug cannot pass silently.
    """
    ell = len(shape)
    nu = [0] * ell
    hooks: list[TunnelHook] = []
    for r in range(1, ell + 1):
        diagram = GBPRDiagram(shape, tuple(nu))
        target = perm[r - 1]
        p = next(
            (cand for cand in range(r, ell + 1) if cand - nu[cand - 1] == target),
            None,
        )
        if p is None:
            raise ValueError(
                f"no available terminal on diagonal {target} at stage {r} of {shape}"
            )
        hook = _hook_at(diagram, r, p)
        expected = shape[r - 1] + perm[r - 1] - r
        if hook.delta != expected:
            raise ValueError(
                f"cell-wise weight {hook.delta} of hook {r} disagrees with "
                f"{expected} for shape {shape}, perm {perm}"
            )
        for i, _ in hook.cells:
            nu[i - 1] += 1
        hooks.append(hook)
    return tuple(hooks)


def build_thc(
    shape: Sequence[int], terminals: Sequence[Cell]
) -> tuple[TunnelHookCovering, tuple[TunnelHook, ...]]:
    """Build a covering from explicit terminal-cell choices, stage by stage.

    Every choice is validated against the terminals available at its stage.
    """
    shape = tuple(shape)
    ell = len(shape)
    if len(terminals) != ell:
        raise ValueError("one terminal choice per row is required")
    nu = [0] * ell
    hooks: list[TunnelHook] = []
    perm: list[int] = []
    for r, choice in enumerate(terminals, start=1):
        diagram = GBPRDiagram(shape, tuple(nu))
        legal = available_terminals(diagram, r)
        if tuple(choice) not in legal:
            raise ValueError(f"illegal terminal {choice} at stage {r}; legal: {legal}")
        p = choice[0]
        hook = _hook_at(diagram, r, p)
        perm.append(diagonal(hook.terminal))
        for i, _ in hook.cells:
            nu[i - 1] += 1
        hooks.append(hook)
    covering = TunnelHookCovering(shape, tuple(perm))
    for hook, d in zip(hooks, covering.delta()):
        if hook.delta != d:
            raise ValueError("cell-wise weights disagree with the closed form")
    return covering, tuple(hooks)


def perm_of_thc(covering: TunnelHookCovering) -> Perm:
    """Read the permutation off the replayed geometry: terminal diagonals."""
    return tuple(diagonal(h.terminal) for h in covering.hooks())


@lru_cache(maxsize=None)
def delta_choices(shape: IntSeq) -> tuple[tuple[Perm, IntSeq], ...]:
    """All (perm, delta) pairs of the shape with componentwise delta >= 0.

    Backtracks with the bound perm_r >= r - shape_r instead of filtering all
    of S_l; the survivors are exactly the coverings that carry a content.
    Ordered lexicographically by permutation.
    """
    ell = len(shape)
    out: list[tuple[Perm, IntSeq]] = []
    used = [False] * (ell + 1)
    sigma: list[int] = []

    def dfs(r: int) -> None:
        if r > ell:
            perm = tuple(sigma)
            out.append((perm, tuple(shape[i] + perm[i] - (i + 1) for i in range(ell))))
            return
        for v in range(max(1, r - shape[r - 1]), ell + 1):
            if used[v]:
                continue
            used[v] = True
            sigma.append(v)
            dfs(r + 1)
            sigma.pop()
            used[v] = False

    dfs(1)
    return tuple(out)


def enumerate_thc(
    content: Sequence[int], shape: Sequence[int]
) -> list[tuple[TunnelHookCovering, int]]:
    """All coverings of the given shape whose content is exactly ``content``.

    Coverings whose weight sequence has a negative entry carry no content
    and are skipped.  Backtracking forces the nonzero weights to match the
    target content in order, which prunes hard.
    """
    content = tuple(content)
    shape = tuple(shape)
    if not is_composition(content) or not is_composition(shape):
        raise ValueError("content and shape must be compositions")
    if sum(content) != sum(shape):
        raise ValueError("content and shape have different totals")
    ell = len(shape)
    out: list[TunnelHookCovering] = []
    used = [False] * (ell + 1)
    sigma: list[int] = []

    def dfs(r: int, k: int) -> None:
        if r > ell:
            if k == len(content):
                out.append(TunnelHookCovering(shape, tuple(sigma)))
            return
        for v in range(max(1, r - shape[r - 1]), ell + 1):
            if used[v]:
                continue
            d = shape[r - 1] + v - r
            if d == 0:
                k2 = k
            elif k < len(content) and content[k] == d:
                k2 = k + 1
            else:
                continue
            used[v] = True
            sigma.append(v)
            dfs(r + 1, k2)
            sigma.pop()
            used[v] = False

    dfs(1, 0)
    return [(t, t.sign()) for t in out]


def perm_cycles_thc(covering: TunnelHookCovering) -> list[tuple[int, ...]]:
    """One descending cycle per hook: end row down to start row.

    Multiplying the cycles in row order (rightmost applied first)
    reproduces the covering's permutation.
    """
    return [
        tuple(range(h.end_row, h.start_row - 1, -1)) for h in covering.hooks()
    ]


def _truncated_terminal(hook: TunnelHook, k: int) -> Cell:
    """Terminal of the hook after rows below k are cut: leftmost cell in its last surviving row."""
    row = min(hook.end_row, k)
    col = min(c for (r, c) in hook.cells if r == row)
    return (row, col)


def truncate_thc(covering: TunnelHookCovering, k: int) -> TunnelHookCovering:
    """The covering of the first k rows obtained by cutting rows below k."""
    if not 1 <= k <= len(covering.shape):
        raise ValueError(f"row count {k} out of range")
    hooks = covering.hooks()
    perm = tuple(diagonal(_truncated_terminal(hooks[i], k)) for i in range(k))
    return TunnelHookCovering(covering.shape[:k], perm)


def perm_incremental(covering: TunnelHookCovering, k: int) -> Perm:
    """Permutation of the k-row truncation, built row by row.

    Appending row j multiplies on the left by the increasing cycle of the
    diagonals of the terminal cells sitting in row j of the truncation.
    """
    if not 1 <= k <= len(covering.shape):
        raise ValueError(f"row count {k} out of range")
    hooks = covering.hooks()
    perm: Perm = ()
    for j in range(1, k + 1):
        ds = sorted(
            diagonal(_truncated_terminal(hooks[i - 1], j))
            for i in range(1, j + 1)
            if min(hooks[i - 1].end_row, j) == j
        )
        perm = perm_compose(cycle_to_perm(ds, j), embed(perm, j))
    return perm


def clear_caches() -> None:
    replay_hooks.cache_clear()
    delta_choices.cache_clear()
