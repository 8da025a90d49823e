"""ASCII and TikZ drawings of diagrams, tableaux, coverings, and walks.

ASCII output is deterministic, so drawings can serve as regression
fixtures.  TikZ output follows the same drawing conventions as the ASCII
forms (rows growing downward, hooks as rounded overlays); styling is
intentionally minimal.
"""

from __future__ import annotations

from typing import Sequence

from .involutions import Pair, Trace
from .rimhooks import SpecialRimHookTableau
from .tableaux import Rows
from .tunnelhooks import GBPRDiagram, TunnelHookCovering

Cell = tuple[int, int]


def render_diagram(shape: Sequence[int]) -> str:
    """Grid of (row, column) coordinates, one diagram row per line."""
    return "\n".join(
        "".join(f"({i},{j})" for j in range(1, shape[i - 1] + 1))
        for i in range(1, len(shape) + 1)
    )


def render_tableau(rows: Rows) -> str:
    width = max((len(str(v)) for row in rows for v in row), default=1)
    return "\n".join(" ".join(str(v).rjust(width) for v in row) for row in rows)


def render_gbpr(diagram: GBPRDiagram) -> str:
    """Color letters per cell, out to one purple column past every span."""
    extent = 1
    for i in range(1, len(diagram) + 1):
        extent = max(extent, max(diagram.row_spans(i)) + 1)
    return "\n".join(
        "".join(diagram.color(i, j) for j in range(1, extent + 1))
        for i in range(1, len(diagram) + 1)
    )


def _hook_labels(covering: TunnelHookCovering) -> dict[Cell, int]:
    labels: dict[Cell, int] = {}
    for index, hook in enumerate(covering.hooks(), start=1):
        for cell in hook.cells:
            labels[cell] = index
    return labels


def render_thc(covering: TunnelHookCovering) -> str:
    """Each consumed cell shows its hook number; cells past the end of
    their diagram row are marked with a trailing apostrophe."""
    labels = _hook_labels(covering)
    shape = covering.shape
    n_rows = max(r for r, _ in labels)
    width = len(str(len(shape))) + 2  # room for the out-of-row mark
    lines = [
        f"shape={_fmt(shape)} perm={_fmt(covering.perm)} delta={_fmt(covering.delta())}"
    ]
    for i in range(1, n_rows + 1):
        cols = [c for (r, c) in labels if r == i]
        row_len = shape[i - 1] if i <= len(shape) else 0
        tokens = []
        for j in range(1, max(cols, default=0) + 1):
            if (i, j) in labels:
                mark = "'" if j > row_len else ""
                tokens.append((str(labels[(i, j)]) + mark).rjust(width))
            else:
                tokens.append("." .rjust(width))
        lines.append("".join(tokens).rstrip())
    return "\n".join(lines)


def render_srht(tableau: SpecialRimHookTableau) -> str:
    lines = [f"shape={_fmt(tableau.shape)}"]
    labels: dict[Cell, int] = {}
    for index, path in enumerate(tableau.hooks, start=1):
        for cell in path:
            labels[cell] = index
    width = len(str(len(tableau.hooks))) + 1
    for i in range(1, len(tableau.shape) + 1):
        lines.append(
            "".join(
                str(labels[(i, j)]).rjust(width)
                for j in range(1, tableau.shape[i - 1] + 1)
            )
        )
    return "\n".join(lines)


def render_pair(pair: Pair) -> str:
    return "\n".join(
        [
            f"[{pair.kind}-pair]",
            render_tableau(pair.tableau),
            render_thc(pair.thc),
        ]
    )


def render_trace(trace: Trace) -> str:
    panels = [render_pair(trace.pairs[0])]
    for map_name, pair in zip(trace.maps, trace.pairs[1:]):
        panels.append(f"--{map_name}-->")
        panels.append(render_pair(pair))
    return "\n".join(panels)


def _fmt(seq: Sequence[int]) -> str:
    return "(" + ",".join(map(str, seq)) + ")"


# -- TikZ --------------------------------------------------------------------


def _tikz_grid(shape: Sequence[int], entries: Rows | None = None) -> list[str]:
    lines = []
    for i in range(1, len(shape) + 1):
        for j in range(1, shape[i - 1] + 1):
            lines.append(
                f"\\draw ({j - 0.5},{i - 0.5}) rectangle ({j + 0.5},{i + 0.5});"
            )
            if entries is not None:
                lines.append(f"\\node at ({j},{i}) {{{entries[i - 1][j - 1]}}};")
    return lines


def _tikz_wrap(body: list[str]) -> str:
    return "\n".join(
        ["\\begin{tikzpicture}[yscale=-1,scale=.55]", *body, "\\end{tikzpicture}"]
    )


def tikz_diagram(shape: Sequence[int]) -> str:
    return _tikz_wrap(_tikz_grid(shape))


def tikz_tableau(rows: Rows) -> str:
    return _tikz_wrap(_tikz_grid([len(r) for r in rows], rows))


def _tikz_hook_overlays(paths: Sequence[Sequence[Cell]]) -> list[str]:
    lines = ["\\begin{scope}[on background layer]"]
    lines.append(
        "\\tikzset{every path/.style={line width=7pt,color=black,"
        "line cap=round,opacity=.15,rounded corners}}"
    )
    for path in paths:
        points = "--".join(f"({c},{r})" for (r, c) in path)
        if len(path) == 1:
            ((r, c),) = path
            points = f"({c - 0.25},{r})--({c + 0.25},{r})"
        lines.append(f"\\draw {points};")
    lines.append("\\end{scope}")
    return lines


def tikz_thc(covering: TunnelHookCovering) -> str:
    body = _tikz_grid(covering.shape)
    body += _tikz_hook_overlays([h.cells for h in covering.hooks()])
    return _tikz_wrap(body)


def tikz_srht(tableau: SpecialRimHookTableau) -> str:
    body = _tikz_grid(tableau.shape)
    body += _tikz_hook_overlays(tableau.hooks)
    return _tikz_wrap(body)


def tikz_pair(pair: Pair) -> str:
    body = _tikz_grid(pair.thc.shape, None)
    for i, row in enumerate(pair.tableau, start=1):
        for j, v in enumerate(row, start=1):
            body.append(f"\\node at ({j},{i}) {{{v}}};")
    body += _tikz_hook_overlays([h.cells for h in pair.thc.hooks()])
    return _tikz_wrap(body)


def render_object(value, fmt: str = "ascii") -> str:
    """Dispatch renderer used by the command line."""
    if fmt == "ascii":
        if isinstance(value, TunnelHookCovering):
            return render_thc(value)
        if isinstance(value, SpecialRimHookTableau):
            return render_srht(value)
        if isinstance(value, Pair):
            return render_pair(value)
        if isinstance(value, Trace):
            return render_trace(value)
        if isinstance(value, tuple) and value and all(
            isinstance(r, tuple) for r in value
        ):
            return render_tableau(value)
        if isinstance(value, tuple):
            return render_diagram(value)
        raise ValueError(f"cannot render {type(value).__name__}")
    if fmt == "tikz":
        if isinstance(value, TunnelHookCovering):
            return tikz_thc(value)
        if isinstance(value, SpecialRimHookTableau):
            return tikz_srht(value)
        if isinstance(value, Pair):
            return tikz_pair(value)
        if isinstance(value, tuple) and value and all(
            isinstance(r, tuple) for r in value
        ):
            return tikz_tableau(value)
        if isinstance(value, tuple):
            return tikz_diagram(value)
        raise ValueError(f"cannot render {type(value).__name__} as TikZ")
    raise ValueError(f"unknown format {fmt!r}")
