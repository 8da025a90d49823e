"""Canonical JSON encodings for every object the package exchanges.

Schemas (all keys sorted, compact separators, so serialization is
byte-stable):

* covering:  {"kind": "thc", "shape": [...], "perm": [...]}
* tableau:   {"kind": "tableau", "shape": [...], "rows": [[...], ...]}
* rim hooks: {"kind": "srht", "shape": [...], "hooks": [[[i, j], ...], ...]}
* pair:      {"setKind": "A".."E", "left": ..., "right": ...}; the tableau
  sits on the left for A/B and on the right for C/D/E
* trace:     {"kind": "trace", "maps": [...], "pairs": [...]}
* matrix:    {"kind": "matrix", "degree": n, "indexKind": ...,
              "labels": [[...], ...], "entries": [[...], ...]}

Compositions and permutations are plain integer arrays.
"""

from __future__ import annotations

import json
from typing import Any

from .involutions import Pair, Trace
from .matrices import TransitionMatrix
from .rimhooks import SpecialRimHookTableau
from .tableaux import Rows, shape_of
from .tunnelhooks import TunnelHookCovering


def thc_to_obj(covering: TunnelHookCovering) -> dict:
    return {"kind": "thc", "shape": list(covering.shape), "perm": list(covering.perm)}


def tableau_to_obj(rows: Rows) -> dict:
    return {
        "kind": "tableau",
        "shape": list(shape_of(rows)),
        "rows": [list(row) for row in rows],
    }


def srht_to_obj(tableau: SpecialRimHookTableau) -> dict:
    return {
        "kind": "srht",
        "shape": list(tableau.shape),
        "hooks": [[list(cell) for cell in path] for path in tableau.hooks],
    }


def pair_to_obj(pair: Pair) -> dict:
    thc_obj = thc_to_obj(pair.thc)
    tab_obj = tableau_to_obj(pair.tableau)
    if pair.kind in ("A", "B"):
        left, right = tab_obj, thc_obj
    else:
        left, right = thc_obj, tab_obj
    return {"setKind": pair.kind, "left": left, "right": right}


def trace_to_obj(trace: Trace) -> dict:
    return {
        "kind": "trace",
        "maps": list(trace.maps),
        "pairs": [pair_to_obj(p) for p in trace.pairs],
    }


def matrix_to_obj(matrix: TransitionMatrix) -> dict:
    return {
        "kind": "matrix",
        "degree": matrix.degree,
        "indexKind": matrix.index_kind,
        "labels": [list(label) for label in matrix.labels],
        "entries": [list(row) for row in matrix.entries],
    }


def matrix_to_csv(matrix: TransitionMatrix) -> str:
    """Labeled header row, then integer entries row-major."""
    header = ";".join("(" + ",".join(map(str, label)) + ")" for label in matrix.labels)
    lines = [header]
    lines.extend(",".join(map(str, row)) for row in matrix.entries)
    return "\n".join(lines)


def parse_object(data: Any):
    """Typed object from a parsed JSON value; dispatches on the kind tag."""
    if isinstance(data, list):
        return tuple(int(x) for x in data)  # bare composition or permutation
    if not isinstance(data, dict):
        raise ValueError(f"cannot parse {data!r}")
    if "setKind" in data:
        kind = data["setKind"]
        left = parse_object(data["left"])
        right = parse_object(data["right"])
        if kind in ("A", "B"):
            tableau, covering = left, right
        elif kind in ("C", "D", "E"):
            covering, tableau = left, right
        else:
            raise ValueError(f"unknown pair family {kind!r}")
        if not isinstance(covering, TunnelHookCovering):
            raise ValueError("pair is missing its covering side")
        return Pair(kind, covering, tableau)
    kind = data.get("kind")
    if kind == "thc":
        return TunnelHookCovering(tuple(data["shape"]), tuple(data["perm"]))
    if kind == "tableau":
        rows = tuple(tuple(int(v) for v in row) for row in data["rows"])
        if "shape" in data and tuple(data["shape"]) != shape_of(rows):
            raise ValueError("tableau shape field disagrees with its rows")
        return rows
    if kind == "srht":
        hooks = tuple(
            tuple((int(r), int(c)) for r, c in path) for path in data["hooks"]
        )
        return SpecialRimHookTableau(tuple(data["shape"]), hooks)
    if kind == "trace":
        pairs = tuple(parse_object(p) for p in data["pairs"])
        return Trace(pairs, tuple(data["maps"]))
    if kind == "matrix":
        return TransitionMatrix(
            int(data["degree"]),
            data["indexKind"],
            tuple(tuple(label) for label in data["labels"]),
            tuple(tuple(int(x) for x in row) for row in data["entries"]),
        )
    raise ValueError(f"unknown object kind {kind!r}")


def to_obj(value: Any) -> Any:
    """JSON-ready form of any package object (tableaux are rows tuples)."""
    if isinstance(value, TunnelHookCovering):
        return thc_to_obj(value)
    if isinstance(value, SpecialRimHookTableau):
        return srht_to_obj(value)
    if isinstance(value, Pair):
        return pair_to_obj(value)
    if isinstance(value, Trace):
        return trace_to_obj(value)
    if isinstance(value, TransitionMatrix):
        return matrix_to_obj(value)
    if isinstance(value, tuple) and value and all(isinstance(r, tuple) for r in value):
        return tableau_to_obj(value)
    if isinstance(value, tuple):
        return list(value)
    raise ValueError(f"cannot serialize {type(value).__name__}")


def dumps(value: Any) -> str:
    """Canonical JSON: sorted keys, no whitespace; byte-stable."""
    return json.dumps(to_obj(value), sort_keys=True, separators=(",", ":"))


def loads(text: str):
    return parse_object(json.loads(text))
