"""The sign-reversing involutions, replayed step by step on worked pairs.

Each map acts on a pair (tableau, hook covering) matched through the
covering's weight sequence, flips the covering's sign, and undoes itself
when applied twice.  The last section runs the alternating walk that
resolves pairs whose tableau side fails column-strictness.
"""

from kostka import involutions as inv
from kostka.render import render_pair, render_trace
from kostka.tunnelhooks import thc_from_perm

###############################################################################
# phi: the immaculate-tableau map.  In each row pick the entry whose image
# under the covering's permutation is largest; the first row where that
# image escapes the row number gets one entry rewritten, and the
# permutation absorbs an adjacent transposition.

pair = inv.Pair(
    "A",
    thc_from_perm((4, 3, 4, 3, 1, 5), (1, 2, 4, 3, 6, 5)),
    ((1, 1, 1, 1), (2, 2, 2), (3, 3, 3, 3, 3, 4, 6), (4, 5, 5, 6, 6, 6)),
)
print("phi input:")
print(render_pair(pair))
image = inv.phi(pair)
print("\nphi output (one 6 in row 3 became a 3):")
print(render_pair(image))
assert inv.phi(image) == pair
print("\napplying phi again restores the input ✓")

###############################################################################
# chi: the column-strict variant.  Lower the leftmost maximal entry of the
# selected row, then exchange the multiplicities of the two touched values
# everywhere.

pair = inv.Pair(
    "B",
    thc_from_perm((6, 5, 3, 2, 2, 2), (1, 2, 4, 5, 3, 6)),
    ((1, 1, 1, 1, 1, 1), (2, 2, 2, 2, 2), (4, 4, 4, 4, 5), (5, 5, 6, 6)),
)
image = inv.chi(pair)
print("\nchi moves row 3 from", pair.tableau[2], "to", image.tableau[2])
assert inv.chi(image) == pair

###############################################################################
# psi: pairs sharing a common shape.  One cell's worth of the moving value
# migrates between rows; the shape can gain a one-cell row or lose a row.

move = inv.Pair(
    "C",
    thc_from_perm((4, 3, 4), (3, 2, 1)),
    ((1, 1, 2, 6), (2, 3, 5), (4, 4, 6, 6)),
)
print("\npsi input shape ", move.thc.shape)
print("psi output shape", inv.psi(move).thc.shape, "(a cell moved up)")

grow = inv.Pair(
    "C",
    thc_from_perm((4, 3, 3, 2, 3), (2, 1, 3, 4, 5)),
    ((1, 1, 2, 2), (2, 3, 5), (4, 6, 6), (7, 7), (8, 8, 8)),
)
print("psi can also open a one-cell row:", inv.psi(grow).thc.shape)

###############################################################################
# rho: alternate psi with the block swap theta until the tableau side is
# column-strict again.  The walk below takes nine steps.

story = inv.Pair(
    "D",
    thc_from_perm((4, 2, 2), (2, 1, 3)),
    ((1, 1, 4, 4), (2, 2), (3, 3)),
)
result, trace = inv.rho(story)
print(f"\nrho walk: {len(trace.maps)} steps ({' '.join(trace.maps)})\n")
print(render_trace(trace))
assert inv.rho(result)[0] == story
print("\nwalking back from the output returns the input ✓")
