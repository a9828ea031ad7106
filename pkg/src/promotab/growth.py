"""Growth windows: chain encodings of promotion orbits.

A tableau is encoded by its multichain of Ferrers diagrams (the shapes of
entries <= j).  Writing the chains of successive promotions in rows, each
row offset one column right of the previous, produces a window whose
columns are again multichains; reading a column bottom to top decodes the
evacuation of the row it crosses.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass

from .dynamics import evacuate, promote
from .errors import PreconditionError
from .shapes import Box, Partition, Tableau, contains, enumerate_ssyt, part

Multiset = tuple[int, ...]


@dataclass(frozen=True)
class ChainEncoding:
    """The multichain of shapes (entries <= j) for j = 0 .. ceiling."""

    diagrams: tuple[Partition, ...]

    @property
    def ceiling(self) -> int:
        return len(self.diagrams) - 1


@dataclass(frozen=True)
class GrowthWindow:
    """Rows of chain encodings; row r encodes the r-th promotion of row 0.

    Row r occupies global columns r .. r+ceiling (each row is shifted one
    column right of the row above), so global column C meets row r at
    chain index C - r.
    """

    rows: tuple[ChainEncoding, ...]
    ceiling: int

    @property
    def height(self) -> int:
        return len(self.rows)

    def diagram_at(self, row: int, index: int) -> Partition:
        if not (0 <= row < self.height and 0 <= index <= self.ceiling):
            raise PreconditionError(f"position (row={row}, index={index}) outside the window")
        return self.rows[row].diagrams[index]


def encode_chain(t: Tableau) -> ChainEncoding:
    """Encode a straight tableau as its multichain of subshapes."""
    if not t.is_straight:
        raise PreconditionError("chain encoding requires a straight shape")
    diagrams = []
    for j in range(t.ceiling + 1):
        shape = tuple(sum(1 for v in row if v <= j) for row in t.rows)
        diagrams.append(tuple(p for p in shape if p > 0))
    return ChainEncoding(tuple(diagrams))


def decode_chain(chain: ChainEncoding) -> Tableau:
    """Rebuild the tableau from a multichain of shapes."""
    diagrams = chain.diagrams
    if not diagrams or diagrams[0] != ():
        raise PreconditionError("chain must start at the empty shape")
    outer = diagrams[-1]
    nrows = len(outer)
    rows: list[list[int]] = [[] for _ in range(nrows)]
    for j in range(1, len(diagrams)):
        prev, cur = diagrams[j - 1], diagrams[j]
        if not contains(cur, prev):
            raise PreconditionError(f"not a multichain: {prev} not contained in {cur}")
        for r in range(1, nrows + 1):
            rows[r - 1].extend([j] * (part(cur, r) - part(prev, r)))
    return Tableau(tuple(tuple(row) for row in rows), chain.ceiling)


def build_window(t: Tableau, height: int) -> GrowthWindow:
    """Chain encodings of t, P(t), P^2(t), ... as the rows of a window."""
    if height < t.ceiling + 1:
        raise PreconditionError(f"window height {height} below ceiling+1 = {t.ceiling + 1}")
    rows = []
    cur = t
    for _ in range(height):
        rows.append(encode_chain(cur))
        cur = promote(cur)
    return GrowthWindow(tuple(rows), t.ceiling)


def column_evacuation(w: GrowthWindow, row_index: int) -> Tableau:
    """Decode the column through the rightmost diagram of a row.

    Read bottom to top, that column is the chain of the evacuation of the
    tableau encoded by the row.  Needs rows row_index .. row_index+ceiling.
    """
    k = w.ceiling
    if row_index < 0 or row_index + k >= w.height:
        raise PreconditionError(
            f"window of height {w.height} too short for the column at row {row_index}"
        )
    chain = tuple(w.rows[row_index + k - j].diagrams[j] for j in range(k + 1))
    return decode_chain(ChainEncoding(chain))


def period_window(t: Tableau) -> int:
    """Window length covering a whole number of promotion periods.

    On rectangles the period divides the ceiling, so the window is the
    ceiling itself; elsewhere the period is unrelated to the ceiling and
    the window is the orbit size.  Box-value multisets are only
    evacuation-invariant over such full-period windows.
    """
    if not t.is_straight:
        raise PreconditionError("promotion orbits require a straight shape")
    if t.is_rectangular:
        return t.ceiling
    period = 1
    cur = promote(t)
    while cur != t:
        period += 1
        cur = promote(cur)
    return period


def orbit_values(t: Tableau, box: Box, window: int | None = None) -> Multiset:
    """Multiset of the values box takes over one full period window."""
    if not t.is_straight:
        raise PreconditionError("orbit values require a straight shape")
    r, c = box
    if not t.has_box(r, c):
        raise PreconditionError(f"box {box} is not in the shape")
    if window is None:
        window = period_window(t)
    values = []
    cur = t
    for _ in range(window):
        values.append(cur.entry(r, c))
        cur = promote(cur)
    return tuple(sorted(values))


@dataclass(frozen=True)
class DisInvarianceReport:
    """Outcome of sweeping the box-value multiset identity over a shape."""

    shape: Partition
    ceiling: int
    tableaux_checked: int
    violations: tuple[tuple[Tableau, Box], ...]

    @property
    def ok(self) -> bool:
        return not self.violations


def check_dis_invariance(shape, ceiling: int) -> DisInvarianceReport:
    """Verify that every box's period multiset agrees for t and evacuate(t)."""
    violations = []
    checked = 0
    for t in enumerate_ssyt(shape, ceiling):
        checked += 1
        window = period_window(t)
        values_t = _all_box_values(t, window)
        values_e = _all_box_values(evacuate(t), window)
        for box in values_t:
            if Counter(values_t[box]) != Counter(values_e[box]):
                violations.append((t, box))
    return DisInvarianceReport(tuple(shape), ceiling, checked, tuple(violations))


def _all_box_values(t: Tableau, window: int) -> dict[Box, list[int]]:
    values: dict[Box, list[int]] = {box: [] for box in t.boxes()}
    cur = t
    for _ in range(window):
        for box in values:
            values[box].append(cur.entry(*box))
        cur = promote(cur)
    return values


def path_tableau(w: GrowthWindow, start_row: int, hops) -> Tableau:
    """Decode the tableau along a monotone lattice path through the window.

    The path starts at the empty diagram of `start_row` and makes ceiling
    hops, each either ``right`` (same row, next chain index) or ``up``
    (previous row, same global column).  Both hops advance the chain index
    by one, so the visited diagrams form a multichain of full length.
    """
    hops = tuple(hops)
    if len(hops) != w.ceiling:
        raise PreconditionError(f"path must make exactly {w.ceiling} hops, got {len(hops)}")
    row, index = start_row, 0
    diagrams = [w.diagram_at(row, index)]
    for hop in hops:
        if hop == "right":
            index += 1
        elif hop == "up":
            row -= 1
            index += 1
        else:
            raise PreconditionError(f"unknown hop {hop!r}; expected 'up' or 'right'")
        diagrams.append(w.diagram_at(row, index))
    return decode_chain(ChainEncoding(tuple(diagrams)))


def bend_path(hops, corner: int) -> tuple[str, ...]:
    """Swap the two hops around interior position `corner` (1-based chain index)."""
    hops = list(hops)
    if not 1 <= corner <= len(hops) - 1:
        raise PreconditionError(f"corner {corner} not interior to a {len(hops)}-hop path")
    if hops[corner - 1] == hops[corner]:
        raise PreconditionError(f"position {corner} is not a corner of the path")
    hops[corner - 1], hops[corner] = hops[corner], hops[corner - 1]
    return tuple(hops)


def bendable_corners(hops) -> list[int]:
    hops = tuple(hops)
    return [i for i in range(1, len(hops)) if hops[i - 1] != hops[i]]


def render_window(w: GrowthWindow, tracked: Box | None = None) -> str:
    """ASCII rendering: one line per row, partitions as comma-joined parts.

    The empty shape prints as ``-``; a ``*`` prefix marks diagrams that
    contain the tracked box.
    """
    texts = []
    for enc in w.rows:
        row_texts = []
        for d in enc.diagrams:
            s = ",".join(str(p) for p in d) if d else "-"
            if tracked is not None and part(d, tracked[0]) >= tracked[1]:
                s = "*" + s
            row_texts.append(s)
        texts.append(row_texts)
    width = max(len(s) for row in texts for s in row) + 1
    lines = []
    for r, row_texts in enumerate(texts):
        pad = " " * (width * r)
        lines.append(pad + "".join(s.ljust(width) for s in row_texts).rstrip())
    return "\n".join(lines) + "\n"


def toggled_pair(w: GrowthWindow, start_row: int, hops, corner: int) -> tuple[Tableau, Tableau]:
    """The tableaux decoded from a path and from its bend at one corner.

    Bending at chain index i changes the decode by the single toggle i;
    this helper pairs the two decodes for that check.
    """
    original = path_tableau(w, start_row, hops)
    bent = path_tableau(w, start_row, bend_path(hops, corner))
    return original, bent


__all__ = [
    "ChainEncoding",
    "GrowthWindow",
    "DisInvarianceReport",
    "encode_chain",
    "decode_chain",
    "build_window",
    "column_evacuation",
    "orbit_values",
    "period_window",
    "check_dis_invariance",
    "path_tableau",
    "bend_path",
    "bendable_corners",
    "render_window",
    "toggled_pair",
]
