"""Shared helpers and independent brute-force oracles for the test suite."""

from itertools import permutations, product

from promotab.posets import FinitePoset


def partitions_of(n: int):
    """All partitions of exactly n (weakly decreasing tuples)."""

    def gen(remaining, maxpart):
        if remaining == 0:
            yield ()
            return
        for first in range(min(remaining, maxpart), 0, -1):
            for rest in gen(remaining - first, first):
                yield (first,) + rest

    yield from gen(n, n)


def partitions_up_to(n: int):
    for m in range(1, n + 1):
        yield from partitions_of(m)


def rectangles_up_to(area: int):
    for m in range(1, area + 1):
        for n in range(1, area // m + 1):
            yield m, n


def random_ssyt(shape, ceiling, rng):
    """A random (not uniform) semistandard filling, built row-major.

    Each entry is capped so the strictly increasing column below it can
    still be completed within the ceiling, so generation never dead-ends.
    """
    from promotab.shapes import Tableau, conjugate

    heights = conjugate(tuple(shape))
    if heights and heights[0] > ceiling:
        raise ValueError("shape too deep for the ceiling")
    rows = []
    for r, length in enumerate(shape):
        row = []
        for c in range(length):
            lo = 1
            if c > 0:
                lo = max(lo, row[c - 1])
            if r > 0:
                lo = max(lo, rows[r - 1][c] + 1)
            hi = ceiling - (heights[c] - r - 1)
            row.append(rng.randint(lo, hi))
        rows.append(row)
    return Tableau(rows, ceiling)


def brute_linear_extension_count(p: FinitePoset) -> int:
    """Oracle: filter all d! label bijections."""
    count = 0
    for perm in permutations(range(1, p.size + 1)):
        if all(perm[x - 1] < perm[y - 1] for x, y in p.covers):
            count += 1
    return count


def brute_increasing_count(p: FinitePoset, q: int) -> int:
    """Oracle: filter all label assignments onto 1..(|P|-q)."""
    d = p.size - q
    if d < 0:
        return 0
    if p.size == 0:
        return 1 if q == 0 else 0
    if d == 0:
        return 0
    count = 0
    for labels in product(range(1, d + 1), repeat=p.size):
        if set(labels) != set(range(1, d + 1)):
            continue
        if all(labels[x - 1] < labels[y - 1] for x, y in p.covers):
            count += 1
    return count
