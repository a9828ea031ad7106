"""Cell-sum statistics, exact orbit averages, and homomesy verdicts.

A dynamical system here is any finite set with an invertible step map;
orbits are discovered by exhaustive enumeration under an explicit element
budget, averages are exact rationals, and the verdict is `homomesic`
exactly when every orbit average equals the first.  Everything is
deterministic: orbits are keyed by their canonical representative, so the
report does not depend on enumeration chunking or thread schedule.
"""

from __future__ import annotations

import json
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from fractions import Fraction
from threading import Lock
from typing import Callable, Iterable, Iterator

from .dynamics import promote, promote_inverse
from .errors import BudgetExceededError, PreconditionError
from .ktableaux import IncreasingTableau, enumerate_increasing, k_promote
from .posets import FinitePoset, LinearExtension, linear_extensions, poset_promote, rotate
from .shapes import Tableau, check_partition, enumerate_ssyt


@dataclass(frozen=True)
class CellStatistic:
    """A named cell-sum statistic: the sum of entries over a support set."""

    support: frozenset
    name: str


def cell_sum(obj, support) -> int:
    """Sum of the entries of a tableau (by box) or of a labelled poset
    object (by element id, or by box when the poset is grid-embedded)."""
    if isinstance(obj, Tableau):
        return sum(obj.entry(r, c) for r, c in support)
    if isinstance(obj, (LinearExtension, IncreasingTableau)):
        total = 0
        for item in support:
            if isinstance(item, tuple):
                item = obj.poset.element_at(item)
            if not 1 <= item <= obj.poset.size:
                raise PreconditionError(f"element {item} outside the poset")
            total += obj.label(item)
        return total
    raise PreconditionError(f"unsupported object for cell_sum: {type(obj).__name__}")


def orbit_average(elements: Iterable, statistic: CellStatistic) -> Fraction:
    """Exact mean of the statistic over the orbit elements."""
    elements = list(elements)
    if not elements:
        raise PreconditionError("orbit average of an empty orbit")
    return Fraction(sum(cell_sum(x, statistic.support) for x in elements), len(elements))


# -- systems -------------------------------------------------------------------


@dataclass(frozen=True)
class System:
    """A finite invertible dynamical system, described for reports."""

    description: str
    enumerate: Callable[[], Iterator]
    step: Callable
    sort_key: Callable


def ssyt_system(shape, ceiling: int, operator: str = "promote") -> System:
    """Semistandard tableaux of a straight shape under (inverse) promotion."""
    shape = check_partition(shape) if shape else ()
    ops = {"promote": promote, "promote_inverse": promote_inverse}
    if operator not in ops:
        raise PreconditionError(f"unknown operator {operator!r}")
    return System(
        description=f"ssyt(shape={','.join(map(str, shape))};k={ceiling};op={operator})",
        enumerate=lambda: enumerate_ssyt(shape, ceiling),
        step=ops[operator],
        sort_key=lambda t: t.row_reading(),
    )


def syt_poset_system(p: FinitePoset) -> System:
    """Linear extensions of a poset under promotion."""
    label = p.name or f"poset{p.size}"
    return System(
        description=f"syt_poset({label})",
        enumerate=lambda: linear_extensions(p),
        step=poset_promote,
        sort_key=lambda t: t.labels,
    )


def inc_system(p: FinitePoset, q: int) -> System:
    """Increasing tableaux of fixed deficiency under K-promotion."""
    label = p.name or f"poset{p.size}"
    return System(
        description=f"inc({label};q={q})",
        enumerate=lambda: enumerate_increasing(p, q),
        step=k_promote,
        sort_key=lambda t: t.labels,
    )


# -- verdicts ------------------------------------------------------------------


@dataclass(frozen=True)
class OrbitSummary:
    size: int
    average: Fraction
    representative: tuple


@dataclass(frozen=True)
class HomomesyReport:
    system: str
    statistic: str
    orbits: tuple[OrbitSummary, ...]
    verdict: str
    witness: tuple[OrbitSummary, OrbitSummary] | None

    @property
    def homomesic(self) -> bool:
        return self.verdict == "homomesic"

    @property
    def common_average(self) -> Fraction | None:
        return self.orbits[0].average if self.homomesic and self.orbits else None


def _orbit_of(start, step) -> list:
    elements = [start]
    cur = step(start)
    while cur != start:
        elements.append(cur)
        cur = step(cur)
    return elements


def _representative(obj) -> tuple:
    if isinstance(obj, Tableau):
        return tuple(obj.rows)
    return tuple(obj.labels)


def verify_homomesy(
    system: System,
    statistic: CellStatistic,
    budget: int,
    threads: int = 1,
) -> HomomesyReport:
    """Partition the system into orbits and compare exact orbit averages.

    `budget` caps the number of enumerated elements; exceeding it raises
    :class:`BudgetExceededError` rather than returning a partial answer.
    With threads > 1, orbit discovery runs over enumeration chunks in
    parallel; duplicates are merged by canonical representative, so the
    report is identical to the sequential one.
    """
    if budget < 1:
        raise PreconditionError(f"budget must be positive: {budget}")
    elements = []
    for x in system.enumerate():
        elements.append(x)
        if len(elements) > budget:
            raise BudgetExceededError(
                f"{system.description} exceeds the element budget {budget}"
            )
    orbits: dict[tuple, list] = {}
    if threads <= 1 or len(elements) < 2:
        seen: set[tuple] = set()
        for x in elements:
            if system.sort_key(x) in seen:
                continue
            orb = _orbit_of(x, system.step)
            seen.update(system.sort_key(y) for y in orb)
            key = min(system.sort_key(y) for y in orb)
            orbits[key] = orb
    else:
        lock = Lock()
        seen_shared: set[tuple] = set()

        def sweep(chunk) -> dict[tuple, list]:
            local: dict[tuple, list] = {}
            for x in chunk:
                kx = system.sort_key(x)
                with lock:
                    if kx in seen_shared:
                        continue
                orb = _orbit_of(x, system.step)
                keys = [system.sort_key(y) for y in orb]
                with lock:
                    seen_shared.update(keys)
                local[min(keys)] = orb
            return local

        chunk_size = max(1, (len(elements) + threads - 1) // threads)
        chunks = [elements[i : i + chunk_size] for i in range(0, len(elements), chunk_size)]
        with ThreadPoolExecutor(max_workers=threads) as pool:
            for partial in pool.map(sweep, chunks):
                orbits.update(partial)

    summaries = []
    for key in sorted(orbits):
        orb = orbits[key]
        lead = min(range(len(orb)), key=lambda i: system.sort_key(orb[i]))
        summaries.append(
            OrbitSummary(
                size=len(orb),
                average=orbit_average(orb, statistic),
                representative=_representative(orb[lead]),
            )
        )
    verdict = "homomesic"
    witness = None
    for summary in summaries[1:]:
        if summary.average != summaries[0].average:
            verdict = "violated"
            witness = (summaries[0], summary)
            break
    return HomomesyReport(
        system=system.description,
        statistic=statistic.name,
        orbits=tuple(summaries),
        verdict=verdict,
        witness=witness,
    )


# -- symmetric supports --------------------------------------------------------


def symmetric_subsets(shape_or_poset) -> Iterator[CellStatistic]:
    """All statistics whose support is fixed by the rotate involution.

    For an (m, n) pair this is 180-degree rotation on the rectangle's
    boxes; for a cominuscule poset it is its rotate map.  Yields each of
    the 2^(number of rotate orbits) subsets exactly once, smallest first.
    """
    if isinstance(shape_or_poset, FinitePoset):
        rot = rotate(shape_or_poset)
        points = list(shape_or_poset.elements())
        mapping = rot
        tag = "elements"
    else:
        m, n = shape_or_poset
        points = [(r, c) for r in range(1, m + 1) for c in range(1, n + 1)]
        mapping = {(r, c): (m + 1 - r, n + 1 - c) for r, c in points}
        tag = "cells"
    classes: list[tuple] = []
    seen = set()
    for x in points:
        if x in seen:
            continue
        cls = {x, mapping[x]}
        seen |= cls
        classes.append(tuple(sorted(cls)))
    for mask in range(1 << len(classes)):
        support = frozenset(x for i, cls in enumerate(classes) if mask >> i & 1 for x in cls)
        yield CellStatistic(support=support, name=f"{tag}:{sorted(support)}")


def fraction_str(f: Fraction) -> str:
    """Reduced fraction serialization with an explicit denominator."""
    return f"{f.numerator}/{f.denominator}"


def report_to_jsonable(report: HomomesyReport) -> dict:
    out = {
        "system": report.system,
        "statistic": report.statistic,
        "orbits": [
            {
                "size": o.size,
                "average": fraction_str(o.average),
                "representative": _jsonable(o.representative),
            }
            for o in report.orbits
        ],
        "verdict": report.verdict,
    }
    if report.witness is not None:
        out["witness"] = [
            {"size": o.size, "average": fraction_str(o.average), "representative": _jsonable(o.representative)}
            for o in report.witness
        ]
    return out


def report_to_json(report: HomomesyReport) -> str:
    return json.dumps(report_to_jsonable(report), sort_keys=True, indent=2)


def _jsonable(value):
    if isinstance(value, tuple):
        return [_jsonable(v) for v in value]
    return value
