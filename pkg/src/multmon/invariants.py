"""Codimension, dominance, and (almost) complete-intersection classification.

The codimension of a monomial ideal equals the minimum size of a set of
variables meeting every minimal generator's support, so it is computed as an
exact minimum vertex cover of the support hypergraph (branch and bound with a
greedy upper bound; heuristics prune, never approximate).
"""

from __future__ import annotations

from dataclasses import dataclass

from .core import MonomialIdeal
from .errors import InternalConsistencyError

__all__ = [
    "codim",
    "dominance_witnesses",
    "is_dominant",
    "is_complete_intersection",
    "is_almost_complete_intersection",
    "ClassificationReport",
    "classify",
]


def _supports(ideal: MonomialIdeal) -> list[frozenset[int]]:
    return [frozenset(g.support) for g in ideal.gens]


def _inclusion_minimal(supports: list[frozenset[int]]) -> list[frozenset[int]]:
    # A cover of a subset also covers every superset, so supersets are noise.
    unique = sorted(set(supports), key=len)
    kept: list[frozenset[int]] = []
    for s in unique:
        if not any(t <= s for t in kept):
            kept.append(s)
    return kept


def _greedy_cover(supports: list[frozenset[int]]) -> int:
    uncovered = list(supports)
    size = 0
    while uncovered:
        counts: dict[int, int] = {}
        for s in uncovered:
            for v in s:
                counts[v] = counts.get(v, 0) + 1
        top = max(counts.values())
        best = min(v for v in counts if counts[v] == top)
        uncovered = [s for s in uncovered if best not in s]
        size += 1
    return size


def _disjoint_lower_bound(supports: list[frozenset[int]]) -> int:
    # Pairwise disjoint supports need pairwise distinct cover variables.
    chosen: list[frozenset[int]] = []
    for s in sorted(supports, key=len):
        if all(not (s & t) for t in chosen):
            chosen.append(s)
    return len(chosen)


def codim(ideal: MonomialIdeal) -> int:
    """Minimum number of variables meeting every generator's support."""
    supports = _inclusion_minimal(_supports(ideal))
    best = _greedy_cover(supports)

    def search(chosen: int, uncovered: list[frozenset[int]]) -> None:
        nonlocal best
        if not uncovered:
            if chosen < best:
                best = chosen
            return
        if chosen + _disjoint_lower_bound(uncovered) >= best:
            return
        pivot = min(uncovered, key=len)
        for v in sorted(pivot):
            search(chosen + 1, [s for s in uncovered if v not in s])

    search(0, supports)
    return best


def dominance_witnesses(ideal: MonomialIdeal) -> tuple[int | None, ...]:
    """Per generator, the least variable whose exponent strictly beats all others.

    `None` marks a generator with no such variable (a non-dominant generator).
    """
    gens = ideal.gens
    witnesses: list[int | None] = []
    for i, g in enumerate(gens):
        found = None
        for v, e in g.exps:
            if all(other.exponent(v) < e for j, other in enumerate(gens) if j != i):
                found = v
                break
        witnesses.append(found)
    return tuple(witnesses)


def is_dominant(ideal: MonomialIdeal) -> tuple[bool, tuple[int | None, ...]]:
    """Whether every generator has a strictly private exponent, with witnesses."""
    witnesses = dominance_witnesses(ideal)
    return all(w is not None for w in witnesses), witnesses


def is_complete_intersection(ideal: MonomialIdeal) -> bool:
    """True when the minimal generators are pairwise coprime."""
    supports = _supports(ideal)
    for i in range(len(supports)):
        for j in range(i + 1, len(supports)):
            if supports[i] & supports[j]:
                return False
    return True


def is_almost_complete_intersection(ideal: MonomialIdeal) -> int | None:
    """Index of the extra generator if the ideal is an almost complete intersection.

    The ideal qualifies when removing one generator leaves a pairwise-coprime
    set whose size equals the codimension; the smallest such index is returned,
    and `None` means no removal works (so also for complete intersections).
    """
    q = ideal.q
    if codim(ideal) != q - 1:
        return None
    supports = _supports(ideal)
    for t in range(q):
        rest = [s for j, s in enumerate(supports) if j != t]
        if all(
            not (rest[a] & rest[b])
            for a in range(len(rest))
            for b in range(a + 1, len(rest))
        ):
            return t
    return None


@dataclass(frozen=True)
class ClassificationReport:
    """Summary of the hypothesis-relevant shape of an ideal."""

    codim: int
    is_dominant: bool
    dominant_witness: tuple[int | None, ...]
    is_ci: bool
    aci_witness: int | None
    is_codim1: bool

    def __post_init__(self):
        if self.is_codim1 != (self.codim == 1):
            raise ValueError("codim-1 flag inconsistent with codimension")


def classify(ideal: MonomialIdeal) -> ClassificationReport:
    c = codim(ideal)
    dominant, witnesses = is_dominant(ideal)
    ci = is_complete_intersection(ideal)
    if ci != (c == ideal.q):
        raise InternalConsistencyError("coprimality test disagrees with codimension")
    return ClassificationReport(
        codim=c,
        is_dominant=dominant,
        dominant_witness=witnesses,
        is_ci=ci,
        aci_witness=is_almost_complete_intersection(ideal),
        is_codim1=c == 1,
    )
