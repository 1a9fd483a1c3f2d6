"""Independent multiplicity oracle: minimal covers plus colength counting.

The multiplicity of S/M equals the sum, over all size-c variable covers of the
generators' supports (c = codim), of the number of standard monomials of the
ideal restricted to the cover's variables.  This path shares nothing with the
power-sum engine beyond monomial arithmetic and is deliberately brute force:
colengths are counted by direct lattice-point enumeration, erroring out past a
hard grid cap rather than approximating.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations, product

from .core import MonomialIdeal
from .errors import ResourceCapError
from .invariants import codim

__all__ = [
    "COLENGTH_GRID_CAP",
    "CoverContribution",
    "minimal_covers",
    "colength",
    "cover_contributions",
    "multiplicity_associativity",
]

COLENGTH_GRID_CAP = 10**7


@dataclass(frozen=True)
class CoverContribution:
    cover: frozenset[int]
    colength: int


def _supports(ideal: MonomialIdeal) -> list[frozenset[int]]:
    return [frozenset(g.support) for g in ideal.gens]


def minimal_covers(ideal: MonomialIdeal) -> list[frozenset[int]]:
    """All variable sets of size exactly codim meeting every generator's support.

    Any cover of that size is automatically minimal, so no post-filter is
    needed.  Covers are listed in lexicographic variable order.
    """
    c = codim(ideal)
    supports = _supports(ideal)
    used = ideal.used_variables()
    out = []
    for combo in combinations(used, c):
        chosen = frozenset(combo)
        if all(chosen & s for s in supports):
            out.append(chosen)
    return out


def _restricted_vectors(ideal: MonomialIdeal, cov: tuple[int, ...]) -> list[tuple[int, ...]]:
    """Generators restricted to the cover variables, as inclusion-minimal vectors."""
    vectors = sorted(
        {tuple(g.exponent(v) for v in cov) for g in ideal.gens},
        key=sum,
    )
    kept: list[tuple[int, ...]] = []
    for vec in vectors:
        if not any(all(w <= x for w, x in zip(prev, vec)) for prev in kept):
            kept.append(vec)
    return kept


def colength(ideal: MonomialIdeal, cover: frozenset[int]) -> int:
    """Standard monomials of the ideal restricted to the cover variables.

    Restricting sets every non-cover variable to 1; minimality of the cover
    guarantees some restricted generator is a pure power of each cover
    variable, so the count is finite and each exponent is bounded by the
    largest exponent of its variable among restricted generators.
    """
    cov = tuple(sorted(cover))
    supports = _supports(ideal)
    if len(cov) != codim(ideal) or not all(cover & s for s in supports):
        raise ValueError(f"{{{', '.join(ideal.ring.names[v] for v in cov)}}} is not a minimal cover")
    restricted = _restricted_vectors(ideal, cov)
    bounds = [max(vec[p] for vec in restricted) for p in range(len(cov))]
    grid = 1
    for b in bounds:
        grid *= b
    if grid > COLENGTH_GRID_CAP:
        raise ResourceCapError(
            f"colength grid of {grid} points exceeds the {COLENGTH_GRID_CAP} cap"
        )
    count = 0
    for point in product(*(range(b) for b in bounds)):
        if not any(all(w <= x for w, x in zip(vec, point)) for vec in restricted):
            count += 1
    return count


def cover_contributions(ideal: MonomialIdeal) -> list[CoverContribution]:
    return [CoverContribution(cov, colength(ideal, cov)) for cov in minimal_covers(ideal)]


def multiplicity_associativity(ideal: MonomialIdeal) -> int:
    """Multiplicity as the sum of colengths over all minimal covers."""
    return sum(colength(ideal, cov) for cov in minimal_covers(ideal))
