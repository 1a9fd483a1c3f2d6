"""Pivot decomposition of an ideal and the structural Betti/multiplicity identity.

Removing a dominant generator m splits an ideal into the ideal of the other
generators and the ideal of lcm-quotients lcm(m, m_j)/m; multiplicities then
satisfy a two-case recurrence depending on how the quotient ideal's
codimension compares.

Independently, when the generators split into a free part and a pairwise
coprime part of size codim, the Betti table of the whole ideal is the sum of
shifted Betti tables of one small complete intersection per free-part subset.
"""

from __future__ import annotations

from dataclasses import dataclass

from .core import Monomial, MonomialIdeal, lcm, minimalize, quotient
from .errors import HypothesisError, InternalConsistencyError
from .formulas import CISplit, _free_subset_lcms, validate_split
from .invariants import codim, dominance_witnesses
from .taylor import BettiTable, betti_table, multiplicity_ps

__all__ = [
    "ThirdDecomposition",
    "DecompositionTerm",
    "third_decomposition",
    "multiplicity_recurrence",
    "structural_terms",
    "betti_decomposition",
]


@dataclass(frozen=True)
class ThirdDecomposition:
    """The two sub-ideals produced by removing a dominant pivot generator."""

    pivot: int
    m1: MonomialIdeal
    mm1: MonomialIdeal


def third_decomposition(ideal: MonomialIdeal, pivot: int) -> ThirdDecomposition:
    """Split off generator `pivot`: the rest, and the minimalized lcm-quotients.

    Every quotient lcm(m_pivot, m_j)/m_pivot is nonunit because no generator
    divides another in a minimal generating set.
    """
    if ideal.q < 2:
        raise HypothesisError("the decomposition needs at least two generators")
    if not 0 <= pivot < ideal.q:
        raise ValueError(f"pivot index {pivot} out of range")
    if dominance_witnesses(ideal)[pivot] is None:
        raise HypothesisError("the pivot generator must be dominant")
    m = ideal.gens[pivot]
    rest = [g for i, g in enumerate(ideal.gens) if i != pivot]
    quotients = [quotient(lcm(m, g), m) for g in rest]
    return ThirdDecomposition(
        pivot=pivot,
        m1=MonomialIdeal(ideal.ring, tuple(rest)),
        mm1=minimalize(ideal.ring, quotients),
    )


def multiplicity_recurrence(ideal: MonomialIdeal, pivot: int) -> int:
    """Multiplicity via the pivot recurrence; needs codim(M) = codim(M1).

    When the quotient ideal keeps the codimension the answer is the
    difference of the two sub-multiplicities; when its codimension grows the
    quotient term drops out entirely.
    """
    parts = third_decomposition(ideal, pivot)
    c = codim(ideal)
    if codim(parts.m1) != c:
        raise HypothesisError(
            "recurrence inapplicable: removing the pivot changes the codimension"
        )
    cm = codim(parts.mm1)
    if cm == c:
        value = multiplicity_ps(parts.m1) - multiplicity_ps(parts.mm1)
    elif cm > c:
        value = multiplicity_ps(parts.m1)
    else:
        raise InternalConsistencyError("quotient ideal dropped below the ambient codimension")
    if value < 1:
        raise InternalConsistencyError("recurrence produced a nonpositive multiplicity")
    return value


@dataclass(frozen=True)
class DecompositionTerm:
    """One free-part subset's contribution to the structural identity.

    `quotients` is the full length-c list lcm(mbar, h_i)/mbar (units possible
    in principle, and kept, because the multiplicity product ranges over all c
    of them); `ideal` is the minimalized ideal of the nonunit quotients.
    """

    j: int
    mbar: Monomial
    quotients: tuple[Monomial, ...]
    ideal: MonomialIdeal


def structural_terms(ideal: MonomialIdeal, split: CISplit) -> list[DecompositionTerm]:
    """One term per subset of the free part, ordered by size then bitmask."""
    validate_split(ideal, split)
    h = [ideal.gens[i] for i in split.ci]
    lcms = _free_subset_lcms(ideal, split.free)
    masks = sorted(range(len(lcms)), key=lambda m: (m.bit_count(), m))
    terms = []
    for mask in masks:
        mbar = lcms[mask]
        quotients = tuple(quotient(lcm(mbar, hi), mbar) for hi in h)
        nonunit = [m for m in quotients if not m.is_unit]
        if not nonunit:
            raise InternalConsistencyError("all structural quotients collapsed to units")
        terms.append(
            DecompositionTerm(
                j=mask.bit_count(),
                mbar=mbar,
                quotients=quotients,
                ideal=minimalize(ideal.ring, nonunit),
            )
        )
    return terms


def betti_decomposition(ideal: MonomialIdeal, split: CISplit) -> BettiTable:
    """Betti table assembled from the structural terms.

    Each term's table (a complete intersection's, hence computable from its
    Taylor complex) is shifted by (j, multiplication by mbar) and the counts
    are summed; the assembly is multigraded, so collisions in total degree
    are preserved.
    """
    entries: dict[tuple[int, Monomial], int] = {}
    for term in structural_terms(ideal, split):
        sub = betti_table(term.ideal)
        for (i, m), count in sub.entries.items():
            key = (i + term.j, m * term.mbar)
            entries[key] = entries.get(key, 0) + count
    return BettiTable(entries)
