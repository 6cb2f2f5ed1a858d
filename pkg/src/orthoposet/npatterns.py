"""Detectors for the N shape and its covering and weak variants.

An N is a quadruple (a, b, c, d) with a < c, b covered by c, b < d, and
a incomparable to b, a incomparable to d, c incomparable to d.  The covering
variant requires all three order relations to be covers; the weak variant
drops the a-d incomparability requirement.  Witness finders return the
lexicographically least quadruple; existence checks are cover-pair driven
and also exposed on raw relation rows for bulk scans.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Literal, Sequence

from .bitset import bits
from .poset import Poset, maximal_antichains, maximal_chains

NKind = Literal["n", "covering_n", "weak_n"]


@dataclass(frozen=True)
class NWitness:
    kind: NKind
    quad: tuple[int, int, int, int]  # (a, b, c, d)


def _has_n(n: int, up: Sequence[int], down: Sequence[int],
           cover_up: Sequence[int], incomp: Sequence[int]) -> bool:
    for b in range(n):
        ib = incomp[b]
        for c in bits(cover_up[b]):
            heads = down[c] & ib
            if not heads:
                continue
            tails = up[b] & incomp[c]
            if not tails:
                continue
            for a in bits(heads):
                if tails & incomp[a]:
                    return True
    return False


def _has_weak_n(n: int, up: Sequence[int], down: Sequence[int],
                cover_up: Sequence[int], incomp: Sequence[int]) -> bool:
    # no a-d constraint, so one nonempty head set and tail set suffice
    for b in range(n):
        ib = incomp[b]
        for c in bits(cover_up[b]):
            if down[c] & ib and up[b] & incomp[c]:
                return True
    return False


def _has_covering_n(n: int, cover_up: Sequence[int], cover_down: Sequence[int],
                    incomp: Sequence[int]) -> bool:
    for b in range(n):
        ib = incomp[b]
        for c in bits(cover_up[b]):
            heads = cover_down[c] & ib
            if not heads:
                continue
            tails = cover_up[b] & incomp[c]
            if not tails:
                continue
            for a in bits(heads):
                if tails & incomp[a]:
                    return True
    return False


def is_n_free(p: Poset) -> bool:
    """True iff no quadruple of p forms an N."""
    return not _has_n(p.n, p.up, p.down, p.cover_up, p.incomp)


def find_n(p: Poset) -> NWitness | None:
    """Lexicographically least N quadruple, or None."""
    for a in range(p.n):
        for b in bits(p.incomp[a]):
            for c in bits(p.up[a] & p.cover_up[b]):
                tails = p.up[b] & p.incomp[c] & p.incomp[a]
                if tails:
                    d = (tails & -tails).bit_length() - 1
                    return NWitness("n", (a, b, c, d))
    return None


def find_covering_n(p: Poset) -> NWitness | None:
    """Lexicographically least N whose three order relations are all covers."""
    for a in range(p.n):
        for b in bits(p.incomp[a]):
            for c in bits(p.cover_up[a] & p.cover_up[b]):
                tails = p.cover_up[b] & p.incomp[c] & p.incomp[a]
                if tails:
                    d = (tails & -tails).bit_length() - 1
                    return NWitness("covering_n", (a, b, c, d))
    return None


def find_weak_n(p: Poset) -> NWitness | None:
    """Lexicographically least weak N (a and d may be comparable), or None."""
    for a in range(p.n):
        for b in bits(p.incomp[a]):
            for c in bits(p.up[a] & p.cover_up[b]):
                tails = p.up[b] & p.incomp[c]
                if tails:
                    d = (tails & -tails).bit_length() - 1
                    return NWitness("weak_n", (a, b, c, d))
    return None


def chain_antichain_property(p: Poset) -> bool:
    """True iff every maximal chain meets every maximal antichain.

    Chains and antichains are nonempty subsets, so the empty poset satisfies
    this vacuously.
    """
    chains = maximal_chains(p)
    antichains = maximal_antichains(p)
    for c in chains:
        for a in antichains:
            if not c & a:
                return False
    return True
