"""The logic of an orthoset: its lattice of orthoclosed sets.

Orthoclosed sets ordered by inclusion form a complete lattice with
intersection as meet and double-perp of union as join; the perp is an
orthocomplementation.  Everything here is tabulated once at construction:
elements are masks in ascending order, all relations and operations are
stored by element index.
"""

from __future__ import annotations

from dataclasses import dataclass

from .bitset import bits
from .errors import SizeLimitError
from .orthoset import (DEFAULT_MAX_FAMILY, DEFAULT_MAX_ORTHO_ELEMENTS,
                       Orthoset, _perp_rows, enumerate_orthoclosed)

DEFAULT_MAX_LATTICE = 4096


@dataclass(frozen=True)
class Logic:
    """Finite ortholattice given by tables over element indices."""

    elements: tuple[int, ...]        # orthoclosed masks, ascending
    leq: tuple[int, ...]             # leq[i] bit j set iff element i <= element j
    ocompl: tuple[int, ...]          # index of the orthocomplement
    meet: tuple[tuple[int, ...], ...]
    join: tuple[tuple[int, ...], ...]

    @property
    def m(self) -> int:
        return len(self.elements)

    @property
    def bottom(self) -> int:
        return 0

    @property
    def top(self) -> int:
        return len(self.elements) - 1


def build_logic(
    o: Orthoset,
    max_elements: int = DEFAULT_MAX_ORTHO_ELEMENTS,
    max_lattice: int = DEFAULT_MAX_LATTICE,
    max_family: int = DEFAULT_MAX_FAMILY,
) -> Logic:
    """Tabulate the logic of o.

    Meets must land back in the family (intersections of closed sets are
    closed) and the two join formulas, perp of intersection of perps and
    double perp of the union, must agree; both facts are asserted during
    construction.  Raises SizeLimitError when the family is larger than
    max_lattice.
    """
    elements = enumerate_orthoclosed(o, max_elements, max_family)
    return _logic_from_family(o.adj, o.n, elements, max_lattice)


def _logic_from_family(adj, n: int, elements: list[int],
                       max_lattice: int = DEFAULT_MAX_LATTICE) -> Logic:
    m = len(elements)
    if m > max_lattice:
        raise SizeLimitError(f"logic has {m} elements, cap is {max_lattice}")
    index = {e: i for i, e in enumerate(elements)}

    leq = []
    for ei in elements:
        row = 0
        for j, ej in enumerate(elements):
            if not ei & ~ej:
                row |= 1 << j
        leq.append(row)

    perps = [_perp_rows(adj, n, e) for e in elements]
    ocompl = []
    for i, pe in enumerate(perps):
        k = index.get(pe)
        if k is None:
            raise AssertionError(f"perp of element {i} left the family")
        ocompl.append(k)

    meet = []
    join = []
    for i, ei in enumerate(elements):
        mrow = []
        jrow = []
        for j, ej in enumerate(elements):
            inter = ei & ej
            k = index.get(inter)
            if k is None:
                raise AssertionError(
                    f"meet of elements {i}, {j} is not orthoclosed")
            mrow.append(k)
            jv = _perp_rows(adj, n, perps[i] & perps[j])
            jv2 = _perp_rows(adj, n, _perp_rows(adj, n, ei | ej))
            if jv != jv2:
                raise AssertionError(
                    f"join formulas disagree on elements {i}, {j}")
            jk = index.get(jv)
            if jk is None:
                raise AssertionError(
                    f"join of elements {i}, {j} left the family")
            jrow.append(jk)
        meet.append(tuple(mrow))
        join.append(tuple(jrow))

    return Logic(tuple(elements), tuple(leq), tuple(ocompl),
                 tuple(meet), tuple(join))


@dataclass(frozen=True)
class AxiomReport:
    """Outcome of verify_ortholattice: per-axiom pass/fail with witnesses."""

    ok: bool
    failures: tuple[tuple[str, tuple[int, ...]], ...]

    def failed_axioms(self) -> tuple[str, ...]:
        return tuple(name for name, _ in self.failures)


def verify_ortholattice(l: Logic) -> AxiomReport:
    """Check every ortholattice axiom, recording the first witness per axiom.

    Covers: complements of the bounds, involution, antitonicity, both
    De Morgan laws, meet and join with the complement, and agreement of the
    stored order with the meet table.
    """
    m = l.m
    bot, top = l.bottom, l.top
    failures: list[tuple[str, tuple[int, ...]]] = []

    if l.ocompl[bot] != top or l.ocompl[top] != bot:
        failures.append(("bounds_complement", ()))
    for i in range(m):
        if l.ocompl[l.ocompl[i]] != i:
            failures.append(("involution", (i,)))
            break
    for i in range(m):
        hit = None
        for j in bits(l.leq[i]):
            if not l.leq[l.ocompl[j]] >> l.ocompl[i] & 1:
                hit = (i, j)
                break
        if hit:
            failures.append(("antitone", hit))
            break

    def first_pair(bad) -> tuple[int, int] | None:
        for i in range(m):
            for j in range(m):
                if bad(i, j):
                    return i, j
        return None

    w = first_pair(lambda i, j:
                   l.ocompl[l.join[i][j]] != l.meet[l.ocompl[i]][l.ocompl[j]])
    if w:
        failures.append(("de_morgan_join", w))
    w = first_pair(lambda i, j:
                   l.ocompl[l.meet[i][j]] != l.join[l.ocompl[i]][l.ocompl[j]])
    if w:
        failures.append(("de_morgan_meet", w))
    for i in range(m):
        if l.meet[i][l.ocompl[i]] != bot:
            failures.append(("complement_meet", (i,)))
            break
    for i in range(m):
        if l.join[i][l.ocompl[i]] != top:
            failures.append(("complement_join", (i,)))
            break
    w = first_pair(lambda i, j:
                   (l.meet[i][j] == i) != bool(l.leq[i] >> j & 1))
    if w:
        failures.append(("order_matches_meet", w))

    return AxiomReport(not failures, tuple(failures))


def is_orthomodular(l: Logic) -> tuple[bool, tuple[int, int] | None]:
    """Decide x <= y implies y = x join (y meet x-compl); lex-least witness."""
    for i in range(l.m):
        ci = l.ocompl[i]
        for j in bits(l.leq[i]):
            if j == i:
                continue
            if l.join[i][l.meet[j][ci]] != j:
                return False, (i, j)
    return True, None


def is_boolean(l: Logic) -> tuple[bool, tuple[int, int, int] | None]:
    """Decide distributivity by full scan; lex-least witness triple.

    Cross-checked against the disjointness law (meet zero forces being under
    the complement), which holds exactly on the Boolean logics; the two
    verdicts are asserted to agree.
    """
    verdict = True
    witness: tuple[int, int, int] | None = None
    for i in range(l.m):
        mi = l.meet[i]
        for j in range(l.m):
            for k in range(l.m):
                if mi[l.join[j][k]] != l.join[mi[j]][mi[k]]:
                    verdict, witness = False, (i, j, k)
                    break
            if witness:
                break
        if witness:
            break

    disjoint_law = True
    for a in range(l.m):
        for b in range(l.m):
            if l.meet[a][b] == l.bottom and not l.leq[a] >> l.ocompl[b] & 1:
                disjoint_law = False
                break
        if not disjoint_law:
            break
    if verdict != disjoint_law:
        raise AssertionError(
            "distributivity and the disjointness law disagree")
    return verdict, witness
