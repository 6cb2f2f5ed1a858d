"""Poset text files and DOT renderings.

File grammar, one directive per line, # starts a comment:

    element NAME
    cover LOWER UPPER

Elements must be declared before use; the order is generated by the cover
pairs.  Parse errors carry 1-based line numbers.
"""

from __future__ import annotations

from .bitset import bits, format_subset
from .errors import PosetSyntaxError, UnknownElementError
from .logic import Logic
from .poset import DEFAULT_MAX_ELEMENTS, Poset, poset_from_covers


def parse_poset_file(text: str,
                     max_elements: int = DEFAULT_MAX_ELEMENTS) -> Poset:
    """Parse the element/cover grammar into a Poset.

    Raises PosetSyntaxError or UnknownElementError with the offending line
    number, CycleError if the covers loop, SizeLimitError past max_elements.
    """
    names: list[str] = []
    index: dict[str, int] = {}
    covers: list[tuple[int, int]] = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        tokens = line.split()
        if tokens[0] == "element":
            if len(tokens) != 2:
                raise PosetSyntaxError(
                    f"element takes one name, got {len(tokens) - 1}", lineno)
            name = tokens[1]
            if name in index:
                raise PosetSyntaxError(f"duplicate element {name!r}", lineno)
            index[name] = len(names)
            names.append(name)
        elif tokens[0] == "cover":
            if len(tokens) != 3:
                raise PosetSyntaxError(
                    f"cover takes two names, got {len(tokens) - 1}", lineno)
            pair = []
            for name in tokens[1:]:
                if name not in index:
                    raise UnknownElementError(name, lineno)
                pair.append(index[name])
            covers.append((pair[0], pair[1]))
        else:
            raise PosetSyntaxError(
                f"unknown directive {tokens[0]!r}", lineno)
    return poset_from_covers(len(names), covers, labels=names,
                             max_elements=max_elements)


def serialize_poset_file(p: Poset) -> str:
    """Round-trippable text for p: element lines, then cover lines."""
    out = [f"element {p.labels[i]}" for i in range(p.n)]
    for x in range(p.n):
        for y in bits(p.cover_up[x]):
            out.append(f"cover {p.labels[x]} {p.labels[y]}")
    return "\n".join(out) + "\n" if out else ""


def _dot_quote(s: str) -> str:
    return '"' + s.replace("\\", "\\\\").replace('"', '\\"') + '"'


def emit_dot_hasse(p: Poset) -> str:
    """Hasse diagram as DOT, edges pointing up, deterministic line order."""
    lines = ["digraph hasse {", "  rankdir=BT;"]
    for i in range(p.n):
        lines.append(f"  {_dot_quote(p.labels[i])};")
    for x in range(p.n):
        for y in bits(p.cover_up[x]):
            lines.append(
                f"  {_dot_quote(p.labels[x])} -> {_dot_quote(p.labels[y])};")
    lines.append("}")
    return "\n".join(lines) + "\n"


def _lattice_cover_rows(l: Logic) -> list[int]:
    cov = []
    for i in range(l.m):
        strict = l.leq[i] & ~(1 << i)
        rem = strict
        for k in bits(strict):
            rem &= ~(l.leq[k] & ~(1 << k))
        cov.append(rem)
    return cov


def emit_dot_lattice(l: Logic, labels: tuple[str, ...]) -> str:
    """Cover graph of the logic as DOT; nodes are the orthoclosed sets."""
    def node(i: int) -> str:
        return _dot_quote(format_subset(l.elements[i], labels))

    lines = ["digraph logic {", "  rankdir=BT;"]
    for i in range(l.m):
        lines.append(f"  {node(i)};")
    cov = _lattice_cover_rows(l)
    for i in range(l.m):
        for j in bits(cov[i]):
            lines.append(f"  {node(i)} -> {node(j)};")
    lines.append("}")
    return "\n".join(lines) + "\n"
