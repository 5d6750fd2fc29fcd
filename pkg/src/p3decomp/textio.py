"""Plain-text digraph files.

::

    # comment
    digraph <n> <m>
    bipartition <k>        (optional; vertices 0..k-1 form side X)
    <tail> <head>          (m lines)

``#`` starts a comment anywhere on a line; blank lines are ignored.
"""

from __future__ import annotations

from dataclasses import dataclass
from pathlib import Path

from .digraph import Digraph
from .errors import DigraphError, ParseError


@dataclass(frozen=True)
class ParsedDigraph:
    digraph: Digraph
    bipartition: frozenset[int] | None = None


def parse_digraph_text(text: str) -> ParsedDigraph:
    lines = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        body = raw.split("#", 1)[0].strip()
        if body:
            lines.append((lineno, body.split()))
    if not lines:
        raise ParseError("empty input: expected 'digraph <n> <m>'")
    lineno, toks = lines[0]
    if len(toks) != 3 or toks[0] != "digraph":
        raise ParseError("expected 'digraph <n> <m>'", lineno)
    try:
        n, m = int(toks[1]), int(toks[2])
    except ValueError:
        raise ParseError("vertex and arc counts must be integers", lineno) from None
    if n < 0 or m < 0:
        raise ParseError("counts must be non-negative", lineno)
    rest = lines[1:]
    side = None
    if rest and rest[0][1][0] == "bipartition":
        lineno, toks = rest[0]
        if len(toks) != 2:
            raise ParseError("expected 'bipartition <k>'", lineno)
        try:
            k = int(toks[1])
        except ValueError:
            raise ParseError("bipartition size must be an integer", lineno) from None
        if not 0 <= k <= n:
            raise ParseError(f"bipartition size {k} outside [0, {n}]", lineno)
        side = frozenset(range(k))
        rest = rest[1:]
    if len(rest) != m:
        where = rest[m][0] if len(rest) > m else None
        raise ParseError(f"header announces {m} arcs, found {len(rest)}", where)
    arcs = []
    for lineno, toks in rest:
        if len(toks) != 2:
            raise ParseError("expected '<tail> <head>'", lineno)
        try:
            arcs.append((int(toks[0]), int(toks[1])))
        except ValueError:
            raise ParseError("arc endpoints must be integers", lineno) from None
    try:
        D = Digraph(n, arcs)
    except DigraphError as e:
        lineno = rest[e.arc_index][0]
        raise type(e)(f"line {lineno}: {e}", e.arc_index) from None
    return ParsedDigraph(D, side)


def read_digraph(path) -> ParsedDigraph:
    return parse_digraph_text(Path(path).read_text())


def format_digraph(D: Digraph, bipartition: int | None = None) -> str:
    out = [f"digraph {D.n} {D.m}"]
    if bipartition is not None:
        out.append(f"bipartition {bipartition}")
    out.extend(f"{t} {h}" for t, h in D.arcs)
    return "\n".join(out) + "\n"


def write_digraph(path, D: Digraph, bipartition: int | None = None) -> None:
    Path(path).write_text(format_digraph(D, bipartition))


def digraph_to_dot(D: Digraph) -> str:
    lines = ["digraph D {"]
    lines.extend(f"  {v};" for v in range(D.n))
    lines.extend(f'  {t} -> {h} [label="{i}"];' for i, (t, h) in enumerate(D.arcs))
    lines.append("}")
    return "\n".join(lines) + "\n"
