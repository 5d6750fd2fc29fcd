"""Immutable digraphs on vertices 0..n-1 and the cut arithmetic on them.

Arcs are identified by their position in the construction-order arc list;
every other module (line graphs, matchings, certificates) refers to arcs by
that id.  Loops and parallel arcs are rejected.  Digons, i.e. a pair
(u, v), (v, u), are allowed; ``is_asymmetric`` reports whether any exist.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from typing import Iterable, NamedTuple

from .errors import InvalidPartition, LoopArc, ParallelArc, VertexOutOfRange

VertexSet = frozenset  # frozenset[int]; subset of range(n)


class Arc(NamedTuple):
    tail: int
    head: int


class Digraph:
    """A strict digraph with a fixed vertex count and ordered arc list."""

    __slots__ = ("n", "arcs", "is_strict", "is_asymmetric", "out_arcs",
                 "in_arcs", "_arc_index")

    def __init__(self, n: int, arcs: Iterable[tuple[int, int]]):
        if n < 0:
            raise ValueError("vertex count must be non-negative")
        arc_list = []
        index: dict[tuple[int, int], int] = {}
        for i, (t, h) in enumerate(arcs):
            t, h = int(t), int(h)
            if not (0 <= t < n and 0 <= h < n):
                raise VertexOutOfRange(
                    f"arc {i} ({t}, {h}) has an endpoint outside [0, {n})", i)
            if t == h:
                raise LoopArc(f"arc {i} is a loop at vertex {t}", i)
            if (t, h) in index:
                raise ParallelArc(
                    f"arc {i} ({t}, {h}) duplicates arc {index[t, h]}", i)
            index[t, h] = i
            arc_list.append(Arc(t, h))
        self.n = n
        self.arcs: tuple[Arc, ...] = tuple(arc_list)
        self._arc_index = index
        self.is_strict = True
        self.is_asymmetric = not any((h, t) in index for t, h in arc_list)
        out_arcs: list[list[int]] = [[] for _ in range(n)]
        in_arcs: list[list[int]] = [[] for _ in range(n)]
        for i, (t, h) in enumerate(arc_list):
            out_arcs[t].append(i)
            in_arcs[h].append(i)
        self.out_arcs = tuple(tuple(a) for a in out_arcs)
        self.in_arcs = tuple(tuple(a) for a in in_arcs)

    @property
    def m(self) -> int:
        return len(self.arcs)

    def has_arc(self, tail: int, head: int) -> bool:
        return (tail, head) in self._arc_index

    def arc_id(self, tail: int, head: int) -> int:
        return self._arc_index[tail, head]

    def out_degree(self, v: int) -> int:
        return len(self.out_arcs[v])

    def in_degree(self, v: int) -> int:
        return len(self.in_arcs[v])

    def isolated_vertices(self) -> list[int]:
        return [v for v in range(self.n)
                if not self.out_arcs[v] and not self.in_arcs[v]]

    def __eq__(self, other):
        if not isinstance(other, Digraph):
            return NotImplemented
        return self.n == other.n and self.arcs == other.arcs

    def __hash__(self):
        return hash((self.n, self.arcs))

    def __repr__(self):
        return f"Digraph(n={self.n}, arcs={[tuple(a) for a in self.arcs]})"


def new_digraph(n: int, arcs: Iterable[tuple[int, int]]) -> Digraph:
    return Digraph(n, arcs)


def _vertex_set(D: Digraph, X: Iterable[int]) -> frozenset[int]:
    s = frozenset(X)
    for v in s:
        if not 0 <= v < D.n:
            raise VertexOutOfRange(f"vertex {v} outside [0, {D.n})")
    return s


def arc_count_between(D: Digraph, X: Iterable[int], Y: Iterable[int]) -> int:
    """Number of arcs with tail in X and head in Y (a(X) when X == Y)."""
    X = _vertex_set(D, X)
    Y = _vertex_set(D, Y)
    return sum(1 for t, h in D.arcs if t in X and h in Y)


def cut_degrees(D: Digraph, X: Iterable[int]) -> tuple[int, int]:
    """Return (d+(X), d-(X)): sizes of the outcut and incut of X."""
    X = _vertex_set(D, X)
    d_plus = d_minus = 0
    for t, h in D.arcs:
        if t in X and h not in X:
            d_plus += 1
        elif h in X and t not in X:
            d_minus += 1
    return d_plus, d_minus


@dataclass(frozen=True)
class Partition3:
    X: frozenset[int]
    Y: frozenset[int]
    Z: frozenset[int]

    @classmethod
    def of(cls, X: Iterable[int], Y: Iterable[int], Z: Iterable[int]) -> "Partition3":
        return cls(frozenset(X), frozenset(Y), frozenset(Z))

    @classmethod
    def from_labels(cls, labels: Iterable[int]) -> "Partition3":
        """Build from per-vertex labels 0 (X), 1 (Y), 2 (Z)."""
        parts: tuple[set, set, set] = (set(), set(), set())
        for v, lab in enumerate(labels):
            parts[int(lab)].add(v)
        return cls.of(*parts)

    def validate(self, n: int) -> None:
        if self.X & self.Y or self.X & self.Z or self.Y & self.Z:
            raise InvalidPartition("partition classes overlap")
        if self.X | self.Y | self.Z != frozenset(range(n)):
            raise InvalidPartition(f"partition does not cover exactly [0, {n})")

    def as_dict(self) -> dict:
        return {"X": sorted(self.X), "Y": sorted(self.Y), "Z": sorted(self.Z)}


# Contribution of an arc to the slack, keyed by (class of tail, class of head)
# with X=0, Y=1, Z=2: +1 for A(Y,X), A(X), A(Y), A(Z,X), A(Y,Z); -1 for A(X,Y).
SLACK_WEIGHTS = (
    (1, -1, 0),   # tail in X
    (1, 1, 1),    # tail in Y
    (1, 0, 0),    # tail in Z
)


def partition_slack(D: Digraph, p: Partition3) -> int:
    """a(Y,X) + a(X) + a(Y) + a(Z,X) + a(Y,Z) - a(X,Y); negative on violation."""
    p.validate(D.n)
    label = [2] * D.n
    for v in p.X:
        label[v] = 0
    for v in p.Y:
        label[v] = 1
    return sum(SLACK_WEIGHTS[label[t]][label[h]] for t, h in D.arcs)


def partition_labels(n: int):
    """(3**n, n) int8 array of class labels (0 = X, 1 = Y, 2 = Z), row k
    decoded from the base-3 digits of k.

    The least significant digit belongs to vertex 0 and digits 0, 1, 2 mean
    Z, X, Y, so mask 0 is the all-Z partition.
    """
    import numpy as np

    masks = np.arange(3 ** n, dtype=np.int64)
    labels = np.empty((3 ** n, n), dtype=np.int8)
    for v in range(n):
        masks, digit = np.divmod(masks, 3)
        labels[:, v] = (digit + 2) % 3
    return labels


def all_partition_slacks(D: Digraph):
    """Slack of every partition of V(D), indexed by mixed-radix mask."""
    import numpy as np

    labels = partition_labels(D.n)
    weights = np.array(SLACK_WEIGHTS, dtype=np.int32).ravel()
    slack = np.zeros(labels.shape[0], dtype=np.int32)
    for t, h in D.arcs:
        slack += weights[3 * labels[:, t] + labels[:, h]]
    return slack


def partition_from_mask(n: int, mask: int) -> Partition3:
    labels = []
    for _ in range(n):
        mask, d = divmod(mask, 3)
        labels.append((d + 2) % 3)
    return Partition3.from_labels(labels)


def is_tournament(D: Digraph) -> bool:
    return D.is_asymmetric and D.m == D.n * (D.n - 1) // 2


def is_bipartite_with(D: Digraph, X: Iterable[int]) -> bool:
    X = _vertex_set(D, X)
    return all((t in X) != (h in X) for t, h in D.arcs)


def weakly_connected(D: Digraph) -> bool:
    """Connectivity of the underlying undirected graph (all n vertices)."""
    if D.n == 0:
        return True
    seen = [False] * D.n
    seen[0] = True
    queue = deque([0])
    while queue:
        v = queue.popleft()
        for a in D.out_arcs[v]:
            w = D.arcs[a].head
            if not seen[w]:
                seen[w] = True
                queue.append(w)
        for a in D.in_arcs[v]:
            w = D.arcs[a].tail
            if not seen[w]:
                seen[w] = True
                queue.append(w)
    return all(seen)


def _reaches_all(D: Digraph, forward: bool) -> bool:
    seen = [False] * D.n
    seen[0] = True
    stack = [0]
    while stack:
        v = stack.pop()
        for a in (D.out_arcs[v] if forward else D.in_arcs[v]):
            w = D.arcs[a].head if forward else D.arcs[a].tail
            if not seen[w]:
                seen[w] = True
                stack.append(w)
    return all(seen)


def strongly_connected(D: Digraph) -> bool:
    """Every nonempty proper subset has a nonempty outcut."""
    if D.n <= 1:
        return True
    return _reaches_all(D, True) and _reaches_all(D, False)


@dataclass(frozen=True)
class StructuralReport:
    is_tournament: bool
    is_bipartite_with: bool | None
    weakly_connected: bool
    strongly_connected: bool


def structural_predicates(D: Digraph, X: Iterable[int] | None = None) -> StructuralReport:
    return StructuralReport(
        is_tournament=is_tournament(D),
        is_bipartite_with=None if X is None else is_bipartite_with(D, X),
        weakly_connected=weakly_connected(D),
        strongly_connected=strongly_connected(D),
    )


def tails(D: Digraph, arc_ids: Iterable[int]) -> frozenset[int]:
    return frozenset(D.arcs[a].tail for a in arc_ids)


def heads(D: Digraph, arc_ids: Iterable[int]) -> frozenset[int]:
    return frozenset(D.arcs[a].head for a in arc_ids)
