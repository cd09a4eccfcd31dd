"""Immutable simple graphs, standard families and graph operations.

Vertices are 0-indexed internally. The adjacency relation is held twice:
as a packed upper-triangular bit set (graph6 bit order, so I/O is a
straight copy) and as per-vertex neighbour sets for traversal.
"""

from __future__ import annotations

from collections import deque
from itertools import combinations
from typing import Iterable, Sequence

import numpy as np

__all__ = [
    "Graph",
    "GraphError",
    "FAMILIES",
    "path",
    "cycle",
    "complete",
    "complete_bipartite",
    "star",
    "empty",
    "petersen",
    "prism",
    "circulant",
    "build_family",
    "disjoint_union",
    "complement",
    "line_graph",
    "iterated_line_graph",
    "DEFAULT_SIZE_CAP",
]

DEFAULT_SIZE_CAP = 10_000


class GraphError(ValueError):
    """Invalid graph construction or hypothesis violation."""


def _bit_index(u: int, v: int) -> int:
    # column-major upper triangle: (0,1), (0,2), (1,2), (0,3), ...
    if u > v:
        u, v = v, u
    return v * (v - 1) // 2 + u


class Graph:
    """Simple undirected graph on vertices ``0..n-1``.

    Instances are immutable; every operation returns a new graph.
    """

    __slots__ = ("_n", "_bits", "_nbrs", "_edges", "_degrees")

    def __init__(self, n: int, edges: Iterable[tuple[int, int]] = ()):
        if not isinstance(n, (int, np.integer)) or n < 0:
            raise GraphError(f"vertex count must be a non-negative integer, got {n!r}")
        n = int(n)
        nbrs: list[set[int]] = [set() for _ in range(n)]
        bits = 0
        for e in edges:
            u, v = (int(x) for x in e)
            if u == v:
                raise GraphError(f"self-loop at vertex {u}")
            if not (0 <= u < n and 0 <= v < n):
                raise GraphError(f"edge ({u}, {v}) out of range for n={n}")
            nbrs[u].add(v)
            nbrs[v].add(u)
            bits |= 1 << _bit_index(u, v)
        self._n = n
        self._bits = bits
        self._nbrs = tuple(frozenset(s) for s in nbrs)
        self._edges = tuple(sorted((u, v) for u in range(n) for v in self._nbrs[u] if u < v))
        self._degrees = tuple(len(s) for s in self._nbrs)

    @classmethod
    def _from_bits(cls, n: int, bits: int) -> "Graph":
        edges = []
        k = 0
        for v in range(1, n):
            for u in range(v):
                if bits >> k & 1:
                    edges.append((u, v))
                k += 1
        return cls(n, edges)

    @property
    def n(self) -> int:
        return self._n

    @property
    def m(self) -> int:
        return len(self._edges)

    @property
    def edges(self) -> tuple[tuple[int, int], ...]:
        """Edges as sorted ``(u, v)`` pairs with ``u < v``."""
        return self._edges

    @property
    def degrees(self) -> tuple[int, ...]:
        return self._degrees

    @property
    def bits(self) -> int:
        """Packed upper-triangle adjacency bits in graph6 order."""
        return self._bits

    def neighbors(self, v: int) -> frozenset[int]:
        return self._nbrs[v]

    def has_edge(self, u: int, v: int) -> bool:
        if u == v:
            return False
        return bool(self._bits >> _bit_index(u, v) & 1)

    def adjacency_matrix(self) -> np.ndarray:
        a = np.zeros((self._n, self._n))
        if self._edges:
            u, v = np.array(self._edges).T
            a[u, v] = 1.0
            a[v, u] = 1.0
        return a

    def relabel(self, perm: Sequence[int]) -> "Graph":
        """Return the graph with vertex ``v`` renamed to ``perm[v]``."""
        if sorted(perm) != list(range(self._n)):
            raise GraphError("relabel needs a permutation of 0..n-1")
        return Graph(self._n, ((perm[u], perm[v]) for u, v in self._edges))

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Graph):
            return NotImplemented
        return self._n == other._n and self._bits == other._bits

    def __hash__(self) -> int:
        return hash((self._n, self._bits))

    def __repr__(self) -> str:
        return f"Graph(n={self._n}, m={self.m})"

    # -- structural queries -------------------------------------------------

    def components(self) -> list[list[int]]:
        """Vertex lists of the connected components, in order of least vertex."""
        seen = [False] * self._n
        comps = []
        for s in range(self._n):
            if seen[s]:
                continue
            seen[s] = True
            comp = [s]
            queue = deque([s])
            while queue:
                u = queue.popleft()
                for w in self._nbrs[u]:
                    if not seen[w]:
                        seen[w] = True
                        comp.append(w)
                        queue.append(w)
            comps.append(sorted(comp))
        return comps

    def subgraph(self, vertices: Sequence[int]) -> "Graph":
        """Induced subgraph, vertices renumbered in the given order."""
        index = {v: i for i, v in enumerate(vertices)}
        return Graph(
            len(vertices),
            ((index[u], index[v]) for u, v in self._edges if u in index and v in index),
        )

    def is_connected(self) -> bool:
        return self._n > 0 and len(self.components()) == 1

    def eccentricity(self, v: int) -> float:
        dist = self._bfs(v)
        if len(dist) < self._n:
            return float("inf")
        return max(dist.values())

    def diameter(self) -> float:
        """Largest eccentricity; ``inf`` for a disconnected graph."""
        if self._n == 0:
            raise GraphError("diameter of the null graph is undefined")
        return max(self.eccentricity(v) for v in range(self._n))

    def bipartition(self) -> tuple[list[int], list[int]] | None:
        """Two-colouring as ``(side0, side1)``, or ``None`` if not bipartite."""
        colour = [-1] * self._n
        for s in range(self._n):
            if colour[s] >= 0:
                continue
            colour[s] = 0
            queue = deque([s])
            while queue:
                u = queue.popleft()
                for w in self._nbrs[u]:
                    if colour[w] < 0:
                        colour[w] = 1 - colour[u]
                        queue.append(w)
                    elif colour[w] == colour[u]:
                        return None
        return (
            [v for v in range(self._n) if colour[v] == 0],
            [v for v in range(self._n) if colour[v] == 1],
        )

    def is_bipartite(self) -> bool:
        return self.bipartition() is not None

    def regularity(self) -> int | None:
        """Common degree ``k`` if the graph is k-regular, else ``None``."""
        if self._n == 0 or len(set(self._degrees)) != 1:
            return None
        return self._degrees[0]

    def _bfs(self, s: int) -> dict[int, int]:
        dist = {s: 0}
        queue = deque([s])
        while queue:
            u = queue.popleft()
            for w in self._nbrs[u]:
                if w not in dist:
                    dist[w] = dist[u] + 1
                    queue.append(w)
        return dist


# -- families ---------------------------------------------------------------


def path(n: int) -> Graph:
    if n < 1:
        raise GraphError("path needs n >= 1")
    return Graph(n, ((i, i + 1) for i in range(n - 1)))


def cycle(n: int) -> Graph:
    if n < 3:
        raise GraphError("cycle needs n >= 3")
    return Graph(n, [(i, (i + 1) % n) for i in range(n)])


def complete(n: int) -> Graph:
    if n < 1:
        raise GraphError("complete graph needs n >= 1")
    return Graph(n, combinations(range(n), 2))


def complete_bipartite(m: int, n: int) -> Graph:
    """K_{m,n} with parts ``0..m-1`` and ``m..m+n-1``."""
    if m < 1 or n < 1:
        raise GraphError("complete bipartite graph needs m, n >= 1")
    return Graph(m + n, ((i, m + j) for i in range(m) for j in range(n)))


def star(n: int) -> Graph:
    """Star of order n, i.e. K_{1,n-1} with centre 0."""
    if n < 2:
        raise GraphError("star needs n >= 2")
    return complete_bipartite(1, n - 1)


def empty(n: int) -> Graph:
    if n < 1:
        raise GraphError("empty graph needs n >= 1")
    return Graph(n)


def petersen() -> Graph:
    outer = [(i, (i + 1) % 5) for i in range(5)]
    spokes = [(i, i + 5) for i in range(5)]
    inner = [(5 + i, 5 + (i + 2) % 5) for i in range(5)]
    return Graph(10, outer + spokes + inner)


def prism(n: int = 3) -> Graph:
    """Prism C_n x K_2 (the triangular prism by default)."""
    if n < 3:
        raise GraphError("prism needs n >= 3")
    ring = [(i, (i + 1) % n) for i in range(n)]
    return Graph(2 * n, ring + [(u + n, v + n) for u, v in ring] + [(i, i + n) for i in range(n)])


def circulant(n: int, jumps: Iterable[int]) -> Graph:
    edges = set()
    for j in jumps:
        j %= n
        if j == 0:
            raise GraphError("circulant jump must be non-zero mod n")
        for i in range(n):
            u, v = i, (i + j) % n
            edges.add((min(u, v), max(u, v)))
    return Graph(n, edges)


FAMILIES = {
    "path": (path, 1),
    "cycle": (cycle, 1),
    "complete": (complete, 1),
    "complete-bipartite": (complete_bipartite, 2),
    "star": (star, 1),
    "empty": (empty, 1),
}


def build_family(tag: str, *params: int) -> Graph:
    """Build a standard family member, e.g. ``build_family("complete-bipartite", 2, 3)``."""
    try:
        ctor, arity = FAMILIES[tag]
    except KeyError:
        raise GraphError(f"unknown family {tag!r}; expected one of {sorted(FAMILIES)}") from None
    if len(params) != arity:
        raise GraphError(f"family {tag!r} takes {arity} parameter(s), got {len(params)}")
    return ctor(*params)


# -- operations -------------------------------------------------------------


def disjoint_union(*graphs: Graph) -> Graph:
    edges = []
    offset = 0
    for g in graphs:
        edges.extend((u + offset, v + offset) for u, v in g.edges)
        offset += g.n
    return Graph(offset, edges)


def complement(g: Graph) -> Graph:
    n = g.n
    full = (1 << (n * (n - 1) // 2)) - 1
    return Graph._from_bits(n, full & ~g.bits)


def line_graph(g: Graph) -> Graph:
    """Line graph; vertex ``i`` is the i-th edge of ``g`` in lexicographic order."""
    index = {e: i for i, e in enumerate(g.edges)}
    edges = []
    for v in range(g.n):
        incident = sorted(index[(min(v, w), max(v, w))] for w in g.neighbors(v))
        edges.extend(combinations(incident, 2))
    return Graph(g.m, edges)


def iterated_line_graph(g: Graph, times: int, size_cap: int = DEFAULT_SIZE_CAP) -> Graph:
    """Apply :func:`line_graph` ``times`` times, refusing to exceed ``size_cap`` vertices."""
    if times < 0:
        raise GraphError("iteration count must be non-negative")
    for step in range(times):
        if g.m > size_cap:
            raise GraphError(
                f"line graph iterate {step + 1} would have {g.m} vertices (cap {size_cap})"
            )
        g = line_graph(g)
    return g
