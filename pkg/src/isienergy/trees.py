"""Free-tree enumeration and the star/path extremal check for tree ISI energy.

Trees are generated as canonical level sequences (Wright, Richmond,
Odlyzko and McKay): each free tree appears exactly once, rooted at its
centre, so no isomorphism test is needed.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterator

from .graph import Graph, GraphError
from .graphio import write_graph6
from .isi import isi_energy

__all__ = [
    "MAX_TREE_ORDER",
    "ConjectureReport",
    "enumerate_free_trees",
    "level_sequence_to_graph",
    "tree_canonical_form",
    "is_star",
    "is_path",
    "check_conjecture",
]

MAX_TREE_ORDER = 16


def level_sequence_to_graph(levels: list[int]) -> Graph:
    """Preorder level sequence to a tree; vertex ``i`` hangs off the last shallower vertex."""
    edges = []
    stack: list[int] = []
    for v, depth in enumerate(levels):
        del stack[depth:]
        if stack:
            edges.append((stack[-1], v))
        stack.append(v)
    return Graph(len(levels), edges)


def _next_rooted(levels: list[int], p: int | None = None) -> list[int] | None:
    if p is None:
        p = len(levels) - 1
        while levels[p] == 1:
            p -= 1
    if p == 0:
        return None
    q = p - 1
    while levels[q] != levels[p] - 1:
        q -= 1
    out = list(levels)
    for i in range(p, len(out)):
        out[i] = out[i - p + q]
    return out


def _split(levels: list[int]) -> tuple[list[int], list[int]]:
    # left: first principal subtree rerooted; rest: root plus remaining subtrees
    m = len(levels)
    seen_one = False
    for i, d in enumerate(levels):
        if d == 1:
            if seen_one:
                m = i
                break
            seen_one = True
    left = [d - 1 for d in levels[1:m]]
    rest = [0] + levels[m:]
    return left, rest


def _next_free(candidate: list[int]) -> list[int] | None:
    left, rest = _split(candidate)
    lh, rh = max(left), max(rest)
    valid = rh >= lh
    if valid and rh == lh:
        if len(left) > len(rest) or (len(left) == len(rest) and left > rest):
            valid = False
    if valid:
        return candidate
    p = len(left)
    nxt = _next_rooted(candidate, p)
    if nxt is not None and candidate[p] > 2:
        new_left, _ = _split(nxt)
        suffix = list(range(1, max(new_left) + 2))
        nxt[-len(suffix):] = suffix
    return nxt


def _free_level_sequences(n: int) -> Iterator[list[int]]:
    if n <= 2:
        yield list(range(n))
        return
    # start from the path rooted at its centre
    levels: list[int] | None = list(range(n // 2 + 1)) + list(range(1, (n + 1) // 2))
    while levels is not None:
        levels = _next_free(levels)
        if levels is not None:
            yield levels
            levels = _next_rooted(levels)


def enumerate_free_trees(n: int, max_order: int = MAX_TREE_ORDER) -> Iterator[Graph]:
    """Yield every unlabelled tree on ``n`` vertices once, in a fixed order.

    >>> [t.degrees for t in enumerate_free_trees(4)]
    [(2, 2, 1, 1), (3, 1, 1, 1)]
    """
    if n < 1:
        raise GraphError("tree order must be >= 1")
    if n > max_order:
        raise GraphError(f"tree order {n} exceeds cap {max_order}")
    for levels in _free_level_sequences(n):
        yield level_sequence_to_graph(levels)


def _rooted_code(g: Graph, root: int, parent: int) -> str:
    kids = sorted(_rooted_code(g, c, root) for c in g.neighbors(root) if c != parent)
    return "(" + "".join(kids) + ")"


def _centres(g: Graph) -> list[int]:
    degree = list(g.degrees)
    remaining = g.n
    layer = [v for v in range(g.n) if degree[v] <= 1]
    while remaining > 2:
        remaining -= len(layer)
        nxt = []
        for v in layer:
            for w in g.neighbors(v):
                degree[w] -= 1
                if degree[w] == 1:
                    nxt.append(w)
        layer = nxt
    return layer


def tree_canonical_form(g: Graph) -> str:
    """Isomorphism-invariant string for a tree (AHU encoding at the centre)."""
    if g.m != g.n - 1 or not g.is_connected():
        raise GraphError("not a tree")
    return min(_rooted_code(g, c, -1) for c in _centres(g))


def is_star(g: Graph) -> bool:
    return g.n <= 2 or max(g.degrees) == g.n - 1


def is_path(g: Graph) -> bool:
    return g.n <= 2 or sum(1 for d in g.degrees if d == 1) == 2


@dataclass
class ConjectureReport:
    n: int
    tree_count: int
    min_energy: float
    max_energy: float
    argmin_tree: str
    argmax_tree: str
    star_is_min: bool
    path_is_max: bool
    min_tie: bool
    max_tie: bool
    min_gap: float | None
    max_gap: float | None
    full_ranking: list[tuple[str, float]] | None = field(default=None)

    @property
    def confirmed(self) -> bool:
        return self.star_is_min and self.path_is_max and not (self.min_tie or self.max_tie)

    def to_dict(self) -> dict:
        out = {k: v for k, v in self.__dict__.items() if k != "full_ranking"}
        if self.full_ranking is not None:
            out["full_ranking"] = [{"graph6": g6, "energy": e} for g6, e in self.full_ranking]
        return out


def check_conjecture(n: int, tol: float = 1e-9, full_ranking: bool = False) -> ConjectureReport:
    """Rank all trees on ``n`` vertices by ISI energy and test star-minimal, path-maximal.

    A second tree within ``tol`` of either extreme is reported as a tie and
    the corresponding claim is then not asserted.
    """
    if n < 2:
        raise GraphError("need n >= 2")
    ranked = sorted(((isi_energy(t), t) for t in enumerate_free_trees(n)), key=lambda p: p[0])
    (e_min, t_min), (e_max, t_max) = ranked[0], ranked[-1]
    single = len(ranked) == 1
    min_gap = None if single else ranked[1][0] - e_min
    max_gap = None if single else e_max - ranked[-2][0]
    min_tie = min_gap is not None and min_gap <= tol
    max_tie = max_gap is not None and max_gap <= tol
    return ConjectureReport(
        n=n,
        tree_count=len(ranked),
        min_energy=e_min,
        max_energy=e_max,
        argmin_tree=write_graph6(t_min),
        argmax_tree=write_graph6(t_max),
        star_is_min=is_star(t_min) and not min_tie,
        path_is_max=is_path(t_max) and not max_tie,
        min_tie=min_tie,
        max_tie=max_tie,
        min_gap=min_gap,
        max_gap=max_gap,
        full_ranking=[(write_graph6(t), e) for e, t in ranked] if full_ranking else None,
    )
