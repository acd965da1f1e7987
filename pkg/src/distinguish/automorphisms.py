"""Automorphism group enumeration and cycle statistics.

The enumerator returns the complete automorphism group (not generators):
the threshold lemmas take a maximum over all non-identity elements, so
nothing short of the full element list will do.  Search is plain
backtracking over an equitable vertex partition (degrees refined by
neighbor-color multisets until stable), which is plenty for the small
graphs this package targets.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from typing import Iterator

from .graphs import Graph, GraphConstructionError

DEFAULT_CAP = 10**6

Perm = tuple[int, ...]


class CapExceededError(RuntimeError):
    """Enumeration found more elements than the configured cap.

    Carries the partial count; callers should fall back to closed forms.
    """

    def __init__(self, cap: int, partial_count: int):
        super().__init__(
            f"automorphism cap {cap} exceeded ({partial_count} elements found so far)"
        )
        self.cap = cap
        self.partial_count = partial_count


class NotAutomorphismError(ValueError):
    """The given permutation does not map edges to edges."""


def identity(n: int) -> Perm:
    return tuple(range(n))


def compose(p: Perm, q: Perm) -> Perm:
    """Permutation applying q first, then p."""
    return tuple(p[q[i]] for i in range(len(p)))


def inverse(p: Perm) -> Perm:
    inv = [0] * len(p)
    for i, x in enumerate(p):
        inv[x] = i
    return tuple(inv)


def orbit_count(p: Perm) -> int:
    """Number of cycles of a permutation; fixed points count as 1-cycles."""
    seen = [False] * len(p)
    count = 0
    for s in range(len(p)):
        if seen[s]:
            continue
        count += 1
        x = s
        while not seen[x]:
            seen[x] = True
            x = p[x]
    return count


@dataclass(frozen=True)
class CycleStats:
    """Cycle counts of one automorphism acting on vertices and on edges."""

    vertex_cycles: int
    edge_cycles: int

    @property
    def total_cycles(self) -> int:
        return self.vertex_cycles + self.edge_cycles


@dataclass(frozen=True)
class AutomorphismGroup:
    """The full automorphism group of a graph, elements sorted
    lexicographically by image tuple (so the identity comes first)."""

    n: int
    elements: tuple[Perm, ...]

    @property
    def order(self) -> int:
        return len(self.elements)

    @property
    def is_trivial(self) -> bool:
        return len(self.elements) == 1

    def non_identity(self) -> Iterator[Perm]:
        ident = identity(self.n)
        return (p for p in self.elements if p != ident)


def refinement_colors(g: Graph) -> tuple[int, ...]:
    """Equitable vertex coloring: start from degrees, refine each vertex by
    the multiset of its neighbors' colors until stable.

    Color ids are ranks of signatures, so two isomorphic graphs get
    corresponding color classes.
    """
    n = g.n
    colors = list(g.degrees())
    while True:
        sigs = [
            (colors[v], tuple(sorted(colors[w] for w in g.neighbors(v))))
            for v in range(n)
        ]
        rank = {s: i for i, s in enumerate(sorted(set(sigs)))}
        new = [rank[s] for s in sigs]
        if new == colors:
            return tuple(colors)
        colors = new


def _search_maps(
    g: Graph, h: Graph, *, find_all: bool, cap: int | None = None
) -> list[Perm]:
    """Backtracking search for color- and adjacency-preserving bijections
    g -> h.  With find_all=False, stops at the first one."""
    n = g.n
    if n != h.n or g.m != h.m:
        return []
    cg = refinement_colors(g)
    ch = refinement_colors(h)
    if sorted(cg) != sorted(ch):
        return []
    candidates: dict[int, list[int]] = {}
    for u in range(n):
        candidates.setdefault(ch[u], []).append(u)
    cell_size = Counter(cg)
    order = sorted(range(n), key=lambda v: (cell_size[cg[v]], cg[v], v))
    gadj = g.adj_bits
    hadj = h.adj_bits
    img = [-1] * n
    used = [False] * n
    found: list[Perm] = []

    def extend(depth: int) -> bool:
        if depth == n:
            found.append(tuple(img))
            if cap is not None and len(found) > cap:
                raise CapExceededError(cap, cap)
            return not find_all
        v = order[depth]
        row = gadj[v]
        for u in candidates[cg[v]]:
            if used[u]:
                continue
            target = hadj[u]
            ok = True
            for j in range(depth):
                w = order[j]
                if ((row >> w) & 1) != ((target >> img[w]) & 1):
                    ok = False
                    break
            if ok:
                img[v] = u
                used[u] = True
                if extend(depth + 1):
                    return True
                used[u] = False
                img[v] = -1
        return False

    extend(0)
    return found


def enumerate_automorphisms(g: Graph, cap: int = DEFAULT_CAP) -> AutomorphismGroup:
    """All automorphisms of g, sorted lexicographically by image tuple.

    Raises CapExceededError (with the partial count) if the group is larger
    than ``cap``.
    """
    if g.n == 0:
        raise GraphConstructionError("cannot enumerate automorphisms of the empty graph")
    if cap < 1:
        raise ValueError(f"cap must be >= 1, got {cap}")
    elements = _search_maps(g, g, find_all=True, cap=cap)
    return AutomorphismGroup(g.n, tuple(sorted(elements)))


def are_isomorphic(g: Graph, h: Graph) -> bool:
    if g.n != h.n or g.m != h.m:
        return False
    return bool(_search_maps(g, h, find_all=False))


def find_isomorphism(g: Graph, h: Graph) -> Perm | None:
    maps = _search_maps(g, h, find_all=False)
    return maps[0] if maps else None


def induced_edge_permutation(g: Graph, p: Perm) -> Perm:
    """Action of a vertex permutation on edge indices: edge {u, v} goes to
    the index of {p(u), p(v)}."""
    if len(p) != g.n or sorted(p) != list(range(g.n)):
        raise NotAutomorphismError(f"not a bijection on 0..{g.n - 1}")
    images = []
    for u, v in g.edges:
        a, b = p[u], p[v]
        if not g.has_edge(a, b):
            raise NotAutomorphismError(
                f"image of edge ({u}, {v}) is ({a}, {b}), which is not an edge"
            )
        images.append(g.edge_index(a, b))
    return tuple(images)


def cycle_stats(g: Graph, p: Perm) -> CycleStats:
    """Vertex-cycle and edge-cycle counts of an automorphism."""
    edge_perm = induced_edge_permutation(g, p)
    return CycleStats(orbit_count(p), orbit_count(edge_perm))


def group_cycle_stats(g: Graph, group: AutomorphismGroup) -> list[tuple[Perm, CycleStats]]:
    """Cycle stats for every non-identity element."""
    return [(p, cycle_stats(g, p)) for p in group.non_identity()]
