"""Immutable simple graphs with canonical edge indexing, plus the standard
graph families, line graphs, and Cartesian products.

Vertices are integers 0..n-1.  Edges are unordered pairs stored as (u, v)
with u < v, sorted lexicographically; the position of a pair in that list is
its edge index.  Every module in this package relies on that shared indexing,
so permutation actions on edges compose deterministically.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import combinations
from math import prod
from typing import Iterable, Sequence


class FamilyParameterError(ValueError):
    """A family constructor was given a parameter outside its valid range."""


class GraphConstructionError(ValueError):
    """An operation received a graph it cannot work on (empty edge set,
    disconnected factor, too few factors, ...)."""


class Graph:
    """Finite simple undirected graph.

    Immutable by convention: no mutators are provided and all derived
    structures are computed once at construction.  Equality and hashing are
    label-sensitive (vertex-for-vertex), not up to isomorphism.
    """

    __slots__ = ("n", "edges", "_adj_bits", "_nbrs", "_edge_index")

    def __init__(self, n: int, edges: Iterable[tuple[int, int]] = ()):
        if n < 0:
            raise GraphConstructionError(f"vertex count must be >= 0, got {n}")
        canon = set()
        for u, v in edges:
            if u == v:
                raise GraphConstructionError(f"self-loop at vertex {u}")
            if not (0 <= u < n and 0 <= v < n):
                raise GraphConstructionError(f"edge ({u}, {v}) out of range for n={n}")
            canon.add((u, v) if u < v else (v, u))
        self.n = n
        self.edges: tuple[tuple[int, int], ...] = tuple(sorted(canon))
        adj = [0] * n
        for u, v in self.edges:
            adj[u] |= 1 << v
            adj[v] |= 1 << u
        self._adj_bits = tuple(adj)
        self._nbrs = tuple(
            tuple(w for w in range(n) if (adj[v] >> w) & 1) for v in range(n)
        )
        self._edge_index = {e: i for i, e in enumerate(self.edges)}

    @property
    def m(self) -> int:
        return len(self.edges)

    @property
    def adj_bits(self) -> tuple[int, ...]:
        """Adjacency rows as bitsets; bit w of row v is set iff v ~ w."""
        return self._adj_bits

    def has_edge(self, u: int, v: int) -> bool:
        return bool((self._adj_bits[u] >> v) & 1)

    def neighbors(self, v: int) -> tuple[int, ...]:
        return self._nbrs[v]

    def degree(self, v: int) -> int:
        return len(self._nbrs[v])

    def degrees(self) -> tuple[int, ...]:
        return tuple(len(nb) for nb in self._nbrs)

    def edge_index(self, u: int, v: int) -> int:
        """Index of edge {u, v} in the sorted edge list."""
        key = (u, v) if u < v else (v, u)
        try:
            return self._edge_index[key]
        except KeyError:
            raise KeyError(f"{key} is not an edge") from None

    def components(self) -> list[tuple[int, ...]]:
        """Connected components as sorted vertex tuples, in order of smallest vertex."""
        seen = [False] * self.n
        comps = []
        for s in range(self.n):
            if seen[s]:
                continue
            stack, comp = [s], []
            seen[s] = True
            while stack:
                v = stack.pop()
                comp.append(v)
                for w in self._nbrs[v]:
                    if not seen[w]:
                        seen[w] = True
                        stack.append(w)
            comps.append(tuple(sorted(comp)))
        return comps

    def is_connected(self) -> bool:
        return self.n <= 1 or len(self.components()) == 1

    def induced_subgraph(self, vertices: Sequence[int]) -> "Graph":
        """Subgraph induced on the given vertices, relabelled 0..k-1 in the
        order of the (sorted) input sequence."""
        vs = sorted(set(vertices))
        pos = {v: i for i, v in enumerate(vs)}
        edges = [
            (pos[u], pos[v])
            for u, v in combinations(vs, 2)
            if self.has_edge(u, v)
        ]
        return Graph(len(vs), edges)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Graph):
            return NotImplemented
        return self.n == other.n and self.edges == other.edges

    def __hash__(self) -> int:
        return hash((self.n, self.edges))

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, m={self.m})"


# ---------------------------------------------------------------------------
# Graph families
# ---------------------------------------------------------------------------

FAMILY_KINDS = (
    "path",
    "cycle",
    "complete",
    "biclique",
    "star",
    "doublestar",
    "kneser",
    "circulant",
    "empty",
)


@dataclass(frozen=True)
class FamilySpec:
    """A named graph family instance: kind plus integer parameters.

    ``connection`` is used only by the circulant family.
    """

    kind: str
    params: tuple[int, ...]
    connection: frozenset[int] = field(default_factory=frozenset)

    def label(self) -> str:
        body = ",".join(str(p) for p in self.params)
        if self.kind == "circulant":
            conn = ",".join(str(s) for s in sorted(self.connection))
            return f"circulant:{body}:{conn}"
        return f"{self.kind}:{body}"


def _require(cond: bool, msg: str) -> None:
    if not cond:
        raise FamilyParameterError(msg)


def path(n: int) -> Graph:
    _require(n >= 1, f"path requires n >= 1, got {n}")
    return Graph(n, [(i, i + 1) for i in range(n - 1)])


def cycle(n: int) -> Graph:
    _require(n >= 3, f"cycle requires n >= 3, got {n}")
    return Graph(n, [(i, (i + 1) % n) for i in range(n)])


def complete(n: int) -> Graph:
    _require(n >= 1, f"complete requires n >= 1, got {n}")
    return Graph(n, combinations(range(n), 2))


def complete_bipartite(m: int, n: int) -> Graph:
    _require(m >= 1 and n >= 1, f"biclique requires m, n >= 1, got ({m}, {n})")
    return Graph(m + n, [(a, m + b) for a in range(m) for b in range(n)])


def star(m: int) -> Graph:
    """K_{1,m}: vertex 0 is the center, 1..m are leaves."""
    _require(m >= 1, f"star requires m >= 1, got {m}")
    return Graph(m + 1, [(0, i) for i in range(1, m + 1)])


def double_star(n: int) -> Graph:
    """Two nonadjacent centers (vertices n and n+1) each adjacent to the same
    n leaves 0..n-1."""
    _require(n >= 1, f"doublestar requires n >= 1, got {n}")
    edges = [(i, n) for i in range(n)] + [(i, n + 1) for i in range(n)]
    return Graph(n + 2, edges)


def kneser(n: int, k: int = 2) -> Graph:
    """Kneser graph on the 2-subsets of an n-set; adjacency is disjointness.

    Only k=2 is supported.  Vertices are the 2-subsets in lexicographic
    order, so kneser(5) is the Petersen graph.
    """
    _require(k == 2, f"kneser supports only k=2, got k={k}")
    _require(n >= 5, f"kneser requires n >= 5, got {n}")
    subsets = list(combinations(range(n), 2))
    edges = [
        (i, j)
        for i, j in combinations(range(len(subsets)), 2)
        if not set(subsets[i]) & set(subsets[j])
    ]
    return Graph(len(subsets), edges)


def circulant(n: int, connection: Iterable[int]) -> Graph:
    """Circulant graph: i ~ j iff (i - j) mod n is in the connection set or
    its negation."""
    _require(n >= 1, f"circulant requires n >= 1, got {n}")
    conn = frozenset(connection)
    _require(
        all(1 <= s <= n // 2 for s in conn),
        f"circulant connection set must lie in 1..{n // 2}, got {sorted(conn)}",
    )
    edges = set()
    for i in range(n):
        for s in conn:
            edges.add(tuple(sorted((i, (i + s) % n))))
    return Graph(n, edges)


def empty(n: int) -> Graph:
    _require(n >= 1, f"empty requires n >= 1, got {n}")
    return Graph(n)


def build_family(spec: FamilySpec) -> Graph:
    """Construct the canonical labelled instance of a family spec."""
    kind, params = spec.kind, spec.params
    if kind == "path":
        return path(*params)
    if kind == "cycle":
        return cycle(*params)
    if kind == "complete":
        return complete(*params)
    if kind == "biclique":
        return complete_bipartite(*params)
    if kind == "star":
        return star(*params)
    if kind == "doublestar":
        return double_star(*params)
    if kind == "kneser":
        return kneser(*params)
    if kind == "circulant":
        return circulant(params[0], spec.connection)
    if kind == "empty":
        return empty(*params)
    raise FamilyParameterError(f"unknown family kind {kind!r}")


def parse_family(text: str) -> FamilySpec:
    """Parse the CLI mini-grammar ``name:params``.

    Examples: ``path:4``, ``biclique:2,3``, ``kneser:5,2``, ``circulant:7:1,2``.
    """
    parts = text.strip().split(":")
    kind = parts[0].lower()
    if kind not in FAMILY_KINDS:
        raise FamilyParameterError(
            f"unknown family {kind!r}; expected one of {', '.join(FAMILY_KINDS)}"
        )
    try:
        if kind == "circulant":
            if len(parts) != 3:
                raise FamilyParameterError(
                    f"circulant spec must look like circulant:n:s1,s2 (got {text!r})"
                )
            n = int(parts[1])
            conn = frozenset(int(s) for s in parts[2].split(",") if s)
            return FamilySpec("circulant", (n,), conn)
        if len(parts) != 2 or not parts[1]:
            raise FamilyParameterError(f"family spec must look like name:params (got {text!r})")
        params = tuple(int(p) for p in parts[1].split(","))
    except ValueError as exc:
        raise FamilyParameterError(f"bad parameter in family spec {text!r}: {exc}") from None
    expected = {"biclique": (2,), "kneser": (1, 2)}.get(kind, (1,))
    if len(params) not in expected:
        raise FamilyParameterError(
            f"{kind} takes {' or '.join(map(str, expected))} parameter(s), got {len(params)}"
        )
    if kind == "kneser" and len(params) == 1:
        params = (params[0], 2)
    return FamilySpec(kind, params)


# ---------------------------------------------------------------------------
# Derived constructions
# ---------------------------------------------------------------------------


def line_graph(g: Graph) -> Graph:
    """Graph on g's edge indices; two indices are adjacent iff the edges
    share an endpoint in g."""
    if g.m < 1:
        raise GraphConstructionError("line graph requires at least one edge")
    edges = [
        (i, j)
        for (i, (a, b)), (j, (c, d)) in combinations(enumerate(g.edges), 2)
        if a in (c, d) or b in (c, d)
    ]
    return Graph(g.m, edges)


def cartesian_product(factors: Sequence[Graph]) -> Graph:
    """Cartesian product of two or more connected graphs.

    Vertex tuples are encoded mixed-radix with the last coordinate varying
    fastest.  Two tuples are adjacent iff they differ in exactly one
    coordinate, by an edge of that factor.
    """
    if len(factors) < 2:
        raise GraphConstructionError(
            f"cartesian product requires at least 2 factors, got {len(factors)}"
        )
    for i, f in enumerate(factors):
        if f.n == 0:
            raise GraphConstructionError(f"factor {i} is empty")
        if not f.is_connected():
            raise GraphConstructionError(f"factor {i} is disconnected")
    dims = [f.n for f in factors]
    strides = [prod(dims[i + 1 :]) for i in range(len(dims))]
    total = prod(dims)
    edges = []
    for idx in range(total):
        rem = idx
        coords = []
        for s in strides:
            coords.append(rem // s)
            rem %= s
        for i, f in enumerate(factors):
            x = coords[i]
            for w in f.neighbors(x):
                if w > x:
                    edges.append((idx, idx + (w - x) * strides[i]))
    return Graph(total, edges)


def product_order_and_size(factors: Sequence[tuple[int, int]]) -> tuple[int, int]:
    """(vertex count, edge count) of a Cartesian product given factor
    (order, size) pairs, without building it."""
    n = prod(f[0] for f in factors)
    m = sum(f[1] * prod(g[0] for j, g in enumerate(factors) if j != i) for i, f in enumerate(factors))
    return n, m
