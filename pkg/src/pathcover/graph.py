"""Immutable simple graphs with shortest-path and clique primitives.

Vertices are dense integers ``0..n-1``. Edges carry a canonical dense index
(position in the lexicographically sorted edge list) so that edge subsets can
be handled as fixed-width integer bitmasks by the cover machinery. Everything
here is a pure function of immutable inputs and safe to share across workers.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from typing import Iterable, Sequence

UNREACHABLE = -1

DEFAULT_GEODESIC_CAP = 100_000
DEFAULT_CLIQUE_CAP = 100_000


class GraphError(ValueError):
    """Base class for graph construction and precondition failures."""


class SelfLoopError(GraphError):
    pass


class DuplicateEdgeError(GraphError):
    pass


class VertexRangeError(GraphError):
    pass


class DisconnectedGraphError(GraphError):
    pass


class EnumerationCapError(RuntimeError):
    """An enumeration would exceed its configured cap; carries the cap."""

    def __init__(self, message: str, cap: int):
        super().__init__(message)
        self.cap = cap


class Graph:
    """Simple undirected graph, immutable after construction.

    Prefer :func:`build_graph`, which validates and normalizes the edge list.
    ``edges`` is sorted lexicographically with ``u < v`` in every pair, and
    ``adj[v]`` lists neighbors in ascending order. ``labels`` is optional
    display metadata (one string per vertex) and never affects semantics.
    """

    __slots__ = ("n", "edges", "adj", "labels", "_eidx")

    def __init__(
        self,
        n: int,
        edges: tuple[tuple[int, int], ...],
        adj: tuple[tuple[int, ...], ...],
        labels: tuple[str, ...] | None = None,
    ):
        self.n = n
        self.edges = edges
        self.adj = adj
        self.labels = labels
        self._eidx = {e: i for i, e in enumerate(edges)}

    @property
    def m(self) -> int:
        return len(self.edges)

    def degree(self, v: int) -> int:
        return len(self.adj[v])

    def has_edge(self, u: int, v: int) -> bool:
        return ((u, v) if u < v else (v, u)) in self._eidx

    def edge_id(self, u: int, v: int) -> int:
        """Canonical index of an edge; raises KeyError for non-edges."""
        return self._eidx[(u, v) if u < v else (v, u)]

    def edge_mask(self, pairs: Iterable[tuple[int, int]]) -> int:
        mask = 0
        for u, v in pairs:
            mask |= 1 << self.edge_id(u, v)
        return mask

    def full_edge_mask(self) -> int:
        return (1 << self.m) - 1

    def __eq__(self, other: object):
        if not isinstance(other, Graph):
            return NotImplemented
        return self.n == other.n and self.edges == other.edges

    def __hash__(self) -> int:
        return hash((self.n, self.edges))

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, m={self.m})"


def build_graph(
    n: int,
    edge_list: Iterable[tuple[int, int]],
    labels: Sequence[str] | None = None,
) -> Graph:
    """Validate an edge list and return the normalized :class:`Graph`.

    Self-loops, duplicate edges (in either orientation) and endpoints outside
    ``0..n-1`` are each rejected with a distinct exception type.
    """
    if n < 0:
        raise VertexRangeError(f"vertex count must be non-negative, got {n}")
    seen: set[tuple[int, int]] = set()
    for u, v in edge_list:
        if not (0 <= u < n) or not (0 <= v < n):
            raise VertexRangeError(f"edge ({u}, {v}) out of range for n={n}")
        if u == v:
            raise SelfLoopError(f"self-loop at vertex {u}")
        e = (u, v) if u < v else (v, u)
        if e in seen:
            raise DuplicateEdgeError(f"duplicate edge {e}")
        seen.add(e)
    edges = tuple(sorted(seen))
    adj_lists: list[list[int]] = [[] for _ in range(n)]
    for u, v in edges:
        adj_lists[u].append(v)
        adj_lists[v].append(u)
    adj = tuple(tuple(neigh) for neigh in adj_lists)  # already ascending
    norm_labels: tuple[str, ...] | None = None
    if labels is not None:
        norm_labels = tuple(str(s) for s in labels)
        if len(norm_labels) != n:
            raise VertexRangeError(
                f"expected {n} labels, got {len(norm_labels)}"
            )
    return Graph(n, edges, adj, norm_labels)


@dataclass(frozen=True)
class DistanceField:
    """BFS distances from ``source``; unreachable vertices get UNREACHABLE."""

    source: int
    dist: tuple[int, ...]


def bfs_distances(G: Graph, u: int) -> DistanceField:
    """Exact unweighted shortest-path distances from ``u``."""
    if not 0 <= u < G.n:
        raise VertexRangeError(f"source {u} out of range for n={G.n}")
    dist = [UNREACHABLE] * G.n
    dist[u] = 0
    queue = deque([u])
    while queue:
        x = queue.popleft()
        dx = dist[x]
        for y in G.adj[x]:
            if dist[y] == UNREACHABLE:
                dist[y] = dx + 1
                queue.append(y)
    return DistanceField(u, tuple(dist))


def is_connected(G: Graph) -> bool:
    if G.n <= 1:
        return True
    return UNREACHABLE not in bfs_distances(G, 0).dist


def require_connected(G: Graph) -> None:
    if not is_connected(G):
        raise DisconnectedGraphError("operation requires a connected graph")


def eccentricity(G: Graph, u: int) -> int:
    field = bfs_distances(G, u)
    if UNREACHABLE in field.dist:
        raise DisconnectedGraphError("eccentricity requires a connected graph")
    return max(field.dist)


def diameter(G: Graph) -> int:
    """Greatest distance between any pair of vertices."""
    if G.n < 1:
        raise VertexRangeError("diameter requires at least one vertex")
    require_connected(G)
    return max(max(bfs_distances(G, u).dist) for u in range(G.n))


@dataclass(frozen=True)
class GeodesicDag:
    """Arcs ``x -> y`` with ``d(source, x) + 1 = d(source, y) <= k``.

    The union of the arcs, read as undirected edges, is exactly the set of
    edges lying on some geodesic of length at most ``k`` starting at the
    source; every such geodesic is a path in this DAG.
    """

    source: int
    k: int
    arcs: frozenset[tuple[int, int]]


def geodesic_dag(G: Graph, u: int, k: int) -> GeodesicDag:
    """Depth-truncated shortest-path DAG from ``u``. ``k = 0`` gives no arcs."""
    field = bfs_distances(G, u)
    if UNREACHABLE in field.dist:
        raise DisconnectedGraphError("geodesic DAG requires a connected graph")
    dist = field.dist
    arcs = set()
    for x, y in G.edges:
        dx, dy = dist[x], dist[y]
        if dx + 1 == dy and dy <= k:
            arcs.add((x, y))
        elif dy + 1 == dx and dx <= k:
            arcs.add((y, x))
    return GeodesicDag(u, k, frozenset(arcs))


def enumerate_geodesics(
    G: Graph, u: int, v: int, cap: int = DEFAULT_GEODESIC_CAP
) -> tuple[tuple[int, ...], ...]:
    """Every geodesic from ``u`` to ``v`` in lexicographic vertex order.

    Each path is a vertex tuple of length ``d(u, v) + 1``. Raises
    :class:`EnumerationCapError` when more than ``cap`` geodesics exist, so a
    combinatorial blow-up is an explicit failure rather than a truncation.
    """
    if not 0 <= v < G.n:
        raise VertexRangeError(f"target {v} out of range for n={G.n}")
    du = bfs_distances(G, u).dist
    if du[v] == UNREACHABLE:
        raise DisconnectedGraphError(f"{u} and {v} are in different components")
    if u == v:
        return ((u,),)
    dv = bfs_distances(G, v).dist
    out: list[tuple[int, ...]] = []
    path = [u]

    def extend(x: int) -> None:
        if x == v:
            if len(out) >= cap:
                raise EnumerationCapError(
                    f"more than {cap} geodesics between {u} and {v}", cap
                )
            out.append(tuple(path))
            return
        for y in G.adj[x]:
            if du[y] == du[x] + 1 and dv[y] == dv[x] - 1:
                path.append(y)
                extend(y)
                path.pop()

    extend(u)
    return tuple(out)


def count_geodesics(G: Graph, u: int, v: int) -> int:
    """Number of geodesics between ``u`` and ``v`` via layer-by-layer DP."""
    du = bfs_distances(G, u).dist
    if du[v] == UNREACHABLE:
        raise DisconnectedGraphError(f"{u} and {v} are in different components")
    counts = [0] * G.n
    counts[u] = 1
    order = sorted((x for x in range(G.n) if du[x] != UNREACHABLE),
                   key=lambda x: du[x])
    for x in order:
        if du[x] >= du[v]:
            continue
        cx = counts[x]
        if cx == 0:
            continue
        for y in G.adj[x]:
            if du[y] == du[x] + 1:
                counts[y] += cx
    return counts[v]


def simplicial_vertices(G: Graph) -> frozenset[int]:
    """Vertices whose neighborhood induces a clique."""
    out = set()
    for v in range(G.n):
        neigh = G.adj[v]
        if all(G.has_edge(a, b) for i, a in enumerate(neigh)
               for b in neigh[i + 1:]):
            out.add(v)
    return frozenset(out)


def maximal_cliques(
    G: Graph, cap: int = DEFAULT_CLIQUE_CAP
) -> tuple[tuple[int, ...], ...]:
    """All maximal cliques, as sorted vertex tuples in lexicographic order.

    Bron-Kerbosch with pivoting; guarded by a configurable count cap since the
    output can be exponential.
    """
    if G.n == 0:
        return ()
    adjsets = [frozenset(neigh) for neigh in G.adj]
    out: list[tuple[int, ...]] = []

    def expand(r: list[int], p: set[int], x: set[int]) -> None:
        if not p and not x:
            if len(out) >= cap:
                raise EnumerationCapError(
                    f"more than {cap} maximal cliques", cap
                )
            out.append(tuple(sorted(r)))
            return
        pivot = max(p | x, key=lambda w: (len(adjsets[w] & p), -w))
        for v in sorted(p - adjsets[pivot]):
            r.append(v)
            expand(r, p & adjsets[v], x & adjsets[v])
            r.pop()
            p.remove(v)
            x.add(v)

    expand([], set(range(G.n)), set())
    return tuple(sorted(out))


# ---------------------------------------------------------------------------
# Shared edge-list text format: first line "n m", then m lines "u v" with
# u < v in ascending lexicographic order. Blank lines and '#' comments are
# ignored on input.
# ---------------------------------------------------------------------------

def format_edgelist(G: Graph) -> str:
    lines = [f"{G.n} {G.m}"]
    lines.extend(f"{u} {v}" for u, v in G.edges)
    return "\n".join(lines) + "\n"


def parse_edgelist(text: str) -> Graph:
    rows = []
    for line in text.splitlines():
        line = line.strip()
        if line and not line.startswith("#"):
            rows.append(line)
    if not rows:
        raise GraphError("empty edge-list document")
    head = rows[0].split()
    if len(head) != 2:
        raise GraphError(f"bad header {rows[0]!r}, expected 'n m'")
    try:
        n, m = int(head[0]), int(head[1])
    except ValueError as exc:
        raise GraphError(f"bad header {rows[0]!r}: {exc}") from None
    body = rows[1:]
    if len(body) != m:
        raise GraphError(f"header declares {m} edges, found {len(body)}")
    pairs = []
    for row in body:
        parts = row.split()
        if len(parts) != 2:
            raise GraphError(f"bad edge line {row!r}")
        try:
            pairs.append((int(parts[0]), int(parts[1])))
        except ValueError as exc:
            raise GraphError(f"bad edge line {row!r}: {exc}") from None
    return build_graph(n, pairs)


def format_labels(G: Graph) -> str:
    """Label sidecar: one line per vertex, 'index label'."""
    labels = G.labels if G.labels is not None else tuple(
        str(v) for v in range(G.n))
    return "\n".join(f"{v} {labels[v]}" for v in range(G.n)) + ("\n" if G.n else "")
