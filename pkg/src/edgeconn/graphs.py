"""Small-graph kernel: immutable bit-row adjacency, graph6 codec, distances.

Vertices are 0..n-1.  Each row of ``adj`` is an int whose bit v says whether
the row vertex is adjacent to v, so neighborhood algebra is plain int
arithmetic.  Everything downstream (invariants, pattern matching, the
enumerator) works on these rows.
"""

from __future__ import annotations

from collections.abc import Iterable


class GraphError(ValueError):
    """Malformed graph data or an operation applied outside its domain."""


class Graph6Error(GraphError):
    """A graph6 record that cannot be decoded; the message names the offset."""


def _bits(mask: int):
    """Yield the set bit positions of ``mask`` in ascending order."""
    while mask:
        b = mask & -mask
        yield b.bit_length() - 1
        mask ^= b


class Graph:
    """An undirected simple graph on vertices 0..n-1 with bit-row adjacency."""

    __slots__ = ("n", "adj")

    def __init__(self, n: int, adj: Iterable[int]):
        adj = tuple(adj)
        if n < 0:
            raise GraphError(f"vertex count must be nonnegative, got {n}")
        if len(adj) != n:
            raise GraphError(f"expected {n} adjacency rows, got {len(adj)}")
        full = (1 << n) - 1
        for v, row in enumerate(adj):
            if row & ~full:
                raise GraphError(f"row {v} mentions vertices outside 0..{n - 1}")
            if row >> v & 1:
                raise GraphError(f"loop at vertex {v}")
        for v, row in enumerate(adj):
            for u in _bits(row):
                if not adj[u] >> v & 1:
                    raise GraphError(f"edge {v}-{u} is not symmetric")
        object.__setattr__(self, "n", n)
        object.__setattr__(self, "adj", adj)

    def __setattr__(self, name, value):
        raise AttributeError("Graph is immutable")

    def __eq__(self, other):
        return isinstance(other, Graph) and self.n == other.n and self.adj == other.adj

    def __hash__(self):
        return hash((self.n, self.adj))

    def __repr__(self):
        return f"Graph(n={self.n}, m={self.m})"

    @property
    def m(self) -> int:
        """Return the number of edges."""
        return sum(row.bit_count() for row in self.adj) // 2

    def degree(self, v: int) -> int:
        return self.adj[v].bit_count()

    def degree_sequence(self) -> tuple[int, ...]:
        """Return vertex degrees sorted in nonincreasing order."""
        return tuple(sorted((row.bit_count() for row in self.adj), reverse=True))

    def has_edge(self, u: int, v: int) -> bool:
        return bool(self.adj[u] >> v & 1)

    def edges(self) -> list[tuple[int, int]]:
        """Return all edges as (u, v) with u < v, in lexicographic order."""
        out = []
        for u in range(self.n):
            row = self.adj[u] >> (u + 1) << (u + 1)
            out.extend((u, v) for v in _bits(row))
        return out

    def neighbors(self, v: int) -> list[int]:
        return list(_bits(self.adj[v]))


def from_edges(n: int, edges: Iterable[tuple[int, int]]) -> Graph:
    """Build a graph on n vertices from an edge list."""
    rows = [0] * n
    for u, v in edges:
        if not (0 <= u < n and 0 <= v < n):
            raise GraphError(f"edge {u}-{v} outside 0..{n - 1}")
        if u == v:
            raise GraphError(f"loop at vertex {u}")
        rows[u] |= 1 << v
        rows[v] |= 1 << u
    return Graph(n, rows)


def induced(g: Graph, vertices: int | Iterable[int]) -> Graph:
    """Return the subgraph induced by ``vertices`` (bit mask or iterable).

    Kept vertices are relabeled 0.. in ascending original order.
    """
    mask = vertices if isinstance(vertices, int) else _iterable_to_mask(g.n, vertices)
    if mask & ~((1 << g.n) - 1):
        raise GraphError("vertex selection outside 0..n-1")
    keep = list(_bits(mask))
    pos = {v: i for i, v in enumerate(keep)}
    rows = [0] * len(keep)
    for v in keep:
        row = g.adj[v] & mask
        for u in _bits(row):
            rows[pos[v]] |= 1 << pos[u]
    return Graph(len(keep), rows)


def _iterable_to_mask(n: int, vertices: Iterable[int]) -> int:
    mask = 0
    for v in vertices:
        if not 0 <= v < n:
            raise GraphError(f"vertex {v} outside 0..{n - 1}")
        mask |= 1 << v
    return mask


def delete_vertex(g: Graph, v: int) -> Graph:
    """Return g minus vertex v, remaining vertices relabeled in order."""
    return induced(g, ((1 << g.n) - 1) ^ (1 << v))


def component_mask(adj, start: int, allowed: int) -> int:
    """Return the bit mask of the component of ``start`` within ``allowed``."""
    seen = 1 << start
    frontier = seen
    while frontier:
        grow = 0
        for v in _bits(frontier):
            grow |= adj[v]
        frontier = grow & allowed & ~seen
        seen |= frontier
    return seen


def is_connected(g: Graph) -> bool:
    """Return whether g is connected; the 0-vertex graph counts as not."""
    if g.n == 0:
        return False
    full = (1 << g.n) - 1
    return component_mask(g.adj, 0, full) == full


def bfs_distances(g: Graph, source: int) -> list[int]:
    """Return BFS distances from ``source``; unreachable vertices get -1."""
    dist = [-1] * g.n
    dist[source] = 0
    seen = 1 << source
    frontier = seen
    d = 0
    while frontier:
        grow = 0
        for v in _bits(frontier):
            grow |= g.adj[v]
        frontier = grow & ~seen
        seen |= frontier
        d += 1
        for v in _bits(frontier):
            dist[v] = d
    return dist

def distance_matrix(g: Graph) -> list[list[int]]:
    """Return all pairwise distances; raises on disconnected input."""
    if not is_connected(g):
        raise GraphError("distance matrix requires a connected graph")
    return [bfs_distances(g, s) for s in range(g.n)]


def diameter(g: Graph) -> int:
    """Return the largest pairwise distance; raises on disconnected input."""
    return max(max(row) for row in distance_matrix(g))


def bipartition_mask(g: Graph) -> int | None:
    """Return one side of a 2-coloring as a bit mask, or None if odd cycle.

    Works per component; for a connected graph the mask is the side holding
    vertex 0.
    """
    color = [-1] * g.n
    side = 0
    for s in range(g.n):
        if color[s] != -1:
            continue
        color[s] = 0
        side |= 1 << s
        frontier = [s]
        while frontier:
            nxt = []
            for v in frontier:
                for u in _bits(g.adj[v]):
                    if color[u] == -1:
                        color[u] = color[v] ^ 1
                        if color[u] == 0:
                            side |= 1 << u
                        nxt.append(u)
                    elif color[u] == color[v]:
                        return None
            frontier = nxt
    return side


def is_bipartite(g: Graph) -> bool:
    return bipartition_mask(g) is not None


# ---------------------------------------------------------------------------
# graph6 codec (short form, n <= 62)

def to_graph6(g: Graph) -> str:
    """Encode as a one-line graph6 record (short form, n <= 62)."""
    n = g.n
    if n > 62:
        raise Graph6Error(f"short-form graph6 handles n <= 62, got {n}")
    out = [n + 63]
    acc = 0
    nbits = 0
    for j in range(1, n):
        col = g.adj[j]
        for i in range(j):
            acc = acc << 1 | (col >> i & 1)
            nbits += 1
            if nbits == 6:
                out.append(acc + 63)
                acc = 0
                nbits = 0
    if nbits:
        out.append((acc << (6 - nbits)) + 63)
    return bytes(out).decode("ascii")


def from_graph6(line: str) -> Graph:
    """Decode a one-line graph6 record; errors name the bad byte offset."""
    if line.startswith(":"):
        raise Graph6Error("sparse6 records (leading ':') are not supported")
    if line.startswith("&"):
        raise Graph6Error("digraph6 records (leading '&') are not supported")
    if not line:
        raise Graph6Error("empty graph6 record")
    data = line.encode("ascii", errors="replace")
    for off, byte in enumerate(data):
        if not 63 <= byte <= 126:
            raise Graph6Error(f"byte {off} value {byte} outside graph6 range 63..126")
    n = data[0] - 63
    if n > 62:
        raise Graph6Error("byte 0: long-form vertex counts (n > 62) not supported")
    k = n * (n - 1) // 2
    want = 1 + (k + 5) // 6
    if len(data) != want:
        raise Graph6Error(
            f"byte {len(data)}: record for n={n} needs {want} bytes, got {len(data)}"
        )
    rows = [0] * n
    bit = 0
    for off in range(1, len(data)):
        chunk = data[off] - 63
        for shift in range(5, -1, -1):
            if bit >= k:
                if chunk >> shift & 1:
                    raise Graph6Error(f"byte {off}: nonzero padding bits")
                continue
            if chunk >> shift & 1:
                i, j = _PAIR_CACHE.setdefault(bit, _pair_for_bit(bit))
                rows[i] |= 1 << j
                rows[j] |= 1 << i
            bit += 1
    return Graph(n, rows)


def _pair_for_bit(bit: int) -> tuple[int, int]:
    # upper-triangle bits run (0,1), (0,2), (1,2), (0,3), ... column by column
    j = 1
    while bit >= j:
        bit -= j
        j += 1
    return bit, j


_PAIR_CACHE: dict[int, tuple[int, int]] = {}
