"""Exact connectivity invariants for small graphs.

Edge connectivity comes from unit-capacity augmenting-path flow, minimized
over all sinks from a fixed source.  Vertex connectivity uses the usual
vertex-split network over a dominating family of nonadjacent pairs.  Both
are cheap at the orders this package scans (n well under a hundred).
"""

from __future__ import annotations

from dataclasses import dataclass

from .graphs import Graph, GraphError, _bits, diameter as graph_diameter, is_connected, to_graph6


def _require_vertices(g: Graph):
    if g.n == 0:
        raise GraphError("invariants are undefined for the 0-vertex graph")


def min_degree(g: Graph) -> int:
    _require_vertices(g)
    return min(row.bit_count() for row in g.adj)


def max_degree(g: Graph) -> int:
    _require_vertices(g)
    return max(row.bit_count() for row in g.adj)


def _edge_flow_value(adj, n, s, t):
    """Unit-capacity max flow s->t on the bidirected edge network.

    Returns (value, fmask) where fmask[u] bit v says a unit flows u->v.
    Pushing against an opposite unit cancels it, so fmask rows stay disjoint
    and residual capacity u->v is positive exactly when fmask[u] bit v is 0.
    """
    fmask = [0] * n
    value = 0
    while True:
        parent = [-1] * n
        parent[s] = s
        seen = 1 << s
        queue = [s]
        while queue and parent[t] == -1:
            nxt = []
            for u in queue:
                grow = adj[u] & ~fmask[u] & ~seen
                seen |= grow
                for v in _bits(grow):
                    parent[v] = u
                    nxt.append(v)
            queue = nxt
        if parent[t] == -1:
            return value, fmask
        v = t
        while v != s:
            u = parent[v]
            if fmask[v] >> u & 1:
                fmask[v] &= ~(1 << u)
            else:
                fmask[u] |= 1 << v
            v = u
        value += 1


def edge_connectivity(g: Graph) -> int:
    """Return the minimum number of edges whose removal disconnects g."""
    if g.n < 2:
        raise GraphError("edge connectivity needs at least two vertices")
    if not is_connected(g):
        raise GraphError("edge connectivity is defined here for connected graphs")
    best = g.n * g.n
    for t in range(1, g.n):
        value, _ = _edge_flow_value(g.adj, g.n, 0, t)
        if value < best:
            best = value
            if best == 0:
                break
    return best


@dataclass(frozen=True)
class CutCertificate:
    """A minimum edge cut: the two sides, the cut edges, and the boundaries.

    Sides and boundaries are vertex bit masks; ``cut_edges`` holds (u, v)
    pairs with u on side1, sorted lexicographically.
    """

    side1: int
    side2: int
    cut_edges: tuple[tuple[int, int], ...]
    boundary1: int
    boundary2: int

    @property
    def value(self) -> int:
        return len(self.cut_edges)

    def side1_vertices(self) -> tuple[int, ...]:
        return tuple(_bits(self.side1))

    def side2_vertices(self) -> tuple[int, ...]:
        return tuple(_bits(self.side2))


def min_edge_cut(g: Graph) -> CutCertificate:
    """Return a deterministic minimum edge cut certificate.

    Ties break by the lexicographically least sink whose flow attains the
    minimum; side1 is then the residual-reachable side of the source.
    """
    if g.n < 2:
        raise GraphError("edge cuts need at least two vertices")
    if not is_connected(g):
        raise GraphError("edge cuts are defined here for connected graphs")
    best = None
    best_fmask = None
    for t in range(1, g.n):
        value, fmask = _edge_flow_value(g.adj, g.n, 0, t)
        if best is None or value < best:
            best = value
            best_fmask = fmask
    # residual reachability from the source fixes side1
    seen = 1
    frontier = 1
    while frontier:
        grow = 0
        for u in _bits(frontier):
            grow |= g.adj[u] & ~best_fmask[u]
        frontier = grow & ~seen
        seen |= frontier
    side1 = seen
    side2 = ((1 << g.n) - 1) ^ side1
    cut = []
    b1 = b2 = 0
    for u in _bits(side1):
        out = g.adj[u] & side2
        if out:
            b1 |= 1 << u
            for v in _bits(out):
                b2 |= 1 << v
                cut.append((u, v))
    cut.sort()
    cert = CutCertificate(side1, side2, tuple(cut), b1, b2)
    if cert.value != best:
        raise AssertionError("cut certificate does not match the flow value")
    return cert


def _split_flow_value(g: Graph, s: int, t: int) -> int:
    """Max number of internally disjoint s-t paths for nonadjacent s, t."""
    n2 = 2 * g.n
    arc = [0] * n2
    for v in range(g.n):
        arc[2 * v] = 1 << (2 * v + 1)
        for u in _bits(g.adj[v]):
            arc[2 * v + 1] |= 1 << (2 * u)
    src = 2 * s + 1
    dst = 2 * t
    fout = [0] * n2
    rev = [0] * n2
    value = 0
    while True:
        parent = [-1] * n2
        parent[src] = src
        seen = 1 << src
        queue = [src]
        while queue and parent[dst] == -1:
            nxt = []
            for a in queue:
                grow = ((arc[a] & ~fout[a]) | rev[a]) & ~seen
                seen |= grow
                for b in _bits(grow):
                    parent[b] = a
                    nxt.append(b)
            queue = nxt
        if parent[dst] == -1:
            return value
        b = dst
        while b != src:
            a = parent[b]
            if arc[a] >> b & 1 and not fout[a] >> b & 1:
                fout[a] |= 1 << b
                rev[b] |= 1 << a
            else:
                fout[b] &= ~(1 << a)
                rev[a] &= ~(1 << b)
            b = a
        value += 1


def vertex_connectivity(g: Graph) -> int:
    """Return vertex connectivity, with complete graphs mapped to n - 1."""
    _require_vertices(g)
    if not is_connected(g):
        raise GraphError("vertex connectivity is defined here for connected graphs")
    n = g.n
    full = (1 << n) - 1
    if all(g.adj[v] == full ^ (1 << v) for v in range(n)):
        return n - 1
    # a minimum cut either avoids v (separating v from a non-neighbor) or
    # contains v, in which case it separates two of v's neighbors; checking
    # one min-degree vertex this way covers every minimum cut
    v = min(range(n), key=lambda u: (g.adj[u].bit_count(), u))
    best = n - 1
    for u in _bits(full & ~g.adj[v] & ~(1 << v)):
        best = min(best, _split_flow_value(g, v, u))
    nbrs = list(_bits(g.adj[v]))
    for i, x in enumerate(nbrs):
        for y in nbrs[i + 1:]:
            if not g.has_edge(x, y):
                best = min(best, _split_flow_value(g, x, y))
    return best


def clique_number(g: Graph) -> int:
    """Return the largest clique order, by branch and bound.

    Vertices are pre-sorted by descending degree and candidate sets are
    bounded with a greedy coloring.
    """
    _require_vertices(g)
    n = g.n
    order = sorted(range(n), key=lambda v: (-g.adj[v].bit_count(), v))
    pos = [0] * n
    for i, v in enumerate(order):
        pos[v] = i
    adj = [0] * n
    for i, v in enumerate(order):
        row = 0
        for u in _bits(g.adj[v]):
            row |= 1 << pos[u]
        adj[i] = row
    best = 0

    def coloring_bound(cand: int) -> int:
        colors = 0
        m = cand
        while m:
            colors += 1
            avail = m
            while avail:
                b = avail & -avail
                v = b.bit_length() - 1
                m ^= b
                avail = (avail ^ b) & ~adj[v]
        return colors

    def expand(cand: int, size: int):
        nonlocal best
        if size + cand.bit_count() <= best:
            return
        if cand == 0:
            best = max(best, size)
            return
        if size + coloring_bound(cand) <= best:
            return
        while cand:
            if size + cand.bit_count() <= best:
                return
            b = cand & -cand
            v = b.bit_length() - 1
            cand ^= b
            expand(cand & adj[v], size + 1)

    expand((1 << n) - 1, 0)
    return best


def is_chordal(g: Graph) -> bool:
    """Return whether g has no induced cycle of length four or more.

    Maximum cardinality search followed by the perfect elimination check.
    """
    n = g.n
    if n == 0:
        return True
    weight = [0] * n
    numbered = 0
    order = []
    for _ in range(n):
        v = max(
            (u for u in range(n) if not numbered >> u & 1),
            key=lambda u: (weight[u], -u),
        )
        order.append(v)
        numbered |= 1 << v
        for u in _bits(g.adj[v] & ~numbered):
            weight[u] += 1
    pos = [0] * n
    for i, v in enumerate(order):
        pos[v] = i
    before = 0
    for v in order:
        earlier = g.adj[v] & before
        before |= 1 << v
        if earlier == 0:
            continue
        p = max(_bits(earlier), key=lambda u: pos[u])
        if (earlier ^ (1 << p)) & ~g.adj[p]:
            return False
    return True


@dataclass(frozen=True)
class InvariantReport:
    """The invariant bundle for one connected graph."""

    graph6: str
    n: int
    m: int
    delta: int
    kappa: int
    kappa_prime: int
    omega: int
    diameter: int

    def __post_init__(self):
        if not self.kappa <= self.kappa_prime <= self.delta:
            raise AssertionError(
                f"connectivity chain violated: {self.kappa} <= {self.kappa_prime}"
                f" <= {self.delta} fails for {self.graph6}"
            )
        if not 1 <= self.omega <= self.n:
            raise AssertionError(f"clique number out of range for {self.graph6}")
        if (self.omega >= 2) != (self.m >= 1):
            raise AssertionError(f"clique number inconsistent with edge count for {self.graph6}")

    def as_dict(self) -> dict:
        return {
            "graph6": self.graph6,
            "n": self.n,
            "m": self.m,
            "delta": self.delta,
            "kappa": self.kappa,
            "kappa_prime": self.kappa_prime,
            "omega": self.omega,
            "diameter": self.diameter,
        }

    FIELDS = ("graph6", "n", "m", "delta", "kappa", "kappa_prime", "omega", "diameter")


def compute_report(g: Graph) -> InvariantReport:
    """Compute every invariant for a connected graph on >= 2 vertices."""
    if g.n < 2:
        raise GraphError("invariant reports need at least two vertices")
    if not is_connected(g):
        raise GraphError("invariant reports are defined for connected graphs")
    return InvariantReport(
        graph6=to_graph6(g),
        n=g.n,
        m=g.m,
        delta=min_degree(g),
        kappa=vertex_connectivity(g),
        kappa_prime=edge_connectivity(g),
        omega=clique_number(g),
        diameter=graph_diameter(g),
    )


def cut_interior_property(g: Graph) -> bool:
    """Check that both sides of a minimum cut keep interior structure.

    Requires edge connectivity strictly below minimum degree.  True when
    each side of the recorded minimum cut has a vertex outside the cut
    boundary and every such interior vertex keeps an interior neighbor.
    """
    if g.n < 2 or not is_connected(g):
        raise GraphError("needs a connected graph on at least two vertices")
    if edge_connectivity(g) >= min_degree(g):
        raise GraphError("only meaningful when edge connectivity is below minimum degree")
    cert = min_edge_cut(g)
    for side, boundary in ((cert.side1, cert.boundary1), (cert.side2, cert.boundary2)):
        interior = side & ~boundary
        if interior == 0:
            return False
        for x in _bits(interior):
            if g.adj[x] & interior == 0:
                return False
    return True
