"""Exhaustive connected-graph generation and graph6 streams.

One representative per isomorphism class, produced by vertex augmentation:
every connected n-vertex graph arises from a connected (n-1)-vertex parent
by attaching a new vertex, and a child is kept only when deleting its
canonically chosen removable vertex recovers this very parent.  Each class
then survives exactly one parent, and a per-parent form set removes the
remaining sibling duplicates, so no global seen-set is needed.
"""

from __future__ import annotations

import os
from collections.abc import Iterable, Iterator
from multiprocessing import get_context

from .graphs import Graph, GraphError, Graph6Error, _bits, from_graph6, to_graph6
from .iso import _canonical_rows, is_free

MAX_ENUM_ORDER = 10

_levels: dict[int, tuple[Graph, ...]] = {1: (Graph(1, (0,)),)}


def _non_cut_vertices(n: int, adj) -> list[int]:
    """Vertices whose deletion keeps the (connected) graph connected."""
    out = []
    full = (1 << n) - 1
    for v in range(n):
        allowed = full ^ (1 << v)
        start = (allowed & -allowed).bit_length() - 1
        seen = 1 << start
        frontier = seen
        while frontier:
            grow = 0
            for u in _bits(frontier):
                grow |= adj[u]
            frontier = grow & allowed & ~seen
            seen |= frontier
        if seen == allowed:
            out.append(v)
    return out


def _delete_rows(n: int, adj, v: int):
    """Adjacency rows of the graph minus vertex v, labels compacted."""
    low = (1 << v) - 1
    rows = []
    for u in range(n):
        if u == v:
            continue
        r = adj[u]
        rows.append((r & low) | ((r >> (v + 1)) << v))
    return rows


def expand_children(parent: Graph) -> list[Graph]:
    """Return the accepted one-vertex extensions of one parent, in order.

    Children of distinct parents never collide, so concatenating these lists
    over a whole level enumerates the next level exactly once.
    """
    pn = parent.n
    n = pn + 1
    padj = parent.adj
    _, parent_enc, parent_autos = _canonical_rows(pn, padj)
    parent_degs = sorted(r.bit_count() for r in padj)
    out = []
    seen_encs = set()
    handled_masks = set()
    for mask in range(1, 1 << pn):
        if parent_autos:
            if mask in handled_masks:
                continue
            for a in parent_autos:
                img = 0
                for v in _bits(mask):
                    img |= 1 << a[v]
                if img != mask:
                    handled_masks.add(img)
        rows = [padj[v] | (1 << pn) if mask >> v & 1 else padj[v] for v in range(pn)]
        rows.append(mask)
        perm, enc, _ = _canonical_rows(n, rows)
        pos = [0] * n
        for i, v in enumerate(perm):
            pos[v] = i
        removable = _non_cut_vertices(n, rows)
        vstar = max(removable, key=lambda v: pos[v])
        if vstar != pn:
            reduced = _delete_rows(n, rows, vstar)
            if sorted(r.bit_count() for r in reduced) != parent_degs:
                continue
            if _canonical_rows(pn, reduced)[1] != parent_enc:
                continue
        if enc not in seen_encs:
            seen_encs.add(enc)
            out.append(Graph(n, rows))
    return out


def connected_level(n: int) -> tuple[Graph, ...]:
    """Return (and cache) all connected graphs on n vertices, one per class."""
    if not 1 <= n <= MAX_ENUM_ORDER:
        raise GraphError(f"enumeration supports 1 <= n <= {MAX_ENUM_ORDER}, got {n}")
    if n not in _levels:
        parents = connected_level(n - 1)
        level: list[Graph] = []
        for parent in parents:
            level.extend(expand_children(parent))
        _levels[n] = tuple(level)
    return _levels[n]


def _expand_parent_chunk(chunk) -> list[str]:
    out = []
    for line in chunk:
        for child in expand_children(from_graph6(line)):
            out.append(to_graph6(child))
    return out


def ensure_level(n: int, workers: int = 1) -> tuple[Graph, ...]:
    """connected_level, with optional process-parallel expansion when uncached.

    Workers split the parent list into ordered chunks, so the merged result
    is byte-identical to the sequential one; worker count only changes wall
    time.
    """
    if not 1 <= n <= MAX_ENUM_ORDER:
        raise GraphError(f"enumeration supports 1 <= n <= {MAX_ENUM_ORDER}, got {n}")
    if n in _levels:
        return _levels[n]
    parents = ensure_level(n - 1, workers)
    if workers <= 1 or len(parents) < 64:
        return connected_level(n)
    lines = [to_graph6(p) for p in parents]
    step = max(1, len(lines) // (workers * 8))
    chunks = [lines[i:i + step] for i in range(0, len(lines), step)]
    with get_context("fork").Pool(workers) as pool:
        parts = pool.map(_expand_parent_chunk, chunks)
    _levels[n] = tuple(from_graph6(s) for part in parts for s in part)
    return _levels[n]


def enumerate_connected(n: int) -> Iterator[Graph]:
    """Yield every connected graph on n vertices exactly once, in a fixed order."""
    yield from connected_level(n)


def filter_free(graphs: Iterable[Graph], patterns) -> Iterator[Graph]:
    """Yield only the graphs with no induced copy of any pattern."""
    for g in graphs:
        if is_free(g, patterns):
            yield g


def read_graph6_stream(path) -> Iterator[Graph]:
    """Yield graphs from a graph6 file; parse errors carry the line number.

    A leading '>>graph6<<' marker is tolerated; blank lines are skipped.
    """
    with open(path, "r", encoding="ascii") as fh:
        for lineno, raw in enumerate(fh, start=1):
            line = raw.strip()
            if lineno == 1 and line.startswith(">>graph6<<"):
                line = line[len(">>graph6<<"):]
            if not line:
                continue
            try:
                yield from_graph6(line)
            except Graph6Error as exc:
                raise Graph6Error(f"{os.fspath(path)}:{lineno}: {exc}") from None


def write_graph6_stream(path, graphs: Iterable[Graph]) -> int:
    """Write one graph6 record per line; returns the record count."""
    count = 0
    with open(path, "w", encoding="ascii") as fh:
        for g in graphs:
            fh.write(to_graph6(g) + "\n")
            count += 1
    return count
