"""Exact maximum matching in general graphs (blossom contraction).

The classic augmenting-path algorithm with base tracking: grow an alternating
BFS forest from each exposed vertex, contract odd cycles when an edge joins
two even-depth vertices, and flip matches along the found path.  Quadratic
per augmentation, which is plenty at this package's scale.
"""

from __future__ import annotations

from .graphs import Graph, _bits


def maximum_matching(g: Graph) -> list[int]:
    """Return match[v] = partner of v, or -1 when v is unmatched."""
    n = g.n
    adj = [list(_bits(row)) for row in g.adj]
    match = [-1] * n
    p = [-1] * n
    base = list(range(n))

    def lca(a: int, b: int) -> int:
        on_path = [False] * n
        while True:
            a = base[a]
            on_path[a] = True
            if match[a] == -1:
                break
            a = p[match[a]]
        while True:
            b = base[b]
            if on_path[b]:
                return b
            b = p[match[b]]

    def find_path(root: int) -> int:
        used = [False] * n
        for v in range(n):
            p[v] = -1
            base[v] = v
        used[root] = True
        queue = [root]
        head = 0

        def mark_path(v: int, stop: int, child: int, blossom):
            while base[v] != stop:
                blossom[base[v]] = True
                blossom[base[match[v]]] = True
                p[v] = child
                child = match[v]
                v = p[match[v]]

        while head < len(queue):
            v = queue[head]
            head += 1
            for to in adj[v]:
                if base[v] == base[to] or match[v] == to:
                    continue
                if to == root or (match[to] != -1 and p[match[to]] != -1):
                    # edge joins two even vertices: contract the blossom
                    curbase = lca(v, to)
                    blossom = [False] * n
                    mark_path(v, curbase, to, blossom)
                    mark_path(to, curbase, v, blossom)
                    for i in range(n):
                        if blossom[base[i]]:
                            base[i] = curbase
                            if not used[i]:
                                used[i] = True
                                queue.append(i)
                elif p[to] == -1:
                    p[to] = v
                    if match[to] == -1:
                        return to
                    used[match[to]] = True
                    queue.append(match[to])
        return -1

    for root in range(n):
        if match[root] != -1:
            continue
        end = find_path(root)
        v = end
        while v != -1:
            pv = p[v]
            next_v = match[pv]
            match[v] = pv
            match[pv] = v
            v = next_v
    return match


def matching_number(g: Graph) -> int:
    """Return the number of edges in a maximum matching."""
    match = maximum_matching(g)
    return sum(1 for v, u in enumerate(match) if u != -1) // 2
