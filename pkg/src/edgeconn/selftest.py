"""Built-in cross-checks of the fast paths against the reference oracles.

Four case groups: cut invariants versus brute-force cuts on every connected
graph through order six, generator counts versus the permutation-orbit
count, uniqueness of the bowtie degree sequence, and the degree sequences
of the named constructors.  Each case reports an id, a verdict, and a short
detail line, so failures name what broke.
"""

from __future__ import annotations

from .atlas import (
    bowtie,
    bridged_triangles,
    complete_bipartite,
    complete_graph,
    cycle_graph,
    path_graph,
    spider,
    star,
    triangle_with_tail,
)
from .enumeration import connected_level
from .invariants import edge_connectivity, vertex_connectivity
from .iso import canonical_form
from .graphs import to_graph6
from .oracles import (
    connected_class_count_oracle,
    degree_sequence_census,
    edge_cut_oracle,
    vertex_cut_oracle,
)

_EXPECTED_COUNTS = {1: 1, 2: 1, 3: 2, 4: 6, 5: 21, 6: 112}

_NAMED_DEGREES = (
    ("P5", path_graph(5), (2, 2, 2, 1, 1)),
    ("C5", cycle_graph(5), (2, 2, 2, 2, 2)),
    ("K5", complete_graph(5), (4, 4, 4, 4, 4)),
    ("K2_3", complete_bipartite(2, 3), (3, 3, 2, 2, 2)),
    ("K1_4", star(4), (4, 1, 1, 1, 1)),
    ("Z1", triangle_with_tail(1), (3, 2, 2, 1)),
    ("Z2", triangle_with_tail(2), (3, 2, 2, 2, 1)),
    ("T1_1_2", spider(1, 1, 2), (3, 2, 1, 1, 1)),
    ("T1_1_3", spider(1, 1, 3), (3, 2, 2, 1, 1, 1)),
    ("H0", bowtie(), (4, 2, 2, 2, 2)),
    ("H1", bridged_triangles(), (3, 3, 2, 2, 2, 2)),
)


def run_selftest() -> list[tuple[str, bool, str]]:
    """Run every embedded check; returns (case id, passed, detail) rows."""
    cases = []

    total = 0
    bad = None
    for n in range(2, 7):
        for g in connected_level(n):
            total += 1
            if edge_connectivity(g) != edge_cut_oracle(g):
                bad = f"edge cut mismatch on {to_graph6(g)}"
                break
            if vertex_connectivity(g) != vertex_cut_oracle(g):
                bad = f"vertex cut mismatch on {to_graph6(g)}"
                break
        if bad:
            break
    cases.append(("invariants:cut-oracles", bad is None, bad or f"{total} graphs agree"))

    bad = None
    for n, want in _EXPECTED_COUNTS.items():
        got = len(connected_level(n))
        oracle = connected_class_count_oracle(n)
        if got != want or oracle != want:
            bad = f"n={n}: generator {got}, orbit oracle {oracle}, expected {want}"
            break
    cases.append(
        ("enumerator:counts", bad is None, bad or "orders 1..6 match the orbit oracle")
    )

    census = degree_sequence_census(5, (4, 2, 2, 2, 2))
    forms = {canonical_form(g) for g in census}
    ok = forms == {canonical_form(bowtie())} and len(census) == 15
    detail = f"{len(census)} labelings, {len(forms)} class(es)"
    cases.append(("atlas:bowtie-degree-sequence-unique", ok, detail))

    bad = None
    for name, g, want in _NAMED_DEGREES:
        if g.degree_sequence() != want:
            bad = f"{name}: got {g.degree_sequence()}, expected {want}"
            break
    cases.append(
        ("atlas:named-degree-sequences", bad is None, bad or f"{len(_NAMED_DEGREES)} graphs match")
    )
    return cases
