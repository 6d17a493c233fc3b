"""Equality-claim verification runs over exhaustive graph scans.

A claim here is "every connected pattern-free graph satisfies one of three
invariant equalities": edge connectivity = minimum degree, vertex = edge
connectivity, or vertex connectivity = minimum degree.  The scanner walks
all connected graphs up to a cutoff order, keeps the pattern-free ones, and
records each equality violation as a graph6 counterexample.  The module
also mines witnesses for pattern sets outside the characterized lists and
intersects two characterized lists into the candidates for the combined
equality.
"""

from __future__ import annotations

import time
from dataclasses import dataclass
from itertools import combinations, permutations, product

from .atlas import known_witness, parse_pattern_set, parse_pattern_token, recognize_pattern
from .enumeration import ensure_level
from .graphs import GraphError, from_graph6, is_connected, to_graph6
from .invariants import edge_connectivity, min_degree, vertex_connectivity
from .iso import (
    Pattern,
    PatternSet,
    canonical_form,
    contains_induced,
    is_free,
    maximal_common_induced_subgraphs,
    pattern_equivalent,
    pattern_preceq,
    pattern_set,
    pattern_strictly_preceq,
)

# target name -> (left field, right field, left invariant, right invariant)
TARGETS = {
    "kappa_prime_delta": ("kappa_prime", "delta", edge_connectivity, min_degree),
    "kappa_kappa_prime": ("kappa", "kappa_prime", vertex_connectivity, edge_connectivity),
    "kappa_delta": ("kappa", "delta", vertex_connectivity, min_degree),
}

# per target: the characterized single pattern, then the characterized pairs
CHARACTERIZED_SINGLE = {
    "kappa_prime_delta": "P4",
    "kappa_kappa_prime": "P3",
    "kappa_delta": "P3",
}
CHARACTERIZED_PAIRS = {
    "kappa_prime_delta": ("H1,P5", "Z2,P6", "Z2,T1_1_3"),
    "kappa_kappa_prime": ("Z1,P5", "Z1,K1_4", "Z1,T1_1_2", "P4,H0", "K1_3,H0"),
    "kappa_delta": ("H0,P4", "Z1,P5", "Z1,T1_1_2"),
}


def _check_target(target: str):
    if target not in TARGETS:
        raise ValueError(f"unknown target {target!r}; expected one of {sorted(TARGETS)}")


def characterized_sets(target: str) -> list[PatternSet]:
    """The characterized pattern sets for a target: the singleton, then pairs."""
    _check_target(target)
    out = [pattern_set(parse_pattern_token(CHARACTERIZED_SINGLE[target]))]
    out += [parse_pattern_set(text) for text in CHARACTERIZED_PAIRS[target]]
    return out


@dataclass(frozen=True)
class VerdictRecord:
    """Outcome of one bounded exhaustive scan."""

    claim_id: str
    n_max: int
    graphs_scanned: int
    elapsed_ms: float
    counterexamples: tuple[str, ...]

    @property
    def held(self) -> bool:
        return not self.counterexamples

    def as_dict(self) -> dict:
        return {
            "claim_id": self.claim_id,
            "n_max": self.n_max,
            "graphs_scanned": self.graphs_scanned,
            "elapsed_ms": self.elapsed_ms,
            "counterexamples": list(self.counterexamples),
        }


def _scan(patterns: PatternSet, target: str, n_max: int, workers: int) -> VerdictRecord:
    _check_target(target)
    if not 2 <= n_max <= 10:
        raise GraphError(f"scans support 2 <= n_max <= 10, got {n_max}")
    _, _, left, right = TARGETS[target]
    t0 = time.perf_counter()
    scanned = 0
    bad: list[str] = []
    for n in range(2, n_max + 1):
        for g in ensure_level(n, workers=workers):
            if not is_free(g, patterns):
                continue
            scanned += 1
            if left(g) != right(g):
                bad.append(to_graph6(g))
    elapsed_ms = round((time.perf_counter() - t0) * 1000.0, 3)
    claim_id = f"{target}:{patterns.label}"
    return VerdictRecord(claim_id, n_max, scanned, elapsed_ms, tuple(bad))


def verify_single(s: Pattern, n_max: int, target: str = "kappa_prime_delta",
                  workers: int = 1) -> VerdictRecord:
    """Scan all connected s-free graphs up to n_max against the target equality."""
    return _scan(PatternSet((s,)), target, n_max, workers)


def verify_pair(pair: PatternSet, n_max: int, target: str = "kappa_prime_delta",
                workers: int = 1) -> VerdictRecord:
    """Scan all connected pair-free graphs up to n_max against the target equality."""
    if len(pair.patterns) != 2:
        raise ValueError(f"expected a two-pattern set, got {pair.label}")
    return _scan(pair, target, n_max, workers)


def verify_pattern_set(patterns: PatternSet, n_max: int, target: str = "kappa_prime_delta",
                       workers: int = 1) -> VerdictRecord:
    """Scan against the target equality for a pattern set of any size."""
    return _scan(patterns, target, n_max, workers)


@dataclass(frozen=True)
class WitnessRecord:
    """A pattern-free graph whose edge connectivity sits below minimum degree.

    Revalidated on construction: the witness must be connected, free of the
    pair, and show the recorded strict gap.
    """

    pair: PatternSet
    witness: str
    kappa_prime: int
    delta: int
    origin: str

    def __post_init__(self):
        if self.origin not in ("family", "enumerated"):
            raise ValueError(f"unknown witness origin {self.origin!r}")
        g = from_graph6(self.witness)
        if not is_connected(g):
            raise ValueError(f"witness {self.witness} is not connected")
        if not is_free(g, self.pair):
            raise ValueError(f"witness {self.witness} is not {self.pair.label}-free")
        kp, dd = edge_connectivity(g), min_degree(g)
        if (kp, dd) != (self.kappa_prime, self.delta) or kp >= dd:
            raise ValueError(
                f"witness {self.witness} does not show the recorded gap"
                f" {self.kappa_prime} < {self.delta}"
            )

    def as_dict(self) -> dict:
        return {
            "pair": self.pair.label,
            "witness": self.witness,
            "kappa_prime": self.kappa_prime,
            "delta": self.delta,
            "origin": self.origin,
        }


def mine_witness(pair: PatternSet, n_max: int, workers: int = 1) -> WitnessRecord | None:
    """Find a connected pair-free graph with edge connectivity below delta.

    The curated family table is consulted first; otherwise the enumeration
    is scanned in its deterministic order.  Returns None when no witness of
    order <= n_max exists.
    """
    if not 2 <= n_max <= 10:
        raise GraphError(f"witness mining supports 2 <= n_max <= 10, got {n_max}")
    member = known_witness(pair)
    if member is not None and member.graph.n <= n_max:
        g = member.graph
        return WitnessRecord(pair, to_graph6(g), edge_connectivity(g), min_degree(g), "family")
    for n in range(2, n_max + 1):
        for g in ensure_level(n, workers=workers):
            if not is_free(g, pair):
                continue
            kp = edge_connectivity(g)
            dd = min_degree(g)
            if kp < dd:
                return WitnessRecord(pair, to_graph6(g), kp, dd, "enumerated")
    return None


def maximality_sweep(base, extensions, n_max: int,
                     workers: int = 1) -> list[tuple[PatternSet, WitnessRecord | None]]:
    """Mine witnesses showing each extension falls outside the characterization.

    ``base`` is the characterized pattern set, or a list of them.  Every
    extension must sit strictly above some base set and at-or-below none,
    otherwise the sweep refuses to run.  A missing witness is reported as
    None for review rather than raised.
    """
    bases = [base] if isinstance(base, PatternSet) else list(base)
    if not bases:
        raise ValueError("need at least one characterized set")
    for ext in extensions:
        if not any(pattern_strictly_preceq(c, ext) for c in bases):
            raise ValueError(
                f"extension {ext.label} does not strictly extend any characterized set"
            )
        for c in bases:
            if pattern_preceq(ext, c):
                raise ValueError(
                    f"extension {ext.label} is at or below characterized set {c.label}"
                )
    return [(ext, mine_witness(ext, n_max, workers=workers)) for ext in extensions]


# ---------------------------------------------------------------------------
# characterization intersection

def _lifts(small, big) -> list[tuple[Pattern, ...]]:
    """Pad the smaller member tuple with patterns borrowed from the bigger."""
    need = len(big) - len(small)
    if need == 0:
        return [tuple(small)]
    small_forms = {canonical_form(p.graph) for p in small}
    out = []
    for extra in combinations(big, need):
        if any(canonical_form(p.graph) in small_forms for p in extra):
            continue
        out.append(tuple(small) + tuple(extra))
    return out


def _reduce_members(graphs) -> PatternSet:
    """Collapse a drawn member tuple: dedupe isomorphs, drop implied members.

    A member that has another member as induced subgraph is implied (the
    smaller forbiddance already rules it out) and is removed.
    """
    by_form = {}
    for g in graphs:
        by_form.setdefault(canonical_form(g), g)
    items = sorted(by_form.items(), key=lambda kv: (kv[1].n, kv[1].m, kv[0]))
    keep = []
    for form, g in items:
        implied = any(
            contains_induced(g, other) for f2, other in items if f2 != form
        )
        if not implied:
            keep.append(g)
    return pattern_set(*((g, recognize_pattern(g)) for g in keep))


def _rep_key(ps: PatternSet):
    shape = tuple(sorted((p.graph.n, p.graph.m) for p in ps.patterns))
    return (len(ps.patterns), shape, ps.label)


def intersect_characterizations(a, b, max_order: int) -> list[PatternSet]:
    """Combine two characterized lists into sets for the joint equality.

    For every cross pairing, members are matched slot to slot (padding a
    smaller set with patterns of the other, so singleton entries combine
    with pairs) and each slot contributes its maximal common induced
    subgraphs.  The drawn sets are reduced, deduplicated, stripped of
    strictly dominated entries, and collapsed up to mutual ordering
    equivalence.
    """
    if not 1 <= max_order <= 7:
        raise ValueError(f"max_order must be within 1..7, got {max_order}")
    a_list = [a] if isinstance(a, PatternSet) else list(a)
    b_list = [b] if isinstance(b, PatternSet) else list(b)
    if not a_list or not b_list:
        raise ValueError("both characterization lists must be nonempty")
    mcis_cache: dict[frozenset, list] = {}

    def slot_options(x: Pattern, y: Pattern):
        key = frozenset((canonical_form(x.graph), canonical_form(y.graph)))
        if key not in mcis_cache:
            mcis_cache[key] = maximal_common_induced_subgraphs(x.graph, y.graph, max_order)
        return mcis_cache[key]

    results: dict[frozenset, PatternSet] = {}
    for ha in a_list:
        for hb in b_list:
            if len(ha.patterns) <= len(hb.patterns):
                lifted_list = _lifts(ha.patterns, hb.patterns)
                rights = hb.patterns
            else:
                lifted_list = _lifts(hb.patterns, ha.patterns)
                rights = ha.patterns
            if not lifted_list:
                raise ValueError(
                    f"cannot reconcile cardinalities of {ha.label} and {hb.label}"
                )
            size = len(rights)
            for lifted in lifted_list:
                for sigma in permutations(range(size)):
                    options = [slot_options(lifted[i], rights[sigma[i]]) for i in range(size)]
                    for choice in product(*options):
                        ps = _reduce_members(choice)
                        results.setdefault(ps.form_key(), ps)
    formed = list(results.values())
    kept = [
        h for h in formed
        if not any(pattern_strictly_preceq(h, other) for other in formed)
    ]
    groups: list[list[PatternSet]] = []
    for h in sorted(kept, key=_rep_key):
        for grp in groups:
            if pattern_equivalent(h, grp[0]):
                grp.append(h)
                break
        else:
            groups.append([h])
    reps = [min(grp, key=_rep_key) for grp in groups]
    reps.sort(key=_rep_key)
    return reps
