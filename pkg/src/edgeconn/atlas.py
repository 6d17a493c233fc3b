"""Named small graphs, witness families, and the pattern vocabulary.

Constructors fix one documented vertex numbering each, so tests and stream
tools see stable graph6 strings.  The parameterized families generalize the
bridged two-block shapes that keep edge connectivity 1 while minimum degree
stays higher; each member carries a certificate of the structural facts the
sweeps rely on, and construction aborts if any certified fact fails.
"""

from __future__ import annotations

from dataclasses import dataclass

from .graphs import Graph, from_edges, from_graph6
from .invariants import (
    clique_number,
    edge_connectivity,
    is_chordal,
    min_degree,
)
from .iso import (
    Pattern,
    PatternSet,
    canonical_form,
    contains_induced,
    is_free,
    longest_induced_path_order,
    pattern_set,
)


# ---------------------------------------------------------------------------
# named graphs

def path_graph(i: int) -> Graph:
    """P_i on vertices 0..i-1 in order."""
    if i < 1:
        raise ValueError("paths need at least one vertex")
    return from_edges(i, [(v, v + 1) for v in range(i - 1)])


def cycle_graph(n: int) -> Graph:
    """C_n on vertices 0..n-1 in cyclic order."""
    if n < 3:
        raise ValueError("cycles need at least three vertices")
    return from_edges(n, [(v, (v + 1) % n) for v in range(n)])


def complete_graph(n: int) -> Graph:
    if n < 1:
        raise ValueError("complete graphs need at least one vertex")
    full = (1 << n) - 1
    return Graph(n, tuple(full ^ (1 << v) for v in range(n)))


def complete_bipartite(m: int, n: int) -> Graph:
    """K_{m,n} with one side 0..m-1 and the other m..m+n-1."""
    if m < 1 or n < 1:
        raise ValueError("both sides need at least one vertex")
    left = (1 << m) - 1
    right = ((1 << (m + n)) - 1) ^ left
    rows = [right] * m + [left] * n
    return Graph(m + n, tuple(rows))


def star(r: int) -> Graph:
    """K_{1,r}: center 0 with leaves 1..r."""
    return complete_bipartite(1, r)


def triangle_with_tail(i: int) -> Graph:
    """Triangle {0,1,2} plus an induced path of i extra vertices off vertex 2."""
    if i < 1:
        raise ValueError("the tail needs at least one vertex")
    edges = [(0, 1), (0, 2), (1, 2)]
    edges += [(v, v + 1) for v in range(2, i + 2)]
    return from_edges(i + 3, edges)


def spider(i: int, j: int, k: int) -> Graph:
    """Three induced paths of i, j, k extra vertices sharing center 0."""
    if min(i, j, k) < 1:
        raise ValueError("all three legs need at least one vertex")
    edges = []
    start = 1
    for leg in (i, j, k):
        edges.append((0, start))
        edges += [(v, v + 1) for v in range(start, start + leg - 1)]
        start += leg
    return from_edges(i + j + k + 1, edges)


def bridged_triangles() -> Graph:
    """Two triangles {0,1,2} and {3,4,5} joined by the edge 2-3."""
    return from_edges(
        6, [(0, 1), (0, 2), (1, 2), (2, 3), (3, 4), (3, 5), (4, 5)]
    )


def bowtie() -> Graph:
    """Two triangles {0,1,2} and {0,3,4} sharing vertex 0."""
    return from_edges(5, [(0, 1), (0, 2), (1, 2), (0, 3), (0, 4), (3, 4)])


@dataclass(frozen=True)
class NamedGraphSpec:
    """A named-graph request: a kind token plus integer parameters."""

    kind: str
    params: tuple[int, ...] = ()


_KINDS = {
    "path": (1, lambda p: path_graph(*p)),
    "cycle": (1, lambda p: cycle_graph(*p)),
    "complete": (1, lambda p: complete_graph(*p)),
    "complete_bipartite": (2, lambda p: complete_bipartite(*p)),
    "star": (1, lambda p: star(*p)),
    "Z": (1, lambda p: triangle_with_tail(*p)),
    "T": (3, lambda p: spider(*p)),
    "H0": (0, lambda p: bowtie()),
    "H1": (0, lambda p: bridged_triangles()),
}


def make_named(spec: NamedGraphSpec) -> Graph:
    """Build the graph a NamedGraphSpec describes; unknown kinds raise."""
    if spec.kind not in _KINDS:
        raise ValueError(f"unknown graph kind {spec.kind!r}")
    arity, build = _KINDS[spec.kind]
    if len(spec.params) != arity:
        raise ValueError(f"kind {spec.kind!r} takes {arity} parameters, got {len(spec.params)}")
    return build(spec.params)


# ---------------------------------------------------------------------------
# pattern vocabulary

def parse_pattern_token(token: str) -> Pattern:
    """Turn one vocabulary token into a labeled pattern.

    Tokens: P<i>, C<n>, K<n>, K<m>_<n>, Z<i>, T<i>_<j>_<k>, H0, H1, or an
    inline record with the g6: prefix.  Parameterized names use underscores
    so commas stay free to separate set members.
    """
    tok = token.strip()
    if not tok:
        raise ValueError("empty pattern token")
    if tok.startswith("g6:"):
        return Pattern(from_graph6(tok[3:]), tok)
    if tok in ("H0", "H1"):
        return Pattern(make_named(NamedGraphSpec(tok)), tok)
    head, rest = tok[0], tok[1:]
    try:
        if head == "P":
            return Pattern(path_graph(int(rest)), tok)
        if head == "C":
            return Pattern(cycle_graph(int(rest)), tok)
        if head == "K":
            if "_" in rest:
                m, n = rest.split("_")
                return Pattern(complete_bipartite(int(m), int(n)), tok)
            return Pattern(complete_graph(int(rest)), tok)
        if head == "Z":
            return Pattern(triangle_with_tail(int(rest)), tok)
        if head == "T":
            i, j, k = rest.split("_")
            return Pattern(spider(int(i), int(j), int(k)), tok)
    except ValueError as exc:
        raise ValueError(f"cannot parse pattern token {token!r}: {exc}") from None
    raise ValueError(f"cannot parse pattern token {token!r}")


def parse_pattern_set(text: str) -> PatternSet:
    """Parse a comma-separated token list into a PatternSet."""
    tokens = [t for t in text.split(",") if t.strip()]
    if not tokens:
        raise ValueError("no pattern tokens given")
    return pattern_set(*(parse_pattern_token(t) for t in tokens))


_RECOGNIZE: dict[str, str] = {}


def recognize_pattern(g: Graph) -> str:
    """Return a vocabulary name for g when one exists, else a g6: token."""
    if not _RECOGNIZE:
        entries: list[tuple[str, Graph]] = []
        entries += [(f"P{i}", path_graph(i)) for i in range(1, 11)]
        entries += [(f"K{n}", complete_graph(n)) for n in range(2, 9)]
        entries += [(f"C{n}", cycle_graph(n)) for n in range(4, 11)]
        entries += [
            (f"K{m}_{n}", complete_bipartite(m, n))
            for m in range(1, 5)
            for n in range(m, 9)
            if (m, n) != (1, 1) and m + n <= 10
        ]
        entries += [(f"Z{i}", triangle_with_tail(i)) for i in range(1, 7)]
        entries += [
            (f"T{i}_{j}_{k}", spider(i, j, k))
            for i in range(1, 8)
            for j in range(i, 8)
            for k in range(j, 8)
            if i + j + k + 1 <= 10
        ]
        entries += [("H0", bowtie()), ("H1", bridged_triangles())]
        for name, graph in entries:
            _RECOGNIZE.setdefault(canonical_form(graph), name)
    return _RECOGNIZE.get(canonical_form(g), "g6:" + canonical_form(g))


# ---------------------------------------------------------------------------
# witness families

class CertificateError(RuntimeError):
    """A family member failed one of its own structural guarantees."""


@dataclass(frozen=True)
class FamilyMember:
    """One generated member of a witness family, with its checked facts."""

    family_id: int
    params: tuple[int, ...]
    graph: Graph
    certificate: tuple[tuple[str, bool], ...]


_FAMILY_RANGES = {
    1: "t with 3 <= t <= 16 (two complete blocks joined by a bridge)",
    2: "k, l with 4 <= k <= 30 and 1 <= l <= 30 (two k-cycles joined by an l-edge path)",
    3: "l with 3 <= l <= 30 (two triangles joined by an l-edge path)",
    4: "no parameters (two triangles joined by a bridge)",
    5: "l = 2 (two triangles joined by a 2-edge path)",
    6: "r, s with 2 <= r, s <= 16 (two K_{2,*} blocks joined by a bridge)",
    7: "r, s with 2 <= r, s <= 16 (two K_{2,*} blocks joined by a 2-edge path)",
}


def _family_graph(family_id: int, params: tuple[int, ...]) -> Graph:
    if family_id == 1:
        (t,) = params
        if not 3 <= t <= 16:
            raise ValueError(f"family 1 expects {_FAMILY_RANGES[1]}")
        edges = [(u, v) for u in range(t) for v in range(u + 1, t)]
        edges += [(t + u, t + v) for u in range(t) for v in range(u + 1, t)]
        edges.append((t - 1, t))
        return from_edges(2 * t, edges)
    if family_id == 2:
        k, l = params
        if not (4 <= k <= 30 and 1 <= l <= 30):
            raise ValueError(f"family 2 expects {_FAMILY_RANGES[2]}")
        edges = [(v, (v + 1) % k) for v in range(k)]
        edges += [(v, v + 1) for v in range(k - 1, k - 1 + l)]
        b = k + l - 1
        edges += [(b + v, b + ((v + 1) % k)) for v in range(k)]
        return from_edges(k + l - 1 + k, edges)
    if family_id == 3:
        (l,) = params
        if not 3 <= l <= 30:
            raise ValueError(f"family 3 expects {_FAMILY_RANGES[3]}")
        edges = [(0, 1), (0, 2), (1, 2)]
        edges += [(v, v + 1) for v in range(2, 2 + l)]
        a = 2 + l
        edges += [(a, a + 1), (a, a + 2), (a + 1, a + 2)]
        return from_edges(l + 5, edges)
    if family_id == 4:
        if params:
            raise ValueError(f"family 4 expects {_FAMILY_RANGES[4]}")
        return bridged_triangles()
    if family_id == 5:
        (l,) = params
        if l != 2:
            raise ValueError(f"family 5 expects {_FAMILY_RANGES[5]}")
        return from_edges(
            7, [(0, 1), (0, 2), (1, 2), (2, 3), (3, 4), (4, 5), (4, 6), (5, 6)]
        )
    if family_id in (6, 7):
        r, s = params
        if not (2 <= r <= 16 and 2 <= s <= 16):
            raise ValueError(f"family {family_id} expects {_FAMILY_RANGES[family_id]}")
        gap = 0 if family_id == 6 else 1
        edges = [(x, v) for x in (0, 1) for v in range(2, r + 2)]
        b = r + 2 + gap
        edges += [(x, v) for x in (b, b + 1) for v in range(b + 2, b + 2 + s)]
        if family_id == 6:
            edges.append((r + 1, b + 1 + s))
        else:
            edges += [(r + 1, r + 2), (r + 2, b + 1 + s)]
        return from_edges(b + 2 + s, edges)
    raise ValueError(f"unknown family {family_id}; valid ids are 1..7")


def _family_certificate(family_id: int, params, g: Graph) -> list[tuple[str, bool]]:
    claw = star(3)
    k3 = complete_graph(3)
    cert = [("kappa_prime=1", edge_connectivity(g) == 1)]
    if family_id == 1:
        (t,) = params
        cert += [
            ("kappa_prime<delta", 1 < min_degree(g)),
            ("claw_free", is_free(g, [claw])),
            ("chordal", is_chordal(g)),
            ("longest_induced_path=P4", longest_induced_path_order(g) == 4),
            (f"clique_number={t}", clique_number(g) == t),
            ("contains_H1", contains_induced(g, bridged_triangles())),
            ("contains_Z2", contains_induced(g, triangle_with_tail(2))),
        ]
        if t == 3:
            cert.append(("delta=2", min_degree(g) == 2))
        return cert
    cert.append(("delta=2", min_degree(g) == 2))
    if family_id == 2:
        cert.append(("triangle_free", is_free(g, [k3])))
    elif family_id == 3:
        (l,) = params
        cert += [
            ("claw_free", is_free(g, [claw])),
            (f"longest_induced_path=P{l + 3}", longest_induced_path_order(g) == l + 3),
        ]
    elif family_id == 4:
        cert += [
            ("K4_free", clique_number(g) == 3),
            ("longest_induced_path=P4", longest_induced_path_order(g) == 4),
            ("contains_K3", contains_induced(g, k3)),
        ]
    elif family_id == 5:
        cert += [
            ("H1_free", is_free(g, [bridged_triangles()])),
            ("longest_induced_path=P5", longest_induced_path_order(g) == 5),
        ]
    elif family_id == 6:
        cert += [
            ("triangle_free", is_free(g, [k3])),
            ("longest_induced_path=P6", longest_induced_path_order(g) == 6),
            ("contains_T1_1_3", contains_induced(g, spider(1, 1, 3))),
        ]
        if params == (2, 2):
            # only the base member avoids the length-4 spider; wider blocks
            # let a degree-3 vertex reach across the bridge
            cert.append(("T1_1_4_free", is_free(g, [spider(1, 1, 4)])))
    elif family_id == 7:
        cert += [
            ("triangle_free", is_free(g, [k3])),
            ("longest_induced_path=P7", longest_induced_path_order(g) == 7),
            ("contains_T1_1_3", contains_induced(g, spider(1, 1, 3))),
        ]
    return cert


def make_family_member(family_id: int, params) -> FamilyMember:
    """Build a family member and verify its certificate, aborting on failure."""
    params = tuple(params)
    g = _family_graph(family_id, params)
    cert = _family_certificate(family_id, params, g)
    for name, ok in cert:
        if not ok:
            raise CertificateError(
                f"family {family_id} params {params}: certified fact {name!r} is false"
            )
    return FamilyMember(family_id, params, g, tuple(cert))


# pair (by canonical forms) -> family member that avoids both patterns
_WITNESS_SPECS: tuple[tuple[str, int, tuple[int, ...]], ...] = (
    ("K1_4,P5", 1, (3,)),
    ("K1_3,P5", 1, (4,)),
    ("Z3,P6", 1, (4,)),
    ("H1,P6", 5, (2,)),
    ("Z2,P7", 6, (2, 2)),
    ("Z2,T1_1_4", 6, (2, 2)),
)

_WITNESS_TABLE: dict[frozenset, tuple[int, tuple[int, ...]]] = {}


def known_witness(pair: PatternSet) -> FamilyMember | None:
    """Return a cataloged family member that is pair-free with kappa' < delta."""
    if not _WITNESS_TABLE:
        for text, fam, params in _WITNESS_SPECS:
            key = parse_pattern_set(text).form_key()
            _WITNESS_TABLE[key] = (fam, params)
    hit = _WITNESS_TABLE.get(pair.form_key())
    if hit is None:
        return None
    member = make_family_member(*hit)
    if not is_free(member.graph, pair):
        raise CertificateError(f"cataloged witness for {pair.label} is not pair-free")
    return member
