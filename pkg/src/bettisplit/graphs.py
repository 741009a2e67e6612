"""Graphs and their monomial ideals.

Edge ideals, splitting vertices, minimal vertex covers and cover ideals,
the Herzog-Hibi combinatorial characterization of Cohen-Macaulay bipartite
graphs, the recursive computation of cover-ideal Betti numbers for such
graphs, and the pairwise 3-disjoint edge number.

Vertices are labeled 1..n, matching the text formats; for a bipartite
labeled graph on parts {x_1..x_n} and {y_1..y_n} the corresponding simple
graph lives on 2n vertices with x_i at position i and y_j at position n+j,
so cover ideals use variables ordered x1..xn, y1..yn.
"""

from __future__ import annotations

import random
from functools import lru_cache
from typing import Iterable

from .betti import betti_table, has_linear_resolution
from .homology import FieldSpec
from .ideals import Monomial, MonomialIdeal, intersect
from .splitting import Partition, SplitReport, is_betti_splitting, partition_report

VERTEX_COVER_CAP = 24


class GraphFormatError(ValueError):
    """Graph text input could not be parsed."""


class InvalidLabelingError(ValueError):
    """A bipartite labeled graph violating the Cohen-Macaulay conditions."""


class SimpleGraph:
    """Undirected simple graph on vertices 1..n (no loops, no multi-edges)."""

    __slots__ = ("n", "edges")

    def __init__(self, n: int, edges: Iterable[tuple[int, int]] = ()):
        if n < 0:
            raise ValueError("vertex count must be nonnegative")
        norm = set()
        for u, v in edges:
            if not (1 <= u <= n and 1 <= v <= n):
                raise ValueError(f"edge ({u},{v}) outside 1..{n}")
            if u == v:
                raise ValueError(f"loop at vertex {u}")
            norm.add((min(u, v), max(u, v)))
        self.n = n
        self.edges = tuple(sorted(norm))

    def degree(self, v: int) -> int:
        return sum(1 for e in self.edges if v in e)

    def neighbors(self, v: int) -> tuple[int, ...]:
        out = set()
        for u, w in self.edges:
            if u == v:
                out.add(w)
            elif w == v:
                out.add(u)
        return tuple(sorted(out))

    def delete_vertices(self, drop: Iterable[int]) -> "SimpleGraph":
        """Remove vertices and incident edges, keeping the ambient vertex set.

        The surviving graph has the same n (removed vertices become
        isolated), so monomial multidegrees stay comparable.
        """
        drop = set(drop)
        return SimpleGraph(
            self.n, (e for e in self.edges if not (e[0] in drop or e[1] in drop))
        )

    def __eq__(self, other):
        return (
            isinstance(other, SimpleGraph)
            and self.n == other.n
            and self.edges == other.edges
        )

    def __hash__(self):
        return hash((self.n, self.edges))

    def __repr__(self):
        return f"SimpleGraph(n={self.n}, edges={list(self.edges)})"


def edge_ideal(G: SimpleGraph) -> MonomialIdeal:
    """One squarefree degree-2 generator x_u x_v per edge; zero if edgeless."""
    gens = []
    for u, v in G.edges:
        exps = [0] * G.n
        exps[u - 1] = 1
        exps[v - 1] = 1
        gens.append(Monomial(exps))
    return MonomialIdeal(G.n, gens)


def splitting_vertices(G: SimpleGraph) -> set[int]:
    """Vertices v that are not isolated and whose removal leaves at least one
    edge (i.e. the rest is not a graph of isolated vertices)."""
    out = set()
    for v in range(1, G.n + 1):
        if G.degree(v) == 0:
            continue
        if any(v not in e for e in G.edges):
            out.add(v)
    return out


def edge_ideal_split(G: SimpleGraph, v: int, field: FieldSpec) -> SplitReport:
    """Split the edge ideal at a splitting vertex and verify the result.

    The part taken by the vertex is that variable times a subset of the
    variables, hence has a linear resolution, so the verification must
    report a Betti splitting for every valid input and field.
    """
    if v not in splitting_vertices(G):
        raise ValueError(f"vertex {v} is not a splitting vertex")
    p = Partition.variable_partition(edge_ideal(G), v)
    return partition_report(p, field)


def minimal_vertex_covers(G: SimpleGraph) -> list[frozenset[int]]:
    """The antichain of minimal vertex covers, sorted.

    Branches on an uncovered edge (take one endpoint or the other) and
    prunes non-minimal covers at the end.  The edgeless graph has the empty
    cover only.
    """
    if G.n > VERTEX_COVER_CAP:
        raise ValueError(f"vertex count {G.n} exceeds cap {VERTEX_COVER_CAP}")
    found: set[frozenset[int]] = set()

    def branch(cover: set, edges):
        uncovered = [e for e in edges if e[0] not in cover and e[1] not in cover]
        if not uncovered:
            found.add(frozenset(cover))
            return
        u, v = uncovered[0]
        branch(cover | {u}, uncovered)
        branch(cover | {v}, uncovered)

    branch(set(), G.edges)
    minimal = [c for c in found if not any(d < c for d in found)]
    return sorted(minimal, key=sorted)


def cover_ideal(G: SimpleGraph) -> MonomialIdeal:
    """The ideal generated by the minimal vertex covers, one squarefree
    monomial per cover; the edgeless graph yields the unit ideal."""
    gens = []
    for cover in minimal_vertex_covers(G):
        exps = [0] * G.n
        for v in cover:
            exps[v - 1] = 1
        gens.append(Monomial(exps))
    return MonomialIdeal(G.n, gens)


# --- Cohen-Macaulay bipartite graphs -----------------------------------------


class BipartiteLabeledGraph:
    """Bipartite graph on parts {x_1..x_n}, {y_1..y_n}, edges as (i, j) pairs
    meaning {x_i, y_j}.

    A labeling is Cohen-Macaulay (Herzog-Hibi) when (a) every (i, i) is an
    edge, (b) every edge has i <= j, and (c) edges (i, j) and (j, k) with
    i < j < k force the edge (i, k).
    """

    __slots__ = ("n", "edges")

    def __init__(self, n: int, edges: Iterable[tuple[int, int]] = ()):
        if n < 0:
            raise ValueError("part size must be nonnegative")
        norm = set()
        for i, j in edges:
            if not (1 <= i <= n and 1 <= j <= n):
                raise ValueError(f"edge ({i},{j}) outside 1..{n}")
            norm.add((i, j))
        self.n = n
        self.edges = tuple(sorted(norm))

    def to_simple_graph(self) -> SimpleGraph:
        return SimpleGraph(2 * self.n, ((i, self.n + j) for i, j in self.edges))

    def __eq__(self, other):
        return (
            isinstance(other, BipartiteLabeledGraph)
            and self.n == other.n
            and self.edges == other.edges
        )

    def __hash__(self):
        return hash((self.n, self.edges))

    def __repr__(self):
        return f"BipartiteLabeledGraph(n={self.n}, edges={list(self.edges)})"


def herzog_hibi_validate(G: BipartiteLabeledGraph) -> bool:
    """Check conditions (a), (b), (c) of the Cohen-Macaulay labeling."""
    edges = set(G.edges)
    if any((i, i) not in edges for i in range(1, G.n + 1)):
        return False
    if any(i > j for i, j in edges):
        return False
    for i, j in edges:
        if i == j:
            continue
        for j2, k in edges:
            if j2 == j and j < k and (i, k) not in edges:
                return False
    return True


def relabel_to_canonical(G: BipartiteLabeledGraph):
    """Relabel a graph whose edge relation is a partial order into a valid
    Herzog-Hibi labeling.

    Returns (relabeled graph, permutation) where permutation[old] = new.
    Requires every (i, i) edge (the pairing of the parts is taken as given)
    and a relation that is antisymmetric and transitive; otherwise raises
    InvalidLabelingError.  Valid inputs come back unchanged.
    """
    if herzog_hibi_validate(G):
        return G, {i: i for i in range(1, G.n + 1)}
    edges = set(G.edges)
    if any((i, i) not in edges for i in range(1, G.n + 1)):
        raise InvalidLabelingError("missing a matching edge (i, i)")
    rel = {(i, j) for i, j in edges if i != j}
    if any((j, i) in rel for i, j in rel):
        raise InvalidLabelingError("edge relation is not antisymmetric")
    for i, j in rel:
        for j2, k in rel:
            if j2 == j and k != i and (i, k) not in rel:
                raise InvalidLabelingError("edge relation is not transitive")
    # topological order of the relation, smallest old label first
    successors = {i: set() for i in range(1, G.n + 1)}
    indeg = {i: 0 for i in range(1, G.n + 1)}
    for i, j in rel:
        successors[i].add(j)
        indeg[j] += 1
    ready = sorted(i for i in indeg if indeg[i] == 0)
    perm = {}
    nxt = 1
    while ready:
        v = ready.pop(0)
        perm[v] = nxt
        nxt += 1
        for w in sorted(successors[v]):
            indeg[w] -= 1
            if indeg[w] == 0:
                ready.append(w)
        ready.sort()
    relabeled = BipartiteLabeledGraph(G.n, ((perm[i], perm[j]) for i, j in edges))
    if not herzog_hibi_validate(relabeled):
        raise InvalidLabelingError("no Cohen-Macaulay labeling with this pairing")
    return relabeled, perm


def cm_bipartite_random(n: int, density: float, seed: int) -> BipartiteLabeledGraph:
    """Seeded random graph satisfying the Cohen-Macaulay labeling conditions.

    Includes every (i, i); adds each (i, j) with i < j independently with
    the given probability; then closes under condition (c).  Density 0 gives
    the perfect matching, density 1 the full upper-triangular graph.
    """
    if n < 1:
        raise ValueError("part size must be at least 1")
    rng = random.Random(seed)
    edges = {(i, i) for i in range(1, n + 1)}
    for i in range(1, n + 1):
        for j in range(i + 1, n + 1):
            if rng.random() < density:
                edges.add((i, j))
    changed = True
    while changed:
        changed = False
        snapshot = sorted(edges)
        for i, j in snapshot:
            if i == j:
                continue
            for j2, k in snapshot:
                if j2 == j and j < k and (i, k) not in edges:
                    edges.add((i, k))
                    changed = True
    G = BipartiteLabeledGraph(n, edges)
    assert herzog_hibi_validate(G)
    return G


@lru_cache(maxsize=None)
def _cover_betti_rec(n: int, edges: tuple) -> tuple[int, ...]:
    if n == 0:
        return (1,)  # unit ideal: one generator, nothing higher
    # x_n has degree one and meets only y_n; N(y_n) = {x_i : (i, n) in E}
    neighbors = sorted(i for i, j in edges if j == n)
    # part one: drop the pair (x_n, y_n)
    e1 = tuple((i, j) for i, j in edges if i != n and j != n)
    a = _cover_betti_rec(n - 1, e1)
    # part two: drop every pair indexed by a neighbor of y_n, then reindex
    drop = set(neighbors)
    keep = [i for i in range(1, n + 1) if i not in drop]
    newlabel = {old: new for new, old in enumerate(keep, start=1)}
    e2 = tuple(
        sorted(
            (newlabel[i], newlabel[j])
            for i, j in edges
            if i not in drop and j not in drop
        )
    )
    b = _cover_betti_rec(len(keep), e2)
    out = [0] * max(len(a), len(b) + 1)
    for i, v in enumerate(a):
        out[i] += v
    for i, v in enumerate(b):
        out[i] += v  # its own Betti numbers
        out[i + 1] += v  # and shifted once, from the intersection
    while out and out[-1] == 0:
        out.pop()
    return tuple(out)


def cover_betti_recursive(G: BipartiteLabeledGraph) -> list[int]:
    """Total Betti numbers of the cover ideal, by structural recursion.

    Splits off the covers through y_n against those through x_n and recurses
    on the two smaller Cohen-Macaulay graphs; no homology is computed, and
    the answer is independent of the field.  Inputs are relabeled to a valid
    Cohen-Macaulay labeling first (when possible), else rejected.
    """
    G, _ = relabel_to_canonical(G)
    return list(_cover_betti_rec(G.n, G.edges))


def three_disjoint_number(G: SimpleGraph) -> int:
    """Maximum size of a set of pairwise 3-disjoint edges.

    Two edges are 3-disjoint when the subgraph induced on their four
    endpoints is exactly the two edges.  Compatibility is not transitive,
    so this does a full search with pruning.
    """
    edges = list(G.edges)
    m = len(edges)
    eset = set(edges)

    def compatible(e, f):
        a, b = e
        c, d = f
        if len({a, b, c, d}) < 4:
            return False
        cross = [(a, c), (a, d), (b, c), (b, d)]
        return not any((min(u, v), max(u, v)) in eset for u, v in cross)

    comp = [[compatible(edges[i], edges[j]) for j in range(m)] for i in range(m)]
    best = 0

    def grow(start: int, chosen: list[int]):
        nonlocal best
        best = max(best, len(chosen))
        for k in range(start, m):
            if len(chosen) + (m - k) <= best:
                break
            if all(comp[k][c] for c in chosen):
                chosen.append(k)
                grow(k + 1, chosen)
                chosen.pop()

    grow(0, [])
    return best


def cm_pd_reg_check(G: BipartiteLabeledGraph, field: FieldSpec) -> bool:
    """Verify pd(cover ideal) == a(G) == reg(edge ideal) - 1 for a
    Cohen-Macaulay bipartite graph."""
    G, _ = relabel_to_canonical(G)
    simple = G.to_simple_graph()
    pd = betti_table(cover_ideal(simple), field).proj_dim()
    a = three_disjoint_number(simple)
    reg_edge = betti_table(edge_ideal(simple), field).regularity()
    return pd == a == reg_edge - 1


def cover_splitting_parts(G: BipartiteLabeledGraph):
    """The two sides of the cover-ideal splitting used by the recursion.

    Returns (J, K, expected intersection): J = y_n times the cover ideal
    with y_n deleted, K = (product over N(y_n)) times the cover ideal with
    y_n and its neighbors deleted, and the expected intersection, which is
    y_n times K.  All three live in the full 2n-variable ring.
    """
    G, _ = relabel_to_canonical(G)
    n = G.n
    simple = G.to_simple_graph()
    yn = n + n
    neighbors = sorted(i for i, j in G.edges if j == n)  # includes x_n
    j_part = cover_ideal(simple.delete_vertices([yn])).scale(
        Monomial.variable(yn, 2 * n)
    )
    prod = Monomial.one(2 * n)
    for i in neighbors:
        prod = prod * Monomial.variable(i, 2 * n)
    drop = [yn] + neighbors
    k_part = cover_ideal(simple.delete_vertices(drop)).scale(prod)
    expected_meet = k_part.scale(Monomial.variable(yn, 2 * n))
    return j_part, k_part, expected_meet


# --- text formats -------------------------------------------------------------
#
#   graph n      followed by lines  u v     (1-based vertices)
#   bigraph n    followed by lines  i j     meaning the edge {x_i, y_j}
#


def parse_graph(text: str):
    """Parse either format; returns a SimpleGraph or a BipartiteLabeledGraph."""
    header = None
    kind = None
    edges = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        if header is None:
            fields = line.split()
            if len(fields) != 2 or fields[0] not in ("graph", "bigraph") or not fields[1].isdigit():
                raise GraphFormatError(
                    f"line {lineno}: expected 'graph <n>' or 'bigraph <n>', got {line!r}"
                )
            kind, header = fields[0], int(fields[1])
            continue
        fields = line.split()
        if len(fields) != 2 or not all(f.isdigit() for f in fields):
            raise GraphFormatError(f"line {lineno}: expected two vertex labels, got {line!r}")
        edges.append((int(fields[0]), int(fields[1])))
    if header is None:
        raise GraphFormatError("missing 'graph <n>' or 'bigraph <n>' header line")
    try:
        if kind == "graph":
            return SimpleGraph(header, edges)
        return BipartiteLabeledGraph(header, edges)
    except ValueError as exc:
        raise GraphFormatError(str(exc)) from None


def format_graph(G) -> str:
    if isinstance(G, SimpleGraph):
        lines = [f"graph {G.n}"]
    elif isinstance(G, BipartiteLabeledGraph):
        lines = [f"bigraph {G.n}"]
    else:
        raise TypeError(f"not a graph: {G!r}")
    lines.extend(f"{u} {v}" for u, v in G.edges)
    return "\n".join(lines) + "\n"
