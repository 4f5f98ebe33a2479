"""Hypergraphs, their incidence graphs, and the induced polymatroid.

A hypergraph is a vertex list plus an ordered multiset of nonempty vertex
subsets (hyperedges); the hyperedge order fixes the polymatroid ground-set
indexing 1..|E|.  Its incidence graph is bipartite with color classes E and
V and an edge for each (hyperedge, member vertex) pair.

The rank of a hyperedge subset E' is

    rank(E') = |union of E'| - (components of the incidence graph restricted
               to E' and the vertices it touches)

with rank(empty) = 0.  This function is submodular, and the bases of its
polymatroid are the hypertrees: degree distributions of spanning forests of
the incidence graph restricted to the E side.

Also provided: the connectivity profile (largest k such that removing any k
hyperedge vertices keeps the incidence graph connected, V-side isolated
vertices counting as components), a 4-cycle count, and seeded random
generators used by the verification corpus.
"""

from __future__ import annotations

import itertools
from random import Random
from typing import Iterable, Sequence

from .core import Polymatroid, RankTable, enumerate_bases, DEFAULT_MAX_BASES
from .errors import ValidationError


class Hypergraph:
    """Named vertices plus an ordered multiset of nonempty hyperedges."""

    __slots__ = ("vertices", "hyperedges")

    def __init__(self, vertices: Sequence[str], hyperedges: Iterable[Iterable[str]]):
        names = tuple(str(v) for v in vertices)
        if len(set(names)) != len(names):
            raise ValidationError("duplicate vertex names")
        index = {v: k for k, v in enumerate(names)}
        rows = []
        for edge in hyperedges:
            members = frozenset(str(v) for v in edge)
            if not members:
                raise ValidationError("hyperedges must be nonempty")
            unknown = members - set(index)
            if unknown:
                raise ValidationError(f"unknown vertices in hyperedge: {sorted(unknown)}")
            rows.append(frozenset(index[v] for v in members))
        object.__setattr__(self, "vertices", names)
        object.__setattr__(self, "hyperedges", tuple(rows))

    def __setattr__(self, name, value):
        raise AttributeError("Hypergraph is immutable")

    @property
    def num_vertices(self) -> int:
        return len(self.vertices)

    @property
    def num_edges(self) -> int:
        return len(self.hyperedges)

    def incidence_count(self) -> int:
        """Number of edges of the incidence graph (sum of hyperedge sizes)."""
        return sum(len(e) for e in self.hyperedges)

    def edge_names(self) -> tuple[str, ...]:
        return tuple(f"e{k + 1}" for k in range(self.num_edges))

    def __repr__(self) -> str:
        edges = [sorted(self.vertices[v] for v in e) for e in self.hyperedges]
        return f"Hypergraph(V={list(self.vertices)}, E={edges})"

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, Hypergraph)
            and self.vertices == other.vertices
            and self.hyperedges == other.hyperedges
        )

    def __hash__(self) -> int:
        return hash((self.vertices, self.hyperedges))

    def to_json(self) -> dict:
        return {
            "vertices": list(self.vertices),
            "hyperedges": [sorted(self.vertices[v] for v in e) for e in self.hyperedges],
        }

    @staticmethod
    def from_json(data: dict) -> "Hypergraph":
        if "hyperedges" in data:
            try:
                return Hypergraph(data["vertices"], data["hyperedges"])
            except (KeyError, TypeError) as exc:
                raise ValidationError(f"bad hypergraph JSON: {exc}") from exc
        if "edges" in data:
            # explicit bipartite form: {"E": [...], "V": [...], "edges": [[e, v], ...]}
            try:
                e_names = [str(e) for e in data["E"]]
                v_names = [str(v) for v in data["V"]]
                incident: dict[str, list[str]] = {e: [] for e in e_names}
                for e, v in data["edges"]:
                    incident[str(e)].append(str(v))
            except (KeyError, TypeError, ValueError) as exc:
                raise ValidationError(f"bad bipartite JSON: {exc}") from exc
            return Hypergraph(v_names, [incident[e] for e in e_names])
        raise ValidationError("hypergraph JSON needs 'hyperedges' or 'edges'")


def _components_within(h: Hypergraph, edge_mask: int, include_all_vertices: bool) -> int:
    """Components of the incidence graph restricted to the chosen hyperedges.

    With include_all_vertices, every vertex of V participates (isolated ones
    count); otherwise only vertices touched by the chosen hyperedges exist.
    """
    n = h.num_edges
    nv = h.num_vertices
    parent = list(range(n + nv))

    def find(a: int) -> int:
        while parent[a] != a:
            parent[a] = parent[parent[a]]
            a = parent[a]
        return a

    def union(a: int, b: int) -> bool:
        ra, rb = find(a), find(b)
        if ra == rb:
            return False
        parent[ra] = rb
        return True

    active_edges = [k for k in range(n) if edge_mask & (1 << k)]
    touched = set()
    comps = len(active_edges)
    for k in active_edges:
        for v in h.hyperedges[k]:
            touched.add(v)
    comps += nv if include_all_vertices else len(touched)
    for k in active_edges:
        for v in h.hyperedges[k]:
            if union(k, n + v):
                comps -= 1
    return comps


def hypergraph_rank(h: Hypergraph, edges: Iterable[int]) -> int:
    """Covered-vertex count minus incidence components, for 1-based indices."""
    mask = 0
    for k in edges:
        if not 1 <= k <= h.num_edges:
            raise ValidationError(f"hyperedge index {k} outside 1..{h.num_edges}")
        mask |= 1 << (k - 1)
    return _rank_of_mask(h, mask)


def _rank_of_mask(h: Hypergraph, mask: int) -> int:
    if mask == 0:
        return 0
    covered = set()
    for k in range(h.num_edges):
        if mask & (1 << k):
            covered |= h.hyperedges[k]
    return len(covered) - _components_within(h, mask, include_all_vertices=False)


def rank_table(h: Hypergraph) -> RankTable:
    """Dense rank table over hyperedge subsets (validated submodular)."""
    n = h.num_edges
    if n < 1:
        raise ValidationError("need at least one hyperedge for a polymatroid")
    values = [_rank_of_mask(h, mask) for mask in range(1 << n)]
    table = RankTable(n, values, validate=False)
    table.validate()  # submodularity of the rank is asserted, not assumed
    return table


def hypertree_polymatroid(
    h: Hypergraph, max_bases: int = DEFAULT_MAX_BASES
) -> tuple[Polymatroid, RankTable]:
    """The polymatroid of hypertrees together with its rank table."""
    table = rank_table(h)
    return enumerate_bases(table, max_bases), table


def is_connected(h: Hypergraph, removed_edges: Iterable[int] = ()) -> bool:
    """Connectivity of the incidence graph after removing hyperedge vertices.

    All V-side vertices remain; a vertex isolated by the removal makes the
    graph disconnected.  A graph with no vertices at all counts as
    disconnected, one with a single vertex as connected.
    """
    removed = 0
    for k in removed_edges:
        if not 1 <= k <= h.num_edges:
            raise ValidationError(f"hyperedge index {k} outside 1..{h.num_edges}")
        removed |= 1 << (k - 1)
    mask = ((1 << h.num_edges) - 1) & ~removed
    total_nodes = bin(mask).count("1") + h.num_vertices
    if total_nodes == 0:
        return False
    return _components_within(h, mask, include_all_vertices=True) == 1


def connectivity_profile(h: Hypergraph) -> int:
    """Largest k such that removing ANY k hyperedge vertices leaves the
    incidence graph connected; -1 when it is disconnected to begin with."""
    if not is_connected(h):
        return -1
    n = h.num_edges
    for k in range(1, n + 1):
        for removed in itertools.combinations(range(1, n + 1), k):
            if not is_connected(h, removed):
                return k - 1
    return n


def count_four_cycles(h: Hypergraph) -> int:
    """4-cycles of the incidence graph: pairs of hyperedges sharing a pair of
    vertices, multiset-aware."""
    total = 0
    for a, b in itertools.combinations(h.hyperedges, 2):
        shared = len(a & b)
        total += shared * (shared - 1) // 2
    return total


def vertex_degree(h: Hypergraph, v_index: int) -> int:
    """Number of hyperedges containing the vertex (0-based index)."""
    return sum(1 for e in h.hyperedges if v_index in e)


def edge_degree(h: Hypergraph, k: int) -> int:
    """Size of hyperedge k (1-based), i.e. its incidence-graph degree."""
    return len(h.hyperedges[k - 1])


# -- seeded random generation (corpus support) -----------------------------------


def random_hypergraph(
    rng: Random,
    max_vertices: int = 5,
    max_edges: int = 5,
    *,
    connected: bool = True,
    max_tries: int = 2000,
) -> Hypergraph:
    """Random hypergraph; with ``connected`` it retries until the incidence
    graph is connected (which also forces every vertex to be covered)."""
    for _ in range(max_tries):
        nv = rng.randint(1, max_vertices)
        ne = rng.randint(1, max_edges)
        names = [f"v{i + 1}" for i in range(nv)]
        edges = []
        for _ in range(ne):
            size = rng.randint(1, nv)
            edges.append(rng.sample(names, size))
        h = Hypergraph(names, edges)
        if not connected or is_connected(h):
            return h
    raise ValidationError("could not draw a connected hypergraph; widen parameters")


def random_incidence_subgraph(rng: Random, h: Hypergraph) -> Hypergraph:
    """Random sub-hypergraph on the same vertices and hyperedge count.

    Deletes incidence edges only (shrinks hyperedges), always keeping each
    hyperedge nonempty, so the two polymatroids share a ground set and the
    smaller incidence graph is a subgraph of the larger one.
    """
    new_edges = []
    for e in h.hyperedges:
        members = sorted(e)
        keep_count = rng.randint(1, len(members))
        kept = rng.sample(members, keep_count)
        new_edges.append([h.vertices[v] for v in kept])
    return Hypergraph(h.vertices, new_edges)
