"""Hypergraphs with edge multiplicity, Sperner machinery, monotone
dualization by Berge multiplication, and the graph/hypergraph constructions
linking split graphs to their neighborhood hypergraphs.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Optional

from .errors import CapabilityError
from .graphs import Graph

DEFAULT_DUAL_CAP = 200_000


def _edge_key(e: frozenset[int]) -> tuple[int, ...]:
    return tuple(sorted(e))


@dataclass(frozen=True)
class Hypergraph:
    """Vertex count plus a multiset of hyperedges (stored canonically sorted).

    Duplicate edges and the empty edge are legal; equality is multiset
    equality because the edge tuple is normalized on construction.
    """

    n: int
    edges: tuple[frozenset[int], ...]

    def __post_init__(self):
        if self.n < 0:
            raise ValueError("vertex count must be non-negative")
        canon = tuple(sorted((frozenset(e) for e in self.edges), key=_edge_key))
        for e in canon:
            for v in e:
                if not 0 <= v < self.n:
                    raise ValueError(f"edge vertex {v} out of range for n={self.n}")
        object.__setattr__(self, "edges", canon)

    @staticmethod
    def make(n: int, edges: Iterable[Iterable[int]]) -> "Hypergraph":
        return Hypergraph(n, tuple(frozenset(e) for e in edges))


def sperner_reduce(H: Hypergraph) -> Hypergraph:
    """Collapse duplicates and drop edges containing another edge."""
    return Hypergraph(H.n, _minimal_sets(H.edges))


def _minimal_sets(sets: Iterable[frozenset[int]]) -> tuple[frozenset[int], ...]:
    """Inclusion-minimal members, deduplicated, canonically sorted."""
    by_size = sorted(set(sets), key=lambda s: (len(s), _edge_key(s)))
    kept: list[frozenset[int]] = []
    for s in by_size:
        if not any(k <= s for k in kept):
            kept.append(s)
    return tuple(sorted(kept, key=_edge_key))


def dually_sperner_violation(
    H: Hypergraph,
) -> Optional[tuple[frozenset[int], frozenset[int]]]:
    """A pair of edges with both set differences of size >= 2, or None.

    Duplicate edges compare with both differences empty, so they never
    violate the condition.
    """
    edges = H.edges
    for i in range(len(edges)):
        for j in range(i + 1, len(edges)):
            e, f = edges[i], edges[j]
            if len(e - f) > 1 and len(f - e) > 1:
                return e, f
    return None


def is_dually_sperner(H: Hypergraph) -> bool:
    """True iff every pair of edges e,f has min(|e-f|, |f-e|) <= 1."""
    return dually_sperner_violation(H) is None


def minimal_transversals(H: Hypergraph, cap: int = DEFAULT_DUAL_CAP) -> tuple[frozenset[int], ...]:
    """All inclusion-minimal sets meeting every edge, by Berge multiplication.

    The hypergraph with no edges has the empty set as its unique minimal
    transversal; an empty edge makes the family empty. ``cap`` guards the
    intermediate family size. Output is deterministically sorted.
    """
    family: list[frozenset[int]] = [frozenset()]
    for e in H.edges:
        if not e:
            return ()
        hits = [t for t in family if t & e]
        misses = [t for t in family if not t & e]
        grown = hits + [t | {v} for t in misses for v in sorted(e)]
        family = list(_minimal_sets(grown))
        if len(family) > cap:
            raise CapabilityError(
                f"transversal family exceeded cap {cap} while dualizing"
            )
    return tuple(sorted(family, key=_edge_key))


def is_transversal_family(H: Hypergraph, family: Iterable[frozenset[int]]) -> bool:
    """Check the minimal-transversal invariants (antichain, hitting, minimal)."""
    fam = [frozenset(t) for t in family]
    if len(set(fam)) != len(fam):
        return False
    for t in fam:
        if any(s != t and s <= t for s in fam):
            return False
        if any(not (t & e) for e in H.edges):
            return False
        if any(all((t - {v}) & e for e in H.edges) for v in t):
            return False
    return True


# ---------------------------------------------------------------------------
# Graph <-> hypergraph constructions


def split_incidence_graph(
    H: Hypergraph,
) -> tuple[Graph, frozenset[int], frozenset[int]]:
    """Split graph with the vertices of H as a clique and one independent
    vertex per edge (duplicates give twins), adjacency = membership.

    Returns (graph, clique side, independent side).
    """
    n, m = H.n, len(H.edges)
    edges = [(u, v) for u in range(n) for v in range(u + 1, n)]
    for j, e in enumerate(H.edges):
        edges += [(v, n + j) for v in sorted(e)]
    G = Graph.from_edges(n + m, edges)
    return G, frozenset(range(n)), frozenset(range(n, n + m))


def independent_neighborhood_hypergraph(
    G: Graph, K: Iterable[int], I: Iterable[int]
) -> Hypergraph:
    """Neighborhood multiset of the independent side of a split partition.

    Vertex set is K relabeled ascending; each vertex of I contributes its
    neighborhood as one edge, keeping duplicates.
    """
    K, I = frozenset(K), frozenset(I)
    if K | I != frozenset(range(G.n)) or K & I:
        raise ValueError("(K, I) must partition the vertex set")
    for u in K:
        if not K - {u} <= G.adj[u]:
            raise ValueError("K is not a clique")
    for u in I:
        if G.adj[u] & I:
            raise ValueError("I is not independent")
    index = {v: i for i, v in enumerate(sorted(K))}
    return Hypergraph.make(len(K), [[index[u] for u in G.adj[v]] for v in sorted(I)])


def reduced_neighborhood_hypergraph(G: Graph) -> Hypergraph:
    """Distinct vertex neighborhoods that strictly contain no other
    neighborhood; equals the Sperner reduction of the neighborhood multiset.
    """
    return sperner_reduce(Hypergraph.make(G.n, [G.adj[v] for v in range(G.n)]))


def neighborhood_split_graph(G: Graph) -> Graph:
    """Split-incidence graph of the reduced neighborhood hypergraph of G."""
    return split_incidence_graph(reduced_neighborhood_hypergraph(G))[0]


def add_universal_vertex(H: Hypergraph) -> Hypergraph:
    """New vertex (index n) added to every edge."""
    return Hypergraph.make(H.n + 1, [set(e) | {H.n} for e in H.edges])


def remove_universal_vertex(H: Hypergraph, v: int) -> Hypergraph:
    """Delete a vertex contained in every edge; remaining indices shift down."""
    if not 0 <= v < H.n:
        raise ValueError(f"vertex {v} out of range")
    if any(v not in e for e in H.edges):
        raise ValueError(f"vertex {v} is not universal")
    relabel = lambda u: u if u < v else u - 1
    return Hypergraph.make(H.n - 1, [[relabel(u) for u in e - {v}] for e in H.edges])
