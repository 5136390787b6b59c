"""Total domishold recognition with verifiable certificates, the hereditary
recognizer over the forbidden catalog, the structure-preserving graph
transformations with their explicit weight constructions, and the seven-way
equivalence check tying graphs, functions and hypergraphs together.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional

from . import catalog as _catalog
from .boolean import (
    PositiveDNF,
    SummabilityWitness,
    dnf_of_hypergraph,
    is_threshold,
    make_dnf,
    threshold_in_td_sense,
)
from .errors import CapabilityError
from .graphs import Graph, add_universal, disjoint_union, find_induced
from .hypergraphs import (
    DEFAULT_DUAL_CAP,
    Hypergraph,
    neighborhood_split_graph,
    reduced_neighborhood_hypergraph,
    split_incidence_graph,
)

VERIFY_CAP = 16


@dataclass(frozen=True)
class TdStructure:
    """Per-vertex non-negative integer weights and threshold t such that a
    set is total dominating iff its weight reaches t."""

    weights: tuple[int, ...]
    t: int


@dataclass(frozen=True)
class TdRecognitionReport:
    """verdict True carries a verifying structure; verdict False carries
    negative evidence (an LP infeasibility note, plus a summability witness
    on the neighborhood function when one was found); verdict None means the
    answer is unknown because a capability cap was hit."""

    verdict: Optional[bool]
    structure: Optional[TdStructure]
    witness: Optional[SummabilityWitness]
    note: str


@dataclass(frozen=True)
class HtdRecognitionReport:
    """verdict False carries the index of the forbidden catalog member found
    and the induced embedding witnessing it."""

    verdict: bool
    witness: Optional[tuple[int, tuple[int, ...]]]


def neighborhood_dnf(G: Graph) -> PositiveDNF:
    """The neighborhood function of G: true exactly on supports containing
    some vertex's neighborhood, given by its complete DNF (the minimal
    neighborhoods; equal neighborhoods collapse to one implicant)."""
    return make_dnf(G.n, [G.adj[v] for v in range(G.n)])


def recognize_td(
    G: Graph, want_witness: bool = True, dual_cap: int = DEFAULT_DUAL_CAP
) -> TdRecognitionReport:
    """Decide whether G is total domishold; synthesize an integral structure.

    Graphs with an isolated vertex have no total dominating sets and get the
    all-ones structure with threshold n+1. Otherwise a separating structure
    (w, t) of the neighborhood function is computed by exact LP and converted
    to the total domishold structure (w, sum(w) - t). Capability caps
    surface as an unknown verdict, never a wrong one.
    """
    if G.has_isolated_vertex():
        structure = TdStructure((1,) * G.n, G.n + 1)
        return TdRecognitionReport(True, structure, None, "isolated-vertex")
    f = neighborhood_dnf(G)
    try:
        report = is_threshold(f, dual_cap=dual_cap, want_witness=want_witness)
    except CapabilityError as exc:
        return TdRecognitionReport(None, None, None, f"unknown: {exc}")
    if report.is_threshold:
        s = report.structure
        structure = TdStructure(s.weights, sum(s.weights) - s.t)
        return TdRecognitionReport(True, structure, None, "separating-structure")
    return TdRecognitionReport(False, None, report.witness, "lp-infeasible")


def verify_td_structure(G: Graph, s: TdStructure, max_n: int = VERIFY_CAP) -> bool:
    """Exhaustive oracle: over all 2^n subsets, the weight reaches t exactly
    on the total dominating sets."""
    if G.n > max_n:
        raise CapabilityError(f"exhaustive verification capped at {max_n} vertices")
    if len(s.weights) != G.n or s.t < 0 or any(w < 0 for w in s.weights):
        return False
    masks = [_adj_mask(G, v) for v in range(G.n)]
    totals = _subset_weights(G.n, s.weights)
    for sub in range(1 << G.n):
        is_td = all(m & sub for m in masks)
        if (totals[sub] >= s.t) != is_td:
            return False
    return True


def _subset_weights(n: int, weights) -> list[int]:
    """Weight of every subset, indexed by bitmask."""
    totals = [0] * (1 << n)
    for mask in range(1, 1 << n):
        low = mask & -mask
        totals[mask] = totals[mask ^ low] + weights[low.bit_length() - 1]
    return totals


def _adj_mask(G: Graph, v: int) -> int:
    m = 0
    for u in G.adj[v]:
        m |= 1 << u
    return m


def recognize_htd(G: Graph) -> HtdRecognitionReport:
    """Hereditary recognizer: G is hereditary total domishold iff none of the
    thirteen catalog graphs embeds as an induced subgraph; the first catalog
    hit (in index order) is returned as the witness."""
    for entry in _catalog.forbidden_catalog():
        image = find_induced(G, entry.graph)
        if image is not None:
            return HtdRecognitionReport(False, (entry.index, image))
    return HtdRecognitionReport(True, None)


forbidden_catalog = _catalog.forbidden_catalog


# ---------------------------------------------------------------------------
# Structure-preserving transformations


def make_positive(G: Graph, s: TdStructure) -> TdStructure:
    """An all-positive-weights structure from a verifying one: scale weights
    by 2n and add 1 everywhere, scale the threshold by 2n. Integrality makes
    non-total-dominating sets fall short by at least one, which absorbs the
    added |S| term."""
    _require_verifying(G, s)
    if G.n == 0:
        return s
    n = G.n
    return TdStructure(tuple(2 * n * w + 1 for w in s.weights), 2 * n * s.t)


def structure_add_universal(G: Graph, s: TdStructure) -> tuple[Graph, TdStructure]:
    """Extend a verifying structure to G plus a universal vertex: the new
    vertex weighs t minus the minimum weight (clamped at zero), keeping the
    same threshold. Falls back to fresh synthesis if the transferred
    structure fails verification."""
    _require_verifying(G, s)
    G2 = add_universal(G)
    if G.n == 0:
        return G2, TdStructure((1,), 2)
    if min(s.weights) == 0:
        s = make_positive(G, s)
    wv = max(s.t - min(s.weights), 0)
    candidate = TdStructure(s.weights + (wv,), s.t)
    if G2.n <= VERIFY_CAP and not verify_td_structure(G2, candidate):
        report = recognize_td(G2)
        if not report.verdict or report.structure is None:
            raise AssertionError("universal-vertex extension must stay total domishold")
        candidate = report.structure
    return G2, candidate


def unique_minimal_tds(H: Graph, max_n: int = VERIFY_CAP) -> Optional[frozenset[int]]:
    """The unique inclusion-minimal total dominating set if there is exactly
    one, else None. The intersection of all total dominating sets is the
    unique minimal one exactly when it is itself total dominating."""
    if H.n > max_n:
        raise CapabilityError(f"brute-force enumeration capped at {max_n} vertices")
    masks = [_adj_mask(H, v) for v in range(H.n)]
    common = (1 << H.n) - 1
    found = False
    for sub in range(1 << H.n):
        if all(m & sub for m in masks):
            common &= sub
            found = True
    if not found:
        return None
    if not all(m & common for m in masks):
        return None
    return frozenset(i for i in range(H.n) if common >> i & 1)


def structure_union_unique_min(
    G: Graph, s: TdStructure, H: Graph
) -> tuple[Graph, TdStructure]:
    """Structure for the disjoint union with a graph H having a unique
    minimal total dominating set T: T's vertices weigh the whole old weight
    sum, the rest of H weighs zero, and the threshold grows by |T| times
    that sum."""
    _require_verifying(G, s)
    T = unique_minimal_tds(H)
    if T is None:
        raise ValueError("H must have a unique minimal total dominating set")
    G2 = disjoint_union(G, H)
    if G.n == 0:
        weights = tuple(1 if v in T else 0 for v in range(H.n))
        return G2, TdStructure(weights, len(T))
    N = sum(s.weights)
    weights = s.weights + tuple(N if v in T else 0 for v in range(H.n))
    return G2, TdStructure(weights, s.t + len(T) * N)


def embed_into_td(G: Graph) -> tuple[Graph, TdStructure, tuple[int, ...]]:
    """Embed G into a total domishold graph without isolated vertices.

    A helper vertex is joined to the isolated vertices of G, then every
    vertex of the result receives a private neighbor. The unique minimal
    total dominating set consists of V(G), the helper, and additionally the
    helper's private neighbor when G has no isolated vertex (nothing else
    dominates the helper in that case); weight 1 on that set with its size
    as threshold is a verifying structure.
    """
    n = G.n
    helper = n
    base_edges = G.edges() + [(w, helper) for w in sorted(G.isolated_vertices())]
    pend_edges = [(x, n + 1 + x) for x in range(n + 1)]
    G2 = Graph.from_edges(2 * n + 2, base_edges + pend_edges)
    core = set(range(n)) | {helper}
    if not G.has_isolated_vertex():
        core.add(n + 1 + helper)
    weights = tuple(1 if v in core else 0 for v in range(G2.n))
    structure = TdStructure(weights, len(core))
    return G2, structure, tuple(range(n))


def _require_verifying(G: Graph, s: TdStructure) -> None:
    if G.n <= VERIFY_CAP and not verify_td_structure(G, s):
        raise ValueError("structure does not verify for the given graph")


# ---------------------------------------------------------------------------
# Equivalence chain and the hypergraph bridge


@dataclass(frozen=True)
class EquivalenceReport:
    """The seven verdicts: (i) the graph is total domishold; (ii) its
    neighborhood function is threshold; (iii) the complete DNF of that
    function is threshold; (iv) the hypergraph of that DNF is threshold;
    (v) the reduced neighborhood hypergraph is threshold; (vi) the
    split-incidence graph of that hypergraph is total domishold; (vii) the
    derived neighborhood split graph is total domishold. None marks a leg
    that hit a capability cap."""

    legs: tuple[Optional[bool], ...]

    ROMAN = ("i", "ii", "iii", "iv", "v", "vi", "vii")

    def unanimous(self) -> bool:
        decided = [leg for leg in self.legs if leg is not None]
        return all(decided) or not any(decided)

    def as_dict(self) -> dict[str, Optional[bool]]:
        return dict(zip(self.ROMAN, self.legs))


def check_equivalence_chain(G: Graph) -> EquivalenceReport:
    """Evaluate the seven equivalent statements along their own construction
    paths. The thresholdness legs use the total-domination reading of the
    degenerate constant-1 case (graphs with isolated vertices), matching the
    recognizer's isolated-vertex short circuit."""
    legs: list[Optional[bool]] = []

    def run(compute) -> None:
        try:
            legs.append(compute())
        except CapabilityError:
            legs.append(None)

    f = neighborhood_dnf(G)
    rn = reduced_neighborhood_hypergraph(G)
    run(lambda: recognize_td(G, want_witness=False).verdict)
    run(lambda: threshold_in_td_sense(make_dnf(G.n, [G.adj[v] for v in range(G.n)])))
    run(lambda: threshold_in_td_sense(PositiveDNF(f.n, f.implicants)))
    run(lambda: threshold_in_td_sense(dnf_of_hypergraph(Hypergraph(f.n, f.implicants))))
    run(lambda: threshold_in_td_sense(dnf_of_hypergraph(rn)))
    run(lambda: recognize_td(split_incidence_graph(rn)[0], want_witness=False).verdict)
    run(lambda: recognize_td(neighborhood_split_graph(G), want_witness=False).verdict)
    return EquivalenceReport(tuple(legs))


def hypergraph_threshold_via_graph(H: Hypergraph, dual_cap: int = DEFAULT_DUAL_CAP) -> bool:
    """Thresholdness of a hypergraph decided through its split-incidence
    graph being total domishold."""
    report = recognize_td(split_incidence_graph(H)[0], want_witness=False)
    if report.verdict is None:
        raise CapabilityError(report.note)
    return report.verdict
