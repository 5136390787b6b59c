"""Positive Boolean functions as prime-implicant antichains, summability
oracles, and threshold recognition producing integral separating structures.

Recognition follows the dualization + linear programming route: the prime
implicants bound the true side, the maximal false points (complements of the
dual's prime implicants) bound the false side, and an exact rational LP
decides feasibility of integral weights.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from itertools import combinations_with_replacement, product
from math import comb, lcm
from typing import Iterable, Optional, Sequence

from .errors import CapabilityError
from .hypergraphs import DEFAULT_DUAL_CAP, Hypergraph, _minimal_sets, minimal_transversals
from .lp import lp_feasible

SUMMABILITY_WORK_CAP = 5_000_000
WITNESS_VAR_BOUND = 10  # search 2-summability witnesses up to this many variables


@dataclass(frozen=True)
class PositiveDNF:
    """A positive Boolean function given by the antichain of its prime
    implicants (variable-index sets). Constant 0 has no implicants; constant
    1 has the single empty implicant.
    """

    n: int
    implicants: tuple[frozenset[int], ...]

    def __post_init__(self):
        canon = tuple(sorted((frozenset(t) for t in self.implicants), key=lambda t: tuple(sorted(t))))
        if len(set(canon)) != len(canon):
            raise ValueError("duplicate implicants")
        for t in canon:
            for v in t:
                if not 0 <= v < self.n:
                    raise ValueError(f"implicant variable {v} out of range for n={self.n}")
            if any(s != t and s <= t for s in canon):
                raise ValueError("implicants must form an antichain")
        object.__setattr__(self, "implicants", canon)

    def is_constant_zero(self) -> bool:
        return not self.implicants

    def is_constant_one(self) -> bool:
        return any(not t for t in self.implicants)


def make_dnf(n: int, terms: Iterable[Iterable[int]]) -> PositiveDNF:
    """Minimize arbitrary positive DNF terms to the complete (prime
    implicant) DNF of the function they define.
    """
    return PositiveDNF(n, _minimal_sets(tuple(frozenset(t) for t in terms)))


def dnf_of_hypergraph(H: Hypergraph) -> PositiveDNF:
    """The positive function whose true points are the supports containing
    some edge of H."""
    return make_dnf(H.n, H.edges)


def evaluate(f: PositiveDNF, x: Sequence[int]) -> int:
    """1 iff the support of the bit vector contains some implicant."""
    if len(x) != f.n:
        raise ValueError(f"expected {f.n} bits, got {len(x)}")
    support = {i for i, b in enumerate(x) if b}
    return 1 if any(t <= support for t in f.implicants) else 0


def dual(f: PositiveDNF, cap: int = DEFAULT_DUAL_CAP) -> PositiveDNF:
    """Prime implicants of x -> not f(complement of x): the minimal
    transversals of the implicant family."""
    return PositiveDNF(f.n, minimal_transversals(Hypergraph(f.n, f.implicants), cap))


def maximal_false_points(f: PositiveDNF, cap: int = DEFAULT_DUAL_CAP) -> tuple[frozenset[int], ...]:
    """Supports of the inclusion-maximal false points, as complements of the
    dual prime implicants."""
    if f.is_constant_one():
        raise ValueError("the constant-1 function has no false points")
    full = frozenset(range(f.n))
    return tuple(
        sorted((full - t for t in dual(f, cap).implicants), key=lambda s: tuple(sorted(s)))
    )


# ---------------------------------------------------------------------------
# Separating structures


@dataclass(frozen=True)
class SeparatingStructure:
    """Non-negative integer weights and threshold with f(x)=0 iff the weight
    of the support is at most t (true points reach at least t+1)."""

    weights: tuple[int, ...]
    t: int


def verify_separating_structure(
    f: PositiveDNF, s: SeparatingStructure, max_n: int = 16
) -> bool:
    """Exhaustively check the separating property over all 2^n points."""
    if f.n > max_n:
        raise CapabilityError(f"exhaustive verification capped at {max_n} variables")
    if len(s.weights) != f.n or s.t < 0 or any(w < 0 for w in s.weights):
        return False
    imp_masks = [sum(1 << v for v in t) for t in f.implicants]
    totals = [0] * (1 << f.n)
    for mask in range(1, 1 << f.n):
        low = mask & -mask
        totals[mask] = totals[mask ^ low] + s.weights[low.bit_length() - 1]
    for mask in range(1 << f.n):
        truth = any(im & mask == im for im in imp_masks)
        if (totals[mask] <= s.t) != (not truth):
            return False
    return True


@dataclass(frozen=True)
class SummabilityWitness:
    """r false points and r true points (2 <= r) with equal componentwise
    sums; certifies that the function is not threshold."""

    false_points: tuple[tuple[int, ...], ...]
    true_points: tuple[tuple[int, ...], ...]


def verify_summability_witness(f: PositiveDNF, w: SummabilityWitness) -> bool:
    r = len(w.false_points)
    if r < 2 or len(w.true_points) != r:
        return False
    if any(len(p) != f.n for p in w.false_points + w.true_points):
        return False
    if any(evaluate(f, p) != 0 for p in w.false_points):
        return False
    if any(evaluate(f, p) != 1 for p in w.true_points):
        return False
    sums_false = [sum(p[i] for p in w.false_points) for i in range(f.n)]
    sums_true = [sum(p[i] for p in w.true_points) for i in range(f.n)]
    return sums_false == sums_true


def is_k_summable(
    f: PositiveDNF, k: int, work_cap: int = SUMMABILITY_WORK_CAP
) -> Optional[SummabilityWitness]:
    """Exhaustive search for r-tuples (2 <= r <= k) of false and true points
    with equal componentwise sums; None if f is k-asummable.

    Intended for small functions; the work estimate is capped.
    """
    if k < 2:
        raise ValueError("k must be at least 2")
    if (1 << f.n) > work_cap:
        raise CapabilityError("too many points to enumerate")
    falses: list[tuple[int, ...]] = []
    trues: list[tuple[int, ...]] = []
    for x in product((0, 1), repeat=f.n):
        (trues if evaluate(f, x) else falses).append(x)
    for r in range(2, k + 1):
        if not falses or not trues:
            return None
        work = comb(len(falses) + r - 1, r) + comb(len(trues) + r - 1, r)
        if work > work_cap:
            raise CapabilityError(f"r={r} summability search exceeds work cap")
        sums: dict[tuple[int, ...], tuple[tuple[int, ...], ...]] = {}
        for group in combinations_with_replacement(falses, r):
            key = tuple(sum(p[i] for p in group) for i in range(f.n))
            sums.setdefault(key, group)
        for group in combinations_with_replacement(trues, r):
            key = tuple(sum(p[i] for p in group) for i in range(f.n))
            hit = sums.get(key)
            if hit is not None:
                return SummabilityWitness(hit, group)
    return None


# ---------------------------------------------------------------------------
# Threshold recognition


@dataclass(frozen=True)
class ThresholdReport:
    """Outcome of threshold recognition: a verifying structure on yes, an LP
    infeasibility verdict (plus a summability witness when the oracle finds
    one) on no."""

    is_threshold: bool
    structure: Optional[SeparatingStructure]
    witness: Optional[SummabilityWitness]
    reason: str


@lru_cache(maxsize=None)
def _lp_structure(
    n: int, implicants: tuple[frozenset[int], ...], cap: int
) -> Optional[SeparatingStructure]:
    """Solve the separating-structure LP for a non-constant antichain."""
    false_pts = maximal_false_points(PositiveDNF(n, implicants), cap)
    constraints = []
    for p in implicants:
        coeffs = [1 if i in p else 0 for i in range(n)] + [-1]
        constraints.append((coeffs, ">=", 1))
    for fp in false_pts:
        coeffs = [1 if i in fp else 0 for i in range(n)] + [-1]
        constraints.append((coeffs, "<=", 0))
    point = lp_feasible(n + 1, constraints, nonneg=True)
    if point is None:
        return None
    scale = lcm(*(v.denominator for v in point))
    ints = [int(v * scale) for v in point]
    return SeparatingStructure(tuple(ints[:n]), ints[n])


@lru_cache(maxsize=None)
def _two_summability_witness(
    n: int, implicants: tuple[frozenset[int], ...]
) -> Optional[SummabilityWitness]:
    if n > WITNESS_VAR_BOUND:
        return None
    try:
        return is_k_summable(PositiveDNF(n, implicants), 2)
    except CapabilityError:
        return None


def is_threshold(
    f: PositiveDNF,
    dual_cap: int = DEFAULT_DUAL_CAP,
    want_witness: bool = True,
) -> ThresholdReport:
    """Decide thresholdness of a positive function given by its complete DNF.

    Feasibility of non-negative weights w and threshold t with every prime
    implicant weighing at least t+1 and every maximal false point at most t
    is decided by exact LP; a feasible rational point is scaled to an
    integral separating structure. Constant 0 is threshold with the all-zero
    structure. Constant 1 admits no structure with a non-negative threshold
    (the zero point would have to be false) and is reported as a special
    non-threshold verdict without running the LP.

    Raises CapabilityError when the dualization cap is exceeded; no verdict
    is guessed in that case.
    """
    if f.is_constant_one():
        return ThresholdReport(False, None, None, "constant-one")
    if f.is_constant_zero():
        structure = SeparatingStructure((0,) * f.n, 0)
        return ThresholdReport(True, structure, None, "separating-structure")
    structure = _lp_structure(f.n, f.implicants, dual_cap)
    if structure is not None:
        return ThresholdReport(True, structure, None, "separating-structure")
    witness = _two_summability_witness(f.n, f.implicants) if want_witness else None
    return ThresholdReport(False, None, witness, "lp-infeasible")


def threshold_in_td_sense(f: PositiveDNF, dual_cap: int = DEFAULT_DUAL_CAP) -> bool:
    """Thresholdness with the total-domination reading of the degenerate
    constant-1 case.

    The constant-1 function arises exactly from neighborhood functions of
    graphs with isolated vertices; such graphs are total domishold and the
    reduction passes through the dual function (constant 0), which is
    threshold. This wrapper therefore counts constant 1 as threshold.
    """
    if f.is_constant_one():
        return True
    return is_threshold(f, dual_cap, want_witness=False).is_threshold
