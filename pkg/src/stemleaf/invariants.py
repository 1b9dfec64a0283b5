"""Distance-constrained independence numbers and degree sums.

``alpha_m(g, m)`` is the largest vertex set with all pairwise distances at
least ``m``; ``sigma_m_p(g, m, p)`` the smallest degree sum over such sets of
size exactly ``p`` (``INF`` when none exists). Both are solved exactly as
independent-set problems on the power graph joining vertices at distance at
most ``m - 1``, using bitmask branch and bound.
"""

from __future__ import annotations

from dataclasses import asdict, dataclass
from typing import Iterator, Union

from .graph import Graph, find_induced_star, is_connected

DEFAULT_WORK_LIMIT = 50_000_000


class WorkLimitExceeded(RuntimeError):
    """The configured node budget ran out before the search finished."""


class _Infinity:
    _instance = None

    def __new__(cls):
        if cls._instance is None:
            cls._instance = super().__new__(cls)
        return cls._instance

    def __repr__(self) -> str:
        return "INF"

    def __reduce__(self):
        return (_Infinity, ())


INF = _Infinity()
SigmaValue = Union[int, _Infinity]


def sigma_at_least(value: SigmaValue, bound: int) -> bool:
    return value is INF or value >= bound


def sigma_json(value: SigmaValue) -> Union[int, str]:
    return "+inf" if value is INF else value


def _power_masks(g: Graph, m: int) -> list[int]:
    """Bitmask of vertices within distance ``m - 1`` (self excluded)."""
    if m < 2:
        raise ValueError("distance threshold m must be at least 2")
    dm = g.distances()
    far = dm.unreachable
    masks = []
    for u in range(g.n):
        row = dm.dist[u]
        mask = 0
        for v in range(g.n):
            # the sentinel is only n, which may be below m
            if v != u and row[v] < m and row[v] != far:
                mask |= 1 << v
        masks.append(mask)
    return masks


def _bits(mask: int) -> Iterator[int]:
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


class _Budget:
    __slots__ = ("left",)

    def __init__(self, limit: int):
        self.left = limit

    def tick(self) -> None:
        self.left -= 1
        if self.left < 0:
            raise WorkLimitExceeded("invariant search exceeded its work limit")


def _clique_cover_bound(cand: int, masks: list[int]) -> int:
    """Greedy clique partition size; bounds the independence number of ``cand``."""
    cliques = 0
    rest = cand
    while rest:
        low = rest & -rest
        v = low.bit_length() - 1
        clique = low
        common = masks[v] & rest
        while common:
            w_low = common & -common
            w = w_low.bit_length() - 1
            clique |= w_low
            common &= masks[w]
        rest &= ~clique
        cliques += 1
    return cliques


def _mis_size(masks: list[int], cand: int, budget: _Budget) -> int:
    best = 0

    def rec(cand: int, size: int) -> None:
        nonlocal best
        budget.tick()
        # vertices with at most one neighbour left can always be taken
        while cand:
            picked = False
            for v in _bits(cand):
                nb = masks[v] & cand
                if nb & (nb - 1) == 0:
                    cand &= ~(nb | (1 << v))
                    size += 1
                    picked = True
                    break
            if not picked:
                break
        if not cand:
            best = max(best, size)
            return
        if size + _clique_cover_bound(cand, masks) <= best:
            return
        v = max(_bits(cand), key=lambda x: (masks[x] & cand).bit_count())
        rec(cand & ~(masks[v] | (1 << v)), size + 1)
        rec(cand & ~(1 << v), size)

    rec(cand, 0)
    return best


def alpha_m(g: Graph, m: int, work_limit: int = DEFAULT_WORK_LIMIT) -> int:
    if g.n == 0:
        return 0
    masks = _power_masks(g, m)
    return _mis_size(masks, (1 << g.n) - 1, _Budget(work_limit))


def _min_weight_subset(
    masks: list[int], weights: list[int], p: int, budget: _Budget
) -> tuple[SigmaValue, tuple[int, ...]]:
    n = len(weights)
    # relabel so that bit i is the i-th lightest vertex
    order = sorted(range(n), key=lambda v: (weights[v], v))
    pos = {v: i for i, v in enumerate(order)}
    w = [weights[v] for v in order]
    conflict = [0] * n
    for v in range(n):
        m = 0
        for u in _bits(masks[v]):
            m |= 1 << pos[u]
        conflict[pos[v]] = m

    best: SigmaValue = INF
    best_set: tuple[int, ...] = ()
    chosen: list[int] = []

    def lower_bound(cand: int, need: int) -> int:
        total = 0
        for i in _bits(cand):
            total += w[i]
            need -= 1
            if need == 0:
                return total
        return -1

    def rec(cand: int, need: int, acc: int) -> None:
        nonlocal best, best_set
        budget.tick()
        if need == 0:
            if best is INF or acc < best:
                best = acc
                best_set = tuple(sorted(order[i] for i in chosen))
            return
        lb = lower_bound(cand, need)
        if lb < 0 or (best is not INF and acc + lb >= best):
            return
        if need >= 2 and _clique_cover_bound(cand, conflict) < need:
            return
        rest = cand
        while rest:
            low = rest & -rest
            i = low.bit_length() - 1
            rest ^= low
            if best is not INF:
                lb = lower_bound(rest | low, need)
                if lb < 0 or acc + lb >= best:
                    return
            chosen.append(i)
            rec(rest & ~conflict[i], need - 1, acc + w[i])
            chosen.pop()

    rec((1 << n) - 1, p, 0)
    return best, best_set


def sigma_m_p(g: Graph, m: int, p: int, work_limit: int = DEFAULT_WORK_LIMIT) -> SigmaValue:
    return sigma_with_witness(g, m, p, work_limit)[0]


def sigma_with_witness(
    g: Graph, m: int, p: int, work_limit: int = DEFAULT_WORK_LIMIT
) -> tuple[SigmaValue, tuple[int, ...]]:
    """Minimum degree sum and a lexicographically arbitrary optimal set."""
    if p < 1:
        raise ValueError("p must be positive")
    masks = _power_masks(g, m)
    return _min_weight_subset(masks, g.degrees(), p, _Budget(work_limit))


@dataclass(frozen=True)
class DistanceSet:
    vertices: tuple[int, ...]
    m: int
    degree_sum: int


def enumerate_distance_sets(g: Graph, m: int, p: int) -> Iterator[DistanceSet]:
    """All size-``p`` sets with pairwise distance >= ``m``, lexicographically."""
    if p < 1:
        raise ValueError("p must be positive")
    dm = g.distances()
    d, far = dm.dist, dm.unreachable
    deg = g.degrees()
    chosen: list[int] = []

    def rec(start: int) -> Iterator[DistanceSet]:
        if len(chosen) == p:
            yield DistanceSet(tuple(chosen), m, sum(deg[v] for v in chosen))
            return
        for v in range(start, g.n - (p - len(chosen)) + 1):
            if all(d[c][v] >= m or d[c][v] == far for c in chosen):
                chosen.append(v)
                yield from rec(v + 1)
                chosen.pop()

    yield from rec(0)


def hypothesis_rhs(n: int, t: int, l: int) -> int:
    """Right-hand side ``n - floor(l(t-1)/(t-2)) - 1`` of the degree-sum condition."""
    if t < 3:
        raise ValueError("t must be at least 3")
    return n - (l * (t - 1)) // (t - 2) - 1


@dataclass(frozen=True)
class ConditionReport:
    t: int
    l: int
    n: int
    sigma4: SigmaValue
    alpha4: int
    rhs: int
    hypothesis_holds: bool
    l_equals_t_minus_2: bool
    k1t_free: bool
    connected: bool

    def to_dict(self) -> dict:
        out = asdict(self)
        out["sigma4"] = sigma_json(self.sigma4)
        return out


def evaluate_condition(
    g: Graph, t: int, l: int, work_limit: int = DEFAULT_WORK_LIMIT
) -> ConditionReport:
    if t < 3:
        raise ValueError("t must be at least 3")
    if l < 1:
        raise ValueError("l must be at least 1")
    sigma = sigma_m_p(g, 4, l + 1, work_limit)
    rhs = hypothesis_rhs(g.n, t, l)
    return ConditionReport(
        t=t,
        l=l,
        n=g.n,
        sigma4=sigma,
        alpha4=alpha_m(g, 4, work_limit),
        rhs=rhs,
        hypothesis_holds=sigma_at_least(sigma, rhs),
        l_equals_t_minus_2=(l == t - 2),
        k1t_free=find_induced_star(g, t) is None,
        connected=is_connected(g),
    )
