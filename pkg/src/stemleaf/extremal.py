"""Builders for the two sharpness families and checks of their closed forms.

``G(t, k, m)``: a clique on hubs ``u_1..u_{k+1}``; ``k(t-2)+1`` cliques
``D_j = K_m``; hub ``u_i`` (``i <= k``) is joined to ``D_{(i-1)(t-2)+1} ..
D_{i(t-2)}``, hub ``u_{k+1}`` to the last clique, and each ``D_j`` gets a
private vertex ``v_j`` joined to all of it. Here ``l = k(t-2)``.

``H(t, m)``: ``t-1`` cliques ``D_i = K_m``, a private ``v_i`` per clique and
one vertex ``w`` joined to every clique. Here ``l = t-2``.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import combinations
from typing import Union

from .graph import Graph, find_induced_star, is_connected
from .invariants import INF, hypothesis_rhs, sigma_with_witness


@dataclass(frozen=True)
class ExtremalParamsG:
    t: int
    k: int
    m: int

    def __post_init__(self):
        if self.t < 3 or self.k < 1 or self.m < 1:
            raise ValueError(f"invalid G parameters {self}")

    @property
    def l(self) -> int:
        return self.k * (self.t - 2)

    @property
    def order(self) -> int:
        return self.k + 1 + (self.k * (self.t - 2) + 1) * (self.m + 1)


@dataclass(frozen=True)
class ExtremalParamsH:
    t: int
    m: int

    def __post_init__(self):
        if self.t < 3 or self.m < 1:
            raise ValueError(f"invalid H parameters {self}")

    @property
    def l(self) -> int:
        return self.t - 2

    @property
    def order(self) -> int:
        return 1 + (self.l + 1) * (self.m + 1)


@dataclass
class Labeled:
    graph: Graph
    labeling: dict = field(default_factory=dict)


def build_g(p: ExtremalParamsG) -> Labeled:
    t, k, m = p.t, p.k, p.m
    hubs = list(range(k + 1))
    edges = list(combinations(hubs, 2))
    cliques: list[list[int]] = []
    privates: list[int] = []
    nxt = k + 1
    for j in range(k * (t - 2) + 1):
        block = list(range(nxt, nxt + m))
        v = nxt + m
        nxt += m + 1
        cliques.append(block)
        privates.append(v)
        edges.extend(combinations(block, 2))
        edges.extend((v, d) for d in block)
        hub = hubs[j // (t - 2)] if j < k * (t - 2) else hubs[k]
        edges.extend((hub, d) for d in block)
    g = Graph(nxt, edges)
    labeling = {"family": "G", "t": t, "k": k, "m": m, "l": p.l,
                "u": hubs, "v": privates, "D": cliques}
    return Labeled(g, labeling)


def build_h(p: ExtremalParamsH) -> Labeled:
    t, m = p.t, p.m
    w = 0
    edges = []
    cliques: list[list[int]] = []
    privates: list[int] = []
    nxt = 1
    for _ in range(p.l + 1):
        block = list(range(nxt, nxt + m))
        v = nxt + m
        nxt += m + 1
        cliques.append(block)
        privates.append(v)
        edges.extend(combinations(block, 2))
        edges.extend((v, d) for d in block)
        edges.extend((w, d) for d in block)
    g = Graph(nxt, edges)
    labeling = {"family": "H", "t": t, "m": m, "l": p.l, "w": w,
                "v": privates, "D": cliques}
    return Labeled(g, labeling)


@dataclass
class IdentityReport:
    params: dict
    n: int
    sigma4: int
    rhs: int
    checks: dict[str, bool]
    k_below_two: bool = False

    @property
    def ok(self) -> bool:
        return all(self.checks.values())

    @property
    def failed(self) -> list[str]:
        return [name for name, good in self.checks.items() if not good]

    def to_dict(self) -> dict:
        return {"params": self.params, "n": self.n, "sigma4": self.sigma4,
                "rhs": self.rhs, "checks": self.checks, "ok": self.ok,
                "k_below_two": self.k_below_two}


def check_identities(p: Union[ExtremalParamsG, ExtremalParamsH]) -> IdentityReport:
    """Build the family member and compare computed values with closed forms."""
    if isinstance(p, ExtremalParamsG):
        built = build_g(p)
        target = (p.k * (p.t - 2) + 1) * p.m
        offset = 2
        formula_n = p.order
    else:
        built = build_h(p)
        target = (p.l + 1) * p.m
        offset = 1
        formula_n = p.order
    g = built.graph
    l = p.l
    privates = built.labeling["v"]
    sigma, _ = sigma_with_witness(g, 4, l + 1)
    floor_term = (l * (p.t - 1)) // (p.t - 2)
    d = g.distances().dist
    privates_spread = all(d[a][b] >= 4 for a, b in combinations(privates, 2))
    checks = {
        "order": g.n == formula_n,
        "sigma_finite": sigma is not INF,
        "sigma_closed_form": sigma == target,
        f"sigma_equals_n_minus_floor_minus_{offset}": sigma == g.n - floor_term - offset,
        "attained_at_private_vertices": privates_spread
        and len(privates) == l + 1
        and sum(g.degree(v) for v in privates) == sigma,
        "k1t_free": find_induced_star(g, p.t) is None,
        "connected": is_connected(g),
    }
    return IdentityReport(
        params={k: v for k, v in built.labeling.items() if k in ("family", "t", "k", "m", "l")},
        n=g.n,
        sigma4=sigma if sigma is not INF else -1,
        rhs=hypothesis_rhs(g.n, p.t, l),
        checks=checks,
        k_below_two=isinstance(p, ExtremalParamsG) and p.k < 2,
    )
