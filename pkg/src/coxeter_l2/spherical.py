"""Finite-type recognition for Coxeter subsystems.

A vertex subset is spherical when the subgroup it generates is finite.
Finiteness is decided exactly by matching each connected component of the
Coxeter diagram (edges are pairs with label >= 3 or infinity; label-2
pairs commute and disconnect the diagram) against the classification of
irreducible finite reflection groups.  A floating-point positive
definiteness test on the cosine matrix serves as an independent numeric
cross-check, never as the decision procedure.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from functools import lru_cache

import numpy as np

from coxeter_l2.model import INFINITY, CoxeterSpec, VertexSubset

_E_ORDERS = {6: 51840, 7: 2903040, 8: 696729600}


@dataclass(frozen=True)
class FiniteTypeComponent:
    """One irreducible factor of a finite subsystem.

    kind is one of "A", "B", "D", "E6", "E7", "E8", "F4", "H3", "H4",
    "I2"; low-rank coincidences are reported under the canonical name
    (I2(3) as A2, I2(4) as B2, H2 as I2(5)).
    """

    kind: str
    rank: int
    order: int
    vertices: VertexSubset
    m: int | None = None  # dihedral edge label, only for kind "I2"

    @property
    def name(self) -> str:
        if self.kind == "I2":
            return f"I2({self.m})"
        if self.kind in ("A", "B", "D"):
            return f"{self.kind}{self.rank}"
        return self.kind  # E6/E7/E8/F4/H3/H4 carry their rank already


@dataclass(frozen=True)
class SphericalVerdict:
    spherical: bool
    components: tuple[FiniteTypeComponent, ...]
    order: int  # product of component orders; 1 for the empty subset

    def __bool__(self) -> bool:
        return self.spherical


class IndeterminateNumeric(ArithmeticError):
    """A principal minor fell within tolerance of zero; fall back to classify."""


def diagram_components(spec: CoxeterSpec, subset) -> list[VertexSubset]:
    """Partition a subset into Coxeter-diagram components.

    Two vertices are diagram-adjacent when their label is >= 3 or infinity
    (label 2 means the generators commute).  Components are canonically
    ordered and sorted by least vertex.
    """
    T = spec.check_subset(subset)
    remaining = set(T)
    components = []
    while remaining:
        start = min(remaining)
        comp = {start}
        frontier = [start]
        while frontier:
            u = frontier.pop()
            for v in list(remaining - comp):
                if spec.label(u, v) != 2:
                    comp.add(v)
                    frontier.append(v)
        remaining -= comp
        components.append(tuple(sorted(comp)))
    components.sort(key=lambda c: c[0])
    return components


def _factorial(n: int) -> int:
    return math.factorial(n)


def _match_component(spec: CoxeterSpec, comp: VertexSubset) -> FiniteTypeComponent | None:
    """Match one diagram-connected component against the finite-type templates."""
    n = len(comp)
    pairs = [(u, v) for i, u in enumerate(comp) for v in comp[i + 1:]]
    if any(spec.label(u, v) == INFINITY for u, v in pairs):
        return None
    if n == 1:
        return FiniteTypeComponent("A", 1, 2, comp)
    if n == 2:
        m = int(spec.label(*comp))
        if m == 3:
            return FiniteTypeComponent("A", 2, 6, comp)
        if m == 4:
            return FiniteTypeComponent("B", 2, 8, comp)
        return FiniteTypeComponent("I2", 2, 2 * m, comp, m=m)

    # Rank >= 3: the diagram (label >= 3 edges) must be a tree, in fact a
    # path or a single 3-valent branch; anything else is infinite.
    edges = [(u, v, int(spec.label(u, v))) for u, v in pairs if spec.label(u, v) >= 3]
    if len(edges) != n - 1:
        return None  # connected with a cycle, or (impossible here) disconnected
    adj: dict[str, list[tuple[str, int]]] = {v: [] for v in comp}
    for u, v, m in edges:
        adj[u].append((v, m))
        adj[v].append((u, m))
    degrees = {v: len(nb) for v, nb in adj.items()}
    if max(degrees.values()) > 3 or sum(1 for d in degrees.values() if d == 3) > 1:
        return None

    branch = [v for v, d in degrees.items() if d == 3]
    if branch:
        if any(m != 3 for _, _, m in edges):
            return None
        # Arm lengths from the branch vertex determine D vs E.
        b = branch[0]
        arms = []
        for first, _ in adj[b]:
            length, prev, cur = 1, b, first
            while degrees[cur] == 2:
                nxt = [w for w, _ in adj[cur] if w != prev][0]
                prev, cur = cur, nxt
                length += 1
            arms.append(length)
        arms.sort()
        if arms[:2] == [1, 1]:
            return FiniteTypeComponent("D", n, 2 ** (n - 1) * _factorial(n), comp)
        if arms == [1, 2, 2]:
            return FiniteTypeComponent("E6", 6, _E_ORDERS[6], comp)
        if arms == [1, 2, 3]:
            return FiniteTypeComponent("E7", 7, _E_ORDERS[7], comp)
        if arms == [1, 2, 4]:
            return FiniteTypeComponent("E8", 8, _E_ORDERS[8], comp)
        return None

    # A path: read its label sequence from one endpoint.
    ends = [v for v, d in degrees.items() if d == 1]
    start = min(ends)
    seq, prev, cur = [], None, start
    while True:
        nxt = [(w, m) for w, m in adj[cur] if w != prev]
        if not nxt:
            break
        (w, m) = nxt[0]
        seq.append(m)
        prev, cur = cur, w
    big = [m for m in seq if m >= 4]
    if not big:
        return FiniteTypeComponent("A", n, _factorial(n + 1), comp)
    if len(big) > 1:
        return None
    m, pos = big[0], seq.index(big[0])
    at_end = pos in (0, len(seq) - 1)
    if m == 4:
        if at_end:
            return FiniteTypeComponent("B", n, 2 ** n * _factorial(n), comp)
        if n == 4 and pos == 1:
            return FiniteTypeComponent("F4", 4, 1152, comp)
        return None
    if m == 5 and at_end:
        if n == 3:
            return FiniteTypeComponent("H3", 3, 120, comp)
        if n == 4:
            return FiniteTypeComponent("H4", 4, 14400, comp)
    return None


@lru_cache(maxsize=65536)
def _classify_cached(spec: CoxeterSpec, T: VertexSubset) -> SphericalVerdict:
    comps = []
    order = 1
    for comp in diagram_components(spec, T):
        match = _match_component(spec, comp)
        if match is None:
            return SphericalVerdict(False, (), 0)
        comps.append(match)
        order *= match.order
    return SphericalVerdict(True, tuple(comps), order)


def classify(spec: CoxeterSpec, subset) -> SphericalVerdict:
    """Decide whether a subset is spherical and compute the subgroup order.

    The empty subset is spherical with order 1.  A non-spherical verdict
    carries no components and order 0.
    """
    return _classify_cached(spec, spec.check_subset(subset))


def cosine_matrix_test(spec: CoxeterSpec, subset, *, eps: float = 1e-9, max_rank: int = 12) -> bool:
    """Numeric finiteness check: is the cosine matrix positive definite?

    Entries are c_ss = 1 and c_st = -cos(pi/m_st), with infinite labels
    contributing -1.  True iff every leading principal minor exceeds eps;
    raises IndeterminateNumeric when a minor lands within +/-eps of zero,
    in which case the caller should fall back to classify.
    """
    T = spec.check_subset(subset)
    n = len(T)
    if n > max_rank:
        raise ValueError(f"subset rank {n} exceeds the numeric bound {max_rank}")
    if n == 0:
        return True
    C = np.ones((n, n))
    for i, u in enumerate(T):
        for j, v in enumerate(T):
            if i == j:
                continue
            m = spec.label(u, v)
            C[i, j] = -1.0 if m == INFINITY else -math.cos(math.pi / m)
    for k in range(1, n + 1):
        minor = float(np.linalg.det(C[:k, :k]))
        if abs(minor) <= eps:
            raise IndeterminateNumeric(
                f"leading {k}x{k} minor {minor:.3e} within {eps} of zero"
            )
        if minor < 0:
            return False
    return True


def spherical_by_cosine(spec: CoxeterSpec, subset) -> bool:
    """Cosine test with indeterminate cases adjudicated exactly.

    An infinite label forces non-sphericity outright (infinite dihedral
    subgroup); any other indeterminate minor is resolved by classify.
    """
    T = spec.check_subset(subset)
    try:
        return cosine_matrix_test(spec, T)
    except IndeterminateNumeric:
        if any(spec.label(u, v) == INFINITY for i, u in enumerate(T) for v in T[i + 1:]):
            return False
        return classify(spec, T).spherical
