"""Nerve construction and the subcomplex calculus.

The nerve of a Coxeter system is the abstract simplicial complex on the
vertex set whose simplices are exactly the nonempty spherical subsets; it
is metric flag by construction.  The piecewise-spherical metric is kept
only as edge labels, never as geometry.  This module also provides full
subcomplexes, vertex links, right-angled joins and cones, combinatorial
sphere recognition, and detection of right-angled join factorizations.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass, field
from typing import Iterable

from coxeter_l2.model import INFINITY, CoxeterSpec, VertexSubset, induced_subspec
from coxeter_l2.spherical import classify

Simplex = tuple[str, ...]


class CapExceeded(RuntimeError):
    """Enumeration grew past its configured cap."""


class SimplicialComplex:
    """Abstract simplicial complex: a vertex tuple plus simplices by dimension.

    Simplices are stored as sorted vertex tuples, listed in canonical
    (dimension, lexicographic) order so iteration is deterministic.
    """

    def __init__(self, vertices: Iterable[str], simplices: Iterable[Simplex]):
        self.vertices: tuple[str, ...] = tuple(vertices)
        index: dict[int, list[Simplex]] = {}
        seen: set[Simplex] = set()
        for s in simplices:
            s = tuple(sorted(s))
            if not s or s in seen:
                continue
            seen.add(s)
            index.setdefault(len(s) - 1, []).append(s)
        self._by_dim: dict[int, tuple[Simplex, ...]] = {
            d: tuple(sorted(index[d])) for d in sorted(index)
        }
        self._simplex_set = seen

    @property
    def dimension(self) -> int:
        """Max simplex dimension; -1 for the empty complex."""
        return max(self._by_dim) if self._by_dim else -1

    def simplices(self, dim: int | None = None) -> tuple[Simplex, ...]:
        if dim is not None:
            return self._by_dim.get(dim, ())
        out = []
        for d in sorted(self._by_dim):
            out.extend(self._by_dim[d])
        return tuple(out)

    def has_simplex(self, s: Iterable[str]) -> bool:
        return tuple(sorted(s)) in self._simplex_set

    @property
    def edges(self) -> tuple[Simplex, ...]:
        return self._by_dim.get(1, ())

    @property
    def triangles(self) -> tuple[Simplex, ...]:
        return self._by_dim.get(2, ())

    def neighbors(self, v: str) -> tuple[str, ...]:
        out = set()
        for a, b in self.edges:
            if a == v:
                out.add(b)
            elif b == v:
                out.add(a)
        return tuple(sorted(out))

    def is_connected(self) -> bool:
        """Connectivity of the 1-skeleton (a complex with one vertex is connected)."""
        if not self.vertices:
            return True
        seen = {self.vertices[0]}
        frontier = [self.vertices[0]]
        while frontier:
            u = frontier.pop()
            for w in self.neighbors(u):
                if w not in seen:
                    seen.add(w)
                    frontier.append(w)
        return len(seen) == len(self.vertices)

    def skeleton_components(self) -> list[tuple[str, ...]]:
        remaining = set(self.vertices)
        comps = []
        while remaining:
            start = min(remaining)
            comp = {start}
            frontier = [start]
            while frontier:
                u = frontier.pop()
                for w in self.neighbors(u):
                    if w in remaining and w not in comp:
                        comp.add(w)
                        frontier.append(w)
            remaining -= comp
            comps.append(tuple(sorted(comp)))
        comps.sort(key=lambda c: c[0])
        return comps

    def counts(self) -> tuple[int, ...]:
        """Number of simplices per dimension 0..dim."""
        return tuple(len(self._by_dim.get(d, ())) for d in range(self.dimension + 1))

    def __eq__(self, other) -> bool:
        if not isinstance(other, SimplicialComplex):
            return NotImplemented
        return self.vertices == other.vertices and self._simplex_set == other._simplex_set

    def __hash__(self) -> int:
        return hash((self.vertices, frozenset(self._simplex_set)))

    def __repr__(self) -> str:
        return f"{type(self).__name__}(V={len(self.vertices)}, counts={self.counts()})"


class Nerve(SimplicialComplex):
    """The nerve of a Coxeter system, with subgroup orders per simplex."""

    def __init__(self, spec: CoxeterSpec, simplices: Iterable[Simplex], orders: dict[Simplex, int]):
        super().__init__(spec.vertices, simplices)
        self.spec = spec
        self._orders = dict(orders)

    def order(self, simplex: Iterable[str]) -> int:
        """|W_T| for a simplex T; the empty simplex has order 1."""
        s = tuple(sorted(simplex))
        if not s:
            return 1
        if s not in self._simplex_set:
            raise KeyError(f"{s} is not a simplex of this nerve")
        return self._orders[s]

    def label(self, u: str, v: str):
        return self.spec.label(u, v)

    def to_document(self) -> dict:
        return {
            "spec": self.spec.to_document(),
            "dimension": self.dimension,
            "simplices": {
                str(d): [list(s) for s in self.simplices(d)]
                for d in range(self.dimension + 1)
            },
        }

    def __eq__(self, other) -> bool:
        if not isinstance(other, Nerve):
            return NotImplemented
        return self.spec == other.spec and self._simplex_set == other._simplex_set

    def __hash__(self) -> int:
        return hash((self.spec, frozenset(self._simplex_set)))


@dataclass(frozen=True)
class SubcomplexWitness:
    """Record that a vertex set spans a full subcomplex of an ambient nerve."""

    ambient: Nerve
    vertex_set: VertexSubset
    full: bool
    right_angled_complement: bool
    notes: tuple[str, ...] = field(default_factory=tuple)


def build_nerve(spec: CoxeterSpec, *, simplex_cap: int = 10 ** 6) -> Nerve:
    """Enumerate all nonempty spherical subsets by incremental clique extension.

    Extension happens over the finite-label graph only, growing each
    spherical set by vertices above its maximum; since subsets of spherical
    sets are spherical, this pruning is exhaustive.  Raises CapExceeded
    past ``simplex_cap`` simplices.
    """
    simplices: list[Simplex] = []
    orders: dict[Simplex, int] = {}
    finite_adj: dict[str, set[str]] = {v: set() for v in spec.vertices}
    for u, v, _ in spec.finite_edges():
        finite_adj[u].add(v)
        finite_adj[v].add(u)

    def add(s: Simplex, order: int):
        simplices.append(s)
        orders[s] = order
        if len(simplices) > simplex_cap:
            raise CapExceeded(f"nerve exceeds {simplex_cap} simplices")

    frontier: list[Simplex] = []
    for v in sorted(spec.vertices):
        s = (v,)
        add(s, 2)
        frontier.append(s)
    while frontier:
        nxt: list[Simplex] = []
        for s in frontier:
            last = s[-1]
            candidates = set.intersection(*(finite_adj[v] for v in s)) if s else set()
            for w in sorted(candidates):
                if w <= last:
                    continue
                t = s + (w,)
                verdict = classify(spec, t)
                if verdict.spherical:
                    add(t, verdict.order)
                    nxt.append(t)
        frontier = nxt
    return Nerve(spec, simplices, orders)


def has_right_angled_complement(nerve: Nerve, subset) -> bool:
    """True iff every edge of the nerve not contained in the subset is labelled 2.

    Infinite pairs are not edges, so a straddling infinite pair does not
    disqualify; see infinite_pairs_outside for the flagged cases.
    """
    A = set(nerve.spec.check_subset(subset))
    return all(
        m == 2 or (u in A and v in A)
        for u, v, m in nerve.spec.finite_edges()
    )


def infinite_pairs_outside(nerve: Nerve, subset) -> list[tuple[str, str]]:
    """Infinite-label pairs with an endpoint outside the subset (reported, permitted)."""
    A = set(nerve.spec.check_subset(subset))
    out = []
    verts = sorted(nerve.vertices)
    for i, u in enumerate(verts):
        for v in verts[i + 1:]:
            if nerve.spec.label(u, v) == INFINITY and not (u in A and v in A):
                out.append((u, v))
    return out


def full_subcomplex(nerve: Nerve, subset) -> tuple[Nerve, SubcomplexWitness]:
    """The induced nerve on a vertex subset, with its fullness witness.

    Induced subcomplexes of a nerve are automatically full because
    sphericity depends only on the induced labels.
    """
    A = nerve.spec.check_subset(subset)
    sub = build_nerve(induced_subspec(nerve.spec, A))
    rac = has_right_angled_complement(nerve, A)
    notes = ()
    straddling = infinite_pairs_outside(nerve, A)
    if straddling:
        shown = ", ".join(f"({u},{v})" for u, v in straddling[:4])
        more = "" if len(straddling) <= 4 else f" and {len(straddling) - 4} more"
        notes = (
            f"{len(straddling)} infinite-label pair(s) not contained in the "
            f"subcomplex: {shown}{more} (permitted: infinite pairs are not edges)",
        )
    return sub, SubcomplexWitness(nerve, A, True, rac, notes)


def link(complex_: SimplicialComplex, v: str) -> SimplicialComplex:
    """The link of a vertex: all simplices T with v not in T and T + {v} a simplex."""
    if v not in complex_.vertices:
        raise KeyError(f"{v!r} is not a vertex")
    simplices = []
    for s in complex_.simplices():
        if v in s and len(s) > 1:
            simplices.append(tuple(x for x in s if x != v))
    return SimplicialComplex(sorted(complex_.neighbors(v)), simplices)


def is_full_subcomplex(ambient: SimplicialComplex, sub: SimplicialComplex) -> bool:
    """Does the subcomplex contain every ambient simplex spanned by its vertices?"""
    verts = set(sub.vertices)
    if not verts <= set(ambient.vertices):
        return False
    for s in sub.simplices():
        if not ambient.has_simplex(s):
            return False
    for s in ambient.simplices():
        if set(s) <= verts and not sub.has_simplex(s):
            return False
    return True


def _disjoint_rename(taken: set[str], name: str) -> str:
    while name in taken:
        name = name + "'"
    return name


def join_spec(s1: CoxeterSpec, s2: CoxeterSpec) -> CoxeterSpec:
    """Union of two systems with every cross pair labelled 2.

    Colliding vertex names in the second factor get a deterministic prime
    suffix.
    """
    taken = set(s1.vertices)
    rename: dict[str, str] = {}
    vertices = list(s1.vertices)
    for v in s2.vertices:
        nv = _disjoint_rename(taken, v)
        rename[v] = nv
        taken.add(nv)
        vertices.append(nv)
    labels: dict[tuple[str, str], int] = {}
    for u, v, m in s1.finite_edges():
        labels[(u, v)] = m
    for u, v, m in s2.finite_edges():
        labels[(rename[u], rename[v])] = m
    for u in s1.vertices:
        for v in s2.vertices:
            labels[(u, rename[v])] = 2
    return CoxeterSpec(vertices, labels)


def join2(n1: Nerve, n2: Nerve) -> Nerve:
    """Right-angled join: all cross pairs labelled 2.

    Simplices of the result are exactly the unions of a simplex-or-empty
    from each factor; this falls out of rebuilding the nerve since cross
    labels are 2.
    """
    return build_nerve(join_spec(n1.spec, n2.spec))


def cone2(n: Nerve, apex: str = "P") -> Nerve:
    """Right-angled cone: join with a single fresh vertex."""
    apex = _disjoint_rename(set(n.spec.vertices), apex)
    apex_spec = CoxeterSpec([apex], {})
    return build_nerve(join_spec(n.spec, apex_spec))


class SphereKind(enum.Enum):
    CIRCLE = "Circle"
    TWO_SPHERE = "TwoSphere"
    NEITHER = "Neither"


def recognize_sphere(complex_: SimplicialComplex) -> SphereKind:
    """Recognize combinatorial circles and 2-spheres.

    Circle: connected, pure 1-dimensional, every vertex of degree 2 (a
    single cycle).  TwoSphere: connected, pure 2-dimensional, every edge in
    exactly two triangles, every vertex link a circle, and V - E + F = 2.
    """
    dim = complex_.dimension
    if dim == 1:
        if not complex_.is_connected() or len(complex_.vertices) < 3:
            return SphereKind.NEITHER
        degs = [len(complex_.neighbors(v)) for v in complex_.vertices]
        if all(d == 2 for d in degs):
            return SphereKind.CIRCLE
        return SphereKind.NEITHER
    if dim == 2:
        if not complex_.is_connected():
            return SphereKind.NEITHER
        V = len(complex_.vertices)
        E = len(complex_.edges)
        F = len(complex_.triangles)
        if V - E + F != 2:
            return SphereKind.NEITHER
        per_edge: dict[Simplex, int] = {e: 0 for e in complex_.edges}
        for (a, b, c) in complex_.triangles:
            for e in ((a, b), (a, c), (b, c)):
                per_edge[e] = per_edge.get(e, 0) + 1
        if any(count != 2 for count in per_edge.values()):
            return SphereKind.NEITHER
        for v in complex_.vertices:
            if recognize_sphere(link(complex_, v)) is not SphereKind.CIRCLE:
                return SphereKind.NEITHER
        return SphereKind.TWO_SPHERE
    return SphereKind.NEITHER


def detect_join2(nerve: Nerve) -> list[VertexSubset] | None:
    """Finest right-angled join factorization, if the nerve decomposes.

    Factors are the connected components of the graph whose edges are the
    pairs labelled anything other than 2 (finite >= 3 or infinite).  Any
    grouping of two or more components is a valid join; the finest one is
    returned, sorted by least vertex.  None when indecomposable.
    """
    verts = sorted(nerve.vertices)
    if len(verts) < 2:
        return None
    remaining = set(verts)
    factors = []
    while remaining:
        start = min(remaining)
        comp = {start}
        frontier = [start]
        while frontier:
            u = frontier.pop()
            for v in list(remaining - comp):
                if nerve.spec.label(u, v) != 2:
                    comp.add(v)
                    frontier.append(v)
        remaining -= comp
        factors.append(tuple(sorted(comp)))
    if len(factors) < 2:
        return None
    factors.sort(key=lambda c: c[0])
    return factors
