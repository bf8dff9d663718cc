"""Coxeter matrix data model, document parsing and induced sub-systems.

A system is described by a finite ordered vertex set and a symmetric label
map on unordered vertex pairs.  Labels are integers >= 2 or infinity; the
diagonal is implicitly 1 and never stored.  A pair without a stored label
means infinity (such pairs never span an edge of the nerve, so documents
stay sparse).
"""

from __future__ import annotations

import json
import math
from typing import Iterable, Mapping

INFINITY = math.inf

Label = float  # an int >= 2, or INFINITY
VertexSubset = tuple[str, ...]


class SpecError(ValueError):
    """Base class for invalid Coxeter system documents or arguments."""


class MalformedDocument(SpecError):
    pass


class DuplicateVertex(SpecError):
    pass


class ConflictingLabel(SpecError):
    pass


class LabelOutOfRange(SpecError):
    pass


class UnknownVertex(SpecError):
    pass


def _pair(u: str, v: str) -> tuple[str, str]:
    return (u, v) if u < v else (v, u)


class CoxeterSpec:
    """Immutable Coxeter system: ordered vertices plus finite edge labels.

    Only finite labels are stored; ``label(u, v)`` returns ``INFINITY`` for
    any unstored pair and 1 on the diagonal.  Vertex identifiers are opaque
    strings; lexicographic order on them is the canonical order used for
    subsets, components and serialization.
    """

    __slots__ = ("vertices", "_labels", "_vertex_set")

    def __init__(self, vertices: Iterable[str], labels: Mapping[tuple[str, str], int] | None = None):
        vertices = tuple(vertices)
        seen = set()
        for v in vertices:
            if not isinstance(v, str) or not v:
                raise MalformedDocument(f"vertex identifier must be a non-empty string, got {v!r}")
            if v in seen:
                raise DuplicateVertex(f"duplicate vertex {v!r}")
            seen.add(v)
        finite: dict[tuple[str, str], int] = {}
        for (u, v), m in (labels or {}).items():
            if u == v:
                raise MalformedDocument(f"diagonal label for {u!r} cannot be set")
            if u not in seen or v not in seen:
                raise UnknownVertex(f"edge ({u!r}, {v!r}) mentions a non-vertex")
            if m == INFINITY:
                continue  # equivalent to omission
            if not isinstance(m, int) or isinstance(m, bool) or m < 2:
                raise LabelOutOfRange(f"label m({u},{v}) = {m!r} must be an integer >= 2 or infinity")
            key = _pair(u, v)
            if key in finite and finite[key] != m:
                raise ConflictingLabel(f"edge {key} listed with labels {finite[key]} and {m}")
            finite[key] = m
        self.vertices = vertices
        self._vertex_set = frozenset(vertices)
        self._labels = finite

    def label(self, u: str, v: str) -> Label:
        if u not in self._vertex_set or v not in self._vertex_set:
            raise UnknownVertex(f"({u!r}, {v!r}) is not a vertex pair of this system")
        if u == v:
            return 1
        return self._labels.get(_pair(u, v), INFINITY)

    def finite_edges(self) -> list[tuple[str, str, int]]:
        """All pairs with a finite label, sorted by (u, v)."""
        return [(u, v, self._labels[(u, v)]) for (u, v) in sorted(self._labels)]

    def has_vertex(self, v: str) -> bool:
        return v in self._vertex_set

    def check_subset(self, subset: Iterable[str]) -> VertexSubset:
        """Canonicalize a vertex subset (sorted, deduplicated), validating membership."""
        out = sorted(set(subset))
        for v in out:
            if v not in self._vertex_set:
                raise UnknownVertex(f"{v!r} is not a vertex of this system")
        return tuple(out)

    def __len__(self) -> int:
        return len(self.vertices)

    def __eq__(self, other) -> bool:
        if not isinstance(other, CoxeterSpec):
            return NotImplemented
        return self.vertices == other.vertices and self._labels == other._labels

    def __hash__(self) -> int:
        return hash((self.vertices, tuple(sorted(self._labels.items()))))

    def __repr__(self) -> str:
        return f"CoxeterSpec({len(self.vertices)} vertices, {len(self._labels)} finite labels)"

    def to_document(self) -> dict:
        """Serializable document; inverse of parse_spec, vertex order preserved."""
        return {
            "vertices": list(self.vertices),
            "edges": [{"u": u, "v": v, "m": m} for u, v, m in self.finite_edges()],
        }


def parse_spec(document) -> CoxeterSpec:
    """Parse a system document (a mapping, or JSON text) into a CoxeterSpec.

    The document has two fields: ``vertices``, a list of strings, and
    ``edges``, a list of ``{"u":, "v":, "m":}`` records where ``m`` is an
    integer >= 2 or the string ``"inf"``.  An ``"inf"`` edge is equivalent
    to omitting the pair.
    """
    if isinstance(document, (str, bytes)):
        try:
            document = json.loads(document)
        except json.JSONDecodeError as exc:
            raise MalformedDocument(f"not valid JSON: {exc}") from exc
    if not isinstance(document, Mapping):
        raise MalformedDocument("document must be a JSON object")
    if "vertices" not in document:
        raise MalformedDocument("document lacks a 'vertices' field")
    vertices = document["vertices"]
    if not isinstance(vertices, list):
        raise MalformedDocument("'vertices' must be a list of strings")
    edges = document.get("edges", [])
    if not isinstance(edges, list):
        raise MalformedDocument("'edges' must be a list of {u, v, m} records")

    labels: dict[tuple[str, str], int] = {}
    infinite_pairs: set[tuple[str, str]] = set()
    vertex_set = set()
    for v in vertices:
        if not isinstance(v, str):
            raise MalformedDocument(f"vertex {v!r} is not a string")
        vertex_set.add(v)
    for rec in edges:
        if not isinstance(rec, Mapping) or not {"u", "v", "m"} <= set(rec):
            raise MalformedDocument(f"edge record {rec!r} must have fields u, v, m")
        u, v, m = rec["u"], rec["v"], rec["m"]
        if u == v:
            raise MalformedDocument(f"edge ({u!r}, {v!r}) is a self-loop")
        if u not in vertex_set or v not in vertex_set:
            raise UnknownVertex(f"edge ({u!r}, {v!r}) mentions a non-vertex")
        if m == "inf" or m == INFINITY:
            key = _pair(u, v)
            if key in labels:
                raise ConflictingLabel(f"edge {key} listed with labels {labels[key]} and inf")
            infinite_pairs.add(key)
            continue
        if not isinstance(m, int) or isinstance(m, bool):
            raise LabelOutOfRange(f"label m({u},{v}) = {m!r} is neither an integer nor 'inf'")
        if m < 2:
            raise LabelOutOfRange(f"label m({u},{v}) = {m} is below 2")
        key = _pair(u, v)
        if key in infinite_pairs:
            raise ConflictingLabel(f"edge {key} listed with labels inf and {m}")
        if key in labels and labels[key] != m:
            raise ConflictingLabel(f"edge {key} listed with labels {labels[key]} and {m}")
        labels[key] = m
    return CoxeterSpec(vertices, labels)


def induced_subspec(spec: CoxeterSpec, subset: Iterable[str]) -> CoxeterSpec:
    """Restrict a system to a vertex subset, preserving labels and vertex order."""
    keep = set(spec.check_subset(subset))
    vertices = [v for v in spec.vertices if v in keep]
    labels = {
        (u, v): m
        for u, v, m in spec.finite_edges()
        if u in keep and v in keep
    }
    return CoxeterSpec(vertices, labels)
