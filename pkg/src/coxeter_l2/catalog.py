"""Ready-made Coxeter systems: complete graphs, cycles, paths, polyhedra."""

from __future__ import annotations

from coxeter_l2.model import CoxeterSpec


def complete_graph_spec(n: int, label: int = 3, prefix: str = "v") -> CoxeterSpec:
    """K_n with every edge carrying the same label (default 3)."""
    vertices = [f"{prefix}{i}" for i in range(n)]
    labels = {
        (vertices[i], vertices[j]): label
        for i in range(n)
        for j in range(i + 1, n)
    }
    return CoxeterSpec(vertices, labels)


# A spherical rotation system for complete_graph_spec(4): the tetrahedral
# embedding, with faces v0v1v2, v0v2v3, v0v3v1, v1v3v2.
K4_ROTATION = {
    "v0": ["v1", "v3", "v2"],
    "v1": ["v0", "v2", "v3"],
    "v2": ["v0", "v3", "v1"],
    "v3": ["v0", "v1", "v2"],
}


def complete_bipartite_spec(a: int, b: int, label: int = 2) -> CoxeterSpec:
    """K_{a,b} with all cross edges labelled (default 2, the right-angled case)."""
    left = [f"a{i}" for i in range(a)]
    right = [f"b{i}" for i in range(b)]
    labels = {(u, v): label for u in left for v in right}
    return CoxeterSpec(left + right, labels)


def cycle_spec(n: int, label: int = 2, prefix: str = "v") -> CoxeterSpec:
    """An n-cycle; for n >= 4 (or labels above 2) its nerve is a circle."""
    vertices = [f"{prefix}{i}" for i in range(n)]
    labels = {
        (vertices[i], vertices[(i + 1) % n]): label for i in range(n)
    }
    return CoxeterSpec(vertices, labels)


def path_spec(labels: list[int], prefix: str = "v") -> CoxeterSpec:
    """A system whose Coxeter diagram is a path with the given edge labels.

    Non-consecutive generators commute (label 2); this is the linear
    diagram shape of the classical A/B/F/H families.
    """
    vertices = [f"{prefix}{i}" for i in range(len(labels) + 1)]
    edge_labels = {}
    for i, u in enumerate(vertices):
        for j in range(i + 1, len(vertices)):
            edge_labels[(u, vertices[j])] = labels[i] if j == i + 1 else 2
    return CoxeterSpec(vertices, edge_labels)


def points_spec(n: int, prefix: str = "p") -> CoxeterSpec:
    """n disjoint points (all pairs infinite)."""
    return CoxeterSpec([f"{prefix}{i}" for i in range(n)], {})


def octahedron_spec(labels: dict[tuple[str, str], int] | None = None) -> CoxeterSpec:
    """The octahedron: K_{2,2,2} on x0,x1,y0,y1,z0,z1, default all labels 2.

    ``labels`` overrides individual edges; antipodal pairs (x0,x1) etc.
    stay unlabelled (infinite).
    """
    vertices = ["x0", "x1", "y0", "y1", "z0", "z1"]
    antipodal = {("x0", "x1"), ("y0", "y1"), ("z0", "z1")}
    edge_labels = {}
    for i, u in enumerate(vertices):
        for v in vertices[i + 1:]:
            if (u, v) not in antipodal:
                edge_labels[(u, v)] = 2
    for (u, v), m in (labels or {}).items():
        key = (u, v) if u < v else (v, u)
        if key in antipodal:
            raise ValueError(f"{key} is an antipodal pair, not an edge")
        edge_labels[key] = m
    return CoxeterSpec(vertices, edge_labels)


def icosahedron_spec() -> CoxeterSpec:
    """The icosahedron with all 30 edges labelled 2.

    Built as two pentagonal rings between a top and a bottom vertex; every
    triangle of the graph is a face, so the nerve is the full surface.
    """
    top, bottom = "t", "b"
    upper = [f"u{i}" for i in range(5)]
    lower = [f"l{i}" for i in range(5)]
    edges = []
    for i in range(5):
        edges.append((top, upper[i]))
        edges.append((bottom, lower[i]))
        edges.append((upper[i], upper[(i + 1) % 5]))
        edges.append((lower[i], lower[(i + 1) % 5]))
        edges.append((upper[i], lower[i]))
        edges.append((upper[i], lower[(i + 1) % 5]))
    labels = {(u, v) if u < v else (v, u): 2 for u, v in edges}
    return CoxeterSpec([top, bottom] + upper + lower, labels)
