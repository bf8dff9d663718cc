import itertools
import random
from fractions import Fraction

import pytest

from coxeter_l2.model import CoxeterSpec
from coxeter_l2.catalog import (
    complete_bipartite_spec,
    complete_graph_spec,
    cycle_spec,
    octahedron_spec,
    points_spec,
)
from coxeter_l2.nerve import (
    SimplicialComplex,
    SphereKind,
    build_nerve,
    full_subcomplex,
    is_full_subcomplex,
    link,
    recognize_sphere,
)
from coxeter_l2.invariants import chi_orb
from coxeter_l2.planarity import (
    Certificate,
    HypothesisViolated,
    NonSimpleFaceBoundary,
    NotSpherical,
    RotationSystem,
    TooLarge,
    brute_force_planar,
    certify_nonplanar,
    cone_construction,
    faces_from_rotation,
    trace_vanishing,
    validate_embedding,
)

from conftest import random_planar_spec

K4_ROT = {
    "v0": ["v1", "v3", "v2"],
    "v1": ["v0", "v2", "v3"],
    "v2": ["v0", "v3", "v1"],
    "v3": ["v0", "v1", "v2"],
}


def skeleton_of(spec):
    return SimplicialComplex(
        spec.vertices,
        [(v,) for v in spec.vertices] + [(u, v) for u, v, _ in spec.finite_edges()],
    )


def cycle_rotation(nerve):
    return {v: list(nerve.neighbors(v)) for v in nerve.vertices}


def test_rotation_system_validation():
    with pytest.raises(ValueError):
        RotationSystem({"a": ["b", "b"]})
    with pytest.raises(ValueError):
        RotationSystem({"a": ["a"]})
    rot = RotationSystem(K4_ROT)
    assert rot.next_after("v0", "v1") == "v3"
    assert rot.next_after("v0", "v2") == "v1"  # cyclic wrap
    skel = skeleton_of(complete_graph_spec(4, 3))
    rot.check_against(skel)
    with pytest.raises(ValueError):
        rot.check_against(skeleton_of(complete_graph_spec(5, 3)))


def test_faces_k4_planar_rotation():
    skel = skeleton_of(complete_graph_spec(4, 3))
    faces = faces_from_rotation(skel, RotationSystem(K4_ROT))
    assert len(faces) == 4
    assert all(len(face) == 3 for face in faces.faces)


def test_faces_hexagon():
    nerve = build_nerve(cycle_spec(6, 2))
    faces = faces_from_rotation(nerve, RotationSystem(cycle_rotation(nerve)))
    assert len(faces) == 2
    assert all(len(face) == 6 for face in faces.faces)


def test_faces_twisted_k4_fails():
    # swapping one rotation produces a toroidal embedding somewhere among
    # the 16 systems; check at least one fails and the planar one passes
    skel = skeleton_of(complete_graph_spec(4, 3))
    verdicts = []
    options = [["v1", "v3", "v2"], ["v1", "v2", "v3"]]
    for o0 in options:
        rot = dict(K4_ROT)
        rot["v0"] = o0
        try:
            faces_from_rotation(skel, RotationSystem(rot))
            verdicts.append(True)
        except NotSpherical:
            verdicts.append(False)
    assert verdicts == [True, False]


def test_faces_k5_all_rotations_fail():
    # exhaustive over all 7776 rotation systems of K5
    skel = skeleton_of(complete_graph_spec(5, 3))
    options = []
    for v in skel.vertices:
        ns = skel.neighbors(v)
        options.append([(ns[0], *p) for p in itertools.permutations(ns[1:])])
    failures = 0
    total = 0
    for choice in itertools.product(*options):
        total += 1
        rot = RotationSystem(dict(zip(skel.vertices, choice)))
        with pytest.raises(NotSpherical):
            faces_from_rotation(skel, rot)
        failures += 1
    assert total == 6 ** 5  # (4-1)! cyclic orders per vertex
    assert failures == total


def test_faces_require_connected():
    skel = skeleton_of(points_spec(2))
    with pytest.raises(ValueError):
        faces_from_rotation(skel, RotationSystem({"p0": [], "p1": []}))


def test_validate_embedding_isolated_points():
    nerve = build_nerve(points_spec(3))
    out = validate_embedding(nerve, {"p0": [], "p1": [], "p2": []})
    assert len(out) == 3  # one trivial face set per component


def test_validate_embedding_triangle_simplex():
    # a filled triangle: its boundary must be a face of the embedding
    nerve = build_nerve(complete_graph_spec(3, 2))
    rot = {v: list(nerve.neighbors(v)) for v in nerve.vertices}
    out = validate_embedding(nerve, rot)
    assert len(out) == 1


def test_brute_force_small_graphs():
    assert brute_force_planar(skeleton_of(complete_graph_spec(4, 3)))
    assert not brute_force_planar(skeleton_of(complete_graph_spec(5, 3)))
    assert not brute_force_planar(skeleton_of(complete_bipartite_spec(3, 3)))
    assert brute_force_planar(skeleton_of(complete_bipartite_spec(2, 3)))
    assert brute_force_planar(skeleton_of(cycle_spec(8, 2)))
    assert brute_force_planar(skeleton_of(points_spec(4)))  # disconnected


def test_brute_force_edge_bound_shortcut():
    # K6 has 15 > 3*6-6 = 12 edges: rejected without enumeration
    assert not brute_force_planar(skeleton_of(complete_graph_spec(6, 3)))


def test_brute_force_too_large():
    with pytest.raises(TooLarge):
        brute_force_planar(skeleton_of(complete_graph_spec(11, 3)))


def test_cone_hexagon_is_bipyramid():
    nerve = build_nerve(cycle_spec(6, 2))
    sphere, witness = cone_construction(nerve, cycle_rotation(nerve))
    assert sphere.counts() == (8, 18, 12)
    assert recognize_sphere(sphere) is SphereKind.TWO_SPHERE
    assert witness.full and witness.right_angled_complement
    assert chi_orb(sphere) == 0
    added = set(sphere.vertices) - set(nerve.vertices)
    assert len(added) == 2


def test_cone_k4_at_3_is_octahedral():
    nerve = build_nerve(complete_graph_spec(4, 3))
    sphere, witness = cone_construction(nerve, K4_ROT)
    # all four triangular regions are empty 3-cycles, so all are coned:
    # 8 - 18 + 12 = 2
    assert sphere.counts() == (8, 18, 12)
    assert recognize_sphere(sphere) is SphereKind.TWO_SPHERE
    assert witness.full and witness.right_angled_complement
    assert chi_orb(sphere) == 0


def test_cone_leaves_filled_triangles_alone():
    # pentagon wheel at 2: the five filled triangles are faces and stay
    # unconed; only the outer pentagon region receives an apex
    hub = "x"
    ring = [f"v{i}" for i in range(5)]
    labels = {}
    for i, v in enumerate(ring):
        labels[(hub, v) if hub < v else (v, hub)] = 2
        u = ring[(i + 1) % 5]
        labels[(v, u) if v < u else (u, v)] = 2
    nerve = build_nerve(CoxeterSpec([hub] + ring, labels))
    assert len(nerve.triangles) == 5
    rot = {hub: ring[:]}
    for i, v in enumerate(ring):
        rot[v] = [ring[(i + 1) % 5], hub, ring[(i - 1) % 5]]
    sphere, witness = cone_construction(nerve, rot)
    assert len(set(sphere.vertices) - set(nerve.vertices)) == 1
    assert sphere.counts() == (7, 15, 10)
    assert recognize_sphere(sphere) is SphereKind.TWO_SPHERE
    assert witness.full and witness.right_angled_complement


def test_cone_already_sphere_adds_nothing():
    nerve = build_nerve(octahedron_spec())
    rot = _find_planar_rotation(nerve)
    sphere, _ = cone_construction(nerve, rot)
    assert sphere == nerve  # every region is already a 2-simplex


def test_cone_rejects_nonsimple_face():
    # bowtie: two triangles sharing a vertex; the outer walk repeats it
    spec = CoxeterSpec(
        ["a", "b", "c", "d", "e"],
        {
            ("a", "b"): 3,
            ("a", "c"): 3,
            ("b", "c"): 3,
            ("a", "d"): 3,
            ("a", "e"): 3,
            ("d", "e"): 3,
        },
    )
    nerve = build_nerve(spec)
    rot = {
        "a": ["b", "c", "d", "e"],
        "b": ["a", "c"],
        "c": ["b", "a"],
        "d": ["a", "e"],
        "e": ["d", "a"],
    }
    with pytest.raises(NonSimpleFaceBoundary):
        cone_construction(nerve, rot)


def test_cone_rejects_disconnected():
    nerve = build_nerve(points_spec(2))
    with pytest.raises(ValueError):
        cone_construction(nerve, {"p0": [], "p1": []})


def test_certify_k5():
    cert = certify_nonplanar(complete_graph_spec(5, 3))
    assert cert.verdict == "NotPlanar"
    assert cert.bound == Fraction(1, 6)
    assert cert.chain[-1].statement == "planar-vanishing"
    assert cert.chain[0].values["chi_orb"] == "1/6"


def test_certify_k33_via_join():
    cert = certify_nonplanar(complete_bipartite_spec(3, 3))
    assert cert.verdict == "NotPlanar"
    assert cert.bound == Fraction(1, 4)
    statements = [s.statement for s in cert.chain]
    assert "R-join" in statements
    assert statements[-1] == "planar-vanishing"


def test_certify_hexagon_inconclusive():
    cert = certify_nonplanar(cycle_spec(6, 2))
    assert cert.verdict == "Inconclusive"
    assert cert.reason == "ObstructionSilent"
    assert cert.bound == 0


def test_certify_finite_group():
    cert = certify_nonplanar(path_spec_with_two_vertices())
    assert cert.verdict == "Inconclusive"
    assert cert.reason == "FiniteGroup"


def path_spec_with_two_vertices():
    return CoxeterSpec(["a", "b"], {("a", "b"): 3})


def test_certify_dimension_too_high():
    cert = certify_nonplanar(complete_graph_spec(4, 2))  # a 3-simplex
    assert cert.verdict == "Inconclusive"
    assert cert.reason == "DimensionTooHigh"


def test_certify_disconnected_with_nonplanar_component():
    k5 = complete_graph_spec(5, 3)
    doc = k5.to_document()
    doc["vertices"].append("lonely")
    cert = certify_nonplanar(CoxeterSpec(doc["vertices"], {
        (e["u"], e["v"]): e["m"] for e in doc["edges"]
    }))
    assert cert.verdict == "NotPlanar"
    assert cert.bound == Fraction(1, 6)
    assert any("component" in note for note in cert.notes)


def test_certify_disconnected_silent():
    cert = certify_nonplanar(points_spec(2))
    assert cert.verdict == "Inconclusive"
    assert len(cert.notes) >= 2


def test_certificate_chain_values_recomputable():
    cert = certify_nonplanar(complete_graph_spec(5, 3))
    nerve = build_nerve(cert.subject)
    num, den = cert.to_document()["bound"].split("/")
    assert Fraction(int(num), int(den)) == Fraction(1, 6)
    assert chi_orb(nerve) == Fraction(1, 6)


def test_trace_octahedron_poles():
    nerve = build_nerve(octahedron_spec())
    trace = trace_vanishing(nerve, ["x0", "x1", "y0", "y1"])
    assert [s.removed for s in trace.steps] == ["z0", "z1"]
    assert all(s.link_full for s in trace.steps)
    assert "i > 1" in trace.conclusion


def test_trace_whole_nerve_is_empty():
    nerve = build_nerve(octahedron_spec())
    trace = trace_vanishing(nerve, nerve.vertices)
    assert trace.steps == ()
    assert "sphere-vanishing" in trace.to_document()["base"]


def test_trace_coned_k4():
    nerve = build_nerve(complete_graph_spec(4, 3))
    sphere, _ = cone_construction(nerve, K4_ROT)
    trace = trace_vanishing(sphere, nerve.vertices)
    assert len(trace.steps) == 4  # one per cone vertex
    assert all(s.link_full for s in trace.steps)
    removed = {s.removed for s in trace.steps}
    assert removed == set(sphere.vertices) - set(nerve.vertices)


def test_trace_hypothesis_checks():
    hexn = build_nerve(cycle_spec(6, 2))
    with pytest.raises(HypothesisViolated):
        trace_vanishing(hexn, ["v0"])  # ambient is not a 2-sphere
    octa = build_nerve(octahedron_spec(labels={("x0", "y0"): 3}))
    assert recognize_sphere(octa) is SphereKind.TWO_SPHERE
    with pytest.raises(HypothesisViolated):
        # the 3-labelled edge has an endpoint outside the target
        trace_vanishing(octa, ["x0", "z0", "z1"])


def test_link_fullness_on_cone_outputs():
    # Lemma-style check over random planar inputs: links of removed
    # vertices stay full in the coned sphere for any full B containing A.
    rng = random.Random(59)
    checked = 0
    for _ in range(40):
        spec = random_planar_spec(rng, max_vertices=6)
        nerve = build_nerve(spec)
        if nerve.dimension > 2 or not nerve.is_connected():
            continue
        skel = skeleton_of(spec)
        try:
            rot = _find_planar_rotation(skel)
        except LookupError:
            continue
        try:
            sphere, witness = cone_construction(nerve, rot)
        except (NotSpherical, NonSimpleFaceBoundary):
            continue
        checked += 1
        A = set(witness.vertex_set)
        extra = sorted(set(sphere.vertices) - A)
        mid = [v for v in extra if rng.random() < 0.5]
        B = sorted(A | set(mid))
        b_nerve, _ = full_subcomplex(sphere, B)
        for v in mid:
            assert is_full_subcomplex(sphere, link(b_nerve, v))
    assert checked >= 10


def _find_planar_rotation(skel):
    options = []
    for v in skel.vertices:
        ns = skel.neighbors(v)
        if not ns:
            options.append([()])
        else:
            options.append([(ns[0], *p) for p in itertools.permutations(ns[1:])])
    for choice in itertools.product(*options):
        rot = RotationSystem(dict(zip(skel.vertices, choice)))
        try:
            faces_from_rotation(skel, rot)
            return rot
        except NotSpherical:
            continue
    raise LookupError("no spherical rotation found")


def test_contrapositive_soundness_sample():
    # planar inputs never trigger the obstruction (full run in acceptance)
    rng = random.Random(61)
    for _ in range(60):
        spec = random_planar_spec(rng)
        cert = certify_nonplanar(spec)
        assert cert.verdict != "NotPlanar"
        assert brute_force_planar(skeleton_of(spec))


def test_contrapositive_on_oracle_filtered_graphs():
    # The other sampling direction: arbitrary random systems whose
    # 1-skeleton the exhaustive oracle accepts (this includes trees, cut
    # vertices and disconnected graphs the constructive generator never
    # produces) must never be certified non-planar when connected, of
    # dimension <= 2, with W infinite.
    from conftest import random_spec
    from coxeter_l2.model import INFINITY
    from coxeter_l2.spherical import classify

    rng = random.Random(63)
    checked = 0
    for _ in range(300):
        spec = random_spec(rng, max_vertices=5, labels=(2, 3, 4, 5, 6, INFINITY))
        skel = skeleton_of(spec)
        nerve = build_nerve(spec)
        if (
            not nerve.vertices
            or not nerve.is_connected()
            or nerve.dimension > 2
            or classify(spec, spec.vertices).spherical
        ):
            continue
        if not brute_force_planar(skel):
            continue
        checked += 1
        assert certify_nonplanar(spec).verdict == "Inconclusive"
    assert checked >= 50
