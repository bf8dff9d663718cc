import json

import pytest

from coxeter_l2.cli import main
from coxeter_l2.catalog import (
    complete_bipartite_spec,
    complete_graph_spec,
    cycle_spec,
    octahedron_spec,
)


@pytest.fixture
def docs(tmp_path):
    paths = {}

    def write(name, payload):
        p = tmp_path / name
        p.write_text(json.dumps(payload))
        paths[name] = str(p)

    write("k5.json", complete_graph_spec(5, 3).to_document())
    write("k33.json", complete_bipartite_spec(3, 3).to_document())
    write("hexagon.json", cycle_spec(6, 2).to_document())
    write("octahedron.json", octahedron_spec().to_document())
    hexn = cycle_spec(6, 2)
    rot = {}
    for v in hexn.vertices:
        rot[v] = [u for u, w, _ in hexn.finite_edges() if w == v] + [
            w for u, w, _ in hexn.finite_edges() if u == v
        ]
    write("hexrot.json", rot)
    write("bad.json", {"vertices": ["a", "a"]})
    return paths


def run(capsys, argv):
    code = main(argv)
    out = capsys.readouterr()
    return code, out.out, out.err


def test_validate(docs, capsys):
    code, out, _ = run(capsys, ["validate", docs["k5.json"]])
    assert code == 0
    assert "5 vertices" in out and "10 finite edges" in out


def test_validate_error_exit_one(docs, capsys):
    code, _, err = run(capsys, ["validate", docs["bad.json"]])
    assert code == 1
    assert "error" in err


def test_missing_file_exit_one(capsys):
    code, _, err = run(capsys, ["validate", "/nonexistent/x.json"])
    assert code == 1
    assert "error" in err


def test_nerve_structured(docs, capsys):
    code, out, _ = run(capsys, ["--format", "structured", "nerve", docs["octahedron.json"]])
    assert code == 0
    doc = json.loads(out)
    assert doc["dimension"] == 2
    assert len(doc["simplices"]["2"]) == 8
    assert doc["spec"]["vertices"] == ["x0", "x1", "y0", "y1", "z0", "z1"]


def test_classify(docs, capsys):
    code, out, _ = run(capsys, ["classify", docs["k5.json"], "--subset", "v0,v1"])
    assert code == 0
    assert "order: 6" in out
    code, out, _ = run(capsys, ["classify", docs["k5.json"], "--subset", "v0,v1,v2"])
    assert "spherical: false" in out


def test_chi_text(docs, capsys):
    code, out, _ = run(capsys, ["chi", docs["hexagon.json"]])
    assert code == 0
    assert out.strip() == "-1/2"


def test_chi_chain_oracle(docs, capsys):
    code, out, _ = run(capsys, ["chi", docs["k5.json"], "--chain-oracle"])
    assert code == 0
    assert "1/6" in out and "agrees" in out


def test_betti_k33(docs, capsys):
    code, out, _ = run(capsys, ["betti", docs["k33.json"]])
    assert code == 0
    assert "(0, 0, 1/4)" in out
    assert "R-join" in out


def test_betti_with_subset(docs, capsys):
    code, out, _ = run(capsys, ["betti", docs["hexagon.json"], "--subset", "v0,v1,v2"])
    assert code == 0
    assert "R-sub1" in out


def test_betti_with_ambient(docs, capsys, tmp_path):
    from coxeter_l2.model import induced_subspec

    arc = induced_subspec(cycle_spec(6, 2), ["v0", "v1", "v2"])
    p = tmp_path / "arc.json"
    p.write_text(json.dumps(arc.to_document()))
    code, out, _ = run(
        capsys,
        ["betti", str(p), "--ambient", docs["hexagon.json"], "--subset", "v0,v1,v2"],
    )
    assert code == 0
    assert "R-sub1" in out


def test_betti_with_embedding(docs, capsys, tmp_path):
    spec = complete_graph_spec(4, 3)
    sp = tmp_path / "k4.json"
    sp.write_text(json.dumps(spec.to_document()))
    rot = {
        "v0": ["v1", "v3", "v2"],
        "v1": ["v0", "v2", "v3"],
        "v2": ["v0", "v3", "v1"],
        "v3": ["v0", "v1", "v2"],
    }
    rp = tmp_path / "k4rot.json"
    rp.write_text(json.dumps(rot))
    code, out, _ = run(capsys, ["betti", str(sp), "--embedding", str(rp)])
    assert code == 0
    assert "R-planar" in out


def test_certify_k5(docs, capsys, tmp_path):
    out_path = tmp_path / "cert.json"
    code, out, _ = run(capsys, ["certify", docs["k5.json"], "--out", str(out_path)])
    assert code == 0
    assert "NotPlanar" in out
    assert "1/6" in out
    saved = json.loads(out_path.read_text())
    assert saved["verdict"] == "NotPlanar"
    assert saved["bound"] == "1/6"
    assert saved["chain"][-1]["statement"] == "planar-vanishing"


def test_certify_inconclusive_exit_two(docs, capsys):
    code, out, _ = run(capsys, ["certify", docs["hexagon.json"]])
    assert code == 2
    assert "Inconclusive" in out
    assert "ObstructionSilent" in out


def test_cone_hexagon(docs, capsys):
    code, out, _ = run(
        capsys, ["cone", docs["hexagon.json"], "--embedding", docs["hexrot.json"]]
    )
    assert code == 0
    assert "TwoSphere" in out
    assert "right_angled_complement: True" in out


def test_trace(docs, capsys):
    code, out, _ = run(
        capsys, ["trace", docs["octahedron.json"], "--subset", "x0,x1,y0,y1"]
    )
    assert code == 0
    assert "steps: 2" in out
    assert "remove z0" in out and "remove z1" in out


def test_enumerate(docs, capsys):
    code, out, _ = run(
        capsys, ["enumerate", docs["k5.json"], "--subset", "v0,v1", "--cap", "100"]
    )
    assert code == 0
    assert "order: 6" in out
    code, out, _ = run(
        capsys, ["enumerate", docs["k5.json"], "--subset", "v0,v1,v2", "--cap", "500"]
    )
    assert code == 0
    assert "ExceedsCap" in out


def test_planar_oracle(docs, capsys):
    code, out, _ = run(capsys, ["planar-oracle", docs["k5.json"]])
    assert code == 0
    assert "planar: false" in out
    code, out, _ = run(capsys, ["planar-oracle", docs["hexagon.json"]])
    assert "planar: true" in out


def test_output_reproducible(docs, capsys):
    _, first, _ = run(capsys, ["--format", "structured", "certify", docs["k33.json"]])
    _, second, _ = run(capsys, ["--format", "structured", "certify", docs["k33.json"]])
    assert first == second


def test_threads_flag_accepted(docs, capsys):
    code, out, _ = run(capsys, ["--threads", "4", "chi", docs["k5.json"]])
    assert code == 0
    assert out.strip() == "1/6"
