#!/usr/bin/env python3
"""Tour of the command-line interface on the bundled sample documents.

Runs each subcommand in-process against demos/data/ and shows the exit
codes, including the exit-2 convention for inconclusive certificates.
"""

from pathlib import Path

from coxeter_l2.cli import main as cli

DATA = Path(__file__).parent / "data"


def run(*argv):
    printable = " ".join(
        a if not a.endswith(".json") else f"data/{Path(a).name}" for a in argv
    )
    print(f"\n$ coxl2 {printable}")
    code = cli(list(argv))
    print(f"[exit {code}]")


def main():
    k5 = str(DATA / "k5.json")
    k33 = str(DATA / "k33.json")
    hexagon = str(DATA / "hexagon.json")
    octa = str(DATA / "octahedron.json")
    k4 = str(DATA / "k4.json")

    run("validate", k5)
    run("nerve", hexagon)
    run("classify", k5, "--subset", "v0,v1")
    run("chi", k5, "--chain-oracle")
    run("betti", k33)
    run("betti", hexagon, "--subset", "v0,v2,v4")
    run("betti", k4, "--embedding", str(DATA / "k4_rotation.json"))
    run("certify", k5)
    run("certify", hexagon)  # inconclusive: exit 2
    run("cone", hexagon, "--embedding", str(DATA / "hexagon_rotation.json"))
    run("trace", octa, "--subset", "x0,x1,y0,y1")
    run("enumerate", k5, "--subset", "v0,v1,v2", "--cap", "500")
    run("planar-oracle", k33)


if __name__ == "__main__":
    main()
