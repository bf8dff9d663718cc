#!/usr/bin/env python3
"""Sphere nerves have vanishing l2-homology and chi_orb = 0.

A nerve recognized as a 2-sphere triangulation gets its whole Betti
vector zeroed by the sphere-vanishing rule, and the alternating-sum
identity then forces the orbihedral Euler characteristic to vanish --
which the collapsed sum confirms exactly, for the octahedron, the
icosahedron, and any relabelling of the octahedron whose faces stay
spherical.
"""

from coxeter_l2 import betti, build_nerve, chi_orb, recognize_sphere
from coxeter_l2.catalog import icosahedron_spec, octahedron_spec


def main():
    print("octahedron and icosahedron, all edges labelled 2:")
    for name, spec in (("octahedron", octahedron_spec()), ("icosahedron", icosahedron_spec())):
        nerve = build_nerve(spec)
        print(f"  {name}: counts {nerve.counts()}, {recognize_sphere(nerve).value}, "
              f"chi_orb = {chi_orb(nerve)}, betti = {betti(nerve)}")

    print("\noctahedron relabellings (faces must stay spherical):")
    samples = [
        {("x0", "y0"): 3},
        {("x0", "y0"): 5},
        {("x0", "y0"): 3, ("x1", "y1"): 3},
        {("x0", "y0"): 3, ("x0", "z0"): 3},
        {("x0", "y0"): 4, ("x1", "z1"): 5},
    ]
    for labels in samples:
        nerve = build_nerve(octahedron_spec(labels=labels))
        shown = ", ".join(f"m({u},{v}) = {m}" for (u, v), m in labels.items())
        print(f"  {shown}:")
        print(f"    {recognize_sphere(nerve).value}, chi_orb = {chi_orb(nerve)}, "
              f"betti = {betti(nerve)}")
    print("\nevery face (2,2,m), (2,3,3..5) group stays finite, so the complex")
    print("remains a 2-sphere triangulation and all entries vanish.")


if __name__ == "__main__":
    main()
