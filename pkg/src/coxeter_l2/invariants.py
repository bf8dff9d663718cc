"""Orbihedral Euler characteristic and the l2-Betti rule engine.

Everything here is exact rational arithmetic; no operation produces a
float.  Betti numbers are never computed spectrally: a small engine
applies vanishing and product rules whose hypotheses can be verified
combinatorially, records provenance for every entry it fills, and leaves
everything else Unknown.  The alternating-sum identity (Euler
characteristic equals the alternating sum of l2-Betti numbers) both
completes single missing entries and cross-checks every fully known
vector.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Mapping

from coxeter_l2.model import VertexSubset, induced_subspec
from coxeter_l2.nerve import (
    CapExceeded,
    Nerve,
    SphereKind,
    SubcomplexWitness,
    build_nerve,
    detect_join2,
    recognize_sphere,
)
from coxeter_l2.spherical import classify


class _Unknown:
    """Singleton for Betti entries no rule determines."""

    _instance = None

    def __new__(cls):
        if cls._instance is None:
            cls._instance = super().__new__(cls)
        return cls._instance

    def __repr__(self):
        return "Unknown"


UNKNOWN = _Unknown()


class ContradictoryRules(RuntimeError):
    """Two rules assigned different values to one entry; abort, never pick."""


class UnknownEntries(ValueError):
    """An operation needing a fully known Betti vector met an Unknown entry."""


class InvalidWitness(ValueError):
    """A rule-context witness is inconsistent with the target nerve."""


class FiniteGroup(ValueError):
    pass


class DimensionTooHigh(ValueError):
    pass


def chi_orb(nerve: Nerve) -> Fraction:
    """Orbihedral Euler characteristic, as the collapsed sum over spherical subsets.

    Each spherical subset T (the empty set included) contributes
    (-1)^|T| / |W_T|; the empty set contributes +1.  Equality with the
    literal chain-level sum is the job of chi_orb_chain_sum.
    """
    total = Fraction(1)
    for s in nerve.simplices():
        total += Fraction((-1) ** len(s), nerve.order(s))
    return total


def chi_orb_chain_sum(nerve: Nerve, *, chain_cap: int = 10 ** 7) -> Fraction:
    """Independent oracle: the chain-level Euler characteristic sum.

    Simplices of the fundamental chamber are the chains of spherical
    subsets ordered by inclusion, the empty set included as a poset
    element; a chain of k+1 elements has dimension k and stabilizer order
    |W_T| for its minimum T.  Every chain is enumerated literally.
    """
    elements: list[frozenset[str]] = [frozenset()]
    order_of: dict[frozenset[str], int] = {frozenset(): 1}
    for s in nerve.simplices():
        fs = frozenset(s)
        elements.append(fs)
        order_of[fs] = nerve.order(s)
    elements.sort(key=lambda e: (len(e), tuple(sorted(e))))
    above: dict[frozenset[str], list[frozenset[str]]] = {
        e: [f for f in elements if e < f] for e in elements
    }

    total = Fraction(0)
    seen = 0

    def extend(min_order: int, last: frozenset[str], length: int):
        nonlocal total, seen
        seen += 1
        if seen > chain_cap:
            raise CapExceeded(f"chain enumeration exceeds {chain_cap} chains")
        total += Fraction((-1) ** (length - 1), min_order)
        for f in above[last]:
            extend(min_order, f, length + 1)

    for e in elements:
        extend(order_of[e], e, 1)
    return total


@dataclass(frozen=True)
class RuleContext:
    """Optional hypotheses handed to the Betti engine.

    witness: the target is the full subcomplex of witness.ambient on
    witness.vertex_set.  embedding: a rotation system describing a sphere
    embedding of the target's 1-skeleton (validated per component).
    join_factors: a right-angled join grouping of the target's vertices.
    All witnesses are checked against the target before any rule fires.
    """

    witness: SubcomplexWitness | None = None
    embedding: Mapping[str, tuple] | None = None
    join_factors: tuple[VertexSubset, ...] | None = None


class BettiVector:
    """Per-dimension l2-Betti entries with provenance.

    Entries cover dimensions 0 .. dim(nerve)+1, the dimension of the group
    complex; ``get`` answers exact 0 above that range, where there are no
    chains at all.  Entries no rule determines are UNKNOWN.
    """

    def __init__(self, top: int, entries: list, provenance: list):
        self.top = top
        self._entries = tuple(entries)
        self._provenance = tuple(provenance)

    def get(self, i: int):
        if i < 0:
            raise IndexError("negative dimension")
        if i > self.top:
            return Fraction(0)
        return self._entries[i]

    def provenance_for(self, i: int) -> str:
        if i > self.top:
            return "beyond the top dimension: no chains"
        return self._provenance[i] or "Unknown: no rule fired"

    @property
    def fully_known(self) -> bool:
        return all(e is not UNKNOWN for e in self._entries)

    def alternating_sum(self) -> Fraction:
        if not self.fully_known:
            raise UnknownEntries("vector has Unknown entries")
        return sum(((-1) ** i * e for i, e in enumerate(self._entries)), Fraction(0))

    def as_tuple(self, upto: int | None = None) -> tuple:
        n = self.top if upto is None else upto
        return tuple(self.get(i) for i in range(n + 1))

    def __repr__(self) -> str:
        inner = ", ".join("?" if e is UNKNOWN else str(e) for e in self._entries)
        return f"({inner})"

    def to_document(self) -> dict:
        return {
            "entries": {
                str(i): (None if e is UNKNOWN else f"{e.numerator}/{e.denominator}")
                for i, e in enumerate(self._entries)
            },
            "provenance": {str(i): self.provenance_for(i) for i in range(self.top + 1)},
        }


class _Builder:
    def __init__(self, top: int):
        self.top = top
        self.entries: list = [UNKNOWN] * (top + 1)
        self.provenance: list = [None] * (top + 1)

    def assign(self, i: int, value: Fraction, why: str):
        value = Fraction(value)
        if value < 0:
            raise ContradictoryRules(
                f"rule '{why}' assigned negative value {value} to dimension {i}"
            )
        if i > self.top:
            if value != 0:
                raise ContradictoryRules(
                    f"rule '{why}' assigned {value} beyond the top dimension {self.top}"
                )
            return
        current = self.entries[i]
        if current is UNKNOWN:
            self.entries[i] = value
            self.provenance[i] = why
        elif current != value:
            raise ContradictoryRules(
                f"dimension {i}: '{self.provenance[i]}' gave {current} "
                f"but '{why}' gives {value}"
            )

    def unknown_dims(self) -> list[int]:
        return [i for i, e in enumerate(self.entries) if e is UNKNOWN]

    def build(self) -> BettiVector:
        return BettiVector(self.top, self.entries, self.provenance)


def _validate_witness(nerve: Nerve, witness: SubcomplexWitness) -> None:
    target_set = set(nerve.vertices)
    if set(witness.vertex_set) != target_set:
        raise InvalidWitness("witness vertex set does not match the target nerve")
    if induced_subspec(witness.ambient.spec, witness.vertex_set) != nerve.spec:
        raise InvalidWitness("target is not the induced subsystem of the witness ambient")


def _validate_join_factors(nerve: Nerve, factors: tuple[VertexSubset, ...]) -> None:
    flat = [v for f in factors for v in f]
    if sorted(flat) != sorted(nerve.vertices) or len(factors) < 2:
        raise InvalidWitness("join factors must partition the vertex set into >= 2 parts")
    for i, f in enumerate(factors):
        for g in factors[i + 1:]:
            for u in f:
                for v in g:
                    if nerve.spec.label(u, v) != 2:
                        raise InvalidWitness(
                            f"cross pair ({u},{v}) labelled {nerve.spec.label(u, v)}, not 2"
                        )


def betti(nerve: Nerve, ctx: RuleContext | None = None) -> BettiVector:
    """Evaluate the l2-Betti vector of a nerve by rule application.

    Rules fire in a fixed order (finite-group, vanishing beta_0, sphere
    vanishing, subcomplex vanishing under a witness, planarity vanishing
    under an embedding witness, then the Kunneth product over a
    right-angled join); a final completion step fills a single missing
    entry from the Euler characteristic.  Conflicting assignments raise
    ContradictoryRules.
    """
    top = nerve.dimension + 1
    b = _Builder(top)
    chi = chi_orb(nerve)
    full_verdict = classify(nerve.spec, nerve.vertices)

    # R-fin / R-b0: a finite group has compact contractible group complex.
    if full_verdict.spherical:
        b.assign(0, Fraction(1, full_verdict.order), f"R-fin: |W| = {full_verdict.order}")
        for i in range(1, top + 1):
            b.assign(i, Fraction(0), f"R-fin: |W| = {full_verdict.order}")
    else:
        b.assign(0, Fraction(0), "R-b0: W infinite")

    # R-S0/S1 and R-S2: sphere nerves.
    kind = recognize_sphere(nerve)
    is_s0 = len(nerve.vertices) == 2 and not nerve.edges
    if kind is SphereKind.CIRCLE or is_s0:
        which = "circle" if kind is SphereKind.CIRCLE else "two points"
        b.assign(top, Fraction(0), f"R-S0/S1: nerve is {which}, top entry vanishes")
    if kind is SphereKind.TWO_SPHERE:
        for i in range(top + 1):
            b.assign(i, Fraction(0), "R-S2: 2-sphere nerve, all entries vanish")

    if ctx is not None and ctx.witness is not None:
        _validate_witness(nerve, ctx.witness)
        ambient_kind = recognize_sphere(ctx.witness.ambient)
        if ambient_kind is SphereKind.CIRCLE and ctx.witness.full:
            for i in range(2, top + 1):
                b.assign(i, Fraction(0), "R-sub1: full subcomplex of a circle nerve")
        if (
            ambient_kind is SphereKind.TWO_SPHERE
            and ctx.witness.full
            and ctx.witness.right_angled_complement
        ):
            for i in range(2, top + 1):
                b.assign(
                    i,
                    Fraction(0),
                    "R-sub2: full subcomplex with right-angled complement in a 2-sphere nerve",
                )

    if ctx is not None and ctx.embedding is not None and nerve.dimension <= 2:
        from coxeter_l2.planarity import validate_embedding

        try:
            validate_embedding(nerve, ctx.embedding)
        except Exception as exc:
            raise InvalidWitness(f"embedding witness rejected: {exc}") from exc
        b.assign(2, Fraction(0), "R-planar: sphere-embedding witness")

    # R-join: Kunneth over a right-angled join, once factor vectors are known.
    factors = ctx.join_factors if ctx is not None and ctx.join_factors else None
    if factors is not None:
        _validate_join_factors(nerve, factors)
    else:
        factors = detect_join2(nerve)
    if factors is not None:
        factor_vectors = []
        for f in factors:
            sub = build_nerve(induced_subspec(nerve.spec, f))
            factor_vectors.append(betti(sub))
        if all(v.fully_known for v in factor_vectors):
            conv = [Fraction(1)]
            for v in factor_vectors:
                cur = [v.get(i) for i in range(v.top + 1)]
                nxt = [Fraction(0)] * (len(conv) + len(cur) - 1)
                for i, a in enumerate(conv):
                    for j, c in enumerate(cur):
                        nxt[i + j] += a * c
                conv = nxt
            desc = " * ".join("{" + ",".join(f) + "}" for f in factors)
            for k, value in enumerate(conv):
                b.assign(k, value, f"R-join: {desc}")

    # Completion: a single missing entry is forced by the alternating sum.
    missing = b.unknown_dims()
    if len(missing) == 1:
        i = missing[0]
        partial = sum(
            ((-1) ** j * e for j, e in enumerate(b.entries) if e is not UNKNOWN),
            Fraction(0),
        )
        b.assign(i, (-1) ** i * (chi - partial), f"R-atiyah: completion against chi_orb = {chi}")

    vector = b.build()
    if vector.fully_known and vector.alternating_sum() != chi:
        raise ContradictoryRules(
            f"fully known vector {vector} has alternating sum "
            f"{vector.alternating_sum()} != chi_orb = {chi}"
        )
    return vector


def atiyah_check(nerve: Nerve, b: BettiVector) -> bool:
    """Does the alternating Betti sum equal the Euler characteristic exactly?"""
    if not b.fully_known:
        raise UnknownEntries("vector has Unknown entries")
    return b.alternating_sum() == chi_orb(nerve)


@dataclass(frozen=True)
class Beta2Bound:
    value: Fraction
    provenance: str
    vector: BettiVector


def betti_lower_bound_dim2(nerve: Nerve) -> Beta2Bound:
    """Certified lower bound for the dimension-2 entry, for nerves of dim <= 2.

    With W infinite and no chains above dimension 3, the alternating-sum
    identity gives chi_orb <= beta_2; an exact entry from the rule engine
    can only improve the bound.
    """
    if nerve.dimension > 2:
        raise DimensionTooHigh(f"nerve dimension {nerve.dimension} > 2")
    if classify(nerve.spec, nerve.vertices).spherical:
        raise FiniteGroup("the full vertex set is spherical, so W is finite")
    chi = chi_orb(nerve)
    vector = betti(nerve)
    value = Fraction(0)
    provenance = "trivial: entries are nonnegative"
    if chi > value:
        value = chi
        provenance = f"alternating-sum bound: chi_orb = {chi} <= beta_2"
    exact = vector.get(2)
    if exact is not UNKNOWN and exact >= value:
        value = exact
        provenance = f"exact entry: {vector.provenance_for(2)}"
    return Beta2Bound(value, provenance, vector)
