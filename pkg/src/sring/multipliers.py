"""Multiplier families over distinguished sections and the separability test.

A multiplier assigns to every distinguished section a unit of its order,
consistently under taking subsections and under projective transport.  An
outer multiplier assigns instead a coset of the section's class-stabilizing
units.  Separability of a quasidense ring is equivalent to every outer
multiplier being covered by a plain multiplier.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable, Optional

from .core import SRing
from .errors import TheoryViolation
from .modarith import unit_mod, units
from .sections import (
    Section,
    _proj_component,
    frs0,
    is_quasidense,
    reduce_to_quasidense,
    restrict_to,
)

__all__ = [
    "AutStabilizer",
    "Multiplier",
    "OuterMultiplier",
    "aut_stabilizer",
    "mult_group",
    "fmult_group",
    "theta",
    "is_valid_multiplier",
    "is_valid_outer_multiplier",
    "SeparabilityReport",
    "is_separable",
]


@dataclass(frozen=True)
class AutStabilizer:
    """Units fixing every class of the restriction to one section."""

    section: Section
    elements: tuple[int, ...]


def aut_stabilizer(a: SRing, s: Section) -> AutStabilizer:
    hit = a._cache.setdefault("aut_stabilizers", {})
    if s not in hit:
        rs = restrict_to(a, s)
        m = s.m
        keep = []
        for k in units(m).elements:
            if all(
                frozenset((k * x) % m for x in cls) == frozenset(cls)
                for cls in rs.classes
            ):
                keep.append(k)
        hit[s] = AutStabilizer(s, tuple(keep))
    return hit[s]


def _is_subsection(child: Section, parent: Section) -> bool:
    return child.l % parent.l == 0 and parent.u % child.u == 0


class Multiplier:
    """A consistent choice of one unit per distinguished section."""

    def __init__(self, entries: Iterable[tuple[Section, int]]):
        self.entries = tuple(sorted(entries))
        self._by_section = dict(self.entries)

    def unit_for(self, s: Section) -> int:
        return self._by_section[s]

    @property
    def sections(self) -> tuple[Section, ...]:
        return tuple(s for s, _ in self.entries)

    def canonical_vector(self) -> tuple[int, ...]:
        return tuple(k for _, k in self.entries)

    def __mul__(self, other: "Multiplier") -> "Multiplier":
        if self.sections != other.sections:
            raise ValueError("multipliers are defined over different section families")
        return Multiplier(
            (s, unit_mod(k * other.unit_for(s), s.m)) for s, k in self.entries
        )

    def inverse(self) -> "Multiplier":
        return Multiplier(
            (s, unit_mod(pow(k, -1, s.m), s.m) if s.m > 1 else 1)
            for s, k in self.entries
        )

    def __eq__(self, other: object) -> bool:
        return isinstance(other, Multiplier) and self.entries == other.entries

    def __hash__(self) -> int:
        return hash(self.entries)

    def __repr__(self) -> str:
        body = ", ".join(f"({s.l},{s.u})->{k}" for s, k in self.entries)
        return f"Multiplier[{body}]"

    def to_json_list(self) -> list[dict]:
        return [{"l": s.l, "u": s.u, "k": k} for s, k in self.entries]


class OuterMultiplier:
    """A consistent choice of one stabilizer coset per distinguished section."""

    def __init__(self, entries: Iterable[tuple[Section, tuple[int, ...], int]]):
        canon = []
        for s, stab, rep in entries:
            coset = frozenset(unit_mod(e * rep, s.m) for e in stab)
            canon.append((s, tuple(sorted(stab)), min(coset), coset))
        canon.sort()
        self.entries = tuple((s, stab, rep) for s, stab, rep, _ in canon)
        self._cosets = {s: coset for s, _, _, coset in canon}

    def coset_for(self, s: Section) -> frozenset[int]:
        return self._cosets[s]

    def rep_for(self, s: Section) -> int:
        return min(self._cosets[s])

    @property
    def sections(self) -> tuple[Section, ...]:
        return tuple(s for s, _, _ in self.entries)

    def canonical_vector(self) -> tuple[int, ...]:
        return tuple(rep for _, _, rep in self.entries)

    def __mul__(self, other: "OuterMultiplier") -> "OuterMultiplier":
        if self.sections != other.sections:
            raise ValueError("outer multipliers are defined over different section families")
        return OuterMultiplier(
            (s, stab, unit_mod(rep * other.rep_for(s), s.m))
            for s, stab, rep in self.entries
        )

    def __eq__(self, other: object) -> bool:
        return isinstance(other, OuterMultiplier) and self.entries == other.entries

    def __hash__(self) -> int:
        return hash(self.entries)

    def __repr__(self) -> str:
        body = ", ".join(
            f"({s.l},{s.u})->{sorted(self._cosets[s])}" for s, _, _ in self.entries
        )
        return f"OuterMultiplier[{body}]"

    def to_json_list(self) -> list[dict]:
        return [
            {"l": s.l, "u": s.u, "k": rep, "stabilizer": list(stab)}
            for s, stab, rep in self.entries
        ]


# -- enumeration -------------------------------------------------------------


def _ordered_sections(a: SRing) -> list[Section]:
    return sorted(frs0(a), key=lambda s: (-s.m, s.l, s.u))


def _multiplier_compatible(s: Section, k: int, chosen: dict[Section, int], comp) -> bool:
    for t, kt in chosen.items():
        if _is_subsection(s, t) and unit_mod(kt, s.m) != k:
            return False
        if _is_subsection(t, s) and unit_mod(k, t.m) != kt:
            return False
        if comp[s] == comp[t] and k != kt:
            return False
    return True


def mult_group(a: SRing) -> list[Multiplier]:
    """All multipliers of a quasidense ring, in canonical order."""
    if not is_quasidense(a):
        raise ValueError("multiplier enumeration requires a quasidense ring")
    secs = _ordered_sections(a)
    comp = _proj_component(a.n)
    out: list[Multiplier] = []

    def extend(idx: int, chosen: dict[Section, int]) -> None:
        if idx == len(secs):
            out.append(Multiplier(chosen.items()))
            return
        s = secs[idx]
        for k in units(s.m).elements:
            if _multiplier_compatible(s, k, chosen, comp):
                chosen[s] = k
                extend(idx + 1, chosen)
                del chosen[s]

    extend(0, {})
    return sorted(out, key=Multiplier.canonical_vector)


def _outer_compatible(
    s: Section,
    coset: frozenset[int],
    chosen: dict[Section, tuple[int, frozenset[int]]],
    comp,
) -> bool:
    rep = min(coset)
    for t, (rep_t, coset_t) in chosen.items():
        if _is_subsection(s, t) and unit_mod(rep_t, s.m) not in coset:
            return False
        if _is_subsection(t, s) and unit_mod(rep, t.m) not in coset_t:
            return False
        if comp[s] == comp[t] and coset != coset_t:
            return False
    return True


def fmult_group(a: SRing) -> list[OuterMultiplier]:
    """All outer multipliers of a quasidense ring, in canonical order."""
    if not is_quasidense(a):
        raise ValueError("outer multiplier enumeration requires a quasidense ring")
    secs = _ordered_sections(a)
    comp = _proj_component(a.n)
    stabs = {s: aut_stabilizer(a, s).elements for s in secs}
    cosets: dict[Section, list[frozenset[int]]] = {}
    for s in secs:
        seen: list[frozenset[int]] = []
        for k in units(s.m).elements:
            cs = frozenset(unit_mod(k * e, s.m) for e in stabs[s])
            if cs not in seen:
                seen.append(cs)
        cosets[s] = seen
    out: list[OuterMultiplier] = []

    def extend(idx: int, chosen: dict[Section, tuple[int, frozenset[int]]]) -> None:
        if idx == len(secs):
            out.append(
                OuterMultiplier(
                    (s, stabs[s], chosen[s][0]) for s in secs
                )
            )
            return
        s = secs[idx]
        for coset in cosets[s]:
            if _outer_compatible(s, coset, chosen, comp):
                chosen[s] = (min(coset), coset)
                extend(idx + 1, chosen)
                del chosen[s]

    extend(0, {})
    return sorted(out, key=OuterMultiplier.canonical_vector)


# -- validation and the quotient map -----------------------------------------


def is_valid_multiplier(a: SRing, mu: Multiplier) -> bool:
    """Pairwise restriction and transport checks over the full section family."""
    comp = _proj_component(a.n)
    secs = mu.sections
    if set(secs) != set(frs0(a)):
        return False
    for s in secs:
        if unit_mod(mu.unit_for(s), s.m) != mu.unit_for(s) or mu.unit_for(s) not in units(s.m):
            return False
        for t in secs:
            if _is_subsection(s, t) and unit_mod(mu.unit_for(t), s.m) != mu.unit_for(s):
                return False
            if comp[s] == comp[t] and mu.unit_for(s) != mu.unit_for(t):
                return False
    return True


def is_valid_outer_multiplier(a: SRing, om: OuterMultiplier) -> bool:
    comp = _proj_component(a.n)
    secs = om.sections
    if set(secs) != set(frs0(a)):
        return False
    for s in secs:
        if om.coset_for(s) != frozenset(
            unit_mod(e * om.rep_for(s), s.m) for e in aut_stabilizer(a, s).elements
        ):
            return False
        for t in secs:
            if _is_subsection(s, t):
                if any(unit_mod(k, s.m) not in om.coset_for(s) for k in om.coset_for(t)):
                    return False
            if comp[s] == comp[t] and om.coset_for(s) != om.coset_for(t):
                return False
    return True


def theta(a: SRing, mu: Multiplier) -> OuterMultiplier:
    """Project a multiplier to the outer multiplier of its stabilizer cosets."""
    om = OuterMultiplier(
        (s, aut_stabilizer(a, s).elements, k) for s, k in mu.entries
    )
    if not is_valid_outer_multiplier(a, om):  # pragma: no cover - theory
        raise TheoryViolation(f"projection of {mu!r} is not an outer multiplier")
    return om


# -- the decision procedure ---------------------------------------------------


@dataclass
class SeparabilityReport:
    """Outcome of the separability decision on one ring."""

    n: int
    separable: bool
    reduct: SRing
    trace: list[Section]
    mult_order: int
    fmult_order: int
    theta_image_order: int
    missing: Optional[OuterMultiplier] = field(default=None)

    def to_json_dict(self) -> dict:
        return {
            "n": self.n,
            "separable": self.separable,
            "reduct": self.reduct.to_json_dict(),
            "trace": [s.to_json_dict() for s in self.trace],
            "mult_order": self.mult_order,
            "fmult_order": self.fmult_order,
            "theta_image_order": self.theta_image_order,
            "missing": None if self.missing is None else self.missing.to_json_list(),
        }


def is_separable(a: SRing) -> tuple[bool, SeparabilityReport]:
    """Decide separability: reduce to quasidense, then test surjectivity of theta."""
    reduct, trace = reduce_to_quasidense(a)
    mult = mult_group(reduct)
    fmult = fmult_group(reduct)
    image = {theta(reduct, mu) for mu in mult}
    missing = sorted(
        (om for om in fmult if om not in image),
        key=OuterMultiplier.canonical_vector,
    )
    separable = not missing
    report = SeparabilityReport(
        n=a.n,
        separable=separable,
        reduct=reduct,
        trace=trace,
        mult_order=len(mult),
        fmult_order=len(fmult),
        theta_image_order=len(image),
        missing=missing[0] if missing else None,
    )
    return separable, report
