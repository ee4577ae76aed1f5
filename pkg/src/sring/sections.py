"""Sections of Z_n, projective equivalence, and the quasidense reduction.

A section is a pair of nested subgroups H_l <= H_u, identified by their
orders (l, u) since Z_n has one subgroup per divisor.  Section S' = (l', u')
is a multiple of S = (l, u) when H_u * H_l' = H_u' and H_u inter H_l' = H_l;
the transitive closure of this relation over all sections of Z_n is
projective equivalence, and along it every section of order m carries a
canonical identification with Z_m given by multiplication by a unit.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from math import gcd
from typing import Optional

from .core import (
    SRing,
    a_subgroups,
    closure,
    full_sring,
    generated,
    is_wreath,
    radical,
    restriction,
    sections_lattice,
    tensor,
)
from .errors import NotASection, NotEquivalent, SingularConditionViolated, TheoryViolation
from .modarith import is_prime, unit_mod

__all__ = [
    "Section",
    "ProjClass",
    "ring_sections",
    "restrict_to",
    "is_multiple",
    "proj_classes",
    "f_unit",
    "principal_sections",
    "frs0",
    "is_quasidense",
    "singular_witness",
    "s_extension",
    "reduce_to_quasidense",
]


@dataclass(frozen=True, order=True)
class Section:
    """Nested subgroup pair of Z_n, written by subgroup orders l | u | n."""

    n: int
    l: int
    u: int

    def __post_init__(self) -> None:
        if self.l < 1 or self.u % self.l or self.n % self.u:
            raise NotASection(f"({self.l}, {self.u}) is not a section of Z_{self.n}")

    @property
    def m(self) -> int:
        """Order of the section quotient H_u / H_l."""
        return self.u // self.l

    @property
    def is_trivial(self) -> bool:
        return self.l == self.u

    def to_json_dict(self) -> dict:
        return {"l": self.l, "u": self.u}


@dataclass(frozen=True)
class ProjClass:
    """A class of projectively equivalent sections, all of the same order."""

    members: tuple[Section, ...]
    smallest: Optional[Section]
    largest: Optional[Section]


def ring_sections(a: SRing) -> tuple[Section, ...]:
    """All sections of Z_n whose endpoints are unions of classes of ``a``."""
    return tuple(Section(a.n, l, u) for l, u in sections_lattice(a))


def restrict_to(a: SRing, s: Section) -> SRing:
    """Restriction of ``a`` to the section, over Z_m in canonical coordinates."""
    if s.n != a.n:
        raise NotASection(f"{s} does not live over Z_{a.n}")
    return restriction(a, s.l, s.u)


def is_multiple(sp: Section, s: Section) -> bool:
    """True when ``sp`` is a multiple of ``s``: lcm(u, l') = u' and gcd(u, l') = l."""
    if sp.n != s.n:
        raise ValueError("sections live over different groups")
    g = gcd(s.u, sp.l)
    return s.u * sp.l // g == sp.u and g == s.l


@lru_cache(maxsize=None)
def _all_sections(n: int) -> tuple[Section, ...]:
    from .modarith import divisors

    return tuple(
        Section(n, l, u) for l in divisors(n) for u in divisors(n) if u % l == 0
    )


@lru_cache(maxsize=None)
def _proj_graph(n: int) -> dict[Section, tuple[Section, ...]]:
    secs = _all_sections(n)
    adj: dict[Section, list[Section]] = {s: [] for s in secs}
    for s in secs:
        for t in secs:
            if s != t and (is_multiple(t, s) or is_multiple(s, t)):
                adj[s].append(t)
    return {s: tuple(ts) for s, ts in adj.items()}


@lru_cache(maxsize=None)
def _proj_component(n: int) -> dict[Section, int]:
    graph = _proj_graph(n)
    comp: dict[Section, int] = {}
    next_id = 0
    for s in _all_sections(n):
        if s in comp:
            continue
        queue = [s]
        comp[s] = next_id
        while queue:
            cur = queue.pop()
            for t in graph[cur]:
                if t not in comp:
                    comp[t] = next_id
                    queue.append(t)
        next_id += 1
    return comp


def _unique_extreme(members: tuple[Section, ...], *, smallest: bool) -> Optional[Section]:
    if smallest:
        cands = [s for s in members if all(is_multiple(t, s) for t in members)]
    else:
        cands = [s for s in members if all(is_multiple(s, t) for t in members)]
    return cands[0] if len(cands) == 1 else None


def proj_classes(n: int, sections: tuple[Section, ...] | list[Section]) -> list[ProjClass]:
    """Partition the given sections by projective equivalence over Z_n.

    Equivalence is the transitive closure of the multiple relation over all
    sections of Z_n, so two inputs may be linked through sections that are
    not in the input.
    """
    comp = _proj_component(n)
    buckets: dict[int, list[Section]] = {}
    for s in sections:
        if s.n != n:
            raise ValueError(f"{s} does not live over Z_{n}")
        buckets.setdefault(comp[s], []).append(s)
    out = []
    for _, group in sorted(buckets.items(), key=lambda kv: min(kv[1])):
        members = tuple(sorted(set(group)))
        out.append(
            ProjClass(
                members,
                _unique_extreme(members, smallest=True),
                _unique_extreme(members, smallest=False),
            )
        )
    return out


def _step_unit(frm: Section, to: Section) -> int:
    """Coordinate change along one edge of the multiple relation."""
    m = frm.m
    if is_multiple(to, frm):
        return unit_mod(to.u // frm.u, m)
    if is_multiple(frm, to):
        return unit_mod(pow(frm.u // to.u, -1, m), m) if m > 1 else 1
    raise NotEquivalent(f"{frm} and {to} are not directly related")


def f_unit(s: Section, t: Section) -> int:
    """The unit c mod m carrying canonical coordinates of ``s`` to those of ``t``.

    The unit is composed along a path in the multiple relation; it does not
    depend on the chosen path.
    """
    if s.n != t.n:
        raise NotEquivalent("sections live over different groups")
    if s.m != t.m or _proj_component(s.n)[s] != _proj_component(t.n)[t]:
        raise NotEquivalent(f"{s} and {t} are not projectively equivalent")
    if s == t:
        return 1
    graph = _proj_graph(s.n)
    parent: dict[Section, Section] = {s: s}
    queue = [s]
    while queue:
        cur = queue.pop(0)
        if cur == t:
            break
        for nxt in graph[cur]:
            if nxt not in parent:
                parent[nxt] = cur
                queue.append(nxt)
    unit = 1
    cur = t
    while cur != s:
        prev = parent[cur]
        unit = unit * _step_unit(prev, cur) % t.m if t.m > 1 else 1
        cur = prev
    return unit_mod(unit, t.m)


# -- distinguished sections of a ring ---------------------------------------


def principal_sections(a: SRing) -> tuple[Section, ...]:
    """The sections generated-subgroup-over-radical of each class of ``a``."""
    hit = a._cache.get("principal_sections")
    if hit is None:
        out = set()
        secs = set(sections_lattice(a))
        for cls in a.classes:
            l = radical(a.n, cls)
            u = generated(a.n, cls)
            if (l, u) not in secs:  # pragma: no cover - guaranteed by theory
                raise TheoryViolation(
                    f"radical/generated pair ({l}, {u}) of {list(cls)} is not a section"
                )
            out.add(Section(a.n, l, u))
        hit = a._cache["principal_sections"] = tuple(sorted(out))
    return hit  # type: ignore[return-value]


def frs0(a: SRing) -> tuple[Section, ...]:
    """Sections projectively equivalent to a subsection of a principal section."""
    hit = a._cache.get("frs0")
    if hit is None:
        secs = ring_sections(a)
        principals = principal_sections(a)
        subprincipal = {
            q
            for q in secs
            if any(q.l % p.l == 0 and p.u % q.u == 0 for p in principals)
        }
        comp = _proj_component(a.n)
        good = {comp[q] for q in subprincipal}
        hit = a._cache["frs0"] = tuple(s for s in secs if comp[s] in good)
    return hit  # type: ignore[return-value]


def is_quasidense(a: SRing) -> bool:
    """True when no section of ``a`` has rank 2 and composite order."""
    hit = a._cache.get("is_quasidense")
    if hit is None:
        hit = _composite_rank2_section(a) is None
        a._cache["is_quasidense"] = hit
    return hit  # type: ignore[return-value]


def _composite_rank2_section(a: SRing) -> Optional[Section]:
    for s in ring_sections(a):
        if s.m > 1 and not is_prime(s.m) and restrict_to(a, s).rank == 2:
            return s
    return None


def singular_witness(a: SRing) -> Optional[tuple[ProjClass, Section]]:
    """A projective class witnessing non-quasidensity, with its smallest member.

    Returns None for quasidense rings.  Otherwise asserts the two structure
    conditions on the smallest/largest pair of the class: the ring is a
    wreath product over both bracketing sections, and the span between them
    decomposes as a tensor product.
    """
    witness = _composite_rank2_section(a)
    if witness is None:
        return None
    comp = _proj_component(a.n)
    members = tuple(t for t in ring_sections(a) if comp[t] == comp[witness])
    for t in members:
        if restrict_to(a, t).rank != 2:  # pragma: no cover - theory
            raise SingularConditionViolated(f"{t} is equivalent to {witness} but not rank 2")
    smallest = _unique_extreme(members, smallest=True)
    largest = _unique_extreme(members, smallest=False)
    if smallest is None or largest is None:
        raise SingularConditionViolated(
            f"no unique smallest/largest member among {members}"
        )
    l0, l1 = smallest.l, smallest.u
    u0, u1 = largest.l, largest.u
    if not (is_wreath(a, u0, l0) and is_wreath(a, u1, l1)):
        raise SingularConditionViolated(
            f"ring is not a wreath product over ({l0},{u0}) and ({l1},{u1})"
        )
    span = restriction(a, l0, u1)
    product = tensor(restriction(a, l0, l1), restriction(a, l0, u0))
    if span != product:
        raise SingularConditionViolated(
            f"no tensor decomposition between {smallest} and {largest}"
        )
    return ProjClass(members, smallest, largest), smallest


def s_extension(a: SRing, s: Section) -> SRing:
    """Close ``a`` together with all H_l-cosets inside H_u."""
    if s.n != a.n or (s.l, s.u) not in sections_lattice(a):
        raise NotASection(f"{s} is not a section of {a!r}")
    step_u = a.n // s.u
    step_l = a.n // s.l
    cosets = {
        frozenset((x + h) % a.n for h in range(0, a.n, step_l))
        for x in range(0, a.n, step_u)
    }
    result = closure(a.n, list(a.classes) + sorted(cosets, key=min))
    if restrict_to(result, s) != full_sring(s.m):  # pragma: no cover - theory
        raise TheoryViolation(f"extension did not fully split the section {s}")
    return result


def reduce_to_quasidense(a: SRing) -> tuple[SRing, list[Section]]:
    """Iterate singular-section extensions until the ring becomes quasidense.

    Returns the reduct and the list of sections extended at, in order.  Each
    extension strictly increases rank, and separability is preserved both
    ways, so the reduct decides separability of the input.
    """
    current = a
    trace: list[Section] = []
    while True:
        found = singular_witness(current)
        if found is None:
            return current, trace
        _, smallest = found
        extended = s_extension(current, smallest)
        if extended.rank <= current.rank:  # pragma: no cover - theory
            raise TheoryViolation(
                f"extension at {smallest} did not increase rank "
                f"({current.rank} -> {extended.rank})"
            )
        trace.append(smallest)
        current = extended
