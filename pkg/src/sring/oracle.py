"""Brute-force oracle: enumeration, isomorphism search, and coset closure.

Everything here is exhaustive and bound-guarded; it exists to cross-check
the structural machinery, so it shares as little as possible with it.  The
enumerator walks classes of the smallest unassigned element, pruned by the
partial closure; candidate classes decompose over divisor classes into
cosets of a unit subgroup, and unit multiples of a chosen class are pinned
at once since they are classes of the same ring.
"""

from __future__ import annotations

import warnings
from dataclasses import dataclass
from functools import lru_cache, reduce
from itertools import product
from math import gcd
from typing import Iterable, Optional

from .core import SRing, _wl_stabilize, full_sring, refines, validate
from .errors import (
    CosetClosureNotCoset,
    IntersectionNotAnSRing,
    LimitExceeded,
    TheoryViolation,
    ValidationError,
)
from .modarith import divisors, subgroup, unit_subgroups, units
from .sections import is_quasidense
from .similarities import Similarity, similarities

__all__ = [
    "ENUMERATE_BOUND",
    "ISOMORPHISM_BOUND",
    "COSET_CLOSURE_BOUND",
    "Isomorphism",
    "enumerate_srings",
    "find_isomorphism",
    "verify_isomorphism",
    "phi_infty",
    "is_separable_bruteforce",
    "intersect",
    "coset_closure",
]

ENUMERATE_BOUND = 36
ISOMORPHISM_BOUND = 20
COSET_CLOSURE_BOUND = 16


@dataclass(frozen=True)
class Isomorphism:
    """A normalized bijection of Z_n inducing a similarity, as a value table."""

    n: int
    table: tuple[int, ...]

    def __call__(self, x: int) -> int:
        return self.table[x % self.n]

    def to_json_dict(self) -> dict:
        return {"table": list(self.table)}


# -- enumeration of all S-rings ----------------------------------------------


def _stabilize_partition(n: int, classes: Iterable[frozenset[int]]) -> tuple[frozenset[int], ...]:
    class_of = [0] * n
    for i, cls in enumerate(classes):
        for x in cls:
            class_of[x] = i
    stable = _wl_stabilize(n, class_of)
    return tuple(frozenset(c) for c in stable)


def _conv_constant_on(n: int, xs: frozenset[int], ys: frozenset[int], cls: frozenset[int]) -> bool:
    counts = [0] * n
    for x in xs:
        for y in ys:
            counts[(x + y) % n] += 1
    vals = {counts[z] for z in cls}
    return len(vals) == 1


def _candidate_classes(
    n: int,
    anchor: int,
    region: frozenset[int],
    subgroups: tuple[tuple[int, ...], ...],
    dclass: tuple[int, ...],
) -> list[frozenset[int]]:
    """Possible classes of ``anchor`` inside ``region``, by unit-orbit shape.

    Within one ring, elements of a class sharing a divisor class form a
    single coset of the class's unit stabilizer, so candidates are unions of
    one orbit of some unit subgroup per divisor class.
    """
    out: set[frozenset[int]] = set()
    other_divisors = sorted({dclass[x] for x in region if dclass[x] != dclass[anchor]})
    for sub in subgroups:
        base = frozenset((h * anchor) % n for h in sub)
        if not base <= region:
            continue
        option_lists = []
        for d in other_divisors:
            elems = sorted(x for x in region if dclass[x] == d)
            orbits = []
            seen: set[int] = set()
            for x in elems:
                if x in seen:
                    continue
                orb = frozenset((h * x) % n for h in sub)
                seen |= orb
                if orb <= region:
                    orbits.append(orb)
            option_lists.append([None] + orbits)
        for combo in product(*option_lists):
            cand = base
            for orb in combo:
                if orb is not None:
                    cand |= orb
            neg = frozenset((-x) % n for x in cand)
            if neg != cand and neg & cand:
                continue
            if not _conv_constant_on(n, cand, cand, cand):
                continue
            if neg != cand and not _conv_constant_on(n, cand, neg, cand):
                continue
            out.add(cand)
    return sorted(out, key=sorted)


@lru_cache(maxsize=None)
def _enumerate_cached(n: int) -> tuple[SRing, ...]:
    if n == 1:
        return (SRing(1, [[0]], check=False),)
    unit_elems = units(n).elements
    subgroups = unit_subgroups(n)
    dclass = tuple(gcd(x, n) for x in range(n))
    found: set[tuple[tuple[int, ...], ...]] = set()

    def rec(classes: tuple[frozenset[int], ...], pinned: frozenset[frozenset[int]]) -> None:
        unassigned = sorted(
            x for cls in classes if cls not in pinned for x in cls
        )
        if not unassigned:
            found.add(tuple(sorted(tuple(sorted(c)) for c in classes)))
            return
        anchor = unassigned[0]
        region = next(cls for cls in classes if anchor in cls)
        for cand in _candidate_classes(n, anchor, region, subgroups, dclass):
            refined_of = [0] * n
            ids: dict[tuple[int, bool], int] = {}
            for i, cls in enumerate(classes):
                for x in cls:
                    refined_of[x] = ids.setdefault((i, x in cand), len(ids))
            stable = tuple(frozenset(c) for c in _wl_stabilize(n, refined_of))
            stable_set = set(stable)
            if cand not in stable_set or not pinned <= stable_set:
                continue
            orbit = {frozenset((k * x) % n for x in cand) for k in unit_elems}
            assert orbit <= stable_set, "unit multiple of a class must be a class"
            singletons = {cls for cls in stable if len(cls) == 1}
            rec(stable, pinned | orbit | singletons)

    start = _stabilize_partition(n, [frozenset({0}), frozenset(range(1, n))])
    rec(start, frozenset({frozenset({0})}))
    rings = sorted(found)
    return tuple(validate(n, cls) for cls in rings)


def enumerate_srings(n: int, *, max_n: int = ENUMERATE_BOUND) -> list[SRing]:
    """Every S-ring over Z_n, canonically sorted."""
    if n < 1:
        raise ValueError(f"group order must be positive, got {n}")
    if n > max_n:
        raise LimitExceeded(f"enumeration over Z_{n} exceeds the bound {max_n}")
    return list(_enumerate_cached(n))


# -- isomorphism search --------------------------------------------------------


def verify_isomorphism(phi: Similarity, iso: Isomorphism) -> bool:
    """Independent set-level recheck: f(X + y) == image(X) + f(y) for all X, y."""
    a, b = phi.source, phi.target
    n = a.n
    if sorted(iso.table) != list(range(n)) or iso.table[0] != 0:
        return False
    for i, cls in enumerate(a.classes):
        img = phi.image_of(i)
        for y in range(n):
            lhs = {iso.table[(x + y) % n] for x in cls}
            rhs = {(x + iso.table[y]) % n for x in img}
            if lhs != rhs:
                return False
    return True


def find_isomorphism(
    phi: Similarity, *, max_n: int = ISOMORPHISM_BOUND
) -> Optional[Isomorphism]:
    """A normalized bijection inducing the similarity, or None.

    Searches values in increasing order, so the result is deterministic.
    """
    a, b = phi.source, phi.target
    n = a.n
    if n > max_n:
        raise LimitExceeded(f"isomorphism search over Z_{n} exceeds the bound {max_n}")
    table = [-1] * n
    table[0] = 0
    used = [False] * n
    used[0] = True

    def feasible(y: int, v: int) -> bool:
        for y2 in range(y):
            w = table[y2]
            if b.class_of[(v - w) % n] != phi.class_map[a.class_of[(y - y2) % n]]:
                return False
        return True

    def search(y: int) -> bool:
        if y == n:
            return True
        for v in b.classes[phi.class_map[a.class_of[y]]]:
            if not used[v] and feasible(y, v):
                table[y] = v
                used[v] = True
                if search(y + 1):
                    return True
                used[v] = False
                table[y] = -1
        return False

    if not search(1):
        return None
    iso = Isomorphism(n, tuple(table))
    if not verify_isomorphism(phi, iso):  # pragma: no cover - search invariant
        raise TheoryViolation("search produced a non-isomorphism")
    return iso


def phi_infty(a: SRing, *, max_n: int = ISOMORPHISM_BOUND) -> list[Similarity]:
    """Similarities of ``a`` induced by at least one bijection of Z_n."""
    realized = [
        phi for phi in similarities(a, a) if find_isomorphism(phi, max_n=max_n) is not None
    ]
    by_map = {phi.class_map for phi in realized}
    for phi in realized:
        if phi.inverse().class_map not in by_map:  # pragma: no cover - theory
            raise TheoryViolation("realized similarities are not inverse-closed")
        for psi in realized:
            if phi.then(psi).class_map not in by_map:  # pragma: no cover - theory
                raise TheoryViolation("realized similarities are not composition-closed")
    return realized


def is_separable_bruteforce(a: SRing, *, max_n: int = ISOMORPHISM_BOUND) -> bool:
    """True when every similarity of ``a`` is induced by some bijection."""
    return len(phi_infty(a, max_n=max_n)) == len(similarities(a, a))


# -- module intersection and coset closure ------------------------------------


def intersect(a: SRing, b: SRing) -> SRing:
    """The largest common coarsening: join of the two partitions."""
    if a.n != b.n:
        raise ValueError("rings live over different groups")
    n = a.n
    parent = list(range(n))

    def find(x: int) -> int:
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    def union(x: int, y: int) -> None:
        rx, ry = find(x), find(y)
        if rx != ry:
            parent[rx] = ry

    for ring in (a, b):
        for cls in ring.classes:
            for x in cls[1:]:
                union(cls[0], x)
    blocks: dict[int, list[int]] = {}
    for x in range(n):
        blocks.setdefault(find(x), []).append(x)
    try:
        return validate(n, blocks.values())
    except ValidationError as exc:  # pragma: no cover - guaranteed by theory
        raise IntersectionNotAnSRing(str(exc)) from exc


def _is_coset(n: int, cls: tuple[int, ...]) -> bool:
    shift = frozenset((x - cls[0]) % n for x in cls)
    return n % len(cls) == 0 and shift == subgroup(n, len(cls))


def _coset_rings_refining(a: SRing) -> list[SRing]:
    """All S-rings refining ``a`` whose every class is a coset."""
    n = a.n
    unit_elems = units(n).elements
    out: list[SRing] = []

    def rec(classes: tuple[frozenset[int], ...], pinned: frozenset[frozenset[int]]) -> None:
        unassigned = sorted(x for cls in classes if cls not in pinned for x in cls)
        if not unassigned:
            out.append(SRing(n, [tuple(sorted(c)) for c in classes], check=False))
            return
        anchor = unassigned[0]
        region = next(cls for cls in classes if anchor in cls)
        host = frozenset(a.classes[a.class_of[anchor]])
        for d in divisors(n):
            coset = frozenset((anchor + h) % n for h in subgroup(n, d))
            if not (coset <= region and coset <= host):
                continue
            neg = frozenset((-x) % n for x in coset)
            if neg != coset and neg & coset:
                continue
            refined_of = [0] * n
            ids: dict[tuple[int, bool], int] = {}
            for i, cls in enumerate(classes):
                for x in cls:
                    refined_of[x] = ids.setdefault((i, x in coset), len(ids))
            stable = tuple(frozenset(c) for c in _wl_stabilize(n, refined_of))
            stable_set = set(stable)
            if coset not in stable_set or not pinned <= stable_set:
                continue
            orbit = {frozenset((k * x) % n for x in coset) for k in unit_elems}
            assert orbit <= stable_set, "unit multiple of a class must be a class"
            if any(
                len({a.class_of[x] for x in cls}) > 1 for cls in orbit
            ):
                continue  # a pinned class would straddle classes of the input
            singletons = {cls for cls in stable if len(cls) == 1}
            rec(stable, pinned | orbit | singletons)

    start = _stabilize_partition(
        a.n, [frozenset({0}), frozenset(range(1, n))] if n > 1 else [frozenset({0})]
    )
    if not refines(full_sring(n), a):  # pragma: no cover - trivially true
        raise TheoryViolation("full ring does not refine the input")
    rec(start, frozenset({frozenset({0})}) if n > 1 else frozenset({frozenset({0})}))
    kept = []
    for ring in out:
        if refines(ring, a) and all(_is_coset(n, cls) for cls in ring.classes):
            kept.append(ring)
    return sorted(kept, key=lambda r: r.classes)


def coset_closure(a: SRing, *, max_n: int = COSET_CLOSURE_BOUND) -> SRing:
    """Intersection of all coset S-rings whose partition refines ``a``'s.

    For quasidense input the result is itself a coset S-ring; for other
    input that can fail, which is reported as a warning rather than an
    error.
    """
    if a.n > max_n:
        raise LimitExceeded(f"coset closure over Z_{a.n} exceeds the bound {max_n}")
    rings = _coset_rings_refining(a)
    if not rings:  # pragma: no cover - the full ring always qualifies
        raise TheoryViolation("no coset S-ring refines the input")
    result = reduce(intersect, rings)
    if not refines(result, a):  # pragma: no cover - theory
        raise TheoryViolation("coset closure does not refine the input")
    if not all(_is_coset(a.n, cls) for cls in result.classes):
        if is_quasidense(a):  # pragma: no cover - theory
            raise TheoryViolation("coset closure of a quasidense ring must be a coset ring")
        warnings.warn(
            f"coset closure over Z_{a.n} is not a coset ring", CosetClosureNotCoset
        )
    return result
