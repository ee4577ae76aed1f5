"""S-rings over Z_n: the partition type, validation, closure, and structure maps.

An S-ring is a partition of the residues 0..n-1 whose classes span a subring
of the integral group ring of Z_n: {0} is a class, every class is closed
under negation up to pairing, and the product of any two class sums is a
constant-coefficient combination of class sums.
"""

from __future__ import annotations

from math import gcd
from typing import Iterable, Sequence

from .errors import (
    MissingIdentityClass,
    NotAPartition,
    NotASection,
    NotCoprime,
    NotInverseClosed,
    NotMultiplicativelyClosed,
    TheoryViolation,
    ValidationError,
)
from .modarith import divisors, subgroup

__all__ = [
    "SRing",
    "validate",
    "structure_constant",
    "closure",
    "a_subgroups",
    "sections_lattice",
    "restriction",
    "radical",
    "generated",
    "is_wreath",
    "tensor",
    "full_sring",
    "rank2_sring",
    "cyclotomic_sring",
    "refines",
]


def _canonical_classes(n: int, classes: Iterable[Iterable[int]]) -> tuple[tuple[int, ...], ...]:
    seen: set[int] = set()
    cleaned = []
    for raw in classes:
        cls = sorted(set(int(x) for x in raw))
        if not cls:
            raise NotAPartition("empty class")
        for x in cls:
            if not 0 <= x < n:
                raise NotAPartition(f"element {x} out of range for Z_{n}")
            if x in seen:
                raise NotAPartition(f"element {x} appears in two classes")
            seen.add(x)
        cleaned.append(tuple(cls))
    if len(seen) != n:
        missing = min(set(range(n)) - seen)
        raise NotAPartition(f"element {missing} is not covered")
    return tuple(sorted(cleaned, key=lambda c: c[0]))


class SRing:
    """An S-ring over Z_n, stored as the canonically ordered class partition.

    Classes are sorted internally and listed by smallest element, so equal
    rings compare equal.  Pass ``check=False`` only for partitions already
    known to satisfy the ring axioms.
    """

    def __init__(self, n: int, classes: Iterable[Iterable[int]], *, check: bool = True):
        self.n = int(n)
        if self.n < 1:
            raise NotAPartition(f"group order must be positive, got {n}")
        self.classes = _canonical_classes(self.n, classes)
        if self.classes[0] != (0,):
            raise MissingIdentityClass(
                f"the class of 0 is {self.classes[0]}, expected (0,)"
            )
        class_of = [0] * self.n
        for i, cls in enumerate(self.classes):
            for x in cls:
                class_of[x] = i
        self.class_of = tuple(class_of)
        self._products: dict[tuple[int, int], tuple[int, ...]] = {}
        self._restrictions: dict[tuple[int, int], "SRing"] = {}
        self._cache: dict[str, object] = {}
        if check:
            self._check_ring()

    # -- basic protocol ----------------------------------------------------

    @property
    def rank(self) -> int:
        return len(self.classes)

    def __eq__(self, other: object) -> bool:
        return (
            isinstance(other, SRing)
            and self.n == other.n
            and self.classes == other.classes
        )

    def __hash__(self) -> int:
        return hash((self.n, self.classes))

    def __repr__(self) -> str:
        body = ", ".join(str(list(c)) for c in self.classes)
        return f"SRing({self.n}; [{body}])"

    # -- structure ---------------------------------------------------------

    def inverse_class(self, i: int) -> int:
        return self.class_of[(-self.classes[i][0]) % self.n]

    def product_counts(self, i: int, j: int) -> tuple[int, ...]:
        """Coefficient vector of the class-sum product: counts of x+y at each residue."""
        key = (i, j) if i <= j else (j, i)
        hit = self._products.get(key)
        if hit is None:
            c = [0] * self.n
            for x in self.classes[key[0]]:
                for y in self.classes[key[1]]:
                    c[(x + y) % self.n] += 1
            hit = self._products[key] = tuple(c)
        return hit

    def _check_ring(self) -> None:
        n = self.n
        for i, cls in enumerate(self.classes):
            neg = sorted((-x) % n for x in cls)
            j = self.class_of[neg[0]]
            if list(self.classes[j]) != neg:
                raise NotInverseClosed(f"-1 * {list(cls)} is not a class")
        for i in range(self.rank):
            for j in range(i, self.rank):
                counts = self.product_counts(i, j)
                for cls in self.classes:
                    c0 = counts[cls[0]]
                    for z in cls[1:]:
                        if counts[z] != c0:
                            raise NotMultiplicativelyClosed(
                                f"product of {list(self.classes[i])} and "
                                f"{list(self.classes[j])} takes values {c0} and "
                                f"{counts[z]} on the class of {cls[0]}"
                            )

    # -- serialization -----------------------------------------------------

    def to_json_dict(self) -> dict:
        return {"n": self.n, "classes": [list(c) for c in self.classes]}

    @classmethod
    def from_json_dict(cls, data: dict, *, check: bool = True) -> "SRing":
        try:
            n = data["n"]
            classes = data["classes"]
        except (KeyError, TypeError) as exc:
            raise ValidationError(f"malformed S-ring object: {exc}") from exc
        return cls(n, classes, check=check)


def validate(n: int, classes: Iterable[Iterable[int]]) -> SRing:
    """Check the S-ring axioms and return the canonical representation.

    Raises NotAPartition, MissingIdentityClass, NotInverseClosed or
    NotMultiplicativelyClosed, naming the first violating witness.
    """
    return SRing(n, classes, check=True)


def structure_constant(a: SRing, x: int, y: int, z: int) -> int:
    """The coefficient of class z in the product of class sums x and y."""
    for idx in (x, y, z):
        if not 0 <= idx < a.rank:
            raise IndexError(f"class index {idx} out of range for rank {a.rank}")
    return a.product_counts(x, y)[a.classes[z][0]]


# -- Schur-Wielandt closure ------------------------------------------------


def _wl_stabilize(n: int, class_of: list[int]) -> list[list[int]]:
    """Refine a partition of Z_n until it satisfies the S-ring axioms.

    Each round splits classes by negation and by the coefficient profile of
    every pairwise class product; splits are monotone, so the loop reaches
    the coarsest S-ring partition refining the start.
    """
    while True:
        r = max(class_of) + 1
        classes: list[list[int]] = [[] for _ in range(r)]
        for z in range(n):
            classes[class_of[z]].append(z)
        sigs: list[list[int]] = [[class_of[z], class_of[-z % n]] for z in range(n)]
        for i in range(r):
            for j in range(i, r):
                c = [0] * n
                for x in classes[i]:
                    for y in classes[j]:
                        c[(x + y) % n] += 1
                for z in range(n):
                    sigs[z].append(c[z])
        ids: dict[tuple[int, ...], int] = {}
        new_class_of = [0] * n
        for z in range(n):
            key = tuple(sigs[z])
            new_class_of[z] = ids.setdefault(key, len(ids))
        if len(ids) == r:
            return classes
        class_of = new_class_of


def closure(n: int, seeds: Sequence[Iterable[int]]) -> SRing:
    """The smallest S-ring over Z_n whose module contains every seed set.

    Starts from the atoms of the boolean algebra generated by the seeds
    together with {0}, then refines to stability.
    """
    if n < 1:
        raise ValueError(f"group order must be positive, got {n}")
    seed_sets = []
    for raw in seeds:
        s = frozenset(int(x) % n for x in raw)
        if not s:
            raise ValueError("seed sets must be non-empty")
        seed_sets.append(s)
    ids: dict[tuple[bool, ...], int] = {}
    class_of = [0] * n
    for z in range(n):
        key = (z == 0,) + tuple(z in s for s in seed_sets)
        class_of[z] = ids.setdefault(key, len(ids))
    classes = _wl_stabilize(n, class_of)
    return SRing(n, classes, check=False)


def refines(finer: SRing, coarser: SRing) -> bool:
    """True when every class of ``coarser`` is a union of classes of ``finer``."""
    if finer.n != coarser.n:
        raise ValueError("rings live over different groups")
    return all(
        len({coarser.class_of[x] for x in cls}) == 1 for cls in finer.classes
    )


# -- subgroup lattice ------------------------------------------------------


def a_subgroups(a: SRing) -> tuple[int, ...]:
    """Orders of the subgroups of Z_n that are unions of classes of ``a``."""
    hit = a._cache.get("a_subgroups")
    if hit is None:
        out = []
        for d in divisors(a.n):
            h = subgroup(a.n, d)
            touched = {a.class_of[x] for x in h}
            if sum(len(a.classes[i]) for i in touched) == d:
                out.append(d)
        hit = a._cache["a_subgroups"] = tuple(out)
    return hit  # type: ignore[return-value]


def sections_lattice(a: SRing) -> tuple[tuple[int, int], ...]:
    """All pairs (l, u) with l | u, both orders of subgroups respected by ``a``."""
    hit = a._cache.get("sections_lattice")
    if hit is None:
        ds = a_subgroups(a)
        hit = a._cache["sections_lattice"] = tuple(
            (l, u) for l in ds for u in ds if u % l == 0
        )
    return hit  # type: ignore[return-value]


def restriction(a: SRing, l: int, u: int) -> SRing:
    """The induced S-ring on the section H_u / H_l, over Z_{u/l}.

    The element j*(n/u) + H_l maps to j mod (u/l).
    """
    key = (l, u)
    hit = a._restrictions.get(key)
    if hit is not None:
        return hit
    if (l, u) not in sections_lattice(a):
        raise NotASection(f"({l}, {u}) is not a section of {a!r}")
    step = a.n // u
    m = u // l
    images: dict[frozenset[int], None] = {}
    for cls in a.classes:
        if cls[0] % step:
            continue
        images[frozenset((x // step) % m for x in cls)] = None
    try:
        result = SRing(m, images.keys(), check=True)
    except ValidationError as exc:  # pragma: no cover - guaranteed by theory
        raise TheoryViolation(f"restriction to ({l}, {u}) is not an S-ring: {exc}") from exc
    a._restrictions[key] = result
    return result


def radical(n: int, xs: Iterable[int]) -> int:
    """Order of the largest subgroup H with H + X = X."""
    x = frozenset(int(v) % n for v in xs)
    if not x:
        raise ValueError("the radical of an empty set is undefined")
    best = 1
    for d in divisors(n)[1:]:
        h = subgroup(n, d)
        if all((g + v) % n in x for g in h for v in x):
            best = max(best, d)
    return best


def generated(n: int, xs: Iterable[int]) -> int:
    """Order of the subgroup of Z_n generated by the set."""
    g = n
    for v in xs:
        g = gcd(g, int(v) % n)
    return n // g


def is_wreath(a: SRing, u: int, l: int) -> bool:
    """True when every class outside H_u is a union of H_l-cosets."""
    if (l, u) not in sections_lattice(a):
        raise NotASection(f"({l}, {u}) is not a section of {a!r}")
    step = a.n // u
    return all(
        radical(a.n, cls) % l == 0 for cls in a.classes if cls[0] % step
    )


def tensor(a: SRing, b: SRing) -> SRing:
    """The S-ring over Z_{ab} whose classes are CRT images of class pairs."""
    if gcd(a.n, b.n) != 1:
        raise NotCoprime(f"orders {a.n} and {b.n} share a factor")
    n = a.n * b.n
    crt: dict[tuple[int, int], int] = {}
    for z in range(n):
        crt[(z % a.n, z % b.n)] = z
    classes = [
        frozenset(crt[(x % a.n, y % b.n)] for x in ca for y in cb)
        for ca in a.classes
        for cb in b.classes
    ]
    return SRing(n, classes, check=True)


# -- stock constructions ---------------------------------------------------


def full_sring(n: int) -> SRing:
    """The group ring itself: every class a singleton."""
    return SRing(n, [[x] for x in range(n)], check=False)


def rank2_sring(n: int) -> SRing:
    """The coarsest S-ring over Z_n (n >= 2): {0} and everything else."""
    if n < 2:
        raise ValueError("rank-2 ring needs n >= 2")
    return SRing(n, [[0], list(range(1, n))], check=False)


def cyclotomic_sring(n: int, unit_gens: Iterable[int]) -> SRing:
    """Orbit partition of the unit subgroup generated by ``unit_gens`` acting on Z_n."""
    gens = [g % n for g in unit_gens]
    for g in gens:
        if gcd(g, n) != 1:
            raise ValueError(f"{g} is not a unit modulo {n}")
    group = {1 % n if n > 1 else 0}
    while True:
        new = {(a * g) % n for a in group for g in gens} - group
        if not new:
            break
        group |= new
    seen: set[int] = set()
    classes = []
    for z in range(n):
        if z in seen:
            continue
        orbit = frozenset((k * z) % n for k in group) if n > 1 else frozenset({0})
        seen |= orbit
        classes.append(orbit)
    return SRing(n, classes, check=True)
