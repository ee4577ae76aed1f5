"""Exact duality: character sums as cyclotomic integers and the dual S-ring.

Character values are computed in Z[x]/(Phi_n(x)) with integer coefficient
vectors, never floating point.  Two characters are equivalent for the dual
ring exactly when their value rows over all classes agree.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import Iterable

from .core import SRing
from .errors import DualNotAnSRing, ValidationError
from .modarith import cyclotomic_poly
from .sections import Section

__all__ = ["CyclotomicInt", "character_sum", "dual_sring", "dual_section"]


@dataclass(frozen=True)
class CyclotomicInt:
    """An element of Z[zeta_n], stored by coefficients modulo Phi_n."""

    n: int
    coeffs: tuple[int, ...]

    def __post_init__(self) -> None:
        deg = len(cyclotomic_poly(self.n)) - 1
        if len(self.coeffs) != deg:
            raise ValueError(
                f"expected {deg} coefficients modulo the {self.n}-th cyclotomic polynomial"
            )

    @classmethod
    def constant(cls, n: int, value: int) -> "CyclotomicInt":
        deg = len(cyclotomic_poly(n)) - 1
        return cls(n, (value,) + (0,) * (deg - 1))

    def __add__(self, other: "CyclotomicInt") -> "CyclotomicInt":
        if self.n != other.n:
            raise ValueError("cyclotomic integers of different conductors")
        return CyclotomicInt(
            self.n, tuple(x + y for x, y in zip(self.coeffs, other.coeffs))
        )

    def __neg__(self) -> "CyclotomicInt":
        return CyclotomicInt(self.n, tuple(-x for x in self.coeffs))


@lru_cache(maxsize=None)
def _power_table(n: int) -> tuple[tuple[int, ...], ...]:
    """Coefficient vectors of x^k modulo Phi_n for k = 0..n-1."""
    phi = cyclotomic_poly(n)
    deg = len(phi) - 1
    rows = []
    cur = [0] * deg
    cur[0] = 1
    for _ in range(n):
        rows.append(tuple(cur))
        top = cur[deg - 1]
        cur = [0] + cur[: deg - 1]
        if top:
            # x^deg = -(lower coefficients of Phi_n), as Phi_n is monic
            for i in range(deg):
                cur[i] -= top * phi[i]
    return tuple(rows)


def character_sum(n: int, xs: Iterable[int], a: int) -> CyclotomicInt:
    """Sum of zeta_n^(a*x) over the set, reduced modulo Phi_n."""
    table = _power_table(n)
    deg = len(table[0])
    acc = [0] * deg
    for x in xs:
        row = table[(a * x) % n]
        for i in range(deg):
            acc[i] += row[i]
    return CyclotomicInt(n, tuple(acc))


def dual_sring(a: SRing) -> SRing:
    """The S-ring on the character group, classes by equality of value rows."""
    hit = a._cache.get("dual")
    if hit is None:
        n = a.n
        rows: dict[tuple, list[int]] = {}
        for t in range(n):
            key = tuple(character_sum(n, cls, t).coeffs for cls in a.classes)
            rows.setdefault(key, []).append(t)
        try:
            hit = SRing(n, rows.values(), check=True)
        except ValidationError as exc:  # pragma: no cover - guaranteed by theory
            raise DualNotAnSRing(f"character partition of {a!r}: {exc}") from exc
        a._cache["dual"] = hit
    return hit  # type: ignore[return-value]


def dual_section(n: int, s: Section) -> Section:
    """The annihilator section: (l, u) maps to (n/u, n/l)."""
    if s.n != n:
        raise ValueError(f"{s} does not live over Z_{n}")
    return Section(n, n // s.u, n // s.l)
