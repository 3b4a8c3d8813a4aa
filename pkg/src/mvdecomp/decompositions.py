"""Irreducible decompositions, Stanley decompositions, and Hilbert series.

The irredundant irreducible decomposition comes from the maximal corners of
the artinian closure: each corner, truncated back below the generator lcm,
is the exponent vector of one component m^a generated by pure variable
powers. Stanley decompositions cover the standard monomials by shifted
polynomial cones.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from itertools import product

from . import _kernel
from .errors import DomainError
from .monomials import (
    MonomialIdeal,
    Multidegree,
    artinian_closure,
    contains,
    lcm_exponents,
    lowered,
)
from .mvt import PivotStrategy, maximal_corners

IrreducibleComponent = Multidegree


def _reject_trivial(I: MonomialIdeal, what: str) -> None:
    if I.is_zero:
        raise DomainError(f"{what} is undefined for the zero ideal")
    if I.is_unit:
        raise DomainError(f"{what} is undefined for the unit ideal")


def irreducible_decomposition(
    I: MonomialIdeal,
    strategy: PivotStrategy = PivotStrategy.LEX_FIRST,
    threads: int = 1,
    eliminate: bool = False,
    backend: str | None = None,
) -> tuple[IrreducibleComponent, ...]:
    """Exponent vectors a of the irredundant decomposition I = intersection of m^a.

    Maximal corners of the artinian closure are truncated (entries above the
    generator lcm drop to zero), deduplicated, and swept for containments so
    the result is irredundant. Sorted ascending.
    """
    _reject_trivial(I, "an irreducible decomposition")
    lam = lcm_exponents(I)
    hat = artinian_closure(I)
    corners = maximal_corners(
        hat, strategy=strategy, threads=threads, eliminate=eliminate, backend=backend
    )
    comps = sorted(
        {tuple(e if e <= l else 0 for e, l in zip(mu, lam)) for mu in corners}
    )
    kern = _kernel.resolve(backend, max_exponent=max(lam))
    mask = kern.dominated_mask(comps)
    return tuple(c for c, dominated in zip(comps, mask) if not dominated)


@dataclass(frozen=True)
class StanleyCone:
    """x^base times the polynomial ring in the free variables."""

    base: Multidegree
    free: frozenset[int]

    def covers(self, point: Multidegree) -> bool:
        return all(
            p >= b if i in self.free else p == b
            for i, (p, b) in enumerate(zip(point, self.base))
        )


@dataclass(frozen=True)
class StanleyDecomposition:
    n: int
    cones: tuple[StanleyCone, ...]

    def __iter__(self):
        return iter(self.cones)

    def __len__(self):
        return len(self.cones)


def _sorted_cones(cones) -> tuple[StanleyCone, ...]:
    return tuple(sorted(cones, key=lambda c: (c.base, tuple(sorted(c.free)))))


def stanley_artinian(I: MonomialIdeal) -> StanleyDecomposition:
    """Zero-dimensional cones over the divisors of the lowered maximal corners.

    The divisor sets of different corners overlap; each standard monomial is
    emitted once so the cones form a direct sum.
    """
    _reject_trivial(I, "a Stanley decomposition")
    if not I.is_artinian:
        raise DomainError(
            "ideal is not artinian; use stanley_general for arbitrary ideals"
        )
    seen: set[Multidegree] = set()
    for mu in maximal_corners(I):
        low = lowered(mu)
        seen.update(product(*(range(e + 1) for e in low)))
    return StanleyDecomposition(
        I.n, _sorted_cones(StanleyCone(nu, frozenset()) for nu in seen)
    )


def stanley_general(I: MonomialIdeal) -> StanleyDecomposition:
    """Cones over all standard monomials in the box capped one past the lcm.

    A standard monomial at the cap in coordinate i extends freely in that
    direction (membership never changes past the cap), so it carries i as a
    free direction; interior standard monomials are plain points. This covers
    every standard monomial exactly once.
    """
    _reject_trivial(I, "a Stanley decomposition")
    lam = lcm_exponents(I)
    cones = []
    for nu in product(*(range(l + 2) for l in lam)):
        if contains(I, nu):
            continue
        free = frozenset(i for i, (e, l) in enumerate(zip(nu, lam)) if e == l + 1)
        cones.append(StanleyCone(nu, free))
    return StanleyDecomposition(I.n, _sorted_cones(cones))


@dataclass(frozen=True)
class HilbertSeries:
    """Sum of t^shift / (1-t)^power terms, one per cone."""

    terms: tuple[tuple[int, int], ...]

    def coefficient(self, d: int) -> int:
        """Taylor coefficient of t^d."""
        total = 0
        for shift, power in self.terms:
            if power == 0:
                total += 1 if d == shift else 0
            elif d >= shift:
                total += math.comb(d - shift + power - 1, power - 1)
        return total

    def coefficients(self, degree: int) -> list[int]:
        return [self.coefficient(d) for d in range(degree + 1)]

    def __str__(self) -> str:
        by_power: dict[int, dict[int, int]] = {}
        for shift, power in self.terms:
            by_power.setdefault(power, {}).setdefault(shift, 0)
            by_power[power][shift] += 1
        parts = []
        for power in sorted(by_power):
            poly = _poly_str(by_power[power])
            if power == 0:
                parts.append(poly)
            else:
                if "+" in poly:
                    poly = f"({poly})"
                denom = "(1-t)" if power == 1 else f"(1-t)^{power}"
                parts.append(f"{poly}/{denom}")
        return " + ".join(parts) if parts else "0"


def _poly_str(coeffs: dict[int, int]) -> str:
    pieces = []
    for shift in sorted(coeffs):
        c = coeffs[shift]
        if shift == 0:
            pieces.append(str(c))
            continue
        t = "t" if shift == 1 else f"t^{shift}"
        pieces.append(t if c == 1 else f"{c}*{t}")
    return " + ".join(pieces)


def hilbert_series(sd: StanleyDecomposition) -> HilbertSeries:
    """One term per cone: shift = total degree of the base, power = free count."""
    terms = sorted((sum(c.base), len(c.free)) for c in sd.cones)
    return HilbertSeries(tuple(terms))


def krull_dimension(sd: StanleyDecomposition) -> int:
    """Largest number of free directions over the cones."""
    return max((len(c.free) for c in sd.cones), default=0)
