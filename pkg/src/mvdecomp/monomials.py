"""Exponent-vector arithmetic and monomial-ideal bookkeeping.

Monomials are exponent vectors (tuples of non-negative ints, one entry per
variable); a monomial ideal is stored by its minimal generators. Variable
indices are 0-based throughout.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable, Sequence

from .errors import DimensionMismatchError, DomainError

Multidegree = tuple[int, ...]


def _check_same_length(a: Sequence[int], b: Sequence[int]) -> None:
    if len(a) != len(b):
        raise DimensionMismatchError(
            f"exponent vectors of length {len(a)} and {len(b)}"
        )


def divides(a: Multidegree, b: Multidegree) -> bool:
    """True iff x^a divides x^b, i.e. a <= b componentwise."""
    _check_same_length(a, b)
    return all(ai <= bi for ai, bi in zip(a, b))


def lcm_of(a: Multidegree, b: Multidegree) -> Multidegree:
    """Componentwise maximum of two exponent vectors."""
    _check_same_length(a, b)
    return tuple(max(ai, bi) for ai, bi in zip(a, b))


def support_of(mu: Multidegree) -> frozenset[int]:
    """Indices of the nonzero entries of mu."""
    return frozenset(i for i, e in enumerate(mu) if e > 0)


def lowered(mu: Multidegree) -> Multidegree:
    """Subtract one from every positive entry (clamped at zero)."""
    return tuple(e - 1 if e > 0 else 0 for e in mu)


def total_degree(mu: Multidegree) -> int:
    return sum(mu)


def _validate_vector(v: Multidegree, n: int) -> None:
    if len(v) != n:
        raise DimensionMismatchError(f"generator of length {len(v)}, expected {n}")
    for e in v:
        if not isinstance(e, int) or e < 0:
            raise DomainError(f"exponents must be non-negative integers, got {e!r}")


@dataclass(frozen=True)
class MonomialIdeal:
    """A monomial ideal given by minimal generators in canonical order.

    Generators are stored sorted lexicographically descending so that trees
    and rendered output are reproducible. The constructor insists on minimal
    generators; use minimalize() to build from a redundant list. No
    generators means the zero ideal; the all-zero vector as sole generator
    means the unit ideal.
    """

    n: int
    gens: tuple[Multidegree, ...] = field(default=())

    def __post_init__(self):
        if self.n < 0:
            raise DomainError("ring dimension must be non-negative")
        gens = tuple(tuple(g) for g in self.gens)
        object.__setattr__(self, "gens", gens)
        for g in gens:
            _validate_vector(g, self.n)
        for i, g in enumerate(gens):
            for h in gens[i + 1 :]:
                if divides(g, h) or divides(h, g):
                    raise DomainError(
                        f"generators are not minimal: {g} and {h} are comparable"
                    )
        if gens != tuple(sorted(gens, reverse=True)):
            object.__setattr__(self, "gens", tuple(sorted(gens, reverse=True)))

    @property
    def is_zero(self) -> bool:
        return not self.gens

    @property
    def is_unit(self) -> bool:
        return len(self.gens) == 1 and not any(self.gens[0])

    @property
    def is_artinian(self) -> bool:
        """True iff the ideal contains a power of every variable."""
        if self.is_unit:
            return True
        pure = {min(support_of(g)) for g in self.gens if len(support_of(g)) == 1}
        return len(pure) == self.n

    def __iter__(self):
        return iter(self.gens)

    def __len__(self):
        return len(self.gens)


def minimalize(raw: Iterable[Multidegree], n: int) -> MonomialIdeal:
    """Build an ideal from any generator list, dropping multiples and duplicates."""
    vecs = []
    for v in raw:
        v = tuple(v)
        _validate_vector(v, n)
        vecs.append(v)
    vecs = sorted(set(vecs))
    kept: list[Multidegree] = []
    for v in vecs:
        # sorted ascending, so no later vector can divide an earlier one
        if not any(divides(k, v) for k in kept):
            kept.append(v)
    return MonomialIdeal(n, tuple(sorted(kept, reverse=True)))


def contains(I: MonomialIdeal, nu: Multidegree) -> bool:
    """Membership test: some generator divides nu."""
    if len(nu) != I.n:
        raise DimensionMismatchError(f"vector of length {len(nu)}, expected {I.n}")
    return any(divides(g, nu) for g in I.gens)


def lcm_exponents(I: MonomialIdeal) -> Multidegree:
    """Componentwise maximum over all minimal generators."""
    if I.is_zero:
        raise DomainError("the generator lcm is undefined for the zero ideal")
    out = [0] * I.n
    for g in I.gens:
        for i, e in enumerate(g):
            if e > out[i]:
                out[i] = e
    return tuple(out)


def artinian_closure(I: MonomialIdeal) -> MonomialIdeal:
    """Smallest artinian ideal containing I: add x_i^(lambda_i + 1) for every i."""
    if I.is_zero:
        raise DomainError("artinian closure is undefined for the zero ideal")
    if I.is_artinian:
        return I
    lam = lcm_exponents(I)
    extra = []
    for i in range(I.n):
        v = [0] * I.n
        v[i] = lam[i] + 1
        extra.append(tuple(v))
    return minimalize(list(I.gens) + extra, I.n)
