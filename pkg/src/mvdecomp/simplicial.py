"""Koszul simplicial complexes at a multidegree, exact homology, and corners.

The upper complex at mu collects the faces tau (subsets of the support of mu)
with x^(mu-tau) in I; the lower complex collects the tau over all variables
with x^(low(mu)+tau) not in I. Homology ranks of the upper complex give the
Koszul homology of I in degree mu.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import DimensionMismatchError, DomainError
from .linalg import integer_rank
from .monomials import (
    MonomialIdeal,
    Multidegree,
    contains,
    lcm_exponents,
    lowered,
    support_of,
)


def _mask_of(indices) -> int:
    mask = 0
    for i in indices:
        mask |= 1 << i
    return mask


def _bits_of(mask: int) -> tuple[int, ...]:
    out = []
    i = 0
    while mask:
        if mask & 1:
            out.append(i)
        mask >>= 1
        i += 1
    return tuple(out)


@dataclass(frozen=True)
class SimplicialComplex:
    """Faces stored as vertex bitmasks; no faces at all is the void complex."""

    n: int
    faces: frozenset[int]

    def __post_init__(self):
        for f in self.faces:
            if f < 0 or f >> self.n:
                raise DimensionMismatchError(f"face {f:b} outside {self.n} vertices")
            sub = f
            while sub:
                sub = (sub - 1) & f
                if sub not in self.faces:
                    raise DomainError("face set is not downward closed")

    @property
    def is_void(self) -> bool:
        return not self.faces

    @property
    def is_irrelevant(self) -> bool:
        """Only the empty face."""
        return self.faces == frozenset({0})

    def facets(self) -> frozenset[frozenset[int]]:
        """Inclusion-maximal faces, as index sets."""
        out = []
        for f in self.faces:
            if not any(g != f and f & g == f for g in self.faces):
                out.append(frozenset(_bits_of(f)))
        return frozenset(out)

    def face_counts(self) -> list[int]:
        """Number of faces of each cardinality 0..n."""
        counts = [0] * (self.n + 1)
        for f in self.faces:
            counts[f.bit_count()] += 1
        return counts


@dataclass(frozen=True)
class HomologyProfile:
    """Reduced homology ranks; entry j of dims is dim of H~_(j-1)."""

    n: int
    dims: tuple[int, ...]

    def reduced(self, i: int) -> int:
        """dim of the i-th reduced homology, 0 outside -1..n-1."""
        if -1 <= i < self.n:
            return self.dims[i + 1]
        return 0

    def nonzero_degrees(self) -> tuple[int, ...]:
        return tuple(i for i in range(-1, self.n) if self.reduced(i))


def _boundary_rank(lower_faces: list[int], upper_faces: list[int]) -> int:
    """Rank of the boundary map from faces of size s to faces of size s-1."""
    if not lower_faces or not upper_faces:
        return 0
    row_index = {f: i for i, f in enumerate(lower_faces)}
    matrix = [[0] * len(upper_faces) for _ in lower_faces]
    for col, f in enumerate(upper_faces):
        sign = 1
        for v in _bits_of(f):
            matrix[row_index[f ^ (1 << v)]][col] = sign
            sign = -sign
    return integer_rank(matrix)


def reduced_homology(cx: SimplicialComplex) -> HomologyProfile:
    """Exact reduced homology ranks over a characteristic-0 field."""
    n = cx.n
    if cx.is_void:
        return HomologyProfile(n, (0,) * (n + 1))
    by_size: list[list[int]] = [[] for _ in range(n + 2)]
    for f in sorted(cx.faces):
        by_size[f.bit_count()].append(f)
    ranks = [0] * (n + 2)
    for s in range(1, n + 1):
        ranks[s] = _boundary_rank(by_size[s - 1], by_size[s])
    dims = tuple(
        len(by_size[s]) - ranks[s] - ranks[s + 1] for s in range(n + 1)
    )
    return HomologyProfile(n, dims)


def _check_degree(I: MonomialIdeal, mu: Multidegree) -> Multidegree:
    mu = tuple(mu)
    if len(mu) != I.n:
        raise DimensionMismatchError(f"multidegree of length {len(mu)}, expected {I.n}")
    if any(e < 0 for e in mu):
        raise DomainError("multidegree entries must be non-negative")
    return mu


def upper_complex(I: MonomialIdeal, mu: Multidegree) -> SimplicialComplex:
    """Faces tau within the support of mu such that x^(mu-tau) lies in I."""
    mu = _check_degree(I, mu)
    smask = _mask_of(support_of(mu))
    faces = set()
    sub = smask
    while True:
        shifted = tuple(e - 1 if sub >> i & 1 else e for i, e in enumerate(mu))
        if contains(I, shifted):
            faces.add(sub)
        if sub == 0:
            break
        sub = (sub - 1) & smask
    return SimplicialComplex(I.n, frozenset(faces))


def lower_complex(I: MonomialIdeal, mu: Multidegree) -> SimplicialComplex:
    """Faces tau over all variables such that x^(low(mu)+tau) avoids I."""
    mu = _check_degree(I, mu)
    low = lowered(mu)
    faces = set()
    for mask in range(1 << I.n):
        shifted = tuple(e + (mask >> i & 1) for i, e in enumerate(low))
        if not contains(I, shifted):
            faces.add(mask)
    return SimplicialComplex(I.n, frozenset(faces))


def koszul_homology_profile(I: MonomialIdeal, mu: Multidegree) -> HomologyProfile:
    """Reduced homology of the upper complex; entry i-1 equals the rank of H_(i,mu)."""
    return reduced_homology(upper_complex(I, mu))


def koszul_homology_dim(I: MonomialIdeal, i: int, mu: Multidegree) -> int:
    """Rank of the degree-mu Koszul homology in homological degree i."""
    if not 0 <= i <= I.n:
        raise DomainError(f"homological degree {i} outside 0..{I.n}")
    return koszul_homology_profile(I, mu).reduced(i - 1)


def is_closed_corner(I: MonomialIdeal, mu: Multidegree) -> bool:
    """x^low(mu) is standard but every support direction pushes it into I."""
    mu = _check_degree(I, mu)
    low = lowered(mu)
    if contains(I, low):
        return False
    for i in support_of(mu):
        bumped = low[:i] + (low[i] + 1,) + low[i + 1 :]
        if not contains(I, bumped):
            return False
    return True


def is_maximal_corner(I: MonomialIdeal, mu: Multidegree) -> bool:
    """Closed corner with full support."""
    mu = _check_degree(I, mu)
    if any(e == 0 for e in mu):
        return False
    return is_closed_corner(I, mu)


def locally_free_directions(I: MonomialIdeal, mu: Multidegree) -> frozenset[frozenset[int]]:
    """Locally free directions: facets of the lower complex at mu."""
    return lower_complex(I, mu).facets()


def globally_free_directions(I: MonomialIdeal, mu: Multidegree) -> frozenset[frozenset[int]]:
    """Globally free directions at mu (or at its standard lowering if mu is in I).

    A direction set D is free at a standard x^nu when no monomial x^(nu+sigma)
    with sigma supported on D falls into I; capping exponents at lambda_i+1
    makes the infinite quantifier decidable. Returns the inclusion-maximal
    nonempty free sets.
    """
    mu = _check_degree(I, mu)
    if I.is_unit:
        raise DomainError("globally free directions are undefined for the unit ideal")
    if I.is_zero:
        return frozenset({frozenset(range(I.n))})
    nu = mu
    while contains(I, nu):
        nu = lowered(nu)
    lam = lcm_exponents(I)

    def free(dirs: tuple[int, ...]) -> bool:
        capped = list(nu)
        for i in dirs:
            capped[i] = max(nu[i], lam[i] + 1)
        return not contains(I, tuple(capped))

    singles = [i for i in range(I.n) if free((i,))]
    free_sets = []
    for mask in range(1, 1 << len(singles)):
        dirs = tuple(singles[k] for k in range(len(singles)) if mask >> k & 1)
        if free(dirs):
            free_sets.append(frozenset(dirs))
    return frozenset(
        d for d in free_sets if not any(d < other for other in free_sets)
    )
