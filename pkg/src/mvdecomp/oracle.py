"""Brute-force reference implementations used as ground truth in tests.

Nothing here touches the simplicial or tree machinery: Koszul homology is
computed straight from the differential on wedge bases, ranks use rational
Gaussian elimination, and the decomposition verifiers scan (or sample) a
bounding box of exponent vectors. Slow on purpose; guarded against runaway
sizes.
"""

from __future__ import annotations

import math
import random
from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations, product

import numpy as np

from .errors import DomainError, ScaleError
from .monomials import (
    MonomialIdeal,
    Multidegree,
    artinian_closure,
    contains,
    lcm_exponents,
    lcm_of,
)

BOX_GUARD = 10**7
_SAMPLES = 20000
_SAMPLE_SEED = 0x5EED


def rational_rank(matrix: list[list[int]]) -> int:
    """Rank over the rationals via Gaussian elimination on Fractions."""
    m = [[Fraction(x) for x in row] for row in matrix]
    if not m or not m[0]:
        return 0
    nrows, ncols = len(m), len(m[0])
    rank = 0
    for col in range(ncols):
        pivot = next((i for i in range(rank, nrows) if m[i][col]), None)
        if pivot is None:
            continue
        m[rank], m[pivot] = m[pivot], m[rank]
        inv = 1 / m[rank][col]
        m[rank] = [x * inv for x in m[rank]]
        for i in range(nrows):
            if i != rank and m[i][col]:
                factor = m[i][col]
                m[i] = [a - factor * b for a, b in zip(m[i], m[rank])]
        rank += 1
        if rank == nrows:
            break
    return rank


def _strand_bases(I: MonomialIdeal, mu: Multidegree) -> list[list[tuple[int, ...]]]:
    """For each homological degree i, the wedge subsets tau with |tau| = i,
    mu - tau >= 0, and x^(mu-tau) in I."""
    n = I.n
    support = [i for i, e in enumerate(mu) if e > 0]
    bases: list[list[tuple[int, ...]]] = [[] for _ in range(n + 2)]
    for size in range(len(support) + 1):
        for tau in combinations(support, size):
            shifted = list(mu)
            for j in tau:
                shifted[j] -= 1
            if contains(I, tuple(shifted)):
                bases[size].append(tau)
    return bases


def koszul_boundary_matrix(
    I: MonomialIdeal, i: int, mu: Multidegree
) -> list[list[int]]:
    """Matrix of the degree-mu strand of the i-th Koszul differential.

    Columns are wedge subsets tau of size i, rows of size i-1; dropping the
    k-th smallest variable of tau contributes sign (-1)^(k+1).
    """
    bases = _strand_bases(I, mu)
    return _boundary_from_bases(bases, i)


def _boundary_from_bases(bases, i: int) -> list[list[int]]:
    if i <= 0 or i >= len(bases):
        return []
    cols = bases[i]
    rows = bases[i - 1]
    index = {tau: r for r, tau in enumerate(rows)}
    matrix = [[0] * len(cols) for _ in rows]
    for c, tau in enumerate(cols):
        for k in range(len(tau)):
            rest = tau[:k] + tau[k + 1 :]
            matrix[index[rest]][c] = 1 if k % 2 == 0 else -1
    return matrix


def koszul_homology_profile_bruteforce(
    I: MonomialIdeal, mu: Multidegree
) -> tuple[int, ...]:
    """Homology ranks for every homological degree 0..n at multidegree mu."""
    if I.n > 5:
        raise ScaleError("brute-force Koszul homology is guarded to 5 variables")
    if len(mu) != I.n:
        raise DomainError(f"multidegree of length {len(mu)}, expected {I.n}")
    bases = _strand_bases(I, mu)
    ranks = [0] * (I.n + 2)
    for i in range(1, I.n + 1):
        m = _boundary_from_bases(bases, i)
        ranks[i] = rational_rank(m)
    return tuple(
        len(bases[i]) - ranks[i] - ranks[i + 1] for i in range(I.n + 1)
    )


def koszul_homology_bruteforce(I: MonomialIdeal, i: int, mu: Multidegree) -> int:
    """Rank of the degree-mu Koszul homology in degree i, from the differential."""
    if not 0 <= i <= I.n:
        raise DomainError(f"homological degree {i} outside 0..{I.n}")
    return koszul_homology_profile_bruteforce(I, mu)[i]


def lcm_lattice(I: MonomialIdeal) -> tuple[Multidegree, ...]:
    """All lcms of nonempty generator subsets, sorted."""
    if len(I.gens) > 20:
        raise ScaleError("lcm lattice enumeration is guarded to 20 generators")
    acc: set[Multidegree] = set()
    for g in I.gens:
        acc |= {lcm_of(g, v) for v in acc}
        acc.add(g)
    return tuple(sorted(acc))


def maximal_standard_monomials_box(
    I: MonomialIdeal, closure: bool = False
) -> set[Multidegree]:
    """Standard monomials maximal under divisibility, by scanning the box
    up to the generator lcm. Non-artinian ideals are rejected unless closure
    is set, in which case the artinian closure is scanned."""
    if I.is_zero:
        raise DomainError("the zero ideal has no maximal standard monomials")
    J = I
    if not I.is_artinian:
        if not closure:
            raise DomainError(
                "infinitely many standard monomials; pass closure=True to scan "
                "the artinian closure"
            )
        J = artinian_closure(I)
    lam = lcm_exponents(J)
    volume = math.prod(l + 1 for l in lam)
    if volume > BOX_GUARD:
        raise ScaleError(f"box of {volume} cells exceeds the scan guard")
    out = set()
    for nu in product(*(range(l + 1) for l in lam)):
        if contains(J, nu):
            continue
        if all(
            contains(J, nu[:i] + (nu[i] + 1,) + nu[i + 1 :]) for i in range(J.n)
        ):
            out.add(nu)
    return out


def standard_monomial_count(I: MonomialIdeal, degree: int) -> int:
    """Number of standard monomials of the given total degree.

    Membership only depends on exponents capped one past the lcm, so the
    count per capped class is a stars-and-bars binomial.
    """
    if degree < 0:
        return 0
    n = I.n
    if I.is_zero:
        return math.comb(degree + n - 1, n - 1) if n else (1 if degree == 0 else 0)
    if I.is_unit:
        return 0
    caps = [l + 1 for l in lcm_exponents(I)]
    total = 0
    for cls in product(*(range(c + 1) for c in caps)):
        if contains(I, cls):
            continue
        fixed = sum(cls)
        free = [i for i in range(n) if cls[i] == caps[i]]
        rest = degree - fixed
        if rest < 0:
            continue
        if free:
            total += math.comb(rest + len(free) - 1, len(free) - 1)
        elif rest == 0:
            total += 1
    return total


@dataclass(frozen=True)
class VerificationResult:
    ok: bool
    mode: str
    witness: Multidegree | None = None
    detail: str = ""

    def __bool__(self) -> bool:
        return self.ok


_CHUNK = 1 << 17


def _point_chunks(I: MonomialIdeal, margin: int = 2):
    """Chunked arrays covering [0, lambda+margin]^n, or a seeded sample when
    the box exceeds the guard. Returns (iterator of arrays, mode)."""
    lam = lcm_exponents(I) if not I.is_zero else (0,) * I.n
    highs = [l + margin for l in lam]
    volume = math.prod(h + 1 for h in highs)
    n = I.n
    if volume <= BOX_GUARD:

        def chunks():
            buf = []
            for p in product(*(range(h + 1) for h in highs)):
                buf.append(p)
                if len(buf) == _CHUNK:
                    yield np.array(buf, dtype=np.int64)
                    buf = []
            if buf:
                yield np.array(buf, dtype=np.int64).reshape(len(buf), n)

        return chunks(), "exhaustive"

    def sampled():
        rng = random.Random(_SAMPLE_SEED)
        pts = np.array(
            [[rng.randint(0, h) for h in highs] for _ in range(_SAMPLES)],
            dtype=np.int64,
        )
        yield pts

    return sampled(), "sampled"


def _members_mask(pts: np.ndarray, gens) -> np.ndarray:
    mask = np.zeros(len(pts), dtype=bool)
    for g in gens:
        mask |= (pts >= np.asarray(g, dtype=np.int64)).all(axis=1)
    return mask


def _component_mask(pts: np.ndarray, a) -> np.ndarray:
    a = np.asarray(a, dtype=np.int64)
    return ((a > 0) & (pts >= a)).any(axis=1)


def verify_irreducible(I: MonomialIdeal, components) -> VerificationResult:
    """Check membership equivalence with the component intersection and that
    no component is redundant, over a box one step past the truncation cap."""
    components = [tuple(c) for c in components]
    for c in components:
        if len(c) != I.n:
            raise DomainError(f"component of length {len(c)}, expected {I.n}")
    chunks, mode = _point_chunks(I)
    k = len(components)
    separated = [False] * k
    for pts in chunks:
        in_ideal = _members_mask(pts, I.gens)
        comp_masks = [_component_mask(pts, a) for a in components]
        in_all = np.ones(len(pts), dtype=bool)
        for m in comp_masks:
            in_all &= m
        diff = in_ideal != in_all
        if diff.any():
            witness = tuple(int(x) for x in pts[int(np.argmax(diff))])
            return VerificationResult(
                False, mode, witness, "membership differs from the intersection"
            )
        if k:
            counts = np.zeros(len(pts), dtype=np.int64)
            for m in comp_masks:
                counts += m
            for idx, m in enumerate(comp_masks):
                if not separated[idx] and ((~m) & (counts == k - 1)).any():
                    separated[idx] = True
    for a, ok in zip(components, separated):
        if not ok:
            return VerificationResult(
                False, mode, a, "component is redundant (no monomial separates it)"
            )
    return VerificationResult(True, mode)


def verify_stanley(I: MonomialIdeal, sd) -> VerificationResult:
    """Check that the cones cover each standard monomial exactly once and
    never meet the ideal, over a box one step past the truncation cap."""
    cones = [
        (
            np.asarray(c.base, dtype=np.int64),
            np.array([i in c.free for i in range(I.n)], dtype=bool),
        )
        for c in sd.cones
    ]
    chunks, mode = _point_chunks(I)
    for pts in chunks:
        standard = ~_members_mask(pts, I.gens)
        counts = np.zeros(len(pts), dtype=np.int64)
        for base, free in cones:
            counts += ((pts == base) | (free & (pts >= base))).all(axis=1)
        bad = np.where(standard, counts != 1, counts != 0)
        if bad.any():
            idx = int(np.argmax(bad))
            witness = tuple(int(x) for x in pts[idx])
            if standard[idx]:
                detail = f"standard monomial covered {int(counts[idx])} times"
            else:
                detail = "cone contains a monomial of the ideal"
            return VerificationResult(False, mode, witness, detail)
    return VerificationResult(True, mode)
