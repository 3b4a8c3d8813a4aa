"""Mayer-Vietoris splitting trees of monomial ideals.

Each node splits off a pivot generator: the left child takes the lcms of the
pivot with the remaining generators (dimension rises by one), the right child
keeps the rest (dimension unchanged). Generators of relevant nodes bound the
multigraded Betti numbers, and the target-dimension nodes of the pruned tree
yield the maximal corners.
"""

from __future__ import annotations

from collections import Counter
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from enum import Enum
from typing import Callable, Iterator, Sequence

from . import _kernel
from ._corners_py import _lcm, _minimalize_desc
from .errors import DomainError
from .monomials import MonomialIdeal, Multidegree, lcm_of, minimalize

PRUNE_BY_INDETERMINATES = "indeterminates"
PRUNE_BY_GENERATORS = "generators"


class PivotStrategy(Enum):
    """Pivot choice: first generator in the descending order, or the last."""

    LEX_FIRST = "lex"
    LAST_GENERATOR = "last"


PivotChooser = Callable[[MonomialIdeal], int]


def _pivot_index(J: MonomialIdeal, strategy) -> int:
    if strategy is PivotStrategy.LEX_FIRST:
        return 0
    if strategy is PivotStrategy.LAST_GENERATOR:
        return len(J.gens) - 1
    idx = strategy(J)
    if not 0 <= idx < len(J.gens):
        raise DomainError(f"pivot index {idx} outside 0..{len(J.gens) - 1}")
    return idx


def mvt_children(
    J: MonomialIdeal, strategy: PivotStrategy | PivotChooser = PivotStrategy.LEX_FIRST
) -> tuple[MonomialIdeal, MonomialIdeal]:
    """Split a node: (lcms with the pivot, minimalized; generators minus pivot)."""
    if len(J.gens) < 2:
        raise DomainError("a node needs at least two generators to split")
    idx = _pivot_index(J, strategy)
    pivot = J.gens[idx]
    rest = J.gens[:idx] + J.gens[idx + 1 :]
    left = minimalize([lcm_of(g, pivot) for g in rest], J.n)
    right = MonomialIdeal(J.n, rest)
    return left, right


@dataclass(frozen=True)
class MvtNode:
    ideal: MonomialIdeal
    position: int
    dimension: int
    children: tuple["MvtNode", ...] = ()
    prune_reason: str | None = None

    @property
    def relevant(self) -> bool:
        return self.position == 1 or self.position % 2 == 0

    @property
    def is_leaf(self) -> bool:
        return not self.children


@dataclass(frozen=True)
class MvtTree:
    root: MvtNode
    pruned: bool

    def __iter__(self) -> Iterator[MvtNode]:
        """Nodes in pre-order."""
        stack = [self.root]
        while stack:
            node = stack.pop()
            yield node
            stack.extend(reversed(node.children))

    def node_count(self) -> int:
        return sum(1 for _ in self)

    def dump(self, names: Sequence[str]) -> str:
        """One node per line: position, dimension, relevance flag, generators."""
        from .ideal_io import format_monomial

        lines = []
        for node in self:
            gens = ", ".join(format_monomial(g, names) for g in node.ideal.gens)
            flag = "R" if node.relevant else "-"
            lines.append(f"{node.position} {node.dimension} {flag} [{gens}]")
        return "\n".join(lines)


def _prune_reason(J: MonomialIdeal, dim: int) -> str | None:
    mask = 0
    for g in J.gens:
        for i, e in enumerate(g):
            if e:
                mask |= 1 << i
    if mask != (1 << J.n) - 1:
        return PRUNE_BY_INDETERMINATES
    if len(J.gens) < J.n - dim:
        return PRUNE_BY_GENERATORS
    return None


def build_mvt(
    I: MonomialIdeal,
    strategy: PivotStrategy | PivotChooser = PivotStrategy.LEX_FIRST,
    prune: bool = True,
) -> MvtTree:
    """Materialize the splitting tree; with prune, cut subtrees that cannot
    carry top-dimension homology (support union short of all variables, or
    too few generators for the node's dimension).

    The full tree has up to 2^r nodes; materialization is for inspection and
    Betti bounds at desk scale, not for the corner search (see
    maximal_corners).
    """
    if I.is_zero or I.is_unit:
        raise DomainError("splitting trees need a nonzero proper monomial ideal")

    def make(J: MonomialIdeal, pos: int, dim: int) -> MvtNode:
        reason = _prune_reason(J, dim) if prune else None
        children: tuple[MvtNode, ...] = ()
        if reason is None and len(J.gens) >= 2:
            left, right = mvt_children(J, strategy)
            children = (
                make(left, 2 * pos, dim + 1),
                make(right, 2 * pos + 1, dim),
            )
        return MvtNode(J, pos, dim, children, reason)

    return MvtTree(make(I, 1, 0), prune)


@dataclass
class BettiBounds:
    """Lower/upper bounds per (homological degree, multidegree).

    upper counts occurrences of the multidegree among generators of relevant
    nodes of that dimension; lower is 1 exactly when the multidegree occurs
    once among relevant nodes of the whole tree.
    """

    entries: dict[tuple[int, Multidegree], tuple[int, int]] = field(default_factory=dict)

    def lower(self, i: int, mu: Multidegree) -> int:
        return self.entries.get((i, tuple(mu)), (0, 0))[0]

    def upper(self, i: int, mu: Multidegree) -> int:
        return self.entries.get((i, tuple(mu)), (0, 0))[1]

    def __iter__(self):
        return iter(sorted(self.entries.items()))


def betti_bounds(tree: MvtTree) -> BettiBounds:
    """Bounds from relevant-node generators; requires an unpruned tree."""
    if tree.pruned:
        raise DomainError("Betti bounds need a tree built with prune=False")
    per_dim: Counter = Counter()
    total: Counter = Counter()
    for node in tree:
        if not node.relevant:
            continue
        for g in node.ideal.gens:
            per_dim[(node.dimension, g)] += 1
            total[g] += 1
    entries = {}
    for (i, mu), count in per_dim.items():
        lower = 1 if total[mu] == 1 else 0
        entries[(i, mu)] = (lower, count)
    return BettiBounds(entries)


def _splittable(rows, dim, n, prune, eliminate):
    """Mirror of the kernel's descent test, used to expand thread jobs."""
    target = n - 1
    if prune:
        mask = 0
        for v in rows:
            for i, e in enumerate(v):
                if e:
                    mask |= 1 << i
        if mask != (1 << n) - 1:
            return False
        if len(rows) < n - dim:
            return False
    if dim >= target or len(rows) == 1:
        return False
    if eliminate:
        lo = [min(v[i] for v in rows) for i in range(n)]
        hi = [max(v[i] for v in rows) for i in range(n)]
        if sum(1 for a, b in zip(lo, hi) if a != b) <= 2:
            return False
    return True


def _collect_with_callable(gens, n, strategy, prune, eliminate):
    """Candidate collection for a custom pivot chooser (pure path)."""
    target = n - 1
    out: set[Multidegree] = set()
    stack = [(gens, 0)]
    while stack:
        rows, dim = stack.pop()
        if prune and _prune_reason(MonomialIdeal(n, rows), dim):
            continue
        if dim >= target:
            if dim == target:
                out.update(rows)
            continue
        if len(rows) == 1:
            continue
        left, right = mvt_children(MonomialIdeal(n, rows), strategy)
        stack.append((right.gens, dim))
        stack.append((left.gens, dim + 1))
    return out


def maximal_corners(
    I: MonomialIdeal,
    strategy: PivotStrategy | PivotChooser = PivotStrategy.LEX_FIRST,
    prune: bool = True,
    threads: int = 1,
    eliminate: bool = False,
    backend: str | None = None,
) -> tuple[Multidegree, ...]:
    """Multidegrees with top Koszul homology, i.e. the maximal corners of I.

    Collects the generators of splitting-tree nodes of dimension n-1
    (deduplicated) and keeps those passing the maximal-corner test. The
    result is independent of strategy, pruning, thread count, and backend.
    """
    if I.is_zero or I.is_unit:
        raise DomainError("corners need a nonzero proper monomial ideal")
    n = I.n
    gens = I.gens
    max_exp = max(max(g) for g in gens)
    kern = _kernel.resolve(backend, max_exponent=max_exp)
    if not isinstance(strategy, PivotStrategy):
        cands = _collect_with_callable(gens, n, strategy, prune, eliminate)
    else:
        lex_first = strategy is PivotStrategy.LEX_FIRST
        if threads <= 1:
            cands = kern.collect_candidates(gens, n, 0, lex_first, prune, eliminate)
        else:
            jobs = [(gens, 0)]
            while len(jobs) < 4 * threads:
                idx = next(
                    (
                        k
                        for k, (rows, dim) in enumerate(jobs)
                        if _splittable(rows, dim, n, prune, eliminate)
                    ),
                    None,
                )
                if idx is None:
                    break
                rows, dim = jobs.pop(idx)
                pidx = 0 if lex_first else len(rows) - 1
                pivot = rows[pidx]
                rest = rows[:pidx] + rows[pidx + 1 :]
                left = _minimalize_desc([_lcm(v, pivot) for v in rest])
                jobs.append((left, dim + 1))
                jobs.append((rest, dim))
            with ThreadPoolExecutor(max_workers=threads) as pool:
                parts = pool.map(
                    lambda job: kern.collect_candidates(
                        job[0], n, job[1], lex_first, prune, eliminate
                    ),
                    jobs,
                )
                cands = set()
                for part in parts:
                    cands |= part
    kept = kern.filter_corners(sorted(cands), gens)
    return tuple(sorted(kept))
