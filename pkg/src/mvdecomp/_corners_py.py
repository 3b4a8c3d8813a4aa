"""Pure-Python corner-search kernel.

Mirrors the compiled extension in mvdecomp._corners_cy: same functions, same
semantics, plain tuples instead of typed arrays. Generators arrive sorted
lexicographically descending; candidates are exponent tuples.
"""

from __future__ import annotations


def _lcm(a, b):
    return tuple(x if x > y else y for x, y in zip(a, b))


def _minimalize_desc(rows):
    """Drop multiples and duplicates, return sorted descending."""
    rows = sorted(set(rows))
    kept = []
    for v in rows:
        ok = True
        for k in kept:
            if all(x <= y for x, y in zip(k, v)):
                ok = False
                break
        if ok:
            kept.append(v)
    kept.reverse()
    return tuple(kept)


def collect_candidates(gens, n, start_dim=0, lex_first=True, prune=True, eliminate=False):
    """Exponent tuples appearing as generators of splitting-tree nodes of dimension n-1.

    Recursion over (pivot-lcm left child, pivot-removed right child); with
    prune on, subtrees failing the support-union or generator-count rules are
    skipped. Descent always stops at dimension n-1 since deeper nodes cannot
    contribute new target-dimension generators.
    """
    target = n - 1
    full = (1 << n) - 1
    out = set()
    if not gens:
        return out
    stack = [(tuple(gens), start_dim)]
    while stack:
        rows, dim = stack.pop()
        if prune:
            mask = 0
            for v in rows:
                for i, e in enumerate(v):
                    if e:
                        mask |= 1 << i
            if mask != full:
                continue
            if len(rows) < n - dim:
                continue
        if dim >= target:
            if dim == target:
                out.update(rows)
            continue
        if len(rows) == 1:
            continue
        if eliminate:
            lo = list(rows[0])
            hi = list(rows[0])
            for v in rows[1:]:
                for i, e in enumerate(v):
                    if e < lo[i]:
                        lo[i] = e
                    elif e > hi[i]:
                        hi[i] = e
            active = sum(1 for a, b in zip(lo, hi) if a != b)
            if active <= 2:
                # two effective variables: target-dimension generators are
                # exactly the lcms of consecutive stored generators
                if dim + 1 == target:
                    out.update(_lcm(a, b) for a, b in zip(rows, rows[1:]))
                continue
        pidx = 0 if lex_first else len(rows) - 1
        pivot = rows[pidx]
        rest = rows[:pidx] + rows[pidx + 1 :]
        left = _minimalize_desc([_lcm(v, pivot) for v in rest])
        stack.append((rest, dim))
        stack.append((left, dim + 1))
    return out


def filter_corners(cands, gens):
    """Keep the candidates that are maximal corners of the ideal given by gens.

    Full support is required; squarefree candidates need nothing else. The
    rest pass when the lowered form is outside the ideal but every unit bump
    of it is inside.
    """
    out = []
    for mu in cands:
        if 0 in mu:
            continue
        if all(e == 1 for e in mu):
            out.append(mu)
            continue
        low = tuple(e - 1 for e in mu)
        if any(all(x <= y for x, y in zip(g, low)) for g in gens):
            continue
        ok = True
        for i in range(len(mu)):
            bumped = low[:i] + (low[i] + 1,) + low[i + 1 :]
            if not any(all(x <= y for x, y in zip(g, bumped)) for g in gens):
                ok = False
                break
        if ok:
            out.append(mu)
    return out


def dominated_mask(rows):
    """mask[i] is True when some other row generates a smaller-or-equal
    irreducible ideal: for every positive entry of that row, row i is
    positive there and no larger. Exact duplicates keep their first copy."""
    k = len(rows)
    mask = [False] * k
    for i in range(k):
        a = rows[i]
        for j in range(k):
            if i == j:
                continue
            b = rows[j]
            dominated = True
            for x, y in zip(a, b):
                if y > 0 and not 0 < x <= y:
                    dominated = False
                    break
            if dominated and (b != a or j < i):
                mask[i] = True
                break
    return mask


def batch_contains(points, gens):
    """Ideal membership for each point."""
    return [
        any(all(x <= y for x, y in zip(g, p)) for g in gens) for p in points
    ]


def points_in_intersection(points, comps):
    """For each point: membership in every irreducible ideal m^a of comps."""
    out = []
    for p in points:
        ok = True
        for a in comps:
            if not any(e > 0 and q >= e for e, q in zip(a, p)):
                ok = False
                break
        out.append(ok)
    return out
