"""Seeded random monomial ideals for tests and benchmarks."""

from __future__ import annotations

import random
from dataclasses import dataclass

from .errors import DomainError, FeasibilityError
from .monomials import MonomialIdeal, Multidegree, divides


@dataclass(frozen=True)
class BenchSpec:
    """Shape of a generated ideal: variable count, generator count, exponent
    range, seed, and whether generators must be generic (no two sharing a
    positive exponent in any coordinate)."""

    vars: int
    gens: int
    max_exp: int
    seed: int = 0
    generic: bool = False
    repetitions: int = 3

    def __post_init__(self) -> None:
        for name in ("vars", "gens", "max_exp", "repetitions"):
            value = getattr(self, name)
            if not isinstance(value, int) or value < 1:
                raise DomainError(f"{name} must be a positive integer, got {value!r}")


# Total draw budget before declaring the shape infeasible, and the number of
# consecutive rejections after which the partial antichain is abandoned (a
# greedy prefix can block every extension, e.g. x and y together rule out any
# third incomparable monomial in three variables beyond powers of z).
_ATTEMPT_FACTOR = 1000
_ATTEMPT_BASE = 20000
_STALL_LIMIT = 300


def random_ideal(spec: BenchSpec) -> MonomialIdeal:
    """Draw a minimally generated ideal matching ``spec``, deterministically
    in ``spec.seed``. Raises FeasibilityError when the shape cannot be met."""
    if spec.generic and spec.gens > spec.vars * spec.max_exp:
        raise FeasibilityError(
            f"generic mode admits at most vars*max_exp = {spec.vars * spec.max_exp} "
            f"generators, requested {spec.gens}"
        )
    rng = random.Random(spec.seed)
    n = spec.vars
    chosen: list[Multidegree] = []
    used: list[set[int]] = [set() for _ in range(n)]
    budget = _ATTEMPT_BASE + _ATTEMPT_FACTOR * spec.gens
    attempts = 0
    stalled = 0
    while len(chosen) < spec.gens:
        attempts += 1
        if attempts > budget:
            raise FeasibilityError(
                f"could not place {spec.gens} incomparable generators after "
                f"{budget} draws (vars={n}, max_exp={spec.max_exp}, "
                f"generic={spec.generic}, seed={spec.seed})"
            )
        if stalled >= _STALL_LIMIT:
            chosen.clear()
            used = [set() for _ in range(n)]
            stalled = 0
        mask = rng.randrange(1, 1 << n)
        cand = tuple(
            rng.randint(1, spec.max_exp) if mask >> i & 1 else 0 for i in range(n)
        )
        if spec.generic and any(cand[i] in used[i] for i in range(n) if cand[i]):
            stalled += 1
            continue
        if any(divides(cand, g) or divides(g, cand) for g in chosen):
            stalled += 1
            continue
        chosen.append(cand)
        stalled = 0
        if spec.generic:
            for i in range(n):
                if cand[i]:
                    used[i].add(cand[i])
    return MonomialIdeal(n, tuple(sorted(chosen, reverse=True)))


def parse_bench_spec(text: str) -> BenchSpec:
    """Parse the comma-separated form ``n=10,r=40,e=30,seed=7,generic,reps=3``."""
    fields = {"n": None, "r": None, "e": None}
    seed = 0
    generic = False
    reps = 3
    for part in text.split(","):
        part = part.strip()
        if not part:
            continue
        if part == "generic":
            generic = True
            continue
        key, sep, value = part.partition("=")
        key = key.strip()
        if not sep:
            raise DomainError(f"bad bench spec field {part!r}, expected key=value")
        try:
            number = int(value)
        except ValueError:
            raise DomainError(f"bad bench spec value {value!r} for {key!r}") from None
        if key in fields:
            fields[key] = number
        elif key == "seed":
            seed = number
        elif key == "reps":
            reps = number
        else:
            raise DomainError(f"unknown bench spec field {key!r}")
    missing = [k for k, v in fields.items() if v is None]
    if missing:
        raise DomainError(f"bench spec is missing {', '.join(missing)}")
    return BenchSpec(
        vars=fields["n"],
        gens=fields["r"],
        max_exp=fields["e"],
        seed=seed,
        generic=generic,
        repetitions=reps,
    )
