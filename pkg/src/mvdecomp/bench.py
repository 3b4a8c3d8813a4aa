"""Timing harness comparing the corner-search backends.

Generates a seeded ideal, runs the irreducible decomposition repeatedly on
each requested backend, and reports wall time plus component count. Component
counts are required to agree across backends and repetitions.
"""

from __future__ import annotations

import time
from dataclasses import dataclass

from . import _kernel
from .decompositions import irreducible_decomposition
from .monomials import MonomialIdeal
from .randomgen import BenchSpec, random_ideal


@dataclass(frozen=True)
class BenchResult:
    backend: str
    threads: int
    times: tuple[float, ...]
    components: int

    @property
    def best(self) -> float:
        return min(self.times)


def run_benchmark(
    spec: BenchSpec,
    threads: int = 1,
    backends: tuple[str, ...] | None = None,
) -> tuple[MonomialIdeal, list[BenchResult]]:
    """Time the decomposition of the spec's ideal on each backend."""
    ideal = random_ideal(spec)
    if backends is None:
        backends = _kernel.available_backends()
    results = []
    reference = None
    for backend in backends:
        _kernel.resolve(backend)
        times = []
        components = None
        for _ in range(spec.repetitions):
            start = time.perf_counter()
            components = irreducible_decomposition(
                ideal, threads=threads, backend=backend
            )
            times.append(time.perf_counter() - start)
        if reference is None:
            reference = components
        elif components != reference:
            raise RuntimeError(
                f"backend {backend!r} produced {len(components)} components, "
                f"expected {len(reference)}"
            )
        results.append(BenchResult(backend, threads, tuple(times), len(components)))
    return ideal, results


def format_results(spec: BenchSpec, results: list[BenchResult]) -> str:
    lines = [
        f"ideal: vars={spec.vars} gens={spec.gens} max_exp={spec.max_exp} "
        f"seed={spec.seed} generic={spec.generic} reps={spec.repetitions}"
    ]
    for res in results:
        timing = " ".join(f"{t:.3f}s" for t in res.times)
        lines.append(
            f"backend={res.backend} threads={res.threads} "
            f"components={res.components} times: {timing} (best {res.best:.3f}s)"
        )
    return "\n".join(lines)
