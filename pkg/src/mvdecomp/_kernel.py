"""Selection between the compiled and pure corner-search kernels.

The compiled extension is used when it imported cleanly and the environment
variable MVDECOMP_PURE is unset (or "0"). Exponents that do not fit the
extension's 64-bit lanes route to the pure kernel automatically unless the
compiled backend was requested explicitly.
"""

from __future__ import annotations

import os

import numpy as np

from . import _corners_py
from .errors import DomainError, ScaleError

try:
    from . import _corners_cy
except ImportError:
    _corners_cy = None

_MAX_COMPILED_EXPONENT = 2**31


def _force_pure() -> bool:
    return os.environ.get("MVDECOMP_PURE", "0") not in ("", "0")


def available_backends() -> tuple[str, ...]:
    if _corners_cy is not None:
        return ("compiled", "pure")
    return ("pure",)


def default_backend() -> str:
    if _corners_cy is None or _force_pure():
        return "pure"
    return "compiled"


class _CompiledAdapter:
    """Tuple-level facade over the typed-array extension functions."""

    name = "compiled"

    @staticmethod
    def _rows(vectors, n):
        arr = np.zeros((len(vectors), n), dtype=np.int64)
        for i, v in enumerate(vectors):
            arr[i] = v
        return arr

    def collect_candidates(self, gens, n, start_dim=0, lex_first=True,
                           prune=True, eliminate=False):
        rows = self._rows(gens, n)
        found = _corners_cy.collect_candidates(
            rows, start_dim, lex_first, prune, eliminate
        )
        return set(found)

    def filter_corners(self, cands, gens):
        if not cands:
            return []
        n = len(cands[0])
        return _corners_cy.filter_corners(
            self._rows(cands, n), self._rows(gens, n)
        )

    def dominated_mask(self, rows):
        if not rows:
            return []
        return list(_corners_cy.dominated_mask(self._rows(rows, len(rows[0]))))

    def batch_contains(self, points, gens):
        if not points:
            return []
        n = len(points[0])
        return list(_corners_cy.batch_contains(self._rows(points, n), self._rows(gens, n)))

    def points_in_intersection(self, points, comps):
        if not points:
            return []
        n = len(points[0])
        return list(
            _corners_cy.points_in_intersection(self._rows(points, n), self._rows(comps, n))
        )


class _PureAdapter:
    name = "pure"

    collect_candidates = staticmethod(_corners_py.collect_candidates)
    filter_corners = staticmethod(_corners_py.filter_corners)
    dominated_mask = staticmethod(_corners_py.dominated_mask)
    batch_contains = staticmethod(_corners_py.batch_contains)
    points_in_intersection = staticmethod(_corners_py.points_in_intersection)


_PURE = _PureAdapter()
_COMPILED = _CompiledAdapter() if _corners_cy is not None else None


def resolve(name: str | None = None, max_exponent: int = 0):
    """Pick a kernel by name ("compiled", "pure", or None for the default)."""
    if name is None:
        if default_backend() == "compiled" and max_exponent < _MAX_COMPILED_EXPONENT:
            return _COMPILED
        return _PURE
    if name == "pure":
        return _PURE
    if name == "compiled":
        if _COMPILED is None:
            raise DomainError("compiled kernel is not available in this installation")
        if max_exponent >= _MAX_COMPILED_EXPONENT:
            raise ScaleError(
                f"exponent {max_exponent} exceeds the compiled kernel's 64-bit range; "
                "use the pure backend"
            )
        return _COMPILED
    raise DomainError(f"unknown backend {name!r}")
