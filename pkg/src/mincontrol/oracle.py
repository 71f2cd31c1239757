"""Brute-force reference solver for small instances.

Enumerates candidate supports in cardinality-ascending order and tests
feasibility directly against the eigenvector patterns (a support works
iff every left-eigenvector has a nonzero entry inside it), so the
set-cover pipeline can be validated end to end. Winning supports are
additionally realized and rank-certified.
"""
from __future__ import annotations

import itertools
from dataclasses import dataclass

from .errors import TooLarge, ZeroPattern
from .mcp import RealizationConfig, realize, support_from_cover
from .numerics import as_square_matrix, left_eigenbasis
from .structure import structural_pattern
from .tolerances import DEFAULT_GAP_TOL, DEFAULT_RESIDUAL_TOL, DEFAULT_ZERO_TOL
from .verify import kalman_test

#: Enumeration is 2^n; keep the default ceiling modest.
DEFAULT_SIZE_LIMIT = 12


@dataclass(frozen=True)
class OracleResult:
    """Minimum support size, every optimal support, and their rank verdicts."""

    min_support_size: int
    optimal_supports: tuple[tuple[int, ...], ...]
    kalman_verdicts: tuple[bool, ...]


def brute_force_mcp(
    A,
    n_limit: int = DEFAULT_SIZE_LIMIT,
    *,
    zero_tol: float = DEFAULT_ZERO_TOL,
    config: RealizationConfig | None = None,
    rank_tol: float | None = None,
    residual_tol: float = DEFAULT_RESIDUAL_TOL,
    gap_tol: float = DEFAULT_GAP_TOL,
) -> OracleResult:
    """Exhaustive minimum-support search for an n x n simple matrix, n <= n_limit."""
    A = as_square_matrix(A)
    n = A.shape[0]
    if n > n_limit:
        raise TooLarge(f"n={n} exceeds the brute-force limit {n_limit}")
    basis = left_eigenbasis(A, residual_tol=residual_tol, gap_tol=gap_tol)
    eigen_supports = []
    for j, v in enumerate(basis.vectors, start=1):
        sup = set(structural_pattern(v, zero_tol).support)
        if not sup:
            raise ZeroPattern(f"eigenvector {j} has an all-zero pattern")
        eigen_supports.append(sup)

    for k in range(1, n + 1):
        feasible = [
            combo
            for combo in itertools.combinations(range(1, n + 1), k)
            if all(sup.intersection(combo) for sup in eigen_supports)
        ]
        if not feasible:
            continue
        verdicts = []
        for combo in feasible:
            b = realize(support_from_cover(combo, n), basis.vectors, config, zero_tol)
            verdicts.append(kalman_test(A, b, rank_tol).controllable)
        return OracleResult(
            min_support_size=k,
            optimal_supports=tuple(feasible),
            kalman_verdicts=tuple(verdicts),
        )
    raise AssertionError("unreachable: the full support is always feasible")
