"""Sparsest-input placement: reduction to set cover plus numerical realization.

The pipeline: extract the zero/nonzero pattern of every left-eigenvector,
turn the patterns into a set-cover instance (position i's set collects
the eigenvectors that are nonzero there), solve the cover, and realize a
numerical input vector on the chosen support that is non-orthogonal to
every eigenvector. The Kalman rank test certifies the result.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable, Sequence

import numpy as np

from .errors import (
    DimensionMismatch,
    Infeasible,
    IndexOutOfRange,
    NotSimple,
    RepairFailed,
    VerificationFailed,
    ZeroPattern,
)
from .numerics import (
    LeftEigenbasis,
    as_square_matrix,
    as_vector,
    check_residuals,
    is_simple,
    left_eigenbasis,
)
from .setcover import (
    EXACT_UNIVERSE_LIMIT,
    CoverSolution,
    SetCoverInstance,
    solve_exact,
    solve_greedy,
)
from .structure import (
    StructuralVector,
    restrict,
    structural_inner,
    structural_pattern,
)
from .tolerances import (
    DEFAULT_GAP_TOL,
    DEFAULT_RESIDUAL_TOL,
    DEFAULT_TAU,
    DEFAULT_ZERO_TOL,
)
from .verify import VerificationReport, verification_report


@dataclass(frozen=True)
class RealizationConfig:
    """Knobs of the realization procedure.

    eps1 scales the step-3 re-alignment increments, eps2 the step-4
    zero-entry repairs; alpha gives the initial multiplier for each
    eigenvector (a scalar broadcasts). tau is the relative threshold
    below which an inner product counts as zero.
    """

    eps1: float = 0.1
    eps2: float = 0.1
    alpha: float | Sequence[float] = 1.0
    tau: float = DEFAULT_TAU

    def __post_init__(self):
        if self.eps1 <= 0 or self.eps2 <= 0:
            raise ValueError("eps1 and eps2 must be positive")
        if self.tau <= 0:
            raise ValueError("tau must be positive")

    def multipliers(self, count: int) -> np.ndarray:
        if np.isscalar(self.alpha):
            return np.full(count, complex(self.alpha))
        alpha = np.asarray(self.alpha, dtype=complex)
        if alpha.shape != (count,):
            raise DimensionMismatch(
                f"alpha has {alpha.size} entries for {count} vectors"
            )
        return alpha


@dataclass(frozen=True)
class RealizationStats:
    """Iteration counts, recorded to check the procedure's stated bounds."""

    step3_corrections: tuple[int, ...]
    step4_multipliers: dict[int, int] = field(default_factory=dict)


@dataclass(frozen=True, eq=False)
class McpSolution:
    """Chosen support, its pattern, the realized vector, and the certificate."""

    cover_indices: frozenset[int]
    pattern: StructuralVector
    vector: np.ndarray
    mode: str
    certificate: VerificationReport

    def __post_init__(self):
        object.__setattr__(self, "cover_indices", frozenset(self.cover_indices))
        vec = np.asarray(self.vector, dtype=complex)
        vec.setflags(write=False)
        object.__setattr__(self, "vector", vec)
        if self.pattern.support != tuple(sorted(self.cover_indices)):
            raise ValueError("pattern stars do not match the cover indices")
        nonzero = tuple(i + 1 for i in range(vec.size) if vec[i] != 0)
        if nonzero != self.pattern.support:
            raise ValueError("vector support does not match the pattern")

    @property
    def support(self) -> tuple[int, ...]:
        return self.pattern.support

    @property
    def size(self) -> int:
        return self.pattern.nnz


def build_cover_instance(patterns: Sequence[StructuralVector]) -> SetCoverInstance:
    """Reduce eigenvector patterns to a set-cover instance.

    With patterns of length n, set i (one per vector position) collects
    the indices j of the patterns that have a star at position i; the
    universe is {1..len(patterns)}. Choosing positions whose sets cover
    the universe is equivalent to choosing a support that leaves no
    pattern orthogonal to it.
    """
    if len(patterns) == 0:
        raise DimensionMismatch("at least one pattern is required")
    n = len(patterns[0])
    sets = [set() for _ in range(n)]
    for j, pat in enumerate(patterns, start=1):
        if len(pat) != n:
            raise DimensionMismatch("patterns have differing lengths")
        if pat.nnz == 0:
            raise ZeroPattern(f"pattern {j} is all-zero; no support can reach it")
        for pos in pat.support:
            sets[pos - 1].add(j)
    universe = frozenset(range(1, len(patterns) + 1))
    return SetCoverInstance(universe, tuple(frozenset(s) for s in sets))


def support_from_cover(indices: Iterable[int], n: int) -> StructuralVector:
    """Pattern of length n with stars exactly at the chosen positions."""
    mask = [False] * n
    for i in indices:
        if not 1 <= i <= n:
            raise IndexOutOfRange(f"position {i} outside 1..{n}")
        mask[i - 1] = True
    return StructuralVector(tuple(mask))


def _orthogonality_violation(bp, restricted, tau) -> int | None:
    """Index of the first vector numerically orthogonal to bp, if any.

    The scale is relative to the restricted vectors: the procedure works
    entirely inside the support subspace, so a vector whose restriction
    is tiny still only needs a healthy angle there, not a large raw
    inner product.
    """
    nb = np.linalg.norm(bp)
    for i, r in enumerate(restricted):
        if abs(np.vdot(bp, r)) <= tau * np.linalg.norm(r) * nb:
            return i
    return None


def _zero_entries(bp, tau, upto=None) -> list[int]:
    peak = np.abs(bp).max()
    head = bp if upto is None else bp[:upto]
    return [k for k, x in enumerate(head) if abs(x) <= tau * peak]


def realize_with_stats(
    pattern: StructuralVector,
    vectors: Sequence,
    config: RealizationConfig | None = None,
    zero_tol: float = DEFAULT_ZERO_TOL,
) -> tuple[np.ndarray, RealizationStats]:
    """Like :func:`realize`, also returning iteration counts."""
    cfg = config if config is not None else RealizationConfig()
    n = len(pattern)
    vecs = [as_vector(v, n) for v in vectors]
    if pattern.nnz == 0:
        raise Infeasible("the requested support is empty")

    # Step 1: the support must intersect every vector's nonzero pattern.
    vec_patterns = [structural_pattern(v, zero_tol) for v in vecs]
    for j, vp in enumerate(vec_patterns, start=1):
        if not structural_inner(pattern, vp):
            raise Infeasible(
                f"vector {j} has no nonzero entry on the requested support"
            )

    # Step 2: work in the support subspace.
    p = pattern.nnz
    support = pattern.support
    restricted = [restrict(v, pattern) for v in vecs]

    # Step 3: accumulate multiples of the restricted vectors, nudging the
    # partial sum whenever it becomes orthogonal to a processed vector.
    # Each outer round needs at most |J_e|+1 nudges.
    alphas = cfg.multipliers(len(vecs))
    bp = np.zeros(p, dtype=complex)
    step3_counts = []
    for j in range(len(vecs)):
        bp = bp + alphas[j] * restricted[j]
        bound = j + 2
        count = 0
        viol = _orthogonality_violation(bp, restricted[: j + 1], cfg.tau)
        while viol is not None and count < bound:
            bp = bp + cfg.eps1 * restricted[viol]
            count += 1
            viol = _orthogonality_violation(bp, restricted[: j + 1], cfg.tau)
        if viol is not None:
            raise RepairFailed(
                f"orthogonality to vector {viol + 1} persisted after {count} "
                "re-alignments; the input is numerically pathological"
            )
        step3_counts.append(count)

    # Step 4: repair zero entries, adding multiples of a vector that is
    # nonzero at the offending position (the lowest-index one), at most
    # p + |J| + 1 multiples per entry. A position no vector touches is
    # unconstrained (it enters no inner product), so the coordinate
    # direction itself serves as the repair vector there.
    step4_counts: dict[int, int] = {}
    multiplier_bound = p + len(vecs) + 1
    for k in range(p):
        if k not in _zero_entries(bp, cfg.tau):
            continue
        pos = support[k]
        m = next(
            (j for j, vp in enumerate(vec_patterns) if vp.mask[pos - 1]), None
        )
        if m is not None:
            direction = restricted[m]
        else:
            direction = np.zeros(p, dtype=complex)
            direction[k] = 1.0
        for mult in range(1, multiplier_bound + 1):
            bp = bp + cfg.eps2 * direction
            if not _zero_entries(bp, cfg.tau, upto=k + 1) and (
                _orthogonality_violation(bp, restricted, cfg.tau) is None
            ):
                step4_counts[pos] = mult
                break
        else:
            raise RepairFailed(
                f"entry at position {pos} could not be made nonzero within "
                f"{multiplier_bound} multiplier steps"
            )

    if _zero_entries(bp, cfg.tau) or (
        _orthogonality_violation(bp, restricted, cfg.tau) is not None
    ):
        raise RepairFailed("a residual violation survived the repair loops")

    # Step 5: scatter back to full dimension.
    b = np.zeros(n, dtype=complex)
    b[[s - 1 for s in support]] = bp
    return b, RealizationStats(tuple(step3_counts), step4_counts)


def realize(
    pattern: StructuralVector,
    vectors: Sequence,
    config: RealizationConfig | None = None,
    zero_tol: float = DEFAULT_ZERO_TOL,
) -> np.ndarray:
    """Numerical vector matching ``pattern``, non-orthogonal to every vector.

    Follows the bounded accumulate-and-repair construction: restrict the
    vectors to the support, add them up with re-alignment whenever a
    partial sum turns orthogonal to a processed vector, then repair any
    zero entries. Raises Infeasible when some vector vanishes on the
    support (no solution exists) and RepairFailed when an iteration
    bound is exhausted.
    """
    b, _ = realize_with_stats(pattern, vectors, config, zero_tol)
    return b


def solve_mcp(
    A=None,
    *,
    basis: LeftEigenbasis | None = None,
    mode: str = "exact",
    config: RealizationConfig | None = None,
    zero_tol: float = DEFAULT_ZERO_TOL,
    rank_tol: float | None = None,
    residual_tol: float = DEFAULT_RESIDUAL_TOL,
    gap_tol: float = DEFAULT_GAP_TOL,
    exact_limit: int = EXACT_UNIVERSE_LIMIT,
) -> McpSolution:
    """End-to-end sparsest-input solve for a simple matrix.

    Accepts the matrix, a precomputed left-eigenbasis, or both (the
    basis is then validated against the matrix). ``mode`` selects the
    exact or the greedy cover solver. The certificate of record is the
    Kalman rank test whenever the matrix is available; the eigenvector
    non-orthogonality test otherwise. Raises VerificationFailed (with
    the offending solution attached) when the certificate does not
    confirm controllability under the configured tolerances.
    """
    if mode not in ("exact", "greedy"):
        raise ValueError(f"mode must be 'exact' or 'greedy', got {mode!r}")
    cfg = config if config is not None else RealizationConfig()
    if A is None and basis is None:
        raise ValueError("either a matrix or an eigenbasis is required")
    if A is not None:
        A = as_square_matrix(A)
    if basis is None:
        basis = left_eigenbasis(A, residual_tol=residual_tol, gap_tol=gap_tol)
    else:
        if not is_simple(basis.eigenvalues, gap_tol):
            raise NotSimple("supplied eigenvalues are not pairwise distinct")
        if A is not None:
            check_residuals(A, basis, residual_tol)
    n = basis.n

    patterns = [structural_pattern(v, zero_tol) for v in basis.vectors]
    instance = build_cover_instance(patterns)
    cover: CoverSolution = (
        solve_exact(instance, exact_limit) if mode == "exact" else solve_greedy(instance)
    )
    pattern = support_from_cover(cover.indices, n)
    b = realize(pattern, basis.vectors, cfg, zero_tol)
    report = verification_report(A=A, b=b, basis=basis, rank_tol=rank_tol, tau=cfg.tau)
    solution = McpSolution(
        cover_indices=cover.indices,
        pattern=pattern,
        vector=b,
        mode=mode,
        certificate=report,
    )
    if not report.controllable:
        raise VerificationFailed(
            "the realized vector failed the controllability certificate "
            f"(kalman rank {report.kalman.rank if report.kalman else 'n/a'}); "
            "check the tolerance configuration",
            report=report,
            solution=solution,
        )
    return solution
