"""Complex dense linear algebra: left-eigenbases, rank, reachability matrix.

Matrices and vectors are plain numpy arrays (complex128); the validators
here enforce the shape/finiteness invariants at operation boundaries.
The eigensolve relies on LAPACK's dense nonsymmetric driver via
``numpy.linalg.eig``, which is the standard Hessenberg + shifted-QR
route; left eigenvectors are obtained as right eigenvectors of the
conjugate transpose.
"""
from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .errors import DimensionMismatch, EigensolveFailed, NotSimple
from .tolerances import DEFAULT_GAP_TOL, DEFAULT_RESIDUAL_TOL

#: Relative magnitude below which an entry is ignored when fixing the
#: phase of an eigenvector (the "first nonzero entry" of the sign rule).
_PHASE_TOL = 1e-9


def as_square_matrix(A) -> np.ndarray:
    """Validate and return A as a finite complex n x n array."""
    A = np.asarray(A, dtype=complex)
    if A.ndim != 2 or A.shape[0] != A.shape[1] or A.shape[0] == 0:
        raise DimensionMismatch(f"expected a square matrix, got shape {A.shape}")
    if not np.all(np.isfinite(A.view(float))):
        raise ValueError("matrix entries must be finite")
    return A


def as_vector(v, n: int | None = None) -> np.ndarray:
    """Validate and return v as a finite complex vector, optionally of length n."""
    v = np.asarray(v, dtype=complex)
    if v.ndim != 1 or v.size == 0:
        raise DimensionMismatch(f"expected a nonempty vector, got shape {v.shape}")
    if n is not None and v.size != n:
        raise DimensionMismatch(f"expected length {n}, got {v.size}")
    if not np.all(np.isfinite(v.view(float))):
        raise ValueError("vector entries must be finite")
    return v


def is_simple(eigenvalues, gap_tol: float = DEFAULT_GAP_TOL) -> bool:
    """Whether all eigenvalues are pairwise distinct under the gap tolerance.

    True iff the minimum pairwise distance exceeds
    ``gap_tol * (1 + max modulus)``.
    """
    lam = np.asarray(eigenvalues, dtype=complex).ravel()
    if lam.size == 0:
        raise DimensionMismatch("eigenvalue sequence must be nonempty")
    if gap_tol <= 0:
        raise ValueError("gap_tol must be positive")
    if lam.size == 1:
        return True
    diffs = np.abs(lam[:, None] - lam[None, :])
    min_gap = diffs[~np.eye(lam.size, dtype=bool)].min()
    return bool(min_gap > gap_tol * (1.0 + np.abs(lam).max()))


@dataclass(frozen=True, eq=False)
class LeftEigenbasis:
    """n (eigenvalue, left-eigenvector) pairs of a simple n x n matrix.

    ``vectors[j]`` is the left eigenvector for ``eigenvalues[j]``:
    v† A = lambda v†. Pairs are sorted by descending real part, then
    descending imaginary part, so repeated runs produce identical output
    and downstream set labels stay stable.
    """

    eigenvalues: np.ndarray
    vectors: np.ndarray
    source: str = "computed"
    gap_tol: float = DEFAULT_GAP_TOL

    def __post_init__(self):
        lam = np.array(self.eigenvalues, dtype=complex).ravel()
        V = np.array(self.vectors, dtype=complex)
        if V.ndim != 2 or V.shape[0] != V.shape[1]:
            raise DimensionMismatch("vectors must form an n x n stack (one per row)")
        if lam.size != V.shape[0]:
            raise DimensionMismatch(
                f"{lam.size} eigenvalues for {V.shape[0]} eigenvectors"
            )
        if self.source not in ("computed", "user-supplied"):
            raise ValueError(f"unknown source {self.source!r}")
        norms = np.linalg.norm(V, axis=1)
        if np.any(norms == 0):
            raise ValueError("eigenvectors must be nonzero")
        if not is_simple(lam, self.gap_tol):
            raise NotSimple("eigenvalues are not pairwise distinct under gap_tol")
        lam.setflags(write=False)
        V.setflags(write=False)
        object.__setattr__(self, "eigenvalues", lam)
        object.__setattr__(self, "vectors", V)

    @classmethod
    def from_pairs(
        cls,
        eigenvalues,
        vectors,
        A=None,
        residual_tol: float = DEFAULT_RESIDUAL_TOL,
        gap_tol: float = DEFAULT_GAP_TOL,
    ) -> "LeftEigenbasis":
        """Wrap a user-supplied basis, validating residuals when A is given."""
        basis = cls(
            np.array(eigenvalues, dtype=complex),
            np.array(vectors, dtype=complex),
            source="user-supplied",
            gap_tol=gap_tol,
        )
        if A is not None:
            check_residuals(A, basis, residual_tol)
        return basis

    @property
    def n(self) -> int:
        return self.eigenvalues.size

    def __len__(self) -> int:
        return self.n

    def __iter__(self):
        return zip(self.eigenvalues, self.vectors)

    @property
    def pairs(self) -> tuple:
        return tuple(zip(self.eigenvalues, self.vectors))


def check_residuals(
    A, basis: LeftEigenbasis, residual_tol: float = DEFAULT_RESIDUAL_TOL
):
    """Raise EigensolveFailed if any pair violates ||v†A - lambda v†|| <= tol ||A||."""
    A = as_square_matrix(A)
    if A.shape[0] != basis.n:
        raise DimensionMismatch(
            f"matrix is {A.shape[0]}x{A.shape[0]} but basis has {basis.n} pairs"
        )
    scale = np.linalg.norm(A, 2)
    for j, (lam, v) in enumerate(basis, start=1):
        res = np.linalg.norm(v.conj() @ A - lam * v.conj())
        if res > residual_tol * scale * np.linalg.norm(v):
            raise EigensolveFailed(
                f"pair {j} residual {res:.3e} exceeds {residual_tol:.1e} * ||A||"
            )


def left_eigenbasis(
    A,
    residual_tol: float = DEFAULT_RESIDUAL_TOL,
    gap_tol: float = DEFAULT_GAP_TOL,
) -> LeftEigenbasis:
    """Compute the left-eigenbasis of a simple matrix.

    Each returned vector has unit Euclidean norm with its first nonzero
    entry made real and positive, so repeated runs produce identical
    output. Raises NotSimple when the eigenvalue gap check fails and
    EigensolveFailed when LAPACK does not converge or a residual exceeds
    ``residual_tol * ||A||``.
    """
    A = as_square_matrix(A)
    try:
        mu, W = np.linalg.eig(A.conj().T)
    except np.linalg.LinAlgError as exc:
        raise EigensolveFailed(str(exc)) from exc
    lam = mu.conj()
    order = np.lexsort((-lam.imag, -lam.real))
    lam = lam[order]
    V = W[:, order].T.copy()
    for j in range(V.shape[0]):
        v = V[j] / np.linalg.norm(V[j])
        mags = np.abs(v)
        lead = int(np.argmax(mags > _PHASE_TOL * mags.max()))
        v = v * (abs(v[lead]) / v[lead])
        V[j] = v
    if not is_simple(lam, gap_tol):
        raise NotSimple(
            "matrix eigenvalues are not pairwise distinct under gap_tol; "
            "the single-input placement problem needs a simple matrix"
        )
    basis = LeftEigenbasis(lam, V, source="computed", gap_tol=gap_tol)
    check_residuals(A, basis, residual_tol)
    return basis


def numerical_rank(M, rank_tol: float | None = None) -> int:
    """Number of singular values above ``rank_tol * sigma_max``.

    ``rank_tol=None`` uses ``eps * max(rows, cols)``. The zero matrix has
    rank 0.
    """
    M = np.asarray(M, dtype=complex)
    if M.ndim != 2 or M.size == 0:
        raise DimensionMismatch(f"expected a nonempty 2-d matrix, got shape {M.shape}")
    if rank_tol is None:
        rank_tol = np.finfo(float).eps * max(M.shape)
    s = np.linalg.svd(M, compute_uv=False)
    if s.size == 0 or s[0] == 0:
        return 0
    return int(np.sum(s > rank_tol * s[0]))


def controllability_matrix(A, b) -> np.ndarray:
    """The n x n matrix [b, Ab, ..., A^(n-1) b]."""
    A = as_square_matrix(A)
    n = A.shape[0]
    b = as_vector(b, n)
    C = np.empty((n, n), dtype=complex)
    C[:, 0] = b
    for k in range(1, n):
        C[:, k] = A @ C[:, k - 1]
    return C


def perturb_nonzero(A, magnitude: float, seed: int) -> np.ndarray:
    """Add iid uniform noise on [-magnitude, magnitude] to each nonzero entry.

    Deterministic for a given seed. Real matrices stay real.
    """
    A = np.asarray(A)
    if magnitude < 0:
        raise ValueError("magnitude must be nonnegative")
    rng = np.random.default_rng(seed)
    noise = rng.uniform(-magnitude, magnitude, A.shape)
    out = np.array(A, dtype=complex if np.iscomplexobj(A) else float, copy=True)
    out[A != 0] += noise[A != 0]
    return out
