"""Shared tolerance defaults and environment overrides.

Every verdict this package produces depends on explicit tolerances;
they are configuration, not constants buried in the code. Reports
always embed the values actually used.
"""
from __future__ import annotations

import os
from dataclasses import dataclass, replace

#: Residual bound for computed left-eigenpairs, relative to ||A||.
DEFAULT_RESIDUAL_TOL = 1e-8
#: Minimum eigenvalue separation, relative to 1 + max modulus.
DEFAULT_GAP_TOL = 1e-9
#: Zero threshold for pattern extraction, relative to the largest entry.
DEFAULT_ZERO_TOL = 1e-9
#: Orthogonality threshold for inner-product checks, relative scale.
DEFAULT_TAU = 1e-10

_ENV_PREFIX = "MINCONTROL_TOL_"


@dataclass(frozen=True)
class Tolerances:
    """Bundle of the five tolerances used across the pipeline.

    ``rank_tol=None`` means the per-matrix default
    ``eps * max(rows, cols)`` (relative to the largest singular value).
    """

    residual_tol: float = DEFAULT_RESIDUAL_TOL
    gap_tol: float = DEFAULT_GAP_TOL
    rank_tol: float | None = None
    zero_tol: float = DEFAULT_ZERO_TOL
    tau: float = DEFAULT_TAU

    def __post_init__(self):
        for name in ("residual_tol", "gap_tol", "tau"):
            if getattr(self, name) <= 0:
                raise ValueError(f"{name} must be positive")
        if self.zero_tol < 0:
            raise ValueError("zero_tol must be nonnegative")
        if self.rank_tol is not None and self.rank_tol <= 0:
            raise ValueError("rank_tol must be positive")

    @classmethod
    def from_env(cls, environ=None) -> "Tolerances":
        """Defaults overridden by MINCONTROL_TOL_{RESIDUAL,GAP,RANK,ZERO,ORTHO}."""
        environ = os.environ if environ is None else environ
        names = {
            "RESIDUAL": "residual_tol",
            "GAP": "gap_tol",
            "RANK": "rank_tol",
            "ZERO": "zero_tol",
            "ORTHO": "tau",
        }
        overrides = {}
        for env_key, field in names.items():
            raw = environ.get(_ENV_PREFIX + env_key)
            if raw is not None:
                try:
                    overrides[field] = float(raw)
                except ValueError as exc:
                    raise ValueError(
                        f"{_ENV_PREFIX}{env_key}={raw!r} is not a number"
                    ) from exc
        return cls(**overrides)

    def replace(self, **changes) -> "Tolerances":
        changes = {k: v for k, v in changes.items() if v is not None}
        return replace(self, **changes)

    def as_dict(self) -> dict:
        return {
            "residual_tol": self.residual_tol,
            "gap_tol": self.gap_tol,
            "rank_tol": self.rank_tol,
            "zero_tol": self.zero_tol,
            "tau": self.tau,
        }
