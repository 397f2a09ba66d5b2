"""Relativistic velocity addition on the open unit ball of R^n.

The carrier is the set of vectors of Euclidean norm < 1 (speed of light
normalized to 1).  The addition law is noncommutative and nonassociative;
its failure of associativity is measured by the gyration operator, which
the verifier module checks is always a rotation.  Everything here is pure
and dimension-agnostic.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

DEFAULT_ABS_TOL = 1e-9
DEFAULT_REL_TOL = 1e-9
DEFAULT_BOUNDARY_MARGIN = 1e-9
DEFAULT_SAMPLE_RMAX = 0.999


class GyroError(ValueError):
    """Base class for domain violations raised by this package."""


class BallDomainError(GyroError):
    """A vector is not strictly inside the guarded unit ball."""


class DimensionMismatchError(GyroError):
    """Operands live in different dimensions."""


@dataclass(frozen=True)
class ToleranceConfig:
    """Numeric policy shared across the package.

    abs_tol and rel_tol drive approximate comparisons, boundary_margin is
    the construction guard below the unit sphere, and sample_rmax caps the
    norm of randomly drawn vectors.
    """

    abs_tol: float = DEFAULT_ABS_TOL
    rel_tol: float = DEFAULT_REL_TOL
    boundary_margin: float = DEFAULT_BOUNDARY_MARGIN
    sample_rmax: float = DEFAULT_SAMPLE_RMAX

    def __post_init__(self) -> None:
        for field in ("abs_tol", "rel_tol", "boundary_margin", "sample_rmax"):
            value = getattr(self, field)
            if not (isinstance(value, (int, float)) and math.isfinite(value) and value > 0.0):
                raise ValueError(f"{field} must be a finite positive number, got {value!r}")
        if not self.sample_rmax < 1.0:
            raise ValueError(f"sample_rmax must be < 1, got {self.sample_rmax!r}")


DEFAULT_TOL = ToleranceConfig()


class GyroVector:
    """A point strictly inside the unit ball.

    Construction is strict: anything with norm >= 1 - boundary_margin is
    rejected rather than clamped, so no operation can silently leave the
    domain.  The squared norm and norm are computed once and cached since
    every operation needs them.
    """

    __slots__ = ("coords", "norm2", "norm")

    def __init__(self, coords, boundary_margin: float = DEFAULT_BOUNDARY_MARGIN):
        try:
            v = np.asarray(coords, dtype=float)
        except (TypeError, ValueError) as exc:
            raise BallDomainError(f"coords are not real numbers: {exc}") from exc
        if v.ndim != 1 or v.size == 0:
            raise BallDomainError("coords must be a non-empty 1-D sequence")
        norm2 = float(v @ v)
        # norm2 finite implies every component is finite; NaN/inf both fail here.
        if not math.isfinite(norm2):
            raise BallDomainError("coords must be finite")
        norm = math.sqrt(norm2)
        if norm >= 1.0 - boundary_margin:
            raise BallDomainError(
                f"|v| = {norm!r} is not strictly inside the unit ball "
                f"(boundary margin {boundary_margin:g})"
            )
        if isinstance(coords, np.ndarray) and np.shares_memory(v, coords):
            v = v.copy()
        v.flags.writeable = False
        self.coords = v
        self.norm2 = norm2
        self.norm = norm

    @property
    def dim(self) -> int:
        return self.coords.shape[0]

    @classmethod
    def zero(cls, dim: int) -> "GyroVector":
        return cls(np.zeros(int(dim)))

    def tolist(self) -> list[float]:
        return self.coords.tolist()

    def __repr__(self) -> str:
        inside = ", ".join(repr(c) for c in self.coords)
        return f"GyroVector([{inside}])"


def _check_same_dim(u: GyroVector, v: GyroVector) -> None:
    if u.dim != v.dim:
        raise DimensionMismatchError(f"dimension mismatch: {u.dim} vs {v.dim}")


def einstein_add(u: GyroVector, v: GyroVector) -> GyroVector:
    """Relativistic composition of velocities u and v.

    Evaluates the addition law in its textbook form,

        (u + s*v + ((u,v) / (1 + s)) * u) / (1 + (u,v)),    s = sqrt(1 - |u|^2),

    rather than any algebraically rearranged variant; the verifier
    cross-checks the result through the independent Lorentz-factor
    identity, so implementation and check cannot share a bug.
    """
    _check_same_dim(u, v)
    duv = float(u.coords @ v.coords)
    s = math.sqrt(1.0 - u.norm2)
    out = (u.coords + s * v.coords + (duv / (1.0 + s)) * u.coords) / (1.0 + duv)
    return GyroVector(out)


def gamma(u: GyroVector) -> float:
    """Lorentz factor 1 / sqrt(1 - |u|^2).

    Strict construction keeps |u| <= 1 - boundary_margin, so the result is
    finite (at most ~22360 at the default margin).
    """
    return 1.0 / math.sqrt(1.0 - u.norm2)


def neg(u: GyroVector) -> GyroVector:
    """Additive inverse; plain componentwise negation."""
    return GyroVector(-u.coords)


def gyration(u: GyroVector, v: GyroVector, w: GyroVector) -> GyroVector:
    """Apply the gyration gyr[u, v] to w.

    Defined as the associativity defect -(u (+) v) (+) (u (+) (v (+) w)).
    That this acts on w as an orthogonal map is a verified property
    (see the gyration_orthogonality check), never an assumption.
    """
    _check_same_dim(u, v)
    _check_same_dim(u, w)
    return einstein_add(neg(einstein_add(u, v)), einstein_add(u, einstein_add(v, w)))


def line_param(x: GyroVector, t: float) -> GyroVector:
    """Point at parameter t on the diameter through x != 0.

    Returns tanh(t * artanh(|x|)) * x / |x|.  The map t -> line_param(x, t)
    sends 0 to the origin, 1 to x, and parameter sums to ball sums, making
    the open diameter a subgroup isomorphic to (R, +).
    """
    t = float(t)
    if not math.isfinite(t):
        raise BallDomainError(f"parameter must be finite, got {t!r}")
    if x.norm == 0.0:
        raise BallDomainError("line_param requires a nonzero direction")
    radius = math.tanh(t * math.atanh(x.norm))
    return GyroVector((radius / x.norm) * x.coords)


def approx_eq(a: GyroVector, b: GyroVector, tol: ToleranceConfig = DEFAULT_TOL) -> bool:
    """Componentwise |a_i - b_i| <= abs_tol + rel_tol * max(|a_i|, |b_i|)."""
    _check_same_dim(a, b)
    bound = tol.abs_tol + tol.rel_tol * np.maximum(np.abs(a.coords), np.abs(b.coords))
    return bool(np.all(np.abs(a.coords - b.coords) <= bound))
