"""Hyperbolic predicates on the ball.

Distance uses the Klein chordal formula; commutation and the two
collinearity tests reduce geometric statements to numerically robust
algebraic ones (Gram determinants, translated commutation).
"""

from __future__ import annotations

import math

import numpy as np

from .ball import (
    DEFAULT_TOL,
    GyroVector,
    ToleranceConfig,
    _check_same_dim,
    approx_eq,
    einstein_add,
    neg,
)


def klein_distance(x: GyroVector, y: GyroVector) -> float:
    """Hyperbolic distance between ball points in the Klein model.

    d(x, y) = arcosh((1 - (x,y)) / sqrt((1-|x|^2)(1-|y|^2))), normalized so
    d(0, u) = artanh(|u|).  Rounding can push the arcosh argument a few ulp
    below 1 for nearly equal points, so it is clamped from below at 1.
    """
    _check_same_dim(x, y)
    arg = (1.0 - float(x.coords @ y.coords)) / math.sqrt((1.0 - x.norm2) * (1.0 - y.norm2))
    return math.acosh(max(arg, 1.0))


def commutes(u: GyroVector, v: GyroVector, tol: ToleranceConfig = DEFAULT_TOL) -> bool:
    """True when u (+) v and v (+) u agree within tolerance."""
    return approx_eq(einstein_add(u, v), einstein_add(v, u), tol)


def gram_determinant(a: np.ndarray, b: np.ndarray) -> float:
    """|a|^2 |b|^2 - (a, b)^2, the squared area spanned by a and b."""
    a2 = float(a @ a)
    b2 = float(b @ b)
    ab = float(a @ b)
    return a2 * b2 - ab * ab


def _gram_dependent(a: np.ndarray, b: np.ndarray, abs_tol: float) -> bool:
    a2 = float(a @ a)
    b2 = float(b @ b)
    ab = float(a @ b)
    # scale-aware cutoff: exact dependence gives a determinant that is pure
    # rounding noise relative to 1 + |a|^2 |b|^2
    return a2 * b2 - ab * ab <= abs_tol * (1.0 + a2 * b2)


def linearly_dependent(u: GyroVector, v: GyroVector, tol: ToleranceConfig = DEFAULT_TOL) -> bool:
    """Gram-determinant test for linear dependence of u and v.

    Commutation of the ball addition is equivalent to linear dependence of
    the operands, so this is the oracle side of the commutes check.
    """
    _check_same_dim(u, v)
    return _gram_dependent(u.coords, v.coords, tol.abs_tol)


def collinear_gyro(
    x: GyroVector, y: GyroVector, z: GyroVector, tol: ToleranceConfig = DEFAULT_TOL
) -> bool:
    """Collinearity of x, y, z decided inside the ball's own algebra.

    Translating by x (w -> (-x) (+) w) moves x to the origin; the three
    points are collinear exactly when the two translated points commute.
    """
    _check_same_dim(x, y)
    _check_same_dim(x, z)
    a = einstein_add(neg(x), y)
    b = einstein_add(neg(x), z)
    return commutes(a, b, tol)


def collinear_direct(
    x: GyroVector, y: GyroVector, z: GyroVector, tol: ToleranceConfig = DEFAULT_TOL
) -> bool:
    """Euclidean chord test: y - x and z - x linearly dependent.

    Ball lines are straight chords in this model, so this is the
    independent route against which collinear_gyro is verified.
    """
    _check_same_dim(x, y)
    _check_same_dim(x, z)
    return _gram_dependent(y.coords - x.coords, z.coords - x.coords, tol.abs_tol)
