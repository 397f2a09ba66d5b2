"""Seeded sampling inside the ball and the record type for property runs.

Shared by the verifier harness and the randomized morphism tests; kept in
its own module so both can import it without cycles.
"""

from __future__ import annotations

import hashlib
import json
import math
from dataclasses import dataclass
from typing import Any

import numpy as np

from .ball import DEFAULT_SAMPLE_RMAX, GyroVector


def derive_seed(master: int, label: str) -> int:
    """Stable 63-bit child seed for a named sub-stream of a master seed."""
    digest = hashlib.sha256(f"{int(master)}:{label}".encode()).digest()
    return int.from_bytes(digest[:8], "big") >> 1


class BallSampler:
    """Reproducible source of points with norm <= rmax.

    Directions come from normalized Gaussians, radii from rmax * U^(1/dim),
    which together are uniform on the ball of radius rmax.  The underlying
    `rng` is public so callers can draw auxiliary values (angles, scalars)
    from the same deterministic stream.
    """

    def __init__(self, seed: int, dim: int, rmax: float = DEFAULT_SAMPLE_RMAX):
        dim = int(dim)
        if dim < 1:
            raise ValueError(f"dim must be >= 1, got {dim}")
        if not 0.0 < rmax < 1.0:
            raise ValueError(f"rmax must be in (0, 1), got {rmax!r}")
        self.seed = int(seed)
        self.dim = dim
        self.rmax = float(rmax)
        self.rng = np.random.default_rng(self.seed)

    def sample(self) -> GyroVector:
        direction = self.rng.standard_normal(self.dim)
        length = float(np.linalg.norm(direction))
        while length == 0.0:  # probability zero, but never divide by it
            direction = self.rng.standard_normal(self.dim)
            length = float(np.linalg.norm(direction))
        radius = self.rmax * float(self.rng.uniform()) ** (1.0 / self.dim)
        return GyroVector((radius / length) * direction)


def sample_ball(sampler: BallSampler) -> GyroVector:
    """Draw the sampler's next point."""
    return sampler.sample()


def _jsonable(value: Any) -> Any:
    if isinstance(value, GyroVector):
        value = value.tolist()
    elif isinstance(value, np.ndarray):
        value = value.tolist()
    elif hasattr(value, "to_json_dict"):
        value = value.to_json_dict()
    elif isinstance(value, (np.floating, np.integer)):
        value = value.item()
    if isinstance(value, float):
        # JSON has no inf/nan; spell them out rather than crash the report
        return value if math.isfinite(value) else repr(value)
    if isinstance(value, dict):
        return {k: _jsonable(v) for k, v in value.items()}
    if isinstance(value, (list, tuple)):
        return [_jsonable(v) for v in value]
    return value


@dataclass(frozen=True)
class PropertyReport:
    """Outcome of one seeded randomized property run.

    `seed` is the master seed the caller passed in, i.e. what you need to
    reproduce the run; sub-streams are derived from it internally.
    `first_counterexample` is None on success, otherwise a JSON-ready dict
    of the (shrunk) failing inputs plus their residual.
    """

    name: str
    samples_run: int
    passed: bool
    max_residual: float
    first_counterexample: dict | None
    seed: int

    def to_json_dict(self) -> dict:
        return {
            "name": self.name,
            "samples_run": self.samples_run,
            "passed": self.passed,
            "max_residual": _jsonable(float(f"{self.max_residual:.15g}"))
            if math.isfinite(self.max_residual)
            else repr(self.max_residual),
            "first_counterexample": _jsonable(self.first_counterexample),
            "seed": self.seed,
        }

    def to_json_line(self) -> str:
        return json.dumps(self.to_json_dict(), allow_nan=False)
