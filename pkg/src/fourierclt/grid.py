from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from fourierclt.constants import (
    DEFAULT_GRID_POINTS,
    DEFAULT_REFINE_TOL,
    DEFAULT_XI_MAX,
    DEFAULT_XI_MIN,
)
from fourierclt.errors import DomainError


@dataclass(frozen=True)
class GridSpec:
    xi_min: float = DEFAULT_XI_MIN
    xi_max: float = DEFAULT_XI_MAX
    points: int = DEFAULT_GRID_POINTS
    refine_tol: float = DEFAULT_REFINE_TOL

    def __post_init__(self) -> None:
        if not 0.0 < self.xi_min < self.xi_max:
            raise DomainError(
                f"grid needs 0 < xi_min < xi_max, got [{self.xi_min}, {self.xi_max}]"
            )
        if self.points < 3:
            raise DomainError(f"grid needs at least 3 points, got {self.points}")
        if not 0.0 < self.refine_tol < 1.0:
            raise DomainError(f"refine_tol must lie in (0, 1), got {self.refine_tol}")

    def positive(self) -> np.ndarray:
        return np.geomspace(self.xi_min, self.xi_max, self.points)

    def mirrored(self) -> np.ndarray:
        pos = self.positive()
        return np.concatenate([-pos[::-1], pos])

    def per_decade(self) -> float:
        return (self.points - 1) / np.log10(self.xi_max / self.xi_min)

    def doubled(self) -> "GridSpec":
        return GridSpec(self.xi_min, self.xi_max, 2 * self.points - 1, self.refine_tol)

    def to_dict(self) -> dict[str, float | int]:
        return {
            "xi_min": self.xi_min,
            "xi_max": self.xi_max,
            "points": self.points,
            "refine_tol": self.refine_tol,
        }


def standard_grid() -> GridSpec:
    return GridSpec()
