import numpy as np
from pydantic import BaseModel, ConfigDict, field_validator

from core.errors import DimensionMismatchError, InvalidProfileError

ROW_SUM_TOLERANCE = 1e-9


class SequenceProfile(BaseModel):
    """L positions x A symbols; each row is a distribution over the alphabet."""

    model_config = ConfigDict(arbitrary_types_allowed=True, frozen=True)

    matrix: np.ndarray

    @field_validator("matrix", mode="before")
    @classmethod
    def _distribution_rows(cls, value):
        matrix = np.array(value, dtype=np.float64)
        if matrix.ndim != 2 or matrix.shape[0] == 0 or matrix.shape[1] == 0:
            raise DimensionMismatchError(f"profile must be a nonempty L x A matrix, got shape {matrix.shape}")
        if not np.all(np.isfinite(matrix)):
            raise InvalidProfileError("profile entries must be finite")
        if np.any(matrix < 0) or np.any(matrix > 1):
            raise InvalidProfileError("profile entries must lie in [0, 1]")
        if np.any(np.abs(matrix.sum(axis=1) - 1.0) > ROW_SUM_TOLERANCE):
            raise InvalidProfileError("every profile row must sum to 1")
        matrix.setflags(write=False)
        return matrix

    @property
    def shape(self):
        return self.matrix.shape
