from typing import List, Optional

import numpy as np
from pydantic import BaseModel, ConfigDict, field_validator, model_validator

from core.errors import DimensionMismatchError, EmptyDatasetError, NonFiniteError


class Dataset(BaseModel):
    """Ordered rows of n-dimensional real vectors, with optional integer labels.

    Labels are carried for evaluation only; no training routine reads them.
    """

    model_config = ConfigDict(arbitrary_types_allowed=True, frozen=True)

    rows: np.ndarray
    labels: Optional[List[int]] = None

    @field_validator("rows", mode="before")
    @classmethod
    def _as_matrix(cls, value):
        try:
            rows = np.array(value, dtype=np.float64)
        except ValueError as e:
            raise DimensionMismatchError(f"rows must have equal length: {e}")
        if rows.ndim == 1 and rows.size > 0:
            rows = rows.reshape(-1, 1)
        if rows.size == 0:
            raise EmptyDatasetError("dataset has no rows")
        if rows.ndim != 2:
            raise DimensionMismatchError(f"rows must form a 2-D table, got shape {rows.shape}")
        if not np.all(np.isfinite(rows)):
            raise NonFiniteError("rows must contain only finite values")
        rows.setflags(write=False)
        return rows

    @model_validator(mode="after")
    def _labels_match(self):
        if self.labels is not None and len(self.labels) != self.rows.shape[0]:
            raise DimensionMismatchError(f"labels has {len(self.labels)} entries but there are {self.rows.shape[0]} rows")
        return self

    @property
    def dim(self) -> int:
        return int(self.rows.shape[1])

    def __len__(self) -> int:
        return int(self.rows.shape[0])
