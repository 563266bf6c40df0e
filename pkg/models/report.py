from typing import Dict, Optional

from pydantic import BaseModel, Field

from core.config import FLOAT_FORMAT


class MetricReport(BaseModel):
    """Quality measures for a trained codebook over one dataset."""

    quantization_error: float = Field(..., ge=0)
    quantization_error_squared: float = Field(..., ge=0)
    # grid models only
    topographic_error: Optional[float] = Field(None, ge=0, le=1)
    dead_units: int = Field(..., ge=0)
    n_units: int = Field(..., ge=1)
    n_inputs: int = Field(..., ge=1)
    # model-specific counts (components, leaves, ...)
    extras: Dict[str, float] = Field(default_factory=dict)

    def as_lines(self) -> list:
        """Flat `key=value` lines, fixed key order."""
        values = {
            "n_inputs": self.n_inputs,
            "n_units": self.n_units,
            "quantization_error": self.quantization_error,
            "quantization_error_squared": self.quantization_error_squared,
            "dead_units": self.dead_units,
        }
        if self.topographic_error is not None:
            values["topographic_error"] = self.topographic_error
        values.update(sorted(self.extras.items()))
        return [f"{key}={_format(value)}" for key, value in values.items()]


def _format(value) -> str:
    if isinstance(value, float):
        return FLOAT_FORMAT % value
    return str(value)
