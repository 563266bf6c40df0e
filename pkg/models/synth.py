from typing import List, Literal, Optional

from pydantic import BaseModel, ConfigDict, Field, model_validator

SynthKind = Literal["uniform_rect", "gaussian_mixture", "ring", "two_squares"]


class SynthSpec(BaseModel):
    """Parameters of a synthetic distribution. Only the fields of `kind` are read."""

    model_config = ConfigDict(frozen=True, extra="forbid")

    kind: SynthKind
    n: int = Field(..., ge=1)
    seed: int = Field(0, ge=0, lt=2 ** 64)

    # uniform_rect
    low: List[float] = Field(default_factory=lambda: [0.0, 0.0])
    high: List[float] = Field(default_factory=lambda: [1.0, 1.0])

    # gaussian_mixture
    centers: List[List[float]] = Field(default_factory=list)
    sigmas: List[float] = Field(default_factory=list)
    weights: Optional[List[float]] = None

    # ring
    center: List[float] = Field(default_factory=lambda: [0.0, 0.0])
    inner_radius: float = Field(0.5, ge=0)
    outer_radius: float = Field(1.0, gt=0)

    # two_squares: unit squares [0, side]^2 and [side + gap, 2 side + gap] x [0, side]
    side: float = Field(1.0, gt=0)
    gap: float = Field(3.0, ge=0)

    @model_validator(mode="after")
    def _kind_fields(self):
        if self.kind == "uniform_rect":
            if len(self.low) != len(self.high) or not self.low:
                raise ValueError("low and high must have the same nonzero length")
            if any(lo > hi for lo, hi in zip(self.low, self.high)):
                raise ValueError("low must not exceed high in any coordinate")
        elif self.kind == "gaussian_mixture":
            if not self.centers:
                raise ValueError("gaussian_mixture needs at least one center")
            if len({len(c) for c in self.centers}) != 1 or not self.centers[0]:
                raise ValueError("centers must share one nonzero dimension")
            if len(self.sigmas) != len(self.centers) or any(s <= 0 for s in self.sigmas):
                raise ValueError("one sigma > 0 is needed per center")
            weights = self.mixture_weights
            if len(weights) != len(self.centers) or any(w <= 0 for w in weights):
                raise ValueError("one positive weight is needed per center")
            if abs(sum(weights) - 1.0) > 1e-9:
                raise ValueError(f"weights must sum to 1, got {sum(weights)}")
        elif self.kind == "ring":
            if len(self.center) != 2:
                raise ValueError("ring center must be 2-D")
            if self.inner_radius >= self.outer_radius:
                raise ValueError("inner_radius must be smaller than outer_radius")
        return self

    @property
    def mixture_weights(self) -> List[float]:
        if self.weights is None:
            return [1.0 / len(self.centers)] * len(self.centers)
        return list(self.weights)
