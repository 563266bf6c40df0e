from typing import Literal, Optional

from pydantic import BaseModel, ConfigDict, Field

from models.params import DecaySchedule, GcsParams, GngParams, SomParams, SotaParams

ModelName = Literal["som", "gcs", "gng", "sota"]


class SomSettings(BaseModel):
    model_config = ConfigDict(extra="forbid")

    width: int = Field(10, ge=1)
    height: int = Field(10, ge=1)
    topology: Literal["rectangular", "hexagonal"] = "rectangular"
    steps: int = Field(10000, ge=0)
    alpha_kind: Literal["linear", "exponential"] = "linear"
    alpha_initial: float = 0.5
    alpha_final: float = 0.01
    radius_kind: Literal["linear", "exponential"] = "linear"
    radius_initial: float = 5.0
    radius_final: float = 0.0

    def to_params(self) -> SomParams:
        horizon = max(self.steps, 1)
        return SomParams(
            alpha=DecaySchedule(kind=self.alpha_kind, initial=self.alpha_initial,
                                final=self.alpha_final, total_steps=horizon),
            radius=DecaySchedule(kind=self.radius_kind, initial=self.radius_initial,
                                 final=self.radius_final, total_steps=horizon),
            total_steps=self.steps,
        )


class GcsSettings(GcsParams):
    model_config = ConfigDict(extra="forbid", frozen=True)

    presentations: int = Field(10000, ge=0)

    def to_params(self) -> GcsParams:
        return GcsParams(**self.model_dump(exclude={"presentations"}))


class GngSettings(GngParams):
    model_config = ConfigDict(extra="forbid", frozen=True)

    presentations: int = Field(20000, ge=0)

    def to_params(self) -> GngParams:
        return GngParams(**self.model_dump(exclude={"presentations"}))


class SotaSettings(SotaParams):
    model_config = ConfigDict(extra="forbid", frozen=True)

    # set to read --data as aligned sequences over this alphabet
    alphabet: Optional[str] = None

    def to_params(self) -> SotaParams:
        return SotaParams(**self.model_dump(exclude={"alphabet"}))


class RunConfig(BaseModel):
    """One training run. Built from the flat `key = value` namespace, where
    dotted keys (`gng.max_age`) address the model sections."""

    model_config = ConfigDict(extra="forbid")

    model: ModelName
    data: str
    seed: int = Field(0, ge=0, lt=2 ** 64)
    out: Optional[str] = None
    has_header: bool = False
    som: SomSettings = Field(default_factory=SomSettings)
    gcs: GcsSettings = Field(default_factory=GcsSettings)
    gng: GngSettings = Field(default_factory=GngSettings)
    sota: SotaSettings = Field(default_factory=SotaSettings)
