from typing import Literal, Optional

from pydantic import BaseModel, ConfigDict, Field, model_validator


class DecaySchedule(BaseModel):
    """A value decaying from `initial` to `final` over `total_steps` steps."""

    model_config = ConfigDict(frozen=True)

    kind: Literal["linear", "exponential"] = "linear"
    initial: float = Field(..., ge=0)
    final: float = Field(0.0, ge=0)
    total_steps: int = Field(..., gt=0)

    @model_validator(mode="after")
    def _non_increasing(self):
        if self.final > self.initial:
            raise ValueError(f"final ({self.final}) must not exceed initial ({self.initial})")
        return self


class SomParams(BaseModel):
    model_config = ConfigDict(frozen=True)

    alpha: DecaySchedule
    radius: DecaySchedule
    total_steps: int = Field(..., ge=0)

    @model_validator(mode="after")
    def _shared_horizon(self):
        if not 0 < self.alpha.initial <= 1:
            raise ValueError(f"alpha initial must lie in (0, 1], got {self.alpha.initial}")
        if self.total_steps > 0:
            for name, schedule in (("alpha", self.alpha), ("radius", self.radius)):
                if schedule.total_steps != self.total_steps:
                    raise ValueError(f"{name} schedule spans {schedule.total_steps} steps, expected {self.total_steps}")
        return self

    @classmethod
    def linear(cls, total_steps: int, alpha_initial: float = 0.5, alpha_final: float = 0.01,
               radius_initial: float = 5.0, radius_final: float = 0.0) -> "SomParams":
        """Linear schedules for both rate and radius over `total_steps`."""
        horizon = max(total_steps, 1)
        return cls(
            alpha=DecaySchedule(kind="linear", initial=alpha_initial, final=alpha_final, total_steps=horizon),
            radius=DecaySchedule(kind="linear", initial=radius_initial, final=radius_final, total_steps=horizon),
            total_steps=total_steps,
        )


class GcsParams(BaseModel):
    """Growing Cell Structures parameters. Defaults suit unit-scale 2-D data."""

    model_config = ConfigDict(frozen=True)

    k: int = Field(2, ge=1)
    eps_b: float = Field(0.06, gt=0, le=1)
    eps_n: float = Field(0.002, gt=0, le=1)
    counter_decay: float = Field(0.05, gt=0, lt=1)
    insert_every: int = Field(200, ge=1)
    delete_every: int = Field(0, ge=0)
    delete_threshold: float = Field(0.02, ge=0)
    max_nodes: Optional[int] = Field(None, ge=1)

    @model_validator(mode="after")
    def _rates(self):
        if not self.eps_b > self.eps_n:
            raise ValueError(f"eps_b ({self.eps_b}) must exceed eps_n ({self.eps_n})")
        return self


class GngParams(BaseModel):
    """Growing Neural Gas parameters. max_age, alpha_split, beta_decay and
    insert_every carry the customary GNG defaults."""

    model_config = ConfigDict(frozen=True)

    eps_b: float = Field(0.2, gt=0, le=1)
    eps_n: float = Field(0.006, gt=0, le=1)
    max_age: int = Field(50, ge=1)
    insert_every: int = Field(100, ge=1)
    alpha_split: float = Field(0.5, gt=0, lt=1)
    beta_decay: float = Field(0.0005, gt=0, lt=1)
    max_nodes: Optional[int] = Field(None, ge=2)

    @model_validator(mode="after")
    def _rates(self):
        if not self.eps_b > self.eps_n:
            raise ValueError(f"eps_b ({self.eps_b}) must exceed eps_n ({self.eps_n})")
        return self


class SotaParams(BaseModel):
    model_config = ConfigDict(frozen=True)

    eta_winner: float = Field(0.05, ge=0, le=1)
    eta_sister: float = Field(0.01, ge=0, le=1)
    eta_mother: float = Field(0.005, ge=0, le=1)
    # None means one pass over the dataset per cycle
    cycle_presentations: Optional[int] = Field(None, ge=1)
    resource_threshold: float = Field(0.1, gt=0)
    max_leaves: int = Field(64, ge=1)
    max_depth: Optional[int] = Field(None, ge=1)
    max_cycles: int = Field(1000, ge=1)
    initial_split: bool = True
    freeze_mothers: bool = True

    @model_validator(mode="after")
    def _ordered_rates(self):
        if not self.eta_winner >= self.eta_sister >= self.eta_mother:
            raise ValueError("rates must satisfy eta_winner >= eta_sister >= eta_mother")
        return self
