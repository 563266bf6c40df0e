from core.errors import ScheduleRangeError
from models.params import DecaySchedule


def schedule_value(schedule: DecaySchedule, t: int) -> float:
    """Value of `schedule` at step `t`, for 0 <= t <= total_steps."""
    if t < 0 or t > schedule.total_steps:
        raise ScheduleRangeError(f"step {t} outside [0, {schedule.total_steps}]")
    fraction = t / schedule.total_steps
    if schedule.kind == "linear":
        if t == schedule.total_steps:
            return schedule.final
        return schedule.initial + (schedule.final - schedule.initial) * fraction
    if schedule.final <= 0:
        raise ScheduleRangeError("exponential decay needs a final value > 0")
    if t == schedule.total_steps:
        return schedule.final
    return schedule.initial * (schedule.final / schedule.initial) ** fraction
