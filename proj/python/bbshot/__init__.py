"""Coprime bivariate bicycle codes with noisy-syndrome BP+OSD simulation."""

from bbshot._core import (
    Code,
    analyze,
    build,
    load,
    p_fail_theory,
    round_condition,
    simulate_logical,
    simulate_syndrome,
    wilson_interval,
)

__all__ = [
    "Code",
    "analyze",
    "build",
    "load",
    "p_fail_theory",
    "round_condition",
    "simulate_logical",
    "simulate_syndrome",
    "wilson_interval",
]
