"""Enumeration and scan limits for exhaustive computations."""

from __future__ import annotations

import os
from dataclasses import dataclass


class LimitExceededError(RuntimeError):
    """A group or ambient space is too large for exhaustive enumeration."""


@dataclass(frozen=True)
class Limits:
    # Largest |A| for which subgroup/automorphism enumeration is attempted.
    enumeration_bound: int = 4096
    # Largest |A^n| scanned element-by-element when computing dual codes.
    scan_bound: int = 10**7

    @staticmethod
    def from_env() -> "Limits":
        raw = os.environ.get("ADK_LIMIT")
        if raw is None:
            return Limits()
        bound = int(raw)
        return Limits(enumeration_bound=bound, scan_bound=bound)


def check_enumeration(cardinality: int, limits: Limits | None = None) -> None:
    lim = limits or Limits.from_env()
    if cardinality > lim.enumeration_bound:
        raise LimitExceededError(
            f"group of order {cardinality} exceeds enumeration bound "
            f"{lim.enumeration_bound}"
        )


def check_scan(cardinality: int, limits: Limits | None = None) -> None:
    lim = limits or Limits.from_env()
    if cardinality > lim.scan_bound:
        raise LimitExceededError(
            f"ambient space of order {cardinality} exceeds scan bound "
            f"{lim.scan_bound}"
        )
