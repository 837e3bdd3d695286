"""Household energy pricing: block electricity tariffs and subsidised fuel cylinders.

All money is US$ at full precision. Subsidy is always ``total - user`` and
may be negative when users pay more than the production cost.
"""
from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import Iterable

from .errors import ValidationError


@dataclass(frozen=True)
class Block:
    upper_bound: float  # kWh/month, math.inf for the last block
    rate: float  # US$/kWh


@dataclass(frozen=True)
class TariffSchedule:
    blocks: tuple[Block, ...]
    production_cost: float

    def __init__(self, blocks: Iterable[Block | tuple[float, float]], production_cost: float) -> None:
        blocks = tuple(b if isinstance(b, Block) else Block(*b) for b in blocks)
        object.__setattr__(self, "blocks", blocks)
        object.__setattr__(self, "production_cost", production_cost)
        validate_blocks(blocks)
        if not production_cost >= 0:
            raise ValidationError(f"production cost must be >= 0, got {production_cost}")

    @classmethod
    def flat(cls, rate: float, production_cost: float) -> TariffSchedule:
        return cls([Block(math.inf, rate)], production_cost)


def validate_blocks(blocks: tuple[Block, ...]) -> None:
    if not blocks:
        raise ValidationError("tariff needs at least one block")
    for i, b in enumerate(blocks):
        if not b.rate >= 0:
            raise ValidationError(f"block {i + 1}: rate must be >= 0, got {b.rate}")
        last = i == len(blocks) - 1
        if last and b.upper_bound != math.inf:
            raise ValidationError("the last block must be unbounded (inf)")
        if not last and b.upper_bound == math.inf:
            raise ValidationError(f"block {i + 1}: only the last block may be unbounded")
        if not last and not b.upper_bound > 0:
            raise ValidationError(f"block {i + 1}: upper bound must be > 0, got {b.upper_bound}")
        if i and not b.upper_bound > blocks[i - 1].upper_bound:
            raise ValidationError("blocks must be strictly increasing")


@dataclass(frozen=True)
class FuelPricing:
    user_price_per_cylinder: float
    full_cost_per_cylinder: float

    def __post_init__(self) -> None:
        if not self.user_price_per_cylinder >= 0 or not self.full_cost_per_cylinder >= 0:
            raise ValidationError("cylinder prices must be >= 0")


@dataclass(frozen=True)
class CostBreakdown:
    """Annual cost split, US$/y.

    The subsidy is derived as ``total - user`` so that ``total - user - subsidy``
    evaluates to exactly zero.
    """
    total: float
    user: float
    subsidy: float = field(init=False)

    def __post_init__(self) -> None:
        object.__setattr__(self, "subsidy", self.total - self.user)


def electricity_user_cost(monthly_kwh: float, schedule: TariffSchedule) -> float:
    """Monthly bill in US$ under the block schedule.

    Upper bounds are inclusive: consumption exactly at a bound is billed
    entirely in the lower blocks.
    """
    if not monthly_kwh >= 0:
        raise ValidationError(f"monthly consumption must be >= 0, got {monthly_kwh}")
    cost = 0.0
    lower = 0.0
    for block in schedule.blocks:
        if monthly_kwh <= lower:
            break
        portion = min(monthly_kwh, block.upper_bound) - lower
        cost += portion * block.rate
        lower = block.upper_bound
    return cost


def electricity_breakdown(monthly_kwh: float, schedule: TariffSchedule) -> CostBreakdown:
    total = monthly_kwh * 12 * schedule.production_cost
    user = electricity_user_cost(monthly_kwh, schedule) * 12
    return CostBreakdown(total, user)


def fuel_breakdown(cylinders_per_year: float, pricing: FuelPricing) -> CostBreakdown:
    if not cylinders_per_year >= 0:
        raise ValidationError(f"cylinders per year must be >= 0, got {cylinders_per_year}")
    total = cylinders_per_year * pricing.full_cost_per_cylinder
    user = cylinders_per_year * pricing.user_price_per_cylinder
    return CostBreakdown(total, user)
