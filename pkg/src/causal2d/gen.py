"""Seeded generation of homeomorphisms, group elements and (f, g) pairs.

The pseudo-random source is :class:`random.Random` (MT19937) seeded with the
integer ``GenParams.seed``; only ``randint`` draws are used.  A rational is
drawn as ``Fraction(randint(-R, R), randint(1, R))`` with ``R = coord_range``
and a positive rational as ``Fraction(randint(1, R), randint(1, R))``.
Independent trials use ``seed + trial_index`` (mod 2**64).
"""

from __future__ import annotations

import random
from dataclasses import dataclass, replace
from fractions import Fraction
from typing import Optional

from .automorphism import FGPair, HElement
from .homeo import Orientation, PLFunction, PLHomeo
from .minkowski import Event

__all__ = ["GenParams", "gen_homeo", "gen_helement", "gen_fg", "gen_event", "gen_rational"]

SEED_MODULUS = 2**64


@dataclass(frozen=True)
class GenParams:
    seed: int = 0
    max_breakpoints: int = 6
    coord_range: int = 12
    # None means either orientation (decided by a coin flip)
    orientation: Optional[Orientation] = None
    # g slopes are drawn as j/k * f' with |j| < k; defaults to coord_range
    ratio_denominator: Optional[int] = None

    def __post_init__(self) -> None:
        if not 0 <= self.seed < SEED_MODULUS:
            raise ValueError("seed must be a 64-bit unsigned integer")
        if self.max_breakpoints < 1 or self.coord_range < 1:
            raise ValueError("max_breakpoints and coord_range must be positive")
        if self.ratio_denominator is not None and self.ratio_denominator < 1:
            raise ValueError("ratio_denominator must be positive")

    def derive(self, index: int) -> GenParams:
        return replace(self, seed=(self.seed + index) % SEED_MODULUS)

    def rng(self) -> random.Random:
        return random.Random(self.seed)


def gen_rational(rng: random.Random, bound: int) -> Fraction:
    return Fraction(rng.randint(-bound, bound), rng.randint(1, bound))


def _positive(rng: random.Random, bound: int) -> Fraction:
    return Fraction(rng.randint(1, bound), rng.randint(1, bound))


def _orientation(rng: random.Random, params: GenParams) -> Orientation:
    if params.orientation is not None:
        return params.orientation
    return Orientation.INCREASING if rng.randint(0, 1) == 0 else Orientation.DECREASING


def _homeo(rng: random.Random, params: GenParams, orient: Orientation) -> PLHomeo:
    bound = params.coord_range
    k = rng.randint(1, params.max_breakpoints)
    ts: set[Fraction] = set()
    while len(ts) < k:
        ts.add(gen_rational(rng, bound))
    abscissae = sorted(ts)
    sign = orient.sign
    values = [gen_rational(rng, bound)]
    for a, b in zip(abscissae, abscissae[1:]):
        values.append(values[-1] + sign * _positive(rng, bound) * (b - a))
    left = sign * _positive(rng, bound)
    right = sign * _positive(rng, bound)
    return PLHomeo(tuple(abscissae), tuple(values), left, right)


def _ratio(rng: random.Random, k: int) -> Fraction:
    return Fraction(rng.randint(-(k - 1), k - 1), k)


def gen_homeo(params: GenParams) -> PLHomeo:
    rng = params.rng()
    return _homeo(rng, params, _orientation(rng, params))


def gen_helement(params: GenParams) -> HElement:
    rng = params.rng()
    orient = _orientation(rng, params)
    return HElement(_homeo(rng, params, orient), _homeo(rng, params, orient))


def gen_fg(params: GenParams) -> FGPair:
    rng = params.rng()
    f = _homeo(rng, params, _orientation(rng, params))
    k = params.ratio_denominator or params.coord_range
    ratios = [_ratio(rng, k) for _ in range(len(f.ts) + 1)]
    g_values = [_ratio(rng, k) * gen_rational(rng, params.coord_range)]
    for i, r in enumerate(ratios[1:-1]):
        g_values.append(g_values[-1] + r * (f.values[i + 1] - f.values[i]))
    g = PLFunction(f.ts, tuple(g_values), ratios[0] * f.left_slope, ratios[-1] * f.right_slope)
    return FGPair(f, g)


def gen_event(rng: random.Random, bound: int) -> Event:
    return Event(gen_rational(rng, bound), gen_rational(rng, bound))
