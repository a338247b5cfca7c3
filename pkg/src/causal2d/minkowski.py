"""Events of two-dimensional Minkowski space and its causal orders.

``y`` is the time coordinate and ``x`` the spatial one, so ``q`` lies in the
causal future of ``p`` exactly when ``y_q - y_p >= |x_q - x_p|``.  Null
coordinates are ``u = x + y`` and ``v = x - y``.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterator

from .homeo import RationalLike, as_rational

__all__ = [
    "Event",
    "NullCoords",
    "to_null",
    "from_null",
    "causally_precedes",
    "chronologically_precedes",
]


@dataclass(frozen=True)
class Event:
    x: Fraction
    y: Fraction

    def __post_init__(self) -> None:
        object.__setattr__(self, "x", as_rational(self.x))
        object.__setattr__(self, "y", as_rational(self.y))

    def __iter__(self) -> Iterator[Fraction]:
        yield self.x
        yield self.y

    def __str__(self) -> str:
        return f"{self.x} {self.y}"


@dataclass(frozen=True)
class NullCoords:
    u: Fraction
    v: Fraction

    def __post_init__(self) -> None:
        object.__setattr__(self, "u", as_rational(self.u))
        object.__setattr__(self, "v", as_rational(self.v))

    def __iter__(self) -> Iterator[Fraction]:
        yield self.u
        yield self.v


def to_null(p: Event) -> NullCoords:
    return NullCoords(p.x + p.y, p.x - p.y)


def from_null(n: NullCoords) -> Event:
    return Event((n.u + n.v) / 2, (n.u - n.v) / 2)


def event(x: RationalLike, y: RationalLike) -> Event:
    return Event(as_rational(x), as_rational(y))


def causally_precedes(p: Event, q: Event) -> bool:
    """``p <= q`` in the causal order (closed light cone, reflexive)."""
    return q.y - p.y >= abs(q.x - p.x)


def chronologically_precedes(p: Event, q: Event) -> bool:
    """``p << q``: ``q`` lies strictly inside the future cone of ``p``."""
    return q.y - p.y > abs(q.x - p.x)
