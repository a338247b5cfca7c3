"""Exact piecewise-linear functions and homeomorphisms of the real line.

A :class:`PLFunction` is stored as a finite list of breakpoints ``(t, value)``
plus the slopes of the two unbounded affine tails.  A :class:`PLHomeo` adds the
requirement that every slope is nonzero and of one sign, which makes it a
bijection of the real line.  All arithmetic uses :class:`fractions.Fraction`.
"""

from __future__ import annotations

import bisect
import enum
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Union

__all__ = [
    "Rational",
    "as_rational",
    "InvariantError",
    "NotMonotoneError",
    "Orientation",
    "PLFunction",
    "PLHomeo",
    "IDENTITY",
    "evaluate",
    "compose",
    "invert",
    "lincomb",
    "canonicalize",
    "pl_equal",
    "orientation",
    "as_homeo",
]

Rational = Fraction
RationalLike = Union[int, Fraction, str]


def as_rational(x: RationalLike) -> Fraction:
    """Convert ``x`` to a Fraction, refusing floats and bools."""
    if isinstance(x, Fraction):
        return x
    if isinstance(x, (bool, float)):
        raise TypeError(f"refusing inexact or boolean value {x!r}")
    if isinstance(x, (int, str)):
        return Fraction(x)
    raise TypeError(f"cannot interpret {x!r} as a rational")


class InvariantError(ValueError):
    """A value violates one of its type invariants."""


class NotMonotoneError(InvariantError):
    """Slopes of a would-be homeomorphism are zero or of mixed sign."""


class Orientation(enum.Enum):
    INCREASING = 1
    DECREASING = -1

    @property
    def sign(self) -> int:
        return self.value

    def __mul__(self, other: Orientation) -> Orientation:
        return Orientation(self.value * other.value)

    def __str__(self) -> str:
        return self.name.lower()


@dataclass(frozen=True, eq=False)
class PLFunction:
    """Continuous piecewise-linear map of the real line.

    ``ts`` must be strictly increasing and at least one breakpoint long.
    Equality is pointwise (via the canonical form), so two functions with
    different but redundant breakpoint lists compare equal.
    """

    ts: tuple[Fraction, ...]
    values: tuple[Fraction, ...]
    left_slope: Fraction
    right_slope: Fraction

    def __post_init__(self) -> None:
        ts = tuple(as_rational(t) for t in self.ts)
        values = tuple(as_rational(v) for v in self.values)
        if not ts:
            raise InvariantError("at least one breakpoint is required")
        if len(ts) != len(values):
            raise InvariantError("breakpoint abscissae and values differ in length")
        for a, b in zip(ts, ts[1:]):
            if not a < b:
                raise InvariantError(f"breakpoint abscissae not strictly increasing at {a}, {b}")
        object.__setattr__(self, "ts", ts)
        object.__setattr__(self, "values", values)
        object.__setattr__(self, "left_slope", as_rational(self.left_slope))
        object.__setattr__(self, "right_slope", as_rational(self.right_slope))

    @classmethod
    def from_points(cls, points: Iterable[tuple[RationalLike, RationalLike]],
                    left_slope: RationalLike, right_slope: RationalLike):
        pts = list(points)
        return cls(tuple(p[0] for p in pts), tuple(p[1] for p in pts), left_slope, right_slope)

    @classmethod
    def affine(cls, slope: RationalLike, intercept: RationalLike = 0):
        """The map ``t -> slope*t + intercept``."""
        return cls((Fraction(0),), (as_rational(intercept),), slope, slope)

    @property
    def breakpoints(self) -> list[tuple[Fraction, Fraction]]:
        return list(zip(self.ts, self.values))

    @property
    def segment_slopes(self) -> tuple[Fraction, ...]:
        ts, vs = self.ts, self.values
        return tuple((vs[i + 1] - vs[i]) / (ts[i + 1] - ts[i]) for i in range(len(ts) - 1))

    @property
    def slopes(self) -> tuple[Fraction, ...]:
        """All slopes from the left tail to the right tail."""
        return (self.left_slope, *self.segment_slopes, self.right_slope)

    def __call__(self, t: RationalLike) -> Fraction:
        return evaluate(self, t)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, PLFunction):
            return NotImplemented
        return pl_equal(self, other)

    def __hash__(self) -> int:
        c = canonicalize(self)
        return hash((c.ts, c.values, c.left_slope, c.right_slope))

    def __repr__(self) -> str:
        pts = ", ".join(f"({t}, {v})" for t, v in self.breakpoints)
        return f"{type(self).__name__}([{pts}], left={self.left_slope}, right={self.right_slope})"


@dataclass(frozen=True, eq=False, repr=False)
class PLHomeo(PLFunction):
    """Strictly monotone piecewise-linear bijection of the real line."""

    def __post_init__(self) -> None:
        super().__post_init__()
        slopes = self.slopes
        if any(s == 0 for s in slopes):
            raise NotMonotoneError("homeomorphism has a zero slope")
        if not (all(s > 0 for s in slopes) or all(s < 0 for s in slopes)):
            raise NotMonotoneError("homeomorphism slopes change sign")

    @property
    def orientation(self) -> Orientation:
        return Orientation.INCREASING if self.left_slope > 0 else Orientation.DECREASING

    @property
    def increasing(self) -> bool:
        return self.left_slope > 0


IDENTITY = PLHomeo.affine(1)


def evaluate(h: PLFunction, t: RationalLike) -> Fraction:
    t = as_rational(t)
    ts, vs = h.ts, h.values
    if t <= ts[0]:
        return vs[0] + h.left_slope * (t - ts[0])
    if t >= ts[-1]:
        return vs[-1] + h.right_slope * (t - ts[-1])
    i = bisect.bisect_right(ts, t) - 1
    t0, t1 = ts[i], ts[i + 1]
    v0, v1 = vs[i], vs[i + 1]
    return v0 + (v1 - v0) * (t - t0) / (t1 - t0)


def _same_kind(p: PLFunction, ts, values, left, right) -> PLFunction:
    cls = PLHomeo if isinstance(p, PLHomeo) else PLFunction
    return cls(tuple(ts), tuple(values), left, right)


def as_homeo(p: PLFunction) -> PLHomeo:
    """Reinterpret ``p`` as a homeomorphism; raises NotMonotoneError if it is not one."""
    if isinstance(p, PLHomeo):
        return p
    return PLHomeo(p.ts, p.values, p.left_slope, p.right_slope)


def invert(h: PLHomeo) -> PLHomeo:
    pts = sorted(zip(h.values, h.ts))
    if h.increasing:
        left, right = 1 / h.left_slope, 1 / h.right_slope
    else:
        # y -> -inf corresponds to t -> +inf
        left, right = 1 / h.right_slope, 1 / h.left_slope
    return PLHomeo(tuple(p[0] for p in pts), tuple(p[1] for p in pts), left, right)


def compose(outer: PLFunction, inner: PLHomeo) -> PLFunction:
    """``t -> outer(inner(t))``.

    The result is a PLHomeo whenever ``outer`` is one.  Breakpoints are the
    union of ``inner``'s breakpoints and the preimages of ``outer``'s under
    ``inner``; no canonicalization is performed.
    """
    inv = invert(inner)
    ts = sorted(set(inner.ts).union(inv(s) for s in outer.ts))
    values = [outer(inner(t)) for t in ts]
    if inner.increasing:
        left = outer.left_slope * inner.left_slope
        right = outer.right_slope * inner.right_slope
    else:
        left = outer.right_slope * inner.left_slope
        right = outer.left_slope * inner.right_slope
    return _same_kind(outer, ts, values, left, right)


def lincomb(a: RationalLike, p: PLFunction, b: RationalLike, q: PLFunction) -> PLFunction:
    """``t -> a*p(t) + b*q(t)`` as a plain PLFunction on the merged partition."""
    a, b = as_rational(a), as_rational(b)
    ts = sorted(set(p.ts) | set(q.ts))
    values = [a * p(t) + b * q(t) for t in ts]
    return PLFunction(tuple(ts), tuple(values),
                      a * p.left_slope + b * q.left_slope,
                      a * p.right_slope + b * q.right_slope)


def canonicalize(p: PLFunction) -> PLFunction:
    """Drop every breakpoint whose neighbouring slopes agree.

    A globally affine function is normalised to the single breakpoint
    ``(0, p(0))`` so that the canonical form is unique.
    """
    slopes = p.slopes
    keep = [i for i in range(len(p.ts)) if slopes[i] != slopes[i + 1]]
    if not keep:
        return _same_kind(p, [Fraction(0)], [p(0)], p.left_slope, p.right_slope)
    if len(keep) == len(p.ts):
        return p
    return _same_kind(p, [p.ts[i] for i in keep], [p.values[i] for i in keep],
                      p.left_slope, p.right_slope)


def pl_equal(p: PLFunction, q: PLFunction) -> bool:
    cp, cq = canonicalize(p), canonicalize(q)
    return (cp.ts == cq.ts and cp.values == cq.values
            and cp.left_slope == cq.left_slope and cp.right_slope == cq.right_slope)


def orientation(h: PLHomeo) -> Orientation:
    return h.orientation
