"""Causal automorphisms of 1+1 Minkowski space as pairs of homeomorphisms.

An :class:`HElement` ``(phi, psi)`` acts on null coordinates by
``(u, v) -> (phi(u), psi(v))`` when both maps increase and by
``(u, v) -> (phi(v), psi(u))`` when both decrease.  The group law that makes
this correspondence a homomorphism is :func:`star`, the componentwise
composition twisted by a component swap whenever the left factor reverses
orientation.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Optional

from .homeo import (
    IDENTITY,
    InvariantError,
    Orientation,
    PLFunction,
    PLHomeo,
    as_homeo,
    canonicalize,
    compose,
    invert,
    lincomb,
    pl_equal,
)
from .minkowski import Event, NullCoords, from_null, to_null

__all__ = [
    "OrientationMismatch",
    "SlopeViolation",
    "HElement",
    "FGPair",
    "validate_fg",
    "from_fg",
    "to_fg",
    "apply",
    "apply_rectangular",
    "standard_apply",
    "standard_formula",
    "pi",
    "z2_act",
    "star",
    "componentwise",
    "identity_element",
    "star_inverse",
    "omega",
]

HALF = Fraction(1, 2)


class OrientationMismatch(InvariantError):
    """``phi`` and ``psi`` do not share an orientation."""


class SlopeViolation(InvariantError):
    """``|g'| >= |f'|`` on some piece of the merged partition.

    ``lo``/``hi`` bound the offending piece; ``None`` stands for an infinite end.
    """

    def __init__(self, lo: Optional[Fraction], hi: Optional[Fraction],
                 f_slope: Fraction, g_slope: Fraction):
        self.lo, self.hi = lo, hi
        self.f_slope, self.g_slope = f_slope, g_slope
        lo_s = "-inf" if lo is None else str(lo)
        hi_s = "+inf" if hi is None else str(hi)
        super().__init__(
            f"|g'| >= |f'| on ({lo_s}, {hi_s}): f' = {f_slope}, g' = {g_slope}")


@dataclass(frozen=True, eq=False)
class HElement:
    phi: PLHomeo
    psi: PLHomeo

    def __post_init__(self) -> None:
        if not (isinstance(self.phi, PLHomeo) and isinstance(self.psi, PLHomeo)):
            raise TypeError("HElement components must be PLHomeo instances")
        if self.phi.orientation is not self.psi.orientation:
            raise OrientationMismatch(
                f"phi is {self.phi.orientation} but psi is {self.psi.orientation}")

    @property
    def orientation(self) -> Orientation:
        return self.phi.orientation

    def canonical(self) -> HElement:
        return HElement(canonicalize(self.phi), canonicalize(self.psi))

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, HElement):
            return NotImplemented
        return pl_equal(self.phi, other.phi) and pl_equal(self.psi, other.psi)

    def __hash__(self) -> int:
        return hash((self.phi, self.psi))

    def __mul__(self, other: HElement) -> HElement:
        return star(self, other)

    def __call__(self, p: Event) -> Event:
        return apply(self, p)


def _pieces(f: PLFunction, g: PLFunction):
    """Yield ``(lo, hi, f_slope, g_slope)`` over the merged partition, tails included."""
    ts = sorted(set(f.ts) | set(g.ts))
    yield None, ts[0], f.left_slope, g.left_slope
    for a, b in zip(ts, ts[1:]):
        d = b - a
        yield a, b, (f(b) - f(a)) / d, (g(b) - g(a)) / d
    yield ts[-1], None, f.right_slope, g.right_slope


@dataclass(frozen=True, eq=False)
class FGPair:
    """A homeomorphism ``f`` and function ``g`` with ``|g'| < |f'|`` everywhere."""

    f: PLHomeo
    g: PLFunction

    def __post_init__(self) -> None:
        if not isinstance(self.f, PLHomeo):
            raise TypeError("f must be a PLHomeo")
        for lo, hi, fs, gs in _pieces(self.f, self.g):
            if not abs(gs) < abs(fs):
                raise SlopeViolation(lo, hi, fs, gs)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, FGPair):
            return NotImplemented
        return pl_equal(self.f, other.f) and pl_equal(self.g, other.g)

    def __hash__(self) -> int:
        return hash((self.f, self.g))


def validate_fg(f: PLHomeo, g: PLFunction) -> FGPair:
    return FGPair(f, g)


def from_fg(p: FGPair) -> HElement:
    phi = as_homeo(canonicalize(lincomb(1, p.f, 1, p.g)))
    psi = as_homeo(canonicalize(lincomb(1, p.f, -1, p.g)))
    return HElement(phi, psi)


def to_fg(a: HElement) -> FGPair:
    f = as_homeo(canonicalize(lincomb(HALF, a.phi, HALF, a.psi)))
    g = canonicalize(lincomb(HALF, a.phi, -HALF, a.psi))
    return FGPair(f, g)


def apply(a: HElement, p: Event) -> Event:
    u, v = to_null(p)
    if a.phi.increasing:
        return from_null(NullCoords(a.phi(u), a.psi(v)))
    return from_null(NullCoords(a.phi(v), a.psi(u)))


def apply_rectangular(a: HElement, p: Event) -> Event:
    """Same map as :func:`apply`, written out in rectangular coordinates."""
    x, y = p
    phi, psi = a.phi, a.psi
    if phi.increasing:
        s, d = phi(x + y), psi(x - y)
    else:
        s, d = phi(x - y), psi(x + y)
    return Event((s + d) / 2, (s - d) / 2)


def standard_formula(f: PLHomeo, g: PLFunction, p: Event) -> Event:
    """Evaluate the ``(f, g)`` standard form at ``p`` without checking the slope condition.

    Only :func:`standard_apply` should be used on valid data; this entry point
    exists so that invalid pairs can be shown to break causality.
    """
    x, y = p
    fp, fm = f(x + y), f(x - y)
    gp, gm = g(x + y), g(x - y)
    if f.increasing:
        return Event((fm + fp) / 2 + (gp - gm) / 2, (fp - fm) / 2 + (gm + gp) / 2)
    return Event((fp + fm) / 2 + (gm - gp) / 2, (fm - fp) / 2 + (gp + gm) / 2)


def standard_apply(p: FGPair, e: Event) -> Event:
    return standard_formula(p.f, p.g, e)


def pi(a: HElement) -> int:
    return 0 if a.phi.increasing else 1


def z2_act(k: int, a: HElement) -> HElement:
    if k not in (0, 1):
        raise ValueError(f"Z2 element must be 0 or 1, got {k!r}")
    return a if k == 0 else HElement(a.psi, a.phi)


def star(a: HElement, b: HElement) -> HElement:
    c = z2_act(pi(a), b)
    return HElement(compose(a.phi, c.phi), compose(a.psi, c.psi))


def componentwise(a: HElement, b: HElement) -> HElement:
    """Untwisted product inherited from H(R) x H(R); not compatible with :func:`apply`."""
    return HElement(compose(a.phi, b.phi), compose(a.psi, b.psi))


def identity_element() -> HElement:
    return HElement(IDENTITY, IDENTITY)


def star_inverse(a: HElement) -> HElement:
    return z2_act(pi(a), HElement(invert(a.phi), invert(a.psi)))


def omega(f: PLHomeo) -> HElement:
    return HElement(f, f)
