"""Executable oracles for causal automorphisms.

Every check returns a :class:`CheckReport`; failures are data, never
exceptions.  Checks stop at the first counterexample and record how many
trials they attempted.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass, field, replace
from fractions import Fraction
from itertools import product
from typing import Any, Callable, Optional

from . import order
from .automorphism import (
    FGPair,
    HElement,
    apply,
    componentwise,
    from_fg,
    identity_element,
    pi,
    standard_apply,
    star,
    star_inverse,
)
from .gen import GenParams, gen_event, gen_helement
from .homeo import Orientation, PLHomeo
from .minkowski import Event, causally_precedes, chronologically_precedes, to_null

__all__ = [
    "GridSpec",
    "Counterexample",
    "CheckReport",
    "check_causal_preservation",
    "check_group_axioms",
    "check_pi_homomorphism_cases",
    "check_theorem_equivalence",
    "naive_counterexample",
    "DEFAULT_GRID",
]

PointMap = Callable[[Event], Event]


@dataclass(frozen=True)
class GridSpec:
    t_min: Fraction = Fraction(-10)
    t_max: Fraction = Fraction(10)
    n: int = 21

    def __post_init__(self) -> None:
        object.__setattr__(self, "t_min", Fraction(self.t_min))
        object.__setattr__(self, "t_max", Fraction(self.t_max))
        if not self.t_min < self.t_max:
            raise ValueError("grid requires t_min < t_max")
        if self.n < 1:
            raise ValueError("grid needs at least one point per axis")

    def axis(self) -> list[Fraction]:
        if self.n == 1:
            return [self.t_min]
        step = (self.t_max - self.t_min) / (self.n - 1)
        return [self.t_min + i * step for i in range(self.n)]

    def events(self) -> list[Event]:
        """Grid events, row-major: x is the row index, y varies fastest."""
        ax = self.axis()
        return [Event(x, y) for x in ax for y in ax]


DEFAULT_GRID = GridSpec()


@dataclass(frozen=True)
class Counterexample:
    inputs: Any
    expected: Any
    actual: Any


@dataclass
class CheckReport:
    name: str
    passed: bool
    trials: int
    first_counterexample: Optional[Counterexample] = None
    coverage: Counter = field(default_factory=Counter)

    def __str__(self) -> str:
        head = f"{self.name}: {'PASS' if self.passed else 'FAIL'} ({self.trials} trials)"
        lines = [head]
        for key in sorted(self.coverage, key=str):
            lines.append(f"  {key}: {self.coverage[key]}")
        if self.first_counterexample is not None:
            c = self.first_counterexample
            lines.append(f"  counterexample: inputs={c.inputs} expected={c.expected} actual={c.actual}")
        return "\n".join(lines)


def _pass(name: str, trials: int, coverage: Counter | None = None) -> CheckReport:
    return CheckReport(name, True, trials, None, coverage or Counter())


def _fail(name: str, trials: int, cex: Counterexample, coverage: Counter | None = None) -> CheckReport:
    return CheckReport(name, False, trials, cex, coverage or Counter())


def check_causal_preservation(fmap: PointMap, grid: GridSpec = DEFAULT_GRID,
                              strict: bool = False) -> CheckReport:
    """Compare ``p <= q`` with ``F(p) <= F(q)`` over all ordered grid pairs.

    With ``strict=True`` the chronological order is compared instead.
    """
    name = "chronological preservation" if strict else "causal preservation"
    points = grid.events()
    images = [fmap(p) for p in points]
    src = [to_null(p) for p in points]
    img = [to_null(q) for q in images]
    k = order.first_mismatch(
        order.dense_ranks([n.u for n in src]), order.dense_ranks([n.v for n in src]),
        order.dense_ranks([n.u for n in img]), order.dense_ranks([n.v for n in img]),
        strict,
    )
    m = len(points)
    if k < 0:
        return _pass(name, m * m)
    i, j = divmod(k, m)
    rel = chronologically_precedes if strict else causally_precedes
    p, q = points[i], points[j]
    return _fail(name, k + 1, Counterexample(
        inputs=(p, q, images[i], images[j]),
        expected=rel(p, q),
        actual=rel(images[i], images[j]),
    ))


_PATTERNS = list(product((Orientation.INCREASING, Orientation.DECREASING), repeat=3))


def check_group_axioms(params: GenParams = GenParams(), trials: int = 100) -> CheckReport:
    """Associativity, two-sided identity and two-sided inverse under ``star``.

    With ``params.orientation`` unset, trial ``k`` uses orientation pattern
    ``k mod 8`` for ``(A, B, C)`` so every sign pattern is exercised.
    Coverage records the associativity table row ``(pi(A), pi(B))`` hit.
    """
    name = "group axioms"
    e = identity_element()
    coverage: Counter = Counter()
    for k in range(trials):
        base = params.derive(3 * k)
        if params.orientation is None:
            pattern = _PATTERNS[k % 8]
        else:
            pattern = (params.orientation,) * 3
        a, b, c = (gen_helement(replace(base.derive(i), orientation=o))
                   for i, o in enumerate(pattern))
        coverage[f"row pi(A),pi(B)={pi(a)},{pi(b)}"] += 1
        coverage[f"pattern {pi(a)}{pi(b)}{pi(c)}"] += 1
        checks = {
            "associativity": (star(a, star(b, c)), star(star(a, b), c)),
            "left identity": (star(e, a), a),
            "right identity": (star(a, e), a),
            "right inverse": (star(a, star_inverse(a)), e),
            "left inverse": (star(star_inverse(a), a), e),
        }
        for law, (lhs, rhs) in checks.items():
            if lhs != rhs:
                return _fail(name, k + 1, Counterexample((law, a, b, c), rhs, lhs), coverage)
    return _pass(name, trials, coverage)


def check_pi_homomorphism_cases(trials_per_case: int = 50, events_per_pair: int = 200,
                                params: GenParams = GenParams(),
                                product_op: Callable[[HElement, HElement], HElement] = star,
                                ) -> CheckReport:
    """Point map of ``product_op(A, B)`` against ``apply(A, apply(B, .))``.

    Runs ``trials_per_case`` random pairs in each of the four orientation
    cases, at ``events_per_pair`` random rational events per pair.
    """
    name = "Pi homomorphism"
    coverage: Counter = Counter()
    cases = list(product((Orientation.INCREASING, Orientation.DECREASING), repeat=2))
    trials = 0
    for ci, (oa, ob) in enumerate(cases):
        for k in range(trials_per_case):
            base = params.derive(4 * (ci * trials_per_case + k))
            a = gen_helement(replace(base, orientation=oa))
            b = gen_helement(replace(base.derive(1), orientation=ob))
            ab = product_op(a, b)
            rng = base.derive(2).rng()
            coverage[f"case ({pi(a)},{pi(b)})"] += 1
            for _ in range(events_per_pair):
                trials += 1
                p = gen_event(rng, 4 * params.coord_range)
                direct = apply(a, apply(b, p))
                via = apply(ab, p)
                if via != direct:
                    return _fail(name, trials, Counterexample((a, b, p), direct, via), coverage)
    return _pass(name, trials, coverage)


def check_theorem_equivalence(p: FGPair, grid: GridSpec = DEFAULT_GRID) -> CheckReport:
    """The (f, g) standard form and the (phi, psi) form agree at every grid event."""
    name = "representation equivalence"
    h = from_fg(p)
    events = grid.events()
    for k, e in enumerate(events):
        expected = standard_apply(p, e)
        actual = apply(h, e)
        if actual != expected:
            return _fail(name, k + 1, Counterexample((p, e), expected, actual))
    return _pass(name, len(events))


def naive_counterexample() -> tuple[HElement, HElement, Event, Event, Event]:
    """Witness that the componentwise product does not track composition of maps.

    Returns ``(A, B, e, true_image, naive_image)`` with ``A`` the spatial
    reflection and ``B`` a boost; ``true_image = A(B(e))``.
    """
    neg = PLHomeo.affine(-1)
    a = HElement(neg, neg)
    b = HElement(PLHomeo.affine(2), PLHomeo.affine(1))
    e = Event(1, 0)
    true_image = apply(a, apply(b, e))
    naive_image = apply(componentwise(a, b), e)
    assert true_image == apply(star(a, b), e)
    assert true_image != naive_image
    return a, b, e, true_image, naive_image
