from fractions import Fraction as Q

import pytest
from hypothesis import given, strategies as st

from causal2d.homeo import (
    IDENTITY,
    InvariantError,
    NotMonotoneError,
    Orientation,
    PLFunction,
    PLHomeo,
    canonicalize,
    compose,
    evaluate,
    invert,
    lincomb,
    orientation,
    pl_equal,
)
from strategies import homeos, pl_functions, small

affine = PLHomeo.affine
KINK = PLHomeo.from_points([(0, 0), (1, 2)], 1, 1)


def naive_eval(p, t):
    """Reference evaluation: locate the segment by linear scan."""
    pts = p.breakpoints
    if t <= pts[0][0]:
        return pts[0][1] + p.left_slope * (t - pts[0][0])
    for (a, fa), (b, fb) in zip(pts, pts[1:]):
        if a <= t <= b:
            return fa + (fb - fa) / (b - a) * (t - a)
    return pts[-1][1] + p.right_slope * (t - pts[-1][0])


class TestEvaluate:
    def test_identity(self):
        assert evaluate(IDENTITY, 5) == 5

    def test_doubling(self):
        assert evaluate(affine(2), 3) == 6

    def test_kink(self):
        assert evaluate(KINK, Q(1, 2)) == 1
        assert evaluate(KINK, 2) == 3
        assert KINK(-1) == -1

    def test_rejects_float(self):
        with pytest.raises(TypeError):
            IDENTITY(0.5)

    @given(pl_functions(), small)
    def test_matches_linear_scan(self, p, t):
        assert evaluate(p, t) == naive_eval(p, t)


class TestConstruction:
    def test_non_increasing_abscissae(self):
        with pytest.raises(InvariantError):
            PLFunction.from_points([(1, 0), (0, 1)], 1, 1)

    def test_empty(self):
        with pytest.raises(InvariantError):
            PLFunction((), (), 1, 1)

    def test_zero_slope_homeo(self):
        with pytest.raises(NotMonotoneError):
            PLHomeo.affine(0)

    def test_mixed_sign_homeo(self):
        with pytest.raises(NotMonotoneError):
            PLHomeo.from_points([(0, 0), (1, 1)], 1, -1)

    def test_single_breakpoint_is_affine(self):
        h = PLHomeo.from_points([(3, 4)], 2, 2)
        assert h(0) == -2


class TestCompose:
    def test_identity_left(self):
        assert compose(IDENTITY, KINK) == KINK

    def test_affine(self):
        assert compose(affine(2), affine(1, 1)) == affine(2, 2)

    def test_reflection_involution(self):
        assert compose(affine(-1), affine(-1)) == IDENTITY

    def test_breakpoint_set(self):
        outer = PLHomeo.from_points([(5, 5), (6, 8)], 1, 1)
        inner = affine(2, 1)
        c = compose(outer, inner)
        # preimages of 5 and 6 under t -> 2t+1, plus inner's 0
        assert c.ts == (Q(0), Q(2), Q(5, 2))

    def test_orientation_product(self):
        assert compose(affine(-1), KINK).orientation is Orientation.DECREASING
        assert compose(affine(-1), affine(-3)).orientation is Orientation.INCREASING

    @given(homeos(), homeos(), small)
    def test_pointwise(self, a, b, t):
        assert compose(a, b)(t) == a(b(t))

    @given(homeos(), homeos(), homeos())
    def test_associative(self, a, b, c):
        assert compose(a, compose(b, c)) == compose(compose(a, b), c)

    @given(homeos())
    def test_closure(self, h):
        c = compose(h, h)
        assert isinstance(c, PLHomeo)
        assert c.orientation is Orientation.INCREASING


class TestInvert:
    def test_identity(self):
        assert invert(IDENTITY) == IDENTITY

    def test_doubling(self):
        assert invert(affine(2)) == affine(Q(1, 2))

    def test_kink(self):
        inv = invert(KINK)
        assert inv.breakpoints == [(0, 0), (2, 1)]
        assert (inv.left_slope, inv.right_slope) == (1, 1)
        assert inv.segment_slopes == (Q(1, 2),)

    @given(homeos())
    def test_two_sided(self, h):
        assert compose(h, invert(h)) == IDENTITY
        assert compose(invert(h), h) == IDENTITY

    @given(homeos(), small)
    def test_pointwise(self, h, t):
        assert invert(h)(h(t)) == t


class TestLincomb:
    def test_zero_weight(self):
        assert lincomb(1, KINK, 0, affine(7, 3)) == KINK

    def test_half_sum(self):
        assert lincomb(Q(1, 2), affine(Q(3, 2)), Q(1, 2), affine(Q(1, 2))) == IDENTITY

    def test_cancellation(self):
        assert lincomb(1, IDENTITY, 1, affine(-1)) == PLFunction.affine(0)

    @given(small, pl_functions(), small, pl_functions(), small)
    def test_pointwise(self, a, p, b, q, t):
        assert lincomb(a, p, b, q)(t) == a * p(t) + b * q(t)


class TestCanonicalize:
    def test_collinear_pair(self):
        c = canonicalize(PLFunction.from_points([(0, 0), (1, 1)], 1, 1))
        assert c.breakpoints == [(0, 0)]
        assert (c.left_slope, c.right_slope) == (1, 1)

    def test_collinear_triple(self):
        c = canonicalize(PLFunction.from_points([(0, 0), (1, 2), (2, 4)], 2, 2))
        assert c.breakpoints == [(0, 0)]
        assert (c.left_slope, c.right_slope) == (2, 2)

    def test_already_canonical(self):
        assert canonicalize(KINK) is KINK

    def test_affine_normal_form_is_unique(self):
        a = canonicalize(PLFunction.from_points([(3, 6)], 2, 2))
        b = canonicalize(PLFunction.from_points([(-1, -2)], 2, 2))
        assert a.breakpoints == b.breakpoints == [(0, 0)]

    def test_keeps_homeo_type(self):
        assert isinstance(canonicalize(compose(KINK, IDENTITY)), PLHomeo)

    @given(pl_functions())
    def test_idempotent(self, p):
        c = canonicalize(p)
        assert canonicalize(c).breakpoints == c.breakpoints

    @given(pl_functions(), st.randoms(use_true_random=False))
    def test_eval_preserving(self, p, rng):
        c = canonicalize(p)
        ts = [Q(rng.randint(-400, 400), rng.randint(1, 20)) for _ in range(100)]
        assert all(c(t) == p(t) for t in ts)


class TestEquality:
    def test_reflexive(self):
        assert pl_equal(KINK, KINK)

    def test_redundant_breakpoint(self):
        assert pl_equal(PLHomeo.from_points([(0, 0), (5, 5)], 1, 1), IDENTITY)

    def test_offset(self):
        assert not pl_equal(affine(2), affine(2, 1))

    @given(pl_functions(), pl_functions(), st.booleans())
    def test_matches_pointwise_on_partition(self, p, q, refine):
        if refine:
            q = lincomb(1, p, 0, q)  # p with q's breakpoints inserted
        # two PL functions agree everywhere iff they agree at every merged
        # breakpoint and at one point beyond each end
        ts = sorted(set(p.ts) | set(q.ts))
        probe = [ts[0] - 1, *ts, ts[-1] + 1]
        pointwise = all(p(t) == q(t) for t in probe)
        assert pl_equal(p, q) == pointwise

    @given(pl_functions())
    def test_hash_consistent(self, p):
        assert hash(p) == hash(canonicalize(p))


class TestOrientation:
    def test_values(self):
        assert orientation(IDENTITY) is Orientation.INCREASING
        assert orientation(affine(-1)) is Orientation.DECREASING
        assert orientation(KINK) is Orientation.INCREASING
