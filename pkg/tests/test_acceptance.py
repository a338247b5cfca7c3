"""Acceptance criteria; run ``pytest tests/test_acceptance.py`` for the summary.

Every comparison is exact rational equality; no tolerance appears anywhere.
"""

from dataclasses import replace
from fractions import Fraction as Q
from pathlib import Path

import pytest

from causal2d.automorphism import (
    FGPair,
    HElement,
    SlopeViolation,
    apply,
    componentwise,
    from_fg,
    omega,
    pi,
    standard_formula,
    star,
    star_inverse,
    to_fg,
)
from causal2d.cli import main
from causal2d.document import dumps_element, loads_element
from causal2d.gen import GenParams, gen_fg, gen_helement, gen_homeo
from causal2d.homeo import Orientation, PLFunction, PLHomeo, compose, lincomb
from causal2d.minkowski import Event
from causal2d.verify import (
    DEFAULT_GRID,
    check_causal_preservation,
    check_group_axioms,
    check_pi_homomorphism_cases,
    check_theorem_equivalence,
    naive_counterexample,
)

FIX = Path(__file__).parent / "fixtures"
INC, DEC = Orientation.INCREASING, Orientation.DECREASING
PAIRS_PER_GRID = 441 * 441


@pytest.mark.criterion(1, "group axioms under star, 200 triples, all 8 sign patterns, exact")
def test_group_axioms():
    r = check_group_axioms(GenParams(seed=1001), 200)
    assert r.passed, str(r)
    assert r.trials == 200
    patterns = [f"pattern {a}{b}{c}" for a in "01" for b in "01" for c in "01"]
    assert all(r.coverage[p] > 0 for p in patterns)
    rows = [f"row pi(A),pi(B)={a},{b}" for a in "01" for b in "01"]
    assert all(r.coverage[row] > 0 for row in rows)


@pytest.mark.criterion(2, "Pi homomorphism, 4 cases x 50 pairs x 200 events, exact")
def test_pi_homomorphism_cases():
    r = check_pi_homomorphism_cases(50, 200, GenParams(seed=2002))
    assert r.passed, str(r)
    assert r.trials == 4 * 50 * 200
    assert sorted(r.coverage.values()) == [50, 50, 50, 50]


@pytest.mark.criterion(3, "standard form equals (phi, psi) form on 21x21 grid for 100 pairs; roundtrips")
def test_representation_equivalence():
    seen = set()
    for k in range(100):
        p = gen_fg(GenParams(seed=3003 + k, orientation=INC if k % 2 == 0 else DEC))
        seen.add(p.f.orientation)
        r = check_theorem_equivalence(p, DEFAULT_GRID)
        assert r.passed, str(r)
        assert r.trials == 441
        assert to_fg(from_fg(p)) == p
        a = from_fg(p)
        assert from_fg(to_fg(a)) == a
    assert seen == {INC, DEC}


@pytest.mark.criterion(4, "causal and chronological order preserved, 100 elements, 21x21 grid")
def test_causality_preservation():
    causal_pairs = chrono_pairs = 0
    for k in range(100):
        a = gen_helement(GenParams(seed=4004 + k))
        rc = check_causal_preservation(a, DEFAULT_GRID)
        rs = check_causal_preservation(a, DEFAULT_GRID, strict=True)
        assert rc.passed, str(rc)
        assert rs.passed, str(rs)
        causal_pairs += rc.trials
        chrono_pairs += rs.trials
    assert causal_pairs == chrono_pairs == 100 * PAIRS_PER_GRID


def _invalid_pairs():
    """Pairs whose slope ratio reaches or exceeds 1 in absolute value somewhere."""
    pairs = []
    for k, r in enumerate([Q(1), Q(-1), Q(2), Q(-3, 2), Q(5, 4), Q(-7)]):
        f = gen_homeo(GenParams(seed=5005 + k))
        pairs.append((f, lincomb(r, f, 1, PLFunction.affine(0, k))))
    # violation confined to [-5, 5]; g is flat outside
    for k, r in enumerate([Q(1), Q(-1), Q(3), Q(-2), Q(3, 2), Q(-5, 4)]):
        f = gen_homeo(GenParams(seed=5105 + k, max_breakpoints=4, coord_range=4))
        ts = sorted({Q(-5), Q(5), *(t for t in f.ts if -5 < t < 5)})
        g = PLFunction(tuple(ts), tuple(r * f(t) for t in ts), 0, 0)
        pairs.append((f, g))
    return pairs


@pytest.mark.criterion(5, "negative control: >= 10 pairs with |g'| >= |f'| rejected by the grid oracle")
def test_negative_control():
    pairs = _invalid_pairs()
    assert len(pairs) >= 10
    for f, g in pairs:
        with pytest.raises(SlopeViolation):
            FGPair(f, g)
        r = check_causal_preservation(lambda e, f=f, g=g: standard_formula(f, g, e), DEFAULT_GRID)
        assert not r.passed
        p, q, fp, fq = r.first_counterexample.inputs
        assert standard_formula(f, g, p) == fp and standard_formula(f, g, q) == fq


@pytest.mark.criterion(6, "naive componentwise product is not the composition of point maps")
def test_naive_counterexample():
    a, b, e, true_image, naive_image = naive_counterexample()
    assert a == HElement(PLHomeo.affine(-1), PLHomeo.affine(-1))
    assert b == HElement(PLHomeo.affine(2), PLHomeo.affine(1))
    assert e == Event(1, 0)
    assert apply(star(a, b), e) == apply(a, apply(b, e)) == true_image == Event(Q(-3, 2), Q(1, 2))
    assert apply(componentwise(a, b), e) == naive_image == Event(Q(-3, 2), Q(-1, 2))
    assert naive_image != true_image


@pytest.mark.criterion(7, "pi is a homomorphism (500 samples); Omega is a homomorphism (200 pairs)")
def test_pi_and_omega():
    for k in range(500):
        base = GenParams(seed=7007 + 2 * k)
        a, b = gen_helement(base), gen_helement(base.derive(1))
        assert pi(star(a, b)) == (pi(a) + pi(b)) % 2
        assert pi(star_inverse(a)) == pi(a)
    decreasing_f = 0
    for k in range(200):
        base = GenParams(seed=8008 + 2 * k)
        f = gen_homeo(replace(base, orientation=DEC) if k % 2 else base)
        g = gen_homeo(base.derive(1))
        decreasing_f += f.orientation is DEC
        assert omega(compose(f, g)) == star(omega(f), omega(g))
    assert decreasing_f >= 100


@pytest.mark.criterion(8, "CLI: 1000 exact document roundtrips, byte-identical exports, exit codes")
def test_cli_end_to_end(tmp_path, capsys):
    for k in range(1000):
        a = gen_helement(GenParams(seed=9009 + k))
        assert loads_element(dumps_element(a)) == a

    for fmt in ("csv", "svg"):
        outs = [tmp_path / f"{fmt}{i}" for i in range(2)]
        for out in outs:
            assert main(["export", str(FIX / "boost.json"), "--format", fmt, "-o", str(out)]) == 0
        assert outs[0].read_bytes() == outs[1].read_bytes()

    assert main(["validate", str(FIX / "identity.json")]) == 0
    assert main(["validate", str(FIX / "mixed_orientation.json")]) == 1
    assert main(["validate", str(FIX / "nonmonotone.json")]) == 1
    assert main(["validate", str(FIX / "bad_number.json")]) == 2
    assert main(["export", str(FIX / "identity.json"), "-o", str(tmp_path / "no" / "dir.csv")]) == 3
    capsys.readouterr()
