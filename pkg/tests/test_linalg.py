"""Sparse echelon bases over the rationals and Laurent-entry ranks."""

import random
from fractions import Fraction

from quiverhecke.laurent import LaurentPoly
from quiverhecke.linalg import SubspaceBasis, laurent_rank


def test_add_and_rank():
    sb = SubspaceBasis()
    assert sb.add({"a": Fraction(1), "b": Fraction(2)})
    assert sb.add({"b": Fraction(1)})
    # dependent vector must be rejected
    assert not sb.add({"a": Fraction(2), "b": Fraction(7)})
    assert sb.rank == 2


def test_contains_and_normal_form():
    sb = SubspaceBasis()
    sb.add({"x": Fraction(1), "y": Fraction(1)})
    assert sb.contains({"x": Fraction(3), "y": Fraction(3)})
    assert not sb.contains({"x": Fraction(1)})
    nf = sb.normal_form({"x": Fraction(1)})
    # the residual is supported away from pivot columns and differs from
    # the input by a span element
    assert set(nf) <= {"x", "y"} - set(sb.pivot_columns())
    diff = {"x": Fraction(1) - nf.get("x", 0), "y": -nf.get("y", 0)}
    diff = {k: v for k, v in diff.items() if v}
    assert sb.contains(diff)
    # normal form is idempotent
    assert sb.normal_form(nf) == nf


def test_normal_form_zero_on_span():
    sb = SubspaceBasis()
    sb.add({1: Fraction(2), 2: Fraction(4)})
    assert sb.normal_form({1: Fraction(1), 2: Fraction(2)}) == {}


def test_coords_in_gens_reconstructs():
    rng = random.Random(77)
    sb = SubspaceBasis(track=True)
    gens = []
    for _ in range(6):
        v = {k: Fraction(rng.randrange(-4, 5)) for k in range(5)}
        v = {k: c for k, c in v.items() if c}
        gens.append(v)
        sb.add(v)
    # a random combination of the generators must be recognized
    target = {}
    combo = [Fraction(rng.randrange(-3, 4)) for _ in gens]
    for c, g in zip(combo, gens):
        for k, val in g.items():
            target[k] = target.get(k, 0) + c * val
    target = {k: v for k, v in target.items() if v}
    coords = sb.coords_in_gens(target)
    assert coords is not None
    rebuilt = {}
    for idx, c in coords.items():
        for k, val in gens[idx].items():
            rebuilt[k] = rebuilt.get(k, 0) + c * val
    assert {k: v for k, v in rebuilt.items() if v} == target
    # a vector outside the span has no coordinates
    outside = dict(target)
    outside["w"] = Fraction(1)
    assert sb.coords_in_gens(outside) is None


def test_keyfunc_controls_pivots():
    sb = SubspaceBasis(keyfunc=lambda k: -k)
    sb.add({1: Fraction(1), 5: Fraction(1)})
    assert set(sb.pivot_columns()) == {5}


def test_laurent_rank():
    q = LaurentPoly.q_power
    one = LaurentPoly.one()
    # invertible 2x2
    assert laurent_rank([[q(1), one], [one, q(-1) + one]]) == 2
    # determinant q * q^-1 - 1 = 0
    assert laurent_rank([[q(1), one], [one, q(-1)]]) == 1
    assert laurent_rank([[LaurentPoly.zero()]]) == 0
    # rank grows with independent rows
    rows = [
        [one, q(2), LaurentPoly.zero()],
        [q(2), q(4), LaurentPoly.zero()],
        [LaurentPoly.zero(), LaurentPoly.zero(), one + q(2)],
    ]
    assert laurent_rank(rows) == 2
