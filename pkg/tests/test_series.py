"""Canonical series: term coefficients, classification, evaluation."""

import math
import random

import pytest

import helpers
from feyngkz import pipeline
from feyngkz.errors import DivergentArgument
from feyngkz.fixtures import fixtures
from feyngkz.params import ParamLinear
from feyngkz.series import term_coefficient


def test_term_coefficient_zero_off_halfspace():
    gamma = (ParamLinear.param("g1"), ParamLinear.param("g2"))
    coeff = term_coefficient(gamma, (1, -1), weight=(0, 1))
    assert coeff.is_zero()


def test_term_coefficient_matches_direct_product():
    """[gamma]_{u-}/[gamma+u]_{u+} against a direct numeric product."""
    rng = random.Random(11)
    names = ["g1", "g2", "g3"]
    gamma = tuple(ParamLinear.param(n) for n in names)
    for _ in range(300):
        u = tuple(rng.randrange(-4, 5) for _ in range(3))
        values = {n: rng.uniform(-3, 3) for n in names}
        weight = (1, 1, 1)
        if sum(u) < 0:
            continue
        coeff = term_coefficient(gamma, u, weight)
        direct = 1.0
        ok = True
        for n, x in zip(names, u):
            g = values[n]
            if x < 0:
                for k in range(-x):
                    direct *= g - k          # falling factorial
            elif x > 0:
                denom = 1.0
                for k in range(x):
                    denom *= g + 1 + k       # rising factorial of gamma + 1
                if denom == 0.0:
                    ok = False
                    break
                direct /= denom
        if not ok:
            continue
        assert coeff.evaluate(values) == pytest.approx(direct, rel=1e-10,
                                                       abs=1e-12), (u, values)


def test_symbolic_zero_for_integer_gamma():
    # gamma component 1 with a falling factorial of length 2: 1*0 = 0
    gamma = (ParamLinear.const(1), ParamLinear.param("g2"))
    coeff = term_coefficient(gamma, (-2, 2), weight=(1, 1))
    assert coeff.is_zero()


def test_gauss_series_is_2f1():
    rep = pipeline.run(fixtures()["2f1-double"])
    kinds = sorted(f.kind for f in rep.forms)
    assert kinds == ["2F1", "2F1"]
    for form in rep.forms:
        assert form.arguments == ["c2*c3/(c1*c4)"]
        assert form.argument_signs == [1]


def test_box_series_are_3f2_with_sign():
    rep = pipeline.run(fixtures()["box"])
    assert [f.kind for f in rep.forms] == ["3F2", "3F2", "3F2"]
    for form in rep.forms:
        assert form.arguments == ["c2*c4*c5/(c1*c3*c6)"]
        assert form.argument_signs == [-1]


def test_triangle_series_are_appell_f4():
    rep = pipeline.run(fixtures()["triangle-3scale"])
    assert [f.kind for f in rep.forms] == ["AppellF4"] * 4
    for form in rep.forms:
        assert form.arguments == ["c3*c4/(c1*c6)", "c2*c5/(c1*c6)"]


def _classified_vs_raw(name, order=40, terms=120, spec=None):
    if spec is None:
        spec = fixtures()[name]
    rep = pipeline.run(spec)
    coeffs = pipeline.coefficient_values(spec, rep.column_exponents,
                                         rep.polynomial)
    kin = {f"c{i + 1}": c for i, c in enumerate(coeffs)}
    assignment = spec.assignment()
    for series, form in zip(rep.series, rep.forms):
        raw, _ = series.evaluate(assignment, coeffs, order)
        prefactor = 1.0
        for c, g in zip(coeffs,
                        (g.evaluate(assignment)
                         for g in series.gamma.components)):
            prefactor *= c ** g
        independent = helpers.form_value(form, assignment, kin, terms=terms)
        assert raw / prefactor == pytest.approx(independent, rel=1e-10), name


def test_classification_consistent_with_raw_series_gauss():
    _classified_vs_raw("2f1-double")


def test_classification_consistent_with_raw_series_box():
    _classified_vs_raw("box", terms=200)


def test_classification_consistent_with_raw_series_triangle():
    _classified_vs_raw("triangle-3scale", terms=60)


def test_classification_consistent_with_raw_series_sunset():
    spec = fixtures()["sunset-1mass"]
    spec.coefficients = [1.6, 1.0, 1.0, 1.0, 1.0]   # pull |x| below 1
    _classified_vs_raw("sunset-1mass", order=90, terms=300, spec=spec)


def test_divergent_argument_raises():
    spec = fixtures()["one-mass-bubble"]
    rep = pipeline.run(spec)      # default orientation: argument 3/2 > 1
    coeffs = pipeline.coefficient_values(spec, rep.column_exponents,
                                         rep.polynomial)
    with pytest.raises(DivergentArgument):
        rep.series[0].evaluate(spec.assignment(), coeffs, 10)


def test_flipped_weight_inverts_argument():
    spec = fixtures()["one-mass-bubble"]
    spec.weight = (0, 0, 0, 1)
    rep = pipeline.run(spec)
    coeffs = pipeline.coefficient_values(spec, rep.column_exponents,
                                         rep.polynomial)
    value, tail = rep.series[0].evaluate(spec.assignment(), coeffs, 40)
    assert math.isfinite(value)
    assert tail < 1e-6 * abs(value)


def test_truncation_tail_reported():
    spec = fixtures()["2f1-double"]
    rep = pipeline.run(spec)
    coeffs = [1.0, 1.0, 1.0, 2.0]
    v20, t20 = rep.series[0].evaluate(spec.assignment(), coeffs, 20)
    v40, t40 = rep.series[0].evaluate(spec.assignment(), coeffs, 40)
    assert abs(v40 - v20) <= 10 * t20
    assert t40 < t20
