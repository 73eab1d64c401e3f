from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from mgbar.divisor_algebra import DivisorClass, Model, log_canonical_divisor
from mgbar.fcurves import (
    FCurve,
    Inapplicable,
    Nef,
    NotNef,
    enumerate_fcurves,
    gkm_nef_check,
    intersect,
    intersection_table,
    table_to_json,
    table_to_tsv,
)
from mgbar.oracle import naive_fcurves


def test_genus_three_families():
    curves = enumerate_fcurves(3)
    assert curves == [FCurve("A"), FCurve("B"), FCurve("C", (1,)), FCurve("E", (1, 1))]
    assert not [F for F in curves if F.family in "DF"]


def test_genus_four_f_family():
    assert [F for F in enumerate_fcurves(4) if F.family == "F"] == [FCurve("F", (1, 1, 1, 1))]


@pytest.mark.parametrize("g", range(3, 31))
def test_enumeration_matches_brute_force(g):
    main = [(F.family, F.params) for F in enumerate_fcurves(g)]
    assert main == naive_fcurves(g)
    assert len(set(main)) == len(main)


def test_enumeration_order_is_sorted():
    curves = enumerate_fcurves(12)
    assert curves == sorted(curves)


def test_d_family_deduplicated():
    assert [F.params for F in enumerate_fcurves(10) if F.family == "D"] == [(1,), (2,), (3,), (4,)]


def test_params_canonicalised():
    assert FCurve("E", (5, 2)) == FCurve("E", (2, 5))
    assert FCurve("F", (3, 1, 2, 1)).params == (1, 1, 2, 3)
    with pytest.raises(ValueError):
        FCurve("G")
    with pytest.raises(ValueError):
        FCurve("C", (1, 2))


def test_mg_stack_a_row_vanishes_at_nine_elevenths():
    assert intersect(log_canonical_divisor(10, Fraction(9, 11)), FCurve("A")) == 0


def test_ps_d1_vanishes_at_seven_tenths():
    D = log_canonical_divisor(10, Fraction(7, 10), Model.PS_PULLBACK)
    assert intersect(D, FCurve("D", (1,))) == 0


def test_lambda_on_b():
    assert intersect(DivisorClass.uniform(8, 1, 0), FCurve("B")) == 0


def test_out_of_range_parameters():
    D = log_canonical_divisor(5, Fraction(1, 2))
    for F in (FCurve("C", (4,)), FCurve("D", (3,)), FCurve("E", (2, 3)), FCurve("F", (1, 1, 1, 1))):
        with pytest.raises(ValueError):
            intersect(D, F)


def test_coarse_class_refused():
    with pytest.raises(ValueError):
        intersect(log_canonical_divisor(5, Fraction(1, 2), Model.COARSE_DAGGER), FCurve("A"))


def test_table_rows_by_hand():
    # b = (b0, b1, b2, b3) = (1, 2, 3, 4) in genus 6 with a = 20
    D = DivisorClass.from_coeffs(6, 20, [1, 2, 3, 4])
    values = {str(r.curve): r.value for r in intersection_table(D)}
    assert values["A"] == 20 - 12 + 2
    assert values["B"] == 1
    assert values["C(4)"] == 3          # b_4 = b_2
    assert values["D(1)"] == 2 - 2
    assert values["E(2,3)"] == 3 + 4 - 2   # b_5 = b_1
    assert values["F(1,1,1,3)"] == 2 + 2 + 2 + 4 - 3 - 3 - 3   # b_{i+l} = b_4 = b_2


coeff = st.fractions(min_value=-20, max_value=20, max_denominator=50)


@given(st.integers(3, 16), coeff, st.data())
def test_intersections_use_symmetric_lookup(g, a, data):
    half = data.draw(st.lists(coeff, min_size=g // 2 + 1, max_size=g // 2 + 1))
    D = DivisorClass(g, a, tuple(half))
    full = [half[min(i, g - i)] for i in range(g + 1)]
    # reflected lookup must be invisible: recompute E and F rows from a full table
    for F in enumerate_fcurves(g):
        p = F.params
        if F.family == "E":
            i, j = p
            assert intersect(D, F) == full[i] + full[j] - full[i + j]
            assert intersect(D, F) == full[g - i] + full[g - j] - full[g - i - j]
        if F.family == "F":
            i, j, k, l = p
            expected = full[i] + full[j] + full[k] + full[l] - full[g - i - j] - full[g - i - k] - full[g - i - l]
            assert intersect(D, F) == expected


def test_a_row_is_affine_for_mg(random_rationals):
    for alpha in random_rationals(10):
        assert intersect(log_canonical_divisor(9, alpha), FCurve("A")) == 11 * alpha - 9


def test_a_row_vanishes_for_ps(random_rationals):
    for alpha in random_rationals(10):
        assert intersect(log_canonical_divisor(9, alpha, Model.PS_PULLBACK), FCurve("A")) == 0


def test_nef_at_nine_elevenths():
    verdict = gkm_nef_check(log_canonical_divisor(10, Fraction(9, 11)))
    assert isinstance(verdict, Nef)
    zero = [r.curve for r in verdict.certificate if r.value == 0]
    assert zero == [FCurve("A")]
    assert all(r.value > 0 for r in verdict.certificate if r.curve != FCurve("A"))


def test_not_nef_below_seven_tenths():
    alpha = Fraction(7, 10) - Fraction(1, 100)
    verdict = gkm_nef_check(log_canonical_divisor(10, alpha, Model.PS_PULLBACK))
    assert isinstance(verdict, NotNef)
    assert verdict.witness == FCurve("D", (1,))
    assert verdict.value == 10 * alpha - 7


def test_lambda_minus_delta0_not_nef():
    verdict = gkm_nef_check(DivisorClass.from_coeffs(6, 1, {0: 1}))
    assert verdict == NotNef(FCurve("A"), Fraction(-11))


def test_hypothesis_failure_is_inapplicable():
    D = DivisorClass.from_coeffs(6, 13, [2, 1, 2, 2])
    verdict = gkm_nef_check(D)
    assert isinstance(verdict, Inapplicable)
    assert verdict.index == 1
    # mg stack class above 9/11 has b_1 = b_0, so the criterion applies
    assert not isinstance(gkm_nef_check(log_canonical_divisor(6, 1)), Inapplicable)
    # ps pullback above 9/11 has b_1 < b_0
    assert isinstance(gkm_nef_check(log_canonical_divisor(6, Fraction(10, 11), Model.PS_PULLBACK)), Inapplicable)


@given(st.integers(3, 14), st.fractions(min_value=0, max_value=20, max_denominator=30), st.data())
def test_nef_certificate_is_nonnegative(g, a, data):
    half = data.draw(st.lists(st.fractions(min_value=0, max_value=3, max_denominator=30),
                              min_size=g // 2 + 1, max_size=g // 2 + 1))
    verdict = gkm_nef_check(DivisorClass(g, a, tuple(half)))
    if isinstance(verdict, Nef):
        assert all(r.value >= 0 for r in verdict.certificate)
        assert [r.curve for r in verdict.certificate] == enumerate_fcurves(g)


def test_emitters():
    rows = intersection_table(log_canonical_divisor(4, Fraction(4, 5), Model.PS_PULLBACK))
    tsv = table_to_tsv(rows).splitlines()
    assert tsv[0] == "family\tparams\tvalue"
    assert tsv[1] == "A\t\t0"
    assert "F\t1,1,1,1\t" in "\n".join(tsv)
    js = table_to_json(rows)
    assert '"value": "0"' in js and '"params": [1, 1, 1, 1]' in js
