import random
from fractions import Fraction

import pytest

from tnforms.core import ContractError
from tnforms.forms import (BivariateForm, from_coefficient_factors,
                           from_factors, perturb, substitute_linear)
from tnforms.toeplitz import (build, consecutive_correspondence, is_consecutive,
                              is_initial, is_strongly_totally_nonnegative,
                              is_totally_nonnegative, is_totally_positive,
                              is_tp_k, iter_consecutive_sets, maximal_minor,
                              minor, rank, sperner_number, submatrix,
                              translate_to_initial)

from oracles import det_cofactor, rand_form_coeffs


def test_build_layout():
    rng = random.Random(20)
    coeffs = rand_form_coeffs(rng, 9)
    form = BivariateForm(9, coeffs)
    row = build(form, 0)
    assert row.rows == (coeffs,)
    band = build(form, 3)
    assert band.n_rows == 4 and band.n_cols == 7
    for p in range(4):
        for q in range(7):
            assert band.entry(p, q) == coeffs[3 + q - p]
    # rows are the reversed staircase: top row starts at c_3, bottom at c_0
    assert band.rows[0][0] == coeffs[3]
    assert band.rows[3][0] == coeffs[0]
    assert min(build(form, 4).n_rows, build(form, 4).n_cols) == 5
    with pytest.raises(ContractError):
        build(form, 10)


def test_minor_values():
    rng = random.Random(21)
    coeffs = rand_form_coeffs(rng, 9)
    form = BivariateForm(9, coeffs)
    band = build(form, 3)
    assert minor(band, (1,), (4,)) == coeffs[3 + 4 - 1]
    expected = det_cofactor([[coeffs[3], coeffs[7], coeffs[9]],
                             [coeffs[2], coeffs[6], coeffs[8]],
                             [coeffs[0], coeffs[4], coeffs[6]]])
    assert minor(band, (0, 1, 3), (0, 4, 6)) == expected
    for _ in range(10):
        rows = tuple(sorted(rng.sample(range(4), 3)))
        cols = tuple(sorted(rng.sample(range(7), 3)))
        oracle = det_cofactor([[band.entry(p, q) for q in cols] for p in rows])
        assert minor(band, rows, cols) == oracle
    with pytest.raises(ContractError):
        minor(band, (0, 1), (0, 1, 2))


def test_consecutive_and_initial_predicates():
    assert is_consecutive((1, 2, 3), (0, 1, 2))
    assert is_initial((1, 2, 3), (0, 1, 2))
    assert not is_consecutive((0, 2), (3, 4))
    assert is_consecutive((2, 3), (5, 6))
    assert not is_initial((2, 3), (5, 6))


def test_translate_to_initial():
    rng = random.Random(22)
    form = BivariateForm(10, rand_form_coeffs(rng, 10))
    band = build(form, 3)
    assert translate_to_initial(band, (2, 3), (5, 6)) == ((0, 1), (3, 4))
    assert translate_to_initial(band, (0, 1), (3, 4)) == ((0, 1), (3, 4))
    with pytest.raises(ContractError):
        translate_to_initial(band, (0, 2), (3, 4))
    for d in range(2, 11):
        form = BivariateForm(d, rand_form_coeffs(rng, d))
        for i in range(1, d // 2 + 1):
            band = build(form, i)
            for size in range(1, min(band.n_rows, band.n_cols) + 1):
                for rows, cols in iter_consecutive_sets(band, size):
                    shifted = translate_to_initial(band, rows, cols)
                    assert is_initial(*shifted)
                    assert submatrix(band, *shifted) == \
                        submatrix(band, rows, cols)


def test_consecutive_correspondence_cases():
    rng = random.Random(23)
    form = BivariateForm(9, rand_form_coeffs(rng, 9))
    mapping = consecutive_correspondence(form, 3)
    # no last column used: rows shift down by one
    assert mapping.forward((0, 1), (2, 3)) == ((1, 2), (2, 3))
    # last column used: columns shift left instead
    last = build(form, 2).n_cols - 1
    assert mapping.forward((0, 1), (last - 1, last)) == \
        ((0, 1), (last - 2, last - 1))
    with pytest.raises(ContractError):
        mapping.inverse((0, 1, 2, 3), (0, 1, 2, 3))


def test_consecutive_value_sets_match_between_adjacent_bands():
    rng = random.Random(24)
    for d in range(2, 11):
        form = BivariateForm(d, rand_form_coeffs(rng, d))
        for i in range(1, d // 2 + 1):
            lower, upper = build(form, i - 1), build(form, i)
            mapping = consecutive_correspondence(form, i)
            lower_vals = set()
            for size in range(1, min(lower.n_rows, lower.n_cols, i) + 1):
                for rows, cols in iter_consecutive_sets(lower, size):
                    lower_vals.add(submatrix(lower, rows, cols))
                    up = mapping.forward(rows, cols)
                    assert submatrix(upper, *up) == submatrix(lower, rows, cols)
            upper_vals = set()
            for size in range(1, min(upper.n_rows, upper.n_cols, i) + 1):
                for rows, cols in iter_consecutive_sets(upper, size):
                    upper_vals.add(submatrix(upper, rows, cols))
                    down = mapping.inverse(rows, cols)
                    assert submatrix(lower, *down) == submatrix(upper, rows,
                                                                cols)
            assert lower_vals == upper_vals


def test_total_positivity():
    form = from_coefficient_factors(4, [1, 2, 3, 4])
    band = build(form, 2)
    assert is_totally_positive(band)
    assert is_totally_positive(band, oracle=True)
    # the clustered product with roots 1..4 happens to be positive too
    assert is_totally_positive(build(from_factors([1, 2, 3, 4]), 2),
                               oracle=True)
    zero_entry = BivariateForm.from_coeffs([1, 0, 1])
    assert not is_totally_positive(build(zero_entry, 1))
    rng = random.Random(25)
    for _ in range(200):
        d = rng.randint(1, 8)
        # mix blatantly random forms with nonnegative ones so both outcomes
        # of the criterion appear
        if rng.random() < 0.5:
            coeffs = rand_form_coeffs(rng, d, span=4, max_den=3)
        else:
            coeffs = tuple(abs(c) for c in rand_form_coeffs(rng, d, span=4,
                                                            max_den=3))
        form = BivariateForm(d, coeffs)
        i = rng.randint(0, d // 2)
        band = build(form, i)
        assert is_totally_positive(band) == is_totally_positive(band,
                                                                oracle=True)


def test_total_nonnegativity_and_witness():
    assert is_totally_nonnegative(build(from_factors([0, 1, 2]), 1)).ok
    failing = is_totally_nonnegative(build(BivariateForm.from_coeffs([1, 0, 1]),
                                           1))
    assert not failing.ok
    assert failing.witness.rows == (0, 1)
    assert failing.witness.cols == (0, 1)
    assert failing.witness.value == -1
    # positivity implies nonnegativity
    form = from_coefficient_factors(6, [1, 2, 3, 4, 5, 6])
    for i in range(4):
        band = build(form, i)
        assert is_totally_positive(band)
        assert is_totally_nonnegative(band).ok


def test_tp_k():
    rng = random.Random(26)
    form = from_coefficient_factors(6, [1, 2, 3, 4, 5, 6])
    band = build(form, 3)
    assert is_tp_k(band, 1) == all(e > 0 for row in band.rows for e in row)
    assert is_tp_k(band, 4) == is_totally_positive(band)
    with pytest.raises(ContractError):
        is_tp_k(band, 5)
    for _ in range(200):
        d = rng.randint(1, 8)
        coeffs = rand_form_coeffs(rng, d, span=3, max_den=2)
        if rng.random() < 0.5:
            coeffs = tuple(abs(c) for c in coeffs)
        form = BivariateForm(d, coeffs)
        i = rng.randint(0, d // 2)
        band = build(form, i)
        k = rng.randint(1, min(band.n_rows, band.n_cols))
        assert is_tp_k(band, k) == is_tp_k(band, k, oracle=True)


def test_rank_and_sperner():
    x_cubed = from_factors([], extra_x=6)
    assert all(rank(build(x_cubed, i)) == 1 for i in range(4))
    assert sperner_number(x_cubed) == 1
    distinct = from_coefficient_factors(5, [1, 2, 3, 4, 5])
    for i in range(3):
        assert rank(build(distinct, i)) == i + 1
        assert rank(build(from_factors([1, 2, 3, 4, 5]), i)) == i + 1
    assert sperner_number(from_factors([1, 2, 3, 4, 5, 6])) == 4
    zero = BivariateForm.from_coeffs([0, 0, 0])
    assert rank(build(zero, 1)) == 0
    with pytest.raises(ContractError):
        sperner_number(zero)
    assert sperner_number(from_coefficient_factors(6, [1, 2, 3, 4, 5, 6])) == 4
    # rank identity: every level has rank min(i+1, s)
    rng = random.Random(27)
    for _ in range(20):
        d = rng.randint(1, 8)
        form = BivariateForm(d, rand_form_coeffs(rng, d))
        if form.is_zero:
            continue
        s = sperner_number(form)
        for i in range(d // 2 + 1):
            assert rank(build(form, i)) == min(i + 1, s)


def test_sperner_bump_of_perturbed_deformation():
    # Deforming and bumping the top-left coefficient raises the Sperner
    # number by exactly one while the cap allows it.
    rng = random.Random(28)
    for d in range(2, 7):
        for m in range(1, min(3, d + 1)):
            ratios = [Fraction(rng.randint(1, 5), rng.randint(1, 2))
                      for _ in range(m)]
            base = from_coefficient_factors(d, ratios)
            s = sperner_number(base)
            deformed = substitute_linear(base, Fraction(1, 3))
            assert sperner_number(deformed) == s
            if s > d // 2:
                continue
            bumped = perturb(base, Fraction(1, 3), Fraction(1, 64), s)
            assert sperner_number(bumped) == s + 1


def test_strongly_totally_nonnegative():
    row_case = BivariateForm.from_coeffs([1, 0, 1])
    assert is_strongly_totally_nonnegative(row_case, 0).ok
    result = is_strongly_totally_nonnegative(row_case, 1)
    assert not result.ok and result.level == 1
    # level 0 is exactly coefficient nonnegativity
    rng0 = random.Random(30)
    for _ in range(20):
        d = rng0.randint(1, 7)
        form = BivariateForm(d, rand_form_coeffs(rng0, d, span=3))
        assert is_strongly_totally_nonnegative(form, 0).ok == \
            all(c >= 0 for c in form.coeffs)
    stable = from_coefficient_factors(8, [1, 1, 2], 1)
    for i in range(5):
        assert is_strongly_totally_nonnegative(stable, i).ok
    # strong and plain nonnegativity agree level by level
    rng = random.Random(29)
    for _ in range(30):
        d = rng.randint(1, 8)
        form = BivariateForm(d, rand_form_coeffs(rng, d, span=3))
        for i in range(d // 2 + 1):
            assert is_strongly_totally_nonnegative(form, i).ok == \
                is_totally_nonnegative(build(form, i)).ok
