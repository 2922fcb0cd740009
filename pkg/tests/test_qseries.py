import itertools

import pytest

from hopfqsym.qseries import (
    BinomialPoly,
    GaussianFn,
    LaurentPoly,
    SeriesTrunc,
    binom_int,
    d_op,
    is_gaussian,
    ps,
    ps1,
    ps_gaussian,
    qbinomial,
    sps,
    sps_monomial_oracle,
    to_qbinomial_basis,
)
from hopfqsym.qsym import QSym


def compositions_of_weight(w):
    if w == 0:
        yield ()
        return
    for head in range(1, w + 1):
        for tail in compositions_of_weight(w - head):
            yield (head,) + tail


def box_partition_oracle(n, k):
    """qbin(n, k) coefficient of q^j counts partitions of j into at most k
    parts, each at most n - k; enumerate weakly decreasing part tuples."""
    if k > n:
        return LaurentPoly.zero()
    out = {}

    def walk(parts_left, max_part, total):
        out[total] = out.get(total, 0) + 1
        if parts_left == 0:
            return
        for part in range(1, max_part + 1):
            walk(parts_left - 1, part, total + part)

    walk(k, n - k, 0)
    return LaurentPoly(out)


# --- Laurent polynomial basics -------------------------------------------


def test_laurent_arithmetic_and_int_interop():
    p = LaurentPoly({2: 3, -1: 1})
    assert p + 1 == LaurentPoly({2: 3, -1: 1, 0: 1})
    assert p - p == 0
    assert (p * LaurentPoly.q()) == LaurentPoly({3: 3, 0: 1})
    assert p.subs_qinv() == LaurentPoly({-2: 3, 1: 1})
    assert p.at_one() == 4
    assert p.shifted(2) == LaurentPoly({4: 3, 1: 1})


def test_laurent_json_round_trip():
    p = LaurentPoly({-2: 5, 0: -1, 3: 2})
    assert p.to_json() == [[-2, 5], [0, -1], [3, 2]]
    assert LaurentPoly.from_json(p.to_json()) == p


# --- q-binomials ----------------------------------------------------------


def test_qbinomial_base_cases():
    for n in range(6):
        assert qbinomial(n, 0) == 1
    assert qbinomial(2, 1) == LaurentPoly({0: 1, 1: 1})
    assert qbinomial(1, 2) == 0


def test_qbinomial_4_2():
    assert qbinomial(4, 2) == LaurentPoly({0: 1, 1: 1, 2: 2, 3: 1, 4: 1})


@pytest.mark.parametrize("n,k", [(n, k) for n in range(8) for k in range(5)])
def test_qbinomial_against_partition_oracle(n, k):
    assert qbinomial(n, k) == box_partition_oracle(n, k)


# --- difference operators -------------------------------------------------


def test_d0_of_q_integer_then_d1():
    f = lambda n: qbinomial(n, 1)
    d0 = d_op(0, f)
    for n in range(6):
        assert d0(n) == LaurentPoly.q(n)
    d1 = d_op(1, d0)
    for n in range(5):
        assert d1(n) == 0


def test_dm_of_constant():
    c = LaurentPoly({0: 7})
    f = lambda n: c
    for m in range(4):
        assert d_op(m, f)(3) == c - c.shifted(m)


def test_pascal_identity_via_d_operator():
    # D_d applied to qbin(., d) yields qbin(., d-1)
    for d in range(1, 5):
        f = lambda n, d=d: qbinomial(n, d)
        dd = d_op(d, f)
        for n in range(9):
            assert dd(n) == qbinomial(n, d - 1)


def test_difference_operators_commute():
    f = lambda n: qbinomial(n + 1, 2) + LaurentPoly.q(n)
    for a in range(3):
        for b in range(3):
            left = d_op(a, d_op(b, f))
            right = d_op(b, d_op(a, f))
            for n in range(5):
                assert left(n) == right(n)


def test_is_gaussian_constant():
    window = [LaurentPoly({0: 5})] * 4
    assert is_gaussian(window, 0)


def test_is_gaussian_qbinomial_degree_detection():
    window = [qbinomial(n, 2) for n in range(8)]
    assert is_gaussian(window, 2)
    assert not is_gaussian(window[:4], 1)


def test_is_gaussian_pure_power():
    window = [LaurentPoly.q(2 * n) for n in range(6)]
    assert is_gaussian(window, 2)


def test_is_gaussian_window_too_short():
    with pytest.raises(ValueError):
        is_gaussian([LaurentPoly.one()] * 3, 1)


# --- Gaussian evaluation --------------------------------------------------


def test_gaussian_eval_window_round_trip():
    window = [qbinomial(n, 3) for n in range(4)]
    f = GaussianFn(3, window)
    for n in range(4):
        assert f.eval(n) == window[n]


def test_gaussian_eval_forward_matches_qbinomial():
    f = GaussianFn(3, [qbinomial(n, 3) for n in range(4)])
    for n in range(4, 12):
        assert f.eval(n) == qbinomial(n, 3)


def test_gaussian_eval_backward_q_integer():
    f = GaussianFn(1, [qbinomial(0, 1), qbinomial(1, 1)])
    assert f.eval(-1) == LaurentPoly({-1: -1})


def test_gaussian_eval_backward_then_forward_consistent():
    f = GaussianFn(2, [qbinomial(n, 2) for n in range(3)])
    g = GaussianFn(2, [f.eval(n) for n in (-2, -1, 0)])
    # re-derived from a backward window, shifted evaluation must agree
    for n in range(-2, 6):
        assert g.eval(n + 2) == f.eval(n)


# --- ps -------------------------------------------------------------------


def test_ps_of_m1_is_q_integer():
    m1 = QSym.monomial((1,))
    for n in range(7):
        assert ps(m1, n) == qbinomial(n, 1)


def test_ps_at_zero_kills_positive_weight():
    for alpha in [(1,), (2,), (1, 1), (2, 1)]:
        assert ps(QSym.monomial(alpha), 0) == 0
    assert ps(QSym.one(), 0) == 1


def test_ps_is_algebra_morphism_small():
    basis = [QSym.monomial(c) for w in range(4) for c in compositions_of_weight(w)]
    for a, b in itertools.product(basis, repeat=2):
        prod = a * b
        for n in range(6):
            assert ps(prod, n) == ps(a, n) * ps(b, n)


def test_ps_window_killed_by_difference_chain():
    samples = [
        QSym.monomial((2, 1)),
        QSym.monomial((1, 1, 1)) + 2 * QSym.monomial((3,)),
        5 * QSym.monomial((2, 2)) - QSym.monomial((1, 2, 1)),
    ]
    for q in samples:
        d = q.max_weight()
        window = [ps(q, n) for n in range(2 * (d + 1))]
        assert is_gaussian(window, d)


def test_ps_gaussian_matches_ps_everywhere():
    q = 3 * QSym.monomial((1, 2)) + QSym.monomial((1,))
    f = ps_gaussian(q)
    for n in range(10):
        assert f.eval(n) == ps(q, n)


def test_ps_gaussian_of_one_is_constant():
    f = ps_gaussian(QSym.one())
    assert f.degree == 0
    for n in (-3, 0, 5):
        assert f.eval(n) == 1


# --- ps1 ------------------------------------------------------------------


def test_binom_int_on_negatives():
    assert binom_int(-1, 2) == 1
    assert binom_int(-1, 3) == -1
    assert binom_int(-2, 2) == 3
    assert binom_int(3, 5) == 0


def test_ps1_of_m22():
    p = ps1(QSym.monomial((2, 2)))
    assert p == BinomialPoly({2: 1})
    for n in range(8):
        assert p.eval(n) == n * (n - 1) // 2


def test_ps1_of_one():
    p = ps1(QSym.one())
    for n in range(-2, 6):
        assert p.eval(n) == 1


def test_ps1_agrees_with_ps_at_q_one():
    q = 4 * QSym.monomial((1, 1, 2)) + QSym.monomial((2,))
    p = ps1(q)
    for n in range(7):
        assert p.eval(n) == ps(q, n).at_one()


def test_gaussian_eval_at_q1_matches_ps1_on_negatives():
    samples = [
        QSym.monomial((1, 1)),
        2 * QSym.monomial((2, 1)) + QSym.monomial((3,)),
        QSym.monomial((1, 1, 1, 1)),
    ]
    for q in samples:
        f = ps_gaussian(q)
        p = ps1(q)
        for n in range(-3, 9):
            assert f.eval(n).at_one() == p.eval(n)


# --- sps ------------------------------------------------------------------


def test_sps_of_m1_is_geometric():
    s = sps(QSym.monomial((1,)), 12)
    assert s.coeffs == (1,) * 13


def test_sps_of_one():
    s = sps(QSym.one(), 6)
    assert s.coeffs == (1,) + (0,) * 6


def test_sps_closed_form_validated_against_enumeration():
    # every composition of weight <= 5, coefficients through q^15
    for w in range(6):
        for alpha in compositions_of_weight(w):
            assert sps(QSym.monomial(alpha), 15) == sps_monomial_oracle(alpha, 15)


def test_series_cutoff_mismatch_rejected():
    with pytest.raises(ValueError):
        SeriesTrunc(5) + SeriesTrunc(6)


def test_series_rejects_negative_exponents():
    with pytest.raises(ValueError):
        SeriesTrunc.from_laurent(LaurentPoly({-1: 1}), 5)


# --- q-binomial basis -----------------------------------------------------


def test_to_qbinomial_basis_reproduces_evaluations():
    q = 7 * QSym.monomial((2, 1)) + QSym.monomial((1, 1, 1)) - 2 * QSym.monomial((3,))
    f = ps_gaussian(q)
    form = to_qbinomial_basis(f)
    for n in range(2 * f.degree + 1):
        assert form.eval(n) == f.eval(n)


def test_to_qbinomial_basis_constant():
    f = ps_gaussian(QSym.one())
    form = to_qbinomial_basis(f)
    for n in range(3):
        assert form.eval(n) == 1
