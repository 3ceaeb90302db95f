import numpy as np
import pytest

from tripoint.fields import make_field
from tripoint.series import (FieldSeries, OrderBound, SeriesError, expand_at,
                             monomial_valuations, order_of_form)

F8 = make_field(2, 3)


def geometric(prec):
    # 1/(1 - t) = 1 + t + t^2 + ...
    return FieldSeries(F8, F8.array([1] * prec), 0, prec=prec)


def test_series_basics():
    s = FieldSeries(F8, F8.array([0, 0, 1, 5]), -1)
    assert s.val == 1  # normalization strips leading zeros into val
    assert s.valuation() == 1
    assert s.coeff_at(2) == 5
    assert s.coeff_at(0) == 0
    z = FieldSeries(F8, (), val=7)
    assert z.is_zero() and z.valuation() is None and z.prec == 7


def test_series_ring_ops():
    one_minus_t = FieldSeries(F8, F8.array([1, 1]), 0, prec=12)  # char 2: -1=1
    g = geometric(12)
    prod = one_minus_t * g
    assert prod.valuation() == 0
    assert all(prod.coeff_at(i) == 0 for i in range(1, prod.prec))
    inv = one_minus_t.inverse()
    assert inv.coeff_at(0) == 1 and inv.coeff_at(1) == 1
    assert (g - g).is_zero()
    assert (g + g).is_zero()  # characteristic 2


def test_valuation_additivity():
    rng = np.random.default_rng(0)
    for _ in range(20):
        va, vb = rng.integers(-4, 5, 2)
        ca = rng.integers(0, 8, 6)
        cb = rng.integers(0, 8, 6)
        ca[0] = cb[0] = 1
        a = FieldSeries(F8, F8.array(ca), int(va))
        b = FieldSeries(F8, F8.array(cb), int(vb))
        assert (a * b).valuation() == a.valuation() + b.valuation()
        assert (a.inverse()).valuation() == -a.valuation()
        assert (a * a.inverse()).coeff_at(0) == 1


def test_pow():
    t = FieldSeries.monomial(F8, 1, 10)
    assert (t ** 4).valuation() == 4
    assert (t ** 0).coeff_at(0) == 1
    u = FieldSeries(F8, F8.array([1, 3]), 0, prec=10)
    assert (u ** -2 * u ** 2).coeff_at(0) == 1
    with pytest.raises(SeriesError):
        FieldSeries(F8, (), val=5).inverse()


def test_monomial_valuations_closed_form():
    for n in (3, 4, 5, 9):
        assert monomial_valuations(n, 1, 0) == (-n, n - 1, 1)
        assert monomial_valuations(n, 0, 1) == (-(n - 1), -1, n)
        assert monomial_valuations(n, 0, 0) == (0, 0, 0)
        # div_infinity(x * y^(n-1)) = (n(n-1)+1) P1
        assert monomial_valuations(n, 1, n - 1)[0] == -(n * (n - 1) + 1)
        rng = np.random.default_rng(n)
        for _ in range(25):
            u, v = (int(w) for w in rng.integers(-3 * n, 3 * n + 1, 2))
            assert sum(monomial_valuations(n, u, v)) == 0


def test_expand_at_xy_valuations(klein, c16, record):
    for curve in (klein, c16, record):
        n = curve.n
        want = {"P1": (-n, -(n - 1)), "P2": (n - 1, -1), "P3": (1, n)}
        for point, (vx, vy) in want.items():
            local = expand_at(curve, point, 3 * n)
            assert local.x.valuation() == vx
            assert local.y.valuation() == vy
            assert local.chart_t.valuation() == 1


def test_expand_at_klein_branch(klein):
    # at P3 the chart equation is w + t^3 + t w^3 = 0, so w = -t^3 + O(t^5);
    # over GF(8) the sign disappears
    local = expand_at(klein, "P3", 12)
    assert local.chart_w.valuation() == 3
    assert local.chart_w.coeff_at(3) == 1
    with pytest.raises(SeriesError):
        expand_at(klein, "P3", 4)  # precision floor is 2n
    with pytest.raises(ValueError):
        expand_at(klein, "P7", 12)


def test_monomial_valuations_match_series(klein, c16, record):
    rng = np.random.default_rng(7)
    for curve in (klein, c16, record):
        n = curve.n
        prec = 6 * n * n
        locals_ = {p: expand_at(curve, p, prec) for p in ("P1", "P2", "P3")}
        for _ in range(6):
            u, v = (int(w) for w in rng.integers(-3 * n, 3 * n + 1, 2))
            for axis, point in enumerate(("P1", "P2", "P3")):
                loc = locals_[point]
                s = (loc.x ** u) * (loc.y ** v)
                assert s.valuation() == monomial_valuations(n, u, v)[axis]


def test_order_of_form_lines(klein, c16, record):
    # Z cuts n P1 + P2, X cuts n P2 + P3, Y cuts n P3 + P1
    for curve in (klein, c16, record):
        n = curve.n
        lines = {
            (0, 0, 1): {"P1": n, "P2": 1, "P3": 0},   # Z
            (1, 0, 0): {"P1": 0, "P2": n, "P3": 1},   # X
            (0, 1, 0): {"P1": 1, "P2": 0, "P3": n},   # Y
        }
        for mono, want in lines.items():
            for point, order in want.items():
                local = expand_at(curve, point, 3 * n)
                assert order_of_form(curve, local, {mono: 1}, 1) == order


def test_order_of_form_z_powers(klein, c16, record):
    for curve in (klein, c16, record):
        n = curve.n
        for N in (2, 3, 4):
            want = {"P1": N * n, "P2": N, "P3": 0}
            for point, order in want.items():
                local = expand_at(curve, point, 6 * n + 4 * N)
                got = order_of_form(curve, local, {(0, 0, N): 1}, N)
                assert got == order


def test_order_of_form_bound_on_curve_multiple(klein):
    # the defining form restricts to zero; the order read must be a bound
    local = expand_at(klein, "P1", 16)
    got = order_of_form(klein, local, klein.F_terms, klein.n + 1)
    assert isinstance(got, OrderBound)
    assert got.at_least >= 16
