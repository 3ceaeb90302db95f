import itertools

import numpy as np
import pytest

from tripoint import linalg
from tripoint.codes import (BudgetError, CodesError, build_CL, build_COmega,
                            carvalho_torres_bound, curve_search,
                            evaluation_points, goppa_bound,
                            hermitian_maximal_count, hurwitz_count,
                            low_weight_search, predict_pair_params,
                            predict_triple_params, verify_distance_floor)
from tripoint.curves import CurveSpec, ProjectivePoint
from tripoint.fields import make_field
from tripoint.riemann_roch import ThreePointDivisor, dim_L_oracle
from tripoint.weierstrass import pure_gaps_pair, pure_gaps_triple


def _fmm(field, A, B):
    """Naive field matmul for independent cross-checks."""
    out = field.zeros((A.shape[0], B.shape[1]))
    for i in range(A.shape[0]):
        for j in range(B.shape[1]):
            acc = 0
            for k in range(A.shape[1]):
                acc = field.add(acc, field.mul(int(A[i, k]), int(B[k, j])))
            out[i, j] = acc
    return out


def test_bound_formulas():
    assert goppa_bound(13, 6) == 3
    assert carvalho_torres_bound(13, 6, (((5, 5)), (2, 3))) == 6
    assert carvalho_torres_bound(10, 6, ()) == goppa_bound(10, 6)
    with pytest.raises(CodesError):
        carvalho_torres_bound(13, 6, ((5, 4),))


def test_predict_pair_values():
    spec = predict_pair_params(4, 2, 1)
    assert spec.G.coeffs() == (9, 4, 0)
    assert spec.boxes == ((5, 5), (2, 3))
    assert spec.designed_distance == 6
    assert spec.goppa_distance == 3
    assert spec.hypotheses_met        # 2(i+j) = 6 >= n+2 = 6
    assert not predict_pair_params(4, 2, 1, m=10).hypotheses_met
    assert predict_pair_params(4, 2, 1, m=37).hypotheses_met

    rec = predict_pair_params(5, 3, 1)
    assert rec.G.coeffs() == (21, 6, 0)
    assert rec.boxes == ((11, 11), (3, 4))
    assert rec.designed_distance == 12
    assert rec.goppa_distance == 9

    with pytest.raises(CodesError):
        predict_pair_params(4, 2, 2)   # i + j > n - 1
    with pytest.raises(CodesError):
        predict_pair_params(4, 0, 1)


def test_predict_pair_box_is_pure(c16, record):
    for n in (4, 5):
        pure = {r.tuple_ for r in pure_gaps_pair(n)}
        for i in range(1, n - 1):
            for j in range(1, n - i):
                spec = predict_pair_params(n, i, j)
                (a1, b1), (a2, b2) = spec.boxes
                for t in itertools.product(range(a1, b1 + 1),
                                           range(a2, b2 + 1)):
                    assert t in pure


def test_predict_triple_values():
    spec = predict_triple_params(5, 1, 0, 0)
    assert spec.boxes == ((1, 2), (6, 7), (2, 3))
    assert spec.G.coeffs() == (2, 12, 4)
    g = 10
    assert spec.goppa_distance == 18 - (2 * g - 2)
    assert spec.designed_distance == spec.goppa_distance + 6
    assert not spec.hypotheses_met    # 9d = 9 <= (n-2)^2 = 9
    assert predict_triple_params(5, 1, 1, 0).hypotheses_met
    with pytest.raises(CodesError):
        predict_triple_params(5, 1, 1, 1)   # d > n - 3


def test_predict_triple_box_is_pure():
    for n in (4, 5, 6):
        pure = {r.tuple_ for r in pure_gaps_triple(n)}
        for i in range(0, n - 2):
            for j in range(0, n - 2 - i):
                for k in range(0, n - 2 - i - j):
                    spec = predict_triple_params(n, i, j, k)
                    ranges = [range(lo, hi + 1) for lo, hi in spec.boxes]
                    for t in itertools.product(*ranges):
                        assert t in pure


def test_evaluation_points(c16):
    G = ThreePointDivisor(9, 4, 0)
    pts = evaluation_points(c16, G)
    assert len(pts) == 37              # 39 points minus P1, P2; P3 stays
    fund = c16.fundamental_points()
    assert fund[2] in pts and fund[0] not in pts and fund[1] not in pts
    with_pole = evaluation_points(c16, ThreePointDivisor(2, 2, 1))
    assert len(with_pole) == 36 and fund[2] not in with_pole
    assert len(evaluation_points(c16, G, length=20)) == 20
    with pytest.raises(CodesError):
        evaluation_points(c16, G, length=38)


def test_build_CL_validation(c16):
    G = ThreePointDivisor(9, 4, 0)
    fund = c16.fundamental_points()
    with pytest.raises(CodesError):
        build_CL(c16, [fund[0]], G)    # P1 lies on Z = 0
    with pytest.raises(CodesError):
        build_CL(c16, [fund[2]], ThreePointDivisor(2, 2, 1))  # pole at P3
    f = c16.field
    off = next(ProjectivePoint.make(f, 1, y, 1) for y in range(f.q)
               if c16.evaluate_F(ProjectivePoint.make(f, 1, y, 1)) != 0)
    with pytest.raises(CodesError):
        build_CL(c16, [off], G)
    with pytest.raises(CodesError):
        build_CL(c16, [ProjectivePoint.make(make_field(5), 1, 1, 1)], G)


def test_q16_code_report(c16):
    spec = predict_pair_params(4, 2, 1)
    pts = evaluation_points(c16, spec.G)
    rep = build_COmega(c16, pts, spec.G, boxes=spec.boxes)
    assert (rep.length, rep.dimension) == (37, 29)
    assert rep.goppa_bound == 3 and rep.pure_gap_bound == 6
    # duality: every generator row is orthogonal to every parity row
    prod = _fmm(c16.field, rep.parity_check,
                np.ascontiguousarray(rep.generator.T))
    assert not prod.any()
    assert rep.generator.shape == (29, 37)
    assert linalg.rank(c16.field, rep.generator) == 29
    js = rep.to_json()
    assert js["length"] == 37 and len(js["parity_check"]) == 8


def test_q16_distance_certification(c16):
    spec = predict_pair_params(4, 2, 1)
    pts = evaluation_points(c16, spec.G)
    rep = build_COmega(c16, pts, spec.G, boxes=spec.boxes)
    ok, witness, checked = verify_distance_floor(c16.field, rep.parity_check, 5)
    assert ok and witness is None and checked == 435897
    # the true distance is exactly 6: some 6 columns must be dependent
    ok6, witness6, _ = verify_distance_floor(c16.field, rep.parity_check, 6,
                                             budget=3_000_000)
    assert not ok6 and len(witness6) == 6
    sub = rep.parity_check[:, witness6]
    assert linalg.rank(c16.field, sub) < 6
    # and the searcher exhibits a weight-6 word, closing the gap
    best_w, word = low_weight_search(c16.field, rep.generator, trials=40)
    assert best_w == 6
    assert int((word != 0).sum()) == 6
    assert not _fmm(c16.field, rep.parity_check, word[:, None]).any()


def test_verify_distance_floor_edges():
    f = make_field(2)
    H = f.array([[1, 0, 1], [0, 1, 1]])
    ok, _, _ = verify_distance_floor(f, H, 2)
    assert ok
    ok3, witness, _ = verify_distance_floor(f, H, 3)
    assert not ok3 and witness == [0, 1, 2]
    with pytest.raises(CodesError):
        verify_distance_floor(f, H, 4)
    with pytest.raises(BudgetError):
        verify_distance_floor(f, H, 2, budget=2)


def test_dimension_identity_note(klein):
    # deg G >= length: rank identity not checkable, report says so
    G = ThreePointDivisor(30, 0, 0)
    pts = evaluation_points(klein, G)
    rep = build_COmega(klein, pts, G)
    assert any("not checkable" in note for note in rep.notes)


def test_curve_search_exhaustive():
    f2 = make_field(2)
    results = list(curve_search(f2, 3))
    assert len(results) == 8           # 2^3 linear G over GF(2)
    by_g = {tuple(sorted(r["curve"].g_coeffs)): r for r in results}
    assert by_g[()]["singular"] == []
    sing = by_g[((0, 0, 1), (0, 1, 0), (1, 0, 0))]
    assert sing["singular"] and sing["singular"][0][1].coords == (1, 1, 1)
    counts = {len(r["points"]) for r in results}
    filtered = list(curve_search(f2, 3, predicate=lambda c: c == max(counts)))
    assert all(len(r["points"]) == max(counts) for r in filtered)
    with pytest.raises(CodesError):
        next(curve_search(make_field(2, 5), 4))   # 32^6 needs sample=


def test_curve_search_sampled():
    f = make_field(2, 5)
    results = list(curve_search(f, 4, sample=5, seed=3))
    assert len(results) == 5
    for r in results:
        assert r["curve"].n == 4
        assert all(len(p.coords) == 3 for p in r["points"])


def test_counting_formulas():
    assert [hurwitz_count(q) for q in (2, 3, 4)] == [24, 55, 108]
    assert hermitian_maximal_count(2) == 81
    assert hermitian_maximal_count(3) == 892
