"""Gap sequences, Kim maps and pure gaps at the three fundamental points.

Everything in here comes in two flavors: closed-form combinatorics in the
parameter n alone (gaps_closed_form, kim_map, pure_gaps_pair, ...) and
field-level oracles that recompute the same objects from Riemann-Roch
dimensions of an actual curve (gaps_oracle, pair_membership_oracle,
pure_gap_oracle).  The test suite pins the two flavors against each other.

Gap bookkeeping at a point P:  m is a gap iff ell(mP) = ell((m-1)P).  For
this family the gap set at each fundamental point is

    { (i-1)(n-1) + j : 1 <= i <= j <= n-1 },

and the semigroup is generated by s(n-1)+1 for s = 1..n.  The Kim map of an
ordered pair (P, Q) sends a gap a at P to the smallest b with (a, b) a gap
pair at (P, Q); here it is the same bijection beta for all three cyclic
pairs (P1,P2), (P2,P3), (P3,P1), acting on index pairs as
(i, j) -> (n-j, n-1+i-j), and beta^3 = id.
"""

from __future__ import annotations

from dataclasses import dataclass, field as dc_field

from .curves import CurveSpec
from .riemann_roch import ThreePointDivisor, dim_L_oracle
from .series import monomial_valuations

__all__ = [
    "GapSet", "KimMapTable", "PureGapRecord",
    "gaps_closed_form", "semigroup_generators", "gaps_oracle",
    "kim_map", "kim_image", "gap_index",
    "pure_gaps_pair", "pure_gaps_pair_via_homma_kim", "gap_pair_count",
    "pure_gaps_triple", "pure_gap_count_pair", "pure_gap_count_triple",
    "pair_membership_oracle", "pure_gap_oracle",
    "CYCLIC_PAIRS",
]

CYCLIC_PAIRS = (("P1", "P2"), ("P2", "P3"), ("P3", "P1"))

_POINT_AXIS = {"P1": 0, "P2": 1, "P3": 2}


def _axis_divisor(point: str, m: int) -> ThreePointDivisor:
    v = [0, 0, 0]
    v[_POINT_AXIS[point]] = m
    return ThreePointDivisor(*v)


@dataclass(frozen=True)
class GapSet:
    n: int
    point: str
    gaps: tuple

    def __post_init__(self):
        object.__setattr__(self, "gaps", tuple(sorted(self.gaps)))

    @property
    def genus(self) -> int:
        return len(self.gaps)


def gaps_closed_form(n: int, point: str = "P1") -> GapSet:
    """The gap sequence at a fundamental point, by formula."""
    if n < 3:
        raise ValueError("n must be >= 3")
    if point not in _POINT_AXIS:
        raise ValueError(f"unknown point {point!r}")
    gaps = tuple((i - 1) * (n - 1) + j
                 for i in range(1, n) for j in range(i, n))
    return GapSet(n=n, point=point, gaps=gaps)


def gap_index(n: int, a: int) -> tuple:
    """The unique (i, j), 1 <= i <= j <= n-1, with a = (i-1)(n-1) + j."""
    i, j = divmod(a - 1, n - 1)
    i, j = i + 1, j + 1
    if not (1 <= i <= j <= n - 1):
        raise ValueError(f"{a} is not a gap for n = {n}")
    return i, j


def semigroup_generators(n: int) -> tuple:
    """Generators s(n-1)+1, s = 1..n, of the common Weierstrass semigroup."""
    return tuple(s * (n - 1) + 1 for s in range(1, n + 1))


def gaps_oracle(curve: CurveSpec, point: str) -> GapSet:
    """Gap sequence recomputed from oracle dimensions ell(m*P), m <= 2g-1."""
    g = curve.genus
    gaps = []
    prev = 1  # ell(0) = 1
    for m in range(1, 2 * g):
        cur = dim_L_oracle(curve, _axis_divisor(point, m))
        if cur == prev:
            gaps.append(m)
        prev = cur
    return GapSet(n=curve.n, point=point, gaps=tuple(gaps))


# ---------------------------------------------------------------------------
# Kim maps
# ---------------------------------------------------------------------------

def kim_image(n: int, a: int) -> int:
    """beta(a) for a gap a: (i, j) -> (n-j, n-1+i-j) in index coordinates."""
    i, j = gap_index(n, a)
    return (n - j - 1) * (n - 1) + (n - 1 + i - j)


def _witness_monomial(pair: tuple, n: int, a: int) -> tuple:
    """(u, v) with div_infinity(x^u y^v) = a * source + beta(a) * target."""
    if pair == ("P1", "P2"):
        i, j = gap_index(n, a)
        return (-(n - j - 1), n - j + i - 1)
    if pair == ("P2", "P3"):
        i, j = gap_index(n, a)
        return (-i, -(n - j - 1))
    if pair == ("P3", "P1"):
        # reuse the first family through the image gap: the monomial with
        # pole a*P1 + b*P3 is x^j / y^(j+1-i) for (i, j) the index of the
        # P1-side gap, which here is the image beta(a).
        i, j = gap_index(n, kim_image(n, a))
        return (j, i - j - 1)
    raise ValueError(f"pair must be one of {CYCLIC_PAIRS}")


@dataclass(frozen=True)
class KimMapTable:
    """The Kim map of one ordered pair of fundamental points.

    entries[k] = (gap, image, witness) where witness = (u, v) gives the
    monomial x^u y^v whose pole divisor is gap*source + image*target; the
    witness certifies image as an upper bound for the Kim map value.
    """
    n: int
    pair: tuple
    entries: tuple

    def mapping(self) -> dict:
        return {a: b for a, b, _ in self.entries}


def kim_map(n: int, pair: tuple) -> KimMapTable:
    pair = tuple(pair)
    if pair not in CYCLIC_PAIRS:
        raise ValueError(f"pair must be one of {CYCLIC_PAIRS}")
    rows = []
    src_axis = _POINT_AXIS[pair[0]]
    dst_axis = _POINT_AXIS[pair[1]]
    for a in gaps_closed_form(n).gaps:
        b = kim_image(n, a)
        u, v = _witness_monomial(pair, n, a)
        vals = monomial_valuations(n, u, v)
        pole = tuple(-min(val, 0) for val in vals)
        expect = tuple(a if ax == src_axis else b if ax == dst_axis else 0
                       for ax in range(3))
        if pole != expect:
            raise AssertionError(
                f"witness x^{u} y^{v} has pole {pole}, wanted {expect}")
        rows.append((a, b, (u, v)))
    return KimMapTable(n=n, pair=pair, entries=tuple(rows))


# ---------------------------------------------------------------------------
# pure gaps
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class PureGapRecord:
    """One pure gap tuple with its parametrization and predicted dimension."""
    tuple_: tuple
    params: dict = dc_field(compare=False)
    predicted_dimension: int = dc_field(compare=False, default=0)

    def to_json(self) -> dict:
        return {"tuple": list(self.tuple_), "params": dict(self.params),
                "predicted_dimension": self.predicted_dimension}


def pure_gaps_pair(n: int) -> list:
    """All pure gap pairs at any two distinct fundamental points.

    The same integer set works for each cyclic ordered pair (P1,P2),
    (P2,P3), (P3,P1); a reversed pair sees the transposed set.  Here
    i, j >= 1, d = i + j <= n - 1 and:

        a = (i-1)n + r + 1      0 <= r <= n - 1 - d
        b = (j-1)n + i + s      0 <= s <= n - d

    Both ell(a P + b Q) and ell((a-1) P + (b-1) Q) equal
    (d-1)(d-2)/2 + i.
    """
    out = []
    for i in range(1, n):
        for j in range(1, n - i + 1):
            d = i + j
            if d > n - 1:
                continue
            dim = (d - 1) * (d - 2) // 2 + i
            for r in range(0, n - d):
                for s in range(0, n - d + 1):
                    a = (i - 1) * n + r + 1
                    b = (j - 1) * n + i + s
                    out.append(PureGapRecord(
                        tuple_=(a, b),
                        params={"i": i, "j": j, "d": d, "r": r, "s": s},
                        predicted_dimension=dim))
    out.sort(key=lambda rec: rec.tuple_)
    return out


def pure_gap_count_pair(n: int) -> int:
    g = n * (n - 1) // 2
    return (g - 1) * g // 3


def gap_pair_count(n: int) -> int:
    """Cardinality of the full gap-pair set G(P, Q) (pure or not)."""
    g = n * (n - 1) // 2
    return g * (g + 1)


def pure_gaps_pair_via_homma_kim(n: int) -> list:
    """Pure gap pairs from the inversion description of the Kim map.

    With gaps sorted as n_1 < ... < n_g at the source and m_1 < ... < m_g at
    the target, and sigma defined by beta(n_i) = m_sigma(i), the pure gap
    pairs are exactly (n_i, m_sigma(j)) over the inversions i < j,
    sigma(i) > sigma(j).
    """
    gaps = gaps_closed_form(n).gaps
    pos = {a: idx for idx, a in enumerate(gaps, start=1)}
    sigma = {i: pos[kim_image(n, a)] for i, a in enumerate(gaps, start=1)}
    g = len(gaps)
    pairs = []
    for i in range(1, g + 1):
        for j in range(i + 1, g + 1):
            if sigma[i] > sigma[j]:
                pairs.append((gaps[i - 1], gaps[sigma[j] - 1]))
    return sorted(pairs)


def pure_gaps_triple(n: int) -> list:
    """All pure gap triples at (P1, P2, P3).

    Parametrized by i, j, k >= 0 with d = i + j + k <= n - 3 and offsets
    r, s, t in [0, n-3-d]:

        (kn + j + r + 1, in + k + s + 1, jn + i + t + 1)

    with both relevant dimensions equal to (d+1)(d+2)/2.  No coordinate of
    a pure gap triple is divisible by n - 1.
    """
    out = []
    for i in range(0, max(n - 2, 0)):
        for j in range(0, n - 2 - i):
            for k in range(0, n - 2 - i - j):
                d = i + j + k
                if d > n - 3:
                    continue
                dim = (d + 1) * (d + 2) // 2
                span = n - 3 - d
                for r in range(span + 1):
                    for s in range(span + 1):
                        for t in range(span + 1):
                            trip = (k * n + j + r + 1,
                                    i * n + k + s + 1,
                                    j * n + i + t + 1)
                            out.append(PureGapRecord(
                                tuple_=trip,
                                params={"i": i, "j": j, "k": k, "d": d,
                                        "r": r, "s": s, "t": t},
                                predicted_dimension=dim))
    out.sort(key=lambda rec: rec.tuple_)
    return out


def pure_gap_count_triple(n: int) -> int:
    g = n * (n - 1) // 2
    return (g - 1) * g * (2 * g - 1) // 30


# ---------------------------------------------------------------------------
# oracles
# ---------------------------------------------------------------------------

def _drops(curve: CurveSpec, D: ThreePointDivisor, axes) -> bool:
    """True iff ell drops in every listed coordinate direction at D."""
    base = dim_L_oracle(curve, D)
    for ax in axes:
        v = list(D.coeffs())
        v[ax] -= 1
        if dim_L_oracle(curve, ThreePointDivisor(*v)) != base - 1:
            return False
    return True


def pair_membership_oracle(curve: CurveSpec, pair: tuple, a: int, b: int) -> bool:
    """Is (a, b) in the two-point Weierstrass semigroup H(P, Q)?

    (a, b) is a member iff some function has pole divisor exactly
    a*P + b*Q, which happens iff ell drops when either coordinate drops.
    """
    axes = (_POINT_AXIS[pair[0]], _POINT_AXIS[pair[1]])
    v = [0, 0, 0]
    v[axes[0]], v[axes[1]] = a, b
    return _drops(curve, ThreePointDivisor(*v), axes)


def pure_gap_oracle(curve: CurveSpec, tuple_: tuple, pair: tuple | None = None) -> bool:
    """Is the pair/triple pure, i.e. does ell stay flat one step down in
    every coordinate simultaneously?

    ell(sum a_i P_i) == ell(sum (a_i - 1) P_i) characterizes pure gaps.
    """
    if len(tuple_) == 2:
        p = tuple(pair) if pair is not None else ("P1", "P2")
        axes = (_POINT_AXIS[p[0]], _POINT_AXIS[p[1]])
        v = [0, 0, 0]
        v[axes[0]], v[axes[1]] = tuple_
        w = list(v)
        w[axes[0]] -= 1
        w[axes[1]] -= 1
    elif len(tuple_) == 3:
        v = list(tuple_)
        w = [x - 1 for x in v]
    else:
        raise ValueError("tuple must have length 2 or 3")
    return (dim_L_oracle(curve, ThreePointDivisor(*v))
            == dim_L_oracle(curve, ThreePointDivisor(*w)))


def gap_pairs_oracle(curve: CurveSpec, pair: tuple = ("P1", "P2")) -> set:
    """The full gap-pair set G(P, Q) inside the box [0, 2g-1]^2.

    Pairs with a coordinate >= 2g are always members (both one-step
    dimension drops are forced by Riemann-Roch once degrees leave the
    special range), so the box is exhaustive.
    """
    g = curve.genus
    out = set()
    for a in range(0, 2 * g):
        for b in range(0, 2 * g):
            if not pair_membership_oracle(curve, pair, a, b):
                out.add((a, b))
    return out
