"""Riemann-Roch spaces for divisors supported on the three fundamental points.

The oracle computes ell(D) for D = a*P1 + b*P2 + c*P3 without any closed
form, by exact linear algebra over the base field:

1.  Shift away the P3 coefficient.  x = X/Z has divisor
    -n*P1 + (n-1)*P2 + P3, so D' = D - c*div(x) = a'*P1 + b'*P2 with
    a' = a + c*n and b' = b - c*(n-1), and L(D) = x^c * L(D').

2.  Model L(D') with plane forms.  The line Z = 0 cuts the divisor
    n*P1 + P2, so for a form h of degree N the function h/Z^N lies in L(D')
    exactly when ord_P1(h) >= N*n - a' and ord_P2(h) >= N - b' (vanishing
    orders along the curve branch; conditions with a nonpositive right side
    are vacuous).  With N = max(n, ceil(a'/n), b') + 2 every function of
    L(D') arises this way: smooth plane curves are projectively normal, so
    sections of N*(n*P1 + P2) - D' are cut by degree-N forms once
    N*(n+1) - deg D' exceeds 2g - 1, which this choice guarantees.

3.  Count.  The vanishing conditions are linear in the form coefficients:
    each is one coefficient of the Newton expansion of h along the branch.
    Forms divisible by the curve equation F restrict to zero and are exactly
    the kernel of h -> h/Z^N, hence

        ell(D) = (#monomials - rank of conditions) - C(N-n+1, 2).

Expansions are cached per curve and point as a matrix of powers of the
solved chart coordinate w: the restriction of a monomial X^e1 Y^e2 Z^e3 in
the chart at P1 is t^e2 * w(t)^e3, so condition rows are just shifted slices
of cached rows of w-powers.  The cache grows geometrically on demand, which
keeps long dimension sweeps cheap.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from . import linalg
from .curves import CurveSpec
from .fields import Field
from .series import solve_chart

__all__ = [
    "ThreePointDivisor", "RRSpace", "OracleError",
    "dim_L_oracle", "basis_L_oracle", "canonical_divisor",
    "dim_mP_formula", "dim_shifted_formula", "shifted_divisor",
    "dim_Md_Nd", "Md_divisor", "Nd_divisor",
    "dim_Sd", "Sd_divisor", "dim_Sd_plus_e",
    "monomials_of_degree",
]

DEGREE_CAP = 60


class OracleError(RuntimeError):
    """The oracle cannot handle the requested divisor (degree cap, ...)."""


@dataclass(frozen=True)
class ThreePointDivisor:
    """a*P1 + b*P2 + c*P3 with integer (possibly negative) coefficients."""
    a: int = 0
    b: int = 0
    c: int = 0

    @property
    def degree(self) -> int:
        return self.a + self.b + self.c

    def coeffs(self) -> tuple:
        return (self.a, self.b, self.c)

    def __add__(self, other: "ThreePointDivisor") -> "ThreePointDivisor":
        return ThreePointDivisor(self.a + other.a, self.b + other.b,
                                 self.c + other.c)

    def __sub__(self, other: "ThreePointDivisor") -> "ThreePointDivisor":
        return ThreePointDivisor(self.a - other.a, self.b - other.b,
                                 self.c - other.c)

    def __neg__(self) -> "ThreePointDivisor":
        return ThreePointDivisor(-self.a, -self.b, -self.c)

    def scaled(self, m: int) -> "ThreePointDivisor":
        return ThreePointDivisor(m * self.a, m * self.b, m * self.c)

    def __repr__(self):
        return f"{self.a}*P1 + {self.b}*P2 + {self.c}*P3"


def canonical_divisor(n: int) -> ThreePointDivisor:
    """A canonical divisor: the curve section cut by Z^(n-2).

    Z = 0 cuts n*P1 + P2 and deg = (n-2)(n+1) = 2g - 2.
    """
    return ThreePointDivisor((n - 2) * n, n - 2, 0)


def divisor_of_x(n: int) -> ThreePointDivisor:
    return ThreePointDivisor(-n, n - 1, 1)


def divisor_of_y(n: int) -> ThreePointDivisor:
    return ThreePointDivisor(-(n - 1), -1, n)


@dataclass
class RRSpace:
    """An explicit Riemann-Roch space L(D).

    Basis functions are h / (Z^form_degree * x^alpha) with h the form whose
    coefficients (over `monomials`) are stored per basis row.
    """
    divisor: ThreePointDivisor
    dimension: int
    form_degree: int
    alpha: int
    monomials: list
    basis: np.ndarray  # shape (dimension, len(monomials))

    def to_json(self) -> dict:
        return {
            "divisor": list(self.divisor.coeffs()),
            "dimension": self.dimension,
            "form_degree": self.form_degree,
            "alpha": self.alpha,
            "monomials": [list(e) for e in self.monomials],
            "basis": [[int(c) for c in row] for row in self.basis],
        }


def monomials_of_degree(N: int) -> list:
    """Canonical (lexicographic) ordering of exponent triples of degree N."""
    return [(e1, e2, N - e1 - e2)
            for e1 in range(N + 1) for e2 in range(N - e1 + 1)]


# ---------------------------------------------------------------------------
# cached chart-power expansions
# ---------------------------------------------------------------------------

class _PowerCache:
    """Powers of the solved chart coordinate w at one point.

    mat[j] holds the first `prec` coefficients of w(t)^j for j <= maxdeg.
    """

    __slots__ = ("mat", "prec", "maxdeg")

    def __init__(self, field: Field, chart: dict, maxdeg: int, prec: int):
        w = solve_chart(field, chart, prec)
        mat = field.zeros((maxdeg + 1, prec))
        mat[0, 0] = 1
        if maxdeg >= 1:
            mat[1] = w
        from .series import conv_trunc
        for j in range(2, maxdeg + 1):
            mat[j] = conv_trunc(field, mat[j - 1], w, prec)
        self.mat = mat
        self.prec = prec
        self.maxdeg = maxdeg


def _chart_powers(curve: CurveSpec, point_id: str, maxdeg: int, prec: int) -> _PowerCache:
    cache = curve._cache.get(("powers", point_id))
    if cache is None or cache.maxdeg < maxdeg or cache.prec < prec:
        grow_deg = maxdeg if cache is None else max(maxdeg, cache.maxdeg + 4)
        grow_prec = prec if cache is None else max(prec, (cache.prec * 3) // 2)
        cache = _PowerCache(curve.field, curve.chart_poly(point_id),
                            max(grow_deg, maxdeg), max(grow_prec, prec))
        curve._cache[("powers", point_id)] = cache
    return cache


def _condition_matrix(curve: CurveSpec, N: int, tau1: int, tau2: int):
    """Stack the P1 and P2 vanishing conditions for all degree-N monomials.

    Row block one: coefficients 0..tau1-1 of the expansion of each monomial
    at P1 (chart exponents (e2, e3)); block two likewise at P2 (chart
    exponents (e3, e1)).  Entries come straight out of the power cache:
    the series of t^beta * w^gamma is row gamma shifted by beta.
    """
    field = curve.field
    monos = monomials_of_degree(N)
    tau1 = max(tau1, 0)
    tau2 = max(tau2, 0)
    A = field.zeros((tau1 + tau2, len(monos)))
    specs = []
    if tau1 > 0:
        specs.append((0, tau1, "P1", lambda e: (e[1], e[2])))
    if tau2 > 0:
        specs.append((tau1, tau2, "P2", lambda e: (e[2], e[0])))
    for row0, tau, pid, exps in specs:
        cache = _chart_powers(curve, pid, N, tau + N)
        for col, e in enumerate(monos):
            beta, gamma = exps(e)
            lo = min(beta, tau)
            take = tau - lo
            if take > 0:
                A[row0 + lo: row0 + tau, col] = cache.mat[gamma, :take]
    return A, monos


def _shift_parameters(curve: CurveSpec, D: ThreePointDivisor, n_extra: int):
    n = curve.n
    a1 = D.a + D.c * n
    b1 = D.b - D.c * (n - 1)
    N = max(n, -(-a1 // n), b1) + 2 + n_extra
    return a1, b1, N


def dim_L_oracle(curve: CurveSpec, D: ThreePointDivisor, *, n_extra: int = 0,
                 degree_cap: int = DEGREE_CAP, memo: bool = True) -> int:
    """ell(D) by exact linear algebra.  See the module docstring."""
    if D.degree < 0:
        return 0
    key = D.coeffs()
    if memo and n_extra == 0:
        got = curve._cache.setdefault("ell", {}).get(key)
        if got is not None:
            return got
    a1, b1, N = _shift_parameters(curve, D, n_extra)
    if N > degree_cap:
        raise OracleError(
            f"form degree {N} for {D!r} exceeds the cap {degree_cap}")
    n = curve.n
    A, monos = _condition_matrix(curve, N, N * n - a1, N - b1)
    sol = len(monos) - linalg.rank(curve.field, A)
    dim = sol - math.comb(max(N - n + 1, 0), 2)
    if dim < 0:
        raise OracleError(f"negative dimension computed for {D!r}")
    if memo and n_extra == 0:
        curve._cache["ell"][key] = dim
    return dim


def basis_L_oracle(curve: CurveSpec, D: ThreePointDivisor, *,
                   degree_cap: int = DEGREE_CAP) -> RRSpace:
    """Explicit basis of L(D): forms modulo multiples of the curve equation.

    The returned rows span a complement of F * (degree N-n-1 forms) inside
    the solution space of the vanishing conditions, so the corresponding
    functions h/(Z^N x^alpha) are a basis of L(D).
    """
    if D.degree < 0:
        return RRSpace(D, 0, curve.n, 0, monomials_of_degree(curve.n),
                       curve.field.zeros((0, len(monomials_of_degree(curve.n)))))
    a1, b1, N = _shift_parameters(curve, D, 0)
    if N > degree_cap:
        raise OracleError(
            f"form degree {N} for {D!r} exceeds the cap {degree_cap}")
    n = curve.n
    field = curve.field
    A, monos = _condition_matrix(curve, N, N * n - a1, N - b1)
    null = linalg.nullspace(field, A)
    col_of = {e: i for i, e in enumerate(monos)}
    inc = linalg.IncrementalBasis(field, len(monos))
    for mu in monomials_of_degree(N - n - 1):
        row = field.zeros(len(monos))
        for e, c in curve.F_terms.items():
            row[col_of[(e[0] + mu[0], e[1] + mu[1], e[2] + mu[2])]] = c
        if not inc.add(row):
            raise OracleError("multiples of the curve equation are dependent")
    basis_rows = [row for row in null if inc.add(row)]
    expect = len(null) - math.comb(max(N - n + 1, 0), 2)
    if len(basis_rows) != expect:
        raise OracleError("quotient basis size mismatch")
    basis = np.array(basis_rows, dtype=null.dtype) if basis_rows else \
        field.zeros((0, len(monos)))
    return RRSpace(divisor=D, dimension=len(basis_rows), form_degree=N,
                   alpha=D.c, monomials=monos, basis=basis)


# ---------------------------------------------------------------------------
# closed-form dimension families (valid for 1 <= m <= 2g-2)
# ---------------------------------------------------------------------------

def _split_m(n: int, m: int):
    g2 = n * (n - 1) - 2  # 2g - 2
    if not 1 <= m <= g2:
        raise ValueError(f"m = {m} outside the proven range [1, {g2}]")
    return divmod(m, n - 1)  # m = d*(n-1) + r with 0 <= r <= n-2


def dim_mP_formula(n: int, m: int, point: int = 1) -> int:
    """ell(m * Pk), the same at each of the three fundamental points."""
    if point not in (1, 2, 3):
        raise ValueError(f"point must be 1, 2 or 3, got {point}")
    d, r = _split_m(n, m)
    return (d * d - d + 2) // 2 + min(r, d)


SHIFT_VARIANTS = ("P2-P1", "P3-P2", "P1-P3")


def dim_shifted_formula(n: int, m: int, variant: str) -> int:
    """ell(m*P - d*Q) for the cyclically shifted pairs.

    variant picks (P, Q) among (P2, P1), (P3, P2), (P1, P3); d is the
    quotient in m = d(n-1) + r.  The value is variant independent.
    """
    if variant not in SHIFT_VARIANTS:
        raise ValueError(f"variant must be one of {SHIFT_VARIANTS}")
    d, r = _split_m(n, m)
    return (d - 1) * (d - 2) // 2 + min(r, d)


def shifted_divisor(n: int, m: int, variant: str) -> ThreePointDivisor:
    d, _ = _split_m(n, m)
    if variant == "P2-P1":
        return ThreePointDivisor(-d, m, 0)
    if variant == "P3-P2":
        return ThreePointDivisor(0, -d, m)
    if variant == "P1-P3":
        return ThreePointDivisor(m, 0, -d)
    raise ValueError(f"variant must be one of {SHIFT_VARIANTS}")


def _check_ij(n: int, i: int, j: int):
    if i < 1 or j < 1 or not 2 <= i + j <= n - 1:
        raise ValueError(f"need i, j >= 1 with 2 <= i+j <= n-1, got {(i, j)}")


def dim_Md_Nd(n: int, i: int, j: int) -> int:
    """Common dimension of the two-point families M_d and N_d below."""
    _check_ij(n, i, j)
    d = i + j
    return (d - 1) * (d - 2) // 2 + i


def Md_divisor(n: int, i: int, j: int) -> ThreePointDivisor:
    _check_ij(n, i, j)
    return ThreePointDivisor(i * n - (i + j), j * (n - 1), 0)


def Nd_divisor(n: int, i: int, j: int) -> ThreePointDivisor:
    _check_ij(n, i, j)
    return ThreePointDivisor((i - 1) * n, (j - 1) * n + i - 1, 0)


def dim_Sd(n: int, i: int, j: int, k: int) -> int:
    """ell of the symmetric divisor S_d ~ d*(n*P1 + P2), d = i+j+k."""
    d = i + j + k
    if d < 0:
        return 0
    if d <= n - 2:
        return (d + 2) * (d + 1) // 2
    return (n + 1) * d - n * (n - 1) // 2 + 1


def Sd_divisor(n: int, i: int, j: int, k: int) -> ThreePointDivisor:
    return ThreePointDivisor(k * n + j, i * n + k, j * n + i)


def dim_Sd_plus_e(n: int, i: int, j: int, k: int, e: int) -> int:
    """ell(S_d + e*(P1+P2+P3)) in the balanced case d + e = n - 2."""
    d = i + j + k
    if d + e != n - 2 or d < 0:
        raise ValueError(f"need d + e = n - 2 with d >= 0, got d={d}, e={e}")
    return (d + 2) * (d + 1) // 2
