"""The plane curve family X*Y^n + Y*Z^n + Z*X^n + X*Y*Z*G(X,Y,Z) = 0.

G is zero or homogeneous of degree n-2, n >= 3, so the curve has degree
n+1 and (when smooth) genus n(n-1)/2.  The three fundamental points

    P1 = (1:0:0)   P2 = (0:1:0)   P3 = (0:0:1)

always lie on the curve, the tangent there is a coordinate line, and that
line meets the curve only in fundamental points (Z=0 cuts n*P1 + P2, X=0
cuts n*P2 + P3, Y=0 cuts n*P3 + P1).  Every member of the family is
automatically nonsingular at the three fundamental points; smoothness
elsewhere is probed, not proved.

Polynomials are dicts mapping exponent triples (e1, e2, e3) to coefficient
codes of the base field.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .fields import Field, FieldElement, FieldError, make_field, embed
from . import series as _series

__all__ = [
    "CurveError", "ProjectivePoint", "CurveSpec", "genus",
    "validate_curve", "rational_points_raw", "CheckResult",
]


class CurveError(ValueError):
    """Invalid curve data or a failed structural requirement."""


@dataclass(frozen=True)
class ProjectivePoint:
    """Point of P^2 over `field`, stored normalized.

    The representative is scaled so the first nonzero coordinate is 1;
    points then compare and sort by their code triple.
    """
    field: Field
    x: int
    y: int
    z: int

    @classmethod
    def make(cls, field: Field, x: int, y: int, z: int) -> "ProjectivePoint":
        x, y, z = int(x), int(y), int(z)
        if x == y == z == 0:
            raise CurveError("(0:0:0) is not a projective point")
        for lead in (x, y, z):
            if lead != 0:
                inv = field.inv(lead)
                return cls(field, field.mul(x, inv), field.mul(y, inv),
                           field.mul(z, inv))
        raise AssertionError  # unreachable

    @property
    def coords(self) -> tuple:
        return (self.x, self.y, self.z)

    def sort_key(self) -> tuple:
        return (self.x, self.y, self.z)

    def __repr__(self):
        return f"({self.x}:{self.y}:{self.z})"


def _fundamental(field: Field):
    return (ProjectivePoint(field, 1, 0, 0),
            ProjectivePoint(field, 0, 1, 0),
            ProjectivePoint(field, 0, 0, 1))


@dataclass(frozen=True)
class CheckResult:
    name: str
    passed: bool
    detail: str = ""


class CurveSpec:
    """One member of the family over a fixed finite field."""

    def __init__(self, field: Field, n: int, g_coeffs: dict | None = None):
        if not isinstance(n, int) or n < 3:
            raise CurveError(f"n must be an integer >= 3, got {n!r}")
        self.field = field
        self.n = n
        coeffs = {}
        for e, c in (g_coeffs or {}).items():
            e = tuple(int(v) for v in e)
            if len(e) != 3 or min(e) < 0 or sum(e) != n - 2:
                raise CurveError(
                    f"G monomial {e} is not of homogeneous degree n-2 = {n - 2}")
            if isinstance(c, FieldElement):
                if c.field != field:
                    raise CurveError("G coefficient from a different field")
                code = c.code
            else:
                code = field.check_code(int(c))
            if code:
                coeffs[e] = code
        self.g_coeffs = coeffs
        # F = X Y^n + Y Z^n + Z X^n + X Y Z * G
        terms = {(1, n, 0): 1, (0, 1, n): 1, (n, 0, 1): 1}
        for e, c in coeffs.items():
            key = (e[0] + 1, e[1] + 1, e[2] + 1)
            terms[key] = field.add(terms.get(key, 0), c)
        self.F_terms = {e: c for e, c in terms.items() if c}
        self._cache: dict = {}

    # -- basic invariants ---------------------------------------------------

    @property
    def genus(self) -> int:
        return self.n * (self.n - 1) // 2

    @property
    def degree(self) -> int:
        return self.n + 1

    def fundamental_points(self):
        return _fundamental(self.field)

    def __eq__(self, other):
        return (isinstance(other, CurveSpec) and self.field == other.field
                and self.n == other.n and self.g_coeffs == other.g_coeffs)

    def __hash__(self):
        return hash((self.field, self.n, tuple(sorted(self.g_coeffs.items()))))

    def __repr__(self):
        gs = "0" if not self.g_coeffs else f"{len(self.g_coeffs)} terms"
        return f"CurveSpec(n={self.n}, {self.field!r}, G: {gs})"

    # -- polynomial views -----------------------------------------------------

    def partials(self) -> dict:
        """Formal partial derivative polynomials dF/dX, dF/dY, dF/dZ."""
        out = {}
        for axis, name in enumerate(("X", "Y", "Z")):
            d: dict = {}
            for e, c in self.F_terms.items():
                if e[axis] == 0:
                    continue
                cc = self.field.mul(self.field.from_int(e[axis]), c)
                if cc == 0:
                    continue
                key = tuple(v - 1 if i == axis else v for i, v in enumerate(e))
                d[key] = self.field.add(d.get(key, 0), cc)
            out[name] = d
        return out

    def chart_poly(self, point_id: str) -> dict:
        """Affine chart equation at a fundamental point as (t_exp, w_exp) -> code."""
        key = ("chart", point_id)
        if key not in self._cache:
            exps = _series._CHART_EXPS[point_id]
            poly: dict = {}
            for e, c in self.F_terms.items():
                te = exps(e)
                poly[te] = self.field.add(poly.get(te, 0), c)
            self._cache[key] = {e: c for e, c in poly.items() if c}
        return self._cache[key]

    # -- evaluation -------------------------------------------------------------

    def evaluate_poly(self, terms: dict, point: ProjectivePoint) -> int:
        return eval_terms(self.field, terms, point.coords)

    def evaluate_F(self, point: ProjectivePoint) -> int:
        if point.field != self.field:
            raise CurveError("point lives in a different field")
        return self.evaluate_poly(self.F_terms, point)

    # -- extensions ---------------------------------------------------------------

    def extension(self, m: int) -> "CurveSpec":
        """The same curve viewed over GF(q^m)."""
        if m == 1:
            return self
        big = make_field(self.field.p, self.field.k * m)
        g = {e: embed(FieldElement(self.field, c), big).code
             for e, c in self.g_coeffs.items()}
        return CurveSpec(big, self.n, g)

    # -- point enumeration ------------------------------------------------------

    def rational_points(self, ext_degree: int = 1) -> list:
        """All points over GF(q^ext_degree), sorted canonically.

        The three fundamental points are always present.
        """
        cur = self.extension(ext_degree)
        pts = rational_points_raw(cur.field, cur.F_terms)
        fund = set(p.coords for p in _fundamental(cur.field))
        got = set(p.coords for p in pts)
        if not fund <= got:
            raise CurveError("fundamental points missing from sweep")
        return pts

    # -- smoothness -------------------------------------------------------------

    def smoothness_probe(self, max_ext: int = 1) -> list:
        """Search for singular rational points over GF(q^m), m <= max_ext.

        Returns a list of (ext_degree, ProjectivePoint) where F and all three
        partials vanish.  Empty list means no singularity was found in the
        probed range; it is not a smoothness proof.
        """
        if self.field.q ** max_ext > (1 << 20):
            raise CurveError(
                f"refusing smoothness probe beyond q^m = 2^20 "
                f"(q={self.field.q}, max_ext={max_ext})")
        bad = []
        for m in range(1, max_ext + 1):
            cur = self.extension(m)
            parts = list(cur.partials().values())
            sing = _singular_sweep(cur.field, cur.F_terms, parts)
            bad.extend((m, p) for p in sing)
        return bad

    # -- serialization --------------------------------------------------------------

    def to_json(self) -> dict:
        return {
            "field": self.field.to_json(),
            "n": self.n,
            "g_coeffs": [[list(e), c] for e, c in sorted(self.g_coeffs.items())],
        }

    @staticmethod
    def from_json(data: dict) -> "CurveSpec":
        field = Field.from_json(data["field"])
        g = {tuple(e): int(c) for e, c in data.get("g_coeffs", [])}
        return CurveSpec(field, int(data["n"]), g)


def genus(spec: CurveSpec) -> int:
    return spec.genus


def eval_terms(field: Field, terms: dict, coords: tuple) -> int:
    """Scalar evaluation of a polynomial dict at a coordinate triple."""
    acc = 0
    for e, c in terms.items():
        v = c
        for coord, exp in zip(coords, e):
            if exp:
                v = field.mul(v, field.pow(coord, exp))
        acc = field.add(acc, v)
    return acc


# ---------------------------------------------------------------------------
# vectorized sweeps
# ---------------------------------------------------------------------------

def _eval_grid(field: Field, terms: dict, exps, xs: np.ndarray, ys: np.ndarray):
    """Evaluate sum(c * a^i * b^j) on the grid xs x ys.

    exps maps an exponent triple to the (i, j) pair actually used in this
    chart; coordinates not appearing are fixed to 1 by the caller.
    """
    acc = field.zeros((len(xs), len(ys)))
    xp: dict[int, np.ndarray] = {0: None}
    yp: dict[int, np.ndarray] = {0: None}

    def power(codes, e, cache):
        if e not in cache:
            prev = power(codes, e - 1, cache)
            cache[e] = codes if prev is None else field.vmul(prev, codes)
        return cache[e]

    for e, c in terms.items():
        i, j = exps(e)
        col = power(xs, i, xp)
        row = power(ys, j, yp)
        if col is None and row is None:
            term = np.broadcast_to(field.array(c), acc.shape)
        elif col is None:
            term = field.vmul(field.array(c), row)[None, :]
        elif row is None:
            term = field.vmul(field.array(c), col)[:, None]
        else:
            term = field.vmul(field.vmul(field.array(c), col)[:, None],
                              row[None, :])
        acc = field.vadd(acc, term)
    return acc


def _chart_zero_sets(field: Field, polys: list, exps):
    """Common-zero (a, b) pairs of the given polynomials on the full grid."""
    q = field.q
    codes = np.arange(q, dtype=np.int16)
    chunk = max(1, (1 << 22) // max(q, 1))
    out = []
    for lo in range(0, q, chunk):
        xs = codes[lo:lo + chunk]
        mask = None
        for terms in polys:
            vals = _eval_grid(field, terms, exps, xs, codes)
            zero = vals == 0
            mask = zero if mask is None else (mask & zero)
            if not mask.any():
                break
        if mask is not None and mask.any():
            ii, jj = np.nonzero(mask)
            out.extend((int(xs[i]), int(codes[j])) for i, j in zip(ii, jj))
    return out


def rational_points_raw(field: Field, F_terms: dict) -> list:
    """All projective zeros of the form given by F_terms, sorted canonically.

    Works for any homogeneous form (used directly for the n = 2 counting
    cross-checks that CurveSpec's n >= 3 domain excludes).
    """
    pts = []
    # chart Z = 1
    for x, y in _chart_zero_sets(field, [F_terms], lambda e: (e[0], e[1])):
        pts.append(ProjectivePoint.make(field, x, y, 1))
    # chart Z = 0, Y = 1: line sweep in X
    line = {e: c for e, c in F_terms.items() if e[2] == 0}
    codes = np.arange(field.q, dtype=np.int16)
    if line:
        vals = _eval_grid(field, line, lambda e: (e[0], 0), codes,
                          np.zeros(1, dtype=np.int16))
        for x in np.nonzero(vals[:, 0] == 0)[0]:
            pts.append(ProjectivePoint.make(field, int(x), 1, 0))
    else:
        pts.extend(ProjectivePoint.make(field, int(x), 1, 0) for x in codes)
    # the single remaining point (1:0:0)
    if eval_terms(field, F_terms, (1, 0, 0)) == 0:
        pts.append(ProjectivePoint(field, 1, 0, 0))
    pts.sort(key=ProjectivePoint.sort_key)
    return pts


def _singular_sweep(field: Field, F_terms: dict, partials: list) -> list:
    """Points where F and all partial derivatives vanish."""
    polys = [F_terms] + partials
    sing = []
    for x, y in _chart_zero_sets(field, polys, lambda e: (e[0], e[1])):
        sing.append(ProjectivePoint.make(field, x, y, 1))
    # chart Z = 0, Y = 1
    lines = [{e: c for e, c in terms.items() if e[2] == 0} for terms in polys]
    codes = np.arange(field.q, dtype=np.int16)
    mask = np.ones(field.q, dtype=bool)
    for terms in lines:
        if not terms:
            continue
        vals = _eval_grid(field, terms, lambda e: (e[0], 0), codes,
                          np.zeros(1, dtype=np.int16))
        mask &= vals[:, 0] == 0
    for x in np.nonzero(mask)[0]:
        sing.append(ProjectivePoint.make(field, int(x), 1, 0))
    # point (1:0:0)
    if all(eval_terms(field, terms, (1, 0, 0)) == 0 for terms in polys):
        sing.append(ProjectivePoint(field, 1, 0, 0))
    return sorted(set(sing), key=ProjectivePoint.sort_key)


# ---------------------------------------------------------------------------
# validation
# ---------------------------------------------------------------------------

def validate_curve(spec: CurveSpec, precision: int | None = None) -> list:
    """Structural checks at the three fundamental points.

    Verifies that each Pi lies on the curve, that the gradient there is
    nonzero, that the coordinate lines cut the curve with the tangency
    pattern the family promises (order n along the tangent, order 1 at the
    next point, order 0 at the third), and that the Newton expansions
    actually satisfy the chart equations.  Returns a list of CheckResult.
    """
    n = spec.n
    prec = precision or (2 * n + 4)
    results = []
    pts = dict(zip(_series.POINT_IDS, spec.fundamental_points()))
    for pid, pt in pts.items():
        results.append(CheckResult(
            f"{pid} on curve", spec.evaluate_F(pt) == 0,
            f"F{pt!r} = {spec.evaluate_F(pt)}"))
    parts = spec.partials()
    for pid, pt in pts.items():
        grad = tuple(spec.evaluate_poly(d, pt) for d in parts.values())
        results.append(CheckResult(
            f"gradient nonzero at {pid}", any(grad), f"grad = {grad}"))
    # tangent-line intersection orders; entry (line, point) -> expected order
    lines = {"X": {(1, 0, 0): 1}, "Y": {(0, 1, 0): 1}, "Z": {(0, 0, 1): 1}}
    expected = {
        ("Z", "P1"): n, ("Z", "P2"): 1, ("Z", "P3"): 0,
        ("X", "P2"): n, ("X", "P3"): 1, ("X", "P1"): 0,
        ("Y", "P3"): n, ("Y", "P1"): 1, ("Y", "P2"): 0,
    }
    locals_ = {}
    for pid in _series.POINT_IDS:
        try:
            locals_[pid] = _series.expand_at(spec, pid, prec)
            results.append(CheckResult(f"chart expansion at {pid}", True,
                                       f"precision {prec}"))
        except _series.SeriesError as exc:
            results.append(CheckResult(f"chart expansion at {pid}", False, str(exc)))
    for (line, pid), want in expected.items():
        if pid not in locals_:
            continue
        got = _series.order_of_form(spec, locals_[pid], lines[line], 1)
        ok = got == want
        results.append(CheckResult(
            f"order of {line}=0 at {pid}", ok, f"expected {want}, got {got}"))
    return results
