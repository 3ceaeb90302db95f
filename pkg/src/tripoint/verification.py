"""Invariant suites: every closed form in the package checked against an
independent computation.

Each suite returns a list of CheckResult records; the CLI `verify` command
aggregates them into a machine-readable report and fails (exit code 2) when
any check fails.  The suites are deliberately redundant with the unit tests:
they are the product surface for a user who wants to re-certify the
mathematics on their own machine, possibly for larger n.
"""

from __future__ import annotations

import numpy as np

from .curves import CheckResult, CurveSpec, validate_curve
from .fields import Field, FieldError, make_field
from .riemann_roch import (ThreePointDivisor, canonical_divisor, dim_L_oracle,
                           dim_mP_formula, dim_Md_Nd, dim_Sd, dim_Sd_plus_e,
                           dim_shifted_formula, Md_divisor, Nd_divisor,
                           Sd_divisor, shifted_divisor, SHIFT_VARIANTS)
from .weierstrass import (gaps_closed_form, gaps_oracle, gap_index, kim_image,
                          kim_map, pure_gap_count_pair, pure_gap_count_triple,
                          pure_gap_oracle, pure_gaps_pair,
                          pure_gaps_pair_via_homma_kim, pure_gaps_triple,
                          semigroup_generators, CYCLIC_PAIRS)


def field_axiom_suite(field: Field, rng=None, triples: int = 1000) -> list:
    """Commutativity/identity/inverses exhaustively on pairs, associativity
    and distributivity on random triples.

    The inverse and Frobenius checks run on the table-free scalar path, so a
    structurally broken field (reducible modulus) produces failing checks
    with concrete witness codes instead of a crash deeper in table setup.
    """
    rng = rng or np.random.default_rng(0)
    q = field.q
    out = []
    bad_inv = [a for a in range(1, q)
               if field.mul(a, field.pow(a, q - 2)) != 1]
    out.append(CheckResult(
        f"{field!r} multiplicative inverse (scalar, exhaustive)", not bad_inv,
        f"codes without inverse: {bad_inv[:6]}"))
    # Frobenius x -> x^p fixes exactly the prime subfield
    frob_fixed = [a for a in range(q) if field.pow(a, field.p) == a]
    out.append(CheckResult(
        f"{field!r} Frobenius fixed field", frob_fixed == list(range(field.p)),
        f"{len(frob_fixed)} fixed points"))
    try:
        codes = np.arange(q, dtype=np.int64)
        A = np.repeat(codes, q)
        B = np.tile(codes, q)
        out.append(CheckResult(
            f"{field!r} add commutes",
            bool(np.all(field.vadd(A, B) == field.vadd(B, A)))))
        out.append(CheckResult(
            f"{field!r} mul commutes",
            bool(np.all(field.vmul(A, B) == field.vmul(B, A)))))
        out.append(CheckResult(
            f"{field!r} identities", bool(np.all(field.vadd(codes, 0) == codes)
                                          and np.all(field.vmul(codes, 1) == codes))))
        out.append(CheckResult(
            f"{field!r} additive inverse",
            bool(np.all(field.vadd(codes, field.vneg(codes)) == 0))))
        nz = codes[1:]
        out.append(CheckResult(
            f"{field!r} multiplicative inverse (tables)",
            bool(np.all(field.vmul(nz, field.vinv(nz)) == 1))))
        a, b, c = (rng.integers(0, q, triples) for _ in range(3))
        ok_assoc = bool(np.all(field.vmul(field.vmul(a, b), c)
                               == field.vmul(a, field.vmul(b, c))))
        ok_dist = bool(np.all(field.vmul(a, field.vadd(b, c))
                              == field.vadd(field.vmul(a, b), field.vmul(a, c))))
        out.append(CheckResult(f"{field!r} associativity ({triples} triples)",
                               ok_assoc))
        out.append(CheckResult(f"{field!r} distributivity ({triples} triples)",
                               ok_dist))
    except FieldError as exc:
        out.append(CheckResult(f"{field!r} bulk table arithmetic", False,
                               str(exc)))
    return out


def corrupted_field_fixture() -> Field:
    """A deliberately broken GF(16) for negative testing.

    The modulus is swapped post-construction for the reducible x^4 + 1, and
    the reduction rows recomputed, so multiplication happens in a quotient
    ring with zero divisors.  The cached healthy GF(16) is untouched; the
    axiom suite must flag this object, never accept it.
    """
    from .fields import _reduction_rows
    bad = Field(2, 4)
    bad.modulus = (1, 0, 0, 0, 1)
    bad._red_rows = _reduction_rows(2, 4, bad.modulus)
    bad._tables = None
    bad._generator = None
    return bad


def gap_suite(curve: CurveSpec) -> list:
    """Closed-form gaps == oracle gaps at all three points; semigroup
    generators reproduce the complement."""
    n = curve.n
    out = []
    formula = gaps_closed_form(n).gaps
    for point in ("P1", "P2", "P3"):
        got = gaps_oracle(curve, point).gaps
        out.append(CheckResult(
            f"gaps at {point} (n={n})", got == formula,
            f"oracle {got}, formula {formula}"))
    g = curve.genus
    gens = semigroup_generators(n)
    reach = [False] * (2 * g + 1)
    reach[0] = True
    for s in gens:
        for v in range(s, 2 * g + 1):
            reach[v] = reach[v] or reach[v - s]
    complement = tuple(m for m in range(1, 2 * g) if not reach[m])
    out.append(CheckResult(
        f"semigroup generators (n={n})", complement == formula,
        f"complement of <{gens}> is {complement}"))
    return out


def kim_suite(n_max: int = 12) -> list:
    """Bijectivity, beta^3 = id, and the divisibility characterization."""
    out = []
    for n in range(3, n_max + 1):
        gaps = gaps_closed_form(n).gaps
        img = [kim_image(n, a) for a in gaps]
        ok_bij = sorted(img) == list(gaps)
        ok_cube = all(kim_image(n, kim_image(n, kim_image(n, a))) == a
                      for a in gaps)
        out.append(CheckResult(f"kim map bijection + cube (n={n})",
                               ok_bij and ok_cube))
        # beta(a) = a forces i = n - j and 2j = n - 1 + i, so j = (2n-1)/3:
        # a single fixed gap when n = 2 mod 3, none otherwise
        fixed = [a for a in gaps if kim_image(n, a) == a]
        if (2 * n - 1) % 3 == 0:
            j = (2 * n - 1) // 3
            expected = [(n - j - 1) * (n - 1) + j]
        else:
            expected = []
        out.append(CheckResult(f"kim fixed points (n={n})", fixed == expected,
                               f"{fixed}"))
    for pair in CYCLIC_PAIRS:
        try:
            kim_map(min(n_max, 9), pair)  # witness check is internal
            out.append(CheckResult(f"kim witnesses {pair}", True))
        except AssertionError as exc:
            out.append(CheckResult(f"kim witnesses {pair}", False, str(exc)))
    return out


def pure_gap_suite(curve: CurveSpec, oracle_sweep: bool = True) -> list:
    """Pair/triple parametrizations vs counts, the inversion description,
    and (optionally) full oracle sweeps over the gap box."""
    n = curve.n
    g = curve.genus
    out = []
    pairs = pure_gaps_pair(n)
    tuples = sorted(r.tuple_ for r in pairs)
    out.append(CheckResult(
        f"pair count (n={n})", len(set(tuples)) == len(tuples) == pure_gap_count_pair(n),
        f"{len(tuples)} records"))
    out.append(CheckResult(
        f"pair inversion description (n={n})",
        tuples == pure_gaps_pair_via_homma_kim(n)))
    trips = pure_gaps_triple(n)
    tt = sorted(r.tuple_ for r in trips)
    out.append(CheckResult(
        f"triple count (n={n})", len(set(tt)) == len(tt) == pure_gap_count_triple(n),
        f"{len(tt)} records"))
    out.append(CheckResult(
        f"no triple coordinate divisible by n-1 (n={n})",
        all(v % (n - 1) for r in trips for v in r.tuple_)))
    if oracle_sweep:
        found = set()
        for a in range(1, 2 * g):
            for b in range(1, 2 * g):
                if pure_gap_oracle(curve, (a, b)):
                    found.add((a, b))
        out.append(CheckResult(
            f"pair oracle sweep (n={n})", sorted(found) == tuples,
            f"oracle found {len(found)}"))
        want = {r.tuple_ for r in trips}
        gaps = set(gaps_closed_form(n).gaps)
        found3 = set()
        for a in gaps:
            for b in gaps:
                for c in gaps:
                    if pure_gap_oracle(curve, (a, b, c)):
                        found3.add((a, b, c))
        out.append(CheckResult(
            f"triple oracle sweep (n={n})", found3 == want,
            f"oracle found {len(found3)}"))
        dims_ok = all(
            dim_L_oracle(curve, ThreePointDivisor(*r.tuple_))
            == r.predicted_dimension for r in trips)
        out.append(CheckResult(f"triple predicted dimensions (n={n})", dims_ok))
    return out


def dimension_suite(curve: CurveSpec) -> list:
    """Every closed-form dimension family vs the oracle, full parameter range."""
    n = curve.n
    g = curve.genus
    out = []
    bad = []
    for m in range(1, 2 * g - 1):
        want = dim_mP_formula(n, m)
        for D in (ThreePointDivisor(m, 0, 0), ThreePointDivisor(0, m, 0),
                  ThreePointDivisor(0, 0, m)):
            if dim_L_oracle(curve, D) != want:
                bad.append((m, D))
    out.append(CheckResult(f"dim m*P sweep (n={n})", not bad, f"bad: {bad[:4]}"))
    bad = []
    for m in range(1, 2 * g - 1):
        for var in SHIFT_VARIANTS:
            if dim_L_oracle(curve, shifted_divisor(n, m, var)) \
                    != dim_shifted_formula(n, m, var):
                bad.append((m, var))
    out.append(CheckResult(f"dim shifted sweep (n={n})", not bad, f"bad: {bad[:4]}"))
    bad = []
    for i in range(1, n):
        for j in range(1, n - i):
            want = dim_Md_Nd(n, i, j)
            if dim_L_oracle(curve, Md_divisor(n, i, j)) != want:
                bad.append(("M", i, j))
            if dim_L_oracle(curve, Nd_divisor(n, i, j)) != want:
                bad.append(("N", i, j))
    out.append(CheckResult(f"dim Md/Nd sweep (n={n})", not bad, f"bad: {bad[:4]}"))
    bad = []
    for i in range(-2, n + 1):
        for j in range(-2, n + 1):
            for k in range(-2, n + 1):
                if not -2 <= i + j + k <= n:
                    continue
                if dim_L_oracle(curve, Sd_divisor(n, i, j, k)) != dim_Sd(n, i, j, k):
                    bad.append((i, j, k))
    out.append(CheckResult(f"dim Sd sweep (n={n})", not bad, f"bad: {bad[:4]}"))
    bad = []
    for d in range(0, n - 1):
        e = n - 2 - d
        for i in range(0, d + 1):
            for j in range(0, d - i + 1):
                k = d - i - j
                D = Sd_divisor(n, i, j, k) + ThreePointDivisor(e, e, e)
                if dim_L_oracle(curve, D) != dim_Sd_plus_e(n, i, j, k, e):
                    bad.append((i, j, k, e))
    out.append(CheckResult(f"dim Sd+e sweep (n={n})", not bad, f"bad: {bad[:4]}"))
    return out


def riemann_roch_suite(curve: CurveSpec, divisors: int = 50, seed: int = 0,
                       stability: bool = True) -> list:
    """The exact Riemann-Roch identity and oracle N-stability on random
    three-point divisors."""
    g = curve.genus
    n = curve.n
    rng = np.random.default_rng(seed)
    W = canonical_divisor(n)
    out = []
    ok_w = (W.degree == 2 * g - 2 and dim_L_oracle(curve, W) == g)
    out.append(CheckResult(f"canonical divisor (n={n})", ok_w,
                           f"deg {W.degree}, ell {dim_L_oracle(curve, W)}"))
    bad = []
    for _ in range(divisors):
        D = ThreePointDivisor(*(int(v) for v in rng.integers(-2 * g, 2 * g + 1, 3)))
        lhs = dim_L_oracle(curve, D) - dim_L_oracle(curve, W - D)
        if lhs != D.degree + 1 - g:
            bad.append(D)
    out.append(CheckResult(
        f"Riemann-Roch identity on {divisors} random divisors (n={n})",
        not bad, f"bad: {bad[:3]}"))
    if stability:
        bad = []
        for _ in range(divisors):
            D = ThreePointDivisor(*(int(v) for v in rng.integers(-2 * g, 2 * g + 1, 3)))
            base = dim_L_oracle(curve, D, memo=False)
            if any(dim_L_oracle(curve, D, n_extra=x, memo=False) != base
                   for x in (1, 2)):
                bad.append(D)
        out.append(CheckResult(
            f"oracle stability under larger form degree (n={n})", not bad,
            f"bad: {bad[:3]}"))
    # monotonicity: 0 <= ell(D + P) - ell(D) <= 1
    bad = []
    for _ in range(20):
        D = ThreePointDivisor(*(int(v) for v in rng.integers(-g, g + 1, 3)))
        base = dim_L_oracle(curve, D)
        for step in (ThreePointDivisor(1, 0, 0), ThreePointDivisor(0, 1, 0),
                     ThreePointDivisor(0, 0, 1)):
            up = dim_L_oracle(curve, D + step)
            if not base <= up <= base + 1:
                bad.append((D, step))
    out.append(CheckResult(f"ell monotonicity (n={n})", not bad, f"bad: {bad[:3]}"))
    return out


def curve_suite(curve: CurveSpec, max_ext: int = 1) -> list:
    out = list(validate_curve(curve))
    sing = curve.smoothness_probe(max_ext)
    out.append(CheckResult(
        f"smoothness probe to extension degree {max_ext}", not sing,
        f"singular points: {sing[:3]}"))
    base = {p.coords for p in curve.rational_points()}
    if curve.field.q ** 2 <= 1 << 24:
        from .fields import embed
        big = curve.extension(2)
        lift = set()
        for p in curve.rational_points():
            coords = tuple(embed(curve.field.element(c), big.field).code
                           for c in p.coords)
            lift.add(coords)
        ext = {p.coords for p in big.rational_points()}
        out.append(CheckResult(
            "rational points embed into the quadratic extension",
            lift <= ext, f"{len(base)} -> {len(ext)} points"))
    return out


def suite_passed(results: list) -> bool:
    return all(r.passed for r in results)


def default_verify_report(n_max: int = 4, oracle_sweeps: bool = True,
                          inject_bug: bool = False) -> dict:
    """The standard bundle run by the CLI `verify` command."""
    from .catalog import builtin_curves
    curves = builtin_curves()
    used = {
        3: curves["q8-n3"],
        4: curves["q16-n4"],
        5: curves["q49-n5-record"],
    }
    sections = {}
    sections["fields"] = (field_axiom_suite(make_field(2, 4))
                          + field_axiom_suite(make_field(3, 3))
                          + field_axiom_suite(make_field(7, 2)))
    if inject_bug:
        sections["fields-injected-bug"] = field_axiom_suite(
            corrupted_field_fixture())
    sections["kim"] = kim_suite(n_max=max(n_max, 8))
    for n in sorted(used):
        if n > n_max:
            continue
        curve = used[n]
        tag = f"n{n}"
        sections[f"curve-{tag}"] = curve_suite(curve)
        sections[f"gaps-{tag}"] = gap_suite(curve)
        sections[f"dims-{tag}"] = dimension_suite(curve)
        sections[f"pure-gaps-{tag}"] = pure_gap_suite(
            curve, oracle_sweep=oracle_sweeps and n <= 4)
        sections[f"riemann-roch-{tag}"] = riemann_roch_suite(
            curve, divisors=25 if n >= 5 else 50)
    report = {
        "sections": {
            name: [{"name": r.name, "passed": r.passed, "detail": r.detail}
                   for r in results]
            for name, results in sections.items()
        },
        "passed": all(suite_passed(res) for res in sections.values()),
        "checks": sum(len(res) for res in sections.values()),
    }
    return report
