"""Bundled reference curves: family members with many rational points whose
differential codes have good certified parameters.

Each entry records the construction data plus the values the build is
expected to reproduce (point count, code length/dimension, distance floor).
The `reproduce` CLI command and the regression tests rebuild every row from
scratch and compare.
"""

from __future__ import annotations

from dataclasses import dataclass

from .curves import CurveSpec
from .fields import make_field


@dataclass(frozen=True)
class ReferenceRow:
    name: str
    p: int
    k: int
    n: int
    g_terms: tuple              # ((e1,e2,e3), integer coefficient) pairs
    design: tuple               # (i, j) for the two-point G
    expected_points: int
    expected_length: int
    expected_dimension: int
    expected_floor: int         # pure-gap designed distance

    def field(self):
        return make_field(self.p, self.k)

    def curve(self) -> CurveSpec:
        F = self.field()
        g = {e: c % self.p for e, c in self.g_terms}
        return CurveSpec(F, self.n, g)


REFERENCE_ROWS = (
    ReferenceRow(
        name="q27-n4", p=3, k=3, n=4,
        g_terms=(((2, 0, 0), 1), ((1, 1, 0), 1), ((0, 2, 0), -1), ((0, 1, 1), -1)),
        design=(2, 1), expected_points=59,
        expected_length=57, expected_dimension=49, expected_floor=6),
    ReferenceRow(
        name="q16-n4", p=2, k=4, n=4,
        g_terms=(((2, 0, 0), 1), ((0, 2, 0), 1)),
        design=(2, 1), expected_points=39,
        expected_length=37, expected_dimension=29, expected_floor=6),
    ReferenceRow(
        name="q128-n4", p=2, k=7, n=4,
        g_terms=(((1, 1, 0), 1), ((0, 2, 0), 1), ((1, 0, 1), 1), ((0, 1, 1), 1)),
        design=(2, 1), expected_points=199,
        expected_length=197, expected_dimension=189, expected_floor=6),
    ReferenceRow(
        name="q81-n4", p=3, k=4, n=4,
        g_terms=(((2, 0, 0), 2), ((1, 1, 0), 1), ((0, 2, 0), 1), ((1, 0, 1), 1),
                 ((0, 0, 2), 2)),
        design=(2, 1), expected_points=145,
        expected_length=143, expected_dimension=135, expected_floor=6),
    ReferenceRow(
        name="q49-n4", p=7, k=2, n=4,
        g_terms=(((2, 0, 0), 2), ((0, 2, 0), 2), ((1, 0, 1), 3), ((0, 1, 1), 6),
                 ((0, 0, 2), 2)),
        design=(2, 1), expected_points=100,
        expected_length=98, expected_dimension=90, expected_floor=6),
)

# the n = 5 member over GF(49) with 115 points; its two-point design with
# (i, j) = (3, 1) gives a ladder of codes [113, 95] ... [107, 89], all with
# pure-gap distance floor 12
RECORD_ROW = ReferenceRow(
    name="q49-n5-record", p=7, k=2, n=5,
    g_terms=(((0, 3, 0), 5), ((1, 2, 0), 4), ((2, 1, 0), 4), ((3, 0, 0), 6),
             ((0, 2, 1), 5), ((2, 0, 1), 3), ((1, 0, 2), 3), ((0, 0, 3), 2)),
    design=(3, 1), expected_points=115,
    expected_length=113, expected_dimension=95, expected_floor=12)

RECORD_LENGTHS = tuple(range(113, 106, -1))   # [113,95] down to [107,89]


def builtin_curves() -> dict:
    """Name -> CurveSpec for every bundled curve, plus small G = 0 members."""
    out = {row.name: row.curve() for row in REFERENCE_ROWS}
    out[RECORD_ROW.name] = RECORD_ROW.curve()
    out["q8-n3"] = CurveSpec(make_field(2, 3), 3)     # G = 0, genus 3
    return out
