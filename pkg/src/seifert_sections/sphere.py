"""
Seifert fibrations of S^3 and their positive d-sections.

The fibration with coprime weights (alpha1, alpha2) is the circle action
t.(z1, z2) = (e^{i alpha1 t} z1, e^{i alpha2 t} z2); the fibre C1 = {z2 = 0}
has multiplicity alpha1 and C2 = {z1 = 0} multiplicity alpha2.  As
Seifert data it is M(0; (alpha1, beta1), (alpha2, beta2)) with
alpha1*beta2 + alpha2*beta1 = 1.
"""
from __future__ import annotations

import enum
from dataclasses import dataclass
from fractions import Fraction
from math import gcd
from typing import Optional

from .seifert_core import SeifertData


class Family(enum.Enum):
    REGULAR = "Regular"
    C1_BOUNDARY = "C1Boundary"
    C2_BOUNDARY = "C2Boundary"
    BOTH_BOUNDARY = "BothBoundary"


@dataclass(frozen=True)
class SphereFibration:
    alpha1: int
    alpha2: int
    beta1: int
    beta2: int

    def __post_init__(self):
        if min(self.alpha1, self.alpha2) < 1 or gcd(self.alpha1, self.alpha2) != 1:
            raise ValueError(f"weights ({self.alpha1},{self.alpha2}) must be coprime positive integers")
        if self.alpha1 * self.beta2 + self.alpha2 * self.beta1 != 1:
            raise ValueError("need alpha1*beta2 + alpha2*beta1 = 1")

    def to_seifert(self) -> SeifertData:
        return SeifertData.of(0, (self.alpha1, self.beta1), (self.alpha2, self.beta2))


@dataclass(frozen=True)
class TableRow:
    family: Family
    k_param: int
    d: int
    boundary_count: int
    c1_in_boundary: bool
    c2_in_boundary: bool
    genus: int


@dataclass(frozen=True)
class BranchProfile:
    entries: tuple[tuple[int, int], ...]   # (number of points, branching index)
    sheet_count: int

    @property
    def ramification(self) -> int:
        return sum(count * (index - 1) for count, index in self.entries)


def sphere_from_weights(alpha1: int, alpha2: int) -> SphereFibration:
    """Seifert invariants with 0 <= beta1 < alpha1 (beta1 = 0 when alpha1 = 1)."""
    if min(alpha1, alpha2) < 1 or gcd(alpha1, alpha2) != 1:
        raise ValueError(f"weights ({alpha1},{alpha2}) must be coprime positive integers")
    beta1 = pow(alpha2, -1, alpha1) if alpha1 > 1 else 0
    beta2, rem = divmod(1 - alpha2 * beta1, alpha1)
    assert rem == 0
    return SphereFibration(alpha1, alpha2, beta1, beta2)


def _row(f: SphereFibration, family: Family, k: int) -> TableRow:
    a1, a2 = f.alpha1, f.alpha2
    n = a1 * a2
    if family is Family.REGULAR:
        d, bd, c1, c2 = k * n, k, False, False
        twice_g = (k * a1 - 1) * (k * a2 - 1) + 1 - k
    elif family is Family.C1_BOUNDARY:
        d, bd, c1, c2 = k * n + a2, k + 1, True, False
        twice_g = (k * a1 + 1) * (k * a2 - 1) + 1 - k
    elif family is Family.C2_BOUNDARY:
        d, bd, c1, c2 = k * n + a1, k + 1, False, True
        twice_g = (k * a1 - 1) * (k * a2 + 1) + 1 - k
    else:
        d, bd, c1, c2 = k * n + a1 + a2, k + 2, True, True
        twice_g = (k * a1 + 1) * (k * a2 + 1) - 1 - k
    if twice_g % 2:
        raise ArithmeticError(f"odd doubled genus {twice_g} for {family} k={k}")
    return TableRow(family, k, d, bd, c1, c2, twice_g // 2)


def family_allowed(f: SphereFibration, family: Family) -> bool:
    if family is Family.C1_BOUNDARY:
        return f.alpha1 > 1
    if family is Family.C2_BOUNDARY:
        return f.alpha2 > 1
    if family is Family.BOTH_BOUNDARY:
        return f.alpha1 > 1 and f.alpha2 > 1
    return True


def _offset(f: SphereFibration, family: Family) -> int:
    return {
        Family.REGULAR: 0,
        Family.C1_BOUNDARY: f.alpha2,
        Family.C2_BOUNDARY: f.alpha1,
        Family.BOTH_BOUNDARY: f.alpha1 + f.alpha2,
    }[family]


def table_row(f: SphereFibration, family: Family, k_param: int) -> TableRow:
    """The row of the given family at parameter k (Regular needs k >= 1)."""
    if not family_allowed(f, family):
        raise ValueError(f"{family.value} needs the corresponding weight > 1")
    if k_param < (1 if family is Family.REGULAR else 0):
        raise ValueError(f"k_param {k_param} out of range for {family.value}")
    return _row(f, family, k_param)


def matching_rows(f: SphereFibration, d: int) -> list[TableRow]:
    """Every family whose closed form (with its side condition) produces d."""
    n = f.alpha1 * f.alpha2
    rows = []
    for family in Family:
        if not family_allowed(f, family):
            continue
        k, r = divmod(d - _offset(f, family), n)
        if r == 0 and k >= (1 if family is Family.REGULAR else 0):
            rows.append(_row(f, family, k))
    return rows


def admissible_d(f: SphereFibration, d: int) -> Optional[TableRow]:
    if d < 1:
        raise ValueError(f"d must be positive, got {d}")
    rows = matching_rows(f, d)
    if len(rows) > 1:
        raise ArithmeticError(f"d={d} lies in several families: {rows}")
    return rows[0] if rows else None


def table_rows(f: SphereFibration, k_max: int) -> list[TableRow]:
    """First k_max + 1 rows of every allowed family, sorted by d.

    Regular rows start at k = 1, the others at k = 0.
    """
    rows = []
    for family in Family:
        if not family_allowed(f, family):
            continue
        start = 1 if family is Family.REGULAR else 0
        rows.extend(_row(f, family, k) for k in range(start, start + k_max + 1))
    return sorted(rows, key=lambda r: r.d)


def hopf_lift_profile(f: SphereFibration, row: TableRow) -> BranchProfile:
    """Branch points upstairs of the lift of the d-section to a Hopf d-section.

    The lift is an alpha1*alpha2-sheeted branched cover of capped surfaces.
    Interior C_i: d points of index alpha_j on the lift of C_i.
    Boundary C_i: alpha_j points of index alpha_i (the desingularized lift of
    C_i) plus d points of index alpha_j on the nearby fibre through the
    perturbed lift.  Index-1 entries are dropped.
    """
    a1, a2, d = f.alpha1, f.alpha2, row.d
    if row.c1_in_boundary:
        c1 = [(a2, a1), (d, a2)]
    else:
        c1 = [(d, a2)]
    if row.c2_in_boundary:
        c2 = [(a1, a2), (d, a1)]
    else:
        c2 = [(d, a1)]
    entries = tuple((c, i) for c, i in c1 + c2 if i >= 2)
    return BranchProfile(entries, a1 * a2)


def rh_hopf_lift_genus(f: SphereFibration, row: TableRow) -> int:
    """Genus of the d-section from Riemann-Hurwitz against the Hopf d-section.

    chi(capped Hopf d-section) = 2 - (d-1)(d-2) = N*chi_down - ramification.
    """
    profile = hopf_lift_profile(f, row)
    d = row.d
    chi_up = 2 - (d - 1) * (d - 2)
    chi_down = Fraction(chi_up + profile.ramification, profile.sheet_count)
    genus = (2 - chi_down) / 2
    if genus.denominator != 1 or genus < 0:
        raise ArithmeticError(f"branch profile {profile} gives genus {genus} for d={d}")
    return int(genus)
