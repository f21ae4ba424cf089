"""
Curves in weighted projective planes P(a0, a1, a2).

Covers the degree-genus formula, the degrees realizable by
F = f(z1, z2) - z0^d in P(1, alpha1, alpha2), and the translation of such
a curve into the positive d-section it defines on S^3.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations
from math import gcd


class SingularCurveError(ValueError):
    pass


@dataclass(frozen=True)
class WeightedPlane:
    a0: int
    a1: int
    a2: int

    def __post_init__(self):
        w = self.weights
        if min(w) < 1:
            raise ValueError(f"weights must be positive, got {w}")
        for x, y in combinations(w, 2):
            if gcd(x, y) != 1:
                raise ValueError(f"weights {w} are not pairwise coprime")

    @property
    def weights(self) -> tuple[int, int, int]:
        return (self.a0, self.a1, self.a2)


def degree_genus(p: WeightedPlane, d: int) -> Fraction:
    """Genus of a non-singular degree-d curve in p, as an exact rational.

    Not checked for integrality: only degrees that carry a non-singular
    curve give a meaningful (integral, non-negative) value.
    """
    if d < 1:
        raise ValueError(f"d must be positive, got {d}")
    a = p.weights
    prod = a[0] * a[1] * a[2]
    pair_term = sum(Fraction(gcd(a[i], a[j]), a[i] * a[j]) for i, j in combinations(range(3), 2))
    point_term = sum(Fraction(gcd(ai, d), ai) for ai in a)
    return (Fraction(d * d, prod) - d * pair_term + point_term - 1) / 2


def admissible_degrees(alpha1: int, alpha2: int, d_max: int) -> list[tuple[int, int, int, int]]:
    """All (d, k, eps1, eps2) with d = k*a1*a2 + eps1*a1 + eps2*a2 <= d_max.

    Sorted by d, then (k, eps1, eps2).  With a weight equal to 1 the same d
    can have several representations; all are listed.
    """
    if gcd(alpha1, alpha2) != 1:
        raise ValueError(f"weights {alpha1}, {alpha2} are not coprime")
    n = alpha1 * alpha2
    out = []
    for e1 in (0, 1):
        for e2 in (0, 1):
            base = e1 * alpha1 + e2 * alpha2
            k = 0 if e1 + e2 else 1
            while k * n + base <= d_max:
                out.append((k * n + base, k, e1, e2))
                k += 1
    return sorted(out)


def _same_point(p, q, alpha1, alpha2) -> bool:
    # [a:b] ~ [t^alpha1 a : t^alpha2 b]; a^alpha2 / b^alpha1 is the invariant
    return Fraction(p[0] ** alpha2, p[1] ** alpha1) == Fraction(q[0] ** alpha2, q[1] ** alpha1)


@dataclass(frozen=True)
class CurveSpec:
    """f = prod_i (b_i^a1 z1^a2 - a_i^a2 z2^a1) * z1^eps1 * z2^eps2,
    curve {f - z0^d = 0} in P(1, alpha1, alpha2)."""
    alpha1: int
    alpha2: int
    eps1: int
    eps2: int
    roots: tuple[tuple[int, int], ...] = ()

    def __post_init__(self):
        if gcd(self.alpha1, self.alpha2) != 1 or min(self.alpha1, self.alpha2) < 1:
            raise ValueError(f"weights ({self.alpha1},{self.alpha2}) must be coprime positive")
        if self.eps1 not in (0, 1) or self.eps2 not in (0, 1):
            raise ValueError("eps1, eps2 must be 0 or 1")
        roots = tuple(tuple(r) for r in self.roots)
        object.__setattr__(self, "roots", roots)
        for r in roots:
            if r[0] == 0 or r[1] == 0:
                raise SingularCurveError(f"root {r} is one of the orbifold points [1:0], [0:1]")
        for i, j in combinations(range(len(roots)), 2):
            if _same_point(roots[i], roots[j], self.alpha1, self.alpha2):
                raise SingularCurveError(
                    f"roots {roots[i]} and {roots[j]} coincide: f has a repeated factor")
        if not roots and self.eps1 + self.eps2 == 0:
            raise ValueError("k = 0 requires eps1 + eps2 >= 1")

    @property
    def k_factors(self) -> int:
        return len(self.roots)

    @property
    def degree(self) -> int:
        return self.k_factors * self.alpha1 * self.alpha2 + self.eps1 * self.alpha1 + self.eps2 * self.alpha2

    @property
    def weights(self) -> WeightedPlane:
        return WeightedPlane(1, self.alpha1, self.alpha2)


def default_roots(k: int) -> tuple[tuple[int, int], ...]:
    """k pairwise distinct generic points [1:j], j = 1..k."""
    return tuple((1, j) for j in range(1, k + 1))


@dataclass(frozen=True)
class CurveSectionSummary:
    d: int
    regular_boundary: int
    c1_boundary: bool
    c2_boundary: bool
    boundary_count: int
    genus: int


def curve_section_correspondence(c: CurveSpec) -> CurveSectionSummary:
    """The positive d-section of the (alpha1, alpha2) action on S^3 that the
    curve defines.

    Points at infinity are boundary fibres: each root gives a regular one;
    z1 | f puts [0:0:1] on the curve, i.e. the fibre C2 = {z1 = 0}; z2 | f
    likewise gives C1.
    """
    g = degree_genus(c.weights, c.degree)
    if g.denominator != 1 or g < 0:
        raise ArithmeticError(f"degree-genus value {g} is not a non-negative integer")
    return CurveSectionSummary(
        d=c.degree,
        regular_boundary=c.k_factors,
        c1_boundary=bool(c.eps2),
        c2_boundary=bool(c.eps1),
        boundary_count=c.k_factors + c.eps1 + c.eps2,
        genus=int(g),
    )
