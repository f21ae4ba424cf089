"""
Global surfaces of section of Seifert fibrations.

1-sections (any boundary signs) and positive d-sections are classified
completely; for mixed-sign d-sections with d >= 2 only the local necessary
condition at each singular fibre is available.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Optional, Union

from .seifert_core import SeifertData, euler_number


class IntegralityError(ArithmeticError):
    """A quantity that must be an integer came out fractional."""


def _as_int(value: Fraction, what: str) -> int:
    if value.denominator != 1:
        raise IntegralityError(f"{what} = {value} is not an integer")
    return value.numerator


# -- fibre roles and topology -------------------------------------------------

@dataclass(frozen=True)
class Boundary:
    sign: int

    def __str__(self):
        return "boundary(+)" if self.sign > 0 else "boundary(-)"


@dataclass(frozen=True)
class Interior:
    intersections: int

    def __str__(self):
        return f"interior(x{self.intersections})"


FiberRole = Union[Boundary, Interior]


@dataclass(frozen=True)
class Connected:
    genus: int


@dataclass(frozen=True)
class ClosedUndeterminedComponents:
    euler_characteristic: int


@dataclass(frozen=True)
class SectionReport:
    d: int
    fiber_roles: tuple[FiberRole, ...]
    epsilons: tuple[int, ...]
    a_coeffs: tuple[int, ...]
    b_bar: int
    boundary_count: int
    topology: Union[Connected, ClosedUndeterminedComponents]

    exists = True

    @property
    def k(self) -> int:
        """Number of exceptional fibres that are boundary components."""
        return sum(isinstance(r, Boundary) for r in self.fiber_roles)

    @property
    def genus(self) -> Optional[int]:
        if isinstance(self.topology, Connected):
            return self.topology.genus
        return None


@dataclass(frozen=True)
class Obstruction:
    d: int
    reason: str             # "divisibility", "sign" or "euler"
    pair_index: Optional[int]
    detail: str

    exists = False
    genus = None
    boundary_count = None

    def __str__(self):
        return self.detail


# -- 1-sections ---------------------------------------------------------------

@dataclass(frozen=True)
class OneSectionResult:
    exists: bool
    signs: tuple[Optional[frozenset], ...] = ()
    net_regular_boundary: Optional[int] = None
    genus: Optional[int] = None
    obstruction_index: Optional[int] = None
    m: Optional[SeifertData] = field(default=None, repr=False, compare=False)

    def net_for(self, signs: tuple[Optional[int], ...]) -> int:
        """b+ - b- forced by a choice of sign per singular fibre (None for alpha=1)."""
        if not self.exists:
            raise ValueError("no 1-section exists")
        net = 0
        for p, allowed, s in zip(self.m.pairs, self.signs, signs):
            if p.alpha == 1:
                net += p.beta
                continue
            if s not in allowed:
                raise ValueError(f"sign {s} not allowed for pair {p}")
            net += (p.beta - s) // p.alpha
        return net

    def realizable(self, b_plus: int, b_minus: int) -> bool:
        """Whether some 1-section has b_plus positive and b_minus negative
        regular boundary fibres (singular signs as forced; for alpha=2 either)."""
        if not self.exists or b_plus < 0 or b_minus < 0:
            return False
        choices = [[None] if s is None else sorted(s) for s in self.signs]
        nets = {0}
        for p, opts in zip(self.m.pairs, choices):
            step = set()
            for s in opts:
                step.add(p.beta if s is None else (p.beta - s) // p.alpha)
            nets = {a + b for a in nets for b in step}
        return b_plus - b_minus in nets


def classify_one_section(m: SeifertData) -> OneSectionResult:
    signs = []
    for i, p in enumerate(m.pairs):
        if p.alpha == 1:
            signs.append(None)
            continue
        r = p.beta % p.alpha
        allowed = set()
        if r == 1:
            allowed.add(1)
        if r == p.alpha - 1:
            allowed.add(-1)
        if not allowed:
            return OneSectionResult(False, obstruction_index=i, m=m)
        signs.append(frozenset(allowed))
    # alpha = 2 admits both signs; report the net count for the + choice
    net = sum(p.beta if s is None else (p.beta - max(s)) // p.alpha
              for p, s in zip(m.pairs, signs))
    return OneSectionResult(True, tuple(signs), net, m.base_genus, None, m)


# -- d-sections ---------------------------------------------------------------

@dataclass(frozen=True)
class PairVerdict:
    kind: str               # "interior", "boundary" or "obstructed"
    signs: frozenset = frozenset()


def d_section_necessary(m: SeifertData, d: int) -> list[PairVerdict]:
    """Local condition at every pair for some d-section to exist.

    Pairs with alpha = 1 always come back as interior.
    """
    if d < 1:
        raise ValueError(f"d must be a positive integer, got {d}")
    out = []
    for p in m.pairs:
        if d % p.alpha == 0:
            out.append(PairVerdict("interior"))
            continue
        signs = set()
        if (d * p.beta - 1) % p.alpha == 0:
            signs.add(1)
        if (d * p.beta + 1) % p.alpha == 0:
            signs.add(-1)
        out.append(PairVerdict("boundary", frozenset(signs)) if signs
                   else PairVerdict("obstructed"))
    return out


def formula_values(m: SeifertData, d: int) -> dict[str, Fraction]:
    """Closed-form rational values for a positive d-section of m.

    Keys: ``ob_lhs`` (d*e + sum 1/alpha over alpha not dividing d, must be
    <= 0), ``genus`` and ``boundary``.  Meaningful only when the section
    exists; they are integers exactly in that case.
    """
    e = euler_number(m)
    g, n = m.base_genus, m.n
    non_div = [p.alpha for p in m.pairs if d % p.alpha]
    inv_all = sum((Fraction(1, p.alpha) for p in m.pairs), Fraction(0))
    corr = sum((1 - Fraction(1, a) for a in non_div), Fraction(0))
    ob_lhs = d * e + sum((Fraction(1, a) for a in non_div), Fraction(0))
    genus = (2 - d * (2 - 2 * g + (d - 1) * e + inv_all - n) - corr) / 2
    boundary = -d * e + corr
    return {"ob_lhs": ob_lhs, "genus": genus, "boundary": boundary}


def classify_positive_d_section(m: SeifertData, d: int) -> Union[SectionReport, Obstruction]:
    if d < 1:
        raise ValueError(f"d must be a positive integer, got {d}")
    roles, eps, a_coeffs = [], [], []
    b_bar = 0
    for i, p in enumerate(m.pairs):
        if d % p.alpha == 0:
            roles.append(Interior(d // p.alpha))
            b_bar += d * p.beta // p.alpha
            continue
        a, r = divmod(d * p.beta, p.alpha)
        if r == 1:
            eps.append(1)
            a_coeffs.append(a)
            roles.append(Boundary(1))
            b_bar += a
        elif r == p.alpha - 1:
            return Obstruction(d, "sign", i,
                               f"pair {i} {p}: negative boundary fibre "
                               f"({p.alpha} divides d*beta+1 = {d * p.beta + 1})")
        else:
            return Obstruction(d, "divisibility", i,
                               f"pair {i} {p}: {p.alpha} divides none of "
                               f"{d}, {d * p.beta - 1}, {d * p.beta + 1}")

    vals = formula_values(m, d)
    if _as_int(-vals["ob_lhs"], "b_bar from Euler inequality") != b_bar:
        raise IntegralityError(f"b_bar {b_bar} disagrees with Euler inequality {vals['ob_lhs']}")
    if b_bar < 0:
        return Obstruction(d, "euler", None,
                           f"b_bar = {b_bar} < 0 (d*e + sum 1/alpha = {vals['ob_lhs']} > 0)")

    k = len(eps)
    boundary = _as_int(vals["boundary"], "boundary count")
    if boundary != b_bar + k:
        raise IntegralityError(f"boundary {boundary} != b_bar + k = {b_bar + k}")

    if boundary == 0:
        report = SectionReport(d, tuple(roles), tuple(eps), tuple(a_coeffs), b_bar, 0,
                               ClosedUndeterminedComponents(0))
        chi = rh_quotient_chi(m, d, report)
        return SectionReport(d, tuple(roles), tuple(eps), tuple(a_coeffs), b_bar, 0,
                             ClosedUndeterminedComponents(chi))

    genus = _as_int(vals["genus"], "genus")
    if genus < 0:
        raise IntegralityError(f"negative genus {genus}")
    return SectionReport(d, tuple(roles), tuple(eps), tuple(a_coeffs), b_bar, boundary,
                         Connected(genus))


def rh_quotient_chi(m: SeifertData, d: int, report: SectionReport) -> int:
    """Euler characteristic of the capped-off d-section, by Riemann-Hurwitz.

    The capped section is a d-fold branched cover of the capped 1-section of
    M/Z_d (a closed surface of genus g).  Each capped boundary disc is one
    branch point of index d; a fibre with alpha | d contributes d/alpha
    points of index alpha over one point downstairs.
    """
    if report.d != d or len(report.fiber_roles) != m.n:
        raise ValueError("report does not belong to this (m, d)")
    for p, role in zip(m.pairs, report.fiber_roles):
        if isinstance(role, Interior) != (d % p.alpha == 0):
            raise ValueError(f"role {role} inconsistent with pair {p} at d={d}")
    k = report.k
    caps = report.b_bar + k
    if caps != report.boundary_count:
        raise ValueError("report boundary count differs from b_bar + k")
    upstairs_over_marked = sum(d // p.alpha for p in m.pairs if d % p.alpha == 0)
    return d * (2 - 2 * m.base_genus - caps - (m.n - k)) + caps + upstairs_over_marked


def scan_positive_sections(m: SeifertData, d_max: int) -> list[Union[SectionReport, Obstruction]]:
    return [classify_positive_d_section(m, d) for d in range(1, d_max + 1)]


def minimal_positive_d(m: SeifertData, d_max: int) -> Optional[int]:
    """Smallest d <= d_max admitting a positive d-section, or None."""
    if d_max < 1:
        raise ValueError(f"d_max must be >= 1, got {d_max}")
    # every singular fibre must be interior (alpha | d) or a positive boundary
    # fibre (alpha | d*beta - 1); only d passing this residue test is classified
    local = [(p.alpha, p.beta) for p in m.pairs if p.alpha > 1]
    for d in range(1, d_max + 1):
        if all(d % a == 0 or (d * b - 1) % a == 0 for a, b in local) \
                and classify_positive_d_section(m, d).exists:
            return d
    return None
