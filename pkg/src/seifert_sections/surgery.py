"""
Surgery diagrams for genus-0 Seifert manifolds: a framed unknot K0 with
one meridian per pair, the meridian carrying coefficient alpha/beta.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Optional, Sequence

from .seifert_core import SeifertData

# None stands for the infinite coefficient alpha/0 (a trivial surgery).
Coefficient = Optional[Fraction]


@dataclass(frozen=True)
class SurgeryDiagram:
    k0_framing: int
    meridian_coefficients: tuple[Coefficient, ...]

    @property
    def exportable(self) -> bool:
        return self.k0_framing == 0

    def without_trivial(self) -> "SurgeryDiagram":
        """Drop infinity-framed meridians."""
        return SurgeryDiagram(self.k0_framing,
                              tuple(c for c in self.meridian_coefficients if c is not None))

    def to_text(self) -> str:
        body = ", ".join(f"m{i}[{format_coefficient(c)}]"
                         for i, c in enumerate(self.meridian_coefficients, 1))
        return f"K0[{self.k0_framing}]" + (f"; {body}" if body else "")

    def to_json(self) -> dict:
        return {
            "k0_framing": self.k0_framing,
            "exportable": self.exportable,
            "meridians": [format_coefficient(c) for c in self.meridian_coefficients],
        }


def format_coefficient(c: Coefficient) -> str:
    if c is None:
        return "inf"
    return str(c.numerator) if c.denominator == 1 else f"{c.numerator}/{c.denominator}"


def _alpha_beta(c: Coefficient) -> tuple[int, int]:
    # alpha > 0 pins the sign: alpha/beta = p/q with q > 0
    if c is None:
        return 1, 0
    p, q = c.numerator, c.denominator
    return (p, q) if p > 0 else (-p, -q)


def _coefficient(alpha: int, beta: int) -> Coefficient:
    return None if beta == 0 else Fraction(alpha, beta)


def surgery_presentation(m: SeifertData) -> SurgeryDiagram:
    if m.base_genus != 0:
        raise ValueError("surgery presentation is only available for base genus 0")
    return SurgeryDiagram(0, tuple(_coefficient(p.alpha, p.beta) for p in m.pairs))


def rolfsen_twist(diag: SurgeryDiagram, k: Sequence[int]) -> SurgeryDiagram:
    """Twist meridian i k_i times: alpha/beta -> alpha/(beta + k_i alpha),
    K0 framing shifts by sum(k)."""
    if len(k) != len(diag.meridian_coefficients):
        raise ValueError(f"need one twist per meridian ({len(diag.meridian_coefficients)}), got {len(k)}")
    coeffs = []
    for c, ki in zip(diag.meridian_coefficients, k):
        alpha, beta = _alpha_beta(c)
        coeffs.append(_coefficient(alpha, beta + ki * alpha))
    return SurgeryDiagram(diag.k0_framing + sum(k), tuple(coeffs))
