"""Invariants of the quotient of a Seifert manifold by the cyclic subgroup Z_d < S^1."""
from __future__ import annotations

from math import gcd

from .seifert_core import ExceptionalPair, SeifertData


def zd_quotient(m: SeifertData, d: int) -> SeifertData:
    """Seifert invariants of M / Z_d, returned unnormalized.

    A fibre of multiplicity alpha descends to one of multiplicity
    alpha/gcd(alpha, d); beta becomes d*beta/gcd(alpha, d).
    """
    if d < 1:
        raise ValueError(f"d must be a positive integer, got {d}")
    pairs = []
    for p in m.pairs:
        c = gcd(p.alpha, d)
        pairs.append(ExceptionalPair(p.alpha // c, d * p.beta // c))
    return SeifertData(m.base_genus, tuple(pairs))
