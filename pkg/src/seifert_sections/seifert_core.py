"""
Seifert invariants M(g; (a1,b1), ..., (an,bn)): validation, Euler number,
the three equivalence moves, normal form and isomorphism testing.

All arithmetic is exact (int / Fraction).  Nothing here normalizes
implicitly; callers pick raw or normalized data explicitly.
"""
from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction
from math import gcd
from typing import Sequence, Union


class InvalidSeifertData(ValueError):
    pass


class InvalidMove(ValueError):
    pass


class ParseError(ValueError):
    def __init__(self, message: str, position: int):
        super().__init__(f"{message} at position {position}")
        self.position = position


@dataclass(frozen=True, order=True)
class ExceptionalPair:
    alpha: int
    beta: int

    def __post_init__(self):
        if self.alpha < 1:
            raise InvalidSeifertData(f"alpha must be positive, got {self.alpha}")
        if gcd(self.alpha, self.beta) != 1:
            raise InvalidSeifertData(
                f"gcd({self.alpha},{self.beta}) = "
                f"{gcd(self.alpha, self.beta)} != 1 in pair ({self.alpha},{self.beta})"
            )

    def __str__(self):
        return f"({self.alpha},{self.beta})"


@dataclass(frozen=True)
class SeifertData:
    base_genus: int
    pairs: tuple[ExceptionalPair, ...] = ()

    def __post_init__(self):
        if self.base_genus < 0:
            raise InvalidSeifertData(f"base genus must be >= 0, got {self.base_genus}")
        pairs = tuple(p if isinstance(p, ExceptionalPair) else ExceptionalPair(*p)
                      for p in self.pairs)
        object.__setattr__(self, "pairs", pairs)

    @classmethod
    def of(cls, g: int, *pairs: tuple[int, int]) -> "SeifertData":
        """Shorthand: ``SeifertData.of(0, (2, 1), (3, -1))``."""
        return cls(g, tuple(ExceptionalPair(a, b) for a, b in pairs))

    @property
    def n(self) -> int:
        return len(self.pairs)

    @property
    def alphas(self) -> list[int]:
        return [p.alpha for p in self.pairs]

    def __str__(self):
        if not self.pairs:
            return f"M({self.base_genus};)"
        return f"M({self.base_genus}; {', '.join(map(str, self.pairs))})"


@dataclass(frozen=True)
class NormalForm:
    base_genus: int
    b: int
    singular_pairs: tuple[ExceptionalPair, ...]

    def to_seifert(self) -> SeifertData:
        """Expand back to a presentation M(g; (1,b), singular pairs...)."""
        pairs = ((ExceptionalPair(1, self.b),) if self.b else ()) + self.singular_pairs
        return SeifertData(self.base_genus, pairs)

    def __str__(self):
        body = ", ".join([f"(1,{self.b})"] + [str(p) for p in self.singular_pairs])
        return f"M({self.base_genus}; {body})"


# -- moves ------------------------------------------------------------------

@dataclass(frozen=True)
class Permute:
    """Move (o): result[i] = pairs[permutation[i]]."""
    permutation: tuple[int, ...]


@dataclass(frozen=True)
class InsertTrivial:
    """Move (i): add a (1,0) pair (appended unless ``index`` given)."""
    index: int | None = None


@dataclass(frozen=True)
class DeleteTrivial:
    """Move (i): remove the (1,0) pair at ``index``."""
    index: int


@dataclass(frozen=True)
class Twist:
    """Move (ii): beta_i -> beta_i + k_i*alpha_i with sum(k) == 0."""
    k: tuple[int, ...]


MoveSpec = Union[Permute, InsertTrivial, DeleteTrivial, Twist]


def euler_number(m: SeifertData) -> Fraction:
    return -sum((Fraction(p.beta, p.alpha) for p in m.pairs), Fraction(0))


def normalize(m: SeifertData) -> NormalForm:
    b = 0
    singular = []
    for p in m.pairs:
        q, r = divmod(p.beta, p.alpha)
        b += q
        if p.alpha > 1:
            singular.append(ExceptionalPair(p.alpha, r))
    return NormalForm(m.base_genus, b, tuple(sorted(singular)))


def is_isomorphic(m1: SeifertData, m2: SeifertData) -> bool:
    return normalize(m1) == normalize(m2)


def apply_move(m: SeifertData, move: MoveSpec) -> SeifertData:
    pairs = list(m.pairs)
    if isinstance(move, Permute):
        perm = tuple(move.permutation)
        if sorted(perm) != list(range(len(pairs))):
            raise InvalidMove(f"{perm} is not a permutation of {len(pairs)} pairs")
        pairs = [pairs[i] for i in perm]
    elif isinstance(move, InsertTrivial):
        idx = len(pairs) if move.index is None else move.index
        if not 0 <= idx <= len(pairs):
            raise InvalidMove(f"insert position {idx} out of range")
        pairs.insert(idx, ExceptionalPair(1, 0))
    elif isinstance(move, DeleteTrivial):
        if not 0 <= move.index < len(pairs):
            raise InvalidMove(f"delete index {move.index} out of range")
        if pairs[move.index] != ExceptionalPair(1, 0):
            raise InvalidMove(
                f"pair {move.index} is {pairs[move.index]}, not the trivial pair (1,0)")
        del pairs[move.index]
    elif isinstance(move, Twist):
        k = tuple(move.k)
        if len(k) != len(pairs):
            raise InvalidMove(f"twist vector has {len(k)} entries, expected {len(pairs)}")
        if sum(k) != 0:
            raise InvalidMove(f"twist vector must sum to 0, sums to {sum(k)}")
        pairs = [ExceptionalPair(p.alpha, p.beta + ki * p.alpha) for p, ki in zip(pairs, k)]
    else:
        raise InvalidMove(f"unknown move {move!r}")
    return SeifertData(m.base_genus, tuple(pairs))


def apply_moves(m: SeifertData, moves: Sequence[MoveSpec]) -> SeifertData:
    for mv in moves:
        m = apply_move(m, mv)
    return m


# -- text syntax --------------------------------------------------------------

_TOKEN = re.compile(r"(-?\d+)|(\S)")


def _tokens(text: str):
    for mt in _TOKEN.finditer(text):
        if mt.group(1) is not None:
            yield "int", int(mt.group(1)), mt.start()
        else:
            yield "sym", mt.group(2), mt.start()
    yield "end", None, len(text)


def parse_seifert(text: str) -> SeifertData:
    """Parse ``M(g; (a1,b1), (a2,b2), ...)``; whitespace is ignored."""
    toks = list(_tokens(text))
    i = 0

    def expect(kind, value=None):
        nonlocal i
        k, v, pos = toks[i]
        if k != kind or (value is not None and v != value):
            want = repr(value) if value is not None else "an integer"
            got = "end of input" if k == "end" else repr(str(v))
            raise ParseError(f"expected {want}, found {got}", pos)
        i += 1
        return v

    def peek(value):
        k, v, _ = toks[i]
        return k == "sym" and v == value

    expect("sym", "M")
    expect("sym", "(")
    g = expect("int")
    expect("sym", ";")
    raw = []
    while peek("("):
        expect("sym", "(")
        a = expect("int")
        expect("sym", ",")
        b = expect("int")
        expect("sym", ")")
        raw.append((a, b))
        if not peek(","):
            break
        expect("sym", ",")
        if not peek("("):
            raise ParseError("expected '(' after ','", toks[i][2])
    expect("sym", ")")
    expect("end")
    if g < 0:
        raise InvalidSeifertData(f"base genus must be >= 0, got {g}")
    return SeifertData(g, tuple(ExceptionalPair(a, b) for a, b in raw))
