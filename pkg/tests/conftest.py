import random
from math import gcd

from hypothesis import strategies as st

from seifert_sections import DeleteTrivial, ExceptionalPair, InsertTrivial, Permute, SeifertData, Twist

ACCEPTANCE_LINES = []


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)


# -- hypothesis strategies -------------------------------------------------------

def pairs(max_alpha=30, max_beta=60):
    return st.tuples(st.integers(1, max_alpha), st.integers(-max_beta, max_beta)).filter(
        lambda t: gcd(*t) == 1).map(lambda t: ExceptionalPair(*t))


@st.composite
def seifert_data(draw, max_n=6, max_alpha=30, max_beta=60, max_genus=3):
    g = draw(st.integers(0, max_genus))
    ps = draw(st.lists(pairs(max_alpha, max_beta), max_size=max_n))
    return SeifertData(g, tuple(ps))


@st.composite
def zero_sum_vectors(draw, n, bound=5):
    if n == 0:
        return ()
    head = draw(st.lists(st.integers(-bound, bound), min_size=n - 1, max_size=n - 1))
    return tuple(head) + (-sum(head),)


# -- seeded generators for the large acceptance sweeps --------------------------

def random_pair(rng, max_alpha=30, max_beta=60):
    while True:
        a = rng.randint(1, max_alpha)
        b = rng.randint(-max_beta, max_beta)
        if gcd(a, b) == 1:
            return ExceptionalPair(a, b)


def random_seifert(rng, max_n=6, max_alpha=30, max_beta=60, max_genus=3):
    n = rng.randint(0, max_n)
    return SeifertData(rng.randint(0, max_genus),
                       tuple(random_pair(rng, max_alpha, max_beta) for _ in range(n)))


def random_zero_sum(rng, n, bound=5):
    if n == 0:
        return ()
    head = [rng.randint(-bound, bound) for _ in range(n - 1)]
    return tuple(head) + (-sum(head),)


def random_move(rng, m):
    """A random valid move for m."""
    n = m.n
    trivial = [i for i, p in enumerate(m.pairs) if p == ExceptionalPair(1, 0)]
    kinds = ["permute", "insert", "twist"] + (["delete"] if trivial else [])
    kind = rng.choice(kinds)
    if kind == "permute":
        perm = list(range(n))
        rng.shuffle(perm)
        return Permute(tuple(perm))
    if kind == "insert":
        return InsertTrivial(rng.randint(0, n))
    if kind == "delete":
        return DeleteTrivial(rng.choice(trivial))
    return Twist(random_zero_sum(rng, n))


def make_rng(seed):
    return random.Random(seed)
