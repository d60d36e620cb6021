"""Shared brute-force oracles, deliberately dumber than the library:
full slice comparisons, no filters, no shared state with the code they
check."""

import itertools

import pytest


def all_words(n, alphabet="012"):
    """Every word of length n over the alphabet, lexicographically."""
    for t in itertools.product(alphabet, repeat=n):
        yield "".join(t)


def brute_has_square(w):
    n = len(w)
    for i in range(n):
        for r in range(1, (n - i) // 2 + 1):
            if w[i : i + r] == w[i + r : i + 2 * r]:
                return True
    return False


def brute_border(w):
    """Length of the longest proper border, by trying every length."""
    best = 0
    for k in range(1, len(w)):
        if w[:k] == w[-k:]:
            best = k
    return best


def brute_global_period(w):
    for p in range(1, len(w) + 1):
        if all(w[i] == w[i + p] for i in range(len(w) - p)):
            return p
    raise AssertionError("|w| is always a period")


def repetition_candidates(w, p, q, alphabet="012"):
    """All words u of length q that satisfy the repetition-word shape at
    p: u ends with x or is a suffix of x, and u starts with y or is a
    prefix of y.  Pure enumeration; exponential in q."""
    x, y = w[:p], w[p:]
    hits = []
    for t in itertools.product(alphabet, repeat=q):
        u = "".join(t)
        left = u.endswith(x) if len(u) >= len(x) else x.endswith(u)
        right = u.startswith(y) if len(u) >= len(y) else y.startswith(u)
        if left and right:
            hits.append(u)
    return hits


def brute_local_period(w, p, alphabet="012"):
    """Minimal q admitting a repetition word, by candidate enumeration."""
    for q in range(1, len(w) + 1):
        if repetition_candidates(w, p, q, alphabet):
            return q
    raise AssertionError("q = |w| always admits y.x")


@pytest.fixture(scope="session")
def example1():
    return "0120201202021021021"


@pytest.fixture(scope="session")
def example2():
    return "01020120210201021"


@pytest.fixture(scope="session")
def example3():
    return "012021012102012021020121"
