"""Brute-force membership tests for the languages the constructions accept."""
from ..search import as_word


def oracle_otto(word) -> bool:
    """Membership in { u v u^R v^R u^R : u, v in {a,b}+, |u| = |v| }."""
    w = as_word(word)
    n = len(w)
    if n == 0 or n % 5 or any(a not in ("a", "b") for a in w):
        return False
    m = n // 5
    u, v = w[:m], w[m:2 * m]
    return w == u + v + u[::-1] + v[::-1] + u[::-1]


def oracle_power_of_two(word) -> bool:
    """Membership in { a^(2^n) : n >= 1 }."""
    w = as_word(word)
    n = len(w)
    return n >= 2 and n & (n - 1) == 0 and all(a == "a" for a in w)


ORACLES = {
    "otto": oracle_otto,
    "power-of-two": oracle_power_of_two,
}
