"""Independent oracles used to freeze expected values.

These deliberately avoid the code paths they check: the dual oracle scans
all q^n vectors instead of doing Gaussian elimination, subspace counts come
from the Gaussian binomial product formula, and multinomials from raw
factorials.
"""

from __future__ import annotations

import itertools
import math

from weightenum import FieldSpec, LinearCode


def brute_dual_words(code: LinearCode) -> set[tuple[int, ...]]:
    """All vectors orthogonal to every codeword, by exhaustive scan."""
    spec, n = code.spec, code.n
    add, mul = spec.add_table, spec.mul_table
    words = code.codeword_list()
    out = set()
    for cand in itertools.product(range(spec.q), repeat=n):
        ok = True
        for w in words:
            acc = 0
            for a, b in zip(cand, w):
                acc = add[acc][mul[a][b]]
            if acc != 0:
                ok = False
                break
        if ok:
            out.add(cand)
    return out


def code_words(code: LinearCode) -> set[tuple[int, ...]]:
    return set(code.codeword_list())


def gaussian_binomial(n: int, k: int, q: int) -> int:
    """Number of k-dimensional subspaces of F_q^n."""
    num = den = 1
    for i in range(k):
        num *= q**n - q**i
        den *= q**k - q**i
    return num // den


def subspace_count(n: int, q: int) -> int:
    return sum(gaussian_binomial(n, k, q) for k in range(n + 1))


def factorial_multinomial(n: int, parts) -> int:
    out = math.factorial(n)
    for p in parts:
        out //= math.factorial(p)
    return out


def make_code(spec: FieldSpec, n: int, rows) -> LinearCode:
    return LinearCode(spec, n, rows)
