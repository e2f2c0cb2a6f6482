"""Linear codes over F_q and the monomial matrices acting on them.

A code is stored by its generator matrix in reduced row echelon form, so
two objects describe the same code exactly when their generator tuples are
equal.  Codewords and generator rows are tuples of element indices in
[0, q); the FieldSpec tables supply the arithmetic.

A monomial matrix is a pair (perm, diag) acting by

    (u M)_i = diag[i] * u[perm[i]],

the single frozen reading of the scale-and-permute action.  Whole-group
averages do not depend on this choice, individual matrices do.

The code file format is line oriented:

    # comment
    field p=<p> m=<m> [poly=<c0,c1,...,cm>]
    n=<n>
    gen <e_1> <e_2> ... <e_n>

with one gen line per generator row and each element written as its index.
"""

from __future__ import annotations

import itertools
import math
import random
from dataclasses import dataclass

from .capacity import DEFAULT_BUDGET, CapacityError, check_budget
from .field import FieldSpec

MAX_CODE_LENGTH = 16


class CodeFileError(ValueError):
    """Malformed code file; the message carries the offending line number."""


def _rref(spec: FieldSpec, rows, n: int) -> tuple[tuple[int, ...], ...]:
    add, mul = spec.add_table, spec.mul_table
    neg, inv = spec.neg_table, spec.inv_table
    mat = [list(r) for r in rows]
    r = 0
    for c in range(n):
        pivot_row = next((i for i in range(r, len(mat)) if mat[i][c] != 0), None)
        if pivot_row is None:
            continue
        mat[r], mat[pivot_row] = mat[pivot_row], mat[r]
        scale = inv[mat[r][c]]
        mat[r] = [mul[scale][x] for x in mat[r]]
        for i in range(len(mat)):
            if i != r and mat[i][c] != 0:
                f = neg[mat[i][c]]
                row_r = mat[r]
                mat[i] = [add[x][mul[f][y]] for x, y in zip(mat[i], row_r)]
        r += 1
        if r == len(mat):
            break
    return tuple(tuple(row) for row in mat[:r])


class LinearCode:
    """A subspace of F_q^n, canonicalized to rref generators."""

    __slots__ = ("spec", "n", "generators", "k", "_words")

    def __init__(self, spec: FieldSpec, n: int, rows=()):
        if n < 1:
            raise ValueError(f"code length must be positive, got {n}")
        if n > MAX_CODE_LENGTH:
            raise CapacityError(f"code length {n} exceeds the cap {MAX_CODE_LENGTH}")
        for row in rows:
            if len(row) != n:
                raise ValueError(f"generator row of length {len(row)}, expected {n}")
            if any(not (0 <= int(e) < spec.q) for e in row):
                raise ValueError("generator entries must be element indices in [0, q)")
        self.spec = spec
        self.n = n
        self.generators = _rref(spec, [[int(e) for e in row] for row in rows], n)
        self.k = len(self.generators)
        self._words = None

    @property
    def size(self) -> int:
        return self.spec.q**self.k

    def codewords(self, *, budget: int = DEFAULT_BUDGET):
        """All q^k codewords, message vectors taken in index order."""
        check_budget(self.size * max(self.n, 1), budget, "codeword enumeration")
        q = self.spec.q
        add, mul = self.spec.add_table, self.spec.mul_table
        for t in range(self.size):
            word = [0] * self.n
            msg = t
            for row in self.generators:
                c = msg % q
                msg //= q
                if c:
                    word = [add[w][mul[c][g]] for w, g in zip(word, row)]
            yield tuple(word)

    def codeword_list(self, *, budget: int = DEFAULT_BUDGET) -> tuple[tuple[int, ...], ...]:
        if self._words is None:
            self._words = tuple(self.codewords(budget=budget))
        return self._words

    def dual(self) -> LinearCode:
        """Null space of the generators under the standard inner product."""
        spec, n = self.spec, self.n
        mul, neg = spec.mul_table, spec.neg_table
        gens = self.generators
        pivots = []
        col = 0
        for row in gens:
            while row[col] == 0:
                col += 1
            pivots.append(col)
        pivot_set = set(pivots)
        rows = []
        for f in range(n):
            if f in pivot_set:
                continue
            h = [0] * n
            h[f] = 1
            for i, p_col in enumerate(pivots):
                h[p_col] = neg[gens[i][f]]
            rows.append(h)
        return LinearCode(spec, n, rows)

    def __eq__(self, other) -> bool:
        if not isinstance(other, LinearCode):
            return NotImplemented
        return (self.spec, self.n, self.generators) == (other.spec, other.n, other.generators)

    def __hash__(self) -> int:
        return hash((self.spec, self.n, self.generators))

    def __repr__(self) -> str:
        return f"LinearCode(q={self.spec.q}, n={self.n}, k={self.k})"


@dataclass(frozen=True)
class MonomialMatrix:
    """Scale-and-permute map: applying to u gives diag[i] * u[perm[i]]."""

    spec: FieldSpec
    n: int
    perm: tuple[int, ...]
    diag: tuple[int, ...]

    def __post_init__(self):
        if sorted(self.perm) != list(range(self.n)):
            raise ValueError(f"perm {self.perm} is not a permutation of range({self.n})")
        if len(self.diag) != self.n or any(not (1 <= d < self.spec.q) for d in self.diag):
            raise ValueError("diag entries must be nonzero element indices")

    @classmethod
    def identity(cls, spec: FieldSpec, n: int) -> MonomialMatrix:
        return cls(spec, n, tuple(range(n)), (1,) * n)

    def apply(self, word) -> tuple[int, ...]:
        if len(word) != self.n:
            raise ValueError(f"word of length {len(word)}, expected {self.n}")
        mul = self.spec.mul_table
        return tuple(mul[self.diag[i]][word[self.perm[i]]] for i in range(self.n))

    def then(self, other: MonomialMatrix) -> MonomialMatrix:
        """The single matrix whose action is: apply self, then other."""
        if self.spec != other.spec or self.n != other.n:
            raise ValueError("monomial matrices act on different spaces")
        mul = self.spec.mul_table
        perm = tuple(self.perm[other.perm[i]] for i in range(self.n))
        diag = tuple(mul[other.diag[i]][self.diag[other.perm[i]]] for i in range(self.n))
        return MonomialMatrix(self.spec, self.n, perm, diag)

    def inverse(self) -> MonomialMatrix:
        inv_perm = [0] * self.n
        for i, p in enumerate(self.perm):
            inv_perm[p] = i
        inv = self.spec.inv_table
        diag = tuple(inv[self.diag[inv_perm[i]]] for i in range(self.n))
        return MonomialMatrix(self.spec, self.n, tuple(inv_perm), diag)


def apply_monomial(word, M: MonomialMatrix) -> tuple[int, ...]:
    return M.apply(word)


def apply_monomial_code(code: LinearCode, M: MonomialMatrix) -> LinearCode:
    if code.spec != M.spec or code.n != M.n:
        raise ValueError("monomial matrix does not match the code")
    return LinearCode(code.spec, code.n, [M.apply(row) for row in code.generators])


def monomial_group_order(spec: FieldSpec, n: int) -> int:
    return (spec.q - 1) ** n * math.factorial(n)


def monomial_group(spec: FieldSpec, n: int, *, budget: int = DEFAULT_BUDGET):
    """All (q-1)^n * n! monomial matrices, diagonals in index order outer,
    permutations in lexicographic order inner."""
    check_budget(monomial_group_order(spec, n) * n, budget, "monomial group enumeration")
    for diag in itertools.product(range(1, spec.q), repeat=n):
        for perm in itertools.permutations(range(n)):
            yield MonomialMatrix(spec, n, perm, diag)


# -- code file format ---------------------------------------------------------


def parse_code_file(text: str) -> LinearCode:
    spec = None
    n = None
    rows = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        tokens = line.split()
        if spec is None:
            if tokens[0] != "field":
                raise CodeFileError(f"line {lineno}: expected a field line, got {line!r}")
            fields = {}
            for tok in tokens[1:]:
                if "=" not in tok:
                    raise CodeFileError(f"line {lineno}: bad field token {tok!r}")
                key, _, val = tok.partition("=")
                fields[key] = val
            try:
                p = int(fields["p"])
                m = int(fields["m"])
            except (KeyError, ValueError) as exc:
                raise CodeFileError(f"line {lineno}: field line needs integer p= and m=") from exc
            poly = None
            if "poly" in fields:
                try:
                    poly = tuple(int(c) for c in fields["poly"].split(","))
                except ValueError as exc:
                    raise CodeFileError(f"line {lineno}: bad poly= value") from exc
            try:
                spec = FieldSpec(p, m, poly)
            except ValueError as exc:
                raise CodeFileError(f"line {lineno}: {exc}") from exc
        elif n is None:
            if not line.startswith("n="):
                raise CodeFileError(f"line {lineno}: expected n=<length>, got {line!r}")
            try:
                n = int(line[2:])
            except ValueError as exc:
                raise CodeFileError(f"line {lineno}: bad length {line[2:]!r}") from exc
            if n < 1:
                raise CodeFileError(f"line {lineno}: length must be positive")
        else:
            if tokens[0] != "gen":
                raise CodeFileError(f"line {lineno}: expected a gen line, got {line!r}")
            try:
                row = [int(t) for t in tokens[1:]]
            except ValueError as exc:
                raise CodeFileError(f"line {lineno}: gen entries must be integers") from exc
            if len(row) != n:
                raise CodeFileError(f"line {lineno}: expected {n} entries, got {len(row)}")
            if any(not (0 <= e < spec.q) for e in row):
                raise CodeFileError(f"line {lineno}: entries must be element indices in [0, {spec.q})")
            rows.append(row)
    if spec is None:
        raise CodeFileError("line 1: missing field line")
    if n is None:
        raise CodeFileError("line 1: missing n= line")
    return LinearCode(spec, n, rows)


def format_code_file(code: LinearCode) -> str:
    spec = code.spec
    if spec.m == 1:
        head = f"field p={spec.p} m=1"
    else:
        poly = ",".join(str(c) for c in spec.defining_poly)
        head = f"field p={spec.p} m={spec.m} poly={poly}"
    lines = [head, f"n={code.n}"]
    for row in code.generators:
        lines.append("gen " + " ".join(str(e) for e in row))
    return "\n".join(lines) + "\n"


# -- code collections ----------------------------------------------------------


def all_codes(spec: FieldSpec, n: int):
    """Every subspace of F_q^n exactly once, via its rref generator matrix.

    Deterministic order: dimension ascending, pivot columns lexicographic,
    free entries in index order.
    """
    q = spec.q
    yield LinearCode(spec, n, [])
    for k in range(1, n + 1):
        for pivots in itertools.combinations(range(n), k):
            pivot_set = set(pivots)
            free = [
                (r, c)
                for r in range(k)
                for c in range(pivots[r] + 1, n)
                if c not in pivot_set
            ]
            for values in itertools.product(range(q), repeat=len(free)):
                rows = [[0] * n for _ in range(k)]
                for r, c in zip(range(k), pivots):
                    rows[r][c] = 1
                for (r, c), v in zip(free, values):
                    rows[r][c] = v
                yield LinearCode(spec, n, rows)


def random_code(spec: FieldSpec, n: int, k: int, seed: int) -> LinearCode:
    """Seeded random code of dimension exactly k (rows redrawn if singular)."""
    if not (0 <= k <= n):
        raise ValueError(f"need 0 <= k <= n, got k={k}, n={n}")
    rng = random.Random(seed)
    if k == 0:
        return LinearCode(spec, n, [])
    for _ in range(10_000):
        rows = [[rng.randrange(spec.q) for _ in range(n)] for _ in range(k)]
        code = LinearCode(spec, n, rows)
        if code.k == k:
            return code
    raise RuntimeError("failed to draw a full-rank matrix")
