"""
Square matrices over F_q and the exact linear algebra the lemma checks need.

Matrices are immutable and hashable; two matrices over the same field are
equal iff their entries are, so group closures deduplicate exactly.
"""

import itertools
import logging
from typing import Iterator, List, Optional, Sequence, Tuple

from ..exceptions import ParameterError
from . import poly
from .field import FiniteField
from .poly import Poly

logger = logging.getLogger(__name__)

Vector = Tuple[int, ...]


class SquareMatrix:
    """An n x n matrix over F_q stored as a flat row-major tuple."""

    __slots__ = ("field", "n", "entries", "_hash")

    MIN_DIM = 1
    MAX_DIM = 6

    def __init__(self, field: FiniteField, n: int, entries: Sequence[int]):
        if not self.MIN_DIM <= n <= self.MAX_DIM:
            raise ParameterError(
                f"matrix dimension must lie in [{self.MIN_DIM}, {self.MAX_DIM}]"
            )
        if len(entries) != n * n:
            raise ParameterError(f"expected {n * n} entries, got {len(entries)}")
        self.field = field
        self.n = n
        self.entries: Tuple[int, ...] = tuple(entries)
        self._hash = hash((field.q, n, self.entries))

    @classmethod
    def from_rows(
        cls, field: FiniteField, rows: Sequence[Sequence[int]]
    ) -> "SquareMatrix":
        """
        Build from elements in the FiniteField integer encoding.

        Prime-field entries are reduced mod l. Over an extension field every
        entry must already be an encoded element in [0, q); JSON input goes
        through FiniteField.element_from_json instead.
        """
        n = len(rows)
        if any(len(row) != n for row in rows):
            raise ParameterError("matrix rows must form a square")
        flat = []
        for row in rows:
            for x in row:
                if field.is_prime_field:
                    x %= field.q
                elif not 0 <= x < field.q:
                    raise ParameterError(f"entry {x} is not an element of F_{field.q}")
                flat.append(x)
        return cls(field, n, flat)

    @property
    def rows(self) -> Tuple[Vector, ...]:
        n = self.n
        return tuple(self.entries[i * n : (i + 1) * n] for i in range(n))

    @property
    def columns(self) -> Tuple[Vector, ...]:
        n = self.n
        return tuple(self.entries[j::n] for j in range(n))

    def __getitem__(self, index: Tuple[int, int]) -> int:
        i, j = index
        return self.entries[i * self.n + j]

    def __eq__(self, other: object) -> bool:
        return (
            isinstance(other, SquareMatrix)
            and other.entries == self.entries
            and other.field == self.field
        )

    def __hash__(self) -> int:
        return self._hash

    def __repr__(self) -> str:
        return f"SquareMatrix(F_{self.field.q}, {[list(r) for r in self.rows]})"

    def __lt__(self, other: "SquareMatrix") -> bool:
        return self.entries < other.entries

    def __mul__(self, other: "SquareMatrix") -> "SquareMatrix":
        return mat_mul(self, other)

    def apply(self, vector: Sequence[int]) -> Vector:
        """M v for a column vector v."""
        return tuple(self.field.dot(row, vector) for row in self.rows)

    def scale(self, c: int) -> "SquareMatrix":
        F = self.field
        return SquareMatrix(F, self.n, [F.mul(c, x) for x in self.entries])

    def is_zero(self) -> bool:
        return not any(self.entries)

    def to_json(self) -> List[list]:
        return [[self.field.element_to_json(x) for x in row] for row in self.rows]


def identity(field: FiniteField, n: int) -> SquareMatrix:
    return scalar(field, n, 1)


def scalar(field: FiniteField, n: int, c: int) -> SquareMatrix:
    return diagonal(field, [c] * n)


def zero(field: FiniteField, n: int) -> SquareMatrix:
    return SquareMatrix(field, n, [0] * (n * n))


def diagonal(field: FiniteField, values: Sequence[int]) -> SquareMatrix:
    n = len(values)
    entries = [values[i] if i == j else 0 for i in range(n) for j in range(n)]
    return SquareMatrix(field, n, entries)


def _check_compatible(a: SquareMatrix, b: SquareMatrix) -> None:
    if a.n != b.n or a.field != b.field:
        raise ParameterError("matrices must share dimension and field")


def mat_mul(a: SquareMatrix, b: SquareMatrix) -> SquareMatrix:
    _check_compatible(a, b)
    F, n = a.field, a.n
    x, y = a.entries, b.entries
    if F.is_prime_field:
        l = F.char
        out = [
            sum(x[i * n + k] * y[k * n + j] for k in range(n)) % l
            for i in range(n)
            for j in range(n)
        ]
    else:
        cols = b.columns
        out = [
            F.dot(x[i * n : (i + 1) * n], cols[j]) for i in range(n) for j in range(n)
        ]
    return SquareMatrix(F, n, out)


def mat_add(a: SquareMatrix, b: SquareMatrix) -> SquareMatrix:
    _check_compatible(a, b)
    F = a.field
    return SquareMatrix(F, a.n, [F.add(u, v) for u, v in zip(a.entries, b.entries)])


def mat_sub(a: SquareMatrix, b: SquareMatrix) -> SquareMatrix:
    return mat_add(a, b.scale(a.field.neg(1)))


def mat_pow(m: SquareMatrix, k: int) -> SquareMatrix:
    if k < 0:
        return mat_pow(mat_inverse(m), -k)
    result, base = identity(m.field, m.n), m
    while k:
        if k & 1:
            result = mat_mul(result, base)
        base = mat_mul(base, base)
        k >>= 1
    return result


def _row_reduce(F: FiniteField, rows: List[List[int]], ncols: int) -> List[int]:
    """In-place reduced row echelon form; returns the pivot columns."""
    pivots: List[int] = []
    r = 0
    for c in range(ncols):
        pivot = next((i for i in range(r, len(rows)) if rows[i][c]), None)
        if pivot is None:
            continue
        rows[r], rows[pivot] = rows[pivot], rows[r]
        inv = F.inv(rows[r][c])
        rows[r] = [F.mul(inv, x) for x in rows[r]]
        for i in range(len(rows)):
            if i != r and rows[i][c]:
                factor = rows[i][c]
                rows[i] = [F.sub(x, F.mul(factor, y)) for x, y in zip(rows[i], rows[r])]
        pivots.append(c)
        r += 1
        if r == len(rows):
            break
    return pivots


def rank_of_vectors(F: FiniteField, vectors: Sequence[Sequence[int]]) -> int:
    if not vectors:
        return 0
    rows = [list(v) for v in vectors]
    return len(_row_reduce(F, rows, len(rows[0])))


def rank(m: SquareMatrix) -> int:
    return rank_of_vectors(m.field, m.rows)


def nullspace(
    F: FiniteField, rows: Sequence[Sequence[int]], ncols: int
) -> List[Vector]:
    """
    Basis of {x : A x = 0} for the matrix with the given rows.

    The basis is the standard one attached to the free columns of the
    reduced echelon form, so it is deterministic.
    """
    work = [list(r) for r in rows]
    pivots = _row_reduce(F, work, ncols) if work else []
    free = [c for c in range(ncols) if c not in pivots]
    basis = []
    for f in free:
        x = [0] * ncols
        x[f] = 1
        for r, c in enumerate(pivots):
            x[c] = F.neg(work[r][f])
        basis.append(tuple(x))
    return basis


def det(m: SquareMatrix) -> int:
    """Determinant by Gaussian elimination."""
    F, n = m.field, m.n
    rows = [list(r) for r in m.rows]
    result = 1
    for c in range(n):
        pivot = next((i for i in range(c, n) if rows[i][c]), None)
        if pivot is None:
            return 0
        if pivot != c:
            rows[c], rows[pivot] = rows[pivot], rows[c]
            result = F.neg(result)
        result = F.mul(result, rows[c][c])
        inv = F.inv(rows[c][c])
        for i in range(c + 1, n):
            if rows[i][c]:
                factor = F.mul(rows[i][c], inv)
                rows[i] = [F.sub(x, F.mul(factor, y)) for x, y in zip(rows[i], rows[c])]
    return result


def mat_inverse(m: SquareMatrix) -> SquareMatrix:
    """
    Inverse by Gauss-Jordan elimination.

    Raises:
        ParameterError: If m is singular
    """
    F, n = m.field, m.n
    rows = [
        list(r) + [1 if i == j else 0 for j in range(n)] for i, r in enumerate(m.rows)
    ]
    pivots = _row_reduce(F, rows, n)
    if len(pivots) < n:
        raise ParameterError(f"matrix {m!r} is singular")
    return SquareMatrix(F, n, [x for row in rows for x in row[n:]])


def is_invertible(m: SquareMatrix) -> bool:
    return det(m) != 0


def poly_at_matrix(f: Poly, m: SquareMatrix) -> SquareMatrix:
    """f(M) by Horner's rule; f is a low-to-high coefficient tuple over M's field."""
    result = zero(m.field, m.n)
    for c in reversed(f):
        result = mat_add(mat_mul(result, m), scalar(m.field, m.n, c))
    return result


def _hessenberg(m: SquareMatrix) -> List[List[int]]:
    """Upper Hessenberg form similar to m."""
    F, n = m.field, m.n
    h = [list(r) for r in m.rows]
    for j in range(n - 2):
        pivot = next((i for i in range(j + 1, n) if h[i][j]), None)
        if pivot is None:
            continue
        if pivot != j + 1:
            h[pivot], h[j + 1] = h[j + 1], h[pivot]
            for row in h:
                row[pivot], row[j + 1] = row[j + 1], row[pivot]
        inv = F.inv(h[j + 1][j])
        for k in range(j + 2, n):
            u = F.mul(h[k][j], inv)
            if not u:
                continue
            # row_k -= u row_{j+1}, then col_{j+1} += u col_k
            h[k] = [F.sub(x, F.mul(u, y)) for x, y in zip(h[k], h[j + 1])]
            for row in h:
                row[j + 1] = F.add(row[j + 1], F.mul(u, row[k]))
    return h


def char_poly(m: SquareMatrix) -> Poly:
    """
    det(X I - M) as a monic low-to-high tuple.

    Computed from the Hessenberg form with the standard three-term
    recurrence on leading principal minors.
    """
    F, n = m.field, m.n
    h = _hessenberg(m)
    minors: List[Poly] = [(1,)]
    for k in range(1, n + 1):
        current = poly.mul(F, (F.neg(h[k - 1][k - 1]), 1), minors[k - 1])
        subdiag = 1
        for i in range(1, k):
            subdiag = F.mul(subdiag, h[k - i][k - i - 1])
            if not subdiag:
                break
            coeff = F.mul(h[k - i - 1][k - 1], subdiag)
            if coeff:
                current = poly.sub(F, current, poly.scale(F, minors[k - i - 1], coeff))
        minors.append(current)
    return minors[n]


def _krylov_annihilator(m: SquareMatrix, v: Vector) -> Poly:
    """The monic generator of {f : f(M) v = 0}."""
    F, n = m.field, m.n
    basis: List[Tuple[int, List[int], List[int]]] = []
    raw = v
    for k in range(n + 1):
        current = list(raw)
        combo = [0] * (n + 1)
        combo[k] = 1
        for pivot, vec, vec_combo in basis:
            c = current[pivot]
            if c:
                current = [F.sub(x, F.mul(c, y)) for x, y in zip(current, vec)]
                combo = [F.sub(x, F.mul(c, y)) for x, y in zip(combo, vec_combo)]
        pivot = next((i for i, x in enumerate(current) if x), None)
        if pivot is None:
            return poly.monic(F, poly.trim(combo))
        inv = F.inv(current[pivot])
        basis.append(
            (pivot, [F.mul(inv, x) for x in current], [F.mul(inv, x) for x in combo])
        )
        raw = m.apply(raw)
    raise AssertionError("Krylov sequence longer than the dimension")


def min_poly(m: SquareMatrix) -> Poly:
    """Least common multiple of the annihilators of the standard basis vectors."""
    F, n = m.field, m.n
    result: Poly = (1,)
    for i in range(n):
        e_i = tuple(1 if j == i else 0 for j in range(n))
        result = poly.lcm(F, result, _krylov_annihilator(m, e_i))
        if poly.degree(result) == n:
            break
    return result


def is_regular(m: SquareMatrix) -> bool:
    """Whether the minimal and characteristic polynomials coincide."""
    return poly.degree(min_poly(m)) == m.n


def is_unipotent(m: SquareMatrix) -> bool:
    return char_poly(m) == poly.from_roots(m.field, [1] * m.n)


def krylov_rank(m: SquareMatrix, v: Sequence[int]) -> int:
    vectors = [tuple(v)]
    for _ in range(m.n - 1):
        vectors.append(m.apply(vectors[-1]))
    return rank_of_vectors(m.field, vectors)


def all_vectors(field: FiniteField, n: int) -> Iterator[Vector]:
    return itertools.product(range(field.q), repeat=n)


def has_cyclic_vector(m: SquareMatrix) -> bool:
    """Brute force: some v with v, Mv, ..., M^(n-1) v spanning F^n."""
    return any(any(v) and krylov_rank(m, v) == m.n for v in all_vectors(m.field, m.n))


def find_cyclic_vector(m: SquareMatrix) -> Optional[Vector]:
    for v in all_vectors(m.field, m.n):
        if any(v) and krylov_rank(m, v) == m.n:
            return v
    return None


MAX_GL_ENUMERATION = 3**9


def general_linear_group(field: FiniteField, n: int) -> List[SquareMatrix]:
    """
    Every invertible n x n matrix over F_q, in lexicographic entry order.

    Raises:
        ParameterError: If q^(n^2) exceeds MAX_GL_ENUMERATION
    """
    if field.q ** (n * n) > MAX_GL_ENUMERATION:
        raise ParameterError(f"GL_{n}(F_{field.q}) is too large to enumerate")
    out = []
    for entries in itertools.product(range(field.q), repeat=n * n):
        m = SquareMatrix(field, n, entries)
        if det(m):
            out.append(m)
    logger.debug("enumerated GL_%d(F_%d): %d elements", n, field.q, len(out))
    return out
