"""Exact rational linear algebra: vectors, matrices, structure-constant tensors.

Everything is built on ``fractions.Fraction`` so all checks in this package
are exact — a failed identity is a real counterexample, never roundoff.

The two workhorses are:

* :func:`rank` — fraction-free integer elimination (Bareiss), used for the
  degree-3 dimension counts of quadratic presentations;
* :class:`Tensor3` — structure constants of a bilinear operation
  (``z = op(x, y)`` has coefficients ``z_k = sum x_i y_j c[i][j][k]``) with
  sparse nested-composition helpers, used by every axiom checker.
"""

from __future__ import annotations

import math
from fractions import Fraction
from typing import Iterable, Sequence, Union

Scalar = Union[int, str, Fraction]

ZERO = Fraction(0)
ONE = Fraction(1)


def rat(value: Scalar) -> Fraction:
    """Coerce an int, 'p/q' string, or Fraction to an exact rational."""
    if isinstance(value, Fraction):
        return value
    if isinstance(value, (int, str)):
        return Fraction(value)
    raise TypeError(f"cannot interpret {value!r} as an exact rational")


def rat_str(value: Fraction) -> str:
    """Canonical 'p' / 'p/q' serialization."""
    return str(Fraction(value))


# ---------------------------------------------------------------------------
# vectors (plain tuples of Fraction)
# ---------------------------------------------------------------------------


def zero_vector(dim: int) -> tuple[Fraction, ...]:
    return (ZERO,) * dim


def basis_vector(dim: int, index: int) -> tuple[Fraction, ...]:
    assert 0 <= index < dim
    return tuple(ONE if i == index else ZERO for i in range(dim))


def vec_add(*vectors: Sequence[Fraction]) -> tuple[Fraction, ...]:
    dims = {len(v) for v in vectors}
    assert len(dims) == 1, "vector dimension mismatch"
    return tuple(sum(col) for col in zip(*vectors))


def vec_scale(c: Fraction, vector: Sequence[Fraction]) -> tuple[Fraction, ...]:
    return tuple(c * v for v in vector)


def vec_is_zero(vector: Sequence[Fraction]) -> bool:
    return all(v == 0 for v in vector)


# ---------------------------------------------------------------------------
# matrices
# ---------------------------------------------------------------------------


class Matrix:
    """Immutable exact matrix; rows of Fractions."""

    __slots__ = ("rows", "cols", "entries")

    def __init__(self, entries: Iterable[Iterable[Scalar]]):
        grid = tuple(tuple(rat(v) for v in row) for row in entries)
        if grid and any(len(row) != len(grid[0]) for row in grid):
            raise ValueError("ragged matrix rows")
        self.entries: tuple[tuple[Fraction, ...], ...] = grid
        self.rows = len(grid)
        self.cols = len(grid[0]) if grid else 0

    # -- constructors -------------------------------------------------------

    @staticmethod
    def zero(rows: int, cols: int) -> "Matrix":
        return Matrix([[0] * cols for _ in range(rows)])

    @staticmethod
    def identity(n: int) -> "Matrix":
        return Matrix([[1 if i == j else 0 for j in range(n)] for i in range(n)])

    @staticmethod
    def from_function(rows: int, cols: int, f) -> "Matrix":
        return Matrix([[f(i, j) for j in range(cols)] for i in range(rows)])

    # -- algebra ------------------------------------------------------------

    def apply(self, vector: Sequence[Fraction]) -> tuple[Fraction, ...]:
        """Matrix-vector product (columns index the input basis)."""
        assert len(vector) == self.cols, "dimension mismatch"
        return tuple(
            sum((row[j] * vector[j] for j in range(self.cols)), ZERO)
            for row in self.entries
        )

    def matmul(self, other: "Matrix") -> "Matrix":
        if self.cols != other.rows:
            raise ValueError("matrix product dimension mismatch")
        cols_of_other = list(zip(*other.entries)) if other.entries else []
        return Matrix(
            [
                [sum((a * b for a, b in zip(row, col)), ZERO) for col in cols_of_other]
                for row in self.entries
            ]
        )

    def add(self, other: "Matrix") -> "Matrix":
        assert (self.rows, self.cols) == (other.rows, other.cols)
        return Matrix(
            [
                [a + b for a, b in zip(r1, r2)]
                for r1, r2 in zip(self.entries, other.entries)
            ]
        )

    def scale(self, c: Scalar) -> "Matrix":
        c = rat(c)
        return Matrix([[c * v for v in row] for row in self.entries])

    def transpose(self) -> "Matrix":
        return Matrix(list(zip(*self.entries)) if self.entries else [])

    def is_zero(self) -> bool:
        return all(v == 0 for row in self.entries for v in row)

    def __eq__(self, other: object) -> bool:
        return isinstance(other, Matrix) and self.entries == other.entries

    def __hash__(self) -> int:
        return hash(self.entries)

    def __repr__(self) -> str:
        return f"Matrix({[list(map(str, row)) for row in self.entries]})"


def rank(matrix: Union[Matrix, Sequence[Sequence[Scalar]]]) -> int:
    """Exact rank over the rationals via fraction-free elimination."""
    entries = matrix.entries if isinstance(matrix, Matrix) else [
        [rat(v) for v in row] for row in matrix
    ]
    int_rows = []
    for row in entries:
        scale = math.lcm(*(v.denominator for v in row)) if row else 1
        int_row = [int(v * scale) for v in row]
        if any(int_row):
            int_rows.append(int_row)
    return rank_int_rows(int_rows)


def rank_int_rows(rows: Sequence[Sequence[int]]) -> int:
    """Bareiss fraction-free elimination over the integers.

    Full pivoting on a minimal-magnitude nonzero entry keeps the intermediate
    integers small; every division below is exact by the Bareiss identity.
    """
    work = [list(row) for row in rows if any(row)]
    if not work:
        return 0
    ncols = len(work[0])
    col_order = list(range(ncols))
    prev_pivot = 1
    step = 0
    while step < len(work) and step < ncols:
        best = None
        for r in range(step, len(work)):
            for c in range(step, ncols):
                v = work[r][col_order[c]]
                if v != 0 and (best is None or abs(v) < abs(best[2])):
                    best = (r, c, v)
        if best is None:
            break
        r, c, pivot = best
        work[step], work[r] = work[r], work[step]
        col_order[step], col_order[c] = col_order[c], col_order[step]
        pivot_row = work[step]
        cols_right = [col_order[c2] for c2 in range(step + 1, ncols)]
        for r2 in range(step + 1, len(work)):
            row = work[r2]
            lead = row[col_order[step]]
            if lead == 0 and pivot == prev_pivot:
                continue
            for c2 in cols_right:
                row[c2] = (pivot * row[c2] - lead * pivot_row[c2]) // prev_pivot
            row[col_order[step]] = 0
        prev_pivot = pivot
        step += 1
    return step


class LinearOperator:
    """A linear map given by its matrix; columns hold the images of basis vectors."""

    __slots__ = ("matrix",)

    def __init__(self, matrix: Union[Matrix, Sequence[Sequence[Scalar]]]):
        self.matrix = matrix if isinstance(matrix, Matrix) else Matrix(matrix)
        if self.matrix.rows != self.matrix.cols:
            raise ValueError("operators on a space must be square")

    @property
    def dim(self) -> int:
        return self.matrix.rows

    @staticmethod
    def identity(dim: int) -> "LinearOperator":
        return LinearOperator(Matrix.identity(dim))

    def apply(self, vector: Sequence[Fraction]) -> tuple[Fraction, ...]:
        return self.matrix.apply(vector)

    def column(self, j: int) -> tuple[Fraction, ...]:
        """Image of the j-th basis vector."""
        return tuple(self.matrix.entries[i][j] for i in range(self.dim))

    def compose(self, other: "LinearOperator") -> "LinearOperator":
        """self after other."""
        return LinearOperator(self.matrix.matmul(other.matrix))

    def add(self, other: "LinearOperator") -> "LinearOperator":
        return LinearOperator(self.matrix.add(other.matrix))

    def scale(self, c: Scalar) -> "LinearOperator":
        return LinearOperator(self.matrix.scale(c))

    def __eq__(self, other: object) -> bool:
        return isinstance(other, LinearOperator) and self.matrix == other.matrix

    def __hash__(self) -> int:
        return hash(self.matrix)

    def __repr__(self) -> str:
        return f"LinearOperator({self.matrix!r})"


# ---------------------------------------------------------------------------
# structure-constant tensors
# ---------------------------------------------------------------------------


class Tensor3:
    """Structure constants of one bilinear operation on an n-dim space.

    ``entries[i][j][k]`` is the e_k coefficient of op(e_i, e_j).  Instances
    are treated as immutable; sparse index groupings are cached lazily for
    the nested-composition helpers below.
    """

    __slots__ = ("dim", "entries", "_nonzeros", "_by_first", "_by_second")

    def __init__(self, entries: Sequence[Sequence[Sequence[Scalar]]]):
        dim = len(entries)
        cube = tuple(
            tuple(tuple(rat(v) for v in row) for row in plane) for plane in entries
        )
        if any(len(p) != dim for p in cube) or any(
            len(r) != dim for p in cube for r in p
        ):
            raise ValueError("structure tensor must be a cube")
        self.dim = dim
        self.entries = cube
        self._nonzeros: list[tuple[int, int, int, Fraction]] | None = None
        self._by_first: dict[int, list[tuple[int, int, Fraction]]] | None = None
        self._by_second: dict[int, list[tuple[int, int, Fraction]]] | None = None

    # -- constructors -------------------------------------------------------

    @staticmethod
    def zero(dim: int) -> "Tensor3":
        return Tensor3([[[0] * dim for _ in range(dim)] for _ in range(dim)])

    @staticmethod
    def from_sparse(
        dim: int, items: Iterable[tuple[int, int, int, Scalar]]
    ) -> "Tensor3":
        cube = [[[ZERO] * dim for _ in range(dim)] for _ in range(dim)]
        for i, j, k, c in items:
            cube[i][j][k] += rat(c)
        return Tensor3(cube)

    @staticmethod
    def from_function(dim: int, f) -> "Tensor3":
        """f(i, j) returns the value vector of op(e_i, e_j)."""
        return Tensor3(
            [[list(f(i, j)) for j in range(dim)] for i in range(dim)]
        )

    # -- sparse views --------------------------------------------------------

    def nonzeros(self) -> list[tuple[int, int, int, Fraction]]:
        if self._nonzeros is None:
            self._nonzeros = [
                (i, j, k, c)
                for i, plane in enumerate(self.entries)
                for j, row in enumerate(plane)
                for k, c in enumerate(row)
                if c != 0
            ]
        return self._nonzeros

    def by_first(self) -> dict[int, list[tuple[int, int, Fraction]]]:
        """a -> [(j, k, c)] with op(e_a, e_j) having coefficient c on e_k."""
        if self._by_first is None:
            groups: dict[int, list[tuple[int, int, Fraction]]] = {}
            for i, j, k, c in self.nonzeros():
                groups.setdefault(i, []).append((j, k, c))
            self._by_first = groups
        return self._by_first

    def by_second(self) -> dict[int, list[tuple[int, int, Fraction]]]:
        """a -> [(i, k, c)] with op(e_i, e_a) having coefficient c on e_k."""
        if self._by_second is None:
            groups: dict[int, list[tuple[int, int, Fraction]]] = {}
            for i, j, k, c in self.nonzeros():
                groups.setdefault(j, []).append((i, k, c))
            self._by_second = groups
        return self._by_second

    # -- algebra -------------------------------------------------------------

    def apply(
        self, x: Sequence[Fraction], y: Sequence[Fraction]
    ) -> tuple[Fraction, ...]:
        """Evaluate the bilinear operation on two coefficient vectors."""
        assert len(x) == len(y) == self.dim, "dimension mismatch"
        out = [ZERO] * self.dim
        by_first = self.by_first()
        for i, xi in enumerate(x):
            if xi == 0 or i not in by_first:
                continue
            for j, k, c in by_first[i]:
                yj = y[j]
                if yj != 0:
                    out[k] += xi * yj * c
        return tuple(out)

    def add(self, other: "Tensor3") -> "Tensor3":
        return combine(self.dim, [(ONE, self), (ONE, other)])

    def sub(self, other: "Tensor3") -> "Tensor3":
        return combine(self.dim, [(ONE, self), (-ONE, other)])

    def scale(self, c: Scalar) -> "Tensor3":
        return combine(self.dim, [(rat(c), self)])

    def swap_args(self) -> "Tensor3":
        """The opposite operation: op'(x, y) = op(y, x)."""
        return Tensor3(
            [
                [self.entries[j][i] for j in range(self.dim)]
                for i in range(self.dim)
            ]
        )

    def is_zero(self) -> bool:
        return not self.nonzeros()

    def __eq__(self, other: object) -> bool:
        return isinstance(other, Tensor3) and self.entries == other.entries

    def __hash__(self) -> int:
        return hash(self.entries)

    def __repr__(self) -> str:
        return f"Tensor3(dim={self.dim}, nonzeros={len(self.nonzeros())})"


def combine(dim: int, terms: Iterable[tuple[Scalar, Tensor3]]) -> Tensor3:
    """Exact linear combination of structure tensors."""
    cube = [[[ZERO] * dim for _ in range(dim)] for _ in range(dim)]
    for coeff, tensor in terms:
        coeff = rat(coeff)
        if coeff == 0:
            continue
        assert tensor.dim == dim, "dimension mismatch in combination"
        for i, j, k, c in tensor.nonzeros():
            cube[i][j][k] += coeff * c
    return Tensor3(cube)


# ---------------------------------------------------------------------------
# nested composition (the engine behind every quadratic-identity check)
# ---------------------------------------------------------------------------
#
# A quadratic identity compares sums of left-nested terms  outer(inner(x,y), z)
# against sums of right-nested terms  outer(x, inner(y, z)).  We compose the
# sparse tensors once per term and compare the resulting coefficient maps,
# instead of looping over all basis triples times all relations.

CompositionMap = dict[tuple[int, int, int], dict[int, Fraction]]


def compose_left(inner: Tensor3, outer: Tensor3) -> CompositionMap:
    """Coefficients of outer(inner(x, y), z) on basis triples (x, y, z)."""
    result: CompositionMap = {}
    outer_rows = outer.by_first()
    for i, j, a, c in inner.nonzeros():
        rows = outer_rows.get(a)
        if not rows:
            continue
        for k, m, c2 in rows:
            bucket = result.setdefault((i, j, k), {})
            bucket[m] = bucket.get(m, ZERO) + c * c2
    return result


def compose_right(inner: Tensor3, outer: Tensor3) -> CompositionMap:
    """Coefficients of outer(x, inner(y, z)) on basis triples (x, y, z)."""
    result: CompositionMap = {}
    outer_cols = outer.by_second()
    for j, k, a, c in inner.nonzeros():
        cols = outer_cols.get(a)
        if not cols:
            continue
        for i, m, c2 in cols:
            bucket = result.setdefault((i, j, k), {})
            bucket[m] = bucket.get(m, ZERO) + c * c2
    return result


def accumulate(
    total: CompositionMap, part: CompositionMap, coeff: Fraction
) -> None:
    """total += coeff * part, in place."""
    if coeff == 0:
        return
    for key, bucket in part.items():
        out = total.setdefault(key, {})
        for m, c in bucket.items():
            out[m] = out.get(m, ZERO) + coeff * c


def first_discrepancy(
    lhs: CompositionMap, rhs: CompositionMap
) -> tuple[tuple[int, int, int], dict[int, Fraction], dict[int, Fraction]] | None:
    """Smallest basis triple where two composition maps disagree, if any."""
    worst = None
    for key in lhs.keys() | rhs.keys():
        lvec = {m: c for m, c in lhs.get(key, {}).items() if c != 0}
        rvec = {m: c for m, c in rhs.get(key, {}).items() if c != 0}
        if lvec != rvec and (worst is None or key < worst):
            worst = key
    if worst is None:
        return None
    lvec = {m: c for m, c in lhs.get(worst, {}).items() if c != 0}
    rvec = {m: c for m, c in rhs.get(worst, {}).items() if c != 0}
    return worst, lvec, rvec
