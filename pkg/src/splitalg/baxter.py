"""Modified Baxter operators and their coalgebra duals.

An operator B on an algebra is a *t-Baxter operator* when

    B(x) B(y) = B( x B(y) + B(x) y + t x y )        for all x, y.

The dual notion on a coalgebra (a *t-coBaxter operator*) transposes every
map.  The canonical finite-dimensional examples live on upper-triangular
matrices: collapsing a matrix to the diagonal of its row sums (or column
sums), scaled by t, is a (-t)-Baxter operator; its transpose is a
(-t)-coBaxter operator on the triangular matrix coalgebra.
"""

from __future__ import annotations

from fractions import Fraction

from .algebra_core import (
    CoalgebraData,
    FiniteAlgebra,
    triangular_matrix_algebra,
    triangular_pairs,
)
from .exactlin import (
    ZERO,
    LinearOperator,
    Matrix,
    Scalar,
    basis_vector,
    rat,
    vec_add,
    vec_scale,
)
from .report import Report, Witness


def check_baxter(algebra: FiniteAlgebra, op: LinearOperator, t: Scalar) -> Report:
    """Verify the t-Baxter identity on all basis pairs."""
    t = rat(t)
    if op.dim != algebra.dim:
        raise ValueError("operator/algebra dimension mismatch")
    n = algebra.dim
    images = [op.column(j) for j in range(n)]
    report = Report(title=f"{t}-Baxter identity", passed=True)
    for i in range(n):
        e_i = basis_vector(n, i)
        for j in range(n):
            e_j = basis_vector(n, j)
            lhs = algebra.multiply(images[i], images[j])
            inner = vec_add(
                algebra.multiply(e_i, images[j]),
                algebra.multiply(images[i], e_j),
                vec_scale(t, algebra.multiply(e_i, e_j)),
            )
            rhs = op.apply(inner)
            report.checks_run += 1
            if lhs != rhs:
                report.add_failure(Witness("baxter", (i, j), lhs, rhs))
                return report
    return report


def check_cobaxter(delta: CoalgebraData, op: LinearOperator, t: Scalar) -> Report:
    """Verify the transposed identity on a coalgebra:

    (P (x) P) delta = t delta P + (id (x) P) delta P + (P (x) id) delta P.
    """
    t = rat(t)
    if op.dim != delta.dim:
        raise ValueError("operator/coalgebra dimension mismatch")
    n = delta.dim
    images = [op.column(j) for j in range(n)]
    report = Report(title=f"{t}-coBaxter identity", passed=True)
    for i in range(n):
        lhs: dict[tuple[int, int], Fraction] = {}
        for j, k, c in delta.rows[i]:
            for a, ca in enumerate(images[j]):
                if ca == 0:
                    continue
                for b, cb in enumerate(images[k]):
                    if cb == 0:
                        continue
                    key = (a, b)
                    lhs[key] = lhs.get(key, ZERO) + c * ca * cb
        # coproduct of the image P(e_i)
        d_of_image: dict[tuple[int, int], Fraction] = {}
        for a, ca in enumerate(images[i]):
            if ca == 0:
                continue
            for j, k, c in delta.rows[a]:
                key = (j, k)
                d_of_image[key] = d_of_image.get(key, ZERO) + ca * c
        rhs: dict[tuple[int, int], Fraction] = {}
        for (j, k), c in d_of_image.items():
            if t != 0:
                rhs[(j, k)] = rhs.get((j, k), ZERO) + t * c
            for b, cb in enumerate(images[k]):  # (id (x) P)
                if cb != 0:
                    rhs[(j, b)] = rhs.get((j, b), ZERO) + c * cb
            for a, ca in enumerate(images[j]):  # (P (x) id)
                if ca != 0:
                    rhs[(a, k)] = rhs.get((a, k), ZERO) + c * ca
        report.checks_run += 1
        bad = sorted(
            key
            for key in lhs.keys() | rhs.keys()
            if lhs.get(key, ZERO) != rhs.get(key, ZERO)
        )
        if bad:
            key = bad[0]
            report.add_failure(
                Witness(
                    "cobaxter", (i,) + key, lhs.get(key, ZERO), rhs.get(key, ZERO)
                )
            )
            return report
    return report


def transpose_operator(op: LinearOperator) -> LinearOperator:
    """The dual operator (matrix transpose)."""
    return LinearOperator(op.matrix.transpose())


def commute(a: LinearOperator, b: LinearOperator) -> bool:
    return a.compose(b) == b.compose(a)


# ---------------------------------------------------------------------------
# triangular-matrix examples
# ---------------------------------------------------------------------------


def triangular_row_operator(n: int, t: Scalar) -> LinearOperator:
    """Collapse an upper-triangular matrix to t * (diagonal of row sums).

    On the basis E_ij this sends E_ij to t * E_ii.  Together with
    :func:`triangular_matrix_algebra` it satisfies the (-t)-Baxter identity.
    """
    t = rat(t)
    pairs = triangular_pairs(n)
    index = {pair: a for a, pair in enumerate(pairs)}
    dim = len(pairs)
    grid = [[ZERO] * dim for _ in range(dim)]
    for (i, j), a in index.items():
        grid[index[(i, i)]][a] += t
    return LinearOperator(Matrix(grid))


def triangular_column_operator(n: int, t: Scalar) -> LinearOperator:
    """Collapse an upper-triangular matrix to t * (diagonal of column sums)."""
    t = rat(t)
    pairs = triangular_pairs(n)
    index = {pair: a for a, pair in enumerate(pairs)}
    dim = len(pairs)
    grid = [[ZERO] * dim for _ in range(dim)]
    for (i, j), a in index.items():
        grid[index[(j, j)]][a] += t
    return LinearOperator(Matrix(grid))


def triangular_row_coproduct_operator(n: int, t: Scalar) -> LinearOperator:
    """Transpose of the row operator; a (-t)-coBaxter operator on the
    triangular matrix coalgebra (diagonal basis vectors fan out over their row)."""
    return transpose_operator(triangular_row_operator(n, t))


def triangular_baxter_example(n: int, t: Scalar) -> tuple[
    FiniteAlgebra, LinearOperator, LinearOperator, Fraction
]:
    """(algebra, row operator, column operator, Baxter parameter -t)."""
    t = rat(t)
    return (
        triangular_matrix_algebra(n),
        triangular_row_operator(n, t),
        triangular_column_operator(n, t),
        -t,
    )
