"""Finite-dimensional associative algebras and coalgebras over the rationals.

An algebra is a structure-constant tensor plus an optional unit vector and
optional basis labels.  A coalgebra is the transposed data: a sparse list of
tensor legs for each basis vector.  Both come with exact axiom checkers that
return :class:`~splitalg.report.Report` objects, and with the two matrix
families used throughout the package: full matrix algebras (endomorphism
spaces) and upper-triangular matrix algebras with their dual coalgebra.
"""

from __future__ import annotations

import dataclasses
import itertools
from fractions import Fraction
from typing import Iterable, Sequence

from .exactlin import (
    ONE,
    ZERO,
    Scalar,
    Tensor3,
    basis_vector,
    rat,
    vec_is_zero,
)
from .relations import P_ONE, AxiomSystem, Relation, Term, check_system
from .report import Report, Witness

ASSOCIATIVITY = AxiomSystem(
    name="assoc",
    generators=("mul",),
    composites={},
    relations=(
        Relation("assoc", (Term(P_ONE, "mul", "mul"),), (Term(P_ONE, "mul", "mul"),)),
    ),
)


@dataclasses.dataclass(frozen=True)
class FiniteAlgebra:
    """A bilinear product on a finite-dimensional space, maybe with a unit."""

    mult: Tensor3
    unit: tuple[Fraction, ...] | None = None
    labels: tuple[str, ...] | None = None

    def __post_init__(self):
        if self.unit is not None and len(self.unit) != self.dim:
            raise ValueError("unit vector dimension mismatch")
        if self.labels is not None and len(self.labels) != self.dim:
            raise ValueError("labels length mismatch")

    @property
    def dim(self) -> int:
        return self.mult.dim

    def multiply(self, x: Sequence[Fraction], y: Sequence[Fraction]) -> tuple[Fraction, ...]:
        return self.mult.apply(x, y)

    def label(self, i: int) -> str:
        return self.labels[i] if self.labels else f"e{i}"

    def opposite(self) -> "FiniteAlgebra":
        return FiniteAlgebra(self.mult.swap_args(), self.unit, self.labels)


def check_algebra(algebra: FiniteAlgebra, title: str = "algebra axioms") -> Report:
    """Associativity, plus two-sided unit axioms when a unit is present."""
    report = check_system(ASSOCIATIVITY, {"mul": algebra.mult}, ZERO, title)
    if algebra.unit is not None:
        for i in range(algebra.dim):
            e = basis_vector(algebra.dim, i)
            report.checks_run += 2
            left = algebra.multiply(algebra.unit, e)
            if left != e:
                report.add_failure(Witness("unit:left", (i,), left, e))
            right = algebra.multiply(e, algebra.unit)
            if right != e:
                report.add_failure(Witness("unit:right", (i,), right, e))
    return report


# ---------------------------------------------------------------------------
# coalgebras
# ---------------------------------------------------------------------------

SparseLegs = tuple[tuple[int, int, Fraction], ...]


@dataclasses.dataclass(frozen=True)
class CoalgebraData:
    """A coproduct, stored row-sparsely: rows[i] lists (j, k, c) legs.

    Row i says the coproduct of e_i contains c * e_j (x) e_k.
    """

    dim: int
    rows: tuple[SparseLegs, ...]

    def __post_init__(self):
        if len(self.rows) != self.dim:
            raise ValueError("row count must equal dimension")
        for row in self.rows:
            for j, k, _ in row:
                if not (0 <= j < self.dim and 0 <= k < self.dim):
                    raise ValueError("coproduct leg index out of range")

    @staticmethod
    def from_items(dim: int, items: Iterable[tuple[int, int, int, Scalar]]) -> "CoalgebraData":
        rows: list[dict[tuple[int, int], Fraction]] = [dict() for _ in range(dim)]
        for i, j, k, c in items:
            key = (j, k)
            rows[i][key] = rows[i].get(key, ZERO) + rat(c)
        return CoalgebraData(
            dim,
            tuple(
                tuple((j, k, c) for (j, k), c in sorted(row.items()) if c != 0)
                for row in rows
            ),
        )

    def items(self) -> Iterable[tuple[int, int, int, Fraction]]:
        for i, row in enumerate(self.rows):
            for j, k, c in row:
                yield i, j, k, c

    def scale(self, c: Scalar) -> "CoalgebraData":
        c = rat(c)
        return CoalgebraData.from_items(
            self.dim, ((i, j, k, c * v) for i, j, k, v in self.items())
        )

    def add(self, other: "CoalgebraData") -> "CoalgebraData":
        if other.dim != self.dim:
            raise ValueError("coalgebra dimension mismatch")
        return CoalgebraData.from_items(
            self.dim, itertools.chain(self.items(), other.items())
        )

    def dual_algebra(self, labels: tuple[str, ...] | None = None) -> FiniteAlgebra:
        """The convolution product on the dual space: tensor legs transposed."""
        mult = Tensor3.from_sparse(
            self.dim, ((j, k, i, c) for i, j, k, c in self.items())
        )
        return FiniteAlgebra(mult, labels=labels)


def check_coassociative(delta: CoalgebraData, title: str = "coassociativity") -> Report:
    """(delta (x) id) delta == (id (x) delta) delta, exactly."""
    report = Report(title=title, passed=True)
    for i in range(delta.dim):
        left: dict[tuple[int, int, int], Fraction] = {}
        right: dict[tuple[int, int, int], Fraction] = {}
        for j, k, c in delta.rows[i]:
            for a, b, c2 in delta.rows[j]:
                key = (a, b, k)
                left[key] = left.get(key, ZERO) + c * c2
            for a, b, c2 in delta.rows[k]:
                key = (j, a, b)
                right[key] = right.get(key, ZERO) + c * c2
        report.checks_run += 1
        diff_keys = sorted(
            key
            for key in left.keys() | right.keys()
            if left.get(key, ZERO) != right.get(key, ZERO)
        )
        if diff_keys:
            key = diff_keys[0]
            report.add_failure(
                Witness(
                    "coassoc",
                    (i,) + key,
                    left.get(key, ZERO),
                    right.get(key, ZERO),
                )
            )
    return report


# ---------------------------------------------------------------------------
# matrix families
# ---------------------------------------------------------------------------


def full_matrix_algebra(n: int) -> FiniteAlgebra:
    """All n-by-n matrix units under composition; unit is the identity."""
    if n < 1:
        raise ValueError("need n >= 1")
    index = {(p, q): p * n + q for p in range(n) for q in range(n)}
    items = []
    for (p, q), a in index.items():
        for (r, s), b in index.items():
            if q == r:
                items.append((a, b, index[(p, s)], 1))
    unit = [ZERO] * (n * n)
    for p in range(n):
        unit[index[(p, p)]] = ONE
    labels = tuple(f"E[{p},{q}]" for p in range(n) for q in range(n))
    return FiniteAlgebra(
        Tensor3.from_sparse(n * n, items), unit=tuple(unit), labels=labels
    )


def triangular_pairs(n: int) -> list[tuple[int, int]]:
    """Index pairs (i, j) with i <= j, in lexicographic order."""
    return [(i, j) for i in range(n) for j in range(i, n)]


def triangular_matrix_algebra(n: int) -> FiniteAlgebra:
    """Upper-triangular n-by-n matrix units E_ij (i <= j) under composition."""
    pairs = triangular_pairs(n)
    index = {pair: a for a, pair in enumerate(pairs)}
    items = []
    for (i, j), a in index.items():
        for (k, l), b in index.items():
            if j == k:
                items.append((a, b, index[(i, l)], 1))
    unit = [ZERO] * len(pairs)
    for i in range(n):
        unit[index[(i, i)]] = ONE
    labels = tuple(f"E[{i},{j}]" for i, j in pairs)
    return FiniteAlgebra(
        Tensor3.from_sparse(len(pairs), items), unit=tuple(unit), labels=labels
    )


def triangular_matrix_coalgebra(n: int) -> CoalgebraData:
    """Basis X_ij (i <= j); the coproduct splits X_ij over intermediate k.

    Its dual algebra is exactly :func:`triangular_matrix_algebra`.
    """
    pairs = triangular_pairs(n)
    index = {pair: a for a, pair in enumerate(pairs)}
    items = []
    for (i, j), a in index.items():
        for k in range(i, j + 1):
            items.append((a, index[(i, k)], index[(k, j)], 1))
    return CoalgebraData.from_items(len(pairs), items)
