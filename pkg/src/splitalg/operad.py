"""Degree-3 dimension counts for binary quadratic presentations.

A presentation with g binary generators has 2 g^2 degree-3 monomials in one
variable ordering: the left-nested ones (x outer_gen( inner_gen(x, y), z ))
and the right-nested ones.  Each quadratic identity is one linear relation
among those monomials, so the degree-3 component has dimension

    dim_3 = 2 g^2 - rank(relation matrix).

The relation matrix is exact (entries are the identity coefficients evaluated
at a concrete family parameter t), and the rank is computed fraction-free.

Monomial ordering (fixed, used by the JSON output too): left-nested monomials
first, at index outer*g + inner; then right-nested at g^2 + outer*g + inner,
with generators in presentation order.
"""

from __future__ import annotations

import dataclasses
from fractions import Fraction

from .exactlin import Matrix, Scalar, rank, rat
from .relations import AxiomSystem, expand_relation


@dataclasses.dataclass(frozen=True)
class Degree3Count:
    system_name: str
    t: Fraction
    generators: int
    relations: int
    monomials: int          # 2 g^2
    rank: int
    dim3: int               # monomials - rank

    def generating_function_prefix(self, signed: bool = False) -> list[Fraction]:
        """First three coefficients of the dimension series, by arity.

        Unsigned: [1, g, dim3]; signed alternating: [-1, g, -dim3].
        """
        one, g, d3 = rat(1), rat(self.generators), rat(self.dim3)
        return [-one, g, -d3] if signed else [one, g, d3]


def relation_matrix(system: AxiomSystem, t: Scalar) -> Matrix:
    """One row per identity: +lhs coefficients on left-nested monomial
    columns, -rhs coefficients on right-nested ones."""
    t = rat(t)
    gens = system.generators
    g = len(gens)
    col = {name: i for i, name in enumerate(gens)}
    rows = []
    for relation in system.relations:
        row = [rat(0)] * (2 * g * g)
        lhs, rhs = expand_relation(system, relation)
        for (outer, inner), poly in lhs.items():
            row[col[outer] * g + col[inner]] += poly.eval(t)
        for (outer, inner), poly in rhs.items():
            row[g * g + col[outer] * g + col[inner]] -= poly.eval(t)
        rows.append(row)
    return Matrix(rows)


def degree3_dimension(system: AxiomSystem, t: Scalar = 0) -> Degree3Count:
    t = rat(t)
    g = len(system.generators)
    matrix = relation_matrix(system, t)
    r = rank(matrix)
    return Degree3Count(
        system_name=system.name,
        t=t,
        generators=g,
        relations=len(system.relations),
        monomials=2 * g * g,
        rank=r,
        dim3=2 * g * g - r,
    )


def builtin_presentations() -> dict[str, AxiomSystem]:
    """Named presentations: the four base splitting families and their
    one-parameter formal deformations (cross-term systems)."""
    from .deformation import cross_term_system
    from .relations import FOUR_OP_SYSTEM, NINE_OP_SYSTEM, THREE_OP_SYSTEM, TWO_OP_SYSTEM

    presets: dict[str, AxiomSystem] = {
        "two_op": TWO_OP_SYSTEM,
        "three_op": THREE_OP_SYSTEM,
        "four_op": FOUR_OP_SYSTEM,
        "nine_op": NINE_OP_SYSTEM,
    }
    presets["deformed_two_three"] = cross_term_system(
        THREE_OP_SYSTEM, nonzero_base=("prec", "succ")
    ).system
    presets["deformed_two_two"] = cross_term_system(
        TWO_OP_SYSTEM, nonzero_base=("prec", "succ")
    ).system
    presets["deformed_three_three"] = cross_term_system(
        THREE_OP_SYSTEM, nonzero_base=("prec", "succ", "circ")
    ).system
    presets["deformed_four_four"] = cross_term_system(
        FOUR_OP_SYSTEM, nonzero_base=("nw", "ne", "sw", "se")
    ).system
    presets["deformed_nine_nine"] = cross_term_system(
        NINE_OP_SYSTEM, nonzero_base=NINE_OP_SYSTEM.generators
    ).system
    return presets
